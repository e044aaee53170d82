//! Surfaces of revolution through the lens of one-dimensional solitons.
//!
//! A surface of revolution is encoded by its Dirac potential U(x) on the
//! conformal parameter of the generating curve; q = 4U is an mKdV field.
//! This crate provides:
//!
//! - [`grid`]: spectral calculus on uniform periodic / truncated-line grids;
//! - [`geometry`]: conformal profiles, spinors, curvatures, closure, and the
//!   Weierstrass-type reconstruction of the surface from spinors;
//! - [`hierarchy`]: the recursion operator, hierarchy flows and their
//!   pseudo-spectral evolution, Miura transform, Kruskal invariants,
//!   monodromy spinors, stationarity fits and zero-curvature diagnostics;
//! - [`transforms`]: axis-centered inversion, the isothermic dual, and
//!   homothety checks.
//!
//! Sweeps (inversion families, experiment batches) run data-parallel under
//! the default `parallel` feature and sequentially without it.

pub mod error;
pub mod geometry;
pub mod grid;
pub mod hierarchy;
pub mod interp;
pub mod parallel;
pub mod transforms;

pub use error::{Error, Result};
pub use geometry::{
    closure_defect, conformal_reparametrize, curvatures, potential_from_profile, preset,
    profile_from_tau, read_profile_csv, spinors_from_profile, weierstrass_reconstruct,
    CurvatureReport, Preset, ProfileCurve, SpinorPair, SurfaceMesh,
};
pub use grid::{ComplexSamples, Domain, RealSamples, Samples};
pub use hierarchy::{
    closed_form_invariants, evolve, invariants, miura, periodic_spinors, stationarity_fit,
    FlowOptions, FlowState, InvariantReport, Potential,
};
pub use transforms::{
    dual_potential, dual_profile, homothety_check, invert_profile, inverted_potential_origin,
    inversion_family, InversionCenter,
};
