//! Built-in profile curves: cylinder, unit sphere, Clifford torus, round tori,
//! and revolved ellipses.

use std::f64::consts::PI;

use super::{conformal_from_uniform, ProfileCurve, CONF_TOL, DECAY_TOL, LINE_HALF_WIDTH};
use crate::error::{Error, Result};
use crate::grid::{Domain, RealSamples, Samples};
use crate::interp::{resample, GridSpec};

/// Built-in surfaces.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Preset {
    /// Radius-1 cylinder over one period: theta = 1, phi = x.
    Cylinder,
    /// Unit sphere on the truncated line: theta = sech x, phi = tanh x.
    Sphere,
    /// Clifford torus: the unit circle centered at (sqrt 2, 0) revolved.
    Clifford,
    /// Unit circle centered at (big_radius, 0) revolved; requires big_radius > 1.
    RoundTorus { big_radius: f64 },
    /// Curve rho = offset + sin t, h = axial * cos t revolved.
    Ellipse { axial: f64, offset: f64 },
}

/// Construct a preset profile on an n-point grid.
pub fn preset(p: Preset, n: usize) -> Result<ProfileCurve> {
    match p {
        Preset::Cylinder => cylinder(n),
        Preset::Sphere => sphere(n),
        Preset::Clifford => clifford(n),
        Preset::RoundTorus { big_radius } => round_torus(big_radius, n),
        Preset::Ellipse { axial, offset } => ellipse(axial, offset, n),
    }
}

fn cylinder(n: usize) -> Result<ProfileCurve> {
    let dom = Domain::Torus { period: 2.0 * PI };
    let theta = Samples::from_fn(dom, n, |_| 1.0)?;
    let phi = Samples::from_fn(dom, n, |x| x)?;
    let phi_x = Samples::from_fn(dom, n, |_| 1.0)?;
    ProfileCurve::new(theta, phi, phi_x, CONF_TOL)
}

fn sphere(n: usize) -> Result<ProfileCurve> {
    let dom = Domain::Line {
        half_width: LINE_HALF_WIDTH,
    };
    let theta = Samples::from_fn(dom, n, |x| 1.0 / x.cosh())?;
    check_decay(&theta, DECAY_TOL)?;
    let phi = Samples::from_fn(dom, n, f64::tanh)?;
    let phi_x = Samples::from_fn(dom, n, |x| 1.0 / x.cosh().powi(2))?;
    ProfileCurve::new(theta, phi, phi_x, CONF_TOL)
}

fn clifford(n: usize) -> Result<ProfileCurve> {
    let r2 = 2f64.sqrt();
    let dom = Domain::Torus { period: 2.0 * PI };
    let theta = Samples::from_fn(dom, n, |x| 1.0 / (r2 - x.sin()))?;
    let phi = Samples::from_fn(dom, n, |x| x.cos() / (x.sin() - r2))?;
    // phi_x = (sqrt2 sin x - 1) / (sqrt2 - sin x)^2
    let phi_x = Samples::from_fn(dom, n, |x| (r2 * x.sin() - 1.0) / (r2 - x.sin()).powi(2))?;
    ProfileCurve::new(theta, phi, phi_x, CONF_TOL)
}

/// Round torus: theta = R - sin f(x), phi = cos f(x) where df/dx = R - sin f.
/// The conformal coordinate comes from x(f) = int df / (R - sin f), evaluated
/// spectrally on a fine f grid and inverted by resampling; the period is
/// 2 pi / sqrt(R^2 - 1).
fn round_torus(big_radius: f64, n: usize) -> Result<ProfileCurve> {
    if !(big_radius > 1.0) {
        return Err(Error::ParameterDomain(format!(
            "round torus requires R > 1, got {big_radius}"
        )));
    }
    let r = big_radius;
    let fdom = Domain::Torus { period: 2.0 * PI };
    let m = (16 * n).next_power_of_two().max(16384);
    let density = Samples::from_fn(fdom, m, |f| 1.0 / (r - f.sin()))?;
    let period = density.integrate();
    let x_of_f = density.cumulative();

    let target = GridSpec {
        n,
        domain: Domain::Torus { period },
    };
    let theta_f = Samples::from_fn(fdom, m, |f| r - f.sin())?;
    let phi_f = Samples::from_fn(fdom, m, f64::cos)?;
    // chain rule: d phi/dx = -sin f * (R - sin f)
    let phi_x_f = Samples::from_fn(fdom, m, |f| -f.sin() * (r - f.sin()))?;

    let theta = resample(x_of_f.values(), theta_f.values(), target)?;
    let phi = resample(x_of_f.values(), phi_f.values(), target)?;
    let phi_x = resample(x_of_f.values(), phi_x_f.values(), target)?;
    ProfileCurve::new(theta, phi, phi_x, CONF_TOL)
}

/// Revolved ellipse rho = offset + sin t, h = axial * cos t (offset > 1 keeps
/// the curve off the axis), conformally reparametrized.
fn ellipse(axial: f64, offset: f64, n: usize) -> Result<ProfileCurve> {
    if !(offset > 1.0) {
        return Err(Error::ParameterDomain(format!(
            "ellipse offset must exceed the unit radial amplitude, got {offset}"
        )));
    }
    if !(axial > 0.0) {
        return Err(Error::ParameterDomain(format!(
            "ellipse axial semi-axis must be positive, got {axial}"
        )));
    }
    let tdom = Domain::Torus { period: 2.0 * PI };
    let m = (16 * n).next_power_of_two().max(16384);
    let rho = Samples::from_fn(tdom, m, |t| offset + t.sin())?;
    let h = Samples::from_fn(tdom, m, |t| axial * t.cos())?;
    conformal_from_uniform(&rho, &h, 0.0, n, CONF_TOL)
}

fn check_decay(theta: &RealSamples, tol: f64) -> Result<()> {
    let n = theta.n();
    let edge = theta.values()[0].abs().max(theta.values()[n - 1].abs());
    if edge > tol {
        return Err(Error::ToleranceNotMet {
            what: "line-domain endpoint decay",
            achieved: edge,
            tol,
        });
    }
    Ok(())
}

/// The paper's two ellipse examples.
pub fn ellipse_by_id(id: u8) -> Result<Preset> {
    match id {
        1 => Ok(Preset::Ellipse {
            axial: 2f64.sqrt(),
            offset: 2.0,
        }),
        2 => Ok(Preset::Ellipse {
            axial: 3f64.sqrt(),
            offset: 2.0,
        }),
        _ => Err(Error::ParameterDomain(format!("unknown ellipse id {id}"))),
    }
}
