//! Surface reconstruction from spinors.
//!
//! The closed 1-forms built from quadratic spinor expressions are integrated
//! along the two-leg path (0,0) -> (x,0) -> (x,y):
//!
//!   dZ1 = (s^2 - r^2) cos y dx - (r^2 + s^2) sin y dy
//!   dZ2 = (s^2 - r^2) sin y dx + (r^2 + s^2) cos y dy
//!   dZ3 = 2 r s dx
//!
//! The y legs integrate in closed form; the x legs use the grid cumulative
//! integral. Orientation and phase are pinned so the radius-1 cylinder
//! reconstructs as (cos y, sin y, x) with Z3 increasing in x; the result then
//! matches the direct parametrization up to a translation along the axis.

use super::SpinorPair;
use crate::error::Result;
use crate::grid::Domain;

/// Regular vertex grid over one x period and a full y turn.
#[derive(Clone, Debug)]
pub struct SurfaceMesh {
    vertices: Vec<[f64; 3]>,
    nx: usize,
    ny: usize,
    x_domain: Domain,
}

impl SurfaceMesh {
    pub fn vertex(&self, i: usize, j: usize) -> [f64; 3] {
        self.vertices[i * self.ny + j]
    }

    pub fn vertices(&self) -> &[[f64; 3]] {
        &self.vertices
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn x_domain(&self) -> Domain {
        self.x_domain
    }

    /// Whether the mesh wraps in x (torus) or is open (truncated line).
    pub fn closed_in_x(&self) -> bool {
        self.x_domain.is_torus()
    }

    /// Max over x rows of the variation of Z1^2 + Z2^2 along y; zero for an
    /// axisymmetric mesh.
    pub fn axisymmetry_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.nx {
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            for j in 0..self.ny {
                let v = self.vertex(i, j);
                let r2 = v[0] * v[0] + v[1] * v[1];
                lo = lo.min(r2);
                hi = hi.max(r2);
            }
            worst = worst.max(hi - lo);
        }
        worst
    }

    /// Direct mesh of the parametrization (theta cos y, theta sin y, phi).
    pub fn from_profile(profile: &super::ProfileCurve, ny: usize) -> Self {
        let radius = profile.theta().values();
        let height = profile.phi().values();
        let nx = radius.len();
        let mut vertices = Vec::with_capacity(nx * ny);
        for i in 0..nx {
            for j in 0..ny {
                let y = 2.0 * std::f64::consts::PI * j as f64 / ny as f64;
                vertices.push([radius[i] * y.cos(), radius[i] * y.sin(), height[i]]);
            }
        }
        SurfaceMesh {
            vertices,
            nx,
            ny,
            x_domain: profile.domain(),
        }
    }
}

/// Integrate the reconstruction forms for the given spinor pair on a y grid
/// of `grid_y` points over [0, 2 pi).
pub fn weierstrass_reconstruct(sp: &SpinorPair, grid_y: usize) -> Result<SurfaceMesh> {
    let theta = sp.theta();
    let theta_x = sp.theta_x();
    let phi_x = sp.phi_x();
    let nx = theta.n();

    // x legs at y = 0: Z1 along s^2 - r^2, Z3 along 2 r s
    let p_theta = theta_x.cumulative();
    let p_phi = phi_x.cumulative();
    let theta0 = theta.values()[0];

    let mut vertices = Vec::with_capacity(nx * grid_y);
    for i in 0..nx {
        let radial_accum = theta0 + p_theta.values()[i];
        let th = theta.values()[i];
        for j in 0..grid_y {
            let y = 2.0 * std::f64::consts::PI * j as f64 / grid_y as f64;
            // x leg carried the cos-y = 1 slice; the y leg adds th (cos y - 1) and th sin y
            let z1 = radial_accum + th * (y.cos() - 1.0);
            let z2 = th * y.sin();
            let z3 = p_phi.values()[i];
            vertices.push([z1, z2, z3]);
        }
    }
    Ok(SurfaceMesh {
        vertices,
        nx,
        ny: grid_y,
        x_domain: theta.domain(),
    })
}
