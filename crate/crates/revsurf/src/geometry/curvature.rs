//! Curvature data of a revolved profile.

use super::{potential_from_profile, ProfileCurve};
use crate::error::Result;
use crate::grid::RealSamples;

/// Gaussian and mean curvature with the second-form coefficients and the
/// profile components of the unit normal
/// N = (-phi_x/theta cos y, -phi_x/theta sin y, theta_x/theta).
#[derive(Clone, Debug)]
pub struct CurvatureReport {
    pub gauss: RealSamples,
    pub mean: RealSamples,
    /// dx^2 coefficient of the second fundamental form, in the division-free
    /// form 4 U theta - phi_x (equal to theta phi_xx / theta_x - phi_x away
    /// from theta_x = 0).
    pub second_form_xx: RealSamples,
    /// dy^2 coefficient: phi_x.
    pub second_form_yy: RealSamples,
    /// Radial component -phi_x / theta of the normal.
    pub normal_radial: RealSamples,
    /// Axial component theta_x / theta of the normal.
    pub normal_axial: RealSamples,
}

/// K = (theta_x^2 - theta theta_xx) / theta^4 and H = 2U/theta; the H form
/// phi_xx / (2 theta theta_x) has removable singularities at theta_x = 0 and
/// is used only as a cross-check in tests.
pub fn curvatures(p: &ProfileCurve) -> Result<CurvatureReport> {
    let q = potential_from_profile(p)?;
    let u = q.q().scale(0.25);
    let theta = p.theta();
    let tx = p.theta_x();
    let txx = p.theta_xx();
    let phx = p.phi_x();

    let gauss = theta.zip_map(&tx, |th, t1| (t1 * t1) / th.powi(4)).zip_map(
        &theta.zip_map(&txx, |th, t2| th * t2 / th.powi(4)),
        |a, b| a - b,
    );
    let mean = u.zip_map(theta, |ui, th| 2.0 * ui / th);
    let second_form_xx = u
        .zip_map(theta, |ui, th| 4.0 * ui * th)
        .zip_map(phx, |a, px| a - px);

    Ok(CurvatureReport {
        gauss,
        mean,
        second_form_xx,
        second_form_yy: phx.clone(),
        normal_radial: phx.zip_map(theta, |px, th| -px / th),
        normal_axial: tx.zip_map(theta, |t1, th| t1 / th),
    })
}

impl CurvatureReport {
    /// Total curvature integral over the surface: int K dA with
    /// dA = theta^2 dx dy (2 pi from the y integral). Zero for closed tori.
    pub fn total_gauss_curvature(&self, p: &ProfileCurve) -> f64 {
        let integrand = self.gauss.zip_map(p.theta(), |k, th| k * th * th);
        2.0 * std::f64::consts::PI * integrand.integrate()
    }
}
