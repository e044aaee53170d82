//! Conformally parametrized surfaces of revolution.
//!
//! A surface of revolution is the rotation of a profile curve
//! (theta(x), phi(x)) about the axis, with x a conformal parameter:
//! theta^2 = theta_x^2 + phi_x^2. The sampled profile carries theta, phi and
//! the signed branch phi_x = sqrt(theta^2 - theta_x^2); everything else
//! (potential, spinors, curvatures, closure) derives from these.

mod curvature;
mod preset;
mod reconstruct;
mod spinor;

pub use curvature::{curvatures, CurvatureReport};
pub use preset::{ellipse_by_id, preset, Preset};
pub use reconstruct::{weierstrass_reconstruct, SurfaceMesh};
pub use spinor::{spinors_from_profile, SpinorPair};

use std::f64::consts::PI;
use std::path::Path;

use crate::error::{Error, Result};
use crate::grid::{max_diff, Domain, RealSamples, Samples};
use crate::hierarchy::Potential;
use crate::interp::{resample, resample_with_drift, GridSpec};

/// Default conformality tolerance for profile validation.
pub const CONF_TOL: f64 = 1e-8;

/// Default half-width and decay tolerance for line-domain (sphere-like)
/// profiles: data must fall below `DECAY_TOL` at the truncation boundary.
pub const LINE_HALF_WIDTH: f64 = 20.0;
pub const DECAY_TOL: f64 = 1e-8;

/// Relative phi_x floor below which the (theta - theta_xx)/(4 phi_x) form of
/// the potential is considered singular at a sample.
pub const BRANCH_TOL: f64 = 1e-6;

/// How the profile's derivatives are evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DerivStyle {
    /// Fourier differentiation of the periodic data (torus domains).
    Spectral,
    /// 8th-order local stencils (line domains). Even decaying data carries a
    /// derivative jump of the decay-tolerance size at the truncation seam, so
    /// the periodic embedding would ring globally at that level.
    Local,
}

/// Conformally parametrized generating curve of a surface of revolution.
#[derive(Clone, Debug)]
pub struct ProfileCurve {
    theta: RealSamples,
    phi: RealSamples,
    phi_x: RealSamples,
    deriv: DerivStyle,
}

impl ProfileCurve {
    /// Validating constructor. Checks grids match, theta > 0 on torus domains,
    /// and the conformality residual max|theta^2 - theta_x^2 - phi_x^2| /
    /// max theta^2 against `conf_tol`.
    pub fn new(
        theta: RealSamples,
        phi: RealSamples,
        phi_x: RealSamples,
        conf_tol: f64,
    ) -> Result<Self> {
        if theta.domain() != phi.domain()
            || theta.domain() != phi_x.domain()
            || theta.n() != phi.n()
            || theta.n() != phi_x.n()
        {
            return Err(Error::InvalidGrid("profile component grids differ".into()));
        }
        let deriv = choose_deriv_style(&theta);
        let min_theta = theta.values().iter().cloned().fold(f64::INFINITY, f64::min);
        if theta.domain().is_torus() && min_theta <= 0.0 {
            return Err(Error::AxisContact(min_theta));
        }
        if min_theta < 0.0 {
            return Err(Error::AxisContact(min_theta));
        }
        let p = ProfileCurve {
            theta,
            phi,
            phi_x,
            deriv,
        };
        let residual = p.conformality_residual();
        if residual > conf_tol {
            return Err(Error::ToleranceNotMet {
                what: "conformality residual",
                achieved: residual,
                tol: conf_tol,
            });
        }
        Ok(p)
    }

    pub fn theta(&self) -> &RealSamples {
        &self.theta
    }

    pub fn phi(&self) -> &RealSamples {
        &self.phi
    }

    pub fn phi_x(&self) -> &RealSamples {
        &self.phi_x
    }

    pub fn n(&self) -> usize {
        self.theta.n()
    }

    pub fn domain(&self) -> Domain {
        self.theta.domain()
    }

    pub fn period(&self) -> f64 {
        self.theta.period()
    }

    pub fn deriv_style(&self) -> DerivStyle {
        self.deriv
    }

    /// Derivative in the style fixed at construction.
    pub fn deriv(&self, f: &RealSamples) -> RealSamples {
        match self.deriv {
            DerivStyle::Spectral => f.derivative(),
            DerivStyle::Local => f.derivative_local(),
        }
    }

    pub fn theta_x(&self) -> RealSamples {
        self.deriv(&self.theta)
    }

    pub fn theta_xx(&self) -> RealSamples {
        self.deriv(&self.theta_x())
    }

    pub fn phi_xx(&self) -> RealSamples {
        self.deriv(&self.phi_x)
    }

    /// max |theta^2 - theta_x^2 - phi_x^2| / max theta^2.
    pub fn conformality_residual(&self) -> f64 {
        let tx = self.theta_x();
        let mut worst = 0.0f64;
        let mut scale = 0.0f64;
        for i in 0..self.n() {
            let th = self.theta.values()[i];
            let r = th * th - tx.values()[i].powi(2) - self.phi_x.values()[i].powi(2);
            worst = worst.max(r.abs());
            scale = scale.max(th * th);
        }
        worst / scale.max(1e-300)
    }

    /// phi(x) may drift by a fixed amount per period (non-closed profiles);
    /// the drift equals the closure defect integral of phi_x.
    pub fn phi_drift(&self) -> f64 {
        self.phi_x.integrate()
    }

    /// Uniformly scaled profile (scale * theta, scale * phi); a homothety of
    /// the surface.
    pub fn scaled(&self, scale: f64) -> Result<Self> {
        if !(scale > 0.0 && scale.is_finite()) {
            return Err(Error::ParameterDomain(format!(
                "homothety scale {scale} must be positive"
            )));
        }
        Ok(ProfileCurve {
            theta: self.theta.scale(scale),
            phi: self.phi.scale(scale),
            phi_x: self.phi_x.scale(scale),
            deriv: self.deriv,
        })
    }
}

fn choose_deriv_style(theta: &RealSamples) -> DerivStyle {
    match theta.domain() {
        Domain::Torus { .. } => DerivStyle::Spectral,
        Domain::Line { .. } => DerivStyle::Local,
    }
}

/// Dirac potential of the profile: U from the division-free form
/// U = (theta phi_x + theta_x phi_xx - theta_xx phi_x) / (4 theta^2),
/// cross-checked against (theta - theta_xx)/(4 phi_x) away from zeros of
/// phi_x; returns q = 4U.
pub fn potential_from_profile(p: &ProfileCurve) -> Result<Potential> {
    let n = p.n();
    let theta = p.theta().values();
    let phi_x = p.phi_x().values();
    let tx = p.theta_x();
    let txx = p.theta_xx();
    let pxx = p.phi_xx();

    let mut q = Vec::with_capacity(n);
    for i in 0..n {
        let u = (theta[i] * phi_x[i] + tx.values()[i] * pxx.values()[i]
            - txx.values()[i] * phi_x[i])
            / (4.0 * theta[i] * theta[i]);
        q.push(4.0 * u);
    }
    let q = Samples::new(q, p.domain())?;

    // cross-form check: (theta - theta_xx) / (4 phi_x) where phi_x is tame
    let phx_scale = p.phi_x().max_abs().max(1e-300);
    let u_scale = 0.25 * q.max_abs() + 1.0;
    let mut worst = 0.0f64;
    for i in 0..n {
        let num = theta[i] - txx.values()[i];
        if phi_x[i].abs() >= BRANCH_TOL.sqrt() * phx_scale {
            let u24 = num / (4.0 * phi_x[i]);
            worst = worst.max((u24 - 0.25 * q.values()[i]).abs());
        } else if num.abs() > 8.0 * u_scale * (phi_x[i].abs() + BRANCH_TOL * phx_scale) {
            // phi_x vanishes but theta - theta_xx does not to matching order
            return Err(Error::BranchSingularity {
                x: p.theta().x(i),
                phi_x: phi_x[i],
                num,
            });
        }
    }
    let agree_tol = 1e-7 * u_scale;
    if worst > agree_tol {
        return Err(Error::ToleranceNotMet {
            what: "potential cross-form agreement",
            achieved: worst,
            tol: agree_tol,
        });
    }
    Ok(Potential::new(q))
}

/// Closure integral int_0^T phi_x dx over one period (the signed branch);
/// zero iff the revolved profile closes into a torus.
pub fn closure_defect(p: &ProfileCurve) -> Result<f64> {
    if !p.domain().is_torus() {
        return Err(Error::DomainKind { expected: "torus" });
    }
    Ok(p.phi_x().integrate())
}

/// Conformally reparametrize a plane generating curve (rho(t), h(t)), rho > 0.
///
/// The source must repeat its first point: t strictly increasing with rho at
/// the last row equal to the first, so the parameter period is
/// t_last - t_first. The axial coordinate may drift by a fixed amount per
/// period (helix-free cylinder-like profiles); closed curves have zero drift.
/// The conformal coordinate satisfies dx/dt = sqrt(rho'^2 + h'^2) / rho,
/// giving the period T = the circumference integral of that density;
/// theta(x(t)) = rho(t), phi(x(t)) = h(t) on a uniform n-point x grid.
pub fn conformal_reparametrize(
    t: &[f64],
    rho: &[f64],
    h: &[f64],
    n: usize,
    conf_tol: f64,
) -> Result<ProfileCurve> {
    if t.len() != rho.len() || t.len() != h.len() {
        return Err(Error::InvalidGrid("curve column lengths differ".into()));
    }
    if t.len() < 5 {
        return Err(Error::InvalidGrid("need at least 5 curve samples".into()));
    }
    let m = t.len() - 1;
    let close_tol = 1e-9
        * (rho.iter().fold(0.0f64, |a, &v| a.max(v.abs()))
            + h.iter().fold(0.0f64, |a, &v| a.max(v.abs())));
    if (rho[m] - rho[0]).abs() > close_tol {
        return Err(Error::InvalidGrid(
            "curve is not closed in the radial coordinate: last row must repeat the first".into(),
        ));
    }
    let span = t[m] - t[0];
    if span <= 0.0 {
        return Err(Error::NonMonotoneParameter(m));
    }
    let min_rho = rho.iter().cloned().fold(f64::INFINITY, f64::min);
    if min_rho <= 0.0 {
        return Err(Error::AxisContact(min_rho));
    }
    let h_drift = h[m] - h[0];

    // de-trend the axial coordinate so both columns are periodic, then move to
    // a uniform parameter grid fine enough that cubic resampling error is far
    // below conf_tol
    let m_fine = (8 * n.max(m)).next_power_of_two().max(16384);
    let tdom = Domain::Torus { period: span };
    let spec_fine = GridSpec {
        n: m_fine,
        domain: tdom,
    };
    let shift: Vec<f64> = t[..m].iter().map(|&v| v - t[0]).collect();
    let h_detrended: Vec<f64> = (0..m)
        .map(|i| h[i] - h_drift * shift[i] / span)
        .collect();
    let rho_u = resample(&shift, &rho[..m], spec_fine)?;
    let h_u = resample(&shift, &h_detrended, spec_fine)?;

    conformal_from_uniform(&rho_u, &h_u, h_drift, n, conf_tol)
}

/// Conformal reparametrization from a uniform parameter grid (one period,
/// endpoint not repeated): `h` holds the periodic part of the axial
/// coordinate and `h_drift` its increment per period.
pub(crate) fn conformal_from_uniform(
    rho: &RealSamples,
    h: &RealSamples,
    h_drift: f64,
    n: usize,
    conf_tol: f64,
) -> Result<ProfileCurve> {
    let min_rho = rho.values().iter().cloned().fold(f64::INFINITY, f64::min);
    if min_rho <= 0.0 {
        return Err(Error::AxisContact(min_rho));
    }
    let span = rho.period();
    let rho_p = rho.derivative();
    let h_p = h.derivative().map(|v| v + h_drift / span);
    let speed2 = &(&rho_p * &rho_p) + &(&h_p * &h_p);
    let min_speed2 = speed2
        .values()
        .iter()
        .cloned()
        .fold(f64::INFINITY, f64::min);
    if min_speed2 <= 0.0 {
        return Err(Error::InvalidGrid(
            "degenerate curve parametrization (zero speed)".into(),
        ));
    }
    let density = speed2.zip_map(rho, |s2, r| s2.sqrt() / r);
    let period = density.integrate();
    let x_of_t = density.cumulative();

    // analytic pushforward of the phi derivative: d phi/dx = h' rho / |gamma'|
    let phi_x_t = h_p
        .zip_map(&speed2, |hp, s2| hp / s2.sqrt())
        .zip_map(rho, |v, r| v * r);
    // re-trended axial values for interpolation
    let h_full: Vec<f64> = (0..rho.n())
        .map(|i| h.values()[i] + h_drift * (i as f64 / rho.n() as f64))
        .collect();

    let target = GridSpec {
        n,
        domain: Domain::Torus { period },
    };
    let theta = resample(x_of_t.values(), rho.values(), target)?;
    let phi = resample_with_drift(x_of_t.values(), &h_full, h_drift, target)?;
    let phi_x = resample(x_of_t.values(), phi_x_t.values(), target)?;

    ProfileCurve::new(theta, phi, phi_x, conf_tol)
}

/// Build a profile from the logarithmic slope tau = theta_x / theta:
/// theta = exp(int tau), phi_x = theta * sqrt(1 - tau^2) with the continuous
/// branch, phi(x_0) = 0.
pub fn profile_from_tau(tau: &RealSamples, conf_tol: f64) -> Result<ProfileCurve> {
    let max_tau2 = tau.values().iter().map(|v| v * v).fold(0.0, f64::max);
    if max_tau2 > 1.0 + 1e-12 {
        return Err(Error::SlopeBound(max_tau2));
    }
    if tau.domain().is_torus() {
        let mean = tau.mean().abs();
        let floor = tau.max_abs().max(1e-300);
        if mean > crate::grid::MEAN_TOL * floor {
            return Err(Error::NonPeriodicTheta(mean));
        }
    }

    let log_theta = tau.cumulative();
    // normalize: theta = 1 at x = 0 (torus) or at the window center (line)
    let anchor = if tau.domain().is_torus() {
        log_theta.values()[0]
    } else {
        log_theta.values()[tau.n() / 2]
    };
    let theta = log_theta.map(|v| (v - anchor).exp());

    // continuous branch of sqrt(1 - tau^2): (tau, phi_x/theta) stays on the
    // unit circle, so track the angle psi with cos psi = tau. The branch is
    // picked by linear extrapolation of psi: tau^2 <= 1 forces touches of
    // |tau| = 1 to have even order, and extrapolation keeps the slope sign
    // through them, which nearest-neighbor continuation cannot resolve.
    let n = tau.n();
    let mut sin_psi = Vec::with_capacity(n);
    let mut prev2: Option<f64> = None;
    let mut prev = tau.values()[0].clamp(-1.0, 1.0).acos();
    sin_psi.push(prev.sin());
    for i in 1..n {
        let base = tau.values()[i].clamp(-1.0, 1.0).acos(); // in [0, pi]
        let predict = match prev2 {
            Some(p2) => 2.0 * prev - p2,
            None => prev,
        };
        let near = |c: f64| {
            let k = ((predict - c) / (2.0 * PI)).round();
            c + 2.0 * PI * k
        };
        let c1 = near(base);
        let c2 = near(-base);
        let psi = if (c1 - predict).abs() <= (c2 - predict).abs() {
            c1
        } else {
            c2
        };
        sin_psi.push(psi.sin());
        prev2 = Some(prev);
        prev = psi;
    }
    let phi_x = theta.zip_map(
        &Samples::new(sin_psi, tau.domain())?,
        |th, s| th * s,
    );
    let mut phi = phi_x.cumulative();
    if !tau.domain().is_torus() {
        // anchor phi = 0 at the window center, like theta's normalization
        let mid = phi.values()[tau.n() / 2];
        phi = phi.map(|v| v - mid);
    }
    ProfileCurve::new(theta, phi, phi_x, conf_tol)
}

/// Read a closed profile curve from CSV with header `t,radial,axial`.
/// The last row must repeat the first (explicit closure).
pub fn read_profile_csv(path: &Path) -> Result<(Vec<f64>, Vec<f64>, Vec<f64>)> {
    let mut rdr = csv::Reader::from_path(path)?;
    {
        let hdr = rdr.headers()?;
        let cols: Vec<&str> = hdr.iter().map(str::trim).collect();
        if cols != ["t", "radial", "axial"] {
            return Err(Error::ProfileFile(format!(
                "expected header `t,radial,axial`, found `{}`",
                cols.join(",")
            )));
        }
    }
    let mut t = Vec::new();
    let mut radial = Vec::new();
    let mut axial = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec?;
        if rec.len() != 3 {
            return Err(Error::ProfileFile(format!("row {i} has {} fields", rec.len())));
        }
        let parse = |s: &str| -> Result<f64> {
            s.trim()
                .parse::<f64>()
                .map_err(|e| Error::ProfileFile(format!("row {i}: {e}")))
        };
        t.push(parse(&rec[0])?);
        radial.push(parse(&rec[1])?);
        axial.push(parse(&rec[2])?);
    }
    if t.len() < 5 {
        return Err(Error::ProfileFile("need at least 5 rows".into()));
    }
    Ok((t, radial, axial))
}

/// Pointwise max difference of two profiles' (theta, phi) pairs.
pub fn profile_max_diff(a: &ProfileCurve, b: &ProfileCurve) -> f64 {
    max_diff(a.theta(), b.theta()).max(max_diff(a.phi(), b.phi()))
}

#[cfg(test)]
mod tests;
