//! Geometric transformations of surfaces of revolution and the induced
//! transformations of their potentials: axis-centered inversion, the
//! isothermic dual, and homotheties.

use crate::error::{Error, Result};
use crate::geometry::{potential_from_profile, ProfileCurve, CONF_TOL};
use crate::grid::Samples;
use crate::hierarchy::Potential;
use crate::parallel::par_map;

/// Inversion center (0, 0, p) on the symmetry axis; `Infinity` is the
/// identity transform.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum InversionCenter {
    At(f64),
    Infinity,
}

impl InversionCenter {
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.eq_ignore_ascii_case("inf") || t.eq_ignore_ascii_case("infinity") || t == "oo" {
            Ok(InversionCenter::Infinity)
        } else {
            t.parse::<f64>()
                .map(InversionCenter::At)
                .map_err(|e| Error::ParameterDomain(format!("bad inversion center `{t}`: {e}")))
        }
    }
}

impl std::fmt::Display for InversionCenter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InversionCenter::At(p) => write!(f, "{p}"),
            InversionCenter::Infinity => write!(f, "inf"),
        }
    }
}

/// Squared distance factor D = theta^2 + (phi - p)^2 and the off-surface
/// check: the center must not lie on the profile.
fn center_distance(prof: &ProfileCurve, p: f64) -> f64 {
    let theta = prof.theta().values();
    let phi = prof.phi().values();
    let mut min = f64::INFINITY;
    for i in 0..prof.n() {
        let d = theta[i] * theta[i] + (phi[i] - p) * (phi[i] - p);
        min = min.min(d);
    }
    min
}

fn surface_diameter(prof: &ProfileCurve) -> f64 {
    let theta_max = prof.theta().max_abs();
    let phi_max = prof.phi().max_abs();
    2.0 * theta_max.max(phi_max)
}

/// Invert the profile in the unit sphere centered at (0, 0, p):
/// theta -> theta / D, phi -> (phi - p) / D with D = theta^2 + (phi - p)^2.
/// The conformal parameter x is unchanged. `Infinity` returns the input.
pub fn invert_profile(prof: &ProfileCurve, center: InversionCenter) -> Result<ProfileCurve> {
    let p = match center {
        InversionCenter::Infinity => return Ok(prof.clone()),
        InversionCenter::At(p) => p,
    };
    let min_dist = center_distance(prof, p);
    let tol = 1e-6 * surface_diameter(prof);
    if min_dist <= tol * tol {
        return Err(Error::CenterOnSurface { p, min_dist });
    }

    let n = prof.n();
    let theta = prof.theta().values();
    let phi = prof.phi().values();
    let phi_x = prof.phi_x().values();
    let theta_x = prof.theta_x();

    let mut th_new = Vec::with_capacity(n);
    let mut ph_new = Vec::with_capacity(n);
    let mut phx_new = Vec::with_capacity(n);
    for i in 0..n {
        let w = phi[i] - p;
        let d = theta[i] * theta[i] + w * w;
        let dx = 2.0 * theta[i] * theta_x.values()[i] + 2.0 * w * phi_x[i];
        th_new.push(theta[i] / d);
        ph_new.push(w / d);
        phx_new.push((phi_x[i] * d - w * dx) / (d * d));
    }
    let dom = prof.domain();
    ProfileCurve::new(
        Samples::new(th_new, dom)?,
        Samples::new(ph_new, dom)?,
        Samples::new(phx_new, dom)?,
        CONF_TOL.max(10.0 * prof.conformality_residual()),
    )
}

/// Potential of the inversion through the origin, evaluated in closed form
/// directly from the source profile:
///
/// U~ = (theta phi_x + theta_xx phi_x - theta_x phi_xx) / (4 theta^2)
///    + ((theta_x^2 + phi_x^2)(theta phi_x - theta_x phi)
///       - theta phi (theta theta_x + phi phi_x)) / (2 theta^2 (theta^2 + phi^2)).
pub fn inverted_potential_origin(prof: &ProfileCurve) -> Result<Potential> {
    let min_dist = center_distance(prof, 0.0);
    let tol = 1e-6 * surface_diameter(prof);
    if min_dist <= tol * tol {
        return Err(Error::CenterOnSurface {
            p: 0.0,
            min_dist,
        });
    }
    let n = prof.n();
    let theta = prof.theta().values();
    let phi = prof.phi().values();
    let phx = prof.phi_x().values();
    let tx = prof.theta_x();
    let txx = prof.theta_xx();
    let pxx = prof.phi_xx();

    let mut q = Vec::with_capacity(n);
    for i in 0..n {
        let th = theta[i];
        let ph = phi[i];
        let t1 = tx.values()[i];
        let p1 = phx[i];
        let first = (th * p1 + txx.values()[i] * p1 - t1 * pxx.values()[i]) / (4.0 * th * th);
        let second = ((t1 * t1 + p1 * p1) * (th * p1 - t1 * ph)
            - th * ph * (th * t1 + ph * p1))
            / (2.0 * th * th * (th * th + ph * ph));
        q.push(4.0 * (first + second));
    }
    Ok(Potential::new(Samples::new(q, prof.domain())?))
}

/// Potentials of the inversion family Sigma_p for each center, via
/// composition (invert, then extract). The square-root branch of each image
/// potential is globally sign-normalized against the source potential, the
/// branch being free; the invariant tower is even in q either way.
pub fn inversion_family(
    prof: &ProfileCurve,
    centers: &[InversionCenter],
) -> Result<Vec<Potential>> {
    let reference = potential_from_profile(prof)?;
    let results = par_map(centers, |&c| -> Result<Potential> {
        let inv = invert_profile(prof, c)?;
        let pot = potential_from_profile(&inv)?;
        Ok(align_branch(pot, &reference))
    });
    results.into_iter().collect()
}

/// Pick the global sign of q minimizing the L2 distance to the reference.
fn align_branch(pot: Potential, reference: &Potential) -> Potential {
    let q = pot.q();
    let r = reference.q();
    if q.n() != r.n() {
        return pot;
    }
    let mut plus = 0.0f64;
    let mut minus = 0.0f64;
    for (a, b) in q.values().iter().zip(r.values()) {
        plus += (a - b) * (a - b);
        minus += (a + b) * (a + b);
    }
    if minus < plus {
        Potential::new(-q)
    } else {
        pot
    }
}

/// Isothermic dual: theta* = 1/theta, phi*_x = phi_x / theta^2, phi*(x_0) = 0.
/// Duals of tori are generally non-closed; the drift phi*(T) - phi*(0) is the
/// translation period of the resulting line-like profile, and invariants over
/// it mean integrals over this fundamental domain.
pub fn dual_profile(prof: &ProfileCurve) -> Result<ProfileCurve> {
    let theta = prof.theta();
    let phx = prof.phi_x();
    let th_new = theta.map(|v| 1.0 / v);
    let phx_new = phx.zip_map(theta, |p, th| p / (th * th));
    let ph_new = phx_new.cumulative();
    ProfileCurve::new(
        th_new,
        ph_new,
        phx_new,
        CONF_TOL.max(10.0 * prof.conformality_residual()),
    )
}

/// Dual potential in closed form from the source profile:
/// U* = (theta phi_x - theta_x phi_xx + theta_xx phi_x) / (4 theta^2).
pub fn dual_potential(prof: &ProfileCurve) -> Result<Potential> {
    let n = prof.n();
    let theta = prof.theta().values();
    let phx = prof.phi_x().values();
    let tx = prof.theta_x();
    let txx = prof.theta_xx();
    let pxx = prof.phi_xx();
    let mut q = Vec::with_capacity(n);
    for i in 0..n {
        let u = (theta[i] * phx[i] - tx.values()[i] * pxx.values()[i]
            + txx.values()[i] * phx[i])
            / (4.0 * theta[i] * theta[i]);
        q.push(4.0 * u);
    }
    Ok(Potential::new(Samples::new(q, prof.domain())?))
}

/// Potential of the scaled profile (scale theta, scale phi); homotheties
/// preserve potentials, so this must match the original pointwise.
pub fn homothety_check(prof: &ProfileCurve, scale: f64) -> Result<Potential> {
    let scaled = prof.scaled(scale)?;
    potential_from_profile(&scaled)
}

/// Convenience for tests and reports: max |q_a - q_b|.
pub fn potential_max_diff(a: &Potential, b: &Potential) -> f64 {
    crate::grid::max_diff(a.q(), b.q())
}

/// Same, insensitive to the global square-root branch.
pub fn potential_branch_diff(a: &Potential, b: &Potential) -> f64 {
    let direct = crate::grid::max_diff(a.q(), b.q());
    let flipped = crate::grid::max_diff(&(-a.q()), b.q());
    direct.min(flipped)
}
