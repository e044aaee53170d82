//! Spinor pair (r, s) of a profile: real solutions of the linear problem
//! r_x = -r/2 + 2 U s, s_x = s/2 - 2 U r encoding the profile through
//! r^2 + s^2 = theta, s^2 - r^2 = theta_x, 2 r s = phi_x.

use std::f64::consts::PI;

use super::ProfileCurve;
use crate::error::Result;
use crate::grid::{RealSamples, Samples};

/// Real spinor pair on the profile grid. `antiperiodic` records whether
/// (r, s) returns to minus itself after one period; quadratic expressions are
/// insensitive to the flag.
#[derive(Clone, Debug)]
pub struct SpinorPair {
    pub r: RealSamples,
    pub s: RealSamples,
    pub antiperiodic: bool,
}

impl SpinorPair {
    /// theta realized as r^2 + s^2.
    pub fn theta(&self) -> RealSamples {
        self.r.zip_map(&self.s, |r, s| r * r + s * s)
    }

    /// theta_x realized as s^2 - r^2.
    pub fn theta_x(&self) -> RealSamples {
        self.r.zip_map(&self.s, |r, s| s * s - r * r)
    }

    /// phi_x realized as 2 r s.
    pub fn phi_x(&self) -> RealSamples {
        self.r.zip_map(&self.s, |r, s| 2.0 * r * s)
    }

    /// Max-norm residual of the linear problem r_x = -r/2 + 2 U s,
    /// s_x = s/2 - 2 U r for the given potential samples q = 4 U.
    /// Antiperiodic pairs go through the half-shifted spectrum and line
    /// domains through local stencils; the plain spectrum would ring at the
    /// seam in either case.
    pub fn ode_residual(&self, q: &RealSamples) -> f64 {
        let u = q.scale(0.25);
        let (rx, sx) = if self.antiperiodic {
            (
                self.r.derivative_antiperiodic(),
                self.s.derivative_antiperiodic(),
            )
        } else if !self.r.domain().is_torus() {
            (self.r.derivative_local(), self.s.derivative_local())
        } else {
            (self.r.derivative(), self.s.derivative())
        };
        let mut worst = 0.0f64;
        for i in 0..self.r.n() {
            let r = self.r.values()[i];
            let s = self.s.values()[i];
            let ui = u.values()[i];
            worst = worst.max((rx.values()[i] - (-0.5 * r + 2.0 * ui * s)).abs());
            worst = worst.max((sx.values()[i] - (0.5 * s - 2.0 * ui * r)).abs());
        }
        worst
    }
}

/// Construct the spinor pair from the profile by the half-angle branch:
/// w = unwrap(atan2(phi_x, -theta_x)) / 2, r = sqrt(theta) cos w,
/// s = sqrt(theta) sin w. The continuation through zeros of theta -+ theta_x
/// is smooth, and the recorded flag captures antiperiodicity.
pub fn spinors_from_profile(p: &ProfileCurve) -> Result<SpinorPair> {
    let n = p.n();
    let theta = p.theta();
    let tx = p.theta_x();
    let phx = p.phi_x();

    let mut angle = Vec::with_capacity(n);
    for i in 0..n {
        angle.push(phx.values()[i].atan2(-tx.values()[i]));
    }
    // unwrap to a continuous branch, tracking the closing jump for the flag
    let mut w = Vec::with_capacity(n);
    let mut prev = angle[0];
    let mut acc = angle[0];
    w.push(0.5 * acc);
    for &a in angle.iter().skip(1) {
        let mut d = a - prev;
        d -= 2.0 * PI * (d / (2.0 * PI)).round();
        acc += d;
        prev = a;
        w.push(0.5 * acc);
    }
    let mut d_close = angle[0] - prev;
    d_close -= 2.0 * PI * (d_close / (2.0 * PI)).round();
    let winding = (acc + d_close - angle[0]) / (2.0 * PI);
    let antiperiodic = (winding.round() as i64) % 2 != 0;

    let mut r = Vec::with_capacity(n);
    let mut s = Vec::with_capacity(n);
    for i in 0..n {
        let root = theta.values()[i].max(0.0).sqrt();
        r.push(root * w[i].cos());
        s.push(root * w[i].sin());
    }
    Ok(SpinorPair {
        r: Samples::new(r, p.domain())?,
        s: Samples::new(s, p.domain())?,
        antiperiodic,
    })
}
