//! Kruskal densities and the invariant tower.
//!
//! The asymptotic-phase recursion R_1 = -u, R_{k+1} = -R_k' - sum R_j R_{k-j}
//! applied to the Miura field u = q^2/4 - i q_x/2 generates the conserved
//! integrals H_n = -int R_{2n+1}; even densities integrate to zero. The first
//! three have closed forms
//!   H_0 = (1/4) int q^2,
//!   H_1 = (1/16) int (q^4 - 4 q_x^2),
//!   H_2 = (1/32) int (q^6 - 20 q^2 q_x^2 + 8 q_xx^2),
//! and the recursion is cross-checked against them in the tests.

use num_complex::Complex64;

use super::{miura, Potential};
use crate::error::{Error, Result};
use crate::grid::ComplexSamples;

/// Numerical depth limit: beyond H_6 the recursion needs more than the
/// standard grids resolve (each level differentiates twice).
pub const MAX_DEPTH: usize = 6;

/// The densities R_1 .. R_{2N+1}.
#[derive(Clone, Debug)]
pub struct KruskalDensities {
    densities: Vec<ComplexSamples>,
    depth: usize,
}

impl KruskalDensities {
    /// R_k for k = 1 ..= 2 depth + 1.
    pub fn density(&self, k: usize) -> &ComplexSamples {
        assert!(k >= 1 && k <= 2 * self.depth + 1);
        &self.densities[k - 1]
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Largest |int R_{2n}| over n = 1..=depth, normalized by max |R_{2n}|;
    /// the even densities are total derivatives, so this measures numerical
    /// degradation of the recursion.
    pub fn even_integral_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for n in 1..=self.depth {
            let r = self.density(2 * n);
            let scale = r.max_abs().max(1e-300);
            worst = worst.max(r.integrate().norm() / scale);
        }
        worst
    }
}

/// Run the recursion on a complex field to the requested depth.
pub fn kruskal_densities(u: &ComplexSamples, depth: usize) -> Result<KruskalDensities> {
    if depth > MAX_DEPTH {
        return Err(Error::DepthLimit {
            requested: depth,
            max: MAX_DEPTH,
        });
    }
    let count = 2 * depth + 1;
    let mut densities: Vec<ComplexSamples> = Vec::with_capacity(count);
    densities.push(-u);
    for k in 1..count {
        // R_{k+1} = -R_k' - sum_{j=1}^{k-1} R_j R_{k-j}
        let mut next = -&densities[k - 1].dx();
        for j in 1..k {
            next = &next - &(&densities[j - 1] * &densities[k - 1 - j]);
        }
        densities.push(next);
    }
    Ok(KruskalDensities { densities, depth })
}

/// Invariant values for one potential state.
#[derive(Clone, Debug)]
pub struct InvariantReport {
    /// H_0 .. H_depth (real parts of -int R_{2n+1} through the Miura field).
    pub h: Vec<f64>,
    /// W = int q^2 dx.
    pub willmore: f64,
    /// Largest imaginary part discarded when taking real parts, normalized by
    /// 1 + |H_n|.
    pub max_imag_residual: f64,
    /// Closure functionals J_0..J_K when the caller computed them (flows fill
    /// these at checkpoints).
    pub closure: Vec<f64>,
}

impl InvariantReport {
    pub fn depth(&self) -> usize {
        self.h.len() - 1
    }
}

/// Kruskal tower of the potential via the Miura transform and the recursion.
pub fn invariants(pot: &Potential, depth: usize) -> Result<InvariantReport> {
    let u = miura(pot);
    let dens = kruskal_densities(&u, depth)?;
    let mut h = Vec::with_capacity(depth + 1);
    let mut max_imag = 0.0f64;
    for n in 0..=depth {
        let val: Complex64 = -dens.density(2 * n + 1).integrate();
        h.push(val.re);
        max_imag = max_imag.max(val.im.abs() / (1.0 + val.re.abs()));
    }
    Ok(InvariantReport {
        h,
        willmore: pot.willmore(),
        max_imag_residual: max_imag,
        closure: Vec::new(),
    })
}

/// The first three invariants from their closed-form densities.
#[derive(Clone, Copy, Debug)]
pub struct ClosedFormInvariants {
    pub h0: f64,
    pub h1: f64,
    pub h2: f64,
}

pub fn closed_form_invariants(pot: &Potential) -> ClosedFormInvariants {
    let q = pot.q();
    let qx = q.dx();
    let qxx = q.dx_n(2);
    let n = q.n();
    let mut d0 = Vec::with_capacity(n);
    let mut d1 = Vec::with_capacity(n);
    let mut d2 = Vec::with_capacity(n);
    for i in 0..n {
        let (v, v1, v2) = (q.values()[i], qx.values()[i], qxx.values()[i]);
        d0.push(v * v / 4.0);
        d1.push((v.powi(4) - 4.0 * v1 * v1) / 16.0);
        d2.push((v.powi(6) - 20.0 * v * v * v1 * v1 + 8.0 * v2 * v2) / 32.0);
    }
    let dom = q.domain();
    ClosedFormInvariants {
        h0: crate::grid::RealSamples::from_parts(d0, dom).integrate(),
        h1: crate::grid::RealSamples::from_parts(d1, dom).integrate(),
        h2: crate::grid::RealSamples::from_parts(d2, dom).integrate(),
    }
}
