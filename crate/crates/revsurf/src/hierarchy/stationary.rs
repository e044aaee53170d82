//! Stationarity fit and closure functionals.

use super::{recursion_apply, Potential};
use crate::error::{Error, Result};
use crate::geometry::SpinorPair;
use crate::grid::RealSamples;

/// Coefficients of the stationary-potential equation
/// q_x^2 = -q^4/4 + a q^2 + b q + c and the max-norm misfit of the fit.
#[derive(Clone, Copy, Debug)]
pub struct StationarityFit {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub residual: f64,
}

/// Least-squares fit over all samples; a small residual means the surface is
/// a stationary point of the third-order flow up to an x-translation.
pub fn stationarity_fit(pot: &Potential) -> Result<StationarityFit> {
    let q = pot.q();
    let qx = q.dx();
    let n = q.n();
    let target: Vec<f64> = (0..n)
        .map(|i| qx.values()[i].powi(2) + 0.25 * q.values()[i].powi(4))
        .collect();
    let basis: Vec<Vec<f64>> = vec![
        q.values().iter().map(|&v| v * v).collect(),
        q.values().to_vec(),
        vec![1.0; n],
    ];
    let (coef, residual) = lstsq(&basis, &target).ok_or_else(|| {
        Error::DegenerateFit("normal equations singular (constant potential?)".into())
    })?;
    Ok(StationarityFit {
        a: coef[0],
        b: coef[1],
        c: coef[2],
        residual,
    })
}

/// J_k = int (D^k q_x)(r^2 + s^2) dx for k = 0..=depth; all vanish on closed
/// tori.
pub fn closure_functionals(
    pot: &Potential,
    sp: &SpinorPair,
    depth: usize,
) -> Result<Vec<f64>> {
    let weight = sp.theta();
    let mut g = pot.q().dx();
    let mut out = Vec::with_capacity(depth + 1);
    for k in 0..=depth {
        out.push((&g * &weight).integrate());
        if k < depth {
            g = recursion_apply(pot, &g)?;
        }
    }
    Ok(out)
}

/// Project `target` onto the span of `basis` (least squares); returns the
/// coefficients and the max-norm of the orthogonal remainder. A degenerate
/// basis (e.g. all zero) contributes nothing, leaving the target itself.
pub fn project_span(target: &RealSamples, basis: &[&RealSamples]) -> (Vec<f64>, f64) {
    let cols: Vec<Vec<f64>> = basis.iter().map(|b| b.values().to_vec()).collect();
    let (coef, residual) = lstsq(&cols, target.values())
        .unwrap_or_else(|| (vec![0.0; basis.len()], target.max_abs()));
    (coef, residual)
}

/// Dense normal-equation least squares for a handful of columns; returns the
/// coefficients and the max-norm residual, or None if singular.
fn lstsq(columns: &[Vec<f64>], target: &[f64]) -> Option<(Vec<f64>, f64)> {
    let k = columns.len();
    let n = target.len();
    let mut gram = vec![vec![0.0f64; k]; k];
    let mut rhs = vec![0.0f64; k];
    for i in 0..k {
        for j in 0..k {
            gram[i][j] = columns[i].iter().zip(&columns[j]).map(|(a, b)| a * b).sum();
        }
        rhs[i] = columns[i].iter().zip(target).map(|(a, b)| a * b).sum();
    }
    let scale = gram
        .iter()
        .flat_map(|r| r.iter())
        .fold(0.0f64, |a, &v| a.max(v.abs()));
    let coef = solve_dense(&mut gram, &mut rhs, scale)?;
    let mut residual = 0.0f64;
    for i in 0..n {
        let mut fit = 0.0;
        for (c, col) in coef.iter().zip(columns) {
            fit += c * col[i];
        }
        residual = residual.max((fit - target[i]).abs());
    }
    Some((coef, residual))
}

/// Gaussian elimination with partial pivoting on a small system.
fn solve_dense(a: &mut [Vec<f64>], b: &mut [f64], scale: f64) -> Option<Vec<f64>> {
    let k = b.len();
    for col in 0..k {
        let piv = (col..k).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[piv][col].abs() <= 1e-13 * scale.max(1e-300) {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..k {
            let f = a[row][col] / a[col][col];
            for c in col..k {
                a[row][c] -= f * a[col][c];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = vec![0.0f64; k];
    for col in (0..k).rev() {
        let mut acc = b[col];
        for c in col + 1..k {
            acc -= a[col][c] * x[c];
        }
        x[col] = acc / a[col][col];
    }
    Some(x)
}
