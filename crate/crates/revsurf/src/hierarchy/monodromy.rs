//! Periodic spinors from the monodromy of the linear problem
//! psi_x = (1/2) [[lambda, q], [-q, -lambda]] psi.
//!
//! The coefficient matrix is trace-free, so the period map M has det M = 1;
//! a closed (anti)periodic real solution exists iff an eigenvalue sits at +1
//! or -1. The integration runs RK4 on a trigonometrically refined grid so the
//! eigenvalue distance resolves well below the acceptance tolerance.

use super::Potential;
use crate::error::{Error, Result};
use crate::geometry::SpinorPair;
use crate::grid::Samples;

/// Default eigenvalue-distance tolerance for accepting a closed spinor.
pub const MONO_TOL: f64 = 1e-6;

/// Minimum number of RK4 steps per period: the eigenvalue distance resolves
/// like the square root of the trace error, so the period map needs ~1e-13
/// accuracy for a 1e-6 eigenvalue tolerance.
const MIN_STEPS: usize = 16384;

type Mat2 = [[f64; 2]; 2];

fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    [
        [
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
        ],
        [
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        ],
    ]
}

fn mat_axpy(m: &Mat2, k: &Mat2, h: f64) -> Mat2 {
    [
        [m[0][0] + h * k[0][0], m[0][1] + h * k[0][1]],
        [m[1][0] + h * k[1][0], m[1][1] + h * k[1][1]],
    ]
}

/// Coefficient matrix (1/2)[[lambda, q], [-q, -lambda]] applied to M.
fn coeff_apply(lambda: f64, q: f64, m: &Mat2) -> Mat2 {
    let a = [[0.5 * lambda, 0.5 * q], [-0.5 * q, -0.5 * lambda]];
    mat_mul(&a, m)
}

/// Integrate the linear problem over one period from the identity and return
/// the closed real solution sampled on the potential's grid, normalized so
/// max(r^2 + s^2) equals `scale`.
///
/// Errors with `NoClosedSpinor` when neither monodromy eigenvalue is within
/// `mono_tol` of +-1.
pub fn periodic_spinors(pot: &Potential, scale: f64, mono_tol: f64) -> Result<SpinorPair> {
    if !pot.q().domain().is_torus() {
        return Err(Error::DomainKind { expected: "torus" });
    }
    let n = pot.n();
    let lambda = pot.lambda();

    // refine so that midpoints exist: 2 * steps sample points
    let ups = MIN_STEPS.div_ceil(n).next_power_of_two().max(1);
    let fine = pot.q().refined(2 * ups);
    let qf = fine.values();
    let steps = ups * n;
    let h = pot.period() / steps as f64;

    let mut m: Mat2 = [[1.0, 0.0], [0.0, 1.0]];
    let stride = steps / n;
    let mut snapshots: Vec<Mat2> = Vec::with_capacity(n);
    for i in 0..steps {
        if i % stride == 0 {
            snapshots.push(m);
        }
        let q1 = qf[2 * i];
        let q2 = qf[2 * i + 1];
        let q3 = qf[(2 * i + 2) % (2 * steps)];
        let k1 = coeff_apply(lambda, q1, &m);
        let k2 = coeff_apply(lambda, q2, &mat_axpy(&m, &k1, 0.5 * h));
        let k3 = coeff_apply(lambda, q2, &mat_axpy(&m, &k2, 0.5 * h));
        let k4 = coeff_apply(lambda, q3, &mat_axpy(&m, &k3, h));
        m = [
            [
                m[0][0] + h / 6.0 * (k1[0][0] + 2.0 * (k2[0][0] + k3[0][0]) + k4[0][0]),
                m[0][1] + h / 6.0 * (k1[0][1] + 2.0 * (k2[0][1] + k3[0][1]) + k4[0][1]),
            ],
            [
                m[1][0] + h / 6.0 * (k1[1][0] + 2.0 * (k2[1][0] + k3[1][0]) + k4[1][0]),
                m[1][1] + h / 6.0 * (k1[1][1] + 2.0 * (k2[1][1] + k3[1][1]) + k4[1][1]),
            ],
        ];
    }

    let trace = m[0][0] + m[1][1];
    let sign = if (trace - 2.0).abs() <= (trace + 2.0).abs() {
        1.0
    } else {
        -1.0
    };
    // |mu -+ 1| ~ sqrt(|tr -+ 2|) for a det-1 map near the closing condition
    let dist = (trace - 2.0 * sign).abs().sqrt();
    if dist > mono_tol {
        return Err(Error::NoClosedSpinor {
            dist,
            tol: mono_tol,
            trace,
        });
    }

    // eigenvector of M for the eigenvalue at `sign`: null vector of M - sign I,
    // taken orthogonal to its larger row
    let b = [
        [m[0][0] - sign, m[0][1]],
        [m[1][0], m[1][1] - sign],
    ];
    let r0 = (b[0][0] * b[0][0] + b[0][1] * b[0][1]).sqrt();
    let r1 = (b[1][0] * b[1][0] + b[1][1] * b[1][1]).sqrt();
    let row = if r0 >= r1 { b[0] } else { b[1] };
    let norm = (row[0] * row[0] + row[1] * row[1]).sqrt();
    let mut v = if norm == 0.0 {
        // M = +-identity: every direction closes; pick the first axis
        [1.0, 0.0]
    } else {
        [-row[1] / norm, row[0] / norm]
    };
    // deterministic global sign
    if v[0] < 0.0 || (v[0] == 0.0 && v[1] < 0.0) {
        v = [-v[0], -v[1]];
    }

    let mut r = Vec::with_capacity(n);
    let mut s = Vec::with_capacity(n);
    let mut amp: f64 = 0.0;
    for snap in &snapshots {
        let ri = snap[0][0] * v[0] + snap[0][1] * v[1];
        let si = snap[1][0] * v[0] + snap[1][1] * v[1];
        amp = amp.max(ri * ri + si * si);
        r.push(ri);
        s.push(si);
    }
    let f = (scale / amp.max(1e-300)).sqrt();
    for (ri, si) in r.iter_mut().zip(s.iter_mut()) {
        *ri *= f;
        *si *= f;
    }
    Ok(SpinorPair {
        r: Samples::new(r, pot.q().domain())?,
        s: Samples::new(s, pot.q().domain())?,
        antiperiodic: sign < 0.0,
    })
}
