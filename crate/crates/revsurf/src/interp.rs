//! Resampling of non-uniformly parametrized data onto uniform grids.
//!
//! Conformal reparametrization produces samples at strictly increasing but
//! non-uniform parameter values; `resample` interpolates them onto the uniform
//! grid with a barycentric-weighted cubic (4-point sliding window, wrapped on
//! periodic targets). Fourier interpolation stays reserved for sources that
//! are already uniform (`Samples::refined`).

use crate::error::{Error, Result};
use crate::grid::{Domain, RealSamples, Samples};

/// Target grid for [`resample`].
#[derive(Clone, Copy, Debug)]
pub struct GridSpec {
    pub n: usize,
    pub domain: Domain,
}

/// Interpolate `(param, values)` onto the uniform target grid.
///
/// The source must be strictly increasing and cover one period: on a torus
/// target the last interval wraps around to `param[0] + period`; on a line
/// target the source must bracket the whole window.
pub fn resample(param: &[f64], values: &[f64], target: GridSpec) -> Result<RealSamples> {
    resample_with_drift(param, values, 0.0, target)
}

/// Like [`resample`] for values that gain a fixed increment per period
/// (v(x + T) = v(x) + drift), e.g. the axial coordinate of a cylinder-like
/// profile: interpolation windows crossing the seam see the drifted values.
pub fn resample_with_drift(
    param: &[f64],
    values: &[f64],
    drift: f64,
    target: GridSpec,
) -> Result<RealSamples> {
    if param.len() != values.len() {
        return Err(Error::InvalidGrid(format!(
            "parameter/value length mismatch: {} vs {}",
            param.len(),
            values.len()
        )));
    }
    if param.len() < 4 {
        return Err(Error::InvalidGrid("need at least 4 source samples".into()));
    }
    for i in 1..param.len() {
        if param[i] <= param[i - 1] {
            return Err(Error::NonMonotoneParameter(i));
        }
    }
    target.domain.validate_pub()?;
    let period = target.domain.period();
    let x0 = target.domain.origin();
    let m = param.len();

    if target.domain.is_torus() {
        let span = param[m - 1] - param[0];
        if span >= period {
            return Err(Error::InvalidGrid(format!(
                "source span {span} reaches or exceeds the target period {period}"
            )));
        }
    } else if param[0] > x0 || param[m - 1] < x0 + period {
        return Err(Error::InvalidGrid(
            "source does not cover the line window".into(),
        ));
    }

    let h = period / target.n as f64;
    let mut out = Vec::with_capacity(target.n);
    // node accessor with periodic extension (and value drift) on torus targets
    let node = |j: i64| -> (f64, f64) {
        if target.domain.is_torus() {
            let mm = m as i64;
            let wrap = j.div_euclid(mm);
            let idx = j.rem_euclid(mm) as usize;
            (
                param[idx] + wrap as f64 * period,
                values[idx] + wrap as f64 * drift,
            )
        } else {
            let idx = j.clamp(0, m as i64 - 1) as usize;
            (param[idx], values[idx])
        }
    };

    let mut seg = 0usize; // marching index: param[seg] <= x < param[seg+1] (mod wrap)
    for i in 0..target.n {
        let mut x = x0 + i as f64 * h;
        if target.domain.is_torus() {
            // map into [param[0], param[0] + period)
            let rel = (x - param[0]).rem_euclid(period);
            x = param[0] + rel;
            while seg + 1 < m && param[seg + 1] <= x {
                seg += 1;
            }
        } else {
            while seg + 2 < m && param[seg + 1] <= x {
                seg += 1;
            }
        }
        let base = if target.domain.is_torus() {
            seg as i64
        } else {
            (seg as i64 - 1).clamp(0, m as i64 - 4)
        };
        let window: [(f64, f64); 4] = if target.domain.is_torus() {
            [node(base - 1), node(base), node(base + 1), node(base + 2)]
        } else {
            [node(base), node(base + 1), node(base + 2), node(base + 3)]
        };
        out.push(barycentric4(x, &window));
    }
    Samples::new(out, target.domain)
}

/// Barycentric Lagrange interpolation through 4 nodes.
fn barycentric4(x: f64, nodes: &[(f64, f64); 4]) -> f64 {
    let mut num = 0.0;
    let mut den = 0.0;
    for (j, &(xj, vj)) in nodes.iter().enumerate() {
        let dx = x - xj;
        if dx.abs() < 1e-14 * (1.0 + xj.abs()) {
            return vj;
        }
        let mut w = 1.0;
        for (k, &(xk, _)) in nodes.iter().enumerate() {
            if k != j {
                w /= xj - xk;
            }
        }
        num += w / dx * vj;
        den += w / dx;
    }
    num / den
}

impl Domain {
    pub(crate) fn validate_pub(&self) -> Result<()> {
        let p = self.period();
        if !(p.is_finite() && p > 0.0) {
            return Err(Error::InvalidGrid(format!("period {p} must be positive")));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::max_diff;
    use std::f64::consts::PI;

    #[test]
    fn identity_resample_is_exact() {
        let d = Domain::Torus { period: 2.0 * PI };
        let src = Samples::from_fn(d, 256, f64::sin).unwrap();
        let param: Vec<f64> = src.xs();
        let out = resample(
            &param,
            src.values(),
            GridSpec { n: 256, domain: d },
        )
        .unwrap();
        assert!(max_diff(&out, &src) < 1e-12);
    }

    #[test]
    fn nonuniform_sine_resamples_to_1e8() {
        // 4096 non-uniform samples of sin on [0, 2pi) -> uniform 256 grid
        let d = Domain::Torus { period: 2.0 * PI };
        let m = 4096;
        let param: Vec<f64> = (0..m)
            .map(|i| {
                let t = 2.0 * PI * i as f64 / m as f64;
                t + 0.3 * (1.0 - (t / (2.0 * PI))) * t / (2.0 * PI) * (2.0 * PI - t) / 3.0
            })
            .collect();
        let values: Vec<f64> = param.iter().map(|&t| t.sin()).collect();
        let out = resample(&param, &values, GridSpec { n: 256, domain: d }).unwrap();
        let want = Samples::from_fn(d, 256, f64::sin).unwrap();
        let err = max_diff(&out, &want);
        assert!(err < 1e-8, "err {err}");
    }

    #[test]
    fn decreasing_parameter_is_rejected() {
        let d = Domain::Torus { period: 1.0 };
        let param = [0.0, 0.2, 0.1, 0.4, 0.5, 0.6, 0.7, 0.8];
        let values = [0.0; 8];
        assert!(matches!(
            resample(&param, &values, GridSpec { n: 8, domain: d }),
            Err(Error::NonMonotoneParameter(2))
        ));
    }

    #[test]
    fn line_target_interpolates_interior() {
        let d = Domain::Line { half_width: 1.0 };
        let m = 2048;
        let param: Vec<f64> = (0..m)
            .map(|i| -1.0 + 2.0 * (i as f64 / (m - 1) as f64).powf(1.1))
            .collect();
        let values: Vec<f64> = param.iter().map(|&t| (2.0 * t).cos()).collect();
        let out = resample(&param, &values, GridSpec { n: 128, domain: d }).unwrap();
        let want = Samples::from_fn(d, 128, |x| (2.0 * x).cos()).unwrap();
        assert!(max_diff(&out, &want) < 1e-8);
    }
}
