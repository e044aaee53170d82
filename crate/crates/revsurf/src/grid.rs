//! Uniform-grid spectral calculus on periodic and truncated-line domains.
//!
//! Everything downstream (profiles, the hierarchy, transforms) moves through
//! [`Samples`]: a function sampled on a uniform grid over one period.
//! Differentiation and the zero-mean antiderivative act in Fourier space;
//! quadrature is the rectangle rule, which is spectrally accurate for smooth
//! periodic integrands. A truncated line [-L, L] is embedded as one period of
//! length 2L once the data decays at the endpoints.

use std::cell::RefCell;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::error::{Error, Result};

/// Minimum grid size; below this the spectral ops are meaningless.
pub const MIN_GRID: usize = 8;

/// Default relative tolerance on |mean f| for the zero-mean antiderivative.
pub const MEAN_TOL: f64 = 1e-9;

/// Domain descriptor: a genuine period, or a truncated line embedded as one.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Domain {
    /// Periodic domain; grid points x_i = i * period / n.
    Torus { period: f64 },
    /// Truncated line [-half_width, half_width] treated as one period of
    /// length 2 * half_width; grid points x_i = -half_width + i * h.
    Line { half_width: f64 },
}

impl Domain {
    pub fn period(&self) -> f64 {
        match *self {
            Domain::Torus { period } => period,
            Domain::Line { half_width } => 2.0 * half_width,
        }
    }

    /// Coordinate of grid point 0.
    pub fn origin(&self) -> f64 {
        match *self {
            Domain::Torus { .. } => 0.0,
            Domain::Line { half_width } => -half_width,
        }
    }

    pub fn is_torus(&self) -> bool {
        matches!(self, Domain::Torus { .. })
    }

    /// Same kind and period up to roundoff; numerically derived periods can
    /// differ in the last few ulps from closed-form ones.
    pub fn compatible(&self, other: &Domain) -> bool {
        let same_kind = matches!(
            (self, other),
            (Domain::Torus { .. }, Domain::Torus { .. })
                | (Domain::Line { .. }, Domain::Line { .. })
        );
        let (a, b) = (self.period(), other.period());
        same_kind && (a - b).abs() <= 1e-9 * a.abs().max(b.abs())
    }

    fn validate(&self) -> Result<()> {
        let p = self.period();
        if !(p.is_finite() && p > 0.0) {
            return Err(Error::InvalidGrid(format!("period {p} must be positive")));
        }
        Ok(())
    }
}

mod sealed {
    pub trait Sealed {}
    impl Sealed for f64 {}
    impl Sealed for num_complex::Complex64 {}
}

/// Scalar types storable on a grid: `f64` and `Complex64`.
pub trait Scalar:
    sealed::Sealed
    + Copy
    + std::fmt::Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    const ZERO: Self;
    fn into_complex(self) -> Complex64;
    /// Projection used when returning from Fourier space.
    fn from_complex(z: Complex64) -> Self;
    fn is_finite_scalar(self) -> bool;
    fn abs_scalar(self) -> f64;
    fn scale(self, k: f64) -> Self;
}

impl Scalar for f64 {
    const ZERO: f64 = 0.0;
    fn into_complex(self) -> Complex64 {
        Complex64::new(self, 0.0)
    }
    fn from_complex(z: Complex64) -> f64 {
        z.re
    }
    fn is_finite_scalar(self) -> bool {
        self.is_finite()
    }
    fn abs_scalar(self) -> f64 {
        self.abs()
    }
    fn scale(self, k: f64) -> f64 {
        self * k
    }
}

impl Scalar for Complex64 {
    const ZERO: Complex64 = Complex64::new(0.0, 0.0);
    fn into_complex(self) -> Complex64 {
        self
    }
    fn from_complex(z: Complex64) -> Complex64 {
        z
    }
    fn is_finite_scalar(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
    fn abs_scalar(self) -> f64 {
        self.norm()
    }
    fn scale(self, k: f64) -> Complex64 {
        self * k
    }
}

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

pub(crate) fn plan_forward(n: usize) -> Arc<dyn Fft<f64>> {
    PLANNER.with(|p| p.borrow_mut().plan_fft_forward(n))
}

pub(crate) fn plan_inverse(n: usize) -> Arc<dyn Fft<f64>> {
    PLANNER.with(|p| p.borrow_mut().plan_fft_inverse(n))
}

/// Signed integer wavenumber of FFT bin `i` on an `n`-point grid.
pub(crate) fn wavenumber(i: usize, n: usize) -> i64 {
    if i <= n / 2 {
        i as i64
    } else {
        i as i64 - n as i64
    }
}

/// A function sampled on a uniform grid over one period.
#[derive(Clone, Debug, PartialEq)]
pub struct Samples<T = f64> {
    values: Vec<T>,
    domain: Domain,
}

pub type RealSamples = Samples<f64>;
pub type ComplexSamples = Samples<Complex64>;

impl<T: Scalar> Samples<T> {
    /// Validating constructor: n >= 8, n even, positive period, finite values.
    pub fn new(values: Vec<T>, domain: Domain) -> Result<Self> {
        domain.validate()?;
        let n = values.len();
        if n < MIN_GRID {
            return Err(Error::InvalidGrid(format!("n = {n} < {MIN_GRID}")));
        }
        if n % 2 != 0 {
            return Err(Error::InvalidGrid(format!("n = {n} must be even")));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite_scalar()) {
            return Err(Error::InvalidGrid(format!("non-finite value at index {i}")));
        }
        Ok(Samples { values, domain })
    }

    /// Sample a closure at the grid points.
    pub fn from_fn(domain: Domain, n: usize, f: impl Fn(f64) -> T) -> Result<Self> {
        let h = domain.period() / n as f64;
        let x0 = domain.origin();
        let values = (0..n).map(|i| f(x0 + i as f64 * h)).collect();
        Samples::new(values, domain)
    }

    pub(crate) fn from_parts(values: Vec<T>, domain: Domain) -> Self {
        debug_assert!(values.len() >= MIN_GRID && values.len() % 2 == 0);
        Samples { values, domain }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn period(&self) -> f64 {
        self.domain.period()
    }

    /// Grid spacing period / n.
    pub fn spacing(&self) -> f64 {
        self.domain.period() / self.n() as f64
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    /// Coordinate of grid point `i`.
    pub fn x(&self, i: usize) -> f64 {
        self.domain.origin() + i as f64 * self.spacing()
    }

    pub fn xs(&self) -> Vec<f64> {
        (0..self.n()).map(|i| self.x(i)).collect()
    }

    pub fn map(&self, f: impl Fn(T) -> T) -> Self {
        Samples {
            values: self.values.iter().map(|&v| f(v)).collect(),
            domain: self.domain,
        }
    }

    pub fn zip_map(&self, other: &Self, f: impl Fn(T, T) -> T) -> Self {
        assert!(
            self.domain.compatible(&other.domain) && self.n() == other.n(),
            "domain mismatch"
        );
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Samples {
            values,
            domain: self.domain,
        }
    }

    pub fn all_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite_scalar())
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.abs_scalar()).fold(0.0, f64::max)
    }

    pub fn mean(&self) -> T {
        let sum = self.values.iter().fold(T::ZERO, |acc, &v| acc + v);
        sum.scale(1.0 / self.n() as f64)
    }

    /// Rectangle-rule quadrature over one period (spectrally accurate for
    /// smooth periodic integrands).
    pub fn integrate(&self) -> T {
        self.mean().scale(self.period())
    }

    pub fn scale(&self, k: f64) -> Self {
        self.map(|v| v.scale(k))
    }

    fn spectrum(&self) -> Vec<Complex64> {
        let mut buf: Vec<Complex64> = self.values.iter().map(|v| v.into_complex()).collect();
        plan_forward(buf.len()).process(&mut buf);
        buf
    }

    fn from_spectrum(mut buf: Vec<Complex64>, domain: Domain) -> Self {
        let n = buf.len();
        plan_inverse(n).process(&mut buf);
        let inv = 1.0 / n as f64;
        let values = buf.into_iter().map(|z| T::from_complex(z * inv)).collect();
        Samples { values, domain }
    }

    /// Spectral derivative of the trigonometric interpolant. For odd orders the
    /// unpaired Nyquist mode is zeroed.
    pub fn derivative_n(&self, order: u32) -> Self {
        let n = self.n();
        let scale = 2.0 * std::f64::consts::PI / self.period();
        let mut buf = self.spectrum();
        for (i, c) in buf.iter_mut().enumerate() {
            let k = wavenumber(i, n);
            if order % 2 == 1 && 2 * i == n {
                *c = Complex64::new(0.0, 0.0);
            } else {
                let ik = Complex64::new(0.0, k as f64 * scale);
                *c *= ik.powu(order);
            }
        }
        Samples::from_spectrum(buf, self.domain)
    }

    pub fn derivative(&self) -> Self {
        self.derivative_n(1)
    }

    /// The canonical branch of the many-valued antidifferentiation: returns g
    /// with g' = f - mean(f) and mean(g) = 0. Errors unless |mean f| is below
    /// `tol` relative to the max norm (f must be a total derivative).
    pub fn antiderivative_zero_mean_with_tol(&self, tol: f64) -> Result<Self> {
        let mean = self.mean().abs_scalar();
        let floor = self.max_abs().max(1e-300);
        if mean > tol * floor {
            return Err(Error::NonZeroMean {
                mean,
                tol: tol * floor,
            });
        }
        Ok(self.antiderivative_unchecked())
    }

    pub fn antiderivative_zero_mean(&self) -> Result<Self> {
        self.antiderivative_zero_mean_with_tol(MEAN_TOL)
    }

    /// Zero-mean antiderivative of f - mean(f), without the mean precondition.
    pub(crate) fn antiderivative_unchecked(&self) -> Self {
        let n = self.n();
        let scale = 2.0 * std::f64::consts::PI / self.period();
        let mut buf = self.spectrum();
        buf[0] = Complex64::new(0.0, 0.0);
        for (i, c) in buf.iter_mut().enumerate().skip(1) {
            if 2 * i == n {
                *c = Complex64::new(0.0, 0.0);
            } else {
                let k = wavenumber(i, n);
                *c /= Complex64::new(0.0, k as f64 * scale);
            }
        }
        Samples::from_spectrum(buf, self.domain)
    }

    /// Cumulative integral F(x) = int_{x_0}^{x} f, F(x_0) = 0. On a torus the
    /// mean part grows linearly and the rest is the zero-mean antiderivative;
    /// on a line domain a local degree-7 composite rule is used so that
    /// non-periodic integrands (e.g. tau approaching different limits at the
    /// two ends) are handled without Gibbs artifacts.
    pub fn cumulative(&self) -> Self
    where
        T: Scalar,
    {
        match self.domain {
            Domain::Torus { .. } => {
                let mean = self.mean();
                let anti = self.antiderivative_unchecked();
                let a0 = anti.values[0];
                let h = self.spacing();
                let values = anti
                    .values
                    .iter()
                    .enumerate()
                    .map(|(i, &a)| a - a0 + mean.scale(i as f64 * h))
                    .collect();
                Samples {
                    values,
                    domain: self.domain,
                }
            }
            Domain::Line { .. } => self.cumulative_local(),
        }
    }

    /// Composite cumulative quadrature: integrate the degree-7 interpolant over
    /// each cell, stencils clamped at the ends. O(h^8) without periodicity.
    fn cumulative_local(&self) -> Self {
        let n = self.n();
        let h = self.spacing();
        let mut out = Vec::with_capacity(n);
        let mut acc = T::ZERO;
        out.push(acc);
        for i in 0..n - 1 {
            let start = i.saturating_sub(3).min(n - 8);
            let pos = i - start;
            let mut cell = T::ZERO;
            for (j, &w) in INT8_WEIGHTS[pos].iter().enumerate() {
                cell = cell + self.values[start + j].scale(w);
            }
            acc = acc + cell.scale(h);
            out.push(acc);
        }
        Samples {
            values: out,
            domain: self.domain,
        }
    }

    /// Trigonometric upsampling by zero-padding the spectrum.
    pub fn refined(&self, factor: usize) -> Self {
        assert!(factor >= 1);
        let n = self.n();
        let m = n * factor;
        let spec = self.spectrum();
        let mut big = vec![Complex64::new(0.0, 0.0); m];
        for i in 0..n {
            let k = wavenumber(i, n);
            if 2 * i == n {
                // split the Nyquist coefficient between +-n/2
                big[n / 2] += spec[i] * 0.5;
                big[m - n / 2] += spec[i] * 0.5;
            } else {
                let j = if k >= 0 { k as usize } else { (m as i64 + k) as usize };
                big[j] = spec[i];
            }
        }
        let amp = factor as f64;
        let mut s = Samples::<T>::from_spectrum(big, self.domain);
        for v in &mut s.values {
            *v = v.scale(amp);
        }
        s
    }

    /// Evaluate the trigonometric interpolant at the grid translated by
    /// `delta` (periodic Fourier shift).
    pub fn shifted(&self, delta: f64) -> Self {
        let n = self.n();
        let scale = 2.0 * std::f64::consts::PI / self.period();
        let mut buf = self.spectrum();
        for (i, c) in buf.iter_mut().enumerate() {
            if 2 * i == n {
                // keep the Nyquist mode real under the shift
                *c *= (wavenumber(i, n) as f64 * scale * delta).cos();
            } else {
                let k = wavenumber(i, n) as f64;
                *c *= Complex64::from_polar(1.0, k * scale * delta);
            }
        }
        Samples::from_spectrum(buf, self.domain)
    }
}

impl<T: Scalar> Samples<T> {
    /// Local 8th-order first derivative (9-point stencils, clamped at the
    /// ends). Used on line domains: the truncation seam always carries a kink
    /// of the decay-tolerance size, which the spectral route would smear into
    /// global ringing, while a local stencil never crosses the seam.
    pub fn derivative_local(&self) -> Self {
        let n = self.n();
        let h = self.spacing();
        assert!(n >= 9, "local stencil needs at least 9 points");
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let start = i.saturating_sub(4).min(n - 9);
            let pos = i - start;
            let mut acc = T::ZERO;
            for (j, &w) in FD9_D1[pos].iter().enumerate() {
                acc = acc + self.values[start + j].scale(w);
            }
            out.push(acc.scale(1.0 / h));
        }
        Samples {
            values: out,
            domain: self.domain,
        }
    }

    /// Domain-adapted derivative: spectral on tori, local stencils on line
    /// domains.
    pub fn dx(&self) -> Self {
        match self.domain {
            Domain::Torus { .. } => self.derivative(),
            Domain::Line { .. } => self.derivative_local(),
        }
    }

    /// Repeated domain-adapted derivative.
    pub fn dx_n(&self, order: u32) -> Self {
        match self.domain {
            Domain::Torus { .. } => self.derivative_n(order),
            Domain::Line { .. } => {
                let mut out = self.derivative_local();
                for _ in 1..order {
                    out = out.derivative_local();
                }
                out
            }
        }
    }
}

impl Samples<f64> {
    pub fn to_complex(&self) -> ComplexSamples {
        Samples {
            values: self.values.iter().map(|&v| v.into_complex()).collect(),
            domain: self.domain,
        }
    }

    /// Spectral derivative for antiperiodic data f(x + T) = -f(x): demodulate
    /// by the half mode e^{-i pi (x - x0)/T} (making the samples periodic),
    /// differentiate, remodulate: f' = e^{i w x}(g' + i w g) with w = pi/T.
    pub fn derivative_antiperiodic(&self) -> Self {
        let n = self.n();
        let t = self.period();
        let w = std::f64::consts::PI / t;
        let h = self.spacing();
        let g: Vec<Complex64> = (0..n)
            .map(|i| Complex64::from_polar(1.0, -w * i as f64 * h) * self.values[i])
            .collect();
        let mut buf = g.clone();
        plan_forward(n).process(&mut buf);
        let scale = 2.0 * std::f64::consts::PI / t;
        for (i, c) in buf.iter_mut().enumerate() {
            if 2 * i == n {
                *c = Complex64::new(0.0, 0.0);
            } else {
                *c *= Complex64::new(0.0, wavenumber(i, n) as f64 * scale);
            }
        }
        plan_inverse(n).process(&mut buf);
        let inv = 1.0 / n as f64;
        let values = (0..n)
            .map(|i| {
                let gp = buf[i] * inv;
                let phase = Complex64::from_polar(1.0, w * i as f64 * h);
                (phase * (gp + Complex64::new(0.0, w) * g[i])).re
            })
            .collect();
        Samples {
            values,
            domain: self.domain,
        }
    }

    /// Largest-magnitude Fourier coefficient in the top octave relative to the
    /// overall largest; small iff the grid resolves the data (and, on line
    /// domains, iff the periodic embedding is smooth).
    pub fn spectral_tail(&self) -> f64 {
        let n = self.n();
        let spec = self.spectrum();
        let mut top = 0.0f64;
        let mut all = 0.0f64;
        for (i, c) in spec.iter().enumerate() {
            let k = wavenumber(i, n).unsigned_abs() as usize;
            let a = c.norm();
            all = all.max(a);
            if k >= n / 4 {
                top = top.max(a);
            }
        }
        if all == 0.0 {
            0.0
        } else {
            top / all
        }
    }
}

impl ComplexSamples {
    pub fn re(&self) -> RealSamples {
        Samples {
            values: self.values.iter().map(|z| z.re).collect(),
            domain: self.domain,
        }
    }

    pub fn im(&self) -> RealSamples {
        Samples {
            values: self.values.iter().map(|z| z.im).collect(),
            domain: self.domain,
        }
    }

    pub fn max_imag(&self) -> f64 {
        self.values.iter().map(|z| z.im.abs()).fold(0.0, f64::max)
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl<'a, T: Scalar> $trait<&'a Samples<T>> for &'a Samples<T> {
            type Output = Samples<T>;
            fn $method(self, rhs: &'a Samples<T>) -> Samples<T> {
                self.zip_map(rhs, |a, b| a $op b)
            }
        }
    };
}

impl_binop!(Add, add, +);
impl_binop!(Sub, sub, -);
impl_binop!(Mul, mul, *);

impl<'a, T: Scalar> Neg for &'a Samples<T> {
    type Output = Samples<T>;
    fn neg(self) -> Samples<T> {
        self.map(|v| -v)
    }
}

/// Max-norm of the pointwise difference.
pub fn max_diff<T: Scalar>(a: &Samples<T>, b: &Samples<T>) -> f64 {
    assert!(
        a.domain().compatible(&b.domain()) && a.n() == b.n(),
        "domain mismatch"
    );
    a.values()
        .iter()
        .zip(b.values())
        .map(|(&x, &y)| (x - y).abs_scalar())
        .fold(0.0, f64::max)
}

/// Best circular alignment of `f` against `g`: the shift delta minimizing
/// max|f - g(. + delta)|, found by a coarse grid scan refined by golden
/// section. Returns (delta, max error at delta).
pub fn circular_align(f: &RealSamples, g: &RealSamples) -> (f64, f64) {
    assert!(
        f.domain().compatible(&g.domain()) && f.n() == g.n(),
        "domain mismatch"
    );
    let n = f.n();
    let h = f.spacing();
    // grid shifts are pure rotations of the sample vector
    let mut best = (0usize, f64::INFINITY);
    for s in 0..n {
        let mut m = 0.0f64;
        for i in 0..n {
            m = m.max((f.values()[i] - g.values()[(i + s) % n]).abs());
        }
        if m < best.1 {
            best = (s, m);
        }
    }
    let err_at = |d: f64| max_diff(f, &g.shifted(d));
    let (mut a, mut b) = (best.0 as f64 * h - h, best.0 as f64 * h + h);
    const PHI: f64 = 0.618_033_988_749_894_9;
    for _ in 0..90 {
        let m1 = b - PHI * (b - a);
        let m2 = a + PHI * (b - a);
        if err_at(m1) < err_at(m2) {
            b = m2;
        } else {
            a = m1;
        }
    }
    let d = 0.5 * (a + b);
    (d, err_at(d))
}

/// 9-point 8th-order first-derivative weights; row = evaluation position
/// within the stencil, divide by h.
const FD9_D1: [[f64; 9]; 9] = [
    [
        -761.0 / 280.0,
        8.0,
        -14.0,
        56.0 / 3.0,
        -35.0 / 2.0,
        56.0 / 5.0,
        -14.0 / 3.0,
        8.0 / 7.0,
        -1.0 / 8.0,
    ],
    [
        -1.0 / 8.0,
        -223.0 / 140.0,
        7.0 / 2.0,
        -7.0 / 2.0,
        35.0 / 12.0,
        -7.0 / 4.0,
        7.0 / 10.0,
        -1.0 / 6.0,
        1.0 / 56.0,
    ],
    [
        1.0 / 56.0,
        -2.0 / 7.0,
        -19.0 / 20.0,
        2.0,
        -5.0 / 4.0,
        2.0 / 3.0,
        -1.0 / 4.0,
        2.0 / 35.0,
        -1.0 / 168.0,
    ],
    [
        -1.0 / 168.0,
        1.0 / 14.0,
        -1.0 / 2.0,
        -9.0 / 20.0,
        5.0 / 4.0,
        -1.0 / 2.0,
        1.0 / 6.0,
        -1.0 / 28.0,
        1.0 / 280.0,
    ],
    [
        1.0 / 280.0,
        -4.0 / 105.0,
        1.0 / 5.0,
        -4.0 / 5.0,
        0.0,
        4.0 / 5.0,
        -1.0 / 5.0,
        4.0 / 105.0,
        -1.0 / 280.0,
    ],
    [
        -1.0 / 280.0,
        1.0 / 28.0,
        -1.0 / 6.0,
        1.0 / 2.0,
        -5.0 / 4.0,
        9.0 / 20.0,
        1.0 / 2.0,
        -1.0 / 14.0,
        1.0 / 168.0,
    ],
    [
        1.0 / 168.0,
        -2.0 / 35.0,
        1.0 / 4.0,
        -2.0 / 3.0,
        5.0 / 4.0,
        -2.0,
        19.0 / 20.0,
        2.0 / 7.0,
        -1.0 / 56.0,
    ],
    [
        -1.0 / 56.0,
        1.0 / 6.0,
        -7.0 / 10.0,
        7.0 / 4.0,
        -35.0 / 12.0,
        7.0 / 2.0,
        -7.0 / 2.0,
        223.0 / 140.0,
        1.0 / 8.0,
    ],
    [
        1.0 / 8.0,
        -8.0 / 7.0,
        14.0 / 3.0,
        -56.0 / 5.0,
        35.0 / 2.0,
        -56.0 / 3.0,
        14.0,
        -8.0,
        761.0 / 280.0,
    ],
];

/// Integral of the degree-7 interpolant on 8 nodes over cell [k, k+1];
/// row = cell position within the stencil, multiply by h.
const INT8_WEIGHTS: [[f64; 8]; 7] = [
    [
        5257.0 / 17280.0,
        139849.0 / 120960.0,
        -4511.0 / 4480.0,
        123133.0 / 120960.0,
        -88547.0 / 120960.0,
        1537.0 / 4480.0,
        -11351.0 / 120960.0,
        275.0 / 24192.0,
    ],
    [
        -275.0 / 24192.0,
        5311.0 / 13440.0,
        11261.0 / 13440.0,
        -44797.0 / 120960.0,
        2987.0 / 13440.0,
        -1283.0 / 13440.0,
        2999.0 / 120960.0,
        -13.0 / 4480.0,
    ],
    [
        13.0 / 4480.0,
        -4183.0 / 120960.0,
        6403.0 / 13440.0,
        9077.0 / 13440.0,
        -20227.0 / 120960.0,
        803.0 / 13440.0,
        -191.0 / 13440.0,
        191.0 / 120960.0,
    ],
    [
        -191.0 / 120960.0,
        1879.0 / 120960.0,
        -353.0 / 4480.0,
        68323.0 / 120960.0,
        68323.0 / 120960.0,
        -353.0 / 4480.0,
        1879.0 / 120960.0,
        -191.0 / 120960.0,
    ],
    [
        191.0 / 120960.0,
        -191.0 / 13440.0,
        803.0 / 13440.0,
        -20227.0 / 120960.0,
        9077.0 / 13440.0,
        6403.0 / 13440.0,
        -4183.0 / 120960.0,
        13.0 / 4480.0,
    ],
    [
        -13.0 / 4480.0,
        2999.0 / 120960.0,
        -1283.0 / 13440.0,
        2987.0 / 13440.0,
        -44797.0 / 120960.0,
        11261.0 / 13440.0,
        5311.0 / 13440.0,
        -275.0 / 24192.0,
    ],
    [
        275.0 / 24192.0,
        -11351.0 / 120960.0,
        1537.0 / 4480.0,
        -88547.0 / 120960.0,
        123133.0 / 120960.0,
        -4511.0 / 4480.0,
        139849.0 / 120960.0,
        5257.0 / 17280.0,
    ],
];
