use thiserror::Error;

/// Crate-wide error type. Variants mirror the failure modes of the numerical
/// layers: grid construction, antidifferentiation, profile extraction, spectral
/// ODE closure, and flow integration.
#[derive(Debug, Error)]
pub enum Error {
    /// Grid constraints violated (size, parity, period positivity, finiteness).
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    /// The zero-mean antiderivative was requested for a function that is not a
    /// total derivative: |mean| = {mean:.3e} exceeds {tol:.3e} (relative to the
    /// max norm).
    #[error("antiderivative of non-derivative: |mean| = {mean:.3e} > tol = {tol:.3e}")]
    NonZeroMean { mean: f64, tol: f64 },

    /// Resampling source parameter is not strictly increasing at index {0}.
    #[error("source parameter is not strictly increasing at index {0}")]
    NonMonotoneParameter(usize),

    /// The generating curve touches or crosses the revolution axis.
    #[error("profile touches the axis: min radial coordinate = {0:.3e}")]
    AxisContact(f64),

    /// A requested tolerance could not be met ({what}: {achieved:.3e} > {tol:.3e}).
    #[error("{what}: achieved {achieved:.3e} exceeds tolerance {tol:.3e}")]
    ToleranceNotMet {
        what: &'static str,
        achieved: f64,
        tol: f64,
    },

    /// The slope function tau violates tau^2 <= 1 (max tau^2 = {0}).
    #[error("slope bound violated: max tau^2 = {0:.6}")]
    SlopeBound(f64),

    /// tau has nonzero mean on a torus domain, so exp(int tau) is not periodic.
    #[error("theta not periodic: |mean tau| = {0:.3e}")]
    NonPeriodicTheta(f64),

    /// phi_x vanishes at a sample where theta - theta_xx does not, so the
    /// potential blows up there.
    #[error("potential branch singularity at x = {x:.6}: |phi_x| = {phi_x:.3e} but |theta - theta_xx| = {num:.3e}")]
    BranchSingularity { x: f64, phi_x: f64, num: f64 },

    /// Operation requires the other domain kind (torus vs. truncated line).
    #[error("operation requires a {expected} domain")]
    DomainKind { expected: &'static str },

    /// Preset parameter outside its admissible range.
    #[error("preset parameter out of range: {0}")]
    ParameterDomain(String),

    /// Kruskal recursion depth beyond the supported numerical limit.
    #[error("invariant depth {requested} exceeds the supported limit {max}")]
    DepthLimit { requested: usize, max: usize },

    /// Least-squares normal equations are singular (e.g. constant potential).
    #[error("stationarity fit is degenerate: {0}")]
    DegenerateFit(String),

    /// No monodromy eigenvalue within tolerance of +-1: the potential does not
    /// close up into a surface at this scale convention.
    #[error("no closed spinor: monodromy eigenvalue distance {dist:.3e} exceeds {tol:.3e} (trace = {trace:.12})")]
    NoClosedSpinor { dist: f64, tol: f64, trace: f64 },

    /// Flow integration exceeded the overflow guard.
    #[error("flow instability at t = {t:.6}: max |q| = {max_abs:.3e}")]
    Instability { t: f64, max_abs: f64 },

    /// Inversion center lies on (or too close to) the surface.
    #[error("inversion center p = {p} lies on the surface: min squared distance {min_dist:.3e}")]
    CenterOnSurface { p: f64, min_dist: f64 },

    /// Profile CSV could not be parsed.
    #[error("profile file: {0}")]
    ProfileFile(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
