#![forbid(unsafe_code)]

//! Systems of integer translates of a square-integrable function, computed
//! through their frequency-side objects.
//!
//! The library makes four families of objects computable at desk scale:
//!
//! * [`set`]: exact algebra of finite unions of rational subintervals of
//!   `[0,1)` (measurable sets modulo null sets), fat Cantor sets, and the
//!   analytic Fourier coefficients of their indicator functions;
//! * [`fourier`]: symmetric partial sums `S_n`, Fejér means, windowed
//!   (`U^∞`-style) sums, and certified supremum estimation of trigonometric
//!   polynomials on interval regions;
//! * [`periodization`]: spectra `ψ̂` as piecewise closed forms with decay
//!   envelopes, the periodization function `p_ψ(ξ) = Σ_k |ψ̂(ξ+k)|²` with a
//!   certified truncation tail, and the independence classification read off
//!   a sampled `p_ψ`;
//! * [`independence`]: the norm identity
//!   `‖Σ_{|k|≤n} c_k T_kψ‖₂² = ∫₀¹ |m_c|² p_ψ`, its time-domain quadrature
//!   oracle, dependence witnesses `c_k = f̂(−k)`, the Cesàro probe, and the
//!   nice-function probe.
//!
//! Everything is deterministic: identical inputs produce bit-identical
//! outputs.  Suprema come with certified upper bounds (grid maximum plus a
//! derivative modulus times the grid spacing), infinite sums come with
//! certified tail bounds from decay envelopes, and quantities that a finite
//! computation cannot decide (uniform boundedness over all `n`, positivity
//! almost everywhere) are reported as evidence with the raw data attached,
//! never as verdicts.
//!
//! The `translates` binary (see [`cli`]) exposes the same operations as
//! batch subcommands emitting CSV; the `examples/` directory contains one
//! runnable walkthrough per capability.

pub mod cli;
pub mod fourier;
mod hull;
pub mod independence;
mod kahan;
pub mod periodization;
pub mod quad;
pub mod set;

pub use fourier::{
    boundedness_profile, sup_on_set, u_norm_estimate, BoundednessProfile, CoefficientWindow,
    SupEstimate,
};
pub use independence::{
    cesaro_independence_probe, combination_norm, dependence_witness, nice_function_probe,
    time_domain_norm_oracle, Candidate, CombinationNorm, DependenceWitness, NiceProbeReport,
};
pub use periodization::{
    classify, periodization_grid, periodize, spectrum_from_set, ClassificationReport,
    PeriodizationGrid, SpectrumDescriptor, TailModel,
};
pub use set::{CantorSpec, IntervalSet, Rational};

/// Errors for every operation in the crate.
///
/// Two broad classes matter to callers (and to the CLI exit codes):
/// validation errors (malformed inputs, violated preconditions) and
/// numerical-guard errors (a requested accuracy or resolution cannot be
/// certified).  See [`cli::exit_class`].
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("malformed interval: lo = {lo} must be strictly below hi = {hi}")]
    MalformedInterval { lo: String, hi: String },

    #[error("interval endpoint {0} lies outside [0,1]")]
    EndpointOutOfRange(String),

    #[error("degenerate Cantor spec: {0}")]
    DegenerateCantorSpec(String),

    #[error("coefficient window of half-width {width} holds {got} coefficients, expected {expected}")]
    WindowLength { width: usize, expected: usize, got: usize },

    #[error("window exceeded: n = {n} is beyond the stored half-width {width}")]
    WindowExceeded { n: usize, width: usize },

    #[error("empty average: a Cesàro mean needs n >= 1")]
    EmptyAverage,

    #[error("empty region: supremum over the empty set is undefined")]
    EmptyRegion,

    #[error("invalid schedule: {0}")]
    Schedule(String),

    #[error("degenerate spectrum: the carrier set has measure zero")]
    DegenerateSpectrum,

    #[error("nonintegrable envelope: decay exponent alpha = {0} <= 1/2, tail sum cannot be certified")]
    NonintegrableEnvelope(f64),

    #[error("under-resolved grid: M = {m} samples, but n = {n} needs at least {required}")]
    UnderResolvedGrid { m: usize, n: usize, required: usize },

    #[error("indistinguishable zero threshold: tau = {tau} must exceed the grid tail error {tail}")]
    IndistinguishableZero { tau: f64, tail: f64 },

    #[error("grid too small: M = {0}, need M >= 2")]
    GridTooSmall(usize),

    #[error("unsupported oracle: time-domain norm needs a compactly supported interval-union spectrum")]
    UnsupportedOracle,

    #[error("oracle tolerance unreachable: requested {requested}, certified truncation remainder stalls at {certified}")]
    OracleToleranceUnreachable { requested: f64, certified: f64 },

    #[error("both |A| and |A^c| must be positive")]
    MeasureZeroSide,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
