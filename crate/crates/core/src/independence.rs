//! Theorem-level computations on translate systems: the norm identity
//! relating coefficient combinations to the periodization function, its
//! independent time-domain oracle, dependence witnesses, the Cesàro probe,
//! and the nice-function probe.
//!
//! The central identity: for `g = Σ_{|k|<=n} c_k T_kψ`,
//!
//! ```text
//! ‖g‖₂² = ∫₀¹ |m_c(ξ)|² p_ψ(ξ) dξ,    m_c(ξ) = Σ_{|k|<=n} c_k e^{-2πikξ},
//! ```
//!
//! so with `c_k = f̂(-k)` the symbol `m_c` is the partial sum `S_n(f)` and
//! the right-hand side measures how much of `S_n(f)` the carrier of `p_ψ`
//! can see.  [`combination_norm`] computes the right side on a sampled
//! grid; [`time_domain_norm_oracle`] computes the left side directly in the
//! time domain, sharing no code with the frequency route, so the two
//! agreeing is a genuine check of the identity.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::fourier::{
    boundedness_profile, u_norm_estimate, validate_schedule, BoundednessProfile,
    CoefficientWindow, SupEstimate,
};
use crate::kahan::{KahanComplex, KahanF64};
use crate::periodization::{periodization_grid, spectrum_from_set, PeriodizationGrid, SpectrumDescriptor};
use crate::quad::adaptive_gk15;
use crate::set::{rational_to_f64, IntervalSet, Rational};
use crate::{Error, Result};

/// Largest window for which the witness runs the time-domain cross-check.
pub const ORACLE_CROSSCHECK_MAX_N: usize = 8;

/// A grid quadrature of `∫ |m_c|² p` with its sqrt and an error estimate.
#[derive(Debug, Clone, Copy)]
pub struct CombinationNorm {
    /// `(quadrature of |m_c|² p)^{1/2}`.
    pub value: f64,
    /// First-order estimate of the quadrature error on the squared norm:
    /// jump terms of `p` plus the certified grid tail.
    pub quad_error_est: f64,
}

/// `‖Σ_{|k|<=n} c_k T_kψ‖₂` through the periodization identity: the
/// rectangle-rule quadrature of `|m_c(ξ)|² p(ξ)` over the sampled grid.
///
/// The grid must oversample the symbol (`M >= 2(2n+1)`), otherwise the
/// quadrature cannot see the oscillation and the call is refused.
pub fn combination_norm(
    c: &CoefficientWindow,
    n: usize,
    grid: &PeriodizationGrid,
) -> Result<CombinationNorm> {
    if n > c.half_width() {
        return Err(Error::WindowExceeded { n, width: c.half_width() });
    }
    let m = grid.m();
    let required = 2 * (2 * n + 1);
    if m < required {
        return Err(Error::UnderResolvedGrid { m, n, required });
    }
    let mut acc = KahanF64::default();
    let mut max_sym_sq = 0.0f64;
    let mut mean_sym_sq = KahanF64::default();
    for j in 0..m {
        let sym_sq = c.symbol(n, grid.xi(j))?.norm_sqr();
        max_sym_sq = max_sym_sq.max(sym_sq);
        mean_sym_sq.add(sym_sq);
        acc.add(sym_sq * grid.value(j));
    }
    let integral = (acc.value() / m as f64).max(0.0);
    // Rectangle-rule error is driven by the jumps of p (Euler-Maclaurin
    // boundary terms) plus the certified tail of the grid itself.
    let p_variation: f64 = (0..m)
        .map(|j| (grid.value((j + 1) % m) - grid.value(j)).abs())
        .sum();
    let quad_error_est =
        p_variation * max_sym_sq / (2.0 * m as f64) + grid.tail_error() * mean_sym_sq.value() / m as f64;
    Ok(CombinationNorm { value: integral.sqrt(), quad_error_est })
}

/// `∫_a^b e^{2πiyξ} dξ`, stable as `y(b-a) -> 0`.
fn piece_integral(a: f64, b: f64, y: f64) -> Complex64 {
    let theta = TAU * (b - a) * y;
    let ratio = if theta.abs() < 1e-3 {
        // (e^{iθ}-1)/(iθ) = 1 + iθ/2 - θ²/6 - iθ³/24 + O(θ⁴)
        Complex64::new(1.0 - theta * theta / 6.0, theta / 2.0 - theta * theta * theta / 24.0)
    } else {
        (Complex64::new(0.0, theta).exp() - 1.0) / Complex64::new(0.0, theta)
    };
    (b - a) * Complex64::from_polar(1.0, TAU * a * y) * ratio
}

/// `‖Σ_{|k|<=n} c_k ψ(·-k)‖₂` computed entirely in the time domain.
///
/// Requires `ψ̂ = χ` of a compactly supported interval union, so that
/// `ψ(x) = Σ_j (e^{2πib_jx} - e^{2πia_jx})/(2πix)` is an explicit finite
/// sum of modulated sinc kernels.  The squared norm is assembled as
///
/// * adaptive Gauss–Kronrod quadrature of `|g|²` over `[-T, T]`, plus
/// * the closed-form diagonal tail `Σ_e |m_c(β_e)|² / (2π²T)` coming from
///   the `1/x` parts of the endpoint decomposition of `g`, where `β_e`
///   ranges over the piece endpoints,
///
/// with `T` chosen so that the certified bound on everything else
/// (oscillatory cross terms `O(1/T²)` and the `O(1/T³)` remainder from the
/// pole-shift corrections) is below `tol/2`; `tol` is an absolute tolerance
/// on the squared norm.
///
/// Cost grows with the window and the piece count (every quadrature node
/// evaluates `(2n+1)·pieces` modulated sincs); n <= 32 with a handful of
/// pieces is the intended regime.
pub fn time_domain_norm_oracle(
    c: &CoefficientWindow,
    n: usize,
    psi: &SpectrumDescriptor,
    tol: f64,
) -> Result<f64> {
    if n > c.half_width() {
        return Err(Error::WindowExceeded { n, width: c.half_width() });
    }
    if !(tol > 0.0) {
        return Err(Error::Config("oracle tolerance must be positive".into()));
    }
    let pieces: Vec<(f64, f64)> = psi
        .exact_indicator_pieces()
        .ok_or(Error::UnsupportedOracle)?
        .iter()
        .map(|(lo, hi)| (rational_to_f64(lo), rational_to_f64(hi)))
        .collect();

    // Signed endpoints of the carrier and the symbol values there.
    let mut betas: Vec<f64> = Vec::with_capacity(2 * pieces.len());
    for (a, b) in &pieces {
        betas.push(*a);
        betas.push(*b);
    }
    for i in 0..betas.len() {
        for j in i + 1..betas.len() {
            if (betas[i] - betas[j]).abs() < 1e-9 {
                return Err(Error::UnsupportedOracle);
            }
        }
    }
    let symbol_at: Vec<f64> = betas
        .iter()
        .map(|&beta| c.symbol(n, beta).expect("n validated").norm())
        .collect();
    let s1: f64 = symbol_at.iter().sum();
    let sum_m_sq: f64 = symbol_at.iter().map(|m| m * m).sum();
    let k1 = c.weighted_abs_sum(n);
    let c1 = s1 / TAU;
    let c2 = pieces.len() as f64 * k1 / PI;

    let remainder_bound = |t: f64| {
        let mut offdiag = 0.0;
        for i in 0..betas.len() {
            for j in 0..betas.len() {
                if i != j {
                    let omega = TAU * (betas[i] - betas[j]).abs();
                    offdiag += symbol_at[i] * symbol_at[j] * 4.0 / (omega * t * t);
                }
            }
        }
        offdiag /= 4.0 * PI * PI;
        let cross = 4.0 * c1 * c2 / (t * t);
        let r2 = 8.0 * c2 * c2 / (3.0 * t * t * t);
        offdiag + cross + r2
    };

    let radius = betas.iter().fold(0.0f64, |acc, b| acc.max(b.abs()));
    let mut t = (2.0 * (n as f64 + 1.0)).max(2.0 * radius + 2.0).max(32.0);
    let t_cap = 131_072.0;
    while remainder_bound(t) > tol / 2.0 {
        t *= 2.0;
        if t > t_cap {
            return Err(Error::OracleToleranceUnreachable {
                requested: tol,
                certified: remainder_bound(t_cap),
            });
        }
    }

    let g = |x: f64| -> Complex64 {
        let mut acc = KahanComplex::default();
        for k in -(n as i64)..=n as i64 {
            let ck = c.coeff(k);
            if ck.re == 0.0 && ck.im == 0.0 {
                continue;
            }
            let y = x - k as f64;
            let mut psi_val = Complex64::new(0.0, 0.0);
            for (a, b) in &pieces {
                psi_val += piece_integral(*a, *b, y);
            }
            acc.add(ck * psi_val);
        }
        acc.value()
    };

    // Half-unit panels keep 15 Kronrod nodes inside every oscillation
    // period of |g|² (frequencies are bounded by twice the carrier radius).
    let initial = (4.0 * t).ceil() as usize;
    let quad = adaptive_gk15(|x| g(x).norm_sqr(), -t, t, tol / 2.0, initial, initial + 4096);
    let diagonal_tail = sum_m_sq / (2.0 * PI * PI * t);
    Ok((quad.value + diagonal_tail).max(0.0).sqrt())
}

/// A concrete coefficient sequence `c_k = f̂(-k)` exhibiting (or failing to
/// exhibit) the collapse of `‖Σ_{|k|<=n} c_k T_kψ‖₂` along a schedule,
/// where `ψ̂ = χ_{A^c}`.
#[derive(Debug, Clone)]
pub struct DependenceWitness {
    /// The designed zero set of `p_ψ`.
    pub set_a: IntervalSet,
    /// The witness coefficients `c_k = f̂(-k)`.
    pub coefficients: CoefficientWindow,
    pub schedule: Vec<usize>,
    /// `‖Σ_{|k|<=n} c_k T_kψ‖₂` per schedule entry.
    pub norms: Vec<f64>,
    /// Time-domain cross-checks where the window is small enough
    /// (`n <= ORACLE_CROSSCHECK_MAX_N`); `None` entries were skipped.
    pub oracle_norms: Option<Vec<Option<f64>>>,
}

impl DependenceWitness {
    /// Ratio of the last norm to the first; the decay statistic reported
    /// by the demos.
    pub fn decay_ratio(&self) -> f64 {
        self.norms.last().expect("schedule nonempty") / self.norms[0]
    }
}

/// Run the dependence construction: take `ψ̂ = χ_{A^c}`, so `p_ψ` vanishes
/// exactly on `A`, feed it the coefficients `c_k = f̂(-k)` of a function
/// carried by `A`, and record the combination norms along the schedule.
/// When the partial sums of `f` stay uniformly bounded on `A^c`, the norms
/// must tend to zero: a nonzero ℓ² sequence annihilating the translates.
///
/// `f` is expected to come from a function supported in `A` (for exact
/// indicator inputs use [`CoefficientWindow::indicator`] of a subset of
/// `A`); the construction does not verify this, it measures it.
pub fn dependence_witness(
    set_a: &IntervalSet,
    f: &CoefficientWindow,
    schedule: &[usize],
    grid_m: usize,
    with_oracle: bool,
) -> Result<DependenceWitness> {
    validate_schedule(schedule)?;
    let max_n = *schedule.last().expect("nonempty");
    if max_n > f.half_width() {
        return Err(Error::WindowExceeded { n: max_n, width: f.half_width() });
    }
    let ac = set_a.complement();
    if num_traits::Zero::is_zero(&set_a.measure()) || num_traits::Zero::is_zero(&ac.measure()) {
        return Err(Error::MeasureZeroSide);
    }
    let psi = spectrum_from_set(&ac)?;
    let grid = periodization_grid(&psi, grid_m, 1e-9)?;
    let coefficients = f.reversed();
    let mut norms = Vec::with_capacity(schedule.len());
    for &n in schedule {
        norms.push(combination_norm(&coefficients, n, &grid)?.value);
    }
    let oracle_norms = if with_oracle {
        let mut checks = Vec::with_capacity(schedule.len());
        for &n in schedule {
            if n <= ORACLE_CROSSCHECK_MAX_N {
                checks.push(Some(time_domain_norm_oracle(&coefficients, n, &psi, 1e-8)?));
            } else {
                checks.push(None);
            }
        }
        Some(checks)
    } else {
        None
    };
    Ok(DependenceWitness {
        set_a: set_a.clone(),
        coefficients,
        schedule: schedule.to_vec(),
        norms,
        oracle_norms,
    })
}

/// `‖(1/n) Σ_{h<n} S_h‖_{L²(p)}` along a schedule: the Cesàro-average norms
/// whose collapse to zero (for a nonzero sequence) forces `p` to vanish on
/// a set of positive measure.  Computed through the Fejér-weighted symbol
/// `Σ_{|k|<=n-1} (1-|k|/n) c_k e^{-2πikξ}` against the sampled `p`.
pub fn cesaro_independence_probe(
    c: &CoefficientWindow,
    grid: &PeriodizationGrid,
    schedule: &[usize],
) -> Result<Vec<f64>> {
    validate_schedule(schedule)?;
    let mut out = Vec::with_capacity(schedule.len());
    for &n in schedule {
        if n == 0 {
            return Err(Error::EmptyAverage);
        }
        // Coefficients beyond the stored window are zeros, so the Fejér
        // symbol only ever needs degree min(n-1, width).
        let degree = (n - 1).min(c.half_width());
        let nf = n as f64;
        let weighted = CoefficientWindow::from_fn(degree, |k| {
            c.coeff(k) * (1.0 - k.unsigned_abs() as f64 / nf)
        });
        out.push(combination_norm(&weighted, degree, grid)?.value);
    }
    Ok(out)
}

/// A candidate for the "nice function" of the equivalence: a coefficient
/// window, optionally with the exact support of the function it truncates.
/// Indicator-derived candidates carry their support so leakage is measured
/// in exact rational arithmetic rather than by quadrature of the truncation.
#[derive(Debug, Clone)]
pub struct Candidate {
    pub window: CoefficientWindow,
    pub support: Option<IntervalSet>,
}

impl Candidate {
    /// `χ_S` truncated to half-width `width`, remembering `S`.
    pub fn indicator(support: &IntervalSet, width: usize) -> Self {
        Candidate {
            window: CoefficientWindow::indicator(support, width),
            support: Some(support.clone()),
        }
    }

    /// A bare window with unknown limit support; leakage falls back to
    /// grid quadrature of the windowed polynomial.
    pub fn from_window(window: CoefficientWindow) -> Self {
        Candidate { window, support: None }
    }
}

/// How close a candidate comes to the two requirements: support inside `A`
/// and uniformly bounded partial sums.  No existence claim is made; the probe
/// measures, the profiles are evidence.
#[derive(Debug, Clone)]
pub struct NiceProbeReport {
    /// `∫_{A^c} |candidate|²`: exact (rational, converted) when the
    /// candidate carries its support, grid quadrature of the windowed
    /// polynomial otherwise.
    pub leakage: f64,
    pub leakage_exact: bool,
    /// The zero window trivially satisfies every bound; flagged because the
    /// equivalence requires a nonzero function.
    pub degenerate: bool,
    pub u_norm: SupEstimate,
    pub profile_complement: BoundednessProfile,
    pub profile_full: BoundednessProfile,
}

/// Mean of `eval` over the dyadic grid points lying in `region`
/// (half-open cells, so this is the rectangle rule for `∫_region eval`).
fn quadrature_on_set(eval: impl Fn(f64) -> f64, region: &IntervalSet, level: u32) -> f64 {
    let m_big = Rational::from_integer((1u64 << level).into());
    let m_f = (1u64 << level) as f64;
    let mut acc = KahanF64::default();
    for (lo, hi) in region.intervals() {
        let j_lo = num_traits::ToPrimitive::to_u64(&(lo * &m_big).ceil().to_integer())
            .expect("grid index fits u64");
        let hi_scaled = hi * &m_big;
        let j_hi_excl = num_traits::ToPrimitive::to_u64(&hi_scaled.ceil().to_integer())
            .expect("grid index fits u64");
        for j in j_lo..j_hi_excl {
            acc.add(eval(j as f64 / m_f));
        }
    }
    acc.value() / m_f
}

/// Probe a candidate against a target set: support leakage into `A^c`, the
/// windowed-sum norm estimate, and boundedness profiles both on `A^c` and
/// on the whole circle.
pub fn nice_function_probe(
    set_a: &IntervalSet,
    candidate: &Candidate,
    level: u32,
    schedule: &[usize],
) -> Result<NiceProbeReport> {
    let ac = set_a.complement();
    if ac.is_empty() {
        return Err(Error::EmptyRegion);
    }
    let window = &candidate.window;
    let degenerate = window.is_zero();
    let (leakage, leakage_exact) = match &candidate.support {
        Some(support) => (rational_to_f64(&support.intersection(&ac).measure()), true),
        None => {
            let n = window.half_width();
            let eval = |x: f64| window.partial_sum(n, x).expect("full window").norm_sqr();
            (quadrature_on_set(eval, &ac, level), false)
        }
    };
    let u_norm = u_norm_estimate(window, level);
    let profile_complement = boundedness_profile(window, &ac, schedule, level)?;
    let profile_full = boundedness_profile(window, &IntervalSet::full(), schedule, level)?;
    Ok(NiceProbeReport {
        leakage,
        leakage_exact,
        degenerate,
        u_norm,
        profile_complement,
        profile_full,
    })
}
