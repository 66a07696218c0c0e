//! Spectra, the periodization function, and the independence
//! classification.
//!
//! A [`SpectrumDescriptor`] holds `ψ̂` as a piecewise closed form together
//! with a tail model: either a compact carrier (the sum over translates is
//! finite and exact) or a certified decay envelope `|ψ̂(u)| <= C·|u|^{-α}`
//! outside a carrier radius, with `α > 1/2` so that `p_ψ ∈ L¹`.  The
//! periodization `p_ψ(ξ) = Σ_k |ψ̂(ξ+k)|²` is then a bracketed quantity:
//! the returned value plus the certified tail encloses the true one.
//!
//! Indicator spectra with rational pieces are sampled exactly: a dyadic
//! grid point either is or is not in the carrier, decided in rational
//! arithmetic, so grids coming from the `ψ̂ = χ_{A^c}` construction carry
//! `tail_error = 0` and values that are exactly 0 or 1.

use std::f64::consts::PI;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::kahan::KahanF64;
use crate::set::{parse_rational, rational_to_f64, IntervalSet, Rational};
use crate::{Error, Result};

/// Regularized-integral growth factor past which `∫ 1/p` is flagged as
/// divergent.  A convergent integral has ratio -> 1 as the floor drops; a
/// quadratic zero of `p` gives ~√10 ≈ 3.16 per decade and a positive-measure
/// zero set pushes the ratio toward 10.
pub const DIVERGENCE_GROWTH_FACTOR: f64 = 3.0;

/// One closed-form piece of a custom spectrum:
/// `(Σ_j c_j u^j) · e^{decay·u} · e^{2πi·freq·u}` on `[lo, hi)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CustomPiece {
    pub lo: f64,
    pub hi: f64,
    pub coeffs: Vec<num_complex::Complex64>,
    pub decay: f64,
    pub freq: f64,
}

/// How `|ψ̂|` behaves far from the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TailModel {
    /// `ψ̂` vanishes outside `[-radius, radius]`; translate sums are finite.
    Compact { radius: f64 },
    /// `|ψ̂(u)| <= c·|u|^{-alpha}` for `|u| >= carrier`.
    Power { c: f64, alpha: f64, carrier: f64 },
}

#[derive(Debug, Clone, PartialEq)]
enum SpectrumKind {
    /// `ψ̂ = χ` of a finite union of rational intervals on the line.
    Indicator { pieces: Vec<(Rational, Rational)> },
    /// The Haar scaling spectrum `|ψ̂(u)| = |sin(πu)/(πu)|`.
    Haar,
    /// `ψ̂(u) = sin(π(u-lo)/(hi-lo))` on `[lo, hi)`.
    SineBump { lo: f64, hi: f64 },
    Custom { pieces: Vec<CustomPiece>, tail: TailModel },
}

/// Piecewise closed-form evaluator for `ψ̂` with a certified tail model.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumDescriptor {
    kind: SpectrumKind,
}

/// The `a) => b)` construction: `ψ̂ = χ_{A^c}` for a set of positive
/// measure, so that `p_ψ` is the 1-periodization of that indicator and the
/// zero set of `p_ψ` is exactly `A`.
pub fn spectrum_from_set(ac: &IntervalSet) -> Result<SpectrumDescriptor> {
    if ac.measure().is_zero() {
        return Err(Error::DegenerateSpectrum);
    }
    Ok(SpectrumDescriptor {
        kind: SpectrumKind::Indicator { pieces: ac.intervals().to_vec() },
    })
}

impl SpectrumDescriptor {
    /// `ψ̂ = χ` of a union of rational intervals anywhere on the line.
    pub fn indicator_union(raw: Vec<(Rational, Rational)>) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::DegenerateSpectrum);
        }
        for (lo, hi) in &raw {
            if lo >= hi {
                return Err(Error::MalformedInterval { lo: lo.to_string(), hi: hi.to_string() });
            }
        }
        let mut raw = raw;
        raw.sort();
        let mut pieces: Vec<(Rational, Rational)> = Vec::with_capacity(raw.len());
        for (lo, hi) in raw {
            match pieces.last_mut() {
                Some((_, prev_hi)) if lo <= *prev_hi => {
                    if hi > *prev_hi {
                        *prev_hi = hi;
                    }
                }
                _ => pieces.push((lo, hi)),
            }
        }
        Ok(SpectrumDescriptor { kind: SpectrumKind::Indicator { pieces } })
    }

    /// Haar scaling function in frequency form:
    /// `ψ̂(u) = e^{-πiu} sin(πu)/(πu)`, envelope `|ψ̂(u)| <= (1/π)|u|^{-1}`.
    pub fn haar() -> Self {
        SpectrumDescriptor { kind: SpectrumKind::Haar }
    }

    /// `ψ̂ = χ_{[-1/2, 1/2)}` (the sinc kernel in time).
    pub fn sinc() -> Self {
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        SpectrumDescriptor {
            kind: SpectrumKind::Indicator { pieces: vec![(-half.clone(), half)] },
        }
    }

    /// `ψ̂(u) = sin(π(u-lo)/(hi-lo))` on `[lo, hi)`.
    pub fn sine_bump(lo: Rational, hi: Rational) -> Result<Self> {
        if lo >= hi {
            return Err(Error::MalformedInterval { lo: lo.to_string(), hi: hi.to_string() });
        }
        Ok(SpectrumDescriptor {
            kind: SpectrumKind::SineBump { lo: rational_to_f64(&lo), hi: rational_to_f64(&hi) },
        })
    }

    /// Piecewise polynomial-times-exponential spectrum with an explicit
    /// tail model.
    pub fn custom(pieces: Vec<CustomPiece>, tail: TailModel) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::DegenerateSpectrum);
        }
        let mut pieces = pieces;
        pieces.sort_by(|p, q| p.lo.total_cmp(&q.lo));
        for p in &pieces {
            if !(p.lo < p.hi) {
                return Err(Error::MalformedInterval {
                    lo: p.lo.to_string(),
                    hi: p.hi.to_string(),
                });
            }
        }
        if pieces.windows(2).any(|w| w[1].lo < w[0].hi) {
            return Err(Error::Parse("custom spectrum pieces overlap".into()));
        }
        Ok(SpectrumDescriptor { kind: SpectrumKind::Custom { pieces, tail } })
    }

    /// The rational carrier intervals when `ψ̂` is an exact indicator.
    pub fn exact_indicator_pieces(&self) -> Option<&[(Rational, Rational)]> {
        match &self.kind {
            SpectrumKind::Indicator { pieces } => Some(pieces),
            _ => None,
        }
    }

    pub fn tail_model(&self) -> TailModel {
        match &self.kind {
            SpectrumKind::Indicator { pieces } => {
                let lo = rational_to_f64(&pieces.first().expect("nonempty").0);
                let hi = rational_to_f64(&pieces.last().expect("nonempty").1);
                TailModel::Compact { radius: lo.abs().max(hi.abs()) }
            }
            SpectrumKind::Haar => TailModel::Power { c: 1.0 / PI, alpha: 1.0, carrier: 1.0 },
            SpectrumKind::SineBump { lo, hi } => {
                TailModel::Compact { radius: lo.abs().max(hi.abs()) }
            }
            SpectrumKind::Custom { tail, .. } => *tail,
        }
    }

    /// `|ψ̂(u)|²` pointwise; pieces are half-open, so jump discontinuities
    /// evaluate one-sided, consistent with the set algebra.
    pub fn modulus_sq(&self, u: f64) -> f64 {
        match &self.kind {
            SpectrumKind::Indicator { pieces } => {
                for (lo, hi) in pieces {
                    if rational_to_f64(lo) <= u && u < rational_to_f64(hi) {
                        return 1.0;
                    }
                }
                0.0
            }
            SpectrumKind::Haar => {
                if u == 0.0 {
                    1.0
                } else {
                    let s = (PI * u).sin() / (PI * u);
                    s * s
                }
            }
            SpectrumKind::SineBump { lo, hi } => {
                if *lo <= u && u < *hi {
                    let s = (PI * (u - lo) / (hi - lo)).sin();
                    s * s
                } else {
                    0.0
                }
            }
            SpectrumKind::Custom { pieces, .. } => {
                for p in pieces {
                    if p.lo <= u && u < p.hi {
                        let mut poly = num_complex::Complex64::new(0.0, 0.0);
                        for c in p.coeffs.iter().rev() {
                            poly = poly * u + c;
                        }
                        return poly.norm_sqr() * (2.0 * p.decay * u).exp();
                    }
                }
                0.0
            }
        }
    }

    fn is_haar(&self) -> bool {
        matches!(self.kind, SpectrumKind::Haar)
    }
}

/// Certified bound for `Σ_{|k|>K} |ψ̂(ξ+k)|²`, `ξ ∈ [0,1)`, from the power
/// envelope: the positive side is `<= c² Σ_{k>K} k^{-2α}` and the negative
/// side `<= c² Σ_{k>K} (k-1)^{-2α}`; both sums are bounded by integrals.
fn power_tail_bound(c: f64, alpha: f64, k: u64) -> f64 {
    let k = k as f64;
    let p = 1.0 - 2.0 * alpha;
    c * c * (k.powf(p) + (k - 1.0).powf(p)) / (2.0 * alpha - 1.0)
}

/// Smallest cutoff (never below the carrier) whose certified tail is `<= eps`.
fn power_cutoff(c: f64, alpha: f64, carrier: f64, eps: f64) -> Result<u64> {
    if alpha <= 0.5 {
        return Err(Error::NonintegrableEnvelope(alpha));
    }
    let guess = (2.0 * c * c / ((2.0 * alpha - 1.0) * eps)).powf(1.0 / (2.0 * alpha - 1.0));
    let mut k = (guess.ceil().max(carrier.ceil()).max(2.0)) as u64;
    while power_tail_bound(c, alpha, k) > eps {
        k = k.saturating_mul(2);
    }
    Ok(k)
}

fn frac(x: f64) -> f64 {
    x - x.floor()
}

/// Exact translate count for an indicator spectrum at an exact rational
/// point: the number of integers `k` with `x + k` inside the carrier.
fn indicator_periodization_exact(pieces: &[(Rational, Rational)], x: &Rational) -> f64 {
    let lo_all = &pieces.first().expect("nonempty").0;
    let hi_all = &pieces.last().expect("nonempty").1;
    let k_lo = (lo_all - x).floor().to_integer();
    let k_hi = (hi_all - x).ceil().to_integer();
    let mut count = 0u64;
    let mut k = k_lo;
    while k <= k_hi {
        let point = x + Rational::from_integer(k.clone());
        if pieces.iter().any(|(lo, hi)| lo <= &point && &point < hi) {
            count += 1;
        }
        k += BigInt::one();
    }
    count as f64
}

/// Exact grid of the periodized indicator: for every piece and every
/// integer shift meeting `[0,1)`, bump the covered cell range.  Only
/// O(pieces) rational operations; the per-cell work is pure integer
/// indexing.
fn indicator_grid_exact(pieces: &[(Rational, Rational)], m: usize) -> Vec<f64> {
    let m_rat = Rational::from_integer(BigInt::from(m));
    let mut values = vec![0.0f64; m];
    for (lo, hi) in pieces {
        // Shifts k with [lo-k, hi-k) ∩ [0,1) nonempty: lo - 1 < k < hi.
        let mut k = (lo - Rational::one()).floor().to_integer() + 1u32;
        let k_end = hi.ceil().to_integer();
        while k < k_end {
            let k_rat = Rational::from_integer(k.clone());
            // Cells j with lo - k <= j/m < hi - k.
            let j_lo = ((lo - &k_rat) * &m_rat).ceil().to_integer().max(BigInt::zero());
            let j_hi_excl = ((hi - &k_rat) * &m_rat).ceil().to_integer().min(BigInt::from(m));
            if let (Some(j_lo), Some(j_hi_excl)) = (j_lo.to_usize(), j_hi_excl.to_usize()) {
                for v in values.iter_mut().take(j_hi_excl).skip(j_lo) {
                    *v += 1.0;
                }
            }
            k += 1u32;
        }
    }
    values
}

fn periodize_with_cutoff(psi: &SpectrumDescriptor, x: f64, k_max: u64) -> f64 {
    let mut acc = KahanF64::default();
    if psi.is_haar() {
        // sin²(π(x+k)) = sin²(πx) for every integer k, so the factor hoists
        // out of the translate sum.
        let s = (PI * x).sin();
        let c = s * s / (PI * PI);
        acc.add(if x == 0.0 { 1.0 } else { c / (x * x) });
        for k in 1..=k_max {
            let t_plus = x + k as f64;
            let t_minus = x - k as f64;
            acc.add(c / (t_plus * t_plus));
            acc.add(c / (t_minus * t_minus));
        }
    } else {
        acc.add(psi.modulus_sq(x));
        for k in 1..=k_max {
            acc.add(psi.modulus_sq(x + k as f64));
            acc.add(psi.modulus_sq(x - k as f64));
        }
    }
    acc.value()
}

/// `p_ψ(ξ)` as a bracketed value: the partial sum over `|k| <= K(ε)` plus a
/// certified tail `<= ε`.  The true `p_ψ(ξ)` lies in `[value, value + tail]`.
/// Compactly supported spectra (and exact indicators) return `tail = 0`.
pub fn periodize(psi: &SpectrumDescriptor, xi: f64, eps: f64) -> Result<(f64, f64)> {
    let x = frac(xi);
    if let Some(pieces) = psi.exact_indicator_pieces() {
        let xr = Rational::from_float(x).expect("finite grid point");
        return Ok((indicator_periodization_exact(pieces, &xr), 0.0));
    }
    match psi.tail_model() {
        TailModel::Compact { radius } => {
            let k_max = radius.ceil() as u64 + 1;
            Ok((periodize_with_cutoff(psi, x, k_max), 0.0))
        }
        TailModel::Power { c, alpha, carrier } => {
            let k_max = power_cutoff(c, alpha, carrier, eps)?;
            let tail = power_tail_bound(c, alpha, k_max);
            Ok((periodize_with_cutoff(psi, x, k_max), tail))
        }
    }
}

/// Uniform samples of `p_ψ` at `ξ_j = j/M` with one shared certified tail.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodizationGrid {
    values: Vec<f64>,
    tail_error: f64,
    exact: bool,
}

impl PeriodizationGrid {
    /// Wrap externally produced samples (used to classify analytic `p`
    /// grids directly).
    pub fn from_samples(values: Vec<f64>, tail_error: f64) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::GridTooSmall(values.len()));
        }
        if values.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::Config("periodization samples must be finite and >= 0".into()));
        }
        if !(tail_error >= 0.0) {
            return Err(Error::Config("tail error must be >= 0".into()));
        }
        Ok(PeriodizationGrid { values, tail_error, exact: false })
    }

    pub fn m(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn value(&self, j: usize) -> f64 {
        self.values[j]
    }

    pub fn xi(&self, j: usize) -> f64 {
        j as f64 / self.values.len() as f64
    }

    pub fn tail_error(&self) -> f64 {
        self.tail_error
    }

    /// True when the samples are exact (indicator spectra on rational grids).
    pub fn is_exact(&self) -> bool {
        self.exact
    }
}

/// Sample `p_ψ` at `M` uniform points with shared certified tail `<= eps`.
pub fn periodization_grid(
    psi: &SpectrumDescriptor,
    m: usize,
    eps: f64,
) -> Result<PeriodizationGrid> {
    if m < 2 {
        return Err(Error::GridTooSmall(m));
    }
    if let Some(pieces) = psi.exact_indicator_pieces() {
        return Ok(PeriodizationGrid {
            values: indicator_grid_exact(pieces, m),
            tail_error: 0.0,
            exact: true,
        });
    }
    let (k_max, tail) = match psi.tail_model() {
        TailModel::Compact { radius } => (radius.ceil() as u64 + 1, 0.0),
        TailModel::Power { c, alpha, carrier } => {
            let k = power_cutoff(c, alpha, carrier, eps)?;
            (k, power_tail_bound(c, alpha, k))
        }
    };
    let m_f = m as f64;
    let values = (0..m)
        .map(|j| periodize_with_cutoff(psi, j as f64 / m_f, k_max))
        .collect();
    Ok(PeriodizationGrid { values, tail_error: tail, exact: false })
}

/// What a sampled periodization function says about the translate system.
///
/// `positive_ae` is a grid-resolution statement, not a theorem: it holds
/// when the estimated zero set is below one grid cell.  The zero set itself
/// is always attached so callers see the evidence.  `minimal_flag` combines
/// positivity with a floor-regularized estimate of `∫ 1/p_ψ`: the flag is
/// withdrawn when the estimate is still growing as the floor drops.  Known
/// limitation: a `p` with a dense family of zeros thinner than the grid can
/// evade both the zero-set estimate and the divergence diagnostic.
#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub ess_inf_est: f64,
    pub ess_sup_est: f64,
    /// Estimated zero-set measure is below one grid cell.
    pub positive_ae: bool,
    /// Closure of the grid cells where `p <= tau_zero`.
    pub zero_set_approx: IntervalSet,
    /// `1/p ∈ L¹` as far as the regularized estimate can tell.
    pub minimal_flag: bool,
    /// The scheme's sufficient condition: equal to `positive_ae`.
    pub l2_independent_sufficient: bool,
    /// Trapezoid estimate of `∫ 1/max(p, tau_zero)`.
    pub inv_integral: f64,
    /// The same with floor `tau_zero/10`.
    pub inv_integral_refined: f64,
    pub divergence_ratio: f64,
    pub diverged: bool,
    pub tau_zero: f64,
    pub resolution: usize,
}

impl ClassificationReport {
    pub fn zero_measure(&self) -> Rational {
        self.zero_set_approx.measure()
    }
}

/// Classify a sampled periodization function with zero threshold `tau_zero`.
pub fn classify(grid: &PeriodizationGrid, tau_zero: f64) -> Result<ClassificationReport> {
    if tau_zero <= grid.tail_error() {
        return Err(Error::IndistinguishableZero { tau: tau_zero, tail: grid.tail_error() });
    }
    let m = grid.m();
    let m_big = BigInt::from(m);
    let mut zero_cells = Vec::new();
    let mut ess_inf = f64::INFINITY;
    let mut ess_sup = f64::NEG_INFINITY;
    for (j, &v) in grid.values().iter().enumerate() {
        ess_inf = ess_inf.min(v);
        ess_sup = ess_sup.max(v);
        if v <= tau_zero {
            zero_cells.push((
                Rational::new(BigInt::from(j), m_big.clone()),
                Rational::new(BigInt::from(j + 1), m_big.clone()),
            ));
        }
    }
    let zero_set_approx = IntervalSet::new(zero_cells)?;
    let cell = Rational::new(BigInt::one(), m_big);
    let positive_ae = zero_set_approx.measure() <= cell;

    let regularized_mean = |floor: f64| {
        let mut acc = KahanF64::default();
        for &v in grid.values() {
            acc.add(1.0 / v.max(floor));
        }
        acc.value() / m as f64
    };
    let inv_integral = regularized_mean(tau_zero);
    let inv_integral_refined = regularized_mean(tau_zero / 10.0);
    let divergence_ratio = inv_integral_refined / inv_integral;
    let diverged = divergence_ratio >= DIVERGENCE_GROWTH_FACTOR;
    let minimal_flag = positive_ae && !diverged;

    Ok(ClassificationReport {
        ess_inf_est: ess_inf,
        ess_sup_est: ess_sup,
        positive_ae,
        zero_set_approx,
        minimal_flag,
        l2_independent_sufficient: positive_ae,
        inv_integral,
        inv_integral_refined,
        divergence_ratio,
        diverged,
        tau_zero,
        resolution: m,
    })
}

impl FromStr for SpectrumDescriptor {
    type Err = Error;

    /// Spectrum literal: `"indicator(0/1..1/2)"`, `"haar"`, `"sinc"`,
    /// `"sine_bump(0..1)"`, or `"custom(path)"`.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        match text {
            "haar" => return Ok(SpectrumDescriptor::haar()),
            "sinc" => return Ok(SpectrumDescriptor::sinc()),
            _ => {}
        }
        if let Some(body) = text.strip_prefix("indicator(").and_then(|b| b.strip_suffix(')')) {
            let set: IntervalSet = body.parse()?;
            return spectrum_from_set(&set);
        }
        if let Some(body) = text.strip_prefix("sine_bump(").and_then(|b| b.strip_suffix(')')) {
            let (lo, hi) = body
                .split_once("..")
                .ok_or_else(|| Error::Parse(format!("sine_bump range {body:?} needs lo..hi")))?;
            return SpectrumDescriptor::sine_bump(parse_rational(lo)?, parse_rational(hi)?);
        }
        if let Some(path) = text.strip_prefix("custom(").and_then(|b| b.strip_suffix(')')) {
            let contents = std::fs::read_to_string(path.trim())?;
            return parse_custom_spectrum(&contents);
        }
        Err(Error::Parse(format!("unknown spectrum literal {text:?}")))
    }
}

/// Custom spectrum file: one `piece lo hi decay freq re,im [re,im ...]`
/// line per piece, one `tail compact radius` or
/// `tail power c alpha carrier` line, `#` comments.
pub fn parse_custom_spectrum(contents: &str) -> Result<SpectrumDescriptor> {
    let mut pieces = Vec::new();
    let mut tail: Option<TailModel> = None;
    for (lineno, raw_line) in contents.lines().enumerate() {
        let line = raw_line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let head = tokens.next().expect("nonempty line");
        let parse_f64 = |tok: Option<&str>, what: &str| -> Result<f64> {
            tok.ok_or_else(|| Error::Parse(format!("line {}: missing {what}", lineno + 1)))?
                .parse::<f64>()
                .map_err(|_| Error::Parse(format!("line {}: bad {what}", lineno + 1)))
        };
        match head {
            "piece" => {
                let lo = parse_f64(tokens.next(), "piece lo")?;
                let hi = parse_f64(tokens.next(), "piece hi")?;
                let decay = parse_f64(tokens.next(), "piece decay")?;
                let freq = parse_f64(tokens.next(), "piece freq")?;
                let mut coeffs = Vec::new();
                for tok in tokens {
                    let (re, im) = tok.split_once(',').ok_or_else(|| {
                        Error::Parse(format!("line {}: coefficient {tok:?} is not re,im", lineno + 1))
                    })?;
                    let re = re.parse::<f64>().map_err(|_| {
                        Error::Parse(format!("line {}: bad coefficient {tok:?}", lineno + 1))
                    })?;
                    let im = im.parse::<f64>().map_err(|_| {
                        Error::Parse(format!("line {}: bad coefficient {tok:?}", lineno + 1))
                    })?;
                    coeffs.push(num_complex::Complex64::new(re, im));
                }
                if coeffs.is_empty() {
                    return Err(Error::Parse(format!(
                        "line {}: piece needs at least one coefficient",
                        lineno + 1
                    )));
                }
                pieces.push(CustomPiece { lo, hi, coeffs, decay, freq });
            }
            "tail" => {
                let kind = tokens
                    .next()
                    .ok_or_else(|| Error::Parse(format!("line {}: missing tail kind", lineno + 1)))?;
                tail = Some(match kind {
                    "compact" => TailModel::Compact { radius: parse_f64(tokens.next(), "radius")? },
                    "power" => TailModel::Power {
                        c: parse_f64(tokens.next(), "c")?,
                        alpha: parse_f64(tokens.next(), "alpha")?,
                        carrier: parse_f64(tokens.next(), "carrier")?,
                    },
                    other => {
                        return Err(Error::Parse(format!(
                            "line {}: unknown tail kind {other:?}",
                            lineno + 1
                        )))
                    }
                });
            }
            other => {
                return Err(Error::Parse(format!("line {}: unknown directive {other:?}", lineno + 1)))
            }
        }
    }
    let tail = tail.ok_or_else(|| Error::Parse("custom spectrum needs a tail line".into()))?;
    SpectrumDescriptor::custom(pieces, tail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::rational;

    fn set(literal: &str) -> IntervalSet {
        literal.parse().unwrap()
    }

    #[test]
    fn spectrum_from_half_interval_periodizes_to_its_indicator() {
        let psi = spectrum_from_set(&set("0..1/2")).unwrap();
        let grid = periodization_grid(&psi, 8, 1e-9).unwrap();
        assert!(grid.is_exact());
        assert_eq!(grid.tail_error(), 0.0);
        assert_eq!(grid.values(), &[1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn spectrum_from_full_circle_is_identically_one() {
        let psi = spectrum_from_set(&set("0..1")).unwrap();
        let grid = periodization_grid(&psi, 8, 1e-9).unwrap();
        assert!(grid.values().iter().all(|&v| v == 1.0));
    }

    #[test]
    fn spectrum_from_cantor_complement_matches_membership() {
        let a = set("cantor(depth=3, remove=1/4)");
        let ac = a.complement();
        let psi = spectrum_from_set(&ac).unwrap();
        for j in 0..1024u64 {
            let q = rational(j as i64, 1024);
            let (value, tail) = periodize(&psi, j as f64 / 1024.0, 1e-9).unwrap();
            assert_eq!(tail, 0.0);
            let expected = if ac.contains(&q) { 1.0 } else { 0.0 };
            assert_eq!(value, expected, "mismatch at {q}");
        }
    }

    #[test]
    fn degenerate_spectrum_rejected() {
        assert!(matches!(
            spectrum_from_set(&IntervalSet::empty()),
            Err(Error::DegenerateSpectrum)
        ));
    }

    #[test]
    fn sinc_periodization_is_one() {
        let psi = SpectrumDescriptor::sinc();
        for xi in [0.0, 0.125, 0.5, 0.9375] {
            let (value, tail) = periodize(&psi, xi, 1e-9).unwrap();
            assert_eq!(value, 1.0);
            assert_eq!(tail, 0.0);
        }
    }

    #[test]
    fn sine_bump_single_term() {
        let psi = SpectrumDescriptor::sine_bump(rational(0, 1), rational(1, 1)).unwrap();
        let (value, tail) = periodize(&psi, 0.25, 1e-9).unwrap();
        assert!((value - 0.5).abs() < 1e-15);
        assert_eq!(tail, 0.0);
    }

    #[test]
    fn haar_periodization_brackets_one() {
        let psi = SpectrumDescriptor::haar();
        for (xi, eps) in [(1.0 / 3.0, 1e-6), (0.1, 1e-4), (0.77, 1e-6)] {
            let (value, tail) = periodize(&psi, xi, eps).unwrap();
            assert!(tail <= eps);
            assert!((value - 1.0).abs() <= eps, "value {value} at xi={xi}");
            // Bracketing: the true p (which is 1) lies in [value, value + tail].
            assert!(value <= 1.0 + 1e-12 && 1.0 <= value + tail + 1e-12);
        }
    }

    #[test]
    fn haar_grid_deviation_shrinks_with_eps() {
        let psi = SpectrumDescriptor::haar();
        let grid = periodization_grid(&psi, 16, 1e-6).unwrap();
        assert!(grid.tail_error() <= 1e-6);
        for &v in grid.values() {
            assert!((v - 1.0).abs() <= 1e-6);
        }
    }

    #[test]
    fn grid_mean_recovers_l2_norm_of_psi() {
        // Plancherel + Fubini: the mean of p over a period is ‖ψ‖₂², which
        // for an indicator spectrum is the carrier measure.
        let ac = set("0..1/8, 1/4..1/2, 5/8..7/8");
        let psi = spectrum_from_set(&ac).unwrap();
        let grid = periodization_grid(&psi, 512, 1e-9).unwrap();
        let mean = grid.values().iter().sum::<f64>() / grid.m() as f64;
        let measure = rational_to_f64(&ac.measure());
        assert!((mean - measure).abs() <= 6.0 / 512.0);

        let haar_grid = periodization_grid(&SpectrumDescriptor::haar(), 16, 1e-6).unwrap();
        let haar_mean = haar_grid.values().iter().sum::<f64>() / 16.0;
        assert!((haar_mean - 1.0).abs() <= 1e-6);
    }

    #[test]
    fn nonintegrable_envelope_rejected() {
        let psi = SpectrumDescriptor::custom(
            vec![CustomPiece {
                lo: -1.0,
                hi: 1.0,
                coeffs: vec![num_complex::Complex64::new(1.0, 0.0)],
                decay: 0.0,
                freq: 0.0,
            }],
            TailModel::Power { c: 1.0, alpha: 0.4, carrier: 1.0 },
        )
        .unwrap();
        assert!(matches!(
            periodize(&psi, 0.3, 1e-6),
            Err(Error::NonintegrableEnvelope(_))
        ));
    }

    #[test]
    fn classify_constant_one() {
        let grid = PeriodizationGrid::from_samples(vec![1.0; 256], 0.0).unwrap();
        let report = classify(&grid, 1e-6).unwrap();
        assert!(report.positive_ae);
        assert!(report.minimal_flag);
        assert!(report.l2_independent_sufficient);
        assert!(report.zero_set_approx.is_empty());
        assert!(!report.diverged);
        assert!((report.inv_integral - 1.0).abs() < 1e-12);
    }

    #[test]
    fn classify_sine_squared_diverges() {
        let m = 1024;
        let values: Vec<f64> = (0..m).map(|j| (PI * j as f64 / m as f64).sin().powi(2)).collect();
        let grid = PeriodizationGrid::from_samples(values, 0.0).unwrap();
        let report = classify(&grid, 1e-6).unwrap();
        assert!(report.positive_ae, "only the j=0 cell should be flagged zero");
        assert!(report.diverged, "ratio {}", report.divergence_ratio);
        assert!(!report.minimal_flag);
        assert!(report.l2_independent_sufficient);
    }

    #[test]
    fn classify_half_indicator_zero_set() {
        let psi = spectrum_from_set(&set("0..1/2")).unwrap();
        let grid = periodization_grid(&psi, 1024, 1e-9).unwrap();
        let report = classify(&grid, 1e-6).unwrap();
        assert!(!report.positive_ae);
        assert!(!report.minimal_flag);
        assert_eq!(report.zero_set_approx, set("1/2..1"));
        assert_eq!(report.zero_measure(), rational(1, 2));
    }

    #[test]
    fn classify_requires_tau_above_tail() {
        let grid = PeriodizationGrid::from_samples(vec![1.0; 8], 1e-3).unwrap();
        assert!(matches!(
            classify(&grid, 1e-4),
            Err(Error::IndistinguishableZero { .. })
        ));
    }

    #[test]
    fn classify_zero_set_monotone_in_tau() {
        let m = 1024;
        let values: Vec<f64> = (0..m).map(|j| (PI * j as f64 / m as f64).sin().powi(2)).collect();
        let grid = PeriodizationGrid::from_samples(values, 0.0).unwrap();
        let small = classify(&grid, 1e-8).unwrap().zero_set_approx;
        let large = classify(&grid, 1e-2).unwrap().zero_set_approx;
        assert_eq!(small.intersection(&large), small);
        assert!(small.measure() <= large.measure());
    }

    #[test]
    fn scheme_consistency_minimal_implies_positive() {
        // Exercise several grids; the implication must hold on every report.
        let grids = vec![
            PeriodizationGrid::from_samples(vec![1.0; 64], 0.0).unwrap(),
            PeriodizationGrid::from_samples(
                (0..64).map(|j| (PI * j as f64 / 64.0).sin().powi(2)).collect(),
                0.0,
            )
            .unwrap(),
            periodization_grid(&spectrum_from_set(&set("0..1/2")).unwrap(), 64, 1e-9).unwrap(),
        ];
        for grid in &grids {
            let report = classify(grid, 1e-6).unwrap();
            assert!(!report.minimal_flag || report.positive_ae);
        }
    }

    #[test]
    fn exact_grid_matches_pointwise_membership() {
        // The range-filled grid and the single-point rational path are
        // independent implementations of the same exact sampling.
        let sets = [
            "0..1/3",
            "1/8..1/4, 1/2..3/4",
            "cantor(depth=3, remove=1/4)",
            "1/1024..1",
            "0..1",
        ];
        for literal in sets {
            let ac: IntervalSet = literal.parse().unwrap();
            let psi = spectrum_from_set(&ac).unwrap();
            let grid = periodization_grid(&psi, 64, 1e-9).unwrap();
            for j in 0..64 {
                let (pointwise, _) = periodize(&psi, j as f64 / 64.0, 1e-9).unwrap();
                assert_eq!(grid.value(j), pointwise, "set {literal}, j={j}");
                let expected = if ac.contains(&rational(j as i64, 64)) { 1.0 } else { 0.0 };
                assert_eq!(grid.value(j), expected, "set {literal}, j={j}");
            }
        }
        // A carrier wider than one period: translates overlap, p counts them.
        let wide = SpectrumDescriptor::indicator_union(vec![(rational(0, 1), rational(2, 1))])
            .unwrap();
        let grid = periodization_grid(&wide, 16, 1e-9).unwrap();
        assert!(grid.values().iter().all(|&v| v == 2.0));
    }

    #[test]
    fn spectrum_literals_parse() {
        assert!("haar".parse::<SpectrumDescriptor>().is_ok());
        assert!("sinc".parse::<SpectrumDescriptor>().is_ok());
        assert!("indicator(0..1/2)".parse::<SpectrumDescriptor>().is_ok());
        assert!("sine_bump(0..1)".parse::<SpectrumDescriptor>().is_ok());
        assert!("bogus".parse::<SpectrumDescriptor>().is_err());
    }

    #[test]
    fn custom_spectrum_file_grammar() {
        let text = "\
# a flat bump on [0, 1/2) and a decaying wing
piece 0 0.5 0 0 1,0
piece 0.5 4 -1 0.25 0.5,0
tail compact 4
";
        let psi = parse_custom_spectrum(text).unwrap();
        assert!((psi.modulus_sq(0.25) - 1.0).abs() < 1e-15);
        let expected = 0.25 * (-2.0f64).exp();
        assert!((psi.modulus_sq(1.0) - expected).abs() < 1e-15);
        assert_eq!(psi.modulus_sq(5.0), 0.0);
        let (value, tail) = periodize(&psi, 0.25, 1e-9).unwrap();
        assert_eq!(tail, 0.0);
        assert!(value > 1.0);
    }
}
