//! Symmetric partial sums, Fejér means, windowed sums, and certified
//! supremum estimation on interval regions.
//!
//! Truncation follows the ordering `ℤ = {0, 1, -1, 2, -2, …}`: every
//! evaluation adds coefficients shell by shell with compensated
//! accumulation, so parallel or repeated runs are bit-identical.  All
//! evaluators reduce the argument modulo 1 first (the functions are
//! 1-periodic and the reduction is exact in floating point).
//!
//! "Essential supremum" here always means the supremum of a trigonometric
//! polynomial, which is attained; a grid maximum plus a Bernstein-type
//! derivative modulus times the grid spacing gives a certified upper bound.

use std::f64::consts::TAU;

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::kahan::KahanComplex;
use crate::set::{rational_to_f64, IntervalSet, Rational};
use crate::{Error, Result};

/// A finite symmetric array of Fourier coefficients `c_k`, `|k| <= n`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientWindow {
    half_width: usize,
    /// Index `k + half_width` holds `c_k`.
    coeffs: Vec<Complex64>,
}

impl CoefficientWindow {
    /// Wrap an explicit coefficient array of length `2n + 1`.
    pub fn new(half_width: usize, coeffs: Vec<Complex64>) -> Result<Self> {
        let expected = 2 * half_width + 1;
        if coeffs.len() != expected {
            return Err(Error::WindowLength {
                width: half_width,
                expected,
                got: coeffs.len(),
            });
        }
        Ok(CoefficientWindow { half_width, coeffs })
    }

    /// Fill the window from `k -> c_k`.
    pub fn from_fn(half_width: usize, mut coeff: impl FnMut(i64) -> Complex64) -> Self {
        let n = half_width as i64;
        let coeffs = (-n..=n).map(|k| coeff(k)).collect();
        CoefficientWindow { half_width, coeffs }
    }

    /// The Fourier coefficients of an indicator function, `f̂(k)` for
    /// `f = χ_A`, out to half-width `n`.
    pub fn indicator(set: &IntervalSet, half_width: usize) -> Self {
        Self::from_fn(half_width, |k| set.indicator_fourier_coefficient(k))
    }

    pub fn half_width(&self) -> usize {
        self.half_width
    }

    /// `c_k`, zero outside the stored window.
    pub fn coeff(&self, k: i64) -> Complex64 {
        let idx = k + self.half_width as i64;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            Complex64::zero()
        } else {
            self.coeffs[idx as usize]
        }
    }

    /// The window `k -> c_{-k}` (the dependence-witness coefficients).
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        CoefficientWindow { half_width: self.half_width, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.re == 0.0 && c.im == 0.0)
    }

    /// `Σ_{|k|<=n} |c_k|`.
    pub fn abs_sum(&self, n: usize) -> f64 {
        let n = n.min(self.half_width) as i64;
        (-n..=n).map(|k| self.coeff(k).norm()).sum()
    }

    /// `Σ_{|k|<=n} |k·c_k|` (derivative modulus of the full window over 2π).
    pub fn weighted_abs_sum(&self, n: usize) -> f64 {
        let n = n.min(self.half_width) as i64;
        (-n..=n).map(|k| (k.abs() as f64) * self.coeff(k).norm()).sum()
    }

    /// `(Σ_{|k|<=n} |c_k|²)^{1/2}`.
    pub fn l2_norm(&self, n: usize) -> f64 {
        let n = n.min(self.half_width) as i64;
        (-n..=n).map(|k| self.coeff(k).norm_sqr()).sum::<f64>().sqrt()
    }

    /// Shell-ordered compensated accumulation: adds `weight(0)·c_0`, then
    /// for k = 1..n the pair `weight(k)·(c_k e^{2πikx} + c_{-k} e^{-2πikx})`,
    /// calling `visit(k, running_sum)` after each shell.  This single code
    /// path defines the summation semantics for partial sums, Fejér means,
    /// symbols, and windowed-sum profiles, so their values agree bit for bit
    /// wherever they agree mathematically.
    fn ordered_shells(
        &self,
        n: usize,
        xi: f64,
        weight: impl Fn(usize) -> f64,
        mut visit: impl FnMut(usize, Complex64),
    ) {
        let x = xi - xi.floor();
        let w = Complex64::from_polar(1.0, TAU * x);
        let mut acc = KahanComplex::default();
        acc.add(self.coeff(0) * weight(0));
        visit(0, acc.value());
        let mut wp = Complex64::new(1.0, 0.0);
        let mut wm = Complex64::new(1.0, 0.0);
        for k in 1..=n {
            wp *= w;
            wm *= w.conj();
            let wt = weight(k);
            acc.add(self.coeff(k as i64) * wp * wt);
            acc.add(self.coeff(-(k as i64)) * wm * wt);
            visit(k, acc.value());
        }
    }

    /// Symmetric partial sum `S_n(f)(ξ) = Σ_{|k|<=n} c_k e^{2πikξ}`.
    pub fn partial_sum(&self, n: usize, xi: f64) -> Result<Complex64> {
        if n > self.half_width {
            return Err(Error::WindowExceeded { n, width: self.half_width });
        }
        let mut last = Complex64::zero();
        self.ordered_shells(n, xi, |_| 1.0, |_, s| last = s);
        Ok(last)
    }

    /// All of `S_0(ξ), …, S_n(ξ)` in one pass (bit-identical to calling
    /// [`Self::partial_sum`] for each index).
    pub fn partial_sum_profile(&self, n: usize, xi: f64) -> Result<Vec<Complex64>> {
        if n > self.half_width {
            return Err(Error::WindowExceeded { n, width: self.half_width });
        }
        let mut out = Vec::with_capacity(n + 1);
        self.ordered_shells(n, xi, |_| 1.0, |_, s| out.push(s));
        Ok(out)
    }

    /// Fejér (Cesàro) mean `(1/n) Σ_{h=0}^{n-1} S_h(ξ)
    /// = Σ_{|k|<=n-1} (1 - |k|/n) c_k e^{2πikξ}`.
    pub fn fejer_mean(&self, n: usize, xi: f64) -> Result<Complex64> {
        if n == 0 {
            return Err(Error::EmptyAverage);
        }
        if n > self.half_width + 1 {
            return Err(Error::WindowExceeded { n: n - 1, width: self.half_width });
        }
        let nf = n as f64;
        let mut last = Complex64::zero();
        self.ordered_shells(n - 1, xi, |k| 1.0 - (k as f64) / nf, |_, s| last = s);
        Ok(last)
    }

    /// The symbol `m_c(ξ) = Σ_{|k|<=n} c_k e^{-2πikξ}`.
    ///
    /// With `c_k = f̂(-k)` this equals `S_n(f)(ξ)`; the sign convention is
    /// fixed project-wide.
    pub fn symbol(&self, n: usize, xi: f64) -> Result<Complex64> {
        self.partial_sum(n, -xi)
    }

    /// Fejér-weighted symbol `Σ_{|k|<=n-1} (1 - |k|/n) c_k e^{-2πikξ}`,
    /// the symbol of the n-th Cesàro average.
    pub fn fejer_symbol(&self, n: usize, xi: f64) -> Result<Complex64> {
        self.fejer_mean(n, -xi)
    }
}

/// A certified estimate of a supremum over a region.
///
/// `value` is an exact maximum over the evaluated samples (so a lower bound
/// for the true supremum); [`SupEstimate::certified_bound`] adds
/// `modulus_bound` times the grid spacing and is an upper bound whenever
/// `modulus_bound` dominates the derivative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SupEstimate {
    pub value: f64,
    pub grid_points: usize,
    pub refinement_level: u32,
    pub modulus_bound: f64,
}

impl SupEstimate {
    pub fn spacing(&self) -> f64 {
        1.0 / (1u64 << self.refinement_level) as f64
    }

    /// `value + modulus_bound · spacing`.
    pub fn certified_bound(&self) -> f64 {
        self.value + self.modulus_bound * self.spacing()
    }
}

/// Maximum of `eval` over the dyadic grid `j/2^level` restricted to
/// `region`, with interval endpoints always included (closed-boundary
/// convention; a null set cannot change an essential supremum, so the
/// conservative choice is valid).
///
/// `modulus` must bound the derivative of the evaluated function on the
/// region; for `|S_n|` of a window `f` the callers use the Bernstein bound
/// `2πn Σ|f̂(k)|`.
pub fn sup_on_set(
    eval: impl Fn(f64) -> f64,
    region: &IntervalSet,
    level: u32,
    modulus: f64,
) -> Result<SupEstimate> {
    if region.is_empty() {
        return Err(Error::EmptyRegion);
    }
    let m_big = Rational::from_integer((1u64 << level).into());
    let m_f = (1u64 << level) as f64;
    let mut value = f64::NEG_INFINITY;
    let mut grid_points = 0usize;
    for (lo, hi) in region.intervals() {
        let lo_scaled = lo * &m_big;
        let hi_scaled = hi * &m_big;
        let j_lo = lo_scaled.ceil().to_integer().to_u64().expect("grid index fits u64");
        let j_hi = hi_scaled.floor().to_integer().to_u64().expect("grid index fits u64");
        for j in j_lo..=j_hi {
            value = value.max(eval(j as f64 / m_f));
            grid_points += 1;
        }
        // Off-grid endpoints still get sampled, so every point of the region
        // is within half a spacing of some sample.
        if !lo_scaled.is_integer() {
            value = value.max(eval(rational_to_f64(lo)));
            grid_points += 1;
        }
        if !hi_scaled.is_integer() {
            value = value.max(eval(rational_to_f64(hi)));
            grid_points += 1;
        }
    }
    Ok(SupEstimate { value, grid_points, refinement_level: level, modulus_bound: modulus })
}

/// The growth record of `sup |S_n(f)|` over a region along a schedule of
/// window sizes.  A finite schedule is evidence about uniform boundedness,
/// never a verification: condition "bounded for all n" quantifies over all
/// of ℕ.
#[derive(Debug, Clone)]
pub struct BoundednessProfile {
    pub schedule: Vec<usize>,
    pub sups: Vec<SupEstimate>,
    pub region: IntervalSet,
}

impl BoundednessProfile {
    pub fn max_value(&self) -> f64 {
        self.sups.iter().map(|s| s.value).fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn max_certified_bound(&self) -> f64 {
        self.sups
            .iter()
            .map(|s| s.certified_bound())
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

pub(crate) fn validate_schedule(schedule: &[usize]) -> Result<()> {
    if schedule.is_empty() {
        return Err(Error::Schedule("schedule must be nonempty".into()));
    }
    if !schedule.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::Schedule("schedule must be strictly increasing".into()));
    }
    Ok(())
}

/// `sup_on_set` of `|S_n(f)|` on `region` for every `n` in `schedule`,
/// with the per-n Bernstein modulus `2πn Σ_{|k|<=n} |f̂(k)|`.
pub fn boundedness_profile(
    f: &CoefficientWindow,
    region: &IntervalSet,
    schedule: &[usize],
    level: u32,
) -> Result<BoundednessProfile> {
    validate_schedule(schedule)?;
    let max_n = *schedule.last().expect("nonempty schedule");
    if max_n > f.half_width() {
        return Err(Error::WindowExceeded { n: max_n, width: f.half_width() });
    }
    let mut sups = Vec::with_capacity(schedule.len());
    for &n in schedule {
        let modulus = TAU * n as f64 * f.abs_sum(n);
        let sup = sup_on_set(
            |x| f.partial_sum(n, x).expect("n validated against window").norm(),
            region,
            level,
            modulus,
        )?;
        sups.push(sup);
    }
    Ok(BoundednessProfile { schedule: schedule.to_vec(), sups, region: region.clone() })
}

/// Grid estimate of the `U^∞` norm
/// `sup { |Σ_{n<=k<=m} f̂(k) e^{2πikξ}| : n <= m, ξ }`.
///
/// For fixed ξ every windowed sum is a difference of two prefix sums of the
/// coefficient walk, so the supremum over windows is the diameter of the
/// prefix point set in the complex plane.  The symmetric windows are also
/// re-evaluated through the shell-ordered path, so the estimate dominates
/// every partial-sum profile computed on the same grid bit for bit.  The
/// result is a lower bound for the true norm; the certified grid bound uses
/// the modulus `2π Σ |k f̂(k)|`, valid for every windowed sum at once.
pub fn u_norm_estimate(f: &CoefficientWindow, level: u32) -> SupEstimate {
    let m = 1u64 << level;
    let m_f = m as f64;
    let n = f.half_width();
    let n_i = n as i64;
    let mut value = f64::NEG_INFINITY;
    let mut points: Vec<(f64, f64)> = Vec::with_capacity(2 * n + 2);
    for j in 0..m {
        let x = j as f64 / m_f;
        // Prefix walk with k increasing from -n to n: P_j - P_i is the
        // windowed sum over i < k <= j, and the empty prefix is the origin.
        points.clear();
        points.push((0.0, 0.0));
        let w = Complex64::from_polar(1.0, TAU * x);
        let mut wk = Complex64::from_polar(1.0, TAU * x * (-(n_i) as f64));
        let mut acc = KahanComplex::default();
        for k in -n_i..=n_i {
            acc.add(f.coeff(k) * wk);
            wk *= w;
            let s = acc.value();
            points.push((s.re, s.im));
        }
        let mut best = crate::hull::diameter(&points);
        // Symmetric windows through the shared shell-ordered path.
        f.ordered_shells(n, x, |_| 1.0, |_, s| best = best.max(s.norm()));
        value = value.max(best);
    }
    SupEstimate {
        value,
        grid_points: m as usize,
        refinement_level: level,
        modulus_bound: TAU * f.weighted_abs_sum(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn indicator(literal: &str, width: usize) -> CoefficientWindow {
        CoefficientWindow::indicator(&literal.parse().unwrap(), width)
    }

    fn region(literal: &str) -> IntervalSet {
        literal.parse().unwrap()
    }

    #[test]
    fn constant_window_partial_sum() {
        let f = CoefficientWindow::from_fn(4, |k| {
            if k == 0 { Complex64::new(1.0, 0.0) } else { Complex64::zero() }
        });
        for n in 0..=4 {
            for xi in [0.0, 0.3, 0.77] {
                let s = f.partial_sum(n, xi).unwrap();
                assert!((s - Complex64::new(1.0, 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn dirichlet_kernel_peak() {
        let f = CoefficientWindow::from_fn(8, |_| Complex64::new(1.0, 0.0));
        let s = f.partial_sum(8, 0.0).unwrap();
        assert_eq!(s, Complex64::new(17.0, 0.0));
    }

    #[test]
    fn half_interval_partial_sum_closed_form() {
        // S_1(χ_{[0,1/2)})(1/4) = 1/2 + 2/π.
        let f = indicator("0..1/2", 1);
        let s = f.partial_sum(1, 0.25).unwrap();
        assert!((s.re - (0.5 + 2.0 / PI)).abs() < 1e-14, "got {s}");
        assert!(s.im.abs() < 1e-14);
    }

    #[test]
    fn window_exceeded_is_an_error() {
        let f = indicator("0..1/2", 3);
        assert!(matches!(
            f.partial_sum(4, 0.0),
            Err(Error::WindowExceeded { n: 4, width: 3 })
        ));
    }

    #[test]
    fn fejer_mean_of_constant() {
        let f = CoefficientWindow::from_fn(5, |k| {
            if k == 0 { Complex64::new(0.7, -0.2) } else { Complex64::zero() }
        });
        for n in 1..=6 {
            let v = f.fejer_mean(n, 0.4).unwrap();
            assert!((v - Complex64::new(0.7, -0.2)).norm() < 1e-15);
        }
    }

    #[test]
    fn fejer_mean_of_dirichlet_peaks() {
        // Mean of S_0, S_1, S_2 at 0 for the all-ones window: (1+3+5)/3 = 3.
        let f = CoefficientWindow::from_fn(4, |_| Complex64::new(1.0, 0.0));
        let v = f.fejer_mean(3, 0.0).unwrap();
        assert!((v.re - 3.0).abs() < 1e-14);
    }

    #[test]
    fn fejer_rejects_empty_average() {
        let f = indicator("0..1/2", 2);
        assert!(matches!(f.fejer_mean(0, 0.0), Err(Error::EmptyAverage)));
    }

    #[test]
    fn fejer_contracts_indicators() {
        let f = indicator("0..1/2", 64);
        for xi in [0.0, 0.25, 0.5, 0.1234, 0.9] {
            let v = f.fejer_mean(64, xi).unwrap();
            assert!(v.norm() <= 1.0 + 1e-12, "Fejér mean {} at {}", v.norm(), xi);
        }
    }

    #[test]
    fn symbol_matches_reflected_partial_sum() {
        // c_k = f̂(-k)  =>  m_c = S_n(f).
        let f = indicator("5/8..7/8", 6);
        let c = f.reversed();
        for xi in [0.1, 0.33, 0.75] {
            let lhs = c.symbol(6, xi).unwrap();
            let rhs = f.partial_sum(6, xi).unwrap();
            assert!((lhs - rhs).norm() < 1e-13);
        }
    }

    #[test]
    fn sup_of_constant() {
        let est = sup_on_set(|_| 1.0, &region("0..1"), 6, 0.0).unwrap();
        assert_eq!(est.value, 1.0);
        assert_eq!(est.certified_bound(), 1.0);
    }

    #[test]
    fn sup_of_dirichlet_kernel_hits_peak() {
        let n = 8;
        let f = CoefficientWindow::from_fn(n, |_| Complex64::new(1.0, 0.0));
        let est = sup_on_set(
            |x| f.partial_sum(n, x).unwrap().norm(),
            &region("0..1"),
            7,
            TAU * n as f64 * f.abs_sum(n),
        )
        .unwrap();
        let peak = (2 * n + 1) as f64;
        assert!(est.value <= peak + 1e-12);
        assert!(est.value >= peak - 1e-9);
    }

    #[test]
    fn sup_on_empty_region_is_an_error() {
        assert!(matches!(
            sup_on_set(|_| 1.0, &IntervalSet::empty(), 4, 0.0),
            Err(Error::EmptyRegion)
        ));
    }

    #[test]
    fn sup_estimate_vs_dense_scan() {
        // S_8 of χ_{[1/4,1/2]} on [0,1/8]: a 2^20-point scan must sit between
        // the level-12 grid value and its certified bound.
        let f = indicator("1/4..1/2", 8);
        let eval = |x: f64| f.partial_sum(8, x).unwrap().norm();
        let modulus = TAU * 8.0 * f.abs_sum(8);
        let est = sup_on_set(eval, &region("0..1/8"), 12, modulus).unwrap();
        let dense = sup_on_set(eval, &region("0..1/8"), 20, modulus).unwrap();
        assert!(est.value.is_finite());
        assert!(est.value <= dense.value);
        assert!(dense.value <= est.certified_bound());
    }

    #[test]
    fn profile_of_constant_window() {
        let f = CoefficientWindow::from_fn(8, |k| {
            if k == 0 { Complex64::new(1.0, 0.0) } else { Complex64::zero() }
        });
        let p = boundedness_profile(&f, &region("1/8..3/4"), &[1, 2, 4, 8], 8).unwrap();
        for s in &p.sups {
            assert!((s.value - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn localization_drives_profile_down() {
        // f = χ_{[1/4,1/2]} vanishes on an open neighborhood of [0,1/8], so
        // S_n -> 0 uniformly there.
        let f = indicator("1/4..1/2", 256);
        let schedule = [1, 2, 4, 8, 16, 32, 64, 128, 256];
        let p = boundedness_profile(&f, &region("0..1/8"), &schedule, 12).unwrap();
        let first = p.sups[0].value;
        let last = p.sups.last().unwrap().value;
        assert!(last < first / 4.0, "first {first}, last {last}");
        assert!(p.sups[7].value < first && p.sups[8].value < p.sups[6].value);
    }

    #[test]
    fn cantor_complement_profile_is_evidence_only() {
        // No interval inside a fat Cantor set, so localization says nothing
        // about the whole complement: record the profile, assert only shape.
        let a: IntervalSet = "cantor(depth=4, remove=1/4)".parse().unwrap();
        let f = CoefficientWindow::indicator(&a, 128);
        let schedule = [1, 2, 4, 8, 16, 32, 64, 128];
        let p = boundedness_profile(&f, &a.complement(), &schedule, 11).unwrap();
        assert_eq!(p.sups.len(), schedule.len());
        for s in &p.sups {
            assert!(s.value.is_finite() && s.value >= 0.0);
            assert!(s.certified_bound() >= s.value);
        }
    }

    #[test]
    fn profile_schedule_validation() {
        let f = indicator("0..1/2", 8);
        assert!(matches!(
            boundedness_profile(&f, &region("0..1"), &[], 6),
            Err(Error::Schedule(_))
        ));
        assert!(matches!(
            boundedness_profile(&f, &region("0..1"), &[2, 2], 6),
            Err(Error::Schedule(_))
        ));
        assert!(matches!(
            boundedness_profile(&f, &region("0..1"), &[4, 16], 6),
            Err(Error::WindowExceeded { .. })
        ));
    }

    #[test]
    fn u_norm_of_constant_is_one() {
        let f = CoefficientWindow::from_fn(0, |_| Complex64::new(1.0, 0.0));
        let est = u_norm_estimate(&f, 6);
        assert!((est.value - 1.0).abs() < 1e-15);
    }

    #[test]
    fn u_norm_of_single_coefficient_is_its_modulus() {
        let c = Complex64::new(-0.3, 0.4);
        let f = CoefficientWindow::from_fn(7, |k| if k == 7 { c } else { Complex64::zero() });
        let est = u_norm_estimate(&f, 6);
        assert!((est.value - 0.5).abs() < 1e-12, "got {}", est.value);
    }

    #[test]
    fn u_norm_dominates_symmetric_profiles() {
        let f = indicator("0..1/4", 32);
        let level = 8;
        let est = u_norm_estimate(&f, level);
        let profile =
            boundedness_profile(&f, &region("0..1"), &[1, 2, 4, 8, 16, 32], level).unwrap();
        for s in &profile.sups {
            assert!(est.value >= s.value, "u-norm {} < profile sup {}", est.value, s.value);
        }
    }

    fn arb_window() -> impl Strategy<Value = CoefficientWindow> {
        (0usize..=6).prop_flat_map(|n| {
            prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 2 * n + 1).prop_map(move |cs| {
                CoefficientWindow::new(n, cs.into_iter().map(|(re, im)| Complex64::new(re, im)).collect())
                    .unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn refinement_is_monotone(f in arb_window(), lo_num in 0i64..8, len_num in 1i64..8) {
            let lo = crate::set::rational(lo_num, 16);
            let hi = crate::set::rational((lo_num + len_num).min(16), 16);
            let reg = IntervalSet::new(vec![(lo, hi)]).unwrap();
            let n = f.half_width();
            let modulus = TAU * n as f64 * f.abs_sum(n);
            let eval = |x: f64| f.partial_sum(n, x).unwrap().norm();
            let mut prev: Option<SupEstimate> = None;
            for level in 5..=9 {
                let est = sup_on_set(&eval, &reg, level, modulus).unwrap();
                if let Some(p) = prev {
                    prop_assert!(est.value >= p.value);
                    prop_assert!(est.certified_bound() <= p.certified_bound() + 1e-12);
                }
                prev = Some(est);
            }
        }

        #[test]
        fn fejer_mean_equals_average_of_partial_sums(f in arb_window(), xi in 0.0f64..1.0) {
            let n = f.half_width() + 1;
            let profile = f.partial_sum_profile(n - 1, xi).unwrap();
            let mean = profile.iter().sum::<Complex64>() / n as f64;
            let fejer = f.fejer_mean(n, xi).unwrap();
            prop_assert!((fejer - mean).norm() <= 1e-12 * (1.0 + mean.norm()));
        }
    }
}
