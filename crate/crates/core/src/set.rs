//! Exact algebra of finite interval unions in `[0,1)`.
//!
//! An [`IntervalSet`] is a sorted, disjoint, merged union of half-open
//! rational intervals and stands in for a measurable subset of `[0,1)`
//! modulo null sets.  All set operations (measure, complement,
//! intersection, Cantor construction) are exact over arbitrary-precision
//! rationals; only the Fourier coefficients of the indicator function pass
//! through floating point.
//!
//! Irrational endpoints are out of scope: callers must pre-round them to
//! rationals.  Rounding both endpoints of an interval by at most `δ`
//! perturbs the measure by at most `2δ` per interval and every Fourier
//! coefficient by at most `4πδ|k| · (1/(2π|k|)) = 2δ` in modulus, so a
//! denominator of `2^40` is already far below every tolerance used here.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational scalar used for all exact set arithmetic.
pub type Rational = num_rational::BigRational;

/// Build a rational from a small numerator/denominator pair.
pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Nearest `f64` to an exact rational.
pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().expect("rational within f64 range")
}

/// Parse `"5/8"`, `"0"`, `"1"` into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num = BigInt::from_str(num)
        .map_err(|_| Error::Parse(format!("bad rational numerator in {text:?}")))?;
    let den = BigInt::from_str(den)
        .map_err(|_| Error::Parse(format!("bad rational denominator in {text:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(num, den))
}

fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A finite disjoint union of half-open rational intervals `[lo, hi) ⊆ [0,1)`.
///
/// Invariants (maintained by every constructor): endpoints in `[0,1]` with
/// `lo < hi`, intervals sorted ascending, and strictly separated; touching
/// or overlapping inputs are merged, so the representation is canonical and
/// `complement(complement(A)) == A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalSet {
    intervals: Vec<(Rational, Rational)>,
}

impl IntervalSet {
    /// Normalize a raw interval list: validate endpoints, sort, merge
    /// overlapping or adjacent intervals.
    pub fn new(raw: Vec<(Rational, Rational)>) -> Result<Self> {
        let zero = Rational::zero();
        let one = Rational::one();
        for (lo, hi) in &raw {
            if lo >= hi {
                return Err(Error::MalformedInterval {
                    lo: fmt_rational(lo),
                    hi: fmt_rational(hi),
                });
            }
            if lo < &zero || hi > &one {
                let bad = if lo < &zero { lo } else { hi };
                return Err(Error::EndpointOutOfRange(fmt_rational(bad)));
            }
        }
        let mut raw = raw;
        raw.sort();
        let mut merged: Vec<(Rational, Rational)> = Vec::with_capacity(raw.len());
        for (lo, hi) in raw {
            match merged.last_mut() {
                Some((_, prev_hi)) if lo <= *prev_hi => {
                    if hi > *prev_hi {
                        *prev_hi = hi;
                    }
                }
                _ => merged.push((lo, hi)),
            }
        }
        Ok(IntervalSet { intervals: merged })
    }

    pub fn empty() -> Self {
        IntervalSet { intervals: Vec::new() }
    }

    /// The full circle `[0,1)`.
    pub fn full() -> Self {
        IntervalSet {
            intervals: vec![(Rational::zero(), Rational::one())],
        }
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intervals(&self) -> &[(Rational, Rational)] {
        &self.intervals
    }

    /// Exact Lebesgue measure `Σ (hi - lo)`.
    pub fn measure(&self) -> Rational {
        let mut total = Rational::zero();
        for (lo, hi) in &self.intervals {
            total += hi - lo;
        }
        total
    }

    /// Complement within `[0,1)`, again as a normalized interval union.
    pub fn complement(&self) -> IntervalSet {
        let mut out = Vec::with_capacity(self.intervals.len() + 1);
        let mut cursor = Rational::zero();
        for (lo, hi) in &self.intervals {
            if &cursor < lo {
                out.push((cursor.clone(), lo.clone()));
            }
            cursor = hi.clone();
        }
        let one = Rational::one();
        if cursor < one {
            out.push((cursor, one));
        }
        IntervalSet { intervals: out }
    }

    /// Exact intersection.
    pub fn intersection(&self, other: &IntervalSet) -> IntervalSet {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.intervals.len() && j < other.intervals.len() {
            let (alo, ahi) = &self.intervals[i];
            let (blo, bhi) = &other.intervals[j];
            let lo = alo.max(blo);
            let hi = ahi.min(bhi);
            if lo < hi {
                out.push((lo.clone(), hi.clone()));
            }
            if ahi <= bhi {
                i += 1;
            } else {
                j += 1;
            }
        }
        IntervalSet { intervals: out }
    }

    /// Membership test for an exact point (half-open convention).
    pub fn contains(&self, x: &Rational) -> bool {
        let idx = self.intervals.partition_point(|(_, hi)| hi <= x);
        match self.intervals.get(idx) {
            Some((lo, _)) => lo <= x,
            None => false,
        }
    }

    /// Depth-truncated fat Cantor (Smith–Volterra–Cantor) set.
    ///
    /// Stage `j` removes the open middle `r_j` fraction of each surviving
    /// interval, so the result has `2^depth` intervals of total measure
    /// `Π (1 - r_j)` exactly.  The infinite-depth set is the nested limit;
    /// each truncation is a superset of the next.
    pub fn fat_cantor(spec: &CantorSpec) -> Result<IntervalSet> {
        let mut intervals = vec![(Rational::zero(), Rational::one())];
        let half = rational(1, 2);
        for r in &spec.removal_fractions {
            let keep_half = (Rational::one() - r) * &half;
            let mut next = Vec::with_capacity(intervals.len() * 2);
            for (lo, hi) in &intervals {
                let len = hi - lo;
                let keep = &len * &keep_half;
                next.push((lo.clone(), lo + &keep));
                next.push((hi - &keep, hi.clone()));
            }
            intervals = next;
        }
        Ok(IntervalSet { intervals })
    }

    /// Exact Fourier coefficient of the indicator function,
    /// `∫₀¹ χ_A(ξ) e^{-2πikξ} dξ`.
    ///
    /// For `k = 0` this is the measure; otherwise
    /// `Σ_j (e^{-2πik·lo_j} - e^{-2πik·hi_j}) / (2πik)`.
    pub fn indicator_fourier_coefficient(&self, k: i64) -> Complex64 {
        if k == 0 {
            return Complex64::new(rational_to_f64(&self.measure()), 0.0);
        }
        let two_pi_k = std::f64::consts::TAU * k as f64;
        let denom = Complex64::new(0.0, two_pi_k);
        let mut sum = Complex64::new(0.0, 0.0);
        for (lo, hi) in &self.intervals {
            let lo = rational_to_f64(lo);
            let hi = rational_to_f64(hi);
            let e_lo = Complex64::from_polar(1.0, -two_pi_k * lo);
            let e_hi = Complex64::from_polar(1.0, -two_pi_k * hi);
            sum += (e_lo - e_hi) / denom;
        }
        sum
    }
}

impl fmt::Display for IntervalSet {
    /// Round-trips through the set-literal grammar (`"0..1/8, 1/4..1/2"`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return write!(f, "empty");
        }
        let parts: Vec<String> = self
            .intervals
            .iter()
            .map(|(lo, hi)| format!("{}..{}", fmt_rational(lo), fmt_rational(hi)))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

impl FromStr for IntervalSet {
    type Err = Error;

    /// Set literal: comma-separated rational ranges `"0/1..1/2, 5/8..7/8"`,
    /// the keyword `"empty"`, or `"cantor(depth=4, remove=1/4)"`.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "empty" {
            return Ok(IntervalSet::empty());
        }
        if let Some(body) = text.strip_prefix("cantor(") {
            let body = body
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cantor literal {text:?}")))?;
            return IntervalSet::fat_cantor(&CantorSpec::parse_literal_body(body)?);
        }
        let mut raw = Vec::new();
        for part in text.split(',') {
            let part = part.trim();
            let (lo, hi) = part
                .split_once("..")
                .ok_or_else(|| Error::Parse(format!("range {part:?} is not of the form lo..hi")))?;
            raw.push((parse_rational(lo)?, parse_rational(hi)?));
        }
        IntervalSet::new(raw)
    }
}

/// Construction recipe for a fat Cantor set: how many stages, and which
/// fraction of each surviving interval the stage removes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CantorSpec {
    depth: usize,
    removal_fractions: Vec<Rational>,
}

impl CantorSpec {
    pub fn new(depth: usize, removal_fractions: Vec<Rational>) -> Result<Self> {
        if removal_fractions.len() != depth {
            return Err(Error::DegenerateCantorSpec(format!(
                "depth {} but {} removal fractions",
                depth,
                removal_fractions.len()
            )));
        }
        if depth > 30 {
            return Err(Error::DegenerateCantorSpec(format!(
                "depth {depth} would build 2^{depth} intervals"
            )));
        }
        for r in &removal_fractions {
            if !(r.is_positive() && r < &Rational::one()) {
                return Err(Error::DegenerateCantorSpec(format!(
                    "removal fraction {} outside (0,1) drives the residual measure to zero",
                    fmt_rational(r)
                )));
            }
        }
        Ok(CantorSpec { depth, removal_fractions })
    }

    /// Same removal fraction at every stage.
    pub fn uniform(depth: usize, fraction: Rational) -> Result<Self> {
        CantorSpec::new(depth, vec![fraction; depth])
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Closed-form residual measure `Π (1 - r_j)`.
    pub fn residual_measure(&self) -> Rational {
        let mut m = Rational::one();
        for r in &self.removal_fractions {
            m *= Rational::one() - r;
        }
        m
    }

    fn parse_literal_body(body: &str) -> Result<Self> {
        let mut depth: Option<usize> = None;
        let mut remove: Option<Rational> = None;
        for item in body.split(',') {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("cantor argument {item:?} is not key=value")))?;
            match key.trim() {
                "depth" => {
                    depth = Some(value.trim().parse().map_err(|_| {
                        Error::Parse(format!("bad cantor depth {:?}", value.trim()))
                    })?)
                }
                "remove" => remove = Some(parse_rational(value)?),
                other => return Err(Error::Parse(format!("unknown cantor argument {other:?}"))),
            }
        }
        let depth = depth.ok_or_else(|| Error::Parse("cantor literal needs depth=".into()))?;
        let remove = remove.ok_or_else(|| Error::Parse("cantor literal needs remove=".into()))?;
        CantorSpec::uniform(depth, remove)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::adaptive_gk15;
    use proptest::prelude::*;

    fn set(literal: &str) -> IntervalSet {
        literal.parse().unwrap()
    }

    #[test]
    fn normalize_merges_adjacent() {
        assert_eq!(set("0..1/2, 1/2..1"), set("0..1"));
    }

    #[test]
    fn normalize_sorts() {
        let s = IntervalSet::new(vec![
            (rational(1, 4), rational(1, 2)),
            (rational(0, 1), rational(1, 8)),
        ])
        .unwrap();
        assert_eq!(s, set("0..1/8, 1/4..1/2"));
    }

    #[test]
    fn normalize_unions_overlap() {
        assert_eq!(set("0..1/3, 1/4..1/2"), set("0..1/2"));
    }

    #[test]
    fn malformed_interval_rejected() {
        let err = IntervalSet::new(vec![(rational(1, 2), rational(1, 2))]).unwrap_err();
        assert!(matches!(err, Error::MalformedInterval { .. }));
        let err = IntervalSet::new(vec![(rational(3, 4), rational(1, 4))]).unwrap_err();
        assert!(matches!(err, Error::MalformedInterval { .. }));
    }

    #[test]
    fn out_of_range_endpoint_rejected() {
        let err = IntervalSet::new(vec![(rational(1, 2), rational(9, 8))]).unwrap_err();
        assert!(matches!(err, Error::EndpointOutOfRange(_)));
    }

    #[test]
    fn measure_of_full_circle() {
        assert_eq!(set("0..1").measure(), Rational::one());
    }

    #[test]
    fn irrationals_in_half_interval_have_interval_hull_measure() {
        // The irrationals of [0,1/2] differ from [0,1/2) by a null set, so
        // their representative here is the hull and the measure is exactly 1/2.
        assert_eq!(set("0..1/2").measure(), rational(1, 2));
    }

    #[test]
    fn fat_cantor_measure_matches_product_formula() {
        let spec = CantorSpec::uniform(3, rational(1, 4)).unwrap();
        let a = IntervalSet::fat_cantor(&spec).unwrap();
        assert_eq!(a.intervals().len(), 8);
        assert_eq!(a.measure(), rational(27, 64));
        assert_eq!(a.measure(), spec.residual_measure());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(set("0..1/2").complement(), set("1/2..1"));
        assert_eq!(IntervalSet::empty().complement(), set("0..1"));
        assert_eq!(
            set("1/8..1/4, 1/2..3/4").complement(),
            set("0..1/8, 1/4..1/2, 3/4..1")
        );
    }

    #[test]
    fn fat_cantor_depth_one() {
        let a = IntervalSet::fat_cantor(&CantorSpec::uniform(1, rational(1, 4)).unwrap()).unwrap();
        assert_eq!(a, set("0..3/8, 5/8..1"));
        assert_eq!(a.measure(), rational(3, 4));
    }

    #[test]
    fn fat_cantor_depth_zero_is_full() {
        let a = IntervalSet::fat_cantor(&CantorSpec::uniform(0, rational(1, 4)).unwrap()).unwrap();
        assert_eq!(a, set("0..1"));
    }

    #[test]
    fn fat_cantor_depth_two_interval_sum() {
        let a = IntervalSet::fat_cantor(&CantorSpec::uniform(2, rational(1, 4)).unwrap()).unwrap();
        assert_eq!(a.intervals().len(), 4);
        assert_eq!(a.measure(), rational(9, 16));
        let by_sum: Rational = a
            .intervals()
            .iter()
            .fold(Rational::zero(), |acc, (lo, hi)| acc + (hi - lo));
        assert_eq!(by_sum, rational(9, 16));
    }

    #[test]
    fn fat_cantor_depths_nest() {
        let deep = IntervalSet::fat_cantor(&CantorSpec::uniform(5, rational(1, 4)).unwrap()).unwrap();
        let shallow =
            IntervalSet::fat_cantor(&CantorSpec::uniform(4, rational(1, 4)).unwrap()).unwrap();
        assert_eq!(deep.intersection(&shallow), deep);
    }

    #[test]
    fn degenerate_cantor_spec_rejected() {
        assert!(matches!(
            CantorSpec::uniform(2, Rational::one()),
            Err(Error::DegenerateCantorSpec(_))
        ));
        assert!(matches!(
            CantorSpec::uniform(2, Rational::zero()),
            Err(Error::DegenerateCantorSpec(_))
        ));
    }

    #[test]
    fn fourier_coefficient_of_full_circle_vanishes() {
        let c = set("0..1").indicator_fourier_coefficient(5);
        assert!(c.norm() < 1e-15);
    }

    #[test]
    fn fourier_coefficient_k0_is_measure() {
        let c = set("0..1/4").indicator_fourier_coefficient(0);
        assert_eq!(c, Complex64::new(0.25, 0.0));
    }

    #[test]
    fn fourier_coefficient_against_quadrature_oracle() {
        // ∫₀^{1/4} e^{-4πiξ} dξ computed by adaptive quadrature on the real
        // and imaginary parts separately.
        let expected_re = adaptive_gk15(
            |x| (-2.0 * std::f64::consts::TAU * x).cos(),
            0.0,
            0.25,
            1e-13,
            4,
            1000,
        )
        .value;
        let expected_im = adaptive_gk15(
            |x| (-2.0 * std::f64::consts::TAU * x).sin(),
            0.0,
            0.25,
            1e-13,
            4,
            1000,
        )
        .value;
        let c = set("0..1/4").indicator_fourier_coefficient(2);
        assert!((c.re - expected_re).abs() < 1e-12);
        assert!((c.im - expected_im).abs() < 1e-12);
        // Closed form: -i/(2π).
        assert!((c.re).abs() < 1e-15);
        assert!((c.im + 1.0 / std::f64::consts::TAU).abs() < 1e-15);
    }

    #[test]
    fn literal_round_trip() {
        for text in ["empty", "0..1/8, 1/4..1/2", "0..1", "5/8..7/8"] {
            let s = set(text);
            assert_eq!(s.to_string().parse::<IntervalSet>().unwrap(), s);
        }
    }

    #[test]
    fn cantor_literal_parses() {
        let s = set("cantor(depth=4, remove=1/4)");
        assert_eq!(s.intervals().len(), 16);
        assert_eq!(s.measure(), rational(81, 256));
    }

    #[test]
    fn contains_respects_half_open_convention() {
        let s = set("1/4..1/2");
        assert!(s.contains(&rational(1, 4)));
        assert!(s.contains(&rational(3, 8)));
        assert!(!s.contains(&rational(1, 2)));
        assert!(!s.contains(&rational(0, 1)));
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (1i64..=64).prop_flat_map(|den| (0..=den).prop_map(move |num| rational(num, den)))
    }

    fn arb_set() -> impl Strategy<Value = IntervalSet> {
        prop::collection::vec((arb_rational(), arb_rational()), 0..8).prop_map(|pairs| {
            let raw: Vec<_> = pairs
                .into_iter()
                .filter(|(lo, hi)| lo < hi)
                .collect();
            IntervalSet::new(raw).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn complement_is_involution(a in arb_set()) {
            prop_assert_eq!(a.complement().complement(), a);
        }

        #[test]
        fn complement_measure_is_exact(a in arb_set()) {
            prop_assert_eq!(a.measure() + a.complement().measure(), Rational::one());
            prop_assert!(a.intersection(&a.complement()).is_empty());
        }

        #[test]
        fn normalization_is_idempotent(a in arb_set()) {
            let again = IntervalSet::new(a.intervals().to_vec()).unwrap();
            prop_assert_eq!(again, a);
        }

        #[test]
        fn measure_additive_on_disjoint_union(cuts in prop::collection::btree_set(arb_rational(), 0..6)) {
            // Split [0,1) at random rational cuts and hand alternating cells
            // to two sets: exact measures must add back to 1.
            let mut points: Vec<Rational> = cuts.into_iter().collect();
            points.insert(0, Rational::zero());
            points.push(Rational::one());
            points.dedup();
            let mut even = Vec::new();
            let mut odd = Vec::new();
            for (i, pair) in points.windows(2).enumerate() {
                if pair[0] < pair[1] {
                    let iv = (pair[0].clone(), pair[1].clone());
                    if i % 2 == 0 { even.push(iv) } else { odd.push(iv) }
                }
            }
            let a = IntervalSet::new(even).unwrap();
            let b = IntervalSet::new(odd).unwrap();
            prop_assert!(a.intersection(&b).is_empty());
            prop_assert_eq!(a.measure() + b.measure(), Rational::one());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn parseval_partial_sums_increase_to_measure(a in arb_set()) {
            prop_assume!(!a.is_empty());
            let measure = rational_to_f64(&a.measure());
            let k_max = 10_000i64;
            let mut sum = a.indicator_fourier_coefficient(0).norm_sqr();
            for k in 1..=k_max {
                let prev = sum;
                sum += a.indicator_fourier_coefficient(k).norm_sqr();
                sum += a.indicator_fourier_coefficient(-k).norm_sqr();
                prop_assert!(sum >= prev);
            }
            prop_assert!(sum <= measure + 1e-9);
            prop_assert!(measure - sum < 1e-3);
        }
    }
}
