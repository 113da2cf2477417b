//! Families of subsets of `{1..n}` and the entropy-counting bounds on their
//! cardinality.
//!
//! Two bounds are verified numerically. The basic one compares the deformed
//! log of the family size against the sum of binary entropies of the
//! element frequencies. The second applies to k-uniform families whose
//! pairwise intersections are all distinct: with `lambda_j` the proportion
//! of member sets containing element `j` and
//! `lambda = sum_j lambda_j^2 / k`, it caps `ln_alpha(m(m-1)/2)` by
//! `k * h_alpha(lambda^2) / lambda`, provided every `lambda_j <= 1/sqrt(2)`.
//! The concavity of `lambda -> h_alpha(lambda^2)/lambda` that the second
//! bound rests on is checked on a midpoint grid.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::alpha::{alpha_log, AlphaParameter};
use crate::entropy::binary_thc_entropy;
use crate::error::{Error, Result};
use crate::outcome::CheckOutcome;

/// Slack tolerance used by the set-family inequality checks.
pub const FAMILY_CHECK_TOLERANCE: f64 = 1e-12;

/// Orders for which the k-subset intersection bound is proved.
pub const INTERSECTION_BOUND_ALPHA_MAX: f64 = 3.67;

/// A family of distinct subsets of `{1..n}`, each stored as a bitmask
/// (bit `j` set iff element `j + 1` is a member).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    n: usize,
    sets: Vec<u64>,
}

/// Wire form: `{"n": ..., "sets": [[1-indexed elements], ...]}`.
#[derive(Debug, Serialize, Deserialize)]
struct SetFamilyWire {
    n: usize,
    sets: Vec<Vec<usize>>,
}

impl SetFamily {
    pub fn new(n: usize, sets: Vec<u64>) -> Result<Self> {
        if n == 0 || n > 64 {
            return Err(Error::Argument(format!(
                "ground set size must be in 1..=64, got {n}"
            )));
        }
        let valid = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut seen = HashSet::with_capacity(sets.len());
        for (i, &s) in sets.iter().enumerate() {
            if s & !valid != 0 {
                return Err(Error::Argument(format!(
                    "set {i} contains elements outside 1..={n}"
                )));
            }
            if !seen.insert(s) {
                return Err(Error::Argument(format!(
                    "set {i} duplicates an earlier set"
                )));
            }
        }
        Ok(Self { n, sets })
    }

    /// Builds from 1-indexed element lists.
    pub fn from_elements(n: usize, sets: &[Vec<usize>]) -> Result<Self> {
        let mut masks = Vec::with_capacity(sets.len());
        for (i, set) in sets.iter().enumerate() {
            let mut mask = 0u64;
            for &e in set {
                if e == 0 || e > n || e > 64 {
                    return Err(Error::Argument(format!(
                        "set {i}: element {e} outside 1..={n}"
                    )));
                }
                mask |= 1u64 << (e - 1);
            }
            masks.push(mask);
        }
        Self::new(n, masks)
    }

    /// All `2^n` subsets of `{1..n}`.
    pub fn power_set(n: usize) -> Result<Self> {
        if n == 0 || n > 20 {
            return Err(Error::Argument(format!(
                "power-set family supported for 1..=20 elements, got {n}"
            )));
        }
        Self::new(n, (0..1u64 << n).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Family cardinality.
    pub fn m(&self) -> usize {
        self.sets.len()
    }

    pub fn sets(&self) -> &[u64] {
        &self.sets
    }

    /// Number of member sets containing each element.
    pub fn element_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.n];
        for &s in &self.sets {
            let mut bits = s;
            while bits != 0 {
                let j = bits.trailing_zeros() as usize;
                counts[j] += 1;
                bits &= bits - 1;
            }
        }
        counts
    }

    /// `Some(k)` when every member has exactly `k` elements.
    pub fn uniform_size(&self) -> Option<usize> {
        let mut sizes = self.sets.iter().map(|s| s.count_ones() as usize);
        let first = sizes.next()?;
        sizes.all(|k| k == first).then_some(first)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let wire: SetFamilyWire =
            serde_json::from_str(s).map_err(|e| Error::Ingestion(format!("family JSON: {e}")))?;
        Self::from_elements(wire.n, &wire.sets)
    }

    pub fn to_json_string(&self) -> String {
        let sets: Vec<Vec<usize>> = self
            .sets
            .iter()
            .map(|&s| {
                (0..self.n)
                    .filter(|&j| s >> j & 1 == 1)
                    .map(|j| j + 1)
                    .collect()
            })
            .collect();
        serde_json::to_string(&SetFamilyWire { n: self.n, sets })
            .expect("family serialization cannot fail")
    }
}

/// Element frequencies of a family: `q_j` is the fraction of member sets
/// containing element `j`, kept alongside the exact integer counts.
#[derive(Debug, Clone, PartialEq)]
pub struct FractionVector {
    counts: Vec<usize>,
    m: usize,
}

impl FractionVector {
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn fractions(&self) -> Vec<f64> {
        self.counts
            .iter()
            .map(|&c| c as f64 / self.m as f64)
            .collect()
    }
}

/// Element-frequency vector of a nonempty family.
pub fn fraction_vector(f: &SetFamily) -> Result<FractionVector> {
    if f.m() == 0 {
        return Err(Error::Argument("empty family has no fractions".into()));
    }
    Ok(FractionVector {
        counts: f.element_counts(),
        m: f.m(),
    })
}

/// Cardinality bound: `ln_alpha(m) <= sum_j h_alpha(q_j)` for `alpha >= 1`.
pub fn check_cardinality_bound(f: &SetFamily, alpha: AlphaParameter) -> Result<CheckOutcome> {
    if alpha.value() < 1.0 {
        return Err(Error::UnsupportedRange(format!(
            "cardinality bound is stated for orders >= 1, got {alpha}"
        )));
    }
    if f.m() == 0 {
        return Err(Error::Argument("empty family".into()));
    }
    let lhs = alpha_log(f.m() as f64, alpha)?;
    let m = f.m() as f64;
    let rhs: f64 = f
        .element_counts()
        .iter()
        .map(|&c| binary_thc_entropy(c as f64 / m, alpha).expect("fraction lies in [0,1]"))
        .sum();
    Ok(CheckOutcome::compare(lhs, rhs, FAMILY_CHECK_TOLERANCE))
}

/// True iff no two unordered pairs of members share the same intersection.
pub fn check_distinct_pairwise_intersections(f: &SetFamily) -> Result<bool> {
    if f.m() < 2 {
        return Err(Error::Argument(format!(
            "need at least two sets to compare pair intersections, got {}",
            f.m()
        )));
    }
    let sets = f.sets();
    let mut seen = HashSet::with_capacity(sets.len() * (sets.len() - 1) / 2);
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if !seen.insert(sets[i] & sets[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Result of the k-subset intersection bound.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct IntersectionBoundOutcome {
    pub lhs: f64,
    pub rhs: f64,
    /// Verified only when the frequency precondition is met.
    pub holds: bool,
    /// True iff every element frequency `lambda_j <= 1/sqrt(2)`.
    pub precondition_met: bool,
    /// Frequency-weighted mean proportion `sum_j lambda_j^2 / k`.
    pub lambda: f64,
}

/// Intersection bound for a k-uniform family with pairwise-distinct
/// intersections: `ln_alpha(m(m-1)/2) <= k * h_alpha(lambda^2) / lambda`.
///
/// The frequency precondition `lambda_j <= 1/sqrt(2)` is decided on exact
/// integer counts (`2 c_j^2 <= m^2`), so boundary cases cannot be
/// misclassified by rounding. When it fails, the two sides are still
/// reported but `holds` is not asserted.
pub fn check_intersection_family_bound(
    f: &SetFamily,
    k: usize,
    alpha: AlphaParameter,
) -> Result<IntersectionBoundOutcome> {
    if !(1.0..=INTERSECTION_BOUND_ALPHA_MAX).contains(&alpha.value()) {
        return Err(Error::UnsupportedRange(format!(
            "intersection bound is stated for orders in [1, {INTERSECTION_BOUND_ALPHA_MAX}], got {alpha}"
        )));
    }
    match f.uniform_size() {
        Some(size) if size == k && k > 0 => {}
        Some(_) | None => {
            return Err(Error::Argument(format!(
                "family is not {k}-uniform with k >= 1"
            )))
        }
    }
    if f.m() < 2 {
        return Err(Error::Argument(
            "intersection bound needs at least two sets".into(),
        ));
    }
    if !check_distinct_pairwise_intersections(f)? {
        return Err(Error::Precondition(
            "two pairs of members share the same intersection".into(),
        ));
    }

    let m = f.m();
    let counts = f.element_counts();
    // lambda_j <= 1/sqrt(2) iff 2 c_j^2 <= m^2, exactly in integers.
    let precondition_met = counts.iter().all(|&c| 2 * c * c <= m * m);

    let mf = m as f64;
    let lambda: f64 = counts
        .iter()
        .map(|&c| {
            let lj = c as f64 / mf;
            lj * lj / k as f64
        })
        .sum();

    let pairs = (m * (m - 1) / 2) as f64;
    let lhs = alpha_log(pairs, alpha)?;
    let rhs = k as f64 * binary_thc_entropy(lambda * lambda, alpha)? / lambda;
    let holds = precondition_met && lhs <= rhs + FAMILY_CHECK_TOLERANCE;
    Ok(IntersectionBoundOutcome {
        lhs,
        rhs,
        holds,
        precondition_met,
        lambda,
    })
}

/// Midpoint-concavity scan of `g(lambda) = h_alpha(lambda^2) / lambda`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ConcavityReport {
    pub passed: bool,
    /// Largest midpoint deficit `(g(a) + g(b))/2 - g((a+b)/2)` observed;
    /// nonpositive when the function is concave on the grid.
    pub worst_violation: f64,
    /// Upper end of the scanned interval.
    pub lambda_max: f64,
}

/// Slack allowed in the midpoint-concavity comparison.
pub const CONCAVITY_TOLERANCE: f64 = 1e-9;

/// Verifies concavity of `lambda -> h_alpha(lambda^2)/lambda` on a grid of
/// pairs. The scan covers `(0, 1/sqrt(2)]`, extended to `(0, 1]` for orders
/// at most 2 where the concavity holds on the whole interval.
pub fn verify_lemma_concavity(alpha: AlphaParameter, grid_step: f64) -> Result<ConcavityReport> {
    if !(1.0..=INTERSECTION_BOUND_ALPHA_MAX).contains(&alpha.value()) {
        return Err(Error::UnsupportedRange(format!(
            "concavity is claimed for orders in [1, {INTERSECTION_BOUND_ALPHA_MAX}], got {alpha}"
        )));
    }
    if !(grid_step > 0.0 && grid_step <= 0.01) {
        return Err(Error::Argument(format!(
            "grid step must lie in (0, 0.01], got {grid_step}"
        )));
    }
    let lambda_max = if alpha.value() <= 2.0 {
        1.0
    } else {
        std::f64::consts::FRAC_1_SQRT_2
    };

    let g = |lambda: f64| -> f64 {
        binary_thc_entropy(lambda * lambda, alpha).expect("lambda^2 lies in [0,1]") / lambda
    };

    // Grid points i * step; midpoints of pairs land on the half-step grid.
    let points = (lambda_max / grid_step).floor() as usize;
    let half_step = grid_step / 2.0;
    let g_half: Vec<f64> = (0..=2 * points)
        .map(|t| if t == 0 { 0.0 } else { g(t as f64 * half_step) })
        .collect();

    let mut worst = f64::NEG_INFINITY;
    for i in 1..=points {
        let gi = g_half[2 * i];
        for j in i + 1..=points {
            let deficit = 0.5 * (gi + g_half[2 * j]) - g_half[i + j];
            if deficit > worst {
                worst = deficit;
            }
        }
    }
    Ok(ConcavityReport {
        passed: worst <= CONCAVITY_TOLERANCE,
        worst_violation: worst,
        lambda_max,
    })
}

/// Exploratory inversion of the intersection bound: the largest family size
/// `m` compatible with `ln_alpha(m(m-1)/2) <= k * h_alpha(lambda^2)/lambda`
/// for a prescribed mean proportion, or `None` when the right-hand side
/// reaches the range cap of the deformed log and no finite size is excluded.
pub fn implicit_family_size_ceiling(
    k: usize,
    lambda: f64,
    alpha: AlphaParameter,
) -> Result<Option<u64>> {
    if !(1.0..=INTERSECTION_BOUND_ALPHA_MAX).contains(&alpha.value()) {
        return Err(Error::UnsupportedRange(format!(
            "intersection bound is stated for orders in [1, {INTERSECTION_BOUND_ALPHA_MAX}], got {alpha}"
        )));
    }
    if k == 0 {
        return Err(Error::Argument("subset size k must be positive".into()));
    }
    if !(lambda > 0.0 && lambda <= std::f64::consts::FRAC_1_SQRT_2) {
        return Err(Error::Argument(format!(
            "prescribed proportion must lie in (0, 1/sqrt(2)], got {lambda}"
        )));
    }
    let rhs = k as f64 * binary_thc_entropy(lambda * lambda, alpha)? / lambda;
    let admissible = |m: u64| -> bool {
        let pairs = m as f64 * (m as f64 - 1.0) / 2.0;
        match alpha_log(pairs, alpha) {
            Ok(lhs) => lhs <= rhs + FAMILY_CHECK_TOLERANCE,
            Err(_) => false,
        }
    };
    let cap = 1u64 << 62;
    if admissible(cap) {
        return Ok(None);
    }
    // Bisect the admissibility boundary; lhs is monotone in m.
    let mut lo = 2u64; // m = 2 gives lhs = ln_alpha(1) = 0 <= rhs
    let mut hi = cap;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if admissible(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Some(lo))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(v: f64) -> AlphaParameter {
        AlphaParameter::new(v).unwrap()
    }

    /// The 2-uniform family {{1,2},{1,3},{2,3}}; every element appears twice.
    fn triangle() -> SetFamily {
        SetFamily::from_elements(3, &[vec![1, 2], vec![1, 3], vec![2, 3]]).unwrap()
    }

    fn shannon_binary(q: f64) -> f64 {
        let mut h = 0.0;
        if q > 0.0 {
            h -= q * q.ln();
        }
        if q < 1.0 {
            h -= (1.0 - q) * (1.0 - q).ln();
        }
        h
    }

    #[test]
    fn family_construction_and_validation() {
        assert!(SetFamily::from_elements(3, &[vec![1, 4]]).is_err());
        assert!(SetFamily::from_elements(3, &[vec![0]]).is_err());
        assert!(SetFamily::new(3, vec![0b01, 0b01]).is_err()); // duplicate
        assert!(SetFamily::new(0, vec![]).is_err());
        let f = triangle();
        assert_eq!(f.m(), 3);
        assert_eq!(f.uniform_size(), Some(2));
        assert_eq!(f.element_counts(), vec![2, 2, 2]);
    }

    #[test]
    fn json_round_trip_uses_one_indexed_elements() {
        let f = triangle();
        let s = f.to_json_string();
        assert_eq!(s, r#"{"n":3,"sets":[[1,2],[1,3],[2,3]]}"#);
        assert_eq!(SetFamily::from_json_str(&s).unwrap(), f);
        assert!(SetFamily::from_json_str("{\"n\":2}").is_err());
    }

    #[test]
    fn power_set_fractions_are_one_half() {
        let f = SetFamily::power_set(4).unwrap();
        let fv = fraction_vector(&f).unwrap();
        assert!(fv.fractions().iter().all(|&q| q == 0.5));
        assert_eq!(fv.m(), 16);
    }

    #[test]
    fn triangle_fractions_are_two_thirds() {
        let fv = fraction_vector(&triangle()).unwrap();
        for q in fv.fractions() {
            assert!((q - 2.0 / 3.0).abs() < 1e-15);
        }
    }

    #[test]
    fn single_set_fractions_are_indicator() {
        let f = SetFamily::from_elements(2, &[vec![1]]).unwrap();
        assert_eq!(fraction_vector(&f).unwrap().fractions(), vec![1.0, 0.0]);
        let empty = SetFamily::new(2, vec![]).unwrap();
        assert!(fraction_vector(&empty).is_err());
    }

    #[test]
    fn cardinality_bound_is_tight_on_the_power_set() {
        let f = SetFamily::power_set(5).unwrap();
        let out = check_cardinality_bound(&f, a(1.0)).unwrap();
        assert!(out.holds);
        assert!((out.lhs - 5.0 * std::f64::consts::LN_2).abs() < 1e-10);
        assert!((out.lhs - out.rhs).abs() < 1e-10);
    }

    #[test]
    fn cardinality_bound_on_the_triangle() {
        let out = check_cardinality_bound(&triangle(), a(1.0)).unwrap();
        assert!(out.holds);
        assert!((out.lhs - 3.0f64.ln()).abs() < 1e-12);
        let expect_rhs = 3.0 * shannon_binary(2.0 / 3.0);
        assert!((out.rhs - expect_rhs).abs() < 1e-12);
        assert!((out.rhs - 1.9095).abs() < 1e-4);
    }

    #[test]
    fn cardinality_bound_trivial_and_error_cases() {
        let single = SetFamily::from_elements(3, &[vec![1]]).unwrap();
        let out = check_cardinality_bound(&single, a(2.0)).unwrap();
        assert_eq!(out.lhs, 0.0);
        assert!(out.holds);
        assert!(matches!(
            check_cardinality_bound(&triangle(), a(0.5)),
            Err(Error::UnsupportedRange(_))
        ));
        let empty = SetFamily::new(3, vec![]).unwrap();
        assert!(check_cardinality_bound(&empty, a(1.0)).is_err());
    }

    #[test]
    fn pairwise_intersection_distinctness() {
        assert!(check_distinct_pairwise_intersections(&triangle()).unwrap());
        let star = SetFamily::from_elements(4, &[vec![1, 2], vec![1, 3], vec![1, 4]]).unwrap();
        assert!(!check_distinct_pairwise_intersections(&star).unwrap());
        let pair = SetFamily::from_elements(4, &[vec![1, 2], vec![3, 4]]).unwrap();
        assert!(check_distinct_pairwise_intersections(&pair).unwrap());
        let single = SetFamily::from_elements(2, &[vec![1]]).unwrap();
        assert!(check_distinct_pairwise_intersections(&single).is_err());
    }

    #[test]
    fn intersection_bound_on_the_triangle() {
        let out = check_intersection_family_bound(&triangle(), 2, a(1.0)).unwrap();
        assert!(out.precondition_met);
        assert!(out.holds);
        assert!((out.lambda - 2.0 / 3.0).abs() < 1e-15);
        assert!((out.lhs - 3.0f64.ln()).abs() < 1e-12);
        let expect_rhs = 2.0 * shannon_binary(4.0 / 9.0) / (2.0 / 3.0);
        assert!((out.rhs - expect_rhs).abs() < 1e-12);
        assert!((out.rhs - 2.061).abs() < 1e-3);
    }

    #[test]
    fn intersection_bound_trivial_for_two_disjoint_sets() {
        let f = SetFamily::from_elements(4, &[vec![1, 2], vec![3, 4]]).unwrap();
        let out = check_intersection_family_bound(&f, 2, a(1.5)).unwrap();
        assert_eq!(out.lhs, 0.0); // ln_alpha of the single pair
        assert!(out.precondition_met);
        assert!(out.holds);
    }

    #[test]
    fn intersection_bound_gates_on_the_frequency_precondition() {
        // Element 1 lies in both sets: lambda_1 = 1 > 1/sqrt(2).
        let f = SetFamily::from_elements(3, &[vec![1, 2], vec![1, 3]]).unwrap();
        let out = check_intersection_family_bound(&f, 2, a(1.0)).unwrap();
        assert!(!out.precondition_met);
        assert!(!out.holds);
    }

    #[test]
    fn intersection_bound_rejects_bad_inputs() {
        let nonuniform = SetFamily::from_elements(3, &[vec![1], vec![2, 3]]).unwrap();
        assert!(matches!(
            check_intersection_family_bound(&nonuniform, 2, a(1.0)),
            Err(Error::Argument(_))
        ));
        assert!(matches!(
            check_intersection_family_bound(&triangle(), 2, a(0.9)),
            Err(Error::UnsupportedRange(_))
        ));
        assert!(matches!(
            check_intersection_family_bound(&triangle(), 2, a(3.68)),
            Err(Error::UnsupportedRange(_))
        ));
        let coinciding =
            SetFamily::from_elements(4, &[vec![1, 2], vec![1, 3], vec![1, 4]]).unwrap();
        assert!(matches!(
            check_intersection_family_bound(&coinciding, 2, a(1.0)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn frequency_precondition_uses_exact_integer_comparison() {
        // m = 10: count 7 gives 2*49 <= 100 (inside), count 8 gives 128 > 100.
        assert!(2 * 7usize.pow(2) <= 100);
        assert!(2 * 8usize.pow(2) > 100);
    }

    #[test]
    fn concavity_holds_across_the_claimed_range() {
        for al in [1.0, 2.0, 3.67] {
            let report = verify_lemma_concavity(a(al), 1e-3).unwrap();
            assert!(
                report.passed,
                "alpha={al}: worst={}",
                report.worst_violation
            );
        }
        // Orders at most 2 scan the full unit interval.
        let r = verify_lemma_concavity(a(2.0), 1e-3).unwrap();
        assert_eq!(r.lambda_max, 1.0);
        let r = verify_lemma_concavity(a(3.0), 1e-3).unwrap();
        assert_eq!(r.lambda_max, std::f64::consts::FRAC_1_SQRT_2);
    }

    #[test]
    fn concavity_scan_rejects_bad_parameters() {
        assert!(verify_lemma_concavity(a(0.9), 1e-3).is_err());
        assert!(verify_lemma_concavity(a(3.7), 1e-3).is_err());
        assert!(verify_lemma_concavity(a(2.0), 0.0).is_err());
        assert!(verify_lemma_concavity(a(2.0), 0.02).is_err());
    }

    #[test]
    fn family_size_ceiling_bisection() {
        // Triangle parameters: rhs = 2 h(4/9) / (2/3); solve ln(m(m-1)/2) <= rhs.
        let rhs = 2.0 * shannon_binary(4.0 / 9.0) / (2.0 / 3.0);
        let ceiling = implicit_family_size_ceiling(2, 2.0 / 3.0, a(1.0))
            .unwrap()
            .unwrap();
        // Oracle: largest m with m(m-1)/2 <= e^rhs, scanned directly.
        let cap = rhs.exp();
        let mut expect = 2;
        while (expect + 1) as f64 * expect as f64 / 2.0 <= cap + 1e-9 {
            expect += 1;
        }
        assert_eq!(ceiling, expect);
        // The triangle itself satisfies the bound, so m = 3 is admissible.
        assert!(ceiling >= 3);

        // Past the deformed-log cap nothing is excluded.
        let unbounded = implicit_family_size_ceiling(40, 0.7, a(3.0)).unwrap();
        assert_eq!(unbounded, None);

        assert!(implicit_family_size_ceiling(0, 0.5, a(1.0)).is_err());
        assert!(implicit_family_size_ceiling(2, 0.8, a(1.0)).is_err());
        assert!(implicit_family_size_ceiling(2, 0.5, a(0.5)).is_err());
    }
}
