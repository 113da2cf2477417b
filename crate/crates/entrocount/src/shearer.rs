//! Executable verifiers for the Shearer-type entropy inequalities.
//!
//! Each check evaluates both sides of one theorem on a concrete joint table
//! (or set family) and reports whether the inequality holds within a small
//! slack. These are theorem verifications: on valid inputs a `false` verdict
//! indicates an implementation bug, never a counterexample.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::alpha::{alpha_log, AlphaParameter};
use crate::dist::JointTable;
use crate::entropy::{conditional_entropy, joint_entropy, ConditionalForm};
use crate::error::{Error, Result};
use crate::outcome::CheckOutcome;
use crate::set_family::SetFamily;

/// Slack tolerance for the entropy-valued inequalities.
pub const SHEARER_TOLERANCE: f64 = 1e-10;
/// Slack tolerance for the deformed-log counting corollary.
pub const TRACE_TOLERANCE: f64 = 1e-12;

/// A family of coordinate groups covering every coordinate at least `k`
/// times, with `k` the exact minimum coverage (never caller-supplied, so a
/// stale count cannot weaken the inequality).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverFamily {
    n: usize,
    groups: Vec<Vec<usize>>,
    k: usize,
}

/// Wire form: `{"n": ..., "groups": [[1-indexed coords], ...]}`.
#[derive(Debug, Serialize, Deserialize)]
struct CoverFamilyWire {
    n: usize,
    groups: Vec<Vec<usize>>,
}

impl CoverFamily {
    /// Groups are sets of 0-based coordinates in `0..n`; duplicates within a
    /// group are rejected, repeated groups are allowed (a multiset cover).
    pub fn new(n: usize, groups: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Argument("cover over zero coordinates".into()));
        }
        let mut coverage = vec![0usize; n];
        for (g, group) in groups.iter().enumerate() {
            let mut seen = vec![false; n];
            for &c in group {
                if c >= n {
                    return Err(Error::Argument(format!(
                        "group {g}: coordinate {c} out of range for n = {n}"
                    )));
                }
                if seen[c] {
                    return Err(Error::Argument(format!(
                        "group {g}: coordinate {c} repeated"
                    )));
                }
                seen[c] = true;
                coverage[c] += 1;
            }
        }
        let k = coverage.iter().copied().min().unwrap_or(0);
        Ok(Self { n, groups, k })
    }

    /// The cover `{{0}, {1}, .., {n-1}}` with `k = 1`, under which the
    /// Shearer inequality degenerates to plain subadditivity.
    pub fn singletons(n: usize) -> Result<Self> {
        Self::new(n, (0..n).map(|c| vec![c]).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    /// Exact minimum coverage count over all coordinates.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let wire: CoverFamilyWire =
            serde_json::from_str(s).map_err(|e| Error::Ingestion(format!("cover JSON: {e}")))?;
        let mut groups = Vec::with_capacity(wire.groups.len());
        for (g, group) in wire.groups.iter().enumerate() {
            let mut zero_based = Vec::with_capacity(group.len());
            for &c in group {
                if c == 0 {
                    return Err(Error::Ingestion(format!(
                        "group {g}: coordinates are 1-indexed, found 0"
                    )));
                }
                zero_based.push(c - 1);
            }
            groups.push(zero_based);
        }
        Self::new(wire.n, groups)
    }

    pub fn to_json_string(&self) -> String {
        let groups: Vec<Vec<usize>> = self
            .groups
            .iter()
            .map(|g| g.iter().map(|&c| c + 1).collect())
            .collect();
        serde_json::to_string(&CoverFamilyWire { n: self.n, groups })
            .expect("cover serialization cannot fail")
    }
}

fn require_order_at_least_one(alpha: AlphaParameter, what: &str) -> Result<()> {
    if alpha.value() < 1.0 {
        return Err(Error::UnsupportedRange(format!(
            "{what} is stated for orders >= 1, got {alpha}"
        )));
    }
    Ok(())
}

/// Subadditivity over product coordinates:
/// `H_alpha(X) <= sum_j H_alpha(X_j)` for `alpha >= 1`.
pub fn check_subadditivity(t: &JointTable, alpha: AlphaParameter) -> Result<CheckOutcome> {
    require_order_at_least_one(alpha, "subadditivity")?;
    let all: Vec<usize> = (0..t.num_coords()).collect();
    let lhs = joint_entropy(t, &all, alpha)?;
    let mut rhs = 0.0;
    for j in 0..t.num_coords() {
        rhs += joint_entropy(t, &[j], alpha)?;
    }
    Ok(CheckOutcome::compare(lhs, rhs, SHEARER_TOLERANCE))
}

/// Shearer inequality: `k * H_alpha(X) <= sum_G H_alpha(X(G))` when every
/// coordinate lies in at least `k` groups of the cover, for `alpha >= 1`.
pub fn check_shearer(
    t: &JointTable,
    cover: &CoverFamily,
    alpha: AlphaParameter,
) -> Result<CheckOutcome> {
    require_order_at_least_one(alpha, "the Shearer inequality")?;
    if cover.n() != t.num_coords() {
        return Err(Error::Argument(format!(
            "cover is over {} coordinates but the table has {}",
            cover.n(),
            t.num_coords()
        )));
    }
    let all: Vec<usize> = (0..t.num_coords()).collect();
    let lhs = cover.k() as f64 * joint_entropy(t, &all, alpha)?;
    let mut rhs = 0.0;
    for group in cover.groups() {
        if group.is_empty() {
            continue; // the empty marginal carries no entropy
        }
        rhs += joint_entropy(t, group, alpha)?;
    }
    Ok(CheckOutcome::compare(lhs, rhs, SHEARER_TOLERANCE))
}

/// Set-family corollary of the Shearer inequality:
/// `k * ln_alpha|F| <= sum_j ln_alpha|F_j|` with `F_j = {F ∩ G_j}` the traces
/// of the family on the groups and `k` the minimum coverage of ground-set
/// elements by the groups.
pub fn check_trace_corollary(
    f: &SetFamily,
    groups: &SetFamily,
    alpha: AlphaParameter,
) -> Result<CheckOutcome> {
    require_order_at_least_one(alpha, "the trace corollary")?;
    if f.n() != groups.n() {
        return Err(Error::Argument(format!(
            "family ground set has {} elements, groups are over {}",
            f.n(),
            groups.n()
        )));
    }
    if f.m() == 0 {
        return Err(Error::Argument("empty family".into()));
    }
    if groups.m() == 0 {
        return Err(Error::Argument("empty group family".into()));
    }

    // k = minimum over ground-set elements of their coverage by groups.
    let coverage = groups.element_counts();
    let k = *coverage.iter().min().expect("ground set is nonempty");
    if k == 0 {
        let uncovered = coverage.iter().position(|&c| c == 0).expect("some zero");
        return Err(Error::Argument(format!(
            "element {} is covered by no group",
            uncovered + 1
        )));
    }

    let lhs = k as f64 * alpha_log(f.m() as f64, alpha)?;
    let mut rhs = 0.0;
    for &g in groups.sets() {
        let traces: HashSet<u64> = f.sets().iter().map(|&s| s & g).collect();
        rhs += alpha_log(traces.len() as f64, alpha)?;
    }
    Ok(CheckOutcome::compare(lhs, rhs, TRACE_TOLERANCE))
}

/// Verifies that the conditional entropy of `target` is non-increasing along
/// the prefixes of `chain`. The Daroczy form requires order >= 1; the
/// weighted form holds for every positive order.
///
/// A chain entry equal to `target` (or repeated) is allowed: conditioning on
/// a set containing the target itself pins the entropy to zero.
pub fn check_conditioning_monotonicity(
    t: &JointTable,
    target: usize,
    chain: &[usize],
    alpha: AlphaParameter,
    form: ConditionalForm,
) -> Result<bool> {
    if form == ConditionalForm::Daroczy {
        require_order_at_least_one(alpha, "Daroczy-form conditioning monotonicity")?;
    }
    if target >= t.num_coords() {
        return Err(Error::Argument(format!(
            "target coordinate {target} out of range"
        )));
    }
    for &c in chain {
        if c >= t.num_coords() {
            return Err(Error::Argument(format!(
                "chain coordinate {c} out of range"
            )));
        }
    }

    let mut previous = f64::INFINITY;
    for len in 0..=chain.len() {
        let mut prefix: Vec<usize> = Vec::with_capacity(len);
        for &c in &chain[..len] {
            if !prefix.contains(&c) {
                prefix.push(c);
            }
        }
        let h = if prefix.contains(&target) {
            0.0
        } else {
            conditional_entropy(t, &[target], &prefix, alpha, form)?
        };
        if h > previous + SHEARER_TOLERANCE {
            return Ok(false);
        }
        previous = h;
    }
    Ok(true)
}

/// Merge bound on conditional entropy: partition the conditioning alphabet
/// into blocks `omega_j` with pairwise-distinct target supports `varpi_j`;
/// then the conditional entropy is at most
/// `sum_j Pr[Y in omega_j]^alpha * ln_alpha|varpi_j|` (Daroczy, order >= 1)
/// or `sum_j Pr[Y in omega_j] * ln_alpha|varpi_j|` (weighted, any order).
pub fn check_merge_bound(
    t: &JointTable,
    target: usize,
    given: usize,
    partition: &[Vec<usize>],
    alpha: AlphaParameter,
    form: ConditionalForm,
) -> Result<CheckOutcome> {
    if form == ConditionalForm::Daroczy {
        require_order_at_least_one(alpha, "the Daroczy-form merge bound")?;
    }
    if target == given {
        return Err(Error::Argument(
            "target and conditioning coordinates must differ".into(),
        ));
    }
    if target >= t.num_coords() || given >= t.num_coords() {
        return Err(Error::Argument("coordinate out of range".into()));
    }

    // Check the partition covers the conditioning alphabet exactly once.
    let y_size = t.shape()[given];
    let mut covered = vec![false; y_size];
    for block in partition {
        if block.is_empty() {
            return Err(Error::Precondition("empty partition block".into()));
        }
        for &y in block {
            if y >= y_size {
                return Err(Error::Precondition(format!(
                    "partition value {y} out of range for alphabet of size {y_size}"
                )));
            }
            if covered[y] {
                return Err(Error::Precondition(format!(
                    "value {y} appears in more than one partition block"
                )));
            }
            covered[y] = true;
        }
    }
    if let Some(y) = covered.iter().position(|&c| !c) {
        return Err(Error::Precondition(format!(
            "value {y} is not covered by the partition"
        )));
    }

    // Arrange the pair marginal as p(y, x) so y-slices are contiguous.
    let marginal = t.marginalize(&[given, target])?;
    let x_size = t.shape()[target];
    let slices: Vec<&[f64]> = marginal.probs().chunks_exact(x_size).collect();

    let mut block_prob = Vec::with_capacity(partition.len());
    let mut block_support = Vec::with_capacity(partition.len());
    for block in partition {
        let mut pr = 0.0;
        let mut support = vec![false; x_size];
        for &y in block {
            for (x, &p) in slices[y].iter().enumerate() {
                pr += p;
                if p > 0.0 {
                    support[x] = true;
                }
            }
        }
        block_prob.push(pr);
        block_support.push(support);
    }

    // Supports of positive-probability blocks must be pairwise distinct.
    let mut seen: HashSet<Vec<bool>> = HashSet::new();
    for (j, support) in block_support.iter().enumerate() {
        if block_prob[j] > 0.0 && !seen.insert(support.clone()) {
            return Err(Error::Precondition(format!(
                "block {j} shares its target support with an earlier block"
            )));
        }
    }

    let lhs = conditional_entropy(t, &[target], &[given], alpha, form)?;
    let mut rhs = 0.0;
    for (j, &pr) in block_prob.iter().enumerate() {
        if pr <= 0.0 {
            continue;
        }
        let size = block_support[j].iter().filter(|&&b| b).count();
        let weight = match form {
            ConditionalForm::Daroczy => {
                if alpha.is_shannon() {
                    pr
                } else {
                    pr.powf(alpha.value())
                }
            }
            ConditionalForm::Weighted => pr,
        };
        rhs += weight * alpha_log(size as f64, alpha)?;
    }
    Ok(CheckOutcome::compare(lhs, rhs, SHEARER_TOLERANCE))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(v: f64) -> AlphaParameter {
        AlphaParameter::new(v).unwrap()
    }

    fn uniform_bits() -> JointTable {
        JointTable::new(vec![2, 2], vec![0.25; 4]).unwrap()
    }

    #[test]
    fn cover_computes_minimum_coverage() {
        let c = CoverFamily::new(2, vec![vec![0], vec![0, 1]]).unwrap();
        assert_eq!(c.k(), 1);
        let c = CoverFamily::new(2, vec![vec![0], vec![1], vec![0, 1]]).unwrap();
        assert_eq!(c.k(), 2);
        let uncovered = CoverFamily::new(3, vec![vec![0], vec![1]]).unwrap();
        assert_eq!(uncovered.k(), 0);
        assert!(CoverFamily::new(2, vec![vec![2]]).is_err());
        assert!(CoverFamily::new(2, vec![vec![0, 0]]).is_err());
    }

    #[test]
    fn cover_json_round_trip_is_one_indexed() {
        let c = CoverFamily::new(3, vec![vec![0, 1], vec![2]]).unwrap();
        let s = c.to_json_string();
        assert_eq!(s, r#"{"n":3,"groups":[[1,2],[3]]}"#);
        assert_eq!(CoverFamily::from_json_str(&s).unwrap(), c);
        assert!(CoverFamily::from_json_str(r#"{"n":2,"groups":[[0]]}"#).is_err());
    }

    #[test]
    fn subadditivity_on_independent_bits() {
        let out = check_subadditivity(&uniform_bits(), a(2.0)).unwrap();
        assert!(out.holds);
        assert!((out.lhs - 0.75).abs() < 1e-15);
        assert!((out.rhs - 1.0).abs() < 1e-15);
    }

    #[test]
    fn subadditivity_on_correlated_bits() {
        let t = JointTable::new(vec![2, 2], vec![0.5, 0.0, 0.0, 0.5]).unwrap();
        let out = check_subadditivity(&t, a(1.0)).unwrap();
        assert!(out.holds);
        assert!((out.lhs - std::f64::consts::LN_2).abs() < 1e-12);
        assert!((out.rhs - 2.0 * std::f64::consts::LN_2).abs() < 1e-12);
    }

    #[test]
    fn subadditivity_is_tight_for_independent_coordinates_at_order_one() {
        // p(x, y) = p(x) q(y) with skewed marginals.
        let px = [0.7, 0.3];
        let qy = [0.2, 0.5, 0.3];
        let probs: Vec<f64> = px
            .iter()
            .flat_map(|&p| qy.iter().map(move |&q| p * q))
            .collect();
        let t = JointTable::new(vec![2, 3], probs).unwrap();
        let out = check_subadditivity(&t, a(1.0)).unwrap();
        assert!((out.lhs - out.rhs).abs() < 1e-12);
    }

    #[test]
    fn subadditivity_rejects_small_orders() {
        assert!(matches!(
            check_subadditivity(&uniform_bits(), a(0.5)),
            Err(Error::UnsupportedRange(_))
        ));
    }

    #[test]
    fn shearer_on_uniform_bits_with_overlapping_cover() {
        let cover = CoverFamily::new(2, vec![vec![0], vec![1], vec![0, 1]]).unwrap();
        let out = check_shearer(&uniform_bits(), &cover, a(2.0)).unwrap();
        assert!(out.holds);
        assert!((out.lhs - 1.5).abs() < 1e-15); // 2 * ln_2(4)
        assert!((out.rhs - 1.75).abs() < 1e-15); // 0.5 + 0.5 + 0.75
    }

    #[test]
    fn shearer_with_full_cover_is_an_identity() {
        let t = JointTable::new(vec![2, 3], vec![0.1, 0.2, 0.3, 0.05, 0.15, 0.2]).unwrap();
        let cover = CoverFamily::new(2, vec![vec![0, 1]]).unwrap();
        let out = check_shearer(&t, &cover, a(1.7)).unwrap();
        assert!((out.lhs - out.rhs).abs() < 1e-15);
    }

    #[test]
    fn shearer_on_a_point_mass_is_zero_both_sides() {
        let mut probs = vec![0.0; 8];
        probs[5] = 1.0;
        let t = JointTable::new(vec![2, 2, 2], probs).unwrap();
        let cover = CoverFamily::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let out = check_shearer(&t, &cover, a(2.0)).unwrap();
        assert_eq!(out.lhs, 0.0);
        assert_eq!(out.rhs, 0.0);
        assert!(out.holds);
    }

    #[test]
    fn shearer_singleton_cover_matches_subadditivity() {
        let t = JointTable::new(vec![2, 3], vec![0.1, 0.2, 0.3, 0.05, 0.15, 0.2]).unwrap();
        let cover = CoverFamily::singletons(2).unwrap();
        for al in [1.0, 1.5, 2.0, 3.0] {
            let sh = check_shearer(&t, &cover, a(al)).unwrap();
            let sub = check_subadditivity(&t, a(al)).unwrap();
            assert!((sh.lhs - sub.lhs).abs() < 1e-12);
            assert!((sh.rhs - sub.rhs).abs() < 1e-12);
        }
    }

    #[test]
    fn shearer_rejects_mismatched_cover() {
        let cover = CoverFamily::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert!(check_shearer(&uniform_bits(), &cover, a(1.0)).is_err());
    }

    #[test]
    fn trace_corollary_on_the_power_set_factorizes() {
        let f = SetFamily::power_set(2).unwrap();
        let groups = SetFamily::from_elements(2, &[vec![1], vec![2]]).unwrap();
        let at_one = check_trace_corollary(&f, &groups, a(1.0)).unwrap();
        assert!((at_one.lhs - 4.0f64.ln()).abs() < 1e-12);
        assert!((at_one.lhs - at_one.rhs).abs() < 1e-12);
        let at_two = check_trace_corollary(&f, &groups, a(2.0)).unwrap();
        assert!((at_two.lhs - 0.75).abs() < 1e-15);
        assert!((at_two.rhs - 1.0).abs() < 1e-15);
        assert!(at_two.holds);
    }

    #[test]
    fn trace_corollary_with_whole_ground_set_group() {
        let f = SetFamily::from_elements(3, &[vec![1], vec![1, 2], vec![2, 3]]).unwrap();
        let groups = SetFamily::from_elements(3, &[vec![1, 2, 3]]).unwrap();
        let out = check_trace_corollary(&f, &groups, a(1.5)).unwrap();
        assert!((out.lhs - out.rhs).abs() < 1e-15);
    }

    #[test]
    fn trace_corollary_requires_full_coverage() {
        let f = SetFamily::power_set(2).unwrap();
        let groups = SetFamily::from_elements(2, &[vec![1]]).unwrap();
        assert!(matches!(
            check_trace_corollary(&f, &groups, a(1.0)),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn monotonicity_is_flat_for_independent_coordinates() {
        let px = [0.7, 0.3];
        let qy = [0.2, 0.5, 0.3];
        let rz = [0.6, 0.4];
        let mut probs = Vec::new();
        for &p in &px {
            for &q in &qy {
                for &r in &rz {
                    probs.push(p * q * r);
                }
            }
        }
        let t = JointTable::new(vec![2, 3, 2], probs).unwrap();
        for form in [ConditionalForm::Daroczy, ConditionalForm::Weighted] {
            assert!(check_conditioning_monotonicity(&t, 0, &[1, 2], a(2.0), form).unwrap());
        }
        // Conditioning on the target itself drops the entropy to zero.
        assert!(
            check_conditioning_monotonicity(&t, 0, &[1, 0], a(2.0), ConditionalForm::Daroczy)
                .unwrap()
        );
    }

    #[test]
    fn monotonicity_respects_form_ranges() {
        let t = uniform_bits();
        assert!(matches!(
            check_conditioning_monotonicity(&t, 0, &[1], a(0.5), ConditionalForm::Daroczy),
            Err(Error::UnsupportedRange(_))
        ));
        assert!(
            check_conditioning_monotonicity(&t, 0, &[1], a(0.5), ConditionalForm::Weighted)
                .unwrap()
        );
        assert!(
            check_conditioning_monotonicity(&t, 2, &[], a(1.0), ConditionalForm::Daroczy).is_err()
        );
    }

    /// Block 0 = {y=0} with X pinned to 0; block 1 = {y=1, y=2} with X
    /// uniform on {1, 2}. Equal block probabilities 1/2.
    fn two_block_table() -> JointTable {
        JointTable::new(
            vec![3, 3],
            vec![
                0.5, 0.0, 0.0, // x = 0 occurs only with y = 0
                0.0, 0.125, 0.125, // x = 1 with y in {1, 2}
                0.0, 0.125, 0.125, // x = 2 with y in {1, 2}
            ],
        )
        .unwrap()
    }

    #[test]
    fn monotonicity_on_random_tables() {
        let mut rng = crate::campaign::SplitMix64::new(5);
        for _ in 0..20 {
            let t = crate::campaign::random_table(&mut rng, 3, 4);
            let chain: Vec<usize> = (1..t.num_coords()).collect();
            assert!(check_conditioning_monotonicity(
                &t,
                0,
                &chain,
                a(2.0),
                ConditionalForm::Daroczy
            )
            .unwrap());
            assert!(check_conditioning_monotonicity(
                &t,
                0,
                &chain,
                a(0.7),
                ConditionalForm::Weighted
            )
            .unwrap());
        }
    }

    #[test]
    fn merge_bound_is_tight_for_uniform_blocks_at_order_one() {
        let t = two_block_table();
        let out = check_merge_bound(
            &t,
            0,
            1,
            &[vec![0], vec![1, 2]],
            a(1.0),
            ConditionalForm::Weighted,
        )
        .unwrap();
        let expect = 0.5 * std::f64::consts::LN_2;
        assert!((out.lhs - expect).abs() < 1e-12);
        assert!((out.rhs - expect).abs() < 1e-12);
        assert!(out.holds);
    }

    #[test]
    fn merge_bound_when_target_is_determined_by_the_block() {
        // X = 0 iff y = 0, X = 1 iff y in {1, 2}: zero conditional entropy.
        let t = JointTable::new(vec![2, 3], vec![0.4, 0.0, 0.0, 0.0, 0.3, 0.3]).unwrap();
        let out = check_merge_bound(
            &t,
            0,
            1,
            &[vec![0], vec![1, 2]],
            a(2.0),
            ConditionalForm::Daroczy,
        )
        .unwrap();
        assert_eq!(out.lhs, 0.0);
        assert!(out.holds);
    }

    #[test]
    fn merge_bound_single_block_with_uniform_target() {
        // X uniform on 3 outcomes, independent of Y.
        let probs: Vec<f64> = vec![1.0 / 6.0; 6];
        let t = JointTable::new(vec![3, 2], probs).unwrap();
        for al in [0.5, 1.0, 2.0] {
            let out = check_merge_bound(&t, 0, 1, &[vec![0, 1]], a(al), ConditionalForm::Weighted)
                .unwrap();
            let expect = alpha_log(3.0, a(al)).unwrap();
            assert!((out.lhs - expect).abs() < 1e-12, "alpha={al}");
            assert!((out.rhs - expect).abs() < 1e-12, "alpha={al}");
        }
    }

    #[test]
    fn merge_bound_rejects_coinciding_supports_and_bad_partitions() {
        let t = uniform_bits(); // both y-slices have full x-support
        assert!(matches!(
            check_merge_bound(
                &t,
                0,
                1,
                &[vec![0], vec![1]],
                a(1.0),
                ConditionalForm::Weighted
            ),
            Err(Error::Precondition(_))
        ));
        let t2 = two_block_table();
        assert!(check_merge_bound(
            &t2,
            0,
            1,
            &[vec![0], vec![1]],
            a(1.0),
            ConditionalForm::Weighted
        )
        .is_err()); // y = 2 uncovered
        assert!(check_merge_bound(
            &t2,
            0,
            1,
            &[vec![0, 1], vec![1, 2]],
            a(1.0),
            ConditionalForm::Weighted
        )
        .is_err()); // y = 1 covered twice
        assert!(check_merge_bound(
            &t2,
            1,
            1,
            &[vec![0, 1, 2]],
            a(1.0),
            ConditionalForm::Weighted
        )
        .is_err()); // target equals conditioning coordinate
    }
}
