//! Seeded randomized verification campaigns.
//!
//! Each suite draws instances from a deterministic generator, runs the
//! relevant theorem checks at every requested order, and aggregates pass
//! counts, the worst slack seen, and any violations. The checks verify
//! proved inequalities, so a violation is an implementation bug; the
//! offending instance is serialized in full so it can be replayed.
//!
//! The generator is a self-contained SplitMix64 stream, keeping campaign
//! output stable across library upgrades: the same seed and configuration
//! always produce the same instances and, byte for byte, the same report.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::alpha::AlphaParameter;
use crate::bounds::{alpha_bound, bregman_bound};
use crate::dist::JointTable;
use crate::entropy::{conditional_entropy, joint_entropy, ConditionalForm};
use crate::error::{Error, Result};
use crate::permanent::{expand_minor, permanent_bruteforce, permanent_ryser, BinaryMatrix};
use crate::set_family::{
    check_cardinality_bound, check_intersection_family_bound, SetFamily,
    INTERSECTION_BOUND_ALPHA_MAX,
};
use crate::shearer::{
    check_merge_bound, check_shearer, check_subadditivity, check_trace_corollary, CoverFamily,
};

/// Default slack for entropy-valued comparisons.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;
/// Slack allowed when checking `per(A) <= ceiling`.
pub const PERMANENT_VALIDITY_TOLERANCE: f64 = 1e-9;
/// Floor of the relative gap allowed between near-unity ceilings and the
/// Bregman–Minc bound; see [`bregman_limit_allowance`].
pub const BREGMAN_LIMIT_RELATIVE_TOLERANCE: f64 = 1e-4;
/// Offset from 1 at which the Bregman limit is probed.
pub const BREGMAN_LIMIT_EPSILON: f64 = 1e-6;

/// Relative gap allowed between the ceiling at orders `1 ± eps` and the
/// Bregman–Minc bound, for a matrix whose entropy-space bound at order 1 is
/// `rhs_at_one` (that is, `ln` of the Bregman bound).
///
/// The ceiling's log deviates from `ln(bregman)` at first order by
/// `eps * (R^2/2 + sum_i (1/r_i) sum_j (ln j)^2 / 2)` with `R = rhs_at_one`;
/// the second summand is below `R^2/2` once `R` exceeds `ln(max r_i)`, so
/// `2 eps R^2` caps the true deviation with room to spare. Dense matrices
/// (large `R`) genuinely exceed the flat 1e-4 floor, which is calibrated to
/// Bernoulli(1/2) instances of dimension at most 10.
pub fn bregman_limit_allowance(rhs_at_one: f64) -> f64 {
    BREGMAN_LIMIT_RELATIVE_TOLERANCE.max(2.0 * BREGMAN_LIMIT_EPSILON * rhs_at_one * rhs_at_one)
}
/// Slack for the deformed-log counting checks (trace corollary, families).
pub const COUNTING_TOLERANCE: f64 = 1e-12;

pub const DEFAULT_ENTROPY_ALPHAS: [f64; 5] = [0.5, 1.0, 1.5, 2.0, 3.0];
pub const DEFAULT_SHEARER_ALPHAS: [f64; 4] = [1.0, 1.5, 2.0, 3.0];
pub const DEFAULT_FAMILY_ALPHAS: [f64; 4] = [1.0, 1.5, 2.0, 3.0];
pub const DEFAULT_PERMANENT_ALPHAS: [f64; 9] = [0.25, 0.5, 0.9, 1.0, 1.1, 1.5, 2.0, 3.0, 5.0];

/// Eight orders spanning the proved range of the intersection bound.
pub fn intersection_alpha_grid() -> Vec<f64> {
    (0..8)
        .map(|i| 1.0 + i as f64 * (INTERSECTION_BOUND_ALPHA_MAX - 1.0) / 7.0)
        .collect()
}

fn default_density() -> f64 {
    0.5
}

/// Configuration of one campaign run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunConfig {
    /// Seed of the instance stream.
    pub seed: u64,
    /// Slack for entropy-valued comparisons (counting and permanent checks
    /// keep their own fixed tolerances).
    pub tolerance: f64,
    /// Orders to test at; empty means the suite default.
    pub alpha_list: Vec<f64>,
    /// Number of generated instances.
    pub instances: usize,
    /// Bernoulli density of random-matrix entries in the permanent suite.
    #[serde(default = "default_density")]
    pub matrix_density: f64,
}

impl RunConfig {
    pub fn new(seed: u64, instances: usize) -> Self {
        Self {
            seed,
            tolerance: DEFAULT_TOLERANCE,
            alpha_list: Vec::new(),
            instances,
            matrix_density: default_density(),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.instances == 0 {
            return Err(Error::Argument("instance count must be at least 1".into()));
        }
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err(Error::Argument(format!(
                "tolerance must be positive, got {}",
                self.tolerance
            )));
        }
        if !(self.matrix_density > 0.0 && self.matrix_density <= 1.0) {
            return Err(Error::Argument(format!(
                "matrix density must lie in (0, 1], got {}",
                self.matrix_density
            )));
        }
        for &a in &self.alpha_list {
            if !(a > 0.0 && a.is_finite()) {
                return Err(Error::Argument(format!("order {a} is not positive")));
            }
        }
        Ok(())
    }

    fn alphas_or(&self, default: &[f64]) -> Vec<f64> {
        if self.alpha_list.is_empty() {
            default.to_vec()
        } else {
            self.alpha_list.clone()
        }
    }
}

/// A failed check together with its replayable instance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Violation {
    pub check: String,
    pub alpha: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub instance: Value,
}

/// Aggregated result of one suite.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteOutcome {
    pub suite: String,
    pub seed: u64,
    pub instances: usize,
    pub checks_run: usize,
    pub violations: Vec<Violation>,
    /// Smallest `rhs - lhs` over the inequality checks (the closest call).
    pub worst_slack: f64,
    /// Largest `|lhs - rhs|` over the equality checks.
    pub worst_equality_gap: f64,
    /// Zero-row matrices generated and excluded from bound-validity stats.
    pub excluded_zero_rows: usize,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn passes(&self) -> usize {
        self.checks_run - self.violations.len()
    }
}

/// SplitMix64; a fixed, dependency-free stream so seeds stay reproducible.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1).
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in 0..n.
    pub fn below(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        ((self.next_u64() as u128 * n as u128) >> 64) as usize
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.next_f64() < p
    }

    /// Fisher–Yates shuffle.
    pub fn shuffle<T>(&mut self, slice: &mut [T]) {
        for i in (1..slice.len()).rev() {
            slice.swap(i, self.below(i + 1));
        }
    }
}

// ---------------------------------------------------------------------------
// Instance generators
// ---------------------------------------------------------------------------

/// Bernoulli(p) matrix of dimension n.
pub fn random_matrix(rng: &mut SplitMix64, n: usize, p: f64) -> BinaryMatrix {
    let rows = (0..n)
        .map(|_| {
            let mut bits = 0u64;
            for j in 0..n {
                if rng.chance(p) {
                    bits |= 1 << j;
                }
            }
            bits
        })
        .collect();
    BinaryMatrix::new(n, rows).expect("generated rows fit the dimension")
}

/// Bernoulli(p) matrix resampled until no row is all zeros.
pub fn random_matrix_without_zero_rows(rng: &mut SplitMix64, n: usize, p: f64) -> BinaryMatrix {
    loop {
        let m = random_matrix(rng, n, p);
        if !m.has_zero_row() {
            return m;
        }
    }
}

/// Random joint table: 2..=max_coords coordinates with alphabets of size
/// 2..=max_alphabet, positive masses, and (sometimes) sparsified support.
pub fn random_table(rng: &mut SplitMix64, max_coords: usize, max_alphabet: usize) -> JointTable {
    debug_assert!(max_coords >= 2 && max_alphabet >= 2);
    loop {
        let coords = 2 + rng.below(max_coords - 1);
        let shape: Vec<usize> = (0..coords)
            .map(|_| 2 + rng.below(max_alphabet - 1))
            .collect();
        let cells: usize = shape.iter().product();
        let sparsify = rng.chance(0.3);
        let probs: Vec<f64> = (0..cells)
            .map(|_| {
                if sparsify && rng.chance(0.25) {
                    0.0
                } else {
                    0.05 + rng.next_f64()
                }
            })
            .collect();
        if probs.iter().sum::<f64>() > 0.0 {
            return JointTable::renormalized(shape, probs).expect("positive mass");
        }
    }
}

/// Random cover over `n` coordinates, patched so every coordinate is
/// covered at least once.
pub fn random_cover(rng: &mut SplitMix64, n: usize) -> CoverFamily {
    let group_count = 1 + rng.below(2 * n);
    let mut groups: Vec<Vec<usize>> = Vec::with_capacity(group_count + n);
    for _ in 0..group_count {
        let group: Vec<usize> = (0..n).filter(|_| rng.chance(0.5)).collect();
        if !group.is_empty() {
            groups.push(group);
        }
    }
    let mut covered = vec![false; n];
    for g in &groups {
        for &c in g {
            covered[c] = true;
        }
    }
    for (c, &cov) in covered.iter().enumerate() {
        if !cov {
            groups.push(vec![c]);
        }
    }
    CoverFamily::new(n, groups).expect("generated groups are valid")
}

/// Random family of `m` distinct subsets of `{1..n}`.
pub fn random_set_family(rng: &mut SplitMix64, n: usize, m: usize) -> SetFamily {
    debug_assert!(n <= 20 && (m as u64) <= 1u64 << n);
    let mut seen = std::collections::HashSet::with_capacity(m);
    let mut sets = Vec::with_capacity(m);
    let space = 1u64 << n;
    while sets.len() < m {
        let mask = rng.next_u64() % space;
        if seen.insert(mask) {
            sets.push(mask);
        }
    }
    SetFamily::new(n, sets).expect("distinct masks in range")
}

/// Random k-uniform family satisfying both preconditions of the
/// intersection bound: pairwise-distinct intersections and every element
/// frequency at most `1/sqrt(2)`. Rejection-sampled; parameters are kept
/// small so acceptance stays cheap.
pub fn random_intersection_family(rng: &mut SplitMix64) -> (SetFamily, usize) {
    for _ in 0..200_000 {
        let k = 2 + rng.below(2); // 2 or 3
        let m = 3 + rng.below(2); // 3 or 4
        let n = 2 * k + 1 + rng.below(12 - 2 * k); // up to 12
        let mut seen = std::collections::HashSet::new();
        let mut sets = Vec::with_capacity(m);
        let mut elements: Vec<usize> = (0..n).collect();
        while sets.len() < m {
            rng.shuffle(&mut elements);
            let mask = elements[..k].iter().fold(0u64, |acc, &e| acc | 1 << e);
            if seen.insert(mask) {
                sets.push(mask);
            }
        }
        let family = SetFamily::new(n, sets).expect("distinct k-subsets");
        let distinct =
            crate::set_family::check_distinct_pairwise_intersections(&family).expect("m >= 2");
        if !distinct {
            continue;
        }
        let counts = family.element_counts();
        if counts.iter().all(|&c| 2 * c * c <= m * m) {
            return (family, k);
        }
    }
    unreachable!("intersection-family sampler exhausted its retry budget");
}

/// Table built from explicit per-block supports on the target alphabet:
/// returns the table, the conditioning coordinate partition, and guarantees
/// the blocks have pairwise-distinct supports and positive probability.
pub fn random_merge_instance(rng: &mut SplitMix64) -> (JointTable, Vec<Vec<usize>>) {
    let x_size = 2 + rng.below(5); // 2..=6
    let y_size = 2 + rng.below(5);
    let max_blocks = y_size.min((1usize << x_size) - 1);
    let blocks = 1 + rng.below(max_blocks);

    // Partition the conditioning alphabet into contiguous chunks of a shuffle.
    let mut values: Vec<usize> = (0..y_size).collect();
    rng.shuffle(&mut values);
    let mut cuts: Vec<usize> = (1..y_size).collect();
    rng.shuffle(&mut cuts);
    let mut cuts: Vec<usize> = cuts[..blocks - 1].to_vec();
    cuts.sort_unstable();
    cuts.push(y_size);
    let mut partition = Vec::with_capacity(blocks);
    let mut start = 0;
    for &end in &cuts {
        partition.push(values[start..end].to_vec());
        start = end;
    }

    // Distinct nonempty supports per block.
    let mut taken = std::collections::HashSet::new();
    let mut supports = Vec::with_capacity(blocks);
    while supports.len() < blocks {
        let mask = 1 + rng.below((1 << x_size) - 1);
        if taken.insert(mask) {
            supports.push(mask);
        }
    }

    // p(x, y) positive exactly on the block support.
    let mut probs = vec![0.0; x_size * y_size];
    for (b, block) in partition.iter().enumerate() {
        for &y in block {
            for x in 0..x_size {
                if supports[b] >> x & 1 == 1 {
                    probs[x * y_size + y] = 0.05 + rng.next_f64();
                }
            }
        }
    }
    let table = JointTable::renormalized(vec![x_size, y_size], probs).expect("positive mass");
    (table, partition)
}

/// Random partition of `0..size` into at most `max_blocks` nonempty blocks.
pub fn random_partition(rng: &mut SplitMix64, size: usize, max_blocks: usize) -> Vec<Vec<usize>> {
    let blocks = 1 + rng.below(max_blocks.min(size));
    let mut values: Vec<usize> = (0..size).collect();
    rng.shuffle(&mut values);
    let mut parts: Vec<Vec<usize>> = vec![Vec::new(); blocks];
    for (i, v) in values.into_iter().enumerate() {
        parts[i % blocks].push(v);
    }
    parts
}

// ---------------------------------------------------------------------------
// Check recording
// ---------------------------------------------------------------------------

struct Recorder {
    checks_run: usize,
    violations: Vec<Violation>,
    worst_slack: f64,
    worst_equality_gap: f64,
}

impl Recorder {
    fn new() -> Self {
        Self {
            checks_run: 0,
            violations: Vec::new(),
            worst_slack: f64::INFINITY,
            worst_equality_gap: 0.0,
        }
    }

    fn inequality(
        &mut self,
        check: &str,
        alpha: f64,
        lhs: f64,
        rhs: f64,
        tolerance: f64,
        instance: impl FnOnce() -> Value,
    ) {
        self.checks_run += 1;
        let slack = rhs - lhs;
        if slack < self.worst_slack {
            self.worst_slack = slack;
        }
        if lhs > rhs + tolerance {
            self.violations.push(Violation {
                check: check.to_string(),
                alpha,
                lhs,
                rhs,
                instance: instance(),
            });
        }
    }

    fn equality(
        &mut self,
        check: &str,
        alpha: f64,
        lhs: f64,
        rhs: f64,
        tolerance: f64,
        instance: impl FnOnce() -> Value,
    ) {
        self.checks_run += 1;
        let gap = (lhs - rhs).abs();
        if gap > self.worst_equality_gap {
            self.worst_equality_gap = gap;
        }
        if gap > tolerance {
            self.violations.push(Violation {
                check: check.to_string(),
                alpha,
                lhs,
                rhs,
                instance: instance(),
            });
        }
    }

    fn finish(self, suite: &str, config: &RunConfig, excluded: usize) -> SuiteOutcome {
        SuiteOutcome {
            suite: suite.to_string(),
            seed: config.seed,
            instances: config.instances,
            checks_run: self.checks_run,
            violations: self.violations,
            worst_slack: self.worst_slack,
            worst_equality_gap: self.worst_equality_gap,
            excluded_zero_rows: excluded,
        }
    }
}

fn table_payload(t: &JointTable) -> Value {
    json!({ "shape": t.shape(), "probs": t.probs() })
}

fn alphas_at_least_one(alphas: &[f64], what: &str) -> Result<()> {
    if let Some(&a) = alphas.iter().find(|&&a| a < 1.0) {
        return Err(Error::UnsupportedRange(format!(
            "{what} checks are stated for orders >= 1, got {a}"
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

/// Chain rule, subadditivity, conditioning monotonicity, function
/// contraction, ordering of the two conditional forms, and the merge bound,
/// each over random joint tables at every requested order. Checks stated
/// only for orders >= 1 are skipped below that threshold.
pub fn run_entropy_suite(config: &RunConfig) -> Result<SuiteOutcome> {
    config.validate()?;
    let alphas = config.alphas_or(&DEFAULT_ENTROPY_ALPHAS);
    let tol = config.tolerance;
    let mut rng = SplitMix64::new(config.seed);
    let mut rec = Recorder::new();

    for _ in 0..config.instances {
        let t = random_table(&mut rng, 4, 6);
        let d = t.num_coords();
        let all: Vec<usize> = (0..d).collect();

        // Random conditioning order and a random target for the
        // monotonicity and contraction checks.
        let mut order = all.clone();
        rng.shuffle(&mut order);
        let target = order[0];
        let chain: Vec<usize> = order[1..].to_vec();
        let given = chain[0];
        let partition = random_partition(&mut rng, t.shape()[given], 3);

        let (merge_table, merge_partition) = random_merge_instance(&mut rng);

        for &av in &alphas {
            let alpha = AlphaParameter::new(av)?;

            // Chain rule in two fixed orders.
            let joint = joint_entropy(&t, &all, alpha)?;
            for (name, coords) in [
                ("chain_rule", all.clone()),
                ("chain_rule_reversed", all.iter().rev().copied().collect()),
            ] {
                let mut sum = 0.0;
                for len in 0..coords.len() {
                    sum += conditional_entropy(
                        &t,
                        &coords[len..=len],
                        &coords[..len],
                        alpha,
                        ConditionalForm::Daroczy,
                    )?;
                }
                rec.equality(
                    name,
                    av,
                    joint,
                    sum,
                    tol,
                    || json!({ "table": table_payload(&t), "order": coords }),
                );
            }

            if av >= 1.0 {
                let out = check_subadditivity(&t, alpha)?;
                rec.inequality(
                    "subadditivity",
                    av,
                    out.lhs,
                    out.rhs,
                    tol,
                    || json!({ "table": table_payload(&t) }),
                );
            }

            // Conditioning on more never increases the entropy.
            for form in [ConditionalForm::Daroczy, ConditionalForm::Weighted] {
                if form == ConditionalForm::Daroczy && av < 1.0 {
                    continue;
                }
                let mut previous = f64::INFINITY;
                for len in 0..=chain.len() {
                    let h = conditional_entropy(&t, &[target], &chain[..len], alpha, form)?;
                    if len > 0 {
                        rec.inequality("conditioning_monotonicity", av, h, previous, tol, || {
                            json!({
                                "table": table_payload(&t),
                                "form": form.to_string(),
                                "target": target,
                                "chain": chain,
                                "prefix_len": len,
                            })
                        });
                    }
                    previous = h;
                }
            }

            // Merging conditioning values can only increase the entropy.
            let merged = t.merge_coordinate_values(given, &partition)?;
            for form in [ConditionalForm::Daroczy, ConditionalForm::Weighted] {
                if form == ConditionalForm::Daroczy && av < 1.0 {
                    continue;
                }
                let fine = conditional_entropy(&t, &[target], &[given], alpha, form)?;
                let coarse = conditional_entropy(&merged, &[target], &[given], alpha, form)?;
                rec.inequality("function_contraction", av, fine, coarse, tol, || {
                    json!({
                        "table": table_payload(&t),
                        "form": form.to_string(),
                        "target": target,
                        "given": given,
                        "partition": partition,
                    })
                });
            }

            // The two conditional forms are ordered on each side of 1.
            let daroczy =
                conditional_entropy(&t, &[target], &[given], alpha, ConditionalForm::Daroczy)?;
            let weighted =
                conditional_entropy(&t, &[target], &[given], alpha, ConditionalForm::Weighted)?;
            let ordering_payload = || {
                json!({
                    "table": table_payload(&t),
                    "target": target,
                    "given": given,
                })
            };
            if av < 1.0 {
                rec.inequality(
                    "form_ordering",
                    av,
                    weighted,
                    daroczy,
                    tol,
                    ordering_payload,
                );
            } else if av > 1.0 {
                rec.inequality(
                    "form_ordering",
                    av,
                    daroczy,
                    weighted,
                    tol,
                    ordering_payload,
                );
            } else {
                rec.equality(
                    "form_ordering",
                    av,
                    daroczy,
                    weighted,
                    tol,
                    ordering_payload,
                );
            }

            // Merge bound on the support-structured instance.
            for form in [ConditionalForm::Daroczy, ConditionalForm::Weighted] {
                if form == ConditionalForm::Daroczy && av < 1.0 {
                    continue;
                }
                let out = check_merge_bound(&merge_table, 0, 1, &merge_partition, alpha, form)?;
                rec.inequality("merge_bound", av, out.lhs, out.rhs, tol, || {
                    json!({
                        "table": table_payload(&merge_table),
                        "form": form.to_string(),
                        "target": 0,
                        "given": 1,
                        "partition": merge_partition,
                    })
                });
            }
        }
    }
    Ok(rec.finish("entropy", config, 0))
}

/// Shearer inequality over random covers, its reduction to subadditivity
/// under the singleton cover, and the set-family trace corollary.
pub fn run_shearer_suite(config: &RunConfig) -> Result<SuiteOutcome> {
    config.validate()?;
    let alphas = config.alphas_or(&DEFAULT_SHEARER_ALPHAS);
    alphas_at_least_one(&alphas, "Shearer")?;
    let tol = config.tolerance;
    let mut rng = SplitMix64::new(config.seed);
    let mut rec = Recorder::new();

    for _ in 0..config.instances {
        let t = random_table(&mut rng, 4, 6);
        let d = t.num_coords();
        let cover = random_cover(&mut rng, d);
        let singletons = CoverFamily::singletons(d)?;

        // Trace-corollary instance: groups always include the full ground
        // set so every element is covered.
        let n = 3 + rng.below(8); // 3..=10
        let m = 1 + rng.below((1usize << n).min(40) - 1);
        let family = random_set_family(&mut rng, n, m);
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut group_masks = vec![full];
        for _ in 0..rng.below(4) {
            let mask = 1 + rng.next_u64() % (full - 1).max(1);
            if !group_masks.contains(&mask) {
                group_masks.push(mask);
            }
        }
        let groups = SetFamily::new(n, group_masks).expect("distinct masks");

        for &av in &alphas {
            let alpha = AlphaParameter::new(av)?;

            let out = check_shearer(&t, &cover, alpha)?;
            rec.inequality("shearer", av, out.lhs, out.rhs, tol, || {
                json!({ "table": table_payload(&t), "cover": { "n": d, "groups": cover.groups() } })
            });

            let sh = check_shearer(&t, &singletons, alpha)?;
            let sub = check_subadditivity(&t, alpha)?;
            rec.equality(
                "singleton_cover_matches_subadditivity_lhs",
                av,
                sh.lhs,
                sub.lhs,
                COUNTING_TOLERANCE,
                || json!({ "table": table_payload(&t) }),
            );
            rec.equality(
                "singleton_cover_matches_subadditivity_rhs",
                av,
                sh.rhs,
                sub.rhs,
                COUNTING_TOLERANCE,
                || json!({ "table": table_payload(&t) }),
            );

            let tr = check_trace_corollary(&family, &groups, alpha)?;
            rec.inequality("trace_corollary", av, tr.lhs, tr.rhs, COUNTING_TOLERANCE, || {
                json!({
                    "family": serde_json::from_str::<Value>(&family.to_json_string()).expect("valid"),
                    "groups": serde_json::from_str::<Value>(&groups.to_json_string()).expect("valid"),
                })
            });
        }
    }
    Ok(rec.finish("shearer", config, 0))
}

/// Cardinality bound over random families; every third instance also draws
/// a k-uniform family passing both preconditions of the intersection bound
/// and checks it across the proved order range.
pub fn run_family_suite(config: &RunConfig) -> Result<SuiteOutcome> {
    config.validate()?;
    let alphas = config.alphas_or(&DEFAULT_FAMILY_ALPHAS);
    alphas_at_least_one(&alphas, "set-family")?;
    let intersection_alphas: Vec<f64> = if config.alpha_list.is_empty() {
        intersection_alpha_grid()
    } else {
        config
            .alpha_list
            .iter()
            .copied()
            .filter(|&a| a <= INTERSECTION_BOUND_ALPHA_MAX)
            .collect()
    };
    let mut rng = SplitMix64::new(config.seed);
    let mut rec = Recorder::new();

    for i in 0..config.instances {
        let n = 3 + rng.below(10); // 3..=12
        let m = 1 + rng.below((1usize << n).min(200) - 1);
        let family = random_set_family(&mut rng, n, m);
        for &av in &alphas {
            let alpha = AlphaParameter::new(av)?;
            let out = check_cardinality_bound(&family, alpha)?;
            rec.inequality("cardinality_bound", av, out.lhs, out.rhs, COUNTING_TOLERANCE, || {
                json!({ "family": serde_json::from_str::<Value>(&family.to_json_string()).expect("valid") })
            });
        }

        if i % 3 == 0 {
            let (kfam, k) = random_intersection_family(&mut rng);
            for &av in &intersection_alphas {
                let alpha = AlphaParameter::new(av)?;
                let out = check_intersection_family_bound(&kfam, k, alpha)?;
                debug_assert!(
                    out.precondition_met,
                    "generator guarantees the precondition"
                );
                rec.inequality("intersection_bound", av, out.lhs, out.rhs, COUNTING_TOLERANCE, || {
                    json!({
                        "family": serde_json::from_str::<Value>(&kfam.to_json_string()).expect("valid"),
                        "k": k,
                    })
                });
            }
        }
    }
    Ok(rec.finish("family", config, 0))
}

/// Bound validity (`per(A) <= ceiling` at every order), the Bregman limit at
/// orders `1 ± 1e-6`, Ryser-vs-bruteforce oracle agreement, and row-expansion
/// consistency, over Bernoulli(1/2) matrices of dimension up to 10.
/// Zero-row matrices short-circuit and are counted, not checked.
pub fn run_permanent_suite(config: &RunConfig) -> Result<SuiteOutcome> {
    config.validate()?;
    let alphas = config.alphas_or(&DEFAULT_PERMANENT_ALPHAS);
    let mut rng = SplitMix64::new(config.seed);
    let mut rec = Recorder::new();
    let mut excluded = 0usize;

    for _ in 0..config.instances {
        let n = 2 + rng.below(9); // 2..=10
        let m = random_matrix(&mut rng, n, config.matrix_density);
        let matrix_payload = || json!({ "matrix": m.to_text() });

        let per = permanent_ryser(&m)?;

        if n <= 8 {
            let brute = permanent_bruteforce(&m)?;
            rec.equality(
                "oracle_agreement",
                0.0,
                per as f64,
                brute as f64,
                0.0,
                matrix_payload,
            );
            for i in 0..n {
                rec.equality(
                    "minor_expansion",
                    0.0,
                    expand_minor(&m, i)? as f64,
                    per as f64,
                    0.0,
                    || json!({ "matrix": m.to_text(), "row": i }),
                );
            }
        }

        if m.has_zero_row() {
            excluded += 1;
            let report = alpha_bound(&m, AlphaParameter::new(2.0)?);
            rec.equality(
                "zero_row_short_circuit",
                2.0,
                report.ceiling,
                0.0,
                0.0,
                matrix_payload,
            );
            continue;
        }

        for &av in &alphas {
            let alpha = AlphaParameter::new(av)?;
            let report = alpha_bound(&m, alpha);
            rec.inequality(
                "bound_validity",
                av,
                per as f64,
                report.ceiling,
                PERMANENT_VALIDITY_TOLERANCE,
                matrix_payload,
            );
        }

        let bregman = bregman_bound(m.row_sums())?;
        let allowed = bregman_limit_allowance(bregman.ln());
        for eps in [BREGMAN_LIMIT_EPSILON, -BREGMAN_LIMIT_EPSILON] {
            let report = alpha_bound(&m, AlphaParameter::new(1.0 + eps)?);
            let deviation = (report.ceiling - bregman).abs() / bregman;
            rec.inequality(
                "bregman_limit",
                1.0 + eps,
                deviation,
                allowed,
                0.0, // tolerance already in rhs
                matrix_payload,
            );
        }
    }
    Ok(rec.finish("permanent", config, excluded))
}

/// Every suite in a fixed order.
pub fn run_all_suites(config: &RunConfig) -> Result<Vec<SuiteOutcome>> {
    Ok(vec![
        run_entropy_suite(config)?,
        run_shearer_suite(config)?,
        run_family_suite(config)?,
        run_permanent_suite(config)?,
    ])
}

// ---------------------------------------------------------------------------
// Replay
// ---------------------------------------------------------------------------

fn field<'v>(instance: &'v Value, name: &str) -> Result<&'v Value> {
    instance
        .get(name)
        .ok_or_else(|| Error::Ingestion(format!("replay payload lacks field {name:?}")))
}

fn table_from(instance: &Value) -> Result<JointTable> {
    let t = field(instance, "table")?;
    JointTable::from_json_str(&t.to_string(), false)
}

fn matrix_from(instance: &Value) -> Result<BinaryMatrix> {
    let text = field(instance, "matrix")?
        .as_str()
        .ok_or_else(|| Error::Ingestion("matrix payload is not text".into()))?;
    BinaryMatrix::from_text(text)
}

fn family_from(instance: &Value, name: &str) -> Result<SetFamily> {
    SetFamily::from_json_str(&field(instance, name)?.to_string())
}

fn coords_from(instance: &Value, name: &str) -> Result<Vec<usize>> {
    serde_json::from_value(field(instance, name)?.clone())
        .map_err(|e| Error::Ingestion(format!("replay field {name:?}: {e}")))
}

fn partition_from(instance: &Value) -> Result<Vec<Vec<usize>>> {
    serde_json::from_value(field(instance, "partition")?.clone())
        .map_err(|e| Error::Ingestion(format!("replay partition: {e}")))
}

fn form_from(instance: &Value) -> Result<ConditionalForm> {
    match field(instance, "form")?.as_str() {
        Some("daroczy") => Ok(ConditionalForm::Daroczy),
        Some("weighted") => Ok(ConditionalForm::Weighted),
        other => Err(Error::Ingestion(format!(
            "unknown conditional form {other:?}"
        ))),
    }
}

fn usize_from(instance: &Value, name: &str) -> Result<usize> {
    field(instance, name)?
        .as_u64()
        .map(|v| v as usize)
        .ok_or_else(|| Error::Ingestion(format!("replay field {name:?} is not an integer")))
}

/// Recomputes the two sides of a dumped check from its serialized instance.
/// The same code paths run as in the original campaign, so the replayed
/// values match the dump bit for bit.
pub fn replay_violation(v: &Violation) -> Result<(f64, f64)> {
    let alpha = if v.check == "oracle_agreement" || v.check == "minor_expansion" {
        AlphaParameter::shannon() // unused
    } else {
        AlphaParameter::new(if v.alpha == 0.0 { 1.0 } else { v.alpha })?
    };
    let instance = &v.instance;
    match v.check.as_str() {
        "chain_rule" | "chain_rule_reversed" => {
            let t = table_from(instance)?;
            let order = coords_from(instance, "order")?;
            let all: Vec<usize> = (0..t.num_coords()).collect();
            let joint = joint_entropy(&t, &all, alpha)?;
            let mut sum = 0.0;
            for len in 0..order.len() {
                sum += conditional_entropy(
                    &t,
                    &order[len..=len],
                    &order[..len],
                    alpha,
                    ConditionalForm::Daroczy,
                )?;
            }
            Ok((joint, sum))
        }
        "subadditivity" => {
            let out = check_subadditivity(&table_from(instance)?, alpha)?;
            Ok((out.lhs, out.rhs))
        }
        "conditioning_monotonicity" => {
            let t = table_from(instance)?;
            let target = usize_from(instance, "target")?;
            let chain = coords_from(instance, "chain")?;
            let len = usize_from(instance, "prefix_len")?;
            let form = form_from(instance)?;
            let longer = conditional_entropy(&t, &[target], &chain[..len], alpha, form)?;
            let shorter = conditional_entropy(&t, &[target], &chain[..len - 1], alpha, form)?;
            Ok((longer, shorter))
        }
        "function_contraction" => {
            let t = table_from(instance)?;
            let target = usize_from(instance, "target")?;
            let given = usize_from(instance, "given")?;
            let partition = partition_from(instance)?;
            let form = form_from(instance)?;
            let merged = t.merge_coordinate_values(given, &partition)?;
            let fine = conditional_entropy(&t, &[target], &[given], alpha, form)?;
            let coarse = conditional_entropy(&merged, &[target], &[given], alpha, form)?;
            Ok((fine, coarse))
        }
        "form_ordering" => {
            let t = table_from(instance)?;
            let target = usize_from(instance, "target")?;
            let given = usize_from(instance, "given")?;
            let daroczy =
                conditional_entropy(&t, &[target], &[given], alpha, ConditionalForm::Daroczy)?;
            let weighted =
                conditional_entropy(&t, &[target], &[given], alpha, ConditionalForm::Weighted)?;
            if v.alpha < 1.0 {
                Ok((weighted, daroczy))
            } else {
                Ok((daroczy, weighted))
            }
        }
        "merge_bound" => {
            let t = table_from(instance)?;
            let out = check_merge_bound(
                &t,
                usize_from(instance, "target")?,
                usize_from(instance, "given")?,
                &partition_from(instance)?,
                alpha,
                form_from(instance)?,
            )?;
            Ok((out.lhs, out.rhs))
        }
        "shearer" => {
            let t = table_from(instance)?;
            let cover_value = field(instance, "cover")?;
            let n = usize_from(cover_value, "n")?;
            let groups: Vec<Vec<usize>> =
                serde_json::from_value(field(cover_value, "groups")?.clone())
                    .map_err(|e| Error::Ingestion(format!("replay cover: {e}")))?;
            let out = check_shearer(&t, &CoverFamily::new(n, groups)?, alpha)?;
            Ok((out.lhs, out.rhs))
        }
        "singleton_cover_matches_subadditivity_lhs"
        | "singleton_cover_matches_subadditivity_rhs" => {
            let t = table_from(instance)?;
            let sh = check_shearer(&t, &CoverFamily::singletons(t.num_coords())?, alpha)?;
            let sub = check_subadditivity(&t, alpha)?;
            if v.check.ends_with("lhs") {
                Ok((sh.lhs, sub.lhs))
            } else {
                Ok((sh.rhs, sub.rhs))
            }
        }
        "trace_corollary" => {
            let out = check_trace_corollary(
                &family_from(instance, "family")?,
                &family_from(instance, "groups")?,
                alpha,
            )?;
            Ok((out.lhs, out.rhs))
        }
        "cardinality_bound" => {
            let out = check_cardinality_bound(&family_from(instance, "family")?, alpha)?;
            Ok((out.lhs, out.rhs))
        }
        "intersection_bound" => {
            let out = check_intersection_family_bound(
                &family_from(instance, "family")?,
                usize_from(instance, "k")?,
                alpha,
            )?;
            Ok((out.lhs, out.rhs))
        }
        "bound_validity" => {
            let m = matrix_from(instance)?;
            let per = permanent_ryser(&m)? as f64;
            let report = alpha_bound(&m, alpha);
            Ok((per, report.ceiling))
        }
        "bregman_limit" => {
            let m = matrix_from(instance)?;
            let bregman = bregman_bound(m.row_sums())?;
            let report = alpha_bound(&m, alpha);
            Ok((
                (report.ceiling - bregman).abs() / bregman,
                bregman_limit_allowance(bregman.ln()),
            ))
        }
        "oracle_agreement" => {
            let m = matrix_from(instance)?;
            Ok((
                permanent_ryser(&m)? as f64,
                permanent_bruteforce(&m)? as f64,
            ))
        }
        "minor_expansion" => {
            let m = matrix_from(instance)?;
            let row = usize_from(instance, "row")?;
            Ok((expand_minor(&m, row)? as f64, permanent_ryser(&m)? as f64))
        }
        "zero_row_short_circuit" => {
            let m = matrix_from(instance)?;
            Ok((alpha_bound(&m, alpha).ceiling, 0.0))
        }
        other => Err(Error::Ingestion(format!("unknown check {other:?}"))),
    }
}
