//! Tsallis–Havrda–Charvát entropies as a counting tool.
//!
//! This crate evaluates the one-parameter family of entropies
//! `H_a(p) = (sum p(x)^a - 1)/(1 - a)` (Shannon entropy at `a = 1`) together
//! with both of its conditional forms, verifies the inequalities that make
//! them usable in combinatorics (chain rule, subadditivity, Shearer-type
//! covers, conditioning monotonicity), and applies them to produce numeric
//! upper bounds on permanents of square (0,1)-matrices — a one-parameter
//! extension of the Bregman–Minc bound that can be optimized per matrix.
//! Exact permanents via Ryser's formula and a brute-force oracle keep every
//! bound honest.
//!
//! ```
//! use entrocount::{alpha_bound, bregman_bound, permanent_ryser, AlphaParameter, BinaryMatrix};
//!
//! // Identity with the first row filled with ones: permanent exactly 1.
//! let m = BinaryMatrix::from_text("1111\n0100\n0010\n0001\n")?;
//! assert_eq!(permanent_ryser(&m)?, 1);
//!
//! // Bound ceilings only see row sums; order 2 beats the Bregman bound here.
//! let bregman = bregman_bound(m.row_sums())?;          // (4!)^(1/4) = 2.213..
//! let at_two = alpha_bound(&m, AlphaParameter::new(2.0)?);
//! assert!((at_two.ceiling - 1.92).abs() < 1e-12);      // n / H_n = 48/25
//! assert!(at_two.ceiling < bregman);
//! # Ok::<(), entrocount::Error>(())
//! ```
//!
//! The `examples/` directory walks through each capability:
//! `deformed_entropies`, `permanent_bounds`, `optimize_order`,
//! `matching_census`, `shearer_inequalities`, `set_families`, and
//! `verify_campaign`. The `entrocount` binary exposes the same surface as
//! subcommands (`entropy`, `bound`, `family`, `shearer`, `verify`).

pub mod alpha;
pub mod bounds;
pub mod campaign;
pub mod dist;
pub mod entropy;
pub mod error;
pub mod outcome;
pub mod permanent;
pub mod set_family;
pub mod shearer;

pub use alpha::{alpha_log, AlphaParameter};
pub use bounds::{
    alpha_bound, alpha_bound_from_row_sums, bound_rhs, bregman_bound, invert_bound, optimize_alpha,
    optimize_alpha_default, optimize_alpha_over_row_sums, BoundReport, OptimizationResult,
};
pub use campaign::{
    replay_violation, run_all_suites, run_entropy_suite, run_family_suite, run_permanent_suite,
    run_shearer_suite, RunConfig, SplitMix64, SuiteOutcome, Violation,
};
pub use dist::{DiscreteDistribution, JointTable, PROB_SUM_TOLERANCE};
pub use entropy::{
    binary_thc_entropy, conditional_entropy, conditional_entropy_daroczy,
    conditional_entropy_weighted, joint_entropy, max_entropy, thc_entropy, ConditionalForm,
};
pub use error::{Error, Result};
pub use outcome::CheckOutcome;
pub use permanent::{
    expand_minor, permanent_bruteforce, permanent_ryser, permanent_ryser_chunked, BinaryMatrix,
    MAX_BRUTEFORCE_DIMENSION, MAX_RYSER_DIMENSION,
};
pub use set_family::{
    check_cardinality_bound, check_distinct_pairwise_intersections,
    check_intersection_family_bound, fraction_vector, implicit_family_size_ceiling,
    verify_lemma_concavity, ConcavityReport, FractionVector, IntersectionBoundOutcome, SetFamily,
};
pub use shearer::{
    check_conditioning_monotonicity, check_merge_bound, check_shearer, check_subadditivity,
    check_trace_corollary, CoverFamily,
};
