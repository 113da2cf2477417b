//! One-parameter upper bounds on permanents of (0,1)-matrices.
//!
//! For row sums `r_1..r_n` the deformed-logarithm bound reads
//! `ln_alpha(per A) <= sum_i (1/r_i) sum_{j=1..r_i} ln_alpha(j)` for
//! `alpha >= 1`, and `-ln_alpha(1/per A) <=` the same right-hand side for
//! `alpha` in (0,1). Inverting the deformed logarithm turns the shared
//! right-hand side into a numeric ceiling on the permanent; the limit
//! `alpha -> 1` recovers the Bregman–Minc bound `prod_i (r_i!)^(1/r_i)`.
//!
//! For `alpha > 1` the deformed logarithm is bounded above by
//! `1/(alpha - 1)`, so a right-hand side at or past that cap constrains
//! nothing: the ceiling is reported as infinite and flagged vacuous rather
//! than clamped.

use serde::{Serialize, Serializer};

use crate::alpha::{alpha_log, AlphaParameter};
use crate::error::{Error, Result};
use crate::permanent::BinaryMatrix;

/// Compensated (Neumaier) summation; keeps thousand-term deformed-log sums
/// accurate enough for the 1e-12-relative ceiling checks.
fn compensated_sum(values: impl Iterator<Item = f64>) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

fn serialize_extended<S: Serializer>(value: &f64, ser: S) -> std::result::Result<S::Ok, S::Error> {
    if value.is_finite() {
        ser.serialize_f64(*value)
    } else {
        ser.serialize_str("inf")
    }
}

fn serialize_trace<S: Serializer>(
    trace: &[(f64, f64)],
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    #[derive(Serialize)]
    struct Entry(f64, #[serde(serialize_with = "serialize_extended")] f64);
    let mut seq = ser.serialize_seq(Some(trace.len()))?;
    for &(a, c) in trace {
        seq.serialize_element(&Entry(a, c))?;
    }
    seq.end()
}

/// One bound evaluation at a fixed order.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    /// Entropic order the bound was evaluated at.
    pub alpha: f64,
    /// Shared right-hand side `sum_i (1/r_i) sum_{j=1..r_i} ln_alpha(j)`.
    #[serde(rename = "rhs")]
    pub rhs_entropy_space: f64,
    /// Numeric upper bound on the permanent; `+inf` when vacuous.
    #[serde(serialize_with = "serialize_extended")]
    pub ceiling: f64,
    /// `floor(ceiling)` when finite and representable; permanents are integers.
    pub integer_ceiling: Option<u128>,
    /// True iff the inequality carries no information (`ceiling` infinite).
    pub vacuous: bool,
}

impl BoundReport {
    fn from_ceiling(alpha: f64, rhs: f64, ceiling: f64) -> Self {
        let integer_ceiling = if ceiling.is_finite() && ceiling <= u128::MAX as f64 {
            Some(ceiling.floor() as u128)
        } else {
            None
        };
        Self {
            alpha,
            rhs_entropy_space: rhs,
            ceiling,
            integer_ceiling,
            vacuous: ceiling.is_infinite(),
        }
    }
}

/// Outcome of minimizing the ceiling over the order parameter.
#[derive(Debug, Clone, Serialize)]
pub struct OptimizationResult {
    pub best_alpha: f64,
    pub best_ceiling: f64,
    /// Every `(alpha, ceiling)` pair examined, in evaluation order.
    #[serde(serialize_with = "serialize_trace")]
    pub trace: Vec<(f64, f64)>,
}

/// The shared right-hand side: deformed logs of `1..=r_i`, averaged per row,
/// summed over rows. Every row sum must be positive; callers short-circuit
/// matrices with a zero row to permanent 0 before coming here.
pub fn bound_rhs(row_sums: &[usize], alpha: AlphaParameter) -> Result<f64> {
    if row_sums.is_empty() {
        return Err(Error::Argument("no row sums provided".into()));
    }
    if let Some(i) = row_sums.iter().position(|&r| r == 0) {
        return Err(Error::Precondition(format!(
            "row {i} has no ones; the permanent is zero and the bound does not apply"
        )));
    }
    let max_r = *row_sums.iter().max().expect("nonempty");

    // prefix[r] = sum_{j=1..r} ln_alpha(j), accumulated with compensation.
    let mut prefix = vec![0.0; max_r + 1];
    let mut sum = 0.0;
    let mut comp = 0.0;
    for j in 1..=max_r {
        let v = alpha_log(j as f64, alpha)?;
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
        prefix[j] = sum + comp;
    }

    Ok(compensated_sum(
        row_sums.iter().map(|&r| prefix[r] / r as f64),
    ))
}

/// Solves the bound inequality for the permanent, returning the numeric
/// ceiling (possibly `+inf`).
///
/// Both branches collapse to `exp(ln_1p(t * rhs) / t)` with
/// `t = -|alpha - 1|`, which tends to `exp(rhs)` as `alpha -> 1` from either
/// side; the Shannon order returns `exp(rhs)` directly. A nonpositive
/// `1 + t * rhs` means the right-hand side reached the range cap of the
/// deformed logarithm and the bound is vacuous.
pub fn invert_bound(rhs: f64, alpha: AlphaParameter) -> Result<f64> {
    if !rhs.is_finite() || rhs < 0.0 {
        return Err(Error::Domain(format!(
            "entropy-space bound must be a finite nonnegative real, got {rhs}"
        )));
    }
    if alpha.is_shannon() {
        return Ok(rhs.exp());
    }
    let t = -(alpha.value() - 1.0).abs();
    let arg = 1.0 + t * rhs;
    if arg <= 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok((f64::ln_1p(t * rhs) / t).exp())
}

/// The Bregman–Minc bound `prod_i (r_i!)^(1/r_i)`.
pub fn bregman_bound(row_sums: &[usize]) -> Result<f64> {
    if row_sums.is_empty() {
        return Err(Error::Argument("no row sums provided".into()));
    }
    if let Some(i) = row_sums.iter().position(|&r| r == 0) {
        return Err(Error::Precondition(format!(
            "row {i} has no ones; the permanent is zero and the bound does not apply"
        )));
    }
    let n = row_sums.len();
    let max_r = *row_sums.iter().max().expect("nonempty");
    if n <= 20 && max_r <= 25 {
        // Direct product from exact factorials.
        let mut fact = vec![1u128; max_r + 1];
        for j in 1..=max_r {
            fact[j] = fact[j - 1] * j as u128;
        }
        Ok(row_sums
            .iter()
            .map(|&r| (fact[r] as f64).powf(1.0 / r as f64))
            .product())
    } else {
        // Log space: ln_prefix[r] = ln(r!).
        let mut ln_prefix = vec![0.0; max_r + 1];
        let mut sum = 0.0;
        for j in 1..=max_r {
            sum += (j as f64).ln();
            ln_prefix[j] = sum;
        }
        let log_total = compensated_sum(row_sums.iter().map(|&r| ln_prefix[r] / r as f64));
        Ok(log_total.exp())
    }
}

/// Evaluates the bound family on explicit row sums.
///
/// A zero row short-circuits to ceiling 0 (the permanent is certainly zero);
/// otherwise the report carries the entropy-space right-hand side and its
/// numeric inversion.
pub fn alpha_bound_from_row_sums(row_sums: &[usize], alpha: AlphaParameter) -> Result<BoundReport> {
    if row_sums.is_empty() {
        return Err(Error::Argument("no row sums provided".into()));
    }
    if row_sums.contains(&0) {
        return Ok(BoundReport {
            alpha: alpha.value(),
            rhs_entropy_space: 0.0,
            ceiling: 0.0,
            integer_ceiling: Some(0),
            vacuous: false,
        });
    }
    let rhs = bound_rhs(row_sums, alpha)?;
    let ceiling = invert_bound(rhs, alpha)?;
    Ok(BoundReport::from_ceiling(alpha.value(), rhs, ceiling))
}

/// Evaluates the bound family on a matrix (only its row sums matter).
pub fn alpha_bound(m: &BinaryMatrix, alpha: AlphaParameter) -> BoundReport {
    alpha_bound_from_row_sums(m.row_sums(), alpha).expect("matrix row sums are nonempty")
}

const GOLDEN_RATIO_CONJUGATE: f64 = 0.618_033_988_749_894_9;
/// Width of the final bracket in the order parameter.
const ALPHA_REFINEMENT_TOLERANCE: f64 = 1e-6;

/// Default optimizer grid from the CLI: 64 log-spaced points on [1/16, 8].
pub const DEFAULT_GRID_LO: f64 = 0.0625;
pub const DEFAULT_GRID_HI: f64 = 8.0;
pub const DEFAULT_GRID_POINTS: usize = 64;

/// Minimizes the ceiling over the order parameter: a log-spaced grid scan
/// (with `alpha = 1` always included) followed by golden-section refinement
/// of the best bracket down to an interval of width 1e-6.
///
/// Ties in the ceiling resolve toward the smallest order examined.
pub fn optimize_alpha(
    m: &BinaryMatrix,
    grid_lo: f64,
    grid_hi: f64,
    grid_points: usize,
) -> Result<OptimizationResult> {
    optimize_alpha_over_row_sums(m.row_sums(), grid_lo, grid_hi, grid_points)
}

/// As [`optimize_alpha`] with the default grid.
pub fn optimize_alpha_default(m: &BinaryMatrix) -> Result<OptimizationResult> {
    optimize_alpha(m, DEFAULT_GRID_LO, DEFAULT_GRID_HI, DEFAULT_GRID_POINTS)
}

/// Row-sum form of the optimizer, for bounds on matrices too large to store.
pub fn optimize_alpha_over_row_sums(
    row_sums: &[usize],
    grid_lo: f64,
    grid_hi: f64,
    grid_points: usize,
) -> Result<OptimizationResult> {
    if !(grid_lo > 0.0 && grid_lo < grid_hi && grid_hi.is_finite()) {
        return Err(Error::Argument(format!(
            "grid bounds must satisfy 0 < lo < hi, got [{grid_lo}, {grid_hi}]"
        )));
    }
    if grid_points < 2 {
        return Err(Error::Argument(format!(
            "grid needs at least 2 points, got {grid_points}"
        )));
    }

    let mut candidates: Vec<f64> = (0..grid_points)
        .map(|k| {
            let t = k as f64 / (grid_points - 1) as f64;
            (grid_lo.ln() + t * (grid_hi.ln() - grid_lo.ln())).exp()
        })
        .collect();
    candidates[0] = grid_lo;
    candidates[grid_points - 1] = grid_hi;
    candidates.push(1.0);
    candidates.sort_by(|a, b| a.partial_cmp(b).expect("grid values are finite"));
    candidates.dedup();

    let ceiling_at = |alpha_value: f64| -> Result<f64> {
        let alpha = AlphaParameter::new(alpha_value)?;
        Ok(alpha_bound_from_row_sums(row_sums, alpha)?.ceiling)
    };

    let mut trace: Vec<(f64, f64)> = Vec::new();
    for &a in &candidates {
        trace.push((a, ceiling_at(a)?));
    }

    let best_idx = argmin(&trace);
    let lo = if best_idx == 0 {
        candidates[0]
    } else {
        candidates[best_idx - 1]
    };
    let hi = if best_idx + 1 == candidates.len() {
        candidates[candidates.len() - 1]
    } else {
        candidates[best_idx + 1]
    };

    // Golden-section refinement inside the bracket around the grid minimum.
    let mut a = lo;
    let mut b = hi;
    let mut c = b - GOLDEN_RATIO_CONJUGATE * (b - a);
    let mut d = a + GOLDEN_RATIO_CONJUGATE * (b - a);
    let mut fc = ceiling_at(c)?;
    let mut fd = ceiling_at(d)?;
    trace.push((c, fc));
    trace.push((d, fd));
    while b - a > ALPHA_REFINEMENT_TOLERANCE {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - GOLDEN_RATIO_CONJUGATE * (b - a);
            fc = ceiling_at(c)?;
            trace.push((c, fc));
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + GOLDEN_RATIO_CONJUGATE * (b - a);
            fd = ceiling_at(d)?;
            trace.push((d, fd));
        }
    }

    let best = argmin(&trace);
    Ok(OptimizationResult {
        best_alpha: trace[best].0,
        best_ceiling: trace[best].1,
        trace,
    })
}

/// Index of the smallest ceiling; ties resolve to the smallest order.
fn argmin(trace: &[(f64, f64)]) -> usize {
    let mut best = 0;
    for (i, &(alpha, ceiling)) in trace.iter().enumerate().skip(1) {
        let (ba, bc) = trace[best];
        if ceiling < bc || (ceiling == bc && alpha < ba) {
            best = i;
        }
    }
    best
}
