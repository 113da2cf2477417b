//! Tsallis–Havrda–Charvát entropies of finite distributions and joint tables,
//! including both conditional forms.
//!
//! For order `alpha != 1` the entropy of a mass function `p` is
//! `(sum_x p(x)^alpha - 1) / (1 - alpha)`; the `alpha = 1` branch is Shannon
//! entropy in nats. Outcomes with `p(x) = 0` contribute nothing, and
//! conditioning slices of probability zero are skipped.
//!
//! Two conditional forms coexist. The first weights slice entropies by
//! `p(y)^alpha` and satisfies the chain rule; the second weights by `p(y)`
//! and does not, but stays monotone under conditioning for every positive
//! order.

use crate::alpha::{alpha_log, entropy_term, AlphaParameter};
use crate::dist::{DiscreteDistribution, JointTable};
use crate::error::{Error, Result};

/// Which conditional THC entropy to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConditionalForm {
    /// Slice entropies weighted by `p(y)^alpha`; obeys the chain rule.
    Daroczy,
    /// Slice entropies weighted by `p(y)`; monotone for all `alpha > 0`.
    Weighted,
}

impl std::fmt::Display for ConditionalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ConditionalForm::Daroczy => write!(f, "daroczy"),
            ConditionalForm::Weighted => write!(f, "weighted"),
        }
    }
}

/// Entropy of a raw probability slice; assumes entries are valid.
pub(crate) fn entropy_of_probs(probs: &[f64], alpha: AlphaParameter) -> f64 {
    probs.iter().map(|&p| entropy_term(p, alpha)).sum()
}

/// THC entropy `H_alpha` of a validated distribution.
pub fn thc_entropy(p: &DiscreteDistribution, alpha: AlphaParameter) -> f64 {
    entropy_of_probs(p.probs(), alpha)
}

/// Binary THC entropy `h_alpha(q)` of the two-outcome distribution `(q, 1-q)`.
pub fn binary_thc_entropy(q: f64, alpha: AlphaParameter) -> Result<f64> {
    if !(0.0..=1.0).contains(&q) {
        return Err(Error::Domain(format!(
            "binary entropy argument must lie in [0, 1], got {q}"
        )));
    }
    Ok(entropy_term(q, alpha) + entropy_term(1.0 - q, alpha))
}

/// Entropy of the marginal of `t` onto `coords`.
pub fn joint_entropy(t: &JointTable, coords: &[usize], alpha: AlphaParameter) -> Result<f64> {
    let marginal = t.marginalize(coords)?;
    Ok(entropy_of_probs(marginal.probs(), alpha))
}

/// Conditional THC entropy of the `target` coordinates given the `given`
/// coordinates, in the chosen form. An empty `given` set reduces to the
/// unconditional marginal entropy of `target`.
pub fn conditional_entropy(
    t: &JointTable,
    target: &[usize],
    given: &[usize],
    alpha: AlphaParameter,
    form: ConditionalForm,
) -> Result<f64> {
    t.check_coords(target)?;
    for &g in given {
        if target.contains(&g) {
            return Err(Error::Argument(format!(
                "coordinate {g} appears in both target and conditioning sets"
            )));
        }
    }
    if given.is_empty() {
        return joint_entropy(t, target, alpha);
    }
    t.check_coords(given)?;

    // Arrange the marginal with conditioning coordinates first, so that each
    // y-slice is a contiguous run of target cells.
    let order: Vec<usize> = given.iter().chain(target.iter()).copied().collect();
    let marginal = t.marginalize(&order)?;
    let slice_len: usize = target.iter().map(|&c| t.shape()[c]).product();

    let mut acc = 0.0;
    for slice in marginal.probs().chunks_exact(slice_len) {
        let p_y: f64 = slice.iter().sum();
        if p_y <= 0.0 {
            continue;
        }
        let h_slice: f64 = slice
            .iter()
            .map(|&p_xy| entropy_term(p_xy / p_y, alpha))
            .sum();
        let weight = match form {
            ConditionalForm::Daroczy => {
                if alpha.is_shannon() {
                    p_y
                } else {
                    p_y.powf(alpha.value())
                }
            }
            ConditionalForm::Weighted => p_y,
        };
        acc += weight * h_slice;
    }
    Ok(acc)
}

/// Chain-rule form: slice entropies weighted by `p(y)^alpha`.
pub fn conditional_entropy_daroczy(
    t: &JointTable,
    target: &[usize],
    given: &[usize],
    alpha: AlphaParameter,
) -> Result<f64> {
    conditional_entropy(t, target, given, alpha, ConditionalForm::Daroczy)
}

/// Expectation form: slice entropies weighted by `p(y)`.
pub fn conditional_entropy_weighted(
    t: &JointTable,
    target: &[usize],
    given: &[usize],
    alpha: AlphaParameter,
) -> Result<f64> {
    conditional_entropy(t, target, given, alpha, ConditionalForm::Weighted)
}

/// Maximum possible entropy of a distribution supported on `n` outcomes,
/// `ln_alpha(n)`, attained by the uniform distribution.
pub fn max_entropy(n: usize, alpha: AlphaParameter) -> Result<f64> {
    if n == 0 {
        return Err(Error::Argument("support of size zero".into()));
    }
    alpha_log(n as f64, alpha)
}
