//! The entropic order parameter and the deformed logarithm.
//!
//! `ln_alpha(xi) = (xi^(1-alpha) - 1) / (1 - alpha)` for `alpha != 1`, and the
//! natural logarithm at `alpha = 1`. Every entropy and every permanent bound
//! in this crate is expressed through this one function.

use crate::error::{Error, Result};

/// Validated entropic order `alpha > 0`.
///
/// `alpha = 1` exactly is the Shannon limit and is dispatched to dedicated
/// logarithmic branches everywhere, so the deformed formulas never divide
/// by `1 - alpha = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaParameter {
    value: f64,
    is_shannon: bool,
}

impl AlphaParameter {
    /// Accepts any finite `value > 0`.
    pub fn new(value: f64) -> Result<Self> {
        if !value.is_finite() || value <= 0.0 {
            return Err(Error::Domain(format!(
                "entropic order must be a finite positive real, got {value}"
            )));
        }
        Ok(Self {
            value,
            is_shannon: value == 1.0,
        })
    }

    /// The Shannon limit `alpha = 1`.
    pub fn shannon() -> Self {
        Self {
            value: 1.0,
            is_shannon: true,
        }
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    /// True iff the order is exactly 1.
    pub fn is_shannon(&self) -> bool {
        self.is_shannon
    }
}

impl std::fmt::Display for AlphaParameter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl TryFrom<f64> for AlphaParameter {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Self::new(value)
    }
}

/// The deformed logarithm `ln_alpha`.
///
/// Monotone increasing in `xi` for every fixed order, zero at `xi = 1`.
/// Away from the Shannon branch the power is evaluated as
/// `exp_m1((1 - alpha) * ln xi)` so that the value stays accurate as
/// `alpha -> 1`, where the naive `xi^(1-alpha) - 1` cancels catastrophically.
pub fn alpha_log(xi: f64, alpha: AlphaParameter) -> Result<f64> {
    if !xi.is_finite() || xi <= 0.0 {
        return Err(Error::Domain(format!(
            "alpha_log requires a positive argument, got {xi}"
        )));
    }
    if alpha.is_shannon() {
        return Ok(xi.ln());
    }
    let one_minus_alpha = 1.0 - alpha.value();
    Ok(f64::exp_m1(one_minus_alpha * xi.ln()) / one_minus_alpha)
}

/// Per-outcome entropy contribution `(p^alpha - p) / (1 - alpha)`,
/// equal to `p * ln_alpha(1/p)` and to `-p^alpha * ln_alpha(p)`.
///
/// Extended by continuity with value 0 at `p = 0`. Summing this over a
/// probability vector gives the THC entropy; it is kept internal because the
/// public surface works with whole distributions.
pub(crate) fn entropy_term(p: f64, alpha: AlphaParameter) -> f64 {
    debug_assert!((0.0..=1.0 + 1e-9).contains(&p));
    if p <= 0.0 {
        return 0.0;
    }
    if alpha.is_shannon() {
        return -p * p.ln();
    }
    let one_minus_alpha = 1.0 - alpha.value();
    // p * (p^(alpha-1) - 1) / (1 - alpha), with the power via exp_m1.
    p * f64::exp_m1(-one_minus_alpha * p.ln()) / one_minus_alpha
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(v: f64) -> AlphaParameter {
        AlphaParameter::new(v).unwrap()
    }

    #[test]
    fn rejects_nonpositive_and_nonfinite_orders() {
        assert!(AlphaParameter::new(0.0).is_err());
        assert!(AlphaParameter::new(-2.0).is_err());
        assert!(AlphaParameter::new(f64::NAN).is_err());
        assert!(AlphaParameter::new(f64::INFINITY).is_err());
    }

    #[test]
    fn shannon_flag_tracks_exact_unity() {
        assert!(a(1.0).is_shannon());
        assert!(!a(1.0 + 1e-15).is_shannon());
        assert!(!a(0.5).is_shannon());
        assert!(AlphaParameter::shannon().is_shannon());
    }

    #[test]
    fn alpha_log_of_one_is_zero() {
        for v in [0.25, 0.5, 1.0, 1.5, 2.0, 3.67, 8.0] {
            assert_eq!(alpha_log(1.0, a(v)).unwrap(), 0.0);
        }
    }

    #[test]
    fn alpha_log_order_two_is_one_minus_reciprocal() {
        // ln_2(xi) = 1 - 1/xi; at xi = 4 this is 0.75.
        let v = alpha_log(4.0, a(2.0)).unwrap();
        assert!((v - 0.75).abs() < 1e-15);
    }

    #[test]
    fn alpha_log_shannon_branch_is_natural_log() {
        let v = alpha_log(std::f64::consts::E, a(1.0)).unwrap();
        assert!((v - 1.0).abs() < 1e-15);
    }

    #[test]
    fn alpha_log_rejects_nonpositive_arguments() {
        assert!(alpha_log(0.0, a(2.0)).is_err());
        assert!(alpha_log(-1.0, a(0.5)).is_err());
        assert!(alpha_log(f64::NAN, a(1.0)).is_err());
    }

    #[test]
    fn alpha_log_is_continuous_through_the_shannon_limit() {
        for xi in [0.037f64, 0.4, 1.7, 23.0, 4096.0] {
            let exact = xi.ln();
            for eps in [1e-9, -1e-9, 1e-12, -1e-12] {
                let near = alpha_log(xi, a(1.0 + eps)).unwrap();
                assert!(
                    (near - exact).abs() <= 1e-7 * exact.abs().max(1.0),
                    "xi={xi} eps={eps}: {near} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn entropy_term_matches_naive_formula() {
        let naive = |p: f64, al: f64| (p.powf(al) - p) / (1.0 - al);
        for &al in &[0.25, 0.5, 1.5, 2.0, 3.0] {
            for &p in &[1e-9, 0.01, 0.3, 0.5, 0.99, 1.0] {
                let got = entropy_term(p, a(al));
                let want = naive(p, al);
                assert!(
                    (got - want).abs() <= 1e-12 * want.abs().max(1.0),
                    "p={p} alpha={al}: {got} vs {want}"
                );
            }
        }
        assert_eq!(entropy_term(0.0, a(2.0)), 0.0);
        assert_eq!(entropy_term(1.0, a(2.0)), 0.0);
        assert_eq!(entropy_term(0.0, a(1.0)), 0.0);
    }
}
