//! Explicit series behind the slowly decaying `ω ~ √|k|` coefficients.
//!
//! `1/(|k| + α) = 1/|k| − α/k² + α²/(k²(|k| + α))`; the first two pieces sum
//! in closed form to `−2 log|2 sin ½x| − α(½x² − π|x| + ⅓π²)` and the last is
//! `O(|k|⁻³)`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PartialFractionTerms {
    /// `1/|k|`
    pub reciprocal: f64,
    /// `−α/k²`
    pub quadratic: f64,
    /// `α²/(k²(|k| + α))`
    pub remainder: f64,
}

impl PartialFractionTerms {
    pub fn sum(&self) -> f64 {
        (self.reciprocal + self.quadratic) + self.remainder
    }
}

pub fn partial_fraction_terms(alpha: f64, k: i64) -> Result<PartialFractionTerms> {
    if k == 0 {
        return Err(Error::VanishingDenominator { k, alpha });
    }
    let a = k.unsigned_abs() as f64;
    if a + alpha == 0.0 {
        return Err(Error::VanishingDenominator { k, alpha });
    }
    let k2 = a * a;
    Ok(PartialFractionTerms {
        reciprocal: 1.0 / a,
        quadratic: -alpha / k2,
        remainder: alpha * alpha / (k2 * (a + alpha)),
    })
}

/// `−2 log|2 sin ½x| − α(½x² − π|x| + ⅓π²)`
pub fn log_singularity_closed_form(alpha: f64, x: f64) -> f64 {
    let ax = x.abs();
    -2.0 * (2.0 * (0.5 * x).sin()).abs().ln() - alpha * (0.5 * x * x - PI * ax + PI * PI / 3.0)
}

/// Partial sum `Σ_{0<|k|≤N} (1/|k| − α/k²) e^{ikx}` together with its
/// closed-form limit, as `(partial_sum, closed_form)`.
pub fn log_singularity_sum(alpha: f64, x: f64, n: usize) -> Result<(f64, f64)> {
    if !(-PI..=PI).contains(&x) {
        return Err(Error::OutsidePeriod(x));
    }
    if x == 0.0 {
        return Err(Error::SingularPoint);
    }
    if n < 1 {
        return Err(Error::ZeroTruncation);
    }
    // ±k pair up into 2 cos kx
    let mut sum = 0.0;
    for k in 1..=n {
        let kf = k as f64;
        sum += 2.0 * (1.0 / kf - alpha / (kf * kf)) * (kf * x).cos();
    }
    Ok((sum, log_singularity_closed_form(alpha, x)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_zero_is_plain_reciprocal() {
        for k in [1, -3, 17, 10_000] {
            let t = partial_fraction_terms(0.0, k).unwrap();
            assert_eq!(t.reciprocal, 1.0 / (k as f64).abs());
            assert_eq!(t.quadratic, 0.0);
            assert_eq!(t.remainder, 0.0);
        }
    }

    #[test]
    fn worked_example() {
        let t = partial_fraction_terms(2.0, 10).unwrap();
        assert!((t.sum() - 1.0 / 12.0).abs() <= 1e-15 / 12.0);
        assert!((t.remainder - 4.0 / 1200.0).abs() < 1e-18);
        assert!(t.remainder <= 4e-3);
        let neg = partial_fraction_terms(1.0, -5).unwrap();
        assert!((neg.sum() - 1.0 / 6.0).abs() <= 1e-15 / 6.0);
        assert_eq!(neg, partial_fraction_terms(1.0, 5).unwrap());
    }

    #[test]
    fn degenerate_inputs() {
        assert!(partial_fraction_terms(1.0, 0).is_err());
        assert!(partial_fraction_terms(-3.0, 3).is_err());
        assert!(partial_fraction_terms(-3.0, -3).is_err());
        assert!(matches!(
            log_singularity_sum(0.0, 0.0, 10),
            Err(Error::SingularPoint)
        ));
        assert!(matches!(
            log_singularity_sum(0.0, 4.0, 10),
            Err(Error::OutsidePeriod(_))
        ));
    }

    #[test]
    fn remainder_is_cubic() {
        for alpha in [0.5, 1.0, 2.0] {
            for k in [100i64, 1000, 5000] {
                let r1 = partial_fraction_terms(alpha, k).unwrap().remainder;
                let r2 = partial_fraction_terms(alpha, 2 * k).unwrap().remainder;
                let ratio = r2 / r1;
                assert!((1.0 / 9.0..=1.0 / 7.0).contains(&ratio), "{ratio}");
                assert!(r1 <= alpha * alpha / (k as f64).powi(3));
            }
        }
    }

    #[test]
    fn closed_form_at_pi() {
        let (sum, closed) = log_singularity_sum(0.0, PI, 100_000).unwrap();
        assert!((closed + 2.0 * 2f64.ln()).abs() < 1e-15);
        assert!((sum - closed).abs() < 1e-4);
        // the α part contributes π²/6 on both sides
        let (sum1, closed1) = log_singularity_sum(1.0, PI, 100_000).unwrap();
        assert!((closed1 - closed - PI * PI / 6.0).abs() < 1e-14);
        assert!((sum1 - sum - PI * PI / 6.0).abs() < 1e-4);
    }

    #[test]
    fn close_to_the_singularity() {
        let (sum, closed) = log_singularity_sum(0.0, 1e-3, 100_000).unwrap();
        assert!(closed > 13.0);
        assert!(((sum - closed) / closed).abs() < 0.05);
    }

    #[test]
    fn doubling_truncation_shrinks_error() {
        for x in [0.1, 0.5, 1.0, 2.0, 3.0] {
            for alpha in [0.0, 1.0] {
                let err = |n| {
                    let (s, c) = log_singularity_sum(alpha, x, n).unwrap();
                    (s - c).abs()
                };
                // compare envelopes over a few truncations to avoid phase luck
                let coarse = (1000..1010).map(err).fold(0.0, f64::max);
                let fine = (2000..2010).map(err).fold(0.0, f64::max);
                assert!(fine < coarse, "x={x} alpha={alpha}");
            }
        }
    }
}
