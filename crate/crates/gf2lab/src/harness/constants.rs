//! Symbolic constants for the main counting statement. The quantities that
//! involve the regularity codimension bound are towers of 2s far beyond any
//! numeric type, so they are carried symbolically: a tower by its height,
//! and every derived constant as an affine expression in the tower value.
//! Everything that can be evaluated exactly is an explicit rational.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::Rational;

/// Largest j considered when selecting a dyadic parameter 2^-j.
pub const MAX_DYADIC_EXPONENT: u32 = 64;

/// Cap on (k-2)*s when substituting a concrete s for the symbolic tower;
/// keeps denominators under a megabit.
const MAX_SUBSTITUTION_BITS: u64 = 1_000_000;

/// 2^e as an exact rational, for any sign of e.
pub(crate) fn pow2(e: i64) -> Rational {
    if e >= 0 {
        Rational::from_integer(BigInt::one() << e as u64)
    } else {
        Rational::new(BigInt::one(), BigInt::one() << (-e) as u64)
    }
}

/// Every constant of the counting statement for a density alpha and an odd
/// tuple length k >= 5, derived exactly.
///
/// The symbolic pieces: s0 = W(h) is a tower of 2s of height `s0_height`
/// (never evaluated), r0 = s0 + `r0_offset`, c = max(r0, s0) = s0 +
/// `c_offset`, and log2(beta) = `log2_beta_s0_coeff`·s0 + log2(`beta_factor`).
#[derive(Clone, Debug)]
pub struct ConstantsLedger {
    pub alpha: Rational,
    pub k: u32,
    /// Largest 2^-j, j <= MAX_DYADIC_EXPONENT, with (alpha-eps)^(k-1) > eps^(k-3).
    pub epsilon: Rational,
    /// alpha - epsilon, positive by selection.
    pub alpha0: Rational,
    /// alpha0^(k-1) - epsilon^(k-3), positive by selection.
    pub margin: Rational,
    /// s0 = W(height) with height = ceil(epsilon^-3); symbolic.
    pub s0_height: BigInt,
    /// r0 = s0 + r0_offset: the least integer offset keeping `bracket` positive.
    pub r0_offset: u64,
    /// c = max(r0, s0) = s0 + c_offset; the offset is positive, so c = r0.
    pub c_offset: u64,
    /// margin - 2^(k-1-r0_offset): the bracket inside beta, independent of
    /// the value substituted for s0 because the exponent k-1+s-r0(s)
    /// collapses to k-1-r0_offset.
    pub bracket: Rational,
    /// bracket / (k-1)!, so beta = 2^((2-k)·s0) · beta_factor.
    pub beta_factor: Rational,
    /// 2 - k: the coefficient of s0 in log2(beta).
    pub log2_beta_s0_coeff: i64,
}

impl ConstantsLedger {
    /// r0 with a concrete integer substituted for the tower.
    pub fn r0_at(&self, s: u64) -> u64 {
        s + self.r0_offset
    }

    /// The bracket margin - 2^(k-1+s-r0(s)) at a concrete s. The s cancels,
    /// so this equals `bracket` for every s; kept as a substitution check.
    pub fn bracket_at(&self, s: u64) -> Rational {
        let e = i64::from(self.k) - 1 + s as i64 - self.r0_at(s) as i64;
        &self.margin - pow2(e)
    }

    /// beta = 2^((2-k)s) · bracket/(k-1)! at a concrete s >= 1. Positive for
    /// every admissible s.
    pub fn beta_at(&self, s: u64) -> Result<Rational> {
        if s == 0 {
            return Err(Error::InvalidInput(
                "substitution requires s >= 1".into(),
            ));
        }
        let bits = u64::from(self.k - 2)
            .checked_mul(s)
            .filter(|&b| b <= MAX_SUBSTITUTION_BITS)
            .ok_or_else(|| {
                Error::InvalidInput(format!(
                    "substitution s = {s} needs more than {MAX_SUBSTITUTION_BITS} denominator bits"
                ))
            })?;
        Ok(pow2(-(bits as i64)) * &self.beta_factor)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "alpha": self.alpha.to_string(),
            "k": self.k,
            "epsilon": self.epsilon.to_string(),
            "alpha0": self.alpha0.to_string(),
            "margin": self.margin.to_string(),
            "s0": { "form": "tower", "height": self.s0_height.to_string() },
            "r0": { "form": "s0 + offset", "offset": self.r0_offset },
            "c": { "form": "s0 + offset", "offset": self.c_offset },
            "bracket": self.bracket.to_string(),
            "beta": {
                "log2_s0_coefficient": self.log2_beta_s0_coeff,
                "factor": self.beta_factor.to_string(),
            },
        })
    }
}

impl fmt::Display for ConstantsLedger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "alpha   = {}", self.alpha)?;
        writeln!(f, "k       = {}", self.k)?;
        writeln!(f, "epsilon = {}", self.epsilon)?;
        writeln!(f, "alpha0  = {}", self.alpha0)?;
        writeln!(f, "s0      = W({})  (tower of 2s, symbolic)", self.s0_height)?;
        writeln!(f, "r0      = s0 + {}", self.r0_offset)?;
        writeln!(f, "c       = s0 + {}", self.c_offset)?;
        write!(
            f,
            "beta    = 2^({}·s0) · {}",
            self.log2_beta_s0_coeff, self.beta_factor
        )
    }
}

/// Derives every constant for the given density and odd tuple length.
///
/// Selection order: epsilon is the largest dyadic value making the margin
/// positive; the tower height is ceil(epsilon^-3); the r0 offset is the
/// least integer keeping margin - 2^(k-1-offset) positive, which exists
/// because the margin is positive.
pub fn theorem_constants(alpha: &Rational, k: u32) -> Result<ConstantsLedger> {
    if !alpha.is_positive() || *alpha > Rational::one() {
        return Err(Error::BadProbability(format!(
            "density must lie in (0, 1], got {alpha}"
        )));
    }
    if k < 5 || k.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!(
            "tuple length must be an odd integer >= 5, got {k}"
        )));
    }
    let mut selected = None;
    for j in 0..=MAX_DYADIC_EXPONENT {
        let eps = pow2(-i64::from(j));
        let a0 = alpha - &eps;
        if a0.is_positive() && a0.pow(k as i32 - 1) > eps.pow(k as i32 - 3) {
            selected = Some(eps);
            break;
        }
    }
    let epsilon = selected.ok_or_else(|| {
        Error::Infeasible(format!(
            "no epsilon = 2^-j with j <= {MAX_DYADIC_EXPONENT} gives \
             (alpha-eps)^(k-1) > eps^(k-3) for alpha = {alpha}, k = {k}"
        ))
    })?;
    let alpha0 = alpha - &epsilon;
    let margin = alpha0.pow(k as i32 - 1) - epsilon.pow(k as i32 - 3);
    debug_assert!(margin.is_positive());
    let s0_height = epsilon.pow(-3).ceil().to_integer();
    let mut r0_offset = 0u64;
    while pow2(i64::from(k) - 1 - r0_offset as i64) >= margin {
        r0_offset += 1;
    }
    let bracket = &margin - pow2(i64::from(k) - 1 - r0_offset as i64);
    debug_assert!(bracket.is_positive());
    let factorial: BigInt = (1..u64::from(k)).map(BigInt::from).product();
    let beta_factor = &bracket / Rational::from_integer(factorial);
    Ok(ConstantsLedger {
        alpha: alpha.clone(),
        k,
        epsilon,
        alpha0,
        margin,
        s0_height,
        r0_offset,
        c_offset: r0_offset,
        bracket,
        beta_factor,
        log2_beta_s0_coeff: 2 - i64::from(k),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn half_and_five_reproduce_the_frozen_ledger() {
        let c = theorem_constants(&rat(1, 2), 5).unwrap();
        assert_eq!(c.epsilon, rat(1, 8));
        assert_eq!(c.alpha0, rat(3, 8));
        assert_eq!(c.margin, rat(17, 4096));
        assert_eq!(c.s0_height, BigInt::from(512));
        assert_eq!(c.r0_offset, 12);
        assert_eq!(c.c_offset, 12);
        assert_eq!(c.bracket, rat(1, 4096));
        assert_eq!(c.beta_factor, rat(1, 98304));
        assert_eq!(c.log2_beta_s0_coeff, -3);
    }

    #[test]
    fn beta_factor_splits_into_factorial_and_offset_power() {
        // 98304 = 24 · 2^12, i.e. log2(beta) = -3·s0 - log2(24) - 12
        let c = theorem_constants(&rat(1, 2), 5).unwrap();
        assert_eq!(
            c.beta_factor,
            Rational::new(BigInt::one(), BigInt::from(24) << 12)
        );
    }

    #[test]
    fn offset_is_least_possible() {
        let c = theorem_constants(&rat(1, 2), 5).unwrap();
        // one less would push the bracket to 17/4096 - 32/4096 < 0
        let smaller = &c.margin - pow2(i64::from(c.k) - 1 - (c.r0_offset as i64 - 1));
        assert!(smaller.is_negative());
        assert!(c.bracket.is_positive());
    }

    #[test]
    fn substitution_stays_positive_and_bracket_is_constant() {
        let c = theorem_constants(&rat(1, 2), 5).unwrap();
        for s in 1..=40 {
            assert!(c.beta_at(s).unwrap().is_positive(), "beta({s})");
            assert_eq!(c.bracket_at(s), c.bracket, "bracket({s})");
            assert_eq!(c.r0_at(s), s + 12);
        }
        assert_eq!(c.beta_at(1).unwrap(), rat(1, 8 * 98304));
    }

    #[test]
    fn substitution_guards() {
        let c = theorem_constants(&rat(1, 2), 5).unwrap();
        assert!(matches!(c.beta_at(0), Err(Error::InvalidInput(_))));
        assert!(matches!(c.beta_at(u64::MAX), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn parameter_validation() {
        assert!(matches!(
            theorem_constants(&Rational::zero(), 5),
            Err(Error::BadProbability(_))
        ));
        assert!(matches!(
            theorem_constants(&rat(3, 2), 5),
            Err(Error::BadProbability(_))
        ));
        assert!(matches!(
            theorem_constants(&rat(1, 2), 4),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            theorem_constants(&rat(1, 2), 3),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn tiny_density_is_infeasible_within_the_dyadic_window() {
        let alpha = Rational::new(BigInt::one(), BigInt::one() << 40);
        assert!(matches!(
            theorem_constants(&alpha, 5),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn unit_density_selects_a_quarter() {
        let c = theorem_constants(&Rational::one(), 5).unwrap();
        assert_eq!(c.epsilon, rat(1, 4));
        assert!(c.margin.is_positive());
    }

    #[test]
    fn json_carries_symbolic_forms() {
        let c = theorem_constants(&rat(1, 2), 5).unwrap();
        let json = c.to_json();
        assert_eq!(json["s0"]["height"], serde_json::json!("512"));
        assert_eq!(json["r0"]["offset"], serde_json::json!(12));
        assert_eq!(json["beta"]["factor"], serde_json::json!("1/98304"));
        assert_eq!(json["beta"]["log2_s0_coefficient"], serde_json::json!(-3));
    }
}
