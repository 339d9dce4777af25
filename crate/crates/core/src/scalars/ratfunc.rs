//! Reduced ratios of integer Laurent polynomials in `s`.

use super::lpoly::LPoly;
use crate::scalars::ScalarError;
use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};
use std::fmt;

/// A rational function `num / den`.
///
/// Invariants: `den` is a plain polynomial (min degree 0) with nonzero
/// constant term and positive leading coefficient; `gcd(num, den) = 1` as
/// polynomials and the integer contents of `num` and `den` are coprime.
/// All `s`-unit factors live in `num`. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFunc {
    num: LPoly,
    den: LPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: LPoly::zero(),
            den: LPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc {
            num: LPoly::one(),
            den: LPoly::one(),
        }
    }

    pub fn from_lpoly(p: LPoly) -> Self {
        RatFunc {
            num: p,
            den: LPoly::one(),
        }
    }

    pub fn from_i64(c: i64) -> Self {
        RatFunc::from_lpoly(LPoly::from_i64(c))
    }

    pub fn from_ratio(num: LPoly, den: LPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        RatFunc::reduce(num, den)
    }

    fn reduce(num: LPoly, den: LPoly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        // Move the s-unit of den into num.
        let den_shift = den.min_deg();
        let num = num.shift(-den_shift);
        let den = den.shift(-den_shift);
        // Cancel polynomial gcd.
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        // Cancel integer content and normalize signs.
        let (cn, num_p) = num.div_content();
        let (cd, den_p) = den.div_content();
        let ig = num::integer::gcd(cn.abs(), cd.abs());
        let mut cn = &cn / &ig;
        let mut cd = &cd / &ig;
        if cd.is_negative() {
            cn = -cn;
            cd = -cd;
        }
        num = num_p.mul_bigint(&cn);
        den = den_p.mul_bigint(&cd);
        // den may have picked up an s shift via div_exact; renormalize.
        let den_shift = den.min_deg();
        if den_shift != 0 {
            num = num.shift(-den_shift);
            den = den.shift(-den_shift);
        }
        RatFunc { num, den }
    }

    pub fn num(&self) -> &LPoly {
        &self.num
    }

    pub fn den(&self) -> &LPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is trivial (a Laurent polynomial).
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, rhs: &RatFunc) -> RatFunc {
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        RatFunc::reduce(num, den)
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, rhs: &RatFunc) -> RatFunc {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &RatFunc) -> RatFunc {
        RatFunc::reduce(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn inv(&self) -> Result<RatFunc, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(RatFunc::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &RatFunc) -> Result<RatFunc, ScalarError> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// Sign of the leading coefficient of the numerator (the denominator's
    /// is positive by normalization). Used for deterministic sign choices.
    pub fn leading_sign(&self) -> i32 {
        if self.is_zero() {
            0
        } else if self.num.leading_coeff().is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn eval_f64(&self, s: f64) -> Result<f64, ScalarError> {
        let d = self.den.eval_f64(s);
        if d == 0.0 {
            return Err(ScalarError::EvalPole { at: s });
        }
        Ok(self.num.eval_f64(s) / d)
    }

    /// Exact value at s = 1, failing on a pole.
    pub fn at_one(&self) -> Result<RatFunc, ScalarError> {
        let d = self.den.eval_at_one();
        if d.is_zero() {
            return Err(ScalarError::PoleAtOne);
        }
        let n = self.num.eval_at_one();
        Ok(RatFunc::reduce(LPoly::constant(n), LPoly::constant(d)))
    }

    /// Exact rational value, if the function is a constant.
    pub fn as_rational(&self) -> Option<(BigInt, BigInt)> {
        if self.is_zero() {
            return Some((BigInt::zero(), BigInt::one()));
        }
        if self.num.min_deg() == 0 && self.num.max_deg() == 0 && self.den.max_deg() == 0 {
            Some((self.num.coeff(0), self.den.coeff(0)))
        } else {
            None
        }
    }

    pub fn to_f64_at(&self, s: f64) -> f64 {
        self.num.eval_f64(s) / self.den.eval_f64(s)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "({:?})/({:?})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_int(n: i64) -> RatFunc {
        let mut p = LPoly::zero();
        for j in 0..n {
            p = p.add(&LPoly::monomial(BigInt::from(1), 2 * (n - 1 - 2 * j)));
        }
        RatFunc::from_lpoly(p)
    }

    #[test]
    fn reduce_cancels() {
        // (s^4 - 1)/(s^2 - 1) = s^2 + 1
        let num = LPoly::from_terms(&[(1, 4), (-1, 0)]);
        let den = LPoly::from_terms(&[(1, 2), (-1, 0)]);
        let r = RatFunc::from_ratio(num, den);
        assert!(r.is_polynomial());
        assert_eq!(r.num(), &LPoly::from_terms(&[(1, 2), (1, 0)]));
    }

    #[test]
    fn field_ops() {
        let a = q_int(2);
        let b = q_int(3);
        let prod = a.mul(&b);
        let back = prod.div(&b).unwrap();
        assert_eq!(back, a);
        assert!(a.sub(&a).is_zero());
        assert!(a.mul(&a.inv().unwrap()).is_one());
    }

    #[test]
    fn laurent_normalization() {
        // 1/(s^2) stays exact: numerator s^-2.
        let r = RatFunc::from_ratio(LPoly::one(), LPoly::from_terms(&[(1, 2)]));
        assert!(r.is_polynomial());
        assert_eq!(r.num(), &LPoly::from_terms(&[(1, -2)]));
    }
}
