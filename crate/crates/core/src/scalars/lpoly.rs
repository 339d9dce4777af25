//! Integer-coefficient Laurent polynomials in the base variable `s`.
//!
//! `s` stands for the square root of the deformation parameter, so `q = s^2`
//! and half-integer powers of `q` are plain monomials here.

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};
use std::fmt;

/// Laurent polynomial `sum coeffs[i] * s^(min_deg + i)`.
///
/// Invariant: either `coeffs` is empty (the zero polynomial, `min_deg == 0`)
/// or both the first and the last entry of `coeffs` are nonzero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LPoly {
    min_deg: i64,
    coeffs: Vec<BigInt>,
}

impl LPoly {
    pub fn zero() -> Self {
        LPoly {
            min_deg: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        LPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        if c.is_zero() {
            LPoly::zero()
        } else {
            LPoly {
                min_deg: 0,
                coeffs: vec![c],
            }
        }
    }

    pub fn from_i64(c: i64) -> Self {
        LPoly::constant(BigInt::from(c))
    }

    /// The monomial `c * s^e`.
    pub fn monomial(c: BigInt, e: i64) -> Self {
        if c.is_zero() {
            LPoly::zero()
        } else {
            LPoly {
                min_deg: e,
                coeffs: vec![c],
            }
        }
    }

    /// Build from a list of `(coefficient, exponent)` pairs.
    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        let mut p = LPoly::zero();
        for &(c, e) in terms {
            p = p.add(&LPoly::monomial(BigInt::from(c), e));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.min_deg == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True when the polynomial is a single monomial `c*s^e`.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn min_deg(&self) -> i64 {
        self.min_deg
    }

    pub fn max_deg(&self) -> i64 {
        self.min_deg + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        if self.is_zero() || e < self.min_deg || e > self.max_deg() {
            BigInt::zero()
        } else {
            self.coeffs[(e - self.min_deg) as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        let min = self.min_deg;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (min + i as i64, c))
    }

    fn trim(min_deg: i64, mut coeffs: Vec<BigInt>) -> Self {
        let mut lo = 0usize;
        while lo < coeffs.len() && coeffs[lo].is_zero() {
            lo += 1;
        }
        let mut hi = coeffs.len();
        while hi > lo && coeffs[hi - 1].is_zero() {
            hi -= 1;
        }
        if lo == hi {
            return LPoly::zero();
        }
        coeffs.drain(hi..);
        coeffs.drain(..lo);
        LPoly {
            min_deg: min_deg + lo as i64,
            coeffs,
        }
    }

    pub fn add(&self, rhs: &LPoly) -> LPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let min = self.min_deg.min(rhs.min_deg);
        let max = self.max_deg().max(rhs.max_deg());
        let mut coeffs = vec![BigInt::zero(); (max - min + 1) as usize];
        for (e, c) in self.terms() {
            coeffs[(e - min) as usize] += c;
        }
        for (e, c) in rhs.terms() {
            coeffs[(e - min) as usize] += c;
        }
        LPoly::trim(min, coeffs)
    }

    pub fn neg(&self) -> LPoly {
        LPoly {
            min_deg: self.min_deg,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, rhs: &LPoly) -> LPoly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &LPoly) -> LPoly {
        if self.is_zero() || rhs.is_zero() {
            return LPoly::zero();
        }
        let min = self.min_deg + rhs.min_deg;
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        LPoly::trim(min, coeffs)
    }

    pub fn mul_bigint(&self, c: &BigInt) -> LPoly {
        if c.is_zero() {
            return LPoly::zero();
        }
        LPoly {
            min_deg: self.min_deg,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn shift(&self, e: i64) -> LPoly {
        if self.is_zero() {
            return LPoly::zero();
        }
        LPoly {
            min_deg: self.min_deg + e,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn pow(&self, n: u32) -> LPoly {
        let mut acc = LPoly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Content: gcd of all coefficients, with the sign of the leading one.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num::integer::gcd(g, c.abs());
            if g.is_one() {
                break;
            }
        }
        if self.leading_coeff().is_negative() {
            -g
        } else {
            g
        }
    }

    /// Primitive part: `self / content`, normalized to min degree 0.
    pub fn primitive(&self) -> LPoly {
        if self.is_zero() {
            return LPoly::zero();
        }
        let c = self.content();
        LPoly {
            min_deg: 0,
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    /// As `primitive` but keeping the Laurent offset.
    pub fn div_content(&self) -> (BigInt, LPoly) {
        if self.is_zero() {
            return (BigInt::one(), LPoly::zero());
        }
        let c = self.content();
        (
            c.clone(),
            LPoly {
                min_deg: self.min_deg,
                coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
            },
        )
    }

    /// Exact division; panics if not exact. Both operands are treated as
    /// Laurent polynomials, so the result may carry an `s` offset.
    pub fn div_exact(&self, rhs: &LPoly) -> LPoly {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return LPoly::zero();
        }
        let min = self.min_deg - rhs.min_deg;
        let mut rem = self.coeffs.clone();
        let n = rhs.coeffs.len();
        assert!(rem.len() >= n, "inexact polynomial division");
        let mut quot = vec![BigInt::zero(); rem.len() - n + 1];
        for i in (0..quot.len()).rev() {
            let lead = rem[i + n - 1].clone();
            if lead.is_zero() {
                continue;
            }
            let (q, r) = num::integer::div_rem(lead, rhs.coeffs[n - 1].clone());
            assert!(r.is_zero(), "inexact polynomial division");
            quot[i] = q.clone();
            for j in 0..n {
                let t = &rhs.coeffs[j] * &q;
                rem[i + j] -= t;
            }
        }
        assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
        LPoly::trim(min, quot)
    }

    /// Derivative with respect to `s`.
    pub fn derivative(&self) -> LPoly {
        if self.is_zero() {
            return LPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * BigInt::from(self.min_deg + i as i64))
            .collect();
        LPoly::trim(self.min_deg - 1, coeffs)
    }

    /// Polynomial gcd (primitive, positive leading coefficient, min degree 0).
    /// Uses the primitive PRS; ignores `s`-unit factors.
    pub fn gcd(&self, rhs: &LPoly) -> LPoly {
        let mut a = self.primitive();
        let mut b = rhs.primitive();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.coeffs.len() < b.coeffs.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive();
        }
        let mut g = a.primitive();
        if g.leading_coeff().is_negative() {
            g = g.neg();
        }
        g
    }

    /// Pseudo-remainder of `self` by `rhs` (both taken as polynomials with
    /// min degree 0).
    fn pseudo_rem(&self, rhs: &LPoly) -> LPoly {
        let mut rem = self.clone();
        rem.min_deg = 0;
        let mut div = rhs.clone();
        div.min_deg = 0;
        let lead = div.leading_coeff();
        while !rem.is_zero() && rem.max_deg() >= div.max_deg() {
            let rl = rem.leading_coeff();
            let shift = rem.max_deg() - div.max_deg();
            rem = rem.mul_bigint(&lead).sub(&div.mul_bigint(&rl).shift(shift));
        }
        rem
    }

    /// Squarefree split: returns `(g, f)` with `self = content_sign * g^2 * f`
    /// up to integer content, `f` squarefree and primitive, `g` primitive.
    /// Integer content is not touched here. Uses Yun's algorithm.
    pub fn squarefree_split(&self) -> (LPoly, LPoly) {
        assert!(!self.is_zero());
        let p = self.primitive();
        if p.coeffs.len() == 1 {
            return (LPoly::one(), LPoly::one());
        }
        // p = prod a_i^i with a_i squarefree, pairwise coprime. Extract the
        // multiplicity layers by repeated gcd with the derivative.
        let dp = p.derivative().primitive();
        let g = p.gcd(&dp); // prod a_i^(i-1)
        let mut layers: Vec<LPoly> = Vec::new();
        let mut rest = p.clone();
        let mut gg = g;
        loop {
            let layer = rest.div_exact(&gg).primitive(); // prod of a_i with i >= current
            layers.push(layer);
            if gg.coeffs.len() == 1 {
                break;
            }
            rest = gg.clone();
            let dgg = gg.derivative().primitive();
            gg = gg.gcd(&dgg);
        }
        // layers[j] = prod_{i > j} a_i for j = 0.. ; a_i = layers[i-1]/layers[i]
        let mut square = LPoly::one();
        let mut sqfree = LPoly::one();
        for i in 1..=layers.len() {
            let num = &layers[i - 1];
            let a_i = if i < layers.len() {
                num.div_exact(&layers[i]).primitive()
            } else {
                num.primitive()
            };
            let e = i as u32;
            square = square.mul(&a_i.pow(e / 2));
            if e % 2 == 1 {
                sqfree = sqfree.mul(&a_i);
            }
        }
        (square.primitive(), sqfree.primitive())
    }

    /// Evaluate at a real point.
    pub fn eval_f64(&self, s: f64) -> f64 {
        let mut acc = 0.0;
        for (e, c) in self.terms() {
            let cf = bigint_to_f64(c);
            acc += cf * s.powi(e as i32);
        }
        acc
    }

    /// Evaluate at s = 1 (sum of coefficients).
    pub fn eval_at_one(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for c in &self.coeffs {
            acc += c;
        }
        acc
    }

    /// Substitute s -> 1 but keep exactness: returns the constant polynomial.
    pub fn at_one(&self) -> LPoly {
        LPoly::constant(self.eval_at_one())
    }
}

pub fn bigint_to_f64(c: &BigInt) -> f64 {
    // Values stay well within f64 range in this crate.
    c.to_string().parse::<f64>().unwrap_or(f64::NAN)
}

impl fmt::Debug for LPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if e == 0 {
                write!(f, "{}", c)?;
            } else if c.is_one() {
                write!(f, "s^{}", e)?;
            } else {
                write!(f, "{}*s^{}", c, e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_roundtrip() {
        let a = LPoly::from_terms(&[(1, 2), (1, -2)]); // s^2 + s^-2 = [2]_q
        let b = LPoly::from_terms(&[(1, 2), (-1, -2)]);
        let c = a.mul(&b);
        assert_eq!(c, LPoly::from_terms(&[(1, 4), (-1, -4)]));
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn div_exact_works() {
        let a = LPoly::from_terms(&[(1, 4), (-1, -4)]);
        let b = LPoly::from_terms(&[(1, 1), (-1, -1)]);
        let q = a.div_exact(&b);
        assert_eq!(q.mul(&b), a);
    }

    #[test]
    fn gcd_of_q_integers() {
        // [4] = s^6+s^2+s^-2+s^-6 wait: [4]_q = q^3+q+q^-1+q^-3 = s^6+s^2+s^-2+s^-6
        let four = LPoly::from_terms(&[(1, 6), (1, 2), (1, -2), (1, -6)]);
        let two = LPoly::from_terms(&[(1, 2), (1, -2)]);
        let g = four.gcd(&two);
        // [2] divides [4]: gcd should be the primitive part of [2] = s^4+1
        assert_eq!(g, LPoly::from_terms(&[(1, 4), (1, 0)]));
    }

    #[test]
    fn squarefree_split_quadratic() {
        // (s^2-1)^2 * (s^2+1)
        let sq = LPoly::from_terms(&[(1, 2), (-1, 0)]);
        let sf = LPoly::from_terms(&[(1, 2), (1, 0)]);
        let p = sq.mul(&sq).mul(&sf);
        let (g, f) = p.squarefree_split();
        assert_eq!(g, sq.primitive());
        assert_eq!(f, sf.primitive());
    }
}
