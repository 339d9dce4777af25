//! The working coefficient field.
//!
//! A scalar is a finite sum of terms `f * sqrt(d) * zeta^z` where `f` is a
//! rational function in `s`, `d` a canonical squarefree radicand and `zeta`
//! a primitive root of unity of the ambient order `n`. Terms are keyed by
//! `(d, z)`; the cyclotomic part is kept reduced modulo the n-th cyclotomic
//! polynomial so equality is equality of representations.

use super::lpoly::LPoly;
use super::ratfunc::RatFunc;
use super::ScalarError;
use num::bigint::BigInt;
use num::complex::Complex64;
use num::traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub type NumericValue = Complex64;

/// Canonical squarefree radicand: squarefree positive integer content times
/// a squarefree primitive polynomial part, `s`-degree offset 0 or 1,
/// positive leading coefficient. `1` means "no radical".
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Radicand(LPoly);

impl Radicand {
    pub fn one() -> Self {
        Radicand(LPoly::one())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn poly(&self) -> &LPoly {
        &self.0
    }

    /// Canonicalize an arbitrary nonzero polynomial `p`, returning `(u, d)`
    /// with `sqrt(p) = u * sqrt(d)` and `d` canonical. Fails when the formal
    /// sign of `p` is negative.
    pub fn canonicalize(p: &LPoly) -> Result<(LPoly, Radicand), ScalarError> {
        assert!(!p.is_zero());
        let (content, prim) = p.div_content();
        if content.is_negative() {
            return Err(ScalarError::SqrtNotRepresentable(format!(
                "negative radicand {:?}",
                p
            )));
        }
        // Integer part: content = c_sq^2 * c_sf with c_sf squarefree.
        let (c_sq, c_sf) = split_square_int(&content);
        // s-offset: s^k = s^(2a) * s^r.
        let k = prim.min_deg();
        let (a, r) = (k.div_euclid(2), k.rem_euclid(2));
        let prim0 = prim.shift(-k);
        // Polynomial part by Yun's algorithm.
        let (g, f) = prim0.squarefree_split();
        let unit = g.mul_bigint(&c_sq).shift(a);
        let rad = LPoly::constant(c_sf).mul(&f).shift(r);
        Ok((unit, Radicand(rad)))
    }

    fn eval_f64(&self, s: f64) -> f64 {
        self.0.eval_f64(s)
    }
}

impl fmt::Debug for Radicand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sqrt({:?})", self.0)
    }
}

/// Largest square divisor split: `c = sq^2 * sf`, both positive.
fn split_square_int(c: &BigInt) -> (BigInt, BigInt) {
    let mut rest = c.abs();
    let mut sq = BigInt::one();
    let mut d = BigInt::from(2);
    while &d * &d <= rest {
        let dd = &d * &d;
        while (&rest % &dd).is_zero() {
            rest /= &dd;
            sq *= &d;
        }
        d += 1;
    }
    (sq, rest)
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TermKey {
    pub rad: Radicand,
    pub zeta: u32,
}

/// Element of the coefficient field.
#[derive(Clone)]
pub struct QScalar {
    n: u32,
    terms: BTreeMap<TermKey, RatFunc>,
}

impl QScalar {
    pub fn zero() -> Self {
        QScalar {
            n: 1,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        QScalar::from_ratfunc(RatFunc::one())
    }

    pub fn from_ratfunc(f: RatFunc) -> Self {
        let mut terms = BTreeMap::new();
        if !f.is_zero() {
            terms.insert(
                TermKey {
                    rad: Radicand::one(),
                    zeta: 0,
                },
                f,
            );
        }
        QScalar { n: 1, terms }
    }

    pub fn from_lpoly(p: LPoly) -> Self {
        QScalar::from_ratfunc(RatFunc::from_lpoly(p))
    }

    pub fn from_i64(c: i64) -> Self {
        QScalar::from_ratfunc(RatFunc::from_i64(c))
    }

    pub fn from_ratio_i64(num: i64, den: i64) -> Self {
        QScalar::from_ratfunc(RatFunc::from_ratio(
            LPoly::from_i64(num),
            LPoly::from_i64(den),
        ))
    }

    /// `s^e`, i.e. `q^(e/2)`.
    pub fn s_power(e: i64) -> Self {
        QScalar::from_lpoly(LPoly::monomial(BigInt::one(), e))
    }

    /// `q^e`.
    pub fn q_power(e: i64) -> Self {
        QScalar::s_power(2 * e)
    }

    /// The root of unity `zeta_n^j`.
    pub fn zeta(n: u32, j: u32) -> Self {
        assert!(n >= 1);
        let mut x = QScalar {
            n,
            terms: BTreeMap::new(),
        };
        x.terms.insert(
            TermKey {
                rad: Radicand::one(),
                zeta: j % n,
            },
            RatFunc::one(),
        );
        x.reduce_cyclotomic();
        x
    }

    pub fn zeta_order(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(k, f)| k.rad.is_one() && k.zeta == 0 && f.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &RatFunc)> {
        self.terms.iter()
    }

    /// The single rational-function value, if the scalar has no radical or
    /// cyclotomic part.
    pub fn as_ratfunc(&self) -> Option<&RatFunc> {
        if self.terms.len() != 1 {
            return None;
        }
        let (k, f) = self.terms.iter().next().unwrap();
        if k.rad.is_one() && k.zeta == 0 {
            Some(f)
        } else {
            None
        }
    }

    /// Promote to cyclotomic order `m` (any common multiple works).
    pub fn promote(&self, m: u32) -> QScalar {
        assert!(m % self.n == 0, "promotion target must be a multiple");
        if m == self.n {
            return self.clone();
        }
        let scale = m / self.n;
        let mut out = QScalar {
            n: m,
            terms: BTreeMap::new(),
        };
        for (k, f) in &self.terms {
            out.insert_term(
                TermKey {
                    rad: k.rad.clone(),
                    zeta: (k.zeta * scale) % m,
                },
                f.clone(),
            );
        }
        out.reduce_cyclotomic();
        out
    }

    fn lcm_order(a: u32, b: u32) -> u32 {
        a / num::integer::gcd(a, b) * b
    }

    fn aligned(&self, rhs: &QScalar) -> (QScalar, QScalar) {
        let m = QScalar::lcm_order(self.n, rhs.n);
        (self.promote(m), rhs.promote(m))
    }

    fn insert_term(&mut self, key: TermKey, f: RatFunc) {
        if f.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(f);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&f);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Reduce every cyclotomic component modulo the n-th cyclotomic
    /// polynomial, so exponents end up below its degree.
    fn reduce_cyclotomic(&mut self) {
        if self.n == 1 {
            // zeta = 1: fold everything onto exponent 0.
            let old = std::mem::take(&mut self.terms);
            for (k, f) in old {
                self.insert_term(
                    TermKey {
                        rad: k.rad,
                        zeta: 0,
                    },
                    f,
                );
            }
            return;
        }
        let phi = cyclotomic_poly(self.n);
        let deg = phi.max_deg() as u32;
        if self.terms.keys().all(|k| k.zeta < deg) {
            return;
        }
        let old = std::mem::take(&mut self.terms);
        let mut by_rad: BTreeMap<Radicand, BTreeMap<u32, RatFunc>> = BTreeMap::new();
        for (k, f) in old {
            let slot = by_rad.entry(k.rad).or_default();
            let cur = slot.entry(k.zeta).or_insert_with(RatFunc::zero);
            *cur = cur.add(&f);
        }
        for (rad, mut coeffs) in by_rad {
            // Polynomial division by the monic integer polynomial phi.
            let mut maxe = coeffs.keys().copied().max().unwrap_or(0);
            while maxe >= deg {
                let lead = coeffs.remove(&maxe).unwrap_or_else(RatFunc::zero);
                if !lead.is_zero() {
                    let shift = maxe - deg;
                    for (e, c) in phi.terms() {
                        if (e as u32) == deg {
                            continue;
                        }
                        let tgt = shift + e as u32;
                        let delta = lead.mul(&RatFunc::from_lpoly(LPoly::constant(c.clone())));
                        let cur = coeffs.entry(tgt).or_insert_with(RatFunc::zero);
                        *cur = cur.sub(&delta);
                    }
                }
                maxe = match coeffs.keys().copied().max() {
                    Some(m) => m,
                    None => break,
                };
            }
            for (z, f) in coeffs {
                self.insert_term(
                    TermKey {
                        rad: rad.clone(),
                        zeta: z,
                    },
                    f,
                );
            }
        }
    }

    pub fn add(&self, rhs: &QScalar) -> QScalar {
        let (mut a, b) = self.aligned(rhs);
        for (k, f) in b.terms {
            a.insert_term(k, f);
        }
        a
    }

    pub fn neg(&self) -> QScalar {
        QScalar {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, f)| (k.clone(), f.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &QScalar) -> QScalar {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &QScalar) -> QScalar {
        let (a, b) = self.aligned(rhs);
        let mut out = QScalar {
            n: a.n,
            terms: BTreeMap::new(),
        };
        for (k1, f1) in &a.terms {
            for (k2, f2) in &b.terms {
                let f = f1.mul(f2);
                if f.is_zero() {
                    continue;
                }
                let z = (k1.zeta + k2.zeta) % a.n;
                if k1.rad.is_one() {
                    out.insert_term(
                        TermKey {
                            rad: k2.rad.clone(),
                            zeta: z,
                        },
                        f,
                    );
                } else if k2.rad.is_one() {
                    out.insert_term(
                        TermKey {
                            rad: k1.rad.clone(),
                            zeta: z,
                        },
                        f,
                    );
                } else {
                    let prod = k1.rad.poly().mul(k2.rad.poly());
                    let (unit, rad) =
                        Radicand::canonicalize(&prod).expect("radicand product is formally positive");
                    out.insert_term(
                        TermKey { rad, zeta: z },
                        f.mul(&RatFunc::from_lpoly(unit)),
                    );
                }
            }
        }
        out.reduce_cyclotomic();
        out
    }

    pub fn mul_i64(&self, c: i64) -> QScalar {
        self.mul(&QScalar::from_i64(c))
    }

    pub fn inv(&self) -> Result<QScalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.terms.len() == 1 {
            let (k, f) = self.terms.iter().next().unwrap();
            // (f sqrt(d) zeta^z)^-1 = f^-1 d^-1 sqrt(d) zeta^(n-z)
            let mut g = f.inv()?;
            if !k.rad.is_one() {
                g = g.div(&RatFunc::from_lpoly(k.rad.poly().clone()))?;
            }
            let mut out = QScalar {
                n: self.n,
                terms: BTreeMap::new(),
            };
            let z = if k.zeta == 0 { 0 } else { self.n - k.zeta };
            out.insert_term(
                TermKey {
                    rad: k.rad.clone(),
                    zeta: z % self.n,
                },
                g,
            );
            out.reduce_cyclotomic();
            return Ok(out);
        }
        self.inv_by_span()
    }

    /// Invert a multi-term scalar by solving `self * y = 1` on the finite
    /// basis spanned by the closure of its radicands and the zeta powers.
    fn inv_by_span(&self) -> Result<QScalar, ScalarError> {
        // Radicand closure under canonical products.
        let mut rads: BTreeSet<Radicand> = BTreeSet::new();
        rads.insert(Radicand::one());
        for k in self.terms.keys() {
            rads.insert(k.rad.clone());
        }
        loop {
            let snapshot: Vec<Radicand> = rads.iter().cloned().collect();
            let before = rads.len();
            for a in &snapshot {
                for b in &snapshot {
                    let prod = a.poly().mul(b.poly());
                    let (_, r) = Radicand::canonicalize(&prod)
                        .map_err(|e| ScalarError::SqrtNotRepresentable(e.to_string()))?;
                    rads.insert(r);
                }
            }
            if rads.len() == before {
                break;
            }
        }
        let phi_deg = if self.n == 1 {
            1
        } else {
            cyclotomic_poly(self.n).max_deg() as u32
        };
        let basis: Vec<TermKey> = rads
            .iter()
            .flat_map(|r| {
                (0..phi_deg).map(move |z| TermKey {
                    rad: r.clone(),
                    zeta: z,
                })
            })
            .collect();
        let index: BTreeMap<TermKey, usize> = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, k)| (k, i))
            .collect();
        let dim = basis.len();
        // Columns: coordinates of self * basis[j].
        let mut mat: Vec<Vec<RatFunc>> = vec![vec![RatFunc::zero(); dim]; dim];
        for (j, b) in basis.iter().enumerate() {
            let mut bq = QScalar {
                n: self.n,
                terms: BTreeMap::new(),
            };
            bq.insert_term(b.clone(), RatFunc::one());
            let prod = self.mul(&bq);
            for (k, f) in &prod.terms {
                let i = *index
                    .get(k)
                    .ok_or_else(|| ScalarError::SqrtNotRepresentable("span escape".into()))?;
                mat[i][j] = f.clone();
            }
        }
        // Right-hand side: e at (rad=1, zeta=0).
        let target = *index
            .get(&TermKey {
                rad: Radicand::one(),
                zeta: 0,
            })
            .unwrap();
        let mut rhs = vec![RatFunc::zero(); dim];
        rhs[target] = RatFunc::one();
        solve_linear(&mut mat, &mut rhs).ok_or(ScalarError::DivisionByZero)?;
        let mut out = QScalar {
            n: self.n,
            terms: BTreeMap::new(),
        };
        for (j, f) in rhs.into_iter().enumerate() {
            out.insert_term(basis[j].clone(), f);
        }
        out.reduce_cyclotomic();
        Ok(out)
    }

    pub fn div(&self, rhs: &QScalar) -> Result<QScalar, ScalarError> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// Complex conjugation: fixes `s` and the radicals, inverts the root of
    /// unity, conjugates rational coefficients (which are real).
    pub fn conj(&self) -> QScalar {
        let mut out = QScalar {
            n: self.n,
            terms: BTreeMap::new(),
        };
        for (k, f) in &self.terms {
            let z = if k.zeta == 0 { 0 } else { self.n - k.zeta };
            out.insert_term(
                TermKey {
                    rad: k.rad.clone(),
                    zeta: z % self.n,
                },
                f.clone(),
            );
        }
        out.reduce_cyclotomic();
        out
    }

    /// Square root of a single-term scalar with trivial radical part and
    /// even zeta exponent.
    pub fn sqrt(&self) -> Result<QScalar, ScalarError> {
        if self.is_zero() {
            return Ok(QScalar::zero());
        }
        if self.terms.len() != 1 {
            return Err(ScalarError::SqrtNotRepresentable(format!(
                "multi-term scalar {:?}",
                self
            )));
        }
        let (k, f) = self.terms.iter().next().unwrap();
        if !k.rad.is_one() {
            return Err(ScalarError::SqrtNotRepresentable(format!(
                "irrational radicand in {:?}",
                self
            )));
        }
        if k.zeta % 2 != 0 {
            return Err(ScalarError::SqrtNotRepresentable(
                "odd root-of-unity exponent".into(),
            ));
        }
        // sqrt(num/den) = sqrt(num*den)/den
        let nd = f.num().mul(f.den());
        let (unit, rad) = Radicand::canonicalize(&nd)?;
        let coeff = RatFunc::from_ratio(unit, f.den().clone());
        let mut out = QScalar {
            n: self.n,
            terms: BTreeMap::new(),
        };
        out.insert_term(
            TermKey {
                rad,
                zeta: k.zeta / 2,
            },
            coeff,
        );
        out.reduce_cyclotomic();
        Ok(out)
    }

    /// Numeric evaluation at a deformation value `q` in `(0,1)`,
    /// with `zeta -> exp(2 pi i / n)`.
    pub fn eval_numeric(&self, q: f64) -> Result<NumericValue, ScalarError> {
        if !(0.0 < q && q < 1.0) {
            return Err(ScalarError::EvalDomain);
        }
        let s = q.sqrt();
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, f) in &self.terms {
            let fv = f.eval_f64(s)?;
            let dv = k.rad.eval_f64(s);
            if dv < 0.0 {
                return Err(ScalarError::NegativeRadicand);
            }
            let phase = Complex64::from_polar(
                1.0,
                2.0 * std::f64::consts::PI * (k.zeta as f64) / (self.n as f64),
            );
            acc += phase * fv * dv.sqrt();
        }
        if !acc.re.is_finite() || !acc.im.is_finite() {
            return Err(ScalarError::EvalPole { at: s });
        }
        Ok(acc)
    }

    /// Exact value at s = 1; q-integers collapse to ordinary integers.
    pub fn classical_limit(&self) -> Result<QScalar, ScalarError> {
        let mut out = QScalar {
            n: self.n,
            terms: BTreeMap::new(),
        };
        for (k, f) in &self.terms {
            let f1 = f.at_one()?;
            let rad1 = k.rad.poly().eval_at_one();
            if rad1.is_negative() {
                return Err(ScalarError::NegativeRadicand);
            }
            if rad1.is_zero() {
                continue;
            }
            let (sq, sf) = split_square_int(&rad1);
            out.insert_term(
                TermKey {
                    rad: Radicand(LPoly::constant(sf)),
                    zeta: k.zeta,
                },
                f1.mul(&RatFunc::from_lpoly(LPoly::constant(sq))),
            );
        }
        out.reduce_cyclotomic();
        Ok(out)
    }

    /// Deterministic formal sign: the leading-coefficient sign of the first
    /// term's rational part.
    pub fn leading_sign(&self) -> i32 {
        match self.terms.values().next() {
            None => 0,
            Some(f) => f.leading_sign(),
        }
    }

    /// True when the scalar is a single term with trivial zeta part.
    pub fn is_single_real_term(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().all(|k| k.zeta == 0)
    }
}

impl PartialEq for QScalar {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.aligned(other);
        a.terms == b.terms
    }
}

impl Eq for QScalar {}

impl fmt::Debug for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({:?})", c)?;
            if !k.rad.is_one() {
                write!(f, "*{:?}", k.rad)?;
            }
            if k.zeta != 0 {
                write!(f, "*z{}^{}", self.n, k.zeta)?;
            }
        }
        Ok(())
    }
}

/// Gaussian elimination over the rational function field; consumes the
/// matrix, leaves the solution in `rhs`. Returns `None` when singular.
fn solve_linear(mat: &mut [Vec<RatFunc>], rhs: &mut [RatFunc]) -> Option<()> {
    let n = mat.len();
    let mut perm: Vec<usize> = (0..n).collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !mat[perm[r]][col].is_zero())?;
        perm.swap(col, pivot);
        let p = perm[col];
        let pinv = mat[p][col].inv().ok()?;
        for r in 0..n {
            if r == col {
                continue;
            }
            let rr = perm[r];
            if mat[rr][col].is_zero() {
                continue;
            }
            let factor = mat[rr][col].mul(&pinv);
            for c in col..n {
                let delta = mat[p][c].mul(&factor);
                mat[rr][c] = mat[rr][c].sub(&delta);
            }
            let delta = rhs[p].mul(&factor);
            rhs[rr] = rhs[rr].sub(&delta);
        }
    }
    let mut out = vec![RatFunc::zero(); n];
    for col in 0..n {
        let p = perm[col];
        out[col] = rhs[p].mul(&mat[p][col].inv().ok()?);
    }
    rhs.clone_from_slice(&out);
    Some(())
}

/// The n-th cyclotomic polynomial, by exact division of `x^n - 1` by the
/// cyclotomic polynomials of the proper divisors.
pub fn cyclotomic_poly(n: u32) -> LPoly {
    assert!(n >= 1);
    let mut num = LPoly::monomial(BigInt::one(), n as i64).sub(&LPoly::one());
    for d in 1..n {
        if n % d == 0 {
            num = num.div_exact(&cyclotomic_poly(d));
        }
    }
    num
}

/// The q_i-integer `[n]` as a Laurent polynomial in `s`, where `q_i = q^d`.
pub fn q_int(n: i64, d: i64) -> QScalar {
    assert!(d >= 1);
    if n == 0 {
        return QScalar::zero();
    }
    let (sign, m) = if n < 0 { (-1, -n) } else { (1, n) };
    let mut p = LPoly::zero();
    for j in 0..m {
        p = p.add(&LPoly::monomial(BigInt::from(sign), 2 * d * (m - 1 - 2 * j)));
    }
    QScalar::from_lpoly(p)
}

/// The q_i-binomial coefficient `[m over k]`.
pub fn q_binom(m: i64, k: i64, d: i64) -> Result<QScalar, ScalarError> {
    if k < 0 || k > m {
        return Err(ScalarError::Payload(format!(
            "binomial index {} outside [0, {}]",
            k, m
        )));
    }
    let mut acc = QScalar::one();
    for j in 1..=k {
        acc = acc.mul(&q_int(m - k + j, d)).div(&q_int(j, d))?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q2() -> QScalar {
        q_int(2, 1)
    }

    #[test]
    fn q_int_examples() {
        assert!(q_int(1, 1).is_one());
        // [2] = q + q^-1 = s^2 + s^-2
        assert_eq!(
            q2(),
            QScalar::from_lpoly(LPoly::from_terms(&[(1, 2), (1, -2)]))
        );
        // [3] = q^2 + 1 + q^-2
        assert_eq!(
            q_int(3, 1),
            QScalar::from_lpoly(LPoly::from_terms(&[(1, 4), (1, 0), (1, -4)]))
        );
        // [-n] = -[n]
        assert_eq!(q_int(-3, 1), q_int(3, 1).neg());
    }

    #[test]
    fn q_binom_examples() {
        assert!(q_binom(5, 0, 1).unwrap().is_one());
        assert_eq!(q_binom(2, 1, 1).unwrap(), q2());
        // [4 over 2] = [4][3]/([2][1])
        let direct = q_binom(4, 2, 1).unwrap();
        let ratio = q_int(4, 1)
            .mul(&q_int(3, 1))
            .div(&q_int(2, 1).mul(&q_int(1, 1)))
            .unwrap();
        assert_eq!(direct, ratio);
        // symmetry under k <-> m-k
        assert_eq!(q_binom(5, 2, 1).unwrap(), q_binom(5, 3, 1).unwrap());
        assert!(q_binom(3, 4, 1).is_err());
    }

    #[test]
    fn sqrt_radical_product() {
        // sqrt(q/[2]) * sqrt(1/(q[2])) = 1/[2]
        let a = QScalar::q_power(1).div(&q2()).unwrap().sqrt().unwrap();
        let b = QScalar::one()
            .div(&QScalar::q_power(1).mul(&q2()))
            .unwrap()
            .sqrt()
            .unwrap();
        let expect = QScalar::one().div(&q2()).unwrap();
        assert_eq!(a.mul(&b), expect);
    }

    #[test]
    fn sqrt_contract() {
        let x = QScalar::q_power(1).div(&q2()).unwrap();
        let r = x.sqrt().unwrap();
        assert_eq!(r.mul(&r), x);
        // sqrt of a multi-term scalar is rejected
        let multi = QScalar::one().add(&q2().sqrt().unwrap());
        assert!(multi.sqrt().is_err());
    }

    #[test]
    fn conj_on_cyclotomic() {
        let x = QScalar::zeta(3, 1).mul(&q2());
        let y = x.conj();
        assert_eq!(y, QScalar::zeta(3, 2).mul(&q2()));
        assert_eq!(y.conj(), x);
    }

    #[test]
    fn cyclotomic_reduction_makes_equality_work() {
        // 1 + z3 + z3^2 = 0
        let sum = QScalar::zeta(3, 0)
            .add(&QScalar::zeta(3, 1))
            .add(&QScalar::zeta(3, 2));
        assert!(sum.is_zero());
        // z6^3 = -1
        let m = QScalar::zeta(6, 3);
        assert_eq!(m, QScalar::from_i64(-1));
    }

    #[test]
    fn inv_multi_term() {
        // (1 + sqrt(q))^-1
        let x = QScalar::one().add(&QScalar::s_power(1));
        let y = x.inv().unwrap();
        assert!(x.mul(&y).is_one());
        // with a radical: (1 + sqrt([2]))^-1
        let r = q2().sqrt().unwrap();
        let z = QScalar::one().add(&r);
        assert!(z.mul(&z.inv().unwrap()).is_one());
        // with a zeta: (2 + z3)^-1
        let w = QScalar::from_i64(2).add(&QScalar::zeta(3, 1));
        assert!(w.mul(&w.inv().unwrap()).is_one());
        assert!(QScalar::zero().inv().is_err());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(QScalar::one().eval_numeric(0.5).unwrap().re, 1.0);
        // [2] = q + q^-1: 4.25 at q = 0.25, 2.5 at q = 0.5
        let v = q2().eval_numeric(0.25).unwrap();
        assert!((v.re - 4.25).abs() < 1e-12 && v.im.abs() < 1e-15);
        let w = q2().eval_numeric(0.5).unwrap();
        assert!((w.re - 2.5).abs() < 1e-12);
        let r = QScalar::q_power(1).div(&q2()).unwrap();
        let s = r.sqrt().unwrap().eval_numeric(0.37).unwrap();
        let direct = r.eval_numeric(0.37).unwrap();
        assert!((s * s - direct).norm() < 1e-12);
        assert!(QScalar::one().eval_numeric(1.5).is_err());
    }

    #[test]
    fn classical_limit_examples() {
        for n in 1..6 {
            let lim = q_int(n, 1).classical_limit().unwrap();
            assert_eq!(lim, QScalar::from_i64(n));
        }
        let c = QScalar::from_ratio_i64(3, 7);
        assert_eq!(c.classical_limit().unwrap(), c);
        // 1/(q - q^-1) has a pole at s = 1
        let pole = QScalar::one()
            .div(&QScalar::q_power(1).sub(&QScalar::q_power(-1)))
            .unwrap();
        assert!(matches!(
            pole.classical_limit(),
            Err(ScalarError::PoleAtOne)
        ));
    }

    #[test]
    fn zero_cancellation() {
        let x = q2().sqrt().unwrap().mul(&QScalar::zeta(4, 1));
        assert!(x.sub(&x).is_zero());
        let y = x.add(&x.neg());
        assert!(y.is_zero());
    }
}
