//! The pairing with the deformed enveloping algebra and the commuting
//! left/right regular actions on matrix coefficients.

use super::{AlgError, CoordAlgebra, CoordElement, MatrixCoeff};
use crate::matrix::QMatrix;
use crate::repcat::rep::Generator;
use crate::scalars::QScalar;

pub const MAX_WORD_LEN: usize = 24;

/// An ordered word in the generators `e_i, f_i, k_i^{+-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UqMonomial {
    word: Vec<Generator>,
    rank: usize,
}

impl UqMonomial {
    pub fn identity(rank: usize) -> Self {
        UqMonomial { word: Vec::new(), rank }
    }

    pub fn new(rank: usize, word: Vec<Generator>) -> Result<Self, AlgError> {
        if word.len() > MAX_WORD_LEN {
            return Err(AlgError::Invalid(format!(
                "monomial length {} exceeds the bound {}",
                word.len(),
                MAX_WORD_LEN
            )));
        }
        for g in &word {
            let i = match g {
                Generator::E(i) | Generator::F(i) | Generator::K(i) | Generator::KInv(i) => *i,
            };
            if i >= rank {
                return Err(AlgError::Invalid(format!(
                    "generator index {} out of range for rank {}",
                    i, rank
                )));
            }
        }
        Ok(UqMonomial { word, rank })
    }

    pub fn word(&self) -> &[Generator] {
        &self.word
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn append(&self, g: Generator) -> Result<Self, AlgError> {
        let mut w = self.word.clone();
        w.push(g);
        UqMonomial::new(self.rank, w)
    }

    /// Sweedler expansion of the coproduct of the word: a list of
    /// `(first slot, second slot, coefficient)` triples. The generators are
    /// primitive-like (`Delta e = e (x) k + k^-1 (x) e`, `Delta k = k (x) k`)
    /// so the coefficients stay 1.
    pub fn sweedler(&self) -> Vec<(UqMonomial, UqMonomial, QScalar)> {
        let mut acc: Vec<(Vec<Generator>, Vec<Generator>)> = vec![(Vec::new(), Vec::new())];
        for g in &self.word {
            let splits: Vec<(Generator, Generator)> = match *g {
                Generator::E(i) => vec![
                    (Generator::E(i), Generator::K(i)),
                    (Generator::KInv(i), Generator::E(i)),
                ],
                Generator::F(i) => vec![
                    (Generator::F(i), Generator::K(i)),
                    (Generator::KInv(i), Generator::F(i)),
                ],
                Generator::K(i) => vec![(Generator::K(i), Generator::K(i))],
                Generator::KInv(i) => vec![(Generator::KInv(i), Generator::KInv(i))],
            };
            let mut next = Vec::with_capacity(acc.len() * splits.len());
            for (left, right) in &acc {
                for (gl, gr) in &splits {
                    let mut l = left.clone();
                    let mut r = right.clone();
                    l.push(*gl);
                    r.push(*gr);
                    next.push((l, r));
                }
            }
            acc = next;
        }
        acc.into_iter()
            .map(|(l, r)| {
                (
                    UqMonomial { word: l, rank: self.rank },
                    UqMonomial { word: r, rank: self.rank },
                    QScalar::one(),
                )
            })
            .collect()
    }
}

/// The single-generator monomials used by verification suites.
pub fn generator_monomials(rank: usize) -> Vec<UqMonomial> {
    let mut out = Vec::new();
    for i in 0..rank {
        for g in [Generator::E(i), Generator::F(i), Generator::K(i)] {
            out.push(UqMonomial { word: vec![g], rank });
        }
    }
    out
}

impl CoordAlgebra {
    /// The representation matrix of a monomial on the canonical module.
    pub fn monomial_matrix(
        &self,
        lambda: &crate::repcat::Weight,
        x: &UqMonomial,
    ) -> Result<QMatrix, AlgError> {
        let rep = self.ctx.canonical(lambda)?;
        let mut acc = QMatrix::identity(rep.dim);
        for g in x.word() {
            acc = acc.mul(&rep.generator(*g));
        }
        Ok(acc)
    }

    /// The nondegenerate pairing: `t^l_{mu nu}(x)` is the `(mu, nu)` entry
    /// of the representation matrix.
    pub fn pair(&self, t: &CoordElement, x: &UqMonomial) -> Result<QScalar, AlgError> {
        let mut acc = QScalar::zero();
        for (c, s) in t.terms() {
            let m = self.monomial_matrix(&c.lambda, x)?;
            acc = acc.add(&s.mul(&m[(c.row, c.col)]));
        }
        Ok(acc)
    }

    /// Right regular action: `d(x) t^l_{mu nu}` expands the column index
    /// along the representation matrix of `x`.
    pub fn right_action(&self, x: &UqMonomial, t: &CoordElement) -> Result<CoordElement, AlgError> {
        let mut out = CoordElement::zero();
        for (c, s) in t.terms() {
            let m = self.monomial_matrix(&c.lambda, x)?;
            for eta in 0..m.rows() {
                let v = &m[(eta, c.col)];
                if v.is_zero() {
                    continue;
                }
                out.add_term(
                    MatrixCoeff {
                        lambda: c.lambda.clone(),
                        row: c.row,
                        col: eta,
                    },
                    s.mul(v),
                );
            }
        }
        Ok(out)
    }

    /// Left regular action: expands the row index along the matrix of
    /// `S(theta(x))`, where `theta` is the algebra automorphism
    /// `k -> k^-1, e -> -f, f -> -e`.
    pub fn left_action(&self, x: &UqMonomial, t: &CoordElement) -> Result<CoordElement, AlgError> {
        let mut out = CoordElement::zero();
        for (c, s) in t.terms() {
            let m = self.left_action_matrix(&c.lambda, x)?;
            for sigma in 0..m.rows() {
                let v = &m[(c.row, sigma)];
                if v.is_zero() {
                    continue;
                }
                out.add_term(
                    MatrixCoeff {
                        lambda: c.lambda.clone(),
                        row: sigma,
                        col: c.col,
                    },
                    s.mul(v),
                );
            }
        }
        Ok(out)
    }

    /// The matrix of `rho(S(theta(x)))` for a monomial `x`. On generators:
    /// `S(theta(e_i)) = q_i^-1 f_i`, `S(theta(f_i)) = q_i e_i`,
    /// `S(theta(k_i)) = k_i`.
    pub fn left_action_matrix(
        &self,
        lambda: &crate::repcat::Weight,
        x: &UqMonomial,
    ) -> Result<QMatrix, AlgError> {
        let rep = self.ctx.canonical(lambda)?;
        // S is an anti-automorphism and theta an automorphism, so the image
        // of a word reverses order.
        let mut acc = QMatrix::identity(rep.dim);
        for g in x.word().iter().rev() {
            let m = match *g {
                Generator::E(i) => {
                    let qi_inv = QScalar::s_power(-2 * self.ctx.rd.d[i]);
                    rep.f[i].scale(&qi_inv)
                }
                Generator::F(i) => {
                    let qi = QScalar::s_power(2 * self.ctx.rd.d[i]);
                    rep.e[i].scale(&qi)
                }
                Generator::K(i) => rep.k(i),
                Generator::KInv(i) => rep.k_inv(i),
            };
            acc = acc.mul(&m);
        }
        Ok(acc)
    }

    /// Pairing/product compatibility:
    /// `(t1 t2)(x) = sum t1(x') t2(x'')`.
    pub fn pairing_product_compatible(
        &self,
        t1: &CoordElement,
        t2: &CoordElement,
        x: &UqMonomial,
    ) -> Result<bool, AlgError> {
        let prod = self.multiply(t1, t2)?;
        let lhs = self.pair(&prod, x)?;
        let mut rhs = QScalar::zero();
        for (x1, x2, coeff) in x.sweedler() {
            let a = self.pair(t1, &x1)?;
            let b = self.pair(t2, &x2)?;
            rhs = rhs.add(&a.mul(&b).mul(&coeff));
        }
        Ok(lhs == rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Context;
    use crate::repcat::{GroupKind, Weight};
    use std::sync::Arc;

    fn su3_alg() -> CoordAlgebra {
        CoordAlgebra::new(Arc::new(Context::standard(GroupKind::Su3)))
    }

    fn su2_alg() -> CoordAlgebra {
        CoordAlgebra::new(Arc::new(Context::standard(GroupKind::Su2)))
    }

    #[test]
    fn pairing_examples() {
        let alg = su3_alg();
        // t_11(k_1) = q^(1/2)
        let t11 = alg.generator("t11").unwrap();
        let k1 = UqMonomial::new(2, vec![Generator::K(0)]).unwrap();
        assert_eq!(alg.pair(&t11, &k1).unwrap(), QScalar::s_power(1));
        // t^l_{mu nu}(1) = delta
        let id = UqMonomial::identity(2);
        assert!(alg.pair(&t11, &id).unwrap().is_one());
        let t12 = alg.generator("t12").unwrap();
        assert!(alg.pair(&t12, &id).unwrap().is_zero());
    }

    #[test]
    fn alpha_pairs_to_zero_on_f() {
        let alg = su2_alg();
        let alpha = alg.generator("alpha").unwrap();
        let f = UqMonomial::new(1, vec![Generator::F(0)]).unwrap();
        assert!(alg.pair(&alpha, &f).unwrap().is_zero());
    }

    #[test]
    fn k_actions_scale_by_weights() {
        let alg = su3_alg();
        let t12 = alg.generator("t12").unwrap();
        let k1 = UqMonomial::new(2, vec![Generator::K(0)]).unwrap();
        // right: column weight of t12 is the weight of v2 = (-1,1)
        let r = alg.right_action(&k1, &t12).unwrap();
        assert_eq!(r, t12.scale(&QScalar::s_power(-1)));
        // left: row weight of t12 is the weight of v1 = (1,0)
        let l = alg.left_action(&k1, &t12).unwrap();
        assert_eq!(l, t12.scale(&QScalar::s_power(1)));
        // identity acts trivially
        let id = UqMonomial::identity(2);
        assert_eq!(alg.right_action(&id, &t12).unwrap(), t12);
    }

    #[test]
    fn left_and_right_actions_commute() {
        let alg = su3_alg();
        let t = alg.generator("t21").unwrap();
        for x in generator_monomials(2) {
            for y in generator_monomials(2) {
                let a = alg.left_action(&x, &alg.right_action(&y, &t).unwrap()).unwrap();
                let b = alg.right_action(&y, &alg.left_action(&x, &t).unwrap()).unwrap();
                assert_eq!(a, b, "x={:?} y={:?}", x, y);
            }
        }
    }

    #[test]
    fn pairing_compatible_with_products() {
        let alg = su2_alg();
        let alpha = alg.generator("alpha").unwrap();
        let beta = alg.generator("beta").unwrap();
        let e = UqMonomial::new(1, vec![Generator::E(0)]).unwrap();
        let ef = e.append(Generator::F(0)).unwrap();
        let efk = ef.append(Generator::K(0)).unwrap();
        for x in [e, ef, efk] {
            assert!(alg.pairing_product_compatible(&alpha, &beta, &x).unwrap());
            assert!(alg.pairing_product_compatible(&beta, &beta, &x).unwrap());
        }
    }

    #[test]
    fn weight_of_lambda2_basis_from_k_pairing() {
        // read weights off diag(k_1), diag(k_2) of the 6-dim module
        let alg = su3_alg();
        let rep = alg.ctx.canonical(&Weight(vec![2, 0])).unwrap();
        assert_eq!(rep.weights[0], Weight(vec![2, 0]));
        assert_eq!(rep.weights[3], Weight(vec![1, -1]));
    }
}
