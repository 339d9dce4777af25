//! Hopf structure on the coordinate algebra: coproduct, counit, antipode
//! and star, plus the verification suite for the Hopf axioms and the
//! equivariance identity of the regular actions.

use super::actions::{self, UqMonomial};
use super::{AlgError, CoordAlgebra, CoordElement, MatrixCoeff};
use crate::repcat::rep::RelationReport;
use crate::scalars::QScalar;

impl CoordAlgebra {
    /// `Delta(t^l_{mu nu}) = sum_eta t^l_{mu eta} (x) t^l_{eta nu}`,
    /// extended bilinearly. Each summand is returned as a pair with the
    /// input coefficient folded into the first slot.
    pub fn coproduct(&self, x: &CoordElement) -> Result<Vec<(CoordElement, CoordElement)>, AlgError> {
        let mut out = Vec::new();
        for (c, s) in x.terms() {
            let dim = self.ctx.canonical(&c.lambda)?.dim;
            for eta in 0..dim {
                out.push((
                    CoordElement::scaled_basis(
                        MatrixCoeff {
                            lambda: c.lambda.clone(),
                            row: c.row,
                            col: eta,
                        },
                        s.clone(),
                    ),
                    CoordElement::basis(MatrixCoeff {
                        lambda: c.lambda.clone(),
                        row: eta,
                        col: c.col,
                    }),
                ));
            }
        }
        Ok(out)
    }

    /// `epsilon(t^l_{mu nu}) = delta_{mu nu}`.
    pub fn counit(&self, x: &CoordElement) -> QScalar {
        let mut acc = QScalar::zero();
        for (c, s) in x.terms() {
            if c.row == c.col {
                acc = acc.add(s);
            }
        }
        acc
    }

    /// Antipode: lands in the dual module, rewritten in the canonical
    /// irreducible of the dual highest weight.
    pub fn antipode(&self, x: &CoordElement) -> Result<CoordElement, AlgError> {
        let mut out = CoordElement::zero();
        for (c, s) in x.terms() {
            let rw = self.dual_rewrite(&c.lambda)?;
            // S(t^l_{ij}) = t^dual_{ji} = sum_{ab} (phi^-1)_{ja} phi_{bi} t^can_{ab}
            let dim = rw.phi.rows();
            for a in 0..dim {
                let left = &rw.phi_inv[(c.col, a)];
                if left.is_zero() {
                    continue;
                }
                for b in 0..dim {
                    let right = &rw.phi[(b, c.row)];
                    if right.is_zero() {
                        continue;
                    }
                    out.add_term(
                        MatrixCoeff {
                            lambda: rw.dual_hw.clone(),
                            row: a,
                            col: b,
                        },
                        s.mul(&left.mul(right)),
                    );
                }
            }
        }
        Ok(out)
    }

    /// Star: `(t^l_{mu nu})* = t^{dual l}_{-mu, -nu}` rewritten canonically;
    /// conjugate-linear in the coefficients.
    pub fn star(&self, x: &CoordElement) -> Result<CoordElement, AlgError> {
        let mut out = CoordElement::zero();
        for (c, s) in x.terms() {
            let rw = self.dual_rewrite(&c.lambda)?;
            // star(t^l_{ij}) = t^dual_{ij} = sum_{ab} (phi^-1)_{ia} phi_{bj} t^can_{ab}
            let dim = rw.phi.rows();
            for a in 0..dim {
                let left = &rw.phi_inv[(c.row, a)];
                if left.is_zero() {
                    continue;
                }
                for b in 0..dim {
                    let right = &rw.phi[(b, c.col)];
                    if right.is_zero() {
                        continue;
                    }
                    out.add_term(
                        MatrixCoeff {
                            lambda: rw.dual_hw.clone(),
                            row: a,
                            col: b,
                        },
                        s.conj().mul(&left.mul(right)),
                    );
                }
            }
        }
        Ok(out)
    }

    /// `m (S (x) id) Delta(t) = epsilon(t) 1`.
    pub fn antipode_axiom_holds(&self, x: &CoordElement) -> Result<bool, AlgError> {
        let mut acc = CoordElement::zero();
        for (a, b) in self.coproduct(x)? {
            let sa = self.antipode(&a)?;
            acc = acc.add(&self.multiply(&sa, &b)?);
        }
        let expect = self.unit().scale(&self.counit(x));
        Ok(acc == expect)
    }

    /// Full Hopf verification on a sample set, as exact identities:
    /// coassociativity, the counit laws, the antipode axiom, star
    /// anti-multiplicativity and the coproduct equivariance of the right
    /// regular action on products.
    pub fn verify_hopf(&self, samples: &[CoordElement]) -> Result<RelationReport, AlgError> {
        let mut entries = Vec::new();
        for (si, x) in samples.iter().enumerate() {
            entries.push((
                format!("coassociativity #{}", si),
                self.coassociativity_holds(x)?,
            ));
            entries.push((format!("counit laws #{}", si), self.counit_laws_hold(x)?));
            entries.push((
                format!("antipode axiom #{}", si),
                self.antipode_axiom_holds(x)?,
            ));
            entries.push((
                format!("star involution #{}", si),
                self.star(&self.star(x)?)? == *x,
            ));
        }
        for (i, a) in samples.iter().enumerate() {
            for (j, b) in samples.iter().enumerate() {
                let ab = self.multiply(a, b)?;
                let star_ab = self.star(&ab)?;
                let sb = self.star(b)?;
                let sa = self.star(a)?;
                entries.push((
                    format!("star anti-multiplicativity #({},{})", i, j),
                    star_ab == self.multiply(&sb, &sa)?,
                ));
            }
        }
        // Equivariance of the right regular action over products, for every
        // generator of the enveloping algebra.
        for (i, a) in samples.iter().enumerate() {
            for (j, b) in samples.iter().enumerate() {
                for word in actions::generator_monomials(self.rank()) {
                    entries.push((
                        format!("right-action equivariance #({},{}) on {:?}", i, j, word),
                        self.product_equivariance_holds(a, b, &word)?,
                    ));
                }
            }
        }
        Ok(RelationReport { entries })
    }

    pub fn coassociativity_holds(&self, x: &CoordElement) -> Result<bool, AlgError> {
        // Both iterated coproducts of a basis element expand over the same
        // index set; compare the collected triples.
        let mut left: Vec<(CoordElement, CoordElement, CoordElement)> = Vec::new();
        for (a, b) in self.coproduct(x)? {
            for (a1, a2) in self.coproduct(&a)? {
                left.push((a1, a2, b.clone()));
            }
        }
        let mut right: Vec<(CoordElement, CoordElement, CoordElement)> = Vec::new();
        for (a, b) in self.coproduct(x)? {
            for (b1, b2) in self.coproduct(&b)? {
                right.push((a.clone(), b1, b2));
            }
        }
        Ok(triple_sum_equal(left, right))
    }

    pub fn counit_laws_hold(&self, x: &CoordElement) -> Result<bool, AlgError> {
        let mut from_left = CoordElement::zero();
        let mut from_right = CoordElement::zero();
        for (a, b) in self.coproduct(x)? {
            from_left = from_left.add(&b.scale(&self.counit(&a)));
            from_right = from_right.add(&a.scale(&self.counit(&b)));
        }
        Ok(&from_left == x && &from_right == x)
    }

    /// Equivariance of the right regular action:
    /// `d(x)(t t') = sum d(x') t * d(x'') t'`.
    pub fn product_equivariance_holds(
        &self,
        t1: &CoordElement,
        t2: &CoordElement,
        x: &UqMonomial,
    ) -> Result<bool, AlgError> {
        let prod = self.multiply(t1, t2)?;
        let lhs = self.right_action(x, &prod)?;
        let mut rhs = CoordElement::zero();
        for (x1, x2, coeff) in x.sweedler() {
            let a = self.right_action(&x1, t1)?;
            let b = self.right_action(&x2, t2)?;
            rhs = rhs.add(&self.multiply(&a, &b)?.scale(&coeff));
        }
        Ok(lhs == rhs)
    }
}

/// Compare two sums of elementary tensors of degree 3 by expanding to
/// basis-indexed coefficient maps.
fn triple_sum_equal(
    a: Vec<(CoordElement, CoordElement, CoordElement)>,
    b: Vec<(CoordElement, CoordElement, CoordElement)>,
) -> bool {
    use std::collections::BTreeMap;
    type Key = (MatrixCoeff, MatrixCoeff, MatrixCoeff);
    let expand = |v: Vec<(CoordElement, CoordElement, CoordElement)>| {
        let mut map: BTreeMap<Key, QScalar> = BTreeMap::new();
        for (x, y, z) in v {
            for (cx, sx) in x.terms() {
                for (cy, sy) in y.terms() {
                    for (cz, sz) in z.terms() {
                        let key = (cx.clone(), cy.clone(), cz.clone());
                        let val = sx.mul(sy).mul(sz);
                        let cur = map.entry(key).or_insert_with(QScalar::zero);
                        *cur = cur.add(&val);
                    }
                }
            }
        }
        map.retain(|_, v| !v.is_zero());
        map
    };
    expand(a) == expand(b)
}

#[cfg(test)]
mod tests {
    use super::super::CoordAlgebra;
    use crate::context::Context;
    use crate::repcat::GroupKind;
    use std::sync::Arc;

    #[test]
    fn hopf_suite_su2() {
        let alg = CoordAlgebra::new(Arc::new(Context::standard(GroupKind::Su2)));
        let samples: Vec<_> = alg.generators().into_iter().map(|(_, e)| e).collect();
        let report = alg.verify_hopf(&samples).unwrap();
        for (name, ok) in &report.entries {
            assert!(ok, "hopf check failed: {}", name);
        }
    }

    #[test]
    fn hopf_suite_su3_spot() {
        // Full set runs in the acceptance suite; spot-check two generators.
        let alg = CoordAlgebra::new(Arc::new(Context::standard(GroupKind::Su3)));
        let samples = vec![
            alg.generator("t12").unwrap(),
            alg.generator("t31").unwrap(),
        ];
        let report = alg.verify_hopf(&samples).unwrap();
        for (name, ok) in &report.entries {
            assert!(ok, "hopf check failed: {}", name);
        }
    }

    #[test]
    fn coproduct_of_alpha_expands_along_the_row() {
        let alg = CoordAlgebra::new(Arc::new(Context::standard(GroupKind::Su2)));
        let alpha = alg.generator("alpha").unwrap();
        let pairs = alg.coproduct(&alpha).unwrap();
        assert_eq!(pairs.len(), 2);
        // Delta(alpha) = alpha (x) alpha + beta (x) t[-,+]
        let beta = alg.generator("beta").unwrap();
        assert_eq!(pairs[0].0, alpha);
        assert_eq!(pairs[0].1, alpha);
        assert_eq!(pairs[1].0, beta);
    }

    #[test]
    fn counit_examples() {
        let alg = CoordAlgebra::new(Arc::new(Context::standard(GroupKind::Su3)));
        let t12 = alg.generator("t12").unwrap();
        let t11 = alg.generator("t11").unwrap();
        assert!(alg.counit(&t12).is_zero());
        assert!(alg.counit(&t11).is_one());
        let unit = alg.unit();
        let pairs = alg.coproduct(&unit).unwrap();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].0, unit);
        assert_eq!(pairs[0].1, unit);
    }
}
