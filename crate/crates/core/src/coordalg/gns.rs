//! Truncated GNS representation: left multiplication on the span of basis
//! coefficients below a weight cutoff, with per-column overflow flags.

use super::{AlgError, CoordAlgebra, CoordElement, MatrixCoeff};
use crate::matrix::QMatrix;
use crate::repcat::{GroupKind, Weight};
use std::collections::BTreeMap;

/// All dominant weights with every coordinate at most `cutoff`, in the
/// deterministic basis order.
pub fn dominant_weights_up_to(group: GroupKind, cutoff: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    match group {
        GroupKind::Su2 => {
            for a in 0..=cutoff {
                out.push(Weight(vec![a]));
            }
        }
        GroupKind::Su3 => {
            for a in 0..=cutoff {
                for b in 0..=cutoff {
                    out.push(Weight(vec![a, b]));
                }
            }
        }
    }
    out.sort_by_key(|w| w.order_key());
    out
}

/// The GNS basis: every matrix coefficient of every dominant weight below
/// the cutoff, in deterministic order.
pub struct GnsBasis {
    pub coeffs: Vec<MatrixCoeff>,
    index: BTreeMap<MatrixCoeff, usize>,
}

impl GnsBasis {
    pub fn new(alg: &CoordAlgebra, cutoff: i64) -> Result<Self, AlgError> {
        let mut coeffs = Vec::new();
        for w in dominant_weights_up_to(alg.group(), cutoff) {
            let dim = alg.ctx.canonical(&w)?.dim;
            for row in 0..dim {
                for col in 0..dim {
                    coeffs.push(MatrixCoeff {
                        lambda: w.clone(),
                        row,
                        col,
                    });
                }
            }
        }
        let index = coeffs
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, c)| (c, i))
            .collect();
        Ok(GnsBasis { coeffs, index })
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn position(&self, c: &MatrixCoeff) -> Option<usize> {
        self.index.get(c).copied()
    }

    /// Coordinates of an element over the basis; `None` when a term falls
    /// outside the span.
    pub fn coordinates(&self, x: &CoordElement) -> Option<Vec<crate::scalars::QScalar>> {
        let mut v = vec![crate::scalars::QScalar::zero(); self.dim()];
        for (c, s) in x.terms() {
            let i = self.position(c)?;
            v[i] = s.clone();
        }
        Some(v)
    }
}

/// Matrix of left multiplication by `t` on the truncated span, with one
/// overflow flag per column (true when the product escapes the cutoff).
pub struct GnsMatrix {
    pub matrix: QMatrix,
    pub overflow: Vec<bool>,
}

impl GnsMatrix {
    pub fn any_overflow(&self) -> bool {
        self.overflow.iter().any(|&b| b)
    }
}

impl CoordAlgebra {
    pub fn gns_matrix(
        &self,
        t: &CoordElement,
        basis: &GnsBasis,
    ) -> Result<GnsMatrix, AlgError> {
        let dim = basis.dim();
        let mut matrix = QMatrix::zero(dim, dim);
        let mut overflow = vec![false; dim];
        for (j, b) in basis.coeffs.iter().enumerate() {
            let prod = match self.multiply(t, &CoordElement::basis(b.clone())) {
                Ok(p) => p,
                Err(AlgError::Rep(crate::repcat::RepError::CutoffExceeded(..))) => {
                    overflow[j] = true;
                    continue;
                }
                Err(e) => return Err(e),
            };
            match basis.coordinates(&prod) {
                Some(col) => {
                    for (i, v) in col.into_iter().enumerate() {
                        matrix[(i, j)] = v;
                    }
                }
                None => overflow[j] = true,
            }
        }
        Ok(GnsMatrix { matrix, overflow })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Context;
    use crate::scalars::QScalar;
    use std::sync::Arc;

    fn su2_alg() -> CoordAlgebra {
        CoordAlgebra::new(Arc::new(Context::standard(GroupKind::Su2)))
    }

    #[test]
    fn unit_represents_as_identity() {
        let alg = su2_alg();
        let basis = GnsBasis::new(&alg, 2).unwrap();
        let g = alg.gns_matrix(&alg.unit(), &basis).unwrap();
        assert!(!g.any_overflow());
        assert_eq!(g.matrix, QMatrix::identity(basis.dim()));
    }

    #[test]
    fn alpha_column_at_unit_is_alpha() {
        let alg = su2_alg();
        let basis = GnsBasis::new(&alg, 2).unwrap();
        let alpha = alg.generator("alpha").unwrap();
        let g = alg.gns_matrix(&alpha, &basis).unwrap();
        let unit_pos = basis
            .position(&MatrixCoeff {
                lambda: Weight(vec![0]),
                row: 0,
                col: 0,
            })
            .unwrap();
        let alpha_pos = basis
            .position(&MatrixCoeff {
                lambda: Weight(vec![1]),
                row: 0,
                col: 0,
            })
            .unwrap();
        assert!(g.matrix[(alpha_pos, unit_pos)].is_one());
    }

    #[test]
    fn relation_pushes_through_representation() {
        // pi(beta) pi(alpha) - q pi(alpha) pi(beta) vanishes on columns
        // where neither product overflows.
        let alg = su2_alg();
        let basis = GnsBasis::new(&alg, 2).unwrap();
        let alpha = alg.generator("alpha").unwrap();
        let beta = alg.generator("beta").unwrap();
        let pa = alg.gns_matrix(&alpha, &basis).unwrap();
        let pb = alg.gns_matrix(&beta, &basis).unwrap();
        // columns where the double product stays inside: weight below 1
        let ba = pb.matrix.mul(&pa.matrix);
        let ab = pa.matrix.mul(&pb.matrix);
        let diff = ba.sub(&ab.scale(&QScalar::q_power(1)));
        for (j, c) in basis.coeffs.iter().enumerate() {
            if c.lambda.coord(0) <= 0 && !pa.overflow[j] && !pb.overflow[j] {
                for i in 0..basis.dim() {
                    assert!(diff[(i, j)].is_zero());
                }
            }
        }
    }

    #[test]
    fn gns_overflow_is_flagged() {
        let alg = su2_alg();
        let basis = GnsBasis::new(&alg, 4).unwrap();
        let alpha = alg.generator("alpha").unwrap();
        let g = alg.gns_matrix(&alpha, &basis).unwrap();
        // multiplying the top-weight coefficients overflows
        assert!(g.any_overflow());
        let top = basis
            .position(&MatrixCoeff {
                lambda: Weight(vec![4]),
                row: 0,
                col: 0,
            })
            .unwrap();
        assert!(g.overflow[top]);
    }
}
