//! Decomposition of tensor products into canonical irreducibles via exact
//! highest-weight extraction and Gram-Schmidt, producing isometric
//! intertwining embeddings whose entries are the Clebsch-Gordan data.

use super::rep::Rep;
use super::{RepError, Weight};
use crate::matrix::{inner, QMatrix};
use crate::scalars::QScalar;
use std::collections::BTreeMap;

/// Isometric intertwiner from the canonical module of highest weight
/// `source` into the tensor product of the canonical modules `factors`.
/// Columns are indexed by the canonical basis of the source, rows by the
/// tensor basis `(m, m') -> m * dim' + m'`.
#[derive(Clone)]
pub struct CGEmbedding {
    pub source: Weight,
    pub factors: (Weight, Weight),
    pub matrix: QMatrix,
}

impl CGEmbedding {
    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    /// `E^H E = 1` exactly.
    pub fn is_isometry(&self) -> bool {
        let m = self.matrix.dagger().mul(&self.matrix);
        m == QMatrix::identity(self.matrix.cols())
    }

    /// `rho_tensor(g) E = E rho_source(g)` for every generator.
    pub fn intertwines(&self, tensor: &Rep, source: &Rep) -> bool {
        let gens = |r: &Rep| {
            let mut v = Vec::new();
            for i in 0..r.rd.rank {
                v.push(r.e[i].clone());
                v.push(r.f[i].clone());
                v.push(r.k(i));
            }
            v
        };
        gens(tensor)
            .iter()
            .zip(gens(source).iter())
            .all(|(gt, gs)| gt.mul(&self.matrix) == self.matrix.mul(gs))
    }
}

/// A generated irreducible submodule of some ambient module: orthonormal
/// basis vectors in ambient coordinates plus the action on that basis.
pub struct RawBlock {
    pub hw: Weight,
    pub basis: Vec<Vec<QScalar>>,
    pub rep: Rep,
}

/// Highest-weight vectors of an admissible module: a basis of the joint
/// kernel of the raising operators, organized by weight and computed by
/// exact elimination per weight space.
pub fn highest_weight_vectors(r: &Rep) -> Vec<(Weight, Vec<QScalar>)> {
    let mut by_weight: BTreeMap<(i64, Vec<i64>), Vec<usize>> = BTreeMap::new();
    for (i, w) in r.weights.iter().enumerate() {
        by_weight.entry(w.order_key()).or_default().push(i);
    }
    let mut out = Vec::new();
    for indices in by_weight.values() {
        let weight = r.weights[indices[0]].clone();
        // Stack the raising maps restricted to this weight space.
        let mut rows: Vec<Vec<QScalar>> = Vec::new();
        for i in 0..r.rd.rank {
            for target in 0..r.dim {
                let mut row = Vec::with_capacity(indices.len());
                let mut nonzero = false;
                for &src in indices {
                    let v = r.e[i][(target, src)].clone();
                    nonzero |= !v.is_zero();
                    row.push(v);
                }
                if nonzero {
                    rows.push(row);
                }
            }
        }
        let kernel = if rows.is_empty() {
            // No raising operator acts: every vector is highest.
            (0..indices.len())
                .map(|j| {
                    let mut v = vec![QScalar::zero(); indices.len()];
                    v[j] = QScalar::one();
                    v
                })
                .collect()
        } else {
            let mat = QMatrix::from_fn(rows.len(), indices.len(), |i, j| rows[i][j].clone());
            mat.null_space()
        };
        for small in kernel {
            let mut full = vec![QScalar::zero(); r.dim];
            for (j, &idx) in indices.iter().enumerate() {
                full[idx] = small[j].clone();
            }
            out.push((weight.clone(), full));
        }
    }
    out
}

/// Normalize to unit length; fails when the norm is not representable.
fn normalize(v: &[QScalar]) -> Result<Vec<QScalar>, RepError> {
    let n2 = inner(v, v);
    let n = n2.sqrt().map_err(RepError::Scalar)?;
    let ninv = n.inv().map_err(RepError::Scalar)?;
    Ok(v.iter().map(|x| x.mul(&ninv)).collect())
}

/// Flip the sign so the first nonzero coordinate is formally positive.
fn sign_normalize(mut v: Vec<QScalar>) -> Vec<QScalar> {
    let sign = v
        .iter()
        .find(|x| !x.is_zero())
        .map(|x| x.leading_sign())
        .unwrap_or(1);
    if sign < 0 {
        for x in v.iter_mut() {
            *x = x.neg();
        }
    }
    v
}

fn weight_of_vector(r: &Rep, v: &[QScalar]) -> Weight {
    for (i, x) in v.iter().enumerate() {
        if !x.is_zero() {
            return r.weights[i].clone();
        }
    }
    Weight::zero(r.rd.rank)
}

/// Generate the cyclic submodule of `ambient` spanned by lowering-operator
/// words applied to the normalized highest-weight vector `hw_vec`,
/// orthogonalizing against `prior` (previously generated blocks) and within
/// each weight space. Returns the orthonormal basis ordered by weight.
fn generate_submodule(
    ambient: &Rep,
    hw_vec: &[QScalar],
    prior: &[Vec<QScalar>],
) -> Result<(Vec<Weight>, Vec<Vec<QScalar>>), RepError> {
    let mut start = hw_vec.to_vec();
    // Orthogonalize highest-weight vectors of equal weight across blocks.
    for p in prior {
        let c = inner(p, &start);
        if !c.is_zero() {
            for (x, y) in start.iter_mut().zip(p) {
                *x = x.sub(&c.mul(y));
            }
        }
    }
    let start = sign_normalize(normalize(&start)?);
    let mut weights = vec![weight_of_vector(ambient, &start)];
    let mut basis = vec![start];
    let mut idx = 0usize;
    while idx < basis.len() {
        for i in 0..ambient.rd.rank {
            let mut w = ambient.f[i].apply(&basis[idx]);
            if w.iter().all(|x| x.is_zero()) {
                continue;
            }
            let wt = weight_of_vector(ambient, &w);
            for (bv, bw) in basis.iter().zip(&weights) {
                if *bw == wt {
                    let c = inner(bv, &w);
                    if !c.is_zero() {
                        for (x, y) in w.iter_mut().zip(bv) {
                            *x = x.sub(&c.mul(y));
                        }
                    }
                }
            }
            if w.iter().all(|x| x.is_zero()) {
                continue;
            }
            let w = normalize(&w)?;
            weights.push(wt);
            basis.push(w);
        }
        idx += 1;
    }
    // Deterministic ordering: weight reverse-lexicographic, then generation
    // sequence.
    let mut order: Vec<usize> = (0..basis.len()).collect();
    order.sort_by_key(|&i| (weights[i].order_key(), i));
    let weights = order.iter().map(|&i| weights[i].clone()).collect();
    let basis = order.iter().map(|&i| basis[i].clone()).collect();
    Ok((weights, basis))
}

/// The action of the ambient generators on an orthonormal block basis.
fn block_rep(ambient: &Rep, weights: Vec<Weight>, basis: &[Vec<QScalar>]) -> Rep {
    let dim = basis.len();
    let mut e = Vec::new();
    let mut f = Vec::new();
    for i in 0..ambient.rd.rank {
        let mut em = QMatrix::zero(dim, dim);
        let mut fm = QMatrix::zero(dim, dim);
        for c in 0..dim {
            let ev = ambient.e[i].apply(&basis[c]);
            let fv = ambient.f[i].apply(&basis[c]);
            for r in 0..dim {
                em[(r, c)] = inner(&basis[r], &ev);
                fm[(r, c)] = inner(&basis[r], &fv);
            }
        }
        e.push(em);
        f.push(fm);
    }
    let hw = weights[0].clone();
    Rep::new(ambient.rd.clone(), weights, e, f, Some(hw))
}

/// Split a star-representation into generated irreducible blocks, ordered by
/// highest weight (reverse-lexicographic) then by kernel ordering.
pub fn raw_blocks(ambient: &Rep) -> Result<Vec<RawBlock>, RepError> {
    let hws = highest_weight_vectors(ambient);
    let mut blocks: Vec<RawBlock> = Vec::new();
    let mut prior_hw_vectors: Vec<Vec<QScalar>> = Vec::new();
    let mut covered = 0usize;
    for (wt, vec) in hws {
        let (weights, basis) = generate_submodule(ambient, &vec, &prior_hw_vectors)?;
        covered += basis.len();
        prior_hw_vectors.push(basis[0].clone());
        let rep = block_rep(ambient, weights, &basis);
        blocks.push(RawBlock {
            hw: wt,
            basis,
            rep,
        });
    }
    if covered != ambient.dim {
        return Err(RepError::Intertwiner(format!(
            "blocks cover {} of {} dimensions",
            covered, ambient.dim
        )));
    }
    Ok(blocks)
}

/// Solve for the intertwiner `Phi: source -> target` normalized by sending
/// the highest-weight basis vector to the highest-weight basis vector with
/// coefficient 1. Both modules must be irreducible with the same highest
/// weight. Uses single-unknown propagation along lowering relations, with a
/// dense linear solve as fallback, and verifies the result exactly.
pub fn solve_intertwiner(source: &Rep, target: &Rep) -> Result<QMatrix, RepError> {
    if source.dim != target.dim {
        return Err(RepError::Intertwiner("dimension mismatch".into()));
    }
    let dim = source.dim;
    let s_hw = source
        .highest_weight_index()
        .ok_or_else(|| RepError::Intertwiner("source lacks a unique highest vector".into()))?;
    let t_hw = target
        .highest_weight_index()
        .ok_or_else(|| RepError::Intertwiner("target lacks a unique highest vector".into()))?;
    let mut cols: Vec<Option<Vec<QScalar>>> = vec![None; dim];
    let mut seed = vec![QScalar::zero(); dim];
    seed[t_hw] = QScalar::one();
    cols[s_hw] = Some(seed);
    // Propagate: for a known column j and generator g, the relation
    // Phi * rho_s(g) e_j = rho_t(g) Phi e_j determines a column whenever it
    // is the single unknown with nonzero coefficient.
    let mut progress = true;
    while progress && cols.iter().any(Option::is_none) {
        progress = false;
        for j in 0..dim {
            let Some(col_j) = cols[j].clone() else { continue };
            for i in 0..source.rd.rank {
                for mat_pair in [(&source.f[i], &target.f[i]), (&source.e[i], &target.e[i])] {
                    let (ms, mt) = mat_pair;
                    // rho_s(g) e_j = sum_a ms[a][j] e_a
                    let mut unknown: Option<usize> = None;
                    let mut viable = true;
                    for a in 0..dim {
                        if !ms[(a, j)].is_zero() && cols[a].is_none() {
                            if unknown.is_some() {
                                viable = false;
                                break;
                            }
                            unknown = Some(a);
                        }
                    }
                    let (Some(a), true) = (unknown, viable) else { continue };
                    // rhs = rho_t(g) * col_j - sum_{known b} ms[b][j] col_b
                    let mut rhs = mt.apply(&col_j);
                    for b in 0..dim {
                        if b == a || ms[(b, j)].is_zero() {
                            continue;
                        }
                        let cb = cols[b].as_ref().unwrap();
                        for (x, y) in rhs.iter_mut().zip(cb) {
                            *x = x.sub(&ms[(b, j)].mul(y));
                        }
                    }
                    let cinv = ms[(a, j)].inv().map_err(RepError::Scalar)?;
                    let col_a: Vec<QScalar> = rhs.iter().map(|x| x.mul(&cinv)).collect();
                    cols[a] = Some(col_a);
                    progress = true;
                }
            }
        }
    }
    let phi = if cols.iter().all(Option::is_some) {
        QMatrix::from_fn(dim, dim, |r, c| cols[c].as_ref().unwrap()[r].clone())
    } else {
        dense_intertwiner(source, target, s_hw, t_hw)?
    };
    // Exact verification.
    for i in 0..source.rd.rank {
        let ok = phi.mul(&source.e[i]) == target.e[i].mul(&phi)
            && phi.mul(&source.f[i]) == target.f[i].mul(&phi)
            && phi.mul(&source.k(i)) == target.k(i).mul(&phi);
        if !ok {
            return Err(RepError::Intertwiner(
                "propagated map fails to intertwine".into(),
            ));
        }
    }
    Ok(phi)
}

/// Dense fallback: unknowns are the entries allowed by weight matching;
/// equations from every lowering/raising relation plus the seed.
fn dense_intertwiner(
    source: &Rep,
    target: &Rep,
    s_hw: usize,
    t_hw: usize,
) -> Result<QMatrix, RepError> {
    let dim = source.dim;
    // Unknown slots (r, c) with matching weights.
    let mut slots: Vec<(usize, usize)> = Vec::new();
    for r in 0..dim {
        for c in 0..dim {
            if target.weights[r] == source.weights[c] {
                slots.push((r, c));
            }
        }
    }
    let slot_index: BTreeMap<(usize, usize), usize> = slots
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, s)| (s, i))
        .collect();
    let nvars = slots.len();
    let mut rows: Vec<Vec<QScalar>> = Vec::new();
    let mut rhs: Vec<QScalar> = Vec::new();
    // Seed equation.
    {
        let mut row = vec![QScalar::zero(); nvars];
        row[slot_index[&(t_hw, s_hw)]] = QScalar::one();
        rows.push(row);
        rhs.push(QScalar::one());
    }
    // Intertwining equations: (Phi * Ms - Mt * Phi)[r][c] = 0.
    for i in 0..source.rd.rank {
        for (ms, mt) in [(&source.e[i], &target.e[i]), (&source.f[i], &target.f[i])] {
            for r in 0..dim {
                for c in 0..dim {
                    let mut row = vec![QScalar::zero(); nvars];
                    let mut any = false;
                    for a in 0..dim {
                        if !ms[(a, c)].is_zero() {
                            if let Some(&k) = slot_index.get(&(r, a)) {
                                row[k] = row[k].add(&ms[(a, c)]);
                                any = true;
                            }
                        }
                        if !mt[(r, a)].is_zero() {
                            if let Some(&k) = slot_index.get(&(a, c)) {
                                row[k] = row[k].sub(&mt[(r, a)]);
                                any = true;
                            }
                        }
                    }
                    if any {
                        rows.push(row);
                        rhs.push(QScalar::zero());
                    }
                }
            }
        }
    }
    // Eliminate.
    let nrows = rows.len();
    let mut mat = QMatrix::from_fn(nrows, nvars, |i, j| rows[i][j].clone());
    let mut b = rhs;
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row = 0usize;
    for col in 0..nvars {
        let Some(p) = (row..nrows).find(|&r| !mat[(r, col)].is_zero()) else {
            continue;
        };
        for c in 0..nvars {
            let tmp = mat[(row, c)].clone();
            mat[(row, c)] = mat[(p, c)].clone();
            mat[(p, c)] = tmp;
        }
        b.swap(row, p);
        let pinv = mat[(row, col)].inv().map_err(RepError::Scalar)?;
        for c in 0..nvars {
            mat[(row, c)] = mat[(row, c)].mul(&pinv);
        }
        b[row] = b[row].mul(&pinv);
        for r in 0..nrows {
            if r != row && !mat[(r, col)].is_zero() {
                let factor = mat[(r, col)].clone();
                for c in 0..nvars {
                    let delta = mat[(row, c)].mul(&factor);
                    mat[(r, c)] = mat[(r, c)].sub(&delta);
                }
                let delta = b[row].mul(&factor);
                b[r] = b[r].sub(&delta);
            }
        }
        pivots.push((row, col));
        row += 1;
        if row == nrows {
            break;
        }
    }
    // Consistency: zero rows must have zero rhs.
    for r in row..nrows {
        if !b[r].is_zero() {
            return Err(RepError::Intertwiner("inconsistent system".into()));
        }
    }
    if pivots.len() != nvars {
        return Err(RepError::Intertwiner(
            "intertwiner not unique; module not irreducible?".into(),
        ));
    }
    let mut phi = QMatrix::zero(dim, dim);
    for &(r, col) in &pivots {
        let (tr, tc) = slots[col];
        phi[(tr, tc)] = b[r].clone();
    }
    Ok(phi)
}

#[cfg(test)]
mod tests {
    use super::super::builtin::builtin_rep;
    use super::*;

    #[test]
    fn hw_vectors_of_lambda1() {
        let r = builtin_rep("su3:λ1").unwrap();
        let hws = highest_weight_vectors(&r);
        assert_eq!(hws.len(), 1);
        assert_eq!(hws[0].0, Weight(vec![1, 0]));
    }

    #[test]
    fn hw_vectors_of_tensor_square() {
        let r = builtin_rep("su3:λ1").unwrap();
        let t = r.tensor(&r).unwrap();
        let hws = highest_weight_vectors(&t);
        let mut weights: Vec<Weight> = hws.into_iter().map(|(w, _)| w).collect();
        weights.sort_by_key(|w| w.order_key());
        assert_eq!(weights, vec![Weight(vec![2, 0]), Weight(vec![0, 1])]);
    }

    #[test]
    fn tensor_splits_into_blocks() {
        let r = builtin_rep("su3:λ1").unwrap();
        let t = r.tensor(&r).unwrap();
        let blocks = raw_blocks(&t).unwrap();
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0].hw, Weight(vec![2, 0]));
        assert_eq!(blocks[0].basis.len(), 6);
        assert_eq!(blocks[1].hw, Weight(vec![0, 1]));
        assert_eq!(blocks[1].basis.len(), 3);
        for b in &blocks {
            assert!(b.rep.verify_defining_relations().all_pass());
            assert!(b.rep.verify_star());
        }
    }

    #[test]
    fn intertwiner_from_dual_reproduces_antipode_scalars() {
        // dual(lambda1) -> lambda1v with highest weight mapped to
        // coefficient 1 forces the map diag(q^2, -q, 1) on the dual basis.
        let l1 = builtin_rep("su3:λ1").unwrap();
        let l1v = builtin_rep("su3:λ1v").unwrap();
        let dual = l1.dual();
        let phi = solve_intertwiner(&dual, &l1v).unwrap();
        assert_eq!(phi[(0, 0)], QScalar::q_power(2));
        assert_eq!(phi[(1, 1)], QScalar::q_power(1).neg());
        assert!(phi[(2, 2)].is_one());
    }
}
