//! Finite-dimensional admissible representations given by generator
//! matrices over the exact field, with a weight-labeled basis.

use super::{GroupKind, RepError, RootDatum, Weight};
use crate::matrix::QMatrix;
use crate::scalars::{q_binom, q_int, QScalar};
use serde_json::{json, Value};
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    E(usize),
    F(usize),
    K(usize),
    KInv(usize),
}

/// An admissible module: generator matrices plus weight labels. `k_i` acts
/// diagonally by `q_i^(mu(h_i)/2) = s^(d_i mu(h_i))` on a weight-`mu` vector.
#[derive(Clone)]
pub struct Rep {
    pub rd: Arc<RootDatum>,
    pub dim: usize,
    pub weights: Vec<Weight>,
    pub e: Vec<QMatrix>,
    pub f: Vec<QMatrix>,
    /// Highest weight when the module is irreducible and canonical.
    pub highest_weight: Option<Weight>,
}

#[derive(Debug, Clone)]
pub struct RelationReport {
    pub entries: Vec<(String, bool)>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|(_, ok)| *ok)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.entries
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(name, _)| name.as_str())
            .collect()
    }
}

impl Rep {
    pub fn new(
        rd: Arc<RootDatum>,
        weights: Vec<Weight>,
        e: Vec<QMatrix>,
        f: Vec<QMatrix>,
        highest_weight: Option<Weight>,
    ) -> Self {
        let dim = weights.len();
        Rep {
            rd,
            dim,
            weights,
            e,
            f,
            highest_weight,
        }
    }

    pub fn group(&self) -> GroupKind {
        self.rd.kind
    }

    /// The diagonal matrix of `k_i`.
    pub fn k(&self, i: usize) -> QMatrix {
        let mut m = QMatrix::zero(self.dim, self.dim);
        for (b, w) in self.weights.iter().enumerate() {
            m[(b, b)] = QScalar::s_power(self.rd.d[i] * w.coord(i));
        }
        m
    }

    pub fn k_inv(&self, i: usize) -> QMatrix {
        let mut m = QMatrix::zero(self.dim, self.dim);
        for (b, w) in self.weights.iter().enumerate() {
            m[(b, b)] = QScalar::s_power(-self.rd.d[i] * w.coord(i));
        }
        m
    }

    pub fn generator(&self, g: Generator) -> QMatrix {
        match g {
            Generator::E(i) => self.e[i].clone(),
            Generator::F(i) => self.f[i].clone(),
            Generator::K(i) => self.k(i),
            Generator::KInv(i) => self.k_inv(i),
        }
    }

    /// Index of the basis vector carrying the highest weight, when unique.
    pub fn highest_weight_index(&self) -> Option<usize> {
        let hw = self.highest_weight.as_ref()?;
        let mut found = None;
        for (i, w) in self.weights.iter().enumerate() {
            if w == hw {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// Check every defining relation as an exact matrix identity.
    pub fn verify_defining_relations(&self) -> RelationReport {
        let n = self.rd.rank;
        let mut entries = Vec::new();
        // Diagonal k's commute by construction; check k e k^-1 and k f k^-1.
        for i in 0..n {
            for j in 0..n {
                let ki = self.k(i);
                let kinv = self.k_inv(i);
                let lhs = ki.mul(&self.e[j]).mul(&kinv);
                let rhs = self
                    .e[j]
                    .scale(&QScalar::s_power(self.rd.d[i] * self.rd.cartan[i][j]));
                entries.push((format!("k{} e{} k{}^-1 scaling", i + 1, j + 1, i + 1), lhs == rhs));
                let lhs = ki.mul(&self.f[j]).mul(&kinv);
                let rhs = self
                    .f[j]
                    .scale(&QScalar::s_power(-self.rd.d[i] * self.rd.cartan[i][j]));
                entries.push((format!("k{} f{} k{}^-1 scaling", i + 1, j + 1, i + 1), lhs == rhs));
            }
        }
        // [e_i, f_j] = delta_ij (k_i^2 - k_i^-2)/(q_i - q_i^-1)
        for i in 0..n {
            for j in 0..n {
                let lhs = self.e[i].commutator(&self.f[j]);
                let rhs = if i == j {
                    let di = self.rd.d[i];
                    let denom = QScalar::s_power(2 * di).sub(&QScalar::s_power(-2 * di));
                    let k2 = self.k(i).mul(&self.k(i));
                    let km2 = self.k_inv(i).mul(&self.k_inv(i));
                    k2.sub(&km2).map(|x| {
                        x.div(&denom).expect("q_i - q_i^-1 is invertible")
                    })
                } else {
                    QMatrix::zero(self.dim, self.dim)
                };
                entries.push((format!("[e{}, f{}]", i + 1, j + 1), lhs == rhs));
            }
        }
        // Quantum Serre relations for i != j.
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let m = 1 - self.rd.cartan[i][j];
                let di = self.rd.d[i];
                let mut acc_e = QMatrix::zero(self.dim, self.dim);
                let mut acc_f = QMatrix::zero(self.dim, self.dim);
                for k in 0..=m {
                    let binom = q_binom(m, k, di).expect("valid binomial");
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    let coeff = binom.mul_i64(sign);
                    let term_e = self.e[i]
                        .pow((k) as u32)
                        .mul(&self.e[j])
                        .mul(&self.e[i].pow((m - k) as u32));
                    let term_f = self.f[i]
                        .pow((k) as u32)
                        .mul(&self.f[j])
                        .mul(&self.f[i].pow((m - k) as u32));
                    acc_e = acc_e.add(&term_e.scale(&coeff));
                    acc_f = acc_f.add(&term_f.scale(&coeff));
                }
                entries.push((format!("serre e({},{})", i + 1, j + 1), acc_e.is_zero()));
                entries.push((format!("serre f({},{})", i + 1, j + 1), acc_f.is_zero()));
            }
        }
        // Weight compatibility: e_i maps weight mu into mu + alpha_i.
        for i in 0..n {
            let alpha = self.rd.simple_root(i);
            let mut ok = true;
            for (r, c, v) in self.e[i].entries() {
                if !v.is_zero() && self.weights[r] != self.weights[c].add(&alpha) {
                    ok = false;
                }
            }
            for (r, c, v) in self.f[i].entries() {
                if !v.is_zero() && self.weights[r] != self.weights[c].sub(&alpha) {
                    ok = false;
                }
            }
            entries.push((format!("weight grading of e{}/f{}", i + 1, i + 1), ok));
        }
        RelationReport { entries }
    }

    /// Star property: `e_i^dagger = f_i` entrywise.
    pub fn verify_star(&self) -> bool {
        (0..self.rd.rank).all(|i| self.e[i].dagger() == self.f[i])
    }

    /// Tensor product along the coproduct
    /// `e -> e (x) k + k^-1 (x) e`, `f -> f (x) k + k^-1 (x) f`, `k -> k (x) k`.
    pub fn tensor(&self, rhs: &Rep) -> Result<Rep, RepError> {
        if self.rd != rhs.rd {
            return Err(RepError::RootMismatch);
        }
        let n = self.rd.rank;
        let mut weights = Vec::with_capacity(self.dim * rhs.dim);
        for wa in &self.weights {
            for wb in &rhs.weights {
                weights.push(wa.add(wb));
            }
        }
        let mut e = Vec::with_capacity(n);
        let mut f = Vec::with_capacity(n);
        for i in 0..n {
            let ei = self.e[i]
                .kron(&rhs.k(i))
                .add(&self.k_inv(i).kron(&rhs.e[i]));
            let fi = self.f[i]
                .kron(&rhs.k(i))
                .add(&self.k_inv(i).kron(&rhs.f[i]));
            e.push(ei);
            f.push(fi);
        }
        Ok(Rep::new(self.rd.clone(), weights, e, f, None))
    }

    /// Dual module: acts by `rho*(x) = rho(S(x))^T` on the dual basis;
    /// weights negate. The result is a representation but not a
    /// star-representation in general.
    pub fn dual(&self) -> Rep {
        let n = self.rd.rank;
        let weights: Vec<Weight> = self.weights.iter().map(Weight::neg).collect();
        let mut e = Vec::with_capacity(n);
        let mut f = Vec::with_capacity(n);
        for i in 0..n {
            // S(e_i) = -q_i e_i, S(f_i) = -q_i^-1 f_i
            let qi = QScalar::s_power(2 * self.rd.d[i]);
            let qi_inv = QScalar::s_power(-2 * self.rd.d[i]);
            e.push(self.e[i].transpose().scale(&qi.neg()));
            f.push(self.f[i].transpose().scale(&qi_inv.neg()));
        }
        let hw = self
            .highest_weight
            .as_ref()
            .map(|w| dominant_dual_weight(&self.rd, w));
        Rep::new(self.rd.clone(), weights, e, f, hw)
    }

    /// Evaluate all generator matrices at s = 1; the classical `h_i` action
    /// comes from the weights.
    pub fn classical_matrices(&self) -> Result<Vec<(String, QMatrix)>, RepError> {
        let mut out = Vec::new();
        for i in 0..self.rd.rank {
            let ec = self.e[i].map_checked(|x| x.classical_limit())?;
            let fc = self.f[i].map_checked(|x| x.classical_limit())?;
            out.push((format!("e{}", i + 1), ec));
            out.push((format!("f{}", i + 1), fc));
            let mut h = QMatrix::zero(self.dim, self.dim);
            for (b, w) in self.weights.iter().enumerate() {
                h[(b, b)] = QScalar::from_i64(w.coord(i));
            }
            out.push((format!("h{}", i + 1), h));
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let grid = |m: &QMatrix| -> Value {
            Value::Array(
                (0..m.rows())
                    .map(|i| {
                        Value::Array((0..m.cols()).map(|j| m[(i, j)].to_json()).collect())
                    })
                    .collect(),
            )
        };
        json!({
            "group": self.rd.kind.to_string(),
            "dimension": self.dim,
            "weights": self.weights.iter().map(|w| json!(w.0)).collect::<Vec<_>>(),
            "highest_weight": self.highest_weight.as_ref().map(|w| json!(w.0)),
            "e": self.e.iter().map(grid).collect::<Vec<_>>(),
            "f": self.f.iter().map(grid).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Rep, RepError> {
        let group = match v.get("group").and_then(Value::as_str) {
            Some("su2") => GroupKind::Su2,
            Some("su3") => GroupKind::Su3,
            other => {
                return Err(RepError::Payload(format!("bad group {:?}", other)));
            }
        };
        let rd = Arc::new(RootDatum::new(group));
        let weights: Vec<Weight> = v
            .get("weights")
            .and_then(Value::as_array)
            .ok_or_else(|| RepError::Payload("missing weights".into()))?
            .iter()
            .map(|w| {
                let coords: Option<Vec<i64>> = w
                    .as_array()
                    .map(|a| a.iter().map(Value::as_i64).collect::<Option<Vec<_>>>())
                    .flatten();
                coords.map(Weight).ok_or(RepError::Payload("bad weight".into()))
            })
            .collect::<Result<_, _>>()?;
        let parse_mats = |key: &str| -> Result<Vec<QMatrix>, RepError> {
            let arr = v
                .get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| RepError::Payload(format!("missing {}", key)))?;
            arr.iter()
                .map(|m| {
                    let rows = m
                        .as_array()
                        .ok_or_else(|| RepError::Payload("bad matrix".into()))?;
                    let dim = weights.len();
                    if rows.len() != dim {
                        return Err(RepError::Payload("matrix size mismatch".into()));
                    }
                    let mut out = QMatrix::zero(dim, dim);
                    for (i, row) in rows.iter().enumerate() {
                        let row = row
                            .as_array()
                            .ok_or_else(|| RepError::Payload("bad matrix row".into()))?;
                        for (j, cell) in row.iter().enumerate() {
                            out[(i, j)] = QScalar::from_json(cell)?;
                        }
                    }
                    Ok(out)
                })
                .collect()
        };
        let e = parse_mats("e")?;
        let f = parse_mats("f")?;
        let hw = v
            .get("highest_weight")
            .and_then(Value::as_array)
            .map(|a| {
                a.iter()
                    .map(Value::as_i64)
                    .collect::<Option<Vec<_>>>()
                    .map(Weight)
            })
            .flatten();
        Ok(Rep::new(rd, weights, e, f, hw))
    }
}

/// The dominant weight of the dual module: for A1 self-dual, for A2
/// `(a,b) -> (b,a)`.
pub fn dominant_dual_weight(rd: &RootDatum, w: &Weight) -> Weight {
    match rd.kind {
        GroupKind::Su2 => w.clone(),
        GroupKind::Su3 => Weight(vec![w.coord(1), w.coord(0)]),
    }
}

impl QMatrix {
    pub fn pow(&self, n: u32) -> QMatrix {
        let mut acc = QMatrix::identity(self.rows());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn map_checked<E>(
        &self,
        mut f: impl FnMut(&QScalar) -> Result<QScalar, E>,
    ) -> Result<QMatrix, E> {
        let mut out = QMatrix::zero(self.rows(), self.cols());
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                out[(i, j)] = f(&self[(i, j)])?;
            }
        }
        Ok(out)
    }
}

/// The classical sl2-triple check at s = 1: `[e_i, f_i]` must be the
/// integer diagonal of the weights.
pub fn classical_sl_check(rep: &Rep) -> Result<bool, RepError> {
    let mats = rep.classical_matrices()?;
    for i in 0..rep.rd.rank {
        let e = &mats[3 * i].1;
        let f = &mats[3 * i + 1].1;
        let h = &mats[3 * i + 2].1;
        if &e.commutator(f) != h {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Standard q-deformed irreducible of A1 with highest weight coordinate `n`
/// (twice the half-integer label), on an orthonormal weight basis.
pub fn su2_irrep(rd: Arc<RootDatum>, n: i64) -> Rep {
    assert!(n >= 0);
    let dim = (n + 1) as usize;
    let weights: Vec<Weight> = (0..dim).map(|j| Weight(vec![n - 2 * j as i64])).collect();
    let mut e = QMatrix::zero(dim, dim);
    let mut f = QMatrix::zero(dim, dim);
    for j in 1..dim {
        // e v_j = sqrt([j][n+1-j]) v_{j-1}
        let c = q_int(j as i64, 1)
            .mul(&q_int(n + 1 - j as i64, 1))
            .sqrt()
            .expect("q-integer products are single-term");
        e[(j - 1, j)] = c.clone();
        f[(j, j - 1)] = c;
    }
    Rep::new(rd, weights, vec![e], vec![f], Some(Weight(vec![n])))
}
