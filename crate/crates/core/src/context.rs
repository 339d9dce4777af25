//! Per-computation context: root datum, dominant-weight cutoff, cyclotomic
//! order, the canonical-module registry and the memoized Clebsch-Gordan
//! decompositions (optionally persisted on disk).

use crate::repcat::builtin;
use crate::repcat::decompose::{raw_blocks, solve_intertwiner, CGEmbedding};
use crate::repcat::rep::{su2_irrep, Rep};
use crate::repcat::{GroupKind, RepError, RootDatum, Weight};
use crate::matrix::QMatrix;
use serde_json::{json, Value};
use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, Mutex};

pub const DEFAULT_CUTOFF: i64 = 4;

pub struct Context {
    pub rd: Arc<RootDatum>,
    /// Maximal dominant-weight coordinate admitted in decompositions.
    pub cutoff: i64,
    /// Order of the ambient root of unity (lcm of finite group orders).
    pub zeta_order: u32,
    canonical: Mutex<HashMap<Weight, Arc<Rep>>>,
    cg: Mutex<HashMap<(Weight, Weight), Arc<Vec<CGEmbedding>>>>,
    cache_dir: Option<PathBuf>,
}

impl Context {
    pub fn new(group: GroupKind, cutoff: i64, zeta_order: u32) -> Self {
        let cache_dir = std::env::var_os("QORB_CACHE_DIR").map(PathBuf::from);
        Context {
            rd: Arc::new(RootDatum::new(group)),
            cutoff,
            zeta_order: zeta_order.max(1),
            canonical: Mutex::new(HashMap::new()),
            cg: Mutex::new(HashMap::new()),
            cache_dir,
        }
    }

    pub fn standard(group: GroupKind) -> Self {
        Context::new(group, DEFAULT_CUTOFF, 1)
    }

    pub fn group(&self) -> GroupKind {
        self.rd.kind
    }

    pub fn check_cutoff(&self, w: &Weight) -> Result<(), RepError> {
        if w.max_coord() > self.cutoff {
            Err(RepError::CutoffExceeded(format!("{:?}", w), self.cutoff))
        } else {
            Ok(())
        }
    }

    /// The canonical module of a dominant highest weight. Small modules are
    /// the fixed builtins; larger ones are generated once, deterministically,
    /// by splitting `canonical(lambda - omega) (x) canonical(omega)` for the
    /// appropriate fundamental weight `omega`.
    pub fn canonical(&self, hw: &Weight) -> Result<Arc<Rep>, RepError> {
        if !hw.is_dominant() {
            return Err(RepError::Payload(format!(
                "{:?} is not dominant",
                hw
            )));
        }
        self.check_cutoff(hw)?;
        if let Some(r) = self.canonical.lock().unwrap().get(hw) {
            return Ok(r.clone());
        }
        let rep: Rep = match self.group() {
            GroupKind::Su2 => su2_irrep(self.rd.clone(), hw.coord(0)),
            GroupKind::Su3 => {
                let (a, b) = (hw.coord(0), hw.coord(1));
                match (a, b) {
                    (0, 0) => builtin::trivial(self.rd.clone()),
                    (1, 0) => builtin::su3_lambda1(self.rd.clone()),
                    (0, 1) => builtin::su3_lambda1v(self.rd.clone()),
                    (2, 0) => builtin::su3_lambda2(self.rd.clone()),
                    _ => {
                        let (base, step) = if a > 0 {
                            (Weight(vec![a - 1, b]), Weight(vec![1, 0]))
                        } else {
                            (Weight(vec![0, b - 1]), Weight(vec![0, 1]))
                        };
                        let left = self.canonical(&base)?;
                        let right = self.canonical(&step)?;
                        let tensor = left.tensor(&right)?;
                        let blocks = raw_blocks(&tensor)?;
                        let block = blocks
                            .into_iter()
                            .find(|blk| &blk.hw == hw)
                            .ok_or_else(|| {
                                RepError::Intertwiner(format!(
                                    "recipe tensor misses {:?}",
                                    hw
                                ))
                            })?;
                        block.rep
                    }
                }
            }
        };
        let rep = Arc::new(rep);
        self.canonical
            .lock()
            .unwrap()
            .insert(hw.clone(), rep.clone());
        Ok(rep)
    }

    /// Decompose `canonical(l1) (x) canonical(l2)` into isometric
    /// intertwining embeddings of canonical modules. Memoized per context
    /// and optionally on disk under `QORB_CACHE_DIR`.
    pub fn decompose_pair(
        &self,
        l1: &Weight,
        l2: &Weight,
    ) -> Result<Arc<Vec<CGEmbedding>>, RepError> {
        let key = (l1.clone(), l2.clone());
        if let Some(v) = self.cg.lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        if let Some(loaded) = self.try_load_cached(l1, l2)? {
            let arc = Arc::new(loaded);
            self.cg.lock().unwrap().insert(key, arc.clone());
            return Ok(arc);
        }
        let left = self.canonical(l1)?;
        let right = self.canonical(l2)?;
        let tensor = left.tensor(&right)?;
        let blocks = raw_blocks(&tensor)?;
        let mut out = Vec::with_capacity(blocks.len());
        for blk in blocks {
            self.check_cutoff(&blk.hw)?;
            let canonical = self.canonical(&blk.hw)?;
            let phi = solve_intertwiner(&canonical, &blk.rep)?;
            let b = QMatrix::from_fn(tensor.dim, blk.basis.len(), |r, c| {
                blk.basis[c][r].clone()
            });
            let matrix = b.mul(&phi);
            out.push(CGEmbedding {
                source: blk.hw,
                factors: (l1.clone(), l2.clone()),
                matrix,
            });
        }
        self.store_cached(l1, l2, &out);
        let arc = Arc::new(out);
        self.cg.lock().unwrap().insert(key, arc.clone());
        Ok(arc)
    }

    /// A single Clebsch-Gordan coefficient in the paper's index layout:
    /// the entry of the embedding of `kappa` into `l1 (x) l2` at tensor row
    /// `(m, m')` and source column `k`. Indices are 0-based basis labels of
    /// the canonical modules.
    pub fn clebsch_gordan(
        &self,
        l1: &Weight,
        l2: &Weight,
        kappa: &Weight,
        m: usize,
        mp: usize,
        k: usize,
    ) -> Result<crate::scalars::QScalar, RepError> {
        let blocks = self.decompose_pair(l1, l2)?;
        let dim2 = self.canonical(l2)?.dim;
        let block = blocks
            .iter()
            .find(|b| &b.source == kappa)
            .ok_or_else(|| RepError::NotASummand(format!("{:?}", kappa)))?;
        Ok(block.matrix[(m * dim2 + mp, k)].clone())
    }

    fn cache_path(&self, l1: &Weight, l2: &Weight) -> Option<PathBuf> {
        let dir = self.cache_dir.as_ref()?;
        let tag = |w: &Weight| {
            w.0.iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join("_")
        };
        Some(dir.join(format!(
            "cg_{}_{}__{}.json",
            self.group(),
            tag(l1),
            tag(l2)
        )))
    }

    fn try_load_cached(
        &self,
        l1: &Weight,
        l2: &Weight,
    ) -> Result<Option<Vec<CGEmbedding>>, RepError> {
        let Some(path) = self.cache_path(l1, l2) else {
            return Ok(None);
        };
        let Ok(text) = std::fs::read_to_string(&path) else {
            return Ok(None);
        };
        let Ok(v) = serde_json::from_str::<Value>(&text) else {
            return Ok(None);
        };
        let Some(blocks) = v.get("blocks").and_then(Value::as_array) else {
            return Ok(None);
        };
        let mut out = Vec::new();
        for b in blocks {
            let source = b
                .get("source")
                .and_then(Value::as_array)
                .and_then(|a| a.iter().map(Value::as_i64).collect::<Option<Vec<_>>>())
                .map(Weight)
                .ok_or_else(|| RepError::Payload("bad cached block".into()))?;
            let rows = b
                .get("matrix")
                .and_then(Value::as_array)
                .ok_or_else(|| RepError::Payload("bad cached matrix".into()))?;
            let nrows = rows.len();
            let ncols = rows
                .first()
                .and_then(Value::as_array)
                .map(|r| r.len())
                .unwrap_or(0);
            let mut m = QMatrix::zero(nrows, ncols);
            for (i, row) in rows.iter().enumerate() {
                let row = row
                    .as_array()
                    .ok_or_else(|| RepError::Payload("bad cached row".into()))?;
                for (j, cell) in row.iter().enumerate() {
                    m[(i, j)] = crate::scalars::QScalar::from_json(cell)?;
                }
            }
            out.push(CGEmbedding {
                source,
                factors: (l1.clone(), l2.clone()),
                matrix: m,
            });
        }
        // Sanity: cached embeddings must still be isometries.
        if out.iter().all(|e| e.is_isometry()) {
            Ok(Some(out))
        } else {
            Ok(None)
        }
    }

    fn store_cached(&self, l1: &Weight, l2: &Weight, blocks: &[CGEmbedding]) {
        let Some(path) = self.cache_path(l1, l2) else {
            return;
        };
        if let Some(dir) = path.parent() {
            let _ = std::fs::create_dir_all(dir);
        }
        let payload = json!({
            "group": self.group().to_string(),
            "blocks": blocks.iter().map(|b| {
                json!({
                    "source": b.source.0,
                    "matrix": (0..b.matrix.rows()).map(|i| {
                        (0..b.matrix.cols())
                            .map(|j| b.matrix[(i, j)].to_json())
                            .collect::<Vec<_>>()
                    }).collect::<Vec<_>>(),
                })
            }).collect::<Vec<_>>(),
        });
        let _ = std::fs::write(path, serde_json::to_string(&payload).unwrap());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn su3_tensor_square_decomposes() {
        let ctx = Context::standard(GroupKind::Su3);
        let l1 = Weight(vec![1, 0]);
        let blocks = ctx.decompose_pair(&l1, &l1).unwrap();
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0].source, Weight(vec![2, 0]));
        assert_eq!(blocks[1].source, Weight(vec![0, 1]));
        let tensor = ctx
            .canonical(&l1)
            .unwrap()
            .tensor(&ctx.canonical(&l1).unwrap())
            .unwrap();
        let dims: usize = blocks.iter().map(|b| b.source_dim()).sum();
        assert_eq!(dims, tensor.dim);
        for b in blocks.iter() {
            assert!(b.is_isometry());
            let src = ctx.canonical(&b.source).unwrap();
            assert!(b.intertwines(&tensor, &src));
        }
    }

    #[test]
    fn adjoint_module_is_generated() {
        let ctx = Context::standard(GroupKind::Su3);
        let adj = ctx.canonical(&Weight(vec![1, 1])).unwrap();
        assert_eq!(adj.dim, 8);
        assert!(adj.verify_defining_relations().all_pass());
        assert!(adj.verify_star());
    }

    #[test]
    fn cutoff_is_loud() {
        let ctx = Context::new(GroupKind::Su2, 2, 1);
        let too_big = Weight(vec![3]);
        assert!(matches!(
            ctx.canonical(&too_big),
            Err(RepError::CutoffExceeded(_, 2))
        ));
        // (2) (x) (2) contains (4) which exceeds the cutoff
        let two = Weight(vec![2]);
        assert!(ctx.decompose_pair(&two, &two).is_err());
    }

    #[test]
    fn su2_singlet_coefficients() {
        // 1/2 (x) 1/2: the singlet embedding is
        // (v- (x) v+  -  q v+ (x) v-)/sqrt(1 + q^2) up to the sign rule.
        let ctx = Context::standard(GroupKind::Su2);
        let half = Weight(vec![1]);
        let blocks = ctx.decompose_pair(&half, &half).unwrap();
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0].source, Weight(vec![2]));
        assert_eq!(blocks[1].source, Weight(vec![0]));
        let singlet = &blocks[1].matrix;
        // rows: (++, +-, -+, --); basis index 0 = weight +1
        assert!(singlet[(0, 0)].is_zero());
        assert!(singlet[(3, 0)].is_zero());
        let ratio = singlet[(1, 0)].div(&singlet[(2, 0)]).unwrap();
        // first nonzero coordinate (row +-) is positive by the sign rule;
        // the ratio of the two middle entries is -q.
        assert_eq!(ratio, crate::scalars::QScalar::q_power(1).neg());
    }
}
