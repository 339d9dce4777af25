//! Root data, weights and finite-dimensional admissible representations of
//! the q-deformed enveloping algebras of types A1 and A2, with tensor
//! products, duals, highest-weight extraction and Clebsch-Gordan data.

pub mod builtin;
pub mod decompose;
pub mod rep;

pub use decompose::{solve_intertwiner, CGEmbedding};
pub use rep::{Generator, Rep, RelationReport};

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupKind {
    Su2,
    Su3,
}

impl GroupKind {
    pub fn rank(self) -> usize {
        match self {
            GroupKind::Su2 => 1,
            GroupKind::Su3 => 2,
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Su2 => write!(f, "su2"),
            GroupKind::Su3 => write!(f, "su3"),
        }
    }
}

/// Cartan matrix, symmetrizers and the induced bilinear form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    pub kind: GroupKind,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub d: Vec<i64>,
}

impl RootDatum {
    pub fn new(kind: GroupKind) -> Self {
        match kind {
            GroupKind::Su2 => RootDatum {
                kind,
                rank: 1,
                cartan: vec![vec![2]],
                d: vec![1],
            },
            GroupKind::Su3 => RootDatum {
                kind,
                rank: 2,
                cartan: vec![vec![2, -1], vec![-1, 2]],
                d: vec![1, 1],
            },
        }
    }

    /// `(alpha_i, alpha_j) = d_i a_ij`.
    pub fn bilinear(&self, i: usize, j: usize) -> i64 {
        self.d[i] * self.cartan[i][j]
    }

    /// Coordinates of the simple root `alpha_i` against the Cartan
    /// generators: `alpha_i(h_j) = a_ji`.
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight((0..self.rank).map(|j| self.cartan[j][i]).collect())
    }

    /// The fundamental weight `omega_i` (`omega_i(h_j) = delta_ij`).
    pub fn fundamental_weight(&self, i: usize) -> Weight {
        Weight((0..self.rank).map(|j| i64::from(j == i)).collect())
    }
}

/// Integral weight in Cartan coordinates `(lambda(h_1), ..., lambda(h_n))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, rhs: &Weight) -> Weight {
        Weight(
            self.0
                .iter()
                .zip(&rhs.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &Weight) -> Weight {
        Weight(
            self.0
                .iter()
                .zip(&rhs.0)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn coord(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn max_coord(&self) -> i64 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Deterministic basis ordering key: height-major (coordinate sum
    /// descending, then lexicographically descending), so the highest
    /// weight of an irreducible block always sorts first.
    pub fn order_key(&self) -> (i64, Vec<i64>) {
        let sum: i64 = self.0.iter().sum();
        (-sum, self.0.iter().map(|&c| -c).collect())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RepError {
    #[error("unknown representation name `{0}`")]
    UnknownName(String),
    #[error("root datum mismatch")]
    RootMismatch,
    #[error("`{0}` is not a summand of the decomposition")]
    NotASummand(String),
    #[error("weight {0} exceeds the dominant-weight cutoff {1}")]
    CutoffExceeded(String, i64),
    #[error("scalar failure: {0}")]
    Scalar(#[from] crate::scalars::ScalarError),
    #[error("intertwiner construction failed: {0}")]
    Intertwiner(String),
    #[error("malformed representation payload: {0}")]
    Payload(String),
}
