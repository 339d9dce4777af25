//! Exact computer algebra for quantized coordinate rings of SU(2) and SU(3):
//! representation categories with Clebsch-Gordan data, the matrix-coefficient
//! algebra with its Hopf structure, torus orbifold actions and their invariant
//! subalgebras, crossed products, spin lifts with numeric Dirac blocks, and
//! equivariant Chern characters.

pub mod context;
pub mod coordalg;
pub mod golden;
pub mod matrix;
pub mod orbifold;
pub mod repcat;
pub mod scalars;

pub use scalars::{q_binom, q_int, LPoly, QScalar, RatFunc, ScalarError};
