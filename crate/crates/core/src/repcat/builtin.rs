//! The fixed generator matrices of the small irreducibles, plus the
//! named-representation lookup.

use super::rep::{su2_irrep, Rep};
use super::{GroupKind, RepError, RootDatum, Weight};
use crate::matrix::QMatrix;
use crate::scalars::{q_int, QScalar};
use std::sync::Arc;

fn sqrt2q() -> QScalar {
    q_int(2, 1).sqrt().expect("[2] is squarefree")
}

pub fn trivial(rd: Arc<RootDatum>) -> Rep {
    let rank = rd.rank;
    Rep::new(
        rd,
        vec![Weight::zero(rank)],
        vec![QMatrix::zero(1, 1); rank],
        vec![QMatrix::zero(1, 1); rank],
        Some(Weight::zero(rank)),
    )
}

/// The 3-dimensional module of highest weight (1,0): basis weights
/// (1,0), (-1,1), (0,-1).
pub fn su3_lambda1(rd: Arc<RootDatum>) -> Rep {
    let one = QScalar::one;
    let e1 = QMatrix::unit(3, 1, 2, one());
    let e2 = QMatrix::unit(3, 2, 3, one());
    let f1 = e1.dagger();
    let f2 = e2.dagger();
    Rep::new(
        rd,
        vec![
            Weight(vec![1, 0]),
            Weight(vec![-1, 1]),
            Weight(vec![0, -1]),
        ],
        vec![e1, e2],
        vec![f1, f2],
        Some(Weight(vec![1, 0])),
    )
}

/// The 3-dimensional module of highest weight (0,1): basis weights
/// (-1,0), (1,-1), (0,1); the third basis vector is the highest one.
pub fn su3_lambda1v(rd: Arc<RootDatum>) -> Rep {
    let one = QScalar::one;
    let e1 = QMatrix::unit(3, 2, 1, one());
    let e2 = QMatrix::unit(3, 3, 2, one());
    let f1 = e1.dagger();
    let f2 = e2.dagger();
    Rep::new(
        rd,
        vec![
            Weight(vec![-1, 0]),
            Weight(vec![1, -1]),
            Weight(vec![0, 1]),
        ],
        vec![e1, e2],
        vec![f1, f2],
        Some(Weight(vec![0, 1])),
    )
}

/// The 6-dimensional module of highest weight (2,0): basis weights
/// (2,0), (0,1), (-2,2), (1,-1), (-1,0), (0,-2); the first basis vector is
/// the highest one.
pub fn su3_lambda2(rd: Arc<RootDatum>) -> Rep {
    let r2 = sqrt2q();
    let mut e1 = QMatrix::zero(6, 6);
    e1[(0, 1)] = r2.clone();
    e1[(1, 2)] = r2.clone();
    e1[(3, 4)] = QScalar::one();
    let mut e2 = QMatrix::zero(6, 6);
    e2[(1, 3)] = QScalar::one();
    e2[(2, 4)] = r2.clone();
    e2[(4, 5)] = r2;
    let f1 = e1.dagger();
    let f2 = e2.dagger();
    Rep::new(
        rd,
        vec![
            Weight(vec![2, 0]),
            Weight(vec![0, 1]),
            Weight(vec![-2, 2]),
            Weight(vec![1, -1]),
            Weight(vec![-1, 0]),
            Weight(vec![0, -2]),
        ],
        vec![e1, e2],
        vec![f1, f2],
        Some(Weight(vec![2, 0])),
    )
}

/// Look up a named builtin: `su2:<half-integer>` (also `su2:trivial`),
/// `su3:λ1` / `su3:l1`, `su3:λ1v` / `su3:l1v`, `su3:λ2` / `su3:l2`,
/// `su3:trivial`, or plain `trivial` (the 1-dimensional su2 module).
pub fn builtin_rep(name: &str) -> Result<Rep, RepError> {
    let su2 = || Arc::new(RootDatum::new(GroupKind::Su2));
    let su3 = || Arc::new(RootDatum::new(GroupKind::Su3));
    match name {
        "trivial" | "su2:trivial" | "su2:0" => Ok(trivial(su2())),
        "su3:trivial" | "su3:λ0" | "su3:l0" => Ok(trivial(su3())),
        "su3:λ1" | "su3:l1" | "su3:lambda1" => Ok(su3_lambda1(su3())),
        "su3:λ1v" | "su3:l1v" | "su3:lambda1v" => Ok(su3_lambda1v(su3())),
        "su3:λ2" | "su3:l2" | "su3:lambda2" => Ok(su3_lambda2(su3())),
        _ => {
            if let Some(rest) = name.strip_prefix("su2:") {
                let coord = parse_half_integer(rest)
                    .ok_or_else(|| RepError::UnknownName(name.to_string()))?;
                if coord < 0 {
                    return Err(RepError::UnknownName(name.to_string()));
                }
                Ok(su2_irrep(su2(), coord))
            } else {
                Err(RepError::UnknownName(name.to_string()))
            }
        }
    }
}

/// Parse a half-integer label into its doubled integer coordinate:
/// "1/2" -> 1, "1" -> 2, "3/2" -> 3.
pub fn parse_half_integer(s: &str) -> Option<i64> {
    if let Some((num, den)) = s.split_once('/') {
        let n: i64 = num.trim().parse().ok()?;
        let d: i64 = den.trim().parse().ok()?;
        if d == 2 {
            Some(n)
        } else if d == 1 {
            Some(2 * n)
        } else {
            None
        }
    } else {
        let n: i64 = s.trim().parse().ok()?;
        Some(2 * n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_pass_defining_relations() {
        for name in ["trivial", "su3:trivial", "su3:λ1", "su3:λ1v", "su3:λ2", "su2:1/2", "su2:1", "su2:3/2"] {
            let r = builtin_rep(name).unwrap();
            let report = r.verify_defining_relations();
            assert!(
                report.all_pass(),
                "{} failed: {:?}",
                name,
                report.failures()
            );
            assert!(r.verify_star(), "{} star property", name);
        }
    }

    #[test]
    fn lambda1_k_matrix_is_papers_diagonal() {
        // k_1 = diag(q^(1/2), q^(-1/2), 1)
        let r = builtin_rep("su3:λ1").unwrap();
        let k1 = r.k(0);
        assert_eq!(k1[(0, 0)], QScalar::s_power(1));
        assert_eq!(k1[(1, 1)], QScalar::s_power(-1));
        assert!(k1[(2, 2)].is_one());
        let k2 = r.k(1);
        assert!(k2[(0, 0)].is_one());
        assert_eq!(k2[(1, 1)], QScalar::s_power(1));
        assert_eq!(k2[(2, 2)], QScalar::s_power(-1));
    }

    #[test]
    fn lambda2_highest_weight_is_first() {
        let r = builtin_rep("su3:λ2").unwrap();
        assert_eq!(r.highest_weight_index(), Some(0));
        // e_1 = sqrt([2]) e12 + sqrt([2]) e23 + e45
        let e1 = &r.e[0];
        assert_eq!(e1[(0, 1)], q_int(2, 1).sqrt().unwrap());
        assert!(e1[(3, 4)].is_one());
    }

    #[test]
    fn corrupted_rep_fails_relations() {
        let mut r = builtin_rep("su3:λ1").unwrap();
        r.e[0][(0, 1)] = QScalar::from_i64(2);
        let report = r.verify_defining_relations();
        assert!(!report.all_pass());
        assert!(report
            .failures()
            .iter()
            .any(|name| name.contains("[e1, f1]")));
    }

    #[test]
    fn mutation_test_trivial_passes() {
        let r = builtin_rep("trivial").unwrap();
        assert!(r.e[0].is_zero());
        assert!(r.verify_defining_relations().all_pass());
    }
}
