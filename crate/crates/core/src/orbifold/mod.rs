//! Torus and finite cyclic actions on the coordinate algebra that factor
//! through simultaneous left/right group-like symmetries: specification,
//! validity classification, exact rational charges, action application and
//! invariant-subalgebra extraction.

pub mod presets;

use crate::coordalg::gns::dominant_weights_up_to;
use crate::coordalg::{AlgError, CoordAlgebra, CoordElement, MatrixCoeff};
use crate::repcat::{GroupKind, RootDatum, Weight};
use crate::scalars::QScalar;
use num::rational::Ratio;
use num::traits::Zero;
use serde::{Deserialize, Serialize};

pub type Rational = Ratio<i64>;

/// One circle factor of the acting group: the full circle or the cyclic
/// subgroup of a given order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Factor {
    Continuous,
    Cyclic(u32),
}

impl Factor {
    pub fn order(&self) -> Option<u32> {
        match self {
            Factor::Continuous => None,
            Factor::Cyclic(p) => Some(*p),
        }
    }
}

/// The acting group: a product of circle factors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub factors: Vec<Factor>,
}

impl GroupSpec {
    pub fn circle() -> Self {
        GroupSpec {
            factors: vec![Factor::Continuous],
        }
    }

    pub fn cyclic(p: u32) -> Self {
        GroupSpec {
            factors: vec![Factor::Cyclic(p)],
        }
    }

    pub fn torus2() -> Self {
        GroupSpec {
            factors: vec![Factor::Continuous, Factor::Continuous],
        }
    }

    /// Least common multiple of the finite factor orders (1 when none).
    pub fn zeta_order(&self) -> u32 {
        self.factors
            .iter()
            .filter_map(Factor::order)
            .fold(1u32, |acc, p| acc / num::integer::gcd(acc, p) * p)
    }

    /// All elements of a finite group, as residue tuples. Empty when any
    /// factor is continuous.
    pub fn elements(&self) -> Option<Vec<Vec<u32>>> {
        let mut out: Vec<Vec<u32>> = vec![Vec::new()];
        for f in &self.factors {
            let p = f.order()?;
            let mut next = Vec::with_capacity(out.len() * p as usize);
            for tail in &out {
                for j in 0..p {
                    let mut t = tail.clone();
                    t.push(j);
                    next.push(t);
                }
            }
            out = next;
        }
        Some(out)
    }
}

/// Exponent vectors of one circle factor: the factor angle `phi` acts
/// through the pair `(exp(i phi y1.h), exp(i phi y2.h))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorVectors {
    pub y1: Vec<Rational>,
    pub y2: Vec<Rational>,
}

/// A torus orbifold action: per circle factor, the pair of rational Cartan
/// vectors, plus the group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionSpec {
    pub group: GroupKind,
    pub factors: Vec<(FactorVectors, Factor)>,
}

/// Rational charges of a basis coefficient, one per circle factor: the
/// factor angle `phi` scales the coefficient by `exp(i c phi)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Charge(pub Vec<Rational>);

impl Charge {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn neg(&self) -> Charge {
        Charge(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, rhs: &Charge) -> Charge {
        Charge(
            self.0
                .iter()
                .zip(&rhs.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

/// Pairing of a weight with a rational Cartan vector.
fn pair_weight(w: &Weight, y: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (i, c) in y.iter().enumerate() {
        acc += c * Rational::from_integer(w.coord(i));
    }
    acc
}

impl ActionSpec {
    pub fn group_spec(&self) -> GroupSpec {
        GroupSpec {
            factors: self.factors.iter().map(|(_, f)| *f).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        match self.group {
            GroupKind::Su2 => 1,
            GroupKind::Su3 => 2,
        }
    }

    /// The charge of a basis coefficient under each circle factor:
    /// `c = mu(y1) + nu(y2)` for the row weight `mu` and column weight `nu`.
    pub fn charge_of_weights(&self, mu: &Weight, nu: &Weight) -> Charge {
        Charge(
            self.factors
                .iter()
                .map(|(v, _)| pair_weight(mu, &v.y1) + pair_weight(nu, &v.y2))
                .collect(),
        )
    }
}

/// Certificate of an invalid action: a weight pair with fractional charge.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ValidityCertificate {
    pub valid: bool,
    /// On failure: the factor index and the (row, column) weights of a
    /// generator coefficient whose charge is not an integer.
    pub violation: Option<(usize, Vec<i64>, Vec<i64>)>,
}

/// An action is well defined exactly when every basis coefficient carries
/// an integer charge under every factor; linearity reduces the check to the
/// weight pairs of the defining module.
pub fn validate_action(
    rd: &RootDatum,
    factors: &[(FactorVectors, Factor)],
) -> ValidityCertificate {
    let spec = ActionSpec {
        group: rd.kind,
        factors: factors.to_vec(),
    };
    let defining = defining_weights(rd.kind);
    for (fi, _) in factors.iter().enumerate() {
        for mu in &defining {
            for nu in &defining {
                let c = spec.charge_of_weights(mu, nu);
                if !c.0[fi].is_integer() {
                    return ValidityCertificate {
                        valid: false,
                        violation: Some((fi, mu.0.clone(), nu.0.clone())),
                    };
                }
            }
        }
    }
    ValidityCertificate {
        valid: true,
        violation: None,
    }
}

/// Weights of the defining module.
pub fn defining_weights(group: GroupKind) -> Vec<Weight> {
    match group {
        GroupKind::Su2 => vec![Weight(vec![1]), Weight(vec![-1])],
        GroupKind::Su3 => vec![
            Weight(vec![1, 0]),
            Weight(vec![-1, 1]),
            Weight(vec![0, -1]),
        ],
    }
}

/// The orbifold action bound to an algebra context.
pub struct OrbifoldAction {
    pub spec: ActionSpec,
}

impl OrbifoldAction {
    pub fn new(spec: ActionSpec, rd: &RootDatum) -> Result<Self, AlgError> {
        let cert = validate_action(rd, &spec.factors);
        if !cert.valid {
            return Err(AlgError::Invalid(format!(
                "action is not well defined; violating weight pair {:?}",
                cert.violation
            )));
        }
        Ok(OrbifoldAction { spec })
    }

    /// Charge of a single basis coefficient.
    pub fn charge_of(&self, alg: &CoordAlgebra, c: &MatrixCoeff) -> Result<Charge, AlgError> {
        let rep = alg.ctx.canonical(&c.lambda)?;
        Ok(self
            .spec
            .charge_of_weights(&rep.weights[c.row], &rep.weights[c.col]))
    }

    /// Apply a group element given per factor as an exact rational multiple
    /// of the full turn (for a cyclic factor of order p, residue j maps to
    /// j/p). The required root-of-unity order must divide the ambient
    /// cyclotomic order of the context.
    pub fn act(
        &self,
        alg: &CoordAlgebra,
        turns: &[Rational],
        x: &CoordElement,
    ) -> Result<CoordElement, AlgError> {
        if turns.len() != self.spec.factors.len() {
            return Err(AlgError::Invalid(
                "one rotation per circle factor is required".into(),
            ));
        }
        let n = alg.ctx.zeta_order;
        let mut out = CoordElement::zero();
        for (c, s) in x.terms() {
            let charge = self.charge_of(alg, c)?;
            // total phase exponent: sum over factors of turn * charge, as a
            // fraction of a full turn
            let mut total = Rational::zero();
            for (t, ch) in turns.iter().zip(&charge.0) {
                total += t * ch;
            }
            // phase = exp(2 pi i total) = zeta_n^(n * total); exact only if
            // n * total is an integer
            let scaled = total * Rational::from_integer(n as i64);
            if !scaled.is_integer() {
                return Err(AlgError::Invalid(format!(
                    "phase {} of a full turn is not representable at cyclotomic order {}",
                    total, n
                )));
            }
            let j = scaled.to_integer().rem_euclid(n as i64) as u32;
            let phase = QScalar::zeta(n, j);
            out.add_term(c.clone(), s.mul(&phase));
        }
        Ok(out)
    }

    /// Apply a finite group element given as residues modulo the factor
    /// orders.
    pub fn act_residues(
        &self,
        alg: &CoordAlgebra,
        residues: &[u32],
        x: &CoordElement,
    ) -> Result<CoordElement, AlgError> {
        let turns: Vec<Rational> = self
            .spec
            .factors
            .iter()
            .zip(residues)
            .map(|((_, f), &j)| match f {
                Factor::Cyclic(p) => Ok(Rational::new(j as i64, *p as i64)),
                Factor::Continuous => Err(AlgError::Invalid(
                    "continuous factors take rational turns, not residues".into(),
                )),
            })
            .collect::<Result<_, _>>()?;
        self.act(alg, &turns, x)
    }

    /// All basis coefficients below the cutoff fixed by the action: zero
    /// charge on continuous factors, zero charge modulo the order on cyclic
    /// ones.
    pub fn invariant_basis(
        &self,
        alg: &CoordAlgebra,
        cutoff: i64,
    ) -> Result<Vec<(MatrixCoeff, Charge)>, AlgError> {
        let mut out = Vec::new();
        for lambda in dominant_weights_up_to(alg.group(), cutoff) {
            let rep = alg.ctx.canonical(&lambda)?;
            for row in 0..rep.dim {
                for col in 0..rep.dim {
                    let c = MatrixCoeff {
                        lambda: lambda.clone(),
                        row,
                        col,
                    };
                    let charge = self.charge_of(alg, &c)?;
                    if self.is_invariant_charge(&charge) {
                        out.push((c, charge));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_invariant_charge(&self, charge: &Charge) -> bool {
        self.spec
            .factors
            .iter()
            .zip(&charge.0)
            .all(|((_, f), c)| match f {
                Factor::Continuous => c.is_zero(),
                Factor::Cyclic(p) => {
                    c.is_integer() && c.to_integer().rem_euclid(*p as i64) == 0
                }
            })
    }

    /// True when the whole element is invariant.
    pub fn is_invariant(&self, alg: &CoordAlgebra, x: &CoordElement) -> Result<bool, AlgError> {
        for (c, _) in x.terms() {
            let charge = self.charge_of(alg, c)?;
            if !self.is_invariant_charge(&charge) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The closed-form classification of single-factor actions on the rank-2
/// algebra: both exponent vectors are integral shifts of the central
/// fractions `(x/3, 2x/3)` and `(2x/3, x/3)` for `x` in `{0, 1, 2}`.
pub fn su3_family_member(x: u32, k: [i64; 4], factor: Factor) -> ActionSpec {
    let third = |n: i64, k: i64| Rational::from_integer(k) + Rational::new(n, 3);
    ActionSpec {
        group: GroupKind::Su3,
        factors: vec![(
            FactorVectors {
                y1: vec![third(x as i64, k[0]), third(2 * x as i64, k[1])],
                y2: vec![third(2 * x as i64, k[2]), third(x as i64, k[3])],
            },
            factor,
        )],
    }
}

/// Enumerate every valid single-factor action with `x` in the given set and
/// integer parts in `[-kbox, kbox]`.
pub fn enumerate_su3_actions(xs: &[u32], kbox: i64, factor: Factor) -> Vec<ActionSpec> {
    let mut out = Vec::new();
    for &x in xs {
        for k1 in -kbox..=kbox {
            for k2 in -kbox..=kbox {
                for k3 in -kbox..=kbox {
                    for k4 in -kbox..=kbox {
                        out.push(su3_family_member(x, [k1, k2, k3, k4], factor));
                    }
                }
            }
        }
    }
    out
}

/// Scan the full rational grid with denominator `denom` over the same box
/// and classify by `validate_action`; used to cross-check the closed form.
pub fn brute_force_valid_su3(
    rd: &RootDatum,
    kbox: i64,
    denom: i64,
    factor: Factor,
) -> Vec<Vec<Rational>> {
    let lo = -kbox * denom;
    let hi = kbox * denom;
    let mut valid = Vec::new();
    let vals: Vec<Rational> = (lo..=hi).map(|n| Rational::new(n, denom)).collect();
    for a in &vals {
        for b in &vals {
            for c in &vals {
                for d in &vals {
                    let fv = FactorVectors {
                        y1: vec![*a, *b],
                        y2: vec![*c, *d],
                    };
                    if validate_action(rd, &[(fv, factor)]).valid {
                        valid.push(vec![*a, *b, *c, *d]);
                    }
                }
            }
        }
    }
    valid
}

#[cfg(test)]
mod tests {
    use super::presets;
    use super::*;
    use crate::context::Context;
    use std::sync::Arc;

    fn su2_alg(n: u32) -> CoordAlgebra {
        CoordAlgebra::new(Arc::new(Context::new(GroupKind::Su2, 4, n)))
    }

    fn su3_alg() -> CoordAlgebra {
        CoordAlgebra::new(Arc::new(Context::standard(GroupKind::Su3)))
    }

    #[test]
    fn su2_action_charges() {
        // weighted projective action: charge(alpha) = -k, charge(beta) = +l
        for (k, l) in [(1i64, 1i64), (1, 3), (2, 5)] {
            let alg = su2_alg(1);
            let action = presets::su2_weighted(k, l, Factor::Continuous);
            let action = OrbifoldAction::new(action, &alg.ctx.rd).unwrap();
            let alpha = MatrixCoeff {
                lambda: Weight(vec![1]),
                row: 0,
                col: 0,
            };
            let beta = MatrixCoeff {
                lambda: Weight(vec![1]),
                row: 0,
                col: 1,
            };
            assert_eq!(
                action.charge_of(&alg, &alpha).unwrap(),
                Charge(vec![Rational::from_integer(-k)])
            );
            assert_eq!(
                action.charge_of(&alg, &beta).unwrap(),
                Charge(vec![Rational::from_integer(l)])
            );
            let unit = MatrixCoeff {
                lambda: Weight(vec![0]),
                row: 0,
                col: 0,
            };
            assert!(action.charge_of(&alg, &unit).unwrap().is_zero());
        }
    }

    #[test]
    fn su3_adjoint_charge_table() {
        let alg = su3_alg();
        let action =
            OrbifoldAction::new(presets::su3_adjoint_torus(), &alg.ctx.rd).unwrap();
        let expect: Vec<((usize, usize), (i64, i64))> = vec![
            ((1, 1), (0, 0)),
            ((2, 2), (0, 0)),
            ((3, 3), (0, 0)),
            ((1, 2), (2, -1)),
            ((1, 3), (1, 1)),
            ((2, 1), (-2, 1)),
            ((2, 3), (-1, 2)),
            ((3, 1), (-1, -1)),
            ((3, 2), (1, -2)),
        ];
        for ((i, j), (phi, theta)) in expect {
            let c = MatrixCoeff {
                lambda: Weight(vec![1, 0]),
                row: i - 1,
                col: j - 1,
            };
            let charge = action.charge_of(&alg, &c).unwrap();
            assert_eq!(
                charge,
                Charge(vec![
                    Rational::from_integer(phi),
                    Rational::from_integer(theta)
                ]),
                "t{}{}",
                i,
                j
            );
        }
    }

    #[test]
    fn teardrop_cyclic_action_is_exact() {
        // (k,l) = (1,3) restricted to order 3: beta has charge 3 = 0 mod 3.
        let alg = su2_alg(3);
        let action = presets::su2_weighted(1, 3, Factor::Cyclic(3));
        let action = OrbifoldAction::new(action, &alg.ctx.rd).unwrap();
        let beta = alg.generator("beta").unwrap();
        let moved = action.act_residues(&alg, &[1], &beta).unwrap();
        assert_eq!(moved, beta);
        let alpha = alg.generator("alpha").unwrap();
        let moved = action.act_residues(&alg, &[1], &alpha).unwrap();
        assert_eq!(moved, alpha.scale(&QScalar::zeta(3, 2))); // charge -1
        // identity element acts trivially
        let id = action.act_residues(&alg, &[0], &alpha).unwrap();
        assert_eq!(id, alpha);
    }

    #[test]
    fn action_is_multiplicative() {
        let alg = su2_alg(3);
        let action = presets::su2_weighted(1, 3, Factor::Cyclic(3));
        let action = OrbifoldAction::new(action, &alg.ctx.rd).unwrap();
        let alpha = alg.generator("alpha").unwrap();
        let beta = alg.generator("beta").unwrap();
        let ab = alg.multiply(&alpha, &beta).unwrap();
        let lhs = action.act_residues(&alg, &[1], &ab).unwrap();
        let ga = action.act_residues(&alg, &[1], &alpha).unwrap();
        let gb = action.act_residues(&alg, &[1], &beta).unwrap();
        let rhs = alg.multiply(&ga, &gb).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn validity_examples() {
        let rd = RootDatum::new(GroupKind::Su3);
        // family member x = 1, k = 0
        let fam = su3_family_member(1, [0; 4], Factor::Continuous);
        assert!(validate_action(&rd, &fam.factors).valid);
        // integer vectors are always valid
        let int = ActionSpec {
            group: GroupKind::Su3,
            factors: vec![(
                FactorVectors {
                    y1: vec![Rational::from_integer(2), Rational::from_integer(-1)],
                    y2: vec![Rational::from_integer(0), Rational::from_integer(5)],
                },
                Factor::Continuous,
            )],
        };
        assert!(validate_action(&rd, &int.factors).valid);
        // y1 = (1/2, 0) is rejected with a certificate
        let bad = ActionSpec {
            group: GroupKind::Su3,
            factors: vec![(
                FactorVectors {
                    y1: vec![Rational::new(1, 2), Rational::from_integer(0)],
                    y2: vec![Rational::from_integer(0), Rational::from_integer(0)],
                },
                Factor::Continuous,
            )],
        };
        let cert = validate_action(&rd, &bad.factors);
        assert!(!cert.valid);
        let (fi, mu, _nu) = cert.violation.unwrap();
        assert_eq!(fi, 0);
        assert_eq!(mu, vec![1, 0]); // the defining highest weight, as in t11
    }

    #[test]
    fn family_matches_brute_force_small_box() {
        // box [-1,1], denominators 3: the valid grid points are exactly the
        // family members.
        let rd = RootDatum::new(GroupKind::Su3);
        let brute = brute_force_valid_su3(&rd, 1, 3, Factor::Continuous);
        let mut family: Vec<Vec<Rational>> = Vec::new();
        for x in 0..3u32 {
            for k1 in -1..=1 {
                for k2 in -1..=1 {
                    for k3 in -1..=1 {
                        for k4 in -1..=1 {
                            let f = su3_family_member(x, [k1, k2, k3, k4], Factor::Continuous);
                            let v = &f.factors[0].0;
                            let flat = vec![v.y1[0], v.y1[1], v.y2[0], v.y2[1]];
                            if flat.iter().all(|r| {
                                *r >= Rational::from_integer(-1) && *r <= Rational::from_integer(1)
                            }) {
                                family.push(flat);
                            }
                        }
                    }
                }
            }
        }
        let mut brute_sorted = brute;
        brute_sorted.sort();
        brute_sorted.dedup();
        family.sort();
        family.dedup();
        assert_eq!(brute_sorted, family);
        assert!(!brute_sorted.is_empty());
    }

    #[test]
    fn invariant_basis_respects_star_and_products() {
        let alg = su2_alg(1);
        let action = presets::su2_weighted(1, 3, Factor::Continuous);
        let action = OrbifoldAction::new(action, &alg.ctx.rd).unwrap();
        let inv = action.invariant_basis(&alg, 3).unwrap();
        assert!(!inv.is_empty());
        // star flips charges: the invariant set is star-closed
        for (c, charge) in &inv {
            let starred = alg.star(&CoordElement::basis(c.clone())).unwrap();
            for (cs, _) in starred.terms() {
                let cc = action.charge_of(&alg, cs).unwrap();
                assert_eq!(cc, charge.neg());
            }
        }
        // products of invariants stay invariant
        let x = CoordElement::basis(inv[1].0.clone());
        let y = CoordElement::basis(inv[2].0.clone());
        let prod = alg.multiply(&x, &y).unwrap();
        assert!(action.is_invariant(&alg, &prod).unwrap());
    }

    #[test]
    fn teardrop_contains_beta_beta_star() {
        let alg = su2_alg(1);
        let action = presets::su2_weighted(1, 3, Factor::Continuous);
        let action = OrbifoldAction::new(action, &alg.ctx.rd).unwrap();
        let beta = alg.generator("beta").unwrap();
        let bs = alg.star(&beta).unwrap();
        let bbs = alg.multiply(&beta, &bs).unwrap();
        assert!(action.is_invariant(&alg, &bbs).unwrap());
        // every coefficient of beta beta* is listed in the invariant basis
        let inv = action.invariant_basis(&alg, 2).unwrap();
        for (c, _) in bbs.terms() {
            assert!(inv.iter().any(|(ic, _)| ic == c));
        }
    }

    #[test]
    fn trivial_action_keeps_everything() {
        let alg = su2_alg(1);
        let spec = ActionSpec {
            group: GroupKind::Su2,
            factors: vec![(
                FactorVectors {
                    y1: vec![Rational::from_integer(0)],
                    y2: vec![Rational::from_integer(0)],
                },
                Factor::Continuous,
            )],
        };
        let action = OrbifoldAction::new(spec, &alg.ctx.rd).unwrap();
        let inv = action.invariant_basis(&alg, 2).unwrap();
        // all coefficients of all lambda <= 2: 1 + 4 + 9
        assert_eq!(inv.len(), 14);
    }

    #[test]
    fn charge_additivity_on_products() {
        let alg = su3_alg();
        let action =
            OrbifoldAction::new(presets::su3_adjoint_torus(), &alg.ctx.rd).unwrap();
        let t12 = alg.generator("t12").unwrap();
        let t23 = alg.generator("t23").unwrap();
        let (c12, _) = t12.terms().next().unwrap();
        let (c23, _) = t23.terms().next().unwrap();
        let sum = action
            .charge_of(&alg, c12)
            .unwrap()
            .add(&action.charge_of(&alg, c23).unwrap());
        let prod = alg.multiply(&t12, &t23).unwrap();
        assert!(!prod.is_zero());
        for (c, _) in prod.terms() {
            assert_eq!(action.charge_of(&alg, c).unwrap(), sum);
        }
    }

    #[test]
    fn central_shift_leaves_charges_unchanged() {
        // replacing (y1, y2) by (y1 + z, y2 - z) for a central z changes no
        // charge on any matrix coefficient
        let alg = su3_alg();
        let base = su3_family_member(1, [0; 4], Factor::Continuous);
        // central element of the rank-2 torus: z = (2/3, 4/3)
        let z = [Rational::new(2, 3), Rational::new(4, 3)];
        let shifted = ActionSpec {
            group: GroupKind::Su3,
            factors: vec![(
                FactorVectors {
                    y1: vec![base.factors[0].0.y1[0] + z[0], base.factors[0].0.y1[1] + z[1]],
                    y2: vec![base.factors[0].0.y2[0] - z[0], base.factors[0].0.y2[1] - z[1]],
                },
                Factor::Continuous,
            )],
        };
        let a1 = OrbifoldAction::new(base, &alg.ctx.rd).unwrap();
        let a2 = OrbifoldAction::new(shifted, &alg.ctx.rd).unwrap();
        for lambda in [Weight(vec![1, 0]), Weight(vec![1, 1])] {
            let rep = alg.ctx.canonical(&lambda).unwrap();
            for row in 0..rep.dim {
                for col in 0..rep.dim {
                    let c = MatrixCoeff {
                        lambda: lambda.clone(),
                        row,
                        col,
                    };
                    // Charges may differ by integers only if the shift is
                    // central AND the charge difference is mu(z) - nu(z),
                    // which vanishes since mu = nu mod the root lattice.
                    assert_eq!(
                        a1.charge_of(&alg, &c).unwrap(),
                        a2.charge_of(&alg, &c).unwrap()
                    );
                }
            }
        }
    }
}
