//! Named actions: the weighted-projective circle family on su2 (spheres,
//! teardrops, and their cyclic lens restrictions) and the adjoint torus
//! action on su3.

use super::{ActionSpec, Factor, FactorVectors, Rational};
use crate::repcat::GroupKind;

/// The su2 circle action with weights `(k, l)`: the angle acts through the
/// pair `(exp(i phi (l-k) h / 2), exp(-i phi (l+k) h / 2))`, so
/// `alpha -> exp(-i k phi) alpha` and `beta -> exp(+i l phi) beta`.
/// `factor` restricts to a cyclic subgroup when finite.
pub fn su2_weighted(k: i64, l: i64, factor: Factor) -> ActionSpec {
    ActionSpec {
        group: GroupKind::Su2,
        factors: vec![(
            FactorVectors {
                y1: vec![Rational::new(l - k, 2)],
                y2: vec![Rational::new(-(l + k), 2)],
            },
            factor,
        )],
    }
}

/// The standard sphere: weights (1,1).
pub fn su2_sphere() -> ActionSpec {
    su2_weighted(1, 1, Factor::Continuous)
}

/// Teardrop: weights (1, l).
pub fn su2_teardrop(l: i64) -> ActionSpec {
    su2_weighted(1, l, Factor::Continuous)
}

/// Lens restriction: teardrop weights with the cyclic group of order p.
pub fn su2_lens(l: i64, p: u32) -> ActionSpec {
    su2_weighted(1, l, Factor::Cyclic(p))
}

/// The adjoint action of the 2-torus on su3: angles `(phi, theta)` act
/// through `(exp(i phi h1) exp(i theta h2), exp(-i phi h1) exp(-i theta h2))`.
pub fn su3_adjoint_torus() -> ActionSpec {
    let one = Rational::from_integer(1);
    let zero = Rational::from_integer(0);
    ActionSpec {
        group: GroupKind::Su3,
        factors: vec![
            (
                FactorVectors {
                    y1: vec![one, zero],
                    y2: vec![-one, zero],
                },
                Factor::Continuous,
            ),
            (
                FactorVectors {
                    y1: vec![zero, one],
                    y2: vec![zero, -one],
                },
                Factor::Continuous,
            ),
        ],
    }
}

/// The adjoint action restricted to a finite product of cyclic groups.
pub fn su3_adjoint_finite(p: u32, r: u32) -> ActionSpec {
    let mut spec = su3_adjoint_torus();
    spec.factors[0].1 = Factor::Cyclic(p);
    spec.factors[1].1 = Factor::Cyclic(r);
    spec
}

/// Parse a preset name: `sphere`, `teardrop:k,l`, `lens:k,l:p=P`,
/// `wp:k,l`, `su3-adjoint`, `su3-adjoint:p=P,r=R`, `su3-x:X`
/// (the single-factor family member with integer parts zero),
/// `su3-x:X:p=P`.
pub fn parse_preset(name: &str) -> Option<ActionSpec> {
    let parts: Vec<&str> = name.split(':').collect();
    match parts[0] {
        "sphere" => Some(su2_sphere()),
        "teardrop" | "wp" | "lens" => {
            let (k, l) = {
                let kl = parts.get(1)?;
                let (a, b) = kl.split_once(',')?;
                (a.trim().parse().ok()?, b.trim().parse().ok()?)
            };
            let factor = match parts.get(2) {
                Some(p) => Factor::Cyclic(p.strip_prefix("p=")?.parse().ok()?),
                None => Factor::Continuous,
            };
            Some(su2_weighted(k, l, factor))
        }
        "su3-adjoint" => match parts.get(1) {
            None => Some(su3_adjoint_torus()),
            Some(spec) => {
                let mut p = None;
                let mut r = None;
                for item in spec.split(',') {
                    if let Some(v) = item.strip_prefix("p=") {
                        p = v.parse().ok();
                    } else if let Some(v) = item.strip_prefix("r=") {
                        r = v.parse().ok();
                    }
                }
                Some(su3_adjoint_finite(p?, r?))
            }
        },
        "su3-x" => {
            let x: u32 = parts.get(1)?.parse().ok()?;
            let factor = match parts.get(2) {
                Some(p) => Factor::Cyclic(p.strip_prefix("p=")?.parse().ok()?),
                None => Factor::Continuous,
            };
            Some(super::su3_family_member(x, [0; 4], factor))
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_parsing() {
        assert_eq!(parse_preset("sphere"), Some(su2_sphere()));
        assert_eq!(parse_preset("teardrop:1,3"), Some(su2_teardrop(3)));
        assert_eq!(parse_preset("teardrop:1,3:p=3"), Some(su2_lens(3, 3)));
        assert_eq!(parse_preset("su3-adjoint"), Some(su3_adjoint_torus()));
        assert!(parse_preset("su3-x:1").is_some());
        assert!(parse_preset("nonsense").is_none());
    }
}
