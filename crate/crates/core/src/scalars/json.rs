//! JSON encoding of scalars: a scalar is `{n, terms}` where each term is
//! `{num, den, radicand, zeta}` and polynomials are coefficient/exponent
//! pair lists with string coefficients (exponents are powers of `s`).

use super::lpoly::LPoly;
use super::qscalar::QScalar;
use super::ratfunc::RatFunc;
use super::ScalarError;
use num::bigint::BigInt;
use serde_json::{json, Value};
use std::str::FromStr;

pub fn lpoly_to_json(p: &LPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(e, c)| json!([c.to_string(), e]))
            .collect(),
    )
}

pub fn lpoly_from_json(v: &Value) -> Result<LPoly, ScalarError> {
    let arr = v
        .as_array()
        .ok_or_else(|| ScalarError::Payload("polynomial must be an array".into()))?;
    let mut p = LPoly::zero();
    for pair in arr {
        let pair = pair
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| ScalarError::Payload("polynomial term must be a pair".into()))?;
        let c = pair[0]
            .as_str()
            .map(|s| BigInt::from_str(s).ok())
            .or_else(|| pair[0].as_i64().map(|n| Some(BigInt::from(n))))
            .flatten()
            .ok_or_else(|| ScalarError::Payload("bad coefficient".into()))?;
        let e = pair[1]
            .as_i64()
            .ok_or_else(|| ScalarError::Payload("bad exponent".into()))?;
        p = p.add(&LPoly::monomial(c, e));
    }
    Ok(p)
}

pub fn qscalar_to_json(x: &QScalar) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .map(|(k, f)| {
            json!({
                "num": lpoly_to_json(f.num()),
                "den": lpoly_to_json(f.den()),
                "radicand": lpoly_to_json(k.rad.poly()),
                "zeta": k.zeta,
            })
        })
        .collect();
    json!({ "n": x.zeta_order(), "terms": terms })
}

pub fn qscalar_from_json(v: &Value) -> Result<QScalar, ScalarError> {
    let n = v
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| ScalarError::Payload("missing cyclotomic order".into()))? as u32;
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| ScalarError::Payload("missing terms".into()))?;
    let mut acc = QScalar::zero().promote(n.max(1));
    for t in terms {
        let num = lpoly_from_json(
            t.get("num")
                .ok_or_else(|| ScalarError::Payload("missing num".into()))?,
        )?;
        let den = lpoly_from_json(
            t.get("den")
                .ok_or_else(|| ScalarError::Payload("missing den".into()))?,
        )?;
        if den.is_zero() {
            return Err(ScalarError::Payload("zero denominator".into()));
        }
        let rad = lpoly_from_json(
            t.get("radicand")
                .ok_or_else(|| ScalarError::Payload("missing radicand".into()))?,
        )?;
        let zeta = t.get("zeta").and_then(Value::as_u64).unwrap_or(0) as u32;
        let f = RatFunc::from_ratio(num, den);
        let base = QScalar::from_ratfunc(f).promote(n.max(1));
        let term = if rad.is_one() {
            base
        } else {
            let sq = QScalar::from_lpoly(rad).sqrt()?;
            base.mul(&sq)
        };
        let phase = QScalar::zeta(n.max(1), zeta);
        acc = acc.add(&term.mul(&phase));
    }
    Ok(acc)
}

impl QScalar {
    pub fn to_json(&self) -> Value {
        qscalar_to_json(self)
    }

    pub fn from_json(v: &Value) -> Result<QScalar, ScalarError> {
        qscalar_from_json(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::q_int;

    #[test]
    fn roundtrip() {
        let x = q_int(3, 1)
            .sqrt()
            .unwrap()
            .mul(&QScalar::zeta(6, 5))
            .add(&QScalar::from_ratio_i64(-2, 7));
        let j = x.to_json();
        let y = QScalar::from_json(&j).unwrap();
        assert_eq!(x, y);
    }
}
