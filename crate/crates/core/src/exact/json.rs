//! JSON encoding: a polynomial is a list of `{exps, re, im}` terms in
//! canonical order, a rational function is `{num, den}`.

use num_traits::Zero;
use serde_json::{json, Value};

use super::poly::{Context, LaurentPoly, Monomial};
use super::ratfn::RationalFn;
use super::scalar::{parse_rational, rational_to_pq, Scalar};
use crate::error::{Error, Result};

pub fn poly_to_json(p: &LaurentPoly) -> Value {
    let n = p.context().nvars();
    Value::Array(
        p.terms()
            .iter()
            .map(|(m, c)| {
                json!({
                    "exps": &m.0[..n],
                    "re": rational_to_pq(c.re()),
                    "im": rational_to_pq(c.im()),
                })
            })
            .collect(),
    )
}

fn bad(msg: &str) -> Error {
    Error::Json(msg.to_string())
}

pub fn poly_from_json(ctx: Context, v: &Value) -> Result<LaurentPoly> {
    let arr = v.as_array().ok_or_else(|| bad("polynomial must be an array"))?;
    let n = ctx.nvars();
    let mut terms = Vec::with_capacity(arr.len());
    for t in arr {
        let exps = t.get("exps").and_then(Value::as_array).ok_or_else(|| bad("missing exps"))?;
        if exps.len() != n {
            return Err(bad("exponent vector length does not match context"));
        }
        let exps: Vec<i32> = exps
            .iter()
            .map(|e| e.as_i64().map(|e| e as i32).ok_or_else(|| bad("exponent must be an integer")))
            .collect::<Result<_>>()?;
        let re = parse_rational(t.get("re").and_then(Value::as_str).ok_or_else(|| bad("missing re"))?)?;
        let im = parse_rational(t.get("im").and_then(Value::as_str).ok_or_else(|| bad("missing im"))?)?;
        if re.is_zero() && im.is_zero() {
            return Err(bad("zero coefficient"));
        }
        terms.push((Monomial::from_slice(&exps), Scalar::new(re, im)));
    }
    Ok(LaurentPoly::from_terms(ctx, terms))
}

pub fn ratfn_to_json(f: &RationalFn) -> Value {
    json!({ "num": poly_to_json(f.num()), "den": poly_to_json(&f.den()) })
}

pub fn ratfn_from_json(ctx: Context, v: &Value) -> Result<RationalFn> {
    let num = poly_from_json(ctx, v.get("num").ok_or_else(|| bad("missing num"))?)?;
    let den = poly_from_json(ctx, v.get("den").ok_or_else(|| bad("missing den"))?)?;
    RationalFn::from_parts_unreduced(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_exact_round_trip() {
        let ctx = Context::Operator;
        let num = LaurentPoly::parse(ctx, "(1/2-3/1i)*u^4*x^-1 + (2/1+0/1i)*x0^2").unwrap();
        let den = LaurentPoly::parse(ctx, "(1/1+0/1i)*x + (-1/1+0/1i)*u^2").unwrap();
        let f = RationalFn::new(num, den).unwrap();
        let text = serde_json::to_string(&ratfn_to_json(&f)).unwrap();
        let back = ratfn_from_json(ctx, &serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(serde_json::to_string(&ratfn_to_json(&back)).unwrap(), text);
        assert!(back.eq_exact(&f));
    }

    #[test]
    fn rejects_wrong_length() {
        let v: Value = serde_json::from_str(r#"[{"exps":[1,2],"re":"1/1","im":"0/1"}]"#).unwrap();
        assert!(poly_from_json(Context::Operator, &v).is_err());
    }
}
