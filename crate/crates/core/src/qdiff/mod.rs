//! Normal-form arithmetic for q-difference operators
//! `Σ c(u, x, x0, b1, b2) · s^ε ð^m ð0^n`.
//!
//! `s` inverts `x`, `ð` scales `x` by `q = u^4` and `ð0` scales `x0` by
//! `q^{1/2} = u^2`. Coefficients always stand to the left of the shift symbols.

mod blocks;
pub mod identities;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::json::{ratfn_from_json, ratfn_to_json};
use crate::exact::op_vars::{U, X, X0};
use crate::exact::{Context, LaurentPoly, MonoMap, Monomial, RationalFn, Scalar};

pub use blocks::{ch, make_g, make_k, make_w, Sign};

const CTX: Context = Context::Operator;

/// Exponents `(ε, m, n)` of `s^ε ð^m ð0^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShiftKey {
    pub eps: u8,
    pub m: i32,
    pub n: i32,
}

impl ShiftKey {
    pub const IDENTITY: ShiftKey = ShiftKey { eps: 0, m: 0, n: 0 };

    pub fn new(eps: u8, m: i32, n: i32) -> Self {
        ShiftKey { eps: eps & 1, m, n }
    }

    /// Monomial map that moves a coefficient from the right of this key to
    /// its left: `b(x, x0) ↦ b(u^{4m} x^{±1}, u^{2n} x0)`.
    pub fn coeff_map(&self) -> MonoMap {
        let mut xi = Monomial::var(X, if self.eps == 1 { -1 } else { 1 });
        xi.0[U] = 4 * self.m;
        let mut x0i = Monomial::var(X0, 1);
        x0i.0[U] = 2 * self.n;
        MonoMap::identity(CTX).with_image(X, xi).with_image(X0, x0i)
    }

    /// Key of the product `self · other`.
    pub fn compose(&self, o: &ShiftKey) -> ShiftKey {
        let m = if o.eps == 1 { -self.m } else { self.m };
        ShiftKey { eps: (self.eps + o.eps) & 1, m: m + o.m, n: self.n + o.n }
    }
}

impl fmt::Display for ShiftKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.eps == 1 {
            parts.push("s".to_string());
        }
        if self.m != 0 {
            parts.push(if self.m == 1 { "D".into() } else { format!("D^{}", self.m) });
        }
        if self.n != 0 {
            parts.push(if self.n == 1 { "D0".into() } else { format!("D0^{}", self.n) });
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Sum of `coeff · s^ε ð^m ð0^n`, keyed by [`ShiftKey`]. No coefficient is
/// zero, so two operators are equal iff their term maps agree.
#[derive(Clone, Default)]
pub struct Operator {
    terms: BTreeMap<ShiftKey, RationalFn>,
}

impl Operator {
    pub fn zero() -> Self {
        Operator { terms: BTreeMap::new() }
    }

    pub fn identity() -> Self {
        Self::mul_by(RationalFn::one(CTX))
    }

    /// Multiplication by a rational function.
    pub fn mul_by(f: RationalFn) -> Self {
        Self::term(ShiftKey::IDENTITY, f)
    }

    pub fn mul_by_poly(p: LaurentPoly) -> Self {
        Self::mul_by(RationalFn::from_poly(p))
    }

    pub fn scalar(c: Scalar) -> Self {
        Self::mul_by(RationalFn::constant(CTX, c))
    }

    pub fn term(key: ShiftKey, coeff: RationalFn) -> Self {
        assert_eq!(coeff.context(), CTX, "operator coefficients live in the operator context");
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(key, coeff);
        }
        Operator { terms }
    }

    pub fn shift(eps: u8, m: i32, n: i32) -> Self {
        Self::term(ShiftKey::new(eps, m, n), RationalFn::one(CTX))
    }

    /// The inversion `s`.
    pub fn s() -> Self {
        Self::shift(1, 0, 0)
    }

    /// `ð^m`.
    pub fn dx(m: i32) -> Self {
        Self::shift(0, m, 0)
    }

    /// `ð0^n`.
    pub fn dx0(n: i32) -> Self {
        Self::shift(0, 0, n)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ShiftKey, &RationalFn)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: ShiftKey) -> RationalFn {
        self.terms.get(&key).cloned().unwrap_or_else(|| RationalFn::zero(CTX))
    }

    /// The rational function this operator multiplies by, if it has no shifts.
    pub fn as_function(&self) -> Option<RationalFn> {
        match self.terms.len() {
            0 => Some(RationalFn::zero(CTX)),
            1 => self.terms.get(&ShiftKey::IDENTITY).cloned(),
            _ => None,
        }
    }

    fn from_groups(groups: BTreeMap<ShiftKey, Vec<RationalFn>>) -> Self {
        let summed: Vec<(ShiftKey, RationalFn)> =
            groups.into_par_iter().map(|(k, v)| (k, RationalFn::sum(CTX, v))).filter(|(_, c)| !c.is_zero()).collect();
        Operator { terms: summed.into_iter().collect() }
    }

    /// Left multiplication of every coefficient by `f`.
    pub fn scale_by(&self, f: &RationalFn) -> Operator {
        if f.is_zero() {
            return Operator::zero();
        }
        let terms = self.terms.iter().map(|(k, c)| (*k, c * f)).filter(|(_, c)| !c.is_zero()).collect();
        Operator { terms }
    }

    pub fn scale(&self, c: &Scalar) -> Operator {
        if c.is_zero() {
            return Operator::zero();
        }
        Operator { terms: self.terms.iter().map(|(k, v)| (*k, v.scale(c))).collect() }
    }

    /// Composition `self ∘ o`.
    pub fn compose(&self, o: &Operator) -> Operator {
        let mut groups: BTreeMap<ShiftKey, Vec<RationalFn>> = BTreeMap::new();
        let pairs: Vec<(ShiftKey, RationalFn)> = self
            .terms
            .par_iter()
            .flat_map_iter(|(ka, ca)| {
                let map = ka.coeff_map();
                o.terms.iter().map(move |(kb, cb)| {
                    let moved = if map == MonoMap::identity(CTX) { cb.clone() } else { cb.map_monomials(&map) };
                    (ka.compose(kb), ca * &moved)
                })
            })
            .collect();
        for (k, c) in pairs {
            groups.entry(k).or_default().push(c);
        }
        Self::from_groups(groups)
    }

    pub fn pow(&self, k: u32) -> Operator {
        let mut r = Operator::identity();
        for _ in 0..k {
            r = r.compose(self);
        }
        r
    }

    /// Applies a monomial substitution to every coefficient, leaving the
    /// shift symbols alone.
    pub fn map_coeffs(&self, map: &MonoMap) -> Operator {
        let terms = self.terms.iter().map(|(k, c)| (*k, c.map_monomials(map))).collect();
        Operator { terms }
    }

    /// Coefficients with `x ↦ q^k x`; the reading of a shifted argument
    /// such as `G_n(x0; q x)`.
    pub fn shift_x(&self, k: i32) -> Operator {
        self.map_coeffs(&MonoMap::identity(CTX).scale(X, Monomial::var(U, 4 * k)))
    }

    /// Coefficients with `x ↦ x^{-1}`.
    pub fn invert_x(&self) -> Operator {
        self.map_coeffs(&MonoMap::identity(CTX).invert(X))
    }

    /// Action on a function of `(u, x, x0, b1, b2)`.
    pub fn apply(&self, f: &RationalFn) -> RationalFn {
        RationalFn::sum(CTX, self.terms.iter().map(|(k, c)| c * &f.map_monomials(&k.coeff_map())))
    }

    /// Number of distinct terms in the numerators of all coefficients; a
    /// size measure for reports.
    pub fn term_count(&self) -> usize {
        self.terms.values().map(|c| c.num().len()).sum()
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms.iter().map(|(k, c)| format!("[{}] {}", c, k)).collect::<Vec<_>>().join("\n+ ")
    }

    /// LaTeX sum with `ð`, `ð_0` and `s` written to the right of each
    /// coefficient.
    pub fn to_latex(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let shift = |k: &ShiftKey| {
            let mut parts = Vec::new();
            if k.eps == 1 {
                parts.push("s".to_string());
            }
            let pow = |base: &str, e: i32| if e == 1 { base.to_string() } else { format!("{base}^{{{e}}}") };
            if k.m != 0 {
                parts.push(pow("\\eth", k.m));
            }
            if k.n != 0 {
                parts.push(pow("\\eth_0", k.n));
            }
            parts.join(" ")
        };
        self.terms
            .iter()
            .map(|(k, c)| {
                let s = shift(k);
                let c = crate::exact::latex::ratfn_latex(c);
                if s.is_empty() {
                    format!("\\left({c}\\right)")
                } else {
                    format!("\\left({c}\\right) {s}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms.iter().map(|(k, c)| json!({"eps": k.eps, "m": k.m, "n": k.n, "coeff": ratfn_to_json(c)})).collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Operator> {
        let arr = v.as_array().ok_or_else(|| Error::Json("operator must be an array".into()))?;
        let mut groups: BTreeMap<ShiftKey, Vec<RationalFn>> = BTreeMap::new();
        for t in arr {
            let int = |name: &str| {
                t.get(name).and_then(Value::as_i64).ok_or_else(|| Error::Json(format!("missing integer field {name}")))
            };
            let eps = int("eps")?;
            if !(0..=1).contains(&eps) {
                return Err(Error::Json("eps must be 0 or 1".into()));
            }
            let key = ShiftKey::new(eps as u8, int("m")? as i32, int("n")? as i32);
            let c = ratfn_from_json(CTX, t.get("coeff").ok_or_else(|| Error::Json("missing coeff".into()))?)?;
            groups.entry(key).or_default().push(c);
        }
        Ok(Self::from_groups(groups))
    }
}

/// Linear combination `Σ cᵢ · Aᵢ` with rational-function weights.
pub fn op_linear<'a>(items: impl IntoIterator<Item = (RationalFn, &'a Operator)>) -> Operator {
    let mut groups: BTreeMap<ShiftKey, Vec<RationalFn>> = BTreeMap::new();
    for (w, op) in items {
        if w.is_zero() {
            continue;
        }
        for (k, c) in &op.terms {
            groups.entry(*k).or_default().push(&w * c);
        }
    }
    Operator::from_groups(groups)
}

pub fn op_mul(a: &Operator, b: &Operator) -> Operator {
    a.compose(b)
}

pub fn apply_to_function(a: &Operator, f: &RationalFn) -> RationalFn {
    a.apply(f)
}

pub fn shift_x(a: &Operator, k: i32) -> Operator {
    a.shift_x(k)
}

impl PartialEq for Operator {
    fn eq(&self, o: &Operator) -> bool {
        (self - o).is_zero()
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &Operator {
    type Output = Operator;
    fn add(self, o: &Operator) -> Operator {
        op_linear([(RationalFn::one(CTX), self), (RationalFn::one(CTX), o)])
    }
}

impl Sub for &Operator {
    type Output = Operator;
    fn sub(self, o: &Operator) -> Operator {
        op_linear([(RationalFn::one(CTX), self), (RationalFn::constant(CTX, Scalar::from_int(-1)), o)])
    }
}

impl Mul for &Operator {
    type Output = Operator;
    fn mul(self, o: &Operator) -> Operator {
        self.compose(o)
    }
}

impl Neg for &Operator {
    type Output = Operator;
    fn neg(self) -> Operator {
        self.scale(&Scalar::from_int(-1))
    }
}

impl Add for Operator {
    type Output = Operator;
    fn add(self, o: Operator) -> Operator {
        &self + &o
    }
}

impl Sub for Operator {
    type Output = Operator;
    fn sub(self, o: Operator) -> Operator {
        &self - &o
    }
}

impl Mul for Operator {
    type Output = Operator;
    fn mul(self, o: Operator) -> Operator {
        &self * &o
    }
}

impl Neg for Operator {
    type Output = Operator;
    fn neg(self) -> Operator {
        -&self
    }
}

#[cfg(test)]
mod tests;
