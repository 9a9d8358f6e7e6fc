//! Sparse multivariate Laurent polynomials over the Gaussian rationals.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Largest variable count of any context.
pub const MAX_VARS: usize = 8;

/// Fixed, ordered variable lists. Polynomials from different contexts never mix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum Context {
    /// `(u, x, x0, b1, b2)` with `u = q^{1/4}`.
    Operator,
    /// `(z1, ..., z6)` with `z_i^2 = y_i`.
    Cluster,
    /// Commuting curve indeterminates `(k1, k2, k3, k12, k23, k123, b1, b2)`.
    KRing,
}

impl Context {
    pub fn var_names(self) -> &'static [&'static str] {
        match self {
            Context::Operator => &["u", "x", "x0", "b1", "b2"],
            Context::Cluster => &["z1", "z2", "z3", "z4", "z5", "z6"],
            Context::KRing => &["k1", "k2", "k3", "k12", "k23", "k123", "b1", "b2"],
        }
    }

    pub fn nvars(self) -> usize {
        self.var_names().len()
    }

    pub fn var_index(self, name: &str) -> Option<usize> {
        self.var_names().iter().position(|v| *v == name)
    }

    pub fn from_nvars(n: usize) -> Option<Context> {
        [Context::Operator, Context::Cluster, Context::KRing].into_iter().find(|c| c.nvars() == n)
    }
}

/// Exponent vector; unused trailing slots stay zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [i32; MAX_VARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; MAX_VARS])
    }

    pub fn var(idx: usize, exp: i32) -> Self {
        let mut m = Monomial::one();
        m.0[idx] = exp;
        m
    }

    pub fn from_slice(exps: &[i32]) -> Self {
        let mut m = Monomial::one();
        m.0[..exps.len()].copy_from_slice(exps);
        m
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut r = *self;
        for (a, b) in r.0.iter_mut().zip(o.0.iter()) {
            *a += b;
        }
        r
    }

    pub fn div(&self, o: &Monomial) -> Monomial {
        let mut r = *self;
        for (a, b) in r.0.iter_mut().zip(o.0.iter()) {
            *a -= b;
        }
        r
    }

    pub fn pow(&self, k: i32) -> Monomial {
        let mut r = *self;
        for a in r.0.iter_mut() {
            *a *= k;
        }
        r
    }

    pub fn inv(&self) -> Monomial {
        self.pow(-1)
    }

    pub fn min_with(&self, o: &Monomial) -> Monomial {
        let mut r = *self;
        for (a, b) in r.0.iter_mut().zip(o.0.iter()) {
            *a = (*a).min(*b);
        }
        r
    }

    pub fn max_with(&self, o: &Monomial) -> Monomial {
        let mut r = *self;
        for (a, b) in r.0.iter_mut().zip(o.0.iter()) {
            *a = (*a).max(*b);
        }
        r
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn all_even(&self) -> bool {
        self.0.iter().all(|&e| e % 2 == 0)
    }

    pub fn halve(&self) -> Monomial {
        let mut r = *self;
        for a in r.0.iter_mut() {
            *a /= 2;
        }
        r
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded lexicographic: total degree first, then the earliest variable.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Monomial substitution `v -> image[v]`, extended multiplicatively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoMap {
    ctx: Context,
    images: [Monomial; MAX_VARS],
}

impl MonoMap {
    pub fn identity(ctx: Context) -> Self {
        let mut images = [Monomial::one(); MAX_VARS];
        for (k, img) in images.iter_mut().enumerate() {
            img.0[k] = 1;
        }
        MonoMap { ctx, images }
    }

    pub fn context(&self) -> Context {
        self.ctx
    }

    /// Sets the image of `var` to an arbitrary monomial.
    pub fn with_image(mut self, var: usize, image: Monomial) -> Self {
        self.images[var] = image;
        self
    }

    /// `var -> factor · var`.
    pub fn scale(self, var: usize, factor: Monomial) -> Self {
        let img = self.images[var].mul(&factor);
        self.with_image(var, img)
    }

    /// `var -> var^{-1}`.
    pub fn invert(self, var: usize) -> Self {
        let img = self.images[var].inv();
        self.with_image(var, img)
    }

    pub fn apply(&self, m: &Monomial) -> Monomial {
        let mut r = Monomial::one();
        for k in 0..self.ctx.nvars() {
            let e = m.0[k];
            if e != 0 {
                r = r.mul(&self.images[k].pow(e));
            }
        }
        r
    }

    /// True when the exponent map is invertible over the integers, so the
    /// substitution is a ring automorphism of the Laurent ring.
    pub fn is_unimodular(&self) -> bool {
        let n = self.ctx.nvars();
        let mut a: Vec<Vec<i128>> = (0..n).map(|r| (0..n).map(|c| self.images[r].0[c] as i128).collect()).collect();
        // Bareiss fraction-free elimination
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if a[k][k] == 0 {
                match (k + 1..n).find(|&r| a[r][k] != 0) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return false,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
            }
            prev = a[k][k];
        }
        (sign * a[n - 1][n - 1]).abs() == 1
    }
}

/// Sparse Laurent polynomial; terms sorted by descending monomial order so the
/// leading term comes first. No stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    ctx: Context,
    terms: Vec<(Monomial, Scalar)>,
}

impl LaurentPoly {
    pub fn zero(ctx: Context) -> Self {
        LaurentPoly { ctx, terms: Vec::new() }
    }

    pub fn one(ctx: Context) -> Self {
        Self::constant(ctx, Scalar::one())
    }

    pub fn constant(ctx: Context, c: Scalar) -> Self {
        Self::term(ctx, Monomial::one(), c)
    }

    pub fn term(ctx: Context, m: Monomial, c: Scalar) -> Self {
        if c.is_zero() {
            Self::zero(ctx)
        } else {
            LaurentPoly { ctx, terms: vec![(m, c)] }
        }
    }

    pub fn monomial(ctx: Context, m: Monomial) -> Self {
        Self::term(ctx, m, Scalar::one())
    }

    pub fn var(ctx: Context, idx: usize) -> Self {
        Self::monomial(ctx, Monomial::var(idx, 1))
    }

    /// Variable by name; panics on an unknown name (programming error).
    pub fn named(ctx: Context, name: &str) -> Self {
        let idx = ctx.var_index(name).unwrap_or_else(|| panic!("no variable {name} in {ctx:?}"));
        Self::var(ctx, idx)
    }

    /// Builds a polynomial from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms(ctx: Context, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for (m, c) in terms {
            acc.entry(m).and_modify(|e| *e += &c).or_insert(c);
        }
        Self::from_map(ctx, acc)
    }

    fn from_map(ctx: Context, acc: HashMap<Monomial, Scalar>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        LaurentPoly { ctx, terms }
    }

    pub fn context(&self) -> Context {
        self.ctx
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
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

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// Single term `c · m`.
    pub fn as_term(&self) -> Option<(&Monomial, &Scalar)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((m, c)),
            _ => None,
        }
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.as_slice() {
            [] => Some(Scalar::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Componentwise minimum exponent (the monomial content).
    pub fn min_exps(&self) -> Monomial {
        let mut it = self.terms.iter().map(|(m, _)| *m);
        match it.next() {
            Some(first) => it.fold(first, |a, m| a.min_with(&m)),
            None => Monomial::one(),
        }
    }

    pub fn max_exps(&self) -> Monomial {
        let mut it = self.terms.iter().map(|(m, _)| *m);
        match it.next() {
            Some(first) => it.fold(first, |a, m| a.max_with(&m)),
            None => Monomial::one(),
        }
    }

    /// Degree span `max - min` in variable `var`.
    pub fn span(&self, var: usize) -> i32 {
        self.max_exps().0[var] - self.min_exps().0[var]
    }

    pub fn check_ctx(&self, other: &LaurentPoly) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch(self.ctx, other.ctx))
        }
    }

    pub fn try_add(&self, o: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_ctx(o)?;
        Ok(self.merge(o, false))
    }

    pub fn try_sub(&self, o: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_ctx(o)?;
        Ok(self.merge(o, true))
    }

    pub fn try_mul(&self, o: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_ctx(o)?;
        Ok(self.mul_unchecked(o))
    }

    fn merge(&self, o: &LaurentPoly, negate: bool) -> LaurentPoly {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < o.terms.len() {
            let ord = match (self.terms.get(i), o.terms.get(j)) {
                (Some(a), Some(b)) => b.0.cmp(&a.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let (m, c) = &o.terms[j];
                    out.push((*m, if negate { -c } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &self.terms[i].1 - &o.terms[j].1 } else { &self.terms[i].1 + &o.terms[j].1 };
                    if !c.is_zero() {
                        out.push((self.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        LaurentPoly { ctx: self.ctx, terms: out }
    }

    fn mul_unchecked(&self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || o.is_zero() {
            return LaurentPoly::zero(self.ctx);
        }
        if let Some((m, c)) = o.as_term() {
            return self.mul_term(m, c);
        }
        if let Some((m, c)) = self.as_term() {
            return o.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, Scalar> = HashMap::with_capacity(self.terms.len() * o.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let p = ca * cb;
                match acc.entry(ma.mul(mb)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += &p,
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(p);
                    }
                }
            }
        }
        Self::from_map(self.ctx, acc)
    }

    /// Multiplies by `c · m`; order is preserved since monomial order is
    /// multiplicative.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.ctx);
        }
        LaurentPoly { ctx: self.ctx, terms: self.terms.iter().map(|(mm, cc)| (mm.mul(m), cc * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly { ctx: self.ctx, terms: self.terms.iter().map(|(mm, cc)| (mm.mul(m), cc.clone())).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> LaurentPoly {
        self.mul_term(&Monomial::one(), c)
    }

    /// Non-negative power; negative powers are allowed only for single terms.
    pub fn pow(&self, k: i32) -> Result<LaurentPoly> {
        if k < 0 {
            let (m, c) = self.as_term().ok_or_else(|| Error::NonUnit(self.to_string()))?;
            let c = c.pow(k as i64)?;
            return Ok(LaurentPoly::term(self.ctx, m.pow(k), c));
        }
        let mut acc = LaurentPoly::one(self.ctx);
        let mut base = self.clone();
        let mut e = k as u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        Ok(acc)
    }

    pub fn map_monomials(&self, map: &MonoMap) -> LaurentPoly {
        debug_assert_eq!(map.context(), self.ctx);
        Self::from_terms(self.ctx, self.terms.iter().map(|(m, c)| (map.apply(m), c.clone())))
    }

    /// Maps each coefficient, dropping zeros. Used for conjugation and the like.
    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> LaurentPoly {
        LaurentPoly {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .filter_map(|(m, c)| {
                    let v = f(c);
                    (!v.is_zero()).then_some((*m, v))
                })
                .collect(),
        }
    }

    /// Exact quotient `self / d` in the Laurent ring, or `None` if `d` does not
    /// divide `self`.
    pub fn exact_div(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero(self.ctx));
        }
        if let Some((m, c)) = d.as_term() {
            return Some(self.mul_term(&m.inv(), &c.inv().ok()?));
        }
        let mn = self.min_exps();
        let md = d.min_exps();
        let n = self.mul_monomial(&mn.inv());
        let dd = d.mul_monomial(&md.inv());
        let nmax = n.max_exps();
        let dmax = dd.max_exps();
        if (0..self.ctx.nvars()).any(|k| dmax.0[k] > nmax.0[k]) {
            return None;
        }
        let q = poly_divide(&n, &dd)?;
        Some(q.mul_monomial(&mn.div(&md)))
    }

    /// Canonical text: terms in monomial order, each `(a+bi)*v^e*...`.
    pub fn render(&self) -> String {
        self.to_string()
    }

    /// Parses the canonical text rendering back into a polynomial.
    pub fn parse(ctx: Context, text: &str) -> Result<LaurentPoly> {
        let t = text.trim();
        if t == "0" {
            return Ok(LaurentPoly::zero(ctx));
        }
        let mut terms = Vec::new();
        let mut pos = 0usize;
        for piece in t.split(" + ") {
            let piece_pos = pos;
            pos += piece.len() + 3;
            let piece = piece.trim();
            let rest = piece.strip_prefix('(').ok_or_else(|| Error::parse(piece_pos, "expected '('"))?;
            let close = rest.find(')').ok_or_else(|| Error::parse(piece_pos, "expected ')'"))?;
            let coeff: Scalar = rest[..close].parse().map_err(|_| Error::parse(piece_pos, "bad coefficient"))?;
            let mut m = Monomial::one();
            for factor in rest[close + 1..].split('*').filter(|s| !s.is_empty()) {
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => (n, e.parse::<i32>().map_err(|_| Error::parse(piece_pos, "bad exponent"))?),
                    None => (factor, 1),
                };
                let idx = ctx.var_index(name).ok_or_else(|| Error::parse(piece_pos, format!("unknown variable {name}")))?;
                m.0[idx] += exp;
            }
            terms.push((m, coeff));
        }
        Ok(LaurentPoly::from_terms(ctx, terms))
    }
}

/// Polynomial long division under graded-lex order; both operands have
/// non-negative exponents. Returns `None` as soon as a leading term fails to
/// divide.
fn poly_divide(n: &LaurentPoly, d: &LaurentPoly) -> Option<LaurentPoly> {
    let (dm, dc) = d.leading_term()?;
    let dc_inv = dc.inv().ok()?;
    let mut rem: BTreeMap<Monomial, Scalar> = n.terms.iter().cloned().collect();
    let mut quot = Vec::new();
    while let Some((m, c)) = rem.iter().next_back().map(|(m, c)| (*m, c.clone())) {
        let qm = m.div(dm);
        if !qm.is_nonneg() {
            return None;
        }
        let qc = &c * &dc_inv;
        for (tm, tc) in &d.terms {
            let key = tm.mul(&qm);
            let delta = tc * &qc;
            match rem.entry(key) {
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() -= &delta;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(-delta);
                }
            }
        }
        quot.push((qm, qc));
    }
    Some(LaurentPoly::from_terms(n.ctx, quot))
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.ctx.var_names();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (v, name) in names.iter().enumerate() {
                match m.0[v] {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    e => write!(f, "*{name}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ctx.cmp(&other.ctx).then_with(|| self.terms.cmp(&other.terms))
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        self.try_add(o).expect("context mismatch")
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        self.try_sub(o).expect("context mismatch")
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        self.try_mul(o).expect("context mismatch")
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: LaurentPoly) -> LaurentPoly {
        &self + &o
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: LaurentPoly) -> LaurentPoly {
        &self - &o
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: LaurentPoly) -> LaurentPoly {
        &self * &o
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { ctx: self.ctx, terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> LaurentPoly {
        LaurentPoly::named(Context::Operator, "x")
    }

    fn xinv() -> LaurentPoly {
        x().pow(-1).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let p = &x() + &xinv();
        let q = &x() - &xinv();
        let expect = &x().pow(2).unwrap() - &x().pow(-2).unwrap();
        assert_eq!(&p * &q, expect);
    }

    #[test]
    fn additive_identity() {
        let p = &x() + &LaurentPoly::named(Context::Operator, "b1");
        assert_eq!(&p + &LaurentPoly::zero(Context::Operator), p);
    }

    #[test]
    fn square_two_ways_cancels() {
        let c = Context::Cluster;
        let z2 = LaurentPoly::named(c, "z2").pow(2).unwrap();
        let z3 = LaurentPoly::named(c, "z3").pow(2).unwrap();
        let base = &(&LaurentPoly::one(c) + &z2) + &(&z2 * &z3);
        let sq1 = &base * &base;
        let sq2 = base.pow(2).unwrap();
        assert!((&sq1 - &sq2).is_zero());
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let a = LaurentPoly::one(Context::Operator);
        let b = LaurentPoly::one(Context::Cluster);
        assert!(matches!(a.try_add(&b), Err(Error::ContextMismatch(..))));
    }

    #[test]
    fn exact_division() {
        let one = LaurentPoly::one(Context::Operator);
        let a = &one - &x();
        let b = &one + &x();
        let p = &(&a * &b) * &xinv();
        assert_eq!(p.exact_div(&a), Some(&b * &xinv()));
        assert_eq!(p.exact_div(&(&one + &x().pow(3).unwrap())), None);
    }

    #[test]
    fn leading_term_is_graded_lex_max() {
        let c = Context::Operator;
        let p = LaurentPoly::parse(c, "(1/1+0/1i)*x0 + (2/1+0/1i)*u*x + (3/1+0/1i)*x^-1").unwrap();
        assert_eq!(p.leading_coeff(), Some(&Scalar::from_int(2)));
    }

    #[test]
    fn text_round_trip() {
        let c = Context::Operator;
        let p = LaurentPoly::parse(c, "(1/2-3/1i)*u^4*x^-1 + (1/1+0/1i)*x0^2").unwrap();
        assert_eq!(LaurentPoly::parse(c, &p.render()).unwrap(), p);
    }

    #[test]
    fn unimodular_maps() {
        let c = Context::Operator;
        let m = MonoMap::identity(c).scale(1, Monomial::var(0, 4)).invert(1);
        assert!(m.is_unimodular());
        let collapse = MonoMap::identity(c).with_image(4, Monomial::one());
        assert!(!collapse.is_unimodular());
    }
}
