//! Rational functions with a factored denominator.
//!
//! The denominator is stored as a product of normalized factors (no monomial
//! content, leading coefficient one) with multiplicities. Sums then use the
//! lcm of the factor lists instead of the product of denominators, and
//! numerators are trial-divided by every denominator factor after each
//! operation. Factors that are provably irreducible make this a complete
//! reduction; for the rest, the optional gcd pass (see
//! [`set_gcd_reduction`]) finishes the job.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::atomic::{AtomicU8, Ordering as AtomicOrdering};
use std::sync::Arc;

use super::gcd::{self, split_unit};
use super::poly::{Context, LaurentPoly, MonoMap, Monomial};
use super::scalar::Scalar;
use crate::error::{Error, Result};

static GCD_MODE: AtomicU8 = AtomicU8::new(0);

/// Whether every arithmetic result gets the full gcd post-pass. Defaults to
/// the `SKEINDAHA_GCD` environment variable (`1` enables), off otherwise.
pub fn gcd_reduction_enabled() -> bool {
    match GCD_MODE.load(AtomicOrdering::Relaxed) {
        1 => false,
        2 => true,
        _ => {
            let on = std::env::var("SKEINDAHA_GCD").map(|v| v.trim() == "1").unwrap_or(false);
            GCD_MODE.store(if on { 2 } else { 1 }, AtomicOrdering::Relaxed);
            on
        }
    }
}

pub fn set_gcd_reduction(on: bool) {
    GCD_MODE.store(if on { 2 } else { 1 }, AtomicOrdering::Relaxed);
}

/// A normalized, non-constant denominator factor.
#[derive(Clone)]
pub struct Factor {
    poly: Arc<LaurentPoly>,
    irreducible: bool,
}

impl Factor {
    /// Normalizes `p`; returns the unit `c · m` split off and the factor, or
    /// `None` for the factor when `p` is itself a unit.
    fn from_poly(p: &LaurentPoly) -> (Scalar, Monomial, Option<Factor>) {
        let (c, m, norm) = split_unit(p);
        if norm.len() <= 1 {
            return (c, m, None);
        }
        let irreducible = looks_irreducible(&norm);
        (c, m, Some(Factor { poly: Arc::new(norm), irreducible }))
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }

    pub fn is_known_irreducible(&self) -> bool {
        self.irreducible
    }
}

impl PartialEq for Factor {
    fn eq(&self, o: &Self) -> bool {
        Arc::ptr_eq(&self.poly, &o.poly) || self.poly == o.poly
    }
}
impl Eq for Factor {}
impl PartialOrd for Factor {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Factor {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        self.poly.cmp(&o.poly)
    }
}

impl fmt::Debug for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.poly)
    }
}

/// Sufficient test: some variable occurs to degree one and its two
/// coefficients share no factor.
fn looks_irreducible(f: &LaurentPoly) -> bool {
    let maxe = f.max_exps();
    for v in 0..f.context().nvars() {
        if maxe.0[v] != 1 {
            continue;
        }
        let cs = gcd::coeffs_in(f, v);
        if cs[1].len() == 1 || cs[0].len() == 1 {
            return true;
        }
        if cs[0].len() + cs[1].len() <= 12 && gcd::gcd(&cs[0], &cs[1]).as_constant().is_some() {
            return true;
        }
    }
    false
}

/// `num / ∏ factor^mult`, in lowest terms with respect to the stored factors.
#[derive(Clone)]
pub struct RationalFn {
    num: LaurentPoly,
    den: Vec<(Factor, u32)>,
}

/// Right-hand side of a substitution rule.
#[derive(Clone, Debug)]
pub enum Substitution {
    /// `v -> m · v`
    Scale(Monomial),
    /// `v -> v^{-1}`
    Invert,
    /// `v -> f`
    General(RationalFn),
}

impl RationalFn {
    pub fn zero(ctx: Context) -> Self {
        RationalFn { num: LaurentPoly::zero(ctx), den: Vec::new() }
    }

    pub fn one(ctx: Context) -> Self {
        Self::from_poly(LaurentPoly::one(ctx))
    }

    pub fn constant(ctx: Context, c: Scalar) -> Self {
        Self::from_poly(LaurentPoly::constant(ctx, c))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFn { num: p, den: Vec::new() }
    }

    pub fn var(ctx: Context, idx: usize) -> Self {
        Self::from_poly(LaurentPoly::var(ctx, idx))
    }

    pub fn named(ctx: Context, name: &str) -> Self {
        Self::from_poly(LaurentPoly::named(ctx, name))
    }

    /// `num / den` for an arbitrary nonzero polynomial `den`.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        num.check_ctx(&den)?;
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(Self::frac(num, &[den]))
    }

    /// `num / ∏ dens`. Passing the denominator already split into factors
    /// keeps later cancellation cheap.
    pub fn frac(num: LaurentPoly, dens: &[LaurentPoly]) -> Self {
        let mut num = num;
        let mut den: Vec<(Factor, u32)> = Vec::new();
        for d in dens {
            assert!(!d.is_zero(), "zero denominator factor");
            let (c, m, f) = Factor::from_poly(d);
            num = num.mul_term(&m.inv(), &c.inv().expect("nonzero"));
            if let Some(f) = f {
                insert_factor(&mut den, f, 1);
            }
        }
        let mut r = RationalFn { num, den };
        r.reduce();
        r
    }

    /// Raw constructor used when the parts are already normalized, e.g. when
    /// decoding JSON; no cancellation is attempted.
    pub(crate) fn from_parts_unreduced(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        num.check_ctx(&den)?;
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let (c, m, f) = Factor::from_poly(&den);
        let num = num.mul_term(&m.inv(), &c.inv()?);
        Ok(RationalFn { num, den: f.map(|f| vec![(f, 1)]).unwrap_or_default() })
    }

    pub fn context(&self) -> Context {
        self.num.context()
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    /// Expanded denominator; leading coefficient one and no monomial content.
    pub fn den(&self) -> LaurentPoly {
        let mut d = LaurentPoly::one(self.context());
        for (f, k) in &self.den {
            d = &d * &f.poly.pow(*k as i32).expect("non-negative power");
        }
        d
    }

    pub fn den_factors(&self) -> &[(Factor, u32)] {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_empty()
    }

    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.is_poly().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        if self.is_poly() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn is_one(&self) -> bool {
        self.is_poly() && self.num.is_one()
    }

    /// Trial-divides the numerator by each denominator factor, then runs the
    /// gcd pass when enabled.
    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let mut k = 0;
        while k < self.den.len() {
            while self.den[k].1 > 0 {
                match try_div(&self.num, &self.den[k].0) {
                    Some(q) => {
                        self.num = q;
                        self.den[k].1 -= 1;
                    }
                    None => break,
                }
            }
            k += 1;
        }
        self.den.retain(|(_, m)| *m > 0);
        if gcd_reduction_enabled() {
            self.reduce_gcd_pass();
        }
    }

    /// Full reduction: refines the denominator factors into a pairwise coprime
    /// set and cancels every gcd with the numerator. Afterwards numerator and
    /// denominator are coprime.
    pub fn reduce_full(&self) -> RationalFn {
        let mut r = self.clone();
        r.reduce_gcd_pass();
        r
    }

    fn reduce_gcd_pass(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        if self.den.iter().all(|(f, _)| f.irreducible) {
            return;
        }
        let mut queue = coprime_refine(std::mem::take(&mut self.den));
        let mut out: Vec<(Factor, u32)> = Vec::new();
        while let Some((f, mut k)) = queue.pop() {
            if f.irreducible {
                while k > 0 {
                    match try_div(&self.num, &f) {
                        Some(q) => {
                            self.num = q;
                            k -= 1;
                        }
                        None => break,
                    }
                }
                if k > 0 {
                    out.push((f, k));
                }
                continue;
            }
            let g = gcd::gcd(&self.num, &f.poly);
            if g.len() <= 1 {
                out.push((f, k));
                continue;
            }
            // f^k = g^k r^k with one power of g cancelled against the numerator
            self.num = self.num.exact_div(&g).expect("gcd divides");
            let r = f.poly.exact_div(&g).expect("gcd divides");
            for (piece, mult) in [(g, k - 1), (r, k)] {
                if mult == 0 {
                    continue;
                }
                let (c, m, pf) = Factor::from_poly(&piece);
                self.num = self.num.mul_term(&m.pow(-(mult as i32)), &c.pow(-(mult as i64)).expect("nonzero"));
                if let Some(pf) = pf {
                    queue.push((pf, mult));
                }
            }
        }
        let mut den = Vec::new();
        for (f, k) in out {
            insert_factor(&mut den, f, k);
        }
        self.den = coprime_refine(den);
    }

    pub fn try_add(&self, o: &RationalFn) -> Result<RationalFn> {
        self.num.check_ctx(&o.num)?;
        Ok(Self::sum(self.context(), [self.clone(), o.clone()]))
    }

    pub fn try_sub(&self, o: &RationalFn) -> Result<RationalFn> {
        self.num.check_ctx(&o.num)?;
        Ok(Self::sum(self.context(), [self.clone(), -o]))
    }

    pub fn try_mul(&self, o: &RationalFn) -> Result<RationalFn> {
        self.num.check_ctx(&o.num)?;
        if self.is_zero() || o.is_zero() {
            return Ok(RationalFn::zero(self.context()));
        }
        // cancel across before multiplying out
        let mut an = self.num.clone();
        let mut bn = o.num.clone();
        let mut aden = self.den.clone();
        let mut bden = o.den.clone();
        cancel_into(&mut an, &mut bden);
        cancel_into(&mut bn, &mut aden);
        let mut den = aden;
        for (f, k) in bden {
            insert_factor(&mut den, f, k);
        }
        den.retain(|(_, m)| *m > 0);
        let mut r = RationalFn { num: &an * &bn, den };
        if gcd_reduction_enabled() {
            r.reduce_gcd_pass();
        }
        Ok(r)
    }

    pub fn inv(&self) -> Result<RationalFn> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let (c, m, f) = Factor::from_poly(&self.num);
        let mut num = LaurentPoly::one(self.context());
        for (g, k) in &self.den {
            num = &num * &g.poly.pow(*k as i32).expect("non-negative");
        }
        num = num.mul_term(&m.inv(), &c.inv()?);
        let den = f.map(|f| vec![(f, 1)]).unwrap_or_default();
        let mut r = RationalFn { num, den };
        if gcd_reduction_enabled() {
            r.reduce_gcd_pass();
        }
        Ok(r)
    }

    pub fn try_div(&self, o: &RationalFn) -> Result<RationalFn> {
        self.try_mul(&o.inv()?)
    }

    pub fn pow(&self, k: i32) -> Result<RationalFn> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        if self.is_zero() {
            return Ok(if k == 0 { RationalFn::one(self.context()) } else { self.clone() });
        }
        Ok(RationalFn {
            num: self.num.pow(k)?,
            den: self.den.iter().filter(|_| k > 0).map(|(f, m)| (f.clone(), m * k as u32)).collect(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> RationalFn {
        if c.is_zero() {
            return RationalFn::zero(self.context());
        }
        RationalFn { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> RationalFn {
        if c.is_zero() {
            return RationalFn::zero(self.context());
        }
        RationalFn { num: self.num.mul_term(m, c), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> RationalFn {
        self.try_mul(&RationalFn::from_poly(p.clone())).expect("context")
    }

    /// Applies a monomial substitution to numerator and every factor.
    pub fn map_monomials(&self, map: &MonoMap) -> RationalFn {
        let keep_irreducible = map.is_unimodular();
        let mut num = self.num.map_monomials(map);
        let mut den: Vec<(Factor, u32)> = Vec::new();
        for (f, k) in &self.den {
            let img = f.poly.map_monomials(map);
            let (c, m, nf) = Factor::from_poly(&img);
            let k = *k as i32;
            num = num.mul_term(&m.pow(-k), &c.pow(-(k as i64)).expect("nonzero"));
            if let Some(mut nf) = nf {
                nf.irreducible |= keep_irreducible && f.irreducible;
                insert_factor(&mut den, nf, k as u32);
            }
        }
        let mut r = RationalFn { num, den };
        if !keep_irreducible {
            r.reduce();
        }
        r
    }

    /// Sum of many terms over the lcm of their denominators, reduced once.
    pub fn sum(ctx: Context, items: impl IntoIterator<Item = RationalFn>) -> RationalFn {
        let items: Vec<RationalFn> = items.into_iter().filter(|r| !r.is_zero()).collect();
        match items.len() {
            0 => return RationalFn::zero(ctx),
            1 => return items.into_iter().next().expect("one item"),
            _ => {}
        }
        let mut lcm: Vec<(Factor, u32)> = Vec::new();
        for it in &items {
            for (f, k) in &it.den {
                match lcm.binary_search_by(|(g, _)| g.cmp(f)) {
                    Ok(pos) => lcm[pos].1 = lcm[pos].1.max(*k),
                    Err(pos) => lcm.insert(pos, (f.clone(), *k)),
                }
            }
        }
        let mut pow_cache: HashMap<(usize, u32), LaurentPoly> = HashMap::new();
        let mut num = LaurentPoly::zero(ctx);
        for it in &items {
            let mut scaled = it.num.clone();
            for (idx, (f, k)) in lcm.iter().enumerate() {
                let have = it.den.iter().find(|(g, _)| g == f).map(|(_, m)| *m).unwrap_or(0);
                let need = k - have;
                if need > 0 {
                    let p = pow_cache.entry((idx, need)).or_insert_with(|| f.poly.pow(need as i32).expect("non-negative"));
                    scaled = &scaled * p;
                }
            }
            num = &num + &scaled;
        }
        let mut r = RationalFn { num, den: lcm };
        r.reduce();
        r
    }

    /// Equality by cross-multiplication: `f.num·g.den − g.num·f.den = 0`.
    pub fn eq_exact(&self, o: &RationalFn) -> bool {
        if self.context() != o.context() {
            return false;
        }
        let lhs = &self.num * &o.den();
        let rhs = &o.num * &self.den();
        lhs == rhs
    }

    /// General substitution; unspecified variables are left alone.
    pub fn substitute(&self, rules: &[(usize, Substitution)]) -> Result<RationalFn> {
        let n = poly_substitute(&self.num, rules)?;
        let mut d = RationalFn::one(self.context());
        for (f, k) in &self.den {
            let img = poly_substitute(&f.poly, rules)?;
            if img.is_zero() {
                return Err(Error::ZeroDivisor);
            }
            d = d.try_mul(&img.pow(*k as i32)?)?;
        }
        n.try_div(&d)
    }

    /// Applies `f` to every coefficient of numerator and denominator factors.
    /// Only meaningful for field automorphisms such as complex conjugation.
    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar + Copy) -> RationalFn {
        let dens: Vec<LaurentPoly> =
            self.den.iter().flat_map(|(g, k)| std::iter::repeat_n(g.poly.map_coeffs(f), *k as usize)).collect();
        RationalFn::frac(self.num.map_coeffs(f), &dens)
    }
}

fn insert_factor(den: &mut Vec<(Factor, u32)>, f: Factor, k: u32) {
    match den.binary_search_by(|(g, _)| g.cmp(&f)) {
        Ok(pos) => {
            den[pos].1 += k;
            den[pos].0.irreducible |= f.irreducible;
        }
        Err(pos) => den.insert(pos, (f, k)),
    }
}

/// Divides `num` by factors from `den` wherever possible, decrementing
/// multiplicities in place.
fn cancel_into(num: &mut LaurentPoly, den: &mut [(Factor, u32)]) {
    for (f, k) in den.iter_mut() {
        while *k > 0 {
            match try_div(num, f) {
                Some(q) => {
                    *num = q;
                    *k -= 1;
                }
                None => break,
            }
        }
    }
}

fn try_div(num: &LaurentPoly, f: &Factor) -> Option<LaurentPoly> {
    if num.len() < 2 {
        return None;
    }
    // quick degree-span filter
    let fmax = f.poly.max_exps();
    let nmin = num.min_exps();
    let nmax = num.max_exps();
    for v in 0..num.context().nvars() {
        if fmax.0[v] > nmax.0[v] - nmin.0[v] {
            return None;
        }
    }
    num.exact_div(&f.poly)
}

/// Refines a factor list into pairwise coprime factors (gcd-based).
fn coprime_refine(den: Vec<(Factor, u32)>) -> Vec<(Factor, u32)> {
    let mut work = den;
    'outer: loop {
        for i in 0..work.len() {
            for j in i + 1..work.len() {
                let (a, b) = (&work[i].0, &work[j].0);
                if a.irreducible && b.irreducible {
                    continue;
                }
                let g = gcd::gcd(&a.poly, &b.poly);
                if g.len() <= 1 {
                    continue;
                }
                let (fa, ka) = work[i].clone();
                let (fb, kb) = work[j].clone();
                let ra = fa.poly.exact_div(&g).expect("gcd divides");
                let rb = fb.poly.exact_div(&g).expect("gcd divides");
                work.remove(j);
                work.remove(i);
                let mut extra = Vec::new();
                for (p, k) in [(g, ka + kb), (ra, ka), (rb, kb)] {
                    let (_, _, f) = Factor::from_poly(&p);
                    if let Some(f) = f {
                        extra.push((f, k));
                    }
                }
                for (f, k) in extra {
                    insert_factor(&mut work, f, k);
                }
                continue 'outer;
            }
        }
        break;
    }
    work
}

/// Image of `p` under the substitution rules.
pub fn poly_substitute(p: &LaurentPoly, rules: &[(usize, Substitution)]) -> Result<RationalFn> {
    let ctx = p.context();
    let mut map = MonoMap::identity(ctx);
    let mut general: Vec<(usize, RationalFn)> = Vec::new();
    for (v, rule) in rules {
        match rule {
            Substitution::Scale(m) => map = map.scale(*v, *m),
            Substitution::Invert => map = map.invert(*v),
            Substitution::General(f) => {
                if f.context() != ctx {
                    return Err(Error::ContextMismatch(ctx, f.context()));
                }
                general.push((*v, f.clone()));
            }
        }
    }
    let mapped = p.map_monomials(&map);
    if general.is_empty() {
        return Ok(RationalFn::from_poly(mapped));
    }
    let mut cache: HashMap<(usize, i32), RationalFn> = HashMap::new();
    let mut parts = Vec::with_capacity(mapped.len());
    for (m, c) in mapped.terms() {
        let mut rest = *m;
        let mut acc = RationalFn::one(ctx);
        for (v, img) in &general {
            let e = m.0[*v];
            rest.0[*v] = 0;
            if e == 0 {
                continue;
            }
            let pw = match cache.get(&(*v, e)) {
                Some(p) => p.clone(),
                None => {
                    let pw = img.pow(e)?;
                    cache.insert((*v, e), pw.clone());
                    pw
                }
            };
            acc = acc.try_mul(&pw)?;
        }
        parts.push(acc.mul_term(&rest, c));
    }
    Ok(RationalFn::sum(ctx, parts))
}

impl PartialEq for RationalFn {
    fn eq(&self, o: &Self) -> bool {
        if self.context() != o.context() {
            return false;
        }
        if self.den.len() == o.den.len() && self.den.iter().zip(&o.den).all(|(a, b)| a.0 == b.0 && a.1 == b.1) {
            return self.num == o.num;
        }
        (self - o).is_zero()
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den())
        }
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) / {:?}", self.num, self.den)
    }
}

impl<'a> Add<&'a RationalFn> for &'a RationalFn {
    type Output = RationalFn;
    fn add(self, o: &RationalFn) -> RationalFn {
        self.try_add(o).expect("context mismatch")
    }
}

impl<'a> Sub<&'a RationalFn> for &'a RationalFn {
    type Output = RationalFn;
    fn sub(self, o: &RationalFn) -> RationalFn {
        self.try_sub(o).expect("context mismatch")
    }
}

impl<'a> Mul<&'a RationalFn> for &'a RationalFn {
    type Output = RationalFn;
    fn mul(self, o: &RationalFn) -> RationalFn {
        self.try_mul(o).expect("context mismatch")
    }
}

/// Panics on a zero divisor; use [`RationalFn::try_div`] for the fallible form.
impl<'a> Div<&'a RationalFn> for &'a RationalFn {
    type Output = RationalFn;
    fn div(self, o: &RationalFn) -> RationalFn {
        self.try_div(o).expect("zero divisor")
    }
}

impl Add for RationalFn {
    type Output = RationalFn;
    fn add(self, o: RationalFn) -> RationalFn {
        &self + &o
    }
}

impl Sub for RationalFn {
    type Output = RationalFn;
    fn sub(self, o: RationalFn) -> RationalFn {
        &self - &o
    }
}

impl Mul for RationalFn {
    type Output = RationalFn;
    fn mul(self, o: RationalFn) -> RationalFn {
        &self * &o
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn { num: -self.num, den: self.den }
    }
}

impl From<LaurentPoly> for RationalFn {
    fn from(p: LaurentPoly) -> Self {
        RationalFn::from_poly(p)
    }
}
