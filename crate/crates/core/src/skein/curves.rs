//! Operator images of named curves: explicit formulas and the route through
//! generator words and twist automorphisms.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::daha::{automorphism, word_ch, word_eval, Automorphism, Gen, GenPoly, Letter, Unit, Word};
use crate::error::{Error, Result};
use crate::exact::op_vars::{ch_mono, mono, poly, X};
use crate::exact::{Context, LaurentPoly, MonoMap, RationalFn, Scalar};
use crate::pi1::parse_twist_word;
use crate::qdiff::{ch, make_g, make_k, make_w, Operator, Sign};
use crate::report::{Check, Level, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CurveName {
    K1,
    K2,
    K3,
    K12,
    K23,
    K123,
    X,
    Z,
    B1,
    B2,
    K32,
}

impl CurveName {
    pub const ALL: [CurveName; 11] = [
        CurveName::K1,
        CurveName::K2,
        CurveName::K3,
        CurveName::K12,
        CurveName::K23,
        CurveName::K123,
        CurveName::X,
        CurveName::Z,
        CurveName::B1,
        CurveName::B2,
        CurveName::K32,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CurveName::K1 => "k1",
            CurveName::K2 => "k2",
            CurveName::K3 => "k3",
            CurveName::K12 => "k12",
            CurveName::K23 => "k23",
            CurveName::K123 => "k123",
            CurveName::X => "x",
            CurveName::Z => "z",
            CurveName::B1 => "b1",
            CurveName::B2 => "b2",
            CurveName::K32 => "k32",
        }
    }

    pub fn from_name(s: &str) -> Result<CurveName> {
        CurveName::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| Error::Unsupported(format!("unknown curve '{s}'")))
    }
}

impl fmt::Display for CurveName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A base curve followed by twists, the first listed twist applied first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CurveSpec {
    pub base: CurveName,
    pub twists: Vec<i8>,
}

impl CurveSpec {
    pub fn new(base: CurveName, twists: &[i8]) -> CurveSpec {
        CurveSpec { base, twists: twists.to_vec() }
    }

    pub fn plain(base: CurveName) -> CurveSpec {
        CurveSpec::new(base, &[])
    }

    pub fn parse(base: &str, twists: &str) -> Result<CurveSpec> {
        Ok(CurveSpec { base: CurveName::from_name(base)?, twists: parse_twist_word(twists)? })
    }

    /// Rewrites twisted forms of the named curves into their names, e.g.
    /// `k1` twisted by `2` is `k12`.
    fn canonical(&self) -> CurveSpec {
        use CurveName::*;
        let t = self.twists.as_slice();
        let (base, rest): (CurveName, &[i8]) = match (self.base, t) {
            (K1, [2, 3, -1, -2, r @ ..]) => (Z, r),
            (K1, [2, 3, r @ ..]) => (K123, r),
            (K12, [3, r @ ..]) => (K123, r),
            (K123, [-1, -2, r @ ..]) => (Z, r),
            (K2, [3, r @ ..]) => (K23, r),
            (K3, [2]) => (K32, &[]),
            _ => (self.base, t),
        };
        CurveSpec { base, twists: rest.to_vec() }
    }
}

impl fmt::Display for CurveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twists.is_empty() {
            return write!(f, "{}", self.base);
        }
        let t: Vec<String> = self.twists.iter().map(|x| x.to_string()).collect();
        write!(f, "{}[{}]", self.base, t.join(","))
    }
}

const CTX: Context = Context::Operator;

fn fop(r: RationalFn) -> Operator {
    Operator::mul_by(r)
}

fn pop(p: LaurentPoly) -> Operator {
    Operator::mul_by_poly(p)
}

fn ui(c: Scalar, u: i32) -> RationalFn {
    RationalFn::from_poly(crate::exact::op_vars::cmono(c, [u, 0, 0, 0, 0]))
}

fn invert_x() -> MonoMap {
    MonoMap::identity(CTX).invert(X)
}

/// `Σ_ε W(x^ε) (c_ε ð^ε - 1) - ch(q^{-1/2} b1 x0)` with `c_+ = u^k x^j`,
/// `c_- = u^k x^{-j}`; `(k, j) = (0, 0)` for `k3` and `(2, 1)` for `z`.
fn askey_wilson(k: i32, j: i32) -> Operator {
    let mut acc = &Operator::zero() - &ch([-2, 0, 1, 1, 0]);
    for (sign, e) in [(Sign::Plus, 1), (Sign::Minus, -1)] {
        let w = make_w(sign);
        let shift = &pop(mono(1, [k, e * j, 0, 0, 0])) * &Operator::dx(e);
        acc = &acc + &(&fop(w) * &(&shift - &Operator::identity()));
    }
    acc
}

/// `i Σ_ε W(x^ε) f(x^ε) K_n(x0; x^ε) ð^ε + i c G_m` with
/// `f = u^a x0 x^j/(u^2 x + x0^2)` and
/// `c = u^b (b1+b2)(1+b1 b2) x / (b1 b2 (u^2 - x)(1 - u^2 x))`.
fn twisted_askey_wilson(a: i32, j: i32, n: i32, b: i32, m: i32) -> Operator {
    let i = Scalar::i();
    let front = RationalFn::frac(mono(1, [a, j, 1, 0, 0]), &[poly(&[(1, [2, 1, 0, 0, 0]), (1, [0, 0, 2, 0, 0])])]);
    let core = &(&fop(make_w(Sign::Plus)) * &fop(front)) * &make_k(n);
    let mut acc = &core * &Operator::dx(1);
    acc = &acc + &(&core.map_coeffs(&invert_x()) * &Operator::dx(-1));
    let num = &(&poly(&[(1, [b, 1, 0, 1, 0]), (1, [b, 1, 0, 0, 1])]) * &poly(&[(1, [0; 5]), (1, [0, 0, 0, 1, 1])]))
        * &LaurentPoly::one(CTX);
    let c = RationalFn::frac(
        num,
        &[
            mono(1, [0, 0, 0, 1, 1]),
            poly(&[(1, [2, 0, 0, 0, 0]), (-1, [0, 1, 0, 0, 0])]),
            poly(&[(1, [0; 5]), (-1, [2, 1, 0, 0, 0])]),
        ],
    );
    (&acc + &(&fop(c) * &make_g(m))).scale(&i)
}

/// Explicit operator for an untwisted dictionary curve.
fn named_operator(c: CurveName) -> Operator {
    let i = Scalar::i();
    match c {
        CurveName::K1 => ch([0, 0, 1, 0, 0]),
        CurveName::K2 => make_g(0).scale_by(&ui(i, -1)),
        CurveName::K3 => askey_wilson(0, 0),
        CurveName::X => ch([0, 1, 0, 0, 0]),
        CurveName::B1 => ch([0, 0, 0, 1, 0]),
        CurveName::B2 => ch([0, 0, 0, 0, 1]),
        CurveName::K12 => make_g(-1).scale(&i),
        CurveName::Z => askey_wilson(2, 1),
        CurveName::K23 => twisted_askey_wilson(0, 1, 1, 0, 1),
        CurveName::K123 => twisted_askey_wilson(1, 1, 0, 1, 0),
        CurveName::K32 => twisted_askey_wilson(0, 0, -1, 2, -1),
    }
}

fn named_cache() -> &'static Mutex<HashMap<CurveName, Operator>> {
    static CACHE: OnceLock<Mutex<HashMap<CurveName, Operator>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Explicit operator of an untwisted curve, memoized.
pub fn dictionary(c: CurveName) -> Operator {
    if let Some(op) = named_cache().lock().expect("cache lock").get(&c) {
        return op.clone();
    }
    let op = named_operator(c);
    named_cache().lock().expect("cache lock").insert(c, op.clone());
    op
}

fn unit(c: Scalar, u: i32, gens: &[(Letter, i32)]) -> GenPoly {
    GenPoly::from_unit(Unit::scaled(c, u, Word::from_gens(gens.iter().map(|&(l, p)| Gen::new(l, p)))))
}

/// Word for an untwisted curve, and whether it represents the curve only
/// after right multiplication by the idempotent.
pub fn base_word(c: CurveName) -> Result<(GenPoly, bool)> {
    use Letter::*;
    let one = Scalar::one();
    let i = Scalar::i();
    let chw = |g: GenPoly| word_ch(&g).expect("unit");
    Ok(match c {
        CurveName::K1 => (chw(unit(i, 0, &[(T0, 1)])), false),
        CurveName::K2 => (chw(unit(i, 0, &[(U0, 1)])), false),
        CurveName::K3 => (chw(unit(one, 0, &[(T1, 1), (T0, 1)])), true),
        CurveName::K12 => (chw(unit(-one, -1, &[(U0, 1), (T0, 1)])), true),
        CurveName::K23 => (chw(unit(i, -1, &[(T1, -1), (T0, -1), (U0, 1)])), true),
        CurveName::K123 => (chw(unit(one, 2, &[(T1, -1), (X, -1), (U0, 1)])), true),
        CurveName::Z => (chw(unit(one, 2, &[(T1, -1), (X, -1), (T0, 1)])), true),
        CurveName::K32 => (automorphism(2, 1)?.apply(&chw(unit(one, 0, &[(T1, 1), (T0, 1)]))), true),
        CurveName::X => (chw(unit(one, 0, &[(X, 1)])), false),
        CurveName::B1 => (GenPoly::constant(RationalFn::from_poly(ch_mono([0, 0, 0, 1, 0])))?, false),
        CurveName::B2 => (GenPoly::constant(RationalFn::from_poly(ch_mono([0, 0, 0, 0, 1])))?, false),
    })
}

/// Composite automorphism for a twist list, first listed applied first.
pub fn twist_automorphism(twists: &[i8]) -> Result<Automorphism> {
    let mut a = Automorphism::identity();
    for &t in twists {
        a = automorphism(t.unsigned_abs(), t.signum())?.compose(&a);
    }
    Ok(a)
}

/// Generator word for a twisted curve and whether it holds only e-sided.
pub fn curve_word(c: &CurveSpec) -> Result<(GenPoly, bool)> {
    let (w, e) = base_word(c.base)?;
    Ok((twist_automorphism(&c.twists)?.apply(&w), e))
}

/// Operator through the word route.
pub fn word_route(c: &CurveSpec) -> Result<(Operator, bool)> {
    let (w, e) = curve_word(c)?;
    Ok((word_eval(&w), e))
}

/// Explicit closed form, when the curve is in the dictionary or belongs to
/// one of the closed-form families.
pub fn explicit(c: &CurveSpec) -> Option<Operator> {
    use super::families as fam;
    use CurveName::*;
    let c = c.canonical();
    let t = c.twists.as_slice();
    if t.is_empty() {
        return Some(dictionary(c.base));
    }
    let all = |v: i8| t.iter().all(|&x| x == v);
    let n = t.len() as i32;
    let torus_type = t.len() >= 2 && t[..2] == [2, 2] && t[2..].iter().all(|&x| x == -1);
    match c.base {
        K2 if all(1) => Some(fam::k2_1n(n)),
        K2 if all(-1) => Some(fam::k2_1n(-n)),
        K1 if all(2) => Some(fam::k1_2n(n)),
        K1 if all(-2) => Some(fam::k1_2n(-n)),
        K3 if all(2) => Some(fam::k3_2n(n)),
        K3 if all(-2) => Some(fam::k3_2n(-n)),
        K1 if torus_type => Some(fam::k1_2_2_1n(n - 2)),
        K3 if torus_type => Some(fam::k3_2_2_1n(n - 2)),
        _ => None,
    }
}

/// Operator image of a curve: the explicit formula when one exists,
/// otherwise the word route.
pub fn curve_operator(c: &CurveSpec) -> Result<Operator> {
    if let Some(op) = explicit(c) {
        return Ok(op);
    }
    Ok(word_route(c)?.0)
}

/// Explicit operators of `k1, k2, k3, k12, k23, k123, z` against their
/// `ch`-forms and, where one exists, the twist image of an earlier curve.
/// `k1` and `k2` are compared plain, the rest after the idempotent.
pub fn verify_curve_images() -> Report {
    use super::families::equality_check;
    use rayon::prelude::*;
    use CurveName::{K1, K12, K123, K2, K23, K3, Z};
    use Letter::*;
    let one = Scalar::one();
    let i = Scalar::i();
    let chw = |g: GenPoly| word_ch(&g).expect("unit");
    let ch_k12 = chw(unit(-one.clone(), -1, &[(U0, 1), (T0, 1)]));
    let ch_k123 = chw(unit(one.clone(), 2, &[(T1, -1), (X, -1), (U0, 1)]));
    let image = |twists: &[i8], w: &GenPoly| twist_automorphism(twists).expect("valid twists").apply(w);
    let cases: Vec<(String, CurveName, GenPoly, Level)> = vec![
        ("k1/ch".into(), K1, chw(unit(i.clone(), 0, &[(T0, 1)])), Level::Plain),
        ("k2/ch".into(), K2, chw(unit(i.clone(), 0, &[(U0, 1)])), Level::Plain),
        ("k3/ch_T1T0".into(), K3, chw(unit(one.clone(), 0, &[(T1, 1), (T0, 1)])), Level::ESided),
        ("k3/ch_T0T1".into(), K3, chw(unit(one.clone(), 0, &[(T0, 1), (T1, 1)])), Level::ESided),
        ("k12/twist_image".into(), K12, image(&[2], &chw(unit(i.clone(), 0, &[(T0, 1)]))), Level::ESided),
        ("k12/ch".into(), K12, ch_k12.clone(), Level::ESided),
        ("k23/twist_image".into(), K23, image(&[3], &chw(unit(i.clone(), 0, &[(U0, 1)]))), Level::ESided),
        ("k23/ch".into(), K23, chw(unit(i.clone(), -1, &[(T1, -1), (T0, -1), (U0, 1)])), Level::ESided),
        ("k123/twist_image".into(), K123, image(&[3], &ch_k12), Level::ESided),
        ("k123/ch".into(), K123, ch_k123.clone(), Level::ESided),
        ("z/twist_image".into(), Z, image(&[-1, -2], &ch_k123), Level::ESided),
        ("z/ch".into(), Z, chw(unit(one.clone(), 2, &[(T1, -1), (X, -1), (T0, 1)])), Level::ESided),
    ];
    let mut checks: Vec<Check> = cases
        .into_par_iter()
        .map(|(id, c, w, level)| Check::timed(|| equality_check(format!("images/{id}"), &word_eval(&w), &dictionary(c), level)))
        .collect();
    checks.push(Check::timed(|| {
        let w = chw(unit(one, 0, &[(T1, 1), (T0, 1)]));
        let mut c = equality_check("images/negative/k1_vs_ch_T1T0".into(), &word_eval(&w), &dictionary(K1), Level::ESided);
        c.pass = c.level == Level::Neither;
        c.with_detail("negative control")
    }));
    Report::new(checks)
}
