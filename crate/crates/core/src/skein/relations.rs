//! Skein relation catalog with symbolic `A`, specialized to `A = q^{-1/4}`
//! when checked against the operator images.

use rayon::prelude::*;

use super::curves::{dictionary, word_route, CurveName, CurveSpec};
use super::families::{compare, equality_check, k2_1n};
use crate::error::{Error, Result};
use crate::exact::op_vars::mono;
use crate::exact::RationalFn;
use crate::qdiff::Operator;
use crate::report::{Check, Level, Report};

/// Laurent polynomial in `A` as `(coefficient, exponent)` pairs.
pub type APoly = Vec<(i64, i32)>;

/// One term `coeff(A) · c_1 c_2 ⋯` with curves multiplied in print order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: APoly,
    pub curves: Vec<CurveName>,
}

fn t(coeff: &[(i64, i32)], curves: &[CurveName]) -> Term {
    Term { coeff: coeff.to_vec(), curves: curves.to_vec() }
}

/// An equation `lhs = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub lhs: Vec<Term>,
    pub rhs: Vec<Term>,
}

/// Named relations of the two presentations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelationId {
    Kk11,
    QCharacter11,
    Kk04_1,
    Kk04_2,
    Kk04_3,
    QCharacter04,
    PrzytyckiRel1,
    PrzytyckiRel2,
    PrzytyckiRel3,
    PrzytyckiRel4,
    CommuteK1K3,
    CommuteK2K123,
    Product,
    CoupledMarkov,
}

impl RelationId {
    pub const ALL: [RelationId; 14] = [
        RelationId::Kk11,
        RelationId::QCharacter11,
        RelationId::Kk04_1,
        RelationId::Kk04_2,
        RelationId::Kk04_3,
        RelationId::QCharacter04,
        RelationId::PrzytyckiRel1,
        RelationId::PrzytyckiRel2,
        RelationId::PrzytyckiRel3,
        RelationId::PrzytyckiRel4,
        RelationId::CommuteK1K3,
        RelationId::CommuteK2K123,
        RelationId::Product,
        RelationId::CoupledMarkov,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RelationId::Kk11 => "kk_11",
            RelationId::QCharacter11 => "q_character_11",
            RelationId::Kk04_1 => "kk_04_1",
            RelationId::Kk04_2 => "kk_04_2",
            RelationId::Kk04_3 => "kk_04_3",
            RelationId::QCharacter04 => "q_character_04",
            RelationId::PrzytyckiRel1 => "przytycki_rel_1",
            RelationId::PrzytyckiRel2 => "przytycki_rel_2",
            RelationId::PrzytyckiRel3 => "przytycki_rel_3",
            RelationId::PrzytyckiRel4 => "przytycki_rel_4",
            RelationId::CommuteK1K3 => "commute_k1_k3",
            RelationId::CommuteK2K123 => "commute_k2_k123",
            RelationId::Product => "product_k23_k12",
            RelationId::CoupledMarkov => "coupled_markov",
        }
    }

    pub fn from_name(s: &str) -> Result<RelationId> {
        RelationId::ALL.into_iter().find(|r| r.name() == s).ok_or_else(|| Error::Unsupported(format!("unknown relation '{s}'")))
    }

    /// Level at which the relation is asserted.
    pub fn designated(self) -> Level {
        use RelationId::*;
        match self {
            Kk11 | QCharacter11 | Kk04_1 | Kk04_2 | Kk04_3 | QCharacter04 => Level::Plain,
            _ => Level::ESided,
        }
    }

    /// The equations making up the relation.
    pub fn equations(self) -> Vec<Equation> {
        use CurveName::*;
        use RelationId::*;
        let a4 = [(1, 4), (-1, -4)];
        let a2 = [(1, 2), (-1, -2)];
        match self {
            Kk11 | PrzytyckiRel1 => rel([K1, K2, K12]),
            PrzytyckiRel2 => rel([K12, K3, K123]),
            PrzytyckiRel3 => rel([K2, K3, K23]),
            PrzytyckiRel4 => rel([K1, K23, K123]),
            QCharacter11 => vec![Equation {
                lhs: vec![t(&[(1, 0)], &[X])],
                rhs: vec![
                    t(&[(1, 1)], &[K1, K2, K12]),
                    t(&[(-1, 2)], &[K1, K1]),
                    t(&[(-1, -2)], &[K2, K2]),
                    t(&[(-1, 2)], &[K12, K12]),
                    t(&[(1, 2), (1, -2)], &[]),
                ],
            }],
            Kk04_1 | Kk04_2 | Kk04_3 => {
                let (a, b, c, extra): (_, _, _, Vec<Term>) = match self {
                    Kk04_1 => (X, K3, Z, vec![t(&a2, &[B1, K1]), t(&a2, &[B2, K1])]),
                    Kk04_2 => (K3, Z, X, vec![t(&a2, &[B1, B2]), t(&a2, &[K1, K1])]),
                    _ => (Z, X, K3, vec![t(&a2, &[B1, K1]), t(&a2, &[B2, K1])]),
                };
                let mut rhs = vec![t(&a4, &[c])];
                rhs.extend(extra);
                vec![Equation { lhs: vec![t(&[(1, 2)], &[a, b]), t(&[(-1, -2)], &[b, a])], rhs }]
            }
            QCharacter04 => vec![Equation {
                lhs: vec![t(&[(1, 2)], &[X, K3, Z])],
                rhs: vec![
                    t(&[(1, 4)], &[X, X]),
                    t(&[(1, -4)], &[K3, K3]),
                    t(&[(1, 4)], &[Z, Z]),
                    t(&[(1, 2)], &[K1, K1, X]),
                    t(&[(1, 2)], &[B1, B2, X]),
                    t(&[(1, -2)], &[B1, K1, K3]),
                    t(&[(1, -2)], &[B2, K1, K3]),
                    t(&[(1, 2)], &[B1, K1, Z]),
                    t(&[(1, 2)], &[B2, K1, Z]),
                    t(&[(2, 0)], &[K1, K1]),
                    t(&[(1, 0)], &[B1, B1]),
                    t(&[(1, 0)], &[B2, B2]),
                    t(&[(1, 0)], &[K1, K1, B1, B2]),
                    t(&[(-1, 4), (-2, 0), (-1, -4)], &[]),
                ],
            }],
            CommuteK1K3 => commute(K1, K3),
            CommuteK2K123 => commute(K2, K123),
            Product => vec![Equation {
                lhs: vec![t(&[(1, 0)], &[K23, K12])],
                rhs: vec![t(&[(1, 2)], &[K1, K3]), t(&[(1, -2)], &[K2, K123]), t(&[(1, 0)], &[B1]), t(&[(1, 0)], &[B2])],
            }],
            CoupledMarkov => vec![Equation {
                lhs: vec![
                    t(&[(1, 0)], &[K1, K3, K2, K123]),
                    t(&[(1, 4)], &[K1, K1]),
                    t(&[(1, 0)], &[K2, K2]),
                    t(&[(1, -4)], &[K3, K3]),
                    t(&[(1, 4)], &[K123, K123]),
                    t(&[(1, 4)], &[K12, K12]),
                    t(&[(1, -4)], &[K23, K23]),
                ],
                rhs: vec![
                    t(&[(1, 3)], &[K1, K2, K12]),
                    t(&[(1, 3)], &[K12, K3, K123]),
                    t(&[(1, -3)], &[K3, K2, K23]),
                    t(&[(1, -1)], &[K1, K23, K123]),
                    t(&[(1, 0)], &[B1, B2]),
                    t(&[(1, 4), (2, 0), (1, -4)], &[]),
                ],
            }],
        }
    }
}

/// `A x_i x_{i+1} - A^{-1} x_{i+1} x_i = (A^2 - A^{-2}) x_{i+2}` for
/// `i = 0, 1, 2` modulo 3.
fn rel(x: [CurveName; 3]) -> Vec<Equation> {
    (0..3)
        .map(|i| {
            let (a, b, c) = (x[i], x[(i + 1) % 3], x[(i + 2) % 3]);
            Equation { lhs: vec![t(&[(1, 1)], &[a, b]), t(&[(-1, -1)], &[b, a])], rhs: vec![t(&[(1, 2), (-1, -2)], &[c])] }
        })
        .collect()
}

fn commute(a: CurveName, b: CurveName) -> Vec<Equation> {
    vec![Equation { lhs: vec![t(&[(1, 0)], &[a, b])], rhs: vec![t(&[(1, 0)], &[b, a])] }]
}

/// How the symbolic `A` is specialized.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Specialization {
    /// `A = q^{-1/4}`.
    Standard,
    /// `A = q^{-1/2}`, a deliberately wrong value.
    Squared,
}

fn a_value(p: &APoly, s: Specialization) -> RationalFn {
    let k = match s {
        Specialization::Standard => -1,
        Specialization::Squared => -2,
    };
    RationalFn::sum(crate::exact::Context::Operator, p.iter().map(|&(c, e)| RationalFn::from_poly(mono(c, [k * e, 0, 0, 0, 0]))))
}

fn term_operator(term: &Term, s: Specialization) -> Operator {
    let mut op = Operator::identity();
    for &c in &term.curves {
        op = &op * &dictionary(c);
    }
    op.scale_by(&a_value(&term.coeff, s))
}

impl Equation {
    /// `lhs - rhs` under the operator images.
    pub fn residual(&self, s: Specialization) -> Operator {
        let side = |ts: &[Term]| ts.iter().fold(Operator::zero(), |acc, t| &acc + &term_operator(t, s));
        &side(&self.lhs) - &side(&self.rhs)
    }

    /// Whether any coefficient depends on `A`.
    pub fn depends_on_a(&self) -> bool {
        self.lhs.iter().chain(&self.rhs).any(|t| t.coeff.iter().any(|&(_, e)| e != 0))
    }

    /// Copy with the constant `1` added to the coefficient of the first term.
    pub fn perturbed(&self) -> Equation {
        let mut e = self.clone();
        e.lhs[0].coeff.push((1, 0));
        e
    }
}

fn level_of(residual: &Operator) -> (Level, usize) {
    compare(residual, &Operator::zero())
}

fn relation_check(id: String, eq: &Equation, s: Specialization, designated: Level) -> Check {
    Check::timed(|| {
        let (level, residual) = level_of(&eq.residual(s));
        Check::new(id, level, level <= designated, residual)
    })
}

/// Checks every equation of `r`, one report entry per equation.
pub fn verify_relation(r: RelationId) -> Report {
    let eqs = r.equations();
    let single = eqs.len() == 1;
    let checks = eqs
        .par_iter()
        .enumerate()
        .map(|(i, eq)| {
            let id = if single { r.name().to_string() } else { format!("{}/{}", r.name(), i) };
            relation_check(id, eq, Specialization::Standard, r.designated())
        })
        .collect();
    Report::new(checks)
}

/// Negative controls: every equation of `r` with one coefficient shifted by
/// one, and with `A` replaced by `A^2` when the equation involves `A`. Each entry passes when the perturbed
/// relation fails at every level.
pub fn verify_negative_controls(r: RelationId) -> Report {
    let eqs = r.equations();
    let checks = eqs
        .par_iter()
        .enumerate()
        .flat_map(|(i, eq)| {
            let shifted = level_of(&eq.perturbed().residual(Specialization::Standard));
            let mut out =
                vec![Check::new(format!("{}/{}/coeff_plus_one", r.name(), i), shifted.0, shifted.0 == Level::Neither, shifted.1)];
            if eq.depends_on_a() {
                let squared = level_of(&eq.residual(Specialization::Squared));
                out.push(Check::new(format!("{}/{}/a_squared", r.name(), i), squared.0, squared.0 == Level::Neither, squared.1));
            }
            out
        })
        .collect();
    Report::new(checks)
}

/// Every relation of both presentations.
pub fn verify_all_relations() -> Report {
    let mut out = Report::new(Vec::new());
    for r in RelationId::ALL {
        out.extend(verify_relation(r));
    }
    out
}

/// `k1 k_{2,1^n} = A k_{2,1^{n-1}} + A^{-1} k_{2,1^{n+1}}` and
/// `k_{2,1^n} k1 = A^{-1} k_{2,1^{n-1}} + A k_{2,1^{n+1}}` as residuals.
pub fn k1_k2_1n_residuals(n: i32) -> [Operator; 2] {
    let k1 = dictionary(CurveName::K1);
    let a = RationalFn::from_poly(mono(1, [-1, 0, 0, 0, 0]));
    let ai = RationalFn::from_poly(mono(1, [1, 0, 0, 0, 0]));
    let left = &(&k1 * &k2_1n(n)) - &(&k2_1n(n - 1).scale_by(&a) + &k2_1n(n + 1).scale_by(&ai));
    let right = &(&k2_1n(n) * &k1) - &(&k2_1n(n - 1).scale_by(&ai) + &k2_1n(n + 1).scale_by(&a));
    [left, right]
}

/// The two relations above for each `n`.
pub fn verify_k1_k2_1n(ns: impl IntoIterator<Item = i32>) -> Report {
    let mut checks = Vec::new();
    for n in ns {
        for (k, res) in k1_k2_1n_residuals(n).iter().enumerate() {
            let side = if k == 0 { "left" } else { "right" };
            let (level, size) = compare(res, &Operator::zero());
            checks.push(Check::new(format!("k1_k2_1n/n={n}/{side}"), level, level == Level::Plain, size));
        }
    }
    Report::new(checks)
}

/// Curve pairs meeting exactly once, with their untwisted names.
fn once_intersecting(x: CurveName, y: CurveName) -> bool {
    use CurveName::*;
    let pairs = [(K1, K2), (K2, K3), (K1, K12), (K2, K12), (K12, K3), (K1, K23), (K2, K23), (K3, K23), (K1, K123), (K3, K123)];
    pairs.contains(&(x, y)) || pairs.contains(&(y, x))
}

/// Twist index that acts as the twist along `x`, when one exists.
fn twist_index(x: CurveName) -> Option<i8> {
    match x {
        CurveName::K1 => Some(1),
        CurveName::K2 => Some(2),
        CurveName::K3 => Some(3),
        _ => None,
    }
}

/// `(A^{±1} x y - A^{∓1} y x) / (A^{±2} - A^{∓2})` at `A = q^{-1/4}`.
pub fn twist_combination(x: CurveName, y: CurveName, sign: i8) -> Operator {
    let s = sign.signum() as i32;
    let au = |e: i32| RationalFn::from_poly(mono(1, [-e, 0, 0, 0, 0]));
    let num = &(&dictionary(x) * &dictionary(y)).scale_by(&au(s)) - &(&dictionary(y) * &dictionary(x)).scale_by(&au(-s));
    let den = &au(2 * s) - &au(-2 * s);
    num.scale_by(&den.inv().expect("nonzero"))
}

/// Compares the twist of `y` along `x` (both signs) with the commutator
/// combination, reporting which sign of the combination each twist matches.
pub fn twist_formula_check(x: CurveName, y: CurveName) -> Result<Report> {
    if !once_intersecting(x, y) {
        return Err(Error::Unsupported(format!("{x} and {y} do not meet exactly once")));
    }
    let idx = twist_index(x).ok_or_else(|| Error::Unsupported(format!("no twist automorphism along {x}")))?;
    let mut checks = Vec::new();
    for twist_sign in [1i8, -1] {
        let (route, _) = word_route(&CurveSpec::new(y, &[twist_sign * idx]))?;
        for formula_sign in [1i8, -1] {
            let combo = twist_combination(x, y, formula_sign);
            let matches = twist_sign != formula_sign;
            let mut c = equality_check(
                format!("twist/{x}/{y}/twist{twist_sign:+}/formula{formula_sign:+}"),
                &route,
                &combo,
                Level::ESided,
            );
            if !matches {
                c.pass = c.level == Level::Neither;
            }
            checks.push(c.with_detail(if matches { "expected equal" } else { "expected different" }));
        }
    }
    Ok(Report::new(checks))
}

/// Word route against the explicit formula for every curve that has both.
pub fn verify_dictionary_routes() -> Report {
    use CurveName::*;
    let checks = [K1, K2, K3, K12, K23, K123, Z, X, B1, B2, K32]
        .par_iter()
        .map(|&c| {
            Check::timed(|| {
                let (route, e_sided) = word_route(&CurveSpec::plain(c)).expect("valid curve");
                let level = if e_sided { Level::ESided } else { Level::Plain };
                equality_check(format!("route/{c}"), &route, &dictionary(c), level)
            })
        })
        .collect();
    Report::new(checks)
}
