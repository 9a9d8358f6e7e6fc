//! Identity checks of the classical model.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{poly_substitute, Context, LaurentPoly, RationalFn, Scalar, Substitution};
use crate::report::{Check, Level, Report};

use super::seed::{dehn_cl, dehn_cl_steps, Seed, Step, N};
use super::trace::{classical_twist_word, kvars::*, poisson_bracket, trace_of, trace_under_y_map, trace_var};

const K: Context = Context::KRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClusterIdentity {
    PoissonSuite,
    MarkovReduction,
    MutationInducesTwist,
    TwistRelations,
    Loop30,
}

impl ClusterIdentity {
    pub const ALL: [ClusterIdentity; 5] = [
        ClusterIdentity::PoissonSuite,
        ClusterIdentity::MarkovReduction,
        ClusterIdentity::MutationInducesTwist,
        ClusterIdentity::TwistRelations,
        ClusterIdentity::Loop30,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClusterIdentity::PoissonSuite => "poisson_suite",
            ClusterIdentity::MarkovReduction => "markov_reduction",
            ClusterIdentity::MutationInducesTwist => "mutation_induces_twist",
            ClusterIdentity::TwistRelations => "twist_relations",
            ClusterIdentity::Loop30 => "loop30",
        }
    }

    pub fn from_name(s: &str) -> Result<ClusterIdentity> {
        ClusterIdentity::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown cluster identity '{s}'")))
    }
}

pub fn verify_cluster_identity(id: ClusterIdentity) -> Report {
    match id {
        ClusterIdentity::PoissonSuite => poisson_suite(),
        ClusterIdentity::MarkovReduction => markov_reduction(),
        ClusterIdentity::MutationInducesTwist => mutation_induces_twist(),
        ClusterIdentity::TwistRelations => twist_relations(),
        ClusterIdentity::Loop30 => loop30(),
    }
}

pub fn verify_cluster() -> Report {
    let mut r = Report::new(Vec::new());
    for id in ClusterIdentity::ALL {
        r.extend(verify_cluster_identity(id));
    }
    r
}

fn zero_check(id: String, residual: &RationalFn) -> Check {
    let zero = residual.is_zero();
    Check::new(id, if zero { Level::Plain } else { Level::Neither }, zero, residual.num().len())
}

fn k(v: usize) -> LaurentPoly {
    LaurentPoly::var(K, v)
}

fn kc(c: i64) -> LaurentPoly {
    LaurentPoly::constant(K, Scalar::from_int(c))
}

fn tr(v: usize) -> RationalFn {
    RationalFn::from_poly(trace_var(v))
}

/// Classical relations among the traces of the curves.
pub fn poisson_suite() -> Report {
    let half = Scalar::from_ratio(1, 2);
    let mut items: Vec<(String, RationalFn)> = Vec::new();
    let triples = [
        ("k1,k2,k12", [K1, K2, K12]),
        ("k12,k3,k123", [K12, K3, K123]),
        ("k2,k3,k23", [K2, K3, K23]),
        ("k1,k23,k123", [K1, K23, K123]),
    ];
    for (name, x) in triples {
        for i in 0..3 {
            let (a, b, c) = (tr(x[i]), tr(x[(i + 1) % 3]), tr(x[(i + 2) % 3]));
            let rhs = &(&a * &b).scale(&half) - &c;
            items.push((format!("poisson_suite/rel/{name}/{i}"), &poisson_bracket(&a, &b) - &rhs));
        }
    }
    items.push(("poisson_suite/bracket_k1_k3".into(), poisson_bracket(&tr(K1), &tr(K3))));
    items.push(("poisson_suite/bracket_k2_k123".into(), poisson_bracket(&tr(K2), &tr(K123))));
    let rhs = &(&tr(K1) * &tr(K3)) - &(&tr(K2) * &tr(K123));
    items.push(("poisson_suite/bracket_k12_k23".into(), &poisson_bracket(&tr(K12), &tr(K23)) - &rhs));
    items.push(("poisson_suite/product".into(), trace_of(&product_relation())));
    items.push(("poisson_suite/coupled_markov".into(), trace_of(&coupled_markov())));
    for b in [B1, B2] {
        for v in [K1, K2, K3, K12, K23, K123] {
            items.push((
                format!("poisson_suite/central/b{}/{}", b - 5, super::trace::TRACE_CURVES[v]),
                poisson_bracket(&tr(b), &tr(v)),
            ));
        }
    }
    let mut checks: Vec<Check> = items.into_par_iter().map(|(id, r)| zero_check(id, &r)).collect();
    let (a, b, c) = (tr(K1), tr(K2), tr(K12));
    let flipped = &poisson_bracket(&a, &b) + &(&(&a * &b).scale(&half) - &c);
    let shifted = trace_of(&(&coupled_markov() + &kc(1)));
    for (id, r) in [("poisson_suite/negative/bracket_sign", flipped), ("poisson_suite/negative/coupled_markov_plus_one", shifted)]
    {
        let mut ch = zero_check(id.into(), &r);
        ch.pass = !ch.pass;
        checks.push(ch.with_detail("negative control"));
    }
    Report::new(checks)
}

/// `k12 k23 - k1 k3 - k2 k123 - b1 - b2`.
pub fn product_relation() -> LaurentPoly {
    &(&(&(&k(K12) * &k(K23)) - &(&k(K1) * &k(K3))) - &(&k(K2) * &k(K123))) - &(&k(B1) + &k(B2))
}

/// Coupled Markov relation as `lhs - rhs`.
pub fn coupled_markov() -> LaurentPoly {
    let sq = |v: usize| &k(v) * &k(v);
    let mut lhs = &(&(&k(K1) * &k(K2)) * &k(K3)) * &k(K123);
    for v in [K1, K2, K3, K12, K23, K123] {
        lhs = &lhs + &sq(v);
    }
    let rhs = &(&(&(&(&k(K1) * &k(K2)) + &(&k(K3) * &k(K123))) * &k(K12))
        + &(&(&(&k(K2) * &k(K3)) + &(&k(K1) * &k(K123))) * &k(K23)))
        + &(&(&k(B1) * &k(B2)) + &kc(4));
    &lhs - &rhs
}

/// Sets `k2 = k123 = x`, `k1 = k3 = y`, `k23 = z`, `k12 = xy - z`, `b2 = -2`
/// in the coupled Markov relation; `x, y, z` are stored in the `k2, k1, k23`
/// slots. Compared against twice `x^2 + y^2 + z^2 - xyz - 2 + b1`.
pub fn markov_reduction() -> Report {
    Report::new(vec![Check::timed(|| {
        let (x, y, z) = (k(K2), k(K1), k(K23));
        let rules = vec![
            (K123, Substitution::General(RationalFn::from_poly(x.clone()))),
            (K3, Substitution::General(RationalFn::from_poly(y.clone()))),
            (K12, Substitution::General(RationalFn::from_poly(&(&x * &y) - &z))),
            (B2, Substitution::General(RationalFn::from_poly(kc(-2)))),
        ];
        let reduced = poly_substitute(&coupled_markov(), &rules).expect("polynomial substitution");
        let markov = &(&(&(&(&x * &x) + &(&y * &y)) + &(&z * &z)) - &(&(&x * &y) * &z)) - &(&kc(2) - &k(B1));
        let residual = &reduced - &RationalFn::from_poly(markov.scale(&Scalar::from_int(2)));
        zero_check("markov_reduction".into(), &residual)
    })])
}

/// For each twist and curve, the trace of the twisted curve against the
/// trace with `y` replaced by the mutation images.
pub fn mutation_induces_twist() -> Report {
    let seeds: Vec<Seed> = (1..=3).map(|a| dehn_cl(a, &Seed::initial()).expect("valid twist")).collect();
    let jobs: Vec<(u8, usize)> = (1..=3u8).flat_map(|a| (0..8).map(move |v| (a, v))).collect();
    let checks = jobs
        .into_par_iter()
        .map(|(a, v)| {
            Check::timed(|| {
                let id = format!("mutation_induces_twist/D{a}/{}", super::trace::TRACE_CURVES[v]);
                let twisted = trace_of(&classical_twist_word(&[a], &k(v)).expect("valid twist"));
                match trace_under_y_map(&tr(v), &seeds[a as usize - 1].y) {
                    Ok(mapped) => zero_check(id, &(&twisted - &mapped)),
                    Err(e) => Check::new(id, Level::Neither, false, 0).with_detail(e.to_string()),
                }
            })
        })
        .collect();
    Report::new(checks)
}

/// Braid and order relations of the classical twists after taking traces.
pub fn twist_relations() -> Report {
    let pairs: [(&str, Vec<u8>, Vec<u8>); 4] = [
        ("D13=D31", vec![1, 3], vec![3, 1]),
        ("D121=D212", vec![1, 2, 1], vec![2, 1, 2]),
        ("D232=D323", vec![2, 3, 2], vec![3, 2, 3]),
        ("D123^4=1", [1, 2, 3].repeat(4), vec![]),
    ];
    let jobs: Vec<(usize, usize)> = (0..pairs.len()).flat_map(|p| (0..8).map(move |v| (p, v))).collect();
    let checks = jobs
        .into_par_iter()
        .map(|(p, v)| {
            let (name, lhs, rhs) = &pairs[p];
            let l = classical_twist_word(lhs, &k(v)).expect("valid twist");
            let r = classical_twist_word(rhs, &k(v)).expect("valid twist");
            let free = l == r;
            let traced = &trace_of(&l) - &trace_of(&r);
            let mut c = zero_check(format!("twist_relations/{name}/{}", super::trace::TRACE_CURVES[v]), &traced);
            c = c.with_detail(if free { "holds in the curve ring" } else { "holds after traces only" });
            c
        })
        .collect();
    Report::new(checks)
}

/// Reference mutation sequence of the order-four relation, read right to left.
pub fn loop30_reference() -> [usize; 30] {
    [2, 5, 2, 1, 5, 1, 2, 5, 3, 2, 1, 3, 1, 2, 3, 6, 2, 1, 6, 1, 2, 6, 4, 2, 1, 4, 1, 2, 4, 2]
}

/// Moves every relabeling in `steps` to the end and cancels repeated
/// mutations. Returns the mutation indices and the final relabeling `p`,
/// where the seed after `steps` has `y_i` equal to `y_{p[i]}` of the seed
/// after the mutations alone.
pub fn flatten_loop(steps: &[Step]) -> (Vec<usize>, [usize; N]) {
    let mut p: [usize; N] = std::array::from_fn(|i| i + 1);
    let mut out: Vec<usize> = Vec::new();
    for &s in steps {
        match s {
            Step::Permute(i, j) => p.swap(i - 1, j - 1),
            Step::Mutate(k) => {
                let m = p[k - 1];
                if out.last() == Some(&m) {
                    out.pop();
                } else {
                    out.push(m);
                }
            }
        }
    }
    (out, p)
}

fn twist_steps(word: &[u8]) -> Vec<Step> {
    word.iter().flat_map(|&a| dehn_cl_steps(a).expect("valid twist")).collect()
}

/// Runs `D_{1,2,3}^4` as seed maps (rightmost twist first), checks it
/// returns the initial seed, that its flattened mutation list is the reference
/// one read right to left, and that no proper prefix of that list returns to
/// the initial seed.
pub fn loop30() -> Report {
    let init = Seed::initial();
    let steps = twist_steps(&[3, 2, 1].repeat(4));
    let order: Vec<usize> = loop30_reference().into_iter().rev().collect();
    let mut checks = Vec::new();
    checks.push(Check::timed(|| {
        let end = init.run(&steps).expect("valid steps");
        let ok = end == init;
        Check::new("loop30/composite_returns", if ok { Level::Plain } else { Level::Neither }, ok, 0)
    }));
    checks.push(Check::timed(|| {
        let (flat, p) = flatten_loop(&steps);
        let identity = p.iter().enumerate().all(|(i, &v)| v == i + 1);
        let ok = flat == order && identity;
        Check::new("loop30/flattened_sequence", if ok { Level::Plain } else { Level::Neither }, ok, flat.len())
            .with_detail(format!("{flat:?} with relabeling {p:?}"))
    }));
    checks.push(Check::timed(|| {
        let mut s = init.clone();
        let mut distinct = true;
        for (n, &m) in order.iter().enumerate() {
            s = s.mutate(m).expect("valid vertex");
            if n + 1 < order.len() && s == init {
                distinct = false;
            }
        }
        let returns = s == init;
        let ok = distinct && returns;
        Check::new("loop30/reference_sequence", if ok { Level::Plain } else { Level::Neither }, ok, 0)
            .with_detail(format!("returns: {returns}, prefixes distinct: {distinct}"))
    }));
    Report::new(checks)
}
