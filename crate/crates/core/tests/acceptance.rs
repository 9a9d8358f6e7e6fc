//! One line per acceptance criterion. Every comparison is exact; a criterion
//! passes only when all of its checks pass within the time budget.

use std::time::{Duration, Instant};

use skeindaha::cluster::verify_cluster;
use skeindaha::daha::{verify_automorphisms, verify_hecke, verify_u_n};
use skeindaha::pi1::verify_pi1;
use skeindaha::qdiff::identities::verify_qdiff;
use skeindaha::skein::{family_range, verify_all_relations, verify_curve_images, verify_family, verify_skein, Family};
use skeindaha::{Level, Report};

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let out = f();
    (out, t.elapsed())
}

fn failures(r: &Report) -> Vec<&str> {
    r.checks.iter().filter(|c| !c.pass).map(|c| c.id.as_str()).collect()
}

fn is_negative(id: &str) -> bool {
    id.contains("/negative/") || id.ends_with("/a_squared") || id.ends_with("/coeff_plus_one")
}

struct Outcome {
    pass: bool,
    summary: String,
}

fn outcome(pass: bool, summary: impl Into<String>) -> Outcome {
    Outcome { pass, summary: summary.into() }
}

fn main() {
    let mut results: Vec<(u8, Outcome)> = Vec::new();

    let (qdiff, _) = timed(|| verify_qdiff(-3..=3));
    let kernel: Vec<_> = qdiff.checks.iter().filter(|c| !is_negative(&c.id)).collect();
    let slowest = kernel.iter().map(|c| c.millis).max().unwrap_or(0);
    let ok = kernel.iter().all(|c| c.pass && c.level == Level::Plain) && kernel.len() == 7 * 6 && slowest < 5_000;
    results.push((
        1,
        outcome(
            ok,
            format!("{} kernel identities for n=-3..3, slowest {slowest} ms, failures {:?}", kernel.len(), failures(&qdiff)),
        ),
    ));

    let (hecke, t) = timed(verify_hecke);
    let ok = hecke.all_pass() && t < Duration::from_secs(10);
    results.push((2, outcome(ok, format!("{} Hecke checks in {:.2?}, failures {:?}", hecke.total(), t, failures(&hecke)))));

    let images = verify_curve_images();
    let eq: Vec<_> = images.checks.iter().filter(|c| !is_negative(&c.id)).collect();
    let curves: std::collections::BTreeSet<&str> = eq.iter().map(|c| c.id.split('/').nth(1).unwrap_or("")).collect();
    let ok = images.all_pass() && eq.iter().all(|c| c.level <= Level::ESided) && curves.len() == 7;
    results.push((
        3,
        outcome(
            ok,
            format!("{} curve-image equalities over {} curves, failures {:?}", eq.len(), curves.len(), failures(&images)),
        ),
    ));

    let (relations, t) = timed(verify_all_relations);
    let markov = relations.get("coupled_markov").map(|c| c.pass && c.level <= Level::ESided).unwrap_or(false);
    let ok = relations.all_pass() && markov && t < Duration::from_secs(300);
    results.push((
        4,
        outcome(
            ok,
            format!(
                "{} relation checks in {:.2?}, coupled Markov {markov}, failures {:?}",
                relations.total(),
                t,
                failures(&relations)
            ),
        ),
    ));

    let autos = verify_automorphisms();
    results
        .push((5, outcome(autos.all_pass(), format!("{} automorphism checks, failures {:?}", autos.total(), failures(&autos)))));

    let (families, t) = timed(|| {
        let mut r = Report::new(Vec::new());
        for f in Family::ALL {
            r.extend(verify_family(f, family_range(f)));
        }
        r
    });
    let d0 = families.checks.iter().filter(|c| c.id.ends_with("/d0_part")).count();
    let ok = families.all_pass() && d0 == 3 && t < Duration::from_secs(600);
    results
        .push((6, outcome(ok, format!("{} family checks in {:.2?}, failures {:?}", families.total(), t, failures(&families)))));

    let (cluster, t) = timed(verify_cluster);
    let twists = cluster.checks.iter().filter(|c| c.id.starts_with("mutation_induces_twist/")).count();
    let ok = cluster.all_pass()
        && twists == 24
        && cluster.get("loop30/composite_returns").is_some_and(|c| c.pass)
        && cluster.get("loop30/reference_sequence").is_some_and(|c| c.pass)
        && t < Duration::from_secs(300);
    results.push((7, outcome(ok, format!("{} cluster checks in {:.2?}, failures {:?}", cluster.total(), t, failures(&cluster)))));

    let (pi1, t) = timed(verify_pi1);
    let verbatim =
        ["pi1/delta1/relator_verbatim", "pi1/delta2/relator_verbatim"].iter().all(|id| pi1.get(id).is_some_and(|c| c.pass));
    let ok = pi1.all_pass() && verbatim && t < Duration::from_secs(1);
    results.push((8, outcome(ok, format!("{} checks in {:.2?}, failures {:?}", pi1.total(), t, failures(&pi1)))));

    let mut daha = verify_hecke();
    daha.extend(verify_automorphisms());
    daha.extend(verify_u_n(-1..=1));
    let suites: [(&str, &Report); 5] =
        [("qdiff", &qdiff), ("daha", &daha), ("skein", &verify_skein()), ("cluster", &cluster), ("pi1", &pi1)];
    let mut counts = Vec::new();
    let mut ok = true;
    for (name, r) in suites {
        let neg: Vec<_> = r.checks.iter().filter(|c| is_negative(&c.id)).collect();
        ok &= !neg.is_empty() && neg.iter().all(|c| c.pass && c.level == Level::Neither);
        counts.push(format!("{name}={}", neg.len()));
    }
    results.push((9, outcome(ok, format!("negative controls {}", counts.join(" ")))));

    for (n, o) in &results {
        println!("criterion {n}: {} {}", if o.pass { "PASS" } else { "FAIL" }, o.summary);
    }
    let failed: Vec<u8> = results.iter().filter(|(_, o)| !o.pass).map(|(n, _)| *n).collect();
    if !failed.is_empty() {
        eprintln!("failed criteria {failed:?}");
        std::process::exit(1);
    }
}
