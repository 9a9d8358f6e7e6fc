use super::*;
use crate::exact::{Context, LaurentPoly, RationalFn};

const Z: Context = Context::Cluster;

fn zsum(terms: &[[i32; 6]]) -> LaurentPoly {
    LaurentPoly::from_terms(Z, terms.iter().map(|a| (crate::Monomial::from_slice(a), crate::Scalar::one())))
}

/// `y_i` of the initial seed.
fn y(i: usize) -> RationalFn {
    RationalFn::from_poly(z_pow(i - 1, 2))
}

fn one() -> RationalFn {
    RationalFn::one(Z)
}

fn div(a: &RationalFn, b: &RationalFn) -> RationalFn {
    a.try_div(b).unwrap()
}

#[test]
fn mutation_is_involutive() {
    let s = Seed::initial();
    for k in 1..=6 {
        assert_eq!(s.mutate(k).unwrap().mutate(k).unwrap(), s);
    }
    let t = s.mutate(2).unwrap().mutate(5).unwrap();
    assert_eq!(t.mutate(3).unwrap().mutate(3).unwrap(), t);
}

#[test]
fn mutation_flips_row_and_column() {
    let b0 = ExchangeMatrix::initial();
    let b = Seed::initial().mutate(2).unwrap().b;
    for j in 0..6 {
        assert_eq!(b.get(1, j), -b0.get(1, j));
        assert_eq!(b.get(j, 1), -b0.get(j, 1));
    }
    assert!(b.is_skew());
}

#[test]
fn permutation_swaps_rows_and_columns() {
    let s = Seed::initial();
    assert_eq!(s.permute(3, 5).unwrap().permute(3, 5).unwrap(), s);
    assert!(s.permute(1, 1).is_err());
    // rows 3 and 5 exchanged, then columns 3 and 5
    let expected = ExchangeMatrix([
        [0, 0, 1, -1, -1, 1],
        [0, 0, -1, 1, 1, -1],
        [-1, 1, 0, -1, 1, 0],
        [1, -1, 1, 0, 0, -1],
        [1, -1, -1, 0, 0, 1],
        [-1, 1, 0, 1, -1, 0],
    ]);
    let p = s.permute(3, 5).unwrap();
    assert_eq!(p.b, expected);
    assert_eq!(p.y[2], y(5));
}

#[test]
fn classical_twist_seed_maps() {
    let s = Seed::initial();
    let (y1, y2, y3, y4, y5, y6) = (y(1), y(2), y(3), y(4), y(5), y(6));
    let p = |a: &RationalFn, b: &RationalFn| a * b;
    let s21 = &(&one() + &y2) + &p(&y2, &y3);
    let s12 = &(&one() + &y1) + &p(&y1, &y6);
    let s24 = &(&one() + &y2) + &p(&y2, &y4);

    let d1 = dehn_cl(1, &s).unwrap();
    assert_eq!(d1.y[0], div(&p(&p(&y1, &y2), &y3), &s21));
    assert_eq!(d1.y[1], div(&s21, &y3));
    assert_eq!(d1.y[3], div(&p(&p(&y2, &(&one() + &y3)), &y4), &s21));
    assert_eq!(d1.y[5], div(&p(&y3, &y6), &(&one() + &y3)));
    // a table with entries 3 and 5 exchanged fails the twist check below
    assert_eq!(d1.y[4], div(&one(), &p(&y2, &(&one() + &y3))));
    assert_eq!(d1.y[2], p(&p(&(&one() + &y3), &s21), &y5));

    let d2 = dehn_cl(2, &s).unwrap();
    let expected2 = [
        div(&s12, &y6),
        div(&p(&p(&y1, &y2), &y6), &s12),
        div(&one(), &p(&y1, &(&one() + &y6))),
        div(&p(&y4, &y6), &(&one() + &y6)),
        div(&p(&p(&y1, &y5), &(&one() + &y6)), &s12),
        p(&p(&y3, &(&one() + &y6)), &s12),
    ];
    assert_eq!(d2.y, expected2);

    let d3 = dehn_cl(3, &s).unwrap();
    let expected3 = [
        div(&p(&p(&y1, &y2), &y4), &s24),
        div(&s24, &y4),
        div(&p(&p(&y2, &y3), &(&one() + &y4)), &s24),
        p(&p(&(&one() + &y4), &s24), &y6),
        div(&p(&y4, &y5), &(&one() + &y4)),
        div(&one(), &p(&y2, &(&one() + &y4))),
    ];
    assert_eq!(d3.y, expected3);

    for a in 1..=3 {
        assert_eq!(dehn_cl(a, &s).unwrap().b, s.b);
    }
}

#[test]
fn swapped_first_twist_table_does_not_induce_the_twist() {
    let mut images = dehn_cl(1, &Seed::initial()).unwrap().y;
    images.swap(2, 4);
    let k2 = LaurentPoly::var(Context::KRing, kvars::K2);
    let twisted = trace_of(&classical_twist(1, &k2).unwrap());
    let matches = trace_under_y_map(&RationalFn::from_poly(trace_var(kvars::K2)), &images).map(|m| m == twisted);
    assert!(!matches.unwrap_or(false));
}

#[test]
fn trace_examples() {
    // sqrt(y2 y3 y5) + sqrt(y2 y5 / y3) + sqrt(y5 / (y2 y3)) + 1/sqrt(y2 y3 y5)
    let k1 = zsum(&[[0, 1, 1, 0, 1, 0], [0, 1, -1, 0, 1, 0], [0, -1, -1, 0, 1, 0], [0, -1, -1, 0, -1, 0]]);
    assert_eq!(trace_expr("k1").unwrap(), k1);
    assert_eq!(trace_expr("b1").unwrap(), zsum(&[[0, 0, 1, 1, 1, 1], [0, 0, -1, -1, -1, -1]]));
    assert_eq!(trace_expr("b2").unwrap(), zsum(&[[2, 2, 1, 1, 1, 1], [-2, -2, -1, -1, -1, -1]]));
    assert!(trace_expr("z").is_err());
}

#[test]
fn bracket_on_y() {
    let b = poisson_bracket(&y(1), &y(3));
    assert_eq!(b, (&y(1) * &y(3)).scale(&crate::Scalar::from_int(-1)));
    assert!(poisson_bracket(&y(1), &y(2)).is_zero());
    let k1 = RationalFn::from_poly(trace_var(kvars::K1));
    let k3 = RationalFn::from_poly(trace_var(kvars::K3));
    assert!(poisson_bracket(&k1, &k3).is_zero());
}

#[test]
fn classical_twist_examples() {
    let k = |v| LaurentPoly::var(Context::KRing, v);
    assert_eq!(classical_twist(2, &k(kvars::K3)).unwrap(), &(&k(kvars::K2) * &k(kvars::K3)) - &k(kvars::K23));
    assert_eq!(classical_twist(3, &k(kvars::K1)).unwrap(), k(kvars::K1));
    assert_eq!(classical_twist(1, &k(kvars::B1)).unwrap(), k(kvars::B1));
    assert!(classical_twist(4, &k(kvars::B1)).is_err());
}

#[test]
fn script_parsing() {
    assert_eq!(
        parse_script("2, 3,s(3,5),1").unwrap(),
        vec![Step::Mutate(2), Step::Mutate(3), Step::Permute(3, 5), Step::Mutate(1)]
    );
    for bad in ["", "7", "2,,3", "s(1,1)", "s(1)", "x"] {
        assert!(parse_script(bad).is_err(), "{bad}");
    }
    let s = Seed::initial();
    assert_eq!(s.run(&parse_script("2,3,2,s(3,5)").unwrap()).unwrap(), dehn_cl(1, &s).unwrap());
}

#[test]
fn seed_json_round_trip() {
    let s = dehn_cl(2, &Seed::initial()).unwrap();
    let back = Seed::from_json(&s.to_json()).unwrap();
    assert_eq!(back, s);
    let mut v = s.to_json();
    v["B"][0][1] = serde_json::json!(1);
    assert!(Seed::from_json(&v).is_err());
}

#[test]
fn flatten_cancels_and_tracks_relabeling() {
    let steps = parse_script("1,s(1,2),2,3").unwrap();
    let (flat, p) = flatten_loop(&steps);
    assert_eq!(flat, vec![3]);
    assert_eq!(p, [2, 1, 3, 4, 5, 6]);
}

#[test]
fn full_suite_passes() {
    let r = verify_cluster();
    assert!(r.all_pass(), "{}", r.render_table());
    assert_eq!(r.checks.iter().filter(|c| c.id.starts_with("mutation_induces_twist/")).count(), 24);
    assert!(r.get("poisson_suite/negative/bracket_sign").unwrap().level == crate::report::Level::Neither);
    assert!(r.get("loop30/composite_returns").unwrap().pass);
}
