//! Operator images of curves and the skein relation suites.

mod curves;
pub mod families;
pub mod relations;

pub use curves::{
    base_word, curve_operator, curve_word, dictionary, explicit, twist_automorphism, verify_curve_images, word_route, CurveName,
    CurveSpec,
};
pub use families::{verify_family, Family};
pub use relations::{
    twist_formula_check, verify_all_relations, verify_dictionary_routes, verify_k1_k2_1n, verify_negative_controls,
    verify_relation, Equation, RelationId, Term,
};

use crate::report::Report;

/// Once-meeting pairs `(x, y)` where `x` carries a twist automorphism.
pub const TWIST_PAIRS: [(CurveName, CurveName); 12] = {
    use CurveName::*;
    [
        (K1, K2),
        (K2, K1),
        (K2, K3),
        (K3, K2),
        (K1, K12),
        (K2, K12),
        (K3, K12),
        (K1, K23),
        (K2, K23),
        (K3, K23),
        (K1, K123),
        (K3, K123),
    ]
};

/// Parameter range used for a family by the full suite.
pub fn family_range(f: Family) -> std::ops::RangeInclusive<i32> {
    match f {
        Family::K1TorusType | Family::K3TorusType => 0..=2,
        _ => -3..=3,
    }
}

/// Relations, negative controls, dictionary routes, curve images, twist
/// formula and all families.
pub fn verify_skein() -> Report {
    let mut r = verify_all_relations();
    for id in RelationId::ALL {
        r.extend(verify_negative_controls(id));
    }
    r.extend(verify_k1_k2_1n(-3..=3));
    r.extend(verify_dictionary_routes());
    r.extend(verify_curve_images());
    for (x, y) in TWIST_PAIRS {
        r.extend(twist_formula_check(x, y).expect("pair meets once"));
    }
    for f in Family::ALL {
        r.extend(verify_family(f, family_range(f)));
    }
    r
}

#[cfg(test)]
mod tests;
