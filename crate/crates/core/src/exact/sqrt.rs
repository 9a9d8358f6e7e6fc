//! Exact square roots of Laurent polynomials and rational functions.

use super::poly::LaurentPoly;
use super::ratfn::RationalFn;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Square root by leading-term extraction, verified by squaring. The branch
/// is the one whose leading coefficient lies on the positive branch of
/// [`Scalar::is_positive_branch`].
pub fn poly_sqrt(p: &LaurentPoly) -> Result<LaurentPoly> {
    if p.is_zero() {
        return Err(Error::NonSquare);
    }
    let content = p.min_exps();
    if !content.all_even() {
        return Err(Error::NonSquare);
    }
    let shifted = p.mul_monomial(&content.inv());
    let (lm, lc) = shifted.leading_term().expect("nonzero");
    if !lm.all_even() {
        return Err(Error::NonSquare);
    }
    let lc_root = lc.sqrt().ok_or(Error::NonSquare)?;
    let ctx = p.context();
    let root_lead = LaurentPoly::term(ctx, lm.halve(), lc_root.clone());
    let two_lead_inv = (&lc_root * &Scalar::from_int(2)).inv()?;
    let lm_half = lm.halve();
    let min_degree = shifted.terms().last().map(|(m, _)| m.degree()).unwrap_or(0);

    let mut root = root_lead.clone();
    let mut rem = &shifted - &(&root_lead * &root_lead);
    let mut last = lm_half;
    while let Some((m, c)) = rem.leading_term() {
        let next = m.div(&lm_half);
        if !next.is_nonneg() || next >= last || 2 * next.degree() < min_degree {
            return Err(Error::NonSquare);
        }
        let t = LaurentPoly::term(ctx, next, c * &two_lead_inv);
        // (r + t)^2 = r^2 + 2 r t + t^2
        let two_r = root.scale(&Scalar::from_int(2));
        let delta = &(&two_r * &t) + &(&t * &t);
        rem = &rem - &delta;
        root = &root + &t;
        last = next;
    }
    if &root * &root != shifted {
        return Err(Error::NonSquare);
    }
    Ok(root.mul_monomial(&content.halve()))
}

/// Square root of a rational function; numerator and denominator are
/// reduced fully first so that each must be a square on its own.
pub fn ratfn_sqrt(f: &RationalFn) -> Result<RationalFn> {
    let f = f.reduce_full();
    let num = poly_sqrt(f.num())?;
    let mut dens = Vec::new();
    for (factor, k) in f.den_factors() {
        let base = if k % 2 == 0 { factor.poly().clone() } else { poly_sqrt(factor.poly())? };
        let reps = if k % 2 == 0 { k / 2 } else { *k };
        for _ in 0..reps {
            dens.push(base.clone());
        }
    }
    Ok(RationalFn::frac(num, &dens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Context;

    fn z(s: &str) -> LaurentPoly {
        LaurentPoly::parse(Context::Cluster, s).unwrap()
    }

    #[test]
    fn monomial_square() {
        let p = z("(1/1+0/1i)*z2^2*z3^2*z5^2");
        assert_eq!(poly_sqrt(&p).unwrap(), z("(1/1+0/1i)*z2*z3*z5"));
    }

    #[test]
    fn not_a_square() {
        let p = LaurentPoly::parse(Context::Operator, "(1/1+0/1i) + (1/1+0/1i)*x").unwrap();
        assert_eq!(poly_sqrt(&p), Err(Error::NonSquare));
        assert_eq!(poly_sqrt(&z("(1/1+0/1i)*z1")), Err(Error::NonSquare));
    }

    #[test]
    fn mutated_monomial_image() {
        // (1 + y2 + y2 y3)^2 y5 / (y2 y3) with y = z^2
        let base = z("(1/1+0/1i) + (1/1+0/1i)*z2^2 + (1/1+0/1i)*z2^2*z3^2");
        let num = &(&base * &base) * &z("(1/1+0/1i)*z5^2");
        let f = RationalFn::new(num, z("(1/1+0/1i)*z2^2*z3^2")).unwrap();
        let r = ratfn_sqrt(&f).unwrap();
        let expect = RationalFn::new(&base * &z("(1/1+0/1i)*z5"), z("(1/1+0/1i)*z2*z3")).unwrap();
        assert!(r.eq_exact(&expect));
        assert!((&r * &r).eq_exact(&f));
    }

    #[test]
    fn negative_leading_coefficient_branch() {
        let p = z("(-1/1+0/1i)*z1^2");
        assert_eq!(poly_sqrt(&p).unwrap(), z("(0/1+1/1i)*z1"));
    }
}
