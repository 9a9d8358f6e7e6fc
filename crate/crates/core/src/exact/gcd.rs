//! Multivariate polynomial gcd over `Q(i)` by recursive primitive
//! pseudo-remainder sequences. Monomials are units in the Laurent ring, so
//! every input is first shifted to have no monomial content.

use super::poly::{LaurentPoly, Monomial};
use super::scalar::Scalar;

/// Makes `p` canonical up to units: no monomial content and leading
/// coefficient one. Returns `(unit_coeff, unit_monomial, normalized)` with
/// `p = unit_coeff · unit_monomial · normalized`.
pub fn split_unit(p: &LaurentPoly) -> (Scalar, Monomial, LaurentPoly) {
    if p.is_zero() {
        return (Scalar::zero(), Monomial::one(), p.clone());
    }
    let m = p.min_exps();
    let shifted = p.mul_monomial(&m.inv());
    let lc = shifted.leading_coeff().cloned().unwrap_or_else(Scalar::one);
    let norm = shifted.scale(&lc.inv().expect("nonzero leading coefficient"));
    (lc, m, norm)
}

pub fn normalize(p: &LaurentPoly) -> LaurentPoly {
    split_unit(p).2
}

/// Greatest common divisor, normalized by [`normalize`]. `gcd(0, 0) = 0`.
pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return normalize(b);
    }
    if b.is_zero() {
        return normalize(a);
    }
    let a = normalize(a);
    let b = normalize(b);
    normalize(&gcd_normalized(&a, &b))
}

fn gcd_normalized(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let ctx = a.context();
    let one = LaurentPoly::one(ctx);
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return one;
    }
    if a == b {
        return a.clone();
    }
    let n = ctx.nvars();
    let amax = a.max_exps();
    let bmax = b.max_exps();
    // a variable present in only one argument cannot occur in the gcd
    for v in 0..n {
        if amax.0[v] > 0 && bmax.0[v] == 0 {
            return gcd_normalized(&normalize(&content(a, v)), b);
        }
        if bmax.0[v] > 0 && amax.0[v] == 0 {
            return gcd_normalized(a, &normalize(&content(b, v)));
        }
    }
    let v = (0..n)
        .filter(|&v| amax.0[v] > 0)
        .min_by_key(|&v| amax.0[v].max(bmax.0[v]))
        .expect("non-constant polynomial has a variable");
    let ca = normalize(&content(a, v));
    let cb = normalize(&content(b, v));
    let pa = a.exact_div(&ca).expect("content divides");
    let pb = b.exact_div(&cb).expect("content divides");
    let c = gcd_normalized(&ca, &cb);
    let g = primitive_prs(pa, pb, v);
    &c * &g
}

/// Coefficients of `p` as a polynomial in `v` (exponents of `p` in `v` are
/// assumed non-negative); index is the degree.
pub(crate) fn coeffs_in(p: &LaurentPoly, v: usize) -> Vec<LaurentPoly> {
    let deg = p.max_exps().0[v].max(0) as usize;
    let mut buckets: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); deg + 1];
    for (m, c) in p.terms() {
        let mut mm = *m;
        let d = mm.0[v] as usize;
        mm.0[v] = 0;
        buckets[d].push((mm, c.clone()));
    }
    buckets.into_iter().map(|t| LaurentPoly::from_terms(p.context(), t)).collect()
}

fn degree_in(p: &LaurentPoly, v: usize) -> i32 {
    p.max_exps().0[v]
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
pub(crate) fn content(p: &LaurentPoly, v: usize) -> LaurentPoly {
    let mut g = LaurentPoly::zero(p.context());
    for c in coeffs_in(p, v) {
        if c.is_zero() {
            continue;
        }
        g = if g.is_zero() { normalize(&c) } else { gcd_normalized(&g, &normalize(&c)) };
        if g.as_constant().is_some() {
            break;
        }
    }
    g
}

fn primitive_part(p: &LaurentPoly, v: usize) -> LaurentPoly {
    let c = content(p, v);
    normalize(&p.exact_div(&c).expect("content divides"))
}

fn pseudo_rem(a: &LaurentPoly, b: &LaurentPoly, v: usize) -> LaurentPoly {
    let db = degree_in(b, v);
    let lcb = coeffs_in(b, v).pop().expect("nonzero");
    let mut r = a.clone();
    while !r.is_zero() && degree_in(&r, v) >= db {
        let dr = degree_in(&r, v);
        let lcr = coeffs_in(&r, v).pop().expect("nonzero");
        let shift = Monomial::var(v, dr - db);
        r = &(&lcb * &r) - &(&lcr * &b.mul_monomial(&shift));
        // keep exponents non-negative after cancellation
        let m = r.min_exps();
        if !r.is_zero() && !m.is_one() {
            r = r.mul_monomial(&m.inv());
        }
    }
    r
}

fn primitive_prs(a: LaurentPoly, b: LaurentPoly, v: usize) -> LaurentPoly {
    let (mut a, mut b) = if degree_in(&a, v) >= degree_in(&b, v) { (a, b) } else { (b, a) };
    loop {
        if b.is_zero() {
            return primitive_part(&a, v);
        }
        if degree_in(&b, v) == 0 {
            return LaurentPoly::one(a.context());
        }
        let r = pseudo_rem(&a, &b, v);
        a = b;
        b = if r.is_zero() { r } else { primitive_part(&normalize(&r), v) };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Context;

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(Context::Operator, s).unwrap()
    }

    #[test]
    fn gcd_of_products() {
        let f = p("(1/1+0/1i)*x + (1/1+0/1i)*u^2");
        let g = p("(1/1+0/1i)*x0^2 + (-1/1+0/1i)*b1");
        let h = p("(1/1+0/1i)*x*b2 + (3/1+0/1i)");
        let a = &(&f * &g) * &f;
        let b = &(&f * &h) * &p("(1/1+0/1i)*u^3");
        assert_eq!(gcd(&a, &b), normalize(&f));
        assert_eq!(gcd(&g, &h).as_constant(), Some(Scalar::one()));
    }

    #[test]
    fn gcd_with_gaussian_coefficients() {
        let f = p("(1/1+0/1i)*x + (0/1+1/1i)");
        let g = p("(1/1+0/1i)*x + (0/1-1/1i)");
        let a = &f * &g;
        assert_eq!(gcd(&a, &f), normalize(&f));
        assert_eq!(gcd(&a, &p("(1/1+0/1i)*x^2 + (1/1+0/1i)")), normalize(&a));
    }
}
