//! Exact arithmetic foundation: Gaussian rationals, Laurent polynomials,
//! rational functions, substitutions and square roots.

pub mod gcd;
pub mod json;
pub mod latex;
mod poly;
mod ratfn;
mod scalar;
mod sqrt;

pub use poly::{Context, LaurentPoly, MonoMap, Monomial, MAX_VARS};
pub use ratfn::{gcd_reduction_enabled, poly_substitute, set_gcd_reduction, Factor, RationalFn, Substitution};
pub use scalar::Scalar;
pub use sqrt::{poly_sqrt, ratfn_sqrt};

/// Arithmetic selector for the generic entry points below.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn scalar_arith(a: &Scalar, b: &Scalar, kind: ArithKind) -> crate::Result<Scalar> {
    Ok(match kind {
        ArithKind::Add => a + b,
        ArithKind::Sub => a - b,
        ArithKind::Mul => a * b,
        ArithKind::Div => a.checked_div(b)?,
    })
}

pub fn poly_arith(p: &LaurentPoly, q: &LaurentPoly, kind: ArithKind) -> crate::Result<LaurentPoly> {
    match kind {
        ArithKind::Add => p.try_add(q),
        ArithKind::Sub => p.try_sub(q),
        ArithKind::Mul => p.try_mul(q),
        ArithKind::Div => Err(crate::Error::Unsupported("polynomial division; use RationalFn".into())),
    }
}

pub fn ratfn_arith(f: &RationalFn, g: &RationalFn, kind: ArithKind) -> crate::Result<RationalFn> {
    match kind {
        ArithKind::Add => f.try_add(g),
        ArithKind::Sub => f.try_sub(g),
        ArithKind::Mul => f.try_mul(g),
        ArithKind::Div => f.try_div(g),
    }
}

pub fn ratfn_eq(f: &RationalFn, g: &RationalFn) -> bool {
    f.eq_exact(g)
}

/// Shorthands for the operator context `(u, x, x0, b1, b2)`.
pub mod op_vars {
    use super::{Context, LaurentPoly, Monomial, RationalFn, Scalar};

    pub const U: usize = 0;
    pub const X: usize = 1;
    pub const X0: usize = 2;
    pub const B1: usize = 3;
    pub const B2: usize = 4;

    const CTX: Context = Context::Operator;

    /// `c · u^a x^b x0^c b1^d b2^e` as a polynomial.
    pub fn mono(c: i64, exps: [i32; 5]) -> LaurentPoly {
        LaurentPoly::term(CTX, Monomial::from_slice(&exps), Scalar::from_int(c))
    }

    pub fn cmono(c: Scalar, exps: [i32; 5]) -> LaurentPoly {
        LaurentPoly::term(CTX, Monomial::from_slice(&exps), c)
    }

    /// Sum of integer-coefficient monomials.
    pub fn poly(terms: &[(i64, [i32; 5])]) -> LaurentPoly {
        LaurentPoly::from_terms(CTX, terms.iter().map(|(c, e)| (Monomial::from_slice(e), Scalar::from_int(*c))))
    }

    pub fn rf(p: LaurentPoly) -> RationalFn {
        RationalFn::from_poly(p)
    }

    pub fn one() -> RationalFn {
        RationalFn::one(CTX)
    }

    /// `ch(m) = m + m^{-1}` for a monomial `m`.
    pub fn ch_mono(exps: [i32; 5]) -> LaurentPoly {
        let m = Monomial::from_slice(&exps);
        LaurentPoly::from_terms(CTX, [(m, Scalar::one()), (m.inv(), Scalar::one())])
    }
}
