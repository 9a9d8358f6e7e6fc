//! The potential `W` and the two-term `x0`-difference operators `G_n`, `K_n`
//! from which every curve operator is assembled.

use super::{Operator, ShiftKey};
use crate::exact::op_vars::X;
use crate::exact::op_vars::{ch_mono, mono, poly};
use crate::exact::Context;
use crate::exact::{MonoMap, RationalFn};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i32(e: i32) -> Sign {
        if e >= 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn exponent(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Multiplication by `m + m^{-1}` for the monomial `u^a x^b x0^c b1^d b2^e`.
pub fn ch(exps: [i32; 5]) -> Operator {
    Operator::mul_by_poly(ch_mono(exps))
}

/// `(1 - x0)(1 + x0)`, kept split so each factor is recognised as
/// irreducible.
fn one_minus_x0_sq() -> [crate::exact::LaurentPoly; 2] {
    [poly(&[(1, [0; 5]), (-1, [0, 0, 1, 0, 0])]), poly(&[(1, [0; 5]), (1, [0, 0, 1, 0, 0])])]
}

/// `W(x^{±1}; x0, b1, b2)`.
pub fn make_w(sign: Sign) -> RationalFn {
    // -(b1 b2 + u^2 x)(b1 + b2 u^2 x)(u^2 x + x0^2)
    let num = &(&poly(&[(1, [0, 0, 0, 1, 1]), (1, [2, 1, 0, 0, 0])]) * &poly(&[(1, [0, 0, 0, 1, 0]), (1, [2, 1, 0, 0, 1])]))
        * &poly(&[(-1, [2, 1, 0, 0, 0]), (-1, [0, 0, 2, 0, 0])]);
    let dens = [
        mono(1, [2, 0, 1, 1, 1]),
        poly(&[(1, [0; 5]), (-1, [0, 1, 0, 0, 0])]),
        poly(&[(1, [0; 5]), (1, [0, 1, 0, 0, 0])]),
        poly(&[(1, [0; 5]), (-1, [2, 1, 0, 0, 0])]),
    ];
    let w = RationalFn::frac(num, &dens);
    match sign {
        Sign::Plus => w,
        Sign::Minus => w.map_monomials(&MonoMap::identity(Context::Operator).invert(X)),
    }
}

/// `-x0^{-n}/(1 - x0^2) · ð0`, shared by `G_n` and `K_n`.
fn up_part(n: i32) -> RationalFn {
    RationalFn::frac(mono(-1, [0, 0, -n, 0, 0]), &one_minus_x0_sq())
}

/// `G_n(x0; x)`.
pub fn make_g(n: i32) -> Operator {
    let [a, b] = one_minus_x0_sq();
    let num = &(&mono(1, [0, 0, n, 0, 0]) * &poly(&[(1, [2, 1, 0, 0, 0]), (1, [0, 0, 2, 0, 0])]))
        * &poly(&[(1, [2, 0, 0, 0, 0]), (1, [0, 1, 2, 0, 0])]);
    let down = RationalFn::frac(num, &[mono(1, [2, 1, 0, 0, 0]), a, b]);
    &Operator::term(ShiftKey::new(0, 0, 1), up_part(n)) + &Operator::term(ShiftKey::new(0, 0, -1), down)
}

/// `K_n(x0; x)`.
pub fn make_k(n: i32) -> Operator {
    let [a, b] = one_minus_x0_sq();
    let num = &(&mono(1, [0, 0, n, 0, 0]) * &poly(&[(1, [2, 1, 0, 0, 0]), (1, [0, 0, 2, 0, 0])]))
        * &poly(&[(1, [6, 1, 0, 0, 0]), (1, [0, 0, 2, 0, 0])]);
    let down = RationalFn::frac(num, &[mono(1, [4, 1, 0, 0, 0]), a, b]);
    &Operator::term(ShiftKey::new(0, 0, 1), up_part(n)) + &Operator::term(ShiftKey::new(0, 0, -1), down)
}
