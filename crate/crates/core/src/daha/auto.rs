//! Algebra automorphisms given by generator images, each image a unit.

use super::word::{Gen, GenPoly, Letter, Unit, Word};
use crate::error::{Error, Result};
use crate::exact::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Automorphism {
    /// Images of `T0, T1, X, U0`, in that order.
    images: [Unit; 4],
}

fn idx(l: Letter) -> usize {
    match l {
        Letter::T0 => 0,
        Letter::T1 => 1,
        Letter::X => 2,
        Letter::U0 => 3,
    }
}

fn w(gens: &[(Letter, i32)]) -> Word {
    Word::from_gens(gens.iter().map(|&(l, p)| Gen::new(l, p)))
}

impl Automorphism {
    pub fn identity() -> Automorphism {
        Automorphism { images: Letter::ALL.map(|l| Unit::word(Word::gen(l, 1))) }
    }

    pub fn from_images(images: [Unit; 4]) -> Automorphism {
        Automorphism { images }
    }

    pub fn image(&self, l: Letter) -> &Unit {
        &self.images[idx(l)]
    }

    fn with(mut self, l: Letter, u: Unit) -> Automorphism {
        self.images[idx(l)] = u;
        self
    }

    pub fn apply_unit(&self, u: &Unit) -> Unit {
        let mut acc = Unit { coeff: u.coeff.clone(), word: Word::empty() };
        for g in u.word.gens() {
            acc = acc.mul(&self.image(g.letter).pow(g.power));
        }
        acc
    }

    pub fn apply(&self, p: &GenPoly) -> GenPoly {
        let mut out = GenPoly::zero();
        for (w, c) in p.terms() {
            let u = self.apply_unit(&Unit { coeff: c.clone(), word: w.clone() });
            out = out.add(&GenPoly::from_unit(u));
        }
        out
    }

    /// `self ∘ o`: apply `o` first.
    pub fn compose(&self, o: &Automorphism) -> Automorphism {
        Automorphism { images: o.images.clone().map(|u| self.apply_unit(&u)) }
    }

    pub fn pow(&self, k: u32) -> Automorphism {
        let mut r = Automorphism::identity();
        for _ in 0..k {
            r = r.compose(self);
        }
        r
    }
}

/// The twist automorphism with index `i ∈ {1, 2, 3}`; `sign = -1` gives its
/// inverse.
pub fn automorphism(i: u8, sign: i8) -> Result<Automorphism> {
    use Letter::*;
    let id = Automorphism::identity();
    let inv = match sign {
        1 => false,
        -1 => true,
        _ => return Err(Error::Unsupported(format!("twist sign {sign}"))),
    };
    let i_ = Scalar::i();
    let mi = Scalar::gaussian(0, -1);
    Ok(match (i, inv) {
        // U0 -> -i q^{1/4} U0 T0^{-1}
        (1, false) => id.with(U0, Unit::scaled(mi, 1, w(&[(U0, 1), (T0, -1)]))),
        (1, true) => id.with(U0, Unit::scaled(i_, -1, w(&[(U0, 1), (T0, 1)]))),
        // T0 -> i q^{-1/4} U0 T0
        (2, false) => id.with(T0, Unit::scaled(i_, -1, w(&[(U0, 1), (T0, 1)]))),
        (2, true) => id.with(T0, Unit::scaled(mi, 1, w(&[(U0, -1), (T0, 1)]))),
        // X -> (T0 T1)^{-1} X T1 T0, U0 -> q^{-1/4} (T0 T1)^{-1} U0
        (3, false) => id
            .with(X, Unit::word(w(&[(T1, -1), (T0, -1), (X, 1), (T1, 1), (T0, 1)])))
            .with(U0, Unit::scaled(Scalar::one(), -1, w(&[(T1, -1), (T0, -1), (U0, 1)]))),
        (3, true) => id
            .with(X, Unit::word(w(&[(T0, 1), (T1, 1), (X, 1), (T0, -1), (T1, -1)])))
            .with(U0, Unit::scaled(Scalar::one(), 1, w(&[(T0, 1), (T1, 1), (U0, 1)]))),
        _ => return Err(Error::Unsupported(format!("twist index {i}"))),
    })
}

pub fn automorphism_apply(a: &Automorphism, p: &GenPoly) -> GenPoly {
    a.apply(p)
}
