//! Free-group model of the fundamental group of the twice-punctured torus,
//! the twist automorphisms acting on it, and the twist-word notation.

use std::fmt;

use crate::error::{Error, Result};
use crate::report::{Check, Level, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    A,
    B,
    C1,
    C2,
}

impl Gen {
    pub const ALL: [Gen; 4] = [Gen::A, Gen::B, Gen::C1, Gen::C2];

    fn name(self) -> &'static str {
        match self {
            Gen::A => "A",
            Gen::B => "B",
            Gen::C1 => "C1",
            Gen::C2 => "C2",
        }
    }
}

/// A letter `g^{±1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: Gen,
    pub inverse: bool,
}

impl Letter {
    fn inv(self) -> Letter {
        Letter { gen: self.gen, inverse: !self.inverse }
    }
}

/// Freely reduced word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreeWord(Vec<Letter>);

impl FreeWord {
    pub fn empty() -> FreeWord {
        FreeWord(Vec::new())
    }

    pub fn letter(gen: Gen, power: i32) -> FreeWord {
        let l = Letter { gen, inverse: power < 0 };
        free_reduce(std::iter::repeat_n(l, power.unsigned_abs() as usize).collect())
    }

    /// Word from `(generator, ±1)` pairs, reduced.
    pub fn from_letters(ls: &[(Gen, i32)]) -> FreeWord {
        let mut w = FreeWord::empty();
        for &(g, p) in ls {
            w = w.mul(&FreeWord::letter(g, p));
        }
        w
    }

    /// Unreduced word; pass it through [`free_reduce`].
    pub fn raw(ls: &[(Gen, i32)]) -> Vec<Letter> {
        ls.iter().flat_map(|&(g, p)| std::iter::repeat_n(Letter { gen: g, inverse: p < 0 }, p.unsigned_abs() as usize)).collect()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, o: &FreeWord) -> FreeWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        free_reduce(v)
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    /// Removes matching inverse letters from both ends.
    pub fn cyclic_reduce(&self) -> FreeWord {
        let mut v = self.0.as_slice();
        while v.len() >= 2 && v[0] == v[v.len() - 1].inv() {
            v = &v[1..v.len() - 1];
        }
        FreeWord(v.to_vec())
    }

    fn rotations(&self) -> impl Iterator<Item = FreeWord> + '_ {
        (0..self.0.len().max(1)).map(move |k| {
            let mut v = self.0[k.min(self.0.len())..].to_vec();
            v.extend_from_slice(&self.0[..k.min(self.0.len())]);
            FreeWord(v)
        })
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> =
            self.0.iter().map(|l| if l.inverse { format!("{}^-1", l.gen.name()) } else { l.gen.name().to_string() }).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Cancels adjacent inverse pairs until none remain.
pub fn free_reduce(letters: Vec<Letter>) -> FreeWord {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for l in letters {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    FreeWord(out)
}

/// `A B A^{-1} B^{-1} C1 C2`.
pub fn relator() -> FreeWord {
    FreeWord::from_letters(&[(Gen::A, 1), (Gen::B, 1), (Gen::A, -1), (Gen::B, -1), (Gen::C1, 1), (Gen::C2, 1)])
}

/// Endomorphism given by generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeMap {
    images: [FreeWord; 4],
}

impl FreeMap {
    pub fn identity() -> FreeMap {
        FreeMap { images: Gen::ALL.map(|g| FreeWord::letter(g, 1)) }
    }

    fn with(mut self, g: Gen, w: FreeWord) -> FreeMap {
        self.images[g as usize] = w;
        self
    }

    pub fn image(&self, g: Gen) -> &FreeWord {
        &self.images[g as usize]
    }

    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        let mut raw = Vec::new();
        for l in w.letters() {
            let img = self.image(l.gen);
            if l.inverse {
                raw.extend(img.inverse().0);
            } else {
                raw.extend_from_slice(&img.0);
            }
        }
        free_reduce(raw)
    }

    /// `self ∘ o`.
    pub fn compose(&self, o: &FreeMap) -> FreeMap {
        FreeMap { images: o.images.clone().map(|w| self.apply(&w)) }
    }
}

/// The automorphism `δ_i`, or its inverse when `inverse` is set.
pub fn delta(i: u8, inverse: bool) -> Result<FreeMap> {
    use Gen::*;
    let w = FreeWord::from_letters;
    let id = FreeMap::identity();
    Ok(match (i, inverse) {
        (1, false) => id.with(B, w(&[(B, 1), (A, -1)])),
        (1, true) => id.with(B, w(&[(B, 1), (A, 1)])),
        (2, false) => id.with(A, w(&[(A, 1), (B, 1)])),
        (2, true) => id.with(A, w(&[(A, 1), (B, -1)])),
        (3, false) => id
            .with(A, w(&[(C2, 1), (A, 1), (C2, -1)]))
            .with(B, w(&[(B, 1), (A, -1), (C2, -1)]))
            .with(C2, w(&[(C2, 1), (A, 1), (C2, 1), (A, -1), (C2, -1)])),
        (3, true) => id
            .with(A, w(&[(A, -1), (C2, -1), (A, 1), (C2, 1), (A, 1)]))
            .with(B, w(&[(B, 1), (C2, 1), (A, 1)]))
            .with(C2, w(&[(A, -1), (C2, 1), (A, 1)])),
        _ => return Err(Error::Unsupported(format!("twist index {i}"))),
    })
}

pub fn delta_apply(i: u8, w: &FreeWord) -> Result<FreeWord> {
    Ok(delta(i, false)?.apply(w))
}

/// True when `w` is conjugate to a cyclic rotation of `target` or of its
/// inverse.
pub fn conjugate_to(w: &FreeWord, target: &FreeWord) -> bool {
    let cw = w.cyclic_reduce();
    let t = target.cyclic_reduce();
    let ti = t.inverse().cyclic_reduce();
    if cw.len() != t.len() {
        return false;
    }
    let found = t.rotations().chain(ti.rotations()).any(|r| r == cw);
    found
}

/// Whether `δ_i` maps the relator to a conjugate of itself or its inverse.
pub fn relator_preserved(i: u8) -> Result<bool> {
    let img = delta_apply(i, &relator())?;
    Ok(conjugate_to(&img, &relator()))
}

/// Parses twist notation such as `2,1^-3` or `1,2,3,-1,-2` into a flat list
/// of signed indices in application order.
pub fn parse_twist_word(text: &str) -> Result<Vec<i8>> {
    let mut out = Vec::new();
    if text.trim().is_empty() {
        return Ok(out);
    }
    let mut offset = 0;
    for item in text.split(',') {
        let lead = item.len() - item.trim_start().len();
        let at = offset + lead;
        let body = item.trim();
        offset += item.len() + 1;
        if body.is_empty() {
            return Err(Error::parse(at, "empty twist item"));
        }
        let (base, power) = match body.split_once('^') {
            Some((b, p)) => {
                let p: i32 = p.trim().parse().map_err(|_| Error::parse(at + b.len() + 1, format!("bad power '{p}'")))?;
                (b.trim(), p)
            }
            None => (body, 1),
        };
        let idx: i8 = base.parse().map_err(|_| Error::parse(at, format!("bad twist index '{base}'")))?;
        if !(1..=3).contains(&idx.abs()) {
            return Err(Error::parse(at, format!("twist index {idx} out of range")));
        }
        let signed = if power < 0 { -idx } else { idx };
        out.extend(std::iter::repeat_n(signed, power.unsigned_abs() as usize));
    }
    Ok(out)
}

fn bool_check(id: impl Into<String>, pass: bool) -> Check {
    Check::new(id, if pass { Level::Plain } else { Level::Neither }, pass, usize::from(!pass))
}

/// Relator preservation, verbatim reduction for `δ1` and `δ2`, inverse maps,
/// and a perturbed map that must not preserve the relator.
pub fn verify_pi1() -> Report {
    let mut checks = Vec::new();
    for i in 1..=3u8 {
        checks
            .push(Check::timed(|| bool_check(format!("pi1/delta{i}/relator_preserved"), relator_preserved(i).unwrap_or(false))));
        checks.push(Check::timed(|| {
            let ok = match (delta(i, false), delta(i, true)) {
                (Ok(d), Ok(e)) => d.compose(&e) == FreeMap::identity() && e.compose(&d) == FreeMap::identity(),
                _ => false,
            };
            bool_check(format!("pi1/delta{i}/inverse"), ok)
        }));
    }
    for i in 1..=2u8 {
        checks.push(Check::timed(|| {
            bool_check(format!("pi1/delta{i}/relator_verbatim"), delta_apply(i, &relator()).ok() == Some(relator()))
        }));
    }
    let bad = FreeMap::identity().with(Gen::B, FreeWord::from_letters(&[(Gen::A, 1), (Gen::B, 1)]));
    let preserved = conjugate_to(&bad.apply(&relator()), &relator());
    checks.push(
        Check::new(
            "pi1/negative/B_to_AB",
            if preserved { Level::Plain } else { Level::Neither },
            !preserved,
            usize::from(preserved),
        )
        .with_detail("negative control"),
    );
    Report::new(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Gen::*;

    #[test]
    fn reduction() {
        assert!(free_reduce(FreeWord::raw(&[(A, 1), (A, -1)])).is_empty());
        let w = free_reduce(FreeWord::raw(&[(A, 1), (B, 1), (B, -1), (A, 1)]));
        assert_eq!(w, FreeWord::from_letters(&[(A, 2)]));
        // A (B A^-1) A^-1 (A B^-1) C1 C2
        let raw = FreeWord::raw(&[(A, 1), (B, 1), (A, -1), (A, -1), (A, 1), (B, -1), (C1, 1), (C2, 1)]);
        assert_eq!(free_reduce(raw), relator());
    }

    #[test]
    fn delta_images() {
        assert_eq!(delta_apply(2, &FreeWord::letter(A, 1)).unwrap(), FreeWord::from_letters(&[(A, 1), (B, 1)]));
        assert_eq!(delta_apply(2, &FreeWord::letter(B, 1)).unwrap(), FreeWord::letter(B, 1));
        assert_eq!(delta_apply(3, &FreeWord::letter(C1, 1)).unwrap(), FreeWord::letter(C1, 1));
    }

    #[test]
    fn relator_is_preserved() {
        assert_eq!(delta_apply(1, &relator()).unwrap(), relator());
        assert_eq!(delta_apply(2, &relator()).unwrap(), relator());
        for i in 1..=3 {
            assert!(relator_preserved(i).unwrap());
        }
    }

    #[test]
    fn inverses() {
        for i in 1..=3 {
            let d = delta(i, false).unwrap();
            let e = delta(i, true).unwrap();
            assert_eq!(d.compose(&e), FreeMap::identity());
            assert_eq!(e.compose(&d), FreeMap::identity());
        }
    }

    #[test]
    fn twist_words() {
        assert_eq!(parse_twist_word("1^2").unwrap(), vec![1, 1]);
        assert_eq!(parse_twist_word("2,1^-3").unwrap(), vec![2, -1, -1, -1]);
        assert_eq!(parse_twist_word("1,2,3,-1,-2").unwrap(), vec![1, 2, 3, -1, -2]);
        assert!(matches!(parse_twist_word("1,,2"), Err(Error::Parse { pos: 2, .. })));
        assert!(parse_twist_word("4").is_err());
    }

    #[test]
    fn perturbed_relator_is_not_preserved() {
        let bad = FreeMap::identity().with(B, FreeWord::from_letters(&[(A, 1), (B, 1)]));
        assert!(!conjugate_to(&bad.apply(&relator()), &relator()));
    }

    #[test]
    fn suite_passes() {
        let r = verify_pi1();
        assert!(r.all_pass(), "{}", r.render_table());
        assert_eq!(r.total(), 9);
    }
}
