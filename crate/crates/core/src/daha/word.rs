use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::op_vars::{X, X0};
use crate::exact::{Context, LaurentPoly, RationalFn, Scalar};

const CTX: Context = Context::Operator;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    T0,
    T1,
    X,
    U0,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::T0, Letter::T1, Letter::X, Letter::U0];

    pub fn name(self) -> &'static str {
        match self {
            Letter::T0 => "T0",
            Letter::T1 => "T1",
            Letter::X => "X",
            Letter::U0 => "U0",
        }
    }

    pub fn from_name(s: &str) -> Option<Letter> {
        Letter::ALL.into_iter().find(|l| l.name() == s)
    }
}

/// A generator raised to a nonzero power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen {
    pub letter: Letter,
    pub power: i32,
}

impl Gen {
    pub fn new(letter: Letter, power: i32) -> Gen {
        assert!(power != 0, "generator power must be nonzero");
        Gen { letter, power }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.power == 1 {
            write!(f, "{}", self.letter.name())
        } else {
            write!(f, "{}^{}", self.letter.name(), self.power)
        }
    }
}

/// Freely reduced product of generators: adjacent powers of the same letter
/// are merged and zero powers dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Gen>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn gen(letter: Letter, power: i32) -> Word {
        Word::from_gens([Gen { letter, power }])
    }

    pub fn from_gens(gens: impl IntoIterator<Item = Gen>) -> Word {
        let mut w = Word::empty();
        for g in gens {
            w.push(g);
        }
        w
    }

    fn push(&mut self, g: Gen) {
        if g.power == 0 {
            return;
        }
        if let Some(last) = self.0.last_mut() {
            if last.letter == g.letter {
                last.power += g.power;
                if last.power == 0 {
                    self.0.pop();
                }
                return;
            }
        }
        self.0.push(g);
    }

    pub fn gens(&self) -> &[Gen] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut w = self.clone();
        for g in &o.0 {
            w.push(*g);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|g| Gen { letter: g.letter, power: -g.power }).collect())
    }

    pub fn pow(&self, k: i32) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::empty();
        for _ in 0..k.unsigned_abs() {
            w = w.concat(&base);
        }
        w
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Coefficients must commute with every generator image, so they may only
/// involve `u`, `b1` and `b2`.
fn check_central(c: &RationalFn) -> Result<()> {
    let touches = |p: &LaurentPoly| p.terms().iter().any(|(m, _)| m.0[X] != 0 || m.0[X0] != 0);
    if touches(c.num()) || c.den_factors().iter().any(|(f, _)| touches(f.poly())) {
        return Err(Error::Unsupported(format!("coefficient {c} does not commute with the generators")));
    }
    Ok(())
}

/// Invertible element `coeff · word`.
#[derive(Clone, Debug, PartialEq)]
pub struct Unit {
    pub coeff: RationalFn,
    pub word: Word,
}

impl Unit {
    pub fn new(coeff: RationalFn, word: Word) -> Result<Unit> {
        if coeff.is_zero() {
            return Err(Error::NonUnit("zero coefficient".into()));
        }
        check_central(&coeff)?;
        Ok(Unit { coeff, word })
    }

    pub fn word(word: Word) -> Unit {
        Unit { coeff: RationalFn::one(CTX), word }
    }

    /// `c · word` with a scalar coefficient `c` times `u^k`.
    pub fn scaled(c: Scalar, u_power: i32, word: Word) -> Unit {
        let mut m = crate::exact::Monomial::one();
        m.0[crate::exact::op_vars::U] = u_power;
        Unit { coeff: RationalFn::from_poly(LaurentPoly::term(CTX, m, c)), word }
    }

    pub fn inverse(&self) -> Unit {
        Unit { coeff: self.coeff.inv().expect("unit coefficient is nonzero"), word: self.word.inverse() }
    }

    pub fn mul(&self, o: &Unit) -> Unit {
        Unit { coeff: &self.coeff * &o.coeff, word: self.word.concat(&o.word) }
    }

    pub fn pow(&self, k: i32) -> Unit {
        Unit { coeff: self.coeff.pow(k).expect("unit coefficient is nonzero"), word: self.word.pow(k) }
    }
}

/// Finite sum `Σ cᵢ · wᵢ` with central coefficients.
#[derive(Clone, Default, PartialEq)]
pub struct GenPoly {
    terms: BTreeMap<Word, RationalFn>,
}

impl GenPoly {
    pub fn zero() -> GenPoly {
        GenPoly::default()
    }

    pub fn one() -> GenPoly {
        GenPoly::from_unit(Unit::word(Word::empty()))
    }

    pub fn from_word(w: Word) -> GenPoly {
        GenPoly::from_unit(Unit::word(w))
    }

    pub fn from_unit(u: Unit) -> GenPoly {
        let mut p = GenPoly::zero();
        p.add_term(u.coeff, u.word);
        p
    }

    pub fn constant(c: RationalFn) -> Result<GenPoly> {
        check_central(&c)?;
        let mut p = GenPoly::zero();
        p.add_term(c, Word::empty());
        Ok(p)
    }

    fn add_term(&mut self, c: RationalFn, w: Word) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.remove(&w);
        let sum = match entry {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(w, sum);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &RationalFn)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The single term, if this element is `c · w`.
    pub fn as_unit(&self) -> Option<Unit> {
        if self.terms.len() != 1 {
            return None;
        }
        let (w, c) = self.terms.iter().next().expect("one term");
        Some(Unit { coeff: c.clone(), word: w.clone() })
    }

    pub fn add(&self, o: &GenPoly) -> GenPoly {
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(c.clone(), w.clone());
        }
        r
    }

    pub fn sub(&self, o: &GenPoly) -> GenPoly {
        self.add(&o.scale(&RationalFn::constant(CTX, Scalar::from_int(-1))))
    }

    pub fn scale(&self, c: &RationalFn) -> GenPoly {
        let mut r = GenPoly::zero();
        for (w, d) in &self.terms {
            r.add_term(c * d, w.clone());
        }
        r
    }

    pub fn mul(&self, o: &GenPoly) -> GenPoly {
        let mut r = GenPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                r.add_term(c1 * c2, w1.concat(w2));
            }
        }
        r
    }

    /// Parses `term (+ term)*`, each term being an optional `-`, an optional
    /// bracketed polynomial coefficient in `u, b1, b2` and a whitespace
    /// separated word such as `T0 T1^-1 X U0^2` (`1` for the empty word).
    pub fn parse(text: &str) -> Result<GenPoly> {
        let mut out = GenPoly::zero();
        let mut depth = 0usize;
        let mut start = 0usize;
        let mut pieces = Vec::new();
        for (i, ch) in text.char_indices() {
            match ch {
                '[' => depth += 1,
                ']' => {
                    if depth == 0 {
                        return Err(Error::parse(i, "unbalanced ']'"));
                    }
                    depth -= 1;
                }
                '+' if depth == 0 => {
                    pieces.push((start, &text[start..i]));
                    start = i + 1;
                }
                _ => {}
            }
        }
        if depth != 0 {
            return Err(Error::parse(text.len(), "unclosed '['"));
        }
        pieces.push((start, &text[start..]));
        for (offset, piece) in pieces {
            let (c, w) = parse_term(piece, offset)?;
            out.add_term(c, w);
        }
        Ok(out)
    }
}

/// Whitespace-separated tokens with their byte offsets.
fn tokens(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        if c.is_whitespace() {
            if let Some(st) = start.take() {
                out.push((st, &s[st..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(st) = start {
        out.push((st, &s[st..]));
    }
    out
}

fn parse_term(piece: &str, offset: usize) -> Result<(RationalFn, Word)> {
    let mut rest = piece.trim_start();
    let mut pos = offset + (piece.len() - rest.len());
    if rest.trim().is_empty() {
        return Err(Error::parse(pos, "empty term"));
    }
    let mut coeff = RationalFn::one(CTX);
    if let Some(r) = rest.strip_prefix('-') {
        coeff = -coeff;
        pos += 1;
        let t = r.trim_start();
        pos += r.len() - t.len();
        rest = t;
    }
    if let Some(r) = rest.strip_prefix('[') {
        let close = r.find(']').ok_or_else(|| Error::parse(pos, "unclosed '['"))?;
        let p = LaurentPoly::parse(CTX, &r[..close]).map_err(|e| match e {
            Error::Parse { pos: p, msg } => Error::parse(pos + 1 + p, msg),
            other => other,
        })?;
        let c = RationalFn::from_poly(p);
        check_central(&c).map_err(|_| Error::parse(pos, "coefficient may only involve u, b1, b2"))?;
        coeff = &coeff * &c;
        pos += close + 2;
        rest = &r[close + 1..];
    }
    let mut gens = Vec::new();
    for (at, tok) in tokens(rest) {
        let at = pos + at;
        if tok == "1" {
            continue;
        }
        let (name, power) = match tok.split_once('^') {
            Some((n, p)) => (n, p.parse::<i32>().map_err(|_| Error::parse(at + n.len() + 1, format!("bad power '{p}'")))?),
            None => (tok, 1),
        };
        let letter = Letter::from_name(name).ok_or_else(|| Error::parse(at, format!("unknown generator '{name}'")))?;
        if power == 0 {
            return Err(Error::parse(at, "zero power"));
        }
        gens.push(Gen { letter, power });
    }
    Ok((coeff, Word::from_gens(gens)))
}

impl fmt::Display for GenPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(w, c)| if c.is_one() { w.to_string() } else { format!("[{c}] {w}") }).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for GenPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `w + w^{-1}` for a unit `w`.
pub fn word_ch(w: &GenPoly) -> Result<GenPoly> {
    let u = w.as_unit().ok_or_else(|| Error::NonUnit(w.to_string()))?;
    Ok(GenPoly::from_unit(u.clone()).add(&GenPoly::from_unit(u.inverse())))
}

/// `w - w^{-1}` for a unit `w`.
pub fn word_sh(w: &GenPoly) -> Result<GenPoly> {
    let u = w.as_unit().ok_or_else(|| Error::NonUnit(w.to_string()))?;
    Ok(GenPoly::from_unit(u.clone()).sub(&GenPoly::from_unit(u.inverse())))
}
