//! Gaussian rationals `re + im·i` with arbitrary-precision parts.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Element of `Q(i)`. Both parts are kept in lowest terms with a positive
/// denominator, which `BigRational` guarantees.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar { re: BigRational::from_integer(n.into()), im: BigRational::zero() }
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        Scalar { re: BigRational::new(p.into(), q.into()), im: BigRational::zero() }
    }

    pub fn gaussian(re: i64, im: i64) -> Self {
        Scalar { re: BigRational::from_integer(re.into()), im: BigRational::from_integer(im.into()) }
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Scalar::from_int(1),
            1 => Scalar::i(),
            2 => Scalar::from_int(-1),
            _ => -Scalar::i(),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Scalar { re: self.re.clone(), im: -&self.im }
    }

    /// `|z|^2 = re^2 + im^2`.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let n = self.norm_sqr();
        Ok(Scalar { re: &self.re / &n, im: -&self.im / &n })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Scalar::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    /// Orientation used for branch choices: positive real part, or zero real
    /// part and positive imaginary part.
    pub fn is_positive_branch(&self) -> bool {
        if self.re.is_zero() {
            self.im.is_positive()
        } else {
            self.re.is_positive()
        }
    }

    /// Exact square root in `Q(i)`, returned on the positive branch.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        // (c + d i)^2 = a + b i  =>  c^2 = (a + |z|)/2,  d^2 = (|z| - a)/2
        let modulus = rational_sqrt(&self.norm_sqr())?;
        let two = BigRational::from_integer(2.into());
        let c2 = (&self.re + &modulus) / &two;
        let d2 = (&modulus - &self.re) / &two;
        let c = rational_sqrt(&c2)?;
        let mut d = rational_sqrt(&d2)?;
        // sign of d fixed by 2cd = b
        if !c.is_zero() && (&c * &d * &two) != self.im {
            d = -d;
        }
        let mut r = Scalar { re: c, im: d };
        if !r.is_positive_branch() {
            r = -r;
        }
        if &(&r * &r) == self {
            Some(r)
        } else {
            None
        }
    }
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = int_sqrt(q.numer())?;
    let d = int_sqrt(q.denom())?;
    Some(BigRational::new(n, d))
}

fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary total order (real part first) used only for canonical sorting.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.re.cmp(&other.re).then_with(|| self.im.cmp(&other.im))
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar { re: &self.re * &rhs.re, im: BigRational::zero() };
        }
        Scalar { re: &self.re * &rhs.re - &self.im * &rhs.im, im: &self.re * &rhs.im + &self.im * &rhs.re }
    }
}

/// Panics on a zero divisor; use [`Scalar::checked_div`] for the fallible form.
impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("zero divisor")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re, im: -self.im }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -&self.re, im: -&self.im }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

/// Renders a rational as `p/q`, always with an explicit denominator.
pub(crate) fn rational_to_pq(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::parse(0, format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::ZeroDivisor);
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

impl fmt::Display for Scalar {
    /// Canonical `a+bi` form with both parts as `p/q` rationals.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im = rational_to_pq(&self.im);
        if self.im.is_negative() {
            write!(f, "{}{}i", rational_to_pq(&self.re), im)
        } else {
            write!(f, "{}+{}i", rational_to_pq(&self.re), im)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Parses the `a+bi` rendering produced by `Display`, and also bare
    /// rationals such as `-3/4` or pure imaginaries such as `2i`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(body) = t.strip_suffix('i') {
            // split at the last sign that is not the leading one
            let split = body.char_indices().skip(1).filter(|&(_, c)| c == '+' || c == '-').map(|(k, _)| k).last();
            let (re, im) = match split {
                Some(k) => (&body[..k], &body[k..]),
                None => ("0", body),
            };
            let im = match im {
                "" | "+" => "1",
                "-" => "-1",
                other => other.strip_prefix('+').unwrap_or(other),
            };
            Ok(Scalar { re: parse_rational(re)?, im: parse_rational(im)? })
        } else {
            Ok(Scalar { re: parse_rational(&t)?, im: BigRational::zero() })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::from_int(-1));
    }

    #[test]
    fn conjugate_product() {
        let a: Scalar = "1/2+1/1i".parse().unwrap();
        let b: Scalar = "1/2-1/1i".parse().unwrap();
        assert_eq!(&a * &b, Scalar::from_ratio(5, 4));
    }

    #[test]
    fn zero_divisor() {
        assert_eq!(Scalar::i().checked_div(&Scalar::zero()), Err(Error::ZeroDivisor));
    }

    #[test]
    fn display_round_trip() {
        for s in ["0/1+0/1i", "-3/4+5/1i", "7/2-1/3i"] {
            let v: Scalar = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert_eq!("-2i".parse::<Scalar>().unwrap(), Scalar::gaussian(0, -2));
        assert_eq!("3".parse::<Scalar>().unwrap(), Scalar::from_int(3));
    }

    #[test]
    fn square_roots() {
        assert_eq!(Scalar::from_int(-1).sqrt(), Some(Scalar::i()));
        assert_eq!(Scalar::gaussian(0, 2).sqrt(), Some(Scalar::gaussian(1, 1)));
        assert_eq!(Scalar::from_ratio(9, 4).sqrt(), Some(Scalar::from_ratio(3, 2)));
        assert_eq!(Scalar::from_int(2).sqrt(), None);
    }

    #[test]
    fn powers_of_i() {
        assert_eq!(Scalar::i_pow(-1), -Scalar::i());
        assert_eq!(Scalar::i().pow(-3).unwrap(), Scalar::i());
    }
}
