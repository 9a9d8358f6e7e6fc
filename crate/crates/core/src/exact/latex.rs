//! LaTeX rendering of scalars, polynomials and rational functions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{LaurentPoly, RationalFn, Scalar};

fn var_latex(name: &str) -> String {
    let split = name.find(|c: char| c.is_ascii_digit()).unwrap_or(name.len());
    let (base, idx) = name.split_at(split);
    if idx.is_empty() {
        base.to_string()
    } else {
        format!("{base}_{{{idx}}}")
    }
}

fn rational_latex(r: &BigRational) -> String {
    if r.denom() == &BigInt::one() {
        r.numer().to_string()
    } else {
        let sign = if r.is_negative() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", r.numer().abs(), r.denom())
    }
}

/// Coefficient text and whether it needs a leading sign of its own.
fn coeff_latex(c: &Scalar, bare_monomial: bool) -> String {
    let (re, im) = (c.re(), c.im());
    if im.is_zero() {
        if bare_monomial && re.is_one() {
            return String::new();
        }
        if bare_monomial && (-re).is_one() {
            return "-".into();
        }
        return rational_latex(re);
    }
    if re.is_zero() {
        if im.is_one() {
            return "\\mathrm{i}".into();
        }
        if (-im).is_one() {
            return "-\\mathrm{i}".into();
        }
        return format!("{}\\,\\mathrm{{i}}", rational_latex(im));
    }
    let sign = if im.is_negative() { "-" } else { "+" };
    format!("\\left({}{}{}\\,\\mathrm{{i}}\\right)", rational_latex(re), sign, rational_latex(&im.abs()))
}

pub fn scalar_latex(c: &Scalar) -> String {
    coeff_latex(c, false)
}

pub fn poly_latex(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let names = p.context().var_names();
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        let mono: Vec<String> = names
            .iter()
            .enumerate()
            .filter(|&(v, _)| m.0[v] != 0)
            .map(|(v, n)| match m.0[v] {
                1 => var_latex(n),
                e => format!("{}^{{{e}}}", var_latex(n)),
            })
            .collect();
        let mut coeff = coeff_latex(c, !mono.is_empty());
        if mono.is_empty() && coeff.is_empty() {
            coeff = "1".into();
        }
        if k > 0 {
            match coeff.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    coeff = rest.to_string();
                }
                None => out.push_str(" + "),
            }
        }
        out.push_str(&coeff);
        out.push_str(&mono.join(" "));
    }
    out
}

pub fn ratfn_latex(f: &RationalFn) -> String {
    if f.is_poly() {
        poly_latex(f.num())
    } else {
        format!("\\frac{{{}}}{{{}}}", poly_latex(f.num()), poly_latex(&f.den()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::op_vars::{cmono, poly};

    #[test]
    fn renders_terms() {
        let p = poly(&[(1, [0, 1, 0, 0, 0]), (-2, [0, 0, 1, 0, 0]), (1, [0; 5])]);
        assert_eq!(poly_latex(&p), "x - 2x_{0} + 1");
        assert_eq!(poly_latex(&cmono(Scalar::i(), [-3, 0, 0, 0, 0])), "\\mathrm{i}u^{-3}");
        assert_eq!(scalar_latex(&Scalar::from_ratio(-1, 2)), "-\\frac{1}{2}");
        assert_eq!(scalar_latex(&Scalar::gaussian(1, -1)), "\\left(1-1\\,\\mathrm{i}\\right)");
    }
}
