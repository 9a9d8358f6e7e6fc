//! The polynomials `φ_n(x) = x φ_{n-1}(x) + φ_{n-2}(x)`, `φ_0 = 1`, `φ_1 = x`,
//! extended to negative `n` by running the recursion backwards.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exact::{RationalFn, Scalar};
use crate::qdiff::{make_g, Operator};

/// Integer coefficients, index = degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiPoly(pub Vec<BigInt>);

impl PhiPoly {
    fn trim(mut self) -> PhiPoly {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    fn x_times(&self) -> PhiPoly {
        let mut c = vec![BigInt::zero()];
        c.extend(self.0.iter().cloned());
        PhiPoly(c).trim()
    }

    fn combine(&self, o: &PhiPoly, sign: i32) -> PhiPoly {
        let n = self.0.len().max(o.0.len());
        let get = |p: &PhiPoly, k: usize| p.0.get(k).cloned().unwrap_or_default();
        PhiPoly((0..n).map(|k| if sign > 0 { get(self, k) + get(o, k) } else { get(self, k) - get(o, k) }).collect()).trim()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    /// Evaluation at a Gaussian rational.
    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.0.iter().rev() {
            acc = &(&acc * x) + &Scalar::new(BigRational::from_integer(c.clone()), BigRational::zero());
        }
        acc
    }

    /// Horner evaluation at an operator.
    pub fn eval_operator(&self, a: &Operator) -> Operator {
        let mut acc = Operator::zero();
        for c in self.0.iter().rev() {
            let c = Scalar::new(BigRational::from_integer(c.clone()), BigRational::zero());
            acc = &(&acc * a) + &Operator::scalar(c);
        }
        acc
    }
}

pub fn phi(n: i32) -> PhiPoly {
    let one = PhiPoly(vec![BigInt::one()]);
    if n >= 0 {
        let (mut a, mut b) = (one.clone(), one.x_times());
        for _ in 0..n {
            let c = b.x_times().combine(&a, 1);
            a = b;
            b = c;
        }
        a
    } else {
        // φ_{k-2} = φ_k - x φ_{k-1}, starting from (φ_0, φ_{-1})
        let (mut a, mut b) = (one, PhiPoly(Vec::new()));
        for _ in 0..(-n - 1) {
            let c = a.combine(&b.x_times(), -1);
            a = b;
            b = c;
        }
        b
    }
}

/// `φ_n(q^{-1/4} G_0(x0; x))` as an operator.
pub fn phi_hat(n: i32) -> Operator {
    let g = make_g(0).scale_by(&RationalFn::from_poly(crate::exact::op_vars::mono(1, [-1, 0, 0, 0, 0])));
    phi(n).eval_operator(&g)
}
