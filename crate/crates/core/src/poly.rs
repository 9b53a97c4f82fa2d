//! Exact integer polynomials, coefficients stored low degree first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial(Vec<i64>);

impl IntPolynomial {
    pub fn new(mut coefficients: Vec<i64>) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        IntPolynomial(coefficients)
    }

    pub fn zero() -> Self {
        IntPolynomial(Vec::new())
    }

    pub fn constant(c: i64) -> Self {
        IntPolynomial::new(vec![c])
    }

    pub fn monomial(c: i64, degree: usize) -> Self {
        let mut v = vec![0; degree + 1];
        v[degree] = c;
        IntPolynomial::new(v)
    }

    /// `a + b X`.
    pub fn linear(a: i64, b: i64) -> Self {
        IntPolynomial::new(vec![a, b])
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(IntPolynomial::constant(1), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: i64) -> Self {
        IntPolynomial::new(self.0.iter().map(|a| a * c).collect())
    }

    /// `X^d P(1/X)`; `d` must be at least the degree.
    pub fn reflect(&self, d: usize) -> Self {
        assert!(self.0.len() <= d + 1, "reflection degree below polynomial degree");
        IntPolynomial::new((0..=d).map(|k| self.coeff(d - k)).collect())
    }

    pub fn is_palindromic(&self, d: usize) -> bool {
        self.0.len() <= d + 1 && self.reflect(d) == *self
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, &a| acc * x + a)
    }

    /// `Σ k^p a_k`, i.e. `(X d/dX)^p P` evaluated at 1.
    pub fn moment(&self, p: u32) -> i64 {
        self.0.iter().enumerate().map(|(k, &a)| (k as i64).pow(p) * a).sum()
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.0.len().max(rhs.0.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.0.len().max(rhs.0.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![0; self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        self.scale(-1)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for IntPolynomial {
    fn sum<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |a, b| &a + &b)
    }
}
