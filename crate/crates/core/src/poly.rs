//! Polynomials in the formal Euler characteristic χ.

use std::collections::BTreeMap;
use std::fmt::{self, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::{Coeff, Scalar};

/// A polynomial in χ with coefficients in `T`.
///
/// Zero coefficients are never stored, so the zero polynomial has an empty
/// coefficient map and structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: BTreeMap<usize, T>,
}

impl<T: Scalar> Poly<T> {
    pub fn constant(c: T) -> Self {
        Self::monomial(c, 0)
    }

    /// The variable χ itself.
    pub fn chi() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(degree, c);
        }
        Self { coeffs }
    }

    /// Builds a polynomial from `(degree, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (usize, T)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (d, c) in terms {
            p.add_term(d, c);
        }
        p
    }

    /// Coefficients in increasing degree; `coeffs[k]` multiplies χ^k.
    pub fn from_dense(coeffs: &[T]) -> Self {
        Self::from_terms(coeffs.iter().cloned().enumerate())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, degree: usize) -> T {
        self.coeffs.get(&degree).cloned().unwrap_or_else(T::zero)
    }

    /// Nonzero terms in increasing degree.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &T)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Horner evaluation at χ = `at`.
    pub fn eval(&self, at: &T) -> T {
        let Some(deg) = self.degree() else {
            return T::zero();
        };
        let mut acc = T::zero();
        for d in (0..=deg).rev() {
            acc = acc * at.clone() + self.coeff(d);
        }
        acc
    }

    /// Maps every coefficient into another scalar field.
    pub fn map_scalar<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::from_terms(self.terms().map(|(d, c)| (d, f(c))))
    }

    fn add_term(&mut self, degree: usize, c: T) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.remove(&degree) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.coeffs.insert(degree, sum);
        }
    }
}

impl<T: Scalar> Zero for Poly<T> {
    fn zero() -> Self {
        Self {
            coeffs: BTreeMap::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Scalar> One for Poly<T> {
    fn one() -> Self {
        Self::constant(T::one())
    }
}

impl<T: Scalar> Add for Poly<T> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (d, c) in rhs.coeffs {
            self.add_term(d, c);
        }
        self
    }
}

impl<T: Scalar> Sub for Poly<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Scalar> Neg for Poly<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            coeffs: self.coeffs.into_iter().map(|(d, c)| (d, -c)).collect(),
        }
    }
}

impl<T: Scalar> Mul for Poly<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zero();
        for (da, ca) in &self.coeffs {
            for (db, cb) in &rhs.coeffs {
                out.add_term(da + db, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<T: Scalar> Coeff for Poly<T> {
    type Scalar = T;

    fn from_scalar(s: T) -> Self {
        Self::constant(s)
    }

    fn scale(&self, s: &T) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(d, c)| (*d, c.clone() * s.clone()))
                .collect(),
        }
    }
}

impl<T: Scalar + Display> Poly<T> {
    /// Renders terms in decreasing degree as `c*var^k`, e.g. `-1/12*x^4+1/2*x`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (d, c) in self.terms().rev() {
            let body = if d == 0 {
                c.to_string()
            } else {
                let power = if d == 1 {
                    var.to_string()
                } else {
                    format!("{var}^{d}")
                };
                if c.is_one() {
                    power
                } else if (-c.clone()).is_one() {
                    format!("-{power}")
                } else {
                    format!("{c}*{power}")
                }
            };
            if !out.is_empty() && !body.starts_with('-') {
                out.push('+');
            }
            out.push_str(&body);
        }
        out
    }
}

impl<T: Scalar + Display> Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("χ"))
    }
}
