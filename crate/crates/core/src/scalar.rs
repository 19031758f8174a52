//! Scalar and coefficient-ring abstractions.
//!
//! Everything numeric in the crate is generic over a [`Scalar`] field. The
//! exact instance is [`BigRational`]; `f64` and `f32` are provided for quick
//! numeric sanity runs and are never used by the verification paths.
//!
//! Power series coefficients live in a [`Coeff`] ring over a scalar: either the
//! scalar itself (χ already specialized to a number) or a polynomial in χ.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

/// A field of characteristic zero that the series and polynomial code can run over.
pub trait Scalar:
    Clone + Debug + PartialEq + Send + Sync + Num + Neg<Output = Self> + FromPrimitive + 'static
{
    /// The image of `num / den`. `den` must be nonzero.
    fn from_ratio(num: &BigInt, den: &BigInt) -> Self;

    fn from_rational(q: &BigRational) -> Self {
        Self::from_ratio(q.numer(), q.denom())
    }

    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("every scalar field contains the integers")
    }

    /// Whether the value is an integer; floats allow a relative slack of √ε.
    fn is_integral(&self) -> bool;
}

impl Scalar for BigRational {
    fn from_ratio(num: &BigInt, den: &BigInt) -> Self {
        BigRational::new(num.clone(), den.clone())
    }

    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

macro_rules! float_scalar {
    ($($t:ty)*) => ($(
        impl Scalar for $t {
            fn from_ratio(num: &BigInt, den: &BigInt) -> Self {
                let q = BigRational::new(num.clone(), den.clone());
                q.to_f64().unwrap_or(f64::NAN) as $t
            }

            fn is_integral(&self) -> bool {
                let slack = <$t>::EPSILON.sqrt() * self.abs().max(1.0);
                self.is_finite() && (self - self.round()).abs() <= slack
            }
        }
    )*)
}

float_scalar!(f32 f64);

/// A commutative ring of series coefficients, an algebra over its scalar field.
pub trait Coeff:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    type Scalar: Scalar;

    fn from_scalar(s: Self::Scalar) -> Self;

    fn scale(&self, s: &Self::Scalar) -> Self;
}

impl<T: Scalar> Coeff for T {
    type Scalar = T;

    fn from_scalar(s: T) -> Self {
        s
    }

    fn scale(&self, s: &T) -> Self {
        self.clone() * s.clone()
    }
}

/// `n / d` as a big rational.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `(-1)^k`.
pub fn sign_pow(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Sign of a rational, as -1, 0 or 1.
pub fn signum(q: &BigRational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}
