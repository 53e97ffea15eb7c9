//! Exact scalar fields: rationals and Gaussian rationals.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Rational complex number `a + b i`.
pub type GaussianRational = Complex<Rational>;

/// Commutative ring with unit. Implemented by the scalar fields and by
/// polynomials, so that matrices and tensors can carry either.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(n: i64) -> Self;

    /// Multiply by a rational constant.
    fn scaled(&self, q: &Rational) -> Self;
}

/// A field of exact scalars.
pub trait Field: Ring + Div<Output = Self> {
    fn from_rational(q: Rational) -> Self;

    /// Complex conjugate; the identity on real fields.
    fn conj(&self) -> Self;

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Ring for Rational {
    fn from_i64(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn scaled(&self, q: &Rational) -> Self {
        self * q
    }
}

impl Field for Rational {
    fn from_rational(q: Rational) -> Self {
        q
    }

    fn conj(&self) -> Self {
        self.clone()
    }
}

impl Ring for GaussianRational {
    fn from_i64(n: i64) -> Self {
        Complex::new(Rational::from_i64(n), Rational::zero())
    }

    fn scaled(&self, q: &Rational) -> Self {
        Complex::new(&self.re * q, &self.im * q)
    }
}

impl Field for GaussianRational {
    fn from_rational(q: Rational) -> Self {
        Complex::new(q, Rational::zero())
    }

    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }
}

/// `n / d` as a rational. Panics if `d == 0`.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn qi(n: i64) -> Rational {
    Rational::from_i64(n)
}

/// The imaginary unit.
pub fn imag_unit() -> GaussianRational {
    Complex::new(Rational::zero(), Rational::one())
}

pub fn gauss(re: Rational, im: Rational) -> GaussianRational {
    Complex::new(re, im)
}

/// `(-1)^k` as an integer.
pub fn sign_pow(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_reduced() {
        let a = q(6, -8);
        assert_eq!(a, q(-3, 4));
        assert_eq!(a.denom(), &BigInt::from(4));
        assert_eq!(q(1, 3) + q(2, 3), qi(1));
    }

    #[test]
    fn gaussian_inverse_and_conjugate() {
        let z = gauss(qi(1), qi(2));
        let w = z.inv();
        assert_eq!(z.clone() * w, GaussianRational::one());
        assert_eq!(z.clone() * z.conj(), GaussianRational::from_i64(5));
        assert_eq!(imag_unit() * imag_unit(), GaussianRational::from_i64(-1));
    }
}
