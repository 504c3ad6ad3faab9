//! Field abstraction shared by the exact (rational) and floating routes.

use core::fmt::Debug;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

/// Arbitrary precision rational.
pub type Rational = BigRational;

/// Ordered field used by the generic symmetric-function and determinant code.
pub trait Scalar: Clone + PartialOrd + Signed + Debug {
    fn from_int(n: i64) -> Self;

    fn from_ratio(p: i64, q: i64) -> Self {
        Self::from_int(p) / Self::from_int(q)
    }

    fn powi(&self, e: u32) -> Self {
        num_traits::pow(self.clone(), e as usize)
    }

    fn to_f64(&self) -> f64;
}

impl Scalar for f64 {
    fn from_int(n: i64) -> Self {
        n as f64
    }
    fn powi(&self, e: u32) -> Self {
        crate::fmath::powi(*self, e as i32)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// Rational from a pair of integers.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::from_ratio(p, q)
}

/// Exact binomial coefficient C(n, k) for nonnegative arguments.
pub fn binomial<T: Scalar>(n: i64, k: i64) -> T {
    if k < 0 || n < 0 || k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    for i in 0..k {
        acc = acc * T::from_int(n - i) / T::from_int(i + 1);
    }
    acc
}

/// Generalized binomial coefficient C(x, q) for real x.
pub fn binomial_real(x: f64, q: usize) -> f64 {
    let mut acc = 1.0;
    for i in 0..q {
        acc *= (x - i as f64) / (i as f64 + 1.0);
    }
    acc
}

pub fn factorial<T: Scalar>(n: u32) -> T {
    (1..=n as i64).fold(T::one(), |acc, i| acc * T::from_int(i))
}
