//! Chebyshev-Bernstein basis of a Müntz space on `[a,b]`, `a > 0`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::fmath;
use crate::partitions::{
    dimension, dimension_exact, integer_partition_from_exponents, partition_from_exponents,
    ExponentSequence, IntegerPartition, RealPartition,
};
use crate::scalar::{binomial, Rational, Scalar};
use crate::schur::{schur, schur_jacobi_trudi, PointMultiset};

#[derive(Debug, Clone, PartialEq)]
pub struct ChebyshevBasisSpec {
    lambda: RealPartition,
    n: usize,
    a: f64,
    b: f64,
}

impl ChebyshevBasisSpec {
    pub fn new(lambda: RealPartition, n: usize, a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0) {
            return Err(Error::Domain { name: "a", value: a });
        }
        if !(b > a) || !b.is_finite() {
            return Err(Error::Domain { name: "b", value: b });
        }
        if lambda.len() > n {
            return Err(Error::TooFewVariables { length: lambda.len(), variables: n });
        }
        Ok(Self { lambda, n, a, b })
    }

    pub fn from_exponents(lam: &ExponentSequence, a: f64, b: f64) -> Result<Self> {
        Self::new(partition_from_exponents(lam), lam.order(), a, b)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn interval(&self) -> (f64, f64) {
        (self.a, self.b)
    }
}

fn at(groups: &[(f64, usize)]) -> Result<PointMultiset> {
    PointMultiset::from_groups(groups)
}

/// `B^n_{k,λ}(t)` on `[a,b]`.
pub fn chebyshev_basis(spec: &ChebyshevBasisSpec, k: usize, t: f64) -> Result<f64> {
    let (n, a, b) = (spec.n, spec.a, spec.b);
    if k > n {
        return Err(Error::IndexOutOfRange { index: k, max: n });
    }
    if !(a..=b).contains(&t) {
        return Err(Error::Domain { name: "t", value: t });
    }
    let lambda = &spec.lambda;
    let lambda0 = lambda.slice(2, n + 1)?;
    let classical = binomial::<f64>(n as i64, k as i64)
        * fmath::powi((t - a) / (b - a), k as i32)
        * fmath::powi((b - t) / (b - a), (n - k) as i32);
    if classical == 0.0 {
        return Ok(0.0);
    }
    let dims = dimension(lambda, n + 1)? / dimension(&lambda0, n)?;
    let num = schur(&lambda0, &at(&[(a, n - k), (b, k)])?)?
        * fmath::pow(t, lambda.part(1))
        * schur(lambda, &at(&[(a, n - k), (b, k), (a * b / t, 1)])?)?;
    let den = schur(lambda, &at(&[(a, n + 1 - k), (b, k)])?)?
        * schur(lambda, &at(&[(a, n - k), (b, k + 1)])?)?;
    if den == 0.0 || !den.is_finite() {
        return Err(Error::Singular("Chebyshev-Bernstein denominator"));
    }
    Ok(dims * classical * num / den)
}

/// `S_λ` at the listed points with multiplicities, evaluated on integer points
/// `D·x` and rescaled by `D^{−|λ|}`.
fn schur_at(lambda: &IntegerPartition, groups: &[(&Rational, usize)]) -> Rational {
    let d = groups
        .iter()
        .fold(BigInt::one(), |acc, (x, _)| acc.lcm(x.denom()));
    let scale = Rational::from_integer(d);
    let u: Vec<Rational> = groups
        .iter()
        .flat_map(|&(x, m)| core::iter::repeat_n(x.clone() * scale.clone(), m))
        .collect();
    schur_jacobi_trudi(lambda, &u) / scale.powi(lambda.weight())
}

/// Exact Chebyshev-Bernstein basis for integer exponents on a rational `[a,b]`.
///
/// Every Schur value that does not involve `t` is computed once.
#[derive(Debug, Clone)]
pub struct ExactChebyshevBasis {
    lambda: IntegerPartition,
    n: usize,
    a: Rational,
    b: Rational,
    /// `f_λ(n+1)/f_{λ⁽⁰⁾}(n) · S_{λ⁽⁰⁾}(a^{n−k},b^k) / (S_λ(a^{n+1−k},b^k) S_λ(a^{n−k},b^{k+1}))`
    constants: Vec<Rational>,
}

impl ExactChebyshevBasis {
    pub fn new(lam: &ExponentSequence, a: Rational, b: Rational) -> Result<Self> {
        let zero = Rational::from_int(0);
        if !(a > zero) {
            return Err(Error::Domain { name: "a", value: a.to_f64() });
        }
        if !(b > a) {
            return Err(Error::Domain { name: "b", value: b.to_f64() });
        }
        let n = lam.order();
        let lambda = integer_partition_from_exponents(lam)?;
        let lambda0 = IntegerPartition::new((2..=n).map(|i| lambda.part(i)).collect())?;
        let dims = dimension_exact(&lambda, n + 1) / dimension_exact(&lambda0, n);
        let edge: Vec<Rational> = (0..=n + 1)
            .map(|i| schur_at(&lambda, &[(&a, n + 1 - i), (&b, i)]))
            .collect();
        let mut constants = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let den = edge[k].clone() * edge[k + 1].clone();
            if den == zero {
                return Err(Error::Singular("Chebyshev-Bernstein denominator"));
            }
            constants.push(dims.clone() * schur_at(&lambda0, &[(&a, n - k), (&b, k)]) / den);
        }
        Ok(Self { lambda, n, a, b, constants })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `B^n_{k,λ}(t)`
    pub fn value(&self, k: usize, t: &Rational) -> Result<Rational> {
        let (n, a, b) = (self.n, &self.a, &self.b);
        if k > n {
            return Err(Error::IndexOutOfRange { index: k, max: n });
        }
        if t < a || t > b {
            return Err(Error::Domain { name: "t", value: t.to_f64() });
        }
        let width = b.clone() - a.clone();
        let classical = binomial::<Rational>(n as i64, k as i64)
            * ((t.clone() - a.clone()) / width.clone()).powi(k as u32)
            * ((b.clone() - t.clone()) / width).powi((n - k) as u32);
        if classical == Rational::from_int(0) {
            return Ok(classical);
        }
        let abt = a.clone() * b.clone() / t.clone();
        Ok(self.constants[k].clone()
            * classical
            * t.powi(self.lambda.part(1))
            * schur_at(&self.lambda, &[(a, n - k), (b, k), (&abt, 1)]))
    }
}
