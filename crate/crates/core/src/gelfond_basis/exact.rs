//! Exact rational-coefficient forms of the basis for integer exponents.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fmath;
use crate::partitions::{dimension_exact, integer_partition_from_exponents, ExponentSequence};
use crate::poly::Polynomial;
use crate::scalar::{Rational, Scalar};

/// `H_k` as an exact polynomial, from the sum form of the divided difference.
pub fn exact_basis_dd(lam: &ExponentSequence, k: usize) -> Result<Polynomial<Rational>> {
    let r = lam.integer_exponents().ok_or(Error::NonIntegerExponents)?;
    let n = lam.order();
    if k > n {
        return Err(Error::IndexOutOfRange { index: k, max: n });
    }
    let nodes: Vec<i64> = r[k..].iter().map(|&x| x as i64).collect();
    let mut scale = nodes[1..].iter().fold(Rational::one(), |acc, &x| acc * Rational::from_int(x));
    if (n - k) % 2 == 1 {
        scale = -scale;
    }
    let mut p = Polynomial::zero();
    for (i, &ri) in nodes.iter().enumerate() {
        let denom = nodes
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(Rational::one(), |acc, (_, &rj)| acc * Rational::from_int(ri - rj));
        p = &p + &Polynomial::monomial(scale.clone() / denom, ri as usize);
    }
    Ok(p)
}

/// `c · t^{r_k} · (1−t)^{n−k} · q(t)` with `q(0) = 1` and nonnegative coefficients in `q`.
#[derive(Debug, Clone, PartialEq)]
pub struct FactoredBasis {
    pub coefficient: Rational,
    pub power: usize,
    pub one_minus: usize,
    pub quotient: Polynomial<Rational>,
    coefficient_f64: f64,
    quotient_f64: Vec<f64>,
}

impl FactoredBasis {
    pub fn new(lam: &ExponentSequence, k: usize) -> Result<Self> {
        let p = exact_basis_dd(lam, k)?;
        let power = lam.r(k) as usize;
        let one_minus = lam.order() - k;
        let coeffs = p.coeffs();
        if coeffs[..power.min(coeffs.len())].iter().any(|c| !c.is_zero()) {
            return Err(Error::Singular("basis polynomial has a low-order term"));
        }
        let mut q = Polynomial::new(coeffs[power..].to_vec());
        for _ in 0..one_minus {
            q = divide_one_minus_t(&q).ok_or(Error::Singular("(1-t) does not divide"))?;
        }
        let coefficient = q.coeff(0);
        if coefficient.is_zero() {
            return Err(Error::Singular("zero leading factor"));
        }
        let quotient = q.scale(&(Rational::one() / coefficient.clone()));
        let coefficient_f64 = coefficient.to_f64();
        let quotient_f64 = quotient.coeffs().iter().map(Scalar::to_f64).collect();
        Ok(Self { coefficient, power, one_minus, quotient, coefficient_f64, quotient_f64 })
    }

    pub fn expand(&self) -> Polynomial<Rational> {
        let head = Polynomial::monomial(self.coefficient.clone(), self.power);
        &(&head * &Polynomial::one_minus_t_pow(self.one_minus)) * &self.quotient
    }

    pub fn eval_exact(&self, t: &Rational) -> Rational {
        self.coefficient.clone()
            * t.powi(self.power as u32)
            * (Rational::one() - t.clone()).powi(self.one_minus as u32)
            * self.quotient.eval(t)
    }

    /// Float evaluation; every factor is nonnegative on `[0,1]`.
    pub fn eval_f64(&self, t: f64) -> f64 {
        let q = self.quotient_f64.iter().rev().fold(0.0, |acc, c| acc * t + c);
        self.coefficient_f64
            * fmath::powi(t, self.power as i32)
            * fmath::powi(1.0 - t, self.one_minus as i32)
            * q
    }
}

/// `p / (1 − t)` when the division is exact.
fn divide_one_minus_t(p: &Polynomial<Rational>) -> Option<Polynomial<Rational>> {
    let c = p.coeffs();
    if c.is_empty() {
        return Some(Polynomial::zero());
    }
    // p = (t − 1)·b by synthetic division at the root 1
    let d = c.len() - 1;
    let mut b = alloc::vec![Rational::zero(); d];
    let mut carry = Rational::zero();
    for i in (1..=d).rev() {
        carry = c[i].clone() + carry;
        b[i - 1] = carry.clone();
    }
    if !(c[0].clone() + carry).is_zero() {
        return None;
    }
    Some(Polynomial::new(b.into_iter().map(|x| -x).collect()))
}

/// The quotient `q` of [`FactoredBasis`] by the interlacing expansion
/// `Σ_{μ≺η} f_μ(m)/f_{η⁽⁰⁾}(m) · t^{|μ|−|η⁽⁰⁾|}`.
pub fn quotient_by_branching(lam: &ExponentSequence, k: usize) -> Result<Polynomial<Rational>> {
    let n = lam.order();
    if k > n {
        return Err(Error::IndexOutOfRange { index: k, max: n });
    }
    let m = n - k;
    let eta = integer_partition_from_exponents(&lam.shifted(k + 1, lam.r(k))?)?;
    let eta0 = crate::partitions::IntegerPartition::new(eta.parts().iter().skip(1).copied().collect())?;
    let base = dimension_exact(&eta0, m);
    let mut q = Polynomial::zero();
    for mu in eta.interlacing() {
        let c = dimension_exact(&mu, m) / base.clone();
        q = &q + &Polynomial::monomial(c, (mu.weight() - eta0.weight()) as usize);
    }
    Ok(q)
}
