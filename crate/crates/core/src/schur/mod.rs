//! Schur and skew Schur functions by several independent routes.
//!
//! Integer partitions go through generic routes that run in either exact
//! rational or float arithmetic. Real partitions go through the bialternant.

mod bialternant;
mod tableaux;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

pub use bialternant::{power_divided_differences, schur_bialternant, schur_bialternant_exact};
pub use tableaux::{schur_tableaux, skew_schur_tableaux};

use crate::error::{Error, Result};
use crate::fmath;
use crate::linalg::determinant;
use crate::partitions::{dimension, IntegerPartition, RealPartition};
use crate::scalar::Scalar;

/// Positive evaluation points, repeats allowed.
#[derive(Debug, Clone, PartialEq)]
pub struct PointMultiset<T = f64> {
    values: Vec<T>,
}

impl<T: Scalar> PointMultiset<T> {
    pub fn new(values: Vec<T>) -> Result<Self> {
        if let Some(bad) = values.iter().find(|v| !(**v > T::zero())) {
            return Err(Error::Domain { name: "point", value: bad.to_f64() });
        }
        Ok(Self { values })
    }

    /// Points given as `(value, multiplicity)` pairs.
    pub fn from_groups(groups: &[(T, usize)]) -> Result<Self> {
        let mut values = Vec::new();
        for (v, m) in groups {
            values.extend(core::iter::repeat_n(v.clone(), *m));
        }
        Self::new(values)
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Distinct values with multiplicities, in order of first appearance.
    pub fn groups(&self) -> Vec<(T, usize)> {
        let mut out: Vec<(T, usize)> = Vec::new();
        for v in &self.values {
            match out.iter_mut().find(|(g, _)| g == v) {
                Some((_, m)) => *m += 1,
                None => out.push((v.clone(), 1)),
            }
        }
        out
    }
}

/// Skew shape `λ/μ` with `μ ⊂ λ`.
#[derive(Debug, Clone, PartialEq)]
pub struct SkewShape {
    outer: IntegerPartition,
    inner: IntegerPartition,
}

impl SkewShape {
    pub fn new(outer: IntegerPartition, inner: IntegerPartition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained);
        }
        Ok(Self { outer, inner })
    }

    pub fn outer(&self) -> &IntegerPartition {
        &self.outer
    }

    pub fn inner(&self) -> &IntegerPartition {
        &self.inner
    }
}

/// `e_0(u), …, e_max(u)`.
pub fn elementary_all<T: Scalar>(u: &[T], max: usize) -> Vec<T> {
    let mut e = vec![T::zero(); max + 1];
    e[0] = T::one();
    for x in u {
        for r in (1..=max).rev() {
            e[r] = e[r].clone() + x.clone() * e[r - 1].clone();
        }
    }
    e
}

/// `h_0(u), …, h_max(u)`.
pub fn complete_all<T: Scalar>(u: &[T], max: usize) -> Vec<T> {
    let mut h = vec![T::zero(); max + 1];
    h[0] = T::one();
    for x in u {
        for r in 1..=max {
            h[r] = h[r].clone() + x.clone() * h[r - 1].clone();
        }
    }
    h
}

pub fn elementary<T: Scalar>(r: i64, u: &[T]) -> T {
    if r < 0 {
        return T::zero();
    }
    elementary_all(u, r as usize).pop().unwrap_or_else(T::zero)
}

pub fn complete<T: Scalar>(r: i64, u: &[T]) -> T {
    if r < 0 {
        return T::zero();
    }
    complete_all(u, r as usize).pop().unwrap_or_else(T::zero)
}

fn lookup<T: Scalar>(table: &[T], idx: i64) -> T {
    if idx < 0 || idx as usize >= table.len() {
        T::zero()
    } else {
        table[idx as usize].clone()
    }
}

/// `det(h_{λᵢ−i+j})`.
pub fn schur_jacobi_trudi<T: Scalar>(lambda: &IntegerPartition, u: &[T]) -> T {
    skew_schur(&SkewShape { outer: lambda.clone(), inner: IntegerPartition::empty() }, u)
}

/// `det(e_{λ'ᵢ−i+j})` over the conjugate partition.
pub fn schur_nagelsbach_kostka<T: Scalar>(lambda: &IntegerPartition, u: &[T]) -> T {
    let conj = lambda.conjugate();
    let l = conj.len();
    let e = elementary_all(u, (conj.part(1) as usize + l).max(1));
    let m = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| lookup(&e, conj.part(i + 1) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    determinant(m)
}

/// Hook Schur function `S_(a|b) = Σ_k (−1)^k h_{a+1+k} e_{b−k}`.
pub fn schur_hook<T: Scalar>(a: i64, b: i64, u: &[T]) -> T {
    if a < 0 || b < 0 {
        return T::zero();
    }
    let h = complete_all(u, (a + b + 1) as usize);
    let e = elementary_all(u, b as usize);
    let mut acc = T::zero();
    for k in 0..=b {
        let term = lookup(&h, a + 1 + k) * lookup(&e, b - k);
        acc = if k % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

/// `det(S_(αᵢ|βⱼ))` on Frobenius coordinates.
pub fn schur_giambelli<T: Scalar>(lambda: &IntegerPartition, u: &[T]) -> T {
    let (alpha, beta) = lambda.frobenius();
    let m = alpha
        .iter()
        .map(|&a| beta.iter().map(|&b| schur_hook(a as i64, b as i64, u)).collect())
        .collect();
    determinant(m)
}

/// `det(h_{λᵢ−μⱼ−i+j})`.
pub fn skew_schur<T: Scalar>(shape: &SkewShape, u: &[T]) -> T {
    let (outer, inner) = (&shape.outer, &shape.inner);
    let l = outer.len();
    let h = complete_all(u, outer.part(1) as usize + l);
    let m = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let idx = outer.part(i + 1) as i64 - inner.part(j + 1) as i64 - i as i64
                        + j as i64;
                    lookup(&h, idx)
                })
                .collect()
        })
        .collect();
    determinant(m)
}

/// Interlacing expansion over the last variable: `Σ_{μ≺λ} S_μ(u) x^{|λ|−|μ|}`.
pub fn branch_last_variable<T: Scalar>(lambda: &IntegerPartition, u: &[T], last: &T) -> T {
    lambda.interlacing().iter().fold(T::zero(), |acc, mu| {
        acc + schur_jacobi_trudi(mu, u) * last.powi(lambda.weight() - mu.weight())
    })
}

/// Row-strip expansion over the last variable: `Σ_j S_{λ/(j)}(u) x^j`.
pub fn branch_last_variable_skew<T: Scalar>(lambda: &IntegerPartition, u: &[T], last: &T) -> T {
    (0..=lambda.part(1)).fold(T::zero(), |acc, j| {
        let shape = SkewShape { outer: lambda.clone(), inner: IntegerPartition::row(j) };
        acc + skew_schur(&shape, u) * last.powi(j)
    })
}

/// Subtraction-free evaluation by recursive branching with memoization.
///
/// Every term is a product of the inputs, so for positive points there is no
/// cancellation. Partitions longer than `u` give 0.
pub fn schur_branching<T: Scalar>(lambda: &IntegerPartition, u: &[T]) -> T {
    let mut memo = BTreeMap::new();
    branch_rec(lambda, u, &mut memo)
}

fn branch_rec<T: Scalar>(
    lambda: &IntegerPartition,
    u: &[T],
    memo: &mut BTreeMap<(IntegerPartition, usize), T>,
) -> T {
    if lambda.len() > u.len() {
        return T::zero();
    }
    if lambda.is_empty() {
        return T::one();
    }
    if u.len() == 1 {
        return u[0].powi(lambda.part(1));
    }
    let key = (lambda.clone(), u.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let (rest, last) = u.split_at(u.len() - 1);
    let mut acc = T::zero();
    for mu in lambda.interlacing() {
        if mu.len() > rest.len() {
            continue;
        }
        acc = acc + branch_rec(&mu, rest, memo) * last[0].powi(lambda.weight() - mu.weight());
    }
    memo.insert(key, acc.clone());
    acc
}

/// Production float evaluation of `S_λ(u)` for any real partition.
///
/// Single-point arguments use `u^{|λ|} f_λ(n)`, integer partitions the
/// branching route, and everything else the Newton-form bialternant.
pub fn schur(lambda: &RealPartition, u: &PointMultiset) -> Result<f64> {
    let n = u.len();
    if lambda.len() > n {
        return match lambda.to_integer() {
            Some(_) => Ok(0.0),
            None => Err(Error::TooFewVariables { length: lambda.len(), variables: n }),
        };
    }
    let groups = u.groups();
    if groups.len() == 1 {
        let x = groups[0].0;
        return Ok(fmath::pow(x, lambda.weight()) * dimension(lambda, n)?);
    }
    match lambda.to_integer() {
        Some(ip) if ip.weight() <= 64 => Ok(schur_branching(&ip, u.values())),
        _ => schur_bialternant(lambda, u),
    }
}

/// Factors of the splitting limit `S_η(z, εy)/ε^{|μ|} → S_λ(z)·S_μ(y)`,
/// where `λ` is the head of `η` of length `|z|` and `μ` the rest.
pub fn splitting_limit(
    eta: &RealPartition,
    z: &PointMultiset,
    y: &PointMultiset,
) -> Result<(f64, f64)> {
    let k = z.len();
    if eta.len() > k + y.len() {
        return Err(Error::TooFewVariables { length: eta.len(), variables: k + y.len() });
    }
    let head = eta.slice(1, k + 1)?;
    let tail = eta.slice(k + 1, k + y.len() + 1)?;
    Ok((schur(&head, z)?, schur(&tail, y)?))
}
