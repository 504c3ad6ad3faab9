//! Real and integer partitions, exponent sequences and the map between them,
//! Müntz tableaux, hook lengths and the dimension function `f_λ(n)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fmath;
use crate::scalar::{Rational, Scalar};

/// Slack used when checking the strict chain condition on float parts.
pub const CHAIN_SLACK: f64 = 1e-12;

/// A real partition: `λ₁ > λ₂−1 > … > λₙ−(n−1) > −n`.
///
/// Trailing zeros are stripped, so equality is equality of the stripped lists.
#[derive(Debug, Clone, PartialEq)]
pub struct RealPartition {
    parts: Vec<f64>,
}

impl RealPartition {
    pub fn new(mut parts: Vec<f64>) -> Result<Self> {
        while parts.last() == Some(&0.0) {
            parts.pop();
        }
        if parts.iter().any(|p| !p.is_finite()) {
            return Err(Error::InvalidPartition(format!("non-finite part in {parts:?}")));
        }
        for w in parts.windows(2) {
            if !(w[0] - w[1] > -1.0 - CHAIN_SLACK) {
                return Err(Error::InvalidPartition(format!(
                    "chain condition fails between {} and {}",
                    w[0], w[1]
                )));
            }
        }
        if let Some(&last) = parts.last() {
            if !(last > -1.0 - CHAIN_SLACK) {
                return Err(Error::InvalidPartition(format!("last part {last} is not above -1")));
            }
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// Stripped parts.
    pub fn parts(&self) -> &[f64] {
        &self.parts
    }

    /// Number of parts after stripping trailing zeros.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> f64 {
        self.parts.iter().sum()
    }

    /// Part `i` (1-based), zero past the stripped length.
    pub fn part(&self, i: usize) -> f64 {
        self.parts.get(i - 1).copied().unwrap_or(0.0)
    }

    /// Parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Result<Vec<f64>> {
        if self.len() > n {
            return Err(Error::TooFewVariables { length: self.len(), variables: n });
        }
        let mut v = self.parts.clone();
        v.resize(n, 0.0);
        Ok(v)
    }

    /// The integer partition with the same parts, if every part is a nonnegative integer.
    pub fn to_integer(&self) -> Option<IntegerPartition> {
        let mut out = Vec::with_capacity(self.len());
        for &p in &self.parts {
            if p < 0.0 || fmath::fract(p) != 0.0 || p > u32::MAX as f64 {
                return None;
            }
            out.push(p as u32);
        }
        IntegerPartition::new(out).ok()
    }

    /// Sub-partition made of parts `from..to` (1-based, inclusive-exclusive), zero padded.
    pub fn slice(&self, from: usize, to: usize) -> Result<Self> {
        Self::new((from..to).map(|i| self.part(i)).collect())
    }

    /// Parts `from..to`, shifted uniformly by `−c` when the last one is negative.
    ///
    /// Interior parts may lie below `−1`, so a window need not be a real
    /// partition itself. In `N = to − from` variables the window's Schur
    /// function is `(x₁⋯x_N)^c` times that of the returned partition.
    pub fn window(&self, from: usize, to: usize) -> Result<(Self, f64)> {
        let parts: Vec<f64> = (from..to).map(|i| self.part(i)).collect();
        let c = parts.last().copied().filter(|&x| x < 0.0).unwrap_or(0.0);
        Ok((Self::new(parts.iter().map(|x| x - c).collect())?, c))
    }
}

impl From<&IntegerPartition> for RealPartition {
    fn from(p: &IntegerPartition) -> Self {
        Self { parts: p.parts.iter().map(|&x| x as f64).collect() }
    }
}

/// Weakly decreasing nonnegative integers with trailing zeros stripped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegerPartition {
    parts: Vec<u32>,
}

impl IntegerPartition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// `(r)`, a single row.
    pub fn row(r: u32) -> Self {
        Self::new(vec![r]).unwrap_or_else(|_| Self::empty())
    }

    /// `(1^r)`, a single column.
    pub fn column(r: usize) -> Self {
        Self { parts: vec![1; r] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Part `i` (1-based), zero past the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(1) as usize;
        let parts = (1..=width)
            .map(|j| self.parts.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect();
        Self { parts }
    }

    /// `μ ⊂ λ`, i.e. `μᵢ ≤ λᵢ` for all `i`.
    pub fn contains(&self, inner: &Self) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(m, l)| m <= l)
    }

    /// Frobenius coordinates `(α | β)` with `αᵢ = λᵢ − i`, `βᵢ = λ'ᵢ − i`.
    pub fn frobenius(&self) -> (Vec<u32>, Vec<u32>) {
        let conj = self.conjugate();
        let d = (1..=self.len()).take_while(|&i| self.part(i) as usize >= i).count();
        let alpha = (1..=d).map(|i| self.part(i) - i as u32).collect();
        let beta = (1..=d).map(|i| conj.part(i) - i as u32).collect();
        (alpha, beta)
    }

    pub fn from_frobenius(alpha: &[u32], beta: &[u32]) -> Result<Self> {
        let d = alpha.len();
        if beta.len() != d
            || alpha.windows(2).any(|w| w[0] <= w[1])
            || beta.windows(2).any(|w| w[0] <= w[1])
        {
            return Err(Error::InvalidPartition(format!(
                "bad Frobenius coordinates ({alpha:?} | {beta:?})"
            )));
        }
        let rows = if d == 0 { 0 } else { beta[0] as usize + 1 };
        let mut parts = Vec::with_capacity(rows);
        for i in 1..=rows {
            let part = if i <= d {
                alpha[i - 1] as usize + i
            } else {
                // below the diagonal square, row i meets every column j with λ'_j ≥ i
                (0..d).filter(|&j| beta[j] as usize + j + 1 >= i).count()
            };
            parts.push(part as u32);
        }
        Self::new(parts)
    }

    /// Hook length and content tables, row by row.
    pub fn hooks_and_contents(&self) -> (Vec<Vec<u32>>, Vec<Vec<i64>>) {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.len());
        let mut contents = Vec::with_capacity(self.len());
        for i in 1..=self.len() {
            let li = self.part(i) as usize;
            hooks.push((1..=li).map(|j| (li + conj.part(j) as usize + 1 - i - j) as u32).collect());
            contents.push((1..=li).map(|j| j as i64 - i as i64).collect());
        }
        (hooks, contents)
    }

    /// All partitions `μ` interlacing `λ`: `λᵢ₊₁ ≤ μᵢ ≤ λᵢ`.
    pub fn interlacing(&self) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.len());
        self.interlace_from(0, &mut cur, &mut out);
        out
    }

    fn interlace_from(&self, i: usize, cur: &mut Vec<u32>, out: &mut Vec<Self>) {
        if i == self.len() {
            out.push(Self::new(cur.clone()).unwrap_or_else(|_| Self::empty()));
            return;
        }
        for m in self.part(i + 2)..=self.part(i + 1) {
            cur.push(m);
            self.interlace_from(i + 1, cur, out);
            cur.pop();
        }
    }
}

/// Strictly increasing exponents `0 = r₀ < r₁ < … < rₙ`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExponentSequence {
    exps: Vec<f64>,
}

impl ExponentSequence {
    pub fn new(exps: Vec<f64>) -> Result<Self> {
        match exps.first() {
            Some(&r0) if r0 == 0.0 => {}
            _ => return Err(Error::InvalidExponents(format!("{exps:?} does not start at 0"))),
        }
        if exps.iter().any(|r| !r.is_finite()) {
            return Err(Error::InvalidExponents(format!("{exps:?} has non-finite entries")));
        }
        if exps.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidExponents(format!("{exps:?} is not strictly increasing")));
        }
        Ok(Self { exps })
    }

    pub fn from_integers(exps: &[u64]) -> Result<Self> {
        Self::new(exps.iter().map(|&r| r as f64).collect())
    }

    /// `(0, 1, …, n)`.
    pub fn polynomial(n: usize) -> Self {
        Self { exps: (0..=n).map(|i| i as f64).collect() }
    }

    /// Order `n` (the space has dimension `n+1`).
    pub fn order(&self) -> usize {
        self.exps.len() - 1
    }

    pub fn exponents(&self) -> &[f64] {
        &self.exps
    }

    /// `r_k`
    pub fn r(&self, k: usize) -> f64 {
        self.exps[k]
    }

    pub fn is_integer(&self) -> bool {
        self.integer_exponents().is_some()
    }

    pub fn integer_exponents(&self) -> Option<Vec<u64>> {
        self.exps
            .iter()
            .map(|&r| (fmath::fract(r) == 0.0 && r < 9.0e15).then_some(r as u64))
            .collect()
    }

    /// Exponents as exact rationals (integer sequences only).
    pub fn rational_exponents(&self) -> Result<Vec<Rational>> {
        self.integer_exponents()
            .map(|v| v.iter().map(|&r| Rational::from_int(r as i64)).collect())
            .ok_or(Error::NonIntegerExponents)
    }

    /// Tail `(r_from, …, rₙ)`.
    pub fn tail(&self, from: usize) -> &[f64] {
        &self.exps[from..]
    }

    /// `(0, r_from − shift, …, rₙ − shift)`.
    pub fn shifted(&self, from: usize, shift: f64) -> Result<Self> {
        let mut v = vec![0.0];
        v.extend(self.exps[from..].iter().map(|r| r - shift));
        Self::new(v)
    }

    /// Insert a new exponent, returning the enlarged sequence and the insertion index.
    pub fn insert(&self, rho: f64) -> Result<(Self, usize)> {
        if !(rho > 0.0) || !rho.is_finite() {
            return Err(Error::Domain { name: "rho", value: rho });
        }
        if self.exps.contains(&rho) {
            return Err(Error::DuplicateExponent(rho));
        }
        let idx = self.exps.iter().position(|&r| r > rho).unwrap_or(self.exps.len());
        let mut v = self.exps.clone();
        v.insert(idx, rho);
        Ok((Self { exps: v }, idx))
    }
}

/// `λ_k = rₙ − r_{k−1} − (n−k+1)` for `k = 1..n`.
pub fn partition_from_exponents(lam: &ExponentSequence) -> RealPartition {
    let n = lam.order();
    let rn = lam.r(n);
    let parts = (1..=n).map(|k| rn - lam.r(k - 1) - (n - k + 1) as f64).collect();
    RealPartition::new(parts).expect("increasing exponents always give a real partition")
}

/// Inverse of [`partition_from_exponents`] for a space of order `n`.
pub fn exponents_from_partition(lambda: &RealPartition, n: usize) -> Result<ExponentSequence> {
    let parts = lambda.padded(n)?;
    if n == 0 {
        return ExponentSequence::new(vec![0.0]);
    }
    let rn = parts[0] + n as f64;
    let mut exps: Vec<f64> = (1..=n).map(|k| rn - parts[k - 1] - (n - k + 1) as f64).collect();
    exps.push(rn);
    exps[0] = 0.0;
    ExponentSequence::new(exps)
}

/// Integer partition of an integer exponent sequence.
pub fn integer_partition_from_exponents(lam: &ExponentSequence) -> Result<IntegerPartition> {
    partition_from_exponents(lam).to_integer().ok_or(Error::NonIntegerExponents)
}

/// The tableau `λ⁽⁰⁾, …, λ⁽ⁿ⁾` of a partition viewed in `n` variables.
#[derive(Debug, Clone, PartialEq)]
pub struct MuntzTableau {
    entries: Vec<RealPartition>,
}

impl MuntzTableau {
    pub fn new(lambda: &RealPartition, n: usize) -> Result<Self> {
        let p = lambda.padded(n)?;
        let mut entries = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut row: Vec<f64> = p[..i].iter().map(|x| x + 1.0).collect();
            if i + 1 < n {
                row.extend_from_slice(&p[i + 1..]);
            }
            entries.push(RealPartition::new(row)?);
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[RealPartition] {
        &self.entries
    }

    /// `λ⁽ⁱ⁾`
    pub fn entry(&self, i: usize) -> &RealPartition {
        &self.entries[i]
    }
}

/// `f_λ(n)` for a real partition, as `Π_{j<k}(λⱼ−λₖ−j+k)/(k−j)`.
///
/// Integer partitions longer than `n` give 0; longer non-integer ones are rejected.
pub fn dimension(lambda: &RealPartition, n: usize) -> Result<f64> {
    if lambda.len() > n {
        return match lambda.to_integer() {
            Some(_) => Ok(0.0),
            None => Err(Error::TooFewVariables { length: lambda.len(), variables: n }),
        };
    }
    let p = lambda.padded(n)?;
    let mut acc = 1.0;
    for j in 0..n {
        for k in j + 1..n {
            acc *= (p[j] - p[k] + (k - j) as f64) / (k - j) as f64;
        }
    }
    Ok(acc)
}

/// Exact `f_λ(n)` by the difference-product formula.
pub fn dimension_exact(lambda: &IntegerPartition, n: usize) -> Rational {
    if lambda.len() > n {
        return Rational::from_int(0);
    }
    let p: Vec<i64> = (1..=n).map(|i| lambda.part(i) as i64).collect();
    let mut acc = Rational::from_int(1);
    for j in 0..n {
        for k in j + 1..n {
            let d = (k - j) as i64;
            acc = acc * Rational::from_ratio(p[j] - p[k] + d, d);
        }
    }
    acc
}

/// Exact `f_λ(n)` as the product over boxes of `(n + content)/hook`.
pub fn dimension_hook(lambda: &IntegerPartition, n: usize) -> Rational {
    let (hooks, contents) = lambda.hooks_and_contents();
    let mut acc = Rational::from_int(1);
    for (hrow, crow) in hooks.iter().zip(&contents) {
        for (&h, &c) in hrow.iter().zip(crow) {
            acc = acc * Rational::from_ratio(n as i64 + c, h as i64);
        }
    }
    acc
}
