//! Closed-form bases of the elementary, complete and hook Müntz spaces.

use alloc::vec::Vec;

use super::check_unit;
use crate::error::{Error, Result};
use crate::fmath;
use crate::partitions::{dimension_exact, ExponentSequence, IntegerPartition};
use crate::scalar::{binomial, Scalar};

/// Classical Bernstein polynomial `C(n,k) t^k (1−t)^{n−k}`.
pub fn bernstein(n: usize, k: usize, t: f64) -> f64 {
    if k > n {
        return 0.0;
    }
    binomial::<f64>(n as i64, k as i64) * fmath::powi(t, k as i32) * fmath::powi(1.0 - t, (n - k) as i32)
}

fn bad(what: &'static str) -> Error {
    Error::Unsupported(what)
}

/// `(0, 1, …, l−1, l+1, …, n+1)`, the space of the partition `(1^l)`.
pub fn elementary_exponents(l: usize, n: usize) -> Result<ExponentSequence> {
    if l < 1 || l > n {
        return Err(bad("elementary space needs 1 ≤ l ≤ n"));
    }
    let exps: Vec<u64> = (0..=n as u64 + 1).filter(|&r| r != l as u64).collect();
    ExponentSequence::from_integers(&exps)
}

pub fn elementary_basis(l: usize, n: usize, k: usize, t: f64) -> Result<f64> {
    elementary_exponents(l, n)?;
    check_unit(t)?;
    if k > n {
        return Err(Error::IndexOutOfRange { index: k, max: n });
    }
    if k >= l {
        return Ok(bernstein(n + 1, k + 1, t));
    }
    let (lf, nf, kf) = (l as f64, n as f64, k as f64);
    Ok((lf - kf) / lf
        * binomial::<f64>(n as i64 + 1, k as i64)
        * fmath::powi(t, k as i32)
        * fmath::powi(1.0 - t, (n - k) as i32)
        * (1.0 + (nf - lf + 1.0) / (lf - kf) * t))
}

/// `(0, l+1, …, l+n)`, the space of the partition `(l)`.
pub fn complete_exponents(l: usize, n: usize) -> Result<ExponentSequence> {
    if n < 1 {
        return Err(bad("complete space needs n ≥ 1"));
    }
    let mut exps = alloc::vec![0u64];
    exps.extend((1..=n as u64).map(|i| i + l as u64));
    ExponentSequence::from_integers(&exps)
}

pub fn complete_basis(l: usize, n: usize, k: usize, t: f64) -> Result<f64> {
    complete_exponents(l, n)?;
    check_unit(t)?;
    if k > n {
        return Err(Error::IndexOutOfRange { index: k, max: n });
    }
    if k >= 1 {
        return Ok(bernstein(n + l, k + l, t));
    }
    let sum: f64 = (0..=l)
        .map(|j| binomial::<f64>((n + j) as i64 - 1, n as i64 - 1) * fmath::powi(t, j as i32))
        .sum();
    Ok(fmath::powi(1.0 - t, n as i32) * sum)
}

/// `(0, l+1, …, l+m, l+m+2, …, l+n+1)`, the space of the hook `(l|m)`.
pub fn hook_exponents(l: usize, m: usize, n: usize) -> Result<ExponentSequence> {
    if m == 0 || m >= n {
        return Err(bad("hook space needs 0 < m < n"));
    }
    let (l, m, n) = (l as u64, m as u64, n as u64);
    let mut exps = alloc::vec![0u64];
    exps.extend(l + 1..=l + m);
    exps.extend(l + m + 2..=l + n + 1);
    ExponentSequence::from_integers(&exps)
}

pub fn hook_basis(l: usize, m: usize, n: usize, k: usize, t: f64) -> Result<f64> {
    hook_exponents(l, m, n)?;
    check_unit(t)?;
    if k > n {
        return Err(Error::IndexOutOfRange { index: k, max: n });
    }
    if k > m {
        return Ok(bernstein(l + n + 1, l + k + 1, t));
    }
    let (lf, mf, nf, kf) = (l as f64, m as f64, n as f64, k as f64);
    if k >= 1 {
        return Ok((mf + 1.0 - kf) / (mf + 1.0 + lf)
            * binomial::<f64>((l + n + 1) as i64, (l + k) as i64)
            * fmath::powi(t, (l + k) as i32)
            * fmath::powi(1.0 - t, (n - k) as i32)
            * ((nf - mf) * t / (mf - kf + 1.0) + 1.0));
    }
    let hook = IntegerPartition::from_frobenius(&[l as u32], &[m as u32])?;
    let ratio = dimension_exact(&hook, n).to_f64() / binomial::<f64>(n as i64, m as i64);
    let sum: f64 = (1..=l + 1)
        .map(|j| {
            let r = l + 1 - j;
            binomial::<f64>((n + r) as i64 - 1, r as i64) * fmath::powi(t, r as i32)
        })
        .sum();
    Ok(fmath::powi(1.0 - t, n as i32) * (fmath::powi(t, l as i32 + 1) * ratio + sum))
}
