//! Gelfond-Bernstein bases `H^n_{k,Λ}` of Müntz spaces on `[0,1]`.

mod chebyshev;
mod closed_forms;
mod exact;

use alloc::vec::Vec;

pub use chebyshev::{chebyshev_basis, ChebyshevBasisSpec, ExactChebyshevBasis};
pub use closed_forms::{
    bernstein, complete_basis, complete_exponents, elementary_basis, elementary_exponents,
    hook_basis, hook_exponents,
};
pub use exact::{exact_basis_dd, quotient_by_branching, FactoredBasis};

use crate::divided_diff::{dd_exponential, NodeSet};
use crate::error::{Error, Result};
use crate::fmath;
use crate::partitions::{dimension, partition_from_exponents, ExponentSequence};
use crate::schur::{schur, PointMultiset};

pub(crate) fn check_unit(t: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::Domain { name: "t", value: t });
    }
    Ok(())
}

fn check_index(lam: &ExponentSequence, k: usize) -> Result<()> {
    if k > lam.order() {
        return Err(Error::IndexOutOfRange { index: k, max: lam.order() });
    }
    Ok(())
}

/// Values at the endpoints, where every route reduces to a Kronecker delta.
fn endpoint_value(lam: &ExponentSequence, k: usize, t: f64) -> Option<f64> {
    let n = lam.order();
    if t == 0.0 {
        return Some(if k == 0 { 1.0 } else { 0.0 });
    }
    if t == 1.0 || k == n {
        return Some(if k == n { fmath::pow(t, lam.r(n)) } else { 0.0 });
    }
    None
}

/// `Π_{i>k} rᵢ / Π_{i>k}(rᵢ − r_k)`
pub fn prefactor(lam: &ExponentSequence, k: usize) -> f64 {
    let rk = lam.r(k);
    lam.tail(k + 1).iter().map(|&ri| ri / (ri - rk)).product()
}

/// `H_k(t) = (−1)^{n−k} r_{k+1}⋯rₙ [r_k,…,rₙ] t^x`.
pub fn gelfond_basis_dd(lam: &ExponentSequence, k: usize, t: f64) -> Result<f64> {
    check_index(lam, k)?;
    check_unit(t)?;
    if let Some(v) = endpoint_value(lam, k, t) {
        return Ok(v);
    }
    let n = lam.order();
    let scale: f64 = lam.tail(k + 1).iter().product();
    let dd = dd_exponential(&NodeSet::new(lam.tail(k).to_vec())?, t)?;
    let sign = if (n - k) % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign * scale * dd)
}

/// `[0, r₁, …, rₘ] t^x` through the Schur quotient
/// `(−1)^m/(r₁⋯rₘ) · (1−t)^m · S_λ(1, t^m) / S_{λ⁽⁰⁾}(t^m)`.
pub fn dd_schur_form(lam: &ExponentSequence, t: f64) -> Result<f64> {
    if !(t > 0.0 && t < 1.0) {
        return Err(Error::Domain { name: "t", value: t });
    }
    let m = lam.order();
    let scale: f64 = lam.tail(1).iter().product();
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign / scale * fmath::powi(1.0 - t, m as i32) * schur_quotient(lam, t)?)
}

/// `S_λ(1, t^m) / S_{λ⁽⁰⁾}(t^m)` for the partition `λ` of `lam`.
fn schur_quotient(lam: &ExponentSequence, t: f64) -> Result<f64> {
    let m = lam.order();
    let lambda = partition_from_exponents(lam);
    let lambda0 = lambda.slice(2, m + 1)?;
    let num = schur(&lambda, &PointMultiset::from_groups(&[(t, m), (1.0, 1)])?)?;
    let den = fmath::pow(t, lambda0.weight()) * dimension(&lambda0, m)?;
    if den == 0.0 {
        return Err(Error::Singular("vanishing Schur denominator"));
    }
    Ok(num / den)
}

/// `Π rᵢ/Π(rᵢ−r_k) · t^{r_k}(1−t)^{n−k} · S_{(λ_{k+1},…)}(1,t^{n−k}) / S_{(λ_{k+2},…)}(t^{n−k})`.
pub fn gelfond_basis_schur(lam: &ExponentSequence, k: usize, t: f64) -> Result<f64> {
    check_index(lam, k)?;
    check_unit(t)?;
    if let Some(v) = endpoint_value(lam, k, t) {
        return Ok(v);
    }
    let n = lam.order();
    let tail = lam.shifted(k + 1, lam.r(k))?;
    Ok(prefactor(lam, k)
        * fmath::pow(t, lam.r(k))
        * fmath::powi(1.0 - t, (n - k) as i32)
        * schur_quotient(&tail, t)?)
}

/// Basis values `H₀(t), …, Hₙ(t)` at one parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisVector {
    pub t: f64,
    pub values: Vec<f64>,
}

impl BasisVector {
    /// `Σ Hₖ(t) − 1`
    pub fn unity_residual(&self) -> f64 {
        self.values.iter().sum::<f64>() - 1.0
    }
}

/// A basis bound to one exponent sequence.
///
/// For integer exponents whose factored forms are small enough, the exact
/// factored polynomials are built once in [`GelfondBasis::new`] and all float
/// evaluation goes through them. Otherwise evaluation uses divided differences.
#[derive(Debug, Clone)]
pub struct GelfondBasis {
    exponents: ExponentSequence,
    exact: Option<Vec<FactoredBasis>>,
}

/// Largest `rₙ` for which exact factored forms are precomputed.
pub const EXACT_DEGREE_LIMIT: u64 = 400;

impl GelfondBasis {
    pub fn new(exponents: ExponentSequence) -> Self {
        let exact = exponents
            .integer_exponents()
            .filter(|r| r.last().is_some_and(|&rn| rn <= EXACT_DEGREE_LIMIT))
            .and_then(|_| {
                (0..=exponents.order())
                    .map(|k| FactoredBasis::new(&exponents, k))
                    .collect::<Result<Vec<_>>>()
                    .ok()
            });
        Self { exponents, exact }
    }

    pub fn exponents(&self) -> &ExponentSequence {
        &self.exponents
    }

    pub fn order(&self) -> usize {
        self.exponents.order()
    }

    /// Exact factored form of `H_k`, if available.
    pub fn factored(&self, k: usize) -> Option<&FactoredBasis> {
        self.exact.as_ref().and_then(|v| v.get(k))
    }

    pub fn value(&self, k: usize, t: f64) -> Result<f64> {
        check_index(&self.exponents, k)?;
        check_unit(t)?;
        match self.factored(k) {
            Some(f) => Ok(f.eval_f64(t)),
            None => gelfond_basis_dd(&self.exponents, k, t),
        }
    }

    pub fn evaluate(&self, t: f64) -> Result<BasisVector> {
        let values = (0..=self.order()).map(|k| self.value(k, t)).collect::<Result<_>>()?;
        Ok(BasisVector { t, values })
    }
}

/// Float value of `H_k(t)` by the accurate divided-difference route.
pub fn basis_value(lam: &ExponentSequence, k: usize, t: f64) -> Result<f64> {
    gelfond_basis_dd(lam, k, t)
}

/// `H'_k(t)` through the derivative recurrences on the shifted exponents.
pub fn basis_derivative(lam: &ExponentSequence, k: usize, t: f64) -> Result<f64> {
    check_index(lam, k)?;
    check_unit(t)?;
    let n = lam.order();
    if n == 0 {
        return Ok(0.0);
    }
    let r = lam.exponents();
    let r1 = r[1];
    if r1 < 1.0 {
        return Err(Error::Unsupported("derivative with r₁ < 1"));
    }
    if r1 == 1.0 {
        let shifted = lam.shifted(2, 1.0)?;
        if k == 0 {
            let c: f64 = r[2..].iter().map(|&rj| rj / (rj - 1.0)).product();
            return Ok(-c * basis_value(&shifted, 0, t)?);
        }
        if k == n {
            return Ok(r[n] * basis_value(&shifted, n - 1, t)?);
        }
        let c: f64 = r[k + 1..].iter().map(|&rj| rj / (rj - 1.0)).product();
        Ok(c * (r[k] * basis_value(&shifted, k - 1, t)?
            - (r[k + 1] - 1.0) * basis_value(&shifted, k, t)?))
    } else {
        let shifted = lam.shifted(1, 1.0)?;
        if k == n {
            return Ok(r[n] * basis_value(&shifted, n, t)?);
        }
        let num: f64 = r[k + 1..].iter().product();
        let den: f64 = r[k + 2..].iter().map(|&rj| rj - 1.0).product();
        let head = if k == 0 { 0.0 } else { r[k] / (r[k + 1] - 1.0) * basis_value(&shifted, k, t)? };
        Ok(num / den * (head - basis_value(&shifted, k + 1, t)?))
    }
}

/// Orders of vanishing of `H_k` at 0 and at 1, read off the exact polynomial.
pub fn vanishing_orders(lam: &ExponentSequence, k: usize) -> Result<(usize, usize)> {
    check_index(lam, k)?;
    let p = exact_basis_dd(lam, k)?;
    match (p.order_at_zero(), p.order_at_one()) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(Error::Singular("basis polynomial vanished identically")),
    }
}
