//! Blossoms, control points, pseudo-affinity weights and de Casteljau evaluation.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fmath;
use crate::partitions::{
    dimension, partition_from_exponents, ExponentSequence, IntegerPartition, MuntzTableau,
    RealPartition,
};
use crate::points::{lerp, Point};
use crate::scalar::{Rational, Scalar};
use crate::schur::{schur, schur_branching, PointMultiset};

/// Tolerance outside `[0,1]` before a de Casteljau weight is reported as non-convex.
pub const CONVEXITY_TOLERANCE: f64 = 1e-12;

/// Control points `P₀, …, Pₙ` in `ℝ^s` over an exponent sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct ControlNet {
    exponents: ExponentSequence,
    points: Vec<Point>,
}

impl ControlNet {
    pub fn new(exponents: ExponentSequence, points: Vec<Point>) -> Result<Self> {
        if points.len() != exponents.order() + 1 {
            return Err(Error::LengthMismatch {
                expected: exponents.order() + 1,
                found: points.len(),
            });
        }
        let dim = points[0].len();
        if dim == 0 {
            return Err(Error::LengthMismatch { expected: 1, found: 0 });
        }
        for p in &points {
            if p.len() != dim {
                return Err(Error::LengthMismatch { expected: dim, found: p.len() });
            }
            if let Some(&bad) = p.iter().find(|x| !x.is_finite()) {
                return Err(Error::Domain { name: "control point", value: bad });
            }
        }
        Ok(Self { exponents, points })
    }

    pub fn exponents(&self) -> &ExponentSequence {
        &self.exponents
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn order(&self) -> usize {
        self.exponents.order()
    }

    pub fn dimension(&self) -> usize {
        self.points[0].len()
    }
}

/// Blossom argument `(0^j, u_{j+1}, …, uₙ)` with tail values in `]0,1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct BlossomArgument {
    zeros: usize,
    tail: Vec<f64>,
}

impl BlossomArgument {
    pub fn new(zeros: usize, tail: Vec<f64>) -> Result<Self> {
        if let Some(&bad) = tail.iter().find(|&&u| !(u > 0.0 && u <= 1.0)) {
            return Err(Error::Domain { name: "blossom argument", value: bad });
        }
        Ok(Self { zeros, tail })
    }

    /// The diagonal argument `(t, …, t)`, or `0ⁿ` when `t = 0`.
    pub fn diagonal(n: usize, t: f64) -> Result<Self> {
        if t == 0.0 {
            Self::new(n, Vec::new())
        } else {
            Self::new(0, vec![t; n])
        }
    }

    pub fn zeros(&self) -> usize {
        self.zeros
    }

    pub fn tail(&self) -> &[f64] {
        &self.tail
    }

    pub fn len(&self) -> usize {
        self.zeros + self.tail.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Control points of `t^{r_k}`: zero below `k`, then `Π_{i>j}(1 − r_k/rᵢ)`.
pub fn monomial_control_points(lam: &ExponentSequence, k: usize) -> Result<Vec<f64>> {
    let n = lam.order();
    if k > n {
        return Err(Error::IndexOutOfRange { index: k, max: n });
    }
    let rk = lam.r(k);
    Ok((0..=n)
        .map(|j| {
            if j < k {
                0.0
            } else {
                lam.tail(j + 1).iter().map(|&ri| 1.0 - rk / ri).product()
            }
        })
        .collect())
}

/// Exact version of [`monomial_control_points`] for integer exponents.
pub fn monomial_control_points_exact(lam: &ExponentSequence, k: usize) -> Result<Vec<Rational>> {
    let r = lam.rational_exponents()?;
    let n = lam.order();
    if k > n {
        return Err(Error::IndexOutOfRange { index: k, max: n });
    }
    let one = Rational::from_int(1);
    Ok((0..=n)
        .map(|j| {
            if j < k {
                Rational::from_int(0)
            } else {
                r[j + 1..]
                    .iter()
                    .fold(one.clone(), |acc, ri| acc * (one.clone() - r[k].clone() / ri.clone()))
            }
        })
        .collect())
}

/// Control points of `Σ a_k t^{r_k}`.
pub fn control_points(lam: &ExponentSequence, coeffs: &[f64]) -> Result<Vec<f64>> {
    let n = lam.order();
    if coeffs.len() != n + 1 {
        return Err(Error::LengthMismatch { expected: n + 1, found: coeffs.len() });
    }
    let mut out = vec![0.0; n + 1];
    for (k, a) in coeffs.iter().enumerate() {
        for (o, p) in out.iter_mut().zip(monomial_control_points(lam, k)?) {
            *o += a * p;
        }
    }
    Ok(out)
}

/// Exact version of [`control_points`].
pub fn control_points_exact(lam: &ExponentSequence, coeffs: &[Rational]) -> Result<Vec<Rational>> {
    let n = lam.order();
    if coeffs.len() != n + 1 {
        return Err(Error::LengthMismatch { expected: n + 1, found: coeffs.len() });
    }
    let mut out = vec![Rational::from_int(0); n + 1];
    for (k, a) in coeffs.iter().enumerate() {
        for (o, p) in out.iter_mut().zip(monomial_control_points_exact(lam, k)?) {
            *o = o.clone() + a.clone() * p;
        }
    }
    Ok(out)
}

/// Pseudo-affinity factor `α(0^j, U; 0, 1, t)` of the space of `λ`, where the
/// blossom has `n = j + |U| + 1` arguments.
pub fn pseudo_affinity(lambda: &RealPartition, j: usize, u: &[f64], t: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::Domain { name: "t", value: t });
    }
    if t == 0.0 {
        return Ok(0.0);
    }
    let n = j + u.len() + 1;
    let (mu, cm) = lambda.window(1, n - j + 1)?;
    let (eta, ce) = lambda.window(2, n - j + 2)?;
    let with = |x: f64| {
        let mut v = u.to_vec();
        v.push(x);
        PointMultiset::new(v)
    };
    let (ut, u1) = (with(t)?, with(1.0)?);
    let den = schur(&mu, &u1)? * schur(&eta, &ut)?;
    if den == 0.0 || !den.is_finite() {
        return Err(Error::Singular("pseudo-affinity denominator"));
    }
    Ok(fmath::pow(t, 1.0 + cm - ce) * schur(&mu, &ut)? * schur(&eta, &u1)? / den)
}

/// [`pseudo_affinity`] for an integer partition in any scalar field.
pub fn pseudo_affinity_exact<T: Scalar>(
    lambda: &IntegerPartition,
    j: usize,
    u: &[T],
    t: &T,
) -> Result<T> {
    let n = j + u.len() + 1;
    if j >= n {
        return Err(Error::IndexOutOfRange { index: j, max: n - 1 });
    }
    let mu = IntegerPartition::new((1..=n - j).map(|i| lambda.part(i)).collect())?;
    let eta = IntegerPartition::new((2..=n - j + 1).map(|i| lambda.part(i)).collect())?;
    let with = |x: &T| {
        let mut v = u.to_vec();
        v.push(x.clone());
        v
    };
    let (ut, u1) = (with(t), with(&T::one()));
    let den = schur_branching(&mu, &u1) * schur_branching(&eta, &ut);
    if den.is_zero() {
        return Err(Error::Singular("pseudo-affinity denominator"));
    }
    Ok(t.clone() * schur_branching(&mu, &ut) * schur_branching(&eta, &u1) / den)
}

/// Full triangle of a de Casteljau-type evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct DeCasteljauTrace {
    /// `levels[r][i]` is `pᵢʳ`.
    pub levels: Vec<Vec<Point>>,
    /// `weights[r-1][i]` is the weight that produced `pᵢʳ`.
    pub weights: Vec<Vec<f64>>,
}

impl DeCasteljauTrace {
    /// The apex of the triangle.
    pub fn value(&self) -> &Point {
        &self.levels[self.levels.len() - 1][0]
    }

    /// Largest distance of any weight outside `[0,1]`.
    pub fn max_weight_excursion(&self) -> f64 {
        self.weights
            .iter()
            .flatten()
            .fold(0.0f64, |m, &w| m.max(-w).max(w - 1.0))
    }

    pub fn is_convex(&self) -> bool {
        self.max_weight_excursion() <= CONVEXITY_TOLERANCE
    }
}

/// Inserts the tail arguments one at a time: after level `r`,
/// `pᵢʳ = f_P(0^{n−r−i}, 1ⁱ, u₁, …, u_r)`.
fn pyramid(net: &ControlNet, args: &[f64]) -> Result<DeCasteljauTrace> {
    let n = net.order();
    let lambda = partition_from_exponents(net.exponents());
    let mut levels = vec![net.points().to_vec()];
    let mut weights = Vec::with_capacity(args.len());
    for (r, &ur) in args.iter().enumerate().map(|(i, u)| (i + 1, u)) {
        let prev = &levels[r - 1];
        let mut level = Vec::with_capacity(n + 1 - r);
        let mut ws = Vec::with_capacity(n + 1 - r);
        for i in 0..=n - r {
            let mut u = vec![1.0; i];
            u.extend_from_slice(&args[..r - 1]);
            let w = pseudo_affinity(&lambda, n - r - i, &u, ur)?;
            level.push(lerp(&prev[i], &prev[i + 1], w));
            ws.push(w);
        }
        levels.push(level);
        weights.push(ws);
    }
    Ok(DeCasteljauTrace { levels, weights })
}

/// De Casteljau evaluation of `P(t) = Σ Hₖ(t)Pₖ`, with the whole triangle.
pub fn de_casteljau(net: &ControlNet, t: f64) -> Result<DeCasteljauTrace> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::Domain { name: "t", value: t });
    }
    pyramid(net, &vec![t; net.order()])
}

/// Exact de Casteljau weights for an integer-partition space: `weights[r-1][i]`.
pub fn de_casteljau_weights_exact<T: Scalar>(
    lambda: &IntegerPartition,
    n: usize,
    t: &T,
) -> Result<Vec<Vec<T>>> {
    let mut out = Vec::with_capacity(n);
    for r in 1..=n {
        let mut ws = Vec::with_capacity(n + 1 - r);
        for i in 0..=n - r {
            let mut u = vec![T::one(); i];
            u.extend(core::iter::repeat_n(t.clone(), r - 1));
            ws.push(pseudo_affinity_exact(lambda, n - r - i, &u, t)?);
        }
        out.push(ws);
    }
    Ok(out)
}

/// Blossom of the curve with control net `net`, by successive pseudo-affine steps.
pub fn blossom_from_net(net: &ControlNet, arg: &BlossomArgument) -> Result<Point> {
    if arg.len() != net.order() {
        return Err(Error::LengthMismatch { expected: net.order(), found: arg.len() });
    }
    Ok(pyramid(net, arg.tail())?.value().clone())
}

/// Blossom of `Σ a_k t^{r_k}` in closed form: the `ε → 0` limit of the
/// defining Schur ratios factors by splitting, and the factors carried by the
/// zero arguments cancel.
pub fn blossom_from_coefficients(
    lam: &ExponentSequence,
    coeffs: &[f64],
    arg: &BlossomArgument,
) -> Result<f64> {
    let n = lam.order();
    if coeffs.len() != n + 1 {
        return Err(Error::LengthMismatch { expected: n + 1, found: coeffs.len() });
    }
    if arg.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: arg.len() });
    }
    let m = arg.tail().len();
    if m == 0 {
        return Ok(coeffs[0]);
    }
    let lambda = partition_from_exponents(lam);
    let tableau = MuntzTableau::new(&lambda, n)?;
    let u = PointMultiset::new(arg.tail().to_vec())?;
    let prod: f64 = arg.tail().iter().product();
    let head = |p: &RealPartition| -> Result<f64> {
        let (w, c) = p.window(1, m + 1)?;
        Ok(fmath::pow(prod, c) * schur(&w, &u)?)
    };
    let base = head(tableau.entry(0))?;
    let f0 = dimension(tableau.entry(0), n)?;
    let mut value = coeffs[0];
    for (k, a) in coeffs.iter().enumerate().take(m + 1).skip(1) {
        let ratio = head(tableau.entry(k))? / base;
        value += a * f0 / dimension(tableau.entry(k), n)? * ratio;
    }
    Ok(value)
}

/// Control net of the same curve restricted to `[0, x]` and rescaled to `[0,1]`:
/// the left edge `(p₀⁰, p₀¹, …, p₀ⁿ)` of the triangle at `x`.
pub fn subdivide_left(net: &ControlNet, x: f64) -> Result<ControlNet> {
    if !(x > 0.0 && x <= 1.0) {
        return Err(Error::Domain { name: "x", value: x });
    }
    let trace = de_casteljau(net, x)?;
    let points = trace.levels.iter().map(|l| l[0].clone()).collect();
    ControlNet::new(net.exponents().clone(), points)
}

#[cfg(test)]
mod tests;
