//! Gelfond-Bézier curves: evaluation, hodographs, endpoint behavior,
//! variation diminishing and C¹ joins.

use alloc::vec::Vec;

use crate::blossom::{de_casteljau, ControlNet};
use crate::error::{Error, Result};
use crate::gelfond_basis::GelfondBasis;
use crate::partitions::ExponentSequence;
use crate::points::{add_scaled, dot, norm, scale, sub, Point};

/// Replacement for exact zeros when counting sign changes.
pub const CROSSING_JITTER: f64 = 1e-12;

/// `P(t) = Σ Hₖ((t−a)/(b−a)) Pₖ` on `[a,b]`.
#[derive(Debug, Clone)]
pub struct GelfondBezierCurve {
    net: ControlNet,
    basis: GelfondBasis,
    interval: (f64, f64),
}

impl GelfondBezierCurve {
    pub fn new(net: ControlNet) -> Self {
        let basis = GelfondBasis::new(net.exponents().clone());
        Self { net, basis, interval: (0.0, 1.0) }
    }

    pub fn on_interval(net: ControlNet, a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && a < b) {
            return Err(Error::Domain { name: "interval end", value: b });
        }
        let mut c = Self::new(net);
        c.interval = (a, b);
        Ok(c)
    }

    pub fn from_points(exponents: ExponentSequence, points: Vec<Point>) -> Result<Self> {
        Ok(Self::new(ControlNet::new(exponents, points)?))
    }

    pub fn net(&self) -> &ControlNet {
        &self.net
    }

    pub fn exponents(&self) -> &ExponentSequence {
        self.net.exponents()
    }

    pub fn points(&self) -> &[Point] {
        self.net.points()
    }

    pub fn order(&self) -> usize {
        self.net.order()
    }

    pub fn interval(&self) -> (f64, f64) {
        self.interval
    }

    fn width(&self) -> f64 {
        self.interval.1 - self.interval.0
    }

    /// Local parameter in `[0,1]`.
    pub fn local(&self, t: f64) -> Result<f64> {
        let (a, b) = self.interval;
        if !(a..=b).contains(&t) {
            return Err(Error::Domain { name: "t", value: t });
        }
        Ok((t - a) / (b - a))
    }

    /// Evaluates at the local parameter `s ∈ [0,1]`.
    pub fn evaluate_unit(&self, s: f64) -> Result<Point> {
        let h = self.basis.evaluate(s)?;
        let mut out = alloc::vec![0.0; self.net.dimension()];
        for (hk, pk) in h.values.iter().zip(self.points()) {
            out = add_scaled(&out, *hk, pk);
        }
        Ok(out)
    }

    pub fn evaluate(&self, t: f64) -> Result<Point> {
        self.evaluate_unit(self.local(t)?)
    }

    /// Evaluation through the de Casteljau triangle.
    pub fn evaluate_de_casteljau(&self, t: f64) -> Result<Point> {
        Ok(de_casteljau(&self.net, self.local(t)?)?.value().clone())
    }

    /// `m + 1` equally spaced samples `(t, P(t))` over the interval.
    pub fn sample(&self, m: usize) -> Result<Vec<(f64, Point)>> {
        let (a, b) = self.interval;
        let m = m.max(1);
        (0..=m)
            .map(|i| {
                let s = i as f64 / m as f64;
                Ok((a + s * (b - a), self.evaluate_unit(s)?))
            })
            .collect()
    }

    /// The hodograph `P'` as a curve over `(0, r₁−1, …, rₙ−1)` (with `r₁−1`
    /// dropped when `r₁ = 1`).
    pub fn derivative_curve(&self) -> Result<Self> {
        let lam = self.exponents();
        let n = lam.order();
        let r = lam.exponents();
        if r[1] < 1.0 {
            return Err(Error::Unsupported("derivative for r₁ < 1"));
        }
        let p = self.points();
        let inv = 1.0 / self.width();
        let delta = |k: usize| scale(&sub(&p[k + 1], &p[k]), inv);
        let falling = |from: usize| r[from..].iter().map(|x| x - 1.0).product::<f64>();
        let rising = |from: usize| r[from..].iter().product::<f64>();
        let (exps, pts): (Vec<f64>, Vec<Point>) = if r[1] == 1.0 {
            let exps = core::iter::once(0.0).chain(r[2..].iter().map(|x| x - 1.0)).collect();
            let pts = (0..n)
                .map(|k| scale(&delta(k), rising(k + 1) / falling(k + 2)))
                .collect();
            (exps, pts)
        } else {
            let exps = core::iter::once(0.0).chain(r[1..].iter().map(|x| x - 1.0)).collect();
            let mut pts = alloc::vec![alloc::vec![0.0; self.net.dimension()]];
            pts.extend((1..=n).map(|k| scale(&delta(k - 1), rising(k) / falling(k + 1))));
            (exps, pts)
        };
        let net = ControlNet::new(ExponentSequence::new(exps)?, pts)?;
        Self::on_interval(net, self.interval.0, self.interval.1)
    }

    /// `P'(b) = rₙ ΔPₙ₋₁ / (b−a)`
    pub fn end_derivative(&self) -> Point {
        let n = self.order();
        let p = self.points();
        scale(&sub(&p[n], &p[n - 1]), self.exponents().r(n) / self.width())
    }

    /// First nonvanishing derivative at `a` for an integer `r₁ = q`:
    /// `P^{(q)}(a) = q! Π_{j≥2} rⱼ / Π_{j≥2}(rⱼ − q) · ΔP₀ / (b−a)^q`.
    pub fn start_derivative(&self) -> Result<(u32, Point)> {
        let r = self.exponents().exponents();
        let q = r[1];
        if q < 1.0 || crate::fmath::fract(q) != 0.0 {
            return Err(Error::NonIntegerExponents);
        }
        let q = q as u32;
        let fact: f64 = (1..=q).map(f64::from).product();
        let ratio: f64 = r[2..].iter().map(|rj| rj / (rj - r[1])).product();
        let width_pow: f64 = (0..q).map(|_| self.width()).product();
        let p = self.points();
        Ok((q, scale(&sub(&p[1], &p[0]), fact * ratio / width_pow)))
    }
}

/// The hyperplane `normal · x = offset`.
#[derive(Debug, Clone, PartialEq)]
pub struct Hyperplane {
    normal: Point,
    offset: f64,
}

impl Hyperplane {
    pub fn new(normal: Point, offset: f64) -> Result<Self> {
        if norm(&normal) == 0.0 || !offset.is_finite() {
            return Err(Error::DegenerateHyperplane);
        }
        Ok(Self { normal, offset })
    }

    pub fn side(&self, x: &[f64]) -> f64 {
        dot(&self.normal, x) - self.offset
    }
}

/// Sign changes along a sequence of points.
pub fn crossings<'a>(plane: &Hyperplane, pts: impl IntoIterator<Item = &'a Point>) -> usize {
    let mut count = 0;
    let mut prev: Option<bool> = None;
    for p in pts {
        let v = plane.side(p);
        let positive = if v == 0.0 { CROSSING_JITTER } else { v } > 0.0;
        if prev.is_some_and(|s| s != positive) {
            count += 1;
        }
        prev = Some(positive);
    }
    count
}

/// Crossing counts of a hyperplane with the sampled curve and with its polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VariationReport {
    pub curve: usize,
    pub polygon: usize,
}

impl VariationReport {
    pub fn holds(&self) -> bool {
        self.curve <= self.polygon
    }
}

/// Counts sign changes of the curve at `samples + 1` equally spaced parameters
/// and of the control polygon at its vertices.
pub fn variation_diminishing_check(
    curve: &GelfondBezierCurve,
    plane: &Hyperplane,
    samples: usize,
) -> Result<VariationReport> {
    if plane.normal.len() != curve.net.dimension() {
        return Err(Error::LengthMismatch { expected: curve.net.dimension(), found: plane.normal.len() });
    }
    let pts: Vec<Point> = curve.sample(samples)?.into_iter().map(|(_, p)| p).collect();
    Ok(VariationReport {
        curve: crossings(plane, &pts),
        polygon: crossings(plane, curve.points()),
    })
}

/// Exponents and interval `[b, c]` of the right piece of a C¹ join.
#[derive(Debug, Clone, PartialEq)]
pub struct JoinSpec {
    pub right_exponents: ExponentSequence,
    pub right_interval: (f64, f64),
}

/// The first two control points of the right piece.
#[derive(Debug, Clone, PartialEq)]
pub struct JoinPoints {
    pub q0: Point,
    pub q1: Point,
}

/// `Q₀ = Pₙ` and `Q₁ = Q₀ + ((c−b)/(b−a)) · rₙ Π_{j≥2}(sⱼ−1)/Π sⱼ · ΔPₙ₋₁`,
/// for right exponents with `s₁ = 1`.
pub fn c1_join(left: &GelfondBezierCurve, spec: &JoinSpec) -> Result<JoinPoints> {
    let s = spec.right_exponents.exponents();
    if s[1] != 1.0 {
        return Err(Error::Unsupported("C¹ join needs s₁ = 1"));
    }
    let (a, b) = left.interval;
    let (b2, c) = spec.right_interval;
    if b2 != b || c <= b {
        return Err(Error::Domain { name: "right interval start", value: b2 });
    }
    let n = left.order();
    let p = left.points();
    let factor = (c - b) / (b - a) * left.exponents().r(n)
        * s[2..].iter().map(|x| (x - 1.0) / x).product::<f64>();
    let q0 = p[n].clone();
    let q1 = add_scaled(&q0, factor, &sub(&p[n], &p[n - 1]));
    Ok(JoinPoints { q0, q1 })
}

#[cfg(test)]
mod tests;
