//! Dimension elevation by one exponent and the iterated corner-cutting scheme.

use alloc::vec::Vec;

use crate::blossom::ControlNet;
use crate::curves::GelfondBezierCurve;
use crate::error::{Error, Result};
use crate::partitions::ExponentSequence;
use crate::points::{dist, dist_to_segment, lerp, Point};

/// Samples per side for the Hausdorff and parametric distances.
pub const DISTANCE_SAMPLES: usize = 512;

/// Re-expresses the curve of `net` over the exponents with `ρ` inserted.
pub fn insert_exponent(net: &ControlNet, rho: f64) -> Result<ControlNet> {
    let (lam2, m) = net.exponents().insert(rho)?;
    let p = net.points();
    let r = net.exponents().exponents();
    let n = net.order();
    let mut out = Vec::with_capacity(n + 2);
    out.push(p[0].clone());
    for j in 1..=n + 1 {
        if j < m {
            out.push(lerp(&p[j], &p[j - 1], r[j] / rho));
        } else {
            out.push(p[j - 1].clone());
        }
    }
    ControlNet::new(lam2, out)
}

/// How the exponents continue past the initial ones.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TailRule {
    /// `rⱼ = slope·j + intercept`
    Affine { slope: f64, intercept: f64 },
    /// `rⱼ = j²`
    Quadratic,
    /// `rⱼ = j^p`
    Power(f64),
}

impl TailRule {
    pub fn exponent(&self, j: usize) -> f64 {
        let j = j as f64;
        match *self {
            Self::Affine { slope, intercept } => slope * j + intercept,
            Self::Quadratic => j * j,
            Self::Power(p) => crate::fmath::pow(j, p),
        }
    }
}

/// An infinite exponent sequence `(0, r₁, …, rₙ, r_{n+1}, …)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExponentSource {
    head: ExponentSequence,
    tail: TailRule,
}

impl ExponentSource {
    pub fn new(head: ExponentSequence, tail: TailRule) -> Self {
        Self { head, tail }
    }

    /// `rᵢ = i` throughout: classical degree elevation.
    pub fn classical(n: usize) -> Self {
        Self::new(ExponentSequence::polynomial(n), TailRule::Affine { slope: 1.0, intercept: 0.0 })
    }

    /// `(0,1,2,3)` continued by `2j`.
    pub fn linear_preset() -> Self {
        Self::new(ExponentSequence::polynomial(3), TailRule::Affine { slope: 2.0, intercept: 0.0 })
    }

    /// `(0,1,2,3)` continued by `j²`.
    pub fn quadratic_preset() -> Self {
        Self::new(ExponentSequence::polynomial(3), TailRule::Quadratic)
    }

    /// `(0,2,4,14)` continued by `2j+10`.
    pub fn affine_preset() -> Self {
        let head = ExponentSequence::new(alloc::vec![0.0, 2.0, 4.0, 14.0]).expect("valid preset");
        Self::new(head, TailRule::Affine { slope: 2.0, intercept: 10.0 })
    }

    pub fn head(&self) -> &ExponentSequence {
        &self.head
    }

    pub fn tail(&self) -> TailRule {
        self.tail
    }

    pub fn exponent(&self, i: usize) -> f64 {
        if i <= self.head.order() {
            self.head.r(i)
        } else {
            self.tail.exponent(i)
        }
    }
}

/// The polygon after `j` corner-cutting steps.
#[derive(Debug, Clone, PartialEq)]
pub struct CornerCuttingState {
    polygon: Vec<Point>,
    iteration: usize,
    source: ExponentSource,
}

impl CornerCuttingState {
    pub fn new(source: ExponentSource, polygon: Vec<Point>) -> Result<Self> {
        ControlNet::new(source.head.clone(), polygon.clone())?;
        Ok(Self { polygon, iteration: 0, source })
    }

    pub fn polygon(&self) -> &[Point] {
        &self.polygon
    }

    pub fn iteration(&self) -> usize {
        self.iteration
    }

    pub fn base_order(&self) -> usize {
        self.source.head.order()
    }

    pub fn source(&self) -> &ExponentSource {
        &self.source
    }

    /// Exponents `(r₀, …, r_{n+j})` of the current polygon.
    pub fn exponents(&self) -> Result<ExponentSequence> {
        let m = self.base_order() + self.iteration;
        ExponentSequence::new((0..=m).map(|i| self.source.exponent(i)).collect())
    }

    /// The Gelfond-Bézier curve of the initial exponents and polygon.
    pub fn target(&self, initial: &[Point]) -> Result<GelfondBezierCurve> {
        GelfondBezierCurve::from_points(self.source.head.clone(), initial.to_vec())
    }
}

/// One elevation by `ρ = r_{n+j}`.
pub fn corner_cutting_step(state: &CornerCuttingState) -> Result<CornerCuttingState> {
    let m = state.base_order() + state.iteration;
    let rho = state.source.exponent(m + 1);
    let prev = state.source.exponent(m);
    if !(rho > prev) || !rho.is_finite() {
        return Err(Error::NonIncreasingSource { index: m + 1, value: rho });
    }
    let p = &state.polygon;
    let mut next = Vec::with_capacity(p.len() + 1);
    next.push(p[0].clone());
    for i in 1..=m {
        next.push(lerp(&p[i], &p[i - 1], state.source.exponent(i) / rho));
    }
    next.push(p[m].clone());
    Ok(CornerCuttingState {
        polygon: next,
        iteration: state.iteration + 1,
        source: state.source.clone(),
    })
}

/// Symmetric Hausdorff distance between two polylines, measured from
/// [`DISTANCE_SAMPLES`] chord-length samples of each side to the other side.
pub fn hausdorff_distance(a: &[Point], b: &[Point]) -> f64 {
    let one_way = |from: &[Point], to: &[Point]| {
        chord_samples(from, DISTANCE_SAMPLES)
            .iter()
            .map(|p| distance_to_polyline(p, to))
            .fold(0.0f64, f64::max)
    };
    one_way(a, b).max(one_way(b, a))
}

fn distance_to_polyline(p: &[f64], line: &[Point]) -> f64 {
    if line.len() == 1 {
        return dist(p, &line[0]);
    }
    line.windows(2)
        .map(|w| dist_to_segment(p, &w[0], &w[1]))
        .fold(f64::INFINITY, f64::min)
}

/// `count` points at equally spaced chord-length parameters in `[0,1]`.
pub fn chord_samples(line: &[Point], count: usize) -> Vec<Point> {
    let mut acc = Vec::with_capacity(line.len());
    acc.push(0.0);
    for w in line.windows(2) {
        let last = acc[acc.len() - 1];
        acc.push(last + dist(&w[0], &w[1]));
    }
    let total = acc[acc.len() - 1];
    if count < 2 || total == 0.0 {
        return alloc::vec![line[0].clone(); count.max(1)];
    }
    let mut seg = 0;
    (0..count)
        .map(|i| {
            let s = total * i as f64 / (count - 1) as f64;
            while seg + 2 < acc.len() && acc[seg + 1] < s {
                seg += 1;
            }
            let len = acc[seg + 1] - acc[seg];
            let w = if len == 0.0 { 0.0 } else { ((s - acc[seg]) / len).clamp(0.0, 1.0) };
            lerp(&line[seg], &line[seg + 1], w)
        })
        .collect()
}

/// One line of a convergence report.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow {
    pub iteration: usize,
    pub polygon_size: usize,
    pub hausdorff: f64,
    pub sup_param_distance: f64,
}

/// Distances from the corner-cutting polygons to the target curve.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    pub rows: Vec<ConvergenceRow>,
    /// Diameter of the initial polygon.
    pub diameter: f64,
    pub final_polygon: Vec<Point>,
}

impl ConvergenceReport {
    pub fn last(&self) -> &ConvergenceRow {
        &self.rows[self.rows.len() - 1]
    }

    /// Whether Hausdorff distances never increase from iteration `from` on.
    pub fn decreasing_after(&self, from: usize) -> bool {
        self.rows
            .windows(2)
            .filter(|w| w[0].iteration >= from)
            .all(|w| w[1].hausdorff <= w[0].hausdorff)
    }

    /// Largest change of the Hausdorff distance across the last `window` steps.
    pub fn spread_over_last(&self, window: usize) -> f64 {
        let tail = &self.rows[self.rows.len().saturating_sub(window + 1)..];
        let (lo, hi) = tail.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| {
            (lo.min(r.hausdorff), hi.max(r.hausdorff))
        });
        hi - lo
    }
}

/// Runs `iterations` corner-cutting steps from `polygon`, measuring each polygon
/// (including the initial one) against the curve of the initial exponents.
pub fn convergence_report(
    source: &ExponentSource,
    polygon: Vec<Point>,
    iterations: usize,
) -> Result<ConvergenceReport> {
    let mut state = CornerCuttingState::new(source.clone(), polygon.clone())?;
    let target = state.target(&polygon)?;
    let curve: Vec<Point> = (0..DISTANCE_SAMPLES)
        .map(|i| target.evaluate_unit(i as f64 / (DISTANCE_SAMPLES - 1) as f64))
        .collect::<Result<_>>()?;
    let diameter = polygon
        .iter()
        .flat_map(|p| polygon.iter().map(move |q| dist(p, q)))
        .fold(0.0f64, f64::max);
    let mut rows = Vec::with_capacity(iterations + 1);
    loop {
        let samples = chord_samples(state.polygon(), DISTANCE_SAMPLES);
        let sup = samples.iter().zip(&curve).map(|(a, b)| dist(a, b)).fold(0.0f64, f64::max);
        rows.push(ConvergenceRow {
            iteration: state.iteration(),
            polygon_size: state.polygon().len(),
            hausdorff: hausdorff_distance(state.polygon(), &curve),
            sup_param_distance: sup,
        });
        if state.iteration() == iterations {
            break;
        }
        state = corner_cutting_step(&state)?;
    }
    Ok(ConvergenceReport { rows, diameter, final_polygon: state.polygon })
}

#[cfg(test)]
mod tests;
