//! Points of `ℝ^s` stored as plain vectors.

use alloc::vec::Vec;

use crate::fmath;

pub type Point = Vec<f64>;

/// `(1−w)·a + w·b`
pub fn lerp(a: &[f64], b: &[f64], w: f64) -> Point {
    a.iter().zip(b).map(|(x, y)| (1.0 - w) * x + w * y).collect()
}

pub fn sub(a: &[f64], b: &[f64]) -> Point {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `a + s·b`
pub fn add_scaled(a: &[f64], s: f64, b: &[f64]) -> Point {
    a.iter().zip(b).map(|(x, y)| x + s * y).collect()
}

pub fn scale(a: &[f64], s: f64) -> Point {
    a.iter().map(|x| s * x).collect()
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    fmath::sqrt(dot(a, a))
}

pub fn dist(a: &[f64], b: &[f64]) -> f64 {
    fmath::sqrt(a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum())
}

/// Distance from `p` to the segment `[a, b]`.
pub fn dist_to_segment(p: &[f64], a: &[f64], b: &[f64]) -> f64 {
    let (mut len2, mut proj) = (0.0, 0.0);
    for ((pi, ai), bi) in p.iter().zip(a).zip(b) {
        let d = bi - ai;
        len2 += d * d;
        proj += (pi - ai) * d;
    }
    let s = if len2 == 0.0 { 0.0 } else { (proj / len2).clamp(0.0, 1.0) };
    let sq: f64 = p
        .iter()
        .zip(a)
        .zip(b)
        .map(|((pi, ai), bi)| {
            let e = pi - (ai + s * (bi - ai));
            e * e
        })
        .sum();
    fmath::sqrt(sq)
}
