//! Semistandard tableau enumeration, used as an oracle for small shapes.

use alloc::vec;
use alloc::vec::Vec;

use super::SkewShape;
use crate::partitions::IntegerPartition;
use crate::scalar::Scalar;

/// `Σ_T u^T` over semistandard tableaux of shape `λ` with entries `1..=n`.
pub fn schur_tableaux<T: Scalar>(lambda: &IntegerPartition, u: &[T]) -> T {
    enumerate(lambda, &IntegerPartition::empty(), u)
}

/// Skew version of [`schur_tableaux`].
pub fn skew_schur_tableaux<T: Scalar>(shape: &SkewShape, u: &[T]) -> T {
    enumerate(shape.outer(), shape.inner(), u)
}

struct Filler<'a, T> {
    boxes: Vec<(usize, usize)>,
    outer: &'a IntegerPartition,
    inner: &'a IntegerPartition,
    grid: Vec<Vec<usize>>,
    u: &'a [T],
}

fn enumerate<T: Scalar>(outer: &IntegerPartition, inner: &IntegerPartition, u: &[T]) -> T {
    let mut boxes = Vec::new();
    for i in 0..outer.len() {
        for j in inner.part(i + 1) as usize..outer.part(i + 1) as usize {
            boxes.push((i, j));
        }
    }
    let grid = (0..outer.len()).map(|i| vec![0; outer.part(i + 1) as usize]).collect();
    let mut f = Filler { boxes, outer, inner, grid, u };
    f.fill(0, T::one())
}

impl<T: Scalar> Filler<'_, T> {
    fn in_shape(&self, i: usize, j: usize) -> bool {
        j >= self.inner.part(i + 1) as usize && j < self.outer.part(i + 1) as usize
    }

    fn fill(&mut self, idx: usize, weight: T) -> T {
        if idx == self.boxes.len() {
            return weight;
        }
        let (i, j) = self.boxes[idx];
        let mut lo = 1;
        if j > 0 && self.in_shape(i, j - 1) {
            lo = lo.max(self.grid[i][j - 1]);
        }
        if i > 0 && self.in_shape(i - 1, j) {
            lo = lo.max(self.grid[i - 1][j] + 1);
        }
        let mut acc = T::zero();
        for v in lo..=self.u.len() {
            self.grid[i][j] = v;
            acc = acc + self.fill(idx + 1, weight.clone() * self.u[v - 1].clone());
        }
        acc
    }
}
