//! Dense determinants by Gaussian elimination with magnitude pivoting.

use alloc::vec::Vec;

use crate::scalar::Scalar;

/// Determinant of a square matrix given row by row. The empty matrix has determinant 1.
pub fn determinant<T: Scalar>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    let mut det = T::one();
    for col in 0..n {
        let mut pivot = col;
        for row in col + 1..n {
            if m[row][col].abs() > m[pivot][col].abs() {
                pivot = row;
            }
        }
        if m[pivot][col].is_zero() {
            return T::zero();
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det = det * p.clone();
        for row in col + 1..n {
            if m[row][col].is_zero() {
                continue;
            }
            let factor = m[row][col].clone() / p.clone();
            for c in col + 1..n {
                let v = m[col][c].clone() * factor.clone();
                m[row][c] = m[row][c].clone() - v;
            }
        }
    }
    det
}

/// All minors of order `size` of a matrix, as an iterator-free vector.
pub fn minors<T: Scalar>(m: &[Vec<T>], size: usize) -> Vec<T> {
    let rows = subsets(m.len(), size);
    let cols = subsets(m.first().map_or(0, Vec::len), size);
    let mut out = Vec::new();
    for r in &rows {
        for c in &cols {
            let sub = r
                .iter()
                .map(|&i| c.iter().map(|&j| m[i][j].clone()).collect())
                .collect();
            out.push(determinant(sub));
        }
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}
