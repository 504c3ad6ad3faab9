//! Bialternant (ratio of alternants) evaluation, including repeated points.

use alloc::vec;
use alloc::vec::Vec;


use super::PointMultiset;
use crate::error::{Error, Result};
use crate::fmath;
use crate::linalg::determinant;
use crate::partitions::{IntegerPartition, RealPartition};
use crate::scalar::{binomial, binomial_real, Rational, Scalar};

/// Relative gap below which two nodes are treated by local Taylor expansion.
const CLOSE_NODES: f64 = 0.25;
const TAYLOR_TERMS: usize = 80;

/// Exact confluent bialternant for an integer partition at rational points.
///
/// A point of multiplicity `m` contributes the rows `D^q u^{e}/q!`, `q < m`,
/// and the denominator is the closed-form confluent Vandermonde.
pub fn schur_bialternant_exact(
    lambda: &IntegerPartition,
    u: &PointMultiset<Rational>,
) -> Result<Rational> {
    let n = u.len();
    if lambda.len() > n {
        return Ok(Rational::from_int(0));
    }
    let exps: Vec<i64> = (1..=n).map(|j| lambda.part(j) as i64 + (n - j) as i64).collect();
    let groups = u.groups();
    let mut rows = Vec::with_capacity(n);
    for (x, m) in &groups {
        for q in 0..*m as i64 {
            rows.push(
                exps.iter()
                    .map(|&e| {
                        if e < q {
                            Rational::from_int(0)
                        } else {
                            binomial::<Rational>(e, q) * x.powi((e - q) as u32)
                        }
                    })
                    .collect(),
            );
        }
    }
    let mut vandermonde = Rational::from_int(1);
    for (a, (xa, ma)) in groups.iter().enumerate() {
        if (ma * (ma - 1) / 2) % 2 == 1 {
            vandermonde = -vandermonde;
        }
        for (xb, mb) in &groups[a + 1..] {
            vandermonde = vandermonde * (xa.clone() - xb.clone()).powi((ma * mb) as u32);
        }
    }
    Ok(determinant(rows) / vandermonde)
}

/// Float bialternant for a real partition, in Newton (divided-difference) form.
///
/// Row `i` of the alternant is replaced by the divided difference of `x^{e_j}`
/// over the first `i` sorted nodes. The same transform turns the Vandermonde
/// into an anti-triangular matrix of ones, so no division by point gaps remains.
pub fn schur_bialternant(lambda: &RealPartition, u: &PointMultiset) -> Result<f64> {
    let n = u.len();
    if lambda.len() > n {
        return match lambda.to_integer() {
            Some(_) => Ok(0.0),
            None => Err(Error::TooFewVariables { length: lambda.len(), variables: n }),
        };
    }
    if n == 0 {
        return Ok(1.0);
    }
    let parts = lambda.padded(n)?;
    let mut nodes = u.values().to_vec();
    nodes.sort_by(|a, b| a.total_cmp(b));
    let cols: Vec<Vec<f64>> = (0..n)
        .map(|j| power_divided_differences(&nodes, parts[j] + (n - 1 - j) as f64))
        .collect();
    let m = (0..n).map(|i| (0..n).map(|j| cols[j][i]).collect()).collect();
    let det = determinant::<f64>(m);
    let sign = if (n * (n - 1) / 2) % 2 == 1 { -1.0 } else { 1.0 };
    let value = sign * det;
    if !value.is_finite() {
        return Err(Error::Singular("non-finite bialternant"));
    }
    Ok(value)
}

/// Prefix divided differences `[x₁], [x₁,x₂], …, [x₁,…,x_N]` of `x ↦ x^e`
/// over ascending positive nodes (repeats allowed).
pub fn power_divided_differences(nodes: &[f64], e: f64) -> Vec<f64> {
    let n = nodes.len();
    // table[a][w] = [x_a, …, x_{a+w}]
    let mut table = vec![vec![0.0; n]; n];
    for a in 0..n {
        table[a][0] = fmath::pow(nodes[a], e);
    }
    for w in 1..n {
        for a in 0..n - w {
            let (xa, xb) = (nodes[a], nodes[a + w]);
            table[a][w] = if xa == xb {
                binomial_real(e, w) * fmath::pow(xa, e - w as f64)
            } else if xb - xa > CLOSE_NODES * xb {
                (table[a + 1][w - 1] - table[a][w - 1]) / (xb - xa)
            } else {
                taylor_divided_difference(&nodes[a..=a + w], e)
            };
        }
    }
    (0..n).map(|w| table[0][w]).collect()
}

/// `[x₀,…,x_m] x^e` by expanding `x^e` around the midpoint of a tight cluster.
fn taylor_divided_difference(nodes: &[f64], e: f64) -> f64 {
    let m = nodes.len() - 1;
    let c = 0.5 * (nodes[0] + nodes[m]);
    let shifted: Vec<f64> = nodes.iter().map(|x| x - c).collect();
    let h = super::complete_all(&shifted, TAYLOR_TERMS);
    // g_k = C(e, k) c^{e-k}
    let mut g = fmath::pow(c, e);
    let mut sum = 0.0;
    // symmetric clusters produce exact zero terms, so wait for a run of small ones
    let mut quiet = 0;
    for k in 1..=m + TAYLOR_TERMS {
        g *= (e - (k - 1) as f64) / (k as f64 * c);
        if k < m {
            continue;
        }
        if g == 0.0 {
            break;
        }
        let term = g * h[k - m];
        sum += term;
        if term.abs() <= 1e-18 * sum.abs() {
            quiet += 1;
            if quiet == 4 {
                break;
            }
        } else {
            quiet = 0;
        }
    }
    if m == 0 {
        fmath::pow(c, e) + sum
    } else {
        sum
    }
}
