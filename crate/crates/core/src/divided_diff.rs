//! Divided differences, mainly of `f_t(x) = t^x` as a function of the exponent.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fmath;

/// Sorted nodes `x₀ ≤ x₁ ≤ … ≤ xₙ`.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeSet {
    nodes: Vec<f64>,
}

impl NodeSet {
    pub fn new(mut nodes: Vec<f64>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::LengthMismatch { expected: 1, found: 0 });
        }
        if let Some(&bad) = nodes.iter().find(|x| !x.is_finite()) {
            return Err(Error::Domain { name: "node", value: bad });
        }
        nodes.sort_by(|a, b| a.total_cmp(b));
        Ok(Self { nodes })
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn has_coincident(&self) -> bool {
        self.nodes.windows(2).any(|w| w[0] == w[1])
    }

    /// Every node shifted by `delta`.
    pub fn shifted(&self, delta: f64) -> Self {
        Self { nodes: self.nodes.iter().map(|x| x + delta).collect() }
    }
}

/// Classical recursive divided difference of `f` over distinct nodes.
pub fn dd_recursive(nodes: &NodeSet, f: impl Fn(f64) -> f64) -> Result<f64> {
    if nodes.has_coincident() {
        return Err(Error::CoincidentNodes);
    }
    dd_recursive_hermite(nodes, |x, k| if k == 0 { f(x) } else { f64::NAN })
}

/// Recursive divided difference with Hermite data: `deriv(x, k)` is `f⁽ᵏ⁾(x)`,
/// used on runs of coincident nodes.
pub fn dd_recursive_hermite(nodes: &NodeSet, deriv: impl Fn(f64, usize) -> f64) -> Result<f64> {
    let x = &nodes.nodes;
    let n = x.len();
    let mut col: Vec<f64> = x.iter().map(|&xi| deriv(xi, 0)).collect();
    let mut fact = 1.0;
    for w in 1..n {
        fact *= w as f64;
        for a in 0..n - w {
            col[a] = if x[a + w] == x[a] {
                deriv(x[a], w) / fact
            } else {
                (col[a + 1] - col[a]) / (x[a + w] - x[a])
            };
        }
    }
    if !col[0].is_finite() {
        return Err(Error::Singular("divided difference"));
    }
    Ok(col[0])
}

/// Derivatives of `x ↦ t^x`: `t^x (ln t)^k`.
pub fn exp_derivative(t: f64, x: f64, k: usize) -> f64 {
    fmath::pow(t, x) * fmath::powi(fmath::ln(t), k as i32)
}

fn check_t(t: f64) -> Result<()> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain { name: "t", value: t });
    }
    Ok(())
}

/// `[x₀,…,xₙ] t^x` by the explicit sum `Σᵢ t^{xᵢ}/Πⱼ≠ᵢ(xᵢ−xⱼ)`. Distinct nodes only.
///
/// Loses accuracy for clustered nodes; [`dd_exponential`] does not.
pub fn dd_exponential_sum(nodes: &NodeSet, t: f64) -> Result<f64> {
    check_t(t)?;
    if nodes.has_coincident() {
        return Err(Error::CoincidentNodes);
    }
    let x = &nodes.nodes;
    let mut sum = 0.0;
    for (i, &xi) in x.iter().enumerate() {
        let denom: f64 = x
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &xj)| xi - xj)
            .product();
        sum += fmath::pow(t, xi) / denom;
    }
    Ok(sum)
}

/// `[x₀,…,xₙ] t^x`, accurate for any node spread and for coincident nodes.
///
/// The divided differences of `e^{cy}` over `y₀,…,yₙ` are the first row of
/// `exp(cZ)` where `Z` is bidiagonal with the `yᵢ` on the diagonal and ones
/// above it. With `c = ln t` and the nodes shifted to share one sign, every
/// entry of `exp(cZ)` has sign `sgn(c)^{j−i}`, so scaling and squaring adds
/// no cancellation.
pub fn dd_exponential(nodes: &NodeSet, t: f64) -> Result<f64> {
    check_t(t)?;
    let x = &nodes.nodes;
    let n = x.len();
    let c = fmath::ln(t);
    let anchor = if c <= 0.0 { x[0] } else { x[n - 1] };
    if n == 1 {
        return Ok(fmath::pow(t, x[0]));
    }
    if c == 0.0 {
        return Ok(0.0);
    }
    let diag: Vec<f64> = x.iter().map(|xi| c * (xi - anchor)).collect();
    let norm = diag.iter().fold(0.0f64, |m, d| m.max(d.abs())) + c.abs();
    let mut squarings = 0u32;
    let mut scale = 1.0;
    while norm * scale > 0.25 {
        scale *= 0.5;
        squarings += 1;
    }
    let mut e = exp_bidiagonal(&diag, c, scale);
    for _ in 0..squarings {
        e = square_upper(&e);
    }
    let value = fmath::pow(t, anchor) * e[0][n - 1];
    if !value.is_finite() {
        return Err(Error::Singular("divided difference overflow"));
    }
    Ok(value)
}

/// Taylor series of `exp(s·B)` for small `s·B`, `B` bidiagonal.
fn exp_bidiagonal(diag: &[f64], sup: f64, s: f64) -> Vec<Vec<f64>> {
    let n = diag.len();
    let d: Vec<f64> = diag.iter().map(|x| x * s).collect();
    let u = sup * s;
    let mut result = vec![vec![0.0; n]; n];
    let mut term = vec![vec![0.0; n]; n];
    for i in 0..n {
        result[i][i] = 1.0;
        term[i][i] = 1.0;
    }
    for k in 1..60 {
        // term ← term·B / k, upper triangular
        let mut next = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in i..n {
                let mut v = term[i][j] * d[j];
                if j > i {
                    v += term[i][j - 1] * u;
                }
                next[i][j] = v / k as f64;
            }
        }
        term = next;
        let mut small = true;
        for i in 0..n {
            for j in i..n {
                result[i][j] += term[i][j];
                if term[i][j].abs() > 1e-18 * result[i][j].abs() {
                    small = false;
                }
            }
        }
        if small {
            break;
        }
    }
    result
}

fn square_upper(a: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = a.len();
    let mut out = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in i..n {
            out[i][j] = (i..=j).map(|k| a[i][k] * a[k][j]).sum();
        }
    }
    out
}

/// The two pieces of `d/dt [x₀,…,xₙ] t^x = x₀·[x₀−1,…,xₙ−1]f_t + [x₁−1,…,xₙ−1]f_t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivativeSplit {
    /// `x₀·[x₀−1,…,xₙ−1]f_t`
    pub leading: f64,
    /// `[x₁−1,…,xₙ−1]f_t`, zero when there is a single node.
    pub tail: f64,
}

impl DerivativeSplit {
    pub fn total(&self) -> f64 {
        self.leading + self.tail
    }
}

pub fn dd_derivative_split(nodes: &NodeSet, t: f64) -> Result<DerivativeSplit> {
    let x = &nodes.nodes;
    let shifted = nodes.shifted(-1.0);
    let leading = if x[0] == 0.0 { 0.0 } else { x[0] * dd_exponential(&shifted, t)? };
    let tail = if x.len() == 1 {
        0.0
    } else {
        dd_exponential(&NodeSet { nodes: shifted.nodes[1..].to_vec() }, t)?
    };
    Ok(DerivativeSplit { leading, tail })
}
