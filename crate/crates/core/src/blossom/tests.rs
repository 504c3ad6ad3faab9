use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::gelfond_basis::{FactoredBasis, GelfondBasis};
use crate::poly::Polynomial;
use crate::scalar::{binomial, ratio};
use crate::schur::{complete, elementary};

fn seq(v: &[f64]) -> ExponentSequence {
    ExponentSequence::new(v.to_vec()).unwrap()
}

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(1.0)
}

fn basis_sum(lam: &ExponentSequence, pts: &[f64], t: f64) -> f64 {
    let hb = GelfondBasis::new(lam.clone()).evaluate(t).unwrap();
    hb.values.iter().zip(pts).map(|(h, p)| h * p).sum()
}

fn exact_reconstruction(lam: &ExponentSequence, pts: &[Rational]) -> Polynomial<Rational> {
    let mut sum = Polynomial::zero();
    for (j, p) in pts.iter().enumerate() {
        sum = &sum + &FactoredBasis::new(lam, j).unwrap().expand().scale(p);
    }
    sum
}

#[test]
fn monomial_points_polynomial_case() {
    let n = 6;
    let lam = ExponentSequence::polynomial(n);
    for k in 0..=n {
        let p = monomial_control_points_exact(&lam, k).unwrap();
        for (j, pj) in p.iter().enumerate() {
            let want: Rational = binomial::<Rational>(j as i64, k as i64) / binomial::<Rational>(n as i64, k as i64);
            assert_eq!(*pj, want);
        }
    }
}

#[test]
fn monomial_points_reconstruct_exactly() {
    let lam = ExponentSequence::from_integers(&[0, 3, 4, 6, 9]).unwrap();
    let p = monomial_control_points_exact(&lam, 1).unwrap();
    assert_eq!(p[0], Rational::from_int(0));
    assert_eq!(p[1], ratio(1, 12));
    assert_eq!(p[4], Rational::from_int(1));
    for k in 0..=4 {
        let p = monomial_control_points_exact(&lam, k).unwrap();
        let deg = lam.integer_exponents().unwrap()[k] as usize;
        assert_eq!(exact_reconstruction(&lam, &p), Polynomial::monomial(Rational::from_int(1), deg));
    }
    let ones = monomial_control_points(&lam, 0).unwrap();
    assert!(ones.iter().all(|&x| x == 1.0));
}

#[test]
fn control_points_of_combinations() {
    let lam = ExponentSequence::from_integers(&[0, 2, 4, 5]).unwrap();
    let coeffs = vec![ratio(3, 7), ratio(-5, 2), ratio(11, 13), ratio(2, 9)];
    let pts = control_points_exact(&lam, &coeffs).unwrap();
    let mut want = Polynomial::zero();
    for (a, e) in coeffs.iter().zip([0, 2, 4, 5]) {
        want = &want + &Polynomial::monomial(a.clone(), e);
    }
    assert_eq!(exact_reconstruction(&lam, &pts), want);

    let top = control_points(&lam, &[0.0, 0.0, 0.0, 1.0]).unwrap();
    assert_eq!(top, vec![0.0, 0.0, 0.0, 1.0]);
    assert!(control_points(&lam, &[1.0; 3]).is_err());
}

#[test]
fn elementary_and_complete_weights() {
    let u = [0.3, 0.8, 1.0];
    let t = 0.45;
    let n = u.len() + 1;
    let col = RealPartition::new(vec![1.0; n]).unwrap();
    assert!(close(pseudo_affinity(&col, 1, &u[..2], t).unwrap(), t, 1e-13));
    let mut ut = u.to_vec();
    ut.push(t);
    let mut u1 = u.to_vec();
    u1.push(1.0);
    let want = t * t * elementary::<f64>(n as i64 - 1, &u1) / elementary::<f64>(n as i64 - 1, &ut);
    assert!(close(pseudo_affinity(&col, 0, &u, t).unwrap(), want, 1e-12));

    let k = 4;
    let row = RealPartition::new(vec![k as f64]).unwrap();
    for j in 0..3 {
        let uu = &u[..3 - j];
        let mut ut = uu.to_vec();
        ut.push(t);
        let mut u1 = uu.to_vec();
        u1.push(1.0);
        let want = t * complete::<f64>(k, &ut) / complete::<f64>(k, &u1);
        assert!(close(pseudo_affinity(&row, j, uu, t).unwrap(), want, 1e-12));
    }
    assert_eq!(pseudo_affinity(&row, 0, &u, 0.0).unwrap(), 0.0);
    assert!(pseudo_affinity(&row, 0, &u, 1.5).is_err());
}

#[test]
fn single_box_weights_exact() {
    let lambda = IntegerPartition::new(vec![1]).unwrap();
    let t = ratio(1, 2);
    let w = de_casteljau_weights_exact(&lambda, 3, &t).unwrap();
    assert_eq!(w[0], vec![ratio(1, 4), ratio(3, 8), ratio(5, 12)]);
    for (r, level) in w.iter().enumerate().map(|(r, l)| (r as i64 + 1, l)) {
        for (i, wi) in level.iter().enumerate() {
            let i = i as i64;
            let num = Rational::from_int(r) * t.clone() * t.clone() + Rational::from_int(i) * t.clone();
            let den = Rational::from_int(r - 1) * t.clone() + Rational::from_int(i + 1);
            assert_eq!(*wi, num / den);
        }
    }
}

#[test]
fn polynomial_weights_are_t() {
    let net = ControlNet::new(
        ExponentSequence::polynomial(4),
        (0..5).map(|i| vec![i as f64, (i * i) as f64]).collect(),
    )
    .unwrap();
    let trace = de_casteljau(&net, 0.37).unwrap();
    assert!(trace.weights.iter().flatten().all(|&w| close(w, 0.37, 1e-14)));
}

#[test]
fn column_space_changes_last_edge_only() {
    let n = 5;
    let lam = exponents_of(&RealPartition::new(vec![1.0; n]).unwrap(), n);
    let net = ControlNet::new(lam, (0..=n).map(|i| vec![i as f64]).collect()).unwrap();
    let t = 0.6;
    let trace = de_casteljau(&net, t).unwrap();
    for level in &trace.weights {
        let last = level.len() - 1;
        for (i, &w) in level.iter().enumerate() {
            assert_eq!(i != last, close(w, t, 1e-13), "{level:?}");
        }
    }
}

fn exponents_of(lambda: &RealPartition, n: usize) -> ExponentSequence {
    crate::partitions::exponents_from_partition(lambda, n).unwrap()
}

#[test]
fn de_casteljau_matches_basis_sum() {
    for v in [
        vec![0.0, 2.0, 3.0, 4.0],
        vec![0.0, 1.0, 2.5, 4.0, 4.5],
        vec![0.0, 0.5, 1.75, 2.0],
        vec![0.0, 3.0, 4.0, 6.0, 9.0],
        vec![0.0, 3.0, 3.1, 3.2],
    ] {
        let lam = seq(&v);
        let n = lam.order();
        let comps: Vec<f64> = (0..=n).map(|i| (i as f64 * 1.7).sin() + 0.2 * i as f64).collect();
        let net = ControlNet::new(lam.clone(), comps.iter().map(|&c| vec![c]).collect()).unwrap();
        for t in [0.0, 0.05, 0.3, 0.5, 0.77, 1.0] {
            let trace = de_casteljau(&net, t).unwrap();
            assert!(close(trace.value()[0], basis_sum(&lam, &comps, t), 1e-10), "{v:?} {t}");
            assert!(trace.is_convex());
            for r in 0..=n {
                for i in 0..=n - r {
                    let mut tail = vec![1.0; i];
                    tail.extend(vec![t; r]);
                    if t == 0.0 {
                        tail.truncate(i);
                    }
                    let arg = BlossomArgument::new(n - tail.len(), tail).unwrap();
                    let from_net = blossom_from_net(&net, &arg).unwrap()[0];
                    assert!(close(trace.levels[r][i][0], from_net, 1e-10));
                }
            }
        }
    }
}

#[test]
fn blossom_closed_form_and_net_agree() {
    let lam = seq(&[0.0, 1.5, 2.0, 4.0, 6.5]);
    let coeffs = [0.4, -1.0, 2.0, 0.5, -0.25];
    let pts = control_points(&lam, &coeffs).unwrap();
    let net = ControlNet::new(lam.clone(), pts.iter().map(|&p| vec![p]).collect()).unwrap();
    let zero = BlossomArgument::new(4, vec![]).unwrap();
    assert_eq!(blossom_from_coefficients(&lam, &coeffs, &zero).unwrap(), 0.4);
    for k in 0..=4 {
        let arg = BlossomArgument::new(4 - k, vec![1.0; k]).unwrap();
        assert!(close(blossom_from_coefficients(&lam, &coeffs, &arg).unwrap(), pts[k], 1e-12));
    }
    for (j, tail) in [(0, vec![0.2, 0.5, 0.9, 0.35]), (1, vec![0.7, 0.1, 0.6]), (2, vec![0.25, 0.8])] {
        let arg = BlossomArgument::new(j, tail.clone()).unwrap();
        let a = blossom_from_coefficients(&lam, &coeffs, &arg).unwrap();
        let b = blossom_from_net(&net, &arg).unwrap()[0];
        assert!(close(a, b, 1e-10), "{a} {b}");
        let mut rev = tail;
        rev.reverse();
        let c = blossom_from_net(&net, &BlossomArgument::new(j, rev).unwrap()).unwrap()[0];
        assert!(close(b, c, 1e-10));
    }
    let t: f64 = 0.42;
    let diag = BlossomArgument::diagonal(4, t).unwrap();
    let direct: f64 = coeffs.iter().zip(lam.exponents()).map(|(a, r)| a * t.powf(*r)).sum();
    assert!(close(blossom_from_coefficients(&lam, &coeffs, &diag).unwrap(), direct, 1e-12));
    assert!(BlossomArgument::new(1, vec![0.0]).is_err());
}

#[test]
fn windows_below_minus_one() {
    let lam = seq(&[0.0, 3.0, 3.1, 3.2]);
    assert!(partition_from_exponents(&lam).part(2) < -1.0);
    let coeffs = [0.3, 1.0, -2.0, 1.5];
    let pts = control_points(&lam, &coeffs).unwrap();
    let net = ControlNet::new(lam.clone(), pts.iter().map(|&p| vec![p]).collect()).unwrap();
    for (j, tail) in [(0, vec![0.2, 0.5, 0.9]), (1, vec![0.7, 0.4])] {
        let arg = BlossomArgument::new(j, tail).unwrap();
        let a = blossom_from_coefficients(&lam, &coeffs, &arg).unwrap();
        let b = blossom_from_net(&net, &arg).unwrap()[0];
        assert!(close(a, b, 1e-10), "{a} {b}");
    }
}

#[test]
fn subdivision_chains() {
    let lam = seq(&[0.0, 2.0, 2.5, 5.0]);
    let net = ControlNet::new(
        lam.clone(),
        vec![vec![0.0, 0.0], vec![1.0, 2.0], vec![3.0, -1.0], vec![4.0, 1.0]],
    )
    .unwrap();
    let x = 0.6;
    let left = subdivide_left(&net, x).unwrap();
    for s in [0.1, 0.4, 0.75, 1.0] {
        let direct = de_casteljau(&net, s * x).unwrap();
        let chained = de_casteljau(&left, s).unwrap();
        for (a, b) in direct.value().iter().zip(chained.value()) {
            assert!(close(*a, *b, 1e-9));
        }
    }
    assert!(subdivide_left(&net, 0.0).is_err());
}

#[test]
fn net_validation() {
    let lam = ExponentSequence::polynomial(2);
    assert!(ControlNet::new(lam.clone(), vec![vec![0.0]; 2]).is_err());
    assert!(ControlNet::new(lam.clone(), vec![vec![0.0], vec![1.0, 2.0], vec![0.0]]).is_err());
    assert!(ControlNet::new(lam, vec![vec![0.0], vec![f64::NAN], vec![0.0]]).is_err());
}
