use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::gelfond_basis::{bernstein, FactoredBasis};
use crate::poly::Polynomial;
use crate::scalar::{ratio, Rational, Scalar};

fn seq(v: &[f64]) -> ExponentSequence {
    ExponentSequence::new(v.to_vec()).unwrap()
}

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(1.0)
}

fn square() -> Vec<Point> {
    vec![vec![0.0, 0.0], vec![0.0, 1.0], vec![1.0, 1.0], vec![1.0, 0.0]]
}

/// Exact component polynomial of an integer-exponent curve with rational points.
fn exact_component(lam: &ExponentSequence, pts: &[Rational]) -> Polynomial<Rational> {
    let mut sum = Polynomial::zero();
    for (k, p) in pts.iter().enumerate() {
        sum = &sum + &FactoredBasis::new(lam, k).unwrap().expand().scale(p);
    }
    sum
}

#[test]
fn endpoints_and_cubic() {
    let c = GelfondBezierCurve::from_points(ExponentSequence::polynomial(3), square()).unwrap();
    assert_eq!(c.evaluate(0.0).unwrap(), vec![0.0, 0.0]);
    assert_eq!(c.evaluate(1.0).unwrap(), vec![1.0, 0.0]);
    for t in [0.1, 0.35, 0.8] {
        let p = c.evaluate(t).unwrap();
        let want: f64 = (0..4).map(|k| bernstein(3, k, t) * square()[k][0]).sum();
        assert!(close(p[0], want, 1e-14));
    }
    let real = GelfondBezierCurve::from_points(seq(&[0.0, 0.3, 1.7, 2.2]), square()).unwrap();
    let end = real.evaluate(1.0).unwrap();
    assert!(close(end[0], 1.0, 1e-13) && end[1].abs() < 1e-13);
    assert!(c.evaluate(1.5).is_err());
}

#[test]
fn hugs_first_edge_for_large_gaps() {
    let c = GelfondBezierCurve::from_points(seq(&[0.0, 2.0, 50.0, 100.0]), square()).unwrap();
    let p = c.evaluate(0.1).unwrap();
    assert!(p[0].abs() < 1e-12);
    assert!(p[1] < 0.02 * 2f64.sqrt());
    for t in [0.2, 0.5, 0.9] {
        let a = c.evaluate(t).unwrap();
        let b = c.evaluate_de_casteljau(t).unwrap();
        assert!(close(a[0], b[0], 1e-10) && close(a[1], b[1], 1e-10));
    }
}

#[test]
fn shifted_curve_is_reparametrized() {
    let net = ControlNet::new(seq(&[0.0, 1.0, 2.5, 4.0]), square()).unwrap();
    let unit = GelfondBezierCurve::new(net.clone());
    let shifted = GelfondBezierCurve::on_interval(net, 1.0, 3.5).unwrap();
    for t in [1.0, 1.3, 2.0, 3.1, 3.5] {
        assert_eq!(shifted.evaluate(t).unwrap(), unit.evaluate_unit((t - 1.0) / 2.5).unwrap());
    }
    assert!(shifted.evaluate(0.5).is_err());
}

fn check_hodograph(c: &GelfondBezierCurve) {
    let d = c.derivative_curve().unwrap();
    let (a, b) = c.interval();
    let h = 1e-6 * (b - a);
    for i in 1..20 {
        let t = a + (b - a) * i as f64 / 20.0;
        let fd: Vec<f64> = sub(&c.evaluate(t + h).unwrap(), &c.evaluate(t - h).unwrap())
            .iter()
            .map(|x| x / (2.0 * h))
            .collect();
        let dv = d.evaluate(t).unwrap();
        for (x, y) in dv.iter().zip(&fd) {
            assert!(close(*x, *y, 1e-5), "{x} {y} at {t}");
        }
    }
    let end = c.end_derivative();
    let at_b = d.evaluate(b).unwrap();
    for (x, y) in end.iter().zip(&at_b) {
        assert!(close(*x, *y, 1e-8));
    }
}

#[test]
fn hodographs_match_finite_differences() {
    let pts = vec![vec![0.0, 0.0], vec![0.5, 2.0], vec![2.0, 1.5], vec![3.0, -1.0], vec![4.0, 0.5]];
    for v in [[0.0, 1.0, 2.0, 3.5, 6.0], [0.0, 1.5, 2.0, 4.0, 4.5], [0.0, 2.0, 3.0, 5.0, 9.0]] {
        check_hodograph(&GelfondBezierCurve::from_points(seq(&v), pts.clone()).unwrap());
    }
    let net = ControlNet::new(seq(&[0.0, 1.0, 3.0, 4.0, 7.0]), pts).unwrap();
    check_hodograph(&GelfondBezierCurve::on_interval(net, -1.0, 1.5).unwrap());
    let low = GelfondBezierCurve::from_points(seq(&[0.0, 0.5, 2.0]), square()[..3].to_vec()).unwrap();
    assert!(low.derivative_curve().is_err());
}

#[test]
fn start_identity_exact() {
    let pts = [ratio(0, 1), ratio(1, 1), ratio(3, 2), ratio(-1, 3)];
    for v in [[0u64, 1, 4, 6], [0, 2, 3, 7], [0, 3, 5, 8]] {
        let lam = ExponentSequence::from_integers(&v).unwrap();
        let mut p = exact_component(&lam, &pts);
        for _ in 0..v[1] - 1 {
            p = p.derivative();
            assert_eq!(p.coeff(0), Rational::from_int(0));
        }
        p = p.derivative();
        let c = GelfondBezierCurve::from_points(
            lam.clone(),
            pts.iter().map(|x| vec![x.to_f64()]).collect(),
        )
        .unwrap();
        let (q, d) = c.start_derivative().unwrap();
        assert_eq!(q as u64, v[1]);
        assert!(close(d[0], p.coeff(0).to_f64(), 1e-12));
        let p1 = exact_component(&lam, &pts).derivative().eval(&Rational::from_int(1));
        assert!(close(c.end_derivative()[0], p1.to_f64(), 1e-12));
    }
}

#[test]
fn variation_diminishing_on_lines() {
    let c = GelfondBezierCurve::from_points(seq(&[0.0, 2.0, 50.0, 100.0]), square()).unwrap();
    let far = Hyperplane::new(vec![1.0, 1.0], 5.0).unwrap();
    assert_eq!(
        variation_diminishing_check(&c, &far, 500).unwrap(),
        VariationReport { curve: 0, polygon: 0 }
    );
    let monotone = GelfondBezierCurve::from_points(
        seq(&[0.0, 1.0, 2.5, 3.0]),
        vec![vec![0.0, 0.0], vec![1.0, 1.0], vec![2.0, 3.0], vec![3.0, 6.0]],
    )
    .unwrap();
    let through = Hyperplane::new(vec![1.0, 0.0], 1.5).unwrap();
    let r = variation_diminishing_check(&monotone, &through, 500).unwrap();
    assert_eq!(r.polygon, 1);
    assert!(r.curve <= 1);
    for i in 0..40 {
        let angle = i as f64 * 0.157;
        let plane = Hyperplane::new(vec![libm::cos(angle), libm::sin(angle)], 0.3 + 0.01 * i as f64).unwrap();
        assert!(variation_diminishing_check(&c, &plane, 2000).unwrap().holds());
    }
    assert!(Hyperplane::new(vec![0.0, 0.0], 1.0).is_err());
}

#[test]
fn zero_samples_use_jitter() {
    let plane = Hyperplane::new(vec![1.0], 0.0).unwrap();
    let pts = [vec![-1.0], vec![0.0], vec![1.0]];
    assert_eq!(crossings(&plane, &pts), 1);
    let touch = [vec![1.0], vec![0.0], vec![1.0]];
    assert_eq!(crossings(&plane, &touch), 0);
}

fn one_sided(c: &GelfondBezierCurve, t: f64, h: f64) -> Point {
    sub(&c.evaluate(t + h).unwrap(), &c.evaluate(t).unwrap())
        .iter()
        .map(|x| x / h)
        .collect()
}

#[test]
fn c1_join_of_two_pieces() {
    let left_net = ControlNet::new(
        ExponentSequence::from_integers(&[0, 2, 3, 5]).unwrap(),
        vec![vec![0.0, 0.0], vec![1.0, 2.0], vec![2.0, 2.5], vec![3.0, 1.0]],
    )
    .unwrap();
    let left = GelfondBezierCurve::on_interval(left_net, 1.0, 2.0).unwrap();
    let spec = JoinSpec {
        right_exponents: ExponentSequence::from_integers(&[0, 1, 10, 25]).unwrap(),
        right_interval: (2.0, 3.0),
    };
    let j = c1_join(&left, &spec).unwrap();
    let right_net = ControlNet::new(
        spec.right_exponents.clone(),
        vec![j.q0.clone(), j.q1.clone(), vec![5.0, 0.0], vec![6.0, 2.0]],
    )
    .unwrap();
    let right = GelfondBezierCurve::on_interval(right_net, 2.0, 3.0).unwrap();
    assert_eq!(left.evaluate(2.0).unwrap(), right.evaluate(2.0).unwrap());
    let h = 1e-6;
    let dl = one_sided(&left, 2.0 - h, h);
    let dr = one_sided(&right, 2.0, h);
    for (a, b) in dl.iter().zip(&dr) {
        assert!(close(*a, *b, 1e-5), "{a} {b}");
    }
    let exact_l = left.end_derivative();
    let exact_r = right.derivative_curve().unwrap().evaluate(2.0).unwrap();
    for (a, b) in exact_l.iter().zip(&exact_r) {
        assert!(close(*a, *b, 1e-12));
    }
}

#[test]
fn c1_join_unit_factor() {
    let left = GelfondBezierCurve::from_points(
        ExponentSequence::from_integers(&[0, 1, 2]).unwrap(),
        vec![vec![0.0], vec![1.0], vec![3.0]],
    )
    .unwrap();
    let spec = JoinSpec {
        right_exponents: ExponentSequence::from_integers(&[0, 1, 2]).unwrap(),
        right_interval: (1.0, 2.0),
    };
    let j = c1_join(&left, &spec).unwrap();
    assert_eq!(j.q1[0] - j.q0[0], 2.0);
    let bad = JoinSpec { right_exponents: seq(&[0.0, 2.0, 3.0]), right_interval: (1.0, 2.0) };
    assert!(matches!(c1_join(&left, &bad), Err(Error::Unsupported(_))));
    let gap = JoinSpec { right_interval: (1.5, 2.0), ..spec };
    assert!(c1_join(&left, &gap).is_err());
}
