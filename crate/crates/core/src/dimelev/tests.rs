use alloc::vec;
use alloc::vec::Vec;

use super::*;

fn seq(v: &[f64]) -> ExponentSequence {
    ExponentSequence::new(v.to_vec()).unwrap()
}

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(1.0)
}

fn polygon() -> Vec<Point> {
    vec![vec![0.0, 0.0], vec![1.0, 3.0], vec![4.0, 3.0], vec![5.0, 0.0]]
}

fn same_curve(a: &ControlNet, b: &ControlNet) {
    let ca = GelfondBezierCurve::new(a.clone());
    let cb = GelfondBezierCurve::new(b.clone());
    for i in 0..=50 {
        let t = i as f64 / 50.0;
        let (pa, pb) = (ca.evaluate(t).unwrap(), cb.evaluate(t).unwrap());
        for (x, y) in pa.iter().zip(&pb) {
            assert!(close(*x, *y, 1e-10), "{t}: {x} {y}");
        }
    }
}

#[test]
fn insertion_cases_preserve_curve() {
    let net = ControlNet::new(seq(&[0.0, 1.5, 3.0, 4.25]), polygon()).unwrap();
    for rho in [0.5, 2.0, 3.5, 7.0, 1.0] {
        let up = insert_exponent(&net, rho).unwrap();
        assert_eq!(up.points()[0], net.points()[0]);
        assert_eq!(up.points()[4], net.points()[3]);
        same_curve(&net, &up);
    }
    let low = insert_exponent(&net, 0.5).unwrap();
    assert_eq!(&low.points()[1..], net.points());
    assert!(matches!(insert_exponent(&net, 3.0), Err(Error::DuplicateExponent(_))));
    assert!(insert_exponent(&net, -1.0).is_err());
}

#[test]
fn classical_weights() {
    let mut s = CornerCuttingState::new(ExponentSource::classical(3), polygon()).unwrap();
    for _ in 0..3 {
        let next = corner_cutting_step(&s).unwrap();
        let m = s.polygon().len();
        for i in 1..m {
            let w = i as f64 / m as f64;
            let want = lerp(&s.polygon()[i], &s.polygon()[i - 1], w);
            assert_eq!(next.polygon()[i], want);
        }
        assert_eq!(next.polygon()[0], polygon()[0]);
        assert_eq!(next.polygon()[m], polygon()[3]);
        s = next;
    }
}

#[test]
fn corner_cutting_equals_insertion_chain() {
    let source = ExponentSource::linear_preset();
    let mut s = CornerCuttingState::new(source.clone(), polygon()).unwrap();
    let mut net = ControlNet::new(source.head().clone(), polygon()).unwrap();
    for _ in 0..4 {
        s = corner_cutting_step(&s).unwrap();
        net = insert_exponent(&net, source.exponent(net.order() + 1)).unwrap();
        assert_eq!(s.exponents().unwrap(), *net.exponents());
        for (a, b) in s.polygon().iter().zip(net.points()) {
            assert!(a.iter().zip(b).all(|(x, y)| close(*x, *y, 1e-14)));
        }
    }
    same_curve(&ControlNet::new(source.head().clone(), polygon()).unwrap(), &net);
}

#[test]
fn non_increasing_source_rejected() {
    let source = ExponentSource::new(seq(&[0.0, 1.0, 2.0, 9.0]), TailRule::Affine { slope: 1.0, intercept: 0.0 });
    let s = CornerCuttingState::new(source, polygon()).unwrap();
    assert!(matches!(corner_cutting_step(&s), Err(Error::NonIncreasingSource { index: 4, .. })));
}

#[test]
fn chord_samples_and_hausdorff() {
    let line = vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![1.0, 1.0]];
    let s = chord_samples(&line, 5);
    assert_eq!(s[2], vec![1.0, 0.0]);
    assert_eq!(s[4], vec![1.0, 1.0]);
    let other = vec![vec![0.0, 0.5], vec![1.0, 0.5]];
    assert!(close(hausdorff_distance(&line, &other), 0.5, 1e-12));
    assert_eq!(hausdorff_distance(&line, &line), 0.0);
}

#[test]
fn zero_iterations_echo_input() {
    let r = convergence_report(&ExponentSource::linear_preset(), polygon(), 0).unwrap();
    assert_eq!(r.rows.len(), 1);
    assert_eq!(r.final_polygon, polygon());
    assert!(close(r.diameter, 5.0, 1e-15));
}
