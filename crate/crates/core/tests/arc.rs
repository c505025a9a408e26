use std::f64::consts::TAU;

use num_complex::Complex64;
use proptest::prelude::*;
use slag_core::arc::{load_arc, Curve};
use slag_core::{existence_gate, normalize_at, rotation_number, ArcSpec, Error, Frame, Gate};

fn translated_circle(cx: f64, cy: f64, r: f64, reverse: bool) -> ArcSpec {
    let sign = if reverse { -1.0 } else { 1.0 };
    let curve = Curve::Fourier { x: vec![cx, r, 0.0], y: vec![cy, 0.0, sign * r], omega: 1.0 };
    ArcSpec::new(curve, true, Some(TAU), (0.0, 0.0), 16).unwrap()
}

#[test]
fn parabola_at_vertex_needs_no_motion() {
    let arc = ArcSpec::graph(&[0.0, 0.0, 0.5], (-1.0, 1.0), 12).unwrap();
    let na = normalize_at(&arc, 0.0, 3).unwrap();
    assert_eq!(na.frame, Frame::identity());
    assert!((na.f0.coeff(3) - 1.0 / 6.0).abs() < 1e-15);
    assert!(na.f0.coeffs().iter().enumerate().all(|(d, c)| d == 3 || c.abs() < 1e-15));
}

#[test]
fn doubly_traversed_circle_turns_twice() {
    let arc = ArcSpec::circle(1.0, 2, 16);
    assert_eq!(rotation_number(&arc).unwrap(), 2);
    assert_eq!(existence_gate(&arc, 4).unwrap(), Gate::Ok);
    assert_eq!(existence_gate(&arc, 3).unwrap(), Gate::Obstruction { shift: 1 });
}

#[test]
fn open_arcs_have_no_rotation_number() {
    let arc = ArcSpec::graph(&[0.0, 0.0, 0.5], (-1.0, 1.0), 12).unwrap();
    assert!(matches!(rotation_number(&arc), Err(Error::NotApplicable(_))));
}

#[test]
fn json_arcs() {
    let arc = load_arc(r#"{"kind": "graph", "g_coeffs": ["0", "0", "0.5"], "degree_cap": 12}"#).unwrap();
    assert_eq!(arc.point(2.0), Complex64::new(2.0, 2.0));
    let bad = [
        r#"{"kind": "graph", "closed": true, "period": 1, "g_coeffs": [0, 1], "degree_cap": 12}"#,
        r#"{"kind": "parametric", "closed": true, "x_coeffs": [0, 1, 0], "y_coeffs": [0, 0, 1], "degree_cap": 12}"#,
        r#"{"kind": "parametric", "x_coeffs": [0, 0, 1], "y_coeffs": [0, 0, 1], "degree_cap": 12}"#,
        r#"{"kind": "graph", "g_coeffs": [0, 1], "degree_cap": 2}"#,
        r#"{"kind": "spiral", "degree_cap": 12}"#,
    ];
    for doc in bad {
        assert!(load_arc(doc).is_err(), "{doc}");
    }
}

#[test]
fn stationary_point_is_singular() {
    let curve = Curve::Polynomial {
        x: slag_core::TaylorPoly::from_f64_coeffs(&[0.0, 0.0, 1.0], 8),
        y: slag_core::TaylorPoly::from_f64_coeffs(&[0.0, 0.0, 0.0, 1.0], 8),
    };
    assert!(matches!(ArcSpec::new(curve, false, None, (-1.0, 1.0), 8), Err(Error::SingularParametrization(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rotation_number_follows_orientation(cx in -5.0..5.0_f64, cy in -5.0..5.0_f64, r in 0.1..4.0_f64) {
        prop_assert_eq!(rotation_number(&translated_circle(cx, cy, r, false)).unwrap(), 1);
        prop_assert_eq!(rotation_number(&translated_circle(cx, cy, r, true)).unwrap(), -1);
    }

    #[test]
    fn gate_depends_only_on_n(cx in -5.0..5.0_f64, r in 0.1..4.0_f64, n in 2usize..9) {
        let g = existence_gate(&translated_circle(cx, 0.0, r, false), n).unwrap();
        let expected = if n <= 2 { Gate::Ok } else { Gate::Obstruction { shift: 2 % n } };
        prop_assert_eq!(g, expected);
    }

    /// Normalizing the graph of a normalized potential changes nothing.
    #[test]
    fn normalization_is_idempotent(s0 in 0.0..TAU, n in 2usize..6) {
        let na = normalize_at(&ArcSpec::unit_circle(14), s0, n).unwrap();
        let slope: Vec<f64> = na.f0.derivative().coeffs().to_vec();
        let graph = ArcSpec::graph(&slope, (-0.2, 0.2), 13).unwrap();
        let again = normalize_at(&graph, 0.0, n).unwrap();
        prop_assert!(again.frame.a.norm() < 1e-15 && again.frame.theta.abs() < 1e-15);
        for d in 0..=13 {
            prop_assert!((again.f0.coeff(d) - na.f0.coeff(d)).abs() < 1e-12);
        }
    }

    /// The frame carries the base point to the origin and the tangent to the
    /// positive real axis.
    #[test]
    fn frame_normalizes_base_point(s0 in 0.0..TAU, n in 2usize..6) {
        let arc = translated_circle(0.7, -1.3, 2.0, false);
        let na = normalize_at(&arc, s0, n).unwrap();
        let p = na.frame.forward(n, arc.point(s0));
        prop_assert!(p.norm() < 1e-12);
        let v = Complex64::from_polar(1.0, n as f64 * na.frame.theta) * arc.velocity(s0);
        prop_assert!(v.im.abs() < 1e-12 * v.norm() && v.re > 0.0);
        prop_assert!(na.frame.theta >= 0.0 && na.frame.theta < TAU / n as f64);
        let back = na.frame.backward(n, p);
        prop_assert!((back - arc.point(s0)).norm() < 1e-12);
    }
}
