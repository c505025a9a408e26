use slag_core::oracle::{branch_separation, harvey_lawson_sample, plane_oracle, unit_circle_residual, SeparationOptions};
use slag_core::{ArcSpec, Chart, Error, TwoFloat};

#[test]
fn planes_for_several_dimensions() {
    for n in 2..=6 {
        let r = plane_oracle(n, 25, n as u64, 1e-12).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.metrics["planes_found_min"], n as f64);
    }
}

#[test]
fn negative_cone_constant() {
    let r = harvey_lawson_sample(3, -2.0, 60, 5, 1e-9).unwrap();
    assert!(r.pass, "{r:?}");
    assert_eq!(r.metrics["components"], 3.0);
    assert!(r.metrics["locus"] < 1e-12);
    assert!(harvey_lawson_sample(1, 1.0, 10, 0, 1e-9).is_err());
}

#[test]
fn circle_oracle_rejects_other_arcs() {
    let arc = ArcSpec::graph(&[0.0, 0.0, 0.5], (-0.5, 0.5), 16).unwrap();
    let c = Chart::build::<f64>(&arc, 0.3, 2, 0, 6).unwrap();
    assert!(matches!(unit_circle_residual(&c, 0.05, 10, 0, 1e-8), Err(Error::NotApplicable(_))));
}

/// Truncation error shows up at larger sigma and shrinks with the order.
#[test]
fn circle_residual_tracks_truncation() {
    let arc = ArcSpec::unit_circle(16);
    let low = Chart::build::<TwoFloat>(&arc, 0.0, 2, 0, 2).unwrap();
    let high = Chart::build::<TwoFloat>(&arc, 0.0, 2, 0, 6).unwrap();
    let a = unit_circle_residual(&low, 0.3, 50, 1, 1.0).unwrap().max_residual;
    let b = unit_circle_residual(&high, 0.3, 50, 1, 1.0).unwrap().max_residual;
    assert!(a > 1e-8 && b < a * 1e-2, "{a:e} {b:e}");
}

#[test]
fn branches_of_the_circle() {
    let circle = ArcSpec::unit_circle(20);
    let sep = branch_separation(&circle, 2, 8, &SeparationOptions::default(), 1e-13).unwrap();
    assert!(sep.pass, "{sep:?}");
    assert!((sep.metrics["c_min"] - 1.0).abs() < 0.2);
    assert!(matches!(
        branch_separation(&circle, 3, 8, &SeparationOptions::default(), 1e-13),
        Err(Error::Obstruction { shift: 2, n: 3 })
    ));
}
