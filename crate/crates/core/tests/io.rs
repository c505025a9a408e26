mod common;

use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use slag_core::arc::NormalizedArc;
use slag_core::io::{
    deserialize_chart, deserialize_charts, export_mesh, serialize_chart, serialize_charts, write_atomic, MeshGrid,
    MeshMode, Precision, Report, RunConfig,
};
use slag_core::{ArcSpec, Chart, Error, Frame, TwoFloat};

fn random_chart(seed: u64) -> Chart {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 2 + (seed % 4) as usize;
    let order = 1 + (seed % 5) as usize;
    let na = NormalizedArc {
        n,
        f0: common::random_f0(&mut rng, 2 * order + 3, 0.8),
        frame: Frame { a: Complex64::new(seed as f64 * 1e-3, -1.0 / 3.0), theta: 0.1 },
        s0: 2.5,
        speed: 1.0,
    };
    Chart::from_normalized::<TwoFloat>(&na, (seed as usize) % n, order).unwrap()
}

#[test]
fn schema_and_version_are_checked() {
    let mut v = serialize_chart(&random_chart(1));
    v["schema"] = "something-else".into();
    assert!(matches!(deserialize_chart(&v.to_string()), Err(Error::Schema(_))));
    let mut v = serialize_chart(&random_chart(1));
    v["version"] = 2.into();
    assert!(matches!(deserialize_chart(&v.to_string()), Err(Error::Version { found: 2, expected: 1 })));
    let mut v = serialize_chart(&random_chart(1));
    v["terms"][0][0] = "zero".into();
    assert!(matches!(deserialize_chart(&v.to_string()), Err(Error::Schema(_))));
    let mut v = serialize_chart(&random_chart(1));
    v["K"] = 9.into();
    assert!(matches!(deserialize_chart(&v.to_string()), Err(Error::Schema(_))));
}

#[test]
fn chart_lists() {
    let charts: Vec<Chart> = (0..4).map(random_chart).collect();
    assert_eq!(deserialize_charts(&serialize_charts(&charts)).unwrap(), charts);
    let single = serialize_chart(&charts[2]).to_string();
    assert_eq!(deserialize_charts(&single).unwrap(), vec![charts[2].clone()]);
}

#[test]
fn atomic_write_replaces_contents() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.txt");
    write_atomic(&path, b"first").unwrap();
    write_atomic(&path, b"second").unwrap();
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "second");
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn config_validation() {
    assert!(RunConfig { n: 1, ..RunConfig::default() }.validate().is_err());
    assert!(RunConfig { branch: 2, ..RunConfig::default() }.validate().is_err());
    assert!(RunConfig { sigma_max: -1.0, ..RunConfig::default() }.validate().is_err());
    assert!(RunConfig { tolerance: Some(f64::NAN), ..RunConfig::default() }.validate().is_err());
    assert_eq!(RunConfig { tolerance: Some(1e-3), ..RunConfig::default() }.tol(1.0), 1e-3);
    assert_eq!(Precision::parse("double").unwrap(), Precision::Double);
}

#[test]
fn report_checks() {
    let mut r = Report::new("demo", &RunConfig::default());
    assert!(r.bound("small", 1e-12, 1e-10));
    assert!(r.passed());
    assert!(!r.bound("large", 1.0, 1e-10));
    assert!(!r.passed());
    let back: Report = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(back, r);
    assert_eq!(back.checks[0].value, "1e-12");
}

/// Two branches of a circle chart share their `sigma = 0` vertices.
#[test]
fn two_branch_meshes_meet_on_the_arc() {
    let c0 = Chart::build::<f64>(&ArcSpec::unit_circle(16), 0.0, 2, 0, 6).unwrap();
    let c1 = Chart { branch: 1, ..c0.clone() };
    let dir = tempfile::tempdir().unwrap();
    let grid = MeshGrid { nt: 5, nsigma: 3, ..MeshGrid::default() };
    let path = dir.path().join("pair.obj");
    assert_eq!(export_mesh(&[c0, c1], MeshMode::Reduced, &grid, &path).unwrap(), 30);
    let text = std::fs::read_to_string(&path).unwrap();
    let verts: Vec<&str> = text.lines().filter(|l| l.starts_with("v ")).collect();
    for i in 0..grid.nt {
        assert_eq!(verts[i * grid.nsigma], verts[15 + i * grid.nsigma]);
        assert_ne!(verts[i * grid.nsigma + 2], verts[15 + i * grid.nsigma + 2]);
        let xyzw: Vec<f64> = verts[i * grid.nsigma][2..].split(' ').map(|s| s.parse().unwrap()).collect();
        assert!((xyzw[0].hypot(xyzw[1]) - 1.0).abs() < 1e-12);
    }
    let faces = text.lines().filter(|l| l.starts_with("f ")).count();
    assert_eq!(faces, 2 * (grid.nt - 1) * (grid.nsigma - 1));
}

#[test]
fn flat_reduced_mesh_is_planar() {
    let c = Chart::flat(3, 0, 3, 8).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("flat.obj");
    export_mesh(&[c], MeshMode::Reduced, &MeshGrid::default(), &path).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    for l in text.lines().filter(|l| l.starts_with("v ")) {
        let c: Vec<f64> = l[2..].split(' ').map(|s| s.parse().unwrap()).collect();
        assert_eq!((c[1], c[3]), (0.0, 0.0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn serialization_is_lossless(seed in any::<u64>()) {
        let c = random_chart(seed);
        let text = serialize_chart(&c).to_string();
        let back = deserialize_chart(&text).unwrap();
        prop_assert_eq!(&back, &c);
        prop_assert_eq!(serialize_chart(&back).to_string(), text);
    }
}
