mod common;

use std::f64::consts::PI;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use slag_core::engine::{
    atlas_centers, compute_f1, compute_r, estimate_radius, extend_series, gt_hypotheses_check, overlap_agreement,
    reduced_pde_residual, sigma_residual_coefficient, GtOptions, ResidualGrid, DEFAULT_TAU,
};
use slag_core::geometry::sheet_distance;
use slag_core::{build_atlas, chart_point, ArcSpec, Chart, Error, TaylorPoly, TwoFloat};

use common::{parabola_f0, random_f0};

#[test]
fn f1_and_r_for_the_parabola() {
    let f0 = parabola_f0(20);
    let f1 = compute_f1(&f0, 2).unwrap();
    let r = compute_r(&f0, &f1.clone(), 2).unwrap();
    let t: f64 = 0.3;
    let s = (1.0 + t * t).sqrt();
    // -tan(arctan(t)/2) and 1/(cos^2(arctan(t)/2) cos(arctan t)).
    assert!((f1.eval(t) - (1.0 - s) / t).abs() < 1e-12);
    assert!((r.eval(t) - 2.0 * (1.0 + t * t) / (1.0 + s)).abs() < 1e-12);
    assert!((r.eval(t) - 1.066_520).abs() < 1e-6);
}

#[test]
fn extension_preconditions() {
    let f0 = parabola_f0(10);
    assert!(matches!(extend_series(&f0, 2, 6), Err(Error::Truncation(_))));
    assert!(matches!(extend_series(&f0, 1, 2), Err(Error::InvalidArgument(_))));
    let mut tilted = f0.clone();
    tilted.coeffs_mut()[2] = 0.1;
    assert!(matches!(extend_series(&tilted, 2, 2), Err(Error::Normalization(_))));
}

#[test]
fn gt_triple_is_n_dependent() {
    for n in 2..=6 {
        let g = gt_hypotheses_check(&parabola_f0(16), n, &GtOptions::default()).unwrap();
        let expected = [1.0, (n + 3) as f64, (2 * n) as f64];
        for (a, b) in g.triple.iter().zip(expected) {
            assert!((a - b).abs() < 1e-7, "n = {n}: {:?}", g.triple);
        }
        assert!(g.pass.iter().all(|&p| p));
    }
}

#[test]
fn radius_estimates() {
    let arc = ArcSpec::unit_circle(24);
    let c = Chart::build::<TwoFloat>(&arc, 0.0, 2, 0, 8).unwrap();
    assert!(c.radius.rho_t > 0.5 && c.radius.rho_t < 2.0, "{:?}", c.radius);
    assert!(c.radius.rho_sigma > 0.5 && c.radius.rho_sigma.is_finite());
    let flat = extend_series(&TaylorPoly::<f64>::zero(12), 3, 5).unwrap();
    assert!(estimate_radius(&flat, DEFAULT_TAU).rho_sigma.is_infinite());
}

#[test]
fn chart_points_lie_on_their_own_sheet() {
    let c = Chart::build::<f64>(&ArcSpec::unit_circle(20), 1.0, 3, 2, 8).unwrap();
    let u = [0.6, 0.0, 0.8];
    for (t, s) in [(0.0, 0.0), (0.1, 0.03), (-0.2, 0.05)] {
        let p = chart_point(&c, t, s, &u).unwrap();
        assert!(sheet_distance(&c, &p).unwrap() < 1e-14);
    }
    assert!(matches!(chart_point(&c, 50.0, 0.0, &u), Err(Error::OutsideDomain { .. })));
    assert!(matches!(chart_point(&c, 0.0, 0.0, &[1.0, 1.0, 0.0]), Err(Error::NonUnit(_))));
}

#[test]
fn atlas_of_the_circle() {
    let arc = ArcSpec::unit_circle(20);
    assert_eq!(atlas_centers(&arc, PI / 6.0).unwrap().len(), 12);
    let charts = build_atlas::<f64>(&arc, 2, 1, PI / 6.0, 8).unwrap();
    assert!(charts.iter().all(|c| c.branch == 1));
    assert!(matches!(build_atlas::<f64>(&arc, 3, 0, PI / 6.0, 8), Err(Error::Obstruction { shift: 2, n: 3 })));
    let far = Chart::build::<f64>(&arc, PI, 2, 0, 8).unwrap();
    assert!(matches!(overlap_agreement(&charts[0], &far, 0.05, 5), Err(Error::Disjoint)));
}

#[test]
fn open_atlas_covers_its_domain() {
    let arc = ArcSpec::graph(&[0.0, 0.0, 0.5], (-0.5, 0.5), 20).unwrap();
    let charts = build_atlas::<f64>(&arc, 3, 0, 0.25, 8).unwrap();
    assert_eq!(charts.len(), 5);
    for w in charts.windows(2) {
        assert!(overlap_agreement(&w[0], &w[1], 0.05, 5).unwrap() < 1e-8);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Every stage below the truncation order is solved.
    #[test]
    fn lower_sigma_coefficients_vanish(seed in any::<u64>(), n in 2usize..7, order in 2usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f0: TaylorPoly<TwoFloat> = random_f0(&mut rng, 2 * order + 4, 0.5).cast();
        let phi = extend_series(&f0, n, order).unwrap();
        for k in 0..order {
            let e = sigma_residual_coefficient(&phi, k).unwrap();
            prop_assert!(e.max_abs() < 1e-25, "k = {}: {:e}", k, e.max_abs());
        }
    }

    /// Double and double-double recursions agree to double accuracy.
    #[test]
    fn precisions_agree(seed in any::<u64>(), n in 2usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f0 = random_f0(&mut rng, 16, 0.5);
        let a = extend_series(&f0, n, 6).unwrap();
        let b = extend_series(&f0.cast::<TwoFloat>(), n, 6).unwrap().cast::<f64>();
        for k in 0..=6 {
            let scale = b.term(k).max_abs().max(1.0);
            prop_assert!((a.term(k) - b.term(k)).max_abs() <= 1e-9 * scale);
        }
    }

    /// The reduced residual decays with the truncation order.
    #[test]
    fn reduced_residual_is_small(seed in any::<u64>(), n in 2usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f0: TaylorPoly<TwoFloat> = random_f0(&mut rng, 20, 0.5).cast();
        let phi = extend_series(&f0, n, 8).unwrap();
        let r = reduced_pde_residual(&phi, &ResidualGrid::square(0.05, 7)).unwrap();
        prop_assert!(r < 1e-16, "{:e}", r);
    }
}
