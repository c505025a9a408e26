use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use proptest::prelude::*;
use slag_core::geometry::{
    c_map_pullback, compose_motions, eta_covectors, frame_residual, group_motion, group_motion_inverse, in_coframe_span,
    j0_coframe, lambda_star, lines_planes, momentum_so_n, phi_map, slag_residual, sphere_samples, tangent_basis,
    AmbientPoint, FdScheme,
};
use slag_core::{Error, PlaneP};

fn cplx() -> impl Strategy<Value = Complex64> {
    (-2.0..2.0_f64, -2.0..2.0_f64).prop_map(|(a, b)| Complex64::new(a, b))
}

fn point(n: usize) -> impl Strategy<Value = AmbientPoint> {
    prop::collection::vec(cplx(), n + 1).prop_map(AmbientPoint::new)
}

fn unit(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-1.0..1.0_f64, n)
        .prop_filter("nonzero", |v| v.iter().map(|x| x * x).sum::<f64>() > 1e-2)
        .prop_map(|v| {
            let r = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            v.into_iter().map(|x| x / r).collect()
        })
}

#[test]
fn singular_and_invalid_inputs() {
    let w = Complex64::new(0.1, 0.2);
    assert!(matches!(j0_coframe(w, Complex64::new(0.0, 0.0), 3), Err(Error::SingularLocus)));
    assert!(matches!(eta_covectors(w, Complex64::new(0.0, 0.0), 3), Err(Error::SingularLocus)));
    assert!(matches!(phi_map(w, w, &[0.5, 0.5]), Err(Error::NonUnit(_))));
    let complex_line = vec![vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)], vec![Complex64::new(0.0, 1.0), Complex64::new(0.0, 0.0)]];
    assert!(matches!(frame_residual(&complex_line), Err(Error::Degenerate)));
}

#[test]
fn tangent_basis_is_oriented() {
    for u in sphere_samples(4, 6, 9) {
        let mut cols = vec![u.clone()];
        cols.extend(tangent_basis(&u));
        let m = nalgebra::DMatrix::from_fn(4, 4, |r, c| cols[c][r]);
        assert!((m.determinant() - 1.0).abs() < 1e-12);
        assert!(((m.transpose() * &m) - nalgebra::DMatrix::identity(4, 4)).amax() < 1e-12);
    }
}

#[test]
fn every_line_meets_n_planes() {
    for n in 2..=7 {
        for gamma in [0.0, 0.3, PI / 2.0, 2.9] {
            let psis = lines_planes(gamma, n);
            assert_eq!(psis.len(), n, "n = {n}, gamma = {gamma}");
            let mut line = vec![Complex64::new(0.0, 0.0); n + 1];
            line[0] = Complex64::from_polar(1.0, gamma);
            for psi in psis {
                assert!(PlaneP::new(psi, n).contains(&line, 1e-12));
            }
        }
    }
}

proptest! {
    #[test]
    fn motion_inverse(p in point(3), a in cplx(), theta in 0.0..TAU) {
        let back = group_motion_inverse(&group_motion(&p, a, theta, 3), a, theta, 3);
        prop_assert!(back.distance(&p) < 1e-13);
    }

    #[test]
    fn motions_compose(p in point(4), a in cplx(), b in cplx(), theta in 0.0..TAU, rho in 0.0..TAU) {
        let (c, sum) = compose_motions(a, theta, b, rho, 4);
        let two = group_motion(&group_motion(&p, b, rho, 4), a, theta, 4);
        prop_assert!(two.distance(&group_motion(&p, c, sum, 4)) < 1e-12);
    }

    #[test]
    fn lambda_has_order_2n(p in point(3), j in -20i64..20) {
        prop_assert_eq!(lambda_star(&p, j + 6, 3), lambda_star(&p, j, 3));
    }

    #[test]
    fn invariant_points_have_zero_momentum(w in cplx(), zeta in cplx(), u in unit(4)) {
        let p = phi_map(w, zeta, &u).unwrap();
        prop_assert!(momentum_so_n(&p).amax() < 1e-15);
        let q = group_motion(&lambda_star(&p, 3, 4), w, 0.7, 4);
        prop_assert!(momentum_so_n(&q).amax() < 1e-15);
    }

    #[test]
    fn planes_are_special_lagrangian(psi in 0.0..PI, n in 2usize..7, x in prop::collection::vec(-3.0..3.0_f64, 7)) {
        let plane = PlaneP::new(psi, n);
        prop_assert!(plane.contains(&plane.point(&x[..=n]), 1e-14));
        let r = frame_residual(&plane.basis).unwrap();
        prop_assert!(r.omega_res < 1e-15 && r.upsilon_res < 1e-14);
        let p = plane.projector();
        prop_assert!((&p * &p - &p).amax() < 1e-14);
    }

    /// A rigid motion leaves the residual fields of a parametrization unchanged.
    #[test]
    fn residuals_are_motion_invariant(psi in 0.0..PI, a in cplx(), theta in 0.0..TAU, x in prop::collection::vec(-1.0..1.0_f64, 4)) {
        let plane = PlaneP::new(psi, 3);
        // A curved graph over the plane: add a quadratic normal displacement.
        let param = |y: &[f64]| {
            let mut z = plane.point(y);
            z[1] += Complex64::new(0.0, 0.1) * y[0] * y[1];
            Ok(AmbientPoint::new(z))
        };
        let moved = |y: &[f64]| param(y).map(|p| group_motion(&p, a, theta, 3));
        let fd = FdScheme { h: 1e-3, richardson: true };
        let r0 = slag_residual(&param, &x, fd).unwrap();
        let r1 = slag_residual(&moved, &x, fd).unwrap();
        prop_assert!((r0.omega_res - r1.omega_res).abs() < 1e-12);
        prop_assert!((r0.upsilon_res - r1.upsilon_res).abs() < 1e-12);
        prop_assert!((r0.phase - r1.phase).abs() < 1e-12);
    }

    #[test]
    fn coframe_spans_itself(w in cplx(), zeta in cplx(), n in 2usize..7) {
        prop_assume!(zeta.norm() > 0.1);
        let (o1, o2) = j0_coframe(w, zeta, n).unwrap();
        prop_assert!(in_coframe_span(&o1, zeta, n).unwrap() < 1e-14);
        prop_assert!(in_coframe_span(&o2, zeta, n).unwrap() < 1e-14);
        let conj: [Complex64; 4] = o2.map(|z| z.conj());
        let (c1, _) = c_map_pullback(w, zeta, n).unwrap();
        prop_assert!(c1.iter().zip(&conj).all(|(a, b)| (a - b).norm() < 1e-12));
    }
}
