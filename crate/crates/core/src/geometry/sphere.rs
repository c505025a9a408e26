//! Deterministic samples on `S^{n-1}`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

/// The `n` coordinate axes followed by `extra` seeded random directions.
pub fn sphere_samples(n: usize, extra: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let mut e = vec![0.0; n];
            e[i] = 1.0;
            e
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while out.len() < n + extra {
        let v: Vec<f64> = (0..n).map(|_| StandardNormal.sample(&mut rng)).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-3 {
            out.push(v.into_iter().map(|x| x / norm).collect());
        }
    }
    out
}

/// Orthonormal basis `(e_1, ..., e_{n-1})` of `u^perp`, oriented so that
/// `det[u, e_1, ..., e_{n-1}] = +1`.
pub fn tangent_basis(u: &[f64]) -> Vec<Vec<f64>> {
    let n = u.len();
    let mut basis: Vec<Vec<f64>> = vec![u.to_vec()];
    for i in 0..n {
        if basis.len() == n {
            break;
        }
        let mut v = vec![0.0; n];
        v[i] = 1.0;
        for b in &basis {
            let d: f64 = v.iter().zip(b).map(|(x, y)| x * y).sum();
            v.iter_mut().zip(b).for_each(|(x, y)| *x -= d * y);
        }
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-8 {
            basis.push(v.into_iter().map(|x| x / norm).collect());
        }
    }
    let m = nalgebra::DMatrix::from_fn(n, n, |r, c| basis[c][r]);
    if m.determinant() < 0.0 {
        basis[n - 1].iter_mut().for_each(|x| *x = -*x);
    }
    basis.remove(0);
    basis
}

/// `u(s) = normalize(u0 + sum s_i e_i)`: a chart of `S^{m-1}` around `u0`.
pub fn sphere_chart(u0: &[f64], basis: &[Vec<f64>], s: &[f64]) -> Vec<f64> {
    let mut u = u0.to_vec();
    for (si, e) in s.iter().zip(basis) {
        u.iter_mut().zip(e).for_each(|(a, b)| *a += si * b);
    }
    let norm = u.iter().map(|x| x * x).sum::<f64>().sqrt();
    u.into_iter().map(|x| x / norm).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_unit_and_reproducible() {
        let a = sphere_samples(4, 10, 7);
        assert_eq!(a, sphere_samples(4, 10, 7));
        assert_eq!(a.len(), 14);
        for v in &a {
            let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            assert!((norm - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn tangent_basis_is_oriented() {
        let u = [0.48, 0.6, 0.64];
        let b = tangent_basis(&u);
        let m = nalgebra::Matrix3::from_columns(&[
            nalgebra::Vector3::from_column_slice(&u),
            nalgebra::Vector3::from_column_slice(&b[0]),
            nalgebra::Vector3::from_column_slice(&b[1]),
        ]);
        assert!((m.determinant() - 1.0).abs() < 1e-14);
    }
}
