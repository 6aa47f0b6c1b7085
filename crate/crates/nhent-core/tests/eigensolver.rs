mod common;

use common::*;
use nhent_core::numerics::{det, eig, eigenvalues, inverse, ComplexMatrix};
use nhent_core::{c64, C64};
use proptest::prelude::*;

#[test]
fn small_random_matches_characteristic_polynomial() {
    let mut r = rng(7);
    for n in 1..=6 {
        for _ in 0..5 {
            let a = random_matrix(&mut r, n);
            let qr = eigenvalues(&a).unwrap();
            let roots = poly_roots(&charpoly_leibniz(&a));
            let d = multiset_distance(&qr, &roots);
            assert!(d < 1e-8, "n={n} distance {d}");
        }
    }
}

#[test]
fn trace_identity_up_to_200() {
    let mut r = rng(11);
    for &n in &[10usize, 50, 120, 200] {
        let a = random_matrix(&mut r, n);
        let vals = eigenvalues(&a).unwrap();
        let sum: C64 = vals.iter().sum();
        let tol = n as f64 * 1e-10 * a.norm_fro();
        assert!((sum - a.trace()).norm() < tol, "n={n}");
    }
}

#[test]
fn eigenvector_residuals() {
    let mut r = rng(3);
    for &n in &[5usize, 30, 80] {
        let a = random_matrix(&mut r, n);
        let d = eig(&a).unwrap();
        let v = d.right_vectors.as_ref().unwrap();
        for (k, &lam) in d.values.iter().enumerate() {
            let col = v.column(k);
            let av = a.mul_vec(&col);
            let res: f64 = av
                .iter()
                .zip(&col)
                .map(|(x, y)| (x - lam * y).norm_sqr())
                .sum::<f64>()
                .sqrt();
            assert!(res < 1e-10 * a.norm_fro(), "n={n} k={k} res={res}");
        }
    }
}

#[test]
fn hermitian_matches_jacobi() {
    let mut r = rng(5);
    for &n in &[2usize, 6, 15] {
        let a = random_hermitian(&mut r, n);
        let vals = eigenvalues(&a).unwrap();
        let jac = jacobi_hermitian(&a);
        for (v, j) in vals.iter().zip(&jac) {
            assert!(v.im.abs() < 1e-10);
            assert!((v.re - j).abs() < 1e-9, "{v} vs {j}");
        }
    }
}

#[test]
fn product_of_eigenvalues_is_determinant() {
    let mut r = rng(9);
    for &n in &[3usize, 12, 30, 50] {
        let a = random_matrix(&mut r, n);
        let prod: C64 = eigenvalues(&a).unwrap().iter().product();
        let d = det(&a).unwrap();
        assert!((prod - d).norm() < 1e-7 * d.norm(), "n={n}");
    }
}

#[test]
fn nilpotent_and_defective_blocks() {
    let j = ComplexMatrix::from_row_major(
        2,
        2,
        vec![c64(0., 0.), c64(1., 0.), c64(0., 0.), c64(0., 0.)],
    );
    let d = eig(&j).unwrap();
    assert!(d.converged && d.values.iter().all(|v| v.norm() < 1e-14));
    // 4×4 Jordan block at 2 + i: eigenvalues perturbed at most ~ eps^(1/4)
    let lam = c64(2.0, 1.0);
    let j4 = ComplexMatrix::from_fn(4, 4, |i, k| {
        if i == k {
            lam
        } else if k == i + 1 {
            c64(1.0, 0.0)
        } else {
            c64(0.0, 0.0)
        }
    });
    let d = eig(&j4).unwrap();
    assert!(d.values.iter().all(|v| (v - lam).norm() < 1e-3));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn similarity_invariance(seed in any::<u64>(), n in 2usize..=20) {
        let mut r = rng(seed);
        let a = random_matrix(&mut r, n);
        let p = random_matrix(&mut r, n).add(&ComplexMatrix::identity(n).scale(c64(2.0, 0.0)));
        let b = inverse(&p).unwrap().matmul(&a).matmul(&p);
        let ea = eigenvalues(&a).unwrap();
        let eb = eigenvalues(&b).unwrap();
        prop_assert!(multiset_distance(&ea, &eb) < 1e-7);
    }

    #[test]
    fn values_sorted_deterministically(seed in any::<u64>(), n in 1usize..=12) {
        let mut r = rng(seed);
        let a = random_matrix(&mut r, n);
        let v1 = eigenvalues(&a).unwrap();
        let v2 = eigenvalues(&a).unwrap();
        prop_assert_eq!(&v1, &v2);
        for w in v1.windows(2) {
            prop_assert!(w[0].re < w[1].re || (w[0].re == w[1].re && w[0].im <= w[1].im));
        }
    }
}
