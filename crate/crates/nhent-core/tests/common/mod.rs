//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

pub mod fock;
pub mod models;

use nhent_core::numerics::ComplexMatrix;
use nhent_core::{c64, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, n, |_, _| {
        c64(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
    })
}

pub fn random_hermitian(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
    let a = random_matrix(rng, n);
    a.add(&a.adjoint()).scale(c64(0.5, 0.0))
}

/// Coefficients of det(zI − A), lowest degree first, by the Leibniz sum over
/// all permutations with polynomial entries.
pub fn charpoly_leibniz(a: &ComplexMatrix) -> Vec<C64> {
    let n = a.rows();
    let mut coeffs = vec![C64::new(0.0, 0.0); n + 1];
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut sign = 1.0;
    let mut add = |perm: &[usize], sign: f64| {
        let mut poly = vec![C64::new(sign, 0.0)];
        for (i, &j) in perm.iter().enumerate() {
            // entry (zδ_ij − a_ij)
            let mut next = vec![C64::new(0.0, 0.0); poly.len() + 1];
            for (d, p) in poly.iter().enumerate() {
                next[d] -= p * a[(i, j)];
                if i == j {
                    next[d + 1] += p;
                }
            }
            poly = next;
        }
        for (d, p) in poly.iter().enumerate() {
            coeffs[d] += p;
        }
    };
    add(&perm, sign);
    // Heap's algorithm
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            add(&perm, sign);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    coeffs
}

/// Durand–Kerner iteration for the roots of a monic-normalised polynomial.
pub fn poly_roots(coeffs: &[C64]) -> Vec<C64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let p: Vec<C64> = coeffs.iter().map(|c| c / lead).collect();
    let eval = |z: C64| {
        p.iter()
            .rev()
            .fold(C64::new(0.0, 0.0), |acc, c| acc * z + c)
    };
    let seed = C64::new(0.4, 0.9);
    let mut roots: Vec<C64> = (0..n).map(|k| seed.powu(k as u32)).collect();
    for _ in 0..2000 {
        let mut delta: f64 = 0.0;
        for k in 0..n {
            let mut den = C64::new(1.0, 0.0);
            for j in 0..n {
                if j != k {
                    den *= roots[k] - roots[j];
                }
            }
            let step = eval(roots[k]) / den;
            roots[k] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    roots
}

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations on its real
/// 2n×2n embedding [[Re, −Im], [Im, Re]]; each eigenvalue appears twice there.
pub fn jacobi_hermitian(a: &ComplexMatrix) -> Vec<f64> {
    let n = a.rows();
    let m = 2 * n;
    let mut s = vec![vec![0.0f64; m]; m];
    for i in 0..n {
        for j in 0..n {
            let z = a[(i, j)];
            s[i][j] = z.re;
            s[i + n][j + n] = z.re;
            s[i][j + n] = -z.im;
            s[i + n][j] = z.im;
        }
    }
    for _ in 0..100 {
        let off: f64 = (0..m)
            .flat_map(|i| (0..m).map(move |j| (i, j)))
            .filter(|(i, j)| i != j)
            .map(|(i, j)| s[i][j] * s[i][j])
            .sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..m {
            for q in p + 1..m {
                if s[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (s[q][q] - s[p][p]) / (2.0 * s[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let sn = t * c;
                for k in 0..m {
                    let skp = s[k][p];
                    let skq = s[k][q];
                    s[k][p] = c * skp - sn * skq;
                    s[k][q] = sn * skp + c * skq;
                }
                for k in 0..m {
                    let spk = s[p][k];
                    let sqk = s[q][k];
                    s[p][k] = c * spk - sn * sqk;
                    s[q][k] = sn * spk + c * sqk;
                }
            }
        }
    }
    let mut d: Vec<f64> = (0..m).map(|i| s[i][i]).collect();
    d.sort_by(f64::total_cmp);
    d.chunks(2).map(|w| 0.5 * (w[0] + w[1])).collect()
}

/// Greedy multiset distance: max over `a` of the distance to its matched
/// partner in `b`.
pub fn multiset_distance(a: &[C64], b: &[C64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let mut used = vec![false; b.len()];
    let mut worst: f64 = 0.0;
    for x in a {
        let (j, d) = b
            .iter()
            .enumerate()
            .filter(|(j, _)| !used[*j])
            .map(|(j, y)| (j, (x - y).norm()))
            .min_by(|p, q| p.1.total_cmp(&q.1))
            .unwrap();
        used[j] = true;
        worst = worst.max(d);
    }
    worst
}
