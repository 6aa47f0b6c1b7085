//! Dense eigensolver for general complex matrices.
//!
//! Balancing, Householder reduction to upper Hessenberg form, then implicit
//! single-shift complex QR (Wilkinson shifts, exceptional shifts every tenth
//! sweep). Right eigenvectors come from back substitution on the Schur factor.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::Zero;

use super::matrix::ComplexMatrix;
use crate::{Error, Result, C64};

#[derive(Debug, Clone, Copy)]
pub struct EigOptions {
    /// Relative deflation threshold for subdiagonal entries.
    pub tol: f64,
    /// Total QR sweep budget; `None` means `30 n`.
    pub max_iter: Option<usize>,
    pub vectors: bool,
    pub balance: bool,
}

impl Default for EigOptions {
    fn default() -> Self {
        Self {
            tol: f64::EPSILON,
            max_iter: None,
            vectors: false,
            balance: true,
        }
    }
}

impl EigOptions {
    pub fn with_vectors() -> Self {
        Self {
            vectors: true,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    /// Sorted by real part, then imaginary part.
    pub values: Vec<C64>,
    /// Unit-norm right eigenvectors as columns, in the order of `values`.
    pub right_vectors: Option<ComplexMatrix>,
    pub converged: bool,
    pub iterations: usize,
}

/// Deterministic eigenvalue ordering: real part, then imaginary part.
pub fn eig_order(a: &C64, b: &C64) -> Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}

/// Eigenvalues only, default options.
pub fn eigenvalues(a: &ComplexMatrix) -> Result<Vec<C64>> {
    Ok(eig_general(a, &EigOptions::default())?.values)
}

/// Eigenvalues and right eigenvectors, default options.
pub fn eig(a: &ComplexMatrix) -> Result<EigenDecomposition> {
    eig_general(a, &EigOptions::with_vectors())
}

pub fn eig_general(a: &ComplexMatrix, opts: &EigOptions) -> Result<EigenDecomposition> {
    if !a.is_square() || a.rows() == 0 {
        return Err(Error::InvalidInput(
            "eig_general needs a non-empty square matrix",
        ));
    }
    if !(opts.tol > 0.0) {
        return Err(Error::InvalidInput("eig_general needs tol > 0"));
    }
    let n = a.rows();
    if a.as_slice()
        .iter()
        .any(|z| !z.re.is_finite() || !z.im.is_finite())
    {
        return Err(Error::InvalidInput("matrix has non-finite entries"));
    }
    let mut h: Vec<C64> = a.as_slice().to_vec();
    let scale = if opts.balance {
        balance(&mut h, n)
    } else {
        vec![1.0; n]
    };
    let mut z = if opts.vectors {
        Some(identity(n))
    } else {
        None
    };
    hessenberg(&mut h, n, z.as_mut());
    let budget = opts.max_iter.unwrap_or(30 * n);
    let iterations = schur(&mut h, n, z.as_mut(), opts.tol, budget)?;

    let mut values: Vec<C64> = (0..n).map(|i| h[i * n + i]).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig_order(&values[i], &values[j]));
    values = order.iter().map(|&i| values[i]).collect();

    let right_vectors = z.map(|z| {
        let x = triangular_vectors(&h, n);
        let mut v = ComplexMatrix::zeros(n, n);
        for (col, &k) in order.iter().enumerate() {
            let mut w = vec![C64::zero(); n];
            for (i, wi) in w.iter_mut().enumerate() {
                let mut s = C64::zero();
                for m in 0..=k {
                    s += z[i * n + m] * x[m * n + k];
                }
                *wi = s * scale[i];
            }
            let nrm = libm::sqrt(w.iter().map(|q| q.norm_sqr()).sum::<f64>());
            for (i, wi) in w.iter().enumerate() {
                v[(i, col)] = if nrm > 0.0 { wi / nrm } else { *wi };
            }
        }
        v
    });

    Ok(EigenDecomposition {
        values,
        right_vectors,
        converged: true,
        iterations,
    })
}

fn identity(n: usize) -> Vec<C64> {
    let mut z = vec![C64::zero(); n * n];
    for i in 0..n {
        z[i * n + i] = C64::new(1.0, 0.0);
    }
    z
}

#[inline]
fn l1(z: C64) -> f64 {
    z.re.abs() + z.im.abs()
}

/// Diagonal similarity scaling by powers of two; returns the scale vector d
/// with balanced = D⁻¹ A D.
fn balance(h: &mut [C64], n: usize) -> Vec<f64> {
    let mut d = vec![1.0; n];
    for _sweep in 0..100 {
        let mut done = true;
        for i in 0..n {
            let mut c = 0.0;
            let mut r = 0.0;
            for j in 0..n {
                if j != i {
                    c += l1(h[j * n + i]);
                    r += l1(h[i * n + j]);
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            let mut g = r / 2.0;
            while c < g && f < 1e150 {
                f *= 2.0;
                c *= 4.0;
            }
            g = r * 2.0;
            while c >= g && f > 1e-150 {
                f /= 2.0;
                c /= 4.0;
            }
            if (c + r) / f < 0.95 * s {
                done = false;
                d[i] *= f;
                for j in 0..n {
                    h[i * n + j] /= f;
                    h[j * n + i] *= f;
                }
            }
        }
        if done {
            break;
        }
    }
    d
}

/// In-place Householder reduction; accumulates the transform into `q`.
fn hessenberg(h: &mut [C64], n: usize, mut q: Option<&mut Vec<C64>>) {
    let mut v = vec![C64::zero(); n];
    for k in 0..n.saturating_sub(2) {
        let xnorm = libm::sqrt((k + 1..n).map(|i| h[i * n + k].norm_sqr()).sum::<f64>());
        let tail = libm::sqrt((k + 2..n).map(|i| h[i * n + k].norm_sqr()).sum::<f64>());
        if xnorm == 0.0 || tail == 0.0 {
            continue;
        }
        let x0 = h[(k + 1) * n + k];
        let phase = if x0.norm() > 0.0 {
            x0 / x0.norm()
        } else {
            C64::new(1.0, 0.0)
        };
        let alpha = -phase * xnorm;
        for i in k + 1..n {
            v[i] = h[i * n + k];
        }
        v[k + 1] -= alpha;
        let vn2: f64 = (k + 1..n).map(|i| v[i].norm_sqr()).sum();
        if vn2 == 0.0 {
            continue;
        }
        let beta = 2.0 / vn2;
        for j in k..n {
            let mut s = C64::zero();
            for i in k + 1..n {
                s += v[i].conj() * h[i * n + j];
            }
            s *= beta;
            for i in k + 1..n {
                h[i * n + j] -= v[i] * s;
            }
        }
        for i in 0..n {
            let mut s = C64::zero();
            for j in k + 1..n {
                s += h[i * n + j] * v[j];
            }
            s *= beta;
            for j in k + 1..n {
                h[i * n + j] -= s * v[j].conj();
            }
        }
        if let Some(q) = q.as_deref_mut() {
            for i in 0..n {
                let mut s = C64::zero();
                for j in k + 1..n {
                    s += q[i * n + j] * v[j];
                }
                s *= beta;
                for j in k + 1..n {
                    q[i * n + j] -= s * v[j].conj();
                }
            }
        }
        h[(k + 1) * n + k] = alpha;
        for i in k + 2..n {
            h[i * n + k] = C64::zero();
        }
    }
}

/// Rotation with [c s; -s̄ c]·[a; b] = [r; 0], c real.
#[inline]
fn givens(a: C64, b: C64) -> (f64, C64, C64) {
    let bn = b.norm();
    if bn == 0.0 {
        return (1.0, C64::zero(), a);
    }
    let an = a.norm();
    if an == 0.0 {
        return (0.0, b.conj() / bn, C64::new(bn, 0.0));
    }
    let nrm = libm::hypot(an, bn);
    let ph = a / an;
    (an / nrm, ph * b.conj() / nrm, ph * nrm)
}

/// Eigenvalue of [[a, b], [c, d]] closest to d.
fn wilkinson(a: C64, b: C64, c: C64, d: C64) -> C64 {
    let p = (a - d) * 0.5;
    let bc = b * c;
    let mut disc = (p * p + bc).sqrt();
    if (p.conj() * disc).re < 0.0 {
        disc = -disc;
    }
    let den = p + disc;
    if den.norm() == 0.0 {
        d
    } else {
        d - bc / den
    }
}

/// Reduces the Hessenberg matrix to triangular form. With `z`, applies the
/// rotations to full rows/columns so that `h` ends as the Schur factor.
fn schur(
    h: &mut [C64],
    n: usize,
    mut z: Option<&mut Vec<C64>>,
    tol: f64,
    budget: usize,
) -> Result<usize> {
    let full = z.is_some();
    let mut total = 0usize;
    let mut its = 0usize;
    let mut hi = n - 1;
    while hi > 0 {
        let mut l = hi;
        while l > 0 {
            let sub = h[l * n + l - 1].norm();
            let mut tst = h[(l - 1) * n + l - 1].norm() + h[l * n + l].norm();
            if tst == 0.0 {
                tst = (l..=hi)
                    .map(|i| h[i * n + i - 1].norm())
                    .fold(0.0, f64::max);
            }
            if sub <= tol * tst || sub < f64::MIN_POSITIVE {
                h[l * n + l - 1] = C64::zero();
                break;
            }
            l -= 1;
        }
        if l == hi {
            hi -= 1;
            its = 0;
            continue;
        }
        its += 1;
        total += 1;
        if total > budget {
            return Err(Error::NoConvergence { iterations: total });
        }
        let mu = if its % 10 == 0 {
            h[hi * n + hi] + C64::new(0.75 * h[hi * n + hi - 1].norm(), 0.0)
        } else {
            wilkinson(
                h[(hi - 1) * n + hi - 1],
                h[(hi - 1) * n + hi],
                h[hi * n + hi - 1],
                h[hi * n + hi],
            )
        };
        let col_end = if full { n - 1 } else { hi };
        let row_start = if full { 0 } else { l };
        for k in l..hi {
            let (x, y) = if k == l {
                (h[l * n + l] - mu, h[(l + 1) * n + l])
            } else {
                (h[k * n + k - 1], h[(k + 1) * n + k - 1])
            };
            let (c, s, r) = givens(x, y);
            if k > l {
                h[k * n + k - 1] = r;
                h[(k + 1) * n + k - 1] = C64::zero();
            }
            for j in k..=col_end {
                let a = h[k * n + j];
                let b = h[(k + 1) * n + j];
                h[k * n + j] = a * c + s * b;
                h[(k + 1) * n + j] = b * c - s.conj() * a;
            }
            let row_end = (k + 2).min(hi);
            for i in row_start..=row_end {
                let a = h[i * n + k];
                let b = h[i * n + k + 1];
                h[i * n + k] = a * c + b * s.conj();
                h[i * n + k + 1] = b * c - a * s;
            }
            if let Some(z) = z.as_deref_mut() {
                for i in 0..n {
                    let a = z[i * n + k];
                    let b = z[i * n + k + 1];
                    z[i * n + k] = a * c + b * s.conj();
                    z[i * n + k + 1] = b * c - a * s;
                }
            }
        }
    }
    Ok(total)
}

/// Eigenvectors of the upper-triangular factor, column k for eigenvalue t_kk.
/// Near-equal diagonal entries are perturbed to keep defective clusters finite.
fn triangular_vectors(t: &[C64], n: usize) -> Vec<C64> {
    let tnorm = (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .map(|(i, j)| t[i * n + j].norm())
        .fold(0.0, f64::max);
    let smin = (f64::EPSILON * tnorm).max(f64::MIN_POSITIVE * n as f64 / f64::EPSILON);
    let mut x = vec![C64::zero(); n * n];
    for k in 0..n {
        let lam = t[k * n + k];
        x[k * n + k] = C64::new(1.0, 0.0);
        for j in (0..k).rev() {
            let mut s = C64::zero();
            for m in j + 1..=k {
                s += t[j * n + m] * x[m * n + k];
            }
            let mut d = t[j * n + j] - lam;
            if d.norm() < smin {
                d = C64::new(smin, 0.0);
            }
            let xj = -s / d;
            x[j * n + k] = xj;
            let big = xj.norm();
            if big > 1e100 {
                for m in j..=k {
                    x[m * n + k] /= big;
                }
            }
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    fn residual(a: &ComplexMatrix, d: &EigenDecomposition) -> f64 {
        let v = d.right_vectors.as_ref().unwrap();
        let mut worst: f64 = 0.0;
        for (k, &lam) in d.values.iter().enumerate() {
            let col = v.column(k);
            let av = a.mul_vec(&col);
            let r: f64 = av
                .iter()
                .zip(&col)
                .map(|(x, y)| (x - lam * y).norm_sqr())
                .sum();
            worst = worst.max(libm::sqrt(r));
        }
        worst
    }

    #[test]
    fn pauli_x() {
        let a = ComplexMatrix::from_row_major(
            2,
            2,
            vec![c64(0., 0.), c64(1., 0.), c64(1., 0.), c64(0., 0.)],
        );
        let d = eig(&a).unwrap();
        assert!((d.values[0] - c64(-1.0, 0.0)).norm() < 1e-14);
        assert!((d.values[1] - c64(1.0, 0.0)).norm() < 1e-14);
        assert!(residual(&a, &d) < 1e-14);
    }

    #[test]
    fn jordan_block_is_accepted() {
        let a = ComplexMatrix::from_row_major(
            2,
            2,
            vec![c64(0., 0.), c64(1., 0.), c64(0., 0.), c64(0., 0.)],
        );
        let d = eig(&a).unwrap();
        assert!(d.converged);
        assert!(d.values.iter().all(|v| v.norm() < 1e-14));
    }

    #[test]
    fn triangular_input_keeps_diagonal() {
        let a = ComplexMatrix::from_fn(4, 4, |i, j| {
            if j >= i {
                c64((i + 1) as f64, (j as f64) * 0.5)
            } else {
                C64::zero()
            }
        });
        let d = eig(&a).unwrap();
        for (k, v) in d.values.iter().enumerate() {
            assert!((v - a[(k, k)]).norm() < 1e-12);
        }
        assert!(residual(&a, &d) < 1e-12);
    }

    #[test]
    fn companion_matrix_roots() {
        // x^3 - 6x^2 + 11x - 6 = (x-1)(x-2)(x-3)
        let a = ComplexMatrix::from_row_major(
            3,
            3,
            vec![
                c64(6., 0.),
                c64(-11., 0.),
                c64(6., 0.),
                c64(1., 0.),
                c64(0., 0.),
                c64(0., 0.),
                c64(0., 0.),
                c64(1., 0.),
                c64(0., 0.),
            ],
        );
        let d = eig(&a).unwrap();
        for (k, v) in d.values.iter().enumerate() {
            assert!((v - c64((k + 1) as f64, 0.0)).norm() < 1e-12, "{v}");
        }
        assert!(residual(&a, &d) < 1e-12);
    }

    #[test]
    fn badly_scaled_matrix() {
        let a = ComplexMatrix::from_row_major(
            2,
            2,
            vec![c64(1., 0.), c64(1e10, 0.), c64(1e-10, 0.), c64(2., 0.)],
        );
        let d = eig(&a).unwrap();
        let tr = d.values[0] + d.values[1];
        assert!((tr - c64(3.0, 0.0)).norm() < 1e-12);
        assert!(residual(&a, &d) < 1e-3);
    }

    #[test]
    fn zero_budget_fails() {
        let a = ComplexMatrix::from_fn(5, 5, |i, j| {
            c64((i * 3 + j) as f64 % 7.0, (i + 2 * j) as f64 % 3.0)
        });
        let e = eig_general(
            &a,
            &EigOptions {
                max_iter: Some(0),
                ..EigOptions::default()
            },
        );
        assert!(matches!(e, Err(Error::NoConvergence { .. })));
    }
}
