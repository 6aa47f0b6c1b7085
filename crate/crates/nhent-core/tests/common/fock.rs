//! Brute-force many-body oracle: quadratic Hamiltonians on the full Fock space.

use nhent_core::numerics::{eig, ComplexMatrix};
use nhent_core::{c64, C64};

/// Occupation-number states with exactly `n` particles among `modes`.
pub fn sector(modes: usize, n: usize) -> Vec<usize> {
    (0..1usize << modes)
        .filter(|s| s.count_ones() as usize == n)
        .collect()
}

/// c†_i c_j acting on a basis state: Some((sign, new state)) or None.
pub fn hop(state: usize, i: usize, j: usize) -> Option<(f64, usize)> {
    if state & (1 << j) == 0 {
        return None;
    }
    let below = |s: usize, m: usize| (s & ((1 << m) - 1)).count_ones();
    let mut sign = if below(state, j) % 2 == 0 { 1.0 } else { -1.0 };
    let s1 = state & !(1 << j);
    if s1 & (1 << i) != 0 {
        return None;
    }
    if below(s1, i) % 2 == 1 {
        sign = -sign;
    }
    Some((sign, s1 | (1 << i)))
}

/// Σ_ij h_ij c†_i c_j restricted to a particle-number sector.
pub fn many_body(h: &ComplexMatrix, basis: &[usize]) -> ComplexMatrix {
    let pos = |s: usize| basis.binary_search(&s).unwrap();
    let n = h.rows();
    let mut m = ComplexMatrix::zeros(basis.len(), basis.len());
    for (col, &s) in basis.iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                let t = h[(i, j)];
                if t.norm() == 0.0 {
                    continue;
                }
                if let Some((sg, s2)) = hop(s, i, j) {
                    m[(pos(s2), col)] += t * sg;
                }
            }
        }
    }
    m
}

/// Right and left (ket) eigenvectors of the minimal-Re eigenvalue, with ⟨L|R⟩ = 1.
pub fn biorthogonal_ground(m: &ComplexMatrix) -> (C64, Vec<C64>, Vec<C64>) {
    let d = eig(m).unwrap();
    let e0 = d.values[0];
    assert!(
        (d.values[1].re - e0.re).abs() > 1e-8,
        "degenerate many-body ground state"
    );
    let r = d.right_vectors.unwrap().column(0);
    let dl = eig(&m.adjoint()).unwrap();
    let j = (0..dl.values.len())
        .min_by(|&a, &b| {
            (dl.values[a] - e0.conj())
                .norm()
                .total_cmp(&(dl.values[b] - e0.conj()).norm())
        })
        .unwrap();
    let mut l = dl.right_vectors.unwrap().column(j);
    let ov: C64 = l.iter().zip(&r).map(|(a, b)| a.conj() * b).sum();
    for x in &mut l {
        *x /= ov.conj();
    }
    (e0, r, l)
}

/// ⟨L|c†_i c_j|R⟩ for all mode pairs.
pub fn correlation(modes: usize, basis: &[usize], r: &[C64], l: &[C64]) -> ComplexMatrix {
    let pos = |s: usize| basis.binary_search(&s).ok();
    ComplexMatrix::from_fn(modes, modes, |i, j| {
        let mut acc = c64(0.0, 0.0);
        for (col, &s) in basis.iter().enumerate() {
            if let Some((sg, s2)) = hop(s, i, j) {
                if let Some(row) = pos(s2) {
                    acc += l[row].conj() * r[col] * sg;
                }
            }
        }
        acc
    })
}

/// Tr_B |R⟩⟨L| with A the lowest `a_modes` modes.
pub fn reduced_density(a_modes: usize, basis: &[usize], r: &[C64], l: &[C64]) -> ComplexMatrix {
    let da = 1usize << a_modes;
    let mask = da - 1;
    let mut rho = ComplexMatrix::zeros(da, da);
    for (x, &s) in basis.iter().enumerate() {
        for (y, &t) in basis.iter().enumerate() {
            if s >> a_modes == t >> a_modes {
                rho[(s & mask, t & mask)] += r[x] * l[y].conj();
            }
        }
    }
    rho
}

/// −Σ λ ln λ; real eigenvalues use ln|λ|, complex ones the principal branch.
pub fn von_neumann(rho: &ComplexMatrix) -> C64 {
    let vals = nhent_core::numerics::eigenvalues(rho).unwrap();
    let mut s = c64(0.0, 0.0);
    for q in vals {
        let real = q.im.abs() <= 1e-6 * q.norm().max(1.0);
        let q = if real { c64(q.re, 0.0) } else { q };
        if q.norm() < 1e-14 {
            continue;
        }
        let lg = if real {
            c64(q.re.abs().ln(), 0.0)
        } else {
            q.ln()
        };
        s -= q * lg;
    }
    s
}

/// Entropy of the leading `l_a` cells of the `cells`-cell twisted ring from the full Fock space.
pub fn fock_entropy(h: &ComplexMatrix, cells: usize, l_a: usize) -> C64 {
    let basis = sector(2 * cells, cells);
    let (_, r, l) = biorthogonal_ground(&many_body(h, &basis));
    von_neumann(&reduced_density(2 * l_a, &basis, &r, &l))
}
