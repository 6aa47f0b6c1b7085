use alloc::vec;
use alloc::vec::Vec;

use crate::band::Boundary;
use crate::entanglement::{entropy_of_density_values, EntropyPolicy, EntropyValue};
use crate::numerics::{eig, eigenvalues, inner, vec_norm, ComplexMatrix};
use crate::scaling::EntropyProfile;
use crate::{Error, Result, C64};

/// Dense budget: 2^12 amplitudes.
pub const ED_MAX_SITES: usize = 12;

/// Unit-vector overlap |⟨L|R⟩| below which the ground state counts as coalesced.
/// Dense eigenvectors at a defective point are only accurate to about √ε, so the
/// floor sits well above that.
pub const ED_BINORM_FLOOR: f64 = 1e-6;

/// −Σ_j (h σ^z_j + J σ^x_j σ^x_{j+1} + iκ σ^x_j) on a ring of N sites.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct YangLeeParams {
    pub j: f64,
    pub h: f64,
    pub kappa: f64,
    pub sites: usize,
}

impl YangLeeParams {
    pub fn new(j: f64, h: f64, kappa: f64, sites: usize) -> Self {
        Self { j, h, kappa, sites }
    }

    fn check(&self) -> Result<()> {
        if self.sites == 0 {
            return Err(Error::InvalidInput(
                "Yang-Lee chain needs at least one site",
            ));
        }
        if self.sites > ED_MAX_SITES {
            return Err(Error::SizeBudgetExceeded {
                size: self.sites,
                max: ED_MAX_SITES,
            });
        }
        Ok(())
    }

    /// Nonzero H entries of column `s`: (row, value). Bit j set means σ^z_j = −1.
    fn column(&self, s: usize, out: &mut Vec<(usize, C64)>) {
        out.clear();
        let n = self.sites;
        let z: f64 = (0..n)
            .map(|j| if s >> j & 1 == 0 { 1.0 } else { -1.0 })
            .sum();
        out.push((s, C64::new(-self.h * z, 0.0)));
        for j in 0..n {
            out.push((s ^ 1 << j, C64::new(0.0, -self.kappa)));
            let t = s ^ 1 << j ^ 1 << ((j + 1) % n);
            out.push((t, C64::new(-self.j, 0.0)));
        }
    }
}

pub fn yang_lee_hamiltonian(p: &YangLeeParams) -> Result<ComplexMatrix> {
    p.check()?;
    let dim = 1usize << p.sites;
    let mut m = ComplexMatrix::zeros(dim, dim);
    let mut col = Vec::new();
    for s in 0..dim {
        p.column(s, &mut col);
        for &(r, v) in &col {
            m[(r, s)] += v;
        }
    }
    Ok(m)
}

/// Zero-momentum translation sector: orbit representatives and periods.
#[derive(Debug, Clone)]
pub struct YangLeeSector {
    pub params: YangLeeParams,
    pub reps: Vec<usize>,
    pub periods: Vec<usize>,
    rep_of: Vec<(u32, u32)>,
}

impl YangLeeSector {
    pub fn new(params: YangLeeParams) -> Result<Self> {
        params.check()?;
        let n = params.sites;
        let dim = 1usize << n;
        let mask = dim - 1;
        let rot = |s: usize| ((s << 1) | (s >> (n - 1))) & mask;
        let mut rep_of = vec![(u32::MAX, 0); dim];
        let (mut reps, mut periods) = (Vec::new(), Vec::new());
        for s in 0..dim {
            if rep_of[s].0 != u32::MAX {
                continue;
            }
            let mut orbit = vec![s];
            let mut t = rot(s);
            while t != s {
                orbit.push(t);
                t = rot(t);
            }
            let idx = reps.len() as u32;
            for &o in &orbit {
                rep_of[o] = (idx, orbit.len() as u32);
            }
            reps.push(s);
            periods.push(orbit.len());
        }
        Ok(Self {
            params,
            reps,
            periods,
            rep_of,
        })
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn hamiltonian(&self) -> ComplexMatrix {
        let d = self.dim();
        let mut m = ComplexMatrix::zeros(d, d);
        let mut col = Vec::new();
        for (c, &r) in self.reps.iter().enumerate() {
            self.params.column(r, &mut col);
            for &(s2, v) in &col {
                let (row, p2) = self.rep_of[s2];
                m[(row as usize, c)] += v * libm::sqrt(self.periods[c] as f64 / p2 as f64);
            }
        }
        m
    }

    /// Full-space amplitudes of a sector vector.
    pub fn expand(&self, v: &[C64]) -> Vec<C64> {
        self.rep_of
            .iter()
            .map(|&(i, p)| v[i as usize] / libm::sqrt(p as f64))
            .collect()
    }
}

/// Right/left ground pair with ⟨L|R⟩ = 1.
#[derive(Debug, Clone, PartialEq)]
pub struct BiorthogonalPair {
    pub energy: C64,
    pub right: Vec<C64>,
    pub left: Vec<C64>,
}

/// Minimal-Re eigenpair of `h`; a Re tie goes to the more negative Im.
pub fn biorthogonal_ground(h: &ComplexMatrix) -> Result<BiorthogonalPair> {
    let scale = h.max_abs().max(1.0);
    let d = eig(h)?;
    let tie = 1e-10 * scale;
    let e_min = d.values[0].re;
    let mut cands: Vec<usize> = (0..d.values.len())
        .filter(|&i| d.values[i].re - e_min <= tie)
        .collect();
    cands.sort_by(|&a, &b| d.values[a].im.total_cmp(&d.values[b].im));
    let vectors = d
        .right_vectors
        .as_ref()
        .ok_or(Error::NoConvergence { iterations: 0 })?;
    let i0 = cands[0];
    let right = vectors.column(i0);
    if cands.len() > 1 && (d.values[cands[1]].im - d.values[cands[0]].im).abs() <= tie {
        // a defective pair returns (nearly) parallel vectors; a genuine degeneracy does not
        let other = vectors.column(cands[1]);
        let cos = inner(&other, &right).norm() / (vec_norm(&other) * vec_norm(&right));
        if 1.0 - cos < ED_BINORM_FLOOR {
            return Err(Error::BinormVanishing {
                k: 0.0,
                binorm: 0.0,
                floor: ED_BINORM_FLOOR,
            });
        }
        return Err(Error::GroundDegenerate { re: e_min });
    }
    let energy = d.values[i0];
    let dl = eig(&h.adjoint())?;
    let target = energy.conj();
    let j = (0..dl.values.len())
        .min_by(|&a, &b| {
            (dl.values[a] - target)
                .norm()
                .total_cmp(&(dl.values[b] - target).norm())
        })
        .ok_or(Error::NoConvergence { iterations: 0 })?;
    let mut left = dl
        .right_vectors
        .as_ref()
        .map(|v| v.column(j))
        .ok_or(Error::NoConvergence { iterations: 0 })?;
    let ov = inner(&left, &right);
    let binorm = ov.norm() / (vec_norm(&left) * vec_norm(&right));
    if binorm < ED_BINORM_FLOOR {
        return Err(Error::BinormVanishing {
            k: 0.0,
            binorm,
            floor: ED_BINORM_FLOOR,
        });
    }
    let f = ov.conj().inv();
    left.iter_mut().for_each(|x| *x *= f);
    Ok(BiorthogonalPair {
        energy,
        right,
        left,
    })
}

/// ρ_A = Tr_B |R⟩⟨L| for A the first `l` sites.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedDensityMatrix {
    pub sites: usize,
    pub matrix: ComplexMatrix,
}

pub fn reduced_density(pair: &BiorthogonalPair, l: usize) -> Result<ReducedDensityMatrix> {
    let dim = pair.right.len();
    if !dim.is_power_of_two() || dim != pair.left.len() {
        return Err(Error::InvalidInput(
            "state vectors must span 2^N amplitudes",
        ));
    }
    let n = dim.trailing_zeros() as usize;
    if l == 0 || l >= n {
        return Err(Error::InvalidInput("subsystem must satisfy 1 <= l < N"));
    }
    let da = 1usize << l;
    let db = dim >> l;
    let mut rho = ComplexMatrix::zeros(da, da);
    for b in 0..db {
        let r = &pair.right[b * da..(b + 1) * da];
        let lb = &pair.left[b * da..(b + 1) * da];
        for a in 0..da {
            if r[a] == C64::new(0.0, 0.0) {
                continue;
            }
            for a2 in 0..da {
                rho[(a, a2)] += r[a] * lb[a2].conj();
            }
        }
    }
    Ok(ReducedDensityMatrix {
        sites: l,
        matrix: rho,
    })
}

pub fn ed_entropy(rho: &ReducedDensityMatrix, policy: EntropyPolicy) -> Result<EntropyValue> {
    Ok(entropy_of_density_values(
        &eigenvalues(&rho.matrix)?,
        policy,
    ))
}

/// Ground-state S(l) of the Yang–Lee ring from its zero-momentum sector, l = 1..N−1.
pub fn ed_entropy_profile(p: &YangLeeParams, policy: EntropyPolicy) -> Result<EntropyProfile> {
    let sector = YangLeeSector::new(*p)?;
    let g = biorthogonal_ground(&sector.hamiltonian())?;
    let pair = BiorthogonalPair {
        energy: g.energy,
        right: sector.expand(&g.right),
        left: sector.expand(&g.left),
    };
    let samples = (1..p.sites)
        .map(|l| Ok((l, ed_entropy(&reduced_density(&pair, l)?, policy)?.value)))
        .collect::<Result<Vec<_>>>()?;
    Ok(EntropyProfile {
        cells: p.sites,
        boundary: Boundary::Pbc,
        delta_kappa: 0.0,
        samples,
    })
}
