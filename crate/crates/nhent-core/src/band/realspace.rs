use alloc::vec::Vec;

use super::params::ModelParams;
use crate::numerics::{eig, ComplexMatrix};
use crate::{Error, Result, C64};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Boundary {
    Pbc,
    Apbc,
    Obc,
}

/// Real-space chain, basis (cell 0 A, cell 0 B, cell 1 A, ...).
#[derive(Debug, Clone, PartialEq)]
pub struct RealSpaceHamiltonian {
    pub cells: usize,
    pub boundary: Boundary,
    pub matrix: ComplexMatrix,
}

/// Intra-cell A–B hopping v, inter-cell B_x–A_{x+1} hopping w, staggered ±u.
/// The Fourier convention c_x = L^{-1/2} Σ_k e^{ikx} c_k reproduces `ModelParams::bloch`.
pub fn real_space_hamiltonian(
    p: &ModelParams,
    cells: usize,
    boundary: Boundary,
) -> Result<RealSpaceHamiltonian> {
    if cells < 2 {
        return Err(Error::InvalidInput(
            "real-space chain needs at least 2 cells",
        ));
    }
    let n = 2 * cells;
    let mut h = ComplexMatrix::zeros(n, n);
    for x in 0..cells {
        let (a, b) = (2 * x, 2 * x + 1);
        h[(a, a)] = p.u;
        h[(b, b)] = -p.u;
        h[(a, b)] = p.v1;
        h[(b, a)] = p.v2;
        let wrap = x + 1 == cells;
        let sign = match (wrap, boundary) {
            (false, _) => 1.0,
            (true, Boundary::Pbc) => 1.0,
            (true, Boundary::Apbc) => -1.0,
            (true, Boundary::Obc) => continue,
        };
        let a_next = 2 * ((x + 1) % cells);
        h[(a_next, b)] += p.w1 * sign;
        h[(b, a_next)] += p.w2 * sign;
    }
    Ok(RealSpaceHamiltonian {
        cells,
        boundary,
        matrix: h,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeMode {
    pub energy: C64,
    pub ipr: f64,
    /// Participation number 1/IPR, in sites.
    pub localization_length: f64,
}

/// OBC eigenmodes that are localized (IPR above `4/L`) with energy within `1e-4` of ±u.
pub fn obc_edge_modes(p: &ModelParams, cells: usize) -> Result<Vec<EdgeMode>> {
    obc_edge_modes_with(p, cells, 4.0 / cells as f64, 1e-4)
}

pub fn obc_edge_modes_with(
    p: &ModelParams,
    cells: usize,
    ipr_min: f64,
    energy_tol: f64,
) -> Result<Vec<EdgeMode>> {
    if cells < 8 {
        return Err(Error::InvalidInput(
            "edge-mode detection needs at least 8 cells",
        ));
    }
    let h = real_space_hamiltonian(p, cells, Boundary::Obc)?;
    let d = eig(&h.matrix)?;
    let v = d.right_vectors.as_ref().expect("vectors requested");
    let mut out = Vec::new();
    for (j, &e) in d.values.iter().enumerate() {
        if (e - p.u).norm() >= energy_tol && (e + p.u).norm() >= energy_tol {
            continue;
        }
        let col = v.column(j);
        let n2: f64 = col.iter().map(|z| z.norm_sqr()).sum();
        let n4: f64 = col.iter().map(|z| z.norm_sqr() * z.norm_sqr()).sum();
        let ipr = n4 / (n2 * n2);
        if ipr > ipr_min {
            out.push(EdgeMode {
                energy: e,
                ipr,
                localization_length: 1.0 / ipr,
            });
        }
    }
    Ok(out)
}
