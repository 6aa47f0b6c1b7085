use alloc::vec::Vec;

use super::correlation::assemble;
use super::grid::grid;
use super::occupation::fills;
use crate::band::{traceless_eigenpair, Band, Boundary, BINORM_FLOOR};
use crate::numerics::ComplexMatrix;
use crate::{Error, Result, C64};

/// Diagonal term of the Ising BdG Bloch matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum BdgConvention {
    /// ε_k = 2h + 2J cos k; real h is the Hermitian chain, |h| = J with complex h the EP circle.
    #[default]
    Standard,
    /// ε_k = ih + 2J cos k.
    Printed,
}

/// Ising chain with complex transverse field h, coupling J, after Jordan–Wigner.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TfimParams {
    pub j: f64,
    pub h: C64,
    pub convention: BdgConvention,
}

impl TfimParams {
    pub fn new(j: f64, h: C64) -> Self {
        Self {
            j,
            h,
            convention: BdgConvention::Standard,
        }
    }

    pub fn with_convention(self, convention: BdgConvention) -> Self {
        Self { convention, ..self }
    }

    pub fn epsilon(&self, k: f64) -> C64 {
        let hopping = C64::new(2.0 * self.j * libm::cos(k), 0.0);
        match self.convention {
            BdgConvention::Standard => self.h * 2.0 + hopping,
            BdgConvention::Printed => self.h * C64::new(0.0, 1.0) + hopping,
        }
    }
}

/// [[ε_k, 2iJ sin k], [−2iJ sin k, −ε_k]].
pub fn tfim_bdg_bloch(k: f64, p: &TfimParams) -> [[C64; 2]; 2] {
    let e = p.epsilon(k);
    let d = C64::new(0.0, 2.0 * p.j * libm::sin(k));
    [[e, d], [-d, -e]]
}

/// Nambu correlation ⟨Ψ†_i Ψ_j⟩ of the (c, c†) spinor per site, ordered (site, particle then hole).
#[derive(Debug, Clone, PartialEq)]
pub struct NambuCorrelation {
    pub sites: usize,
    pub matrix: ComplexMatrix,
}

impl NambuCorrelation {
    /// The 2l×2l block of the first `l` sites.
    pub fn restrict(&self, l: usize) -> NambuCorrelation {
        NambuCorrelation {
            sites: l,
            matrix: self.matrix.submatrix(0, 0, 2 * l, 2 * l),
        }
    }
}

/// Full-chain Nambu correlation: one negative-Re BdG band filled per APBC momentum.
pub fn nambu_chain_correlation(
    p: &TfimParams,
    sites: usize,
    delta_kappa: f64,
) -> Result<NambuCorrelation> {
    if sites < 2 || sites % 2 != 0 {
        return Err(Error::InvalidInput("BdG chain length must be even"));
    }
    let g = grid(sites, Boundary::Apbc, delta_kappa)?;
    let scale = 2.0 * (p.h.norm() + p.j.abs());
    let mut modes = Vec::with_capacity(sites);
    for &k in &g.ks {
        let [[eps, d], [dm, _]] = tfim_bdg_bloch(k, p);
        let e = (eps * eps + d * dm).sqrt();
        let (e, band) = if fills(-e, Band::Lower) {
            (-e, Band::Lower)
        } else {
            (e, Band::Upper)
        };
        modes.push(traceless_eigenpair(
            k,
            band,
            e,
            [eps, d, dm],
            scale,
            BINORM_FLOOR,
        )?);
    }
    Ok(NambuCorrelation {
        sites,
        matrix: assemble(sites, &modes),
    })
}

/// Nambu correlation of the first `l` sites of an `sites`-site ring.
pub fn nambu_correlation(
    p: &TfimParams,
    sites: usize,
    l: usize,
    delta_kappa: f64,
) -> Result<NambuCorrelation> {
    if l == 0 || l >= sites {
        return Err(Error::InvalidInput("subsystem must satisfy 1 <= l < L"));
    }
    Ok(nambu_chain_correlation(p, sites, delta_kappa)?.restrict(l))
}
