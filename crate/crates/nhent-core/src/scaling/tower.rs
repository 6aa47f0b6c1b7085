use alloc::vec::Vec;

use crate::band::{band_energy, locate_seps, Band, Boundary, ModelParams};
use crate::state::{fill_ground, grid, MomentumGrid};
use crate::{Error, Result, C64};

/// Momenta on each side of the SEP whose vertical particle–hole moves are enumerated.
pub const TOWER_WINDOW: usize = 6;

#[derive(Debug, Clone, PartialEq)]
pub struct TowerResult {
    pub boundary: Boundary,
    /// Distinct scaling dimensions in increasing order; for PBC the first is 0.
    pub deltas: Vec<f64>,
    pub e0: C64,
    /// Periodic ground energy plus two minimal excitations.
    pub e_t: C64,
}

fn ground_energy(p: &ModelParams, g: &MomentumGrid) -> C64 {
    fill_ground(p, g)
        .modes()
        .iter()
        .map(|&(n, b)| band_energy(p, g.ks[n], b))
        .sum()
}

fn max_imag(p: &ModelParams, g: &MomentumGrid) -> f64 {
    g.ks.iter()
        .map(|&k| band_energy(p, k, Band::Upper).im.abs())
        .fold(0.0, f64::max)
}

fn circular_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(2.0 * core::f64::consts::PI);
    d.min(2.0 * core::f64::consts::PI - d)
}

/// Zero-momentum excitation energies: promotions of the occupied lower-band
/// particle to the upper band at up to 2·TOWER_WINDOW momenta nearest the SEP.
fn excitation_levels(p: &ModelParams, g: &MomentumGrid, k_sep: f64) -> Vec<f64> {
    let mut idx: Vec<usize> = (0..g.len()).collect();
    idx.sort_by(|&a, &b| {
        circular_distance(g.ks[a], k_sep)
            .total_cmp(&circular_distance(g.ks[b], k_sep))
            .then(a.cmp(&b))
    });
    let gaps: Vec<f64> = idx
        .iter()
        .map(|&n| 2.0 * band_energy(p, g.ks[n], Band::Upper).re.abs())
        .filter(|e| *e > 1e-12)
        .take(2 * TOWER_WINDOW)
        .collect();
    let mut levels: Vec<f64> = (0..1usize << gaps.len())
        .map(|mask| {
            gaps.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, e)| e)
                .sum()
        })
        .collect();
    levels.sort_by(f64::total_cmp);
    levels
}

fn distinct(levels: &[f64], tol: f64) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::new();
    for &x in levels {
        if out.last().map_or(true, |&y| x - y > tol) {
            out.push(x);
        }
    }
    out
}

/// Scaling dimensions from many-body energies.
///
/// Δ = 2(E − E_0^PBC)/(E_T − E_0^PBC), with E_0^PBC the untwisted periodic ground
/// energy for both boundary conditions, so that the antiperiodic ground state
/// carries its own dimension.
pub fn conformal_tower(p: &ModelParams, cells: usize, boundary: Boundary) -> Result<TowerResult> {
    let pbc = grid(cells, Boundary::Pbc, 0.0)?;
    let g = grid(cells, boundary, 0.0)?;
    let im = max_imag(p, &pbc).max(max_imag(p, &g));
    if im > 1e-8 {
        return Err(Error::ComplexSpectrum { max_imag: im });
    }
    let k_sep = locate_seps(p).first().copied().unwrap_or_else(|| {
        let n = (0..pbc.len())
            .min_by(|&a, &b| {
                band_energy(p, pbc.ks[a], Band::Upper)
                    .norm()
                    .total_cmp(&band_energy(p, pbc.ks[b], Band::Upper).norm())
            })
            .unwrap_or(0);
        pbc.ks[n]
    });
    let e0_pbc = ground_energy(p, &pbc);
    let pbc_levels = excitation_levels(p, &pbc, k_sep);
    let min_exc = pbc_levels
        .iter()
        .copied()
        .find(|e| *e > 0.0)
        .ok_or(Error::InvalidInput("no excitations"))?;
    let e_t = e0_pbc + C64::new(2.0 * min_exc, 0.0);
    let scale = 2.0 / (e_t - e0_pbc).re;
    let (e0, levels) = match boundary {
        Boundary::Pbc => (e0_pbc, pbc_levels),
        _ => (ground_energy(p, &g), excitation_levels(p, &g, k_sep)),
    };
    let shift = (e0 - e0_pbc).re;
    let abs: Vec<f64> = levels.iter().map(|e| (e + shift) * scale).collect();
    Ok(TowerResult {
        boundary,
        deltas: distinct(&abs, 1e-3),
        e0,
        e_t,
    })
}
