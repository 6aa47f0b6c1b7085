use alloc::vec::Vec;
use core::f64::consts::PI;

use super::region::{restrict, Region};
use crate::band::{locate_seps, Band, Boundary, ModelParams};
use crate::numerics::{complex_linear_fit, det, ComplexMatrix};
use crate::state::{correlation, fill_ground, grid, remove_mode, MomentumGrid, OccupationSet};
use crate::{Error, Result, C64};

pub const IND_CELLS: usize = 40;
pub const IND_DELTAS: [f64; 3] = [1e-4, 1e-5, 1e-6];

/// Rescaled block determinants δκ·det C_{0,1} for each twist in `deltas`.
///
/// C_{0,1} is the 2×2 block between neighbouring cells, ⟨c†_{0,a} c_{1,b}⟩.
pub fn block_determinants(p: &ModelParams, deltas: &[f64], cells: usize) -> Result<Vec<C64>> {
    if deltas.len() < 3
        || deltas.windows(2).any(|w| !(w[1] < w[0]))
        || deltas.iter().any(|d| !(*d > 0.0))
    {
        return Err(Error::InvalidInput(
            "delta sequence must be positive, strictly decreasing, length >= 3",
        ));
    }
    deltas
        .iter()
        .map(|&dk| {
            let g = grid(cells, Boundary::Pbc, dk)?;
            let c = correlation(p, &g, &fill_ground(p, &g))?;
            let b = c.matrix.submatrix(0, 2, 2, 2);
            Ok(det(&b)? * dk)
        })
        .collect()
}

/// Ind: sign of Re(δκ·det C_{0,1}) as δκ → 0.
///
/// IndexUnstable when the last two signs differ or their magnitudes are not
/// within a factor of two (no finite limit, e.g. a k-square-root SEP).
pub fn block_index(p: &ModelParams, deltas: &[f64]) -> Result<i8> {
    block_index_with(p, deltas, IND_CELLS)
}

pub fn block_index_with(p: &ModelParams, deltas: &[f64], cells: usize) -> Result<i8> {
    let d = block_determinants(p, deltas, cells)?;
    let (a, b) = (d[d.len() - 2], d[d.len() - 1]);
    let ratio = b.norm() / a.norm();
    if a.re.signum() != b.re.signum() || !(0.5..=2.0).contains(&ratio) || b.re == 0.0 {
        return Err(Error::IndexUnstable);
    }
    Ok(if b.re > 0.0 { 1 } else { -1 })
}

fn wrapped_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(2.0 * PI);
    d.min(2.0 * PI - d)
}

/// Occupied modes sitting closest to each SEP.
pub fn exceptional_modes(
    p: &ModelParams,
    g: &MomentumGrid,
    occ: &OccupationSet,
) -> Vec<(usize, Band)> {
    let mut out = Vec::new();
    for k in locate_seps(p) {
        let n = (0..g.len())
            .min_by(|&a, &b| wrapped_distance(g.ks[a], k).total_cmp(&wrapped_distance(g.ks[b], k)));
        if let Some(n) = n {
            for band in [Band::Lower, Band::Upper] {
                if occ.contains(n, band) && !out.contains(&(n, band)) {
                    out.push((n, band));
                }
            }
        }
    }
    out
}

/// Ground state with the exceptional modes emptied (quasi-holes at the SEPs).
pub fn remove_exceptional(
    p: &ModelParams,
    g: &MomentumGrid,
    occ: &OccupationSet,
) -> Result<OccupationSet> {
    let mut occ = occ.clone();
    for (n, band) in exceptional_modes(p, g, &occ) {
        occ = remove_mode(&occ, n, band)?;
    }
    Ok(occ)
}

fn max_ab(c: &ComplexMatrix) -> f64 {
    let n = c.rows() / 2;
    let mut m = 0.0f64;
    for x in 0..n {
        for y in 0..n {
            m = m.max(c[(2 * x, 2 * y + 1)].norm());
        }
    }
    m
}

/// max|C^AB| over the leading region of each chain after emptying the exceptional modes.
pub fn bound_state_divergence(
    p: &ModelParams,
    cells: &[usize],
    region_fraction: f64,
    delta_kappa: f64,
) -> Result<Vec<(usize, f64)>> {
    if !(region_fraction > 0.0 && region_fraction < 1.0) {
        return Err(Error::InvalidInput("region fraction must lie in (0, 1)"));
    }
    cells
        .iter()
        .map(|&l| {
            let g = grid(l, Boundary::Pbc, delta_kappa)?;
            let occ = remove_exceptional(p, &g, &fill_ground(p, &g))?;
            let c = correlation(p, &g, &occ)?;
            let la = ((l as f64 * region_fraction).round() as usize).clamp(1, l - 1);
            Ok((l, max_ab(&restrict(&c, Region::leading(la))?)))
        })
        .collect()
}

/// a·ln L + b fitted to a growth profile, with the relative residual.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogGrowth {
    pub a: f64,
    pub b: f64,
    pub relative_residual: f64,
}

pub fn log_growth(profile: &[(usize, f64)]) -> Result<LogGrowth> {
    let xs: Vec<f64> = profile.iter().map(|(l, _)| libm::log(*l as f64)).collect();
    let ys: Vec<C64> = profile.iter().map(|(_, y)| C64::new(*y, 0.0)).collect();
    let f = complex_linear_fit(&xs, &ys)?;
    let norm = libm::sqrt(profile.iter().map(|(_, y)| y * y).sum::<f64>());
    Ok(LogGrowth {
        a: f.slope.re,
        b: f.intercept.re,
        relative_residual: f.residual_norm / norm,
    })
}

/// Ratios of successive increments of a profile taken on doubling chain lengths.
/// A 1/√L approach to a constant gives 1/√2 for each.
pub fn increment_ratios(profile: &[(usize, f64)]) -> Vec<f64> {
    let d: Vec<f64> = profile.windows(2).map(|w| w[1].1 - w[0].1).collect();
    d.windows(2).map(|w| w[1] / w[0]).collect()
}
