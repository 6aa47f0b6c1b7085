use alloc::vec;
use alloc::vec::Vec;

use super::grid::MomentumGrid;
use super::occupation::OccupationSet;
use crate::band::{eigenpair, BlochMode, ModelParams, BINORM_FLOOR};
use crate::numerics::ComplexMatrix;
use crate::{Error, Result, C64};

/// ⟨GS_L|c†_{x,a} c_{y,b}|GS_R⟩ on 2L sites ordered (cell, A then B).
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationMatrix {
    pub matrix: ComplexMatrix,
    pub grid: MomentumGrid,
    pub occupation: OccupationSet,
}

impl CorrelationMatrix {
    pub fn cells(&self) -> usize {
        self.grid.cells
    }

    /// 2×2 block between cells x and y.
    pub fn block(&self, x: usize, y: usize) -> [[C64; 2]; 2] {
        let m = &self.matrix;
        [
            [m[(2 * x, 2 * y)], m[(2 * x, 2 * y + 1)]],
            [m[(2 * x + 1, 2 * y)], m[(2 * x + 1, 2 * y + 1)]],
        ]
    }
}

pub fn correlation(
    p: &ModelParams,
    grid: &MomentumGrid,
    occ: &OccupationSet,
) -> Result<CorrelationMatrix> {
    correlation_with_floor(p, grid, occ, BINORM_FLOOR)
}

pub fn correlation_with_floor(
    p: &ModelParams,
    grid: &MomentumGrid,
    occ: &OccupationSet,
    binorm_floor: f64,
) -> Result<CorrelationMatrix> {
    let modes = occupied_modes(p, grid, occ, binorm_floor)?;
    Ok(CorrelationMatrix {
        matrix: assemble(grid.cells, &modes),
        grid: grid.clone(),
        occupation: occ.clone(),
    })
}

pub fn occupied_modes(
    p: &ModelParams,
    grid: &MomentumGrid,
    occ: &OccupationSet,
    binorm_floor: f64,
) -> Result<Vec<BlochMode>> {
    occ.modes()
        .iter()
        .map(|&(n, band)| {
            let k = *grid
                .ks
                .get(n)
                .ok_or(Error::InvalidInput("occupied mode outside the grid"))?;
            eigenpair(p, k, band, binorm_floor)
        })
        .collect()
}

/// (1/L) Σ_modes conj(L_a) R_b e^{−ik(x−y)}, built from one 2×2 block per separation.
pub(crate) fn assemble(cells: usize, modes: &[BlochMode]) -> ComplexMatrix {
    let zero = C64::new(0.0, 0.0);
    // blocks[d + L − 1] holds separation d = x − y
    let mut blocks = vec![[[zero; 2]; 2]; 2 * cells - 1];
    for m in modes {
        let l = m.left_row();
        let mut b = [[zero; 2]; 2];
        for a in 0..2 {
            for c in 0..2 {
                b[a][c] = l[a] * m.right[c];
            }
        }
        for (i, slot) in blocks.iter_mut().enumerate() {
            let d = i as f64 - (cells as f64 - 1.0);
            let ph = C64::from_polar(1.0, -m.k * d);
            for a in 0..2 {
                for c in 0..2 {
                    slot[a][c] += b[a][c] * ph;
                }
            }
        }
    }
    let inv = 1.0 / cells as f64;
    let mut out = ComplexMatrix::zeros(2 * cells, 2 * cells);
    for x in 0..cells {
        for y in 0..cells {
            let blk = &blocks[x + cells - 1 - y];
            for a in 0..2 {
                for c in 0..2 {
                    out[(2 * x + a, 2 * y + c)] = blk[a][c] * inv;
                }
            }
        }
    }
    out
}
