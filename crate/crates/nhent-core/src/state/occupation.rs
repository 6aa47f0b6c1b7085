use alloc::vec::Vec;

use super::grid::MomentumGrid;
use crate::band::{band_energy, Band, ModelParams};
use crate::{Error, Result, C64};

/// Real parts this close to zero count as zero when filling.
pub const FILL_TIE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    Ground,
    Quasiparticle { index: usize, band: Band },
    Quasihole { index: usize, band: Band },
    Custom,
}

/// Occupied (grid index, band) modes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OccupationSet {
    modes: Vec<(usize, Band)>,
    pub provenance: Provenance,
}

impl OccupationSet {
    /// Duplicates are dropped.
    pub fn from_modes(modes: impl IntoIterator<Item = (usize, Band)>) -> Self {
        let mut out = Self {
            modes: Vec::new(),
            provenance: Provenance::Custom,
        };
        for m in modes {
            if !out.contains(m.0, m.1) {
                out.modes.push(m);
            }
        }
        out.modes.sort_unstable();
        out
    }

    pub fn modes(&self) -> &[(usize, Band)] {
        &self.modes
    }

    pub fn len(&self) -> usize {
        self.modes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modes.is_empty()
    }

    pub fn contains(&self, index: usize, band: Band) -> bool {
        self.modes.binary_search(&(index, band)).is_ok()
    }
}

/// Whether a mode of energy `e` belongs to the Fermi sea: Re e < 0, or Im e < 0 on a
/// Re e = 0 tie. An exact zero (an SEP on the grid) is assigned to the lower band.
pub fn fills(e: C64, band: Band) -> bool {
    if e.re < -FILL_TIE_TOL {
        true
    } else if e.re > FILL_TIE_TOL {
        false
    } else if e.im < -FILL_TIE_TOL {
        true
    } else if e.im > FILL_TIE_TOL {
        false
    } else {
        band == Band::Lower
    }
}

pub fn fill_ground(p: &ModelParams, grid: &MomentumGrid) -> OccupationSet {
    let mut modes = Vec::with_capacity(grid.len());
    for (n, &k) in grid.ks.iter().enumerate() {
        for band in [Band::Lower, Band::Upper] {
            if fills(band_energy(p, k, band), band) {
                modes.push((n, band));
            }
        }
    }
    OccupationSet {
        modes,
        provenance: Provenance::Ground,
    }
}

/// Partial Fermi sea: every mode with real energy below `mu`.
///
/// Taken with `mu` under the exceptional-point energy this keeps the filled states
/// away from the SEP, where the chain behaves as an ordinary metal.
pub fn fill_below(p: &ModelParams, grid: &MomentumGrid, mu: f64) -> OccupationSet {
    let mut modes = Vec::new();
    for (n, &k) in grid.ks.iter().enumerate() {
        for band in [Band::Lower, Band::Upper] {
            if band_energy(p, k, band).re < mu {
                modes.push((n, band));
            }
        }
    }
    OccupationSet {
        modes,
        provenance: Provenance::Custom,
    }
}

pub fn add_quasiparticle(occ: &OccupationSet, index: usize, band: Band) -> Result<OccupationSet> {
    if occ.contains(index, band) {
        return Err(Error::ModeAlreadyOccupied {
            index,
            band: band.sign(),
        });
    }
    let mut modes = occ.modes.clone();
    let at = modes.partition_point(|m| *m < (index, band));
    modes.insert(at, (index, band));
    Ok(OccupationSet {
        modes,
        provenance: Provenance::Quasiparticle { index, band },
    })
}

pub fn remove_mode(occ: &OccupationSet, index: usize, band: Band) -> Result<OccupationSet> {
    if !occ.contains(index, band) {
        return Err(Error::ModeNotOccupied {
            index,
            band: band.sign(),
        });
    }
    let modes = occ
        .modes
        .iter()
        .copied()
        .filter(|m| *m != (index, band))
        .collect();
    Ok(OccupationSet {
        modes,
        provenance: Provenance::Quasihole { index, band },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::band::{Boundary, LambdaParams};
    use crate::c64;
    use crate::state::grid;

    #[test]
    fn half_filling() {
        let g = grid(40, Boundary::Pbc, 0.0).unwrap();
        assert_eq!(
            fill_ground(&ModelParams::real(1.0, 1.0, 2.0, 2.0), &g).len(),
            40
        );
        let g = grid(40, Boundary::Pbc, 1e-8).unwrap();
        let p = LambdaParams::new(1.0, c64(2.0, 0.0), c64(3.0, 0.0), c64(0.0, 1.0)).model();
        let occ = fill_ground(&p, &g);
        assert_eq!(occ.len(), 40);
        assert!(occ
            .modes()
            .iter()
            .all(|&(n, b)| band_energy(&p, g.ks[n], b).re < 0.0));
        let g = grid(80, Boundary::Pbc, 1e-8).unwrap();
        assert_eq!(
            fill_ground(&ModelParams::real(1.0, 0.7, 1.0, 0.3), &g).len(),
            80
        );
    }

    #[test]
    fn tie_break_on_imaginary_branch() {
        assert!(fills(c64(0.0, -1.0), Band::Upper));
        assert!(!fills(c64(0.0, 1.0), Band::Lower));
        assert!(fills(c64(0.0, 0.0), Band::Lower) && !fills(c64(0.0, 0.0), Band::Upper));
    }

    #[test]
    fn add_remove_errors() {
        let occ = OccupationSet::from_modes([(0, Band::Lower), (1, Band::Lower)]);
        assert_eq!(
            add_quasiparticle(&occ, 0, Band::Lower),
            Err(Error::ModeAlreadyOccupied { index: 0, band: -1 })
        );
        assert_eq!(
            remove_mode(&occ, 0, Band::Upper),
            Err(Error::ModeNotOccupied { index: 0, band: 1 })
        );
        let q = add_quasiparticle(&occ, 0, Band::Upper).unwrap();
        assert_eq!(q.len(), 3);
        assert_eq!(
            remove_mode(&q, 0, Band::Upper).unwrap().modes(),
            occ.modes()
        );
    }
}
