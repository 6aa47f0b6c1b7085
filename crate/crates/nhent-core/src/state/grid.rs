use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::band::Boundary;
use crate::{Error, Result};

/// Quantized momenta of a ring of `cells` unit cells with a uniform twist δκ.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentumGrid {
    pub cells: usize,
    pub boundary: Boundary,
    pub delta_kappa: f64,
    pub ks: Vec<f64>,
}

impl MomentumGrid {
    pub fn len(&self) -> usize {
        self.ks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ks.is_empty()
    }

    /// Phase θ with e^{ikL} = e^{iθ} for every grid momentum; the wrap bond of the
    /// matching real-space ring carries e^{∓iθ}.
    pub fn wrap_phase(&self) -> f64 {
        self.ks[0] * self.cells as f64
    }
}

/// PBC: k_n = −π + 2πn/L + δκ; APBC: k_n = −π + 2π(n + ½)/L + δκ.
///
/// Odd `cells` is accepted (small brute-force checks use it); there the PBC
/// rule gives e^{ikL} = −e^{iLδκ}, see [`MomentumGrid::wrap_phase`].
pub fn grid(cells: usize, boundary: Boundary, delta_kappa: f64) -> Result<MomentumGrid> {
    if cells < 2 {
        return Err(Error::InvalidInput("grid needs at least 2 cells"));
    }
    if !(delta_kappa >= 0.0) || !delta_kappa.is_finite() {
        return Err(Error::InvalidInput(
            "delta_kappa must be finite and non-negative",
        ));
    }
    let offset = match boundary {
        Boundary::Pbc => 0.0,
        Boundary::Apbc => 0.5,
        Boundary::Obc => return Err(Error::InvalidInput("open chains have no momentum grid")),
    };
    let l = cells as f64;
    let ks = (0..cells)
        .map(|n| -PI + 2.0 * PI * (n as f64 + offset) / l + delta_kappa)
        .collect();
    Ok(MomentumGrid {
        cells,
        boundary,
        delta_kappa,
        ks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantization() {
        let g = grid(4, Boundary::Pbc, 0.0).unwrap();
        assert_eq!(g.ks, [-PI, -PI / 2.0, 0.0, PI / 2.0]);
        let g = grid(4, Boundary::Apbc, 0.0).unwrap();
        for (k, e) in
            g.ks.iter()
                .zip([-0.75 * PI, -0.25 * PI, 0.25 * PI, 0.75 * PI])
        {
            assert!((k - e).abs() < 1e-15);
        }
        let g = grid(4, Boundary::Pbc, 1e-8).unwrap();
        assert!((g.ks[2] - 1e-8).abs() < 1e-22);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(grid(1, Boundary::Pbc, 0.0).is_err());
        assert!(grid(4, Boundary::Obc, 0.0).is_err());
        assert!(grid(4, Boundary::Pbc, -1.0).is_err());
    }
}
