use alloc::vec::Vec;

use super::profile::chord_abscissa;
use crate::band::{locate_seps, Boundary, ModelParams};
use crate::numerics::complex_linear_fit;
use crate::state::{correlation, fill_ground, grid};
use crate::{Error, Result, C64};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelatorScaling {
    /// Decay exponent of the regular (left–right) correlator.
    pub exponent_lr: f64,
    /// Decay exponent of the exceptional (left–left) correlator; `None` without a defective SEP.
    pub exponent_ll: Option<f64>,
    /// Mean |G_LL(x)| over the fit range, divergent as δκ → 0.
    pub divergent_amplitude: Option<f64>,
}

/// Null vectors of a defective h(k_EP): right kernel R0 and left kernel row l0.
fn ep_frame(p: &ModelParams, k: f64) -> Option<([C64; 2], [C64; 2])> {
    let [[u, hab], [hba, _]] = p.bloch(k);
    let scale = p.scale().max(f64::MIN_POSITIVE);
    if u.norm().max(hab.norm()).max(hba.norm()) < 1e-10 * scale {
        return None;
    }
    let r0 = if hab.norm() + u.norm() > 0.0 {
        [hab, -u]
    } else {
        [u, hba]
    };
    let l0 = if hba.norm() + u.norm() > 0.0 {
        [hba, -u]
    } else {
        [u, hab]
    };
    Some((r0, l0))
}

/// Power-law fits of the ghost-fermion correlators against the chord distance,
/// for x ∈ [4, L/4].
///
/// With the EP right null vector R0 and left null row l0 of h(k_EP), the block
/// C(x) = C_{x,0} splits as G_LR = R0ᵀ C(x) R̄0 / |R0|², in which the divergent
/// l0 ⊗ R0 part cancels, and G_LL = l̄0ᵀ C(x) R̄0 / (|l0||R0|), which it
/// dominates. Without a defective SEP G_LR falls back to C^{AB}(x).
pub fn correlator_scaling(
    p: &ModelParams,
    cells: usize,
    delta_kappa: f64,
) -> Result<CorrelatorScaling> {
    if cells < 32 {
        return Err(Error::InvalidInput(
            "correlator fits need at least 32 cells",
        ));
    }
    let g = grid(cells, Boundary::Pbc, delta_kappa)?;
    let c = correlation(p, &g, &fill_ground(p, &g))?;
    let xs: Vec<usize> = (4..=cells / 4).collect();
    let frame = locate_seps(p).first().and_then(|&k| ep_frame(p, k));
    let contract = |x: usize, a: [C64; 2], b: [C64; 2]| -> f64 {
        let blk = c.block(x, 0);
        let mut s = C64::new(0.0, 0.0);
        for i in 0..2 {
            for j in 0..2 {
                s += a[i] * blk[i][j] * b[j];
            }
        }
        s.norm()
    };
    let fit = |ys: &[f64]| -> Result<f64> {
        let lx: Vec<f64> = xs.iter().map(|&x| 3.0 * chord_abscissa(cells, x)).collect();
        let ly: Vec<C64> = ys
            .iter()
            .map(|y| C64::new(libm::log(y.max(f64::MIN_POSITIVE)), 0.0))
            .collect();
        Ok(-complex_linear_fit(&lx, &ly)?.slope.re)
    };
    match frame {
        Some((r0, l0)) => {
            let nr = libm::hypot(r0[0].norm(), r0[1].norm());
            let nl = libm::hypot(l0[0].norm(), l0[1].norm());
            let rbar = [r0[0].conj() / nr, r0[1].conj() / nr];
            let r0n = [r0[0] / nr, r0[1] / nr];
            let lbar = [l0[0].conj() / nl, l0[1].conj() / nl];
            let lr: Vec<f64> = xs.iter().map(|&x| contract(x, r0n, rbar)).collect();
            let ll: Vec<f64> = xs.iter().map(|&x| contract(x, lbar, rbar)).collect();
            let amp = ll.iter().sum::<f64>() / ll.len() as f64;
            Ok(CorrelatorScaling {
                exponent_lr: fit(&lr)?,
                exponent_ll: Some(fit(&ll)?),
                divergent_amplitude: Some(amp),
            })
        }
        None => {
            let one = C64::new(1.0, 0.0);
            let zero = C64::new(0.0, 0.0);
            let ab: Vec<f64> = xs
                .iter()
                .map(|&x| contract(x, [one, zero], [zero, one]))
                .collect();
            Ok(CorrelatorScaling {
                exponent_lr: fit(&ab)?,
                exponent_ll: None,
                divergent_amplitude: None,
            })
        }
    }
}
