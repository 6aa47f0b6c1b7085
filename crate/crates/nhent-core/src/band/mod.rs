//! Two-band Bloch Hamiltonian: dispersion, biorthogonal eigenvectors,
//! spectral exceptional points, symmetry checks and real-space chains.

mod bloch;
pub(crate) use bloch::traceless_eigenpair;
mod params;
mod realspace;
mod symmetry;

pub use bloch::{
    band_energy, dispersion, eigenpair, eigenpair_or_canonical, locate_seps, Band, BlochMode,
    BINORM_FLOOR,
};
pub use params::{LambdaParams, ModelParams};
pub use realspace::{
    obc_edge_modes, obc_edge_modes_with, real_space_hamiltonian, Boundary, EdgeMode,
    RealSpaceHamiltonian,
};
pub use symmetry::{symmetry_report, SymmetryFlag, SymmetryReport};

use crate::{Error, Result};

/// SEP existence window λ(w∓v)² bracketing −u².
///
/// The bounds are ordered by value, so the test also covers wv < 0 and
/// imaginary hoppings, where λ(w−v)² exceeds λ(w+v)².
pub fn ep_window(p: &LambdaParams) -> Result<bool> {
    let mu2 = -(p.u * p.u);
    let lo = (p.w - p.v) * (p.w - p.v) * p.lambda;
    let hi = (p.w + p.v) * (p.w + p.v) * p.lambda;
    for z in [mu2, lo, hi] {
        if z.im.abs() > 1e-12 * z.norm().max(1.0) {
            return Err(Error::NonComparable {
                re: mu2.re,
                im: mu2.im,
            });
        }
    }
    let (lo, hi) = if lo.re <= hi.re {
        (lo.re, hi.re)
    } else {
        (hi.re, lo.re)
    };
    let slack = 1e-12 * hi.abs().max(lo.abs()).max(1.0);
    Ok(lo - slack <= mu2.re && mu2.re <= hi + slack)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    #[test]
    fn window_examples() {
        let w = |u| ep_window(&LambdaParams::new(1.0, c64(2.0, 0.0), c64(3.0, 0.0), u));
        assert_eq!(w(c64(0.0, 1.0)), Ok(true));
        assert_eq!(w(c64(0.5, 0.0)), Ok(false));
        assert!(matches!(w(c64(1.0, 1.0)), Err(Error::NonComparable { .. })));
        let p = LambdaParams::new(1.0, c64(1.0, 0.0), c64(1.0, 0.0), c64(0.0, 3.8));
        assert_eq!(ep_window(&p), Ok(false));
    }

    #[test]
    fn window_for_negative_product_and_imaginary_hoppings() {
        // w = 2, v = −3, u = 5i: −u² = 25 = (w − v)²
        let p = LambdaParams::new(1.0, c64(2.0, 0.0), c64(-3.0, 0.0), c64(0.0, 5.0));
        assert_eq!(ep_window(&p), Ok(true));
        // w = 2i, v = −3i, u = −5: −u² = −25 = (w − v)²
        let p = LambdaParams::new(1.0, c64(0.0, 2.0), c64(0.0, -3.0), c64(-5.0, 0.0));
        assert_eq!(ep_window(&p), Ok(true));
    }
}
