use alloc::vec::Vec;
use core::f64::consts::PI;

use num_traits::Zero;

use super::params::ModelParams;
use crate::{Error, Result, C64};

/// Default floor on |⟨L̃|R̃⟩| below which a mode counts as exceptional.
pub const BINORM_FLOOR: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Band {
    Lower,
    Upper,
}

impl Band {
    pub fn sign(self) -> i8 {
        match self {
            Band::Lower => -1,
            Band::Upper => 1,
        }
    }

    pub fn from_sign(s: i8) -> Self {
        if s < 0 {
            Band::Lower
        } else {
            Band::Upper
        }
    }
}

/// One (k, band) solution with biorthonormal eigenvectors.
///
/// `left` is the ket |L⟩ (eigenvector of h†), so ⟨L|R⟩ = Σ conj(left)·right = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochMode {
    pub k: f64,
    pub band: Band,
    pub energy: C64,
    pub right: [C64; 2],
    pub left: [C64; 2],
    /// ⟨L̃|R̃⟩ of the unit-norm eigenvectors, before biorthonormalization.
    pub binorm: C64,
}

impl BlochMode {
    /// Canonical-basis fallback for a scalar Bloch matrix.
    pub fn canonical(k: f64, band: Band, energy: C64) -> Self {
        let (one, zero) = (C64::new(1.0, 0.0), C64::zero());
        let v = match band {
            Band::Lower => [one, zero],
            Band::Upper => [zero, one],
        };
        Self {
            k,
            band,
            energy,
            right: v,
            left: v,
            binorm: one,
        }
    }

    /// Row vector l with l·h = ε l and l·R = 1.
    pub fn left_row(&self) -> [C64; 2] {
        [self.left[0].conj(), self.left[1].conj()]
    }
}

/// Both branches ±sqrt(a_r + b_r cos k + i s sin k) on the principal branch.
///
/// The radicand is assembled from a_r ± b_r computed as products, so that it
/// stays accurate at momenta where it nearly vanishes.
pub fn dispersion(p: &ModelParams, k: f64) -> (C64, C64) {
    let e = principal_energy(p, k);
    (e, -e)
}

fn principal_energy(p: &ModelParams, k: f64) -> C64 {
    let b = p.b_r();
    let (z, sk) = if libm::cos(k) < 0.0 {
        // distance to the zone edge, exact for k = ±π
        let d = PI - k.abs();
        let c = libm::sin(0.5 * d);
        (p.a_minus_b() + b * (2.0 * c * c), libm::sin(d).copysign(k))
    } else {
        let s = libm::sin(0.5 * k);
        (p.a_plus_b() - b * (2.0 * s * s), libm::sin(k))
    };
    (z + p.s() * C64::new(0.0, sk)).sqrt()
}

pub fn band_energy(p: &ModelParams, k: f64, band: Band) -> C64 {
    let e = principal_energy(p, k);
    match band {
        Band::Upper => e,
        Band::Lower => -e,
    }
}

/// Biorthonormal eigenpair of h(k) for one band.
pub fn eigenpair(p: &ModelParams, k: f64, band: Band, binorm_floor: f64) -> Result<BlochMode> {
    let e = band_energy(p, k, band);
    traceless_eigenpair(
        k,
        band,
        e,
        [p.u, p.h_ab(k), p.h_ba(k)],
        p.scale(),
        binorm_floor,
    )
}

/// Eigenpair of [[u, h_AB], [h_BA, −u]] for a known eigenvalue `e`.
pub(crate) fn traceless_eigenpair(
    k: f64,
    band: Band,
    e: C64,
    [u, hab, hba]: [C64; 3],
    scale: f64,
    binorm_floor: f64,
) -> Result<BlochMode> {
    if !(binorm_floor > 0.0) {
        return Err(Error::InvalidInput("binorm_floor must be positive"));
    }
    let tiny = 1e-14 * scale.max(f64::MIN_POSITIVE);
    if u.norm() <= tiny && hab.norm() <= tiny && hba.norm() <= tiny {
        return Err(Error::DegenerateMatrix { k });
    }
    let one = C64::new(1.0, 0.0);
    // (e+u)/h_BA = h_AB/(e−u) and h_BA/(e−u) = (e+u)/h_AB: take the larger denominator.
    let epu = e + u;
    let emu = e - u;
    let right = if hba.norm() >= emu.norm() && !hba.is_zero() {
        [epu / hba, one]
    } else if !emu.is_zero() {
        [hab / emu, one]
    } else if !hab.is_zero() {
        [one, emu / hab]
    } else {
        [one, C64::zero()]
    };
    let left_row = if emu.norm() >= hab.norm() && !emu.is_zero() {
        [hba / emu, one]
    } else if !hab.is_zero() {
        [epu / hab, one]
    } else if !epu.is_zero() {
        [one, hab / epu]
    } else {
        [one, C64::zero()]
    };
    let nr = libm::hypot(right[0].norm(), right[1].norm());
    let nl = libm::hypot(left_row[0].norm(), left_row[1].norm());
    let right = [right[0] / nr, right[1] / nr];
    let left_row = [left_row[0] / nl, left_row[1] / nl];
    let binorm = left_row[0] * right[0] + left_row[1] * right[1];
    if binorm.norm() < binorm_floor {
        return Err(Error::BinormVanishing {
            k,
            binorm: binorm.norm(),
            floor: binorm_floor,
        });
    }
    let r = binorm.sqrt();
    let right = [right[0] / r, right[1] / r];
    let left = [(left_row[0] / r).conj(), (left_row[1] / r).conj()];
    Ok(BlochMode {
        k,
        band,
        energy: e,
        right,
        left,
        binorm,
    })
}

/// Eigenpair, or the canonical fallback when h(k) is scalar.
pub fn eigenpair_or_canonical(
    p: &ModelParams,
    k: f64,
    band: Band,
    binorm_floor: f64,
) -> Result<BlochMode> {
    match eigenpair(p, k, band, binorm_floor) {
        Err(Error::DegenerateMatrix { k }) => {
            Ok(BlochMode::canonical(k, band, band_energy(p, k, band)))
        }
        other => other,
    }
}

/// Momenta (in (−π, π], with π reported as −π) where the dispersion vanishes.
pub fn locate_seps(p: &ModelParams) -> Vec<f64> {
    let scale = p.scale().max(f64::MIN_POSITIVE);
    let tol = 1e-10 * scale * scale;
    let (a, b, s) = (p.a_r(), p.b_r(), p.s());
    let mut ks = Vec::new();
    if s.norm() <= tol {
        if b.norm() > tol {
            let x = -a / b;
            if x.im.abs() <= 1e-10 && x.re.abs() <= 1.0 + 1e-10 {
                let k0 = libm::acos(x.re.clamp(-1.0, 1.0));
                if k0 < 1e-12 {
                    ks.push(0.0);
                } else if PI - k0 < 1e-12 {
                    ks.push(-PI);
                } else {
                    ks.push(-k0);
                    ks.push(k0);
                }
            }
        }
    } else {
        if p.a_minus_b().norm() <= tol {
            ks.push(-PI);
        }
        if p.a_plus_b().norm() <= tol {
            ks.push(0.0);
        }
    }
    ks.retain(|&k| principal_energy(p, k).norm() < 1e-8 * scale.max(1.0));
    ks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::band::LambdaParams;
    use crate::c64;

    fn c2() -> ModelParams {
        LambdaParams::new(1.0, c64(2.0, 0.0), c64(3.0, 0.0), c64(0.0, 1.0)).model()
    }

    fn type2() -> ModelParams {
        ModelParams::real(1.0, 0.7, 1.0, 0.3)
    }

    #[test]
    fn ssh_gap_edge() {
        let (p, m) = dispersion(&ModelParams::real(1.0, 1.0, 1.0, 1.0), 0.0);
        assert!((p - c64(2.0, 0.0)).norm() < 1e-15 && (m + p).norm() == 0.0);
    }

    #[test]
    fn type2_ep_at_minus_pi() {
        let (p, _) = dispersion(&type2(), -PI);
        assert!(p.norm() < 1e-15);
        assert_eq!(locate_seps(&type2()), alloc::vec![-PI]);
    }

    #[test]
    fn c2_config_values() {
        let (p, _) = dispersion(&c2(), 0.0);
        assert!((p - c64(24f64.sqrt(), 0.0)).norm() < 1e-14);
        assert_eq!(locate_seps(&c2()), alloc::vec![-PI]);
    }

    #[test]
    fn hermitian_ssh_left_equals_right() {
        let m = eigenpair(
            &ModelParams::real(1.0, 1.0, 1.0, 1.0),
            PI / 2.0,
            Band::Lower,
            BINORM_FLOOR,
        )
        .unwrap();
        for a in 0..2 {
            assert!((m.left[a] - m.right[a]).norm() < 1e-14);
        }
    }

    #[test]
    fn binorm_vanishes_near_linear_sep() {
        let e = eigenpair(&c2(), -PI + 1e-12, Band::Lower, 1e-8);
        assert!(matches!(e, Err(Error::BinormVanishing { .. })));
    }

    #[test]
    fn binorm_sqrt_scaling_type2() {
        let b6 = eigenpair(&type2(), -PI + 1e-6, Band::Lower, 1e-14)
            .unwrap()
            .binorm
            .norm();
        let b8 = eigenpair(&type2(), -PI + 1e-8, Band::Lower, 1e-14)
            .unwrap()
            .binorm
            .norm();
        let ratio = b6 / b8;
        assert!((ratio / 10.0 - 1.0).abs() < 0.1, "ratio {ratio}");
    }

    #[test]
    fn gapped_ssh_has_no_seps() {
        assert!(locate_seps(&ModelParams::real(1.0, 1.0, 2.0, 2.0)).is_empty());
    }

    #[test]
    fn scalar_matrix_reported() {
        let p = ModelParams::real(0.0, 0.0, 0.0, 0.0);
        assert!(matches!(
            eigenpair(&p, 0.3, Band::Lower, BINORM_FLOOR),
            Err(Error::DegenerateMatrix { .. })
        ));
        let m = eigenpair_or_canonical(&p, 0.3, Band::Upper, BINORM_FLOOR).unwrap();
        assert_eq!(m.right, [C64::zero(), c64(1.0, 0.0)]);
    }
}
