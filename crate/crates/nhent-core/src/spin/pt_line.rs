use alloc::vec::Vec;

use super::ed::{ed_entropy_profile, yang_lee_hamiltonian, YangLeeParams, YangLeeSector};
use crate::entanglement::EntropyPolicy;
use crate::numerics::eigenvalues;
use crate::scaling::{fit_central_charge, FitResult, FitWindow};
use crate::{Error, Result};

/// |Im E| above which an eigenvalue counts as complex.
pub const PT_IMAG_TOL: f64 = 1e-8;

/// |Im E_0| of the lowest-Re eigenvalue in the zero-momentum sector.
pub fn ground_imag(p: &YangLeeParams) -> Result<f64> {
    let v = eigenvalues(&YangLeeSector::new(*p)?.hamiltonian())?;
    Ok(v[0].im.abs())
}

/// max |Im E| over the full spectrum.
pub fn max_imag(p: &YangLeeParams) -> Result<f64> {
    let v = eigenvalues(&yang_lee_hamiltonian(p)?)?;
    Ok(v.iter().map(|e| e.im.abs()).fold(0.0, f64::max))
}

fn bisect_kappa(
    j: f64,
    h: f64,
    sites: usize,
    imag: impl Fn(&YangLeeParams) -> Result<f64>,
) -> Result<f64> {
    let broken =
        |k: f64| -> Result<bool> { Ok(imag(&YangLeeParams::new(j, h, k, sites))? > PT_IMAG_TOL) };
    let cap = 4.0 * (h.abs() + j.abs()).max(1.0);
    let mut hi = 1e-3;
    while !broken(hi)? {
        hi *= 2.0;
        if hi > cap {
            return Err(Error::NoConvergence { iterations: 0 });
        }
    }
    let mut lo = if hi > 1e-3 { hi / 2.0 } else { 0.0 };
    if lo == 0.0 && broken(0.0)? {
        return Ok(0.0);
    }
    for _ in 0..200 {
        if hi - lo <= 1e-12 * hi {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if broken(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// κ at which the ground energy of the N-site ring turns complex.
pub fn pt_threshold(j: f64, h: f64, sites: usize) -> Result<f64> {
    bisect_kappa(j, h, sites, ground_imag)
}

/// κ at which any eigenvalue of the N-site ring turns complex.
pub fn reality_threshold(j: f64, h: f64, sites: usize) -> Result<f64> {
    bisect_kappa(j, h, sites, max_imag)
}

/// κ(N) = κ∞ + a N^(−y) through three points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extrapolation {
    pub kappa_inf: f64,
    pub amplitude: f64,
    pub exponent: f64,
}

pub fn extrapolate_threshold(points: &[(usize, f64); 3]) -> Result<Extrapolation> {
    let mut pts = *points;
    pts.sort_by_key(|p| p.0);
    let [(n1, k1), (n2, k2), (n3, k3)] = pts.map(|(n, k)| (n as f64, k));
    if n1 == n2 || n2 == n3 {
        return Err(Error::DegenerateAbscissae);
    }
    let target = (k1 - k2) / (k2 - k3);
    if !(target.is_finite() && target > 0.0) {
        return Err(Error::NoConvergence { iterations: 0 });
    }
    let g = |y: f64| {
        (libm::pow(n1, -y) - libm::pow(n2, -y)) / (libm::pow(n2, -y) - libm::pow(n3, -y)) - target
    };
    let (mut lo, mut hi) = (1e-3, 30.0);
    if g(lo).signum() == g(hi).signum() {
        return Err(Error::NoConvergence { iterations: 0 });
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if g(mid).signum() == g(lo).signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let y = 0.5 * (lo + hi);
    let amplitude = (k1 - k2) / (libm::pow(n1, -y) - libm::pow(n2, -y));
    Ok(Extrapolation {
        kappa_inf: k3 - amplitude * libm::pow(n3, -y),
        amplitude,
        exponent: y,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct YangLeeFit {
    pub thresholds: Vec<(usize, f64)>,
    pub line: Extrapolation,
    /// Fits at κ = κ∞ over l ∈ [2, N − 2].
    pub fits: Vec<(usize, FitResult)>,
}

/// Locates the PT line at fixed (J, h) from three ring sizes, then fits the
/// ground-state entropy at its thermodynamic κ for each of `fit_sites`.
pub fn yang_lee_c_eff(
    j: f64,
    h: f64,
    line_sites: [usize; 3],
    fit_sites: &[usize],
) -> Result<YangLeeFit> {
    let thresholds = line_sites
        .iter()
        .map(|&n| Ok((n, pt_threshold(j, h, n)?)))
        .collect::<Result<Vec<_>>>()?;
    let line = extrapolate_threshold(&[thresholds[0], thresholds[1], thresholds[2]])?;
    let fits = fit_sites
        .iter()
        .map(|&n| {
            let prof = ed_entropy_profile(
                &YangLeeParams::new(j, h, line.kappa_inf, n),
                EntropyPolicy::Paired,
            )?;
            Ok((
                n,
                fit_central_charge(
                    &prof,
                    Some(FitWindow {
                        l_min: 2,
                        l_max: n.saturating_sub(2),
                    }),
                )?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(YangLeeFit {
        thresholds,
        line,
        fits,
    })
}
