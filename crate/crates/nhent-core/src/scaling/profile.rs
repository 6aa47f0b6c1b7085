use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::band::{Boundary, ModelParams};
use crate::entanglement::{
    bee, in_range_entropy, restrict, single_particle_es, EntropyPolicy, Region,
};
use crate::numerics::complex_linear_fit;
use crate::state::{correlation, fill_ground, grid, CorrelationMatrix};
use crate::{Error, Result, C64};

/// S(l) over a contiguous range of leading-block sizes.
#[derive(Debug, Clone, PartialEq)]
pub struct EntropyProfile {
    pub cells: usize,
    pub boundary: Boundary,
    pub delta_kappa: f64,
    pub samples: Vec<(usize, C64)>,
}

impl EntropyProfile {
    pub fn get(&self, l: usize) -> Option<C64> {
        self.samples.iter().find(|s| s.0 == l).map(|s| s.1)
    }
}

/// Inclusive block-size window of a fit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FitWindow {
    pub l_min: usize,
    pub l_max: usize,
}

impl FitWindow {
    /// l ∈ [L/4, 3L/4].
    pub fn central(cells: usize) -> Self {
        Self {
            l_min: cells / 4,
            l_max: 3 * cells / 4,
        }
    }

    pub fn contains(&self, l: usize) -> bool {
        (self.l_min..=self.l_max).contains(&l)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitResult {
    pub c: C64,
    /// c / 3, the coefficient of ln sin(πl/L).
    pub gamma: C64,
    pub intercept: C64,
    pub residual: f64,
    pub window: FitWindow,
}

pub fn entropy_profile(
    p: &ModelParams,
    cells: usize,
    boundary: Boundary,
    delta_kappa: f64,
) -> Result<EntropyProfile> {
    if cells % 2 != 0 {
        return Err(Error::InvalidInput(
            "entropy profiles need an even number of cells",
        ));
    }
    let g = grid(cells, boundary, delta_kappa)?;
    let c = correlation(p, &g, &fill_ground(p, &g))?;
    profile_from_correlation(&c, 1..cells, EntropyPolicy::Paired)
}

/// S(l) of the leading l cells for every l in `ls`.
pub fn profile_from_correlation(
    c: &CorrelationMatrix,
    ls: impl IntoIterator<Item = usize>,
    policy: EntropyPolicy,
) -> Result<EntropyProfile> {
    profile_with(c, ls, |es| bee(es, policy).value)
}

/// Profile of the entropy carried by real in-range spectrum values only.
pub fn in_range_profile(
    c: &CorrelationMatrix,
    ls: impl IntoIterator<Item = usize>,
) -> Result<EntropyProfile> {
    profile_with(c, ls, |es| C64::new(in_range_entropy(es), 0.0))
}

fn profile_with(
    c: &CorrelationMatrix,
    ls: impl IntoIterator<Item = usize>,
    f: impl Fn(&crate::entanglement::ESpectrum) -> C64,
) -> Result<EntropyProfile> {
    let samples = ls
        .into_iter()
        .map(|l| {
            let es = single_particle_es(&restrict(c, Region::leading(l))?)?;
            Ok((l, f(&es)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EntropyProfile {
        cells: c.cells(),
        boundary: c.grid.boundary,
        delta_kappa: c.grid.delta_kappa,
        samples,
    })
}

/// Conformal abscissa (1/3) ln[(L/π) sin(πl/L)].
pub fn chord_abscissa(cells: usize, l: usize) -> f64 {
    let lf = cells as f64;
    libm::log(lf / PI * libm::sin(PI * l as f64 / lf)) / 3.0
}

/// Complex least squares of S(l) against (1/3) ln[(L/π) sin(πl/L)].
pub fn fit_central_charge(
    profile: &EntropyProfile,
    window: Option<FitWindow>,
) -> Result<FitResult> {
    let window = window.unwrap_or(FitWindow::central(profile.cells));
    let (xs, ys): (Vec<f64>, Vec<C64>) = profile
        .samples
        .iter()
        .filter(|(l, _)| window.contains(*l) && *l > 0 && *l < profile.cells)
        .map(|&(l, s)| (chord_abscissa(profile.cells, l), s))
        .unzip();
    if xs.len() < 5 {
        return Err(Error::DegenerateAbscissae);
    }
    let f = complex_linear_fit(&xs, &ys)?;
    Ok(FitResult {
        c: f.slope,
        gamma: f.slope / 3.0,
        intercept: f.intercept,
        residual: f.residual_norm,
        window,
    })
}

/// Strength of a two-cell (four-site) period in S(l): mean|S(l+2) − S(l)| / mean|S(l+1) − S(l)|
/// over the central window. Small values mean S alternates between two branches.
pub fn two_cell_periodicity(profile: &EntropyProfile) -> f64 {
    let w = FitWindow::central(profile.cells);
    let s: Vec<C64> = profile
        .samples
        .iter()
        .filter(|(l, _)| w.contains(*l))
        .map(|x| x.1)
        .collect();
    if s.len() < 4 {
        return f64::NAN;
    }
    let mean = |lag: usize| {
        s.windows(lag + 1)
            .map(|x| (x[lag] - x[0]).norm())
            .sum::<f64>()
            / (s.len() - lag) as f64
    };
    mean(2) / mean(1)
}

/// Flag threshold for [`two_cell_periodicity`].
pub const PERIODIC_PATTERN_MAX: f64 = 0.25;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    #[test]
    fn synthetic_profile_recovers_c() {
        let c = c64(-2.0, 0.7);
        let samples = (1..60)
            .map(|l| (l, c * chord_abscissa(60, l) + c64(0.3, -0.1)))
            .collect();
        let p = EntropyProfile {
            cells: 60,
            boundary: Boundary::Pbc,
            delta_kappa: 0.0,
            samples,
        };
        let f = fit_central_charge(&p, None).unwrap();
        assert!((f.c - c).norm() < 1e-10);
        assert_eq!(f.gamma * 3.0, f.c);
        assert_eq!(
            f.window,
            FitWindow {
                l_min: 15,
                l_max: 45
            }
        );
    }

    #[test]
    fn too_few_points() {
        let samples = (1..4).map(|l| (l, c64(l as f64, 0.0))).collect();
        let p = EntropyProfile {
            cells: 8,
            boundary: Boundary::Pbc,
            delta_kappa: 0.0,
            samples,
        };
        assert_eq!(
            fit_central_charge(&p, None),
            Err(Error::DegenerateAbscissae)
        );
    }
}
