use alloc::vec::Vec;

use super::profile::{fit_central_charge, profile_from_correlation, FitResult, FitWindow};
use crate::band::{Boundary, ModelParams};
use crate::entanglement::EntropyPolicy;
use crate::state::{correlation, fill_ground, grid};
use crate::{c64, Error, Result, C64};

/// w1 = w2 = 1, v1 = 1 + m, v2 = 1 + m − r_h, u = 0.
pub fn field_model_params(m: f64, r_h: f64) -> ModelParams {
    ModelParams::new(
        c64(0.0, 0.0),
        c64(1.0 + m, 0.0),
        c64(1.0 + m - r_h, 0.0),
        c64(1.0, 0.0),
        c64(1.0, 0.0),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExceptionalLine {
    /// m = 0
    MZero,
    /// m = r_h
    MEqualsRh,
    /// m + 2 = r_h
    MPlusTwoEqualsRh,
}

pub fn exceptional_lines(m: f64, r_h: f64) -> Vec<ExceptionalLine> {
    let tol = 1e-12;
    let mut out = Vec::new();
    if m.abs() <= tol {
        out.push(ExceptionalLine::MZero);
    }
    if (m - r_h).abs() <= tol {
        out.push(ExceptionalLine::MEqualsRh);
    }
    if (m + 2.0 - r_h).abs() <= tol {
        out.push(ExceptionalLine::MPlusTwoEqualsRh);
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub enum SweepAxis {
    Cells(Vec<usize>),
    DeltaKappa(Vec<f64>),
    Rh(Vec<f64>),
    /// L^ζ·δκ = invariant along the listed chain lengths.
    Constrained {
        zeta: f64,
        invariant: f64,
        cells: Vec<usize>,
    },
}

/// A sweep of the field-theoretic model; fields not on the axis stay fixed.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub m: f64,
    pub r_h: f64,
    pub cells: usize,
    pub delta_kappa: f64,
    pub axis: SweepAxis,
    /// Constant Δσ_z added to h(k) (real or imaginary artificial gap).
    pub gap: Option<C64>,
    pub window: Option<FitWindow>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub m: f64,
    pub r_h: f64,
    pub cells: usize,
    pub delta_kappa: f64,
    pub zeta: Option<f64>,
    pub gap: Option<C64>,
}

impl SweepPoint {
    pub fn params(&self) -> ModelParams {
        let p = field_model_params(self.m, self.r_h);
        match self.gap {
            Some(d) => p.with_gap(d),
            None => p,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub point: SweepPoint,
    pub result: Result<FitResult>,
}

/// Points of a sweep in input order.
///
/// ζ is accepted on [1, 2] so that the Lδκ-invariant curve (ζ = 1) can be drawn
/// alongside the L²δκ one.
pub fn sweep_points(spec: &SweepSpec) -> Result<Vec<SweepPoint>> {
    let base = SweepPoint {
        m: spec.m,
        r_h: spec.r_h,
        cells: spec.cells,
        delta_kappa: spec.delta_kappa,
        zeta: None,
        gap: spec.gap,
    };
    let pts = match &spec.axis {
        SweepAxis::Cells(ls) => ls
            .iter()
            .map(|&cells| SweepPoint { cells, ..base })
            .collect(),
        SweepAxis::DeltaKappa(ds) => ds
            .iter()
            .map(|&delta_kappa| SweepPoint {
                delta_kappa,
                ..base
            })
            .collect(),
        SweepAxis::Rh(rs) => rs.iter().map(|&r_h| SweepPoint { r_h, ..base }).collect(),
        SweepAxis::Constrained {
            zeta,
            invariant,
            cells,
        } => {
            if !(1.0..=2.0).contains(zeta) {
                return Err(Error::InvalidInput("zeta must lie in [1, 2]"));
            }
            cells
                .iter()
                .map(|&l| SweepPoint {
                    cells: l,
                    delta_kappa: invariant / libm::pow(l as f64, *zeta),
                    zeta: Some(*zeta),
                    ..base
                })
                .collect()
        }
    };
    Ok(pts)
}

/// Central-charge fit at one sweep point, evaluating only the fit window.
pub fn run_point(point: &SweepPoint, window: Option<FitWindow>) -> Result<FitResult> {
    run_point_params(&point.params(), point.cells, point.delta_kappa, window)
}

/// PBC ground-state fit of c for arbitrary couplings, evaluating only the fit window.
pub fn run_point_params(
    p: &ModelParams,
    cells: usize,
    delta_kappa: f64,
    window: Option<FitWindow>,
) -> Result<FitResult> {
    if cells % 2 != 0 || cells < 8 {
        return Err(Error::InvalidInput(
            "fit chain length must be even and at least 8",
        ));
    }
    let g = grid(cells, Boundary::Pbc, delta_kappa)?;
    let c = correlation(p, &g, &fill_ground(p, &g))?;
    let w = window.unwrap_or(FitWindow::central(cells));
    let prof = profile_from_correlation(
        &c,
        w.l_min.max(1)..=w.l_max.min(cells - 1),
        EntropyPolicy::Paired,
    )?;
    fit_central_charge(&prof, Some(w))
}

/// Fitted c along a sweep; a failing point is recorded and the sweep continues.
pub fn c_flow(spec: &SweepSpec) -> Result<Vec<SweepRecord>> {
    Ok(sweep_points(spec)?
        .into_iter()
        .map(|point| SweepRecord {
            point,
            result: run_point(&point, spec.window),
        })
        .collect())
}
