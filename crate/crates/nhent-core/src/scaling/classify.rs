use alloc::vec::Vec;
use core::f64::consts::PI;

use super::flow::run_point_params;
use crate::band::{
    band_energy, obc_edge_modes, Band, Boundary, EdgeMode, LambdaParams, ModelParams,
};
use crate::entanglement::{block_index, IND_DELTAS};
use crate::state::grid;
use crate::{Error, Result, C64};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpectrumKind {
    Real,
    Imaginary,
    Mixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EntropyClass {
    CMinus2,
    NonUniversal,
    ComplexDrift,
    FreeFermion,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CaseClassification {
    pub spectrum_kind: SpectrumKind,
    pub entropy_class: EntropyClass,
    /// Ind sign, `None` when unstable.
    pub ind: Option<i8>,
    /// OBC edge modes whose energies lie off the bulk spectrum.
    pub edge_modes: Vec<EdgeMode>,
    /// Fitted c at L = 40 and 80.
    pub fitted_c: [C64; 2],
}

pub const CLASSIFY_DELTA_KAPPA: f64 = 1e-8;

fn family_ok(p: &LambdaParams) -> bool {
    let scale = p.w.norm().max(p.v.norm()).max(p.u.norm()).max(1.0);
    let tol = 1e-10 * scale;
    let real_hops = p.w.im.abs() <= tol && p.v.im.abs() <= tol;
    let imag_hops = p.w.re.abs() <= tol && p.v.re.abs() <= tol;
    let family = (real_hops && p.u.re.abs() <= tol) || (imag_hops && p.u.im.abs() <= tol);
    let sl = libm::sqrt(p.lambda);
    let i = C64::new(0.0, 1.0);
    let tuned = [p.w - p.v, p.w + p.v].iter().any(|d| {
        let t = i * sl * d;
        (p.u - t).norm() <= tol || (p.u + t).norm() <= tol
    });
    p.lambda > 0.0 && family && tuned
}

/// Reads λ, w, v, u back from a λ-family ModelParams.
pub fn lambda_form(p: &ModelParams) -> Result<LambdaParams> {
    if p.w1.norm() == 0.0 || p.v1.norm() == 0.0 {
        return Err(Error::UnknownFamily);
    }
    let (lw, lv) = (p.w2 / p.w1, p.v2 / p.v1);
    let tol = 1e-12 * lw.norm().max(1.0);
    if (lw - lv).norm() > tol || lw.im.abs() > tol || lw.re <= 0.0 {
        return Err(Error::UnknownFamily);
    }
    Ok(LambdaParams::new(lw.re, p.w1, p.v1, p.u))
}

pub fn spectrum_kind(p: &ModelParams, cells: usize, delta_kappa: f64) -> Result<SpectrumKind> {
    let g = grid(cells, Boundary::Pbc, delta_kappa)?;
    let (mut im, mut re) = (0.0f64, 0.0f64);
    for &k in &g.ks {
        let e = band_energy(p, k, Band::Upper);
        im = im.max(e.im.abs());
        re = re.max(e.re.abs());
    }
    Ok(if im < 1e-8 {
        SpectrumKind::Real
    } else if re < 1e-8 {
        SpectrumKind::Imaginary
    } else {
        SpectrumKind::Mixed
    })
}

/// Edge energy farther than 1e-2·scale from every bulk energy on a fine k-grid.
fn discernible(p: &ModelParams, e: C64) -> bool {
    let n = 8192;
    let tol = 1e-2 * p.scale().max(1.0);
    (0..n).all(|j| {
        let k = -PI + 2.0 * PI * j as f64 / n as f64;
        let b = band_energy(p, k, Band::Upper);
        (e - b).norm() > tol && (e + b).norm() > tol
    })
}

pub fn entropy_class(c40: C64, c80: C64) -> EntropyClass {
    let stable = (c40 - c80).norm() < 0.1;
    if stable && (c80 + 2.0).norm() < 0.1 {
        EntropyClass::CMinus2
    } else if stable && (c80 - 1.0).norm() < 0.1 {
        EntropyClass::FreeFermion
    } else if !stable && c80.im.abs() > 0.1 {
        EntropyClass::ComplexDrift
    } else {
        EntropyClass::NonUniversal
    }
}

/// Table-I style row for an EP-tuned λ-family point.
pub fn classify_case(p: &LambdaParams) -> Result<CaseClassification> {
    if !family_ok(p) {
        return Err(Error::UnknownFamily);
    }
    let m = p.model();
    let spectrum_kind = spectrum_kind(&m, 80, CLASSIFY_DELTA_KAPPA)?;
    let c40 = run_point_params(&m, 40, CLASSIFY_DELTA_KAPPA, None)?.c;
    let c80 = run_point_params(&m, 80, CLASSIFY_DELTA_KAPPA, None)?.c;
    let ind = match block_index(&m, &IND_DELTAS) {
        Ok(s) => Some(s),
        Err(Error::IndexUnstable) => None,
        Err(e) => return Err(e),
    };
    let edge_modes = obc_edge_modes(&m, 40)?
        .into_iter()
        .filter(|em| discernible(&m, em.energy))
        .collect();
    Ok(CaseClassification {
        spectrum_kind,
        entropy_class: entropy_class(c40, c80),
        ind,
        edge_modes,
        fitted_c: [c40, c80],
    })
}

pub fn classify_model(p: &ModelParams) -> Result<CaseClassification> {
    classify_case(&lambda_form(p)?)
}
