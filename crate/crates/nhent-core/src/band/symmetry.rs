use core::f64::consts::PI;

use super::params::ModelParams;
use crate::{Error, Result, C64};

type M2 = [[C64; 2]; 2];

const SYMMETRY_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetryFlag {
    pub holds: bool,
    pub residual: f64,
}

impl SymmetryFlag {
    fn from_residual(residual: f64) -> Self {
        Self {
            holds: residual < SYMMETRY_TOL,
            residual,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetryReport {
    pub pseudo_hermitian: SymmetryFlag,
    pub screw_pt: SymmetryFlag,
    pub anti_screw_pt: SymmetryFlag,
    pub nh_chiral: SymmetryFlag,
    pub ssh_similar: SymmetryFlag,
}

fn mul(a: &M2, b: &M2) -> M2 {
    let mut c = [[C64::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

fn dist(a: &M2, b: &M2) -> f64 {
    let mut s = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            s += (a[i][j] - b[i][j]).norm_sqr();
        }
    }
    libm::sqrt(s)
}

fn conj(a: &M2) -> M2 {
    [
        [a[0][0].conj(), a[0][1].conj()],
        [a[1][0].conj(), a[1][1].conj()],
    ]
}

fn adjoint(a: &M2) -> M2 {
    [
        [a[0][0].conj(), a[1][0].conj()],
        [a[0][1].conj(), a[1][1].conj()],
    ]
}

fn neg(a: &M2) -> M2 {
    [[-a[0][0], -a[0][1]], [-a[1][0], -a[1][1]]]
}

/// U h U⁻¹ for invertible U.
fn conjugate_by(u: &M2, h: &M2) -> M2 {
    let det = u[0][0] * u[1][1] - u[0][1] * u[1][0];
    let inv = [
        [u[1][1] / det, -u[0][1] / det],
        [-u[1][0] / det, u[0][0] / det],
    ];
    mul(&mul(u, h), &inv)
}

/// Ratio λ = w2/w1 (or v2/v1 when w1 vanishes) used to build the symmetry operators.
fn lambda_of(p: &ModelParams) -> C64 {
    if p.w1.norm() > 0.0 {
        p.w2 / p.w1
    } else if p.v1.norm() > 0.0 {
        p.v2 / p.v1
    } else {
        C64::new(1.0, 0.0)
    }
}

/// Residuals of the λ-family symmetry relations, maximised over a uniform k-grid.
///
/// Operators (in this crate's convention, λ on the lower-left hopping):
/// U_psH = diag(√λ, 1/√λ); U_PT = [[0, 1/√λ], [√λ, 0]]; U_aPT = i·U_PT;
/// U_nHCh = diag(1/√λ, −√λ); S = diag(1, √λ) mapping onto a reciprocal chain
/// with hoppings √λ·w1, √λ·v1.
pub fn symmetry_report(p: &ModelParams, kgrid_size: usize) -> Result<SymmetryReport> {
    if kgrid_size < 8 {
        return Err(Error::InvalidInput("symmetry_report needs kgrid_size >= 8"));
    }
    let zero = C64::new(0.0, 0.0);
    let sl = lambda_of(p).sqrt();
    let u_psh = [[sl, zero], [zero, sl.inv()]];
    let u_pt = [[zero, sl.inv()], [sl, zero]];
    let i = C64::new(0.0, 1.0);
    let u_apt = [[zero, i / sl], [i * sl, zero]];
    let u_nhch = [[sl.inv(), zero], [zero, -sl]];
    let s = [[C64::new(1.0, 0.0), zero], [zero, sl]];
    let (w, v) = (sl * p.w1, sl * p.v1);

    let mut r = [0.0f64; 5];
    for n in 0..kgrid_size {
        let k = -PI + 2.0 * PI * (n as f64 + 0.5) / kgrid_size as f64;
        let h = p.bloch(k);
        let hd = adjoint(&h);
        let hc = conj(&h);
        r[0] = r[0].max(dist(&conjugate_by(&u_psh, &h), &hd));
        r[1] = r[1].max(dist(&conjugate_by(&u_pt, &h), &hc));
        r[2] = r[2].max(dist(&conjugate_by(&u_apt, &h), &neg(&hc)));
        r[3] = r[3].max(dist(&conjugate_by(&u_nhch, &hd), &neg(&h)));
        let ssh = [
            [p.u, w * C64::from_polar(1.0, -k) + v],
            [w * C64::from_polar(1.0, k) + v, -p.u],
        ];
        let sinv = [[C64::new(1.0, 0.0), zero], [zero, sl.inv()]];
        r[4] = r[4].max(dist(&mul(&mul(&sinv, &h), &s), &ssh));
    }
    Ok(SymmetryReport {
        pseudo_hermitian: SymmetryFlag::from_residual(r[0]),
        screw_pt: SymmetryFlag::from_residual(r[1]),
        anti_screw_pt: SymmetryFlag::from_residual(r[2]),
        nh_chiral: SymmetryFlag::from_residual(r[3]),
        ssh_similar: SymmetryFlag::from_residual(r[4]),
    })
}
