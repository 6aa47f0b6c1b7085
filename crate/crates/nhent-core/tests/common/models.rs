//! Parameter sets and real-space chains shared by the oracle tests.

use nhent_core::band::{real_space_hamiltonian, Boundary, LambdaParams, ModelParams};
use nhent_core::numerics::{inverse, ComplexMatrix};
use nhent_core::{c64, C64};

pub fn lam(l: f64, w: C64, v: C64, u: C64) -> ModelParams {
    LambdaParams::new(l, w, v, u).model()
}

/// One member of each parameter family used throughout the tests.
pub fn families() -> Vec<(&'static str, ModelParams)> {
    vec![
        (
            "real w,v; |w|<|v|",
            lam(1.0, c64(2.0, 0.0), c64(3.0, 0.0), c64(0.0, 1.0)),
        ),
        (
            "real w,v; |w|>|v|",
            lam(1.0, c64(3.0, 0.0), c64(2.0, 0.0), c64(0.0, 1.0)),
        ),
        (
            "imaginary w,v",
            lam(
                2.0,
                c64(0.0, 2.0),
                c64(0.0, -3.0),
                c64(-5.0 * 2f64.sqrt(), 0.0),
            ),
        ),
        ("k-square-root", ModelParams::real(1.0, 0.7, 1.0, 0.3)),
    ]
}

/// Periodic chain whose wrap bond carries the grid's twist, so that its
/// single-particle spectrum is the Bloch spectrum on that grid.
pub fn twisted_chain(p: &ModelParams, l: usize, theta: f64) -> ComplexMatrix {
    let mut h = real_space_hamiltonian(p, l, Boundary::Pbc).unwrap().matrix;
    let (a0, bl) = (0, 2 * l - 1);
    h[(a0, bl)] *= C64::from_polar(1.0, -theta);
    h[(bl, a0)] *= C64::from_polar(1.0, theta);
    h
}

/// The c = −2 configuration: λ = 1, w = 2, v = 3, u = i.
pub fn c2() -> ModelParams {
    lam(1.0, c64(2.0, 0.0), c64(3.0, 0.0), c64(0.0, 1.0))
}

/// Ground-state projector 1/2 (1 − sign H) of a gapped Hermitian H by Newton iteration.
pub fn projector(h: &ComplexMatrix) -> ComplexMatrix {
    let n = h.rows();
    let mut x = h.clone();
    for _ in 0..100 {
        let next = x.add(&inverse(&x).unwrap()).scale(c64(0.5, 0.0));
        let done = next.sub(&x).max_abs() < 1e-15;
        x = next;
        if done {
            break;
        }
    }
    ComplexMatrix::identity(n).sub(&x).scale(c64(0.5, 0.0))
}
