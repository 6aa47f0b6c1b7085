use crate::band::{traceless_eigenpair, Band};
use crate::numerics::{eigenvalues, ComplexMatrix};
use crate::{Error, Result, C64};

/// Eigen-analysis of [[u, a], [b, −u]].
#[derive(Debug, Clone, PartialEq)]
pub struct TwoLevelAnalysis {
    /// Lower then upper (by sign convention of the square root).
    pub eigenvalues: [C64; 2],
    /// Right eigenvectors; at coalescence both entries hold the single surviving vector.
    pub right: [[C64; 2]; 2],
    /// |l·R| of the unit-normalized left and right vectors of the upper level.
    pub binorm: f64,
    pub coalesced: bool,
}

const COALESCE_TOL: f64 = 1e-12;

fn unit(v: [C64; 2]) -> [C64; 2] {
    let n = libm::sqrt(v[0].norm_sqr() + v[1].norm_sqr());
    [v[0] / n, v[1] / n]
}

pub fn two_level(u: C64, a: C64, b: C64) -> TwoLevelAnalysis {
    let scale = u.norm().max(a.norm()).max(b.norm()).max(1.0);
    let disc = u * u + a * b;
    if disc.norm() <= COALESCE_TOL * scale * scale {
        // Nilpotent: the single eigenvector spans the kernel.
        let v = if a.norm() >= b.norm() {
            unit([a, -u])
        } else {
            unit([u, b])
        };
        let zero = C64::new(0.0, 0.0);
        return TwoLevelAnalysis {
            eigenvalues: [zero, zero],
            right: [v, v],
            binorm: 0.0,
            coalesced: true,
        };
    }
    let e = disc.sqrt();
    let pair =
        |band: Band, e: C64| traceless_eigenpair(0.0, band, e, [u, a, b], scale, f64::MIN_POSITIVE);
    match (pair(Band::Lower, -e), pair(Band::Upper, e)) {
        (Ok(lo), Ok(hi)) => TwoLevelAnalysis {
            eigenvalues: [-e, e],
            right: [unit(lo.right), unit(hi.right)],
            binorm: hi.binorm.norm(),
            coalesced: false,
        },
        _ => TwoLevelAnalysis {
            eigenvalues: [-e, e],
            right: [[C64::new(0.0, 0.0); 2]; 2],
            binorm: 0.0,
            coalesced: true,
        },
    }
}

/// H_s = σ^z + e^{iφ} σ^x, φ ∈ [0, π/2]; coalesces at φ = π/2.
pub fn toy_qubit(phi: f64) -> Result<TwoLevelAnalysis> {
    if !(0.0..=core::f64::consts::FRAC_PI_2 + 1e-12).contains(&phi) {
        return Err(Error::InvalidInput("phi must lie in [0, pi/2]"));
    }
    let x = C64::from_polar(1.0, phi);
    Ok(two_level(C64::new(1.0, 0.0), x, x))
}

#[derive(Debug, Clone, PartialEq)]
pub struct TwoQubitAnalysis {
    pub hamiltonian: ComplexMatrix,
    /// All four eigenvalues, sorted by real then imaginary part.
    pub eigenvalues: [C64; 4],
    /// Block on {|↑↑⟩, |↓↓⟩}, where the exceptional point lives.
    pub even: TwoLevelAnalysis,
    /// σ^x ⊗ σ^x on {|↑↓⟩, |↓↑⟩}: eigenvalues ±1 for every Φ.
    pub odd: [C64; 2],
}

/// H_d = σ^x ⊗ σ^x + e^{iΦ} (σ^z ⊗ 1 + 1 ⊗ σ^z) / 2, Φ ∈ [0, π/2].
pub fn toy_two_qubit(big_phi: f64) -> Result<TwoQubitAnalysis> {
    if !(0.0..=core::f64::consts::FRAC_PI_2 + 1e-12).contains(&big_phi) {
        return Err(Error::InvalidInput("Phi must lie in [0, pi/2]"));
    }
    let f = C64::from_polar(1.0, big_phi);
    let one = C64::new(1.0, 0.0);
    let zero = C64::new(0.0, 0.0);
    // basis |s1 s2⟩ with bit 0 the first spin, bit set meaning down
    let hamiltonian = ComplexMatrix::from_fn(4, 4, |r, c| {
        if r == c {
            let z = |bit: usize| if c >> bit & 1 == 0 { 1.0 } else { -1.0 };
            f * (0.5 * (z(0) + z(1)))
        } else if r == c ^ 3 {
            one
        } else {
            zero
        }
    });
    let v = eigenvalues(&hamiltonian)?;
    Ok(TwoQubitAnalysis {
        hamiltonian,
        eigenvalues: [v[0], v[1], v[2], v[3]],
        even: two_level(f, one, one),
        odd: [-one, one],
    })
}
