use alloc::vec::Vec;

use super::entropy::{entropy_of_values, is_real, EntropyPolicy, EntropyValue};
use crate::numerics::{eigenvalues, ComplexMatrix};
use crate::{Error, Result, C64};

/// Greedy pairing accepts |C^α + C^β − 1| below this.
pub const PAIR_TOL: f64 = 1e-4;
/// Distance to 0 or 1 that counts as a trivial value.
pub const TRIVIAL_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairKind {
    Trivial,
    RealInRange,
    RealOutOfRange,
    Complex,
}

/// Indices into [`ESpectrum::values`]; `partner` is `None` for an unpaired value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pair {
    pub first: usize,
    pub partner: Option<usize>,
    pub kind: PairKind,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ESpectrum {
    /// Eigenvalues of C_A in the numerics ordering.
    pub values: Vec<C64>,
    /// ln(1/C − 1), principal branch; infinite at C = 0 or 1.
    pub ent_energies: Vec<C64>,
    pub pairs: Vec<Pair>,
}

impl ESpectrum {
    pub fn from_values(mut values: Vec<C64>) -> Self {
        values.sort_by(crate::numerics::eig_order);
        let ent_energies = values.iter().map(|&c| entanglement_energy(c)).collect();
        let pairs = pair_values(&values);
        Self {
            values,
            ent_energies,
            pairs,
        }
    }

    pub fn entropy(&self, policy: EntropyPolicy) -> EntropyValue {
        bee(self, policy)
    }

    /// Values not within [`TRIVIAL_TOL`] of 0 or 1.
    pub fn nontrivial(&self) -> impl Iterator<Item = C64> + '_ {
        self.values.iter().copied().filter(|&c| !is_trivial(c))
    }

    pub fn unpaired(&self) -> impl Iterator<Item = &Pair> {
        self.pairs.iter().filter(|p| p.partner.is_none())
    }
}

fn entanglement_energy(c: C64) -> C64 {
    if c.norm() < 1e-300 {
        return C64::new(f64::INFINITY, 0.0);
    }
    let x = c.inv() - C64::new(1.0, 0.0);
    if x.norm() == 0.0 {
        return C64::new(f64::NEG_INFINITY, 0.0);
    }
    x.ln()
}

fn is_trivial(c: C64) -> bool {
    c.norm() < TRIVIAL_TOL || (c - C64::new(1.0, 0.0)).norm() < TRIVIAL_TOL
}

fn kind_of(c: C64) -> PairKind {
    if is_trivial(c) {
        PairKind::Trivial
    } else if is_real(c) {
        if (-1e-9..=1.0 + 1e-9).contains(&c.re) {
            PairKind::RealInRange
        } else {
            PairKind::RealOutOfRange
        }
    } else {
        PairKind::Complex
    }
}

/// Repeatedly joins the globally best remaining (α, β) with |C^α + C^β − 1| < [`PAIR_TOL`].
fn pair_values(values: &[C64]) -> Vec<Pair> {
    let one = C64::new(1.0, 0.0);
    let n = values.len();
    let mut cands: Vec<(f64, usize, usize)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let d = (values[i] + values[j] - one).norm();
            if d < PAIR_TOL {
                cands.push((d, i, j));
            }
        }
    }
    cands.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
    let mut used = alloc::vec![false; n];
    let mut pairs = Vec::new();
    for (_, i, j) in cands {
        if used[i] || used[j] {
            continue;
        }
        used[i] = true;
        used[j] = true;
        pairs.push(Pair {
            first: i,
            partner: Some(j),
            kind: kind_of(values[i]),
        });
    }
    for i in 0..n {
        if !used[i] {
            pairs.push(Pair {
                first: i,
                partner: None,
                kind: kind_of(values[i]),
            });
        }
    }
    pairs.sort_by_key(|p| p.first);
    pairs
}

/// Entanglement spectrum of a restricted correlation matrix.
pub fn single_particle_es(c_a: &ComplexMatrix) -> Result<ESpectrum> {
    if !c_a.is_square() {
        return Err(Error::InvalidInput(
            "restricted correlation matrix must be square",
        ));
    }
    Ok(ESpectrum::from_values(eigenvalues(c_a)?))
}

/// Bi-orthogonal entanglement entropy of a spectrum.
pub fn bee(spectrum: &ESpectrum, policy: EntropyPolicy) -> EntropyValue {
    entropy_of_values(&spectrum.values, policy)
}

/// Largest |Im C| still counted by [`in_range_entropy`].
pub const IN_RANGE_IMAG_TOL: f64 = 0.1;

/// Entropy carried by the near-real values with 0 < Re C < 1, real parts only.
///
/// Isolates the ordinary (in-range) pairs when an SEP coexists with a diabolic point.
/// Those pairs pick up an O(1/L) imaginary part from the exceptional modes, hence
/// the loose [`IN_RANGE_IMAG_TOL`].
pub fn in_range_entropy(spectrum: &ESpectrum) -> f64 {
    let vals: Vec<C64> = spectrum
        .values
        .iter()
        .filter(|c| c.im.abs() < IN_RANGE_IMAG_TOL && c.re > 1e-9 && c.re < 1.0 - 1e-9)
        .map(|c| C64::new(c.re, 0.0))
        .collect();
    entropy_of_values(&vals, EntropyPolicy::Paired).value.re
}

/// Many-body entanglement levels λ_{s} = Π_n [½ + s_n (C^n − ½)].
#[derive(Debug, Clone, PartialEq)]
pub struct ManyBodyES {
    /// Single-particle values used, nearest ½ first.
    pub retained: Vec<C64>,
    /// Bit n of the index is s_n = + (set) or − (clear).
    pub levels: Vec<C64>,
}

pub const MANY_BODY_MAX: usize = 12;

/// Levels from the `m` values closest to ½.
pub fn many_body_es(spectrum: &ESpectrum, m: usize) -> Result<ManyBodyES> {
    if m > MANY_BODY_MAX {
        return Err(Error::SizeBudgetExceeded {
            size: m,
            max: MANY_BODY_MAX,
        });
    }
    let half = C64::new(0.5, 0.0);
    let mut vals = spectrum.values.clone();
    vals.sort_by(|a, b| {
        (a - half)
            .norm()
            .total_cmp(&(b - half).norm())
            .then(crate::numerics::eig_order(a, b))
    });
    vals.truncate(m);
    let levels = (0..1usize << vals.len())
        .map(|mask| {
            vals.iter()
                .enumerate()
                .map(|(n, &c)| {
                    if mask >> n & 1 == 1 {
                        c
                    } else {
                        C64::new(1.0, 0.0) - c
                    }
                })
                .product()
        })
        .collect();
    Ok(ManyBodyES {
        retained: vals,
        levels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    #[test]
    fn many_body_examples() {
        let es = ESpectrum::from_values(alloc::vec![c64(0.5, 0.0)]);
        assert_eq!(
            many_body_es(&es, 1).unwrap().levels,
            [c64(0.5, 0.0), c64(0.5, 0.0)]
        );
        let es = ESpectrum::from_values(alloc::vec![c64(0.5, 0.0), c64(0.5, 0.0), c64(0.01, 0.0)]);
        let mb = many_body_es(&es, 2).unwrap();
        assert!(mb
            .levels
            .iter()
            .all(|l| (l - c64(0.25, 0.0)).norm() < 1e-15));
        let es = ESpectrum::from_values(alloc::vec![c64(0.9, 0.0)]);
        let l = many_body_es(&es, 1).unwrap().levels;
        assert!((l[0] - c64(0.1, 0.0)).norm() < 1e-15 && (l[1] - c64(0.9, 0.0)).norm() < 1e-15);
        assert!(many_body_es(&es, 13).is_err());
    }

    #[test]
    fn pairing_kinds() {
        let es = ESpectrum::from_values(alloc::vec![
            c64(1.2, 0.0),
            c64(-0.2, 0.0),
            c64(0.5, 0.3),
            c64(0.5, -0.3),
            c64(0.3, 0.0),
            c64(0.7, 0.0),
            c64(0.0, 0.0),
            c64(0.42, 0.0),
        ]);
        let kinds: Vec<_> = es
            .pairs
            .iter()
            .map(|p| (es.values[p.first], p.partner.is_some(), p.kind))
            .collect();
        assert!(kinds.contains(&(c64(-0.2, 0.0), true, PairKind::RealOutOfRange)));
        assert!(kinds.contains(&(c64(0.3, 0.0), true, PairKind::RealInRange)));
        assert!(kinds.iter().any(|k| k.1 && k.2 == PairKind::Complex));
        assert_eq!(es.unpaired().count(), 2);
    }

    #[test]
    fn in_range_drops_out_of_range() {
        let es = ESpectrum::from_values(alloc::vec![c64(1.2, 0.0), c64(-0.2, 0.0), c64(0.5, 0.0)]);
        assert!((in_range_entropy(&es) - 2f64.ln()).abs() < 1e-15);
    }
}
