use crate::numerics::{branch_log, LogBranch};
use crate::C64;

/// How logs of spectrum values off [0, 1] are taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum EntropyPolicy {
    /// Principal branch everywhere.
    Principal,
    /// ln|x| for exactly real negative x, principal elsewhere.
    Magnitude,
    /// Values real to within [`REAL_TOL`] (relative) are projected onto the real axis
    /// and take ln|x|; genuinely complex values take the principal branch.
    #[default]
    Paired,
}

/// Relative imaginary part below which a spectrum value counts as real.
pub const REAL_TOL: f64 = 1e-6;
/// Values (after projection) smaller than this contribute nothing.
pub const ZERO_TOL: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyValue {
    pub value: C64,
    pub policy: EntropyPolicy,
}

pub fn is_real(q: C64) -> bool {
    q.im.abs() <= REAL_TOL * q.norm().max(1.0)
}

/// −q ln q under `policy`; zero for |q| below [`ZERO_TOL`].
pub fn xlogx(q: C64, policy: EntropyPolicy) -> C64 {
    let q = match policy {
        EntropyPolicy::Paired if is_real(q) => C64::new(q.re, 0.0),
        _ => q,
    };
    if q.norm() < ZERO_TOL {
        return C64::new(0.0, 0.0);
    }
    let branch = match policy {
        EntropyPolicy::Principal => LogBranch::Principal,
        EntropyPolicy::Magnitude | EntropyPolicy::Paired => LogBranch::Magnitude,
    };
    match branch_log(q, branch) {
        Ok(l) => -(q * l),
        Err(_) => C64::new(0.0, 0.0),
    }
}

/// −Σ [C ln C + (1 − C) ln(1 − C)] over single-particle values.
pub fn entropy_of_values(values: &[C64], policy: EntropyPolicy) -> EntropyValue {
    let one = C64::new(1.0, 0.0);
    let value = values
        .iter()
        .map(|&c| xlogx(c, policy) + xlogx(one - c, policy))
        .sum();
    EntropyValue { value, policy }
}

/// −Σ λ ln λ over many-body (density-matrix) eigenvalues.
pub fn entropy_of_density_values(values: &[C64], policy: EntropyPolicy) -> EntropyValue {
    EntropyValue {
        value: values.iter().map(|&c| xlogx(c, policy)).sum(),
        policy,
    }
}
