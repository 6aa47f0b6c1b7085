//! Entanglement spectra, bi-orthogonal entropy and correlation-matrix diagnostics.

mod diagnostics;
mod entropy;
mod region;
mod spectrum;

pub use diagnostics::{
    block_determinants, block_index, block_index_with, bound_state_divergence, exceptional_modes,
    increment_ratios, log_growth, remove_exceptional, LogGrowth, IND_CELLS, IND_DELTAS,
};
pub use entropy::{
    entropy_of_density_values, entropy_of_values, is_real, xlogx, EntropyPolicy, EntropyValue,
    REAL_TOL, ZERO_TOL,
};
pub use region::{restrict, restrict_matrix, Region};
pub use spectrum::{
    bee, in_range_entropy, many_body_es, single_particle_es, ESpectrum, ManyBodyES, Pair, PairKind,
    IN_RANGE_IMAG_TOL, MANY_BODY_MAX, PAIR_TOL, TRIVIAL_TOL,
};

use crate::state::CorrelationMatrix;
use crate::Result;

/// Entropy of the leading `l` cells.
pub fn region_entropy(
    c: &CorrelationMatrix,
    l: usize,
    policy: EntropyPolicy,
) -> Result<EntropyValue> {
    Ok(bee(
        &single_particle_es(&restrict(c, Region::leading(l))?)?,
        policy,
    ))
}
