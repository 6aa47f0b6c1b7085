//! Biorthogonal Fermi seas on twisted momentum grids and their correlation matrices.

mod correlation;
mod grid;
mod nambu;
mod occupation;

pub use correlation::{correlation, correlation_with_floor, occupied_modes, CorrelationMatrix};
pub use grid::{grid, MomentumGrid};
pub use nambu::{
    nambu_chain_correlation, nambu_correlation, tfim_bdg_bloch, BdgConvention, NambuCorrelation,
    TfimParams,
};
pub use occupation::{
    add_quasiparticle, fill_below, fill_ground, fills, remove_mode, OccupationSet, Provenance,
    FILL_TIE_TOL,
};
