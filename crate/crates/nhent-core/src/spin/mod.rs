//! Spin-chain analogues: the complex-field Ising chain through its BdG
//! correlation matrix, dense biorthogonal ED of the Yang–Lee chain, and the
//! one- and two-qubit exceptional-point toys.

mod ed;
mod pt_line;
mod tfim;
mod toy;

pub use crate::state::{
    nambu_chain_correlation, nambu_correlation, tfim_bdg_bloch, BdgConvention, NambuCorrelation,
    TfimParams,
};
pub use ed::{
    biorthogonal_ground, ed_entropy, ed_entropy_profile, reduced_density, yang_lee_hamiltonian,
    BiorthogonalPair, ReducedDensityMatrix, YangLeeParams, YangLeeSector, ED_BINORM_FLOOR,
    ED_MAX_SITES,
};
pub use pt_line::{
    extrapolate_threshold, ground_imag, max_imag, pt_threshold, reality_threshold, yang_lee_c_eff,
    Extrapolation, YangLeeFit, PT_IMAG_TOL,
};
pub use tfim::{tfim_entropy_profile, tfim_fit};
pub use toy::{toy_qubit, toy_two_qubit, two_level, TwoLevelAnalysis, TwoQubitAnalysis};
