//! Central-charge fits, conformal towers, correlator exponents, c-flow sweeps
//! and the parameter-family classifier.

mod classify;
mod correlator;
mod flow;
mod profile;
mod tower;

pub use classify::{
    classify_case, classify_model, entropy_class, lambda_form, spectrum_kind, CaseClassification,
    EntropyClass, SpectrumKind, CLASSIFY_DELTA_KAPPA,
};
pub use correlator::{correlator_scaling, CorrelatorScaling};
pub use flow::{
    c_flow, exceptional_lines, field_model_params, run_point, run_point_params, sweep_points,
    ExceptionalLine, SweepAxis, SweepPoint, SweepRecord, SweepSpec,
};
pub use profile::{
    chord_abscissa, entropy_profile, fit_central_charge, in_range_profile,
    profile_from_correlation, two_cell_periodicity, EntropyProfile, FitResult, FitWindow,
    PERIODIC_PATTERN_MAX,
};
pub use tower::{conformal_tower, TowerResult, TOWER_WINDOW};
