use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

/// Every failure the computational core can report.
///
/// [`Error::category`] gives a stable machine-readable tag for the CLI.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("binorm {binorm:e} below floor {floor:e} at k = {k}")]
    BinormVanishing { k: f64, binorm: f64, floor: f64 },
    #[error("Bloch matrix is scalar at k = {k}")]
    DegenerateMatrix { k: f64 },
    #[error("QR iteration did not converge after {iterations} sweeps")]
    NoConvergence { iterations: usize },
    #[error("logarithm of zero")]
    LogOfZero,
    #[error("abscissae are degenerate")]
    DegenerateAbscissae,
    #[error("-u^2 = {re} + {im}i is not real")]
    NonComparable { re: f64, im: f64 },
    #[error("mode ({index}, {band}) already occupied")]
    ModeAlreadyOccupied { index: usize, band: i8 },
    #[error("mode ({index}, {band}) not occupied")]
    ModeNotOccupied { index: usize, band: i8 },
    #[error("block index sign unstable")]
    IndexUnstable,
    #[error("spectrum is complex (max |Im e| = {max_imag:e})")]
    ComplexSpectrum { max_imag: f64 },
    #[error("parameters outside the classified lambda families")]
    UnknownFamily,
    #[error("size {size} exceeds dense budget {max}")]
    SizeBudgetExceeded { size: usize, max: usize },
    #[error("ground state degenerate: Re e0 = Re e1 = {re}")]
    GroundDegenerate { re: f64 },
    #[error("invalid input: {0}")]
    InvalidInput(&'static str),
}

impl Error {
    pub fn category(&self) -> &'static str {
        match self {
            Error::BinormVanishing { .. } => "BinormVanishing",
            Error::DegenerateMatrix { .. } => "DegenerateMatrix",
            Error::NoConvergence { .. } => "NoConvergence",
            Error::LogOfZero => "LogOfZero",
            Error::DegenerateAbscissae => "DegenerateAbscissae",
            Error::NonComparable { .. } => "NonComparable",
            Error::ModeAlreadyOccupied { .. } => "ModeAlreadyOccupied",
            Error::ModeNotOccupied { .. } => "ModeNotOccupied",
            Error::IndexUnstable => "IndexUnstable",
            Error::ComplexSpectrum { .. } => "ComplexSpectrum",
            Error::UnknownFamily => "UnknownFamily",
            Error::SizeBudgetExceeded { .. } => "SizeBudgetExceeded",
            Error::GroundDegenerate { .. } => "GroundDegenerate",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }
}
