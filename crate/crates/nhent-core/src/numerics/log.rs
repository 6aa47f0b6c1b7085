use crate::{Error, Result, C64};

/// Branch choice for logarithms of entanglement-spectrum values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogBranch {
    /// Imaginary part in (−π, π].
    Principal,
    /// ln|x| on the negative real axis, principal elsewhere.
    Magnitude,
}

pub fn branch_log(x: C64, branch: LogBranch) -> Result<C64> {
    if x.re == 0.0 && x.im == 0.0 {
        return Err(Error::LogOfZero);
    }
    match branch {
        LogBranch::Magnitude if x.im == 0.0 && x.re < 0.0 => Ok(C64::new(libm::log(-x.re), 0.0)),
        _ => Ok(x.ln()),
    }
}
