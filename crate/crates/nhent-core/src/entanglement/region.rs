use crate::numerics::ComplexMatrix;
use crate::state::CorrelationMatrix;
use crate::{Error, Result};

/// Contiguous block of whole unit cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Region {
    pub start: usize,
    pub len: usize,
}

impl Region {
    pub fn new(start: usize, len: usize) -> Self {
        Self { start, len }
    }

    /// The first `len` cells.
    pub fn leading(len: usize) -> Self {
        Self { start: 0, len }
    }
}

/// 2l×2l principal submatrix on the region's sites.
pub fn restrict(c: &CorrelationMatrix, region: Region) -> Result<ComplexMatrix> {
    restrict_matrix(&c.matrix, region)
}

pub fn restrict_matrix(m: &ComplexMatrix, region: Region) -> Result<ComplexMatrix> {
    let cells = m.rows() / 2;
    if region.len == 0 || region.start + region.len > cells {
        return Err(Error::InvalidInput(
            "region must be a non-empty block inside the chain",
        ));
    }
    Ok(m.submatrix(
        2 * region.start,
        2 * region.start,
        2 * region.len,
        2 * region.len,
    ))
}
