use alloc::vec::Vec;

use crate::band::Boundary;
use crate::entanglement::{entropy_of_values, EntropyPolicy};
use crate::numerics::eigenvalues;
use crate::scaling::{fit_central_charge, EntropyProfile, FitResult, FitWindow};
use crate::state::{nambu_chain_correlation, TfimParams};
use crate::Result;

/// Halved Nambu entropy of the leading l sites, l = 1..L−1, on the APBC (even-parity) ring.
pub fn tfim_entropy_profile(
    p: &TfimParams,
    sites: usize,
    delta_kappa: f64,
    policy: EntropyPolicy,
) -> Result<EntropyProfile> {
    let full = nambu_chain_correlation(p, sites, delta_kappa)?;
    let samples = (1..sites)
        .map(|l| {
            let vals = eigenvalues(&full.restrict(l).matrix)?;
            Ok((l, entropy_of_values(&vals, policy).value * 0.5))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EntropyProfile {
        cells: sites,
        boundary: Boundary::Apbc,
        delta_kappa,
        samples,
    })
}

pub fn tfim_fit(
    p: &TfimParams,
    sites: usize,
    delta_kappa: f64,
    window: Option<FitWindow>,
) -> Result<FitResult> {
    fit_central_charge(
        &tfim_entropy_profile(p, sites, delta_kappa, EntropyPolicy::Paired)?,
        window,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    #[test]
    fn gapped_chain_saturates() {
        let p = TfimParams::new(1.0, c64(0.5, 0.0));
        let prof = tfim_entropy_profile(&p, 40, 0.0, EntropyPolicy::Paired).unwrap();
        let (a, b) = (prof.get(10).unwrap(), prof.get(20).unwrap());
        assert!((a - b).norm() < 1e-6);
        assert!(a.im.abs() < 1e-12 && a.re > 0.0);
    }
}
