use crate::{Error, Result, C64};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearFit {
    pub slope: C64,
    pub intercept: C64,
    /// sqrt(Σ |y − (a x + b)|²)
    pub residual_norm: f64,
    pub n_points: usize,
}

/// Least squares y ≈ a x + b with real abscissae and complex ordinates.
///
/// Real and imaginary parts decouple, so the normal equations are the usual
/// centred ones applied to complex sums.
pub fn complex_linear_fit(xs: &[f64], ys: &[C64]) -> Result<LinearFit> {
    if xs.len() != ys.len() {
        return Err(Error::InvalidInput("xs and ys differ in length"));
    }
    let n = xs.len();
    if n < 2 {
        return Err(Error::DegenerateAbscissae);
    }
    let nf = n as f64;
    let xm = xs.iter().sum::<f64>() / nf;
    let ym = ys.iter().sum::<C64>() / nf;
    let sxx: f64 = xs.iter().map(|x| (x - xm) * (x - xm)).sum();
    let xscale = xs
        .iter()
        .fold(0.0f64, |m, x| m.max(x.abs()))
        .max(f64::MIN_POSITIVE);
    if !(sxx > (f64::EPSILON * xscale) * (f64::EPSILON * xscale) * nf) {
        return Err(Error::DegenerateAbscissae);
    }
    let sxy: C64 = xs.iter().zip(ys).map(|(x, y)| (y - ym) * (x - xm)).sum();
    let slope = sxy / sxx;
    let intercept = ym - slope * xm;
    let rss: f64 = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| (y - (slope * x + intercept)).norm_sqr())
        .sum();
    Ok(LinearFit {
        slope,
        intercept,
        residual_norm: libm::sqrt(rss),
        n_points: n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    #[test]
    fn exact_complex_line() {
        let f =
            complex_linear_fit(&[0.0, 1.0, 2.0], &[c64(0., 0.), c64(1., 1.), c64(2., 2.)]).unwrap();
        assert!((f.slope - c64(1.0, 1.0)).norm() < 1e-14);
        assert!(f.intercept.norm() < 1e-14);
        assert!(f.residual_norm < 1e-14);
    }

    #[test]
    fn two_points_constant() {
        let f = complex_linear_fit(&[0.0, 1.0], &[c64(3., 0.), c64(3., 0.)]).unwrap();
        assert!(f.slope.norm() < 1e-15);
        assert!((f.intercept - c64(3.0, 0.0)).norm() < 1e-15);
        assert!(f.residual_norm < 1e-12);
    }

    #[test]
    fn equal_abscissae_rejected() {
        let e = complex_linear_fit(&[1.0, 1.0, 1.0], &[c64(0., 0.), c64(1., 0.), c64(2., 0.)]);
        assert_eq!(e, Err(Error::DegenerateAbscissae));
    }
}
