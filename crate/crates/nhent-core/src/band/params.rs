use crate::{c64, C64};

/// The five complex couplings of the two-band chain.
///
/// Bloch matrix h(k) = [[u, w1 e^{-ik} + v1], [w2 e^{ik} + v2, −u]] in the
/// (A, B) sublattice basis; v is the intra-cell and w the inter-cell hopping.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    pub u: C64,
    pub v1: C64,
    pub v2: C64,
    pub w1: C64,
    pub w2: C64,
}

impl ModelParams {
    pub const fn new(u: C64, v1: C64, v2: C64, w1: C64, w2: C64) -> Self {
        Self { u, v1, v2, w1, w2 }
    }

    /// Real couplings with u = 0.
    pub fn real(v1: f64, v2: f64, w1: f64, w2: f64) -> Self {
        Self::new(
            c64(0.0, 0.0),
            c64(v1, 0.0),
            c64(v2, 0.0),
            c64(w1, 0.0),
            c64(w2, 0.0),
        )
    }

    pub fn a_r(&self) -> C64 {
        self.w1 * self.w2 + self.v1 * self.v2 + self.u * self.u
    }

    pub fn b_r(&self) -> C64 {
        self.w2 * self.v1 + self.w1 * self.v2
    }

    pub fn s(&self) -> C64 {
        self.w2 * self.v1 - self.w1 * self.v2
    }

    /// a_r − b_r without cancellation.
    pub fn a_minus_b(&self) -> C64 {
        (self.w1 - self.v1) * (self.w2 - self.v2) + self.u * self.u
    }

    /// a_r + b_r without cancellation.
    pub fn a_plus_b(&self) -> C64 {
        (self.w1 + self.v1) * (self.w2 + self.v2) + self.u * self.u
    }

    pub fn h_ab(&self, k: f64) -> C64 {
        self.w1 * C64::from_polar(1.0, -k) + self.v1
    }

    pub fn h_ba(&self, k: f64) -> C64 {
        self.w2 * C64::from_polar(1.0, k) + self.v2
    }

    pub fn bloch(&self, k: f64) -> [[C64; 2]; 2] {
        [[self.u, self.h_ab(k)], [self.h_ba(k), -self.u]]
    }

    /// Largest coupling magnitude, a natural energy scale.
    pub fn scale(&self) -> f64 {
        [self.u, self.v1, self.v2, self.w1, self.w2]
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// v1* = v2, w1* = w2 and real u: h(k) Hermitian at every k.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        (self.v1.conj() - self.v2).norm() <= tol
            && (self.w1.conj() - self.w2).norm() <= tol
            && self.u.im.abs() <= tol
    }

    /// Adds a constant Δσ_z (artificial real or imaginary gap).
    pub fn with_gap(&self, delta: C64) -> Self {
        Self {
            u: self.u + delta,
            ..*self
        }
    }
}

/// λ-family: w1 = w, w2 = λw, v1 = v, v2 = λv.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaParams {
    pub lambda: f64,
    pub w: C64,
    pub v: C64,
    pub u: C64,
}

impl LambdaParams {
    pub const fn new(lambda: f64, w: C64, v: C64, u: C64) -> Self {
        Self { lambda, w, v, u }
    }

    pub fn model(&self) -> ModelParams {
        ModelParams::new(
            self.u,
            self.v,
            self.v * self.lambda,
            self.w,
            self.w * self.lambda,
        )
    }
}

impl From<LambdaParams> for ModelParams {
    fn from(p: LambdaParams) -> Self {
        p.model()
    }
}
