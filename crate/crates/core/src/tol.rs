use serde::Serialize;

/// Numeric tolerances shared by the spectral solver and the bound checks.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    /// A report holds iff `slack ≥ −holds_rel · scale`.
    pub holds_rel: f64,
    /// A report is an equality case iff `|slack| ≤ equality_rel · scale`.
    pub equality_rel: f64,
    /// Per-vertex factor on the allowed eigen residual.
    pub eigen_residual: f64,
    /// Per-vertex factor on the Jacobi off-diagonal stopping norm.
    pub off_diagonal: f64,
    /// Eigenvalues closer than this are reported as one multiple value.
    pub multiplicity: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            holds_rel: 1e-7,
            equality_rel: 1e-6,
            eigen_residual: 1e-9,
            off_diagonal: 1e-12,
            multiplicity: 1e-7,
        }
    }
}

impl Tolerances {
    /// Multiplies every ε by `factor`.
    pub fn scaled(self, factor: f64) -> Self {
        Tolerances {
            holds_rel: self.holds_rel * factor,
            equality_rel: self.equality_rel * factor,
            eigen_residual: self.eigen_residual * factor,
            off_diagonal: self.off_diagonal * factor,
            multiplicity: self.multiplicity * factor,
        }
    }

    /// Solver tolerances tightened 100× for re-verifying near-violations.
    pub fn tightened(self) -> Self {
        Tolerances { eigen_residual: self.eigen_residual / 100.0, off_diagonal: self.off_diagonal / 100.0, ..self }
    }
}
