/// Shared tolerance record. Every threshold used by the geometry, the
/// classifier and the solver lives here so callers can override them as a
/// unit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Residual bound for accepted roots, relative to `max(|c2|, 1)`.
    pub root: f64,
    /// Degeneracy classification threshold, relative to `s = max(|c1|^2, |c2|, 1)`.
    pub degenerate: f64,
    /// Collinearity test for `{0, w1, w2}`, relative to `|w1|·|w2|`.
    pub collinear: f64,
    /// Line-circle tangency: miss slack and half-chord collapse, relative to the radius.
    pub tangent: f64,
    /// Maximum relative disagreement with the oracle before a result is
    /// replaced by the oracle roots.
    pub agreement: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            root: 1e-9,
            degenerate: 1e-12,
            collinear: 1e-12,
            tangent: 1e-12,
            agreement: 1e-8,
        }
    }
}

/// Solver configuration, passed by value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    pub tol: Tolerances,
    /// Apply up to two Newton steps to each geometric intersection.
    pub polish: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            tol: Tolerances::default(),
            polish: true,
        }
    }
}

impl SolverConfig {
    pub fn without_polish(self) -> Self {
        Self {
            polish: false,
            ..self
        }
    }
}
