//! Separability probabilities and state-space volumes of 4×4 (two-qubit /
//! two-rebit) density matrices.
//!
//! A 4×4 state is handled in the block form
//!
//! ```text
//!         ⎛ D₁   C  ⎞
//!   ρ  =  ⎜         ⎟ ,      D₁, D₂ self-adjoint,  C arbitrary 2×2,
//!         ⎝ C*   D₂ ⎠
//! ```
//!
//! over the real or complex field. The crate computes the fraction of the
//! state body (under the flat Hilbert–Schmidt measure, or the measure induced
//! by the √x monotone metric) occupied by states with positive partial
//! transpose, which for 2⊗2 systems is exactly the set of separable states.
//! Both deterministic quadrature and seeded Monte Carlo routes are provided
//! and cross-checked against each other; the reference values are
//! 29/64 (real, HS), 8/33 (complex, HS) and ≈0.26223 (real, √x).
//!
//! Modules:
//! - [`matrix`]: 2×2 / 4×4 self-adjoint algebra, positivity and PPT tests
//! - [`special`]: the unit-ball overlap function χ̃, elliptic integrals,
//!   dilogarithm, defect function and the reduced integration weights
//! - [`quad`]: adaptive Gauss–Kronrod quadrature
//! - [`psep`]: assembled probability and volume formulas
//! - [`sampling`]: seeded samplers and Monte Carlo estimators
//! - [`cli`]: the command-line front end used by the `sepvol` binary
//!
//! Runnable walkthroughs of each capability live in `examples/`.

// index loops mirror the matrix notation throughout
#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod matrix;
pub mod psep;
pub mod quad;
pub mod sampling;
pub mod special;

pub use matrix::{BlockState4, Density2, Field, Herm2, Mat2, OperatorIntervalPoint, Scalar};
pub use quad::QuadResult;
pub use sampling::{MCEstimate, SeededStream};

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// The lower-right block D₂ has zero determinant, so the Schur-complement
    /// positivity test cannot be formed.
    #[error("singular block: det(d2) = 0")]
    SingularBlock,
    /// Singular-value ratio of a singular matrix.
    #[error("singular input: det(a) = 0")]
    SingularInput,
    /// A square root / inverse square root of a non-positive matrix.
    #[error("matrix is not positive definite")]
    NotPositive,
    /// Argument outside the domain of a special function.
    #[error("{what} = {value} outside domain {domain}")]
    Domain {
        what: &'static str,
        value: f64,
        domain: &'static str,
    },
    /// Adaptive quadrature ran out of its evaluation budget. The partial
    /// result and its error estimate are preserved.
    #[error("quadrature did not converge after {evaluations} evaluations (budget {budget}): value {value}, error {abs_error:e}")]
    NoConvergence {
        value: f64,
        abs_error: f64,
        evaluations: u64,
        budget: u64,
    },
    /// The Jacobi eigensolver exhausted its sweep budget.
    #[error("jacobi eigensolver did not converge within {sweeps} sweeps")]
    NoConvergenceEig { sweeps: u32 },
    /// A sampled χ̃₂ table is too coarse for the requested tolerance.
    #[error("chi table too coarse: interpolation error {estimate:e} exceeds tolerance {tol:e}")]
    TableTooCoarse { estimate: f64, tol: f64 },
    /// Operation not defined for this field/measure combination.
    #[error("unsupported: {0}")]
    Unsupported(&'static str),
    /// Malformed state file or configuration.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// Filesystem problem reading or writing a state file.
    #[error("io: {0}")]
    Io(String),
}

/// A numerical result with an error bar, tagged by how it was obtained.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Estimate {
    /// Deterministic quadrature with its absolute error estimate.
    Quadrature(QuadResult),
    /// Monte Carlo mean with standard error, sample count and seed.
    MonteCarlo(MCEstimate),
}

impl Estimate {
    pub fn value(&self) -> f64 {
        match self {
            Estimate::Quadrature(q) => q.value,
            Estimate::MonteCarlo(m) => m.mean,
        }
    }

    pub fn error_bar(&self) -> f64 {
        match self {
            Estimate::Quadrature(q) => q.abs_error_estimate,
            Estimate::MonteCarlo(m) => m.std_error,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Field;
    use crate::sampling::sep_fraction_mc;

    #[test]
    fn estimate_unifies_both_routes() {
        let q = Estimate::Quadrature(crate::psep::psep_real_hs(1e-9).unwrap().probability);
        let m = Estimate::MonteCarlo(sep_fraction_mc(
            Field::Real,
            40_000,
            SeededStream::new(1, 0),
            2,
        ));
        // both report the same quantity within the MC error bar
        assert!((q.value() - m.value()).abs() < 4.0 * m.error_bar());
        assert!(q.error_bar() < m.error_bar());
        let json = serde_json::to_value(&m).unwrap();
        assert_eq!(json["kind"], "monte-carlo");
        let json = serde_json::to_value(&q).unwrap();
        assert_eq!(json["kind"], "quadrature");
    }
}
