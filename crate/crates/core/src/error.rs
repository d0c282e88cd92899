//! Error types shared across the crate.

use thiserror::Error;

/// Errors from exact scalar, polynomial and number-field arithmetic.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    /// Inversion in ℚ(i)\[α\]/(m) met a zero divisor: `m` is reducible and the
    /// named factor witnesses the split.
    #[error("modulus is reducible; discovered factor {factor}")]
    ZeroDivisor { factor: String },
    #[error("wedge degree {0} exceeds the ambient frame (4 one-forms)")]
    DegreeOverflow(usize),
    #[error("the zero form is not allowed here")]
    ZeroForm,
    #[error("expected a real form (equal to its conjugate)")]
    NotReal,
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    #[error("{0}")]
    Unsupported(String),
}

/// Parse failures carry a position so the CLI can point at the offending token.
#[derive(Debug, Clone, Error, PartialEq)]
#[error("parse error at {line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }
}

/// Failures of blow-up and reduction operations.
#[derive(Debug, Error)]
pub enum BlowupError {
    #[error("cannot blow up a point where the form is regular")]
    RegularCenter,
    #[error("coefficients vanish identically along the divisor; content was not fully stripped")]
    ContentNotStripped,
    #[error("reduction exceeded maximum depth {max_depth}")]
    DepthExceeded {
        max_depth: usize,
        partial: Box<crate::blowup::ReductionTree>,
    },
    #[error("number-field centers disabled by configuration: {0}")]
    ExtensionDisabled(String),
    #[error("center lies in a second-level extension; one extension level is supported")]
    TowerTooDeep,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Failures of classification operations.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum ClassifyError {
    #[error("form is regular at the requested center")]
    RegularCenter,
    #[error("linear part has zero determinant; the eigenvalue ratio is undefined")]
    ZeroDeterminant,
    #[error("operation requires a saddle-node singularity")]
    NotSaddleNode,
    #[error("operation requires a simple singularity")]
    NotSimple,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Failures of holonomy construction, evaluation and orbit iteration.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum HolonomyError {
    #[error("|v| = {value} lies outside the validity radius {radius}")]
    OutsideRadius { value: f64, radius: f64 },
    #[error("adaptive integrator failed: {0}")]
    IntegratorFailure(String),
    #[error("parameters invalid: {0}")]
    BadParameters(String),
}

/// Failures of the Rolle evidence and verdict operations.
#[derive(Debug, Error)]
pub enum RolleError {
    #[error("reduction tree still has non-simple leaves; reduce before asking for a verdict")]
    NotReduced,
    #[error("sample point lies on a coordinate axis where the integral is undefined")]
    SampleOnAxis,
    #[error("leaf integration failed after {crossings} crossings: {message}")]
    IntegrationFailure { crossings: usize, message: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Failures of closed meromorphic form construction.
#[derive(Debug, Error)]
pub enum LogFormError {
    #[error("pole factors must be pairwise coprime: factors {0} and {1} share a component")]
    NotCoprime(String, String),
    #[error("pole factors must be nonconstant")]
    ConstantFactor,
    #[error("pole factor {0} is not squarefree")]
    NotSquarefree(String),
    #[error("operation requires a logarithmic form (simple poles, no exact part)")]
    NotLogarithmic,
    #[error("residue along {0} must be real")]
    NonRealResidue(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
