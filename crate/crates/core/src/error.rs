use thiserror::Error;

use crate::scalar::{format_scalar, Scalar};

/// Errors reported by the algebraic layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Jacobi identity fails on basis triple ({i},{j},{k}); residual {}", format_residual(.residual))]
    JacobiViolation {
        i: usize,
        j: usize,
        k: usize,
        residual: Vec<Scalar>,
    },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("Gram matrix is not symmetric")]
    NotSymmetric,
    #[error("Gram matrix is not antisymmetric")]
    NotAntisymmetric,
    #[error("bilinear form is not invariant: B([X,Y],Z) != B(X,[Y,Z])")]
    FormNotInvariant,
    #[error("bilinear form is degenerate")]
    DegenerateForm,
    #[error("endomorphism is not a skew-symmetric derivation")]
    NotSkewDerivation,
    #[error("2-form is not a symplectic structure")]
    NotSymplectic,
    #[error("map on inner derivations is not well defined: {0}")]
    WellDefinedness(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("cannot parse rational {0:?}")]
    BadRational(String),
}

fn format_residual(v: &[Scalar]) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(k, c)| format!("{}*e{}", format_scalar(c), k))
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}
