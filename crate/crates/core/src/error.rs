use thiserror::Error;

use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by a non-unit: {0}")]
    NonUnit(String),

    #[error("invalid substitution: shift series has nonzero constant term {0}")]
    InvalidSubstitution(Rational),

    #[error("expected a simple pole at {pole}, found order {order}")]
    PoleMultiplicity { pole: Rational, order: usize },

    #[error("expansion depth {depth} is below the pole order {pole_order}")]
    Truncation { depth: usize, pole_order: usize },

    #[error("evaluation at a pole: {0}")]
    EvaluationAtPole(Rational),

    #[error("linear system is inconsistent (rank {rank}, augmented rank {augmented_rank})")]
    Inconsistent { rank: usize, augmented_rank: usize },

    #[error("degenerate weights: {0}")]
    DegenerateWeights(String),

    #[error("cannot parse weights at position {position} (token {token:?}): {reason}")]
    WeightParse { position: usize, token: String, reason: String },

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("normalization failure: {0}")]
    Normalization(String),

    #[error("malformed Yukawa coupling: constant term {0}, expected 5")]
    MalformedCoupling(Rational),

    #[error("integrality violation at degree {degree}: n_d = {value}")]
    Integrality { degree: usize, value: Rational },

    #[error("recursion structure violated at fixed point {alpha}, degree {degree}: {reason}")]
    Structure { alpha: usize, degree: usize, reason: String },

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("z-order {z_order} leaves {nullity} free parameters at degree {degree}; increase it")]
    InsufficientZOrder { z_order: usize, degree: usize, nullity: usize },

    #[error("no polynomial solution at degree {degree}")]
    NoPolynomialSolution { degree: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
