use thiserror::Error;

/// Errors shared across the algebra, local-model, closed-form, and oracle layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero rational function")]
    DivisionByZero,

    #[error("rational function has an identically zero denominator")]
    ZeroDenominator,

    #[error("denominator vanishes at the origin; function has no power-series expansion there")]
    PoleAtOrigin,

    #[error("zeta factor of the identically zero exponent")]
    ZeroExponent,

    #[error("exponent form with negative variable degree ({0}) cannot be represented")]
    NegativeDegree(i64),

    #[error("substitution image must be a nonzero monomial")]
    ZeroSubstitution,

    #[error("specialization leaves a vanishing denominator")]
    SpecializationPole,

    #[error("no {n}-dimensional form with discriminant sign {epsilon} at a good place")]
    InadmissiblePair { n: u32, epsilon: i32 },

    #[error("{0} is not an odd prime")]
    InvalidPrime(u64),

    #[error("residue field cardinality must be an exact rational >= 3")]
    InvalidCardinality,

    #[error("{value} is not a unit modulo {p}")]
    NonUnitResidue { value: i64, p: u64 },

    #[error("discriminant representative {delta} has the wrong square class for sign {epsilon}")]
    InconsistentDiscriminant { delta: u64, epsilon: i32 },

    #[error("operation requires residue data (an odd prime p) on the place")]
    MissingResidueData,

    #[error("work budget exceeded: requires {required} cells, budget is {budget}")]
    BudgetExceeded { required: u64, budget: u64 },

    #[error("form is not anisotropic with square terms only")]
    NonAnisotropic,

    #[error("evaluation point makes a denominator vanish")]
    EvaluationPole,
}

pub type Result<T> = std::result::Result<T, Error>;
