use alloc::string::String;
use core::fmt;

/// Errors raised by the engine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A denominator factor is identically zero.
    ZeroDenominator,
    /// A denominator factor is not of degree one.
    NonLinearFactor(String),
    /// A substitution made a denominator factor vanish.
    SingularSubstitution(String),
    InvalidSpec(String),
    InvalidTableau(String),
    /// A restricted flag has no room: `l_{i+1,j} < r_{i,j}`.
    InfeasibleTableau { level: usize, block: usize },
    /// A weight-0 term survived in a normal ledger.
    CancellationFailure(String),
    /// A weight-0 term was handed to an Euler-class routine.
    WeightZeroTerm(String),
    SymmetryViolation(String),
    BudgetExceeded { cosets: u128, budget: u128 },
    IntegrationShape(String),
    /// Every attempted torus weight vector was singular.
    LambdaExhausted { attempts: usize },
    FormulaMismatch(String),
    PairingCount { expected: usize, got: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDenominator => f.write_str("zero denominator factor"),
            Error::NonLinearFactor(s) => write!(f, "denominator factor is not linear: {}", s),
            Error::SingularSubstitution(s) => write!(f, "singular substitution: factor {} vanishes", s),
            Error::InvalidSpec(s) => write!(f, "invalid flag data: {}", s),
            Error::InvalidTableau(s) => write!(f, "invalid tableau: {}", s),
            Error::InfeasibleTableau { level, block } => {
                write!(f, "infeasible tableau: restricted flag at level {} block {} has no room", level, block)
            }
            Error::CancellationFailure(s) => write!(f, "weight-0 term survived cancellation: {}", s),
            Error::WeightZeroTerm(s) => write!(f, "weight-0 term in Euler class input: {}", s),
            Error::SymmetryViolation(s) => write!(f, "class is not symmetric within blocks: {}", s),
            Error::BudgetExceeded { cosets, budget } => {
                write!(f, "coset count {} exceeds budget {}", cosets, budget)
            }
            Error::IntegrationShape(s) => write!(f, "integration left free variables: {}", s),
            Error::LambdaExhausted { attempts } => {
                write!(f, "no generic torus weights found after {} attempts", attempts)
            }
            Error::FormulaMismatch(s) => write!(f, "formula mismatch: {}", s),
            Error::PairingCount { expected, got } => {
                write!(f, "expected {} pairings, got {}", expected, got)
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
