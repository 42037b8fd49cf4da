use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor mismatch: {left} vs {right}")]
    ConductorMismatch { left: u32, right: u32 },
    #[error("homogeneous coordinates must not all vanish")]
    ZeroVector,
    #[error("join/meet of identical inputs")]
    IdenticalInputs,
    #[error("an arrangement needs at least 3 lines, got {found}")]
    TooFewLines { found: usize },
    #[error("line {index} duplicates an earlier line")]
    DuplicateLine { index: usize },
    #[error("line is not part of the arrangement")]
    LineNotInArrangement,
    #[error("candidate set needs {needed} points, budget is {budget}; use the singular-points-only bound")]
    BudgetExceeded { needed: u64, budget: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("group closure exceeded {bound} elements")]
    ClosureTooLarge { bound: usize },
    #[error("arrangement is not supersolvable")]
    NotSupersolvable,
    #[error("random trials disagree in degree {degree}; rerun with other seeds")]
    TrialsDisagree { degree: usize },
    #[error("invalid resolution chain at step {step}: {reason}")]
    InvalidChain { step: usize, reason: String },
    #[error("generator gave up after {attempts} attempts")]
    GenerationFailed { attempts: usize },
}
