use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("constant term is zero")]
    ZeroConstantTerm,
    #[error("certificate does not re-verify: {0}")]
    Reverify(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
