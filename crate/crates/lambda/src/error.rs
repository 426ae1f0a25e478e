use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LambdaError {
    #[error("tuple abstraction of arity {expected} applied to {found} arguments")]
    ArityMismatch { expected: usize, found: usize },
    #[error("cannot uncurry: {0}")]
    NotCurriable(String),
}
