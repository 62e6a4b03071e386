use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("model has abelian rank {0}, expected 2")]
    WrongRank(usize),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("inconsistent vertex lift: {0}")]
    InconsistentLift(String),
    #[error("face {0} is not a shell")]
    NotAShell(usize),
    #[error("vertex {0} is not a spur")]
    NotASpur(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
}

pub type Result<T> = std::result::Result<T, Error>;
