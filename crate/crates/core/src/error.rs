use thiserror::Error;

use crate::dsl::ParseError;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid ring specification: {0}")]
    InvalidSpec(String),
    #[error("operands belong to different rings ({0} vs {1})")]
    CrossRing(String, String),
    #[error("infinite backend: {0} is not available on ZZ")]
    Infinite(&'static str),
    #[error("ring has {0} elements, more than the supported maximum of {1}")]
    TooLarge(usize, usize),
    #[error("ring axiom violated: {0}")]
    RingAxiom(String),
    #[error("not a proper ideal: {0}")]
    ImproperIdeal(String),
    #[error("expansion axiom violated: {0}")]
    ExpansionAxiom(String),
    #[error("invalid multiplicative set: {0}")]
    MultiplicativeSet(String),
    #[error("not a ring homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("homomorphism is not surjective; images of ideals need not be ideals")]
    NotSurjective,
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("{0}")]
    NotAnIdeal(String),
    #[error("cannot interpret element: {0}")]
    Element(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
