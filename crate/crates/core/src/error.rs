use thiserror::Error;

use crate::exact::HalfInt;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("species {species} out of range 1..={max}")]
    SpeciesOutOfRange { species: u16, max: u16 },

    #[error("element is not quadratic: {0}")]
    NotQuadratic(String),

    #[error("element is not homogeneous in conformal weight")]
    NotHomogeneous,

    #[error("expected conformal weight {expected}, found {found}")]
    WrongWeight { expected: HalfInt, found: HalfInt },

    #[error("Gram matrix is singular")]
    SingularGram,

    #[error("critical level: k + h^vee = 0")]
    CriticalLevel,

    #[error("weight {0} is not dominant integral")]
    NotDominant(String),

    #[error("weight has {found} coordinates, root system expects {expected}")]
    WeightLength { expected: usize, found: usize },

    #[error("unsupported rank {rank} for {what}")]
    UnsupportedRank { what: &'static str, rank: usize },

    #[error("subspace is not theta-stable at weight {0}")]
    NotThetaStable(HalfInt),

    #[error("ambient restriction covers weights up to {available}, {requested} requested")]
    AmbientTooNarrow { requested: HalfInt, available: HalfInt },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
