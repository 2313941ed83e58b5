use thiserror::Error;

use crate::algebra::AxiomReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed operation table: {0}")]
    MalformedTable(String),

    #[error("operation table violates the cBCK axioms ({} violations)", .0.violations.len())]
    NotCbck(Box<AxiomReport>),

    #[error("chain value {value} does not belong to chain {spec}")]
    SpecMismatch { spec: String, value: String },

    #[error("function universes differ")]
    UniverseMismatch,

    #[error("unknown point `{0}`")]
    UnknownPoint(String),

    #[error("support point {0} has no annihilation witness")]
    WitnessGap(String),

    #[error("witness for point {0} vanishes there")]
    BadWitness(String),

    #[error("{what} needs {needed}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    #[error("subset {0} is not an ideal")]
    NotAnIdeal(String),

    #[error("relation induced by ideal {0} is not a congruence")]
    CompatibilityFailure(String),

    #[error("order is not a lattice: {0}")]
    NotALattice(String),

    #[error("annihilator exponent does not fit in 64 bits")]
    ExponentOverflow,

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
