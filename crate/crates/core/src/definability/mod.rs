//! Supersolvability, triangular-by-compact splittings and the definability oracle.

pub mod oracle;
pub mod tbc;
pub mod weights;

pub use oracle::{definability_oracle, CounterWitness, DefinabilityVerdict, Outcome, RadicalCertificate, Rule};
pub use tbc::{tbc_find, tbc_verify, TbcCertificate, TbcClause, TbcFailure, TbcOutcome};
pub use weights::{adjoint_weights, module_weights, supersolvable_test, Supersolvable, WeightTable};

use crate::lie::LieError;
use crate::linalg::eigen::Indeterminate;
use crate::structure::StructureError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DefinabilityError {
    #[error("algebra is not solvable")]
    NotSolvable,
    #[error(transparent)]
    Indeterminate(#[from] Indeterminate),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

#[cfg(test)]
mod tests;
