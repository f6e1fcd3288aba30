//! Lie algebras by structure constants, matrix presentations and the JSON format.

pub mod algebra;
pub mod io;
pub mod matrices;
pub mod named;

pub use algebra::{Embedded, LieAlgebra, LieError, Quotient, Violation};
pub use io::{parse_algebra, AlgebraData, FormatError};
pub use matrices::{from_matrices, FromMatrices, GroupPresentation, MatrixPresentation, PresentationKind};
