//! Exact linear algebra over Q, Q(i) and Z.

pub mod eigen;
pub mod jordan;
pub mod mat;
pub mod poly;
pub mod scalar;
pub mod snf;
pub mod subspace;

pub use eigen::{simultaneous_eigenspace, simultaneous_eigenspace_rat, Indeterminate, WeightSpace};
pub use jordan::{jordan_chevalley, JordanChevalley};
pub use mat::Mat;
pub use poly::{char_poly, Poly};
pub use scalar::{format_rat, parse_rat, rat, ratio, GaussRat, Rat, Scalar};
pub use snf::{smith_normal_form, IntLattice, IntMat, SmithForm};
pub use subspace::{Flag, Subspace};
