//! Finite-dimensional representations with checked properties.

pub mod ado;
pub mod quotient;
pub mod torus;
pub mod triangular;

pub use ado::nilpotent_ado;
pub use quotient::{quotient_rep, GroupRepData, QuotientRep};
pub use torus::{torus_zariski_closure, TorusClosure, TorusWeights};
pub use triangular::{extend_rep, supersolvable_triangular_rep};

use serde::{Deserialize, Serialize};

use crate::definability::weights::{rat_module_weights, NonRealWitness, WeightTable};
use crate::definability::DefinabilityError;
use crate::lie::LieAlgebra;
use crate::linalg::jordan::is_nilpotent;
use crate::linalg::mat::Mat;
use crate::linalg::scalar::Rat;
use crate::linalg::subspace::{Flag, Subspace};
use crate::structure::{nilradical, StructureError};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RepError {
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("algebra is not supersolvable: weight {:?} is non-real on basis element {}", .0.weight, .0.basis_index + 1)]
    NotSupersolvable(NonRealWitness),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("representations have different source algebras")]
    SourceMismatch,
    #[error("constructed representation failed verification: {0}")]
    Verification(String),
    #[error(transparent)]
    Definability(#[from] DefinabilityError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepFlags {
    pub homomorphism: bool,
    pub faithful: bool,
    pub triangular_in_flag: bool,
    pub unipotent_on_nilradical: bool,
}

impl RepFlags {
    pub fn names(&self) -> Vec<&'static str> {
        let mut out = vec![];
        if self.homomorphism {
            out.push("homomorphism");
        }
        if self.faithful {
            out.push("faithful");
        }
        if self.triangular_in_flag {
            out.push("triangular_in_flag");
        }
        if self.unipotent_on_nilradical {
            out.push("unipotent_on_nilradical");
        }
        out
    }
}

/// A linear map from a Lie algebra to `gl(target_dim)` given on the basis.
/// `flag`, if present, is a flag of the target space; `verified` only ever
/// holds flags that [`verify_rep`] has confirmed.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    pub source: LieAlgebra,
    pub target_dim: usize,
    pub images: Vec<Mat<Rat>>,
    pub flag: Option<Flag>,
    pub verified: RepFlags,
}

impl Representation {
    pub fn new(source: LieAlgebra, target_dim: usize, images: Vec<Mat<Rat>>) -> Self {
        assert_eq!(images.len(), source.dim());
        assert!(images.iter().all(|m| m.nrows() == target_dim && m.ncols() == target_dim));
        Representation { source, target_dim, images, flag: None, verified: RepFlags::default() }
    }

    pub fn adjoint(g: &LieAlgebra) -> Self {
        Representation::new(g.clone(), g.dim(), g.ad_basis())
    }

    pub fn with_flag(mut self, flag: Flag) -> Self {
        self.flag = Some(flag);
        self
    }

    /// Standard flag `span(e_1) < span(e_1, e_2) < ...` of the target.
    pub fn with_standard_flag(self) -> Self {
        let d = self.target_dim;
        let basis: Vec<Vec<Rat>> = (0..d).map(|i| crate::linalg::mat::unit_vec(d, i)).collect();
        self.with_flag(Flag::from_adapted_basis(d, &basis).expect("independent"))
    }

    /// Image of an element given in source coordinates.
    pub fn image(&self, x: &[Rat]) -> Mat<Rat> {
        let mut out = Mat::zeros(self.target_dim, self.target_dim);
        for (c, m) in x.iter().zip(&self.images) {
            if !num_traits::Zero::is_zero(c) {
                out = out.add(&m.scale(c));
            }
        }
        out
    }

    /// Basis of the kernel in source coordinates.
    pub fn kernel(&self) -> Subspace {
        let n = self.source.dim();
        let d2 = self.target_dim * self.target_dim;
        let cols: Vec<Vec<Rat>> = self.images.iter().map(|m| m.entries().to_vec()).collect();
        let stacked = Mat::from_cols(&cols, d2);
        Subspace::span(n, stacked.kernel_basis())
    }

    /// Conjugates by the change of basis whose columns are `basis`.
    pub fn in_basis(&self, basis: &[Vec<Rat>]) -> Option<Representation> {
        let p = Mat::from_cols(basis, self.target_dim);
        let pinv = p.inverse()?;
        let images = self.images.iter().map(|m| pinv.mul(m).mul(&p)).collect();
        Some(Representation::new(self.source.clone(), self.target_dim, images))
    }

    /// Runs [`verify_rep`] and records the result.
    pub fn verify(mut self) -> Self {
        self.verified = verify_rep(&self);
        self
    }
}

pub fn verify_rep(rep: &Representation) -> RepFlags {
    let g = &rep.source;
    let n = g.dim();
    let mut homomorphism = true;
    'outer: for i in 0..n {
        for j in (i + 1)..n {
            let lhs = rep.image(g.basis_bracket(i, j));
            if lhs != rep.images[i].commutator(&rep.images[j]) {
                homomorphism = false;
                break 'outer;
            }
        }
    }
    let faithful = rep.kernel().is_zero();
    let triangular_in_flag = rep.flag.as_ref().is_some_and(|f| {
        f.is_complete()
            && f.top().is_none_or(|t| t.ambient() == rep.target_dim)
            && f.steps().iter().all(|s| rep.images.iter().all(|m| s.restrict(m).is_some()))
    });
    let unipotent_on_nilradical =
        homomorphism && nilradical(g).is_ok_and(|nr| nr.basis().iter().all(|x| is_nilpotent(&rep.image(x))));
    RepFlags { homomorphism, faithful, triangular_in_flag, unipotent_on_nilradical }
}

/// Weights of the composition factors.
pub fn semisimplification(rep: &Representation) -> Result<WeightTable, RepError> {
    Ok(rat_module_weights(&rep.source, &rep.images)?)
}

pub fn is_unipotent(rep: &Representation) -> Result<bool, RepError> {
    Ok(semisimplification(rep)?.all_zero())
}

/// Restriction to a subalgebra, in the echelon basis of `s`.
pub fn restrict(rep: &Representation, s: &Subspace) -> Result<Representation, RepError> {
    let sub = rep.source.subalgebra(s).map_err(|e| RepError::Precondition(e.to_string()))?;
    let images = s.basis().iter().map(|v| rep.image(v)).collect();
    Ok(Representation::new(sub.algebra, rep.target_dim, images))
}

pub fn direct_sum(a: &Representation, b: &Representation) -> Result<Representation, RepError> {
    if a.source != b.source {
        return Err(RepError::SourceMismatch);
    }
    let images = a.images.iter().zip(&b.images).map(|(x, y)| Mat::block_diag(&[x.clone(), y.clone()])).collect();
    Ok(Representation::new(a.source.clone(), a.target_dim + b.target_dim, images))
}

/// Direct sum of two representations whose kernels `H_1`, `H_2` are known;
/// checks that the kernel of the sum is `H_1 ∩ H_2`.
pub fn kernel_intersection_sum(
    a: &Representation,
    h1: &Subspace,
    b: &Representation,
    h2: &Subspace,
) -> Result<Representation, RepError> {
    if a.kernel() != *h1 || b.kernel() != *h2 {
        return Err(RepError::Precondition("stated kernel differs from the computed kernel".into()));
    }
    let s = direct_sum(a, b)?;
    if s.kernel() != h1.intersect(h2) {
        return Err(RepError::Verification("kernel of the sum is not the intersection".into()));
    }
    Ok(s.verify())
}

#[cfg(test)]
pub(crate) fn naive_verify_homomorphism(rep: &Representation) -> bool {
    let g = &rep.source;
    let n = g.dim();
    let d = rep.target_dim;
    for i in 0..n {
        for j in 0..n {
            let c = g.basis_bracket(i, j);
            for r in 0..d {
                for s in 0..d {
                    let mut lhs = Rat::from_integer(0.into());
                    for (k, ck) in c.iter().enumerate() {
                        lhs += ck * &rep.images[k][(r, s)];
                    }
                    let mut rhs = Rat::from_integer(0.into());
                    for t in 0..d {
                        rhs += &rep.images[i][(r, t)] * &rep.images[j][(t, s)];
                        rhs -= &rep.images[j][(r, t)] * &rep.images[i][(t, s)];
                    }
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests;
