use serde::{Deserialize, Serialize};

use super::algebra::{default_labels, LieAlgebra};
use crate::linalg::mat::Mat;
use crate::linalg::scalar::Rat;
use crate::linalg::subspace::Subspace;

/// Basis matrices in `gl_m(Q)` whose commutators reproduce the structure constants.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixPresentation {
    pub ambient: usize,
    pub mats: Vec<Mat<Rat>>,
}

impl MatrixPresentation {
    /// `[B_i, B_j] = sum_k c[i][j][k] B_k` for every pair.
    pub fn is_compatible(&self, g: &LieAlgebra) -> bool {
        if self.mats.len() != g.dim() {
            return false;
        }
        let n = g.dim();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.mats[i].commutator(&self.mats[j]);
                if lhs != self.image(g.basis_bracket(i, j)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn image(&self, v: &[Rat]) -> Mat<Rat> {
        let mut out = Mat::zeros(self.ambient, self.ambient);
        for (c, m) in v.iter().zip(&self.mats) {
            if !num_traits::Zero::is_zero(c) {
                out = out.add(&m.scale(c));
            }
        }
        out
    }

    pub fn is_independent(&self) -> bool {
        let rows: Vec<Vec<Rat>> = self.mats.iter().map(|m| m.entries().to_vec()).collect();
        rows.is_empty() || Mat::from_rows(rows).rank() == self.mats.len()
    }
}

/// Result of ingesting a list of matrices.
#[derive(Clone, Debug)]
pub struct FromMatrices {
    pub algebra: LieAlgebra,
    pub presentation: MatrixPresentation,
    /// Number of basis elements added to close the span under commutators.
    pub added: usize,
    /// Input matrices dropped as linearly dependent on earlier ones.
    pub dependent: usize,
}

fn flat(m: &Mat<Rat>) -> Vec<Rat> {
    m.entries().to_vec()
}

/// Lie algebra spanned by `mats` under the commutator bracket, closed up if needed.
pub fn from_matrices(mats: &[Mat<Rat>]) -> FromMatrices {
    let m = mats.first().map_or(0, |x| x.nrows());
    let mut basis: Vec<Mat<Rat>> = Vec::new();
    let mut span = Subspace::zero(m * m);
    let mut dependent = 0;
    for x in mats {
        assert!(x.is_square() && x.nrows() == m, "matrices must be square of equal size");
        if span.contains(&flat(x)) {
            dependent += 1;
        } else {
            span = span.sum(&Subspace::span(m * m, vec![flat(x)]));
            basis.push(x.clone());
        }
    }
    let original = basis.len();
    let mut i = 0;
    while i < basis.len() {
        for j in 0..i {
            let c = basis[j].commutator(&basis[i]);
            if span.contains(&flat(&c)) {
                continue;
            }
            // the echelon vector with the new pivot: a small representative of c modulo the span
            let grown = span.sum(&Subspace::span(m * m, vec![flat(&c)]));
            let k = grown.pivots().iter().position(|p| !span.pivots().contains(p)).expect("new pivot");
            basis.push(Mat::from_fn(m, m, |r, q| grown.basis()[k][r * m + q].clone()));
            span = grown;
        }
        i += 1;
    }
    let n = basis.len();
    let cols: Vec<Vec<Rat>> = basis.iter().map(flat).collect();
    let coord = Mat::from_cols(&cols, m * m);
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let c = basis[i].commutator(&basis[j]);
            let v = coord.solve(&flat(&c)).expect("span is closed");
            brackets.push((i, j, v));
        }
    }
    let algebra = LieAlgebra::from_brackets(default_labels(n), &brackets);
    FromMatrices {
        algebra,
        presentation: MatrixPresentation { ambient: m, mats: basis },
        added: n - original,
        dependent,
    }
}

/// How the group is handed to the oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PresentationKind {
    SimplyConnected,
    LinearMatrix,
    AbstractConnected,
}

#[derive(Clone, Debug)]
pub struct GroupPresentation {
    pub kind: PresentationKind,
    pub algebra: LieAlgebra,
    pub matrices: Option<MatrixPresentation>,
    pub finite_center_levi: Option<bool>,
}

impl GroupPresentation {
    pub fn new(kind: PresentationKind, algebra: LieAlgebra) -> Self {
        GroupPresentation { kind, algebra, matrices: None, finite_center_levi: None }
    }

    pub fn with_matrices(mut self, m: MatrixPresentation) -> Self {
        self.matrices = Some(m);
        self
    }

    pub fn with_finite_center_levi(mut self, flag: bool) -> Self {
        self.finite_center_levi = Some(flag);
        self
    }
}
