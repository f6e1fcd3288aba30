use super::mat::{combine, Mat};
use super::scalar::{Rat, Scalar};

/// Subspace of `F^n` stored as a reduced row echelon basis, so equal subspaces
/// compare structurally equal.
#[derive(Clone, PartialEq, Debug)]
pub struct Subspace<F = Rat> {
    ambient: usize,
    basis: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Scalar> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: vec![], pivots: vec![] }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, (0..ambient).map(|i| super::mat::unit_vec(ambient, i)).collect())
    }

    pub fn span(ambient: usize, vectors: Vec<Vec<F>>) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        for v in &vectors {
            assert_eq!(v.len(), ambient, "vector length does not match ambient dimension");
        }
        let r = Mat::from_rows_with_cols(vectors, ambient).rref();
        let k = r.rank();
        let basis = r.reduced.row_vecs().into_iter().take(k).collect();
        Subspace { ambient, basis, pivots: r.pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Coordinates of `v` in the echelon basis, or `None` when `v` is outside.
    pub fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        assert_eq!(v.len(), self.ambient);
        let c: Vec<F> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let back = combine(&c, &self.basis, self.ambient);
        if back.as_slice() == v {
            Some(c)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_space(&self, o: &Self) -> bool {
        o.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, o: &Self) -> Self {
        let mut vs = self.basis.clone();
        vs.extend(o.basis.iter().cloned());
        Self::span(self.ambient, vs)
    }

    /// Rows spanning the annihilator `{w : w.v = 0 for all v}`.
    pub fn annihilator(&self) -> Vec<Vec<F>> {
        if self.basis.is_empty() {
            return Self::full(self.ambient).basis;
        }
        Mat::from_rows_with_cols(self.basis.clone(), self.ambient).kernel_basis()
    }

    pub fn intersect(&self, o: &Self) -> Self {
        let mut ann = self.annihilator();
        ann.extend(o.annihilator());
        if ann.is_empty() {
            return Self::full(self.ambient);
        }
        let k = Mat::from_rows_with_cols(ann, self.ambient).kernel_basis();
        Self::span(self.ambient, k)
    }

    /// Standard basis vectors at the non-pivot coordinates; together with the
    /// subspace basis they span the ambient space.
    pub fn complement_basis(&self) -> Vec<Vec<F>> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).map(|c| super::mat::unit_vec(self.ambient, c)).collect()
    }

    /// Coordinates of `v` modulo `self` on the complement of [`complement_basis`](Self::complement_basis).
    pub fn quotient_coords(&self, v: &[F]) -> Vec<F> {
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let f = w[p].clone();
            if !f.is_zero() {
                for (x, r) in w.iter_mut().zip(row) {
                    *x = x.clone() - f.clone() * r.clone();
                }
            }
        }
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).map(|c| w[c].clone()).collect()
    }

    /// Matrix of `m` restricted to `self` in the echelon basis; `None` if `self` is not invariant.
    pub fn restrict(&self, m: &Mat<F>) -> Option<Mat<F>> {
        let cols: Option<Vec<Vec<F>>> = self.basis.iter().map(|b| self.coords(&m.mul_vec(b))).collect();
        Some(Mat::from_cols(&cols?, self.dim()))
    }

    /// Matrix induced by `m` on `F^n / self`, in the coordinates of [`quotient_coords`](Self::quotient_coords).
    pub fn quotient_action(&self, m: &Mat<F>) -> Mat<F> {
        let comp = self.complement_basis();
        let cols: Vec<Vec<F>> = comp.iter().map(|c| self.quotient_coords(&m.mul_vec(c))).collect();
        Mat::from_cols(&cols, comp.len())
    }

    /// Basis of a complement of `self` inside `outer` (which must contain `self`).
    pub fn complement_in(&self, outer: &Self) -> Vec<Vec<F>> {
        let mut current = self.clone();
        let mut out = Vec::new();
        for v in outer.basis() {
            if !current.contains(v) {
                out.push(v.clone());
                current = current.sum(&Self::span(self.ambient, vec![v.clone()]));
            }
        }
        out
    }
}

/// Strictly increasing chain `0 = F_0 < F_1 < ... < F_d`; the zero space is implicit.
#[derive(Clone, PartialEq, Debug)]
pub struct Flag {
    steps: Vec<Subspace>,
}

impl Flag {
    /// Builds the flag `span(v_1) < span(v_1, v_2) < ...`; `None` if a step is not strict.
    pub fn from_adapted_basis(ambient: usize, vectors: &[Vec<Rat>]) -> Option<Flag> {
        let mut steps = Vec::with_capacity(vectors.len());
        for k in 1..=vectors.len() {
            let s = Subspace::span(ambient, vectors[..k].to_vec());
            if s.dim() != k {
                return None;
            }
            steps.push(s);
        }
        Some(Flag { steps })
    }

    pub fn from_steps(steps: Vec<Subspace>) -> Option<Flag> {
        for w in steps.windows(2) {
            if w[1].dim() <= w[0].dim() || !w[1].contains_space(&w[0]) {
                return None;
            }
        }
        if steps.first().is_some_and(|s| s.is_zero()) {
            return None;
        }
        Some(Flag { steps })
    }

    pub fn steps(&self) -> &[Subspace] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn top(&self) -> Option<&Subspace> {
        self.steps.last()
    }

    /// Every step one dimension larger than the previous.
    pub fn is_complete(&self) -> bool {
        self.steps.iter().enumerate().all(|(i, s)| s.dim() == i + 1)
    }

    /// One vector per new dimension: the reduced echelon rows of each step at
    /// pivots the previous step lacks. Two flags are equal iff these agree.
    pub fn adapted_basis(&self) -> Vec<Vec<Rat>> {
        let mut out = Vec::new();
        let mut seen: Vec<usize> = Vec::new();
        for s in &self.steps {
            for (row, p) in s.basis().iter().zip(s.pivots()) {
                if !seen.contains(p) {
                    out.push(row.clone());
                }
            }
            seen = s.pivots().to_vec();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::rat;

    fn v(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn canonical_equality() {
        let a = Subspace::span(3, vec![v(&[1, 1, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(3, vec![v(&[1, 0, 0]), v(&[2, 3, 0])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert!(!a.contains(&v(&[0, 0, 1])));
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::span(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(a.intersect(&b), Subspace::span(3, vec![v(&[0, 1, 0])]));
        assert!(a.sum(&b).is_full());
        assert_eq!(a.complement_basis(), vec![v(&[0, 0, 1])]);
    }

    #[test]
    fn flags() {
        let f = Flag::from_adapted_basis(2, &[v(&[0, 1]), v(&[1, 0])]).unwrap();
        assert!(f.is_complete());
        assert_eq!(f.adapted_basis().len(), 2);
        assert!(Flag::from_adapted_basis(2, &[v(&[0, 1]), v(&[0, 2])]).is_none());
    }
}
