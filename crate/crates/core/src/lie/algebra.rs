use num_traits::Zero;

use crate::linalg::mat::{combine, dot, is_zero_vec, unit_vec, vec_add, vec_scale, Mat};
use crate::linalg::scalar::Rat;
use crate::linalg::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid algebra: {0}")]
    Invalid(Violation),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

/// First failing axiom found by [`LieAlgebra::validate`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Violation {
    #[error("structure constants have the wrong shape at ({0}, {1})")]
    Shape(usize, usize),
    #[error("antisymmetry fails for pair ({0}, {1})")]
    Antisymmetry(usize, usize),
    #[error("Jacobi identity fails for triple ({0}, {1}, {2})")]
    Jacobi(usize, usize, usize),
}

/// Finite-dimensional real Lie algebra given by rational structure constants:
/// `c[i][j]` holds the coordinates of `[e_i, e_j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    c: Vec<Vec<Vec<Rat>>>,
}

impl LieAlgebra {
    pub fn abelian(dim: usize) -> Self {
        Self::from_brackets(default_labels(dim), &[])
    }

    /// Builds the algebra from the brackets `[e_i, e_j] = v` with `i < j`;
    /// the remaining entries follow by antisymmetry.
    pub fn from_brackets(labels: Vec<String>, brackets: &[(usize, usize, Vec<Rat>)]) -> Self {
        let n = labels.len();
        let mut c = vec![vec![vec![Rat::zero(); n]; n]; n];
        for (i, j, v) in brackets {
            assert_eq!(v.len(), n, "bracket vector has the wrong length");
            assert!(i != j, "bracket of a basis vector with itself");
            c[*i][*j] = v.clone();
            c[*j][*i] = vec_scale(v, &-Rat::from_integer(1.into()));
        }
        LieAlgebra { labels, c }
    }

    /// Raw constructor that performs no symmetrization; see [`validate`](Self::validate).
    pub fn from_constants(labels: Vec<String>, c: Vec<Vec<Vec<Rat>>>) -> Self {
        LieAlgebra { labels, c }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn constants(&self) -> &Vec<Vec<Vec<Rat>>> {
        &self.c
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Rat] {
        &self.c[i][j]
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Rat> {
        unit_vec(self.dim(), i)
    }

    /// Checks antisymmetry and the Jacobi identity on every basis triple.
    pub fn validate(&self) -> Result<(), Violation> {
        let n = self.dim();
        if self.c.len() != n {
            return Err(Violation::Shape(self.c.len(), 0));
        }
        for i in 0..n {
            if self.c[i].len() != n {
                return Err(Violation::Shape(i, self.c[i].len()));
            }
            for j in 0..n {
                if self.c[i][j].len() != n {
                    return Err(Violation::Shape(i, j));
                }
            }
        }
        for i in 0..n {
            for j in i..n {
                if !is_zero_vec(&vec_add(&self.c[i][j], &self.c[j][i])) {
                    return Err(Violation::Antisymmetry(i, j));
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (ei, ej, ek) = (self.basis_vec(i), self.basis_vec(j), self.basis_vec(k));
                    let a = self.bracket(&ei, &self.bracket(&ej, &ek));
                    let b = self.bracket(&ej, &self.bracket(&ek, &ei));
                    let c = self.bracket(&ek, &self.bracket(&ei, &ej));
                    if !is_zero_vec(&vec_add(&vec_add(&a, &b), &c)) {
                        return Err(Violation::Jacobi(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn bracket(&self, u: &[Rat], v: &[Rat]) -> Vec<Rat> {
        let n = self.dim();
        assert_eq!(u.len(), n, "vector length does not match algebra dimension");
        assert_eq!(v.len(), n, "vector length does not match algebra dimension");
        let mut out = vec![Rat::zero(); n];
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if v[j].is_zero() || i == j {
                    continue;
                }
                let f = &u[i] * &v[j];
                for (o, x) in out.iter_mut().zip(&self.c[i][j]) {
                    if !x.is_zero() {
                        *o += &f * x;
                    }
                }
            }
        }
        out
    }

    pub fn try_bracket(&self, u: &[Rat], v: &[Rat]) -> Result<Vec<Rat>, LieError> {
        for w in [u, v] {
            if w.len() != self.dim() {
                return Err(LieError::DimensionMismatch { expected: self.dim(), got: w.len() });
            }
        }
        Ok(self.bracket(u, v))
    }

    /// Matrix of `y -> [x, y]`; column `j` is `[x, e_j]`.
    pub fn ad(&self, x: &[Rat]) -> Mat<Rat> {
        let n = self.dim();
        let cols: Vec<Vec<Rat>> = (0..n).map(|j| self.bracket(x, &self.basis_vec(j))).collect();
        Mat::from_cols(&cols, n)
    }

    pub fn ad_basis(&self) -> Vec<Mat<Rat>> {
        (0..self.dim()).map(|i| self.ad(&self.basis_vec(i))).collect()
    }

    /// Span of all brackets `[a, b]`, `a` in `s`, `b` in `t`.
    pub fn bracket_spaces(&self, s: &Subspace, t: &Subspace) -> Subspace {
        let mut out = Vec::new();
        for a in s.basis() {
            for b in t.basis() {
                out.push(self.bracket(a, b));
            }
        }
        Subspace::span(self.dim(), out)
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    pub fn derived_algebra(&self) -> Subspace {
        self.bracket_spaces(&self.full(), &self.full())
    }

    pub fn subalgebra_closure(&self, vectors: Vec<Vec<Rat>>) -> Subspace {
        let mut s = Subspace::span(self.dim(), vectors);
        loop {
            let next = s.sum(&self.bracket_spaces(&s, &s));
            if next.dim() == s.dim() {
                return s;
            }
            s = next;
        }
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.contains_space(&self.bracket_spaces(s, s))
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.contains_space(&self.bracket_spaces(&self.full(), s))
    }

    /// `s ⊃ [s,s] ⊃ ...`, stopping at the first repeated term.
    pub fn derived_series_of(&self, s: &Subspace) -> Vec<Subspace> {
        let mut out = vec![s.clone()];
        loop {
            let last = out.last().unwrap();
            let next = self.bracket_spaces(last, last);
            if next == *last {
                return out;
            }
            out.push(next);
        }
    }

    pub fn derived_series(&self) -> Vec<Subspace> {
        self.derived_series_of(&self.full())
    }

    /// `s ⊃ [s,s] ⊃ [s,[s,s]] ⊃ ...`, stopping at the first repeated term.
    pub fn lower_central_series_of(&self, s: &Subspace) -> Vec<Subspace> {
        let mut out = vec![s.clone()];
        loop {
            let next = self.bracket_spaces(s, out.last().unwrap());
            if next == *out.last().unwrap() {
                return out;
            }
            out.push(next);
        }
    }

    pub fn lower_central_series(&self) -> Vec<Subspace> {
        self.lower_central_series_of(&self.full())
    }

    /// `{x : [x, s] = 0}`.
    pub fn centralizer(&self, s: &Subspace) -> Subspace {
        let n = self.dim();
        let mut rows = Vec::new();
        for b in s.basis() {
            // x -> [x, b] = -ad(b) x
            rows.extend(self.ad(b).row_vecs());
        }
        if rows.is_empty() {
            return self.full();
        }
        Subspace::span(n, Mat::from_rows_with_cols(rows, n).kernel_basis())
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&self.full())
    }

    /// `{x : [x, s] ⊂ s}`.
    pub fn normalizer(&self, s: &Subspace) -> Subspace {
        let n = self.dim();
        let ann = s.annihilator();
        let mut rows = Vec::new();
        for b in s.basis() {
            let adb = self.ad(b);
            for w in &ann {
                // w . [x, b] = -(w^T ad(b)) x
                rows.push((0..n).map(|c| dot(w, &adb.col(c))).collect());
            }
        }
        if rows.is_empty() {
            return self.full();
        }
        Subspace::span(n, Mat::from_rows_with_cols(rows, n).kernel_basis())
    }

    /// `κ(e_i, e_j) = tr(ad e_i ad e_j)`.
    pub fn killing_form(&self) -> Mat<Rat> {
        let ads = self.ad_basis();
        let n = self.dim();
        let mut k = Mat::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = ads[i].mul(&ads[j]).trace();
                k[(i, j)] = t.clone();
                k[(j, i)] = t;
            }
        }
        k
    }

    pub fn killing(&self, u: &[Rat], v: &[Rat]) -> Rat {
        self.ad(u).mul(&self.ad(v)).trace()
    }

    /// Derived series test, cross-checked against Cartan's criterion `κ(g, [g,g]) = 0`.
    pub fn is_solvable(&self) -> Result<bool, LieError> {
        let series = self.derived_series();
        let by_series = series.last().unwrap().is_zero();
        let k = self.killing_form();
        let dg = self.derived_algebra();
        let by_cartan = dg.basis().iter().all(|d| is_zero_vec(&k.mul_vec(d)));
        if by_series != by_cartan {
            return Err(LieError::Internal(format!(
                "derived series says solvable = {by_series}, Cartan criterion says {by_cartan}"
            )));
        }
        Ok(by_series)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().is_zero()
    }

    pub fn is_semisimple(&self) -> bool {
        self.dim() > 0 && !self.killing_form().det().is_zero()
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().flatten().all(|v| is_zero_vec(v))
    }

    /// Nilpotency class; `None` if not nilpotent. The zero algebra has class 0.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let lcs = self.lower_central_series();
        if !lcs.last().unwrap().is_zero() {
            return None;
        }
        Some(lcs.len() - 1)
    }

    /// The subspace `s` as a Lie algebra in its echelon basis.
    pub fn subalgebra(&self, s: &Subspace) -> Result<Embedded, LieError> {
        if !self.is_subalgebra(s) {
            return Err(LieError::Internal("subspace is not closed under the bracket".into()));
        }
        let basis = s.basis().to_vec();
        let k = basis.len();
        let mut brackets = Vec::new();
        for a in 0..k {
            for b in a + 1..k {
                let v = self.bracket(&basis[a], &basis[b]);
                let coords = s.coords(&v).expect("closed subspace");
                brackets.push((a, b, coords));
            }
        }
        let labels = default_labels(k);
        Ok(Embedded { algebra: LieAlgebra::from_brackets(labels, &brackets), basis, space: s.clone() })
    }

    /// `g / i` on the complement spanned by standard vectors at the non-pivot positions of `i`.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient, LieError> {
        if !self.is_ideal(ideal) {
            return Err(LieError::Internal("quotient by a non-ideal".into()));
        }
        let comp = ideal.complement_basis();
        let q = Quotient { ideal: ideal.clone(), complement: comp.clone(), algebra: LieAlgebra::abelian(0) };
        let k = comp.len();
        let mut brackets = Vec::new();
        for a in 0..k {
            for b in a + 1..k {
                brackets.push((a, b, q.project(&self.bracket(&comp[a], &comp[b]))));
            }
        }
        Ok(Quotient { algebra: LieAlgebra::from_brackets(default_labels(k), &brackets), ..q })
    }

    pub fn direct_sum(&self, o: &LieAlgebra) -> LieAlgebra {
        let (n, m) = (self.dim(), o.dim());
        let mut labels = self.labels.clone();
        labels.extend(o.labels.iter().cloned());
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut v = self.c[i][j].clone();
                v.extend(vec![Rat::zero(); m]);
                brackets.push((i, j, v));
            }
        }
        for i in 0..m {
            for j in i + 1..m {
                let mut v = vec![Rat::zero(); n];
                v.extend(o.c[i][j].iter().cloned());
                brackets.push((n + i, n + j, v));
            }
        }
        LieAlgebra::from_brackets(labels, &brackets)
    }
}

pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

/// A subalgebra materialized with its own structure constants.
#[derive(Clone, Debug)]
pub struct Embedded {
    pub algebra: LieAlgebra,
    pub basis: Vec<Vec<Rat>>,
    pub space: Subspace,
}

impl Embedded {
    pub fn lift(&self, coords: &[Rat]) -> Vec<Rat> {
        combine(coords, &self.basis, self.space.ambient())
    }

    pub fn restrict(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        self.space.coords(v)
    }

    pub fn lift_space(&self, s: &Subspace) -> Subspace {
        Subspace::span(self.space.ambient(), s.basis().iter().map(|v| self.lift(v)).collect())
    }
}

/// A quotient algebra with its projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: LieAlgebra,
    pub ideal: Subspace,
    pub complement: Vec<Vec<Rat>>,
}

impl Quotient {
    pub fn project(&self, v: &[Rat]) -> Vec<Rat> {
        let mut w = v.to_vec();
        for (row, &p) in self.ideal.basis().iter().zip(self.ideal.pivots()) {
            let f = w[p].clone();
            if !f.is_zero() {
                for (x, r) in w.iter_mut().zip(row) {
                    *x -= &f * r;
                }
            }
        }
        let pivots = self.ideal.pivots();
        (0..w.len()).filter(|c| !pivots.contains(c)).map(|c| w[c].clone()).collect()
    }

    pub fn lift(&self, coords: &[Rat]) -> Vec<Rat> {
        let n = self.ideal.ambient();
        combine(coords, &self.complement, n)
    }

    /// Preimage of a subspace of the quotient, including the ideal.
    pub fn preimage(&self, s: &Subspace) -> Subspace {
        let mut vs: Vec<Vec<Rat>> = s.basis().iter().map(|v| self.lift(v)).collect();
        vs.extend(self.ideal.basis().iter().cloned());
        Subspace::span(self.ideal.ambient(), vs)
    }
}
