//! Faithful unipotent representations of nilpotent algebras on truncated
//! universal enveloping algebras.
//!
//! Elements of `U(n)` are kept in PBW normal form over a basis adapted to the
//! lower central series. A basis vector from `C^k \ C^{k+1}` has weight `k`;
//! the span of monomials of weight above the cutoff is a two-sided ideal, and
//! for class at most 2 so is the span of monomials of length above the class.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::{RepError, Representation};
use crate::lie::LieAlgebra;
use crate::linalg::mat::Mat;
use crate::linalg::scalar::Rat;
use crate::linalg::subspace::Subspace;

type Monomial = Vec<usize>;
type Elem = BTreeMap<Monomial, Rat>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Truncation {
    /// Drop monomials with more than `c` factors.
    Length(usize),
    /// Drop monomials whose total weight exceeds `c`.
    Weight(usize),
}

pub(crate) struct Envelope {
    /// Columns are the adapted basis in the coordinates of the original algebra.
    basis: Mat<Rat>,
    basis_inv: Mat<Rat>,
    /// Structure constants in the adapted basis.
    c: Vec<Vec<Vec<Rat>>>,
    weight: Vec<usize>,
    trunc: Truncation,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    memo: RefCell<HashMap<(usize, Monomial), Elem>>,
}

fn add_into(acc: &mut Elem, e: &Elem, s: &Rat) {
    for (m, c) in e {
        let v = acc.entry(m.clone()).or_insert_with(Rat::zero);
        *v += c * s;
        if v.is_zero() {
            acc.remove(m);
        }
    }
}

impl Envelope {
    pub(crate) fn new(n: &LieAlgebra, trunc: Truncation) -> Self {
        let d = n.dim();
        let lcs = n.lower_central_series();
        let mut chosen = Subspace::zero(d);
        let mut levels: Vec<(usize, Vec<Rat>)> = Vec::new();
        for (k, term) in lcs.iter().enumerate().rev() {
            for v in chosen.complement_in(term) {
                chosen = chosen.sum(&Subspace::span(d, vec![v.clone()]));
                levels.push((k + 1, v));
            }
        }
        levels.reverse();
        let weight: Vec<usize> = levels.iter().map(|(w, _)| *w).collect();
        let cols: Vec<Vec<Rat>> = levels.into_iter().map(|(_, v)| v).collect();
        let basis = Mat::from_cols(&cols, d);
        let basis_inv = if d == 0 { basis.clone() } else { basis.inverse().expect("adapted basis") };
        let c = (0..d).map(|a| (0..d).map(|b| basis_inv.mul_vec(&n.bracket(&cols[a], &cols[b]))).collect()).collect();
        let mut env = Envelope {
            basis,
            basis_inv,
            c,
            weight,
            trunc,
            monomials: vec![],
            index: HashMap::new(),
            memo: RefCell::new(HashMap::new()),
        };
        env.enumerate_monomials();
        env
    }

    fn mono_weight(&self, m: &[usize]) -> usize {
        m.iter().map(|&i| self.weight[i]).sum()
    }

    fn keeps(&self, m: &[usize]) -> bool {
        match self.trunc {
            Truncation::Length(c) => m.len() <= c,
            Truncation::Weight(c) => self.mono_weight(m) <= c,
        }
    }

    fn enumerate_monomials(&mut self) {
        let d = self.weight.len();
        let mut all: Vec<Monomial> = vec![vec![]];
        let mut frontier: Vec<Monomial> = vec![vec![]];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for m in &frontier {
                let start = m.last().copied().unwrap_or(0);
                for i in start..d {
                    let mut e = m.clone();
                    e.push(i);
                    if self.keeps(&e) {
                        next.push(e);
                    }
                }
            }
            all.extend(next.iter().cloned());
            frontier = next;
        }
        // highest weight first, so weight-raising operators are upper triangular
        all.sort_by(|a, b| self.mono_weight(b).cmp(&self.mono_weight(a)).then(a.len().cmp(&b.len())).then(a.cmp(b)));
        self.index = all.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        self.monomials = all;
    }

    pub(crate) fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub(crate) fn monomial_weights(&self) -> Vec<usize> {
        self.monomials.iter().map(|m| self.mono_weight(m)).collect()
    }

    /// `x_i * m` in normal form, modulo the truncation ideal.
    fn left_mul_basis(&self, i: usize, m: &[usize]) -> Elem {
        if let Some(e) = self.memo.borrow().get(&(i, m.to_vec())) {
            return e.clone();
        }
        let mut out = Elem::new();
        if m.is_empty() || i <= m[0] {
            let mut e = Vec::with_capacity(m.len() + 1);
            e.push(i);
            e.extend_from_slice(m);
            if self.keeps(&e) {
                out.insert(e, Rat::from_integer(1.into()));
            }
        } else {
            // x_i x_j r = x_j (x_i r) + [x_i, x_j] r
            let j = m[0];
            let rest = &m[1..];
            let inner = self.left_mul_basis(i, rest);
            for (mm, c) in &inner {
                add_into(&mut out, &self.left_mul_basis(j, mm), c);
            }
            for (k, ck) in self.c[i][j].iter().enumerate() {
                if !ck.is_zero() {
                    add_into(&mut out, &self.left_mul_basis(k, rest), ck);
                }
            }
        }
        self.memo.borrow_mut().insert((i, m.to_vec()), out.clone());
        out
    }

    /// `v * e` for `v` in adapted coordinates.
    fn left_mul(&self, v: &[Rat], e: &Elem) -> Elem {
        let mut out = Elem::new();
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (m, c) in e {
                add_into(&mut out, &self.left_mul_basis(i, m), &(vi * c));
            }
        }
        out
    }

    fn matrix_of(&self, f: impl Fn(&Monomial) -> Elem) -> Mat<Rat> {
        let n = self.dim();
        let mut out = Mat::zeros(n, n);
        for (col, m) in self.monomials.iter().enumerate() {
            for (mm, c) in f(m) {
                let row = self.index[&mm];
                out[(row, col)] = c;
            }
        }
        out
    }

    fn single(m: &[usize]) -> Elem {
        let mut e = Elem::new();
        e.insert(m.to_vec(), Rat::from_integer(1.into()));
        e
    }

    /// Left multiplication by `x`, given in the coordinates of the original algebra.
    pub(crate) fn left_action(&self, x: &[Rat]) -> Mat<Rat> {
        let v = self.basis_inv.mul_vec(x);
        self.matrix_of(|m| self.left_mul(&v, &Self::single(m)))
    }

    /// Extension of a derivation `delta` of the algebra (a matrix in the
    /// original coordinates) to the truncated enveloping algebra.
    pub(crate) fn derivation_action(&self, delta: &Mat<Rat>) -> Mat<Rat> {
        let local = self.basis_inv.mul(delta).mul(&self.basis);
        self.matrix_of(|m| {
            let mut out = Elem::new();
            for j in 0..m.len() {
                let dv = local.col(m[j]);
                let mut e = self.left_mul(&dv, &Self::single(&m[j + 1..]));
                for &p in m[..j].iter().rev() {
                    e = self.left_mul(&crate::linalg::mat::unit_vec(dv.len(), p), &e);
                }
                add_into(&mut out, &e, &Rat::from_integer(1.into()));
            }
            out
        })
    }
}

/// Truncation used by [`nilpotent_ado`]: length at most the class when the
/// class is at most 2, weight at most the class otherwise.
pub(crate) fn ado_truncation(class: usize) -> Truncation {
    if class <= 2 {
        Truncation::Length(class)
    } else {
        Truncation::Weight(class)
    }
}

/// The representation of `n` on `U(n)` modulo monomials beyond the class,
/// together with the weight of each target basis monomial.
pub fn ado_module(n: &LieAlgebra) -> Result<(Representation, Vec<usize>), RepError> {
    let class = n.nilpotency_class().ok_or(RepError::NotNilpotent)?;
    let env = Envelope::new(n, ado_truncation(class));
    let images = (0..n.dim()).map(|i| env.left_action(&n.basis_vec(i))).collect();
    let rep = Representation::new(n.clone(), env.dim(), images).with_standard_flag().verify();
    let v = rep.verified;
    if !(v.homomorphism && v.faithful && v.triangular_in_flag && v.unipotent_on_nilradical) {
        return Err(RepError::Verification(format!("enveloping module flags {:?}", v.names())));
    }
    Ok((rep, env.monomial_weights()))
}

pub fn nilpotent_ado(n: &LieAlgebra) -> Result<Representation, RepError> {
    Ok(ado_module(n)?.0)
}
