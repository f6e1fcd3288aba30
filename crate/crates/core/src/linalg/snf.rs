//! Integer matrices: Smith normal form, Hermite normal form and integer
//! relation lattices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::mat::Mat;
use super::scalar::Rat;

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<BigInt>>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![vec![BigInt::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = BigInt::one();
        }
        m
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        IntMat {
            rows: rows.len(),
            cols,
            data: rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
        }
    }

    pub fn mul(&self, o: &IntMat) -> IntMat {
        assert_eq!(self.cols, o.rows);
        let mut out = IntMat::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.data[i][k].is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    out.data[i][j] += &self.data[i][k] * &o.data[k][j];
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> IntMat {
        let mut out = IntMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j][i] = self.data[i][j].clone();
            }
        }
        out
    }

    pub fn to_rat(&self) -> Mat<Rat> {
        Mat::from_fn(self.rows, self.cols, |i, j| Rat::from_integer(self.data[i][j].clone()))
    }

    pub fn det(&self) -> BigInt {
        self.to_rat().det().to_integer()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.data.swap(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for r in &mut self.data {
            r.swap(a, b);
        }
    }

    /// row[i] += f * row[j]
    fn add_row(&mut self, i: usize, j: usize, f: &BigInt) {
        for c in 0..self.cols {
            let v = &self.data[j][c] * f;
            self.data[i][c] += v;
        }
    }

    /// col[i] += f * col[j]
    fn add_col(&mut self, i: usize, j: usize, f: &BigInt) {
        for r in 0..self.rows {
            let v = &self.data[r][j] * f;
            self.data[r][i] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for v in &mut self.data[i] {
            *v = -v.clone();
        }
    }
}

/// `U * A * V = D` with `U`, `V` unimodular and `D` diagonal with `d_1 | d_2 | ...`.
#[derive(Clone, Debug, PartialEq)]
pub struct SmithForm {
    pub u: IntMat,
    pub d: IntMat,
    pub v: IntMat,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols)).map(|i| self.d.data[i][i].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

pub fn smith_normal_form(a: &IntMat) -> SmithForm {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMat::identity(m);
    let mut v = IntMat::identity(n);
    let mut t = 0;
    while t < m.min(n) {
        // pivot: smallest nonzero absolute value in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if !d.data[i][j].is_zero() && best.is_none_or(|(bi, bj)| d.data[i][j].abs() < d.data[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        let mut clean = true;
        for i in t + 1..m {
            if !d.data[i][t].is_zero() {
                let q = d.data[i][t].div_floor(&d.data[t][t]);
                d.add_row(i, t, &-q.clone());
                u.add_row(i, t, &-q);
                if !d.data[i][t].is_zero() {
                    clean = false;
                }
            }
        }
        for j in t + 1..n {
            if !d.data[t][j].is_zero() {
                let q = d.data[t][j].div_floor(&d.data[t][t]);
                d.add_col(j, t, &-q.clone());
                v.add_col(j, t, &-q);
                if !d.data[t][j].is_zero() {
                    clean = false;
                }
            }
        }
        if !clean {
            continue;
        }
        // divisibility chain
        let piv = d.data[t][t].clone();
        let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !(&d.data[i][j] % &piv).is_zero()));
        if let Some(i) = bad {
            d.add_row(t, i, &BigInt::one());
            u.add_row(t, i, &BigInt::one());
            continue;
        }
        if piv.is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    SmithForm { u, d, v }
}

/// Row-style Hermite normal form of the row lattice (zero rows dropped).
pub fn hermite_rows(rows: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    let mut m = IntMat { rows: rows.len(), cols, data: rows.to_vec() };
    let mut r = 0;
    for c in 0..cols {
        if r == m.rows {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in r..m.rows {
                if !m.data[i][c].is_zero() && best.is_none_or(|b| m.data[i][c].abs() < m.data[b][c].abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            m.swap_rows(r, b);
            let mut done = true;
            for i in r + 1..m.rows {
                if !m.data[i][c].is_zero() {
                    let q = m.data[i][c].div_floor(&m.data[r][c]);
                    m.add_row(i, r, &-q);
                    if !m.data[i][c].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if r < m.rows && !m.data[r][c].is_zero() {
            if m.data[r][c].is_negative() {
                m.negate_row(r);
            }
            for i in 0..r {
                let q = m.data[i][c].div_floor(&m.data[r][c]);
                if !q.is_zero() {
                    m.add_row(i, r, &-q);
                }
            }
            r += 1;
        }
    }
    m.data.truncate(r);
    m.data
}

/// Saturated integer lattice given by linearly independent generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntLattice {
    pub ambient: usize,
    pub generators: Vec<Vec<BigInt>>,
}

impl IntLattice {
    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// `{x in Z^n : A x = 0}` with a canonical (Hermite) basis.
    pub fn integer_kernel(a: &IntMat) -> IntLattice {
        let snf = smith_normal_form(a);
        let r = snf.rank();
        let gens: Vec<Vec<BigInt>> =
            (r..a.cols).map(|j| (0..a.cols).map(|i| snf.v.data[i][j].clone()).collect()).collect();
        IntLattice { ambient: a.cols, generators: hermite_rows(&gens, a.cols) }
    }

    /// Contains `x` when `x` is an integer combination of the generators.
    pub fn contains(&self, x: &[BigInt]) -> bool {
        let mut rows = self.generators.clone();
        let base = hermite_rows(&rows, self.ambient);
        rows.push(x.to_vec());
        hermite_rows(&rows, self.ambient) == base
    }

    /// True when the generators span a primitive sublattice (no torsion in the quotient).
    pub fn is_saturated(&self) -> bool {
        if self.generators.is_empty() {
            return true;
        }
        let m = IntMat { rows: self.generators.len(), cols: self.ambient, data: self.generators.clone() };
        smith_normal_form(&m).diagonal().iter().all(|d| d.is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: &IntMat) -> SmithForm {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).mul(&s.v), s.d);
        assert!(s.u.det().abs().is_one());
        assert!(s.v.det().abs().is_one());
        let diag = s.diagonal();
        for w in diag.windows(2) {
            if !w[1].is_zero() {
                assert!((&w[1] % &w[0]).is_zero());
            }
        }
        for i in 0..s.d.rows {
            for j in 0..s.d.cols {
                if i != j {
                    assert!(s.d.data[i][j].is_zero());
                }
            }
        }
        s
    }

    #[test]
    fn smith_examples() {
        let s = check(&IntMat::identity(3));
        assert_eq!(s.d, IntMat::identity(3));
        let s = check(&IntMat::from_i64(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
        let s = check(&IntMat::from_i64(&[vec![1, 2]]));
        assert_eq!(s.d, IntMat::from_i64(&[vec![1, 0]]));
        check(&IntMat::from_i64(&[vec![4, 6, 8], vec![6, 9, 3], vec![2, 0, 10]]));
        check(&IntMat::zeros(2, 3));
    }

    #[test]
    fn kernel_lattice() {
        // relations m with m . (1, 2) = 0
        let l = IntLattice::integer_kernel(&IntMat::from_i64(&[vec![1, 2]]));
        assert_eq!(l.rank(), 1);
        let g = &l.generators[0];
        assert_eq!(g[0].clone() + BigInt::from(2) * g[1].clone(), BigInt::zero());
        assert!(l.is_saturated());
        assert!(l.contains(&[BigInt::from(4), BigInt::from(-2)]));
        assert!(!l.contains(&[BigInt::from(1), BigInt::from(0)]));
    }

    #[test]
    fn hermite_canonical() {
        let a = hermite_rows(&[vec![BigInt::from(2), BigInt::from(4)], vec![BigInt::from(1), BigInt::from(3)]], 2);
        assert_eq!(a, vec![vec![BigInt::from(1), BigInt::from(1)], vec![BigInt::from(0), BigInt::from(2)]]);
    }
}
