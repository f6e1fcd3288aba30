//! Polynomial equations for the Zariski closure of a torus acting by
//! rotation blocks.
//!
//! Block `j` rotates by the angle `Σ_k W[j][k] θ_k`. Writing
//! `z_j = c_j + i s_j`, the closure is cut out by `c_j² + s_j² = 1` and
//! `Π z_j^{m_j} = 1` for `m` in the relation lattice `{m : mᵀ W = 0}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::RepError;
use crate::linalg::mat::Mat;
use crate::linalg::scalar::{format_rat, Rat};
use crate::linalg::snf::{IntLattice, IntMat};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusWeights {
    /// One row per rotation block, one column per torus generator.
    pub weights: Vec<Vec<i64>>,
}

impl TorusWeights {
    pub fn new(weights: Vec<Vec<i64>>) -> Self {
        TorusWeights { weights }
    }

    pub fn from_rat(m: &Mat<Rat>) -> Result<Self, RepError> {
        let mut rows = Vec::new();
        for i in 0..m.nrows() {
            let mut row = Vec::new();
            for j in 0..m.ncols() {
                let x = &m[(i, j)];
                if !x.is_integer() {
                    return Err(RepError::Unsupported(format!("non-integer frequency {}", format_rat(x))));
                }
                row.push(
                    x.to_integer().to_i64().ok_or_else(|| RepError::Unsupported("frequency out of range".into()))?,
                );
            }
            rows.push(row);
        }
        Ok(TorusWeights { weights: rows })
    }

    pub fn blocks(&self) -> usize {
        self.weights.len()
    }

    pub fn generators(&self) -> usize {
        self.weights.first().map_or(0, |r| r.len())
    }
}

/// Polynomial with rational coefficients; a term is keyed by its exponent vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<u32>, Rat>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(e, Rat::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rat) {
        let v = self.terms.entry(e.clone()).or_insert_with(Rat::zero);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// Replaces variable `i` by `images[i]` (all in a common ring).
    pub fn substitute(&self, images: &[MPoly]) -> MPoly {
        let nv = images.first().map_or(0, |p| p.nvars);
        let mut out = MPoly::zero(nv);
        for (e, c) in &self.terms {
            let mut t = MPoly::constant(nv, c.clone());
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t = t.mul(&images[i]);
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Normal form modulo `b² + a² - 1` for each `(a, b)` variable pair:
    /// every `b²` is rewritten as `1 - a²`.
    pub fn reduce_circle(&self, pairs: &[(usize, usize)]) -> MPoly {
        let mut p = self.clone();
        loop {
            let hit = p
                .terms
                .iter()
                .find_map(|(e, c)| pairs.iter().find(|(_, b)| e[*b] >= 2).map(|&pr| (e.clone(), c.clone(), pr)));
            let Some((e, c, (a, b))) = hit else { return p };
            p.terms.remove(&e);
            let mut base = e.clone();
            base[b] -= 2;
            p.add_term(base.clone(), c.clone());
            base[a] += 2;
            p.add_term(base, -c);
        }
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        // higher total degree first
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| b.iter().sum::<u32>().cmp(&a.iter().sum::<u32>()).then_with(|| b.cmp(a)));
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| if p == 1 { names[i].clone() } else { format!("{}^{}", names[i], p) })
                .collect();
            if mono.is_empty() {
                out.push_str(&format_rat(&mag));
            } else {
                if !mag.is_one() {
                    out.push_str(&format_rat(&mag));
                    out.push('*');
                }
                out.push_str(&mono.join("*"));
            }
        }
        out
    }
}

fn block_names(n: usize) -> Vec<String> {
    (1..=n).flat_map(|j| [format!("c{j}"), format!("s{j}")]).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub lhs: MPoly,
    pub rhs: MPoly,
    /// Index of the relation lattice generator that produced it; `None` for circle equations.
    pub relation: Option<usize>,
}

impl Equation {
    pub fn display(&self, names: &[String]) -> String {
        format!("{} = {}", self.lhs.fmt_with(names), self.rhs.fmt_with(names))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TorusClosure {
    pub blocks: usize,
    pub relations: Vec<Vec<BigInt>>,
    pub equations: Vec<Equation>,
}

impl TorusClosure {
    pub fn variable_names(&self) -> Vec<String> {
        block_names(self.blocks)
    }

    pub fn equation_strings(&self) -> Vec<String> {
        let names = self.variable_names();
        self.equations.iter().map(|e| e.display(&names)).collect()
    }
}

impl fmt::Display for TorusClosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.equation_strings() {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

type Complex = (MPoly, MPoly);

fn cmul(a: &Complex, b: &Complex) -> Complex {
    (a.0.mul(&b.0).sub(&a.1.mul(&b.1)), a.0.mul(&b.1).add(&a.1.mul(&b.0)))
}

fn cpow(z: &Complex, k: u32, nv: usize) -> Complex {
    let mut out = (MPoly::constant(nv, Rat::one()), MPoly::zero(nv));
    for _ in 0..k {
        out = cmul(&out, z);
    }
    out
}

/// `Π z_j^{e_j}` for non-negative exponents.
fn monomial(zs: &[Complex], exps: &[u32], nv: usize) -> Complex {
    let mut out = (MPoly::constant(nv, Rat::one()), MPoly::zero(nv));
    for (z, &k) in zs.iter().zip(exps) {
        out = cmul(&out, &cpow(z, k, nv));
    }
    out
}

/// The character relation `m` as two real equations `Re/Im Π_{m_j>0} z_j^{m_j} = Π_{m_j<0} z_j^{-m_j}`.
fn relation_equations(zs: &[Complex], m: &[BigInt], nv: usize) -> Result<(Complex, Complex), RepError> {
    let to_u32 =
        |x: &BigInt| x.abs().to_u32().ok_or_else(|| RepError::Unsupported("relation exponent too large".into()));
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for x in m {
        let k = to_u32(x)?;
        pos.push(if x.is_positive() { k } else { 0 });
        neg.push(if x.is_negative() { k } else { 0 });
    }
    Ok((monomial(zs, &pos, nv), monomial(zs, &neg, nv)))
}

/// `(Re, Im)` of `Π z^{m+} - Π z^{m-}` for each relation, in the block variables.
pub fn relation_pairs(blocks: usize, relations: &[Vec<BigInt>]) -> Result<Vec<(MPoly, MPoly)>, RepError> {
    let nv = 2 * blocks;
    let zs: Vec<Complex> = (0..blocks).map(|j| (MPoly::var(nv, 2 * j), MPoly::var(nv, 2 * j + 1))).collect();
    relations
        .iter()
        .map(|m| {
            let (l, r) = relation_equations(&zs, m, nv)?;
            Ok((l.0.sub(&r.0), l.1.sub(&r.1)))
        })
        .collect()
}

pub fn torus_zariski_closure(tw: &TorusWeights) -> Result<TorusClosure, RepError> {
    let n = tw.blocks();
    let r = tw.generators();
    if tw.weights.iter().any(|row| row.len() != r) {
        return Err(RepError::Precondition("weight matrix rows have different lengths".into()));
    }
    let w = IntMat::from_i64(&tw.weights);
    let wt = if n == 0 { IntMat::zeros(r, 0) } else { w.transpose() };
    let lattice = IntLattice::integer_kernel(&wt);
    let relations: Vec<Vec<BigInt>> = lattice
        .generators
        .into_iter()
        .map(|mut v| {
            if v.iter().rev().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
                v.iter_mut().for_each(|x| *x = -x.clone());
            }
            v
        })
        .collect();

    let nv = 2 * n;
    let zs: Vec<Complex> = (0..n).map(|j| (MPoly::var(nv, 2 * j), MPoly::var(nv, 2 * j + 1))).collect();
    let mut equations = Vec::new();
    for (idx, m) in relations.iter().enumerate() {
        let (lhs, rhs) = relation_equations(&zs, m, nv)?;
        equations.push(Equation { lhs: lhs.0, rhs: rhs.0, relation: Some(idx) });
        equations.push(Equation { lhs: lhs.1, rhs: rhs.1, relation: Some(idx) });
    }
    for z in &zs {
        let lhs = z.0.mul(&z.0).add(&z.1.mul(&z.1));
        equations.push(Equation { lhs, rhs: MPoly::constant(nv, Rat::one()), relation: None });
    }
    let closure = TorusClosure { blocks: n, relations, equations };
    verify_closure(tw, &closure)?;
    Ok(closure)
}

/// Pulls every equation back along `z_j = Π_k u_k^{W[j][k]}` with
/// `u_k = a_k + i b_k` on the unit circle and checks that it reduces to zero
/// modulo the circle ideal.
pub fn verify_closure(tw: &TorusWeights, closure: &TorusClosure) -> Result<(), RepError> {
    let r = tw.generators();
    let pv = 2 * r;
    let pairs: Vec<(usize, usize)> = (0..r).map(|k| (2 * k, 2 * k + 1)).collect();
    let us: Vec<Complex> = (0..r).map(|k| (MPoly::var(pv, 2 * k), MPoly::var(pv, 2 * k + 1))).collect();
    let mut images = Vec::new();
    for row in &tw.weights {
        let mut z = (MPoly::constant(pv, Rat::one()), MPoly::zero(pv));
        for (u, &wk) in us.iter().zip(row) {
            // u^{-1} = conj(u) on the circle
            let base = if wk >= 0 { u.clone() } else { (u.0.clone(), u.1.neg()) };
            z = cmul(&z, &cpow(&base, wk.unsigned_abs() as u32, pv));
        }
        images.push(z.0);
        images.push(z.1);
    }
    for (i, eq) in closure.equations.iter().enumerate() {
        let diff = eq.lhs.sub(&eq.rhs);
        let pulled = if images.is_empty() { diff } else { diff.substitute(&images) };
        if !pulled.reduce_circle(&pairs).is_zero() {
            return Err(RepError::Verification(format!("equation {} does not vanish on the torus", i + 1)));
        }
    }
    Ok(())
}
