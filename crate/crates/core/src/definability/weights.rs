//! Weights of solvable algebras over Q(i) and the supersolvability test.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::DefinabilityError;
use crate::lie::LieAlgebra;
use crate::linalg::eigen::{simultaneous_eigenspace, Indeterminate};
use crate::linalg::mat::{combine, Mat};
use crate::linalg::poly::char_poly;
use crate::linalg::scalar::{GaussRat, Rat, Scalar};
use crate::linalg::subspace::{Flag, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Realness {
    Real,
    NonReal,
}

/// A weight as its values on the basis of the acting algebra.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeightEntry {
    pub weight: Vec<GaussRat>,
    pub multiplicity: usize,
    pub realness: Realness,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeightTable {
    pub entries: Vec<WeightEntry>,
}

impl WeightTable {
    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    pub fn all_real(&self) -> bool {
        self.entries.iter().all(|e| e.realness == Realness::Real)
    }

    pub fn all_zero(&self) -> bool {
        self.entries.iter().all(|e| e.weight.iter().all(|x| x.is_zero()))
    }

    pub fn first_non_real(&self) -> Option<&WeightEntry> {
        self.entries.iter().find(|e| e.realness == Realness::NonReal)
    }

    fn add(&mut self, weight: Vec<GaussRat>, mult: usize) {
        if let Some(e) = self.entries.iter_mut().find(|e| e.weight == weight) {
            e.multiplicity += mult;
            return;
        }
        let realness = if weight.iter().all(|x| x.is_real()) { Realness::Real } else { Realness::NonReal };
        self.entries.push(WeightEntry { weight, multiplicity: mult, realness });
    }
}

/// Composition-series weights of `t` acting on `Q(i)^d` through `action`
/// (one matrix per basis element of `t`).
pub fn module_weights(t: &LieAlgebra, action: &[Mat<GaussRat>]) -> Result<WeightTable, DefinabilityError> {
    assert_eq!(action.len(), t.dim());
    let derived: Vec<Vec<GaussRat>> =
        t.derived_algebra().basis().iter().map(|v| v.iter().map(|x| GaussRat::real(x.clone())).collect()).collect();
    let mut mats: Vec<Mat<GaussRat>> = action.to_vec();
    let mut d = mats.first().map_or(0, |m| m.nrows());
    let mut table = WeightTable { entries: vec![] };
    if t.dim() == 0 {
        if d > 0 {
            table.add(vec![], d);
        }
        return Ok(table);
    }
    while d > 0 {
        // common eigenvectors lie in the joint kernel of the derived algebra
        let mut vprime = Subspace::<GaussRat>::full(d);
        for y in &derived {
            let m = combine_mats(y, &mats, d);
            vprime = vprime.intersect(&Subspace::span(d, m.kernel_basis()));
        }
        let restricted: Option<Vec<Mat<GaussRat>>> = mats.iter().map(|m| vprime.restrict(m)).collect();
        let restricted = restricted.ok_or_else(|| {
            DefinabilityError::Input("action is not a representation: derived kernel not invariant".into())
        })?;
        if vprime.is_zero() {
            return Err(DefinabilityError::Input("action is not a representation of a solvable algebra".into()));
        }
        let parts = simultaneous_eigenspace(&restricted)?;
        let part = &parts[0];
        let k = vprime.dim();
        let mut e = part.space.clone();
        for (m, l) in restricted.iter().zip(&part.weight) {
            let shifted = m.sub(&Mat::identity(k).scale(l));
            e = e.intersect(&Subspace::span(k, shifted.kernel_basis()));
        }
        if e.is_zero() {
            return Err(DefinabilityError::Input("restricted action is not commutative".into()));
        }
        let lifted: Vec<Vec<GaussRat>> = e.basis().iter().map(|c| combine(c, vprime.basis(), d)).collect();
        let ev = Subspace::span(d, lifted);
        table.add(part.weight.clone(), ev.dim());
        mats = mats.iter().map(|m| ev.quotient_action(m)).collect();
        d -= ev.dim();
    }
    Ok(table)
}

fn combine_mats<F: Scalar>(c: &[F], mats: &[Mat<F>], d: usize) -> Mat<F> {
    let mut out = Mat::zeros(d, d);
    for (x, m) in c.iter().zip(mats) {
        if !x.is_zero() {
            out = out.add(&m.scale(x));
        }
    }
    out
}

pub fn adjoint_weights(t: &LieAlgebra) -> Result<WeightTable, DefinabilityError> {
    let action: Vec<Mat<GaussRat>> = t.ad_basis().iter().map(|m| m.to_gauss()).collect();
    module_weights(t, &action)
}

pub fn rat_module_weights(t: &LieAlgebra, action: &[Mat<Rat>]) -> Result<WeightTable, DefinabilityError> {
    let g: Vec<Mat<GaussRat>> = action.iter().map(|m| m.to_gauss()).collect();
    module_weights(t, &g)
}

/// Sturm realness of the spectrum of `ad e_i`, for each basis element.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SturmLine {
    pub basis_index: usize,
    pub char_poly: String,
    pub all_real: bool,
}

pub fn sturm_report(t: &LieAlgebra) -> Vec<SturmLine> {
    t.ad_basis()
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let cp = char_poly(m).expect("square");
            SturmLine { basis_index: i, char_poly: cp.to_string(), all_real: cp.all_roots_real().unwrap_or(false) }
        })
        .collect()
}

/// A basis element on which some weight takes a non-real value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NonRealWitness {
    pub weight: Vec<GaussRat>,
    pub basis_index: usize,
}

impl NonRealWitness {
    pub fn from_table(table: &WeightTable) -> Option<Self> {
        let e = table.first_non_real()?;
        let i = e.weight.iter().position(|x| !x.is_real())?;
        Some(NonRealWitness { weight: e.weight.clone(), basis_index: i })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Supersolvable {
    Yes(Flag),
    No(NonRealWitness),
    Indeterminate { reason: String, sturm: Vec<SturmLine> },
}

pub fn supersolvable_test(t: &LieAlgebra) -> Result<Supersolvable, DefinabilityError> {
    if !t.is_solvable()? {
        return Err(DefinabilityError::NotSolvable);
    }
    let table = match adjoint_weights(t) {
        Ok(tab) => tab,
        Err(DefinabilityError::Indeterminate(ind)) => {
            return Ok(Supersolvable::Indeterminate { reason: ind.reason, sturm: sturm_report(t) })
        }
        Err(e) => return Err(e),
    };
    if let Some(w) = NonRealWitness::from_table(&table) {
        return Ok(Supersolvable::No(w));
    }
    match real_ideal_flag(t) {
        Ok(basis) => {
            let flag = Flag::from_adapted_basis(t.dim(), &basis)
                .ok_or_else(|| DefinabilityError::Internal("flag basis is dependent".into()))?;
            Ok(Supersolvable::Yes(flag))
        }
        Err(ind) => Ok(Supersolvable::Indeterminate { reason: ind.reason, sturm: sturm_report(t) }),
    }
}

/// Adapted basis of a complete flag of ideals, built from rational common
/// eigenvectors. Requires rational weights.
fn real_ideal_flag(t: &LieAlgebra) -> Result<Vec<Vec<Rat>>, Indeterminate> {
    rational_module_flag(t, &t.ad_basis())
}

/// Adapted basis of a complete flag of `Q^d` invariant under `action` (one
/// matrix per basis element of the solvable algebra `t`), built from a
/// rational common eigenvector of each successive quotient.
pub fn rational_module_flag(t: &LieAlgebra, action: &[Mat<Rat>]) -> Result<Vec<Vec<Rat>>, Indeterminate> {
    let d = action.first().map_or(0, |m| m.nrows());
    let derived = t.derived_algebra();
    let mut prev = Subspace::<Rat>::zero(d);
    let mut out = Vec::with_capacity(d);
    while prev.dim() < d {
        let k = d - prev.dim();
        let mats: Vec<Mat<Rat>> = action.iter().map(|m| prev.quotient_action(m)).collect();
        let mut w = Subspace::full(k);
        for y in derived.basis() {
            w = w.intersect(&Subspace::span(k, combine_mats(y, &mats, k).kernel_basis()));
        }
        for m in &mats {
            let r = w.restrict(m).ok_or_else(|| Indeterminate::new("derived kernel not invariant"))?;
            let cp = char_poly(&r).map_err(|e| Indeterminate::new(e.to_string()))?;
            let roots =
                cp.rational_roots().ok_or_else(|| Indeterminate::new("rational root search exceeded limits"))?;
            let lambda = roots.first().ok_or_else(|| Indeterminate::new(format!("{cp} has no rational root")))?;
            w = w.intersect(&Subspace::span(k, m.sub(&Mat::identity(k).scale(lambda)).kernel_basis()));
        }
        let v = w.basis().first().ok_or_else(|| Indeterminate::new("no common eigenvector"))?;
        let mut lifted = vec![Rat::zero(); d];
        let free = (0..d).filter(|c| !prev.pivots().contains(c));
        for (c, x) in free.zip(v) {
            lifted[c] = x.clone();
        }
        prev = prev.sum(&Subspace::span(d, vec![lifted.clone()]));
        out.push(lifted);
    }
    Ok(out)
}

/// Weight of `t` on each one-dimensional step `F_{k}/F_{k-1}` of `flag`, or
/// `None` if some step is not `ad`-invariant modulo the previous one.
pub fn flag_step_weights(t: &LieAlgebra, flag: &Flag) -> Option<Vec<Vec<Rat>>> {
    let basis = flag.adapted_basis();
    let n = t.dim();
    let mut out = Vec::new();
    let mut prev = Subspace::zero(n);
    for (k, v) in basis.iter().enumerate() {
        let vq = prev.quotient_coords(v);
        let p = vq.iter().position(|x| !x.is_zero())?;
        let mut w = Vec::new();
        for i in 0..n {
            let img = t.bracket(&t.basis_vec(i), v);
            let iq = prev.quotient_coords(&img);
            let c = &iq[p] / &vq[p];
            let rem: Vec<Rat> = iq.iter().zip(&vq).map(|(a, b)| a - &c * b).collect();
            if rem.iter().any(|x| !x.is_zero()) {
                return None;
            }
            w.push(c);
        }
        out.push(w);
        prev = flag.steps()[k].clone();
    }
    Some(out)
}
