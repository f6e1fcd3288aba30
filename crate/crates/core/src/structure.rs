//! Radical, nilradical, Levi decomposition and Levi factors commuting with a torus.
//! Every routine checks its own output before returning it.

use num_traits::Zero;

use crate::lie::{LieAlgebra, LieError};
use crate::linalg::jordan::is_semisimple as mat_is_semisimple;
use crate::linalg::mat::{dot, is_zero_vec, Mat};
use crate::linalg::poly::char_poly;
use crate::linalg::scalar::Rat;
use crate::linalg::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("postcondition failed in {op}: {msg}")]
    Verification { op: &'static str, msg: String },
    #[error("not a torus subalgebra of the radical: {0}")]
    NotTorus(String),
}

fn fail(op: &'static str, msg: impl Into<String>) -> StructureError {
    StructureError::Verification { op, msg: msg.into() }
}

/// `g = radical ⊕ levi`.
#[derive(Clone, Debug, PartialEq)]
pub struct LeviDecomposition {
    pub radical: Subspace,
    pub levi: Subspace,
}

fn kernel_space(n: usize, rows: Vec<Vec<Rat>>) -> Subspace {
    if rows.is_empty() {
        return Subspace::full(n);
    }
    Subspace::span(n, Mat::from_rows_with_cols(rows, n).kernel_basis())
}

pub fn is_solvable_subalgebra(g: &LieAlgebra, s: &Subspace) -> bool {
    g.derived_series_of(s).last().unwrap().is_zero()
}

pub fn is_nilpotent_subalgebra(g: &LieAlgebra, s: &Subspace) -> bool {
    g.lower_central_series_of(s).last().unwrap().is_zero()
}

/// Killing-orthogonal of `[g, g]`.
pub fn radical(g: &LieAlgebra) -> Result<Subspace, StructureError> {
    let k = g.killing_form();
    let rows: Vec<Vec<Rat>> = g.derived_algebra().basis().iter().map(|d| k.mul_vec(d)).collect();
    let r = kernel_space(g.dim(), rows);
    if !g.is_ideal(&r) {
        return Err(fail("radical", "result is not an ideal"));
    }
    if !is_solvable_subalgebra(g, &r) {
        return Err(fail("radical", "result is not solvable"));
    }
    Ok(r)
}

/// Span of all products of the given matrices (the associative algebra they generate).
pub fn associative_hull(gens: &[Mat<Rat>]) -> Vec<Mat<Rat>> {
    let mut basis: Vec<Mat<Rat>> = Vec::new();
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let push = |m: Mat<Rat>, basis: &mut Vec<Mat<Rat>>, rows: &mut Vec<Vec<Rat>>| {
        let mut trial = rows.clone();
        trial.push(m.entries().to_vec());
        if Mat::from_rows(trial.clone()).rank() > rows.len() {
            *rows = trial;
            basis.push(m);
        }
    };
    for g in gens {
        push(g.clone(), &mut basis, &mut rows);
    }
    let mut i = 0;
    while i < basis.len() {
        for j in 0..gens.len() {
            let p = basis[i].mul(&gens[j]);
            push(p, &mut basis, &mut rows);
        }
        i += 1;
    }
    basis
}

/// `{x in radical : ad x in Rad(A)}` with `A` the associative hull of `ad(radical)`
/// and `Rad(A)` the kernel of the trace form on `A`.
pub fn nilradical(g: &LieAlgebra) -> Result<Subspace, StructureError> {
    let n = g.dim();
    let r = radical(g)?;
    if r.is_zero() {
        return Ok(r);
    }
    let ads: Vec<Mat<Rat>> = r.basis().iter().map(|x| g.ad(x)).collect();
    let hull = associative_hull(&ads);
    // coefficient c over the radical basis; constraint tr(ad(sum c_i r_i) b) = 0
    let rows: Vec<Vec<Rat>> = hull.iter().map(|b| ads.iter().map(|a| a.mul(b).trace()).collect()).collect();
    let coeffs = kernel_space(r.dim(), rows);
    let vecs: Vec<Vec<Rat>> = coeffs.basis().iter().map(|c| crate::linalg::mat::combine(c, r.basis(), n)).collect();
    let nil = Subspace::span(n, vecs);
    if !g.is_ideal(&nil) {
        return Err(fail("nilradical", "result is not an ideal"));
    }
    if !is_nilpotent_subalgebra(g, &nil) {
        return Err(fail("nilradical", "result is not nilpotent"));
    }
    if !nil.contains_space(&g.bracket_spaces(&g.full(), &r)) {
        return Err(fail("nilradical", "result does not contain [g, radical]"));
    }
    Ok(nil)
}

pub fn levi_subalgebra(g: &LieAlgebra) -> Result<LeviDecomposition, StructureError> {
    let r = radical(g)?;
    let levi = levi_complement(g, &r)?;
    verify_levi(g, &r, &levi)?;
    Ok(LeviDecomposition { radical: r, levi })
}

/// Checks: subalgebra, semisimple (own Killing form nondegenerate), trivial
/// intersection with the radical, dimensions add up.
pub fn verify_levi(g: &LieAlgebra, r: &Subspace, s: &Subspace) -> Result<(), StructureError> {
    if !g.is_subalgebra(s) {
        return Err(fail("levi", "complement not closed under the bracket"));
    }
    if !s.is_zero() && !g.subalgebra(s)?.algebra.is_semisimple() {
        return Err(fail("levi", "complement has degenerate Killing form"));
    }
    if !r.intersect(s).is_zero() {
        return Err(fail("levi", "complement meets the radical"));
    }
    if r.dim() + s.dim() != g.dim() {
        return Err(fail("levi", "dimensions do not add up"));
    }
    Ok(())
}

/// Levi-Malcev by recursion on the derived series of the radical: quotient by
/// the last nonzero term `a` (an abelian ideal), split there, then correct the
/// lifted complement by a cocycle solve with values in `a`.
fn levi_complement(g: &LieAlgebra, r: &Subspace) -> Result<Subspace, StructureError> {
    let n = g.dim();
    if r.is_zero() {
        return Ok(g.full());
    }
    if r.is_full() {
        return Ok(Subspace::zero(n));
    }
    let series = g.derived_series_of(r);
    let a = series.iter().rev().find(|s| !s.is_zero()).unwrap().clone();
    let q = g.quotient(&a)?;
    let rq = Subspace::span(q.algebra.dim(), r.basis().iter().map(|v| q.project(v)).collect());
    let sbar = levi_complement(&q.algebra, &rq)?;
    let sb = sbar.basis().to_vec();
    let k = sb.len();
    let m = a.dim();
    let sigma: Vec<Vec<Rat>> = sb.iter().map(|b| q.lift(b)).collect();
    // unknown u[i*m + l]: phi(b_i) = sum_l u[i*m+l] a_l
    let nvars = k * m;
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let mut rhs: Vec<Rat> = Vec::new();
    let idx = |i: usize, l: usize| i * m + l;
    for i in 0..k {
        for j in i + 1..k {
            let c = sbar
                .coords(&q.algebra.bracket(&sb[i], &sb[j]))
                .ok_or_else(|| fail("levi", "quotient complement not closed"))?;
            let br = g.bracket(&sigma[i], &sigma[j]);
            let lifted = crate::linalg::mat::combine(&c, &sigma, n);
            let beta = crate::linalg::mat::vec_sub(&br, &lifted);
            if !a.contains(&beta) {
                return Err(fail("levi", "lift defect outside the abelian ideal"));
            }
            // beta + [s_i, phi_j] - [s_j, phi_i] - sum_k c_k phi_k = 0
            let mut eq = vec![vec![Rat::zero(); nvars]; n];
            for l in 0..m {
                let al = &a.basis()[l];
                let si = g.bracket(&sigma[i], al);
                let sj = g.bracket(&sigma[j], al);
                for row in 0..n {
                    eq[row][idx(j, l)] += &si[row];
                    eq[row][idx(i, l)] -= &sj[row];
                    for kk in 0..k {
                        if !c[kk].is_zero() {
                            eq[row][idx(kk, l)] -= &c[kk] * &al[row];
                        }
                    }
                }
            }
            for row in 0..n {
                rows.push(eq[row].clone());
                rhs.push(-beta[row].clone());
            }
        }
    }
    let u = if rows.is_empty() {
        vec![Rat::zero(); nvars]
    } else {
        Mat::from_rows_with_cols(rows, nvars)
            .solve(&rhs)
            .ok_or_else(|| fail("levi", "cocycle equation has no solution"))?
    };
    let corrected: Vec<Vec<Rat>> = (0..k)
        .map(|i| {
            let phi = crate::linalg::mat::combine(&u[i * m..(i + 1) * m], a.basis(), n);
            crate::linalg::mat::vec_add(&sigma[i], &phi)
        })
        .collect();
    Ok(Subspace::span(n, corrected))
}

/// Levi factor of `g` contained in the centralizer of the torus `k`.
pub fn commuting_levi(g: &LieAlgebra, k: &Subspace) -> Result<Subspace, StructureError> {
    let r = radical(g)?;
    if !r.contains_space(k) {
        return Err(StructureError::NotTorus("not contained in the radical".into()));
    }
    if !g.bracket_spaces(k, k).is_zero() {
        return Err(StructureError::NotTorus("not abelian".into()));
    }
    for x in k.basis() {
        let ad = g.ad(x);
        if !mat_is_semisimple(&ad) {
            return Err(StructureError::NotTorus("ad is not semisimple".into()));
        }
        let cp = char_poly(&ad).map_err(|e| StructureError::NotTorus(e.to_string()))?;
        if !cp.all_roots_imaginary().unwrap_or(false) {
            return Err(StructureError::NotTorus(format!("ad has spectrum off the imaginary axis ({cp})")));
        }
    }
    let c = g.centralizer(k);
    let emb = g.subalgebra(&c)?;
    let inner = levi_subalgebra(&emb.algebra)?;
    let l = emb.lift_space(&inner.levi);
    for a in l.basis() {
        for b in k.basis() {
            if !is_zero_vec(&g.bracket(a, b)) {
                return Err(fail("commuting_levi", "Levi factor does not centralize k"));
            }
        }
    }
    if !l.sum(&r).is_full() {
        return Err(fail("commuting_levi", "Levi factor and radical do not span"));
    }
    verify_levi(g, &r, &l)?;
    Ok(l)
}

/// Killing form of `g` restricted to `s`, as a Gram matrix in the echelon basis of `s`.
pub fn killing_gram(g: &LieAlgebra, s: &Subspace) -> Mat<Rat> {
    let k = g.killing_form();
    let b = s.basis();
    Mat::from_fn(b.len(), b.len(), |i, j| dot(&b[i], &k.mul_vec(&b[j])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::named;
    use crate::linalg::scalar::rat;

    fn v(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn radicals() {
        let e = named::e2().algebra;
        assert!(radical(&e).unwrap().is_full());
        assert!(radical(&named::sl2().algebra).unwrap().is_zero());
        let gl = named::gl2().algebra;
        assert_eq!(radical(&gl).unwrap(), Subspace::span(4, vec![v(&[1, 0, 0, 1])]));
    }

    #[test]
    fn nilradicals() {
        let h = named::heisenberg().algebra;
        assert!(nilradical(&h).unwrap().is_full());
        let e = named::e2().algebra;
        assert_eq!(nilradical(&e).unwrap(), Subspace::span(3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]));
        let a = named::ax_plus_b().algebra;
        assert_eq!(nilradical(&a).unwrap(), Subspace::span(2, vec![v(&[0, 1])]));
        let s = named::sl2_ltimes_r2().algebra;
        assert_eq!(nilradical(&s).unwrap().dim(), 2);
    }

    #[test]
    fn levi_examples() {
        let s = named::sl2().algebra;
        let d = levi_subalgebra(&s).unwrap();
        assert!(d.radical.is_zero() && d.levi.is_full());
        let gl = named::gl2().algebra;
        let d = levi_subalgebra(&gl).unwrap();
        assert_eq!(d.levi, Subspace::span(4, vec![v(&[1, 0, 0, -1]), v(&[0, 1, 0, 0]), v(&[0, 0, 1, 0])]));
        let sr = named::sl2_ltimes_r2().algebra;
        let d = levi_subalgebra(&sr).unwrap();
        assert_eq!(d.radical.dim(), 2);
        assert_eq!(d.levi.dim(), 3);
        assert!(!killing_gram(&sr, &d.levi).det().is_zero());
    }

    #[test]
    fn commuting_levi_examples() {
        let g = named::so3_plus_e2().algebra;
        let k = Subspace::span(6, vec![v(&[0, 0, 0, 1, 0, 0])]);
        let l = commuting_levi(&g, &k).unwrap();
        let so3 = Subspace::span(6, vec![v(&[1, 0, 0, 0, 0, 0]), v(&[0, 1, 0, 0, 0, 0]), v(&[0, 0, 1, 0, 0, 0])]);
        assert_eq!(l, so3);
        let s = named::sl2_plus_r().algebra;
        let l = commuting_levi(&s, &Subspace::span(4, vec![v(&[0, 0, 0, 1])])).unwrap();
        assert_eq!(l.dim(), 3);
        let l0 = commuting_levi(&s, &Subspace::zero(4)).unwrap();
        assert_eq!(l0, levi_subalgebra(&s).unwrap().levi);
        let e = named::ax_plus_b().algebra;
        assert!(matches!(commuting_levi(&e, &Subspace::span(2, vec![v(&[1, 0])])), Err(StructureError::NotTorus(_))));
    }
}
