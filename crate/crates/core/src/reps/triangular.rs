//! Faithful triangular representations of supersolvable algebras and
//! extension of representations from an ideal.

use num_traits::Zero;

use super::ado::{nilpotent_ado, Envelope, Truncation};
use super::{direct_sum, RepError, Representation};
use crate::definability::tbc::cartan_subalgebra;
use crate::definability::weights::{rat_module_weights, rational_module_flag, supersolvable_test, Supersolvable};
use crate::definability::DefinabilityError;
use crate::lie::LieAlgebra;
use crate::linalg::eigen::Indeterminate;
use crate::linalg::mat::Mat;
use crate::linalg::scalar::Rat;
use crate::linalg::subspace::Subspace;
use crate::structure::nilradical;

/// A faithful representation of the supersolvable algebra `t`, upper
/// triangular in its standard flag and unipotent on the nilradical.
pub fn supersolvable_triangular_rep(t: &LieAlgebra) -> Result<Representation, RepError> {
    match supersolvable_test(t)? {
        Supersolvable::Yes(_) => {}
        Supersolvable::No(w) => return Err(RepError::NotSupersolvable(w)),
        Supersolvable::Indeterminate { reason, .. } => {
            return Err(DefinabilityError::Indeterminate(Indeterminate::new(reason)).into())
        }
    }
    let base = if t.is_nilpotent() {
        nilpotent_ado(t)?
    } else {
        let ad = Representation::adjoint(t);
        let z = t.center();
        let derived = t.derived_algebra();
        if z.is_zero() {
            ad
        } else if z.intersect(&derived).is_zero() {
            direct_sum(&ad, &character_block(t, &z, &derived))?
        } else {
            direct_sum(&ad, &nilradical_extension(t)?)?
        }
    };
    let basis = rational_module_flag(t, &base.images).map_err(DefinabilityError::from)?;
    let rep = base
        .in_basis(&basis)
        .ok_or_else(|| RepError::Verification("flag basis is singular".into()))?
        .with_standard_flag()
        .verify();
    let v = rep.verified;
    if !(v.homomorphism && v.faithful && v.triangular_in_flag && v.unipotent_on_nilradical) {
        return Err(RepError::Verification(format!("triangular construction flags {:?}", v.names())));
    }
    Ok(rep)
}

/// `x -> [[0, φ_1(x), ..., φ_m(x)], 0, ..., 0]` for characters `φ_a` of
/// `t/[t,t]` whose restrictions to the center are independent.
fn character_block(t: &LieAlgebra, z: &Subspace, derived: &Subspace) -> Representation {
    let n = t.dim();
    let mut chosen: Vec<Vec<Rat>> = Vec::new();
    let mut restricted = Subspace::zero(z.dim());
    for phi in derived.annihilator() {
        let r: Vec<Rat> = z.basis().iter().map(|v| crate::linalg::mat::dot(&phi, v)).collect();
        let grown = restricted.sum(&Subspace::span(z.dim(), vec![r]));
        if grown.dim() > restricted.dim() {
            restricted = grown;
            chosen.push(phi);
        }
        if restricted.is_full() {
            break;
        }
    }
    let m = chosen.len();
    let images = (0..n)
        .map(|j| {
            let mut b = Mat::zeros(m + 1, m + 1);
            for (a, phi) in chosen.iter().enumerate() {
                b[(0, a + 1)] = phi[j].clone();
            }
            b
        })
        .collect();
    Representation::new(t.clone(), m + 1, images)
}

/// A representation of `t` faithful on the nilradical: left multiplication
/// on a truncated enveloping algebra of the nilradical, with a complement
/// acting by derivations. Falls back to [`extend_rep`] when no complement
/// subalgebra makes this a homomorphism.
fn nilradical_extension(t: &LieAlgebra) -> Result<Representation, RepError> {
    let n = nilradical(t)?;
    let emb = t.subalgebra(&n).map_err(|e| RepError::Precondition(e.to_string()))?;
    let class = emb.algebra.nilpotency_class().ok_or(RepError::NotNilpotent)?;
    let env = Envelope::new(&emb.algebra, Truncation::Weight(class));
    let mut candidates = Vec::new();
    if let Some(h) = cartan_subalgebra(t) {
        candidates.push(h.intersect(&n).complement_in(&h));
    }
    candidates.push(n.complement_in(&t.full()));
    for comp in candidates {
        if comp.len() + n.dim() != t.dim() {
            continue;
        }
        let derivs: Vec<Mat<Rat>> = comp.iter().map(|x| n.restrict(&t.ad(x)).expect("ideal")).collect();
        let d_images: Vec<Mat<Rat>> = derivs.iter().map(|m| env.derivation_action(m)).collect();
        let images = split_images(t, &comp, &n, |a| d_images[a].clone(), |y| env.left_action(y));
        let rep = Representation::new(t.clone(), env.dim(), images).verify();
        if rep.verified.homomorphism {
            return Ok(rep);
        }
    }
    let ado = nilpotent_ado(&emb.algebra)?;
    extend_rep(t, &n, &ado)
}

/// Images of the basis of `g` from images of a complement (by index) and of
/// the subspace `h` (by echelon coordinates).
fn split_images(
    g: &LieAlgebra,
    comp: &[Vec<Rat>],
    h: &Subspace,
    comp_image: impl Fn(usize) -> Mat<Rat>,
    h_image: impl Fn(&[Rat]) -> Mat<Rat>,
) -> Vec<Mat<Rat>> {
    let n = g.dim();
    let mut cols: Vec<Vec<Rat>> = comp.to_vec();
    cols.extend(h.basis().iter().cloned());
    let change = Mat::from_cols(&cols, n);
    let k = comp.len();
    (0..n)
        .map(|j| {
            let coeffs = change.solve(&g.basis_vec(j)).expect("complement spans");
            let mut m = h_image(&coeffs[k..]);
            for (a, c) in coeffs[..k].iter().enumerate() {
                if !c.is_zero() {
                    m = m.add(&comp_image(a).scale(c));
                }
            }
            m
        })
        .collect()
}

/// Solutions `X` of `[X, ρ(y)] = ρ([x, y])` for all `y` in `h`, as a
/// particular solution and a basis of the homogeneous solutions.
fn commutation_solutions(
    g: &LieAlgebra,
    x: &[Rat],
    h: &Subspace,
    rho: &[Mat<Rat>],
    d: usize,
) -> Option<(Mat<Rat>, Vec<Mat<Rat>>)> {
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let mut rhs: Vec<Rat> = Vec::new();
    for (y, ry) in h.basis().iter().zip(rho) {
        let target = image_in(rho, &h.coords(&g.bracket(x, y)).expect("ideal"), d);
        for r in 0..d {
            for s in 0..d {
                let mut row = vec![Rat::zero(); d * d];
                for u in 0..d {
                    // (X ρ)_{rs} - (ρ X)_{rs}
                    row[r * d + u] += &ry[(u, s)];
                    row[u * d + s] -= &ry[(r, u)];
                }
                rows.push(row);
                rhs.push(target[(r, s)].clone());
            }
        }
    }
    let a = Mat::from_rows_with_cols(rows, d * d);
    let sol = a.solve(&rhs)?;
    let to_mat = |v: &[Rat]| Mat::from_fn(d, d, |r, s| v[r * d + s].clone());
    let kernel = a.kernel_basis().iter().map(|v| to_mat(v)).collect();
    Some((to_mat(&sol), kernel))
}

fn image_in(images: &[Mat<Rat>], coords: &[Rat], d: usize) -> Mat<Rat> {
    let mut out = Mat::zeros(d, d);
    for (c, m) in coords.iter().zip(images) {
        if !c.is_zero() {
            out = out.add(&m.scale(c));
        }
    }
    out
}

const CLOSURE_SEARCH_LIMIT: usize = 729;

/// Extends a representation `rho` of the ideal `h` (given on the echelon basis
/// of `h`) to all of `g`, faithful on `h`. The result is verified; when no
/// verified extension is found the outcome is [`RepError::Unsupported`].
pub fn extend_rep(g: &LieAlgebra, h: &Subspace, rho: &Representation) -> Result<Representation, RepError> {
    if !g.is_ideal(h) {
        return Err(RepError::Precondition("h is not an ideal".into()));
    }
    let sub = g.subalgebra(h).map_err(|e| RepError::Precondition(e.to_string()))?;
    if sub.algebra.constants() != rho.source.constants() {
        return Err(RepError::SourceMismatch);
    }
    if !rho.kernel().is_zero() {
        return Err(RepError::Precondition("ρ is not faithful on h".into()));
    }
    if h.is_full() {
        return Ok(Representation::new(g.clone(), rho.target_dim, rho.images.clone()).verify());
    }
    check_unipotence_condition(g, h, rho)?;
    let comp = h.complement_basis();
    for extra in 0..=1 {
        let d = rho.target_dim + extra;
        let rho_imgs: Vec<Mat<Rat>> =
            rho.images.iter().map(|m| Mat::block_diag(&[m.clone(), Mat::zeros(extra, extra)])).collect();
        let sols: Option<Vec<_>> = comp.iter().map(|x| commutation_solutions(g, x, h, &rho_imgs, d)).collect();
        let Some(sols) = sols else { continue };
        let free: usize = sols.iter().map(|(_, k)| k.len()).sum();
        let budget = if comp.len() <= 1 { 1 } else { CLOSURE_SEARCH_LIMIT };
        let tries = 3usize.checked_pow(free as u32).map_or(budget, |t| t.min(budget));
        for attempt in 0..tries {
            let mut digits = attempt;
            let xs: Vec<Mat<Rat>> = sols
                .iter()
                .map(|(p, ker)| {
                    let mut m = p.clone();
                    for kb in ker {
                        let c = (digits % 3) as i64 - if digits % 3 == 2 { 3 } else { 0 };
                        digits /= 3;
                        if c != 0 {
                            m = m.add(&kb.scale(&Rat::from_integer(c.into())));
                        }
                    }
                    m
                })
                .collect();
            let images = split_images(g, &comp, h, |a| xs[a].clone(), |y| image_in(&rho_imgs, y, d));
            let sigma = Representation::new(g.clone(), d, images).verify();
            let on_h = h.basis().iter().all(|y| !sigma.image(y).is_zero()) && restricted_kernel_zero(&sigma, h);
            if sigma.verified.homomorphism && on_h {
                return Ok(sigma);
            }
        }
    }
    Err(RepError::Unsupported("no verified extension found by the commutation solver".into()))
}

fn restricted_kernel_zero(sigma: &Representation, h: &Subspace) -> bool {
    super::restrict(sigma, h).is_ok_and(|r| r.kernel().is_zero())
}

/// The weights of `ρ` must vanish on `[g, h]`.
fn check_unipotence_condition(g: &LieAlgebra, h: &Subspace, rho: &Representation) -> Result<(), RepError> {
    if !rho.source.is_solvable().unwrap_or(false) {
        return Err(RepError::Precondition("the ideal must be solvable to check the unipotence condition".into()));
    }
    let table = rat_module_weights(&rho.source, &rho.images)?;
    let gh = g.bracket_spaces(&g.full(), h);
    for v in gh.basis() {
        let c = h.coords(v).expect("[g,h] inside h");
        for e in &table.entries {
            let val = e.weight.iter().zip(&c).fold(crate::linalg::scalar::GaussRat::zero(), |acc, (w, x)| {
                acc + w.clone() * crate::linalg::scalar::GaussRat::real(x.clone())
            });
            if !val.is_zero() {
                return Err(RepError::Precondition("ρ has a non-zero weight on [g, h]".into()));
            }
        }
    }
    Ok(())
}
