//! Triangular-by-compact certificates: `r = t ⊕ k` with `t` a supersolvable
//! ideal and `k` an abelian subalgebra acting by semisimple operators with
//! purely imaginary spectrum.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::weights::{adjoint_weights, flag_step_weights, supersolvable_test, NonRealWitness, Supersolvable};
use super::DefinabilityError;
use crate::lie::LieAlgebra;
use crate::linalg::jordan::jordan_chevalley;
use crate::linalg::mat::{is_zero_vec, Mat};
use crate::linalg::poly::{char_poly, Poly};
use crate::linalg::scalar::{GaussRat, Rat};
use crate::linalg::subspace::{Flag, Subspace};

/// Jordan-Chevalley data for `ad x`, `x` a basis element of `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct TorusEvidence {
    pub element: Vec<Rat>,
    pub char_poly: Poly,
    pub nilpotent_part_zero: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TbcCertificate {
    pub t: Subspace,
    pub k: Subspace,
    pub flag: Flag,
    pub torus_evidence: Vec<TorusEvidence>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TbcClause {
    Dimensions,
    TIdeal,
    FlagInT,
    FlagComplete,
    FlagIdeals,
    FlagRealWeights,
    DirectSum,
    KAbelian,
    KSemisimple,
    KImaginary,
    Evidence,
}

impl TbcClause {
    pub fn name(self) -> &'static str {
        match self {
            TbcClause::Dimensions => "dimensions",
            TbcClause::TIdeal => "t-ideal",
            TbcClause::FlagInT => "flag-in-t",
            TbcClause::FlagComplete => "flag-complete",
            TbcClause::FlagIdeals => "flag-ideals",
            TbcClause::FlagRealWeights => "flag-real-weights",
            TbcClause::DirectSum => "direct-sum",
            TbcClause::KAbelian => "k-abelian",
            TbcClause::KSemisimple => "k-semisimple",
            TbcClause::KImaginary => "k-imaginary-spectrum",
            TbcClause::Evidence => "torus-evidence",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("certificate rejected at clause `{}`: {detail}", clause.name())]
pub struct TbcFailure {
    pub clause: TbcClause,
    pub detail: String,
}

fn reject(clause: TbcClause, detail: impl Into<String>) -> TbcFailure {
    TbcFailure { clause, detail: detail.into() }
}

impl TbcCertificate {
    /// `(r, 0, flag)` for a supersolvable `r`.
    pub fn supersolvable(r: &LieAlgebra, flag: Flag) -> Self {
        TbcCertificate { t: r.full(), k: Subspace::zero(r.dim()), flag, torus_evidence: vec![] }
    }
}

/// Checks every clause of the certificate from scratch. `Ok` lists the clauses checked.
pub fn tbc_verify(r: &LieAlgebra, cert: &TbcCertificate) -> Result<Vec<TbcClause>, TbcFailure> {
    use TbcClause::*;
    let n = r.dim();
    if cert.t.ambient() != n || cert.k.ambient() != n || cert.flag.steps().iter().any(|s| s.ambient() != n) {
        return Err(reject(Dimensions, format!("subspaces must live in dimension {n}")));
    }
    if cert.torus_evidence.iter().any(|e| e.element.len() != n) {
        return Err(reject(Dimensions, "evidence element has the wrong length"));
    }
    if !r.is_ideal(&cert.t) {
        return Err(reject(TIdeal, "t is not an ideal"));
    }
    if cert.flag.steps().iter().any(|s| !cert.t.contains_space(s)) {
        return Err(reject(FlagInT, "a flag step leaves t"));
    }
    if !cert.flag.is_complete() || cert.flag.len() != cert.t.dim() {
        return Err(reject(FlagComplete, "flag does not have one-dimensional steps ending at t"));
    }
    if cert.flag.top().is_some_and(|s| *s != cert.t) {
        return Err(reject(FlagComplete, "last flag step differs from t"));
    }
    for (i, s) in cert.flag.steps().iter().enumerate() {
        if !s.contains_space(&r.bracket_spaces(&cert.t, s)) {
            return Err(reject(FlagIdeals, format!("step {} is not an ideal of t", i + 1)));
        }
    }
    // steps are rational lines modulo the previous step, so each weight is a
    // rational scalar; recomputing it confirms invariance
    let weights =
        flag_weights_in(r, &cert.t, &cert.flag).ok_or_else(|| reject(FlagRealWeights, "step weight undefined"))?;
    if weights.len() != cert.t.dim() {
        return Err(reject(FlagRealWeights, "wrong number of step weights"));
    }
    if !cert.t.intersect(&cert.k).is_zero() || cert.t.dim() + cert.k.dim() != n {
        return Err(reject(DirectSum, "t and k do not form a direct sum decomposition"));
    }
    if !r.bracket_spaces(&cert.k, &cert.k).is_zero() {
        return Err(reject(KAbelian, "k is not abelian"));
    }
    for (i, x) in cert.k.basis().iter().enumerate() {
        let ad = r.ad(x);
        let jc = jordan_chevalley(&ad).map_err(|e| reject(KSemisimple, e.to_string()))?;
        if !jc.nilpotent.is_zero() {
            return Err(reject(KSemisimple, format!("ad of k basis element {i} has a nilpotent part")));
        }
        let cp = char_poly(&ad).map_err(|e| reject(KImaginary, e.to_string()))?;
        if !cp.all_roots_imaginary().unwrap_or(false) {
            return Err(reject(
                KImaginary,
                format!("ad of k basis element {i} has spectrum off the imaginary axis: {cp}"),
            ));
        }
    }
    if cert.torus_evidence.len() != cert.k.dim() {
        return Err(reject(Evidence, "one evidence entry per k basis element expected"));
    }
    for (e, x) in cert.torus_evidence.iter().zip(cert.k.basis()) {
        if &e.element != x {
            return Err(reject(Evidence, "evidence element differs from the k basis"));
        }
        let cp = char_poly(&r.ad(x)).map_err(|err| reject(Evidence, err.to_string()))?;
        if cp != e.char_poly || !e.nilpotent_part_zero {
            return Err(reject(Evidence, "recorded Jordan-Chevalley data does not match"));
        }
    }
    Ok(vec![
        Dimensions,
        TIdeal,
        FlagInT,
        FlagComplete,
        FlagIdeals,
        FlagRealWeights,
        DirectSum,
        KAbelian,
        KSemisimple,
        KImaginary,
        Evidence,
    ])
}

/// Step weights of `t` (inside `r`) on a flag of `t`, in the coordinates of the echelon basis of `t`.
pub fn flag_weights_in(r: &LieAlgebra, t: &Subspace, flag: &Flag) -> Option<Vec<Vec<Rat>>> {
    let emb = r.subalgebra(t).ok()?;
    let steps: Option<Vec<Subspace>> = flag
        .steps()
        .iter()
        .map(|s| {
            let c: Option<Vec<Vec<Rat>>> = s.basis().iter().map(|v| emb.restrict(v)).collect();
            Some(Subspace::span(t.dim(), c?))
        })
        .collect();
    let inner = Flag::from_steps(steps?)?;
    flag_step_weights(&emb.algebra, &inner)
}

pub fn torus_evidence(r: &LieAlgebra, k: &Subspace) -> Vec<TorusEvidence> {
    k.basis()
        .iter()
        .map(|x| {
            let ad = r.ad(x);
            let nil = jordan_chevalley(&ad).map(|jc| jc.nilpotent.is_zero()).unwrap_or(false);
            TorusEvidence { element: x.clone(), char_poly: char_poly(&ad).expect("square"), nilpotent_part_zero: nil }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub enum ObstructionKind {
    /// `ker Re + ker Im != r`: no complement of `ker Im` consists of
    /// elements with purely imaginary spectrum.
    KernelSum { ker_re_dim: usize, ker_im_dim: usize },
    /// The imaginary semisimple part of `ad y` is not inner for an element `y`
    /// of the Cartan subalgebra `ker (ad regular)^n`.
    NonInner { regular: Vec<Rat>, element: Vec<Rat> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct TbcObstruction {
    pub kind: ObstructionKind,
    pub witness: NonRealWitness,
}

impl TbcObstruction {
    pub fn explanation(&self) -> String {
        match &self.kind {
            ObstructionKind::KernelSum { ker_re_dim, ker_im_dim } => format!(
                "the common kernel of the real parts of the weights (dim {ker_re_dim}) and of the imaginary parts \
                 (dim {ker_im_dim}) do not span; any t lies in the latter and any k in the former"
            ),
            ObstructionKind::NonInner { .. } => "the imaginary semisimple part of ad y for y in a Cartan subalgebra \
                 is not an inner derivation, so no torus complement exists"
                .to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum TbcOutcome {
    Certificate(TbcCertificate),
    NotTbc(TbcObstruction),
    Unknown(String),
}

/// Search for a triangular-by-compact splitting.
///
/// With all weights in Q(i): `t` is the common kernel of the imaginary parts
/// of the weights and `k` is spanned by the elements whose adjoint action is
/// the imaginary semisimple part of `ad y`, for `y` in a Cartan subalgebra
/// complementing `t`. Every candidate is passed through [`tbc_verify`].
pub fn tbc_find(r: &LieAlgebra) -> Result<TbcOutcome, DefinabilityError> {
    let n = r.dim();
    match supersolvable_test(r)? {
        Supersolvable::Yes(flag) => {
            let cert = TbcCertificate::supersolvable(r, flag);
            return Ok(checked(r, cert));
        }
        Supersolvable::Indeterminate { reason, .. } => return Ok(TbcOutcome::Unknown(reason)),
        Supersolvable::No(_) => {}
    }
    let table = adjoint_weights(r)?;
    let witness =
        NonRealWitness::from_table(&table).ok_or_else(|| DefinabilityError::Internal("no non-real weight".into()))?;
    let (ker_re, ker_im) = weight_kernels(r)?;
    if !ker_re.sum(&ker_im).is_full() {
        let kind = ObstructionKind::KernelSum { ker_re_dim: ker_re.dim(), ker_im_dim: ker_im.dim() };
        return Ok(TbcOutcome::NotTbc(TbcObstruction { kind, witness }));
    }
    let t = ker_im;
    let Some((regular, h)) = regular_cartan(r) else {
        return Ok(TbcOutcome::Unknown("no Cartan subalgebra found".into()));
    };
    let ys = t.intersect(&h).complement_in(&h);
    if ys.len() + t.dim() != n {
        return Err(DefinabilityError::Internal("Cartan subalgebra does not complement the derived algebra".into()));
    }
    let ads = r.ad_basis();
    let mut zs = Vec::new();
    for y in &ys {
        let Some(s_im) = imaginary_semisimple_part(&r.ad(y)) else {
            return Ok(TbcOutcome::Unknown("eigenvalues of ad y leave Q(i)".into()));
        };
        match solve_inner(&ads, &s_im) {
            Some(z) => zs.push(z),
            None => {
                let kind = ObstructionKind::NonInner { regular: regular.clone(), element: y.clone() };
                return Ok(TbcOutcome::NotTbc(TbcObstruction { kind, witness }));
            }
        }
    }
    let k = Subspace::span(n, zs);
    let emb = r.subalgebra(&t)?;
    let flag = match supersolvable_test(&emb.algebra)? {
        Supersolvable::Yes(f) => f,
        Supersolvable::No(_) => {
            return Err(DefinabilityError::Internal("kernel of imaginary parts not supersolvable".into()))
        }
        Supersolvable::Indeterminate { reason, .. } => return Ok(TbcOutcome::Unknown(reason)),
    };
    let steps: Vec<Subspace> = flag.steps().iter().map(|s| emb.lift_space(s)).collect();
    let flag = Flag::from_steps(steps).ok_or_else(|| DefinabilityError::Internal("lifted flag not strict".into()))?;
    let cert = TbcCertificate { torus_evidence: torus_evidence(r, &k), t, k, flag };
    Ok(checked(r, cert))
}

fn checked(r: &LieAlgebra, cert: TbcCertificate) -> TbcOutcome {
    match tbc_verify(r, &cert) {
        Ok(_) => TbcOutcome::Certificate(cert),
        Err(f) => TbcOutcome::Unknown(format!("candidate rejected by the verifier: {f}")),
    }
}

/// `z` with `ad z = target`, if one exists.
fn solve_inner(ads: &[Mat<Rat>], target: &Mat<Rat>) -> Option<Vec<Rat>> {
    let n = ads.len();
    let cols: Vec<Vec<Rat>> = ads.iter().map(|m| m.entries().to_vec()).collect();
    Mat::from_cols(&cols, n * n).solve(target.entries())
}

/// Semisimple part of `m` with the real parts of its eigenvalues removed;
/// `None` if the spectrum leaves Q(i).
pub fn imaginary_semisimple_part(m: &Mat<Rat>) -> Option<Mat<Rat>> {
    let s = jordan_chevalley(m).ok()?.semisimple;
    let roots: Vec<GaussRat> = char_poly(&s).ok()?.gauss_roots()?.into_iter().map(|(r, _)| r).collect();
    // Lagrange interpolation of Re(lambda) on the roots; conjugation symmetry
    // makes the coefficients rational
    let mut q = Poly::<GaussRat>::zero();
    for (j, lj) in roots.iter().enumerate() {
        let mut term = Poly::constant(GaussRat::real(lj.re.clone()));
        for (l, ll) in roots.iter().enumerate() {
            if l != j {
                let denom = lj.clone() - ll.clone();
                term = term
                    .mul(&Poly::linear_root(ll.clone()))
                    .scale(&(GaussRat::real(Rat::from_integer(1.into())) / denom));
            }
        }
        q = q.add(&term);
    }
    let s_re = q.eval_mat(&s.to_gauss()).to_real()?;
    Some(s.sub(&s_re))
}

/// A Cartan subalgebra `ker (ad x)^n` for a regular `x`, found by seeded
/// random search and checked to be nilpotent and self-normalizing.
pub fn cartan_subalgebra(r: &LieAlgebra) -> Option<Subspace> {
    regular_cartan(r).map(|(_, h)| h)
}

/// `ker (ad x)^n`, if it is a Cartan subalgebra.
pub fn cartan_of(r: &LieAlgebra, x: &[Rat]) -> Option<Subspace> {
    let n = r.dim();
    let h = Subspace::span(n, r.ad(x).pow(n as u32).kernel_basis());
    let nilpotent = r.lower_central_series_of(&h).last().is_some_and(|s| s.is_zero());
    (nilpotent && r.normalizer(&h) == h).then_some(h)
}

/// A regular element together with its Cartan subalgebra.
pub fn regular_cartan(r: &LieAlgebra) -> Option<(Vec<Rat>, Subspace)> {
    let n = r.dim();
    if n == 0 {
        return Some((vec![], Subspace::zero(0)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut best: Option<(Vec<Rat>, Subspace)> = None;
    for attempt in 0..(4 * n + 8) {
        let x: Vec<Rat> = if attempt < n {
            r.basis_vec(attempt)
        } else {
            (0..n).map(|_| Rat::from_integer(rng.gen_range(-9i64..=9).into())).collect()
        };
        if is_zero_vec(&x) {
            continue;
        }
        let h = Subspace::span(n, r.ad(&x).pow(n as u32).kernel_basis());
        if best.as_ref().is_none_or(|(_, b)| h.dim() < b.dim()) {
            best = Some((x, h));
        }
    }
    let (x, _) = best?;
    let h = cartan_of(r, &x)?;
    Some((x, h))
}

/// Kernels of the real and imaginary parts of the adjoint weights.
pub fn weight_kernels(r: &LieAlgebra) -> Result<(Subspace, Subspace), DefinabilityError> {
    let n = r.dim();
    let table = adjoint_weights(r)?;
    let re: Vec<Vec<Rat>> = table.entries.iter().map(|e| e.weight.iter().map(|x| x.re.clone()).collect()).collect();
    let im: Vec<Vec<Rat>> = table.entries.iter().map(|e| e.weight.iter().map(|x| x.im.clone()).collect()).collect();
    let ker_re = Subspace::span(n, Mat::from_rows_with_cols(re, n).kernel_basis());
    let ker_im = Subspace::span(n, Mat::from_rows_with_cols(im, n).kernel_basis());
    Ok((ker_re, ker_im))
}

/// Re-checks an obstruction without searching.
pub fn verify_obstruction(r: &LieAlgebra, kind: &ObstructionKind) -> Result<(), String> {
    let n = r.dim();
    match kind {
        ObstructionKind::KernelSum { ker_re_dim, ker_im_dim } => {
            let (ker_re, ker_im) = weight_kernels(r).map_err(|e| e.to_string())?;
            if ker_re.dim() != *ker_re_dim || ker_im.dim() != *ker_im_dim {
                return Err("recorded kernel dimensions do not match the weights".into());
            }
            if ker_re.sum(&ker_im).is_full() {
                return Err("the kernels span the algebra".into());
            }
            Ok(())
        }
        ObstructionKind::NonInner { regular, element } => {
            if regular.len() != n || element.len() != n {
                return Err("obstruction vectors have the wrong length".into());
            }
            let h = cartan_of(r, regular).ok_or("the recorded element does not define a Cartan subalgebra")?;
            if !h.contains(element) {
                return Err("the obstruction element is not in the Cartan subalgebra".into());
            }
            let s_im = imaginary_semisimple_part(&r.ad(element)).ok_or("eigenvalues of ad y leave Q(i)")?;
            if solve_inner(&r.ad_basis(), &s_im).is_some() {
                return Err("the imaginary semisimple part is inner".into());
            }
            Ok(())
        }
    }
}
