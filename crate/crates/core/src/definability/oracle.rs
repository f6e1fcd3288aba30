//! Rule dispatch deciding whether a connected Lie group is Lie-isomorphic to a
//! group definable in an o-minimal expansion of the reals.
//!
//! Rules, in dispatch order:
//!
//! * `solvable-simply-connected`: a simply connected solvable group is
//!   definable iff it is supersolvable. If `R = T K` is triangular by compact
//!   then `R/T` is a compact quotient of a simply connected solvable group,
//!   hence itself simply connected; a simply connected compact connected
//!   solvable group is trivial, so `T = R`.
//! * `linear-radical`: a connected linear group is definable iff its radical
//!   is triangular by compact. The torus directions of the certificate must
//!   also act compactly in the given matrices.
//! * `solvable-tbc`: a solvable group is definable iff it is triangular by
//!   compact.
//! * `finite-center-levi`: when the Levi subgroup has finite center, the
//!   group is definable iff the radical is triangular by compact. The
//!   converse direction is taken as stated in the literature rather than
//!   re-derived here.
//! * `open-regime`: everything else is reported as unknown.

use num_traits::Zero;

use super::tbc::{
    imaginary_semisimple_part, tbc_find, tbc_verify, verify_obstruction, ObstructionKind, TbcCertificate, TbcFailure,
    TbcOutcome,
};
use super::weights::{adjoint_weights, supersolvable_test, NonRealWitness, Supersolvable};
use super::DefinabilityError;
use crate::lie::{GroupPresentation, LieAlgebra, MatrixPresentation, PresentationKind};
use crate::linalg::jordan::{is_semisimple, jordan_chevalley};
use crate::linalg::mat::Mat;
use crate::linalg::poly::{char_poly, Poly};
use crate::linalg::scalar::{GaussRat, Rat};
use crate::linalg::subspace::Subspace;
use crate::structure::{is_solvable_subalgebra, radical};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Definable,
    NotDefinable,
    Unknown,
}

impl Outcome {
    pub fn name(self) -> &'static str {
        match self {
            Outcome::Definable => "Definable",
            Outcome::NotDefinable => "NotDefinable",
            Outcome::Unknown => "Unknown",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Definable => 0,
            Outcome::NotDefinable => 1,
            Outcome::Unknown => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    SolvableSimplyConnected,
    SolvableTbc,
    LinearRadical,
    FiniteCenterLevi,
    OpenRegime,
}

impl Rule {
    pub fn tag(self) -> &'static str {
        match self {
            Rule::SolvableSimplyConnected => "solvable-simply-connected",
            Rule::SolvableTbc => "solvable-tbc",
            Rule::LinearRadical => "linear-radical",
            Rule::FiniteCenterLevi => "finite-center-levi",
            Rule::OpenRegime => "open-regime",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Rule::SolvableSimplyConnected => "simply connected solvable criterion: definable iff supersolvable",
            Rule::SolvableTbc => "solvable criterion: definable iff triangular by compact",
            Rule::LinearRadical => "linear criterion: definable iff the solvable radical is triangular by compact",
            Rule::FiniteCenterLevi => {
                "finite-center Levi criterion: definable iff the solvable radical is triangular by compact"
            }
            Rule::OpenRegime => "no criterion applies (Levi factor with possibly infinite center)",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Rule> {
        [
            Rule::SolvableSimplyConnected,
            Rule::SolvableTbc,
            Rule::LinearRadical,
            Rule::FiniteCenterLevi,
            Rule::OpenRegime,
        ]
        .into_iter()
        .find(|r| r.tag() == tag)
    }
}

/// The radical (as an echelon basis in the coordinates of `g`) and a
/// triangular-by-compact certificate in the coordinates of that basis.
#[derive(Clone, Debug, PartialEq)]
pub struct RadicalCertificate {
    pub radical: Subspace,
    pub tbc: TbcCertificate,
}

/// An element whose adjoint action has a non-real eigenvalue.
#[derive(Clone, Debug, PartialEq)]
pub struct CounterWitness {
    pub element: Vec<Rat>,
    pub weight: Vec<GaussRat>,
    pub char_poly: Poly,
    /// Why the radical is not triangular by compact, in the coordinates of
    /// its echelon basis; required by the rules that test that property.
    pub obstruction: Option<ObstructionKind>,
}

impl CounterWitness {
    fn new(g: &LieAlgebra, radical: &Subspace, w: &NonRealWitness) -> Self {
        let element = radical.basis()[w.basis_index].clone();
        let char_poly = char_poly(&g.ad(&element)).expect("square");
        CounterWitness { element, weight: w.weight.clone(), char_poly, obstruction: None }
    }

    /// Sturm check: `ad element` has a non-real eigenvalue.
    pub fn confirm(&self, g: &LieAlgebra) -> bool {
        if self.element.len() != g.dim() {
            return false;
        }
        let cp = char_poly(&g.ad(&self.element)).expect("square");
        cp == self.char_poly && !cp.all_roots_real().unwrap_or(true)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DefinabilityVerdict {
    pub outcome: Outcome,
    pub rule: Rule,
    pub certificate: Option<RadicalCertificate>,
    pub counter_witness: Option<CounterWitness>,
    pub explanation: String,
    pub notes: Vec<String>,
}

impl DefinabilityVerdict {
    fn definable(rule: Rule, cert: RadicalCertificate, explanation: impl Into<String>) -> Self {
        DefinabilityVerdict {
            outcome: Outcome::Definable,
            rule,
            certificate: Some(cert),
            counter_witness: None,
            explanation: explanation.into(),
            notes: vec![],
        }
    }

    fn not_definable(rule: Rule, w: CounterWitness, explanation: impl Into<String>) -> Self {
        DefinabilityVerdict {
            outcome: Outcome::NotDefinable,
            rule,
            certificate: None,
            counter_witness: Some(w),
            explanation: explanation.into(),
            notes: vec![],
        }
    }

    fn unknown(rule: Rule, explanation: impl Into<String>) -> Self {
        DefinabilityVerdict {
            outcome: Outcome::Unknown,
            rule,
            certificate: None,
            counter_witness: None,
            explanation: explanation.into(),
            notes: vec![],
        }
    }
}

pub fn definability_oracle(p: &GroupPresentation) -> Result<DefinabilityVerdict, DefinabilityError> {
    let g = &p.algebra;
    g.validate().map_err(|v| DefinabilityError::Input(v.to_string()))?;
    if p.kind == PresentationKind::LinearMatrix && p.matrices.is_none() {
        return Err(DefinabilityError::Input("linear presentation without matrices".into()));
    }
    if let Some(m) = &p.matrices {
        if !m.is_compatible(g) || !m.is_independent() {
            return Err(DefinabilityError::Input("matrices do not present the algebra".into()));
        }
    }
    let solvable = g.is_solvable()?;
    let mut verdict = match (p.kind, solvable) {
        (PresentationKind::SimplyConnected, true) => {
            simply_connected_rule(g, Rule::SolvableSimplyConnected, &g.full())?
        }
        (PresentationKind::LinearMatrix, _) => linear_rule(g, p.matrices.as_ref().unwrap())?,
        (PresentationKind::AbstractConnected, true) => tbc_rule(g, Rule::SolvableTbc, &g.full())?,
        (kind, false) if p.finite_center_levi == Some(true) => {
            let r = radical(g)?;
            if kind == PresentationKind::SimplyConnected {
                let mut v = simply_connected_rule(g, Rule::FiniteCenterLevi, &r)?;
                v.notes.push("the radical of a simply connected group is simply connected".into());
                v
            } else {
                let mut v = tbc_rule(g, Rule::FiniteCenterLevi, &r)?;
                if v.outcome == Outcome::NotDefinable {
                    v.notes.push("necessity of the radical condition for non-linear groups is taken as asserted in the literature".into());
                }
                v
            }
        }
        (_, false) => DefinabilityVerdict::unknown(
            Rule::OpenRegime,
            "non-solvable group without a finite-center Levi factor: no decision procedure is known",
        ),
    };
    if let Some(m) = &p.matrices {
        if let Some(note) = presentation_note(m) {
            verdict.notes.push(note);
        }
    }
    Ok(verdict)
}

fn materialize(g: &LieAlgebra, r: &Subspace) -> Result<LieAlgebra, DefinabilityError> {
    Ok(g.subalgebra(r)?.algebra)
}

fn simply_connected_rule(g: &LieAlgebra, rule: Rule, r: &Subspace) -> Result<DefinabilityVerdict, DefinabilityError> {
    let ralg = materialize(g, r)?;
    Ok(match supersolvable_test(&ralg)? {
        Supersolvable::Yes(flag) => {
            let cert = RadicalCertificate { radical: r.clone(), tbc: TbcCertificate::supersolvable(&ralg, flag) };
            DefinabilityVerdict::definable(rule, cert, "the solvable radical is supersolvable")
        }
        Supersolvable::No(w) => DefinabilityVerdict::not_definable(
            rule,
            CounterWitness::new(g, r, &w),
            "a weight of the solvable radical takes a non-real value; the simply connected group is not supersolvable",
        ),
        Supersolvable::Indeterminate { reason, sturm } => {
            let summary: Vec<String> = sturm
                .iter()
                .map(|l| format!("ad e{}: {} real spectrum = {}", l.basis_index + 1, l.char_poly, l.all_real))
                .collect();
            DefinabilityVerdict::unknown(rule, format!("{reason}; Sturm report: {}", summary.join("; ")))
        }
    })
}

fn tbc_rule(g: &LieAlgebra, rule: Rule, r: &Subspace) -> Result<DefinabilityVerdict, DefinabilityError> {
    let ralg = materialize(g, r)?;
    Ok(match tbc_find(&ralg)? {
        TbcOutcome::Certificate(c) => {
            let what = if c.k.is_zero() { "supersolvable" } else { "triangular by compact" };
            let cert = RadicalCertificate { radical: r.clone(), tbc: c };
            DefinabilityVerdict::definable(rule, cert, format!("the solvable radical is {what}"))
        }
        TbcOutcome::NotTbc(obs) => {
            let mut w = CounterWitness::new(g, r, &obs.witness);
            w.obstruction = Some(obs.kind.clone());
            DefinabilityVerdict::not_definable(
                rule,
                w,
                format!("the solvable radical is not triangular by compact: {}", obs.explanation()),
            )
        }
        TbcOutcome::Unknown(why) => {
            DefinabilityVerdict::unknown(rule, format!("triangular-by-compact search inconclusive: {why}"))
        }
    })
}

fn linear_rule(g: &LieAlgebra, m: &MatrixPresentation) -> Result<DefinabilityVerdict, DefinabilityError> {
    let r = radical(g)?;
    let v = tbc_rule(g, Rule::LinearRadical, &r)?;
    if let Some(cert) = &v.certificate {
        if !torus_acts_compactly(g, m, cert) {
            return Ok(DefinabilityVerdict::unknown(
                Rule::LinearRadical,
                "the radical is triangular by compact as a Lie algebra, but a torus direction of the certificate \
                 does not act compactly in the given matrices",
            ));
        }
    }
    Ok(v)
}

/// Every torus direction of the certificate maps to a semisimple matrix with imaginary spectrum.
fn torus_acts_compactly(g: &LieAlgebra, m: &MatrixPresentation, cert: &RadicalCertificate) -> bool {
    let Ok(emb) = g.subalgebra(&cert.radical) else { return false };
    cert.tbc.k.basis().iter().all(|x| {
        let img = m.image(&emb.lift(x));
        let imaginary = char_poly(&img).map(|cp| cp.all_roots_imaginary().unwrap_or(false)).unwrap_or(false);
        is_semisimple(&img) && imaginary
    })
}

/// Whether the dispatch selects `rule` for this presentation.
pub fn rule_applies(p: &GroupPresentation, rule: Rule) -> bool {
    let Ok(solvable) = p.algebra.is_solvable() else { return false };
    let flc = p.finite_center_levi == Some(true);
    match (p.kind, rule) {
        (PresentationKind::LinearMatrix, r) => r == Rule::LinearRadical && p.matrices.is_some(),
        (PresentationKind::SimplyConnected, Rule::SolvableSimplyConnected) => solvable,
        (PresentationKind::AbstractConnected, Rule::SolvableTbc) => solvable,
        (_, Rule::FiniteCenterLevi) => !solvable && flc,
        (_, Rule::OpenRegime) => !solvable && !flc,
        _ => false,
    }
}

/// Rules whose Definable branch needs a supersolvable radical (`k = 0`).
fn needs_supersolvable(p: &GroupPresentation, rule: Rule) -> bool {
    rule == Rule::SolvableSimplyConnected
        || (rule == Rule::FiniteCenterLevi && p.kind == PresentationKind::SimplyConnected)
}

/// Reports when the matrix algebra does not contain the nilpotent, split and
/// compact parts of its elements, so the matrix group itself need not be
/// algebraic even though its Lie isomorphism class is decided.
fn presentation_note(m: &MatrixPresentation) -> Option<String> {
    let flat = |x: &Mat<Rat>| -> Vec<Rat> { x.row_vecs().concat() };
    let n2 = m.ambient * m.ambient;
    let span = Subspace::span(n2, m.mats.iter().map(flat).collect());
    let mut probes = m.mats.clone();
    if let Some(first) = m.mats.first() {
        let mut generic = Mat::zeros(first.nrows(), first.ncols());
        for (k, x) in m.mats.iter().enumerate() {
            generic = generic.add(&x.scale(&Rat::from_integer((k as i64 + 1).into())));
        }
        probes.push(generic);
    }
    let closed = probes.iter().all(|x| {
        let Ok(jc) = jordan_chevalley(x) else { return true };
        let Some(compact) = imaginary_semisimple_part(x) else { return true };
        let split = jc.semisimple.sub(&compact);
        [&jc.nilpotent, &compact, &split].iter().all(|p| span.contains(&flat(p)))
    });
    (!closed).then(|| {
        "the matrices do not contain the split and compact parts of their elements, so the matrix group as presented \
         need not be definable; the verdict concerns the Lie isomorphism class"
            .to_string()
    })
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum VerdictCheckFailure {
    #[error("radical clause: {0}")]
    Radical(String),
    #[error(transparent)]
    Tbc(#[from] TbcFailure),
    #[error("counter-witness clause: {0}")]
    Witness(String),
    #[error("obstruction clause: {0}")]
    Obstruction(String),
    #[error("presentation clause: {0}")]
    Presentation(String),
    #[error("verdict clause: {0}")]
    Shape(String),
}

impl VerdictCheckFailure {
    pub fn clause(&self) -> &'static str {
        match self {
            VerdictCheckFailure::Radical(_) => "radical",
            VerdictCheckFailure::Tbc(f) => f.clause.name(),
            VerdictCheckFailure::Witness(_) => "counter-witness",
            VerdictCheckFailure::Obstruction(_) => "obstruction",
            VerdictCheckFailure::Presentation(_) => "presentation",
            VerdictCheckFailure::Shape(_) => "verdict",
        }
    }
}

/// Checks that `cert.radical` is the solvable radical of `g` (solvable ideal
/// with semisimple quotient) and that the triangular-by-compact certificate holds.
pub fn verify_radical_certificate(g: &LieAlgebra, cert: &RadicalCertificate) -> Result<(), VerdictCheckFailure> {
    let r = &cert.radical;
    if r.ambient() != g.dim() {
        return Err(VerdictCheckFailure::Radical("radical lives in the wrong dimension".into()));
    }
    if !g.is_ideal(r) {
        return Err(VerdictCheckFailure::Radical("not an ideal".into()));
    }
    if !is_solvable_subalgebra(g, r) {
        return Err(VerdictCheckFailure::Radical("not solvable".into()));
    }
    if !r.is_full() {
        let q = g.quotient(r).map_err(|e| VerdictCheckFailure::Radical(e.to_string()))?;
        if !q.algebra.is_semisimple() {
            return Err(VerdictCheckFailure::Radical("quotient by it is not semisimple".into()));
        }
    }
    let ralg = g.subalgebra(r).map_err(|e| VerdictCheckFailure::Radical(e.to_string()))?.algebra;
    tbc_verify(&ralg, &cert.tbc)?;
    Ok(())
}

/// Checks the evidence carried by a verdict without re-running any search.
pub fn verify_verdict(p: &GroupPresentation, v: &DefinabilityVerdict) -> Result<(), VerdictCheckFailure> {
    let g = &p.algebra;
    if !rule_applies(p, v.rule) {
        return Err(VerdictCheckFailure::Shape(format!("rule {} does not apply", v.rule.tag())));
    }
    match v.outcome {
        Outcome::Definable => {
            let c = v
                .certificate
                .as_ref()
                .ok_or_else(|| VerdictCheckFailure::Shape("Definable without certificate".into()))?;
            if v.rule == Rule::OpenRegime {
                return Err(VerdictCheckFailure::Shape("the open regime never decides".into()));
            }
            verify_radical_certificate(g, c)?;
            if needs_supersolvable(p, v.rule) && !c.tbc.k.is_zero() {
                return Err(VerdictCheckFailure::Shape(
                    "this rule needs a supersolvable radical (empty torus part)".into(),
                ));
            }
            if let (Rule::LinearRadical, Some(m)) = (v.rule, &p.matrices) {
                if !torus_acts_compactly(g, m, c) {
                    return Err(VerdictCheckFailure::Presentation("a torus direction does not act compactly".into()));
                }
            }
            Ok(())
        }
        Outcome::NotDefinable => {
            let w = v
                .counter_witness
                .as_ref()
                .ok_or_else(|| VerdictCheckFailure::Shape("NotDefinable without counter-witness".into()))?;
            if v.rule == Rule::OpenRegime {
                return Err(VerdictCheckFailure::Shape("the open regime never decides".into()));
            }
            if w.element.iter().all(|x| x.is_zero()) {
                return Err(VerdictCheckFailure::Witness("zero element".into()));
            }
            if w.weight.iter().all(|x| x.is_real()) {
                return Err(VerdictCheckFailure::Witness("recorded weight is real".into()));
            }
            if !w.confirm(g) {
                return Err(VerdictCheckFailure::Witness(
                    "Sturm count shows only real eigenvalues or the polynomial differs".into(),
                ));
            }
            let r = radical(g).map_err(|e| VerdictCheckFailure::Radical(e.to_string()))?;
            if !r.contains(&w.element) {
                return Err(VerdictCheckFailure::Witness("element is not in the radical".into()));
            }
            let ralg = materialize(g, &r).map_err(|e| VerdictCheckFailure::Radical(e.to_string()))?;
            let table = adjoint_weights(&ralg).map_err(|e| VerdictCheckFailure::Radical(e.to_string()))?;
            if !table.entries.iter().any(|e| e.weight == w.weight) {
                return Err(VerdictCheckFailure::Witness(
                    "recorded weight is not an adjoint weight of the radical".into(),
                ));
            }
            let coords = r.coords(&w.element).expect("element lies in the radical");
            let value = w
                .weight
                .iter()
                .zip(&coords)
                .fold(GaussRat::zero(), |acc, (x, c)| acc + x.clone() * GaussRat::real(c.clone()));
            if value.is_real() {
                return Err(VerdictCheckFailure::Witness("the weight is real at the recorded element".into()));
            }
            if !needs_supersolvable(p, v.rule) {
                let ob = w.obstruction.as_ref().ok_or_else(|| {
                    VerdictCheckFailure::Obstruction("a non-real weight alone does not rule out a torus part".into())
                })?;
                verify_obstruction(&ralg, ob).map_err(VerdictCheckFailure::Obstruction)?;
            }
            Ok(())
        }
        Outcome::Unknown => {
            if v.explanation.trim().is_empty() {
                return Err(VerdictCheckFailure::Shape("Unknown without explanation".into()));
            }
            Ok(())
        }
    }
}
