//! Certificate files: a serialized witness bound to its subject by content
//! hash. Verification only runs checkers, never the search that produced the
//! witness.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::definability::oracle::{
    rule_applies, verify_verdict, CounterWitness, DefinabilityVerdict, Outcome, RadicalCertificate, Rule,
};
use crate::definability::tbc::{tbc_verify, ObstructionKind, TbcCertificate, TorusEvidence};
use crate::definability::weights::flag_step_weights;
use crate::lie::{parse_algebra, AlgebraData, GroupPresentation, LieAlgebra, PresentationKind};
use crate::linalg::mat::Mat;
use crate::linalg::poly::Poly;
use crate::linalg::scalar::{format_rat, parse_rat, GaussRat, Rat};
use crate::linalg::subspace::{Flag, Subspace};
use crate::reps::torus::{verify_closure, Equation, MPoly, TorusClosure, TorusWeights};
use crate::reps::{verify_rep, Representation};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertKind {
    Tbc,
    Flag,
    Representation,
    Verdict,
    TorusEquations,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    pub schema: u32,
    pub subject: String,
    pub kind: CertKind,
    pub payload: serde_json::Value,
}

impl CertificateFile {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    pub fn parse(text: &str) -> Result<Self, CertError> {
        serde_json::from_str(text).map_err(|e| CertError::new("format", e.to_string()))
    }
}

/// Rejection naming the clause that failed.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("clause `{clause}` failed: {detail}")]
pub struct CertError {
    pub clause: String,
    pub detail: String,
}

impl CertError {
    pub fn new(clause: impl Into<String>, detail: impl Into<String>) -> Self {
        CertError { clause: clause.into(), detail: detail.into() }
    }
}

type QVec = Vec<String>;

fn qvec(v: &[Rat]) -> QVec {
    v.iter().map(format_rat).collect()
}

fn qvecs(vs: &[Vec<Rat>]) -> Vec<QVec> {
    vs.iter().map(|v| qvec(v)).collect()
}

fn parse_qvec(v: &[String], len: usize, what: &str) -> Result<Vec<Rat>, CertError> {
    if v.len() != len {
        return Err(CertError::new("dimensions", format!("{what}: expected {len} entries, found {}", v.len())));
    }
    v.iter().map(|s| parse_rat(s).map_err(|e| CertError::new("format", format!("{what}: {e}")))).collect()
}

fn parse_qvecs(vs: &[QVec], len: usize, what: &str) -> Result<Vec<Vec<Rat>>, CertError> {
    vs.iter().map(|v| parse_qvec(v, len, what)).collect()
}

/// A subspace stored as its reduced echelon basis; anything else is rejected.
fn parse_subspace(vs: &[QVec], n: usize, what: &str) -> Result<Subspace, CertError> {
    let basis = parse_qvecs(vs, n, what)?;
    let s = Subspace::span(n, basis.clone());
    if s.basis() != basis.as_slice() {
        return Err(CertError::new("canonical-basis", format!("{what} is not given by its reduced echelon basis")));
    }
    Ok(s)
}

/// A flag stored as its canonical adapted basis; `dependent` names the clause
/// for a basis that does not define a strict flag.
fn parse_flag(vs: &[QVec], n: usize, dependent: &'static str) -> Result<Flag, CertError> {
    let basis = parse_qvecs(vs, n, "flag")?;
    let flag = Flag::from_adapted_basis(n, &basis)
        .ok_or_else(|| CertError::new(dependent, "flag basis is linearly dependent"))?;
    if flag.adapted_basis() != basis {
        return Err(CertError::new("canonical-basis", "flag is not given by its canonical adapted basis"));
    }
    Ok(flag)
}

fn poly_coeffs(p: &Poly) -> QVec {
    qvec(p.coeffs())
}

fn parse_poly(v: &[String], what: &str) -> Result<Poly, CertError> {
    let c = parse_qvec(v, v.len(), what)?;
    let p = Poly::new(c.clone());
    if p.coeffs() != c.as_slice() {
        return Err(CertError::new("canonical-basis", format!("{what} has trailing zero coefficients")));
    }
    Ok(p)
}

fn payload<T: for<'de> Deserialize<'de>>(v: &serde_json::Value) -> Result<T, CertError> {
    serde_json::from_value(v.clone()).map_err(|e| CertError::new("format", e.to_string()))
}

fn to_value<T: Serialize>(t: &T) -> serde_json::Value {
    serde_json::to_value(t).expect("serializable")
}

// ---- payload schemas ----

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlagPayload {
    /// Adapted basis `v_1, v_2, ...` of a complete flag of ideals.
    pub basis: Vec<QVec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvidencePayload {
    pub element: QVec,
    pub char_poly: QVec,
    pub nilpotent_part_zero: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TbcPayload {
    pub t: Vec<QVec>,
    pub k: Vec<QVec>,
    pub flag: Vec<QVec>,
    pub torus_evidence: Vec<EvidencePayload>,
}

impl TbcPayload {
    pub fn from_cert(c: &TbcCertificate) -> Self {
        TbcPayload {
            t: qvecs(c.t.basis()),
            k: qvecs(c.k.basis()),
            flag: qvecs(&c.flag.adapted_basis()),
            torus_evidence: c
                .torus_evidence
                .iter()
                .map(|e| EvidencePayload {
                    element: qvec(&e.element),
                    char_poly: poly_coeffs(&e.char_poly),
                    nilpotent_part_zero: e.nilpotent_part_zero,
                })
                .collect(),
        }
    }

    pub fn to_cert(&self, n: usize) -> Result<TbcCertificate, CertError> {
        let t = parse_subspace(&self.t, n, "t")?;
        let k = parse_subspace(&self.k, n, "k")?;
        let flag = parse_flag(&self.flag, n, "flag-complete")?;
        let torus_evidence = self
            .torus_evidence
            .iter()
            .map(|e| {
                Ok(TorusEvidence {
                    element: parse_qvec(&e.element, n, "evidence element")?,
                    char_poly: parse_poly(&e.char_poly, "evidence polynomial")?,
                    nilpotent_part_zero: e.nilpotent_part_zero,
                })
            })
            .collect::<Result<_, CertError>>()?;
        Ok(TbcCertificate { t, k, flag, torus_evidence })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessPayload {
    pub element: QVec,
    pub weight: Vec<GaussRat>,
    pub char_poly: QVec,
    pub obstruction: Option<ObstructionPayload>,
}

/// Vectors are in the coordinates of the echelon basis of the radical.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ObstructionPayload {
    KernelSum { ker_re_dim: usize, ker_im_dim: usize },
    NonInner { regular: QVec, element: QVec },
}

impl ObstructionPayload {
    fn from_kind(k: &ObstructionKind) -> Self {
        match k {
            ObstructionKind::KernelSum { ker_re_dim, ker_im_dim } => {
                ObstructionPayload::KernelSum { ker_re_dim: *ker_re_dim, ker_im_dim: *ker_im_dim }
            }
            ObstructionKind::NonInner { regular, element } => {
                ObstructionPayload::NonInner { regular: qvec(regular), element: qvec(element) }
            }
        }
    }

    fn to_kind(&self) -> Result<ObstructionKind, CertError> {
        Ok(match self {
            ObstructionPayload::KernelSum { ker_re_dim, ker_im_dim } => {
                ObstructionKind::KernelSum { ker_re_dim: *ker_re_dim, ker_im_dim: *ker_im_dim }
            }
            ObstructionPayload::NonInner { regular, element } => ObstructionKind::NonInner {
                regular: parse_qvec(regular, regular.len(), "regular element")?,
                element: parse_qvec(element, element.len(), "obstruction element")?,
            },
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerdictPayload {
    pub outcome: String,
    pub rule: String,
    pub presentation: PresentationKind,
    pub finite_center_levi: Option<bool>,
    pub radical: Option<Vec<QVec>>,
    /// In the coordinates of the echelon basis of the radical.
    pub tbc: Option<TbcPayload>,
    pub counter_witness: Option<WitnessPayload>,
    pub explanation: String,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepPayload {
    pub dim: usize,
    /// Row-major matrices, one per basis element.
    pub images: Vec<Vec<QVec>>,
    /// Adapted basis of the target flag, if any.
    pub flag: Option<Vec<QVec>>,
    pub claims: Vec<String>,
}

impl RepPayload {
    pub fn from_rep(r: &Representation) -> Self {
        RepPayload {
            dim: r.target_dim,
            images: r.images.iter().map(|m| m.row_vecs().iter().map(|row| qvec(row)).collect()).collect(),
            flag: r.flag.as_ref().map(|f| qvecs(&f.adapted_basis())),
            claims: r.verified.names().iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn to_rep(&self, g: &LieAlgebra) -> Result<Representation, CertError> {
        if self.images.len() != g.dim() {
            return Err(CertError::new("dimensions", "one image per basis element expected"));
        }
        let d = self.dim;
        let images = self
            .images
            .iter()
            .map(|rows| {
                if rows.len() != d {
                    return Err(CertError::new("dimensions", format!("images must be {d}x{d}")));
                }
                Ok(Mat::from_rows_with_cols(parse_qvecs(rows, d, "image row")?, d))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut rep = Representation::new(g.clone(), d, images);
        if let Some(fb) = &self.flag {
            rep = rep.with_flag(parse_flag(fb, d, "flag")?);
        }
        Ok(rep)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermPayload {
    pub exps: Vec<u32>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EquationPayload {
    pub relation: Option<usize>,
    pub lhs: Vec<TermPayload>,
    pub rhs: Vec<TermPayload>,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorusPayload {
    pub relations: Vec<Vec<String>>,
    pub equations: Vec<EquationPayload>,
}

fn terms(p: &MPoly) -> Vec<TermPayload> {
    p.terms.iter().map(|(e, c)| TermPayload { exps: e.clone(), coeff: format_rat(c) }).collect()
}

fn parse_terms(ts: &[TermPayload], nv: usize) -> Result<MPoly, CertError> {
    let mut p = MPoly::zero(nv);
    for t in ts {
        if t.exps.len() != nv {
            return Err(CertError::new("dimensions", "exponent vector has the wrong length"));
        }
        let c = parse_rat(&t.coeff).map_err(|e| CertError::new("format", e.to_string()))?;
        p = p.add(&MPoly { nvars: nv, terms: [(t.exps.clone(), c)].into_iter().collect() });
    }
    Ok(p)
}

// ---- subjects ----

pub fn hash_text(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Canonical JSON of a torus weight matrix.
pub fn torus_json(tw: &TorusWeights) -> String {
    serde_json::to_string_pretty(tw).expect("serializable") + "\n"
}

pub fn parse_torus(text: &str) -> Result<TorusWeights, CertError> {
    let tw: TorusWeights = serde_json::from_str(text).map_err(|e| CertError::new("format", e.to_string()))?;
    Ok(tw)
}

// ---- emitters ----

fn file(subject: String, kind: CertKind, payload: serde_json::Value) -> CertificateFile {
    CertificateFile { schema: SCHEMA_VERSION, subject, kind, payload }
}

pub fn flag_certificate(a: &AlgebraData, flag: &Flag) -> CertificateFile {
    file(a.content_hash(), CertKind::Flag, to_value(&FlagPayload { basis: qvecs(&flag.adapted_basis()) }))
}

pub fn tbc_certificate(a: &AlgebraData, c: &TbcCertificate) -> CertificateFile {
    file(a.content_hash(), CertKind::Tbc, to_value(&TbcPayload::from_cert(c)))
}

pub fn representation_certificate(a: &AlgebraData, r: &Representation) -> CertificateFile {
    file(a.content_hash(), CertKind::Representation, to_value(&RepPayload::from_rep(r)))
}

pub fn verdict_certificate(a: &AlgebraData, p: &GroupPresentation, v: &DefinabilityVerdict) -> CertificateFile {
    let pl = VerdictPayload {
        outcome: v.outcome.name().to_string(),
        rule: v.rule.tag().to_string(),
        presentation: p.kind,
        finite_center_levi: p.finite_center_levi,
        radical: v.certificate.as_ref().map(|c| qvecs(c.radical.basis())),
        tbc: v.certificate.as_ref().map(|c| TbcPayload::from_cert(&c.tbc)),
        counter_witness: v.counter_witness.as_ref().map(|w| WitnessPayload {
            element: qvec(&w.element),
            weight: w.weight.clone(),
            char_poly: poly_coeffs(&w.char_poly),
            obstruction: w.obstruction.as_ref().map(ObstructionPayload::from_kind),
        }),
        explanation: v.explanation.clone(),
        notes: v.notes.clone(),
    };
    file(a.content_hash(), CertKind::Verdict, to_value(&pl))
}

pub fn torus_certificate(tw: &TorusWeights, c: &TorusClosure) -> CertificateFile {
    let names = c.variable_names();
    let pl = TorusPayload {
        relations: c.relations.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect(),
        equations: c
            .equations
            .iter()
            .map(|e| EquationPayload {
                relation: e.relation,
                lhs: terms(&e.lhs),
                rhs: terms(&e.rhs),
                text: e.display(&names),
            })
            .collect(),
    };
    file(hash_text(&torus_json(tw)), CertKind::TorusEquations, to_value(&pl))
}

// ---- verification ----

/// Verifies `cert` against the subject file text. `Ok` lists the clauses checked.
pub fn verify_certificate(subject_text: &str, cert: &CertificateFile) -> Result<Vec<String>, CertError> {
    if cert.schema != SCHEMA_VERSION {
        return Err(CertError::new("schema", format!("unsupported schema version {}", cert.schema)));
    }
    let mut clauses = vec!["schema".to_string()];
    if cert.kind == CertKind::TorusEquations {
        let tw = parse_torus(subject_text)?;
        check_hash(&hash_text(&torus_json(&tw)), &cert.subject)?;
        clauses.push("subject-hash".into());
        clauses.extend(verify_torus(&tw, &payload(&cert.payload)?)?);
        return Ok(clauses);
    }
    let a = parse_algebra(subject_text).map_err(|e| CertError::new("subject", e.to_string()))?;
    check_hash(&a.content_hash(), &cert.subject)?;
    clauses.push("subject-hash".into());
    let g = &a.algebra;
    let more = match cert.kind {
        CertKind::Flag => verify_flag(g, &payload(&cert.payload)?)?,
        CertKind::Tbc => {
            let c = payload::<TbcPayload>(&cert.payload)?.to_cert(g.dim())?;
            tbc_verify(g, &c)
                .map_err(|f| CertError::new(f.clause.name(), f.detail))?
                .iter()
                .map(|c| c.name().to_string())
                .collect()
        }
        CertKind::Representation => verify_representation(g, &payload(&cert.payload)?)?,
        CertKind::Verdict => verify_verdict_payload(&a, &payload(&cert.payload)?)?,
        CertKind::TorusEquations => unreachable!(),
    };
    clauses.extend(more);
    Ok(clauses)
}

fn check_hash(actual: &str, claimed: &str) -> Result<(), CertError> {
    if actual != claimed {
        return Err(CertError::new(
            "subject-hash",
            format!("certificate is for {claimed}, subject hashes to {actual}"),
        ));
    }
    Ok(())
}

fn verify_flag(g: &LieAlgebra, p: &FlagPayload) -> Result<Vec<String>, CertError> {
    let n = g.dim();
    let flag = parse_flag(&p.basis, n, "flag-complete")?;
    if flag.len() != n {
        return Err(CertError::new("flag-complete", "flag does not reach the whole algebra"));
    }
    for (i, s) in flag.steps().iter().enumerate() {
        if !g.is_ideal(s) {
            return Err(CertError::new("flag-ideals", format!("step {} is not an ideal", i + 1)));
        }
    }
    flag_step_weights(g, &flag).ok_or_else(|| CertError::new("flag-real-weights", "a step weight is undefined"))?;
    Ok(vec!["flag-complete".into(), "flag-ideals".into(), "flag-real-weights".into()])
}

fn verify_representation(g: &LieAlgebra, p: &RepPayload) -> Result<Vec<String>, CertError> {
    let rep = p.to_rep(g)?;
    let flags = verify_rep(&rep);
    let holds = flags.names();
    let known = ["homomorphism", "faithful", "triangular_in_flag", "unipotent_on_nilradical"];
    if !p.claims.iter().any(|c| c == "homomorphism") {
        return Err(CertError::new("homomorphism", "a representation certificate must claim homomorphism"));
    }
    for c in &p.claims {
        if !known.contains(&c.as_str()) {
            return Err(CertError::new("claims", format!("unknown claim {c}")));
        }
        if !holds.contains(&c.as_str()) {
            return Err(CertError::new(c.clone(), "claimed property does not hold"));
        }
    }
    Ok(p.claims.clone())
}

fn verify_verdict_payload(a: &AlgebraData, p: &VerdictPayload) -> Result<Vec<String>, CertError> {
    let g = &a.algebra;
    let outcome = match p.outcome.as_str() {
        "Definable" => Outcome::Definable,
        "NotDefinable" => Outcome::NotDefinable,
        "Unknown" => Outcome::Unknown,
        o => return Err(CertError::new("outcome", format!("unknown outcome {o}"))),
    };
    let rule = Rule::from_tag(&p.rule).ok_or_else(|| CertError::new("rule", format!("unknown rule {}", p.rule)))?;
    let mut pres = GroupPresentation::new(p.presentation, g.clone());
    if let Some(m) = &a.matrices {
        pres = pres.with_matrices(m.clone());
    }
    if let Some(f) = p.finite_center_levi {
        pres = pres.with_finite_center_levi(f);
    }
    if !rule_applies(&pres, rule) {
        return Err(CertError::new("rule", format!("rule {} does not apply to this presentation", rule.tag())));
    }
    let certificate = match (&p.radical, &p.tbc) {
        (Some(r), Some(t)) => {
            let radical = parse_subspace(r, g.dim(), "radical")?;
            Some(RadicalCertificate { tbc: t.to_cert(radical.dim())?, radical })
        }
        (None, None) => None,
        _ => return Err(CertError::new("radical", "radical and tbc must be given together")),
    };
    let counter_witness = match &p.counter_witness {
        Some(w) => Some(CounterWitness {
            element: parse_qvec(&w.element, g.dim(), "witness element")?,
            weight: w.weight.clone(),
            char_poly: parse_poly(&w.char_poly, "witness polynomial")?,
            obstruction: w.obstruction.as_ref().map(|o| o.to_kind()).transpose()?,
        }),
        None => None,
    };
    let v = DefinabilityVerdict {
        outcome,
        rule,
        certificate,
        counter_witness,
        explanation: p.explanation.clone(),
        notes: p.notes.clone(),
    };
    if outcome == Outcome::Unknown && (v.certificate.is_some() || v.counter_witness.is_some()) {
        return Err(CertError::new("outcome", "Unknown verdicts carry no evidence"));
    }
    if outcome == Outcome::Definable && v.counter_witness.is_some() {
        return Err(CertError::new("outcome", "Definable verdict carries a counter-witness"));
    }
    if outcome == Outcome::NotDefinable && v.certificate.is_some() {
        return Err(CertError::new("outcome", "NotDefinable verdict carries a certificate"));
    }
    verify_verdict(&pres, &v).map_err(|e| CertError::new(e.clause(), e.to_string()))?;
    Ok(vec!["outcome".into(), "rule".into(), "evidence".into()])
}

fn verify_torus(tw: &TorusWeights, p: &TorusPayload) -> Result<Vec<String>, CertError> {
    let n = tw.blocks();
    let nv = 2 * n;
    let relations: Vec<Vec<BigInt>> = p
        .relations
        .iter()
        .map(|r| {
            if r.len() != n {
                return Err(CertError::new("dimensions", "relation has the wrong length"));
            }
            r.iter().map(|x| x.parse::<BigInt>().map_err(|e| CertError::new("format", e.to_string()))).collect()
        })
        .collect::<Result<_, _>>()?;
    // the relations must generate the full relation lattice
    let w = crate::linalg::snf::IntMat::from_i64(&tw.weights);
    let wt = if n == 0 { crate::linalg::snf::IntMat::zeros(tw.generators(), 0) } else { w.transpose() };
    let lattice = crate::linalg::snf::IntLattice::integer_kernel(&wt);
    let given = crate::linalg::snf::hermite_rows(&relations, n);
    if given != lattice.generators || given.len() != relations.len() {
        return Err(CertError::new("relation-lattice", "relations do not form a basis of the relation lattice"));
    }
    let equations = p
        .equations
        .iter()
        .map(|e| {
            if e.relation.is_some_and(|r| r >= relations.len()) {
                return Err(CertError::new("dimensions", "equation refers to a missing relation"));
            }
            Ok(Equation { lhs: parse_terms(&e.lhs, nv)?, rhs: parse_terms(&e.rhs, nv)?, relation: e.relation })
        })
        .collect::<Result<Vec<_>, _>>()?;
    for r in 0..relations.len() {
        if equations.iter().filter(|e| e.relation == Some(r)).count() != 2 {
            return Err(CertError::new(
                "coverage",
                format!("relation {} needs a real and an imaginary equation", r + 1),
            ));
        }
    }
    // circle equations for every block
    for j in 0..n {
        let mut c = MPoly::var(nv, 2 * j);
        c = c.mul(&c).add(&MPoly::var(nv, 2 * j + 1).mul(&MPoly::var(nv, 2 * j + 1)));
        let one = MPoly::constant(nv, num_traits::One::one());
        if !equations.iter().any(|e| e.relation.is_none() && e.lhs == c && e.rhs == one) {
            return Err(CertError::new("coverage", format!("missing circle equation for block {}", j + 1)));
        }
    }
    // equations must also determine the closure: the real and imaginary parts
    // of each relation differ from the canonical pair by the circle ideal
    let closure = TorusClosure { blocks: n, relations, equations };
    verify_closure(tw, &closure).map_err(|e| CertError::new("vanishing", e.to_string()))?;
    verify_relation_content(&closure)?;
    Ok(vec!["relation-lattice".into(), "coverage".into(), "vanishing".into(), "relation-content".into()])
}

/// Each relation's equation pair must express `Π z^{m+} = Π z^{m-}`: the
/// two equations, combined, must equal the real and imaginary parts of
/// that identity exactly.
fn verify_relation_content(c: &TorusClosure) -> Result<(), CertError> {
    let reference = crate::reps::torus::relation_pairs(c.blocks, &c.relations)
        .map_err(|e| CertError::new("relation-content", e.to_string()))?;
    for (r, (re, im)) in reference.iter().enumerate() {
        let eqs: Vec<MPoly> = c.equations.iter().filter(|e| e.relation == Some(r)).map(|e| e.lhs.sub(&e.rhs)).collect();
        let ok = (eqs[0] == *re && eqs[1] == *im) || (eqs[0] == *im && eqs[1] == *re);
        if !ok {
            return Err(CertError::new(
                "relation-content",
                format!("equations for relation {} do not match it", r + 1),
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::definability::definability_oracle;
    use crate::definability::tbc::{tbc_find, TbcOutcome};
    use crate::definability::weights::{supersolvable_test, Supersolvable};
    use crate::lie::named;
    use crate::reps::supersolvable_triangular_rep;
    use crate::reps::torus::torus_zariski_closure;

    fn roundtrip(subject: &str, c: &CertificateFile) -> Result<Vec<String>, CertError> {
        verify_certificate(subject, &CertificateFile::parse(&c.to_json()).unwrap())
    }

    fn mutated(c: &CertificateFile, f: impl FnOnce(&mut serde_json::Value)) -> CertificateFile {
        let mut v = serde_json::to_value(c).unwrap();
        f(&mut v);
        serde_json::from_value(v).unwrap()
    }

    fn presentation(d: &AlgebraData, kind: PresentationKind) -> GroupPresentation {
        let p = GroupPresentation::new(kind, d.algebra.clone());
        match &d.matrices {
            Some(m) => p.with_matrices(m.clone()),
            None => p,
        }
    }

    #[test]
    fn flag_certificate_roundtrip_and_tamper() {
        let d = named::ax_plus_b();
        let Supersolvable::Yes(flag) = supersolvable_test(&d.algebra).unwrap() else { panic!() };
        let c = flag_certificate(&d, &flag);
        let text = d.to_json();
        assert!(roundtrip(&text, &c).is_ok());
        let bad = mutated(&c, |v| v["payload"]["basis"] = serde_json::json!([["1", "0"], ["0", "1"]]));
        assert_eq!(roundtrip(&text, &bad).unwrap_err().clause, "flag-ideals");
        let bad = mutated(&c, |v| v["payload"]["basis"][1] = serde_json::json!(["1", "1"]));
        assert_eq!(roundtrip(&text, &bad).unwrap_err().clause, "canonical-basis");
        let bad = mutated(&c, |v| v["subject"] = serde_json::json!("00"));
        assert_eq!(roundtrip(&text, &bad).unwrap_err().clause, "subject-hash");
        let bad = mutated(&c, |v| v["schema"] = serde_json::json!(7));
        assert_eq!(roundtrip(&text, &bad).unwrap_err().clause, "schema");
    }

    #[test]
    fn tbc_certificate_roundtrip_and_tamper() {
        let d = named::e2();
        let TbcOutcome::Certificate(tc) = tbc_find(&d.algebra).unwrap() else { panic!() };
        let c = tbc_certificate(&d, &tc);
        let text = d.to_json();
        assert!(roundtrip(&text, &c).is_ok());
        let bad = mutated(&c, |v| v["payload"]["t"] = serde_json::json!([["1", "0", "0"]]));
        assert!(roundtrip(&text, &bad).is_err());
        let bad = mutated(&c, |v| v["payload"]["t"][0][0] = serde_json::json!("2"));
        assert_eq!(roundtrip(&text, &bad).unwrap_err().clause, "canonical-basis");
    }

    #[test]
    fn representation_certificate_roundtrip_and_tamper() {
        let d = named::ax_plus_b();
        let r = supersolvable_triangular_rep(&d.algebra).unwrap();
        let c = representation_certificate(&d, &r);
        let text = d.to_json();
        assert!(roundtrip(&text, &c).is_ok());
        let bad = mutated(&c, |v| v["payload"]["images"][0][1][0] = serde_json::json!("5"));
        assert!(roundtrip(&text, &bad).is_err());
    }

    #[test]
    fn verdict_certificates() {
        let d = named::so3_plus_e2();
        let text = d.to_json();
        let lin = presentation(&d, PresentationKind::LinearMatrix);
        let v = definability_oracle(&lin).unwrap();
        assert_eq!(v.outcome, Outcome::Definable);
        let c = verdict_certificate(&d, &lin, &v);
        assert!(roundtrip(&text, &c).is_ok());
        let bad = mutated(&c, |v| v["payload"]["outcome"] = serde_json::json!("NotDefinable"));
        assert!(roundtrip(&text, &bad).is_err());

        let osc = named::oscillator();
        let text = osc.to_json();
        let p = GroupPresentation::new(PresentationKind::AbstractConnected, osc.algebra.clone());
        let v = definability_oracle(&p).unwrap();
        assert_eq!(v.outcome, Outcome::NotDefinable);
        let c = verdict_certificate(&osc, &p, &v);
        assert!(roundtrip(&text, &c).is_ok());
        let bad = mutated(&c, |v| v["payload"]["counter_witness"]["obstruction"] = serde_json::Value::Null);
        assert!(roundtrip(&text, &bad).is_err());
        let bad = mutated(&c, |v| v["payload"]["rule"] = serde_json::json!("solvable-simply-connected"));
        assert_eq!(roundtrip(&text, &bad).unwrap_err().clause, "rule");
    }

    #[test]
    fn torus_certificate_roundtrip_and_tamper() {
        let tw = TorusWeights::new(vec![vec![1], vec![2]]);
        let cl = torus_zariski_closure(&tw).unwrap();
        let c = torus_certificate(&tw, &cl);
        let text = torus_json(&tw);
        assert!(roundtrip(&text, &c).is_ok());
        let bad = mutated(&c, |v| {
            v["payload"]["equations"].as_array_mut().unwrap().pop();
        });
        assert!(roundtrip(&text, &bad).is_err());
        let bad = mutated(&c, |v| v["payload"]["relations"][0][0] = serde_json::json!("-3"));
        assert_eq!(roundtrip(&text, &bad).unwrap_err().clause, "relation-lattice");
    }
}
