use super::oracle::{verify_verdict, Outcome, Rule};
use super::tbc::ObstructionKind;
use super::weights::Realness;
use super::*;
use crate::lie::named;
use crate::lie::{GroupPresentation, PresentationKind};
use crate::linalg::scalar::{rat, GaussRat};
use crate::linalg::subspace::{Flag, Subspace};

fn g(i: i64, j: i64) -> GaussRat {
    GaussRat::new(rat(i), rat(j))
}

fn weight_set(t: &WeightTable) -> Vec<(Vec<GaussRat>, usize)> {
    let mut v: Vec<_> = t.entries.iter().map(|e| (e.weight.clone(), e.multiplicity)).collect();
    v.sort_by_key(|(w, _)| format!("{w:?}"));
    v
}

#[test]
fn e2_adjoint_weights_are_plus_minus_i() {
    let e2 = named::e2().algebra;
    let t = adjoint_weights(&e2).unwrap();
    assert_eq!(t.total_multiplicity(), 3);
    let ws = weight_set(&t);
    assert!(ws.contains(&(vec![g(0, 1), g(0, 0), g(0, 0)], 1)));
    assert!(ws.contains(&(vec![g(0, -1), g(0, 0), g(0, 0)], 1)));
    assert!(ws.contains(&(vec![g(0, 0), g(0, 0), g(0, 0)], 1)));
    assert!(!t.all_real());
}

#[test]
fn ax_plus_b_weights_are_zero_and_one() {
    let a = named::ax_plus_b().algebra;
    let t = adjoint_weights(&a).unwrap();
    let ws = weight_set(&t);
    assert_eq!(ws.len(), 2);
    assert!(ws.contains(&(vec![g(1, 0), g(0, 0)], 1)));
    assert!(ws.contains(&(vec![g(0, 0), g(0, 0)], 1)));
    assert!(t.entries.iter().all(|e| e.realness == Realness::Real));
}

#[test]
fn abelian_weights_vanish() {
    let t = adjoint_weights(&named::abelian(3).algebra).unwrap();
    assert!(t.all_zero());
    assert_eq!(t.total_multiplicity(), 3);
}

#[test]
fn supersolvable_examples() {
    match supersolvable_test(&named::ax_plus_b().algebra).unwrap() {
        Supersolvable::Yes(flag) => {
            assert_eq!(flag.steps()[0], Subspace::span(2, vec![vec![rat(0), rat(1)]]));
            assert!(flag.is_complete());
        }
        other => panic!("{other:?}"),
    }
    assert!(matches!(supersolvable_test(&named::e2().algebra).unwrap(), Supersolvable::No(_)));
    assert!(matches!(supersolvable_test(&named::abelian(4).algebra).unwrap(), Supersolvable::Yes(_)));
    assert!(matches!(supersolvable_test(&named::heisenberg().algebra).unwrap(), Supersolvable::Yes(_)));
    assert_eq!(supersolvable_test(&named::sl2().algebra), Err(DefinabilityError::NotSolvable));
}

#[test]
fn e2_tbc_certificate_verifies() {
    let e2 = named::e2().algebra;
    let t = Subspace::span(3, vec![vec![rat(0), rat(1), rat(0)], vec![rat(0), rat(0), rat(1)]]);
    let k = Subspace::span(3, vec![vec![rat(1), rat(0), rat(0)]]);
    let flag = Flag::from_adapted_basis(3, t.basis()).unwrap();
    let cert = TbcCertificate { t, k: k.clone(), flag, torus_evidence: tbc::torus_evidence(&e2, &k) };
    let clauses = tbc_verify(&e2, &cert).unwrap();
    assert!(clauses.contains(&TbcClause::KImaginary));

    // R + X is conjugate to R, so it spans another valid torus
    let mut shifted = cert.clone();
    shifted.k = Subspace::span(3, vec![vec![rat(1), rat(1), rat(0)]]);
    shifted.torus_evidence = tbc::torus_evidence(&e2, &shifted.k);
    tbc_verify(&e2, &shifted).unwrap();

    let mut bad = cert.clone();
    bad.k = Subspace::span(3, vec![vec![rat(0), rat(1), rat(0)]]);
    bad.torus_evidence = tbc::torus_evidence(&e2, &bad.k);
    assert!(tbc_verify(&e2, &bad).is_err());
}

#[test]
fn tbc_find_examples() {
    let e2 = named::e2().algebra;
    match tbc_find(&e2).unwrap() {
        TbcOutcome::Certificate(c) => {
            assert_eq!(c.t, Subspace::span(3, vec![vec![rat(0), rat(1), rat(0)], vec![rat(0), rat(0), rat(1)]]));
            assert_eq!(c.k.dim(), 1);
            tbc_verify(&e2, &c).unwrap();
        }
        other => panic!("{other:?}"),
    }
    match tbc_find(&named::oscillator().algebra).unwrap() {
        TbcOutcome::NotTbc(o) => assert!(matches!(o.kind, ObstructionKind::KernelSum { .. })),
        other => panic!("{other:?}"),
    }
    match tbc_find(&named::ax_plus_b().algebra).unwrap() {
        TbcOutcome::Certificate(c) => assert!(c.k.is_zero()),
        other => panic!("{other:?}"),
    }
}

fn oracle(p: &GroupPresentation) -> oracle::DefinabilityVerdict {
    let v = definability_oracle(p).unwrap();
    verify_verdict(p, &v).unwrap();
    v
}

#[test]
fn oracle_e2() {
    let d = named::e2();
    let lin = GroupPresentation::new(PresentationKind::LinearMatrix, d.algebra.clone())
        .with_matrices(d.matrices.clone().unwrap());
    let v = oracle(&lin);
    assert_eq!(v.outcome, Outcome::Definable);
    assert_eq!(v.rule, Rule::LinearRadical);
    let v = oracle(&GroupPresentation::new(PresentationKind::SimplyConnected, d.algebra.clone()));
    assert_eq!(v.outcome, Outcome::NotDefinable);
    assert!(v.counter_witness.unwrap().confirm(&d.algebra));
}

#[test]
fn oracle_intro_example_adds_presentation_note() {
    let d = named::intro_example();
    let p = GroupPresentation::new(PresentationKind::LinearMatrix, d.algebra.clone())
        .with_matrices(d.matrices.clone().unwrap());
    let v = oracle(&p);
    assert_eq!(v.outcome, Outcome::Definable);
    assert_eq!(v.notes.len(), 1);
}

#[test]
fn oracle_non_solvable() {
    let sl2 = named::sl2().algebra;
    let v =
        oracle(&GroupPresentation::new(PresentationKind::AbstractConnected, sl2.clone()).with_finite_center_levi(true));
    assert_eq!(v.outcome, Outcome::Definable);
    assert_eq!(v.rule, Rule::FiniteCenterLevi);
    let v = oracle(&GroupPresentation::new(PresentationKind::AbstractConnected, sl2));
    assert_eq!(v.outcome, Outcome::Unknown);
    assert_eq!(v.rule, Rule::OpenRegime);

    let d = named::so3_plus_e2();
    let v = oracle(
        &GroupPresentation::new(PresentationKind::LinearMatrix, d.algebra.clone())
            .with_matrices(d.matrices.clone().unwrap()),
    );
    assert_eq!(v.outcome, Outcome::Definable);
    let v = oracle(&GroupPresentation::new(PresentationKind::SimplyConnected, d.algebra).with_finite_center_levi(true));
    assert_eq!(v.outcome, Outcome::NotDefinable);
}

#[test]
fn linear_presentation_requires_matrices() {
    let p = GroupPresentation::new(PresentationKind::LinearMatrix, named::e2().algebra);
    assert!(matches!(definability_oracle(&p), Err(DefinabilityError::Input(_))));
}
