use super::ado::ado_module;
use super::torus::TorusWeights;
use super::*;
use crate::lie::named::{self, mat};
use crate::lie::LieAlgebra;
use crate::linalg::scalar::rat;

fn all_flags(r: &Representation) -> bool {
    let v = r.verified;
    v.homomorphism && v.faithful && v.triangular_in_flag && v.unipotent_on_nilradical
}

#[test]
fn verify_rep_on_adjoints() {
    let ax = Representation::adjoint(&named::ax_plus_b().algebra).verify();
    assert!(ax.verified.homomorphism && ax.verified.faithful);
    let h3 = Representation::adjoint(&named::heisenberg().algebra).verify();
    assert!(h3.verified.homomorphism && !h3.verified.faithful);
    let zero = Representation::new(LieAlgebra::abelian(2), 3, vec![Mat::zeros(3, 3), Mat::zeros(3, 3)]).verify();
    assert!(zero.verified.homomorphism && !zero.verified.faithful);
    for r in [&ax, &h3, &zero] {
        assert_eq!(naive_verify_homomorphism(r), r.verified.homomorphism);
    }
}

#[test]
fn semisimplification_examples() {
    let ax = Representation::adjoint(&named::ax_plus_b().algebra);
    assert!(!is_unipotent(&ax).unwrap());
    let e2 = Representation::adjoint(&named::e2().algebra);
    let t = semisimplification(&e2).unwrap();
    assert_eq!(t.entries.len(), 3);
    assert!(!is_unipotent(&e2).unwrap());
    let n = Representation::new(LieAlgebra::abelian(1), 3, vec![mat(&[&[0, 1, 2], &[0, 0, 3], &[0, 0, 0]])]);
    assert!(is_unipotent(&n).unwrap());
}

#[test]
fn ado_dimensions() {
    let h3 = nilpotent_ado(&named::heisenberg().algebra).unwrap();
    assert_eq!(h3.target_dim, 10);
    assert!(all_flags(&h3));
    assert!(naive_verify_homomorphism(&h3));

    let a1 = nilpotent_ado(&LieAlgebra::abelian(1)).unwrap();
    assert_eq!(a1.target_dim, 2);
    assert_eq!(a1.images[0], mat(&[&[0, 1], &[0, 0]]));

    let z = nilpotent_ado(&LieAlgebra::abelian(0)).unwrap();
    assert_eq!(z.target_dim, 1);
    assert!(z.images.is_empty());

    assert_eq!(nilpotent_ado(&named::ax_plus_b().algebra), Err(RepError::NotNilpotent));
}

fn filiform4() -> LieAlgebra {
    // [x1, x2] = x3, [x1, x3] = x4
    LieAlgebra::from_brackets(
        crate::lie::algebra::default_labels(4),
        &[(0, 1, vec![rat(0), rat(0), rat(1), rat(0)]), (0, 2, vec![rat(0), rat(0), rat(0), rat(1)])],
    )
}

#[test]
fn ado_bands_follow_lower_central_series() {
    for n in [named::heisenberg().algebra, filiform4()] {
        let (rep, weights) = ado_module(&n).unwrap();
        assert!(all_flags(&rep));
        for (k, term) in n.lower_central_series().iter().enumerate() {
            for x in term.basis() {
                let m = rep.image(x);
                for r in 0..rep.target_dim {
                    for c in 0..rep.target_dim {
                        if !num_traits::Zero::is_zero(&m[(r, c)]) {
                            assert!(weights[r] > weights[c] + k);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn triangular_reps() {
    let r2 = supersolvable_triangular_rep(&LieAlgebra::abelian(2)).unwrap();
    assert_eq!(r2.target_dim, 3);
    assert!(all_flags(&r2));

    let ax = supersolvable_triangular_rep(&named::ax_plus_b().algebra).unwrap();
    assert_eq!(ax.target_dim, 2);
    assert!(all_flags(&ax));

    let h3 = supersolvable_triangular_rep(&named::heisenberg().algebra).unwrap();
    assert_eq!(h3.target_dim, 10);

    let axr = named::direct_sum(&named::ax_plus_b(), &named::abelian(1)).algebra;
    let rep = supersolvable_triangular_rep(&axr).unwrap();
    assert!(all_flags(&rep));

    assert!(matches!(supersolvable_triangular_rep(&named::e2().algebra), Err(RepError::NotSupersolvable(_))));
}

#[test]
fn triangular_rep_with_central_derived_part() {
    // h3 extended by t acting as diag(1, -1, 0): center z = [x, y] lies in the derived algebra
    let g = LieAlgebra::from_brackets(
        crate::lie::algebra::default_labels(4),
        &[
            (0, 1, vec![rat(0), rat(1), rat(0), rat(0)]),
            (0, 2, vec![rat(0), rat(0), rat(-1), rat(0)]),
            (1, 2, vec![rat(0), rat(0), rat(0), rat(1)]),
        ],
    );
    g.validate().unwrap();
    let rep = supersolvable_triangular_rep(&g).unwrap();
    assert!(all_flags(&rep));
    let nr = crate::structure::nilradical(&g).unwrap();
    assert!(is_unipotent(&restrict(&rep, &nr).unwrap()).unwrap());
}

#[test]
fn extension_examples() {
    let ax = named::ax_plus_b().algebra;
    let h = Subspace::span(2, vec![vec![rat(0), rat(1)]]);
    let rho = Representation::new(ax.subalgebra(&h).unwrap().algebra, 2, vec![mat(&[&[0, 1], &[0, 0]])]);
    let sigma = extend_rep(&ax, &h, &rho).unwrap();
    assert!(sigma.verified.homomorphism);
    assert_eq!(sigma.images[1], rho.images[0]);
    assert!(sigma.images[0].is_upper_triangular());

    let e2 = named::e2().algebra;
    let h = Subspace::span(3, vec![vec![rat(0), rat(1), rat(0)], vec![rat(0), rat(0), rat(1)]]);
    let rho = nilpotent_ado(&e2.subalgebra(&h).unwrap().algebra).unwrap();
    assert_eq!(rho.target_dim, 3);
    let sigma = extend_rep(&e2, &h, &rho).unwrap();
    assert!(sigma.verified.homomorphism && sigma.verified.faithful);

    let same = extend_rep(&ax, &ax.full(), &Representation::adjoint(&ax)).unwrap();
    assert_eq!(same.images, ax.ad_basis());
}

#[test]
fn extension_rejects_weight_on_bracket() {
    let ax = named::ax_plus_b().algebra;
    let h = Subspace::span(2, vec![vec![rat(0), rat(1)]]);
    let rho = Representation::new(ax.subalgebra(&h).unwrap().algebra, 1, vec![mat(&[&[1]])]);
    assert!(matches!(extend_rep(&ax, &h, &rho), Err(RepError::Precondition(_))));
}

#[test]
fn kernel_sums() {
    let h3 = named::heisenberg().algebra;
    let ad = Representation::adjoint(&h3);
    let z = h3.center();
    let block = Representation::new(h3.clone(), 2, vec![Mat::zeros(2, 2), Mat::zeros(2, 2), mat(&[&[0, 1], &[0, 0]])]);
    let k2 = block.kernel();
    let s = kernel_intersection_sum(&ad, &z, &block, &k2).unwrap();
    assert!(s.verified.faithful);

    let triv = Representation::new(h3.clone(), 1, vec![Mat::zeros(1, 1); 3]);
    let s = direct_sum(&ad, &triv).unwrap();
    assert_eq!(s.kernel(), z);
    assert_eq!(direct_sum(&ad, &Representation::adjoint(&named::e2().algebra)), Err(RepError::SourceMismatch));
}

#[test]
fn quotient_by_minus_identity() {
    let rot = mat(&[&[0, -1], &[1, 0]]);
    let shear = mat(&[&[1, 1], &[0, 1]]);
    let minus = mat(&[&[-1, 0], &[0, -1]]);
    let d = GroupRepData { generators: vec![rot, shear], center: vec![Mat::identity(2), minus], order: 2 };
    let q = quotient_rep(&d).unwrap();
    assert_eq!(q.w_dim, 4);
    assert!(q.relations.is_empty());
    assert!(q.sampled > 0);
}

#[test]
fn quotient_with_two_components() {
    let f = mat(&[&[-1, 0, 0], &[0, -1, 0], &[0, 0, 1]]);
    let g1 = mat(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 2]]);
    let g2 = mat(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
    let d = GroupRepData { generators: vec![g1, g2], center: vec![Mat::identity(3), f], order: 2 };
    let q = quotient_rep(&d).unwrap();
    assert_eq!(q.exponents, vec![1, 0]);
    assert_eq!(q.relations, vec![vec![0, 1]]);
    assert_eq!(q.w_dim, 4 + 1 + 1);
}

#[test]
fn quotient_trivial_and_unsupported() {
    let g = mat(&[&[2, 0], &[0, 1]]);
    let d = GroupRepData { generators: vec![g.clone()], center: vec![Mat::identity(2)], order: 1 };
    assert_eq!(quotient_rep(&d).unwrap().w_dim, 2);
    let d = GroupRepData { generators: vec![g], center: vec![Mat::identity(2)], order: 3 };
    assert!(matches!(quotient_rep(&d), Err(RepError::Unsupported(_))));
    let f = mat(&[&[-1, 0], &[0, 1]]);
    let d = GroupRepData { generators: vec![mat(&[&[1, 1], &[0, 1]])], center: vec![Mat::identity(2), f], order: 2 };
    assert!(matches!(quotient_rep(&d), Err(RepError::Precondition(_))));
}

#[test]
fn torus_closures() {
    let one = torus_zariski_closure(&TorusWeights::new(vec![vec![1]])).unwrap();
    assert_eq!(one.equation_strings(), vec!["c1^2 + s1^2 = 1"]);

    let two = torus_zariski_closure(&TorusWeights::new(vec![vec![1], vec![2]])).unwrap();
    assert_eq!(two.relations.len(), 1);
    assert_eq!(two.relations[0], vec![(-2).into(), 1.into()]);
    let eqs = two.equation_strings();
    assert!(eqs.contains(&"c2 = c1^2 - s1^2".to_string()), "{eqs:?}");
    assert!(eqs.contains(&"s2 = 2*c1*s1".to_string()), "{eqs:?}");

    let diag = torus_zariski_closure(&TorusWeights::new(vec![vec![1], vec![1]])).unwrap();
    assert_eq!(diag.relations[0], vec![(-1).into(), 1.into()]);
    assert!(diag.equation_strings().contains(&"c2 = c1".to_string()));

    let full = torus_zariski_closure(&TorusWeights::new(vec![vec![1, 0], vec![0, 1]])).unwrap();
    assert!(full.relations.is_empty());

    assert!(matches!(
        TorusWeights::from_rat(&Mat::from_rows(vec![vec![rat(1)], vec![crate::linalg::scalar::ratio(1, 2)]])),
        Err(RepError::Unsupported(_))
    ));
}

#[test]
fn tampered_closure_fails_verification() {
    let tw = TorusWeights::new(vec![vec![1], vec![2]]);
    let mut c = torus_zariski_closure(&tw).unwrap();
    c.equations[0].rhs = c.equations[0].rhs.add(&super::torus::MPoly::constant(2, rat(1)));
    assert!(super::torus::verify_closure(&tw, &c).is_err());
}

use crate::linalg::mat::Mat;
use crate::linalg::subspace::Subspace;
