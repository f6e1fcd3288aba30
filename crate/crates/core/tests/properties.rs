mod common;

use liedef::corpus::corpus;
use liedef::definability::{
    definability_oracle, supersolvable_test, tbc_find, tbc_verify, Outcome, Supersolvable, TbcCertificate, TbcOutcome,
};
use liedef::lie::{from_matrices, parse_algebra, AlgebraData, GroupPresentation, LieAlgebra, PresentationKind};
use liedef::linalg::{char_poly, jordan_chevalley, rat, smith_normal_form, GaussRat, IntMat, Mat, Poly, Rat};
use liedef::reps::torus::verify_closure;
use liedef::reps::{is_unipotent, restrict, supersolvable_triangular_rep, torus_zariski_closure, TorusWeights};
use liedef::structure::{levi_subalgebra, nilradical, radical};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn algebra(seed: u64) -> LieAlgebra {
    common::random_solvable(&mut ChaCha8Rng::seed_from_u64(seed))
}

fn int_mat(rows: usize, cols: usize) -> impl Strategy<Value = Mat<Rat>> {
    prop::collection::vec(-3i64..=3, rows * cols)
        .prop_map(move |v| Mat::from_fn(rows, cols, |r, c| rat(v[r * cols + c])))
}

fn any_mat() -> impl Strategy<Value = Mat<Rat>> {
    (1usize..=5, 1usize..=6).prop_flat_map(|(r, c)| int_mat(r, c))
}

fn square_mat() -> impl Strategy<Value = Mat<Rat>> {
    (1usize..=6).prop_flat_map(|n| int_mat(n, n))
}

fn corpus_algebras() -> Vec<AlgebraData> {
    corpus().into_iter().map(|e| e.data).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_plus_nullity_is_column_count(m in any_mat()) {
        prop_assert_eq!(m.rank() + m.kernel_basis().len(), m.ncols());
        for v in m.kernel_basis() {
            prop_assert!(m.mul_vec(&v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn cayley_hamilton(m in square_mat()) {
        let p = char_poly(&m).unwrap();
        prop_assert!(p.eval_mat(&m).is_zero());
    }

    #[test]
    fn sturm_matches_grid_count(
        roots in prop::collection::btree_set(-8i64..=8, 0..4),
        doubled in prop::collection::vec(any::<bool>(), 4),
        quads in prop::collection::vec((-2i64..=2, 1i64..=4), 0..2),
    ) {
        // distinct roots r/2, some doubled, times x^2 + b x + c with b^2 < 4c
        let mut p = Poly::constant(rat(1));
        for (k, r) in roots.iter().enumerate() {
            let f = Poly::new(vec![-Rat::new((*r).into(), 2.into()), rat(1)]);
            p = p.mul(&f);
            if doubled[k] {
                p = p.mul(&f);
            }
        }
        for (b, c) in &quads {
            if b * b < 4 * c {
                p = p.mul(&Poly::new(vec![rat(*c), rat(*b), rat(1)]));
            }
        }
        let sturm = p.sturm_count_real_roots().unwrap();
        prop_assert_eq!(sturm, roots.len());
        prop_assert_eq!(common::grid_real_roots(&p, 5, 8), sturm);
    }

    #[test]
    fn jordan_chevalley_parts(
        blocks in prop::collection::vec((0u8..3, -2i64..=2, -2i64..=2), 1..4),
        scramble in any::<u64>(),
    ) {
        let mats: Vec<Mat<Rat>> = blocks.iter().map(|&(kind, a, b)| match kind {
            0 => Mat::from_rows(vec![vec![rat(a)]]),
            1 => Mat::from_rows(vec![vec![rat(a), rat(1)], vec![rat(0), rat(a)]]),
            _ => Mat::from_rows(vec![vec![rat(a), rat(-b)], vec![rat(b), rat(a)]]),
        }).collect();
        let j = Mat::block_diag(&mats);
        let n = j.nrows();
        let mut rng = ChaCha8Rng::seed_from_u64(scramble);
        let p = loop {
            let p = Mat::from_fn(n, n, |r, c| if r == c { rat(1) } else { rat(rand::Rng::gen_range(&mut rng, -1..=1)) });
            if !p.det().is_zero() { break p; }
        };
        let m = p.mul(&j).mul(&p.inverse().unwrap());
        let jc = jordan_chevalley(&m).unwrap();
        prop_assert_eq!(jc.semisimple.add(&jc.nilpotent), m.clone());
        prop_assert!(jc.semisimple.commutator(&jc.nilpotent).is_zero());
        prop_assert!(jc.nilpotent.pow(n as u32).is_zero());
        let cp = char_poly(&jc.semisimple).unwrap();
        prop_assert!(cp.squarefree_part().eval_mat(&jc.semisimple).is_zero());
    }

    #[test]
    fn smith_form_is_unimodular(v in prop::collection::vec(-6i64..=6, 12), rows in 1usize..=4) {
        let cols = 12 / rows.max(1);
        let data: Vec<Vec<i64>> = (0..rows).map(|r| v[r * cols..(r + 1) * cols].to_vec()).collect();
        let a = IntMat::from_i64(&data);
        let s = smith_normal_form(&a);
        prop_assert_eq!(s.u.mul(&a).mul(&s.v), s.d.clone());
        prop_assert_eq!(s.u.det().abs(), BigInt::one());
        prop_assert_eq!(s.v.det().abs(), BigInt::one());
        let d = s.diagonal();
        for w in d.windows(2) {
            if !w[1].is_zero() {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }
    }

    #[test]
    fn random_algebras_are_lie_and_solvable(seed in any::<u64>()) {
        let g = algebra(seed);
        prop_assert!(g.validate().is_ok());
        let n = g.dim();
        for i in 0..n {
            for j in 0..n {
                let (x, y) = (g.basis_vec(i), g.basis_vec(j));
                prop_assert_eq!(g.ad(&g.bracket(&x, &y)), g.ad(&x).commutator(&g.ad(&y)));
                for k in 0..n {
                    let z = g.basis_vec(k);
                    let s = g.killing(&g.bracket(&x, &y), &z) + g.killing(&y, &g.bracket(&x, &z));
                    prop_assert!(s.is_zero());
                }
            }
        }
        prop_assert_eq!(g.is_solvable().unwrap(), common::cartan_solvable(&g));
        prop_assert!(g.is_solvable().unwrap());
    }

    #[test]
    fn from_matrices_reproduces_commutators(v in prop::collection::vec(-2i64..=2, 18)) {
        let mats: Vec<Mat<Rat>> = (0..2).map(|k| Mat::from_fn(3, 3, |r, c| rat(v[9 * k + 3 * r + c]))).collect();
        let fm = from_matrices(&mats);
        let g = &fm.algebra;
        let p = &fm.presentation;
        prop_assert!(g.validate().is_ok());
        for i in 0..g.dim() {
            for j in 0..g.dim() {
                let br = g.bracket(&g.basis_vec(i), &g.basis_vec(j));
                prop_assert_eq!(p.image(&br), p.mats[i].commutator(&p.mats[j]));
            }
        }
    }

    #[test]
    fn nilradical_contains_bracket_with_radical(seed in any::<u64>()) {
        let g = algebra(seed);
        let r = radical(&g).unwrap();
        let nr = nilradical(&g).unwrap();
        prop_assert!(nr.contains_space(&g.bracket_spaces(&g.full(), &r)));
        let sub = g.subalgebra(&r).unwrap();
        prop_assert_eq!(sub.lift_space(&nilradical(&sub.algebra).unwrap()), nr);
    }

    #[test]
    fn finder_and_verifier_agree(seed in any::<u64>()) {
        let g = algebra(seed);
        if let TbcOutcome::Certificate(c) = tbc_find(&g).unwrap() {
            prop_assert!(tbc_verify(&g, &c).is_ok());
            prop_assert_eq!(common::brute_tbc_check(&g, &c), Ok(()));
        }
        if let Supersolvable::Yes(flag) = supersolvable_test(&g).unwrap() {
            let c = TbcCertificate::supersolvable(&g, flag);
            prop_assert!(tbc_verify(&g, &c).is_ok());
            prop_assert_eq!(common::brute_tbc_check(&g, &c), Ok(()));
        }
    }

    #[test]
    fn oracle_attaches_evidence(seed in any::<u64>()) {
        let g = algebra(seed);
        for kind in [PresentationKind::SimplyConnected, PresentationKind::AbstractConnected] {
            let v = definability_oracle(&GroupPresentation::new(kind, g.clone())).unwrap();
            match v.outcome {
                Outcome::Definable => prop_assert!(v.certificate.is_some() && v.counter_witness.is_none()),
                Outcome::NotDefinable => {
                    let w = v.counter_witness.as_ref().unwrap();
                    prop_assert!(v.certificate.is_none() && w.confirm(&g));
                }
                Outcome::Unknown => prop_assert!(!v.explanation.is_empty()),
            }
        }
    }

    #[test]
    fn triangular_reps_on_supersolvable_algebras(seed in any::<u64>()) {
        let g = algebra(seed);
        if let Supersolvable::Yes(_) = supersolvable_test(&g).unwrap() {
            let r = supersolvable_triangular_rep(&g).unwrap();
            let v = r.verified;
            prop_assert!(v.homomorphism && v.faithful && v.triangular_in_flag && v.unipotent_on_nilradical);
            prop_assert!(common::naive_homomorphism(&r));
            let nr = nilradical(&g).unwrap();
            prop_assert!(is_unipotent(&restrict(&r, &nr).unwrap()).unwrap());
        }
    }

    #[test]
    fn torus_equations_vanish_on_rational_points(
        w in prop::collection::vec(-3i64..=3, 1..=6),
        gens in 1usize..=2,
        us in prop::collection::vec(-5i64..=5, 2),
    ) {
        let blocks = (w.len() / gens).max(1);
        let weights: Vec<Vec<i64>> = (0..blocks).map(|b| (0..gens).map(|k| *w.get(b * gens + k).unwrap_or(&1)).collect()).collect();
        let tw = TorusWeights::new(weights.clone());
        let c = torus_zariski_closure(&tw).unwrap();
        prop_assert!(verify_closure(&tw, &c).is_ok());
        // rational points on the circle: ((1 - u^2) / (1 + u^2), 2u / (1 + u^2))
        let zeta: Vec<GaussRat> = us.iter().take(gens).map(|&u| {
            let d = rat(1 + u * u);
            GaussRat::new(rat(1 - u * u) / d.clone(), rat(2 * u) / d)
        }).collect();
        let power = |z: &GaussRat, e: i64| -> GaussRat {
            let base = if e < 0 { z.conj() } else { z.clone() };
            (0..e.abs()).fold(GaussRat::real(rat(1)), |acc, _| acc * base.clone())
        };
        let point: Vec<GaussRat> = weights.iter().map(|row| {
            row.iter().zip(&zeta).fold(GaussRat::real(rat(1)), |acc, (&e, z)| acc * power(z, e))
        }).collect();
        let coords: Vec<Rat> = point.iter().flat_map(|z| [z.re.clone(), z.im.clone()]).collect();
        let eval = |p: &liedef::reps::torus::MPoly| -> Rat {
            p.terms.iter().fold(Rat::zero(), |acc, (e, c)| {
                let mono = e.iter().zip(&coords).fold(rat(1), |m, (&k, x)| (0..k).fold(m, |m2, _| m2 * x));
                acc + c * mono
            })
        };
        for eq in &c.equations {
            prop_assert_eq!(eval(&eq.lhs), eval(&eq.rhs));
        }
    }
}

#[test]
fn corpus_algebras_satisfy_lie_invariants() {
    for d in corpus_algebras() {
        let g = &d.algebra;
        assert!(g.validate().is_ok());
        assert_eq!(g.is_solvable().unwrap(), common::cartan_solvable(g));
        let back = parse_algebra(&d.to_json()).unwrap();
        assert_eq!(back.algebra, *g);
        for m in g.ad_basis().iter().chain(d.matrices.iter().flat_map(|p| p.mats.iter())) {
            assert!(char_poly(m).unwrap().eval_mat(m).is_zero());
        }
        let l = levi_subalgebra(g).unwrap();
        assert_eq!(l.radical.dim() + l.levi.dim(), g.dim());
        assert!(l.radical.intersect(&l.levi).is_zero());
        let r = radical(g).unwrap();
        let nr = nilradical(g).unwrap();
        assert!(nr.contains_space(&g.bracket_spaces(&g.full(), &r)));
    }
}

#[test]
fn corrupted_corpus_algebras_fail_validation() {
    for d in corpus_algebras() {
        let g = &d.algebra;
        let n = g.dim();
        if n < 2 {
            continue;
        }
        let mut c = g.constants().clone();
        // break antisymmetry in one entry
        c[0][1][0] += rat(1);
        assert!(LieAlgebra::from_constants(g.labels().to_vec(), c).validate().is_err());
    }
}

#[test]
fn killing_form_of_so3_is_negative_definite() {
    let g = liedef::lie::named::so3().algebra;
    for i in 0..3 {
        assert!(g.killing(&g.basis_vec(i), &g.basis_vec(i)).is_negative());
    }
}
