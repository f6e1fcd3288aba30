//! Standard small Lie algebras, with matrix presentations where one is classical.

use super::algebra::LieAlgebra;
use super::io::AlgebraData;
use super::matrices::{from_matrices, MatrixPresentation};
use crate::linalg::mat::Mat;
use crate::linalg::scalar::{rat, Rat};

fn labels(ls: &[&str]) -> Vec<String> {
    ls.iter().map(|s| s.to_string()).collect()
}

fn ints(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| rat(x)).collect()
}

pub fn mat(rows: &[&[i64]]) -> Mat<Rat> {
    Mat::from_rows(rows.iter().map(|r| ints(r)).collect())
}

/// `E_{ij}` in `gl_m`, zero-based.
pub fn unit(m: usize, i: usize, j: usize) -> Mat<Rat> {
    let mut e = Mat::zeros(m, m);
    e[(i, j)] = rat(1);
    e
}

/// Algebra spanned by the given matrices; they must already be bracket-closed.
fn presented(ls: &[&str], mats: Vec<Mat<Rat>>) -> AlgebraData {
    let fm = from_matrices(&mats);
    assert_eq!(fm.added, 0);
    assert_eq!(fm.dependent, 0);
    AlgebraData::new(fm.algebra.with_labels(labels(ls)), Some(fm.presentation))
}

pub fn abelian(n: usize) -> AlgebraData {
    let ls: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    AlgebraData::new(LieAlgebra::abelian(n).with_labels(ls), None)
}

/// `[X, Y] = Y`.
pub fn ax_plus_b() -> AlgebraData {
    presented(&["X", "Y"], vec![unit(2, 0, 0), unit(2, 0, 1)])
}

/// `[x, y] = z`.
pub fn heisenberg() -> AlgebraData {
    presented(&["x", "y", "z"], vec![unit(3, 0, 1), unit(3, 1, 2), unit(3, 0, 2)])
}

/// `R ⋉_A R^2` with basis `T, X, Y` and `ad T = A` on `span{X, Y}`, presented
/// by 3x3 affine matrices.
pub fn semidirect_plane(a: [[i64; 2]; 2]) -> AlgebraData {
    let t = mat(&[&[a[0][0], a[0][1], 0], &[a[1][0], a[1][1], 0], &[0, 0, 0]]);
    presented(&["T", "X", "Y"], vec![t, unit(3, 0, 2), unit(3, 1, 2)])
}

/// Euclidean motions of the plane: `[R, X] = Y`, `[R, Y] = -X`.
pub fn e2() -> AlgebraData {
    let mut d = semidirect_plane([[0, -1], [1, 0]]);
    d.algebra = d.algebra.with_labels(labels(&["R", "X", "Y"]));
    d
}

/// `ad T` has eigenvalues `1 ± i` on `span{X, Y}`.
pub fn oscillator() -> AlgebraData {
    semidirect_plane([[1, -1], [1, 1]])
}

/// `[h, e] = 2e`, `[h, f] = -2f`, `[e, f] = h`.
pub fn sl2() -> AlgebraData {
    presented(&["e", "f", "h"], vec![unit(2, 0, 1), unit(2, 1, 0), mat(&[&[1, 0], &[0, -1]])])
}

pub fn so3_matrices() -> Vec<Mat<Rat>> {
    vec![
        mat(&[&[0, 0, 0], &[0, 0, -1], &[0, 1, 0]]),
        mat(&[&[0, 0, 1], &[0, 0, 0], &[-1, 0, 0]]),
        mat(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]),
    ]
}

/// `[L1, L2] = L3` and cyclic.
pub fn so3() -> AlgebraData {
    presented(&["L1", "L2", "L3"], so3_matrices())
}

pub fn gl2() -> AlgebraData {
    presented(&["E11", "E12", "E21", "E22"], vec![unit(2, 0, 0), unit(2, 0, 1), unit(2, 1, 0), unit(2, 1, 1)])
}

/// `sl_2` acting on `R^2 = span{u, v}` by the natural representation.
pub fn sl2_ltimes_r2() -> AlgebraData {
    presented(
        &["e", "f", "h", "u", "v"],
        vec![unit(3, 0, 1), unit(3, 1, 0), mat(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 0]]), unit(3, 0, 2), unit(3, 1, 2)],
    )
}

pub fn direct_sum(a: &AlgebraData, b: &AlgebraData) -> AlgebraData {
    let algebra = a.algebra.direct_sum(&b.algebra);
    let matrices = match (&a.matrices, &b.matrices) {
        (Some(p), Some(q)) => {
            let za = Mat::zeros(p.ambient, p.ambient);
            let zb = Mat::zeros(q.ambient, q.ambient);
            let mut mats: Vec<Mat<Rat>> = p.mats.iter().map(|m| Mat::block_diag(&[m.clone(), zb.clone()])).collect();
            mats.extend(q.mats.iter().map(|m| Mat::block_diag(&[za.clone(), m.clone()])));
            Some(MatrixPresentation { ambient: p.ambient + q.ambient, mats })
        }
        _ => None,
    };
    AlgebraData::new(algebra, matrices)
}

pub fn so3_plus_e2() -> AlgebraData {
    direct_sum(&so3(), &e2())
}

/// `sl_2 ⊕ R` with the second summand central.
pub fn sl2_plus_r() -> AlgebraData {
    let mut d = direct_sum(&sl2(), &abelian(1));
    d.algebra = d.algebra.with_labels(labels(&["e", "f", "h", "c"]));
    d
}

/// The one-parameter group `t -> diag(e^t) ⊕ rot(t)`, infinitesimally `1 ⊕ J`.
pub fn intro_example() -> AlgebraData {
    presented(&["A"], vec![mat(&[&[1, 0, 0], &[0, 0, -1], &[0, 1, 0]])])
}

/// Three-dimensional solvable algebras of Bianchi types I–VII in the form
/// `R ⋉_A R^2`.
pub fn bianchi(kind: &str) -> Option<AlgebraData> {
    let a = match kind {
        "I" => return Some(abelian(3)),
        "II" => [[0, 0], [1, 0]],
        "III" => [[1, 0], [0, 0]],
        "IV" => [[1, 1], [0, 1]],
        "V" => [[1, 0], [0, 1]],
        "VI0" => [[1, 0], [0, -1]],
        "VIh" => [[1, 0], [0, 2]],
        "VII0" => [[0, -1], [1, 0]],
        "VIIh" => [[1, -1], [1, 1]],
        _ => return None,
    };
    Some(semidirect_plane(a))
}

pub const BIANCHI_KINDS: [&str; 9] = ["I", "II", "III", "IV", "V", "VI0", "VIh", "VII0", "VIIh"];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::algebra::Violation;
    use crate::linalg::subspace::Subspace;

    fn v(xs: &[i64]) -> Vec<Rat> {
        ints(xs)
    }

    fn all() -> Vec<AlgebraData> {
        let mut out = vec![abelian(2), ax_plus_b(), heisenberg(), e2(), oscillator(), sl2(), so3(), gl2()];
        out.extend([sl2_ltimes_r2(), so3_plus_e2(), sl2_plus_r(), intro_example()]);
        out.extend(BIANCHI_KINDS.iter().map(|k| bianchi(k).unwrap()));
        out
    }

    #[test]
    fn every_named_algebra_is_valid_and_presented_consistently() {
        for d in all() {
            d.algebra.validate().unwrap();
            if let Some(p) = &d.matrices {
                assert!(p.is_compatible(&d.algebra));
            }
        }
    }

    #[test]
    fn tampered_heisenberg_fails_jacobi() {
        let g = heisenberg().algebra;
        let mut c = g.constants().clone();
        c[0][2] = v(&[1, 0, 0]);
        c[2][0] = v(&[-1, 0, 0]);
        let bad = LieAlgebra::from_constants(g.labels().to_vec(), c);
        assert_eq!(bad.validate(), Err(Violation::Jacobi(0, 1, 2)));
        let mut c = g.constants().clone();
        c[0][1] = v(&[0, 0, 2]);
        assert_eq!(LieAlgebra::from_constants(g.labels().to_vec(), c).validate(), Err(Violation::Antisymmetry(0, 1)));
    }

    #[test]
    fn brackets() {
        let e = e2().algebra;
        assert_eq!(e.bracket(&v(&[1, 0, 0]), &v(&[0, 1, 0])), v(&[0, 0, 1]));
        let x = v(&[3, -1, 2]);
        assert_eq!(e.bracket(&x, &x), v(&[0, 0, 0]));
        assert_eq!(heisenberg().algebra.bracket(&v(&[1, 0, 0]), &v(&[0, 1, 0])), v(&[0, 0, 1]));
        assert!(e.try_bracket(&v(&[1]), &x).is_err());
    }

    #[test]
    fn adjoint_matrices() {
        let h = heisenberg().algebra;
        assert!(h.ad(&v(&[0, 0, 1])).is_zero());
        let e = e2().algebra;
        assert_eq!(e.ad(&v(&[1, 0, 0])), mat(&[&[0, 0, 0], &[0, 0, -1], &[0, 1, 0]]));
        let a = ax_plus_b().algebra;
        assert_eq!(a.ad(&v(&[1, 0])), mat(&[&[0, 0], &[0, 1]]));
    }

    #[test]
    fn closures() {
        let e = e2().algebra;
        assert!(e.subalgebra_closure(vec![v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])]).is_full());
        assert_eq!(e.subalgebra_closure(vec![v(&[0, 1, 0])]).dim(), 1);
        assert!(e.subalgebra_closure(vec![v(&[1, 0, 0]), v(&[0, 1, 0])]).is_full());
    }

    #[test]
    fn series_center_centralizer() {
        let h = heisenberg().algebra;
        assert_eq!(h.center(), Subspace::span(3, vec![v(&[0, 0, 1])]));
        let a = ax_plus_b().algebra;
        let ds = a.derived_series();
        assert_eq!(ds.iter().map(|s| s.dim()).collect::<Vec<_>>(), vec![2, 1, 0]);
        assert_eq!(ds[1], Subspace::span(2, vec![v(&[0, 1])]));
        let g = so3_plus_e2().algebra;
        let r = Subspace::span(6, vec![v(&[0, 0, 0, 1, 0, 0])]);
        let expect = Subspace::span(
            6,
            vec![v(&[1, 0, 0, 0, 0, 0]), v(&[0, 1, 0, 0, 0, 0]), v(&[0, 0, 1, 0, 0, 0]), v(&[0, 0, 0, 1, 0, 0])],
        );
        assert_eq!(g.centralizer(&r), expect);
        assert_eq!(e2().algebra.lower_central_series().last().unwrap().dim(), 2);
    }

    #[test]
    fn killing_forms() {
        assert!(abelian(3).algebra.killing_form().is_zero());
        assert!(heisenberg().algebra.killing_form().is_zero());
        let k = sl2().algebra.killing_form();
        assert_eq!(k, mat(&[&[0, 4, 0], &[4, 0, 0], &[0, 0, 8]]));
    }

    #[test]
    fn solvability_flags() {
        let a = abelian(2).algebra;
        assert!(a.is_solvable().unwrap() && a.is_nilpotent() && !a.is_semisimple());
        let s = sl2().algebra;
        assert!(s.is_semisimple() && !s.is_solvable().unwrap());
        let e = e2().algebra;
        assert!(e.is_solvable().unwrap() && !e.is_nilpotent());
        assert_eq!(heisenberg().algebra.nilpotency_class(), Some(2));
    }

    #[test]
    fn from_matrices_examples() {
        let fm = from_matrices(&[mat(&[&[1, 0, 0], &[0, 0, -1], &[0, 1, 0]])]);
        assert_eq!(fm.algebra.dim(), 1);
        assert!(fm.algebra.is_abelian());
        let fm = from_matrices(&[unit(2, 0, 1)]);
        assert_eq!(fm.algebra.dim(), 1);
        let fm = from_matrices(&[unit(2, 0, 0), unit(2, 0, 1)]);
        assert_eq!(fm.algebra.basis_bracket(0, 1), v(&[0, 1]).as_slice());
        let fm = from_matrices(&[unit(2, 0, 1), unit(2, 1, 0)]);
        assert_eq!((fm.algebra.dim(), fm.added), (3, 1));
        assert!(fm.presentation.is_compatible(&fm.algebra));
    }

    #[test]
    fn quotient_and_subalgebra() {
        let e = e2().algebra;
        let t = Subspace::span(3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
        let q = e.quotient(&t).unwrap();
        assert_eq!(q.algebra.dim(), 1);
        assert_eq!(q.project(&v(&[2, 5, 7])), v(&[2]));
        let sub = e.subalgebra(&t).unwrap();
        assert!(sub.algebra.is_abelian());
        assert!(e.quotient(&Subspace::span(3, vec![v(&[0, 1, 0])])).is_err());
    }

    #[test]
    fn json_round_trip() {
        for d in all() {
            let text = d.to_json();
            let back = crate::lie::io::parse_algebra(&text).unwrap();
            assert_eq!(back.algebra, d.algebra);
            assert_eq!(back.matrices, d.matrices);
            assert_eq!(back.content_hash(), d.content_hash());
        }
    }
}
