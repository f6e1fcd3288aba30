#![allow(dead_code)]

use liedef::definability::TbcCertificate;
use liedef::lie::algebra::default_labels;
use liedef::lie::LieAlgebra;
use liedef::linalg::{char_poly, jordan_chevalley, rat, Mat, Poly, Rat};
use liedef::reps::Representation;
use num_traits::{Signed, Zero};
use rand::Rng;

/// Derivation shapes on a 1- or 2-dimensional block; blocks of the same
/// shape commute.
#[derive(Clone, Copy, Debug)]
enum Shape {
    Real,
    Rotation,
    Jordan,
}

fn block(shape: Shape, rng: &mut impl Rng) -> Mat<Rat> {
    let mut r = || rat(rng.gen_range(-2..=2));
    match shape {
        Shape::Real => Mat::from_rows(vec![vec![r()]]),
        Shape::Rotation => {
            let (a, b) = (r(), r());
            Mat::from_rows(vec![vec![a.clone(), -b.clone()], vec![b, a]])
        }
        Shape::Jordan => {
            let (a, c) = (r(), r());
            Mat::from_rows(vec![vec![a.clone(), c], vec![Rat::zero(), a]])
        }
    }
}

fn random_shape(rng: &mut impl Rng, size: usize) -> Shape {
    if size == 1 {
        Shape::Real
    } else if rng.gen_bool(0.5) {
        Shape::Rotation
    } else {
        Shape::Jordan
    }
}

/// `R^k ⋉ n` with `n` abelian or Heisenberg and the `R^k` acting by commuting
/// derivations with Q(i)-rational eigenvalues, optionally in a scrambled basis.
/// Dimension at most 5.
pub fn random_solvable(rng: &mut impl Rng) -> LieAlgebra {
    let heis = rng.gen_bool(0.35);
    let m = if heis { 3 } else { rng.gen_range(1..=4) };
    let k = rng.gen_range(if m == 1 { 1 } else { 0 }..=(5 - m).min(2));
    let n = k + m;
    let mut derivs: Vec<Mat<Rat>> = Vec::new();
    if heis {
        // A on span{x, y}, tr A on z
        let shape = if rng.gen_bool(0.4) { None } else { Some(random_shape(rng, 2)) };
        for _ in 0..k {
            let a = match shape {
                None => Mat::diag(&[rat(rng.gen_range(-2..=2)), rat(rng.gen_range(-2..=2))]),
                Some(s) => block(s, rng),
            };
            let tr = a.trace();
            derivs.push(Mat::block_diag(&[a, Mat::from_rows(vec![vec![tr]])]));
        }
    } else {
        let mut sizes = Vec::new();
        let mut left = m;
        while left > 0 {
            let s = if left >= 2 && rng.gen_bool(0.5) { 2 } else { 1 };
            sizes.push(s);
            left -= s;
        }
        let shapes: Vec<Shape> = sizes.iter().map(|&s| random_shape(rng, s)).collect();
        for _ in 0..k {
            let blocks: Vec<Mat<Rat>> = shapes.iter().map(|&s| block(s, rng)).collect();
            derivs.push(Mat::block_diag(&blocks));
        }
    }
    let mut brackets = Vec::new();
    for (i, d) in derivs.iter().enumerate() {
        for j in 0..m {
            let mut v = vec![Rat::zero(); n];
            for r in 0..m {
                v[k + r] = d[(r, j)].clone();
            }
            if v.iter().any(|x| !x.is_zero()) {
                brackets.push((i, k + j, v));
            }
        }
    }
    if heis {
        let mut z = vec![Rat::zero(); n];
        z[k + 2] = rat(1);
        brackets.push((k, k + 1, z));
    }
    let g = LieAlgebra::from_brackets(default_labels(n), &brackets);
    if rng.gen_bool(0.5) {
        scramble(&g, rng)
    } else {
        g
    }
}

/// The same algebra in a random integer basis.
pub fn scramble(g: &LieAlgebra, rng: &mut impl Rng) -> LieAlgebra {
    let n = g.dim();
    let p = loop {
        let p = Mat::from_fn(n, n, |r, c| if r == c { rat(1) } else { rat(rng.gen_range(-1..=1)) });
        if !p.det().is_zero() {
            break p;
        }
    };
    let cols: Vec<Vec<Rat>> = (0..n).map(|j| p.col(j)).collect();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let v = p.solve(&g.bracket(&cols[i], &cols[j])).expect("invertible");
            if v.iter().any(|x| !x.is_zero()) {
                brackets.push((i, j, v));
            }
        }
    }
    LieAlgebra::from_brackets(default_labels(n), &brackets)
}

/// Solvable iff the Killing form vanishes on `g x [g, g]`.
pub fn cartan_solvable(g: &LieAlgebra) -> bool {
    let d = g.derived_algebra();
    (0..g.dim()).all(|i| d.basis().iter().all(|y| g.killing(&g.basis_vec(i), y).is_zero()))
}

fn brackets_into(g: &LieAlgebra, by: &[Vec<Rat>], s: &liedef::linalg::Subspace) -> bool {
    by.iter().all(|x| s.basis().iter().all(|y| s.contains(&g.bracket(x, y))))
}

/// Number of real roots counted by sign changes of the squarefree part on a
/// rational grid of step `1/den` within `[-bound, bound]`; grid points sit
/// at odd multiples of `1/(2 den)`.
pub fn grid_real_roots(p: &Poly<Rat>, bound: i64, den: i64) -> usize {
    let q = p.squarefree_part();
    let mut count = 0;
    let mut prev: Option<bool> = None;
    for k in -(2 * bound * den)..=(2 * bound * den) {
        if k % 2 == 0 {
            continue;
        }
        let x = Rat::new(k.into(), (2 * den).into());
        let v = q.eval(&x);
        let pos = v.is_positive();
        if let Some(pp) = prev {
            if pp != pos {
                count += 1;
            }
        }
        prev = Some(pos);
    }
    count
}

/// Monic real polynomial with only real roots, all nonpositive.
fn roots_real_nonpositive(p: &Poly<Rat>) -> bool {
    p.coeffs().iter().all(|c| !c.is_negative()) && p.sturm_count_real_roots().ok() == p.squarefree_part().degree()
}

/// Re-checks a tbc certificate clause by clause without the library verifier.
pub fn brute_tbc_check(g: &LieAlgebra, c: &TbcCertificate) -> Result<(), String> {
    let n = g.dim();
    if c.t.dim() + c.k.dim() != n || !c.t.intersect(&c.k).is_zero() {
        return Err("t and k do not split g".into());
    }
    let all: Vec<Vec<Rat>> = (0..n).map(|i| g.basis_vec(i)).collect();
    if !brackets_into(g, &all, &c.t) {
        return Err("t is not an ideal".into());
    }
    let steps = c.flag.steps();
    if steps.len() != c.t.dim() || steps.last().is_some_and(|s| *s != c.t) {
        return Err("flag does not end at t".into());
    }
    let mut prev = liedef::linalg::Subspace::zero(n);
    for s in steps {
        if s.dim() != prev.dim() + 1 || !s.contains_space(&prev) || !brackets_into(g, c.t.basis(), s) {
            return Err("flag step is not an ideal of t one dimension up".into());
        }
        for x in c.t.basis() {
            let ad = g.ad(x);
            let m = s.restrict(&ad).ok_or("restriction")?;
            let cp = char_poly(&m).map_err(|e| format!("{e:?}"))?;
            if cp.sturm_count_real_roots().ok() != cp.squarefree_part().degree() {
                return Err("non-real weight on the flag".into());
            }
        }
        prev = s.clone();
    }
    for (a, x) in c.k.basis().iter().enumerate() {
        for y in &c.k.basis()[a + 1..] {
            if g.bracket(x, y).iter().any(|v| !v.is_zero()) {
                return Err("k is not abelian".into());
            }
        }
        let ad = g.ad(x);
        let jc = jordan_chevalley(&ad).map_err(|e| format!("{e:?}"))?;
        if !jc.nilpotent.is_zero() {
            return Err("ad k is not semisimple".into());
        }
        let sq = char_poly(&ad.mul(&ad)).map_err(|e| format!("{e:?}"))?;
        if !roots_real_nonpositive(&sq) {
            return Err("ad k has a non-imaginary eigenvalue".into());
        }
    }
    Ok(())
}

/// `ρ([e_i, e_j]) = [ρ(e_i), ρ(e_j)]` entry by entry with explicit loops.
pub fn naive_homomorphism(r: &Representation) -> bool {
    let g = &r.source;
    let d = r.target_dim;
    let n = g.dim();
    for i in 0..n {
        for j in 0..n {
            let lhs = r.image(&g.bracket(&g.basis_vec(i), &g.basis_vec(j)));
            let (a, b) = (&r.images[i], &r.images[j]);
            for p in 0..d {
                for q in 0..d {
                    let mut s = Rat::zero();
                    for t in 0..d {
                        s += &a[(p, t)] * &b[(t, q)] - &b[(p, t)] * &a[(t, q)];
                    }
                    if s != lhs[(p, q)] {
                        return false;
                    }
                }
            }
        }
    }
    true
}
