//! Representations with kernel exactly a finite central subgroup of order 2.
//!
//! `V` splits into isotypic components `V_i` on which the generator of `F`
//! acts by `(-1)^{k_i}`. The space
//! `W = ⊕_i V_i^{⊗2} ⊕ ⊕_r ⊗_i V_i^{⊗a_{r,i}}`, where the `a_r` span the
//! vectors orthogonal to `k` modulo 2, carries an action with kernel `F`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::RepError;
use crate::linalg::mat::Mat;
use crate::linalg::scalar::Rat;
use crate::linalg::subspace::Subspace;

#[derive(Clone, Debug, PartialEq)]
pub struct GroupRepData {
    pub generators: Vec<Mat<Rat>>,
    /// All elements of the finite central subgroup, identity included.
    pub center: Vec<Mat<Rat>>,
    pub order: u32,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuotientRep {
    pub w_dim: usize,
    pub images: Vec<Mat<Rat>>,
    /// Dimensions of the isotypic components.
    pub components: Vec<usize>,
    pub exponents: Vec<u8>,
    pub relations: Vec<Vec<u8>>,
    /// Number of sampled words outside `F` checked to act non-trivially.
    pub sampled: usize,
}

const SAMPLE_WORDS: usize = 64;
const MAX_WORD: usize = 4;

pub fn quotient_rep(d: &GroupRepData) -> Result<QuotientRep, RepError> {
    if d.order != 2 && !(d.order == 1 && d.center.len() <= 1) {
        return Err(RepError::Unsupported(format!("finite central subgroups of order {} are not supported", d.order)));
    }
    let n = d.generators.first().or(d.center.first()).map_or(0, |m| m.nrows());
    let id = Mat::<Rat>::identity(n);
    if d.generators.iter().chain(&d.center).any(|m| m.nrows() != n || m.ncols() != n) {
        return Err(RepError::Precondition("matrices have inconsistent sizes".into()));
    }
    if !d.center.contains(&id) || d.center.len() != d.order as usize {
        return Err(RepError::Precondition("F must list the identity and have exactly `order` elements".into()));
    }
    for f in &d.center {
        for g in &d.generators {
            if f.mul(g) != g.mul(f) {
                return Err(RepError::Precondition("F is not central".into()));
            }
        }
        for f2 in &d.center {
            if !d.center.contains(&f.mul(f2)) {
                return Err(RepError::Precondition("F is not closed under multiplication".into()));
            }
        }
    }
    let Some(f) = d.center.iter().find(|m| **m != id) else {
        let out = QuotientRep {
            w_dim: n,
            images: d.generators.clone(),
            components: vec![n],
            exponents: vec![0],
            relations: vec![],
            sampled: 0,
        };
        return Ok(out);
    };

    // isotypic components: exponent 1 for the -1 eigenspace, listed first
    let minus = Subspace::span(n, f.add(&id).kernel_basis());
    let plus = Subspace::span(n, f.sub(&id).kernel_basis());
    if minus.dim() + plus.dim() != n {
        return Err(RepError::Precondition("F does not act semisimply".into()));
    }
    let parts: Vec<(Subspace, u8)> = [(minus, 1u8), (plus, 0u8)].into_iter().filter(|(s, _)| !s.is_zero()).collect();
    let exponents: Vec<u8> = parts.iter().map(|(_, k)| *k).collect();
    let relations = relations_mod2(&exponents);
    let blocks = |m: &Mat<Rat>| -> Vec<Mat<Rat>> {
        parts.iter().map(|(s, _)| s.restrict(m).expect("central elements preserve isotypic components")).collect()
    };

    let act = |m: &Mat<Rat>| -> Mat<Rat> {
        let b = blocks(m);
        let mut summands: Vec<Mat<Rat>> = b.iter().map(|x| x.kron(x)).collect();
        for rel in &relations {
            let mut t: Option<Mat<Rat>> = None;
            for (i, &a) in rel.iter().enumerate() {
                for _ in 0..a {
                    t = Some(match t {
                        None => b[i].clone(),
                        Some(acc) => acc.kron(&b[i]),
                    });
                }
            }
            if let Some(t) = t {
                summands.push(t);
            }
        }
        Mat::block_diag(&summands)
    };

    let images: Vec<Mat<Rat>> = d.generators.iter().map(&act).collect();
    let w_dim = act(&id).nrows();
    let w_id = Mat::identity(w_dim);
    for z in &d.center {
        if act(z) != w_id {
            return Err(RepError::Verification("an element of F acts non-trivially on W".into()));
        }
    }

    // generators, inverses and random words of length <= 4 outside F act non-trivially
    let mut letters: Vec<Mat<Rat>> = d.generators.clone();
    letters.extend(d.generators.iter().filter_map(|g| g.inverse()));
    let mut words: Vec<Mat<Rat>> = d.generators.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(0xf00d);
    for i in 0..SAMPLE_WORDS {
        let len = 2 + i % (MAX_WORD - 1);
        let mut w = id.clone();
        for _ in 0..len {
            if let Some(l) = letters.choose(&mut rng) {
                w = w.mul(l);
            }
        }
        words.push(w);
    }
    let mut sampled = 0;
    for w in words.iter().filter(|w| !d.center.contains(w)) {
        sampled += 1;
        if act(w) == w_id {
            return Err(RepError::Verification("an element outside F acts trivially on W".into()));
        }
    }
    Ok(QuotientRep {
        w_dim,
        images,
        components: parts.iter().map(|(s, _)| s.dim()).collect(),
        exponents,
        relations,
        sampled,
    })
}

/// Basis of `{a in (Z/2)^h : a.k = 0}` with entries in {0, 1}.
fn relations_mod2(k: &[u8]) -> Vec<Vec<u8>> {
    let h = k.len();
    let unit = |j: usize| -> Vec<u8> { (0..h).map(|i| u8::from(i == j)).collect() };
    let Some(p) = k.iter().position(|&x| x % 2 == 1) else {
        return (0..h).map(unit).collect();
    };
    (0..h)
        .filter(|&j| j != p)
        .map(|j| {
            let mut v = unit(j);
            if k[j] % 2 == 1 {
                v[p] = 1;
            }
            v
        })
        .collect()
}
