use std::fmt;

use super::mat::Mat;
use super::poly::char_poly;
use super::scalar::{GaussRat, Rat};
use super::subspace::Subspace;

/// The computation needs scalars outside Q(i).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Indeterminate {
    pub reason: String,
}

impl Indeterminate {
    pub fn new(reason: impl Into<String>) -> Self {
        Indeterminate { reason: reason.into() }
    }
}

impl fmt::Display for Indeterminate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "indeterminate over Q(i): {}", self.reason)
    }
}

impl std::error::Error for Indeterminate {}

/// A common generalized eigenspace together with the eigenvalue of each input matrix on it.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightSpace {
    pub weight: Vec<GaussRat>,
    pub space: Subspace<GaussRat>,
}

/// Eigenvalues of `m` over Q(i) with algebraic multiplicity.
pub fn gauss_eigenvalues(m: &Mat<GaussRat>) -> Result<Vec<(GaussRat, usize)>, Indeterminate> {
    let cp = char_poly(m).map_err(|e| Indeterminate::new(e.to_string()))?;
    let real: Option<Vec<Rat>> = cp.coeffs().iter().map(|c| c.is_real().then(|| c.re.clone())).collect();
    let roots = match real {
        Some(cs) => super::poly::Poly::new(cs).gauss_roots(),
        None => cp.gauss_roots(),
    };
    roots.ok_or_else(|| Indeterminate::new(format!("characteristic polynomial {cp} does not split")))
}

/// Joint generalized eigenspace decomposition of a family of matrices over Q(i).
pub fn simultaneous_eigenspace(ms: &[Mat<GaussRat>]) -> Result<Vec<WeightSpace>, Indeterminate> {
    let n = ms.first().map_or(0, |m| m.nrows());
    let mut parts = vec![WeightSpace { weight: vec![], space: Subspace::full(n) }];
    for m in ms {
        let eig = gauss_eigenvalues(m)?;
        let mut next = Vec::new();
        for part in &parts {
            for (lambda, _) in &eig {
                let shifted = m.sub(&Mat::identity(n).scale(lambda)).pow(n as u32);
                let ker = Subspace::span(n, shifted.kernel_basis());
                let w = part.space.intersect(&ker);
                if !w.is_zero() {
                    let mut weight = part.weight.clone();
                    weight.push(lambda.clone());
                    next.push(WeightSpace { weight, space: w });
                }
            }
        }
        parts = next;
    }
    Ok(parts)
}

pub fn simultaneous_eigenspace_rat(ms: &[Mat<Rat>]) -> Result<Vec<WeightSpace>, Indeterminate> {
    let g: Vec<Mat<GaussRat>> = ms.iter().map(|m| m.to_gauss()).collect();
    simultaneous_eigenspace(&g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::rat;

    fn m(rows: &[&[i64]]) -> Mat<Rat> {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    #[test]
    fn diagonal_weights() {
        let ws = simultaneous_eigenspace_rat(&[m(&[&[1, 0], &[0, 2]])]).unwrap();
        let mut w: Vec<String> = ws.iter().map(|p| p.weight[0].to_string()).collect();
        w.sort();
        assert_eq!(w, vec!["1", "2"]);
        assert!(ws.iter().all(|p| p.space.dim() == 1));
    }

    #[test]
    fn rotation_weights() {
        let ws = simultaneous_eigenspace_rat(&[m(&[&[0, -1], &[1, 0]])]).unwrap();
        assert_eq!(ws.len(), 2);
        let ims: Vec<Rat> = ws.iter().map(|p| p.weight[0].im.clone()).collect();
        assert!(ims.contains(&rat(1)) && ims.contains(&rat(-1)));
    }

    #[test]
    fn sqrt_two_indeterminate() {
        assert!(simultaneous_eigenspace_rat(&[m(&[&[0, 2], &[1, 0]])]).is_err());
    }

    #[test]
    fn commuting_pair() {
        let a = m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]]);
        let b = m(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 3]]);
        let ws = simultaneous_eigenspace_rat(&[a, b]).unwrap();
        let total: usize = ws.iter().map(|p| p.space.dim()).sum();
        assert_eq!(total, 3);
        assert_eq!(ws.len(), 2);
    }
}
