//! Jordan-Chevalley decomposition over Q by Newton iteration on the squarefree
//! part of the characteristic polynomial.

use super::mat::Mat;
use super::poly::{char_poly, Poly, PolyError};
use super::scalar::{Rat, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct JordanChevalley {
    pub semisimple: Mat<Rat>,
    pub nilpotent: Mat<Rat>,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum JordanError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("jordan-chevalley postcondition failed: {0}")]
    Postcondition(&'static str),
}

/// `M = S + N`, `S` semisimple, `N` nilpotent, `SN = NS`. The postconditions are
/// checked exactly on every call.
pub fn jordan_chevalley(m: &Mat<Rat>) -> Result<JordanChevalley, JordanError> {
    let n = m.nrows();
    let cp = char_poly(m)?;
    let p = cp.squarefree_part();
    let dp = p.derivative();
    let mut s = m.clone();
    // Newton: S <- S - p(S) p'(S)^{-1}; converges after at most log2(n)+1 steps
    for _ in 0..=usize::BITS {
        let ps = p.eval_mat(&s);
        if ps.is_zero() {
            break;
        }
        let dps = dp.eval_mat(&s);
        let inv = dps.inverse().ok_or(JordanError::Postcondition("p'(S) singular"))?;
        s = s.sub(&ps.mul(&inv));
    }
    let nil = m.sub(&s);
    check(m, &s, &nil, &p, n)?;
    Ok(JordanChevalley { semisimple: s, nilpotent: nil })
}

fn check(m: &Mat<Rat>, s: &Mat<Rat>, nil: &Mat<Rat>, p: &Poly<Rat>, n: usize) -> Result<(), JordanError> {
    if &s.add(nil) != m {
        return Err(JordanError::Postcondition("S + N != M"));
    }
    if !s.commutator(nil).is_zero() {
        return Err(JordanError::Postcondition("S and N do not commute"));
    }
    if !nil.pow(n as u32).is_zero() {
        return Err(JordanError::Postcondition("N not nilpotent"));
    }
    if !p.eval_mat(s).is_zero() {
        return Err(JordanError::Postcondition("minimal polynomial of S not squarefree"));
    }
    Ok(())
}

/// Semisimple iff the squarefree part of the characteristic polynomial kills it.
pub fn is_semisimple<F: Scalar>(m: &Mat<F>) -> bool {
    match char_poly(m) {
        Ok(cp) => cp.squarefree_part().eval_mat(m).is_zero(),
        Err(_) => false,
    }
}

pub fn is_nilpotent<F: Scalar>(m: &Mat<F>) -> bool {
    m.is_square() && m.pow(m.nrows() as u32).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::rat;

    fn m(rows: &[&[i64]]) -> Mat<Rat> {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    #[test]
    fn nilpotent_input() {
        let a = m(&[&[0, 1, 5], &[0, 0, 2], &[0, 0, 0]]);
        let jc = jordan_chevalley(&a).unwrap();
        assert!(jc.semisimple.is_zero());
        assert_eq!(jc.nilpotent, a);
    }

    #[test]
    fn diagonalizable_input() {
        let a = m(&[&[0, -1], &[1, 0]]);
        let jc = jordan_chevalley(&a).unwrap();
        assert_eq!(jc.semisimple, a);
        assert!(jc.nilpotent.is_zero());
    }

    #[test]
    fn jordan_block() {
        let jc = jordan_chevalley(&m(&[&[1, 1], &[0, 1]])).unwrap();
        assert_eq!(jc.semisimple, Mat::identity(2));
        assert_eq!(jc.nilpotent, m(&[&[0, 1], &[0, 0]]));
    }

    #[test]
    fn mixed_blocks() {
        // rotation block with a nilpotent coupling to a second rotation block
        let a = m(&[&[0, -1, 1, 0], &[1, 0, 0, 1], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
        let jc = jordan_chevalley(&a).unwrap();
        assert!(!jc.nilpotent.is_zero());
        assert!(is_semisimple(&jc.semisimple));
        assert!(!is_semisimple(&a));
    }
}
