//! Univariate polynomials over Q and Q(i), characteristic polynomials, Sturm
//! sequences and exact root finding inside Q(i).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::mat::Mat;
use super::scalar::{GaussRat, Rat, Scalar};

/// Coefficients lowest degree first; no trailing zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<F = Rat> {
    coeffs: Vec<F>,
}

impl<F: Scalar> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// `x - a`
    pub fn linear_root(a: F) -> Self {
        Self::new(vec![-a, F::one()])
    }

    pub fn x_pow(n: usize) -> Self {
        let mut c = vec![F::zero(); n + 1];
        c[n] = F::one();
        Poly { coeffs: c }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.leading();
        Poly { coeffs: self.coeffs.iter().map(|c| c.clone() / l.clone()).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }

    pub fn scale(&self, s: &F) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.deg();
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() < d.coeffs.len() {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![F::zero(); rem.len() - dd];
        for k in (0..q.len()).rev() {
            let c = rem[k + dd].clone() / lead.clone();
            if !c.is_zero() {
                for (j, b) in d.coeffs.iter().enumerate() {
                    rem[k + j] = rem[k + j].clone() - c.clone() * b.clone();
                }
            }
            q[k] = c;
        }
        rem.truncate(dd);
        (Self::new(q), Self::new(rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c.clone() * F::from_int(k as i64)).collect())
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs.iter().rev().fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_mat(&self, m: &Mat<F>) -> Mat<F> {
        let n = m.nrows();
        let mut acc = Mat::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m).add(&Mat::identity(n).scale(c));
        }
        acc
    }

    /// Product of the distinct irreducible factors (monic).
    pub fn squarefree_part(&self) -> Self {
        if self.deg() == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Yun's algorithm: `self = c * prod_i f_i^i` with each `f_i` squarefree and
    /// pairwise coprime. Returns `(f_i, i)` for nonconstant factors.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.deg() == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.div_rem(&a0).0;
        let mut c = fp.div_rem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        loop {
            let a = b.gcd(&d);
            if a.deg() > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a).0;
            if b.deg() == 0 {
                break;
            }
            c = d.div_rem(&a).0;
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn fmt_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let term = if k == 0 {
                cs
            } else if c.is_one() {
                mono
            } else if (-c.clone()).is_one() {
                format!("-{mono}")
            } else if cs.contains(['+', ' ']) || (cs.contains('-') && !cs.starts_with('-')) {
                format!("({cs}){mono}")
            } else {
                format!("{cs}{mono}")
            };
            parts.push(term);
        }
        let mut s = parts[0].clone();
        for p in &parts[1..] {
            if let Some(rest) = p.strip_prefix('-') {
                s.push_str(" - ");
                s.push_str(rest);
            } else {
                s.push_str(" + ");
                s.push_str(p);
            }
        }
        s
    }
}

impl<F: Scalar> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_var("x"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("characteristic polynomial of a non-square {0}x{1} matrix")]
    NonSquare(usize, usize),
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
}

/// Monic `det(x I - M)` by Faddeev-LeVerrier.
pub fn char_poly<F: Scalar>(m: &Mat<F>) -> Result<Poly<F>, PolyError> {
    if !m.is_square() {
        return Err(PolyError::NonSquare(m.nrows(), m.ncols()));
    }
    let n = m.nrows();
    let mut c = vec![F::zero(); n + 1];
    c[n] = F::one();
    let mut mk = Mat::<F>::zeros(n, n);
    for k in 1..=n {
        mk = m.mul(&mk).add(&Mat::identity(n).scale(&c[n - k + 1]));
        let am = m.mul(&mk);
        c[n - k] = -(am.trace() / F::from_int(k as i64));
    }
    Ok(Poly::new(c))
}

fn sign(r: &Rat) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

fn sign_changes(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut n = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

impl Poly<Rat> {
    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| super::scalar::rat(c)).collect())
    }

    pub fn sturm_sequence(&self) -> Vec<Self> {
        let mut seq = vec![self.clone(), self.derivative()];
        while !seq.last().unwrap().is_zero() {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(r.scale(&-Rat::one()));
        }
        if seq.last().is_some_and(|p| p.is_zero()) {
            seq.pop();
        }
        seq
    }

    /// Number of distinct real roots.
    pub fn sturm_count_real_roots(&self) -> Result<usize, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let seq = self.sturm_sequence();
        let at_pos_inf = sign_changes(seq.iter().map(|p| sign(&p.leading())));
        let at_neg_inf = sign_changes(seq.iter().map(|p| {
            let s = sign(&p.leading());
            if p.deg() % 2 == 1 {
                -s
            } else {
                s
            }
        }));
        Ok(at_neg_inf - at_pos_inf)
    }

    /// True iff every complex root is real.
    pub fn all_roots_real(&self) -> Result<bool, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let sq = self.squarefree_part();
        Ok(sq.sturm_count_real_roots()? == sq.deg())
    }

    /// True iff every complex root lies on the imaginary axis.
    pub fn all_roots_imaginary(&self) -> Result<bool, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        // substitute x = i*y; roots are imaginary iff the result is (up to a unit) a
        // real polynomial in y with only real roots
        let n = self.deg();
        let mut re = Vec::with_capacity(n + 1);
        let mut im = Vec::with_capacity(n + 1);
        for (k, c) in self.coeffs().iter().enumerate() {
            // c * i^k
            let (r, i) = match k % 4 {
                0 => (c.clone(), Rat::zero()),
                1 => (Rat::zero(), c.clone()),
                2 => (-c.clone(), Rat::zero()),
                _ => (Rat::zero(), -c.clone()),
            };
            re.push(r);
            im.push(i);
        }
        let re = Poly::new(re);
        let im = Poly::new(im);
        let real_poly = if im.is_zero() {
            re
        } else if re.is_zero() {
            im
        } else {
            return Ok(false);
        };
        real_poly.all_roots_real()
    }

    /// `(content-free integer coefficients)`, scaled so the leading one is positive.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Rat::from_integer(lcm.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let mut out: Vec<BigInt> = if g.is_zero() { ints } else { ints.into_iter().map(|c| c / &g).collect() };
        if out.last().is_some_and(|l| l.is_negative()) {
            out = out.into_iter().map(|c| -c).collect();
        }
        out
    }

    /// All roots in Q(i) with multiplicity when the polynomial splits there;
    /// `None` when some root lies outside Q(i) (or coefficients are too large to
    /// factor by trial division).
    pub fn gauss_roots(&self) -> Option<Vec<(GaussRat, usize)>> {
        if self.is_zero() {
            return None;
        }
        let mut out = Vec::new();
        for (f, mult) in self.squarefree_decomposition() {
            for r in squarefree_gauss_roots(&f)? {
                out.push((r, mult));
            }
        }
        Some(out)
    }

    pub fn rational_roots(&self) -> Option<Vec<Rat>> {
        let mut q = self.squarefree_part();
        let mut roots = Vec::new();
        if q.is_zero() {
            return None;
        }
        if q.coeff(0).is_zero() {
            roots.push(Rat::zero());
            q = q.div_rem(&Poly::x_pow(1)).0;
        }
        if q.deg() == 0 {
            return Some(roots);
        }
        let z = q.primitive_integer();
        let lead_divs = positive_divisors(z.last().unwrap())?;
        let const_divs = positive_divisors(&z[0])?;
        for b in &lead_divs {
            for a in &const_divs {
                for s in [1i32, -1] {
                    let cand = Rat::new(a * BigInt::from(s), b.clone());
                    if q.deg() > 0 && q.eval(&cand).is_zero() {
                        roots.push(cand.clone());
                        q = q.div_rem(&Poly::linear_root(cand)).0;
                    }
                }
            }
        }
        roots.sort();
        roots.dedup();
        Some(roots)
    }
}

impl Poly<GaussRat> {
    /// Roots in Q(i) with multiplicity when the polynomial splits over Q(i).
    pub fn gauss_roots(&self) -> Option<Vec<(GaussRat, usize)>> {
        if self.is_zero() {
            return None;
        }
        if self.coeffs().iter().all(|c| c.is_real()) {
            return self.map(|c| c.re.clone()).gauss_roots();
        }
        let conj = self.map(|c| c.conj());
        let norm = self.mul(&conj);
        let norm_real = norm.map(|c| {
            debug_assert!(c.is_real());
            c.re.clone()
        });
        let candidates = norm_real.gauss_roots()?;
        let mut rest = self.clone();
        let mut out = Vec::new();
        for (z, _) in candidates {
            let lin = Poly::linear_root(z.clone());
            let mut mult = 0;
            loop {
                let (q, r) = rest.div_rem(&lin);
                if !r.is_zero() || rest.deg() == 0 {
                    break;
                }
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                out.push((z, mult));
            }
        }
        if rest.deg() == 0 {
            Some(out)
        } else {
            None
        }
    }
}

const TRIAL_LIMIT: u64 = 1_000_000;

/// Positive divisors of a nonzero integer by trial division. `None` when the
/// cofactor left after trial division might be composite.
pub fn positive_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut m = n.abs();
    if m.is_zero() {
        return None;
    }
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut p: u64 = 2;
    while p <= TRIAL_LIMIT && BigInt::from(p) * BigInt::from(p) <= m {
        let bp = BigInt::from(p);
        let mut e = 0;
        while (&m % &bp).is_zero() {
            m /= &bp;
            e += 1;
        }
        if e > 0 {
            factors.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > BigInt::one() {
        let limit = BigInt::from(TRIAL_LIMIT) * BigInt::from(TRIAL_LIMIT);
        if m >= limit {
            return None;
        }
        factors.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    Some(divs)
}

fn is_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Roots of a squarefree rational polynomial, all required to lie in Q(i).
fn squarefree_gauss_roots(f: &Poly<Rat>) -> Option<Vec<GaussRat>> {
    let mut roots: Vec<GaussRat> = f.rational_roots()?.into_iter().map(GaussRat::real).collect();
    let mut q = f.monic();
    for r in &roots {
        q = q.div_rem(&Poly::linear_root(r.re.clone())).0;
    }
    // remaining roots come in conjugate pairs with rational quadratic minimal
    // polynomials  l x^2 + k x + m  (l, m > 0) dividing q over Z
    while q.deg() > 0 {
        if q.deg() % 2 == 1 {
            return None;
        }
        let z = q.primitive_integer();
        let at_one: BigInt = z.iter().sum();
        let at_minus_one: BigInt = z.iter().enumerate().map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() }).sum();
        let lead_divs = positive_divisors(z.last().unwrap())?;
        let const_divs = positive_divisors(&z[0])?;
        let one_divs = positive_divisors(&at_one)?;
        let mut found = None;
        'search: for l in &lead_divs {
            for m in &const_divs {
                for d in &one_divs {
                    for sd in [d.clone(), -d.clone()] {
                        let k = &sd - l - m;
                        let disc = BigInt::from(4) * l * m - &k * &k;
                        if !disc.is_positive() {
                            continue;
                        }
                        let alt = l - &k + m;
                        if alt.is_zero() || !(&at_minus_one % &alt).is_zero() {
                            continue;
                        }
                        let Some(s) = is_square(&disc) else { continue };
                        let quad = Poly::new(vec![
                            Rat::from_integer(m.clone()),
                            Rat::from_integer(k.clone()),
                            Rat::from_integer(l.clone()),
                        ]);
                        let (qq, r) = q.div_rem(&quad);
                        if r.is_zero() {
                            let two_l = Rat::from_integer(BigInt::from(2) * l);
                            let re = Rat::from_integer(-k.clone()) / two_l.clone();
                            let im = Rat::from_integer(s) / two_l;
                            found = Some((qq, re, im));
                            break 'search;
                        }
                    }
                }
            }
        }
        let (qq, re, im) = found?;
        roots.push(GaussRat::new(re.clone(), im.clone()));
        roots.push(GaussRat::new(re, -im));
        q = qq.monic();
    }
    Some(roots)
}
