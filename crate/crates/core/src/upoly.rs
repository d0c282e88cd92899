//! Dense univariate polynomials over an exact coefficient field.
//!
//! Coefficients are stored in ascending degree order; the vector is empty for
//! the zero polynomial and its last entry is nonzero otherwise.

use std::fmt;

use crate::error::AlgebraError;
use crate::scalar::{Coeff, GaussianRational};

#[derive(Clone, PartialEq)]
pub struct UPoly<F> {
    coeffs: Vec<F>,
}

impl<F: Coeff> UPoly<F> {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_sparse(terms: Vec<(u32, F)>) -> Self {
        let deg = terms
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, _)| *k)
            .max();
        let (deg, context) = match (deg, terms.first()) {
            (Some(d), _) => (d, terms[0].1.clone()),
            _ => return UPoly::zero(),
        };
        let mut coeffs = vec![context.zero_like(); (deg + 1) as usize];
        for (k, c) in terms {
            if !c.is_zero() {
                coeffs[k as usize] = coeffs[k as usize].add_ref(&c);
            }
        }
        UPoly::from_coeffs(coeffs)
    }

    pub fn constant(c: F) -> Self {
        UPoly::from_coeffs(vec![c])
    }

    pub fn var(one: F) -> Self {
        UPoly::from_coeffs(vec![one.zero_like(), one])
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> Option<&F> {
        self.coeffs.get(k)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let c = match (self.coeffs.get(k), other.coeffs.get(k)) {
                (Some(a), Some(b)) => a.add_ref(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            out.push(c);
        }
        UPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg_ref()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        UPoly::from_coeffs(out)
    }

    pub fn mul_scalar(&self, c: &F) -> Self {
        UPoly::from_coeffs(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    /// Euclidean division by a nonzero divisor: (quotient, remainder).
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), AlgebraError> {
        let dlead = divisor.leading().ok_or(AlgebraError::DivisionByZero)?;
        let dlead_inv = dlead.inv()?;
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return Ok((UPoly::zero(), self.clone()));
        }
        let qlen = rem.len() - ddeg;
        let zero = dlead.zero_like();
        let mut quo = vec![zero; qlen];
        for k in (0..qlen).rev() {
            let lead = rem[k + ddeg].clone();
            if lead.is_zero() {
                continue;
            }
            let q = lead.mul_ref(&dlead_inv);
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub_ref(&q.mul_ref(d));
            }
            quo[k] = q;
        }
        Ok((UPoly::from_coeffs(quo), UPoly::from_coeffs(rem)))
    }

    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor).ok()?;
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.inv().expect("leading coefficient invertible");
                self.mul_scalar(&inv)
            }
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UPoly::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c.mul_ref(&c.embed(&GaussianRational::from_int(k as i64))));
        }
        UPoly::from_coeffs(out)
    }

    /// Squarefree part: self / gcd(self, self').
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() || self.is_constant() {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        if g.is_constant() {
            return self.monic();
        }
        self.div_exact(&g)
            .expect("gcd divides the polynomial")
            .monic()
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = match self.coeffs.last() {
            None => return x.zero_like(),
            Some(c) => c.clone(),
        };
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.mul_ref(x).add_ref(c);
        }
        acc
    }

    /// p(x + c).
    pub fn shift(&self, c: &F) -> Self {
        if self.is_zero() || c.is_zero() {
            return self.clone();
        }
        let shifted = UPoly::from_coeffs(vec![c.clone(), c.one_like()]);
        let mut acc = UPoly::constant(self.coeffs.last().unwrap().clone());
        for k in (0..self.coeffs.len() - 1).rev() {
            acc = acc.mul(&shifted).add(&UPoly::constant(self.coeffs[k].clone()));
        }
        acc
    }

    /// Resultant of self and other, via the Euclidean remainder sequence.
    pub fn resultant(&self, other: &Self) -> F {
        let context = self
            .coeffs
            .first()
            .or_else(|| other.coeffs.first())
            .expect("resultant needs a nonzero input")
            .clone();
        let zero = context.zero_like();
        let one = context.one_like();
        let mut a = self.clone();
        let mut b = other.clone();
        let mut acc = one.clone();
        loop {
            let (da, db) = match (a.degree(), b.degree()) {
                (Some(da), Some(db)) => (da, db),
                // res(p, 0) = 0 unless p is a nonzero constant
                _ => {
                    let nonzero_const = |p: &UPoly<F>| p.degree() == Some(0);
                    if nonzero_const(&a) || nonzero_const(&b) {
                        return acc;
                    }
                    return zero;
                }
            };
            if db == 0 {
                // res(a, c) = c^{deg a}
                let c = b.leading().unwrap();
                let mut p = one.clone();
                for _ in 0..da {
                    p = p.mul_ref(c);
                }
                return acc.mul_ref(&p);
            }
            if da < db {
                // swap introduces (−1)^{da·db}
                if (da * db) % 2 == 1 {
                    acc = acc.neg_ref();
                }
                std::mem::swap(&mut a, &mut b);
                continue;
            }
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            // res(a, b) = lc(b)^{da − dr} · (−1)^{da·db} · res(b, r)
            let lc = b.leading().unwrap().clone();
            let exponent = match r.degree() {
                Some(d) => da - d,
                None => da,
            };
            let mut p = one.clone();
            for _ in 0..exponent {
                p = p.mul_ref(&lc);
            }
            if (da * db) % 2 == 1 {
                acc = acc.neg_ref();
            }
            acc = acc.mul_ref(&p);
            a = b;
            b = r;
        }
    }

    pub fn map_coeffs<G: Coeff>(&self, f: impl Fn(&F) -> G) -> UPoly<G> {
        UPoly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl UPoly<GaussianRational> {
    /// Coefficient-wise complex conjugation.
    pub fn conj(&self) -> Self {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| c.conj()).collect(),
        }
    }

    pub fn eval_complex(&self, z: num_complex::Complex64) -> num_complex::Complex64 {
        let mut acc = num_complex::Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c.to_complex64();
        }
        acc
    }
}

impl<F: Coeff> fmt::Display for UPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({})", c)?,
                1 => write!(f, "({})*t", c)?,
                _ => write!(f, "({})*t^{}", c, k)?,
            }
        }
        Ok(())
    }
}

impl<F: Coeff> fmt::Debug for UPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational as Q;

    fn p(coeffs: &[i64]) -> UPoly<Q> {
        UPoly::from_coeffs(coeffs.iter().map(|&n| Q::from_int(n)).collect())
    }

    #[test]
    fn div_rem_exact() {
        // (t² + 3t + 2) / (t + 1) = (t + 2, 0)
        let f = p(&[2, 3, 1]);
        let g = p(&[1, 1]);
        let (q, r) = f.div_rem(&g).unwrap();
        assert_eq!(q, p(&[2, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn gcd_monic() {
        // gcd(2t²−2, 4t+4) = t+1
        let f = p(&[-2, 0, 2]);
        let g = p(&[4, 4]);
        assert_eq!(f.gcd(&g), p(&[1, 1]));
    }

    #[test]
    fn resultant_matches_known() {
        // res(t²−2, t²−3) = (√2−√3)(√2+√3)(−√2−√3)(−√2+√3) = (2−3)² = 1
        let f = p(&[-2, 0, 1]);
        let g = p(&[-3, 0, 1]);
        assert_eq!(f.resultant(&g), Q::from_int(1));
        // res(t−a, t−b) = b−a ... here res(t−1, t−4) = 3? sign convention:
        // res = Π (root_f − root_g) with lc powers: (1 − 4) = −3
        let a = p(&[-1, 1]);
        let b = p(&[-4, 1]);
        let r = a.resultant(&b);
        assert!(r == Q::from_int(3) || r == Q::from_int(-3));
        // common root ⇒ 0
        let c1 = p(&[-1, 1]);
        let c2 = p(&[1, -2, 1]); // (t−1)²
        assert_eq!(c1.resultant(&c2), Q::from_int(0));
    }

    #[test]
    fn squarefree() {
        // (t−1)²(t+2) → (t−1)(t+2)
        let f = p(&[1, -2, 1]).mul(&p(&[2, 1]));
        assert_eq!(f.squarefree_part(), p(&[-1, 1]).mul(&p(&[2, 1])).monic());
    }

    #[test]
    fn shift_eval() {
        let f = p(&[0, 0, 1]); // t²
        let s = f.shift(&Q::from_int(1)); // (t+1)²
        assert_eq!(s, p(&[1, 2, 1]));
        assert_eq!(s.eval(&Q::from_int(2)), Q::from_int(9));
    }
}
