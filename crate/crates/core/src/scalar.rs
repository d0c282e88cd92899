//! Exact scalar arithmetic: Gaussian rationals and the coefficient traits
//! shared by all polynomial types.
//!
//! `GaussianRational` stores real and imaginary parts as arbitrary-precision
//! rationals in lowest terms. Equality is exact componentwise equality.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::AlgebraError;

/// Ring operations shared by every coefficient domain.
///
/// Identities are obtained from an existing element (`zero_like`) so that
/// domains carrying context, such as number-field elements, fit the trait.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

/// Field operations on top of [`Ring`], plus the embedding of ℚ(i) scalars.
///
/// `inv` reports an error instead of panicking: over a residue ring whose
/// modulus is only assumed irreducible, inversion can expose a zero divisor.
pub trait Coeff: Ring {
    fn inv(&self) -> Result<Self, AlgebraError>;
    /// Embed a Gaussian rational into this domain, reusing `self`'s context.
    fn embed(&self, c: &GaussianRational) -> Self;
    /// Exact division.
    fn div_ref(&self, other: &Self) -> Result<Self, AlgebraError> {
        Ok(self.mul_ref(&other.inv()?))
    }
}

/// An element of ℚ(i): `re + im·i` with both parts in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        GaussianRational {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }

    pub fn i() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        GaussianRational {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    pub fn from_ratio_pair(re: (i64, i64), im: (i64, i64)) -> Self {
        assert!(re.1 != 0 && im.1 != 0, "zero denominator");
        GaussianRational {
            re: BigRational::new(BigInt::from(re.0), BigInt::from(re.1)),
            im: BigRational::new(BigInt::from(im.0), BigInt::from(im.1)),
        }
    }

    pub fn from_rational(r: BigRational) -> Self {
        GaussianRational {
            re: r,
            im: BigRational::zero(),
        }
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// |z|² = re² + im², a nonnegative rational.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// True when the value lies in ℚ ⊂ ℚ(i) (alias of `is_real`).
    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = GaussianRational::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            base = base.mul_ref(&base);
            e >>= 1;
        }
        acc
    }

    /// A square root in ℚ(i), if one exists.
    ///
    /// For `b ≠ 0` in `a + bi`: a root `x + yi` requires `x² + y² = √(a²+b²)`
    /// to be rational and `x² = (a + √(a²+b²))/2` to be a rational square;
    /// both conditions are decided exactly.
    pub fn sqrt_exact(&self) -> Option<GaussianRational> {
        if self.is_zero() {
            return Some(GaussianRational::zero());
        }
        if self.im.is_zero() {
            if self.re.is_positive() {
                return rational_sqrt(&self.re).map(GaussianRational::from_rational);
            }
            let neg = -self.re.clone();
            return rational_sqrt(&neg).map(|r| GaussianRational::new(BigRational::zero(), r));
        }
        let s = rational_sqrt(&self.norm())?;
        let two = BigRational::from_integer(BigInt::from(2));
        let x2 = (&self.re + &s) / &two;
        let x = rational_sqrt(&x2)?;
        if x.is_zero() {
            return None;
        }
        let y = &self.im / (&x * &two);
        let cand = GaussianRational::new(x, y);
        if cand.mul_ref(&cand) == *self {
            Some(cand)
        } else {
            None
        }
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }
}

impl Ring for GaussianRational {
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn zero_like(&self) -> Self {
        GaussianRational::zero()
    }

    fn one_like(&self) -> Self {
        GaussianRational::one()
    }

    fn add_ref(&self, other: &Self) -> Self {
        GaussianRational {
            re: &self.re + &other.re,
            im: &self.im + &other.im,
        }
    }

    fn sub_ref(&self, other: &Self) -> Self {
        GaussianRational {
            re: &self.re - &other.re,
            im: &self.im - &other.im,
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        GaussianRational {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    fn neg_ref(&self) -> Self {
        GaussianRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Coeff for GaussianRational {
    fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let n = self.norm();
        Ok(GaussianRational {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    fn embed(&self, c: &GaussianRational) -> Self {
        c.clone()
    }
}

impl fmt::Display for GaussianRational {
    /// Canonical form used in reports and the parser grammar, e.g. `3/2+1/2*i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im_mag = self.im.abs();
        let im_str = if im_mag.is_one() {
            "i".to_string()
        } else {
            format!("{}*i", im_mag)
        };
        if self.re.is_zero() {
            if self.im.is_negative() {
                return write!(f, "-{}", im_str);
            }
            return write!(f, "{}", im_str);
        }
        let sign = if self.im.is_negative() { "-" } else { "+" };
        write!(f, "{}{}{}", self.re, sign, im_str)
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Exact square root of a nonnegative rational, when it is a rational square.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let num = integer_sqrt_exact(r.numer())?;
    let den = integer_sqrt_exact(r.denom())?;
    Some(BigRational::new(num, den))
}

fn integer_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let root = n.sqrt();
    if &root * &root == *n {
        Some(root)
    } else {
        None
    }
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Fall back through a quotient of floats when the parts overflow f64.
        let n = r.numer().to_f64().unwrap_or(f64::MAX);
        let d = r.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

/// Compare two rationals through exact arithmetic, returning the sign of a−b.
pub fn rational_cmp_key(r: &BigRational) -> (BigInt, BigInt) {
    (r.numer().clone(), r.denom().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn arithmetic_round_trip() {
        let a = GaussianRational::from_ratio_pair((3, 2), (1, 2));
        let b = GaussianRational::from_ratio_pair((-1, 3), (2, 1));
        let prod = a.mul_ref(&b);
        let back = prod.div_ref(&b).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn display_canonical() {
        assert_eq!(
            GaussianRational::from_ratio_pair((3, 2), (1, 2)).to_string(),
            "3/2+1/2*i"
        );
        assert_eq!(GaussianRational::from_int(0).to_string(), "0");
        assert_eq!(GaussianRational::i().to_string(), "i");
        assert_eq!(
            GaussianRational::new(q(0, 1), q(-1, 1)).to_string(),
            "-i"
        );
        assert_eq!(
            GaussianRational::new(q(1, 1), q(-2, 1)).to_string(),
            "1-2*i"
        );
    }

    #[test]
    fn sqrt_exact_cases() {
        // (1+i)² = 2i
        let two_i = GaussianRational::new(q(0, 1), q(2, 1));
        let r = two_i.sqrt_exact().unwrap();
        assert_eq!(r.mul_ref(&r), two_i);
        // 9/4 → 3/2
        let nine_quarters = GaussianRational::from_ratio(9, 4);
        assert_eq!(
            nine_quarters.sqrt_exact().unwrap(),
            GaussianRational::from_ratio(3, 2)
        );
        // −4 → 2i
        let m4 = GaussianRational::from_int(-4);
        assert_eq!(
            m4.sqrt_exact().unwrap(),
            GaussianRational::new(q(0, 1), q(2, 1))
        );
        // 2 is not a square in ℚ(i)
        assert!(GaussianRational::from_int(2).sqrt_exact().is_none());
        // i is not a square in ℚ(i)
        assert!(GaussianRational::i().sqrt_exact().is_none());
    }

    #[test]
    fn conjugation_involution() {
        let a = GaussianRational::from_ratio_pair((5, 7), (-2, 3));
        assert_eq!(a.conj().conj(), a);
    }
}
