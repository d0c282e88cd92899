//! Arithmetic in one simple extension ℚ(i)\[α\]/(m(α)).
//!
//! The modulus is monic and squarefree and the caller asserts irreducibility;
//! a concrete root is pinned down by a certified isolating box, so elements
//! have well-defined numeric values and exact decision procedures. If the
//! irreducibility assumption is wrong, inversion meets a zero divisor and
//! reports the discovered factor instead of returning garbage.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebraic::{
    eval_upoly_box, refine_box, separation_lower_bound, sturm_chain, sturm_count, CBox,
};
use crate::error::{AlgebraError, ClassifyError};
use crate::classify::{MultiplierField, RatioSumClass};
use crate::scalar::{Coeff, GaussianRational, Ring};
use crate::upoly::UPoly;

#[derive(Debug, PartialEq)]
pub struct NumberField {
    modulus: UPoly<GaussianRational>,
    root_box: CBox,
    /// Exact decision whether the pinned root is real, made at construction.
    generator_real: bool,
}

impl NumberField {
    /// Build the field from a monic squarefree modulus and a certified
    /// isolating box for the chosen root.
    pub fn new(modulus: UPoly<GaussianRational>, root_box: CBox) -> Arc<Self> {
        let modulus = modulus.monic();
        let generator_real = decide_generator_real(&modulus, &root_box);
        Arc::new(NumberField {
            modulus,
            root_box,
            generator_real,
        })
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }

    pub fn modulus(&self) -> &UPoly<GaussianRational> {
        &self.modulus
    }

    pub fn root_box(&self) -> &CBox {
        &self.root_box
    }

    pub fn generator_is_real(&self) -> bool {
        self.generator_real
    }

    /// Refined enclosure of the generator.
    pub fn refined_root_box(&self, target_width: &BigRational) -> CBox {
        refine_box(&self.modulus, &self.root_box, target_width)
    }

    pub fn describe(&self) -> String {
        let mid = self.root_box.mid_f64();
        format!("root({}; near {:.6}{:+.6}i)", self.modulus, mid.re, mid.im)
    }
}

fn modulus_is_real(m: &UPoly<GaussianRational>) -> bool {
    m.coeffs().iter().all(|c| c.im.is_zero())
}

/// Exact reality decision for the pinned root: the box isolates exactly one
/// root of the modulus, so for a real modulus a Sturm count on the real
/// section settles the question; a box off the real axis settles it directly.
fn decide_generator_real(m: &UPoly<GaussianRational>, b: &CBox) -> bool {
    if !b.im.contains_zero() {
        return false;
    }
    if !modulus_is_real(m) {
        // a real root would also be a root of the conjugate polynomial
        let g = m.gcd(&m.conj());
        if g.is_constant() {
            return false;
        }
        // the root is real iff it is a root of g; decide by refinement
        let mut cur = b.clone();
        for _ in 0..80 {
            if !cur.im.contains_zero() {
                return false;
            }
            let gv = eval_upoly_box(&g, &cur);
            let rest = m.div_exact(&g).expect("gcd divides");
            let rv = eval_upoly_box(&rest, &cur);
            if !gv.contains_zero() {
                return false;
            }
            if !rv.contains_zero() {
                // root of g: g is conjugation-symmetric and real up to scale
                return sturm_real_root_in(&g.monic(), &cur);
            }
            cur = refine_box(m, &cur, &(cur.width() / BigRational::from_integer(BigInt::from(4))));
        }
        return false;
    }
    sturm_real_root_in(m, b)
}

/// For a real polynomial and a unique-root box touching the axis: real iff a
/// real root lies in the box's real section.
fn sturm_real_root_in(m: &UPoly<GaussianRational>, b: &CBox) -> bool {
    let mut cur = b.clone();
    for _ in 0..32 {
        let gx_lo = GaussianRational::from_rational(cur.re.lo.clone());
        let gx_hi = GaussianRational::from_rational(cur.re.hi.clone());
        if m.eval(&gx_lo).is_zero() || m.eval(&gx_hi).is_zero() {
            cur = refine_box(
                m,
                &cur,
                &(cur.width() / BigRational::from_integer(BigInt::from(8))),
            );
            continue;
        }
        let chain = sturm_chain(m);
        return sturm_count(&chain, &cur.re.lo, &cur.re.hi) >= 1;
    }
    false
}

/// An element of ℚ(i)\[α\]/(m): a residue polynomial of degree < deg m.
#[derive(Clone)]
pub struct NfElem {
    field: Arc<NumberField>,
    rep: UPoly<GaussianRational>,
}

impl NfElem {
    pub fn new(field: Arc<NumberField>, rep: UPoly<GaussianRational>) -> Self {
        let rep = if rep.degree().is_some_and(|d| d >= field.degree()) {
            let (_, r) = rep.div_rem(field.modulus()).expect("monic modulus");
            r
        } else {
            rep
        };
        NfElem { field, rep }
    }

    pub fn generator(field: Arc<NumberField>) -> Self {
        NfElem::new(field, UPoly::var(GaussianRational::one()))
    }

    pub fn constant(field: Arc<NumberField>, c: GaussianRational) -> Self {
        NfElem::new(field, UPoly::constant(c))
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn rep(&self) -> &UPoly<GaussianRational> {
        &self.rep
    }

    /// Certified enclosure of the numeric value.
    pub fn value_box(&self, target_width: &BigRational) -> CBox {
        let ab = self.field.refined_root_box(target_width);
        eval_upoly_box(&self.rep, &ab)
    }

    pub fn to_complex64(&self) -> num_complex::Complex64 {
        let width = BigRational::new(BigInt::from(1), BigInt::from(1_000_000_000_000i64));
        self.value_box(&width).mid_f64()
    }
}

impl PartialEq for NfElem {
    fn eq(&self, other: &Self) -> bool {
        self.rep == other.rep
            && (Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field)
    }
}

impl fmt::Display for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rep.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.rep.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({})", c)?,
                1 => write!(f, "({})*a", c)?,
                _ => write!(f, "({})*a^{}", c, k)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Ring for NfElem {
    fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    fn zero_like(&self) -> Self {
        NfElem::new(Arc::clone(&self.field), UPoly::zero())
    }

    fn one_like(&self) -> Self {
        NfElem::constant(Arc::clone(&self.field), GaussianRational::one())
    }

    fn add_ref(&self, other: &Self) -> Self {
        NfElem::new(Arc::clone(&self.field), self.rep.add(&other.rep))
    }

    fn sub_ref(&self, other: &Self) -> Self {
        NfElem::new(Arc::clone(&self.field), self.rep.sub(&other.rep))
    }

    fn mul_ref(&self, other: &Self) -> Self {
        NfElem::new(Arc::clone(&self.field), self.rep.mul(&other.rep))
    }

    fn neg_ref(&self) -> Self {
        NfElem::new(Arc::clone(&self.field), self.rep.neg())
    }
}

impl Coeff for NfElem {
    fn inv(&self) -> Result<Self, AlgebraError> {
        if self.rep.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let (g, _, t) = extended_gcd(self.field.modulus(), &self.rep);
        match g.degree() {
            Some(0) => {
                let c = g.coeffs()[0].inv()?;
                Ok(NfElem::new(Arc::clone(&self.field), t.mul_scalar(&c)))
            }
            _ => Err(AlgebraError::ZeroDivisor {
                factor: g.monic().to_string(),
            }),
        }
    }

    fn embed(&self, c: &GaussianRational) -> Self {
        NfElem::constant(Arc::clone(&self.field), c.clone())
    }
}

/// Extended Euclid: returns (g, s, t) with s·a + t·b = g.
pub fn extended_gcd(
    a: &UPoly<GaussianRational>,
    b: &UPoly<GaussianRational>,
) -> (
    UPoly<GaussianRational>,
    UPoly<GaussianRational>,
    UPoly<GaussianRational>,
) {
    let one = UPoly::constant(GaussianRational::one());
    let zero = UPoly::zero();
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (one.clone(), zero.clone());
    let (mut t0, mut t1) = (zero, one);
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    (r0, s0, t0)
}

impl MultiplierField for NfElem {
    fn to_base(&self) -> Option<GaussianRational> {
        if self.rep.is_zero() {
            return Some(GaussianRational::zero());
        }
        if self.rep.degree() == Some(0) {
            return Some(self.rep.coeffs()[0].clone());
        }
        None
    }

    fn ratio_sum_class(&self) -> Result<RatioSumClass, ClassifyError> {
        if let Some(base) = self.to_base() {
            return base.ratio_sum_class();
        }
        // nonconstant residue in an irreducible extension: s ∉ ℚ(i), so
        // λ ∉ ℚ automatically; only reality and position relative to ±2 matter
        let real = self.decide_real()?;
        if !real {
            return Ok(RatioSumClass::NonRealRatio);
        }
        // s is real irrational; decide s > 2, s < −2, or |s| < 2 by refinement
        let two = BigRational::from_integer(BigInt::from(2));
        let mut width = BigRational::new(BigInt::from(1), BigInt::from(1024));
        for _ in 0..200 {
            let b = self.value_box(&width);
            if b.re.lo > two {
                return Ok(RatioSumClass::RealIrrational {
                    lambda_positive: true,
                });
            }
            if b.re.hi < -two.clone() {
                return Ok(RatioSumClass::RealIrrational {
                    lambda_positive: false,
                });
            }
            if b.re.hi < two && b.re.lo > -two.clone() {
                // |s| < 2: the ratio is a non-real point of the unit circle
                return Ok(RatioSumClass::NonRealRatio);
            }
            width /= BigRational::from_integer(BigInt::from(16));
        }
        Err(ClassifyError::Algebra(AlgebraError::Unsupported(
            "could not separate the ratio sum from ±2".into(),
        )))
    }
}

impl NfElem {
    /// Exact reality decision for the represented algebraic number.
    pub fn decide_real(&self) -> Result<bool, ClassifyError> {
        if let Some(c) = self.to_base() {
            return Ok(c.im.is_zero());
        }
        // fast path: real modulus with a certified real generator
        if modulus_is_real(self.field.modulus()) && self.field.generator_is_real() {
            return Ok(self.rep.conj() == self.rep);
        }
        // general path via the annihilator of s
        let ann = self.annihilator().squarefree_part();
        let conj_ann = ann.conj();
        let g = ann.gcd(&conj_ann);
        if g.is_constant() {
            return Ok(false);
        }
        let rest = ann.div_exact(&g).expect("gcd divides").monic();
        let g = g.monic();
        if !modulus_is_real(&g) {
            // conjugation-symmetric monic gcd must be real; treat failure as
            // "not decidable" rather than guessing
            return Err(ClassifyError::Algebra(AlgebraError::Unsupported(
                "annihilator gcd is not real".into(),
            )));
        }
        let sep = separation_lower_bound(&g);
        let mut width = BigRational::new(BigInt::from(1), BigInt::from(1024));
        for _ in 0..200 {
            let b = self.value_box(&width);
            if !b.im.contains_zero() {
                return Ok(false);
            }
            let gv = eval_upoly_box(&g, &b);
            if !gv.contains_zero() {
                return Ok(false);
            }
            let rv = eval_upoly_box(&rest, &b);
            if !rv.contains_zero() {
                // s is a root of the real factor g: decide via separation
                let sep = match &sep {
                    Some(s) => s.clone(),
                    None => break,
                };
                let quarter_sep =
                    sep / BigRational::from_integer(BigInt::from(4));
                let bb = self.value_box(&quarter_sep.clone().min(width.clone()));
                if !bb.im.contains_zero() {
                    return Ok(false);
                }
                let lo = GaussianRational::from_rational(bb.re.lo.clone());
                let hi = GaussianRational::from_rational(bb.re.hi.clone());
                if g.eval(&lo).is_zero() || g.eval(&hi).is_zero() {
                    // a rational endpoint hit a root: that root is rational,
                    // and equality with s is impossible for a nonconstant rep
                    width /= BigRational::from_integer(BigInt::from(16));
                    continue;
                }
                let chain = sturm_chain(&g);
                return Ok(sturm_count(&chain, &bb.re.lo, &bb.re.hi) >= 1);
            }
            width /= BigRational::from_integer(BigInt::from(16));
        }
        Err(ClassifyError::Algebra(AlgebraError::Unsupported(
            "reality decision did not converge".into(),
        )))
    }

    /// Characteristic polynomial of multiplication by self, a ℚ(i)-polynomial
    /// vanishing at the represented number (Faddeev–LeVerrier).
    pub fn annihilator(&self) -> UPoly<GaussianRational> {
        let n = self.field.degree();
        let m = self.mult_matrix();
        char_poly(&m, n)
    }

    fn mult_matrix(&self) -> Vec<Vec<GaussianRational>> {
        let n = self.field.degree();
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let basis = NfElem::new(
                Arc::clone(&self.field),
                UPoly::from_sparse(vec![(j as u32, GaussianRational::one())]),
            );
            let prod = self.mul_ref(&basis);
            let mut col = vec![GaussianRational::zero(); n];
            for (k, c) in prod.rep.coeffs().iter().enumerate() {
                col[k] = c.clone();
            }
            cols.push(col);
        }
        // row-major matrix with m[i][j] = coefficient i of self·α^j
        (0..n)
            .map(|i| (0..n).map(|j| cols[j][i].clone()).collect())
            .collect()
    }
}

/// Characteristic polynomial det(zI − M) by the Faddeev–LeVerrier recursion.
fn char_poly(m: &[Vec<GaussianRational>], n: usize) -> UPoly<GaussianRational> {
    let zero = GaussianRational::zero();
    let mut coeffs = vec![zero.clone(); n + 1];
    coeffs[n] = GaussianRational::one();
    let aux: Vec<Vec<GaussianRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        GaussianRational::one()
                    } else {
                        zero.clone()
                    }
                })
                .collect()
        })
        .collect();
    let mat_mul = |a: &[Vec<GaussianRational>], b: &[Vec<GaussianRational>]| {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut acc = GaussianRational::zero();
                        for k in 0..n {
                            acc = acc.add_ref(&a[i][k].mul_ref(&b[k][j]));
                        }
                        acc
                    })
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
    };
    let mut mk = aux;
    for k in 1..=n {
        mk = mat_mul(m, &mk);
        let mut tr = GaussianRational::zero();
        for i in 0..n {
            tr = tr.add_ref(&mk[i][i]);
        }
        // c_k = −tr(M_k)/k
        let ck = GaussianRational::from_ratio(-1, k as i64).mul_ref(&tr);
        coeffs[n - k] = ck.clone();
        for i in 0..n {
            mk[i][i] = mk[i][i].add_ref(&ck);
        }
    }
    UPoly::from_coeffs(coeffs)
}
