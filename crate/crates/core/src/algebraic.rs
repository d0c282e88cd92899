//! Certified interval tools over exact rationals: intervals and boxes with
//! rational endpoints, enclosures of square roots, Sturm counts, complex root
//! isolation with interval-Newton certification, and a Mignotte-style root
//! separation bound.
//!
//! Everything here is sound: an interval result always encloses the exact
//! value, and yes/no answers are backed by exact arithmetic.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalar::{rational_to_f64, Coeff, GaussianRational, Ring};
use crate::upoly::UPoly;

/// Closed interval with rational endpoints.
#[derive(Clone, Debug, PartialEq)]
pub struct RatInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RatInterval {
    pub fn point(v: BigRational) -> Self {
        RatInterval { lo: v.clone(), hi: v }
    }

    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        RatInterval { lo, hi }
    }

    pub fn zero() -> Self {
        RatInterval::point(BigRational::zero())
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn contains(&self, v: &BigRational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Sign when the interval excludes zero: −1 or +1; None otherwise.
    pub fn definite_sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        RatInterval {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        RatInterval {
            lo: &self.lo - &o.hi,
            hi: &self.hi - &o.lo,
        }
    }

    pub fn neg(&self) -> Self {
        RatInterval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let products = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let mut lo = products[0].clone();
        let mut hi = products[0].clone();
        for p in &products[1..] {
            if p < &lo {
                lo = p.clone();
            }
            if p > &hi {
                hi = p.clone();
            }
        }
        RatInterval { lo, hi }
    }

    pub fn square(&self) -> Self {
        if self.contains_zero() {
            let m = self.lo.abs().max(self.hi.abs());
            RatInterval {
                lo: BigRational::zero(),
                hi: &m * &m,
            }
        } else {
            self.mul(self)
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_negative() {
            RatInterval {
                lo: &self.hi * c,
                hi: &self.lo * c,
            }
        } else {
            RatInterval {
                lo: &self.lo * c,
                hi: &self.hi * c,
            }
        }
    }

    pub fn hull(&self, o: &Self) -> Self {
        RatInterval {
            lo: self.lo.clone().min(o.lo.clone()),
            hi: self.hi.clone().max(o.hi.clone()),
        }
    }

    pub fn intersect(&self, o: &Self) -> Option<Self> {
        let lo = self.lo.clone().max(o.lo.clone());
        let hi = self.hi.clone().min(o.hi.clone());
        if lo <= hi {
            Some(RatInterval { lo, hi })
        } else {
            None
        }
    }

    /// Reciprocal, defined when the interval excludes zero.
    pub fn recip(&self) -> Option<Self> {
        self.definite_sign()?;
        Some(RatInterval {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        })
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (rational_to_f64(&self.lo), rational_to_f64(&self.hi))
    }
}

/// Rectangular complex interval with rational endpoints.
#[derive(Clone, Debug, PartialEq)]
pub struct CBox {
    pub re: RatInterval,
    pub im: RatInterval,
}

impl CBox {
    pub fn point(v: &GaussianRational) -> Self {
        CBox {
            re: RatInterval::point(v.re.clone()),
            im: RatInterval::point(v.im.clone()),
        }
    }

    pub fn from_f64(z: Complex64, radius: f64) -> Self {
        let r = |x: f64| BigRational::from_float(x).unwrap_or_else(BigRational::zero);
        CBox {
            re: RatInterval::new(r(z.re - radius), r(z.re + radius)),
            im: RatInterval::new(r(z.im - radius), r(z.im + radius)),
        }
    }

    pub fn width(&self) -> BigRational {
        self.re.width().max(self.im.width())
    }

    pub fn mid(&self) -> GaussianRational {
        GaussianRational::new(self.re.mid(), self.im.mid())
    }

    pub fn contains(&self, v: &GaussianRational) -> bool {
        self.re.contains(&v.re) && self.im.contains(&v.im)
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        CBox {
            re: self.re.add(&o.re),
            im: self.im.add(&o.im),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        CBox {
            re: self.re.sub(&o.re),
            im: self.im.sub(&o.im),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        CBox {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn conj(&self) -> Self {
        CBox {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    /// Interval enclosure of |z|² over the box.
    pub fn norm_sq(&self) -> RatInterval {
        self.re.square().add(&self.im.square())
    }

    /// Reciprocal box, defined when the box excludes zero (0 ∉ |z|² range).
    pub fn recip(&self) -> Option<Self> {
        let n = self.norm_sq();
        if n.contains_zero() {
            return None;
        }
        let inv_n = n.recip()?;
        let c = self.conj();
        Some(CBox {
            re: c.re.mul(&inv_n),
            im: c.im.mul(&inv_n),
        })
    }

    pub fn intersect(&self, o: &Self) -> Option<Self> {
        Some(CBox {
            re: self.re.intersect(&o.re)?,
            im: self.im.intersect(&o.im)?,
        })
    }

    /// True when self lies strictly inside o.
    pub fn strictly_inside(&self, o: &Self) -> bool {
        o.re.lo < self.re.lo && self.re.hi < o.re.hi && o.im.lo < self.im.lo && self.im.hi < o.im.hi
    }

    pub fn disjoint(&self, o: &Self) -> bool {
        self.re.hi < o.re.lo || o.re.hi < self.re.lo || self.im.hi < o.im.lo || o.im.hi < self.im.lo
    }

    pub fn mid_f64(&self) -> Complex64 {
        Complex64::new(rational_to_f64(&self.re.mid()), rational_to_f64(&self.im.mid()))
    }
}

/// Horner evaluation of a ℚ(i)-polynomial over a complex box.
pub fn eval_upoly_box(p: &UPoly<GaussianRational>, b: &CBox) -> CBox {
    let mut acc = CBox::point(&GaussianRational::zero());
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(b).add(&CBox::point(c));
    }
    acc
}

/// Round an interval outward to endpoints with denominator 2^bits. Keeps the
/// rational sizes bounded through iterated interval arithmetic.
pub fn round_out(iv: &RatInterval, bits: u32) -> RatInterval {
    let scale = BigInt::one() << bits;
    let lo = (&iv.lo * BigRational::from_integer(scale.clone())).floor();
    let hi = (&iv.hi * BigRational::from_integer(scale.clone())).ceil();
    RatInterval {
        lo: lo / BigRational::from_integer(scale.clone()),
        hi: hi / BigRational::from_integer(scale),
    }
}

pub fn round_out_box(b: &CBox, bits: u32) -> CBox {
    CBox {
        re: round_out(&b.re, bits),
        im: round_out(&b.im, bits),
    }
}

/// Bits so that 2^−bits is comfortably below the interval width.
fn bits_for_width(w: &BigRational) -> u32 {
    if w.is_zero() {
        return 128;
    }
    // ceil(log2(1/w)) from numerator/denominator bit lengths
    let num_bits = w.numer().bits() as i64;
    let den_bits = w.denom().bits() as i64;
    let log2 = den_bits - num_bits; // approximate −log2(w)
    (log2.max(0) as u32).saturating_add(24).min(4096)
}

/// Certified enclosure of √r for a nonnegative rational, to within 2^−bits.
pub fn rat_sqrt_bounds(r: &BigRational, bits: u32) -> RatInterval {
    assert!(!r.is_negative(), "sqrt of a negative rational");
    if r.is_zero() {
        return RatInterval::zero();
    }
    // √(n/d) = √(n·d)/d; scale by 4^bits for precision
    let n = r.numer();
    let d = r.denom();
    let scale = BigInt::one() << (2 * bits);
    let scaled = n * d * &scale;
    let root = scaled.sqrt();
    let den = d * (BigInt::one() << bits);
    RatInterval {
        lo: BigRational::new(root.clone(), den.clone()),
        hi: BigRational::new(root + BigInt::one(), den),
    }
}

/// Certified enclosure of the interval image under √, for lo ≥ 0.
pub fn sqrt_interval(iv: &RatInterval, bits: u32) -> RatInterval {
    let lo_b = rat_sqrt_bounds(&iv.lo, bits);
    let hi_b = rat_sqrt_bounds(&iv.hi, bits);
    RatInterval {
        lo: lo_b.lo,
        hi: hi_b.hi,
    }
}

/// Certified enclosure of a square root of the exact Gaussian rational w
/// (the root with nonnegative real part; for w ∈ ℝ₋ the one with
/// nonnegative imaginary part).
pub fn sqrt_box(w: &GaussianRational, bits: u32) -> CBox {
    if w.is_zero() {
        return CBox::point(&GaussianRational::zero());
    }
    if w.im.is_zero() {
        let sq = rat_sqrt_bounds(&w.re.abs(), bits);
        return if w.re.is_positive() {
            CBox {
                re: sq,
                im: RatInterval::zero(),
            }
        } else {
            CBox {
                re: RatInterval::zero(),
                im: sq,
            }
        };
    }
    // |w| then x = √((|w|+a)/2), y = b/(2x)
    let modulus = rat_sqrt_bounds(&w.norm(), bits);
    let two = BigRational::from_integer(BigInt::from(2));
    let x_sq = RatInterval {
        lo: (&modulus.lo + &w.re) / &two,
        hi: (&modulus.hi + &w.re) / &two,
    };
    // x_sq.lo can only be ≤ 0 through rounding; clamp before the sqrt
    let x_sq = RatInterval {
        lo: x_sq.lo.max(BigRational::zero()),
        hi: x_sq.hi,
    };
    let x = sqrt_interval(&x_sq, bits);
    let denom = x.scale(&two);
    let y = match denom.recip() {
        Some(inv) => inv.scale(&w.im),
        None => {
            // fall back: y = sign(b)·√((|w|−a)/2)
            let y_sq = RatInterval {
                lo: ((&modulus.lo - &w.re) / &two).max(BigRational::zero()),
                hi: (&modulus.hi - &w.re) / &two,
            };
            let m = sqrt_interval(&y_sq, bits);
            if w.im.is_negative() {
                m.neg()
            } else {
                m
            }
        }
    };
    CBox { re: x, im: y }
}

/// Number of sign variations in a sequence of nonzero signs.
fn sign_variations(signs: &[i8]) -> usize {
    let mut count = 0;
    let mut prev = 0i8;
    for &s in signs {
        if s == 0 {
            continue;
        }
        if prev != 0 && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}

fn sign_of(r: &BigRational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

/// Sturm chain of a real polynomial given with Gaussian-rational coefficients
/// whose imaginary parts are all zero.
pub fn sturm_chain(p: &UPoly<GaussianRational>) -> Vec<UPoly<GaussianRational>> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]).expect("nonzero divisor");
        if r.is_zero() {
            return chain;
        }
        chain.push(r.neg());
    }
}

/// Count real roots of a squarefree real polynomial in the open interval
/// (a, b); endpoints must not be roots.
pub fn sturm_count(chain: &[UPoly<GaussianRational>], a: &BigRational, b: &BigRational) -> usize {
    let at = |x: &BigRational| -> Vec<i8> {
        let gx = GaussianRational::from_rational(x.clone());
        chain
            .iter()
            .map(|p| sign_of(&p.eval(&gx).re))
            .collect()
    };
    let va = sign_variations(&at(a));
    let vb = sign_variations(&at(b));
    va.saturating_sub(vb)
}

/// Interval-Newton step: N(B) = mid − p(mid)/p'(B). Returns the step result
/// when the derivative box excludes zero.
pub fn newton_step(p: &UPoly<GaussianRational>, dp: &UPoly<GaussianRational>, b: &CBox) -> Option<CBox> {
    let deriv = eval_upoly_box(dp, b);
    let inv = deriv.recip()?;
    let mid = b.mid();
    let pm = p.eval(&mid);
    let correction = CBox::point(&pm).mul(&inv);
    Some(CBox::point(&mid).sub(&correction))
}

/// Isolate all complex roots of a squarefree ℚ(i)-polynomial.
///
/// Approximate roots come from Durand–Kerner in f64; each is then enclosed in
/// a box certified by interval-Newton contraction (N(B) strictly inside B
/// proves existence and uniqueness of a root in B). Boxes are pairwise
/// disjoint and their count equals the degree, so the isolation is complete.
pub fn isolate_roots(p: &UPoly<GaussianRational>) -> Result<Vec<CBox>, String> {
    let deg = match p.degree() {
        None | Some(0) => return Ok(Vec::new()),
        Some(d) => d,
    };
    let approx = durand_kerner(p).ok_or("numeric root finding failed to converge")?;
    let dp = p.derivative();
    let mut boxes: Vec<CBox> = Vec::with_capacity(deg);
    for (i, &z) in approx.iter().enumerate() {
        // initial radius: a fraction of the distance to the nearest other root
        let mut nearest = f64::MAX;
        for (j, &w) in approx.iter().enumerate() {
            if i != j {
                nearest = nearest.min((z - w).norm());
            }
        }
        let base = if nearest.is_finite() && nearest > 0.0 {
            nearest / 8.0
        } else {
            1e-3
        };
        let mut radius = base.max(1e-12);
        let mut certified = None;
        'tries: for _ in 0..40 {
            let b = round_out_box(&CBox::from_f64(z, radius), 64);
            if let Some(n) = newton_step(p, &dp, &b) {
                if n.strictly_inside(&b) {
                    // contract a few more times for a tight box, rounding
                    // outward each step to keep the rationals small
                    let mut cur = match n.intersect(&b) {
                        Some(clipped) => clipped,
                        None => n,
                    };
                    cur = round_out_box(&cur, bits_for_width(&cur.width())).intersect(&b).unwrap_or(cur);
                    for _ in 0..6 {
                        match newton_step(p, &dp, &cur) {
                            Some(next) => {
                                let rounded =
                                    round_out_box(&next, bits_for_width(&next.width()));
                                match rounded.intersect(&cur) {
                                    Some(clipped) => cur = clipped,
                                    None => break,
                                }
                            }
                            None => break,
                        }
                    }
                    certified = Some(cur);
                    break 'tries;
                }
            }
            radius *= 0.5;
            if radius < 1e-15 {
                // widen instead: the f64 seed may sit between tight clusters
                radius = base * 4.0;
            }
        }
        match certified {
            Some(b) => boxes.push(b),
            None => return Err(format!("could not certify a box around root ≈ {}", z)),
        }
    }
    for i in 0..boxes.len() {
        for j in (i + 1)..boxes.len() {
            if !boxes[i].disjoint(&boxes[j]) {
                return Err("certified boxes overlap; roots too close for f64 seeding".into());
            }
        }
    }
    if boxes.len() != deg {
        return Err("root count does not match the degree".into());
    }
    Ok(boxes)
}

/// Refine a certified root box below the requested width by repeated
/// interval-Newton steps (with bisection of the box as a fallback).
pub fn refine_box(
    p: &UPoly<GaussianRational>,
    b: &CBox,
    target_width: &BigRational,
) -> CBox {
    let dp = p.derivative();
    let target_bits = bits_for_width(target_width).saturating_add(8);
    let mut cur = b.clone();
    for _ in 0..256 {
        if &cur.width() < target_width {
            break;
        }
        let round_bits = bits_for_width(&cur.width()).min(target_bits);
        if let Some(next) = newton_step(p, &dp, &cur) {
            let rounded = round_out_box(&next, round_bits);
            if let Some(clipped) = rounded.intersect(&cur) {
                if clipped.width() < cur.width() {
                    cur = clipped;
                    continue;
                }
                cur = clipped;
            }
        }
        // fallback: quadrisect and keep the quadrant still certified by Newton
        let quads = quadrisect(&cur);
        let mut kept = None;
        for q in quads {
            let q = round_out_box(&q, round_bits).intersect(&q).unwrap_or(q.clone());
            if let Some(n) = newton_step(p, &dp, &q) {
                if n.intersect(&q).is_some() && n.strictly_inside(&q) {
                    kept = Some(q);
                    break;
                }
            }
        }
        match kept {
            Some(q) => cur = q,
            None => break,
        }
    }
    cur
}

fn quadrisect(b: &CBox) -> Vec<CBox> {
    let rm = b.re.mid();
    let im = b.im.mid();
    let mut out = Vec::with_capacity(4);
    for (rlo, rhi) in [(b.re.lo.clone(), rm.clone()), (rm.clone(), b.re.hi.clone())] {
        for (ilo, ihi) in [(b.im.lo.clone(), im.clone()), (im.clone(), b.im.hi.clone())] {
            out.push(CBox {
                re: RatInterval::new(rlo.clone(), rhi.clone()),
                im: RatInterval::new(ilo, ihi),
            });
        }
    }
    out
}

/// Durand–Kerner simultaneous iteration in f64.
fn durand_kerner(p: &UPoly<GaussianRational>) -> Option<Vec<Complex64>> {
    complex_roots_f64(&p.coeffs().iter().map(|c| c.to_complex64()).collect::<Vec<_>>())
}

/// Numeric roots of a polynomial given by ascending f64 coefficients.
pub fn complex_roots_f64(raw: &[Complex64]) -> Option<Vec<Complex64>> {
    let deg = raw.len().checked_sub(1)?;
    if deg == 0 {
        return Some(Vec::new());
    }
    let lead = *raw.last()?;
    if lead.norm() == 0.0 {
        return None;
    }
    let coeffs: Vec<Complex64> = raw.iter().map(|c| c / lead).collect();
    let eval = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    let mut roots: Vec<Complex64> = (0..deg)
        .map(|k| Complex64::new(0.4, 0.9).powu(k as u32 + 1))
        .collect();
    for _ in 0..600 {
        let mut moved: f64 = 0.0;
        for i in 0..deg {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..deg {
                if i != j {
                    denom *= roots[i] - roots[j];
                }
            }
            if denom.norm() == 0.0 {
                roots[i] += Complex64::new(1e-8, 2e-8);
                continue;
            }
            let delta = eval(roots[i]) / denom;
            roots[i] -= delta;
            moved = moved.max(delta.norm());
        }
        if moved < 1e-14 {
            return Some(roots);
        }
    }
    // accept slow convergence if the residuals are still small
    if roots.iter().all(|&z| eval(z).norm() < 1e-9) {
        Some(roots)
    } else {
        None
    }
}

/// Best rational approximation within tol by continued fractions, with a
/// denominator cap to keep snapped values honest.
pub fn snap_to_rational(x: f64, tol: f64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    let max_den: i64 = 1_000_000_000;
    let (mut p0, mut q0, mut p1, mut q1) = (1i64, 0i64, x.floor() as i64, 1i64);
    let mut frac = x - x.floor();
    for _ in 0..40 {
        let approx = p1 as f64 / q1 as f64;
        if (approx - x).abs() < tol {
            return Some(BigRational::new(BigInt::from(p1), BigInt::from(q1)));
        }
        if frac.abs() < 1e-18 {
            break;
        }
        let r = 1.0 / frac;
        let a = r.floor();
        frac = r - a;
        let a = a as i64;
        let p2 = a.checked_mul(p1)?.checked_add(p0)?;
        let q2 = a.checked_mul(q1)?.checked_add(q0)?;
        if q2 > max_den {
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    let approx = p1 as f64 / q1 as f64;
    if (approx - x).abs() < tol {
        Some(BigRational::new(BigInt::from(p1), BigInt::from(q1)))
    } else {
        None
    }
}

/// Lower bound on the minimal distance between distinct roots of a
/// squarefree real integer polynomial (Mignotte):
/// sep(P) > √(3·|disc(P)|) / (n^{(n+2)/2} · ‖P‖₂^{n−1}).
pub fn separation_lower_bound(p: &UPoly<GaussianRational>) -> Option<BigRational> {
    let n = p.degree()?;
    if n < 2 {
        return Some(BigRational::one());
    }
    // clear denominators to integer coefficients
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        assert!(c.im.is_zero(), "separation bound expects a real polynomial");
        lcm = num_integer::lcm(lcm, c.re.denom().clone());
    }
    let scaled = p.mul_scalar(&GaussianRational::from_rational(BigRational::from_integer(lcm)));
    let dp = scaled.derivative();
    let res = scaled.resultant(&dp);
    let lc = scaled.leading().unwrap();
    let disc = res.div_ref(lc).ok()?;
    let disc_abs = disc.re.abs();
    if disc_abs.is_zero() {
        return None; // not squarefree
    }
    // numerator lower bound: √(3·|disc|) from below
    let num = rat_sqrt_bounds(&(BigRational::from_integer(BigInt::from(3)) * disc_abs), 16).lo;
    // denominator upper bound: n^{(n+2)/2} · ‖P‖₂^{n−1} from above
    let n_big = BigRational::from_integer(BigInt::from(n as i64));
    let half_exp = (n + 2) / 2;
    let mut n_pow = BigRational::one();
    for _ in 0..half_exp {
        n_pow *= &n_big;
    }
    if (n + 2) % 2 == 1 {
        n_pow *= rat_sqrt_bounds(&n_big, 8).hi;
    }
    let norm_sq: BigRational = scaled
        .coeffs()
        .iter()
        .map(|c| &c.re * &c.re)
        .fold(BigRational::zero(), |a, b| a + b);
    let norm_up = rat_sqrt_bounds(&norm_sq, 8).hi;
    let mut norm_pow = BigRational::one();
    for _ in 0..(n - 1) {
        norm_pow *= &norm_up;
    }
    let den = n_pow * norm_pow;
    if den.is_zero() || num.is_zero() {
        return None;
    }
    Some(num / den)
}
