//! Holonomy germs realized as time-1 flows of explicit one-variable vector
//! fields, their iterated orbits, and orbit-dynamics classification.
//!
//! The strong-separatrix holonomy of the saddle-node normal form is the
//! time-1 flow of v' = 2πi·v^{k+1}/(1+μvᵏ). The resonant holonomy composes
//! the prefactor ξ = e^{−2πi·p/q} with the time-1 flow of
//! 2πi·(p/q)·y^{qk+1}/(1+μy^{qk}), and the two are conjugated by σ(y) = y^q.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::HolonomyError;
use crate::ode::{integrate, OdeTol};
use crate::scalar::{rational_to_f64, GaussianRational, Ring};

/// The one-variable field v ↦ c·v^{m+1}/(1+μvᵐ) with c = 2πi·ρ.
#[derive(Clone, Debug, PartialEq)]
pub struct HolonomyVectorField {
    /// Rational multiple ρ of 2πi in the flow coefficient.
    pub rho: BigRational,
    pub m: u32,
    pub mu: GaussianRational,
    pub radius_of_validity: f64,
}

impl HolonomyVectorField {
    pub fn new(rho: BigRational, m: u32, mu: GaussianRational) -> Result<Self, HolonomyError> {
        if m < 1 {
            return Err(HolonomyError::BadParameters("m must be at least 1".into()));
        }
        let radius = default_radius(m, &mu);
        Ok(HolonomyVectorField {
            rho,
            m,
            mu,
            radius_of_validity: radius,
        })
    }

    /// Distance from the origin to the nearest pole of the denominator.
    pub fn pole_distance(&self) -> f64 {
        pole_distance(self.m, &self.mu)
    }

    pub fn eval(&self, v: Complex64) -> Complex64 {
        let c = Complex64::new(0.0, std::f64::consts::TAU * rational_to_f64(&self.rho));
        let vm = v.powu(self.m);
        c * vm * v / (Complex64::new(1.0, 0.0) + self.mu.to_complex64() * vm)
    }
}

fn pole_distance(m: u32, mu: &GaussianRational) -> f64 {
    if mu.is_zero() {
        f64::INFINITY
    } else {
        let abs_mu = mu.to_complex64().norm();
        (1.0 / abs_mu).powf(1.0 / m as f64)
    }
}

/// min(0.1, pole distance / 2): keeps 1+μvᵐ away from 0 and iterates inside
/// the germ's neighborhood.
fn default_radius(m: u32, mu: &GaussianRational) -> f64 {
    (pole_distance(m, mu) / 2.0).min(0.1)
}

/// An exact root of unity e^{−2πi·p/q} used as the linear prefactor.
#[derive(Clone, Debug, PartialEq)]
pub struct Prefactor {
    pub p: u64,
    pub q: u64,
}

impl Prefactor {
    pub fn one() -> Self {
        Prefactor { p: 0, q: 1 }
    }

    pub fn value(&self) -> Complex64 {
        let angle = -std::f64::consts::TAU * (self.p as f64) / (self.q as f64);
        Complex64::new(angle.cos(), angle.sin())
    }

    pub fn inverse_value(&self) -> Complex64 {
        let angle = std::f64::consts::TAU * (self.p as f64) / (self.q as f64);
        Complex64::new(angle.cos(), angle.sin())
    }

    pub fn is_one(&self) -> bool {
        self.p.is_multiple_of(self.q)
    }
}

/// A one-variable germ: prefactor composed with the time-1 flow of the field.
#[derive(Clone, Debug, PartialEq)]
pub struct HolonomyMap {
    pub field: HolonomyVectorField,
    pub prefactor: Prefactor,
    pub tol: OdeTol,
}

impl HolonomyMap {
    /// ξ · (time-1 flow of the field applied to v). Fixes 0 and has
    /// derivative ξ there.
    pub fn eval(&self, v: Complex64) -> Result<Complex64, HolonomyError> {
        self.flow(v, 1.0).map(|w| w * self.prefactor.value())
    }

    pub fn eval_inverse(&self, v: Complex64) -> Result<Complex64, HolonomyError> {
        self.flow(v * self.prefactor.inverse_value(), -1.0)
    }

    /// Time-t flow of the field (no prefactor).
    pub fn flow(&self, v: Complex64, t: f64) -> Result<Complex64, HolonomyError> {
        let r = self.field.radius_of_validity;
        if v.norm() > r * (1.0 + 1e-12) {
            return Err(HolonomyError::OutsideRadius {
                value: v.norm(),
                radius: r,
            });
        }
        if v.norm() == 0.0 {
            return Ok(v);
        }
        let field = self.field.clone();
        let f = move |y: [Complex64; 1]| [field.eval(y[0])];
        let guard_radius = if self.field.pole_distance().is_finite() {
            self.field.pole_distance() * 0.75
        } else {
            r * 10.0
        };
        let guard = move |y: &[Complex64; 1]| y[0].norm() < guard_radius;
        let out = integrate(&f, [v], t, self.tol, Some(&guard))?;
        Ok(out[0])
    }

    /// Numeric derivative at 0 via small-|v| ratio extrapolation; matches the
    /// prefactor for these tangent-to-identity flows.
    pub fn derivative_at_zero(&self) -> Result<Complex64, HolonomyError> {
        // tighten the absolute tolerance: the iterates are ~1e-6 in size
        let mut tight = self.clone();
        tight.tol = OdeTol {
            rtol: 1e-12,
            atol: 1e-20,
        };
        let h1 = 1e-5;
        let h2 = 1e-6;
        let d1 = tight.eval(Complex64::new(h1, 0.0))? / h1;
        let d2 = tight.eval(Complex64::new(h2, 0.0))? / h2;
        // Richardson step: the error is O(h^m), leading term cancels
        let pow = 10f64.powi(self.field.m as i32);
        Ok((d2 * pow - d1) / (pow - 1.0))
    }

    pub fn radius(&self) -> f64 {
        self.field.radius_of_validity
    }
}

/// Strong-separatrix holonomy of the saddle-node normal form:
/// the time-1 flow of 2πi·v^{k+1}/(1+μvᵏ).
pub fn saddle_node_strong_holonomy(
    k: u32,
    mu: GaussianRational,
) -> Result<HolonomyMap, HolonomyError> {
    if k < 1 {
        return Err(HolonomyError::BadParameters("k must be at least 1".into()));
    }
    Ok(HolonomyMap {
        field: HolonomyVectorField::new(BigRational::from_integer(BigInt::from(1)), k, mu)?,
        prefactor: Prefactor::one(),
        tol: OdeTol::default(),
    })
}

/// Holonomy of the resonant normal form with multiplier −p/q:
/// ξ = e^{−2πi·p/q} composed with the time-1 flow of
/// 2πi·(p/q)·y^{qk+1}/(1+μ·y^{qk}).
pub fn resonant_holonomy(
    p: u64,
    q: u64,
    k: u32,
    mu: GaussianRational,
) -> Result<HolonomyMap, HolonomyError> {
    if p == 0 || q == 0 {
        return Err(HolonomyError::BadParameters(
            "p and q must be positive".into(),
        ));
    }
    if gcd_u64(p, q) != 1 {
        return Err(HolonomyError::BadParameters("p, q must be coprime".into()));
    }
    if k < 1 {
        return Err(HolonomyError::BadParameters("k must be at least 1".into()));
    }
    let rho = BigRational::new(BigInt::from(p), BigInt::from(q));
    let m = q as u32 * k;
    Ok(HolonomyMap {
        field: HolonomyVectorField::new(rho, m, mu)?,
        prefactor: Prefactor { p, q },
        tol: OdeTol::default(),
    })
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

/// Linear coefficient e^{2πiμ} of the weak-separatrix holonomy, with exact
/// root-of-unity recognition when μ is rational.
#[derive(Clone, Debug, PartialEq)]
pub struct WeakLinearCoefficient {
    pub value: Complex64,
    /// (a, b) with the coefficient equal to e^{2πi·a/b} exactly, when μ ∈ ℚ.
    pub exact_root_of_unity: Option<(BigInt, BigInt)>,
}

pub fn weak_holonomy_linear_coefficient(mu: &GaussianRational) -> WeakLinearCoefficient {
    // e^{2πi(a+bi)} = e^{−2πb}·(cos 2πa + i sin 2πa)
    let a = rational_to_f64(&mu.re);
    let b = rational_to_f64(&mu.im);
    let modulus = (-std::f64::consts::TAU * b).exp();
    let angle = std::f64::consts::TAU * a;
    let value = Complex64::new(modulus * angle.cos(), modulus * angle.sin());
    let exact = if mu.im.is_zero() {
        // reduce a mod 1 to a canonical representative in [0, 1)
        let frac = &mu.re - mu.re.floor();
        Some((frac.numer().clone(), frac.denom().clone()))
    } else {
        None
    };
    WeakLinearCoefficient {
        value,
        exact_root_of_unity: exact,
    }
}

/// Residual of the conjugacy σ∘H = H_k^{∘p}∘σ with σ(y) = y^q, evaluated at
/// the sample points; both sides are computed independently by the
/// integrator.
pub fn conjugacy_check(
    p: u64,
    q: u64,
    k: u32,
    mu: GaussianRational,
    samples: &[Complex64],
) -> Result<f64, HolonomyError> {
    let h = resonant_holonomy(p, q, k, mu.clone())?;
    let hk = saddle_node_strong_holonomy(k, mu)?;
    let mut max_residual: f64 = 0.0;
    for &y in samples {
        let lhs = h.eval(y)?.powu(q as u32);
        let mut rhs = y.powu(q as u32);
        for _ in 0..p {
            rhs = hk.eval(rhs)?;
        }
        max_residual = max_residual.max((lhs - rhs).norm());
    }
    Ok(max_residual)
}

/// Anything that can be iterated as a germ fixing 0.
pub trait GermMap {
    fn eval(&self, v: Complex64) -> Result<Complex64, HolonomyError>;
    fn eval_inverse(&self, v: Complex64) -> Result<Complex64, HolonomyError>;
    fn radius(&self) -> f64;
    /// Fatou data (m, δ) when w = v^{−m} drifts by δ per iterate near 0.
    fn fatou_data(&self) -> Option<(u32, Complex64)>;
}

impl GermMap for HolonomyMap {
    fn eval(&self, v: Complex64) -> Result<Complex64, HolonomyError> {
        HolonomyMap::eval(self, v)
    }

    fn eval_inverse(&self, v: Complex64) -> Result<Complex64, HolonomyError> {
        HolonomyMap::eval_inverse(self, v)
    }

    fn radius(&self) -> f64 {
        self.field.radius_of_validity
    }

    fn fatou_data(&self) -> Option<(u32, Complex64)> {
        if !self.prefactor.is_one() {
            return None;
        }
        // v' = c·v^{m+1}(1+O(vᵐ)) drifts v^{−m} by −m·c per unit time
        let c = Complex64::new(0.0, std::f64::consts::TAU * rational_to_f64(&self.field.rho));
        Some((self.field.m, -c * self.field.m as f64))
    }
}

/// A rigid linear germ v ↦ λ·v, useful as a dynamics reference.
#[derive(Clone, Debug)]
pub struct LinearGerm {
    pub factor: Complex64,
    pub radius: f64,
}

impl GermMap for LinearGerm {
    fn eval(&self, v: Complex64) -> Result<Complex64, HolonomyError> {
        Ok(self.factor * v)
    }

    fn eval_inverse(&self, v: Complex64) -> Result<Complex64, HolonomyError> {
        Ok(v / self.factor)
    }

    fn radius(&self) -> f64 {
        self.radius
    }

    fn fatou_data(&self) -> Option<(u32, Complex64)> {
        None
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DynamicClass {
    Flower,
    Rotation,
    Focus,
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct OrbitDiagnostics {
    /// max |v|/min |v| − 1 over the window used for the rotation test.
    pub modulus_drift: f64,
    /// Total winding of the forward orbit, in radians.
    pub winding: f64,
    /// Worst relative residual of the linear Fatou drift (flower test).
    pub fatou_residual: f64,
}

#[derive(Clone, Debug)]
pub struct Orbit {
    pub seed: Complex64,
    pub forward: Vec<Complex64>,
    pub backward: Vec<Complex64>,
    pub class: DynamicClass,
    pub truncated: bool,
    pub diagnostics: OrbitDiagnostics,
}

/// Iterate forward and backward and classify the dynamics.
///
/// Flower: |vₙ| → 0 eventually monotonically while v^{−m} drifts linearly
/// (residual < 10% of |n·δ| for n ≥ 20). Rotation: relative modulus drift
/// < 1e−4 over one estimated revolution. Focus: strictly monotone modulus
/// with unbounded winding.
pub fn orbit_classify(
    map: &dyn GermMap,
    seed: Complex64,
    max_iters: usize,
) -> Result<Orbit, HolonomyError> {
    let r = map.radius();
    if seed.norm() > r {
        return Err(HolonomyError::OutsideRadius {
            value: seed.norm(),
            radius: r,
        });
    }
    let mut truncated = false;
    let mut forward = Vec::with_capacity(max_iters);
    let mut v = seed;
    for _ in 0..max_iters {
        match map.eval(v) {
            Ok(next) => {
                if next.norm() > r {
                    truncated = true;
                    break;
                }
                forward.push(next);
                v = next;
                if v.norm() < 1e-14 {
                    break;
                }
            }
            Err(HolonomyError::OutsideRadius { .. }) => {
                truncated = true;
                break;
            }
            Err(e) => return Err(e),
        }
    }
    let mut backward = Vec::with_capacity(max_iters / 4);
    let mut w = seed;
    for _ in 0..(max_iters / 4).max(8) {
        match map.eval_inverse(w) {
            Ok(prev) => {
                if prev.norm() > r {
                    truncated = true;
                    break;
                }
                backward.push(prev);
                w = prev;
                if w.norm() < 1e-14 {
                    break;
                }
            }
            Err(HolonomyError::OutsideRadius { .. }) => {
                truncated = true;
                break;
            }
            Err(_) => break,
        }
    }

    let winding = total_winding(seed, &forward);
    let (class, modulus_drift, fatou_residual) =
        classify_points(map, seed, &forward, winding);
    Ok(Orbit {
        seed,
        forward,
        backward,
        class,
        truncated,
        diagnostics: OrbitDiagnostics {
            modulus_drift,
            winding,
            fatou_residual,
        },
    })
}

fn total_winding(seed: Complex64, pts: &[Complex64]) -> f64 {
    let mut prev = seed;
    let mut total = 0.0;
    for &p in pts {
        if prev.norm() > 0.0 && p.norm() > 0.0 {
            total += (p / prev).arg();
        }
        prev = p;
    }
    total
}

fn classify_points(
    map: &dyn GermMap,
    seed: Complex64,
    forward: &[Complex64],
    winding: f64,
) -> (DynamicClass, f64, f64) {
    let mut modulus_drift = f64::NAN;
    let mut fatou_residual = f64::NAN;
    if forward.len() < 8 {
        return (DynamicClass::Inconclusive, modulus_drift, fatou_residual);
    }

    // flower: linear drift of v^{−m}, and eventually decreasing modulus
    if let Some((m, delta)) = map.fatou_data() {
        let w0 = seed.powi(-(m as i32));
        let mut worst: f64 = 0.0;
        let mut applicable = false;
        for (idx, &v) in forward.iter().enumerate() {
            let n = (idx + 1) as f64;
            if (idx + 1) < 20 {
                continue;
            }
            applicable = true;
            let w = v.powi(-(m as i32));
            let residual = (w - w0 - delta * n).norm() / (delta.norm() * n);
            worst = worst.max(residual);
        }
        fatou_residual = worst;
        let tail = &forward[forward.len() / 4..];
        let eventually_decreasing = tail
            .windows(2)
            .all(|p| p[1].norm() <= p[0].norm() * (1.0 + 1e-9));
        if applicable && worst < 0.10 && eventually_decreasing {
            return (DynamicClass::Flower, modulus_drift, fatou_residual);
        }
    }

    // rotation: thin annulus over one estimated revolution
    let mut angle_steps = Vec::new();
    let mut prev = seed;
    for &p in forward {
        angle_steps.push((p / prev).arg());
        prev = p;
    }
    let mean_step: f64 = angle_steps.iter().sum::<f64>() / angle_steps.len() as f64;
    if mean_step.abs() > 1e-9 {
        let n_rev = (std::f64::consts::TAU / mean_step.abs()).ceil() as usize;
        if forward.len() >= n_rev && n_rev >= 1 {
            let window = &forward[..n_rev.min(forward.len())];
            let max_m = window.iter().map(|p| p.norm()).fold(0.0f64, f64::max);
            let min_m = window.iter().map(|p| p.norm()).fold(f64::MAX, f64::min);
            modulus_drift = max_m / min_m - 1.0;
            if modulus_drift < 1e-4 {
                return (DynamicClass::Rotation, modulus_drift, fatou_residual);
            }
        }
    }

    // focus: strictly monotone modulus with unbounded winding
    let monotone_dec = forward
        .windows(2)
        .all(|p| p[1].norm() < p[0].norm() * (1.0 - 1e-12));
    let monotone_inc = forward
        .windows(2)
        .all(|p| p[1].norm() > p[0].norm() * (1.0 + 1e-12));
    if (monotone_dec || monotone_inc) && winding.abs() > 2.0 * std::f64::consts::TAU {
        return (DynamicClass::Focus, modulus_drift, fatou_residual);
    }

    (DynamicClass::Inconclusive, modulus_drift, fatou_residual)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational as Q;

    fn closed_form_k1_mu0(v: Complex64) -> Complex64 {
        // time-1 flow of v' = 2πi v² is v ↦ v/(1 − 2πi v)
        let tau = Complex64::new(0.0, std::f64::consts::TAU);
        v / (Complex64::new(1.0, 0.0) - tau * v)
    }

    #[test]
    fn strong_holonomy_matches_closed_form() {
        let h = saddle_node_strong_holonomy(1, Q::zero()).unwrap();
        let v = Complex64::new(0.1, 0.0);
        let got = h.eval(v).unwrap();
        let expected = closed_form_k1_mu0(v);
        assert!((got - expected).norm() < 1e-9);
        // value from the worked example
        assert!((got - Complex64::new(0.0716957, 0.0450477)).norm() < 1e-6);
        // fixed point at the origin
        assert_eq!(h.eval(Complex64::new(0.0, 0.0)).unwrap(), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn outside_radius_is_refused() {
        let h = saddle_node_strong_holonomy(1, Q::zero()).unwrap();
        assert!(matches!(
            h.eval(Complex64::new(0.2, 0.0)),
            Err(HolonomyError::OutsideRadius { .. })
        ));
    }

    #[test]
    fn radius_respects_pole() {
        // μ = 100, k = 1: pole at |v| = 1/100, radius = 1/200
        let h = saddle_node_strong_holonomy(1, Q::from_int(100)).unwrap();
        assert!((h.field.radius_of_validity - 0.005).abs() < 1e-12);
        assert!(h.field.radius_of_validity < h.field.pole_distance() / 2.0 + 1e-15);
        // μ = 0: radius capped at 0.1
        let h0 = saddle_node_strong_holonomy(1, Q::zero()).unwrap();
        assert_eq!(h0.field.radius_of_validity, 0.1);
    }

    #[test]
    fn series_oracle_k1_mu_half() {
        // Lie-series of the time-1 flow of f(v) = 2πi v²/(1+v/2), truncated
        // at order 8, evaluated at |v| = 0.02
        let order = 9usize;
        let tau = Complex64::new(0.0, std::f64::consts::TAU);
        // f as a power series: 2πi v² Σ (−v/2)^j
        let mut f = vec![Complex64::new(0.0, 0.0); order + 1];
        for j in 0..(order - 1) {
            if 2 + j <= order {
                f[2 + j] = tau * Complex64::new(-0.5, 0.0).powu(j as u32);
            }
        }
        let mul = |a: &[Complex64], b: &[Complex64]| {
            let mut out = vec![Complex64::new(0.0, 0.0); order + 1];
            for i in 0..=order {
                for j in 0..=(order - i) {
                    out[i + j] += a[i] * b[j];
                }
            }
            out
        };
        let deriv = |a: &[Complex64]| {
            let mut out = vec![Complex64::new(0.0, 0.0); order + 1];
            for i in 1..=order {
                out[i - 1] = a[i] * i as f64;
            }
            out
        };
        // exp(D)v = Σ D^j v / j!, with D = f ∂v
        let mut term = vec![Complex64::new(0.0, 0.0); order + 1];
        term[1] = Complex64::new(1.0, 0.0); // v
        let mut series = term.clone();
        let mut factorial = 1.0;
        for j in 1..=order {
            term = mul(&f, &deriv(&term));
            factorial *= j as f64;
            for (s, t) in series.iter_mut().zip(term.iter()) {
                *s += t / factorial;
            }
        }
        let h = saddle_node_strong_holonomy(1, Q::from_ratio(1, 2)).unwrap();
        for step in 0..8 {
            let angle = std::f64::consts::TAU * step as f64 / 8.0;
            let v = Complex64::new(0.02 * angle.cos(), 0.02 * angle.sin());
            let mut expected = Complex64::new(0.0, 0.0);
            for i in (0..=order).rev() {
                expected = expected * v + series[i];
            }
            let got = h.eval(v).unwrap();
            assert!(
                (got - expected).norm() < 1e-9,
                "series oracle mismatch at {}: {} vs {}",
                v,
                got,
                expected
            );
        }
    }

    #[test]
    fn flow_group_law() {
        let h = saddle_node_strong_holonomy(2, Q::from_ratio(1, 3)).unwrap();
        let v = Complex64::new(0.05, 0.03);
        let whole = h.flow(v, 1.0).unwrap();
        let half = h.flow(v, 0.5).unwrap();
        let twice = h.flow(half, 0.5).unwrap();
        assert!((whole - twice).norm() < 1e-9);
    }

    #[test]
    fn resonant_prefactor_derivative() {
        // (p,q) = (1,2): derivative at 0 is e^{−πi} = −1
        let h = resonant_holonomy(1, 2, 1, Q::zero()).unwrap();
        let d = h.derivative_at_zero().unwrap();
        assert!((d - Complex64::new(-1.0, 0.0)).norm() < 1e-6);
        // (p,q) = (1,1): ξ = 1
        let h2 = resonant_holonomy(1, 1, 1, Q::from_ratio(1, 2)).unwrap();
        let d2 = h2.derivative_at_zero().unwrap();
        assert!((d2 - Complex64::new(1.0, 0.0)).norm() < 1e-6);
        // fixed point
        assert_eq!(
            h.eval(Complex64::new(0.0, 0.0)).unwrap(),
            Complex64::new(0.0, 0.0)
        );
        // parameter validation
        assert!(resonant_holonomy(2, 4, 1, Q::zero()).is_err());
        assert!(resonant_holonomy(0, 1, 1, Q::zero()).is_err());
    }

    #[test]
    fn weak_linear_coefficient_values() {
        let half = weak_holonomy_linear_coefficient(&Q::from_ratio(1, 2));
        assert!((half.value - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
        assert_eq!(
            half.exact_root_of_unity,
            Some((BigInt::from(1), BigInt::from(2)))
        );
        let zero = weak_holonomy_linear_coefficient(&Q::zero());
        assert!((zero.value - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        let imag = weak_holonomy_linear_coefficient(&Q::i());
        assert!((imag.value.norm() - (-std::f64::consts::TAU).exp()).abs() < 1e-12);
        assert!((imag.value.norm() - 0.00186744).abs() < 1e-7);
        assert!(imag.exact_root_of_unity.is_none());
    }

    #[test]
    fn conjugacy_residual_small() {
        let samples: Vec<Complex64> = (0..8)
            .map(|j| {
                let a = std::f64::consts::TAU * j as f64 / 8.0;
                Complex64::new(0.05 * a.cos(), 0.05 * a.sin())
            })
            .collect();
        let res = conjugacy_check(1, 2, 1, Q::zero(), &samples).unwrap();
        assert!(res < 1e-7, "residual {}", res);
        // trivial fixed point
        let res0 = conjugacy_check(1, 2, 1, Q::zero(), &[Complex64::new(0.0, 0.0)]).unwrap();
        assert_eq!(res0, 0.0);
    }

    #[test]
    fn orbit_flower_for_saddle_node() {
        let h = saddle_node_strong_holonomy(1, Q::zero()).unwrap();
        let orbit = orbit_classify(&h, Complex64::new(0.1, 0.0), 200).unwrap();
        assert_eq!(orbit.class, DynamicClass::Flower);
        // |vₙ| ≈ 1/(2πn) along the orbit
        let n = 150usize;
        let expected = 1.0 / (std::f64::consts::TAU * n as f64);
        let got = orbit.forward[n - 1].norm();
        assert!((got - expected).abs() / expected < 0.05);
    }

    #[test]
    fn orbit_rotation_for_irrational_rotation() {
        let theta = std::f64::consts::SQRT_2 - 1.0;
        let g = LinearGerm {
            factor: Complex64::from_polar(1.0, std::f64::consts::TAU * theta),
            radius: 1.0,
        };
        let orbit = orbit_classify(&g, Complex64::new(0.1, 0.0), 64).unwrap();
        assert_eq!(orbit.class, DynamicClass::Rotation);
    }

    #[test]
    fn orbit_focus_for_contracting_spiral() {
        let g = LinearGerm {
            factor: Complex64::from_polar(0.95, 1.0),
            radius: 1.0,
        };
        let orbit = orbit_classify(&g, Complex64::new(0.1, 0.0), 64).unwrap();
        assert_eq!(orbit.class, DynamicClass::Focus);
    }

    #[test]
    fn petal_count_matches_2k() {
        for k in [1u32, 2] {
            let h = saddle_node_strong_holonomy(k, Q::zero()).unwrap();
            let mut attracting = Vec::new();
            let mut repelling = Vec::new();
            for j in 0..8 {
                let a = std::f64::consts::TAU * (j as f64 + 0.3) / 8.0;
                let seed = Complex64::from_polar(0.06, a);
                let orbit = orbit_classify(&h, seed, 400).unwrap();
                if let Some(last) = orbit.forward.last() {
                    if last.norm() < seed.norm() {
                        attracting.push(last.arg());
                    }
                }
                if let Some(last) = orbit.backward.last() {
                    if last.norm() < seed.norm() {
                        repelling.push(last.arg());
                    }
                }
            }
            let clusters = |angles: &mut Vec<f64>| -> usize {
                angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
                let mut count = 0;
                let mut prev: Option<f64> = None;
                for &a in angles.iter() {
                    match prev {
                        Some(p) if (a - p).abs() < 0.5 => {}
                        _ => count += 1,
                    }
                    prev = Some(a);
                }
                // wraparound merge
                if angles.len() > 1 {
                    let first = angles[0];
                    let last = angles[angles.len() - 1];
                    if (first + std::f64::consts::TAU - last).abs() < 0.5 && count > 1 {
                        count -= 1;
                    }
                }
                count
            };
            let ka = clusters(&mut attracting);
            let kr = clusters(&mut repelling);
            assert_eq!(
                ka + kr,
                2 * k as usize,
                "petal count for k={}: {}+{}",
                k,
                ka,
                kr
            );
        }
    }
}
