//! Closed meromorphic 1-forms: logarithmic combinations Σ λᵢ·dfᵢ/fᵢ, an
//! optional exact part d(h/Πfᵢ^{mᵢ−1}), their closedness certificates, the
//! magnitude first integral Π|fᵢ|^{λᵢ} for real residues, and residue
//! extraction back from the single-fraction representation.

use num_complex::Complex64;
use num_traits::Zero;

use crate::algebraic::{sturm_chain, sturm_count, RatInterval};
use crate::error::{AlgebraError, LogFormError, RolleError};
use crate::forms::{eval_poly2_complex, HoloOneForm, MeroOneForm};
use crate::nf::extended_gcd;
use crate::poly::{Poly, Poly2};
use crate::rolle::FirstIntegral;
use crate::scalar::{rational_to_f64, Coeff, GaussianRational, Ring};
use crate::upoly::UPoly;

/// A real algebraic number: a real-coefficient annihilator together with a
/// certified isolating interval (exactly one real root inside).
#[derive(Clone, Debug, PartialEq)]
pub struct RealAlgebraic {
    pub min_poly: UPoly<GaussianRational>,
    pub interval: RatInterval,
}

impl RealAlgebraic {
    pub fn new(
        min_poly: UPoly<GaussianRational>,
        interval: RatInterval,
    ) -> Result<Self, LogFormError> {
        if min_poly.coeffs().iter().any(|c| !c.im.is_zero()) {
            return Err(LogFormError::NonRealResidue(min_poly.to_string()));
        }
        let sf = min_poly.squarefree_part();
        let chain = sturm_chain(&sf);
        if sturm_count(&chain, &interval.lo, &interval.hi) != 1 {
            return Err(LogFormError::Algebra(AlgebraError::Unsupported(
                "interval does not isolate exactly one real root".into(),
            )));
        }
        Ok(RealAlgebraic { min_poly, interval })
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.interval.mid())
    }
}

/// Residue value: exact in ℚ(i), or real algebraic with a certified interval.
#[derive(Clone, Debug, PartialEq)]
pub enum Residue {
    Exact(GaussianRational),
    RealAlgebraic(RealAlgebraic),
}

impl Residue {
    pub fn is_real(&self) -> bool {
        match self {
            Residue::Exact(c) => c.is_real(),
            Residue::RealAlgebraic(_) => true,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Residue::Exact(c) => rational_to_f64(&c.re),
            Residue::RealAlgebraic(a) => a.to_f64(),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Residue::Exact(c) => c.to_string(),
            Residue::RealAlgebraic(a) => {
                format!("root({}; in [{}, {}])", a.min_poly, a.interval.lo, a.interval.hi)
            }
        }
    }
}

/// One pole component: an (assumed irreducible) factor, its residue, and the
/// pole order.
#[derive(Clone, Debug)]
pub struct PoleFactor {
    pub poly: Poly2<GaussianRational>,
    pub residue: Residue,
    pub order: u32,
}

/// Structured closed meromorphic 1-form
/// Σ λᵢ·dfᵢ/fᵢ + d(h / Πfᵢ^{mᵢ−1}).
#[derive(Clone, Debug)]
pub struct ClosedMeroForm {
    pub poles: Vec<PoleFactor>,
    pub exact_part: Option<Poly2<GaussianRational>>,
}

impl ClosedMeroForm {
    /// Logarithmic means simple poles and no exact part.
    pub fn is_logarithmic(&self) -> bool {
        self.exact_part.is_none() && self.poles.iter().all(|p| p.order == 1)
    }

    /// The single-fraction representation; requires exact residues.
    pub fn to_single_fraction(&self) -> Result<MeroOneForm, LogFormError> {
        let mut exact_residues = Vec::with_capacity(self.poles.len());
        for p in &self.poles {
            match &p.residue {
                Residue::Exact(c) => exact_residues.push(c.clone()),
                Residue::RealAlgebraic(_) => {
                    return Err(LogFormError::Algebra(AlgebraError::Unsupported(
                        "single-fraction form needs residues in the base field".into(),
                    )))
                }
            }
        }
        // denominator exponents: eᵢ = max(1, 2mᵢ−2)
        let one = Poly2::constant(GaussianRational::one());
        let mut den = one.clone();
        for p in &self.poles {
            let e = (2 * p.order).saturating_sub(2).max(1);
            den = den.mul(&p.poly.pow(e));
        }
        let mut num_a = Poly2::zero();
        let mut num_b = Poly2::zero();
        // logarithmic part: λᵢ·(den/fᵢ)·dfᵢ
        for (p, lam) in self.poles.iter().zip(&exact_residues) {
            let cofactor = den.div_exact(&p.poly).expect("fᵢ divides the denominator");
            let scaled = cofactor.mul_scalar(lam);
            num_a = num_a.add(&scaled.mul(&p.poly.partial(0)));
            num_b = num_b.add(&scaled.mul(&p.poly.partial(1)));
        }
        // exact part: d(h/E) = (E·dh − h·dE)/E², folded over den
        if let Some(h) = &self.exact_part {
            let mut e_poly = one.clone();
            for p in &self.poles {
                e_poly = e_poly.mul(&p.poly.pow(p.order.saturating_sub(1)));
            }
            let e_sq = e_poly.mul(&e_poly);
            let scale = den
                .div_exact(&e_sq)
                .expect("denominator exponents dominate the exact part");
            let da = e_poly.mul(&h.partial(0)).sub(&h.mul(&e_poly.partial(0)));
            let db = e_poly.mul(&h.partial(1)).sub(&h.mul(&e_poly.partial(1)));
            num_a = num_a.add(&scale.mul(&da));
            num_b = num_b.add(&scale.mul(&db));
        }
        let num = HoloOneForm::new(num_a, num_b).map_err(LogFormError::Algebra)?;
        MeroOneForm::holo(num, den).map_err(LogFormError::Algebra)
    }
}

/// Build Σ λᵢ·dfᵢ/fᵢ from factor/residue pairs, checking pairwise
/// coprimality, nonconstancy and squarefreeness.
pub fn build_logarithmic(
    factors: Vec<(Poly2<GaussianRational>, Residue)>,
) -> Result<ClosedMeroForm, LogFormError> {
    if factors.iter().any(|(f, _)| f.is_constant() || f.is_zero()) {
        return Err(LogFormError::ConstantFactor);
    }
    for (f, _) in &factors {
        if !is_squarefree(f) {
            return Err(LogFormError::NotSquarefree(f.to_string()));
        }
    }
    for i in 0..factors.len() {
        for j in (i + 1)..factors.len() {
            let g = factors[i].0.gcd(&factors[j].0);
            if !g.is_constant() {
                return Err(LogFormError::NotCoprime(
                    factors[i].0.to_string(),
                    factors[j].0.to_string(),
                ));
            }
        }
    }
    Ok(ClosedMeroForm {
        poles: factors
            .into_iter()
            .map(|(poly, residue)| PoleFactor {
                poly,
                residue,
                order: 1,
            })
            .collect(),
        exact_part: None,
    })
}

/// Cheap squarefreeness sanity check: gcd(f, ∂f/∂x, ∂f/∂y) is a unit.
fn is_squarefree(f: &Poly2<GaussianRational>) -> bool {
    let g = f.gcd(&f.partial(0)).gcd(&f.partial(1));
    g.is_constant()
}

/// Exact closedness test of a single-fraction meromorphic 1-form: the
/// numerator of d(num/den) over den² is the zero polynomial.
pub fn closedness_check(tau: &MeroOneForm) -> bool {
    tau.is_closed()
}

/// Magnitude first integral φ = Π|fᵢ|^{λᵢ}. `None` when some residue is not
/// real; an error when the form is not logarithmic.
#[derive(Clone, Debug)]
pub struct LogMagnitudeIntegral {
    pub factors: Vec<(Poly2<GaussianRational>, Residue)>,
}

impl LogMagnitudeIntegral {
    pub fn eval(&self, x: Complex64, y: Complex64) -> Result<f64, RolleError> {
        let mut acc = 0.0f64;
        for (f, r) in &self.factors {
            let v = eval_poly2_complex(f, x, y);
            if v.norm() < 1e-13 {
                return Err(RolleError::SampleOnAxis);
            }
            acc += r.to_f64() * v.norm().ln();
        }
        Ok(acc.exp())
    }

    pub fn to_first_integral(&self) -> FirstIntegral {
        FirstIntegral::LogMagnitude {
            factors: self
                .factors
                .iter()
                .map(|(f, r)| (f.clone(), r.to_f64()))
                .collect(),
        }
    }
}

pub fn magnitude_first_integral(
    tau: &ClosedMeroForm,
) -> Result<Option<LogMagnitudeIntegral>, LogFormError> {
    if !tau.is_logarithmic() {
        return Err(LogFormError::NotLogarithmic);
    }
    if tau.poles.iter().any(|p| !p.residue.is_real()) {
        return Ok(None);
    }
    Ok(Some(LogMagnitudeIntegral {
        factors: tau
            .poles
            .iter()
            .map(|p| (p.poly.clone(), p.residue.clone()))
            .collect(),
    }))
}

/// The primitive polynomial 1-form defining the same foliation: clear the
/// denominator and strip the coefficient content.
pub fn induced_holomorphic_form(
    tau: &ClosedMeroForm,
) -> Result<HoloOneForm<GaussianRational>, LogFormError> {
    let single = tau.to_single_fraction()?;
    match single {
        MeroOneForm::Holo { num, .. } => Ok(num.primitive_part().0),
        MeroOneForm::Real { .. } => unreachable!("structured forms are holomorphic"),
    }
}

/// Same clearing applied to an arbitrary single fraction.
pub fn induced_holomorphic_form_of_fraction(
    tau: &MeroOneForm,
) -> Result<HoloOneForm<GaussianRational>, LogFormError> {
    match tau {
        MeroOneForm::Holo { num, .. } => Ok(num.primitive_part().0),
        MeroOneForm::Real { .. } => Err(LogFormError::Algebra(AlgebraError::Unsupported(
            "the real variant does not define a holomorphic foliation directly".into(),
        ))),
    }
}

/// True when the curve {f = 0} is invariant for the form: f divides the
/// dx∧dy coefficient of η ∧ df.
pub fn curve_invariant(
    form: &HoloOneForm<GaussianRational>,
    f: &Poly2<GaussianRational>,
) -> bool {
    // η ∧ df = (A·f_y − B·f_x) dx∧dy
    let w = form.a.mul(&f.partial(1)).sub(&form.b.mul(&f.partial(0)));
    if w.is_zero() {
        return true;
    }
    w.div_exact(f).is_some()
}

/// Recover the residues of a logarithmic single fraction along the given
/// pole factors by restricting to a generic rational line and reducing
/// modulo each restricted factor; the reduction must be a constant.
pub fn extract_residues(
    tau: &MeroOneForm,
    factors: &[Poly2<GaussianRational>],
) -> Result<Vec<GaussianRational>, LogFormError> {
    let (num, den) = match tau {
        MeroOneForm::Holo { num, den } => (num, den),
        MeroOneForm::Real { .. } => {
            return Err(LogFormError::Algebra(AlgebraError::Unsupported(
                "residue extraction expects the holomorphic variant".into(),
            )))
        }
    };
    // candidate lines t ↦ (a + t, b + c·t)
    let lines = [
        (1i64, 3i64, 2i64),
        (2, -1, 3),
        (-1, 2, 5),
        (3, 1, -2),
        (5, -3, 7),
    ];
    'line: for (a, b, c) in lines {
        let a = GaussianRational::from_int(a);
        let b = GaussianRational::from_int(b);
        let c = GaussianRational::from_int(c);
        let restrict = |p: &Poly2<GaussianRational>| -> UPoly<GaussianRational> {
            // p(a + t, b + c·t)
            let x_line = UPoly::from_coeffs(vec![a.clone(), GaussianRational::one()]);
            let y_line = UPoly::from_coeffs(vec![b.clone(), c.clone()]);
            let mut acc = UPoly::zero();
            for (e, coeff) in p.terms() {
                let mut term = UPoly::constant(coeff.clone());
                for _ in 0..e.0[0] {
                    term = term.mul(&x_line);
                }
                for _ in 0..e.0[1] {
                    term = term.mul(&y_line);
                }
                acc = acc.add(&term);
            }
            acc
        };
        let den_l = restrict(den);
        if den_l.is_zero() {
            continue 'line;
        }
        // N_ℓ = A∘ℓ + c·B∘ℓ
        let num_l = restrict(&num.a).add(&restrict(&num.b).mul_scalar(&c));
        let factor_ls: Vec<UPoly<GaussianRational>> =
            factors.iter().map(restrict).collect();
        let mut residues = Vec::with_capacity(factors.len());
        for (i, (f, fl)) in factors.iter().zip(&factor_ls).enumerate() {
            if fl.degree().map_or(0, |d| d) != f.degree().map_or(0, |d| d) as usize {
                continue 'line; // the line misses the top part of this factor
            }
            if fl.gcd(&fl.derivative()).degree().map_or(0, |d| d) > 0 {
                continue 'line; // restricted factor not squarefree
            }
            for (j, other) in factor_ls.iter().enumerate() {
                if i != j && fl.gcd(other).degree().map_or(0, |d| d) > 0 {
                    continue 'line;
                }
            }
            let cofactor = match den_l.div_exact(fl) {
                Some(cf) => cf,
                None => continue 'line,
            };
            // λᵢ = N_ℓ · (cofactor · fl')⁻¹ mod fl, which must be constant
            let divisor = cofactor.mul(&fl.derivative());
            let (g, _, t) = extended_gcd(fl, &divisor);
            if g.degree() != Some(0) {
                continue 'line;
            }
            let g_inv = match g.coeffs()[0].inv() {
                Ok(v) => v,
                Err(_) => continue 'line,
            };
            let inv = t.mul_scalar(&g_inv);
            let prod = num_l.mul(&inv);
            let (_, reduced) = prod.div_rem(fl).expect("nonzero modulus");
            match reduced.degree() {
                None => residues.push(GaussianRational::zero()),
                Some(0) => residues.push(reduced.coeffs()[0].clone()),
                Some(_) => continue 'line,
            }
        }
        return Ok(residues);
    }
    Err(LogFormError::Algebra(AlgebraError::Unsupported(
        "no generic line found for residue extraction".into(),
    )))
}

/// The closed form τ = η/(x·y^{k+1}) of the saddle-node normal form, as a
/// single fraction.
pub fn saddle_node_closed_form(k: u32, mu: &GaussianRational) -> MeroOneForm {
    let x = Poly2::var(0, GaussianRational::one());
    let y = Poly2::var(1, GaussianRational::one());
    let b = x.mul(&Poly::constant(GaussianRational::one()).add(&y.pow(k).mul_scalar(mu)));
    let a = y.pow(k + 1).neg();
    let num = HoloOneForm::new(a, b).expect("nonzero");
    let den = x.mul(&y.pow(k + 1));
    MeroOneForm::holo(num, den).expect("nonzero denominator")
}

/// The closed form τ = η/(x·y·(x^p·y^q)^k) of the resonant normal form.
pub fn resonant_closed_form(p: u64, q: u64, k: u32, mu: &GaussianRational) -> MeroOneForm {
    let x = Poly2::var(0, GaussianRational::one());
    let y = Poly2::var(1, GaussianRational::one());
    let one = Poly2::constant(GaussianRational::one());
    let w = x.pow(p as u32).mul(&y.pow(q as u32));
    let wk = w.pow(k);
    let mu_minus_one = mu.sub_ref(&GaussianRational::one());
    let a = y
        .mul(&one.add(&wk.mul_scalar(&mu_minus_one)))
        .mul_scalar(&GaussianRational::from_int(p as i64));
    let b = x
        .mul(&one.add(&wk.mul_scalar(mu)))
        .mul_scalar(&GaussianRational::from_int(q as i64));
    let num = HoloOneForm::new(a, b).expect("nonzero");
    let den = x.mul(&y).mul(&wk);
    MeroOneForm::holo(num, den).expect("nonzero denominator")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use crate::scalar::Ring;

    fn xp() -> Poly2<GaussianRational> {
        Poly::var(0, GaussianRational::one())
    }
    fn yp() -> Poly2<GaussianRational> {
        Poly::var(1, GaussianRational::one())
    }
    fn q(n: i64, d: i64) -> Residue {
        Residue::Exact(GaussianRational::from_ratio(n, d))
    }

    #[test]
    fn logarithmic_two_axes() {
        // (x, λ₁), (y, λ₂) → (λ₁·y·dx + λ₂·x·dy)/(x·y)
        let tau = build_logarithmic(vec![(xp(), q(3, 1)), (yp(), q(-5, 2))]).unwrap();
        let single = tau.to_single_fraction().unwrap();
        match &single {
            MeroOneForm::Holo { num, den } => {
                assert_eq!(num.a, yp().mul_scalar(&GaussianRational::from_int(3)));
                assert_eq!(num.b, xp().mul_scalar(&GaussianRational::from_ratio(-5, 2)));
                assert_eq!(*den, xp().mul(&yp()));
            }
            _ => panic!("expected holomorphic fraction"),
        }
        assert!(closedness_check(&single));
    }

    #[test]
    fn single_factor_dx_over_x() {
        let tau = build_logarithmic(vec![(xp(), q(1, 1))]).unwrap();
        let single = tau.to_single_fraction().unwrap();
        match &single {
            MeroOneForm::Holo { num, den } => {
                assert_eq!(num.a, Poly::constant(GaussianRational::one()));
                assert!(num.b.is_zero());
                assert_eq!(*den, xp());
            }
            _ => panic!(),
        }
    }

    #[test]
    fn coprimality_is_enforced() {
        let f = xp().mul(&yp());
        match build_logarithmic(vec![(f, q(1, 1)), (yp(), q(2, 1))]) {
            Err(LogFormError::NotCoprime(_, _)) => {}
            other => panic!("expected coprimality failure, got {:?}", other.map(|_| ())),
        }
        assert!(matches!(
            build_logarithmic(vec![(Poly::constant(GaussianRational::one()), q(1, 1))]),
            Err(LogFormError::ConstantFactor)
        ));
        // squarefree sanity check
        assert!(matches!(
            build_logarithmic(vec![(xp().mul(&xp()), q(1, 1))]),
            Err(LogFormError::NotSquarefree(_))
        ));
    }

    #[test]
    fn closedness_of_normal_form_integrating_factors() {
        for k in 1..=3u32 {
            for mu in [
                GaussianRational::zero(),
                GaussianRational::from_ratio(1, 2),
                GaussianRational::i(),
            ] {
                assert!(closedness_check(&saddle_node_closed_form(k, &mu)));
            }
        }
        for (p, q) in [(1u64, 2u64), (2, 3), (3, 1)] {
            for k in 1..=2u32 {
                let mu = GaussianRational::from_ratio(1, 2);
                assert!(closedness_check(&resonant_closed_form(p, q, k, &mu)));
            }
        }
        // a non-closed fraction: y·dx/x
        let not_closed = MeroOneForm::holo(
            HoloOneForm::new(yp(), Poly::zero()).unwrap(),
            xp(),
        )
        .unwrap();
        assert!(!closedness_check(&not_closed));
    }

    #[test]
    fn exact_part_stays_closed() {
        // τ = 2·dx/x + d(h/x) with h = y²
        let tau = ClosedMeroForm {
            poles: vec![PoleFactor {
                poly: xp(),
                residue: q(2, 1).clone(),
                order: 2,
            }],
            exact_part: Some(yp().mul(&yp())),
        };
        let single = tau.to_single_fraction().unwrap();
        assert!(closedness_check(&single));
        assert!(!tau.is_logarithmic());
        assert!(matches!(
            magnitude_first_integral(&tau),
            Err(LogFormError::NotLogarithmic)
        ));
    }

    #[test]
    fn magnitude_integral_nodal() {
        // dx/x − λ·dy/y with λ = 1/2: φ = |x|·|y|^{−1/2}
        let tau = build_logarithmic(vec![(xp(), q(1, 1)), (yp(), q(-1, 2))]).unwrap();
        let phi = magnitude_first_integral(&tau).unwrap().unwrap();
        let x = Complex64::new(0.3, 0.4); // |x| = 0.5
        let y = Complex64::new(0.0, 0.25);
        let v = phi.eval(x, y).unwrap();
        assert!((v - 0.5 / 0.25f64.sqrt()).abs() < 1e-12);
        // |xy| for residues (1, 1)
        let tau2 = build_logarithmic(vec![(xp(), q(1, 1)), (yp(), q(1, 1))]).unwrap();
        let phi2 = magnitude_first_integral(&tau2).unwrap().unwrap();
        assert!((phi2.eval(x, y).unwrap() - 0.125).abs() < 1e-12);
        // non-real residue → absent
        let tau3 = build_logarithmic(vec![
            (xp(), q(1, 1)),
            (yp(), Residue::Exact(GaussianRational::i().neg_ref())),
        ])
        .unwrap();
        assert!(magnitude_first_integral(&tau3).unwrap().is_none());
    }

    #[test]
    fn algebraic_residue_magnitude() {
        // λ = −√2 as an exact algebraic residue
        let sqrt2 = RealAlgebraic::new(
            UPoly::from_coeffs(vec![
                GaussianRational::from_int(-2),
                GaussianRational::zero(),
                GaussianRational::one(),
            ]),
            RatInterval::new(
                BigRational::from_integer(BigInt::from(1)),
                BigRational::new(BigInt::from(3), BigInt::from(2)),
            ),
        )
        .unwrap();
        assert!((sqrt2.to_f64() - 1.25).abs() < 0.26);
        let tau = build_logarithmic(vec![
            (xp(), q(1, 1)),
            (yp(), Residue::RealAlgebraic(sqrt2)),
        ])
        .unwrap();
        let phi = magnitude_first_integral(&tau).unwrap().unwrap();
        assert!(phi.eval(Complex64::new(0.5, 0.0), Complex64::new(0.5, 0.0)).is_ok());
        // the isolating interval must actually isolate
        assert!(RealAlgebraic::new(
            UPoly::from_coeffs(vec![
                GaussianRational::from_int(-2),
                GaussianRational::zero(),
                GaussianRational::one(),
            ]),
            RatInterval::new(
                BigRational::from_integer(BigInt::from(-3)),
                BigRational::from_integer(BigInt::from(3)),
            ),
        )
        .is_err());
    }

    #[test]
    fn induced_form_clears_denominators() {
        // dx/x − λ·dy/y → y·dx − λ·x·dy up to the monic normalization
        let lam = GaussianRational::from_ratio(3, 4);
        let tau = build_logarithmic(vec![
            (xp(), q(1, 1)),
            (yp(), Residue::Exact(lam.neg_ref())),
        ])
        .unwrap();
        let eta = induced_holomorphic_form(&tau).unwrap();
        // same foliation as y dx − λ x dy: proportional coefficients
        let cross = eta.a.mul(&xp().mul_scalar(&lam.neg_ref())).sub(&eta.b.mul(&yp()));
        assert!(cross.is_zero());
        // each pole curve is invariant
        assert!(curve_invariant(&eta, &xp()));
        assert!(curve_invariant(&eta, &yp()));
    }

    #[test]
    fn induced_form_recovers_saddle_node() {
        let mu = GaussianRational::from_ratio(1, 2);
        let tau = saddle_node_closed_form(1, &mu);
        let eta = induced_holomorphic_form_of_fraction(&tau).unwrap();
        // Eq-style normal form up to a unit: compare against the pattern
        let b = xp().add(&xp().mul(&yp()).mul_scalar(&mu));
        let a = yp().pow(2).neg();
        let reference = HoloOneForm::new(a, b).unwrap();
        let cross_a = eta.a.mul(&reference.b).sub(&eta.b.mul(&reference.a));
        assert!(cross_a.is_zero());
    }

    #[test]
    fn exact_differential_induces_exact_form() {
        // dH for H = xy: y dx + x dy
        let h = xp().mul(&yp());
        let tau = MeroOneForm::holo(
            HoloOneForm::new(h.partial(0), h.partial(1)).unwrap(),
            Poly::constant(GaussianRational::one()),
        )
        .unwrap();
        assert!(closedness_check(&tau));
        let eta = induced_holomorphic_form_of_fraction(&tau).unwrap();
        assert_eq!(eta.a, yp());
        assert_eq!(eta.b, xp());
    }

    #[test]
    fn residues_round_trip() {
        let factors = vec![
            xp(),
            yp(),
            xp().add(&yp()).add(&Poly::constant(GaussianRational::one())),
        ];
        let residues = vec![
            GaussianRational::from_ratio(1, 2),
            GaussianRational::from_int(-3),
            GaussianRational::from_ratio_pair((2, 3), (1, 5)),
        ];
        let tau = build_logarithmic(
            factors
                .iter()
                .cloned()
                .zip(residues.iter().cloned().map(Residue::Exact))
                .collect(),
        )
        .unwrap();
        let single = tau.to_single_fraction().unwrap();
        let extracted = extract_residues(&single, &factors).unwrap();
        assert_eq!(extracted, residues);
    }

    #[test]
    fn residues_round_trip_nonlinear_factor() {
        let factors = vec![xp(), yp().sub(&xp().mul(&xp()))];
        let residues = vec![
            GaussianRational::from_int(2),
            GaussianRational::from_ratio(-7, 3),
        ];
        let tau = build_logarithmic(
            factors
                .iter()
                .cloned()
                .zip(residues.iter().cloned().map(Residue::Exact))
                .collect(),
        )
        .unwrap();
        let single = tau.to_single_fraction().unwrap();
        let extracted = extract_residues(&single, &factors).unwrap();
        assert_eq!(extracted, residues);
    }

    #[test]
    fn build_logarithmic_is_closed_for_random_sets() {
        let sets: Vec<Vec<(Poly2<GaussianRational>, Residue)>> = vec![
            vec![(xp(), q(1, 3)), (yp().add(&Poly::constant(GaussianRational::one())), q(-2, 7))],
            vec![
                (xp().add(&yp()), q(5, 1)),
                (xp().sub(&yp()), q(1, 2)),
                (yp(), Residue::Exact(GaussianRational::i())),
            ],
            vec![(yp().sub(&xp().pow(3)), q(-1, 1)), (xp(), q(4, 5))],
        ];
        for factors in sets {
            let tau = build_logarithmic(factors).unwrap();
            let single = tau.to_single_fraction().unwrap();
            assert!(closedness_check(&single));
        }
    }
}
