//! Exact classification of singular points of holomorphic 1-forms.
//!
//! For η = A dx + B dy the dual vector field is X = B ∂x − A ∂y. The
//! eigenvalue ratio λ of its linear part is analyzed through the single
//! invariant s = λ + 1/λ = tr²/det − 2, which lives in the coefficient field:
//! λ ∈ ℚ ⇔ s ∈ ℚ with s²−4 a rational square, λ ∈ ℝ ⇔ s ∈ ℝ with s² ≥ 4,
//! and the sign of a real λ is the sign of s. These boundaries are decided
//! exactly; no numeric thresholds are involved.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebraic::{rat_sqrt_bounds, sqrt_box, CBox, RatInterval};
use crate::error::ClassifyError;
use crate::forms::HoloOneForm;
use crate::poly::Poly2;
use crate::scalar::{Coeff, GaussianRational, Ring};
use crate::upoly::UPoly;

/// Coordinate axes as separatrix candidates: `XAxis` is the curve {y = 0}.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SeparatrixAxis {
    XAxis,
    YAxis,
}

/// Jacobian data of the dual vector field at a singular point.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearPart<F: Coeff = GaussianRational> {
    /// Row-major Jacobian of X = B ∂x − A ∂y.
    pub matrix: [[F; 2]; 2],
    pub trace: F,
    pub det: F,
}

impl<F: Coeff> LinearPart<F> {
    pub fn from_matrix(matrix: [[F; 2]; 2]) -> Self {
        let trace = matrix[0][0].add_ref(&matrix[1][1]);
        let det = matrix[0][0]
            .mul_ref(&matrix[1][1])
            .sub_ref(&matrix[0][1].mul_ref(&matrix[1][0]));
        LinearPart { matrix, trace, det }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.trace.is_zero() && self.det.is_zero()
    }
}

/// Taxonomy tag of a singular point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassTag {
    Regular,
    SimpleHyperbolic,
    SimpleEllipticPositive,
    SimpleEllipticNegative,
    /// λ = −p/q with coprime positive p ≤ q (the class is inversion-stable,
    /// so the pair is stored with the root inside the unit disc).
    SimpleResonant { p: u64, q: u64 },
    SaddleNode { k: u32, mu: Option<GaussianRational> },
    NonSimple,
}

impl ClassTag {
    pub fn is_simple(&self) -> bool {
        !matches!(self, ClassTag::Regular | ClassTag::NonSimple)
    }

    pub fn label(&self) -> String {
        match self {
            ClassTag::Regular => "regular".into(),
            ClassTag::SimpleHyperbolic => "hyperbolic".into(),
            ClassTag::SimpleEllipticPositive => "elliptic+".into(),
            ClassTag::SimpleEllipticNegative => "elliptic-".into(),
            ClassTag::SimpleResonant { p, q } => format!("resonant({},{})", p, q),
            ClassTag::SaddleNode { k, mu } => match mu {
                Some(m) => format!("saddle-node(k={}, mu={})", k, m),
                None => format!("saddle-node(k={})", k),
            },
            ClassTag::NonSimple => "non-simple".into(),
        }
    }
}

/// Exact multiplier record: a squarefree ℚ(i)-annihilator of the canonical
/// eigenvalue ratio (minimal for base-field centers) with a certified
/// isolating box, plus the exact value when λ ∈ ℚ(i).
#[derive(Clone, Debug, PartialEq)]
pub struct MultiplierData {
    pub ratio_poly: Option<UPoly<GaussianRational>>,
    pub min_poly: UPoly<GaussianRational>,
    pub exact: Option<GaussianRational>,
    pub isolating_box: CBox,
}

/// Syntactically recognized normal forms (the only route to "normalizability
/// established"; anything else stays unknown).
#[derive(Clone, Debug, PartialEq)]
pub enum NormalForm {
    Linear,
    SaddleNode {
        k: u32,
        mu: GaussianRational,
        swapped_axes: bool,
    },
    Resonant {
        p: u64,
        q: u64,
        k: u32,
        mu: GaussianRational,
    },
}

/// Full classification record for one singular point.
#[derive(Clone, Debug, PartialEq)]
pub struct SingularityClass {
    pub tag: ClassTag,
    pub multiplier: Option<MultiplierData>,
    /// Camacho–Sad index along {y=0}, when that axis is invariant and the
    /// index lies in ℚ(i).
    pub cs_x_axis: Option<GaussianRational>,
    /// Camacho–Sad index along {x=0}, under the same conditions.
    pub cs_y_axis: Option<GaussianRational>,
    pub normal_form: Option<NormalForm>,
}

impl SingularityClass {
    pub fn regular() -> Self {
        SingularityClass {
            tag: ClassTag::Regular,
            multiplier: None,
            cs_x_axis: None,
            cs_y_axis: None,
            normal_form: None,
        }
    }

    pub fn normalizability_established(&self) -> bool {
        self.normal_form.is_some()
    }
}

impl fmt::Display for SingularityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag.label())
    }
}

/// How s = λ + 1/λ sits relative to ℚ and ℝ; this is the entire input the
/// classification decision tree needs from the coefficient field.
#[derive(Clone, Debug, PartialEq)]
pub enum RatioSumClass {
    Rational(BigRational),
    RealIrrational { lambda_positive: bool },
    NonRealRatio,
}

/// Coefficient fields over which the multiplier decision is available.
pub trait MultiplierField: Coeff {
    fn ratio_sum_class(&self) -> Result<RatioSumClass, ClassifyError>;
    /// The value as a Gaussian rational, when it lies in the base field.
    fn to_base(&self) -> Option<GaussianRational>;
}

impl MultiplierField for GaussianRational {
    fn ratio_sum_class(&self) -> Result<RatioSumClass, ClassifyError> {
        if self.im.is_zero() {
            Ok(RatioSumClass::Rational(self.re.clone()))
        } else {
            Ok(RatioSumClass::NonRealRatio)
        }
    }

    fn to_base(&self) -> Option<GaussianRational> {
        Some(self.clone())
    }
}

/// Jacobian of the dual field X = B ∂x − A ∂y at the given center.
pub fn linear_part<F: Coeff>(
    f: &HoloOneForm<F>,
    center: (&F, &F),
) -> Result<LinearPart<F>, ClassifyError> {
    let (a, b) = translated_coeffs(f, center);
    if !(vanishes_at_origin(&a) && vanishes_at_origin(&b)) {
        return Err(ClassifyError::RegularCenter);
    }
    Ok(linear_part_at_origin(&a, &b))
}

fn translated_coeffs<F: Coeff>(f: &HoloOneForm<F>, center: (&F, &F)) -> (Poly2<F>, Poly2<F>) {
    let (x0, y0) = center;
    if x0.is_zero() && y0.is_zero() {
        (f.a.clone(), f.b.clone())
    } else {
        (f.a.shift(0, x0).shift(1, y0), f.b.shift(0, x0).shift(1, y0))
    }
}

fn vanishes_at_origin<F: Coeff>(p: &Poly2<F>) -> bool {
    p.constant_term().is_none_or(|c| c.is_zero())
}

fn coeff_or_zero<F: Coeff>(p: &Poly2<F>, e: [u32; 2], ctx: &F) -> F {
    p.coeff(e).cloned().unwrap_or_else(|| ctx.zero_like())
}

fn linear_part_at_origin<F: Coeff>(a: &Poly2<F>, b: &Poly2<F>) -> LinearPart<F> {
    let ctx = a
        .terms()
        .next()
        .or_else(|| b.terms().next())
        .map(|(_, c)| c.clone())
        .expect("form is nonzero");
    // X = B ∂x − A ∂y; Jacobian rows are gradients of (B, −A)
    let m = [
        [coeff_or_zero(b, [1, 0], &ctx), coeff_or_zero(b, [0, 1], &ctx)],
        [
            coeff_or_zero(a, [1, 0], &ctx).neg_ref(),
            coeff_or_zero(a, [0, 1], &ctx).neg_ref(),
        ],
    ];
    LinearPart::from_matrix(m)
}

/// The quadratic δr² − (τ²−2δ)r + δ whose roots are λ and 1/λ.
pub fn ratio_minimal_poly<F: Coeff>(lp: &LinearPart<F>) -> Result<UPoly<F>, ClassifyError> {
    if lp.det.is_zero() {
        return Err(ClassifyError::ZeroDeterminant);
    }
    let tau_sq = lp.trace.mul_ref(&lp.trace);
    let two_delta = lp.det.add_ref(&lp.det);
    let mid = tau_sq.sub_ref(&two_delta).neg_ref();
    Ok(UPoly::from_coeffs(vec![
        lp.det.clone(),
        mid,
        lp.det.clone(),
    ]))
}

/// Classify a point of the (primitive) 1-form. Regular points are allowed
/// and reported as such; the decision tree is exact.
pub fn classify_singularity<F: MultiplierField>(
    f: &HoloOneForm<F>,
    center: (&F, &F),
) -> SingularityClass {
    let (raw_a, raw_b) = translated_coeffs(f, center);
    // the taxonomy concerns the foliation, which is the primitive part
    let (local, _) = HoloOneForm::new(raw_a, raw_b)
        .expect("nonzero form")
        .primitive_part();
    let (a, b) = (local.a.clone(), local.b.clone());
    if !(vanishes_at_origin(&a) && vanishes_at_origin(&b)) {
        return SingularityClass::regular();
    }
    let lp = linear_part_at_origin(&a, &b);
    let normal_form = recognize_normal_form(&local);
    let cs_x_axis = camacho_sad_along(&a, &b, SeparatrixAxis::XAxis);
    let cs_y_axis = camacho_sad_along(&a, &b, SeparatrixAxis::YAxis);

    if lp.is_nilpotent() {
        return SingularityClass {
            tag: ClassTag::NonSimple,
            multiplier: None,
            cs_x_axis,
            cs_y_axis,
            normal_form: None,
        };
    }

    if lp.det.is_zero() {
        // exactly one zero eigenvalue: saddle-node
        let k = match intersection_multiplicity_origin(&a, &b) {
            Some(m) if m >= 2 => m - 1,
            _ => 1,
        };
        let mu = match &normal_form {
            Some(NormalForm::SaddleNode { mu, .. }) => Some(mu.clone()),
            _ => None,
        };
        let zero_box = CBox::point(&GaussianRational::zero());
        return SingularityClass {
            tag: ClassTag::SaddleNode { k, mu },
            multiplier: Some(MultiplierData {
                ratio_poly: None,
                min_poly: UPoly::from_coeffs(vec![
                    GaussianRational::zero(),
                    GaussianRational::one(),
                ]),
                exact: Some(GaussianRational::zero()),
                isolating_box: zero_box,
            }),
            cs_x_axis,
            cs_y_axis,
            normal_form: match normal_form {
                nf @ Some(NormalForm::SaddleNode { .. }) => nf,
                _ => None,
            },
        };
    }

    // nondegenerate: decide through s = tr²/det − 2
    let two = lp.det.embed(&GaussianRational::from_int(2));
    let s = lp
        .trace
        .mul_ref(&lp.trace)
        .div_ref(&lp.det)
        .expect("det nonzero")
        .sub_ref(&two);
    let ratio_poly = ratio_minimal_poly(&lp)
        .expect("det nonzero")
        .map_coeffs(|c| c.to_base().unwrap_or_else(GaussianRational::zero));
    let ratio_poly = if lp.det.to_base().is_some() && lp.trace.to_base().is_some() {
        Some(ratio_poly)
    } else {
        None
    };
    let s_class = s
        .ratio_sum_class()
        .expect("ratio classification is total on valid fields");
    let (tag, multiplier) = decide_from_s(&s_class, &s, ratio_poly);

    let normal_form = match (&tag, normal_form) {
        (ClassTag::SimpleResonant { .. }, nf @ Some(NormalForm::Resonant { .. })) => nf,
        (_, Some(NormalForm::Linear)) => Some(NormalForm::Linear),
        _ => None,
    };
    SingularityClass {
        tag,
        multiplier,
        cs_x_axis,
        cs_y_axis,
        normal_form,
    }
}

fn decide_from_s(
    s_class: &RatioSumClass,
    s: &impl MultiplierField,
    ratio_poly: Option<UPoly<GaussianRational>>,
) -> (ClassTag, Option<MultiplierData>) {
    match s_class {
        RatioSumClass::Rational(sq) => {
            let four = BigRational::from_integer(BigInt::from(4));
            let two = BigRational::from_integer(BigInt::from(2));
            let d = sq * sq - &four;
            if !d.is_negative() {
                if let Some(root) = crate::scalar::rational_sqrt(&d) {
                    // λ ∈ ℚ: canonical root inside the unit disc
                    let lam = if sq.is_negative() {
                        (sq + &root) / &two
                    } else {
                        (sq - &root) / &two
                    };
                    let lam_g = GaussianRational::from_rational(lam.clone());
                    let tag = if lam.is_positive() {
                        ClassTag::NonSimple
                    } else {
                        let (p, q) = rational_to_pq(&lam);
                        ClassTag::SimpleResonant { p, q }
                    };
                    let data = MultiplierData {
                        ratio_poly,
                        min_poly: UPoly::from_coeffs(vec![
                            lam_g.neg_ref(),
                            GaussianRational::one(),
                        ]),
                        exact: Some(lam_g.clone()),
                        isolating_box: CBox::point(&lam_g),
                    };
                    (tag, Some(data))
                } else {
                    // λ real irrational, sign of λ = sign of s
                    let tag = if sq.is_positive() {
                        ClassTag::SimpleEllipticPositive
                    } else {
                        ClassTag::SimpleEllipticNegative
                    };
                    let data = real_irrational_data(sq, &d, ratio_poly);
                    (tag, Some(data))
                }
            } else {
                // conjugate pair on the unit circle; exact when √d ∈ ℚ(i)
                let data = match crate::scalar::rational_sqrt(&(-d.clone())) {
                    Some(e) => {
                        // λ = (s + e·i)/2, the root with positive imaginary part
                        let lam = GaussianRational::new(
                            sq / BigRational::from_integer(BigInt::from(2)),
                            e / BigRational::from_integer(BigInt::from(2)),
                        );
                        MultiplierData {
                            ratio_poly,
                            min_poly: UPoly::from_coeffs(vec![
                                lam.neg_ref(),
                                GaussianRational::one(),
                            ]),
                            exact: Some(lam.clone()),
                            isolating_box: CBox::point(&lam),
                        }
                    }
                    None => hyperbolic_data_rational_s(sq, &d, ratio_poly),
                };
                (ClassTag::SimpleHyperbolic, Some(data))
            }
        }
        RatioSumClass::RealIrrational { lambda_positive } => {
            let tag = if *lambda_positive {
                ClassTag::SimpleEllipticPositive
            } else {
                ClassTag::SimpleEllipticNegative
            };
            (tag, extension_multiplier_data(s))
        }
        RatioSumClass::NonRealRatio => {
            let data = match s.to_base() {
                Some(sg) => Some(hyperbolic_data_gaussian_s(&sg, ratio_poly)),
                None => extension_multiplier_data(s),
            };
            (ClassTag::SimpleHyperbolic, data)
        }
    }
}

/// λ = −p/q from a negative rational inside the unit disc.
fn rational_to_pq(lam: &BigRational) -> (u64, u64) {
    let neg = -lam.clone();
    let p = neg.numer().to_string().parse::<u64>().unwrap_or(u64::MAX);
    let q = neg.denom().to_string().parse::<u64>().unwrap_or(u64::MAX);
    (p, q)
}

fn real_irrational_data(
    sq: &BigRational,
    d: &BigRational,
    ratio_poly: Option<UPoly<GaussianRational>>,
) -> MultiplierData {
    // λ = (s ± √d)/2; the root inside the unit disc is (s+√d)/2 for s<0,
    // (s−√d)/2 for s>0
    let two = BigRational::from_integer(BigInt::from(2));
    let root = rat_sqrt_bounds(d, 48);
    let iv = if sq.is_negative() {
        RatInterval::new((sq + &root.lo) / &two, (sq + &root.hi) / &two)
    } else {
        RatInterval::new((sq - &root.hi) / &two, (sq - &root.lo) / &two)
    };
    MultiplierData {
        ratio_poly,
        min_poly: monic_quadratic(sq),
        exact: None,
        isolating_box: CBox {
            re: iv,
            im: RatInterval::zero(),
        },
    }
}

fn hyperbolic_data_rational_s(
    sq: &BigRational,
    d: &BigRational,
    ratio_poly: Option<UPoly<GaussianRational>>,
) -> MultiplierData {
    // λ = (s + i√(4−s²))/2, the root with positive imaginary part
    let two = BigRational::from_integer(BigInt::from(2));
    let root = rat_sqrt_bounds(&(-d.clone()), 48);
    MultiplierData {
        ratio_poly,
        min_poly: monic_quadratic(sq),
        exact: None,
        isolating_box: CBox {
            re: RatInterval::point(sq / &two),
            im: RatInterval::new(&root.lo / &two, &root.hi / &two),
        },
    }
}

fn hyperbolic_data_gaussian_s(
    s: &GaussianRational,
    ratio_poly: Option<UPoly<GaussianRational>>,
) -> MultiplierData {
    let four = GaussianRational::from_int(4);
    let disc = s.mul_ref(s).sub_ref(&four);
    let two = GaussianRational::from_int(2);
    let half = two.inv().unwrap();
    if let Some(rt) = disc.sqrt_exact() {
        // λ ∈ ℚ(i): pick canonically by norm, tie-broken toward positive
        // imaginary then positive real part
        let l1 = s.add_ref(&rt).mul_ref(&half);
        let l2 = s.sub_ref(&rt).mul_ref(&half);
        let pick = |a: &GaussianRational, b: &GaussianRational| -> GaussianRational {
            let na = a.norm();
            let nb = b.norm();
            if na < nb {
                a.clone()
            } else if nb < na {
                b.clone()
            } else if a.im != b.im {
                if a.im > b.im {
                    a.clone()
                } else {
                    b.clone()
                }
            } else if a.re >= b.re {
                a.clone()
            } else {
                b.clone()
            }
        };
        let lam = pick(&l1, &l2);
        MultiplierData {
            ratio_poly,
            min_poly: UPoly::from_coeffs(vec![lam.neg_ref(), GaussianRational::one()]),
            exact: Some(lam.clone()),
            isolating_box: CBox::point(&lam),
        }
    } else {
        // certified boxes for both roots; pick the one inside the unit disc
        let rt = sqrt_box(&disc, 48);
        let s_box = CBox::point(s);
        let half_box = CBox::point(&half);
        let b1 = s_box.add(&rt).mul(&half_box);
        let b2 = s_box.sub(&rt).mul(&half_box);
        let one = BigRational::one();
        let pick = if b1.norm_sq().hi < one {
            b1
        } else if b2.norm_sq().hi < one {
            b2
        } else if b1.norm_sq().lo <= one {
            b1
        } else {
            b2
        };
        let min_poly = UPoly::from_coeffs(vec![
            GaussianRational::one(),
            s.neg_ref(),
            GaussianRational::one(),
        ]);
        MultiplierData {
            ratio_poly,
            min_poly,
            exact: None,
            isolating_box: pick,
        }
    }
}

fn monic_quadratic(sq: &BigRational) -> UPoly<GaussianRational> {
    // r² − s·r + 1
    UPoly::from_coeffs(vec![
        GaussianRational::one(),
        GaussianRational::from_rational(-sq.clone()),
        GaussianRational::one(),
    ])
}

/// Multiplier record for extension-field centers: the data that stays in the
/// base field is the squarefree annihilator, filled in by the number-field
/// layer; here we record nothing rather than guess.
fn extension_multiplier_data<F: MultiplierField>(_s: &F) -> Option<MultiplierData> {
    None
}

/// Local intersection multiplicity of two curves at the origin (the Milnor
/// number of the form when applied to its coefficients). `None` when the
/// curves share a component through the origin.
pub fn intersection_multiplicity_origin<F: Coeff>(
    a: &Poly2<F>,
    b: &Poly2<F>,
) -> Option<u32> {
    let vanishes =
        |p: &Poly2<F>| -> bool { p.constant_term().is_none_or(|c| c.is_zero()) };
    if a.is_zero() || b.is_zero() {
        return None;
    }
    if !vanishes(a) || !vanishes(b) {
        return Some(0);
    }
    let g = a.gcd(b);
    if !g.is_constant() && vanishes(&g) {
        return None;
    }
    fulton(a.clone(), b.clone(), 0)
}

fn fulton<F: Coeff>(a: Poly2<F>, b: Poly2<F>, depth: u32) -> Option<u32> {
    if depth > 512 {
        return None;
    }
    let vanishes =
        |p: &Poly2<F>| -> bool { p.constant_term().is_none_or(|c| c.is_zero()) };
    if !vanishes(&a) || !vanishes(&b) {
        return Some(0);
    }
    if a.is_zero() || b.is_zero() {
        return None;
    }
    let fa = a.restrict_to_axis(0);
    let fb = b.restrict_to_axis(0);
    match (fa.degree(), fb.degree()) {
        (None, None) => None, // y divides both: common component
        (None, Some(_)) => {
            // a = y·h
            let h = a.div_var_power(1, 1);
            let ord = fb
                .coeffs()
                .iter()
                .position(|c| !c.is_zero())
                .expect("restriction is nonzero") as u32;
            Some(ord + fulton(h, b, depth + 1)?)
        }
        (Some(_), None) => fulton(b, a, depth + 1),
        (Some(ra), Some(rb)) => {
            let (lo, hi, flo, fhi) = if ra <= rb {
                (a, b, fa, fb)
            } else {
                (b, a, fb, fa)
            };
            let (dl, dh) = (flo.degree().unwrap(), fhi.degree().unwrap());
            let c = fhi
                .leading()
                .unwrap()
                .div_ref(flo.leading().unwrap())
                .ok()?;
            // hi := hi − c·x^{dh−dl}·lo
            let shift_mono = Poly2::monomial(c, [(dh - dl) as u32, 0]);
            let reduced = hi.sub(&shift_mono.mul(&lo));
            fulton(lo, reduced, depth + 1)
        }
    }
}

/// Milnor number of the form at the origin.
pub fn milnor_number<F: Coeff>(f: &HoloOneForm<F>) -> Option<u32> {
    intersection_multiplicity_origin(&f.a, &f.b)
}

/// Saddle-node invariants when the form matches the normal form
/// x(1+μyᵏ)dy − y^{k+1}dx up to a unit scalar and an axis swap.
#[derive(Clone, Debug, PartialEq)]
pub enum SaddleNodeInvariants<F: Coeff> {
    NormalForm { k: u32, mu: F, swapped_axes: bool },
    NotNormalForm { diagnostic: String },
}

pub fn extract_saddle_node_invariants<F: MultiplierField>(
    f: &HoloOneForm<F>,
) -> Result<SaddleNodeInvariants<F>, ClassifyError> {
    let lp = linear_part(f, (&zero_of(f), &zero_of(f)))
        .map_err(|_| ClassifyError::NotSaddleNode)?;
    if !(lp.det.is_zero() && !lp.trace.is_zero()) {
        return Err(ClassifyError::NotSaddleNode);
    }
    if let Some((k, mu, swapped)) = match_saddle_node(f) {
        return Ok(SaddleNodeInvariants::NormalForm {
            k,
            mu,
            swapped_axes: swapped,
        });
    }
    Ok(SaddleNodeInvariants::NotNormalForm {
        diagnostic: "saddle-node is not presented in the normal form x(1+mu*y^k)dy - y^(k+1)dx; \
                     general formal normalization is not attempted"
            .into(),
    })
}

fn zero_of<F: Coeff>(f: &HoloOneForm<F>) -> F {
    f.a.terms()
        .next()
        .or_else(|| f.b.terms().next())
        .map(|(_, c)| c.zero_like())
        .expect("nonzero form")
}

/// Match η = c·(x(1+μyᵏ)dy − y^{k+1}dx), trying the axis swap as well.
fn match_saddle_node<F: Coeff>(f: &HoloOneForm<F>) -> Option<(u32, F, bool)> {
    if let Some((k, mu)) = match_saddle_node_direct(f) {
        return Some((k, mu, false));
    }
    if let Some((k, mu)) = match_saddle_node_direct(&f.swap_axes()) {
        return Some((k, mu, true));
    }
    None
}

fn match_saddle_node_direct<F: Coeff>(f: &HoloOneForm<F>) -> Option<(u32, F)> {
    // A = −c·y^{k+1}; B = c·x + c·μ·x·yᵏ
    if f.a.num_terms() != 1 {
        return None;
    }
    let (ea, ca) = f.a.terms().next().map(|(e, c)| (*e, c.clone()))?;
    if ea.0[0] != 0 || ea.0[1] < 2 {
        return None;
    }
    let k = ea.0[1] - 1;
    let c = ca.neg_ref();
    let cb = f.b.coeff([1, 0])?.clone();
    if cb != c {
        return None;
    }
    match f.b.num_terms() {
        1 => Some((k, c.zero_like())),
        2 => {
            let (em, cm) = f.b.terms().last().map(|(e, c)| (*e, c.clone()))?;
            if em.0 != [1, k] {
                return None;
            }
            let mu = cm.div_ref(&c).ok()?;
            Some((k, mu))
        }
        _ => None,
    }
}

/// Match η = c·(py(1+(μ−1)wᵏ)dx + qx(1+μwᵏ)dy) with w = x^p y^q.
fn match_resonant_form<F: MultiplierField>(f: &HoloOneForm<F>) -> Option<NormalForm> {
    let a1 = f.a.coeff([0, 1])?.clone();
    let b1 = f.b.coeff([1, 0])?.clone();
    // p/q from a1/b1, a positive rational
    let ratio = a1.div_ref(&b1).ok()?.to_base()?;
    if !ratio.is_real() || !ratio.re.is_positive() {
        return None;
    }
    let p = ratio.re.numer().to_string().parse::<u64>().ok()?;
    let q = ratio.re.denom().to_string().parse::<u64>().ok()?;
    let c = {
        let p_embedded = b1.embed(&GaussianRational::from_int(q as i64));
        b1.div_ref(&p_embedded).ok()?
    };
    let extra_a: Vec<_> = f
        .a
        .terms()
        .filter(|(e, _)| e.0 != [0, 1])
        .map(|(e, c)| (*e, c.clone()))
        .collect();
    let extra_b: Vec<_> = f
        .b
        .terms()
        .filter(|(e, _)| e.0 != [1, 0])
        .map(|(e, c)| (*e, c.clone()))
        .collect();
    if extra_a.len() > 1 || extra_b.len() > 1 || (extra_a.is_empty() && extra_b.is_empty()) {
        return None;
    }
    // infer k from whichever extra term exists
    let k = if let Some((e, _)) = extra_a.first() {
        // A extra at [pk, qk+1]
        if e.0[1] == 0 {
            return None;
        }
        let pk = e.0[0] as u64;
        let qk1 = e.0[1] as u64;
        if p == 0 || !pk.is_multiple_of(p) {
            return None;
        }
        let k = pk / p;
        if k == 0 || qk1 != q * k + 1 {
            return None;
        }
        k
    } else {
        let (e, _) = extra_b.first()?;
        let pk1 = e.0[0] as u64;
        let qk = e.0[1] as u64;
        if pk1 == 0 || q == 0 || !qk.is_multiple_of(q) {
            return None;
        }
        let k = qk / q;
        if k == 0 || pk1 != p * k + 1 {
            return None;
        }
        k
    };
    // μ from the B extra term (μ = 0 when B has none)
    let mu = match extra_b.first() {
        Some((e, cb_extra)) => {
            if e.0 != [(p * k + 1) as u32, (q * k) as u32] {
                return None;
            }
            let qc = c.mul_ref(&c.embed(&GaussianRational::from_int(q as i64)));
            cb_extra.div_ref(&qc).ok()?
        }
        None => c.zero_like(),
    };
    // cross-check the A extra term: coefficient must be c·p·(μ−1)
    let expected_a = c
        .mul_ref(&c.embed(&GaussianRational::from_int(p as i64)))
        .mul_ref(&mu.sub_ref(&c.one_like()));
    match extra_a.first() {
        Some((e, ca_extra)) => {
            if e.0 != [(p * k) as u32, (q * k + 1) as u32] || *ca_extra != expected_a {
                return None;
            }
        }
        None => {
            if !expected_a.is_zero() {
                return None;
            }
        }
    }
    let mu_base = mu.to_base()?;
    Some(NormalForm::Resonant {
        p,
        q,
        k: k as u32,
        mu: mu_base,
    })
}

/// Recognize the syntactic normal forms that establish normalizability.
pub fn recognize_normal_form<F: MultiplierField>(f: &HoloOneForm<F>) -> Option<NormalForm> {
    let linear = f.a.degree().is_none_or(|d| d <= 1) && f.b.degree().is_none_or(|d| d <= 1);
    if linear {
        return Some(NormalForm::Linear);
    }
    if let Some((k, mu, swapped_axes)) = match_saddle_node(f) {
        if let Some(mu) = mu.to_base() {
            return Some(NormalForm::SaddleNode {
                k,
                mu,
                swapped_axes,
            });
        }
    }
    match_resonant_form(f)
}

/// Exact Camacho–Sad index along a coordinate axis, when the axis is
/// invariant: the residue at 0 of (∂g/∂y)(x,0)/f(x,0) for X = f ∂x + g ∂y
/// along {y=0}, and symmetrically along {x=0}.
fn camacho_sad_along<F: MultiplierField>(
    a: &Poly2<F>,
    b: &Poly2<F>,
    axis: SeparatrixAxis,
) -> Option<GaussianRational> {
    // X = B ∂x − A ∂y
    let (tangent_coeff, normal_coeff, tangent_var) = match axis {
        // {y=0}: invariant ⇔ y | A; integrand (∂(−A)/∂y)(x,0) / B(x,0)
        SeparatrixAxis::XAxis => (b, a, 0usize),
        // {x=0}: invariant ⇔ x | B; integrand (∂B/∂x)(0,y) / (−A)(0,y)
        SeparatrixAxis::YAxis => (a, b, 1usize),
    };
    let normal_var = 1 - tangent_var;
    if !normal_coeff.divisible_by_var(normal_var) {
        return None; // axis not invariant
    }
    let (num, den) = match axis {
        SeparatrixAxis::XAxis => (
            a.partial(1).neg().restrict_to_axis(0),
            tangent_coeff.restrict_to_axis(0),
        ),
        SeparatrixAxis::YAxis => (
            b.partial(0).restrict_to_axis(1),
            a.neg().restrict_to_axis(1),
        ),
    };
    let res = univariate_residue_at_zero(&num, &den)?;
    res.to_base()
}

/// Residue at t=0 of num(t)/den(t) for polynomials over a field.
fn univariate_residue_at_zero<F: Coeff>(num: &UPoly<F>, den: &UPoly<F>) -> Option<F> {
    if den.is_zero() {
        return None;
    }
    let m = den.coeffs().iter().position(|c| !c.is_zero())?;
    if m == 0 {
        // regular point: residue 0
        return Some(den.coeffs()[0].zero_like());
    }
    // den = t^m · d̃ with d̃(0) ≠ 0; residue = [t^{m−1}] num·d̃⁻¹ (series)
    let dt: Vec<F> = den.coeffs()[m..].to_vec();
    let d0_inv = dt[0].inv().ok()?;
    // series inverse of d̃ modulo t^m
    let mut inv = vec![d0_inv.clone()];
    for n in 1..m {
        let mut acc = dt[0].zero_like();
        for j in 1..=n.min(dt.len() - 1) {
            acc = acc.add_ref(&dt[j].mul_ref(&inv[n - j]));
        }
        inv.push(acc.mul_ref(&d0_inv).neg_ref());
    }
    // coefficient of t^{m−1} in num · inv
    let mut res = dt[0].zero_like();
    for j in 0..m {
        let nc = match num.coeff(j) {
            Some(c) => c.clone(),
            None => continue,
        };
        let k = m - 1 - j;
        if k < inv.len() {
            res = res.add_ref(&nc.mul_ref(&inv[k]));
        }
    }
    Some(res)
}

/// Camacho–Sad index per separatrix, read from a classification record.
pub fn camacho_sad_index(
    cls: &SingularityClass,
    axis: SeparatrixAxis,
) -> Result<Option<GaussianRational>, ClassifyError> {
    if !cls.tag.is_simple() {
        return Err(ClassifyError::NotSimple);
    }
    Ok(match axis {
        SeparatrixAxis::XAxis => cls.cs_x_axis.clone(),
        SeparatrixAxis::YAxis => cls.cs_y_axis.clone(),
    })
}
