//! Rolle-tangency verdicts and numerical Rolle evidence.
//!
//! The verdict engine walks the reduced tree and applies the singularity
//! taxonomy: hyperbolic points exclude invariant Rolle-pfaffian
//! hypersurfaces; saddle-nodes require a real weak multiplier; elliptic and
//! resonant points require linearizability / analytic normalizability, which
//! is only ever established syntactically (linear or normal-form input).
//! Everything numeric here is labeled evidence, not proof; the verdict uses
//! only exact data.

use num_complex::Complex64;

use crate::blowup::ReductionTree;
use crate::classify::{ClassTag, NormalForm};
use crate::error::{AlgebraError, RolleError};
use crate::forms::{
    eval_poly2_complex, holo_part_doubled, realify_real, HoloOneForm, MeroOneForm, RealPForm,
};
use crate::poly::{Poly2, Poly4};
use crate::scalar::{rational_to_f64, GaussianRational, Ring};

/// Why a leaf is incompatible or undecided; `rule` is a stable machine tag.
#[derive(Clone, Debug, PartialEq)]
pub struct Finding {
    pub node: usize,
    pub rule: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq)]
pub enum VerdictOutcome {
    Compatible,
    Incompatible(Vec<Finding>),
    Inconclusive(Vec<Finding>),
}

impl VerdictOutcome {
    pub fn label(&self) -> &'static str {
        match self {
            VerdictOutcome::Compatible => "compatible",
            VerdictOutcome::Incompatible(_) => "incompatible",
            VerdictOutcome::Inconclusive(_) => "inconclusive",
        }
    }
}

/// Per-leaf status line in the verdict.
#[derive(Clone, Debug, PartialEq)]
pub struct LeafReport {
    pub node: usize,
    pub class_label: String,
    pub status: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub outcome: VerdictOutcome,
    pub leaves: Vec<LeafReport>,
    pub dicritical: bool,
    pub dicritical_note: Option<String>,
}

/// Decide Rolle-tangency compatibility from a fully reduced tree.
pub fn rolle_verdict(tree: &ReductionTree) -> Result<Verdict, RolleError> {
    if !tree.all_leaves_reduced() {
        return Err(RolleError::NotReduced);
    }
    let mut incompatible = Vec::new();
    let mut unknown = Vec::new();
    let mut leaves = Vec::new();
    for node in tree.leaves() {
        let label = node.class.tag.label();
        let status = match &node.class.tag {
            ClassTag::Regular => "regular point; no constraint".to_string(),
            ClassTag::SimpleHyperbolic => {
                incompatible.push(Finding {
                    node: node.id,
                    rule: "hyperbolic-exclusion".into(),
                    detail: "a hyperbolic point admits no invariant Rolle-pfaffian hypersurface"
                        .into(),
                });
                "hyperbolic: incompatible".to_string()
            }
            ClassTag::SaddleNode { mu, .. } => match mu {
                Some(m) if m.is_real() => {
                    "saddle-node in normal form with real weak multiplier: compatible".to_string()
                }
                Some(_) => {
                    incompatible.push(Finding {
                        node: node.id,
                        rule: "saddle-node-nonreal-weak-multiplier".into(),
                        detail: "Rolle tangency at a saddle-node forces a real weak multiplier"
                            .into(),
                    });
                    "saddle-node with non-real weak multiplier: incompatible".to_string()
                }
                None => {
                    unknown.push(Finding {
                        node: node.id,
                        rule: "saddle-node-normalizability-unknown".into(),
                        detail: "saddle-node not in normal form; analytic normalizability \
                                 cannot be established syntactically"
                            .into(),
                    });
                    "saddle-node not in normal form: normalizability unknown".to_string()
                }
            },
            ClassTag::SimpleResonant { .. } => {
                if node.class.normalizability_established() {
                    "resonant in recognized normal form: compatible".to_string()
                } else {
                    unknown.push(Finding {
                        node: node.id,
                        rule: "resonant-normalizability-unknown".into(),
                        detail: "resonant point not syntactically linear or in normal form"
                            .into(),
                    });
                    "resonant: normalizability unknown".to_string()
                }
            }
            ClassTag::SimpleEllipticPositive | ClassTag::SimpleEllipticNegative => {
                if matches!(node.class.normal_form, Some(NormalForm::Linear)) {
                    "linearizable elliptic: compatible".to_string()
                } else {
                    unknown.push(Finding {
                        node: node.id,
                        rule: "elliptic-linearizability-unknown".into(),
                        detail: "elliptic point not syntactically linear".into(),
                    });
                    "elliptic: linearizability unknown".to_string()
                }
            }
            ClassTag::NonSimple => unreachable!("tree was checked reduced"),
        };
        leaves.push(LeafReport {
            node: node.id,
            class_label: label,
            status,
        });
    }
    let outcome = if !incompatible.is_empty() {
        VerdictOutcome::Incompatible(incompatible)
    } else if !unknown.is_empty() {
        VerdictOutcome::Inconclusive(unknown)
    } else {
        VerdictOutcome::Compatible
    };
    let dicritical = tree.is_dicritical();
    let note = if dicritical {
        Some(
            "the exceptional divisor has a non-invariant component; the verdict constrains \
             the singular points only, while the transverse component carries families of \
             invariant hypersurfaces outside this taxonomy"
                .to_string(),
        )
    } else {
        None
    };
    Ok(Verdict {
        outcome,
        leaves,
        dicritical,
        dicritical_note: note,
    })
}

/// Both integrability 4-forms of the pfaffian pair {ω, ω♯}: the model is
/// Levi-flat exactly when both are the zero form.
pub fn levi_integrability_check(
    omega: &RealPForm,
) -> Result<(RealPForm, RealPForm), AlgebraError> {
    if omega.degree() != 1 {
        return Err(AlgebraError::Unsupported(
            "the integrability identity applies to 1-forms".into(),
        ));
    }
    let eta = holo_part_doubled(omega)?; // errors when ω is not real
    let (_, omega_sharp) = realify_real(&eta);
    let d_omega = omega.exterior_derivative()?;
    let d_sharp = omega_sharp.exterior_derivative()?;
    let pair = omega.wedge(&omega_sharp)?;
    Ok((d_omega.wedge(&pair)?, d_sharp.wedge(&pair)?))
}

/// The polynomial nodal-separator 1-form tangent to |x| = c·|y|^λ:
/// |x|²|y|²·Re(dx/x − λ·dy/y) expanded over the real frame.
pub fn nodal_separator_form(lambda: &GaussianRational) -> RealPForm {
    let x = || Poly4::var(0, GaussianRational::one());
    let xb = || Poly4::var(1, GaussianRational::one());
    let y = || Poly4::var(2, GaussianRational::one());
    let yb = || Poly4::var(3, GaussianRational::one());
    let half = GaussianRational::from_ratio(1, 2);
    let yy = y().mul(&yb());
    let xx = x().mul(&xb());
    let neg_l = lambda.neg_ref();
    RealPForm::from_terms(
        1,
        vec![
            (1 << 0, xb().mul(&yy).mul_scalar(&half)),
            (1 << 1, x().mul(&yy).mul_scalar(&half)),
            (1 << 2, xx.mul(&yb()).mul_scalar(&half.mul_ref(&neg_l))),
            (1 << 3, xx.mul(&y()).mul_scalar(&half.mul_ref(&neg_l))),
        ],
    )
}

/// Which one-dimensional section the transversal foliation lives on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SectionAxis {
    /// Σ = {(x, 1)}: the section coordinate is x.
    XSection,
    /// Σ = {(1, y)}: the section coordinate is y.
    YSection,
}

/// A real-analytic foliation on a one-dimensional transversal, given by a
/// real polynomial 1-form in the section coordinate.
#[derive(Clone, Debug)]
pub struct TransversalFoliation {
    pub section: SectionAxis,
    pub alpha: GaussianRational,
    pub one_form: RealPForm,
    pub source: String,
}

impl TransversalFoliation {
    /// Restrict Re(α·τ) to the section and clear the (real, positive)
    /// denominator; the restricted kernel field is unchanged off the poles.
    pub fn from_closed_form(
        tau: &MeroOneForm,
        alpha: &GaussianRational,
        section: SectionAxis,
        source: impl Into<String>,
    ) -> Result<Self, RolleError> {
        let real = tau.scaled_real_part(alpha)?;
        let (num, _den) = match real {
            MeroOneForm::Real { num, den } => (num, den),
            _ => unreachable!("scaled_real_part returns the real variant"),
        };
        let one = GaussianRational::one();
        let restricted = match section {
            SectionAxis::XSection => restrict_form(&num, &[2, 3], &one),
            SectionAxis::YSection => restrict_form(&num, &[0, 1], &one),
        };
        if restricted.is_zero() {
            return Err(RolleError::Algebra(AlgebraError::ZeroForm));
        }
        if !restricted.is_real() {
            return Err(RolleError::Algebra(AlgebraError::NotReal));
        }
        Ok(TransversalFoliation {
            section,
            alpha: alpha.clone(),
            one_form: restricted,
            source: source.into(),
        })
    }

    /// The section foliation of the linear model: α·v̄·dv + ᾱ·v·dv̄ with
    /// v the section coordinate (circles for real α, focus otherwise).
    pub fn linear_model(alpha: &GaussianRational, section: SectionAxis) -> Self {
        let (v, vb, dv, dvb) = section_vars(section);
        let form = RealPForm::from_terms(
            1,
            vec![
                (dv, Poly4::var(vb, GaussianRational::one()).mul_scalar(alpha)),
                (
                    dvb,
                    Poly4::var(v, GaussianRational::one()).mul_scalar(&alpha.conj()),
                ),
            ],
        );
        TransversalFoliation {
            section,
            alpha: alpha.clone(),
            one_form: form,
            source: "linear model section".into(),
        }
    }

    /// Coefficient P of dv in the section coordinate, evaluated numerically.
    fn p_coeff(&self, v: Complex64) -> Complex64 {
        let (x, y) = match self.section {
            SectionAxis::XSection => (v, Complex64::new(1.0, 0.0)),
            SectionAxis::YSection => (Complex64::new(1.0, 0.0), v),
        };
        let dv_blade = match self.section {
            SectionAxis::XSection => 1u8 << 0,
            SectionAxis::YSection => 1u8 << 2,
        };
        match self.one_form.coeff(dv_blade) {
            Some(p) => p.to_complex_fn(x, y),
            None => Complex64::new(0.0, 0.0),
        }
    }

    /// Unit-speed leaf field: v' = i·conj(P)/|P|.
    pub fn leaf_velocity_at(&self, v: Complex64) -> Option<Complex64> {
        let p = self.p_coeff(v);
        let n = p.norm();
        if n < 1e-13 {
            return None;
        }
        Some(Complex64::new(0.0, 1.0) * p.conj() / n)
    }
}

fn section_vars(section: SectionAxis) -> (usize, usize, u8, u8) {
    match section {
        SectionAxis::XSection => (0, 1, 1 << 0, 1 << 1),
        SectionAxis::YSection => (2, 3, 1 << 2, 1 << 3),
    }
}

/// Substitute 1 for the listed variables of every coefficient and drop the
/// corresponding frame components.
fn restrict_form(form: &RealPForm, vars: &[usize], value: &GaussianRational) -> RealPForm {
    let mut kill_mask = 0u8;
    for v in vars {
        kill_mask |= 1 << *v;
    }
    let mut out = RealPForm::zero(form.degree());
    let mut entries = Vec::new();
    for (blade, coeff) in form.terms() {
        if blade & kill_mask != 0 {
            continue;
        }
        let mut c = coeff.clone();
        for v in vars {
            c = c.subst_const(*v, value);
        }
        if !c.is_zero() {
            entries.push((*blade, c));
        }
    }
    for (blade, c) in entries {
        out = out.add(&RealPForm::from_terms(form.degree(), vec![(blade, c)]));
    }
    out
}

/// Count transversal crossings of the ray at `ray_angle` by the leaf through
/// `seed`, restricted to the annulus r_min ≤ |v| ≤ r_max.
///
/// A crossing is a sign change of the angular offset with radial speed above
/// 1e−6; crossing points within 1e−4 of an earlier one are suppressed.
pub fn transversal_crossing_count(
    tf: &TransversalFoliation,
    seed: Complex64,
    ray_angle: f64,
    r_min: f64,
    r_max: f64,
) -> Result<usize, RolleError> {
    if seed.norm() < r_min || seed.norm() > r_max {
        return Err(RolleError::Algebra(AlgebraError::Unsupported(
            "seed must lie inside the annulus".into(),
        )));
    }
    let mut crossings: Vec<Complex64> = Vec::new();
    for dir in [1.0f64, -1.0] {
        trace_direction(tf, seed, ray_angle, r_min, r_max, dir, &mut crossings)?;
    }
    Ok(crossings.len())
}

fn trace_direction(
    tf: &TransversalFoliation,
    seed: Complex64,
    ray_angle: f64,
    r_min: f64,
    r_max: f64,
    dir: f64,
    crossings: &mut Vec<Complex64>,
) -> Result<(), RolleError> {
    let max_arc = 400.0 * r_max;
    let mut v = seed;
    let mut theta = seed.arg();
    let mut s = 0.0f64;
    let mut steps = 0usize;
    while s < max_arc && steps < 4_000_000 {
        steps += 1;
        let vel = match tf.leaf_velocity_at(v) {
            Some(w) => w * dir,
            None => {
                return Err(RolleError::IntegrationFailure {
                    crossings: crossings.len(),
                    message: "leaf direction field degenerate (near a singular point)".into(),
                })
            }
        };
        let h = (0.02 * v.norm()).clamp(1e-7, 5e-3);
        // classical RK4 with unit-speed right-hand side
        let f = |z: Complex64| tf.leaf_velocity_at(z).map(|w| w * dir);
        let k1 = vel;
        let k2 = f(v + k1 * (h / 2.0)).unwrap_or(k1);
        let k3 = f(v + k2 * (h / 2.0)).unwrap_or(k2);
        let k4 = f(v + k3 * h).unwrap_or(k3);
        let next = v + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
        let dtheta = (next / v).arg();
        let theta_next = theta + dtheta;
        // crossing: the unwrapped relative angle passes a multiple of 2π
        let rel_prev = (theta - ray_angle) / std::f64::consts::TAU;
        let rel_next = (theta_next - ray_angle) / std::f64::consts::TAU;
        if rel_prev.floor() != rel_next.floor() && (rel_next - rel_prev).abs() <  0.45 {
            let boundary = if rel_next > rel_prev {
                rel_next.floor()
            } else {
                rel_prev.floor()
            };
            let frac = if (rel_next - rel_prev).abs() > 1e-15 {
                (boundary - rel_prev) / (rel_next - rel_prev)
            } else {
                0.5
            };
            let r_prev = v.norm();
            let r_next = next.norm();
            let r_cross = r_prev + (r_next - r_prev) * frac.clamp(0.0, 1.0);
            let point = Complex64::from_polar(r_cross, ray_angle);
            let in_annulus = r_cross >= r_min && r_cross <= r_max;
            // transversality to the radial ray: the angular speed at the
            // crossing stays above threshold (suppresses tangent touchings)
            let transversal = (dtheta / h).abs() > 1e-6;
            let duplicate = crossings.iter().any(|c| (c - point).norm() < 1e-4);
            if in_annulus && transversal && !duplicate {
                crossings.push(point);
            }
        }
        v = next;
        theta = theta_next;
        s += h;
        if v.norm() < r_min * 0.7 || v.norm() > r_max * 1.3 {
            break;
        }
        // closed-leaf detection: returned to the seed with enough arc behind
        if s > 8.0 * h && (v - seed).norm() < 1e-9_f64.max(1e-6 * seed.norm()) {
            break;
        }
    }
    Ok(())
}

/// First integrals evaluated along sampled leaves.
#[derive(Clone, Debug)]
pub enum FirstIntegral {
    /// F(x, y) = μ·log|y| − log|x| − Re(1/(k·yᵏ)), for the saddle-node
    /// normal form with real μ.
    SaddleNodeF { mu: GaussianRational, k: u32 },
    /// f(y) = μ·q·log|y| − Re(1/(k·y^{qk})), the section integral of the
    /// resonant model with real μ.
    ResonantSmallF {
        mu: GaussianRational,
        q: u64,
        k: u32,
    },
    /// Π |fᵢ|^{λᵢ} with real exponents.
    LogMagnitude {
        factors: Vec<(Poly2<GaussianRational>, f64)>,
    },
}

impl FirstIntegral {
    pub fn eval(&self, x: Complex64, y: Complex64) -> Result<f64, RolleError> {
        const AXIS_EPS: f64 = 1e-13;
        match self {
            FirstIntegral::SaddleNodeF { mu, k } => {
                if x.norm() < AXIS_EPS || y.norm() < AXIS_EPS {
                    return Err(RolleError::SampleOnAxis);
                }
                let mu_f = rational_to_f64(&mu.re);
                let inv = (y.powu(*k) * *k as f64).finv();
                Ok(mu_f * y.norm().ln() - x.norm().ln() - inv.re)
            }
            FirstIntegral::ResonantSmallF { mu, q, k } => {
                if y.norm() < AXIS_EPS {
                    return Err(RolleError::SampleOnAxis);
                }
                let mu_f = rational_to_f64(&mu.re);
                let qk = (*q as u32) * *k;
                let inv = (y.powu(qk) * *k as f64).finv();
                Ok(mu_f * *q as f64 * y.norm().ln() - inv.re)
            }
            FirstIntegral::LogMagnitude { factors } => {
                let mut acc = 0.0;
                for (f, lam) in factors {
                    let val = eval_poly2_complex(f, x, y);
                    if val.norm() < AXIS_EPS {
                        return Err(RolleError::SampleOnAxis);
                    }
                    acc += lam * val.norm().ln();
                }
                Ok(acc.exp())
            }
        }
    }
}

/// Maximum relative drift of the integral along the samples:
/// max |fi − fi₀| / (1 + |fi₀|).
pub fn first_integral_conservation(
    fi: &FirstIntegral,
    samples: &[(Complex64, Complex64)],
) -> Result<f64, RolleError> {
    let mut iter = samples.iter();
    let first = match iter.next() {
        Some(p) => fi.eval(p.0, p.1)?,
        None => return Ok(0.0),
    };
    let mut drift: f64 = 0.0;
    for p in iter {
        let v = fi.eval(p.0, p.1)?;
        drift = drift.max((v - first).abs() / (1.0 + first.abs()));
    }
    Ok(drift)
}

/// Sample a leaf of the holomorphic foliation by flowing the dual vector
/// field in several complex-time directions, with arc-length
/// reparameterization.
pub fn integrate_leaf_samples(
    form: &HoloOneForm<GaussianRational>,
    start: (Complex64, Complex64),
    directions: &[f64],
    arc_length: f64,
    samples_per_direction: usize,
) -> Result<Vec<(Complex64, Complex64)>, RolleError> {
    let mut out = vec![start];
    for &phi in directions {
        let rot = Complex64::from_polar(1.0, phi);
        let field = |p: [Complex64; 2]| {
            let (fx, fy) = form.dual_field_complex(p[0], p[1]);
            let norm = (fx.norm_sqr() + fy.norm_sqr()).sqrt().max(1e-300);
            [rot * fx / norm, rot * fy / norm]
        };
        let step = arc_length / samples_per_direction as f64;
        let mut state = [start.0, start.1];
        for _ in 0..samples_per_direction {
            state = crate::ode::integrate(&field, state, step, crate::ode::OdeTol::default(), None)
                .map_err(|e| RolleError::IntegrationFailure {
                    crossings: 0,
                    message: e.to_string(),
                })?;
            out.push((state[0], state[1]));
        }
    }
    Ok(out)
}
