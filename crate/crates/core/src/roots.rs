//! Exact root extraction for univariate polynomials over ℚ(i) and over one
//! simple extension.
//!
//! Degrees one and two are solved in closed form (the square-root test in
//! ℚ(i) is exact). Higher degrees first try to snap certified numeric roots
//! to Gaussian rationals, verifying each candidate exactly before deflating;
//! whatever resists splits into factors found by snapping subset products of
//! the numeric roots, again verified by exact division. Factors that survive
//! everything are treated as irreducible and their roots are returned
//! symbolically with certified isolating boxes.

use num_complex::Complex64;

use crate::algebraic::{complex_roots_f64, isolate_roots, snap_to_rational, CBox};
use crate::blowup::DivisorRoot;
use crate::error::{AlgebraError, BlowupError};
use crate::nf::NfElem;
use crate::scalar::{Coeff, GaussianRational, Ring};
use crate::upoly::UPoly;

/// All roots of p over ℚ(i): exact in-field roots plus symbolic roots of
/// (assumed) irreducible factors of degree ≥ 2, in canonical order.
pub fn gaussian_roots(
    p: &UPoly<GaussianRational>,
) -> Result<Vec<DivisorRoot<GaussianRational>>, BlowupError> {
    let sf = p.squarefree_part();
    let mut exact = Vec::new();
    let mut symbolic: Vec<(UPoly<GaussianRational>, CBox)> = Vec::new();
    let mut stack = vec![sf];
    while let Some(q) = stack.pop() {
        match q.degree() {
            None | Some(0) => {}
            Some(1) => {
                let root = q.coeffs()[0]
                    .div_ref(&q.coeffs()[1])
                    .map_err(BlowupError::Algebra)?
                    .neg_ref();
                exact.push(root);
            }
            Some(2) => {
                let (c0, c1, c2) = (&q.coeffs()[0], &q.coeffs()[1], &q.coeffs()[2]);
                let disc = c1.mul_ref(c1).sub_ref(
                    &GaussianRational::from_int(4).mul_ref(&c2.mul_ref(c0)),
                );
                match disc.sqrt_exact() {
                    Some(rt) => {
                        let half_inv = GaussianRational::from_int(2)
                            .mul_ref(c2)
                            .inv()
                            .map_err(BlowupError::Algebra)?;
                        exact.push(c1.neg_ref().add_ref(&rt).mul_ref(&half_inv));
                        exact.push(c1.neg_ref().sub_ref(&rt).mul_ref(&half_inv));
                    }
                    None => push_symbolic(&q, &mut symbolic)?,
                }
            }
            Some(_) => match extract_or_split(&q)? {
                Split::Root(v, rest) => {
                    exact.push(v);
                    stack.push(rest);
                }
                Split::Factors(parts) => stack.extend(parts),
                Split::Irreducible => push_symbolic(&q, &mut symbolic)?,
            },
        }
    }
    let mut out: Vec<DivisorRoot<GaussianRational>> = Vec::new();
    exact.sort_by_key(|a| (a.re.clone(), a.im.clone()));
    out.extend(exact.into_iter().map(DivisorRoot::InField));
    symbolic.sort_by(|(pa, ba), (pb, bb)| {
        let ka = pa.to_string();
        let kb = pb.to_string();
        ka.cmp(&kb).then_with(|| {
            let ma = ba.mid_f64();
            let mb = bb.mid_f64();
            ma.re
                .partial_cmp(&mb.re)
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(ma.im.partial_cmp(&mb.im).unwrap_or(std::cmp::Ordering::Equal))
        })
    });
    out.extend(
        symbolic
            .into_iter()
            .map(|(minpoly, root_box)| DivisorRoot::Extension { minpoly, root_box }),
    );
    Ok(out)
}

fn push_symbolic(
    q: &UPoly<GaussianRational>,
    out: &mut Vec<(UPoly<GaussianRational>, CBox)>,
) -> Result<(), BlowupError> {
    let boxes = isolate_roots(q)
        .map_err(|e| BlowupError::Algebra(AlgebraError::Unsupported(e)))?;
    for b in boxes {
        out.push((q.monic(), b));
    }
    Ok(())
}

enum Split {
    Root(GaussianRational, UPoly<GaussianRational>),
    Factors(Vec<UPoly<GaussianRational>>),
    Irreducible,
}

fn extract_or_split(q: &UPoly<GaussianRational>) -> Result<Split, BlowupError> {
    let approx = match complex_roots_f64(
        &q.coeffs().iter().map(|c| c.to_complex64()).collect::<Vec<_>>(),
    ) {
        Some(r) => r,
        None => {
            return Err(BlowupError::Algebra(AlgebraError::Unsupported(
                "numeric root finding failed".into(),
            )))
        }
    };
    // try snapping individual roots to Gaussian rationals
    for &z in &approx {
        if let Some(cand) = snap_gaussian(z, 1e-8) {
            if q.eval(&cand).is_zero() {
                let lin = UPoly::from_coeffs(vec![cand.neg_ref(), GaussianRational::one()]);
                let rest = q.div_exact(&lin).expect("verified root divides");
                return Ok(Split::Root(cand, rest));
            }
        }
    }
    // try snapping subset products to proper factors
    let n = approx.len();
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size < 2 || size > n - 1 {
            continue;
        }
        let subset: Vec<Complex64> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| approx[i])
            .collect();
        if let Some(factor) = snap_monic_factor(&subset) {
            if let Some(rest) = q.monic().div_exact(&factor) {
                return Ok(Split::Factors(vec![factor, rest]));
            }
        }
    }
    Ok(Split::Irreducible)
}

fn snap_gaussian(z: Complex64, tol: f64) -> Option<GaussianRational> {
    Some(GaussianRational::new(
        snap_to_rational(z.re, tol)?,
        snap_to_rational(z.im, tol)?,
    ))
}

/// Expand Π(t − rᵢ) numerically and snap every coefficient.
fn snap_monic_factor(roots: &[Complex64]) -> Option<UPoly<GaussianRational>> {
    let mut coeffs = vec![Complex64::new(1.0, 0.0)];
    for &r in roots {
        let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
        for (k, &c) in coeffs.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * r;
        }
        coeffs = next;
    }
    let snapped: Option<Vec<GaussianRational>> = coeffs
        .iter()
        .map(|&c| snap_gaussian(c, 1e-6))
        .collect();
    Some(UPoly::from_coeffs(snapped?))
}

/// Roots over a simple extension: in-field roots are extracted by snapping
/// numeric roots to ℚ(i) candidates embedded and verified exactly; linear
/// leftovers are solved in the field; anything deeper is refused.
pub fn extension_roots(p: &UPoly<NfElem>) -> Result<Vec<DivisorRoot<NfElem>>, BlowupError> {
    let sf = p.squarefree_part();
    let mut q = sf;
    let mut exact: Vec<NfElem> = Vec::new();
    loop {
        match q.degree() {
            None | Some(0) => break,
            Some(1) => {
                let root = q.coeffs()[0]
                    .div_ref(&q.coeffs()[1])
                    .map_err(BlowupError::Algebra)?
                    .neg_ref();
                exact.push(root);
                break;
            }
            Some(_) => {
                let approx = complex_roots_f64(
                    &q.coeffs().iter().map(|c| c.to_complex64()).collect::<Vec<_>>(),
                )
                .ok_or_else(|| {
                    BlowupError::Algebra(AlgebraError::Unsupported(
                        "numeric root finding failed over the extension".into(),
                    ))
                })?;
                let mut progressed = false;
                for &z in &approx {
                    if let Some(cand) = snap_gaussian(z, 1e-8) {
                        let ctx = q.coeffs()[0].clone();
                        let cand_f = ctx.embed(&cand);
                        if q.eval(&cand_f).is_zero() {
                            let lin = UPoly::from_coeffs(vec![cand_f.neg_ref(), ctx.one_like()]);
                            q = q.div_exact(&lin).expect("verified root divides");
                            exact.push(cand_f);
                            progressed = true;
                            break;
                        }
                    }
                }
                if !progressed {
                    return Err(BlowupError::TowerTooDeep);
                }
            }
        }
    }
    exact.sort_by_key(|v| v.to_string());
    Ok(exact.into_iter().map(DivisorRoot::InField).collect())
}
