//! Sparse multivariate polynomials over an exact coefficient field.
//!
//! `Poly<F, N>` maps exponent vectors to nonzero coefficients; the map is
//! ordered graded-lexicographically, which fixes the canonical term order
//! everywhere (printing, gcd normalization, serialization). `Poly2` is the
//! bivariate case in (x, y); `Poly4` is the four-variable case in
//! (x, x̄, y, ȳ) used by real forms.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::AlgebraError;
use crate::scalar::{Coeff, GaussianRational};
use crate::upoly::UPoly;

/// Exponent vector ordered by total degree, then lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Expo<const N: usize>(pub [u32; N]);

impl<const N: usize> Expo<N> {
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl<const N: usize> PartialOrd for Expo<N> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<const N: usize> Ord for Expo<N> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

#[derive(Clone, PartialEq)]
pub struct Poly<F, const N: usize> {
    terms: BTreeMap<Expo<N>, F>,
}

pub type Poly2<F = GaussianRational> = Poly<F, 2>;
pub type Poly4 = Poly<GaussianRational, 4>;

impl<F: Coeff, const N: usize> Poly<F, N> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: F) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Expo([0; N]), c);
        }
        Poly { terms }
    }

    pub fn var(index: usize, one: F) -> Self {
        Self::monomial(one, {
            let mut e = [0; N];
            e[index] = 1;
            e
        })
    }

    pub fn monomial(c: F, exps: [u32; N]) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Expo(exps), c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|e| e.total() == 0)
    }

    /// Total degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|e| e.total())
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e.0[var]).max()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Expo<N>, &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading coefficient in the graded-lex order.
    pub fn leading_coeff(&self) -> Option<&F> {
        self.terms.values().next_back()
    }

    pub fn coeff(&self, exps: [u32; N]) -> Option<&F> {
        self.terms.get(&Expo(exps))
    }

    pub fn constant_term(&self) -> Option<&F> {
        self.terms.get(&Expo([0; N]))
    }

    fn insert_add(&mut self, e: Expo<N>, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                let sum = existing.add_ref(&c);
                if sum.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(*e, c.neg_ref());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, c.neg_ref()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Poly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut e = [0u32; N];
                for i in 0..N {
                    e[i] = ea.0[i] + eb.0[i];
                }
                out.insert_add(Expo(e), ca.mul_ref(cb));
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &F) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, t)| (*e, t.mul_ref(c)))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, c: &F, exps: [u32; N]) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, t)| {
                    let mut m = [0u32; N];
                    for i in 0..N {
                        m[i] = e.0[i] + exps[i];
                    }
                    (Expo(m), t.mul_ref(c))
                })
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        if n == 0 {
            // conventionally 1; the zero polynomial stays zero for lack of context
            return match self.terms.values().next() {
                Some(c) => Poly::constant(c.one_like()),
                None => Poly::zero(),
            };
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn partial(&self, var: usize) -> Self {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            if e.0[var] == 0 {
                continue;
            }
            let mut m = e.0;
            m[var] -= 1;
            let factor = c.embed(&GaussianRational::from_int(e.0[var] as i64));
            out.insert_add(Expo(m), c.mul_ref(&factor));
        }
        out
    }

    /// Substitute a constant for one variable.
    pub fn subst_const(&self, var: usize, value: &F) -> Self {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            let k = e.0[var];
            let mut m = e.0;
            m[var] = 0;
            let coeff = if k == 0 {
                c.clone()
            } else if value.is_zero() {
                continue;
            } else {
                let mut p = value.clone();
                for _ in 1..k {
                    p = p.mul_ref(value);
                }
                c.mul_ref(&p)
            };
            out.insert_add(Expo(m), coeff);
        }
        out
    }

    /// Substitute `var := mono_coeff · Π vars^mono_exps` (a monomial), the
    /// shape taken by the two blow-up charts.
    pub fn subst_monomial(&self, var: usize, mono_coeff: &F, mono_exps: [u32; N]) -> Self {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            let k = e.0[var];
            let mut m = e.0;
            m[var] = 0;
            let mut coeff = c.clone();
            for i in 0..N {
                m[i] += mono_exps[i] * k;
            }
            if k > 0 {
                let mut p = mono_coeff.clone();
                for _ in 1..k {
                    p = p.mul_ref(mono_coeff);
                }
                coeff = coeff.mul_ref(&p);
            }
            out.insert_add(Expo(m), coeff);
        }
        out
    }

    /// Substitute an arbitrary polynomial for one variable (Horner form).
    pub fn subst_poly(&self, var: usize, value: &Self) -> Self {
        let top = match self.degree_in(var) {
            Some(d) => d,
            None => return Poly::zero(),
        };
        // slices[k] = sum of terms with var-exponent k, with that power removed
        let mut slices: Vec<Poly<F, N>> = vec![Poly::zero(); (top + 1) as usize];
        for (e, c) in &self.terms {
            let k = e.0[var] as usize;
            let mut m = e.0;
            m[var] = 0;
            slices[k].insert_add(Expo(m), c.clone());
        }
        let mut acc = slices[top as usize].clone();
        for k in (0..top).rev() {
            acc = acc.mul(value).add(&slices[k as usize]);
        }
        acc
    }

    /// Translate one variable: p ↦ p(..., var + c, ...).
    pub fn shift(&self, var: usize, c: &F) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        let shifted = Poly::var(var, c.one_like()).add(&Poly::constant(c.clone()));
        self.subst_poly(var, &shifted)
    }

    pub fn eval(&self, point: &[F]) -> F {
        assert_eq!(point.len(), N);
        let mut acc = point[0].zero_like();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for i in 0..N {
                for _ in 0..e.0[i] {
                    term = term.mul_ref(&point[i]);
                }
            }
            acc = acc.add_ref(&term);
        }
        acc
    }

    pub fn map_coeffs<G: Coeff>(&self, f: impl Fn(&F) -> G) -> Poly<G, N> {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            let g = f(c);
            if !g.is_zero() {
                out.terms.insert(*e, g);
            }
        }
        out
    }

    /// Largest k with var^k dividing self; u32::MAX for the zero polynomial,
    /// which every power divides.
    pub fn var_multiplicity(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e.0[var]).min().unwrap_or(u32::MAX)
    }

    pub fn div_var_power(&self, var: usize, k: u32) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut m = e.0;
                    assert!(m[var] >= k, "not divisible by the requested power");
                    m[var] -= k;
                    (Expo(m), c.clone())
                })
                .collect(),
        }
    }

    pub fn divisible_by_var(&self, var: usize) -> bool {
        !self.is_zero() && self.var_multiplicity(var) >= 1
    }

    /// Exact multivariate division; None when the division is not exact.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let mut rem = self.clone();
        let mut quo = Poly::zero();
        let (de, dc) = divisor
            .terms
            .iter()
            .next_back()
            .map(|(e, c)| (*e, c.clone()))?;
        let dc_inv = dc.inv().ok()?;
        while !rem.is_zero() {
            let (re, rc) = rem.terms.iter().next_back().map(|(e, c)| (*e, c.clone()))?;
            let mut m = [0u32; N];
            for i in 0..N {
                if re.0[i] < de.0[i] {
                    return None;
                }
                m[i] = re.0[i] - de.0[i];
            }
            let q = rc.mul_ref(&dc_inv);
            let piece = Poly::monomial(q, m);
            rem = rem.sub(&piece.mul(divisor));
            quo = quo.add(&piece);
        }
        Some(quo)
    }

    /// Divide every coefficient by a scalar.
    pub fn div_scalar(&self, c: &F) -> Result<Self, AlgebraError> {
        let inv = c.inv()?;
        Ok(self.mul_scalar(&inv))
    }

    fn display_with(&self, f: &mut fmt::Formatter<'_>, names: &[&str; N]) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // descending canonical order: leading term first
        for (e, c) in self.terms.iter().rev() {
            let mut mono = String::new();
            for i in 0..N {
                match e.0[i] {
                    0 => {}
                    1 => {
                        if !mono.is_empty() {
                            mono.push('*');
                        }
                        mono.push_str(names[i]);
                    }
                    k => {
                        if !mono.is_empty() {
                            mono.push('*');
                        }
                        mono.push_str(&format!("{}^{}", names[i], k));
                    }
                }
            }
            let cs = c.to_string();
            let (sign, mag) = if let Some(stripped) = cs.strip_prefix('-') {
                // only safe when the printed form has no inner +/-: wrap otherwise
                if stripped.contains('+') || stripped.contains('-') {
                    ("+", format!("({})", cs))
                } else {
                    ("-", stripped.to_string())
                }
            } else if cs.contains('+') || cs.contains('-') {
                ("+", format!("({})", cs))
            } else {
                ("+", cs)
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let is_unit = mag == "1";
            if mono.is_empty() {
                write!(f, "{}", mag)?;
            } else if is_unit {
                write!(f, "{}", mono)?;
            } else {
                write!(f, "{}*{}", mag, mono)?;
            }
        }
        Ok(())
    }
}

impl<F: Coeff> Poly<F, 2> {
    /// View as a univariate polynomial in the named variable, requiring the
    /// other variable to be absent.
    pub fn to_upoly(&self, var: usize) -> Option<UPoly<F>> {
        let other = 1 - var;
        if self.terms.keys().any(|e| e.0[other] != 0) {
            return None;
        }
        let mut coeffs: Vec<(u32, F)> = Vec::new();
        for (e, c) in &self.terms {
            coeffs.push((e.0[var], c.clone()));
        }
        Some(UPoly::from_sparse(coeffs))
    }

    /// Restrict to the line {other_var = 0} as a univariate polynomial in `var`.
    pub fn restrict_to_axis(&self, var: usize) -> UPoly<F> {
        let other = 1 - var;
        let mut coeffs: Vec<(u32, F)> = Vec::new();
        for (e, c) in &self.terms {
            if e.0[other] == 0 {
                coeffs.push((e.0[var], c.clone()));
            }
        }
        UPoly::from_sparse(coeffs)
    }

    pub fn from_upoly(p: &UPoly<F>, var: usize) -> Self {
        let mut out = Poly::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut e = [0u32; 2];
            e[var] = k as u32;
            out.terms.insert(Expo(e), c.clone());
        }
        out
    }

    /// Decompose by powers of y into univariate polynomials in x:
    /// index k holds the x-polynomial multiplying y^k.
    fn y_slices(&self) -> Vec<UPoly<F>> {
        let dy = self.degree_in(1).map_or(0, |d| d as usize);
        let mut slices: Vec<Vec<(u32, F)>> = vec![Vec::new(); dy + 1];
        for (e, c) in &self.terms {
            slices[e.0[1] as usize].push((e.0[0], c.clone()));
        }
        slices.into_iter().map(UPoly::from_sparse).collect()
    }

    fn from_y_slices(slices: &[UPoly<F>]) -> Self {
        let mut out = Poly::zero();
        for (k, s) in slices.iter().enumerate() {
            for (j, c) in s.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out.terms
                        .insert(Expo([j as u32, k as u32]), c.clone());
                }
            }
        }
        out
    }

    /// Content with respect to y: gcd in F[x] of the y-slice coefficients.
    fn content_y(&self) -> UPoly<F> {
        let mut acc = UPoly::zero();
        for s in self.y_slices() {
            if !s.is_zero() {
                acc = acc.gcd(&s);
            }
        }
        acc
    }

    /// Greatest common divisor, normalized so the graded-lex leading
    /// coefficient is 1. Content-and-primitive-part recursion with a
    /// primitive pseudo-remainder sequence in y.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            let one = self.terms.values().next().unwrap().one_like();
            return Poly::constant(one);
        }
        // ensure both involve y, else reduce to univariate in x
        let dy_a = self.degree_in(1).unwrap_or(0);
        let dy_b = other.degree_in(1).unwrap_or(0);
        if dy_a == 0 && dy_b == 0 {
            let a = self.restrict_to_axis(0);
            let b = other.restrict_to_axis(0);
            return Poly::from_upoly(&a.gcd(&b), 0).monic();
        }
        let ca = self.content_y();
        let cb = other.content_y();
        let cont = ca.gcd(&cb);
        let pa = Self::from_y_slices(&divide_slices(self.y_slices(), &ca));
        let pb = Self::from_y_slices(&divide_slices(other.y_slices(), &cb));
        let pg = primitive_gcd_in_y(&pa, &pb);
        Poly::from_upoly(&cont, 0).mul(&pg).monic()
    }

    /// Scale so the graded-lex leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.inv().expect("leading coefficient is invertible");
                self.mul_scalar(&inv)
            }
        }
    }
}

fn divide_slices<F: Coeff>(slices: Vec<UPoly<F>>, divisor: &UPoly<F>) -> Vec<UPoly<F>> {
    slices
        .into_iter()
        .map(|s| {
            if s.is_zero() {
                s
            } else {
                s.div_exact(divisor)
                    .expect("content divides every slice")
            }
        })
        .collect()
}

/// Primitive PRS gcd of two y-primitive polynomials, in the variable y.
fn primitive_gcd_in_y<F: Coeff>(a: &Poly<F, 2>, b: &Poly<F, 2>) -> Poly<F, 2> {
    let mut p = a.y_slices();
    let mut q = b.y_slices();
    if p.len() < q.len() {
        std::mem::swap(&mut p, &mut q);
    }
    loop {
        if q.iter().all(|s| s.is_zero()) {
            let poly = Poly::from_y_slices(&p);
            let c = poly.content_y();
            return Poly::from_y_slices(&divide_slices(poly.y_slices(), &c));
        }
        let r = pseudo_rem_slices(&p, &q);
        p = q;
        q = {
            let rp = Poly::from_y_slices(&r);
            if rp.is_zero() {
                vec![UPoly::zero()]
            } else {
                let c = rp.content_y();
                divide_slices(rp.y_slices(), &c)
            }
        };
    }
}

/// Pseudo-remainder of p by q, both as y-slice vectors over F[x].
fn pseudo_rem_slices<F: Coeff>(p: &[UPoly<F>], q: &[UPoly<F>]) -> Vec<UPoly<F>> {
    let dq = q.len() - 1;
    let lq = q[dq].clone();
    let mut rem: Vec<UPoly<F>> = p.to_vec();
    loop {
        while rem.len() > 1 && rem.last().is_some_and(|s| s.is_zero()) {
            rem.pop();
        }
        let dr = rem.len() - 1;
        if dr < dq || (dr == 0 && rem[0].is_zero()) {
            return rem;
        }
        let lr = rem[dr].clone();
        // rem := lq·rem − lr·y^{dr−dq}·q
        for s in rem.iter_mut() {
            *s = s.mul(&lq);
        }
        for (k, qs) in q.iter().enumerate() {
            let sub = qs.mul(&lr);
            let idx = dr - dq + k;
            rem[idx] = rem[idx].sub(&sub);
        }
    }
}

impl<F: Coeff> fmt::Display for Poly<F, 2> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with(f, &["x", "y"])
    }
}

impl Poly4 {
    /// Formal conjugation: swap x ↔ x̄ and y ↔ ȳ, conjugating scalars.
    pub fn conj(&self) -> Self {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            let m = [e.0[1], e.0[0], e.0[3], e.0[2]];
            out.terms.insert(Expo(m), c.conj());
        }
        out
    }

    pub fn to_complex_fn(&self, x: num_complex::Complex64, y: num_complex::Complex64) -> num_complex::Complex64 {
        let mut acc = num_complex::Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut t = c.to_complex64();
            t *= x.powu(e.0[0]);
            t *= x.conj().powu(e.0[1]);
            t *= y.powu(e.0[2]);
            t *= y.conj().powu(e.0[3]);
            acc += t;
        }
        acc
    }
}

/// Embed a bivariate holomorphic polynomial p(x, y) into the four-variable
/// frame (x, x̄, y, ȳ).
pub fn embed_poly2(p: &Poly2<GaussianRational>) -> Poly4 {
    let mut out = Poly::zero();
    for (e, c) in p.terms() {
        out = out.add(&Poly::monomial(c.clone(), [e.0[0], 0, e.0[1], 0]));
    }
    out
}

impl fmt::Display for Poly4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with(f, &["x", "conj(x)", "y", "conj(y)"])
    }
}

impl<F: Coeff, const N: usize> fmt::Debug for Poly<F, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{{")?;
        for (e, c) in &self.terms {
            write!(f, " {:?}:{} ", e.0, c)?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational as Q;

    fn x() -> Poly2<Q> {
        Poly::var(0, Q::one())
    }
    fn y() -> Poly2<Q> {
        Poly::var(1, Q::one())
    }
    fn c(n: i64) -> Poly2<Q> {
        Poly::constant(Q::from_int(n))
    }

    #[test]
    fn graded_lex_order() {
        // x² + xy + y² + x: leading term is x² (graded, then lex with x first)
        let p = x().mul(&x()).add(&x().mul(&y())).add(&y().mul(&y())).add(&x());
        let lead = p.terms().last().unwrap().0;
        // BTreeMap ascending; last is the largest = leading
        assert_eq!(lead.0, [2, 0]);
    }

    #[test]
    fn shift_and_eval() {
        // p = x² + y, shift x by 3: (x+3)² + y = x² + 6x + 9 + y
        let p = x().mul(&x()).add(&y());
        let s = p.shift(0, &Q::from_int(3));
        assert_eq!(
            s,
            x().mul(&x()).add(&x().mul_scalar(&Q::from_int(6))).add(&c(9)).add(&y())
        );
        let v = s.eval(&[Q::from_int(1), Q::from_int(2)]);
        assert_eq!(v, Q::from_int(18));
    }

    #[test]
    fn blowup_substitution_is_monomial() {
        // y := x·t in x·y² gives x·(xt)² = x³t²
        let p = x().mul(&y()).mul(&y());
        let sub = p.subst_monomial(1, &Q::one(), [1, 1]);
        assert_eq!(sub, Poly::monomial(Q::one(), [3, 2]));
    }

    #[test]
    fn gcd_with_common_factor() {
        // gcd(x·(x+y), y·(x+y)) = x+y
        let f = x().mul(&x().add(&y()));
        let g = y().mul(&x().add(&y()));
        assert_eq!(f.gcd(&g), x().add(&y()));
    }

    #[test]
    fn gcd_coprime() {
        let f = x().add(&c(1));
        let g = y().add(&c(2));
        assert_eq!(f.gcd(&g), c(1));
    }

    #[test]
    fn gcd_univariate_contents() {
        // gcd(x²y, x³) = x²
        let f = Poly::monomial(Q::from_int(1), [2, 1]);
        let g = Poly::monomial(Q::from_int(5), [3, 0]);
        assert_eq!(f.gcd(&g), Poly::monomial(Q::one(), [2, 0]));
    }

    #[test]
    fn exact_division() {
        let f = x().add(&y());
        let p = f.mul(&f).mul(&x());
        let q = p.div_exact(&f).unwrap();
        assert_eq!(q, f.mul(&x()));
        assert!(p.div_exact(&y()).is_none());
    }

    #[test]
    fn conj_involution_poly4() {
        let p: Poly4 = Poly::monomial(Q::i(), [1, 0, 2, 1]);
        assert_eq!(p.conj().conj(), p);
    }

    #[test]
    fn gcd_divides_products() {
        // gcd(f·h, g·h) is h up to normalization when f, g are coprime
        let f = x().add(&c(1));
        let g = y().add(&c(2));
        let hs = vec![
            x().add(&y()),
            x().mul(&y()).add(&c(3)),
            y().pow(2).sub(&x().pow(3)),
            x().mul_scalar(&Q::from_ratio_pair((2, 3), (1, 5))),
        ];
        for h in hs {
            let gg = f.mul(&h).gcd(&g.mul(&h));
            assert_eq!(gg, h.monic());
        }
    }

    #[test]
    fn display_matches_grammar() {
        let p = x()
            .mul(&x())
            .mul_scalar(&Q::from_ratio(3, 2))
            .sub(&y())
            .add(&c(1));
        assert_eq!(p.to_string(), "3/2*x^2 - y + 1");
    }
}
