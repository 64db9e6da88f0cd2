//! Sparse multivariate polynomials over a [`FieldElement`] domain, ordered by
//! graded lexicographic order on the declared variable list.

use super::element::{Domain, FieldElement};
use super::{ExactError, ExactResult};
use num_rational::BigRational;
use num_traits::Zero;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector; `Ord` is graded lexicographic (total degree first, then
/// lexicographic with earlier variables weighing more), so the maximum of the
/// map order is the leading monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial: declared variable order, coefficient domain, and a map
/// from exponent vectors to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    dom: Domain,
    terms: BTreeMap<Mono, FieldElement>,
}

impl MultiPoly {
    pub fn zero(vars: &[&str], dom: Domain) -> Self {
        MultiPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            dom,
            terms: BTreeMap::new(),
        }
    }

    pub fn zero_named(vars: Vec<String>, dom: Domain) -> Self {
        MultiPoly { vars, dom, terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[&str], value: FieldElement) -> Self {
        let mut p = Self::zero(vars, value.domain());
        p.add_term(Mono(vec![0; p.vars.len()]), value);
        p
    }

    pub fn var(vars: &[&str], name: &str, dom: Domain) -> ExactResult<Self> {
        let mut p = Self::zero(vars, dom);
        let idx = p
            .vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| ExactError::UnknownVariable { pos: 0, name: name.to_string() })?;
        let mut e = vec![0; p.vars.len()];
        e[idx] = 1;
        p.add_term(Mono(e), FieldElement::one(dom));
        Ok(p)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn domain(&self) -> Domain {
        self.dom
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &FieldElement)> {
        self.terms.iter()
    }

    /// Add one term, merging and dropping zeros; widens the polynomial domain
    /// as needed (panics on incompatible quad domains, which the parsing and
    /// construction layers rule out).
    pub fn add_term(&mut self, mono: Mono, coeff: FieldElement) {
        assert_eq!(mono.0.len(), self.vars.len(), "exponent vector length mismatch");
        if coeff.is_zero() {
            return;
        }
        self.dom = self.dom.join(coeff.domain()).expect("incompatible coefficient domains");
        match self.terms.remove(&mono) {
            None => {
                self.terms.insert(mono, coeff);
            }
            Some(old) => {
                let sum = old.add(&coeff);
                if !sum.is_zero() {
                    self.terms.insert(mono, sum);
                }
            }
        }
    }

    fn check_same_vars(&self, other: &Self) -> ExactResult<()> {
        if self.vars != other.vars {
            return Err(ExactError::VariableMismatch {
                expected: self.vars.clone(),
                got: other.vars.clone(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same_vars(other).expect("polynomial variable mismatch");
        let mut out = self.clone();
        out.dom = out.dom.join(other.dom).expect("incompatible domains");
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &FieldElement) -> Self {
        if k.is_zero() {
            return Self::zero_named(self.vars.clone(), self.dom);
        }
        let mut out = Self::zero_named(self.vars.clone(), self.dom);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.mul(k));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_same_vars(other).expect("polynomial variable mismatch");
        let mut out = Self::zero_named(self.vars.clone(), self.dom.join(other.dom).expect("incompatible domains"));
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.mul(c2));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::constant_in(self, FieldElement::one(self.dom));
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    fn constant_in(like: &Self, value: FieldElement) -> Self {
        let mut p = Self::zero_named(like.vars.clone(), like.dom);
        p.add_term(Mono(vec![0; like.vars.len()]), value);
        p
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Mono::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var_idx: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var_idx]).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Mono::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Leading (graded-lex greatest) term.
    pub fn leading_term(&self) -> Option<(&Mono, &FieldElement)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Option<&FieldElement> {
        self.leading_term().map(|(_, c)| c)
    }

    /// Formal partial derivative with respect to variable index `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero_named(self.vars.clone(), self.dom);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] -= 1;
            out.add_term(Mono(exps), c.mul(&FieldElement::from_integer(e as i64)));
        }
        out
    }

    /// All first partial derivatives, in variable order.
    pub fn gradient(&self) -> Vec<Self> {
        (0..self.vars.len()).map(|i| self.derivative(i)).collect()
    }

    /// Substitute each variable by the matching polynomial (all images share
    /// one variable list and compatible domains).
    pub fn substitute(&self, images: &[MultiPoly]) -> ExactResult<MultiPoly> {
        if images.len() != self.vars.len() {
            return Err(ExactError::Invalid(format!(
                "substitute: expected {} images, got {}",
                self.vars.len(),
                images.len()
            )));
        }
        let mut out_vars: Option<Vec<String>> = None;
        let mut dom = self.dom;
        for img in images {
            match &out_vars {
                None => out_vars = Some(img.vars.clone()),
                Some(v) => {
                    if v != &img.vars {
                        return Err(ExactError::VariableMismatch {
                            expected: v.clone(),
                            got: img.vars.clone(),
                        });
                    }
                }
            }
            dom = dom.join(img.dom)?;
        }
        let out_vars = out_vars.expect("at least one variable");
        // Cache powers of each image up to the degree that is actually used.
        let mut powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|img| vec![MultiPoly::constant_in(img, FieldElement::one(dom))])
            .collect();
        for (i, img) in images.iter().enumerate() {
            let maxe = self.degree_in(i);
            for _ in 0..maxe {
                let next = powers[i].last().unwrap().mul(img);
                powers[i].push(next);
            }
        }
        let mut out = MultiPoly::zero_named(out_vars, dom);
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant_in(&powers[0][0], c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&powers[i][e as usize]);
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Evaluate at a point (one scalar per variable).
    pub fn eval(&self, point: &[FieldElement]) -> FieldElement {
        assert_eq!(point.len(), self.vars.len(), "eval: wrong point length");
        let dom = point
            .iter()
            .fold(self.dom, |d, v| d.join(v.domain()).expect("incompatible domains"));
        let mut acc = FieldElement::zero(dom);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                t = t.mul(&point[i].pow(e));
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Apply a scalar map (e.g. complex conjugation) to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&FieldElement) -> FieldElement) -> Self {
        let mut out = Self::zero_named(self.vars.clone(), self.dom);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Exact multivariate division: returns q with self = q·divisor, or None.
    pub fn trial_divide(&self, divisor: &Self) -> Option<Self> {
        self.check_same_vars(divisor).ok()?;
        let (dm, dc) = divisor.leading_term()?;
        let dc_inv = dc.inv().ok()?;
        let mut rem = self.clone();
        let mut quot = Self::zero_named(self.vars.clone(), self.dom.join(divisor.dom).ok()?);
        while let Some((lm, lc)) = rem.leading_term() {
            if !dm.divides(lm) {
                return None;
            }
            let qm = lm.div(dm);
            let qc = lc.mul(&dc_inv);
            let mut qterm = Self::zero_named(self.vars.clone(), quot.dom);
            qterm.add_term(qm, qc);
            rem = rem.sub(&qterm.mul(divisor));
            quot = quot.add(&qterm);
        }
        Some(quot)
    }

    /// Strip each candidate factor as often as it exactly divides, then make
    /// the result monic (leading coefficient 1). Returns the residue and the
    /// multiplicity stripped per candidate.
    pub fn primitive_part(&self, candidates: &[MultiPoly]) -> (MultiPoly, Vec<u32>) {
        let mut mults = vec![0u32; candidates.len()];
        let mut cur = self.clone();
        if cur.is_zero() {
            return (cur, mults);
        }
        let mut progress = true;
        while progress {
            progress = false;
            for (i, cand) in candidates.iter().enumerate() {
                if cand.total_degree() == 0 {
                    continue;
                }
                while let Some(q) = cur.trial_divide(cand) {
                    cur = q;
                    mults[i] += 1;
                    progress = true;
                    if cur.total_degree() == 0 {
                        progress = false;
                        break;
                    }
                }
            }
        }
        (cur.monic(), mults)
    }

    /// Scale so the leading coefficient is 1 (canonical projective
    /// representative).
    pub fn monic(&self) -> MultiPoly {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Equal up to a nonzero scalar factor.
    pub fn proportional_to(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.monic() == other.monic()
    }

    /// Reinterpret over a different (compatible) variable list of the same
    /// length, e.g. renaming (x,y,z,w) → (a,b,c,d).
    pub fn rename_vars(&self, vars: &[&str]) -> ExactResult<MultiPoly> {
        if vars.len() != self.vars.len() {
            return Err(ExactError::Invalid("rename_vars: arity mismatch".into()));
        }
        let mut out = MultiPoly::zero(vars, self.dom);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }
}

/// One printed term: `sign` ('+'/'-') plus the magnitude text.
fn term_string(vars: &[String], mono: &Mono, coeff: &FieldElement) -> (char, String) {
    let mut mono_parts: Vec<String> = Vec::new();
    for (i, &e) in mono.0.iter().enumerate() {
        match e {
            0 => {}
            1 => mono_parts.push(vars[i].clone()),
            _ => mono_parts.push(format!("{}^{}", vars[i], e)),
        }
    }
    let mono_str = mono_parts.join("*");
    // Pull the sign out only for coefficients whose printed form is a plain
    // rational; parenthesized coefficients keep their sign inside.
    if let Some(q) = coeff.as_rational() {
        let sign = if q < &BigRational::zero() { '-' } else { '+' };
        let mag = {
            let aq = if q < &BigRational::zero() { -q.clone() } else { q.clone() };
            let f = FieldElement::from_rational(aq);
            if f.is_one() && !mono_str.is_empty() {
                mono_str.clone()
            } else if mono_str.is_empty() {
                f.to_string()
            } else {
                format!("{}*{}", f, mono_str)
            }
        };
        (sign, mag)
    } else {
        let c = coeff.to_string();
        let s = if mono_str.is_empty() { c } else { format!("{}*{}", c, mono_str) };
        ('+', s)
    }
}

impl fmt::Display for MultiPoly {
    /// Canonical printing: terms in descending graded-lex order; reparsing the
    /// output reproduces the polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let (sign, mag) = term_string(&self.vars, m, c);
            if first {
                if sign == '-' {
                    write!(f, "-{}", mag)?;
                } else {
                    write!(f, "{}", mag)?;
                }
                first = false;
            } else if sign == '-' {
                write!(f, " - {}", mag)?;
            } else {
                write!(f, " + {}", mag)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const XYZW: [&str; 4] = ["x", "y", "z", "w"];

    fn var(name: &str) -> MultiPoly {
        MultiPoly::var(&XYZW, name, Domain::Rational).unwrap()
    }

    #[test]
    fn grlex_ordering() {
        // x^2 > x*y > y^2 > x > y within mixed degrees sorted by degree first.
        let x2 = Mono(vec![2, 0, 0, 0]);
        let xy = Mono(vec![1, 1, 0, 0]);
        let y2 = Mono(vec![0, 2, 0, 0]);
        let x = Mono(vec![1, 0, 0, 0]);
        assert!(x2 > xy && xy > y2 && y2 > x);
    }

    #[test]
    fn difference_of_squares_division() {
        let x = var("x");
        let y = var("y");
        let num = x.mul(&x).sub(&y.mul(&y));
        let div = x.sub(&y);
        let q = num.trial_divide(&div).unwrap();
        assert_eq!(q, x.add(&y));
        // x² + y² is not divisible by x − y.
        assert!(x.mul(&x).add(&y.mul(&y)).trial_divide(&div).is_none());
    }

    #[test]
    fn primitive_part_strips_candidates() {
        let x = var("x");
        let y = var("y");
        let z = var("z");
        let w = var("w");
        let q = x.pow(2).add(&y.pow(2)).add(&z.pow(2));
        let fpoly = x.pow(2).sub(&w.pow(2));
        let raw = w.pow(2).mul(&q).mul(&fpoly);
        let (res, mults) = raw.primitive_part(&[w.clone(), q.clone()]);
        assert_eq!(mults, vec![2, 1]);
        assert!(res.proportional_to(&fpoly));
    }

    #[test]
    fn substitution_homogeneity() {
        let x = var("x");
        let y = var("y");
        let p = x.pow(2).add(&y.pow(2));
        // x → x+y, y → x−y doubles nothing; stays homogeneous of degree 2.
        let imgs = vec![x.add(&y), x.sub(&y), var("z"), var("w")];
        let s = p.substitute(&imgs).unwrap();
        assert!(s.is_homogeneous());
        assert_eq!(s.total_degree(), 2);
    }
}
