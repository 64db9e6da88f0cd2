//! Field elements of ℚ ⊂ ℚ(i) ⊂ ℚ(i)(√m), stored as
//! (re + im·i) + (sre + sim·i)·√m with reduced arbitrary-precision
//! rational components.

use super::{ExactError, ExactResult};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Coefficient domain: the rationals, the Gaussian rationals, or a quadratic
/// extension of the Gaussian rationals by one squarefree root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Domain {
    Rational,
    Gaussian,
    /// ℚ(i)(√m) with m squarefree and ≥ 2.
    Quad(u64),
}

impl Domain {
    /// Validated constructor for a quadratic extension.
    pub fn quad(m: i64) -> ExactResult<Domain> {
        if m < 2 || !is_squarefree(m as u64) {
            return Err(ExactError::BadRadicand { m });
        }
        Ok(Domain::Quad(m as u64))
    }

    /// Smallest domain containing both, if one exists.
    pub fn join(self, other: Domain) -> ExactResult<Domain> {
        use Domain::*;
        match (self, other) {
            (Rational, d) | (d, Rational) => Ok(d),
            (Gaussian, d) | (d, Gaussian) => Ok(d),
            (Quad(m1), Quad(m2)) if m1 == m2 => Ok(Quad(m1)),
            (Quad(m1), Quad(m2)) => Err(ExactError::MixedRadicals { m1, m2 }),
        }
    }

    /// Whether `other` embeds into `self`.
    pub fn contains(self, other: Domain) -> bool {
        matches!(self.join(other), Ok(d) if d == self)
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Rational => write!(f, "rational"),
            Domain::Gaussian => write!(f, "gaussian"),
            Domain::Quad(m) => write!(f, "quad:{m}"),
        }
    }
}

pub(crate) fn is_squarefree(mut m: u64) -> bool {
    let mut p = 2u64;
    while p * p <= m {
        if m % (p * p) == 0 {
            return false;
        }
        while m % p == 0 {
            m /= p;
        }
        p += 1;
    }
    true
}

/// An exact scalar (re + im·i) + (sre + sim·i)·√m in its domain.
///
/// Invariants: components are reduced fractions with positive denominators
/// (guaranteed by `BigRational`); `Rational` elements have im = sre = sim = 0;
/// `Gaussian` elements have sre = sim = 0.
#[derive(Debug, Clone)]
pub struct FieldElement {
    dom: Domain,
    re: BigRational,
    im: BigRational,
    sre: BigRational,
    sim: BigRational,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        // Values are equal iff the components agree; when both radical parts
        // vanish the roots m may differ without affecting the value.
        if self.re != other.re || self.im != other.im {
            return false;
        }
        let s0 = self.sre.is_zero() && self.sim.is_zero();
        let o0 = other.sre.is_zero() && other.sim.is_zero();
        match (s0, o0) {
            (true, true) => true,
            (false, false) => {
                self.sre == other.sre && self.sim == other.sim && self.dom == other.dom
            }
            _ => false,
        }
    }
}
impl Eq for FieldElement {}

impl FieldElement {
    fn make(dom: Domain, re: BigRational, im: BigRational, sre: BigRational, sim: BigRational) -> Self {
        FieldElement { dom, re, im, sre, sim }
    }

    pub fn zero(dom: Domain) -> Self {
        Self::make(dom, BigRational::zero(), BigRational::zero(), BigRational::zero(), BigRational::zero())
    }

    pub fn one(dom: Domain) -> Self {
        Self::from_rational(BigRational::one()).promote_unchecked(dom)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self::make(Domain::Rational, q, BigRational::zero(), BigRational::zero(), BigRational::zero())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::make(
            Domain::Gaussian,
            BigRational::zero(),
            BigRational::one(),
            BigRational::zero(),
            BigRational::zero(),
        )
    }

    /// √m for squarefree m ≥ 2.
    pub fn sqrt(m: i64) -> ExactResult<Self> {
        let dom = Domain::quad(m)?;
        Ok(Self::make(dom, BigRational::zero(), BigRational::zero(), BigRational::one(), BigRational::zero()))
    }

    pub fn domain(&self) -> Domain {
        self.dom
    }

    /// Components (re, im, sre, sim).
    pub fn components(&self) -> (&BigRational, &BigRational, &BigRational, &BigRational) {
        (&self.re, &self.im, &self.sre, &self.sim)
    }

    /// The rational value, if the element is purely rational.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.im.is_zero() && self.sre.is_zero() && self.sim.is_zero() {
            Some(&self.re)
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero() && self.sre.is_zero() && self.sim.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero() && self.sre.is_zero() && self.sim.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    /// True when the element lies in ℝ (no imaginary component anywhere).
    pub fn is_real(&self) -> bool {
        self.im.is_zero() && self.sim.is_zero()
    }

    /// Retag with a larger domain without changing the value.
    fn promote_unchecked(mut self, dom: Domain) -> Self {
        self.dom = dom;
        self
    }

    /// Promote to `dom`; errors when the target does not contain the value.
    pub fn promote(&self, dom: Domain) -> ExactResult<Self> {
        let joined = self.dom.join(dom)?;
        if joined != dom {
            return Err(ExactError::DomainTooSmall { required: joined, found: dom });
        }
        Ok(self.clone().promote_unchecked(dom))
    }

    fn join_dom(&self, other: &Self) -> Domain {
        self.dom.join(other.dom).unwrap_or_else(|e| {
            panic!("field elements from incompatible domains combined: {e}")
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        let dom = self.join_dom(other);
        Self::make(
            dom,
            &self.re + &other.re,
            &self.im + &other.im,
            &self.sre + &other.sre,
            &self.sim + &other.sim,
        )
    }

    pub fn neg(&self) -> Self {
        Self::make(self.dom, -self.re.clone(), -self.im.clone(), -self.sre.clone(), -self.sim.clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let dom = self.join_dom(other);
        let m = match dom {
            Domain::Quad(m) => BigRational::from_integer(BigInt::from(m)),
            _ => BigRational::zero(),
        };
        // (u1 + v1√m)(u2 + v2√m) = (u1u2 + m·v1v2) + (u1v2 + v1u2)√m
        // over the Gaussian rationals u, v.
        let (a1, b1, c1, d1) = (&self.re, &self.im, &self.sre, &self.sim);
        let (a2, b2, c2, d2) = (&other.re, &other.im, &other.sre, &other.sim);
        let u_re = a1 * a2 - b1 * b2 + &m * (c1 * c2 - d1 * d2);
        let u_im = a1 * b2 + b1 * a2 + &m * (c1 * d2 + d1 * c2);
        let v_re = a1 * c2 - b1 * d2 + c1 * a2 - d1 * b2;
        let v_im = a1 * d2 + b1 * c2 + c1 * b2 + d1 * a2;
        Self::make(dom, u_re, u_im, v_re, v_im)
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> ExactResult<Self> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        // 1/(u + v√m) = (u − v√m)/(u² − m v²); the Gaussian norm below is
        // nonzero because √m is irrational over ℚ(i) for squarefree m ≥ 2.
        let conj = Self::make(self.dom, self.re.clone(), self.im.clone(), -self.sre.clone(), -self.sim.clone());
        let n = self.mul(&conj);
        debug_assert!(n.sre.is_zero() && n.sim.is_zero());
        // Gaussian inverse of n = x + y i: (x − y i)/(x² + y²).
        let norm = &n.re * &n.re + &n.im * &n.im;
        if norm.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let g = Self::make(self.dom, &n.re / &norm, -(&n.im / &norm), BigRational::zero(), BigRational::zero());
        Ok(conj.mul(&g))
    }

    pub fn div(&self, other: &Self) -> ExactResult<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.dom);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Complex conjugation (i ↦ −i); fixes √m.
    pub fn conj(&self) -> Self {
        Self::make(self.dom, self.re.clone(), -self.im.clone(), self.sre.clone(), -self.sim.clone())
    }
}

fn rat_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Render a Gaussian value `re + im·i` without outer parentheses; the caller
/// adds them. Produces e.g. `1/2+3*i`, `-2*i`, `5`.
fn gaussian_inner(re: &BigRational, im: &BigRational) -> String {
    if im.is_zero() {
        return rat_string(re);
    }
    let im_part = if im.is_one() {
        "i".to_string()
    } else if (-im).is_one() {
        "-i".to_string()
    } else {
        format!("{}*i", rat_string(im))
    };
    if re.is_zero() {
        im_part
    } else if im.is_positive() {
        format!("{}+{}", rat_string(re), im_part)
    } else {
        format!("{}{}", rat_string(re), im_part)
    }
}

impl fmt::Display for FieldElement {
    /// Canonical form: plain rationals print bare (`-5/2`); anything larger
    /// prints parenthesized (`(1/2+3*i)`, `(4-sqrt(6))`, `((1+i)*sqrt(2))`)
    /// and re-parses to the same value.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sre.is_zero() && self.sim.is_zero() {
            if self.im.is_zero() {
                return write!(f, "{}", rat_string(&self.re));
            }
            return write!(f, "({})", gaussian_inner(&self.re, &self.im));
        }
        let m = match self.dom {
            Domain::Quad(m) => m,
            _ => unreachable!("radical part requires a quad domain"),
        };
        // Radical factor string, with its sign split off when it is simple.
        let (neg, factor) = if self.sim.is_zero() {
            if self.sre.is_one() {
                (false, format!("sqrt({m})"))
            } else if (-&self.sre).is_one() {
                (true, format!("sqrt({m})"))
            } else if self.sre.is_positive() {
                (false, format!("{}*sqrt({m})", rat_string(&self.sre)))
            } else {
                (true, format!("{}*sqrt({m})", rat_string(&(-&self.sre))))
            }
        } else {
            (false, format!("({})*sqrt({m})", gaussian_inner(&self.sre, &self.sim)))
        };
        if self.re.is_zero() && self.im.is_zero() {
            if neg {
                write!(f, "(-{factor})")
            } else {
                write!(f, "({factor})")
            }
        } else {
            let u = gaussian_inner(&self.re, &self.im);
            write!(f, "({}{}{})", u, if neg { "-" } else { "+" }, factor)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squarefree_detection() {
        assert!(is_squarefree(2));
        assert!(is_squarefree(6));
        assert!(is_squarefree(15));
        assert!(!is_squarefree(8));
        assert!(!is_squarefree(12));
    }

    #[test]
    fn domain_join_rules() {
        assert_eq!(Domain::Rational.join(Domain::Gaussian).unwrap(), Domain::Gaussian);
        assert_eq!(Domain::Gaussian.join(Domain::Quad(6)).unwrap(), Domain::Quad(6));
        assert!(Domain::Quad(2).join(Domain::Quad(3)).is_err());
        assert!(Domain::quad(8).is_err());
    }

    #[test]
    fn quad_inverse() {
        // (4 − √6)(4 + √6) = 10, so 1/(4−√6) = (4+√6)/10.
        let x = FieldElement::from_integer(4).sub(&FieldElement::sqrt(6).unwrap());
        let inv = x.inv().unwrap();
        assert!(x.mul(&inv).is_one());
    }

    #[test]
    fn gaussian_inverse() {
        let x = FieldElement::from_integer(3).add(&FieldElement::i().mul(&FieldElement::from_integer(4)));
        assert!(x.mul(&x.inv().unwrap()).is_one());
    }

    #[test]
    fn display_round_shapes() {
        assert_eq!(FieldElement::from_ratio(-5, 2).to_string(), "-5/2");
        let g = FieldElement::from_ratio(1, 2).add(&FieldElement::i().mul(&FieldElement::from_integer(3)));
        assert_eq!(g.to_string(), "(1/2+3*i)");
        let q = FieldElement::from_integer(4).sub(&FieldElement::sqrt(6).unwrap());
        assert_eq!(q.to_string(), "(4-sqrt(6))");
    }
}
