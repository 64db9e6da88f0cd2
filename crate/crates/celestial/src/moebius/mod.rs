//! Möbius geometry over exact fields: stereographic machinery, surface
//! type/cyclicity, sphere-system models, map images, singular-locus
//! verification, and circle-family checks.
//!
//! Throughout, `P³` carries coordinates `(x, y, z, w)` with the plane at
//! infinity `w = 0` and the absolute conic `x² + y² + z² = w = 0`; the
//! three-sphere lives in `P⁴` with coordinates `(a, b, c, d, e)` as the
//! quadric `a² + b² + c² + d² − e² = 0`.

mod checks;
mod maps;

pub use checks::{
    is_singular_point, pencil_circle_check, plane_section_check, sng_budget_check, verify_param,
    verify_singular_curve, SectionKind,
};
pub use maps::{
    moebius_map, parse_word, stereographic_inverse, stereographic_projection, Generator,
    MoebiusMapSpec,
};

use crate::exact::{parse_expression, Domain, ExactError, MultiPoly};
use thiserror::Error;

/// Coordinates of the ambient `P³`.
pub const P3_VARS: [&str; 4] = ["x", "y", "z", "w"];
/// Coordinates of the ambient `P⁴` containing the three-sphere.
pub const P4_VARS: [&str; 5] = ["a", "b", "c", "d", "e"];

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum MoebiusError {
    #[error("polynomial must be nonzero and homogeneous")]
    NotHomogeneous,
    #[error("expected a polynomial in variables {expected:?}, got {got:?}")]
    WrongAmbient { expected: Vec<String>, got: Vec<String> },
    #[error("model division failed: ({0})^{1} does not divide the reduced pullback")]
    ModelDivision(String, u32),
    #[error("image inconsistency: pullback of the image is not divisible by the source")]
    InconsistentImage,
    #[error("point does not lie on the variety (equation {0} is nonzero)")]
    PointNotOnVariety(usize),
    #[error("pencil axis does not lie on the surface")]
    AxisNotOnSurface,
    #[error("residual section has degree {0}, expected 2 (circle) or 4 (circle pair)")]
    ResidualNotConic(u32),
    #[error("plane form is degenerate or not linear")]
    BadPlane,
    #[error("unknown map word token `{0}`")]
    BadWord(String),
    #[error("word does not map P3 to P3 (component count {0})")]
    BadWordShape(usize),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

pub type MoebiusResult<T> = Result<T, MoebiusError>;

/// A nonzero homogeneous polynomial cutting a surface in `P³` (or a
/// hypersurface in `P⁴`).
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectiveHypersurface {
    poly: MultiPoly,
}

impl ProjectiveHypersurface {
    pub fn new(poly: MultiPoly) -> MoebiusResult<Self> {
        if poly.is_zero() || !poly.is_homogeneous() {
            return Err(MoebiusError::NotHomogeneous);
        }
        let vars: Vec<&str> = poly.vars().iter().map(|s| s.as_str()).collect();
        if vars != P3_VARS && vars != P4_VARS {
            return Err(MoebiusError::WrongAmbient {
                expected: P3_VARS.iter().map(|s| s.to_string()).collect(),
                got: poly.vars().to_vec(),
            });
        }
        Ok(Self { poly })
    }

    /// Parse an equation in the `(x, y, z, w)` coordinates of `P³`.
    pub fn parse(text: &str, dom: Domain) -> MoebiusResult<Self> {
        Self::new(parse_expression(text, &P3_VARS, dom)?)
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn degree(&self) -> u32 {
        self.poly.total_degree()
    }

    pub fn in_p3(&self) -> bool {
        self.poly.vars().len() == 4
    }
}

impl std::fmt::Display for ProjectiveHypersurface {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// The fixed three-sphere equation `a² + b² + c² + d² − e²`.
pub fn sphere_equation(dom: Domain) -> MultiPoly {
    parse_expression("a^2+b^2+c^2+d^2-e^2", &P4_VARS, dom).expect("fixed equation")
}

/// A surface on the three-sphere, cut by the sphere `S` together with one
/// further homogeneous equation `Q` (kept with `e`-degree at most 1).
#[derive(Debug, Clone, PartialEq)]
pub struct SphereSystem {
    s: MultiPoly,
    q: MultiPoly,
}

impl SphereSystem {
    pub fn sphere(&self) -> &MultiPoly {
        &self.s
    }

    pub fn cut(&self) -> &MultiPoly {
        &self.q
    }

    pub fn equations(&self) -> [&MultiPoly; 2] {
        [&self.s, &self.q]
    }

    /// Equality of the cut equations modulo the sphere, up to a nonzero
    /// scalar factor.
    pub fn cut_matches(&self, other: &MultiPoly) -> bool {
        let a = reduce_mod_sphere(&self.q);
        let b = reduce_mod_sphere(other);
        a.proportional_to(&b) || a.proportional_to(&b.neg())
    }
}

impl std::fmt::Display for SphereSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} = 0,  {} = 0", self.s, self.q)
    }
}

/// Rewrite `e² → a² + b² + c² + d²` until the `e`-degree is at most 1.
/// The sphere equation is monic in `e²`, so this reduction terminates and
/// yields the canonical representative modulo the sphere ideal.
pub fn reduce_mod_sphere(p: &MultiPoly) -> MultiPoly {
    let dom = p.domain();
    let radius = parse_expression("a^2+b^2+c^2+d^2", &P4_VARS, dom).expect("fixed equation");
    let e_idx = 4;
    let mut cur = p.clone();
    while cur.degree_in(e_idx) >= 2 {
        let mut low = MultiPoly::zero(&P4_VARS, dom);
        let mut high = MultiPoly::zero(&P4_VARS, dom);
        for (m, c) in cur.terms() {
            if m.0[e_idx] >= 2 {
                let mut stripped = m.clone();
                stripped.0[e_idx] -= 2;
                high.add_term(stripped, c.clone());
            } else {
                low.add_term(m.clone(), c.clone());
            }
        }
        cur = low.add(&high.mul(&radius));
    }
    cur
}

/// Split a polynomial of `e`-degree ≤ 1 as `p = p₀ + e·p₁`.
fn split_e(p: &MultiPoly) -> (MultiPoly, MultiPoly) {
    let dom = p.domain();
    let mut p0 = MultiPoly::zero(&P4_VARS, dom);
    let mut p1 = MultiPoly::zero(&P4_VARS, dom);
    for (m, c) in p.terms() {
        match m.0[4] {
            0 => p0.add_term(m.clone(), c.clone()),
            1 => {
                let mut stripped = m.clone();
                stripped.0[4] = 0;
                p1.add_term(stripped, c.clone());
            }
            _ => panic!("split_e: e-degree not reduced"),
        }
    }
    (p0, p1)
}

/// The parametrization `(x, y, z, w) = (s² − t², i(s² + t²), 2st, 0)` of the
/// absolute conic over ℚ(i).
fn absolute_conic_param(dom: Domain) -> MoebiusResult<Vec<MultiPoly>> {
    let dom = dom.join(Domain::Gaussian)?;
    let st = ["s", "t"];
    Ok(vec![
        parse_expression("s^2-t^2", &st, dom)?,
        parse_expression("i*(s^2+t^2)", &st, dom)?,
        parse_expression("2*s*t", &st, dom)?,
        MultiPoly::zero(&st, dom),
    ])
}

/// The multiplicity with which a surface in `P³` contains the absolute
/// conic: the largest `c` such that every partial derivative of order
/// below `c` vanishes identically along the conic's parametrization.
pub fn cyclicity(surface: &ProjectiveHypersurface) -> MoebiusResult<u32> {
    assert!(surface.in_p3(), "cyclicity is defined for surfaces in P3");
    let param = absolute_conic_param(surface.poly.domain())?;
    let vanishes = |p: &MultiPoly| -> MoebiusResult<bool> { Ok(p.substitute(&param)?.is_zero()) };
    let mut level = vec![surface.poly.clone()];
    let mut c = 0;
    while c <= surface.degree() {
        for p in &level {
            if !vanishes(p)? {
                return Ok(c);
            }
        }
        c += 1;
        level = level.iter().flat_map(|p| p.gradient()).collect();
    }
    Ok(c)
}

/// Degree and cyclicity `(d, c)` of a surface in `P³`.
pub fn surface_type(surface: &ProjectiveHypersurface) -> MoebiusResult<(u32, u32)> {
    Ok((surface.degree(), cyclicity(surface)?))
}

/// The degree `2(d − c)` of the model of the surface on the three-sphere.
pub fn moebius_degree(surface: &ProjectiveHypersurface) -> MoebiusResult<u32> {
    let (d, c) = surface_type(surface)?;
    Ok(2 * (d - c))
}

/// The model of a `P³` surface on the three-sphere: pull the equation back
/// through stereographic projection `(a, b, c, e − d)`, reduce modulo the
/// sphere, and divide out the exceptional factor `(e − d)^c` where `c` is
/// the cyclicity. Division is exact linear algebra in the quotient ring:
/// with the reduced remainder written as `r₀ + e·r₁`, the quotient
/// `q₀ + e·q₁` of one `(e − d)` division satisfies
/// `q₁ = (r₀ + d·r₁)/(a² + b² + c²)` and `q₀ = r₁ + d·q₁`.
pub fn moebius_model(surface: &ProjectiveHypersurface) -> MoebiusResult<SphereSystem> {
    assert!(surface.in_p3(), "moebius_model is defined for surfaces in P3");
    let c = cyclicity(surface)?;
    let dom = surface.poly.domain();
    let images: Vec<MultiPoly> = ["a", "b", "c", "e-d"]
        .iter()
        .map(|t| parse_expression(t, &P4_VARS, dom))
        .collect::<Result<_, _>>()?;
    let mut r = reduce_mod_sphere(&surface.poly.substitute(&images)?);
    let disc = parse_expression("a^2+b^2+c^2", &P4_VARS, dom)?;
    for step in 0..c {
        let (r0, r1) = split_e(&r);
        let q1 = r0
            .add(&r1.mul(&parse_expression("d", &P4_VARS, dom)?))
            .trial_divide(&disc)
            .ok_or_else(|| MoebiusError::ModelDivision("e-d".to_string(), step + 1))?;
        let q0 = r1.add(&q1.mul(&parse_expression("d", &P4_VARS, dom)?));
        let e = parse_expression("e", &P4_VARS, dom)?;
        r = q0.add(&e.mul(&q1));
    }
    Ok(SphereSystem { s: sphere_equation(dom), q: r.monic() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_expression;

    fn p3(text: &str, dom: Domain) -> ProjectiveHypersurface {
        ProjectiveHypersurface::parse(text, dom).unwrap()
    }

    #[test]
    fn cyclicity_of_basic_surfaces() {
        let dom = Domain::Rational;
        assert_eq!(cyclicity(&p3("x", dom)).unwrap(), 0);
        assert_eq!(cyclicity(&p3("x^2+y^2+z^2-w^2", dom)).unwrap(), 1);
        // A product of two spheres contains the absolute conic twice.
        assert_eq!(
            cyclicity(&p3("(x^2+y^2+z^2-w^2)*(x^2+y^2+z^2-4*w^2)", dom)).unwrap(),
            2
        );
        let dupin = p3("2*z*(x^2+y^2+z^2)+w*((x+y+z+w)^2+2*z^2)", dom);
        assert_eq!(surface_type(&dupin).unwrap(), (3, 1));
        assert_eq!(moebius_degree(&dupin).unwrap(), 4);
    }

    #[test]
    fn model_of_sphere_is_great_hyperplane() {
        let model = moebius_model(&p3("x^2+y^2+z^2-w^2", Domain::Rational)).unwrap();
        let d = parse_expression("d", &P4_VARS, Domain::Rational).unwrap();
        assert!(model.cut().proportional_to(&d));
        assert_eq!(moebius_degree(&p3("x^2+y^2+z^2-w^2", Domain::Rational)).unwrap(), 2);
    }

    #[test]
    fn model_of_plane_is_hyperplane_section() {
        let model = moebius_model(&p3("x", Domain::Rational)).unwrap();
        let expect = parse_expression("a", &P4_VARS, Domain::Rational).unwrap();
        assert!(model.cut().proportional_to(&expect));
    }

    #[test]
    fn reduce_mod_sphere_kills_sphere_multiples() {
        let dom = Domain::Rational;
        let s = sphere_equation(dom);
        let f = parse_expression("(a+2*e)*(c-d)", &P4_VARS, dom).unwrap();
        let reduced = reduce_mod_sphere(&s.mul(&f));
        assert!(reduced.is_zero());
    }
}
