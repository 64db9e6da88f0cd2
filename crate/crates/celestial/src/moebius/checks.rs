//! Verification primitives: parametrized curves on surfaces, singular loci,
//! plane-section circle tests, and the singularity degree budget.

use super::{MoebiusError, MoebiusResult, ProjectiveHypersurface};
use crate::exact::{nullspace, FieldElement, MultiPoly, RationalMap};
use num_rational::BigRational;

/// True iff the composition of the equation with the parametrization is the
/// zero polynomial.
pub fn verify_param(poly: &MultiPoly, param: &RationalMap) -> MoebiusResult<bool> {
    Ok(param.pull_back(poly)?.is_zero())
}

/// True iff every equation of the system and every maximal-rank Jacobian
/// minor (the gradient for one equation, all 2×2 minors for two) vanishes
/// identically along the parametrization.
pub fn verify_singular_curve(system: &[&MultiPoly], param: &RationalMap) -> MoebiusResult<bool> {
    for eq in system {
        if !param.pull_back(eq)?.is_zero() {
            return Ok(false);
        }
    }
    match system {
        [eq] => {
            for partial in eq.gradient() {
                if !param.pull_back(&partial)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        [a, b] => {
            let ga = a.gradient();
            let gb = b.gradient();
            let n = ga.len();
            for i in 0..n {
                for j in (i + 1)..n {
                    let minor = ga[i].mul(&gb[j]).sub(&ga[j].mul(&gb[i]));
                    if !param.pull_back(&minor)?.is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
        _ => panic!("verify_singular_curve: expected one or two equations"),
    }
    Ok(true)
}

/// Row rank of a matrix of exact field elements.
fn matrix_rank(mut rows: Vec<Vec<FieldElement>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].inv().expect("nonzero pivot");
        for r in (rank + 1)..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].mul(&inv);
            for cc in col..ncols {
                let sub = rows[rank][cc].mul(&factor);
                rows[r][cc] = rows[r][cc].sub(&sub);
            }
        }
        rank += 1;
    }
    rank
}

/// True iff the Jacobian of the system drops rank at the point. The point
/// must satisfy every equation.
pub fn is_singular_point(system: &[&MultiPoly], point: &[FieldElement]) -> MoebiusResult<bool> {
    for (idx, eq) in system.iter().enumerate() {
        if !eq.eval(point).is_zero() {
            return Err(MoebiusError::PointNotOnVariety(idx));
        }
    }
    let jacobian: Vec<Vec<FieldElement>> = system
        .iter()
        .map(|eq| eq.gradient().iter().map(|p| p.eval(point)).collect())
        .collect();
    Ok(matrix_rank(jacobian) < system.len())
}

/// Outcome of a plane-section classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SectionKind {
    /// The residual conic is a circle (it passes through two distinct points
    /// of the absolute conic).
    Circle,
    /// The residual quartic splits as a pair of circles through the two
    /// absolute points of the plane.
    CirclePair,
    /// The residual section is not circular.
    NotCircular,
}

/// Coefficients of a homogeneous linear form, one per variable.
fn linear_coeffs(form: &MultiPoly) -> MoebiusResult<Vec<FieldElement>> {
    if form.is_zero() || form.total_degree() != 1 {
        return Err(MoebiusError::BadPlane);
    }
    let n = form.vars().len();
    let dom = form.domain();
    let mut coeffs = vec![FieldElement::zero(dom); n];
    for (m, c) in form.terms() {
        let var = m.0.iter().position(|&e| e == 1).expect("linear monomial");
        coeffs[var] = c.clone();
    }
    Ok(coeffs)
}

/// Parametrize the plane `form = 0` by three coordinates: the map images,
/// one per ambient variable, as polynomials in `(u, v, r)`.
fn plane_parametrization(form: &MultiPoly) -> MoebiusResult<Vec<MultiPoly>> {
    let coeffs = linear_coeffs(form)?;
    let dom = form.domain();
    let pivot = coeffs.iter().rposition(|c| !c.is_zero()).ok_or(MoebiusError::BadPlane)?;
    let params = ["u", "v", "r"];
    let mut images = vec![MultiPoly::zero(&params, dom); coeffs.len()];
    let mut pivot_image = MultiPoly::zero(&params, dom);
    let mut next = 0;
    for (k, ck) in coeffs.iter().enumerate() {
        if k == pivot {
            continue;
        }
        let p = MultiPoly::var(&params, params[next], dom)?;
        next += 1;
        images[k] = p.scale(&coeffs[pivot]);
        pivot_image = pivot_image.sub(&p.scale(ck).scale(&coeffs[pivot]));
    }
    // Scale back: the pivot entry absorbs the common factor c_pivot.
    images[pivot] = pivot_image.scale(&coeffs[pivot].inv().expect("nonzero pivot"));
    Ok(images)
}

/// Restrict a binary quadratic in `(s, t)` to its discriminant `β² − 4αγ`.
fn binary_discriminant(q: &MultiPoly) -> FieldElement {
    let dom = q.domain();
    let mut a = FieldElement::zero(dom);
    let mut b = FieldElement::zero(dom);
    let mut c = FieldElement::zero(dom);
    for (m, coeff) in q.terms() {
        match (m.0[0], m.0[1]) {
            (2, 0) => a = coeff.clone(),
            (1, 1) => b = coeff.clone(),
            (0, 2) => c = coeff.clone(),
            _ => {}
        }
    }
    b.mul(&b).sub(&a.mul(&c).mul(&FieldElement::from_integer(4)))
}

/// Classify the section of a surface by a plane: parametrize the plane,
/// restrict the equation, strip the induced axis forms and (up to the
/// cyclicity) the plane's infinity line, and test whether the residual
/// conic — or residual quartic, for pair families — meets the absolute
/// conic in the two distinct infinity points of the plane.
pub fn plane_section_check(
    surface: &ProjectiveHypersurface,
    cyclicity: u32,
    plane: &MultiPoly,
    axis_forms: &[&MultiPoly],
) -> MoebiusResult<SectionKind> {
    assert!(surface.in_p3(), "plane sections are taken in P3");
    let dom = surface
        .poly()
        .domain()
        .join(plane.domain())
        .map_err(MoebiusError::Exact)?;
    let plane = plane.clone();
    let images = plane_parametrization(&plane)?;
    let mut section = surface.poly().substitute(&images)?;
    if section.is_zero() {
        return Ok(SectionKind::NotCircular);
    }
    // Restriction of the plane at infinity; if it vanishes the chosen plane
    // is the infinity plane itself.
    let w_res = images[3].clone();
    if w_res.is_zero() {
        return Err(MoebiusError::BadPlane);
    }
    let mut axis_res: Vec<MultiPoly> = Vec::new();
    for form in axis_forms {
        let restricted = form.substitute(&images)?;
        if !restricted.is_zero() {
            axis_res.push(restricted);
        }
    }
    let mut w_used = 0;
    while section.total_degree() > 2 {
        if let Some(q) = axis_res.iter().find_map(|a| section.trial_divide(a)) {
            section = q;
            continue;
        }
        if w_used < cyclicity {
            if let Some(q) = section.trial_divide(&w_res) {
                section = q;
                w_used += 1;
                continue;
            }
        }
        break;
    }
    let deg = section.total_degree();
    if deg != 2 && deg != 4 {
        return Err(MoebiusError::ResidualNotConic(deg));
    }
    // Parametrize the plane's infinity line w̃ = 0 inside the plane.
    let w_coeffs = linear_coeffs(&w_res)?;
    let basis = nullspace(&[w_coeffs], dom);
    if basis.len() != 2 {
        return Err(MoebiusError::BadPlane);
    }
    let st = ["s", "t"];
    let s = MultiPoly::var(&st, "s", dom)?;
    let t = MultiPoly::var(&st, "t", dom)?;
    let line: Vec<MultiPoly> = (0..3)
        .map(|k| s.scale(&basis[0][k]).add(&t.scale(&basis[1][k])))
        .collect();
    let q_inf = {
        // Restriction of the absolute quadric x² + y² + z² to the plane,
        // then to the infinity line.
        let names: Vec<&str> = surface.poly().vars().iter().map(|v| v.as_str()).collect();
        let q = crate::exact::parse_expression("x^2+y^2+z^2", &names, dom)?;
        q.substitute(&images)?.substitute(&line)?
    };
    if binary_discriminant(&q_inf).is_zero() {
        return Ok(SectionKind::NotCircular);
    }
    let restricted = section.substitute(&line)?;
    if deg == 2 {
        if !restricted.is_zero() && restricted.proportional_to(&q_inf) {
            return Ok(SectionKind::Circle);
        }
        return Ok(SectionKind::NotCircular);
    }
    // Pair case: the quartic meets the infinity line exactly in the two
    // absolute points, each doubly, and is singular along neither — every
    // first partial must still pass through both points.
    if restricted.is_zero() || !restricted.proportional_to(&q_inf.mul(&q_inf)) {
        return Ok(SectionKind::NotCircular);
    }
    for partial in section.gradient() {
        let on_line = partial.substitute(&line)?;
        if !on_line.is_zero() && on_line.trial_divide(&q_inf).is_none() {
            return Ok(SectionKind::NotCircular);
        }
    }
    Ok(SectionKind::CirclePair)
}

/// Parametrize the intersection line of two independent linear forms.
pub fn line_parametrization(
    form_a: &MultiPoly,
    form_b: &MultiPoly,
) -> MoebiusResult<RationalMap> {
    let dom = form_a.domain().join(form_b.domain()).map_err(MoebiusError::Exact)?;
    let rows = vec![linear_coeffs(form_a)?, linear_coeffs(form_b)?];
    let basis = nullspace(&rows, dom);
    if basis.len() != 2 {
        return Err(MoebiusError::BadPlane);
    }
    let st = ["s", "t"];
    let s = MultiPoly::var(&st, "s", dom)?;
    let t = MultiPoly::var(&st, "t", dom)?;
    let comps: Vec<MultiPoly> = (0..form_a.vars().len())
        .map(|k| s.scale(&basis[0][k]).add(&t.scale(&basis[1][k])))
        .collect();
    let target: Vec<&str> = form_a.vars().iter().map(|v| v.as_str()).collect();
    Ok(RationalMap::new(&target, comps)?)
}

/// Check one member of a pencil of planes through an axis: the plane at
/// parameter `sample_t` of the family `base + t·direction` must cut the
/// surface in a circle (after stripping the axis and infinity factors).
/// The axis itself must lie on the surface.
pub fn pencil_circle_check(
    surface: &ProjectiveHypersurface,
    cyclicity: u32,
    axis: (&MultiPoly, &MultiPoly),
    base: &MultiPoly,
    direction: &MultiPoly,
    sample_t: &BigRational,
) -> MoebiusResult<bool> {
    let axis_param = line_parametrization(axis.0, axis.1)?;
    if !verify_param(surface.poly(), &axis_param)? {
        return Err(MoebiusError::AxisNotOnSurface);
    }
    let t = FieldElement::from_rational(sample_t.clone());
    let plane = base.add(&direction.scale(&t));
    let kind = plane_section_check(surface, cyclicity, &plane, &[axis.0, axis.1])?;
    Ok(kind == SectionKind::Circle)
}

/// The budget `Σ dᵢ·mᵢ(mᵢ−1) ≤ (d−1)(d−2) − 2` an anticanonical surface of
/// degree `d` has for singular curves of degree `dᵢ` and multiplicity `mᵢ`.
pub fn sng_budget_check(d: u32, components: &[(u32, u32)]) -> bool {
    assert!(d >= 3, "budget is defined for degree at least 3");
    let spent: i64 = components
        .iter()
        .map(|&(di, mi)| {
            assert!(mi >= 2, "singular components have multiplicity at least 2");
            i64::from(di) * i64::from(mi) * (i64::from(mi) - 1)
        })
        .sum();
    let budget = (i64::from(d) - 1) * (i64::from(d) - 2) - 2;
    spent <= budget
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{parse_expression, Domain};
    use crate::moebius::{cyclicity as cyc, ProjectiveHypersurface, P3_VARS};
    use num_bigint::BigInt;

    fn p3(text: &str, dom: Domain) -> ProjectiveHypersurface {
        ProjectiveHypersurface::parse(text, dom).unwrap()
    }

    fn form(text: &str, dom: Domain) -> MultiPoly {
        parse_expression(text, &P3_VARS, dom).unwrap()
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn great_circle_on_sphere() {
        let dom = Domain::Rational;
        let sphere = p3("x^2+y^2+z^2-w^2", dom);
        // Pythagorean parametrization of the equator.
        let st = ["s", "t"];
        let comps = ["2*s*t", "s^2-t^2", "0", "s^2+t^2"]
            .iter()
            .map(|t| parse_expression(t, &st, dom).unwrap())
            .collect();
        let param = RationalMap::new(&P3_VARS, comps).unwrap();
        assert!(verify_param(sphere.poly(), &param).unwrap());
        let kind = plane_section_check(&sphere, 1, &form("z", dom), &[]).unwrap();
        assert_eq!(kind, SectionKind::Circle);
        // A plane missing the sphere still cuts a (complex) circle; a
        // tangent plane does not.
        let kind = plane_section_check(&sphere, 1, &form("w", dom), &[]);
        assert!(kind.is_err());
    }

    #[test]
    fn dupin_pencil_member_is_circle() {
        let dom = Domain::Rational;
        let dupin = p3("2*z*(x^2+y^2+z^2)+w*((x+y+z+w)^2+2*z^2)", dom);
        let c = cyc(&dupin).unwrap();
        assert_eq!(c, 1);
        let axis = (form("z", dom), form("x+y+w", dom));
        let ok = pencil_circle_check(&dupin, c, (&axis.0, &axis.1), &axis.0, &axis.1, &rat(1))
            .unwrap();
        assert!(ok);
    }

    #[test]
    fn quartic_pair_section() {
        let dom = Domain::Rational;
        let quartic = p3("(x^2+y^2+z^2-2*w^2)^2-4*(w^2-y^2)*(w^2-z^2)", dom);
        assert_eq!(cyc(&quartic).unwrap(), 0);
        let kind = plane_section_check(&quartic, 0, &form("y-w", dom), &[]).unwrap();
        assert_eq!(kind, SectionKind::CirclePair);
    }

    #[test]
    fn quartic_double_lines_are_singular() {
        let dom = Domain::Rational;
        let quartic = form("(x^2+y^2+z^2-2*w^2)^2-4*(w^2-y^2)*(w^2-z^2)", dom);
        let st = ["s", "t"];
        for sign in ["", "-"] {
            let comps = ["0", "t", &format!("{sign}t"), "s"]
                .iter()
                .map(|x| parse_expression(x, &st, dom).unwrap())
                .collect();
            let rho = RationalMap::new(&P3_VARS, comps).unwrap();
            assert!(verify_singular_curve(&[&quartic], &rho).unwrap());
        }
        // The variant with coefficient 2 in place of 4 is not singular there.
        let printed = form("(x^2+y^2+z^2-2*w^2)^2-2*(w^2-y^2)*(w^2-z^2)", dom);
        let comps = ["0", "t", "t", "s"]
            .iter()
            .map(|x| parse_expression(x, &st, dom).unwrap())
            .collect();
        let rho = RationalMap::new(&P3_VARS, comps).unwrap();
        assert!(!verify_singular_curve(&[&printed], &rho).unwrap());
    }

    #[test]
    fn singular_point_detection() {
        let dom = Domain::Rational;
        let sphere = form("x^2+y^2+z^2-w^2", dom);
        let one = FieldElement::from_integer(1);
        let zero = FieldElement::from_integer(0);
        let pt = vec![one.clone(), zero.clone(), zero.clone(), one.clone()];
        assert!(!is_singular_point(&[&sphere], &pt).unwrap());
        let cone = form("x^2+y^2-z^2", dom);
        let apex = vec![zero.clone(), zero.clone(), zero.clone(), one.clone()];
        assert!(is_singular_point(&[&cone], &apex).unwrap());
        let off = vec![one.clone(), one.clone(), zero, one];
        assert!(is_singular_point(&[&sphere], &off).is_err());
    }

    #[test]
    fn budget_instances() {
        assert!(sng_budget_check(4, &[(1, 2), (1, 2)]));
        assert!(!sng_budget_check(3, &[(1, 2)]));
        assert!(sng_budget_check(8, &[(2, 4)]));
    }
}
