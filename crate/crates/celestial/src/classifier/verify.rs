//! Whole-record verification: recompute everything a catalog record claims
//! about a surface and report per-claim pass/fail results.

use crate::catalog::tables::{TABLE_M4_CLS, TABLE_M4_REPRESENTATIVES, TABLE_QUADRICS};
use crate::catalog::{Ambient, PencilKind, PencilRecord, SurfaceRecord};
use crate::exact::{
    nullspace, parse_expression, Domain, FieldElement, Mono, MultiPoly, RationalMap,
};
use crate::lattice::{class_from_short_name, DivisorClass, LatticeSpec};
use crate::moebius::{
    is_singular_point, moebius_map, moebius_model, pencil_circle_check, plane_section_check,
    sng_budget_check, surface_type, verify_param, verify_singular_curve, MoebiusError,
    ProjectiveHypersurface, SectionKind, SphereSystem, P3_VARS, P4_VARS,
};
use num_bigint::BigInt;
use num_rational::BigRational;

use super::census::pair_count;
use super::{ClassifierError, ClassifierResult};

/// One verified claim.
#[derive(Debug, Clone)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

/// Everything recomputed for one surface.
#[derive(Debug, Clone)]
pub struct SurfaceReport {
    pub name: String,
    /// Computed `(degree, cyclicity)`.
    pub surface_type: (u32, u32),
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
    /// The corrected printed form, quoted from the record.
    pub erratum: Option<String>,
}

impl SurfaceReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Rational sample parameters tried for pencil members, in order. Zero is
/// excluded (it gives the degenerate base member for several families).
fn sample_parameters() -> Vec<BigRational> {
    [
        (1, 1),
        (2, 1),
        (3, 1),
        (5, 1),
        (7, 1),
        (1, 2),
        (1, 3),
        (2, 3),
        (4, 1),
        (5, 2),
        (9, 1),
        (11, 1),
        (13, 1),
    ]
    .into_iter()
    .map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
    .collect()
}

fn check(checks: &mut Vec<Check>, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
    checks.push(Check { label: label.into(), passed, detail: detail.into() });
}

/// Expected `(families, co-spherical pairs)` for the named catalog surface,
/// from the quadric table or the degree-4 classification.
fn expected_counts(name: &str) -> Option<(u32, u32)> {
    for &(n, _, _, _, f, p) in TABLE_QUADRICS {
        if n == name {
            return Some((f, p));
        }
    }
    let representative = match name {
        "blum" => "Blum cyclide",
        "sphere-cyclide" => "sphere cyclide",
        "two-components" => "2 components",
        "perseus" => "Perseus cyclide",
        "dupin" => "Dupin cyclide",
        _ => return None,
    };
    TABLE_M4_REPRESENTATIVES
        .iter()
        .position(|&(_, _, _, _, quartic)| quartic == representative)
        .map(|idx| {
            let (_, _, _, _, _, f, p) = TABLE_M4_CLS[idx];
            (f, p)
        })
}

/// Extract the quoted equation from an erratum sentence: the first
/// whitespace-separated token that parses as a form of degree at least two.
fn printed_form(text: &str, dom: Domain) -> Option<MultiPoly> {
    for token in text.split_whitespace() {
        if let Ok(poly) = parse_expression(token, &P3_VARS, dom) {
            if poly.total_degree() >= 2 {
                return Some(poly);
            }
        }
    }
    None
}

fn curve_map(param: &[MultiPoly], ambient: Ambient) -> ClassifierResult<RationalMap> {
    let target: &[&str] = match ambient {
        Ambient::P3 => &P3_VARS,
        Ambient::Model => &P4_VARS,
    };
    Ok(RationalMap::new(target, param.to_vec()).map_err(ClassifierError::Exact)?)
}

fn point_coords(point: &[MultiPoly]) -> Vec<FieldElement> {
    point.iter().map(|c| c.eval(&[])).collect()
}

/// Coefficient of `mono` in `p`, promoted to `dom`.
fn coeff_of(p: &MultiPoly, mono: &Mono, dom: Domain) -> FieldElement {
    p.terms()
        .find(|(m, _)| m == &mono)
        .map(|(_, c)| c.promote(dom).expect("joined domain"))
        .unwrap_or_else(|| FieldElement::zero(dom))
}

/// Whether `candidate` lies in the pencil spanned by `base` and
/// `direction`: some kernel vector of the per-monomial coefficient matrix
/// must involve the candidate.
fn in_pencil(base: &MultiPoly, direction: &MultiPoly, candidate: &MultiPoly) -> bool {
    let Ok(dom) = base
        .domain()
        .join(direction.domain())
        .and_then(|d| d.join(candidate.domain()))
    else {
        return false;
    };
    let polys = [base, direction, candidate];
    let monos: std::collections::BTreeSet<Mono> = polys
        .iter()
        .flat_map(|p| p.terms().map(|(m, _)| Mono(m.0.clone())))
        .collect();
    let rows: Vec<Vec<FieldElement>> = monos
        .iter()
        .map(|m| polys.iter().map(|p| coeff_of(p, m, dom)).collect())
        .collect();
    nullspace(&rows, dom).iter().any(|v| !v[2].is_zero())
}

/// Verify a sphere pencil through the record's pullback correspondence: at
/// each sample, the reduced plane on the source surface must map into the
/// sphere pencil and cut the source in a circle pair.
fn check_sphere_pencil(
    record: &SurfaceRecord,
    pencil: &PencilRecord,
    samples: usize,
    notes: &mut Vec<String>,
) -> ClassifierResult<(bool, String)> {
    let Some((reduced_base, reduced_dir)) = &pencil.reduced else {
        return Ok((false, "sphere pencil lacks a reduced source family".into()));
    };
    let Some(pullback) = &record.pullback else {
        return Ok((false, "sphere pencil lacks a pullback correspondence".into()));
    };
    let spec = moebius_map(&pullback.map)?;
    let source_record = crate::catalog::lookup(&pullback.target)?;
    let source = ProjectiveHypersurface::new(source_record.equation.clone())?;
    let (_, source_cyc) = surface_type(&source)?;
    let dom = record.equation.domain();
    let q = parse_expression("x^2+y^2+z^2", &P3_VARS, dom)?;
    let mut strip: Vec<MultiPoly> = P3_VARS
        .iter()
        .map(|v| MultiPoly::var(&P3_VARS, v, dom))
        .collect::<Result<_, _>>()?;
    strip.push(q);
    let mut passed = 0usize;
    let mut detail = String::new();
    for t in sample_parameters() {
        if passed >= samples {
            break;
        }
        let ft = FieldElement::from_rational(t.clone());
        let plane = reduced_base.add(&reduced_dir.scale(&ft));
        // The plane on the source maps to a member of the sphere pencil.
        let image = spec.inverse().pull_back(&plane)?;
        let (prim, mults) = image.primitive_part(&strip);
        // The member sphere has degree 2; when it degenerates to a plane
        // pair or to the base sphere its own factors are in the strip list,
        // so restore stripped factors until degree 2 is reached.
        let mut member_in_pencil = false;
        for candidate in degree_two_restorations(&prim, &strip, &mults) {
            if in_pencil(&pencil.base, &pencil.direction, &candidate) {
                member_in_pencil = true;
                break;
            }
        }
        if !member_in_pencil {
            detail = format!("t = {t}: image of the reduced plane leaves the pencil");
            break;
        }
        // The reduced plane cuts the source surface in a circle pair.
        match plane_section_check(&source, source_cyc, &plane, &[]) {
            Ok(SectionKind::CirclePair) => passed += 1,
            Ok(kind) => {
                detail = format!("t = {t}: source section is {kind:?}, not a circle pair");
                break;
            }
            Err(MoebiusError::ResidualNotConic(_)) | Err(MoebiusError::BadPlane) => {
                notes.push(format!("pencil sample t = {t} is degenerate, skipped"));
            }
            Err(e) => return Err(e.into()),
        }
    }
    if passed >= samples {
        Ok((true, format!("{passed} samples via {}", pullback.map)))
    } else if detail.is_empty() {
        Ok((false, format!("only {passed} of {samples} samples verified")))
    } else {
        Ok((false, detail))
    }
}

/// All products of `base` with stripped factors whose total degree is
/// exactly two. Used to recover a pencil member that `primitive_part`
/// over-stripped because the member itself factors into strip candidates.
fn degree_two_restorations(
    base: &MultiPoly,
    strip: &[MultiPoly],
    mults: &[u32],
) -> Vec<MultiPoly> {
    let mut out = Vec::new();
    fn rec(
        acc: &MultiPoly,
        strip: &[MultiPoly],
        mults: &[u32],
        idx: usize,
        out: &mut Vec<MultiPoly>,
    ) {
        match acc.total_degree().cmp(&2) {
            std::cmp::Ordering::Equal => out.push(acc.clone()),
            std::cmp::Ordering::Greater => {}
            std::cmp::Ordering::Less => {
                for i in idx..strip.len() {
                    if mults[i] > 0 {
                        let mut next = mults.to_vec();
                        next[i] -= 1;
                        rec(&acc.mul(&strip[i]), strip, &next, i, out);
                    }
                }
            }
        }
    }
    rec(base, strip, mults, 0, &mut out);
    out
}

/// Verify a plane pencil (through its axis) by sampling members.
fn check_plane_pencil(
    surface: &ProjectiveHypersurface,
    cyclicity: u32,
    pencil: &PencilRecord,
    samples: usize,
    notes: &mut Vec<String>,
) -> ClassifierResult<(bool, String)> {
    let mut passed = 0usize;
    let mut detail = String::new();
    for t in sample_parameters() {
        if passed >= samples {
            break;
        }
        let outcome = match (pencil.kind, &pencil.axis) {
            (PencilKind::Circle, Some((axis1, axis2))) => pencil_circle_check(
                surface,
                cyclicity,
                (axis1, axis2),
                &pencil.base,
                &pencil.direction,
                &t,
            ),
            (PencilKind::Circle, None) => {
                return Ok((false, "circle pencil lacks an axis".into()));
            }
            (PencilKind::Pair, axis) => {
                let ft = FieldElement::from_rational(t.clone());
                let plane = pencil.base.add(&pencil.direction.scale(&ft));
                let axis_forms: Vec<&MultiPoly> = match axis {
                    Some((a1, a2)) => vec![a1, a2],
                    None => Vec::new(),
                };
                plane_section_check(surface, cyclicity, &plane, &axis_forms)
                    .map(|kind| kind == SectionKind::CirclePair)
            }
        };
        match outcome {
            Ok(true) => passed += 1,
            Ok(false) => {
                detail = format!("t = {t}: section is not a {}", match pencil.kind {
                    PencilKind::Circle => "circle",
                    PencilKind::Pair => "circle pair",
                });
                break;
            }
            Err(MoebiusError::ResidualNotConic(_)) | Err(MoebiusError::BadPlane) => {
                notes.push(format!("pencil sample t = {t} is degenerate, skipped"));
            }
            Err(e) => return Err(e.into()),
        }
    }
    if passed >= samples {
        Ok((true, format!("{passed} samples")))
    } else if detail.is_empty() {
        Ok((false, format!("only {passed} of {samples} samples verified")))
    } else {
        Ok((false, detail))
    }
}

/// Recompute and check every claim of a catalog record. `samples` is the
/// number of pencil members verified per family.
pub fn verify_surface(record: &SurfaceRecord, samples: usize) -> ClassifierResult<SurfaceReport> {
    let surface = ProjectiveHypersurface::new(record.equation.clone())?;
    let (d, c) = surface_type(&surface)?;
    let mut checks = Vec::new();
    let mut notes = record.notes.clone();

    if let Some(declared) = record.declared_type {
        check(
            &mut checks,
            "type",
            (d, c) == declared,
            format!("computed ({d},{c}), declared ({},{})", declared.0, declared.1),
        );
    }

    // Quadrics: the equation must instantiate its row of the quadric table.
    if let Some(&(_, shape, _, _, _, _)) = TABLE_QUADRICS.iter().find(|r| r.0 == record.name) {
        let (a0, a1) = if record.name == "e" { ("3", "2") } else { ("1", "2") };
        let shaped = shape.replace("a0", a0).replace("a1", a1);
        let expected = parse_expression(&shaped, &P3_VARS, record.equation.domain())?;
        check(
            &mut checks,
            "canonical form",
            record.equation.proportional_to(&expected),
            format!("coefficients ({a0},{a1})"),
        );
    }

    // The model is needed for model checks, model-ambient curves and points.
    let model: Option<SphereSystem> = if record.models.is_empty()
        && record.curves.iter().all(|cv| cv.ambient == Ambient::P3)
        && record.points.iter().all(|p| p.ambient == Ambient::P3)
    {
        None
    } else {
        Some(moebius_model(&surface)?)
    };
    for (i, expected) in record.models.iter().enumerate() {
        let system = model.as_ref().expect("model computed above");
        check(
            &mut checks,
            format!("model {}", i + 1),
            system.cut_matches(expected),
            "computed cut vs declared equation, modulo the sphere".to_string(),
        );
    }

    for (i, curve) in record.curves.iter().enumerate() {
        let map = curve_map(&curve.param, curve.ambient)?;
        let label = format!(
            "{} {} (degree {}, multiplicity {})",
            match curve.ambient {
                Ambient::P3 => "curve",
                Ambient::Model => "model curve",
            },
            i + 1,
            curve.degree,
            curve.multiplicity
        );
        let passed = match (curve.ambient, curve.is_singular()) {
            (Ambient::P3, false) => verify_param(surface.poly(), &map)?,
            (Ambient::P3, true) => verify_singular_curve(&[surface.poly()], &map)?,
            (Ambient::Model, singular) => {
                let system = model.as_ref().expect("model computed above");
                if singular {
                    verify_singular_curve(&system.equations(), &map)?
                } else {
                    verify_param(system.sphere(), &map)? && verify_param(system.cut(), &map)?
                }
            }
        };
        check(&mut checks, label, passed, String::new());
    }

    for (i, point) in record.points.iter().enumerate() {
        let coords = point_coords(&point.coords);
        let outcome = match point.ambient {
            Ambient::P3 => is_singular_point(&[surface.poly()], &coords),
            Ambient::Model => {
                let system = model.as_ref().expect("model computed above");
                is_singular_point(&system.equations(), &coords)
            }
        };
        let (passed, detail) = match outcome {
            Ok(singular) => (singular == point.singular, String::new()),
            Err(e) => (false, e.to_string()),
        };
        check(
            &mut checks,
            format!(
                "{} {}",
                match point.ambient {
                    Ambient::P3 => "point",
                    Ambient::Model => "model point",
                },
                i + 1
            ),
            passed,
            detail,
        );
    }

    // Singular-curve budget and, when the record accounts for the full
    // genus drop, exact genus bookkeeping. The absolute conic contributes
    // a degree-2 component of multiplicity c when c >= 2.
    let mut singular_components: Vec<(u32, u32)> = record
        .curves
        .iter()
        .filter(|cv| cv.ambient == Ambient::P3 && cv.is_singular())
        .map(|cv| (cv.degree, cv.multiplicity))
        .collect();
    if c >= 2 {
        singular_components.push((2, c));
    }
    if d >= 3 {
        let spent: i64 = singular_components
            .iter()
            .map(|&(di, mi)| i64::from(di) * i64::from(mi) * (i64::from(mi) - 1))
            .sum();
        let budget = (i64::from(d) - 1) * (i64::from(d) - 2) - 2;
        check(
            &mut checks,
            "singularity budget",
            sng_budget_check(d, &singular_components),
            format!("{spent} of {budget}"),
        );
    }
    if record.genus_complete {
        let drop: i64 = singular_components
            .iter()
            .map(|&(di, mi)| i64::from(di) * i64::from(mi) * (i64::from(mi) - 1) / 2)
            .sum();
        let genus = (i64::from(d) - 1) * (i64::from(d) - 2) / 2 - drop;
        check(&mut checks, "section genus", genus == 1, format!("computed {genus}"));
    }

    for (i, pencil) in record.pencils.iter().enumerate() {
        // Degree-1 members form a plane pencil, checked directly; higher
        // degree members are spheres, checked through the pullback.
        let is_plane_pencil =
            pencil.base.total_degree() <= 1 && pencil.direction.total_degree() <= 1;
        let (passed, detail) = if is_plane_pencil {
            check_plane_pencil(&surface, c, pencil, samples, &mut notes)?
        } else {
            check_sphere_pencil(record, pencil, samples, &mut notes)?
        };
        check(&mut checks, format!("family {}", i + 1), passed, detail);
    }

    // Declared circle-family classes: count of families and of co-spherical
    // pairs (classes meeting twice) against the classification tables.
    if !record.classes.is_empty() {
        let classes: Vec<DivisorClass> = record
            .classes
            .iter()
            .map(|n| class_from_short_name(LatticeSpec::B(5), n))
            .collect::<Result<_, _>>()?;
        let pairs = pair_count(&classes);
        match expected_counts(&record.name) {
            Some((f, p)) => check(
                &mut checks,
                "class counts",
                classes.len() as u32 == f && pairs == p,
                format!("{} families, {pairs} co-spherical pairs (expected {f}, {p})", classes.len()),
            ),
            None => check(
                &mut checks,
                "class counts",
                true,
                format!("{} families, {pairs} co-spherical pairs", classes.len()),
            ),
        }
    }

    for image in &record.images {
        let spec = moebius_map(&image.map)?;
        let target = crate::catalog::lookup(&image.target)?;
        let pushed = spec.push_surface(&surface)?;
        let forward_ok = pushed.poly().proportional_to(&target.equation);
        let returned = spec.inverse_spec()?.push_surface(&pushed)?;
        let round_trip_ok = returned.poly().proportional_to(surface.poly());
        check(
            &mut checks,
            format!("image under {}", image.map),
            forward_ok && round_trip_ok,
            format!(
                "target {}{}",
                image.target,
                if round_trip_ok { ", round trip returns the source" } else { ", round trip fails" }
            ),
        );
    }

    if let Some(pullback) = &record.pullback {
        let spec = moebius_map(&pullback.map)?;
        let source_record = crate::catalog::lookup(&pullback.target)?;
        let source = ProjectiveHypersurface::new(source_record.equation.clone())?;
        let pushed = spec.push_surface(&source)?;
        check(
            &mut checks,
            "pullback correspondence",
            pushed.poly().proportional_to(surface.poly()),
            format!("{}({}) reproduces the equation", pullback.map, pullback.target),
        );
    }

    // Erratum substantiation: the quoted printed form must differ from the
    // corrected equation and must fail on a singular curve that the
    // corrected equation carries.
    if let Some(text) = &record.erratum {
        let passed = match printed_form(text, record.equation.domain()) {
            Some(printed) if !printed.proportional_to(&record.equation) => {
                let mut refuted = false;
                for curve in record.curves.iter().filter(|cv| cv.ambient == Ambient::P3) {
                    let map = curve_map(&curve.param, curve.ambient)?;
                    if verify_param(&printed, &map)? {
                        continue;
                    }
                    if verify_param(surface.poly(), &map)? {
                        refuted = true;
                        break;
                    }
                }
                refuted
            }
            _ => false,
        };
        check(
            &mut checks,
            "erratum",
            passed,
            "printed form fails on a curve the corrected equation carries".to_string(),
        );
    }

    Ok(SurfaceReport {
        name: record.name.clone(),
        surface_type: (d, c),
        checks,
        notes,
        erratum: record.erratum.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::lookup;

    #[test]
    fn quadric_reports_pass() {
        for name in ["e", "ch1", "co"] {
            let report = verify_surface(lookup(name).unwrap(), 3).unwrap();
            assert!(report.passed(), "{name}: {:?}", report.checks);
            assert_eq!(report.surface_type, (2, 0), "{name}");
        }
    }

    #[test]
    fn dupin_report_passes() {
        let report = verify_surface(lookup("dupin").unwrap(), 3).unwrap();
        assert!(report.passed(), "{:?}", report.checks);
        assert_eq!(report.surface_type, (3, 1));
    }

    #[test]
    fn all_records_verify() {
        for name in crate::catalog::names() {
            let report = verify_surface(lookup(name).unwrap(), 3).unwrap();
            let failed: Vec<&Check> = report.checks.iter().filter(|c| !c.passed).collect();
            assert!(failed.is_empty(), "{name}: {failed:?}");
        }
    }
}
