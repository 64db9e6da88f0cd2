//! Birational transformations of `P³` generated by stereographic projection,
//! coordinate involutions of the three-sphere, and translations, together
//! with the word calculus used to name the standard maps `mu0`…`mu9`.

use super::{MoebiusError, MoebiusResult, ProjectiveHypersurface, P3_VARS, P4_VARS};
use crate::exact::{parse_expression, Domain, MultiPoly, RationalMap};
use num_rational::BigRational;

/// One generator of the map calculus. A word is applied right-to-left, as in
/// composition notation: `t(v) f b2 fi` means "apply `fi` first".
#[derive(Debug, Clone, PartialEq)]
pub enum Generator {
    /// Stereographic projection `P⁴ → P³`, `(a:b:c:d:e) ↦ (a:b:c:e−d)`.
    F,
    /// Its inverse `P³ → P⁴`, `(x:y:z:w) ↦ (2wx:2wy:2wz:q−w²:q+w²)`.
    Fi,
    /// Sphere involution `e ↦ −e`.
    B0,
    /// Sphere involution swapping `c` and `d`.
    B1,
    /// Sphere involution `d ↦ −d`.
    B2,
    /// Translation of `P³` by the rational vector `v`.
    T([BigRational; 3]),
}

impl Generator {
    pub fn inverse(&self) -> Generator {
        match self {
            Generator::F => Generator::Fi,
            Generator::Fi => Generator::F,
            Generator::T(v) => Generator::T([-v[0].clone(), -v[1].clone(), -v[2].clone()]),
            other => other.clone(),
        }
    }

    /// The generator as an explicit rational map.
    pub fn map(&self) -> RationalMap {
        let dom = Domain::Rational;
        let parse4 = |texts: [&str; 4]| -> Vec<MultiPoly> {
            texts
                .iter()
                .map(|t| parse_expression(t, &P4_VARS, dom).expect("fixed component"))
                .collect()
        };
        match self {
            Generator::F => RationalMap::new(&P3_VARS, parse4(["a", "b", "c", "e-d"]))
                .expect("fixed map"),
            Generator::Fi => {
                let comps = ["2*w*x", "2*w*y", "2*w*z", "x^2+y^2+z^2-w^2", "x^2+y^2+z^2+w^2"]
                    .iter()
                    .map(|t| parse_expression(t, &P3_VARS, dom).expect("fixed component"))
                    .collect();
                RationalMap::new(&P4_VARS, comps).expect("fixed map")
            }
            Generator::B0 => {
                let comps = ["a", "b", "c", "d", "-e"]
                    .iter()
                    .map(|t| parse_expression(t, &P4_VARS, dom).expect("fixed component"))
                    .collect();
                RationalMap::new(&P4_VARS, comps).expect("fixed map")
            }
            Generator::B1 => {
                let comps = ["a", "b", "d", "c", "e"]
                    .iter()
                    .map(|t| parse_expression(t, &P4_VARS, dom).expect("fixed component"))
                    .collect();
                RationalMap::new(&P4_VARS, comps).expect("fixed map")
            }
            Generator::B2 => {
                let comps = ["a", "b", "c", "-d", "e"]
                    .iter()
                    .map(|t| parse_expression(t, &P4_VARS, dom).expect("fixed component"))
                    .collect();
                RationalMap::new(&P4_VARS, comps).expect("fixed map")
            }
            Generator::T(v) => {
                let w = MultiPoly::var(&P3_VARS, "w", dom).expect("fixed variable");
                let comps = ["x", "y", "z"]
                    .iter()
                    .zip(v.iter())
                    .map(|(name, vi)| {
                        let xi = MultiPoly::var(&P3_VARS, name, dom).expect("fixed variable");
                        xi.add(&w.scale(&crate::exact::FieldElement::from_rational(vi.clone())))
                    })
                    .chain(std::iter::once(w.clone()))
                    .collect();
                RationalMap::new(&P3_VARS, comps).expect("fixed map")
            }
        }
    }
}

impl std::fmt::Display for Generator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Generator::F => write!(f, "f"),
            Generator::Fi => write!(f, "fi"),
            Generator::B0 => write!(f, "b0"),
            Generator::B1 => write!(f, "b1"),
            Generator::B2 => write!(f, "b2"),
            Generator::T(v) => write!(f, "t({},{},{})", v[0], v[1], v[2]),
        }
    }
}

/// The stereographic projection `f : S³ ⊂ P⁴ → P³` as a rational map.
pub fn stereographic_projection() -> RationalMap {
    Generator::F.map()
}

/// The inverse stereographic map `f⁻¹ : P³ → S³ ⊂ P⁴`.
pub fn stereographic_inverse() -> RationalMap {
    Generator::Fi.map()
}

/// Exceptional factors stripped from compiled maps and pushed surfaces.
fn strip_candidates(vars: &[String]) -> Vec<MultiPoly> {
    let dom = Domain::Rational;
    let texts: &[&str] = if vars.len() == 4 {
        &["w", "x^2+y^2+z^2", "x^2+y^2+z^2-w^2", "x^2+y^2+z^2+w^2"]
    } else {
        &["e-d", "e+d"]
    };
    let names: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    texts
        .iter()
        .map(|t| parse_expression(t, &names, dom).expect("fixed candidate"))
        .collect()
}

/// A named word in the generators with its compiled forward and inverse maps.
#[derive(Debug, Clone)]
pub struct MoebiusMapSpec {
    name: Option<String>,
    word: Vec<Generator>,
    forward: RationalMap,
    inverse: RationalMap,
    /// Exceptional factors of the inverse map beyond the fixed list, pulled
    /// back from the intermediate spaces of the word.
    inverse_extras: Vec<MultiPoly>,
}

impl MoebiusMapSpec {
    pub fn from_word(name: Option<String>, word: Vec<Generator>) -> MoebiusResult<Self> {
        let (forward, _) = compile(&word)?;
        let inv_word: Vec<Generator> = word.iter().rev().map(Generator::inverse).collect();
        let (inverse, inverse_extras) = compile(&inv_word)?;
        if forward.target().len() != 4 || forward.source().len() != 4 {
            return Err(MoebiusError::BadWordShape(forward.target().len()));
        }
        Ok(Self { name, word, forward, inverse, inverse_extras })
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn word(&self) -> &[Generator] {
        &self.word
    }

    pub fn forward(&self) -> &RationalMap {
        &self.forward
    }

    pub fn inverse(&self) -> &RationalMap {
        &self.inverse
    }

    pub fn inverse_spec(&self) -> MoebiusResult<MoebiusMapSpec> {
        let inv_word: Vec<Generator> = self.word.iter().rev().map(Generator::inverse).collect();
        MoebiusMapSpec::from_word(None, inv_word)
    }

    /// The image of a surface: substitute the inverse map into the equation
    /// and strip exceptional factors. The result `G` is validated by checking
    /// that `G` composed with the forward map is divisible by the source
    /// equation.
    pub fn push_surface(
        &self,
        surface: &ProjectiveHypersurface,
    ) -> MoebiusResult<ProjectiveHypersurface> {
        let raw = self.inverse.pull_back(surface.poly())?;
        let mut candidates = strip_candidates(raw.vars());
        for extra in &self.inverse_extras {
            if !candidates.iter().any(|c| c.proportional_to(extra)) {
                candidates.push(extra.clone());
            }
        }
        let (stripped, mults) = raw.primitive_part(&candidates);
        // The fully stripped image is usually right, but when the surface
        // itself contains an exceptional factor (e.g. pushing a sphere
        // through the identity word) some factors must be restored. Try
        // candidates in order of fewest restored factors.
        let source = surface.poly().monic();
        let total: u32 = mults.iter().sum();
        for restore in 0..=total {
            for combo in restore_combinations(&mults, restore) {
                let mut image = stripped.clone();
                for (i, &k) in combo.iter().enumerate() {
                    for _ in 0..k {
                        image = image.mul(&candidates[i]);
                    }
                }
                if image.total_degree() == 0 {
                    continue;
                }
                let back = self.forward.pull_back(&image)?;
                if back.trial_divide(&source).is_some() {
                    return ProjectiveHypersurface::new(image.monic());
                }
            }
        }
        Err(MoebiusError::InconsistentImage)
    }
}

impl std::fmt::Display for MoebiusMapSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if let Some(n) = &self.name {
            write!(f, "{n} = ")?;
        }
        let parts: Vec<String> = self.word.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// All ways of choosing `total` restored factors within the multiplicities.
fn restore_combinations(mults: &[u32], total: u32) -> Vec<Vec<u32>> {
    fn rec(mults: &[u32], total: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        match mults {
            [] => {
                if total == 0 {
                    out.push(prefix.clone());
                }
            }
            [first, rest @ ..] => {
                for k in 0..=total.min(*first) {
                    prefix.push(k);
                    rec(rest, total - k, prefix, out);
                    prefix.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(mults, total, &mut Vec::new(), &mut out);
    out
}

fn compile(word: &[Generator]) -> MoebiusResult<(RationalMap, Vec<MultiPoly>)> {
    let mut maps = word.iter().rev().map(Generator::map);
    let mut acc = match maps.next() {
        Some(m) => m,
        None => {
            // Empty word: the identity on P³.
            let comps = P3_VARS
                .iter()
                .map(|n| MultiPoly::var(&P3_VARS, n, Domain::Rational).expect("fixed variable"))
                .collect();
            return Ok((RationalMap::new(&P3_VARS, comps).expect("identity map"), Vec::new()));
        }
    };
    // Pull-backs through the composite may pick up exceptional factors that
    // live between the letters of the word: each intermediate space's fixed
    // factors, seen through the inner part of the word. Collect them so that
    // `push_surface` can strip them alongside the fixed list.
    let mut extras: Vec<MultiPoly> = Vec::new();
    for outer in maps {
        let source_fixed = strip_candidates(acc.source());
        for cand in strip_candidates(acc.target()) {
            let pulled = acc.pull_back(&cand)?;
            let (prim, _) = pulled.primitive_part(&source_fixed);
            if prim.total_degree() > 0
                && !source_fixed.iter().any(|c| c.proportional_to(&prim))
                && !extras.iter().any(|c| c.proportional_to(&prim))
            {
                extras.push(prim.monic());
            }
        }
        acc = outer.compose(&acc)?;
        acc = acc.strip_common(&strip_candidates(&acc.source().to_vec()));
    }
    Ok((acc.strip_common(&strip_candidates(&acc.source().to_vec())), extras))
}

/// Parse a map word: whitespace-separated generators `f`, `fi`, `b0`, `b1`,
/// `b2`, `t(p,q,r)` with rational entries, or a standard name `mu0`…`mu9`
/// (which may also appear inside a longer word).
pub fn parse_word(text: &str) -> MoebiusResult<Vec<Generator>> {
    let mut out = Vec::new();
    for token in text.split_whitespace().flat_map(|t| t.split('*')).filter(|t| !t.is_empty()) {
        match token {
            "f" => out.push(Generator::F),
            "fi" | "f^-1" => out.push(Generator::Fi),
            "b0" => out.push(Generator::B0),
            "b1" => out.push(Generator::B1),
            "b2" => out.push(Generator::B2),
            t if t.starts_with("mu") => {
                out.extend(standard_word(t).ok_or_else(|| MoebiusError::BadWord(t.to_string()))?);
            }
            t if t.starts_with("t(") && t.ends_with(')') => {
                let inner = &t[2..t.len() - 1];
                let parts: Vec<&str> = inner.split(',').collect();
                if parts.len() != 3 {
                    return Err(MoebiusError::BadWord(token.to_string()));
                }
                let mut v: Vec<BigRational> = Vec::with_capacity(3);
                for p in parts {
                    v.push(
                        p.trim()
                            .parse::<BigRational>()
                            .map_err(|_| MoebiusError::BadWord(token.to_string()))?,
                    );
                }
                out.push(Generator::T([v[0].clone(), v[1].clone(), v[2].clone()]));
            }
            other => return Err(MoebiusError::BadWord(other.to_string())),
        }
    }
    Ok(out)
}

fn tvec(a: i64, b: i64, c: i64) -> Generator {
    Generator::T([
        BigRational::from_integer(a.into()),
        BigRational::from_integer(b.into()),
        BigRational::from_integer(c.into()),
    ])
}

/// The words of the standard maps `mu0`…`mu9`.
fn standard_word(name: &str) -> Option<Vec<Generator>> {
    use Generator::{B0, B1, B2, F, Fi};
    let word = match name {
        "mu0" => vec![tvec(-1, -1, -1), F, B2, Fi],
        "mu1" => vec![tvec(0, 1, 0), F, B1, Fi],
        "mu2" => vec![tvec(1, 1, 0), F, B1, Fi],
        "mu3" => vec![tvec(0, 1, 1), F, B0, Fi],
        "mu4" => vec![tvec(0, 1, 0), F, B0, Fi],
        "mu5" => vec![F, B1, Fi],
        "mu6" => vec![F, B0, Fi],
        "mu7" => vec![F, B0, Fi, tvec(1, 0, 0)],
        "mu8" => vec![F, B1, Fi, tvec(1, 0, 0)],
        "mu9" => vec![F, B0, Fi, tvec(1, 1, 0)],
        _ => return None,
    };
    Some(word)
}

/// Look up a standard map by name, or compile an explicit word.
pub fn moebius_map(name_or_word: &str) -> MoebiusResult<MoebiusMapSpec> {
    let trimmed = name_or_word.trim();
    let name = standard_word(trimmed).map(|_| trimmed.to_string());
    MoebiusMapSpec::from_word(name, parse_word(trimmed)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_expression;
    use crate::moebius::sphere_equation;

    #[test]
    fn inverse_image_lands_on_sphere() {
        let fi = stereographic_inverse();
        let s = sphere_equation(Domain::Rational);
        assert!(fi.pull_back(&s).unwrap().is_zero());
    }

    #[test]
    fn stereographic_round_trip_is_identity() {
        let f = stereographic_projection();
        let fi = stereographic_inverse();
        let round = f.compose(&fi).unwrap();
        let w = parse_expression("w", &P3_VARS, Domain::Rational).unwrap();
        let stripped = round.strip_common(&[w]);
        assert!(stripped.is_projective_identity());
    }

    #[test]
    fn inverse_point_values() {
        let fi = stereographic_inverse();
        let one = crate::exact::FieldElement::from_integer(1);
        let zero = crate::exact::FieldElement::from_integer(0);
        let img = fi.apply_point(&[one.clone(), zero.clone(), zero.clone(), one.clone()]);
        let expect: Vec<i64> = vec![2, 0, 0, 0, 2];
        for (v, e) in img.iter().zip(expect) {
            assert_eq!(v, &crate::exact::FieldElement::from_integer(e));
        }
        let img = fi.apply_point(&[
            crate::exact::FieldElement::from_integer(-1),
            one.clone(),
            zero.clone(),
            one.clone(),
        ]);
        let expect: Vec<i64> = vec![-2, 2, 0, 1, 3];
        for (v, e) in img.iter().zip(expect) {
            assert_eq!(v, &crate::exact::FieldElement::from_integer(e));
        }
    }

    #[test]
    fn mu5_components() {
        let spec = moebius_map("mu5").unwrap();
        let expect = ["2*w*x", "2*w*y", "x^2+y^2+z^2-w^2", "x^2+y^2+z^2+w^2-2*w*z"];
        for (comp, text) in spec.forward().components().iter().zip(expect) {
            let e = parse_expression(text, &P3_VARS, Domain::Rational).unwrap();
            assert!(comp.proportional_to(&e), "component {comp} vs {e}");
        }
    }

    #[test]
    fn mu6_components() {
        let spec = moebius_map("mu6").unwrap();
        let expect = ["w*x", "w*y", "w*z", "-(x^2+y^2+z^2)"];
        for (comp, text) in spec.forward().components().iter().zip(expect) {
            let e = parse_expression(text, &P3_VARS, Domain::Rational).unwrap();
            assert!(comp.proportional_to(&e) || comp.proportional_to(&e.neg()));
        }
    }

    #[test]
    fn push_identity_word_is_identity() {
        let s = ProjectiveHypersurface::parse("x^2+y^2+z^2-w^2", Domain::Rational).unwrap();
        let spec = MoebiusMapSpec::from_word(None, vec![]).unwrap();
        let img = spec.push_surface(&s).unwrap();
        assert!(img.poly().proportional_to(s.poly()));
    }

    #[test]
    fn word_round_trip_on_sphere() {
        let s = ProjectiveHypersurface::parse("x^2+y^2+z^2-4*w^2", Domain::Rational).unwrap();
        let spec = moebius_map("mu0").unwrap();
        let img = spec.push_surface(&s).unwrap();
        let back = spec.inverse_spec().unwrap().push_surface(&img).unwrap();
        assert!(back.poly().proportional_to(s.poly()));
    }
}
