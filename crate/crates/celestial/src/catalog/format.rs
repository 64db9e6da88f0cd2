//! The surface text format (UTF-8, line oriented).
//!
//! Top-level keys come first, then sections. Keys:
//!
//! ```text
//! name=dupin
//! domain=rational | gaussian | quad:m        (m squarefree, >= 2)
//! type=3,1                                   (degree, cyclicity; optional)
//! classes=a1,a2,a3,b3                        (optional)
//! erratum=...                                (optional free text)
//! note=...                                   (repeatable free text)
//! genus-complete=yes|no                      (default no)
//! image=mu6 sextic-62                        (repeatable: map, target)
//! pullback=mu6 quartic-40                    (map, source this is the image of)
//! equation=2*z*(x^2+y^2+z^2)+w*((x+y+z+w)^2+2*z^2)
//! ```
//!
//! Sections, each introduced by a bracketed header:
//!
//! ```text
//! [model]            equation= (in a, b, c, d, e)
//! [pencil]           kind=circle|pair, base=, direction=,
//!                    axis1=/axis2= (optional), reduced-base=/reduced-direction=
//! [singular-curve]   param_x=..param_w= or param_a=..param_e= (in s, t),
//!                    degree=, multiplicity= (default 2)
//! [curve]            same keys; multiplicity defaults to 1
//! [point]            point=v,v,v,v (P3) or v,v,v,v,v (model), singular=yes|no
//! ```
//!
//! Expressions follow the grammar of [`crate::exact::parse_expression`]. The
//! declared `domain=` is the coefficient domain of the equation; expressions
//! elsewhere may extend it by a single `sqrt(m)` or `i` literal, which
//! promotes that expression's domain. Blank lines and lines starting with `#`
//! are ignored.

use super::{
    Ambient, CatalogError, CatalogResult, CurveRecord, ImageRecord, PencilKind, PencilRecord,
    PointRecord, SurfaceRecord,
};
use crate::exact::{parse_expression, Domain, ExactError, MultiPoly};
use serde_json::{json, Value};

const P3: [&str; 4] = ["x", "y", "z", "w"];
const P4: [&str; 5] = ["a", "b", "c", "d", "e"];
const ST: [&str; 2] = ["s", "t"];

fn err(line: usize, column: usize, message: impl Into<String>) -> CatalogError {
    CatalogError::Parse { line, column, message: message.into() }
}

/// Parse an expression, reporting positions relative to the value text and
/// promoting the domain when the expression demands a larger one.
fn expr(line: usize, col0: usize, text: &str, vars: &[&str], dom: Domain) -> CatalogResult<MultiPoly> {
    let attempt = |d: Domain| parse_expression(text, vars, d);
    let out = match attempt(dom) {
        Ok(p) => Ok(p),
        Err(ExactError::DomainTooSmall { required, .. }) => {
            let joined = dom.join(required).map_err(|e| err(line, col0, e.to_string()))?;
            attempt(joined)
        }
        Err(e) => Err(e),
    };
    out.map_err(|e| match e {
        ExactError::Syntax { pos, msg } => err(line, col0 + pos + 1, msg),
        ExactError::UnknownVariable { pos, name } => {
            err(line, col0 + pos + 1, format!("unknown variable `{name}`"))
        }
        other => err(line, col0, other.to_string()),
    })
}

fn parse_domain(line: usize, col: usize, text: &str) -> CatalogResult<Domain> {
    match text {
        "rational" => Ok(Domain::Rational),
        "gaussian" => Ok(Domain::Gaussian),
        other => {
            if let Some(m) = other.strip_prefix("quad:") {
                let m: i64 = m
                    .parse()
                    .map_err(|_| err(line, col, format!("bad radicand `{m}`")))?;
                Domain::quad(m).map_err(|e| err(line, col, e.to_string()))
            } else {
                Err(err(line, col, format!("unknown domain `{other}`")))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Section {
    Top,
    Model,
    Pencil,
    SingularCurve,
    Curve,
    Point,
}

#[derive(Default)]
struct PencilDraft {
    kind: Option<PencilKind>,
    base: Option<MultiPoly>,
    direction: Option<MultiPoly>,
    axis1: Option<MultiPoly>,
    axis2: Option<MultiPoly>,
    reduced_base: Option<MultiPoly>,
    reduced_direction: Option<MultiPoly>,
    line: usize,
}

#[derive(Default)]
struct CurveDraft {
    params: Vec<(String, MultiPoly)>,
    degree: Option<u32>,
    multiplicity: Option<u32>,
    singular: bool,
    line: usize,
}

#[derive(Default)]
struct PointDraft {
    coords: Option<Vec<MultiPoly>>,
    singular: bool,
    line: usize,
}

struct Builder {
    name: Option<String>,
    domain: Domain,
    domain_seen: bool,
    equation: Option<MultiPoly>,
    declared_type: Option<(u32, u32)>,
    classes: Vec<String>,
    erratum: Option<String>,
    notes: Vec<String>,
    genus_complete: bool,
    images: Vec<ImageRecord>,
    pullback: Option<ImageRecord>,
    models: Vec<MultiPoly>,
    pencils: Vec<PencilRecord>,
    curves: Vec<CurveRecord>,
    points: Vec<PointRecord>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            name: None,
            domain: Domain::Rational,
            domain_seen: false,
            equation: None,
            declared_type: None,
            classes: Vec::new(),
            erratum: None,
            notes: Vec::new(),
            genus_complete: false,
            images: Vec::new(),
            pullback: None,
            models: Vec::new(),
            pencils: Vec::new(),
            curves: Vec::new(),
            points: Vec::new(),
        }
    }

    fn finish_pencil(&mut self, d: PencilDraft) -> CatalogResult<()> {
        let kind = d.kind.ok_or_else(|| err(d.line, 1, "[pencil] requires kind="))?;
        let base = d.base.ok_or_else(|| err(d.line, 1, "[pencil] requires base="))?;
        let direction =
            d.direction.ok_or_else(|| err(d.line, 1, "[pencil] requires direction="))?;
        let axis = match (d.axis1, d.axis2) {
            (Some(a), Some(b)) => Some((a, b)),
            (None, None) => None,
            _ => return Err(err(d.line, 1, "axis1= and axis2= must appear together")),
        };
        let reduced = match (d.reduced_base, d.reduced_direction) {
            (Some(a), Some(b)) => Some((a, b)),
            (None, None) => None,
            _ => {
                return Err(err(
                    d.line,
                    1,
                    "reduced-base= and reduced-direction= must appear together",
                ))
            }
        };
        self.pencils.push(PencilRecord { base, direction, axis, kind, reduced });
        Ok(())
    }

    fn finish_curve(&mut self, d: CurveDraft) -> CatalogResult<()> {
        let keys: Vec<&str> = d.params.iter().map(|(k, _)| k.as_str()).collect();
        let ambient = if keys == P3 {
            Ambient::P3
        } else if keys == P4 {
            Ambient::Model
        } else {
            return Err(err(
                d.line,
                1,
                "curve needs param_x=..param_w= (in order) or param_a=..param_e=",
            ));
        };
        let degree = d.degree.ok_or_else(|| err(d.line, 1, "curve requires degree="))?;
        let multiplicity = d.multiplicity.unwrap_or(if d.singular { 2 } else { 1 });
        if d.singular && multiplicity < 2 {
            return Err(err(d.line, 1, "singular curves need multiplicity >= 2"));
        }
        self.curves.push(CurveRecord {
            param: d.params.into_iter().map(|(_, p)| p).collect(),
            ambient,
            degree,
            multiplicity,
        });
        Ok(())
    }

    fn finish_point(&mut self, d: PointDraft) -> CatalogResult<()> {
        let coords = d.coords.ok_or_else(|| err(d.line, 1, "[point] requires point="))?;
        let ambient = match coords.len() {
            4 => Ambient::P3,
            5 => Ambient::Model,
            n => return Err(err(d.line, 1, format!("point has {n} coordinates, want 4 or 5"))),
        };
        self.points.push(PointRecord { coords, ambient, singular: d.singular });
        Ok(())
    }
}

/// Parse one record from text; errors carry line and column numbers.
pub fn parse_record(text: &str) -> CatalogResult<SurfaceRecord> {
    let mut b = Builder::new();
    let mut section = Section::Top;
    let mut pencil: Option<PencilDraft> = None;
    let mut curve: Option<CurveDraft> = None;
    let mut point: Option<PointDraft> = None;

    let close = |b: &mut Builder,
                     pencil: &mut Option<PencilDraft>,
                     curve: &mut Option<CurveDraft>,
                     point: &mut Option<PointDraft>|
     -> CatalogResult<()> {
        if let Some(d) = pencil.take() {
            b.finish_pencil(d)?;
        }
        if let Some(d) = curve.take() {
            b.finish_curve(d)?;
        }
        if let Some(d) = point.take() {
            b.finish_point(d)?;
        }
        Ok(())
    };

    for (idx, raw) in text.lines().enumerate() {
        let lno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(header) = line.strip_prefix('[') {
            let header = header
                .strip_suffix(']')
                .ok_or_else(|| err(lno, line.len(), "unterminated section header"))?;
            close(&mut b, &mut pencil, &mut curve, &mut point)?;
            section = match header {
                "model" => Section::Model,
                "pencil" => {
                    pencil = Some(PencilDraft { line: lno, ..Default::default() });
                    Section::Pencil
                }
                "singular-curve" => {
                    curve = Some(CurveDraft { singular: true, line: lno, ..Default::default() });
                    Section::SingularCurve
                }
                "curve" => {
                    curve = Some(CurveDraft { line: lno, ..Default::default() });
                    Section::Curve
                }
                "point" => {
                    point = Some(PointDraft { singular: true, line: lno, ..Default::default() });
                    Section::Point
                }
                other => return Err(err(lno, 2, format!("unknown section `[{other}]`"))),
            };
            continue;
        }
        let eq_pos = line
            .find('=')
            .ok_or_else(|| err(lno, 1, "expected `key=value` or a `[section]` header"))?;
        let key = line[..eq_pos].trim();
        let value = line[eq_pos + 1..].trim();
        // Column where the value starts, for expression error positions.
        let vcol = eq_pos + 1;
        match section {
            Section::Top => match key {
                "name" => b.name = Some(value.to_string()),
                "domain" => {
                    b.domain = parse_domain(lno, vcol + 1, value)?;
                    b.domain_seen = true;
                }
                "type" => {
                    let parts: Vec<&str> = value.split(',').map(str::trim).collect();
                    let bad = || err(lno, vcol + 1, "type wants `degree,cyclicity`");
                    if parts.len() != 2 {
                        return Err(bad());
                    }
                    let d: u32 = parts[0].parse().map_err(|_| bad())?;
                    let c: u32 = parts[1].parse().map_err(|_| bad())?;
                    b.declared_type = Some((d, c));
                }
                "classes" => {
                    b.classes =
                        value.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
                }
                "erratum" => b.erratum = Some(value.to_string()),
                "note" => b.notes.push(value.to_string()),
                "genus-complete" => {
                    b.genus_complete = match value {
                        "yes" => true,
                        "no" => false,
                        other => {
                            return Err(err(lno, vcol + 1, format!("want yes|no, got `{other}`")))
                        }
                    }
                }
                "image" | "pullback" => {
                    let (map, target) = value
                        .split_once(' ')
                        .ok_or_else(|| err(lno, vcol + 1, "want `<map> <record-name>`"))?;
                    let rec =
                        ImageRecord { map: map.trim().to_string(), target: target.trim().to_string() };
                    if key == "image" {
                        b.images.push(rec);
                    } else {
                        b.pullback = Some(rec);
                    }
                }
                "equation" => {
                    if !b.domain_seen && b.equation.is_none() {
                        // Default domain is fine; nothing to do.
                    }
                    b.equation = Some(expr(lno, vcol, value, &P3, b.domain)?);
                }
                other => return Err(err(lno, 1, format!("unknown key `{other}`"))),
            },
            Section::Model => match key {
                "equation" => b.models.push(expr(lno, vcol, value, &P4, b.domain)?),
                other => return Err(err(lno, 1, format!("unknown key `{other}` in [model]"))),
            },
            Section::Pencil => {
                let d = pencil.as_mut().expect("pencil section open");
                match key {
                    "kind" => {
                        d.kind = Some(match value {
                            "circle" => PencilKind::Circle,
                            "pair" => PencilKind::Pair,
                            other => {
                                return Err(err(
                                    lno,
                                    vcol + 1,
                                    format!("want circle|pair, got `{other}`"),
                                ))
                            }
                        })
                    }
                    "base" => d.base = Some(expr(lno, vcol, value, &P3, b.domain)?),
                    "direction" => d.direction = Some(expr(lno, vcol, value, &P3, b.domain)?),
                    "axis1" => d.axis1 = Some(expr(lno, vcol, value, &P3, b.domain)?),
                    "axis2" => d.axis2 = Some(expr(lno, vcol, value, &P3, b.domain)?),
                    "reduced-base" => d.reduced_base = Some(expr(lno, vcol, value, &P3, b.domain)?),
                    "reduced-direction" => {
                        d.reduced_direction = Some(expr(lno, vcol, value, &P3, b.domain)?)
                    }
                    other => return Err(err(lno, 1, format!("unknown key `{other}` in [pencil]"))),
                }
            }
            Section::SingularCurve | Section::Curve => {
                let d = curve.as_mut().expect("curve section open");
                match key {
                    "degree" => {
                        d.degree = Some(value.parse().map_err(|_| {
                            err(lno, vcol + 1, "degree wants a nonnegative integer")
                        })?)
                    }
                    "multiplicity" => {
                        d.multiplicity = Some(value.parse().map_err(|_| {
                            err(lno, vcol + 1, "multiplicity wants a nonnegative integer")
                        })?)
                    }
                    k if k.starts_with("param_") => {
                        let coord = &k["param_".len()..];
                        if !(P3.contains(&coord) || P4.contains(&coord)) {
                            return Err(err(lno, 1, format!("unknown coordinate `{coord}`")));
                        }
                        d.params.push((coord.to_string(), expr(lno, vcol, value, &ST, b.domain)?));
                    }
                    other => return Err(err(lno, 1, format!("unknown key `{other}` in curve"))),
                }
            }
            Section::Point => {
                let d = point.as_mut().expect("point section open");
                match key {
                    "point" => {
                        let mut coords = Vec::new();
                        let mut col = vcol;
                        for piece in value.split(',') {
                            coords.push(expr(lno, col, piece.trim(), &[], b.domain)?);
                            col += piece.len() + 1;
                        }
                        d.coords = Some(coords);
                    }
                    "singular" => {
                        d.singular = match value {
                            "yes" => true,
                            "no" => false,
                            other => {
                                return Err(err(lno, vcol + 1, format!("want yes|no, got `{other}`")))
                            }
                        }
                    }
                    other => return Err(err(lno, 1, format!("unknown key `{other}` in [point]"))),
                }
            }
        }
    }
    close(&mut b, &mut pencil, &mut curve, &mut point)?;

    let name = b.name.ok_or_else(|| err(1, 1, "missing name="))?;
    let equation = b.equation.ok_or_else(|| err(1, 1, "missing equation="))?;
    Ok(SurfaceRecord {
        name,
        domain: b.domain,
        equation,
        declared_type: b.declared_type,
        classes: b.classes,
        pencils: b.pencils,
        curves: b.curves,
        points: b.points,
        models: b.models,
        images: b.images,
        pullback: b.pullback,
        erratum: b.erratum,
        notes: b.notes,
        genus_complete: b.genus_complete,
    })
}

/// Serialize a record in canonical key order; `parse_record` inverts this.
pub fn serialize_record(r: &SurfaceRecord) -> String {
    let mut out = String::new();
    let mut push = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    push(format!("name={}", r.name));
    push(format!("domain={}", r.domain));
    if let Some((d, c)) = r.declared_type {
        push(format!("type={d},{c}"));
    }
    if !r.classes.is_empty() {
        push(format!("classes={}", r.classes.join(",")));
    }
    if let Some(e) = &r.erratum {
        push(format!("erratum={e}"));
    }
    for n in &r.notes {
        push(format!("note={n}"));
    }
    push(format!("genus-complete={}", if r.genus_complete { "yes" } else { "no" }));
    for im in &r.images {
        push(format!("image={} {}", im.map, im.target));
    }
    if let Some(pb) = &r.pullback {
        push(format!("pullback={} {}", pb.map, pb.target));
    }
    push(format!("equation={}", compact(&r.equation)));
    for m in &r.models {
        push("[model]".to_string());
        push(format!("equation={}", compact(m)));
    }
    for p in &r.pencils {
        push("[pencil]".to_string());
        push(format!(
            "kind={}",
            match p.kind {
                PencilKind::Circle => "circle",
                PencilKind::Pair => "pair",
            }
        ));
        push(format!("base={}", compact(&p.base)));
        push(format!("direction={}", compact(&p.direction)));
        if let Some((a1, a2)) = &p.axis {
            push(format!("axis1={}", compact(a1)));
            push(format!("axis2={}", compact(a2)));
        }
        if let Some((rb, rd)) = &p.reduced {
            push(format!("reduced-base={}", compact(rb)));
            push(format!("reduced-direction={}", compact(rd)));
        }
    }
    for c in &r.curves {
        push(if c.is_singular() { "[singular-curve]".to_string() } else { "[curve]".to_string() });
        let names = match c.ambient {
            Ambient::P3 => &P3[..],
            Ambient::Model => &P4[..],
        };
        for (name, p) in names.iter().zip(&c.param) {
            push(format!("param_{name}={}", compact(p)));
        }
        push(format!("degree={}", c.degree));
        push(format!("multiplicity={}", c.multiplicity));
    }
    for p in &r.points {
        push("[point]".to_string());
        let coords: Vec<String> = p.coords.iter().map(compact).collect();
        push(format!("point={}", coords.join(",")));
        push(format!("singular={}", if p.singular { "yes" } else { "no" }));
    }
    out
}

/// Whitespace-free rendering of a polynomial, still within the grammar.
fn compact(p: &MultiPoly) -> String {
    p.to_string().replace(' ', "")
}

/// Machine export with the same field names as the text format.
pub fn record_to_json(r: &SurfaceRecord) -> Value {
    let pencil_json = |p: &PencilRecord| {
        let mut v = json!({
            "kind": match p.kind { PencilKind::Circle => "circle", PencilKind::Pair => "pair" },
            "base": compact(&p.base),
            "direction": compact(&p.direction),
        });
        if let Some((a1, a2)) = &p.axis {
            v["axis1"] = json!(compact(a1));
            v["axis2"] = json!(compact(a2));
        }
        if let Some((rb, rd)) = &p.reduced {
            v["reduced-base"] = json!(compact(rb));
            v["reduced-direction"] = json!(compact(rd));
        }
        v
    };
    let curve_json = |c: &CurveRecord| {
        json!({
            "ambient": match c.ambient { Ambient::P3 => "p3", Ambient::Model => "model" },
            "param": c.param.iter().map(compact).collect::<Vec<_>>(),
            "degree": c.degree,
            "multiplicity": c.multiplicity,
        })
    };
    let mut v = json!({
        "name": r.name,
        "domain": r.domain.to_string(),
        "equation": compact(&r.equation),
        "classes": r.classes,
        "genus-complete": r.genus_complete,
        "pencils": r.pencils.iter().map(pencil_json).collect::<Vec<_>>(),
        "curves": r.curves.iter().map(curve_json).collect::<Vec<_>>(),
        "points": r.points.iter().map(|p| json!({
            "point": p.coords.iter().map(compact).collect::<Vec<_>>(),
            "singular": p.singular,
        })).collect::<Vec<_>>(),
        "models": r.models.iter().map(compact).collect::<Vec<_>>(),
        "images": r.images.iter().map(|i| json!({"map": i.map, "target": i.target})).collect::<Vec<_>>(),
    });
    if let Some((d, c)) = r.declared_type {
        v["type"] = json!(format!("{d},{c}"));
    }
    if let Some(e) = &r.erratum {
        v["erratum"] = json!(e);
    }
    if !r.notes.is_empty() {
        v["notes"] = json!(r.notes);
    }
    if let Some(pb) = &r.pullback {
        v["pullback"] = json!({"map": pb.map, "target": pb.target});
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_sphere_record_parses() {
        let text = "name=unit-sphere\ndomain=rational\ntype=2,1\n\
                    equation=x^2+y^2+z^2-w^2\n\
                    [pencil]\nkind=circle\nbase=z\ndirection=w\n";
        let r = parse_record(text).unwrap();
        assert_eq!(r.name, "unit-sphere");
        assert_eq!(r.declared_type, Some((2, 1)));
        assert_eq!(r.pencils.len(), 1);
    }

    #[test]
    fn non_squarefree_radicand_is_rejected() {
        let text = "name=bad\ndomain=rational\nequation=x^2-sqrt(8)*w^2\n";
        let e = parse_record(text).unwrap_err();
        match e {
            CatalogError::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn syntax_error_carries_line_and_column() {
        let text = "name=bad\nequation=x^2+*y\n";
        match parse_record(text).unwrap_err() {
            CatalogError::Parse { line, column, .. } => {
                assert_eq!(line, 2);
                assert!(column > "equation=".len());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn larger_literals_promote_the_expression_domain() {
        let text = "name=prom\ndomain=rational\nequation=x^2+y^2+z^2-w^2\n\
                    [pencil]\nkind=circle\nbase=z\ndirection=x+sqrt(2)*y\n";
        let r = parse_record(text).unwrap();
        assert_eq!(r.domain, Domain::Rational);
        assert_eq!(r.pencils[0].direction.domain(), Domain::quad(2).unwrap());
    }
}
