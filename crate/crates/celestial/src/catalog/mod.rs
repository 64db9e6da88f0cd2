//! Embedded surface records and expected classification tables, plus a
//! line-oriented text format for user-supplied surfaces.
//!
//! Every embedded record round-trips through the text format; records are
//! read-only after initialization and safe to share across threads.

pub mod format;
pub mod tables;

use crate::exact::{Domain, MultiPoly};
use std::collections::BTreeMap;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("unknown surface `{name}`{}", suggestion.as_ref().map(|s| format!(" (did you mean `{s}`?)")).unwrap_or_default())]
    UnknownName { name: String, suggestion: Option<String> },
    #[error("cannot read `{path}`: {message}")]
    Io { path: String, message: String },
    #[error("user surface `{0}` collides with an embedded catalog name")]
    ReservedName(String),
}

pub type CatalogResult<T> = Result<T, CatalogError>;

/// Which projective space a curve or point lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    /// The projection space with coordinates `(x, y, z, w)`.
    P3,
    /// The sphere-model space with coordinates `(a, b, c, d, e)`.
    Model,
}

/// How the members of a pencil cut the surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PencilKind {
    /// Each member cuts a single circle.
    Circle,
    /// Each member cuts a pair of circles of the family.
    Pair,
}

/// A one-parameter linear family `base + t·direction` of planes or spheres
/// whose sections carry a family of circles.
#[derive(Debug, Clone, PartialEq)]
pub struct PencilRecord {
    /// Member at `t = 0`, a form in `x, y, z, w`.
    pub base: MultiPoly,
    /// Direction of the pencil.
    pub direction: MultiPoly,
    /// For plane pencils: two linear forms cutting the fixed axis line.
    pub axis: Option<(MultiPoly, MultiPoly)>,
    pub kind: PencilKind,
    /// For sphere pencils: the corresponding plane family on the record's
    /// `pullback` source surface (same parameter up to reparametrization).
    pub reduced: Option<(MultiPoly, MultiPoly)>,
}

/// A rationally parametrized curve on the surface or its model.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveRecord {
    /// Components in `s, t`; four of them for `P3`, five for `Model`.
    pub param: Vec<MultiPoly>,
    pub ambient: Ambient,
    pub degree: u32,
    pub multiplicity: u32,
}

impl CurveRecord {
    pub fn is_singular(&self) -> bool {
        self.multiplicity >= 2
    }
}

/// An isolated distinguished point of the surface or its model.
#[derive(Debug, Clone, PartialEq)]
pub struct PointRecord {
    /// Coordinate values; four entries for `P3`, five for `Model`.
    pub coords: Vec<MultiPoly>,
    pub ambient: Ambient,
    pub singular: bool,
}

/// A declared image of the surface under a named map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageRecord {
    /// Map name or word, e.g. `mu6`.
    pub map: String,
    /// Catalog name of the expected image surface.
    pub target: String,
}

/// One catalog surface with everything the verifier needs.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceRecord {
    pub name: String,
    pub domain: Domain,
    /// Homogeneous equation in `x, y, z, w`.
    pub equation: MultiPoly,
    /// Declared `(degree, cyclicity)`.
    pub declared_type: Option<(u32, u32)>,
    /// Short names of the circle-family divisor classes, when known.
    pub classes: Vec<String>,
    pub pencils: Vec<PencilRecord>,
    pub curves: Vec<CurveRecord>,
    pub points: Vec<PointRecord>,
    /// Expected model equations in `a..e`, each congruent to the computed
    /// model cut modulo the sphere, up to a nonzero scalar.
    pub models: Vec<MultiPoly>,
    /// Declared images under named maps.
    pub images: Vec<ImageRecord>,
    /// Map word and source record such that `word(source) = this surface`;
    /// sphere pencils are verified through this correspondence.
    pub pullback: Option<ImageRecord>,
    /// Quotes the printed form that the record corrects.
    pub erratum: Option<String>,
    pub notes: Vec<String>,
    /// Whether the singular curves listed here account for the full
    /// section-genus drop, enabling the genus bookkeeping check.
    pub genus_complete: bool,
}

const EMBEDDED: &[(&str, &str)] = &[
    ("blum", include_str!("data/blum.srf")),
    ("sphere-cyclide", include_str!("data/sphere-cyclide.srf")),
    ("two-components", include_str!("data/two-components.srf")),
    ("perseus", include_str!("data/perseus.srf")),
    ("dupin", include_str!("data/dupin.srf")),
    ("quartic-40", include_str!("data/quartic-40.srf")),
    ("sextic-62", include_str!("data/sextic-62.srf")),
    ("septic-73", include_str!("data/septic-73.srf")),
    ("octic-84", include_str!("data/octic-84.srf")),
    ("eh1", include_str!("data/eh1.srf")),
    ("eh2", include_str!("data/eh2.srf")),
    ("e", include_str!("data/e.srf")),
    ("eo", include_str!("data/eo.srf")),
    ("hp", include_str!("data/hp.srf")),
    ("ep", include_str!("data/ep.srf")),
    ("ch1", include_str!("data/ch1.srf")),
    ("ey", include_str!("data/ey.srf")),
    ("co", include_str!("data/co.srf")),
    ("cy", include_str!("data/cy.srf")),
];

fn registry() -> &'static BTreeMap<&'static str, SurfaceRecord> {
    static REG: OnceLock<BTreeMap<&'static str, SurfaceRecord>> = OnceLock::new();
    REG.get_or_init(|| {
        let mut map = BTreeMap::new();
        for (name, text) in EMBEDDED {
            let record = format::parse_record(text)
                .unwrap_or_else(|e| panic!("embedded record `{name}`: {e}"));
            assert_eq!(&record.name, name, "embedded record name mismatch");
            map.insert(*name, record);
        }
        map
    })
}

/// All embedded record names, in catalog order.
pub fn names() -> Vec<&'static str> {
    EMBEDDED.iter().map(|(n, _)| *n).collect()
}

/// Look up an embedded record by its stable catalog name.
pub fn lookup(name: &str) -> CatalogResult<&'static SurfaceRecord> {
    registry().get(name).ok_or_else(|| CatalogError::UnknownName {
        name: name.to_string(),
        suggestion: suggest(name),
    })
}

/// Closest embedded name by edit distance, if any is plausibly near.
fn suggest(name: &str) -> Option<String> {
    let mut best: Option<(usize, &str)> = None;
    for cand in names() {
        let d = edit_distance(name, cand);
        if best.map_or(true, |(bd, _)| d < bd) {
            best = Some((d, cand));
        }
    }
    best.filter(|&(d, _)| d <= 3).map(|(_, n)| n.to_string())
}

fn edit_distance(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    for (i, &ca) in a.iter().enumerate() {
        let mut cur = vec![i + 1];
        for (j, &cb) in b.iter().enumerate() {
            let cost = usize::from(ca != cb);
            cur.push((prev[j] + cost).min(prev[j + 1] + 1).min(cur[j] + 1));
        }
        prev = cur;
    }
    prev[b.len()]
}

/// Parse a user surface file. The record extends the catalog; names that
/// collide with embedded records are rejected, never overridden.
pub fn load_user_surface(path: &str) -> CatalogResult<SurfaceRecord> {
    let text = std::fs::read_to_string(path).map_err(|e| CatalogError::Io {
        path: path.to_string(),
        message: e.to_string(),
    })?;
    let record = format::parse_record(&text)?;
    if registry().contains_key(record.name.as_str()) {
        return Err(CatalogError::ReservedName(record.name));
    }
    Ok(record)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_embedded_records_load() {
        assert_eq!(registry().len(), 19);
    }

    #[test]
    fn dupin_record_has_four_pencils() {
        let r = lookup("dupin").unwrap();
        assert_eq!(r.pencils.len(), 4);
        assert_eq!(r.declared_type, Some((3, 1)));
        let eq = crate::exact::parse_expression(
            "2*z*(x^2+y^2+z^2)+w*((x+y+z+w)^2+2*z^2)",
            &["x", "y", "z", "w"],
            Domain::Rational,
        )
        .unwrap();
        assert!(r.equation.proportional_to(&eq));
    }

    #[test]
    fn ch1_record_has_model_and_points() {
        let r = lookup("ch1").unwrap();
        assert_eq!(r.models.len(), 1);
        assert_eq!(r.points.len(), 3);
        assert!(r.points.iter().all(|p| p.ambient == Ambient::Model));
    }

    #[test]
    fn unknown_name_gets_suggestion() {
        let err = lookup("nosuch").unwrap_err();
        match err {
            CatalogError::UnknownName { name, .. } => assert_eq!(name, "nosuch"),
            other => panic!("unexpected error {other:?}"),
        }
        let err = lookup("dupni").unwrap_err();
        match err {
            CatalogError::UnknownName { suggestion, .. } => {
                assert_eq!(suggestion.as_deref(), Some("dupin"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn every_record_round_trips_through_the_format() {
        for name in names() {
            let record = lookup(name).unwrap();
            let text = format::serialize_record(record);
            let reparsed = format::parse_record(&text)
                .unwrap_or_else(|e| panic!("round-trip of `{name}`: {e}"));
            assert_eq!(record, &reparsed, "round-trip mismatch for `{name}`");
        }
    }

    #[test]
    fn quartic_40_records_the_erratum() {
        let r = lookup("quartic-40").unwrap();
        assert!(r.erratum.as_deref().unwrap_or_default().contains("2*(w^2-y^2)*(w^2-z^2)"));
    }
}
