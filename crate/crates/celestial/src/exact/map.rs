//! Rational maps between projective spaces: tuples of homogeneous
//! polynomials of a common degree.

use super::element::FieldElement;
use super::poly::MultiPoly;
use super::{ExactError, ExactResult};
use std::fmt;

/// A rational map: one homogeneous component polynomial (in the source
/// variables) per target variable, all of equal degree and not all zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMap {
    source: Vec<String>,
    target: Vec<String>,
    components: Vec<MultiPoly>,
}

impl RationalMap {
    pub fn new(target: &[&str], components: Vec<MultiPoly>) -> ExactResult<Self> {
        if components.is_empty() || components.len() != target.len() {
            return Err(ExactError::Invalid("map needs one component per target variable".into()));
        }
        let source = components[0].vars().to_vec();
        let mut deg: Option<u32> = None;
        let mut all_zero = true;
        for c in &components {
            if c.vars() != source.as_slice() {
                return Err(ExactError::VariableMismatch {
                    expected: source.clone(),
                    got: c.vars().to_vec(),
                });
            }
            if !c.is_homogeneous() {
                return Err(ExactError::Invalid("map components must be homogeneous".into()));
            }
            if !c.is_zero() {
                all_zero = false;
                match deg {
                    None => deg = Some(c.total_degree()),
                    Some(d) if d == c.total_degree() => {}
                    Some(d) => {
                        return Err(ExactError::Invalid(format!(
                            "map components of unequal degree {} vs {}",
                            d,
                            c.total_degree()
                        )))
                    }
                }
            }
        }
        if all_zero {
            return Err(ExactError::Invalid("all map components are zero".into()));
        }
        Ok(RationalMap {
            source,
            target: target.iter().map(|s| s.to_string()).collect(),
            components,
        })
    }

    pub fn source(&self) -> &[String] {
        &self.source
    }

    pub fn target(&self) -> &[String] {
        &self.target
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    pub fn degree(&self) -> u32 {
        self.components
            .iter()
            .find(|c| !c.is_zero())
            .map(|c| c.total_degree())
            .unwrap_or(0)
    }

    /// Substitute this map into `poly` (whose variables must be the map's
    /// target variables). The result lives in the source variables.
    pub fn pull_back(&self, poly: &MultiPoly) -> ExactResult<MultiPoly> {
        if poly.vars() != self.target.as_slice() {
            return Err(ExactError::VariableMismatch {
                expected: self.target.clone(),
                got: poly.vars().to_vec(),
            });
        }
        poly.substitute(&self.components)
    }

    /// Composition self ∘ inner (apply `inner` first).
    pub fn compose(&self, inner: &RationalMap) -> ExactResult<RationalMap> {
        if inner.target != self.source {
            return Err(ExactError::VariableMismatch {
                expected: self.source.clone(),
                got: inner.target.clone(),
            });
        }
        let comps: ExactResult<Vec<MultiPoly>> =
            self.components.iter().map(|c| c.substitute(&inner.components)).collect();
        RationalMap::new(
            &self.target.iter().map(String::as_str).collect::<Vec<_>>(),
            comps?,
        )
    }

    /// Divide all components by every candidate factor that divides each of
    /// them, then scale so the first nonzero component is monic. This leaves
    /// the projective map unchanged.
    pub fn strip_common(&self, candidates: &[MultiPoly]) -> RationalMap {
        let mut comps = self.components.clone();
        let mut progress = true;
        while progress {
            progress = false;
            for cand in candidates {
                if cand.total_degree() == 0 {
                    continue;
                }
                let quotients: Option<Vec<MultiPoly>> = comps
                    .iter()
                    .map(|c| {
                        if c.is_zero() {
                            Some(c.clone())
                        } else {
                            c.trial_divide(cand)
                        }
                    })
                    .collect();
                if let Some(qs) = quotients {
                    comps = qs;
                    progress = true;
                }
            }
        }
        let lead = comps
            .iter()
            .find_map(|c| c.leading_coefficient().cloned())
            .expect("map has a nonzero component");
        let inv = lead.inv().expect("nonzero leading coefficient");
        let comps = comps.iter().map(|c| c.scale(&inv)).collect();
        RationalMap {
            source: self.source.clone(),
            target: self.target.clone(),
            components: comps,
        }
    }

    /// Evaluate at a point (projective coordinates in the source space).
    pub fn apply_point(&self, point: &[FieldElement]) -> Vec<FieldElement> {
        self.components.iter().map(|c| c.eval(point)).collect()
    }

    /// True when the map is the identity up to a scalar/polynomial factor:
    /// all 2×2 "cross products" component_i·x_j − component_j·x_i vanish.
    pub fn is_projective_identity(&self) -> bool {
        if self.source != self.target {
            return false;
        }
        let vsrc: Vec<&str> = self.source.iter().map(String::as_str).collect();
        let dom = self.components[0].domain();
        let vars: Vec<MultiPoly> = self
            .source
            .iter()
            .map(|v| MultiPoly::var(&vsrc, v, dom).expect("source var"))
            .collect();
        for i in 0..self.components.len() {
            for j in (i + 1)..self.components.len() {
                let lhs = self.components[i].mul(&vars[j]);
                let rhs = self.components[j].mul(&vars[i]);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) -> (", self.source.join(":"))?;
        for (k, c) in self.components.iter().enumerate() {
            if k > 0 {
                write!(f, " : ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}
