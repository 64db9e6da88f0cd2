//! ADE classification of the intersection graph of a root configuration.

use super::{LatticeError, LatticeResult, RootConfiguration};
use std::collections::BTreeMap;

/// Multiset of irreducible components (letter, rank); prints like `A3+2A1`,
/// with `A0` for the empty type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DynkinType {
    comps: Vec<(char, usize)>,
}

impl DynkinType {
    pub fn empty() -> Self {
        DynkinType { comps: Vec::new() }
    }

    pub fn from_components(mut comps: Vec<(char, usize)>) -> Self {
        // Canonical order: rank descending, then letter descending (so D4
        // precedes A4 only through rank; within equal rank D > A).
        comps.sort_by(|a, b| b.1.cmp(&a.1).then(b.0.cmp(&a.0)));
        DynkinType { comps }
    }

    /// Parse strings like "A0", "2A1", "A3+2A1", "D4".
    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        if s == "A0" {
            return Some(Self::empty());
        }
        let mut comps = Vec::new();
        for part in s.split('+') {
            let part = part.trim();
            let letter_pos = part.find(|c: char| c.is_ascii_alphabetic())?;
            let mult: usize = if letter_pos == 0 { 1 } else { part[..letter_pos].parse().ok()? };
            let letter = part[letter_pos..].chars().next()?;
            let rank: usize = part[letter_pos + 1..].parse().ok()?;
            for _ in 0..mult {
                comps.push((letter, rank));
            }
        }
        Some(Self::from_components(comps))
    }

    pub fn components(&self) -> &[(char, usize)] {
        &self.comps
    }

    pub fn num_components(&self) -> usize {
        self.comps.len()
    }
}

impl std::fmt::Display for DynkinType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.comps.is_empty() {
            return write!(f, "A0");
        }
        let mut counts: BTreeMap<(usize, char), usize> = BTreeMap::new();
        for &(l, r) in &self.comps {
            *counts.entry((r, l)).or_default() += 1;
        }
        let mut first = true;
        for (&(rank, letter), &mult) in counts.iter().rev() {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if mult > 1 {
                write!(f, "{mult}{letter}{rank}")?;
            } else {
                write!(f, "{letter}{rank}")?;
            }
        }
        Ok(())
    }
}

/// Classify the intersection graph (edge iff product ≠ 0) into ADE components.
pub fn dynkin_type(config: &RootConfiguration) -> LatticeResult<DynkinType> {
    let classes = config.classes();
    let n = classes.len();
    let mut adj = vec![Vec::new(); n];
    let mut edges = 0usize;
    for i in 0..n {
        for j in (i + 1)..n {
            if classes[i].intersect(&classes[j]) != 0 {
                adj[i].push(j);
                adj[j].push(i);
                edges += 1;
            }
        }
    }
    // Connected components by DFS.
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut stack = vec![start];
        let mut nodes = Vec::new();
        seen[start] = true;
        while let Some(v) = stack.pop() {
            nodes.push(v);
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comps.push(classify_component(&nodes, &adj)?);
    }
    // A global cycle across components is impossible; per-component edge
    // counts are checked in classify_component, so `edges` is only used for
    // the tree sanity check below.
    let _ = edges;
    Ok(DynkinType::from_components(comps))
}

fn classify_component(nodes: &[usize], adj: &[Vec<usize>]) -> LatticeResult<(char, usize)> {
    let n = nodes.len();
    let in_comp = |v: usize| nodes.contains(&v);
    let degree =
        |v: usize| -> usize { adj[v].iter().filter(|&&w| in_comp(w)).count() };
    let edge_count: usize = nodes.iter().map(|&v| degree(v)).sum::<usize>() / 2;
    if edge_count != n - 1 {
        return Err(LatticeError::NotDynkin(format!(
            "component with {n} nodes and {edge_count} edges (cycle)"
        )));
    }
    let degrees: Vec<usize> = nodes.iter().map(|&v| degree(v)).collect();
    if degrees.iter().any(|&d| d > 3) {
        return Err(LatticeError::NotDynkin("vertex of degree > 3".into()));
    }
    let branch_nodes: Vec<usize> =
        nodes.iter().copied().filter(|&v| degree(v) == 3).collect();
    match branch_nodes.len() {
        0 => Ok(('A', n)),
        1 => {
            // Measure the three branch lengths from the unique degree-3 node.
            let center = branch_nodes[0];
            let mut lengths = Vec::new();
            for &nb in adj[center].iter().filter(|&&w| in_comp(w)) {
                let mut len = 1usize;
                let mut prev = center;
                let mut cur = nb;
                loop {
                    let next: Vec<usize> = adj[cur]
                        .iter()
                        .copied()
                        .filter(|&w| in_comp(w) && w != prev)
                        .collect();
                    match next.as_slice() {
                        [] => break,
                        [w] => {
                            prev = cur;
                            cur = *w;
                            len += 1;
                        }
                        _ => unreachable!("second branch point already excluded"),
                    }
                }
                lengths.push(len);
            }
            lengths.sort();
            match lengths.as_slice() {
                [1, 1, _] => Ok(('D', n)),
                [1, 2, 2] => Ok(('E', 6)),
                [1, 2, 3] => Ok(('E', 7)),
                [1, 2, 4] => Ok(('E', 8)),
                other => Err(LatticeError::NotDynkin(format!("branch lengths {other:?}"))),
            }
        }
        _ => Err(LatticeError::NotDynkin("two branch points".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::LatticeSpec;

    fn cfg(names: &[&str]) -> RootConfiguration {
        RootConfiguration::from_short_names(LatticeSpec::B(5), names).unwrap()
    }

    #[test]
    fn table_row_types() {
        assert_eq!(dynkin_type(&cfg(&[])).unwrap().to_string(), "A0");
        assert_eq!(dynkin_type(&cfg(&["12", "34", "45"])).unwrap().to_string(), "A2+A1");
        assert_eq!(dynkin_type(&cfg(&["1123", "23", "34", "45"])).unwrap().to_string(), "D4");
        assert_eq!(dynkin_type(&cfg(&["12", "23", "34", "45"])).unwrap().to_string(), "A4");
        assert_eq!(
            dynkin_type(&cfg(&["1145", "1123", "12", "23", "45"])).unwrap().to_string(),
            "A3+2A1"
        );
        assert_eq!(
            dynkin_type(&cfg(&["1123", "12", "23", "34", "45"])).unwrap().to_string(),
            "D5"
        );
    }

    #[test]
    fn parse_and_print() {
        for s in ["A0", "A1", "2A1", "A2+A1", "A3+2A1", "D4", "D5", "4A1"] {
            let t = DynkinType::parse(s).unwrap();
            assert_eq!(t.to_string(), s);
        }
    }
}
