//! Weyl-orbit census of simple-root configurations in B(5) and the
//! classification tables derived from it.

use crate::catalog::tables::{TABLE_C1, TABLE_G, TABLE_M4_CLASS, TABLE_M4_CLS};
use crate::lattice::{
    apply_to_config, dynkin_type, enumerate_classes, real_structure, short_name, weyl_group,
    DivisorClass, LatticeSpec, RealStructure, RootConfiguration,
};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use super::{ClassifierError, ClassifierResult};

/// Sorted coordinate key of a configuration — the set identity used
/// throughout the census.
type ConfigKey = Vec<Vec<i64>>;

/// One Weyl orbit of simple-root configurations.
pub struct Orbit {
    /// Row index 16..=31 of the expected configuration table.
    pub ci: u8,
    /// The table representative (confirmed member of the orbit).
    pub representative: RootConfiguration,
    /// Dynkin type shared by every member.
    pub dynkin: String,
    /// Every configuration in the orbit.
    pub members: Vec<RootConfiguration>,
}

/// Complete partition of the configurations of B(5) into Weyl orbits.
pub struct Census {
    pub orbits: Vec<Orbit>,
    pub total_configurations: usize,
}

const B5: LatticeSpec = LatticeSpec::B(5);

/// All simple-root configurations: subsets of the 40 roots with pairwise
/// products in {0, 1} whose intersection graph is a disjoint union of
/// A-D-E trees (equivalently, whose span is negative definite — sets with
/// affine subdiagrams are not zero-sets of effective classes).
fn all_configurations() -> ClassifierResult<Vec<RootConfiguration>> {
    let roots = enumerate_classes(B5, -2, 0)?;
    let n = roots.len();
    let mut compatible = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            let p = roots[i].intersect(&roots[j]);
            compatible[i][j] = i != j && (p == 0 || p == 1);
        }
    }
    let mut out = vec![RootConfiguration::empty(B5)];
    let mut stack: Vec<usize> = Vec::new();
    fn dfs(
        start: usize,
        roots: &[DivisorClass],
        compatible: &[Vec<bool>],
        stack: &mut Vec<usize>,
        out: &mut Vec<RootConfiguration>,
    ) {
        for i in start..roots.len() {
            if !stack.iter().all(|&j| compatible[j][i]) {
                continue;
            }
            stack.push(i);
            let classes: Vec<DivisorClass> = stack.iter().map(|&j| roots[j].clone()).collect();
            let config = RootConfiguration::new(B5, classes).expect("pairwise-compatible roots");
            if dynkin_type(&config).is_ok() {
                out.push(config);
                dfs(i + 1, roots, compatible, stack, out);
            }
            stack.pop();
        }
    }
    dfs(0, &roots, &compatible, &mut stack, &mut out);
    Ok(out)
}

fn config_from_key(key: &ConfigKey) -> RootConfiguration {
    let classes = key.iter().map(|c| DivisorClass::new(B5, c.clone())).collect();
    RootConfiguration::new(B5, classes).expect("orbit member is a valid configuration")
}

fn build_census() -> ClassifierResult<Census> {
    let configs = all_configurations()?;
    let total_configurations = configs.len();
    let group = weyl_group(B5)?;
    let mut unassigned: BTreeMap<ConfigKey, RootConfiguration> =
        configs.into_iter().map(|c| (c.key(), c)).collect();
    let table_reps: Vec<(u8, RootConfiguration)> = TABLE_C1
        .iter()
        .map(|(ci, names, _)| {
            let cfg = RootConfiguration::from_short_names(B5, names)
                .expect("expected-table representative");
            (*ci, cfg)
        })
        .collect();
    let mut orbits = Vec::new();
    while let Some(seed_key) = unassigned.keys().next().cloned() {
        let seed = unassigned[&seed_key].clone();
        let mut member_keys: BTreeSet<ConfigKey> = BTreeSet::new();
        for m in group {
            member_keys.insert(apply_to_config(m, &seed).key());
        }
        for k in &member_keys {
            if unassigned.remove(k).is_none() {
                return Err(ClassifierError::Census(format!(
                    "orbit member {k:?} missing from the configuration enumeration"
                )));
            }
        }
        let matched: Vec<&(u8, RootConfiguration)> = table_reps
            .iter()
            .filter(|(_, rep)| member_keys.contains(&rep.key()))
            .collect();
        let [(ci, representative)] = matched.as_slice() else {
            return Err(ClassifierError::Census(format!(
                "orbit of {seed} contains {} expected-table representatives, not exactly one",
                matched.len()
            )));
        };
        let dynkin = dynkin_type(representative)?.to_string();
        let members = member_keys.iter().map(config_from_key).collect();
        orbits.push(Orbit { ci: *ci, representative: representative.clone(), dynkin, members });
    }
    orbits.sort_by_key(|o| o.ci);
    Ok(Census { orbits, total_configurations })
}

/// The census, computed once and shared.
pub fn census() -> ClassifierResult<&'static Census> {
    static CACHE: OnceLock<Result<Census, ClassifierError>> = OnceLock::new();
    CACHE.get_or_init(build_census).as_ref().map_err(|e| e.clone())
}

/// One reproduced row of the configuration table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct C1Row {
    pub ci: u8,
    /// Short names of the orbit representative (set semantics).
    pub names: Vec<String>,
    pub dynkin: String,
    pub orbit_size: usize,
}

/// Partition the configurations into Weyl orbits and emit one row per
/// orbit; errors unless the census has exactly 16 orbits matching the
/// expected representatives one-to-one.
pub fn reproduce_table_c1() -> ClassifierResult<Vec<C1Row>> {
    let census = census()?;
    if census.orbits.len() != TABLE_C1.len() {
        return Err(ClassifierError::Census(format!(
            "expected {} orbits, found {}",
            TABLE_C1.len(),
            census.orbits.len()
        )));
    }
    Ok(census
        .orbits
        .iter()
        .map(|o| C1Row {
            ci: o.ci,
            names: o
                .representative
                .classes()
                .iter()
                .map(|c| short_name(c).unwrap_or_else(|| c.coordinate_string()))
                .collect(),
            dynkin: o.dynkin.clone(),
            orbit_size: o.members.len(),
        })
        .collect())
}

/// Mismatches between the reproduced configuration table and the expected
/// one; empty means a perfect match.
pub fn diff_table_c1(rows: &[C1Row]) -> Vec<String> {
    let mut diffs = Vec::new();
    if rows.len() != TABLE_C1.len() {
        diffs.push(format!("row count {} != {}", rows.len(), TABLE_C1.len()));
    }
    for (row, (ci, names, dynkin)) in rows.iter().zip(TABLE_C1) {
        if row.ci != *ci {
            diffs.push(format!("row order: computed CI {} where CI {ci} expected", row.ci));
            continue;
        }
        let got: BTreeSet<&str> = row.names.iter().map(String::as_str).collect();
        let want: BTreeSet<&str> = names.iter().copied().collect();
        if got != want {
            diffs.push(format!("CI {ci}: representative {got:?} != {want:?}"));
        }
        if row.dynkin != *dynkin {
            diffs.push(format!("CI {ci}: Dynkin {} != {dynkin}", row.dynkin));
        }
    }
    diffs
}

/// Everything the classification needs about one σ-stable configuration.
struct StableData {
    /// Number of Dynkin components.
    c: u32,
    /// Number of components mapped to themselves by σ.
    r: u32,
    /// The σ-fixed irreducible two-set classes.
    real_two_set: Vec<DivisorClass>,
}

fn two_set_global() -> &'static Vec<DivisorClass> {
    static CACHE: OnceLock<Vec<DivisorClass>> = OnceLock::new();
    CACHE.get_or_init(|| enumerate_classes(B5, 0, 2).expect("two-set enumeration"))
}

/// Connected components of the intersection graph, as index sets.
fn components(config: &RootConfiguration) -> Vec<Vec<usize>> {
    let classes = config.classes();
    let n = classes.len();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut nodes = vec![start];
        while let Some(v) = stack.pop() {
            for w in 0..n {
                if !seen[w] && classes[v].intersect(&classes[w]) != 0 {
                    seen[w] = true;
                    stack.push(w);
                    nodes.push(w);
                }
            }
        }
        nodes.sort();
        comps.push(nodes);
    }
    comps
}

/// Compute the σ-dependent invariants of a σ-stable configuration.
fn stable_data(config: &RootConfiguration, sigma: &RealStructure) -> StableData {
    let classes = config.classes();
    let comps = components(config);
    let r = comps
        .iter()
        .filter(|nodes| {
            let own: BTreeSet<&[i64]> = nodes.iter().map(|&i| classes[i].coords()).collect();
            nodes.iter().all(|&i| own.contains(sigma.apply(&classes[i]).coords()))
        })
        .count() as u32;
    let real_two_set: Vec<DivisorClass> = two_set_global()
        .iter()
        .filter(|g| classes.iter().all(|f| g.intersect(f) >= 0))
        .filter(|g| &sigma.apply(g) == *g)
        .cloned()
        .collect();
    StableData { c: comps.len() as u32, r, real_two_set }
}

/// One reproduced row of the cardinality table: per real structure index
/// 10..=15, the sorted distinct values of |real two-set| over the σ-stable
/// members of the orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GRow {
    pub ci: u8,
    pub dynkin: String,
    pub cells: [Vec<u32>; 6],
}

/// Reproduce the 16×6 cardinality table from the census.
pub fn reproduce_table_g() -> ClassifierResult<Vec<GRow>> {
    let census = census()?;
    let sigmas: Vec<RealStructure> =
        (10..=15).map(real_structure).collect::<Result<_, _>>()?;
    let rows = super::parallel_map(&census.orbits, |orbit| {
        let mut cells: [Vec<u32>; 6] = Default::default();
        for (k, sigma) in sigmas.iter().enumerate() {
            let mut values: BTreeSet<u32> = BTreeSet::new();
            for member in &orbit.members {
                if sigma.stabilizes(member) {
                    values.insert(stable_data(member, sigma).real_two_set.len() as u32);
                }
            }
            cells[k] = values.into_iter().collect();
        }
        GRow { ci: orbit.ci, dynkin: orbit.dynkin.clone(), cells }
    });
    Ok(rows)
}

/// Parse an expected cell like "4,6" into sorted values ("" = empty).
fn parse_cell(cell: &str) -> Vec<u32> {
    if cell.is_empty() {
        return Vec::new();
    }
    let mut v: Vec<u32> =
        cell.split(',').map(|p| p.trim().parse().expect("numeric cell")).collect();
    v.sort_unstable();
    v
}

/// Mismatches against the expected cardinality table, cell by cell.
pub fn diff_table_g(rows: &[GRow]) -> Vec<String> {
    let mut diffs = Vec::new();
    if rows.len() != TABLE_G.len() {
        diffs.push(format!("row count {} != {}", rows.len(), TABLE_G.len()));
    }
    for (row, (ci, dynkin, cells)) in rows.iter().zip(TABLE_G) {
        if row.ci != *ci {
            diffs.push(format!("row order: computed CI {} where CI {ci} expected", row.ci));
            continue;
        }
        if row.dynkin != *dynkin {
            diffs.push(format!("CI {ci}: Dynkin {} != {dynkin}", row.dynkin));
        }
        for (k, cell) in cells.iter().enumerate() {
            let want = parse_cell(cell);
            if row.cells[k] != want {
                diffs.push(format!(
                    "CI {ci}, RI {}: {:?} != {want:?}",
                    10 + k,
                    row.cells[k]
                ));
            }
        }
    }
    diffs
}

/// One reproduced row of the degree-4 model classification (count form).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct M4Row {
    pub ci: u8,
    pub ri: u8,
    pub dynkin: String,
    /// Number of complex singularities (Dynkin components).
    pub c: u32,
    /// Number of real singularities (σ-stable components).
    pub r: u32,
    /// Number of real circle families.
    pub f: u32,
    /// Number of co-spherical family pairs (product 2).
    pub p: u32,
    /// σ-stable configurations collapsed into this row.
    pub class_size: usize,
}

/// One reproduced row of the class-level table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct M4ClassRow {
    pub ci: u8,
    pub ri: u8,
    pub dynkin: String,
    /// Representative configuration, short names.
    pub f_names: Vec<String>,
    /// σ-images of the representative, in matching order.
    pub sigma_names: Vec<String>,
    /// Real two-set short names, sorted.
    pub g_names: Vec<String>,
}

fn name_of(class: &DivisorClass) -> String {
    short_name(class).unwrap_or_else(|| class.coordinate_string())
}

/// Canonical form of the pairwise intersection matrix of a class list,
/// minimized over orderings — the "same intersection diagram" equivalence.
fn canonical_gram(classes: &[DivisorClass]) -> Vec<i64> {
    let n = classes.len();
    let gram: Vec<i64> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| classes[i].intersect(&classes[j]))
        .collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<i64>> = None;
    permute(&mut perm, 0, &mut |p| {
        let candidate: Vec<i64> =
            (0..n).flat_map(|i| (0..n).map(|j| gram[p[i] * n + p[j]]).collect::<Vec<_>>()).collect();
        if best.as_ref().map_or(true, |b| &candidate < b) {
            best = Some(candidate);
        }
    });
    best.unwrap_or_default()
}

fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

/// Reproduce both degree-4 model tables: the count table (one row per
/// equivalence class of σ-stable configurations with at least two real
/// circle families, for real structure indices 13..=15) and the class-level
/// rows. Configurations whose real two-sets have the same intersection
/// diagram are identified; each class row is presented through the expected
/// table's representative after confirming it belongs to the class.
pub fn reproduce_m4_tables() -> ClassifierResult<(Vec<M4Row>, Vec<M4ClassRow>)> {
    let census = census()?;
    // Group key: everything that determines a row.
    type Key = (u8, u8, u32, u32, u32, u32, Vec<i64>);
    let mut groups: BTreeMap<Key, Vec<RootConfiguration>> = BTreeMap::new();
    let mut dynkins: BTreeMap<u8, String> = BTreeMap::new();
    for orbit in &census.orbits {
        dynkins.insert(orbit.ci, orbit.dynkin.clone());
        for ri in 13..=15u8 {
            let sigma = real_structure(ri)?;
            for member in &orbit.members {
                if !sigma.stabilizes(member) {
                    continue;
                }
                let data = stable_data(member, &sigma);
                let f = data.real_two_set.len() as u32;
                if f < 2 {
                    continue;
                }
                let p = pair_count(&data.real_two_set);
                let key =
                    (orbit.ci, ri, data.c, data.r, f, p, canonical_gram(&data.real_two_set));
                groups.entry(key).or_default().push(member.clone());
            }
        }
    }
    let mut counts = Vec::new();
    let mut classes = Vec::new();
    let mut ordered: Vec<(Key, Vec<RootConfiguration>)> = groups.into_iter().collect();
    // Table order: by CI, RI, then σ-stable component count descending.
    ordered.sort_by_key(|((ci, ri, _, r, f, _, _), _)| (*ci, *ri, std::cmp::Reverse(*r), *f));
    for ((ci, ri, c, r, f, p, _), members) in ordered {
        let dynkin = dynkins[&ci].clone();
        let sigma = real_structure(ri)?;
        // Present the class through the expected representative when it
        // belongs to this group; otherwise fall back to the first member.
        let member_keys: BTreeSet<ConfigKey> = members.iter().map(|m| m.key()).collect();
        let expected = TABLE_M4_CLASS.iter().find(|(eci, eri, _, names, _, _)| {
            *eci == ci && *eri == ri && {
                RootConfiguration::from_short_names(B5, names)
                    .map(|cfg| member_keys.contains(&cfg.key()))
                    .unwrap_or(false)
            }
        });
        let rep_names: Vec<String> = match expected {
            Some((_, _, _, names, _, _)) => names.iter().map(|s| s.to_string()).collect(),
            None => members[0].classes().iter().map(name_of).collect(),
        };
        let rep_classes: Vec<DivisorClass> = rep_names
            .iter()
            .map(|n| crate::lattice::class_from_short_name(B5, n))
            .collect::<Result<_, _>>()?;
        let sigma_names: Vec<String> =
            rep_classes.iter().map(|cl| name_of(&sigma.apply(cl))).collect();
        let rep_config = RootConfiguration::new(B5, rep_classes)?;
        let mut g_names: Vec<String> = stable_data(&rep_config, &sigma)
            .real_two_set
            .iter()
            .map(name_of)
            .collect();
        g_names.sort();
        counts.push(M4Row { ci, ri, dynkin: dynkin.clone(), c, r, f, p, class_size: members.len() });
        classes.push(M4ClassRow { ci, ri, dynkin, f_names: rep_names, sigma_names, g_names });
    }
    Ok((counts, classes))
}

/// Number of unordered pairs with intersection product 2.
pub fn pair_count(classes: &[DivisorClass]) -> u32 {
    let mut p = 0;
    for i in 0..classes.len() {
        for j in (i + 1)..classes.len() {
            if classes[i].intersect(&classes[j]) == 2 {
                p += 1;
            }
        }
    }
    p
}

/// Mismatches of the count table against the expected fourteen rows.
pub fn diff_m4_counts(rows: &[M4Row]) -> Vec<String> {
    let mut diffs = Vec::new();
    if rows.len() != TABLE_M4_CLS.len() {
        diffs.push(format!("row count {} != {}", rows.len(), TABLE_M4_CLS.len()));
    }
    for (row, (ci, ri, dynkin, c, r, f, p)) in rows.iter().zip(TABLE_M4_CLS) {
        let got = (row.ci, row.ri, row.dynkin.as_str(), row.c, row.r, row.f, row.p);
        let want = (*ci, *ri, *dynkin, *c, *r, *f, *p);
        if got != want {
            diffs.push(format!("count row {got:?} != {want:?}"));
        }
    }
    diffs
}

/// Mismatches of the class-level table: the representative and its σ-images
/// must match entry for entry, the real two-set as a set.
pub fn diff_m4_classes(rows: &[M4ClassRow]) -> Vec<String> {
    let mut diffs = Vec::new();
    if rows.len() != TABLE_M4_CLASS.len() {
        diffs.push(format!("row count {} != {}", rows.len(), TABLE_M4_CLASS.len()));
    }
    for (row, (ci, ri, dynkin, f, sf, g)) in rows.iter().zip(TABLE_M4_CLASS) {
        let label = format!("({ci}, {ri})");
        if (row.ci, row.ri, row.dynkin.as_str()) != (*ci, *ri, *dynkin) {
            diffs.push(format!(
                "class row ({}, {}) {} != {label} {dynkin}",
                row.ci, row.ri, row.dynkin
            ));
            continue;
        }
        let f_got: Vec<&str> = row.f_names.iter().map(String::as_str).collect();
        if f_got != *f {
            diffs.push(format!("{label}: zero-set {f_got:?} != {f:?}"));
        }
        let sf_got: Vec<&str> = row.sigma_names.iter().map(String::as_str).collect();
        if sf_got != *sf {
            diffs.push(format!("{label}: σ-images {sf_got:?} != {sf:?}"));
        }
        let g_got: BTreeSet<&str> = row.g_names.iter().map(String::as_str).collect();
        let g_want: BTreeSet<&str> = g.iter().copied().collect();
        if g_got != g_want {
            diffs.push(format!("{label}: two-set {g_got:?} != {g_want:?}"));
        }
    }
    diffs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_has_sixteen_orbits() {
        let c = census().unwrap();
        assert_eq!(c.orbits.len(), 16);
        let sizes: usize = c.orbits.iter().map(|o| o.members.len()).sum();
        assert_eq!(sizes, c.total_configurations);
        // The empty configuration forms its own orbit.
        assert_eq!(c.orbits[0].ci, 16);
        assert_eq!(c.orbits[0].members.len(), 1);
    }

    #[test]
    fn configuration_table_matches() {
        let rows = reproduce_table_c1().unwrap();
        assert!(diff_table_c1(&rows).is_empty(), "{:?}", diff_table_c1(&rows));
    }

    #[test]
    fn real_tables_match() {
        let rows = reproduce_table_g().unwrap();
        let diffs = diff_table_g(&rows);
        assert!(diffs.is_empty(), "{diffs:?}");
        let (counts, classes) = reproduce_m4_tables().unwrap();
        let d1 = diff_m4_counts(&counts);
        let d2 = diff_m4_classes(&classes);
        assert!(d1.is_empty(), "{d1:?}");
        assert!(d2.is_empty(), "{d2:?}");
    }
}
