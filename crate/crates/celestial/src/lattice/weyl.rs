//! Weyl groups of B(r), r ≤ 5, by breadth-first closure over root
//! reflections, and canonicalization of root configurations up to the group
//! action ("Cremona equivalence").

use super::{
    enumerate_classes, DivisorClass, LatticeError, LatticeResult, LatticeSpec, RootConfiguration,
};
use std::collections::HashSet;
use std::sync::OnceLock;

/// Square integer matrix acting on class coordinates, row-major.
pub type Isometry = Vec<i64>;

fn mat_dim(m: &Isometry) -> usize {
    let n = (m.len() as f64).sqrt() as usize;
    debug_assert_eq!(n * n, m.len());
    n
}

pub fn apply_isometry(m: &Isometry, coords: &[i64]) -> Vec<i64> {
    let n = coords.len();
    (0..n)
        .map(|i| (0..n).map(|j| m[i * n + j] * coords[j]).sum())
        .collect()
}

fn mat_mul(a: &Isometry, b: &Isometry) -> Isometry {
    let n = mat_dim(a);
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    out
}

fn identity(n: usize) -> Isometry {
    let mut m = vec![0i64; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

/// Reflection s_R(C) = C + (C·R)·R as a matrix (R a (−2)-class).
fn reflection_matrix(root: &DivisorClass) -> Isometry {
    let lat = root.lattice();
    let n = lat.rank();
    let mut m = vec![0i64; n * n];
    for j in 0..n {
        let mut e = vec![0i64; n];
        e[j] = 1;
        let ej = DivisorClass::new(lat, e);
        let img = ej.add(&root.scale(ej.intersect(root)));
        for i in 0..n {
            m[i * n + j] = img.coords()[i];
        }
    }
    m
}

static WEYL_CACHE: [OnceLock<Vec<Isometry>>; 6] =
    [const { OnceLock::new() }; 6];

/// The full Weyl group of B(r), r ≤ 5, as matrices (memoized).
pub fn weyl_group(lattice: LatticeSpec) -> LatticeResult<&'static Vec<Isometry>> {
    let LatticeSpec::B(r) = lattice else {
        return Err(LatticeError::UnsupportedWeyl(lattice));
    };
    if r > 5 {
        return Err(LatticeError::UnsupportedWeyl(lattice));
    }
    Ok(WEYL_CACHE[r as usize].get_or_init(|| {
        let roots = enumerate_classes(lattice, -2, 0).expect("B(r) enumeration");
        let gens: Vec<Isometry> = roots.iter().map(reflection_matrix).collect();
        let n = lattice.rank();
        let mut seen: HashSet<Isometry> = HashSet::new();
        let mut frontier = vec![identity(n)];
        seen.insert(identity(n));
        while let Some(m) = frontier.pop() {
            for g in &gens {
                let prod = mat_mul(g, &m);
                if seen.insert(prod.clone()) {
                    frontier.push(prod);
                }
            }
        }
        let mut all: Vec<Isometry> = seen.into_iter().collect();
        all.sort();
        all
    }))
}

/// Apply a group element to every class of a configuration.
pub fn apply_to_config(m: &Isometry, config: &RootConfiguration) -> RootConfiguration {
    let lat = config.lattice();
    let classes = config
        .classes()
        .iter()
        .map(|c| DivisorClass::new(lat, apply_isometry(m, c.coords())))
        .collect();
    RootConfiguration::new(lat, classes).expect("isometry preserves configuration invariants")
}

/// Lexicographically least Weyl image (as a sorted coordinate list).
pub fn canonical_form(config: &RootConfiguration) -> LatticeResult<Vec<Vec<i64>>> {
    let group = weyl_group(config.lattice())?;
    let mut best: Option<Vec<Vec<i64>>> = None;
    for m in group {
        let key = apply_to_config(m, config).key();
        if best.as_ref().map_or(true, |b| &key < b) {
            best = Some(key);
        }
    }
    Ok(best.unwrap_or_default())
}

/// The 16 orbit representatives (CI, short names, Dynkin type) of the
/// configuration table for B(5), in table order.
pub const TABLE_C1: &[(u8, &[&str], &str)] = &[
    (16, &[], "A0"),
    (17, &["45"], "A1"),
    (18, &["23", "45"], "2A1"),
    (19, &["1123", "45"], "2A1"),
    (20, &["34", "45"], "A2"),
    (21, &["1123", "23", "45"], "3A1"),
    (22, &["12", "34", "45"], "A2+A1"),
    (23, &["23", "34", "45"], "A3"),
    (24, &["1123", "34", "45"], "A3"),
    (25, &["1145", "1123", "23", "45"], "4A1"),
    (26, &["1123", "12", "23", "45"], "A2+2A1"),
    (27, &["1123", "12", "34", "45"], "A3+A1"),
    (28, &["12", "23", "34", "45"], "A4"),
    (29, &["1123", "23", "34", "45"], "D4"),
    (30, &["1145", "1123", "12", "23", "45"], "A3+2A1"),
    (31, &["1123", "12", "23", "34", "45"], "D5"),
];

fn table_c1_configs() -> &'static Vec<(u8, RootConfiguration, Vec<Vec<i64>>)> {
    static CACHE: OnceLock<Vec<(u8, RootConfiguration, Vec<Vec<i64>>)>> = OnceLock::new();
    CACHE.get_or_init(|| {
        TABLE_C1
            .iter()
            .map(|(ci, names, _)| {
                let cfg = RootConfiguration::from_short_names(LatticeSpec::B(5), names)
                    .expect("table representative");
                let canon = canonical_form(&cfg).expect("B(5) canonical form");
                (*ci, cfg, canon)
            })
            .collect()
    })
}

/// Canonicalize a configuration in B(5) and identify its table row CI 16–31.
pub fn canonical_configuration(config: &RootConfiguration) -> LatticeResult<(RootConfiguration, u8)> {
    if config.lattice() != LatticeSpec::B(5) {
        return Err(LatticeError::UnsupportedWeyl(config.lattice()));
    }
    let canon = canonical_form(config)?;
    for (ci, rep, rep_canon) in table_c1_configs() {
        if rep_canon == &canon {
            return Ok((rep.clone(), *ci));
        }
    }
    Err(LatticeError::NoOrbitMatch)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        assert_eq!(weyl_group(LatticeSpec::B(2)).unwrap().len(), 2);
        assert_eq!(weyl_group(LatticeSpec::B(5)).unwrap().len(), 1920);
    }

    #[test]
    fn reflections_are_involutions() {
        let lat = LatticeSpec::B(5);
        let roots = enumerate_classes(lat, -2, 0).unwrap();
        for root in roots.iter().take(8) {
            let m = reflection_matrix(root);
            assert_eq!(mat_mul(&m, &m), identity(6));
        }
    }

    #[test]
    fn group_preserves_form_and_k() {
        let lat = LatticeSpec::B(5);
        let k = lat.minus_k();
        for m in weyl_group(lat).unwrap() {
            assert_eq!(apply_isometry(m, k.coords()), k.coords().to_vec());
        }
    }

    #[test]
    fn single_roots_one_orbit() {
        let lat = LatticeSpec::B(5);
        let c1 = RootConfiguration::from_short_names(lat, &["1123"]).unwrap();
        let c2 = RootConfiguration::from_short_names(lat, &["45"]).unwrap();
        assert_eq!(canonical_form(&c1).unwrap(), canonical_form(&c2).unwrap());
        assert_eq!(canonical_configuration(&c1).unwrap().1, 17);
    }

    #[test]
    fn second_2a1_orbit() {
        let lat = LatticeSpec::B(5);
        let cfg = RootConfiguration::from_short_names(lat, &["14", "1235"]).unwrap();
        assert_eq!(canonical_configuration(&cfg).unwrap().1, 19);
        let cfg = RootConfiguration::from_short_names(lat, &["23", "45"]).unwrap();
        assert_eq!(canonical_configuration(&cfg).unwrap().1, 18);
    }
}
