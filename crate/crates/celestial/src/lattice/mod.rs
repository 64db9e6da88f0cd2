//! Picard lattices of weak Del Pezzo surfaces B(r) and geometrically ruled
//! surfaces P(r): intersection form, class enumeration, Weyl orbits, Dynkin
//! typing, and real structures.

mod dynkin;
mod names;
mod real;
mod weyl;

pub use dynkin::{dynkin_type, DynkinType};
pub use names::{class_from_short_name, short_name};
pub use real::{real_structure, RealStructure};
pub use weyl::{apply_to_config, canonical_configuration, canonical_form, weyl_group, TABLE_C1};

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("classes live in different lattices: {0} vs {1}")]
    LatticeMismatch(LatticeSpec, LatticeSpec),
    #[error("enumeration unsupported for lattice {0}: finiteness requires B(r), r <= 8")]
    UnsupportedEnumeration(LatticeSpec),
    #[error("Weyl group enumeration supported only for B(r), r <= 5 (got {0})")]
    UnsupportedWeyl(LatticeSpec),
    #[error("not a simple-root configuration: {0}")]
    BadConfiguration(String),
    #[error("intersection graph is not an ADE Dynkin diagram: {0}")]
    NotDynkin(String),
    #[error("unknown real structure RI {0} (supported: 10..=15)")]
    UnknownRealStructure(u8),
    #[error("configuration is not sigma-stable")]
    NotSigmaStable,
    #[error("configuration is not Weyl-equivalent to any table row")]
    NoOrbitMatch,
    #[error("unknown short name `{0}`")]
    BadShortName(String),
}

pub type LatticeResult<T> = Result<T, LatticeError>;

/// Lattice of a blown-up plane B(r) (basis H, Q1..Qr; H²=1, Qi·Qj=−δij) or a
/// ruled surface P(r) (basis H, F; H²=r, H·F=1, F²=0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LatticeSpec {
    B(u8),
    P(u8),
}

impl std::fmt::Display for LatticeSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LatticeSpec::B(r) => write!(f, "B({r})"),
            LatticeSpec::P(r) => write!(f, "P({r})"),
        }
    }
}

impl LatticeSpec {
    pub fn rank(&self) -> usize {
        match self {
            LatticeSpec::B(r) => *r as usize + 1,
            LatticeSpec::P(_) => 2,
        }
    }

    pub fn basis_names(&self) -> Vec<String> {
        match self {
            LatticeSpec::B(r) => {
                let mut v = vec!["H".to_string()];
                for i in 1..=*r {
                    v.push(format!("Q{i}"));
                }
                v
            }
            LatticeSpec::P(_) => vec!["H".to_string(), "F".to_string()],
        }
    }

    pub fn gram(&self, i: usize, j: usize) -> i64 {
        match self {
            LatticeSpec::B(_) => {
                if i != j {
                    0
                } else if i == 0 {
                    1
                } else {
                    -1
                }
            }
            LatticeSpec::P(r) => match (i, j) {
                (0, 0) => *r as i64,
                (0, 1) | (1, 0) => 1,
                (1, 1) => 0,
                _ => unreachable!(),
            },
        }
    }

    /// Determinant of the Gram matrix; ±1 for every supported lattice.
    pub fn gram_det(&self) -> i64 {
        match self {
            LatticeSpec::B(r) => {
                if *r % 2 == 0 {
                    1
                } else {
                    -1
                }
            }
            LatticeSpec::P(_) => -1,
        }
    }

    /// The anticanonical class −K.
    pub fn minus_k(&self) -> DivisorClass {
        match self {
            LatticeSpec::B(r) => {
                let mut coords = vec![-1i64; *r as usize + 1];
                coords[0] = 3;
                DivisorClass::new(*self, coords)
            }
            LatticeSpec::P(r) => DivisorClass::new(*self, vec![2, 2 - *r as i64]),
        }
    }
}

/// Divisor class: integer coordinates in the lattice basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass {
    lattice: LatticeSpec,
    coords: Vec<i64>,
}

impl DivisorClass {
    pub fn new(lattice: LatticeSpec, coords: Vec<i64>) -> Self {
        assert_eq!(coords.len(), lattice.rank(), "coordinate length mismatch");
        DivisorClass { lattice, coords }
    }

    pub fn lattice(&self) -> LatticeSpec {
        self.lattice
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Intersection product from the Gram matrix.
    pub fn intersect(&self, other: &DivisorClass) -> i64 {
        assert_eq!(
            self.lattice, other.lattice,
            "intersection of classes from different lattices"
        );
        let n = self.coords.len();
        let mut acc = 0i64;
        for i in 0..n {
            for j in 0..n {
                let g = self.lattice.gram(i, j);
                if g != 0 {
                    acc += self.coords[i] * g * other.coords[j];
                }
            }
        }
        acc
    }

    pub fn self_intersection(&self) -> i64 {
        self.intersect(self)
    }

    pub fn add(&self, other: &DivisorClass) -> DivisorClass {
        assert_eq!(self.lattice, other.lattice);
        DivisorClass::new(
            self.lattice,
            self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        )
    }

    pub fn neg(&self) -> DivisorClass {
        DivisorClass::new(self.lattice, self.coords.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> DivisorClass {
        DivisorClass::new(self.lattice, self.coords.iter().map(|a| k * a).collect())
    }

    /// Coordinate print, e.g. `3H-2Q1-Q2-Q3-Q4-Q5` or `2H+2F`.
    pub fn coordinate_string(&self) -> String {
        let names = self.lattice.basis_names();
        let mut s = String::new();
        for (i, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.abs();
            let sign = if c < 0 { "-" } else if s.is_empty() { "" } else { "+" };
            if mag == 1 {
                s.push_str(&format!("{sign}{}", names[i]));
            } else {
                s.push_str(&format!("{sign}{mag}{}", names[i]));
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

impl std::fmt::Display for DivisorClass {
    /// Short name when one exists, otherwise coordinates.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match short_name(self) {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{}", self.coordinate_string()),
        }
    }
}

/// A simple-root configuration F(Y): (−2)-classes orthogonal to K with
/// pairwise products in {0, 1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootConfiguration {
    lattice: LatticeSpec,
    classes: Vec<DivisorClass>,
}

impl RootConfiguration {
    /// Validating constructor; classes are stored sorted (set semantics).
    pub fn new(lattice: LatticeSpec, mut classes: Vec<DivisorClass>) -> LatticeResult<Self> {
        let k = lattice.minus_k();
        for c in &classes {
            if c.lattice() != lattice {
                return Err(LatticeError::LatticeMismatch(lattice, c.lattice()));
            }
            if c.self_intersection() != -2 {
                return Err(LatticeError::BadConfiguration(format!(
                    "{c} has self-intersection {} != -2",
                    c.self_intersection()
                )));
            }
            if c.intersect(&k) != 0 {
                return Err(LatticeError::BadConfiguration(format!("{c} is not orthogonal to K")));
            }
        }
        classes.sort();
        classes.dedup();
        for i in 0..classes.len() {
            for j in (i + 1)..classes.len() {
                let p = classes[i].intersect(&classes[j]);
                if p != 0 && p != 1 {
                    return Err(LatticeError::BadConfiguration(format!(
                        "{} . {} = {p}, not in {{0,1}}",
                        classes[i], classes[j]
                    )));
                }
            }
        }
        Ok(RootConfiguration { lattice, classes })
    }

    pub fn empty(lattice: LatticeSpec) -> Self {
        RootConfiguration { lattice, classes: Vec::new() }
    }

    pub fn from_short_names(lattice: LatticeSpec, names: &[&str]) -> LatticeResult<Self> {
        let classes = names
            .iter()
            .map(|n| class_from_short_name(lattice, n))
            .collect::<LatticeResult<Vec<_>>>()?;
        Self::new(lattice, classes)
    }

    pub fn lattice(&self) -> LatticeSpec {
        self.lattice
    }

    pub fn classes(&self) -> &[DivisorClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Sorted coordinate lists — the total order used for canonical forms.
    pub fn key(&self) -> Vec<Vec<i64>> {
        self.classes.iter().map(|c| c.coords().to_vec()).collect()
    }
}

impl std::fmt::Display for RootConfiguration {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.classes.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

fn isqrt(n: i64) -> i64 {
    if n <= 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as i64;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

/// All classes C in B(r) with C² = `self_int` and C·(−K) = `deg_vs_antik`.
///
/// Finiteness: write C = c0·H + Σ ci·Qi. Then Σci = p − 3c0 and
/// Σci² = c0² − q, and Cauchy–Schwarz forces (p−3c0)² ≤ r(c0²−q), i.e.
/// (9−r)·c0² − 6p·c0 + p² + rq ≤ 0 — a parabola opening upwards for r < 9,
/// so c0 is confined to a finite interval (completed-square bound). The scan
/// below widens the interval by one on each side and asserts emptiness there.
pub fn enumerate_classes(
    lattice: LatticeSpec,
    self_int: i64,
    deg_vs_antik: i64,
) -> LatticeResult<Vec<DivisorClass>> {
    let LatticeSpec::B(r) = lattice else {
        return Err(LatticeError::UnsupportedEnumeration(lattice));
    };
    if r > 8 {
        return Err(LatticeError::UnsupportedEnumeration(lattice));
    }
    let r = r as i64;
    let (q, p) = (self_int, deg_vs_antik);
    let feasible = |c0: i64| -> bool {
        if c0 * c0 - q < 0 {
            return false;
        }
        if r == 0 {
            return p == 3 * c0 && c0 * c0 == q;
        }
        (9 - r) * c0 * c0 - 6 * p * c0 + p * p + r * q <= 0
    };
    let bound = p.abs() + q.abs() + r + 10;
    debug_assert!(!feasible(bound + 1) && !feasible(-bound - 1), "enumeration bound too small");
    let mut out = Vec::new();
    for c0 in -bound..=bound {
        if !feasible(c0) {
            continue;
        }
        let mut coords = vec![0i64; r as usize + 1];
        coords[0] = c0;
        dfs_tail(
            lattice,
            &mut coords,
            1,
            p - 3 * c0,
            c0 * c0 - q,
            &mut out,
        );
    }
    out.sort();
    Ok(out)
}

/// Fill coords[idx..] with integers of given sum and sum of squares.
fn dfs_tail(
    lattice: LatticeSpec,
    coords: &mut Vec<i64>,
    idx: usize,
    rem_sum: i64,
    rem_sumsq: i64,
    out: &mut Vec<DivisorClass>,
) {
    let n = coords.len();
    if idx == n {
        if rem_sum == 0 && rem_sumsq == 0 {
            out.push(DivisorClass::new(lattice, coords.clone()));
        }
        return;
    }
    let slots = (n - idx) as i64;
    if rem_sumsq < 0 || rem_sum * rem_sum > slots * rem_sumsq {
        return;
    }
    let b = isqrt(rem_sumsq);
    for ci in -b..=b {
        coords[idx] = ci;
        dfs_tail(lattice, coords, idx + 1, rem_sum - ci, rem_sumsq - ci * ci, out);
        coords[idx] = 0;
    }
}

/// The two-set G(Y): classes with G²=0, G·(−K)=2, nonnegative against every
/// configuration element.
pub fn two_set(lattice: LatticeSpec, config: &RootConfiguration) -> LatticeResult<Vec<DivisorClass>> {
    restricted_set(lattice, config, 0, 2)
}

/// The one-set E(Y): classes with E²=−1, E·(−K)=1, nonnegative against every
/// configuration element.
pub fn one_set(lattice: LatticeSpec, config: &RootConfiguration) -> LatticeResult<Vec<DivisorClass>> {
    restricted_set(lattice, config, -1, 1)
}

fn restricted_set(
    lattice: LatticeSpec,
    config: &RootConfiguration,
    q: i64,
    p: i64,
) -> LatticeResult<Vec<DivisorClass>> {
    Ok(enumerate_classes(lattice, q, p)?
        .into_iter()
        .filter(|g| config.classes().iter().all(|f| g.intersect(f) >= 0))
        .collect())
}

/// σ-fixed elements of the two-set; requires a σ-stable configuration.
pub fn real_two_set(
    config: &RootConfiguration,
    sigma: &RealStructure,
) -> LatticeResult<Vec<DivisorClass>> {
    if !sigma.stabilizes(config) {
        return Err(LatticeError::NotSigmaStable);
    }
    Ok(two_set(config.lattice(), config)?
        .into_iter()
        .filter(|g| &sigma.apply(g) == g)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gram_unimodular() {
        for r in 0..=8 {
            assert_eq!(LatticeSpec::B(r).gram_det().abs(), 1);
        }
        for r in 0..=3 {
            assert_eq!(LatticeSpec::P(r).gram_det().abs(), 1);
        }
    }

    #[test]
    fn intersection_examples() {
        let b5 = LatticeSpec::B(5);
        let a3 = class_from_short_name(b5, "a3").unwrap();
        let b3 = class_from_short_name(b5, "b3").unwrap();
        let a1 = class_from_short_name(b5, "a1").unwrap();
        let a2 = class_from_short_name(b5, "a2").unwrap();
        assert_eq!(a3.intersect(&b3), 2);
        assert_eq!(a1.intersect(&a2), 1);
        assert_eq!(a3.self_intersection(), 0);
        let h = DivisorClass::new(LatticeSpec::B(0), vec![1]);
        assert_eq!(h.intersect(&h), 1);
    }

    #[test]
    fn root_count_b5() {
        let roots = enumerate_classes(LatticeSpec::B(5), -2, 0).unwrap();
        assert_eq!(roots.len(), 40);
        // Exactly 20 have the positive shapes ij (i < j) / 1ijk.
        let positive = roots
            .iter()
            .filter(|c| {
                matches!(short_name(c), Some(n) if n.starts_with('1') && n.len() == 4
                    || n.len() == 2 && n.as_bytes()[0] < n.as_bytes()[1])
            })
            .count();
        assert_eq!(positive, 20);
    }

    #[test]
    fn two_set_b5_empty_config() {
        let g = two_set(LatticeSpec::B(5), &RootConfiguration::empty(LatticeSpec::B(5))).unwrap();
        assert_eq!(g.len(), 10);
    }

    #[test]
    fn one_set_examples() {
        let e5 = one_set(LatticeSpec::B(5), &RootConfiguration::empty(LatticeSpec::B(5))).unwrap();
        assert_eq!(e5.len(), 16);
        let e2 = one_set(LatticeSpec::B(2), &RootConfiguration::empty(LatticeSpec::B(2))).unwrap();
        assert_eq!(e2.len(), 3);
        let b3 = LatticeSpec::B(3);
        let cfg = RootConfiguration::from_short_names(b3, &["23", "1123"]).unwrap();
        let e = one_set(b3, &cfg).unwrap();
        let mut names: Vec<String> = e.iter().map(|c| c.to_string()).collect();
        names.sort();
        assert_eq!(names, vec!["Q1", "Q3"]);
    }

    #[test]
    fn two_set_single_root() {
        let b5 = LatticeSpec::B(5);
        let cfg = RootConfiguration::from_short_names(b5, &["45"]).unwrap();
        let g = two_set(b5, &cfg).unwrap();
        assert_eq!(g.len(), 8);
        let names: Vec<String> = g.iter().map(|c| c.to_string()).collect();
        assert!(!names.contains(&"a5".to_string()));
        assert!(!names.contains(&"b4".to_string()));
    }
}
