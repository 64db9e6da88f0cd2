//! Finite solving of divisor-class constraint systems and the class-level
//! decompositions for surface types with a degree-8 model map.

use crate::catalog::tables::{
    CLASSES_40_LINE_SUMMANDS, CLASSES_40_TWO_SET, CLASSES_40_ZERO_SET, CLASSES_62, CLASSES_73,
    CLASSES_84, REAL_40_RI, REAL_40_SWAPS,
};
use crate::lattice::{
    canonical_configuration, class_from_short_name, one_set, real_structure, real_two_set,
    short_name, two_set, DivisorClass, LatticeSpec, RootConfiguration,
};

use super::{ClassifierError, ClassifierResult};

/// One linear or sign condition on an unknown divisor class `A`.
#[derive(Debug, Clone)]
pub enum ClassConstraint {
    /// `A·A = q`.
    SelfIntersection(i64),
    /// `A·D = p` for a fixed class `D`.
    ProductWith(DivisorClass, i64),
    /// `A·D >= 0` for a fixed class `D`.
    NonnegativeWith(DivisorClass),
}

impl ClassConstraint {
    fn satisfied_by(&self, a: &DivisorClass) -> bool {
        match self {
            ClassConstraint::SelfIntersection(q) => a.self_intersection() == *q,
            ClassConstraint::ProductWith(d, p) => a.intersect(d) == *p,
            ClassConstraint::NonnegativeWith(d) => a.intersect(d) >= 0,
        }
    }
}

/// Largest coordinate box scanned before the solution set is declared
/// infinite.
const SOLVE_CAP: i64 = 24;

/// All divisor classes satisfying every constraint, found by scanning
/// growing coordinate boxes `[-B, B]^rank`. The set is accepted as complete
/// once a box and the next larger one agree and no solution touches the
/// boundary; if the set keeps growing past the cap, the system is reported
/// as having no finite solution set.
pub fn solve_class_constraints(
    lattice: LatticeSpec,
    constraints: &[ClassConstraint],
) -> ClassifierResult<Vec<DivisorClass>> {
    let rank = lattice.rank();
    let mut previous: Option<Vec<DivisorClass>> = None;
    for bound in 1..=SOLVE_CAP {
        let mut solutions = Vec::new();
        let mut coords = vec![-bound; rank];
        loop {
            let a = DivisorClass::new(lattice, coords.clone());
            if constraints.iter().all(|c| c.satisfied_by(&a)) {
                solutions.push(a);
            }
            // Odometer increment over the box.
            let mut idx = 0;
            loop {
                if idx == rank {
                    break;
                }
                coords[idx] += 1;
                if coords[idx] <= bound {
                    break;
                }
                coords[idx] = -bound;
                idx += 1;
            }
            if idx == rank {
                break;
            }
        }
        let interior = solutions.iter().all(|a| a.coords().iter().all(|&c| c.abs() < bound));
        if interior && previous.as_ref() == Some(&solutions) {
            return Ok(solutions);
        }
        previous = Some(solutions);
    }
    Err(ClassifierError::InfiniteSolutionSet(format!(
        "solutions keep appearing out to coordinate bound {SOLVE_CAP} on {lattice}"
    )))
}

fn nonneg_all(classes: &[DivisorClass]) -> Vec<ClassConstraint> {
    classes.iter().cloned().map(ClassConstraint::NonnegativeWith).collect()
}

fn coords_set(classes: &[DivisorClass]) -> Vec<Vec<i64>> {
    let mut v: Vec<Vec<i64>> = classes.iter().map(|c| c.coords().to_vec()).collect();
    v.sort();
    v
}

fn expected_set(coords: &[&[i64]]) -> Vec<Vec<i64>> {
    let mut v: Vec<Vec<i64>> = coords.iter().map(|c| c.to_vec()).collect();
    v.sort();
    v
}

/// Type `(8,4)` on the ruled basis `(H, F)`: the admissible classes of a
/// singular double conic, and the one- and two-sets, all recovered by
/// constraint solving. Errors when any of the three disagrees with the
/// expected classes.
pub fn prop_84_conics() -> ClassifierResult<Vec<DivisorClass>> {
    let p0 = LatticeSpec::P(0);
    let h = DivisorClass::new(p0, vec![1, 0]);
    let f = DivisorClass::new(p0, vec![0, 1]);
    let minus_k = p0.minus_k();
    let mut constraints = nonneg_all(&[h, f]);
    constraints.push(ClassConstraint::ProductWith(minus_k.clone(), 4));
    let conics = solve_class_constraints(p0, &constraints)?;
    check_set("(8,4) double-conic classes", &conics, CLASSES_84.conic_classes)?;
    let mut sets = nonneg_all(&[]);
    sets.push(ClassConstraint::SelfIntersection(0));
    sets.push(ClassConstraint::ProductWith(minus_k.clone(), 2));
    let twos = solve_class_constraints(p0, &sets)?;
    check_set("(8,4) two-set", &twos, CLASSES_84.two_set)?;
    let ones = solve_class_constraints(
        p0,
        &[
            ClassConstraint::SelfIntersection(-1),
            ClassConstraint::ProductWith(minus_k.clone(), 1),
        ],
    )?;
    check_set("(8,4) one-set", &ones, CLASSES_84.one_set)?;
    if minus_k.coords() != CLASSES_84.infinity_class {
        return Err(ClassifierError::Verification(format!(
            "(8,4) infinity class {} != expected",
            minus_k.coordinate_string()
        )));
    }
    Ok(conics)
}

fn check_set(label: &str, got: &[DivisorClass], want: &[&[i64]]) -> ClassifierResult<()> {
    if coords_set(got) != expected_set(want) {
        return Err(ClassifierError::Verification(format!(
            "{label}: computed {{{}}} differs from the expected classes",
            got.iter().map(|c| c.coordinate_string()).collect::<Vec<_>>().join(", ")
        )));
    }
    Ok(())
}

/// Type `(7,3)` on `B(2)`: double-conic classes, exceptional one-set, and
/// two-set, with the plane at infinity splitting as triple conic plus the
/// line `H-Q1-Q2`.
pub fn prop_73() -> ClassifierResult<(Vec<DivisorClass>, Vec<DivisorClass>)> {
    let b2 = LatticeSpec::B(2);
    let empty = RootConfiguration::empty(b2);
    let q1 = DivisorClass::new(b2, vec![0, 1, 0]);
    let q2 = DivisorClass::new(b2, vec![0, 0, 1]);
    let line = DivisorClass::new(b2, vec![1, -1, -1]);
    let minus_k = b2.minus_k();
    let mut constraints = nonneg_all(&[q1, q2, line]);
    constraints.push(ClassConstraint::ProductWith(minus_k.clone(), 4));
    let conics = solve_class_constraints(b2, &constraints)?;
    check_set("(7,3) double-conic classes", &conics, CLASSES_73.conic_classes)?;
    let ones = one_set(b2, &empty)?;
    check_set("(7,3) exceptional set", &ones, CLASSES_73.one_set)?;
    let twos = two_set(b2, &empty)?;
    check_set("(7,3) two-set", &twos, CLASSES_73.two_set)?;
    if minus_k.coords() != CLASSES_73.infinity_class {
        return Err(ClassifierError::Verification(format!(
            "(7,3) infinity class {} != expected",
            minus_k.coordinate_string()
        )));
    }
    Ok((conics, ones))
}

/// The unique decomposition found for one `(6,2)` case.
pub struct Case62Result {
    pub zero_set: Vec<DivisorClass>,
    /// Class of the double absolute conic.
    pub conic: DivisorClass,
    /// The two line summands of the residual pair.
    pub line_pair: Vec<DivisorClass>,
    /// Fixed components (zero-set classes, with multiplicity).
    pub fixed: Vec<DivisorClass>,
    pub one_set: Vec<DivisorClass>,
    pub two_set: Vec<DivisorClass>,
}

/// Type `(6,2)` on `B(3)`, one result per effective zero-set case. In each
/// case the plane section at infinity `W = -K` must split as
/// `A + B1 + B2 + F` with `A` a double-conic candidate, `B1`, `B2` lines of
/// the one-set, and `F` a nonnegative combination of zero-set classes. The
/// two circle classes `H-Q1` and `H-Q2` must each meet `A + F` twice and
/// `F` at most once; the decomposition satisfying all of this is required
/// to be unique per case.
pub fn prop_62_cases() -> ClassifierResult<Vec<Case62Result>> {
    let b3 = LatticeSpec::B(3);
    let minus_k = b3.minus_k();
    let circle_classes =
        [DivisorClass::new(b3, vec![1, -1, 0, 0]), DivisorClass::new(b3, vec![1, 0, -1, 0])];
    // The standard nonnegativity set: exceptional points and the lines
    // through pairs of them.
    let standard: Vec<DivisorClass> = [
        vec![0, 1, 0, 0],
        vec![0, 0, 1, 0],
        vec![0, 0, 0, 1],
        vec![1, -1, -1, 0],
        vec![1, -1, 0, -1],
        vec![1, 0, -1, -1],
    ]
    .into_iter()
    .map(|c| DivisorClass::new(b3, c))
    .collect();
    let mut results = Vec::new();
    for case in CLASSES_62 {
        let zero_set: Vec<DivisorClass> =
            case.zero_set.iter().map(|c| DivisorClass::new(b3, c.to_vec())).collect();
        let config = RootConfiguration::new(b3, zero_set.clone())?;
        let ones = one_set(b3, &config)?;
        let twos = two_set(b3, &config)?;
        let mut constraints = nonneg_all(&standard);
        constraints.extend(nonneg_all(&zero_set));
        constraints.push(ClassConstraint::ProductWith(minus_k.clone(), 4));
        let candidates = solve_class_constraints(b3, &constraints)?;
        let mut found: Vec<(DivisorClass, Vec<DivisorClass>, Vec<DivisorClass>)> = Vec::new();
        for a in &candidates {
            for i in 0..ones.len() {
                for j in i..ones.len() {
                    let b = ones[i].add(&ones[j]);
                    let f = minus_k.add(&a.neg()).add(&b.neg());
                    let Some(fixed) = decompose_nonneg(&f, &zero_set) else {
                        continue;
                    };
                    let ok = circle_classes.iter().all(|g| {
                        a.intersect(g) + f.intersect(g) == 2 && f.intersect(g) <= 1
                    });
                    if ok {
                        found.push((a.clone(), vec![ones[i].clone(), ones[j].clone()], fixed));
                    }
                }
            }
        }
        let [(conic, line_pair, fixed)] = found.as_slice() else {
            return Err(ClassifierError::Verification(format!(
                "(6,2) zero-set of size {}: {} infinity decompositions, not exactly one",
                zero_set.len(),
                found.len()
            )));
        };
        if conic.coords() != case.conic_class {
            return Err(ClassifierError::Verification(format!(
                "(6,2): conic class {} differs from the expected one",
                conic.coordinate_string()
            )));
        }
        check_set("(6,2) line pair", line_pair, case.line_pair_summands)?;
        check_set("(6,2) fixed part", fixed, case.fixed_summands)?;
        check_set("(6,2) one-set", &ones, case.one_set)?;
        check_set("(6,2) two-set", &twos, case.two_set)?;
        results.push(Case62Result {
            zero_set,
            conic: conic.clone(),
            line_pair: line_pair.clone(),
            fixed: fixed.clone(),
            one_set: ones,
            two_set: twos,
        });
    }
    Ok(results)
}

/// Write `f` as a nonnegative integer combination of the given classes
/// (returned with multiplicity), or `None` when impossible. Coefficients up
/// to 6 are tried; the expected decompositions use at most 2.
fn decompose_nonneg(f: &DivisorClass, parts: &[DivisorClass]) -> Option<Vec<DivisorClass>> {
    fn rec(
        remainder: &DivisorClass,
        parts: &[DivisorClass],
        acc: &mut Vec<DivisorClass>,
    ) -> bool {
        if remainder.coords().iter().all(|&c| c == 0) {
            return true;
        }
        let Some((first, rest)) = parts.split_first() else {
            return false;
        };
        for k in (0..=6).rev() {
            let rem = remainder.add(&first.scale(-k));
            let before = acc.len();
            for _ in 0..k {
                acc.push(first.clone());
            }
            if rec(&rem, rest, acc) {
                return true;
            }
            acc.truncate(before);
        }
        false
    }
    let mut acc = Vec::new();
    if rec(f, parts, &mut acc) {
        Some(acc)
    } else {
        None
    }
}

/// The type `(4,0)` decomposition data on `B(5)`.
pub struct Decomposition40 {
    /// Configuration index of the zero-set orbit (expected 25).
    pub ci: u8,
    pub zero_set: Vec<DivisorClass>,
    /// σ-fixed two-set classes.
    pub real_two_set: Vec<DivisorClass>,
    /// The four line classes completing `W = -K` over the zero-set.
    pub line_summands: Vec<DivisorClass>,
    /// Number of line decompositions found before σ-stability filtering.
    pub raw_decompositions: usize,
}

/// Type `(4,0)`: the zero-set sits in orbit 25, the σ-fixed two-set is
/// `{a1, a2, a3, b3}` under real structure 13, and the plane at infinity
/// decomposes as the four zero-set roots plus four σ-stable line classes.
pub fn prop_40() -> ClassifierResult<Decomposition40> {
    let b5 = LatticeSpec::B(5);
    let config = RootConfiguration::from_short_names(b5, CLASSES_40_ZERO_SET)?;
    let (_, ci) = canonical_configuration(&config)?;
    if ci != 25 {
        return Err(ClassifierError::Verification(format!(
            "(4,0) zero-set lies in orbit {ci}, expected 25"
        )));
    }
    let sigma = real_structure(REAL_40_RI)?;
    let real_twos = real_two_set(&config, &sigma)?;
    let want: Vec<DivisorClass> = CLASSES_40_TWO_SET
        .iter()
        .map(|n| class_from_short_name(b5, n))
        .collect::<Result<_, _>>()?;
    if coords_set(&real_twos) != coords_set(&want) {
        return Err(ClassifierError::Verification(format!(
            "(4,0) real two-set {{{}}} differs from the expected classes",
            real_twos.iter().map(|c| c.coordinate_string()).collect::<Vec<_>>().join(", ")
        )));
    }
    // Residual of the infinity class after removing the zero-set roots.
    let mut residual = b5.minus_k();
    for z in config.classes() {
        residual = residual.add(&z.neg());
    }
    let ones = one_set(b5, &config)?;
    let mut raw: Vec<Vec<DivisorClass>> = Vec::new();
    fn search(
        ones: &[DivisorClass],
        start: usize,
        left: usize,
        remainder: &DivisorClass,
        acc: &mut Vec<DivisorClass>,
        out: &mut Vec<Vec<DivisorClass>>,
    ) {
        if left == 0 {
            if remainder.coords().iter().all(|&c| c == 0) {
                out.push(acc.clone());
            }
            return;
        }
        for i in start..ones.len() {
            acc.push(ones[i].clone());
            search(ones, i, left - 1, &remainder.add(&ones[i].neg()), acc, out);
            acc.pop();
        }
    }
    search(&ones, 0, 4, &residual, &mut Vec::new(), &mut raw);
    let raw_decompositions = raw.len();
    // Keep σ-stable line multisets: the real structure must permute the
    // four summands among themselves.
    let stable: Vec<Vec<DivisorClass>> = raw
        .into_iter()
        .filter(|lines| {
            let mut image: Vec<Vec<i64>> =
                lines.iter().map(|l| sigma.apply(l).coords().to_vec()).collect();
            image.sort();
            let mut own: Vec<Vec<i64>> = lines.iter().map(|l| l.coords().to_vec()).collect();
            own.sort();
            image == own
        })
        .collect();
    let [lines] = stable.as_slice() else {
        return Err(ClassifierError::Verification(format!(
            "(4,0): {} σ-stable line decompositions, not exactly one",
            stable.len()
        )));
    };
    check_set("(4,0) line summands", lines, CLASSES_40_LINE_SUMMANDS)?;
    Ok(Decomposition40 {
        ci,
        zero_set: config.classes().to_vec(),
        real_two_set: real_twos,
        line_summands: lines.clone(),
        raw_decompositions,
    })
}

/// The real-structure pairing on the `(4,0)` zero-set: σ under index 13
/// swaps the roots in two conjugate pairs. Returns the computed pairs
/// `(name, σ-image name)` after checking them against the expected swaps.
pub fn m8_real_pairing() -> ClassifierResult<Vec<(String, String)>> {
    let b5 = LatticeSpec::B(5);
    let sigma = real_structure(REAL_40_RI)?;
    let mut pairs = Vec::new();
    for name in CLASSES_40_ZERO_SET {
        let class = class_from_short_name(b5, name)?;
        let image = sigma.apply(&class);
        let image_name =
            short_name(&image).unwrap_or_else(|| image.coordinate_string());
        pairs.push((name.to_string(), image_name));
    }
    for (a, b) in REAL_40_SWAPS {
        let forward = pairs.iter().any(|(x, y)| x == a && y == b);
        let backward = pairs.iter().any(|(x, y)| x == b && y == a);
        if !forward || !backward {
            return Err(ClassifierError::Verification(format!(
                "(4,0) real pairing: σ does not swap {a} and {b}"
            )));
        }
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solver_rejects_infinite_systems() {
        let p0 = LatticeSpec::P(0);
        let f = DivisorClass::new(p0, vec![0, 1]);
        let err = solve_class_constraints(p0, &[ClassConstraint::ProductWith(f, 0)]);
        assert!(matches!(err, Err(ClassifierError::InfiniteSolutionSet(_))));
    }

    #[test]
    fn high_type_decompositions_match() {
        prop_84_conics().unwrap();
        prop_73().unwrap();
        let cases = prop_62_cases().unwrap();
        assert_eq!(cases.len(), 3);
        assert_eq!(cases[0].conic.coords(), &[2, 0, 0, -2]);
        let d40 = prop_40().unwrap();
        assert_eq!(d40.ci, 25);
        assert_eq!(d40.real_two_set.len(), 4);
        let pairs = m8_real_pairing().unwrap();
        assert_eq!(pairs.len(), 4);
    }
}
