//! Expected classification tables, stored verbatim as data.
//!
//! The classifier recomputes each of these tables from first principles and
//! compares against the constants here; `--diff` output is driven by the
//! comparison. Divisor classes are written either in short-name notation
//! (`a1`, `b3`, `14`, `1134`, ...) or as explicit coordinates over the
//! relevant basis.

/// Configuration-index table of effective zero-sets; re-exported from the
/// lattice module, where it seeds canonicalization.
pub use crate::lattice::TABLE_C1;

/// Basis images `(H, Q1, ..., Q5) -> (D0, ..., D5)` of the six real
/// structure classes on the rank-6 basis, indexed 10 through 15. Each image
/// is a coordinate vector over `(H, Q1, ..., Q5)`.
pub const TABLE_REAL: &[(u8, [[i64; 6]; 6])] = &[
    (10, [
        [1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 1],
    ]),
    (11, [
        [1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 1, 0],
    ]),
    (12, [
        [1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 1, 0],
    ]),
    (13, [
        [2, -1, -1, -1, 0, 0],
        [1, 0, -1, -1, 0, 0],
        [1, -1, 0, -1, 0, 0],
        [1, -1, -1, 0, 0, 0],
        [0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 1, 0],
    ]),
    (14, [
        [2, -1, -1, -1, 0, 0],
        [1, 0, -1, -1, 0, 0],
        [1, -1, -1, 0, 0, 0],
        [1, -1, 0, -1, 0, 0],
        [0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 1, 0],
    ]),
    (15, [
        [3, -2, -1, -1, -1, -1],
        [2, -1, -1, -1, -1, -1],
        [1, -1, -1, 0, 0, 0],
        [1, -1, 0, -1, 0, 0],
        [1, -1, 0, 0, -1, 0],
        [1, -1, 0, 0, 0, -1],
    ]),
];

/// Cardinalities of the real irreducible two-set, one row per configuration
/// index 16..=31 and one cell per real structure index 10..=15. A cell lists
/// the possible cardinalities; an empty cell means the combination of
/// configuration and real structure does not occur.
pub const TABLE_G: &[(u8, &str, [&str; 6])] = &[
    (16, "A0", ["10", "6", "2", "6", "2", "2"]),
    (17, "A1", ["8", "4,6", "2", "4", "2", ""]),
    (18, "2A1", ["6", "4", "2", "", "", ""]),
    (19, "2A1", ["7", "3", "", "3,5", "1", "1"]),
    (20, "A2", ["6", "2", "", "2", "2", ""]),
    (21, "3A1", ["5", "3", "", "3", "1", ""]),
    (22, "A2+A1", ["4", "2", "", "", "", ""]),
    (23, "A3", ["4", "", "2", "", "", ""]),
    (24, "A3", ["5", "1", "", "1,3", "", ""]),
    (25, "4A1", ["4", "", "2", "2,4", "", ""]),
    (26, "A2+2A1", ["3", "", "", "", "1", ""]),
    (27, "A3+A1", ["3", "1", "", "", "", ""]),
    (28, "A4", ["2", "", "", "", "", ""]),
    (29, "D4", ["3", "", "", "1", "", ""]),
    (30, "A3+2A1", ["2", "", "", "2", "", ""]),
    (31, "D5", ["1", "", "", "", "", ""]),
];

/// One row of the classification of degree-4 models up to real equivalence:
/// configuration index, real structure index, Dynkin type, number of
/// complex singularities, number of real singularities, number of real
/// circle families, and number of co-spherical family pairs (unordered
/// pairs of families intersecting twice).
pub const TABLE_M4_CLS: &[(u8, u8, &str, u32, u32, u32, u32)] = &[
    (16, 13, "A0", 0, 0, 6, 3),
    (16, 14, "A0", 0, 0, 2, 1),
    (16, 15, "A0", 0, 0, 2, 1),
    (17, 13, "A1", 1, 1, 4, 1),
    (17, 14, "A1", 1, 1, 2, 1),
    (19, 13, "2A1", 2, 2, 3, 1),
    (19, 13, "2A1", 2, 0, 5, 2),
    (20, 13, "A2", 1, 1, 2, 0),
    (20, 14, "A2", 1, 1, 2, 1),
    (21, 13, "3A1", 3, 1, 3, 0),
    (24, 13, "A3", 1, 1, 3, 1),
    (25, 13, "4A1", 4, 2, 2, 0),
    (25, 13, "4A1", 4, 0, 4, 1),
    (30, 13, "A3+2A1", 3, 1, 2, 0),
];

/// Named representatives realizing each row of [`TABLE_M4_CLS`], by type:
/// the `(2,0)`, `(3,1)` and `(4,2)` columns. A `-` means no real
/// representative of that type exists; an empty cell names none.
pub const TABLE_M4_REPRESENTATIVES: &[(u8, u8, &str, &str, &str)] = &[
    (16, 13, "-", "", "Blum cyclide"),
    (16, 14, "-", "", "sphere cyclide"),
    (16, 15, "-", "", "2 components"),
    (17, 13, "EH1", "", ""),
    (17, 14, "E or EH2", "", ""),
    (19, 13, "EO", "", ""),
    (19, 13, "-", "", "Perseus cyclide"),
    (20, 13, "HP", "butterfly", ""),
    (20, 14, "EP", "", ""),
    (21, 13, "CH1", "", ""),
    (24, 13, "EY", "", ""),
    (25, 13, "CO", "", ""),
    (25, 13, "-", "", "Dupin cyclide"),
    (30, 13, "CY", "", ""),
];

/// One row of the class bookkeeping for degree-4 models: configuration
/// index, real structure index, Dynkin type, the effective zero-set, its
/// image under the real structure (in matching order), and the real
/// irreducible two-set. Orderings are significant and preserved.
pub const TABLE_M4_CLASS: &[(u8, u8, &str, &[&str], &[&str], &[&str])] = &[
    (16, 13, "A0", &[], &[], &["a1", "a2", "a3", "b1", "b2", "b3"]),
    (16, 14, "A0", &[], &[], &["a1", "b1"]),
    (16, 15, "A0", &[], &[], &["a1", "b1"]),
    (17, 13, "A1", &["12"], &["12"], &["a1", "a3", "b3", "b2"]),
    (17, 14, "A1", &["1145"], &["1145"], &["a1", "b1"]),
    (19, 13, "2A1", &["12", "1345"], &["12", "1345"], &["a1", "a3", "b3"]),
    (19, 13, "2A1", &["14", "1235"], &["1235", "14"], &["a1", "a2", "a3", "b2", "b3"]),
    (20, 13, "A2", &["12", "23"], &["12", "23"], &["a1", "b3"]),
    (20, 14, "A2", &["24", "1125"], &["1125", "24"], &["a1", "b1"]),
    (21, 13, "3A1", &["12", "1125", "34"], &["12", "34", "1125"], &["a1", "a3", "b2"]),
    (24, 13, "A3", &["12", "1135", "24"], &["12", "24", "1135"], &["a1", "a3", "b3"]),
    (25, 13, "4A1", &["12", "1345", "1125", "34"], &["12", "1345", "34", "1125"], &["a1", "a3"]),
    (25, 13, "4A1", &["14", "1134", "25", "1235"], &["1235", "25", "1134", "14"], &["a1", "a2", "a3", "b3"]),
    (30, 13, "A3+2A1", &["12", "35", "1135", "24", "1124"], &["12", "1124", "24", "1135", "35"], &["a1", "a3"]),
];

/// One row of the quadric classification: catalog name, equation shape in
/// symbolic coefficients `a0`, `a1`, number of complex singularities of the
/// model, number of real singularities, number of real circle families, and
/// number of co-spherical family pairs (pairs intersecting twice).
pub const TABLE_QUADRICS: &[(&str, &str, u32, u32, u32, u32)] = &[
    ("eh1", "a0*x^2+a1*y^2-z^2-w^2", 1, 1, 4, 1),
    ("eh2", "a0*x^2+a1*y^2-z^2+w^2", 1, 1, 2, 1),
    ("e", "a0*x^2+a1*y^2+z^2-w^2", 1, 1, 2, 1),
    ("eo", "a0*x^2+a1*y^2-z^2", 2, 2, 3, 1),
    ("hp", "a0*x^2-a1*y^2-z*w", 1, 1, 2, 0),
    ("ep", "a0*x^2+a1*y^2-z*w", 1, 1, 2, 1),
    ("ch1", "a0*x^2+a0*y^2-z^2-w^2", 3, 1, 3, 0),
    ("ey", "a0*x^2+a1*y^2-w^2", 1, 1, 3, 1),
    ("co", "a0*x^2+a0*y^2-z^2", 4, 2, 2, 0),
    ("cy", "a0*x^2+a0*y^2-w^2", 3, 1, 2, 0),
];

/// One row of the table of surfaces carrying at least two conical families:
/// row number, self-intersection of the canonical class as printed, surface
/// kind, Picard basis, hyperplane class, its self-intersection as printed,
/// embedding dimension, conical family classes, family dimension, and a
/// short description. Symbolic entries (`3..7`, `9-r`) are kept as text.
pub const TABLE_CONICAL: &[(u8, &str, &str, &str, &str, &str, &str, &str, u32, &str)] = &[
    (1, "9", "DP", "B(0)", "H", "1", "2", "2H", 5, "plane"),
    (2, "9", "DP", "B(0)", "2H", "4", "5", "H", 2, "Veronese surface"),
    (3, "8", "DP", "P(0)", "H+F", "2", "3", "H+F", 3, "saddle"),
    (4, "8", "DP", "P(0)", "2H+2F", "8", "8", "H,F", 1, "smooth"),
    (5, "8", "DP", "P(2)", "H", "2", "3", "H", 3, "singular cone"),
    (6, "3..7", "DP", "B(r)", "3H-Q1-..-Qr", "9-r", "9-r", "two-set", 1, "normal"),
    (7, "8", "HZ", "P(0)", "H+2F", "4", "5", "H", 1, "ruled by lines"),
    // The printed canonical self-intersection of this row is 0; the basis
    // and hyperplane class give K^2 = 8. Kept as printed; the recomputation
    // reports the difference.
    (8, "0", "HZ", "P(1)", "H+F", "3", "4", "H", 2, "ruled by lines"),
];

/// Admissible surface types `(degree, cyclicity)` grouped by the degree of
/// the associated model map, with the maximal number of complex circle
/// families per group (`None` = unbounded).
pub const TABLE_TYPES: &[(&[(u32, u32)], u32, Option<u32>)] = &[
    (&[(1, 0), (2, 1)], 2, None),
    (&[(2, 0), (3, 1), (4, 2)], 4, Some(10)),
    (&[(4, 0), (6, 2), (7, 3), (8, 4)], 8, Some(2)),
];

/// Expected class data for a surface type with a degree-8 model map, over
/// the basis named in `basis`. Coordinates follow the basis order.
pub struct HighTypeClasses {
    pub surface_type: (u32, u32),
    /// `P(0)` is the rank-2 ruled basis `(H, F)`; `B(r)` the rank `r+1`
    /// blown-up basis `(H, Q1, ..., Qr)`.
    pub basis: &'static str,
    /// Admissible classes of a singular double conic.
    pub conic_classes: &'static [&'static [i64]],
    /// Class of the plane-at-infinity section.
    pub infinity_class: &'static [i64],
    /// One-set (classes of lines); empty when none exist.
    pub one_set: &'static [&'static [i64]],
    /// Two-set (classes of circle families).
    pub two_set: &'static [&'static [i64]],
}

/// Type `(8,4)`: the infinity section is the fourfold absolute conic and
/// both two-set classes carry circles.
pub const CLASSES_84: HighTypeClasses = HighTypeClasses {
    surface_type: (8, 4),
    basis: "P(0)",
    conic_classes: &[&[2, 0], &[0, 2], &[1, 1]],
    infinity_class: &[2, 2],
    one_set: &[],
    two_set: &[&[1, 0], &[0, 1]],
};

/// Type `(7,3)`: the infinity section is the triple absolute conic plus a
/// line of class `H-Q1-Q2`.
pub const CLASSES_73: HighTypeClasses = HighTypeClasses {
    surface_type: (7, 3),
    basis: "B(2)",
    conic_classes: &[&[2, -1, -1], &[2, -2, 0], &[2, 0, -2]],
    infinity_class: &[3, -1, -1],
    one_set: &[&[0, 1, 0], &[0, 0, 1], &[1, -1, -1]],
    two_set: &[&[1, -1, 0], &[1, 0, -1]],
};

/// Type `(6,2)` splits into three cases by the effective zero-set. Each case
/// records the zero-set, the class of the double absolute conic, the summand
/// decomposition of the residual line pair, the fixed components, the
/// one-set, and the two-set; circles always live on `H-Q1` and `H-Q2`.
pub struct Case62 {
    pub zero_set: &'static [&'static [i64]],
    pub conic_class: &'static [i64],
    pub line_pair_summands: &'static [&'static [i64]],
    pub fixed_summands: &'static [&'static [i64]],
    pub one_set: &'static [&'static [i64]],
    pub two_set: &'static [&'static [i64]],
}

pub const CLASSES_62: &[Case62] = &[
    Case62 {
        zero_set: &[],
        conic_class: &[2, 0, 0, -2],
        line_pair_summands: &[&[0, 0, 0, 1], &[1, -1, -1, 0]],
        fixed_summands: &[],
        one_set: &[
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
            &[1, -1, -1, 0],
            &[1, -1, 0, -1],
            &[1, 0, -1, -1],
        ],
        two_set: &[&[1, -1, 0, 0], &[1, 0, -1, 0], &[1, 0, 0, -1]],
    },
    Case62 {
        zero_set: &[&[0, 0, 1, -1]],
        conic_class: &[2, 0, -1, -1],
        line_pair_summands: &[&[0, 0, 0, 1], &[1, -1, -1, 0]],
        fixed_summands: &[&[0, 0, 1, -1]],
        one_set: &[&[0, 1, 0, 0], &[0, 0, 0, 1], &[1, -1, -1, 0], &[1, 0, -1, -1]],
        two_set: &[&[1, -1, 0, 0], &[1, 0, -1, 0]],
    },
    Case62 {
        zero_set: &[&[0, 0, 1, -1], &[1, -1, -1, -1]],
        conic_class: &[2, 0, -1, -1],
        line_pair_summands: &[&[0, 0, 0, 1], &[0, 0, 0, 1]],
        fixed_summands: &[&[0, 0, 1, -1], &[1, -1, -1, -1]],
        one_set: &[&[0, 1, 0, 0], &[0, 0, 0, 1]],
        two_set: &[&[1, -1, 0, 0], &[1, 0, -1, 0]],
    },
];

/// Type `(4,0)`: zero-set, real two-set, circle classes, and the summand
/// decomposition of the infinity class, in short-name notation over `B(5)`.
pub const CLASSES_40_ZERO_SET: &[&str] = &["14", "1134", "25", "1235"];
pub const CLASSES_40_TWO_SET: &[&str] = &["a1", "a2", "a3", "b3"];
pub const CLASSES_40_CIRCLES: &[&str] = &["a1", "a2"];
/// The last four summands are the classes of the four lines at infinity.
pub const CLASSES_40_INFINITY_SUMMANDS: &[&str] =
    &["14", "1134", "25", "1235", "h-q1-q2", "q3", "q4", "q5"];
/// Line summands of the infinity class as coordinates over `B(5)`.
pub const CLASSES_40_LINE_SUMMANDS: &[&[i64]] = &[
    &[1, -1, -1, 0, 0, 0],
    &[0, 0, 0, 1, 0, 0],
    &[0, 0, 0, 0, 1, 0],
    &[0, 0, 0, 0, 0, 1],
];

/// Real structure facts for types with a degree-8 model map: the identity
/// for `(8,4)`, `(7,3)` and `(6,2)`; index 13 for `(4,0)`, swapping the
/// zero-set elements pairwise.
pub const REAL_84_73_62_IS_IDENTITY: bool = true;
pub const REAL_40_RI: u8 = 13;
pub const REAL_40_SWAPS: &[(&str, &str)] = &[("14", "1235"), ("25", "1134")];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_have_expected_shapes() {
        assert_eq!(TABLE_REAL.len(), 6);
        assert_eq!(TABLE_G.len(), 16);
        assert_eq!(TABLE_M4_CLS.len(), 14);
        assert_eq!(TABLE_M4_CLASS.len(), 14);
        assert_eq!(TABLE_QUADRICS.len(), 10);
        assert_eq!(TABLE_CONICAL.len(), 8);
        assert_eq!(CLASSES_62.len(), 3);
    }

    #[test]
    fn real_structure_images_match_the_lattice_module() {
        use crate::lattice::{real_structure, DivisorClass, LatticeSpec};
        for &(ri, images) in TABLE_REAL {
            let sigma = real_structure(ri).unwrap();
            for (i, image) in images.iter().enumerate() {
                let mut basis = vec![0i64; 6];
                basis[i] = 1;
                let got = sigma.apply(&DivisorClass::new(LatticeSpec::B(5), basis));
                assert_eq!(got.coords(), &image[..], "RI {ri}, basis element {i}");
            }
        }
    }

    #[test]
    fn quadric_rows_match_catalog_records() {
        for &(name, _, _, _, _, _) in TABLE_QUADRICS {
            let r = crate::catalog::lookup(name).unwrap();
            assert_eq!(r.declared_type, Some((2, 0)), "{name}");
        }
    }
}
