//! The six embedded real structures RI 10–15 of B(5): involutive lattice
//! isometries fixing K, given by their images of the basis (H, Q1..Q5).

use super::weyl::{apply_isometry, Isometry};
use super::{DivisorClass, LatticeError, LatticeResult, LatticeSpec, RootConfiguration};

/// An involution σ of the Picard lattice preserving the intersection form
/// and fixing K.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealStructure {
    lattice: LatticeSpec,
    ri: Option<u8>,
    mat: Isometry,
}

/// Images of (H, Q1..Q5) for RI 10..15, as coordinate vectors.
const RI_TABLE: &[(u8, [[i64; 6]; 6])] = &[
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
    // σ(H)=2H−Q1−Q2−Q3, σ(Q1)=H−Q2−Q3, σ(Q2)=H−Q1−Q3, σ(Q3)=H−Q1−Q2,
    // σ(Q4)=Q5, σ(Q5)=Q4.
    (13, [
        [2, -1, -1, -1, 0, 0],
        [1, 0, -1, -1, 0, 0],
        [1, -1, 0, -1, 0, 0],
        [1, -1, -1, 0, 0, 0],
        [0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 1, 0],
    ]),
    // σ(H)=2H−Q1−Q2−Q3, σ(Q1)=H−Q2−Q3, σ(Q2)=H−Q1−Q2, σ(Q3)=H−Q1−Q3,
    // σ(Q4)=Q5, σ(Q5)=Q4.
    (14, [
        [2, -1, -1, -1, 0, 0],
        [1, 0, -1, -1, 0, 0],
        [1, -1, -1, 0, 0, 0],
        [1, -1, 0, -1, 0, 0],
        [0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 1, 0],
    ]),
    // σ(H)=3H−2Q1−Q2−Q3−Q4−Q5, σ(Q1)=2H−Q1−Q2−Q3−Q4−Q5,
    // σ(Qi)=H−Q1−Qi for i=2..5.
    (15, [
        [3, -2, -1, -1, -1, -1],
        [2, -1, -1, -1, -1, -1],
        [1, -1, -1, 0, 0, 0],
        [1, -1, 0, -1, 0, 0],
        [1, -1, 0, 0, -1, 0],
        [1, -1, 0, 0, 0, -1],
    ]),
];

impl RealStructure {
    /// Build from basis images (rows = images of basis vectors as coordinate
    /// vectors); validates σ²=id, isometry, σ(K)=K.
    pub fn from_basis_images(lattice: LatticeSpec, images: &[Vec<i64>]) -> LatticeResult<Self> {
        let n = lattice.rank();
        assert_eq!(images.len(), n);
        // Column j of the matrix is the image of basis vector j.
        let mut mat = vec![0i64; n * n];
        for (j, img) in images.iter().enumerate() {
            assert_eq!(img.len(), n);
            for i in 0..n {
                mat[i * n + j] = img[i];
            }
        }
        let s = RealStructure { lattice, ri: None, mat };
        s.validate()?;
        Ok(s)
    }

    fn validate(&self) -> LatticeResult<()> {
        let n = self.lattice.rank();
        // σ² = id on basis vectors.
        for j in 0..n {
            let mut e = vec![0i64; n];
            e[j] = 1;
            let twice = apply_isometry(&self.mat, &apply_isometry(&self.mat, &e));
            if twice != e {
                return Err(LatticeError::BadConfiguration("real structure is not an involution".into()));
            }
        }
        // Isometry on basis pairs.
        for i in 0..n {
            for j in 0..n {
                let mut ei = vec![0i64; n];
                ei[i] = 1;
                let mut ej = vec![0i64; n];
                ej[j] = 1;
                let ci = DivisorClass::new(self.lattice, apply_isometry(&self.mat, &ei));
                let cj = DivisorClass::new(self.lattice, apply_isometry(&self.mat, &ej));
                if ci.intersect(&cj) != self.lattice.gram(i, j) {
                    return Err(LatticeError::BadConfiguration("real structure is not an isometry".into()));
                }
            }
        }
        let k = self.lattice.minus_k();
        if apply_isometry(&self.mat, k.coords()) != k.coords().to_vec() {
            return Err(LatticeError::BadConfiguration("real structure moves K".into()));
        }
        Ok(())
    }

    pub fn ri(&self) -> Option<u8> {
        self.ri
    }

    pub fn lattice(&self) -> LatticeSpec {
        self.lattice
    }

    pub fn apply(&self, class: &DivisorClass) -> DivisorClass {
        DivisorClass::new(self.lattice, apply_isometry(&self.mat, class.coords()))
    }

    /// σ(config) = config as a set.
    pub fn stabilizes(&self, config: &RootConfiguration) -> bool {
        let mut imgs: Vec<Vec<i64>> =
            config.classes().iter().map(|c| self.apply(c).coords().to_vec()).collect();
        imgs.sort();
        imgs == config.key()
    }
}

/// The embedded representative real structure for RI ∈ 10..=15 on B(5).
pub fn real_structure(ri: u8) -> LatticeResult<RealStructure> {
    let (_, rows) = RI_TABLE
        .iter()
        .find(|(id, _)| *id == ri)
        .ok_or(LatticeError::UnknownRealStructure(ri))?;
    let images: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
    let mut s = RealStructure::from_basis_images(LatticeSpec::B(5), &images)?;
    s.ri = Some(ri);
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{class_from_short_name, real_two_set, RootConfiguration};

    #[test]
    fn all_six_validate() {
        for ri in 10..=15 {
            let s = real_structure(ri).unwrap();
            assert_eq!(s.ri(), Some(ri));
        }
        assert!(real_structure(9).is_err());
    }

    #[test]
    fn ri13_images() {
        let s = real_structure(13).unwrap();
        let b5 = LatticeSpec::B(5);
        let h = DivisorClass::new(b5, vec![1, 0, 0, 0, 0, 0]);
        assert_eq!(s.apply(&h).coords(), &[2, -1, -1, -1, 0, 0]);
        let q4 = DivisorClass::new(b5, vec![0, 0, 0, 0, 1, 0]);
        assert_eq!(s.apply(&q4).coords(), &[0, 0, 0, 0, 0, 1]);
        // σ(14) = 1235 under RI 13.
        let c14 = class_from_short_name(b5, "14").unwrap();
        let c1235 = class_from_short_name(b5, "1235").unwrap();
        assert_eq!(s.apply(&c14), c1235);
    }

    #[test]
    fn real_two_set_examples() {
        let b5 = LatticeSpec::B(5);
        let s13 = real_structure(13).unwrap();
        let empty = RootConfiguration::empty(b5);
        assert_eq!(real_two_set(&empty, &s13).unwrap().len(), 6);
        let s10 = real_structure(10).unwrap();
        assert_eq!(real_two_set(&empty, &s10).unwrap().len(), 10);
        // CI 25 second form under RI 13: {a1, a2, a3, b3}.
        let cfg = RootConfiguration::from_short_names(b5, &["14", "1134", "25", "1235"]).unwrap();
        let gr = real_two_set(&cfg, &s13).unwrap();
        let mut names: Vec<String> = gr.iter().map(|c| c.to_string()).collect();
        names.sort();
        assert_eq!(names, vec!["a1", "a2", "a3", "b3"]);
    }
}
