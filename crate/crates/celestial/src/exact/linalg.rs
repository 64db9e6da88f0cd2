//! Tiny exact linear algebra over [`FieldElement`]: just enough Gaussian
//! elimination to parametrize solution spaces of small homogeneous systems
//! (axis lines, plane parametrizations).

use super::element::{Domain, FieldElement};

/// Basis of the nullspace of the k×n matrix `rows` (entries in a common
/// domain). Returns vectors of length n.
pub fn nullspace(rows: &[Vec<FieldElement>], dom: Domain) -> Vec<Vec<FieldElement>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let n = rows[0].len();
    let mut m: Vec<Vec<FieldElement>> = rows.to_vec();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for col in 0..n {
        // Find a pivot in column `col` at or below row r.
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].inv().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for c in 0..n {
                    let s = m[r][c].mul(&f);
                    m[i][c] = m[i][c].sub(&s);
                }
            }
        }
        pivot_cols.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..n {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![FieldElement::zero(dom); n];
        v[free] = FieldElement::one(dom);
        for (ri, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = m[ri][free].neg();
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_of_two_planes() {
        // x + y = 0, z - w = 0 in 4 variables: nullspace dim 2.
        let one = FieldElement::one(Domain::Rational);
        let zero = FieldElement::zero(Domain::Rational);
        let rows = vec![
            vec![one.clone(), one.clone(), zero.clone(), zero.clone()],
            vec![zero.clone(), zero.clone(), one.clone(), one.neg()],
        ];
        let ns = nullspace(&rows, Domain::Rational);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(v[0].add(&v[1]).is_zero());
            assert!(v[2].sub(&v[3]).is_zero());
        }
    }
}
