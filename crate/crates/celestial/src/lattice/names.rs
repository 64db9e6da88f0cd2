//! Short-name codec for divisor classes in B(r):
//! `ij` = Qi − Qj, `1ijk` = H − Qi − Qj − Qk, `ai` = H − Qi,
//! `bi` = 2H − Σ_{j≠i} Qj (the conic-family classes).

use super::{DivisorClass, LatticeError, LatticeResult, LatticeSpec};

/// Decode a short name into a class of the given B(r) lattice.
pub fn class_from_short_name(lattice: LatticeSpec, name: &str) -> LatticeResult<DivisorClass> {
    let LatticeSpec::B(r) = lattice else {
        return Err(LatticeError::BadShortName(name.to_string()));
    };
    let r = r as usize;
    let bad = || LatticeError::BadShortName(name.to_string());
    let digit = |ch: char| -> LatticeResult<usize> {
        let d = ch.to_digit(10).ok_or_else(bad)? as usize;
        if d == 0 || d > r {
            return Err(bad());
        }
        Ok(d)
    };
    let bytes: Vec<char> = name.chars().collect();
    let mut coords = vec![0i64; r + 1];
    match bytes.as_slice() {
        ['a', i] => {
            coords[0] = 1;
            coords[digit(*i)?] = -1;
        }
        ['b', i] => {
            let i = digit(*i)?;
            coords[0] = 2;
            for j in 1..=r {
                if j != i {
                    coords[j] = -1;
                }
            }
        }
        [i, j] if i.is_ascii_digit() => {
            let (i, j) = (digit(*i)?, digit(*j)?);
            if i == j {
                return Err(bad());
            }
            coords[i] = 1;
            coords[j] = -1;
        }
        ['1', i, j, k] => {
            let (i, j, k) = (digit(*i)?, digit(*j)?, digit(*k)?);
            if i == j || j == k || i == k {
                return Err(bad());
            }
            coords[0] = 1;
            coords[i] = -1;
            coords[j] = -1;
            coords[k] = -1;
        }
        _ => return Err(bad()),
    }
    Ok(DivisorClass::new(lattice, coords))
}

/// Encode a class as a short name when it has one of the four shapes.
pub fn short_name(class: &DivisorClass) -> Option<String> {
    let LatticeSpec::B(r) = class.lattice() else {
        return None;
    };
    let r = r as usize;
    let c = class.coords();
    let tail = &c[1..];
    let neg: Vec<usize> = (1..=r).filter(|&i| c[i] == -1).collect();
    let pos: Vec<usize> = (1..=r).filter(|&i| c[i] == 1).collect();
    let clean = tail.iter().all(|&x| (-1..=1).contains(&x));
    if !clean {
        return None;
    }
    match c[0] {
        0 if pos.len() == 1 && neg.len() == 1 => Some(format!("{}{}", pos[0], neg[0])),
        1 if pos.is_empty() && neg.len() == 3 => {
            Some(format!("1{}{}{}", neg[0], neg[1], neg[2]))
        }
        1 if pos.is_empty() && neg.len() == 1 => Some(format!("a{}", neg[0])),
        2 if pos.is_empty() && neg.len() == r - 1 => {
            let i = (1..=r).find(|i| !neg.contains(i))?;
            Some(format!("b{i}"))
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codec_round_trips() {
        let b5 = LatticeSpec::B(5);
        for name in ["12", "45", "1123", "1145", "a1", "a5", "b1", "b3"] {
            let c = class_from_short_name(b5, name).unwrap();
            assert_eq!(short_name(&c).as_deref(), Some(name), "for {name}");
        }
    }

    #[test]
    fn named_class_shapes() {
        let b5 = LatticeSpec::B(5);
        let c = class_from_short_name(b5, "12").unwrap();
        assert_eq!(c.coords(), &[0, 1, -1, 0, 0, 0]);
        let c = class_from_short_name(b5, "1123").unwrap();
        assert_eq!(c.coords(), &[1, -1, -1, -1, 0, 0]);
        let c = class_from_short_name(b5, "b1").unwrap();
        assert_eq!(c.coords(), &[2, 0, -1, -1, -1, -1]);
        assert_eq!(c.self_intersection(), 0);
        assert_eq!(c.intersect(&b5.minus_k()), 2);
    }
}
