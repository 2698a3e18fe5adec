//! Dense linear algebra over a field.

use alloc::vec::Vec;

use crate::field::{Field, FieldElement};

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<FieldElement>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for j in c..cols {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let t = &f * &m[r][j];
                    m[i][j] = &m[i][j] - &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of `{x : M x = 0}`, one vector per free column with that entry 1.
pub fn nullspace(k: &Field, m: &[Vec<FieldElement>], cols: usize) -> Vec<Vec<FieldElement>> {
    let mut a: Vec<Vec<FieldElement>> = m.to_vec();
    let pivots = rref(&mut a);
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = alloc::vec![k.zero(); cols];
        v[free] = k.one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -&a[row][free];
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_vectors_are_annihilated() {
        let k = Field::prime(7).unwrap();
        let e = |n: i64| k.from_i64(n);
        let m = alloc::vec![alloc::vec![e(1), e(2), e(3), e(4)], alloc::vec![e(2), e(4), e(6), e(2)]];
        let ns = nullspace(&k, &m, 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &m {
                let s = row.iter().zip(v).fold(k.zero(), |acc, (a, b)| &acc + &(a * b));
                assert!(s.is_zero());
            }
        }
    }
}
