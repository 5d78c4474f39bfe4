use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::IntMatrix;

/// Symplectic normal form of an integer skew-symmetric matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewNormalForm {
    /// Unimodular `U` with `U S U^T` block diagonal.
    pub basis_change: IntMatrix,
    /// `d_1 | d_2 | ...`, one per block `[[0, d], [-d, 0]]` in rows `2i, 2i+1`.
    pub blocks: Vec<BigInt>,
    /// Size of the trailing zero block.
    pub nullity: usize,
}

impl SkewNormalForm {
    pub fn is_unimodular_part(&self) -> bool {
        self.blocks.iter().all(|d| d == &BigInt::from(1))
    }
}

/// `e_target += c e_source`, applied to the form and to the basis matrix.
fn add_basis(s: &mut IntMatrix, u: &mut IntMatrix, target: usize, source: usize, c: &BigInt) {
    if c.is_zero() {
        return;
    }
    s.add_row_multiple(target, source, c);
    s.add_col_multiple(target, source, c);
    u.add_row_multiple(target, source, c);
}

fn swap_basis(s: &mut IntMatrix, u: &mut IntMatrix, a: usize, b: usize) {
    if a != b {
        s.swap_rows(a, b);
        s.swap_cols(a, b);
        u.swap_rows(a, b);
    }
}

/// Reduces a skew-symmetric integer matrix by unimodular congruence to
/// `diag([[0, d_1], [-d_1, 0]], ..., 0)` with `d_1 | d_2 | ...`.
pub fn skew_normalize(skew: &IntMatrix) -> Result<SkewNormalForm> {
    if !skew.is_skew() {
        return Err(Error::NotSkew);
    }
    let n = skew.rows();
    let mut s = skew.clone();
    let mut u = IntMatrix::identity(n);
    let mut blocks = Vec::new();
    let mut k = 0;
    while k + 1 < n {
        let mut pivot = None;
        for i in k..n {
            for j in k..n {
                let v = s[(i, j)].abs();
                if !v.is_zero() && pivot.as_ref().is_none_or(|(b, _, _): &(BigInt, _, _)| v < *b) {
                    pivot = Some((v, i, j));
                }
            }
        }
        let Some((_, i, j)) = pivot else { break };
        swap_basis(&mut s, &mut u, k, i);
        let j = if j == k { i } else { j };
        swap_basis(&mut s, &mut u, k + 1, j);
        if s[(k, k + 1)].is_negative() {
            swap_basis(&mut s, &mut u, k, k + 1);
        }
        let d = s[(k, k + 1)].clone();
        let mut clean = true;
        for l in k + 2..n {
            let q = s[(k, l)].div_floor(&d);
            add_basis(&mut s, &mut u, l, k + 1, &-q);
            let q = s[(k + 1, l)].div_floor(&d);
            add_basis(&mut s, &mut u, l, k, &q);
            clean &= s[(k, l)].is_zero() && s[(k + 1, l)].is_zero();
        }
        if !clean {
            continue;
        }
        let offender = (k + 2..n).find(|&i| (k + 2..n).any(|j| !s[(i, j)].is_multiple_of(&d)));
        if let Some(i) = offender {
            add_basis(&mut s, &mut u, k, i, &BigInt::from(1));
            continue;
        }
        blocks.push(d);
        k += 2;
    }
    Ok(SkewNormalForm { basis_change: u, nullity: n - 2 * blocks.len(), blocks })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(rows: &[Vec<i64>]) -> SkewNormalForm {
        let s = IntMatrix::from_i64_rows(rows).unwrap();
        let f = skew_normalize(&s).unwrap();
        let t = s.congruent(&f.basis_change);
        let n = s.rows();
        for i in 0..n {
            for j in 0..n {
                let expected = match (i / 2 < f.blocks.len(), j / 2 == i / 2, i % 2, j % 2) {
                    (true, true, 0, 1) => f.blocks[i / 2].clone(),
                    (true, true, 1, 0) => -f.blocks[i / 2].clone(),
                    _ => BigInt::zero(),
                };
                assert_eq!(t[(i, j)], expected, "entry ({i},{j}) of {t}");
            }
        }
        assert!(f.basis_change.is_unimodular());
        for w in f.blocks.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        f
    }

    #[test]
    fn standard_block_is_fixed() {
        let f = check(&[vec![0, 1], vec![-1, 0]]);
        assert_eq!(f.basis_change, IntMatrix::identity(2));
        assert_eq!(f.blocks, vec![BigInt::from(1)]);
    }

    #[test]
    fn tridiagonal_pfaffian_one() {
        let f = check(&[vec![0, 1, 0, 0], vec![-1, 0, 1, 0], vec![0, -1, 0, 1], vec![0, 0, -1, 0]]);
        assert_eq!(f.blocks, vec![BigInt::from(1), BigInt::from(1)]);
        assert_eq!(f.nullity, 0);
    }

    #[test]
    fn non_unimodular_and_degenerate() {
        let f = check(&[vec![0, 2], vec![-2, 0]]);
        assert_eq!(f.blocks, vec![BigInt::from(2)]);
        let f = check(&[vec![0, 2, 3], vec![-2, 0, 0], vec![-3, 0, 0]]);
        assert_eq!((f.blocks.len(), f.nullity), (1, 1));
        let f = check(&[vec![0, 2, 0, 0], vec![-2, 0, 0, 0], vec![0, 0, 0, 3], vec![0, 0, -3, 0]]);
        assert_eq!(f.blocks, vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn rejects_non_skew() {
        let s = IntMatrix::from_i64_rows(&[vec![1, 0], vec![0, 0]]).unwrap();
        assert_eq!(skew_normalize(&s), Err(Error::NotSkew));
    }
}
