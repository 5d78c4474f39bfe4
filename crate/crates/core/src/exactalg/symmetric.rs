//! Exact characteristic polynomials and signatures of symmetric matrices.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::intpoly::IntPoly;
use super::matrix::{IntMatrix, RatMatrix};
use super::modular::{bit_bound, charpoly_mod, lift_signed, reduce};
use super::roots::real_rooted_sign_counts;
use crate::error::{Error, Result};

/// `det(xI - M)` for a square integer matrix.
pub fn char_poly(m: &IntMatrix) -> IntPoly {
    assert!(m.is_square());
    let n = m.rows();
    if n == 0 {
        return IntPoly::one();
    }
    // every eigenvalue has |lambda| <= R (row sums), so |c_k| <= C(n,k) R^(n-k) <= (1+R)^n
    let r = (0..n)
        .map(|i| m.row(i).iter().map(|x| x.abs()).sum::<BigInt>())
        .max()
        .unwrap();
    let bits = (bit_bound(&(r + BigInt::one())) * n as u64).max(2);
    let coeffs = lift_signed(bits, |p| {
        let mut a: Vec<u64> = m.iter().map(|x| reduce(x, p)).collect();
        charpoly_mod(&mut a, n, p)
    });
    IntPoly::new(coeffs)
}

/// Numbers of positive, negative and zero eigenvalues of a symmetric integer matrix.
pub fn inertia(m: &IntMatrix) -> Result<(usize, usize, usize)> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric("matrix is not symmetric".into()));
    }
    Ok(real_rooted_sign_counts(&char_poly(m)))
}

pub fn signature_of_symmetric_int(m: &IntMatrix) -> Result<i64> {
    let (pos, neg, _) = inertia(m)?;
    Ok(pos as i64 - neg as i64)
}

/// Signature of a symmetric rational matrix; clearing the (positive) common
/// denominator does not change it.
pub fn signature_of_symmetric(m: &RatMatrix) -> Result<i64> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric("matrix is not symmetric".into()));
    }
    let d = m.common_denominator();
    let scaled = m.map(|x| (x * &d).to_integer());
    signature_of_symmetric_int(&scaled)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn int(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn small_signatures() {
        assert_eq!(signature_of_symmetric_int(&IntMatrix::identity(3)).unwrap(), 3);
        assert_eq!(signature_of_symmetric_int(&int(&[vec![2, 0], vec![0, -3]])).unwrap(), 0);
        assert_eq!(signature_of_symmetric_int(&int(&[vec![2, 1], vec![1, 2]])).unwrap(), 2);
        assert_eq!(signature_of_symmetric_int(&IntMatrix::zeros(0, 0)).unwrap(), 0);
    }

    #[test]
    fn char_poly_matches_hand_expansion() {
        assert_eq!(char_poly(&int(&[vec![2, 1], vec![1, 2]])), IntPoly::from_i64(&[3, -4, 1]));
        let m = int(&[vec![0, 1, 0], vec![0, 0, 1], vec![6, -11, 6]]);
        assert_eq!(char_poly(&m), IntPoly::from_i64(&[-6, 11, -6, 1]));
    }

    #[test]
    fn rational_entries_and_kernel() {
        let h = BigRational::new(1.into(), 2.into());
        let m = RatMatrix::from_fn(2, 2, |_, _| h.clone());
        assert_eq!(signature_of_symmetric(&m).unwrap(), 1);
        assert!(matches!(
            signature_of_symmetric(&int(&[vec![0, 1], vec![0, 0]]).to_rational()),
            Err(Error::NotSymmetric(_))
        ));
    }
}
