//! Determinants of linear matrix pencils by evaluation and interpolation.

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed};

use super::intpoly::IntPoly;
use super::matrix::IntMatrix;
use super::modular::{add_mod, det_mod, interpolate_mod, lift_signed, mul_mod, reduce, sqrt_bit_bound};

/// `det(tA + B)` as a polynomial in `t`.
///
/// The values at `t = 0..=n` are taken modulo word-sized primes and
/// interpolated; the coefficients are bounded by the maximum of the
/// determinant on the unit circle, which Hadamard's inequality bounds by
/// `prod_i sqrt(sum_j (|a_ij| + |b_ij|)^2)`.
pub fn pencil_det(a: &IntMatrix, b: &IntMatrix) -> IntPoly {
    assert!(a.is_square() && a.rows() == b.rows() && a.cols() == b.cols());
    let n = a.rows();
    if n == 0 {
        return IntPoly::one();
    }
    let mut square = BigInt::one();
    for i in 0..n {
        let row: BigInt = (0..n)
            .map(|j| {
                let s = a[(i, j)].abs() + b[(i, j)].abs();
                &s * &s
            })
            .sum();
        if row.sign() == Sign::NoSign {
            return IntPoly::from_i64(&[0]);
        }
        square *= row;
    }
    let bits = sqrt_bit_bound(&square);
    let coeffs = lift_signed(bits, |p| {
        let ap: Vec<u64> = a.iter().map(|x| reduce(x, p)).collect();
        let bp: Vec<u64> = b.iter().map(|x| reduce(x, p)).collect();
        let values: Vec<u64> = (0..=n as u64)
            .map(|t| {
                let mut m: Vec<u64> = ap
                    .iter()
                    .zip(&bp)
                    .map(|(&x, &y)| add_mod(mul_mod(t, x, p), y, p))
                    .collect();
                det_mod(&mut m, n, p)
            })
            .collect();
        interpolate_mod(&values, p)
    });
    IntPoly::new(coeffs)
}

/// `det(tV - V^T)`.
pub fn seifert_det(v: &IntMatrix) -> IntPoly {
    pencil_det(v, &v.transpose().neg())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_and_figure_eight() {
        let tre = IntMatrix::from_i64_rows(&[vec![-1, 1], vec![0, -1]]).unwrap();
        assert_eq!(seifert_det(&tre), IntPoly::from_i64(&[1, -1, 1]));
        let fig = IntMatrix::from_i64_rows(&[vec![1, 1], vec![0, -1]]).unwrap();
        assert_eq!(seifert_det(&fig), IntPoly::from_i64(&[-1, 3, -1]));
    }

    #[test]
    fn stabilized_block_gives_monomial() {
        let b = IntMatrix::from_i64_rows(&[vec![0, 1], vec![0, 0]]).unwrap();
        assert_eq!(seifert_det(&b), IntPoly::from_i64(&[0, 1]));
    }

    #[test]
    fn singular_pencil() {
        let z = IntMatrix::zeros(3, 3);
        assert!(pencil_det(&z, &z).is_zero());
    }
}
