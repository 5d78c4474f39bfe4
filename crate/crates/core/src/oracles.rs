//! Slow, independent reference implementations used to cross-check the fast
//! exact routines.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exactalg::{IntMatrix, IntPoly, RatMatrix};

/// `(positive, negative, zero)` eigenvalue counts of a symmetric rational
/// matrix, by symmetric Gaussian elimination (Sylvester's law of inertia).
///
/// A zero pivot with a nonzero entry in its row is repaired by the congruence
/// `e_k -> e_k + e_j` or `e_k -> e_k - e_j`, one of which gives a nonzero pivot.
pub fn inertia_by_elimination(m: &RatMatrix) -> (usize, usize, usize) {
    let n = m.rows();
    let mut a: Vec<Vec<BigRational>> = m.to_rows();
    let (mut pos, mut neg) = (0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        let k = active[0];
        if a[k][k].is_zero() {
            if let Some(&j) = active.iter().find(|&&j| j != k && !a[k][j].is_zero()) {
                let sign = if (&a[j][j] + &a[k][j] * BigRational::from_integer(2.into())).is_zero() {
                    -BigRational::one()
                } else {
                    BigRational::one()
                };
                for i in 0..n {
                    let x = &a[i][j] * &sign;
                    a[i][k] += x;
                }
                for i in 0..n {
                    let x = &a[j][i] * &sign;
                    a[k][i] += x;
                }
            } else if let Some(&j) = active.iter().find(|&&j| !a[j][j].is_zero()) {
                active.retain(|&x| x != j);
                active.insert(0, j);
                continue;
            } else {
                // the remaining block is zero
                break;
            }
        }
        debug_assert!(!a[k][k].is_zero());
        let p = a[k][k].clone();
        if p.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        active.remove(0);
        for &i in &active {
            let f = &a[i][k] / &p;
            if f.is_zero() {
                continue;
            }
            for &j in &active {
                let x = &f * &a[k][j];
                a[i][j] -= x;
            }
        }
        for &i in &active {
            a[i][k] = BigRational::zero();
            a[k][i] = BigRational::zero();
        }
    }
    (pos, neg, n - pos - neg)
}

/// Characteristic polynomial `det(xI - M)` by the Faddeev-LeVerrier recursion over Q.
pub fn faddeev_leverrier(m: &IntMatrix) -> IntPoly {
    let n = m.rows();
    let a = m.to_rational();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut mk = RatMatrix::zeros(n, n);
    for k in 1..=n {
        let mut next = a.mul(&mk);
        for i in 0..n {
            next[(i, i)] += &coeffs[n - k + 1];
        }
        mk = next;
        let amk = a.mul(&mk);
        let trace: BigRational = (0..n).map(|i| amk[(i, i)].clone()).sum();
        coeffs[n - k] = -trace / BigRational::from_integer(BigInt::from(k));
    }
    IntPoly::new(coeffs.into_iter().map(|c| c.to_integer()).collect())
}

/// `det(tA + B)` by fraction-free Bareiss elimination over `Z[t]`.
pub fn bareiss_pencil_det(a: &IntMatrix, b: &IntMatrix) -> IntPoly {
    let n = a.rows();
    let mut m: Vec<Vec<IntPoly>> = (0..n)
        .map(|i| (0..n).map(|j| IntPoly::new(vec![b[(i, j)].clone(), a[(i, j)].clone()])).collect())
        .collect();
    let mut prev = IntPoly::one();
    let mut sign = 1;
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return IntPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        return IntPoly::one();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -&d
    } else {
        d
    }
}
