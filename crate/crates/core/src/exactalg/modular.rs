//! Word-sized prime fields and Chinese remaindering.
//!
//! Determinants and characteristic polynomials of integer matrices are
//! computed modulo a run of 62-bit primes and lifted back with an a-priori
//! coefficient bound, so every result is exact.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

const PRIME_CEILING: u64 = 1 << 62;

static PRIMES: Mutex<Vec<u64>> = Mutex::new(Vec::new());

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub(crate) fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit inputs.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The `i`-th prime below 2^62 (descending), all congruent to 1 mod 4.
pub(crate) fn prime(i: usize) -> u64 {
    let mut primes = PRIMES.lock().unwrap();
    while primes.len() <= i {
        let mut candidate = primes.last().copied().unwrap_or(PRIME_CEILING + 1) - 4;
        while !is_prime(candidate) {
            candidate -= 4;
        }
        primes.push(candidate);
    }
    primes[i]
}

pub(crate) fn reduce(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}


/// Number of primes whose product exceeds `2^(bits + 1)`.
fn primes_needed(bits: u64) -> usize {
    let mut have = 0u64;
    let mut count = 0;
    while have <= bits + 1 {
        have += 61;
        count += 1;
    }
    count
}

/// Lifts a vector of integers of absolute value below `2^bits` from its images
/// modulo enough primes. `image(p)` must return the residues modulo `p`.
pub(crate) fn lift_signed<F>(bits: u64, image: F) -> Vec<BigInt>
where
    F: Fn(u64) -> Vec<u64> + Sync,
{
    let count = primes_needed(bits);
    let moduli: Vec<u64> = (0..count).map(prime).collect();
    let images: Vec<Vec<u64>> = moduli.par_iter().map(|&p| image(p)).collect();

    let len = images[0].len();
    let mut values: Vec<BigInt> = images[0].iter().map(|&r| BigInt::from(r)).collect();
    let mut modulus = BigInt::from(moduli[0]);
    for (k, &p) in moduli.iter().enumerate().skip(1) {
        let m_inv = inv_mod(reduce(&modulus, p), p);
        for (j, value) in values.iter_mut().enumerate().take(len) {
            let r = images[k][j];
            let delta = mul_mod(sub_mod(r, reduce(value, p), p), m_inv, p);
            *value += &modulus * BigInt::from(delta);
        }
        modulus *= BigInt::from(p);
    }
    let half = &modulus >> 1;
    for value in values.iter_mut() {
        if *value > half {
            *value -= &modulus;
        }
    }
    values
}

/// Ceiling of log2 of a nonnegative integer, plus one.
pub(crate) fn bit_bound(x: &BigInt) -> u64 {
    if x.is_zero() {
        1
    } else {
        x.bits() + 1
    }
}

/// Bits needed for the square root of `x` (for Hadamard-type bounds held squared).
pub(crate) fn sqrt_bit_bound(square: &BigInt) -> u64 {
    if square <= &BigInt::one() {
        1
    } else {
        square.bits() / 2 + 2
    }
}

/// Determinant over F_p, destroying `a` (row-major n x n).
pub(crate) fn det_mod(a: &mut [u64], n: usize, p: u64) -> u64 {
    let mut det = 1u64;
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r * n + col] != 0);
        let Some(pr) = pivot else { return 0 };
        if pr != col {
            for j in 0..n {
                a.swap(pr * n + j, col * n + j);
            }
            det = sub_mod(0, det, p);
        }
        let pv = a[col * n + col];
        det = mul_mod(det, pv, p);
        let inv = inv_mod(pv, p);
        for r in col + 1..n {
            let f = mul_mod(a[r * n + col], inv, p);
            if f == 0 {
                continue;
            }
            for j in col..n {
                let sub = mul_mod(f, a[col * n + j], p);
                a[r * n + j] = sub_mod(a[r * n + j], sub, p);
            }
        }
    }
    det
}

/// Characteristic polynomial det(xI - A) over F_p via Hessenberg reduction.
/// Coefficients are returned low degree first (length n + 1, monic).
pub(crate) fn charpoly_mod(a: &mut [u64], n: usize, p: u64) -> Vec<u64> {
    let idx = |i: usize, j: usize| i * n + j;
    for m in 1..n.saturating_sub(1) {
        let Some(i0) = (m..n).find(|&i| a[idx(i, m - 1)] != 0) else {
            continue;
        };
        if i0 != m {
            for j in 0..n {
                a.swap(idx(i0, j), idx(m, j));
            }
            for j in 0..n {
                a.swap(idx(j, i0), idx(j, m));
            }
        }
        let inv = inv_mod(a[idx(m, m - 1)], p);
        for i in m + 1..n {
            let u = mul_mod(a[idx(i, m - 1)], inv, p);
            if u == 0 {
                continue;
            }
            for j in 0..n {
                let s = mul_mod(u, a[idx(m, j)], p);
                a[idx(i, j)] = sub_mod(a[idx(i, j)], s, p);
            }
            for j in 0..n {
                let s = mul_mod(u, a[idx(j, i)], p);
                a[idx(j, m)] = add_mod(a[idx(j, m)], s, p);
            }
        }
    }
    // p_k for k = 0..=n, each stored low degree first
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let h_mm = a[idx(m - 1, m - 1)];
        let prev = &polys[m - 1];
        let mut next = vec![0u64; m + 1];
        for (k, &c) in prev.iter().enumerate() {
            next[k + 1] = add_mod(next[k + 1], c, p);
            next[k] = sub_mod(next[k], mul_mod(h_mm, c, p), p);
        }
        let mut t = 1u64;
        for i in 1..m {
            t = mul_mod(t, a[idx(m - i, m - i - 1)], p);
            let coeff = mul_mod(a[idx(m - i - 1, m - 1)], t, p);
            if coeff == 0 {
                continue;
            }
            for (k, &c) in polys[m - i - 1].iter().enumerate() {
                next[k] = sub_mod(next[k], mul_mod(coeff, c, p), p);
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

/// Interpolates the polynomial of degree <= values.len()-1 through (k, values[k]),
/// k = 0, 1, ..., returning coefficients low degree first.
pub(crate) fn interpolate_mod(values: &[u64], p: u64) -> Vec<u64> {
    let n = values.len();
    // Newton divided differences on nodes 0..n
    let mut dd = values.to_vec();
    for level in 1..n {
        let inv = inv_mod(level as u64, p);
        for i in (level..n).rev() {
            dd[i] = mul_mod(sub_mod(dd[i], dd[i - 1], p), inv, p);
        }
    }
    // dd[k] / ... with node spacing 1: divided difference denominators are (i - (i - level)) = level
    let mut coeffs = vec![0u64; n];
    for k in (0..n).rev() {
        // coeffs = coeffs * (x - k) + dd[k]
        let node = k as u64 % p;
        let mut shifted = vec![0u64; n];
        for j in 0..n {
            if coeffs[j] == 0 {
                continue;
            }
            if j + 1 < n {
                shifted[j + 1] = add_mod(shifted[j + 1], coeffs[j], p);
            }
            shifted[j] = sub_mod(shifted[j], mul_mod(node, coeffs[j], p), p);
        }
        shifted[0] = add_mod(shifted[0], dd[k], p);
        coeffs = shifted;
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_are_prime_and_one_mod_four() {
        for i in 0..4 {
            let p = prime(i);
            assert!(is_prime(p));
            assert_eq!(p % 4, 1);
            assert!(p < PRIME_CEILING);
        }
        assert!(prime(0) > prime(1));
    }

    #[test]
    fn interpolation_recovers_cubic() {
        let p = prime(0);
        // 2x^3 - x + 5
        let f = |x: u64| {
            let x = x % p;
            let v = 2 * x * x * x + 5;
            sub_mod(v % p, x, p)
        };
        let values: Vec<u64> = (0..4).map(f).collect();
        let c = interpolate_mod(&values, p);
        assert_eq!(c, vec![5, p - 1, 0, 2]);
    }

    #[test]
    fn lift_recovers_negative_values() {
        let target = [BigInt::from(-7), BigInt::from(123456789012345678i64), BigInt::zero()];
        let lifted = lift_signed(70, |p| target.iter().map(|x| reduce(x, p)).collect());
        assert_eq!(lifted, target.to_vec());
    }

    #[test]
    fn hessenberg_charpoly_small() {
        let p = prime(1);
        // [[2,1],[1,2]] -> x^2 - 4x + 3
        let mut a = vec![2, 1, 1, 2];
        let c = charpoly_mod(&mut a, 2, p);
        assert_eq!(c, vec![3, p - 4, 1]);
    }
}
