//! Seeded random Seifert matrices together with trivial-block certificates,
//! for property tests and the acceptance runner.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use crate::exactalg::{IntMatrix, RatMatrix};
use crate::satellite::Pattern;
use crate::seifert::{SeifertMatrix, TrivialBlockCertificate};

/// A 2x2 block with `det(tB - B^T) = t`.
fn trivial_pair<R: Rng>(rng: &mut R) -> IntMatrix {
    let k = rng.gen_range(-2..=2);
    let rows = match rng.gen_range(0..4) {
        0 => vec![vec![0, 1], vec![0, k]],
        1 => vec![vec![k, 1], vec![0, 0]],
        2 => vec![vec![0, 0], vec![1, k]],
        _ => vec![vec![k, 0], vec![1, 0]],
    };
    IntMatrix::from_i64_rows(&rows).unwrap()
}

/// A 2x2 block with unimodular skew part and arbitrary Alexander polynomial.
fn generic_pair<R: Rng>(rng: &mut R) -> IntMatrix {
    let a = rng.gen_range(-2..=2);
    let d = rng.gen_range(-2..=2);
    let b = rng.gen_range(-1..=2);
    let c = if rng.gen_bool(0.5) { b - 1 } else { b + 1 };
    IntMatrix::from_i64_rows(&[vec![a, b], vec![c, d]]).unwrap()
}

/// A random unimodular matrix, as a product of elementary matrices.
pub fn random_unimodular<R: Rng>(rng: &mut R, m: usize, steps: usize) -> IntMatrix {
    let mut u = IntMatrix::identity(m);
    if m < 2 {
        return u;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..m);
        let j = (i + rng.gen_range(1..m)) % m;
        if rng.gen_bool(0.15) {
            u.swap_rows(i, j);
        } else {
            let c = if rng.gen_bool(0.5) { 1 } else { -1 };
            u.add_row_multiple(i, j, &BigInt::from(c));
        }
    }
    u
}

/// A Seifert matrix with `pairs` 2x2 blocks (the first `trivial` of them
/// Alexander-trivial) and `components - 1` extra 1x1 blocks, symmetrically
/// coupled and then scrambled by a random congruence. The certificate undoes
/// the scrambling.
pub fn random_seifert<R: Rng>(
    rng: &mut R,
    pairs: usize,
    trivial: usize,
    components: usize,
) -> (SeifertMatrix, TrivialBlockCertificate) {
    assert!(trivial <= pairs && components >= 1);
    let m = 2 * pairs + components - 1;
    let mut v0 = IntMatrix::zeros(m, m);
    for b in 0..pairs {
        let blk = if b < trivial { trivial_pair(rng) } else { generic_pair(rng) };
        for i in 0..2 {
            for j in 0..2 {
                v0[(2 * b + i, 2 * b + j)] = blk[(i, j)].clone();
            }
        }
    }
    for i in 2 * pairs..m {
        v0[(i, i)] = BigInt::from(rng.gen_range(-1..=1));
    }
    // couplings between different blocks keep the skew part block diagonal,
    // but never touch the trivial block itself
    let block_of = |i: usize| if i < 2 * pairs { i / 2 } else { pairs + i };
    for i in 0..m {
        for j in i + 1..m {
            if block_of(i) == block_of(j) || (i < 2 * trivial && j < 2 * trivial) || !rng.gen_bool(0.35) {
                continue;
            }
            let x = BigInt::from(if rng.gen_bool(0.5) { 1 } else { -1 });
            v0[(i, j)] = x.clone();
            v0[(j, i)] = x;
        }
    }
    let r = random_unimodular(rng, m, 2 * m);
    let v = v0.congruent(&r);
    let cert = TrivialBlockCertificate { basis_change: r.unimodular_inverse().unwrap(), block_size: 2 * trivial };
    let v = SeifertMatrix::new(v, components).expect("generated matrix is valid");
    debug_assert!(cert.verify(&v).is_ok());
    (v, cert)
}

/// A knot matrix of size at most `max_size` with a certificate.
pub fn random_knot<R: Rng>(rng: &mut R, max_size: usize) -> (SeifertMatrix, TrivialBlockCertificate) {
    let pairs = rng.gen_range(0..=max_size / 2);
    let trivial = rng.gen_range(0..=pairs);
    random_seifert(rng, pairs, trivial, 1)
}

/// A certified knot pattern with winding number in `0..=max_winding`.
pub fn random_pattern<R: Rng>(rng: &mut R, max_size: usize, max_winding: u64) -> Pattern {
    let (v, cert) = random_knot(rng, max_size);
    let w = rng.gen_range(0..=max_winding) as i64;
    Pattern::new(v, w, Some(cert)).expect("generated pattern is valid")
}

/// A random symmetric rational matrix with small numerators and denominators.
pub fn random_symmetric_rational<R: Rng>(rng: &mut R, max_size: usize) -> RatMatrix {
    let n = rng.gen_range(1..=max_size);
    let mut entries = vec![vec![BigRational::from_integer(0.into()); n]; n];
    for i in 0..n {
        for j in i..n {
            let num = rng.gen_range(-6..=6);
            let den = rng.gen_range(1..=4);
            let x = BigRational::new(num.into(), BigInt::from(den));
            entries[i][j] = x.clone();
            entries[j][i] = x;
        }
    }
    RatMatrix::try_from_rows(entries).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_data_is_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let (v, c) = random_knot(&mut rng, 6);
            c.verify(&v).unwrap();
            let p = random_pattern(&mut rng, 6, 5);
            p.certificate().unwrap().verify(p.matrix()).unwrap();
            let (v, c) = random_seifert(&mut rng, 2, 1, 2);
            assert_eq!(v.components(), 2);
            c.verify(&v).unwrap();
        }
    }
}
