use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

fn ratio_string<S: Serializer>(r: &Rational64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn big_ratio_string<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Closed-form quantities for the cable `C_{2,q}(T_{2,p})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CableTableRow {
    pub p: i64,
    pub q: i64,
    pub g3: i64,
    /// `(q - 1)/2 + p - 1`, transcribed rather than computed.
    pub g4sm_formula: i64,
    /// `g_Z(C_{2,q}(U)) + g_Z(T_{2,p}) = (q - 1)/2 + (p - 1)/2`.
    #[serde(serialize_with = "ratio_string")]
    pub gz_upper: Rational64,
    /// Lower bound on `g4top` from the two signature evaluations.
    pub sig_lower: i64,
    pub tight: bool,
}

fn check_odd(x: i64) -> Result<()> {
    if x < 1 {
        return Err(Error::InvalidParameter(format!("{x} is not a positive odd integer")));
    }
    if x % 2 == 0 {
        return Err(Error::EvenParameter(x));
    }
    Ok(())
}

/// `floor(q/4 - q/(2p))` and `floor(p/2 - 2p/q)`, each clamped at zero.
///
/// For `q = 3` the second evaluation point lies outside the range where its
/// signature formula is valid (it would exceed the proven upper bound), which
/// shows up as a negative floor.
fn deficits(p: i64, q: i64) -> (i64, i64) {
    let a = (q * (p - 2)).div_euclid(4 * p);
    let b = (p * (q - 4)).div_euclid(2 * q);
    (a.max(0), b.max(0))
}

/// The two floors vanish together, and exactly when `1/2 < 1/p + 2/q`.
pub fn tightness_equivalence_holds(p: i64, q: i64) -> bool {
    let (a, b) = deficits(p, q);
    let criterion = Rational64::new(1, 2) < Rational64::new(1, p) + Rational64::new(2, q);
    (a == 0) == (b == 0) && (a == 0) == criterion
}

pub fn cable2q_row(p: i64, q: i64) -> Result<CableTableRow> {
    check_odd(p)?;
    check_odd(q)?;
    let gz = (q - 1) / 2 + (p - 1) / 2;
    let sig_lower = if p == 1 || q == 1 {
        // C_{2,q}(U) = T_{2,q}, and for q = 1 the pattern has trivial Alexander polynomial
        gz
    } else {
        let (a, b) = deficits(p, q);
        gz - a.min(b)
    };
    Ok(CableTableRow {
        p,
        q,
        g3: (q - 1) / 2 + p - 1,
        g4sm_formula: (q - 1) / 2 + p - 1,
        gz_upper: Rational64::from(gz),
        sig_lower,
        tight: Rational64::from(sig_lower) == Rational64::from(gz),
    })
}

pub fn cable2q_table(ps: &[i64], qs: &[i64]) -> Result<Vec<CableTableRow>> {
    let mut rows = Vec::with_capacity(ps.len() * qs.len());
    for &p in ps {
        for &q in qs {
            rows.push(cable2q_row(p, q)?);
        }
    }
    Ok(rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IteratedLevel {
    pub n: u32,
    pub g3: BigInt,
    pub gz_upper: BigInt,
    #[serde(serialize_with = "big_ratio_string")]
    pub ratio: BigRational,
}

/// `K_{n,p}`: `n` iterated `(2, 2c + 1)`-cables starting from `T_{2,p}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IteratedCableReport {
    pub p: i64,
    pub n: u32,
    /// `c_0, ..., c_n`.
    pub c_sequence: Vec<BigInt>,
    /// Levels `1..=n`.
    pub levels: Vec<IteratedLevel>,
}

fn q(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

fn level(p: i64, n: u32, c: &[BigInt]) -> Result<IteratedLevel> {
    let two = BigInt::from(2);
    let half = BigInt::from((p - 1) / 2);
    let g3: BigInt = (0..n).map(|k| &c[k as usize] * two.pow(n - 1 - k)).sum::<BigInt>() + &half * two.pow(n);
    let gz: BigInt = c[..n as usize].iter().sum::<BigInt>() + &half;
    let pow2 = |e: u32| BigRational::from_integer(two.pow(e));
    let g3_closed = pow2(2 * n - 1) * (q(p) + q(1) / q(3)) - pow2(n) + q(1) / q(3);
    let gz_closed = pow2(2 * n - 1) * (q(2 * p) / q(3) + q(2) / q(9)) - q(3 * n as i64 + 1) / q(9) + q(p - 3) / q(6);
    if g3_closed != BigRational::from_integer(g3.clone()) {
        return Err(Error::VerificationFailed(format!("g3 sum {g3} differs from closed form {g3_closed} at n={n}")));
    }
    if gz_closed != BigRational::from_integer(gz.clone()) {
        return Err(Error::VerificationFailed(format!("g_Z sum {gz} differs from closed form {gz_closed} at n={n}")));
    }
    let ratio = BigRational::new(gz.clone(), g3.clone());
    Ok(IteratedLevel { n, g3, gz_upper: gz, ratio })
}

/// Recursion and closed forms for the iterated cables, checked against each other.
pub fn iterated_cable_arithmetic(p: i64, n: u32) -> Result<IteratedCableReport> {
    check_odd(p)?;
    if p < 3 {
        return Err(Error::InvalidParameter(format!("p = {p} must be at least 3")));
    }
    if n < 1 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let four = BigInt::from(4);
    let mut c = vec![BigInt::from(p)];
    for k in 1..=n {
        let next = &four * &c[k as usize - 1] + BigInt::one();
        let closed = four.pow(k) * p + (four.pow(k) - BigInt::one()) / 3;
        if next != closed {
            return Err(Error::VerificationFailed(format!("c_{k} = {next} differs from closed form {closed}")));
        }
        c.push(next);
    }
    let levels = (1..=n).map(|m| level(p, m, &c)).collect::<Result<Vec<_>>>()?;
    debug_assert!(levels.iter().all(|l| !l.g3.is_zero()));
    Ok(IteratedCableReport { p, n, c_sequence: c, levels })
}

/// Schubert: `g_3(P(K)) = g_3(P) + |w| g_3(K)`.
pub fn schubert_g3(g3_pattern: u64, w: i64, g3_companion: u64) -> u64 {
    g3_pattern + w.unsigned_abs() * g3_companion
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_rows() {
        for p in [3, 5, 7, 9] {
            let r = cable2q_row(p, 5).unwrap();
            assert!(r.tight, "p={p}");
        }
        let r = cable2q_row(3, 5).unwrap();
        assert_eq!((r.g4sm_formula, r.gz_upper, r.sig_lower), (4, Rational64::from(3), 3));
        let r = cable2q_row(3, 7).unwrap();
        assert_eq!((r.gz_upper, r.sig_lower, r.tight), (Rational64::from(4), 4, true));
        let r = cable2q_row(5, 7).unwrap();
        assert_eq!((r.gz_upper, r.sig_lower, r.tight), (Rational64::from(5), 4, false));
        assert!(cable2q_row(3, 9).unwrap().tight);
        assert!(!cable2q_row(11, 5).unwrap().tight);
        assert_eq!(cable2q_row(4, 5), Err(Error::EvenParameter(4)));
        for p in (3..=15).step_by(2) {
            for q in (3..=15).step_by(2) {
                assert!(tightness_equivalence_holds(p, q), "({p},{q})");
                assert_eq!(cable2q_row(p, q).unwrap().tight, Rational64::new(1, 2) < Rational64::new(1, p) + Rational64::new(2, q));
            }
        }
    }

    #[test]
    fn iterated() {
        let r = iterated_cable_arithmetic(3, 2).unwrap();
        assert_eq!(r.c_sequence, vec![BigInt::from(3), BigInt::from(13), BigInt::from(53)]);
        assert_eq!((r.levels[0].g3.clone(), r.levels[0].gz_upper.clone()), (5.into(), 4.into()));
        assert_eq!((r.levels[1].g3.clone(), r.levels[1].gz_upper.clone()), (23.into(), 17.into()));
        for p in (3..=9).step_by(2) {
            let r = iterated_cable_arithmetic(p, 6).unwrap();
            assert!(r.levels.windows(2).all(|w| w[1].ratio < w[0].ratio));
            assert!(r.levels[5].ratio <= BigRational::new(7.into(), 10.into()), "p={p}");
        }
    }

    #[test]
    fn schubert() {
        assert_eq!(schubert_g3(2, 2, 1), 4);
        assert_eq!(schubert_g3(3, 0, 5), 3);
        assert_eq!(schubert_g3(0, -1, 5), 5);
    }
}
