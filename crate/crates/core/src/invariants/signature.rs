use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactalg::{signature_of_symmetric_int, IntMatrix, RootInterval, SturmSequence, UnitCirclePoint};
use crate::seifert::SeifertMatrix;

/// The symmetric integer matrix whose signature is twice `sigma_omega(V)`
/// (or the signature itself at `omega = -1`, where a real form suffices).
///
/// For `omega = omega(s)`, `s = p/q`, the Hermitian form
/// `(1 - omega) V + (1 - conj omega) V^T` is a positive multiple of
/// `|p| (V + V^T) - i sgn(p) q (V - V^T) = A + iB`, realified as
/// `[[A, -B], [B, A]]`.
fn signature_form(v: &IntMatrix, omega: &UnitCirclePoint) -> (IntMatrix, bool) {
    let sym = v.add(&v.transpose());
    match omega {
        UnitCirclePoint::MinusOne => (sym.scale(&BigInt::from(2)), false),
        UnitCirclePoint::RationalParam(s) => {
            let (p, q) = (s.numer(), s.denom());
            let a = sym.scale(&p.abs());
            let sign = if p.is_negative() { BigInt::one() } else { -BigInt::one() };
            let b = v.sub(&v.transpose()).scale(&(sign * q));
            let n = v.rows();
            let real = IntMatrix::from_fn(2 * n, 2 * n, |i, j| match (i < n, j < n) {
                (true, true) => a[(i, j)].clone(),
                (true, false) => -b[(i, j - n)].clone(),
                (false, true) => b[(i - n, j)].clone(),
                (false, false) => a[(i - n, j - n)].clone(),
            });
            (real, true)
        }
    }
}

/// The Levine-Tristram signature at `omega`, with the convention
/// `sign((1 - omega) V + (1 - conj omega) V^T)`.
///
/// Refuses `omega = 1` and points where the Alexander polynomial vanishes.
pub fn signature_at(v: &SeifertMatrix, omega: &UnitCirclePoint) -> Result<i64> {
    if !v.is_knot() {
        return Err(Error::MultiComponent(v.components()));
    }
    if omega.is_one() {
        return Err(Error::OmegaIsOne);
    }
    if v.alexander().eval_gaussian(omega).is_zero() {
        return Err(Error::NotRegular);
    }
    Ok(signature_unchecked(v.matrix(), omega))
}

pub(crate) fn signature_unchecked(v: &IntMatrix, omega: &UnitCirclePoint) -> i64 {
    if v.rows() == 0 {
        return 0;
    }
    let (form, realified) = signature_form(v, omega);
    let sig = signature_of_symmetric_int(&form).expect("signature form is symmetric");
    if realified {
        debug_assert!(sig % 2 == 0);
        sig / 2
    } else {
        sig
    }
}

/// `z(s) = 2 Re omega(s) = 2(1 - s^2)/(1 + s^2)`.
pub fn z_of_param(s: &BigRational) -> BigRational {
    let s2 = s * s;
    BigRational::from_integer(2.into()) * (BigRational::one() - &s2) / (BigRational::one() + s2)
}

/// The simplest positive rational `s` with `lo < z(s) < hi` (Stern-Brocot
/// descent; `z` is decreasing in `s`).
fn param_in_gap(lo: &BigRational, hi: &BigRational) -> BigRational {
    let (mut a, mut b) = ((BigInt::zero(), BigInt::one()), (BigInt::one(), BigInt::zero()));
    loop {
        let m = (&a.0 + &b.0, &a.1 + &b.1);
        let s = BigRational::new(m.0.clone(), m.1.clone());
        let z = z_of_param(&s);
        if z >= *hi {
            a = m;
        } else if z <= *lo {
            b = m;
        } else {
            return s;
        }
    }
}

/// One maximal arc of the upper half circle on which the signature is constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureArc {
    /// Isolating interval (in `z = 2 cos theta`) of the root where the arc
    /// starts; `None` for the arc starting at `theta = 0`.
    pub start: Option<RootInterval>,
    /// Root where the arc ends; `None` for the arc ending at `theta = pi`.
    pub end: Option<RootInterval>,
    /// Sample parameter: `omega(sample)` lies strictly inside the arc.
    pub sample: BigRational,
    pub value: i64,
}

impl SignatureArc {
    pub fn sample_point(&self) -> UnitCirclePoint {
        UnitCirclePoint::RationalParam(self.sample.clone())
    }
}

/// The signature as a step function on the upper half circle, `theta` in `(0, pi)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureProfile {
    /// Unit-circle roots of the Alexander polynomial, by increasing `theta`.
    pub jumps: Vec<RootInterval>,
    /// `jumps.len() + 1` arcs, by increasing `theta`.
    pub arcs: Vec<SignatureArc>,
    /// `Delta` in the variable `z = t + 1/t`; `None` when `Delta` is constant.
    pub z_polynomial: Option<crate::exactalg::IntPoly>,
}

impl SignatureProfile {
    pub fn max_abs(&self) -> i64 {
        self.arcs.iter().map(|a| a.value.abs()).max().unwrap_or(0)
    }

    pub fn values(&self) -> Vec<i64> {
        self.arcs.iter().map(|a| a.value).collect()
    }

    pub fn sturm(&self) -> Option<SturmSequence> {
        self.z_polynomial.as_ref().map(SturmSequence::new)
    }
}

/// All unit-circle roots of `Delta_V`, located exactly, and the signature on
/// every arc between them.
pub fn signature_profile(v: &SeifertMatrix) -> Result<SignatureProfile> {
    if !v.is_knot() {
        return Err(Error::MultiComponent(v.components()));
    }
    let two = BigRational::from_integer(2.into());
    let delta = v.alexander();
    let (jumps, zpoly, seq) = if delta.span() == 0 {
        (Vec::new(), None, None)
    } else {
        let q = delta.symmetrize_to_z()?;
        let seq = SturmSequence::new(&q);
        let mut roots = seq.isolate(&-two.clone(), &two);
        roots.reverse();
        (roots, Some(q), Some(seq))
    };
    let mut jumps = jumps;
    if let Some(seq) = &seq {
        // separate neighbours and keep every interval strictly inside (-2, 2)
        for iv in jumps.iter_mut() {
            while iv.hi >= two || iv.lo <= -two.clone() {
                iv.refine(seq);
            }
        }
        for k in 0..jumps.len().saturating_sub(1) {
            while jumps[k + 1].hi >= jumps[k].lo {
                jumps[k].refine(seq);
                jumps[k + 1].refine(seq);
            }
        }
    }
    let mut gaps = Vec::with_capacity(jumps.len() + 1);
    for k in 0..=jumps.len() {
        let hi = if k == 0 { two.clone() } else { jumps[k - 1].lo.clone() };
        let lo = if k == jumps.len() { -two.clone() } else { jumps[k].hi.clone() };
        gaps.push((lo, hi));
    }
    let arcs: Vec<SignatureArc> = gaps
        .par_iter()
        .enumerate()
        .map(|(k, (lo, hi))| {
            let sample = param_in_gap(lo, hi);
            let value = signature_unchecked(v.matrix(), &UnitCirclePoint::RationalParam(sample.clone()));
            SignatureArc {
                start: (k > 0).then(|| jumps[k - 1].clone()),
                end: (k < jumps.len()).then(|| jumps[k].clone()),
                sample,
                value,
            }
        })
        .collect();
    Ok(SignatureProfile { jumps, arcs, z_polynomial: zpoly })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::IntPoly;

    #[test]
    fn anchor_values() {
        let tre = SeifertMatrix::torus_2(3).unwrap();
        assert_eq!(signature_at(&tre, &UnitCirclePoint::MinusOne).unwrap(), -2);
        let fig = SeifertMatrix::figure_eight();
        assert_eq!(signature_at(&fig, &UnitCirclePoint::param(1, 1)).unwrap(), 0);
        assert_eq!(signature_at(&SeifertMatrix::unknot(), &UnitCirclePoint::param(3, 4)).unwrap(), 0);
        assert_eq!(signature_at(&tre, &UnitCirclePoint::one()), Err(Error::OmegaIsOne));
    }

    #[test]
    fn trefoil_profile() {
        let p = signature_profile(&SeifertMatrix::torus_2(3).unwrap()).unwrap();
        assert_eq!(p.values(), vec![0, -2]);
        assert_eq!(p.max_abs(), 2);
        assert_eq!(p.z_polynomial, Some(IntPoly::from_i64(&[-1, 1])));
    }

    #[test]
    fn figure_eight_profile() {
        let p = signature_profile(&SeifertMatrix::figure_eight()).unwrap();
        assert_eq!(p.values(), vec![0]);
    }

    #[test]
    fn torus_2_5_profile() {
        let p = signature_profile(&SeifertMatrix::torus_2(5).unwrap()).unwrap();
        assert_eq!(p.values(), vec![0, -2, -4]);
        assert_eq!(p.max_abs(), 4);
    }

    #[test]
    fn samples_lie_in_their_gaps() {
        let lo = BigRational::new(1.into(), 3.into());
        let hi = BigRational::new(3.into(), 8.into());
        let s = param_in_gap(&lo, &hi);
        let z = z_of_param(&s);
        assert!(lo < z && z < hi);
    }
}
