use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Gaussian rational `re + i im`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GaussQ {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussQ {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussQ { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        GaussQ { re, im: BigRational::zero() }
    }

    pub fn from_int(c: &BigInt) -> Self {
        GaussQ::real(BigRational::from_integer(c.clone()))
    }

    pub fn zero() -> Self {
        GaussQ::default()
    }

    pub fn one() -> Self {
        GaussQ::real(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussQ::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = GaussQ::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl Add for &GaussQ {
    type Output = GaussQ;
    fn add(self, rhs: &GaussQ) -> GaussQ {
        GaussQ::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussQ {
    type Output = GaussQ;
    fn sub(self, rhs: &GaussQ) -> GaussQ {
        GaussQ::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussQ {
    type Output = GaussQ;
    fn mul(self, rhs: &GaussQ) -> GaussQ {
        GaussQ::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussQ {
    type Output = GaussQ;
    fn neg(self) -> GaussQ {
        GaussQ::new(-self.re.clone(), -self.im.clone())
    }
}

impl fmt::Display for GaussQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{} - {}i", self.re, -self.im.clone())
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}

/// A point on the unit circle with Gaussian-rational coordinates.
///
/// `RationalParam(s)` is `((1 - s^2) + 2si) / (1 + s^2)`, the tangent
/// half-angle parametrization (`s = tan(theta / 2)`); `MinusOne` is the point
/// at `s = infinity`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum UnitCirclePoint {
    RationalParam(BigRational),
    MinusOne,
}

impl UnitCirclePoint {
    pub fn param(num: i64, den: i64) -> Self {
        UnitCirclePoint::RationalParam(BigRational::new(num.into(), den.into()))
    }

    pub fn one() -> Self {
        UnitCirclePoint::RationalParam(BigRational::zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, UnitCirclePoint::RationalParam(s) if s.is_zero())
    }

    pub fn to_gauss(&self) -> GaussQ {
        match self {
            UnitCirclePoint::MinusOne => GaussQ::real(-BigRational::one()),
            UnitCirclePoint::RationalParam(s) => {
                let s2 = s * s;
                let den = BigRational::one() + &s2;
                let two = BigRational::from_integer(2.into());
                GaussQ::new((BigRational::one() - &s2) / &den, two * s / den)
            }
        }
    }

    /// Inverse of [`UnitCirclePoint::to_gauss`]: `x + iy` with `x != -1` is
    /// `omega(y / (1 + x))`. Returns `None` off the unit circle.
    pub fn from_gauss(z: &GaussQ) -> Option<Self> {
        if z.norm_sqr() != BigRational::one() {
            return None;
        }
        let one = BigRational::one();
        if z.re == -one.clone() {
            return Some(UnitCirclePoint::MinusOne);
        }
        Some(UnitCirclePoint::RationalParam(&z.im / (one + &z.re)))
    }

    pub fn pow(&self, k: u64) -> Self {
        UnitCirclePoint::from_gauss(&self.to_gauss().pow(k)).expect("powers stay on the unit circle")
    }

    /// `z = omega + omega^{-1} = 2 Re(omega)`, which lies in `[-2, 2]`.
    pub fn z_value(&self) -> BigRational {
        &self.to_gauss().re * BigRational::from_integer(2.into())
    }

    /// True when `Im(omega) >= 0`, i.e. the point lies on the upper half circle.
    pub fn in_upper_half(&self) -> bool {
        match self {
            UnitCirclePoint::MinusOne => true,
            UnitCirclePoint::RationalParam(s) => !s.is_negative(),
        }
    }
}

impl fmt::Display for UnitCirclePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnitCirclePoint::MinusOne => write!(f, "-1"),
            UnitCirclePoint::RationalParam(s) => write!(f, "s={s}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anchor_points() {
        assert_eq!(UnitCirclePoint::one().to_gauss(), GaussQ::one());
        let i = UnitCirclePoint::param(1, 1).to_gauss();
        assert_eq!(i, GaussQ::new(BigRational::zero(), BigRational::one()));
        assert_eq!(UnitCirclePoint::param(1, 1).pow(2), UnitCirclePoint::MinusOne);
        assert!(UnitCirclePoint::param(1, 1).pow(4).is_one());
    }

    #[test]
    fn param_round_trip() {
        for (n, d) in [(1, 2), (-3, 7), (5, 1), (2, 9)] {
            let w = UnitCirclePoint::param(n, d);
            let g = w.to_gauss();
            assert_eq!(g.norm_sqr(), BigRational::one());
            assert_eq!(UnitCirclePoint::from_gauss(&g), Some(w));
        }
    }
}
