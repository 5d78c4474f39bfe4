use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gaussian::{GaussQ, UnitCirclePoint};
use super::intpoly::{format_terms, IntPoly};
use crate::error::{Error, Result};

/// Integer Laurent polynomial in `t`; no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(BigInt::one(), 0)
    }

    pub fn t() -> Self {
        LaurentPoly::monomial(BigInt::one(), 1)
    }

    pub fn monomial(c: BigInt, e: i64) -> Self {
        LaurentPoly::from_terms([(e, c)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut coeffs: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *coeffs.entry(e).or_default() += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs }
    }

    /// Coefficients listed from exponent `low` upwards.
    pub fn from_i64(low: i64, coeffs: &[i64]) -> Self {
        LaurentPoly::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| (low + k as i64, BigInt::from(c))),
        )
    }

    /// `t^shift * p(t)`.
    pub fn from_intpoly(p: &IntPoly, shift: i64) -> Self {
        LaurentPoly::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (k as i64 + shift, c.clone())),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == LaurentPoly::one()
    }

    pub fn min_deg(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_deg(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// `max_deg - min_deg`; zero for the zero polynomial.
    pub fn span(&self) -> u64 {
        match (self.min_deg(), self.max_deg()) {
            (Some(lo), Some(hi)) => (hi - lo) as u64,
            _ => 0,
        }
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    /// `p(t^{-1})`.
    pub fn reciprocal(&self) -> Self {
        LaurentPoly::from_terms(self.coeffs.iter().map(|(&e, c)| (-e, c.clone())))
    }

    /// `p(t^k)`; for `k = 0` the constant `p(1)`.
    pub fn power_substitute(&self, k: u64) -> Self {
        LaurentPoly::from_terms(self.coeffs.iter().map(|(&e, c)| (e * k as i64, c.clone())))
    }

    /// Exact evaluation at a point of the unit circle, where `t^{-1} = conj(t)`.
    pub fn eval_gaussian(&self, omega: &UnitCirclePoint) -> GaussQ {
        let w = omega.to_gauss();
        let w_inv = w.conj();
        let mut acc = GaussQ::zero();
        for (&e, c) in &self.coeffs {
            let base = if e >= 0 { &w } else { &w_inv };
            let term = &base.pow(e.unsigned_abs()) * &GaussQ::from_int(c);
            acc = &acc + &term;
        }
        acc
    }

    /// Value at a rational point; `None` at zero when negative powers occur.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        if x.is_zero() && self.min_deg().is_some_and(|e| e < 0) {
            return None;
        }
        let mut acc = BigRational::zero();
        for (&e, c) in &self.coeffs {
            let p = num_traits::pow::pow(x.clone(), e.unsigned_abs() as usize);
            let p = if e >= 0 { p } else { p.recip() };
            acc += BigRational::from_integer(c.clone()) * p;
        }
        Some(acc)
    }

    /// The unit multiple `±t^k p` with lowest exponent 0 and positive leading
    /// coefficient; the Alexander-polynomial normal form.
    pub fn normalize_alexander(&self) -> Self {
        let Some(lo) = self.min_deg() else {
            return LaurentPoly::zero();
        };
        let negate = self.coeffs.values().next_back().unwrap().is_negative();
        LaurentPoly::from_terms(
            self.coeffs
                .iter()
                .map(|(&e, c)| (e - lo, if negate { -c } else { c.clone() })),
        )
    }

    /// Ordinary polynomial for a polynomial with no negative exponents.
    pub fn to_intpoly(&self) -> Option<IntPoly> {
        if self.min_deg().is_some_and(|e| e < 0) {
            return None;
        }
        let n = self.max_deg().map_or(0, |e| e as usize + 1);
        let mut v = vec![BigInt::zero(); n];
        for (&e, c) in &self.coeffs {
            v[e as usize] = c.clone();
        }
        Some(IntPoly::new(v))
    }

    /// True when `p` and `t^span p(1/t)` agree after normalization.
    pub fn is_symmetric_up_to_units(&self) -> bool {
        self.normalize_alexander() == self.reciprocal().normalize_alexander()
    }

    /// Rewrites a symmetric polynomial of even span in the variable
    /// `z = t + t^{-1}`: returns `q` with `p(t) = u t^{c} q(t + t^{-1})` for the
    /// unit `u t^c` that centers `p`.
    pub fn symmetrize_to_z(&self) -> Result<IntPoly> {
        if self.is_zero() {
            return Err(Error::NotSymmetric("zero polynomial".into()));
        }
        let p = self.normalize_alexander();
        let span = p.span();
        if span % 2 == 1 {
            return Err(Error::NotSymmetric(format!("span {span} is odd")));
        }
        let d = (span / 2) as i64;
        for k in 0..=d {
            if p.coeff(d + k) != p.coeff(d - k) {
                return Err(Error::NotSymmetric(format!("{p} is not palindromic")));
            }
        }
        // t^k + t^{-k} = D_k(z):  D_0 = 2, D_1 = z, D_{k+1} = z D_k - D_{k-1}
        let z = IntPoly::x();
        let mut prev = IntPoly::constant(BigInt::from(2));
        let mut cur = z.clone();
        let mut q = IntPoly::constant(p.coeff(d));
        for k in 1..=d {
            q = &q + &cur.scale(&p.coeff(d + k));
            let next = &(&z * &cur) - &prev;
            prev = cur;
            cur = next;
        }
        Ok(q)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(
            self.coeffs.iter().rev().map(|(&e, c)| (e, c.clone())),
            "t",
        ))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.coeffs
                .iter()
                .chain(rhs.coeffs.iter())
                .map(|(&e, c)| (e, c.clone())),
        )
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::from_terms(self.coeffs.iter().map(|(&e, c)| (e, -c)))
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = Vec::with_capacity(self.coeffs.len() * rhs.coeffs.len());
        for (&a, ca) in &self.coeffs {
            for (&b, cb) in &rhs.coeffs {
                terms.push((a + b, ca * cb));
            }
        }
        LaurentPoly::from_terms(terms)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64(low, c)
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&lp(0, &[-1, 1]) * &lp(0, &[1, 1]), lp(0, &[-1, 0, 1]));
    }

    #[test]
    fn power_substitution_doubles_exponents() {
        assert_eq!(lp(0, &[1, -1, 1]).power_substitute(2), lp(0, &[1, 0, -1, 0, 1]));
    }

    #[test]
    fn gaussian_evaluation_at_i() {
        let v = lp(0, &[1, -3, 1]).eval_gaussian(&UnitCirclePoint::param(1, 1));
        assert_eq!(v, GaussQ::new(BigRational::zero(), BigRational::from_integer((-3).into())));
        // negative exponents use the conjugate
        let v = lp(-1, &[1, 0, 1]).eval_gaussian(&UnitCirclePoint::param(1, 1));
        assert!(v.is_zero());
    }

    #[test]
    fn normalization() {
        assert_eq!(lp(1, &[1, -1, 1]).normalize_alexander(), lp(0, &[1, -1, 1]));
        assert_eq!(lp(0, &[-1, 3, -1]).normalize_alexander(), lp(0, &[1, -3, 1]));
        assert_eq!(LaurentPoly::zero().normalize_alexander(), LaurentPoly::zero());
        assert_eq!(lp(-3, &[-2]).normalize_alexander(), lp(0, &[2]));
    }

    #[test]
    fn z_substitution() {
        assert_eq!(lp(0, &[1, -1, 1]).symmetrize_to_z().unwrap(), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(lp(0, &[1, -3, 1]).symmetrize_to_z().unwrap(), IntPoly::from_i64(&[-3, 1]));
        assert_eq!(
            lp(0, &[1, 0, -1, 0, 1]).symmetrize_to_z().unwrap(),
            IntPoly::from_i64(&[-3, 0, 1])
        );
        assert!(matches!(lp(0, &[1, 1]).symmetrize_to_z(), Err(Error::NotSymmetric(_))));
        assert!(matches!(lp(0, &[1, 2, 3]).symmetrize_to_z(), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn display() {
        assert_eq!(lp(0, &[1, -1, 1]).to_string(), "t^2 - t + 1");
        assert_eq!(lp(-1, &[2, 0, -1]).to_string(), "-t + 2t^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }
}
