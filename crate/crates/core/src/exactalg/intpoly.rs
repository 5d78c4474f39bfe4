use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense univariate integer polynomial, coefficients stored low degree first.
/// The leading coefficient is nonzero unless the polynomial is zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// The monomial `c x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        IntPoly::new(coeffs)
    }

    pub fn x() -> Self {
        IntPoly::monomial(BigInt::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn derivative(&self) -> Self {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Positive gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the positive content; signs are preserved.
    pub fn primitive(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign of `p(x)` computed with integers only (homogenized evaluation).
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        let (num, den) = (x.numer(), x.denom());
        // sum c_k num^k den^(d-k); den > 0 so the sign is that of p(x)
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        acc.cmp(&BigInt::zero())
    }

    /// Exact quotient; `None` when `divisor` does not divide `self` over Z.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let (q, r) = self.div_rem_int(divisor)?;
        r.is_zero().then_some(q)
    }

    /// Division with remainder over Z; `None` if a leading-coefficient
    /// division is inexact.
    fn div_rem_int(&self, divisor: &IntPoly) -> Option<(IntPoly, IntPoly)> {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((IntPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        Some((IntPoly::new(quot), IntPoly::new(rem)))
    }

    /// Remainder of `self` by `divisor` up to a positive scalar:
    /// returns `c * rem(self, divisor)` for some rational `c > 0`, made primitive.
    pub fn positive_pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        let dd = divisor.degree().expect("division by zero polynomial");
        let Some(ds) = self.degree() else {
            return IntPoly::zero();
        };
        if ds < dd {
            return self.primitive();
        }
        let lc = divisor.leading().unwrap().abs();
        let scale = num_traits::pow(lc, ds - dd + 1);
        let (_, r) = self
            .scale(&scale)
            .div_rem_int(divisor)
            .expect("scaled pseudo-division is exact");
        r.primitive()
    }

    /// Sign variations in the coefficient sequence (zeros skipped).
    pub fn sign_variations(&self) -> usize {
        let mut last: Option<bool> = None;
        let mut count = 0;
        for c in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            let pos = c.is_positive();
            if last.is_some_and(|l| l != pos) {
                count += 1;
            }
            last = Some(pos);
        }
        count
    }

    /// Multiplicity of the root x = 0.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn display_in(&self, var: &str) -> String {
        format_terms(
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k as i64, c.clone())),
            var,
        )
    }
}

/// Formats `(exponent, coefficient)` terms, highest first, as `t^2 - t + 1`.
pub(crate) fn format_terms(terms: impl Iterator<Item = (i64, BigInt)>, var: &str) -> String {
    let mut out = String::new();
    for (e, c) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let body = match e {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{e}"),
        };
        if body.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&body);
        } else {
            out.push_str(&format!("{mag}{body}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
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

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn arithmetic_and_trim() {
        let a = IntPoly::from_i64(&[-1, 1]);
        let b = IntPoly::from_i64(&[1, 1]);
        assert_eq!(&a * &b, IntPoly::from_i64(&[-1, 0, 1]));
        assert_eq!(&a - &a, IntPoly::zero());
        assert_eq!(IntPoly::from_i64(&[1, 0, 0]).degree(), Some(0));
    }

    #[test]
    fn exact_division() {
        let p = IntPoly::from_i64(&[-1, 0, 1]);
        let d = IntPoly::from_i64(&[1, 1]);
        assert_eq!(p.div_exact(&d), Some(IntPoly::from_i64(&[-1, 1])));
        assert_eq!(p.div_exact(&IntPoly::from_i64(&[1, 2])), None);
    }

    #[test]
    fn sign_at_rational() {
        let p = IntPoly::from_i64(&[-3, 0, 1]); // x^2 - 3
        assert_eq!(p.sign_at(&q(7, 4)), Ordering::Greater);
        assert_eq!(p.sign_at(&q(17, 10)), Ordering::Less);
        assert_eq!(p.sign_at(&q(-2, 1)), Ordering::Greater);
        assert_eq!(IntPoly::from_i64(&[-1, 1]).sign_at(&q(1, 1)), Ordering::Equal);
    }

    #[test]
    fn positive_pseudo_remainder_keeps_sign() {
        // rem(x^2 - 3, 2x - 1) = 1/4 - 3 = -11/4 < 0
        let r = IntPoly::from_i64(&[-3, 0, 1]).positive_pseudo_rem(&IntPoly::from_i64(&[-1, 2]));
        assert_eq!(r, IntPoly::from_i64(&[-1]));
        // rem(x^2 - 3, -2x + 1) is the same remainder
        let r = IntPoly::from_i64(&[-3, 0, 1]).positive_pseudo_rem(&IntPoly::from_i64(&[1, -2]));
        assert_eq!(r, IntPoly::from_i64(&[-1]));
    }

    #[test]
    fn display() {
        assert_eq!(IntPoly::from_i64(&[1, -1, 1]).display_in("t"), "t^2 - t + 1");
        assert_eq!(IntPoly::from_i64(&[-3, 0, 1]).display_in("z"), "z^2 - 3");
        assert_eq!(IntPoly::zero().display_in("z"), "0");
        assert_eq!(IntPoly::from_i64(&[0, -2]).display_in("z"), "-2z");
    }
}
