//! Sturm-sequence counting and isolation of real roots.

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{One, Signed};

use super::intpoly::IntPoly;

/// Half-open interval `(lo, hi]` containing exactly one real root.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    /// Halves the interval, keeping the root inside.
    pub fn refine(&mut self, seq: &SturmSequence) {
        let mid = self.midpoint();
        if seq.count(&self.lo, &mid) == 1 {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    /// Refines until the width is at most `eps`.
    pub fn refine_to(&mut self, seq: &SturmSequence, eps: &BigRational) {
        while self.width() > *eps {
            self.refine(seq);
        }
    }
}

/// The Sturm chain `q, q', -rem(q, q'), ...`, each term kept primitive.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    chain: Vec<IntPoly>,
}

impl SturmSequence {
    /// Chain of the squarefree part of `q`, so that endpoint roots of any
    /// multiplicity are counted correctly.
    pub fn new(q: &IntPoly) -> Self {
        assert!(!q.is_zero(), "Sturm sequence of the zero polynomial");
        let chain = Self::raw_chain(&q.primitive());
        let g = chain.last().unwrap();
        if g.degree().unwrap_or(0) == 0 {
            return SturmSequence { chain };
        }
        let sf = q.primitive().div_exact(&g.primitive()).expect("gcd divides q");
        SturmSequence { chain: Self::raw_chain(&sf) }
    }

    fn raw_chain(q: &IntPoly) -> Vec<IntPoly> {
        let mut chain = vec![q.clone()];
        let d = q.derivative();
        if !d.is_zero() {
            chain.push(d.primitive());
            loop {
                let n = chain.len();
                let r = chain[n - 2].positive_pseudo_rem(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push(-&r);
            }
        }
        chain
    }

    pub fn polynomial(&self) -> &IntPoly {
        &self.chain[0]
    }

    fn variations_at(&self, x: &BigRational) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct real roots in `(a, b]`.
    pub fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        if a >= b {
            return 0;
        }
        self.variations_at(a) - self.variations_at(b)
    }

    /// Isolating intervals for the roots in `(a, b]`, in increasing order.
    pub fn isolate(&self, a: &BigRational, b: &BigRational) -> Vec<RootInterval> {
        let mut out = Vec::new();
        let mut stack = vec![(a.clone(), b.clone(), self.count(a, b))];
        while let Some((lo, hi, n)) = stack.pop() {
            match n {
                0 => {}
                1 => out.push(RootInterval { lo, hi }),
                _ => {
                    let mid = (&lo + &hi) / BigRational::from_integer(2.into());
                    let left = self.count(&lo, &mid);
                    stack.push((mid.clone(), hi, n - left));
                    stack.push((lo, mid, left));
                }
            }
        }
        out.sort_by(|x, y| x.lo.cmp(&y.lo));
        out
    }
}

/// Number of distinct real roots of `q` in `(a, b]`.
pub fn count_real_roots(q: &IntPoly, a: &BigRational, b: &BigRational) -> usize {
    if q.degree().unwrap_or(0) == 0 {
        return 0;
    }
    SturmSequence::new(q).count(a, b)
}

/// Disjoint isolating intervals for the distinct real roots of `q` in `(a, b]`.
pub fn isolate_real_roots(q: &IntPoly, a: &BigRational, b: &BigRational) -> Vec<RootInterval> {
    if q.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    SturmSequence::new(q).isolate(a, b)
}

/// Cauchy bound: every real root of `q` lies in `(-B, B)`.
pub fn root_bound(q: &IntPoly) -> BigRational {
    let Some(lc) = q.leading() else {
        return BigRational::one();
    };
    let max = q.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default();
    BigRational::one() + BigRational::new(max, lc.abs())
}

/// Positive and negative real root counts of a real-rooted polynomial, with
/// the multiplicity of zero (Descartes' rule is exact in this case).
pub fn real_rooted_sign_counts(q: &IntPoly) -> (usize, usize, usize) {
    let zeros = q.zero_root_multiplicity();
    (q.sign_variations(), q.reflect().sign_variations(), zeros)
}

#[cfg(test)]
fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_examples() {
        let (a, b) = (rat(-2, 1), rat(2, 1));
        assert_eq!(count_real_roots(&IntPoly::from_i64(&[-1, 1]), &a, &b), 1);
        assert_eq!(count_real_roots(&IntPoly::from_i64(&[-3, 1]), &a, &b), 0);
        assert_eq!(count_real_roots(&IntPoly::from_i64(&[-3, 0, 1]), &a, &b), 2);
    }

    #[test]
    fn endpoint_roots_are_half_open() {
        // (x-1)^2 (x+1)
        let q = &(&IntPoly::from_i64(&[-1, 1]) * &IntPoly::from_i64(&[-1, 1])) * &IntPoly::from_i64(&[1, 1]);
        assert_eq!(count_real_roots(&q, &rat(-1, 1), &rat(1, 1)), 1);
        assert_eq!(count_real_roots(&q, &rat(-2, 1), &rat(1, 1)), 2);
        assert_eq!(count_real_roots(&q, &rat(1, 1), &rat(3, 1)), 0);
    }

    #[test]
    fn isolation_separates_close_roots() {
        // (100x - 1)(100x - 2)(x + 5)
        let q = &(&IntPoly::from_i64(&[-1, 100]) * &IntPoly::from_i64(&[-2, 100])) * &IntPoly::from_i64(&[5, 1]);
        let b = root_bound(&q);
        let ivs = isolate_real_roots(&q, &-b.clone(), &b);
        assert_eq!(ivs.len(), 3);
        let seq = SturmSequence::new(&q);
        for mut iv in ivs {
            iv.refine_to(&seq, &rat(1, 1000));
            assert_eq!(seq.count(&iv.lo, &iv.hi), 1);
        }
    }

    #[test]
    fn descartes_on_real_rooted() {
        // x (x - 1)(x - 3)(x + 2)
        let q = &(&IntPoly::from_i64(&[0, 1]) * &IntPoly::from_i64(&[-1, 1]))
            * &(&IntPoly::from_i64(&[-3, 1]) * &IntPoly::from_i64(&[2, 1]));
        assert_eq!(real_rooted_sign_counts(&q), (2, 1, 1));
    }
}
