use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::UnitCirclePoint;
use crate::satellite::{satellite_matrix, Pattern};
use crate::seifert::{AbelianGroup, SeifertMatrix};

use super::homology::branched_cover_homology;
use super::signature::signature_unchecked;

/// Both sides of `sigma_omega(P(K)) = sigma_omega(P(U)) + sigma_{omega^w}(K)` at one sample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignatureSample {
    pub omega: UnitCirclePoint,
    pub omega_w: UnitCirclePoint,
    pub satellite: i64,
    pub pattern: i64,
    pub companion: i64,
}

impl SignatureSample {
    pub fn holds(&self) -> bool {
        self.satellite == self.pattern + self.companion
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LitherlandSignatureReport {
    pub checked: Vec<SignatureSample>,
    /// Samples at which one of the three Alexander polynomials vanishes.
    pub skipped: Vec<UnitCirclePoint>,
}

impl LitherlandSignatureReport {
    pub fn passed(&self) -> bool {
        self.checked.iter().all(SignatureSample::holds)
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &SignatureSample> {
        self.checked.iter().filter(|s| !s.holds())
    }
}

fn require_knot(v: &SeifertMatrix) -> Result<()> {
    if v.is_knot() {
        Ok(())
    } else {
        Err(Error::MultiComponent(v.components()))
    }
}

/// Compares the satellite signature with the pattern and companion
/// signatures at every regular sample. `sigma` at `omega^w = 1` is zero.
pub fn litherland_signature_check(
    p: &Pattern,
    k: &SeifertMatrix,
    samples: &[UnitCirclePoint],
) -> Result<LitherlandSignatureReport> {
    require_knot(p.matrix())?;
    require_knot(k)?;
    let sat = satellite_matrix(p, k)?;
    let (d_sat, d_p, d_k) = (sat.alexander(), p.matrix().alexander(), k.alexander());
    let mut report = LitherlandSignatureReport { checked: Vec::new(), skipped: Vec::new() };
    for omega in samples {
        if omega.is_one() {
            return Err(Error::OmegaIsOne);
        }
        let omega_w = omega.pow(p.winding());
        let irregular = d_sat.eval_gaussian(omega).is_zero()
            || d_p.eval_gaussian(omega).is_zero()
            || (!omega_w.is_one() && d_k.eval_gaussian(&omega_w).is_zero());
        if irregular {
            report.skipped.push(omega.clone());
            continue;
        }
        let companion = if omega_w.is_one() { 0 } else { signature_unchecked(k.matrix(), &omega_w) };
        report.checked.push(SignatureSample {
            omega: omega.clone(),
            satellite: signature_unchecked(sat.matrix(), omega),
            pattern: signature_unchecked(p.matrix().matrix(), omega),
            companion,
            omega_w,
        });
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LitherlandHomologyReport {
    pub n: u64,
    /// `gcd(w, n)`.
    pub d: u64,
    pub satellite: AbelianGroup,
    /// `H_1(Sigma_n(P(U)))` plus `d` copies of `H_1(Sigma_{n/d}(K))`.
    pub expected: AbelianGroup,
}

impl LitherlandHomologyReport {
    pub fn passed(&self) -> bool {
        self.satellite == self.expected
    }
}

fn is_prime_power(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let p = (2..=n).find(|q| n % q == 0).unwrap();
    let mut m = n;
    while m % p == 0 {
        m /= p;
    }
    m == 1
}

/// Compares `H_1(Sigma_n(P(K)))` with the direct sum predicted from the pattern
/// and companion, as abstract groups. `n` must be a prime power.
pub fn litherland_homology_check(p: &Pattern, k: &SeifertMatrix, n: u64) -> Result<LitherlandHomologyReport> {
    if !is_prime_power(n) {
        return Err(Error::InvalidParameter(format!("{n} is not a prime power")));
    }
    require_knot(p.matrix())?;
    require_knot(k)?;
    let sat = satellite_matrix(p, k)?;
    let d = p.winding().gcd(&n);
    let mut expected = branched_cover_homology(p.matrix(), n)?;
    if d > 0 && n / d >= 2 {
        let hk = branched_cover_homology(k, n / d)?;
        for _ in 0..d {
            expected = expected.direct_sum(&hk);
        }
    }
    Ok(LitherlandHomologyReport { n, d, satellite: branched_cover_homology(&sat, n)?, expected })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tre() -> SeifertMatrix {
        SeifertMatrix::torus_2(3).unwrap()
    }

    #[test]
    fn cable_signatures() {
        let samples: Vec<_> = [(1, 5), (1, 2), (2, 1), (3, 1), (7, 2)]
            .iter()
            .map(|&(a, b)| UnitCirclePoint::param(a, b))
            .chain([UnitCirclePoint::MinusOne])
            .collect();
        for w in 0..4 {
            let r = litherland_signature_check(&Pattern::cable(w), &tre(), &samples).unwrap();
            assert!(r.passed(), "w={w}: {:?}", r.counterexamples().collect::<Vec<_>>());
            assert_eq!(r.checked.len() + r.skipped.len(), samples.len());
        }
    }

    #[test]
    fn cable_homology() {
        let r = litherland_homology_check(&Pattern::cable(2), &tre(), 2).unwrap();
        assert_eq!(r.d, 2);
        assert!(r.passed() && r.satellite.is_trivial());
        let r = litherland_homology_check(&Pattern::cable(2), &tre(), 3).unwrap();
        assert_eq!(r.d, 1);
        assert!(r.passed());
        assert_eq!(r.satellite.order(), Some(4.into()));
        assert!(litherland_homology_check(&Pattern::cable(2), &tre(), 6).is_err());
        assert!(is_prime_power(8) && is_prime_power(9) && !is_prime_power(12));
    }
}
