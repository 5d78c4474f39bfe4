use std::fmt;

use num_rational::Rational64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::{branched_cover_homology, signature_profile};
use crate::satellite::{satellite_certificate, satellite_matrix, Pattern};
use crate::seifert::{SeifertMatrix, TrivialBlockCertificate};

use super::search::{search_trivial_block, SearchBudget};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Invariant {
    #[serde(rename = "g4top")]
    G4Top,
    #[serde(rename = "gZ")]
    GZ,
    #[serde(rename = "galg")]
    GAlg,
    #[serde(rename = "g3")]
    G3,
}

impl Invariant {
    pub const ALL: [Invariant; 4] = [Invariant::G4Top, Invariant::GZ, Invariant::GAlg, Invariant::G3];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::G4Top => "g4top",
            Invariant::GZ => "gZ",
            Invariant::GAlg => "galg",
            Invariant::G3 => "g3",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lower,
    Upper,
}

/// Where a bound comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    Signature,
    DoubleCoverGenerators,
    AlexanderTrivial,
    AlexanderDegree,
    Certificate,
    SearchedCertificate,
    G3Hint,
    G3Surrogate,
    SatelliteCombination,
    UnknottedPattern,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProvenanceEntry {
    pub invariant: Invariant,
    pub side: Side,
    pub value: i64,
    pub source: Source,
    pub citation: String,
}

/// `lower <= g <= upper`; `upper = None` means no upper bound is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Interval {
    pub lower: i64,
    pub upper: Option<i64>,
}

impl Interval {
    pub fn is_exact(&self) -> bool {
        self.upper == Some(self.lower)
    }

    pub fn contains(&self, x: i64) -> bool {
        self.lower <= x && self.upper.is_none_or(|u| x <= u)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.upper {
            Some(u) => write!(f, "[{},{}]", self.lower, u),
            None => write!(f, "[{},inf)", self.lower),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusBounds {
    pub g4top: Interval,
    pub gz: Interval,
    pub galg: Interval,
    pub g3: Interval,
    pub provenance: Vec<ProvenanceEntry>,
    #[serde(skip)]
    pub certificate: TrivialBlockCertificate,
    pub max_abs_signature: i64,
}

impl GenusBounds {
    pub fn get(&self, inv: Invariant) -> Interval {
        match inv {
            Invariant::G4Top => self.g4top,
            Invariant::GZ => self.gz,
            Invariant::GAlg => self.galg,
            Invariant::G3 => self.g3,
        }
    }

    /// One line per invariant, `=` when the interval is a point and `<=` otherwise.
    pub fn summary(&self) -> Vec<String> {
        Invariant::ALL
            .iter()
            .map(|&inv| {
                let iv = self.get(inv);
                let name = inv.name();
                match iv.upper {
                    Some(u) if u == iv.lower => format!("{name} = {u}"),
                    Some(u) => format!("{} <= {name} <= {u}", iv.lower),
                    None => format!("{name} >= {}", iv.lower),
                }
            })
            .collect()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BoundsOptions {
    /// A known upper bound for the 3-genus; otherwise half the matrix size is used.
    pub g3_hint: Option<u64>,
    pub certificate: Option<TrivialBlockCertificate>,
    /// Runs [`search_trivial_block`] when set.
    pub search: Option<SearchBudget>,
}

/// `(m - 2n - r + 1)/2` for a verified certificate.
pub fn galg_upper(v: &SeifertMatrix, cert: &TrivialBlockCertificate) -> Result<Rational64> {
    cert.verify(v)?;
    Ok(Rational64::new(cert.twice_bound(v), 2))
}

struct Collector {
    entries: Vec<ProvenanceEntry>,
}

impl Collector {
    fn push(&mut self, invariant: Invariant, side: Side, value: i64, source: Source, citation: &str) {
        self.entries.push(ProvenanceEntry { invariant, side, value, source, citation: citation.into() });
    }

    fn lower(&self, inv: Invariant) -> i64 {
        self.entries
            .iter()
            .filter(|e| e.invariant == inv && e.side == Side::Lower)
            .map(|e| e.value)
            .max()
            .unwrap_or(0)
    }

    fn upper(&self, inv: Invariant) -> Option<i64> {
        self.entries.iter().filter(|e| e.invariant == inv && e.side == Side::Upper).map(|e| e.value).min()
    }
}

fn better(a: TrivialBlockCertificate, b: TrivialBlockCertificate) -> TrivialBlockCertificate {
    if b.block_size > a.block_size {
        b
    } else {
        a
    }
}

fn collect(v: &SeifertMatrix, options: &BoundsOptions, col: &mut Collector) -> Result<(TrivialBlockCertificate, i64)> {
    if !v.is_knot() {
        return Err(Error::MultiComponent(v.components()));
    }
    v.validate()?;
    let m = v.size();
    let delta = v.alexander();
    let half_degree = (delta.span() / 2) as i64;

    let (profile, (h2, searched)) = rayon::join(
        || signature_profile(v),
        || rayon::join(|| branched_cover_homology(v, 2), || options.search.map(|b| search_trivial_block(v, &b))),
    );
    let (profile, h2) = (profile?, h2?);
    let max_sig = profile.max_abs();

    use Invariant::*;
    use Side::*;
    col.push(G4Top, Lower, max_sig / 2, Source::Signature, "|sigma_omega(K)| <= 2 g4top(K) at every regular omega");
    let gens = h2.min_generators() as i64;
    col.push(
        GZ,
        Lower,
        (gens + 1) / 2,
        Source::DoubleCoverGenerators,
        "half the minimal number of generators of H_1 of the double branched cover bounds g_Z from below",
    );
    if delta.is_one() {
        col.push(GZ, Upper, 0, Source::AlexanderTrivial, "Freedman: g_Z(K) = 0 if and only if Delta_K(t) = 1");
    } else {
        col.push(GZ, Lower, 1, Source::AlexanderTrivial, "Freedman: g_Z(K) = 0 if and only if Delta_K(t) = 1");
    }
    col.push(GZ, Upper, half_degree, Source::AlexanderDegree, "2 g_Z(K) <= deg Delta_K(t)");
    col.push(G3, Lower, half_degree, Source::AlexanderDegree, "deg Delta_K(t) <= 2 g_3(K)");

    let mut cert = TrivialBlockCertificate::empty(m);
    if let Some(c) = &options.certificate {
        c.verify(v)?;
        cert = c.clone();
        col.push(GAlg, Upper, c.twice_bound(v) / 2, Source::Certificate, "(m - 2n - r + 1)/2 for an Alexander-trivial 2n x 2n block");
    }
    if let Some(c) = searched {
        col.push(
            GAlg,
            Upper,
            c.twice_bound(v) / 2,
            Source::SearchedCertificate,
            "(m - 2n - r + 1)/2 for a block found by bounded congruence search",
        );
        cert = better(cert, c);
    }
    match options.g3_hint {
        Some(h) => col.push(G3, Upper, h as i64, Source::G3Hint, "user-supplied 3-genus"),
        None => col.push(G3, Upper, (m / 2) as i64, Source::G3Surrogate, "genus of the surface carrying the Seifert matrix"),
    }
    Ok((cert, max_sig))
}

fn finish(col: Collector, cert: TrivialBlockCertificate, max_sig: i64) -> Result<GenusBounds> {
    use Invariant::*;
    // g4top <= g_Z = g_alg <= g_3 for knots
    let lower_z = col.lower(GZ).max(col.lower(GAlg)).max(col.lower(G4Top));
    let lower_3 = col.lower(G3).max(lower_z);
    let min = |a: Option<i64>, b: Option<i64>| match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    };
    let upper_3 = col.upper(G3);
    let upper_z = min(min(col.upper(GZ), col.upper(GAlg)), upper_3);
    let upper_4 = min(col.upper(G4Top), upper_z);
    let bounds = GenusBounds {
        g4top: Interval { lower: col.lower(G4Top), upper: upper_4 },
        gz: Interval { lower: lower_z, upper: upper_z },
        galg: Interval { lower: lower_z, upper: upper_z },
        g3: Interval { lower: lower_3, upper: upper_3 },
        provenance: col.entries,
        certificate: cert,
        max_abs_signature: max_sig,
    };
    for inv in Invariant::ALL {
        let iv = bounds.get(inv);
        if let Some(u) = iv.upper {
            if iv.lower > u {
                return Err(Error::InconsistentBounds { invariant: inv.name().into(), lower: iv.lower, upper: u });
            }
        }
    }
    Ok(bounds)
}

/// Intervals for `g4top`, `g_Z`, `g_alg` and `g_3` of a knot, from signatures,
/// the double branched cover, the Alexander polynomial and certificates.
pub fn bounds_report(v: &SeifertMatrix, options: &BoundsOptions) -> Result<GenusBounds> {
    let mut col = Collector { entries: Vec::new() };
    let (cert, max_sig) = collect(v, options, &mut col)?;
    finish(col, cert, max_sig)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SatelliteBoundsOptions {
    pub companion_g3_hint: Option<u64>,
    pub search: Option<SearchBudget>,
}

/// [`bounds_report`] for `P(K)` using the assembled satellite certificate,
/// plus `g_Z(P(K)) <= g_Z(P(U)) + min(|w|, 1) g_Z(K)` and, when
/// `Delta_{P(U)} = 1`, `g4top(P(K)) <= g_3(K)`.
pub fn satellite_bounds(
    p: &Pattern,
    k: &SeifertMatrix,
    cert_k: &TrivialBlockCertificate,
    options: &SatelliteBoundsOptions,
) -> Result<(SeifertMatrix, GenusBounds)> {
    let cert = satellite_certificate(p, k, cert_k)?;
    let sat = satellite_matrix(p, k)?;
    let opts = BoundsOptions { g3_hint: None, certificate: Some(cert), search: options.search };
    let mut col = Collector { entries: Vec::new() };
    let (best, max_sig) = collect(&sat, &opts, &mut col)?;

    let cert_p = p.certificate().ok_or(Error::MissingCertificate)?;
    let g1 = cert_p.twice_bound(p.matrix()) / 2;
    let g2 = cert_k.twice_bound(k) / 2;
    let w = p.winding().min(1) as i64;
    col.push(
        Invariant::GZ,
        Side::Upper,
        g1 + w * g2,
        Source::SatelliteCombination,
        "g_Z(P(K)) <= g_alg(P(U)) + min(|w|, 1) g_alg(K)",
    );
    if p.matrix().alexander().is_one() {
        let g3k = options.companion_g3_hint.map_or((k.size() / 2) as i64, |h| h as i64);
        col.push(
            Invariant::G4Top,
            Side::Upper,
            g3k,
            Source::UnknottedPattern,
            "g4top(P(K)) <= g_3(K) when Delta_{P(U)} = 1",
        );
    }
    Ok((sat, finish(col, best, max_sig)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(l: i64, u: i64) -> Interval {
        Interval { lower: l, upper: Some(u) }
    }

    #[test]
    fn basic_knots() {
        let b = bounds_report(&SeifertMatrix::torus_2(3).unwrap(), &BoundsOptions::default()).unwrap();
        assert_eq!((b.g4top, b.gz), (iv(1, 1), iv(1, 1)));
        let b = bounds_report(&SeifertMatrix::figure_eight(), &BoundsOptions::default()).unwrap();
        assert_eq!((b.g4top, b.gz), (iv(0, 1), iv(1, 1)));
        let b = bounds_report(&SeifertMatrix::unknot(), &BoundsOptions::default()).unwrap();
        for inv in Invariant::ALL {
            assert_eq!(b.get(inv), iv(0, 0));
        }
        let b = bounds_report(&SeifertMatrix::stabilized_unknot(), &BoundsOptions::default()).unwrap();
        assert_eq!(b.gz, iv(0, 0));
    }

    #[test]
    fn galg_examples() {
        let tre = SeifertMatrix::torus_2(3).unwrap();
        assert_eq!(galg_upper(&tre, &TrivialBlockCertificate::empty(2)).unwrap(), Rational64::from(1));
        let st = SeifertMatrix::stabilized_unknot();
        assert_eq!(galg_upper(&st, &TrivialBlockCertificate::leading(2, 2)).unwrap(), Rational64::from(0));
        assert!(galg_upper(&tre, &TrivialBlockCertificate::leading(2, 2)).is_err());
    }

    #[test]
    fn cables_of_trefoil() {
        let tre = SeifertMatrix::torus_2(3).unwrap();
        for w in 1..=5 {
            let (_, b) =
                satellite_bounds(&Pattern::cable(w), &tre, &TrivialBlockCertificate::empty(2), &Default::default())
                    .unwrap();
            assert_eq!(b.g4top, iv(1, 1), "w={w}");
        }
    }

    #[test]
    fn trefoil_sum_with_its_inverse() {
        let tre = SeifertMatrix::torus_2(3).unwrap();
        let p = Pattern::new(tre.clone(), 1, Some(TrivialBlockCertificate::empty(2))).unwrap();
        let k = tre.mirror_reverse();
        let (_, b) = satellite_bounds(&p, &k, &TrivialBlockCertificate::empty(2), &Default::default()).unwrap();
        assert_eq!(b.g4top, iv(0, 2));
        assert!(b.provenance.iter().any(|e| e.source == Source::SatelliteCombination && e.value == 2));
    }

    #[test]
    fn cable_of_figure_eight() {
        let fig = SeifertMatrix::figure_eight();
        let (sat, b) =
            satellite_bounds(&Pattern::cable(2), &fig, &TrivialBlockCertificate::empty(2), &Default::default()).unwrap();
        assert_eq!(sat.alexander().to_string(), "t^4 - 3t^2 + 1");
        assert_eq!((b.g4top, b.gz), (iv(0, 1), iv(1, 1)));
    }
}
