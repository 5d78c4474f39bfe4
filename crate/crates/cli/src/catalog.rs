//! Built-in knots, patterns and satellites; `SATGENUS_CATALOG_DIR` replaces
//! them with the JSON files of a directory.

use std::path::PathBuf;

use num_bigint::BigInt;

use satgenus::satellite::{satellite_certificate, satellite_matrix};
use satgenus::seifert::StabilizationKind;
use satgenus::{IntMatrix, Pattern, SeifertMatrix, TrivialBlockCertificate};

use crate::formats::{self, matrix_to_rows, AnyFile, FileError, Knot, KnotFile, PatternFile};

pub const CATALOG_ENV: &str = "SATGENUS_CATALOG_DIR";

fn knot(name: &str, v: &SeifertMatrix, block: Option<usize>, g3: Option<u64>) -> AnyFile {
    let mut f = KnotFile::from_matrix(name, v, block).expect("catalog entries are small");
    f.g3_hint = g3;
    AnyFile::Knot(f)
}

fn pattern(name: &str, v: &SeifertMatrix, w: i64) -> AnyFile {
    AnyFile::Pattern(PatternFile {
        name: name.into(),
        winding: w,
        components: v.components(),
        pattern_matrix: matrix_to_rows(v.matrix()).unwrap(),
        trivial_block_size: Some(0),
    })
}

/// The matrix `U V U^T` of a certificate, whose leading block is trivial.
fn certified(v: &SeifertMatrix, cert: &TrivialBlockCertificate) -> SeifertMatrix {
    v.congruence(&cert.basis_change).expect("certificate basis change is unimodular")
}

/// A stabilization with the new pair moved to the front, where it is a trivial block.
fn stabilized_front(v: &SeifertMatrix) -> SeifertMatrix {
    let m = v.size();
    let zero = BigInt::from(0);
    let s = v.stabilize(&vec![zero.clone(); m], &zero, StabilizationKind::Upper).unwrap();
    let order: Vec<usize> = (m..m + 2).chain(0..m).collect();
    s.congruence(&IntMatrix::permutation(&order)).unwrap()
}

fn satellite_entry(name: &str, p: &Pattern, k: &SeifertMatrix, g3: u64) -> AnyFile {
    let cert = satellite_certificate(p, k, &TrivialBlockCertificate::empty(k.size())).unwrap();
    let sat = satellite_matrix(p, k).unwrap();
    knot(name, &certified(&sat, &cert), Some(cert.block_size), Some(g3))
}

pub fn builtin() -> Vec<AnyFile> {
    let mut out = Vec::new();
    let tre = SeifertMatrix::torus_2(3).unwrap();
    let fig = SeifertMatrix::figure_eight();
    out.push(knot("unknot", &SeifertMatrix::unknot(), None, Some(0)));
    out.push(knot("trefoil", &tre, None, Some(1)));
    for n in (3..=11).step_by(2) {
        out.push(knot(&format!("t2_{n}"), &SeifertMatrix::torus_2(n).unwrap(), None, Some(((n - 1) / 2) as u64)));
    }
    out.push(knot("figure8", &fig, None, Some(1)));
    out.push(knot("trefoil_mirror_reverse", &tre.mirror_reverse(), None, Some(1)));
    out.push(knot("stabilized_unknot", &SeifertMatrix::stabilized_unknot(), Some(2), None));
    out.push(knot("stabilized_trefoil", &stabilized_front(&tre), Some(2), Some(1)));
    out.push(knot("stabilized_figure8", &stabilized_front(&fig), Some(2), Some(1)));
    let lower = fig
        .stabilize(&[BigInt::from(1), BigInt::from(0)], &BigInt::from(1), StabilizationKind::Lower)
        .unwrap();
    out.push(knot("stabilized_figure8_lower", &lower, None, Some(1)));
    for w in 1..=5u64 {
        out.push(pattern(&format!("c{w}1"), &SeifertMatrix::unknot(), w as i64));
    }
    for q in (3..=11).step_by(2) {
        out.push(pattern(&format!("c2_{q}"), &SeifertMatrix::torus_2(q).unwrap(), 2));
    }
    out.push(pattern("trefoil_w1", &tre, 1));
    for n in 1..=5u64 {
        out.push(satellite_entry(&format!("c{n}1_trefoil"), &Pattern::cable(n), &tre, n));
    }
    out.push(satellite_entry("c21_figure8", &Pattern::cable(2), &fig, 2));
    for q in [3u32, 5, 7] {
        let p = Pattern::new(SeifertMatrix::torus_2(q).unwrap(), 2, Some(TrivialBlockCertificate::empty(q as usize - 1)))
            .unwrap();
        out.push(satellite_entry(&format!("c2_{q}_trefoil"), &p, &tre, ((q - 1) / 2 + 2) as u64));
    }
    out
}

/// The active catalog, sorted by name when read from a directory.
pub fn entries() -> Result<Vec<AnyFile>, FileError> {
    let Some(dir) = std::env::var_os(CATALOG_ENV) else {
        return Ok(builtin());
    };
    let dir = PathBuf::from(dir);
    let read = std::fs::read_dir(&dir)
        .map_err(|e| FileError::Io { path: dir.display().to_string(), message: e.to_string() })?;
    let mut paths: Vec<PathBuf> = read
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths.iter().map(|p| formats::load(p)).collect()
}

pub fn lookup(name: &str) -> Result<Option<AnyFile>, FileError> {
    let name = name.strip_suffix(".json").unwrap_or(name);
    Ok(entries()?.into_iter().find(|f| f.name() == name))
}

/// All knot entries, validated.
pub fn knots() -> Result<Vec<Knot>, FileError> {
    entries()?
        .into_iter()
        .filter_map(|f| match f {
            AnyFile::Knot(k) => Some(k.validate()),
            AnyFile::Pattern(_) => None,
        })
        .collect()
}

/// All pattern entries, validated.
pub fn patterns() -> Result<Vec<(String, Pattern)>, FileError> {
    entries()?
        .into_iter()
        .filter_map(|f| match f {
            AnyFile::Pattern(p) => Some(p.validate().map(|(pat, _)| (p.name.clone(), pat))),
            AnyFile::Knot(_) => None,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_entries_validate_and_round_trip() {
        for f in builtin() {
            let text = f.to_json();
            assert_eq!(formats::parse(&text).unwrap(), f, "{}", f.name());
        }
        let AnyFile::Knot(t) = builtin().into_iter().find(|f| f.name() == "trefoil").unwrap() else { panic!() };
        assert_eq!(t.seifert_matrix, vec![vec![-1, 1], vec![0, -1]]);
    }
}
