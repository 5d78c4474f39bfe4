//! The command-line surface.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use thiserror::Error;

use satgenus::bounds::{
    bounds_report, cable2q_table, iterated_cable_arithmetic, BoundsOptions, GenusBounds, SearchBudget, Side,
};
use satgenus::exactalg::RootInterval;
use satgenus::invariants::{branched_cover_homology, homology_order_oracle, signature_at, signature_profile};
use satgenus::satellite::{cable_matrix, satellite_certificate, satellite_matrix};
use satgenus::{Error as CoreError, Pattern, UnitCirclePoint};

use crate::catalog;
use crate::formats::{self, AnyFile, FileError, Knot, KnotFile};
use crate::verify;

#[derive(Debug, Parser)]
#[command(name = "satgenus", version, about = "Exact genus bounds for satellite knots from Seifert matrices")]
pub struct Cli {
    /// Emit a machine-readable JSON report instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normalized Alexander polynomial.
    Alexander { knot: String },
    /// Tristram-Levine signature at a point or on the whole circle.
    Signature {
        knot: String,
        /// `s=p/q` for omega(s) = (1 + is)/(1 - is), or `-1`.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "profile")]
        at: Option<String>,
        #[arg(long)]
        profile: bool,
    },
    /// First homology of the n-fold cyclic branched cover.
    Homology {
        knot: String,
        #[arg(short = 'n')]
        n: u64,
    },
    /// Seifert matrix of the satellite P(K).
    Satellite {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        companion: String,
        /// Write the certificate-transformed matrix and its trivial block size.
        #[arg(long)]
        certificate: bool,
        #[arg(short = 'o', long)]
        out: Option<PathBuf>,
    },
    /// Seifert matrix of the (w,1)-cable.
    Cable {
        #[arg(short = 'w', allow_hyphen_values = true)]
        w: i64,
        #[arg(long)]
        companion: String,
        #[arg(short = 'o', long)]
        out: Option<PathBuf>,
    },
    /// Intervals for g4top, gZ, galg and g3.
    Bounds {
        knot: String,
        #[arg(long)]
        search_depth: Option<usize>,
        #[arg(long)]
        search_coeff: Option<i64>,
        #[arg(long)]
        search_states: Option<usize>,
        #[arg(long)]
        g3_hint: Option<u64>,
    },
    /// Closed-form tables for 2-cables of torus knots.
    Table {
        #[command(subcommand)]
        which: TableCommand,
    },
    /// Built-in knots and patterns.
    Catalog {
        #[command(subcommand)]
        which: CatalogCommand,
    },
    /// Runs every acceptance criterion.
    VerifyPaper {
        #[arg(long)]
        filter: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum TableCommand {
    /// C_{2,q}(T_{2,p}) for odd p and q; ranges are `a:b` over odd values.
    Cable2q {
        #[arg(long, default_value = "3:9")]
        p: String,
        #[arg(long, default_value = "1:9")]
        q: String,
    },
    /// Iterated cables K_{n,p}.
    Iterated {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        n: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    List,
    Show { name: String },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Failure(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failure(_) => 1,
            CliError::Input(_) | CliError::Io(_) => 2,
        }
    }
}

impl From<FileError> for CliError {
    fn from(e: FileError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::VerificationFailed(_) | CoreError::InconsistentBounds { .. } => CliError::Failure(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// A file path, or the name of a catalog entry.
fn resolve(arg: &str) -> Result<AnyFile> {
    let path = Path::new(arg);
    if path.exists() {
        return Ok(formats::load(path)?);
    }
    catalog::lookup(arg)?.ok_or_else(|| CliError::Input(format!("{arg}: no such file or catalog entry")))
}

fn resolve_knot(arg: &str) -> Result<Knot> {
    match resolve(arg)? {
        AnyFile::Knot(k) => Ok(k.validate()?),
        AnyFile::Pattern(_) => Err(CliError::Input(format!("{arg} is a pattern file, expected a knot"))),
    }
}

fn resolve_pattern(arg: &str) -> Result<Pattern> {
    match resolve(arg)? {
        AnyFile::Pattern(p) => {
            let (pattern, reversed) = p.validate()?;
            if reversed {
                eprintln!("note: {}: negative winding {} reduced to {} by reversing the pattern", p.name, p.winding, -p.winding);
            }
            Ok(pattern)
        }
        AnyFile::Knot(_) => Err(CliError::Input(format!("{arg} is a knot file, expected a pattern"))),
    }
}

fn emit_json(out: &mut dyn Write, v: &Value) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json values serialize"))?;
    Ok(())
}

fn parse_point(s: &str) -> Result<UnitCirclePoint> {
    if s.trim() == "-1" {
        return Ok(UnitCirclePoint::MinusOne);
    }
    let body = s.trim().strip_prefix("s=").unwrap_or(s.trim());
    let r: BigRational = body.parse().map_err(|_| CliError::Input(format!("cannot parse point {s:?}; use s=p/q or -1")))?;
    Ok(UnitCirclePoint::RationalParam(r))
}

fn theta_over_pi(z: &BigRational) -> f64 {
    (z.to_f64().unwrap_or(0.0) / 2.0).clamp(-1.0, 1.0).acos() / std::f64::consts::PI
}

fn interval_theta(iv: &RootInterval) -> f64 {
    theta_over_pi(&iv.midpoint())
}

fn cmd_alexander(knot: &str, json: bool, out: &mut dyn Write) -> Result<()> {
    let k = resolve_knot(knot)?;
    let d = k.matrix.alexander().normalize_alexander();
    if json {
        let coeffs: Vec<String> = (0..=d.max_deg().unwrap_or(0)).map(|e| d.coeff(e).to_string()).collect();
        emit_json(out, &json!({"knot": k.name, "alexander": d.to_string(), "coefficients": coeffs}))
    } else {
        writeln!(out, "{d}")?;
        Ok(())
    }
}

fn cmd_signature(knot: &str, at: Option<&str>, profile: bool, json: bool, out: &mut dyn Write) -> Result<()> {
    let k = resolve_knot(knot)?;
    if let Some(at) = at {
        let omega = parse_point(at)?;
        let s = signature_at(&k.matrix, &omega)?;
        if json {
            return emit_json(out, &json!({"knot": k.name, "omega": omega.to_string(), "signature": s}));
        }
        writeln!(out, "sigma({omega}) = {s}")?;
        return Ok(());
    }
    if !profile {
        return Err(CliError::Input("give --at <point> or --profile".into()));
    }
    let p = signature_profile(&k.matrix)?;
    if json {
        let jumps: Vec<Value> = p
            .jumps
            .iter()
            .map(|j| json!({"z_lo": j.lo.to_string(), "z_hi": j.hi.to_string()}))
            .collect();
        let arcs: Vec<Value> = p
            .arcs
            .iter()
            .map(|a| json!({"sample": a.sample.to_string(), "value": a.value}))
            .collect();
        return emit_json(out, &json!({"knot": k.name, "jumps": jumps, "arcs": arcs, "max_abs": p.max_abs()}));
    }
    writeln!(out, "{:<6} {:<22} {:<12} {}", "arc", "theta/pi", "sample s", "sigma")?;
    for (i, a) in p.arcs.iter().enumerate() {
        let lo = a.start.as_ref().map_or(0.0, interval_theta);
        let hi = a.end.as_ref().map_or(1.0, interval_theta);
        writeln!(out, "{:<6} ({:.4}, {:.4}){:<6} {:<12} {}", i, lo, hi, "", a.sample, a.value)?;
    }
    writeln!(out, "max |sigma| = {}", p.max_abs())?;
    Ok(())
}

fn cmd_homology(knot: &str, n: u64, json: bool, out: &mut dyn Write) -> Result<()> {
    let k = resolve_knot(knot)?;
    let g = branched_cover_homology(&k.matrix, n)?;
    let oracle = homology_order_oracle(&k.matrix, n)?;
    if json {
        let factors: Vec<String> = g.invariant_factors().iter().map(|d| d.to_string()).collect();
        return emit_json(
            out,
            &json!({
                "knot": k.name, "n": n, "group": g.to_string(), "invariant_factors": factors,
                "free_rank": g.free_rank(), "order_oracle": oracle.to_string(),
            }),
        );
    }
    writeln!(out, "H_1(Sigma_{n}) = {g}")?;
    match g.order() {
        Some(o) => writeln!(out, "order {o} (resultant {oracle})")?,
        None => writeln!(out, "infinite (resultant {oracle})")?,
    }
    Ok(())
}

fn write_knot_file(file: &KnotFile, path: Option<&Path>, json: bool, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => {
            formats::save(p, &AnyFile::Knot(file.clone()))?;
            if json {
                emit_json(
                    out,
                    &json!({
                        "name": file.name, "file": p.display().to_string(),
                        "size": file.seifert_matrix.len(), "trivial_block_size": file.trivial_block_size,
                    }),
                )?;
            } else {
                writeln!(out, "wrote {} ({}x{})", p.display(), file.seifert_matrix.len(), file.seifert_matrix.len())?;
            }
        }
        None => write!(out, "{}", file.to_json())?,
    }
    Ok(())
}

fn cmd_satellite(pattern: &str, companion: &str, certificate: bool, path: Option<&Path>, json: bool, out: &mut dyn Write) -> Result<()> {
    let p = resolve_pattern(pattern)?;
    let k = resolve_knot(companion)?;
    let sat = satellite_matrix(&p, &k.matrix)?;
    let pname = p.matrix().name().unwrap_or(pattern).to_string();
    let name = format!("{pname}({})", k.name);
    let file = if certificate {
        let cert = satellite_certificate(&p, &k.matrix, &k.certificate)?;
        let v = sat.congruence(&cert.basis_change)?;
        KnotFile::from_matrix(&name, &v, Some(cert.block_size))?
    } else {
        KnotFile::from_matrix(&name, &sat, None)?
    };
    write_knot_file(&file, path, json, out)
}

fn cmd_cable(w: i64, companion: &str, path: Option<&Path>, json: bool, out: &mut dyn Write) -> Result<()> {
    let k = resolve_knot(companion)?;
    let c = cable_matrix(w, &k.matrix)?;
    let file = KnotFile::from_matrix(&format!("c{w}1_{}", k.name), &c, None)?;
    write_knot_file(&file, path, json, out)
}

fn bounds_json(name: &str, b: &GenusBounds) -> Value {
    let mut v = serde_json::to_value(b).expect("bounds serialize");
    v["knot"] = json!(name);
    v["summary"] = json!(b.summary());
    v
}

fn cmd_bounds(
    knot: &str,
    search: Option<SearchBudget>,
    g3_hint: Option<u64>,
    json: bool,
    out: &mut dyn Write,
) -> Result<()> {
    let k = resolve_knot(knot)?;
    let options = BoundsOptions {
        g3_hint: g3_hint.or(k.g3_hint),
        certificate: (k.certificate.block_size > 0).then(|| k.certificate.clone()),
        search,
    };
    let b = bounds_report(&k.matrix, &options)?;
    if json {
        return emit_json(out, &bounds_json(&k.name, &b));
    }
    writeln!(out, "knot: {}", k.name)?;
    writeln!(out, "g4top in {}", b.g4top)?;
    writeln!(out, "gZ in {}", b.gz)?;
    writeln!(out, "galg in {}", b.galg)?;
    writeln!(out, "g3 in {}", b.g3)?;
    for line in b.summary() {
        writeln!(out, "  {line}")?;
    }
    writeln!(out, "provenance:")?;
    for e in &b.provenance {
        let rel = if e.side == Side::Lower { ">=" } else { "<=" };
        let source = serde_json::to_value(e.source).unwrap();
        writeln!(out, "  {} {rel} {}  [{}] {}", e.invariant.name(), e.value, source.as_str().unwrap_or(""), e.citation)?;
    }
    Ok(())
}

fn odd_range(range: &str) -> Result<Vec<i64>> {
    let parse = |s: &str| s.trim().parse::<i64>().map_err(|_| CliError::Input(format!("bad range {range:?}")));
    let (a, b) = match range.split_once(':') {
        Some((a, b)) => (parse(a)?, parse(b)?),
        None => {
            let a = parse(range)?;
            (a, a)
        }
    };
    if a % 2 == 0 {
        return Err(CoreError::EvenParameter(a).into());
    }
    Ok((a..=b).step_by(2).collect())
}

fn cmd_table(which: &TableCommand, json: bool, out: &mut dyn Write) -> Result<()> {
    match which {
        TableCommand::Cable2q { p, q } => {
            let rows = cable2q_table(&odd_range(p)?, &odd_range(q)?)?;
            if json {
                return emit_json(out, &serde_json::to_value(&rows).unwrap());
            }
            writeln!(out, "{:>4} {:>4} {:>6} {:>6} {:>9} {:>9} {:>6}", "p", "q", "g3", "g4sm", "gz_upper", "sig_lower", "tight")?;
            for r in rows {
                writeln!(
                    out,
                    "{:>4} {:>4} {:>6} {:>6} {:>9} {:>9} {:>6}",
                    r.p, r.q, r.g3, r.g4sm_formula, r.gz_upper.to_string(), r.sig_lower, r.tight
                )?;
            }
        }
        TableCommand::Iterated { p, n } => {
            let r = iterated_cable_arithmetic(*p, *n)?;
            if json {
                return emit_json(out, &serde_json::to_value(&r).unwrap());
            }
            let cs: Vec<String> = r.c_sequence.iter().map(|c| c.to_string()).collect();
            writeln!(out, "p = {}, c = ({})", r.p, cs.join(", "))?;
            writeln!(out, "{:>3} {:>14} {:>14} {:>8}", "n", "g3", "gz_upper", "ratio")?;
            for l in &r.levels {
                writeln!(out, "{:>3} {:>14} {:>14} {:>8.4}", l.n, l.g3, l.gz_upper, l.ratio.to_f64().unwrap_or(f64::NAN))?;
            }
        }
    }
    Ok(())
}

fn cmd_catalog(which: &CatalogCommand, json: bool, out: &mut dyn Write) -> Result<()> {
    let entries = catalog::entries()?;
    match which {
        CatalogCommand::List => {
            if json {
                let list: Vec<Value> = entries
                    .iter()
                    .map(|e| match e {
                        AnyFile::Knot(k) => json!({"name": k.name, "kind": "knot", "size": k.seifert_matrix.len()}),
                        AnyFile::Pattern(p) => json!({
                            "name": p.name, "kind": "pattern", "size": p.pattern_matrix.len(), "winding": p.winding,
                        }),
                    })
                    .collect();
                return emit_json(out, &Value::Array(list));
            }
            for e in &entries {
                match e {
                    AnyFile::Knot(k) => writeln!(out, "{:<26} knot     {}x{}", k.name, k.seifert_matrix.len(), k.seifert_matrix.len())?,
                    AnyFile::Pattern(p) => writeln!(
                        out,
                        "{:<26} pattern  {}x{}  w={}",
                        p.name,
                        p.pattern_matrix.len(),
                        p.pattern_matrix.len(),
                        p.winding
                    )?,
                }
            }
        }
        CatalogCommand::Show { name } => {
            let e = entries
                .into_iter()
                .find(|e| e.name() == name.strip_suffix(".json").unwrap_or(name))
                .ok_or_else(|| CliError::Input(format!("{name}: not in the catalog")))?;
            write!(out, "{}", e.to_json())?;
        }
    }
    Ok(())
}

fn cmd_verify(filter: Option<&str>, json: bool, out: &mut dyn Write) -> Result<()> {
    let outcomes = verify::run(filter);
    if outcomes.is_empty() {
        return Err(CliError::Input(format!("no criterion matches {:?}", filter.unwrap_or(""))));
    }
    if json {
        emit_json(out, &serde_json::to_value(&outcomes).unwrap())?;
    } else {
        for o in &outcomes {
            let status = if o.passed { "PASS" } else { "FAIL" };
            writeln!(out, "criterion {:>2} {:<28} {status}  {} ({:.2}s)", o.id, o.name, o.detail, o.seconds)?;
        }
    }
    if let Some(o) = outcomes.iter().find(|o| !o.passed) {
        return Err(CliError::Failure(format!("criterion {} ({}) failed: {}", o.id, o.name, o.detail)));
    }
    Ok(())
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    let json = cli.json;
    match &cli.command {
        Command::Alexander { knot } => cmd_alexander(knot, json, out),
        Command::Signature { knot, at, profile } => cmd_signature(knot, at.as_deref(), *profile, json, out),
        Command::Homology { knot, n } => cmd_homology(knot, *n, json, out),
        Command::Satellite { pattern, companion, certificate, out: path } => {
            cmd_satellite(pattern, companion, *certificate, path.as_deref(), json, out)
        }
        Command::Cable { w, companion, out: path } => cmd_cable(*w, companion, path.as_deref(), json, out),
        Command::Bounds { knot, search_depth, search_coeff, search_states, g3_hint } => {
            let search = (search_depth.is_some() || search_coeff.is_some() || search_states.is_some()).then(|| {
                let d = SearchBudget::default();
                SearchBudget {
                    max_depth: search_depth.unwrap_or(d.max_depth),
                    max_coeff: search_coeff.unwrap_or(d.max_coeff),
                    max_states: search_states.unwrap_or(d.max_states),
                }
            });
            cmd_bounds(knot, search, *g3_hint, json, out)
        }
        Command::Table { which } => cmd_table(which, json, out),
        Command::Catalog { which } => cmd_catalog(which, json, out),
        Command::VerifyPaper { filter } => cmd_verify(filter.as_deref(), json, out),
    }
}
