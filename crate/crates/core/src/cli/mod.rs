//! Command-line front end. [`run`] renders everything into a [`Output`] so
//! the binary only has to print and exit.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::poly::{MonomialOrder, OrderKind};
use crate::quotient::PoincarePolynomial;
use crate::spaces::file::{FileError, PresentationFile, SCHEMA_VERSION};
use crate::spaces::{
    cartan_type_check, fibration_factorization_check, presentation, Family, SpaceError, SpacePresentation,
};
use crate::verify::{full_suite, verify_all, SuiteOptions, VerificationReport};

pub const DEFAULT_MAX_RANK: usize = 8;

#[derive(Debug, Parser)]
#[command(
    name = "coflag",
    version,
    about = "Cohomology rings of flag manifolds as exact polynomial quotients"
)]
pub struct CommandRequest {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the presentation (JSON output is a presentation file).
    Present(SpaceArgs),
    /// Reduced Groebner basis of the defining ideal.
    Groebner(SpaceArgs),
    /// Standard monomials of the quotient.
    Basis(SpaceArgs),
    /// Poincare polynomial counted from the quotient.
    Poincare(SpaceArgs),
    /// Top degree and the standard monomials spanning it.
    TopClass(SpaceArgs),
    /// Run the verification claims; `all` runs the whole suite.
    Verify(VerifyArgs),
    /// Whether restricted invariants beyond the split rank lie in the ideal of the first ones.
    CartanType(CartanArgs),
    /// Whether the total series factors as base times fiber.
    FactorCheck(FactorArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct SpaceArgs {
    /// `FAMILY RANK` (A, B, C, D), or `g2`.
    pub selector: Vec<String>,
    /// Presentation file instead of a family and rank.
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
    #[arg(long, value_parser = parse_order)]
    pub order: Option<OrderKind>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, default_value_t = DEFAULT_MAX_RANK, value_name = "N")]
    pub max_rank: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub space: SpaceArgs,
    /// Highest degree for the type-A vanishing identities (default `2n + 2`).
    #[arg(long, value_name = "N")]
    pub degree_cap: Option<usize>,
}

#[derive(Debug, Args)]
pub struct CartanArgs {
    /// Restriction data file.
    #[arg(long, value_name = "PATH")]
    pub file: PathBuf,
    #[arg(long, value_parser = parse_order)]
    pub order: Option<OrderKind>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct FactorArgs {
    /// Series such as `1 + 2t^2 + t^4`.
    #[arg(long)]
    pub total: String,
    #[arg(long)]
    pub base: String,
    #[arg(long)]
    pub fiber: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

fn parse_order(s: &str) -> Result<OrderKind, String> {
    s.parse().map_err(|e: crate::poly::PolyError| e.to_string())
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("rank {rank} exceeds the cap {cap} (raise it with --max-rank)")]
    RankOverCap { rank: usize, cap: usize },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    File { path: String, source: FileError },
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error("--{flag}: {msg}")]
    Series { flag: &'static str, msg: String },
}

/// What the binary prints to stdout, and its exit status.
#[derive(Debug, PartialEq, Eq)]
pub struct Output {
    pub status: i32,
    pub stdout: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { status: 0, stdout }
    }
}

/// Exit status for errors: usage and parse problems are 2.
pub const USAGE_ERROR: i32 = 2;

pub fn run(request: &CommandRequest) -> Result<Output, CliError> {
    match &request.command {
        Command::Present(a) => {
            let p = load_space(a)?;
            Ok(Output::ok(match a.format {
                Format::Json => PresentationFile::from_presentation(&p).to_json() + "\n",
                Format::Text => present_text(&p),
            }))
        }
        Command::Groebner(a) => {
            let p = load_space(a)?;
            let gb = p.groebner_basis()?;
            let polys: Vec<String> = gb.generators().iter().map(|g| p.format_poly(g)).collect();
            Ok(Output::ok(match a.format {
                Format::Json => to_json(&json!({
                    "schema_version": SCHEMA_VERSION,
                    "space": p.name,
                    "order": p.order.kind(),
                    "basis": polys,
                })),
                Format::Text => numbered(&polys, "g"),
            }))
        }
        Command::Basis(a) => {
            let p = load_space(a)?;
            let q = p.quotient()?;
            let monos = q.standard_monomials().map_err(SpaceError::from)?;
            Ok(Output::ok(match a.format {
                Format::Json => to_json(&json!({
                    "schema_version": SCHEMA_VERSION,
                    "space": p.name,
                    "monomials": monos.iter().map(|m| m.to_string_with(&p.variables)).collect::<Vec<_>>(),
                })),
                Format::Text => {
                    let rows: Vec<[String; 2]> = monos
                        .iter()
                        .map(|m| [q.degree_of(m).to_string(), m.to_string_with(&p.variables)])
                        .collect();
                    table(["degree", "monomial"], &rows)
                }
            }))
        }
        Command::Poincare(a) => {
            let p = load_space(a)?;
            let s = p.quotient()?.poincare_polynomial().map_err(SpaceError::from)?;
            Ok(Output::ok(match a.format {
                Format::Json => to_json(&json!({
                    "schema_version": SCHEMA_VERSION,
                    "space": p.name,
                    "coefficients": s.coeffs(),
                    "series": s.to_string(),
                })),
                Format::Text => format!("{s}\n"),
            }))
        }
        Command::TopClass(a) => {
            let p = load_space(a)?;
            let (degree, monos) = p.quotient()?.top_class().map_err(SpaceError::from)?;
            let shown: Vec<String> = monos.iter().map(|m| m.to_string_with(&p.variables)).collect();
            Ok(Output::ok(match a.format {
                Format::Json => to_json(&json!({
                    "schema_version": SCHEMA_VERSION,
                    "space": p.name,
                    "degree": degree,
                    "monomials": shown,
                })),
                Format::Text => format!("degree {degree}: {}\n", shown.join(", ")),
            }))
        }
        Command::Verify(v) => {
            let a = &v.space;
            let report = if a.file.is_none() && a.selector.len() == 1 && a.selector[0] == "all" {
                if a.order.is_some() {
                    return Err(CliError::Usage("--order does not apply to the full suite".into()));
                }
                full_suite(&SuiteOptions {
                    max_rank: a.max_rank.min(SuiteOptions::default().max_rank),
                    degree_cap: v.degree_cap,
                })
            } else {
                let p = load_space(a)?;
                verify_all(&p, v.degree_cap.unwrap_or(2 * p.rank + 2))
            };
            let status = if report.all_passed() { 0 } else { 1 };
            let stdout = match a.format {
                Format::Json => to_json(&json!({
                    "schema_version": SCHEMA_VERSION,
                    "passed": report.all_passed(),
                    "claims": report.claims(),
                })),
                Format::Text => report_text(&report),
            };
            Ok(Output { status, stdout })
        }
        Command::CartanType(a) => {
            let doc = read_file(&a.file)?;
            let (r, order) = doc.to_restriction().map_err(|source| CliError::File {
                path: a.file.display().to_string(),
                source,
            })?;
            let order = match a.order {
                Some(kind) => MonomialOrder::new(kind, order.arity()),
                None => order,
            };
            let answer = cartan_type_check(&r, &order)?;
            Ok(Output::ok(match a.format {
                Format::Json => to_json(&json!({
                    "schema_version": SCHEMA_VERSION,
                    "name": doc.name,
                    "cartan_type": answer,
                })),
                Format::Text => format!("{answer}\n"),
            }))
        }
        Command::FactorCheck(a) => {
            let series = |flag: &'static str, s: &str| {
                PoincarePolynomial::parse(s).map_err(|msg| CliError::Series { flag, msg })
            };
            let total = series("total", &a.total)?;
            let base = series("base", &a.base)?;
            let fiber = series("fiber", &a.fiber)?;
            let answer = fibration_factorization_check(&total, &base, &fiber);
            Ok(Output::ok(match a.format {
                Format::Json => to_json(&json!({
                    "schema_version": SCHEMA_VERSION,
                    "factors": answer,
                    "product": base.mul(&fiber).to_string(),
                })),
                Format::Text => format!("{answer}\n"),
            }))
        }
    }
}

fn to_json(v: &impl Serialize) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes") + "\n"
}

fn read_file(path: &PathBuf) -> Result<PresentationFile, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: shown.clone(),
        source,
    })?;
    PresentationFile::from_json(&text).map_err(|source| CliError::File { path: shown, source })
}

fn load_space(a: &SpaceArgs) -> Result<SpacePresentation, CliError> {
    let p = match (&a.file, a.selector.as_slice()) {
        (Some(path), []) => {
            let doc = read_file(path)?;
            doc.to_presentation().map_err(|source| CliError::File {
                path: path.display().to_string(),
                source,
            })?
        }
        (Some(_), _) => {
            return Err(CliError::Usage(
                "give either --file or a space selector, not both".into(),
            ))
        }
        (None, [g]) if g.eq_ignore_ascii_case("g2") => presentation(Family::G2, 2)?,
        (None, [family, rank]) => {
            let family: Family = family.parse()?;
            let rank: usize = rank
                .parse()
                .map_err(|_| CliError::Usage(format!("rank '{rank}' is not a nonnegative integer")))?;
            if rank > a.max_rank {
                return Err(CliError::RankOverCap { rank, cap: a.max_rank });
            }
            presentation(family, rank)?
        }
        (None, _) => return Err(CliError::Usage("expected FAMILY RANK, g2, or --file PATH".into())),
    };
    if p.rank > a.max_rank {
        return Err(CliError::RankOverCap {
            rank: p.rank,
            cap: a.max_rank,
        });
    }
    Ok(match a.order {
        Some(kind) => p.with_order(MonomialOrder::new(kind, p.arity()))?,
        None => p,
    })
}

fn present_text(p: &SpacePresentation) -> String {
    let list = |v: &[u32]| {
        if v.is_empty() {
            "none".to_string()
        } else {
            v.iter().map(u32::to_string).collect::<Vec<_>>().join(", ")
        }
    };
    let mut out = String::new();
    let _ = writeln!(out, "name:       {}", p.name);
    let _ = writeln!(out, "family:     {}", p.family);
    let _ = writeln!(out, "rank:       {}", p.rank);
    let _ = writeln!(out, "variables:  {}", p.variables.join(", "));
    let _ = writeln!(out, "order:      {}", p.order.kind());
    let _ = writeln!(out, "degrees G:  {}", list(p.degrees.group()));
    let _ = writeln!(out, "degrees H:  {}", list(p.degrees.subgroup()));
    let _ = writeln!(out, "exterior:   {}", list(p.degrees.exterior_degrees()));
    let _ = writeln!(out, "dimension:  {}", p.manifold_dimension());
    let gens: Vec<String> = p.ideal_generators.iter().map(|g| p.format_poly(g)).collect();
    out.push_str("generators:\n");
    out.push_str(&numbered(&gens, "f"));
    out
}

fn numbered(items: &[String], prefix: &str) -> String {
    let rows: Vec<[String; 2]> = items
        .iter()
        .enumerate()
        .map(|(i, s)| [format!("{prefix}{}", i + 1), s.clone()])
        .collect();
    table(["", ""], &rows)
}

/// Left-aligned columns separated by two spaces; a header row is printed
/// unless all headers are empty.
fn table<const N: usize>(header: [&str; N], rows: &[[String; N]]) -> String {
    let mut widths = header.map(str::len);
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[&str]| {
        let mut s = String::new();
        for (i, cell) in cells.iter().enumerate() {
            if i + 1 == cells.len() {
                s.push_str(cell);
            } else {
                let _ = write!(s, "{cell:<w$}  ", w = widths[i]);
            }
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    if header.iter().any(|h| !h.is_empty()) {
        line(&header);
    }
    for row in rows {
        line(&row.each_ref().map(String::as_str));
    }
    out
}

fn report_text(report: &VerificationReport) -> String {
    let rows: Vec<[String; 4]> = report
        .claims()
        .iter()
        .map(|c| {
            [
                c.status.to_string(),
                c.id.clone(),
                c.anchor.clone(),
                c.witness.as_ref().map(ToString::to_string).unwrap_or_default(),
            ]
        })
        .collect();
    let mut out = table(["status", "claim", "statement", "witness"], &rows);
    let failed = report.failures().count();
    let _ = writeln!(
        out,
        "{} claims, {} passed, {failed} failed",
        report.len(),
        report.len() - failed
    );
    out
}
