//! Command-line front end for the del Pezzo classification toolkit.
//!
//! Eight subcommands: `check` (raw criteria on one quintuple),
//! `classify` (full record), `enumerate` (all systems of one index up
//! to a weight bound), `obstructions` and `invariants` (focused
//! reports), `verify-bl` (seeded sweep of the Bishop-to-Lichnerowicz
//! implication), `reproduce` (diff a stored catalog against a fresh
//! enumeration), and `family-data` (closed-form intersection numbers
//! for the distinguished one-parameter family).
//!
//! Exit codes: 0 success, 1 bad input or domain error, 2 a reproduction
//! diff is nonempty, 3 a verification sweep found a counterexample.
//! Identical invocations produce byte-identical output; the only
//! randomness is seeded.

use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use wps::enumerate::{enumerate_index, reproduce_list, DiffReport, EnumerationQuery};
use wps::invariants::{family_intersection_data, FamilyIntersectionData, KnownLct, LctBound};
use wps::obstructions::{obstruction_report, verify_theorem_bl, BlSummary};
use wps::record::ClassifiedRecord;
use wps::weights::WeightSystem;
use wps::{Result, WpsError};

const EXIT_OK: u8 = 0;
const EXIT_ERROR: u8 = 1;
const EXIT_DIFF: u8 = 2;
const EXIT_COUNTEREXAMPLE: u8 = 3;

/// CLI-level failure: a library error, or the output stream failing.
///
/// Output failures keep their io::ErrorKind so that a broken pipe,
/// which only means a downstream consumer such as `head` stopped
/// reading, ends the process quietly instead of reporting an error.
#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Wps(#[from] WpsError),
    #[error("writing output: {0}")]
    Io(#[from] std::io::Error),
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Parser)]
#[command(
    name = "wps",
    version,
    about = "Classify quasismooth del Pezzo hypersurfaces in weighted projective 3-space"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    /// One pretty-printed JSON value.
    Json,
    /// One compact JSON value per line.
    Jsonl,
    /// Comma-separated values with a header row.
    Csv,
    /// Human-readable text.
    Table,
}

/// One quintuple, given as four weights plus a degree or an index.
#[derive(Args)]
struct QuintupleArgs {
    /// The four weights, in any order.
    #[arg(value_name = "WEIGHT", num_args = 4, required = true)]
    weights: Vec<u64>,
    /// Degree d of the hypersurface.
    #[arg(long, value_name = "D")]
    degree: Option<u64>,
    /// Fano index I = a0+a1+a2+a3-d; an alternative way to fix d.
    #[arg(long, value_name = "I", allow_negative_numbers = true)]
    index: Option<i64>,
}

impl QuintupleArgs {
    fn resolve(&self) -> Result<WeightSystem> {
        let raw: [u64; 4] = self.weights.clone().try_into().expect("clap enforces four");
        let sum: i64 = raw.iter().map(|&w| w as i64).sum();
        let degree = match (self.degree, self.index) {
            (None, None) => {
                return Err(WpsError::InvalidInput(
                    "provide --degree or --index to fix the quintuple".into(),
                ))
            }
            (Some(d), None) => d,
            (None, Some(i)) => {
                let d = sum - i;
                if d < 1 {
                    return Err(WpsError::InvalidInput(format!(
                        "index {i} needs degree {d}, which is not positive"
                    )));
                }
                d as u64
            }
            (Some(d), Some(i)) => {
                if sum - (d as i64) != i {
                    return Err(WpsError::InvalidInput(format!(
                        "--degree {d} and --index {i} disagree: the weights sum to {sum}, \
                         so degree {d} means index {}",
                        sum - d as i64
                    )));
                }
                d
            }
        };
        WeightSystem::canonicalize(raw, degree)
    }

    fn echo(&self, command: &str) -> String {
        let mut s = format!(
            "{command} {} {} {} {}",
            self.weights[0], self.weights[1], self.weights[2], self.weights[3]
        );
        if let Some(d) = self.degree {
            let _ = write!(s, " --degree {d}");
        }
        if let Some(i) = self.index {
            let _ = write!(s, " --index {i}");
        }
        s
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the raw criteria on one quintuple: well-formedness,
    /// quasismoothness of the generic member, and degeneracy. Accepts
    /// non-Fano input.
    Check {
        #[command(flatten)]
        quintuple: QuintupleArgs,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Produce the full classification record for one quintuple.
    Classify {
        #[command(flatten)]
        quintuple: QuintupleArgs,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Reject non-Fano input (index <= 0). Pass `false` to get an
        /// advisory record instead.
        #[arg(long, value_name = "BOOL", default_value_t = true, action = clap::ArgAction::Set)]
        strict_fano: bool,
    },
    /// Enumerate every well-formed quasismooth system with the given
    /// index and weights up to the bound, streaming one record each.
    Enumerate {
        /// Fano index of the enumerated systems.
        #[arg(long, value_name = "I")]
        index: i64,
        /// Upper bound on each weight.
        #[arg(long, value_name = "N")]
        max_weight: u64,
        #[arg(long, value_enum, default_value_t = Format::Jsonl)]
        format: Format,
    },
    /// Report the Bishop and Lichnerowicz obstructions for one quintuple.
    Obstructions {
        #[command(flatten)]
        quintuple: QuintupleArgs,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Reject non-Fano input (the obstructions need index > 0).
        #[arg(long, value_name = "BOOL", default_value_t = true, action = clap::ArgAction::Set)]
        strict_fano: bool,
    },
    /// Report the orbifold invariants for one quintuple: singularity
    /// atlas, anticanonical degree, threshold data, existence status.
    Invariants {
        #[command(flatten)]
        quintuple: QuintupleArgs,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Reject non-Fano input (the invariants need index > 0).
        #[arg(long, value_name = "BOOL", default_value_t = true, action = clap::ArgAction::Set)]
        strict_fano: bool,
    },
    /// Verify on seeded random rational tuples that the Bishop bound
    /// implies the Lichnerowicz bound; exits 3 on any counterexample.
    VerifyBl {
        /// Tuple lengths to sweep, e.g. `1..6` (inclusive) or `4`.
        #[arg(long, value_name = "A..B", value_parser = parse_u32_range, default_value = "1..6")]
        n: (u32, u32),
        /// Samples per tuple length.
        #[arg(long, value_name = "K", default_value_t = 100_000)]
        samples: u64,
        /// Seed for the deterministic sampler.
        #[arg(long, value_name = "S", default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Diff a stored classification catalog against a fresh enumeration
    /// of its search space; exits 2 when the diff is nonempty.
    Reproduce {
        /// Catalog name: thm-kollar-johnson, thm-i2, thm-bgn, table-1,
        /// or table-2.
        source: String,
        /// Upper bound on each weight for both sides of the comparison.
        #[arg(long, value_name = "N")]
        max_weight: u64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Closed-form intersection numbers and singularity data for the
    /// family (3, 3m+1, 3m+2, 6m+1; 12m+5).
    FamilyData {
        /// Family parameters to report, e.g. `1..100` (inclusive) or `7`.
        #[arg(long, value_name = "A..B", value_parser = parse_u64_range)]
        n: (u64, u64),
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

fn parse_u32_range(text: &str) -> std::result::Result<(u32, u32), String> {
    parse_range::<u32>(text)
}

fn parse_u64_range(text: &str) -> std::result::Result<(u64, u64), String> {
    parse_range::<u64>(text)
}

fn parse_range<T>(text: &str) -> std::result::Result<(T, T), String>
where
    T: std::str::FromStr + PartialOrd + Copy,
    T::Err: std::fmt::Display,
{
    let parse = |s: &str| {
        s.parse::<T>()
            .map_err(|e| format!("invalid range endpoint '{s}': {e}"))
    };
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b)?),
        None => {
            let v = parse(text)?;
            (v, v)
        }
    };
    if hi < lo {
        return Err(format!("empty range '{text}'"));
    }
    Ok((lo, hi))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests are successes; everything else is
            // usage text on stderr with exit 1.
            return if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) {
                print!("{err}");
                ExitCode::from(EXIT_OK)
            } else {
                eprint!("{err}");
                ExitCode::from(EXIT_ERROR)
            };
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => {
            ExitCode::from(EXIT_OK)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn run(command: Command) -> CliResult<u8> {
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let code = dispatch(command, &mut out)?;
    out.flush()?;
    Ok(code)
}

fn dispatch(command: Command, out: &mut impl std::io::Write) -> CliResult<u8> {
    match command {
        Command::Check { quintuple, format } => {
            let ws = quintuple.resolve()?;
            let record = OutputRecord::new(quintuple.echo("check"), &ws)?;
            emit_records(out, format, std::iter::once(record))?;
            Ok(EXIT_OK)
        }
        Command::Classify {
            quintuple,
            format,
            strict_fano,
        } => {
            let ws = quintuple.resolve()?;
            require_fano(&ws, strict_fano)?;
            let record = OutputRecord::new(quintuple.echo("classify"), &ws)?;
            emit_records(out, format, std::iter::once(record))?;
            Ok(EXIT_OK)
        }
        Command::Enumerate {
            index,
            max_weight,
            format,
        } => {
            let query = EnumerationQuery::all(index, max_weight);
            let found = enumerate_index(&query)?;
            let echo = format!("enumerate --index {index} --max-weight {max_weight}");
            if format == Format::Jsonl {
                // Stream: write each record as soon as it is built.
                for ws in &found {
                    let record = OutputRecord::new(echo.clone(), ws)?;
                    writeln!(out, "{}", serde_json::to_string(&record).map_err(json_err)?)?;
                }
            } else {
                let records = found
                    .iter()
                    .map(|ws| OutputRecord::new(echo.clone(), ws))
                    .collect::<Result<Vec<_>>>()?;
                emit_records(out, format, records.into_iter())?;
            }
            Ok(EXIT_OK)
        }
        Command::Obstructions {
            quintuple,
            format,
            strict_fano,
        } => {
            let ws = quintuple.resolve()?;
            require_fano(&ws, strict_fano)?;
            let report = obstruction_report(&ws, 3)?;
            let payload = ObstructionOutput {
                tool_version: version(),
                query: quintuple.echo("obstructions"),
                a0: ws.weights()[0],
                a1: ws.weights()[1],
                a2: ws.weights()[2],
                a3: ws.weights()[3],
                d: ws.degree(),
                index: ws.fano_index(),
                bishop_lhs: report.bishop_lhs.to_string(),
                bishop_rhs: report.bishop_rhs.to_string(),
                bishop: report.bishop,
                lichnerowicz: report.lichnerowicz,
            };
            emit_obstructions(out, format, &payload)?;
            Ok(EXIT_OK)
        }
        Command::Invariants {
            quintuple,
            format,
            strict_fano,
        } => {
            let ws = quintuple.resolve()?;
            require_fano(&ws, strict_fano)?;
            let inv = wps::invariants::orbifold_invariants(&ws)?;
            let payload = InvariantsOutput {
                tool_version: version(),
                query: quintuple.echo("invariants"),
                a0: ws.weights()[0],
                a1: ws.weights()[1],
                a2: ws.weights()[2],
                a3: ws.weights()[3],
                d: ws.degree(),
                index: ws.fano_index(),
                invariants: inv,
            };
            emit_invariants(out, format, &payload)?;
            Ok(EXIT_OK)
        }
        Command::VerifyBl {
            n,
            samples,
            seed,
            format,
        } => {
            let range: Vec<u32> = (n.0..=n.1).collect();
            let summary = verify_theorem_bl(&range, samples, seed)?;
            emit_bl(out, format, &summary)?;
            Ok(if summary.clean() {
                EXIT_OK
            } else {
                EXIT_COUNTEREXAMPLE
            })
        }
        Command::Reproduce {
            source,
            max_weight,
            format,
        } => {
            let diff = reproduce_list(&source, max_weight)?;
            emit_diff(out, format, &diff)?;
            Ok(if diff.is_empty() { EXIT_OK } else { EXIT_DIFF })
        }
        Command::FamilyData { n, format } => {
            let rows = (n.0..=n.1)
                .map(family_intersection_data)
                .collect::<Result<Vec<_>>>()?;
            emit_family(out, format, &rows)?;
            Ok(EXIT_OK)
        }
    }
}

fn version() -> String {
    env!("CARGO_PKG_VERSION").to_string()
}

fn require_fano(ws: &WeightSystem, strict: bool) -> Result<()> {
    if strict && !ws.is_fano() {
        return Err(WpsError::Domain(format!(
            "{ws} has index {} <= 0; pass --strict-fano false for an advisory run",
            ws.fano_index()
        )));
    }
    Ok(())
}

/// The record every quintuple-producing subcommand emits: the full
/// classification record flattened to the top level, plus the tool
/// version and an echo of the query that produced it.
#[derive(Serialize)]
struct OutputRecord {
    tool_version: String,
    query: String,
    #[serde(flatten)]
    record: ClassifiedRecord,
}

impl OutputRecord {
    fn new(query: String, ws: &WeightSystem) -> Result<Self> {
        Ok(OutputRecord {
            tool_version: version(),
            query,
            record: ClassifiedRecord::build(ws)?,
        })
    }
}

#[derive(Serialize)]
struct ObstructionOutput {
    tool_version: String,
    query: String,
    a0: u64,
    a1: u64,
    a2: u64,
    a3: u64,
    d: u64,
    index: i64,
    bishop_lhs: String,
    bishop_rhs: String,
    bishop: bool,
    lichnerowicz: bool,
}

#[derive(Serialize)]
struct InvariantsOutput {
    tool_version: String,
    query: String,
    a0: u64,
    a1: u64,
    a2: u64,
    a3: u64,
    d: u64,
    index: i64,
    #[serde(flatten)]
    invariants: wps::invariants::OrbifoldInvariants,
}

fn json_err(e: serde_json::Error) -> WpsError {
    WpsError::Data(format!("serializing output: {e}"))
}

/// Quote a CSV cell when it contains a delimiter, quote, or newline.
fn csv_cell(text: &str) -> String {
    if text.contains([',', '"', '\n']) {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}

fn write_csv_row(out: &mut impl std::io::Write, cells: &[String]) -> CliResult<()> {
    let row: Vec<String> = cells.iter().map(|c| csv_cell(c)).collect();
    writeln!(out, "{}", row.join(",")).map_err(CliError::Io)
}

const RECORD_CSV_HEADER: &str = "a0,a1,a2,a3,d,I,well_formed,quasismooth,degenerate,special,\
                                 series,sporadic,bishop,lichnerowicz,ke_status";

fn record_csv_cells(r: &OutputRecord) -> Vec<String> {
    let ws = &r.record.weight_system;
    let class = &r.record.class;
    let special = class
        .special
        .as_ref()
        .map(|s| s.to_string())
        .unwrap_or_default();
    let series = class
        .series_matches
        .iter()
        .map(|m| {
            let params: Vec<String> = m
                .params
                .iter()
                .map(|(name, value)| format!("{name}={value}"))
                .collect();
            format!("{}:{} @ {}", m.source, m.family_id, params.join(","))
        })
        .collect::<Vec<_>>()
        .join("; ");
    let sporadic = class
        .sporadic_sources
        .iter()
        .map(|hit| {
            if hit.tag.is_empty() {
                hit.source.clone()
            } else {
                format!("{} ({})", hit.source, hit.tag)
            }
        })
        .collect::<Vec<_>>()
        .join("; ");
    let (bishop, lichnerowicz) = match &r.record.obstructions {
        Some(o) => (o.bishop.to_string(), o.lichnerowicz.to_string()),
        None => (String::new(), String::new()),
    };
    let ke_status = r
        .record
        .invariants
        .as_ref()
        .map(|inv| inv.ke_status.status.to_string())
        .unwrap_or_default();
    vec![
        ws.weights()[0].to_string(),
        ws.weights()[1].to_string(),
        ws.weights()[2].to_string(),
        ws.weights()[3].to_string(),
        ws.degree().to_string(),
        r.record.index.to_string(),
        r.record.well_formed.verdict.to_string(),
        r.record.quasismooth.verdict.to_string(),
        r.record.degenerate.to_string(),
        special,
        series,
        sporadic,
        bishop,
        lichnerowicz,
        ke_status,
    ]
}

fn record_table(out: &mut impl std::io::Write, r: &OutputRecord) -> CliResult<()> {
    let rec = &r.record;
    writeln!(out, "quintuple: {}", rec.weight_system)?;
    writeln!(out, "index: {}", rec.index)?;
    if rec.well_formed.verdict {
        writeln!(out, "well-formed: true")?;
    } else if let Some((i, j, g)) = rec.well_formed.failing_pair {
        writeln!(
            out,
            "well-formed: false (gcd(a{i}, a{j}) = {g} does not divide d)"
        )?;
    } else if let Some((i, j, k)) = rec.well_formed.failing_triple {
        writeln!(
            out,
            "well-formed: false (weights a{i}, a{j}, a{k} share a factor)"
        )?;
    } else {
        writeln!(out, "well-formed: false")?;
    }
    if rec.quasismooth.verdict {
        writeln!(out, "quasismooth: true")?;
    } else {
        writeln!(
            out,
            "quasismooth: false ({} failing subsets)",
            rec.quasismooth.subset_failures.len()
        )?;
    }
    writeln!(out, "degenerate: {}", rec.degenerate)?;
    match &rec.class.special {
        Some(s) => writeln!(out, "special: {s}")?,
        None => writeln!(out, "special: none")?,
    }
    if rec.class.series_matches.is_empty() {
        writeln!(out, "series: none")?;
    } else {
        writeln!(out, "series:")?;
        for m in &rec.class.series_matches {
            let params: Vec<String> = m
                .params
                .iter()
                .map(|(name, value)| format!("{name}={value}"))
                .collect();
            writeln!(
                out,
                "  - {}: {} at {}",
                m.source,
                m.family_id,
                params.join(", ")
            )?;
        }
    }
    if rec.class.sporadic_sources.is_empty() {
        writeln!(out, "sporadic: none")?;
    } else {
        let cells: Vec<String> = rec
            .class
            .sporadic_sources
            .iter()
            .map(|hit| {
                if hit.tag.is_empty() {
                    hit.source.clone()
                } else {
                    format!("{} ({})", hit.source, hit.tag)
                }
            })
            .collect();
        writeln!(out, "sporadic: {}", cells.join(", "))?;
    }
    match &rec.obstructions {
        None => writeln!(out, "obstructions: not applicable (index <= 0)")?,
        Some(o) => {
            writeln!(
                out,
                "bishop: {} (d*I^3 = {} vs 27*a0*a1*a2*a3 = {})",
                o.bishop, o.bishop_lhs, o.bishop_rhs
            )?;
            writeln!(out, "lichnerowicz: {}", o.lichnerowicz)?;
        }
    }
    match &rec.invariants {
        None => writeln!(out, "invariants: not applicable")?,
        Some(inv) => {
            writeln!(out, "anticanonical degree: {}", inv.anticanonical_sq)?;
            writeln!(out, "lct upper bound: {}", inv.lct_upper)?;
            if inv.singularities.is_empty() {
                writeln!(out, "singularities: none (smooth)")?;
            } else {
                writeln!(out, "singularities:")?;
                for s in &inv.singularities {
                    writeln!(out, "  - {s}")?;
                }
            }
            if let Some(known) = &inv.lct_known {
                writeln!(out, "known lct: {}", known_lct_cell(known))?;
            }
            match &inv.ke_status.note {
                Some(note) => writeln!(out, "ke status: {} ({note})", inv.ke_status.status)?,
                None => writeln!(out, "ke status: {}", inv.ke_status.status)?,
            }
        }
    }
    Ok(())
}

fn known_lct_cell(known: &KnownLct) -> String {
    fn bound(b: &Option<LctBound>) -> String {
        match b {
            Some(b) => b.to_string(),
            None => "open".to_string(),
        }
    }
    match known {
        KnownLct::Bound(b) => b.to_string(),
        KnownLct::ConditionalOnMonomial {
            monomial,
            present,
            absent,
        } => format!(
            "if the member contains {monomial}: {}; if not: {}",
            bound(present),
            bound(absent)
        ),
    }
}

fn emit_records(
    out: &mut impl std::io::Write,
    format: Format,
    records: impl Iterator<Item = OutputRecord>,
) -> CliResult<()> {
    match format {
        Format::Json => {
            let all: Vec<OutputRecord> = records.collect();
            if all.len() == 1 {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&all[0]).map_err(json_err)?
                )?;
            } else {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&all).map_err(json_err)?
                )?;
            }
        }
        Format::Jsonl => {
            for r in records {
                writeln!(out, "{}", serde_json::to_string(&r).map_err(json_err)?)?;
            }
        }
        Format::Csv => {
            writeln!(out, "{RECORD_CSV_HEADER}")?;
            for r in records {
                write_csv_row(out, &record_csv_cells(&r))?;
            }
        }
        Format::Table => {
            let all: Vec<OutputRecord> = records.collect();
            if all.len() == 1 {
                record_table(out, &all[0])?;
            } else {
                for r in &all {
                    let rec = &r.record;
                    let mut line = format!("{}  I={}", rec.weight_system, rec.index);
                    if rec.degenerate {
                        line.push_str("  degenerate");
                    }
                    if let Some(s) = &rec.class.special {
                        let _ = write!(line, "  special={s}");
                    }
                    if rec.class.unlisted {
                        line.push_str("  unlisted");
                    }
                    writeln!(out, "{line}")?;
                }
                writeln!(out, "total: {}", all.len())?;
            }
        }
    }
    Ok(())
}

fn emit_obstructions(
    out: &mut impl std::io::Write,
    format: Format,
    payload: &ObstructionOutput,
) -> CliResult<()> {
    match format {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(payload).map_err(json_err)?
        )
        .map_err(CliError::Io),
        Format::Jsonl => writeln!(out, "{}", serde_json::to_string(payload).map_err(json_err)?)
            .map_err(CliError::Io),
        Format::Csv => {
            writeln!(
                out,
                "a0,a1,a2,a3,d,I,bishop_lhs,bishop_rhs,bishop,lichnerowicz"
            )?;
            write_csv_row(
                out,
                &[
                    payload.a0.to_string(),
                    payload.a1.to_string(),
                    payload.a2.to_string(),
                    payload.a3.to_string(),
                    payload.d.to_string(),
                    payload.index.to_string(),
                    payload.bishop_lhs.clone(),
                    payload.bishop_rhs.clone(),
                    payload.bishop.to_string(),
                    payload.lichnerowicz.to_string(),
                ],
            )
        }
        Format::Table => {
            writeln!(
                out,
                "quintuple: ({},{},{},{};{})",
                payload.a0, payload.a1, payload.a2, payload.a3, payload.d
            )?;
            writeln!(out, "index: {}", payload.index)?;
            writeln!(
                out,
                "bishop: {} (d*I^3 = {} vs 27*a0*a1*a2*a3 = {})",
                payload.bishop, payload.bishop_lhs, payload.bishop_rhs
            )?;
            writeln!(
                out,
                "lichnerowicz: {} (I = {} vs 3*a0 = {})",
                payload.lichnerowicz,
                payload.index,
                3 * payload.a0
            )
            .map_err(CliError::Io)
        }
    }
}

fn emit_invariants(
    out: &mut impl std::io::Write,
    format: Format,
    payload: &InvariantsOutput,
) -> CliResult<()> {
    match format {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(payload).map_err(json_err)?
        )
        .map_err(CliError::Io),
        Format::Jsonl => writeln!(out, "{}", serde_json::to_string(payload).map_err(json_err)?)
            .map_err(CliError::Io),
        Format::Csv => {
            writeln!(
                out,
                "a0,a1,a2,a3,d,I,anticanonical_sq,lct_upper,known_lct,ke_status,singularities"
            )?;
            let inv = &payload.invariants;
            let sing = inv
                .singularities
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join("; ");
            write_csv_row(
                out,
                &[
                    payload.a0.to_string(),
                    payload.a1.to_string(),
                    payload.a2.to_string(),
                    payload.a3.to_string(),
                    payload.d.to_string(),
                    payload.index.to_string(),
                    inv.anticanonical_sq.to_string(),
                    inv.lct_upper.to_string(),
                    inv.lct_known
                        .as_ref()
                        .map(known_lct_cell)
                        .unwrap_or_default(),
                    inv.ke_status.status.to_string(),
                    sing,
                ],
            )
        }
        Format::Table => {
            let inv = &payload.invariants;
            writeln!(
                out,
                "quintuple: ({},{},{},{};{})",
                payload.a0, payload.a1, payload.a2, payload.a3, payload.d
            )?;
            writeln!(out, "index: {}", payload.index)?;
            writeln!(out, "anticanonical degree: {}", inv.anticanonical_sq)?;
            writeln!(out, "lct upper bound: {}", inv.lct_upper)?;
            if inv.singularities.is_empty() {
                writeln!(out, "singularities: none (smooth)")?;
            } else {
                writeln!(out, "singularities:")?;
                for s in &inv.singularities {
                    writeln!(out, "  - {s}")?;
                }
            }
            if let Some(known) = &inv.lct_known {
                writeln!(out, "known lct: {}", known_lct_cell(known))?;
            }
            match &inv.ke_status.note {
                Some(note) => writeln!(out, "ke status: {} ({note})", inv.ke_status.status)?,
                None => writeln!(out, "ke status: {}", inv.ke_status.status)?,
            }
            Ok(())
        }
    }
}

fn emit_bl(out: &mut impl std::io::Write, format: Format, summary: &BlSummary) -> CliResult<()> {
    match format {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(summary).map_err(json_err)?
        )
        .map_err(CliError::Io),
        Format::Jsonl => writeln!(out, "{}", serde_json::to_string(summary).map_err(json_err)?)
            .map_err(CliError::Io),
        Format::Csv => {
            writeln!(out, "n,samples,vacuous,implied")?;
            for counts in &summary.per_n {
                write_csv_row(
                    out,
                    &[
                        counts.n.to_string(),
                        summary.samples_per_n.to_string(),
                        counts.vacuous.to_string(),
                        counts.implied.to_string(),
                    ],
                )?;
            }
            Ok(())
        }
        Format::Table => {
            writeln!(out, "seed: {}", summary.seed)?;
            writeln!(out, "samples per n: {}", summary.samples_per_n)?;
            for counts in &summary.per_n {
                writeln!(
                    out,
                    "n={}: bishop vacuous {}, implication held {}",
                    counts.n, counts.vacuous, counts.implied
                )?;
            }
            writeln!(out, "counterexamples: {}", summary.counterexamples.len())?;
            for t in &summary.counterexamples {
                writeln!(out, "  - {t}")?;
            }
            writeln!(out, "defect violations: {}", summary.defect_violations).map_err(CliError::Io)
        }
    }
}

fn emit_diff(out: &mut impl std::io::Write, format: Format, diff: &DiffReport) -> CliResult<()> {
    match format {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(diff).map_err(json_err)?
        )
        .map_err(CliError::Io),
        Format::Jsonl => writeln!(out, "{}", serde_json::to_string(diff).map_err(json_err)?)
            .map_err(CliError::Io),
        Format::Csv => {
            writeln!(out, "status,a0,a1,a2,a3,d,I")?;
            for (status, list) in [("missing", &diff.missing), ("extra", &diff.extra)] {
                for ws in list {
                    write_csv_row(
                        out,
                        &[
                            status.to_string(),
                            ws.weights()[0].to_string(),
                            ws.weights()[1].to_string(),
                            ws.weights()[2].to_string(),
                            ws.weights()[3].to_string(),
                            ws.degree().to_string(),
                            ws.fano_index().to_string(),
                        ],
                    )?;
                }
            }
            Ok(())
        }
        Format::Table => {
            writeln!(out, "source: {}", diff.source)?;
            writeln!(out, "max weight: {}", diff.max_weight)?;
            writeln!(out, "matched: {}", diff.matched_count)?;
            writeln!(
                out,
                "missing: {}, extra: {}",
                diff.missing.len(),
                diff.extra.len()
            )?;
            for ws in &diff.missing {
                writeln!(out, "  missing {ws}")?;
            }
            for ws in &diff.extra {
                writeln!(out, "  extra {ws}")?;
            }
            Ok(())
        }
    }
}

fn emit_family(
    out: &mut impl std::io::Write,
    format: Format,
    rows: &[FamilyIntersectionData],
) -> CliResult<()> {
    match format {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(rows).map_err(json_err)?
        )
        .map_err(CliError::Io),
        Format::Jsonl => {
            for row in rows {
                writeln!(out, "{}", serde_json::to_string(row).map_err(json_err)?)?;
            }
            Ok(())
        }
        Format::Csv => {
            writeln!(
                out,
                "m,a0,a1,a2,a3,d,l_dot_k,r_dot_k,l_dot_r,l_self,r_self,sum_dot_k,sum_self"
            )?;
            for row in rows {
                let ws = &row.weight_system;
                write_csv_row(
                    out,
                    &[
                        row.m.to_string(),
                        ws.weights()[0].to_string(),
                        ws.weights()[1].to_string(),
                        ws.weights()[2].to_string(),
                        ws.weights()[3].to_string(),
                        ws.degree().to_string(),
                        row.l_dot_k.to_string(),
                        row.r_dot_k.to_string(),
                        row.l_dot_r.to_string(),
                        row.l_self.to_string(),
                        row.r_self.to_string(),
                        row.sum_dot_k.to_string(),
                        row.sum_self.to_string(),
                    ],
                )?;
            }
            Ok(())
        }
        Format::Table => {
            for row in rows {
                writeln!(
                    out,
                    "m={} {}: L.K={} R.K={} L.R={} L^2={} R^2={} (L+R).K={} (L+R)^2={}",
                    row.m,
                    row.weight_system,
                    row.l_dot_k,
                    row.r_dot_k,
                    row.l_dot_r,
                    row.l_self,
                    row.r_self,
                    row.sum_dot_k,
                    row.sum_self
                )?;
            }
            Ok(())
        }
    }
}
