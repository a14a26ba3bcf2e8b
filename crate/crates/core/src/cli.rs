//! The `admissible` command line. [`run`] takes the argument vector and two
//! output streams and returns the process exit code, so tests can drive it
//! without spawning a process.
//!
//! Exit codes: 0 on success, 1 when a verification finds a violation, 2 on
//! bad input or usage.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{self, BoundsReport};
use crate::catalog::{self, Lengths};
use crate::error::{Error, Result};
use crate::graph::{parse_graph, to_text, PmGraph};
use crate::invariants::{invariant_set, InvariantSet};
use crate::poly::registry;
use crate::rational::{format_rational, int, to_f64};
use crate::resistance::resistance_matrix;

#[derive(Debug, Parser)]
#[command(name = "admissible", version, about = "Exact admissible invariants of genus 3 pm-graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Invariants of the pm-graph in a graph file.
    Invariants {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// All-pairs effective resistance of the graph in a graph file.
    Resistance {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// The 41 catalog families.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Closed-form values for every family of one genus.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u32).range(0..=3))]
        genus: u32,
        /// Lengths such as `a=1,b=2/3`; each family uses the letters it needs
        /// and any letter left out is 1.
        #[arg(long, default_value = "")]
        lengths: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Symbolic identities and sampled bounds.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Debug, Subcommand)]
enum CatalogCommand {
    /// Family ids and their length parameters.
    List {
        #[arg(long)]
        json: bool,
    },
    /// A family at given lengths, as a graph file annotated with its invariants.
    Eval {
        id: String,
        #[arg(long, default_value = "")]
        lengths: String,
    },
    /// Engine against closed forms on random lengths.
    Check {
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    /// Polynomial identity certificates.
    Identities {
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Per-family and global lower bounds.
    Bounds {
        #[arg(long)]
        family: Option<String>,
        /// Defaults to 1000 per family and 10000 for g3.XIV.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = bounds::DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Csv,
    Json,
}

/// Outcome of a command that ran to completion.
enum Status {
    Ok,
    Violation,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(Status::Ok) => 0,
        Ok(Status::Violation) => 1,
        // A closed pipe (`| head`) is not an error worth reporting.
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn read_graph(path: &Path) -> Result<PmGraph> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))
    })?;
    parse_graph(&text)
}

fn json_line(out: &mut dyn Write, value: &impl Serialize) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn status(ok: bool) -> Status {
    if ok {
        Status::Ok
    } else {
        Status::Violation
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<Status> {
    match command {
        Command::Invariants { file, json } => {
            let set = invariant_set(&read_graph(&file)?)?;
            if json {
                json_line(out, &set)?;
            } else {
                write_invariants(out, &set, "")?;
            }
            Ok(Status::Ok)
        }
        Command::Resistance { file, json } => {
            let g = read_graph(&file)?;
            crate::graph::validate(&g).into_result()?;
            let r = resistance_matrix(&g)?;
            let n = r.ids().len();
            let rows: Vec<Vec<String>> = (0..n)
                .map(|i| (0..n).map(|j| format_rational(r.get(i, j))).collect())
                .collect();
            if json {
                #[derive(Serialize)]
                struct Matrix<'a> {
                    ids: &'a [String],
                    resistance: &'a [Vec<String>],
                }
                json_line(out, &Matrix { ids: r.ids(), resistance: &rows })?;
            } else {
                write_table(out, r.ids(), &rows)?;
            }
            Ok(Status::Ok)
        }
        Command::Catalog(c) => catalog_command(c, out),
        Command::Table {
            genus,
            lengths,
            format,
        } => {
            table(genus, &catalog::parse_lengths(&lengths)?, format, out)?;
            Ok(Status::Ok)
        }
        Command::Verify(VerifyCommand::Identities { name, json }) => {
            let certs = match name {
                Some(n) => vec![registry::verify_identity(&n)?],
                None => registry::verify_all(),
            };
            if json {
                json_line(out, &certs)?;
            } else {
                for c in &certs {
                    writeln!(out, "{c}")?;
                }
            }
            Ok(status(certs.iter().all(|c| c.as_expected())))
        }
        Command::Verify(VerifyCommand::Bounds {
            family,
            samples,
            seed,
            json,
        }) => {
            let report = bounds::verify_bounds(family.as_deref(), samples, seed)?;
            if json {
                json_line(out, &report)?;
            } else {
                write_bounds(out, &report)?;
            }
            Ok(status(report.passed()))
        }
    }
}

/// Genus counts are integers; everything else prints as `p/q`.
fn field_text(name: &str, value: &crate::Rational) -> String {
    if name == "g" || name == "gbar" {
        value.numer().to_string()
    } else {
        format_rational(value)
    }
}

fn write_invariants(out: &mut dyn Write, set: &InvariantSet, prefix: &str) -> Result<()> {
    for (name, value) in set.fields() {
        if name == "g" || name == "gbar" {
            writeln!(out, "{prefix}{name:<8} {}", value.numer())?;
            continue;
        }
        writeln!(
            out,
            "{prefix}{name:<8} {:<24} (~ {:.9})",
            format_rational(&value),
            to_f64(&value)
        )?;
    }
    Ok(())
}

/// Space-aligned square table with row and column labels.
fn write_table(out: &mut dyn Write, ids: &[String], rows: &[Vec<String>]) -> Result<()> {
    let width = rows
        .iter()
        .flatten()
        .chain(ids)
        .map(|s| s.chars().count())
        .max()
        .unwrap_or(1);
    let line = |label: &str, cells: &mut dyn Iterator<Item = &String>| {
        let mut s = format!("{label:>width$}");
        for c in cells {
            s.push_str(&format!("  {c:>width$}"));
        }
        s
    };
    writeln!(out, "{}", line("", &mut ids.iter()))?;
    for (id, row) in ids.iter().zip(rows) {
        writeln!(out, "{}", line(id, &mut row.iter()))?;
    }
    Ok(())
}

fn catalog_command(c: CatalogCommand, out: &mut dyn Write) -> Result<Status> {
    match c {
        CatalogCommand::List { json } => {
            if json {
                json_line(out, &catalog::families())?;
            } else {
                for f in catalog::families() {
                    let params: String = f.params.iter().collect();
                    let note = if f.degenerate { "  (degenerate: ℓ = 0)" } else { "" };
                    writeln!(out, "{:<8} g={} params={}{note}", f.id, f.genus, params)?;
                }
            }
            Ok(Status::Ok)
        }
        CatalogCommand::Eval { id, lengths } => {
            let lengths = catalog::parse_lengths(&lengths)?;
            let g = catalog::build(&id, &lengths)?;
            let set = invariant_set(&g)?;
            writeln!(out, "# family {id} at {}", catalog::format_lengths(&lengths))?;
            write!(out, "{}", to_text(&g))?;
            write_invariants(out, &set, "# ")?;
            Ok(Status::Ok)
        }
        CatalogCommand::Check {
            samples,
            seed,
            json,
        } => {
            let reports = catalog::check_all(samples, seed)?;
            let ok = reports.iter().all(|r| r.passed());
            if json {
                json_line(out, &reports)?;
            } else {
                for r in &reports {
                    let tag = if r.passed() { "pass" } else { "FAIL" };
                    writeln!(out, "{tag} {:<8} {} samples, seed {}", r.family, r.samples, r.seed)
                        ?;
                    for f in &r.failures {
                        writeln!(out, "     at {}: {}", f.lengths, f.mismatches.join(", "))?;
                    }
                }
                let passed = reports.iter().filter(|r| r.passed()).count();
                writeln!(out, "{passed}/{} families match their closed forms", reports.len())?;
            }
            Ok(status(ok))
        }
    }
}

#[derive(Serialize)]
struct TableRow<'a> {
    family: &'a str,
    lengths: String,
    #[serde(flatten)]
    values: InvariantSet,
}

fn table(genus: u32, lengths: &Lengths, format: Format, out: &mut dyn Write) -> Result<()> {
    let mut rows = Vec::new();
    for f in catalog::families().iter().filter(|f| f.genus == genus) {
        let own: Lengths = f
            .params
            .iter()
            .map(|c| (*c, lengths.get(c).cloned().unwrap_or_else(|| int(1))))
            .collect();
        rows.push(TableRow {
            family: f.id,
            lengths: catalog::format_lengths(&own),
            values: catalog::closed_form(f.id, &own)?,
        });
    }
    match format {
        Format::Json => json_line(out, &rows),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let header = rows[0].values.fields();
            let mut names = vec!["family".to_string(), "lengths".to_string()];
            names.extend(header.into_iter().map(|(n, _)| n));
            w.write_record(&names).map_err(csv_error)?;
            for r in &rows {
                let mut record = vec![r.family.to_string(), r.lengths.clone()];
                record.extend(r.values.fields().iter().map(|(n, v)| field_text(n, v)));
                w.write_record(&record).map_err(csv_error)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
            Ok(out.write_all(&bytes)?)
        }
    }
}

fn csv_error(e: csv::Error) -> Error {
    Error::Io(e.into())
}

fn write_bounds(out: &mut dyn Write, report: &BoundsReport) -> Result<()> {
    let tag = |ok: bool| if ok { "pass" } else { "FAIL" };
    for s in &report.samples {
        let relation = match s.relation {
            bounds::Relation::Floor => ">=",
            bounds::Relation::Exact => "==",
        };
        writeln!(
            out,
            "{} {:<8} {:<7} {relation} {:<7} min {} at {} ({} samples, seed {})",
            tag(s.passed()),
            s.family,
            s.invariant.name(),
            format_rational(&s.floor),
            format_rational(&s.minimum),
            s.argmin,
            s.samples,
            s.seed
        )
        ?;
        if let Some(v) = &s.violation {
            writeln!(out, "     violated at {v}")?;
        }
    }
    for w in &report.witnesses {
        let kind = if w.witness.is_boundary() { "boundary witness" } else { "witness" };
        writeln!(
            out,
            "{} {:<8} {:<7} {kind} {}: ratio {} (floor {})",
            tag(w.passed),
            w.family,
            w.invariant.name(),
            catalog::format_lengths(&w.witness.lengths),
            format_rational(&w.ratio),
            format_rational(&w.floor)
        )
        ?;
    }
    for g in &report.global {
        writeln!(
            out,
            "{} global   {:<7} >= {:<7} min {} in {} at {}",
            tag(g.passed),
            g.invariant.name(),
            format_rational(&g.floor),
            format_rational(&g.minimum),
            g.family,
            g.argmin
        )
        ?;
    }
    if let Some(t) = &report.tetrahedron {
        writeln!(
            out,
            "{} g3.XIV   R >= 0 and S >= 0 at {} samples, matching phi - 17ℓ/288 = R/(288C) and tau - 5ℓ/96 = S/(96C)",
            tag(t.passed()),
            t.samples
        )
        ?;
    }
    writeln!(out, "{}", if report.passed() { "all bounds hold" } else { "bound violation" })?;
    Ok(())
}
