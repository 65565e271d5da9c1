//! `nsg`: construct and verify symmetric numerical semigroups.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parameter
//! error.

mod args;
mod report;
mod sweep;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use serde::Serialize;

use nsg_core::constructions::verify_instance;
use nsg_core::presentations::{betti_elements, minimal_presentation};
use nsg_core::{Family, NumericalSemigroup};

use args::{Cli, Command, Format, SourceArgs};
use report::{AperyReport, GapsReport, InstanceReport, PresentationReport, REPORT_CSV_HEADER};
use sweep::{run_sweep, SweepConfig, SweepOutcome, SweepSummary};

/// Anything that stops a command before it produces output; always exit 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(err: E) -> Self {
        UsageError(err.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, UsageError> {
    match cli.command {
        Command::Construct { family, e, q, d, output } => {
            let core = verify_instance(family.into(), e, q, d)?;
            let report = InstanceReport::from(&core);
            let text = match output.format {
                Format::Json => json_line(&report)?,
                Format::Csv => format!("{REPORT_CSV_HEADER}\n{}\n", report.csv_row()),
                Format::Table => report.table(),
            };
            emit(&text, &output.out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { family, e, q, d, jobs, output } => {
            let cfg = SweepConfig {
                family,
                e_range: e,
                q_range: q,
                d_range: d,
                parallelism: jobs,
            };
            let outcome = run_sweep(&cfg);
            let text = render_sweep(&outcome, output.format)?;
            emit(&text, &output.out)?;
            if output.format != Format::Json {
                summary_to_stderr(&outcome);
            }
            if let Some(f) = &outcome.first_failure {
                eprintln!(
                    "verification failed: family={} e={} q={} d={} check={}",
                    f.family, f.e, f.q, f.d, f.check
                );
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Presentation { gens, output } => {
            let s = NumericalSemigroup::from_generators(&gens.0)?;
            let betti = betti_elements(&s);
            let presentation = minimal_presentation(&s);
            let report = PresentationReport::new(&s, &betti, &presentation);
            let text = match output.format {
                Format::Json => json_line(&report)?,
                Format::Csv => report.csv(),
                Format::Table => report.table(),
            };
            emit(&text, &output.out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Apery { source, base, output } => {
            let s = semigroup_from(&source)?;
            let base = base.unwrap_or_else(|| s.multiplicity());
            let ap = s.apery_set(base)?;
            let report = AperyReport {
                generators: s.generators().to_vec(),
                base,
                elements: ap.elements().to_vec(),
            };
            let text = match output.format {
                Format::Json => json_line(&report)?,
                Format::Csv => report.csv(),
                Format::Table => report.table(),
            };
            emit(&text, &output.out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Gaps { source, output } => {
            let s = semigroup_from(&source)?;
            let report = GapsReport::new(&s, &s.gap_profile());
            let text = match output.format {
                Format::Json => json_line(&report)?,
                Format::Csv => report.csv(),
                Format::Table => report.table(),
            };
            emit(&text, &output.out)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Resolve `--gens` or `--family/--e/--q/--d` into a semigroup.
fn semigroup_from(source: &SourceArgs) -> Result<NumericalSemigroup, UsageError> {
    if let Some(gens) = &source.gens {
        return Ok(NumericalSemigroup::from_generators(&gens.0)?);
    }
    // clap guarantees family together with e, q, d
    let family: Family = source.family.expect("clap enforces the source group").into();
    let (e, q, d) = (
        source.e.expect("requires_all"),
        source.q.expect("requires_all"),
        source.d.expect("requires_all"),
    );
    Ok(match family {
        Family::S => nsg_core::constructions::build_s(e, q, d)?,
        Family::T => nsg_core::constructions::build_t(e, q, d)?,
    })
}

/// Sweep rendering: JSON embeds the summary, CSV and table list reports and
/// leave the summary to stderr.
fn render_sweep(outcome: &SweepOutcome, format: Format) -> Result<String, UsageError> {
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct SweepJson<'a> {
                summary: &'a SweepSummary,
                reports: &'a [InstanceReport],
            }
            json_line(&SweepJson { summary: &outcome.summary, reports: &outcome.reports })
        }
        Format::Csv => {
            let mut text = String::from(REPORT_CSV_HEADER);
            text.push('\n');
            for r in &outcome.reports {
                text.push_str(&r.csv_row());
                text.push('\n');
            }
            Ok(text)
        }
        Format::Table => {
            let mut text = String::new();
            text.push_str("family  e  q  d  m   frobenius  genus  mu  checks\n");
            for r in &outcome.reports {
                let verdict = r.checks.first_failure().unwrap_or("ok");
                text.push_str(&format!(
                    "{:<6}  {:<1}  {:<1}  {:<1}  {:<3} {:<9}  {:<5}  {:<3} {}\n",
                    r.family, r.e, r.q, r.d, r.m, r.frobenius_computed, r.genus, r.mu, verdict
                ));
            }
            Ok(text)
        }
    }
}

fn summary_to_stderr(outcome: &SweepOutcome) {
    let s = &outcome.summary;
    eprintln!(
        "summary: instances={} skipped={} failures={}",
        s.instances, s.skipped, s.failures
    );
    for (reason, count) in &outcome.skip_reasons {
        eprintln!("  skipped {count} ({reason})");
    }
}

fn json_line<T: Serialize>(value: &T) -> Result<String, UsageError> {
    let mut text = serde_json::to_string(value)?;
    text.push('\n');
    Ok(text)
}

/// Write to `--out` or stdout; output is UTF-8 and newline-terminated.
fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), UsageError> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}
