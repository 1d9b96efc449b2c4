//! `compare` and `sweep`.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use entdist::scenarios::{compare_range, ComparisonRecord, ComparisonReport};

use crate::args::SweepConfig;
use crate::args::Format;
use crate::error::CliError;
use crate::output::{emit, num};

#[derive(Debug, Serialize)]
struct CrossoverSummary {
    radius: f64,
    crossover: Option<usize>,
    ties: Vec<usize>,
    ring_never_loses: bool,
}

#[derive(Debug, Serialize)]
struct CompareDocument<'a> {
    meta: Meta<'a>,
    records: Vec<ComparisonRecord>,
    crossovers: Vec<CrossoverSummary>,
    summary: String,
}

#[derive(Debug, Serialize)]
struct Meta<'a> {
    command: &'a str,
    #[serde(flatten)]
    config: &'a SweepConfig,
}

/// Evaluates every `(R, N)` in the config, radii in parallel. Reports come
/// back sorted by radius.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<ComparisonReport>, CliError> {
    let mut radii = config.radii.clone();
    radii.sort_by(f64::total_cmp);
    let reports = radii
        .par_iter()
        .map(|&r| compare_range(&config.model, r, config.n_min, config.n_max))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(reports)
}

fn crossover_text(crossover: Option<usize>) -> String {
    match crossover {
        Some(n) => format!("crossover N*={n}"),
        None => "crossover none in range".to_string(),
    }
}

fn describe(report: &ComparisonReport) -> String {
    let mut line = format!("R={}: {}", report.radius, crossover_text(report.crossover));
    let ties: Vec<String> = report.ties().map(|n| n.to_string()).collect();
    if !ties.is_empty() {
        line.push_str(&format!("; tie at N={}", ties.join(",")));
    }
    if report.ring_never_loses() {
        line.push_str("; ring >= star for all N");
    }
    line
}

/// One line covering every radius.
fn overall(reports: &[ComparisonReport]) -> String {
    let first = reports[0].crossover;
    let mut line = if reports.iter().all(|r| r.crossover == first) {
        crossover_text(first)
    } else {
        "crossover depends on R".to_string()
    };
    if reports.iter().all(ComparisonReport::ring_never_loses) {
        line.push_str("; ring >= star for all N");
    }
    line
}

pub fn render(command: &str, config: &SweepConfig, reports: &[ComparisonReport]) -> Result<Vec<u8>, CliError> {
    match config.format {
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer.write_record(["n_parties", "radius", "e_avg_star", "e_avg_ring", "winner"])?;
            for rec in reports.iter().flat_map(|r| &r.records) {
                writer.write_record([
                    rec.n_parties.to_string(),
                    num(rec.radius),
                    num(rec.e_avg_star),
                    num(rec.e_avg_ring),
                    rec.winner.to_string(),
                ])?;
            }
            let mut out = writer.into_inner().map_err(|e| e.into_error())?;
            for report in reports {
                writeln!(out, "# {}", describe(report))?;
            }
            writeln!(out, "# {}", overall(reports))?;
            Ok(out)
        }
        Format::Json => {
            let doc = CompareDocument {
                meta: Meta { command, config },
                records: reports.iter().flat_map(|r| r.records.iter().copied()).collect(),
                crossovers: reports
                    .iter()
                    .map(|r| CrossoverSummary {
                        radius: r.radius,
                        crossover: r.crossover,
                        ties: r.ties().collect(),
                        ring_never_loses: r.ring_never_loses(),
                    })
                    .collect(),
                summary: overall(reports),
            };
            let mut out = serde_json::to_vec_pretty(&doc)?;
            out.push(b'\n');
            Ok(out)
        }
    }
}

pub fn cmd_compare(command: &str, config: &SweepConfig, stdout: &mut dyn Write) -> Result<(), CliError> {
    let reports = run_sweep(config)?;
    let document = render(command, config, &reports)?;
    emit(&document, config.output.as_deref(), stdout)
}
