//! Command-line front end. Exit codes are part of the contract so scripts can
//! branch on results:
//!
//! * `0`  success; for `compare`, the Betti tables agree (no assertion given)
//! * `2`  unreadable input: parse or schema error
//! * `3`  the curve is not reduced
//! * `4`  unknown catalog key
//! * `10` compare: tables differ (a strong Ziegler pair when combinatorial
//!   equivalence is asserted)
//! * `11` compare: tables agree under an asserted combinatorial equivalence —
//!   inconclusive, module isomorphism stays open

use crate::catalog;
use crate::curvelab::{
    analyze_with, ar_generator_degrees, milnor_resolution_with, resolution_analysis, Curve,
    CurveAnalysis, CurveError, Options,
};
use crate::groebner::GbCache;
use crate::resolution::{betti_numerator, regularity, BettiTable, FreeResolution};
use crate::textio::{
    self, read_curve_file, CurveReport, Report, ReportFormat, TextIoError, VerifyRow,
};
use clap::{Parser, Subcommand};
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

const EXIT_OK: i32 = 0;
const EXIT_OTHER: i32 = 1;
const EXIT_PARSE: i32 = 2;
const EXIT_NON_REDUCED: i32 = 3;
const EXIT_UNKNOWN_KEY: i32 = 4;
const EXIT_DISTINCT: i32 = 10;
const EXIT_INCONCLUSIVE: i32 = 11;

#[derive(Parser, Debug)]
#[command(
    name = "ziegler",
    version,
    about = "Exact minimal resolutions of Milnor algebras of plane curves",
    after_help = "Exit codes: 0 ok/equal, 2 parse or schema error, 3 non-reduced curve,\n\
                  4 unknown catalog key, 10 Betti tables distinct, 11 inconclusive\n\
                  (equal tables under asserted combinatorics)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Machine-readable JSON output (format_version 1)
    #[arg(long, global = true)]
    json: bool,
    /// Run expensive internal verifications (S-pair closure, d∘d = 0,
    /// Hilbert cross-check)
    #[arg(long, global = true)]
    check: bool,
    /// Memoize reduced Gröbner bases; set ZIEGLER_CACHE_DIR to persist them
    #[arg(long, global = true)]
    cache: bool,
    /// Extend the Hilbert profile up to this degree (default: regularity + 3)
    #[arg(long, global = true, value_name = "N")]
    max_degree: Option<i64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the minimal free resolution and Betti table of a curve file
    Resolve { file: PathBuf },
    /// Compare the Betti tables of two curve files
    Compare {
        file_a: PathBuf,
        file_b: PathBuf,
        /// Assert that the two curves have equivalent combinatorics, turning
        /// a Betti difference into a strong-Ziegler certificate
        #[arg(long)]
        assert_combinatorics: bool,
    },
    /// Tjurina number, Hilbert profile and saturated-ideal dimensions
    Singular { file: PathBuf },
    /// Inspect or re-verify the built-in curve registry
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    /// List the catalog keys with combinatorics labels
    List,
    /// Resolve a catalog entry by key
    Resolve { key: String },
    /// Recompute every entry and compare against the stored Betti tables
    VerifyAll,
    /// Write every entry as a curve file into a directory
    Export { dir: PathBuf },
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version reach this path too; they are not errors
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_PARSE;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    let opts = Options {
        check: cli.check,
        max_degree: cli.max_degree,
        cache: cli.cache.then(|| {
            Arc::new(GbCache::new(
                std::env::var_os("ZIEGLER_CACHE_DIR").map(PathBuf::from),
            ))
        }),
    };
    let format = if cli.json {
        ReportFormat::Machine
    } else {
        ReportFormat::Text
    };
    let result = match &cli.command {
        Command::Resolve { file } => cmd_resolve(file, &opts, format, out),
        Command::Compare {
            file_a,
            file_b,
            assert_combinatorics,
        } => cmd_compare(file_a, file_b, *assert_combinatorics, &opts, format, out),
        Command::Singular { file } => cmd_singular(file, &opts, format, out),
        Command::Catalog { action } => cmd_catalog(action, &opts, format, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    TextIo(#[from] TextIoError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error("unknown catalog key '{0}'")]
    UnknownKey(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

fn exit_code_for(e: &CliError) -> i32 {
    match e {
        CliError::TextIo(_) => EXIT_PARSE,
        CliError::Curve(CurveError::NonReduced { .. }) => EXIT_NON_REDUCED,
        CliError::Curve(_) => EXIT_PARSE,
        CliError::UnknownKey(_) => EXIT_UNKNOWN_KEY,
        CliError::Io(_) => EXIT_OTHER,
    }
}

fn betti_triples(b: &BettiTable) -> Vec<(i64, i64, i64)> {
    b.triples()
}

fn report_for_resolution(
    curve: &Curve,
    resolution: &FreeResolution,
    betti: &BettiTable,
    tjurina: i64,
    reduced: bool,
) -> CurveReport {
    CurveReport {
        name: curve.name.clone(),
        degree: curve.degree(),
        field: curve.field.to_string(),
        betti: betti_triples(betti),
        resolution: resolution.display_chain(),
        regularity: regularity(betti),
        tjurina,
        reduced,
        hilbert_profile: None,
        saturated_dims: None,
        ar_generator_degrees: Some(ar_generator_degrees(betti, curve.degree())),
    }
}

fn print_resolution_text(out: &mut dyn Write, rep: &CurveReport, betti: &BettiTable) {
    let _ = writeln!(
        out,
        "curve {} (degree {}, over {})",
        rep.name, rep.degree, rep.field
    );
    let _ = writeln!(out, "  {}", rep.resolution);
    let _ = writeln!(out, "{betti}");
    let _ = writeln!(
        out,
        "  regularity {}   tau {}   AR generator degrees {:?}",
        rep.regularity,
        rep.tjurina,
        rep.ar_generator_degrees.as_deref().unwrap_or(&[])
    );
}

fn cmd_resolve(
    file: &PathBuf,
    opts: &Options,
    format: ReportFormat,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let curve = read_curve_file(file)?;
    resolve_curve(&curve, opts, format, out)
}

fn resolve_curve(
    curve: &Curve,
    opts: &Options,
    format: ReportFormat,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let analysis = resolution_analysis(curve, opts);
    if !analysis.reduced_ok {
        return Err(CurveError::NonReduced {
            profile: analysis.hilbert_profile,
        }
        .into());
    }
    let rep = report_for_resolution(
        curve,
        &analysis.resolution,
        &analysis.betti,
        analysis.tjurina,
        true,
    );
    match format {
        ReportFormat::Machine => {
            let mut report = Report::new("resolve");
            report.curves.push(rep);
            let _ = out.write_all(&textio::write_report(&report, format));
        }
        ReportFormat::Text => print_resolution_text(out, &rep, &analysis.betti),
    }
    Ok(EXIT_OK)
}

fn cmd_compare(
    file_a: &PathBuf,
    file_b: &PathBuf,
    asserted: bool,
    opts: &Options,
    format: ReportFormat,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let a = read_curve_file(file_a)?;
    let b = read_curve_file(file_b)?;
    let (res_a, betti_a) = milnor_resolution_with(&a, opts)?;
    let (res_b, betti_b) = milnor_resolution_with(&b, opts)?;
    let verdict = crate::curvelab::verdict_from_tables(&betti_a, &betti_b, asserted);
    let stats_a = betti_numerator(&betti_a).stats();
    let stats_b = betti_numerator(&betti_b).stats();
    let mut report = Report::new("compare");
    report.curves.push(report_for_resolution(
        &a,
        &res_a,
        &betti_a,
        stats_a.half_second_derivative_at_one,
        true,
    ));
    report.curves.push(report_for_resolution(
        &b,
        &res_b,
        &betti_b,
        stats_b.half_second_derivative_at_one,
        true,
    ));
    report.verdict = Some(verdict.verdict.as_str().to_string());
    report.betti_equal = Some(verdict.betti_equal);
    report.combinatorics_asserted = Some(asserted);
    if let crate::curvelab::BettiComparison::Distinct { at, .. } = &verdict.comparison {
        report.first_difference = Some(*at);
    }
    match format {
        ReportFormat::Machine => {
            let _ = out.write_all(&textio::write_report(&report, format));
        }
        ReportFormat::Text => {
            print_resolution_text(out, &report.curves[0], &betti_a);
            print_resolution_text(out, &report.curves[1], &betti_b);
            let _ = writeln!(out, "betti tables equal: {}", verdict.betti_equal);
            if let Some(at) = report.first_difference {
                let _ = writeln!(out, "first differing entry: (i, j) = ({}, {})", at.0, at.1);
            }
            let _ = writeln!(out, "verdict: {}", verdict.verdict);
        }
    }
    Ok(match (verdict.betti_equal, asserted) {
        (false, _) => EXIT_DISTINCT,
        (true, true) => EXIT_INCONCLUSIVE,
        (true, false) => EXIT_OK,
    })
}

fn cmd_singular(
    file: &PathBuf,
    opts: &Options,
    format: ReportFormat,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let curve = read_curve_file(file)?;
    let analysis: CurveAnalysis = analyze_with(&curve, opts);
    let mut rep = report_for_resolution(
        &curve,
        &analysis.resolution,
        &analysis.betti,
        analysis.report.tjurina,
        analysis.report.reduced_ok,
    );
    rep.hilbert_profile = Some(analysis.report.hilbert_profile.clone());
    rep.saturated_dims = Some(
        analysis
            .report
            .saturated_piece_dims
            .iter()
            .map(|(&k, &d)| (k, d))
            .collect(),
    );
    match format {
        ReportFormat::Machine => {
            let mut report = Report::new("singular");
            report.curves.push(rep);
            let _ = out.write_all(&textio::write_report(&report, format));
        }
        ReportFormat::Text => {
            let _ = writeln!(
                out,
                "curve {} (degree {}, over {})",
                rep.name, rep.degree, rep.field
            );
            let _ = writeln!(out, "  reduced: {}", analysis.report.reduced_ok);
            let _ = writeln!(out, "  tau = {}", analysis.report.tjurina);
            let profile: Vec<String> = analysis
                .report
                .hilbert_profile
                .iter()
                .map(|(t, d)| format!("{t}:{d}"))
                .collect();
            let _ = writeln!(out, "  hilbert profile: {}", profile.join(" "));
            for (k, d) in &analysis.report.saturated_piece_dims {
                let _ = writeln!(out, "  dim (J^sat)_{k} = {d}");
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_catalog(
    action: &CatalogAction,
    opts: &Options,
    format: ReportFormat,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    match action {
        CatalogAction::List => {
            let entries = catalog::catalog_entries();
            if format == ReportFormat::Machine {
                let mut report = Report::new("catalog-list");
                report.keys = Some(entries.iter().map(|e| e.key.to_string()).collect());
                let _ = out.write_all(&textio::write_report(&report, format));
            } else {
                for e in &entries {
                    let _ = writeln!(
                        out,
                        "{:<12} degree {}  {:<24} over {}",
                        e.key,
                        e.curve.degree(),
                        e.combinatorics_label,
                        e.curve.field
                    );
                }
            }
            Ok(EXIT_OK)
        }
        CatalogAction::Resolve { key } => {
            let entry = catalog::entry(key).ok_or_else(|| CliError::UnknownKey(key.clone()))?;
            resolve_curve(&entry.curve, opts, format, out)
        }
        CatalogAction::VerifyAll => {
            let outcomes = catalog::verify_all(opts, true);
            let all_pass = outcomes.iter().all(|o| o.pass);
            if format == ReportFormat::Machine {
                let mut report = Report::new("catalog-verify-all");
                report.rows = Some(
                    outcomes
                        .iter()
                        .map(|o| VerifyRow {
                            key: o.key.clone(),
                            pass: o.pass,
                            detail: o.detail.clone(),
                            tjurina: o.tjurina,
                            reduced: o.reduced,
                        })
                        .collect(),
                );
                let _ = out.write_all(&textio::write_report(&report, format));
            } else {
                for o in &outcomes {
                    let _ = writeln!(
                        out,
                        "{}  {:<12} {}",
                        if o.pass { "PASS" } else { "FAIL" },
                        o.key,
                        o.detail
                    );
                }
            }
            Ok(if all_pass { EXIT_OK } else { EXIT_OTHER })
        }
        CatalogAction::Export { dir } => {
            std::fs::create_dir_all(dir)?;
            for e in catalog::catalog_entries() {
                let path = dir.join(format!("{}.json", e.key));
                textio::write_curve_file(&e.curve, &path)?;
            }
            let _ = writeln!(
                out,
                "wrote {} curve files to {}",
                catalog::catalog_keys().len(),
                dir.display()
            );
            Ok(EXIT_OK)
        }
    }
}
