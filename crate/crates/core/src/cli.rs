//! Command-line front end. Exit codes: 0 success, 1 a verification failed
//! (the report is still written), 2 usage or configuration error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use crate::cobweb::{self, build_cobweb, CobwebPoset};
use crate::error::{Error, Result};
use crate::fnomial::{fnomial_product, triangle, Method};
use crate::interpret;
use crate::json;
use crate::lgv;
use crate::report::{self, Expected, SuiteOptions};
use crate::sequences::{FSequence, SequenceKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Möbius convolution is checked by direct summation, cubic in the vertex count.
const MOBIUS_CHECK_VERTEX_LIMIT: usize = 400;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Expect {
    Binomial,
    NotBinomial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Fib,
    Grid,
}

#[derive(Debug, Parser)]
#[command(name = "fibonomial", version, about = "Exact F-nomial coefficients, cobweb posets and LGV path counting")]
struct Cli {
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = cobweb::DEFAULT_SEED)]
    seed: u64,
    /// Enumeration cap for brute-force oracles.
    #[arg(long, global = true, default_value_t = cobweb::DEFAULT_CHAIN_CAP)]
    cap: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print an F-nomial triangle.
    Triangle {
        #[arg(long, value_parser = parse_seq)]
        seq: SequenceKind,
        #[arg(long)]
        rows: usize,
        #[arg(long, value_parser = parse_method, default_value = "product")]
        method: Method,
    },
    /// Oracle suites.
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
    /// Cobweb poset checks.
    Cobweb {
        #[command(subcommand)]
        what: CobwebCommand,
    },
    /// Lindström–Gessel–Viennot checks.
    Lgv {
        #[command(subcommand)]
        what: LgvCommand,
    },
    /// Full verification suite.
    Report {
        #[command(subcommand)]
        what: ReportCommand,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    /// Brute-force counts against closed forms and classical recurrences.
    Interpretations,
}

#[derive(Debug, Subcommand)]
enum CobwebCommand {
    /// Chain oracle, chain-quotient identity and Möbius convolution.
    Verify {
        #[arg(long, value_parser = parse_seq)]
        seq: SequenceKind,
        #[arg(long)]
        levels: usize,
    },
    /// Does the maximal-chain count of an interval depend only on its length?
    BinomialCheck {
        #[arg(long, value_parser = parse_seq)]
        seq: SequenceKind,
        #[arg(long)]
        levels: usize,
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
}

#[derive(Debug, Subcommand)]
enum LgvCommand {
    /// Determinant versus brute-force disjoint path systems.
    Verify {
        #[arg(long, value_enum)]
        family: Family,
        /// Grid size `WxH` (grid family).
        #[arg(long)]
        size: Option<String>,
        /// Largest vertex of the step graph (fib family); defaults to the largest endpoint.
        #[arg(long)]
        n: Option<usize>,
        /// `0,1` for fib, `0,1;1,0` for grid points.
        #[arg(long)]
        sources: String,
        #[arg(long)]
        sinks: String,
    },
    /// Fibonacci path-matrix determinants next to Fibonomials.
    Explore {
        #[arg(long, default_value_t = 12)]
        max_sink: usize,
    },
}

#[derive(Debug, Subcommand)]
enum ReportCommand {
    /// Run every acceptance criterion.
    All {
        /// JSON file overriding the asserted spot values.
        #[arg(long)]
        expected: Option<PathBuf>,
    },
}

fn parse_seq(s: &str) -> std::result::Result<SequenceKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_method(s: &str) -> std::result::Result<Method, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Produced output plus whether every requested check passed.
struct Outcome {
    text: String,
    passed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, passed: true }
    }
}

/// Parses `args` (including the program name), runs the subcommand and
/// returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli).and_then(|outcome| emit(&cli, &outcome).map(|_| outcome)) {
        Ok(outcome) if outcome.passed => EXIT_OK,
        Ok(_) => EXIT_FAILED,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn emit(cli: &Cli, outcome: &Outcome) -> Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, &outcome.text).map_err(|e| Error::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{}", outcome.text);
            Ok(())
        }
    }
}

fn execute(cli: &Cli) -> Result<Outcome> {
    if cli.cap == 0 {
        return Err(Error::BadRange("--cap must be positive".into()));
    }
    match &cli.command {
        Command::Triangle { seq, rows, method } => {
            let t = triangle(&FSequence::new(*seq), *rows, *method)?;
            Ok(Outcome::ok(match cli.format.unwrap_or(Format::Table) {
                Format::Table => t.to_table(),
                Format::Csv => t.to_csv(),
                Format::Json => t.to_json(),
            }))
        }
        Command::Verify {
            what: VerifyCommand::Interpretations,
        } => verify_interpretations(cli.format.unwrap_or(Format::Table)),
        Command::Cobweb { what } => match what {
            CobwebCommand::Verify { seq, levels } => {
                let p = build_levels(*seq, *levels)?;
                cobweb_verify(&p, cli.cap, cli.format.unwrap_or(Format::Json))
            }
            CobwebCommand::BinomialCheck { seq, levels, expect } => {
                let p = build_levels(*seq, *levels)?;
                let r = cobweb::binomial_check(&p, cli.seed, cobweb::DEFAULT_DFS_CAP.min(cli.cap));
                let passed = r.spot_check.mismatches == 0
                    && match expect {
                        Some(Expect::Binomial) => r.is_binomial,
                        Some(Expect::NotBinomial) => !r.is_binomial,
                        None => true,
                    };
                let text = match cli.format.unwrap_or(Format::Json) {
                    Format::Json => r.to_json(),
                    Format::Table | Format::Csv => binomial_table(&r),
                };
                Ok(Outcome { text, passed })
            }
        },
        Command::Lgv { what } => match what {
            LgvCommand::Verify {
                family,
                size,
                n,
                sources,
                sinks,
            } => {
                let d = lgv_dag(*family, size.as_deref(), *n, sources, sinks)?;
                let r = lgv::lgv_verify(&d, cli.cap)?;
                if !r.nonpermutable {
                    eprintln!("note: configuration is not nonpermutable; the determinant is a signed sum");
                }
                let text = match cli.format.unwrap_or(Format::Json) {
                    Format::Json => r.to_json(),
                    Format::Table | Format::Csv => format!(
                        "determinant {}\nbrute force {}\nsigned sum  {}\nnonpermutable {}\nequal {}\n",
                        r.determinant, r.brute_force, r.signed_sum, r.nonpermutable, r.equal
                    ),
                };
                Ok(Outcome {
                    text,
                    passed: r.verified(),
                })
            }
            LgvCommand::Explore { max_sink } => {
                if *max_sink > 90 {
                    return Err(Error::cap("explore max sink", max_sink, 90));
                }
                let rows = lgv::lgv_explore(*max_sink)?;
                Ok(Outcome::ok(match cli.format.unwrap_or(Format::Table) {
                    Format::Json => json::to_canonical_string(&rows),
                    Format::Csv => {
                        let mut out = String::from("k,sources,sinks,determinant,fibonomial\n");
                        for r in &rows {
                            let _ = writeln!(out, "{},{},{},{},{}", r.k, join(&r.sources, ";"), join(&r.sinks, ";"), r.determinant, r.fibonomial);
                        }
                        out
                    }
                    Format::Table => {
                        let mut out = String::from("# Fibonacci step graph: det(path matrix) beside (m over k)_F, no identity claimed\n");
                        for r in &rows {
                            let _ = writeln!(
                                out,
                                "k={} sources {:<8} sinks {:<12} det {:>6}   fibonomial {}",
                                r.k,
                                join(&r.sources, ","),
                                join(&r.sinks, ","),
                                r.determinant,
                                r.fibonomial
                            );
                        }
                        out
                    }
                }))
            }
        },
        Command::Report {
            what: ReportCommand::All { expected },
        } => {
            let expected = match expected {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| Error::Expected(format!("{}: {e}", path.display())))?;
                    Expected::from_json(&text)?
                }
                None => Expected::default(),
            };
            let r = report::run_all(
                &expected,
                SuiteOptions {
                    seed: cli.seed,
                    cap: cli.cap,
                },
            );
            let text = match cli.format.unwrap_or(Format::Table) {
                Format::Table => r.to_table(),
                Format::Csv => r.to_csv(),
                Format::Json => r.to_json(),
            };
            Ok(Outcome {
                text,
                passed: r.all_passed,
            })
        }
    }
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn build_levels(seq: SequenceKind, levels: usize) -> Result<CobwebPoset> {
    build_cobweb(&FSequence::new(seq), levels)
}

fn lgv_dag(family: Family, size: Option<&str>, n: Option<usize>, sources: &str, sinks: &str) -> Result<lgv::PathDag> {
    match family {
        Family::Fib => {
            let (a, b) = (lgv::parse_vertex_list(sources)?, lgv::parse_vertex_list(sinks)?);
            let n = n.unwrap_or_else(|| a.iter().chain(&b).copied().max().unwrap_or(1));
            lgv::build_fib_dag(n, &a, &b)
        }
        Family::Grid => {
            let size = size.ok_or_else(|| Error::BadRange("grid family needs --size WxH".into()))?;
            let (w, h) = size
                .split_once('x')
                .and_then(|(w, h)| Some((w.parse().ok()?, h.parse().ok()?)))
                .ok_or_else(|| Error::BadRange(format!("bad grid size `{size}`")))?;
            lgv::build_grid_dag(w, h, &lgv::parse_grid_points(sources)?, &lgv::parse_grid_points(sinks)?)
        }
    }
}

fn binomial_table(r: &cobweb::BinomialCheckReport) -> String {
    let mut out = format!("# {} cobweb, {} levels\n", r.sequence, r.levels);
    for (len, counts) in &r.by_length {
        let _ = writeln!(out, "length {len}: chain counts {{{}}}", join(&counts.iter().collect::<Vec<_>>(), ", "));
    }
    let _ = writeln!(out, "is_binomial: {}", r.is_binomial);
    if let Some((a, b)) = &r.counterexample {
        let _ = writeln!(
            out,
            "counterexample: [{}, {}] has {} chains, [{}, {}] has {}",
            a.bottom, a.top, a.chains, b.bottom, b.top, b.chains
        );
    }
    out
}

#[derive(Debug, Serialize)]
struct CheckRow {
    family: &'static str,
    n: usize,
    k: usize,
    #[serde(serialize_with = "json::dec")]
    oracle: BigInt,
    #[serde(serialize_with = "json::dec")]
    reference: BigInt,
    pass: bool,
}

fn render_rows(rows: &[CheckRow], format: Format) -> String {
    match format {
        Format::Json => json::to_canonical_string(&rows),
        Format::Csv => {
            let mut out = String::from("family,n,k,oracle,reference,pass\n");
            for r in rows {
                let _ = writeln!(out, "{},{},{},{},{},{}", r.family, r.n, r.k, r.oracle, r.reference, r.pass);
            }
            out
        }
        Format::Table => {
            let mut out = format!("{:<18} {:>3} {:>3} {:>12} {:>12}  result\n", "family", "n", "k", "oracle", "reference");
            for r in rows {
                let _ = writeln!(
                    out,
                    "{:<18} {:>3} {:>3} {:>12} {:>12}  {}",
                    r.family,
                    r.n,
                    r.k,
                    r.oracle,
                    r.reference,
                    if r.pass { "PASS" } else { "FAIL" }
                );
            }
            out
        }
    }
}

fn verify_interpretations(format: Format) -> Result<Outcome> {
    let mut rows = Vec::new();
    let mut push = |family, n, k, oracle: BigInt, reference: BigInt| {
        rows.push(CheckRow {
            family,
            n,
            k,
            pass: oracle == reference,
            oracle,
            reference,
        })
    };
    let natural = FSequence::new(SequenceKind::Natural);
    for n in 0..=12 {
        for k in 0..=n {
            push(
                "subsets",
                n,
                k,
                interpret::count_k_subsets(n, k)?.value,
                fnomial_product(&natural, n, k as i64)?.into(),
            );
        }
    }
    for (q, cap, name) in [(2u32, 4usize, "subspaces q=2"), (3, 3, "subspaces q=3")] {
        let gauss = FSequence::new(SequenceKind::Gaussian(q));
        for n in 0..=cap {
            for k in 0..=n {
                push(
                    name,
                    n,
                    k,
                    interpret::count_subspaces_bruteforce(n, k, q)?.value,
                    fnomial_product(&gauss, n, k as i64)?.into(),
                );
            }
        }
    }
    let s2 = report::stirling2_rows(interpret::PARTITION_CAP);
    for n in 0..=interpret::PARTITION_CAP {
        let (hist, _) = interpret::partition_block_histogram(n)?;
        for k in 0..=n {
            push("partitions/blocks", n, k, hist[k].into(), s2[n][k].into());
        }
    }
    let c1 = report::stirling1_rows(interpret::PERMUTATION_CAP);
    for n in 0..=interpret::PERMUTATION_CAP {
        let (hist, _) = interpret::permutation_cycle_histogram(n)?;
        for k in 0..=n {
            push("permutations/cycles", n, k, hist[k].into(), c1[n][k].into());
        }
    }
    let passed = rows.iter().all(|r| r.pass);
    Ok(Outcome {
        text: render_rows(&rows, format),
        passed,
    })
}

#[derive(Debug, Serialize)]
struct CobwebVerifyReport {
    #[serde(serialize_with = "json::dec")]
    sequence: SequenceKind,
    levels: usize,
    level_sizes: Vec<usize>,
    chain_layers_checked: usize,
    chain_layers_skipped_over_cap: usize,
    chain_failures: Vec<(usize, usize)>,
    quotient_checked: usize,
    quotient_failures: Vec<(usize, usize)>,
    mobius_pairs: Option<usize>,
    mobius_convolution_ok: Option<bool>,
    passed: bool,
}

fn cobweb_verify(p: &CobwebPoset, cap: u64, format: Format) -> Result<Outcome> {
    let n_levels = p.n_levels();
    let (mut checked, mut skipped, mut failures) = (0, 0, Vec::new());
    for n in 1..=n_levels {
        for k in 0..n {
            match cobweb::enumerate_max_chains(p, k, n, cap) {
                Ok(r) => {
                    checked += 1;
                    if r.value != BigInt::from(cobweb::count_max_chains_layer(p, k, n)?) {
                        failures.push((k, n));
                    }
                }
                Err(Error::CapExceeded { .. }) => skipped += 1,
                Err(e) => return Err(e),
            }
        }
    }
    let mut quotient_checked = 0;
    let mut quotient_failures = Vec::new();
    for n in 0..=n_levels {
        for k in 0..=n {
            quotient_checked += 1;
            if !cobweb::chain_quotient_identity(p, k, n)?.equal {
                quotient_failures.push((k, n));
            }
        }
    }
    let (mobius_pairs, mobius_ok) = if p.vertex_count() <= MOBIUS_CHECK_VERTEX_LIMIT {
        let mu = cobweb::mobius_table(p)?;
        (Some(mu.len()), Some(mu.convolution_failure().is_none()))
    } else {
        (None, None)
    };
    let passed = failures.is_empty() && quotient_failures.is_empty() && mobius_ok != Some(false);
    let r = CobwebVerifyReport {
        sequence: p.seq_kind(),
        levels: n_levels,
        level_sizes: p.level_sizes().to_vec(),
        chain_layers_checked: checked,
        chain_layers_skipped_over_cap: skipped,
        chain_failures: failures,
        quotient_checked,
        quotient_failures,
        mobius_pairs,
        mobius_convolution_ok: mobius_ok,
        passed,
    };
    let text = match format {
        Format::Json => json::to_canonical_string(&r),
        Format::Table | Format::Csv => format!(
            "{} cobweb, levels {:?}\nchain oracle: {} layers checked, {} over cap, {} failures\nchain-quotient identity: {} pairs, {} failures\nMöbius convolution: {}\n{}\n",
            r.sequence,
            r.level_sizes,
            r.chain_layers_checked,
            r.chain_layers_skipped_over_cap,
            r.chain_failures.len(),
            r.quotient_checked,
            r.quotient_failures.len(),
            match r.mobius_convolution_ok {
                Some(true) => format!("ok over {} pairs", r.mobius_pairs.unwrap_or(0)),
                Some(false) => "FAILED".to_string(),
                None => format!("skipped (more than {MOBIUS_CHECK_VERTEX_LIMIT} vertices)"),
            },
            if r.passed { "PASS" } else { "FAIL" }
        ),
    };
    Ok(Outcome { text, passed })
}
