//! Command-line front end shared by the `twoagl` binary and its tests.
//!
//! Exit codes: 0 success, 1 violations or failed predictions, 2 usage or
//! input errors.

use std::io::Write;
use std::str::FromStr;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{classify, Classification, DossierOptions, InvariantDossier};
use crate::corpus::{enumerate_by_genus, run_suite, CorpusBounds, Suite};
use crate::error::{Error, Result};
use crate::families::{construct, FamilyKind, FamilyParams};
use crate::semigroup::{parse_generators, NumericalSemigroup};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "twoagl", version, about = "Sally-module rank of numerical semigroup rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full invariant dossier of one semigroup.
    Analyze {
        /// Generators, comma separated.
        gens: String,
        #[arg(long)]
        json: bool,
        /// Reduction parameter `a` with `a + K ⊆ H`.
        #[arg(long)]
        parameter: Option<i64>,
        /// Hilbert values are listed for `n = 0..=horizon`.
        #[arg(long, default_value_t = crate::classify::DEFAULT_HORIZON)]
        horizon: usize,
    },
    /// Lists semigroups up to a genus, optionally filtered by class.
    Enumerate {
        #[arg(long)]
        genus_max: usize,
        /// all, gorenstein, agl, 2-agl, rank>=3, minimal-multiplicity
        #[arg(long, default_value = "all")]
        filter: Filter,
        #[arg(long)]
        json: bool,
    },
    /// Runs a verification suite over its corpus.
    Verify {
        suite: String,
        #[arg(long)]
        genus_max: Option<usize>,
        #[arg(long)]
        f_max: Option<i64>,
        #[arg(long)]
        max_multiplicity: Option<i64>,
        #[arg(long)]
        n_max: Option<i64>,
        #[arg(long, env = "TWOAGL_WORKERS")]
        workers: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Builds a family member and compares predicted with observed invariants.
    Construct {
        /// thm710, cor73, ex5 or ex2
        family: String,
        #[arg(long)]
        seed: Option<String>,
        #[arg(long)]
        e: Option<i64>,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long)]
        c: Option<i64>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Filter {
    All,
    Gorenstein,
    Agl,
    TwoAgl,
    RankAtLeast3,
    MinimalMultiplicity,
}

impl FromStr for Filter {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "all" => Filter::All,
            "gorenstein" => Filter::Gorenstein,
            "agl" => Filter::Agl,
            "2-agl" | "2agl" => Filter::TwoAgl,
            "rank≥3" | "rank>=3" | "rank3+" => Filter::RankAtLeast3,
            "minimal-multiplicity" | "mm" => Filter::MinimalMultiplicity,
            other => return Err(format!("unknown filter '{other}'")),
        })
    }
}

impl Filter {
    fn accepts(self, h: &NumericalSemigroup, class: Classification) -> bool {
        match self {
            Filter::All => true,
            Filter::Gorenstein => class.is_gorenstein(),
            Filter::Agl => class.is_agl(),
            Filter::TwoAgl => class == Classification::TwoAgl,
            Filter::RankAtLeast3 => class.rank() >= 3,
            Filter::MinimalMultiplicity => h.has_minimal_multiplicity(),
        }
    }
}

#[derive(Serialize)]
struct EnumeratedJson<'a> {
    gens: &'a [i64],
    genus: usize,
    f: i64,
    class: Classification,
}

#[derive(Serialize)]
struct ComparisonJson {
    invariant: &'static str,
    expected: String,
    observed: String,
    holds: bool,
}

#[derive(Serialize)]
struct ConstructJson {
    family: &'static str,
    params: String,
    gens: Vec<i64>,
    predictions: Vec<ComparisonJson>,
}

/// Parses `args` (program name first) and runs the command.
pub fn run_from<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => match execute(cli.command, out) {
            Ok(code) => code,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_USAGE
            }
        },
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            code
        }
    }
}

fn semigroup_arg(text: &str) -> Result<Arc<NumericalSemigroup>> {
    let gens = parse_generators(text)?;
    Ok(Arc::new(NumericalSemigroup::from_generators(&gens)?))
}

fn io(e: std::io::Error) -> Error {
    Error::Precondition(if e.kind() == std::io::ErrorKind::BrokenPipe {
        "output closed"
    } else {
        "could not write output"
    })
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Analyze { gens, json, parameter, horizon } => {
            let h = semigroup_arg(&gens)?;
            let opts = DossierOptions { horizon, parameter };
            let d = InvariantDossier::compute_with(&h, opts)?;
            if json {
                let line = serde_json::to_string(&d.to_json()).expect("serializable");
                writeln!(out, "{line}").map_err(io)?;
            } else {
                write!(out, "{}", d.render_text()).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Enumerate { genus_max, filter, json } => {
            let all: Vec<_> = enumerate_by_genus(genus_max).collect();
            let classes: Vec<Result<Classification>> = all.par_iter().map(|h| classify(h)).collect();
            let mut shown = 0usize;
            for (h, class) in all.iter().zip(classes) {
                let class = class?;
                if !filter.accepts(h, class) {
                    continue;
                }
                shown += 1;
                if json {
                    let row = EnumeratedJson {
                        gens: h.minimal_generators(),
                        genus: h.genus(),
                        f: h.frobenius(),
                        class,
                    };
                    writeln!(out, "{}", serde_json::to_string(&row).expect("serializable")).map_err(io)?;
                } else {
                    writeln!(out, "{h}\tg={}\tf={}\t{class}", h.genus(), h.frobenius()).map_err(io)?;
                }
            }
            if !json {
                writeln!(out, "{shown} of {} semigroups", all.len()).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { suite, genus_max, f_max, max_multiplicity, n_max, workers, json } => {
            let suite: Suite = suite.parse()?;
            let mut bounds = CorpusBounds::default();
            if let Some(g) = genus_max {
                bounds.genus_max = g;
            }
            if let Some(f) = f_max {
                bounds.f_max = f;
            }
            if max_multiplicity.is_some() {
                bounds.max_multiplicity = max_multiplicity;
            }
            if let Some(n) = n_max {
                bounds.n_max = n;
            }
            bounds.workers = workers;
            let report = run_suite(suite, &bounds)?;
            let text = if json { report.to_json_lines() } else { report.render_text() };
            write!(out, "{text}").map_err(io)?;
            Ok(if report.passed() { EXIT_OK } else { EXIT_VIOLATIONS })
        }
        Command::Construct { family, seed, e, n, c, json } => {
            let kind = FamilyKind::from_tag(&family)?;
            let seed = seed.as_deref().map(parse_generators).transpose()?;
            let params = FamilyParams { seed, e, n, c };
            let instance = construct(kind, &params)?;
            let comparisons = instance.check()?;
            let ok = comparisons.iter().all(|c| c.holds());
            if json {
                let row = ConstructJson {
                    family: kind.tag(),
                    params: params.to_string(),
                    gens: instance.semigroup.minimal_generators().to_vec(),
                    predictions: comparisons
                        .iter()
                        .map(|c| ComparisonJson {
                            invariant: c.invariant.name(),
                            expected: c.expected.to_string(),
                            observed: c.observed.to_string(),
                            holds: c.holds(),
                        })
                        .collect(),
                };
                writeln!(out, "{}", serde_json::to_string(&row).expect("serializable")).map_err(io)?;
            } else {
                writeln!(out, "{} {params}: {}", kind.tag(), instance.semigroup).map_err(io)?;
                for c in &comparisons {
                    let mark = if c.holds() { "ok  " } else { "FAIL" };
                    writeln!(
                        out,
                        "  {mark} {:<22} predicted {:<24} observed {}",
                        c.invariant.name(),
                        c.expected.to_string(),
                        c.observed
                    )
                    .map_err(io)?;
                }
            }
            Ok(if ok { EXIT_OK } else { EXIT_VIOLATIONS })
        }
    }
}
