//! Corpus enumeration and theorem-verification suites.
//!
//! A suite evaluates one family of properties over a corpus (all semigroups
//! up to a genus, three-generated semigroups up to a Frobenius number, or a
//! fixed list of seeds for a construction) and records every violation.
//! Per-item work runs on a rayon pool; results are merged in corpus order so
//! reports do not depend on the worker count.

mod enumerate;
mod suites;

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use enumerate::{
    counts_by_genus, enumerate_by_genus, enumerate_three_generated, genus_tree_children,
    GenusEnumeration,
};

use crate::classify::Classification;
use crate::error::{Error, Result};

/// Named verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    /// Seven characterizations of rank 2 agree.
    Thm14,
    /// Rank, reduction number, blowup and `e1` do not depend on the
    /// reduction parameter; the three rank formulas agree.
    Thm23Invariance,
    /// Conductor, colon and AGL identities.
    Prop24,
    /// `K : M` versus `K^2`, and the type of `R/c`.
    Cor25,
    /// Structure of `S/K`, `K/R` and `S/R` for rank 2.
    Prop27,
    /// Type-2 criterion.
    Prop36,
    /// Multiplicity-3 criterion.
    Prop37,
    /// `B = M : M` under minimal multiplicity.
    Thm62,
    /// Sufficient condition for rank 2 with free `K/R` via `B`.
    FinalThm,
    /// `3a ∈ H` and `f = 2a + a_i` for type 2.
    Thm72,
    /// Herzog exponents, degree identities and the matrix criterion.
    Thm74,
    /// `ℓ(K/R) = αβγ`.
    Prop75,
    /// Parametric families for multiplicities 3, 4 and 5.
    Cor77,
    /// Freeness of `K/R` via pseudo-Frobenius pairs.
    Prop79,
    /// Apéry-shift construction predictions.
    Thm710,
    /// Internals of the Apéry-shift construction.
    Claims711712,
    /// Idealization invariants.
    Prop4142,
    /// Closed forms of the Hilbert function for rank 1 and rank 2.
    Hilbert,
}

impl Suite {
    pub const ALL: [Suite; 18] = [
        Suite::Thm14,
        Suite::Thm23Invariance,
        Suite::Prop24,
        Suite::Cor25,
        Suite::Prop27,
        Suite::Prop36,
        Suite::Prop37,
        Suite::Thm62,
        Suite::FinalThm,
        Suite::Thm72,
        Suite::Thm74,
        Suite::Prop75,
        Suite::Cor77,
        Suite::Prop79,
        Suite::Thm710,
        Suite::Claims711712,
        Suite::Prop4142,
        Suite::Hilbert,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Thm14 => "thm14",
            Suite::Thm23Invariance => "thm23-invariance",
            Suite::Prop24 => "prop24",
            Suite::Cor25 => "cor25",
            Suite::Prop27 => "prop27",
            Suite::Prop36 => "prop36",
            Suite::Prop37 => "prop37",
            Suite::Thm62 => "thm62",
            Suite::FinalThm => "finalthm",
            Suite::Thm72 => "thm72",
            Suite::Thm74 => "thm74",
            Suite::Prop75 => "prop75",
            Suite::Cor77 => "cor77",
            Suite::Prop79 => "prop79",
            Suite::Thm710 => "thm710",
            Suite::Claims711712 => "claims711-712",
            Suite::Prop4142 => "prop41-42",
            Suite::Hilbert => "hilbert",
        }
    }

    pub fn corpus_kind(self) -> CorpusKind {
        match self {
            Suite::Thm74 | Suite::Prop75 | Suite::Cor77 => CorpusKind::ThreeGenerated,
            Suite::Thm710 | Suite::Claims711712 => CorpusKind::Seeds,
            _ => CorpusKind::Genus,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusKind {
    /// Every semigroup of genus `<= genus_max`.
    Genus,
    /// Non-symmetric three-generated semigroups with `f <= f_max`.
    ThreeGenerated,
    /// Symmetric seeds, `e` among their first three nonzero members and
    /// `n = 0..=n_max`.
    Seeds,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusBounds {
    pub genus_max: usize,
    pub f_max: i64,
    /// Restricts three-generated corpora by multiplicity.
    pub max_multiplicity: Option<i64>,
    pub seeds: Vec<Vec<i64>>,
    pub n_max: i64,
    /// Worker threads; `None` uses the global rayon pool.
    pub workers: Option<usize>,
}

impl Default for CorpusBounds {
    fn default() -> Self {
        CorpusBounds {
            genus_max: 20,
            f_max: 200,
            max_multiplicity: None,
            seeds: vec![vec![2, 3], vec![3, 4], vec![3, 5], vec![4, 5]],
            n_max: 6,
            workers: None,
        }
    }
}

impl CorpusBounds {
    pub fn describe(&self, kind: CorpusKind) -> String {
        match kind {
            CorpusKind::Genus => format!("genus<={}", self.genus_max),
            CorpusKind::ThreeGenerated => match self.max_multiplicity {
                Some(m) => format!("3-generated non-symmetric f<={} e<={m}", self.f_max),
                None => format!("3-generated non-symmetric f<={}", self.f_max),
            },
            CorpusKind::Seeds => {
                let seeds: Vec<String> = self
                    .seeds
                    .iter()
                    .map(|s| {
                        let g: Vec<String> = s.iter().map(i64::to_string).collect();
                        format!("⟨{}⟩", g.join(","))
                    })
                    .collect();
                format!("seeds {} n<={}", seeds.join(" "), self.n_max)
            }
        }
    }
}

/// One failed property on one corpus member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub gens: Vec<i64>,
    pub property: String,
    pub observed: String,
    pub expected: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.gens.iter().map(i64::to_string).collect();
        write!(
            f,
            "⟨{}⟩ {}: observed {}, expected {}",
            g.join(","),
            self.property,
            self.observed,
            self.expected
        )
    }
}

/// Result of checking one corpus member.
#[derive(Debug, Clone, Default)]
pub(crate) struct Outcome {
    pub genus: usize,
    pub class: Option<Classification>,
    /// Whether the suite's hypotheses held, for conditional suites.
    pub applicable: bool,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub suite: Suite,
    pub corpus: String,
    pub total: usize,
    /// Members on which the suite's hypotheses held.
    pub applicable: usize,
    pub violations: Vec<Violation>,
    /// `genus -> class -> count`.
    pub class_counts: BTreeMap<usize, BTreeMap<Classification, usize>>,
    pub elapsed: Duration,
}

/// Footer line of the JSON-lines report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportSummary {
    pub suite: String,
    pub corpus: String,
    pub total: usize,
    pub applicable: usize,
    pub violations: usize,
    pub counts: BTreeMap<usize, BTreeMap<Classification, usize>>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> ReportSummary {
        ReportSummary {
            suite: self.suite.name().to_string(),
            corpus: self.corpus.clone(),
            total: self.total,
            applicable: self.applicable,
            violations: self.violations.len(),
            counts: self.class_counts.clone(),
        }
    }

    /// One JSON object per violation, then the summary footer.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for v in &self.violations {
            out.push_str(&serde_json::to_string(v).expect("serializable"));
            out.push('\n');
        }
        out.push_str(&serde_json::to_string(&self.summary()).expect("serializable"));
        out.push('\n');
        out
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for v in &self.violations {
            let _ = writeln!(out, "VIOLATION {v}");
        }
        let _ = writeln!(
            out,
            "suite {} over {}: {} checked, {} applicable, {} violations ({:.2?})",
            self.suite,
            self.corpus,
            self.total,
            self.applicable,
            self.violations.len(),
            self.elapsed
        );
        for (genus, counts) in &self.class_counts {
            let parts: Vec<String> = counts.iter().map(|(c, n)| format!("{c}={n}")).collect();
            let _ = writeln!(out, "  genus {genus:>3}: {}", parts.join(" "));
        }
        out
    }
}

fn in_pool<T: Send>(workers: Option<usize>, job: impl FnOnce() -> T + Send) -> Result<T> {
    match workers {
        None => Ok(job()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|_| Error::Precondition("could not start worker pool"))?;
            Ok(pool.install(job))
        }
    }
}

/// Runs `suite` over the corpus described by `bounds`.
pub fn run_suite(suite: Suite, bounds: &CorpusBounds) -> Result<VerificationReport> {
    let start = Instant::now();
    let kind = suite.corpus_kind();
    let outcomes = in_pool(bounds.workers, || suites::run(suite, bounds))??;

    let mut report = VerificationReport {
        suite,
        corpus: bounds.describe(kind),
        total: outcomes.len(),
        applicable: 0,
        violations: Vec::new(),
        class_counts: BTreeMap::new(),
        elapsed: Duration::ZERO,
    };
    for o in outcomes {
        report.applicable += usize::from(o.applicable);
        if let Some(class) = o.class {
            *report
                .class_counts
                .entry(o.genus)
                .or_default()
                .entry(class)
                .or_default() += 1;
        }
        report.violations.extend(o.violations);
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// [`run_suite`] by suite name.
pub fn run_suite_named(name: &str, bounds: &CorpusBounds) -> Result<VerificationReport> {
    run_suite(name.parse()?, bounds)
}

pub(crate) fn par_outcomes<T: Sync>(items: &[T], check: impl Fn(&T) -> Outcome + Sync + Send) -> Vec<Outcome> {
    items.par_iter().map(check).collect()
}
