//! Runs verification suites over small corpora and prints their reports.
//!
//! cargo run --release --example verify -- prop27 cor25

use twoagl::corpus::{run_suite, CorpusBounds, Suite};

fn main() -> twoagl::Result<()> {
    let names: Vec<String> = std::env::args().skip(1).collect();
    let suites: Vec<Suite> = if names.is_empty() {
        Suite::ALL.to_vec()
    } else {
        names.iter().map(|n| n.parse()).collect::<twoagl::Result<_>>()?
    };
    let bounds = CorpusBounds { genus_max: 12, f_max: 60, n_max: 4, ..CorpusBounds::default() };
    for suite in suites {
        let report = run_suite(suite, &bounds)?;
        let status = if report.passed() { "ok" } else { "VIOLATIONS" };
        println!(
            "{:<18} {:<10} {:>6} checked {:>6} applicable {:>4} violations  [{}]",
            suite.name(),
            status,
            report.total,
            report.applicable,
            report.violations.len(),
            report.corpus
        );
        for v in report.violations.iter().take(3) {
            println!("    {v}");
        }
    }
    Ok(())
}
