//! Walks the genus tree and tallies the Sally-module rank per genus.
//!
//! cargo run --release --example enumerate -- 14

use std::collections::BTreeMap;

use rayon::prelude::*;
use twoagl::classify::{classify, Classification};
use twoagl::corpus::{counts_by_genus, enumerate_by_genus};

fn main() -> twoagl::Result<()> {
    let g_max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(12);
    println!("counts by genus: {:?}", counts_by_genus(g_max));

    let all: Vec<_> = enumerate_by_genus(g_max).collect();
    let classes = all.par_iter().map(|h| classify(h)).collect::<twoagl::Result<Vec<_>>>()?;
    let mut table: BTreeMap<usize, BTreeMap<Classification, usize>> = BTreeMap::new();
    for (h, class) in all.iter().zip(&classes) {
        *table.entry(h.genus()).or_default().entry(*class).or_default() += 1;
    }
    for (g, row) in &table {
        let cells: Vec<String> = row.iter().map(|(c, n)| format!("{c}={n}")).collect();
        println!("genus {g:>2}: {}", cells.join(" "));
    }
    Ok(())
}
