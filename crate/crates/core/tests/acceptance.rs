//! The eight acceptance criteria, one PASS/FAIL line each. Exits non-zero
//! if any criterion fails.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use twoagl::classify::{classify, Classification, InvariantDossier};
use twoagl::corpus::{enumerate_by_genus, enumerate_three_generated, run_suite, CorpusBounds, Suite};
use twoagl::ideal::{canonical_from_gap_duality, canonical_from_pseudo_frobenius, RelativeIdeal};
use twoagl::NumericalSemigroup;

type Outcome = Result<String, String>;

fn sg(gens: &[i64]) -> Arc<NumericalSemigroup> {
    Arc::new(NumericalSemigroup::from_generators(gens).unwrap())
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T, fails: &mut Vec<String>) {
    if got != want {
        fails.push(format!("{what}: got {got:?}, want {want:?}"));
    }
}

fn verdict(fails: Vec<String>, ok: String) -> Outcome {
    if fails.is_empty() {
        Ok(ok)
    } else {
        Err(fails.join("; "))
    }
}

fn suite_clean(suite: Suite, bounds: &CorpusBounds, fails: &mut Vec<String>) -> (usize, usize, Duration) {
    let report = run_suite(suite, bounds).unwrap();
    for v in report.violations.iter().take(5) {
        fails.push(format!("{suite}: {v}"));
    }
    if report.violations.len() > 5 {
        fails.push(format!("{suite}: {} violations in total", report.violations.len()));
    }
    (report.total, report.applicable, report.elapsed)
}

fn b_gens(d: &InvariantDossier) -> Vec<i64> {
    d.b_semigroup.as_ref().unwrap().minimal_generators().to_vec()
}

fn decomposition(d: &InvariantDossier) -> Option<(usize, usize)> {
    d.decomposition.map(|x| (x.free_rank, x.socle_count))
}

fn criterion1() -> Outcome {
    let mut fails = Vec::new();
    let start = Instant::now();

    let h = sg(&[3, 7, 8]);
    let d = InvariantDossier::compute(&h).unwrap();
    expect("⟨3,7,8⟩ class", d.classification, Classification::TwoAgl, &mut fails);
    expect("⟨3,7,8⟩ PF", h.pseudo_frobenius().to_vec(), vec![4, 5], &mut fails);
    expect("⟨3,7,8⟩ rank", d.sally_rank, 2, &mut fails);
    let six_up = RelativeIdeal::from_members(&h, &[], 6).unwrap();
    expect("⟨3,7,8⟩ conductor", d.conductor_c(), &six_up, &mut fails);
    expect("⟨3,7,8⟩ conductor min", d.conductor_c().min(), 6, &mut fails);
    expect("⟨3,7,8⟩ B", b_gens(&d), vec![3, 4, 5], &mut fails);
    expect("⟨3,7,8⟩ B class", d.b_classification, Some(Classification::Agl), &mut fails);
    expect("⟨3,7,8⟩ decomposition", decomposition(&d), Some((1, 0)), &mut fails);

    let h = sg(&[5, 7, 9, 13]);
    let d = InvariantDossier::compute(&h).unwrap();
    expect("⟨5,7,9,13⟩ class", d.classification, Classification::TwoAgl, &mut fails);
    expect("⟨5,7,9,13⟩ type", d.type_r, 2, &mut fails);
    let s = d.blowup_s().to_semigroup().unwrap();
    expect("⟨5,7,9,13⟩ S", s.minimal_generators().to_vec(), vec![3, 5, 7], &mut fails);
    let b = d.b_semigroup.clone().unwrap();
    expect("⟨5,7,9,13⟩ B", b.minimal_generators().to_vec(), vec![5, 7, 8, 9, 11], &mut fails);
    expect("⟨5,7,9,13⟩ B class", d.b_classification, Some(Classification::Agl), &mut fails);
    expect("⟨5,7,9,13⟩ B multiplicity", b.multiplicity(), 5, &mut fails);
    expect("⟨5,7,9,13⟩ B minimal multiplicity", b.has_minimal_multiplicity(), true, &mut fails);
    expect("⟨5,7,9,13⟩ K/R ≅ R/c", decomposition(&d), Some((1, 0)), &mut fails);

    let h = sg(&[4, 9, 11, 14]);
    let d = InvariantDossier::compute(&h).unwrap();
    expect("⟨4,9,11,14⟩ class", d.classification, Classification::TwoAgl, &mut fails);
    expect("⟨4,9,11,14⟩ minimal multiplicity", d.minimal_multiplicity, true, &mut fails);
    expect("⟨4,9,11,14⟩ e", h.multiplicity(), 4, &mut fails);
    expect("⟨4,9,11,14⟩ ℓ(K/R)", d.len_k_mod_r, 3, &mut fails);
    expect("⟨4,9,11,14⟩ decomposition", decomposition(&d), Some((1, 1)), &mut fails);
    expect("⟨4,9,11,14⟩ B", b_gens(&d), vec![4, 5, 7], &mut fails);

    let h = sg(&[4, 7, 9, 10]);
    let d = InvariantDossier::compute(&h).unwrap();
    expect("⟨4,7,9,10⟩ class", d.classification, Classification::TwoAgl, &mut fails);
    expect("⟨4,7,9,10⟩ type", d.type_r, 3, &mut fails);
    expect("⟨4,7,9,10⟩ decomposition", decomposition(&d), Some((1, 1)), &mut fails);
    expect("⟨4,7,9,10⟩ B", b_gens(&d), vec![3, 4, 5], &mut fails);

    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(4) {
        fails.push(format!("took {elapsed:.2?}"));
    }
    verdict(fails, format!("4 paper vectors reproduced in {elapsed:.2?}"))
}

fn criterion2() -> Outcome {
    let mut fails = Vec::new();
    let bounds = CorpusBounds { genus_max: 20, ..CorpusBounds::default() };
    let (total, applicable, elapsed) = suite_clean(Suite::Thm14, &bounds, &mut fails);
    if elapsed > Duration::from_secs(300) {
        fails.push(format!("runtime {elapsed:.2?} over 5 minutes"));
    }
    verdict(fails, format!("{total} semigroups, {applicable} rank 2, 0 violations in {elapsed:.2?}"))
}

fn criterion3() -> Outcome {
    let mut fails = Vec::new();
    let bounds = CorpusBounds { genus_max: 15, ..CorpusBounds::default() };
    let (total, _, _) = suite_clean(Suite::Thm23Invariance, &bounds, &mut fails);
    verdict(fails, format!("{total} semigroups, 3 parameters each, 3 rank routes agree"))
}

fn criterion4() -> Outcome {
    let mut fails = Vec::new();
    let bounds = CorpusBounds { genus_max: 15, ..CorpusBounds::default() };
    let (_, applicable, _) = suite_clean(Suite::Hilbert, &bounds, &mut fails);
    verdict(fails, format!("{applicable} rank <= 2 semigroups match the closed forms for n <= 6"))
}

fn criterion5() -> Outcome {
    let mut fails = Vec::new();
    let all = CorpusBounds { f_max: 200, ..CorpusBounds::default() };
    let (total, _, _) = suite_clean(Suite::Thm74, &all, &mut fails);
    suite_clean(Suite::Prop75, &all, &mut fails);
    let low = CorpusBounds { max_multiplicity: Some(5), ..all.clone() };
    let (_, matched, _) = suite_clean(Suite::Cor77, &low, &mut fails);
    let mult4: Vec<_> = enumerate_three_generated(200, true)
        .into_iter()
        .filter(|h| h.multiplicity() == 4)
        .collect();
    if mult4.is_empty() {
        fails.push("multiplicity-4 slice is empty".into());
    }
    for h in &mult4 {
        if classify(h).unwrap() == Classification::TwoAgl {
            fails.push(format!("{h} has multiplicity 4 and is 2-AGL"));
        }
    }
    verdict(
        fails,
        format!("{total} triples; {matched} of multiplicity 3-5 ({} of multiplicity 4)", mult4.len()),
    )
}

fn criterion6() -> Outcome {
    let mut fails = Vec::new();
    let bounds = CorpusBounds { n_max: 6, ..CorpusBounds::default() };
    let report = run_suite(Suite::Thm710, &bounds).unwrap();
    let total = report.total;
    let (e2, other): (Vec<_>, Vec<_>) = report.violations.iter().partition(|v| v.property.contains(" e=2 "));
    if !report.violations.is_empty() {
        fails.push(format!(
            "{} violations, {} with e = 2 and {} with e >= 3",
            report.violations.len(),
            e2.len(),
            other.len()
        ));
    }
    for v in e2.iter().take(3).chain(other.iter().take(3)) {
        fails.push(format!("thm710: {v}"));
    }
    suite_clean(Suite::Claims711712, &bounds, &mut fails);
    verdict(fails, format!("{total} instances match every prediction"))
}

fn criterion7() -> Outcome {
    let mut fails = Vec::new();
    let bounds = CorpusBounds { genus_max: 15, ..CorpusBounds::default() };
    let (_, mm, _) = suite_clean(Suite::Thm62, &bounds, &mut fails);
    let (_, hyp, _) = suite_clean(Suite::FinalThm, &bounds, &mut fails);
    if hyp == 0 {
        fails.push("sufficient-condition hypotheses never hold".into());
    }
    verdict(fails, format!("{mm} minimal-multiplicity members; hypotheses hold {hyp} times"))
}

/// Gap sets of genus <= 8 by filtering subsets of [1, 15]: a set of gaps
/// is valid when the sum of two non-gaps is never a gap.
fn brute_force_gap_sets(g_max: usize) -> Vec<BTreeSet<i64>> {
    let top = 2 * g_max as i64 - 1;
    let mut out = Vec::new();
    for mask in 0u32..(1 << top.max(0)) {
        if mask.count_ones() as usize > g_max {
            continue;
        }
        let gap = |z: i64| z >= 1 && z <= top && mask >> (z - 1) & 1 == 1;
        let closed = (1..=top).all(|a| {
            gap(a) || (1..=top - a).all(|b| gap(b) || !gap(a + b))
        });
        if closed {
            out.push((1..=top).filter(|&z| gap(z)).collect());
        }
    }
    out
}

fn criterion8() -> Outcome {
    let mut fails = Vec::new();
    let mut brute = brute_force_gap_sets(8);
    let mut fast: Vec<BTreeSet<i64>> = enumerate_by_genus(8)
        .map(|h| h.gaps().iter().copied().collect())
        .collect();
    let fast_len = fast.len();
    brute.sort();
    fast.sort();
    fast.dedup();
    if fast.len() != fast_len {
        fails.push("enumeration repeats a semigroup".into());
    }
    let count = |sets: &[BTreeSet<i64>]| {
        let mut c = vec![0usize; 9];
        for s in sets {
            c[s.len()] += 1;
        }
        c
    };
    expect("counts by genus", count(&fast), count(&brute), &mut fails);
    expect("gap sets", fast == brute, true, &mut fails);

    let mut members = 0usize;
    for h in enumerate_by_genus(20) {
        members += 1;
        if canonical_from_pseudo_frobenius(&h) != canonical_from_gap_duality(&h) {
            fails.push(format!("{h}: canonical ideal routes differ"));
        }
    }
    verdict(
        fails,
        format!("counts {:?} match; both canonical constructions agree on {members} semigroups", count(&brute)),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("paper vectors", criterion1),
        ("rank-2 characterizations agree, genus <= 20", criterion2),
        ("rank formulas agree and are parameter-invariant, genus <= 15", criterion3),
        ("Hilbert closed forms, genus <= 15", criterion4),
        ("three-generated sweep, f <= 200", criterion5),
        ("Apéry-shift construction", criterion6),
        ("B-algebra and sufficient condition, genus <= 15", criterion7),
        ("oracle equivalence", criterion8),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of 8 criteria passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
