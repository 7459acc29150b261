//! Constructions of 2-AGL semigroups with predicted invariants, checked
//! against the computed dossier.

use twoagl::families::{construct, FamilyKind, FamilyParams};

fn show(kind: FamilyKind, params: FamilyParams) -> twoagl::Result<()> {
    let inst = construct(kind, &params)?;
    let comparisons = inst.check()?;
    let failed = comparisons.iter().filter(|c| !c.holds()).count();
    println!("{} {params}: {}  ({} predictions, {failed} failed)", kind.tag(), inst.semigroup, comparisons.len());
    for c in comparisons.iter().filter(|c| !c.holds()) {
        println!("    {}: predicted {}, observed {}", c.invariant.name(), c.expected, c.observed);
    }
    Ok(())
}

fn main() -> twoagl::Result<()> {
    for n in 0..=3 {
        show(FamilyKind::AperyShift, FamilyParams { seed: Some(vec![3, 5]), e: Some(5), n: Some(n), c: None })?;
    }
    for c in [4, 5, 7, 8] {
        show(FamilyKind::MultiplicityThree, FamilyParams { c: Some(c), ..Default::default() })?;
    }
    for (e, n) in [(3, 2), (4, 2), (5, 3)] {
        show(FamilyKind::FreeQuotient, FamilyParams { e: Some(e), n: Some(n), ..Default::default() })?;
    }
    for e in 4..=7 {
        show(FamilyKind::NonFreeQuotient, FamilyParams { e: Some(e), ..Default::default() })?;
    }
    // With e = 2 the construction stays symmetric, so its predictions fail.
    show(FamilyKind::AperyShift, FamilyParams { seed: Some(vec![2, 3]), e: Some(2), n: Some(2), c: None })?;
    Ok(())
}
