//! Hilbert function of the canonical ideal I = a + K and graded Sally
//! lengths, compared with the closed forms for rank 1 and rank 2.

use std::sync::Arc;

use twoagl::classify::{Classification, DossierOptions};
use twoagl::{InvariantDossier, NumericalSemigroup};

fn main() -> twoagl::Result<()> {
    for gens in [vec![3, 4, 5], vec![3, 7, 8], vec![4, 7, 9, 10], vec![3, 5]] {
        let h = Arc::new(NumericalSemigroup::from_generators(&gens)?);
        let d = InvariantDossier::compute_with(&h, DossierOptions { horizon: 8, parameter: None })?;
        let (e0, len) = (d.e0, d.len_r_mod_i as i64);
        let closed: Vec<i64> = (0..=8i64)
            .map(|n| match d.classification {
                Classification::Gorenstein => e0 * (n + 1),
                Classification::Agl => {
                    let r = d.type_r as i64;
                    (r + len - 1) * (n + 1) - r
                }
                _ => e0 * (n + 1) - (e0 - len + 2),
            })
            .collect();
        println!("{h}: {}  a = {}  e0 = {e0}  e1 = {}", d.classification, d.chosen_a(), d.e1);
        println!("  ℓ(R/I^(n+1))   {:?}", d.hilbert_values);
        println!("  closed form    {:?}  (n ≥ 1)", &closed[1..]);
        println!("  ℓ(I^(n+1)/Q^n I) {:?}", d.sally_lengths);
    }

    // Another reduction parameter gives the same rank and e1.
    let h = Arc::new(NumericalSemigroup::from_generators(&[3, 7, 8])?);
    for a in [6, 7, 9] {
        let d = InvariantDossier::compute_with(&h, DossierOptions { horizon: 4, parameter: Some(a) })?;
        println!("a = {a}: rank {} e0 {} e1 {} red {}", d.sally_rank, d.e0, d.e1, d.reduction_number);
    }
    Ok(())
}
