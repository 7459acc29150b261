//! Structure of K/R for 2-AGL semigroups: the decomposition into copies of
//! R/c and R/m, the freeness criterion, the algebra B = m : m and the
//! idealization preview.

use std::sync::Arc;

use twoagl::classify::{
    b_algebra, classify, freeness_test, idealization_preview, kr_decomposition, Classification,
};
use twoagl::{InvariantDossier, NumericalSemigroup};

fn main() -> twoagl::Result<()> {
    for gens in [vec![3, 7, 8], vec![5, 7, 9, 13], vec![4, 9, 11, 14], vec![4, 7, 9, 10], vec![6, 13, 14, 15, 16]] {
        let h = Arc::new(NumericalSemigroup::from_generators(&gens)?);
        let d = InvariantDossier::compute(&h)?;
        println!("{h}: {}", d.classification);
        if d.classification == Classification::TwoAgl {
            let dec = kr_decomposition(&h)?;
            println!(
                "  K/R ≅ (R/c)^{} ⊕ (R/m)^{}  ℓ(K/R) = {}  free: {}",
                dec.free_rank,
                dec.socle_count,
                d.len_k_mod_r,
                freeness_test(&h)?
            );
        }
        let b = Arc::new(b_algebra(&h)?);
        let b_class = classify(&b)?;
        println!("  B = {b} ({b_class}), minimal multiplicity {}", b.has_minimal_multiplicity());
        let p = idealization_preview(&h)?;
        println!("  R ⋉ c: v = {}, e = {}, rank = {}", p.embedding_dimension, p.multiplicity, p.rank);
    }
    Ok(())
}
