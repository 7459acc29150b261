//! Basic invariants: Frobenius number, gaps, pseudo-Frobenius numbers,
//! Apéry sets and symmetry.

use twoagl::NumericalSemigroup;

fn main() -> twoagl::Result<()> {
    for gens in [vec![3, 7, 8], vec![4, 6, 7], vec![5, 7, 9, 13], vec![6, 9, 20]] {
        let h = NumericalSemigroup::from_generators(&gens)?;
        let e = h.multiplicity();
        println!("{}", h.summary());
        println!("  gaps {:?}", h.gaps());
        println!("  PF {:?}  type {}  symmetric {}", h.pseudo_frobenius(), h.type_(), h.is_symmetric());
        println!("  Ap({e}) {:?}  minimal multiplicity {}", h.apery_set(e)?, h.has_minimal_multiplicity());
    }

    // Non-minimal and redundant generators are reduced.
    let h = NumericalSemigroup::from_generators(&[6, 4, 9, 8, 13])?;
    println!("⟨6,4,9,8,13⟩ = {h}");

    // A semigroup from its gap set.
    let h = NumericalSemigroup::from_gaps(&[1, 2, 3, 5, 6])?;
    println!("gaps {{1,2,3,5,6}} = {h}");

    match NumericalSemigroup::from_generators(&[4, 6, 10]) {
        Err(e) => println!("⟨4,6,10⟩: {e}"),
        Ok(h) => println!("unexpected {h}"),
    }
    Ok(())
}
