//! Sally-module rank of a handful of semigroups, with the three rank
//! formulas side by side.

use std::sync::Arc;

use twoagl::classify::{classify, CanonicalSetup};
use twoagl::NumericalSemigroup;

fn main() -> twoagl::Result<()> {
    let samples: [&[i64]; 8] = [
        &[1],
        &[2, 3],
        &[3, 4, 5],
        &[3, 7, 8],
        &[4, 7, 9, 10],
        &[5, 7, 9, 13],
        &[4, 9, 11, 14],
        &[6, 13, 14, 15, 16],
    ];
    println!("{:<20} {:<10} ℓ(S/K) ℓ(R/c) e1-e0+ℓ(R/I)", "semigroup", "class");
    for gens in samples {
        let h = Arc::new(NumericalSemigroup::from_generators(gens)?);
        let class = classify(&h)?;
        if h.is_naturals() {
            println!("{:<20} {class}", h.to_string());
            continue;
        }
        let routes = CanonicalSetup::new(&h)?.rank_routes()?;
        println!(
            "{:<20} {:<10} {:>6} {:>6} {:>6}",
            h.to_string(),
            class.to_string(),
            routes[0],
            routes[1],
            routes[2]
        );
    }
    Ok(())
}
