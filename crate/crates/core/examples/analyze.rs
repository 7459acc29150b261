//! Full invariant dossier of one semigroup.
//!
//! cargo run --example analyze -- 5,7,9,13

use std::sync::Arc;

use twoagl::semigroup::parse_generators;
use twoagl::{InvariantDossier, NumericalSemigroup};

fn main() -> twoagl::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "3,7,8".into());
    let h = Arc::new(NumericalSemigroup::from_generators(&parse_generators(&arg)?)?);
    let d = InvariantDossier::compute(&h)?;
    print!("{}", d.render_text());
    println!("{}", serde_json::to_string_pretty(&d.to_json()).expect("serializable"));
    Ok(())
}
