//! Relative ideal arithmetic: sums, colons, lengths, the canonical ideal and
//! its blowup.

use std::sync::Arc;

use twoagl::ideal::{canonical_from_gap_duality, canonical_from_pseudo_frobenius};
use twoagl::{canonical_ideal, NumericalSemigroup, RelativeIdeal};

fn main() -> twoagl::Result<()> {
    let h = Arc::new(NumericalSemigroup::from_generators(&[3, 7, 8])?);
    let r = RelativeIdeal::ring(&h);
    let m = RelativeIdeal::maximal(&h);
    println!("H = {h}");
    println!("R = {r}");
    println!("M = {m}");
    println!("M + M = {}", m.sum(&m)?);
    println!("M : M = {}", m.colon(&m)?);

    let k = canonical_ideal(&h)?;
    assert_eq!(canonical_from_pseudo_frobenius(&h), canonical_from_gap_duality(&h));
    println!("K = {k}  (generators {:?})", k.minimal_module_generators());
    for n in 1..=3 {
        let kn = k.power(n);
        println!("K^{n} = {kn}  ℓ(K^{n}/K) = {}", kn.length_quotient(&k)?);
    }
    let (s, red) = k.stabilize()?;
    println!("S = K^{red} = {s}, as a semigroup {}", s.to_semigroup()?);
    let c = r.colon(&s)?;
    println!("c = R : S = {c}");
    println!("ℓ(S/K) = {}  ℓ(R/c) = {}", s.length_quotient(&k)?, r.length_quotient(&c)?);

    // Ideals with negative members are fractional.
    let e = RelativeIdeal::from_offsets(&h, &[-2, 1])?;
    println!("E = {e}, E + K = {}, K : E = {}", e.sum(&k)?, k.colon(&e)?);
    println!("E as JSON: {}", serde_json::to_string(&e.to_json()).expect("serializable"));
    Ok(())
}
