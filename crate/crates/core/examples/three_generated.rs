//! Exponent matrices of non-symmetric three-generated semigroups and the
//! numeric 2-AGL criteria that come with them.

use std::sync::Arc;

use twoagl::classify::classify;
use twoagl::threegen::{
    corollary77_classify, direct_kr_length, herzog_matrix, is_two_agl_via_74, Cor77Family,
};
use twoagl::NumericalSemigroup;

fn main() -> twoagl::Result<()> {
    for gens in [[3, 7, 8], [4, 5, 11], [5, 13, 22], [5, 9, 12], [7, 9, 10]] {
        let h = Arc::new(NumericalSemigroup::from_generators(&gens)?);
        let data = herzog_matrix(&h)?;
        let verdict = is_two_agl_via_74(&h)?;
        println!("{h}: {data}");
        println!(
            "  PF from degrees {:?}, ℓ(K/R) = αβγ = {} (direct {})",
            data.pseudo_frobenius(),
            data.kr_length(),
            direct_kr_length(&h)?
        );
        println!(
            "  matrix verdict 2-AGL = {}, direct class {}, family {:?}",
            verdict.two_agl,
            classify(&h)?,
            corollary77_classify(&h).map(|m| (m.family.tag(), m.c))
        );
    }

    // Members of the parametric families.
    for family in Cor77Family::ALL {
        let members: Vec<String> = (0..12)
            .filter_map(|c| family.generators(c))
            .take(4)
            .map(|mut g| {
                g.sort_unstable();
                format!("{g:?}")
            })
            .collect();
        println!("{}: {}", family.tag(), members.join(" "));
    }

    match herzog_matrix(&NumericalSemigroup::from_generators(&[4, 6, 7])?) {
        Err(e) => println!("⟨4,6,7⟩: {e}"),
        Ok(d) => println!("unexpected {d}"),
    }
    Ok(())
}
