//! Poincaré duality and the hom `Z`-action on the paracyclic category.

use paracycle::paracyclic::{dual_translation, enumerate_maps, ParaMap, ParaObj};

fn main() -> paracycle::Result<()> {
    let (two, three) = (ParaObj::new(2)?, ParaObj::new(3)?);
    let f = ParaMap::new(two, three, vec![0, 2])?;
    let dual = f.poincare_dual();
    println!("f = {:?}, f^∨ = {:?}", f.values(), dual.values());

    // The double dual agrees with f up to the translation x ↦ x - 1.
    let dd = dual.poincare_dual();
    println!("f^∨∨ = {:?}", dd.values());
    assert_eq!(dd.compose(&dual_translation(two))?, dual_translation(three).compose(&f)?);

    for r in -1..=1 {
        println!("z^{r}·f = {:?}", f.z_action(r).values());
    }

    let (surj, inj) = f.surj_inj_factorize();
    println!("f = {:?} ∘ {:?}", inj.values(), surj.values());

    let maps = enumerate_maps(two, two, 1);
    println!("{} maps [2] → [2] with offset ≤ 1", maps.len());
    Ok(())
}
