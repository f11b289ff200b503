//! The walking adjunction: one-cells are alternating words, two-cells are
//! monotone maps between their regions.

use paracycle::adjunction::{counit_eps, enumerate_two_cells, triangle_check, unit_eta, OneCell, Sign, TwoCell};

fn main() -> paracycle::Result<()> {
    let (l, r) = (OneCell::left(), OneCell::right());
    let rl = r.compose(&l)?;
    println!("L = {l}, R = {r}, RL = {rl}");

    let (eta, eps) = (unit_eta(), counit_eps());
    println!("η: {} ⇒ {}", eta.src(), eta.dst());
    println!("ε: {} ⇒ {}", eps.src(), eps.dst());
    println!("triangles: {:?}", triangle_check()?);

    // The monad RL and its multiplication RLRL ⇒ RL.
    let rlrl = rl.compose(&rl)?;
    let mu = TwoCell::identity(r).hcompose(&eps.hcompose(&TwoCell::identity(l))?)?;
    assert_eq!((mu.src(), mu.dst()), (rlrl, rl));

    for blocks in 0..=3 {
        let cell = OneCell::new(Sign::Minus, Sign::Minus, blocks);
        let endo = enumerate_two_cells(cell, cell).len();
        println!("{} has {endo} endomorphisms", cell);
    }
    Ok(())
}
