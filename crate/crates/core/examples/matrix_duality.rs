//! Duality data on exact free modules and evaluation of words in `V`, `V^∨`.

use paracycle::matcat::{canonical_duality, dimension_scalar, symmetry, Letter, Ring, WordEvaluator};

fn main() -> paracycle::Result<()> {
    for ring in [Ring::Rationals, Ring::Integers, Ring::PrimeField(5)] {
        let data = canonical_duality(3, ring)?;
        println!("{ring}: zig-zags {:?}, dim {}", data.zigzags()?, dimension_scalar(&data)?);
    }

    let data = canonical_duality(2, Ring::Rationals)?;
    let words = WordEvaluator::new(&data);
    let word = [Letter::L];
    let (grown, eta) = words.insert_eta(&word, 1)?;
    println!("{word:?} → {grown:?} by a {}×{} matrix", eta.rows(), eta.cols());
    let (back, eps) = words.contract_eps(&grown, 0)?;
    println!("{grown:?} → {back:?}; zig-zag composite is identity: {}", eps.mul(&eta)?.is_identity());

    let swap = symmetry(Ring::Rationals, &[2, 2], &[1, 0])?;
    println!("V ⊗ V swap squares to identity: {}", swap.mul(&swap)?.is_identity());
    Ok(())
}
