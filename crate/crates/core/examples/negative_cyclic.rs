//! Truncated negative cyclic homology and the lifted unit of `End(V)`.

use paracycle::hochschild::{hc_minus_truncated, lift_unit_and_trace, reliable_min_degree, AlgebraSC};
use paracycle::matcat::{canonical_duality, Ring};

fn main() -> paracycle::Result<()> {
    let weight = 3;
    let degrees: Vec<i64> = (reliable_min_degree(weight)..=1).rev().collect();
    for spec in ["matrix:1", "truncpoly:2"] {
        let a = AlgebraSC::from_spec(spec, Ring::Rationals)?;
        let dims = hc_minus_truncated(&a, weight, &degrees)?;
        println!("{spec}, weight {weight}, degrees {degrees:?}: {dims:?}");
    }

    match hc_minus_truncated(&AlgebraSC::ground(Ring::Rationals), 2, &[-3]) {
        Err(e) => println!("{e}"),
        Ok(_) => unreachable!(),
    }

    for d in 1..=3 {
        let class = lift_unit_and_trace(&canonical_duality(d, Ring::Rationals)?, 2)?;
        println!("V of dimension {d}: lifted unit traces to {}", class.trace);
    }
    Ok(())
}
