//! Hochschild homology of small algebras over `Q`, `Z` and `F_p`.

use paracycle::hochschild::{describe, hh_ranks, trace_hh0, AlgebraSC};
use paracycle::matcat::{canonical_duality, Ring};

fn main() -> paracycle::Result<()> {
    for (spec, ring) in [
        ("matrix:2", Ring::Rationals),
        ("truncpoly:2", Ring::Rationals),
        ("truncpoly:3", Ring::Rationals),
        ("group:C2", Ring::Rationals),
        ("group:C2", Ring::Integers),
        ("group:C2", Ring::PrimeField(2)),
    ] {
        let a = AlgebraSC::from_spec(spec, ring)?;
        println!("{spec} over {ring}: {}", describe(&hh_ranks(&a, 3)?));
    }

    let t = trace_hh0(&canonical_duality(3, Ring::Rationals)?)?;
    println!("trace on HH_0(M_3): rank {} on a space of dimension {}", t.rank, t.hh0_dim);
    Ok(())
}
