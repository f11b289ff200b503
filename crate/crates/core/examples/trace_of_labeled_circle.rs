//! Traces of labeled circles and their invariance under moves.

use paracycle::circle::{merge_points, rotation_morphism, Angle, CircleConfig};
use paracycle::matcat::{canonical_duality, ExactMatrix, Ring};
use paracycle::trace::{classical_trace, transport, LabeledCircle};

fn main() -> paracycle::Result<()> {
    let ring = Ring::Rationals;
    let c = CircleConfig::from_angles([0, 1, 2].map(|k| Angle::new(k.into(), 3.into())))?;
    let labels = vec![
        ExactMatrix::from_i64_rows(ring, &[&[1, 2], &[0, 1]])?,
        ExactMatrix::from_i64_rows(ring, &[&[0, 1], &[1, 0]])?,
        ExactMatrix::from_i64_rows(ring, &[&[3, 0], &[1, -1]])?,
    ];
    let lc = LabeledCircle::new(c.clone(), canonical_duality(2, ring)?, labels.clone())?;
    println!("trace {} (dense route agrees: {})", lc.evaluate()?, lc.evaluate_checked().is_ok());
    println!("classical trace of the composite: {}", classical_trace(ring, &labels)?);

    let merged = transport(&lc, &merge_points(&c, 0)?)?;
    println!("after merging two arcs: {} arcs, trace {}", merged.labels().len(), merged.evaluate()?);

    let turned = transport(&lc, &rotation_morphism(&c, &Angle::new(1.into(), 5.into())))?;
    println!("after rotating by 1/5: trace {}", turned.evaluate()?);

    let id = LabeledCircle::identity(c, canonical_duality(4, ring)?);
    println!("identity labels on V of dimension 4: {}", id.evaluate()?);
    Ok(())
}
