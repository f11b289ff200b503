//! Elementary moves of point configurations and their paracyclic maps.

use paracycle::circle::{
    from_para, insert_point, merge_points, rotation_morphism, Angle, CircleConfig, MONODROMY_SIGN,
};
use paracycle::matcat::format_scalar;
use paracycle::paracyclic::ParaMap;

fn angle(p: i64, q: i64) -> Angle {
    Angle::new(p.into(), q.into())
}

fn show(c: &CircleConfig) -> String {
    c.points().iter().map(format_scalar).collect::<Vec<_>>().join(" ")
}

fn main() -> paracycle::Result<()> {
    let c = CircleConfig::from_angles([angle(0, 1), angle(1, 3), angle(1, 2)])?;
    println!("{} points ↦ [{}]", c.len(), c.to_para().orbits());

    let merge = merge_points(&c, 1)?;
    println!("merge arc 1: {} → {}, map {:?}", show(&c), show(merge.dst()), merge.para_map().values());

    let insert = insert_point(&c, &angle(3, 4))?;
    println!("insert 3/4: map {:?}", insert.para_map().values());

    let quarter = rotation_morphism(&c, &angle(1, 4));
    println!("rotate by 1/4: {}, map {:?}", show(quarter.dst()), quarter.para_map().values());

    // A full turn acts on homs by the monodromy generator.
    let full = rotation_morphism(&c, &angle(1, 1));
    assert_eq!(*full.para_map(), ParaMap::identity(c.to_para()).z_action(MONODROMY_SIGN));
    println!("full turn: {:?}", full.para_map().values());

    assert_eq!(from_para(c.to_para()).to_para(), c.to_para());
    Ok(())
}
