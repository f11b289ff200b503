//! Lax labeled circles: cocartesian lifts, reflections and the property run.

use paracycle::adjunction::{OneCell, Sign};
use paracycle::circle::{merge_points, Angle, CircleConfig};
use paracycle::laxfact::{
    classify, cocartesian_lift, factor_through_plus_reflection, is_cocartesian, plus_reflection, property_report,
    LaxObject,
};

fn main() -> paracycle::Result<()> {
    let c = CircleConfig::from_angles([0, 1, 2].map(|k| Angle::new(k.into(), 3.into())))?;
    let o = LaxObject::new(
        c.clone(),
        vec![Sign::Plus, Sign::Minus, Sign::Plus],
        vec![OneCell::new(Sign::Plus, Sign::Minus, 1), OneCell::new(Sign::Minus, Sign::Plus, 1), OneCell::identity(Sign::Plus)],
    )?;
    println!("{o}");
    println!("{:?}", classify(&o));

    let lift = cocartesian_lift(&o, &merge_points(&c, 0)?)?;
    println!("merge lift: {} (cocartesian: {})", lift.dst(), is_cocartesian(&lift));

    let (reflected, unit) = plus_reflection(&o)?;
    println!("plus reflection: {reflected}; unit cocartesian: {}", is_cocartesian(&unit));
    let through = factor_through_plus_reflection(&lift)?;
    println!("merge factored through the reflection lands in {}", through.dst());

    let report = property_report(0, 200, 100)?;
    println!(
        "200 objects, 100 morphisms: core properties {}, {} morphisms leave the unit image",
        if report.core_passed() { "hold" } else { "fail" },
        report.unit_image_exits
    );
    Ok(())
}
