//! The acceptance checks, runnable from the library and the command line.
//!
//! Every check is exact. Randomized checks draw from a `ChaCha8` stream
//! seeded by the caller, so a run is reproducible from its seed.

use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::adjunction::{enumerate_two_cells, triangle_check, OneCell, Sign, TwoCell};
use crate::circle::{from_para, random_move, rotation_morphism, Angle, CircleConfig, MONODROMY_SIGN};
use crate::hochschild::{hc_minus_truncated, hh_ranks, operators::relation_failures, AlgebraSC};
use crate::matcat::{canonical_duality, ExactMatrix, Ring, Scalar};
use crate::paracyclic::{dual_translation, enumerate_maps, ParaObj};
use crate::trace::{classical_trace, cyclic_invariance_check, transport, LabeledCircle};
use crate::{laxfact, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

fn timed(name: &str, f: impl FnOnce() -> Result<(bool, String)>) -> CheckResult {
    let start = Instant::now();
    let (passed, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
    CheckResult { name: name.to_string(), passed, detail, millis: start.elapsed().as_millis() }
}

/// A square matrix with entries in `-3..=3`.
pub fn random_matrix<R: Rng>(rng: &mut R, ring: Ring, d: usize) -> ExactMatrix {
    let rows = (0..d).map(|_| (0..d).map(|_| ring.from_i64(rng.gen_range(-3..=3))).collect()).collect();
    ExactMatrix::from_rows(ring, rows).expect("square and normalized")
}

/// `1..=max_points` distinct points on the grid `k/12`.
pub fn random_config<R: Rng>(rng: &mut R, max_points: usize) -> CircleConfig {
    let r = rng.gen_range(1..=max_points);
    let mut ticks: Vec<i64> = (0..12).collect();
    for i in 0..r {
        let j = rng.gen_range(i..12);
        ticks.swap(i, j);
    }
    CircleConfig::from_angles(ticks[..r].iter().map(|&k| Angle::new(k.into(), 12.into()))).expect("distinct points")
}

pub fn zigzags() -> CheckResult {
    timed("zig-zag identities", || {
        for ring in [Ring::Rationals, Ring::PrimeField(5)] {
            for d in 1..=6 {
                if canonical_duality(d, ring)?.zigzags()? != (true, true) {
                    return Ok((false, format!("d = {d} over {ring}")));
                }
            }
        }
        Ok((true, "d = 1..6 over Q and Fp:5".into()))
    })
}

/// Every subset of the grid `k/6` as a configuration.
fn grid_configs() -> Vec<CircleConfig> {
    (1u32..64)
        .map(|mask| {
            CircleConfig::from_angles((0..6).filter(|k| mask & (1 << k) != 0).map(|k| Angle::new(k.into(), 6.into())))
                .expect("nonempty subset")
        })
        .collect()
}

pub fn trace_is_dimension() -> CheckResult {
    timed("trace of identity is dimension", || {
        let configs = grid_configs();
        for d in 1..=4 {
            let data = canonical_duality(d, Ring::Rationals)?;
            for c in &configs {
                let value = LabeledCircle::identity(c.clone(), data.clone()).evaluate()?;
                if value != Scalar::from_integer(BigInt::from(d)) {
                    return Ok((false, format!("d = {d} on {c:?} gives {value}")));
                }
            }
        }
        Ok((true, format!("{} configurations, d = 1..4", configs.len())))
    })
}

pub fn presentation_independence(seed: u64, samples: usize) -> CheckResult {
    timed("presentation independence", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rotations: Vec<Angle> =
            (1..=12i64).flat_map(|q| (0..q).map(move |p| Angle::new(p.into(), q.into()))).collect();
        let mut transports = 0;
        for _ in 0..samples {
            let d = rng.gen_range(1..=4);
            let config = random_config(&mut rng, 6);
            let labels = (0..config.len()).map(|_| random_matrix(&mut rng, Ring::Rationals, d)).collect();
            let lc = LabeledCircle::new(config, canonical_duality(d, Ring::Rationals)?, labels)?;
            let value = lc.evaluate()?;
            for theta in &rotations {
                transports += 1;
                if transport(&lc, &rotation_morphism(lc.config(), theta))?.evaluate()? != value {
                    return Ok((false, format!("rotation by {theta} changes the trace")));
                }
            }
            let mut current = lc;
            for step in 0..5 {
                let mv = random_move(&mut rng, current.config(), 8);
                current = transport(&current, &mv)?;
                transports += 1;
                if current.evaluate()? != value {
                    return Ok((false, format!("move {step} changes the trace")));
                }
            }
        }
        Ok((true, format!("{samples} circles, {transports} transports")))
    })
}

pub fn cyclic_invariance(seed: u64, samples: usize) -> CheckResult {
    timed("cyclic invariance", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let (d, r) = (rng.gen_range(1..=4), rng.gen_range(1..=5));
            let labels: Vec<ExactMatrix> = (0..r).map(|_| random_matrix(&mut rng, Ring::Rationals, d)).collect();
            let data = canonical_duality(d, Ring::Rationals)?;
            let value = LabeledCircle::new(from_para(ParaObj::new(r)?), data.clone(), labels.clone())?.evaluate()?;
            if !cyclic_invariance_check(&data, &labels)? || value != classical_trace(Ring::Rationals, &labels)? {
                return Ok((false, format!("{r} labels of size {d}")));
            }
        }
        Ok((true, format!("{samples} random words")))
    })
}

pub fn paracyclic_laws() -> CheckResult {
    timed("paracyclic category laws", || {
        let objs: Vec<ParaObj> = (1..=3).map(ParaObj::new).collect::<Result<_>>()?;
        let mut count = 0u64;
        for &m in &objs {
            for &n in &objs {
                let fs = enumerate_maps(m, n, 2);
                for &k in &objs {
                    let gs = enumerate_maps(n, k, 2);
                    for f in &fs {
                        for g in &gs {
                            let gf = g.compose(f)?;
                            let dd = gf.poincare_dual().poincare_dual();
                            if dd.compose(&dual_translation(m))? != dual_translation(k).compose(&gf)? {
                                return Ok((false, format!("double dual fails for {gf:?}")));
                            }
                            if gf.poincare_dual() != f.poincare_dual().compose(&g.poincare_dual())? {
                                return Ok((false, format!("duality fails for {g:?} after {f:?}")));
                            }
                            for r in -2..=2 {
                                for s in -2..=2 {
                                    if g.z_action(r).compose(&f.z_action(s))? != gf.z_action(r + s) {
                                        return Ok((false, format!("equivariance fails for {g:?} after {f:?}")));
                                    }
                                }
                            }
                            for &l in &objs {
                                for h in enumerate_maps(k, l, 2) {
                                    count += 1;
                                    if h.compose(&gf)? != h.compose(g)?.compose(f)? {
                                        return Ok((false, format!("associativity fails for {h:?}, {g:?}, {f:?}")));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok((true, format!("{count} composable triples")))
    })
}

pub fn adjunction_laws() -> CheckResult {
    timed("walking adjunction laws", || {
        let signs = [Sign::Minus, Sign::Plus];
        let mut count = 0u64;
        for x in signs {
            for y in signs {
                for z in signs {
                    let firsts: Vec<OneCell> = (0..=2).map(|k| OneCell::new(x, y, k)).collect();
                    let seconds: Vec<OneCell> = (0..=2).map(|k| OneCell::new(y, z, k)).collect();
                    let chains = |cells: &[OneCell]| -> Vec<(TwoCell, TwoCell)> {
                        let mut out = Vec::new();
                        for &a in cells {
                            for &b in cells {
                                for &c in cells {
                                    for first in enumerate_two_cells(a, b) {
                                        for second in enumerate_two_cells(b, c) {
                                            out.push((first.clone(), second));
                                        }
                                    }
                                }
                            }
                        }
                        out
                    };
                    let alphas = chains(&firsts);
                    let betas = chains(&seconds);
                    for (alpha, alpha2) in &alphas {
                        for (beta, beta2) in &betas {
                            count += 1;
                            let lhs = beta2.vcompose(beta)?.hcompose(&alpha2.vcompose(alpha)?)?;
                            let rhs = beta2.hcompose(alpha2)?.vcompose(&beta.hcompose(alpha)?)?;
                            if lhs != rhs {
                                return Ok((false, format!("interchange fails on {x}{y}{z}")));
                            }
                        }
                    }
                }
            }
        }
        let triangles = triangle_check()?;
        Ok((triangles == (true, true), format!("{count} interchange instances, triangles {triangles:?}")))
    })
}

pub fn hochschild_ranks() -> CheckResult {
    timed("Hochschild homology", || {
        let dims = |a: &AlgebraSC, n: usize| -> Result<Vec<usize>> { Ok(hh_ranks(a, n)?.iter().map(|g| g.rank).collect()) };
        let m2 = dims(&AlgebraSC::matrix(2, Ring::Rationals)?, 3)?;
        let poly = dims(&AlgebraSC::truncated_polynomial(2, Ring::Rationals)?, 4)?;
        let group = dims(&AlgebraSC::cyclic_group(2, Ring::Rationals)?, 3)?;
        let z = hh_ranks(&AlgebraSC::cyclic_group(2, Ring::Integers)?, 3)?;
        let f2 = dims(&AlgebraSC::cyclic_group(2, Ring::PrimeField(2))?, 3)?;
        let two_torsion = |n: usize| z[n].torsion.iter().filter(|t| (*t % 2u32) == BigInt::from(0)).count();
        let torsion = (1..=3).any(|n| two_torsion(n) > 0);
        let mod_two = (0..=3).all(|n| f2[n] == z[n].rank + two_torsion(n) + if n > 0 { two_torsion(n - 1) } else { 0 });
        let passed = m2 == [1, 0, 0, 0] && poly == [2, 1, 1, 1, 1] && group == [2, 0, 0, 0] && torsion && mod_two;
        let z_text: Vec<String> = z.iter().map(|g| g.to_string()).collect();
        Ok((passed, format!("M_2 {m2:?}, k[x]/x² {poly:?}, Q[C2] {group:?}, Z[C2] [{}], F2[C2] {f2:?}", z_text.join("; "))))
    })
}

pub fn operator_contract() -> CheckResult {
    timed("chain operator contract", || {
        let algebras = [
            ("Q", AlgebraSC::ground(Ring::Rationals)),
            ("truncpoly:2", AlgebraSC::truncated_polynomial(2, Ring::Rationals)?),
            ("truncpoly:4", AlgebraSC::truncated_polynomial(4, Ring::Rationals)?),
            ("group:C3", AlgebraSC::cyclic_group(3, Ring::Rationals)?),
            ("group:C2 over Z", AlgebraSC::cyclic_group(2, Ring::Integers)?),
            ("matrix:2", AlgebraSC::matrix(2, Ring::Rationals)?),
        ];
        for (name, a) in &algebras {
            let failures = relation_failures(a, 4)?;
            if let Some(first) = failures.first() {
                return Ok((false, format!("{name}: {first}")));
            }
        }
        Ok((true, format!("{} algebras, degrees up to 4", algebras.len())))
    })
}

pub fn negative_cyclic() -> CheckResult {
    timed("truncated negative cyclic homology", || {
        let ground = hc_minus_truncated(&AlgebraSC::ground(Ring::Rationals), 3, &[0, -1, -2, -3, -4])?;
        let m2 = hc_minus_truncated(&AlgebraSC::matrix(2, Ring::Rationals)?, 2, &[0])?;
        Ok((ground == [1, 0, 1, 0, 1] && m2 == [1], format!("Q, weight 3, degrees 0..-4: {ground:?}; M_2 degree 0: {m2:?}")))
    })
}

pub fn lax_properties(seed: u64, objects: usize, morphisms: usize) -> CheckResult {
    timed("lax labeled circles", || {
        let report = laxfact::property_report(seed, objects, morphisms)?;
        let detail = format!(
            "{} objects, {} morphisms, {} reflections, {} factorizations; core properties {}; {} morphisms leave the unit image{}",
            report.objects,
            report.morphisms,
            report.reflections,
            report.factorizations,
            if report.core_passed() { "hold" } else { "fail" },
            report.unit_image_exits,
            report.unit_image_witness.as_ref().map(|w| format!(" (e.g. {w})")).unwrap_or_default()
        );
        Ok((report.passed(), detail))
    })
}

pub fn circle_round_trip(seed: u64, samples: usize) -> CheckResult {
    timed("circle and paracyclic round trip", || {
        for k in 1..=8 {
            let n = ParaObj::new(k)?;
            if from_para(n).to_para() != n {
                return Ok((false, format!("{k} orbits")));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let full = Angle::from_integer(1.into());
        for _ in 0..samples {
            let start = random_config(&mut rng, 4);
            let mut composite = crate::circle::CircleMorphism::identity(&start);
            let mut para = composite.para_map().clone();
            for _ in 0..rng.gen_range(1..=3) {
                let mv = random_move(&mut rng, composite.dst(), 4);
                para = mv.para_map().compose(&para)?;
                composite = mv.compose(&composite)?;
            }
            if composite.para_map() != &para {
                return Ok((false, "functoriality fails".into()));
            }
            let looped = rotation_morphism(composite.dst(), &full).compose(&composite)?;
            if looped.para_map() != &composite.para_map().z_action(MONODROMY_SIGN) {
                return Ok((false, "monodromy differs from the hom action".into()));
            }
        }
        Ok((true, format!("1..8 orbits, {samples} composites, monodromy sign {MONODROMY_SIGN:+}")))
    })
}

/// All checks, in order.
pub fn run_suite(seed: u64) -> Vec<CheckResult> {
    vec![
        zigzags(),
        trace_is_dimension(),
        presentation_independence(seed, 200),
        cyclic_invariance(seed, 100),
        paracyclic_laws(),
        adjunction_laws(),
        hochschild_ranks(),
        operator_contract(),
        negative_cyclic(),
        lax_properties(seed, 1000, 500),
        circle_round_trip(seed, 300),
    ]
}
