//! Property tests of the algebraic laws on randomly drawn small inputs.

use paracycle::adjunction::{enumerate_two_cells, OneCell, Sign};
use paracycle::hochschild::{hh_ranks, AlgebraSC};
use paracycle::matcat::{ExactMatrix, Ring, Scalar};
use paracycle::ordsets::{delta_to_interval_map, enumerate_monotone, FinOrd, MonotoneMap};
use paracycle::paracyclic::{ParaMap, ParaObj};
use proptest::prelude::*;

fn monotone(src: usize, dst: usize) -> impl Strategy<Value = MonotoneMap> {
    proptest::collection::vec(0..dst, src).prop_map(move |mut v| {
        v.sort_unstable();
        MonotoneMap::new(FinOrd::new(src), FinOrd::new(dst), v).unwrap()
    })
}

fn para(m: usize, n: usize) -> impl Strategy<Value = ParaMap> {
    proptest::collection::vec(-6i64..6, m).prop_filter_map("monotone within one period", move |mut v| {
        v.sort_unstable();
        ParaMap::new(ParaObj::new(m).unwrap(), ParaObj::new(n).unwrap(), v).ok()
    })
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = ExactMatrix> {
    proptest::collection::vec((-20i64..20, 1i64..6), rows * cols).prop_map(move |v| {
        let entries: Vec<Scalar> = v.into_iter().map(|(p, q)| Scalar::new(p.into(), q.into())).collect();
        ExactMatrix::from_rows(Ring::Rationals, entries.chunks(cols).map(<[Scalar]>::to_vec).collect()).unwrap()
    })
}

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Minus), Just(Sign::Plus)]
}

proptest! {
    #[test]
    fn matrix_products_associate(a in matrix(2, 3), b in matrix(3, 4), c in matrix(4, 2)) {
        prop_assert_eq!(a.mul(&b)?.mul(&c)?, a.mul(&b.mul(&c)?)?);
    }

    #[test]
    fn kron_interchange(a in matrix(2, 3), b in matrix(2, 2), c in matrix(3, 2), d in matrix(2, 1)) {
        prop_assert_eq!(a.kron(&b)?.mul(&c.kron(&d)?)?, a.mul(&c)?.kron(&b.mul(&d)?)?);
    }

    #[test]
    fn monotone_composition_is_associative(f in monotone(3, 4), g in monotone(4, 2), h in monotone(2, 5)) {
        prop_assert_eq!(h.compose(&g.compose(&f)?)?, h.compose(&g)?.compose(&f)?);
        prop_assert_eq!(MonotoneMap::identity(FinOrd::new(4)).compose(&f)?, f.clone());
    }

    #[test]
    fn join_is_associative_and_functorial(f in monotone(2, 3), g in monotone(1, 2), h in monotone(3, 1),
                                          f2 in monotone(3, 2), g2 in monotone(2, 2)) {
        prop_assert_eq!(f.join(&g).join(&h), f.join(&g.join(&h)));
        prop_assert_eq!(f2.join(&g2).compose(&f.join(&g))?, f2.compose(&f)?.join(&g2.compose(&g)?));
    }

    #[test]
    fn interval_functor_reverses_composition(f in monotone(2, 4), g in monotone(4, 3)) {
        let lhs = delta_to_interval_map(&g.compose(&f)?)?;
        let rhs = delta_to_interval_map(&f)?.compose(&delta_to_interval_map(&g)?)?;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn paracyclic_duality_reverses_composition(f in para(2, 3), g in para(3, 2), r in -3i64..3) {
        let gf = g.compose(&f)?;
        prop_assert_eq!(gf.poincare_dual(), f.poincare_dual().compose(&g.poincare_dual())?);
        prop_assert_eq!(g.z_action(r).compose(&f)?, gf.z_action(r));
    }

    #[test]
    fn duality_is_a_galois_connection(f in para(3, 2), x in -8i64..8, y in -8i64..8) {
        prop_assert_eq!(f.evaluate(x) <= y, x <= f.poincare_dual().evaluate(y));
    }

    #[test]
    fn interchange_law(x in sign(), y in sign(), z in sign(), blocks in proptest::collection::vec(0usize..3, 6),
                       picks in proptest::collection::vec(0usize..64, 4)) {
        let pick = |a: OneCell, b: OneCell, k: usize| {
            let cells = enumerate_two_cells(a, b);
            (!cells.is_empty()).then(|| cells[k % cells.len()].clone())
        };
        let f: Vec<OneCell> = blocks[..3].iter().map(|&k| OneCell::new(x, y, k)).collect();
        let g: Vec<OneCell> = blocks[3..].iter().map(|&k| OneCell::new(y, z, k)).collect();
        if let (Some(a1), Some(a2), Some(b1), Some(b2)) =
            (pick(f[0], f[1], picks[0]), pick(f[1], f[2], picks[1]), pick(g[0], g[1], picks[2]), pick(g[1], g[2], picks[3]))
        {
            let lhs = b2.vcompose(&b1)?.hcompose(&a2.vcompose(&a1)?)?;
            let rhs = b2.hcompose(&a2)?.vcompose(&b1.hcompose(&a1)?)?;
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn hochschild_ranks_survive_a_change_of_basis(entries in proptest::collection::vec(-2i64..3, 4), which in 0usize..3) {
        let q = Ring::Rationals;
        let a = [
            AlgebraSC::truncated_polynomial(2, q)?,
            AlgebraSC::cyclic_group(2, q)?,
            AlgebraSC::truncated_polynomial(2, q)?,
        ][which].clone();
        let rows = vec![
            vec![Scalar::from_integer(entries[0].into()), Scalar::from_integer(entries[1].into())],
            vec![Scalar::from_integer(entries[2].into()), Scalar::from_integer(entries[3].into())],
        ];
        let p = ExactMatrix::from_rows(q, rows)?;
        prop_assume!(entries[0] * entries[3] != entries[1] * entries[2]);
        let b = a.change_basis(&p)?;
        let ranks = |x: &AlgebraSC| hh_ranks(x, 3).map(|g| g.iter().map(|h| h.rank).collect::<Vec<_>>());
        prop_assert_eq!(ranks(&a)?, ranks(&b)?);
    }
}

#[test]
fn monotone_maps_are_counted_by_binomials() {
    // Monotone [m] → [n] are multisets of size m from n letters.
    let binom = |n: u64, k: u64| (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1));
    for m in 0..=4usize {
        for n in 1..=4usize {
            let count = enumerate_monotone(FinOrd::new(m), FinOrd::new(n)).len() as u64;
            assert_eq!(count, binom((n + m - 1) as u64, m as u64));
        }
    }
}
