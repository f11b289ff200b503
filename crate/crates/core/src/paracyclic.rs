//! The skeletal paracyclic category.
//!
//! An object with `n` orbits is the integers with the translation `x ↦ x + n`.
//! A morphism from `m` to `n` orbits is a monotone map `f: Z → Z` with
//! `f(x + m) = f(x) + n`; it is stored by its values on `{0, ..., m-1}`.
//! Two maps are equal exactly when their value lists are equal.

use crate::ordsets::MonotoneMap;
use crate::{Error, Result};

/// An object of the paracyclic category: `Z` with `orbits` orbits under the shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParaObj {
    orbits: usize,
}

impl ParaObj {
    pub fn new(orbits: usize) -> Result<Self> {
        if orbits == 0 {
            return Err(Error::invalid("paracyclic object", "needs at least one orbit"));
        }
        Ok(ParaObj { orbits })
    }

    pub fn orbits(&self) -> usize {
        self.orbits
    }

    fn n(&self) -> i64 {
        self.orbits as i64
    }
}

/// A `Z`-equivariant monotone map, stored on a fundamental domain.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParaMap {
    src: ParaObj,
    dst: ParaObj,
    values: Vec<i64>,
}

impl ParaMap {
    pub fn new(src: ParaObj, dst: ParaObj, values: Vec<i64>) -> Result<Self> {
        if values.len() != src.orbits {
            return Err(Error::invalid(
                "paracyclic map",
                format!("{} values for {} source orbits", values.len(), src.orbits),
            ));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::invalid("paracyclic map", format!("{values:?} is not weakly increasing")));
        }
        if values[values.len() - 1] > values[0] + dst.n() {
            return Err(Error::invalid(
                "paracyclic map",
                format!("{values:?} wraps past one period of {} orbits", dst.orbits),
            ));
        }
        Ok(ParaMap { src, dst, values })
    }

    pub fn identity(obj: ParaObj) -> Self {
        ParaMap::translation(obj, 0)
    }

    /// The automorphism `x ↦ x + k`.
    pub fn translation(obj: ParaObj, k: i64) -> Self {
        ParaMap { src: obj, dst: obj, values: (0..obj.n()).map(|x| x + k).collect() }
    }

    pub fn src(&self) -> ParaObj {
        self.src
    }

    pub fn dst(&self) -> ParaObj {
        self.dst
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `f(x)`, extended from the fundamental domain by equivariance.
    pub fn evaluate(&self, x: i64) -> i64 {
        let m = self.src.n();
        self.values[x.rem_euclid(m) as usize] + self.dst.n() * x.div_euclid(m)
    }

    /// `g ∘ f`, where `self` is `g`.
    pub fn compose(&self, f: &ParaMap) -> Result<ParaMap> {
        if f.dst != self.src {
            return Err(Error::Mismatch(format!(
                "cannot compose a map out of {} orbits with a map into {} orbits",
                self.src.orbits, f.dst.orbits
            )));
        }
        Ok(ParaMap { src: f.src, dst: self.dst, values: f.values.iter().map(|&x| self.evaluate(x)).collect() })
    }

    /// The hom-set action `r · f : x ↦ f(x) + r·n`.
    pub fn z_action(&self, r: i64) -> ParaMap {
        let shift = r * self.dst.n();
        ParaMap { src: self.src, dst: self.dst, values: self.values.iter().map(|v| v + shift).collect() }
    }

    /// The upper Galois adjoint `y ↦ max{x : f(x) ≤ y}`.
    ///
    /// It satisfies `f(x) ≤ y ⟺ x ≤ f^∨(y)` and reverses composition. With
    /// this convention `f^∨∨ = σ ∘ f ∘ σ⁻¹` for the translation
    /// `σ = `[`dual_translation`].
    pub fn poincare_dual(&self) -> ParaMap {
        let (m, n) = (self.src.n(), self.dst.n());
        let v0 = self.values[0];
        let values = (0..n)
            .map(|y| {
                let mut x = m * (y - v0).div_euclid(n);
                while self.evaluate(x + 1) <= y {
                    x += 1;
                }
                while self.evaluate(x) > y {
                    x -= 1;
                }
                x
            })
            .collect();
        ParaMap { src: self.dst, dst: self.src, values }
    }

    /// The smallest `x` with `f(x) ≥ y`, i.e. `f^∨(y - 1) + 1`.
    pub fn lower_preimage(&self, y: i64) -> i64 {
        self.poincare_dual().evaluate(y - 1) + 1
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1]) && self.values[self.values.len() - 1] < self.values[0] + self.dst.n()
    }

    pub fn is_surjective(&self) -> bool {
        self.values.windows(2).all(|w| w[1] - w[0] <= 1) && self.values[0] + self.dst.n() - self.values[self.values.len() - 1] <= 1
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.dst && self.values.iter().enumerate().all(|(i, &v)| v == i as i64)
    }

    /// Factor `f = inj ∘ surj` through the image of `f`.
    ///
    /// The image points are enumerated from `0`, so a surjective `f` factors
    /// as `(f, id)`, and an injective `f` whose values start in `[0, n)`
    /// factors as `(id, f)`.
    pub fn surj_inj_factorize(&self) -> (ParaMap, ParaMap) {
        let n = self.dst.n();
        let mut residues: Vec<i64> = self.values.iter().map(|v| v.rem_euclid(n)).collect();
        residues.sort_unstable();
        residues.dedup();
        let k = residues.len() as i64;
        let mid = ParaObj { orbits: residues.len() };
        let surj_values = self
            .values
            .iter()
            .map(|&v| {
                let j = residues.binary_search(&v.rem_euclid(n)).expect("residue is listed") as i64;
                j + k * v.div_euclid(n)
            })
            .collect();
        let surj = ParaMap { src: self.src, dst: mid, values: surj_values };
        let inj = ParaMap { src: mid, dst: self.dst, values: residues };
        (surj, inj)
    }
}

/// The translation `x ↦ x - 1` conjugating a map to its double dual.
pub fn dual_translation(obj: ParaObj) -> ParaMap {
    ParaMap::translation(obj, -1)
}

/// `[p] ↦ [p]^{⋆Z}`: a simplicial map becomes an equivariant map of its `Z`-fold join.
pub fn from_simplex(phi: &MonotoneMap) -> Result<ParaMap> {
    let src = ParaObj::new(phi.src().size).map_err(|_| Error::invalid("simplex map", "empty source"))?;
    let dst = ParaObj::new(phi.dst().size).map_err(|_| Error::invalid("simplex map", "empty target"))?;
    ParaMap::new(src, dst, phi.values().iter().map(|&v| v as i64).collect())
}

/// All maps `m → n` whose first value lies in `[-offset_bound, offset_bound]`.
pub fn enumerate_maps(m: ParaObj, n: ParaObj, offset_bound: i64) -> Vec<ParaMap> {
    let mut out = Vec::new();
    for v0 in -offset_bound..=offset_bound {
        let mut values = vec![v0; m.orbits];
        loop {
            out.push(ParaMap { src: m, dst: n, values: values.clone() });
            let mut pos = m.orbits;
            let advanced = loop {
                if pos <= 1 {
                    break false;
                }
                pos -= 1;
                if values[pos] < v0 + n.n() {
                    let v = values[pos] + 1;
                    for slot in &mut values[pos..] {
                        *slot = v;
                    }
                    break true;
                }
            };
            if !advanced {
                break;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordsets::FinOrd;

    fn obj(n: usize) -> ParaObj {
        ParaObj::new(n).unwrap()
    }

    fn pm(m: usize, n: usize, values: &[i64]) -> ParaMap {
        ParaMap::new(obj(m), obj(n), values.to_vec()).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(pm(1, 1, &[3]).evaluate(0), 3);
        assert_eq!(pm(1, 1, &[3]).evaluate(2), 5);
        assert_eq!(pm(2, 1, &[0, 0]).evaluate(3), 1);
        let f = pm(3, 2, &[-1, 0, 1]);
        for x in -7..7 {
            assert_eq!(f.evaluate(x + 3), f.evaluate(x) + 2);
        }
    }

    #[test]
    fn invariants_are_enforced() {
        assert!(ParaObj::new(0).is_err());
        assert!(ParaMap::new(obj(2), obj(1), vec![0, 2]).is_err());
        assert!(ParaMap::new(obj(2), obj(1), vec![1, 0]).is_err());
        assert!(ParaMap::new(obj(2), obj(1), vec![0]).is_err());
        assert!(ParaMap::new(obj(2), obj(1), vec![0, 1]).is_ok());
    }

    #[test]
    fn compose_examples() {
        let f = pm(2, 1, &[0, 0]);
        let g = pm(1, 2, &[1]);
        assert_eq!(g.compose(&f).unwrap(), pm(2, 2, &[1, 1]));
        assert_eq!(ParaMap::identity(obj(1)).compose(&f).unwrap(), f);
        assert_eq!(g.compose(&f).unwrap().z_action(3), g.z_action(3).compose(&f).unwrap());
        assert!(f.compose(&f).is_err());
    }

    #[test]
    fn z_action_examples() {
        let f = pm(1, 1, &[0]);
        assert_eq!(f.z_action(0), f);
        assert_eq!(f.z_action(2), pm(1, 1, &[2]));
        let g = pm(2, 3, &[0, 2]);
        assert_eq!(g.z_action(-1).values(), &[-3, -1]);
    }

    #[test]
    fn poincare_dual_examples() {
        for c in -3..=3 {
            assert_eq!(pm(1, 1, &[c]).poincare_dual(), pm(1, 1, &[-c]));
        }
        for n in 1..=4 {
            assert!(ParaMap::identity(obj(n)).poincare_dual().is_identity());
        }
    }

    #[test]
    fn poincare_dual_is_the_upper_adjoint() {
        // Brute-force oracle over a window of integers.
        for f in enumerate_maps(obj(3), obj(2), 2) {
            let d = f.poincare_dual();
            for x in -8..8 {
                for y in -8..8 {
                    assert_eq!(f.evaluate(x) <= y, x <= d.evaluate(y), "{f:?} at ({x}, {y})");
                }
            }
        }
    }

    #[test]
    fn double_dual_is_conjugation_by_the_translation() {
        for f in enumerate_maps(obj(2), obj(3), 2) {
            let sigma_src = dual_translation(f.src());
            let sigma_dst = dual_translation(f.dst());
            let dd = f.poincare_dual().poincare_dual();
            assert_eq!(dd.compose(&sigma_src).unwrap(), sigma_dst.compose(&f).unwrap());
        }
    }

    #[test]
    fn from_simplex_examples() {
        let id = MonotoneMap::identity(FinOrd::simplex(2));
        assert!(from_simplex(&id).unwrap().is_identity());
        let degeneracy = MonotoneMap::new(FinOrd::simplex(1), FinOrd::simplex(0), vec![0, 0]).unwrap();
        assert_eq!(from_simplex(&degeneracy).unwrap(), pm(2, 1, &[0, 0]));
        let face = MonotoneMap::new(FinOrd::simplex(0), FinOrd::simplex(1), vec![1]).unwrap();
        assert_eq!(from_simplex(&face).unwrap(), pm(1, 2, &[1]));
        let empty = MonotoneMap::identity(FinOrd::EMPTY);
        assert!(from_simplex(&empty).is_err());
    }

    #[test]
    fn factorization_examples() {
        let (s, i) = pm(2, 2, &[0, 0]).surj_inj_factorize();
        assert_eq!(s, pm(2, 1, &[0, 0]));
        assert_eq!(i, pm(1, 2, &[0]));

        let f = pm(2, 3, &[0, 2]);
        let (s, i) = f.surj_inj_factorize();
        assert!(s.is_identity());
        assert_eq!(i, f);

        let f = pm(3, 2, &[0, 1, 1]);
        let (s, i) = f.surj_inj_factorize();
        assert_eq!(s, f);
        assert!(i.is_identity());
    }

    #[test]
    fn factorization_of_every_small_map() {
        // Oracle: the image of f in one period of the target.
        for m in 1..=3 {
            for n in 1..=3 {
                for f in enumerate_maps(obj(m), obj(n), 2) {
                    let (s, i) = f.surj_inj_factorize();
                    assert_eq!(i.compose(&s).unwrap(), f);
                    assert!(s.is_surjective() && i.is_injective());
                    let image: std::collections::BTreeSet<i64> =
                        (-10..10).map(|x| f.evaluate(x)).filter(|y| (0..n as i64).contains(y)).collect();
                    assert_eq!(s.dst().orbits(), image.len());
                }
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_maps(obj(1), obj(1), 1), vec![pm(1, 1, &[-1]), pm(1, 1, &[0]), pm(1, 1, &[1])]);
        assert_eq!(enumerate_maps(obj(1), obj(2), 0), vec![pm(1, 2, &[0])]);
        assert_eq!(enumerate_maps(obj(2), obj(1), 0), vec![pm(2, 1, &[0, 0]), pm(2, 1, &[0, 1])]);
    }

    #[test]
    fn enumeration_is_complete_and_duplicate_free() {
        // Oracle: brute force over a box of candidate value lists.
        for m in 1..=3usize {
            for n in 1..=3usize {
                let listed = enumerate_maps(obj(m), obj(n), 1);
                let set: std::collections::HashSet<_> = listed.iter().cloned().collect();
                assert_eq!(set.len(), listed.len());
                let mut count = 0;
                let range: Vec<i64> = (-1..=1 + n as i64).collect();
                let mut idx = vec![0usize; m];
                loop {
                    let values: Vec<i64> = idx.iter().map(|&i| range[i]).collect();
                    if values[0].abs() <= 1 {
                        if let Ok(f) = ParaMap::new(obj(m), obj(n), values) {
                            assert!(set.contains(&f));
                            count += 1;
                        }
                    }
                    let mut p = 0;
                    while p < m && idx[p] + 1 == range.len() {
                        idx[p] = 0;
                        p += 1;
                    }
                    if p == m {
                        break;
                    }
                    idx[p] += 1;
                }
                assert_eq!(count, listed.len());
            }
        }
    }
}
