use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::matcat::linalg::{elementary_divisors, kernel_basis, rank};
use crate::matcat::{format_scalar, DualityData, ExactMatrix, Ring, Scalar};
use crate::{Error, Result};

use super::algebra::{validate_algebra, AlgebraSC};
use super::operators::{chain_dim, hochschild_b};

/// A finitely generated module: free of rank `rank` plus `⊕ Z/t` for `t` in `torsion`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub degree: usize,
    pub rank: usize,
    #[serde(serialize_with = "serialize_bigints")]
    pub torsion: Vec<BigInt>,
}

fn serialize_bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rank {}", self.rank)?;
        for t in &self.torsion {
            write!(f, " ⊕ Z/{t}")?;
        }
        Ok(())
    }
}

/// The boundaries `b_1, …, b_{n+1}`, indexed by source degree.
fn boundaries(a: &AlgebraSC, top: usize) -> Result<Vec<ExactMatrix>> {
    (0..=top).map(|p| hochschild_b(a, p)).collect()
}

/// `HH_n(A)` for `0 ≤ n ≤ n_max`. Over a field only the dimension is nonzero;
/// over `Z` the torsion comes from the elementary divisors of `b_{n+1}`.
pub fn hh_ranks(a: &AlgebraSC, n_max: usize) -> Result<Vec<HomologyGroup>> {
    validate_algebra(a)?;
    let b = boundaries(a, n_max + 1)?;
    let ranks: Vec<usize> = b.iter().map(rank).collect();
    (0..=n_max)
        .map(|n| {
            let torsion = if a.ring() == Ring::Integers {
                elementary_divisors(&b[n + 1])?.into_iter().filter(|d| !d.is_one()).collect()
            } else {
                Vec::new()
            };
            Ok(HomologyGroup { degree: n, rank: chain_dim(a, n) - ranks[n] - ranks[n + 1], torsion })
        })
        .collect()
}

/// Audit of the rank bookkeeping over a field: `rank b_n + dim ker b_n = dim C_n`
/// with the kernel computed independently, and the truncated Euler identity
/// `Σ (-1)^n dim C_n = Σ (-1)^n dim HH_n + (-1)^N rank b_{N+1}`.
pub fn euler_audit(a: &AlgebraSC, n_max: usize) -> Result<bool> {
    let b = boundaries(a, n_max + 1)?;
    let mut chains = 0i64;
    let mut homology = 0i64;
    for n in 0..=n_max {
        let kernel = kernel_basis(&b[n])?.len();
        if rank(&b[n]) + kernel != chain_dim(a, n) {
            return Ok(false);
        }
        let sign = if n % 2 == 0 { 1 } else { -1 };
        chains += sign * chain_dim(a, n) as i64;
        homology += sign * (kernel - rank(&b[n + 1])) as i64;
    }
    let tail = if n_max.is_multiple_of(2) { 1 } else { -1 } * rank(&b[n_max + 1]) as i64;
    Ok(chains == homology + tail)
}

/// The trace on `C_0 = End(V)` and its behaviour on `HH_0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceFunctional {
    /// Coefficients on the basis `e_i^∨ ⊗ e_j`.
    pub functional: Vec<Scalar>,
    pub hh0_dim: usize,
    /// The rank of the functional on `HH_0`.
    pub rank: usize,
}

impl TraceFunctional {
    pub fn apply(&self, x: &[Scalar]) -> Scalar {
        self.functional.iter().zip(x).map(|(f, v)| f * v).sum()
    }
}

/// Contracting with the pairing, `e_i^∨ ⊗ e_j ↦ ε(e_j ⊗ e_i^∨)`.
pub fn trace_hh0(data: &DualityData) -> Result<TraceFunctional> {
    let a = AlgebraSC::endomorphisms(data);
    let d = data.dim();
    let e = data.pairing();
    let functional: Vec<Scalar> = (0..d * d).map(|x| e.get(x % d, x / d)).collect();
    let row = ExactMatrix::from_rows(a.ring(), vec![functional.clone()])?;
    let b1 = hochschild_b(&a, 1)?;
    if !row.mul(&b1)?.is_zero() {
        return Err(Error::invalid("trace", "does not vanish on boundaries"));
    }
    let hh0_dim = a.dim() - rank(&b1);
    let rank = usize::from(functional.iter().any(|x| !x.is_zero()));
    Ok(TraceFunctional { functional, hh0_dim, rank })
}

pub fn describe(groups: &[HomologyGroup]) -> String {
    groups.iter().map(|g| format!("HH_{} = {g}", g.degree)).collect::<Vec<_>>().join(", ")
}

pub fn format_functional(t: &TraceFunctional) -> String {
    t.functional.iter().map(format_scalar).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcat::canonical_duality;

    fn dims(a: &AlgebraSC, n: usize) -> Vec<usize> {
        hh_ranks(a, n).unwrap().iter().map(|g| g.rank).collect()
    }

    #[test]
    fn ground_ring_over_every_ring() {
        for ring in [Ring::Rationals, Ring::Integers, Ring::PrimeField(3)] {
            assert_eq!(dims(&AlgebraSC::ground(ring), 4), vec![1, 0, 0, 0, 0]);
        }
    }

    #[test]
    fn matrix_algebra_matches_ground_ring() {
        assert_eq!(dims(&AlgebraSC::matrix(2, Ring::Rationals).unwrap(), 3), vec![1, 0, 0, 0]);
    }

    /// `k[x]/xⁿ` has the periodic resolution over `A ⊗ A^op` with maps
    /// `x⊗1 - 1⊗x` and `Σ x^i ⊗ x^{n-1-i}`; tensoring with `A` gives the
    /// complex `A ← A ← A ← …` with maps `0` and multiplication by `n x^{n-1}`.
    fn periodic_oracle(n: usize, degrees: usize) -> Vec<usize> {
        let mult = AlgebraSC::truncated_polynomial(n, Ring::Rationals).unwrap();
        let times: ExactMatrix = {
            let mut rows = vec![vec![Scalar::zero(); n]; n];
            for j in 0..n {
                for (k, c) in mult.basis_product(n - 1, j) {
                    rows[*k][j] += c * Scalar::from_integer(BigInt::from(n));
                }
            }
            ExactMatrix::from_rows(Ring::Rationals, rows).unwrap()
        };
        let zero = ExactMatrix::zeros(Ring::Rationals, n, n);
        // The map leaving degree k: zero for odd k, multiplication by n x^{n-1} for even k ≥ 2.
        let out = |k: usize| if k == 0 || k % 2 == 1 { &zero } else { &times };
        (0..=degrees)
            .map(|k| {
                let leaving = if k == 0 { 0 } else { rank(out(k)) };
                n - leaving - rank(out(k + 1))
            })
            .collect()
    }

    #[test]
    fn truncated_polynomial_matches_periodic_resolution() {
        let a = AlgebraSC::truncated_polynomial(2, Ring::Rationals).unwrap();
        assert_eq!(periodic_oracle(2, 4), vec![2, 1, 1, 1, 1]);
        assert_eq!(dims(&a, 4), periodic_oracle(2, 4));
        let a3 = AlgebraSC::truncated_polynomial(3, Ring::Rationals).unwrap();
        assert_eq!(dims(&a3, 3), periodic_oracle(3, 3));
    }

    #[test]
    fn cyclic_group_torsion_agrees_mod_two() {
        let q = AlgebraSC::cyclic_group(2, Ring::Rationals).unwrap();
        assert_eq!(dims(&q, 3), vec![2, 0, 0, 0]);
        let z = hh_ranks(&AlgebraSC::cyclic_group(2, Ring::Integers).unwrap(), 3).unwrap();
        let f2 = dims(&AlgebraSC::cyclic_group(2, Ring::PrimeField(2)).unwrap(), 3);
        assert!(z.iter().skip(1).any(|g| !g.torsion.is_empty()));
        // Universal coefficients: dim H_n(C ⊗ F_2) = rank + #2-torsion in H_n and H_{n-1}.
        for n in 0..=3 {
            let even = |g: &HomologyGroup| g.torsion.iter().filter(|t| (*t % 2u32).is_zero()).count();
            let below = if n == 0 { 0 } else { even(&z[n - 1]) };
            assert_eq!(f2[n], z[n].rank + even(&z[n]) + below);
        }
    }

    #[test]
    fn audit_passes() {
        assert!(euler_audit(&AlgebraSC::truncated_polynomial(2, Ring::Rationals).unwrap(), 3).unwrap());
        assert!(euler_audit(&AlgebraSC::matrix(2, Ring::Rationals).unwrap(), 2).unwrap());
    }

    #[test]
    fn matrix_trace() {
        let t1 = trace_hh0(&canonical_duality(1, Ring::Rationals).unwrap()).unwrap();
        assert_eq!(t1.functional, vec![Scalar::one()]);
        let t2 = trace_hh0(&canonical_duality(2, Ring::Rationals).unwrap()).unwrap();
        let m2 = AlgebraSC::matrix(2, Ring::Rationals).unwrap();
        // e_12 e_21 - e_21 e_12 on indices 1 and 2.
        let mut commutator = vec![Scalar::zero(); 4];
        for (k, c) in m2.basis_product(1, 2) {
            commutator[*k] += c;
        }
        for (k, c) in m2.basis_product(2, 1) {
            commutator[*k] -= c;
        }
        assert!(commutator.iter().any(|c| !c.is_zero()));
        assert!(t2.apply(&commutator).is_zero());
        let t3 = trace_hh0(&canonical_duality(3, Ring::Rationals).unwrap()).unwrap();
        assert_eq!((t3.rank, t3.hh0_dim), (1, 1));
    }
}
