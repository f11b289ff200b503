//! Operators on the cyclic bar complex `C_p = A^{⊗(p+1)}`.
//!
//! Slot `0` of a chain is the most significant tensor factor. Every
//! structure map is a fiber multiplication: output slot `j` is the ordered
//! product of a list of input slots.

use crate::matcat::{ExactMatrix, Scalar};
use crate::{Error, Result};

use super::algebra::AlgebraSC;

/// A chain in degree `degree`, with `dim^{degree+1}` coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainVector {
    pub degree: usize,
    pub coefficients: Vec<Scalar>,
}

impl ChainVector {
    pub fn new(a: &AlgebraSC, degree: usize, coefficients: Vec<Scalar>) -> Result<Self> {
        if coefficients.len() != chain_dim(a, degree) {
            return Err(Error::invalid("chain", format!("degree {degree} needs {} coefficients", chain_dim(a, degree))));
        }
        Ok(ChainVector { degree, coefficients })
    }

    pub fn as_column(&self, a: &AlgebraSC) -> Result<ExactMatrix> {
        ExactMatrix::column(a.ring(), self.coefficients.clone())
    }
}

pub fn chain_dim(a: &AlgebraSC, p: usize) -> usize {
    a.dim().pow(p as u32 + 1)
}

/// `d_i: C_p → C_{p-1}` multiplies slots `i` and `i + 1`; `d_p` puts `a_p a_0` in front.
pub fn face(a: &AlgebraSC, i: usize, p: usize) -> Result<ExactMatrix> {
    if p == 0 || i > p {
        return Err(Error::OutOfRange(format!("face {i} in degree {p}")));
    }
    let fibers: Vec<Vec<usize>> = if i < p {
        (0..p).map(|j| if j < i { vec![j] } else if j == i { vec![i, i + 1] } else { vec![j + 1] }).collect()
    } else {
        (0..p).map(|j| if j == 0 { vec![p, 0] } else { vec![j] }).collect()
    };
    a.fiber_multiply(p + 1, &fibers)
}

/// `s_j: C_p → C_{p+1}` inserts the unit after slot `j`.
pub fn degeneracy(a: &AlgebraSC, j: usize, p: usize) -> Result<ExactMatrix> {
    if j > p {
        return Err(Error::OutOfRange(format!("degeneracy {j} in degree {p}")));
    }
    let fibers: Vec<Vec<usize>> = (0..p + 2)
        .map(|k| if k <= j { vec![k] } else if k == j + 1 { vec![] } else { vec![k - 1] })
        .collect();
    a.fiber_multiply(p + 1, &fibers)
}

/// The unsigned rotation `(a_0, …, a_p) ↦ (a_p, a_0, …, a_{p-1})`.
pub fn rotation(a: &AlgebraSC, p: usize) -> Result<ExactMatrix> {
    let fibers: Vec<Vec<usize>> = (0..=p).map(|k| vec![(k + p) % (p + 1)]).collect();
    a.fiber_multiply(p + 1, &fibers)
}

fn sign(p: usize) -> Scalar {
    Scalar::from_integer(if p.is_multiple_of(2) { 1 } else { -1 }.into())
}

/// The cyclic operator `t = (-1)^p τ`.
pub fn cyclic(a: &AlgebraSC, p: usize) -> Result<ExactMatrix> {
    Ok(rotation(a, p)?.scale(&sign(p)))
}

/// The norm `N = Σ_{i=0}^{p} t^i`.
pub fn norm(a: &AlgebraSC, p: usize) -> Result<ExactMatrix> {
    let t = cyclic(a, p)?;
    let mut power = ExactMatrix::identity(a.ring(), chain_dim(a, p));
    let mut sum = power.clone();
    for _ in 0..p {
        power = t.mul(&power)?;
        sum = sum.add(&power)?;
    }
    Ok(sum)
}

/// The extra degeneracy `C_p → C_{p+1}` inserting the unit in slot `0`.
pub fn extra_degeneracy(a: &AlgebraSC, p: usize) -> Result<ExactMatrix> {
    let fibers: Vec<Vec<usize>> = (0..p + 2).map(|k| if k == 0 { vec![] } else { vec![k - 1] }).collect();
    a.fiber_multiply(p + 1, &fibers)
}

/// The Hochschild boundary `b = Σ (-1)^i d_i: C_p → C_{p-1}`; zero on `C_0`.
pub fn hochschild_b(a: &AlgebraSC, p: usize) -> Result<ExactMatrix> {
    if p == 0 {
        return Ok(ExactMatrix::zeros(a.ring(), 0, a.dim()));
    }
    let mut sum = ExactMatrix::zeros(a.ring(), chain_dim(a, p - 1), chain_dim(a, p));
    for i in 0..=p {
        sum = sum.add(&face(a, i, p)?.scale(&sign(i)))?;
    }
    Ok(sum)
}

/// Connes' operator `B = (1 - t) s N: C_p → C_{p+1}`.
pub fn connes_b(a: &AlgebraSC, p: usize) -> Result<ExactMatrix> {
    let one_minus_t = ExactMatrix::identity(a.ring(), chain_dim(a, p + 1)).sub(&cyclic(a, p + 1)?)?;
    one_minus_t.mul(&extra_degeneracy(a, p)?)?.mul(&norm(a, p)?)
}

/// Check the simplicial identities, the cyclic relations with the rotation,
/// and `b² = B² = bB + Bb = 0` in degrees up to `top`. Returns the failing
/// relations.
pub fn relation_failures(a: &AlgebraSC, top: usize) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    let mut expect = |ok: bool, what: String| {
        if !ok {
            failures.push(what);
        }
    };
    let id = |p: usize| ExactMatrix::identity(a.ring(), chain_dim(a, p));
    for p in 1..=top {
        for j in 0..=p {
            for i in 0..j {
                if p >= 2 {
                    let lhs = face(a, i, p - 1)?.mul(&face(a, j, p)?)?;
                    let rhs = face(a, j - 1, p - 1)?.mul(&face(a, i, p)?)?;
                    expect(lhs == rhs, format!("d{i} d{j} = d{} d{i} in degree {p}", j - 1));
                }
            }
        }
        for i in 1..=p {
            let lhs = face(a, i, p)?.mul(&rotation(a, p)?)?;
            let rhs = rotation(a, p - 1)?.mul(&face(a, i - 1, p)?)?;
            expect(lhs == rhs, format!("d{i} τ = τ d{} in degree {p}", i - 1));
        }
        expect(face(a, 0, p)?.mul(&rotation(a, p)?)? == face(a, p, p)?, format!("d0 τ = d{p} in degree {p}"));
    }
    for p in 0..top {
        for j in 0..=p {
            for i in 0..=j {
                let lhs = degeneracy(a, i, p + 1)?.mul(&degeneracy(a, j, p)?)?;
                let rhs = degeneracy(a, j + 1, p + 1)?.mul(&degeneracy(a, i, p)?)?;
                expect(lhs == rhs, format!("s{i} s{j} = s{} s{i} in degree {p}", j + 1));
            }
            for i in 0..=p + 1 {
                let lhs = face(a, i, p + 1)?.mul(&degeneracy(a, j, p)?)?;
                let rhs = if i < j {
                    degeneracy(a, j - 1, p - 1)?.mul(&face(a, i, p)?)?
                } else if i == j || i == j + 1 {
                    id(p)
                } else {
                    degeneracy(a, j, p - 1)?.mul(&face(a, i - 1, p)?)?
                };
                expect(lhs == rhs, format!("d{i} s{j} in degree {p}"));
            }
        }
        for i in 1..=p {
            let lhs = degeneracy(a, i, p)?.mul(&rotation(a, p)?)?;
            let rhs = rotation(a, p + 1)?.mul(&degeneracy(a, i - 1, p)?)?;
            expect(lhs == rhs, format!("s{i} τ = τ s{} in degree {p}", i - 1));
        }
        let lhs = degeneracy(a, 0, p)?.mul(&rotation(a, p)?)?;
        let rhs = rotation(a, p + 1)?.pow(2)?.mul(&degeneracy(a, p, p)?)?;
        expect(lhs == rhs, format!("s0 τ = τ² s{p} in degree {p}"));
    }
    for p in 0..=top {
        expect(rotation(a, p)?.pow(p + 1)?.is_identity(), format!("τ^{} = 1 in degree {p}", p + 1));
        expect(cyclic(a, p)?.pow(p + 1)?.is_identity(), format!("t^{} = 1 in degree {p}", p + 1));
        let b_next = hochschild_b(a, p + 1)?;
        if p >= 1 {
            expect(hochschild_b(a, p)?.mul(&b_next)?.is_zero(), format!("b b = 0 in degree {}", p + 1));
        }
        expect(connes_b(a, p + 1)?.mul(&connes_b(a, p)?)?.is_zero(), format!("B B = 0 in degree {p}"));
        let mut mixed = b_next.mul(&connes_b(a, p)?)?;
        if p >= 1 {
            mixed = mixed.add(&connes_b(a, p - 1)?.mul(&hochschild_b(a, p)?)?)?;
        }
        expect(mixed.is_zero(), format!("bB + Bb = 0 in degree {p}"));
    }
    Ok(failures)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcat::Ring;

    fn q() -> AlgebraSC {
        AlgebraSC::ground(Ring::Rationals)
    }

    #[test]
    fn degree_zero_boundary_vanishes() {
        assert!(hochschild_b(&q(), 0).unwrap().is_zero());
        let m2 = AlgebraSC::matrix(2, Ring::Rationals).unwrap();
        assert!(hochschild_b(&m2, 0).unwrap().is_zero());
    }

    #[test]
    fn ground_ring_signs() {
        let t = cyclic(&q(), 1).unwrap();
        assert_eq!(t, ExactMatrix::identity(Ring::Rationals, 1).neg());
        assert!(norm(&q(), 1).unwrap().is_zero());
    }

    #[test]
    fn commutator_boundary() {
        // Oracle: b(a_0 ⊗ a_1) = a_0 a_1 - a_1 a_0 from the structure constants.
        let a = AlgebraSC::matrix(2, Ring::Rationals).unwrap();
        let b1 = hochschild_b(&a, 1).unwrap();
        let consts = a.structure_constants();
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    let expected = &consts[k + 4 * (j + 4 * i)] - &consts[k + 4 * (i + 4 * j)];
                    assert_eq!(b1.get(k, i * 4 + j), expected);
                }
            }
        }
    }

    #[test]
    fn index_errors() {
        let a = q();
        assert!(face(&a, 3, 2).is_err());
        assert!(face(&a, 0, 0).is_err());
        assert!(degeneracy(&a, 3, 2).is_err());
        assert!(ChainVector::new(&a, 1, vec![]).is_err());
    }

    #[test]
    fn complexes_close_on_truncated_polynomials() {
        let a = AlgebraSC::truncated_polynomial(3, Ring::Rationals).unwrap();
        for p in 1..=3 {
            let bb = hochschild_b(&a, p).unwrap().mul(&hochschild_b(&a, p + 1).unwrap()).unwrap();
            assert!(bb.is_zero());
            let big_b = connes_b(&a, p + 1).unwrap().mul(&connes_b(&a, p).unwrap()).unwrap();
            assert!(big_b.is_zero());
            let mixed = hochschild_b(&a, p + 1)
                .unwrap()
                .mul(&connes_b(&a, p).unwrap())
                .unwrap()
                .add(&connes_b(&a, p - 1).unwrap().mul(&hochschild_b(&a, p).unwrap()).unwrap())
                .unwrap();
            assert!(mixed.is_zero());
        }
    }

    #[test]
    fn cyclic_relations() {
        for a in [
            AlgebraSC::truncated_polynomial(2, Ring::Rationals).unwrap(),
            AlgebraSC::cyclic_group(3, Ring::PrimeField(3)).unwrap(),
            AlgebraSC::matrix(2, Ring::Integers).unwrap(),
        ] {
            assert_eq!(relation_failures(&a, 3).unwrap(), Vec::<String>::new());
        }
    }
}
