//! Negative cyclic homology through a finite window of the `(b, B)`-bicomplex.
//!
//! In weight `w` the total complex is `Tot_n = ⊕_{0 ≤ k < w} C_{n+2k}`, where
//! component `k` carries the formal factor `u^k` of degree `-2k`. The
//! differential is `b` inside a component and `B` from component `k` to
//! `k + 1`; the part of `B` leaving the last component is dropped. The
//! result agrees with the inverse limit in degrees `≥ -2(w - 1)`.

use std::collections::HashMap;


use crate::matcat::linalg::{rank, solve};
use crate::matcat::{ExactMatrix, Scalar};
use crate::{Error, Result};

use super::algebra::{validate_algebra, AlgebraSC};
use super::homology::trace_hh0;
use super::operators::{chain_dim, connes_b, hochschild_b, ChainVector};

/// The lowest degree reported in weight `w`.
pub fn reliable_min_degree(weight: usize) -> i64 {
    -2 * (weight as i64 - 1)
}

struct Bicomplex<'a> {
    a: &'a AlgebraSC,
    weight: usize,
    b: HashMap<usize, ExactMatrix>,
    big_b: HashMap<usize, ExactMatrix>,
}

impl<'a> Bicomplex<'a> {
    fn new(a: &'a AlgebraSC, weight: usize) -> Result<Self> {
        if !a.ring().is_field() {
            return Err(Error::invalid("ring", format!("{} is not a field", a.ring())));
        }
        if weight == 0 {
            return Err(Error::invalid("weight", "must be at least 1"));
        }
        validate_algebra(a)?;
        Ok(Bicomplex { a, weight, b: HashMap::new(), big_b: HashMap::new() })
    }

    /// The chain degrees `(k, n + 2k)` making up `Tot_n`.
    fn components(&self, n: i64) -> Vec<(usize, usize)> {
        (0..self.weight).filter_map(|k| usize::try_from(n + 2 * k as i64).ok().map(|p| (k, p))).collect()
    }

    fn b(&mut self, p: usize) -> Result<&ExactMatrix> {
        if !self.b.contains_key(&p) {
            self.b.insert(p, hochschild_b(self.a, p)?);
        }
        Ok(&self.b[&p])
    }

    fn big_b(&mut self, p: usize) -> Result<&ExactMatrix> {
        if !self.big_b.contains_key(&p) {
            self.big_b.insert(p, connes_b(self.a, p)?);
        }
        Ok(&self.big_b[&p])
    }

    /// The differential `Tot_n → Tot_{n-1}`.
    fn differential(&mut self, n: i64) -> Result<ExactMatrix> {
        let src = self.components(n);
        let dst = self.components(n - 1);
        let mut blocks: Vec<Vec<Option<ExactMatrix>>> = vec![vec![None; src.len()]; dst.len()];
        for (col, &(k, p)) in src.iter().enumerate() {
            for (row, &(l, q)) in dst.iter().enumerate() {
                if l == k && p >= 1 && q == p - 1 {
                    blocks[row][col] = Some(self.b(p)?.clone());
                } else if l == k + 1 && q == p + 1 {
                    blocks[row][col] = Some(self.big_b(p)?.clone());
                }
            }
        }
        let refs: Vec<Vec<Option<&ExactMatrix>>> = blocks.iter().map(|r| r.iter().map(Option::as_ref).collect()).collect();
        let row_dims: Vec<usize> = dst.iter().map(|&(_, q)| chain_dim(self.a, q)).collect();
        let col_dims: Vec<usize> = src.iter().map(|&(_, p)| chain_dim(self.a, p)).collect();
        ExactMatrix::block(self.a.ring(), &row_dims, &col_dims, &refs)
    }

    fn total_dim(&self, n: i64) -> usize {
        self.components(n).iter().map(|&(_, p)| chain_dim(self.a, p)).sum()
    }
}

/// Dimensions of the truncated `HC⁻_n` for each requested degree.
pub fn hc_minus_truncated(a: &AlgebraSC, weight: usize, degrees: &[i64]) -> Result<Vec<usize>> {
    let mut complex = Bicomplex::new(a, weight)?;
    let min_degree = reliable_min_degree(weight);
    if let Some(&degree) = degrees.iter().find(|&&n| n < min_degree) {
        return Err(Error::Unreliable { degree, min_degree, weight });
    }
    degrees
        .iter()
        .map(|&n| {
            let dim = complex.total_dim(n);
            if dim == 0 {
                return Ok(0);
            }
            let out = rank(&complex.differential(n)?);
            let incoming = rank(&complex.differential(n + 1)?);
            Ok(dim - out - incoming)
        })
        .collect()
}

/// A degree-0 cycle of the truncated bicomplex together with its trace.
#[derive(Debug, Clone)]
pub struct LiftedClass {
    /// Components `x_k ∈ C_{2k}` for `0 ≤ k < w`.
    pub components: Vec<ChainVector>,
    /// The trace of the component in `C_0`.
    pub trace: Scalar,
}

/// Extend the unit of `End(V)` to a cycle `(x_0, x_1, …)` of `Tot_0` by
/// solving `b x_{k+1} = -B x_k`, then evaluate the matrix trace on `x_0`.
///
/// This is a chain-level reading of the circle-equivariant trace; it returns
/// an error when some obstruction class in `HH_{2k+1}` is nonzero.
pub fn lift_unit_and_trace(data: &crate::matcat::DualityData, weight: usize) -> Result<LiftedClass> {
    let a = AlgebraSC::endomorphisms(data);
    let mut complex = Bicomplex::new(&a, weight)?;
    let ring = a.ring();
    let mut x = a.unit().to_vec();
    let mut components = vec![ChainVector::new(&a, 0, x.clone())?];
    for k in 1..weight {
        let rhs = complex.big_b(2 * k - 2)?.mul(&ExactMatrix::column(ring, x)?)?.neg().entries_row_major();
        let next = solve(complex.b(2 * k)?, &rhs)?
            .ok_or_else(|| Error::invalid("lift", format!("B x_{} is not a boundary", k - 1)))?;
        components.push(ChainVector::new(&a, 2 * k, next.clone())?);
        x = next;
    }
    let trace = trace_hh0(data)?.apply(&components[0].coefficients);
    let cycle = components.iter().flat_map(|c| c.coefficients.clone()).collect::<Vec<_>>();
    let residue = complex.differential(0)?.mul(&ExactMatrix::column(ring, cycle)?)?;
    if !residue.is_zero() {
        return Err(Error::invalid("lift", "the lifted chain is not a cycle"));
    }
    Ok(LiftedClass { components, trace: ring.reduce(trace) })
}
