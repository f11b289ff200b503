use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::ring::{format_scalar, Ring, Scalar};
use crate::{Error, Result};

/// A matrix over an exact ring, acting on column vectors.
///
/// Entries are kept as sorted sparse rows without explicit zeros, so the
/// derived equality is equality of matrices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, Scalar)>>,
}

impl ExactMatrix {
    pub fn zeros(ring: Ring, rows: usize, cols: usize) -> Self {
        ExactMatrix { ring, rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(ring: Ring, n: usize) -> Self {
        let one = ring.one();
        ExactMatrix { ring, rows: n, cols: n, data: (0..n).map(|i| vec![(i, one.clone())]).collect() }
    }

    /// The `1 × 1` matrix `[x]`.
    pub fn scalar(ring: Ring, x: Scalar) -> Result<Self> {
        Self::from_rows(ring, vec![vec![x]])
    }

    pub fn from_rows(ring: Ring, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::invalid("matrix", "rows have different lengths"));
        }
        let n = rows.len();
        let mut data = Vec::with_capacity(n);
        for row in rows {
            let mut sparse = Vec::new();
            for (j, x) in row.into_iter().enumerate() {
                let x = ring.normalize(x)?;
                if !x.is_zero() {
                    sparse.push((j, x));
                }
            }
            data.push(sparse);
        }
        Ok(ExactMatrix { ring, rows: n, cols, data })
    }

    pub fn from_i64_rows(ring: Ring, rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(ring, rows.iter().map(|r| r.iter().map(|&x| Scalar::from_integer(x.into())).collect()).collect())
    }

    /// Build from `(row, col, value)` triples; repeated positions are summed.
    pub fn from_entries(
        ring: Ring,
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut acc: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); rows];
        for (i, j, x) in entries {
            if i >= rows || j >= cols {
                return Err(Error::OutOfRange(format!("entry ({i}, {j}) in a {rows}×{cols} matrix")));
            }
            let x = ring.normalize(x)?;
            *acc[i].entry(j).or_insert_with(Scalar::zero) += x;
        }
        Ok(Self::from_maps(ring, cols, acc))
    }

    fn from_maps(ring: Ring, cols: usize, maps: Vec<BTreeMap<usize, Scalar>>) -> Self {
        let data: Vec<Vec<(usize, Scalar)>> = maps
            .into_iter()
            .map(|m| {
                m.into_iter()
                    .map(|(j, x)| (j, ring.reduce(x)))
                    .filter(|(_, x)| !x.is_zero())
                    .collect()
            })
            .collect();
        ExactMatrix { ring, rows: data.len(), cols, data }
    }

    /// A single column.
    pub fn column(ring: Ring, v: Vec<Scalar>) -> Result<Self> {
        Self::from_rows(ring, v.into_iter().map(|x| vec![x]).collect())
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[(usize, Scalar)] {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        match self.data[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(k) => self.data[i][k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.nnz() == 0
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.ring, self.rows)
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        self.data
            .iter()
            .map(|row| {
                let mut dense = vec![Scalar::zero(); self.cols];
                for (j, x) in row {
                    dense[*j] = x.clone();
                }
                dense
            })
            .collect()
    }

    /// All entries in row-major order.
    pub fn entries_row_major(&self) -> Vec<Scalar> {
        self.to_dense().into_iter().flatten().collect()
    }

    fn check_ring(&self, other: &ExactMatrix) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::Mismatch(format!("matrices over {} and {}", self.ring, other.ring)));
        }
        Ok(())
    }

    /// The product `self · other`.
    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.check_ring(other)?;
        if self.cols != other.rows {
            return Err(Error::Mismatch(format!(
                "cannot multiply {}×{} by {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let maps = self
            .data
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (k, a) in row {
                    for (j, b) in &other.data[*k] {
                        *acc.entry(*j).or_insert_with(Scalar::zero) += a * b;
                    }
                }
                acc
            })
            .collect();
        Ok(Self::from_maps(self.ring, other.cols, maps))
    }

    /// Multiply a chain of matrices left to right.
    pub fn product<'a>(ring: Ring, n: usize, factors: impl IntoIterator<Item = &'a ExactMatrix>) -> Result<ExactMatrix> {
        factors.into_iter().try_fold(Self::identity(ring, n), |acc, m| acc.mul(m))
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.combine(other, true)
    }

    fn combine(&self, other: &ExactMatrix, subtract: bool) -> Result<ExactMatrix> {
        self.check_ring(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Mismatch(format!(
                "cannot add {}×{} and {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let maps = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                let mut acc: BTreeMap<usize, Scalar> = a.iter().cloned().collect();
                for (j, x) in b {
                    let slot = acc.entry(*j).or_insert_with(Scalar::zero);
                    if subtract {
                        *slot -= x;
                    } else {
                        *slot += x;
                    }
                }
                acc
            })
            .collect();
        Ok(Self::from_maps(self.ring, self.cols, maps))
    }

    pub fn scale(&self, c: &Scalar) -> ExactMatrix {
        let maps = self.data.iter().map(|row| row.iter().map(|(j, x)| (*j, x * c)).collect()).collect();
        Self::from_maps(self.ring, self.cols, maps)
    }

    pub fn neg(&self) -> ExactMatrix {
        self.scale(&-Scalar::one())
    }

    /// The Kronecker product; `self` indexes the most significant factor.
    pub fn kron(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.check_ring(other)?;
        let mut data = Vec::with_capacity(self.rows * other.rows);
        for a_row in &self.data {
            for b_row in &other.data {
                let mut row = Vec::with_capacity(a_row.len() * b_row.len());
                for (ja, a) in a_row {
                    for (jb, b) in b_row {
                        row.push((ja * other.cols + jb, self.ring.reduce(a * b)));
                    }
                }
                data.push(row);
            }
        }
        Ok(ExactMatrix { ring: self.ring, rows: self.rows * other.rows, cols: self.cols * other.cols, data })
    }

    /// Kronecker product of a list, with the empty product the `1 × 1` identity.
    pub fn kron_all<'a>(ring: Ring, factors: impl IntoIterator<Item = &'a ExactMatrix>) -> Result<ExactMatrix> {
        factors.into_iter().try_fold(Self::identity(ring, 1), |acc, m| acc.kron(m))
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut data = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, x) in row {
                data[*j].push((i, x.clone()));
            }
        }
        ExactMatrix { ring: self.ring, rows: self.cols, cols: self.rows, data }
    }

    pub fn trace(&self) -> Result<Scalar> {
        if self.rows != self.cols {
            return Err(Error::Mismatch(format!("trace of a {}×{} matrix", self.rows, self.cols)));
        }
        let sum = (0..self.rows).map(|i| self.get(i, i)).fold(Scalar::zero(), |a, b| a + b);
        Ok(self.ring.reduce(sum))
    }

    pub fn pow(&self, k: usize) -> Result<ExactMatrix> {
        (0..k).try_fold(Self::identity(self.ring, self.rows), |acc, _| acc.mul(self))
    }

    /// Stack blocks into one matrix; `None` blocks are zero.
    pub fn block(ring: Ring, row_dims: &[usize], col_dims: &[usize], blocks: &[Vec<Option<&ExactMatrix>>]) -> Result<ExactMatrix> {
        let rows: usize = row_dims.iter().sum();
        let cols: usize = col_dims.iter().sum();
        let mut data = vec![Vec::new(); rows];
        let mut r0 = 0;
        for (bi, rd) in row_dims.iter().enumerate() {
            let mut c0 = 0;
            for (bj, cd) in col_dims.iter().enumerate() {
                if let Some(m) = blocks[bi][bj] {
                    if (m.rows, m.cols) != (*rd, *cd) || m.ring != ring {
                        return Err(Error::Mismatch(format!("block ({bi}, {bj}) has the wrong shape or ring")));
                    }
                    for (i, row) in m.data.iter().enumerate() {
                        data[r0 + i].extend(row.iter().map(|(j, x)| (c0 + j, x.clone())));
                    }
                }
                c0 += cd;
            }
            r0 += rd;
        }
        for row in &mut data {
            row.sort_by_key(|(j, _)| *j);
        }
        Ok(ExactMatrix { ring, rows, cols, data })
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(format_scalar).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_i64_rows(Ring::Rationals, rows).unwrap()
    }

    #[test]
    fn kron_examples() {
        let i2 = ExactMatrix::identity(Ring::Rationals, 2);
        let i3 = ExactMatrix::identity(Ring::Rationals, 3);
        assert_eq!(i2.kron(&i3).unwrap(), ExactMatrix::identity(Ring::Rationals, 6));
        let a = q(&[&[1, 2], &[3, 4]]);
        assert_eq!(a.kron(&ExactMatrix::identity(Ring::Rationals, 1)).unwrap(), a);
        let b = q(&[&[0, 5], &[6, 7]]);
        let k = a.kron(&b).unwrap();
        // Definitional oracle: (A ⊗ B)[2i + k][2j + l] = A[i][j] B[k][l].
        for i in 0..2 {
            for j in 0..2 {
                for r in 0..2 {
                    for s in 0..2 {
                        assert_eq!(k.get(2 * i + r, 2 * j + s), a.get(i, j) * b.get(r, s));
                    }
                }
            }
        }
    }

    #[test]
    fn ring_and_shape_mismatches() {
        let a = q(&[&[1, 2]]);
        assert!(a.mul(&a).is_err());
        let z = ExactMatrix::identity(Ring::Integers, 2);
        assert!(z.mul(&ExactMatrix::identity(Ring::Rationals, 2)).is_err());
        assert!(z.kron(&ExactMatrix::identity(Ring::Rationals, 2)).is_err());
    }

    #[test]
    fn prime_field_reduces() {
        let f5 = Ring::PrimeField(5);
        let a = ExactMatrix::from_i64_rows(f5, &[&[2, 3], &[4, 1]]).unwrap();
        let sq = a.mul(&a).unwrap();
        assert_eq!(sq, ExactMatrix::from_i64_rows(f5, &[&[16, 9], &[12, 13]]).unwrap());
        assert_eq!(a.add(&a.neg()).unwrap(), ExactMatrix::zeros(f5, 2, 2));
        assert_eq!(a.trace().unwrap(), Scalar::from_integer(3.into()));
    }

    #[test]
    fn dense_round_trip_and_transpose() {
        let a = q(&[&[0, 1, 0], &[2, 0, -3]]);
        assert_eq!(ExactMatrix::from_rows(Ring::Rationals, a.to_dense()).unwrap(), a);
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.transpose().get(2, 1), Scalar::from_integer((-3).into()));
        assert_eq!(a.nnz(), 3);
    }

    #[test]
    fn blocks_assemble() {
        let a = q(&[&[1]]);
        let b = q(&[&[2, 3]]);
        let m = ExactMatrix::block(Ring::Rationals, &[1, 1], &[1, 2], &[vec![Some(&a), None], vec![None, Some(&b)]]).unwrap();
        assert_eq!(m, q(&[&[1, 0, 0], &[0, 2, 3]]));
    }

    #[test]
    fn entries_sum() {
        let one = Scalar::one();
        let m = ExactMatrix::from_entries(Ring::Rationals, 1, 1, [(0, 0, one.clone()), (0, 0, -one)]).unwrap();
        assert!(m.is_zero());
        assert!(ExactMatrix::from_entries(Ring::Rationals, 1, 1, [(1, 0, Scalar::one())]).is_err());
    }
}
