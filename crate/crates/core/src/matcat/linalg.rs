//! Ranks, kernels, inverses and elementary divisors.
//!
//! Ranks over `Q` and `Z` are computed on the primitive integer rows of the
//! matrix by incremental echelon reduction, first in checked `i128`
//! arithmetic and, on overflow, again with big integers.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::ExactMatrix;
use super::ring::{Ring, Scalar};
use crate::{Error, Result};

/// The rank of `m`; over `Z` this is the rank over `Q`.
pub fn rank(m: &ExactMatrix) -> usize {
    match m.ring() {
        Ring::PrimeField(p) => rank_mod_p(m, p),
        _ => rank_rational(m),
    }
}

fn integer_rows(m: &ExactMatrix) -> Vec<Vec<(usize, BigInt)>> {
    (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let lcm = row.iter().fold(BigInt::one(), |acc, (_, x)| acc.lcm(x.denom()));
            row.iter().map(|(j, x)| (*j, (x * Scalar::from_integer(lcm.clone())).to_integer())).collect()
        })
        .filter(|r: &Vec<(usize, BigInt)>| !r.is_empty())
        .collect()
}

fn rank_rational(m: &ExactMatrix) -> usize {
    let rows = integer_rows(m);
    let small: Option<Vec<Vec<(usize, i128)>>> =
        rows.iter().map(|r| r.iter().map(|(j, x)| x.to_i128().map(|v| (*j, v))).collect()).collect();
    if let Some(small) = small {
        if let Some(r) = echelon_rank(small) {
            return r;
        }
    }
    echelon_rank(rows).expect("big integer arithmetic does not overflow")
}

trait Coefficient: Clone + Sized {
    fn zero() -> Self;
    fn vanishes(&self) -> bool;
    fn checked_mul(&self, other: &Self) -> Option<Self>;
    fn checked_sub(&self, other: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, other: &Self) -> Self;
}

impl Coefficient for i128 {
    fn zero() -> Self {
        0
    }
    fn vanishes(&self) -> bool {
        *self == 0
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        i128::checked_mul(*self, *other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        i128::checked_sub(*self, *other)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
}

impl Coefficient for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
}

/// `a·row - b·pivot`, with the result divided by its content. `None` on overflow.
fn eliminate<T: Coefficient>(row: &[(usize, T)], pivot: &[(usize, T)]) -> Option<Vec<(usize, T)>> {
    let a = &pivot[0].1;
    let b = &row[0].1;
    let g = a.gcd(b);
    let (a, b) = (a.div_exact(&g), b.div_exact(&g));
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut k) = (1, 1);
    while i < row.len() || k < pivot.len() {
        let (col, val) = match (row.get(i), pivot.get(k)) {
            (Some((ci, x)), Some((ck, y))) if ci == ck => {
                i += 1;
                k += 1;
                (*ci, x.checked_mul(&a)?.checked_sub(&y.checked_mul(&b)?)?)
            }
            (Some((ci, x)), Some((ck, _))) if ci < ck => {
                i += 1;
                (*ci, x.checked_mul(&a)?)
            }
            (Some((ci, x)), None) => {
                i += 1;
                (*ci, x.checked_mul(&a)?)
            }
            (_, Some((ck, y))) => {
                k += 1;
                (*ck, T::zero().checked_sub(&y.checked_mul(&b)?)?)
            }
            (None, None) => unreachable!(),
        };
        if !val.vanishes() {
            out.push((col, val));
        }
    }
    if let Some(first) = out.first() {
        let content = out.iter().skip(1).fold(first.1.clone(), |acc, (_, x)| acc.gcd(x));
        if !content.vanishes() {
            for (_, x) in &mut out {
                *x = x.div_exact(&content);
            }
        }
    }
    Some(out)
}

fn echelon_rank<T: Coefficient>(rows: Vec<Vec<(usize, T)>>) -> Option<usize> {
    let mut pivots: HashMap<usize, Vec<(usize, T)>> = HashMap::new();
    for mut row in rows {
        while let Some(&(lead, _)) = row.first() {
            match pivots.get(&lead) {
                Some(p) => row = eliminate(&row, p)?,
                None => {
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    Some(pivots.len())
}

fn rank_mod_p(m: &ExactMatrix, p: u64) -> usize {
    let p128 = p as u128;
    let to_u64 = |x: &Scalar| x.to_integer().mod_floor(&BigInt::from(p)).to_u64().expect("reduced residue");
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    for i in 0..m.rows() {
        let mut row: Vec<(usize, u64)> = m.row(i).iter().map(|(j, x)| (*j, to_u64(x))).filter(|(_, x)| *x != 0).collect();
        while let Some(&(lead, lv)) = row.first() {
            let Some(piv) = pivots.get(&lead) else {
                let inv = mod_pow(lv, p - 2, p);
                for (_, x) in &mut row {
                    *x = ((*x as u128 * inv as u128) % p128) as u64;
                }
                pivots.insert(lead, row);
                break;
            };
            // The stored pivot is monic, so subtract lv times it.
            let mut merged: std::collections::BTreeMap<usize, u64> = row.iter().skip(1).cloned().collect();
            for (j, y) in piv.iter().skip(1) {
                let e = merged.entry(*j).or_insert(0);
                *e = ((*e as u128 + p128 - (lv as u128 * *y as u128) % p128) % p128) as u64;
            }
            row = merged.into_iter().filter(|(_, x)| *x != 0).collect();
        }
    }
    pivots.len()
}

fn mod_pow(base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b = base as u128 % p as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p as u128;
        }
        b = b * b % p as u128;
        exp >>= 1;
    }
    acc as u64
}

/// Reduced row echelon form over a field, with the pivot columns.
fn rref(m: &ExactMatrix) -> Result<(Vec<Vec<Scalar>>, Vec<usize>)> {
    let ring = m.ring();
    if !ring.is_field() {
        return Err(Error::invalid("ring", format!("{ring} is not a field")));
    }
    let mut a = m.to_dense();
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(k) = (r..rows).find(|&k| !a[k][c].is_zero()) else { continue };
        a.swap(r, k);
        let inv = ring.normalize(a[r][c].recip())?;
        for x in &mut a[r] {
            *x = ring.reduce(&*x * &inv);
        }
        for k in 0..rows {
            if k != r && !a[k][c].is_zero() {
                let f = a[k][c].clone();
                for j in 0..cols {
                    let v = &a[k][j] - &f * &a[r][j];
                    a[k][j] = ring.reduce(v);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    Ok((a, pivots))
}

/// A basis of the kernel over a field, as columns.
pub fn kernel_basis(m: &ExactMatrix) -> Result<Vec<Vec<Scalar>>> {
    let ring = m.ring();
    let (a, pivots) = rref(m)?;
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    Ok(free
        .iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); m.cols()];
            v[f] = ring.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = ring.reduce(-a[r][f].clone());
            }
            v
        })
        .collect())
}

/// One solution `x` of `m x = rhs` over a field, if any; free variables are zero.
pub fn solve(m: &ExactMatrix, rhs: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    if rhs.len() != m.rows() {
        return Err(Error::Mismatch(format!("right-hand side of length {} for {} rows", rhs.len(), m.rows())));
    }
    let ring = m.ring();
    let b = ExactMatrix::column(ring, rhs.iter().map(|x| ring.reduce(x.clone())).collect())?;
    let aug = ExactMatrix::block(ring, &[m.rows()], &[m.cols(), 1], &[vec![Some(m), Some(&b)]])?;
    let (a, pivots) = rref(&aug)?;
    if pivots.last() == Some(&m.cols()) {
        return Ok(None);
    }
    let mut x = vec![Scalar::zero(); m.cols()];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = a[r][m.cols()].clone();
    }
    Ok(Some(x))
}

/// The inverse of a square matrix over a field.
pub fn inverse(m: &ExactMatrix) -> Result<ExactMatrix> {
    let n = m.rows();
    if n != m.cols() {
        return Err(Error::Mismatch(format!("inverse of a {}×{} matrix", n, m.cols())));
    }
    let ring = m.ring();
    let aug = ExactMatrix::block(ring, &[n], &[n, n], &[vec![Some(m), Some(&ExactMatrix::identity(ring, n))]])?;
    let (a, pivots) = rref(&aug)?;
    if pivots.len() < n || pivots[n - 1] >= n {
        return Err(Error::invalid("matrix", "not invertible"));
    }
    ExactMatrix::from_rows(ring, a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// The nonzero elementary divisors `d_1 | d_2 | …` of an integer matrix.
pub fn elementary_divisors(m: &ExactMatrix) -> Result<Vec<BigInt>> {
    if m.ring() != Ring::Integers {
        return Err(Error::invalid("ring", "elementary divisors need integer entries"));
    }
    let mut a: Vec<Vec<BigInt>> =
        m.to_dense().into_iter().map(|r| r.into_iter().map(|x| x.to_integer()).collect()).filter(|r: &Vec<BigInt>| r.iter().any(|x| !x.is_zero())).collect();
    let rows = a.len();
    let cols = m.cols();
    let mut divisors = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Pick the smallest nonzero entry of the remaining block as pivot.
        let Some((pi, pj)) = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()))
        else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    for j in t..cols {
                        let v = &a[t][j] * &q;
                        a[i][j] -= v;
                    }
                    if !a[i][t].is_zero() {
                        a.swap(t, i);
                        clean = false;
                    }
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    for row in a.iter_mut().skip(t) {
                        let v = &row[t] * &q;
                        row[j] -= v;
                    }
                    if !a[t][j].is_zero() {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                        clean = false;
                    }
                }
            }
            if !clean {
                continue;
            }
            // The pivot must divide the rest of the block.
            let bad = (t + 1..rows).flat_map(|i| (t + 1..cols).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_multiple_of(&a[t][t]));
            match bad {
                Some((i, _)) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        divisors.push(a[t][t].abs());
        t += 1;
    }
    divisors.sort();
    Ok(divisors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(ring: Ring, rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_i64_rows(ring, rows).unwrap()
    }

    #[test]
    fn ranks() {
        let a = m(Ring::Rationals, &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&a), 2);
        assert_eq!(rank(&ExactMatrix::zeros(Ring::Rationals, 3, 2)), 0);
        let b = m(Ring::PrimeField(2), &[&[1, 1], &[1, -1]]);
        assert_eq!(rank(&b), 1);
        assert_eq!(rank(&m(Ring::Rationals, &[&[1, 1], &[1, -1]])), 2);
        assert_eq!(rank(&m(Ring::Integers, &[&[2, 0], &[0, 2]])), 2);
    }

    #[test]
    fn rank_with_huge_entries_falls_back() {
        let big = i64::MAX;
        let a = m(Ring::Rationals, &[&[big, big - 1, 3], &[big - 2, big, 5], &[1, 1, 1]]);
        let expected = m(Ring::PrimeField(1_000_000_007), &[&[big, big - 1, 3], &[big - 2, big, 5], &[1, 1, 1]]);
        assert_eq!(rank(&a), 3);
        assert_eq!(rank(&expected), 3);
    }

    #[test]
    fn solving() {
        let a = m(Ring::Rationals, &[&[1, 2], &[2, 4], &[0, 1]]);
        let rhs: Vec<Scalar> = [3, 6, 1].iter().map(|&v| Scalar::from_integer(v.into())).collect();
        let x = solve(&a, &rhs).unwrap().unwrap();
        assert_eq!(a.mul(&ExactMatrix::column(Ring::Rationals, x).unwrap()).unwrap().to_dense().concat(), rhs);
        let bad: Vec<Scalar> = [3, 7, 1].iter().map(|&v| Scalar::from_integer(v.into())).collect();
        assert!(solve(&a, &bad).unwrap().is_none());
    }

    #[test]
    fn kernels_and_inverses() {
        let a = m(Ring::Rationals, &[&[1, 2, 3], &[2, 4, 6]]);
        let k = kernel_basis(&a).unwrap();
        assert_eq!(k.len(), 2);
        for v in &k {
            let col = ExactMatrix::column(Ring::Rationals, v.clone()).unwrap();
            assert!(a.mul(&col).unwrap().is_zero());
        }
        let p = m(Ring::Rationals, &[&[2, 1], &[1, 1]]);
        assert_eq!(inverse(&p).unwrap(), m(Ring::Rationals, &[&[1, -1], &[-1, 2]]));
        assert!(inverse(&m(Ring::Rationals, &[&[1, 1], &[1, 1]])).is_err());
        assert!(kernel_basis(&m(Ring::Integers, &[&[1]])).is_err());
    }

    #[test]
    fn smith_examples() {
        let a = m(Ring::Integers, &[&[2, 4], &[6, 8]]);
        assert_eq!(elementary_divisors(&a).unwrap(), vec![BigInt::from(2), BigInt::from(4)]);
        let b = m(Ring::Integers, &[&[2, 0], &[0, 3]]);
        assert_eq!(elementary_divisors(&b).unwrap(), vec![BigInt::from(1), BigInt::from(6)]);
        let c = m(Ring::Integers, &[&[1, 1], &[1, -1]]);
        assert_eq!(elementary_divisors(&c).unwrap(), vec![BigInt::from(1), BigInt::from(2)]);
        assert!(elementary_divisors(&ExactMatrix::zeros(Ring::Integers, 2, 2)).unwrap().is_empty());
    }
}
