use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::matcat::{format_scalar, linalg, DualityData, ExactMatrix, Ring, Scalar};
use crate::{Error, Result};

/// A finite-dimensional unital algebra given by structure constants.
///
/// `mul[k + d·(j + d·i)]` is the coefficient `c^k_{ij}` of `e_k` in `e_i e_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraSC {
    ring: Ring,
    dim: usize,
    unit: Vec<Scalar>,
    mul: Vec<Scalar>,
    table: Vec<Vec<(usize, Scalar)>>,
}

impl AlgebraSC {
    /// Checks shapes and normalizes entries; the axioms are checked by [`validate_algebra`].
    pub fn new(ring: Ring, dim: usize, unit: Vec<Scalar>, mul: Vec<Scalar>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::invalid("algebra", "dimension must be positive"));
        }
        if unit.len() != dim || mul.len() != dim * dim * dim {
            return Err(Error::invalid("algebra", format!("expected {dim} unit and {} structure constants", dim * dim * dim)));
        }
        let unit = unit.into_iter().map(|x| ring.normalize(x)).collect::<Result<Vec<_>>>()?;
        let mul = mul.into_iter().map(|x| ring.normalize(x)).collect::<Result<Vec<_>>>()?;
        let table = (0..dim * dim)
            .map(|ij| (0..dim).filter_map(|k| Some((k, mul[k + dim * ij].clone())).filter(|(_, c)| !c.is_zero())).collect())
            .collect();
        Ok(AlgebraSC { ring, dim, unit, mul, table })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn structure_constants(&self) -> &[Scalar] {
        &self.mul
    }

    /// `e_i e_j` as a sparse vector.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim + j]
    }

    /// `v · e_j` for a sparse vector `v`.
    fn times_basis(&self, v: &[(usize, Scalar)], j: usize) -> Vec<(usize, Scalar)> {
        self.collect(v.iter().flat_map(|(i, a)| self.basis_product(*i, j).iter().map(move |(k, c)| (*k, a * c))))
    }

    fn collect(&self, terms: impl Iterator<Item = (usize, Scalar)>) -> Vec<(usize, Scalar)> {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (k, x) in terms {
            *acc.entry(k).or_insert_with(Scalar::zero) += x;
        }
        acc.into_iter().map(|(k, x)| (k, self.ring.reduce(x))).filter(|(_, x)| !x.is_zero()).collect()
    }

    fn unit_sparse(&self) -> Vec<(usize, Scalar)> {
        self.unit.iter().cloned().enumerate().filter(|(_, x)| !x.is_zero()).collect()
    }

    /// The product `e_{i_1} ⋯ e_{i_m}`, with the empty product the unit.
    pub fn product(&self, factors: &[usize]) -> Vec<(usize, Scalar)> {
        match factors.split_first() {
            None => self.unit_sparse(),
            Some((first, rest)) => {
                let one = self.ring.one();
                rest.iter().fold(vec![(*first, one)], |v, &j| self.times_basis(&v, j))
            }
        }
    }

    /// The map `A^{⊗inputs} → A^{⊗fibers.len()}` whose output slot `j` is the
    /// ordered product of the input slots listed in `fibers[j]`.
    pub fn fiber_multiply(&self, inputs: usize, fibers: &[Vec<usize>]) -> Result<ExactMatrix> {
        if fibers.iter().flatten().any(|&s| s >= inputs) {
            return Err(Error::OutOfRange(format!("fiber slot beyond {inputs} inputs")));
        }
        let d = self.dim;
        let cols = d.pow(inputs as u32);
        let rows = d.pow(fibers.len() as u32);
        let mut entries = Vec::new();
        let mut digits = vec![0usize; inputs];
        for col in 0..cols {
            let mut rest = col;
            for s in (0..inputs).rev() {
                digits[s] = rest % d;
                rest /= d;
            }
            let mut column: Vec<(usize, Scalar)> = vec![(0, self.ring.one())];
            for fiber in fibers {
                let factors: Vec<usize> = fiber.iter().map(|&s| digits[s]).collect();
                let piece = self.product(&factors);
                let mut next = Vec::with_capacity(column.len() * piece.len());
                for (r, a) in &column {
                    for (k, c) in &piece {
                        next.push((r * d + k, self.ring.reduce(a * c)));
                    }
                }
                column = next;
                if column.is_empty() {
                    break;
                }
            }
            entries.extend(column.into_iter().map(|(r, x)| (r, col, x)));
        }
        ExactMatrix::from_entries(self.ring, rows, cols, entries)
    }

    /// The same algebra in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &ExactMatrix) -> Result<AlgebraSC> {
        let d = self.dim;
        if (p.rows(), p.cols()) != (d, d) || p.ring() != self.ring {
            return Err(Error::Mismatch("basis change matrix has the wrong shape or ring".into()));
        }
        let q = linalg::inverse(p)?;
        let pd = p.to_dense();
        let qd = q.to_dense();
        let mut mul = vec![Scalar::zero(); d * d * d];
        for a in 0..d {
            for b in 0..d {
                // (Σ_i P[i][a] e_i)(Σ_j P[j][b] e_j), then change coordinates.
                let mut old = vec![Scalar::zero(); d];
                for i in 0..d {
                    for j in 0..d {
                        let coef = &pd[i][a] * &pd[j][b];
                        if coef.is_zero() {
                            continue;
                        }
                        for (k, c) in self.basis_product(i, j) {
                            old[*k] += &coef * c;
                        }
                    }
                }
                for c in 0..d {
                    let v: Scalar = (0..d).map(|k| &qd[c][k] * &old[k]).sum();
                    mul[c + d * (b + d * a)] = v;
                }
            }
        }
        let unit = (0..d).map(|c| (0..d).map(|k| &qd[c][k] * &self.unit[k]).sum()).collect();
        AlgebraSC::new(self.ring, d, unit, mul)
    }

    pub fn ground(ring: Ring) -> AlgebraSC {
        AlgebraSC::new(ring, 1, vec![ring.one()], vec![ring.one()]).expect("the ground ring is valid")
    }

    /// `End(V) = V^∨ ⊗ V` for a duality datum: `e_i^∨ ⊗ e_j` has index `i·d + j`,
    /// the product contracts the inner pair with `ε` and the unit is `η`.
    pub fn endomorphisms(data: &DualityData) -> AlgebraSC {
        let d = data.dim();
        let ring = data.ring();
        let e = data.pairing();
        let n = d * d;
        let mut mul = vec![Scalar::zero(); n * n * n];
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let (x, y, z) = (i * d + j, k * d + l, i * d + l);
                        mul[z + n * (y + n * x)] = e.get(j, k);
                    }
                }
            }
        }
        let unit = data.eta().entries_row_major();
        AlgebraSC::new(ring, n, unit, mul).expect("entries come from normalized data")
    }

    /// `M_d` on the matrix units `e_{ij}` (index `i·d + j`).
    pub fn matrix(d: usize, ring: Ring) -> Result<AlgebraSC> {
        Ok(Self::endomorphisms(&crate::matcat::canonical_duality(d, ring)?))
    }

    /// `k[x]/xⁿ` on the monomials `1, x, …, x^{n-1}`.
    pub fn truncated_polynomial(n: usize, ring: Ring) -> Result<AlgebraSC> {
        if n == 0 {
            return Err(Error::invalid("algebra", "k[x]/x^0 is the zero ring"));
        }
        let mut mul = vec![Scalar::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n - i {
                mul[(i + j) + n * (j + n * i)] = ring.one();
            }
        }
        let mut unit = vec![Scalar::zero(); n];
        unit[0] = ring.one();
        AlgebraSC::new(ring, n, unit, mul)
    }

    /// The group algebra of the cyclic group of order `n`.
    pub fn cyclic_group(n: usize, ring: Ring) -> Result<AlgebraSC> {
        if n == 0 {
            return Err(Error::invalid("algebra", "cyclic groups have positive order"));
        }
        let mut mul = vec![Scalar::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                mul[(i + j) % n + n * (j + n * i)] = ring.one();
            }
        }
        let mut unit = vec![Scalar::zero(); n];
        unit[0] = ring.one();
        AlgebraSC::new(ring, n, unit, mul)
    }

    /// `matrix:d`, `truncpoly:n` or `group:Cn`.
    pub fn from_spec(spec: &str, ring: Ring) -> Result<AlgebraSC> {
        let (kind, arg) = spec.split_once(':').ok_or_else(|| Error::Parse(format!("`{spec}` is not a built-in algebra")))?;
        let num = |s: &str| s.parse::<usize>().map_err(|_| Error::Parse(format!("bad size in `{spec}`")));
        match kind {
            "matrix" => Self::matrix(num(arg)?, ring),
            "truncpoly" => Self::truncated_polynomial(num(arg)?, ring),
            "group" => Self::cyclic_group(num(arg.strip_prefix('C').unwrap_or(arg))?, ring),
            _ => Err(Error::Parse(format!("unknown algebra family `{kind}`"))),
        }
    }

    pub fn from_json(text: &str) -> Result<AlgebraSC> {
        let raw: AlgebraJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let ring: Ring = raw.ring.parse()?;
        let parse = |v: &[String]| v.iter().map(|s| ring.parse_scalar(s)).collect::<Result<Vec<_>>>();
        AlgebraSC::new(ring, raw.dim, parse(&raw.unit)?, parse(&raw.mul)?)
    }

    pub fn to_json(&self) -> String {
        let raw = AlgebraJson {
            ring: self.ring.to_string(),
            dim: self.dim,
            unit: self.unit.iter().map(format_scalar).collect(),
            mul: self.mul.iter().map(format_scalar).collect(),
        };
        serde_json::to_string(&raw).expect("plain data serializes")
    }

    /// The same structure constants over another ring.
    pub fn over(&self, ring: Ring) -> Result<AlgebraSC> {
        AlgebraSC::new(ring, self.dim, self.unit.clone(), self.mul.clone())
    }
}

#[derive(Serialize, Deserialize)]
struct AlgebraJson {
    ring: String,
    dim: usize,
    unit: Vec<String>,
    mul: Vec<String>,
}

/// Check associativity and unitality, reporting the first failing basis indices.
pub fn validate_algebra(a: &AlgebraSC) -> Result<()> {
    let d = a.dim;
    let one = a.ring.one();
    let unit = a.unit_sparse();
    for i in 0..d {
        let e_i = vec![(i, one.clone())];
        let left = a.collect(unit.iter().flat_map(|(u, c)| a.basis_product(*u, i).iter().map(move |(k, x)| (*k, c * x))));
        if left != e_i {
            return Err(Error::AlgebraAxiom { law: "left unit", witness: vec![i] });
        }
        let right = a.collect(unit.iter().flat_map(|(u, c)| a.basis_product(i, *u).iter().map(move |(k, x)| (*k, c * x))));
        if right != e_i {
            return Err(Error::AlgebraAxiom { law: "right unit", witness: vec![i] });
        }
    }
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let lhs = a.times_basis(a.basis_product(i, j), k);
                let rhs = a.collect(a.basis_product(j, k).iter().flat_map(|(m, c)| a.basis_product(i, *m).iter().map(move |(n, x)| (*n, c * x))));
                if lhs != rhs {
                    return Err(Error::AlgebraAxiom { law: "associativity", witness: vec![i, j, k] });
                }
            }
        }
    }
    Ok(())
}
