use num_traits::Zero;

use super::matrix::ExactMatrix;
use super::ring::{Ring, Scalar};
use crate::{Error, Result};

/// A duality datum for `V = k^d`.
///
/// `eta: 1 → V^∨ ⊗ V` is a `d² × 1` column and `eps: V ⊗ V^∨ → 1` a
/// `1 × d²` row. Both flatten a pair of factors row-major, so the pair of
/// basis vectors `(i, j)` sits at index `i·d + j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityData {
    dim: usize,
    eta: ExactMatrix,
    eps: ExactMatrix,
}

impl DualityData {
    /// Accepts any pair passing both zig-zag identities.
    pub fn new(dim: usize, eta: ExactMatrix, eps: ExactMatrix) -> Result<Self> {
        if dim == 0 {
            return Err(Error::invalid("duality data", "dimension must be positive"));
        }
        if eta.ring() != eps.ring() {
            return Err(Error::Mismatch("unit and counit over different rings".into()));
        }
        if (eta.rows(), eta.cols()) != (dim * dim, 1) || (eps.rows(), eps.cols()) != (1, dim * dim) {
            return Err(Error::invalid("duality data", format!("unit or counit has the wrong shape for dimension {dim}")));
        }
        let data = DualityData { dim, eta, eps };
        match data.zigzags()? {
            (true, true) => Ok(data),
            (left, right) => Err(Error::invalid(
                "duality data",
                format!("zig-zag identities fail (on V: {left}, on the dual: {right})"),
            )),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ring(&self) -> Ring {
        self.eta.ring()
    }

    pub fn eta(&self) -> &ExactMatrix {
        &self.eta
    }

    pub fn eps(&self) -> &ExactMatrix {
        &self.eps
    }

    /// `(ε ⊗ id_V) ∘ (id_V ⊗ η) = id_V` and `(id_{V^∨} ⊗ ε) ∘ (η ⊗ id_{V^∨}) = id_{V^∨}`.
    pub fn zigzags(&self) -> Result<(bool, bool)> {
        let id = ExactMatrix::identity(self.ring(), self.dim);
        let left = self.eps.kron(&id)?.mul(&id.kron(&self.eta)?)?;
        let right = id.kron(&self.eps)?.mul(&self.eta.kron(&id)?)?;
        Ok((left == id, right == id))
    }

    /// `H[i][j]`, the coefficient of `e_i^∨ ⊗ e_j` in `η`.
    pub fn copairing(&self) -> ExactMatrix {
        self.reshape(&self.eta.transpose())
    }

    /// `E[j][i] = ε(e_j ⊗ e_i^∨)`.
    pub fn pairing(&self) -> ExactMatrix {
        self.reshape(&self.eps)
    }

    fn reshape(&self, row: &ExactMatrix) -> ExactMatrix {
        let d = self.dim;
        let entries = row.row(0).iter().map(|(k, x)| (k / d, k % d, x.clone()));
        ExactMatrix::from_entries(self.ring(), d, d, entries).expect("entries are in range and normalized")
    }
}

/// `η = Σ e_i^∨ ⊗ e_i` and `ε` the evaluation pairing.
pub fn canonical_duality(d: usize, ring: Ring) -> Result<DualityData> {
    if d == 0 {
        return Err(Error::invalid("duality data", "dimension must be positive"));
    }
    let id = ExactMatrix::identity(ring, d);
    let flat = id.entries_row_major();
    let eta = ExactMatrix::column(ring, flat.clone())?;
    let eps = ExactMatrix::from_rows(ring, vec![flat])?;
    DualityData::new(d, eta, eps)
}

/// The permutation of tensor factors in which output factor `i` is input factor `perm[i]`.
pub fn symmetry(ring: Ring, dims: &[usize], perm: &[usize]) -> Result<ExactMatrix> {
    let n = dims.len();
    let mut seen = vec![false; n];
    if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
        return Err(Error::invalid("permutation", format!("{perm:?} does not permute {n} factors")));
    }
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    let total: usize = dims.iter().product();
    let one = ring.one();
    let mut entries = Vec::with_capacity(total);
    let mut digits = vec![0usize; n];
    for col in 0..total {
        let mut rest = col;
        for k in (0..n).rev() {
            digits[k] = rest % dims[k];
            rest /= dims[k];
        }
        let row = perm.iter().zip(&out_dims).fold(0, |acc, (&p, &d)| acc * d + digits[p]);
        entries.push((row, col, one.clone()));
    }
    ExactMatrix::from_entries(ring, total, total, entries)
}

/// A letter of a word in `V` (written `L`) and its dual (written `R`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    L,
    R,
}

/// Evaluates words in `V`, `V^∨` and the generating maps between them.
///
/// Each method returns the new word together with the matrix of the map
/// from the old word's tensor product to the new one's.
#[derive(Debug, Clone)]
pub struct WordEvaluator<'a> {
    data: &'a DualityData,
}

impl<'a> WordEvaluator<'a> {
    pub fn new(data: &'a DualityData) -> Self {
        WordEvaluator { data }
    }

    pub fn dimension(&self, word: &[Letter]) -> usize {
        self.data.dim.pow(word.len() as u32)
    }

    pub fn identity(&self, word: &[Letter]) -> ExactMatrix {
        ExactMatrix::identity(self.data.ring(), self.dimension(word))
    }

    fn whisker(&self, word: &[Letter], pos: usize, skip: usize, middle: &ExactMatrix) -> Result<ExactMatrix> {
        let before = self.identity(&word[..pos]);
        let after = self.identity(&word[pos + skip..]);
        before.kron(middle)?.kron(&after)
    }

    /// Insert `η`, i.e. the letters `R L`, before position `pos`.
    pub fn insert_eta(&self, word: &[Letter], pos: usize) -> Result<(Vec<Letter>, ExactMatrix)> {
        if pos > word.len() {
            return Err(Error::OutOfRange(format!("insertion at {pos} in a word of length {}", word.len())));
        }
        let mut out = word.to_vec();
        out.splice(pos..pos, [Letter::R, Letter::L]);
        Ok((out, self.whisker(word, pos, 0, &self.data.eta)?))
    }

    /// Contract the adjacent letters `L R` at `pos, pos + 1` with `ε`.
    pub fn contract_eps(&self, word: &[Letter], pos: usize) -> Result<(Vec<Letter>, ExactMatrix)> {
        if word.get(pos) != Some(&Letter::L) || word.get(pos + 1) != Some(&Letter::R) {
            return Err(Error::invalid("contraction", format!("no adjacent L, R at position {pos}")));
        }
        let mut out = word.to_vec();
        out.drain(pos..pos + 2);
        Ok((out, self.whisker(word, pos, 2, &self.data.eps)?))
    }

    /// Exchange the letters at `pos` and `pos + 1`.
    pub fn swap(&self, word: &[Letter], pos: usize) -> Result<(Vec<Letter>, ExactMatrix)> {
        if pos + 1 >= word.len() {
            return Err(Error::OutOfRange(format!("swap at {pos} in a word of length {}", word.len())));
        }
        let mut out = word.to_vec();
        out.swap(pos, pos + 1);
        let d = self.data.dim;
        let sw = symmetry(self.data.ring(), &[d, d], &[1, 0])?;
        Ok((out, self.whisker(word, pos, 2, &sw)?))
    }
}

/// `ε ∘ σ ∘ η`, the dimension of `V` as a scalar.
pub fn dimension_scalar(data: &DualityData) -> Result<Scalar> {
    let ev = WordEvaluator::new(data);
    let (w, eta) = ev.insert_eta(&[], 0)?;
    let (w, swap) = ev.swap(&w, 0)?;
    let (_, eps) = ev.contract_eps(&w, 0)?;
    let m = eps.mul(&swap)?.mul(&eta)?;
    Ok(if m.row(0).is_empty() { Scalar::zero() } else { m.get(0, 0) })
}
