//! Traces of labeled circles.
//!
//! A labeled circle is a configuration of points with an endomorphism of
//! `V` on every arc. Each point contributes a copy of `η: 1 → V^∨ ⊗ V`; the
//! tensor factors are then regrouped by the cyclic shift moving the first
//! `V^∨` to the end, so that every arc owns a pair `V ⊗ V^∨` running from
//! its start point to its end point. The arc label acts on the `V` of the
//! pair and `ε` closes it up.
//!
//! The scalar only depends on the cyclic word of labels: it is the trace of
//! the composite taken counterclockwise, earlier arcs applied first.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::circle::{rotation_morphism, Angle, CircleConfig, CircleMorphism};
use crate::hochschild::AlgebraSC;
use crate::matcat::{format_scalar, parse_rational, symmetry, DualityData, ExactMatrix, Ring, Scalar};
use crate::paracyclic::{ParaMap, ParaObj};
use crate::{Error, Result};

/// Above this many entries in `(V^∨ ⊗ V)^{⊗r}` the dense route is refused.
pub const DENSE_LIMIT: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledCircle {
    config: CircleConfig,
    duality: DualityData,
    labels: Vec<ExactMatrix>,
}

impl LabeledCircle {
    /// `labels[a]` sits on arc `a`, arcs counted counterclockwise from the base arc.
    pub fn new(config: CircleConfig, duality: DualityData, labels: Vec<ExactMatrix>) -> Result<Self> {
        if labels.len() != config.len() {
            return Err(Error::invalid("labeled circle", format!("{} labels for {} arcs", labels.len(), config.len())));
        }
        let d = duality.dim();
        for (a, m) in labels.iter().enumerate() {
            if (m.rows(), m.cols()) != (d, d) {
                return Err(Error::invalid("labeled circle", format!("label on arc {a} is not {d}×{d}")));
            }
            if m.ring() != duality.ring() {
                return Err(Error::Mismatch(format!("label on arc {a} is over {}", m.ring())));
            }
        }
        Ok(LabeledCircle { config, duality, labels })
    }

    /// Labels all equal to the identity.
    pub fn identity(config: CircleConfig, duality: DualityData) -> Self {
        let id = ExactMatrix::identity(duality.ring(), duality.dim());
        let labels = vec![id; config.len()];
        LabeledCircle { config, duality, labels }
    }

    pub fn config(&self) -> &CircleConfig {
        &self.config
    }

    pub fn duality(&self) -> &DualityData {
        &self.duality
    }

    pub fn labels(&self) -> &[ExactMatrix] {
        &self.labels
    }

    /// The label on the arc leaving point `j`.
    fn label_after_point(&self, j: usize) -> &ExactMatrix {
        let r = self.config.len() as i64;
        let c = self.config.base_offset();
        &self.labels[(j as i64 + 1 - c).rem_euclid(r) as usize]
    }

    /// Contract point by point: the pair at point `j` and the arc leaving it
    /// give the transfer matrix `H φᵀ E`, and the scalar is the trace of
    /// their product.
    pub fn evaluate(&self) -> Result<Scalar> {
        let ring = self.duality.ring();
        let h = self.duality.copairing();
        let e = self.duality.pairing();
        let d = self.duality.dim();
        let mut acc = ExactMatrix::identity(ring, d);
        for j in 0..self.config.len() {
            acc = acc.mul(&h.mul(&self.label_after_point(j).transpose())?.mul(&e)?)?;
        }
        acc.trace()
    }

    /// The full composite `ε^{⊗r} ∘ (φ ⊗ id)^{⊗r} ∘ shift ∘ η^{⊗r}` as matrices.
    pub fn evaluate_dense(&self) -> Result<Scalar> {
        let ring = self.duality.ring();
        let d = self.duality.dim();
        let r = self.config.len();
        if d.checked_pow(2 * r as u32).is_none_or(|n| n > DENSE_LIMIT) {
            return Err(Error::invalid("dense evaluation", format!("{d}^{} entries exceed the limit", 2 * r)));
        }
        let units = vec![self.duality.eta().clone(); r];
        let counits = vec![self.duality.eps().clone(); r];
        let start = ExactMatrix::kron_all(ring, &units)?;
        let perm: Vec<usize> = (0..2 * r).map(|i| (i + 1) % (2 * r)).collect();
        let shift = symmetry(ring, &vec![d; 2 * r], &perm)?;
        let id = ExactMatrix::identity(ring, d);
        let arcs: Vec<ExactMatrix> =
            (0..r).map(|j| self.label_after_point(j).kron(&id)).collect::<Result<_>>()?;
        let act = ExactMatrix::kron_all(ring, &arcs)?;
        let close = ExactMatrix::kron_all(ring, &counits)?;
        Ok(close.mul(&act)?.mul(&shift)?.mul(&start)?.get(0, 0))
    }

    /// Evaluate densely when small enough, otherwise by transfer matrices.
    pub fn evaluate_checked(&self) -> Result<Scalar> {
        let fast = self.evaluate()?;
        if let Ok(slow) = self.evaluate_dense() {
            if slow != fast {
                return Err(Error::Mismatch(format!(
                    "dense evaluation {} differs from transfer evaluation {}",
                    format_scalar(&slow),
                    format_scalar(&fast)
                )));
            }
        }
        Ok(fast)
    }
}

/// The classical trace of `φ_{r-1} ∘ ⋯ ∘ φ_0`.
pub fn classical_trace(ring: Ring, labels: &[ExactMatrix]) -> Result<Scalar> {
    let d = labels.first().map_or(0, ExactMatrix::rows);
    labels.iter().try_fold(ExactMatrix::identity(ring, d), |acc, m| m.mul(&acc))?.trace()
}

/// Push labels forward: the label of a target arc is the composite of the
/// labels on its fiber, earlier arcs first; an empty fiber gets the identity.
pub fn transport(lc: &LabeledCircle, m: &CircleMorphism) -> Result<LabeledCircle> {
    if m.src() != &lc.config {
        return Err(Error::Mismatch("the move does not start at the labeled configuration".into()));
    }
    let ring = lc.duality.ring();
    let d = lc.duality.dim();
    let r = lc.config.len() as i64;
    let labels = (0..m.dst().len() as i64)
        .map(|b| {
            m.fiber(b).try_fold(ExactMatrix::identity(ring, d), |acc, x| lc.labels[x.rem_euclid(r) as usize].mul(&acc))
        })
        .collect::<Result<Vec<_>>>()?;
    LabeledCircle::new(m.dst().clone(), lc.duality.clone(), labels)
}

/// Compare the trace of a cyclic word of labels with the traces of all its
/// cyclic rotations, and with its transports along rotations of the circle
/// by multiples of `1/(2r)`.
pub fn cyclic_invariance_check(duality: &DualityData, labels: &[ExactMatrix]) -> Result<bool> {
    if labels.is_empty() {
        return Err(Error::invalid("labels", "at least one label is needed"));
    }
    let r = labels.len();
    let config = crate::circle::from_para(ParaObj::new(r)?);
    let base = LabeledCircle::new(config.clone(), duality.clone(), labels.to_vec())?.evaluate()?;
    for k in 1..r {
        let mut rotated = labels.to_vec();
        rotated.rotate_left(k);
        if LabeledCircle::new(config.clone(), duality.clone(), rotated)?.evaluate()? != base {
            return Ok(false);
        }
    }
    let lc = LabeledCircle::new(config.clone(), duality.clone(), labels.to_vec())?;
    for k in 1..=2 * r as i64 {
        let theta = Angle::new(k.into(), (2 * r as i64).into());
        if transport(&lc, &rotation_morphism(&config, &theta))?.evaluate()? != base {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `A^{⊗m} → A^{⊗n}` for a paracyclic map: target slot `y` receives the
/// product of the source slots `x mod m` for `x` in the fiber over `y`, in
/// increasing order of `x`.
pub fn hochschild_diagram(a: &AlgebraSC, f: &ParaMap) -> Result<ExactMatrix> {
    let m = f.src().orbits() as i64;
    let fibers: Vec<Vec<usize>> = (0..f.dst().orbits() as i64)
        .map(|y| (f.lower_preimage(y)..f.lower_preimage(y + 1)).map(|x| x.rem_euclid(m) as usize).collect())
        .collect();
    a.fiber_multiply(m as usize, &fibers)
}

/// The cone point: `k → A^{⊗n}`, the unit in every slot.
pub fn hochschild_cone(a: &AlgebraSC, n: usize) -> Result<ExactMatrix> {
    a.fiber_multiply(0, &vec![Vec::new(); n])
}

/// JSON form of a labeled circle. Scalars are numbers or strings such as `"-2/3"`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LabeledCircleDoc {
    pub ring: String,
    pub dim: usize,
    pub points: Vec<Value>,
    pub labels: Vec<Vec<Vec<Value>>>,
    #[serde(default)]
    pub eta: Option<Vec<Value>>,
    #[serde(default)]
    pub eps: Option<Vec<Value>>,
}

pub(crate) fn scalar_from_json(ring: Ring, v: &Value) -> Result<Scalar> {
    match v {
        Value::Number(n) => ring.parse_scalar(&n.to_string()),
        Value::String(s) => ring.parse_scalar(s),
        other => Err(Error::Parse(format!("`{other}` is not a scalar"))),
    }
}

impl LabeledCircleDoc {
    pub fn build(&self) -> Result<LabeledCircle> {
        let ring: Ring = self.ring.parse()?;
        let points = self
            .points
            .iter()
            .map(|v| match v {
                Value::String(s) => parse_rational(s),
                Value::Number(n) => parse_rational(&n.to_string()),
                other => Err(Error::Parse(format!("`{other}` is not an angle"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let config = CircleConfig::new(points)?;
        let duality = match (&self.eta, &self.eps) {
            (None, None) => crate::matcat::canonical_duality(self.dim, ring)?,
            (Some(eta), Some(eps)) => {
                let parse = |v: &[Value]| v.iter().map(|x| scalar_from_json(ring, x)).collect::<Result<Vec<_>>>();
                let eta = ExactMatrix::column(ring, parse(eta)?)?;
                let eps = ExactMatrix::from_rows(ring, vec![parse(eps)?])?;
                DualityData::new(self.dim, eta, eps)?
            }
            _ => return Err(Error::invalid("labeled circle", "give both eta and eps or neither")),
        };
        let labels = self
            .labels
            .iter()
            .map(|m| {
                let rows = m
                    .iter()
                    .map(|row| row.iter().map(|x| scalar_from_json(ring, x)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                ExactMatrix::from_rows(ring, rows)
            })
            .collect::<Result<Vec<_>>>()?;
        LabeledCircle::new(config, duality, labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circle::{geometric, insert_point, merge_points};
    use crate::matcat::canonical_duality;
    use num_traits::Zero;

    fn q(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_i64_rows(Ring::Rationals, rows).unwrap()
    }

    fn angles(v: &[(i64, i64)]) -> CircleConfig {
        CircleConfig::new(v.iter().map(|&(a, b)| Angle::new(a.into(), b.into())).collect()).unwrap()
    }

    #[test]
    fn identity_labels_give_dimension() {
        let data = canonical_duality(3, Ring::Rationals).unwrap();
        for config in [angles(&[(0, 1)]), angles(&[(1, 4), (1, 2), (2, 3)])] {
            let lc = LabeledCircle::identity(config, data.clone());
            assert_eq!(lc.evaluate_checked().unwrap(), Scalar::from_integer(3.into()));
        }
    }

    #[test]
    fn nilpotent_label_is_traceless() {
        let data = canonical_duality(2, Ring::Rationals).unwrap();
        let lc = LabeledCircle::new(angles(&[(1, 3)]), data, vec![q(&[&[0, 1], &[0, 0]])]).unwrap();
        assert!(lc.evaluate_checked().unwrap().is_zero());
    }

    #[test]
    fn two_arcs_give_trace_of_product() {
        let data = canonical_duality(2, Ring::Rationals).unwrap();
        let phi = q(&[&[1, 2], &[3, 4]]);
        let psi = q(&[&[0, 1], &[5, -1]]);
        // trace(ψφ) by hand: ψφ = [[3, 4], [2, 6]].
        let lc = LabeledCircle::new(angles(&[(0, 1), (1, 2)]), data, vec![phi, psi]).unwrap();
        assert_eq!(lc.evaluate_checked().unwrap(), Scalar::from_integer(9.into()));
    }

    #[test]
    fn twisted_duality_agrees() {
        // η = Σ e_i^∨ ⊗ P e_i and ε with P^{-1}, for P = [[1, 1], [0, 1]].
        let eta = ExactMatrix::column(Ring::Rationals, [1, 0, 1, 1].iter().map(|&v| Scalar::from_integer(v.into())).collect()).unwrap();
        let eps = ExactMatrix::from_i64_rows(Ring::Rationals, &[&[1, 0, -1, 1]]).unwrap();
        let data = DualityData::new(2, eta, eps).unwrap();
        let labels = vec![q(&[&[1, 2], &[0, 1]]), q(&[&[3, 0], &[1, 1]]), q(&[&[0, 1], &[1, 0]])];
        let expected = classical_trace(Ring::Rationals, &labels).unwrap();
        let lc = LabeledCircle::new(angles(&[(1, 5), (2, 5), (3, 5)]), data, labels).unwrap();
        assert_eq!(lc.evaluate().unwrap(), expected);
        assert_eq!(lc.evaluate_dense().unwrap(), expected);
    }

    #[test]
    fn moves_preserve_the_scalar() {
        let data = canonical_duality(2, Ring::Rationals).unwrap();
        let labels = vec![q(&[&[1, 2], &[3, 4]]), q(&[&[0, 1], &[5, -1]]), q(&[&[2, 0], &[1, 1]])];
        let config = angles(&[(0, 1), (1, 3), (2, 3)]);
        let lc = LabeledCircle::new(config.clone(), data, labels).unwrap();
        let value = lc.evaluate().unwrap();
        let merged = transport(&lc, &merge_points(&config, 1).unwrap()).unwrap();
        assert_eq!(merged.config().len(), 2);
        assert_eq!(merged.evaluate_checked().unwrap(), value);
        let inserted = transport(&lc, &insert_point(&config, &Angle::new(1.into(), 2.into())).unwrap()).unwrap();
        assert_eq!(inserted.evaluate_checked().unwrap(), value);
        assert!(inserted.labels().iter().any(|m| m.is_identity()));
        let spun = transport(&lc, &geometric(&config, &config.rotate(&Angle::new(1.into(), 7.into())), &Angle::new(1.into(), 7.into()))).unwrap();
        assert_eq!(spun.evaluate().unwrap(), value);
        assert!(transport(&merged, &merge_points(&config, 0).unwrap()).is_err());
    }

    #[test]
    fn merge_composes_earlier_arc_first() {
        let data = canonical_duality(2, Ring::Rationals).unwrap();
        let phi = q(&[&[1, 2], &[3, 4]]);
        let psi = q(&[&[0, 1], &[5, -1]]);
        let config = angles(&[(1, 4), (3, 4)]);
        let lc = LabeledCircle::new(config.clone(), data, vec![phi.clone(), psi.clone()]).unwrap();
        // Arc 0 runs from 3/4 to 1/4; merging it away deletes the point 1/4.
        let merged = transport(&lc, &merge_points(&config, 0).unwrap()).unwrap();
        assert_eq!(merged.labels(), &[psi.mul(&phi).unwrap()]);
    }

    #[test]
    fn cyclic_invariance() {
        let data = canonical_duality(2, Ring::Rationals).unwrap();
        let labels = vec![q(&[&[1, 2], &[3, 4]]), q(&[&[0, 1], &[5, -1]]), q(&[&[2, 0], &[1, 1]])];
        assert!(cyclic_invariance_check(&data, &labels[..1]).unwrap());
        assert!(cyclic_invariance_check(&data, &labels).unwrap());
        assert!(cyclic_invariance_check(&data, &[]).is_err());
    }

    #[test]
    fn hochschild_diagram_basics() {
        let a = AlgebraSC::matrix(2, Ring::Rationals).unwrap();
        let two = ParaObj::new(2).unwrap();
        let one = ParaObj::new(1).unwrap();
        assert!(hochschild_diagram(&a, &ParaMap::identity(two)).unwrap().is_identity());
        let collapse = ParaMap::new(two, one, vec![0, 0]).unwrap();
        let mult = hochschild_diagram(&a, &collapse).unwrap();
        assert_eq!(mult, a.fiber_multiply(2, &[vec![0, 1]]).unwrap());
        let commutative = AlgebraSC::truncated_polynomial(3, Ring::Rationals).unwrap();
        assert!(hochschild_diagram(&commutative, &ParaMap::translation(one, 1)).unwrap().is_identity());
        let cone = hochschild_cone(&a, 2).unwrap();
        assert_eq!(mult.mul(&cone).unwrap(), hochschild_cone(&a, 1).unwrap());
    }

    #[test]
    fn json_document() {
        let doc: LabeledCircleDoc = serde_json::from_str(
            r#"{"ring": "Q", "dim": 2, "points": ["0", "1/2"], "labels": [[[1, 2], [3, 4]], [["0", 1], [5, "-1"]]]}"#,
        )
        .unwrap();
        assert_eq!(doc.build().unwrap().evaluate().unwrap(), Scalar::from_integer(9.into()));
    }
}
