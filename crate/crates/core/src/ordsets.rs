//! Finite linear orders and monotone maps.
//!
//! Orders are skeletal: the order of size `n` is `{0 < 1 < ... < n-1}`. The
//! simplex category is the full subcategory on nonempty orders, so a single
//! [`MonotoneMap`] type serves both.

use crate::{Error, Result};

/// The linear order `{0 < ... < size-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinOrd {
    pub size: usize,
}

impl FinOrd {
    pub const EMPTY: FinOrd = FinOrd { size: 0 };

    pub fn new(size: usize) -> Self {
        FinOrd { size }
    }

    /// The simplex `[p]`, which has `p + 1` elements.
    pub fn simplex(p: usize) -> Self {
        FinOrd { size: p + 1 }
    }

    pub fn join(self, other: FinOrd) -> FinOrd {
        FinOrd { size: self.size + other.size }
    }
}

/// An order preserving map between finite linear orders.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonotoneMap {
    src: FinOrd,
    dst: FinOrd,
    values: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(src: FinOrd, dst: FinOrd, values: Vec<usize>) -> Result<Self> {
        if values.len() != src.size {
            return Err(Error::invalid(
                "monotone map",
                format!("{} values for a source of size {}", values.len(), src.size),
            ));
        }
        if let Some(v) = values.iter().find(|&&v| v >= dst.size) {
            return Err(Error::invalid(
                "monotone map",
                format!("value {v} outside a target of size {}", dst.size),
            ));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::invalid("monotone map", format!("{values:?} is not weakly increasing")));
        }
        Ok(MonotoneMap { src, dst, values })
    }

    pub fn identity(obj: FinOrd) -> Self {
        MonotoneMap { src: obj, dst: obj, values: (0..obj.size).collect() }
    }

    pub fn src(&self) -> FinOrd {
        self.src
    }

    pub fn dst(&self) -> FinOrd {
        self.dst
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.dst && self.values.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `g ∘ f`, where `self` is `g`.
    pub fn compose(&self, f: &MonotoneMap) -> Result<MonotoneMap> {
        compose_monotone(self, f)
    }

    /// The fiber `f⁻¹(j)`, as a contiguous range of the source.
    pub fn fiber(&self, j: usize) -> std::ops::Range<usize> {
        let start = self.values.partition_point(|&v| v < j);
        let end = self.values.partition_point(|&v| v <= j);
        start..end
    }

    /// Join of maps: `self` on the first summand, `other` shifted past it.
    pub fn join(&self, other: &MonotoneMap) -> MonotoneMap {
        let offset = self.dst.size;
        let values = self
            .values
            .iter()
            .copied()
            .chain(other.values.iter().map(|v| v + offset))
            .collect();
        MonotoneMap { src: self.src.join(other.src), dst: self.dst.join(other.dst), values }
    }

    /// Index reflection `i ↦ size-1-i` applied on both sides.
    pub fn reverse(&self) -> MonotoneMap {
        let (m, n) = (self.src.size, self.dst.size);
        let values = (0..m).map(|i| n - 1 - self.values[m - 1 - i]).collect();
        MonotoneMap { src: self.src, dst: self.dst, values }
    }
}

/// `g ∘ f`.
pub fn compose_monotone(g: &MonotoneMap, f: &MonotoneMap) -> Result<MonotoneMap> {
    if f.dst != g.src {
        return Err(Error::Mismatch(format!(
            "cannot compose a map out of size {} with a map into size {}",
            g.src.size, f.dst.size
        )));
    }
    Ok(MonotoneMap {
        src: f.src,
        dst: g.dst,
        values: f.values.iter().map(|&i| g.values[i]).collect(),
    })
}

/// Every monotone map between two finite orders, in lexicographic order.
pub fn enumerate_monotone(src: FinOrd, dst: FinOrd) -> Vec<MonotoneMap> {
    let mut out = Vec::new();
    if src.size > 0 && dst.size == 0 {
        return out;
    }
    let mut values = vec![0usize; src.size];
    loop {
        out.push(MonotoneMap { src, dst, values: values.clone() });
        // Advance to the next weakly increasing sequence.
        let mut pos = src.size;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if values[pos] + 1 < dst.size {
                let v = values[pos] + 1;
                for slot in &mut values[pos..] {
                    *slot = v;
                }
                break;
            }
        }
    }
}

/// Which extremal elements a [`MarkedOrd`] singles out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Marks {
    pub min: bool,
    pub max: bool,
}

impl Marks {
    pub const NONE: Marks = Marks { min: false, max: false };
    pub const MIN: Marks = Marks { min: true, max: false };
    pub const MAX: Marks = Marks { min: false, max: true };
    pub const BOTH: Marks = Marks { min: true, max: true };

    pub fn swapped(self) -> Marks {
        Marks { min: self.max, max: self.min }
    }
}

/// A nonempty finite linear order with a marked minimum and/or maximum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MarkedOrd {
    size: usize,
    marks: Marks,
}

impl MarkedOrd {
    pub fn new(size: usize, marks: Marks) -> Result<Self> {
        if size == 0 {
            return Err(Error::invalid("marked order", "size must be positive"));
        }
        if marks == Marks::BOTH && size < 2 {
            return Err(Error::invalid("marked order", "distinct extrema need at least two elements"));
        }
        Ok(MarkedOrd { size, marks })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn marks(&self) -> Marks {
        self.marks
    }

    pub fn underlying(&self) -> FinOrd {
        FinOrd::new(self.size)
    }

    /// The reversed order; marked minimum and maximum trade places.
    pub fn reverse(&self) -> MarkedOrd {
        MarkedOrd { size: self.size, marks: self.marks.swapped() }
    }
}

/// A monotone map preserving whichever extrema are marked.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkedMap {
    src: MarkedOrd,
    dst: MarkedOrd,
    underlying: MonotoneMap,
}

impl MarkedMap {
    pub fn new(src: MarkedOrd, dst: MarkedOrd, values: Vec<usize>) -> Result<Self> {
        if src.marks != dst.marks {
            return Err(Error::Mismatch("marked maps need equal marks on both ends".into()));
        }
        let underlying = MonotoneMap::new(src.underlying(), dst.underlying(), values)?;
        check_marks(src.marks, &underlying)?;
        Ok(MarkedMap { src, dst, underlying })
    }

    pub fn identity(obj: MarkedOrd) -> Self {
        MarkedMap { src: obj, dst: obj, underlying: MonotoneMap::identity(obj.underlying()) }
    }

    pub fn src(&self) -> MarkedOrd {
        self.src
    }

    pub fn dst(&self) -> MarkedOrd {
        self.dst
    }

    pub fn underlying(&self) -> &MonotoneMap {
        &self.underlying
    }

    pub fn values(&self) -> &[usize] {
        self.underlying.values()
    }

    pub fn compose(&self, f: &MarkedMap) -> Result<MarkedMap> {
        if f.dst != self.src {
            return Err(Error::Mismatch("marked maps are not composable".into()));
        }
        Ok(MarkedMap { src: f.src, dst: self.dst, underlying: compose_monotone(&self.underlying, &f.underlying)? })
    }

    pub fn reverse(&self) -> MarkedMap {
        MarkedMap { src: self.src.reverse(), dst: self.dst.reverse(), underlying: self.underlying.reverse() }
    }
}

pub(crate) fn check_marks(marks: Marks, map: &MonotoneMap) -> Result<()> {
    let (m, n) = (map.src().size, map.dst().size);
    if marks.min && m > 0 && map.apply(0) != 0 {
        return Err(Error::invalid("marked map", "minimum is not preserved"));
    }
    if marks.max && m > 0 && map.apply(m - 1) != n - 1 {
        return Err(Error::invalid("marked map", "maximum is not preserved"));
    }
    Ok(())
}

/// Every marked map between two marked orders.
pub fn enumerate_marked(src: MarkedOrd, dst: MarkedOrd) -> Vec<MarkedMap> {
    if src.marks != dst.marks {
        return Vec::new();
    }
    enumerate_monotone(src.underlying(), dst.underlying())
        .into_iter()
        .filter(|f| check_marks(src.marks, f).is_ok())
        .map(|underlying| MarkedMap { src, dst, underlying })
        .collect()
}

/// `[p] ↦ Hom_Δ([p], [1])`, the doubly marked order of size `p + 2`.
///
/// Elements of `Hom_Δ([p], [1])` are indexed by their number of ones, which
/// is increasing for the pointwise order.
pub fn delta_to_interval(p: FinOrd) -> Result<MarkedOrd> {
    if p.size == 0 {
        return Err(Error::invalid("simplex", "Δ has no empty object"));
    }
    MarkedOrd::new(p.size + 1, Marks::BOTH)
}

/// Precomposition `Hom([q],[1]) → Hom([p],[1])` induced by `φ: [p] → [q]`.
pub fn delta_to_interval_map(phi: &MonotoneMap) -> Result<MarkedMap> {
    let src = delta_to_interval(phi.dst())?;
    let dst = delta_to_interval(phi.src())?;
    let q1 = phi.dst().size;
    // h_u has u ones: h_u(x) = 1 iff x >= q1 - u.
    let values = (0..=q1).map(|u| phi.values().iter().filter(|&&v| v + u >= q1).count()).collect();
    MarkedMap::new(src, dst, values)
}
