//! Finite point configurations on the circle and the moves between them.
//!
//! A configuration is a nonempty set of rational angles in `[0, 1)`. Its arcs
//! are the gaps between cyclically consecutive points, ordered
//! counterclockwise. Arc `0` is the arc containing `0⁺`, the angles just
//! after `0`; when `0` is itself a point this is the arc starting at `0`.
//!
//! Lifting to the universal cover `R → R/Z`, the points become the
//! increasing sequence `q_j = p_{j mod r} + ⌊j/r⌋` and arc `a` becomes the
//! interval `(q_{a+c-1}, q_{a+c})`, where `c = 1` if `0` is a point and `0`
//! otherwise. A morphism is recorded by the equivariant map it induces on
//! the lifted arcs, which is a [`ParaMap`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use rand::Rng;

use crate::paracyclic::{ParaMap, ParaObj};
use crate::{Error, Result};

pub type Angle = BigRational;

/// A full positive rotation acts on hom-sets as `z_action(MONODROMY_SIGN, -)`.
pub const MONODROMY_SIGN: i64 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CircleConfig {
    points: Vec<Angle>,
}

impl CircleConfig {
    pub fn new(points: Vec<Angle>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::invalid("circle configuration", "needs at least one point"));
        }
        if points.iter().any(|p| p < &Angle::zero() || p >= &Angle::one()) {
            return Err(Error::invalid("circle configuration", "angles must lie in [0, 1)"));
        }
        if points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::invalid("circle configuration", "angles must be strictly increasing"));
        }
        Ok(CircleConfig { points })
    }

    /// Sorts and reduces the angles mod 1 before validating.
    pub fn from_angles(angles: impl IntoIterator<Item = Angle>) -> Result<Self> {
        let mut points: Vec<Angle> = angles.into_iter().map(|a| frac(&a)).collect();
        points.sort();
        Self::new(points)
    }

    pub fn points(&self) -> &[Angle] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn to_para(&self) -> ParaObj {
        ParaObj::new(self.len()).expect("configurations are nonempty")
    }

    /// `1` when `0` is a point, else `0`.
    pub fn base_offset(&self) -> i64 {
        i64::from(self.points[0].is_zero())
    }

    /// The lifted point `q_j`.
    pub fn lifted_point(&self, j: i64) -> Angle {
        let r = self.len() as i64;
        &self.points[j.rem_euclid(r) as usize] + Angle::from_integer(BigInt::from(j.div_euclid(r)))
    }

    /// Index in `points` of the starting point of arc `a`.
    pub fn arc_start_point(&self, a: i64) -> usize {
        (a + self.base_offset() - 1).rem_euclid(self.len() as i64) as usize
    }

    /// Index in `points` of the end point of arc `a`.
    pub fn arc_end_point(&self, a: i64) -> usize {
        (a + self.base_offset()).rem_euclid(self.len() as i64) as usize
    }

    pub fn arc_bounds(&self, a: i64) -> (Angle, Angle) {
        let c = self.base_offset();
        (self.lifted_point(a + c - 1), self.lifted_point(a + c))
    }

    /// The lifted arc containing `x⁺`.
    pub fn arc_containing(&self, x: &Angle) -> i64 {
        let fl = x.floor();
        let f = x - &fl;
        let whole: i64 = fl.to_integer().try_into().expect("angles stay small");
        let below = self.points.iter().filter(|p| **p <= f).count() as i64;
        whole * self.len() as i64 + below - self.base_offset()
    }

    pub fn rotate(&self, theta: &Angle) -> CircleConfig {
        Self::from_angles(self.points.iter().map(|p| p + theta)).expect("rotation preserves validity")
    }
}

fn frac(x: &Angle) -> Angle {
    x - x.floor()
}

/// The equally spaced configuration `{0, 1/n, …, (n-1)/n}`.
pub fn from_para(n: ParaObj) -> CircleConfig {
    let k = n.orbits() as i64;
    CircleConfig::new((0..k).map(|i| Angle::new(i.into(), k.into())).collect()).expect("equally spaced points are valid")
}

/// A morphism of configurations together with its map of lifted arcs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CircleMorphism {
    src: CircleConfig,
    dst: CircleConfig,
    para: ParaMap,
}

impl CircleMorphism {
    pub fn new(src: CircleConfig, dst: CircleConfig, para: ParaMap) -> Result<Self> {
        if para.src() != src.to_para() || para.dst() != dst.to_para() {
            return Err(Error::invalid("circle morphism", "orbit counts do not match the arc counts"));
        }
        Ok(CircleMorphism { src, dst, para })
    }

    pub fn identity(c: &CircleConfig) -> Self {
        CircleMorphism { src: c.clone(), dst: c.clone(), para: ParaMap::identity(c.to_para()) }
    }

    pub fn src(&self) -> &CircleConfig {
        &self.src
    }

    pub fn dst(&self) -> &CircleConfig {
        &self.dst
    }

    pub fn para_map(&self) -> &ParaMap {
        &self.para
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &CircleMorphism) -> Result<CircleMorphism> {
        if first.dst != self.src {
            return Err(Error::Mismatch("circle morphisms do not share a configuration".into()));
        }
        Ok(CircleMorphism { src: first.src.clone(), dst: self.dst.clone(), para: self.para.compose(&first.para)? })
    }

    /// The lifted source arcs carried onto lifted target arc `b`.
    pub fn fiber(&self, b: i64) -> std::ops::Range<i64> {
        self.para.lower_preimage(b)..self.para.lower_preimage(b + 1)
    }
}

pub fn to_para_map(m: &CircleMorphism) -> &ParaMap {
    m.para_map()
}

/// The morphism sending each arc of `src` to the arc of `dst` containing
/// its start point rotated by `theta`.
///
/// This is the map of lifted arcs induced by rotating by `theta` when
/// `dst ⊂ src + theta`, and the arc-inclusion when `src + theta ⊂ dst`.
pub fn geometric(src: &CircleConfig, dst: &CircleConfig, theta: &Angle) -> CircleMorphism {
    let values = (0..src.len() as i64).map(|a| dst.arc_containing(&(src.arc_bounds(a).0 + theta))).collect();
    let para = ParaMap::new(src.to_para(), dst.to_para(), values).expect("lift tracking is monotone and equivariant");
    CircleMorphism { src: src.clone(), dst: dst.clone(), para }
}

/// Delete the end point of arc `arc_index`, fusing it with the next arc.
pub fn merge_points(c: &CircleConfig, arc_index: usize) -> Result<CircleMorphism> {
    if c.len() < 2 {
        return Err(Error::invalid("merge", "a single point cannot be merged away"));
    }
    if arc_index >= c.len() {
        return Err(Error::OutOfRange(format!("arc {arc_index} of {}", c.len())));
    }
    delete_points(c, &[c.arc_end_point(arc_index as i64)])
}

/// Delete the points with the given indices at once.
pub fn delete_points(c: &CircleConfig, indices: &[usize]) -> Result<CircleMorphism> {
    if indices.iter().any(|&i| i >= c.len()) {
        return Err(Error::OutOfRange(format!("point index beyond {}", c.len())));
    }
    let kept: Vec<Angle> = c.points.iter().enumerate().filter(|(i, _)| !indices.contains(i)).map(|(_, p)| p.clone()).collect();
    let dst = CircleConfig::new(kept).map_err(|_| Error::invalid("merge", "every point would be deleted"))?;
    Ok(geometric(c, &dst, &Angle::zero()))
}

/// Add a point; the arc it lands in is split, its first half carrying the old arc.
pub fn insert_point(c: &CircleConfig, angle: &Angle) -> Result<CircleMorphism> {
    let angle = frac(angle);
    if c.points.contains(&angle) {
        return Err(Error::invalid("insertion", format!("{angle} is already a point")));
    }
    let dst = CircleConfig::from_angles(c.points.iter().cloned().chain([angle]))?;
    Ok(geometric(c, &dst, &Angle::zero()))
}

pub fn act_rotation(c: &CircleConfig, theta: &Angle) -> CircleConfig {
    c.rotate(theta)
}

/// The rotation by `theta` as a morphism `c → c + theta`, tracked on the cover.
pub fn rotation_morphism(c: &CircleConfig, theta: &Angle) -> CircleMorphism {
    geometric(c, &c.rotate(theta), theta)
}

/// Transport a morphism along the rotation by `theta`.
pub fn act_rotation_morphism(m: &CircleMorphism, theta: &Angle) -> CircleMorphism {
    let rotated_src = m.src.rotate(theta);
    let back = rotation_morphism(&rotated_src, &-theta.clone());
    let forth = rotation_morphism(&m.dst, theta);
    forth.compose(&m.compose(&back).expect("rotating back lands on the source")).expect("composable by construction")
}

/// The order-preserving bijection of points between configurations of equal size.
pub fn isotopy(src: &CircleConfig, dst: &CircleConfig) -> Result<CircleMorphism> {
    if src.len() != dst.len() {
        return Err(Error::Mismatch(format!("isotopy between {} and {} points", src.len(), dst.len())));
    }
    let shift = src.base_offset() - dst.base_offset();
    let values = (0..src.len() as i64).map(|a| a + shift).collect();
    CircleMorphism::new(src.clone(), dst.clone(), ParaMap::new(src.to_para(), dst.to_para(), values)?)
}

/// Midpoint of arc `a`, reduced to `[0, 1)`.
pub fn arc_midpoint(c: &CircleConfig, a: usize) -> Angle {
    let (l, r) = c.arc_bounds(a as i64);
    frac(&((l + r) / Angle::from_integer(2.into())))
}

/// A random elementary move out of `c` keeping at most `max_points` points.
pub fn random_move<R: Rng>(rng: &mut R, c: &CircleConfig, max_points: usize) -> CircleMorphism {
    loop {
        match rng.gen_range(0..4) {
            0 if c.len() >= 2 => return merge_points(c, rng.gen_range(0..c.len())).expect("index in range"),
            1 if c.len() < max_points => {
                let angle = Angle::new((2 * rng.gen_range(0..12) + 1).into(), 24.into());
                if let Ok(m) = insert_point(c, &angle) {
                    return m;
                }
            }
            2 => return rotation_morphism(c, &Angle::new(rng.gen_range(-12i64..=12).into(), 24.into())),
            3 => return CircleMorphism::identity(c),
            _ => {}
        }
    }
}
