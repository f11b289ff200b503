//! The walking adjunction `Adj` as a strict 2-category.
//!
//! Objects are the signs `−` and `+`. The 1-cells are the alternating words
//! in `L: − → +` and `R: + → −`, written in composition order, so `R L` is
//! "first `L`, then `R`" and lies in `End(−)`. A word is determined by its
//! endpoints and its number of blocks:
//!
//! | endpoints | word        | letters  |
//! |-----------|-------------|----------|
//! | `− → −`   | `(RL)^k`    | `2k`     |
//! | `− → +`   | `L(RL)^k`   | `2k + 1` |
//! | `+ → −`   | `(RL)^k R`  | `2k + 1` |
//! | `+ → +`   | `(LR)^k`    | `2k`     |
//!
//! The letters cut the string diagram into regions `0..=letters`, read left
//! to right; region `0` has the target's sign and signs alternate. A 2-cell
//! is the same thing as a monotone map `F` from the `+` regions of its
//! source to the `+` regions of its target that keeps the outer `+` regions
//! in place. It is stored in the form of the corresponding hom-category:
//!
//! - `− → −`: `F` itself, a map in `O`;
//! - `− → +`: `F` as a map of orders with a marked minimum;
//! - `+ → −`: `F` as a map of orders with a marked maximum;
//! - `+ → +`: the dual map `G` on `−` regions, from target to source, a map
//!   in `O^op`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::hochschild::AlgebraSC;
use crate::matcat::ExactMatrix;
use crate::ordsets::{enumerate_marked, enumerate_monotone, FinOrd, MarkedMap, MarkedOrd, Marks, MonotoneMap};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Minus => "-",
            Sign::Plus => "+",
        })
    }
}

/// An object of `Adj`.
pub type AdjObj = Sign;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OneCell {
    pub src: Sign,
    pub dst: Sign,
    pub blocks: usize,
}

impl OneCell {
    pub fn new(src: Sign, dst: Sign, blocks: usize) -> Self {
        OneCell { src, dst, blocks }
    }

    pub fn identity(s: Sign) -> Self {
        OneCell::new(s, s, 0)
    }

    /// The left adjoint `L: − → +`.
    pub fn left() -> Self {
        OneCell::new(Sign::Minus, Sign::Plus, 0)
    }

    /// The right adjoint `R: + → −`.
    pub fn right() -> Self {
        OneCell::new(Sign::Plus, Sign::Minus, 0)
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.dst && self.blocks == 0
    }

    pub fn letters(&self) -> usize {
        if self.src == self.dst {
            2 * self.blocks
        } else {
            2 * self.blocks + 1
        }
    }

    fn from_letters(src: Sign, dst: Sign, letters: usize) -> Self {
        OneCell::new(src, dst, letters / 2)
    }

    pub fn region_sign(&self, pos: usize) -> Sign {
        if pos.is_multiple_of(2) {
            self.dst
        } else {
            self.dst.flip()
        }
    }

    pub fn plus_regions(&self) -> usize {
        match (self.src, self.dst) {
            (Sign::Minus, Sign::Minus) => self.blocks,
            _ => self.blocks + 1,
        }
    }

    /// The word in written (composition) order, as a string over `L`, `R`.
    pub fn word(&self) -> String {
        (0..self.letters()).map(|i| if self.region_sign(i) == Sign::Plus { 'L' } else { 'R' }).collect()
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &OneCell) -> Result<OneCell> {
        if first.dst != self.src {
            return Err(Error::Mismatch(format!("cannot compose {} after {}", self, first)));
        }
        Ok(OneCell::from_letters(first.src, self.dst, self.letters() + first.letters()))
    }

    /// The mirror image exchanging `−` with `+` and `L` with `R`.
    pub fn swapped(&self) -> OneCell {
        OneCell::new(self.src.flip(), self.dst.flip(), self.blocks)
    }
}

impl fmt::Display for OneCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.word();
        write!(f, "{}→{} [{}]", self.src, self.dst, if w.is_empty() { "id" } else { &w })
    }
}

/// The stored form of a 2-cell; see the module documentation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CellMap {
    Plain(MonotoneMap),
    Marked(MarkedMap),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoCell {
    src: OneCell,
    dst: OneCell,
    map: CellMap,
}

fn marks_for(cell: &OneCell) -> Marks {
    match (cell.src, cell.dst) {
        (Sign::Minus, Sign::Plus) => Marks::MIN,
        (Sign::Plus, Sign::Minus) => Marks::MAX,
        _ => Marks::NONE,
    }
}

fn marked_ord(cell: &OneCell) -> MarkedOrd {
    MarkedOrd::new(cell.blocks + 1, marks_for(cell)).expect("size is positive and only one mark is set")
}

impl TwoCell {
    pub fn new(src: OneCell, dst: OneCell, map: CellMap) -> Result<Self> {
        if (src.src, src.dst) != (dst.src, dst.dst) {
            return Err(Error::Mismatch(format!("2-cell between {src} and {dst}")));
        }
        let ok = match (&map, src.src, src.dst) {
            (CellMap::Plain(m), Sign::Minus, Sign::Minus) => m.src().size == src.blocks && m.dst().size == dst.blocks,
            (CellMap::Plain(m), Sign::Plus, Sign::Plus) => m.src().size == dst.blocks && m.dst().size == src.blocks,
            (CellMap::Marked(m), a, b) if a != b => m.src() == marked_ord(&src) && m.dst() == marked_ord(&dst),
            _ => false,
        };
        if !ok {
            return Err(Error::invalid("2-cell", format!("stored map does not fit {src} ⇒ {dst}")));
        }
        Ok(TwoCell { src, dst, map })
    }

    pub fn identity(cell: OneCell) -> Self {
        let map = match (cell.src, cell.dst) {
            (a, b) if a == b => CellMap::Plain(MonotoneMap::identity(FinOrd::new(cell.blocks))),
            _ => CellMap::Marked(MarkedMap::identity(marked_ord(&cell))),
        };
        TwoCell { src: cell, dst: cell, map }
    }

    pub fn src(&self) -> OneCell {
        self.src
    }

    pub fn dst(&self) -> OneCell {
        self.dst
    }

    pub fn map(&self) -> &CellMap {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        *self == TwoCell::identity(self.src)
    }

    /// The monotone map `F` on `+` regions, from source to target.
    pub fn plus_map(&self) -> MonotoneMap {
        match &self.map {
            CellMap::Marked(m) => m.underlying().clone(),
            CellMap::Plain(m) if self.src.src == Sign::Minus => m.clone(),
            CellMap::Plain(g) => {
                let values = (0..=self.src.blocks).map(|p| g.values().iter().filter(|&&y| y < p).count()).collect();
                MonotoneMap::new(FinOrd::new(self.src.blocks + 1), FinOrd::new(self.dst.blocks + 1), values)
                    .expect("the dual of a monotone map is monotone")
            }
        }
    }

    /// Rebuild a 2-cell from its map on `+` regions.
    pub fn from_plus_map(src: OneCell, dst: OneCell, f: &MonotoneMap) -> Result<Self> {
        if f.src().size != src.plus_regions() || f.dst().size != dst.plus_regions() {
            return Err(Error::invalid("2-cell", "map on + regions has the wrong size"));
        }
        let map = match (src.src, src.dst) {
            (Sign::Minus, Sign::Minus) => CellMap::Plain(f.clone()),
            (Sign::Plus, Sign::Plus) => {
                let last = dst.blocks;
                if f.apply(0) != 0 || f.apply(src.blocks) != last {
                    return Err(Error::invalid("2-cell", "outer + regions must be fixed"));
                }
                let values = (0..dst.blocks).map(|y| (0..=src.blocks).filter(|&p| f.apply(p) <= y).max().expect("region 0 maps to 0")).collect();
                CellMap::Plain(MonotoneMap::new(FinOrd::new(dst.blocks), FinOrd::new(src.blocks), values)?)
            }
            _ => CellMap::Marked(MarkedMap::new(marked_ord(&src), marked_ord(&dst), f.values().to_vec())?),
        };
        TwoCell::new(src, dst, map)
    }

    /// `self ∘v first`.
    pub fn vcompose(&self, first: &TwoCell) -> Result<TwoCell> {
        if first.dst != self.src {
            return Err(Error::Mismatch(format!("vertical composite of cells ending at {} and starting at {}", first.dst, self.src)));
        }
        let map = match (&self.map, &first.map) {
            (CellMap::Plain(g), CellMap::Plain(f)) if self.src.src == Sign::Minus => CellMap::Plain(g.compose(f)?),
            (CellMap::Plain(g), CellMap::Plain(f)) => CellMap::Plain(f.compose(g)?),
            (CellMap::Marked(g), CellMap::Marked(f)) => CellMap::Marked(g.compose(f)?),
            _ => unreachable!("cells with the same endpoints share a storage form"),
        };
        Ok(TwoCell { src: first.src, dst: self.dst, map })
    }

    /// `self ∘h first`: `self` sits on the later 1-cell.
    pub fn hcompose(&self, first: &TwoCell) -> Result<TwoCell> {
        let src = self.src.compose(&first.src)?;
        let dst = self.dst.compose(&first.dst)?;
        let fg = self.plus_map();
        let ff = first.plus_map();
        let skip = usize::from(first.src.dst == Sign::Plus);
        let (pg, pg_dst) = (self.src.plus_regions(), self.dst.plus_regions());
        let values: Vec<usize> = (0..src.plus_regions())
            .map(|i| if i < pg { fg.apply(i) } else { pg_dst + ff.apply(i - pg + skip) - skip })
            .collect();
        let f = MonotoneMap::new(FinOrd::new(src.plus_regions()), FinOrd::new(dst.plus_regions()), values)?;
        TwoCell::from_plus_map(src, dst, &f)
    }
}

/// All 2-cells between two parallel 1-cells.
pub fn enumerate_two_cells(src: OneCell, dst: OneCell) -> Vec<TwoCell> {
    if (src.src, src.dst) != (dst.src, dst.dst) {
        return Vec::new();
    }
    let maps: Vec<CellMap> = match (src.src, src.dst) {
        (Sign::Minus, Sign::Minus) => {
            enumerate_monotone(FinOrd::new(src.blocks), FinOrd::new(dst.blocks)).into_iter().map(CellMap::Plain).collect()
        }
        (Sign::Plus, Sign::Plus) => {
            enumerate_monotone(FinOrd::new(dst.blocks), FinOrd::new(src.blocks)).into_iter().map(CellMap::Plain).collect()
        }
        _ => enumerate_marked(marked_ord(&src), marked_ord(&dst)).into_iter().map(CellMap::Marked).collect(),
    };
    maps.into_iter().map(|map| TwoCell { src, dst, map }).collect()
}

/// `η: id_− ⇒ R L`.
pub fn unit_eta() -> TwoCell {
    let map = MonotoneMap::new(FinOrd::EMPTY, FinOrd::new(1), vec![]).expect("the empty map");
    TwoCell { src: OneCell::identity(Sign::Minus), dst: OneCell::new(Sign::Minus, Sign::Minus, 1), map: CellMap::Plain(map) }
}

/// `ε: L R ⇒ id_+`.
pub fn counit_eps() -> TwoCell {
    let map = MonotoneMap::new(FinOrd::EMPTY, FinOrd::new(1), vec![]).expect("the empty map");
    TwoCell { src: OneCell::new(Sign::Plus, Sign::Plus, 1), dst: OneCell::identity(Sign::Plus), map: CellMap::Plain(map) }
}

/// `(ε ▹ L) ∘v (L ◃ η) = id_L` and `(R ◃ ε) ∘v (η ▹ R) = id_R`.
pub fn triangle_check() -> Result<(bool, bool)> {
    let (l, r) = (TwoCell::identity(OneCell::left()), TwoCell::identity(OneCell::right()));
    let (eta, eps) = (unit_eta(), counit_eps());
    let left = eps.hcompose(&l)?.vcompose(&l.hcompose(&eta)?)?;
    let right = r.hcompose(&eps)?.vcompose(&eta.hcompose(&r)?)?;
    Ok((left.is_identity() && left.src() == OneCell::left(), right.is_identity() && right.src() == OneCell::right()))
}

/// The algebra `A` seen as a monoidal functor out of `(O, join)`: `I ↦ A^{⊗|I|}`.
pub fn monad_functor_object(a: &AlgebraSC, i: FinOrd) -> usize {
    a.dim().pow(i.size as u32)
}

/// The image of a monotone map: each target slot multiplies its fiber in order.
pub fn monad_functor(a: &AlgebraSC, f: &MonotoneMap) -> Result<ExactMatrix> {
    let fibers: Vec<Vec<usize>> = (0..f.dst().size).map(|j| f.fiber(j).collect()).collect();
    a.fiber_multiply(f.src().size, &fibers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Minus, Plus};

    fn cell(src: Sign, dst: Sign, k: usize) -> OneCell {
        OneCell::new(src, dst, k)
    }

    #[test]
    fn words() {
        assert_eq!(cell(Minus, Minus, 2).word(), "RLRL");
        assert_eq!(cell(Minus, Plus, 1).word(), "LRL");
        assert_eq!(cell(Plus, Minus, 1).word(), "RLR");
        assert_eq!(cell(Plus, Plus, 1).word(), "LR");
        assert_eq!(OneCell::identity(Plus).word(), "");
    }

    #[test]
    fn block_bookkeeping_matches_word_concatenation() {
        // Oracle: concatenate the words and count letters.
        let signs = [Minus, Plus];
        for a in signs {
            for b in signs {
                for c in signs {
                    for k in 0..3 {
                        for k2 in 0..3 {
                            let f = cell(a, b, k);
                            let g = cell(b, c, k2);
                            let gf = g.compose(&f).unwrap();
                            let word = g.word() + &f.word();
                            assert_eq!(gf.word(), word);
                            assert_eq!((gf.src, gf.dst), (a, c));
                        }
                    }
                }
            }
        }
        assert_eq!(OneCell::right().compose(&OneCell::left()).unwrap(), cell(Minus, Minus, 1));
        assert_eq!(OneCell::left().compose(&OneCell::right()).unwrap(), cell(Plus, Plus, 1));
        assert!(OneCell::left().compose(&OneCell::left()).is_err());
    }

    #[test]
    fn unit_and_counit() {
        let eta = unit_eta();
        assert_eq!((eta.src().blocks, eta.dst().blocks), (0, 1));
        let eps = counit_eps();
        assert_eq!((eps.src().blocks, eps.dst().blocks), (1, 0));
        assert!(eta.vcompose(&eta).is_err());
        assert_eq!(enumerate_two_cells(eta.src(), eta.dst()), vec![eta]);
        assert_eq!(enumerate_two_cells(eps.src(), eps.dst()), vec![eps]);
    }

    #[test]
    fn triangles_hold() {
        assert_eq!(triangle_check().unwrap(), (true, true));
    }

    #[test]
    fn plus_maps_round_trip() {
        let signs = [Minus, Plus];
        for a in signs {
            for b in signs {
                for k in 0..4 {
                    for k2 in 0..4 {
                        for c in enumerate_two_cells(cell(a, b, k), cell(a, b, k2)) {
                            assert_eq!(TwoCell::from_plus_map(c.src(), c.dst(), &c.plus_map()).unwrap(), c);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn plus_plus_cells_compose_in_reverse() {
        let src = cell(Plus, Plus, 2);
        let mid = cell(Plus, Plus, 1);
        let dst = cell(Plus, Plus, 0);
        for a in enumerate_two_cells(src, mid) {
            for b in enumerate_two_cells(mid, dst) {
                let ba = b.vcompose(&a).unwrap();
                let (CellMap::Plain(ga), CellMap::Plain(gb)) = (a.map(), b.map()) else { panic!() };
                assert_eq!(ba.map(), &CellMap::Plain(ga.compose(gb).unwrap()));
            }
        }
    }

    #[test]
    fn whiskering_by_identities() {
        let f = cell(Minus, Plus, 1);
        for a in enumerate_two_cells(f, cell(Minus, Plus, 2)) {
            let id = TwoCell::identity(OneCell::identity(Plus));
            assert_eq!(id.hcompose(&a).unwrap(), a);
            let id = TwoCell::identity(OneCell::identity(Minus));
            assert_eq!(a.hcompose(&id).unwrap(), a);
        }
    }

    #[test]
    fn end_minus_is_join() {
        // Oracle: horizontal composition in End(−) is join of monotone maps.
        for k in 0..3 {
            for k2 in 0..3 {
                for k3 in 0..3 {
                    for k4 in 0..3 {
                        for a in enumerate_two_cells(cell(Minus, Minus, k), cell(Minus, Minus, k2)) {
                            for b in enumerate_two_cells(cell(Minus, Minus, k3), cell(Minus, Minus, k4)) {
                                let (CellMap::Plain(fa), CellMap::Plain(fb)) = (a.map(), b.map()) else { panic!() };
                                let ba = b.hcompose(&a).unwrap();
                                assert_eq!(ba.map(), &CellMap::Plain(fb.join(fa)));
                            }
                        }
                    }
                }
            }
        }
    }
}
