//! Basic, critical and Morse tiles.
//!
//! A tile lives on one facet `σ`. Each vertex in `removed_opposite` marks
//! the removed ridge `σ \ {v}`, so those vertices together form the
//! restriction set `r(T)`. A face `φ ⊆ σ` belongs to the tile iff it
//! contains `r(T)` and is not contained in the Morse face. Basic tiles are
//! therefore closed intervals `[r(T), σ]`, critical tiles the semi-open
//! intervals `]r(T), σ]`.

use crate::complex::{maximal_faces, Simplex};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MorseTile {
    facet: Simplex,
    removed_opposite: Simplex,
    morse_face: Option<Simplex>,
    critical: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TileClass {
    Basic { order: usize },
    Critical { index: usize },
    RegularMorse { order: usize, morse_dim: usize },
    Invalid,
}

impl MorseTile {
    /// Basic tile of order `|removed_opposite|`.
    pub fn basic(facet: Simplex, removed_opposite: Simplex) -> Self {
        MorseTile {
            facet,
            removed_opposite,
            morse_face: None,
            critical: false,
        }
    }

    /// Critical tile of index `|removed_opposite|`. Index `n` is stored as the
    /// open simplex, i.e. the basic tile of order `n + 1`.
    pub fn critical(facet: Simplex, removed_opposite: Simplex) -> Self {
        if removed_opposite.len() + 1 == facet.len() {
            let all = facet.clone();
            return MorseTile::basic(facet, all);
        }
        MorseTile {
            facet,
            morse_face: Some(removed_opposite.clone()),
            removed_opposite,
            critical: true,
        }
    }

    /// Tile with a Morse face. Produces a critical tile when the Morse face
    /// equals the restriction set.
    pub fn morse(facet: Simplex, removed_opposite: Simplex, morse_face: Simplex) -> Self {
        if morse_face == removed_opposite {
            return MorseTile::critical(facet, removed_opposite);
        }
        MorseTile {
            facet,
            removed_opposite,
            morse_face: Some(morse_face),
            critical: false,
        }
    }

    /// Unchecked constructor used by the file reader; `classify` reports
    /// whatever is wrong with the result.
    pub fn from_parts(
        facet: Simplex,
        removed_opposite: Simplex,
        morse_face: Option<Simplex>,
        critical: bool,
    ) -> Self {
        MorseTile {
            facet,
            removed_opposite,
            morse_face,
            critical,
        }
    }

    pub fn facet(&self) -> &Simplex {
        &self.facet
    }

    pub fn removed_opposite(&self) -> &Simplex {
        &self.removed_opposite
    }

    pub fn morse_face(&self) -> Option<&Simplex> {
        self.morse_face.as_ref()
    }

    pub fn critical_flag(&self) -> bool {
        self.critical
    }

    pub fn dim(&self) -> usize {
        self.facet.len().saturating_sub(1)
    }

    /// Number of removed ridges.
    pub fn order(&self) -> usize {
        self.removed_opposite.len()
    }

    pub fn restriction_set(&self) -> &Simplex {
        &self.removed_opposite
    }

    pub fn contains(&self, face: &Simplex) -> bool {
        !face.is_empty()
            && face.is_subset(&self.facet)
            && self.removed_opposite.is_subset(face)
            && self.morse_face.as_ref().map_or(true, |m| !face.is_subset(m))
    }

    /// The faces of the tile, sorted.
    pub fn faces(&self) -> Vec<Simplex> {
        let free = self.facet.difference(&self.removed_opposite);
        let mut out: Vec<Simplex> = free
            .subsets()
            .into_iter()
            .map(|s| s.union(&self.removed_opposite))
            .filter(|f| self.contains(f))
            .collect();
        out.sort();
        out
    }

    pub fn classify(&self) -> TileClass {
        if self.check().is_err() {
            return TileClass::Invalid;
        }
        let n = self.dim();
        let k = self.order();
        match (&self.morse_face, self.critical) {
            (None, _) if k == n + 1 => TileClass::Critical { index: n },
            (None, _) => TileClass::Basic { order: k },
            (Some(_), true) => TileClass::Critical { index: k },
            (Some(m), false) => TileClass::RegularMorse {
                order: k,
                morse_dim: m.len() - 1,
            },
        }
    }

    /// Validity of the tile on its own facet.
    pub fn check(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidTile(self.facet.clone(), msg.to_string()));
        if self.facet.is_empty() {
            return bad("empty facet");
        }
        if !self.removed_opposite.is_subset(&self.facet) {
            return bad("removed ridges are not ridges of the facet");
        }
        let n = self.dim();
        match (&self.morse_face, self.critical) {
            (None, true) => bad("critical flag without a Morse face"),
            (None, false) => Ok(()),
            (Some(m), critical) => {
                if !m.is_subset(&self.facet) || m == &self.facet {
                    return bad("Morse face is not a proper face of the facet");
                }
                if !self.removed_opposite.is_subset(m) {
                    return bad("Morse face does not contain the restriction set");
                }
                if critical != (m == &self.removed_opposite) {
                    return bad("critical flag disagrees with the Morse face");
                }
                if !critical && m.len() + 1 > n {
                    return bad("Morse face has codimension one");
                }
                Ok(())
            }
        }
    }

    /// Index when the tile is critical. The closed simplex counts as index
    /// 0 and the open simplex as index `n`.
    pub fn critical_index(&self) -> Option<usize> {
        match self.classify() {
            TileClass::Basic { order: 0 } => Some(0),
            TileClass::Critical { index } => Some(index),
            _ => None,
        }
    }

    /// True for basic and critical tiles.
    pub fn is_h_tile(&self) -> bool {
        matches!(self.classify(), TileClass::Basic { .. } | TileClass::Critical { .. })
    }

    /// Missing faces of the underlying simplex, as a maximal antichain.
    pub fn missing_faces(&self) -> Vec<Simplex> {
        let mut faces: Vec<Simplex> = self
            .removed_opposite
            .vertices()
            .iter()
            .map(|&v| self.facet.without(v))
            .collect();
        if let Some(m) = &self.morse_face {
            faces.push(m.clone());
        }
        maximal_faces(faces)
    }

    /// Same face set and same class up to the closed simplex being stored
    /// either as basic or as critical of index 0.
    pub fn same_shape(&self, other: &MorseTile) -> bool {
        self.dim() == other.dim()
            && match (self.classify(), other.classify()) {
                (TileClass::Basic { order: 0 }, TileClass::Critical { index: 0 })
                | (TileClass::Critical { index: 0 }, TileClass::Basic { order: 0 }) => true,
                (a, b) => a == b,
            }
    }

    pub fn relabel(&self, map: impl Fn(u32) -> u32) -> MorseTile {
        let r = |s: &Simplex| Simplex::from_set(s.vertices().iter().map(|&v| map(v)));
        MorseTile {
            facet: r(&self.facet),
            removed_opposite: r(&self.removed_opposite),
            morse_face: self.morse_face.as_ref().map(r),
            critical: self.critical,
        }
    }
}

pub fn tile_faces(t: &MorseTile) -> Result<Vec<Simplex>> {
    t.check()?;
    Ok(t.faces())
}

pub fn classify_tile(t: &MorseTile) -> TileClass {
    t.classify()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of `j`-dimensional faces of the basic tile of dimension `n` and
/// order `k`.
pub fn tile_face_count(n: usize, k: usize, j: usize) -> Result<u64> {
    if k > n + 1 || j > n {
        return Err(Error::InvalidInput(format!("tile_face_count({n}, {k}, {j}) out of range")));
    }
    if j + 1 < k {
        return Ok(0);
    }
    Ok(binomial((n + 1 - k) as u64, (n - j) as u64))
}

/// Same count for the critical tile of index `k` (`k ≤ n`).
pub fn critical_tile_face_count(n: usize, k: usize, j: usize) -> Result<u64> {
    if k > n {
        return Err(Error::InvalidInput(format!("critical index {k} exceeds dimension {n}")));
    }
    let base = tile_face_count(n, k, j)?;
    Ok(if k >= 1 && j == k - 1 { 0 } else { base })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s<const N: usize>(v: [u32; N]) -> Simplex {
        Simplex::from(v)
    }

    #[test]
    fn half_open_triangle() {
        let t = MorseTile::basic(s([0, 1, 2]), s([0]));
        assert_eq!(
            t.faces(),
            vec![s([0]), s([0, 1]), s([0, 1, 2]), s([0, 2])]
        );
    }

    #[test]
    fn open_triangle_is_critical_top() {
        let t = MorseTile::critical(s([0, 1, 2]), s([0, 1]));
        assert_eq!(t.faces(), vec![s([0, 1, 2])]);
        assert_eq!(t.classify(), TileClass::Critical { index: 2 });
        assert_eq!(t.order(), 3);
    }

    #[test]
    fn example_morse_tile() {
        let t = MorseTile::morse(s([0, 1, 2, 3]), s([0]), s([0, 1]));
        assert_eq!(
            t.faces(),
            vec![
                s([0, 1, 2]),
                s([0, 1, 2, 3]),
                s([0, 1, 3]),
                s([0, 2]),
                s([0, 2, 3]),
                s([0, 3]),
            ]
        );
        assert_eq!(t.classify(), TileClass::RegularMorse { order: 1, morse_dim: 1 });
    }

    #[test]
    fn classification() {
        assert_eq!(MorseTile::basic(s([0, 1, 2]), Simplex::empty()).classify(), TileClass::Basic { order: 0 });
        assert_eq!(
            MorseTile::basic(s([0, 1, 2]), s([0, 1, 2])).classify(),
            TileClass::Critical { index: 2 }
        );
        let c0 = MorseTile::critical(s([0, 1, 2]), Simplex::empty());
        assert_eq!(c0.classify(), TileClass::Critical { index: 0 });
        assert_eq!(c0.faces().len(), 7);
        // Morse face missing the restriction set
        let bad = MorseTile::from_parts(s([0, 1, 2, 3]), s([0]), Some(s([1, 2])), false);
        assert_eq!(bad.classify(), TileClass::Invalid);
        // codimension-one Morse face
        let bad = MorseTile::from_parts(s([0, 1, 2, 3]), s([0]), Some(s([0, 1, 2])), false);
        assert_eq!(bad.classify(), TileClass::Invalid);
        // flag disagreeing with the face
        let bad = MorseTile::from_parts(s([0, 1, 2, 3]), s([0]), Some(s([0, 1])), true);
        assert_eq!(bad.classify(), TileClass::Invalid);
        assert!(tile_faces(&bad).is_err());
    }

    #[test]
    fn face_count_values() {
        assert_eq!(tile_face_count(3, 2, 1).unwrap(), 1);
        assert_eq!(tile_face_count(3, 2, 0).unwrap(), 0);
        for n in 0..6 {
            for j in 0..=n {
                assert_eq!(
                    tile_face_count(n, 0, j).unwrap(),
                    binomial(n as u64 + 1, j as u64 + 1)
                );
            }
        }
        assert!(tile_face_count(2, 4, 0).is_err());
        assert!(tile_face_count(2, 1, 3).is_err());
    }

    #[test]
    fn critical_is_basic_minus_minimum() {
        for n in 1..6u32 {
            let facet = Simplex::from_set(0..=n);
            for k in 1..=n {
                let r = Simplex::from_set(0..k);
                let b = MorseTile::basic(facet.clone(), r.clone());
                let c = MorseTile::critical(facet.clone(), r);
                assert_eq!(c.faces().len() + 1, b.faces().len());
            }
        }
    }
}
