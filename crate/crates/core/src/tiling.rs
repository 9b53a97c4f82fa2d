//! Tilings of relative complexes, their validators, and the local rewrite
//! of tiles under stellar subdivision.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::complex::{RelativeComplex, Simplex, VertexId};
use crate::error::{Error, Result};
use crate::relative::{subdivide_relative_simplex, tile_numbering, RelativeSimplex, RewriteMode};
use crate::tile::MorseTile;

/// An ordered list of tiles against a target relative complex. The order
/// is the candidate shelling order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tiling {
    target: RelativeComplex,
    tiles: Vec<MorseTile>,
    provenance: Vec<String>,
}

impl Tiling {
    pub fn new(target: RelativeComplex, tiles: Vec<MorseTile>) -> Self {
        let provenance = vec![String::from("input"); tiles.len()];
        Tiling {
            target,
            tiles,
            provenance,
        }
    }

    pub fn with_provenance(target: RelativeComplex, tiles: Vec<MorseTile>, provenance: Vec<String>) -> Self {
        assert_eq!(tiles.len(), provenance.len());
        Tiling {
            target,
            tiles,
            provenance,
        }
    }

    pub fn target(&self) -> &RelativeComplex {
        &self.target
    }

    pub fn tiles(&self) -> &[MorseTile] {
        &self.tiles
    }

    pub fn provenance(&self) -> &[String] {
        &self.provenance
    }

    pub fn into_parts(self) -> (RelativeComplex, Vec<MorseTile>, Vec<String>) {
        (self.target, self.tiles, self.provenance)
    }

    /// Counts critical tiles by index (closed and open simplices included).
    pub fn critical_indices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.tiles.iter().filter_map(MorseTile::critical_index).collect();
        out.sort_unstable();
        out
    }

    pub fn is_h_tiling(&self) -> bool {
        self.tiles.iter().all(MorseTile::is_h_tile)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationKind {
    NotPartition,
    NotClosed,
    NotPrefixClosed,
    BadTile,
}

impl ViolationKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ViolationKind::NotPartition => "not_partition",
            ViolationKind::NotClosed => "not_closed",
            ViolationKind::NotPrefixClosed => "not_prefix_closed",
            ViolationKind::BadTile => "bad_tile",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub witness_face: Simplex,
    /// Zero-based position of the offending tile, when one is to blame.
    pub tile_index: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    fn from_violations(mut violations: Vec<Violation>, verbose: bool) -> Self {
        violations.sort_by(|a, b| {
            a.tile_index
                .cmp(&b.tile_index)
                .then_with(|| a.witness_face.cmp(&b.witness_face))
                .then_with(|| a.kind.cmp(&b.kind))
        });
        if !verbose {
            let mut seen = HashSet::new();
            violations.retain(|v| seen.insert(v.kind));
        }
        ValidationReport {
            ok: violations.is_empty(),
            violations,
        }
    }

    pub fn has(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind == kind)
    }
}

/// Checks tile validity, the partition of the target's faces, and that the
/// union of tiles of dimension at least `d` is closed for every `d`. Reports
/// the first witness of each kind.
pub fn validate_tiling(t: &Tiling) -> ValidationReport {
    validate_tiling_with(t, false)
}

/// Like [`validate_tiling`] but lists every witness.
pub fn validate_tiling_verbose(t: &Tiling) -> ValidationReport {
    validate_tiling_with(t, true)
}

fn validate_tiling_with(t: &Tiling, verbose: bool) -> ValidationReport {
    let target = &t.target;
    let mut violations = Vec::new();
    let mut owner: HashMap<Simplex, usize> = HashMap::new();
    let mut tile_faces: Vec<Vec<Simplex>> = Vec::with_capacity(t.tiles.len());
    for (i, tile) in t.tiles.iter().enumerate() {
        if tile.check().is_err() || !target.ambient().is_facet(tile.facet()) {
            violations.push(Violation {
                kind: ViolationKind::BadTile,
                witness_face: tile.facet().clone(),
                tile_index: Some(i),
            });
            tile_faces.push(Vec::new());
            continue;
        }
        let faces = tile.faces();
        for f in &faces {
            if !target.contains(f) || owner.insert(f.clone(), i).is_some() {
                violations.push(Violation {
                    kind: ViolationKind::NotPartition,
                    witness_face: f.clone(),
                    tile_index: Some(i),
                });
            }
        }
        tile_faces.push(faces);
    }
    for f in target.faces() {
        if !owner.contains_key(&f) {
            violations.push(Violation {
                kind: ViolationKind::NotPartition,
                witness_face: f,
                tile_index: None,
            });
        }
    }
    // closedness of the union of tiles of dimension >= d
    let dims: Vec<usize> = t.tiles.iter().map(MorseTile::dim).collect();
    for (i, faces) in tile_faces.iter().enumerate() {
        for f in faces {
            for r in f.ridges() {
                if !target.contains(&r) {
                    continue;
                }
                let ok = owner.get(&r).is_some_and(|&j| dims[j] >= dims[i]);
                if !ok {
                    violations.push(Violation {
                        kind: ViolationKind::NotClosed,
                        witness_face: r,
                        tile_index: Some(i),
                    });
                }
            }
        }
    }
    ValidationReport::from_violations(violations, verbose)
}

/// Every prefix of the tile order must have a downward-closed union.
pub fn validate_shelling(t: &Tiling) -> ValidationReport {
    let target = &t.target;
    let mut union: HashSet<Simplex> = HashSet::new();
    let mut violations = Vec::new();
    for (i, tile) in t.tiles.iter().enumerate() {
        let faces = tile.faces();
        union.extend(faces.iter().cloned());
        for f in &faces {
            if let Some(r) = f.ridges().into_iter().find(|r| target.contains(r) && !union.contains(r)) {
                violations.push(Violation {
                    kind: ViolationKind::NotPrefixClosed,
                    witness_face: r,
                    tile_index: Some(i),
                });
                return ValidationReport::from_violations(violations, false);
            }
        }
    }
    ValidationReport::from_violations(violations, false)
}

/// Convenience: both validators pass.
pub fn is_valid_shelling(t: &Tiling) -> bool {
    validate_tiling(t).ok && validate_shelling(t).ok
}

/// Shelled tile list of the stellar subdivision of `tile` at `tau`, with
/// `apex` as the new vertex.
pub fn subdivide_tile(tile: &MorseTile, tau: &Simplex, mode: RewriteMode, apex: VertexId) -> Result<Vec<MorseTile>> {
    Ok(subdivide_tile_traced(tile, tau, mode, apex)?
        .into_iter()
        .map(|(t, _)| t)
        .collect())
}

pub(crate) fn subdivide_tile_traced(
    tile: &MorseTile,
    tau: &Simplex,
    mode: RewriteMode,
    apex: VertexId,
) -> Result<Vec<(MorseTile, &'static str)>> {
    tile.check()?;
    if tau.len() < 2 {
        return Err(Error::DegenerateSubdivision(tau.clone()));
    }
    if !tau.is_subset(tile.facet()) {
        return Err(Error::UnknownFace(tau.clone()));
    }
    if tile.facet().contains(apex) {
        return Err(Error::InvalidInput(format!("apex {apex} already used by {}", tile.facet())));
    }
    let order = tile_numbering(tile, tau, mode)?;
    let pieces = subdivide_relative_simplex(&RelativeSimplex::from_tile(tile), tau, &order, apex)?;
    let case = match (mode, tile.morse_face().filter(|m| !m.is_empty())) {
        (RewriteMode::Split, _) => "split",
        (_, Some(m)) if tau.is_subset(m) => "inside-morse",
        _ => "copy",
    };
    pieces
        .iter()
        .map(|p| {
            p.to_morse_tile()
                .map(|t| (t, case))
                .ok_or_else(|| Error::InvalidTile(p.simplex().clone(), "rewrite left two Morse faces".into()))
        })
        .collect()
}

/// Result of [`subdivide_tiling_traced`]: new tiling, the apex, and for
/// every new tile the index of the tile it came from.
pub struct SubdividedTiling {
    pub tiling: Tiling,
    pub apex: VertexId,
    pub origin: Vec<usize>,
}

/// Subdivides the target at `tau` and rewrites, in place, every tile whose
/// facet contains `tau`. Modes default to [`RewriteMode::Copy`].
pub fn subdivide_tiling(t: &Tiling, tau: &Simplex, per_tile_mode: &BTreeMap<usize, RewriteMode>) -> Result<Tiling> {
    Ok(subdivide_tiling_traced(t, tau, per_tile_mode)?.tiling)
}

pub fn subdivide_tiling_traced(
    t: &Tiling,
    tau: &Simplex,
    per_tile_mode: &BTreeMap<usize, RewriteMode>,
) -> Result<SubdividedTiling> {
    let (target, apex) = t.target.stellar_subdivide(tau)?;
    let mut tiles = Vec::new();
    let mut provenance = Vec::new();
    let mut origin = Vec::new();
    for (i, tile) in t.tiles.iter().enumerate() {
        if tau.is_subset(tile.facet()) {
            let mode = per_tile_mode.get(&i).copied().unwrap_or_default();
            for (nt, case) in subdivide_tile_traced(tile, tau, mode, apex)? {
                tiles.push(nt);
                provenance.push(format!("{}/{}", t.provenance[i], case));
                origin.push(i);
            }
        } else {
            tiles.push(tile.clone());
            provenance.push(t.provenance[i].clone());
            origin.push(i);
        }
    }
    Ok(SubdividedTiling {
        tiling: Tiling {
            target,
            tiles,
            provenance,
        },
        apex,
        origin,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SimplicialComplex;
    use crate::generate;
    use crate::tile::TileClass;

    fn s<const N: usize>(v: [u32; N]) -> Simplex {
        Simplex::from(v)
    }

    fn cyclic_b2() -> Tiling {
        let target = RelativeComplex::closed(generate::boundary(2).unwrap());
        Tiling::new(
            target,
            vec![
                MorseTile::basic(s([0, 1]), s([1])),
                MorseTile::basic(s([1, 2]), s([2])),
                MorseTile::basic(s([0, 2]), s([0])),
            ],
        )
    }

    fn classical_b3() -> Tiling {
        let target = RelativeComplex::closed(generate::boundary(3).unwrap());
        Tiling::new(
            target,
            vec![
                MorseTile::basic(s([0, 1, 2]), Simplex::empty()),
                MorseTile::basic(s([0, 1, 3]), s([3])),
                MorseTile::basic(s([0, 2, 3]), s([2, 3])),
                MorseTile::basic(s([1, 2, 3]), s([1, 2, 3])),
            ],
        )
    }

    #[test]
    fn cyclic_tiling_is_valid_but_not_shellable() {
        let t = cyclic_b2();
        assert!(validate_tiling(&t).ok);
        let sh = validate_shelling(&t);
        assert!(!sh.ok);
        assert_eq!(sh.violations[0].kind, ViolationKind::NotPrefixClosed);
        assert_eq!(sh.violations[0].tile_index, Some(0));
    }

    #[test]
    fn double_cover_is_reported() {
        let target = RelativeComplex::closed(generate::boundary(2).unwrap());
        let t = Tiling::new(
            target,
            vec![
                MorseTile::basic(s([0, 1]), Simplex::empty()),
                MorseTile::basic(s([1, 2]), Simplex::empty()),
                MorseTile::basic(s([0, 2]), s([0, 2])),
            ],
        );
        let rep = validate_tiling(&t);
        assert!(!rep.ok);
        assert!(rep.has(ViolationKind::NotPartition));
        assert_eq!(rep.violations[0].witness_face, s([1]));
    }

    #[test]
    fn closedness_by_dimension() {
        // an isolated open vertex tile cannot precede... any tiling where a
        // lower-dimensional tile covers a face of a higher one is not closed
        let k = SimplicialComplex::build(&[vec![0, 1], vec![1, 2, 3]]).unwrap();
        let target = RelativeComplex::closed(k);
        let t = Tiling::new(
            target,
            vec![
                MorseTile::basic(s([1, 2, 3]), s([2, 3])),
                MorseTile::basic(s([0, 1]), Simplex::empty()),
            ],
        );
        let rep = validate_tiling(&t);
        assert!(!rep.ok);
        assert!(rep.has(ViolationKind::NotClosed));
    }

    #[test]
    fn single_closed_simplex() {
        for n in 0..5 {
            let k = generate::simplex(n);
            let f = k.facets()[0].clone();
            let t = Tiling::new(RelativeComplex::closed(k), vec![MorseTile::basic(f, Simplex::empty())]);
            assert!(is_valid_shelling(&t));
        }
    }

    #[test]
    fn classical_shelling_of_b3() {
        assert!(is_valid_shelling(&classical_b3()));
    }

    #[test]
    fn bad_tile_reported() {
        let mut t = classical_b3();
        t.tiles[0] = MorseTile::basic(s([0, 1, 5]), Simplex::empty());
        assert!(validate_tiling(&t).has(ViolationKind::BadTile));
    }

    fn orders(ts: &[MorseTile]) -> Vec<usize> {
        ts.iter().map(MorseTile::order).collect()
    }

    #[test]
    fn rewrite_closed_triangle_at_facet() {
        let t = MorseTile::basic(s([0, 1, 2]), Simplex::empty());
        let out = subdivide_tile(&t, &s([0, 1, 2]), RewriteMode::Copy, 3).unwrap();
        assert_eq!(orders(&out), vec![0, 1, 2]);
    }

    #[test]
    fn rewrite_open_triangle_at_facet() {
        let t = MorseTile::critical(s([0, 1, 2]), s([0, 1]));
        let out = subdivide_tile(&t, &s([0, 1, 2]), RewriteMode::Copy, 3).unwrap();
        assert_eq!(orders(&out), vec![1, 2, 3]);
        assert_eq!(out[2].classify(), TileClass::Critical { index: 2 });
    }

    #[test]
    fn rewrite_split_example() {
        let t = MorseTile::morse(s([0, 1, 2, 3]), s([0]), s([0, 1]));
        let out = subdivide_tile(&t, &s([0, 1, 2, 3]), RewriteMode::Split, 4).unwrap();
        let classes: Vec<TileClass> = out.iter().map(MorseTile::classify).collect();
        assert_eq!(
            classes,
            vec![
                TileClass::Basic { order: 1 },
                TileClass::Critical { index: 1 },
                TileClass::Critical { index: 2 },
                TileClass::Basic { order: 3 },
            ]
        );
    }

    #[test]
    fn split_needs_morse_face_inside_tau() {
        let t = MorseTile::morse(s([0, 1, 2, 3]), s([0]), s([0, 1]));
        assert!(matches!(
            subdivide_tile(&t, &s([0, 2, 3]), RewriteMode::Split, 4),
            Err(Error::SplitNotApplicable(..))
        ));
        let b = MorseTile::basic(s([0, 1, 2]), Simplex::empty());
        assert!(subdivide_tile(&b, &s([0]), RewriteMode::Copy, 3).is_err());
        assert!(subdivide_tile(&b, &s([0, 7]), RewriteMode::Copy, 3).is_err());
    }

    #[test]
    fn tiling_rewrite_edge_of_closed_triangle() {
        let k = generate::simplex(2);
        let f = k.facets()[0].clone();
        let t = Tiling::new(RelativeComplex::closed(k), vec![MorseTile::basic(f, Simplex::empty())]);
        let out = subdivide_tiling(&t, &s([0, 1]), &BTreeMap::new()).unwrap();
        assert_eq!(orders(out.tiles()), vec![0, 1]);
        assert!(is_valid_shelling(&out));
    }

    #[test]
    fn tiling_rewrite_b3_facet() {
        let t = classical_b3();
        let out = subdivide_tiling(&t, &s([0, 1, 2]), &BTreeMap::new()).unwrap();
        assert_eq!(out.tiles().len(), 6);
        assert!(is_valid_shelling(&out));
        assert_eq!(out.critical_indices(), vec![0, 2]);
    }

    #[test]
    fn locality_of_rewrite() {
        let k = generate::wedge_two_simplices(2);
        let tiles = vec![
            MorseTile::basic(s([0, 1, 2]), Simplex::empty()),
            MorseTile::basic(s([2, 3, 4]), s([2])),
        ];
        let t = Tiling::new(RelativeComplex::closed(k), tiles);
        let out = subdivide_tiling(&t, &s([0, 1]), &BTreeMap::new()).unwrap();
        assert_eq!(out.tiles().last().unwrap(), &t.tiles()[1]);
    }
}
