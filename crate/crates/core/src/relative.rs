//! Relative simplices and the cone shelling of their stellar subdivisions.
//!
//! Every subdivision rewrite in the crate goes through
//! [`subdivide_relative_simplex`]: number the vertices `w_0, …, w_n` of the
//! facet `σ`, let `σ_i = σ \ {w_i}`, and shell `st(σ, τ)` by the cones
//! `â * (σ_i \ (σ_0 ∪ … ∪ σ_{i-1}))` for the indices `i` with `w_i ∈ τ`.
//! Removing the subdivided missing faces from each cone gives the pieces.
//! Vertices placed before the window must be opposite missing ridges.

use crate::complex::{maximal_faces, RelativeComplex, Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::tile::MorseTile;

/// A simplex deprived of some of its proper faces.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RelativeSimplex {
    simplex: Simplex,
    missing_faces: Vec<Simplex>,
}

impl RelativeSimplex {
    /// Normalizes `missing` to its maximal elements. Each must be a proper
    /// non-empty face.
    pub fn new(simplex: Simplex, missing: impl IntoIterator<Item = Simplex>) -> Result<Self> {
        let missing = maximal_faces(missing);
        for m in &missing {
            if !m.is_subset(&simplex) || m == &simplex {
                return Err(Error::InvalidInput(format!(
                    "{m} is not a proper face of {simplex}"
                )));
            }
        }
        Ok(RelativeSimplex {
            simplex,
            missing_faces: missing,
        })
    }

    pub fn closed(simplex: Simplex) -> Self {
        RelativeSimplex {
            simplex,
            missing_faces: Vec::new(),
        }
    }

    pub fn simplex(&self) -> &Simplex {
        &self.simplex
    }

    pub fn missing_faces(&self) -> &[Simplex] {
        &self.missing_faces
    }

    pub fn dim(&self) -> usize {
        self.simplex.len().saturating_sub(1)
    }

    pub fn contains(&self, face: &Simplex) -> bool {
        !face.is_empty()
            && face.is_subset(&self.simplex)
            && !self.missing_faces.iter().any(|m| face.is_subset(m))
    }

    /// The member faces, sorted.
    pub fn faces(&self) -> Vec<Simplex> {
        let mut out: Vec<Simplex> = self.simplex.faces().into_iter().filter(|f| self.contains(f)).collect();
        out.sort();
        out
    }

    /// Vertices opposite the missing ridges.
    pub fn restriction_set(&self) -> Simplex {
        let n = self.simplex.len();
        Simplex::from_set(
            self.missing_faces
                .iter()
                .filter(|m| m.len() + 1 == n)
                .map(|m| self.simplex.difference(m).vertices()[0]),
        )
    }

    /// Missing faces of codimension at least two.
    pub fn higher_missing(&self) -> Vec<&Simplex> {
        let n = self.simplex.len();
        self.missing_faces.iter().filter(|m| m.len() + 1 < n).collect()
    }

    /// Total size of the higher-codimension missing faces, counted only when
    /// there are at least two of them.
    pub fn reduction_weight(&self) -> usize {
        let h = self.higher_missing();
        if h.len() < 2 {
            0
        } else {
            h.iter().map(|m| m.len()).sum()
        }
    }

    /// The pair (σ, L) whose member faces are those of this relative simplex.
    pub fn as_relative_complex(&self) -> RelativeComplex {
        RelativeComplex::new(
            SimplicialComplex::from_facets([self.simplex.clone()]),
            SimplicialComplex::from_facets(self.missing_faces.iter().cloned()),
        )
        .expect("missing faces are proper faces")
    }

    /// The Morse tile with the same faces, if there is one.
    pub fn to_morse_tile(&self) -> Option<MorseTile> {
        let r = self.restriction_set();
        let higher = self.higher_missing();
        match higher.as_slice() {
            [] => Some(MorseTile::basic(self.simplex.clone(), r)),
            [m] => Some(MorseTile::morse(self.simplex.clone(), r, (*m).clone())),
            _ => None,
        }
    }

    pub fn from_tile(t: &MorseTile) -> Self {
        RelativeSimplex {
            simplex: t.facet().clone(),
            missing_faces: t.missing_faces(),
        }
    }
}

/// Pieces of `st(P, τ)` in shelling order, for the vertex numbering `order`.
pub fn subdivide_relative_simplex(
    piece: &RelativeSimplex,
    tau: &Simplex,
    order: &[VertexId],
    apex: VertexId,
) -> Result<Vec<RelativeSimplex>> {
    let sigma = piece.simplex();
    if !tau.is_subset(sigma) {
        return Err(Error::UnknownFace(tau.clone()));
    }
    if tau.len() < 2 {
        return Err(Error::DegenerateSubdivision(tau.clone()));
    }
    debug_assert_eq!(Simplex::from_set(order.iter().copied()), *sigma);
    let first = order.iter().position(|v| tau.contains(*v)).expect("tau is non-empty");
    let last = first + tau.len() - 1;
    debug_assert!(order[first..=last].iter().all(|v| tau.contains(*v)), "window not contiguous");
    let mut pieces = Vec::with_capacity(tau.len());
    for i in first..=last {
        let wi = order[i];
        let facet = sigma.without(wi).with(apex);
        let mut missing: Vec<Simplex> = order[..i].iter().map(|&w| facet.without(w)).collect();
        for m in piece.missing_faces() {
            if tau.is_subset(m) {
                missing.push(m.without(wi).with(apex));
            } else {
                missing.push(m.without(wi));
            }
        }
        pieces.push(RelativeSimplex::new(facet, missing)?);
    }
    Ok(pieces)
}

/// How a Morse tile is rewritten when its facet is subdivided.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RewriteMode {
    /// Keep one tile isomorphic to the original.
    #[default]
    Copy,
    /// Trade the Morse face for two critical tiles of consecutive indices.
    /// Only valid when the Morse face is non-empty, strictly inside `τ`, and
    /// the tile is regular.
    Split,
}

fn lex_rest(sigma: &Simplex, used: &[VertexId]) -> Vec<VertexId> {
    sigma.vertices().iter().copied().filter(|v| !used.contains(v)).collect()
}

/// Vertex numbering used to rewrite a Morse tile, following the three
/// cases of the tile subdivision rule.
pub fn tile_numbering(tile: &MorseTile, tau: &Simplex, mode: RewriteMode) -> Result<Vec<VertexId>> {
    let sigma = tile.facet();
    let r = tile.removed_opposite();
    let mu = tile.morse_face().filter(|m| !m.is_empty());
    let mut order: Vec<VertexId> = Vec::with_capacity(sigma.len());
    match mode {
        RewriteMode::Split => {
            let m = match mu {
                Some(m) if m.is_subset(tau) && m != tau && !tile.critical_flag() => m,
                _ => return Err(Error::SplitNotApplicable(sigma.clone(), tau.clone())),
            };
            order.extend(r.vertices());
            order.extend(m.difference(r).vertices());
            order.extend(tau.difference(m).vertices());
        }
        RewriteMode::Copy => {
            order.extend(r.difference(tau).vertices());
            order.extend(r.intersection(tau).vertices());
            let free = tau.difference(r);
            match mu {
                Some(m) if !tau.is_subset(m) => {
                    // the copy sits at the first window slot past r(T), which must avoid μ
                    let lead = free
                        .vertices()
                        .iter()
                        .copied()
                        .find(|v| !m.contains(*v))
                        .expect("tau escapes the Morse face outside r(T)");
                    order.push(lead);
                    order.extend(free.without(lead).vertices());
                }
                _ => order.extend(free.vertices()),
            }
        }
    }
    let rest = lex_rest(sigma, &order);
    order.extend(rest);
    Ok(order)
}

/// Vertex numbering for a general relative simplex: restriction set first,
/// then a vertex separating two higher missing faces when there is one.
pub fn relative_numbering(piece: &RelativeSimplex, tau: &Simplex) -> Vec<VertexId> {
    let sigma = piece.simplex();
    let r = piece.restriction_set();
    let mut order: Vec<VertexId> = Vec::with_capacity(sigma.len());
    order.extend(r.difference(tau).vertices());
    order.extend(r.intersection(tau).vertices());
    let free = tau.difference(&r);
    match splitter(piece, &free) {
        Some(v) => {
            order.push(v);
            order.extend(free.without(v).vertices());
        }
        None => order.extend(free.vertices()),
    }
    let rest = lex_rest(sigma, &order);
    order.extend(rest);
    order
}

/// Least vertex of `A \ B` inside `allowed`, over ordered pairs (A, B) of
/// distinct higher missing faces taken lexicographically.
pub(crate) fn splitter(piece: &RelativeSimplex, allowed: &Simplex) -> Option<VertexId> {
    let higher = piece.higher_missing();
    if higher.len() < 2 {
        return None;
    }
    for a in &higher {
        for b in &higher {
            if a == b {
                continue;
            }
            if let Some(&v) = a.difference(b).intersection(allowed).vertices().first() {
                return Some(v);
            }
        }
    }
    None
}
