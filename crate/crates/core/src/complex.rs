//! Finite simplicial and relative simplicial complexes.
//!
//! Complexes are stored by their facets. A face query is a subset test
//! against the facet list, which is plenty fast for the desk-scale inputs
//! this crate targets.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// Vertex label. Subdivisions issue fresh labels above every existing one.
pub type VertexId = u32;

/// A face, stored as a strictly increasing vertex sequence.
///
/// The empty simplex is a legitimate value (it shows up as the restriction
/// set of an order-0 tile) but never counts as a face of a complex.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex(Vec<VertexId>);

impl Simplex {
    /// Builds a simplex, rejecting repeated vertices.
    pub fn new(vertices: impl IntoIterator<Item = VertexId>) -> Result<Self> {
        let mut v: Vec<VertexId> = vertices.into_iter().collect();
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Malformed(format!("repeated vertex in {v:?}")));
        }
        Ok(Simplex(v))
    }

    /// Builds a simplex from any vertex collection, silently dropping repeats.
    pub fn from_set(vertices: impl IntoIterator<Item = VertexId>) -> Self {
        let mut v: Vec<VertexId> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Simplex(v)
    }

    pub fn empty() -> Self {
        Simplex(Vec::new())
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dimension; the empty simplex has dimension -1.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &Simplex) -> bool {
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        Simplex::from_set(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn intersection(&self, other: &Simplex) -> Simplex {
        Simplex(self.0.iter().copied().filter(|v| other.contains(*v)).collect())
    }

    pub fn difference(&self, other: &Simplex) -> Simplex {
        Simplex(self.0.iter().copied().filter(|v| !other.contains(*v)).collect())
    }

    pub fn without(&self, v: VertexId) -> Simplex {
        Simplex(self.0.iter().copied().filter(|&w| w != v).collect())
    }

    pub fn with(&self, v: VertexId) -> Simplex {
        let mut out = self.0.clone();
        if let Err(pos) = out.binary_search(&v) {
            out.insert(pos, v);
        }
        Simplex(out)
    }

    /// All subsets, including the empty one and the simplex itself.
    pub fn subsets(&self) -> Vec<Simplex> {
        let n = self.0.len();
        assert!(n < 32, "simplex too large to enumerate");
        (0u32..(1 << n))
            .map(|mask| {
                Simplex(
                    (0..n)
                        .filter(|i| mask & (1 << i) != 0)
                        .map(|i| self.0[i])
                        .collect(),
                )
            })
            .collect()
    }

    /// All non-empty faces.
    pub fn faces(&self) -> Vec<Simplex> {
        self.subsets().into_iter().filter(|s| !s.is_empty()).collect()
    }

    /// Codimension-one faces (empty for a vertex).
    pub fn ridges(&self) -> Vec<Simplex> {
        if self.0.len() <= 1 {
            return Vec::new();
        }
        self.0.iter().map(|&v| self.without(v)).collect()
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "-");
        }
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl From<&[VertexId]> for Simplex {
    fn from(v: &[VertexId]) -> Self {
        Simplex::from_set(v.iter().copied())
    }
}

impl<const N: usize> From<[VertexId; N]> for Simplex {
    fn from(v: [VertexId; N]) -> Self {
        Simplex::from_set(v)
    }
}

/// Keeps only the inclusion-maximal non-empty members, sorted.
pub fn maximal_faces(faces: impl IntoIterator<Item = Simplex>) -> Vec<Simplex> {
    let mut all: Vec<Simplex> = faces.into_iter().filter(|f| !f.is_empty()).collect();
    all.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    all.dedup();
    let mut kept: Vec<Simplex> = Vec::new();
    for f in all {
        if !kept.iter().any(|k| f.is_subset(k)) {
            kept.push(f);
        }
    }
    kept.sort();
    kept
}

/// A finite simplicial complex given by its facets.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimplicialComplex {
    facets: Vec<Simplex>,
    provenance: BTreeMap<VertexId, Simplex>,
}

impl SimplicialComplex {
    /// Builds a complex from raw vertex lists. Lists that are faces of other
    /// lists are absorbed.
    pub fn build(facet_lists: &[Vec<VertexId>]) -> Result<Self> {
        let mut facets = Vec::with_capacity(facet_lists.len());
        for list in facet_lists {
            if list.is_empty() {
                return Err(Error::Malformed("empty facet".into()));
            }
            facets.push(Simplex::new(list.iter().copied())?);
        }
        Ok(Self::from_facets(facets))
    }

    pub fn from_facets(facets: impl IntoIterator<Item = Simplex>) -> Self {
        SimplicialComplex {
            facets: maximal_faces(facets),
            provenance: BTreeMap::new(),
        }
    }

    pub fn with_provenance(mut self, provenance: BTreeMap<VertexId, Simplex>) -> Self {
        self.provenance = provenance;
        self
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    /// Faces that subdivision created, keyed by their apex.
    pub fn provenance(&self) -> &BTreeMap<VertexId, Simplex> {
        &self.provenance
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn dim(&self) -> isize {
        self.facets.iter().map(Simplex::dim).max().unwrap_or(-1)
    }

    pub fn vertices(&self) -> BTreeSet<VertexId> {
        self.facets.iter().flat_map(|f| f.vertices().iter().copied()).collect()
    }

    /// Smallest label strictly above every vertex and every recorded apex.
    pub fn fresh_vertex(&self) -> VertexId {
        let top = self.vertices().iter().next_back().copied();
        let prov = self.provenance.keys().next_back().copied();
        match top.max(prov) {
            Some(v) => v + 1,
            None => 0,
        }
    }

    pub fn contains_face(&self, face: &Simplex) -> bool {
        !face.is_empty() && self.facets.iter().any(|f| face.is_subset(f))
    }

    pub fn is_facet(&self, face: &Simplex) -> bool {
        self.facets.binary_search(face).is_ok()
    }

    /// Every non-empty face.
    pub fn faces(&self) -> BTreeSet<Simplex> {
        self.facets.iter().flat_map(|f| f.faces()).collect()
    }

    pub fn facets_containing<'a>(&'a self, face: &'a Simplex) -> impl Iterator<Item = &'a Simplex> {
        self.facets.iter().filter(move |f| face.is_subset(f))
    }

    /// Stellar subdivision at `tau`, returning the new complex and its apex.
    pub fn stellar_subdivide(&self, tau: &Simplex) -> Result<(SimplicialComplex, VertexId)> {
        let apex = self.fresh_vertex();
        let out = self.stellar_subdivide_with_apex(tau, apex)?;
        Ok((out, apex))
    }

    pub(crate) fn stellar_subdivide_with_apex(
        &self,
        tau: &Simplex,
        apex: VertexId,
    ) -> Result<SimplicialComplex> {
        if !self.contains_face(tau) {
            return Err(Error::UnknownFace(tau.clone()));
        }
        if tau.len() < 2 {
            return Err(Error::DegenerateSubdivision(tau.clone()));
        }
        let mut facets = Vec::new();
        for f in &self.facets {
            if tau.is_subset(f) {
                for &v in tau.vertices() {
                    facets.push(f.without(v).with(apex));
                }
            } else {
                facets.push(f.clone());
            }
        }
        let mut provenance = self.provenance.clone();
        provenance.insert(apex, tau.clone());
        Ok(SimplicialComplex::from_facets(facets).with_provenance(provenance))
    }

    /// Chains of non-empty faces. Original vertices keep their labels; every
    /// face of dimension at least one gets a fresh label, assigned in order of
    /// increasing dimension then lexicographically.
    pub fn barycentric_subdivide(&self) -> SimplicialComplex {
        let labels = barycentric_labels(self);
        let out = subdivide_with_labels(self, &labels);
        let mut provenance = self.provenance.clone();
        for (face, &id) in &labels {
            if face.len() > 1 {
                provenance.insert(id, face.clone());
            }
        }
        out.with_provenance(provenance)
    }

    /// Stellar subdivisions at every face of dimension at least one, in
    /// decreasing dimension (lexicographic within a dimension).
    pub fn stellar_cascade(&self) -> Result<SimplicialComplex> {
        let mut faces: Vec<Simplex> = self.faces().into_iter().filter(|f| f.len() > 1).collect();
        faces.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        let mut k = self.clone();
        for f in &faces {
            k = k.stellar_subdivide(f)?.0;
        }
        Ok(k)
    }

    pub fn predicates(&self) -> StructuralPredicates {
        structural_predicates(self)
    }

    pub fn euler_characteristic(&self) -> i64 {
        RelativeComplex::closed(self.clone()).euler_characteristic()
    }
}

pub(crate) fn barycentric_labels(k: &SimplicialComplex) -> BTreeMap<Simplex, VertexId> {
    let mut faces: Vec<Simplex> = k.faces().into_iter().collect();
    faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let mut next = k.fresh_vertex();
    let mut labels = BTreeMap::new();
    for f in faces {
        if f.len() == 1 {
            labels.insert(f.clone(), f.vertices()[0]);
        } else {
            labels.insert(f, next);
            next += 1;
        }
    }
    labels
}

pub(crate) fn subdivide_with_labels(
    k: &SimplicialComplex,
    labels: &BTreeMap<Simplex, VertexId>,
) -> SimplicialComplex {
    let mut facets = Vec::new();
    for f in k.facets() {
        for chain in maximal_chains(f) {
            facets.push(Simplex::from_set(chain.iter().map(|c| labels[c])));
        }
    }
    SimplicialComplex::from_facets(facets)
}

/// Maximal chains of non-empty faces of a simplex, one per vertex ordering.
pub(crate) fn maximal_chains(f: &Simplex) -> Vec<Vec<Simplex>> {
    fn rec(rest: &[VertexId], prefix: &Simplex, chain: &mut Vec<Simplex>, out: &mut Vec<Vec<Simplex>>) {
        if rest.is_empty() {
            out.push(chain.clone());
            return;
        }
        for (i, &v) in rest.iter().enumerate() {
            let next = prefix.with(v);
            let mut remaining = rest.to_vec();
            remaining.remove(i);
            chain.push(next.clone());
            rec(&remaining, &next, chain, out);
            chain.pop();
        }
    }
    let mut out = Vec::new();
    rec(f.vertices(), &Simplex::empty(), &mut Vec::new(), &mut out);
    out
}

/// Purity, strong connectivity and the closed pseudo-manifold condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructuralPredicates {
    pub is_pure: bool,
    pub is_strongly_connected: bool,
    pub is_closed_pseudomanifold: bool,
}

pub fn structural_predicates(k: &SimplicialComplex) -> StructuralPredicates {
    let facets = k.facets();
    let is_pure = facets.windows(2).all(|w| w[0].len() == w[1].len()) && !facets.is_empty();
    if !is_pure {
        return StructuralPredicates {
            is_pure,
            is_strongly_connected: false,
            is_closed_pseudomanifold: false,
        };
    }
    let mut ridge_map: BTreeMap<Simplex, Vec<usize>> = BTreeMap::new();
    for (i, f) in facets.iter().enumerate() {
        for r in f.ridges() {
            ridge_map.entry(r).or_default().push(i);
        }
    }
    // union-find over facet-ridge adjacency
    let mut parent: Vec<usize> = (0..facets.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for ids in ridge_map.values() {
        for w in ids.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            parent[a] = b;
        }
    }
    let root = find(&mut parent, 0);
    let is_strongly_connected = (0..facets.len()).all(|i| find(&mut parent, i) == root);
    let is_closed_pseudomanifold = if facets[0].len() == 1 {
        facets.len() == 2
    } else {
        ridge_map.values().all(|ids| ids.len() == 2)
    };
    StructuralPredicates {
        is_pure,
        is_strongly_connected,
        is_closed_pseudomanifold,
    }
}

/// A pair (K, L): the faces of `ambient` that do not lie in `removed`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelativeComplex {
    ambient: SimplicialComplex,
    removed: SimplicialComplex,
}

impl RelativeComplex {
    pub fn new(ambient: SimplicialComplex, removed: SimplicialComplex) -> Result<Self> {
        for f in removed.facets() {
            if !ambient.contains_face(f) {
                return Err(Error::UnknownFace(f.clone()));
            }
            if ambient.is_facet(f) {
                return Err(Error::Malformed(format!("removed subcomplex contains the facet {f}")));
            }
        }
        Ok(RelativeComplex { ambient, removed })
    }

    /// The complex itself, nothing removed.
    pub fn closed(ambient: SimplicialComplex) -> Self {
        RelativeComplex {
            ambient,
            removed: SimplicialComplex::default(),
        }
    }

    pub fn ambient(&self) -> &SimplicialComplex {
        &self.ambient
    }

    pub fn removed(&self) -> &SimplicialComplex {
        &self.removed
    }

    pub fn dim(&self) -> isize {
        self.ambient.dim()
    }

    pub fn is_pure(&self) -> bool {
        self.ambient.facets().windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn contains(&self, face: &Simplex) -> bool {
        self.ambient.contains_face(face) && !self.removed.contains_face(face)
    }

    /// Every member face, the empty face excluded.
    pub fn faces(&self) -> BTreeSet<Simplex> {
        self.ambient
            .faces()
            .into_iter()
            .filter(|f| !self.removed.contains_face(f))
            .collect()
    }

    pub fn f_vector(&self) -> Vec<u64> {
        let d = self.dim();
        if d < 0 {
            return Vec::new();
        }
        let mut f = vec![0u64; d as usize + 1];
        for face in self.faces() {
            f[face.len() - 1] += 1;
        }
        f
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(j, &c)| if j % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// Stellar subdivision of the pair at `tau`. When `tau` lies in the
    /// removed subcomplex, that subcomplex is subdivided with the same apex.
    pub fn stellar_subdivide(&self, tau: &Simplex) -> Result<(RelativeComplex, VertexId)> {
        let apex = self.ambient.fresh_vertex().max(self.removed.fresh_vertex());
        let ambient = self.ambient.stellar_subdivide_with_apex(tau, apex)?;
        let removed = if self.removed.contains_face(tau) {
            self.removed.stellar_subdivide_with_apex(tau, apex)?
        } else {
            self.removed.clone()
        };
        Ok((RelativeComplex { ambient, removed }, apex))
    }

    /// Barycentric subdivision of both members with a shared labelling.
    pub fn barycentric_subdivide(&self) -> RelativeComplex {
        let labels = barycentric_labels(&self.ambient);
        let ambient = self.ambient.barycentric_subdivide();
        let removed = subdivide_with_labels(&self.removed, &labels);
        RelativeComplex { ambient, removed }
    }
}

pub fn f_vector(s: &RelativeComplex) -> Vec<u64> {
    s.f_vector()
}

pub fn euler_characteristic(s: &RelativeComplex) -> i64 {
    s.euler_characteristic()
}
