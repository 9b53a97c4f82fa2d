//! Subdivision-driven shellings: barycentric Morse shellings of relative
//! simplices, conversion of Morse tiles to h-tiles, and the whole-complex
//! drivers built on the facet filtration.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::complex::{barycentric_labels, maximal_faces, RelativeComplex, Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::relative::{relative_numbering, splitter, subdivide_relative_simplex, RelativeSimplex, RewriteMode};
use crate::tile::{MorseTile, TileClass};
use crate::tiling::{subdivide_tiling_traced, Tiling};

const STEP_LIMIT: usize = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubdivisionKind {
    Facet,
    Ridge,
    Barycentric,
}

impl SubdivisionKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            SubdivisionKind::Facet => "facet",
            SubdivisionKind::Ridge => "ridge",
            SubdivisionKind::Barycentric => "barycentric",
        }
    }
}

impl FromStr for SubdivisionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "facet" => Ok(SubdivisionKind::Facet),
            "ridge" => Ok(SubdivisionKind::Ridge),
            "barycentric" => Ok(SubdivisionKind::Barycentric),
            other => Err(Error::Malformed(format!("unknown subdivision kind {other:?}"))),
        }
    }
}

/// One logged subdivision. Barycentric steps carry the empty face.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubdivisionStep {
    pub face: Simplex,
    pub kind: SubdivisionKind,
}

impl fmt::Display for SubdivisionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "subdivide {}", self.kind.as_str())?;
        for v in self.face.vertices() {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

/// Which stellar subdivisions the drivers may use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum StellarMode {
    #[default]
    Facets,
    Ridges,
    /// Facets while reducing relative simplices, ridges while converting
    /// Morse tiles.
    Mixed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShellMode {
    Barycentric,
    Stellar(StellarMode),
}

impl FromStr for StellarMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "facets" => Ok(StellarMode::Facets),
            "ridges" => Ok(StellarMode::Ridges),
            "mixed" => Ok(StellarMode::Mixed),
            other => Err(Error::InvalidInput(format!("unknown stellar mode {other:?}"))),
        }
    }
}

impl FromStr for ShellMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "barycentric" => Ok(ShellMode::Barycentric),
            other => other.parse().map(ShellMode::Stellar),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingStats {
    pub num_subdivisions: usize,
    pub h_vector: Vec<u64>,
    pub c_vector: Vec<u64>,
    pub euler: i64,
}

impl ShellingStats {
    pub fn of(tiling: &Tiling, num_subdivisions: usize) -> Self {
        let n = tiling.target().dim().max(0) as usize;
        let mut h = vec![0u64; n + 2];
        let mut c = vec![0u64; n + 1];
        for t in tiling.tiles() {
            let order = if n == 0 { 1 } else { t.order() };
            if let Some(slot) = h.get_mut(order) {
                *slot += 1;
            }
            if let Some(slot) = t.critical_index().and_then(|k| c.get_mut(k)) {
                *slot += 1;
            }
        }
        ShellingStats {
            num_subdivisions,
            h_vector: h,
            c_vector: c,
            euler: tiling.target().euler_characteristic(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingResult {
    pub tiling: Tiling,
    pub subdivision_log: Vec<SubdivisionStep>,
    pub stats: ShellingStats,
    /// Reduction measure `(max weight, pieces at that weight)` before each
    /// reduction step, followed by the final value.
    pub measures: Vec<(usize, usize)>,
}

impl ShellingResult {
    fn new(tiling: Tiling, subdivision_log: Vec<SubdivisionStep>, measures: Vec<(usize, usize)>) -> Self {
        let stats = ShellingStats::of(&tiling, subdivision_log.len());
        ShellingResult {
            tiling,
            subdivision_log,
            stats,
            measures,
        }
    }

    /// The subdivided complex carrying the tiling.
    pub fn complex(&self) -> &RelativeComplex {
        self.tiling.target()
    }
}

/// Applies a subdivision log to `input`.
pub fn replay(input: &RelativeComplex, log: &[SubdivisionStep]) -> Result<RelativeComplex> {
    let mut s = input.clone();
    for step in log {
        s = match step.kind {
            SubdivisionKind::Barycentric => s.barycentric_subdivide(),
            _ => s.stellar_subdivide(&step.face)?.0,
        };
    }
    Ok(s)
}

fn facet_order(a: &Simplex, b: &Simplex) -> std::cmp::Ordering {
    b.len().cmp(&a.len()).then_with(|| a.cmp(b))
}

fn pieces_for(order: &[Simplex], removed: &SimplicialComplex) -> Vec<RelativeSimplex> {
    order
        .iter()
        .enumerate()
        .map(|(j, sigma)| {
            let missing = order[..j]
                .iter()
                .chain(removed.facets())
                .map(|other| sigma.intersection(other))
                .filter(|m| !m.is_empty());
            RelativeSimplex::new(sigma.clone(), maximal_faces(missing)).expect("intersections are proper faces")
        })
        .collect()
}

/// Facets by decreasing dimension (lexicographic ties), each deprived of
/// its intersections with earlier facets and with the removed subcomplex.
pub fn facet_filtration(s: &RelativeComplex) -> Vec<RelativeSimplex> {
    let mut order = s.ambient().facets().to_vec();
    order.sort_by(facet_order);
    pieces_for(&order, s.removed())
}

/// Facet order of a strongly connected closed pseudo-manifold in which each
/// facet after the first meets the union of the previous ones along a ridge.
fn adjacency_order(k: &SimplicialComplex) -> Vec<Simplex> {
    let mut facets = k.facets().to_vec();
    facets.sort();
    let mut placed = vec![false; facets.len()];
    let mut order = vec![facets[0].clone()];
    placed[0] = true;
    while order.len() < facets.len() {
        let mut best: Option<(Simplex, usize)> = None;
        for f in &order {
            for r in f.ridges() {
                let outside: Vec<usize> = (0..facets.len())
                    .filter(|&i| !placed[i] && r.is_subset(&facets[i]))
                    .collect();
                let inside = order.iter().filter(|g| r.is_subset(g)).count();
                if inside == 1 && outside.len() == 1 && best.as_ref().map_or(true, |(b, _)| r < *b) {
                    best = Some((r, outside[0]));
                }
            }
        }
        let (_, i) = best.expect("strongly connected");
        placed[i] = true;
        order.push(facets[i].clone());
    }
    order
}

fn reduction_measure(pieces: &[(RelativeSimplex, String)]) -> (usize, usize) {
    let max = pieces.iter().map(|(p, _)| p.reduction_weight()).max().unwrap_or(0);
    if max == 0 {
        return (0, 0);
    }
    (max, pieces.iter().filter(|(p, _)| p.reduction_weight() == max).count())
}

struct Pipeline {
    target: RelativeComplex,
    log: Vec<SubdivisionStep>,
    measures: Vec<(usize, usize)>,
}

impl Pipeline {
    fn new(target: RelativeComplex) -> Self {
        Pipeline {
            target,
            log: Vec::new(),
            measures: Vec::new(),
        }
    }

    /// Subdivides relative simplices carrying two or more higher missing
    /// faces until every piece is a Morse tile.
    fn reduce(&mut self, mut pieces: Vec<(RelativeSimplex, String)>, mode: StellarMode) -> Result<Vec<(RelativeSimplex, String)>> {
        for _ in 0..STEP_LIMIT {
            let measure = reduction_measure(&pieces);
            self.measures.push(measure);
            if measure.0 == 0 {
                return Ok(pieces);
            }
            let chosen = pieces
                .iter()
                .position(|(p, _)| p.reduction_weight() == measure.0)
                .expect("measure attained");
            let piece = &pieces[chosen].0;
            let sigma = piece.simplex().clone();
            let (tau, kind) = match mode {
                StellarMode::Ridges => {
                    let r = piece.restriction_set();
                    let s = splitter(piece, &sigma.difference(&r)).expect("antichain of higher faces");
                    let u = sigma
                        .vertices()
                        .iter()
                        .copied()
                        .find(|&v| v != s && !r.contains(v))
                        .expect("a free vertex remains");
                    (sigma.without(u), SubdivisionKind::Ridge)
                }
                _ => (sigma, SubdivisionKind::Facet),
            };
            let (target, apex) = self.target.stellar_subdivide(&tau)?;
            let mut next = Vec::with_capacity(pieces.len() + tau.len());
            for (p, trace) in pieces {
                if tau.is_subset(p.simplex()) {
                    let order = relative_numbering(&p, &tau);
                    for child in subdivide_relative_simplex(&p, &tau, &order, apex)? {
                        next.push((child, format!("{trace}/reduce")));
                    }
                } else {
                    next.push((p, trace));
                }
            }
            pieces = next;
            self.target = target;
            self.log.push(SubdivisionStep { face: tau, kind });
        }
        Err(Error::Guardrail("reduction did not terminate".into()))
    }

    /// Splits regular Morse tiles, earliest first, until only basic and
    /// critical tiles remain.
    fn convert(&mut self, mut tiling: Tiling, mode: StellarMode) -> Result<Tiling> {
        for _ in 0..STEP_LIMIT {
            let Some(i) = tiling
                .tiles()
                .iter()
                .position(|t| matches!(t.classify(), TileClass::RegularMorse { .. }))
            else {
                return Ok(tiling);
            };
            let tile = &tiling.tiles()[i];
            let (tau, kind) = match mode {
                StellarMode::Facets => (tile.facet().clone(), SubdivisionKind::Facet),
                _ => {
                    let mu = tile.morse_face().expect("regular tiles carry a Morse face");
                    let ridge = tile
                        .facet()
                        .ridges()
                        .into_iter()
                        .filter(|r| mu.is_subset(r))
                        .min()
                        .expect("Morse face has codimension two or more");
                    (ridge, SubdivisionKind::Ridge)
                }
            };
            let modes = BTreeMap::from([(i, RewriteMode::Split)]);
            tiling = subdivide_tiling_traced(&tiling, &tau, &modes)?.tiling;
            self.log.push(SubdivisionStep { face: tau, kind });
        }
        Err(Error::Guardrail("conversion did not terminate".into()))
    }

    fn run(mut self, pieces: Vec<RelativeSimplex>, mode: StellarMode) -> Result<ShellingResult> {
        let traced = pieces
            .into_iter()
            .enumerate()
            .map(|(j, p)| (p, format!("piece{j}")))
            .collect();
        let reduction_mode = match mode {
            StellarMode::Ridges => StellarMode::Ridges,
            _ => StellarMode::Facets,
        };
        let reduced = self.reduce(traced, reduction_mode)?;
        let mut tiles = Vec::with_capacity(reduced.len());
        let mut provenance = Vec::with_capacity(reduced.len());
        for (p, trace) in reduced {
            tiles.push(p.to_morse_tile().expect("reduced pieces are tiles"));
            provenance.push(trace);
        }
        let tiling = Tiling::with_provenance(self.target.clone(), tiles, provenance);
        let tiling = self.convert(tiling, mode)?;
        Ok(ShellingResult::new(tiling, self.log, self.measures))
    }
}

/// Turns a regular Morse tile into basic and critical tiles by stellar
/// subdivisions.
pub fn h_tile_regular_morse(t: &MorseTile, mode: StellarMode) -> Result<ShellingResult> {
    if !matches!(t.classify(), TileClass::RegularMorse { .. }) {
        return Err(Error::NothingToDo(format!("tile on {} is not a regular Morse tile", t.facet())));
    }
    let target = RelativeSimplex::from_tile(t).as_relative_complex();
    let mut pipe = Pipeline::new(target.clone());
    let tiling = pipe.convert(Tiling::new(target, vec![t.clone()]), mode)?;
    Ok(ShellingResult::new(tiling, pipe.log, pipe.measures))
}

/// Shellable h-tiling of a stellar subdivision of one relative simplex.
pub fn shell_relative_simplex(p: &RelativeSimplex, mode: StellarMode) -> Result<ShellingResult> {
    let target = p.as_relative_complex();
    Pipeline::new(target).run(vec![p.clone()], mode)
}

/// Morse tiles of the barycentric subdivision of `p`, labelled by `labels`
/// (face of the original complex to barycentre id).
fn barycentric_tiles(p: &RelativeSimplex, labels: &BTreeMap<Simplex, VertexId>) -> Result<Vec<MorseTile>> {
    let sigma = p.simplex();
    let r = p.restriction_set();
    let start = RelativeComplex::new(
        SimplicialComplex::from_facets([sigma.clone()]),
        SimplicialComplex::from_facets(r.vertices().iter().map(|&v| sigma.without(v))),
    )?;
    let mut tiling = Tiling::new(start, vec![MorseTile::basic(sigma.clone(), r.clone())]);
    let mut faces: Vec<Simplex> = sigma.faces().into_iter().filter(|f| f.len() > 1).collect();
    faces.sort_by(facet_order);
    for f in &faces {
        tiling = subdivide_tiling_traced(&tiling, f, &BTreeMap::new())?.tiling;
    }
    let prov = tiling.target().ambient().provenance().clone();
    let carrier = |x: VertexId| prov.get(&x).cloned().unwrap_or_else(|| Simplex::from([x]));
    let higher = p.higher_missing();
    let mut out = Vec::with_capacity(tiling.tiles().len());
    for t in tiling.tiles() {
        let tr = t.removed_opposite();
        let morse = higher
            .iter()
            .map(|m| {
                Simplex::from_set(
                    t.facet()
                        .vertices()
                        .iter()
                        .copied()
                        .filter(|&x| carrier(x).is_subset(m)),
                )
            })
            .filter(|fm| !fm.is_empty() && tr.is_subset(fm))
            .max_by_key(Simplex::len);
        let tile = match morse {
            Some(fm) => MorseTile::morse(t.facet().clone(), tr.clone(), fm),
            None => t.clone(),
        };
        out.push(tile.relabel(|x| if prov.contains_key(&x) { labels[&carrier(x)] } else { x }));
    }
    Ok(out)
}

/// Morse shelling of the barycentric subdivision of a relative simplex.
pub fn morse_shell_barycentric(p: &RelativeSimplex) -> Result<ShellingResult> {
    let source = p.as_relative_complex();
    let labels = barycentric_labels(source.ambient());
    let tiles = barycentric_tiles(p, &labels)?;
    let provenance = vec![String::from("piece0/barycentric"); tiles.len()];
    let tiling = Tiling::with_provenance(source.barycentric_subdivide(), tiles, provenance);
    let log = vec![SubdivisionStep {
        face: Simplex::empty(),
        kind: SubdivisionKind::Barycentric,
    }];
    Ok(ShellingResult::new(tiling, log, Vec::new()))
}

fn shell_pieces(s: &RelativeComplex, pieces: Vec<RelativeSimplex>, mode: ShellMode) -> Result<ShellingResult> {
    match mode {
        ShellMode::Stellar(m) => Pipeline::new(s.clone()).run(pieces, m),
        ShellMode::Barycentric => {
            let labels = barycentric_labels(s.ambient());
            let mut tiles = Vec::new();
            let mut provenance = Vec::new();
            for (j, p) in pieces.iter().enumerate() {
                for t in barycentric_tiles(p, &labels)? {
                    tiles.push(t);
                    provenance.push(format!("piece{j}/barycentric"));
                }
            }
            let tiling = Tiling::with_provenance(s.barycentric_subdivide(), tiles, provenance);
            let log = vec![SubdivisionStep {
                face: Simplex::empty(),
                kind: SubdivisionKind::Barycentric,
            }];
            Ok(ShellingResult::new(tiling, log, Vec::new()))
        }
    }
}

/// Morse shelling of `Sd(S)` in barycentric mode, h-shelling of a stellar
/// subdivision of `S` otherwise.
pub fn shell_complex(s: &RelativeComplex, mode: ShellMode) -> Result<ShellingResult> {
    if s.ambient().is_empty() {
        return Err(Error::EmptyComplex);
    }
    shell_pieces(s, facet_filtration(s), mode)
}

/// h-shelling of a closed pseudo-manifold with a unique closed simplex and
/// at least one open simplex.
pub fn shell_pseudomanifold(k: &SimplicialComplex, mode: StellarMode) -> Result<ShellingResult> {
    if k.is_empty() {
        return Err(Error::EmptyComplex);
    }
    let p = k.predicates();
    if !(p.is_pure && p.is_strongly_connected && p.is_closed_pseudomanifold) {
        return Err(Error::NotPseudomanifold);
    }
    let s = RelativeComplex::closed(k.clone());
    let pieces = pieces_for(&adjacency_order(k), s.removed());
    shell_pieces(&s, pieces, ShellMode::Stellar(mode))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::tiling::{validate_shelling, validate_tiling};

    fn s<const N: usize>(v: [u32; N]) -> Simplex {
        Simplex::from(v)
    }

    fn assert_shelling(r: &ShellingResult) {
        let t = validate_tiling(&r.tiling);
        assert!(t.ok, "{:?}", t.violations);
        let sh = validate_shelling(&r.tiling);
        assert!(sh.ok, "{:?}", sh.violations);
    }

    #[test]
    fn filtration_examples() {
        let w = facet_filtration(&RelativeComplex::closed(generate::wedge_two_simplices(2)));
        assert_eq!(w[0], RelativeSimplex::closed(s([0, 1, 2])));
        assert_eq!(w[1].missing_faces(), &[s([2])]);
        let b = facet_filtration(&RelativeComplex::closed(generate::boundary(2).unwrap()));
        let missing: Vec<usize> = b.iter().map(|p| p.missing_faces().len()).collect();
        assert_eq!(missing, vec![0, 1, 2]);
        let d = facet_filtration(&RelativeComplex::closed(generate::disjoint_simplices(2, 2)));
        assert!(d.iter().all(|p| p.missing_faces().is_empty()));
    }

    #[test]
    fn example_split_in_one_step() {
        let t = MorseTile::morse(s([0, 1, 2, 3]), s([0]), s([0, 1]));
        for mode in [StellarMode::Facets, StellarMode::Ridges] {
            let r = h_tile_regular_morse(&t, mode).unwrap();
            assert_shelling(&r);
            assert_eq!(r.stats.num_subdivisions, 1);
            assert_eq!(r.tiling.tiles().len(), r.subdivision_log[0].face.len());
            assert_eq!(r.tiling.critical_indices(), vec![1, 2]);
        }
    }

    #[test]
    fn morse_edge_in_closed_tetrahedron() {
        let t = MorseTile::morse(s([0, 1, 2, 3]), Simplex::empty(), s([0, 1]));
        let r = h_tile_regular_morse(&t, StellarMode::Facets).unwrap();
        assert_shelling(&r);
        assert!(r.tiling.is_h_tiling());
        assert_eq!(r.stats.num_subdivisions, 2);
        assert_eq!(r.tiling.critical_indices(), vec![0, 1, 1, 2]);
    }

    #[test]
    fn basic_tile_has_nothing_to_convert() {
        let t = MorseTile::basic(s([0, 1, 2]), s([0]));
        assert!(matches!(h_tile_regular_morse(&t, StellarMode::Facets), Err(Error::NothingToDo(_))));
    }

    #[test]
    fn barycentric_triangles() {
        let closed = morse_shell_barycentric(&RelativeSimplex::closed(s([0, 1, 2]))).unwrap();
        assert_shelling(&closed);
        let orders: Vec<usize> = closed.tiling.tiles().iter().map(MorseTile::order).collect();
        assert_eq!(orders.len(), 6);
        assert_eq!(orders.iter().filter(|&&k| k == 0).count(), 1);
        assert!(!orders.contains(&3));
        let open = RelativeSimplex::new(s([0, 1, 2]), s([0, 1, 2]).ridges()).unwrap();
        let r = morse_shell_barycentric(&open).unwrap();
        assert_shelling(&r);
        let orders: Vec<usize> = r.tiling.tiles().iter().map(MorseTile::order).collect();
        assert_eq!(orders.iter().filter(|&&k| k == 3).count(), 1);
        assert!(!orders.contains(&0));
        let half = RelativeSimplex::new(s([0, 1]), [s([0])]).unwrap();
        let r = morse_shell_barycentric(&half).unwrap();
        assert_shelling(&r);
        let orders: Vec<usize> = r.tiling.tiles().iter().map(MorseTile::order).collect();
        assert_eq!(orders, vec![1, 1]);
    }

    #[test]
    fn two_missing_edges() {
        let p = RelativeSimplex::new(s([0, 1, 2, 3]), [s([0, 1]), s([2, 3])]).unwrap();
        for mode in [StellarMode::Facets, StellarMode::Ridges, StellarMode::Mixed] {
            let r = shell_relative_simplex(&p, mode).unwrap();
            assert_shelling(&r);
            assert!(r.tiling.is_h_tiling());
            assert!(r.measures.windows(2).all(|w| w[1] < w[0]), "{mode:?}: {:?}", r.measures);
            assert_eq!(replay(&p.as_relative_complex(), &r.subdivision_log).unwrap(), *r.complex());
        }
        let b = morse_shell_barycentric(&p).unwrap();
        assert_shelling(&b);
    }

    #[test]
    fn closed_simplex_needs_nothing() {
        let k = generate::simplex(3);
        let r = shell_complex(&RelativeComplex::closed(k), ShellMode::Stellar(StellarMode::Facets)).unwrap();
        assert_eq!(r.stats.num_subdivisions, 0);
        assert_eq!(r.tiling.tiles().len(), 1);
    }

    #[test]
    fn whole_complexes() {
        let inputs = [
            generate::boundary(3).unwrap(),
            generate::wedge_two_simplices(2),
            generate::boundary(4).unwrap(),
        ];
        let modes = [
            ShellMode::Barycentric,
            ShellMode::Stellar(StellarMode::Facets),
            ShellMode::Stellar(StellarMode::Ridges),
            ShellMode::Stellar(StellarMode::Mixed),
        ];
        for k in &inputs {
            let s = RelativeComplex::closed(k.clone());
            for mode in modes {
                let r = shell_complex(&s, mode).unwrap();
                assert_shelling(&r);
                if mode != ShellMode::Barycentric {
                    assert!(r.tiling.is_h_tiling());
                }
                let chi: i64 = r.stats.c_vector.iter().enumerate().map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) }).sum();
                assert_eq!(chi, s.euler_characteristic());
                assert_eq!(replay(&s, &r.subdivision_log).unwrap(), *r.complex());
            }
        }
    }

    #[test]
    fn pseudomanifold_shellings() {
        let r = shell_pseudomanifold(&generate::boundary(2).unwrap(), StellarMode::Facets).unwrap();
        assert_eq!(r.stats.c_vector, vec![1, 1]);
        assert_eq!(r.stats.h_vector, vec![1, 1, 1]);
        for n in 3..=4 {
            for mode in [StellarMode::Facets, StellarMode::Ridges, StellarMode::Mixed] {
                let r = shell_pseudomanifold(&generate::boundary(n).unwrap(), mode).unwrap();
                assert_shelling(&r);
                assert_eq!(r.stats.h_vector[0], 1);
                assert!(*r.stats.h_vector.last().unwrap() >= 1);
            }
        }
        assert_eq!(
            shell_pseudomanifold(&generate::wedge_two_simplices(2), StellarMode::Facets),
            Err(Error::NotPseudomanifold)
        );
    }
}
