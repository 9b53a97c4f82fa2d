//! Exhaustive oracles for tiny complexes: every h-tiling, shellability of a
//! given tiling, minimal numbers of critical tiles, and a cross-check of
//! the constructive shellings against them.
//!
//! Results here are exact only for the inputs they are run on; they say
//! nothing about asymptotic quantities.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use crate::complex::{RelativeComplex, Simplex};
use crate::error::{Error, Result};
use crate::shelling::{shell_complex, ShellMode, StellarMode};
use crate::tile::MorseTile;
use crate::tiling::{validate_shelling, validate_tiling, Tiling};
use crate::vectors::compute_vectors;

pub const MAX_FACETS: usize = 12;
pub const MAX_DIM: isize = 3;

fn guard(s: &RelativeComplex) -> Result<()> {
    let facets = s.ambient().facets().len();
    if facets > MAX_FACETS {
        return Err(Error::Guardrail(format!("{facets} facets, at most {MAX_FACETS} allowed")));
    }
    if s.dim() > MAX_DIM {
        return Err(Error::Guardrail(format!("dimension {}, at most {MAX_DIM} allowed", s.dim())));
    }
    Ok(())
}

/// Every basic tile on `facet` followed by the critical tiles that are not
/// already basic (indices 1 to n-1).
pub fn tile_choices(facet: &Simplex) -> Vec<MorseTile> {
    let mut out: Vec<MorseTile> = facet
        .subsets()
        .into_iter()
        .map(|r| MorseTile::basic(facet.clone(), r))
        .collect();
    let n = facet.len() - 1;
    for r in facet.subsets() {
        if (1..n).contains(&r.len()) {
            out.push(MorseTile::critical(facet.clone(), r));
        }
    }
    out
}

/// All h-tilings of `s`, one tile per facet in facet order, up to `limit`.
pub fn enumerate_h_tilings(s: &RelativeComplex, limit: Option<usize>) -> Result<Vec<Tiling>> {
    guard(s)?;
    let facets = s.ambient().facets().to_vec();
    let choices: Vec<Vec<(MorseTile, Vec<Simplex>)>> = facets
        .iter()
        .map(|f| {
            tile_choices(f)
                .into_iter()
                .map(|t| {
                    let faces = t.faces();
                    (t, faces)
                })
                .filter(|(_, faces)| faces.iter().all(|x| s.contains(x)))
                .collect()
        })
        .collect();
    let total = s.faces().len();
    let mut out = Vec::new();
    let mut picked = Vec::with_capacity(facets.len());
    let mut covered = HashSet::new();
    enumerate_rec(s, &choices, total, limit, &mut picked, &mut covered, &mut out);
    Ok(out)
}

fn enumerate_rec(
    s: &RelativeComplex,
    choices: &[Vec<(MorseTile, Vec<Simplex>)>],
    total: usize,
    limit: Option<usize>,
    picked: &mut Vec<MorseTile>,
    covered: &mut HashSet<Simplex>,
    out: &mut Vec<Tiling>,
) {
    if limit.is_some_and(|l| out.len() >= l) {
        return;
    }
    let i = picked.len();
    if i == choices.len() {
        if covered.len() == total {
            let t = Tiling::new(s.clone(), picked.clone());
            if validate_tiling(&t).ok {
                out.push(t);
            }
        }
        return;
    }
    for (tile, faces) in &choices[i] {
        if faces.iter().any(|f| covered.contains(f)) {
            continue;
        }
        covered.extend(faces.iter().cloned());
        picked.push(tile.clone());
        enumerate_rec(s, choices, total, limit, picked, covered, out);
        picked.pop();
        for f in faces {
            covered.remove(f);
        }
    }
}

/// A permutation of the tiles whose prefixes are all closed, if one exists.
pub fn shelling_order(t: &Tiling) -> Option<Vec<usize>> {
    let n = t.tiles().len();
    if n > 63 {
        return None;
    }
    let faces: Vec<Vec<Simplex>> = t.tiles().iter().map(MorseTile::faces).collect();
    let mut dead = HashSet::new();
    let mut order = Vec::with_capacity(n);
    let mut union = HashSet::new();
    if order_rec(t, &faces, 0, &mut union, &mut order, &mut dead) {
        Some(order)
    } else {
        None
    }
}

fn order_rec(
    t: &Tiling,
    faces: &[Vec<Simplex>],
    mask: u64,
    union: &mut HashSet<Simplex>,
    order: &mut Vec<usize>,
    dead: &mut HashSet<u64>,
) -> bool {
    if order.len() == faces.len() {
        return true;
    }
    if dead.contains(&mask) {
        return false;
    }
    for i in 0..faces.len() {
        if mask & (1 << i) != 0 {
            continue;
        }
        let own: HashSet<&Simplex> = faces[i].iter().collect();
        let placeable = faces[i].iter().all(|f| {
            f.ridges()
                .iter()
                .all(|r| !t.target().contains(r) || union.contains(r) || own.contains(r))
        });
        if !placeable {
            continue;
        }
        union.extend(faces[i].iter().cloned());
        order.push(i);
        if order_rec(t, faces, mask | (1 << i), union, order, dead) {
            return true;
        }
        order.pop();
        for f in &faces[i] {
            union.remove(f);
        }
    }
    dead.insert(mask);
    false
}

pub fn is_shellable(t: &Tiling) -> bool {
    shelling_order(t).is_some()
}

/// The h-tile formed by the faces of `facet` outside `covered`, if those
/// faces form one.
fn tile_of_new_faces(facet: &Simplex, new: &[Simplex]) -> Option<MorseTile> {
    let first = new.first()?;
    let meet = new.iter().skip(1).fold(first.clone(), |acc, f| acc.intersection(f));
    let free = (facet.len() - meet.len()) as u32;
    let interval = if meet.is_empty() { (1usize << free) - 1 } else { 1usize << free };
    let n = facet.len() - 1;
    if new.len() == interval {
        return Some(MorseTile::basic(facet.clone(), meet));
    }
    if !meet.is_empty() && free >= 2 && new.len() + 1 == interval && (1..n).contains(&meet.len()) {
        return Some(MorseTile::critical(facet.clone(), meet));
    }
    None
}

/// Exact minimum of `cost` summed over the tiles of a shelled h-tiling of
/// `s`, or `None` when `s` has no shelled h-tiling. Facets are added in
/// non-increasing dimension.
pub fn min_over_shellings(s: &RelativeComplex, cost: impl Fn(&MorseTile) -> usize) -> Result<Option<(usize, Tiling)>> {
    guard(s)?;
    let facets = s.ambient().facets().to_vec();
    let member: Vec<Vec<Simplex>> = facets
        .iter()
        .map(|f| f.faces().into_iter().filter(|x| s.contains(x)).collect())
        .collect();
    let full = (1u32 << facets.len()) - 1;
    let mut memo: HashMap<u32, Option<(usize, usize, MorseTile)>> = HashMap::new();
    best_rec(&facets, &member, &cost, 0, full, &mut memo);
    let Some(Some((value, _, _))) = memo.get(&0).cloned() else {
        return Ok(None);
    };
    let mut tiles = Vec::new();
    let mut mask = 0u32;
    while mask != full {
        let (_, i, tile) = memo[&mask].clone().expect("optimal path");
        tiles.push(tile);
        mask |= 1 << i;
    }
    Ok(Some((value, Tiling::new(s.clone(), tiles))))
}

fn best_rec(
    facets: &[Simplex],
    member: &[Vec<Simplex>],
    cost: &impl Fn(&MorseTile) -> usize,
    mask: u32,
    full: u32,
    memo: &mut HashMap<u32, Option<(usize, usize, MorseTile)>>,
) -> Option<usize> {
    if mask == full {
        return Some(0);
    }
    if let Some(v) = memo.get(&mask) {
        return v.as_ref().map(|x| x.0);
    }
    let placed: Vec<usize> = (0..facets.len()).filter(|&i| mask & (1 << i) != 0).collect();
    let floor_dim = placed.iter().map(|&i| facets[i].len()).min().unwrap_or(usize::MAX);
    let covered: HashSet<&Simplex> = placed.iter().flat_map(|&i| member[i].iter()).collect();
    let mut best: Option<(usize, usize, MorseTile)> = None;
    for i in 0..facets.len() {
        if mask & (1 << i) != 0 || facets[i].len() > floor_dim {
            continue;
        }
        let new: Vec<Simplex> = member[i].iter().filter(|f| !covered.contains(f)).cloned().collect();
        let Some(tile) = tile_of_new_faces(&facets[i], &new) else {
            continue;
        };
        if let Some(rest) = best_rec(facets, member, cost, mask | (1 << i), full, memo) {
            let total = rest + cost(&tile);
            if best.as_ref().map_or(true, |b| total < b.0) {
                best = Some((total, i, tile));
            }
        }
    }
    let value = best.as_ref().map(|b| b.0);
    memo.insert(mask, best);
    value
}

fn is_critical(t: &MorseTile) -> usize {
    usize::from(t.critical_index().is_some())
}

/// Minimal number of critical tiles over h-tilings of `s` (shelled ones
/// when `require_shellable`), or `None` when there are none.
pub fn min_critical_tiles(s: &RelativeComplex, require_shellable: bool) -> Result<Option<usize>> {
    if require_shellable {
        return Ok(min_over_shellings(s, is_critical)?.map(|(v, _)| v));
    }
    Ok(enumerate_h_tilings(s, None)?
        .iter()
        .map(|t| t.tiles().iter().map(is_critical).sum())
        .min())
}

/// Fewest closed simplices in a shelled h-tiling of `s`.
pub fn min_closed_simplices(s: &RelativeComplex) -> Result<Option<usize>> {
    Ok(min_over_shellings(s, |t| usize::from(t.critical_index() == Some(0)))?.map(|(v, _)| v))
}

fn face_partition(t: &Tiling) -> Vec<Vec<Simplex>> {
    let mut parts: Vec<Vec<Simplex>> = t.tiles().iter().map(MorseTile::faces).collect();
    parts.sort();
    parts
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub tilings: usize,
    pub critical_free: usize,
    pub shellable: usize,
    pub euler_ok: bool,
    /// `None` when the target is not pure.
    pub c_determines_h: Option<bool>,
    pub constructive_valid: bool,
    /// `None` when the constructive shelling had to subdivide.
    pub constructive_found: Option<bool>,
    pub mu_prime: Option<usize>,
    pub mu: Option<usize>,
    /// Shellable minimum computed two ways agrees.
    pub mu_agrees: bool,
    pub min_closed: Option<usize>,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.euler_ok
            && self.c_determines_h != Some(false)
            && self.constructive_valid
            && self.constructive_found != Some(false)
            && self.mu_agrees
    }
}

fn opt(v: Option<impl fmt::Display>) -> String {
    v.map_or_else(|| "none".to_string(), |x| x.to_string())
}

fn opt_bool(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "pass",
        Some(false) => "fail",
        None => "n/a",
    }
}

impl fmt::Display for CrossCheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "tilings = {}", self.tilings)?;
        writeln!(f, "critical_free = {}", self.critical_free)?;
        writeln!(f, "shellable = {}", self.shellable)?;
        writeln!(f, "euler = {} (partial evidence)", opt_bool(Some(self.euler_ok)))?;
        writeln!(f, "c_determines_h = {}", opt_bool(self.c_determines_h))?;
        writeln!(f, "constructive_valid = {}", opt_bool(Some(self.constructive_valid)))?;
        writeln!(f, "constructive_found = {}", opt_bool(self.constructive_found))?;
        writeln!(f, "mu_prime = {}", opt(self.mu_prime))?;
        writeln!(f, "mu = {}", opt(self.mu))?;
        writeln!(f, "mu_agrees = {}", opt_bool(Some(self.mu_agrees)))?;
        writeln!(f, "min_closed = {} (exhaustive at this size only)", opt(self.min_closed))?;
        writeln!(f, "result = {}", if self.passed() { "pass" } else { "fail" })
    }
}

/// Compares the constructive shelling and the Euler and h/c relations with
/// exhaustive enumeration.
pub fn cross_check(s: &RelativeComplex) -> Result<CrossCheckReport> {
    let tilings = enumerate_h_tilings(s, None)?;
    let chi = s.euler_characteristic();
    let mut euler_ok = true;
    let mut c_to_h: BTreeMap<Vec<i64>, Vec<i64>> = BTreeMap::new();
    let mut c_determines_h = s.is_pure().then_some(true);
    let mut shellable_counts = Vec::new();
    for t in &tilings {
        let crit: Vec<usize> = t.critical_indices();
        let alt: i64 = crit.iter().map(|&k| if k % 2 == 0 { 1 } else { -1 }).sum();
        euler_ok &= alt == chi;
        if let Some(ok) = c_determines_h.as_mut() {
            let v = compute_vectors(t)?;
            let h = c_to_h.entry(v.c.clone()).or_insert_with(|| v.h.clone());
            *ok &= *h == v.h;
        }
        if is_shellable(t) {
            shellable_counts.push(crit.len());
        }
    }
    let constructive = shell_complex(s, ShellMode::Stellar(StellarMode::Facets))?;
    let constructive_valid = validate_tiling(&constructive.tiling).ok && validate_shelling(&constructive.tiling).ok;
    let constructive_found = (constructive.stats.num_subdivisions == 0).then(|| {
        let mine = face_partition(&constructive.tiling);
        tilings.iter().any(|t| face_partition(t) == mine)
    });
    let mu = min_critical_tiles(s, true)?;
    let critical_free = tilings.iter().filter(|t| t.critical_indices().is_empty()).count();
    Ok(CrossCheckReport {
        tilings: tilings.len(),
        critical_free,
        shellable: shellable_counts.len(),
        euler_ok,
        c_determines_h,
        constructive_valid,
        constructive_found,
        mu_prime: tilings.iter().map(|t| t.critical_indices().len()).min(),
        mu,
        mu_agrees: mu == shellable_counts.iter().copied().min(),
        min_closed: min_closed_simplices(s)?,
    })
}
