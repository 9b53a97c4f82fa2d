//! Plain-text formats for complexes, tilings, subdivision logs and stats.
//!
//! Complex files hold one construct per line:
//!
//! ```text
//! # comment
//! facet 0 1 2
//! removed 0 1
//! ```
//!
//! A tiling file is a complex file followed by its tiles in shelling order:
//!
//! ```text
//! tile 0 1 2 ; opp 0 ; morse - ; critical 0
//! ```
//!
//! `-` stands for an empty `opp` list or an absent Morse face, `.` for an
//! empty Morse face (the closed simplex stored as critical of index 0).

use std::fmt::{self, Write as _};

use crate::complex::{RelativeComplex, Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::shelling::{ShellingStats, SubdivisionKind, SubdivisionStep};
use crate::tile::MorseTile;
use crate::tiling::{Tiling, ValidationReport};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn vertices(line: usize, words: &[&str]) -> Result<Simplex> {
    let ids = words
        .iter()
        .map(|w| w.parse::<u32>().map_err(|_| parse_err(line, format!("bad vertex id {w:?}"))))
        .collect::<Result<Vec<u32>>>()?;
    Simplex::new(ids).map_err(|e| parse_err(line, e.to_string()))
}

fn optional_vertices(line: usize, words: &[&str]) -> Result<Option<Simplex>> {
    match words {
        ["-"] => Ok(None),
        [] => Err(parse_err(line, "missing vertex list")),
        _ => vertices(line, words).map(Some),
    }
}

/// Splits content into numbered, comment-stripped, non-empty lines.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("");
        let words: Vec<&str> = l.split_whitespace().collect();
        (!words.is_empty()).then_some((i + 1, words))
    })
}

fn push_simplex(out: &mut String, keyword: &str, s: &Simplex) {
    out.push_str(keyword);
    for v in s.vertices() {
        let _ = write!(out, " {v}");
    }
    out.push('\n');
}

pub fn write_complex(s: &RelativeComplex) -> String {
    let mut out = String::new();
    let mut facets = s.ambient().facets().to_vec();
    facets.sort();
    for f in &facets {
        push_simplex(&mut out, "facet", f);
    }
    let mut removed = s.removed().facets().to_vec();
    removed.sort();
    for f in &removed {
        push_simplex(&mut out, "removed", f);
    }
    out
}

struct ComplexLines {
    facets: Vec<Simplex>,
    removed: Vec<Simplex>,
    first_line: usize,
}

impl ComplexLines {
    fn new() -> Self {
        ComplexLines {
            facets: Vec::new(),
            removed: Vec::new(),
            first_line: 0,
        }
    }

    fn accept(&mut self, line: usize, words: &[&str]) -> Result<bool> {
        let target = match words[0] {
            "facet" => &mut self.facets,
            "removed" => &mut self.removed,
            _ => return Ok(false),
        };
        if words.len() == 1 {
            return Err(parse_err(line, format!("{} needs at least one vertex", words[0])));
        }
        target.push(vertices(line, &words[1..])?);
        if self.first_line == 0 {
            self.first_line = line;
        }
        Ok(true)
    }

    fn finish(self) -> Result<RelativeComplex> {
        if self.facets.is_empty() {
            return Err(Error::EmptyComplex);
        }
        RelativeComplex::new(
            SimplicialComplex::from_facets(self.facets),
            SimplicialComplex::from_facets(self.removed),
        )
        .map_err(|e| parse_err(self.first_line, e.to_string()))
    }
}

pub fn parse_complex(text: &str) -> Result<RelativeComplex> {
    let mut c = ComplexLines::new();
    for (line, words) in lines(text) {
        if !c.accept(line, &words)? {
            return Err(parse_err(line, format!("unknown keyword {:?}", words[0])));
        }
    }
    c.finish()
}

fn write_tile(out: &mut String, t: &MorseTile) {
    push_simplex(out, "tile", t.facet());
    out.pop();
    let _ = write!(out, " ; opp");
    if t.removed_opposite().is_empty() {
        out.push_str(" -");
    }
    for v in t.removed_opposite().vertices() {
        let _ = write!(out, " {v}");
    }
    out.push_str(" ; morse");
    match t.morse_face() {
        None => out.push_str(" -"),
        Some(m) if m.is_empty() => out.push_str(" ."),
        Some(m) => {
            for v in m.vertices() {
                let _ = write!(out, " {v}");
            }
        }
    }
    let _ = writeln!(out, " ; critical {}", u8::from(t.critical_flag()));
}

pub fn write_tiling(t: &Tiling) -> String {
    let mut out = write_complex(t.target());
    for tile in t.tiles() {
        write_tile(&mut out, tile);
    }
    out
}

fn parse_tile(line: usize, words: &[&str]) -> Result<MorseTile> {
    let fields: Vec<&[&str]> = words[1..].split(|w| *w == ";").collect();
    let [facet, opp, morse, critical] = fields.as_slice() else {
        return Err(parse_err(line, "tile needs `facet ; opp .. ; morse .. ; critical ..`"));
    };
    let facet = vertices(line, facet)?;
    for (f, name) in [(opp, "opp"), (morse, "morse"), (critical, "critical")] {
        if f.first().copied() != Some(name) {
            return Err(parse_err(line, format!("expected `{name}`")));
        }
    }
    let removed = optional_vertices(line, &opp[1..])?.unwrap_or_else(Simplex::empty);
    let morse_face = match &morse[1..] {
        ["."] => Some(Simplex::empty()),
        rest => optional_vertices(line, rest)?,
    };
    let critical = match &critical[1..] {
        ["0"] => false,
        ["1"] => true,
        _ => return Err(parse_err(line, "critical must be 0 or 1")),
    };
    Ok(MorseTile::from_parts(facet, removed, morse_face, critical))
}

pub fn parse_tiling(text: &str) -> Result<Tiling> {
    let mut c = ComplexLines::new();
    let mut tiles = Vec::new();
    for (line, words) in lines(text) {
        if c.accept(line, &words)? {
            if !tiles.is_empty() {
                return Err(parse_err(line, "complex lines must precede tiles"));
            }
            continue;
        }
        match words[0] {
            "tile" => tiles.push(parse_tile(line, &words)?),
            other => return Err(parse_err(line, format!("unknown keyword {other:?}"))),
        }
    }
    Ok(Tiling::new(c.finish()?, tiles))
}

pub fn write_log(log: &[SubdivisionStep]) -> String {
    log.iter().map(|s| format!("{s}\n")).collect()
}

pub fn parse_log(text: &str) -> Result<Vec<SubdivisionStep>> {
    lines(text)
        .map(|(line, words)| {
            if words[0] != "subdivide" || words.len() < 2 {
                return Err(parse_err(line, "expected `subdivide <kind> v..`"));
            }
            let kind: SubdivisionKind = words[1].parse().map_err(|e: Error| parse_err(line, e.to_string()))?;
            let face = if kind == SubdivisionKind::Barycentric {
                Simplex::empty()
            } else {
                vertices(line, &words[2..])?
            };
            Ok(SubdivisionStep { face, kind })
        })
        .collect()
}

fn list<T: fmt::Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(T::to_string).collect();
    format!("[{}]", parts.join(", "))
}

pub fn write_stats(s: &ShellingStats) -> String {
    format!(
        "num_subdivisions = {}\nh_vector = {}\nc_vector = {}\neuler = {}\n",
        s.num_subdivisions,
        list(&s.h_vector),
        list(&s.c_vector),
        s.euler
    )
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ok = {}", self.ok)?;
        for v in &self.violations {
            let tile = v.tile_index.map_or_else(|| "-".to_string(), |i| i.to_string());
            writeln!(f, "violation {} face {} tile {}", v.kind.as_str(), v.witness_face, tile)?;
        }
        Ok(())
    }
}
