//! Standard example complexes.

use std::str::FromStr;

use crate::complex::{Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};

/// Named generators that take only integer parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    /// The closed n-simplex.
    Simplex,
    /// The boundary of the n-simplex, a sphere of dimension n-1.
    Boundary,
    /// Two n-simplices sharing a single vertex.
    WedgeTwoSimplices,
    /// `count` pairwise disjoint n-simplices.
    DisjointSimplices,
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "simplex" => Ok(Generator::Simplex),
            "boundary" => Ok(Generator::Boundary),
            "wedge" | "wedge_two_simplices" => Ok(Generator::WedgeTwoSimplices),
            "disjoint" | "disjoint_simplices" => Ok(Generator::DisjointSimplices),
            other => Err(Error::UnsupportedGenerator(other.to_string())),
        }
    }
}

pub fn generate(name: Generator, n: u32, count: u32) -> Result<SimplicialComplex> {
    Ok(match name {
        Generator::Simplex => simplex(n),
        Generator::Boundary => boundary(n)?,
        Generator::WedgeTwoSimplices => wedge_two_simplices(n),
        Generator::DisjointSimplices => disjoint_simplices(n, count),
    })
}

pub fn simplex(n: u32) -> SimplicialComplex {
    SimplicialComplex::from_facets([Simplex::from_set(0..=n)])
}

pub fn boundary(n: u32) -> Result<SimplicialComplex> {
    if n == 0 {
        return Err(Error::InvalidInput("the boundary of a point is empty".into()));
    }
    Ok(SimplicialComplex::from_facets(Simplex::from_set(0..=n).ridges()))
}

pub fn wedge_two_simplices(n: u32) -> SimplicialComplex {
    SimplicialComplex::from_facets([Simplex::from_set(0..=n), Simplex::from_set(n..=2 * n)])
}

pub fn disjoint_simplices(n: u32, count: u32) -> SimplicialComplex {
    SimplicialComplex::from_facets(
        (0..count).map(|i| Simplex::from_set(i * (n + 1)..=i * (n + 1) + n)),
    )
}

/// Cone with a fresh apex.
pub fn cone(k: &SimplicialComplex) -> SimplicialComplex {
    let apex = k.fresh_vertex();
    SimplicialComplex::from_facets(k.facets().iter().map(|f| f.with(apex)))
}

/// Join; the second complex is relabelled above the first.
pub fn join(a: &SimplicialComplex, b: &SimplicialComplex) -> SimplicialComplex {
    let offset: VertexId = a.fresh_vertex();
    let mut facets = Vec::new();
    for fa in a.facets() {
        for fb in b.facets() {
            facets.push(fa.union(&Simplex::from_set(fb.vertices().iter().map(|v| v + offset))));
        }
    }
    SimplicialComplex::from_facets(facets)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let b2 = boundary(2).unwrap();
        assert_eq!(crate::complex::RelativeComplex::closed(b2.clone()).f_vector(), vec![3, 3]);
        assert_eq!(wedge_two_simplices(2).euler_characteristic(), 1);
        let point = simplex(0);
        let c = join(&point, &b2);
        assert_eq!(c.euler_characteristic(), 1);
        assert_eq!(c.facets().len(), 3);
        let cb = cone(&b2);
        assert_eq!(cb.facets().len(), 3);
        assert_eq!(cb.euler_characteristic(), 1);
        assert!(cb.facets().iter().all(|f| f.contains(3)));
        assert_eq!(disjoint_simplices(2, 3).facets().len(), 3);
        assert!("pyramid".parse::<Generator>().is_err());
        assert!(boundary(0).is_err());
    }
}
