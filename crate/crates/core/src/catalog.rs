//! Named cubic cages stored as canonical edge lists, and the point/line
//! incidence graph of the projective plane over a prime field.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{moore_bound, Graph, MooreBoundQuery, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog graph `{name}`; valid names: {}", valid.join(", "))]
    Unknown { name: String, valid: Vec<String> },
    #[error("catalog entry `{name}` failed verification: {reason}")]
    Corrupt { name: String, reason: String },
    #[error("{0} is not prime")]
    NotPrime(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub degree: usize,
    pub girth: usize,
    pub order: usize,
    pub moore_extremal: bool,
    #[serde(skip)]
    edge_list: &'static str,
}

const ENTRIES: [CatalogEntry; 6] = [
    CatalogEntry {
        name: "petersen",
        degree: 3,
        girth: 5,
        order: 10,
        moore_extremal: true,
        edge_list: include_str!("../data/petersen.txt"),
    },
    CatalogEntry {
        name: "heawood",
        degree: 3,
        girth: 6,
        order: 14,
        moore_extremal: true,
        edge_list: include_str!("../data/heawood.txt"),
    },
    CatalogEntry {
        name: "mcgee",
        degree: 3,
        girth: 7,
        order: 24,
        moore_extremal: false,
        edge_list: include_str!("../data/mcgee.txt"),
    },
    CatalogEntry {
        name: "tutte-coxeter",
        degree: 3,
        girth: 8,
        order: 30,
        moore_extremal: true,
        edge_list: include_str!("../data/tutte-coxeter.txt"),
    },
    CatalogEntry {
        name: "balaban-10-cage",
        degree: 3,
        girth: 10,
        order: 70,
        moore_extremal: false,
        edge_list: include_str!("../data/balaban-10-cage.txt"),
    },
    CatalogEntry {
        name: "tutte-12-cage",
        degree: 3,
        girth: 12,
        order: 126,
        moore_extremal: true,
        edge_list: include_str!("../data/tutte-12-cage.txt"),
    },
];

pub fn list_entries() -> &'static [CatalogEntry] {
    &ENTRIES
}

pub fn entry(name: &str) -> Result<&'static CatalogEntry, CatalogError> {
    ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| CatalogError::Unknown {
            name: name.to_string(),
            valid: ENTRIES.iter().map(|e| e.name.to_string()).collect(),
        })
}

/// Builds the named graph, re-checking order, regularity, girth and
/// connectivity against the entry before handing it out.
pub fn build(name: &str) -> Result<Graph, CatalogError> {
    let e = entry(name)?;
    let g = Graph::parse_edge_list(e.edge_list).map_err(|err| CatalogError::Corrupt {
        name: e.name.into(),
        reason: err.to_string(),
    })?;
    e.verify(&g)?;
    Ok(g)
}

impl CatalogEntry {
    pub fn moore_bound(&self) -> u128 {
        moore_bound(
            MooreBoundQuery::new(self.degree as u64, self.girth as u64)
                .expect("catalog degrees and girths are in range"),
        )
    }

    fn verify(&self, g: &Graph) -> Result<(), CatalogError> {
        let fail = |reason: String| {
            Err(CatalogError::Corrupt {
                name: self.name.into(),
                reason,
            })
        };
        if g.n() != self.order {
            return fail(format!("order {} != {}", g.n(), self.order));
        }
        if g.is_regular() != Some(self.degree) {
            return fail(format!("not {}-regular", self.degree));
        }
        if g.girth() != Some(self.girth) {
            return fail(format!("girth {:?} != {}", g.girth(), self.girth));
        }
        if !g.is_connected() {
            return fail("disconnected".into());
        }
        if (self.moore_bound() == self.order as u128) != self.moore_extremal {
            return fail("Moore-extremal flag disagrees with the bound".into());
        }
        Ok(())
    }
}

pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    (2..).take_while(|i| i * i <= q).all(|i| !q.is_multiple_of(i))
}

/// Canonical representatives of the 1-dimensional subspaces of GF(q)^3:
/// the first nonzero coordinate is 1.
fn projective_points(q: u64) -> Vec<[u64; 3]> {
    let mut pts = Vec::new();
    for a in 0..q {
        for b in 0..q {
            pts.push([1, a, b]);
        }
    }
    for b in 0..q {
        pts.push([0, 1, b]);
    }
    pts.push([0, 0, 1]);
    pts
}

/// Bipartite point/line incidence graph of PG(2, q) for prime `q`.
///
/// Vertices `0..q²+q+1` are points, the rest are lines; a point `p` lies on
/// the line `l` when `p · l ≡ 0 (mod q)`.
pub fn projective_plane_incidence(q: u64) -> Result<Graph, CatalogError> {
    if !is_prime(q) {
        return Err(CatalogError::NotPrime(q));
    }
    let pts = projective_points(q);
    let count = pts.len();
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        for (j, l) in pts.iter().enumerate() {
            let dot = (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q;
            if dot == 0 {
                edges.push((i, count + j));
            }
        }
    }
    Ok(Graph::from_edges(2 * count, &edges).expect("incidence edges are simple"))
}

/// Number of lines through each pair of points; used to check the plane
/// axiom on generated incidence graphs.
pub fn common_line_counts(g: &Graph, points: usize) -> BTreeMap<(Vertex, Vertex), usize> {
    let mut counts = BTreeMap::new();
    for a in 0..points {
        for b in a + 1..points {
            let shared = g
                .neighbors(a)
                .iter()
                .filter(|l| g.neighbors(b).binary_search(l).is_ok())
                .count();
            counts.insert((a, b), shared);
        }
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries_verify() {
        for e in list_entries() {
            let g = build(e.name).unwrap();
            assert_eq!(g.n(), e.order);
            assert!(e.moore_bound() <= e.order as u128);
        }
    }

    #[test]
    fn required_entries_present() {
        let want = [
            ("petersen", 3, 5, 10),
            ("heawood", 3, 6, 14),
            ("mcgee", 3, 7, 24),
            ("tutte-coxeter", 3, 8, 30),
            ("balaban-10-cage", 3, 10, 70),
            ("tutte-12-cage", 3, 12, 126),
        ];
        let got: Vec<_> = list_entries()
            .iter()
            .map(|e| (e.name, e.degree, e.girth, e.order))
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn mcgee_and_heawood() {
        let g = build("mcgee").unwrap();
        assert_eq!((g.n(), g.m(), g.girth()), (24, 36, Some(7)));
        let h = build("heawood").unwrap();
        assert!(h.is_bipartite());
        assert_eq!(h.girth(), Some(6));
        assert!(!build("petersen").unwrap().is_bipartite());
    }

    #[test]
    fn unknown_name_lists_valid_ones() {
        let err = build("nonsense").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("petersen") && msg.contains("tutte-12-cage"), "{msg}");
    }

    #[test]
    fn plane_generator() {
        let fano = projective_plane_incidence(2).unwrap();
        assert_eq!((fano.n(), fano.is_regular(), fano.girth()), (14, Some(3), Some(6)));
        assert!(fano.is_bipartite() && fano.is_connected());
        let p3 = projective_plane_incidence(3).unwrap();
        assert_eq!((p3.n(), p3.is_regular(), p3.girth()), (26, Some(4), Some(6)));
        assert_eq!(projective_plane_incidence(4), Err(CatalogError::NotPrime(4)));
        assert_eq!(projective_plane_incidence(1), Err(CatalogError::NotPrime(1)));
    }

    #[test]
    fn plane_axiom_two_points_one_line() {
        for q in [2, 3, 5, 7] {
            let g = projective_plane_incidence(q).unwrap();
            let points = (q * q + q + 1) as usize;
            assert!(common_line_counts(&g, points).values().all(|&c| c == 1), "q={q}");
            // dual axiom
            let lines: Vec<_> = (points..2 * points).collect();
            for (i, &a) in lines.iter().enumerate() {
                for &b in &lines[i + 1..] {
                    let shared = g
                        .neighbors(a)
                        .iter()
                        .filter(|p| g.neighbors(b).contains(p))
                        .count();
                    assert_eq!(shared, 1);
                }
            }
        }
    }

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&q| is_prime(q)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
