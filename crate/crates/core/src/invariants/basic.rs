//! Degrees, girth, distances, and the Euler condition.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};

/// A length that may be infinite (girth of a forest, distance across components).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Length {
    Finite(u32),
    Infinite,
}

impl Length {
    pub fn finite(self) -> Option<u32> {
        match self {
            Length::Finite(x) => Some(x),
            Length::Infinite => None,
        }
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(x) => write!(f, "{x}"),
            Length::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Length {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Length::Finite(x) => s.serialize_u32(*x),
            Length::Infinite => s.serialize_str("infinity"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub min: usize,
    pub max: usize,
    /// Degree multiset, sorted descending.
    pub sequence: Vec<usize>,
}

pub fn degree_stats(g: &Graph) -> Result<DegreeStats> {
    if g.n() == 0 {
        return Err(Error::Undefined("degree statistics of the empty graph"));
    }
    let mut sequence: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    sequence.sort_unstable_by(|a, b| b.cmp(a));
    Ok(DegreeStats { min: *sequence.last().expect("n >= 1"), max: sequence[0], sequence })
}

/// Breadth-first distances from `s`; `None` for unreachable vertices.
pub fn bfs_distances(g: &Graph, s: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; g.n()];
    dist[s] = Some(0);
    let mut seen = 1u32 << s;
    let mut frontier = seen;
    let mut d = 0;
    while frontier != 0 {
        d += 1;
        let mut next = 0u32;
        for v in Bits(frontier) {
            next |= g.neighbors(v);
        }
        next &= !seen;
        for v in Bits(next) {
            dist[v] = Some(d);
        }
        seen |= next;
        frontier = next;
    }
    dist
}

/// Length of a shortest cycle; [`Length::Infinite`] for forests.
pub fn girth(g: &Graph) -> Length {
    let n = g.n();
    let mut best = u32::MAX;
    for root in 0..n {
        let mut dist = vec![u32::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for w in Bits(g.neighbors(u)) {
                if dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == u32::MAX {
        Length::Infinite
    } else {
        Length::Finite(best)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Metric {
    pub diameter: Length,
    pub radius: Length,
    pub eccentricities: Vec<Length>,
}

/// Diameter, radius and eccentricities; everything is infinite on a
/// disconnected graph.
pub fn metric(g: &Graph) -> Metric {
    let eccentricities: Vec<Length> = (0..g.n())
        .map(|v| {
            bfs_distances(g, v)
                .iter()
                .try_fold(0u32, |m, d| d.map(|d| m.max(d)))
                .map_or(Length::Infinite, Length::Finite)
        })
        .collect();
    let diameter = eccentricities.iter().copied().max().unwrap_or(Length::Finite(0));
    let radius = eccentricities.iter().copied().min().unwrap_or(Length::Finite(0));
    Metric { diameter, radius, eccentricities }
}

/// All degrees even and all edges in one component.
pub fn is_eulerian(g: &Graph) -> bool {
    if (0..g.n()).any(|v| g.degree(v) % 2 == 1) {
        return false;
    }
    let non_isolated = g.components().into_iter().filter(|c| c.count_ones() > 1).count();
    non_isolated <= 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn degree_examples() {
        let d = degree_stats(&complete(4)).unwrap();
        assert_eq!((d.min, d.max, d.sequence), (3, 3, vec![3, 3, 3, 3]));
        let s = degree_stats(&star(4)).unwrap();
        assert_eq!((s.min, s.max, s.sequence), (1, 4, vec![4, 1, 1, 1, 1]));
        assert!(degree_stats(&Graph::empty(0).unwrap()).is_err());
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&cycle(5)), Length::Finite(5));
        assert_eq!(girth(&path(6)), Length::Infinite);
        assert_eq!(girth(&star(4)), Length::Infinite);
        assert_eq!(girth(&petersen()), Length::Finite(5));
        assert_eq!(girth(&complete_bipartite(3, 3)), Length::Finite(4));
        assert_eq!(girth(&complete(4)), Length::Finite(3));
    }

    #[test]
    fn metric_examples() {
        let m = metric(&path(3));
        assert_eq!(m.diameter, Length::Finite(2));
        assert_eq!(m.radius, Length::Finite(1));
        assert_eq!(m.eccentricities, vec![Length::Finite(2), Length::Finite(1), Length::Finite(2)]);
        let two_k2 = complete(2).disjoint_union(&complete(2)).unwrap();
        let m = metric(&two_k2);
        assert_eq!(m.diameter, Length::Infinite);
        assert_eq!(m.radius, Length::Infinite);
        assert!(m.eccentricities.iter().all(|&e| e == Length::Infinite));
        assert_eq!(metric(&petersen()).diameter, Length::Finite(2));
    }

    #[test]
    fn eulerian_examples() {
        assert!(is_eulerian(&cycle(5)));
        assert!(!is_eulerian(&complete(4)));
        let two_k3 = complete(3).disjoint_union(&complete(3)).unwrap();
        assert!(!is_eulerian(&two_k3));
        let c4_plus_isolated = cycle(4).disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        assert!(is_eulerian(&c4_plus_isolated));
    }

    #[test]
    fn length_serialises() {
        assert_eq!(serde_json::to_string(&Length::Finite(3)).unwrap(), "3");
        assert_eq!(serde_json::to_string(&Length::Infinite).unwrap(), "\"infinity\"");
        assert!(Length::Finite(100) < Length::Infinite);
    }
}
