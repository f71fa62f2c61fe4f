//! Vertex, edge, and distance transitivity.
//!
//! Orbits of a permutation group on any set it acts on are the connected
//! classes of the generators' action, so each test is a union-find over the
//! generators of the automorphism group.

use serde::Serialize;

use crate::autgroup::AutResult;
use crate::graph::Graph;
use crate::invariants::basic::bfs_distances;
use crate::perm::UnionFind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Transitivity {
    pub vertex: bool,
    pub edge: bool,
    pub distance: bool,
}

/// Transitivity flags of `g`, where `a` is its automorphism group.
///
/// An edgeless graph counts as edge transitive. Distance transitivity asks
/// for one orbit on ordered pairs at each distance, distance 0 included, with
/// unreachable pairs treated as one more distance.
pub fn transitivity(g: &Graph, a: &AutResult) -> Transitivity {
    let n = g.n();
    let vertex = a.vertex_orbits.len() <= 1;
    let edge = a.edge_orbits.len() <= 1;

    let dist: Vec<Vec<Option<u32>>> = (0..n).map(|v| bfs_distances(g, v)).collect();
    let mut uf = UnionFind::new(n * n);
    for p in &a.generators {
        for u in 0..n {
            for v in 0..n {
                uf.union(u * n + v, p.apply(u) * n + p.apply(v));
            }
        }
    }
    let mut class_of_distance: std::collections::BTreeMap<Option<u32>, usize> = Default::default();
    let mut distance = true;
    for u in 0..n {
        for v in 0..n {
            let root = uf.find(u * n + v);
            let expected = *class_of_distance.entry(dist[u][v]).or_insert(root);
            if expected != root {
                distance = false;
            }
        }
    }
    Transitivity { vertex, edge, distance }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgroup::automorphism_group;
    use crate::graph::named::*;

    fn flags(g: &Graph) -> Transitivity {
        transitivity(g, &automorphism_group(g))
    }

    #[test]
    fn examples() {
        assert_eq!(flags(&petersen()), Transitivity { vertex: true, edge: true, distance: true });
        assert_eq!(flags(&star(4)), Transitivity { vertex: false, edge: true, distance: false });
        assert_eq!(flags(&cycle(6)), Transitivity { vertex: true, edge: true, distance: true });
        assert_eq!(flags(&complete(4)), Transitivity { vertex: true, edge: true, distance: true });
        assert_eq!(flags(&path(4)), Transitivity { vertex: false, edge: false, distance: false });
    }

    #[test]
    fn vertex_transitive_but_not_distance_transitive() {
        // circular ladder C6 x K2 (prism): rungs and rim edges are not equivalent
        let mut edges = Vec::new();
        for i in 0..6 {
            edges.push((i, (i + 1) % 6));
            edges.push((6 + i, 6 + (i + 1) % 6));
            edges.push((i, i + 6));
        }
        let prism = Graph::from_edges(12, edges).unwrap();
        let t = flags(&prism);
        assert!(t.vertex);
        assert!(!t.edge);
        assert!(!t.distance);
    }
}
