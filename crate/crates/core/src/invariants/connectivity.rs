//! Vertex and edge connectivity through unit-capacity maximum flows (Menger).

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Connectivity {
    pub vertex: usize,
    pub edge: usize,
}

/// Dense residual network with breadth-first augmenting paths.
struct FlowNetwork {
    cap: Vec<Vec<i32>>,
}

impl FlowNetwork {
    fn new(size: usize) -> FlowNetwork {
        FlowNetwork { cap: vec![vec![0; size]; size] }
    }

    fn max_flow(&mut self, s: usize, t: usize) -> usize {
        let size = self.cap.len();
        let mut flow = 0;
        loop {
            let mut prev = vec![usize::MAX; size];
            prev[s] = s;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if u == t {
                    break;
                }
                for v in 0..size {
                    if prev[v] == usize::MAX && self.cap[u][v] > 0 {
                        prev[v] = u;
                        queue.push_back(v);
                    }
                }
            }
            if prev[t] == usize::MAX {
                return flow;
            }
            let mut v = t;
            while v != s {
                let u = prev[v];
                self.cap[u][v] -= 1;
                self.cap[v][u] += 1;
                v = u;
            }
            flow += 1;
        }
    }
}

/// Most internally disjoint `s`-`t` paths, `s` and `t` non-adjacent.
pub fn local_vertex_connectivity(g: &Graph, s: usize, t: usize) -> usize {
    let n = g.n();
    let inf = n as i32;
    // v_in = 2v, v_out = 2v + 1
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        net.cap[2 * v][2 * v + 1] = if v == s || v == t { inf } else { 1 };
        for u in Bits(g.neighbors(v)) {
            net.cap[2 * v + 1][2 * u] = inf;
        }
    }
    net.max_flow(2 * s + 1, 2 * t)
}

/// Most edge-disjoint `s`-`t` paths.
pub fn local_edge_connectivity(g: &Graph, s: usize, t: usize) -> usize {
    let mut net = FlowNetwork::new(g.n());
    for e in g.edges() {
        net.cap[e.u][e.v] = 1;
        net.cap[e.v][e.u] = 1;
    }
    net.max_flow(s, t)
}

/// `(kappa, lambda)`; `kappa(K_n) = n - 1`.
pub fn connectivity(g: &Graph) -> Result<Connectivity> {
    let n = g.n();
    if n < 2 {
        return Err(Error::Undefined("connectivity of a graph with fewer than two vertices"));
    }
    let mut vertex = n - 1;
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                vertex = vertex.min(local_vertex_connectivity(g, s, t));
            }
        }
    }
    let edge = (1..n).map(|t| local_edge_connectivity(g, 0, t)).min().expect("n >= 2");
    Ok(Connectivity { vertex, edge })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn examples() {
        assert_eq!(connectivity(&complete(5)).unwrap(), Connectivity { vertex: 4, edge: 4 });
        let bowtie = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(connectivity(&bowtie).unwrap(), Connectivity { vertex: 1, edge: 2 });
        assert_eq!(connectivity(&petersen()).unwrap(), Connectivity { vertex: 3, edge: 3 });
        assert_eq!(connectivity(&cycle(6)).unwrap(), Connectivity { vertex: 2, edge: 2 });
        assert_eq!(connectivity(&complete_bipartite(3, 4)).unwrap(), Connectivity { vertex: 3, edge: 3 });
        let two_k3 = complete(3).disjoint_union(&complete(3)).unwrap();
        assert_eq!(connectivity(&two_k3).unwrap(), Connectivity { vertex: 0, edge: 0 });
        assert_eq!(connectivity(&complete(2)).unwrap(), Connectivity { vertex: 1, edge: 1 });
        assert!(connectivity(&Graph::empty(1).unwrap()).is_err());
    }

    #[test]
    fn vertex_and_edge_connectivity_can_differ() {
        // two K4 glued at vertex 3
        let g = Graph::from_edges(
            7,
            [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)],
        )
        .unwrap();
        assert_eq!(connectivity(&g).unwrap(), Connectivity { vertex: 1, edge: 3 });
    }
}
