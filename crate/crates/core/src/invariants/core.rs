//! Homomorphic cores.
//!
//! A retract of `g` is an induced subgraph `H` with a homomorphism `g -> H`
//! fixing `H` pointwise. A smallest retract is the core. Candidate vertex
//! sets are tried by increasing size, starting at the clique number, since a
//! maximum clique maps injectively into any retract.

use serde::{Serialize, Serializer};

use crate::autgroup::{are_isomorphic, canonical_string};
use crate::graph::{named, Bits, Graph, VertexSet};
use crate::invariants::coloring::clique_number;

/// A core together with the retraction proving it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreResult {
    pub vertices: VertexSet,
    pub core: Graph,
    /// `retraction[v]` is the image of `v`; identity on `vertices`.
    pub retraction: Vec<usize>,
}

/// Core of `g`, unique up to isomorphism.
pub fn hom_core(g: &Graph) -> Graph {
    core_with_retraction(g).core
}

pub fn core_with_retraction(g: &Graph) -> CoreResult {
    let n = g.n();
    let full = g.vertices();
    if n == 0 {
        return CoreResult { vertices: full, core: *g, retraction: Vec::new() };
    }
    let order = search_order(g);
    for size in clique_number(g).max(1)..n {
        let mut found = None;
        for_each_subset(n, size, |subset| {
            if let Some(r) = retraction_onto(g, subset, &order) {
                found = Some((subset, r));
                true
            } else {
                false
            }
        });
        if let Some((subset, retraction)) = found {
            let vertices = VertexSet(subset);
            return CoreResult { vertices, core: g.induced_subgraph(vertices), retraction };
        }
    }
    CoreResult { vertices: full, core: *g, retraction: (0..n).collect() }
}

/// Vertices in breadth-first order from the highest degree vertex of each
/// component, so every assigned vertex after the first has an assigned neighbour.
fn search_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.n());
    let mut seen = 0u32;
    while order.len() < g.n() {
        let root = (0..g.n()).filter(|&v| seen >> v & 1 == 0).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)));
        let root = root.expect("unseen vertex remains");
        seen |= 1 << root;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for u in Bits(g.neighbors(v) & !seen) {
                seen |= 1 << u;
                queue.push_back(u);
            }
        }
    }
    order
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order until it returns true.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(u32) -> bool) {
    fn rec(n: usize, k: usize, start: usize, acc: u32, f: &mut dyn FnMut(u32) -> bool) -> bool {
        if k == 0 {
            return f(acc);
        }
        for v in start..=n - k {
            if rec(n, k - 1, v + 1, acc | 1 << v, f) {
                return true;
            }
        }
        false
    }
    rec(n, k, 0, 0, &mut f);
}

/// A homomorphism `g -> g[subset]` that is the identity on `subset`.
fn retraction_onto(g: &Graph, subset: u32, order: &[usize]) -> Option<Vec<usize>> {
    let n = g.n();
    let mut image = vec![usize::MAX; n];
    for v in Bits(subset) {
        // edges inside the subset are preserved trivially; an edge of g
        // between two subset vertices is an edge of the induced subgraph
        image[v] = v;
    }
    let rest: Vec<usize> = order.iter().copied().filter(|&v| subset >> v & 1 == 0).collect();
    fn assign(g: &Graph, subset: u32, rest: &[usize], i: usize, image: &mut [usize]) -> bool {
        let Some(&v) = rest.get(i) else {
            return true;
        };
        let mut cand = subset;
        for u in Bits(g.neighbors(v)) {
            if image[u] != usize::MAX {
                cand &= g.neighbors(image[u]);
            }
        }
        for t in Bits(cand) {
            image[v] = t;
            if assign(g, subset, rest, i + 1, image) {
                return true;
            }
        }
        image[v] = usize::MAX;
        false
    }
    if assign(g, subset, &rest, 0, &mut image) {
        Some(image)
    } else {
        None
    }
}

/// True when `map` sends every edge of `g` to an edge of `h`.
pub fn is_homomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    map.len() == g.n() && map.iter().all(|&x| x < h.n()) && g.edges().all(|e| h.has_edge(map[e.u], map[e.v]))
}

/// Which of the expected shapes a core has.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoreKind {
    K3,
    K4,
    /// The graph is its own core.
    SelfCore,
    /// Anything else, by canonical graph6 string.
    Other(String),
}

impl CoreKind {
    pub fn classify(g: &Graph, core: &Graph) -> CoreKind {
        if core.n() == g.n() {
            CoreKind::SelfCore
        } else if are_isomorphic(core, &named::complete(3)) {
            CoreKind::K3
        } else if are_isomorphic(core, &named::complete(4)) {
            CoreKind::K4
        } else {
            CoreKind::Other(canonical_string(core))
        }
    }
}

impl std::fmt::Display for CoreKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoreKind::K3 => write!(f, "K3"),
            CoreKind::K4 => write!(f, "K4"),
            CoreKind::SelfCore => write!(f, "SELF"),
            CoreKind::Other(s) => write!(f, "OTHER({s})"),
        }
    }
}

impl Serialize for CoreKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn check(g: &Graph) -> CoreResult {
        let r = core_with_retraction(g);
        assert!(is_homomorphism(g, &r.core, &reindex(&r)));
        assert!(r.vertices.iter().all(|v| r.retraction[v] == v));
        r
    }

    fn reindex(r: &CoreResult) -> Vec<usize> {
        let pos: Vec<usize> = r.vertices.iter().collect();
        r.retraction.iter().map(|&t| pos.iter().position(|&p| p == t).unwrap()).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(check(&cycle(4)).core, complete(2));
        assert_eq!(check(&cycle(5)).core, cycle(5));
        assert_eq!(check(&complete(4)).core, complete(4));
        assert_eq!(check(&petersen()).core.n(), 10);
        assert_eq!(check(&Graph::empty(3).unwrap()).core, Graph::empty(1).unwrap());
        assert_eq!(check(&Graph::empty(0).unwrap()).core.n(), 0);
    }

    #[test]
    fn bipartite_cores_are_edges() {
        for g in [complete_bipartite(3, 4), path(5), cycle(8), star(4)] {
            assert_eq!(check(&g).core, complete(2));
        }
    }

    #[test]
    fn odd_wheel_core() {
        // W5: hub joined to C5, chi = 4, a core
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, 5)));
        let w5 = Graph::from_edges(6, edges).unwrap();
        assert_eq!(check(&w5).core.n(), 6);
        // K4 with a pendant triangle retracts onto K4
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
        let r = check(&g);
        assert_eq!(CoreKind::classify(&g, &r.core), CoreKind::K4);
    }

    #[test]
    fn core_kind_labels() {
        assert_eq!(CoreKind::classify(&complete(4), &complete(4)), CoreKind::SelfCore);
        assert_eq!(CoreKind::SelfCore.to_string(), "SELF");
        assert_eq!(serde_json::to_string(&CoreKind::K3).unwrap(), "\"K3\"");
        assert!(matches!(CoreKind::classify(&cycle(4), &complete(2)), CoreKind::Other(_)));
    }
}
