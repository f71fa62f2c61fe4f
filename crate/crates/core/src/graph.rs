//! Small undirected simple graphs stored as one `u32` neighbourhood mask per vertex.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 32;

/// Unordered vertex pair, always stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalises the endpoint order. Panics on `a == b`.
    pub fn new(a: usize, b: usize) -> Edge {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u + 1, self.v + 1)
    }
}

/// A set of vertices, bit `v` set iff `v` is a member.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(pub u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        VertexSet(low_mask(n))
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> VertexSet {
        VertexSet(vs.into_iter().fold(0u32, |m, v| m | (1 << v)))
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u32);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub(crate) fn low_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Undirected simple graph on at most 32 vertices.
///
/// Row `v` of `adj` is the neighbourhood of `v`. Rows are symmetric, loop free,
/// and rows `>= n` as well as bits `>= n` are always zero, so derived equality
/// and hashing are structural.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u8,
    adj: [u32; MAX_VERTICES],
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}: ", self.n)?;
        let edges: Vec<String> = self.edges().map(|e| format!("{}-{}", e.u, e.v)).collect();
        write!(f, "{})", edges.join(" "))
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::SizeLimit(n));
        }
        Ok(Graph { n: n as u8, adj: [0; MAX_VERTICES] })
    }

    /// Builds a graph from an edge list; duplicates and reversed pairs collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({u},{v}) references a vertex outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::LoopRejected(u));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbourhood rows, validating every invariant.
    pub fn from_rows(rows: &[u32]) -> Result<Graph> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        let mask = low_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::InvalidInput(format!("row {v} has bits beyond n = {n}")));
            }
            if row >> v & 1 == 1 {
                return Err(Error::LoopRejected(v));
            }
            g.adj[v] = row;
        }
        for u in 0..n {
            for v in Bits(rows[u]) {
                if rows[v] >> u & 1 == 0 {
                    return Err(Error::InvalidInput(format!("rows {u} and {v} are not symmetric")));
                }
            }
        }
        Ok(g)
    }

    /// Trusted constructor for rows already known to be valid.
    pub(crate) fn from_rows_unchecked(n: usize, rows: &[u32]) -> Graph {
        debug_assert!(n <= MAX_VERTICES && rows.len() >= n);
        let mut adj = [0; MAX_VERTICES];
        adj[..n].copy_from_slice(&rows[..n]);
        Graph { n: n as u8, adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Neighbourhood mask of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u32 {
        self.adj[v]
    }

    #[inline]
    pub fn rows(&self) -> &[u32] {
        &self.adj[..self.n()]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges in lexicographic `(u, v)` order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n()).flat_map(move |u| {
            Bits(self.adj[u] & !low_mask(u + 1)).map(move |v| Edge { u, v })
        })
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Graph on the same vertices with exactly the missing pairs as edges.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mask = low_mask(n);
        let mut adj = [0; MAX_VERTICES];
        for v in 0..n {
            adj[v] = !self.adj[v] & mask & !(1 << v);
        }
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `s`, vertices renumbered by increasing original index.
    pub fn induced_subgraph(&self, s: VertexSet) -> Graph {
        let keep: Vec<usize> = s.iter().filter(|&v| v < self.n()).collect();
        let mut rows = vec![0u32; keep.len()];
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                if self.has_edge(u, v) {
                    rows[i] |= 1 << j;
                }
            }
        }
        Graph::from_rows_unchecked(keep.len(), &rows)
    }

    /// Graph with edge `(p(u), p(v))` for every edge `(u, v)`.
    pub fn relabel(&self, p: &Permutation) -> Result<Graph> {
        if p.len() != self.n() {
            return Err(Error::InvalidInput(format!(
                "permutation of degree {} applied to a graph on {} vertices",
                p.len(),
                self.n()
            )));
        }
        Ok(self.relabel_by(p.images()))
    }

    /// Relabeling by a raw image slice; `img` must be a bijection of `0..n`.
    #[inline]
    pub(crate) fn relabel_by(&self, img: &[usize]) -> Graph {
        let mut adj = [0; MAX_VERTICES];
        for u in 0..self.n() {
            let mut row = 0u32;
            for v in Bits(self.adj[u]) {
                row |= 1 << img[v];
            }
            adj[img[u]] = row;
        }
        Graph { n: self.n, adj }
    }

    /// True when `p` maps the edge set onto itself.
    pub fn is_automorphism(&self, img: &[usize]) -> bool {
        img.len() == self.n() && self.relabel_by(img) == *self
    }

    /// Disjoint union, vertices of `other` shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n() + other.n();
        let mut g = Graph::empty(n)?;
        g.adj[..self.n()].copy_from_slice(self.rows());
        for v in 0..other.n() {
            g.adj[self.n() + v] = other.adj[v] << self.n();
        }
        Ok(g)
    }

    /// Connected components as vertex masks, ordered by their least vertex.
    pub fn components(&self) -> Vec<u32> {
        let mut seen = 0u32;
        let mut out = Vec::new();
        for v in 0..self.n() {
            if seen >> v & 1 == 1 {
                continue;
            }
            let comp = self.reach(v, self.vertices().0);
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start` inside `within`.
    pub(crate) fn reach(&self, start: usize, within: u32) -> u32 {
        let mut comp = 1u32 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0u32;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.reach(0, self.vertices().0) == self.vertices().0
    }
}

/// Frequently used named graphs.
pub mod named {
    use super::*;

    pub fn complete(n: usize) -> Graph {
        let mask = low_mask(n);
        let rows: Vec<u32> = (0..n).map(|v| mask & !(1 << v)).collect();
        Graph::from_rows_unchecked(n, &rows)
    }

    pub fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle needs n >= 3")
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path within size limit")
    }

    /// `K_{1,k}` with the centre at vertex 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star within size limit")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Graph::from_edges(a + b, edges).expect("bipartite within size limit")
    }

    /// Outer 5-cycle 0..4, spokes `i - (i+5)`, inner pentagram on 5..9.
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, edges).expect("petersen")
    }
}
