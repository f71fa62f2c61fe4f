//! Automorphism groups, canonical labeling, and isomorphism testing.
//!
//! The engine is the usual individualization-refinement search. Every node of
//! the search tree carries an equitable ordered partition. A leaf (discrete
//! partition) is a labeling, and two leaves giving the same relabeled graph
//! differ by an automorphism. Children of a node that lie in one orbit of the
//! automorphisms found so far fixing the node's path are explored once.
//! When a leaf matches the first or the best leaf, the search jumps back to
//! where the two paths diverge. Everything below that point is the image of a
//! subtree already explored.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{low_mask, Bits, Edge, Graph};
use crate::graph6;
use crate::perm::{group_order, vertex_orbits, Permutation, UnionFind};

/// Ordered list of disjoint nonempty cells covering `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderedPartition {
    pub cells: Vec<Vec<usize>>,
}

impl OrderedPartition {
    pub fn unit(n: usize) -> OrderedPartition {
        OrderedPartition { cells: if n == 0 { vec![] } else { vec![(0..n).collect()] } }
    }

    pub fn discrete(order: &[usize]) -> OrderedPartition {
        OrderedPartition { cells: order.iter().map(|&v| vec![v]).collect() }
    }

    pub fn is_discrete(&self) -> bool {
        self.cells.iter().all(|c| c.len() == 1)
    }

    fn to_masks(&self, n: usize) -> Result<Vec<u32>> {
        let mut seen = 0u32;
        let mut masks = Vec::with_capacity(self.cells.len());
        for cell in &self.cells {
            if cell.is_empty() {
                return Err(Error::InvalidInput("empty cell in ordered partition".into()));
            }
            let mut m = 0u32;
            for &v in cell {
                if v >= n || (seen | m) >> v & 1 == 1 {
                    return Err(Error::InvalidInput(format!("vertex {v} invalid or repeated in partition")));
                }
                m |= 1 << v;
            }
            seen |= m;
            masks.push(m);
        }
        if seen != low_mask(n) {
            return Err(Error::InvalidInput("partition does not cover every vertex".into()));
        }
        Ok(masks)
    }

    fn from_masks(masks: &[u32]) -> OrderedPartition {
        OrderedPartition { cells: masks.iter().map(|&m| Bits(m).collect()).collect() }
    }
}

/// Splits cells until the partition is equitable, processing splitters from
/// `queue`. Fragments replace their cell in place, ordered by ascending
/// neighbour count.
fn refine_cells(g: &Graph, cells: &mut Vec<u32>, mut queue: VecDeque<u32>) {
    let n = g.n();
    let mut buckets = [0u32; 33];
    while let Some(w) = queue.pop_front() {
        if cells.len() == n {
            return;
        }
        let mut i = 0;
        while i < cells.len() {
            let x = cells[i];
            if x & (x - 1) == 0 {
                i += 1;
                continue;
            }
            let mut lo = 32;
            let mut hi = 0;
            for v in Bits(x) {
                let c = (g.neighbors(v) & w).count_ones() as usize;
                buckets[c] |= 1 << v;
                lo = lo.min(c);
                hi = hi.max(c);
            }
            if lo == hi {
                buckets[lo] = 0;
                i += 1;
                continue;
            }
            let mut frags = Vec::new();
            for b in &mut buckets[lo..=hi] {
                if *b != 0 {
                    frags.push(*b);
                    *b = 0;
                }
            }
            cells.splice(i..=i, frags.iter().copied());
            if let Some(pos) = queue.iter().position(|&q| q == x) {
                queue.remove(pos);
                for (k, &f) in frags.iter().enumerate() {
                    queue.insert(pos + k, f);
                }
            } else {
                let largest = frags
                    .iter()
                    .enumerate()
                    .max_by(|a, b| a.1.count_ones().cmp(&b.1.count_ones()).then(b.0.cmp(&a.0)))
                    .map(|(k, _)| k)
                    .expect("at least two fragments");
                queue.extend(frags.iter().enumerate().filter(|&(k, _)| k != largest).map(|(_, &f)| f));
            }
            i += frags.len();
        }
    }
}

/// Coarsest equitable refinement of `p`.
pub fn refine(g: &Graph, p: &OrderedPartition) -> Result<OrderedPartition> {
    let mut cells = p.to_masks(g.n())?;
    let queue = cells.iter().copied().collect();
    refine_cells(g, &mut cells, queue);
    Ok(OrderedPartition::from_masks(&cells))
}

/// Automorphism group data of one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutResult {
    pub generators: Vec<Permutation>,
    pub order: u128,
    pub vertex_orbits: Vec<Vec<usize>>,
    pub edge_orbits: Vec<Vec<Edge>>,
}

/// A canonical labeling and the graph6 string of the relabeled graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub labeling: Permutation,
    pub canonical_bytes: String,
}

struct Leaf {
    path: Vec<usize>,
    lab: Vec<usize>,
    image: Graph,
    key: Vec<u8>,
}

enum Flow {
    Continue,
    JumpTo(usize),
    Abort,
}

struct Search<'a> {
    g: &'a Graph,
    canonical: bool,
    limit: Option<u128>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    gens: Vec<Permutation>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, canonical: bool, limit: Option<u128>) -> Search<'a> {
        Search { g, canonical, limit, first: None, best: None, gens: Vec::new() }
    }

    fn run(&mut self, mut cells: Vec<u32>) -> bool {
        let queue = cells.iter().copied().collect();
        refine_cells(self.g, &mut cells, queue);
        !matches!(self.descend(cells, &mut Vec::new()), Flow::Abort)
    }

    fn descend(&mut self, cells: Vec<u32>, path: &mut Vec<usize>) -> Flow {
        let n = self.g.n();
        if cells.len() == n {
            let mut lab = vec![0; n];
            for (pos, &c) in cells.iter().enumerate() {
                lab[c.trailing_zeros() as usize] = pos;
            }
            return self.leaf(lab, path);
        }
        let (target, cell) = cells
            .iter()
            .copied()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|&(i, c)| (c.count_ones(), i))
            .expect("non-discrete partition has a non-singleton cell");
        let depth = path.len();
        let mut explored = 0u32;
        for w in Bits(cell) {
            if explored != 0 && self.stabilizer_orbit(w, path) & explored != 0 {
                continue;
            }
            explored |= 1 << w;
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1 << w);
            child.push(cell & !(1 << w));
            child.extend_from_slice(&cells[target + 1..]);
            refine_cells(self.g, &mut child, VecDeque::from([1u32 << w]));
            path.push(w);
            let flow = self.descend(child, path);
            path.pop();
            match flow {
                Flow::Continue => {}
                Flow::JumpTo(level) if level == depth => {}
                other => return other,
            }
        }
        Flow::Continue
    }

    /// Orbit of `w` under the discovered automorphisms fixing `path` pointwise.
    fn stabilizer_orbit(&self, w: usize, path: &[usize]) -> u32 {
        let stab: Vec<&Permutation> =
            self.gens.iter().filter(|p| path.iter().all(|&v| p.apply(v) == v)).collect();
        let mut orbit = 1u32 << w;
        let mut frontier = orbit;
        while frontier != 0 {
            let mut next = 0u32;
            for v in Bits(frontier) {
                for p in &stab {
                    next |= 1 << p.apply(v);
                }
            }
            frontier = next & !orbit;
            orbit |= next;
        }
        orbit
    }

    fn leaf(&mut self, lab: Vec<usize>, path: &[usize]) -> Flow {
        let image = self.g.relabel_by(&lab);
        let key = if self.canonical { graph6::encode(&image).expect("n <= 32") } else { Vec::new() };
        let leaf = Leaf { path: path.to_vec(), lab, image, key };
        let Some(first) = &self.first else {
            if self.canonical {
                self.best = Some(Leaf { path: leaf.path.clone(), lab: leaf.lab.clone(), image, key: leaf.key.clone() });
            }
            self.first = Some(leaf);
            return Flow::Continue;
        };
        if first.image == leaf.image {
            let jump = common_prefix(&first.path, &leaf.path);
            let gamma = automorphism_between(&first.lab, &leaf.lab);
            return self.record(gamma, jump);
        }
        if self.canonical {
            let best = self.best.as_ref().expect("best leaf set with first");
            match leaf.key.cmp(&best.key) {
                std::cmp::Ordering::Equal => {
                    let jump = common_prefix(&best.path, &leaf.path);
                    let gamma = automorphism_between(&best.lab, &leaf.lab);
                    return self.record(gamma, jump);
                }
                std::cmp::Ordering::Less => self.best = Some(leaf),
                std::cmp::Ordering::Greater => {}
            }
        }
        Flow::Continue
    }

    fn record(&mut self, gamma: Permutation, jump: usize) -> Flow {
        assert!(self.g.is_automorphism(gamma.images()), "leaf match must yield an automorphism");
        self.gens.push(gamma);
        if let Some(limit) = self.limit {
            let order = group_order(&self.gens, self.g.n()).expect("generators share the graph's degree");
            if order > limit {
                return Flow::Abort;
            }
        }
        Flow::JumpTo(jump)
    }
}

/// The automorphism carrying the reference leaf's labeling onto another leaf's:
/// `v -> other^-1(reference(v))`.
fn automorphism_between(reference: &[usize], other: &[usize]) -> Permutation {
    let mut inv = vec![0; other.len()];
    for (v, &pos) in other.iter().enumerate() {
        inv[pos] = v;
    }
    Permutation::from_images_unchecked(reference.iter().map(|&pos| inv[pos]).collect())
}

fn edge_orbits(g: &Graph, generators: &[Permutation]) -> Vec<Vec<Edge>> {
    let edges: Vec<Edge> = g.edges().collect();
    let index = |e: Edge| edges.binary_search(&e).expect("automorphisms map edges to edges");
    let mut uf = UnionFind::new(edges.len());
    for p in generators {
        for (i, e) in edges.iter().enumerate() {
            uf.union(i, index(Edge::new(p.apply(e.u), p.apply(e.v))));
        }
    }
    uf.classes().into_iter().map(|c| c.into_iter().map(|i| edges[i]).collect()).collect()
}

fn assemble(g: &Graph, generators: Vec<Permutation>) -> AutResult {
    let n = g.n();
    let order = group_order(&generators, n).expect("generators share the graph's degree");
    let vertex_orbits = vertex_orbits(&generators, n).expect("generators share the graph's degree");
    let edge_orbits = edge_orbits(g, &generators);
    AutResult { generators, order, vertex_orbits, edge_orbits }
}

fn unit_cells(n: usize) -> Vec<u32> {
    if n == 0 {
        vec![]
    } else {
        vec![low_mask(n)]
    }
}

/// Full automorphism group of `g`.
pub fn automorphism_group(g: &Graph) -> AutResult {
    let mut s = Search::new(g, false, None);
    s.run(unit_cells(g.n()));
    assemble(g, s.gens)
}

/// Automorphisms preserving an ordered vertex colouring given as a partition.
pub fn automorphism_group_colored(g: &Graph, colors: &OrderedPartition) -> Result<AutResult> {
    let cells = colors.to_masks(g.n())?;
    let mut s = Search::new(g, false, None);
    s.run(cells);
    Ok(assemble(g, s.gens))
}

/// Like [`automorphism_group`], but gives up and returns `None` as soon as the
/// discovered generators already generate more than `limit` elements.
pub fn automorphism_group_bounded(g: &Graph, limit: u128) -> Option<AutResult> {
    let mut s = Search::new(g, false, Some(limit));
    if s.run(unit_cells(g.n())) {
        Some(assemble(g, s.gens))
    } else {
        None
    }
}

/// Canonical labeling: the leaf whose relabeled graph has the least graph6 string.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let mut s = Search::new(g, true, None);
    s.run(unit_cells(g.n()));
    let best = s.best.expect("every search reaches at least one leaf");
    CanonicalForm {
        labeling: Permutation::from_images_unchecked(best.lab),
        canonical_bytes: String::from_utf8(best.key).expect("graph6 is ASCII"),
    }
}

/// Canonical graph6 string only.
pub fn canonical_string(g: &Graph) -> String {
    canonical_form(g).canonical_bytes
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_string(a) == canonical_string(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn is_equitable(g: &Graph, p: &OrderedPartition) -> bool {
        p.cells.iter().all(|x| {
            p.cells.iter().all(|w| {
                let count = |v: usize| w.iter().filter(|&&u| g.has_edge(v, u)).count();
                x.iter().all(|&v| count(v) == count(x[0]))
            })
        })
    }

    #[test]
    fn refine_examples() {
        let c5 = cycle(5);
        assert_eq!(refine(&c5, &OrderedPartition::unit(5)).unwrap(), OrderedPartition::unit(5));
        let star4 = star(4);
        let r = refine(&star4, &OrderedPartition::unit(5)).unwrap();
        assert_eq!(r.cells, vec![vec![1, 2, 3, 4], vec![0]]);
        let d = OrderedPartition::discrete(&[3, 1, 0, 2]);
        assert_eq!(refine(&path(4), &d).unwrap(), d);
    }

    #[test]
    fn refine_is_equitable_and_idempotent() {
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6)]).unwrap();
        let r = refine(&g, &OrderedPartition::unit(7)).unwrap();
        assert!(is_equitable(&g, &r));
        assert_eq!(refine(&g, &r).unwrap(), r);
    }

    #[test]
    fn refine_rejects_bad_partitions() {
        let g = path(3);
        assert!(refine(&g, &OrderedPartition { cells: vec![vec![0, 1]] }).is_err());
        assert!(refine(&g, &OrderedPartition { cells: vec![vec![0, 1], vec![1, 2]] }).is_err());
        assert!(refine(&g, &OrderedPartition { cells: vec![vec![0, 1, 2], vec![]] }).is_err());
    }

    #[test]
    fn automorphism_group_examples() {
        assert_eq!(automorphism_group(&complete(4)).order, 24);
        let p = automorphism_group(&petersen());
        assert_eq!(p.order, 120);
        assert_eq!(p.vertex_orbits.len(), 1);
        assert_eq!(p.edge_orbits.len(), 1);
        assert_eq!(automorphism_group(&complete(10)).order, 3_628_800);
        assert_eq!(automorphism_group(&Graph::empty(0).unwrap()).order, 1);
        assert_eq!(automorphism_group(&Graph::empty(1).unwrap()).order, 1);
        assert_eq!(automorphism_group(&cycle(7)).order, 14);
        assert_eq!(automorphism_group(&complete_bipartite(3, 3)).order, 72);
    }

    #[test]
    fn generators_are_automorphisms() {
        for g in [petersen(), cycle(6), star(5), complete_bipartite(2, 4)] {
            let a = automorphism_group(&g);
            for p in &a.generators {
                assert_eq!(g.relabel(p).unwrap(), g);
            }
        }
    }

    #[test]
    fn bounded_search_aborts() {
        assert!(automorphism_group_bounded(&petersen(), 4).is_none());
        assert_eq!(automorphism_group_bounded(&petersen(), 120).unwrap().order, 120);
    }

    #[test]
    fn colored_search_respects_cells() {
        let c = OrderedPartition { cells: vec![vec![0], vec![1, 2, 3, 4]] };
        assert_eq!(automorphism_group_colored(&cycle(5), &c).unwrap().order, 2);
    }

    #[test]
    fn canonical_form_examples() {
        let k3 = complete(3);
        let other = k3.relabel(&Permutation::from_images(vec![2, 0, 1]).unwrap()).unwrap();
        assert_eq!(canonical_string(&k3), canonical_string(&other));
        assert_ne!(canonical_string(&cycle(6)), canonical_string(&complete_bipartite(3, 3)));
        let cf = canonical_form(&petersen());
        assert_eq!(graph6::encode_string(&petersen().relabel(&cf.labeling).unwrap()), cf.canonical_bytes);
    }

    #[test]
    fn isomorphism_examples() {
        let c5 = cycle(5);
        let p = Permutation::from_images(vec![4, 2, 0, 3, 1]).unwrap();
        assert!(are_isomorphic(&c5, &c5.relabel(&p).unwrap()));
        let two_k3 = complete(3).disjoint_union(&complete(3)).unwrap();
        assert!(!are_isomorphic(&cycle(6), &two_k3));
        assert!(!are_isomorphic(&path(3), &path(4)));
    }
}
