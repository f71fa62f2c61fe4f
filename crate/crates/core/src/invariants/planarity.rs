//! Planarity by Demoucron–Malgrange–Pertuiset path addition.
//!
//! Each biconnected block is embedded separately, starting from a cycle and
//! repeatedly drawing a path of some fragment inside a face that holds all of
//! its attachment vertices. Faces are kept as oriented vertex cycles, which
//! turn directly into a rotation system. Block rotations are concatenated at
//! cut vertices.
//!
//! A Kuratowski minor search (greedy deletion and contraction) gives an
//! independent certificate for negative answers.

use serde::Serialize;

use crate::autgroup::are_isomorphic;
use crate::graph::{named, Bits, Edge, Graph, VertexSet};

/// Planarity decision with its certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlanarityResult {
    pub planar: bool,
    /// Clockwise neighbour order around each vertex, when planar.
    pub rotation: Option<Vec<Vec<usize>>>,
}

pub fn is_planar(g: &Graph) -> bool {
    planarity(g).planar
}

pub fn planarity(g: &Graph) -> PlanarityResult {
    let n = g.n();
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return PlanarityResult { planar: false, rotation: None };
    }
    let mut rotation = vec![Vec::new(); n];
    for block in blocks(g) {
        let Some(rot) = embed_block(g, &block) else {
            return PlanarityResult { planar: false, rotation: None };
        };
        for (v, order) in rot {
            rotation[v].extend(order);
        }
    }
    debug_assert!(check_embedding(g, &rotation));
    PlanarityResult { planar: true, rotation: Some(rotation) }
}

/// Edge sets of the biconnected blocks (Hopcroft–Tarjan).
fn blocks(g: &Graph) -> Vec<Vec<Edge>> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<Edge>,
        out: Vec<Vec<Edge>>,
    }
    fn dfs(s: &mut State, v: usize, parent: Option<usize>) {
        s.time += 1;
        s.disc[v] = s.time;
        s.low[v] = s.time;
        for u in Bits(s.g.neighbors(v)) {
            if Some(u) == parent {
                continue;
            }
            if s.disc[u] == 0 {
                s.stack.push(Edge::new(v, u));
                dfs(s, u, Some(v));
                s.low[v] = s.low[v].min(s.low[u]);
                if s.low[u] >= s.disc[v] {
                    let top = Edge::new(v, u);
                    let mut block = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        block.push(e);
                        if e == top {
                            break;
                        }
                    }
                    s.out.push(block);
                }
            } else if s.disc[u] < s.disc[v] {
                s.stack.push(Edge::new(v, u));
                s.low[v] = s.low[v].min(s.disc[u]);
            }
        }
    }
    let n = g.n();
    let mut s = State { g, disc: vec![0; n], low: vec![0; n], time: 0, stack: Vec::new(), out: Vec::new() };
    for v in 0..n {
        if s.disc[v] == 0 {
            dfs(&mut s, v, None);
        }
    }
    s.out
}

/// Rotation of each vertex of a biconnected block, or `None` if the block is not planar.
fn embed_block(g: &Graph, block: &[Edge]) -> Option<Vec<(usize, Vec<usize>)>> {
    let n = g.n();
    let mut adj = vec![0u32; n];
    for e in block {
        adj[e.u] |= 1 << e.v;
        adj[e.v] |= 1 << e.u;
    }
    let b = Graph::from_rows_unchecked(n, &adj);
    if block.len() == 1 {
        let e = block[0];
        return Some(vec![(e.u, vec![e.v]), (e.v, vec![e.u])]);
    }

    let mut faces = initial_cycle(&b);
    let mut placed = vec![0u32; n];
    let mut placed_vertices = 0u32;
    for f in &faces[..1] {
        for i in 0..f.len() {
            let (u, v) = (f[i], f[(i + 1) % f.len()]);
            placed[u] |= 1 << v;
            placed[v] |= 1 << u;
            placed_vertices |= 1 << u;
        }
    }

    loop {
        let frags = fragments(&b, &placed, placed_vertices);
        if frags.is_empty() {
            break;
        }
        let masks: Vec<u32> = faces.iter().map(|f| f.iter().fold(0u32, |m, &v| m | 1 << v)).collect();
        let mut choice = None;
        for frag in &frags {
            let fits: Vec<usize> = (0..faces.len()).filter(|&i| frag.attach & !masks[i] == 0).collect();
            match fits.len() {
                0 => return None,
                1 => {
                    choice = Some((frag, fits[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((frag, fits[0]));
                    }
                }
            }
        }
        let (frag, fi) = choice.expect("at least one fragment");
        let path = fragment_path(&b, frag, placed_vertices);
        for w in path.windows(2) {
            placed[w[0]] |= 1 << w[1];
            placed[w[1]] |= 1 << w[0];
        }
        for &v in &path {
            placed_vertices |= 1 << v;
        }
        let face = faces.swap_remove(fi);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }

    // successor of u around v: the face containing u -> v continues v -> w
    let mut succ = vec![[usize::MAX; 32]; n];
    for f in &faces {
        let k = f.len();
        for i in 0..k {
            let (u, v, w) = (f[i], f[(i + 1) % k], f[(i + 2) % k]);
            succ[v][u] = w;
        }
    }
    let mut out = Vec::new();
    for v in 0..n {
        if adj[v] == 0 {
            continue;
        }
        let start = adj[v].trailing_zeros() as usize;
        let mut order = vec![start];
        let mut u = succ[v][start];
        while u != start {
            if u == usize::MAX || order.len() > 32 {
                return None;
            }
            order.push(u);
            u = succ[v][u];
        }
        if order.len() != adj[v].count_ones() as usize {
            return None;
        }
        out.push((v, order));
    }
    Some(out)
}

/// Two oriented faces of a shortest cycle through the lowest edge.
fn initial_cycle(b: &Graph) -> Vec<Vec<usize>> {
    let e = b.edges().next().expect("block has an edge");
    // shortest u-v path avoiding the edge uv
    let mut prev = vec![usize::MAX; b.n()];
    prev[e.u] = e.u;
    let mut queue = std::collections::VecDeque::from([e.u]);
    while let Some(x) = queue.pop_front() {
        for y in Bits(b.neighbors(x)) {
            if prev[y] == usize::MAX && !(x == e.u && y == e.v) {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut cycle = vec![e.v];
    let mut x = e.v;
    while x != e.u {
        x = prev[x];
        cycle.push(x);
    }
    let mut rev = cycle.clone();
    rev.reverse();
    vec![cycle, rev]
}

/// A component of the unplaced part, with the placed vertices it touches.
/// A chord between placed vertices has `inner == 0`.
struct Fragment {
    inner: u32,
    attach: u32,
    chord: Option<(usize, usize)>,
}

fn fragments(b: &Graph, placed: &[u32], placed_vertices: u32) -> Vec<Fragment> {
    let n = b.n();
    let mut out = Vec::new();
    for u in Bits(placed_vertices) {
        for v in Bits(b.neighbors(u) & placed_vertices & !placed[u]) {
            if u < v {
                out.push(Fragment { inner: 0, attach: 1 << u | 1 << v, chord: Some((u, v)) });
            }
        }
    }
    let block_vertices = (0..n).filter(|&v| b.neighbors(v) != 0).fold(0u32, |m, v| m | 1 << v);
    let mut left = block_vertices & !placed_vertices;
    while left != 0 {
        let start = left.trailing_zeros() as usize;
        let comp = b.reach(start, left);
        left &= !comp;
        let attach = Bits(comp).fold(0u32, |m, v| m | b.neighbors(v)) & placed_vertices;
        out.push(Fragment { inner: comp, attach, chord: None });
    }
    out
}

/// Path through a fragment joining two distinct attachment vertices.
fn fragment_path(b: &Graph, frag: &Fragment, placed_vertices: u32) -> Vec<usize> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let mut attach = Bits(frag.attach);
    let a = attach.next().expect("fragment of a block has two attachments");
    let target = frag.attach & !(1 << a);
    debug_assert!(target != 0);
    // BFS inside the fragment from the neighbours of a
    let mut prev = vec![usize::MAX; b.n()];
    let mut queue = std::collections::VecDeque::new();
    for x in Bits(b.neighbors(a) & frag.inner) {
        prev[x] = a;
        queue.push_back(x);
    }
    while let Some(x) = queue.pop_front() {
        let hit = b.neighbors(x) & target & placed_vertices;
        if hit != 0 {
            let end = hit.trailing_zeros() as usize;
            let mut path = vec![end, x];
            let mut y = x;
            while prev[y] != a {
                y = prev[y];
                path.push(y);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for y in Bits(b.neighbors(x) & frag.inner) {
            if prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    unreachable!("fragment is connected and has a second attachment")
}

/// Splits an oriented face along a path whose ends lie on it.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let k = face.len();
    let a = path[0];
    let b = *path.last().expect("path has two ends");
    let i = face.iter().position(|&x| x == a).expect("path starts on the face");
    let j = face.iter().position(|&x| x == b).expect("path ends on the face");
    let inner = &path[1..path.len() - 1];
    let walk = |from: usize, to: usize| {
        let mut w = vec![face[from]];
        let mut t = from;
        while t != to {
            t = (t + 1) % k;
            w.push(face[t]);
        }
        w
    };
    let mut f1 = walk(i, j);
    f1.extend(inner.iter().rev());
    let mut f2 = walk(j, i);
    f2.extend(inner.iter());
    (f1, f2)
}

/// Faces traced from a rotation system; `None` if the rotation is inconsistent with `g`.
pub fn trace_faces(g: &Graph, rotation: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    if rotation.len() != n {
        return None;
    }
    let mut next = vec![[usize::MAX; 32]; n];
    for v in 0..n {
        let rot = &rotation[v];
        let mask = rot.iter().fold(0u32, |m, &u| if u < n { m | 1 << u } else { m });
        if mask != g.neighbors(v) || rot.len() != g.degree(v) {
            return None;
        }
        for (i, &u) in rot.iter().enumerate() {
            next[v][u] = rot[(i + 1) % rot.len()];
        }
    }
    let mut used = vec![0u32; n];
    let mut faces = Vec::new();
    for u in 0..n {
        for v in Bits(g.neighbors(u)) {
            if used[u] >> v & 1 == 1 {
                continue;
            }
            let mut face = Vec::new();
            let (mut x, mut y) = (u, v);
            while used[x] >> y & 1 == 0 {
                used[x] |= 1 << y;
                face.push(x);
                let z = next[y][x];
                x = y;
                y = z;
            }
            if (x, y) != (u, v) {
                return None;
            }
            faces.push(face);
        }
    }
    Some(faces)
}

/// Checks `V - E + F = 2` on every connected component.
pub fn check_embedding(g: &Graph, rotation: &[Vec<usize>]) -> bool {
    let Some(faces) = trace_faces(g, rotation) else {
        return false;
    };
    g.components().into_iter().all(|comp| {
        let v = comp.count_ones() as i64;
        let e = Bits(comp).map(|x| g.degree(x)).sum::<usize>() as i64 / 2;
        let f = if e == 0 { 1 } else { faces.iter().filter(|f| comp >> f[0] & 1 == 1).count() as i64 };
        v - e + f == 2
    })
}

/// Which forbidden graph a nonplanar graph contains as a minor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Kuratowski {
    K5,
    K33,
}

/// A minor of `g` isomorphic to K5 or K3,3, if `g` is nonplanar.
///
/// Edges are deleted, then contracted, whenever the result stays nonplanar.
/// A minor-minimal nonplanar graph is K5 or K3,3, and the result is checked
/// against both by isomorphism.
pub fn kuratowski_minor(g: &Graph) -> Option<(Kuratowski, Graph)> {
    if is_planar(g) {
        return None;
    }
    let mut h = *g;
    loop {
        let mut changed = false;
        for e in h.edges().collect::<Vec<_>>() {
            let mut rows = h.rows().to_vec();
            rows[e.u] &= !(1 << e.v);
            rows[e.v] &= !(1 << e.u);
            let cand = Graph::from_rows_unchecked(h.n(), &rows);
            if !is_planar(&cand) {
                h = cand;
                changed = true;
            }
        }
        h = drop_isolated(&h);
        for e in h.edges().collect::<Vec<_>>() {
            let cand = contract(&h, e);
            if !is_planar(&cand) {
                h = cand;
                changed = true;
                break;
            }
        }
        if !changed {
            break;
        }
    }
    if are_isomorphic(&h, &named::complete(5)) {
        Some((Kuratowski::K5, h))
    } else if are_isomorphic(&h, &named::complete_bipartite(3, 3)) {
        Some((Kuratowski::K33, h))
    } else {
        None
    }
}

fn drop_isolated(g: &Graph) -> Graph {
    g.induced_subgraph(VertexSet::from_vertices((0..g.n()).filter(|&v| g.degree(v) > 0)))
}

/// Merges `e.v` into `e.u` and removes `e.v`.
fn contract(g: &Graph, e: Edge) -> Graph {
    let mut rows = g.rows().to_vec();
    let merged = (rows[e.u] | rows[e.v]) & !(1 << e.u | 1 << e.v);
    rows[e.u] = merged;
    for x in Bits(merged) {
        rows[x] |= 1 << e.u;
    }
    let h = Graph::from_rows_unchecked(g.n(), &rows);
    h.induced_subgraph(VertexSet(g.vertices().0 & !(1 << e.v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn planar_with_certificate(g: &Graph) -> bool {
        let r = planarity(g);
        if let Some(rot) = &r.rotation {
            assert!(check_embedding(g, rot));
        }
        r.planar
    }

    #[test]
    fn examples() {
        assert!(planar_with_certificate(&complete(4)));
        assert!(!planar_with_certificate(&complete(5)));
        assert!(!planar_with_certificate(&complete_bipartite(3, 3)));
        assert!(!planar_with_certificate(&petersen()));
        assert!(planar_with_certificate(&cycle(7)));
        assert!(planar_with_certificate(&star(5)));
        assert!(planar_with_certificate(&Graph::empty(4).unwrap()));
        assert!(planar_with_certificate(&complete_bipartite(2, 6)));
    }

    #[test]
    fn blocks_joined_at_cut_vertices() {
        // two K4 sharing vertex 3, plus a pendant path and an isolated vertex
        let g = Graph::from_edges(
            10,
            [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6), (6, 7), (7, 8)],
        )
        .unwrap();
        assert!(planar_with_certificate(&g));
        assert_eq!(blocks(&g).len(), 4);
    }

    #[test]
    fn platonic_solids_are_planar() {
        // cube and octahedron
        let cube = Graph::from_edges(
            8,
            [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)],
        )
        .unwrap();
        assert!(planar_with_certificate(&cube));
        let mut rows = complete(6).rows().to_vec();
        for (a, b) in [(0, 1), (2, 3), (4, 5)] {
            rows[a] &= !(1 << b);
            rows[b] &= !(1 << a);
        }
        assert!(planar_with_certificate(&Graph::from_rows(&rows).unwrap()));
    }

    #[test]
    fn kuratowski_witnesses() {
        assert_eq!(kuratowski_minor(&complete(5)).map(|w| w.0), Some(Kuratowski::K5));
        assert_eq!(kuratowski_minor(&complete_bipartite(3, 3)).map(|w| w.0), Some(Kuratowski::K33));
        assert!(kuratowski_minor(&petersen()).is_some());
        assert!(kuratowski_minor(&complete(4)).is_none());
        assert!(kuratowski_minor(&complete(7)).is_some());
    }

    #[test]
    fn bad_rotation_fails_the_euler_check() {
        let g = complete(4);
        // the same cyclic order at every vertex gives a torus embedding with two faces
        let rot: Vec<Vec<usize>> = (0..4).map(|v| (0..4).filter(|&u| u != v).collect()).collect();
        assert_eq!(trace_faces(&g, &rot).unwrap().len(), 2);
        assert!(!check_embedding(&g, &rot));
        let planar_rot = planarity(&g).rotation.unwrap();
        assert_eq!(trace_faces(&g, &planar_rot).unwrap().len(), 4);
        assert!(!check_embedding(&g, &[vec![1], vec![0], vec![], vec![]]));
    }
}
