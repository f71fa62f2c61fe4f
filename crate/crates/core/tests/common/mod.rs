//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the algorithms being checked beyond the `Graph` container itself.

#![allow(dead_code)]

use rand::Rng;
use z4census::Graph;

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
}

pub fn adjacent(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u) >> v & 1 == 1
}

pub fn is_automorphism(g: &Graph, p: &[usize]) -> bool {
    (0..g.n()).all(|u| (0..g.n()).all(|v| adjacent(g, u, v) == adjacent(g, p[u], p[v])))
}

pub fn automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    permutations(g.n()).into_iter().filter(|p| is_automorphism(g, p)).collect()
}

pub fn triangles(g: &Graph) -> i128 {
    let n = g.n();
    let mut t = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if adjacent(g, a, b) && adjacent(g, b, c) && adjacent(g, a, c) {
                    t += 1;
                }
            }
        }
    }
    t
}

/// Integer determinant by Bareiss fraction-free elimination.
pub fn bareiss_det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(r) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return 0;
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// `det(xI - A)` at an integer point.
pub fn char_poly_at(g: &Graph, x: i128) -> i128 {
    let n = g.n();
    let m = (0..n)
        .map(|i| (0..n).map(|j| if i == j { x } else { -(adjacent(g, i, j) as i128) }).collect())
        .collect();
    bareiss_det(m)
}

fn connected_without(g: &Graph, removed: u32) -> bool {
    let alive: Vec<usize> = (0..g.n()).filter(|&v| removed >> v & 1 == 0).collect();
    let Some(&start) = alive.first() else {
        return true;
    };
    let mut seen = 1u32 << start;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &v in &alive {
            if seen >> v & 1 == 0 && adjacent(g, u, v) {
                seen |= 1 << v;
                stack.push(v);
            }
        }
    }
    alive.iter().all(|&v| seen >> v & 1 == 1)
}

/// Smallest vertex set whose removal disconnects `g`; `n - 1` for complete graphs.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .filter(|&s| (s.count_ones() as usize) < n - 1 && !connected_without(g, s))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(n - 1)
}

/// Fewest edges crossing a nontrivial vertex bipartition.
pub fn edge_connectivity(g: &Graph) -> usize {
    let n = g.n();
    (1u32..1 << n)
        .filter(|&s| s & 1 == 1 && s != (1 << n) - 1)
        .map(|s| {
            let mut cut = 0;
            for u in 0..n {
                for v in 0..n {
                    if s >> u & 1 == 1 && s >> v & 1 == 0 && adjacent(g, u, v) {
                        cut += 1;
                    }
                }
            }
            cut
        })
        .min()
        .unwrap_or(0)
}

pub fn hamiltonian(g: &Graph) -> bool {
    let n = g.n();
    permutations(n)
        .into_iter()
        .filter(|p| p[0] == 0)
        .any(|p| (0..n).all(|i| adjacent(g, p[i], p[(i + 1) % n])))
}

/// Smallest `k` with a proper `k`-colouring, by trying every assignment.
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    (1..=n)
        .find(|&k| {
            let total = k.pow(n as u32);
            (0..total).any(|code| {
                let col: Vec<usize> = (0..n).scan(code, |c, _| {
                    let x = *c % k;
                    *c /= k;
                    Some(x)
                }).collect();
                (0..n).all(|u| (u + 1..n).all(|v| !adjacent(g, u, v) || col[u] != col[v]))
            })
        })
        .unwrap_or(0)
}

pub fn clique_number(g: &Graph) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .filter(|&s| {
            let vs: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
            vs.iter().all(|&a| vs.iter().all(|&b| a == b || adjacent(g, a, b)))
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// All-pairs distances by Floyd–Warshall; `None` when unreachable.
pub fn distances(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.n();
    let mut d: Vec<Vec<Option<u32>>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Some(0) } else if adjacent(g, i, j) { Some(1) } else { None }).collect())
        .collect();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Distance transitivity with the whole group listed.
pub fn distance_transitive(g: &Graph) -> bool {
    let n = g.n();
    let auts = automorphisms(g);
    let d = distances(g);
    for u in 0..n {
        for v in 0..n {
            for x in 0..n {
                for y in 0..n {
                    if d[u][v] == d[x][y] && !auts.iter().any(|p| p[u] == x && p[v] == y) {
                        return false;
                    }
                }
            }
        }
    }
    true
}
