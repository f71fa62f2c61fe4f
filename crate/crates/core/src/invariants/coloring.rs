//! Clique number and chromatic number, both exact.

use crate::graph::{Bits, Graph};

/// Maximum clique size by branch and bound over candidate bitsets.
pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).count_ones() as usize
}

/// Vertex mask of one maximum clique.
pub fn max_clique(g: &Graph) -> u32 {
    fn expand(g: &Graph, clique: u32, mut cand: u32, best: &mut u32) {
        if cand == 0 {
            if clique.count_ones() > best.count_ones() {
                *best = clique;
            }
            return;
        }
        while cand != 0 {
            if clique.count_ones() + cand.count_ones() <= best.count_ones() {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= !(1 << v);
            expand(g, clique | 1 << v, cand & g.neighbors(v), best);
        }
        if clique.count_ones() > best.count_ones() {
            *best = clique;
        }
    }
    let mut best = 0u32;
    expand(g, 0, g.vertices().0, &mut best);
    best
}

/// Exact chromatic number.
pub fn chromatic_number(g: &Graph) -> usize {
    optimal_coloring(g).0
}

/// Chromatic number with a proper colouring attaining it.
///
/// Colours are tried from the clique bound upwards; each decision is a
/// backtracking search branching on the uncoloured vertex of largest
/// saturation, new colours introduced in order to skip relabelings.
pub fn optimal_coloring(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.n();
    if n == 0 {
        return (0, Vec::new());
    }
    let lower = clique_number(g).max(1);
    let greedy = dsatur_greedy(g);
    let upper = greedy.iter().max().map_or(0, |&c| c + 1);
    for k in lower..upper {
        let mut colors = vec![usize::MAX; n];
        if color_with(g, k, &mut colors, 0) {
            return (k, colors);
        }
    }
    (upper, greedy)
}

fn saturation(g: &Graph, colors: &[usize], v: usize) -> u32 {
    Bits(g.neighbors(v))
        .filter(|&u| colors[u] != usize::MAX)
        .fold(0u32, |m, u| m | 1 << colors[u])
        .count_ones()
}

fn pick(g: &Graph, colors: &[usize]) -> Option<usize> {
    (0..g.n())
        .filter(|&v| colors[v] == usize::MAX)
        .max_by_key(|&v| {
            let uncolored = Bits(g.neighbors(v)).filter(|&u| colors[u] == usize::MAX).count();
            (saturation(g, colors, v), uncolored, std::cmp::Reverse(v))
        })
}

fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let mut colors = vec![usize::MAX; g.n()];
    while let Some(v) = pick(g, &colors) {
        let used = Bits(g.neighbors(v)).filter(|&u| colors[u] != usize::MAX).fold(0u32, |m, u| m | 1 << colors[u]);
        colors[v] = (!used).trailing_zeros() as usize;
    }
    colors
}

fn color_with(g: &Graph, k: usize, colors: &mut [usize], used: usize) -> bool {
    let Some(v) = pick(g, colors) else {
        return true;
    };
    let forbidden = Bits(g.neighbors(v)).filter(|&u| colors[u] != usize::MAX).fold(0u32, |m, u| m | 1 << colors[u]);
    for c in 0..k.min(used + 1) {
        if forbidden >> c & 1 == 0 {
            colors[v] = c;
            if color_with(g, k, colors, used.max(c + 1)) {
                return true;
            }
        }
    }
    colors[v] = usize::MAX;
    false
}

/// True when `colors` is a proper colouring of `g`.
pub fn is_proper_coloring(g: &Graph, colors: &[usize]) -> bool {
    colors.len() == g.n() && g.edges().all(|e| colors[e.u] != colors[e.v])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn clique_examples() {
        assert_eq!(clique_number(&complete(5)), 5);
        assert_eq!(clique_number(&cycle(5)), 2);
        assert_eq!(clique_number(&petersen()), 2);
        assert_eq!(clique_number(&Graph::empty(3).unwrap()), 1);
        assert_eq!(clique_number(&Graph::empty(0).unwrap()), 0);
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&cycle(5)), 3);
        assert_eq!(chromatic_number(&cycle(6)), 2);
        assert_eq!(chromatic_number(&complete(6)), 6);
        assert_eq!(chromatic_number(&Graph::empty(4).unwrap()), 1);
        assert_eq!(chromatic_number(&Graph::empty(0).unwrap()), 0);
    }

    #[test]
    fn petersen_is_three_chromatic() {
        let g = petersen();
        let (k, colors) = optimal_coloring(&g);
        assert_eq!(k, 3);
        assert!(is_proper_coloring(&g, &colors));
        assert!(colors.iter().all(|&c| c < 3));
        // the outer 5-cycle is odd, so two colours cannot suffice
        assert!(!color_with(&g, 2, &mut [usize::MAX; 10], 0));
    }

    #[test]
    fn grotzsch_graph_needs_four_colours() {
        // Mycielskian of C5: triangle free with chromatic number 4.
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        for i in 0..5 {
            edges.push((5 + i, (i + 1) % 5));
            edges.push((5 + i, (i + 4) % 5));
            edges.push((5 + i, 10));
        }
        let g = Graph::from_edges(11, edges).unwrap();
        assert_eq!(clique_number(&g), 2);
        assert_eq!(chromatic_number(&g), 4);
    }
}
