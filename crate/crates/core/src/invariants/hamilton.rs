//! Hamiltonian cycles by backtracking.

use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};

/// A Hamiltonian cycle starting at vertex 0, or `None` if none exists.
pub fn hamiltonian_cycle(g: &Graph) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    if n < 3 {
        return Err(Error::Undefined("hamiltonicity of a graph with fewer than three vertices"));
    }
    if (0..n).any(|v| g.degree(v) < 2) || !g.is_connected() {
        return Ok(None);
    }
    let mut path = vec![0];
    Ok(if extend(g, &mut path, 1) { Some(path) } else { None })
}

pub fn is_hamiltonian(g: &Graph) -> Result<bool> {
    Ok(hamiltonian_cycle(g)?.is_some())
}

fn extend(g: &Graph, path: &mut Vec<usize>, visited: u32) -> bool {
    let n = g.n();
    let end = *path.last().expect("path starts at 0");
    if path.len() == n {
        return g.has_edge(end, 0);
    }
    let unvisited = g.vertices().0 & !visited;
    // each unvisited vertex still needs two usable neighbours among the
    // unvisited ones, the current end, and the start
    let open = unvisited | 1 << end | 1;
    if Bits(unvisited).any(|v| (g.neighbors(v) & open).count_ones() < 2) {
        return false;
    }
    if g.neighbors(0) & (unvisited | 1 << end) == 0 {
        return false;
    }
    for next in Bits(g.neighbors(end) & unvisited) {
        path.push(next);
        if extend(g, path, visited | 1 << next) {
            return true;
        }
        path.pop();
    }
    false
}

/// True when `cycle` visits every vertex once and consecutive vertices,
/// including last to first, are adjacent.
pub fn is_hamiltonian_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let n = g.n();
    if cycle.len() != n || n < 3 {
        return false;
    }
    let mut seen = 0u32;
    for &v in cycle {
        if v >= n || seen >> v & 1 == 1 {
            return false;
        }
        seen |= 1 << v;
    }
    (0..n).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % n]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn examples() {
        for g in [cycle(5), complete(4), complete_bipartite(3, 3)] {
            let c = hamiltonian_cycle(&g).unwrap().expect("hamiltonian");
            assert!(is_hamiltonian_cycle(&g, &c));
        }
        assert!(!is_hamiltonian(&star(3)).unwrap());
        assert!(!is_hamiltonian(&complete_bipartite(2, 3)).unwrap());
        assert!(is_hamiltonian(&complete(2)).is_err());
    }

    #[test]
    fn petersen_is_not_hamiltonian() {
        assert!(!is_hamiltonian(&petersen()).unwrap());
    }

    #[test]
    fn certificate_validation_rejects_bad_cycles() {
        let g = cycle(5);
        assert!(is_hamiltonian_cycle(&g, &[0, 1, 2, 3, 4]));
        assert!(!is_hamiltonian_cycle(&g, &[0, 2, 1, 3, 4]));
        assert!(!is_hamiltonian_cycle(&g, &[0, 1, 2, 3]));
        assert!(!is_hamiltonian_cycle(&g, &[0, 1, 2, 3, 3]));
    }
}
