//! Permutations of `{0, .., n-1}`, cyclic-group orbits, and group orders from
//! generating sets via a stabilizer chain.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, MAX_VERTICES};

/// A bijection of `{0, .., n-1}` stored as its image sequence.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    img: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(img: Vec<usize>) -> Result<Self> {
        Permutation::from_images(img)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.img
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.img)
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation { img: (0..n).collect() }
    }

    pub fn from_images(img: Vec<usize>) -> Result<Permutation> {
        let n = img.len();
        let mut seen = vec![false; n];
        for &x in &img {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidInput(format!("{img:?} is not a permutation of 0..{n}")));
            }
        }
        Ok(Permutation { img })
    }

    pub(crate) fn from_images_unchecked(img: Vec<usize>) -> Permutation {
        debug_assert!(Permutation::from_images(img.clone()).is_ok());
        Permutation { img }
    }

    /// Builds a permutation from disjoint cycles on 0-indexed points; unlisted
    /// points are fixed.
    pub fn from_cycles(cycles: &[Vec<usize>], n: usize) -> Result<Permutation> {
        let mut img: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= n {
                    return Err(Error::InvalidInput(format!("point {x} outside 0..{n}")));
                }
                if std::mem::replace(&mut used[x], true) {
                    return Err(Error::InvalidInput(format!("point {x} repeated across cycles")));
                }
                img[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { img })
    }

    /// Parses 1-indexed cycle notation such as `(1,2,3,4)(5,6,7,8)(9,10)`.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Permutation> {
        let bad = || Error::InvalidInput(format!("cannot parse cycle notation {text:?}"));
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = body.find(')').ok_or_else(bad)?;
            let cycle = body[..close]
                .split(',')
                .map(|t| match t.trim().parse::<usize>() {
                    Ok(x) if x >= 1 => Ok(x - 1),
                    _ => Err(bad()),
                })
                .collect::<Result<Vec<usize>>>()?;
            cycles.push(cycle);
            rest = body[close + 1..].trim_start();
        }
        Permutation::from_cycles(&cycles, n)
    }

    pub fn len(&self) -> usize {
        self.img.len()
    }

    pub fn is_empty(&self) -> bool {
        self.img.is_empty()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.img[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.img
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.img.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { img: inv }
    }

    /// `self` first, then `other`: `x -> other(self(x))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation { img: self.img.iter().map(|&x| other.img[x]).collect() }
    }

    pub fn pow(&self, k: usize) -> Permutation {
        let mut r = Permutation::identity(self.len());
        for _ in 0..k {
            r = r.then(self);
        }
        r
    }

    /// `c^-1 p c`, i.e. the permutation acting on relabeled points `c(x)`.
    pub fn conjugate_by(&self, c: &Permutation) -> Permutation {
        c.inverse().then(self).then(c)
    }

    /// Cycles including fixed points, each starting at its least point,
    /// ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.img[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.img[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::new(self.cycles().iter().map(Vec::len).collect())
    }

    /// Least `k >= 1` with `p^k = id`, the lcm of the cycle lengths.
    pub fn order(&self) -> u128 {
        self.cycles().iter().fold(1u128, |acc, c| lcm(acc, c.len() as u128))
    }
}

/// 1-indexed cycle notation with fixed points omitted; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            let labels: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", labels.join(","))?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u128, b: u128) -> u128 {
    a / gcd(a, b) * b
}

pub fn element_order(p: &Permutation) -> u128 {
    p.order()
}

/// Multiset of cycle lengths, sorted descending.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CycleType(Vec<usize>);

impl CycleType {
    pub fn new(mut parts: Vec<usize>) -> CycleType {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    /// Permutation with this cycle type, cycles on consecutive points, longest first.
    pub fn representative(&self) -> Permutation {
        let mut cycles = Vec::new();
        let mut next = 0;
        for &len in &self.0 {
            cycles.push((next..next + len).collect::<Vec<_>>());
            next += len;
        }
        Permutation::from_cycles(&cycles, next).expect("consecutive cycles are disjoint")
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for CycleType {
    type Err = Error;
    fn from_str(s: &str) -> Result<CycleType> {
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().ok().filter(|&x| x >= 1))
            .collect::<Option<Vec<usize>>>()
            .ok_or_else(|| Error::InvalidInput(format!("bad cycle type {s:?}")))?;
        Ok(CycleType::new(parts))
    }
}

/// Orbits of a cyclic group `<p>` on unordered pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairOrbitPartition {
    pub classes: Vec<Vec<Edge>>,
}

impl PairOrbitPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Index of the class containing `e`.
    pub fn class_of(&self, e: Edge) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(&e))
    }
}

/// Orbits of `<p>` on unordered pairs, each class sorted, classes ordered by
/// their least pair.
pub fn pair_orbits(p: &Permutation) -> PairOrbitPartition {
    let n = p.len();
    let mut seen = BTreeSet::new();
    let mut classes = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let start = Edge::new(u, v);
            if seen.contains(&start) {
                continue;
            }
            let mut class = vec![start];
            seen.insert(start);
            let mut e = Edge::new(p.apply(u), p.apply(v));
            while e != start {
                seen.insert(e);
                class.push(e);
                e = Edge::new(p.apply(e.u), p.apply(e.v));
            }
            class.sort_unstable();
            classes.push(class);
        }
    }
    PairOrbitPartition { classes }
}

/// One permutation per cycle type with parts in {1, 2, 4} containing a 4,
/// ordered from most 4-cycles to fewest, then most 2-cycles to fewest.
pub fn order4_representatives(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for fours in (1..=n / 4).rev() {
        let rest = n - 4 * fours;
        for twos in (0..=rest / 2).rev() {
            let ones = rest - 2 * twos;
            let mut parts = vec![4; fours];
            parts.extend(std::iter::repeat_n(2, twos));
            parts.extend(std::iter::repeat_n(1, ones));
            out.push(CycleType::new(parts).representative());
        }
    }
    out
}

fn common_degree(generators: &[Permutation], n: usize) -> Result<()> {
    match generators.iter().find(|g| g.len() != n) {
        Some(g) => Err(Error::InvalidInput(format!("generators act on {} and {} points", n, g.len()))),
        None => Ok(()),
    }
}

/// Orbit partition of `{0, .., n-1}` under the generated group, classes
/// sorted and ordered by their least point.
pub fn vertex_orbits(generators: &[Permutation], n: usize) -> Result<Vec<Vec<usize>>> {
    common_degree(generators, n)?;
    let mut uf = UnionFind::new(n);
    for g in generators {
        for x in 0..n {
            uf.union(x, g.apply(x));
        }
    }
    Ok(uf.classes())
}

/// Order of the subgroup of `S_n` generated by `generators`.
pub fn group_order(generators: &[Permutation], n: usize) -> Result<u128> {
    common_degree(generators, n)?;
    Ok(StabChain::new(n, generators).order())
}

/// Generators, order, and vertex orbits of a permutation group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDescriptor {
    pub generators: Vec<Permutation>,
    pub order: u128,
    pub vertex_orbits: Vec<Vec<usize>>,
}

impl GroupDescriptor {
    pub fn new(generators: Vec<Permutation>, n: usize) -> Result<GroupDescriptor> {
        let order = group_order(&generators, n)?;
        let vertex_orbits = vertex_orbits(&generators, n)?;
        Ok(GroupDescriptor { generators, order, vertex_orbits })
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        // smaller root wins so the representative is the class minimum
        if ra < rb {
            self.parent[rb] = ra;
        } else if rb < ra {
            self.parent[ra] = rb;
        }
    }

    pub(crate) fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
        for x in 0..n {
            let r = self.find(x);
            by_root[r].push(x);
        }
        by_root.into_iter().filter(|c| !c.is_empty()).collect()
    }
}

/// Stabilizer chain with base `0, 1, .., n-1` (deterministic Schreier-Sims).
///
/// A strong generator belongs to level `k` when it fixes `0..k` pointwise.
/// `transversal[k][p]` maps `k` to `p` for every `p` in the orbit of `k`.
struct StabChain {
    n: usize,
    gens: Vec<Img>,
    first_moved: Vec<usize>,
    transversal: Vec<Vec<Option<Img>>>,
    orbit: Vec<Vec<usize>>,
    checked: Vec<HashSet<(usize, usize)>>,
}

type Img = Vec<u8>;

fn compose(a: &[u8], b: &[u8]) -> Img {
    a.iter().map(|&x| b[x as usize]).collect()
}

fn invert(a: &[u8]) -> Img {
    let mut inv = vec![0u8; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x as usize] = i as u8;
    }
    inv
}

impl StabChain {
    fn new(n: usize, generators: &[Permutation]) -> StabChain {
        assert!(n <= MAX_VERTICES);
        let id: Img = (0..n as u8).collect();
        let mut chain = StabChain {
            n,
            gens: Vec::new(),
            first_moved: Vec::new(),
            transversal: (0..n)
                .map(|k| {
                    let mut t = vec![None; n];
                    t[k] = Some(id.clone());
                    t
                })
                .collect(),
            orbit: (0..n).map(|k| vec![k]).collect(),
            checked: vec![HashSet::new(); n],
        };
        for g in generators {
            let img: Img = g.images().iter().map(|&x| x as u8).collect();
            chain.push_gen(img);
        }
        chain.close();
        chain
    }

    fn push_gen(&mut self, g: Img) {
        if let Some(m) = g.iter().enumerate().position(|(i, &x)| i != x as usize) {
            self.gens.push(g);
            self.first_moved.push(m);
        }
    }

    /// Sifts `g` through levels `k..`; returns the residue when it is not a
    /// member of the represented group.
    fn sift(&self, mut g: Img, k: usize) -> Option<Img> {
        for level in k..self.n {
            let p = g[level] as usize;
            match &self.transversal[level][p] {
                Some(u) => g = compose(&g, &invert(u)),
                None => return Some(g),
            }
        }
        None
    }

    fn extend_orbit(&mut self, k: usize) {
        let mut i = 0;
        while i < self.orbit[k].len() {
            let p = self.orbit[k][i];
            for s in 0..self.gens.len() {
                if self.first_moved[s] < k {
                    continue;
                }
                let q = self.gens[s][p] as usize;
                if self.transversal[k][q].is_none() {
                    let u = compose(self.transversal[k][p].as_ref().expect("orbit point"), &self.gens[s]);
                    self.transversal[k][q] = Some(u);
                    self.orbit[k].push(q);
                }
            }
            i += 1;
        }
    }

    fn close(&mut self) {
        let mut level = self.n as isize - 1;
        'levels: while level >= 0 {
            let k = level as usize;
            self.extend_orbit(k);
            for i in 0..self.orbit[k].len() {
                let p = self.orbit[k][i];
                for s in 0..self.gens.len() {
                    if self.first_moved[s] < k || !self.checked[k].insert((p, s)) {
                        continue;
                    }
                    let gen = &self.gens[s];
                    let up = self.transversal[k][p].as_ref().expect("orbit point");
                    let uq = self.transversal[k][gen[p] as usize].as_ref().expect("orbit closed");
                    let schreier = compose(&compose(up, gen), &invert(uq));
                    if let Some(residue) = self.sift(schreier, k + 1) {
                        self.push_gen(residue);
                        level = *self.first_moved.last().expect("residue is not the identity") as isize;
                        continue 'levels;
                    }
                }
            }
            level -= 1;
        }
    }

    fn order(&self) -> u128 {
        self.orbit.iter().map(|o| o.len() as u128).product()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn census_generator() -> Permutation {
        Permutation::from_cycles(&[vec![0, 1, 2, 3], vec![4, 5, 6, 7], vec![8, 9]], 10).unwrap()
    }

    /// Closure by breadth-first multiplication; only for small groups.
    fn brute_order(gens: &[Permutation], n: usize) -> u128 {
        let mut seen = BTreeSet::new();
        let mut stack = vec![Permutation::identity(n)];
        seen.insert(Permutation::identity(n));
        while let Some(x) = stack.pop() {
            for g in gens {
                let y = x.then(g);
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        seen.len() as u128
    }

    #[test]
    fn from_cycles_examples() {
        let g = census_generator();
        assert_eq!(g.images(), &[1, 2, 3, 0, 5, 6, 7, 4, 9, 8]);
        assert!(Permutation::from_cycles(&[], 5).unwrap().is_identity());
        assert_eq!(Permutation::from_cycles(&[vec![0, 1]], 2).unwrap().images(), &[1, 0]);
        assert!(Permutation::from_cycles(&[vec![0, 1], vec![1, 2]], 3).is_err());
        assert!(Permutation::from_cycles(&[vec![0, 3]], 3).is_err());
    }

    #[test]
    fn cycle_notation_round_trip() {
        let g = Permutation::parse_cycles("(1,2,3,4)(5,6,7,8)(9,10)", 10).unwrap();
        assert_eq!(g, census_generator());
        assert_eq!(g.to_string(), "(1,2,3,4)(5,6,7,8)(9,10)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert!(Permutation::parse_cycles("(1,2", 3).is_err());
        assert!(Permutation::parse_cycles("(0,1)", 3).is_err());
        assert!(Permutation::parse_cycles("", 3).unwrap().is_identity());
    }

    #[test]
    fn element_order_examples() {
        assert_eq!(element_order(&census_generator()), 4);
        assert_eq!(element_order(&Permutation::identity(10)), 1);
        let p = Permutation::from_cycles(&[vec![0, 1, 2], vec![3, 4]], 5).unwrap();
        assert_eq!(element_order(&p), 6);
    }

    #[test]
    fn pair_orbits_examples() {
        let po = pair_orbits(&census_generator());
        assert_eq!(po.len(), 13);
        let mut sizes: Vec<usize> = po.classes.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, [vec![1], vec![2; 2], vec![4; 10]].concat());
        assert_eq!(po.classes.iter().map(Vec::len).sum::<usize>(), 45);
        assert_eq!(pair_orbits(&Permutation::identity(4)).len(), 6);
        let swap = Permutation::from_cycles(&[vec![0, 1]], 2).unwrap();
        assert_eq!(pair_orbits(&swap).classes, vec![vec![Edge::new(0, 1)]]);
    }

    #[test]
    fn burnside_count_for_census_generator() {
        let g = census_generator();
        let fixed = |p: &Permutation| {
            let mut c = 0;
            for u in 0..10 {
                for v in u + 1..10 {
                    if Edge::new(p.apply(u), p.apply(v)) == Edge::new(u, v) {
                        c += 1;
                    }
                }
            }
            c
        };
        let counts: Vec<usize> = (0..4).map(|i| fixed(&g.pow(i))).collect();
        assert_eq!(counts, vec![45, 1, 5, 1]);
        assert_eq!(counts.iter().sum::<usize>() / 4, pair_orbits(&g).len());
    }

    #[test]
    fn order4_representatives_examples() {
        let reps = order4_representatives(10);
        let types: Vec<Vec<usize>> = reps.iter().map(|p| p.cycle_type().parts().to_vec()).collect();
        assert_eq!(
            types,
            vec![
                vec![4, 4, 2],
                vec![4, 4, 1, 1],
                vec![4, 2, 2, 2],
                vec![4, 2, 2, 1, 1],
                vec![4, 2, 1, 1, 1, 1],
                vec![4, 1, 1, 1, 1, 1, 1],
            ]
        );
        assert_eq!(reps[0], census_generator());
        assert!(reps.iter().all(|p| p.order() == 4));
        assert_eq!(order4_representatives(4).len(), 1);
        assert!(order4_representatives(3).is_empty());
    }

    #[test]
    fn group_order_examples() {
        assert_eq!(group_order(&[census_generator()], 10).unwrap(), 4);
        let t = Permutation::from_cycles(&[vec![0, 1]], 4).unwrap();
        let c = Permutation::from_cycles(&[vec![0, 1, 2, 3]], 4).unwrap();
        assert_eq!(group_order(&[t, c], 4).unwrap(), 24);
        assert_eq!(group_order(&[], 7).unwrap(), 1);
        assert!(group_order(&[Permutation::identity(3), Permutation::identity(4)], 3).is_err());
    }

    #[test]
    fn group_order_matches_closure() {
        let cases: Vec<Vec<Permutation>> = vec![
            vec![Permutation::from_cycles(&[vec![0, 1, 2, 3, 4]], 6).unwrap(),
                 Permutation::from_cycles(&[vec![1, 4], vec![2, 3]], 6).unwrap()],
            vec![Permutation::from_cycles(&[vec![0, 1], vec![2, 3]], 6).unwrap(),
                 Permutation::from_cycles(&[vec![0, 2], vec![4, 5]], 6).unwrap()],
            vec![Permutation::from_cycles(&[vec![0, 1, 2]], 6).unwrap(),
                 Permutation::from_cycles(&[vec![2, 3, 4, 5]], 6).unwrap()],
            vec![Permutation::from_cycles(&[vec![0, 1, 2, 3, 4, 5, 6]], 7).unwrap(),
                 Permutation::from_cycles(&[vec![1, 2, 4], vec![3, 6, 5]], 7).unwrap()],
        ];
        for gens in cases {
            let n = gens[0].len();
            assert_eq!(group_order(&gens, n).unwrap(), brute_order(&gens, n));
        }
    }

    #[test]
    fn large_symmetric_group_order() {
        let t = Permutation::from_cycles(&[vec![0, 1]], 32).unwrap();
        let c = Permutation::from_cycles(&[(0..32).collect()], 32).unwrap();
        let expected: u128 = (1..=32u128).product();
        assert_eq!(group_order(&[t, c], 32).unwrap(), expected);
    }

    #[test]
    fn vertex_orbits_examples() {
        assert_eq!(
            vertex_orbits(&[census_generator()], 10).unwrap(),
            vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7], vec![8, 9]]
        );
        assert_eq!(vertex_orbits(&[Permutation::identity(3)], 3).unwrap(), vec![vec![0], vec![1], vec![2]]);
        let c5 = Permutation::from_cycles(&[vec![0, 1, 2, 3, 4]], 5).unwrap();
        assert_eq!(vertex_orbits(&[c5], 5).unwrap(), vec![vec![0, 1, 2, 3, 4]]);
    }
}
