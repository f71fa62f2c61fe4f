//! The census scan.
//!
//! A graph with an automorphism `s` is a union of orbits of `<s>` on vertex
//! pairs, so scanning every union of pair orbits of one representative per
//! conjugacy class of order-4 permutations meets every isomorphism class of
//! graphs admitting an order-4 automorphism. Keeping those whose full group
//! has order exactly 4 gives the graphs with `Aut = <s>`, cyclic of order 4.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::autgroup::{automorphism_group_bounded, canonical_string};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, MAX_VERTICES};
use crate::perm::{element_order, order4_representatives, pair_orbits, CycleType, PairOrbitPartition, Permutation};

/// Parameters of a census scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    pub n: usize,
    pub target_order: u128,
    /// `None` scans every order-4 cycle type on `n` points.
    pub cycle_types: Option<Vec<CycleType>>,
    pub parallel_chunks: usize,
    /// Largest number of pair orbits (so `2^cap` candidates) a scan accepts.
    pub max_pair_classes: usize,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig { n: 10, target_order: 4, cycle_types: None, parallel_chunks: 64, max_pair_classes: 30 }
    }
}

impl ScanConfig {
    fn validate(&self) -> Result<()> {
        if self.n > MAX_VERTICES {
            return Err(Error::SizeLimit(self.n));
        }
        if self.target_order == 0 {
            return Err(Error::InvalidInput("target order must be at least 1".into()));
        }
        if self.parallel_chunks == 0 {
            return Err(Error::InvalidInput("parallel_chunks must be at least 1".into()));
        }
        Ok(())
    }
}

/// One isomorphism class found by the scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusClass {
    pub canonical: String,
    #[serde(skip)]
    pub witness: Graph,
    /// The scanned permutation; it fixes `witness`.
    pub generator: Permutation,
    /// Union of pair orbits of `generator` that forms `witness`.
    pub mask: u64,
}

/// Canonically deduplicated census, sorted by canonical string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyResult {
    pub n: usize,
    pub target_order: u128,
    pub classes: Vec<CensusClass>,
    pub per_cycle_type_counts: BTreeMap<CycleType, usize>,
}

impl FamilyResult {
    pub fn canonical_strings(&self) -> Vec<&str> {
        self.classes.iter().map(|c| c.canonical.as_str()).collect()
    }

    pub fn index_of(&self, canonical: &str) -> Option<usize> {
        self.classes.binary_search_by(|c| c.canonical.as_str().cmp(canonical)).ok()
    }
}

/// Per-class neighbourhood contributions, so a candidate is an OR of rows.
struct OrbitRows {
    n: usize,
    rows: Vec<[u32; MAX_VERTICES]>,
}

impl OrbitRows {
    fn new(n: usize, orbits: &PairOrbitPartition) -> OrbitRows {
        let rows = orbits
            .classes
            .iter()
            .map(|class| {
                let mut r = [0u32; MAX_VERTICES];
                for e in class {
                    r[e.u] |= 1 << e.v;
                    r[e.v] |= 1 << e.u;
                }
                r
            })
            .collect();
        OrbitRows { n, rows }
    }

    fn graph(&self, mask: u64) -> Graph {
        let mut adj = [0u32; MAX_VERTICES];
        let mut m = mask;
        while m != 0 {
            let k = m.trailing_zeros() as usize;
            m &= m - 1;
            for (a, r) in adj.iter_mut().zip(&self.rows[k]).take(self.n) {
                *a |= r;
            }
        }
        Graph::from_rows_unchecked(self.n, &adj)
    }
}

/// Two vertices with equal neighbourhoods apart from each other; swapping
/// them is an automorphism.
fn has_twins(g: &Graph) -> bool {
    let n = g.n();
    for u in 0..n {
        let nu = g.neighbors(u);
        for v in u + 1..n {
            if nu & !(1 << v) == g.neighbors(v) & !(1 << u) {
                return true;
            }
        }
    }
    false
}

/// What a scan over `sigma` can decide without a full search.
#[derive(Clone, Copy)]
struct OrderFilter {
    target: u128,
    sigma_order: u128,
    /// No power of `sigma` is a transposition.
    twins_reject: bool,
}

impl OrderFilter {
    fn new(sigma: &Permutation, target: u128) -> OrderFilter {
        let sigma_order = element_order(sigma);
        let no_transposition = (1..sigma_order as usize).all(|i| {
            let mut parts = sigma.pow(i).cycle_type().parts().to_vec();
            parts.retain(|&p| p > 1);
            parts != [2]
        });
        OrderFilter { target, sigma_order, twins_reject: no_transposition && target < 2 * sigma_order }
    }

    /// True when `|Aut g| = target` for a graph invariant under `sigma`.
    fn passes(&self, g: &Graph) -> bool {
        if !self.target.is_multiple_of(self.sigma_order) {
            return false;
        }
        // twins give a transposition outside <sigma>, so |Aut| >= 2 |sigma|
        if self.twins_reject && has_twins(g) {
            return false;
        }
        automorphism_group_bounded(g, self.target).is_some_and(|a| a.order == self.target)
    }
}

type Hits = BTreeMap<String, (u64, Graph)>;

fn merge(mut a: Hits, b: Hits) -> Hits {
    for (k, (mask, g)) in b {
        match a.get(&k) {
            Some(&(m, _)) if m <= mask => {}
            _ => {
                a.insert(k, (mask, g));
            }
        }
    }
    a
}

fn scan_hits(sigma: &Permutation, cfg: &ScanConfig) -> Result<(PairOrbitPartition, Hits)> {
    cfg.validate()?;
    if sigma.len() != cfg.n {
        return Err(Error::InvalidInput(format!("generator acts on {} points, scan is for n = {}", sigma.len(), cfg.n)));
    }
    let filter = OrderFilter::new(sigma, cfg.target_order);
    let orbits = pair_orbits(sigma);
    let k = orbits.len();
    if k > cfg.max_pair_classes.min(63) {
        return Err(Error::ScanTooLarge { classes: k, cap: cfg.max_pair_classes.min(63) });
    }
    let rows = OrbitRows::new(cfg.n, &orbits);
    let total: u64 = 1 << k;
    let chunks = (cfg.parallel_chunks as u64).min(total);
    let hits = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = total * c / chunks;
            let hi = total * (c + 1) / chunks;
            let mut local = Hits::new();
            for mask in lo..hi {
                let g = rows.graph(mask);
                if filter.passes(&g) {
                    local = merge(local, Hits::from([(canonical_string(&g), (mask, g))]));
                }
            }
            local
        })
        .reduce(Hits::new, merge);
    Ok((orbits, hits))
}

/// Every union of pair orbits of `sigma` whose automorphism group has order
/// `cfg.target_order`, one per isomorphism class, sorted by canonical string.
pub fn scan_sigma(sigma: &Permutation, cfg: &ScanConfig) -> Result<Vec<(String, Graph)>> {
    let (_, hits) = scan_hits(sigma, cfg)?;
    Ok(hits.into_iter().map(|(k, (_, g))| (k, g)).collect())
}

/// Number of candidate graphs a scan over `sigma` visits.
pub fn candidate_count(sigma: &Permutation) -> u64 {
    1u64 << pair_orbits(sigma).len()
}

/// Union of [`scan_sigma`] over the selected order-4 representatives.
pub fn enumerate_family(cfg: &ScanConfig) -> Result<FamilyResult> {
    cfg.validate()?;
    let reps: Vec<Permutation> = match &cfg.cycle_types {
        None => order4_representatives(cfg.n),
        Some(types) => {
            let mut out = Vec::new();
            for t in types {
                if t.degree() != cfg.n {
                    return Err(Error::InvalidInput(format!("cycle type {t} does not act on {} points", cfg.n)));
                }
                out.push(t.representative());
            }
            out
        }
    };
    let mut merged: BTreeMap<String, CensusClass> = BTreeMap::new();
    let mut per_cycle_type_counts = BTreeMap::new();
    for sigma in reps {
        let (_, hits) = scan_hits(&sigma, cfg)?;
        per_cycle_type_counts.insert(sigma.cycle_type(), hits.len());
        for (canonical, (mask, witness)) in hits {
            merged.entry(canonical.clone()).or_insert(CensusClass {
                canonical,
                witness,
                generator: sigma.clone(),
                mask,
            });
        }
    }
    Ok(FamilyResult {
        n: cfg.n,
        target_order: cfg.target_order,
        classes: merged.into_values().collect(),
        per_cycle_type_counts,
    })
}

/// Pairs `(i, j)`, `i < j`, of classes that are complements of each other.
pub fn complement_pairs(f: &FamilyResult) -> Result<Vec<(usize, usize)>> {
    if f.classes.is_empty() {
        return Err(Error::InvalidInput("empty census".into()));
    }
    let mut pairs = Vec::new();
    for (i, class) in f.classes.iter().enumerate() {
        let co = canonical_string(&class.witness.complement());
        let j = f
            .index_of(&co)
            .ok_or_else(|| Error::CensusInconsistency(format!("complement of {} is not in the census", class.canonical)))?;
        if j == i {
            return Err(Error::CensusInconsistency(format!("{} is self-complementary", class.canonical)));
        }
        if i < j {
            pairs.push((i, j));
        }
    }
    let mut covered: Vec<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    covered.sort_unstable();
    covered.dedup();
    if covered.len() != f.classes.len() || pairs.len() * 2 != f.classes.len() {
        return Err(Error::CensusInconsistency("complement relation is not a perfect matching".into()));
    }
    Ok(pairs)
}

/// Per-class outcome of [`verify_structure_claim`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZonePattern {
    pub canonical: String,
    /// One character per intra-orbit pair class, `1` when its pairs are edges.
    pub pattern: String,
    /// Edge set of the chosen witness.
    pub witness_mask: u64,
    /// How many distinct cross-orbit patterns the class realises.
    pub cross_patterns: usize,
}

/// Result of checking that the census differs only inside the orbits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub statement: String,
    pub generator: String,
    /// Intra-orbit pair classes in pattern order, 1-indexed labels.
    pub zones: Vec<Vec<String>>,
    /// Cross-orbit pair classes, 1-indexed labels.
    pub cross_classes: Vec<Vec<String>>,
    /// Cross-orbit classes present in every chosen witness, `None` if no
    /// common choice exists.
    pub common_cross_pattern: Option<String>,
    pub classes: Vec<ZonePattern>,
    pub verified: bool,
}

fn bits_string(mask: u64, indices: &[usize]) -> String {
    indices.iter().map(|&k| if mask >> k & 1 == 1 { '1' } else { '0' }).collect()
}

fn labels(class: &[Edge]) -> Vec<String> {
    class.iter().map(Edge::to_string).collect()
}

/// Checks that every census class has a witness fixed by the common
/// generator such that all witnesses share the same edges between distinct
/// vertex orbits of the generator. They then differ only in pairs inside an
/// orbit (for `(1,2,3,4)(5,6,7,8)(9,10)`: inside `{1..4}`, inside `{5..8}`,
/// and the pair `9-10`).
pub fn verify_structure_claim(f: &FamilyResult) -> Result<StructureReport> {
    let first = f.classes.first().ok_or_else(|| Error::InvalidInput("empty census".into()))?;
    let sigma = first.generator.clone();
    if f.classes.iter().any(|c| c.generator != sigma) {
        return Err(Error::InvalidInput("census witnesses do not share one generator".into()));
    }
    let orbits = pair_orbits(&sigma);
    let vertex_cycle: Vec<usize> = {
        let mut id = vec![0; sigma.len()];
        for (c, cycle) in sigma.cycles().iter().enumerate() {
            for &v in cycle {
                id[v] = c;
            }
        }
        id
    };
    let (intra, cross): (Vec<usize>, Vec<usize>) =
        (0..orbits.len()).partition(|&k| vertex_cycle[orbits.classes[k][0].u] == vertex_cycle[orbits.classes[k][0].v]);
    let intra_mask: u64 = intra.iter().map(|&k| 1u64 << k).sum();

    let cfg = ScanConfig { n: f.n, target_order: f.target_order, cycle_types: None, ..ScanConfig::default() };
    let rows = OrbitRows::new(f.n, &orbits);
    let filter = OrderFilter::new(&sigma, f.target_order);
    let total: u64 = 1 << orbits.len();
    if orbits.len() > cfg.max_pair_classes {
        return Err(Error::ScanTooLarge { classes: orbits.len(), cap: cfg.max_pair_classes });
    }
    // every sigma-invariant representative of every census class
    let members: Vec<(usize, u64)> = (0..total)
        .into_par_iter()
        .filter_map(|mask| {
            let g = rows.graph(mask);
            if !filter.passes(&g) {
                return None;
            }
            f.index_of(&canonical_string(&g)).map(|i| (i, mask))
        })
        .collect();
    let mut cross_sets: Vec<BTreeSet<u64>> = vec![BTreeSet::new(); f.classes.len()];
    for &(i, mask) in &members {
        cross_sets[i].insert(mask & !intra_mask);
    }
    let common = cross_sets
        .iter()
        .skip(1)
        .fold(cross_sets[0].clone(), |acc, s| acc.intersection(s).copied().collect::<BTreeSet<u64>>());
    let chosen = common.iter().next().copied();
    let classes = f
        .classes
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let witness_mask = match chosen {
                Some(p) => members
                    .iter()
                    .filter(|&&(j, m)| j == i && m & !intra_mask == p)
                    .map(|&(_, m)| m)
                    .min()
                    .expect("class realises the common pattern"),
                None => c.mask,
            };
            ZonePattern {
                canonical: c.canonical.clone(),
                pattern: bits_string(witness_mask, &intra),
                witness_mask,
                cross_patterns: cross_sets[i].len(),
            }
        })
        .collect();
    Ok(StructureReport {
        statement: format!(
            "every class has a witness invariant under {sigma} and all witnesses agree on every pair joining two \
             different orbits of that permutation"
        ),
        generator: sigma.to_string(),
        zones: intra.iter().map(|&k| labels(&orbits.classes[k])).collect(),
        cross_classes: cross.iter().map(|&k| labels(&orbits.classes[k])).collect(),
        common_cross_pattern: chosen.map(|p| bits_string(p, &cross)),
        classes,
        verified: chosen.is_some() && cross_sets.iter().all(|s| !s.is_empty()),
    })
}

/// Edge set of the union of pair orbits selected by `mask`.
pub fn orbit_union(sigma: &Permutation, mask: u64) -> Graph {
    OrbitRows::new(sigma.len(), &pair_orbits(sigma)).graph(mask)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twins_detected() {
        use crate::graph::named::*;
        assert!(has_twins(&complete(3)));
        assert!(has_twins(&star(2)));
        assert!(!has_twins(&cycle(5)));
    }

    #[test]
    fn n4_census_is_empty() {
        let cfg = ScanConfig { n: 4, ..ScanConfig::default() };
        let f = enumerate_family(&cfg).unwrap();
        assert!(f.classes.is_empty());
    }

    #[test]
    fn scan_cap_is_enforced() {
        let sigma = CycleType::new(vec![4, 1, 1, 1, 1, 1, 1]).representative();
        let cfg = ScanConfig { max_pair_classes: 20, ..ScanConfig::default() };
        assert_eq!(scan_sigma(&sigma, &cfg), Err(Error::ScanTooLarge { classes: 23, cap: 20 }));
    }

    #[test]
    fn config_validation() {
        let sigma = CycleType::new(vec![4, 4, 2]).representative();
        let bad = ScanConfig { parallel_chunks: 0, ..ScanConfig::default() };
        assert!(scan_sigma(&sigma, &bad).is_err());
        let wrong_n = ScanConfig { n: 9, ..ScanConfig::default() };
        assert!(scan_sigma(&sigma, &wrong_n).is_err());
        let wrong_type = ScanConfig { cycle_types: Some(vec![CycleType::new(vec![4, 4])]), ..ScanConfig::default() };
        assert!(enumerate_family(&wrong_type).is_err());
    }

    #[test]
    fn candidate_counts() {
        assert_eq!(candidate_count(&CycleType::new(vec![4, 4, 2]).representative()), 8192);
        assert_eq!(candidate_count(&CycleType::new(vec![4, 1, 1, 1, 1, 1, 1]).representative()), 1 << 23);
    }
}
