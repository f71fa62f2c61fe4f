//! Every invariant of a graph in one record.

use serde::Serialize;

use crate::autgroup::{automorphism_group, AutResult};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::basic::{degree_stats, girth, is_eulerian, metric, Length};
use crate::invariants::charpoly::{char_poly, IntPolynomial};
use crate::invariants::coloring::{clique_number, is_proper_coloring, optimal_coloring};
use crate::invariants::connectivity::connectivity;
use crate::invariants::core::{core_with_retraction, CoreKind};
use crate::invariants::hamilton::{hamiltonian_cycle, is_hamiltonian_cycle};
use crate::invariants::planarity::{check_embedding, planarity};
use crate::invariants::transitivity::transitivity;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantProfile {
    pub n: usize,
    pub edge_count: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub degree_sequence: Vec<usize>,
    pub girth: Length,
    pub clique_number: usize,
    pub chromatic_number: usize,
    /// `None` below two vertices.
    pub vertex_connectivity: Option<usize>,
    pub edge_connectivity: Option<usize>,
    pub diameter: Length,
    pub radius: Length,
    pub planar: bool,
    pub eulerian: bool,
    /// `None` below three vertices.
    pub hamiltonian: Option<bool>,
    pub hamiltonian_cycle: Option<Vec<usize>>,
    pub vertex_transitive: bool,
    pub edge_transitive: bool,
    pub distance_transitive: bool,
    pub aut_order: u128,
    pub vertex_orbit_sizes: Vec<usize>,
    pub core_kind: CoreKind,
    pub core_order: usize,
    pub char_poly: IntPolynomial,
}

/// Profile of `g`, with its internal consistency checked.
pub fn profile(g: &Graph) -> Result<InvariantProfile> {
    profile_with_group(g, &automorphism_group(g))
}

/// As [`profile`], reusing an automorphism group already computed for `g`.
pub fn profile_with_group(g: &Graph, aut: &AutResult) -> Result<InvariantProfile> {
    let n = g.n();
    let degrees = degree_stats(g)?;
    let (chi, coloring) = optimal_coloring(g);
    if !is_proper_coloring(g, &coloring) {
        return Err(Error::InvariantViolation("optimal colouring is not proper".into()));
    }
    let conn = if n >= 2 { Some(connectivity(g)?) } else { None };
    let m = metric(g);
    let plan = planarity(g);
    if let Some(rot) = &plan.rotation {
        if !check_embedding(g, rot) {
            return Err(Error::InvariantViolation("planar embedding fails the Euler check".into()));
        }
    }
    let cycle = if n >= 3 { Some(hamiltonian_cycle(g)?) } else { None };
    if let Some(Some(c)) = &cycle {
        if !is_hamiltonian_cycle(g, c) {
            return Err(Error::InvariantViolation("Hamiltonian certificate is not a spanning cycle".into()));
        }
    }
    let t = transitivity(g, aut);
    let core = core_with_retraction(g);
    let mut vertex_orbit_sizes: Vec<usize> = aut.vertex_orbits.iter().map(Vec::len).collect();
    vertex_orbit_sizes.sort_unstable_by(|a, b| b.cmp(a));

    let p = InvariantProfile {
        n,
        edge_count: g.edge_count(),
        min_degree: degrees.min,
        max_degree: degrees.max,
        degree_sequence: degrees.sequence,
        girth: girth(g),
        clique_number: clique_number(g),
        chromatic_number: chi,
        vertex_connectivity: conn.map(|c| c.vertex),
        edge_connectivity: conn.map(|c| c.edge),
        diameter: m.diameter,
        radius: m.radius,
        planar: plan.planar,
        eulerian: is_eulerian(g),
        hamiltonian: cycle.as_ref().map(Option::is_some),
        hamiltonian_cycle: cycle.flatten(),
        vertex_transitive: t.vertex,
        edge_transitive: t.edge,
        distance_transitive: t.distance,
        aut_order: aut.order,
        vertex_orbit_sizes,
        core_kind: CoreKind::classify(g, &core.core),
        core_order: core.core.n(),
        char_poly: char_poly(g)?,
    };
    check_consistency(g, &p)?;
    Ok(p)
}

/// The relations every profile must satisfy.
pub fn check_consistency(g: &Graph, p: &InvariantProfile) -> Result<()> {
    let fail = |what: &str| Err(Error::InvariantViolation(what.to_string()));
    if let (Some(k), Some(l)) = (p.vertex_connectivity, p.edge_connectivity) {
        if !(k <= l && l <= p.min_degree) {
            return fail("vertex connectivity <= edge connectivity <= minimum degree");
        }
    }
    if p.chromatic_number < p.clique_number {
        return fail("chromatic number >= clique number");
    }
    if let (Length::Finite(r), Length::Finite(d)) = (p.radius, p.diameter) {
        if !(r <= d && d <= 2 * r) {
            return fail("radius <= diameter <= 2 radius");
        }
    }
    if p.eulerian && p.degree_sequence.iter().any(|d| d % 2 == 1) {
        return fail("Eulerian graphs have even degrees");
    }
    if p.planar && p.n >= 3 && p.edge_count > 3 * p.n - 6 {
        return fail("planar graphs have at most 3n - 6 edges");
    }
    if p.char_poly.degree() != Some(p.n) || !p.char_poly.is_monic() {
        return fail("characteristic polynomial is monic of degree n");
    }
    let c = |k: usize| if p.n >= k { p.char_poly.coeff(p.n - k) } else { 0 };
    if c(1) != 0 || c(2) != -(p.edge_count as i128) {
        return fail("characteristic polynomial encodes trace and edge count");
    }
    if p.core_order > p.n || p.core_order < p.clique_number.min(p.n) {
        return fail("clique number <= core order <= n");
    }
    if p.vertex_orbit_sizes.iter().sum::<usize>() != p.n {
        return fail("vertex orbits partition the vertex set");
    }
    debug_assert_eq!(p.edge_count, g.edge_count());
    Ok(())
}
