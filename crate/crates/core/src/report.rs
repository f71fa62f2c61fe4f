//! The verification report: every class profiled, every statement of the
//! proposition checked against the measured values.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::autgroup::automorphism_group;
use crate::enumerate::{complement_pairs, verify_structure_claim, FamilyResult, StructureReport};
use crate::error::Result;
use crate::graph::Graph;
use crate::graph6;
use crate::invariants::basic::Length;
use crate::invariants::charpoly::IntPolynomial;
use crate::invariants::core::CoreKind;
use crate::invariants::planarity::kuratowski_minor;
use crate::invariants::profile::{profile_with_group, InvariantProfile};
use crate::perm::CycleType;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    /// The claim could not be evaluated.
    #[serde(rename = "FAIL")]
    Fail,
    /// Measured values contradict the claim.
    #[serde(rename = "REFUTED")]
    Refuted,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Refuted => "REFUTED",
        })
    }
}

/// A class named by the evidence, with the value measured on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassValue {
    pub canonical: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub summary: String,
    /// Offending classes for a refuted claim; the witnesses for an existence claim.
    pub classes: Vec<ClassValue>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropositionCheck {
    pub item: u8,
    pub claim: String,
    pub verdict: Verdict,
    pub evidence: Evidence,
}

/// Check of one of the two described graphs, or of the remark on the others.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseCheck {
    pub case: String,
    pub claim: String,
    pub verdict: Verdict,
    pub evidence: Evidence,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassRecord {
    pub index: usize,
    pub canonical_g6: String,
    /// Witness labeled so that `generator` is an automorphism.
    pub witness_g6: String,
    /// Cycle notation, 1-indexed.
    pub generator: String,
    pub profile: InvariantProfile,
    pub complement_partner: Option<usize>,
    pub zone_pattern: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub census_id: String,
    pub n: usize,
    pub target_order: u128,
    pub per_cycle_type_counts: BTreeMap<String, usize>,
    pub classes: Vec<ClassRecord>,
    pub proposition_checks: Vec<PropositionCheck>,
    pub case_checks: Vec<CaseCheck>,
    pub structure: Option<StructureReport>,
}

impl CensusReport {
    pub fn verdicts(&self) -> impl Iterator<Item = Verdict> + '_ {
        self.proposition_checks.iter().map(|c| c.verdict).chain(self.case_checks.iter().map(|c| c.verdict))
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts().all(|v| v == Verdict::Pass)
    }

    /// 0 when everything passes, 2 when a claim is refuted, 1 when a claim
    /// could not be evaluated.
    pub fn exit_code(&self) -> i32 {
        match self.verdicts().max() {
            None | Some(Verdict::Pass) => 0,
            Some(Verdict::Refuted) => 2,
            Some(Verdict::Fail) => 1,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    /// One line per check.
    pub fn summary(&self) -> String {
        let mut out = format!("census {} : {} classes\n", self.census_id, self.classes.len());
        for c in &self.proposition_checks {
            let _ = writeln!(out, "{:>2}. {:<7} {}  [{}]", c.item, c.verdict.to_string(), c.claim, c.evidence.summary);
        }
        for c in &self.case_checks {
            let _ = writeln!(out, "  {:<7} {}: {}  [{}]", c.verdict.to_string(), c.case, c.claim, c.evidence.summary);
        }
        out
    }
}

/// Hex SHA-256 of the sorted canonical strings joined by newlines.
pub fn census_id<S: AsRef<str>>(canonical: &[S]) -> String {
    let mut sorted: Vec<&str> = canonical.iter().map(AsRef::as_ref).collect();
    sorted.sort_unstable();
    hex::encode(Sha256::digest(sorted.join("\n").as_bytes()))
}

/// The census file: canonical graph6 strings, sorted, one per line.
pub fn census_file(f: &FamilyResult) -> String {
    let mut lines: Vec<&str> = f.canonical_strings();
    lines.sort_unstable();
    lines.iter().map(|s| format!("{s}\n")).collect()
}

/// `(x^2 - 2)^2 (x^3 - 2x^2 - 8x - 4)(x^3 + 2x^2 - 4x - 4)`, the characteristic
/// polynomial stated for the planar member of the census.
pub fn planar_member_char_poly() -> IntPolynomial {
    let a = IntPolynomial::from_descending(&[1, 0, -2]);
    let b = IntPolynomial::from_descending(&[1, -2, -8, -4]);
    let c = IntPolynomial::from_descending(&[1, 2, -4, -4]);
    a.checked_pow(2)
        .and_then(|a2| a2.checked_mul(&b))
        .and_then(|p| p.checked_mul(&c))
        .expect("small coefficients")
}

struct Ctx<'a> {
    f: &'a FamilyResult,
    profiles: &'a [InvariantProfile],
}

impl Ctx<'_> {
    /// Per-class claim: `measure` returns whether the class satisfies it and the value shown.
    fn each(
        &self,
        item: u8,
        claim: &str,
        measure: impl Fn(&InvariantProfile) -> (Option<bool>, String),
    ) -> PropositionCheck {
        let mut offenders = Vec::new();
        let mut undecided = Vec::new();
        let mut values: BTreeMap<String, usize> = BTreeMap::new();
        for (c, p) in self.f.classes.iter().zip(self.profiles) {
            let (ok, value) = measure(p);
            *values.entry(value.clone()).or_default() += 1;
            match ok {
                Some(true) => {}
                Some(false) => offenders.push(ClassValue { canonical: c.canonical.clone(), value }),
                None => undecided.push(ClassValue { canonical: c.canonical.clone(), value }),
            }
        }
        let summary = values.iter().map(|(v, k)| format!("{v} x{k}")).collect::<Vec<_>>().join(", ");
        let verdict = if !offenders.is_empty() {
            Verdict::Refuted
        } else if !undecided.is_empty() {
            offenders = undecided;
            Verdict::Fail
        } else {
            Verdict::Pass
        };
        PropositionCheck { item, claim: claim.into(), verdict, evidence: Evidence { summary, classes: offenders } }
    }

    /// Family claim: exactly one class satisfies `pred`.
    fn exactly_one(&self, item: u8, claim: &str, what: &str, pred: impl Fn(&InvariantProfile) -> bool) -> PropositionCheck {
        let hits: Vec<ClassValue> = self
            .f
            .classes
            .iter()
            .zip(self.profiles)
            .filter(|(_, p)| pred(p))
            .map(|(c, p)| ClassValue { canonical: c.canonical.clone(), value: format!("{} edges", p.edge_count) })
            .collect();
        let verdict = if hits.len() == 1 { Verdict::Pass } else { Verdict::Refuted };
        let summary = format!("{} {what} class(es)", hits.len());
        PropositionCheck { item, claim: claim.into(), verdict, evidence: Evidence { summary, classes: hits } }
    }
}

fn in_range(x: usize, lo: usize, hi: usize) -> bool {
    (lo..=hi).contains(&x)
}

fn length_in(l: Length, lo: u32, hi: u32) -> bool {
    matches!(l, Length::Finite(x) if (lo..=hi).contains(&x))
}

fn opt(x: Option<usize>) -> String {
    x.map_or_else(|| "undefined".into(), |v| v.to_string())
}

/// Profiles every class and evaluates every claim.
pub fn build_report(f: &FamilyResult) -> Result<CensusReport> {
    let profiles: Vec<InvariantProfile> = f
        .classes
        .iter()
        .map(|c| profile_with_group(&c.witness, &automorphism_group(&c.witness)))
        .collect::<Result<_>>()?;
    let pairs = complement_pairs(f);
    let structure = verify_structure_claim(f).ok();

    let mut partner = vec![None; f.classes.len()];
    if let Ok(pairs) = &pairs {
        for &(a, b) in pairs {
            partner[a] = Some(b);
            partner[b] = Some(a);
        }
    }

    let classes = f
        .classes
        .iter()
        .zip(&profiles)
        .enumerate()
        .map(|(i, (c, p))| {
            let zone = structure.as_ref().map(|s| s.classes[i].pattern.clone());
            ClassRecord {
                index: i,
                canonical_g6: c.canonical.clone(),
                witness_g6: graph6::encode_string(&c.witness),
                generator: c.generator.to_string(),
                profile: p.clone(),
                complement_partner: partner[i],
                zone_pattern: zone,
            }
        })
        .collect();

    let ctx = Ctx { f, profiles: &profiles };
    let mut checks = Vec::new();

    // 1
    {
        let k = f.classes.len();
        let (verdict, summary, offenders) = match &pairs {
            Ok(pairs) if k == 12 && pairs.len() == 6 => {
                let sums: Vec<usize> =
                    pairs.iter().map(|&(a, b)| profiles[a].edge_count + profiles[b].edge_count).collect();
                let listed: Vec<String> = pairs.iter().map(|(a, b)| format!("{a}<->{b}")).collect();
                (Verdict::Pass, format!("{k} classes; complement pairs {}; edge sums {sums:?}", listed.join(" ")), vec![])
            }
            Ok(pairs) => (Verdict::Refuted, format!("{k} classes, {} complement pairs", pairs.len()), vec![]),
            Err(e) => (Verdict::Refuted, format!("{k} classes; {e}"), vec![]),
        };
        checks.push(PropositionCheck {
            item: 1,
            claim: "|F| = 12, forming 6 classes up to complementarity".into(),
            verdict,
            evidence: Evidence { summary, classes: offenders },
        });
    }
    checks.push(ctx.each(2, "18 <= |E| <= 27", |p| (Some(in_range(p.edge_count, 18, 27)), p.edge_count.to_string())));
    checks.push(ctx.each(3, "3 <= min degree <= 5 and 4 <= max degree <= 6", |p| {
        (
            Some(in_range(p.min_degree, 3, 5) && in_range(p.max_degree, 4, 6)),
            format!("({},{})", p.min_degree, p.max_degree),
        )
    }));
    checks.push(ctx.each(4, "three Aut-orbits of sizes 4, 4, 2", |p| {
        (Some(p.vertex_orbit_sizes == [4, 4, 2]), format!("{:?}", p.vertex_orbit_sizes))
    }));
    checks.push(ctx.each(5, "girth = 3", |p| (Some(p.girth == Length::Finite(3)), p.girth.to_string())));
    checks.push(ctx.each(6, "3 <= clique number <= 4", |p| {
        (Some(in_range(p.clique_number, 3, 4)), p.clique_number.to_string())
    }));
    checks.push(ctx.each(7, "core is K3, K4, or the graph itself", |p| {
        (Some(!matches!(p.core_kind, CoreKind::Other(_))), p.core_kind.to_string())
    }));
    checks.push(ctx.each(8, "3 <= vertex connectivity <= 5 and vertex connectivity = edge connectivity", |p| {
        let ok = match (p.vertex_connectivity, p.edge_connectivity) {
            (Some(k), Some(l)) => Some(k == l && in_range(k, 3, 5)),
            _ => None,
        };
        (ok, format!("({},{})", opt(p.vertex_connectivity), opt(p.edge_connectivity)))
    }));
    checks.push(ctx.each(9, "2 <= diameter <= 3 and radius = 2", |p| {
        (Some(length_in(p.diameter, 2, 3) && p.radius == Length::Finite(2)), format!("({},{})", p.diameter, p.radius))
    }));
    checks.push(ctx.each(10, "3 <= chromatic number <= 4", |p| {
        (Some(in_range(p.chromatic_number, 3, 4)), p.chromatic_number.to_string())
    }));
    {
        let mut c = ctx.exactly_one(11, "F contains exactly one planar graph", "planar", |p| p.planar);
        // nonplanar answers need a Kuratowski minor
        let missing: Vec<ClassValue> = f
            .classes
            .iter()
            .zip(&profiles)
            .filter(|(cl, p)| !p.planar && kuratowski_minor(&cl.witness).is_none())
            .map(|(cl, _)| ClassValue { canonical: cl.canonical.clone(), value: "no Kuratowski minor found".into() })
            .collect();
        if !missing.is_empty() && c.verdict == Verdict::Pass {
            c.verdict = Verdict::Fail;
            c.evidence.classes = missing;
        } else {
            c.evidence.summary.push_str("; every other class has a K5 or K3,3 minor");
        }
        checks.push(c);
    }
    checks.push(ctx.exactly_one(12, "F contains exactly one Eulerian graph", "Eulerian", |p| p.eulerian));
    checks.push(ctx.each(13, "Hamiltonian (certificate cycle validated)", |p| match (&p.hamiltonian, &p.hamiltonian_cycle) {
        (Some(true), Some(_)) => (Some(true), "validated cycle".into()),
        (Some(false), _) => (Some(false), "no Hamiltonian cycle".into()),
        _ => (None, "undefined".into()),
    }));
    checks.push(ctx.each(14, "not vertex, edge, or distance transitive", |p| {
        let t = [p.vertex_transitive, p.edge_transitive, p.distance_transitive];
        (Some(t.iter().all(|x| !x)), format!("{t:?}"))
    }));

    let case_checks = case_checks(f, &profiles, structure.as_ref());
    Ok(CensusReport {
        census_id: census_id(&f.canonical_strings()),
        n: f.n,
        target_order: f.target_order,
        per_cycle_type_counts: f.per_cycle_type_counts.iter().map(|(t, k)| (t.to_string(), *k)).collect(),
        classes,
        proposition_checks: checks,
        case_checks,
        structure,
    })
}

fn generator_claim(f: &FamilyResult, i: usize, p: &InvariantProfile) -> bool {
    let c = &f.classes[i];
    c.generator.cycle_type() == CycleType::new(vec![4, 4, 2])
        && c.witness.is_automorphism(c.generator.images())
        && c.generator.order() == p.aut_order
}

fn case_checks(f: &FamilyResult, profiles: &[InvariantProfile], structure: Option<&StructureReport>) -> Vec<CaseCheck> {
    let mut out = Vec::new();
    let record = |case: &str, claim: &str, ok: bool, summary: String, classes: Vec<ClassValue>| CaseCheck {
        case: case.into(),
        claim: claim.into(),
        verdict: if ok { Verdict::Pass } else { Verdict::Refuted },
        evidence: Evidence { summary, classes },
    };

    let planar: Vec<usize> = (0..profiles.len()).filter(|&i| profiles[i].planar).collect();
    let expected = planar_member_char_poly();
    match planar.as_slice() {
        [i] => {
            let p = &profiles[*i];
            let ok = p.core_kind == CoreKind::K3 && p.char_poly == expected && generator_claim(f, *i, p);
            let summary = format!("core {}, char poly {}, generator {}", p.core_kind, p.char_poly, f.classes[*i].generator);
            let class = vec![ClassValue { canonical: f.classes[*i].canonical.clone(), value: p.char_poly.to_string() }];
            out.push(record(
                "planar graph",
                &format!("Aut generated by a (4,4,2) permutation, core K3, characteristic polynomial {expected}"),
                ok,
                summary,
                class,
            ));
        }
        _ => out.push(record("planar graph", "a unique planar class", false, format!("{} planar classes", planar.len()), vec![])),
    }

    let min_edges = profiles.iter().map(|p| p.edge_count).min();
    let minimal: Vec<usize> = (0..profiles.len()).filter(|&i| Some(profiles[i].edge_count) == min_edges).collect();
    match minimal.as_slice() {
        [i] => {
            let p = &profiles[*i];
            let ok = p.edge_count == 18 && p.core_kind == CoreKind::SelfCore && generator_claim(f, *i, p);
            out.push(record(
                "minimal graph",
                "the class with fewest edges has 18 edges, is a core, Aut generated by a (4,4,2) permutation",
                ok,
                format!("{} edges, core {}, generator {}", p.edge_count, p.core_kind, f.classes[*i].generator),
                vec![ClassValue { canonical: f.classes[*i].canonical.clone(), value: p.edge_count.to_string() }],
            ));
        }
        _ => out.push(record("minimal graph", "a unique class with fewest edges", false, format!("{} classes", minimal.len()), vec![])),
    }

    match structure {
        Some(s) => out.push(record(
            "other graphs",
            &s.statement,
            s.verified,
            format!(
                "common cross-orbit pattern {}; {} distinct intra-orbit patterns",
                s.common_cross_pattern.as_deref().unwrap_or("none"),
                s.classes.iter().map(|z| &z.pattern).collect::<std::collections::BTreeSet<_>>().len()
            ),
            vec![],
        )),
        None => out.push(CaseCheck {
            case: "other graphs".into(),
            claim: "witnesses differ only inside the generator's orbits".into(),
            verdict: Verdict::Fail,
            evidence: Evidence { summary: "census witnesses do not share one generator".into(), classes: vec![] },
        }),
    }
    out
}

/// Aligned text table of profiles, one row per graph.
pub fn profile_table(rows: &[(String, InvariantProfile)]) -> String {
    let header = [
        "graph6", "n", "|E|", "min", "max", "girth", "omega", "chi", "kappa", "lambda", "diam", "rad", "planar",
        "euler", "hamil", "vt", "et", "dt", "|Aut|", "core",
    ];
    let yn = |b: bool| if b { "yes" } else { "no" }.to_string();
    let mut table: Vec<Vec<String>> = vec![header.iter().map(|s| s.to_string()).collect()];
    for (name, p) in rows {
        table.push(vec![
            name.clone(),
            p.n.to_string(),
            p.edge_count.to_string(),
            p.min_degree.to_string(),
            p.max_degree.to_string(),
            p.girth.to_string(),
            p.clique_number.to_string(),
            p.chromatic_number.to_string(),
            opt(p.vertex_connectivity),
            opt(p.edge_connectivity),
            p.diameter.to_string(),
            p.radius.to_string(),
            yn(p.planar),
            yn(p.eulerian),
            p.hamiltonian.map_or("-".into(), yn),
            yn(p.vertex_transitive),
            yn(p.edge_transitive),
            yn(p.distance_transitive),
            p.aut_order.to_string(),
            p.core_kind.to_string(),
        ]);
    }
    let widths: Vec<usize> = (0..header.len()).map(|j| table.iter().map(|r| r[j].len()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in &table {
        let cells: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// Canonical graph6 of each input graph.
pub fn canonical_lines(graphs: &[Graph]) -> Vec<String> {
    graphs.iter().map(crate::autgroup::canonical_string).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_id_ignores_order() {
        assert_eq!(census_id(&["b", "a"]), census_id(&["a", "b"]));
        assert_ne!(census_id(&["a"]), census_id(&["a", "b"]));
        assert_eq!(census_id::<&str>(&[]), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    }

    #[test]
    fn planar_member_polynomial_expansion() {
        let p = planar_member_char_poly();
        assert_eq!(p.degree(), Some(10));
        assert!(p.is_monic());
        // trace-free adjacency matrix: no x^9 term
        assert_eq!(p.coeff(9), 0);
        // (-2)^2 * (-4) * (-4)
        assert_eq!(p.coeff(0), 64);
    }

    #[test]
    fn verdict_ordering_drives_exit_code() {
        assert!(Verdict::Pass < Verdict::Fail && Verdict::Fail < Verdict::Refuted);
        assert_eq!(serde_json::to_string(&Verdict::Refuted).unwrap(), "\"REFUTED\"");
    }
}
