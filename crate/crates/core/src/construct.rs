//! The clique-boost construction and everything built on top of it:
//! automorphism lifting, boost iteration, bases for complete inputs, Cayley
//! gadget realization of arbitrary finite groups, and the verified
//! unbounded-clique family builder.

use std::fmt;

use crate::aut::{aut_group, is_automorphism};
use crate::clique::max_clique;
use crate::error::{Error, Result};
use crate::graph::{complete_graph, empty_graph, path_graph, Graph, VertexSet};
use crate::group::{group_from_spec, groups_isomorphic, GroupSpec, NamedFamily, DEFAULT_ISO_CAP};
use crate::perm::{PermGroup, Permutation, DEFAULT_CLOSURE_CAP};

/// Witness of one boost step: the V1/V2 partition of the boosted vertex set
/// and the perfect matching between them. Labeling is fixed: V1 = 0..n keeps
/// the base labels, V2 = n..2n is the added clique, vertex v is matched to
/// v + n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoostCertificate {
    pub n: usize,
    pub v1: VertexSet,
    pub v2: VertexSet,
    pub matching: Vec<(usize, usize)>,
}

impl BoostCertificate {
    pub fn for_base(n: usize) -> BoostCertificate {
        BoostCertificate {
            n,
            v1: VertexSet::range(0, n),
            v2: VertexSet::range(n, 2 * n),
            matching: (0..n).map(|v| (v, v + n)).collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n={}\n", self.n);
        for (u, v) in &self.matching {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Adds a disjoint clique on n new vertices and a perfect matching to a
/// non-complete n-vertex graph. The automorphism group is unchanged and the
/// clique number of the result is n.
pub fn clique_boost(g: &Graph) -> Result<(Graph, BoostCertificate)> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooSmallToBoost);
    }
    if g.is_complete() {
        return Err(Error::CompleteInput);
    }
    let mut boosted = Graph::new(2 * n)?;
    for (u, v) in g.edges() {
        boosted.add_edge(u, v).unwrap();
    }
    for u in n..2 * n {
        for v in (u + 1)..2 * n {
            boosted.add_edge(u, v).unwrap();
        }
    }
    for v in 0..n {
        boosted.add_edge(v, v + n).unwrap();
    }
    Ok((boosted, BoostCertificate::for_base(n)))
}

/// The unique automorphism of the boosted graph restricting to `psi` on V1:
/// it agrees with `psi` there and maps v + n to psi(v) + n.
pub fn lift_automorphism(cert: &BoostCertificate, psi: &Permutation) -> Result<Permutation> {
    if psi.degree() != cert.n {
        return Err(Error::DegreeMismatch(cert.n, psi.degree()));
    }
    let n = cert.n;
    let mut images = vec![0usize; 2 * n];
    for v in 0..n {
        images[v] = psi.apply(v);
        images[v + n] = psi.apply(v) + n;
    }
    Permutation::from_images(images)
        .map_err(|_| Error::BadCertificate("lift produced a non-bijection".into()))
}

/// Applies `clique_boost` k times; k = 0 returns the input unchanged.
pub fn iterate_boost(g: &Graph, k: usize) -> Result<Graph> {
    let mut g = g.clone();
    for _ in 0..k {
        g = clique_boost(&g)?.0;
    }
    Ok(g)
}

/// The 6-vertex path with an extra edge between its second and fourth
/// vertices; the smallest standard asymmetric connected graph used here to
/// realize the trivial group.
pub fn asymmetric_six() -> Graph {
    Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 3)]).unwrap()
}

/// A non-complete graph with the same (abstract) automorphism group as `g`:
/// non-complete inputs pass through, K_n becomes the edgeless graph on n
/// vertices for n >= 2, and K_1 (or K_0) becomes the asymmetric 6-vertex
/// graph.
pub fn corollary_base(g: &Graph) -> Graph {
    if !g.is_complete() {
        g.clone()
    } else if g.n() >= 2 {
        empty_graph(g.n())
    } else {
        asymmetric_six()
    }
}

/// A connected graph whose automorphism group is abstractly isomorphic to the
/// specified group. Symmetric groups map to complete graphs; groups of order
/// 1 and 2 map to fixed small graphs; everything else goes through a Cayley
/// gadget construction that is validated with the automorphism solver before
/// being returned.
pub fn realize_group(spec: &GroupSpec) -> Result<Graph> {
    let group = group_from_spec(spec)?;
    if let GroupSpec::Named {
        family: NamedFamily::Symmetric,
        parameter,
    } = spec
    {
        return Ok(complete_graph(*parameter));
    }
    match group.order {
        1 => return Ok(asymmetric_six()),
        2 => return Ok(path_graph(3)),
        _ => {}
    }
    let g = cayley_gadget_graph(&group)?;
    let aut = aut_group(&g)?;
    let matches = if group.order <= DEFAULT_ISO_CAP && aut.order <= DEFAULT_ISO_CAP {
        groups_isomorphic(&aut, &group)?
    } else {
        aut.order == group.order
    };
    if !matches {
        return Err(Error::ValidationFailed(format!(
            "gadget graph has automorphism group of order {}, wanted {}",
            aut.order, group.order
        )));
    }
    Ok(g)
}

/// Replaces every arc g -> g*s of the Cayley graph by an asymmetric gadget:
/// a 2-vertex path whose internal vertices carry pendant tails of lengths
/// 2i-1 and 2i, where i is the 1-based generator index. Tail lengths encode
/// both the generator and the arc direction.
fn cayley_gadget_graph(group: &PermGroup) -> Result<Graph> {
    let elements = group.elements(DEFAULT_CLOSURE_CAP)?;
    let index_of = |p: &Permutation| elements.iter().position(|q| q == p).unwrap();
    let gens: Vec<&Permutation> = group
        .generators
        .iter()
        .filter(|p| !p.is_identity())
        .collect();
    if gens.is_empty() {
        return Err(Error::BadGroupSpec("no non-identity generators".into()));
    }
    let k = elements.len();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut next = k; // fresh vertex counter
    let tail = |edges: &mut Vec<(usize, usize)>, next: &mut usize, from: usize, len: usize| {
        let mut prev = from;
        for _ in 0..len {
            edges.push((prev, *next));
            prev = *next;
            *next += 1;
        }
    };
    for (i, s) in gens.iter().enumerate() {
        let tail_a = 2 * (i + 1) - 1;
        let tail_b = 2 * (i + 1);
        for (gi, g) in elements.iter().enumerate() {
            let h = index_of(&g.compose(s).unwrap());
            let p1 = next;
            let p2 = next + 1;
            next += 2;
            edges.push((gi, p1));
            edges.push((p1, p2));
            edges.push((p2, h));
            tail(&mut edges, &mut next, p1, tail_a);
            tail(&mut edges, &mut next, p2, tail_b);
        }
    }
    Graph::from_edges(next, &edges)
}

/// Verification trace for one boost step, following the proof obligations:
/// the certificate structure, setwise preservation of V2, validity of the
/// restrictions to V1, order equality, and the homomorphism law of the lift.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub base_order: usize,
    pub boosted_order: usize,
    pub partition_preserved: bool,
    pub restrictions_valid: bool,
    pub lift_homomorphism_ok: bool,
    pub verdict: bool,
    pub reasons: Vec<String>,
}

impl VerificationReport {
    pub fn to_kv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("base_order={}\n", self.base_order));
        out.push_str(&format!("boosted_order={}\n", self.boosted_order));
        out.push_str(&format!("partition_preserved={}\n", self.partition_preserved));
        out.push_str(&format!("restrictions_valid={}\n", self.restrictions_valid));
        out.push_str(&format!("lift_homomorphism_ok={}\n", self.lift_homomorphism_ok));
        out.push_str(&format!("verdict={}\n", if self.verdict { "pass" } else { "fail" }));
        out
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "|Aut(base)|    = {}", self.base_order)?;
        writeln!(f, "|Aut(boosted)| = {}", self.boosted_order)?;
        writeln!(f, "V2 preserved setwise:     {}", self.partition_preserved)?;
        writeln!(f, "restrictions to V1 valid: {}", self.restrictions_valid)?;
        writeln!(f, "lift is a homomorphism:   {}", self.lift_homomorphism_ok)?;
        write!(f, "verdict: {}", if self.verdict { "pass" } else { "fail" })?;
        for r in &self.reasons {
            write!(f, "\n  reason: {r}")?;
        }
        Ok(())
    }
}

/// Max number of automorphism pairs sampled for the homomorphism-law check.
const LIFT_SAMPLE_CAP: usize = 4096;

/// Checks one boost step end to end. `cert` must describe `boosted`'s size.
pub fn verify_boost(base: &Graph, boosted: &Graph, cert: &BoostCertificate) -> Result<VerificationReport> {
    let n = cert.n;
    if base.n() != n || boosted.n() != 2 * n {
        return Err(Error::BadCertificate(format!(
            "certificate for n={n} does not fit base n={} and boosted n={}",
            base.n(),
            boosted.n()
        )));
    }
    if cert.v1 != VertexSet::range(0, n)
        || cert.v2 != VertexSet::range(n, 2 * n)
        || cert.matching != (0..n).map(|v| (v, v + n)).collect::<Vec<_>>()
    {
        return Err(Error::BadCertificate("labeling does not follow the fixed convention".into()));
    }

    let mut reasons = Vec::new();

    // (a) structural checks against base and boosted
    let v1_graph = boosted.induced_subgraph(&cert.v1)?;
    if v1_graph != *base {
        reasons.push("V1 does not induce the base graph".into());
    }
    if !boosted.induced_subgraph(&cert.v2)?.is_complete() {
        reasons.push("V2 does not induce a complete graph".into());
    }
    for &(u, v) in &cert.matching {
        if !boosted.has_edge(u, v) {
            reasons.push(format!("matching edge {u}-{v} missing"));
        }
    }
    for u in 0..n {
        for v in n..2 * n {
            if boosted.has_edge(u, v) != (v == u + n) {
                reasons.push(format!("cross edge {u}-{v} violates the matching"));
            }
        }
    }
    let structural_ok = reasons.is_empty();

    let base_aut = aut_group(base)?;
    let boosted_aut = aut_group(boosted)?;

    // (b) every generator of Aut(boosted) maps V2 onto V2
    let mut partition_preserved = true;
    for p in &boosted_aut.generators {
        if cert.v2.members().iter().any(|&v| !cert.v2.contains(p.apply(v))) {
            partition_preserved = false;
            reasons.push(format!("generator {p} does not preserve V2"));
        }
    }

    // (c) restrictions to V1 are automorphisms of the base
    let mut restrictions_valid = partition_preserved;
    if partition_preserved {
        for p in &boosted_aut.generators {
            let restricted = Permutation::from_images((0..n).map(|v| p.apply(v)).collect())
                .map_err(|_| Error::BadCertificate("restriction is not a bijection of V1".into()))?;
            if !is_automorphism(base, &restricted)? {
                restrictions_valid = false;
                reasons.push(format!("restriction of {p} is not a base automorphism"));
            }
        }
    }

    // (d) order equality
    if base_aut.order != boosted_aut.order {
        reasons.push(format!(
            "order mismatch: {} vs {}",
            base_aut.order, boosted_aut.order
        ));
    }

    // (e) lift lands in Aut(boosted) and is multiplicative on sampled pairs
    let mut lift_ok = true;
    let elements = base_aut.elements(DEFAULT_CLOSURE_CAP)?;
    let mut sampled = 0usize;
    'outer: for a in &elements {
        for b in &elements {
            if sampled >= LIFT_SAMPLE_CAP {
                break 'outer;
            }
            sampled += 1;
            let la = lift_automorphism(cert, a)?;
            let lb = lift_automorphism(cert, b)?;
            if !is_automorphism(boosted, &la)? {
                lift_ok = false;
                reasons.push(format!("lift of {a} is not a boosted automorphism"));
                break 'outer;
            }
            let lhs = lift_automorphism(cert, &a.compose(b)?)?;
            if lhs != la.compose(&lb)? {
                lift_ok = false;
                reasons.push(format!("lift not multiplicative on ({a}, {b})"));
                break 'outer;
            }
        }
    }

    let verdict = structural_ok
        && partition_preserved
        && restrictions_valid
        && base_aut.order == boosted_aut.order
        && lift_ok;
    Ok(VerificationReport {
        base_order: base_aut.order,
        boosted_order: boosted_aut.order,
        partition_preserved,
        restrictions_valid,
        lift_homomorphism_ok: lift_ok,
        verdict,
        reasons,
    })
}

/// Result of the family pipeline: the final boost verification plus the
/// clique and group checks requested by the caller.
#[derive(Clone, Debug)]
pub struct FamilyReport {
    pub boost: VerificationReport,
    pub clique_target: usize,
    pub omega: usize,
    pub aut_order: usize,
    pub group_order: usize,
    /// `None` when the group order is beyond the abstract-isomorphism cap;
    /// order equality is the fallback check in that case.
    pub group_isomorphic: Option<bool>,
    pub verdict: bool,
}

impl FamilyReport {
    pub fn to_kv(&self) -> String {
        let mut out = self.boost.to_kv();
        out.push_str(&format!("clique_target={}\n", self.clique_target));
        out.push_str(&format!("omega={}\n", self.omega));
        out.push_str(&format!("aut_order={}\n", self.aut_order));
        out.push_str(&format!("group_order={}\n", self.group_order));
        match self.group_isomorphic {
            Some(b) => out.push_str(&format!("group_isomorphic={b}\n")),
            None => out.push_str("group_isomorphic=order-only\n"),
        }
        out.push_str(&format!(
            "family_verdict={}\n",
            if self.verdict { "pass" } else { "fail" }
        ));
        out
    }
}

impl fmt::Display for FamilyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.boost)?;
        writeln!(f, "clique number  = {} (target {})", self.omega, self.clique_target)?;
        writeln!(f, "|Aut|          = {} (group order {})", self.aut_order, self.group_order)?;
        match self.group_isomorphic {
            Some(b) => writeln!(f, "group isomorphic: {b}")?,
            None => writeln!(f, "group isomorphic: not checked (order equality only)")?,
        }
        write!(f, "family verdict: {}", if self.verdict { "pass" } else { "fail" })
    }
}

/// Builds a connected graph with clique number at least `k` whose
/// automorphism group is the specified group, then verifies every claim with
/// the solvers.
pub fn unbounded_family(spec: &GroupSpec, k: usize) -> Result<(Graph, FamilyReport)> {
    if k < 1 {
        return Err(Error::ValidationFailed("clique target must be at least 1".into()));
    }
    let group = group_from_spec(spec)?;
    let realized = realize_group(spec)?;
    let mut g = corollary_base(&realized);
    // omega(boost(G)) = |V(G)|, so grow the base until one more boost
    // reaches the clique target, then let the solver confirm.
    while g.n() < k {
        g = clique_boost(&g)?.0;
    }
    let (boosted, cert) = clique_boost(&g)?;
    let boost_report = verify_boost(&g, &boosted, &cert)?;
    let omega = max_clique(&boosted).len();
    let aut = aut_group(&boosted)?;
    let group_isomorphic = if group.order <= DEFAULT_ISO_CAP && aut.order <= DEFAULT_ISO_CAP {
        Some(groups_isomorphic(&aut, &group)?)
    } else {
        None
    };
    let verdict = boost_report.verdict
        && omega >= k
        && boosted.is_connected()
        && aut.order == group.order
        && group_isomorphic.unwrap_or(true);
    let report = FamilyReport {
        boost: boost_report,
        clique_target: k,
        omega,
        aut_order: aut.order,
        group_order: group.order,
        group_isomorphic,
        verdict,
    };
    Ok((boosted, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::aut_brute_force;
    use crate::clique::omega_brute;
    use crate::graph::cycle_graph;
    use crate::group::NamedFamily;

    fn isomorphic_small(a: &Graph, b: &Graph) -> bool {
        // exhaustion over all vertex maps, for n <= 8
        assert_eq!(a.n(), b.n());
        let n = a.n();
        let mut images: Vec<usize> = (0..n).collect();
        fn go(a: &Graph, b: &Graph, images: &mut Vec<usize>, k: usize) -> bool {
            let n = a.n();
            if k == n {
                return (0..n).all(|u| (u + 1..n).all(|v| a.has_edge(u, v) == b.has_edge(images[u], images[v])));
            }
            for i in k..n {
                images.swap(k, i);
                if go(a, b, images, k + 1) {
                    images.swap(k, i);
                    return true;
                }
                images.swap(k, i);
            }
            false
        }
        go(a, b, &mut images, 0)
    }

    #[test]
    fn boost_of_two_isolated_vertices_is_p4() {
        let (boosted, cert) = clique_boost(&empty_graph(2)).unwrap();
        assert_eq!(boosted.n(), 4);
        assert!(isomorphic_small(&boosted, &path_graph(4)));
        assert_eq!(aut_brute_force(&boosted).unwrap().order, 2);
        assert_eq!(cert.matching, vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn boost_of_p3() {
        let (boosted, _) = clique_boost(&path_graph(3)).unwrap();
        assert_eq!((boosted.n(), boosted.edge_count()), (6, 8));
        assert_eq!(aut_brute_force(&boosted).unwrap().order, 2);
        assert_eq!(omega_brute(&boosted).unwrap(), 3);
    }

    #[test]
    fn boost_of_c5() {
        let (boosted, _) = clique_boost(&cycle_graph(5).unwrap()).unwrap();
        assert_eq!((boosted.n(), boosted.edge_count()), (10, 20));
        assert_eq!(aut_group(&boosted).unwrap().order, 10);
        assert_eq!(max_clique(&boosted).len(), 5);
        assert!(boosted.is_connected());
        assert!(!boosted.is_complete());
    }

    #[test]
    fn boost_rejects_complete_and_tiny_inputs() {
        assert!(matches!(clique_boost(&complete_graph(3)), Err(Error::CompleteInput)));
        assert!(matches!(clique_boost(&complete_graph(1)), Err(Error::TooSmallToBoost)));
        assert!(matches!(clique_boost(&empty_graph(0)), Err(Error::TooSmallToBoost)));
    }

    #[test]
    fn lift_examples() {
        let cert = BoostCertificate::for_base(5);
        let id5 = Permutation::identity(5);
        assert_eq!(lift_automorphism(&cert, &id5).unwrap(), Permutation::identity(10));

        let c5 = cycle_graph(5).unwrap();
        let (boosted, cert) = clique_boost(&c5).unwrap();
        let rot = Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap();
        let lifted = lift_automorphism(&cert, &rot).unwrap();
        assert!(is_automorphism(&boosted, &lifted).unwrap());

        let p3 = path_graph(3);
        let (boosted, cert) = clique_boost(&p3).unwrap();
        let swap = Permutation::from_cycles(3, &[&[0, 2]]).unwrap();
        let lifted = lift_automorphism(&cert, &swap).unwrap();
        assert_eq!(lifted.apply(3), 5);
        assert_eq!(lifted.apply(5), 3);
        assert!(is_automorphism(&boosted, &lifted).unwrap());

        assert!(lift_automorphism(&cert, &Permutation::identity(4)).is_err());
    }

    #[test]
    fn iterate_boost_sizes() {
        let c5 = cycle_graph(5).unwrap();
        assert_eq!(iterate_boost(&c5, 0).unwrap(), c5);
        assert_eq!(iterate_boost(&c5, 1).unwrap().n(), 10);
        let g = iterate_boost(&c5, 3).unwrap();
        assert_eq!(g.n(), 40);
    }

    #[test]
    fn asymmetric_six_properties() {
        let g = asymmetric_six();
        assert_eq!((g.n(), g.edge_count()), (6, 6));
        assert!(g.is_connected());
        assert_eq!(aut_brute_force(&g).unwrap().order, 1);
    }

    #[test]
    fn corollary_base_cases() {
        assert_eq!(corollary_base(&complete_graph(4)), empty_graph(4));
        assert_eq!(corollary_base(&complete_graph(1)), asymmetric_six());
        let c5 = cycle_graph(5).unwrap();
        assert_eq!(corollary_base(&c5), c5);
    }

    #[test]
    fn realize_small_groups() {
        let g = realize_group(&GroupSpec::named(NamedFamily::Trivial, 0)).unwrap();
        assert_eq!(g, asymmetric_six());
        assert_eq!(aut_group(&g).unwrap().order, 1);

        let g = realize_group(&GroupSpec::named(NamedFamily::Cyclic, 3)).unwrap();
        let aut = aut_group(&g).unwrap();
        assert_eq!(aut.order, 3);
        let z3 = group_from_spec(&GroupSpec::named(NamedFamily::Cyclic, 3)).unwrap();
        assert!(groups_isomorphic(&aut, &z3).unwrap());
        assert!(g.is_connected());
    }

    #[test]
    fn realize_s3_from_cayley_table() {
        // S_3 multiplication table in a fixed element order
        let s3 = group_from_spec(&GroupSpec::named(NamedFamily::Symmetric, 3)).unwrap();
        let elements = s3.elements(10).unwrap();
        let table: Vec<Vec<usize>> = elements
            .iter()
            .map(|a| {
                elements
                    .iter()
                    .map(|b| elements.iter().position(|c| c == &a.compose(b).unwrap()).unwrap())
                    .collect()
            })
            .collect();
        let g = realize_group(&GroupSpec::CayleyTable(table)).unwrap();
        let aut = aut_group(&g).unwrap();
        assert_eq!(aut.order, 6);
        assert!(groups_isomorphic(&aut, &s3).unwrap());
    }

    #[test]
    fn verify_boost_passes_on_real_boosts() {
        for base in [cycle_graph(5).unwrap(), empty_graph(2)] {
            let (boosted, cert) = clique_boost(&base).unwrap();
            let report = verify_boost(&base, &boosted, &cert).unwrap();
            assert!(report.verdict, "{report}");
            assert_eq!(report.base_order, report.boosted_order);
        }
    }

    #[test]
    fn verify_boost_fails_on_mutation() {
        let base = cycle_graph(5).unwrap();
        let (boosted, cert) = clique_boost(&base).unwrap();
        // rebuild with the matching edge 0-5 deleted
        let edges: Vec<(usize, usize)> = boosted
            .edges()
            .into_iter()
            .filter(|&e| e != (0, 5))
            .collect();
        let mutated = Graph::from_edges(10, &edges).unwrap();
        let report = verify_boost(&base, &mutated, &cert).unwrap();
        assert!(!report.verdict);
        assert!(!report.reasons.is_empty());
    }

    #[test]
    fn family_pipeline_small() {
        let (g, report) = unbounded_family(&GroupSpec::named(NamedFamily::Cyclic, 3), 10).unwrap();
        assert!(report.verdict, "{report}");
        assert!(report.omega >= 10);
        assert_eq!(report.aut_order, 3);
        assert!(g.is_connected());

        let (_, report) = unbounded_family(&GroupSpec::named(NamedFamily::Trivial, 0), 7).unwrap();
        assert!(report.verdict, "{report}");
        assert!(report.omega >= 7);
        assert_eq!(report.aut_order, 1);
    }

    #[test]
    fn family_for_s2_starts_from_the_edgeless_pair() {
        let (g, report) = unbounded_family(&GroupSpec::named(NamedFamily::Symmetric, 2), 2).unwrap();
        assert!(report.verdict, "{report}");
        assert_eq!(report.omega, 2);
        assert!(isomorphic_small(&g, &path_graph(4)));
    }
}
