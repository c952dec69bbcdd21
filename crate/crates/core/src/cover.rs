//! Combined voltage graphs and their covering graphs.
//!
//! A combined voltage graph carries a voltage in `Z_m` on every dart (the
//! reverse dart carries the negated voltage) and a subgroup `ω(x)` of `Z_m`
//! on every vertex. Its cover has one vertex `(x, K)` per coset
//! `K ∈ Z_m / ω(x)`, and one edge `(x, K) -- (y, H)` for each base edge
//! `x -> y` of voltage `v` and each coset pair with `(K + v) ∩ H ≠ ∅`.
//!
//! Besides the lift itself this module builds the explicit base graph whose
//! cover is `F_2(K_n)` for even `n`, the map from its cover onto 2-subsets,
//! and cyclic quotients used to recover base graphs from automorphisms.

use std::ops::Range;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::algebra::{Coset, CyclicGroup, Permutation, Subgroup, VoltageGroup};
use crate::error::{Error, Result};
use crate::graph::{
    make_family, underlying_simple, DartId, EdgeId, EdgeRecord, Export, Family, GraphRecord,
    Multigraph, SimpleGraph, VertexId,
};
use crate::report::{Status, VerificationReport};
use crate::symmetry::{
    automorphisms_with, elements_of_order, is_automorphism, is_isomorphic_with, SearchConfig,
};
use crate::token::{choose, token_graph, KSubset};

pub use crate::report::VerificationReport as Report;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinedVoltageGraph {
    base: Multigraph,
    group: CyclicGroup,
    /// Indexed by dart.
    voltages: Vec<usize>,
    omega: Vec<Subgroup>,
}

impl CombinedVoltageGraph {
    /// `edge_voltages[e]` is the voltage of dart `2e`, i.e. read from the
    /// first endpoint given to [`Multigraph::add_edge`] to the second.
    pub fn new(
        base: Multigraph,
        group: CyclicGroup,
        edge_voltages: Vec<usize>,
        omega: Vec<Subgroup>,
    ) -> Result<Self> {
        if edge_voltages.len() != base.edge_count() {
            return Err(Error::InvalidParameter(format!(
                "{} voltages for {} edges",
                edge_voltages.len(),
                base.edge_count()
            )));
        }
        if omega.len() != base.vertex_count() {
            return Err(Error::InvalidParameter(format!(
                "{} subgroups for {} vertices",
                omega.len(),
                base.vertex_count()
            )));
        }
        if let Some(h) = omega.iter().find(|h| h.parent() != group) {
            return Err(Error::InvalidParameter(format!(
                "subgroup {h} does not belong to Z_{}",
                group.modulus()
            )));
        }
        let mut voltages = Vec::with_capacity(2 * edge_voltages.len());
        for &v in &edge_voltages {
            group.check(v)?;
            voltages.push(v);
            voltages.push(group.negate(v));
        }
        Ok(CombinedVoltageGraph {
            base,
            group,
            voltages,
            omega,
        })
    }

    /// Ordinary voltage graph: every `ω(x)` trivial.
    pub fn ordinary(
        base: Multigraph,
        group: CyclicGroup,
        edge_voltages: Vec<usize>,
    ) -> Result<Self> {
        let omega = vec![group.trivial_subgroup(); base.vertex_count()];
        Self::new(base, group, edge_voltages, omega)
    }

    pub fn base(&self) -> &Multigraph {
        &self.base
    }

    pub fn group(&self) -> CyclicGroup {
        self.group
    }

    pub fn voltage(&self, dart: DartId) -> usize {
        self.voltages[dart]
    }

    pub fn edge_voltage(&self, e: EdgeId) -> usize {
        self.voltages[2 * e]
    }

    pub fn omega(&self, x: VertexId) -> Subgroup {
        self.omega[x]
    }

    pub fn fiber_size(&self, x: VertexId) -> usize {
        self.omega[x].index()
    }

    pub fn cover_vertex_count(&self) -> usize {
        (0..self.base.vertex_count())
            .map(|x| self.fiber_size(x))
            .sum()
    }

    pub fn has_trivial_omega(&self) -> bool {
        self.omega.iter().all(Subgroup::is_trivial)
    }

    pub fn to_voltage_record(&self) -> VoltageGraphRecord {
        let rec = self.base.to_record();
        VoltageGraphRecord {
            vertices: rec.vertices,
            labels: rec.labels,
            group_order: self.group.modulus(),
            omega: self.omega.iter().map(Subgroup::size).collect(),
            edges: rec
                .edges
                .into_iter()
                .map(|e| VoltageEdgeRecord {
                    voltage: self.edge_voltage(e.id),
                    id: e.id,
                    u: e.u,
                    v: e.v,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VoltageEdgeRecord {
    pub id: usize,
    pub u: usize,
    pub v: usize,
    pub voltage: usize,
}

/// JSON form of a combined voltage graph. `omega[x]` is the order of `ω(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VoltageGraphRecord {
    pub vertices: usize,
    pub labels: Vec<String>,
    pub group_order: usize,
    pub omega: Vec<usize>,
    pub edges: Vec<VoltageEdgeRecord>,
}

impl Export for CombinedVoltageGraph {
    fn to_record(&self) -> GraphRecord {
        self.base.to_record()
    }

    fn edge_attributes(&self, record: &EdgeRecord) -> Option<String> {
        Some(format!("label=\"{}\"", self.edge_voltage(record.id)))
    }

    fn node_attributes(&self, v: usize) -> String {
        format!("label=\"{} | {}\"", self.base.label(v), self.omega[v])
    }

    fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_voltage_record()).expect("plain data serializes")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoverVertex {
    pub base_vertex: VertexId,
    pub coset: Coset,
}

/// A covering graph with its vertex labelling.
#[derive(Debug, Clone)]
pub struct Lift {
    pub graph: Multigraph,
    /// Cover vertices ordered by (base vertex, coset representative).
    pub vertices: Vec<CoverVertex>,
    /// Base edge each lifted edge came from.
    pub base_edge: Vec<EdgeId>,
    offsets: Vec<usize>,
    group: CyclicGroup,
}

impl Lift {
    pub fn fiber(&self, x: VertexId) -> Range<usize> {
        self.offsets[x]..self.offsets[x + 1]
    }

    pub fn index_of(&self, v: &CoverVertex) -> Option<usize> {
        let range = self.fiber(v.base_vertex);
        let idx = range.start + v.coset.representative();
        (idx < range.end && self.vertices[idx] == *v).then_some(idx)
    }

    /// The deck action `(x, K) -> (x, K + t)`.
    pub fn voltage_shift(&self, t: usize) -> Permutation {
        let images = self
            .vertices
            .iter()
            .map(|v| {
                let moved = CoverVertex {
                    base_vertex: v.base_vertex,
                    coset: v.coset.translate(t % self.group.modulus()),
                };
                self.index_of(&moved).expect("translate stays in the fiber")
            })
            .collect();
        Permutation::from_images(images).expect("translation is a bijection")
    }

    pub fn simple(&self) -> SimpleGraph {
        underlying_simple(&self.graph)
    }
}

/// Builds the covering graph.
pub fn lift(c: &CombinedVoltageGraph) -> Lift {
    let n = c.base.vertex_count();
    let mut offsets = Vec::with_capacity(n + 1);
    let mut vertices = Vec::new();
    offsets.push(0);
    for x in 0..n {
        for coset in c.omega[x].cosets() {
            vertices.push(CoverVertex {
                base_vertex: x,
                coset,
            });
        }
        offsets.push(vertices.len());
    }
    let labels = vertices
        .iter()
        .map(|v| format!("({},{})", c.base.label(v.base_vertex), v.coset))
        .collect();
    let mut graph = Multigraph::new(vertices.len())
        .with_labels(labels)
        .expect("one label per cover vertex");
    let mut base_edge = Vec::new();
    for (e, x, y) in c.base.edges() {
        let v = c.edge_voltage(e);
        for k in c.omega[x].cosets() {
            let shifted = k.translate(v);
            for h in c.omega[y].cosets() {
                if shifted.meets(&h) {
                    let a = offsets[x] + k.representative();
                    let b = offsets[y] + h.representative();
                    graph.add_edge(a, b).expect("cover ids in range");
                    base_edge.push(e);
                }
            }
        }
    }
    Lift {
        graph,
        vertices,
        base_edge,
        offsets,
        group: c.group,
    }
}

fn check_theorem1_n(n: usize) -> Result<()> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "the F_2(K_n) base graph needs an even n >= 4, got {n}"
        )));
    }
    if n > 62 {
        return Err(Error::InvalidParameter(format!(
            "n = {n} exceeds the 2-subset limit"
        )));
    }
    Ok(())
}

/// Base graph on `n/2` vertices over `Z_n` whose cover is `F_2(K_n)`.
///
/// Vertex `i - 1` is `x_i`. The fiber over `x_i` (`i < n/2`) is the set of
/// pairs at cyclic distance `i`; the fiber over `x_{n/2}` holds the
/// antipodal pairs, hence `ω(x_{n/2}) = {0, n/2}`. Edges:
/// - `e_{i,j}`, voltage 0, once per unordered pair `i < j`;
/// - a loop of voltage `i` at each `x_i` with `i < n/2`;
/// - for `i < j`: `e'_{i,j}`, `f_{i,j}`, `f'_{i,j}` with voltages `i`,
///   `n - j + i` and `n - j`.
pub fn theorem1_base(n: usize) -> Result<CombinedVoltageGraph> {
    check_theorem1_n(n)?;
    let half = n / 2;
    let group = CyclicGroup::new(n)?;
    let labels = (1..=half).map(|i| format!("x{i}")).collect();
    let mut base = Multigraph::new(half).with_labels(labels)?;
    let mut voltages = Vec::new();
    let mut edge = |u: usize, v: usize, volt: usize| {
        base.add_edge(u - 1, v - 1).expect("vertices in range");
        voltages.push(volt % n);
    };
    for i in 1..=half {
        if i < half {
            // voltage i walks along the distance-i pairs {p, p+i} -> {p+i, p+2i}
            edge(i, i, i);
        }
        for j in i + 1..=half {
            edge(i, j, 0);
            edge(i, j, i);
            edge(i, j, n - j + i);
            edge(i, j, n - j);
        }
    }
    let mut omega = vec![group.trivial_subgroup(); half];
    omega[half - 1] = group.subgroup(half)?;
    CombinedVoltageGraph::new(base, group, voltages, omega)
}

fn label_in_1_to_n(r: usize, n: usize) -> usize {
    match r % n {
        0 => n,
        s => s,
    }
}

/// The 2-subset of `{1..n}` assigned to a vertex of the `theorem1_base(n)` cover:
/// `(x_i, {j}) -> {1 + j, 1 + j + i}` and
/// `(x_{n/2}, {j, j + n/2}) -> {1 + j, 1 + j + n/2}`, residues taken in `{1..n}`.
pub fn phi(n: usize, v: &CoverVertex) -> Result<KSubset> {
    check_theorem1_n(n)?;
    let half = n / 2;
    let malformed = |why: &str| Error::MalformedCoverVertex(format!("{why} (n = {n})"));
    let i = v.base_vertex + 1;
    if i > half {
        return Err(malformed("base vertex out of range"));
    }
    let h = v.coset.subgroup();
    if h.parent().modulus() != n {
        return Err(malformed("coset of the wrong group"));
    }
    let expected_step = if i < half { n } else { half };
    if h.step() != expected_step {
        return Err(malformed("coset of the wrong subgroup"));
    }
    let j = v.coset.representative();
    let offset = if i < half { i } else { half };
    KSubset::from_members(&[
        label_in_1_to_n(1 + j, n),
        label_in_1_to_n(1 + j + offset, n),
    ])
}

pub fn verify_theorem1(n: usize) -> Result<VerificationReport> {
    verify_theorem1_with(n, &SearchConfig::default())
}

/// Runs the base construction for `n`, lifts it, and checks the cover against
/// `F_2(K_n)` through `phi` and through an independent isomorphism search.
pub fn verify_theorem1_with(n: usize, cfg: &SearchConfig) -> Result<VerificationReport> {
    check_theorem1_n(n)?;
    let pairs = choose(n, 2);
    if pairs > cfg.max_vertices {
        return Err(Error::Oversize {
            vertices: pairs,
            cap: cfg.max_vertices,
        });
    }
    let base = theorem1_base(n)?;
    let cover = lift(&base);
    let simple = cover.simple();
    let token = token_graph(&make_family(Family::Complete(n))?, 2)?;

    let mut report = VerificationReport::new(format!("theorem1 n={n}"));
    report
        .count("base_vertices", base.base().vertex_count())
        .count("base_edges", base.base().edge_count())
        .count("base_loops", base.base().loop_count())
        .count("cover_vertices", cover.vertices.len())
        .count("binomial_n_2", pairs)
        .count("lifted_edges", cover.graph.edge_count())
        .count("parallel_lifted_edges", cover.graph.parallel_excess())
        .count("simple_edges", simple.edge_count())
        .count("token_edges", token.graph.edge_count())
        .note(
            "loop_voltages",
            "one loop per x_i (i < n/2) with voltage i; voltage 1 only matches F_2(K_n) at i = 1",
        )
        .note(
            "multiplicity",
            "cover compared to F_2(K_n) as an underlying simple graph",
        );

    let fiber_sum: usize = (0..base.base().vertex_count())
        .map(|x| base.fiber_size(x))
        .sum();
    report.count("fiber_index_sum", fiber_sum);
    if cover.vertices.len() != pairs || fiber_sum != pairs {
        report.counterexample(
            "vertex_count",
            json!({ "cover": cover.vertices.len(), "fiber_sum": fiber_sum, "expected": pairs }),
        );
    }

    // phi as a map from cover indices to token-graph indices
    let mut map = Vec::with_capacity(cover.vertices.len());
    let mut hit = vec![false; token.graph.vertex_count()];
    let mut bijective = true;
    for v in &cover.vertices {
        let s = phi(n, v)?;
        let zero_based: Vec<usize> = s.members().iter().map(|m| m - 1).collect();
        let t = token
            .index_of(&KSubset::from_members(&zero_based)?)
            .expect("phi lands on 2-subsets of {1..n}");
        if std::mem::replace(&mut hit[t], true) {
            bijective = false;
            report.counterexample(
                "phi_not_injective",
                json!({ "cover_vertex": cover.graph.label(map.len()), "subset": s.to_string() }),
            );
        }
        map.push(t);
    }
    bijective &= hit.iter().all(|&h| h);
    report.witness("phi_bijective", bijective);
    if !bijective && report.counterexamples().count() == 0 {
        report.counterexample("phi_not_surjective", hit.iter().position(|&h| !h));
    }

    let mut preserved = simple.edge_count() == token.graph.edge_count();
    for (u, v) in simple.edges() {
        if !token.graph.has_edge(map[u], map[v]) {
            preserved = false;
            report.counterexample(
                "edge_not_preserved",
                json!([simple.label(u), simple.label(v)]),
            );
            break;
        }
    }
    if simple.edge_count() != token.graph.edge_count() {
        report.counterexample(
            "edge_count",
            json!({ "cover": simple.edge_count(), "token": token.graph.edge_count() }),
        );
    }
    report.witness("phi_isomorphism", preserved && bijective);

    let independent = is_isomorphic_with(&simple, &token.graph, cfg)?;
    report.witness("independent_isomorphism", independent.is_some());
    if independent.is_none() {
        report.counterexample("independent_isomorphism", "search found no isomorphism");
    }
    Ok(report)
}

/// A cyclic quotient of a graph together with the map that recovers it.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub voltage_graph: CombinedVoltageGraph,
    /// Least vertex of each orbit; base vertex `o` stands for orbit `o`.
    pub transversal: Vec<VertexId>,
    /// `cover_map[i]` is the vertex of the original graph that cover vertex `i`
    /// corresponds to: `(o, r + ω(o)) -> g^r(transversal[o])`.
    pub cover_map: Vec<VertexId>,
    /// Whether the lift, via `cover_map`, reproduces the original graph.
    pub verified: bool,
}

fn check_automorphism(x: &SimpleGraph, g: &Permutation) -> Result<()> {
    if g.len() != x.vertex_count() {
        return Err(Error::DomainMismatch(x.vertex_count(), g.len()));
    }
    if !is_automorphism(x, g) {
        return Err(Error::NotAutomorphism);
    }
    Ok(())
}

fn build_quotient(x: &SimpleGraph, g: &Permutation) -> Result<Quotient> {
    let order = g.order() as usize;
    let group = CyclicGroup::new(order)?;
    let orbits = g.cycles();
    let n = x.vertex_count();
    let mut orbit_of = vec![0; n];
    let mut exponent = vec![0; n];
    for (o, cycle) in orbits.iter().enumerate() {
        for (a, &v) in cycle.iter().enumerate() {
            orbit_of[v] = o;
            exponent[v] = a;
        }
    }

    let labels = orbits.iter().map(|c| x.label(c[0])).collect();
    let mut base = Multigraph::new(orbits.len()).with_labels(labels)?;
    let mut voltages = Vec::new();
    let omega: Vec<Subgroup> = orbits
        .iter()
        .map(|c| group.subgroup(c.len()))
        .collect::<Result<_>>()?;
    for (o, cycle) in orbits.iter().enumerate() {
        let t = cycle[0];
        let size_o = cycle.len();
        let mut classes: Vec<(usize, usize)> = Vec::new();
        for &w in x.neighbors(t) {
            let p = orbit_of[w];
            let b = exponent[w];
            let key = match p.cmp(&o) {
                std::cmp::Ordering::Less => continue,
                // translates of a loop come in pairs b, |O| - b
                std::cmp::Ordering::Equal => b.min(size_o - b),
                // the stabilizer of t shifts b by multiples of |O| modulo |P|
                std::cmp::Ordering::Greater => b % crate::algebra::gcd(size_o, orbits[p].len()),
            };
            classes.push((p, key));
        }
        classes.sort_unstable();
        classes.dedup();
        for (p, volt) in classes {
            base.add_edge(o, p)?;
            voltages.push(volt);
        }
    }
    let voltage_graph = CombinedVoltageGraph::new(base, group, voltages, omega)?;

    let cover = lift(&voltage_graph);
    let cover_map: Vec<VertexId> = cover
        .vertices
        .iter()
        .map(|v| orbits[v.base_vertex][v.coset.representative()])
        .collect();
    let simple = cover.simple();
    let verified = cover_map.len() == n
        && simple.edge_count() == x.edge_count()
        && simple
            .edges()
            .iter()
            .all(|&(u, v)| x.has_edge(cover_map[u], cover_map[v]));
    Ok(Quotient {
        voltage_graph,
        transversal: orbits.iter().map(|c| c[0]).collect(),
        cover_map,
        verified,
    })
}

/// Quotient of `x` by a semiregular automorphism `g`; `ω` is trivial.
pub fn quotient_free(x: &SimpleGraph, g: &Permutation) -> Result<Quotient> {
    check_automorphism(x, g)?;
    if !g.is_semiregular() {
        return Err(Error::NotFree);
    }
    build_quotient(x, g)
}

/// Quotient of `x` by any automorphism `g`. `ω` of each orbit is its
/// stabilizer in `Z_order(g)`.
pub fn quotient_cyclic(x: &SimpleGraph, g: &Permutation) -> Result<(Quotient, VerificationReport)> {
    check_automorphism(x, g)?;
    let q = build_quotient(x, g)?;
    let vg = &q.voltage_graph;
    let mut report = VerificationReport::new(format!("quotient by {g}"));
    let stabilizers: Vec<usize> = (0..vg.base().vertex_count())
        .map(|o| vg.omega(o).size())
        .collect();
    report
        .count("group_order", vg.group().modulus())
        .count("base_vertices", vg.base().vertex_count())
        .count("base_edges", vg.base().edge_count())
        .count("base_loops", vg.base().loop_count())
        .count("stabilizer_orders", &stabilizers)
        .witness("free", g.is_semiregular());
    if q.verified {
        report.witness("cover_map", &q.cover_map);
    } else {
        report.counterexample("cover_map", &q.cover_map);
    }
    Ok((q, report))
}

/// Families of star token graphs with conjectured quotient bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConjectureFamily {
    /// `F_k(K_{1,n})` with `n` odd and `k = (n+1)/2`, group `Z_{2n}`.
    StarHalf(usize),
    /// `F_2(K_{1,n})` with `n | C(n+1, 2)`, group `Z_n`.
    StarTwo(usize),
}

impl ConjectureFamily {
    pub fn n(&self) -> usize {
        match *self {
            ConjectureFamily::StarHalf(n) | ConjectureFamily::StarTwo(n) => n,
        }
    }

    pub fn tokens(&self) -> usize {
        match *self {
            ConjectureFamily::StarHalf(n) => n.div_ceil(2),
            ConjectureFamily::StarTwo(_) => 2,
        }
    }

    pub fn group_order(&self) -> usize {
        match *self {
            ConjectureFamily::StarHalf(n) => 2 * n,
            ConjectureFamily::StarTwo(n) => n,
        }
    }

    fn check(&self) -> Result<()> {
        match *self {
            ConjectureFamily::StarHalf(n) if n % 2 == 1 && n >= 3 => Ok(()),
            ConjectureFamily::StarHalf(n) => Err(Error::InvalidParameter(format!(
                "the half-star family needs an odd n >= 3, got {n}"
            ))),
            ConjectureFamily::StarTwo(n) if n >= 2 && choose(n + 1, 2).is_multiple_of(n) => Ok(()),
            ConjectureFamily::StarTwo(n) => Err(Error::InvalidParameter(format!(
                "the 2-token star family needs n | C(n+1,2), which fails for n = {n}"
            ))),
        }
    }

    /// Conjectured base sizes, labelled by how they were read.
    fn conjectured_sizes(&self) -> Vec<(&'static str, usize)> {
        match *self {
            ConjectureFamily::StarHalf(n) => {
                let k = n.div_ceil(2);
                vec![("C(2k,k)/(2n)", choose(2 * k, k) / (2 * n))]
            }
            ConjectureFamily::StarTwo(n) => {
                vec![
                    ("n-k with k=2", n - 2),
                    ("n-k with k=(n+1)/2", n - n.div_ceil(2)),
                ]
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
struct CandidateSummary {
    index: usize,
    automorphism: String,
    free: bool,
    base_vertices: usize,
    base_edges: usize,
    stabilizer_orders: Vec<usize>,
    verified: bool,
}

/// Searches automorphisms of the target order for cyclic quotients whose
/// cover reproduces the star token graph.
pub fn conjecture_search(
    family: ConjectureFamily,
    cfg: &SearchConfig,
) -> Result<VerificationReport> {
    family.check()?;
    let n = family.n();
    let k = family.tokens();
    let m = family.group_order();
    let x = token_graph(&make_family(Family::Star(n))?, k)?.graph;
    let aut = automorphisms_with(&x, cfg)?;
    let search = elements_of_order(&aut, m as u64, cfg)?;

    let mut candidates = search.elements;
    // free actions (trivial ω) first, then the rest, each in canonical order
    candidates.sort_by_key(|g| !g.is_semiregular());
    let truncated = candidates.len() > cfg.budget;
    candidates.truncate(cfg.budget);
    let complete = search.complete && !truncated;

    let summaries: Vec<CandidateSummary> = candidates
        .par_iter()
        .enumerate()
        .map(|(index, g)| {
            let (q, _) = quotient_cyclic(&x, g)?;
            let vg = &q.voltage_graph;
            Ok(CandidateSummary {
                index,
                automorphism: g.to_string(),
                free: g.is_semiregular(),
                base_vertices: vg.base().vertex_count(),
                base_edges: vg.base().edge_count(),
                stabilizer_orders: (0..vg.base().vertex_count())
                    .map(|o| vg.omega(o).size())
                    .collect(),
                verified: q.verified,
            })
        })
        .collect::<Result<_>>()?;

    let label = match family {
        ConjectureFamily::StarHalf(_) => "conjecture 1",
        ConjectureFamily::StarTwo(_) => "conjecture 2",
    };
    let mut report = VerificationReport::new(format!("{label} n={n}"));
    report
        .count("token_vertices", x.vertex_count())
        .count("token_edges", x.edge_count())
        .count("k", k)
        .count("group_order", m)
        .count("aut_order", aut.order)
        .count("candidates_checked", summaries.len())
        .witness("search_complete", complete);
    for (reading, size) in family.conjectured_sizes() {
        report.count(&format!("conjectured_base_vertices[{reading}]"), size);
    }
    if m > 0 && x.vertex_count() % m == 0 {
        report.count("free_action_base_vertices", x.vertex_count() / m);
    }

    let verified: Vec<&CandidateSummary> = summaries.iter().filter(|s| s.verified).collect();
    report.count("verified_candidates", verified.len());
    let mut sizes: Vec<usize> = verified.iter().map(|s| s.base_vertices).collect();
    sizes.sort_unstable();
    sizes.dedup();
    report.count("verified_base_sizes", &sizes);
    for (reading, size) in family.conjectured_sizes() {
        report.witness(
            &format!("matches_conjectured[{reading}]"),
            verified.iter().any(|s| s.base_vertices == size),
        );
    }
    if let Some(best) = verified.first() {
        let (q, _) = quotient_cyclic(&x, &candidates[best.index])?;
        report.witness("first_verified_base", q.voltage_graph.to_voltage_record());
    }
    report.witness("candidates", &summaries);

    let status = if !verified.is_empty() {
        Status::Pass
    } else if complete {
        Status::NoCandidate
    } else {
        Status::BudgetExhausted
    };
    report.set_search_status(status);
    Ok(report)
}
