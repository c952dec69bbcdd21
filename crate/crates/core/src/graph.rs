//! Graph carriers.
//!
//! [`Multigraph`] is dart based: edge `e` owns darts `2e` (tail to head) and
//! `2e + 1` (head to tail), so dart reversal is `d ^ 1`. Loops and parallel
//! edges are ordinary edges. [`SimpleGraph`] keeps sorted adjacency lists and
//! is what the symmetry search and the token constructions work on.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;
pub type DartId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dart {
    pub tail: VertexId,
    pub head: VertexId,
    pub edge: EdgeId,
}

/// Undirected multigraph permitting loops and parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertex_count: usize,
    darts: Vec<Dart>,
    labels: Option<Vec<String>>,
}

impl Multigraph {
    pub fn new(vertex_count: usize) -> Self {
        Multigraph {
            vertex_count,
            darts: Vec::new(),
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count {
            return Err(Error::InvalidParameter(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Adds the edge `u -- v` and returns its id. Dart `2 * id` runs from `u` to `v`.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let edge = self.edge_count();
        self.darts.push(Dart {
            tail: u,
            head: v,
            edge,
        });
        self.darts.push(Dart {
            tail: v,
            head: u,
            edge,
        });
        Ok(edge)
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v >= self.vertex_count {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            });
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.darts.len() / 2
    }

    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    pub fn dart(&self, d: DartId) -> Dart {
        self.darts[d]
    }

    pub fn reverse(d: DartId) -> DartId {
        d ^ 1
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: VertexId) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Endpoints of edge `e` in dart `2e` orientation.
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let d = self.darts[2 * e];
        (d.tail, d.head)
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        (0..self.edge_count()).map(move |e| {
            let (u, v) = self.endpoints(e);
            (e, u, v)
        })
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let (u, v) = self.endpoints(e);
        u == v
    }

    pub fn loop_count(&self) -> usize {
        (0..self.edge_count()).filter(|&e| self.is_loop(e)).count()
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: VertexId) -> usize {
        self.darts.iter().filter(|d| d.tail == v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for d in &self.darts {
            deg[d.tail] += 1;
        }
        deg
    }

    /// Edge ids in `(min endpoint, max endpoint, id)` order. Records keep the
    /// dart `2e` orientation so voltages stay attached to the right direction.
    pub fn sorted_edge_ids(&self) -> Vec<EdgeId> {
        let mut ids: Vec<EdgeId> = (0..self.edge_count()).collect();
        ids.sort_by_key(|&e| {
            let (u, v) = self.endpoints(e);
            (u.min(v), u.max(v), e)
        });
        ids
    }

    /// Number of edges that duplicate an earlier non-loop edge on the same pair.
    pub fn parallel_excess(&self) -> usize {
        let mut seen = BTreeSet::new();
        let mut excess = 0;
        for (_, u, v) in self.edges() {
            if u != v && !seen.insert((u.min(v), u.max(v))) {
                excess += 1;
            }
        }
        excess
    }
}

/// Loopless graph without parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adjacency: Vec<Vec<VertexId>>,
    edge_count: usize,
    labels: Option<Vec<String>>,
}

impl SimpleGraph {
    pub fn new(vertex_count: usize) -> Self {
        SimpleGraph {
            adjacency: vec![Vec::new(); vertex_count],
            edge_count: 0,
            labels: None,
        }
    }

    /// Builds a graph from unordered pairs. Duplicate pairs collapse; loops are rejected.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = SimpleGraph::new(vertex_count);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count() {
            return Err(Error::InvalidParameter(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Returns `false` if the pair was already present.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<bool> {
        let n = self.vertex_count();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    vertex_count: n,
                });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        match self.adjacency[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adjacency[u].insert(pos, v);
                let pos = self.adjacency[v].binary_search(&u).unwrap_err();
                self.adjacency[v].insert(pos, u);
                self.edge_count += 1;
                Ok(true)
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: VertexId) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn complement(&self) -> SimpleGraph {
        let n = self.vertex_count();
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v).expect("in range, no loops");
                }
            }
        }
        g.labels = self.labels.clone();
        g
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == n
    }

    pub fn is_regular(&self) -> Option<usize> {
        let d = self.adjacency.first().map_or(0, Vec::len);
        self.adjacency.iter().all(|a| a.len() == d).then_some(d)
    }

    pub fn to_multigraph(&self) -> Multigraph {
        let mut m = Multigraph::new(self.vertex_count());
        for (u, v) in self.edges() {
            m.add_edge(u, v).expect("in range");
        }
        m.labels = self.labels.clone();
        m
    }
}

/// The standard families used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Complete(usize),
    /// `K_{1,n}` with the center at vertex 0.
    Star(usize),
    CompleteBipartite(usize, usize),
    /// Path on `n` vertices.
    Path(usize),
    Cycle(usize),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Star(n) => write!(f, "star:{n}"),
            Family::CompleteBipartite(m, n) => write!(f, "bipartite:{m},{n}"),
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `name:n`, or `bipartite:m,n` for complete bipartite graphs.
    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected name:n, got `{s}`")))?;
        let nums = args
            .split(',')
            .map(|a| {
                a.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad size `{a}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        let one = || -> Result<usize> {
            match nums[..] {
                [n] => Ok(n),
                _ => Err(Error::Parse(format!("`{name}` takes one size"))),
            }
        };
        match name {
            "complete" | "K" => Ok(Family::Complete(one()?)),
            "star" => Ok(Family::Star(one()?)),
            "path" => Ok(Family::Path(one()?)),
            "cycle" => Ok(Family::Cycle(one()?)),
            "bipartite" | "complete_bipartite" => match nums[..] {
                [m, n] => Ok(Family::CompleteBipartite(m, n)),
                _ => Err(Error::Parse("bipartite takes two sizes m,n".into())),
            },
            _ => Err(Error::Parse(format!("unknown family `{name}`"))),
        }
    }
}

pub fn make_family(family: Family) -> Result<SimpleGraph> {
    let reject = |what: &str| Err(Error::InvalidParameter(format!("{family}: {what}")));
    match family {
        Family::Complete(n) => {
            if n == 0 {
                return reject("size must be at least 1");
            }
            SimpleGraph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        Family::Star(n) => {
            if n == 0 {
                return reject("size must be at least 1");
            }
            SimpleGraph::from_edges(n + 1, (1..=n).map(|v| (0, v)))
        }
        Family::CompleteBipartite(m, n) => {
            if m == 0 || n == 0 {
                return reject("both sides must be non-empty");
            }
            SimpleGraph::from_edges(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))))
        }
        Family::Path(n) => {
            if n == 0 {
                return reject("size must be at least 1");
            }
            SimpleGraph::from_edges(n, (1..n).map(|v| (v - 1, v)))
        }
        Family::Cycle(n) => {
            if n < 3 {
                return reject("a simple cycle needs at least 3 vertices");
            }
            SimpleGraph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
        }
    }
}

/// Drops loops and collapses parallel classes.
pub fn underlying_simple(g: &Multigraph) -> SimpleGraph {
    let mut s = SimpleGraph::new(g.vertex_count());
    for (_, u, v) in g.edges() {
        if u != v {
            s.add_edge(u, v).expect("endpoints already validated");
        }
    }
    s.labels = g.labels.clone();
    s
}

/// Degrees of the two parts of a biregular graph.
///
/// Part A is the side containing vertex 0. For disconnected graphs each
/// component may be flipped so that a single consistent 2-coloring exists.
pub fn is_biregular(g: &SimpleGraph) -> Option<(usize, usize)> {
    let n = g.vertex_count();
    if n == 0 {
        return Some((0, 0));
    }
    let mut color = vec![usize::MAX; n];
    let mut target: Option<(usize, usize)> = None;
    for start in 0..n {
        if color[start] != usize::MAX {
            continue;
        }
        color[start] = 0;
        let mut side_degrees: [BTreeSet<usize>; 2] = [BTreeSet::new(), BTreeSet::new()];
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            side_degrees[color[u]].insert(g.degree(u));
            for &v in g.neighbors(u) {
                if color[v] == usize::MAX {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if color[v] == color[u] {
                    return None;
                }
            }
        }
        if side_degrees.iter().any(|s| s.len() > 1) {
            return None;
        }
        let d0 = side_degrees[0].first().copied();
        let d1 = side_degrees[1].first().copied();
        match target {
            None => target = Some((d0.unwrap_or(0), d1.unwrap_or(0))),
            Some((a, b)) => {
                // an isolated vertex has an empty second side and fits either way
                let fits =
                    |x: usize, y: usize| d0.is_none_or(|d| d == x) && d1.is_none_or(|d| d == y);
                if !fits(a, b) && !fits(b, a) {
                    return None;
                }
            }
        }
    }
    target
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SrgParameters {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

/// Strongly regular parameters, if any. Vacuous `lambda` (no edges) or `mu`
/// (complete graph) is reported as 0.
pub fn srg_parameters(g: &SimpleGraph) -> Option<SrgParameters> {
    let k = g.is_regular()?;
    let n = g.vertex_count();
    let mut lambda = None;
    let mut mu = None;
    for u in 0..n {
        for v in u + 1..n {
            let common = count_common(g.neighbors(u), g.neighbors(v));
            let slot = if g.has_edge(u, v) {
                &mut lambda
            } else {
                &mut mu
            };
            match *slot {
                None => *slot = Some(common),
                Some(c) if c != common => return None,
                _ => {}
            }
        }
    }
    Some(SrgParameters {
        v: n,
        k,
        lambda: lambda.unwrap_or(0),
        mu: mu.unwrap_or(0),
    })
}

fn count_common(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Dot,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(Format::Dot),
            "json" => Ok(Format::Json),
            _ => Err(Error::Parse(format!("unknown format `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub id: usize,
    pub u: usize,
    pub v: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub vertices: usize,
    pub labels: Vec<String>,
    pub edges: Vec<EdgeRecord>,
}

/// Deterministic DOT/JSON serialization.
pub trait Export {
    fn to_record(&self) -> GraphRecord;

    /// Extra attributes for the edge record at position `i` of [`Export::to_record`].
    fn edge_attributes(&self, _record: &EdgeRecord) -> Option<String> {
        None
    }

    fn node_attributes(&self, v: usize) -> String {
        let rec = self.to_record();
        match rec.labels.get(v) {
            Some(l) => format!("label=\"{}\"", escape(l)),
            None => format!("label=\"{v}\""),
        }
    }

    fn to_dot(&self) -> String {
        let rec = self.to_record();
        let mut out = String::from("graph G {\n");
        for v in 0..rec.vertices {
            out.push_str(&format!("  {v} [{}];\n", self.node_attributes(v)));
        }
        for e in &rec.edges {
            match self.edge_attributes(e) {
                Some(attr) => out.push_str(&format!("  {} -- {} [{attr}];\n", e.u, e.v)),
                None => out.push_str(&format!("  {} -- {};\n", e.u, e.v)),
            }
        }
        out.push_str("}\n");
        out
    }

    fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_record()).expect("plain data serializes")
    }

    fn export(&self, format: Format) -> Vec<u8> {
        match format {
            Format::Dot => self.to_dot().into_bytes(),
            Format::Json => self.to_json().into_bytes(),
        }
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

impl Export for Multigraph {
    fn to_record(&self) -> GraphRecord {
        GraphRecord {
            vertices: self.vertex_count,
            labels: self.labels.clone().unwrap_or_default(),
            edges: self
                .sorted_edge_ids()
                .into_iter()
                .map(|e| {
                    let (u, v) = self.endpoints(e);
                    EdgeRecord { id: e, u, v }
                })
                .collect(),
        }
    }
}

impl Export for SimpleGraph {
    fn to_record(&self) -> GraphRecord {
        GraphRecord {
            vertices: self.vertex_count(),
            labels: self.labels.clone().unwrap_or_default(),
            edges: self
                .edges()
                .into_iter()
                .enumerate()
                .map(|(id, (u, v))| EdgeRecord { id, u, v })
                .collect(),
        }
    }
}

impl GraphRecord {
    pub fn from_json(bytes: &[u8]) -> Result<Self> {
        Ok(serde_json::from_slice(bytes)?)
    }

    fn labels_opt(&self) -> Result<Option<Vec<String>>> {
        match self.labels.len() {
            0 => Ok(None),
            n if n == self.vertices => Ok(Some(self.labels.clone())),
            n => Err(Error::Parse(format!(
                "{n} labels for {} vertices",
                self.vertices
            ))),
        }
    }

    /// Rebuilds a multigraph; edge ids are taken from the records.
    pub fn to_multigraph(&self) -> Result<Multigraph> {
        let mut ordered = self.edges.clone();
        ordered.sort_by_key(|e| e.id);
        let mut g = Multigraph::new(self.vertices);
        for (expected, e) in ordered.iter().enumerate() {
            if e.id != expected {
                return Err(Error::Parse(format!(
                    "edge ids are not 0..{}",
                    ordered.len()
                )));
            }
            g.add_edge(e.u, e.v)?;
        }
        g.labels = self.labels_opt()?;
        Ok(g)
    }

    pub fn to_simple(&self) -> Result<SimpleGraph> {
        let mut g = SimpleGraph::from_edges(self.vertices, self.edges.iter().map(|e| (e.u, e.v)))?;
        g.labels = self.labels_opt()?;
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_degrees(g: &SimpleGraph) -> Vec<usize> {
        let mut d = g.degrees();
        d.sort_unstable();
        d
    }

    #[test]
    fn family_sizes() {
        let k4 = make_family(Family::Complete(4)).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert!(k4.degrees().iter().all(|&d| d == 3));

        let star = make_family(Family::Star(5)).unwrap();
        assert_eq!(star.vertex_count(), 6);
        assert_eq!(star.edge_count(), 5);
        assert_eq!(star.degrees(), vec![5, 1, 1, 1, 1, 1]);

        let k24 = make_family(Family::CompleteBipartite(2, 4)).unwrap();
        assert_eq!(k24.edge_count(), 8);
        assert_eq!(k24.degrees(), vec![4, 4, 2, 2, 2, 2]);

        for n in 1..10 {
            assert_eq!(
                make_family(Family::Complete(n)).unwrap().edge_count(),
                n * (n - 1) / 2
            );
            for m in 1..5 {
                assert_eq!(
                    make_family(Family::CompleteBipartite(m, n))
                        .unwrap()
                        .edge_count(),
                    m * n
                );
            }
        }
    }

    #[test]
    fn zero_sizes_rejected() {
        for f in [
            Family::Complete(0),
            Family::Star(0),
            Family::CompleteBipartite(0, 3),
            Family::Path(0),
            Family::Cycle(2),
        ] {
            assert!(make_family(f).is_err(), "{f}");
        }
    }

    #[test]
    fn family_syntax() {
        assert_eq!("star:5".parse::<Family>().unwrap(), Family::Star(5));
        assert_eq!(
            "bipartite:2,4".parse::<Family>().unwrap(),
            Family::CompleteBipartite(2, 4)
        );
        for f in [
            Family::Complete(3),
            Family::Cycle(7),
            Family::CompleteBipartite(3, 3),
        ] {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
        assert!("star".parse::<Family>().is_err());
        assert!("blob:3".parse::<Family>().is_err());
        assert!("star:x".parse::<Family>().is_err());
    }

    #[test]
    fn multigraph_darts() {
        let mut g = Multigraph::new(2);
        g.add_edge(0, 0).unwrap();
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 0).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.darts().len(), 6);
        for d in 0..6 {
            let a = g.dart(d);
            let b = g.dart(Multigraph::reverse(d));
            assert_eq!(Multigraph::reverse(Multigraph::reverse(d)), d);
            assert_eq!((a.tail, a.head, a.edge), (b.head, b.tail, b.edge));
        }
        assert_eq!(g.degree(0), 4);
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.loop_count(), 1);
        assert_eq!(g.parallel_excess(), 1);
        assert!(g.add_edge(0, 2).is_err());
    }

    #[test]
    fn underlying_simple_collapses() {
        let mut g = Multigraph::new(2);
        g.add_edge(1, 1).unwrap();
        assert_eq!(underlying_simple(&g).edge_count(), 0);

        let mut g = Multigraph::new(2);
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 0).unwrap();
        let s = underlying_simple(&g);
        assert_eq!(s.edges(), vec![(0, 1)]);
        assert_eq!(underlying_simple(&s.to_multigraph()), s);
    }

    #[test]
    fn simple_graph_rejects_loops() {
        let mut g = SimpleGraph::new(3);
        assert_eq!(g.add_edge(1, 1), Err(Error::Loop(1)));
        assert!(g.add_edge(0, 1).unwrap());
        assert!(!g.add_edge(1, 0).unwrap());
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn biregular() {
        assert_eq!(
            is_biregular(&make_family(Family::Star(5)).unwrap()),
            Some((5, 1))
        );
        assert_eq!(is_biregular(&make_family(Family::Cycle(5)).unwrap()), None);
        assert_eq!(
            is_biregular(&make_family(Family::Cycle(6)).unwrap()),
            Some((2, 2))
        );
        assert_eq!(is_biregular(&make_family(Family::Path(4)).unwrap()), None);
        // two disjoint stars K_{1,2}, the second listed leaf-first
        let g = SimpleGraph::from_edges(6, [(0, 1), (0, 2), (4, 3), (4, 5)]).unwrap();
        assert_eq!(is_biregular(&g), Some((2, 1)));
        let g = SimpleGraph::from_edges(5, [(0, 1), (0, 2), (3, 4)]).unwrap();
        assert_eq!(is_biregular(&g), None);
        // isolated vertex needs a degree-0 side
        let g = SimpleGraph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(is_biregular(&g), None);
    }

    #[test]
    fn srg() {
        assert_eq!(srg_parameters(&make_family(Family::Path(4)).unwrap()), None);
        let c5 = make_family(Family::Cycle(5)).unwrap();
        assert_eq!(
            srg_parameters(&c5),
            Some(SrgParameters {
                v: 5,
                k: 2,
                lambda: 0,
                mu: 1
            })
        );
        let k33 = make_family(Family::CompleteBipartite(3, 3)).unwrap();
        assert_eq!(
            srg_parameters(&k33),
            Some(SrgParameters {
                v: 6,
                k: 3,
                lambda: 0,
                mu: 3
            })
        );
        assert_eq!(
            srg_parameters(&make_family(Family::Cycle(6)).unwrap()),
            None
        );
    }

    #[test]
    fn dot_export() {
        let g = SimpleGraph::new(1);
        let dot = g.to_dot();
        assert_eq!(dot, "graph G {\n  0 [label=\"0\"];\n}\n");

        let mut m = Multigraph::new(2);
        m.add_edge(1, 0).unwrap();
        m.add_edge(0, 0).unwrap();
        m.add_edge(0, 1).unwrap();
        let dot = m.to_dot();
        let lines: Vec<&str> = dot.lines().filter(|l| l.contains("--")).collect();
        assert_eq!(lines, vec!["  0 -- 0;", "  1 -- 0;", "  0 -- 1;"]);
    }

    #[test]
    fn json_export() {
        let c3 = make_family(Family::Cycle(3)).unwrap();
        let rec = GraphRecord::from_json(&c3.export(Format::Json)).unwrap();
        assert_eq!(rec.vertices, 3);
        assert_eq!(rec.edges.len(), 3);
        assert_eq!(rec.to_simple().unwrap(), c3);

        let mut m = Multigraph::new(3)
            .with_labels(vec!["a".into(), "b".into(), "c".into()])
            .unwrap();
        m.add_edge(2, 1).unwrap();
        m.add_edge(0, 0).unwrap();
        m.add_edge(1, 2).unwrap();
        let back = GraphRecord::from_json(m.to_json().as_bytes())
            .unwrap()
            .to_multigraph()
            .unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn complement_and_connectivity() {
        let c5 = make_family(Family::Cycle(5)).unwrap();
        let co = c5.complement();
        assert_eq!(co.edge_count(), 5);
        assert!(co.is_connected());
        assert_eq!(sorted_degrees(&co), vec![2; 5]);
        assert!(!SimpleGraph::new(2).is_connected());
    }
}
