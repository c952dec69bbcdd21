//! Token graphs and the comparison graphs they are measured against.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexId};

/// Bitmask subsets are limited to this many base vertices.
pub const MAX_BASE_VERTICES: usize = 64;

/// A k-subset of base vertex ids, stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KSubset {
    mask: u64,
}

impl KSubset {
    pub fn from_members(members: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &m in members {
            if m >= MAX_BASE_VERTICES {
                return Err(Error::InvalidParameter(format!(
                    "subset member {m} exceeds the {MAX_BASE_VERTICES}-vertex limit"
                )));
            }
            if mask & (1 << m) != 0 {
                return Err(Error::InvalidParameter(format!("repeated member {m}")));
            }
            mask |= 1 << m;
        }
        Ok(KSubset { mask })
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < MAX_BASE_VERTICES && self.mask & (1 << v) != 0
    }

    /// Members in increasing order.
    pub fn members(&self) -> Vec<usize> {
        (0..MAX_BASE_VERTICES)
            .filter(|&v| self.contains(v))
            .collect()
    }

    pub fn symmetric_difference(&self, other: &KSubset) -> KSubset {
        KSubset {
            mask: self.mask ^ other.mask,
        }
    }

    pub fn is_subset_of(&self, other: &KSubset) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn intersection_len(&self, other: &KSubset) -> usize {
        (self.mask & other.mask).count_ones() as usize
    }
}

impl fmt::Display for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.members().iter().join(","))
    }
}

/// All k-subsets of `0..n` in lexicographic order of their sorted member lists.
pub fn k_subsets(n: usize, k: usize) -> Vec<KSubset> {
    (0..n)
        .combinations(k)
        .map(|c| KSubset::from_members(&c).expect("members below n <= 64"))
        .collect()
}

/// A token graph together with the subset each vertex stands for.
#[derive(Debug, Clone)]
pub struct TokenGraph {
    pub graph: SimpleGraph,
    pub subsets: Vec<KSubset>,
}

impl TokenGraph {
    pub fn index_of(&self, subset: &KSubset) -> Option<VertexId> {
        self.subsets
            .binary_search_by(|s| s.members().cmp(&subset.members()))
            .ok()
    }
}

fn subset_labels(subsets: &[KSubset]) -> Vec<String> {
    subsets.iter().map(|s| s.to_string()).collect()
}

/// `F_k(X)`: k-subsets of `V(X)`, adjacent when their symmetric difference is an edge.
pub fn token_graph(x: &SimpleGraph, k: usize) -> Result<TokenGraph> {
    let n = x.vertex_count();
    if n > MAX_BASE_VERTICES {
        return Err(Error::InvalidParameter(format!(
            "token graphs support at most {MAX_BASE_VERTICES} base vertices"
        )));
    }
    if k == 0 || k >= n {
        return Err(Error::InvalidParameter(format!(
            "token count k = {k} must satisfy 1 <= k <= {}",
            n.saturating_sub(1)
        )));
    }
    let subsets = k_subsets(n, k);
    let index: HashMap<u64, usize> = subsets
        .iter()
        .enumerate()
        .map(|(i, s)| (s.mask, i))
        .collect();
    let mut g = SimpleGraph::new(subsets.len());
    let edges = x.edges();
    for (i, s) in subsets.iter().enumerate() {
        // slide one token along an edge of X
        for &(u, v) in &edges {
            let (from, to) = match (s.contains(u), s.contains(v)) {
                (true, false) => (u, v),
                (false, true) => (v, u),
                _ => continue,
            };
            let moved = s.mask & !(1 << from) | (1 << to);
            let j = index[&moved];
            if i < j {
                g.add_edge(i, j)?;
            }
        }
    }
    let graph = g.with_labels(subset_labels(&subsets))?;
    Ok(TokenGraph { graph, subsets })
}

/// `J(n, k)`: k-subsets of `0..n`, adjacent when they share exactly `k - 1` elements.
pub fn johnson(n: usize, k: usize) -> Result<SimpleGraph> {
    if k == 0 || k > n || n > MAX_BASE_VERTICES {
        return Err(Error::InvalidParameter(format!(
            "Johnson graph J({n},{k}) needs 1 <= k <= n <= {MAX_BASE_VERTICES}"
        )));
    }
    let subsets = k_subsets(n, k);
    let mut g = SimpleGraph::new(subsets.len());
    for (i, a) in subsets.iter().enumerate() {
        for (j, b) in subsets.iter().enumerate().skip(i + 1) {
            if a.intersection_len(b) + 1 == k {
                g.add_edge(i, j)?;
            }
        }
    }
    g.with_labels(subset_labels(&subsets))
}

/// `L(X)`: one vertex per edge of `X` (in sorted edge order), adjacent when
/// the edges share an endpoint.
pub fn line_graph(x: &SimpleGraph) -> SimpleGraph {
    let edges = x.edges();
    let mut g = SimpleGraph::new(edges.len());
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                g.add_edge(i, j).expect("distinct edge indices");
            }
        }
    }
    let labels = edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
    g.with_labels(labels).expect("one label per edge")
}

/// Replaces every edge `uv` by a path `u - s - v`. Original vertices keep
/// their ids; the subdivision vertex of the i-th sorted edge is `n + i`.
pub fn subdivision(x: &SimpleGraph) -> SimpleGraph {
    let n = x.vertex_count();
    let edges = x.edges();
    let mut g = SimpleGraph::new(n + edges.len());
    let mut labels: Vec<String> = (0..n).map(|v| x.label(v)).collect();
    for (i, &(u, v)) in edges.iter().enumerate() {
        g.add_edge(u, n + i).expect("in range");
        g.add_edge(v, n + i).expect("in range");
        labels.push(format!("({u}{v})"));
    }
    g.with_labels(labels).expect("one label per vertex")
}

/// Bipartite inclusion graph between the `a`-subsets and `b`-subsets of `0..n`.
/// The `a`-subsets come first.
pub fn inclusion_bigraph(n: usize, a: usize, b: usize) -> Result<SimpleGraph> {
    if a >= b || b > n || n > MAX_BASE_VERTICES {
        return Err(Error::InvalidParameter(format!(
            "inclusion bigraph needs 0 <= a < b <= n <= {MAX_BASE_VERTICES}, got ({n},{a},{b})"
        )));
    }
    let small = k_subsets(n, a);
    let large = k_subsets(n, b);
    let offset = small.len();
    let mut g = SimpleGraph::new(offset + large.len());
    for (i, s) in small.iter().enumerate() {
        for (j, l) in large.iter().enumerate() {
            if s.is_subset_of(l) {
                g.add_edge(i, offset + j)?;
            }
        }
    }
    let labels = small
        .iter()
        .chain(large.iter())
        .map(|s| s.to_string())
        .collect();
    g.with_labels(labels)
}

/// Saturates at `usize::MAX`.
fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

pub fn choose(n: usize, k: usize) -> usize {
    binomial(n, k)
}
