//! Equitable partition refinement and individualization-refinement search.
//!
//! Refinement only ever looks at cell indices and neighbor counts, never at
//! vertex ids, so two graphs related by an isomorphism that respects the
//! starting partitions produce identical traces. Comparing traces is the
//! pruning test; a leaf is accepted only after its mapping has been checked
//! edge by edge.

use std::collections::VecDeque;

use crate::graph::SimpleGraph;

#[derive(Debug, Clone)]
pub(crate) struct Partition {
    cells: Vec<Vec<usize>>,
    cell_of: Vec<usize>,
}

const CELL_SEPARATOR: u64 = u64::MAX;

impl Partition {
    pub fn unit(n: usize) -> Self {
        Partition {
            cells: if n == 0 {
                Vec::new()
            } else {
                vec![(0..n).collect()]
            },
            cell_of: vec![0; n],
        }
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn is_discrete(&self) -> bool {
        self.cells.len() == self.cell_of.len()
    }

    /// First non-singleton cell of minimum size.
    pub fn target_cell(&self) -> Option<usize> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
    }

    /// Moves `v` out of its cell into a new trailing singleton cell and
    /// returns that cell's index.
    pub fn individualize(&mut self, v: usize) -> usize {
        let c = self.cell_of[v];
        self.cells[c].retain(|&w| w != v);
        let idx = self.cells.len();
        self.cells.push(vec![v]);
        self.cell_of[v] = idx;
        idx
    }

    /// Refines to the coarsest equitable partition below `self`, starting from
    /// the given splitter cells. Returns the trace of the run.
    pub fn refine(&mut self, g: &SimpleGraph, splitters: &[usize]) -> Vec<u64> {
        let n = self.cell_of.len();
        let mut trace = Vec::new();
        let mut queue: VecDeque<usize> = splitters.iter().copied().collect();
        let mut queued = vec![false; self.cells.len()];
        for &s in splitters {
            queued[s] = true;
        }
        let mut count = vec![0u32; n];
        while let Some(s) = queue.pop_front() {
            queued[s] = false;
            count.iter_mut().for_each(|c| *c = 0);
            for &u in &self.cells[s] {
                for &w in g.neighbors(u) {
                    count[w] += 1;
                }
            }
            trace.push(s as u64);
            let existing = self.cells.len();
            for c in 0..existing {
                let first = count[self.cells[c][0]];
                if self.cells[c].iter().all(|&v| count[v] == first) {
                    trace.push(first as u64);
                    continue;
                }
                let mut members = std::mem::take(&mut self.cells[c]);
                members.sort_by_key(|&v| (count[v], v));
                let mut groups: Vec<Vec<usize>> = Vec::new();
                let mut last = None;
                for v in members {
                    if last != Some(count[v]) {
                        groups.push(Vec::new());
                        last = Some(count[v]);
                    }
                    groups.last_mut().expect("just pushed").push(v);
                }
                trace.push(CELL_SEPARATOR);
                trace.push(c as u64);
                trace.push(groups.len() as u64);
                for grp in &groups {
                    trace.push(count[grp[0]] as u64);
                    trace.push(grp.len() as u64);
                }
                let mut groups = groups.into_iter();
                self.cells[c] = groups.next().expect("at least two groups");
                if !queued[c] {
                    queued[c] = true;
                    queue.push_back(c);
                }
                for grp in groups {
                    let idx = self.cells.len();
                    for &v in &grp {
                        self.cell_of[v] = idx;
                    }
                    self.cells.push(grp);
                    queued.push(true);
                    queue.push_back(idx);
                }
            }
            trace.push(CELL_SEPARATOR);
        }
        trace
    }

    pub fn refine_all(&mut self, g: &SimpleGraph) -> Vec<u64> {
        let all: Vec<usize> = (0..self.cells.len()).collect();
        self.refine(g, &all)
    }
}

/// Checks that `map` (indexed by vertices of `x`) is an isomorphism onto `y`.
pub(crate) fn is_isomorphism(x: &SimpleGraph, y: &SimpleGraph, map: &[usize]) -> bool {
    x.vertex_count() == y.vertex_count()
        && x.edge_count() == y.edge_count()
        && x.edges().iter().all(|&(u, v)| y.has_edge(map[u], map[v]))
}

/// Depth-first individualization-refinement search for an isomorphism
/// `(x, px) -> (y, py)`. Both partitions must already be equitable with
/// equal traces. Candidates are tried in increasing vertex order, so the
/// first witness found is deterministic.
pub(crate) fn find_isomorphism(
    x: &SimpleGraph,
    px: &Partition,
    y: &SimpleGraph,
    py: &Partition,
) -> Option<Vec<usize>> {
    if px.is_discrete() {
        let mut map = vec![0; px.cell_of.len()];
        for (cx, cy) in px.cells.iter().zip(&py.cells) {
            map[cx[0]] = cy[0];
        }
        return is_isomorphism(x, y, &map).then_some(map);
    }
    let c = px
        .target_cell()
        .expect("non-discrete partition has a target cell");
    let v = *px.cells[c].iter().min().expect("non-empty cell");
    let mut left = px.clone();
    let cell = left.individualize(v);
    let left_trace = left.refine(x, &[cell]);

    let mut candidates = py.cells[c].clone();
    candidates.sort_unstable();
    for w in candidates {
        let mut right = py.clone();
        let cell = right.individualize(w);
        if right.refine(y, &[cell]) != left_trace {
            continue;
        }
        if let Some(map) = find_isomorphism(x, &left, y, &right) {
            return Some(map);
        }
    }
    None
}
