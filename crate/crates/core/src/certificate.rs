//! Sparse certificates for k-vertex connectivity.
//!
//! The certificate is the union of `k` scan-first search forests, each taken
//! in the graph left over after removing the previous forests' edges. It has
//! at most `k(n - 1)` edges and keeps every vertex cut of size below `k`.
//! Components of the last forest are side-groups: all their members are
//! pairwise k-locally connected.

use std::collections::VecDeque;

use crate::graph::{Graph, VertexSet};

pub type Edge = (usize, usize);

#[derive(Clone, Debug)]
pub struct Certificate {
    /// Same vertices and labels as the input, with only the kept edges.
    pub graph: Graph,
    /// `F_1 .. F_k`; trailing forests are empty once edges run out.
    pub forests: Vec<Vec<Edge>>,
    /// Components of the last forest with more than `k` vertices.
    pub side_groups: Vec<VertexSet>,
}

impl Certificate {
    pub fn kept_edge_count(&self) -> usize {
        self.graph.m()
    }
}

/// Breadth-first scan-first forest of `g`: roots are taken in index order and
/// neighbors are scanned in ascending order.
pub fn scan_first_forest(g: &Graph) -> Vec<Edge> {
    let adj = EdgeIndex::new(g);
    let removed = vec![false; adj.slot_count()];
    bfs_forest(&adj, &removed)
        .into_iter()
        .map(|id| adj.edge(id))
        .collect()
}

/// Adjacency slots of `g` with edge ids. Slot `offsets[v] + j` is `v`'s
/// `j`-th neighbor; an edge's id is the slot it occupies in its lower
/// endpoint's list.
struct EdgeIndex<'a> {
    g: &'a Graph,
    offsets: Vec<usize>,
    ids: Vec<usize>,
}

impl<'a> EdgeIndex<'a> {
    fn new(g: &'a Graph) -> Self {
        let mut offsets = Vec::with_capacity(g.n() + 1);
        offsets.push(0);
        for v in 0..g.n() {
            offsets.push(offsets[v] + g.degree(v));
        }
        // Lower neighbors sit at the front of each sorted list, so visiting
        // lower endpoints in ascending order fills upper slots front to back.
        let mut ids = vec![0; offsets[g.n()]];
        let mut filled = offsets.clone();
        for (v, &start) in offsets[..g.n()].iter().enumerate() {
            for (j, &w) in g.neighbors(v).iter().enumerate() {
                if v < w {
                    let id = start + j;
                    ids[id] = id;
                    ids[filled[w]] = id;
                    filled[w] += 1;
                }
            }
        }
        EdgeIndex { g, offsets, ids }
    }

    fn slot_count(&self) -> usize {
        self.ids.len()
    }

    /// `(neighbor, edge id)` pairs of `v`, neighbors ascending.
    fn incident(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        let ids = &self.ids[self.offsets[v]..self.offsets[v + 1]];
        self.g.neighbors(v).iter().copied().zip(ids.iter().copied())
    }

    fn edge(&self, id: usize) -> Edge {
        let u = self.offsets.partition_point(|&o| o <= id) - 1;
        (u, self.g.neighbors(u)[id - self.offsets[u]])
    }
}

/// BFS forest skipping removed edges; returns the ids of the tree edges.
fn bfs_forest(adj: &EdgeIndex<'_>, removed: &[bool]) -> Vec<usize> {
    let n = adj.g.n();
    let mut seen = vec![false; n];
    let mut forest = Vec::new();
    let mut queue = VecDeque::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for (w, id) in adj.incident(v) {
                if !seen[w] && !removed[id] {
                    seen[w] = true;
                    forest.push(id);
                    queue.push_back(w);
                }
            }
        }
    }
    forest
}

pub fn sparse_certificate(g: &Graph, k: usize) -> Certificate {
    let n = g.n();
    let adj = EdgeIndex::new(g);
    let mut removed = vec![false; adj.slot_count()];
    let mut remaining = g.m();
    let mut forests = Vec::with_capacity(k);
    for _ in 0..k {
        let forest = if remaining == 0 {
            Vec::new()
        } else {
            bfs_forest(&adj, &removed)
        };
        for &id in &forest {
            removed[id] = true;
        }
        remaining -= forest.len();
        forests.push(
            forest
                .into_iter()
                .map(|id| adj.edge(id))
                .collect::<Vec<Edge>>(),
        );
    }
    let kept: Vec<Edge> = forests.iter().flatten().copied().collect();
    let graph = Graph::from_labeled_edges(g.labels().to_vec(), kept);
    let side_groups = match forests.last() {
        Some(last) => {
            let fk = Graph::from_edges(n, last.iter().copied());
            crate::graph::connected_components(&fk)
                .into_iter()
                .filter(|c| c.len() > k)
                .collect()
        }
        None => Vec::new(),
    };
    Certificate {
        graph,
        forests,
        side_groups,
    }
}
