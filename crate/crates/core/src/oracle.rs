//! Brute-force ground truth for small graphs.
//!
//! Nothing here touches the flow network, the certificate, or the cut
//! search; the only shared piece is [`Graph`]. Connectivity is computed with
//! a dense Edmonds-Karp over an adjacency matrix, and [`exhaustive`] goes one
//! step dumber by trying every candidate separator.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest graph [`kvcc_bruteforce`] accepts.
pub const BRUTEFORCE_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub connectivity: usize,
    /// A minimum vertex cut; absent for complete and trivial graphs.
    pub witness: Option<VertexSet>,
    pub kvccs: Vec<VertexSet>,
}

/// Connectivity, a witness cut, and the k-VCCs of a small graph.
pub fn report(g: &Graph, k: usize) -> Result<OracleReport> {
    let (connectivity, witness) = connectivity_with_witness(g);
    Ok(OracleReport {
        connectivity,
        witness,
        kvccs: kvcc_bruteforce(g, k)?,
    })
}

/// Residual matrix over the split graph: node `2v` is `v`'s entry, `2v + 1`
/// its exit.
struct DenseFlow {
    size: usize,
    cap: Vec<i32>,
}

impl DenseFlow {
    fn split(g: &Graph) -> Self {
        let size = 2 * g.n();
        let mut cap = vec![0; size * size];
        let big = g.n() as i32 + 1;
        for v in 0..g.n() {
            cap[(2 * v) * size + 2 * v + 1] = 1;
            for &w in g.neighbors(v) {
                cap[(2 * v + 1) * size + 2 * w] = big;
            }
        }
        DenseFlow { size, cap }
    }

    fn reachable(&self, from: usize) -> (Vec<bool>, Vec<usize>) {
        let mut seen = vec![false; self.size];
        let mut parent = vec![usize::MAX; self.size];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            for y in 0..self.size {
                if !seen[y] && self.cap[x * self.size + y] > 0 {
                    seen[y] = true;
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        (seen, parent)
    }

    /// Maximum flow between two nodes, augmenting one shortest path at a time.
    fn max_flow(&mut self, source: usize, sink: usize) -> usize {
        let mut flow = 0;
        loop {
            let (seen, parent) = self.reachable(source);
            if !seen[sink] {
                return flow;
            }
            let mut y = sink;
            while y != source {
                let x = parent[y];
                self.cap[x * self.size + y] -= 1;
                self.cap[y * self.size + x] += 1;
                y = x;
            }
            flow += 1;
        }
    }
}

fn separator_by_flow(g: &Graph, u: usize, v: usize) -> (usize, VertexSet) {
    let mut net = DenseFlow::split(g);
    let flow = net.max_flow(2 * u + 1, 2 * v);
    let (seen, _) = net.reachable(2 * u + 1);
    let cut: VertexSet = (0..g.n())
        .filter(|&w| seen[2 * w] && !seen[2 * w + 1])
        .collect();
    debug_assert_eq!(cut.len(), flow);
    (flow, cut)
}

/// Local connectivity `κ(u, v)`; `None` (infinite) for equal or adjacent
/// vertices.
pub fn local_connectivity(g: &Graph, u: usize, v: usize) -> Option<usize> {
    if u == v || g.neighbors(u).contains(&v) {
        return None;
    }
    Some(separator_by_flow(g, u, v).0)
}

fn connectivity_with_witness(g: &Graph) -> (usize, Option<VertexSet>) {
    let n = g.n();
    if n <= 1 {
        return (0, None);
    }
    if crate::graph::connected_components(g).len() > 1 {
        return (0, Some(VertexSet::default()));
    }
    if 2 * g.m() == n * (n - 1) {
        return (n - 1, None);
    }
    let x = 0;
    let mut best: Option<(usize, VertexSet)> = None;
    let mut consider = |a: usize, b: usize| {
        if a != b && !g.neighbors(a).contains(&b) {
            let (size, cut) = separator_by_flow(g, a, b);
            if best.as_ref().is_none_or(|(s, _)| size < *s) {
                best = Some((size, cut));
            }
        }
    };
    for y in 0..n {
        consider(x, y);
    }
    let nbrs = g.neighbors(x);
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            consider(a, b);
        }
    }
    let (size, cut) = best.expect("a non-complete connected graph has a non-adjacent pair");
    (size, Some(cut))
}

/// Exact vertex connectivity `κ(G)`. Complete graphs give `n - 1`,
/// disconnected or single-vertex graphs give 0.
pub fn vertex_connectivity_exact(g: &Graph) -> usize {
    connectivity_with_witness(g).0
}

/// `|V| > k` and `κ(G) >= k`.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    g.n() > k && vertex_connectivity_exact(g) >= k
}

/// All maximal vertex subsets inducing a k-connected subgraph, by exhaustive
/// search from the largest subsets down. Sorted by size, then members.
pub fn kvcc_bruteforce(g: &Graph, k: usize) -> Result<Vec<VertexSet>> {
    let n = g.n();
    if n > BRUTEFORCE_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: BRUTEFORCE_LIMIT,
        });
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let mut accepted: Vec<u64> = Vec::new();
    for size in (k + 1..=n).rev() {
        for subset in subsets_of_size(n, size) {
            if accepted.iter().any(|&a| subset & !a == 0) {
                continue;
            }
            let low_degree = members(subset).any(|v| (adj[v] & subset).count_ones() < k as u32);
            if low_degree || !mask_connected(&adj, subset) {
                continue;
            }
            let vs = VertexSet::new(members(subset).collect());
            if is_k_connected(&g.induced(&vs), k) {
                accepted.push(subset);
            }
        }
    }
    let mut out: Vec<VertexSet> = accepted
        .into_iter()
        .map(|m| VertexSet::new(members(m).collect()))
        .collect();
    out.sort_by(|a, b| (a.len(), a.as_slice()).cmp(&(b.len(), b.as_slice())));
    Ok(out)
}

fn members(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&i| mask >> i & 1 == 1)
}

fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << n;
    let mut next = if size == 0 || size > n {
        None
    } else {
        Some((1u64 << size) - 1)
    };
    std::iter::from_fn(move || {
        let current = next?;
        // Gosper's hack: next larger integer with the same popcount.
        let low = current & current.wrapping_neg();
        let ripple = current + low;
        let candidate = (((ripple ^ current) >> 2) / low) | ripple;
        next = (candidate < limit).then_some(candidate);
        Some(current)
    })
}

fn mask_connected(adj: &[u64], subset: u64) -> bool {
    if subset == 0 {
        return true;
    }
    let mut reached = subset & subset.wrapping_neg();
    loop {
        let grown = members(reached).fold(reached, |acc, v| acc | (adj[v] & subset));
        if grown == reached {
            return reached == subset;
        }
        reached = grown;
    }
}

/// Separator search by trying every vertex subset, smallest first. Only
/// usable for a dozen or so vertices.
pub mod exhaustive {
    use super::*;

    fn separates(g: &Graph, removed: u64, u: usize, v: usize) -> bool {
        let adj: Vec<u64> = (0..g.n())
            .map(|x| g.neighbors(x).iter().fold(0u64, |m, &w| m | 1 << w))
            .collect();
        let alive = !removed & ((1u64 << g.n()) - 1);
        let mut reached = 1u64 << u;
        loop {
            let grown = members(reached).fold(reached, |acc, x| acc | (adj[x] & alive));
            if grown == reached {
                return reached >> v & 1 == 0;
            }
            reached = grown;
        }
    }

    fn disconnects(g: &Graph, removed: u64) -> bool {
        let adj: Vec<u64> = (0..g.n())
            .map(|x| g.neighbors(x).iter().fold(0u64, |m, &w| m | 1 << w))
            .collect();
        let alive = !removed & ((1u64 << g.n()) - 1);
        !mask_connected(&adj, alive)
    }

    /// Smallest-size, then lexicographically first, `u`-`v` separator.
    pub fn min_separator(g: &Graph, u: usize, v: usize) -> Option<VertexSet> {
        let n = g.n();
        assert!(n < 64);
        if u == v || g.neighbors(u).contains(&v) {
            return None;
        }
        if separates(g, 0, u, v) {
            return Some(VertexSet::default());
        }
        let candidates = ((1u64 << n) - 1) & !(1 << u) & !(1 << v);
        for size in 1..=n {
            let mut hits: Vec<u64> = subsets_of_size(n, size)
                .filter(|&s| s & !candidates == 0 && separates(g, s, u, v))
                .collect();
            if !hits.is_empty() {
                hits.sort_by_key(|&s| members(s).collect::<Vec<_>>());
                return Some(VertexSet::new(members(hits[0]).collect()));
            }
        }
        unreachable!("removing every other vertex separates non-adjacent vertices")
    }

    pub fn local_connectivity(g: &Graph, u: usize, v: usize) -> Option<usize> {
        min_separator(g, u, v).map(|s| s.len())
    }

    /// Smallest vertex subset whose removal disconnects the graph; `None`
    /// for complete graphs.
    pub fn min_vertex_cut(g: &Graph) -> Option<VertexSet> {
        let n = g.n();
        assert!(n < 64);
        if n >= 2 && disconnects(g, 0) {
            return Some(VertexSet::default());
        }
        for size in 1..n.saturating_sub(1) {
            if let Some(s) = subsets_of_size(n, size).find(|&s| disconnects(g, s)) {
                return Some(VertexSet::new(members(s).collect()));
            }
        }
        None
    }

    /// `κ(G)` from [`min_vertex_cut`], `n - 1` when no cut exists.
    pub fn vertex_connectivity(g: &Graph) -> usize {
        match min_vertex_cut(g) {
            Some(cut) => cut.len(),
            None => g.n().saturating_sub(1),
        }
    }
}
