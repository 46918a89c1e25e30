//! Strong side-vertices: vertices certified to lie in no minimal vertex cut
//! of size below `k`.
//!
//! `u` qualifies when every pair of its neighbors is adjacent or shares at
//! least `k` common neighbors.

use std::collections::HashMap;

use crate::graph::{Graph, VertexSet};

/// Whether sorted lists `a` and `b` share at least `k` elements.
fn common_at_least(a: &[usize], b: &[usize], k: usize) -> bool {
    if k == 0 {
        return true;
    }
    let (mut i, mut j, mut common) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                common += 1;
                if common >= k {
                    return true;
                }
                i += 1;
                j += 1;
            }
        }
    }
    false
}

pub fn is_strong_side_vertex(g: &Graph, u: usize, k: usize) -> bool {
    let nbrs = g.neighbors(u);
    nbrs.iter().enumerate().all(|(i, &a)| {
        nbrs[i + 1..]
            .iter()
            .all(|&b| g.has_edge(a, b) || common_at_least(g.neighbors(a), g.neighbors(b), k))
    })
}

/// Strong side-vertex test sharing scratch space across calls: `marker` has
/// one slot per vertex and `pair_ok` caches non-adjacent pair verdicts.
fn check_marked(
    g: &Graph,
    u: usize,
    k: usize,
    marker: &mut [usize],
    pair_ok: &mut HashMap<(usize, usize), bool>,
) -> bool {
    let nbrs = g.neighbors(u);
    nbrs.iter().enumerate().all(|(i, &a)| {
        for &y in g.neighbors(a) {
            marker[y] = a;
        }
        nbrs[i + 1..].iter().all(|&b| {
            marker[b] == a
                || *pair_ok
                    .entry((a, b))
                    .or_insert_with(|| common_at_least(g.neighbors(a), g.neighbors(b), k))
        })
    })
}

/// Per-vertex strong side-vertex flags.
///
/// Neighbor pairs are first tested for adjacency with a marker array, so a
/// pass over all vertices costs `O(sum of d(w)^2)` plus one bounded merge per
/// distinct non-adjacent pair. Vertices whose degree exceeds `degree_cap`
/// are reported as not strong without being examined.
pub fn strong_side_flags(g: &Graph, k: usize, degree_cap: Option<usize>) -> Vec<bool> {
    let mut marker = vec![usize::MAX; g.n()];
    let mut pair_ok = HashMap::new();
    (0..g.n())
        .map(|u| {
            !degree_cap.is_some_and(|cap| g.degree(u) > cap)
                && check_marked(g, u, k, &mut marker, &mut pair_ok)
        })
        .collect()
}

/// All strong side-vertices of `g`.
pub fn detect_strong_side_vertices(g: &Graph, k: usize) -> VertexSet {
    let flags = strong_side_flags(g, k, None);
    VertexSet::from_sorted((0..g.n()).filter(|&v| flags[v]).collect())
}

/// Carries strong side-vertices over to a graph derived from the one they
/// were computed on by deleting vertices or edges.
///
/// `prev` and `changed` are given in `g_new`'s indices. `changed` must hold
/// every surviving vertex whose neighbor list shrank (for an overlapped
/// partition that is the cut itself). A vertex with no neighbor in
/// `changed` sees the same neighbor pairs and the same common neighbors as
/// before and keeps its status; the rest are re-checked. Vertices outside
/// `prev` are not added, even if they have become strong.
pub fn maintain_strong_side_vertices(
    prev: &VertexSet,
    changed: &VertexSet,
    g_new: &Graph,
    k: usize,
) -> VertexSet {
    let mut set = StrongSideSet::from_members(prev, g_new.n(), k);
    set.invalidate_around(changed, g_new);
    set.resolve_all(g_new)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Status {
    Absent,
    Present,
    /// Was present; must be re-checked before use.
    Unverified,
}

/// Strong side-vertex flags with deferred re-verification.
///
/// After a graph shrinks, members next to the change are only re-checked
/// when their status is first asked for. A vertex reported strong has
/// always been verified on the graph it is queried with, or inherited from
/// an ancestor graph where nothing around it has changed since.
#[derive(Clone, Debug)]
pub struct StrongSideSet {
    k: usize,
    status: Vec<Status>,
    marker: Vec<usize>,
    pair_ok: HashMap<(usize, usize), bool>,
}

impl StrongSideSet {
    fn with_status(status: Vec<Status>, k: usize) -> Self {
        StrongSideSet {
            k,
            marker: vec![usize::MAX; status.len()],
            status,
            pair_ok: HashMap::new(),
        }
    }

    /// Every strong side-vertex of `g` whose degree is within `degree_cap`.
    pub fn detect(g: &Graph, k: usize, degree_cap: Option<usize>) -> Self {
        let status = strong_side_flags(g, k, degree_cap)
            .into_iter()
            .map(|f| if f { Status::Present } else { Status::Absent })
            .collect();
        Self::with_status(status, k)
    }

    /// Every vertex within `degree_cap` as a candidate, verified on first
    /// query.
    pub fn candidates(g: &Graph, k: usize, degree_cap: Option<usize>) -> Self {
        let status = (0..g.n())
            .map(|v| match degree_cap {
                Some(cap) if g.degree(v) > cap => Status::Absent,
                _ => Status::Unverified,
            })
            .collect();
        Self::with_status(status, k)
    }

    /// Takes `members` as already verified.
    pub fn from_members(members: &VertexSet, n: usize, k: usize) -> Self {
        let mut status = vec![Status::Absent; n];
        for &v in members.iter().filter(|&&v| v < n) {
            status[v] = Status::Present;
        }
        Self::with_status(status, k)
    }

    /// Marks members with a neighbor in `changed` for re-checking.
    fn invalidate_around(&mut self, changed: &VertexSet, g: &Graph) {
        let mut is_changed = vec![false; g.n()];
        for &v in changed.iter().filter(|&&v| v < g.n()) {
            is_changed[v] = true;
        }
        for v in 0..g.n() {
            if self.status[v] == Status::Present && g.neighbors(v).iter().any(|&w| is_changed[w]) {
                self.status[v] = Status::Unverified;
            }
        }
    }

    /// The set restricted to `child`, the subgraph induced by the sorted
    /// index list `part`; `changed` lists, in `child`'s indices, the vertices
    /// that lost neighbors.
    pub fn carry(&self, part: &[usize], changed: &VertexSet, child: &Graph) -> Self {
        let status = part.iter().map(|&v| self.status[v]).collect();
        let mut out = Self::with_status(status, self.k);
        out.invalidate_around(changed, child);
        out
    }

    pub fn is_strong(&mut self, g: &Graph, v: usize) -> bool {
        if self.status[v] == Status::Unverified {
            let ok = check_marked(g, v, self.k, &mut self.marker, &mut self.pair_ok);
            self.status[v] = if ok { Status::Present } else { Status::Absent };
        }
        self.status[v] == Status::Present
    }

    /// Smallest-index strong side-vertex.
    pub fn first(&mut self, g: &Graph) -> Option<usize> {
        (0..self.status.len()).find(|&v| self.is_strong(g, v))
    }

    /// Verifies every pending member and returns the set.
    pub fn resolve_all(&mut self, g: &Graph) -> VertexSet {
        VertexSet::from_sorted(
            (0..self.status.len())
                .filter(|&v| self.is_strong(g, v))
                .collect(),
        )
    }
}
