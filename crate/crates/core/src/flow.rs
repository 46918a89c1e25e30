//! Split-vertex flow network and capped unit-capacity max-flow.
//!
//! Every vertex `v` of the undirected graph becomes an arc `v' -> v''`, and
//! every edge `{u, v}` becomes the pair of arcs `u'' -> v'` and `v'' -> u'`.
//! All arcs have capacity one, so a flow of value `f` from `s''` to `t'` is a
//! set of `f` internally vertex-disjoint `s`-`t` paths, and a minimum edge cut
//! made only of vertex arcs is a minimum `s`-`t` vertex cut.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

const UNSEEN: u32 = u32::MAX;

/// A vertex cut together with its size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutResult {
    pub cut: VertexSet,
    pub size: usize,
}

#[derive(Clone, Copy, Debug)]
struct LastRun {
    source: usize,
    sink: usize,
    flow: usize,
    cap: usize,
}

/// Residual network over the split-vertex graph.
///
/// Forward arc `i` is stored at slot `2i` and its residual reverse at
/// `2i + 1`. Arcs `0..n` are the vertex arcs; the rest are edge arcs.
#[derive(Clone, Debug)]
pub struct FlowNetwork {
    n: usize,
    offsets: Vec<usize>,
    incident: Vec<u32>,
    head: Vec<u32>,
    residual: Vec<u8>,
    touched: Vec<u32>,
    level: Vec<u32>,
    cursor: Vec<usize>,
    last: Option<LastRun>,
}

#[inline]
fn in_node(v: usize) -> usize {
    2 * v
}

#[inline]
fn out_node(v: usize) -> usize {
    2 * v + 1
}

impl FlowNetwork {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let forward = n + 2 * g.m();
        let mut tail = Vec::with_capacity(forward);
        let mut head = Vec::with_capacity(2 * forward);
        for v in 0..n {
            tail.push(in_node(v) as u32);
        }
        for u in 0..n {
            tail.extend(g.neighbors(u).iter().map(|_| out_node(u) as u32));
        }
        // Heads, interleaved with reverse arcs.
        for v in 0..n {
            head.push(out_node(v) as u32);
            head.push(in_node(v) as u32);
        }
        for u in 0..n {
            for &v in g.neighbors(u) {
                head.push(in_node(v) as u32);
                head.push(out_node(u) as u32);
            }
        }
        let nodes = 2 * n;
        let mut out_degree = vec![0usize; nodes + 1];
        for i in 0..forward {
            out_degree[tail[i] as usize] += 1;
            out_degree[head[2 * i] as usize] += 1;
        }
        let mut offsets = vec![0usize; nodes + 1];
        for x in 0..nodes {
            offsets[x + 1] = offsets[x] + out_degree[x];
        }
        let mut fill = offsets.clone();
        let mut incident = vec![0u32; 2 * forward];
        for i in 0..forward {
            let t = tail[i] as usize;
            incident[fill[t]] = (2 * i) as u32;
            fill[t] += 1;
            let h = head[2 * i] as usize;
            incident[fill[h]] = (2 * i + 1) as u32;
            fill[h] += 1;
        }
        let residual = (0..2 * forward).map(|a| (a % 2 == 0) as u8).collect();
        FlowNetwork {
            n,
            offsets,
            incident,
            head,
            residual,
            touched: Vec::new(),
            level: vec![UNSEEN; nodes],
            cursor: vec![0; nodes],
            last: None,
        }
    }

    /// Number of original vertices.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn node_count(&self) -> usize {
        2 * self.n
    }

    /// Forward arcs, excluding residual reverses.
    pub fn arc_count(&self) -> usize {
        self.head.len() / 2
    }

    pub fn capacity(&self, arc: usize) -> u8 {
        assert!(arc < self.arc_count());
        1
    }

    /// Endpoints `(tail, head)` of forward arc `arc`.
    pub fn arc_endpoints(&self, arc: usize) -> (usize, usize) {
        (self.head[2 * arc + 1] as usize, self.head[2 * arc] as usize)
    }

    /// The original vertex a vertex arc stands for; `None` for edge arcs.
    pub fn arc_origin(&self, arc: usize) -> Option<usize> {
        (arc < self.n).then_some(arc)
    }

    /// Restores every arc to its full capacity.
    pub fn reset(&mut self) {
        for &pair in &self.touched {
            let a = 2 * pair as usize;
            self.residual[a] = 1;
            self.residual[a + 1] = 0;
        }
        self.touched.clear();
        self.last = None;
    }

    /// Maximum number of internally vertex-disjoint paths from `s` to `t`,
    /// stopping as soon as `cap` paths are found.
    ///
    /// Runs shortest-augmenting-path phases (Dinic) on the residual network.
    /// The residual state is kept for [`FlowNetwork::extract_vertex_cut`]
    /// until the next call.
    pub fn max_flow_capped(&mut self, s: usize, t: usize, cap: usize) -> usize {
        assert!(s != t, "flow endpoints must differ");
        assert!(s < self.n && t < self.n, "flow endpoint out of range");
        self.reset();
        let source = out_node(s);
        let sink = in_node(t);
        let mut flow = 0;
        while flow < cap && self.build_levels(source, sink) {
            while flow < cap && self.augment(source, sink) {
                flow += 1;
            }
        }
        self.last = Some(LastRun {
            source: s,
            sink: t,
            flow,
            cap,
        });
        flow
    }

    fn build_levels(&mut self, source: usize, sink: usize) -> bool {
        self.level.fill(UNSEEN);
        self.level[source] = 0;
        self.cursor[source] = self.offsets[source];
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            let next = self.level[x] + 1;
            if self.level[sink] != UNSEEN && next > self.level[sink] {
                break;
            }
            for idx in self.offsets[x]..self.offsets[x + 1] {
                let a = self.incident[idx] as usize;
                let y = self.head[a] as usize;
                if self.residual[a] > 0 && self.level[y] == UNSEEN {
                    self.level[y] = next;
                    self.cursor[y] = self.offsets[y];
                    queue.push_back(y);
                }
            }
        }
        self.level[sink] != UNSEEN
    }

    /// Finds one augmenting path in the level graph and pushes a unit along it.
    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut path: Vec<usize> = Vec::new();
        let mut x = source;
        loop {
            if x == sink {
                for &a in &path {
                    self.residual[a] -= 1;
                    self.residual[a ^ 1] += 1;
                    self.touched.push((a / 2) as u32);
                }
                return true;
            }
            let mut advanced = false;
            while self.cursor[x] < self.offsets[x + 1] {
                let a = self.incident[self.cursor[x]] as usize;
                let y = self.head[a] as usize;
                if self.residual[a] > 0
                    && self.level[y] != UNSEEN
                    && self.level[y] == self.level[x] + 1
                {
                    path.push(a);
                    x = y;
                    advanced = true;
                    break;
                }
                self.cursor[x] += 1;
            }
            if !advanced {
                if x == source {
                    return false;
                }
                // Dead end: prune the node from this phase and back up.
                self.level[x] = UNSEEN;
                let a = path.pop().expect("non-source node has an entering arc");
                x = self.head[a ^ 1] as usize;
                self.cursor[x] += 1;
            }
        }
    }

    /// Recovers a minimum vertex cut from the residual state of the last
    /// [`FlowNetwork::max_flow_capped`] run, which must have stopped below its
    /// cap.
    ///
    /// One search from the source marks reachable nodes. Edge arcs are treated
    /// as uncapacitated, which leaves the flow maximum and forces every
    /// boundary arc to be a vertex arc. The cut is the set of vertices whose
    /// in-node is reached and whose out-node is not.
    pub fn extract_vertex_cut(&self, g: &Graph) -> Result<CutResult> {
        if g.n() != self.n {
            return Err(Error::Contract(format!(
                "network has {} vertices but graph has {}",
                self.n,
                g.n()
            )));
        }
        let last = self
            .last
            .ok_or_else(|| Error::Contract("no flow has been computed".into()))?;
        if last.flow >= last.cap {
            return Err(Error::Contract(format!(
                "flow {} reached its cap {}; there is no cut below the cap",
                last.flow, last.cap
            )));
        }
        let nodes = 2 * self.n;
        let mut reached = vec![false; nodes];
        let source = out_node(last.source);
        reached[source] = true;
        let mut stack = vec![source];
        while let Some(x) = stack.pop() {
            for idx in self.offsets[x]..self.offsets[x + 1] {
                let a = self.incident[idx] as usize;
                let edge_arc = a.is_multiple_of(2) && a / 2 >= self.n;
                let y = self.head[a] as usize;
                if (self.residual[a] > 0 || edge_arc) && !reached[y] {
                    reached[y] = true;
                    stack.push(y);
                }
            }
        }
        debug_assert!(!reached[in_node(last.sink)]);
        let cut: Vec<usize> = (0..self.n)
            .filter(|&v| reached[in_node(v)] && !reached[out_node(v)])
            .collect();
        debug_assert_eq!(cut.len(), last.flow);
        let size = cut.len();
        Ok(CutResult {
            cut: VertexSet::from_sorted(cut),
            size,
        })
    }
}

/// Local connectivity test: a vertex cut of size below `k` separating `u`
/// from `v`, or `None` when `u` and `v` are `k`-locally connected.
///
/// Adjacent or equal pairs are never separable and skip the flow entirely.
pub fn loc_cut(
    u: usize,
    v: usize,
    fnet: &mut FlowNetwork,
    g: &Graph,
    k: usize,
) -> Option<CutResult> {
    if u == v || g.has_edge(u, v) {
        return None;
    }
    if fnet.max_flow_capped(u, v, k) >= k {
        return None;
    }
    Some(
        fnet.extract_vertex_cut(g)
            .expect("flow stopped below the cap on a network built from this graph"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::graph::Graph;
    use crate::oracle::exhaustive;

    fn k5_minus_edge() -> Graph {
        Graph::from_edges(
            5,
            (0..5)
                .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
                .filter(|&e| e != (0, 1)),
        )
    }

    #[test]
    fn network_shape() {
        // Four vertices and four edges give 8 nodes and 12 arcs.
        let fnet = FlowNetwork::new(&cycle(4));
        assert_eq!((fnet.node_count(), fnet.arc_count()), (8, 12));
        let fnet = FlowNetwork::new(&path(2));
        assert_eq!((fnet.node_count(), fnet.arc_count()), (4, 4));
        let fnet = FlowNetwork::new(&complete(3));
        assert_eq!((fnet.node_count(), fnet.arc_count()), (6, 9));
        for arc in 0..3 {
            assert_eq!(fnet.arc_origin(arc), Some(arc));
            assert_eq!(fnet.arc_endpoints(arc), (2 * arc, 2 * arc + 1));
        }
        assert!((3..9).all(|arc| fnet.arc_origin(arc).is_none() && fnet.capacity(arc) == 1));
    }

    #[test]
    fn c4_opposite_pair() {
        let g = cycle(4);
        let expected = exhaustive::local_connectivity(&g, 0, 2).unwrap();
        assert_eq!(expected, 2);
        let mut fnet = FlowNetwork::new(&g);
        assert_eq!(fnet.max_flow_capped(0, 2, 5), expected);
        let cut = fnet.extract_vertex_cut(&g).unwrap();
        assert_eq!(cut.cut.as_slice(), &[1, 3]);
        assert_eq!(cut.size, 2);
    }

    #[test]
    fn capped_flow_on_k5_minus_edge() {
        let g = k5_minus_edge();
        let mut fnet = FlowNetwork::new(&g);
        assert_eq!(fnet.max_flow_capped(0, 1, 5), 3);
        assert_eq!(fnet.max_flow_capped(0, 1, 2), 2);
        assert!(matches!(
            fnet.extract_vertex_cut(&g),
            Err(Error::Contract(_))
        ));
        // Reset restores a clean network.
        assert_eq!(fnet.max_flow_capped(1, 0, 5), 3);
    }

    #[test]
    fn extract_requires_a_flow() {
        let g = path(3);
        let fnet = FlowNetwork::new(&g);
        assert!(matches!(
            fnet.extract_vertex_cut(&g),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn two_k5_cut() {
        let g = two_k5();
        let expected = exhaustive::min_separator(&g, 0, 7).unwrap();
        assert_eq!(expected.as_slice(), &[3, 4]);
        let mut fnet = FlowNetwork::new(&g);
        let cut = loc_cut(0, 7, &mut fnet, &g, 3).unwrap();
        assert_eq!(cut.cut, expected);
    }

    #[test]
    fn path_interior_vertex() {
        let g = path(3);
        let mut fnet = FlowNetwork::new(&g);
        let cut = loc_cut(0, 2, &mut fnet, &g, 2).unwrap();
        assert_eq!(cut.cut.as_slice(), &[1]);
    }

    #[test]
    fn loc_cut_skips_adjacent_and_equal() {
        let g = two_k5();
        let mut fnet = FlowNetwork::new(&g);
        assert_eq!(loc_cut(0, 1, &mut fnet, &g, 3), None);
        assert_eq!(loc_cut(2, 2, &mut fnet, &g, 3), None);
        let k6 = complete(6);
        let mut fnet = FlowNetwork::new(&k6);
        for u in 0..6 {
            for v in 0..6 {
                assert_eq!(loc_cut(u, v, &mut fnet, &k6, 5), None);
            }
        }
    }

    #[test]
    fn cut_source_side_on_a_chain() {
        // 0 - {1,2} - 3 - {4,5} - 6: the cut nearest the source wins.
        let g = Graph::from_edges(
            7,
            [
                (0, 1),
                (0, 2),
                (1, 3),
                (2, 3),
                (3, 4),
                (3, 5),
                (4, 6),
                (5, 6),
            ],
        );
        let mut fnet = FlowNetwork::new(&g);
        assert_eq!(fnet.max_flow_capped(0, 6, 9), 1);
        assert_eq!(fnet.extract_vertex_cut(&g).unwrap().cut.as_slice(), &[3]);
    }
}
