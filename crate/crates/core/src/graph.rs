//! Undirected simple graphs with stable external labels.
//!
//! Every algorithm in the crate works on dense `0..n` vertex indices. The
//! external label of each vertex (the integer that appeared in the input
//! file) travels with the graph through induced subgraphs and partitions, so
//! results can always be reported in the caller's vocabulary.

use std::collections::{HashMap, VecDeque};
use std::io::{BufRead, Write};
use std::ops::Deref;

use crate::error::{Error, Result};

/// A sorted, duplicate-free set of vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet(members)
    }
}

impl Deref for VertexSet {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Immutable undirected simple graph.
///
/// Neighbor lists are sorted ascending and symmetric; there are no self-loops
/// or parallel edges.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<u64>,
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices labelled `0..n`. Self-loops are dropped
    /// and repeated edges collapse into one.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_labeled_edges((0..n as u64).collect(), edges)
    }

    /// Like [`Graph::from_edges`], with `labels[i]` as the external label of
    /// vertex `i`.
    pub fn from_labeled_edges<I>(labels: Vec<u64>, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = labels.len();
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            assert!(
                u < n && v < n,
                "edge ({u}, {v}) out of range for {n} vertices"
            );
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        Self::from_adjacency(labels, adj)
    }

    /// Builds a graph from pairs of external labels. Dense indices follow
    /// ascending label order.
    pub fn from_label_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let pairs: Vec<(u64, u64)> = pairs.into_iter().collect();
        let mut labels: Vec<u64> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        labels.sort_unstable();
        labels.dedup();
        let index: HashMap<u64, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let edges: Vec<(usize, usize)> = pairs.iter().map(|(a, b)| (index[a], index[b])).collect();
        Self::from_labeled_edges(labels, edges)
    }

    fn from_adjacency(labels: Vec<u64>, mut adj: Vec<Vec<usize>>) -> Self {
        let mut degree_sum = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            degree_sum += list.len();
        }
        Graph {
            labels,
            adj,
            m: degree_sum / 2,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn label(&self, v: usize) -> u64 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    /// Index of the vertex carrying `label`, if any.
    pub fn index_of(&self, label: u64) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Each edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Smallest-index vertex among those of minimum degree.
    pub fn min_degree_vertex(&self) -> Option<usize> {
        (0..self.n()).min_by_key(|&v| (self.degree(v), v))
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Maps labels of a set of internal indices.
    pub fn labels_of(&self, vs: &[usize]) -> Vec<u64> {
        vs.iter().map(|&v| self.labels[v]).collect()
    }

    /// Induced subgraph on a sorted, duplicate-free, in-range index list.
    /// Vertex `i` of the result is `vs[i]` of `self`.
    pub(crate) fn induced(&self, vs: &[usize]) -> Graph {
        let mut position = vec![usize::MAX; self.n()];
        for (i, &v) in vs.iter().enumerate() {
            position[v] = i;
        }
        let mut m = 0;
        let adj: Vec<Vec<usize>> = vs
            .iter()
            .map(|&v| {
                let mut list = Vec::with_capacity(self.adj[v].len());
                list.extend(
                    self.adj[v]
                        .iter()
                        .map(|&w| position[w])
                        .filter(|&p| p != usize::MAX),
                );
                m += list.len();
                list
            })
            .collect();
        Graph {
            labels: vs.iter().map(|&v| self.labels[v]).collect(),
            adj,
            m: m / 2,
        }
    }

    /// Connected components of the graph with the `excluded` vertices
    /// removed, each sorted, ordered by smallest member.
    pub(crate) fn components_excluding(&self, excluded: &[bool]) -> Vec<VertexSet> {
        let n = self.n();
        let mut component = vec![usize::MAX; n];
        let mut sizes = Vec::new();
        let mut stack = Vec::new();
        for root in 0..n {
            if excluded[root] || component[root] != usize::MAX {
                continue;
            }
            let id = sizes.len();
            component[root] = id;
            stack.push(root);
            let mut size = 0;
            while let Some(v) = stack.pop() {
                size += 1;
                for &w in &self.adj[v] {
                    if !excluded[w] && component[w] == usize::MAX {
                        component[w] = id;
                        stack.push(w);
                    }
                }
            }
            sizes.push(size);
        }
        let mut members: Vec<Vec<usize>> = sizes.iter().map(|&s| Vec::with_capacity(s)).collect();
        for (v, &c) in component.iter().enumerate() {
            if let Some(list) = members.get_mut(c) {
                list.push(v);
            }
        }
        members.into_iter().map(VertexSet::from_sorted).collect()
    }
}

/// Parses an edge list from text. See [`load_edge_list`].
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    load_edge_list(text.as_bytes())
}

/// Reads a whitespace-separated edge list, one `u v` pair per line.
///
/// Lines starting with `#` and blank lines are skipped. The graph is read as
/// undirected: self-loops are dropped and duplicate edges collapse.
pub fn load_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
    let mut pairs = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line.map_err(|e| match e.kind() {
            std::io::ErrorKind::InvalidData => Error::Parse {
                line: line_no,
                message: "not valid UTF-8".into(),
            },
            _ => Error::Io(e),
        })?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let mut next_label = || -> Result<u64> {
            let token = tokens.next().ok_or_else(|| Error::Parse {
                line: line_no,
                message: "expected two vertex labels".into(),
            })?;
            token.parse::<u64>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("`{token}` is not a non-negative integer label"),
            })
        };
        let u = next_label()?;
        let v = next_label()?;
        if let Some(extra) = tokens.next() {
            return Err(Error::Parse {
                line: line_no,
                message: format!("unexpected trailing token `{extra}`"),
            });
        }
        pairs.push((u, v));
    }
    Ok(Graph::from_label_pairs(pairs))
}

/// Writes every edge once as a `label label` line.
pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> std::io::Result<()> {
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", g.label(u), g.label(v))?;
    }
    Ok(())
}

/// Vertices of the k-core, found by queue-based peeling in `O(n + m)`.
pub fn k_core_vertices(g: &Graph, k: usize) -> VertexSet {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| degree[v] < k).collect();
    for &v in &queue {
        removed[v] = true;
    }
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
                if degree[w] < k {
                    removed[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    VertexSet::from_sorted((0..n).filter(|&v| !removed[v]).collect())
}

/// The maximal subgraph in which every vertex has degree at least `k`.
pub fn k_core_reduce(g: &Graph, k: usize) -> Graph {
    g.induced(&k_core_vertices(g, k))
}

/// Maximal connected vertex sets, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    g.components_excluding(&vec![false; g.n()])
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() <= 1 || connected_components(g).len() == 1
}

/// `G[vs]`: every edge of `g` with both endpoints in `vs`, labels preserved.
pub fn induced_subgraph(g: &Graph, vs: &VertexSet) -> Result<Graph> {
    if let Some(&bad) = vs.iter().find(|&&v| v >= g.n()) {
        return Err(Error::Contract(format!(
            "vertex {bad} is not in a graph of {} vertices",
            g.n()
        )));
    }
    Ok(g.induced(vs))
}

/// Hop distances from `source`; `None` marks unreachable vertices.
pub fn bfs_distances(g: &Graph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        let next = dist[v].map(|d| d + 1);
        for &w in g.neighbors(v) {
            if dist[w].is_none() {
                dist[w] = next;
                queue.push_back(w);
            }
        }
    }
    dist
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::Graph;

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
    }

    /// Two K5s on `{0..4}` and `{3..7}`, sharing vertices 3 and 4.
    pub fn two_k5() -> Graph {
        let a = [0, 1, 2, 3, 4];
        let b = [3, 4, 5, 6, 7];
        let mut edges = Vec::new();
        for clique in [a, b] {
            for i in 0..5 {
                for j in i + 1..5 {
                    edges.push((clique[i], clique[j]));
                }
            }
        }
        Graph::from_edges(8, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_triangle() {
        let g = parse_edge_list("0 1\n1 2\n2 0").unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
    }

    #[test]
    fn drops_self_loops_and_duplicates() {
        let g = parse_edge_list("0 1\n1 0\n0 0").unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn skips_comments_and_keeps_labels() {
        let g = parse_edge_list("# comment\n5 9").unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
        assert_eq!(g.labels(), &[5, 9]);
    }

    #[test]
    fn tabs_and_blank_lines() {
        let g = parse_edge_list("\n1\t2\r\n\n  2   3  \n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
    }

    #[test]
    fn empty_input_is_empty_graph() {
        let g = parse_edge_list("").unwrap();
        assert!(g.is_empty());
        assert_eq!(g.m(), 0);
    }

    #[test]
    fn malformed_line_names_line_number() {
        for (text, line) in [
            ("0 1\n1 x\n", 2),
            ("0 1\n\n7\n", 3),
            ("1 2 3", 1),
            ("-1 2", 1),
        ] {
            match parse_edge_list(text) {
                Err(Error::Parse { line: got, .. }) => assert_eq!(got, line, "{text:?}"),
                other => panic!("expected parse error for {text:?}, got {other:?}"),
            }
        }
    }

    #[test]
    fn k_core_examples() {
        assert_eq!(k_core_reduce(&complete(5), 4), complete(5));
        assert!(k_core_reduce(&path(3), 2).is_empty());
        let pendant = Graph::from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)]);
        let core = k_core_reduce(&pendant, 2);
        assert_eq!(core.labels(), &[0, 1, 2]);
        assert_eq!(core.m(), 3);
    }

    #[test]
    fn component_examples() {
        let two = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        let comps = connected_components(&two);
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 3));
        assert_eq!(comps[0].as_slice(), &[0, 1, 2]);
        assert_eq!(connected_components(&cycle(5)).len(), 1);
        assert!(connected_components(&Graph::default()).is_empty());
    }

    #[test]
    fn induced_examples() {
        let k4 = complete(4);
        assert_eq!(
            induced_subgraph(&k4, &VertexSet::new(vec![0, 1, 3]))
                .unwrap()
                .m(),
            3
        );
        let c6 = cycle(6);
        assert_eq!(induced_subgraph(&c6, &(0..6).collect()).unwrap(), c6);
        let single = induced_subgraph(&c6, &VertexSet::new(vec![4])).unwrap();
        assert_eq!((single.n(), single.m(), single.label(0)), (1, 0, 4));
        assert!(matches!(
            induced_subgraph(&c6, &VertexSet::new(vec![6])),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn bfs_examples() {
        let mut d: Vec<usize> = bfs_distances(&cycle(6), 2)
            .into_iter()
            .map(Option::unwrap)
            .collect();
        d.sort();
        assert_eq!(d, vec![0, 1, 1, 2, 2, 3]);
        assert!(bfs_distances(&star(4), 0)[1..]
            .iter()
            .all(|&x| x == Some(1)));
        let g = Graph::from_edges(3, [(0, 1)]);
        assert_eq!(bfs_distances(&g, 0)[2], None);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..16).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..(n * 3))
                .prop_map(move |edges| Graph::from_edges(n, edges))
        })
    }

    proptest! {
        #[test]
        fn graph_invariants(g in arb_graph()) {
            let mut degree_sum = 0;
            for u in 0..g.n() {
                let list = g.neighbors(u);
                prop_assert!(list.windows(2).all(|w| w[0] < w[1]));
                prop_assert!(!list.contains(&u));
                for &v in list {
                    prop_assert!(g.neighbors(v).contains(&u));
                }
                degree_sum += list.len();
            }
            prop_assert_eq!(degree_sum, 2 * g.m());
        }

        #[test]
        fn edge_list_round_trip(g in arb_graph()) {
            let mut buf = Vec::new();
            write_edge_list(&g, &mut buf).unwrap();
            let back = load_edge_list(buf.as_slice()).unwrap();
            // Isolated vertices do not survive an edge list.
            let expected = k_core_reduce(&g, 1);
            prop_assert_eq!(back.labels(), expected.labels());
            let relabel = |h: &Graph| -> Vec<(u64, u64)> {
                h.edges().map(|(u, v)| (h.label(u), h.label(v))).collect()
            };
            prop_assert_eq!(relabel(&back), relabel(&expected));
        }

        #[test]
        fn k_core_is_idempotent_subgraph(g in arb_graph(), k in 1usize..5) {
            let core = k_core_reduce(&g, k);
            prop_assert_eq!(k_core_reduce(&core, k), core.clone());
            prop_assert!(core.is_empty() || core.min_degree() >= k);
            for (u, v) in core.edges() {
                let (a, b) = (g.index_of(core.label(u)).unwrap(), g.index_of(core.label(v)).unwrap());
                prop_assert!(g.has_edge(a, b));
            }
        }

        #[test]
        fn components_induce_connected_graphs(g in arb_graph()) {
            let comps = connected_components(&g);
            prop_assert_eq!(comps.iter().map(|c| c.len()).sum::<usize>(), g.n());
            for c in &comps {
                prop_assert!(is_connected(&induced_subgraph(&g, c).unwrap()));
            }
        }
    }
}
