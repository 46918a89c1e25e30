//! Global vertex-cut search: find a vertex cut of size below `k`, or report
//! that the graph is k-connected.

mod side;
mod sweep;

use std::fmt;
use std::str::FromStr;

use crate::certificate::sparse_certificate;
use crate::error::Error;
use crate::flow::{loc_cut, FlowNetwork};
use crate::graph::{bfs_distances, Graph, VertexSet};

pub use side::{
    detect_strong_side_vertices, is_strong_side_vertex, maintain_strong_side_vertices,
    strong_side_flags, StrongSideSet,
};
pub use sweep::{SweepReason, SweepState, SweepTally};

/// Which pruning rules the cut search applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Plain search: one flow per vertex plus neighbor pairs of the source.
    Base,
    /// Strong side-vertex and deposit sweeping.
    NeighborSweep,
    /// Side-group sweeping.
    GroupSweep,
    /// Both sweeping families.
    Star,
}

impl Variant {
    pub const ALL: [Variant; 4] = [
        Variant::Base,
        Variant::NeighborSweep,
        Variant::GroupSweep,
        Variant::Star,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Base => "base",
            Variant::NeighborSweep => "ns",
            Variant::GroupSweep => "gs",
            Variant::Star => "star",
        }
    }

    pub fn neighbor_sweep(self) -> bool {
        matches!(self, Variant::NeighborSweep | Variant::Star)
    }

    pub fn group_sweep(self) -> bool {
        matches!(self, Variant::GroupSweep | Variant::Star)
    }

    fn sweeps(self) -> bool {
        self != Variant::Base
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "unknown variant {s:?}; expected base, ns, gs or star"
                ))
            })
    }
}

/// Work done by cut searches, summed over calls.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Counters {
    /// Phase-one vertices that needed a flow computation.
    pub tested: usize,
    /// Vertices swept as neighbors of a swept strong side-vertex.
    pub swept_strong_neighbor: usize,
    /// Vertices swept after collecting `k` deposits.
    pub swept_deposit: usize,
    /// Vertices swept with their side-group.
    pub swept_group: usize,
    /// Cut searches run (one source each).
    pub searches: usize,
    /// Neighbor pairs of the source that needed a flow computation.
    pub pairs_tested: usize,
    /// Neighbor pairs skipped because both ends share a side-group.
    pub pairs_skipped: usize,
    /// Vertices removed by k-core peeling.
    pub kcore_pruned: usize,
    /// Searches repeated on the full graph because a certificate cut did not
    /// separate it.
    pub certificate_fallbacks: usize,
}

impl Counters {
    pub fn swept(&self) -> usize {
        self.swept_strong_neighbor + self.swept_deposit + self.swept_group
    }

    /// Named fields in a fixed order, for reporting.
    pub fn fields(&self) -> [(&'static str, usize); 9] {
        [
            ("tested", self.tested),
            ("swept_rule1", self.swept_strong_neighbor),
            ("swept_rule2", self.swept_deposit),
            ("swept_group", self.swept_group),
            ("kcore_pruned", self.kcore_pruned),
            ("searches", self.searches),
            ("pairs_tested", self.pairs_tested),
            ("pairs_skipped", self.pairs_skipped),
            ("certificate_fallbacks", self.certificate_fallbacks),
        ]
    }

    fn add_tally(&mut self, tally: SweepTally) {
        self.swept_strong_neighbor += tally.strong_neighbor;
        self.swept_deposit += tally.deposit;
        self.swept_group += tally.group;
    }
}

impl std::ops::AddAssign for Counters {
    fn add_assign(&mut self, o: Counters) {
        self.tested += o.tested;
        self.swept_strong_neighbor += o.swept_strong_neighbor;
        self.swept_deposit += o.swept_deposit;
        self.swept_group += o.swept_group;
        self.searches += o.searches;
        self.pairs_tested += o.pairs_tested;
        self.pairs_skipped += o.pairs_skipped;
        self.kcore_pruned += o.kcore_pruned;
        self.certificate_fallbacks += o.certificate_fallbacks;
    }
}

/// Cut search without pruning.
pub fn global_cut_basic(g: &Graph, k: usize) -> Option<VertexSet> {
    global_cut(g, k, Variant::Base, None, &mut Counters::default())
}

/// Cut search with every pruning rule.
pub fn global_cut_star(g: &Graph, k: usize, counters: &mut Counters) -> Option<VertexSet> {
    global_cut(g, k, Variant::Star, None, counters)
}

/// Finds a vertex cut of `g` with fewer than `k` vertices, or `None` when `g`
/// is k-connected.
///
/// `g` should be connected with minimum degree at least `k`, as produced by
/// k-core peeling; an empty cut is returned for a disconnected graph and
/// `None` for graphs with fewer than two vertices. `strong` holds the strong
/// side-vertices of `g` and is computed when missing and the variant needs
/// it. Flows run on a sparse certificate of `g`; the returned cut always
/// separates `g` itself.
pub fn global_cut(
    g: &Graph,
    k: usize,
    variant: Variant,
    strong: Option<&mut StrongSideSet>,
    counters: &mut Counters,
) -> Option<VertexSet> {
    if g.n() < 2 || k == 0 {
        return None;
    }
    if !crate::graph::is_connected(g) {
        return Some(VertexSet::default());
    }
    let mut computed;
    let mut strong = match (variant.neighbor_sweep(), strong) {
        (false, _) => None,
        (true, Some(set)) => Some(set),
        (true, None) => {
            computed = StrongSideSet::candidates(g, k, None);
            Some(&mut computed)
        }
    };
    let cert = sparse_certificate(g, k);
    let groups = if variant.group_sweep() {
        &cert.side_groups[..]
    } else {
        &[]
    };
    let search = Search {
        g,
        k,
        variant,
        groups,
    };
    match search.run(&cert.graph, strong.as_deref_mut(), counters) {
        Some(cut) if !separates(g, &cut) => {
            counters.certificate_fallbacks += 1;
            search.run(g, strong, counters)
        }
        found => found,
    }
}

/// Whether removing `cut` leaves `g` with at least two components.
pub fn separates(g: &Graph, cut: &[usize]) -> bool {
    let mut removed = vec![false; g.n()];
    for &v in cut {
        removed[v] = true;
    }
    g.components_excluding(&removed).len() >= 2
}

/// Flow network built on the first local connectivity test.
struct LazyNetwork<'a> {
    graph: &'a Graph,
    network: Option<FlowNetwork>,
}

impl<'a> LazyNetwork<'a> {
    fn new(graph: &'a Graph) -> Self {
        LazyNetwork {
            graph,
            network: None,
        }
    }

    fn loc_cut(&mut self, u: usize, v: usize, k: usize) -> Option<VertexSet> {
        let graph = self.graph;
        let network = self.network.get_or_insert_with(|| FlowNetwork::new(graph));
        loc_cut(u, v, network, graph, k).map(|c| c.cut)
    }
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    variant: Variant,
    groups: &'a [VertexSet],
}

impl Search<'_> {
    /// Phase-one visiting order: farthest from the source first, ties by
    /// index.
    fn order(&self, source: usize) -> Vec<usize> {
        let n = self.g.n();
        if !self.variant.sweeps() {
            return (0..n).collect();
        }
        let dist = bfs_distances(self.g, source);
        let levels = dist.iter().flatten().max().map_or(0, |&d| d + 1);
        let mut buckets = vec![Vec::new(); levels];
        let mut unreachable = Vec::new();
        for (v, d) in dist.into_iter().enumerate() {
            match d {
                Some(d) => buckets[d].push(v),
                None => unreachable.push(v),
            }
        }
        unreachable
            .into_iter()
            .chain(buckets.into_iter().rev().flatten())
            .collect()
    }

    fn run(
        &self,
        flow_graph: &Graph,
        mut strong: Option<&mut StrongSideSet>,
        counters: &mut Counters,
    ) -> Option<VertexSet> {
        let (g, k) = (self.g, self.k);
        let mut fnet = LazyNetwork::new(flow_graph);
        let strong_source = strong.as_mut().and_then(|s| s.first(g));
        let source = strong_source
            .or_else(|| flow_graph.min_degree_vertex())
            .unwrap_or(0);
        counters.searches += 1;

        let sweeps = self.variant.sweeps();
        let mut state = SweepState::new(g.n(), k, strong, self.groups);
        if sweeps {
            state.sweep(source, SweepReason::Source, g);
        }
        let mut found = None;
        for v in self.order(source) {
            if v == source || (sweeps && state.is_swept(v)) {
                continue;
            }
            counters.tested += 1;
            if let Some(cut) = fnet.loc_cut(source, v, k) {
                found = Some(cut);
                break;
            }
            if sweeps {
                state.sweep(v, SweepReason::Tested, g);
            }
        }
        counters.add_tally(state.tally());
        if found.is_some() || strong_source.is_some() {
            return found;
        }

        let nbrs = flow_graph.neighbors(source);
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                let same_group = state
                    .group_of(a)
                    .is_some_and(|ga| state.group_of(b) == Some(ga));
                if same_group {
                    counters.pairs_skipped += 1;
                    continue;
                }
                counters.pairs_tested += 1;
                if let Some(cut) = fnet.loc_cut(a, b, k) {
                    return Some(cut);
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate_planted, gnp, PlantedConfig};
    use crate::graph::fixtures::*;
    use crate::graph::k_core_reduce;
    use crate::oracle;

    #[test]
    fn variant_names_round_trip() {
        for v in Variant::ALL {
            assert_eq!(v.name().parse::<Variant>().unwrap(), v);
        }
        assert!("fast".parse::<Variant>().is_err());
    }

    #[test]
    fn two_k5_cut_is_the_shared_pair() {
        for v in Variant::ALL {
            let cut = global_cut(&two_k5(), 3, v, None, &mut Counters::default());
            assert_eq!(cut.unwrap().as_slice(), &[3, 4], "{v}");
        }
    }

    #[test]
    fn complete_graphs_have_no_small_cut() {
        for v in Variant::ALL {
            assert_eq!(
                global_cut(&complete(6), 4, v, None, &mut Counters::default()),
                None
            );
        }
    }

    #[test]
    fn star_sweeps_a_clique_without_flows() {
        let mut c = Counters::default();
        assert_eq!(global_cut_star(&complete(6), 4, &mut c), None);
        assert_eq!(c.tested, 0);
        assert_eq!(c.swept(), 5);
        assert_eq!(c.pairs_tested, 0);
    }

    #[test]
    fn basic_tests_every_other_vertex() {
        let mut c = Counters::default();
        assert_eq!(
            global_cut(&complete(6), 4, Variant::Base, None, &mut c),
            None
        );
        assert_eq!(c.tested, 5);
        assert_eq!(c.swept(), 0);
    }

    #[test]
    fn disconnected_graph_has_empty_cut() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]);
        assert_eq!(global_cut_basic(&g, 1), Some(VertexSet::default()));
    }

    #[test]
    fn variants_agree_with_the_oracle() {
        let mut cases = 0;
        for seed in 0..300u64 {
            let n = 6 + (seed % 9) as usize;
            let raw = gnp(n, [0.4, 0.6, 0.8][(seed % 3) as usize], seed);
            for k in 2..5 {
                let g = k_core_reduce(&raw, k);
                if g.n() < 2 || !crate::graph::is_connected(&g) {
                    continue;
                }
                cases += 1;
                let connected = oracle::is_k_connected(&g, k);
                for v in Variant::ALL {
                    let found = global_cut(&g, k, v, None, &mut Counters::default());
                    assert_eq!(found.is_none(), connected, "seed {seed} k {k} {v}");
                    if let Some(cut) = found {
                        assert!(
                            cut.len() < k && separates(&g, &cut),
                            "seed {seed} k {k} {v}"
                        );
                    }
                }
            }
        }
        assert!(cases > 300);
    }

    #[test]
    fn swept_and_tested_account_for_every_vertex() {
        for seed in 0..100u64 {
            let g = k_core_reduce(&gnp(16, 0.8, seed), 3);
            if g.n() < 2 || !oracle::is_k_connected(&g, 3) {
                continue;
            }
            for v in Variant::ALL {
                let mut c = Counters::default();
                assert_eq!(global_cut(&g, 3, v, None, &mut c), None);
                assert_eq!(c.tested + c.swept() + c.searches, g.n(), "seed {seed} {v}");
            }
        }
    }

    #[test]
    fn planted_chain_sweeps_more_than_it_tests() {
        let cfg = PlantedConfig {
            cliques: 4,
            clique_size: 12,
            shared: 2,
            k: 3,
            extra_edges: 0,
            seed: 0,
        };
        let g = generate_planted(&cfg).unwrap();
        let mut c = Counters::default();
        let cut = global_cut_star(&g, 3, &mut c).unwrap();
        assert_eq!(cut.len(), 2);
        assert!(c.swept() > c.tested);
    }
}
