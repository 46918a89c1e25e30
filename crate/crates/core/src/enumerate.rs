//! k-VCC enumeration by recursive overlapped partitioning.
//!
//! Each work item is peeled to its k-core and split into connected
//! components. A component without a vertex cut of size below `k` is a k-VCC;
//! otherwise it is split along the cut, with the cut copied into every part,
//! and the parts are queued.

use std::io::{BufRead, Write};

use rayon::prelude::*;

use crate::cut::{global_cut, Counters, StrongSideSet, Variant};
use crate::error::{Error, Result};
use crate::graph::{connected_components, k_core_vertices, Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerateOptions {
    pub variant: Variant,
    /// Threads draining the work queue; `1` runs on the calling thread.
    pub workers: usize,
    /// Vertices above this degree are not checked for the strong side-vertex
    /// condition.
    pub degree_cap: Option<usize>,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            variant: Variant::Star,
            workers: 1,
            degree_cap: None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VccResult {
    /// Label sets in canonical order: by size, then by smallest label.
    pub components: Vec<Vec<u64>>,
    pub counters: Counters,
    /// Overlapped partitions performed.
    pub partition_count: usize,
}

pub fn kvcc_enum(g: &Graph, k: usize, variant: Variant) -> Result<VccResult> {
    kvcc_enum_with(
        g,
        k,
        &EnumerateOptions {
            variant,
            ..Default::default()
        },
    )
}

pub fn kvcc_enum_with(g: &Graph, k: usize, opts: &EnumerateOptions) -> Result<VccResult> {
    if k < 1 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    if opts.workers < 1 {
        return Err(Error::InvalidArgument("workers must be at least 1".into()));
    }
    let mut result = VccResult::default();
    let mut frontier = vec![Task {
        graph: g.clone(),
        strong: None,
    }];
    let pool = if opts.workers > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(opts.workers)
                .build()
                .map_err(|e| Error::InvalidArgument(format!("cannot start workers: {e}")))?,
        )
    } else {
        None
    };
    while !frontier.is_empty() {
        let steps: Vec<Step> = match &pool {
            Some(pool) => pool.install(|| {
                frontier
                    .into_par_iter()
                    .map(|t| process(t, k, opts))
                    .collect()
            }),
            None => frontier.into_iter().map(|t| process(t, k, opts)).collect(),
        };
        frontier = Vec::new();
        for step in steps {
            result.components.extend(step.emitted);
            result.counters += step.counters;
            result.partition_count += step.partitions;
            frontier.extend(step.children);
        }
    }
    canonicalize(&mut result.components);
    debug_assert!(is_redundancy_free(&result.components));
    Ok(result)
}

/// A subgraph awaiting processing, with the strong side-vertices carried
/// over from its parent once they have been computed.
struct Task {
    graph: Graph,
    strong: Option<StrongSideSet>,
}

#[derive(Default)]
struct Step {
    emitted: Vec<Vec<u64>>,
    children: Vec<Task>,
    counters: Counters,
    partitions: usize,
}

/// Maps indices of `outer` into the induced subgraph on `part` (sorted).
fn localize(outer: &VertexSet, part: &[usize]) -> VertexSet {
    VertexSet::from_sorted(
        outer
            .iter()
            .filter_map(|v| part.binary_search(v).ok())
            .collect(),
    )
}

fn process(task: Task, k: usize, opts: &EnumerateOptions) -> Step {
    let mut step = Step::default();
    let Task { graph, mut strong } = task;
    let core = k_core_vertices(&graph, k);
    step.counters.kcore_pruned = graph.n() - core.len();
    if core.is_empty() {
        return step;
    }
    let graph = if core.len() == graph.n() {
        graph
    } else {
        let mut peeled = vec![true; graph.n()];
        core.iter().for_each(|&v| peeled[v] = false);
        let reduced = graph.induced(&core);
        let changed: VertexSet = core
            .iter()
            .enumerate()
            .filter(|&(_, &v)| graph.neighbors(v).iter().any(|&w| peeled[w]))
            .map(|(i, _)| i)
            .collect();
        strong = strong.map(|s| s.carry(&core, &changed, &reduced));
        reduced
    };
    if opts.variant.neighbor_sweep() && strong.is_none() {
        strong = Some(StrongSideSet::candidates(&graph, k, opts.degree_cap));
    }

    let components = connected_components(&graph);
    let pieces: Vec<(Graph, Option<StrongSideSet>)> = if components.len() == 1 {
        vec![(graph, strong)]
    } else {
        components
            .iter()
            .map(|comp| {
                let sub = graph.induced(comp);
                let carried = strong
                    .as_ref()
                    .map(|s| s.carry(comp, &VertexSet::default(), &sub));
                (sub, carried)
            })
            .collect()
    };
    for (sub, mut sub_strong) in pieces {
        match global_cut(
            &sub,
            k,
            opts.variant,
            sub_strong.as_mut(),
            &mut step.counters,
        ) {
            None => {
                let mut labels = sub.labels().to_vec();
                labels.sort_unstable();
                step.emitted.push(labels);
            }
            Some(cut) => {
                step.partitions += 1;
                let parts = overlap_partition_sets(&sub, &cut)
                    .expect("cut search returns a separating set");
                for part in parts {
                    let child = sub.induced(&part);
                    let child_strong = sub_strong
                        .as_ref()
                        .map(|s| s.carry(&part, &localize(&cut, &part), &child));
                    step.children.push(Task {
                        graph: child,
                        strong: child_strong,
                    });
                }
            }
        }
    }
    step
}

/// Vertex sets of the overlapped partition: each component of `g - cut`
/// together with `cut`, as sorted index sets of `g`.
pub fn overlap_partition_sets(g: &Graph, cut: &VertexSet) -> Result<Vec<VertexSet>> {
    if let Some(&bad) = cut.iter().find(|&&v| v >= g.n()) {
        return Err(Error::Contract(format!(
            "cut vertex {bad} is not in a graph of {} vertices",
            g.n()
        )));
    }
    let mut removed = vec![false; g.n()];
    cut.iter().for_each(|&v| removed[v] = true);
    let components = g.components_excluding(&removed);
    if components.len() < 2 {
        return Err(Error::Contract(format!(
            "{:?} does not disconnect the graph",
            cut.as_slice()
        )));
    }
    Ok(components
        .into_iter()
        .map(|c| c.iter().chain(cut.iter()).copied().collect())
        .collect())
}

/// Splits `g` along `cut`: one induced subgraph per component of `g - cut`,
/// each including the cut and the edges among cut vertices.
pub fn overlap_partition(g: &Graph, cut: &VertexSet) -> Result<Vec<Graph>> {
    Ok(overlap_partition_sets(g, cut)?
        .iter()
        .map(|part| g.induced(part))
        .collect())
}

/// Sorts members ascending and components by `(size, smallest label)`.
pub fn canonicalize(components: &mut [Vec<u64>]) {
    for c in components.iter_mut() {
        c.sort_unstable();
    }
    components.sort_by(|a, b| {
        (a.len(), a.first())
            .cmp(&(b.len(), b.first()))
            .then_with(|| a.cmp(b))
    });
}

fn is_redundancy_free(components: &[Vec<u64>]) -> bool {
    let is_subset = |a: &[u64], b: &[u64]| a.iter().all(|x| b.binary_search(x).is_ok());
    components.iter().enumerate().all(|(i, a)| {
        components
            .iter()
            .enumerate()
            .all(|(j, b)| i == j || a.len() > b.len() || !is_subset(a, b))
    })
}

/// Writes one component per line as space-separated labels.
pub fn write_components<W: Write>(components: &[Vec<u64>], mut out: W) -> std::io::Result<()> {
    for c in components {
        let line: Vec<String> = c.iter().map(u64::to_string).collect();
        writeln!(out, "{}", line.join(" "))?;
    }
    Ok(())
}

/// Run summary as ordered `(key, value)` pairs: `k`, `variant`,
/// `components`, `partitions`, then the counters.
pub fn stats_fields(result: &VccResult, k: usize, variant: Variant) -> Vec<(&'static str, String)> {
    let mut fields = vec![
        ("k", k.to_string()),
        ("variant", variant.to_string()),
        ("components", result.components.len().to_string()),
        ("partitions", result.partition_count.to_string()),
    ];
    fields.extend(
        result
            .counters
            .fields()
            .iter()
            .map(|&(key, value)| (key, value.to_string())),
    );
    fields
}

/// Writes `# key=value` lines describing a run; component parsers skip them.
pub fn write_stats<W: Write>(
    result: &VccResult,
    k: usize,
    variant: Variant,
    mut out: W,
) -> std::io::Result<()> {
    for (key, value) in stats_fields(result, k, variant) {
        writeln!(out, "# {key}={value}")?;
    }
    Ok(())
}

/// Reads a component list. Blank lines and lines starting with `#` are
/// skipped; the result is canonicalized.
pub fn parse_components<R: BufRead>(reader: R) -> Result<Vec<Vec<u64>>> {
    let mut components = Vec::new();
    for (i, line) in reader.split(b'\n').enumerate() {
        let line = line?;
        let line = std::str::from_utf8(&line).map_err(|_| Error::Parse {
            line: i + 1,
            message: "not valid UTF-8".into(),
        })?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut labels = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u64>().map_err(|_| Error::Parse {
                    line: i + 1,
                    message: format!("{tok:?} is not a vertex label"),
                })
            })
            .collect::<Result<Vec<u64>>>()?;
        labels.sort_unstable();
        if labels.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse {
                line: i + 1,
                message: "label repeated within a component".into(),
            });
        }
        components.push(labels);
    }
    canonicalize(&mut components);
    Ok(components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate_planted, gnp, PlantedConfig};
    use crate::graph::fixtures::*;
    use crate::oracle;

    #[test]
    fn two_k5_yields_both_cliques() {
        for v in Variant::ALL {
            let r = kvcc_enum(&two_k5(), 3, v).unwrap();
            assert_eq!(
                r.components,
                vec![vec![0, 1, 2, 3, 4], vec![3, 4, 5, 6, 7]],
                "{v}"
            );
            assert_eq!(r.partition_count, 1);
        }
    }

    #[test]
    fn complete_graph_size_clause() {
        let r = kvcc_enum(&complete(6), 5, Variant::Star).unwrap();
        assert_eq!(r.components, vec![(0..6).collect::<Vec<u64>>()]);
        assert!(kvcc_enum(&complete(6), 6, Variant::Star)
            .unwrap()
            .components
            .is_empty());
    }

    #[test]
    fn k_zero_is_rejected() {
        assert!(matches!(
            kvcc_enum(&complete(3), 0, Variant::Base),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn k_one_gives_nontrivial_connected_components() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (3, 4)]);
        let r = kvcc_enum(&g, 1, Variant::Star).unwrap();
        assert_eq!(r.components, vec![vec![3, 4], vec![0, 1, 2]]);
    }

    #[test]
    fn partition_duplicates_cut_edges() {
        let parts = overlap_partition(&two_k5(), &VertexSet::new(vec![3, 4])).unwrap();
        assert_eq!(parts.len(), 2);
        for p in &parts {
            assert_eq!((p.n(), p.m()), (5, 10));
            assert!(p.has_edge(p.index_of(3).unwrap(), p.index_of(4).unwrap()));
        }
        let parts = overlap_partition(&path(3), &VertexSet::new(vec![1])).unwrap();
        let edges: Vec<Vec<(u64, u64)>> = parts
            .iter()
            .map(|p| p.edges().map(|(u, v)| (p.label(u), p.label(v))).collect())
            .collect();
        assert_eq!(edges, vec![vec![(0, 1)], vec![(1, 2)]]);
    }

    #[test]
    fn partition_rejects_non_cuts() {
        assert!(matches!(
            overlap_partition(&complete(4), &VertexSet::new(vec![0])),
            Err(Error::Contract(_))
        ));
        assert!(matches!(
            overlap_partition(&complete(4), &VertexSet::new(vec![9])),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn partition_growth_is_bounded_by_the_cut() {
        for seed in 0..100u64 {
            let g = gnp(11, 0.45, seed);
            let Some(cut) = oracle::exhaustive::min_vertex_cut(&g) else {
                continue;
            };
            if cut.is_empty() {
                continue;
            }
            let k = cut.len() + 1;
            let mut removed = vec![false; g.n()];
            cut.iter().for_each(|&v| removed[v] = true);
            let comps = g.components_excluding(&removed);
            for (part, comp) in overlap_partition_sets(&g, &cut).unwrap().iter().zip(&comps) {
                let with = g.induced(part);
                let without = g.induced(comp);
                assert!(with.n() - without.n() < k);
                let cut_edges = g.induced(&cut).m();
                assert!(cut_edges <= (k - 1) * (k.saturating_sub(2)) / 2);
            }
        }
    }

    #[test]
    fn planted_cliques_are_recovered() {
        let cfg = PlantedConfig {
            cliques: 4,
            clique_size: 8,
            shared: 2,
            k: 4,
            extra_edges: 0,
            seed: 0,
        };
        let g = generate_planted(&cfg).unwrap();
        let r = kvcc_enum(&g, 4, Variant::Star).unwrap();
        let expected: Vec<Vec<u64>> = (0..4)
            .map(|i| cfg.clique(i).map(|v| v as u64).collect())
            .collect();
        assert_eq!(r.components, expected);
        for c in &r.components {
            let idx: VertexSet = c.iter().map(|&l| g.index_of(l).unwrap()).collect();
            assert!(oracle::is_k_connected(&g.induced(&idx), 4));
        }
    }

    #[test]
    fn matches_the_oracle_on_small_graphs() {
        for seed in 0..60u64 {
            let g = gnp(11, [0.3, 0.5, 0.7][(seed % 3) as usize], seed);
            for k in 2..5 {
                let expected: Vec<Vec<u64>> = oracle::kvcc_bruteforce(&g, k)
                    .unwrap()
                    .iter()
                    .map(|c| g.labels_of(c))
                    .collect();
                let mut expected = expected;
                canonicalize(&mut expected);
                for v in Variant::ALL {
                    assert_eq!(
                        kvcc_enum(&g, k, v).unwrap().components,
                        expected,
                        "seed {seed} k {k} {v}"
                    );
                }
            }
        }
    }

    #[test]
    fn workers_do_not_change_the_result() {
        let cfg = PlantedConfig {
            cliques: 6,
            clique_size: 9,
            shared: 2,
            k: 3,
            extra_edges: 4,
            seed: 5,
        };
        let g = generate_planted(&cfg).unwrap();
        let seq = kvcc_enum(&g, 3, Variant::Star).unwrap();
        let par = kvcc_enum_with(
            &g,
            3,
            &EnumerateOptions {
                workers: 4,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn component_list_round_trip() {
        let comps = vec![vec![3, 4, 5, 6, 7], vec![0, 1, 2, 3, 4]];
        let mut buf = Vec::new();
        write_components(&comps, &mut buf).unwrap();
        buf.extend_from_slice(b"# tested=3\n\n");
        let mut expected = comps;
        canonicalize(&mut expected);
        assert_eq!(parse_components(&buf[..]).unwrap(), expected);
    }

    #[test]
    fn component_parse_errors_name_the_line() {
        let err = parse_components(&b"1 2 3\n4 x\n"[..]).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(matches!(
            parse_components(&b"1 1\n"[..]),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn stats_block_lists_counters() {
        let r = kvcc_enum(&two_k5(), 3, Variant::Star).unwrap();
        let mut buf = Vec::new();
        write_stats(&r, 3, Variant::Star, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.lines().all(|l| l.starts_with("# ") && l.contains('=')));
        assert!(text.contains("# partitions=1\n"));
        assert!(text.contains("# swept_rule1="));
    }
}
