//! Cohesiveness statistics for components: diameter, edge density and
//! clustering, kept as exact rationals until formatted.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::graph::{bfs_distances, Graph};

fn ratio(num: usize, den: usize) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Largest hop distance between two vertices, or `None` when `g` is
/// disconnected. Graphs with at most one vertex have diameter 0.
pub fn diameter(g: &Graph) -> Option<usize> {
    let mut best = 0;
    for s in 0..g.n() {
        for d in bfs_distances(g, s) {
            best = best.max(d?);
        }
    }
    Some(best)
}

/// Edge density of `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Density {
    pub value: BigRational,
    /// Set for graphs with fewer than two vertices, where the density is
    /// undefined and reported as 1.
    pub undefined: bool,
}

pub fn edge_density(g: &Graph) -> Density {
    let n = g.n();
    if n < 2 {
        return Density {
            value: ratio(1, 1),
            undefined: true,
        };
    }
    Density {
        value: ratio(2 * g.m(), n * (n - 1)),
        undefined: false,
    }
}

/// Local clustering coefficient; 0 for degree below 2.
pub fn local_clustering(g: &Graph, u: usize) -> BigRational {
    let nbrs = g.neighbors(u);
    let d = nbrs.len();
    if d < 2 {
        return BigRational::zero();
    }
    let links: usize = nbrs
        .iter()
        .enumerate()
        .map(|(i, &a)| nbrs[i + 1..].iter().filter(|&&b| g.has_edge(a, b)).count())
        .sum();
    ratio(2 * links, d * (d - 1))
}

/// Mean local clustering coefficient; 0 for the empty graph.
pub fn clustering_coefficient(g: &Graph) -> BigRational {
    if g.is_empty() {
        return BigRational::zero();
    }
    let total: BigRational = (0..g.n()).map(|u| local_clustering(g, u)).sum();
    total / BigInt::from(g.n())
}

/// `floor((n - 2) / k) + 1`, the diameter ceiling of a k-connected graph on
/// `n` vertices.
pub fn diameter_bound(n: usize, k: usize) -> usize {
    n.saturating_sub(2) / k.max(1) + 1
}

/// Whether `g`, taken as a k-VCC, respects the diameter ceiling.
pub fn diameter_bound_check(g: &Graph, k: usize) -> bool {
    diameter(g).is_some_and(|d| d <= diameter_bound(g.n(), k))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentStats {
    pub size: usize,
    pub edges: usize,
    pub diameter: Option<usize>,
    pub edge_density: BigRational,
    pub clustering: BigRational,
    pub diameter_bound: usize,
}

pub fn component_stats(g: &Graph, k: usize) -> ComponentStats {
    ComponentStats {
        size: g.n(),
        edges: g.m(),
        diameter: diameter(g),
        edge_density: edge_density(g).value,
        clustering: clustering_coefficient(g),
        diameter_bound: diameter_bound(g.n(), k),
    }
}

/// Exact means of diameter, density and clustering over `stats`, or `None`
/// when empty or some component is disconnected.
pub fn averages(stats: &[ComponentStats]) -> Option<(BigRational, BigRational, BigRational)> {
    if stats.is_empty() {
        return None;
    }
    let count = BigInt::from(stats.len());
    let mut diam = BigRational::zero();
    let mut density = BigRational::zero();
    let mut clustering = BigRational::zero();
    for s in stats {
        diam += ratio(s.diameter?, 1);
        density += &s.edge_density;
        clustering += &s.clustering;
    }
    Some((diam / &count, density / &count, clustering / count))
}

/// Six-decimal rendering of an exact rational.
pub fn format_decimal(r: &BigRational) -> String {
    format!("{:.6}", r.to_f64().unwrap_or(f64::NAN))
}

pub const CSV_HEADER: &str = "component_id,size,edges,diameter,edge_density,clustering";

/// `component_id,size,edges,diameter,edge_density,clustering`; a
/// disconnected component's diameter is written as `inf`.
pub fn csv_row(id: usize, s: &ComponentStats) -> String {
    let diameter = s
        .diameter
        .map_or_else(|| "inf".to_string(), |d| d.to_string());
    format!(
        "{id},{},{},{diameter},{},{}",
        s.size,
        s.edges,
        format_decimal(&s.edge_density),
        format_decimal(&s.clustering)
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn diameter_examples() {
        assert_eq!(diameter(&complete(5)), Some(1));
        assert_eq!(diameter(&cycle(6)), Some(3));
        assert_eq!(diameter(&path(5)), Some(4));
        assert_eq!(diameter(&Graph::from_edges(3, [(0, 1)])), None);
    }

    #[test]
    fn density_examples() {
        assert_eq!(edge_density(&complete(5)).value, ratio(1, 1));
        assert_eq!(edge_density(&cycle(6)).value, ratio(2, 5));
        assert_eq!(edge_density(&path(7)).value, ratio(2, 7));
        let single = edge_density(&Graph::from_edges(1, []));
        assert!(single.undefined && single.value == ratio(1, 1));
    }

    #[test]
    fn clustering_examples() {
        assert_eq!(clustering_coefficient(&complete(3)), ratio(1, 1));
        assert_eq!(clustering_coefficient(&star(4)), ratio(0, 1));
        let k4_minus = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
        // Degree-2 ends see one linked pair of one; degree-3 ends see two of three.
        assert_eq!(local_clustering(&k4_minus, 2), ratio(1, 1));
        assert_eq!(local_clustering(&k4_minus, 0), ratio(2, 3));
        assert_eq!(clustering_coefficient(&k4_minus), ratio(5, 6));
    }

    #[test]
    fn diameter_bound_examples() {
        assert_eq!(diameter_bound(5, 4), 1);
        assert!(diameter_bound_check(&complete(5), 4));
        assert_eq!(diameter_bound(6, 2), 3);
        assert!(diameter_bound_check(&cycle(6), 2));
        assert!(!diameter_bound_check(&path(5), 2));
    }

    #[test]
    fn averages_are_exact() {
        let stats = vec![
            component_stats(&complete(4), 3),
            component_stats(&cycle(6), 2),
        ];
        let (d, rho, c) = averages(&stats).unwrap();
        assert_eq!(d, ratio(4, 2));
        assert_eq!(rho, ratio(7, 10));
        assert_eq!(c, ratio(1, 2));
        assert_eq!(averages(&[]), None);
    }

    #[test]
    fn csv_rows() {
        let s = component_stats(&cycle(6), 2);
        assert_eq!(csv_row(0, &s), "0,6,6,3,0.400000,0.000000");
    }
}
