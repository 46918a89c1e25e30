//! Seeded synthetic graphs.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64(seed)` (rand_chacha
//! 0.3), reported as [`RNG_ALGORITHM`], so a seed names the same graph on
//! every run and platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const RNG_ALGORITHM: &str = "chacha8-seed_from_u64";

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`: each pair `u < v` is drawn in lexicographic order
/// and kept when a uniform `f64` falls below `p`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    gnp_with(n, p, &mut rng(seed))
}

pub fn gnp_with<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// A chain of cliques where consecutive cliques overlap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlantedConfig {
    pub cliques: usize,
    pub clique_size: usize,
    /// Vertices shared by consecutive cliques; must stay below `k`.
    pub shared: usize,
    pub k: usize,
    /// Random edges between vertices of different cliques.
    pub extra_edges: usize,
    pub seed: u64,
}

impl PlantedConfig {
    pub fn vertex_count(&self) -> usize {
        match self.cliques {
            0 => 0,
            c => c * self.clique_size - (c - 1) * self.shared,
        }
    }

    /// Members of clique `i`, a contiguous index range.
    pub fn clique(&self, i: usize) -> std::ops::Range<usize> {
        let start = i * (self.clique_size - self.shared);
        start..start + self.clique_size
    }
}

/// Builds the clique chain. Clique `i` occupies indices
/// `i * (size - shared) .. i * (size - shared) + size`, so without extra
/// edges every clique is a k-VCC and every shared block is a cut.
pub fn generate_planted(cfg: &PlantedConfig) -> Result<Graph> {
    if cfg.shared >= cfg.k {
        return Err(Error::InvalidArgument(format!(
            "shared ({}) must be below k ({}) or the cliques merge",
            cfg.shared, cfg.k
        )));
    }
    if cfg.clique_size <= cfg.k {
        return Err(Error::InvalidArgument(format!(
            "clique size ({}) must exceed k ({})",
            cfg.clique_size, cfg.k
        )));
    }
    let n = cfg.vertex_count();
    let mut edges = Vec::new();
    for i in 0..cfg.cliques {
        let members = cfg.clique(i);
        for u in members.clone() {
            for v in u + 1..members.end {
                edges.push((u, v));
            }
        }
    }
    if cfg.extra_edges > 0 && cfg.cliques > 1 {
        let mut rng = rng(cfg.seed);
        let mut added = 0;
        let mut attempts = 0;
        while added < cfg.extra_edges && attempts < 100 * cfg.extra_edges {
            attempts += 1;
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            let (lo, hi) = (u.min(v), u.max(v));
            let together = (0..cfg.cliques)
                .any(|i| cfg.clique(i).contains(&lo) && cfg.clique(i).contains(&hi));
            if lo != hi && !together {
                edges.push((lo, hi));
                added += 1;
            }
        }
    }
    Ok(Graph::from_edges(n, edges))
}
