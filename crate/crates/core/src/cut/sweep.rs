//! Sweeping: marking vertices whose local connectivity to the source is
//! already known to be at least `k`, so no flow is run for them.

use super::side::StrongSideSet;
use crate::graph::{Graph, VertexSet};

/// Why a vertex was marked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepReason {
    Source,
    Tested,
    /// Neighbor of a swept strong side-vertex.
    StrongNeighbor,
    /// Collected `k` deposits from swept neighbors.
    Deposit,
    /// Member of a side-group that was swept as a whole.
    Group,
}

/// How many vertices were marked for each reason.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SweepTally {
    pub source: usize,
    pub tested: usize,
    pub strong_neighbor: usize,
    pub deposit: usize,
    pub group: usize,
}

impl SweepTally {
    pub fn total(&self) -> usize {
        self.source + self.tested + self.strong_neighbor + self.deposit + self.group
    }

    fn record(&mut self, reason: SweepReason) {
        match reason {
            SweepReason::Source => self.source += 1,
            SweepReason::Tested => self.tested += 1,
            SweepReason::StrongNeighbor => self.strong_neighbor += 1,
            SweepReason::Deposit => self.deposit += 1,
            SweepReason::Group => self.group += 1,
        }
    }
}

/// Sweep bookkeeping for one cut search.
///
/// Every vertex is marked at most once; sweeping a marked vertex is a no-op.
#[derive(Debug)]
pub struct SweepState<'a> {
    k: usize,
    swept: Vec<bool>,
    deposit: Vec<usize>,
    strong: Option<&'a mut StrongSideSet>,
    groups: &'a [VertexSet],
    group_of: Vec<Option<usize>>,
    group_deposit: Vec<usize>,
    group_done: Vec<bool>,
    stack: Vec<usize>,
    tally: SweepTally,
}

impl<'a> SweepState<'a> {
    /// `strong` enables the neighbor rules when given; `groups` enables group
    /// sweeping when non-empty.
    pub fn new(
        n: usize,
        k: usize,
        strong: Option<&'a mut StrongSideSet>,
        groups: &'a [VertexSet],
    ) -> Self {
        let mut group_of = vec![None; n];
        for (i, group) in groups.iter().enumerate() {
            for &v in group {
                group_of[v] = Some(i);
            }
        }
        SweepState {
            k,
            swept: vec![false; n],
            deposit: vec![0; n],
            strong,
            groups,
            group_of,
            group_deposit: vec![0; groups.len()],
            group_done: vec![false; groups.len()],
            stack: Vec::new(),
            tally: SweepTally::default(),
        }
    }

    pub fn is_swept(&self, v: usize) -> bool {
        self.swept[v]
    }

    pub fn deposit(&self, v: usize) -> usize {
        self.deposit[v]
    }

    pub fn group_done(&self, group: usize) -> bool {
        self.group_done[group]
    }

    pub fn group_of(&self, v: usize) -> Option<usize> {
        self.group_of[v]
    }

    pub fn tally(&self) -> SweepTally {
        self.tally
    }

    /// Strong side-vertex status of `v`, looked up only when some rule
    /// could still use it.
    fn is_strong_if_useful(&mut self, v: usize, g: &Graph) -> bool {
        let open_neighbor = self.strong.is_some() && g.neighbors(v).iter().any(|&w| !self.swept[w]);
        let open_group = self.group_of[v].is_some_and(|gi| !self.group_done[gi]);
        (open_neighbor || open_group) && self.strong.as_mut().is_some_and(|s| s.is_strong(g, v))
    }

    fn mark(&mut self, v: usize, reason: SweepReason) {
        if !self.swept[v] {
            self.swept[v] = true;
            self.tally.record(reason);
            self.stack.push(v);
        }
    }

    /// Marks `v` and everything its marking implies, using `g`'s adjacency
    /// for deposits.
    pub fn sweep(&mut self, v: usize, reason: SweepReason, g: &Graph) {
        self.mark(v, reason);
        while let Some(x) = self.stack.pop() {
            let strong = self.is_strong_if_useful(x, g);
            if self.strong.is_some() {
                for &w in g.neighbors(x) {
                    if self.swept[w] {
                        continue;
                    }
                    self.deposit[w] += 1;
                    if strong {
                        self.mark(w, SweepReason::StrongNeighbor);
                    } else if self.deposit[w] >= self.k {
                        self.mark(w, SweepReason::Deposit);
                    }
                }
            }
            if let Some(gi) = self.group_of[x] {
                if self.group_done[gi] {
                    continue;
                }
                self.group_deposit[gi] += 1;
                if strong || self.group_deposit[gi] >= self.k {
                    self.group_done[gi] = true;
                    let groups = self.groups;
                    for &w in &groups[gi] {
                        self.mark(w, SweepReason::Group);
                    }
                }
            }
        }
    }
}
