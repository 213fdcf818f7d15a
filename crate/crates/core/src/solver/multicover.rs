//! k-domination in the vertex-vertex setting: a set `S` such that every
//! vertex outside `S` has at least `k` neighbours in `S`.
//!
//! Include/exclude search. Each node picks the unsatisfied vertex with the
//! least slack and decides one undecided vertex of its closed neighbourhood.

use crate::bits::BitSet;
use crate::graph::Graph;

pub(crate) struct MultiCoverOutcome {
    pub chosen: Vec<usize>,
    pub nodes: u64,
}

pub(crate) struct BudgetHit(pub u64);

pub(crate) fn solve(g: &Graph, k: usize, budget: u64) -> Result<MultiCoverOutcome, BudgetHit> {
    let n = g.order();
    let mut search = Search {
        g,
        k,
        budget,
        nodes: 0,
        best: (0..n).collect(),
        in_set: BitSet::new(n),
        excluded: BitSet::new(n),
        count: vec![0; n],
    };
    search.descend()?;
    Ok(MultiCoverOutcome {
        chosen: search.best,
        nodes: search.nodes,
    })
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    budget: u64,
    nodes: u64,
    best: Vec<usize>,
    in_set: BitSet,
    excluded: BitSet,
    /// Neighbours of each vertex currently in the set.
    count: Vec<usize>,
}

impl Search<'_> {
    fn satisfied(&self, v: usize) -> bool {
        self.in_set.contains(v) || self.count[v] >= self.k
    }

    fn undecided(&self, v: usize) -> bool {
        !self.in_set.contains(v) && !self.excluded.contains(v)
    }

    fn undecided_neighbours(&self, v: usize) -> usize {
        self.g
            .neighbors(v)
            .iter()
            .filter(|&w| self.undecided(w))
            .count()
    }

    fn descend(&mut self) -> Result<(), BudgetHit> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(BudgetHit(self.nodes));
        }
        let size = self.in_set.count();
        if size >= self.best.len() {
            return Ok(());
        }

        // (slack, need, vertex) of the tightest unsatisfied vertex.
        let mut tightest: Option<(isize, usize, usize)> = None;
        let mut max_need = 0;
        for v in 0..self.g.order() {
            if self.satisfied(v) {
                continue;
            }
            let need = self.k - self.count[v];
            let free = self.undecided_neighbours(v);
            let slack = if self.excluded.contains(v) {
                if free < need {
                    return Ok(());
                }
                max_need = max_need.max(need);
                free as isize - need as isize
            } else {
                max_need = max_need.max(1);
                // Joining the set is always an option for an undecided vertex.
                free as isize
            };
            if tightest.is_none_or(|(s, _, _)| slack < s) {
                tightest = Some((slack, need, v));
            }
        }

        let Some((_, _, v)) = tightest else {
            self.best = self.in_set.iter().collect();
            return Ok(());
        };
        if size + max_need >= self.best.len() {
            return Ok(());
        }

        let pick = if self.undecided(v) {
            v
        } else {
            self.g
                .neighbors(v)
                .iter()
                .find(|&w| self.undecided(w))
                .expect("slack check guarantees an undecided neighbour")
        };

        self.include(pick);
        let r = self.descend();
        self.uninclude(pick);
        r?;

        self.excluded.insert(pick);
        let r = self.descend();
        self.excluded.remove(pick);
        r
    }

    fn include(&mut self, v: usize) {
        self.in_set.insert(v);
        for w in self.g.neighbors(v).iter() {
            self.count[w] += 1;
        }
    }

    fn uninclude(&mut self, v: usize) {
        self.in_set.remove(v);
        for w in self.g.neighbors(v).iter() {
            self.count[w] -= 1;
        }
    }
}
