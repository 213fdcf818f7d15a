//! Exact minimum set cover by branch and bound over bit-vector cover sets.
//!
//! Branching picks the uncovered target with the fewest admissible coverers
//! and tries each coverer in turn; once a coverer's subtree is exhausted it
//! is forbidden in the sibling subtrees, so every cover is enumerated at most
//! once. A subtree is cut when the chosen count plus a lower bound on the
//! residual reaches the incumbent. The lower bound is the larger of a
//! disjoint-coverer packing and `ceil(uncovered / max residual coverage)`.

use crate::bits::BitSet;

/// Candidate `c` covers the targets in `covers[c]`.
#[derive(Debug, Clone)]
pub struct SetCover {
    targets: usize,
    covers: Vec<BitSet>,
    /// For each target, the candidates covering it.
    coverers: Vec<BitSet>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSolution {
    /// Chosen candidate indices, ascending.
    pub chosen: Vec<usize>,
    pub nodes: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverError {
    /// Some target has no coverer at all.
    Uncoverable(usize),
    BudgetExhausted { nodes: u64 },
}

impl SetCover {
    pub fn new(targets: usize, covers: Vec<BitSet>) -> Self {
        let mut coverers = vec![BitSet::new(covers.len()); targets];
        for (c, set) in covers.iter().enumerate() {
            debug_assert_eq!(set.capacity(), targets);
            for t in set.iter() {
                coverers[t].insert(c);
            }
        }
        SetCover {
            targets,
            covers,
            coverers,
        }
    }

    pub fn targets(&self) -> usize {
        self.targets
    }

    pub fn candidates(&self) -> usize {
        self.covers.len()
    }

    pub fn cover(&self, c: usize) -> &BitSet {
        &self.covers[c]
    }

    pub fn first_uncoverable(&self) -> Option<usize> {
        self.coverers.iter().position(BitSet::is_empty)
    }

    /// Greedy cover: repeatedly take the candidate covering the most
    /// uncovered targets, lowest index on ties.
    pub fn greedy(&self) -> Result<Vec<usize>, CoverError> {
        if let Some(t) = self.first_uncoverable() {
            return Err(CoverError::Uncoverable(t));
        }
        let mut uncovered = BitSet::full(self.targets);
        let mut chosen = Vec::new();
        while !uncovered.is_empty() {
            let (best, gain) = self
                .covers
                .iter()
                .enumerate()
                .map(|(c, s)| (c, s.intersection_count(&uncovered)))
                .fold((0, 0), |acc, x| if x.1 > acc.1 { x } else { acc });
            debug_assert!(gain > 0);
            chosen.push(best);
            uncovered.difference_with(&self.covers[best]);
        }
        chosen.sort_unstable();
        Ok(chosen)
    }

    /// Size of a family of targets whose coverer sets are pairwise disjoint.
    /// Each of them needs its own chosen candidate, so this bounds any cover
    /// from below.
    pub fn disjoint_lower_bound(&self) -> usize {
        let all = BitSet::full(self.targets);
        let none = BitSet::new(self.covers.len());
        self.packing(&all, &none)
    }

    /// `ceil(targets / largest cover)`.
    pub fn counting_lower_bound(&self) -> usize {
        let all = BitSet::full(self.targets);
        let none = BitSet::new(self.covers.len());
        self.counting(&all, &none)
    }

    fn packing(&self, uncovered: &BitSet, forbidden: &BitSet) -> usize {
        let mut order: Vec<(usize, usize)> = uncovered
            .iter()
            .map(|t| {
                let allowed = self.coverers[t].count() - self.coverers[t].intersection_count(forbidden);
                (allowed, t)
            })
            .collect();
        order.sort_unstable();
        let mut used = BitSet::new(self.covers.len());
        let mut count = 0;
        for (_, t) in order {
            let mut allowed = self.coverers[t].clone();
            allowed.difference_with(forbidden);
            if !allowed.is_empty() && !allowed.intersects(&used) {
                used.union_with(&allowed);
                count += 1;
            }
        }
        count
    }

    fn counting(&self, uncovered: &BitSet, forbidden: &BitSet) -> usize {
        let left = uncovered.count();
        if left == 0 {
            return 0;
        }
        let best = (0..self.covers.len())
            .filter(|&c| !forbidden.contains(c))
            .map(|c| self.covers[c].intersection_count(uncovered))
            .max()
            .unwrap_or(0);
        if best == 0 {
            usize::MAX
        } else {
            left.div_ceil(best)
        }
    }

    /// Exact minimum cover, or an error if the node budget runs out first.
    pub fn solve(&self, budget: u64) -> Result<CoverSolution, CoverError> {
        let incumbent = self.greedy()?;
        let mut search = Search {
            problem: self,
            best: incumbent,
            chosen: Vec::new(),
            nodes: 0,
            budget,
        };
        let uncovered = BitSet::full(self.targets);
        let forbidden = BitSet::new(self.covers.len());
        search.descend(&uncovered, &forbidden)?;
        let mut chosen = search.best;
        chosen.sort_unstable();
        Ok(CoverSolution {
            chosen,
            nodes: search.nodes,
        })
    }
}

struct Search<'a> {
    problem: &'a SetCover,
    best: Vec<usize>,
    chosen: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn descend(&mut self, uncovered: &BitSet, forbidden: &BitSet) -> Result<(), CoverError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(CoverError::BudgetExhausted { nodes: self.nodes });
        }
        if uncovered.is_empty() {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return Ok(());
        }
        if self.chosen.len() + 1 >= self.best.len() {
            return Ok(());
        }

        let p = self.problem;
        // Most constrained target; lowest index on ties.
        let mut pivot = None;
        let mut fewest = usize::MAX;
        for t in uncovered.iter() {
            let allowed = p.coverers[t].count() - p.coverers[t].intersection_count(forbidden);
            if allowed < fewest {
                fewest = allowed;
                pivot = Some(t);
                if allowed == 0 {
                    return Ok(());
                }
            }
        }
        let pivot = pivot.expect("uncovered is non-empty");

        let bound = p.packing(uncovered, forbidden).max(p.counting(uncovered, forbidden));
        if self.chosen.len().saturating_add(bound) >= self.best.len() {
            return Ok(());
        }

        let mut branches: Vec<(usize, usize)> = p.coverers[pivot]
            .iter()
            .filter(|&c| !forbidden.contains(c))
            .map(|c| (p.covers[c].intersection_count(uncovered), c))
            .collect();
        branches.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

        let mut local_forbidden = forbidden.clone();
        for (_, c) in branches {
            let mut rest = uncovered.clone();
            rest.difference_with(&p.covers[c]);
            self.chosen.push(c);
            self.descend(&rest, &local_forbidden)?;
            self.chosen.pop();
            local_forbidden.insert(c);
            if self.chosen.len() + 1 >= self.best.len() {
                break;
            }
        }
        Ok(())
    }
}
