//! Exact domination numbers `γ_{U,W}` and k-domination.
//!
//! A set `A ⊆ U` dominates `W` when every element of `W` outside `A` is
//! associated with some member of `A`. For `k = 1` this is a set cover of
//! `W` by the sets `cover_set(a, W)`, `a ∈ U`, which [`cover::SetCover`]
//! solves exactly. k-domination (`k ≥ 1`, vertex-vertex only) goes through a
//! separate include/exclude search.

pub mod cover;
mod multicover;
pub mod oracle;
mod profile;

use std::time::Duration;

use thiserror::Error;

use crate::graph::{Element, ElementDomain, Graph};
use crate::timer::Stopwatch;

pub use cover::{CoverError, CoverSolution, SetCover};
pub use oracle::{is_dominating, naive_oracle, ORACLE_LIMIT};
pub use profile::{nine_numbers, FundamentalProfile, Param, PAIRS};

/// Node limit used when the caller has no opinion.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("no admissible set dominates {0}")]
    Infeasible(Element),
    #[error("node budget exhausted after {nodes} nodes before optimality was proven")]
    BudgetExhausted { nodes: u64 },
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("not all fundamental domination numbers are defined: {0}")]
    Undefined(String),
    #[error("oracle universe of {size} elements exceeds the limit {limit}")]
    UniverseTooLarge { size: usize, limit: usize },
}

/// Find the smallest `A ⊆ dominating` that dominates `dominated`, where every
/// dominated element outside `A` needs `k` associated members of `A`.
#[derive(Debug, Clone, Copy)]
pub struct DominationInstance<'g> {
    pub graph: &'g Graph,
    pub dominating: ElementDomain,
    pub dominated: ElementDomain,
    pub k: usize,
}

impl<'g> DominationInstance<'g> {
    pub fn new(graph: &'g Graph, dominating: ElementDomain, dominated: ElementDomain) -> Self {
        DominationInstance {
            graph,
            dominating,
            dominated,
            k: 1,
        }
    }

    /// Vertex-vertex k-domination.
    pub fn k_domination(graph: &'g Graph, k: usize) -> Self {
        DominationInstance {
            graph,
            dominating: ElementDomain::V,
            dominated: ElementDomain::V,
            k,
        }
    }

    pub fn validate(&self) -> Result<(), SolveError> {
        if self.k == 0 {
            return Err(SolveError::InvalidInstance("k must be at least 1".into()));
        }
        if self.k > 1 && (self.dominating, self.dominated) != (ElementDomain::V, ElementDomain::V) {
            return Err(SolveError::InvalidInstance(format!(
                "k-domination with k = {} is only defined for U = W = V",
                self.k
            )));
        }
        if self.graph.size() == 0
            && (self.dominating == ElementDomain::E || self.dominated == ElementDomain::E)
        {
            return Err(SolveError::InvalidInstance(
                "edge domain requested on a graph without edges".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SolveStats {
    pub nodes: u64,
    pub elapsed: Duration,
    pub proven_optimal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub value: usize,
    /// A minimum dominating set, sorted.
    pub witness: Vec<Element>,
    pub stats: SolveStats,
}

/// The set-cover view of a `k = 1` instance.
pub fn cover_problem(inst: &DominationInstance<'_>) -> SetCover {
    let g = inst.graph;
    let targets = inst.dominated.len(g);
    let covers = inst
        .dominating
        .elements(g)
        .map(|a| g.cover_set(a, inst.dominated))
        .collect();
    SetCover::new(targets, covers)
}

fn map_cover_error(inst: &DominationInstance<'_>, e: CoverError) -> SolveError {
    match e {
        CoverError::Uncoverable(t) => {
            SolveError::Infeasible(inst.dominated.element_at(inst.graph, t))
        }
        CoverError::BudgetExhausted { nodes } => SolveError::BudgetExhausted { nodes },
    }
}

/// Exact `γ_{U,W}` (or `γ_k` when `k > 1`) with a witness.
pub fn domination_number(
    inst: &DominationInstance<'_>,
    budget: u64,
) -> Result<SolveResult, SolveError> {
    inst.validate()?;
    if inst.k > 1 {
        return k_domination_number(inst.graph, inst.k, budget);
    }
    let clock = Stopwatch::start();
    let problem = cover_problem(inst);
    let sol = problem.solve(budget).map_err(|e| map_cover_error(inst, e))?;
    let witness = sol
        .chosen
        .iter()
        .map(|&c| inst.dominating.element_at(inst.graph, c))
        .collect();
    Ok(SolveResult {
        value: sol.chosen.len(),
        witness,
        stats: SolveStats {
            nodes: sol.nodes,
            elapsed: clock.elapsed(),
            proven_optimal: true,
        },
    })
}

/// `γ_k(G)`: smallest `S ⊆ V` with every vertex outside `S` having at least
/// `k` neighbours in `S`. Valid for every `k ≥ 1`; `k = 1` gives `γ(G)` by a
/// route independent of the set-cover search.
pub fn k_domination_number(g: &Graph, k: usize, budget: u64) -> Result<SolveResult, SolveError> {
    if k == 0 {
        return Err(SolveError::InvalidInstance("k must be at least 1".into()));
    }
    let clock = Stopwatch::start();
    let out = multicover::solve(g, k, budget)
        .map_err(|hit| SolveError::BudgetExhausted { nodes: hit.0 })?;
    Ok(SolveResult {
        value: out.chosen.len(),
        witness: out.chosen.into_iter().map(Element::Vertex).collect(),
        stats: SolveStats {
            nodes: out.nodes,
            elapsed: clock.elapsed(),
            proven_optimal: true,
        },
    })
}

/// Size of the greedy cover that seeds the search.
pub fn greedy_upper_bound(inst: &DominationInstance<'_>) -> Result<usize, SolveError> {
    inst.validate()?;
    if inst.k > 1 {
        return Err(SolveError::InvalidInstance(
            "bounds are implemented for k = 1 only".into(),
        ));
    }
    cover_problem(inst)
        .greedy()
        .map(|c| c.len())
        .map_err(|e| map_cover_error(inst, e))
}

/// Number of dominated elements with pairwise-disjoint coverer sets.
pub fn disjoint_lb(inst: &DominationInstance<'_>) -> Result<usize, SolveError> {
    inst.validate()?;
    if inst.k > 1 {
        return Err(SolveError::InvalidInstance(
            "bounds are implemented for k = 1 only".into(),
        ));
    }
    let problem = cover_problem(inst);
    if let Some(t) = problem.first_uncoverable() {
        return Err(SolveError::Infeasible(inst.dominated.element_at(inst.graph, t)));
    }
    Ok(problem.disjoint_lower_bound())
}

/// `ceil(|W| / max |cover_set(a, W)|)`.
pub fn counting_lb(inst: &DominationInstance<'_>) -> Result<usize, SolveError> {
    inst.validate()?;
    let problem = cover_problem(inst);
    if let Some(t) = problem.first_uncoverable() {
        return Err(SolveError::Infeasible(inst.dominated.element_at(inst.graph, t)));
    }
    Ok(problem.counting_lower_bound())
}
