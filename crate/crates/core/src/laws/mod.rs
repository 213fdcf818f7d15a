//! Mechanical checks of the equalities and inequalities among the nine
//! fundamental domination numbers.
//!
//! Every relation is evaluated by solving both sides separately; no side is
//! ever derived from the other.

mod digraph;
mod theorem3;

use std::fmt;
use std::time::Duration;

use thiserror::Error;

use crate::graph::{Element, ElementDomain, Graph};
use crate::io::graph6::encode_graph6;
use crate::solver::{
    domination_number, nine_numbers, DominationInstance, FundamentalProfile, Param, SetCover,
    SolveError, SolveResult, PAIRS,
};
use crate::timer::Stopwatch;
use crate::transforms::{line_graph, total_graph, TransformError};

pub use digraph::RelationDigraph;
pub use theorem3::{
    theorem3_witnesses, GapRecord, Theorem3Mode, ValueCertificate, ValueStatus, CERTIFICATE_BUDGET,
};

use ElementDomain::{E, V, VE};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LawError {
    #[error("law not applicable: {0}")]
    NotApplicable(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Transform(#[from] TransformError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Law {
    Theorem1,
    Theorem2,
    Theorem3,
    Embedding,
    Payan,
}

impl Law {
    pub fn name(self) -> &'static str {
        match self {
            Law::Theorem1 => "thm1",
            Law::Theorem2 => "thm2",
            Law::Theorem3 => "thm3",
            Law::Embedding => "embedding",
            Law::Payan => "payan",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Ge,
    Le,
}

impl Relation {
    fn holds(self, lhs: Quantity, rhs: Quantity) -> bool {
        let (a, b) = (lhs.doubled(), rhs.doubled());
        match self {
            Relation::Eq => a == b,
            Relation::Ge => a >= b,
            Relation::Le => a <= b,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::Ge => ">=",
            Relation::Le => "<=",
        }
    }
}

/// A solved count, or a bound that may be a half-integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Count(usize),
    /// The value `x / 2`.
    Halves(i64),
}

impl Quantity {
    fn doubled(self) -> i64 {
        match self {
            Quantity::Count(c) => 2 * c as i64,
            Quantity::Halves(h) => h,
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Quantity::Count(c) => write!(f, "{c}"),
            Quantity::Halves(h) if h % 2 == 0 => write!(f, "{}", h / 2),
            Quantity::Halves(h) => write!(f, "{}/2", h),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Side {
    pub label: String,
    pub value: Quantity,
    /// Minimum set that attains `value`, when the side is a solve. Elements
    /// of a line or total graph are reported as its vertices.
    pub witness: Option<Vec<Element>>,
}

impl Side {
    fn solved(label: impl Into<String>, r: &SolveResult) -> Self {
        Side {
            label: label.into(),
            value: Quantity::Count(r.value),
            witness: Some(r.witness.clone()),
        }
    }

    fn bound(label: impl Into<String>, halves: i64) -> Self {
        Side {
            label: label.into(),
            value: Quantity::Halves(halves),
            witness: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub lhs: Side,
    pub relation: Relation,
    pub rhs: Side,
    pub holds: bool,
}

impl RelationCheck {
    fn new(lhs: Side, relation: Relation, rhs: Side) -> Self {
        let holds = relation.holds(lhs.value, rhs.value);
        RelationCheck {
            lhs,
            relation,
            rhs,
            holds,
        }
    }
}

impl fmt::Display for RelationCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {}  ({} {} {})  {}",
            self.lhs.label,
            self.relation.symbol(),
            self.rhs.label,
            self.lhs.value,
            self.relation.symbol(),
            self.rhs.value,
            if self.holds { "ok" } else { "FAILED" }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub graph6: String,
    pub law: Law,
    pub checks: Vec<RelationCheck>,
    pub nodes: u64,
    pub elapsed: Duration,
}

impl LawReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} on {}:", self.law, self.graph6)?;
        for c in &self.checks {
            writeln!(f, "  {c}")?;
        }
        write!(
            f,
            "  {} ({} nodes, {} ms)",
            if self.holds() { "holds" } else { "FAILS" },
            self.nodes,
            self.elapsed.as_millis()
        )
    }
}

pub(crate) fn graph_id(g: &Graph) -> String {
    encode_graph6(g).unwrap_or_else(|_| format!("<order {}>", g.order()))
}

fn require_applicable(g: &Graph) -> Result<(), LawError> {
    if !g.is_nontrivial() {
        return Err(LawError::NotApplicable(
            "graph must have at least two vertices".into(),
        ));
    }
    if !g.is_connected() {
        return Err(LawError::NotApplicable("graph must be connected".into()));
    }
    Ok(())
}

fn pair_label(u: ElementDomain, w: ElementDomain) -> String {
    format!("γ_{{{u},{w}}}(G)")
}

fn solve_vv(g: &Graph, budget: u64) -> Result<SolveResult, SolveError> {
    domination_number(&DominationInstance::new(g, V, V), budget)
}

fn profile_side(p: &FundamentalProfile, u: ElementDomain, w: ElementDomain) -> Side {
    Side::solved(pair_label(u, w), p.result(u, w))
}

fn finish(
    g: &Graph,
    law: Law,
    checks: Vec<RelationCheck>,
    nodes: u64,
    clock: Stopwatch,
) -> LawReport {
    LawReport {
        graph6: graph_id(g),
        law,
        checks,
        nodes,
        elapsed: clock.elapsed(),
    }
}

/// The six equalities: `γ′ = γ(L(G))`, `γ″ = γ(T(G))` and the four
/// collapses among the nine numbers.
pub fn check_theorem1(g: &Graph, budget: u64) -> Result<LawReport, LawError> {
    require_applicable(g)?;
    let profile = nine_numbers(g, budget)?;
    theorem1_with(g, &profile, budget)
}

pub(crate) fn theorem1_with(
    g: &Graph,
    p: &FundamentalProfile,
    budget: u64,
) -> Result<LawReport, LawError> {
    let clock = Stopwatch::start();
    let line = line_graph(g)?;
    let total = total_graph(g);
    let in_line = solve_vv(&line.result, budget)?;
    let in_total = solve_vv(&total.result, budget)?;
    let checks = vec![
        RelationCheck::new(
            profile_side(p, E, E),
            Relation::Eq,
            Side::solved("γ(L(G))", &in_line),
        ),
        RelationCheck::new(
            profile_side(p, VE, VE),
            Relation::Eq,
            Side::solved("γ(T(G))", &in_total),
        ),
        RelationCheck::new(profile_side(p, VE, V), Relation::Eq, profile_side(p, V, V)),
        RelationCheck::new(profile_side(p, VE, E), Relation::Eq, profile_side(p, E, E)),
        RelationCheck::new(profile_side(p, E, V), Relation::Eq, profile_side(p, E, VE)),
        RelationCheck::new(profile_side(p, V, E), Relation::Eq, profile_side(p, V, VE)),
    ];
    let nodes = p.total_nodes() + in_line.stats.nodes + in_total.stats.nodes;
    Ok(finish(g, Law::Theorem1, checks, nodes, clock))
}

/// `x(G) ≥ y(G)` for each single arc `(x, y)` of the relation digraph.
pub fn check_theorem2(g: &Graph, budget: u64) -> Result<LawReport, LawError> {
    require_applicable(g)?;
    let profile = nine_numbers(g, budget)?;
    Ok(theorem2_with(g, &profile))
}

pub(crate) fn theorem2_with(g: &Graph, p: &FundamentalProfile) -> LawReport {
    let clock = Stopwatch::start();
    let side = |x: Param| {
        let (u, w) = x.pair();
        Side::solved(format!("{}(G)", x.symbol()), p.result(u, w))
    };
    let checks = RelationDigraph::new()
        .single_arcs()
        .into_iter()
        .map(|(x, y)| RelationCheck::new(side(x), Relation::Ge, side(y)))
        .collect();
    finish(g, Law::Theorem2, checks, p.total_nodes(), clock)
}

/// Re-solves all nine variants inside `T(G)`: candidates are restricted to
/// the image of `U`, coverage is demanded on the image of `W`, and adjacency
/// in `T(G)` plays the role of association.
pub fn check_total_graph_embedding(g: &Graph, budget: u64) -> Result<LawReport, LawError> {
    require_applicable(g)?;
    let clock = Stopwatch::start();
    let total = total_graph(g);
    let t = &total.result;
    let image = |d: ElementDomain| -> Vec<usize> {
        let mut out = Vec::new();
        if d.includes_vertices() {
            out.extend(total.vertex_image.iter().copied());
        }
        if d.includes_edges() {
            out.extend(total.edge_image.iter().copied());
        }
        out
    };

    let mut checks = Vec::new();
    let mut nodes = 0;
    for (u, w) in PAIRS {
        let direct = domination_number(&DominationInstance::new(g, u, w), budget)?;
        let candidates = image(u);
        let targets = image(w);
        let mut position = vec![usize::MAX; t.order()];
        for (i, &x) in targets.iter().enumerate() {
            position[x] = i;
        }
        let covers = candidates
            .iter()
            .map(|&x| {
                let mut set = crate::bits::BitSet::new(targets.len());
                for y in std::iter::once(x).chain(t.neighbors(x).iter()) {
                    if position[y] != usize::MAX {
                        set.insert(position[y]);
                    }
                }
                set
            })
            .collect();
        let embedded = SetCover::new(targets.len(), covers)
            .solve(budget)
            .map_err(|e| match e {
                crate::solver::CoverError::Uncoverable(i) => {
                    SolveError::Infeasible(w.element_at(g, i))
                }
                crate::solver::CoverError::BudgetExhausted { nodes } => {
                    SolveError::BudgetExhausted { nodes }
                }
            })?;
        nodes += direct.stats.nodes + embedded.nodes;
        let embedded_side = Side {
            label: format!("min |A ⊆ T_{u}| dominating T_{w} in T(G)"),
            value: Quantity::Count(embedded.chosen.len()),
            witness: Some(
                embedded
                    .chosen
                    .iter()
                    .map(|&c| Element::Vertex(candidates[c]))
                    .collect(),
            ),
        };
        checks.push(RelationCheck::new(
            Side::solved(pair_label(u, w), &direct),
            Relation::Eq,
            embedded_side,
        ));
    }
    Ok(finish(g, Law::Embedding, checks, nodes, clock))
}

/// The chain `γ′ = γ_{V∪E,E} ≤ γ″ = γ(T(G)) ≤ 1 − δ + (n+m)/2`, and
/// `γ ≤ (n + 2 − δ)/2`.
pub fn check_payan(g: &Graph, budget: u64) -> Result<LawReport, LawError> {
    require_applicable(g)?;
    let profile = nine_numbers(g, budget)?;
    payan_with(g, &profile, budget)
}

pub(crate) fn payan_with(
    g: &Graph,
    p: &FundamentalProfile,
    budget: u64,
) -> Result<LawReport, LawError> {
    let clock = Stopwatch::start();
    let (n, m, delta) = (g.order() as i64, g.size() as i64, g.min_degree() as i64);
    let in_total = solve_vv(&total_graph(g).result, budget)?;
    let checks = vec![
        RelationCheck::new(profile_side(p, E, E), Relation::Eq, profile_side(p, VE, E)),
        RelationCheck::new(profile_side(p, E, E), Relation::Le, profile_side(p, VE, VE)),
        RelationCheck::new(
            profile_side(p, VE, VE),
            Relation::Eq,
            Side::solved("γ(T(G))", &in_total),
        ),
        RelationCheck::new(
            profile_side(p, VE, VE),
            Relation::Le,
            Side::bound("1 - δ + (n+m)/2", 2 - 2 * delta + n + m),
        ),
        RelationCheck::new(
            profile_side(p, V, V),
            Relation::Le,
            Side::bound("(n + 2 - δ)/2", n + 2 - delta),
        ),
    ];
    let nodes = p.total_nodes() + in_total.stats.nodes;
    Ok(finish(g, Law::Payan, checks, nodes, clock))
}
