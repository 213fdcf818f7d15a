use std::fmt;
use std::str::FromStr;

use crate::graph::{ElementDomain, Graph};

use super::{domination_number, DominationInstance, SolveError, SolveResult};
use ElementDomain::{E, V, VE};

/// The nine `(U, W)` pairs, row by row.
pub const PAIRS: [(ElementDomain, ElementDomain); 9] = [
    (V, V),
    (V, E),
    (V, VE),
    (E, V),
    (E, E),
    (E, VE),
    (VE, V),
    (VE, E),
    (VE, VE),
];

/// The five values the nine numbers collapse to on nontrivial connected
/// graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    /// `γ = γ_{V,V}`
    Gamma,
    /// `γ′ = γ_{E,E}`
    GammaPrime,
    /// `γ″ = γ_{V∪E,V∪E}`
    GammaDoublePrime,
    /// `γ_{V,E}`
    GammaVE,
    /// `γ_{E,V}`
    GammaEV,
}

impl Param {
    pub const ALL: [Param; 5] = [
        Param::Gamma,
        Param::GammaPrime,
        Param::GammaDoublePrime,
        Param::GammaVE,
        Param::GammaEV,
    ];

    /// The `(U, W)` pair that defines this value.
    pub fn pair(self) -> (ElementDomain, ElementDomain) {
        match self {
            Param::Gamma => (V, V),
            Param::GammaPrime => (E, E),
            Param::GammaDoublePrime => (VE, VE),
            Param::GammaVE => (V, E),
            Param::GammaEV => (E, V),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Param::Gamma => "gamma",
            Param::GammaPrime => "gamma-prime",
            Param::GammaDoublePrime => "gamma-dprime",
            Param::GammaVE => "ve",
            Param::GammaEV => "ev",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Param::Gamma => "γ",
            Param::GammaPrime => "γ′",
            Param::GammaDoublePrime => "γ″",
            Param::GammaVE => "γ_{V,E}",
            Param::GammaEV => "γ_{E,V}",
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Param {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Param::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown parameter `{s}`"))
    }
}

/// All nine fundamental domination numbers of one graph.
#[derive(Debug, Clone)]
pub struct FundamentalProfile {
    results: Vec<SolveResult>,
}

fn slot(u: ElementDomain, w: ElementDomain) -> usize {
    PAIRS
        .iter()
        .position(|&p| p == (u, w))
        .expect("every pair is listed")
}

impl FundamentalProfile {
    pub fn result(&self, u: ElementDomain, w: ElementDomain) -> &SolveResult {
        &self.results[slot(u, w)]
    }

    pub fn value(&self, u: ElementDomain, w: ElementDomain) -> usize {
        self.result(u, w).value
    }

    pub fn param(&self, p: Param) -> usize {
        let (u, w) = p.pair();
        self.value(u, w)
    }

    /// `(pair, result)` in the order of [`PAIRS`].
    pub fn iter(&self) -> impl Iterator<Item = ((ElementDomain, ElementDomain), &SolveResult)> {
        PAIRS.iter().copied().zip(self.results.iter())
    }

    pub fn total_nodes(&self) -> u64 {
        self.results.iter().map(|r| r.stats.nodes).sum()
    }

    /// The four collapses among the nine values that hold on nontrivial
    /// connected graphs.
    pub fn collapses_hold(&self) -> bool {
        self.value(VE, V) == self.value(V, V)
            && self.value(VE, E) == self.value(E, E)
            && self.value(E, V) == self.value(E, VE)
            && self.value(V, E) == self.value(V, VE)
    }
}

/// Solves all nine `γ_{U,W}(g)` independently.
///
/// Requires at least two vertices and no isolated vertex; otherwise the
/// edge-dominating numbers are undefined.
pub fn nine_numbers(g: &Graph, budget: u64) -> Result<FundamentalProfile, SolveError> {
    if !g.is_nontrivial() {
        return Err(SolveError::Undefined("graph has fewer than two vertices".into()));
    }
    if g.has_isolated_vertex() {
        return Err(SolveError::Undefined("graph has an isolated vertex".into()));
    }
    let results = PAIRS
        .iter()
        .map(|&(u, w)| domination_number(&DominationInstance::new(g, u, w), budget))
        .collect::<Result<Vec<_>, _>>()?;
    let profile = FundamentalProfile { results };
    debug_assert!(!g.is_connected() || profile.collapses_hold());
    Ok(profile)
}
