//! The relation digraph over the five distinct fundamental values.
//!
//! An arc `(x, y)` without its reverse means `x(G) ≥ y(G)` on every
//! nontrivial connected graph. A pair of opposite arcs marks two values that
//! are incomparable: either can exceed the other by any amount.

use crate::solver::Param;

use Param::{Gamma, GammaDoublePrime, GammaEV, GammaPrime, GammaVE};

const ARCS: [(Param, Param); 12] = [
    (GammaVE, GammaPrime),
    (GammaVE, GammaDoublePrime),
    (GammaVE, Gamma),
    (GammaVE, GammaEV),
    (GammaEV, GammaVE),
    (GammaPrime, Gamma),
    (Gamma, GammaPrime),
    (GammaEV, GammaPrime),
    (GammaDoublePrime, GammaPrime),
    (GammaEV, GammaDoublePrime),
    (GammaDoublePrime, Gamma),
    (GammaEV, Gamma),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationDigraph {
    arcs: Vec<(Param, Param)>,
}

impl Default for RelationDigraph {
    fn default() -> Self {
        Self::new()
    }
}

impl RelationDigraph {
    pub fn new() -> Self {
        RelationDigraph {
            arcs: ARCS.to_vec(),
        }
    }

    pub fn nodes(&self) -> [Param; 5] {
        Param::ALL
    }

    pub fn arcs(&self) -> &[(Param, Param)] {
        &self.arcs
    }

    pub fn has_arc(&self, x: Param, y: Param) -> bool {
        self.arcs.contains(&(x, y))
    }

    /// Arcs whose reverse is absent: `x ≥ y`.
    pub fn single_arcs(&self) -> Vec<(Param, Param)> {
        self.arcs
            .iter()
            .copied()
            .filter(|&(x, y)| !self.has_arc(y, x))
            .collect()
    }

    /// Incomparable pairs, each reported once.
    pub fn double_arcs(&self) -> Vec<(Param, Param)> {
        self.arcs
            .iter()
            .copied()
            .filter(|&(x, y)| self.has_arc(y, x) && x < y)
            .collect()
    }
}
