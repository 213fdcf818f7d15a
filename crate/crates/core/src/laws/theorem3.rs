//! Witness graphs for the two incomparable pairs `{γ, γ′}` and
//! `{γ_{V,E}, γ_{E,V}}`: for every `r ≥ 1`, four graphs on which one value
//! of a pair exceeds the other by more than `r`, in both directions.
//!
//! For small `r` every value is solved exactly. For larger `r` the
//! certificate mode checks a dominating set of the closed-form size and
//! looks for a matching lower bound; values without one are reported as
//! upper-certified only.

use crate::generators::{complete, ridged, star};
use crate::graph::{Element, Graph};
use crate::solver::{
    counting_lb, disjoint_lb, domination_number, is_dominating, DominationInstance, Param,
    SolveError,
};

use super::LawError;

/// Node budget for the optional exact upgrade in certificate mode.
pub const CERTIFICATE_BUDGET: u64 = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem3Mode {
    Exact,
    Certificate,
    /// Exact for `r ≤ 2`, certificate beyond.
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValueStatus {
    ExactlySolved,
    /// Closed-form witness plus a lower bound meeting it.
    Certified,
    UpperCertifiedOnly,
    /// Solver or bound disagrees with the closed form.
    Contradicted,
}

impl ValueStatus {
    pub fn label(self) -> &'static str {
        match self {
            ValueStatus::ExactlySolved => "exactly solved",
            ValueStatus::Certified => "certified",
            ValueStatus::UpperCertifiedOnly => "upper-certified only",
            ValueStatus::Contradicted => "CONTRADICTED",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueCertificate {
    pub param: Param,
    pub closed_form: usize,
    /// Dominating set of closed-form size.
    pub witness: Vec<Element>,
    pub witness_feasible: bool,
    pub lower: usize,
    pub upper: usize,
    pub status: ValueStatus,
}

#[derive(Debug, Clone)]
pub struct GapRecord {
    pub name: &'static str,
    pub family: String,
    pub graph: Graph,
    pub r: usize,
    pub mode: Theorem3Mode,
    pub larger: ValueCertificate,
    pub smaller: ValueCertificate,
}

impl GapRecord {
    pub fn closed_form_gap(&self) -> i64 {
        self.larger.closed_form as i64 - self.smaller.closed_form as i64
    }

    /// Gap guaranteed by the bounds actually established.
    pub fn proven_gap(&self) -> i64 {
        self.larger.lower as i64 - self.smaller.upper as i64
    }

    pub fn gap_proven(&self) -> bool {
        self.proven_gap() > self.r as i64
    }

    pub fn holds(&self) -> bool {
        let sides = [&self.larger, &self.smaller];
        sides.iter().all(|c| c.witness_feasible && c.status != ValueStatus::Contradicted)
            && self.closed_form_gap() > self.r as i64
            && (self.mode != Theorem3Mode::Exact || self.gap_proven())
    }
}

fn edge(g: &Graph, u: usize, v: usize) -> Element {
    Element::Edge(g.edge_index(u, v).expect("closed-form witness uses graph edges"))
}

/// Pairs up `0..n` into a perfect (or near-perfect) matching of `K_n`.
fn matching(g: &Graph, n: usize) -> Vec<Element> {
    (0..n / 2).map(|i| edge(g, 2 * i, 2 * i + 1)).collect()
}

fn complete_witness(g: &Graph, n: usize, p: Param) -> (usize, Vec<Element>) {
    match p {
        Param::Gamma => (1, vec![Element::Vertex(0)]),
        Param::GammaPrime => (n / 2, matching(g, n)),
        Param::GammaEV => {
            let mut w = matching(g, n);
            if n % 2 == 1 {
                w.push(edge(g, 0, n - 1));
            }
            (n.div_ceil(2), w)
        }
        Param::GammaVE => (n - 1, (0..n - 1).map(Element::Vertex).collect()),
        Param::GammaDoublePrime => unreachable!("no closed form is assumed for γ″"),
    }
}

/// Ridged graph on `3n` vertices; spine vertex `u_i` has index `i`.
fn ridged_witness(g: &Graph, n: usize, p: Param) -> (usize, Vec<Element>) {
    match p {
        Param::Gamma => (n, (0..n).map(Element::Vertex).collect()),
        Param::GammaPrime => {
            // Consecutive spine edges, plus a pendant edge at an odd end.
            let mut w: Vec<_> = (0..n / 2).map(|i| edge(g, 2 * i, 2 * i + 1)).collect();
            if n % 2 == 1 {
                w.push(edge(g, n - 1, 2 * n - 1));
            }
            (n.div_ceil(2), w)
        }
        _ => unreachable!("only γ and γ′ are used on ridged graphs"),
    }
}

fn star_witness(g: &Graph, n: usize, p: Param) -> (usize, Vec<Element>) {
    match p {
        Param::GammaVE => (1, vec![Element::Vertex(0)]),
        Param::GammaEV => (n, (1..=n).map(|v| edge(g, 0, v)).collect()),
        _ => unreachable!("only γ_{{V,E}} and γ_{{E,V}} are used on stars"),
    }
}

fn certify(
    g: &Graph,
    param: Param,
    (closed_form, witness): (usize, Vec<Element>),
    mode: Theorem3Mode,
    budget: u64,
) -> Result<ValueCertificate, LawError> {
    let (u, w) = param.pair();
    let inst = DominationInstance::new(g, u, w);
    let witness_feasible = witness.len() == closed_form && is_dominating(&inst, &witness);
    let mut cert = ValueCertificate {
        param,
        closed_form,
        witness,
        witness_feasible,
        lower: 0,
        upper: closed_form,
        status: ValueStatus::UpperCertifiedOnly,
    };

    let exact = |budget| domination_number(&inst, budget).map(|r| r.value);
    let settle = |cert: &mut ValueCertificate, value: usize| {
        cert.lower = value;
        cert.upper = value;
        cert.status = if value == closed_form {
            ValueStatus::ExactlySolved
        } else {
            ValueStatus::Contradicted
        };
    };

    if mode == Theorem3Mode::Exact {
        settle(&mut cert, exact(budget)?);
        return Ok(cert);
    }

    let lb = disjoint_lb(&inst)?.max(counting_lb(&inst)?);
    cert.lower = lb;
    if lb > closed_form || !witness_feasible {
        cert.status = ValueStatus::Contradicted;
    } else if lb == closed_form {
        cert.status = ValueStatus::Certified;
    } else {
        match exact(budget.min(CERTIFICATE_BUDGET)) {
            Ok(v) => settle(&mut cert, v),
            Err(SolveError::BudgetExhausted { .. }) => {}
            Err(e) => return Err(e.into()),
        }
    }
    Ok(cert)
}

/// The four gap witnesses for a given `r ≥ 1`:
///
/// | name | graph | larger | smaller |
/// |------|-------|--------|---------|
/// | G1 | `K_{2r+4}` | `γ′` | `γ` |
/// | G2 | `R_{12r}` | `γ` | `γ′` |
/// | G3 | `K_{2r+4}` | `γ_{V,E}` | `γ_{E,V}` |
/// | G4 | `K_{1,r+2}` | `γ_{E,V}` | `γ_{V,E}` |
pub fn theorem3_witnesses(
    r: usize,
    mode: Theorem3Mode,
    budget: u64,
) -> Result<Vec<GapRecord>, LawError> {
    if r == 0 {
        return Err(LawError::NotApplicable("r must be a positive integer".into()));
    }
    let mode = match mode {
        Theorem3Mode::Auto if r <= 2 => Theorem3Mode::Exact,
        Theorem3Mode::Auto => Theorem3Mode::Certificate,
        m => m,
    };
    let kn = 2 * r + 4;
    let spine = 4 * r;
    let leaves = r + 2;
    let specs: [(&'static str, String, Graph, Param, Param); 4] = [
        ("G1", format!("K_{kn}"), complete(kn).unwrap(), Param::GammaPrime, Param::Gamma),
        ("G2", format!("R_{}", 3 * spine), ridged(spine).unwrap(), Param::Gamma, Param::GammaPrime),
        ("G3", format!("K_{kn}"), complete(kn).unwrap(), Param::GammaVE, Param::GammaEV),
        ("G4", format!("K_{{1,{leaves}}}"), star(leaves).unwrap(), Param::GammaEV, Param::GammaVE),
    ];

    specs
        .into_iter()
        .map(|(name, family, graph, larger, smaller)| {
            let closed = |p: Param| match name {
                "G1" | "G3" => complete_witness(&graph, kn, p),
                "G2" => ridged_witness(&graph, spine, p),
                _ => star_witness(&graph, leaves, p),
            };
            let larger = certify(&graph, larger, closed(larger), mode, budget)?;
            let smaller = certify(&graph, smaller, closed(smaller), mode, budget)?;
            Ok(GapRecord {
                name,
                family,
                graph,
                r,
                mode,
                larger,
                smaller,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::DEFAULT_BUDGET;

    #[test]
    fn r1_exact_gaps_are_two() {
        let recs = theorem3_witnesses(1, Theorem3Mode::Exact, DEFAULT_BUDGET).unwrap();
        let gaps: Vec<_> = recs.iter().map(|r| r.proven_gap()).collect();
        assert_eq!(gaps, vec![2, 2, 2, 2]);
        assert!(recs.iter().all(GapRecord::holds));
        assert_eq!(recs[1].family, "R_12");
        assert_eq!(recs[3].family, "K_{1,3}");
    }

    #[test]
    fn rejects_zero() {
        assert!(matches!(
            theorem3_witnesses(0, Theorem3Mode::Auto, DEFAULT_BUDGET),
            Err(LawError::NotApplicable(_))
        ));
    }

    #[test]
    fn odd_closed_form_witnesses_are_feasible() {
        for n in 2..=9 {
            let g = complete(n).unwrap();
            for p in [Param::Gamma, Param::GammaPrime, Param::GammaEV, Param::GammaVE] {
                let (size, w) = complete_witness(&g, n, p);
                let (u, d) = p.pair();
                assert_eq!(w.len(), size);
                assert!(is_dominating(&DominationInstance::new(&g, u, d), &w));
            }
            let rg = ridged(n).unwrap();
            for p in [Param::Gamma, Param::GammaPrime] {
                let (size, w) = ridged_witness(&rg, n, p);
                let (u, d) = p.pair();
                assert_eq!(w.len(), size);
                assert!(is_dominating(&DominationInstance::new(&rg, u, d), &w));
            }
        }
    }
}
