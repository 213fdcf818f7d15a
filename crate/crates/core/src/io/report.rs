use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::laws::{graph_id, payan_with, theorem1_with, theorem2_with, LawError};
use crate::solver::{nine_numbers, Param, PAIRS};
use crate::timer::Stopwatch;

pub const CSV_HEADER: &str = "graph6,n,m,delta,gamma,gamma_ve,gamma_ev,gamma_prime,gamma_dprime,\
                              thm1_ok,thm2_ok,payan_ok,nodes,millis";

/// Everything computed for one graph in a scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportRow {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    /// `γ_{U,W}` in the order of [`PAIRS`](crate::solver::PAIRS).
    pub nine: [usize; 9],
    pub thm1_ok: bool,
    pub thm2_ok: bool,
    pub payan_ok: bool,
    pub nodes: u64,
    pub millis: u64,
}

impl ReportRow {
    pub fn param(&self, p: Param) -> usize {
        let i = PAIRS.iter().position(|&pair| pair == p.pair()).unwrap();
        self.nine[i]
    }

    pub fn laws_hold(&self) -> bool {
        self.thm1_ok && self.thm2_ok && self.payan_ok
    }
}

/// One CSV line; field order is the column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsvRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub gamma: usize,
    pub gamma_ve: usize,
    pub gamma_ev: usize,
    pub gamma_prime: usize,
    pub gamma_dprime: usize,
    pub thm1_ok: bool,
    pub thm2_ok: bool,
    pub payan_ok: bool,
    pub nodes: u64,
    pub millis: u64,
}

impl From<&ReportRow> for CsvRecord {
    fn from(r: &ReportRow) -> Self {
        CsvRecord {
            graph6: r.graph6.clone(),
            n: r.n,
            m: r.m,
            delta: r.delta,
            gamma: r.param(Param::Gamma),
            gamma_ve: r.param(Param::GammaVE),
            gamma_ev: r.param(Param::GammaEV),
            gamma_prime: r.param(Param::GammaPrime),
            gamma_dprime: r.param(Param::GammaDoublePrime),
            thm1_ok: r.thm1_ok,
            thm2_ok: r.thm2_ok,
            payan_ok: r.payan_ok,
            nodes: r.nodes,
            millis: r.millis,
        }
    }
}

/// Solves the nine numbers once and runs the arc-digraph, closed-form
/// bound and total-graph chain checks against them.
pub fn build_row(g: &Graph, budget: u64) -> Result<ReportRow, LawError> {
    if !g.is_nontrivial() || !g.is_connected() {
        return Err(LawError::NotApplicable(
            "report rows need a nontrivial connected graph".into(),
        ));
    }
    let clock = Stopwatch::start();
    let profile = nine_numbers(g, budget)?;
    let t1 = theorem1_with(g, &profile, budget)?;
    let t2 = theorem2_with(g, &profile);
    let payan = payan_with(g, &profile, budget)?;
    let mut nine = [0; 9];
    for (slot, (_, r)) in nine.iter_mut().zip(profile.iter()) {
        *slot = r.value;
    }
    // The profile's nodes are counted once, not once per law.
    let nodes = t1.nodes + payan.nodes - profile.total_nodes();
    Ok(ReportRow {
        graph6: graph_id(g),
        n: g.order(),
        m: g.size(),
        delta: g.min_degree(),
        nine,
        thm1_ok: t1.holds(),
        thm2_ok: t2.holds(),
        payan_ok: payan.holds(),
        nodes,
        millis: clock.elapsed().as_millis() as u64,
    })
}

pub fn emit_report(rows: &[ReportRow]) -> String {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    for r in rows {
        w.serialize(CsvRecord::from(r)).expect("in-memory CSV write");
    }
    let body = String::from_utf8(w.into_inner().expect("in-memory CSV flush"))
        .expect("CSV output is UTF-8");
    format!("{CSV_HEADER}\n{body}")
}

pub fn parse_report(text: &str) -> Result<Vec<CsvRecord>, csv::Error> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect()
}
