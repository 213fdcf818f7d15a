//! Exhaustive reference solver and a direct feasibility check, both written
//! against `Graph::associated` only.

use crate::graph::Element;

use super::{DominationInstance, SolveError};

/// Largest dominating universe the oracle will enumerate.
pub const ORACLE_LIMIT: usize = 20;

/// Does `set` dominate the instance's dominated domain?
///
/// Checks membership in the dominating domain, then walks every element of
/// the dominated domain and counts associated members of `set`.
pub fn is_dominating(inst: &DominationInstance<'_>, set: &[Element]) -> bool {
    let g = inst.graph;
    let in_domain = |a: &Element| {
        g.contains_element(*a) && inst.dominating.index_of(g, *a).is_some()
    };
    if !set.iter().all(in_domain) {
        return false;
    }
    inst.dominated.elements(g).all(|w| {
        if set.contains(&w) {
            return true;
        }
        let hits = set.iter().filter(|&&a| g.associated(a, w)).count();
        hits >= inst.k
    })
}

/// Minimum dominating set size by enumerating subsets of the dominating
/// domain in order of increasing size.
pub fn naive_oracle(inst: &DominationInstance<'_>) -> Result<usize, SolveError> {
    inst.validate()?;
    let g = inst.graph;
    let universe: Vec<Element> = inst.dominating.elements(g).collect();
    let size = universe.len();
    if size > ORACLE_LIMIT {
        return Err(SolveError::UniverseTooLarge {
            size,
            limit: ORACLE_LIMIT,
        });
    }
    let mut pick = Vec::with_capacity(size);
    for card in 0..=size {
        let mut found = false;
        for_each_subset(size, card, |mask| {
            pick.clear();
            pick.extend((0..size).filter(|i| mask >> i & 1 == 1).map(|i| universe[i]));
            found = is_dominating(inst, &pick);
            found
        });
        if found {
            return Ok(card);
        }
    }
    let stuck = inst
        .dominated
        .elements(g)
        .find(|&w| !universe.iter().any(|&a| a == w || g.associated(a, w)))
        .unwrap_or(Element::Vertex(0));
    Err(SolveError::Infeasible(stuck))
}

/// Calls `f` on every `card`-subset of `0..size` as a bit mask until it
/// returns true. Uses Gosper's hack to step between masks of equal weight.
fn for_each_subset(size: usize, card: usize, mut f: impl FnMut(u32) -> bool) {
    if card == 0 {
        f(0);
        return;
    }
    if card > size {
        return;
    }
    let limit = 1u64 << size;
    let mut mask: u64 = (1u64 << card) - 1;
    while mask < limit {
        if f(mask as u32) {
            return;
        }
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
}
