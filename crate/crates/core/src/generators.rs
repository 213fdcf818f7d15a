//! Graph families and test corpora.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

/// Largest order `enumerate_connected` accepts unless a limit is passed.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 6;

const RANDOM_ATTEMPTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenerateError {
    #[error("{family} requires n >= {min}, got {n}")]
    TooSmall {
        family: Family,
        n: usize,
        min: usize,
    },
    #[error("edge probability must lie in (0, 1], got {0}")]
    BadProbability(f64),
    #[error(
        "exhaustive enumeration of order {n} exceeds the limit {limit}; \
         raise the limit explicitly or use random sampling"
    )]
    OverBudget { n: usize, limit: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Complete,
    Star,
    Ridged,
    Path,
    Cycle,
    RandomConnected,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Complete,
        Family::Star,
        Family::Ridged,
        Family::Path,
        Family::Cycle,
        Family::RandomConnected,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Star => "star",
            Family::Ridged => "ridged",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::RandomConnected => "random",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .or(match s {
                "random-connected" | "random_connected" => Some(Family::RandomConnected),
                _ => None,
            })
            .ok_or_else(|| {
                format!("unknown family `{s}` (expected complete, star, ridged, path, cycle, random)")
            })
    }
}

/// A family name with its parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub p: Option<f64>,
    pub seed: Option<u64>,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> Self {
        FamilySpec {
            family,
            n,
            p: None,
            seed: None,
        }
    }

    pub fn build(&self) -> Result<Graph, GenerateError> {
        match self.family {
            Family::Complete => complete(self.n),
            Family::Star => star(self.n),
            Family::Ridged => ridged(self.n),
            Family::Path => path(self.n),
            Family::Cycle => cycle(self.n),
            Family::RandomConnected => {
                random_connected(self.n, self.p.unwrap_or(0.5), self.seed.unwrap_or(0))
            }
        }
    }
}

fn at_least(family: Family, n: usize, min: usize) -> Result<(), GenerateError> {
    if n < min {
        Err(GenerateError::TooSmall { family, n, min })
    } else {
        Ok(())
    }
}

fn build(n: usize, pairs: &[(usize, usize)]) -> Graph {
    Graph::new(n, pairs).expect("generator produced a valid pair list")
}

/// `K_n`.
pub fn complete(n: usize) -> Result<Graph, GenerateError> {
    at_least(Family::Complete, n, 1)?;
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    Ok(build(n, &pairs))
}

/// `K_{1,n}` with center 0.
pub fn star(n: usize) -> Result<Graph, GenerateError> {
    at_least(Family::Star, n, 1)?;
    let pairs: Vec<_> = (1..=n).map(|v| (0, v)).collect();
    Ok(build(n + 1, &pairs))
}

/// The ridged graph on `3n` vertices: a spine `u_1..u_n` with two pendant
/// leaves `v_i`, `w_i` on every spine vertex.
///
/// Layout: `u_i = i-1`, `v_i = n+i-1`, `w_i = 2n+i-1`.
pub fn ridged(n: usize) -> Result<Graph, GenerateError> {
    at_least(Family::Ridged, n, 1)?;
    let mut pairs = Vec::with_capacity(3 * n - 1);
    for i in 0..n {
        if i + 1 < n {
            pairs.push((i, i + 1));
        }
        pairs.push((i, n + i));
        pairs.push((i, 2 * n + i));
    }
    Ok(build(3 * n, &pairs))
}

pub fn path(n: usize) -> Result<Graph, GenerateError> {
    at_least(Family::Path, n, 1)?;
    let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(build(n, &pairs))
}

pub fn cycle(n: usize) -> Result<Graph, GenerateError> {
    at_least(Family::Cycle, n, 3)?;
    let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(build(n, &pairs))
}

/// A connected `G(n, p)` sample, deterministic in `(n, p, seed)`.
///
/// Samples are redrawn a bounded number of times; if none is connected, a
/// random spanning tree is laid down first and the `G(n, p)` edges added on
/// top of it.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph, GenerateError> {
    at_least(Family::RandomConnected, n, 1)?;
    if !(p > 0.0 && p <= 1.0) {
        return Err(GenerateError::BadProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample = |rng: &mut ChaCha8Rng| {
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    pairs.push((u, v));
                }
            }
        }
        pairs
    };
    for _ in 0..RANDOM_ATTEMPTS {
        let g = build(n, &sample(&mut rng));
        if g.is_connected() {
            return Ok(g);
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut pairs: Vec<_> = (1..n)
        .map(|i| (order[i], order[rng.gen_range(0..i)]))
        .collect();
    pairs.extend(sample(&mut rng));
    Ok(build(n, &pairs))
}

/// Every connected labeled graph on `n` vertices, `n <= DEFAULT_ENUMERATION_LIMIT`.
pub fn enumerate_connected(n: usize) -> Result<ConnectedGraphs, GenerateError> {
    enumerate_connected_with_limit(n, DEFAULT_ENUMERATION_LIMIT)
}

/// Labeled graphs are visited by increasing edge mask, where bit `i` of the
/// mask selects the `i`-th vertex pair in lexicographic order.
pub fn enumerate_connected_with_limit(
    n: usize,
    limit: usize,
) -> Result<ConnectedGraphs, GenerateError> {
    at_least(Family::Complete, n, 1)?;
    if n > limit || n > 11 {
        return Err(GenerateError::OverBudget { n, limit });
    }
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    let total = 1u64 << pairs.len();
    Ok(ConnectedGraphs {
        n,
        pairs,
        next_mask: 0,
        total,
    })
}

/// Iterator returned by [`enumerate_connected`].
pub struct ConnectedGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next_mask: u64,
    total: u64,
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next_mask < self.total {
            let mask = self.next_mask;
            self.next_mask += 1;
            // A connected graph needs at least n-1 edges.
            if (mask.count_ones() as usize) + 1 < self.n {
                continue;
            }
            let chosen: Vec<_> = self
                .pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let g = build(self.n, &chosen);
            if g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}

/// Connected labeled graphs on `2..=max_n` vertices, ordered by `n`.
pub fn connected_corpus(max_n: usize) -> Vec<Graph> {
    (2..=max_n)
        .flat_map(|n| enumerate_connected(n).expect("corpus order within limit"))
        .collect()
}
