//! Simple undirected graphs with canonical edge indexing and the association
//! relation between elements (vertices and edges).

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::bits::BitSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("self-loop ({0}, {0}) is not allowed in a simple graph")]
    SelfLoop(usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    OutOfRange { u: usize, v: usize, n: usize },
}

/// An immutable simple graph.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically; the
/// position in that order is the edge index.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<BitSet>,
    inc: Vec<BitSet>,
}

impl Graph {
    /// Builds a graph from an arbitrary pair list; pairs are normalized to
    /// `u < v`, deduplicated and sorted.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();

        let m = edges.len();
        let mut adj = vec![BitSet::new(n); n];
        let mut inc = vec![BitSet::new(m); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adj[u].insert(v);
            adj[v].insert(u);
            inc[u].insert(i);
            inc[v].insert(i);
        }
        Ok(Graph { n, edges, adj, inc })
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Graph::new(n, &[])
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    /// Index of the edge joining `u` and `v`, in either orientation.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    /// Edge indices incident to `v`.
    #[inline]
    pub fn incident(&self, v: usize) -> &BitSet {
        &self.inc[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(BitSet::is_empty)
    }

    /// At least two vertices.
    pub fn is_nontrivial(&self) -> bool {
        self.n >= 2
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = BitSet::new(self.n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(v) = stack.pop() {
            for w in self.adj[v].iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen.count() == self.n
    }

    /// A copy of this graph with the extra edge `(u, v)`.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut pairs = self.edges.clone();
        pairs.push((u, v));
        Graph::new(self.n, &pairs)
    }

    /// Two distinct elements are associated when they are adjacent or incident.
    pub fn associated(&self, a: Element, b: Element) -> bool {
        match (a, b) {
            (Element::Vertex(x), Element::Vertex(y)) => x != y && self.has_edge(x, y),
            (Element::Edge(i), Element::Edge(j)) => {
                if i == j {
                    return false;
                }
                let (a0, a1) = self.edges[i];
                let (b0, b1) = self.edges[j];
                a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1
            }
            (Element::Vertex(v), Element::Edge(e)) | (Element::Edge(e), Element::Vertex(v)) => {
                let (x, y) = self.edges[e];
                v == x || v == y
            }
        }
    }

    pub fn contains_element(&self, a: Element) -> bool {
        match a {
            Element::Vertex(v) => v < self.n,
            Element::Edge(e) => e < self.edges.len(),
        }
    }

    /// The elements of `domain` that `a` takes care of: `a` itself when it
    /// lies in `domain`, plus everything in `domain` associated with it.
    /// The result is indexed by [`ElementDomain::index_of`].
    pub fn cover_set(&self, a: Element, domain: ElementDomain) -> BitSet {
        let n = self.n;
        let mut out = BitSet::new(domain.len(self));
        let (with_v, v_off) = match domain {
            ElementDomain::V | ElementDomain::VE => (true, 0),
            ElementDomain::E => (false, 0),
        };
        let (with_e, e_off) = match domain {
            ElementDomain::E => (true, 0),
            ElementDomain::VE => (true, n),
            ElementDomain::V => (false, 0),
        };
        match a {
            Element::Vertex(v) => {
                if with_v {
                    out.insert(v_off + v);
                    for w in self.adj[v].iter() {
                        out.insert(v_off + w);
                    }
                }
                if with_e {
                    for e in self.inc[v].iter() {
                        out.insert(e_off + e);
                    }
                }
            }
            Element::Edge(e) => {
                let (x, y) = self.edges[e];
                if with_v {
                    out.insert(v_off + x);
                    out.insert(v_off + y);
                }
                if with_e {
                    for f in self.inc[x].iter().chain(self.inc[y].iter()) {
                        out.insert(e_off + f);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

/// A vertex or an edge of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Vertex(usize),
    Edge(usize),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "v{v}"),
            Element::Edge(e) => write!(f, "e{e}"),
        }
    }
}

/// Which elements a side of a domination problem ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ElementDomain {
    V,
    E,
    /// Vertices and edges; vertices are indexed first.
    VE,
}

impl ElementDomain {
    pub const ALL: [ElementDomain; 3] = [ElementDomain::V, ElementDomain::E, ElementDomain::VE];

    pub fn len(self, g: &Graph) -> usize {
        match self {
            ElementDomain::V => g.order(),
            ElementDomain::E => g.size(),
            ElementDomain::VE => g.order() + g.size(),
        }
    }

    pub fn is_empty(self, g: &Graph) -> bool {
        self.len(g) == 0
    }

    pub fn includes_vertices(self) -> bool {
        matches!(self, ElementDomain::V | ElementDomain::VE)
    }

    pub fn includes_edges(self) -> bool {
        matches!(self, ElementDomain::E | ElementDomain::VE)
    }

    /// The `i`-th element of this domain in `g`.
    pub fn element_at(self, g: &Graph, i: usize) -> Element {
        match self {
            ElementDomain::V => Element::Vertex(i),
            ElementDomain::E => Element::Edge(i),
            ElementDomain::VE if i < g.order() => Element::Vertex(i),
            ElementDomain::VE => Element::Edge(i - g.order()),
        }
    }

    pub fn index_of(self, g: &Graph, a: Element) -> Option<usize> {
        match (self, a) {
            (ElementDomain::V | ElementDomain::VE, Element::Vertex(v)) => Some(v),
            (ElementDomain::E, Element::Edge(e)) => Some(e),
            (ElementDomain::VE, Element::Edge(e)) => Some(g.order() + e),
            _ => None,
        }
    }

    pub fn elements(self, g: &Graph) -> impl Iterator<Item = Element> + '_ {
        (0..self.len(g)).map(move |i| self.element_at(g, i))
    }

    pub fn name(self) -> &'static str {
        match self {
            ElementDomain::V => "V",
            ElementDomain::E => "E",
            ElementDomain::VE => "VE",
        }
    }
}

impl fmt::Display for ElementDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ElementDomain {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "V" => Ok(ElementDomain::V),
            "E" => Ok(ElementDomain::E),
            "VE" | "V+E" | "VUE" => Ok(ElementDomain::VE),
            other => Err(format!("unknown element domain `{other}` (expected V, E or VE)")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2() -> Graph {
        Graph::new(2, &[(0, 1)]).unwrap()
    }

    #[test]
    fn k2_basics() {
        let g = k2();
        assert_eq!(g.size(), 1);
        assert_eq!(g.edge(0), (0, 1));
        assert!(g.is_connected());
    }

    #[test]
    fn normalizes_and_dedups() {
        let g = Graph::new(4, &[(1, 0), (2, 3), (0, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (2, 3)]);
        assert!(!g.is_connected());
    }

    #[test]
    fn rejects_self_loop_and_range() {
        assert_eq!(Graph::new(3, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::OutOfRange { u: 0, v: 3, n: 3 })
        );
        assert_eq!(Graph::new(0, &[]), Err(GraphError::NoVertices));
    }

    #[test]
    fn single_vertex_is_connected() {
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn association_examples() {
        let g = k2();
        assert!(g.associated(Element::Vertex(0), Element::Edge(0)));
        assert!(!g.associated(Element::Vertex(0), Element::Vertex(0)));
        let p = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.associated(Element::Edge(0), Element::Edge(1)));
        assert!(!p.associated(Element::Vertex(0), Element::Vertex(2)));
        assert!(!p.associated(Element::Edge(0), Element::Edge(0)));
    }

    #[test]
    fn cover_set_examples() {
        let g = k2();
        let ids = |s: BitSet| s.iter().collect::<Vec<_>>();
        assert_eq!(ids(g.cover_set(Element::Vertex(0), ElementDomain::V)), vec![0, 1]);
        assert_eq!(ids(g.cover_set(Element::Edge(0), ElementDomain::V)), vec![0, 1]);
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            ids(star.cover_set(Element::Vertex(0), ElementDomain::E)),
            vec![0, 1, 2]
        );
        // Edge 0 of K2 inside VE: both endpoints and itself.
        assert_eq!(ids(g.cover_set(Element::Edge(0), ElementDomain::VE)), vec![0, 1, 2]);
    }

    #[test]
    fn domain_indexing_round_trips() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        for d in ElementDomain::ALL {
            for (i, a) in d.elements(&g).enumerate() {
                assert_eq!(d.index_of(&g, a), Some(i));
            }
        }
        assert_eq!(ElementDomain::VE.element_at(&g, 3), Element::Edge(0));
        assert_eq!(ElementDomain::E.index_of(&g, Element::Vertex(0)), None);
    }

    #[test]
    fn parses_domains() {
        assert_eq!("ve".parse::<ElementDomain>(), Ok(ElementDomain::VE));
        assert!("x".parse::<ElementDomain>().is_err());
    }
}
