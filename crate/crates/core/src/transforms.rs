//! Line graph and total graph constructions.
//!
//! Both keep an explicit map from elements of the source graph to vertices of
//! the result. For the total graph the numbering is vertices first, then
//! edges, which is the same numbering [`ElementDomain::VE`] uses, so a
//! `VE`-indexed set in `G` and a vertex set in `T(G)` are the same indices.
//!
//! [`ElementDomain::VE`]: crate::graph::ElementDomain::VE

use thiserror::Error;

use crate::graph::{Element, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("line graph undefined for empty graphs")]
    NoEdges,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone)]
pub struct LineGraphMap {
    pub result: Graph,
    /// Edge index of the source graph to vertex index of the line graph.
    pub edge_to_vertex: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct TotalGraphMap {
    pub result: Graph,
    pub vertex_image: Vec<usize>,
    pub edge_image: Vec<usize>,
}

impl TotalGraphMap {
    pub fn image(&self, a: Element) -> usize {
        match a {
            Element::Vertex(v) => self.vertex_image[v],
            Element::Edge(e) => self.edge_image[e],
        }
    }
}

pub fn line_graph(g: &Graph) -> Result<LineGraphMap, TransformError> {
    let m = g.size();
    if m == 0 {
        return Err(TransformError::NoEdges);
    }
    let mut pairs = Vec::new();
    for v in 0..g.order() {
        let inc: Vec<usize> = g.incident(v).iter().collect();
        for (i, &a) in inc.iter().enumerate() {
            for &b in &inc[i + 1..] {
                pairs.push((a, b));
            }
        }
    }
    // Two edges share at most one endpoint in a simple graph, so no pair
    // is produced twice.
    let result = Graph::new(m, &pairs)?;
    Ok(LineGraphMap {
        result,
        edge_to_vertex: (0..m).collect(),
    })
}

pub fn total_graph(g: &Graph) -> TotalGraphMap {
    let n = g.order();
    let m = g.size();
    let mut pairs: Vec<(usize, usize)> = g.edges().to_vec();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        pairs.push((u, n + e));
        pairs.push((v, n + e));
    }
    for v in 0..n {
        let inc: Vec<usize> = g.incident(v).iter().collect();
        for (i, &a) in inc.iter().enumerate() {
            for &b in &inc[i + 1..] {
                pairs.push((n + a, n + b));
            }
        }
    }
    let result = Graph::new(n + m, &pairs).expect("total graph endpoints are in range");
    TotalGraphMap {
        result,
        vertex_image: (0..n).collect(),
        edge_image: (n..n + m).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &pairs).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                pairs.push((u, v));
            }
        }
        Graph::new(n, &pairs).unwrap()
    }

    #[test]
    fn line_graph_of_claw_is_triangle() {
        let claw = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let l = line_graph(&claw).unwrap().result;
        assert_eq!(l, complete(3));
    }

    #[test]
    fn line_graph_of_p4_is_p3() {
        assert_eq!(line_graph(&path(4)).unwrap().result, path(3));
    }

    #[test]
    fn line_graph_of_k5_size() {
        let l = line_graph(&complete(5)).unwrap().result;
        assert_eq!((l.order(), l.size()), (10, 30));
    }

    #[test]
    fn line_graph_rejects_edgeless() {
        let g = Graph::empty(3).unwrap();
        assert_eq!(line_graph(&g).unwrap_err(), TransformError::NoEdges);
        assert_eq!(
            TransformError::NoEdges.to_string(),
            "line graph undefined for empty graphs"
        );
    }

    #[test]
    fn total_graph_of_k2_is_triangle() {
        assert_eq!(total_graph(&complete(2)).result, complete(3));
    }

    #[test]
    fn total_graph_of_p3() {
        // Elements of 0-1-2: three vertices, two edges; associated pairs are
        // 0-1, 1-2, e0-e1 and the four incidences.
        let t = total_graph(&path(3));
        assert_eq!((t.result.order(), t.result.size()), (5, 7));
        assert_eq!(t.result.degree(t.vertex_image[1]), 4);
    }

    #[test]
    fn total_graph_of_k5_order() {
        assert_eq!(total_graph(&complete(5)).result.order(), 15);
    }

    #[test]
    fn total_graph_min_degree_doubles() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let t = total_graph(&g);
        assert_eq!(t.result.min_degree(), 2 * g.min_degree());
        for v in 0..g.order() {
            assert_eq!(t.result.degree(t.vertex_image[v]), 2 * g.degree(v));
        }
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            assert_eq!(t.result.degree(t.edge_image[e]), g.degree(u) + g.degree(v));
        }
    }
}
