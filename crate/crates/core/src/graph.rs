//! Simple connected graphs with indexed edges.

use serde::Serialize;
use thiserror::Error;

/// Largest vertex count accepted by the constructors.
pub const MAX_VERTICES: usize = 500;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no edges")]
    NoEdges,
    #[error("edge {edge} is a loop at vertex {vertex}")]
    Loop { edge: usize, vertex: usize },
    #[error("edge {edge} duplicates the pair ({u}, {v})")]
    DuplicateEdge { edge: usize, u: usize, v: usize },
    #[error("edge {edge} references vertex {vertex} but the graph has {n} vertices")]
    VertexOutOfRange { edge: usize, vertex: usize, n: usize },
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("graph has {n} vertices, limit is {limit}")]
    TooLarge { n: usize, limit: usize },
}

impl GraphError {
    /// Short name of the violated invariant.
    pub fn invariant(&self) -> &'static str {
        match self {
            GraphError::NoEdges => "has_edge",
            GraphError::Loop { .. } => "no_loops",
            GraphError::DuplicateEdge { .. } => "no_multi_edges",
            GraphError::VertexOutOfRange { .. } => "vertex_range",
            GraphError::Disconnected { .. } => "connected",
            GraphError::TooLarge { .. } => "size_limit",
        }
    }
}

/// An immutable simple connected graph.
///
/// Vertices are `0..n`. Edge `e` is `edges()[e]`, stored with the smaller
/// endpoint first. `incident(x)` lists the edges at `x` in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    incidence: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, multi-edges, edgeless and
    /// disconnected input.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge {
                n,
                limit: MAX_VERTICES,
            });
        }
        if edges.is_empty() {
            return Err(GraphError::NoEdges);
        }
        let mut seen = std::collections::HashSet::with_capacity(edges.len());
        let mut normalized = Vec::with_capacity(edges.len());
        let mut incidence = vec![Vec::new(); n];
        for (e, &(u, v)) in edges.iter().enumerate() {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { edge: e, vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop { edge: e, vertex: u });
            }
            let pair = (u.min(v), u.max(v));
            if !seen.insert(pair) {
                return Err(GraphError::DuplicateEdge {
                    edge: e,
                    u: pair.0,
                    v: pair.1,
                });
            }
            normalized.push(pair);
            incidence[u].push(e);
            incidence[v].push(e);
        }
        let components = count_components(n, &incidence, &normalized);
        if components != 1 {
            return Err(GraphError::Disconnected { components });
        }
        Ok(Graph {
            n,
            edges: normalized,
            incidence,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn incident(&self, x: usize) -> &[usize] {
        &self.incidence[x]
    }

    pub fn degree(&self, x: usize) -> usize {
        self.incidence[x].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// The common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        self.incidence.iter().all(|inc| inc.len() == d).then_some(d)
    }

    /// Edges sharing at least one endpoint with `e`, excluding `e`.
    pub fn adjacent_edges(&self, e: usize) -> impl Iterator<Item = usize> + '_ {
        let (u, v) = self.edges[e];
        self.incidence[u]
            .iter()
            .chain(self.incidence[v].iter())
            .copied()
            .filter(move |&f| f != e)
    }
}

fn count_components(n: usize, incidence: &[Vec<usize>], edges: &[(usize, usize)]) -> usize {
    let mut seen = vec![false; n];
    let mut components = 0;
    let mut stack = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        components += 1;
        seen[start] = true;
        stack.push(start);
        while let Some(x) = stack.pop() {
            for &e in &incidence[x] {
                let (u, v) = edges[e];
                let y = if u == x { v } else { u };
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    components
}

/// Structural summary of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub is_simple: bool,
    pub is_connected: bool,
    pub has_edge: bool,
    pub min_degree: usize,
    pub max_degree: usize,
    pub regular_degree: Option<usize>,
    /// Minimum degree is at least two.
    pub meets_delta2: bool,
}

pub fn validate(g: &Graph) -> ValidationReport {
    // Construction already enforces the first three.
    let min_degree = g.min_degree();
    ValidationReport {
        is_simple: true,
        is_connected: true,
        has_edge: g.edge_count() > 0,
        min_degree,
        max_degree: g.max_degree(),
        regular_degree: g.regular_degree(),
        meets_delta2: min_degree >= 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_invalid_graphs() {
        assert_eq!(Graph::new(3, vec![]), Err(GraphError::NoEdges));
        assert!(matches!(
            Graph::new(2, vec![(0, 0)]),
            Err(GraphError::Loop { edge: 0, vertex: 0 })
        ));
        assert!(matches!(
            Graph::new(2, vec![(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { edge: 1, .. })
        ));
        assert!(matches!(
            Graph::new(4, vec![(0, 1), (2, 3)]),
            Err(GraphError::Disconnected { components: 2 })
        ));
        assert!(matches!(
            Graph::new(2, vec![(0, 2)]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            Graph::new(501, vec![(0, 1)]),
            Err(GraphError::TooLarge { .. })
        ));
    }

    #[test]
    fn star_report() {
        let star = Graph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = validate(&star);
        assert!(!r.meets_delta2);
        assert_eq!(r.regular_degree, None);
        assert_eq!((r.min_degree, r.max_degree), (1, 3));
    }

    #[test]
    fn incidence_is_consistent() {
        let g = Graph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            for x in 0..g.vertex_count() {
                let listed = g.incident(x).contains(&e);
                assert_eq!(listed, x == u || x == v);
            }
        }
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
        let mut adj: Vec<_> = g.adjacent_edges(4).collect();
        adj.sort();
        assert_eq!(adj, vec![0, 1, 2, 3]);
    }
}
