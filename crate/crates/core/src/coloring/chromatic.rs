use super::search::connected_edge_order;
use super::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_CHROMATIC_BUDGET: u64 = 1_000_000_000;

struct DeltaSearch<'g> {
    g: &'g Graph,
    order: Vec<usize>,
    k: usize,
    /// `used[x * (k + 1) + c]`: color `c` present at vertex `x`.
    used: Vec<bool>,
    colors: Vec<u32>,
    nodes: u64,
    budget: u64,
}

impl DeltaSearch<'_> {
    fn taken(&self, x: usize, c: usize) -> bool {
        self.used[x * (self.k + 1) + c]
    }

    fn set(&mut self, x: usize, c: usize, value: bool) {
        self.used[x * (self.k + 1) + c] = value;
    }

    /// Colors never used so far are interchangeable, so only the smallest
    /// of them (`highest + 1`) is tried.
    fn extend(&mut self, depth: usize, highest: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let e = self.order[depth];
        let (u, v) = self.g.endpoints(e);
        for c in 1..=self.k.min(highest + 1) {
            if self.taken(u, c) || self.taken(v, c) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::NodeBudget {
                    budget: self.budget,
                    best: None,
                });
            }
            self.set(u, c, true);
            self.set(v, c, true);
            self.colors[e] = c as u32;
            let found = self.extend(depth + 1, highest.max(c))?;
            if found {
                return Ok(true);
            }
            self.set(u, c, false);
            self.set(v, c, false);
            self.colors[e] = 0;
        }
        Ok(false)
    }
}

/// A proper edge coloring with `max_degree(g)` colors, if one exists.
pub fn class_one_coloring(g: &Graph, budget: u64) -> Result<Option<EdgeColoring>> {
    let k = g.max_degree();
    let mut search = DeltaSearch {
        g,
        order: connected_edge_order(g),
        k,
        used: vec![false; g.vertex_count() * (k + 1)],
        colors: vec![0; g.edge_count()],
        nodes: 0,
        budget,
    };
    let found = search.extend(0, 0)?;
    Ok(found.then(|| EdgeColoring::new(k as u32, search.colors)))
}

/// `max_degree(g)` if a proper coloring with that many colors exists,
/// otherwise `max_degree(g) + 1`. Never guesses: an exhausted budget is an
/// error.
pub fn chromatic_index(g: &Graph, budget: u64) -> Result<usize> {
    let delta = g.max_degree();
    Ok(match class_one_coloring(g, budget)? {
        Some(_) => delta,
        None => delta + 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_proper;
    use crate::families::FamilySpec;

    fn graph(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate()
    }

    #[test]
    fn small_cases() {
        let chi = |s| chromatic_index(&graph(s), DEFAULT_CHROMATIC_BUDGET).unwrap();
        assert_eq!(chi("cycle:4"), 2);
        assert_eq!(chi("cycle:5"), 3);
        assert_eq!(chi("petersen"), 4);
        assert_eq!(chi("complete:4"), 3);
        assert_eq!(chi("complete:5"), 5);
        assert_eq!(chi("complete_bipartite:3,3"), 3);
        assert_eq!(chi("hypercube:4"), 4);
    }

    #[test]
    fn witness_is_proper() {
        for s in ["complete:6", "prism:5", "moebius_ladder:4", "hypercube:3"] {
            let g = graph(s);
            let c = class_one_coloring(&g, DEFAULT_CHROMATIC_BUDGET).unwrap().unwrap();
            assert!(is_proper(&g, &c).unwrap(), "{s}");
        }
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let g = graph("petersen");
        assert!(matches!(chromatic_index(&g, 10), Err(Error::NodeBudget { .. })));
    }
}
