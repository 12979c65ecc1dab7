//! Proper edge colorings, vertex spectra and their enumeration.

mod chromatic;
pub(crate) mod search;
mod spectrum;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use chromatic::{chromatic_index, class_one_coloring, DEFAULT_CHROMATIC_BUDGET};
pub use search::{connected_edge_order, enumerate, enumerate_par, SearchConfig};
pub use spectrum::{SpectrumState, VertexStatus, MAX_COLORS};

/// A total assignment of colors `1..=t` to the edges of a graph, indexed
/// by edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeColoring {
    t: u32,
    colors: Vec<u32>,
}

impl EdgeColoring {
    pub fn new(t: u32, colors: Vec<u32>) -> Self {
        EdgeColoring { t, colors }
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, e: usize) -> u32 {
        self.colors[e]
    }

    pub fn into_colors(self) -> Vec<u32> {
        self.colors
    }
}

fn check_length(g: &Graph, c: &EdgeColoring) -> Result<()> {
    if c.colors.len() != g.edge_count() {
        return Err(Error::argument(format!(
            "coloring has {} entries, graph has {} edges",
            c.colors.len(),
            g.edge_count()
        )));
    }
    Ok(())
}

/// Whether `c` is a proper edge `t`-coloring: colors in `1..=t`, adjacent
/// edges distinct, and every color used.
pub fn is_proper(g: &Graph, c: &EdgeColoring) -> Result<bool> {
    check_length(g, c)?;
    let t = c.t as usize;
    if c.colors.iter().any(|&k| k == 0 || k as usize > t) {
        return Ok(false);
    }
    let mut used = vec![false; t + 1];
    for &k in &c.colors {
        used[k as usize] = true;
    }
    if used[1..].iter().any(|&u| !u) {
        return Ok(false);
    }
    let mut seen = vec![usize::MAX; t + 1];
    for x in 0..g.vertex_count() {
        for &e in g.incident(x) {
            let k = c.colors[e] as usize;
            if seen[k] == x {
                return Ok(false);
            }
            seen[k] = x;
        }
    }
    Ok(true)
}

/// Colors on the edges at `x`.
pub fn spectrum(g: &Graph, x: usize, c: &EdgeColoring) -> BTreeSet<u32> {
    g.incident(x).iter().map(|&e| c.colors[e]).collect()
}

/// Whether a nonempty color set is a run of consecutive integers.
pub fn is_interval(s: &BTreeSet<u32>) -> Result<bool> {
    match (s.first(), s.last()) {
        (Some(&lo), Some(&hi)) => Ok((hi - lo) as usize + 1 == s.len()),
        _ => Err(Error::argument("spectrum is empty")),
    }
}

/// Vertices whose spectrum is an interval, in increasing order.
pub fn v_int(g: &Graph, c: &EdgeColoring) -> Result<Vec<usize>> {
    if !is_proper(g, c)? {
        return Err(Error::argument("coloring is not a proper surjective edge coloring"));
    }
    let mut out = Vec::new();
    for x in 0..g.vertex_count() {
        if is_interval(&spectrum(g, x, c))? {
            out.push(x);
        }
    }
    Ok(out)
}

/// Number of vertices with an interval spectrum.
pub fn f(g: &Graph, c: &EdgeColoring) -> Result<usize> {
    v_int(g, c).map(|v| v.len())
}
