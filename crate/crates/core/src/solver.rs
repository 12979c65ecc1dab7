//! Branch-and-bound computation of `mu1(G, t)` and `mu2(G, t)`, the minimum
//! and maximum number of interval-spectrum vertices over all proper edge
//! `t`-colorings, and the aggregates over `t`.
//!
//! Bounds on a partial coloring: vertices already complete with an interval
//! spectrum are counted by `interval`; vertices that can no longer end with
//! an interval (complete non-interval, or an open vertex whose span already
//! exceeds its degree) by `never`. Every completion then has
//! `interval <= f <= n - never`.
//!
//! Witnesses are always the first attaining coloring in enumeration order,
//! whatever the worker count.

use std::ops::RangeInclusive;

use serde::Serialize;

use crate::coloring::search::{run_partitioned, run_sequential, Bounds, Budget, Flow, Problem, Visitor};
use crate::coloring::{class_one_coloring, EdgeColoring, SearchConfig, MAX_COLORS};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Search limits for the solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverConfig {
    pub search: SearchConfig,
    /// Budget for the chromatic index search.
    pub chromatic_budget: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            search: SearchConfig::default(),
            chromatic_budget: crate::coloring::DEFAULT_CHROMATIC_BUDGET,
        }
    }
}

impl SolverConfig {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.search.workers = workers.max(1);
        self
    }

    pub fn with_node_budget(mut self, budget: u64) -> Self {
        self.search.node_budget = budget;
        self
    }
}

/// An extremal value of `f` over the proper `t`-colorings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Extremum {
    pub value: usize,
    pub witness: EdgeColoring,
    /// False when the search ran out of budget; `value` is then only the
    /// best found so far.
    pub exact: bool,
    pub nodes: u64,
}

#[derive(Clone)]
struct Best {
    value: usize,
    colors: Vec<u32>,
}

#[derive(Clone)]
struct Maximize {
    n: usize,
    floor: usize,
    best: Option<Best>,
}

impl Visitor for Maximize {
    fn prune(&self, b: Bounds) -> bool {
        let upper = self.n - b.never;
        match &self.best {
            Some(best) => upper <= best.value,
            None => upper < self.floor,
        }
    }

    fn leaf(&mut self, colors: &[u32], f: usize) -> Flow {
        let better = self.best.as_ref().map_or(f >= self.floor, |b| f > b.value);
        if better {
            self.best = Some(Best {
                value: f,
                colors: colors.to_vec(),
            });
            if f == self.n {
                return Flow::Stop;
            }
        }
        Flow::Continue
    }
}

#[derive(Clone)]
struct Minimize {
    ceiling: usize,
    best: Option<Best>,
}

impl Visitor for Minimize {
    fn prune(&self, b: Bounds) -> bool {
        match &self.best {
            Some(best) => b.interval >= best.value,
            None => b.interval > self.ceiling,
        }
    }

    fn leaf(&mut self, colors: &[u32], f: usize) -> Flow {
        let better = self.best.as_ref().map_or(f <= self.ceiling, |b| f < b.value);
        if better {
            self.best = Some(Best {
                value: f,
                colors: colors.to_vec(),
            });
            if f == 0 {
                return Flow::Stop;
            }
        }
        Flow::Continue
    }
}

/// Stops at the first complete coloring.
#[derive(Clone, Default)]
struct First(Option<Best>);

impl Visitor for First {
    fn leaf(&mut self, colors: &[u32], f: usize) -> Flow {
        self.0 = Some(Best {
            value: f,
            colors: colors.to_vec(),
        });
        Flow::Stop
    }
}

/// Stops at the first coloring with every spectrum an interval.
#[derive(Clone, Default)]
struct AllInterval(Option<Vec<u32>>);

impl Visitor for AllInterval {
    fn prune(&self, b: Bounds) -> bool {
        b.never > 0
    }

    fn leaf(&mut self, colors: &[u32], _f: usize) -> Flow {
        self.0 = Some(colors.to_vec());
        Flow::Stop
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Goal {
    Min,
    Max,
}

/// Cheap complete colorings from the first leaf in ascending and in
/// descending color order.
fn seeds(p: &Problem<'_>, budget: &Budget) -> Result<Vec<Best>, ()> {
    let mut out = Vec::new();
    for descending in [false, true] {
        let mut first = First::default();
        if run_sequential(p, &mut first, budget, descending) == Flow::Abort {
            return Err(());
        }
        out.extend(first.0);
    }
    Ok(out)
}

fn extremum(g: &Graph, t: u32, goal: Goal, config: &SearchConfig) -> Result<Extremum> {
    let p = Problem::new(g, t)?;
    let budget = Budget::new(config.node_budget);
    let out_of_budget = || Error::NodeBudget {
        budget: config.node_budget,
        best: None,
    };
    let seeds = seeds(&p, &budget).map_err(|_| out_of_budget())?;
    let seed = match goal {
        Goal::Max => seeds.iter().max_by_key(|b| b.value),
        Goal::Min => seeds.iter().min_by_key(|b| b.value),
    }
    .cloned()
    .ok_or_else(|| Error::argument(format!("graph has no proper edge {t}-coloring")))?;

    let (best, exhausted, nodes) = match goal {
        Goal::Max => {
            let template = Maximize {
                n: g.vertex_count(),
                floor: seed.value,
                best: None,
            };
            let run = run_partitioned(&p, &template, config, &budget);
            let best = run
                .parts
                .into_iter()
                .filter_map(|v| v.best)
                .fold(None::<Best>, |acc, b| match acc {
                    Some(a) if a.value >= b.value => Some(a),
                    _ => Some(b),
                });
            (best, run.exhausted, run.nodes)
        }
        Goal::Min => {
            let template = Minimize {
                ceiling: seed.value,
                best: None,
            };
            let run = run_partitioned(&p, &template, config, &budget);
            let best = run
                .parts
                .into_iter()
                .filter_map(|v| v.best)
                .fold(None::<Best>, |acc, b| match acc {
                    Some(a) if a.value <= b.value => Some(a),
                    _ => Some(b),
                });
            (best, run.exhausted, run.nodes)
        }
    };
    let best = match (best, exhausted) {
        (Some(b), false) => b,
        (Some(b), true) => better_of(goal, b, seed),
        (None, true) => seed,
        (None, false) => unreachable!("the seed coloring is reachable by the full search"),
    };
    Ok(Extremum {
        value: best.value,
        witness: EdgeColoring::new(t, best.colors),
        exact: !exhausted,
        nodes,
    })
}

fn better_of(goal: Goal, a: Best, b: Best) -> Best {
    let a_wins = match goal {
        Goal::Max => a.value >= b.value,
        Goal::Min => a.value <= b.value,
    };
    if a_wins {
        a
    } else {
        b
    }
}

fn t_range_of(g: &Graph, chi: usize) -> RangeInclusive<u32> {
    chi as u32..=g.edge_count() as u32
}

fn check_t(g: &Graph, t: u32, chi: usize) -> Result<()> {
    if !t_range_of(g, chi).contains(&t) {
        return Err(Error::argument(format!(
            "t = {t} outside [{chi}, {}]",
            g.edge_count()
        )));
    }
    Ok(())
}

fn into_exact(e: Extremum, budget: u64) -> Result<Extremum> {
    if e.exact {
        Ok(e)
    } else {
        Err(Error::NodeBudget {
            budget,
            best: Some(e.value),
        })
    }
}

/// `mu1(G, t)`: the minimum of `f` over proper edge `t`-colorings.
pub fn mu1(g: &Graph, t: u32, config: &SolverConfig) -> Result<Extremum> {
    let chi = crate::coloring::chromatic_index(g, config.chromatic_budget)?;
    check_t(g, t, chi)?;
    into_exact(extremum(g, t, Goal::Min, &config.search)?, config.search.node_budget)
}

/// `mu2(G, t)`: the maximum of `f` over proper edge `t`-colorings.
pub fn mu2(g: &Graph, t: u32, config: &SolverConfig) -> Result<Extremum> {
    let chi = crate::coloring::chromatic_index(g, config.chromatic_budget)?;
    check_t(g, t, chi)?;
    into_exact(extremum(g, t, Goal::Max, &config.search)?, config.search.node_budget)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MuRow {
    pub t: u32,
    pub mu1: usize,
    pub mu2: usize,
    pub exact: bool,
    pub witness_min: EdgeColoring,
    pub witness_max: EdgeColoring,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MuTable {
    pub rows: Vec<MuRow>,
}

impl MuTable {
    pub fn is_exact(&self) -> bool {
        self.rows.iter().all(|r| r.exact)
    }

    pub fn row(&self, t: u32) -> Option<&MuRow> {
        self.rows.iter().find(|r| r.t == t)
    }
}

/// Smallest `t` at which each aggregate is attained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AttainingT {
    pub mu11: u32,
    pub mu12: u32,
    pub mu21: u32,
    pub mu22: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MuSummary {
    pub mu11: usize,
    pub mu12: usize,
    pub mu21: usize,
    pub mu22: usize,
    pub attaining_t: AttainingT,
}

impl MuSummary {
    /// Aggregates over the rows; `None` for an empty table.
    pub fn from_rows(rows: &[MuRow]) -> Option<MuSummary> {
        let pick = |key: fn(&MuRow) -> usize, max: bool| {
            let mut best: Option<(usize, u32)> = None;
            for r in rows {
                let v = key(r);
                let better = best.is_none_or(|(b, _)| if max { v > b } else { v < b });
                if better {
                    best = Some((v, r.t));
                }
            }
            best
        };
        let (mu11, t11) = pick(|r| r.mu1, false)?;
        let (mu12, t12) = pick(|r| r.mu1, true)?;
        let (mu21, t21) = pick(|r| r.mu2, false)?;
        let (mu22, t22) = pick(|r| r.mu2, true)?;
        Some(MuSummary {
            mu11,
            mu12,
            mu21,
            mu22,
            attaining_t: AttainingT {
                mu11: t11,
                mu12: t12,
                mu21: t21,
                mu22: t22,
            },
        })
    }

    pub fn values(&self) -> (usize, usize, usize, usize) {
        (self.mu11, self.mu12, self.mu21, self.mu22)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MuResult {
    pub chi_prime: usize,
    pub table: MuTable,
    /// Present only when the table covers all of `[chi', |E|]` exactly.
    pub summary: Option<MuSummary>,
}

/// Computes the table rows for `range` (default: the whole `[chi', |E|]`).
pub fn mu_table(g: &Graph, range: Option<RangeInclusive<u32>>, config: &SolverConfig) -> Result<MuResult> {
    let chi = crate::coloring::chromatic_index(g, config.chromatic_budget)?;
    let full = t_range_of(g, chi);
    let range = range.unwrap_or_else(|| full.clone());
    if range.is_empty() || !full.contains(range.start()) || !full.contains(range.end()) {
        return Err(Error::argument(format!(
            "t range {}..{} outside [{chi}, {}]",
            range.start(),
            range.end(),
            g.edge_count()
        )));
    }
    if *range.end() > MAX_COLORS {
        return Err(Error::argument(format!(
            "t up to {} exceeds the supported {MAX_COLORS} colors",
            range.end()
        )));
    }
    let mut rows = Vec::new();
    for t in range.clone() {
        let low = extremum(g, t, Goal::Min, &config.search)?;
        let high = extremum(g, t, Goal::Max, &config.search)?;
        rows.push(MuRow {
            t,
            mu1: low.value,
            mu2: high.value,
            exact: low.exact && high.exact,
            witness_min: low.witness,
            witness_max: high.witness,
        });
    }
    let table = MuTable { rows };
    let summary = (range == full && table.is_exact())
        .then(|| MuSummary::from_rows(&table.rows))
        .flatten();
    Ok(MuResult {
        chi_prime: chi,
        table,
        summary,
    })
}

/// The full table and the four aggregates.
pub fn mu_all(g: &Graph, config: &SolverConfig) -> Result<MuResult> {
    mu_table(g, None, config)
}

/// Tri-state answer of the interval-colorability search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "witness", rename_all = "snake_case")]
pub enum Colorability {
    Colorable(EdgeColoring),
    NotColorable,
    Indeterminate,
}

impl Colorability {
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Colorability::Colorable(_) => Some(true),
            Colorability::NotColorable => Some(false),
            Colorability::Indeterminate => None,
        }
    }
}

/// Whether some proper edge coloring gives every vertex an interval
/// spectrum. For regular graphs this holds exactly when a proper coloring
/// with `max_degree` colors exists (every vertex then sees all of
/// `1..=max_degree`), which is the fast path taken here.
pub fn is_interval_colorable(g: &Graph, config: &SolverConfig) -> Colorability {
    if g.regular_degree().is_some() {
        return match class_one_coloring(g, config.chromatic_budget) {
            Ok(Some(c)) => Colorability::Colorable(c),
            Ok(None) => Colorability::NotColorable,
            Err(_) => Colorability::Indeterminate,
        };
    }
    find_interval_coloring(g, &config.search)
}

/// Exhaustive search for an interval coloring over every `t` from the
/// maximum degree up to `|E|`, without using the chromatic index.
pub fn find_interval_coloring(g: &Graph, config: &SearchConfig) -> Colorability {
    let top = g.edge_count() as u32;
    if top > MAX_COLORS {
        return Colorability::Indeterminate;
    }
    for t in g.max_degree() as u32..=top {
        let Ok(p) = Problem::new(g, t) else {
            return Colorability::Indeterminate;
        };
        let budget = Budget::new(config.node_budget);
        let run = run_partitioned(&p, &AllInterval::default(), config, &budget);
        if let Some(colors) = run.parts.into_iter().find_map(|v| v.0) {
            return Colorability::Colorable(EdgeColoring::new(t, colors));
        }
        if run.exhausted {
            return Colorability::Indeterminate;
        }
    }
    Colorability::NotColorable
}

/// `floor((r*n - 2) / (2*(r - 1)))`, the ceiling on interval vertices in a
/// rainbow coloring of an `r`-regular graph on `n` vertices.
pub fn rainbow_bound(r: usize, n: usize) -> Result<usize> {
    if r < 2 {
        return Err(Error::argument(format!("degree r = {r} must be at least 2")));
    }
    if n < 1 {
        return Err(Error::argument("vertex count n must be at least 1"));
    }
    Ok((r * n - 2) / (2 * (r - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{f, is_proper};
    use crate::families::FamilySpec;

    fn graph(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate()
    }

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    #[test]
    fn single_values() {
        let c4 = graph("cycle:4");
        assert_eq!(mu2(&c4, 2, &cfg()).unwrap().value, 4);
        assert_eq!(mu2(&c4, 4, &cfg()).unwrap().value, 3);
        assert_eq!(mu1(&graph("cycle:3"), 3, &cfg()).unwrap().value, 2);
        assert!(matches!(mu1(&c4, 1, &cfg()), Err(Error::Argument(_))));
        assert!(matches!(mu2(&c4, 5, &cfg()), Err(Error::Argument(_))));
    }

    #[test]
    fn cycle_and_k4_summaries() {
        let s = |g: &str| mu_all(&graph(g), &cfg()).unwrap().summary.unwrap().values();
        assert_eq!(s("cycle:4"), (1, 4, 3, 4));
        assert_eq!(s("cycle:5"), (0, 2, 4, 4));
        // brute-force values over all t^6 assignments
        assert_eq!(s("complete:4"), (0, 4, 2, 4));
    }

    #[test]
    fn k4_rows_match_brute_force() {
        // (t, mu1, mu2) from filtering all t^6 assignments
        let expected = [(3, 4, 4), (4, 0, 4), (5, 0, 3), (6, 0, 2)];
        let res = mu_all(&graph("complete:4"), &cfg()).unwrap();
        assert_eq!(res.chi_prime, 3);
        let got: Vec<_> = res.table.rows.iter().map(|r| (r.t, r.mu1, r.mu2)).collect();
        assert_eq!(got, expected);
        let summary = res.summary.unwrap();
        assert_eq!(summary.attaining_t, AttainingT { mu11: 4, mu12: 3, mu21: 6, mu22: 3 });
    }

    #[test]
    fn witnesses_attain_values() {
        let g = graph("prism:3");
        let res = mu_all(&g, &cfg()).unwrap();
        for r in &res.table.rows {
            assert!(is_proper(&g, &r.witness_min).unwrap());
            assert!(is_proper(&g, &r.witness_max).unwrap());
            assert_eq!(f(&g, &r.witness_min).unwrap(), r.mu1);
            assert_eq!(f(&g, &r.witness_max).unwrap(), r.mu2);
            assert_eq!(r.witness_min.t(), r.t);
        }
    }

    #[test]
    fn workers_do_not_change_results() {
        let g = graph("complete:4");
        let one = mu_all(&g, &cfg()).unwrap();
        for workers in [2, 8] {
            assert_eq!(mu_all(&g, &cfg().with_workers(workers)).unwrap(), one);
        }
    }

    #[test]
    fn partial_range_has_no_summary() {
        let g = graph("cycle:5");
        let res = mu_table(&g, Some(4..=5), &cfg()).unwrap();
        assert_eq!(res.table.rows.len(), 2);
        assert!(res.summary.is_none());
        assert!(mu_table(&g, Some(2..=5), &cfg()).is_err());
    }

    #[test]
    fn tiny_budget_marks_rows_inexact() {
        let g = graph("complete_bipartite:3,3");
        let res = mu_all(&g, &cfg().with_node_budget(2_000)).unwrap();
        assert!(!res.table.is_exact());
        assert!(res.summary.is_none());
        for r in res.table.rows.iter().filter(|r| !r.exact) {
            // still real colorings, so still valid one-sided bounds
            assert_eq!(f(&g, &r.witness_min).unwrap(), r.mu1);
            assert_eq!(f(&g, &r.witness_max).unwrap(), r.mu2);
        }
        let err = mu2(&g, 9, &cfg().with_node_budget(2_000)).unwrap_err();
        assert!(matches!(err, Error::NodeBudget { best: Some(_), .. }));
    }

    #[test]
    fn interval_colorability() {
        let c = cfg();
        assert_eq!(is_interval_colorable(&graph("cycle:4"), &c).as_bool(), Some(true));
        assert_eq!(is_interval_colorable(&graph("cycle:5"), &c).as_bool(), Some(false));
        assert_eq!(is_interval_colorable(&graph("petersen"), &c).as_bool(), Some(false));
        for s in ["cycle:4", "cycle:5", "cycle:6", "complete:4", "complete_bipartite:2,3"] {
            let g = graph(s);
            let generic = find_interval_coloring(&g, &c.search);
            assert_eq!(generic.as_bool(), is_interval_colorable(&g, &c).as_bool(), "{s}");
            if let Colorability::Colorable(w) = generic {
                assert_eq!(f(&g, &w).unwrap(), g.vertex_count());
            }
        }
        // a star is interval colorable, a triangle is not
        let star = Graph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(is_interval_colorable(&star, &c).as_bool(), Some(true));
    }

    #[test]
    fn rainbow_bound_values() {
        assert_eq!(rainbow_bound(2, 4).unwrap(), 3);
        assert_eq!(rainbow_bound(3, 10).unwrap(), 7);
        assert_eq!(rainbow_bound(3, 4).unwrap(), 2);
        assert!(rainbow_bound(1, 5).is_err());
        assert!(rainbow_bound(3, 0).is_err());
    }

    #[test]
    fn rainbow_bound_never_exceeds_n_minus_one() {
        for r in 2..=50 {
            for n in 1..=1000 {
                assert!(rainbow_bound(r, n).unwrap() <= n - 1, "r={r} n={n}");
            }
        }
    }
}
