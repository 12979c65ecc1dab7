//! Backtracking over proper surjective edge `t`-colorings.
//!
//! Edges are colored in a fixed connected order (see
//! [`connected_edge_order`]); colors are tried in ascending order, so
//! colorings are produced in lexicographic order of their color sequence
//! along that edge order. The tree can be cut at a fixed depth into
//! partitions, explored independently and merged in partition order, which
//! makes every merged result independent of the worker count.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;

use super::chromatic::{chromatic_index, DEFAULT_CHROMATIC_BUDGET};
use super::spectrum::{SpectrumState, VertexStatus, MAX_COLORS};
use super::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    /// Upper limit on color assignments per search.
    pub node_budget: u64,
    pub workers: usize,
    /// Depth at which the search tree is cut into partitions.
    pub split_depth: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: 100_000_000,
            workers: 1,
            split_depth: 3,
        }
    }
}

/// Orders edges so that each edge after the first touches an earlier one.
/// The next edge is the one with most already-ordered neighbours, then most
/// neighbours overall, then lowest index.
pub fn connected_edge_order(g: &Graph) -> Vec<usize> {
    let m = g.edge_count();
    let weight: Vec<usize> = (0..m).map(|e| g.adjacent_edges(e).count()).collect();
    let mut placed = vec![false; m];
    let mut saturation = vec![0usize; m];
    let mut order = Vec::with_capacity(m);
    let mut next = (0..m).max_by_key(|&e| (weight[e], std::cmp::Reverse(e)));
    while let Some(e) = next {
        placed[e] = true;
        order.push(e);
        for f in g.adjacent_edges(e) {
            saturation[f] += 1;
        }
        next = (0..m)
            .filter(|&f| !placed[f] && saturation[f] > 0)
            .max_by_key(|&f| (saturation[f], weight[f], std::cmp::Reverse(f)));
    }
    debug_assert_eq!(order.len(), m, "graph is connected");
    order
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Flow {
    Continue,
    /// Result of this partition is final; later partitions are irrelevant.
    Stop,
    /// Budget exhausted or partition cancelled.
    Abort,
}

/// Counters available to pruning rules.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Bounds {
    /// Completed vertices with interval spectrum.
    pub interval: usize,
    /// Vertices that cannot end with an interval spectrum.
    pub never: usize,
}

pub(crate) trait Visitor {
    fn prune(&self, _bounds: Bounds) -> bool {
        false
    }

    /// Called on every complete coloring; `colors` is indexed by edge and
    /// `f` is the number of interval vertices.
    fn leaf(&mut self, colors: &[u32], f: usize) -> Flow;
}

pub(crate) struct Budget {
    limit: u64,
    used: AtomicU64,
    exhausted: AtomicBool,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            used: AtomicU64::new(0),
            exhausted: AtomicBool::new(false),
        }
    }

    fn charge(&self, nodes: u64) -> bool {
        let total = self.used.fetch_add(nodes, Ordering::Relaxed) + nodes;
        if total > self.limit {
            self.exhausted.store(true, Ordering::Relaxed);
        }
        !self.exhausted.load(Ordering::Relaxed)
    }

    pub fn exhausted(&self) -> bool {
        self.exhausted.load(Ordering::Relaxed)
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }
}

/// A fixed `(graph, t)` search problem.
pub(crate) struct Problem<'g> {
    g: &'g Graph,
    t: u32,
    order: Vec<usize>,
}

impl<'g> Problem<'g> {
    pub fn new(g: &'g Graph, t: u32) -> Result<Self> {
        if t == 0 || t > MAX_COLORS {
            return Err(Error::argument(format!(
                "color count {t} outside the supported range 1..={MAX_COLORS}"
            )));
        }
        Ok(Problem {
            g,
            t,
            order: connected_edge_order(g),
        })
    }
}

const FLUSH_EVERY: u64 = 1 << 12;

struct Cancel<'a> {
    stop_at: &'a AtomicUsize,
    index: usize,
}

struct Walker<'a, 'g> {
    p: &'a Problem<'g>,
    colors: Vec<u32>,
    spectra: SpectrumState,
    color_use: Vec<u32>,
    unused: u32,
    interval: usize,
    never: usize,
    descending: bool,
    budget: &'a Budget,
    pending: u64,
    cancel: Option<Cancel<'a>>,
}

impl<'a, 'g> Walker<'a, 'g> {
    fn new(p: &'a Problem<'g>, budget: &'a Budget, descending: bool) -> Self {
        Walker {
            p,
            colors: vec![0; p.g.edge_count()],
            spectra: SpectrumState::new(p.g),
            color_use: vec![0; p.t as usize + 1],
            unused: p.t,
            interval: 0,
            never: 0,
            descending,
            budget,
            pending: 0,
            cancel: None,
        }
    }

    fn bounds(&self) -> Bounds {
        Bounds {
            interval: self.interval,
            never: self.never,
        }
    }

    #[inline]
    fn account(&mut self, status: VertexStatus, delta: isize) {
        match status {
            VertexStatus::Interval => self.interval = self.interval.wrapping_add_signed(delta),
            VertexStatus::Never => self.never = self.never.wrapping_add_signed(delta),
            VertexStatus::Open => {}
        }
    }

    #[inline]
    fn assign(&mut self, e: usize, c: u32) {
        let (u, v) = self.p.g.endpoints(e);
        for x in [u, v] {
            let before = self.spectra.status(x);
            self.spectra.add(x, c);
            let after = self.spectra.status(x);
            self.account(before, -1);
            self.account(after, 1);
        }
        self.colors[e] = c;
        let uses = &mut self.color_use[c as usize];
        *uses += 1;
        if *uses == 1 {
            self.unused -= 1;
        }
    }

    #[inline]
    fn unassign(&mut self, e: usize, c: u32) {
        let (u, v) = self.p.g.endpoints(e);
        for x in [u, v] {
            let before = self.spectra.status(x);
            self.spectra.remove(x, c);
            let after = self.spectra.status(x);
            self.account(before, -1);
            self.account(after, 1);
        }
        self.colors[e] = 0;
        let uses = &mut self.color_use[c as usize];
        *uses -= 1;
        if *uses == 0 {
            self.unused += 1;
        }
    }

    #[inline]
    fn tick(&mut self) -> bool {
        self.pending += 1;
        if self.pending < FLUSH_EVERY {
            return true;
        }
        self.flush()
    }

    fn flush(&mut self) -> bool {
        let ok = self.budget.charge(self.pending);
        self.pending = 0;
        let cancelled = self
            .cancel
            .as_ref()
            .is_some_and(|c| c.stop_at.load(Ordering::Relaxed) < c.index);
        ok && !cancelled
    }

    /// Explores all completions of the first `depth` edges of the order,
    /// calling `visitor.leaf` once `stop` edges are colored.
    fn dfs<V: Visitor>(&mut self, depth: usize, stop: usize, visitor: &mut V) -> Flow {
        if depth == stop {
            return visitor.leaf(&self.colors, self.interval);
        }
        let m = self.p.order.len();
        let e = self.p.order[depth];
        let (u, v) = self.p.g.endpoints(e);
        let forbidden = self.spectra.mask(u) | self.spectra.mask(v);
        // With as many edges left as unused colors, every edge needs a new color.
        let must_be_new = (m - depth) as u32 == self.unused;
        let remaining = (m - depth - 1) as u32;
        let t = self.p.t;
        for i in 0..t {
            let c = if self.descending { t - i } else { i + 1 };
            if forbidden & (1u64 << (c - 1)) != 0 || (must_be_new && self.color_use[c as usize] > 0) {
                continue;
            }
            self.assign(e, c);
            if !self.tick() {
                self.unassign(e, c);
                return Flow::Abort;
            }
            let flow = if remaining >= self.unused && !visitor.prune(self.bounds()) {
                self.dfs(depth + 1, stop, visitor)
            } else {
                Flow::Continue
            };
            self.unassign(e, c);
            if flow != Flow::Continue {
                return flow;
            }
        }
        Flow::Continue
    }

    /// Colors the first `prefix.len()` edges of the order as given.
    /// Returns false if the prefix violates properness.
    fn replay(&mut self, prefix: &[u32]) -> bool {
        for (depth, &c) in prefix.iter().enumerate() {
            let e = self.p.order[depth];
            let (u, v) = self.p.g.endpoints(e);
            if self.spectra.contains(u, c) || self.spectra.contains(v, c) {
                return false;
            }
            self.assign(e, c);
        }
        true
    }

    fn finish(&mut self) -> bool {
        self.flush()
    }
}

/// Runs a single unpartitioned search from the root.
pub(crate) fn run_sequential<V: Visitor>(
    p: &Problem<'_>,
    visitor: &mut V,
    budget: &Budget,
    descending: bool,
) -> Flow {
    let mut w = Walker::new(p, budget, descending);
    let flow = w.dfs(0, p.order.len(), visitor);
    if !w.finish() {
        return Flow::Abort;
    }
    flow
}

struct PrefixCollector<'a> {
    order: &'a [usize],
    depth: usize,
    out: Vec<Vec<u32>>,
}

impl Visitor for PrefixCollector<'_> {
    fn leaf(&mut self, colors: &[u32], _f: usize) -> Flow {
        self.out
            .push(self.order[..self.depth].iter().map(|&e| colors[e]).collect());
        Flow::Continue
    }
}

/// Outcome of a partitioned run: visitor states of the partitions that
/// matter, in partition order.
pub(crate) struct Partitioned<V> {
    pub parts: Vec<V>,
    pub exhausted: bool,
    pub nodes: u64,
}

/// Cuts the tree at `config.split_depth` and explores every partition with
/// a clone of `template`. Partitions after the first one returning
/// [`Flow::Stop`] are dropped.
pub(crate) fn run_partitioned<V>(
    p: &Problem<'_>,
    template: &V,
    config: &SearchConfig,
    budget: &Budget,
) -> Partitioned<V>
where
    V: Visitor + Clone + Send + Sync,
{
    let depth = config.split_depth.min(p.order.len());
    let mut collector = PrefixCollector {
        order: &p.order,
        depth,
        out: Vec::new(),
    };
    if run_walker_to(p, budget, depth, &mut collector) == Flow::Abort {
        return Partitioned {
            parts: Vec::new(),
            exhausted: true,
            nodes: budget.used(),
        };
    }
    let prefixes = collector.out;
    let stop_at = AtomicUsize::new(usize::MAX);

    let explore = |index: usize, prefix: &Vec<u32>| -> Option<V> {
        if stop_at.load(Ordering::Relaxed) < index || budget.exhausted() {
            return None;
        }
        let mut visitor = template.clone();
        let mut w = Walker::new(p, budget, false);
        w.cancel = Some(Cancel {
            stop_at: &stop_at,
            index,
        });
        let replayed = w.replay(prefix);
        debug_assert!(replayed);
        let flow = if visitor.prune(w.bounds()) {
            Flow::Continue
        } else {
            w.dfs(depth, p.order.len(), &mut visitor)
        };
        w.finish();
        match flow {
            Flow::Stop => {
                stop_at.fetch_min(index, Ordering::Relaxed);
                Some(visitor)
            }
            Flow::Continue => Some(visitor),
            Flow::Abort => None,
        }
    };

    let results: Vec<Option<V>> = if config.workers <= 1 {
        let mut out = Vec::with_capacity(prefixes.len());
        for (i, prefix) in prefixes.iter().enumerate() {
            out.push(explore(i, prefix));
            if stop_at.load(Ordering::Relaxed) <= i || budget.exhausted() {
                break;
            }
        }
        out
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.workers)
            .build()
            .expect("thread pool");
        pool.install(|| {
            prefixes
                .par_iter()
                .enumerate()
                .map(|(i, prefix)| explore(i, prefix))
                .collect()
        })
    };

    let last = stop_at.load(Ordering::Relaxed);
    let exhausted = budget.exhausted();
    let parts = results
        .into_iter()
        .take(last.saturating_add(1))
        .flatten()
        .collect();
    Partitioned {
        parts,
        exhausted,
        nodes: budget.used(),
    }
}

fn run_walker_to<V: Visitor>(p: &Problem<'_>, budget: &Budget, stop: usize, visitor: &mut V) -> Flow {
    let mut w = Walker::new(p, budget, false);
    let flow = w.dfs(0, stop, visitor);
    if !w.finish() {
        return Flow::Abort;
    }
    flow
}

fn check_t_range(g: &Graph, t: u32) -> Result<()> {
    let m = g.edge_count();
    if t as usize > m {
        return Err(Error::argument(format!("t = {t} exceeds the edge count {m}")));
    }
    let chi = chromatic_index(g, DEFAULT_CHROMATIC_BUDGET)?;
    if (t as usize) < chi {
        return Err(Error::argument(format!("t = {t} is below the chromatic index {chi}")));
    }
    Ok(())
}

struct Sequential<F> {
    visit: F,
    buffer: EdgeColoring,
    count: u64,
}

impl<F: FnMut(&EdgeColoring)> Visitor for Sequential<F> {
    fn leaf(&mut self, colors: &[u32], _f: usize) -> Flow {
        self.buffer.colors.copy_from_slice(colors);
        (self.visit)(&self.buffer);
        self.count += 1;
        Flow::Continue
    }
}

/// Visits every proper edge `t`-coloring of `g` once, in deterministic
/// order, and returns how many there were. Requires
/// `chromatic_index(g) <= t <= |E|`.
pub fn enumerate<F: FnMut(&EdgeColoring)>(g: &Graph, t: u32, visitor: F) -> Result<u64> {
    check_t_range(g, t)?;
    let p = Problem::new(g, t)?;
    let budget = Budget::new(u64::MAX);
    let mut v = Sequential {
        visit: visitor,
        buffer: EdgeColoring::new(t, vec![0; g.edge_count()]),
        count: 0,
    };
    run_sequential(&p, &mut v, &budget, false);
    Ok(v.count)
}

struct Shared<'f, F> {
    visit: &'f F,
    t: u32,
    count: u64,
}

impl<F> Clone for Shared<'_, F> {
    fn clone(&self) -> Self {
        Shared {
            visit: self.visit,
            t: self.t,
            count: 0,
        }
    }
}

impl<F: Fn(&EdgeColoring, usize) + Sync> Visitor for Shared<'_, F> {
    fn leaf(&mut self, colors: &[u32], f: usize) -> Flow {
        (self.visit)(&EdgeColoring::new(self.t, colors.to_vec()), f);
        self.count += 1;
        Flow::Continue
    }
}

/// Partitioned variant of [`enumerate`]. The visitor also receives the
/// incrementally maintained interval-vertex count and may be called from
/// several threads at once.
pub fn enumerate_par<F>(g: &Graph, t: u32, config: &SearchConfig, visitor: F) -> Result<u64>
where
    F: Fn(&EdgeColoring, usize) + Sync,
{
    check_t_range(g, t)?;
    let p = Problem::new(g, t)?;
    let budget = Budget::new(config.node_budget);
    let template = Shared {
        visit: &visitor,
        t,
        count: 0,
    };
    let out = run_partitioned(&p, &template, config, &budget);
    if out.exhausted {
        return Err(Error::NodeBudget {
            budget: config.node_budget,
            best: None,
        });
    }
    Ok(out.parts.iter().map(|s| s.count).sum())
}
