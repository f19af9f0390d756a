//! Exact edge irregularity strength by backtracking search.
//!
//! Vertices are labeled one at a time: path nodes by index (hub first), then
//! leaves. Each new label must give every edge back to an already-labeled
//! neighbor a weight not used so far. Two further cuts keep the search small:
//!
//! * vertices with identical neighborhoods (the leaves of a star part) are
//!   interchangeable, so their labels are forced to be non-decreasing in
//!   search order; as they share a neighbor they are in fact strictly
//!   increasing, which bounds how low the last of them may start;
//! * the edges still to be weighted must fit into the weights in `[2, 2k]`
//!   that are still free.
//!
//! Iteration orders are fixed, so the outcome and witness only depend on the
//! graph, `k`, and the budget.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::time::Duration;

use crate::graph::{Graph, VertexId};
use crate::labeling::{lower_bound, Labeling};
use crate::Result;

/// Limits on a search. `None` means unlimited.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: Option<u64>,
    /// Only enforced when the solver has a [`Clock`].
    pub max_time: Option<Duration>,
    /// Largest `k` that [`es_exact`] will try.
    pub max_k: Option<u32>,
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        SearchBudget {
            max_nodes: Some(max_nodes),
            ..Self::default()
        }
    }
}

/// Monotonic time source for wall-clock budgets.
pub trait Clock {
    fn elapsed(&self) -> Duration;
}

/// A clock that never advances; time budgets never trip.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoClock;

impl Clock for NoClock {
    fn elapsed(&self) -> Duration {
        Duration::ZERO
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Witness(Labeling),
    /// The whole search space for this `k` was exhausted.
    Infeasible,
    /// The budget ran out first.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub feasibility: Feasibility,
    pub nodes: u64,
    /// Set when infeasibility came from the lower bound without any search.
    pub by_bound: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EsStatus {
    Exact {
        k: u32,
        witness: Labeling,
    },
    /// Every `k` up to the budget's `max_k` is infeasible.
    InfeasibleAt {
        k: u32,
    },
    /// Budget exhausted while deciding `k`.
    Unknown {
        k: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AttemptOutcome {
    Feasible,
    Infeasible,
    Unknown,
}

/// One step of the upward search over `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KAttempt {
    pub k: u32,
    pub outcome: AttemptOutcome,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EsResult {
    pub status: EsStatus,
    pub lower_bound: u32,
    pub nodes_explored: u64,
    /// Inclusive range of `k` values that were decided or attempted.
    pub k_range_checked: (u32, u32),
    pub attempts: Vec<KAttempt>,
}

impl EsResult {
    pub fn exact_k(&self) -> Option<u32> {
        match self.status {
            EsStatus::Exact { k, .. } => Some(k),
            _ => None,
        }
    }
}

/// True when `k` is below the general lower bound, so no search is needed.
pub fn es_pigeonhole_check(g: &Graph, k: u32) -> bool {
    lower_bound(g).is_ok_and(|b| k < b.lower_bound)
}

/// [`Solver::exists_labeling`] without a clock.
pub fn exists_labeling(g: &Graph, k: u32, budget: SearchBudget) -> SearchOutcome {
    Solver::new(budget).exists_labeling(g, k)
}

/// [`Solver::es_exact`] without a clock.
pub fn es_exact(g: &Graph, budget: SearchBudget) -> Result<EsResult> {
    Solver::new(budget).es_exact(g)
}

pub struct Solver<'c> {
    budget: SearchBudget,
    clock: &'c dyn Clock,
    bound_shortcut: bool,
}

impl Solver<'static> {
    pub fn new(budget: SearchBudget) -> Self {
        Solver {
            budget,
            clock: &NoClock,
            bound_shortcut: true,
        }
    }
}

impl<'c> Solver<'c> {
    pub fn with_clock<'d>(self, clock: &'d dyn Clock) -> Solver<'d> {
        Solver {
            budget: self.budget,
            clock,
            bound_shortcut: self.bound_shortcut,
        }
    }

    /// When off, `k` below the lower bound is refuted by search rather than
    /// by [`es_pigeonhole_check`].
    pub fn bound_shortcut(mut self, on: bool) -> Self {
        self.bound_shortcut = on;
        self
    }

    /// Searches for an edge irregular `k`-labeling of `g`.
    pub fn exists_labeling(&self, g: &Graph, k: u32) -> SearchOutcome {
        let mut limits = Limits::start(self.budget, self.clock);
        self.decide(g, k, &mut limits)
    }

    fn decide(&self, g: &Graph, k: u32, limits: &mut Limits<'_>) -> SearchOutcome {
        if self.bound_shortcut && es_pigeonhole_check(g, k) {
            return SearchOutcome {
                feasibility: Feasibility::Infeasible,
                nodes: 0,
                by_bound: true,
            };
        }
        let before = limits.nodes;
        let mut search = Search::new(g, k);
        let feasibility = match search.run(limits) {
            Step::Found => Feasibility::Witness(search.witness(g, k)),
            Step::Exhausted => Feasibility::Infeasible,
            Step::Aborted => Feasibility::Unknown,
        };
        SearchOutcome {
            feasibility,
            nodes: limits.nodes - before,
            by_bound: false,
        }
    }

    /// Tries `k = lower_bound, lower_bound + 1, ...` until a witness turns up.
    /// The budget is shared by all attempts.
    pub fn es_exact(&self, g: &Graph) -> Result<EsResult> {
        let lb = lower_bound(g)?.lower_bound;
        let mut limits = Limits::start(self.budget, self.clock);
        let mut attempts = Vec::new();
        let mut k = lb;
        let status = loop {
            if self.budget.max_k.is_some_and(|max| k > max) {
                break EsStatus::InfeasibleAt { k: k - 1 };
            }
            let outcome = self.decide(g, k, &mut limits);
            let (attempt, status) = match outcome.feasibility {
                Feasibility::Witness(witness) => (
                    AttemptOutcome::Feasible,
                    Some(EsStatus::Exact { k, witness }),
                ),
                Feasibility::Infeasible => (AttemptOutcome::Infeasible, None),
                Feasibility::Unknown => (AttemptOutcome::Unknown, Some(EsStatus::Unknown { k })),
            };
            attempts.push(KAttempt {
                k,
                outcome: attempt,
                nodes: outcome.nodes,
            });
            if let Some(status) = status {
                break status;
            }
            k += 1;
        };
        let hi = attempts.last().map_or(lb, |a| a.k);
        Ok(EsResult {
            status,
            lower_bound: lb,
            nodes_explored: limits.nodes,
            k_range_checked: (lb.min(hi), hi),
            attempts,
        })
    }
}

struct Limits<'c> {
    budget: SearchBudget,
    clock: &'c dyn Clock,
    started: Duration,
    nodes: u64,
}

impl<'c> Limits<'c> {
    fn start(budget: SearchBudget, clock: &'c dyn Clock) -> Self {
        Limits {
            budget,
            clock,
            started: clock.elapsed(),
            nodes: 0,
        }
    }

    /// Counts one node; false once the budget is spent.
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.budget.max_nodes.is_some_and(|max| self.nodes > max) {
            return false;
        }
        if let Some(max) = self.budget.max_time {
            if self.nodes.is_multiple_of(1024)
                && self.clock.elapsed().saturating_sub(self.started) > max
            {
                return false;
            }
        }
        true
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    Found,
    Exhausted,
    Aborted,
}

struct Search {
    k: u32,
    /// Search position -> vertex.
    order: Vec<VertexId>,
    /// Positions of neighbors labeled earlier.
    back: Vec<Vec<usize>>,
    /// Position of the previous interchangeable vertex, if any.
    twin_prev: Vec<Option<usize>>,
    /// How many interchangeable vertices come later in the order.
    twins_after: Vec<u32>,
    /// Edges with an endpoint after this position.
    edges_after: Vec<usize>,
    labels: Vec<u32>,
    used: Vec<bool>,
    free: usize,
}

impl Search {
    fn new(g: &Graph, k: u32) -> Self {
        let mut order: Vec<VertexId> = g.vertices().to_vec();
        order.sort_by_key(|&v| match v {
            VertexId::PathNode(j) => (0, j),
            VertexId::Leaf(i) => (1, i),
        });
        let pos_of = |v: VertexId| order.iter().position(|&u| u == v).unwrap();
        let n = order.len();

        let mut back = vec![Vec::new(); n];
        let mut neighborhoods = vec![BTreeSet::new(); n];
        let mut last_endpoint = Vec::with_capacity(g.edges().len());
        for e in g.edges() {
            let (a, b) = (pos_of(e.0), pos_of(e.1));
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            back[hi].push(lo);
            neighborhoods[a].insert(b);
            neighborhoods[b].insert(a);
            last_endpoint.push(hi);
        }
        let edges_after = (0..n)
            .map(|p| last_endpoint.iter().filter(|&&hi| hi > p).count())
            .collect();

        let mut twin_prev = vec![None; n];
        let mut twins_after = vec![0; n];
        for p in 0..n {
            if neighborhoods[p].is_empty() {
                continue;
            }
            twin_prev[p] = (0..p).rev().find(|&q| neighborhoods[q] == neighborhoods[p]);
            twins_after[p] = (p + 1..n)
                .filter(|&q| neighborhoods[q] == neighborhoods[p])
                .count() as u32;
        }

        let slots = 2 * k as usize + 1;
        Search {
            k,
            order,
            back,
            twin_prev,
            twins_after,
            edges_after,
            labels: vec![0; n],
            used: vec![false; slots],
            free: slots.saturating_sub(2),
        }
    }

    fn run(&mut self, limits: &mut Limits<'_>) -> Step {
        if self.k == 0 {
            return if self.order.is_empty() {
                Step::Found
            } else {
                Step::Exhausted
            };
        }
        if self.edges_after.first().is_some_and(|&m| m > self.free) {
            return Step::Exhausted;
        }
        self.dfs(0, limits)
    }

    fn dfs(&mut self, pos: usize, limits: &mut Limits<'_>) -> Step {
        if pos == self.order.len() {
            return Step::Found;
        }
        if !limits.tick() {
            return Step::Aborted;
        }
        let lo = self.twin_prev[pos].map_or(1, |q| self.labels[q]);
        // Later twins need larger labels still.
        let hi = self.k.saturating_sub(self.twins_after[pos]);
        let mut weights = Vec::with_capacity(self.back[pos].len());
        for a in lo..=hi {
            weights.clear();
            let mut ok = true;
            for &q in &self.back[pos] {
                let w = (a + self.labels[q]) as usize;
                if self.used[w] || weights.contains(&w) {
                    ok = false;
                    break;
                }
                weights.push(w);
            }
            if !ok || self.edges_after[pos] > self.free - weights.len() {
                continue;
            }
            for &w in &weights {
                self.used[w] = true;
            }
            self.free -= weights.len();
            self.labels[pos] = a;
            let step = self.dfs(pos + 1, limits);
            for &w in &weights {
                self.used[w] = false;
            }
            self.free += weights.len();
            if step != Step::Exhausted {
                return step;
            }
        }
        Step::Exhausted
    }

    fn witness(&self, g: &Graph, k: u32) -> Labeling {
        debug_assert_eq!(self.order.len(), g.vertices().len());
        Labeling::from_pairs(
            k,
            self.order.iter().copied().zip(self.labels.iter().copied()),
        )
    }
}
