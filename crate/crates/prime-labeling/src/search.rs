//! Exhaustive search for prime labelings, independent of the closed-form
//! schemes.
//!
//! Two engines are provided. [`backtracking_search`] assigns labels to
//! vertices in a fixed degree-descending order and prunes any partial
//! assignment that puts non-coprime labels on an edge; it either finds a
//! labeling, proves none exists, or stops at a configurable budget.
//! [`brute_force_search`] enumerates *all* `|V|!` label permutations with no
//! pruning at all, so it is usable only on tiny graphs but serves as an
//! oracle for the backtracking engine.
//!
//! The crate has no clock of its own; callers supply elapsed time through
//! the [`Clock`] trait (use [`NoClock`] when no time budget is set).

use alloc::format;
use alloc::vec::Vec;
use core::time::Duration;

use crate::error::Error;
use crate::graph::Graph;
use crate::labeling::Labeling;
use crate::num::{gcd, is_prime};

/// Source of elapsed wall time for time budgets.
pub trait Clock {
    /// Time elapsed since the start of the search.
    fn elapsed(&self) -> Duration;
}

/// A clock that never advances; time budgets are effectively infinite.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoClock;

impl Clock for NoClock {
    fn elapsed(&self) -> Duration {
        Duration::ZERO
    }
}

/// Limits on how much work a search may do before giving up.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchBudget {
    /// Stop after this many label-placement attempts.
    pub max_nodes: Option<u64>,
    /// Stop once the [`Clock`] reports at least this much elapsed time.
    /// Checked every 4096 placement attempts.
    pub max_time: Option<Duration>,
}

impl SearchBudget {
    /// No limits: the search runs until it finds a labeling or proves there
    /// is none.
    pub fn unbounded() -> Self {
        SearchBudget::default()
    }
}

/// Knobs controlling the backtracking search.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchOptions {
    /// Try only one representative of the interchangeable labels at the
    /// first search position. Label 1 and every prime `p` with `2p > |V|`
    /// divide no other label in `1..=|V|` (besides themselves), so they are
    /// coprime to everything and any two of them can be swapped in a prime
    /// labeling. Sound for existence questions; found labelings are still
    /// valid, but not every labeling remains reachable.
    pub symmetry_reduction: bool,
    /// Restrict the labels tried at the first search position. Lets a caller
    /// split the search space into disjoint branches (one per first label)
    /// and run them independently. Labels outside `1..=|V|` are ignored.
    pub first_labels: Option<Vec<u64>>,
}

/// How a search ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchStatus {
    /// A prime labeling was found.
    Found(Labeling),
    /// The whole space was searched; no prime labeling exists (within the
    /// configured first-label restriction, if any).
    Exhausted,
    /// The node or time budget ran out before the search could decide.
    BudgetExceeded,
}

/// Result of a search run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    /// How the search ended.
    pub status: SearchStatus,
    /// Number of label-placement attempts (backtracking) or permutations
    /// examined (brute force).
    pub nodes_explored: u64,
    /// Elapsed time reported by the supplied clock when the search ended.
    pub elapsed: Duration,
}

/// A label that is coprime to every label in `1..=n`: the label 1, or a
/// prime whose smallest proper multiple already exceeds `n`.
fn is_universal(label: u64, n: u64) -> bool {
    label == 1 || (2 * label > n && is_prime(label))
}

/// Labels the search tries at its first position when no explicit
/// [`SearchOptions::first_labels`] restriction is given, in the order they
/// are tried. Callers that split the search across workers can hand each
/// worker a disjoint slice of this list.
pub fn first_label_candidates(n: u64, symmetry_reduction: bool) -> Vec<u64> {
    if symmetry_reduction {
        (1..=n).filter(|&l| l == 1 || !is_universal(l, n)).collect()
    } else {
        (1..=n).collect()
    }
}

enum Step {
    Found,
    Exhausted,
    Budget,
}

struct Backtracker<'a> {
    graph: &'a Graph,
    budget: &'a SearchBudget,
    clock: &'a dyn Clock,
    /// Search positions in fixed order: vertices sorted by descending degree,
    /// ties by ascending id. High-degree vertices carry the most constraints,
    /// so placing them first fails fast.
    order: Vec<u32>,
    /// Labels tried at position 0; positions further down always try 1..=n.
    first_candidates: Vec<u64>,
    /// Current partial assignment by vertex id; 0 means unassigned.
    labels: Vec<u64>,
    /// used[l] is true while label l is assigned somewhere.
    used: Vec<bool>,
    nodes: u64,
}

impl Backtracker<'_> {
    fn compatible(&self, v: u32, label: u64) -> bool {
        self.graph
            .neighbors(v)
            .iter()
            .all(|&u| match self.labels[u as usize] {
                0 => true,
                assigned => gcd(assigned, label) == 1,
            })
    }

    /// Accounts for one placement attempt; false when a budget line is hit.
    fn charge(&mut self) -> bool {
        if let Some(max) = self.budget.max_nodes {
            if self.nodes >= max {
                return false;
            }
        }
        self.nodes += 1;
        if let Some(max) = self.budget.max_time {
            if self.nodes.is_multiple_of(4096) && self.clock.elapsed() >= max {
                return false;
            }
        }
        true
    }

    fn place(&mut self, pos: usize) -> Step {
        if pos == self.order.len() {
            return Step::Found;
        }
        let v = self.order[pos];
        let n = self.labels.len() as u64;
        let upper = if pos == 0 {
            self.first_candidates.len() as u64
        } else {
            n
        };
        for idx in 0..upper {
            let label = if pos == 0 {
                self.first_candidates[idx as usize]
            } else {
                idx + 1
            };
            if self.used[label as usize] {
                continue;
            }
            if !self.charge() {
                return Step::Budget;
            }
            if !self.compatible(v, label) {
                continue;
            }
            self.labels[v as usize] = label;
            self.used[label as usize] = true;
            let step = self.place(pos + 1);
            match step {
                Step::Found => return Step::Found,
                Step::Budget => {
                    self.labels[v as usize] = 0;
                    self.used[label as usize] = false;
                    return Step::Budget;
                }
                Step::Exhausted => {
                    self.labels[v as usize] = 0;
                    self.used[label as usize] = false;
                }
            }
        }
        Step::Exhausted
    }
}

/// Searches for a prime labeling by backtracking over label placements.
///
/// The engine is deterministic: the same graph, budget, and options always
/// explore the same node sequence, and enlarging a budget never changes the
/// prefix explored. A [`SearchStatus::BudgetExceeded`] outcome is reported
/// as such and never misreported as exhaustion.
pub fn backtracking_search(
    graph: &Graph,
    budget: &SearchBudget,
    options: &SearchOptions,
    clock: &dyn Clock,
) -> SearchOutcome {
    let n = graph.vertex_count();
    let mut order: Vec<u32> = (0..n).collect();
    order.sort_by_key(|&v| (core::cmp::Reverse(graph.degree(v)), v));

    let n64 = n as u64;
    let first_candidates: Vec<u64> = match &options.first_labels {
        Some(allowed) => {
            let mut c: Vec<u64> = allowed
                .iter()
                .copied()
                .filter(|&l| (1..=n64).contains(&l))
                .collect();
            c.sort_unstable();
            c.dedup();
            c
        }
        None => first_label_candidates(n64, options.symmetry_reduction),
    };

    let mut bt = Backtracker {
        graph,
        budget,
        clock,
        order,
        first_candidates,
        labels: alloc::vec![0; n as usize],
        used: alloc::vec![false; n as usize + 1],
        nodes: 0,
    };
    let status = match bt.place(0) {
        Step::Found => SearchStatus::Found(Labeling::new(bt.labels.clone())),
        Step::Exhausted => SearchStatus::Exhausted,
        Step::Budget => SearchStatus::BudgetExceeded,
    };
    SearchOutcome {
        status,
        nodes_explored: bt.nodes,
        elapsed: clock.elapsed(),
    }
}

/// Advances `perm` to its lexicographic successor; false once `perm` is the
/// final (descending) permutation.
fn next_permutation(perm: &mut [u64]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Upper bound on vertex count for [`brute_force_search`]; 10! permutations
/// is the largest enumeration that stays in oracle territory.
pub const BRUTE_FORCE_MAX_VERTICES: u32 = 10;

/// Tries every one of the `|V|!` label permutations in lexicographic order,
/// with no pruning and no shared machinery with [`backtracking_search`].
///
/// Only graphs with at most [`BRUTE_FORCE_MAX_VERTICES`] vertices are
/// accepted. `nodes_explored` counts permutations examined.
pub fn brute_force_search(graph: &Graph, clock: &dyn Clock) -> Result<SearchOutcome, Error> {
    let n = graph.vertex_count();
    if n > BRUTE_FORCE_MAX_VERTICES {
        return Err(Error::invalid(format!(
            "brute force is capped at {BRUTE_FORCE_MAX_VERTICES} vertices; got {n}"
        )));
    }
    let mut perm: Vec<u64> = (1..=n as u64).collect();
    let mut nodes = 0u64;
    loop {
        nodes += 1;
        let ok = graph
            .edges()
            .iter()
            .all(|&(u, v)| gcd(perm[u as usize], perm[v as usize]) == 1);
        if ok {
            return Ok(SearchOutcome {
                status: SearchStatus::Found(Labeling::new(perm)),
                nodes_explored: nodes,
                elapsed: clock.elapsed(),
            });
        }
        if !next_permutation(&mut perm) {
            return Ok(SearchOutcome {
                status: SearchStatus::Exhausted,
                nodes_explored: nodes,
                elapsed: clock.elapsed(),
            });
        }
    }
}
