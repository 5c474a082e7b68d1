//! Wall-clock plumbing and the multi-threaded search driver.
//!
//! The core search engine is single-threaded and clock-agnostic; this module
//! supplies real elapsed time and, when asked for more than one thread,
//! splits the search into one branch per first-position label and runs the
//! branches on a small worker pool. Branches never cancel each other, so the
//! merged verdict and total node count are the same regardless of thread
//! scheduling; only wall time varies.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;
use std::time::Instant;

use prime_labeling::{
    backtracking_search, first_label_candidates, Clock, Graph, SearchBudget, SearchOptions,
    SearchOutcome, SearchStatus,
};

/// Elapsed real time since construction.
pub struct WallClock {
    start: Instant,
}

impl WallClock {
    pub fn new() -> Self {
        WallClock {
            start: Instant::now(),
        }
    }
}

impl Default for WallClock {
    fn default() -> Self {
        WallClock::new()
    }
}

impl Clock for WallClock {
    fn elapsed(&self) -> core::time::Duration {
        self.start.elapsed()
    }
}

/// Splits a node budget into `parts` shares that sum to the original, larger
/// shares first.
fn split_nodes(max_nodes: Option<u64>, parts: u64) -> Vec<Option<u64>> {
    match max_nodes {
        None => vec![None; parts as usize],
        Some(total) => {
            let base = total / parts;
            let extra = total % parts;
            (0..parts)
                .map(|b| Some(base + u64::from(b < extra)))
                .collect()
        }
    }
}

/// Runs the backtracking search on `threads` workers.
///
/// With one thread this is exactly the core engine. With more, the first
/// search position's candidate labels become independent branches sharing
/// one wall clock and splitting any node budget evenly (remainder to the
/// earliest branches); branch outcomes merge deterministically — the found
/// labeling from the lowest-numbered successful branch wins, otherwise any
/// budget overrun wins over exhaustion — and node counts are summed.
pub fn run_backtracking(
    graph: &Graph,
    budget: &SearchBudget,
    symmetry_reduction: bool,
    threads: usize,
) -> SearchOutcome {
    let clock = WallClock::new();
    if threads <= 1 {
        let options = SearchOptions {
            symmetry_reduction,
            first_labels: None,
        };
        return backtracking_search(graph, budget, &options, &clock);
    }

    let candidates = first_label_candidates(graph.vertex_count() as u64, symmetry_reduction);
    let branches = candidates.len();
    let node_shares = split_nodes(budget.max_nodes, branches as u64);
    let outcomes: Vec<OnceLock<SearchOutcome>> = (0..branches).map(|_| OnceLock::new()).collect();
    let next_branch = AtomicUsize::new(0);

    std::thread::scope(|scope| {
        for _ in 0..threads.min(branches) {
            scope.spawn(|| loop {
                let b = next_branch.fetch_add(1, Ordering::Relaxed);
                if b >= branches {
                    break;
                }
                let branch_budget = SearchBudget {
                    max_nodes: node_shares[b],
                    max_time: budget.max_time,
                };
                let options = SearchOptions {
                    symmetry_reduction: false,
                    first_labels: Some(vec![candidates[b]]),
                };
                let outcome = backtracking_search(graph, &branch_budget, &options, &clock);
                outcomes[b].set(outcome).expect("branch ran twice");
            });
        }
    });

    let mut nodes = 0;
    let mut found = None;
    let mut budget_hit = false;
    for cell in &outcomes {
        let outcome = cell.get().expect("branch never ran");
        nodes += outcome.nodes_explored;
        match &outcome.status {
            SearchStatus::Found(labeling) => {
                if found.is_none() {
                    found = Some(labeling.clone());
                }
            }
            SearchStatus::BudgetExceeded => budget_hit = true,
            SearchStatus::Exhausted => {}
        }
    }
    let status = match found {
        Some(labeling) => SearchStatus::Found(labeling),
        None if budget_hit => SearchStatus::BudgetExceeded,
        None => SearchStatus::Exhausted,
    };
    SearchOutcome {
        status,
        nodes_explored: nodes,
        elapsed: clock.elapsed(),
    }
}
