//! Prime vertex labelings of structured graph families.
//!
//! A *prime labeling* of a graph with `n` vertices is a bijection from the
//! vertices to `1..=n` in which the two endpoints of every edge receive
//! coprime labels. This crate:
//!
//! - builds several parameterized graph families — cycles with pendant
//!   stars, chains of cycles glued at a vertex (including Fibonacci-sized
//!   chains), prisms, and books ([`family`]);
//! - labels them with closed-form schemes that produce prime labelings
//!   directly from the parameters ([`scheme`]);
//! - verifies any labeling against the definition, reporting every violation
//!   rather than just the first ([`labeling`]);
//! - searches for prime labelings from scratch, or proves none exists, with
//!   a budgeted backtracking engine and a factorial brute-force oracle
//!   ([`search`]);
//! - scans for windows of consecutive integers with no element coprime to
//!   the rest, the arithmetic obstruction that limits consecutive-label
//!   constructions ([`pillai`]).
//!
//! The crate is `no_std` (with `alloc`) and fully deterministic: no clocks,
//! no threads, no randomness. Time-budgeted search takes its notion of
//! elapsed time from a caller-supplied [`search::Clock`].
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod family;
pub mod graph;
pub mod labeling;
pub mod num;
pub mod pillai;
pub mod scheme;
pub mod search;

pub use error::Error;
pub use family::{build_family, FamilyInstance, FamilyParams, Role};
pub use graph::Graph;
pub use labeling::{verify_labeling, CoprimalityViolation, Labeling, VerificationReport};
pub use scheme::label_family;
pub use search::{
    backtracking_search, brute_force_search, first_label_candidates, Clock, NoClock, SearchBudget,
    SearchOptions, SearchOutcome, SearchStatus,
};
