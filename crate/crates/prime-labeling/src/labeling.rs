//! Vertex labelings and the prime-labeling verifier.

use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::Graph;
use crate::num::gcd;

/// A total assignment of one integer label per vertex, indexed by vertex id.
///
/// A labeling is *prime* for a graph on `n` vertices when it is a bijection
/// onto `1..=n` and the labels of every pair of adjacent vertices are
/// coprime. `Labeling` itself enforces nothing — candidates that violate any
/// of those conditions are exactly what [`verify_labeling`] reports on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    labels: Vec<u64>,
}

impl Labeling {
    /// Wraps a vector of labels; entry `v` is the label of vertex `v`.
    pub fn new(labels: Vec<u64>) -> Self {
        Labeling { labels }
    }

    /// Label of vertex `v`.
    pub fn label(&self, v: u32) -> u64 {
        self.labels[v as usize]
    }

    /// Number of labeled vertices.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Whether the labeling covers no vertices.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// All labels, indexed by vertex id.
    pub fn as_slice(&self) -> &[u64] {
        &self.labels
    }

    /// Consumes the labeling, returning the underlying vector.
    pub fn into_vec(self) -> Vec<u64> {
        self.labels
    }
}

/// An adjacent pair whose labels share a factor greater than 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoprimalityViolation {
    /// Smaller endpoint of the offending edge.
    pub u: u32,
    /// Larger endpoint of the offending edge.
    pub v: u32,
    /// Label of `u`.
    pub label_u: u64,
    /// Label of `v`.
    pub label_v: u64,
    /// The shared factor, `gcd(label_u, label_v)`.
    pub gcd: u64,
}

/// Complete account of how a labeling measures up to the prime property.
///
/// Every violation is listed, not just the first; `is_prime` is true exactly
/// when all three violation lists are empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    /// Vertices whose label falls outside `1..=vertex_count`.
    pub range_violations: Vec<(u32, u64)>,
    /// Labels used more than once, with the vertices that carry them.
    pub duplicate_labels: Vec<(u64, Vec<u32>)>,
    /// Edges whose endpoint labels share a factor greater than 1.
    pub coprimality_violations: Vec<CoprimalityViolation>,
    /// Whether the labeling is a prime labeling of the graph.
    pub is_prime: bool,
}

/// Checks a labeling against the prime-labeling conditions, reporting every
/// violation.
///
/// Errors with [`Error::InvalidParameter`] when the labeling does not assign
/// exactly one label per vertex of `g`.
pub fn verify_labeling(g: &Graph, labeling: &Labeling) -> Result<VerificationReport, Error> {
    let n = g.vertex_count();
    if labeling.len() != n as usize {
        return Err(Error::invalid(alloc::format!(
            "labeling covers {} vertices but the graph has {}",
            labeling.len(),
            n
        )));
    }

    let mut range_violations = Vec::new();
    for v in 0..n {
        let l = labeling.label(v);
        if l < 1 || l > n as u64 {
            range_violations.push((v, l));
        }
    }

    let mut by_label: Vec<(u64, u32)> = (0..n).map(|v| (labeling.label(v), v)).collect();
    by_label.sort_unstable();
    let mut duplicate_labels: Vec<(u64, Vec<u32>)> = Vec::new();
    let mut i = 0usize;
    while i < by_label.len() {
        let mut j = i + 1;
        while j < by_label.len() && by_label[j].0 == by_label[i].0 {
            j += 1;
        }
        if j - i > 1 {
            duplicate_labels.push((by_label[i].0, by_label[i..j].iter().map(|p| p.1).collect()));
        }
        i = j;
    }

    let mut coprimality_violations = Vec::new();
    for &(u, v) in g.edges() {
        let (lu, lv) = (labeling.label(u), labeling.label(v));
        let d = gcd(lu, lv);
        if d != 1 {
            coprimality_violations.push(CoprimalityViolation {
                u,
                v,
                label_u: lu,
                label_v: lv,
                gcd: d,
            });
        }
    }

    let is_prime = range_violations.is_empty()
        && duplicate_labels.is_empty()
        && coprimality_violations.is_empty();
    Ok(VerificationReport {
        range_violations,
        duplicate_labels,
        coprimality_violations,
        is_prime,
    })
}
