//! Finite simple connected graphs with a canonical edge representation,
//! plus the elementary constructions used throughout the crate.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;

/// An undirected simple connected graph.
///
/// Vertices are the contiguous ids `0..vertex_count`. Edges are stored
/// canonically as `(min, max)` pairs sorted ascending, with no self-loops and
/// no duplicates, so two graphs compare equal exactly when they have the same
/// vertex count and edge set, and serialization of equal graphs is identical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: u32,
    edges: Vec<(u32, u32)>,
    adjacency: Vec<Vec<u32>>,
}

impl Graph {
    /// Builds a graph from a vertex count and an edge list.
    ///
    /// Edges may be given in either orientation; they are canonicalized to
    /// `(min, max)` and sorted. Errors with [`Error::InvalidParameter`] if the
    /// vertex count is zero, an endpoint is out of range, an edge is a
    /// self-loop, an edge appears twice (in any orientation), or the resulting
    /// graph is not connected.
    pub fn new(vertex_count: u32, edges: &[(u32, u32)]) -> Result<Self, Error> {
        if vertex_count == 0 {
            return Err(Error::invalid("graph must have at least one vertex"));
        }
        let mut canonical: Vec<(u32, u32)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{vertex_count}"
                )));
            }
            canonical.push((u.min(v), u.max(v)));
        }
        canonical.sort_unstable();
        if let Some(w) = canonical.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }

        let mut adjacency = vec![Vec::new(); vertex_count as usize];
        for &(u, v) in &canonical {
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }

        let graph = Graph {
            vertex_count,
            edges: canonical,
            adjacency,
        };
        if !graph.is_connected() {
            return Err(Error::invalid("graph is not connected"));
        }
        Ok(graph)
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The canonical sorted `(min, max)` edge list.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adjacency[v as usize]
    }

    /// Degree of `v`.
    pub fn degree(&self, v: u32) -> usize {
        self.adjacency[v as usize].len()
    }

    /// Whether `{u, v}` is an edge.
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).is_ok()
    }

    fn is_connected(&self) -> bool {
        let n = self.vertex_count as usize;
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(0u32);
        let mut reached = 1usize;
        while let Some(v) = queue.pop_front() {
            for &w in self.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == n
    }
}

/// The path on `n >= 2` vertices, with edges `(i, i+1)`.
pub fn path(n: u32) -> Result<Graph, Error> {
    if n < 2 {
        return Err(Error::invalid("a path needs at least 2 vertices"));
    }
    let edges: Vec<(u32, u32)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Graph::new(n, &edges)
}

/// The cycle on `n >= 3` vertices, with edges `(i, i+1)` and `(n-1, 0)`.
pub fn cycle(n: u32) -> Result<Graph, Error> {
    if n < 3 {
        return Err(Error::invalid("a cycle needs at least 3 vertices"));
    }
    let mut edges: Vec<(u32, u32)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((n - 1, 0));
    Graph::new(n, &edges)
}

/// The star with `m >= 1` leaves: center vertex 0 joined to leaves `1..=m`.
pub fn star(m: u32) -> Result<Graph, Error> {
    if m < 1 {
        return Err(Error::invalid("a star needs at least 1 leaf"));
    }
    let edges: Vec<(u32, u32)> = (1..=m).map(|leaf| (0, leaf)).collect();
    Graph::new(m + 1, &edges)
}

/// Cartesian product of two graphs.
///
/// The vertex `(a, b)` of the product receives id `a * |V(h)| + b`. Vertices
/// `(a, b)` and `(a', b')` are adjacent iff `a = a'` and `{b, b'}` is an edge
/// of `h`, or `b = b'` and `{a, a'}` is an edge of `g`. The product of
/// connected graphs is connected, so construction only fails if the vertex
/// count would overflow the id space.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, Error> {
    let count = g.vertex_count() as u64 * h.vertex_count() as u64;
    if count > u32::MAX as u64 {
        return Err(Error::invalid(
            "product graph is too large for 32-bit vertex ids",
        ));
    }
    let hn = h.vertex_count();
    let id = |a: u32, b: u32| a * hn + b;
    let mut edges = Vec::with_capacity(
        g.edge_count() * h.vertex_count() as usize + g.vertex_count() as usize * h.edge_count(),
    );
    for a in 0..g.vertex_count() {
        for &(b1, b2) in h.edges() {
            edges.push((id(a, b1), id(a, b2)));
        }
    }
    for &(a1, a2) in g.edges() {
        for b in 0..h.vertex_count() {
            edges.push((id(a1, b), id(a2, b)));
        }
    }
    Graph::new(count as u32, &edges)
}
