//! Parameterized graph families and their construction.
//!
//! Each builder returns a [`FamilyInstance`]: the graph itself plus a *role
//! map* that names every vertex by its structural position (cycle vertex `i`,
//! spur `i`, leaf `(i, k)`, ...). Labeling schemes address vertices through
//! roles, never through raw ids, so the id layout can stay an internal detail
//! of each builder. Builders are deterministic: identical parameters yield
//! identical graphs, ids, and role maps.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::{cartesian_product, cycle, path, star, Graph};
use crate::num::{fibonacci, is_prime};

/// Structural name of one vertex within a family instance.
///
/// A role is a short name plus an index tuple, e.g. `("c", [2, 5])` for the
/// fifth vertex of the second cycle. Roles order lexicographically, which
/// keeps role listings deterministic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Role {
    /// Role family, e.g. `"c"`, `"p"`, `"o"`, `"v"`, `"d"`.
    pub name: String,
    /// Index tuple; all indices are 1-based.
    pub indices: Vec<u32>,
}

impl Role {
    /// Builds a role from a name and index tuple.
    pub fn new(name: impl Into<String>, indices: &[u32]) -> Self {
        Role {
            name: name.into(),
            indices: indices.to_vec(),
        }
    }
}

impl core::fmt::Display for Role {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.name)?;
        let mut sep = '[';
        for i in &self.indices {
            write!(f, "{sep}{i}")?;
            sep = ',';
        }
        if sep == ',' {
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// Parameters selecting one member of a supported graph family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyParams {
    /// A cycle of `n >= 3` blocks; block `i` is a cycle vertex `c_i`, a spur
    /// `p_i` attached to it, and `m >= 0` leaves `o_{i,1..m}` on the spur.
    CyclePendantStar { n: u32, m: u32 },
    /// `m >= 1` copies of the cycle on `n` vertices glued in a row, each
    /// consecutive pair sharing exactly one vertex. Supported cycle sizes are
    /// 4, 6, and powers of two `2^k` (k >= 3) where `2^k - 1` is prime.
    CycleChain { n: u32, m: u32 },
    /// A chain of `m >= 1` cycles whose sizes follow the Fibonacci numbers:
    /// cycle 1 is a triangle and cycle `j >= 2` has `F(j+1) + 1` vertices.
    FibonacciChain { m: u32 },
    /// The prism over the cycle on `n >= 3` vertices: two concentric
    /// `n`-cycles joined by a perfect matching of spokes.
    Prism { n: u32 },
    /// The book with `n >= 1` rows and `m >= 2` pages: the product of the
    /// star with `n` leaves and the path on `m` vertices.
    Book { n: u32, m: u32 },
}

impl FamilyParams {
    /// Vertex count an instance with these parameters would have, computed
    /// without building anything; `None` when the count overflows `u64`.
    /// Parameter validity is not checked here — builders do that.
    pub fn vertex_count(&self) -> Option<u64> {
        match *self {
            FamilyParams::CyclePendantStar { n, m } => (n as u64).checked_mul(m as u64 + 2),
            FamilyParams::CycleChain { n, m } => (m as u64)
                .checked_sub(1)
                .and_then(|rest| rest.checked_mul(n as u64 - 1))
                .and_then(|added| added.checked_add(n as u64)),
            FamilyParams::FibonacciChain { m } => fibonacci(m.checked_add(3)?),
            FamilyParams::Prism { n } => Some(2 * n as u64),
            FamilyParams::Book { n, m } => (m as u64).checked_mul(n as u64 + 1),
        }
    }

    /// Edge count an instance with these parameters would have; same caveats
    /// as [`FamilyParams::vertex_count`].
    pub fn edge_count(&self) -> Option<u64> {
        match *self {
            FamilyParams::CyclePendantStar { n, m } => (n as u64).checked_mul(m as u64 + 2),
            FamilyParams::CycleChain { n, m } => (n as u64).checked_mul(m as u64),
            FamilyParams::FibonacciChain { m } => {
                fibonacci(m.checked_add(3)?)?.checked_add((m as u64).checked_sub(1)?)
            }
            FamilyParams::Prism { n } => Some(3 * n as u64),
            FamilyParams::Book { n, m } => (m as u64)
                .checked_mul(n as u64)?
                .checked_add((n as u64 + 1).checked_mul((m as u64).checked_sub(1)?)?),
        }
    }
}

/// A constructed family member: parameters, graph, and role map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInstance {
    params: FamilyParams,
    graph: Graph,
    roles: BTreeMap<Role, u32>,
}

impl FamilyInstance {
    /// The parameters this instance was built from.
    pub fn params(&self) -> &FamilyParams {
        &self.params
    }

    /// The underlying graph.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// All roles in lexicographic order with the vertex each names.
    pub fn roles(&self) -> impl Iterator<Item = (&Role, u32)> {
        self.roles.iter().map(|(r, &v)| (r, v))
    }

    /// Vertex carrying the given role, if that role exists.
    pub fn vertex(&self, name: &str, indices: &[u32]) -> Option<u32> {
        self.roles.get(&Role::new(name, indices)).copied()
    }

    /// Vertex carrying a role every instance of this family is known to have.
    ///
    /// Panics if the role is absent; builders and schemes agree on the role
    /// vocabulary, so a miss is an internal bug, not a user error.
    pub(crate) fn expect_vertex(&self, name: &str, indices: &[u32]) -> u32 {
        match self.vertex(name, indices) {
            Some(v) => v,
            None => panic!("missing role {}", Role::new(name, indices)),
        }
    }

    fn assemble(
        params: FamilyParams,
        vertex_count: u64,
        edges: Vec<(u32, u32)>,
        roles: BTreeMap<Role, u32>,
    ) -> Result<Self, Error> {
        if vertex_count > u32::MAX as u64 {
            return Err(Error::invalid(
                "family instance is too large for 32-bit vertex ids",
            ));
        }
        let graph = Graph::new(vertex_count as u32, &edges)?;
        debug_assert_eq!(roles.len(), vertex_count as usize);
        Ok(FamilyInstance {
            params,
            graph,
            roles,
        })
    }
}

/// Builds any supported family member from its parameters.
pub fn build_family(params: &FamilyParams) -> Result<FamilyInstance, Error> {
    match *params {
        FamilyParams::CyclePendantStar { n, m } => build_cycle_pendant_star(n, m),
        FamilyParams::CycleChain { n, m } => build_cycle_chain(n, m),
        FamilyParams::FibonacciChain { m } => build_fibonacci_chain(m),
        FamilyParams::Prism { n } => build_prism(n),
        FamilyParams::Book { n, m } => build_book(n, m),
    }
}

/// Builds the cycle-pendant-star on `n >= 3` blocks with `m >= 0` leaves each.
///
/// Roles: `c[i]` cycle vertex, `p[i]` spur, `o[i,k]` leaf `k` of spur `i`
/// (`i = 1..=n`, `k = 1..=m`). Block `i` occupies the contiguous id range
/// starting at `(i-1)(m+2)`: first the cycle vertex, then the spur, then the
/// leaves in index order.
pub fn build_cycle_pendant_star(n: u32, m: u32) -> Result<FamilyInstance, Error> {
    if n < 3 {
        return Err(Error::invalid("cycle-pendant-star needs at least 3 blocks"));
    }
    let block = m as u64 + 2;
    let count = n as u64 * block;
    if count > u32::MAX as u64 {
        return Err(Error::invalid(
            "family instance is too large for 32-bit vertex ids",
        ));
    }

    let mut edges = Vec::new();
    let mut roles = BTreeMap::new();
    let base = |i: u32| (i - 1) * (m + 2);
    for i in 1..=n {
        let c = base(i);
        let p = c + 1;
        roles.insert(Role::new("c", &[i]), c);
        roles.insert(Role::new("p", &[i]), p);
        edges.push((c, p));
        for k in 1..=m {
            let o = c + 1 + k;
            roles.insert(Role::new("o", &[i, k]), o);
            edges.push((p, o));
        }
        let next = if i == n { base(1) } else { base(i + 1) };
        edges.push((c, next));
    }
    FamilyInstance::assemble(FamilyParams::CyclePendantStar { n, m }, count, edges, roles)
}

/// Valid cycle sizes for [`build_cycle_chain`]: 4, 6, or `2^k` (`k >= 3`)
/// with `2^k - 1` prime.
fn validate_chain_cycle_size(n: u32) -> Result<(), Error> {
    let ok = n == 4 || n == 6 || (n >= 8 && n.is_power_of_two() && is_prime(n as u64 - 1));
    if ok {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "chain cycle size must be 4, 6, or a power of two 2^k (k >= 3) \
             with 2^k - 1 prime; got {n}"
        )))
    }
}

/// Builds a chain of `m >= 1` copies of the `n`-cycle, consecutive copies
/// sharing one vertex, with the two shared vertices of every interior cycle
/// antipodal (the chain runs straight through each cycle).
///
/// Roles: `c[i,k]` with `i = 1..=m`. Cycle 1 carries `k = 1..=n` in cyclic
/// order; every later cycle contributes `n - 1` new vertices `k = 1..=n-1`,
/// its remaining vertex being shared with cycle `i - 1`. How the role indices
/// wind around each cycle depends on the cycle size and on `i`; the winding
/// is chosen so that the closed-form labeling schemes for these chains place
/// coprime labels on every edge.
pub fn build_cycle_chain(n: u32, m: u32) -> Result<FamilyInstance, Error> {
    validate_chain_cycle_size(n)?;
    if m < 1 {
        return Err(Error::invalid("chain needs at least 1 cycle"));
    }
    let count = n as u64 + (m as u64 - 1) * (n as u64 - 1);
    if count > u32::MAX as u64 {
        return Err(Error::invalid(
            "family instance is too large for 32-bit vertex ids",
        ));
    }

    let mut edges = Vec::new();
    let mut roles = BTreeMap::new();

    let ring = |edges: &mut Vec<(u32, u32)>, order: &[u32]| {
        for w in order.windows(2) {
            edges.push((w[0], w[1]));
        }
        edges.push((*order.last().unwrap(), order[0]));
    };

    // Cycle 1: ids 0..n-1 in cyclic order, role c[1,k] = id k-1.
    let first: Vec<u32> = (0..n).collect();
    for k in 1..=n {
        roles.insert(Role::new("c", &[1, k]), k - 1);
    }
    ring(&mut edges, &first);

    // Vertex of cycle 1 shared with cycle 2.
    let mut shared = match n {
        4 => 3, // c[1,4]
        _ => 0, // c[1,1]
    };

    for i in 2..=m {
        let b = n + (i - 2) * (n - 1); // first new id of cycle i
        for k in 1..=(n - 1) {
            roles.insert(Role::new("c", &[i, k]), b + k - 1);
        }
        // Cyclic traversal starting at the vertex shared with cycle i-1,
        // expressed in new-vertex offsets; `next` is the offset of the vertex
        // shared with cycle i+1 (always antipodal to `shared`).
        let (order_offsets, next): (Vec<u32>, u32) = match n {
            4 => {
                if i % 2 == 0 {
                    // shared, c1, c2, c3; next shared = c2
                    ((0..3).collect(), 1)
                } else {
                    // shared, c1, c3, c2; next shared = c3
                    (alloc::vec![0, 2, 1], 2)
                }
            }
            6 => {
                if i % 3 == 1 {
                    // shared, c1, c2, c3, c4, c5; next shared = c3
                    ((0..5).collect(), 2)
                } else {
                    // shared, c1, c2, c5, c4, c3; next shared = c5
                    (alloc::vec![0, 1, 4, 3, 2], 4)
                }
            }
            _ => {
                let h = n / 2;
                if i % 2 == 0 {
                    // shared, c1..c(h-1), then c(n-1) down to c(h);
                    // next shared = c(n-1)
                    let mut v: Vec<u32> = (0..h - 1).collect();
                    v.extend((h - 1..n - 1).rev());
                    (v, n - 2)
                } else {
                    // shared, c1..c(n-1); next shared = c(h)
                    ((0..n - 1).collect(), h - 1)
                }
            }
        };
        let mut order = Vec::with_capacity(n as usize);
        order.push(shared);
        order.extend(order_offsets.iter().map(|&o| b + o));
        ring(&mut edges, &order);
        shared = b + next;
    }

    FamilyInstance::assemble(FamilyParams::CycleChain { n, m }, count, edges, roles)
}

/// Builds the chain of `m >= 1` cycles with Fibonacci-sized detours.
///
/// A spine path `p_1..p_{m+2}` (roles `p[j]`, ids `0..m+1`) is closed into a
/// triangle by the extra edge `p_1 - p_3`; then for each `i = 3..=m+1` a
/// detour of `F(i)` edges (so `F(i) - 1` new vertices, roles `d[i,t]` in path
/// order from `p_i`) is added between `p_i` and `p_{i+1}`, forming cycle
/// `i - 1` of the chain. The total vertex count is `F(m+3)`.
pub fn build_fibonacci_chain(m: u32) -> Result<FamilyInstance, Error> {
    if m < 1 {
        return Err(Error::invalid("chain needs at least 1 cycle"));
    }
    let count = fibonacci(m + 3)
        .filter(|&c| c <= u32::MAX as u64)
        .ok_or_else(|| Error::invalid("family instance is too large for 32-bit vertex ids"))?;

    let mut edges = Vec::new();
    let mut roles = BTreeMap::new();
    for j in 1..=m + 2 {
        roles.insert(Role::new("p", &[j]), j - 1);
        if j < m + 2 {
            edges.push((j - 1, j));
        }
    }
    edges.push((0, 2)); // p1 - p3 closes the triangle

    let mut next_id = m + 2;
    for i in 3..=m + 1 {
        // fibonacci(i) fits far below u32::MAX because F(m+3) already does.
        let detour_len = fibonacci(i).unwrap() as u32 - 1;
        let mut prev = i - 1; // p_i
        for t in 1..=detour_len {
            roles.insert(Role::new("d", &[i, t]), next_id);
            edges.push((prev, next_id));
            prev = next_id;
            next_id += 1;
        }
        edges.push((prev, i)); // last detour vertex - p_{i+1}
    }

    FamilyInstance::assemble(FamilyParams::FibonacciChain { m }, count, edges, roles)
}

/// Builds the prism over the `n`-cycle (`n >= 3`): the product of the cycle
/// and a single edge.
///
/// Roles: `c[1,i]` inner cycle, `c[2,i]` outer cycle (`i = 1..=n`), with both
/// cycles indexed in the same rotational direction and spokes joining equal
/// positions.
pub fn build_prism(n: u32) -> Result<FamilyInstance, Error> {
    if n < 3 {
        return Err(Error::invalid("a prism needs a cycle of at least 3"));
    }
    let graph = cartesian_product(&cycle(n)?, &path(2)?)?;
    let mut roles = BTreeMap::new();
    for i in 1..=n {
        roles.insert(Role::new("c", &[1, i]), (i - 1) * 2);
        roles.insert(Role::new("c", &[2, i]), (i - 1) * 2 + 1);
    }
    Ok(FamilyInstance {
        params: FamilyParams::Prism { n },
        graph,
        roles,
    })
}

/// Builds the book with `n >= 1` rows and `m >= 2` pages: the product of the
/// star with `n` leaves and the path on `m` vertices.
///
/// Roles: `c[j]` are the page centers along the path (`j = 1..=m`), and
/// `v[i,k]` is the vertex of page `i` in row `k` (`i = 1..=m`, `k = 1..=n`);
/// `v[i,k]` is adjacent to its center `c[i]` and to `v[i±1,k]`.
pub fn build_book(n: u32, m: u32) -> Result<FamilyInstance, Error> {
    if n < 1 {
        return Err(Error::invalid("a book needs at least 1 row"));
    }
    if m < 2 {
        return Err(Error::invalid("a book needs at least 2 pages"));
    }
    let graph = cartesian_product(&star(n)?, &path(m)?)?;
    let mut roles = BTreeMap::new();
    for j in 1..=m {
        roles.insert(Role::new("c", &[j]), j - 1);
    }
    for k in 1..=n {
        for i in 1..=m {
            roles.insert(Role::new("v", &[i, k]), k * m + (i - 1));
        }
    }
    Ok(FamilyInstance {
        params: FamilyParams::Book { n, m },
        graph,
        roles,
    })
}
