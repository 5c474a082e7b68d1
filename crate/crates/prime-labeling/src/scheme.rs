//! Closed-form labeling schemes for the supported graph families.
//!
//! Each scheme takes a [`FamilyInstance`] built by [`crate::family`] and
//! assigns every vertex a label through its role, producing a labeling that
//! is a bijection onto `1..=|V|` with coprime labels on every edge. Schemes
//! never construct graphs themselves, so a scheme can be checked against any
//! independently built instance.
//!
//! Not every family member has a scheme here: cycle-pendant-stars are covered
//! for 4..=8 leaves per spur and books for 3..=7 pages, and prisms require
//! the cycle length `n` to be even with `n - 1` prime (odd prisms have no
//! prime labeling at all, see [`Error::NotApplicable`]). Unsupported
//! parameters yield [`Error::UnsupportedScheme`].

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::family::{FamilyInstance, FamilyParams};
use crate::labeling::Labeling;
use crate::num::{fibonacci, is_prime};

/// Labels any supported family member with the scheme for its family.
pub fn label_family(inst: &FamilyInstance) -> Result<Labeling, Error> {
    match inst.params() {
        FamilyParams::CyclePendantStar { .. } => label_cycle_pendant_star(inst),
        FamilyParams::CycleChain { .. } => label_cycle_chain(inst),
        FamilyParams::FibonacciChain { .. } => label_fibonacci_chain(inst),
        FamilyParams::Prism { .. } => label_prism(inst),
        FamilyParams::Book { .. } => label_book(inst),
    }
}

fn set(labels: &mut [u64], inst: &FamilyInstance, name: &str, indices: &[u32], value: u64) {
    labels[inst.expect_vertex(name, indices) as usize] = value;
}

/// Labels of block `i` of a cycle-pendant-star with `m` leaves per spur:
/// `(cycle vertex, spur, leaves 1..=m)`. Every block uses the label window
/// `(m+2)(i-1)+1 ..= (m+2)i`; which window member lands on the spur (and
/// which on the low leaves) rotates with `i` so that the spur, which sees
/// both its cycle vertex and all leaves, always receives a label coprime to
/// all of theirs.
fn cps_block(m: u32, i: u64) -> (u64, u64, Vec<u64>) {
    match m {
        4 => (
            6 * i - 5,
            6 * i - 1,
            vec![6 * i - 2, 6 * i - 3, 6 * i - 4, 6 * i],
        ),
        5 => {
            let (r6, r30) = (i % 6, i % 30);
            let p = if r6 == 1 || r6 == 3 {
                7 * i - 2
            } else if r6 == 2 || r6 == 4 {
                7 * i - 3
            } else if r6 == 5 {
                7 * i - 4
            } else if r30 != 0 {
                7 * i - 5
            } else {
                7 * i - 1
            };
            let o1 = if r6 != 0 || r30 == 0 { 7 * i - 5 } else { 7 * i - 4 };
            let o2 = if (r6 != 0 && r6 != 5) || r30 == 0 {
                7 * i - 4
            } else {
                7 * i - 3
            };
            let o3 = if r6 == 1 || r6 == 3 || r30 == 0 {
                7 * i - 3
            } else {
                7 * i - 2
            };
            let o4 = if r30 == 0 { 7 * i - 2 } else { 7 * i - 1 };
            (7 * i - 6, p, vec![o1, o2, o3, o4, 7 * i])
        }
        6 => {
            let (r3, r15) = (i % 3, i % 15);
            let p = if r3 != 0 {
                8 * i - 3
            } else if r15 != 0 {
                8 * i - 5
            } else {
                8 * i - 1
            };
            let o2 = if r3 != 0 || r15 == 0 { 8 * i - 5 } else { 8 * i - 3 };
            let o4 = if r15 == 0 { 8 * i - 3 } else { 8 * i - 1 };
            (
                8 * i - 7,
                p,
                vec![8 * i - 6, o2, 8 * i - 4, o4, 8 * i - 2, 8 * i],
            )
        }
        7 => {
            let (r2, r10, r70) = (i % 2, i % 10, i % 70);
            let p = if r2 == 1 {
                9 * i - 4
            } else if r10 != 0 {
                9 * i - 5
            } else if r70 != 0 {
                9 * i - 7
            } else {
                9 * i - 1
            };
            let o1 = if r10 != 0 || r70 == 0 { 9 * i - 7 } else { 9 * i - 5 };
            let o3 = if r2 == 1 || r70 == 0 { 9 * i - 5 } else { 9 * i - 4 };
            let o4 = if r70 == 0 { 9 * i - 4 } else { 9 * i - 1 };
            (
                9 * i - 8,
                p,
                vec![o1, 9 * i - 6, o3, o4, 9 * i - 3, 9 * i - 2, 9 * i],
            )
        }
        8 => {
            let (r3, r21) = (i % 3, i % 21);
            let p = if r3 != 0 {
                10 * i - 3
            } else if r21 != 0 {
                10 * i - 7
            } else {
                10 * i - 1
            };
            let o2 = if r21 == 0 || r3 != 0 { 10 * i - 7 } else { 10 * i - 3 };
            let o6 = if r21 == 0 { 10 * i - 3 } else { 10 * i - 1 };
            (
                10 * i - 9,
                p,
                vec![
                    10 * i - 8,
                    o2,
                    10 * i - 6,
                    10 * i - 5,
                    10 * i - 4,
                    o6,
                    10 * i - 2,
                    10 * i,
                ],
            )
        }
        _ => unreachable!("gated by label_cycle_pendant_star"),
    }
}

/// Labels a cycle-pendant-star instance with `m` in `4..=8` leaves per spur.
pub fn label_cycle_pendant_star(inst: &FamilyInstance) -> Result<Labeling, Error> {
    let (n, m) = match *inst.params() {
        FamilyParams::CyclePendantStar { n, m } => (n, m),
        _ => return Err(Error::invalid("expected a cycle-pendant-star instance")),
    };
    if !(4..=8).contains(&m) {
        return Err(Error::unsupported(format!(
            "no labeling scheme for cycle-pendant-stars with {m} leaves per spur \
             (supported: 4..=8)"
        )));
    }
    let mut labels = vec![0u64; inst.graph().vertex_count() as usize];
    for i in 1..=n {
        let (c, p, leaves) = cps_block(m, i as u64);
        set(&mut labels, inst, "c", &[i], c);
        set(&mut labels, inst, "p", &[i], p);
        for (k, &o) in leaves.iter().enumerate() {
            set(&mut labels, inst, "o", &[i, k as u32 + 1], o);
        }
    }
    Ok(Labeling::new(labels))
}

/// Labels a chain of `m` copies of the `n`-cycle.
///
/// Cycle 1 takes consecutive labels around the ring; every later cycle `i`
/// takes the next window of `n - 1` labels, laid out so (together with the
/// winding chosen by the builder) consecutive ring labels differ by 1 or
/// share no common factor. The very last label wraps to 1 for `n = 4`, where
/// the windows have odd width 3 and the final window would otherwise end on
/// an even label adjacent to another even.
pub fn label_cycle_chain(inst: &FamilyInstance) -> Result<Labeling, Error> {
    let (n, m) = match *inst.params() {
        FamilyParams::CycleChain { n, m } => (n, m),
        _ => return Err(Error::invalid("expected a cycle-chain instance")),
    };
    let mut labels = vec![0u64; inst.graph().vertex_count() as usize];
    match n {
        4 => {
            let first: [u64; 4] = if m == 1 { [2, 3, 4, 1] } else { [2, 3, 4, 5] };
            for (k, &v) in first.iter().enumerate() {
                set(&mut labels, inst, "c", &[1, k as u32 + 1], v);
            }
            for i in 2..=m {
                for k in 1..=3u32 {
                    let v = if i == m && k == 3 {
                        1
                    } else {
                        3 * i as u64 + k as u64 - 1
                    };
                    set(&mut labels, inst, "c", &[i, k], v);
                }
            }
        }
        6 => {
            for k in 1..=6u32 {
                set(&mut labels, inst, "c", &[1, k], k as u64);
            }
            for i in 2..=m {
                for k in 1..=5u32 {
                    set(&mut labels, inst, "c", &[i, k], 5 * i as u64 + k as u64 - 4);
                }
            }
        }
        _ => {
            // n = 2^k with 2^k - 1 prime; enforced by the builder.
            for k in 1..=n {
                set(&mut labels, inst, "c", &[1, k], k as u64);
            }
            for i in 2..=m {
                for k in 1..=n - 1 {
                    let v = (n as u64 - 1) * i as u64 + k as u64 - (n as u64 - 2);
                    set(&mut labels, inst, "c", &[i, k], v);
                }
            }
        }
    }
    Ok(Labeling::new(labels))
}

/// Labels a Fibonacci cycle chain: spine vertex `p[j]` gets the Fibonacci
/// number `F(j+1)` and the detour vertices fill the gap between consecutive
/// Fibonacci numbers in path order.
pub fn label_fibonacci_chain(inst: &FamilyInstance) -> Result<Labeling, Error> {
    let m = match *inst.params() {
        FamilyParams::FibonacciChain { m } => m,
        _ => return Err(Error::invalid("expected a Fibonacci-chain instance")),
    };
    let mut labels = vec![0u64; inst.graph().vertex_count() as usize];
    for j in 1..=m + 2 {
        set(&mut labels, inst, "p", &[j], fibonacci(j + 1).unwrap());
    }
    for i in 3..=m + 1 {
        let gap = fibonacci(i).unwrap() - 1;
        let base = fibonacci(i + 1).unwrap();
        for t in 1..=gap {
            set(&mut labels, inst, "d", &[i, t as u32], base + t);
        }
    }
    Ok(Labeling::new(labels))
}

/// Labels the prism over the `n`-cycle for even `n` with `n - 1` prime.
///
/// Both cycles take mostly consecutive labels in rotational order; the inner
/// cycle swaps label 1 to position `n - 1` and gives position 1 the prime
/// `n - 1`, which is what makes every spoke difference either `n - 1` (prime
/// and larger than the inner label) or coprime by adjacency of consecutive
/// integers.
///
/// Odd `n` yields [`Error::NotApplicable`]: the endpoints of every spoke plus
/// cycle edges force more even labels than the graph's largest independent
/// set can hold. Even `n` with `n - 1` composite yields
/// [`Error::UnsupportedScheme`].
pub fn label_prism(inst: &FamilyInstance) -> Result<Labeling, Error> {
    let n = match *inst.params() {
        FamilyParams::Prism { n } => n,
        _ => return Err(Error::invalid("expected a prism instance")),
    };
    if n % 2 == 1 {
        return Err(Error::not_applicable(format!(
            "the prism over an odd cycle (n = {n}) has no prime labeling"
        )));
    }
    if !is_prime(n as u64 - 1) {
        return Err(Error::unsupported(format!(
            "no labeling scheme for prisms with n - 1 = {} composite",
            n - 1
        )));
    }
    let n64 = n as u64;
    let mut labels = vec![0u64; inst.graph().vertex_count() as usize];
    for i in 1..=n {
        let inner = match i {
            1 => n64 - 1,
            i if i == n - 1 => 1,
            i if i == n => 2 * n64,
            _ => i as u64,
        };
        let outer = if i == 1 { n64 } else { i as u64 + n64 - 1 };
        set(&mut labels, inst, "c", &[1, i], inner);
        set(&mut labels, inst, "c", &[2, i], outer);
    }
    Ok(Labeling::new(labels))
}

/// One of the ten row layouts used by the seven-page book scheme.
///
/// A pattern is a permutation of the window offsets `1..=7`: row `k` of the
/// book takes the label window `7k+1 ..= 7k+7` and pattern `P` places offset
/// `P.offsets()[i-1]` on page `i`. Which pattern each row uses is chosen by
/// [`ROW_PATTERN_CYCLE`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowPattern {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    I,
    J,
}

impl RowPattern {
    /// Window offsets placed on pages `1..=7`, a permutation of `1..=7`.
    pub fn offsets(self) -> [u64; 7] {
        match self {
            RowPattern::A => [2, 3, 4, 5, 6, 7, 1],
            RowPattern::B => [2, 3, 6, 7, 4, 5, 1],
            RowPattern::C => [3, 2, 7, 6, 5, 4, 1],
            RowPattern::D => [5, 6, 7, 2, 3, 4, 1],
            RowPattern::E => [4, 5, 6, 7, 2, 3, 1],
            RowPattern::F => [3, 4, 5, 6, 7, 2, 1],
            RowPattern::G => [6, 7, 2, 3, 4, 5, 1],
            RowPattern::H => [2, 1, 3, 7, 6, 5, 4],
            RowPattern::I => [7, 6, 1, 2, 3, 4, 5],
            RowPattern::J => [7, 6, 5, 4, 3, 2, 1],
        }
    }
}

/// Labels of row `k` across the seven pages under the given pattern.
pub fn row_permutation(pattern: RowPattern, k: u64) -> [u64; 7] {
    pattern.offsets().map(|offset| 7 * k + offset)
}

/// Row-pattern sequence for seven-page books; row `k` uses entry
/// `(k - 1) % 30`. The choice at each position makes every label coprime to
/// the page center `1..=7` below it and to its row neighbors, and because 30
/// divides `7 * 30 = 210` windows into a full residue cycle mod 2, 3, 5, and
/// 7, the whole sequence can repeat indefinitely.
pub const ROW_PATTERN_CYCLE: [RowPattern; 30] = {
    use RowPattern::{A, C, D, E, F, G, H, I, J};
    [
        C, E, J, A, J, A, D, E, J, A, F, G, C, H, J, A, J, A, I, E, F, E, J, A, D, E, J, A, J, A,
    ]
};

/// Labels of row `k` of a book with `m` pages (`m` in `3..=7`), page by page.
///
/// Every row uses the label window `mk+1 ..= mk+m`; the arrangement within
/// the window depends on `k` so that each label is coprime both to its page
/// center (`1..=m`) and to its neighbors in adjacent rows.
fn book_row(m: u32, k: u64) -> Vec<u64> {
    match m {
        3 => {
            if k % 2 == 1 {
                vec![3 * k + 3, 3 * k + 2, 3 * k + 1]
            } else {
                vec![3 * k + 2, 3 * k + 3, 3 * k + 1]
            }
        }
        4 => {
            if k % 3 == 1 {
                vec![4 * k + 2, 4 * k + 3, 4 * k + 4, 4 * k + 1]
            } else {
                (1..=4).map(|i| 4 * k + 5 - i).collect()
            }
        }
        5 => {
            let w = 5 * k;
            if k == 1 {
                return (1..=5).map(|i| 11 - i).collect();
            }
            match (k - 1) % 6 {
                1 | 5 => vec![w + 2, w + 3, w + 4, w + 5, w + 1],
                0 | 2 => vec![w + 3, w + 4, w + 5, w + 2, w + 1],
                3 => vec![w + 4, w + 3, w + 2, w + 5, w + 1],
                _ => vec![w + 5, w + 4, w + 3, w + 2, w + 1],
            }
        }
        6 => {
            if k % 5 == 3 {
                vec![
                    6 * k + 2,
                    6 * k + 3,
                    6 * k + 4,
                    6 * k + 5,
                    6 * k + 6,
                    6 * k + 1,
                ]
            } else {
                (1..=6).map(|i| 6 * k + 7 - i).collect()
            }
        }
        7 => {
            let pattern = ROW_PATTERN_CYCLE[((k - 1) % 30) as usize];
            row_permutation(pattern, k).to_vec()
        }
        _ => unreachable!("gated by label_book"),
    }
}

/// Labels a book instance with `m` in `3..=7` pages: centers get `1..=m`
/// along the path, and row `k` gets the window `mk+1 ..= mk+m` arranged by
/// [`book_row`].
pub fn label_book(inst: &FamilyInstance) -> Result<Labeling, Error> {
    let (n, m) = match *inst.params() {
        FamilyParams::Book { n, m } => (n, m),
        _ => return Err(Error::invalid("expected a book instance")),
    };
    if !(3..=7).contains(&m) {
        return Err(Error::unsupported(format!(
            "no labeling scheme for books with {m} pages (supported: 3..=7)"
        )));
    }
    let mut labels = vec![0u64; inst.graph().vertex_count() as usize];
    for j in 1..=m {
        set(&mut labels, inst, "c", &[j], j as u64);
    }
    for k in 1..=n {
        let row = book_row(m, k as u64);
        for (i, &v) in row.iter().enumerate() {
            set(&mut labels, inst, "v", &[i as u32 + 1, k], v);
        }
    }
    Ok(Labeling::new(labels))
}
