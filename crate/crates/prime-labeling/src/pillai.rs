//! Windows of consecutive integers with no element coprime to the rest.
//!
//! Most windows `s, s+1, ..., s+k-1` contain an element coprime to all the
//! others (for small `k`, every window does). This module searches for
//! *witness* windows where no such element exists: every element shares a
//! factor with at least one other element of the window. Such windows are
//! the local obstruction to consecutive-label constructions, so knowing the
//! smallest witness for a window width tells a labeling scheme how far
//! plain consecutive runs are guaranteed to work.

use alloc::vec::Vec;

use crate::error::Error;
use crate::num::smallest_prime_factor_sieve;

/// Hard cap on `limit + k` to keep the factor sieve's memory in check.
pub const MAX_SCAN: u64 = 20_000_000;

/// True when `x` shares a factor with another element of `[lo, hi]`: some
/// prime dividing `x` has at least two multiples in the window.
fn shares_factor_in_window(x: u64, lo: u64, hi: u64, sieve: &[u32]) -> bool {
    if x == 1 {
        return false;
    }
    let mut rest = x as usize;
    while rest > 1 {
        let p = sieve[rest] as u64;
        if hi / p - (lo - 1) / p >= 2 {
            return true;
        }
        while rest.is_multiple_of(p as usize) {
            rest /= p as usize;
        }
    }
    false
}

/// Finds the smallest `s <= limit` such that the window `s ..= s+k-1` has no
/// element coprime to all the others, or `None` if no window start up to
/// `limit` qualifies.
///
/// Requires `k >= 2` (a single element is vacuously coprime to the rest),
/// `limit >= k`, and `limit + k <= `[`MAX_SCAN`].
pub fn pillai_witness(k: u32, limit: u64) -> Result<Option<u64>, Error> {
    if k < 2 {
        return Err(Error::invalid("window width must be at least 2"));
    }
    if limit < k as u64 {
        return Err(Error::invalid("scan limit must be at least the window width"));
    }
    let top = limit
        .checked_add(k as u64)
        .filter(|&t| t <= MAX_SCAN)
        .ok_or_else(|| {
            Error::invalid(alloc::format!(
                "scan range limit + k must be at most {MAX_SCAN}"
            ))
        })?;
    let sieve = smallest_prime_factor_sieve(top as usize);

    'windows: for s in 1..=limit {
        let hi = s + k as u64 - 1;
        for x in s..=hi {
            if !shares_factor_in_window(x, s, hi, &sieve) {
                continue 'windows;
            }
        }
        return Ok(Some(s));
    }
    Ok(None)
}

/// All window starts `s <= limit` whose window of width `k` has no element
/// coprime to the rest, in increasing order. Same bounds as
/// [`pillai_witness`].
pub fn pillai_witnesses(k: u32, limit: u64) -> Result<Vec<u64>, Error> {
    if k < 2 {
        return Err(Error::invalid("window width must be at least 2"));
    }
    if limit < k as u64 {
        return Err(Error::invalid("scan limit must be at least the window width"));
    }
    let top = limit
        .checked_add(k as u64)
        .filter(|&t| t <= MAX_SCAN)
        .ok_or_else(|| {
            Error::invalid(alloc::format!(
                "scan range limit + k must be at most {MAX_SCAN}"
            ))
        })?;
    let sieve = smallest_prime_factor_sieve(top as usize);
    let mut found = Vec::new();
    'windows: for s in 1..=limit {
        let hi = s + k as u64 - 1;
        for x in s..=hi {
            if !shares_factor_in_window(x, s, hi, &sieve) {
                continue 'windows;
            }
        }
        found.push(s);
    }
    Ok(found)
}
