//! Number-theoretic building blocks: gcd, deterministic 64-bit primality,
//! Fibonacci numbers, and a smallest-prime-factor sieve.

use alloc::vec;
use alloc::vec::Vec;

/// Greatest common divisor of two unsigned integers.
///
/// `gcd(0, k) = k` and `gcd(k, 0) = k`; `gcd(0, 0) = 0`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Whether two integers share no factor greater than 1.
pub fn coprime(a: u64, b: u64) -> bool {
    gcd(a, b) == 1
}

/// Witness set that makes Miller-Rabin deterministic for every 64-bit input.
const MILLER_RABIN_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic primality test for 64-bit integers.
///
/// Uses Miller-Rabin with a fixed base set known to be exact over the full
/// `u64` range, so the answer is never probabilistic.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MILLER_RABIN_BASES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    // n is odd and > 37 here; write n - 1 = d * 2^s with d odd.
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'bases: for &a in &MILLER_RABIN_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// The `k`-th Fibonacci number with `F(1) = F(2) = 1` (and `F(0) = 0`).
///
/// Returns `None` when the value does not fit in a `u64` (first at `k = 94`).
pub fn fibonacci(k: u32) -> Option<u64> {
    let (mut a, mut b) = (0u64, 1u64); // F(0), F(1)
    if k == 0 {
        return Some(0);
    }
    for _ in 1..k {
        let next = a.checked_add(b)?;
        a = b;
        b = next;
    }
    Some(b)
}

/// Smallest-prime-factor sieve over `0..=max`.
///
/// `sieve[x]` is the smallest prime dividing `x` for `x >= 2`; entries 0 and 1
/// are 0 (they have no prime factor).
pub fn smallest_prime_factor_sieve(max: usize) -> Vec<u32> {
    assert!(max <= u32::MAX as usize, "sieve bound exceeds u32 range");
    let mut sieve = vec![0u32; max + 1];
    let mut i = 2usize;
    while i <= max {
        if sieve[i] == 0 {
            sieve[i] = i as u32;
            let mut j = i * i;
            while j <= max {
                if sieve[j] == 0 {
                    sieve[j] = i as u32;
                }
                j += i;
            }
        }
        i += 1;
    }
    sieve
}
