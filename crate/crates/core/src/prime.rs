//! Primes and `p`-adic valuations.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::{Error, Result};

/// A prime number that fits in 64 bits. Construction checks primality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn to_bigint(self) -> BigInt {
        BigInt::from(self.0)
    }

    pub fn to_biguint(self) -> BigUint {
        BigUint::from(self.0)
    }

    /// `p^k` as a big integer.
    pub fn pow(self, k: u32) -> BigInt {
        num_traits::pow(self.to_bigint(), k as usize)
    }

    pub fn pow_unsigned(self, k: u32) -> BigUint {
        num_traits::pow(self.to_biguint(), k as usize)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin; the first twelve prime bases are a proven
/// witness set for every `n < 2^64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// `p`-adic valuation. `Infinity` sorts above every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u64),
    Infinity,
}

impl Valuation {
    pub fn finite(self) -> Option<u64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinity => None,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => v.fmt(f),
            Valuation::Infinity => f.write_str("inf"),
        }
    }
}

/// Exponent of the highest power of `p` dividing `a`.
pub fn vp(a: &BigInt, p: Prime) -> Valuation {
    if a.is_zero() {
        return Valuation::Infinity;
    }
    let p = p.to_bigint();
    let mut a = a.clone();
    let mut v = 0;
    loop {
        let (q, r) = num_integer::Integer::div_rem(&a, &p);
        if !r.is_zero() {
            return Valuation::Finite(v);
        }
        a = q;
        v += 1;
    }
}

/// Valuation of `a` capped at `cap`: returns `cap` whenever `p^cap | a`.
pub(crate) fn vp_capped(a: &BigInt, p: &BigInt, cap: u32) -> u32 {
    if a.is_zero() {
        return cap;
    }
    let mut a = a.clone();
    let mut v = 0;
    while v < cap {
        let (q, r) = num_integer::Integer::div_rem(&a, p);
        if !r.is_zero() {
            break;
        }
        a = q;
        v += 1;
    }
    v
}
