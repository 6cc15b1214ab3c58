//! Roots of `f mod p^k` in compressed form.
//!
//! The root set of an integer polynomial modulo `p^k` is a disjoint union of
//! at most `deg f` sets of the shape `a_0 + a_1 p + ... + a_{l-1} p^{l-1} + p^l*`,
//! where `*` ranges over all residues. [`rep_roots`] enumerates these sets by
//! lifting roots digit by digit; [`count_roots`] sums their sizes.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::fp;
use crate::poly::IntPoly;
use crate::prime::{vp_capped, Prime};

/// Root-finding backend selection for `f mod p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootFinding {
    /// Primes below this bound are handled by evaluating `f` at every
    /// residue; larger primes use `gcd(f, x^p - x)` and equal-degree
    /// splitting.
    pub scan_below: u64,
}

impl Default for RootFinding {
    fn default() -> Self {
        RootFinding { scan_below: 1 << 16 }
    }
}

/// The set `a_0 + a_1 p + ... + a_{l-1} p^{l-1} + p^l*` of residues mod `p^k`.
///
/// Ordering is lexicographic on the digit string, which is the canonical
/// output order of [`rep_roots`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RepRoot {
    p: Prime,
    k: u32,
    digits: Vec<u64>,
}

impl RepRoot {
    /// Returns `None` unless every digit lies in `[0, p)` and there are at
    /// most `k` of them.
    pub fn new(p: Prime, k: u32, digits: Vec<u64>) -> Option<Self> {
        if digits.len() > k as usize || digits.iter().any(|&d| d >= p.get()) {
            return None;
        }
        Some(RepRoot { p, k, digits })
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    /// Ambient precision `k`.
    pub fn precision(&self) -> u32 {
        self.k
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    /// Number of fixed digits `l`.
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Smallest nonnegative member, `a_0 + a_1 p + ... + a_{l-1} p^{l-1}`.
    pub fn base(&self) -> BigInt {
        let p = self.p.to_bigint();
        self.digits
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, &d| acc * &p + BigInt::from(d))
    }

    /// Number of residues mod `p^k` in the set, `p^(k - l)`.
    pub fn size(&self) -> BigUint {
        self.p.pow_unsigned(self.k - self.digits.len() as u32)
    }

    pub fn contains(&self, x: &BigInt) -> bool {
        let m = self.p.pow(self.digits.len() as u32);
        x.mod_floor(&m) == self.base()
    }

    /// Whether this set's digit string is a prefix of `other`'s.
    pub fn is_prefix_of(&self, other: &RepRoot) -> bool {
        other.digits.starts_with(&self.digits)
    }
}

impl fmt::Display for RepRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.digits.iter().enumerate() {
            match i {
                0 => write!(f, "{d}")?,
                1 => write!(f, " + {}*{d}", self.p)?,
                _ => write!(f, " + {}^{i}*{d}", self.p)?,
            }
        }
        let l = self.digits.len();
        if l < self.k as usize {
            if l > 0 {
                f.write_str(" + ")?;
            }
            match l {
                0 => f.write_str("*"),
                1 => write!(f, "{}*", self.p),
                _ => write!(f, "{}^{l}*", self.p),
            }?;
        }
        write!(f, " (mod {}^{})", self.p, self.k)
    }
}

/// Number of roots of a polynomial modulo `p^k`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootCount(BigUint);

impl RootCount {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }
}

impl From<BigUint> for RootCount {
    fn from(v: BigUint) -> Self {
        RootCount(v)
    }
}

impl From<u64> for RootCount {
    fn from(v: u64) -> Self {
        RootCount(BigUint::from(v))
    }
}

impl fmt::Display for RootCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Residues `r` in `[0, p)` with `f(r) = 0 mod p`, in increasing order.
pub fn roots_mod_p(f: &IntPoly, p: Prime) -> Result<Vec<u64>> {
    roots_mod_p_with(f, p, RootFinding::default())
}

pub fn roots_mod_p_with(f: &IntPoly, p: Prime, backend: RootFinding) -> Result<Vec<u64>> {
    let pb = p.to_bigint();
    let reduced: Vec<u64> = f
        .coeffs()
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().expect("residue below a u64 prime"))
        .collect();
    if reduced.iter().all(|&c| c == 0) {
        return Err(Error::IdenticallyZeroModP { p: p.get() });
    }
    let q = p.get();
    if q == 2 || q < backend.scan_below {
        let qq = q as u128;
        Ok((0..q)
            .filter(|&x| {
                let x = x as u128;
                reduced
                    .iter()
                    .rev()
                    .fold(0u128, |acc, &c| (acc * x + c as u128) % qq)
                    == 0
            })
            .collect())
    } else {
        Ok(fp::roots(&reduced, q))
    }
}

/// Maximal representative-roots of `f mod p^k`, sorted by digit string.
///
/// The sets returned are pairwise disjoint, their union is exactly the root
/// set, and none of them can be shortened by a digit without admitting a
/// non-root. A nonzero `p`-adic content of `f` is stripped first: if
/// `p^k | f` the whole ring is returned as the single empty-prefix set.
pub fn rep_roots(f: &IntPoly, p: Prime, k: u32) -> Result<Vec<RepRoot>> {
    rep_roots_with(f, p, k, RootFinding::default())
}

pub fn rep_roots_with(
    f: &IntPoly,
    p: Prime,
    k: u32,
    backend: RootFinding,
) -> Result<Vec<RepRoot>> {
    let (c, g) = f.content_and_primitive(p)?;
    if c >= k {
        return Ok(vec![RepRoot {
            p,
            k,
            digits: Vec::new(),
        }]);
    }
    let remaining = k - c;
    let lifter = Lifter { p, k, backend };
    let mut out = lifter.lift(&g.reduce_mod(&p.pow(remaining)), remaining, &mut Vec::new())?;
    out.sort();
    Ok(out)
}

struct Lifter {
    p: Prime,
    k: u32,
    backend: RootFinding,
}

impl Lifter {
    fn full(&self, digits: Vec<u64>) -> RepRoot {
        RepRoot {
            p: self.p,
            k: self.k,
            digits,
        }
    }

    /// Representative-roots of `h mod p^remaining` below `prefix`, given that
    /// `h mod p` is not the zero polynomial. Each root `r` mod `p` is fixed
    /// as the next digit and the search continues on `h(r + p*x) / p^v`,
    /// where `p^v` is its content.
    ///
    /// `h` can still vanish at every residue mod `p` (as `x^p - x` does), so
    /// a node whose `p` children are all full is itself returned as full.
    fn lift(&self, h: &IntPoly, remaining: u32, prefix: &mut Vec<u64>) -> Result<Vec<RepRoot>> {
        let pb = self.p.to_bigint();
        let modulus = self.p.pow(remaining);
        let mut out = Vec::new();
        let mut full_children = 0u64;
        let dh = h.derivative();
        for r in roots_mod_p_with(h, self.p, self.backend)? {
            let rb = BigInt::from(r);
            if !dh.eval(&rb).is_multiple_of(&pb) {
                // simple root: exactly one lift, no branching below
                let lifted = newton_lift(h, &dh, rb, &modulus);
                let start = prefix.len();
                prefix.extend(base_p_digits(lifted, self.p.get(), remaining));
                out.push(self.full(prefix.clone()));
                prefix.truncate(start);
                if remaining == 1 {
                    full_children += 1;
                }
                continue;
            }
            let shifted = h.compose_affine(&rb, &pb).reduce_mod(&modulus);
            prefix.push(r);
            if shifted.is_zero() {
                full_children += 1;
                out.push(self.full(prefix.clone()));
            } else {
                let v = shifted
                    .coeffs()
                    .iter()
                    .map(|c| vp_capped(c, &pb, remaining))
                    .min()
                    .unwrap();
                debug_assert!(v >= 1 && v < remaining);
                let next = shifted.div_scalar_exact(&self.p.pow(v));
                let below = self.lift(&next, remaining - v, prefix)?;
                if below.len() == 1 && below[0].digits == *prefix {
                    full_children += 1;
                }
                out.extend(below);
            }
            prefix.pop();
        }
        if full_children == self.p.get() {
            return Ok(vec![self.full(prefix.clone())]);
        }
        Ok(out)
    }
}

/// The root of `h mod m` above the simple root `x` mod `p`, by Newton
/// iteration with doubling precision.
fn newton_lift(h: &IntPoly, dh: &IntPoly, mut x: BigInt, m: &BigInt) -> BigInt {
    loop {
        let value = h.eval(&x).mod_floor(m);
        if value.is_zero() {
            return x;
        }
        let slope = dh.eval(&x).mod_floor(m);
        let inv = slope.modinv(m).expect("derivative is a unit at a simple root");
        x = (x - value * inv).mod_floor(m);
    }
}

/// The `len` lowest base-`p` digits of `x >= 0`.
fn base_p_digits(mut x: BigInt, p: u64, len: u32) -> Vec<u64> {
    let pb = BigInt::from(p);
    (0..len)
        .map(|_| {
            let (q, r) = x.div_mod_floor(&pb);
            x = q;
            r.to_u64().unwrap()
        })
        .collect()
}

/// `N_k(f)`, the number of roots of `f mod p^k`, with `N_0(f) = 1`.
pub fn count_roots(f: &IntPoly, p: Prime, k: u32) -> Result<RootCount> {
    count_roots_with(f, p, k, RootFinding::default())
}

pub fn count_roots_with(f: &IntPoly, p: Prime, k: u32, backend: RootFinding) -> Result<RootCount> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if k == 0 {
        return Ok(RootCount(BigUint::one()));
    }
    let total = rep_roots_with(f, p, k, backend)?
        .iter()
        .map(RepRoot::size)
        .sum();
    Ok(RootCount(total))
}
