//! Dense polynomials over `F_p` with word-sized coefficients, used for root
//! finding when the prime is too large for an exhaustive scan.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Poly = Vec<u64>;

fn trim(mut f: Poly) -> Poly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(a != 0);
    pow_mod(a, p - 2, p)
}

fn sub(a: &[u64], b: &[u64], p: u64) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

fn mul(a: &[u64], b: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u128; a.len() + b.len() - 1];
    let pp = p as u128;
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u128 * y as u128) % pp;
        }
    }
    trim(out.into_iter().map(|v| v as u64).collect())
}

/// Quotient and remainder of `a` by nonzero `b`.
fn div_rem(a: &[u64], b: &[u64], p: u64) -> (Poly, Poly) {
    let db = b.len() - 1;
    let lc_inv = inv(b[db], p);
    let mut r = a.to_vec();
    if r.len() <= db {
        return (Vec::new(), trim(r));
    }
    let mut q = vec![0; r.len() - db];
    for i in (0..q.len()).rev() {
        let c = mul_mod(r[i + db], lc_inv, p);
        q[i] = c;
        if c == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + p - mul_mod(c, bj, p)) % p;
        }
    }
    r.truncate(db);
    (trim(q), trim(r))
}

fn rem(a: &[u64], b: &[u64], p: u64) -> Poly {
    div_rem(a, b, p).1
}

fn monic(f: Poly, p: u64) -> Poly {
    match f.last() {
        Some(&lc) if lc != 1 => {
            let c = inv(lc, p);
            f.into_iter().map(|a| mul_mod(a, c, p)).collect()
        }
        _ => f,
    }
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(a, p)
}

/// `base^e mod modulus`.
fn pow_rem(base: &[u64], mut e: u64, modulus: &[u64], p: u64) -> Poly {
    let mut result = rem(&[1], modulus, p);
    let mut b = rem(base, modulus, p);
    while e > 0 {
        if e & 1 == 1 {
            result = rem(&mul(&result, &b, p), modulus, p);
        }
        b = rem(&mul(&b, &b, p), modulus, p);
        e >>= 1;
    }
    result
}

/// Splits a monic squarefree product of distinct linear factors.
fn split_linear(h: Poly, p: u64, rng: &mut StdRng, out: &mut Vec<u64>) {
    match h.len() {
        0 | 1 => {}
        2 => out.push((p - h[0]) % p),
        _ => loop {
            let a = rng.gen_range(0..p);
            let w = pow_rem(&[a, 1], (p - 1) / 2, &h, p);
            let g = gcd(&sub(&w, &[1], p), &h, p);
            if g.len() > 1 && g.len() < h.len() {
                let (q, _) = div_rem(&h, &g, p);
                split_linear(g, p, rng, out);
                split_linear(monic(q, p), p, rng, out);
                return;
            }
        },
    }
}

/// Distinct roots of `f` in `F_p` for odd `p`, via `gcd(f, x^p - x)` and
/// Cantor-Zassenhaus splitting with a fixed-seed generator. The input must
/// be nonzero with coefficients already reduced into `[0, p)`.
pub(crate) fn roots(f: &[u64], p: u64) -> Vec<u64> {
    let f = monic(trim(f.to_vec()), p);
    assert!(!f.is_empty(), "roots of the zero polynomial");
    assert!(p > 2, "splitting requires an odd prime");
    if f.len() == 1 {
        return Vec::new();
    }
    let xp = pow_rem(&[0, 1], p, &f, p);
    let h = gcd(&sub(&xp, &[0, 1], p), &f, p);
    let mut out = Vec::with_capacity(h.len().saturating_sub(1));
    let mut rng = StdRng::seed_from_u64(0x005e_ed0f_f00d);
    split_linear(h, p, &mut rng, &mut out);
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scan(f: &[u64], p: u64) -> Vec<u64> {
        (0..p)
            .filter(|&x| f.iter().rev().fold(0u64, |acc, &c| (mul_mod(acc, x, p) + c) % p) == 0)
            .collect()
    }

    #[test]
    fn split_matches_scan_small_primes() {
        let mut rng = StdRng::seed_from_u64(7);
        for &p in &[3u64, 5, 7, 11, 101, 257] {
            for _ in 0..50 {
                let deg = rng.gen_range(1..8);
                let mut f: Vec<u64> = (0..=deg).map(|_| rng.gen_range(0..p)).collect();
                if f[deg] == 0 {
                    f[deg] = 1;
                }
                assert_eq!(roots(&f, p), scan(&f, p), "f = {f:?}, p = {p}");
            }
        }
    }

    #[test]
    fn product_of_linears_large_prime() {
        let p = 1_000_000_007u64;
        let rs = [0u64, 1, 17, 999_999_999, 123_456_789];
        let mut f = vec![1u64];
        for &r in &rs {
            f = mul(&f, &[(p - r) % p, 1], p);
        }
        // add a repeated root and an irreducible quadratic factor x^2 + 1
        // (p = 1 mod 4 would split it; 1e9+7 = 3 mod 4 keeps it irreducible)
        f = mul(&f, &[p - 17, 1], p);
        f = mul(&f, &[1, 0, 1], p);
        let mut expected = rs.to_vec();
        expected.sort_unstable();
        assert_eq!(roots(&f, p), expected);
    }
}
