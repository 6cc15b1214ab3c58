//! Brute-force ground truth.
//!
//! Everything here evaluates `f` at every residue mod `p^k` and shares no code
//! with the lifting in [`crate::padic`]. [`verify_instance`] runs the whole
//! pipeline against it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::igusa::{closed_form_count, report};
use crate::padic::{count_roots, rep_roots, RepRoot, RootCount};
use crate::poly::IntPoly;
use crate::prime::Prime;
use crate::ratfun::RationalFunction;

/// Default limit on the number of residues the oracle will enumerate.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

fn modulus(p: Prime, k: u32, budget: u64) -> Result<u64> {
    let exceeded = Error::BudgetExceeded {
        p: p.get(),
        k,
        budget,
    };
    match p.get().checked_pow(k) {
        Some(m) if m <= budget => Ok(m),
        _ => Err(exceeded),
    }
}

/// `mask[x]` is true iff `f(x) = 0 mod p^k`, by Horner evaluation mod `p^k`.
fn root_mask(f: &IntPoly, m: u64) -> Vec<bool> {
    let mb = BigInt::from(m);
    let coeffs: Vec<u128> = f
        .coeffs()
        .iter()
        .map(|c| c.mod_floor(&mb).to_u128().unwrap())
        .collect();
    let m = m as u128;
    (0..m)
        .map(|x| coeffs.iter().rev().fold(0u128, |acc, &c| (acc * x + c) % m) == 0)
        .collect()
}

pub fn brute_count(f: &IntPoly, p: Prime, k: u32) -> Result<RootCount> {
    brute_count_with_budget(f, p, k, DEFAULT_BUDGET)
}

pub fn brute_count_with_budget(f: &IntPoly, p: Prime, k: u32, budget: u64) -> Result<RootCount> {
    let m = modulus(p, k, budget)?;
    let n = root_mask(f, m).into_iter().filter(|&r| r).count();
    Ok(RootCount::from(n as u64))
}

pub fn brute_rep_roots(f: &IntPoly, p: Prime, k: u32) -> Result<Vec<RepRoot>> {
    brute_rep_roots_with_budget(f, p, k, DEFAULT_BUDGET)
}

/// Groups the enumerated root set into maximal full subtrees of the base-`p`
/// digit tree: a prefix is emitted when all of its extensions are roots but
/// not all extensions of its parent are.
pub fn brute_rep_roots_with_budget(
    f: &IntPoly,
    p: Prime,
    k: u32,
    budget: u64,
) -> Result<Vec<RepRoot>> {
    let m = modulus(p, k, budget)?;
    let q = p.get();
    // counts[l][a] = number of roots congruent to a mod p^l
    let mut counts: Vec<Vec<u64>> = vec![Vec::new(); k as usize + 1];
    counts[k as usize] = root_mask(f, m).into_iter().map(u64::from).collect();
    for l in (0..k as usize).rev() {
        let size = q.pow(l as u32);
        let finer = &counts[l + 1];
        let level = (0..size)
            .map(|a| (0..q).map(|d| finer[(a + size * d) as usize]).sum())
            .collect();
        counts[l] = level;
    }

    let mut out = Vec::new();
    let mut stack = vec![(0usize, 0u64, Vec::<u64>::new())];
    while let Some((l, a, digits)) = stack.pop() {
        let c = counts[l][a as usize];
        if c == 0 {
            continue;
        }
        if c == q.pow(k - l as u32) {
            out.push(RepRoot::new(p, k, digits).unwrap());
            continue;
        }
        let size = q.pow(l as u32);
        for d in (0..q).rev() {
            let mut next = digits.clone();
            next.push(d);
            stack.push((l + 1, a + size * d, next));
        }
    }
    out.sort();
    Ok(out)
}

/// One line of a verification run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    fn compare(name: String, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let pass = expected == actual;
        Check {
            name,
            expected,
            actual,
            pass,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub poly: String,
    pub prime: String,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

fn show_reps(reps: &[RepRoot]) -> String {
    let parts: Vec<String> = reps.iter().map(|r| format!("{:?}", r.digits())).collect();
    format!("[{}]", parts.join(", "))
}

fn error_check(name: &str, err: Error) -> Check {
    Check {
        name: name.to_string(),
        expected: "ok".to_string(),
        actual: err.to_string(),
        pass: false,
    }
}

/// Cross-checks the pipeline for `(f, p)` against the oracle:
///
/// - `count_roots` and `rep_roots` against enumeration for every `k <= order`
///   with `p^k` within `budget`;
/// - the Maclaurin coefficients of `P(t)` up to `order` against
///   `N_k(f) / p^k`;
/// - the closed-form count against `count_roots` on `k0..=k0 + 2d + 2`;
/// - `(1 - t) P(t) + t Z(t) = 1`.
pub fn verify_instance(f: &IntPoly, p: Prime, order: u32, budget: u64) -> VerifyReport {
    let mut checks = Vec::new();
    let out = |checks| VerifyReport {
        poly: f.to_string(),
        prime: p.to_string(),
        checks,
    };
    let rep = match report(f, p) {
        Ok(r) => r,
        Err(e) => {
            checks.push(error_check("pipeline", e));
            return out(checks);
        }
    };

    for k in 0..=order {
        if modulus(p, k, budget).is_err() {
            break;
        }
        match (count_roots(f, p, k), brute_count_with_budget(f, p, k, budget)) {
            (Ok(fast), Ok(slow)) => checks.push(Check::compare(format!("count k={k}"), slow, fast)),
            (Err(e), _) | (_, Err(e)) => checks.push(error_check(&format!("count k={k}"), e)),
        }
        if k == 0 {
            continue;
        }
        match (rep_roots(f, p, k), brute_rep_roots_with_budget(f, p, k, budget)) {
            (Ok(fast), Ok(slow)) => checks.push(Check::compare(
                format!("rep-roots k={k}"),
                show_reps(&slow),
                show_reps(&fast),
            )),
            (Err(e), _) | (_, Err(e)) => checks.push(error_check(&format!("rep-roots k={k}"), e)),
        }
    }

    match rep.poincare.series_expand(order as usize) {
        Ok(series) => {
            for (k, coeff) in series.iter().enumerate() {
                let name = format!("series k={k}");
                match count_roots(f, p, k as u32) {
                    Ok(n) => {
                        let expected =
                            BigRational::new(BigInt::from(n.into_inner()), p.pow(k as u32));
                        checks.push(Check::compare(name, expected, coeff));
                    }
                    Err(e) => checks.push(error_check(&name, e)),
                }
            }
        }
        Err(e) => checks.push(error_check("series", e)),
    }

    let set = rep.branch_set();
    for k in set.k0..=set.k0 + 2 * set.degree + 2 {
        let name = format!("closed-form k={k}");
        match (closed_form_count(&set, k), count_roots(f, p, k)) {
            (Ok(closed), Ok(n)) => checks.push(Check::compare(name, n, closed)),
            (Err(e), _) | (_, Err(e)) => checks.push(error_check(&name, e)),
        }
    }

    let one_minus_t = RationalFunction::from_poly(IntPoly::from_coeffs([1, -1]));
    let lhs = &(&one_minus_t * &rep.poincare) + &(&RationalFunction::t() * &rep.zeta);
    checks.push(Check::compare("P/Z identity".to_string(), RationalFunction::one(), lhs));

    out(checks)
}

/// Whether `p^k` is within `budget`.
pub fn within_budget(p: Prime, k: u32, budget: u64) -> bool {
    modulus(p, k, budget).is_ok()
}
