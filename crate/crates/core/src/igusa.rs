//! Branch parameters of the `Z_p`-roots of `f` and the rational forms of the
//! Poincaré series `P(t) = sum_k N_k(f) (t/p)^k` and of the local zeta
//! function `Z(t)`, linked by `(1 - t) P(t) = 1 - t Z(t)`.
//!
//! Past the threshold `k0 = d(Δ + 1) + 1`, with `Δ` the valuation of the
//! discriminant of the squarefree part, every representative-root of
//! `f mod p^k` tracks exactly one `Z_p`-root `α` of `f`, and its length is
//! `⌈(k - ν)/e⌉` where `e` is the multiplicity of `α` and `ν` the valuation
//! of the `α`-free part of `f` at `α`. The pair `(e, ν)` is read off from how
//! these lengths grow with `k`; the roots themselves are never computed.
//!
//! A `p`-adic content `f = p^c g` is carried through directly: `N_k(f) =
//! p^c N_{k-c}(g)` for `k > c`, so the threshold moves to `k0 + c` and every
//! `ν` grows by `c`, and the formulas below hold for `f` verbatim.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::padic::{count_roots_with, rep_roots_with, RepRoot, RootCount, RootFinding};
use crate::poly::{discriminant_paper, IntPoly, RatPoly};
use crate::prime::{vp, Prime};
use crate::ratfun::RationalFunction;

/// Data attached to one `Z_p`-root of `f`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BranchParams {
    /// Multiplicity of the root.
    pub e: u32,
    /// Valuation of the root-free part of `f` at the root.
    pub nu: u32,
    /// Least `k >= k0` with `e | (k - nu)`.
    pub k_align: u32,
    /// Digits of the representative-root tracking this root at `k = k0`.
    pub prefix: Vec<u64>,
}

impl BranchParams {
    /// Length `⌈(k - ν)/e⌉` of this branch's representative-root mod `p^k`.
    pub fn length_at(&self, k: u32) -> i64 {
        Integer::div_ceil(&(k as i64 - self.nu as i64), &(self.e as i64))
    }

    /// Roots of `f mod p^k` in this branch, `p^(k - ⌈(k - ν)/e⌉)`.
    pub fn count_at(&self, p: Prime, k: u32) -> BigUint {
        let exp = k as i64 - self.length_at(k);
        p.pow_unsigned(u32::try_from(exp).expect("branch count exponent fits u32"))
    }
}

/// All branches of `f` together with the regime threshold they are valid
/// from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchSet {
    pub prime: Prime,
    pub degree: u32,
    /// `c = v_p(content(f))`.
    pub content_shift: u32,
    /// `v_p` of the discriminant of the squarefree part; `None` for constant
    /// `f`.
    pub delta: Option<u64>,
    /// First precision at which the closed form holds.
    pub k0: u32,
    pub branches: Vec<BranchParams>,
}

impl BranchSet {
    /// Last precision inspected when inferring the branches.
    pub fn window_end(&self) -> u32 {
        self.k0 + 2 * self.degree + 1
    }
}

/// `v_p` of the discriminant of the squarefree part of `f`.
pub fn compute_delta(f: &IntPoly, p: Prime) -> Result<u64> {
    let rad = f.squarefree_part()?;
    let disc = discriminant_paper(&rad)?;
    Ok(vp(&disc, p)
        .finite()
        .expect("a squarefree polynomial has nonzero discriminant"))
}

/// `k0 = d(Δ + 1) + 1`, shifted by the `p`-adic content of `f`. For constant
/// `f` this is `c + 1`.
pub fn compute_k0(f: &IntPoly, p: Prime) -> Result<u32> {
    let (c, g) = f.content_and_primitive(p)?;
    let d = g.degree().unwrap() as u64;
    let delta = if d == 0 { 0 } else { compute_delta(&g, p)? };
    let k0 = d * (delta + 1) + 1 + c as u64;
    Ok(u32::try_from(k0).expect("threshold fits u32"))
}

pub fn extract_branches(f: &IntPoly, p: Prime) -> Result<BranchSet> {
    extract_branches_with(f, p, RootFinding::default())
}

/// Infers `(e, ν, k_align)` for every `Z_p`-root of `f` from the
/// representative-roots at `k = k0, ..., k0 + 2d + 1`.
pub fn extract_branches_with(f: &IntPoly, p: Prime, backend: RootFinding) -> Result<BranchSet> {
    let (c, g) = f.content_and_primitive(p)?;
    let d = g.degree().unwrap() as u32;
    if d == 0 {
        return Ok(BranchSet {
            prime: p,
            degree: 0,
            content_shift: c,
            delta: None,
            k0: c + 1,
            branches: Vec::new(),
        });
    }
    let delta = compute_delta(&g, p)?;
    let k0 = compute_k0(f, p)?;
    let mut set = BranchSet {
        prime: p,
        degree: d,
        content_shift: c,
        delta: Some(delta),
        k0,
        branches: Vec::new(),
    };

    let window: Vec<u32> = (k0..=set.window_end()).collect();
    let levels: Vec<Vec<RepRoot>> = window
        .par_iter()
        .map(|&k| rep_roots_with(f, p, k, backend))
        .collect::<Result<_>>()?;

    let base = &levels[0];
    for (k, level) in window.iter().zip(&levels) {
        if level.len() != base.len() {
            return Err(Error::InconsistentLengths(format!(
                "{} representative-roots at k = {k0} but {} at k = {k}",
                base.len(),
                level.len()
            )));
        }
    }

    for root in base {
        let mut lengths = Vec::with_capacity(window.len());
        for (k, level) in window.iter().zip(&levels) {
            let mut matches = level.iter().filter(|r| root.is_prefix_of(r));
            match (matches.next(), matches.next()) {
                (Some(r), None) => lengths.push(r.len() as i64),
                _ => {
                    return Err(Error::InconsistentLengths(format!(
                        "branch {:?} does not continue uniquely at k = {k}",
                        root.digits()
                    )))
                }
            }
        }
        set.branches
            .push(infer_branch(&window, &lengths, k0, root.digits().to_vec())?);
    }

    let total: u32 = set.branches.iter().map(|b| b.e).sum();
    if total > d {
        return Err(Error::InconsistentLengths(format!(
            "multiplicities sum to {total}, above the degree {d}"
        )));
    }
    Ok(set)
}

/// Fits `l(k) = ⌈(k - ν)/e⌉` to an observed length sequence.
fn infer_branch(window: &[u32], lengths: &[i64], k0: u32, prefix: Vec<u64>) -> Result<BranchParams> {
    let mut increments = Vec::new();
    for i in 1..lengths.len() {
        match lengths[i] - lengths[i - 1] {
            0 => {}
            1 => increments.push(i),
            step => {
                return Err(Error::InconsistentLengths(format!(
                    "length of branch {prefix:?} jumps by {step} at k = {}",
                    window[i]
                )))
            }
        }
    }
    let [first, second, ..] = increments[..] else {
        return Err(Error::InconsistentLengths(format!(
            "branch {prefix:?} grows fewer than twice over k = {}..={}",
            window[0],
            window[window.len() - 1]
        )));
    };
    let e = (second - first) as i64;
    // k - ν is a multiple of e exactly one step before each increment
    let aligned = first - 1;
    let nu = window[aligned] as i64 - e * lengths[aligned];
    if nu < 0 {
        return Err(Error::InconsistentLengths(format!(
            "branch {prefix:?} gives negative valuation {nu}"
        )));
    }
    let branch = BranchParams {
        e: e as u32,
        nu: nu as u32,
        k_align: (k0..k0 + e as u32)
            .find(|&k| (k as i64 - nu).rem_euclid(e) == 0)
            .unwrap(),
        prefix,
    };
    for (&k, &l) in window.iter().zip(lengths) {
        if branch.length_at(k) != l {
            return Err(Error::InconsistentLengths(format!(
                "branch {:?} has length {l} at k = {k}, expected ceil(({k} - {nu})/{e}) = {}",
                branch.prefix,
                branch.length_at(k)
            )));
        }
    }
    Ok(branch)
}

/// `N_k(f) = sum_i p^(k - ⌈(k - ν_i)/e_i⌉)`, valid for `k >= k0`.
pub fn closed_form_count(set: &BranchSet, k: u32) -> Result<RootCount> {
    if k < set.k0 {
        return Err(Error::RegimeViolation { k, k0: set.k0 });
    }
    Ok(set
        .branches
        .iter()
        .map(|b| b.count_at(set.prime, k))
        .sum::<BigUint>()
        .into())
}

fn power_ratio(num: BigUint, p: Prime, k: u32) -> BigRational {
    BigRational::new(num.into(), p.pow(k))
}

/// Tail `sum_{k >= k_align} N_{k,i} (t/p)^k` of one branch in closed form:
/// `t^k_i (p - (p-1)t - t^e) / (p^((k_i - ν)/e) (1 - t)(p - t^e))`.
fn branch_tail(b: &BranchParams, p: Prime) -> RationalFunction {
    let e = b.e as usize;
    let pb = p.to_bigint();
    let mut num = vec![BigInt::from(0); e + 1];
    num[0] = pb.clone();
    num[1] -= &pb - 1;
    num[e] -= 1;
    let num = IntPoly::new(num).shift_up(b.k_align as usize);
    let level = (b.k_align - b.nu) / b.e;
    let one_minus_t = IntPoly::from_coeffs([1, -1]);
    let p_minus_te = &IntPoly::constant(pb) - &IntPoly::monomial(1, e);
    let den = (&one_minus_t * &p_minus_te).scale(&p.pow(level));
    RationalFunction::new(num, den).expect("nonzero denominator")
}

pub fn poincare_series(f: &IntPoly, p: Prime) -> Result<RationalFunction> {
    Ok(analyze(f, p, RootFinding::default())?.1)
}

/// `Z(t) = (1 - (1 - t) P(t)) / t`.
pub fn zeta_from_poincare(poincare: &RationalFunction) -> RationalFunction {
    let one_minus_t = IntPoly::from_coeffs([1, -1]);
    let top = poincare.denom() - &(&one_minus_t * poincare.numer());
    debug_assert!(top.coeff(0) == BigInt::from(0), "P(0) must be 1");
    RationalFunction::new(top.shift_down(1), poincare.denom().clone()).expect("nonzero denominator")
}

pub fn zeta_function(f: &IntPoly, p: Prime) -> Result<RationalFunction> {
    Ok(zeta_from_poincare(&poincare_series(f, p)?))
}

fn analyze(f: &IntPoly, p: Prime, backend: RootFinding) -> Result<(BranchSet, RationalFunction)> {
    let set = extract_branches_with(f, p, backend)?;

    // head: the exact counts below the threshold, then each branch's terms
    // up to its first aligned precision
    let mut head = RatPoly::zero();
    for j in 0..set.k0 {
        let n = count_roots_with(f, p, j, backend)?.into_inner();
        head.add_term(j as usize, power_ratio(n, p, j));
    }
    for b in &set.branches {
        for l in set.k0..b.k_align {
            head.add_term(l as usize, power_ratio(b.count_at(p, l), p, l));
        }
    }

    let poincare = std::iter::once(RationalFunction::from_ratpoly(&head))
        .chain(set.branches.iter().map(|b| branch_tail(b, p)))
        .sum();
    Ok((set, poincare))
}

/// Everything computed for one `(f, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaReport {
    pub poly: IntPoly,
    pub prime: Prime,
    pub delta: Option<u64>,
    pub k0: u32,
    pub content_shift: u32,
    pub branches: Vec<BranchParams>,
    pub poincare: RationalFunction,
    pub zeta: RationalFunction,
}

impl ZetaReport {
    /// Number of `Z_p`-roots.
    pub fn n(&self) -> usize {
        self.branches.len()
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    /// Degree of the numerator `A(t)` of `P(t)`.
    pub fn deg_numerator(&self) -> usize {
        self.poincare.numer().degree().unwrap_or(0)
    }

    /// Degree of the denominator `B(t)` of `P(t)`.
    pub fn deg_denominator(&self) -> usize {
        self.poincare.denom().degree().unwrap_or(0)
    }

    pub fn branch_set(&self) -> BranchSet {
        BranchSet {
            prime: self.prime,
            degree: self.degree() as u32,
            content_shift: self.content_shift,
            delta: self.delta,
            k0: self.k0,
            branches: self.branches.clone(),
        }
    }
}

pub fn report(f: &IntPoly, p: Prime) -> Result<ZetaReport> {
    report_with(f, p, RootFinding::default())
}

pub fn report_with(f: &IntPoly, p: Prime, backend: RootFinding) -> Result<ZetaReport> {
    let (set, poincare) = analyze(f, p, backend)?;
    let zeta = zeta_from_poincare(&poincare);
    Ok(ZetaReport {
        poly: f.clone(),
        prime: p,
        delta: set.delta,
        k0: set.k0,
        content_shift: set.content_shift,
        branches: set.branches,
        poincare,
        zeta,
    })
}

/// `(1 - t^c)/(1 - t) + t^c * rest`, the series of `p^c g` in terms of that
/// of `g`.
pub fn shift_by_content(rest: &RationalFunction, c: u32) -> RationalFunction {
    let geometric = IntPoly::new(vec![BigInt::one(); c as usize]);
    let tc = RationalFunction::from_poly(IntPoly::monomial(1, c as usize));
    &RationalFunction::from_poly(geometric) + &(&tc * rest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::count_roots;
    use proptest::prelude::*;

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(c.iter().copied())
    }

    fn prime(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(poly(n), poly(d)).unwrap()
    }

    fn params(set: &BranchSet) -> Vec<(u32, u32, u32)> {
        set.branches.iter().map(|b| (b.e, b.nu, b.k_align)).collect()
    }

    #[test]
    fn delta_examples() {
        assert_eq!(compute_delta(&poly(&[1, 3, 2]), prime(2)).unwrap(), 1);
        assert_eq!(compute_delta(&poly(&[-1, 0, 1]), prime(2)).unwrap(), 2);
        assert_eq!(compute_delta(&poly(&[-1, 0, 1]), prime(5)).unwrap(), 0);
        assert_eq!(compute_delta(&poly(&[4]), prime(5)), Err(Error::DegreeZero));
    }

    #[test]
    fn k0_examples() {
        assert_eq!(compute_k0(&poly(&[1, 3, 2]), prime(2)).unwrap(), 5);
        assert_eq!(compute_k0(&poly(&[0, 0, 1]), prime(3)).unwrap(), 3);
        assert_eq!(compute_k0(&poly(&[-1, 0, 1]), prime(2)).unwrap(), 7);
        // content 4 = 2^2 shifts the threshold by two
        assert_eq!(compute_k0(&poly(&[8, 0, 4]), prime(2)).unwrap(), 2 * 4 + 1 + 2);
    }

    #[test]
    fn branch_examples() {
        let set = extract_branches(&poly(&[1, 3, 2]), prime(2)).unwrap();
        assert_eq!(params(&set), vec![(1, 0, 5)]);

        let set = extract_branches(&poly(&[0, 0, 1]), prime(3)).unwrap();
        assert_eq!(params(&set), vec![(2, 0, 4)]);

        let set = extract_branches(&poly(&[-1, 0, 1]), prime(2)).unwrap();
        assert_eq!(params(&set), vec![(1, 1, 7), (1, 1, 7)]);

        let set = extract_branches(&poly(&[1, 0, 1]), prime(3)).unwrap();
        assert!(set.branches.is_empty());
    }

    #[test]
    fn branch_inference_rejects_broken_lengths() {
        let window: Vec<u32> = (5..=10).collect();
        let err = infer_branch(&window, &[3, 3, 3, 3, 3, 3], 5, vec![0]);
        assert!(matches!(err, Err(Error::InconsistentLengths(_))));
        let err = infer_branch(&window, &[3, 4, 6, 7, 8, 9], 5, vec![0]);
        assert!(matches!(err, Err(Error::InconsistentLengths(_))));
        // gaps 1 then 2 do not fit a single ceiling law
        let err = infer_branch(&window, &[3, 4, 5, 5, 6, 6], 5, vec![0]);
        assert!(matches!(err, Err(Error::InconsistentLengths(_))));
        let ok = infer_branch(&window, &[3, 3, 4, 4, 5, 5], 5, vec![0]).unwrap();
        assert_eq!((ok.e, ok.nu, ok.k_align), (2, 0, 6));
    }

    #[test]
    fn closed_form_examples() {
        let set = extract_branches(&poly(&[-1, 0, 1]), prime(2)).unwrap();
        assert_eq!(closed_form_count(&set, 10).unwrap().to_string(), "4");
        assert_eq!(
            closed_form_count(&set, 6),
            Err(Error::RegimeViolation { k: 6, k0: 7 })
        );

        let set = extract_branches(&poly(&[0, 0, 1]), prime(3)).unwrap();
        assert_eq!(closed_form_count(&set, 8).unwrap().to_string(), "81");

        let set = extract_branches(&poly(&[1, 0, 1]), prime(3)).unwrap();
        assert_eq!(closed_form_count(&set, 9).unwrap().to_string(), "0");
    }

    #[test]
    fn poincare_examples() {
        for q in [2i64, 3, 7] {
            let p = prime(q as u64);
            assert_eq!(poincare_series(&poly(&[0, 1]), p).unwrap(), rf(&[q], &[q, -1]));
            assert_eq!(
                poincare_series(&poly(&[0, 0, 1]), p).unwrap(),
                rf(&[q, 1], &[q, 0, -1])
            );
        }
        assert_eq!(poincare_series(&poly(&[12]), prime(2)).unwrap(), rf(&[1, 1, 1], &[1]));
        assert_eq!(
            poincare_series(&IntPoly::zero(), prime(2)),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn zeta_examples() {
        for q in [2i64, 5] {
            let p = prime(q as u64);
            assert_eq!(zeta_function(&poly(&[0, 1]), p).unwrap(), rf(&[q - 1], &[q, -1]));
            assert_eq!(
                zeta_function(&poly(&[0, 0, 1]), p).unwrap(),
                rf(&[q - 1], &[q, 0, -1])
            );
        }
        assert_eq!(zeta_function(&poly(&[1]), prime(3)).unwrap(), RationalFunction::one());
    }

    #[test]
    fn report_examples() {
        let r = report(&poly(&[1, 3, 2]), prime(2)).unwrap();
        assert_eq!((r.delta, r.k0, r.n()), (Some(1), 5, 1));
        assert_eq!((r.branches[0].e, r.branches[0].nu, r.branches[0].k_align), (1, 0, 5));

        let r = report(&poly(&[0, 1]), prime(7)).unwrap();
        assert_eq!((r.delta, r.k0, r.n()), (Some(0), 2, 1));
        assert_eq!(r.poincare, rf(&[7], &[7, -1]));
        assert_eq!(r.zeta, rf(&[6], &[7, -1]));

        let r = report(&poly(&[1, 0, 1]), prime(3)).unwrap();
        assert_eq!(r.n(), 0);
        assert_eq!(r.poincare, RationalFunction::one());
        assert_eq!(r.zeta, RationalFunction::one());
    }

    #[test]
    fn multiple_root_with_nonzero_nu() {
        // (x - 1)^2 (x + 1) at p = 3: root 1 has e = 2, ν = v_3(2) = 0;
        // root -1 has e = 1, ν = v_3(4) = 0
        let f = poly(&[1, -1, -1, 1]);
        let set = extract_branches(&f, prime(3)).unwrap();
        let mut got = params(&set);
        got.sort();
        assert_eq!(got.iter().map(|&(e, nu, _)| (e, nu)).collect::<Vec<_>>(), vec![(1, 0), (2, 0)]);
        // same polynomial at p = 2: both roots are odd and 1 - (-1) = 2
        let set = extract_branches(&f, prime(2)).unwrap();
        let mut got: Vec<_> = params(&set).iter().map(|&(e, nu, _)| (e, nu)).collect();
        got.sort();
        assert_eq!(got, vec![(1, 2), (2, 1)]);
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-12i64..=12, 1..=4)
            .prop_map(|c| poly(&c))
            .prop_filter("nonzero", |f| !f.is_zero())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn series_reproduces_counts(f in small_poly(), pi in 0usize..3) {
            let p = prime([2u64, 3, 5][pi]);
            let r = report(&f, p).unwrap();
            let order = r.k0 + 2 * r.degree() as u32 + 2;
            let series = r.poincare.series_expand(order as usize).unwrap();
            for (k, c) in series.iter().enumerate() {
                let n = count_roots(&f, p, k as u32).unwrap().into_inner();
                prop_assert_eq!(c, &power_ratio(n, p, k as u32));
            }
            let t = RationalFunction::t();
            let one_minus_t = RationalFunction::from_poly(poly(&[1, -1]));
            prop_assert_eq!(&(&one_minus_t * &r.poincare) + &(&t * &r.zeta), RationalFunction::one());
        }

        #[test]
        fn content_shift_identity(g in small_poly(), c in 0u32..4, pi in 0usize..2) {
            let q = [2i64, 3][pi];
            let p = prime(q as u64);
            let (c0, _) = g.content_and_primitive(p).unwrap();
            prop_assume!(c0 == 0);
            let f = g.scale(&BigInt::from(q).pow(c));
            let direct = poincare_series(&f, p).unwrap();
            let shifted = shift_by_content(&poincare_series(&g, p).unwrap(), c);
            prop_assert_eq!(direct, shifted);
        }
    }
}
