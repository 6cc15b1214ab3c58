//! Exact root counting of integer polynomials modulo prime powers, together
//! with the closed rational forms of the associated Poincaré series and
//! Igusa local zeta function.
//!
//! The crate is organised bottom-up:
//!
//! - [`poly`]: dense integer and rational polynomials, resultants and
//!   discriminants.
//! - [`prime`]: primes and `p`-adic valuations.
//! - [`padic`]: representative-roots of `f mod p^k` and the counts `N_k(f)`.
//! - [`ratfun`]: exact rational functions in `t` and their Maclaurin series.
//! - [`igusa`]: branch parameters, the closed-form count and the assembly of
//!   `P(t)` and `Z(t)`.
//! - [`oracle`]: brute-force ground truth and the cross-check harness.
//! - [`parse`] and [`json`]: the textual polynomial syntax and the JSON wire
//!   formats used by the command-line tool.

pub mod error;
mod fp;
pub mod igusa;
pub mod json;
pub mod oracle;
pub mod padic;
pub mod parse;
pub mod poly;
pub mod prime;
pub mod ratfun;

pub use error::{Error, Result};
pub use igusa::{
    closed_form_count, compute_delta, compute_k0, extract_branches, poincare_series, report,
    zeta_function, BranchParams, BranchSet, ZetaReport,
};
pub use oracle::{brute_count, brute_rep_roots, verify_instance, VerifyReport};
pub use padic::{count_roots, rep_roots, roots_mod_p, RepRoot, RootCount, RootFinding};
pub use parse::parse_poly;
pub use poly::{IntPoly, RatPoly};
pub use prime::{vp, Prime, Valuation};
pub use ratfun::RationalFunction;
