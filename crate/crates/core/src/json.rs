//! JSON wire formats.
//!
//! Coefficient arrays are lowest degree first. Every value that can exceed
//! 53 bits (coefficients, primes, digits, counts) is a decimal string;
//! small structural integers (`k`, lengths, `e`, `nu`) are JSON numbers.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::igusa::{BranchParams, ZetaReport};
use crate::padic::RepRoot;
use crate::poly::IntPoly;
use crate::ratfun::RationalFunction;

fn to_strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn parse_coeffs(xs: &[String]) -> Result<IntPoly> {
    let coeffs = xs
        .iter()
        .enumerate()
        .map(|(i, s)| {
            s.parse::<BigInt>().map_err(|_| Error::Parse {
                pos: i,
                msg: format!("coefficient `{s}` is not a decimal integer"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPoly::new(coeffs))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalFunctionJson {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

impl From<&RationalFunction> for RationalFunctionJson {
    fn from(r: &RationalFunction) -> Self {
        RationalFunctionJson {
            num: to_strings(r.numer().coeffs()),
            den: to_strings(r.denom().coeffs()),
        }
    }
}

impl TryFrom<&RationalFunctionJson> for RationalFunction {
    type Error = Error;

    fn try_from(j: &RationalFunctionJson) -> Result<Self> {
        RationalFunction::new(parse_coeffs(&j.num)?, parse_coeffs(&j.den)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchJson {
    pub e: u32,
    pub nu: u32,
    pub k_align: u32,
    pub prefix: Vec<String>,
}

impl From<&BranchParams> for BranchJson {
    fn from(b: &BranchParams) -> Self {
        BranchJson {
            e: b.e,
            nu: b.nu,
            k_align: b.k_align,
            prefix: to_strings(&b.prefix),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagnosticsJson {
    pub deg_a: usize,
    pub deg_b: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub poly: String,
    pub prime: String,
    pub delta: Option<u64>,
    pub k0: u32,
    pub n: usize,
    pub content_shift: u32,
    pub branches: Vec<BranchJson>,
    pub poincare: RationalFunctionJson,
    pub zeta: RationalFunctionJson,
    pub diagnostics: DiagnosticsJson,
}

impl From<&ZetaReport> for ReportJson {
    fn from(r: &ZetaReport) -> Self {
        ReportJson {
            poly: r.poly.to_string(),
            prime: r.prime.to_string(),
            delta: r.delta,
            k0: r.k0,
            n: r.n(),
            content_shift: r.content_shift,
            branches: r.branches.iter().map(BranchJson::from).collect(),
            poincare: (&r.poincare).into(),
            zeta: (&r.zeta).into(),
            diagnostics: DiagnosticsJson {
                deg_a: r.deg_numerator(),
                deg_b: r.deg_denominator(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepRootJson {
    pub digits: Vec<String>,
    pub length: usize,
}

impl From<&RepRoot> for RepRootJson {
    fn from(r: &RepRoot) -> Self {
        RepRootJson {
            digits: to_strings(r.digits()),
            length: r.len(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepRootsJson {
    pub poly: String,
    pub prime: String,
    pub k: u32,
    pub rep_roots: Vec<RepRootJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountJson {
    pub poly: String,
    pub prime: String,
    pub k: u32,
    pub count: String,
}

/// Output of the `poincare` and `zeta` commands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub poly: String,
    pub prime: String,
    pub text: String,
    #[serde(flatten)]
    pub value: RationalFunctionJson,
}

impl SeriesJson {
    pub fn new(poly: &IntPoly, prime: u64, r: &RationalFunction) -> Self {
        SeriesJson {
            poly: poly.to_string(),
            prime: prime.to_string(),
            text: r.to_string(),
            value: r.into(),
        }
    }
}
