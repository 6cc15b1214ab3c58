//! Exact rational functions in a formal variable `t`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{IntPoly, RatPoly};

/// A quotient `num / den` of integer polynomials in canonical form.
///
/// Canonical means: `num` and `den` have no common factor of positive degree,
/// the gcd of all their coefficients taken together is 1, and the lowest
/// nonzero coefficient of `den` is positive. For the series this crate deals
/// with that is `den(0) > 0`. Zero is `0 / 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntPoly,
    den: IntPoly,
}

impl RationalFunction {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_scalar_exact(&c);
            den = den.div_scalar_exact(&c);
        }
        let low = den.coeffs().iter().find(|c| !c.is_zero()).unwrap();
        if low.is_negative() {
            num = -&num;
            den = -&den;
        }
        Ok(RationalFunction { num, den })
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(IntPoly::one())
    }

    /// The variable `t` itself.
    pub fn t() -> Self {
        Self::from_poly(IntPoly::x())
    }

    pub fn from_poly(p: IntPoly) -> Self {
        Self::new(p, IntPoly::one()).expect("nonzero denominator")
    }

    pub fn from_ratpoly(p: &RatPoly) -> Self {
        let (num, den) = p.clear_denominators();
        Self::new(num, IntPoly::constant(den)).expect("nonzero denominator")
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(
            IntPoly::constant(c.numer().clone()),
            IntPoly::constant(c.denom().clone()),
        )
        .expect("nonzero denominator")
    }

    pub fn numer(&self) -> &IntPoly {
        &self.num
    }

    pub fn denom(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Multiplies by the rational constant `c`.
    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.num.scale(c.numer()), self.den.scale(c.denom()))
            .expect("nonzero denominator")
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// The first `order + 1` Maclaurin coefficients, from the recurrence
    /// `c_j = (num_j - sum_{i >= 1} den_i c_{j-i}) / den_0`.
    pub fn series_expand(&self, order: usize) -> Result<Vec<BigRational>> {
        let den0 = self.den.coeff(0);
        if den0.is_zero() {
            return Err(Error::PoleAtZero);
        }
        let den0 = BigRational::from_integer(den0);
        let mut out: Vec<BigRational> = Vec::with_capacity(order + 1);
        for j in 0..=order {
            let mut acc = BigRational::from_integer(self.num.coeff(j));
            for (i, d) in self.den.coeffs().iter().enumerate().skip(1).take(j) {
                if !d.is_zero() {
                    acc -= &out[j - i] * BigRational::from_integer(d.clone());
                }
            }
            out.push(acc / &den0);
        }
        Ok(out)
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<IntPoly> for RationalFunction {
    fn from(p: IntPoly) -> Self {
        Self::from_poly(p)
    }
}

/// `(A)/(B)` with both sides in descending powers of `t`.
impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})/({})",
            self.num.to_string_in("t"),
            self.den.to_string_in("t")
        )
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone()).unwrap();
        }
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .unwrap()
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

/// Panics on division by zero; see [`RationalFunction::checked_div`].
impl Div for &RationalFunction {
    type Output = RationalFunction;

    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl std::iter::Sum for RationalFunction {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(RationalFunction::zero(), |acc, x| &acc + &x)
    }
}
