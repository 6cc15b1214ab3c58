//! Dense univariate polynomials over `Z` and `Q`.
//!
//! [`IntPoly`] is the workhorse: the input polynomial, its derivative and
//! squarefree part, and the numerators and denominators of rational functions
//! are all stored this way. [`RatPoly`] only serves as an accumulator for
//! polynomials with rational coefficients before denominators are cleared.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::prime::Prime;

/// Polynomial with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`. The highest stored coefficient is
/// always nonzero; the zero polynomial has no coefficients at all.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Builds a polynomial from lowest-degree-first coefficients.
    pub fn from_coeffs<T: Into<BigInt>, I: IntoIterator<Item = T>>(coeffs: I) -> Self {
        Self::new(coeffs.into_iter().map(Into::into).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::new(vec![c.into()])
    }

    /// `c * x^n`.
    pub fn monomial<T: Into<BigInt>>(c: T, n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = c.into();
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> IntPoly {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Exact value `f(a)` by Horner's rule.
    pub fn eval(&self, a: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * a + c)
    }

    /// Nonnegative gcd of all coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `self / content(self)`, with the sign of the leading coefficient kept.
    pub fn primitive_part(&self) -> IntPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        self.div_scalar_exact(&c)
    }

    /// Primitive part made to have a positive leading coefficient.
    pub fn normalized(&self) -> IntPoly {
        let pp = self.primitive_part();
        if pp.leading_coeff().is_some_and(Signed::is_negative) {
            -&pp
        } else {
            pp
        }
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides every coefficient by `c`; the caller guarantees exactness.
    pub fn div_scalar_exact(&self, c: &BigInt) -> IntPoly {
        debug_assert!(self.coeffs.iter().all(|a| (a % c).is_zero()));
        Self::new(self.coeffs.iter().map(|a| a / c).collect())
    }

    /// Multiplies by `x^n`.
    pub fn shift_up(&self, n: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Divides by `x^n`, dropping the low coefficients.
    pub fn shift_down(&self, n: usize) -> IntPoly {
        Self::new(self.coeffs.iter().skip(n).cloned().collect())
    }

    /// `f(x + a)`.
    pub fn taylor_shift(&self, a: &BigInt) -> IntPoly {
        let mut c = self.coeffs.clone();
        let n = c.len();
        if n < 2 || a.is_zero() {
            return self.clone();
        }
        for i in 0..n - 1 {
            for j in (i..n - 1).rev() {
                let t = a * &c[j + 1];
                c[j] += t;
            }
        }
        Self::new(c)
    }

    /// `f(a + b*x)`.
    pub fn compose_affine(&self, a: &BigInt, b: &BigInt) -> IntPoly {
        let shifted = self.taylor_shift(a);
        let mut pow = BigInt::one();
        let mut coeffs = Vec::with_capacity(shifted.coeffs.len());
        for c in shifted.coeffs {
            coeffs.push(c * &pow);
            pow *= b;
        }
        Self::new(coeffs)
    }

    /// Coefficients reduced into `[0, m)`.
    pub fn reduce_mod(&self, m: &BigInt) -> IntPoly {
        Self::new(self.coeffs.iter().map(|c| c.mod_floor(m)).collect())
    }

    /// Splits off the `p`-adic content: returns `(c, g)` with `f = p^c * g`
    /// and `g mod p` not identically zero.
    pub fn content_and_primitive(&self, p: Prime) -> Result<(u32, IntPoly)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p = p.to_bigint();
        let mut g = self.clone();
        let mut c = 0;
        while g.coeffs.iter().all(|a| (a % &p).is_zero()) {
            g = g.div_scalar_exact(&p);
            c += 1;
        }
        Ok((c, g))
    }

    /// Pseudo-remainder of `self` by `divisor` (up to a power of the divisor's
    /// leading coefficient).
    fn pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        let db = divisor.degree().expect("nonzero divisor");
        let lb = divisor.leading_coeff().unwrap();
        let mut r = self.clone();
        while let Some(dr) = r.degree().filter(|&d| d >= db) {
            let lr = r.leading_coeff().unwrap().clone();
            let shift = dr - db;
            let mut coeffs: Vec<BigInt> = r.coeffs.iter().map(|c| c * lb).collect();
            for (i, c) in divisor.coeffs.iter().enumerate() {
                coeffs[i + shift] -= &lr * c;
            }
            r = IntPoly::new(coeffs);
        }
        r
    }

    /// Greatest common divisor over `Q`, returned as a primitive integer
    /// polynomial with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.normalized()
    }

    /// Exact quotient `self / divisor` in `Z[x]`, or `None` if `divisor` does
    /// not divide `self` there.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let db = divisor.degree()?;
        let lb = divisor.leading_coeff().unwrap();
        let mut r = self.coeffs.clone();
        let Some(dr) = self.degree() else {
            return Some(IntPoly::zero());
        };
        if dr < db {
            return None;
        }
        let mut q = vec![BigInt::zero(); dr - db + 1];
        for i in (0..=dr - db).rev() {
            let top = &r[i + db];
            let (qi, rem) = top.div_rem(lb);
            if !rem.is_zero() {
                return None;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                r[i + j] -= &qi * c;
            }
            q[i] = qi;
        }
        if r.iter().all(Zero::is_zero) {
            Some(IntPoly::new(q))
        } else {
            None
        }
    }

    /// Squarefree part `f / gcd(f, f')`, primitive with positive leading
    /// coefficient.
    pub fn squarefree_part(&self) -> Result<IntPoly> {
        match self.degree() {
            None => Err(Error::ZeroPolynomial),
            Some(0) => Err(Error::DegreeZero),
            Some(_) => {
                let f = self.normalized();
                let g = f.gcd(&f.derivative());
                let q = f
                    .div_exact(&g)
                    .expect("primitive gcd divides a primitive polynomial in Z[x]");
                Ok(q.normalized())
            }
        }
    }

    /// Formats the polynomial in descending powers of `var`, e.g.
    /// `2*x^2 - 3*x + 1`.
    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            match i {
                0 => out.push_str(&mag.to_string()),
                _ => {
                    if !mag.is_one() {
                        out.push_str(&mag.to_string());
                        out.push('*');
                    }
                    out.push_str(var);
                    if i > 1 {
                        out.push('^');
                        out.push_str(&i.to_string());
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

/// Determinant by fraction-free Gaussian elimination.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Resultant of `f` and `g`: the determinant of their Sylvester matrix, with
/// the rows of `f` on top.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return Err(Error::ZeroPolynomial);
    };
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in f.coeffs.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in g.coeffs.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    Ok(bareiss_det(rows))
}

/// Discriminant with the leading coefficient raised to `2m - 1` instead of
/// the usual `2m - 2`, i.e. `lc(h)` times the standard discriminant. Linear
/// polynomials have discriminant 1.
pub fn discriminant_paper(h: &IntPoly) -> Result<BigInt> {
    let m = match h.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::DegreeZero),
        Some(1) => return Ok(BigInt::one()),
        Some(m) => m,
    };
    // lc * (-1)^{m(m-1)/2} * Res(h, h') / lc
    let res = resultant(h, &h.derivative())?;
    Ok(if (m * (m - 1) / 2) % 2 == 1 { -res } else { res })
}

/// Polynomial with exact rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Adds `c * x^i` in place.
    pub fn add_term(&mut self, i: usize, c: BigRational) {
        if self.coeffs.len() <= i {
            self.coeffs.resize(i + 1, BigRational::zero());
        }
        self.coeffs[i] += c;
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Writes `self = poly / den` with `poly` integral and `den` the positive
    /// lcm of the coefficient denominators.
    pub fn clear_denominators(&self) -> (IntPoly, BigInt) {
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let poly = IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| c.numer() * (&den / c.denom()))
                .collect(),
        );
        (poly, den)
    }
}

impl From<&IntPoly> for RatPoly {
    fn from(f: &IntPoly) -> Self {
        RatPoly {
            coeffs: f
                .coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;

    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}
