//! Parser for integer polynomials in `x`, such as `-4*x^3 + x - 12`.
//!
//! ```text
//! poly   := term (('+' | '-') term)*
//! term   := ('+' | '-')* factor (['*'] factor)*
//! factor := integer | 'x' ['^' integer]
//! ```
//!
//! Whitespace may appear between any two tokens. Juxtaposition is accepted
//! between a factor and a following `x` (`3x^2`). Terms of equal degree are
//! summed. Error positions are character offsets into the input.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// Exponents above this are rejected rather than densified.
pub const MAX_DEGREE: usize = 100_000;

pub fn parse_poly(s: &str) -> Result<IntPoly> {
    Parser::new(s).parse()
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(s: &str) -> Self {
        Parser {
            chars: s.chars().collect(),
            pos: 0,
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<IntPoly> {
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut first = true;
        loop {
            let mut negative = false;
            if !first {
                match self.peek() {
                    None => break,
                    Some('+') => {}
                    Some('-') => negative = true,
                    Some(c) => return Err(self.err(format!("expected `+` or `-`, found `{c}`"))),
                }
                self.pos += 1;
            }
            first = false;
            let (c, deg) = self.term()?;
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, BigInt::zero());
            }
            if negative {
                coeffs[deg] -= c;
            } else {
                coeffs[deg] += c;
            }
        }
        Ok(IntPoly::new(coeffs))
    }

    fn term(&mut self) -> Result<(BigInt, usize)> {
        let mut coeff = BigInt::one();
        while let Some(sign @ ('+' | '-')) = self.peek() {
            if sign == '-' {
                coeff = -coeff;
            }
            self.pos += 1;
        }
        let mut degree = 0usize;
        self.factor(&mut coeff, &mut degree)?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    self.factor(&mut coeff, &mut degree)?;
                }
                Some(c) if c.is_alphabetic() => self.factor(&mut coeff, &mut degree)?,
                _ => break,
            }
            if degree > MAX_DEGREE {
                return Err(self.err(format!("degree exceeds {MAX_DEGREE}")));
            }
        }
        Ok((coeff, degree))
    }

    fn factor(&mut self, coeff: &mut BigInt, degree: &mut usize) -> Result<()> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                *coeff *= self.integer()?;
                Ok(())
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                let name: String = self.chars[start..]
                    .iter()
                    .take_while(|c| c.is_alphanumeric() || **c == '_')
                    .collect();
                if name != "x" {
                    return Err(Error::Variable { pos: start, name });
                }
                self.pos += 1;
                let exp = if self.peek() == Some('^') {
                    self.pos += 1;
                    if self.peek().is_some_and(|c| !c.is_ascii_digit()) {
                        return Err(self.err("exponent must be a nonnegative integer"));
                    }
                    let e = self.integer()?;
                    usize::try_from(e)
                        .ok()
                        .filter(|&e| e <= MAX_DEGREE)
                        .ok_or_else(|| self.err(format!("exponent exceeds {MAX_DEGREE}")))?
                } else {
                    1
                };
                *degree += exp;
                Ok(())
            }
            Some(c) => Err(self.err(format!("expected a number or `x`, found `{c}`"))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().expect("ascii digits"))
    }
}
