//! Human-readable form, e.g. `q^3 + q^2t + 2q^2 + 4qt + t^2 + 2q + 4t + 1`.
//!
//! Terms are printed by decreasing total degree and, within a total degree,
//! by decreasing `q` exponent.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};
use thiserror::Error;

use super::BivariatePolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse polynomial at byte {offset}: {message}")]
pub struct ParsePolynomialError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<_> = self.terms().collect();
        if terms.is_empty() {
            return f.write_str("0");
        }
        terms.sort_by_key(|&(q, t, _)| std::cmp::Reverse((q + t, q)));
        for (i, (a, b, c)) in terms.into_iter().enumerate() {
            let negative = c.sign() == Sign::Minus;
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.magnitude();
            let constant = a == 0 && b == 0;
            if constant || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            write_power(f, "q", a)?;
            write_power(f, "t", b)?;
        }
        Ok(())
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, var: &str, exp: usize) -> fmt::Result {
    match exp {
        0 => Ok(()),
        1 => f.write_str(var),
        _ => write!(f, "{var}^{exp}"),
    }
}

impl FromStr for BivariatePolynomial {
    type Err = ParsePolynomialError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Parser { src: s.as_bytes(), pos: 0 }.polynomial()
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn fail<T>(&self, message: impl Into<String>) -> Result<T, ParsePolynomialError> {
        Err(ParsePolynomialError {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<&str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn polynomial(mut self) -> Result<BivariatePolynomial, ParsePolynomialError> {
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let mut negative = false;
            match self.peek() {
                None if first => return self.fail("empty input"),
                None => break,
                Some(b'+') if !first => self.pos += 1,
                Some(b'-') => {
                    negative = true;
                    self.pos += 1;
                }
                Some(_) if first => {}
                Some(c) => return self.fail(format!("expected '+' or '-', found {:?}", c as char)),
            }
            first = false;
            let (a, b, mut c) = self.term()?;
            if negative {
                c = -c;
            }
            terms.push((a, b, c));
        }
        Ok(BivariatePolynomial::from_terms(terms))
    }

    fn term(&mut self) -> Result<(usize, usize, BigInt), ParsePolynomialError> {
        self.skip_ws();
        let mut coeff = BigInt::one();
        let mut saw_anything = false;
        if let Some(d) = self.digits() {
            coeff = d.parse().unwrap();
            saw_anything = true;
            if self.peek() == Some(b'*') {
                self.pos += 1;
            }
        }
        let (mut qe, mut te) = (0usize, 0usize);
        while let Some(c @ (b'q' | b't')) = self.peek() {
            self.pos += 1;
            saw_anything = true;
            let mut exp = 1;
            if self.peek() == Some(b'^') {
                self.pos += 1;
                self.skip_ws();
                match self.digits() {
                    Some(d) => {
                        exp = d.parse().or_else(|_| self.fail("exponent too large"))?
                    }
                    None => return self.fail("expected an exponent after '^'"),
                }
            }
            if c == b'q' {
                qe += exp;
            } else {
                te += exp;
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            }
        }
        if !saw_anything {
            return self.fail("expected a term");
        }
        if coeff.is_zero() {
            return Ok((0, 0, coeff));
        }
        Ok((qe, te, coeff))
    }
}
