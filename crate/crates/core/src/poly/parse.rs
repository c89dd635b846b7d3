//! Parser for the polynomial input grammar.
//!
//! ```text
//! poly  := ws sign? term (ws ('+' | '-') ws term)* ws
//! term  := INT (ws '*'? ws xpow)? | xpow
//! xpow  := 'x' (ws '^' ws UINT)?
//! ```
//!
//! Whitespace is insignificant, there are no parentheses and no nested
//! powers. Like terms are summed.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{IntPoly, PolyError};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, message: impl Into<String>) -> PolyError {
        PolyError::Syntax { position: self.pos, message: message.into() }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn reject_fraction(&self) -> Result<(), PolyError> {
        match self.src.get(self.pos) {
            Some(b'.') | Some(b'/') => Err(PolyError::NonIntegerCoefficient { position: self.pos }),
            _ => Ok(()),
        }
    }

    /// `'x' ('^' UINT)?`, cursor on the `x`.
    fn xpow(&mut self) -> Result<usize, PolyError> {
        self.pos += 1;
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        let Some(d) = self.digits() else {
            return Err(self.err("expected a non-negative integer exponent after '^'"));
        };
        d.parse::<usize>().map_err(|_| self.err("exponent out of range"))
    }

    /// Returns `(coefficient magnitude, exponent)` for one term.
    fn term(&mut self) -> Result<(BigInt, usize), PolyError> {
        match self.peek() {
            Some(b'x') => Ok((BigInt::from(1), self.xpow()?)),
            Some(c) if c.is_ascii_digit() => {
                let lit = self.digits().unwrap();
                self.reject_fraction()?;
                let coeff: BigInt = lit.parse().unwrap();
                match self.peek() {
                    Some(b'*') => {
                        self.pos += 1;
                        if self.peek() != Some(b'x') {
                            return Err(self.err("expected 'x' after '*'"));
                        }
                        Ok((coeff, self.xpow()?))
                    }
                    Some(b'x') => Ok((coeff, self.xpow()?)),
                    _ => Ok((coeff, 0)),
                }
            }
            Some(b'.') => Err(PolyError::NonIntegerCoefficient { position: self.pos }),
            Some(_) => Err(self.err("expected an integer or 'x'")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

pub fn parse_poly(text: &str) -> Result<IntPoly, PolyError> {
    let mut cur = Cursor { src: text.as_bytes(), pos: 0 };
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut negative = match cur.peek() {
        Some(b'-') => {
            cur.pos += 1;
            true
        }
        Some(b'+') => {
            cur.pos += 1;
            false
        }
        _ => false,
    };
    loop {
        let (mag, exp) = cur.term()?;
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, BigInt::zero());
        }
        if negative {
            coeffs[exp] -= mag;
        } else {
            coeffs[exp] += mag;
        }
        match cur.peek() {
            None => break,
            Some(b'+') => negative = false,
            Some(b'-') => negative = true,
            Some(b'^') => return Err(cur.err("nested or misplaced '^'")),
            Some(_) => return Err(cur.err("expected '+' or '-'")),
        }
        cur.pos += 1;
    }
    Ok(IntPoly::new(coeffs))
}
