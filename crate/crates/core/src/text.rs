// SPDX-License-Identifier: Apache-2.0

//! Parsing of field elements, polynomials, rational functions and places.
//!
//! Expressions use `+ - * / ^`, parentheses, integer literals and at most
//! one variable letter. Over `F_{p^m}` with `m > 1` the letter `z` is the
//! field generator. Juxtaposition such as `3x` or `2(x+1)` multiplies.
//! Errors carry the byte offset where parsing failed.

use crate::error::{Error, Result};
use crate::funcfield::{Place, RationalFunction};
use crate::galois::Field;
use crate::polyring::Polynomial;

const MAX_EXPONENT: u64 = 1 << 16;

/// A rational function together with the variable letter it was written in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parsed {
    pub value: RationalFunction,
    pub var: Option<char>,
}

struct Parser<'a> {
    field: &'a Field,
    src: &'a str,
    pos: usize,
    var: Option<char>,
    allow_var: bool,
}

impl<'a> Parser<'a> {
    fn new(field: &'a Field, src: &'a str, allow_var: bool) -> Self {
        Parser {
            field,
            src,
            pos: 0,
            var: None,
            allow_var,
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> char {
        let c = self.src[self.pos..].chars().next().expect("peeked");
        self.pos += c.len_utf8();
        c
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(Error::parse(self.pos, format!("unexpected '{c}'"))),
        }
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.bump();
                -&self.term()?
            }
            Some('+') => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some('-') => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    acc = &acc * &self.power()?;
                }
                Some('/') => {
                    let at = self.pos;
                    self.bump();
                    let d = self.power()?;
                    acc = acc
                        .div(&d)
                        .map_err(|_| Error::parse(at, "division by zero"))?;
                }
                Some(c) if c == '(' || c.is_ascii_alphanumeric() => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        let at = self.pos;
        self.bump();
        let negative = if self.peek() == Some('-') {
            self.bump();
            true
        } else {
            false
        };
        self.skip_ws();
        let start = self.pos;
        let digits = self.src[start..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if digits == 0 {
            return Err(Error::parse(start, "expected an exponent"));
        }
        self.pos += digits;
        let e = self.src[start..self.pos]
            .parse::<u64>()
            .ok()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or_else(|| Error::parse(start, format!("exponent exceeds {MAX_EXPONENT}")))?;
        let e = if negative { -(e as i64) } else { e as i64 };
        base.pow(e)
            .map_err(|_| Error::parse(at, "negative power of zero"))
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        let next = self.peek();
        let at = self.pos;
        match next {
            None => Err(Error::parse(self.pos, "unexpected end of input")),
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                match self.peek() {
                    Some(')') => {
                        self.bump();
                        Ok(inner)
                    }
                    _ => Err(Error::parse(self.pos, "expected ')'")),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let p = self.field.p();
                let mut n = 0u64;
                while let Some(d) = self.src[self.pos..].bytes().next().filter(u8::is_ascii_digit) {
                    n = (n * 10 + u64::from(d - b'0')) % p;
                    self.pos += 1;
                }
                debug_assert!(self.pos > start);
                Ok(RationalFunction::constant(self.field, n))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let len = self.src[start..]
                    .bytes()
                    .take_while(u8::is_ascii_alphabetic)
                    .count();
                self.pos += len;
                if len > 1 {
                    return Err(Error::parse(
                        start,
                        format!("unknown identifier '{}'", &self.src[start..self.pos]),
                    ));
                }
                if c == 'z' && !self.field.is_prime_field() {
                    return Ok(RationalFunction::constant(self.field, self.field.generator()));
                }
                if !self.allow_var {
                    return Err(Error::parse(start, format!("unexpected variable '{c}'")));
                }
                match self.var {
                    Some(v) if v != c => Err(Error::parse(
                        start,
                        format!("second variable '{c}' after '{v}'"),
                    )),
                    _ => {
                        self.var = Some(c);
                        Ok(RationalFunction::x(self.field))
                    }
                }
            }
            Some(c) => Err(Error::parse(at, format!("unexpected '{c}'"))),
        }
    }
}

/// Parses a rational function in one variable.
pub fn parse_function(field: &Field, src: &str) -> Result<Parsed> {
    let mut p = Parser::new(field, src, true);
    let value = p.expr()?;
    p.finish()?;
    Ok(Parsed { value, var: p.var })
}

/// Parses a polynomial; a nonconstant denominator is an error.
pub fn parse_polynomial(field: &Field, src: &str) -> Result<Polynomial> {
    let f = parse_function(field, src)?.value;
    if !f.is_polynomial() {
        return Err(Error::parse(0, "expected a polynomial"));
    }
    Ok(f.num().clone())
}

/// Parses a constant expression as a field element.
pub fn parse_element(field: &Field, src: &str) -> Result<u64> {
    let mut p = Parser::new(field, src, false);
    let value = p.expr()?;
    p.finish()?;
    Ok(value.num().coeff(0))
}

/// Parses `inf`, a monic irreducible polynomial, or `x=a`, each optionally
/// in parentheses.
pub fn parse_place(field: &Field, src: &str) -> Result<Place> {
    let trimmed = src.trim();
    let offset = src.len() - src.trim_start().len();
    let (body, offset) = match trimmed.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
        Some(inner) if inner.contains('=') => (inner, offset + 1),
        _ => (trimmed, offset),
    };
    if let Some(eq) = body.find('=') {
        let lhs = body[..eq].trim();
        if lhs.len() != 1 || !lhs.bytes().all(|b| b.is_ascii_alphabetic()) {
            return Err(Error::parse(offset, "expected a variable before '='"));
        }
        let rhs = &body[eq + 1..];
        if matches!(rhs.trim(), "inf" | "∞") {
            return Ok(Place::Infinite);
        }
        let a = parse_element(field, rhs).map_err(|e| shift(e, offset + eq + 1))?;
        return Ok(Place::rational(field, a));
    }
    if matches!(body, "inf" | "∞") {
        return Ok(Place::Infinite);
    }
    let poly = parse_polynomial(field, src)?;
    Place::finite(poly)
}

/// Parses a comma-separated list of places; the empty string is the empty list.
pub fn parse_place_list(field: &Field, src: &str) -> Result<Vec<Place>> {
    if src.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut start = 0;
    for part in src.split(',') {
        out.push(parse_place(field, part).map_err(|e| shift(e, start))?);
        start += part.len() + 1;
    }
    Ok(out)
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + by, msg },
        other => other,
    }
}
