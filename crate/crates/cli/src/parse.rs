//! Polynomial expressions in `x, y, z` (also `x1, x2, x3`) with rational
//! coefficients, `+ - * / ^`, parentheses and implicit multiplication.

use num_traits::{One, Zero};
use quartic_reduction::forms::TernaryForm;
use quartic_reduction::rational::{parse_rational, Rational};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

type Poly = BTreeMap<[u32; 3], Rational>;

fn constant(c: Rational) -> Poly {
    let mut p = Poly::new();
    if !c.is_zero() {
        p.insert([0, 0, 0], c);
    }
    p
}

fn add(mut a: Poly, b: &Poly, sign: &Rational) -> Poly {
    for (e, c) in b {
        let v = a.remove(e).unwrap_or_else(Rational::zero) + c * sign;
        if !v.is_zero() {
            a.insert(*e, v);
        }
    }
    a
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
            let v = out.remove(&e).unwrap_or_else(Rational::zero) + ca * cb;
            if !v.is_zero() {
                out.insert(e, v);
            }
        }
    }
    out
}

fn as_constant(p: &Poly) -> Option<Rational> {
    match p.len() {
        0 => Some(Rational::zero()),
        1 => p.get(&[0, 0, 0]).cloned(),
        _ => None,
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, at: usize, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { position: at, message: msg.into() })
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

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            let sign = if c == b'+' { Rational::one() } else { -Rational::one() };
            acc = add(acc, &t, &sign);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.unary()?;
                    acc = mul(&acc, &f);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let f = self.unary()?;
                    match as_constant(&f) {
                        Some(c) if !c.is_zero() => acc = mul(&acc, &constant(Rational::one() / c)),
                        Some(_) => return self.err(at, "division by zero"),
                        None => return self.err(at, "division by a non-constant polynomial"),
                    }
                }
                Some(c) if c.is_ascii_digit() || c == b'(' || c == b'x' || c == b'y' || c == b'z' => {
                    let f = self.power()?;
                    acc = mul(&acc, &f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Poly, ParseError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                let p = self.unary()?;
                Ok(add(Poly::new(), &p, &-Rational::one()))
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.primary()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return self.err(at, "expected a non-negative integer exponent");
            }
            let e: u32 = match digits.parse() {
                Ok(e) if e <= 64 => e,
                _ => return self.err(at, "exponent too large"),
            };
            let mut acc = constant(Rational::one());
            for _ in 0..e {
                acc = mul(&acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn primary(&mut self) -> Result<Poly, ParseError> {
        let at = match self.peek() {
            Some(_) => self.pos,
            None => return self.err(self.src.len(), "unexpected end of input"),
        };
        let c = self.src[at];
        match c {
            b'(' => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err(self.pos.min(self.src.len()), "expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            b'0'..=b'9' => {
                let d = self.digits();
                let v = parse_rational(&d).expect("digit string is an integer");
                Ok(constant(v))
            }
            b'x' | b'y' | b'z' => {
                self.pos += 1;
                let mut var = (c - b'x') as usize;
                // x1, x2, x3 name the same variables as x, y, z.
                if c == b'x' {
                    if let Some(d @ b'1'..=b'3') = self.src.get(self.pos).copied() {
                        self.pos += 1;
                        var = (d - b'1') as usize;
                    }
                }
                let mut e = [0u32; 3];
                e[var] = 1;
                let mut p = Poly::new();
                p.insert(e, Rational::one());
                Ok(p)
            }
            _ => self.err(at, format!("unexpected character '{}'", c as char)),
        }
    }
}

/// Parse an expression into a sparse polynomial map.
fn parse_poly(src: &str) -> Result<Poly, ParseError> {
    let mut p = Parser { src: src.as_bytes(), pos: 0 };
    let out = p.expr()?;
    if let Some(c) = p.peek() {
        return p.err(p.pos, format!("unexpected character '{}'", c as char));
    }
    Ok(out)
}

/// Parse a homogeneous quartic in `x, y, z`.
pub fn parse_quartic(src: &str) -> Result<TernaryForm, ParseError> {
    let poly = parse_poly(src)?;
    let bad = |m: &str| Err(ParseError { position: 0, message: m.into() });
    if poly.is_empty() {
        return bad("the polynomial is zero");
    }
    if poly.keys().any(|e| e.iter().sum::<u32>() != 4) {
        return bad("expected a homogeneous polynomial of degree 4");
    }
    Ok(TernaryForm::from_terms(4, poly))
}

/// Parse one rational coefficient such as `-3/4` or `12`.
pub fn parse_coefficient(s: &str) -> Result<Rational, ParseError> {
    parse_rational(s.trim()).ok_or(ParseError { position: 0, message: format!("invalid rational '{s}'") })
}
