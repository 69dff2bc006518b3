//! Small expression parser for rationals, univariate polynomials, and ring
//! descriptor literals. Errors carry a byte position for diagnostics.
//!
//! Grammar: sums of products of powers; atoms are rational literals
//! (`p` or `p/q`), the ring variable, and parenthesized expressions.
//! `/` only joins integer literals.

use period_core::rings::poly::UniPoly;
use period_core::rings::rational::Rational;
use period_core::rings::RingDescriptor;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "at byte {}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
    var: Option<&'a str>,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str, var: Option<&'a str>) -> Self {
        Parser {
            input: input.as_bytes(),
            pos: 0,
            var,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse_uint(&mut self) -> Result<num_bigint::BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a number");
        }
        let s = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn parse_ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.input.len() && self.input[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
            while self.pos < self.input.len()
                && (self.input[self.pos].is_ascii_alphanumeric() || self.input[self.pos] == b'_')
            {
                self.pos += 1;
            }
            Some(std::str::from_utf8(&self.input[start..self.pos]).unwrap().to_string())
        } else {
            None
        }
    }

    // expr := term (('+'|'-') term)*
    fn parse_expr(&mut self) -> Result<UniPoly, ParseError> {
        let mut acc = self.parse_term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    let t = self.parse_term()?;
                    acc = &acc + &t;
                }
                Some(b'-') => {
                    self.bump();
                    let t = self.parse_term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := factor ('*' factor)*
    fn parse_term(&mut self) -> Result<UniPoly, ParseError> {
        let mut acc = self.parse_factor()?;
        while self.eat(b'*') {
            let f = self.parse_factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    // factor := atom ('^' uint)?
    fn parse_factor(&mut self) -> Result<UniPoly, ParseError> {
        let base = self.parse_atom()?;
        if self.eat(b'^') {
            let e = self.parse_uint()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| ParseError {
                    pos: self.pos,
                    message: "exponent too large".into(),
                })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn parse_atom(&mut self) -> Result<UniPoly, ParseError> {
        match self.peek() {
            Some(b'-') => {
                self.bump();
                let a = self.parse_atom()?;
                Ok(-&a)
            }
            Some(b'(') => {
                self.bump();
                let e = self.parse_expr()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.parse_uint()?;
                // a '/' directly after an integer makes a rational literal
                if self.eat(b'/') {
                    let d = self.parse_uint()?;
                    if d == num_bigint::BigInt::from(0) {
                        return self.err("zero denominator");
                    }
                    return Ok(UniPoly::constant(Rational::new(n, d)));
                }
                Ok(UniPoly::constant(Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let ident = self.parse_ident().unwrap();
                match self.var {
                    Some(v) if ident == v => Ok(UniPoly::variable()),
                    Some(v) => Err(ParseError {
                        pos: start,
                        message: format!("unknown symbol '{}', the variable is '{}'", ident, v),
                    }),
                    None => Err(ParseError {
                        pos: start,
                        message: format!("unexpected symbol '{}' in a constant expression", ident),
                    }),
                }
            }
            Some(c) => self.err(format!("unexpected character '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }

    fn expect_end(&mut self) -> Result<(), ParseError> {
        if self.peek().is_some() {
            return self.err("trailing input");
        }
        Ok(())
    }
}

/// Parse a polynomial expression in the named variable.
pub fn parse_poly(input: &str, var: &str) -> Result<UniPoly, ParseError> {
    let mut p = Parser::new(input, Some(var));
    let e = p.parse_expr()?;
    p.expect_end()?;
    Ok(e)
}

/// Parse a rational constant (`p`, `-p/q`, or any constant expression).
pub fn parse_rational(input: &str) -> Result<Rational, ParseError> {
    let mut p = Parser::new(input, None);
    let e = p.parse_expr()?;
    p.expect_end()?;
    Ok(e.coeff(0))
}

/// Parse a ring descriptor literal: `Q`, `Q[x]`, or `Q[x]/(f)`.
pub fn parse_ring(input: &str) -> Result<RingDescriptor, ParseError> {
    let s = input.trim();
    if s == "Q" {
        return Ok(RingDescriptor::Rationals);
    }
    let err = |pos: usize, message: &str| ParseError {
        pos,
        message: message.to_string(),
    };
    if !s.starts_with("Q[") {
        return Err(err(0, "expected 'Q', 'Q[var]' or 'Q[var]/(f)'"));
    }
    let close = s
        .find(']')
        .ok_or_else(|| err(s.len(), "missing ']' in ring literal"))?;
    let var = &s[2..close];
    if var.is_empty()
        || !var.chars().next().unwrap().is_ascii_alphabetic()
        || !var.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
    {
        return Err(err(2, "ring variable must be an identifier"));
    }
    let rest = &s[close + 1..];
    if rest.is_empty() {
        return Ok(RingDescriptor::poly_ring(var));
    }
    let inner = rest
        .strip_prefix("/(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| err(close + 1, "expected '/(modulus)' after 'Q[var]'"))?;
    let modulus = parse_poly(inner, var)?;
    if modulus.degree().unwrap_or(0) < 1 {
        return Err(err(close + 3, "quotient modulus must have degree >= 1"));
    }
    RingDescriptor::quotient(var, modulus).map_err(|e| err(close + 3, &e.to_string()))
}

/// Render a ring element string in canonical form for family files.
pub fn poly_to_entry(p: &UniPoly, var: &str) -> String {
    if p.is_one() {
        return "1".to_string();
    }
    p.display_with(var)
}

#[cfg(test)]
mod tests {
    use super::*;
    use period_core::rings::rational::{rat, rat_int};

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("3/2").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-7").unwrap(), rat_int(-7));
        assert_eq!(parse_rational(" - 5 / 10 ").unwrap(), rat(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn polynomials() {
        let p = parse_poly("x^2 - 2", "x").unwrap();
        assert_eq!(p, UniPoly::from_i64_coeffs(&[-2, 0, 1]));
        let q = parse_poly("(x - 1)^2 * (x + 1/2)", "x").unwrap();
        assert_eq!(q.degree(), Some(3));
        assert!(q.eval(&rat_int(1)).is_one() == false);
        assert!(q.eval(&rat(-1, 2)).is_zero());
        assert!(parse_poly("y + 1", "x").is_err());
        assert!(parse_poly("x +", "x").is_err());
        assert!(One::is_one(&parse_poly("1", "x").unwrap().coeff(0)));
    }

    #[test]
    fn error_positions() {
        let e = parse_poly("x + $", "x").unwrap_err();
        assert_eq!(e.pos, 4);
    }

    #[test]
    fn rings() {
        assert_eq!(parse_ring("Q").unwrap(), RingDescriptor::Rationals);
        assert_eq!(parse_ring("Q[x]").unwrap(), RingDescriptor::poly_ring("x"));
        assert_eq!(parse_ring("Q[t]").unwrap(), RingDescriptor::poly_ring("t"));
        let q = parse_ring("Q[x]/(x^2 - 2)").unwrap();
        assert_eq!(q.to_string(), "Q[x]/(x^2 - 2)");
        assert!(parse_ring("Z[x]").is_err());
        assert!(parse_ring("Q[x]/(3)").is_err());
        assert!(parse_ring("Q[]").is_err());
    }

    #[test]
    fn roundtrip_through_display() {
        for s in ["x^3 - 6*x^2 + 11*x - 6", "-x + 1/2", "0", "7"] {
            let p = parse_poly(s, "x").unwrap();
            assert_eq!(parse_poly(&p.to_string(), "x").unwrap(), p);
        }
    }

    use num_traits::{One, Zero};
}
