//! The textual datum literal:
//! `omega: {w: m, ...}; delta: {(i,j): d, ...}` with sorted keys.
//! `DeRhamDatum`'s `Display` emits the same form.

use period_core::datum::{DeRhamDatum, Delta, Omega, Violation};

#[derive(Debug, Clone)]
pub enum LiteralError {
    Syntax { pos: usize, message: String },
    Invalid(Vec<Violation>),
}

impl std::fmt::Display for LiteralError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LiteralError::Syntax { pos, message } => {
                write!(f, "datum literal, byte {}: {}", pos, message)
            }
            LiteralError::Invalid(vs) => {
                write!(f, "invalid datum:")?;
                for v in vs {
                    write!(f, " [{}]", v)?;
                }
                Ok(())
            }
        }
    }
}

impl std::error::Error for LiteralError {}

struct Scan<'a> {
    input: &'a [u8],
    pos: usize,
}

impl<'a> Scan<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, LiteralError> {
        Err(LiteralError::Syntax {
            pos: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.input.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), LiteralError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn expect_word(&mut self, w: &str) -> Result<(), LiteralError> {
        self.skip_ws();
        if self.input[self.pos..].starts_with(w.as_bytes()) {
            self.pos += w.len();
            Ok(())
        } else {
            self.err(format!("expected '{}'", w))
        }
    }

    fn parse_int(&mut self) -> Result<i64, LiteralError> {
        self.skip_ws();
        let start = self.pos;
        if self.input.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start || (self.pos == start + 1 && self.input[start] == b'-') {
            return self.err("expected an integer");
        }
        std::str::from_utf8(&self.input[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| LiteralError::Syntax {
                pos: start,
                message: "integer out of range".into(),
            })
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.input.len()
    }
}

/// Parse the raw parts without validating the axioms.
pub fn parse_datum_parts(input: &str) -> Result<(Omega, Delta), LiteralError> {
    let mut s = Scan {
        input: input.as_bytes(),
        pos: 0,
    };
    s.expect_word("omega")?;
    s.expect(b':')?;
    s.expect(b'{')?;
    let mut omega = Omega::new();
    if !s.eat(b'}') {
        loop {
            let w = s.parse_int()?;
            s.expect(b':')?;
            let m = s.parse_int()?;
            if m < 0 {
                return s.err("multiplicities must be nonnegative");
            }
            if m > 0 {
                omega.insert(w, m as u32);
            }
            if s.eat(b'}') {
                break;
            }
            s.expect(b',')?;
        }
    }
    s.expect(b';')?;
    s.expect_word("delta")?;
    s.expect(b':')?;
    s.expect(b'{')?;
    let mut delta = Delta::new();
    if !s.eat(b'}') {
        loop {
            s.expect(b'(')?;
            let i = s.parse_int()?;
            s.expect(b',')?;
            let j = s.parse_int()?;
            s.expect(b')')?;
            s.expect(b':')?;
            let d = s.parse_int()?;
            if d < 0 {
                return s.err("delta values must be nonnegative");
            }
            delta.insert((i, j), d as u32);
            if s.eat(b'}') {
                break;
            }
            s.expect(b',')?;
        }
    }
    if !s.at_end() {
        return s.err("trailing input after datum literal");
    }
    Ok((omega, delta))
}

/// Parse and validate.
pub fn parse_datum(input: &str) -> Result<DeRhamDatum, LiteralError> {
    let (omega, delta) = parse_datum_parts(input)?;
    DeRhamDatum::validate(&omega, &delta).map_err(LiteralError::Invalid)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let s = "omega: {0: 1, 1: 1}; delta: {(0,1): 1, (0,2): 1, (1,2): 1}";
        let d = parse_datum(s).unwrap();
        assert_eq!(d.to_string(), s);
        let zero = parse_datum("omega: {}; delta: {}").unwrap();
        assert!(zero.is_zero());
        assert_eq!(zero.to_string(), "omega: {}; delta: {}");
    }

    #[test]
    fn whitespace_tolerant() {
        let d = parse_datum("omega:{0:2};delta:{ ( 0 , 1 ) : 2 }").unwrap();
        assert_eq!(d.omega_at(0), 2);
    }

    #[test]
    fn invalid_axioms_reported() {
        let e = parse_datum("omega: {0: 1}; delta: {(0,1): 0}").unwrap_err();
        assert!(matches!(e, LiteralError::Invalid(_)));
    }

    #[test]
    fn syntax_errors_positioned() {
        let e = parse_datum("omega: {0 1}; delta: {}").unwrap_err();
        assert!(matches!(e, LiteralError::Syntax { .. }));
    }
}
