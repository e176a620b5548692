//! Text input: polynomials in the indexed variable families, rationals, and
//! labelled sums such as `s[2,2]+2s31`.

use num_bigint::BigInt;
use thiserror::Error;

use crate::ring::{Family, VarId};
use crate::scalar::Rat;
use crate::QPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
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

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.err(format!("unexpected '{}'", c as char)),
        }
    }

    fn uint(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    fn small_uint(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        let n = self.uint()?;
        u32::try_from(n).or_else(|_| {
            Err(ParseError {
                offset: start,
                message: "number too large".into(),
            })
        })
    }

    fn index(&mut self, signed: bool) -> Result<i32, ParseError> {
        let neg = signed && self.eat(b'-');
        let start = self.pos;
        let n = self.uint()?;
        let n = i32::try_from(n).or_else(|_| {
            Err(ParseError {
                offset: start,
                message: "index too large".into(),
            })
        })?;
        Ok(if neg { -n } else { n })
    }

    fn rational(&mut self) -> Result<Rat, ParseError> {
        let n = self.uint()?;
        if self.eat(b'/') {
            let at = self.pos;
            let d = self.uint()?;
            if d == BigInt::from(0) {
                self.pos = at;
                return self.err("zero denominator");
            }
            return Ok(Rat::new(n, d));
        }
        Ok(Rat::from_integer(n))
    }

    fn var(&mut self) -> Result<VarId, ParseError> {
        let start = self.pos;
        let c = self.src[self.pos];
        self.pos += 1;
        let family = match c {
            b'c' => Family::C,
            b'a' => Family::A,
            b'b' => Family::B,
            b'w' => Family::W,
            b'd' => Family::D,
            b'z' => Family::Z,
            b'x' => Family::X,
            b't' => Family::T,
            b's' => return Ok(VarId::s()),
            b'h' => {
                if self.src[self.pos..].starts_with(b"bar") {
                    self.pos += 3;
                    return Ok(VarId::hbar());
                }
                self.pos = start;
                return self.err("unknown variable");
            }
            _ => {
                self.pos = start;
                return self.err("unknown variable");
            }
        };
        let i = self.index(family == Family::D)?;
        match VarId::new(family, i) {
            Some(v) => Ok(v),
            None => {
                self.pos = start;
                self.err("index out of range")
            }
        }
    }

    fn primary(&mut self) -> Result<QPoly, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(QPoly::constant(self.rational()?)),
            Some(c) if c.is_ascii_alphabetic() => Ok(QPoly::var(self.var()?)),
            Some(c) => self.err(format!("unexpected '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }

    fn factor(&mut self) -> Result<QPoly, ParseError> {
        let mut p = self.primary()?;
        while self.eat(b'^') {
            let e = self.small_uint()?;
            p = p.pow(e);
        }
        Ok(p)
    }

    fn starts_factor(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c == b'(' || c.is_ascii_alphanumeric())
    }

    fn term(&mut self) -> Result<QPoly, ParseError> {
        let mut p = self.factor()?;
        loop {
            if self.eat(b'*') {
                p = &p * &self.factor()?;
            } else if self.starts_factor() {
                p = &p * &self.factor()?;
            } else {
                return Ok(p);
            }
        }
    }

    fn expr(&mut self) -> Result<QPoly, ParseError> {
        let mut acc = if self.eat(b'-') {
            -self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc += &self.term()?;
            } else if self.eat(b'-') {
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn label(&mut self) -> Result<Vec<i32>, ParseError> {
        self.skip_ws();
        if self.eat(b'[') {
            let mut v = Vec::new();
            if self.eat(b']') {
                return Ok(v);
            }
            loop {
                v.push(self.index(true)?);
                if self.eat(b']') {
                    return Ok(v);
                }
                if !self.eat(b',') {
                    return self.err("expected ',' or ']'");
                }
            }
        }
        let mut v = Vec::new();
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            v.push((self.src[self.pos] - b'0') as i32);
            self.pos += 1;
        }
        Ok(v)
    }
}

/// Parse a polynomial.
///
/// ```text
/// expr    := ['+'|'-'] term (('+'|'-') term)*
/// term    := factor ('*'? factor)*
/// factor  := primary ('^' uint)*
/// primary := rational | var | '(' expr ')'
/// var     := [cabwdzxt] index | 'hbar' | 's'      (d takes a signed index)
/// ```
pub fn parse_poly(text: &str) -> Result<QPoly, ParseError> {
    let mut p = Parser::new(text);
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parse `n`, `-n`, `n/d` or `-n/d`.
pub fn parse_rational(text: &str) -> Result<Rat, ParseError> {
    let mut p = Parser::new(text);
    let neg = p.eat(b'-');
    let q = p.rational()?;
    p.finish()?;
    Ok(if neg { -q } else { q })
}

/// Parse a sum of labelled symbols such as `s[2,2]+2s31-1/2s[3,-1]`.
/// A bare label of digits reads one entry per digit. Repeated labels are
/// returned as written.
pub fn parse_labelled(text: &str, prefix: u8) -> Result<Vec<(Vec<i32>, Rat)>, ParseError> {
    let mut p = Parser::new(text);
    let mut out = Vec::new();
    let mut first = true;
    while p.peek().is_some() {
        let neg = if p.eat(b'-') {
            true
        } else {
            if !p.eat(b'+') && !first {
                return p.err("expected '+' or '-'");
            }
            false
        };
        first = false;
        let mut c = if matches!(p.peek(), Some(d) if d.is_ascii_digit()) {
            let c = p.rational()?;
            p.eat(b'*');
            c
        } else {
            Rat::from_integer(1.into())
        };
        if neg {
            c = -c;
        }
        if p.peek() != Some(prefix) {
            return p.err(format!("expected '{}'", prefix as char));
        }
        p.pos += 1;
        out.push((p.label()?, c));
    }
    if first {
        return p.err("empty input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    #[test]
    fn chern_polynomials() {
        let p = parse_poly("c1^2+c2").unwrap();
        assert_eq!(p.to_string(), "c1^2+c2");
        let q = parse_poly("2c3*c4-2c2*c5+c1*c3^2-c1*c2*c4").unwrap();
        assert_eq!(q.to_string(), "-c1c2c4+c1c3^2-2c2c5+2c3c4");
    }

    #[test]
    fn error_offsets() {
        assert_eq!(parse_poly("c1^^2").unwrap_err().offset, 3);
        assert_eq!(parse_poly("c1+").unwrap_err().offset, 3);
        assert_eq!(parse_poly("q1").unwrap_err().offset, 0);
        assert_eq!(parse_poly("(c1").unwrap_err().offset, 3);
        assert_eq!(parse_poly("1/0").unwrap_err().offset, 2);
        assert!(parse_poly("c0").is_err());
    }

    #[test]
    fn other_families() {
        let p = parse_poly("d1d-1 - 3/2 hbar^2 s + (1+hbar)^2").unwrap();
        assert_eq!(p, parse_poly(&p.to_string()).unwrap());
        assert_eq!(parse_poly("d-2").unwrap(), QPoly::var(VarId::d(-2)));
        assert_eq!(parse_poly(" 2 ( a1 - b1 ) ").unwrap().to_string(), "2a1-2b1");
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-7/21").unwrap(), rat(-1, 3));
        assert_eq!(parse_rational("12").unwrap(), int(12));
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn labelled_sums() {
        let v = parse_labelled("s[2,2]+2s22-s[3,-1]+1/2 s", b's').unwrap();
        assert_eq!(
            v,
            vec![
                (vec![2, 2], int(1)),
                (vec![2, 2], int(2)),
                (vec![3, -1], int(-1)),
                (vec![], rat(1, 2)),
            ]
        );
        assert!(parse_labelled("s1 s2", b's').is_err());
        assert!(parse_labelled("", b's').is_err());
    }
}
