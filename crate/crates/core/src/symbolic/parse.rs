//! Recursive-descent parser for the polynomial text grammar used in instance
//! files:
//!
//! ```text
//! expr     := ['+'|'-'] term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := primary ('^' uint)*
//! primary  := rational | var | '(' expr ')'
//! var      := 'x' uint
//! rational := uint ('/' uint)?
//! ```
//!
//! A leading sign is accepted on an expression (and therefore inside
//! parentheses) so that every printed polynomial parses back.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::poly::Polynomial;
use super::scalar::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{name}` at position {position} (expected x1..x{nvars})")]
    UnknownVariable {
        name: String,
        position: usize,
        nvars: usize,
    },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { position, .. } | ParseError::UnknownVariable { position, .. } => *position,
        }
    }
}

/// Parse `text` as a polynomial in the variables `x1..x{nvars}`.
pub fn parse_polynomial(text: &str, nvars: usize) -> Result<Polynomial, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        nvars,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.syntax(format!("unexpected `{}`", p.src[p.pos] as char)));
    }
    Ok(poly)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn syntax(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let mut base = self.primary()?;
        while self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.uint()?;
            let e: u32 = e.try_into().map_err(|_| self.syntax("exponent too large"))?;
            base = base.pow(e);
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.syntax("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'x') => {
                let start = self.pos;
                self.pos += 1;
                if !matches!(self.src.get(self.pos), Some(c) if c.is_ascii_digit()) {
                    return Err(self.syntax("expected variable index after `x`"));
                }
                let idx = self.uint()?;
                let name = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
                match usize::try_from(idx) {
                    Ok(i) if i >= 1 && i <= self.nvars => Ok(Polynomial::var(i - 1)),
                    _ => Err(ParseError::UnknownVariable {
                        name,
                        position: start,
                        nvars: self.nvars,
                    }),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.bigint()?;
                let value = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let den = self.bigint()?;
                    if den.is_zero() {
                        return Err(self.syntax("zero denominator"));
                    }
                    Rational::new(num, den)
                } else {
                    Rational::from_integer(num)
                };
                Ok(Polynomial::constant(value))
            }
            Some(c) => Err(self.syntax(format!("unexpected `{}`", c as char))),
            None => Err(self.syntax("unexpected end of input")),
        }
    }

    fn digits(&mut self) -> Result<&str, ParseError> {
        let start = self.pos;
        while matches!(self.src.get(self.pos), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected digits"));
        }
        // ASCII digits only, so this cannot fail.
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("0"))
    }

    fn bigint(&mut self) -> Result<BigInt, ParseError> {
        let s = self.digits()?.to_owned();
        s.parse::<BigInt>().map_err(|_| self.syntax("invalid integer literal"))
    }

    fn uint(&mut self) -> Result<u64, ParseError> {
        let s = self.digits()?.to_owned();
        s.parse::<u64>().map_err(|_| self.syntax("integer literal too large"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::scalar::{q, qi};
    use num_traits::Zero;

    #[test]
    fn zero_literal() {
        assert!(parse_polynomial("0", 1).unwrap().is_zero());
    }

    #[test]
    fn direct_denotation() {
        let p = parse_polynomial("x1^2 - 1/2*x2", 2).unwrap();
        let x1 = Polynomial::var(0);
        let x2 = Polynomial::var(1);
        assert_eq!(p, &(&x1 * &x1) - &x2.scale(&q(1, 2)));
        assert_eq!(p.num_terms(), 2);
    }

    #[test]
    fn expands_products() {
        let a = parse_polynomial("x1*(x1+x2)", 2).unwrap();
        let b = parse_polynomial("x1^2+x1*x2", 2).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn leading_sign_and_nested_parens() {
        let p = parse_polynomial("-(x1 - 2)^2 + 4", 1).unwrap();
        // -(x1^2 - 4 x1 + 4) + 4 = -x1^2 + 4 x1
        assert_eq!(p.to_string(), "-x1^2 + 4*x1");
        assert_eq!(parse_polynomial(" 6/4 ", 0).unwrap(), Polynomial::constant(q(3, 2)));
        assert_eq!(parse_polynomial("x1^0", 1).unwrap(), Polynomial::constant(qi(1)));
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_polynomial("x1 + * x2", 2).unwrap_err();
        assert_eq!(err.position(), 5);
        assert!(matches!(err, ParseError::Syntax { .. }));

        let err = parse_polynomial("x1 x2", 2).unwrap_err();
        assert_eq!(err.position(), 3);

        let err = parse_polynomial("(x1", 1).unwrap_err();
        assert!(matches!(err, ParseError::Syntax { position: 3, .. }));

        assert!(parse_polynomial("1/0", 1).is_err());
        assert!(parse_polynomial("", 1).is_err());
    }

    #[test]
    fn unknown_variables_rejected() {
        let err = parse_polynomial("x1 + x3", 2).unwrap_err();
        assert_eq!(
            err,
            ParseError::UnknownVariable {
                name: "x3".into(),
                position: 5,
                nvars: 2
            }
        );
        assert!(parse_polynomial("x0", 2).is_err());
        assert!(parse_polynomial("y1", 2).is_err());
    }
}
