//! Recursive-descent reader for the polynomial text syntax.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'] factor)*
//! factor := atom ['^' ['-'] integer]
//! atom   := integer | identifier | '(' expr ')'
//! ```

use alloc::string::{String, ToString};

use num_bigint::BigInt;

use super::{is_identifier, LaurentPoly, RingError, VarSym};

pub(super) fn parse_poly(src: &str) -> Result<LaurentPoly, RingError> {
    let mut p = Parser { src, pos: 0 };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty polynomial"));
    }
    let value = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> RingError {
        RingError::Parse {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<LaurentPoly, RingError> {
        let mut acc = LaurentPoly::zero();
        let mut negate = match self.peek() {
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
        loop {
            self.skip_ws();
            let t = self.term()?;
            if negate {
                acc -= &t;
            } else {
                acc += t;
            }
            self.skip_ws();
            match self.peek() {
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<LaurentPoly, RingError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    self.skip_ws();
                }
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' => {}
                _ => return Ok(acc),
            }
            let f = self.factor()?;
            acc = &acc * &f;
        }
    }

    fn factor(&mut self) -> Result<LaurentPoly, RingError> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let negative = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let start = self.pos;
        let digits = self.digits();
        let exp: i32 = digits.parse().map_err(|_| RingError::Parse {
            offset: start,
            message: "expected an integer exponent".to_string(),
        })?;
        let exp = if negative { -exp } else { exp };
        base.powi(exp).map_err(|_| RingError::Parse {
            offset: start,
            message: "negative exponent on a non-unit".to_string(),
        })
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn atom(&mut self) -> Result<LaurentPoly, RingError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let digits: String = self.digits().into();
                let n: BigInt = digits.parse().map_err(|_| self.error("bad integer"))?;
                Ok(LaurentPoly::constant(n))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
                    self.pos += 1;
                }
                let name = &self.src[start..self.pos];
                debug_assert!(is_identifier(name));
                Ok(LaurentPoly::var(&VarSym::new(name)?))
            }
            Some(b'(') => {
                self.pos += 1;
                self.skip_ws();
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
