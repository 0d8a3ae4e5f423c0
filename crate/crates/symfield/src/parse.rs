//! Infix parser: `+ - * / ^`, parentheses, integer literals, integer exponents.

use num_bigint::BigInt;

use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::var::Var;
use crate::SymError;

/// Parse an expression; any well-formed variable name is accepted.
pub fn parse(src: &str) -> Result<RatFunc, SymError> {
    Parser { src: src.as_bytes(), pos: 0, allowed: None }.run()
}

/// Parse an expression, rejecting variables outside `allowed`.
pub fn parse_with(src: &str, allowed: &[Var]) -> Result<RatFunc, SymError> {
    Parser { src: src.as_bytes(), pos: 0, allowed: Some(allowed) }.run()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    allowed: Option<&'a [Var]>,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T, SymError> {
        Err(SymError::Parse { pos: self.pos, msg: msg.to_string() })
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn run(mut self) -> Result<RatFunc, SymError> {
        let v = self.expr()?;
        if self.peek().is_some() {
            return self.err("unexpected trailing input");
        }
        Ok(v)
    }

    fn expr(&mut self) -> Result<RatFunc, SymError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc, SymError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat(b'/') {
                let at = self.pos;
                let d = self.unary()?;
                acc = acc.div(&d).map_err(|_| SymError::Parse { pos: at, msg: "division by zero".into() })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc, SymError> {
        if self.eat(b'-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFunc, SymError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let paren = self.eat(b'(');
        let neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let Some(k) = self.integer()? else {
            return self.err("expected integer exponent");
        };
        if paren && !self.eat(b')') {
            return self.err("expected ')'");
        }
        let k: i32 = match i32::try_from(&k) {
            Ok(k) => k,
            Err(_) => return self.err("exponent too large"),
        };
        let k = if neg { -k } else { k };
        let at = self.pos;
        base.pow(k).map_err(|_| SymError::Parse { pos: at, msg: "zero to a negative power".into() })
    }

    fn integer(&mut self) -> Result<Option<BigInt>, SymError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(Some(s.parse().unwrap()))
    }

    fn atom(&mut self) -> Result<RatFunc, SymError> {
        if self.eat(b'(') {
            let v = self.expr()?;
            if !self.eat(b')') {
                return self.err("expected ')'");
            }
            return Ok(v);
        }
        if let Some(k) = self.integer()? {
            return Ok(RatFunc::from_poly(Poly::constant(k)));
        }
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected number, variable or '('");
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let v = Var::new(name).map_err(|_| SymError::Parse { pos: start, msg: format!("bad variable name `{name}`") })?;
        if let Some(allowed) = self.allowed {
            if !allowed.contains(&v) {
                return Err(SymError::UnknownVar(name.to_string()));
            }
        }
        Ok(RatFunc::var(v))
    }
}
