//! Plain-text polynomial grammar.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*      divisors must be free of variables
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! Identifiers resolve to declared variables first, then to the parameter `s`,
//! then to `alpha`.

use super::field::{rat_int, Field, Rat};
use super::fieldelem::{Ext, FieldElem};
use super::mpoly::{MPoly, Vars};
use crate::error::{Error, Result};

pub fn parse_poly(src: &str, vars: &Vars, ext: Ext) -> Result<MPoly<FieldElem>> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, vars, ext };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

/// Parse a polynomial whose coefficients must all be rational.
pub fn parse_rat_poly(src: &str, vars: &Vars) -> Result<MPoly<Rat>> {
    super::ops::to_rat_poly(&parse_poly(src, vars, Ext::None)?)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a Vars,
    ext: Ext,
}

impl Parser<'_> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.to_string() })
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

    fn expr(&mut self) -> Result<MPoly<FieldElem>> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == b'+' { acc.add(&t) } else { acc.sub(&t) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MPoly<FieldElem>> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let f = self.unary()?;
            if c == b'*' {
                acc = acc.mul(&f);
            } else {
                if !f.is_constant() {
                    return self.err("division by a non-constant");
                }
                let d = f.constant_term();
                let Some(inv) = d.try_inv() else {
                    return self.err("division by zero");
                };
                acc = acc.scale(&inv);
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MPoly<FieldElem>> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MPoly<FieldElem>> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| Error::Parse { pos: self.pos, msg: "exponent too large".into() })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse { pos: start, msg: "integer out of range".into() })
    }

    fn atom(&mut self) -> Result<MPoly<FieldElem>> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let n: num_bigint::BigInt = s.parse().unwrap();
                Ok(MPoly::constant(self.vars, FieldElem::from_rat(&Rat::from_integer(n))))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if let Some(i) = self.vars.iter().position(|v| v == name) {
                    return Ok(MPoly::var(self.vars, i));
                }
                match name {
                    "s" => Ok(MPoly::constant(self.vars, FieldElem::s())),
                    "alpha" if self.ext != Ext::None => Ok(MPoly::constant(self.vars, FieldElem::alpha(self.ext))),
                    "alpha" => {
                        self.pos = start;
                        self.err("`alpha` used without a declared extension")
                    }
                    _ => {
                        self.pos = start;
                        Err(Error::UnknownVariable(name.to_string()))
                    }
                }
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Shorthand for integer constants in a variable space.
pub fn int_const(vars: &Vars, n: i64) -> MPoly<FieldElem> {
    MPoly::constant(vars, FieldElem::from_rat(&rat_int(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::mpoly::vars;

    #[test]
    fn parses_and_prints() {
        let v = vars(&["x", "y", "z"]);
        let p = parse_poly("(x^2+y^2)*z-2*x*y*(x+y)+(s+1)*(2*x-z)*(2*y-z)*z", &v, Ext::None).unwrap();
        let again = parse_poly(&p.to_string(), &v, Ext::None).unwrap();
        assert_eq!(p, again);
        assert_eq!(p.total_degree(), Some(3));
    }

    #[test]
    fn alpha_needs_extension() {
        let v = vars(&["x"]);
        assert!(parse_poly("alpha*x", &v, Ext::None).is_err());
        let p = parse_poly("alpha^2", &v, Ext::SSquaredMinusS).unwrap();
        assert_eq!(p, parse_poly("s^2-s", &v, Ext::None).unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        let v = vars(&["x"]);
        assert!(matches!(parse_poly("x+", &v, Ext::None), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("q", &v, Ext::None), Err(Error::UnknownVariable(_))));
        assert!(parse_poly("1/x", &v, Ext::None).is_err());
        assert_eq!(parse_rat_poly("3/2*x", &v).unwrap().to_string(), "3/2*x");
    }
}
