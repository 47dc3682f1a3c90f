//! Recursive-descent parser:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | factor
//! factor := base ('^' uint)?
//! base   := var | number | zeta(N) | '(' expr ')'
//! ```
//!
//! Division is only allowed by nonzero constants.

use num_bigint::BigInt;

use super::{Poly, PolyRing, MAX_DEGREE};
use crate::arith::{Cyclo, Rational};
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a PolyRing,
}

pub(super) fn parse(src: &str, ring: &PolyRing) -> Result<Poly> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        ring,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
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

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected `{}`", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.peek() == Some(b'/') {
                let at = self.pos;
                self.pos += 1;
                let d = self.unary()?;
                if !d.is_constant() || d.is_zero() {
                    return Err(Error::Syntax {
                        pos: at,
                        msg: "division by a non-constant or zero".into(),
                    });
                }
                let inv = d.constant_term().inv()?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Poly> {
        if self.eat(b'-') {
            return Ok(-&self.unary()?);
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.base()?;
        if self.eat(b'^') {
            let e = self.uint()?;
            if e >= MAX_DEGREE {
                return Err(Error::ExponentOverflow);
            }
            return base.pow(e as u32);
        }
        Ok(base)
    }

    fn uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an unsigned integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<u64>()
            .map_err(|_| Error::ExponentOverflow)
    }

    fn base(&mut self) -> Result<Poly> {
        let n = self.ring.nvars();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let v: BigInt = digits.parse().map_err(|_| self.err("bad integer"))?;
                Ok(Poly::constant(
                    n,
                    Cyclo::from_rational(Rational::from_integer(v)),
                ))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if name == "zeta" {
                    self.expect(b'(')?;
                    let at = self.pos;
                    let k = self.uint()?;
                    if k == 0 || k > u32::MAX as u64 {
                        return Err(Error::Syntax {
                            pos: at,
                            msg: "zeta order must be positive".into(),
                        });
                    }
                    self.expect(b')')?;
                    return Ok(Poly::constant(n, Cyclo::zeta(k as u32, 1)));
                }
                match self.ring.index_of(name) {
                    Some(i) => Ok(Poly::var(n, i)),
                    None => Err(Error::UnknownVariable(name.to_string())),
                }
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::Mono;
    use super::*;

    fn ring() -> PolyRing {
        PolyRing::new(["x", "y", "z"]).unwrap()
    }

    #[test]
    fn examples() {
        let r = ring();
        let p = r.parse("x^2 - y*z/3").unwrap();
        assert_eq!(p.coeff(&Mono(vec![2, 0, 0])), Cyclo::one());
        assert_eq!(p.coeff(&Mono(vec![0, 1, 1])), Cyclo::from_frac(-1, 3));
        assert_eq!(p.len(), 2);
        let q = r.parse("zeta(3)*x*y").unwrap();
        assert_eq!(q.coeff(&Mono(vec![1, 1, 0])), Cyclo::zeta(3, 1));
        assert_eq!(
            r.parse("(x+y)^2").unwrap(),
            r.parse("x^2 + 2*x*y + y^2").unwrap()
        );
        assert_eq!(r.parse("zeta(4)^2").unwrap(), r.parse("-1").unwrap());
    }

    #[test]
    fn errors() {
        let r = ring();
        assert_eq!(r.parse("w + 1"), Err(Error::UnknownVariable("w".into())));
        assert!(matches!(r.parse("x +"), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(r.parse("x / y"), Err(Error::Syntax { .. })));
        assert!(matches!(r.parse("(x"), Err(Error::Syntax { .. })));
        assert!(matches!(
            r.parse("x^4294967296"),
            Err(Error::ExponentOverflow)
        ));
    }

    #[test]
    fn round_trip() {
        let r = ring();
        for s in [
            "x^2 - 1/3*y*z",
            "-zeta(5)^3*x + (2 - zeta(3))*z^4",
            "0",
            "-7/2",
            "x*y*z - x",
        ] {
            let p = r.parse(s).unwrap();
            let printed = r.fmt(&p);
            assert_eq!(r.parse(&printed).unwrap(), p, "{s} -> {printed}");
            assert_eq!(r.fmt(&r.parse(&printed).unwrap()), printed);
        }
    }
}
