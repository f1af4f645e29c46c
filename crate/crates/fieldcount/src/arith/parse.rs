//! Text grammar for polynomials over `F_q`.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' natural)?
//! atom   := natural | 't' | 'u' | '(' expr ')'
//! ```
//!
//! `t` is the polynomial variable; `u` is the generator of `F_{p^e}` and is
//! only valid when `e >= 2`. Integer literals reduce modulo `p`. Examples:
//! `t^3+2*t+1` over any field, `(2+u)*t^2+u` over `F_9`.

use super::field::Field;
use super::fq::{FqCtx, FqElem};
use super::poly::Poly;
use crate::{Error, Result};

struct Parser<'a> {
    ctx: &'a FqCtx,
    chars: Vec<char>,
    pos: usize,
}

/// Parses a polynomial in `t` (and `u` for extension fields).
pub fn parse_poly(ctx: &FqCtx, input: &str) -> Result<Poly<FqElem>> {
    let mut p = Parser {
        ctx,
        chars: input.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
    };
    let e = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(Error::parse(format!(
            "unexpected character '{}' at position {}",
            p.chars[p.pos], p.pos
        )));
    }
    Ok(e)
}

/// Parses a field element: a polynomial expression without `t`.
pub fn parse_elem(ctx: &FqCtx, input: &str) -> Result<FqElem> {
    let p = parse_poly(ctx, input)?;
    match p.degree() {
        None => Ok(ctx.sample().zero()),
        Some(0) => Ok(p.coeff(0)),
        Some(_) => Err(Error::parse(format!(
            "expected a field element, got a polynomial in t: '{input}'"
        ))),
    }
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expr(&mut self) -> Result<Poly<FqElem>> {
        let mut acc = if self.peek() == Some('-') {
            self.bump();
            self.term()?.neg()
        } else {
            self.term()?
        };
        while let Some(op) = self.peek() {
            match op {
                '+' => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                '-' => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly<FqElem>> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.bump();
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly<FqElem>> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.bump();
            let e = self.natural()?;
            if e > 4096 {
                return Err(Error::parse("exponent too large".to_string()));
            }
            return Ok(base.pow(e as u32));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly<FqElem>> {
        match self.peek() {
            Some('t') => {
                self.bump();
                Ok(self.ctx.poly_var())
            }
            Some('u') => {
                self.bump();
                let g = self.ctx.generator().map_err(|_| {
                    Error::parse("symbol u is only valid over an extension field".to_string())
                })?;
                Ok(Poly::constant(&g))
            }
            Some('(') => {
                self.bump();
                let e = self.expr()?;
                if self.bump() != Some(')') {
                    return Err(Error::parse("missing closing parenthesis".to_string()));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.natural()?;
                Ok(Poly::constant(&self.ctx.elem_from_int(n as i64)))
            }
            Some(c) => Err(Error::parse(format!(
                "unexpected character '{c}' at position {}",
                self.pos
            ))),
            None => Err(Error::parse("unexpected end of input".to_string())),
        }
    }

    fn natural(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if self.pos == start {
            return Err(Error::parse(format!("expected a number at position {start}")));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<u64>()
            .map_err(|_| Error::parse(format!("number out of range: {s}")))
    }
}

#[cfg(test)]
mod tests {
    use super::super::fq::FqCfg;
    use super::*;

    #[test]
    fn parses_the_reference_example() {
        let ctx = FqCfg::prime(3).build().unwrap();
        let f = parse_poly(&ctx, "t^3+2*t+1").unwrap();
        assert_eq!(f, ctx.poly_from_ints(&[1, 2, 0, 1]));
    }

    #[test]
    fn display_roundtrips_through_parser() {
        let ctx = FqCfg::prime(5).build().unwrap();
        let f = ctx.poly_from_ints(&[3, 0, 4, 0, 1]);
        let g = parse_poly(&ctx, &f.to_string()).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn extension_coefficients() {
        let ctx = FqCfg::new(3, 2).build().unwrap();
        let f = parse_poly(&ctx, "(2+u)*t^2+u*t+1").unwrap();
        let u = ctx.generator().unwrap();
        assert_eq!(f.coeff(2), u.add(&ctx.elem_from_int(2)));
        assert_eq!(f.coeff(1), u);
        assert_eq!(f.coeff(0), ctx.elem_from_int(1));
        let round = parse_poly(&ctx, &f.to_string()).unwrap();
        assert_eq!(round, f);
    }

    #[test]
    fn u_is_rejected_over_prime_fields() {
        let ctx = FqCfg::prime(3).build().unwrap();
        assert!(parse_poly(&ctx, "u*t+1").is_err());
    }

    #[test]
    fn unary_minus_and_subtraction() {
        let ctx = FqCfg::prime(7).build().unwrap();
        let f = parse_poly(&ctx, "-t^2+3*t-5").unwrap();
        assert_eq!(f, ctx.poly_from_ints(&[-5, 3, -1]));
    }

    #[test]
    fn garbage_is_rejected_with_position() {
        let ctx = FqCfg::prime(3).build().unwrap();
        assert!(parse_poly(&ctx, "t^^2").is_err());
        assert!(parse_poly(&ctx, "t+").is_err());
        assert!(parse_poly(&ctx, "(t+1").is_err());
        assert!(parse_elem(&ctx, "t+1").is_err());
        assert!(parse_elem(&ctx, "2").is_ok());
    }
}
