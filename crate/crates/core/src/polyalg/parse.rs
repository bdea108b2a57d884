//! Text syntax for polynomials: `3*x^2*y - y^3 + 1`.

use alloc::string::String;
use core::fmt::Write;

use super::field::Coeff;
use super::monomial::Monomial;
use super::poly::{Poly, PolyRing};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok<'a> {
    Int(&'a str),
    Ident(&'a str),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

struct Parser<'a> {
    ring: &'a PolyRing,
    src: &'a str,
    toks: alloc::vec::Vec<(usize, Tok<'a>)>,
    pos: usize,
}

fn lex(src: &str) -> Result<alloc::vec::Vec<(usize, Tok<'_>)>> {
    let bytes = src.as_bytes();
    let mut out = alloc::vec::Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(&src[start..i])));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(&src[start..i])));
                continue;
            }
            _ => {
                return Err(Error::InvalidInput(alloc::format!(
                    "unexpected character {:?} at offset {start}",
                    c as char
                )))
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<Tok<'a>> {
        self.toks.get(self.pos).map(|t| t.1)
    }

    fn err(&self, what: &str) -> Error {
        let at = self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.src.len());
        Error::InvalidInput(alloc::format!("{what} at offset {at} in {:?}", self.src))
    }

    fn expr(&mut self) -> Result<Poly> {
        let r = self.ring;
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                let t = self.term()?;
                r.neg(&t)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = r.add(&acc, &t);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = r.sub(&acc, &t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.power()?;
        while self.peek() == Some(Tok::Star) {
            self.pos += 1;
            let f = self.power()?;
            acc = self.ring.mul(&acc, &f);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Poly> {
        if self.peek() == Some(Tok::Minus) {
            self.pos += 1;
            let f = self.power()?;
            return Ok(self.ring.neg(&f));
        }
        let base = self.atom()?;
        if self.peek() == Some(Tok::Caret) {
            self.pos += 1;
            match self.peek() {
                Some(Tok::Int(s)) => {
                    self.pos += 1;
                    let e: u32 = s.parse().map_err(|_| self.err("exponent too large"))?;
                    if e > u16::MAX as u32 / 2 {
                        return Err(self.err("exponent too large"));
                    }
                    return Ok(self.ring.pow(&base, e));
                }
                _ => return Err(self.err("expected integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(Tok::Int(s)) => {
                self.pos += 1;
                let p = self.ring.field().p() as u64;
                let mut v = 0u64;
                for d in s.bytes() {
                    v = (v * 10 + (d - b'0') as u64) % p;
                }
                Ok(Poly::constant(v as Coeff))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match self.ring.names().iter().position(|n| n == name) {
                    Some(i) => Ok(self.ring.var(i)),
                    None => Err(Error::InvalidInput(alloc::format!("unknown variable {name:?}"))),
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(Tok::RParen) {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            _ => Err(self.err("expected a number, variable or '('")),
        }
    }
}

pub(crate) fn parse_poly(ring: &PolyRing, src: &str) -> Result<Poly> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(Error::InvalidInput("empty polynomial".into()));
    }
    let mut p = Parser { ring, src, toks, pos: 0 };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

fn write_monomial(ring: &PolyRing, m: &Monomial, out: &mut String) {
    let mut first = true;
    for (i, name) in ring.names().iter().enumerate() {
        let e = m.exp(i);
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(name);
        if e > 1 {
            let _ = write!(out, "^{e}");
        }
    }
}

pub(crate) fn format_poly(ring: &PolyRing, f: &Poly, pretty: bool) -> String {
    if f.is_zero() {
        return String::from("0");
    }
    let field = ring.field();
    let mut out = String::new();
    for (k, (m, c)) in f.terms().iter().enumerate() {
        let (neg, mag) = if pretty {
            let s = field.signed(*c);
            (s < 0, s.unsigned_abs())
        } else {
            (false, *c as u64)
        };
        if k > 0 {
            out.push_str(if neg { " - " } else { " + " });
        } else if neg {
            out.push('-');
        }
        if m.is_one() {
            let _ = write!(out, "{mag}");
        } else {
            if mag != 1 {
                let _ = write!(out, "{mag}*");
            }
            write_monomial(ring, m, &mut out);
        }
    }
    out
}
