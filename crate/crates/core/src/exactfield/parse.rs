//! Reader for the same polynomial syntax `Display` writes:
//! integers, `q`, `sqrt2`/`sqrt3`, `+ - * /`, `^` with a natural exponent,
//! and parentheses. Division is only allowed by a nonzero constant.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::poly::Poly;
use super::quad::{check_surd, QuadRational};
use super::FieldError;

pub fn parse_poly(src: &str, d: u32) -> Result<Poly, FieldError> {
    check_surd(d)?;
    let tokens = tokenize(src)?;
    let mut parser = Parser { tokens, pos: 0, d, src };
    let p = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.error("trailing input"));
    }
    Ok(p)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Q,
    Sqrt(u32),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<Tok>, FieldError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => (out.push(Tok::Plus), i += 1).1,
            '-' => (out.push(Tok::Minus), i += 1).1,
            '*' => (out.push(Tok::Star), i += 1).1,
            '/' => (out.push(Tok::Slash), i += 1).1,
            '^' => (out.push(Tok::Caret), i += 1).1,
            '(' => (out.push(Tok::LParen), i += 1).1,
            ')' => (out.push(Tok::RParen), i += 1).1,
            'q' => (out.push(Tok::Q), i += 1).1,
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push(Tok::Int(digits.parse().expect("ascii digits")));
            }
            's' if chars[i..].starts_with(&['s', 'q', 'r', 't']) => {
                i += 4;
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let n = digits
                    .parse()
                    .map_err(|_| FieldError::Parse(format!("expected a radicand after sqrt in {src:?}")))?;
                out.push(Tok::Sqrt(n));
            }
            _ => return Err(FieldError::Parse(format!("unexpected {c:?} in {src:?}"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Tok>,
    pos: usize,
    d: u32,
    src: &'a str,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> FieldError {
        FieldError::Parse(format!("{what} at token {} in {:?}", self.pos, self.src))
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly, FieldError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                acc = acc.checked_add(&self.term()?)?;
            } else if self.eat(&Tok::Minus) {
                acc = acc.checked_sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, FieldError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(&Tok::Star) {
                acc = acc.checked_mul(&self.unary()?)?;
            } else if self.eat(&Tok::Slash) {
                let divisor = self.unary()?;
                match divisor.degree() {
                    Some(0) => acc = acc.scale(&divisor.coeff(0).inv()?),
                    None => return Err(FieldError::DivisionByZero),
                    Some(_) => return Err(self.error("division by a non-constant")),
                }
            } else if matches!(self.peek(), Some(Tok::Q | Tok::Sqrt(_) | Tok::LParen)) {
                // juxtaposition: `2q`, `q(q+1)`
                acc = acc.checked_mul(&self.unary()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Poly, FieldError> {
        if self.eat(&Tok::Minus) {
            return Ok(-self.unary()?);
        }
        if self.eat(&Tok::Plus) {
            return self.unary();
        }
        let base = self.atom()?;
        if self.eat(&Tok::Caret) {
            match self.tokens.get(self.pos).cloned() {
                Some(Tok::Int(n)) => {
                    self.pos += 1;
                    let n: u32 = n.try_into().map_err(|_| self.error("exponent too large"))?;
                    Ok(base.pow(n))
                }
                _ => Err(self.error("expected an exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly, FieldError> {
        let tok = self.peek().cloned().ok_or_else(|| self.error("unexpected end"))?;
        self.pos += 1;
        match tok {
            Tok::Int(n) => Ok(Poly::constant(QuadRational::from_rational(BigRational::from_integer(n), self.d))),
            Tok::Q => Ok(Poly::q(self.d)),
            Tok::Sqrt(n) if n == self.d && n != 1 => Ok(Poly::constant(QuadRational::sqrt_d(self.d))),
            Tok::Sqrt(n) => Err(FieldError::MismatchedSurd { left: self.d, right: n }),
            Tok::LParen => {
                let inner = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            _ => Err(self.error("unexpected token")),
        }
    }
}
