//! Parser for the constant and polynomial text grammar.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := atom ['^' integer]
//! atom   := integer | I | sqrt3 | sqrt5 | z<m> | <var> | '(' expr ')'
//! ```
//! Division is only allowed by nonzero constants.

use num_bigint::BigInt;

use crate::exactnum::{CycNum, Rat};
use crate::polyalg::Poly;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>, String> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Tok::Num(digits.parse().map_err(|e| format!("{e}"))?));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(format!("unexpected character '{c}'"));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    var: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly, String> {
        let negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, String> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.factor()?;
            } else if self.eat('/') {
                let d = self.factor()?;
                if !d.is_constant() || d.is_zero() {
                    return Err("division only by nonzero constants".into());
                }
                let inv = d.lc().inv().map_err(|e| e.to_string())?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Poly, String> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| "exponent too large".to_string())?;
                    Ok(base.pow(e))
                }
                _ => Err("expected integer exponent".into()),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly, String> {
        let tok = self.peek().cloned().ok_or("unexpected end of input")?;
        self.pos += 1;
        match tok {
            Tok::Num(n) => Ok(Poly::constant(CycNum::from_rat(Rat::from_integer(n)))),
            Tok::Sym('(') => {
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err("missing ')'".into());
                }
                Ok(inner)
            }
            Tok::Ident(name) => self.ident(&name),
            Tok::Sym(c) => Err(format!("unexpected '{c}'")),
        }
    }

    fn ident(&self, name: &str) -> Result<Poly, String> {
        if name == self.var {
            return Ok(Poly::x());
        }
        let c = match name {
            "I" => CycNum::i(),
            "sqrt3" => CycNum::sqrt3(),
            "sqrt5" => CycNum::sqrt5(),
            _ => match name.strip_prefix('z').and_then(|m| m.parse::<u32>().ok()) {
                Some(m) if m > 0 => CycNum::zeta(m, 1),
                _ => return Err(format!("unknown symbol '{name}'")),
            },
        };
        Ok(Poly::constant(c))
    }
}

/// Parses a polynomial in the variable `var`.
pub fn parse_poly(s: &str, var: &str) -> Result<Poly, String> {
    let mut p = Parser { toks: tokenize(s)?, pos: 0, var };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(format!("trailing input at token {}", p.pos));
    }
    Ok(out)
}

/// Parses a constant (no variable allowed).
pub fn parse_constant(s: &str) -> Result<CycNum, String> {
    let p = parse_poly(s, "")?;
    if !p.is_constant() {
        return Err("expected a constant".into());
    }
    Ok(p.coeff(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_constants() {
        assert_eq!(parse_constant("-3/2").unwrap(), CycNum::from_frac(-3, 2));
        assert_eq!(parse_constant("6*I*sqrt3").unwrap(), CycNum::from_int(6) * CycNum::i() * CycNum::sqrt3());
        assert_eq!(parse_constant("z12^5").unwrap(), CycNum::zeta(12, 5));
        assert_eq!(parse_constant("-1/2 + 1/2*sqrt5").unwrap(), CycNum::omega());
        assert!(parse_constant("x").is_err());
        assert!(parse_constant("1/0").is_err());
    }

    #[test]
    fn parses_polynomials() {
        let p = parse_poly("x^4 + 2*I*sqrt3*x^2 + 1", "x").unwrap();
        assert_eq!(p.deg(), 4);
        assert_eq!(p.coeff(2), CycNum::from_int(2) * CycNum::i() * CycNum::sqrt3());
        let q = parse_poly("(x^2 - 1)*(x + 1)", "x").unwrap();
        assert_eq!(q, Poly::from_ints(&[-1, -1, 1, 1]));
    }

    #[test]
    fn render_parse_round_trip() {
        let samples = [
            "x^12 - 33*x^8 - 33*x^4 + 1",
            "x^3 + (-1/2 + 1/2*sqrt5)*x - 7/3",
            "z7*x^2 + (1 + z7^3)*x",
            "-x^5 + I*x",
        ];
        for s in samples {
            let p = parse_poly(s, "x").unwrap();
            assert_eq!(p.to_string(), s);
            assert_eq!(parse_poly(&p.to_string(), "x").unwrap(), p);
        }
    }
}
