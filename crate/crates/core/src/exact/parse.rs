//! String forms for scalars, polynomials and rational functions.
//!
//! ```text
//! scalar := ["-"] int ["/" int]
//! term   := coeff | coeff "*" VAR ["^" int] | VAR ["^" int]
//! expr   := ["-"] term (("+" | "-") term)*
//! ratfun := expr | "(" expr ")" "/" "(" expr ")"
//! ```

use num_bigint::BigInt;

use super::{Poly, RatFun, Scalar};
use crate::error::{Error, Result};

pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num: BigInt = parse_int(num).ok_or_else(bad)?;
    let den: BigInt = match den {
        Some(d) => {
            if d.starts_with('-') || d.starts_with('+') {
                return Err(bad());
            }
            parse_int(d).ok_or_else(bad)?
        }
        None => BigInt::from(1),
    };
    Scalar::from_bigints(num, den)
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').or_else(|| s.strip_prefix('+')).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

pub fn parse_poly(s: &str, var: &str) -> Result<Poly> {
    Parser::new(s, var).expr_to_end()
}

pub fn parse_ratfun(s: &str, var: &str) -> Result<RatFun> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if let Some(rest) = compact.strip_prefix('(') {
        if let Some(idx) = rest.find(")/(") {
            let num = &rest[..idx];
            let den = rest[idx + 3..]
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced rational function: {s:?}")))?;
            let num = parse_poly(num, var)?;
            let den = parse_poly(den, var)?;
            return RatFun::normalize(num, den);
        }
        if let Some(inner) = rest.strip_suffix(')') {
            return Ok(RatFun::from_poly(parse_poly(inner, var)?));
        }
    }
    Ok(RatFun::from_poly(parse_poly(&compact, var)?))
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
    var: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, var: &'a str) -> Self {
        Parser {
            src,
            chars: src.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
            var,
        }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in {:?}", self.pos, self.src))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_var(&mut self) -> bool {
        let v: Vec<char> = self.var.chars().collect();
        if self.chars[self.pos..].starts_with(&v) {
            self.pos += v.len();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn expr_to_end(mut self) -> Result<Poly> {
        if self.chars.is_empty() {
            return Err(self.err("empty expression"));
        }
        let mut acc = Poly::zero();
        let mut first = true;
        while self.pos < self.chars.len() {
            let negative = if self.eat('-') {
                true
            } else if self.eat('+') {
                if first {
                    return Err(self.err("unexpected '+'"));
                }
                false
            } else if first {
                false
            } else {
                return Err(self.err("expected '+' or '-'"));
            };
            let term = self.term()?;
            acc = if negative { &acc - &term } else { &acc + &term };
            first = false;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let coeff = match self.digits() {
            Some(n) => {
                let mut text = n;
                if self.eat('/') {
                    let d = self.digits().ok_or_else(|| self.err("expected denominator"))?;
                    text = format!("{text}/{d}");
                }
                let c = parse_scalar(&text)?;
                if !self.eat('*') {
                    return Ok(Poly::constant(c));
                }
                c
            }
            None => Scalar::from(1),
        };
        if !self.eat_var() {
            return Err(self.err(&format!("expected variable {:?}", self.var)));
        }
        let deg = if self.eat('^') {
            let d = self.digits().ok_or_else(|| self.err("expected exponent"))?;
            d.parse::<usize>().map_err(|_| self.err("exponent too large"))?
        } else {
            1
        };
        Ok(Poly::monomial(coeff, deg))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Field;

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("1/2").unwrap(), Scalar::new(1, 2));
        assert_eq!(parse_scalar("-3").unwrap(), Scalar::from(-3));
        assert!(parse_scalar(" 4/-2 ").is_err());
        assert!(parse_scalar("0.5").is_err());
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn polynomials() {
        let p = parse_poly("1+t", "t").unwrap();
        assert_eq!(p.coeffs(), &[Scalar::one(), Scalar::one()]);
        let p = parse_poly("-1/2*t^3 + 2 - t", "t").unwrap();
        assert_eq!(p.coeff(3), Scalar::new(-1, 2));
        assert_eq!(p.coeff(1), Scalar::from(-1));
        assert_eq!(p.coeff(0), Scalar::from(2));
        assert_eq!(parse_poly("g", "g").unwrap(), Poly::x());
        assert!(parse_poly("t", "g").is_err());
        assert!(parse_poly("", "t").is_err());
        assert!(parse_poly("1++t", "t").is_err());
    }

    #[test]
    fn rational_functions() {
        let r = parse_ratfun("(t^2-1)/(t)", "t").unwrap();
        assert_eq!(r.to_string(), "(-1+t^2)/(t)");
        let r = parse_ratfun("(t^2-t)/(t)", "t").unwrap();
        assert_eq!(r.to_string(), "-1+t");
        assert_eq!(parse_ratfun("1/2", "t").unwrap(), RatFun::constant(Scalar::new(1, 2)));
        assert!(parse_ratfun("(1)/(0)", "t").is_err());
        let back = parse_ratfun(&r.to_string(), "t").unwrap();
        assert_eq!(back, r);
        assert!(parse_ratfun("(t)", "t").unwrap() == RatFun::var());
        assert!(RatFun::var().inv().unwrap().has_pole_at_zero());
    }
}
