//! Recursive-descent parser for scalar expressions such as `5/2-t`,
//! `(-2*t+7)/2` or `3t^2/(t+1)`. Both `t` and `τ` name the formal parameter.

use num_bigint::BigInt;

use super::ParamScalar;
use crate::error::{Error, Result};

pub(crate) fn parse_scalar(input: &str) -> Result<ParamScalar> {
    let mut p = Parser {
        input,
        chars: input.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
    };
    if p.chars.is_empty() {
        return Err(p.err("empty expression"));
    }
    let v = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.err(&format!("unexpected `{}`", p.chars[p.pos])));
    }
    Ok(v)
}

struct Parser<'a> {
    input: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, reason: &str) -> Error {
        Error::Parse {
            input: self.input.to_string(),
            reason: reason.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<ParamScalar> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                '-' => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<ParamScalar> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc * self.unary()?;
                }
                Some('/') => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = acc
                        .checked_div(&rhs)
                        .map_err(|_| self.err("division by zero"))?;
                }
                // implicit multiplication: `2t`, `3(t+1)`
                Some(c) if c == 't' || c == 'τ' || c == '(' => {
                    acc = acc * self.power()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<ParamScalar> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<ParamScalar> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let exp: u32 = self.chars[start..self.pos]
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| self.err("exponent must be a non-negative integer"))?;
        Ok((0..exp).fold(ParamScalar::one(), |acc, _| acc * &base))
    }

    fn atom(&mut self) -> Result<ParamScalar> {
        match self.peek() {
            Some('t') | Some('τ') => {
                self.pos += 1;
                Ok(ParamScalar::tau())
            }
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("missing `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits: String = self.chars[start..self.pos].iter().collect();
                let v: BigInt = digits.parse().map_err(|_| self.err("bad integer"))?;
                Ok(ParamScalar::from_rational(v.into()))
            }
            Some(c) => Err(self.err(&format!("unexpected `{c}`"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_parameter_forms() {
        assert_eq!(parse_scalar("3/5").unwrap(), ParamScalar::ratio(3, 5));
        assert_eq!(parse_scalar("t").unwrap(), ParamScalar::tau());
        assert_eq!(
            parse_scalar("5/2-t").unwrap(),
            ParamScalar::ratio(5, 2) - ParamScalar::tau()
        );
        assert_eq!(
            parse_scalar("2t^2").unwrap(),
            ParamScalar::from_int(2) * ParamScalar::tau() * ParamScalar::tau()
        );
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("3/").is_err());
        assert!(parse_scalar("x+1").is_err());
        assert!(parse_scalar("1/(t-t)").is_err());
        assert!(parse_scalar("(1+t").is_err());
    }
}
