//! Recursive-descent parser for sums of monomials with rational coefficients.
//!
//! ```text
//! expr    := sign? term (sign term)*
//! term    := factor ('*' factor)*
//! factor  := number ('/' number)? | VAR ('^' number)?
//! ```
//! Whitespace is ignored. Series use the variable `T`, polynomials `X1, X2`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::{Poly, Rat};

/// One parsed monomial: coefficient and an exponent per variable.
type Term = (Rat, Vec<u32>);

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [&'a str],
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, vars: &'a [&'a str]) -> Self {
        Self { src: text.as_bytes(), pos: 0, vars }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
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

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse as an integer"))
    }

    fn small_number(&mut self) -> Result<u32> {
        let start = self.pos;
        let n = self.number()?;
        u32::try_from(n).or_else(|_| {
            self.pos = start;
            self.err("exponent too large")
        })
    }

    fn expr(&mut self) -> Result<Vec<Term>> {
        let mut terms = Vec::new();
        if self.peek().is_none() {
            return self.err("empty expression");
        }
        let mut negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let (c, e) = self.term()?;
            terms.push((if negative { -c } else { c }, e));
            match self.peek() {
                None => return Ok(terms),
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(ch) => return self.err(format!("unexpected '{}'", ch as char)),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Term> {
        let mut coeff = Rat::from_integer(1.into());
        let mut exps = vec![0u32; self.vars.len()];
        loop {
            self.factor(&mut coeff, &mut exps)?;
            if !self.eat(b'*') {
                return Ok((coeff, exps));
            }
        }
    }

    fn factor(&mut self, coeff: &mut Rat, exps: &mut [u32]) -> Result<()> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.number()?;
                let den = if self.eat(b'/') {
                    let at = self.pos;
                    let d = self.number()?;
                    if d.is_zero() {
                        self.pos = at;
                        return self.err("zero denominator");
                    }
                    d
                } else {
                    BigInt::from(1)
                };
                *coeff *= Rat::new(num, den);
                Ok(())
            }
            Some(_) => {
                let rest = &self.src[self.pos..];
                // longest variable name first so X1 is not read as a prefix of X10
                let mut order: Vec<usize> = (0..self.vars.len()).collect();
                order.sort_by_key(|&i| std::cmp::Reverse(self.vars[i].len()));
                let Some(k) = order.into_iter().find(|&i| rest.starts_with(self.vars[i].as_bytes()))
                else {
                    return self.err(format!("expected a number or one of {:?}", self.vars));
                };
                self.pos += self.vars[k].len();
                if self.src.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric()) {
                    return self.err("unknown identifier");
                }
                let e = if self.eat(b'^') { self.small_number()? } else { 1 };
                exps[k] += e;
                Ok(())
            }
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a series such as `T^7 - 5/2*T^18` into its exponent map.
/// Terms with a zero coefficient are dropped.
pub fn parse_series(text: &str) -> Result<BTreeMap<usize, Rat>> {
    let terms = Parser::new(text, &["T"]).expr()?;
    let mut out = BTreeMap::new();
    for (c, e) in terms {
        let k = e[0] as usize;
        if out.contains_key(&k) {
            return Err(Error::DuplicateExponent(format!("T^{k}")));
        }
        out.insert(k, c);
    }
    out.retain(|_, c: &mut Rat| !c.is_zero());
    Ok(out)
}

/// Parses a polynomial in `X1, X2` such as `X2^6 + X1^7 + X1^5*X2^2`.
pub fn parse_poly(text: &str) -> Result<Poly> {
    let terms = Parser::new(text, &["X1", "X2"]).expr()?;
    Ok(Poly::from_terms(terms.into_iter().map(|(c, e)| ((e[0], e[1]), c))))
}

/// Parses a single rational `p`, `-p`, `p/q`.
pub fn parse_rational(text: &str) -> Result<Rat> {
    let terms = Parser::new(text, &[]).expr()?;
    match terms.as_slice() {
        [(c, _)] => Ok(c.clone()),
        _ => Err(Error::Parse { pos: 0, msg: format!("expected a single rational, got '{text}'") }),
    }
}
