//! Parser for the polynomial text format.
//!
//! Accepts integer-coefficient expressions such as `1+4x+x^2` and
//! `1+2*x*y+2*x*y^2+x^2*y^3`. Factors inside a term may be joined by `*` or
//! juxtaposition; exponents use `^`. Non-integer coefficients (`1/2`, `0.5`)
//! are rejected.

use crate::error::{Error, Result};
use crate::poly::{BiPoly, UniPoly};
use crate::ring::Int;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(Int),
    Var(char),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&ch) = chars.peek() {
        match ch {
            ' ' | '\t' | '\n' => {
                chars.next();
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_digit() {
                        digits.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                if let Some(&c) = chars.peek() {
                    if c == '.' || c == '/' {
                        return Err(Error::Parse(format!(
                            "non-integer coefficient near '{digits}{c}'"
                        )));
                    }
                }
                tokens.push(Token::Num(digits.parse().map_err(|_| {
                    Error::Parse(format!("invalid integer '{digits}'"))
                })?));
            }
            'x' | 'y' => {
                tokens.push(Token::Var(ch));
                chars.next();
            }
            '+' => {
                tokens.push(Token::Plus);
                chars.next();
            }
            '-' => {
                tokens.push(Token::Minus);
                chars.next();
            }
            '*' => {
                tokens.push(Token::Star);
                chars.next();
            }
            '^' => {
                tokens.push(Token::Caret);
                chars.next();
            }
            '(' => {
                tokens.push(Token::LParen);
                chars.next();
            }
            ')' => {
                tokens.push(Token::RParen);
                chars.next();
            }
            _ => return Err(Error::Parse(format!("unexpected character '{ch}'"))),
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    /// expr := ['+' | '-'] term (('+' | '-') term)*
    fn expr(&mut self) -> Result<BiPoly<Int>> {
        let mut acc = BiPoly::zero();
        let mut sign = 1i64;
        match self.peek() {
            Some(Token::Minus) => {
                sign = -1;
                self.next();
            }
            Some(Token::Plus) => {
                self.next();
            }
            _ => {}
        }
        loop {
            let term = self.term()?;
            acc = acc
                + if sign < 0 {
                    -term
                } else {
                    term
                };
            match self.peek() {
                Some(Token::Plus) => {
                    sign = 1;
                    self.next();
                }
                Some(Token::Minus) => {
                    sign = -1;
                    self.next();
                }
                Some(Token::RParen) | None => return Ok(acc),
                Some(t) => return Err(Error::Parse(format!("unexpected token {t:?}"))),
            }
        }
    }

    /// term := factor (['*'] factor)*
    fn term(&mut self) -> Result<BiPoly<Int>> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.next();
                    acc = acc * self.factor()?;
                }
                Some(Token::Num(_)) | Some(Token::Var(_)) | Some(Token::LParen) => {
                    acc = acc * self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    /// factor := integer | var ['^' integer] | '(' expr ')' ['^' integer]
    fn factor(&mut self) -> Result<BiPoly<Int>> {
        match self.next() {
            Some(Token::Num(n)) => Ok(BiPoly::constant(n)),
            Some(Token::Var(v)) => {
                let e = self.exponent()?;
                Ok(match v {
                    'x' => BiPoly::monomial(Int::from(1), e, 0),
                    _ => BiPoly::monomial(Int::from(1), 0, e),
                })
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => {}
                    _ => return Err(Error::Parse("unbalanced parenthesis".into())),
                }
                let e = self.exponent()?;
                let mut acc = BiPoly::one();
                for _ in 0..e {
                    acc = acc * inner.clone();
                }
                Ok(acc)
            }
            t => Err(Error::Parse(format!("expected a factor, found {t:?}"))),
        }
    }

    fn exponent(&mut self) -> Result<usize> {
        if self.peek() == Some(&Token::Caret) {
            self.next();
            match self.next() {
                Some(Token::Num(n)) => {
                    usize::try_from(n.clone()).map_err(|_| Error::Parse(format!("bad exponent {n}")))
                }
                t => Err(Error::Parse(format!("expected exponent, found {t:?}"))),
            }
        } else {
            Ok(1)
        }
    }
}

/// Parse a (possibly bivariate) integer polynomial in `x` and `y`.
pub fn parse_bipoly(input: &str) -> Result<BiPoly<Int>> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut parser = Parser { tokens, pos: 0 };
    let poly = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse("trailing input after polynomial".into()));
    }
    Ok(poly)
}

/// Parse a univariate integer polynomial in `x`; rejects any use of `y`.
pub fn parse_unipoly(input: &str) -> Result<UniPoly<Int>> {
    let p = parse_bipoly(input)?;
    if p.deg_y() > 0 {
        return Err(Error::Parse("expected a univariate polynomial in x".into()));
    }
    Ok(UniPoly::new(
        (0..=p.deg_x()).map(|i| p.coeff(i, 0)).collect(),
    ))
}

/// Parse, requiring a nonzero polynomial.
pub fn parse_bipoly_nonzero(input: &str) -> Result<BiPoly<Int>> {
    let p = parse_bipoly(input)?;
    if p.is_zero() {
        return Err(Error::Parse("polynomial is identically zero".into()));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn univariate_round_trip() {
        for text in ["1+4x+x^2", "1-x", "1", "x^5", "2+3x^2"] {
            let p = parse_unipoly(text).unwrap();
            assert_eq!(p.to_string(), text);
        }
    }

    #[test]
    fn bivariate_round_trip() {
        let text = "1+2*x*y+2*x*y^2+x^2*y^3";
        let p = parse_bipoly(text).unwrap();
        assert_eq!(p.to_string(), text);
    }

    #[test]
    fn juxtaposition_and_stars_agree() {
        assert_eq!(
            parse_bipoly("1+2xy+2xy^2+x^2y^3").unwrap(),
            parse_bipoly("1+2*x*y+2*x*y^2+x^2*y^3").unwrap()
        );
    }

    #[test]
    fn parenthesized_powers() {
        let p = parse_unipoly("(1-x)^2").unwrap();
        assert_eq!(p.to_string(), "1-2x+x^2");
    }

    #[test]
    fn rejects_non_integer_coefficients() {
        assert!(parse_bipoly("1/2+x").is_err());
        assert!(parse_bipoly("0.5x").is_err());
        assert!(parse_bipoly("x+z").is_err());
        assert!(parse_unipoly("1+x*y").is_err());
    }
}
