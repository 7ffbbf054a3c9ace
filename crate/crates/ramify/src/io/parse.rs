//! Recursive-descent parser for the tower expression grammar:
//!
//! ```text
//! expression := ['+'|'-'] term (('+'|'-') term)*
//! term       := factor ('*' factor)*
//! factor     := integer | variable ['^' ['-'] integer]
//! variable   := 'x' | 'f1' | ... | 'f9'
//! ```
//!
//! Whitespace is insignificant.  Only x may carry a negative exponent:
//! generators are algebraic over the base field, so their negative powers
//! are not monomials.  Error positions are 1-based character offsets.

use crate::arith::{FpElement, Prime};
use crate::error::{Error, ParseError};
use crate::tower::{TowerElement, TowerMonomial};

/// Largest generator index the surface syntax admits.
pub const MAX_GENERATOR: usize = 9;

#[derive(Clone, PartialEq, Eq, Debug)]
enum Token {
    Plus,
    Minus,
    Star,
    Caret,
    Int(i64),
    X,
    Gen(usize),
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Plus => "'+'".into(),
            Token::Minus => "'-'".into(),
            Token::Star => "'*'".into(),
            Token::Caret => "'^'".into(),
            Token::Int(v) => format!("'{v}'"),
            Token::X => "'x'".into(),
            Token::Gen(i) => format!("'f{i}'"),
        }
    }
}

fn tokenize(src: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0usize;
    while i < chars.len() {
        let pos = i + 1;
        match chars[i] {
            c if c.is_whitespace() => i += 1,
            '+' => {
                out.push((pos, Token::Plus));
                i += 1;
            }
            '-' => {
                out.push((pos, Token::Minus));
                i += 1;
            }
            '*' => {
                out.push((pos, Token::Star));
                i += 1;
            }
            '^' => {
                out.push((pos, Token::Caret));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let value = text.parse::<i64>().map_err(|_| ParseError {
                    position: pos,
                    expected: "an integer below 2^63".into(),
                    found: text.clone(),
                })?;
                out.push((pos, Token::Int(value)));
            }
            'a'..='z' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_lowercase() {
                    i += 1;
                }
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                let token = match word.as_str() {
                    "x" => Some(Token::X),
                    _ => word
                        .strip_prefix('f')
                        .filter(|rest| rest.len() == 1)
                        .and_then(|rest| rest.parse::<usize>().ok())
                        .filter(|&n| (1..=MAX_GENERATOR).contains(&n))
                        .map(Token::Gen),
                };
                match token {
                    Some(token) => out.push((pos, token)),
                    None => {
                        return Err(ParseError {
                            position: pos,
                            expected: "a variable (x, f1..f9)".into(),
                            found: word,
                        })
                    }
                }
            }
            other => {
                return Err(ParseError {
                    position: pos,
                    expected: "an operator, integer, or variable".into(),
                    found: other.to_string(),
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    cursor: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.cursor).map(|(_, t)| t)
    }

    fn advance(&mut self) {
        self.cursor += 1;
    }

    fn error(&self, expected: &str) -> ParseError {
        let (position, found) = match self.tokens.get(self.cursor) {
            Some((pos, t)) => (*pos, t.describe()),
            None => (self.end, "end of input".into()),
        };
        ParseError { position, expected: expected.into(), found }
    }

    /// Reads an optional `'^' ['-'] integer` suffix; defaults to 1.
    fn exponent(&mut self, allow_negative: bool) -> Result<i64, ParseError> {
        if self.peek() != Some(&Token::Caret) {
            return Ok(1);
        }
        self.advance();
        let mut negative = false;
        if self.peek() == Some(&Token::Minus) {
            if !allow_negative {
                return Err(self.error("a nonnegative exponent (only x may have negative powers)"));
            }
            negative = true;
            self.advance();
        }
        let Some(&Token::Int(v)) = self.peek() else {
            return Err(self.error("an integer exponent"));
        };
        self.advance();
        Ok(if negative { -v } else { v })
    }

    fn factor(
        &mut self,
        p: Prime,
        coeff: &mut FpElement,
        x_exp: &mut i64,
        gen_exps: &mut Vec<u32>,
    ) -> Result<(), Error> {
        match self.peek() {
            Some(&Token::Int(v)) => {
                self.advance();
                if self.peek() == Some(&Token::Caret) {
                    return Err(self
                        .error("'*', '+', '-', or end of input (exponents apply to variables only)")
                        .into());
                }
                *coeff = *coeff * FpElement::new(v, p);
            }
            Some(Token::X) => {
                self.advance();
                let e = self.exponent(true)?;
                *x_exp = x_exp
                    .checked_add(e)
                    .ok_or_else(|| Error::invalid("x exponent overflows 64 bits"))?;
            }
            Some(&Token::Gen(idx)) => {
                self.advance();
                let e = self.exponent(false)?;
                let e = u32::try_from(e).map_err(|_| {
                    Error::invalid(format!("generator exponent {e} is too large"))
                })?;
                if gen_exps.len() < idx {
                    gen_exps.resize(idx, 0);
                }
                gen_exps[idx - 1] = gen_exps[idx - 1]
                    .checked_add(e)
                    .ok_or_else(|| Error::invalid("generator exponent overflows 32 bits"))?;
            }
            _ => return Err(self.error("an integer or variable").into()),
        }
        Ok(())
    }

    fn term(&mut self, p: Prime) -> Result<TowerElement, Error> {
        let mut coeff = FpElement::one(p);
        let mut x_exp = 0i64;
        let mut gen_exps: Vec<u32> = Vec::new();
        loop {
            self.factor(p, &mut coeff, &mut x_exp, &mut gen_exps)?;
            if self.peek() == Some(&Token::Star) {
                self.advance();
            } else {
                break;
            }
        }
        Ok(TowerElement::monomial(p, TowerMonomial::new(x_exp, gen_exps), coeff))
    }
}

/// Parses an expression into a tower element with coefficients mod p.
pub fn parse_expression(src: &str, p: Prime) -> Result<TowerElement, Error> {
    let tokens = tokenize(src)?;
    let end = src.chars().count() + 1;
    let mut parser = Parser { tokens, cursor: 0, end };
    let mut acc = TowerElement::zero(p, 0);
    let mut negate = match parser.peek() {
        Some(Token::Plus) => {
            parser.advance();
            false
        }
        Some(Token::Minus) => {
            parser.advance();
            true
        }
        _ => false,
    };
    loop {
        let term = parser.term(p)?;
        acc = acc.add(&if negate { term.neg() } else { term })?;
        match parser.peek() {
            None => break,
            Some(Token::Plus) => {
                parser.advance();
                negate = false;
            }
            Some(Token::Minus) => {
                parser.advance();
                negate = true;
            }
            Some(_) => return Err(parser.error("'+', '-', or end of input").into()),
        }
    }
    Ok(acc)
}
