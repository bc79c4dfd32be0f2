//! Expression grammar shared by the presentation format and the CLI.
//!
//! Precedence, tightest first: `^` (word powers, exponent >= 0), `*`
//! (noncommutative product), unary `-`, then `+` and binary `-`.
//! Juxtaposition is not multiplication. Scalars are integers, fractions
//! `a/b`, and `z` for the primitive root of the ambient cyclotomic field.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::free::{GeneratorTable, NcPolynomial};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Lexer {
    tokens: Vec<(Token, usize)>,
    pos: usize,
}

fn syntax_error(col: usize, msg: impl Into<String>) -> Error {
    Error::SyntaxError {
        line: 0,
        col,
        msg: msg.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(Token, usize)>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            ' ' | '\t' => {
                i += 1;
            }
            '+' => {
                out.push((Token::Plus, col));
                i += 1;
            }
            '-' => {
                out.push((Token::Minus, col));
                i += 1;
            }
            '*' => {
                out.push((Token::Star, col));
                i += 1;
            }
            '^' => {
                out.push((Token::Caret, col));
                i += 1;
            }
            '/' => {
                out.push((Token::Slash, col));
                i += 1;
            }
            '(' => {
                out.push((Token::LParen, col));
                i += 1;
            }
            ')' => {
                out.push((Token::RParen, col));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let v = s
                    .parse::<i64>()
                    .map_err(|_| Error::FieldLiteralOutOfRange(s.clone()))?;
                out.push((Token::Int(v), start + 1));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_')
                {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push((Token::Ident(s), start + 1));
            }
            other => {
                return Err(syntax_error(col, format!("unexpected character '{other}'")));
            }
        }
    }
    Ok(out)
}

impl Lexer {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(_, c)| *c)
            .unwrap_or_else(|| self.tokens.last().map(|(_, c)| c + 1).unwrap_or(1))
    }

    fn advance(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: &Token, what: &str) -> Result<()> {
        if self.peek() == Some(t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(syntax_error(self.col(), format!("expected {what}")))
        }
    }
}

pub struct ExprParser<'a> {
    pub table: &'a Arc<GeneratorTable>,
    pub field: &'a FieldSpec,
}

impl<'a> ExprParser<'a> {
    pub fn new(table: &'a Arc<GeneratorTable>, field: &'a FieldSpec) -> ExprParser<'a> {
        ExprParser { table, field }
    }

    pub fn parse(&self, text: &str) -> Result<NcPolynomial> {
        let mut lexer = Lexer {
            tokens: tokenize(text)?,
            pos: 0,
        };
        if lexer.tokens.is_empty() {
            return Err(syntax_error(1, "empty expression"));
        }
        let poly = self.parse_sum(&mut lexer)?;
        if lexer.peek().is_some() {
            return Err(syntax_error(lexer.col(), "trailing input"));
        }
        Ok(poly)
    }

    fn parse_sum(&self, lx: &mut Lexer) -> Result<NcPolynomial> {
        let mut acc = self.parse_unary(lx)?;
        loop {
            match lx.peek() {
                Some(Token::Plus) => {
                    lx.advance();
                    acc = acc.add(&self.parse_unary(lx)?)?;
                }
                Some(Token::Minus) => {
                    lx.advance();
                    acc = acc.sub(&self.parse_unary(lx)?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_unary(&self, lx: &mut Lexer) -> Result<NcPolynomial> {
        if lx.peek() == Some(&Token::Minus) {
            lx.advance();
            return Ok(self.parse_unary(lx)?.neg());
        }
        self.parse_product(lx)
    }

    fn parse_product(&self, lx: &mut Lexer) -> Result<NcPolynomial> {
        let mut acc = self.parse_power(lx)?;
        while lx.peek() == Some(&Token::Star) {
            lx.advance();
            acc = acc.mul(&self.parse_power(lx)?)?;
        }
        Ok(acc)
    }

    fn parse_power(&self, lx: &mut Lexer) -> Result<NcPolynomial> {
        let base = self.parse_atom(lx)?;
        if lx.peek() == Some(&Token::Caret) {
            lx.advance();
            let col = lx.col();
            match lx.advance() {
                Some(Token::Int(e)) if e >= 0 => {
                    let e = u32::try_from(e)
                        .map_err(|_| Error::FieldLiteralOutOfRange(e.to_string()))?;
                    return base.pow(e);
                }
                _ => return Err(syntax_error(col, "exponent must be a nonnegative integer")),
            }
        }
        Ok(base)
    }

    fn parse_atom(&self, lx: &mut Lexer) -> Result<NcPolynomial> {
        let col = lx.col();
        match lx.advance() {
            Some(Token::Int(v)) => {
                // Fraction literal a/b.
                if lx.peek() == Some(&Token::Slash) {
                    lx.advance();
                    let dcol = lx.col();
                    match lx.advance() {
                        Some(Token::Int(d)) => {
                            if d == 0
                                || (self.field.characteristic() != 0
                                    && (d as u64).is_multiple_of(self.field.characteristic()))
                            {
                                return Err(Error::FieldLiteralOutOfRange(format!("{v}/{d}")));
                            }
                            let s = Scalar::from_ratio(v, d, self.field)?;
                            Ok(NcPolynomial::monomial(
                                self.table,
                                crate::free::Word::empty(),
                                s,
                            ))
                        }
                        _ => Err(syntax_error(dcol, "expected denominator")),
                    }
                } else {
                    let s = Scalar::from_integer(v, self.field);
                    Ok(NcPolynomial::monomial(
                        self.table,
                        crate::free::Word::empty(),
                        s,
                    ))
                }
            }
            Some(Token::Ident(name)) => {
                if let Some(g) = self.table.index_of(&name) {
                    return Ok(NcPolynomial::generator(self.table, self.field, g));
                }
                if name == "z" {
                    if let FieldSpec::Cyclotomic(n) = self.field {
                        let s = Scalar::zeta(*n);
                        return Ok(NcPolynomial::monomial(
                            self.table,
                            crate::free::Word::empty(),
                            s,
                        ));
                    }
                    return Err(Error::FieldLiteralOutOfRange(
                        "z outside a cyclotomic field".into(),
                    ));
                }
                Err(Error::UnknownGenerator(name))
            }
            Some(Token::LParen) => {
                let inner = self.parse_sum(lx)?;
                lx.expect(&Token::RParen, "closing parenthesis")?;
                Ok(inner)
            }
            _ => Err(syntax_error(col, "expected a term")),
        }
    }
}

/// Parses a bare scalar (no generators): integers, fractions, z-polynomials.
pub fn parse_scalar(field: &FieldSpec, text: &str) -> Result<Scalar> {
    let empty = GeneratorTable::new(Vec::new(), Vec::new(), 1)?;
    let parser = ExprParser::new(&empty, field);
    let poly = parser.parse(text)?;
    if poly.is_zero() {
        return Ok(Scalar::zero(field));
    }
    match poly.terms() {
        [(w, c)] if w.is_empty() => Ok(c.clone()),
        _ => Err(syntax_error(1, "expected a scalar expression")),
    }
}
