//! Recursive-descent parser for the expression grammar.
//!
//! Tokenizes first, then descends `expr -> term -> factor -> power -> atom`.
//! Literal arithmetic that the printer relies on is folded here: unary minus
//! on a constant becomes a signed constant, and a constant divided by a
//! nonzero rational constant becomes a single rational constant. That keeps
//! parse/unparse an involution on constants like `(-128/7)` while leaving
//! `1/0` as a division node whose error surfaces at evaluation time.

use super::{Expr, Number, ParseError};
use num_rational::Rational64;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Number(Number),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    pos: usize,
}

/// Parse an expression string into a tree.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(ParseError::new(0, "empty expression"));
    }
    let mut parser = Parser { tokens, index: 0 };
    let expr = parser.expr()?;
    if let Some(tok) = parser.peek() {
        return Err(ParseError::new(
            tok.pos,
            format!("unexpected token `{}`", describe(&tok.tok)),
        ));
    }
    Ok(expr)
}

fn describe(tok: &Tok) -> String {
    match tok {
        Tok::Number(n) => format!("{}", n.to_f64()),
        Tok::Ident(name) => name.clone(),
        Tok::Plus => "+".into(),
        Tok::Minus => "-".into(),
        Tok::Star => "*".into(),
        Tok::Slash => "/".into(),
        Tok::Caret => "^".into(),
        Tok::LParen => "(".into(),
        Tok::RParen => ")".into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i;
        match c {
            c if c.is_whitespace() => {
                i += 1;
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                let tok = match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '/' => Tok::Slash,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    _ => Tok::RParen,
                };
                tokens.push(Token { tok, pos });
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if i < chars.len() && chars[i] == '.' {
                    i += 1;
                    if i >= chars.len() || !chars[i].is_ascii_digit() {
                        return Err(ParseError::new(i, "expected digits after decimal point"));
                    }
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                let literal: String = chars[start..i].iter().collect();
                tokens.push(Token {
                    tok: Tok::Number(parse_number(&literal, start)?),
                    pos: start,
                });
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let name: String = chars[start..i].iter().collect();
                // A numeric literal directly before a name multiplies: 5x^17.
                if matches!(tokens.last().map(|t| &t.tok), Some(Tok::Number(_))) {
                    tokens.push(Token {
                        tok: Tok::Star,
                        pos: start,
                    });
                }
                tokens.push(Token {
                    tok: Tok::Ident(name),
                    pos: start,
                });
            }
            other => {
                return Err(ParseError::new(pos, format!("unknown token `{other}`")));
            }
        }
    }
    Ok(tokens)
}

/// Convert a digits[.digits] literal to an exact rational, falling back to
/// floating point when 64 bits cannot hold it.
fn parse_number(literal: &str, pos: usize) -> Result<Number, ParseError> {
    let (int_part, frac_part) = match literal.split_once('.') {
        Some((i, f)) => (i, f),
        None => (literal, ""),
    };
    let mut numer: i64 = 0;
    let mut overflow = false;
    for c in int_part.chars().chain(frac_part.chars()) {
        let digit = (c as u8 - b'0') as i64;
        numer = match numer.checked_mul(10).and_then(|n| n.checked_add(digit)) {
            Some(n) => n,
            None => {
                overflow = true;
                break;
            }
        };
    }
    let denom = 10i64.checked_pow(frac_part.len() as u32);
    match (overflow, denom) {
        (false, Some(d)) => Ok(Number::Rational(Rational64::new(numer, d))),
        _ => literal
            .parse::<f64>()
            .map(Number::Float)
            .map_err(|_| ParseError::new(pos, "malformed numeric literal")),
    }
}

struct Parser {
    tokens: Vec<Token>,
    index: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.index)
    }

    fn next(&mut self) -> Option<Token> {
        let tok = self.tokens.get(self.index).cloned();
        if tok.is_some() {
            self.index += 1;
        }
        tok
    }

    fn end_pos(&self) -> usize {
        self.tokens.last().map(|t| t.pos + 1).unwrap_or(0)
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ParseError> {
        match self.next() {
            Some(tok) if tok.tok == want => Ok(()),
            Some(tok) => Err(ParseError::new(
                tok.pos,
                format!("expected {what}, found `{}`", describe(&tok.tok)),
            )),
            None => Err(ParseError::new(self.end_pos(), format!("expected {what}"))),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        while let Some(tok) = self.peek() {
            let op = match tok.tok {
                Tok::Plus => Tok::Plus,
                Tok::Minus => Tok::Minus,
                _ => break,
            };
            self.next();
            let rhs = self.term()?;
            lhs = match op {
                Tok::Plus => Expr::Add(Box::new(lhs), Box::new(rhs)),
                _ => Expr::Sub(Box::new(lhs), Box::new(rhs)),
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        while let Some(tok) = self.peek() {
            let op = match tok.tok {
                Tok::Star => Tok::Star,
                Tok::Slash => Tok::Slash,
                _ => break,
            };
            self.next();
            let rhs = self.factor()?;
            lhs = match op {
                Tok::Star => Expr::Mul(Box::new(lhs), Box::new(rhs)),
                _ => fold_div(lhs, rhs),
            };
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if matches!(self.peek().map(|t| &t.tok), Some(Tok::Minus)) {
            self.next();
            let operand = self.factor()?;
            return Ok(fold_neg(operand));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let mut base = self.atom()?;
        while matches!(self.peek().map(|t| &t.tok), Some(Tok::Caret)) {
            self.next();
            let exponent = self.exponent()?;
            base = Expr::Pow(Box::new(base), exponent);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.next() {
            Some(Token {
                tok: Tok::Number(n),
                ..
            }) => Ok(Expr::Constant(n)),
            Some(Token {
                tok: Tok::Ident(name),
                pos,
            }) => {
                if name == "sin" || name == "cos" {
                    if !matches!(self.peek().map(|t| &t.tok), Some(Tok::LParen)) {
                        return Err(ParseError::new(
                            pos,
                            format!("{name} requires a parenthesized argument"),
                        ));
                    }
                    self.next();
                    let arg = self.expr()?;
                    self.expect(Tok::RParen, "`)`")?;
                    return Ok(if name == "sin" {
                        Expr::Sin(Box::new(arg))
                    } else {
                        Expr::Cos(Box::new(arg))
                    });
                }
                Ok(Expr::Variable(name))
            }
            Some(Token {
                tok: Tok::LParen, ..
            }) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some(tok) => Err(ParseError::new(
                tok.pos,
                format!("expected a value, found `{}`", describe(&tok.tok)),
            )),
            None => Err(ParseError::new(self.end_pos(), "expected a value")),
        }
    }

    /// Exponents are rational literals: `2`, `-2`, `0.5`, `(5/3)`, `(-128/7)`.
    fn exponent(&mut self) -> Result<Rational64, ParseError> {
        match self.next() {
            Some(Token {
                tok: Tok::Number(n),
                pos,
            }) => rational_literal(n, pos),
            Some(Token {
                tok: Tok::Minus, ..
            }) => {
                let pos = self.peek().map(|t| t.pos).unwrap_or(self.end_pos());
                match self.next() {
                    Some(Token {
                        tok: Tok::Number(n),
                        ..
                    }) => Ok(-rational_literal(n, pos)?),
                    _ => Err(ParseError::new(pos, "expected a numeric exponent")),
                }
            }
            Some(Token {
                tok: Tok::LParen, ..
            }) => {
                let negative = if matches!(self.peek().map(|t| &t.tok), Some(Tok::Minus)) {
                    self.next();
                    true
                } else {
                    false
                };
                let pos = self.peek().map(|t| t.pos).unwrap_or(self.end_pos());
                let numer = match self.next() {
                    Some(Token {
                        tok: Tok::Number(n),
                        pos,
                    }) => rational_literal(n, pos)?,
                    Some(Token {
                        tok: Tok::Ident(name),
                        pos,
                    }) => {
                        return Err(ParseError::new(
                            pos,
                            format!("variable exponent `{name}` is not allowed"),
                        ))
                    }
                    _ => return Err(ParseError::new(pos, "expected a rational exponent")),
                };
                let value = if matches!(self.peek().map(|t| &t.tok), Some(Tok::Slash)) {
                    self.next();
                    let pos = self.peek().map(|t| t.pos).unwrap_or(self.end_pos());
                    let denom = match self.next() {
                        Some(Token {
                            tok: Tok::Number(n),
                            pos,
                        }) => rational_literal(n, pos)?,
                        _ => return Err(ParseError::new(pos, "expected an exponent denominator")),
                    };
                    if denom == Rational64::from_integer(0) {
                        return Err(ParseError::new(pos, "zero denominator in exponent"));
                    }
                    checked_rational_div(numer, denom)
                        .ok_or_else(|| ParseError::new(pos, "exponent literal is too large"))?
                } else {
                    numer
                };
                self.expect(Tok::RParen, "`)` after exponent")?;
                Ok(if negative { -value } else { value })
            }
            Some(Token {
                tok: Tok::Ident(name),
                pos,
            }) => Err(ParseError::new(
                pos,
                format!("variable exponent `{name}` is not allowed"),
            )),
            Some(tok) => Err(ParseError::new(
                tok.pos,
                format!("expected a rational exponent, found `{}`", describe(&tok.tok)),
            )),
            None => Err(ParseError::new(self.end_pos(), "expected an exponent")),
        }
    }
}

fn rational_literal(n: Number, pos: usize) -> Result<Rational64, ParseError> {
    match n {
        Number::Rational(r) => Ok(r),
        Number::Float(_) => Err(ParseError::new(pos, "exponent literal is too large")),
    }
}

fn fold_neg(operand: Expr) -> Expr {
    match operand {
        Expr::Constant(Number::Rational(r)) => Expr::Constant(Number::Rational(-r)),
        Expr::Constant(Number::Float(f)) => Expr::Constant(Number::Float(-f)),
        other => Expr::Neg(Box::new(other)),
    }
}

fn fold_div(lhs: Expr, rhs: Expr) -> Expr {
    if let (Expr::Constant(Number::Rational(a)), Expr::Constant(Number::Rational(b))) = (&lhs, &rhs)
    {
        if *b.numer() != 0 {
            if let Some(q) = checked_rational_div(*a, *b) {
                return Expr::Constant(Number::Rational(q));
            }
        }
    }
    Expr::Div(Box::new(lhs), Box::new(rhs))
}

/// Rational division through 128-bit intermediates; None when the reduced
/// result does not fit 64 bits (the caller then keeps the division node).
fn checked_rational_div(a: Rational64, b: Rational64) -> Option<Rational64> {
    let mut numer = *a.numer() as i128 * *b.denom() as i128;
    let mut denom = *a.denom() as i128 * *b.numer() as i128;
    if denom == 0 {
        return None;
    }
    if denom < 0 {
        numer = -numer;
        denom = -denom;
    }
    let g = gcd_i128(numer.unsigned_abs(), denom.unsigned_abs()).max(1);
    numer /= g as i128;
    denom /= g as i128;
    Some(Rational64::new_raw(
        i64::try_from(numer).ok()?,
        i64::try_from(denom).ok()?,
    ))
}

fn gcd_i128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}
