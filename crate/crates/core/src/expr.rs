//! Tokenizer and parser for the textual grammar shared by scalars, free
//! algebra elements and smash-product elements.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/' | '·' | <juxtaposition>) unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' ['-'] integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! Identifiers are interpreted by the caller (`z`, `x1`, `g`, `h2`, …).

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::scalar::{ScalarError, MAX_EXPONENT};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Expr {
    Int(BigInt),
    Symbol(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

fn syntax(pos: usize, msg: impl Into<String>) -> ScalarError {
    ScalarError::Syntax { pos, msg: msg.into() }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ScalarError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, ch) = chars[i];
        match ch {
            c if c.is_whitespace() => i += 1,
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().map(|(_, c)| c).collect();
                out.push((pos, Token::Int(digits.parse().expect("digits"))));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                    i += 1;
                }
                let ident: String = chars[start..i].iter().map(|(_, c)| c).collect();
                out.push((pos, Token::Ident(ident)));
            }
            '+' => {
                out.push((pos, Token::Plus));
                i += 1;
            }
            '-' | '−' => {
                out.push((pos, Token::Minus));
                i += 1;
            }
            '*' | '·' => {
                out.push((pos, Token::Star));
                i += 1;
            }
            '/' => {
                out.push((pos, Token::Slash));
                i += 1;
            }
            '^' => {
                out.push((pos, Token::Caret));
                i += 1;
            }
            '(' => {
                out.push((pos, Token::LParen));
                i += 1;
            }
            ')' => {
                out.push((pos, Token::RParen));
                i += 1;
            }
            other => return Err(syntax(pos, format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn expr(&mut self) -> Result<Expr, ScalarError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ScalarError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Token::Slash) => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Token::Int(_)) | Some(Token::Ident(_)) | Some(Token::LParen) => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ScalarError> {
        match self.peek() {
            Some(Token::Minus) => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some(Token::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr, ScalarError> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.bump();
        let exp = self.exponent()?;
        Ok(Expr::Pow(Box::new(base), exp))
    }

    fn exponent(&mut self) -> Result<i64, ScalarError> {
        let pos = self.pos();
        match self.bump() {
            Some(Token::Minus) => Ok(-self.exponent()?),
            Some(Token::LParen) => {
                let e = self.exponent()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(e),
                    _ => Err(syntax(self.pos(), "expected `)` after exponent")),
                }
            }
            Some(Token::Int(n)) => match n.to_i64() {
                Some(v) if v <= MAX_EXPONENT => Ok(v),
                _ => Err(ScalarError::ExponentOverflow),
            },
            _ => Err(syntax(pos, "expected an integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Expr, ScalarError> {
        let pos = self.pos();
        match self.bump() {
            Some(Token::Int(n)) => Ok(Expr::Int(n)),
            Some(Token::Ident(s)) => Ok(Expr::Symbol(s)),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(syntax(self.pos(), "unbalanced parenthesis")),
                }
            }
            Some(_) => Err(syntax(pos, "expected a number, symbol or `(`")),
            None => Err(syntax(pos, "unexpected end of input")),
        }
    }
}

pub(crate) fn parse(text: &str) -> Result<Expr, ScalarError> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(syntax(0, "empty expression"));
    }
    let mut parser = Parser { tokens, at: 0, end: text.len() };
    let e = parser.expr()?;
    if parser.at < parser.tokens.len() {
        return Err(syntax(parser.pos(), "trailing input"));
    }
    Ok(e)
}

/// Target algebra for evaluating a parsed expression.
pub(crate) trait Interpret {
    type Value;
    type Error: From<ScalarError>;

    fn int(&self, n: &BigInt) -> Result<Self::Value, Self::Error>;
    fn symbol(&self, name: &str) -> Result<Self::Value, Self::Error>;
    fn add(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value, Self::Error>;
    fn sub(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value, Self::Error>;
    fn mul(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value, Self::Error>;
    fn div(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value, Self::Error>;
    fn neg(&self, a: Self::Value) -> Result<Self::Value, Self::Error>;
    fn pow(&self, a: Self::Value, e: i64) -> Result<Self::Value, Self::Error>;

    fn eval(&self, e: &Expr) -> Result<Self::Value, Self::Error> {
        match e {
            Expr::Int(n) => self.int(n),
            Expr::Symbol(s) => self.symbol(s),
            Expr::Neg(a) => {
                let a = self.eval(a)?;
                self.neg(a)
            }
            Expr::Add(a, b) => {
                let (a, b) = (self.eval(a)?, self.eval(b)?);
                self.add(a, b)
            }
            Expr::Sub(a, b) => {
                let (a, b) = (self.eval(a)?, self.eval(b)?);
                self.sub(a, b)
            }
            Expr::Mul(a, b) => {
                let (a, b) = (self.eval(a)?, self.eval(b)?);
                self.mul(a, b)
            }
            Expr::Div(a, b) => {
                let (a, b) = (self.eval(a)?, self.eval(b)?);
                self.div(a, b)
            }
            Expr::Pow(a, k) => {
                let a = self.eval(a)?;
                self.pow(a, *k)
            }
        }
    }
}

/// Parses `x<digits>` into a 1-based letter index.
pub(crate) fn letter_index(name: &str) -> Option<usize> {
    let digits = name.strip_prefix('x')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok().filter(|&i| i >= 1)
}

/// Parses `h<digits>` into a 1-based group-generator index.
pub(crate) fn generator_index(name: &str) -> Option<usize> {
    let digits = name.strip_prefix('h')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok().filter(|&i| i >= 1)
}
