//! Expressions over signed-bit reals.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary ('*' unary)*
//! unary   := '-' unary | primary
//! primary := literal | '(' expr ')' | name '(' expr ',' expr ')'
//! literal := digits ('/' digits)?
//! name    := 'min' | 'max' | 'avg'
//! ```
//!
//! Whitespace may separate tokens but not the parts of a literal.

use std::fmt;

use signed_bit::arithmetic;
use signed_bit::rational::Fraction;
use signed_bit::{parse_rational, ParseError, Rational, SignedBitNumber};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Literal(Rational),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Min(Box<Expr>, Box<Expr>),
    Max(Box<Expr>, Box<Expr>),
    Avg(Box<Expr>, Box<Expr>),
}

impl Expr {
    /// The signed-bit number the expression denotes.
    pub fn evaluate(&self) -> SignedBitNumber {
        use Expr::*;
        match self {
            Literal(q) => SignedBitNumber::from_rational(q),
            Neg(a) => arithmetic::negate(&a.evaluate()),
            Add(a, b) => arithmetic::add(&a.evaluate(), &b.evaluate()),
            Sub(a, b) => arithmetic::sub(&a.evaluate(), &b.evaluate()),
            Mul(a, b) => match (&**a, &**b) {
                (Literal(q), other) | (other, Literal(q)) => arithmetic::scale(q, &other.evaluate()),
                _ => arithmetic::mul(&a.evaluate(), &b.evaluate()),
            },
            Min(a, b) => arithmetic::min(&a.evaluate(), &b.evaluate()),
            Max(a, b) => arithmetic::max(&a.evaluate(), &b.evaluate()),
            Avg(a, b) => arithmetic::average(&a.evaluate(), &b.evaluate()),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Expr::*;
        match self {
            Literal(q) => write!(f, "{}", Fraction(q)),
            Neg(a) => write!(f, "-({a})"),
            Add(a, b) => write!(f, "({a} + {b})"),
            Sub(a, b) => write!(f, "({a} - {b})"),
            Mul(a, b) => write!(f, "({a} * {b})"),
            Min(a, b) => write!(f, "min({a}, {b})"),
            Max(a, b) => write!(f, "max({a}, {b})"),
            Avg(a, b) => write!(f, "avg({a}, {b})"),
        }
    }
}

/// Parses an expression; errors carry the byte offset of the first
/// offending character.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut parser = Parser { text, pos: 0 };
    let expr = parser.expr()?;
    parser.skip_space();
    if parser.pos < text.len() {
        let message = if parser.peek() == Some(')') { "unbalanced ')'" } else { "unexpected character" };
        return Err(ParseError::new(parser.pos, message));
    }
    Ok(expr)
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn skip_space(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += self.peek().map_or(0, char::len_utf8);
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_space();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else if self.pos >= self.text.len() && c == ')' {
            Err(ParseError::new(self.pos, "unbalanced '('"))
        } else {
            Err(ParseError::new(self.pos, format!("expected '{c}'")))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut left = self.term()?;
        loop {
            if self.eat('+') {
                left = Expr::Add(Box::new(left), Box::new(self.term()?));
            } else if self.eat('-') {
                left = Expr::Sub(Box::new(left), Box::new(self.term()?));
            } else {
                return Ok(left);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut left = self.unary()?;
        while self.eat('*') {
            left = Expr::Mul(Box::new(left), Box::new(self.unary()?));
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        self.skip_space();
        let start = self.pos;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => self.literal(),
            Some(c) if c.is_ascii_alphabetic() => {
                let len = self.text[start..]
                    .find(|c: char| !c.is_ascii_alphanumeric())
                    .unwrap_or(self.text.len() - start);
                let name = &self.text[start..start + len];
                let build: fn(Box<Expr>, Box<Expr>) -> Expr = match name {
                    "min" => Expr::Min,
                    "max" => Expr::Max,
                    "avg" => Expr::Avg,
                    _ => return Err(ParseError::new(start, format!("unknown identifier '{name}'"))),
                };
                self.pos += len;
                self.expect('(')?;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(')')?;
                Ok(build(Box::new(a), Box::new(b)))
            }
            Some(')') => Err(ParseError::new(start, "unbalanced ')'")),
            Some(_) => Err(ParseError::new(start, "expected a number, '(' or a function")),
            None => Err(ParseError::new(start, "unexpected end of input")),
        }
    }

    fn literal(&mut self) -> Result<Expr, ParseError> {
        let start = self.pos;
        let rest = &self.text[start..];
        let digits = |s: &str| s.find(|c: char| !c.is_ascii_digit()).unwrap_or(s.len());
        let mut len = digits(rest);
        if rest[len..].starts_with('/') {
            len += 1 + digits(&rest[len + 1..]);
        }
        let value = parse_rational(&rest[..len]).map_err(|e| ParseError::new(start + e.offset, e.message))?;
        self.pos += len;
        Ok(Expr::Literal(value))
    }
}
