//! Expression grammar shared by scalar parsing and the command line.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := primary ('^' exponent)?
//! exponent := '-'? integer | '(' '-'? integer ('/' integer)? ')'
//! primary := integer | 'q' | 'c' | 'v2' | 'v0' | 'vm2' | 'gamma' | '(' expr ')'
//! ```
//!
//! Fractional exponents are only meaningful on `q`, where `q^(1/2)` is the
//! square root `u` of the coefficient field.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use thiserror::Error;

use crate::scalar::{Field, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

/// Degree-one generators and the invariant cubic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Atom {
    V2,
    V0,
    Vm2,
    Gamma,
}

impl Atom {
    pub fn name(self) -> &'static str {
        match self {
            Atom::V2 => "v2",
            Atom::V0 => "v0",
            Atom::Vm2 => "vm2",
            Atom::Gamma => "gamma",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Param {
    Q,
    C,
}

/// Exponent `num/den` with `den` equal to 1 or 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Exponent {
    pub num: i64,
    pub den: i64,
}

impl Exponent {
    pub fn integer(self) -> Option<i64> {
        (self.den == 1).then_some(self.num)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Int(BigInt),
    Param(Param),
    Atom(Atom),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Exponent),
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0 };
    let e = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(ParseError {
            position: t.position,
            message: format!("unexpected '{}'", t.kind),
        });
    }
    Ok(e)
}

#[derive(Debug, Clone, PartialEq)]
enum TokenKind {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Int(n) => write!(f, "{}", n),
            TokenKind::Ident(s) => write!(f, "{}", s),
            TokenKind::Sym(c) => write!(f, "{}", c),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokenKind,
    position: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token {
                kind: TokenKind::Int(s.parse().expect("digits")),
                position: start,
            });
        } else if ch.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token {
                kind: TokenKind::Ident(chars[start..i].iter().collect()),
                position: start,
            });
        } else if "+-*/^()".contains(ch) {
            out.push(Token {
                kind: TokenKind::Sym(ch),
                position: i,
            });
            i += 1;
        } else {
            return Err(ParseError {
                position: i,
                message: format!("unexpected character '{}'", ch),
            });
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn end_position(&self) -> usize {
        self.tokens
            .last()
            .map(|t| t.position + t.kind.to_string().len())
            .unwrap_or(0)
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if matches!(self.peek(), Some(Token { kind: TokenKind::Sym(s), .. }) if *s == c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error_here(&self, what: &str) -> ParseError {
        match self.peek() {
            Some(t) => ParseError {
                position: t.position,
                message: format!("expected {}, found '{}'", what, t.kind),
            },
            None => ParseError {
                position: self.end_position(),
                message: format!("expected {}, found end of input", what),
            },
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat_sym('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat_sym('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat_sym('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat_sym('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat_sym('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.primary()?;
        if self.eat_sym('^') {
            let exp = self.exponent()?;
            return Ok(Expr::Pow(Box::new(base), exp));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        match self.peek() {
            Some(Token {
                kind: TokenKind::Int(n),
                ..
            }) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.error_here("an integer")),
        }
    }

    fn small(&self, n: BigInt, position: usize) -> Result<i64, ParseError> {
        i64::try_from(n).map_err(|_| ParseError {
            position,
            message: "exponent too large".into(),
        })
    }

    fn exponent(&mut self) -> Result<Exponent, ParseError> {
        let position = self.peek().map(|t| t.position).unwrap_or(self.end_position());
        let (num, den) = if self.eat_sym('(') {
            let neg = self.eat_sym('-');
            let n = self.integer()?;
            let d = if self.eat_sym('/') {
                self.integer()?
            } else {
                BigInt::from(1)
            };
            if !self.eat_sym(')') {
                return Err(self.error_here("')'"));
            }
            (if neg { -n } else { n }, d)
        } else {
            let neg = self.eat_sym('-');
            let n = self.integer()?;
            (if neg { -n } else { n }, BigInt::from(1))
        };
        if den == BigInt::from(0) {
            return Err(ParseError {
                position,
                message: "zero exponent denominator".into(),
            });
        }
        let g = num.gcd(&den);
        let (num, den) = (&num / &g, &den / &g);
        let (num, den) = (self.small(num, position)?, self.small(den, position)?);
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        if den != 1 && den != 2 {
            return Err(ParseError {
                position,
                message: "only integer and half-integer exponents are supported".into(),
            });
        }
        Ok(Exponent { num, den })
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let Some(tok) = self.peek().cloned() else {
            return Err(self.error_here("an operand"));
        };
        match tok.kind {
            TokenKind::Int(n) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            TokenKind::Ident(name) => {
                self.pos += 1;
                match name.as_str() {
                    "q" => Ok(Expr::Param(Param::Q)),
                    "c" => Ok(Expr::Param(Param::C)),
                    "v2" => Ok(Expr::Atom(Atom::V2)),
                    "v0" => Ok(Expr::Atom(Atom::V0)),
                    "vm2" => Ok(Expr::Atom(Atom::Vm2)),
                    "gamma" => Ok(Expr::Atom(Atom::Gamma)),
                    _ => Err(ParseError {
                        position: tok.position,
                        message: format!("unknown identifier '{}'", name),
                    }),
                }
            }
            TokenKind::Sym('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat_sym(')') {
                    return Err(self.error_here("')'"));
                }
                Ok(e)
            }
            TokenKind::Sym(_) => Err(self.error_here("an operand")),
        }
    }
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(..) => 3,
            Expr::Pow(..) => 4,
            Expr::Int(..) | Expr::Param(..) | Expr::Atom(..) => 5,
        }
    }

    /// Whether any algebra generator occurs.
    pub fn has_atoms(&self) -> bool {
        match self {
            Expr::Atom(_) => true,
            Expr::Int(_) | Expr::Param(_) => false,
            Expr::Neg(a) | Expr::Pow(a, _) => a.has_atoms(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.has_atoms() || b.has_atoms()
            }
        }
    }

    /// Evaluates an atom-free expression in `Q(u, c)`.
    pub fn eval_scalar(&self) -> Result<Scalar, ScalarError> {
        Ok(match self {
            Expr::Int(n) => Scalar::from(n.clone()),
            Expr::Param(Param::Q) => Scalar::q(),
            Expr::Param(Param::C) => Scalar::c(),
            Expr::Atom(a) => return Err(ScalarError::NotAScalar(a.name().into())),
            Expr::Neg(a) => a.eval_scalar()?.neg(),
            Expr::Add(a, b) => a.eval_scalar()?.add(&b.eval_scalar()?),
            Expr::Sub(a, b) => a.eval_scalar()?.sub(&b.eval_scalar()?),
            Expr::Mul(a, b) => a.eval_scalar()?.mul(&b.eval_scalar()?),
            Expr::Div(a, b) => a.eval_scalar()?.div(&b.eval_scalar()?)?,
            Expr::Pow(base, e) => match (base.as_ref(), e.integer()) {
                (_, Some(k)) => base.eval_scalar()?.pow(k)?,
                (Expr::Param(Param::Q), None) => Scalar::q_power_half(e.num),
                _ => return Err(ScalarError::NotAScalar("fractional power of a non-q base".into())),
            },
        })
    }

    /// Evaluates an atom-free expression at rational `q` and `c`.
    pub fn eval_rational(&self, q: &BigRational, c: &BigRational) -> Result<BigRational, ScalarError> {
        self.eval_scalar()?.specialize(q, c)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn wrap(e: &Expr, min: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if e.precedence() < min {
                write!(f, "({})", e)
            } else {
                write!(f, "{}", e)
            }
        }
        match self {
            Expr::Int(n) => write!(f, "{}", n),
            Expr::Param(Param::Q) => write!(f, "q"),
            Expr::Param(Param::C) => write!(f, "c"),
            Expr::Atom(a) => write!(f, "{}", a.name()),
            Expr::Neg(a) => {
                write!(f, "-")?;
                wrap(a, 3, f)
            }
            Expr::Add(a, b) => {
                wrap(a, 1, f)?;
                write!(f, " + ")?;
                wrap(b, 2, f)
            }
            Expr::Sub(a, b) => {
                wrap(a, 1, f)?;
                write!(f, " - ")?;
                wrap(b, 2, f)
            }
            Expr::Mul(a, b) => {
                wrap(a, 2, f)?;
                write!(f, "*")?;
                wrap(b, 3, f)
            }
            Expr::Div(a, b) => {
                wrap(a, 2, f)?;
                write!(f, "/")?;
                wrap(b, 3, f)
            }
            Expr::Pow(a, e) => {
                wrap(a, 5, f)?;
                match e.integer() {
                    Some(k) => write!(f, "^{}", k),
                    None => write!(f, "^({}/{})", e.num, e.den),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_products() {
        assert_eq!(
            parse("v2*v0").unwrap(),
            Expr::Mul(Box::new(Expr::Atom(Atom::V2)), Box::new(Expr::Atom(Atom::V0)))
        );
        let e = parse("(1-q^4)/q^3 * v2*vm2").unwrap();
        assert!(e.has_atoms());
        assert_eq!(e.to_string(), "(1 - q^4)/q^3*v2*vm2");
    }

    #[test]
    fn reports_position() {
        let err = parse("v2**").unwrap_err();
        assert_eq!(err.position, 3);
        assert!(parse("v2 + ").is_err());
        assert!(parse("x1").is_err());
        assert!(parse("q^(1/3)").is_err());
    }

    #[test]
    fn whitespace_insensitive() {
        assert_eq!(parse(" v2 *  v0 ").unwrap(), parse("v2*v0").unwrap());
        assert_eq!(parse("q ^ ( 1 / 2 )").unwrap(), parse("q^(1/2)").unwrap());
    }

    fn arb_expr() -> impl Strategy<Value = Expr> {
        let leaf = prop_oneof![
            (0i64..20).prop_map(|n| Expr::Int(n.into())),
            Just(Expr::Param(Param::Q)),
            Just(Expr::Param(Param::C)),
            Just(Expr::Atom(Atom::V2)),
            Just(Expr::Atom(Atom::Vm2)),
            Just(Expr::Atom(Atom::Gamma)),
        ];
        leaf.prop_recursive(4, 32, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(|a| Expr::Neg(Box::new(a))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Div(Box::new(a), Box::new(b))),
                (inner, -3i64..4, 1i64..3).prop_map(|(a, n, d)| {
                    let d = if n % 2 == 0 { 1 } else { d };
                    Expr::Pow(Box::new(a), Exponent { num: n, den: d })
                }),
            ]
        })
    }

    proptest! {
        #[test]
        fn render_then_parse_is_identity(e in arb_expr()) {
            let text = e.to_string();
            prop_assert_eq!(parse(&text).unwrap(), e);
        }
    }
}
