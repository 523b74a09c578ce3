//! Text input for field elements.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/')? unary)*      juxtaposition multiplies
//! unary   := '-' unary | power
//! power   := primary ('^' '-'? integer)?
//! primary := integer | 'w' | 't' | 'r2' | 'r3' | '(' expr ')'
//! ```

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use super::ratfunc::RatFunc;
use super::scalar::ConstScalar;
use super::tower::{TowerElement, TowerSpec};
use super::FieldError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("parse error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("`{0}` is not available in this tower")]
    MissingLayer(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Int(BigInt),
    Omega,
    T,
    R2,
    R3,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push((start, Tok::Int(text.parse().unwrap())));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            // r2 / r3 carry a digit; every other identifier is one letter
            i += 1;
            if c == 'r' && i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Ident(chars[start..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(ParseError::Syntax {
                pos: i,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.here(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else if matches!(
                self.peek(),
                Some(Tok::Int(_) | Tok::Ident(_) | Tok::Op('('))
            ) {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.primary()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let Some(Tok::Int(n)) = self.peek().cloned() else {
            return self.err("expected an integer exponent");
        };
        self.pos += 1;
        let Ok(mut e) = i32::try_from(n) else {
            return self.err("exponent too large");
        };
        if neg {
            e = -e;
        }
        Ok(Expr::Pow(Box::new(base), e))
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let Some(tok) = self.peek().cloned() else {
            return self.err("unexpected end of input");
        };
        self.pos += 1;
        match tok {
            Tok::Int(n) => Ok(Expr::Int(n)),
            Tok::Ident(id) => match id.as_str() {
                "t" => Ok(Expr::T),
                "w" => Ok(Expr::Omega),
                "r2" => Ok(Expr::R2),
                "r3" => Ok(Expr::R3),
                _ => {
                    self.pos -= 1;
                    self.err(format!("unknown symbol `{id}`"))
                }
            },
            Tok::Op('(') => {
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Tok::Op(c) => {
                self.pos -= 1;
                self.err(format!("unexpected `{c}`"))
            }
        }
    }
}

pub fn parse_expr(s: &str) -> Result<Expr, ParseError> {
    let toks = lex(s)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: s.len(),
    };
    if p.peek().is_none() {
        return p.err("empty expression");
    }
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

impl Expr {
    pub fn uses_r2(&self) -> bool {
        self.any(&|e| matches!(e, Expr::R2))
    }

    pub fn uses_r3(&self) -> bool {
        self.any(&|e| matches!(e, Expr::R3))
    }

    fn any(&self, f: &dyn Fn(&Expr) -> bool) -> bool {
        if f(self) {
            return true;
        }
        match self {
            Expr::Neg(a) | Expr::Pow(a, _) => a.any(f),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.any(f) || b.any(f)
            }
            _ => false,
        }
    }

    pub fn eval(&self, spec: &Arc<TowerSpec>) -> Result<TowerElement, ParseError> {
        Ok(match self {
            Expr::Int(n) => TowerElement::from_scalar(
                spec,
                ConstScalar::rational(BigRational::from_integer(n.clone())),
            ),
            Expr::Omega => TowerElement::from_scalar(spec, ConstScalar::omega()),
            Expr::T => TowerElement::t(spec),
            Expr::R2 => TowerElement::sqrt_alpha(spec)
                .ok_or_else(|| ParseError::MissingLayer("r2".into()))?,
            Expr::R3 => TowerElement::cbrt_beta(spec)
                .ok_or_else(|| ParseError::MissingLayer("r3".into()))?,
            Expr::Neg(a) => a.eval(spec)?.neg(),
            Expr::Add(a, b) => a.eval(spec)?.try_add(&b.eval(spec)?)?,
            Expr::Sub(a, b) => a.eval(spec)?.try_sub(&b.eval(spec)?)?,
            Expr::Mul(a, b) => a.eval(spec)?.try_mul(&b.eval(spec)?)?,
            Expr::Div(a, b) => a.eval(spec)?.try_div(&b.eval(spec)?)?,
            Expr::Pow(a, e) => {
                let base = a.eval(spec)?;
                if *e < 0 {
                    base.inv()?.pow(e.unsigned_abs())
                } else {
                    base.pow(*e as u32)
                }
            }
        })
    }
}

/// Parse an element of K = k(t).
pub fn parse_ratfunc(s: &str) -> Result<RatFunc, ParseError> {
    let e = parse_expr(s)?;
    let x = e.eval(&TowerSpec::base())?;
    Ok(x.as_k().cloned().expect("base tower elements lie in K"))
}

/// Parse an element of the tower `spec`.
pub fn parse_element(s: &str, spec: &Arc<TowerSpec>) -> Result<TowerElement, ParseError> {
    parse_expr(s)?.eval(spec)
}
