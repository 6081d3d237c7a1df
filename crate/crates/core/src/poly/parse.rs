//! Recursive-descent parser for the polynomial text grammar:
//!
//! ```text
//! expr     := sign? term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' nat)?
//! base     := rational | var | '(' expr ')'
//! rational := int ('/' nat)?
//! ```
//!
//! Multiplication must be written out; `2x` and `x y` are rejected so that
//! multi-character variable names stay unambiguous. Positions in errors are
//! 0-based character offsets.

use num::{BigInt, Zero};

use super::{MonomialOrder, Polynomial, Rational, Vars};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
}

impl Lexer {
    fn new(text: &str) -> Result<Self> {
        let chars: Vec<char> = text.chars().collect();
        let mut toks = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let start = i;
            let tok = match c {
                c if c.is_whitespace() => {
                    i += 1;
                    continue;
                }
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                c if c.is_ascii_digit() => {
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let s: String = chars[start..i].iter().collect();
                    toks.push((Tok::Num(s.parse().expect("digits")), start));
                    continue;
                }
                c if c.is_alphabetic() || c == '_' => {
                    while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                        i += 1;
                    }
                    toks.push((Tok::Ident(chars[start..i].iter().collect()), start));
                    continue;
                }
                other => {
                    return Err(Error::Syntax {
                        position: start,
                        message: format!("unexpected character `{other}`"),
                    })
                }
            };
            toks.push((tok, start));
            i += 1;
        }
        toks.push((Tok::End, chars.len()));
        Ok(Lexer { toks })
    }
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    vars: &'a Vars,
    order: MonomialOrder,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { position: self.offset(), message: message.into() })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let negate = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        match self.bump() {
            Tok::Num(n) => match u32::try_from(n) {
                Ok(e) => Ok(base.pow(e)),
                Err(_) => {
                    self.pos -= 1;
                    self.error("exponent too large")
                }
            },
            _ => {
                self.pos = self.pos.saturating_sub(1);
                if *self.peek() == Tok::End {
                    return self.error("expected exponent");
                }
                self.error("expected a natural number exponent")
            }
        }
    }

    fn base(&mut self) -> Result<Polynomial> {
        let at = self.offset();
        match self.bump() {
            Tok::Num(n) => {
                let mut value = Rational::from_integer(n);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let den_at = self.offset();
                    match self.bump() {
                        Tok::Num(d) if d.is_zero() => {
                            return Err(Error::ZeroDenominator { position: den_at })
                        }
                        Tok::Num(d) => value /= Rational::from_integer(d),
                        _ => {
                            self.pos -= 1;
                            return self.error("expected a denominator");
                        }
                    }
                }
                Ok(Polynomial::constant(self.vars, self.order, value))
            }
            Tok::Ident(name) => match self.vars.iter().position(|v| *v == name) {
                Some(i) => Ok(Polynomial::variable(self.vars, self.order, i)),
                None => Err(Error::UnknownVariable { name, position: at }),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                if self.bump() != Tok::RParen {
                    self.pos -= 1;
                    return self.error("expected `)`");
                }
                Ok(inner)
            }
            Tok::End => self.error("unexpected end of input"),
            other => {
                self.pos -= 1;
                self.error(format!("unexpected token {other:?}"))
            }
        }
    }
}

/// Parses `text` in the context `vars` under graded reverse lex.
pub fn parse_polynomial<S: AsRef<str>>(text: &str, vars: &[S]) -> Result<Polynomial> {
    parse_in(text, &super::vars(vars), MonomialOrder::GrevLex)
}

/// Parses `text` in an existing context.
pub fn parse_in(text: &str, vars: &Vars, order: MonomialOrder) -> Result<Polynomial> {
    let toks = Lexer::new(text)?.toks;
    let mut p = Parser { toks, pos: 0, vars, order };
    let f = p.expr()?;
    match p.peek() {
        Tok::End => Ok(f),
        Tok::Ident(_) | Tok::Num(_) | Tok::LParen => {
            p.error("missing `*` between factors")
        }
        _ => p.error("unexpected trailing input"),
    }
}

/// Renders in the parse grammar; `parse_polynomial(&format_polynomial(f))`
/// returns `f`.
pub fn format_polynomial(f: &Polynomial) -> String {
    f.to_string()
}
