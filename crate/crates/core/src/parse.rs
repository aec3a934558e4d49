//! Infix polynomial parser: `+ - * / ^`, parentheses, integer literals.
//!
//! Multiplication must be written explicitly (`2*x`, not `2x`); division is
//! only allowed by nonzero constants.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::RingRef;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
    End,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str, line0: usize, col0: usize) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let (mut line, mut column) = (line0, col0);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_digit() {
                    s.push(d);
                    chars.next();
                    column += 1;
                } else {
                    break;
                }
            }
            out.push(Spanned {
                tok: Tok::Num(s.parse().expect("digits")),
                line: l,
                column: col,
            });
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_alphanumeric() || d == '_' {
                    s.push(d);
                    chars.next();
                    column += 1;
                } else {
                    break;
                }
            }
            out.push(Spanned {
                tok: Tok::Ident(s),
                line: l,
                column: col,
            });
            continue;
        }
        if "+-*/^()".contains(c) {
            chars.next();
            column += 1;
            out.push(Spanned {
                tok: Tok::Op(c),
                line: l,
                column: col,
            });
            continue;
        }
        return Err(Error::Parse {
            line: l,
            column: col,
            message: format!("unexpected character `{c}`"),
        });
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

/// Resolves identifiers that are not ring variables (e.g. named polynomials).
pub type Resolver<'a> = &'a dyn Fn(&str) -> Option<Polynomial>;

struct Parser<'a> {
    ring: &'a RingRef,
    resolve: Option<Resolver<'a>>,
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, at: &Spanned, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            line: at.line,
            column: at.column,
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Op('+') => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Op('-') => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek().tok {
                Tok::Op('*') => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Op('/') => {
                    let at = self.bump();
                    let d = self.unary()?;
                    if !d.is_constant() || d.is_zero() {
                        return self.err(&at, "division is only allowed by nonzero constants");
                    }
                    acc = acc.scale(&d.constant_term().inv());
                }
                Tok::Num(_) | Tok::Ident(_) | Tok::Op('(') => {
                    let at = self.peek().clone();
                    return self.err(&at, "implicit multiplication is not allowed; write `*`");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek().tok {
            Tok::Op('-') => {
                self.bump();
                Ok(-self.unary()?)
            }
            Tok::Op('+') => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek().tok == Tok::Op('^') {
            self.bump();
            let at = self.bump();
            let Tok::Num(n) = &at.tok else {
                return self.err(&at, "exponent must be a non-negative integer literal");
            };
            let Ok(e) = u32::try_from(n) else {
                return self.err(&at, "exponent too large");
            };
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let at = self.bump();
        match &at.tok {
            Tok::Num(n) => Ok(Polynomial::constant(self.ring, self.ring.field().from_bigint(n))),
            Tok::Ident(name) => match self.ring.var_index(name) {
                Some(i) => Ok(self.ring.variable(i)),
                None => match self.resolve.and_then(|r| r(name)) {
                    Some(p) => Ok(p),
                    None => self.err(&at, format!("unknown variable `{name}`")),
                },
            },
            Tok::Op('(') => {
                let inner = self.expr()?;
                let close = self.bump();
                if close.tok != Tok::Op(')') {
                    return self.err(&close, "expected `)`");
                }
                Ok(inner)
            }
            Tok::End => self.err(&at, "unexpected end of input"),
            Tok::Op(c) => self.err(&at, format!("unexpected `{c}`")),
        }
    }
}

/// Parses `text` as a polynomial of `ring`.
pub fn parse_polynomial(ring: &RingRef, text: &str) -> Result<Polynomial> {
    parse_polynomial_at(ring, text, 1, 1)
}

/// Like [`parse_polynomial`], reporting positions relative to `(line, column)`.
pub fn parse_polynomial_at(ring: &RingRef, text: &str, line: usize, column: usize) -> Result<Polynomial> {
    parse_with(ring, text, line, column, None)
}

/// Like [`parse_polynomial_at`], consulting `resolve` for unknown identifiers.
pub fn parse_polynomial_with(
    ring: &RingRef,
    text: &str,
    line: usize,
    column: usize,
    resolve: Resolver<'_>,
) -> Result<Polynomial> {
    parse_with(ring, text, line, column, Some(resolve))
}

fn parse_with(ring: &RingRef, text: &str, line: usize, column: usize, resolve: Option<Resolver<'_>>) -> Result<Polynomial> {
    let toks = lex(text, line, column)?;
    let mut p = Parser {
        ring,
        resolve,
        toks,
        pos: 0,
    };
    let out = p.expr()?;
    let end = p.peek().clone();
    if end.tok != Tok::End {
        return p.err(&end, "trailing input");
    }
    Ok(out)
}

/// Variable-like identifiers occurring in `text`, in order of first appearance.
pub fn identifiers(text: &str) -> Result<Vec<String>> {
    let mut out: Vec<String> = Vec::new();
    for t in lex(text, 1, 1)? {
        if let Tok::Ident(s) = t.tok {
            if !out.contains(&s) {
                out.push(s);
            }
        }
    }
    Ok(out)
}
