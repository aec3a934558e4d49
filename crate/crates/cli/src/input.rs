//! Line-oriented session files:
//!
//! ```text
//! ring Q[x,y,z];            # or Fp(7)[x,y]
//! poly f = x^2 - y;
//! ideal I = f, x*y;
//! matrix M 2x2 = [x, y; 0, f];
//! ```
//!
//! Statements end with `;` (semicolons inside `[...]` separate matrix rows).
//! `#` starts a comment. Later statements may refer to earlier polynomial names.

use std::fmt::Write as _;

use idealkit::parse::parse_polynomial_with;
use idealkit::{Field, Ideal, MonomialOrder, PolyMatrix, Polynomial, Ring, RingRef};

use crate::error::CliError;

#[derive(Clone, Debug)]
pub enum Item {
    Poly(Polynomial),
    Ideal(Vec<Polynomial>),
    Matrix(PolyMatrix),
}

/// Parsed session: one ring and uniquely named objects, in declaration order.
#[derive(Clone, Debug)]
pub struct SessionInput {
    ring: RingRef,
    items: Vec<(String, Item)>,
}

/// Settings that replace what the file declares.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub field: Option<Field>,
    pub order: Option<MonomialOrder>,
}

struct Source<'a> {
    text: &'a str,
    line_starts: Vec<usize>,
}

impl<'a> Source<'a> {
    fn new(text: &'a str) -> Self {
        let mut line_starts = vec![0];
        line_starts.extend(text.match_indices('\n').map(|(i, _)| i + 1));
        Source { text, line_starts }
    }

    fn position(&self, offset: usize) -> (usize, usize) {
        let line = self.line_starts.partition_point(|&s| s <= offset);
        let start = self.line_starts[line - 1];
        (line, self.text[start..offset].chars().count() + 1)
    }

    fn error(&self, offset: usize, message: impl Into<String>) -> CliError {
        let (line, column) = self.position(offset);
        CliError::Core(idealkit::Error::Parse {
            line,
            column,
            message: message.into(),
        })
    }
}

/// Splits `text` (starting at absolute `base`) at `sep` outside brackets.
fn split_top(text: &str, base: usize, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            _ if c == sep && depth == 0 => {
                out.push((base + start, &text[start..i]));
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push((base + start, &text[start..]));
    out
}

fn strip_comments(text: &str) -> String {
    text.lines()
        .map(|l| match l.find('#') {
            Some(i) => format!("{}{}", &l[..i], " ".repeat(l[i..].len())),
            None => l.to_string(),
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn leading_ws(s: &str) -> usize {
    s.len() - s.trim_start().len()
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_') && chars.all(|c| c.is_alphanumeric() || c == '_')
}

impl SessionInput {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        Self::parse_with(text, &Overrides::default())
    }

    pub fn parse_with(text: &str, overrides: &Overrides) -> Result<Self, CliError> {
        let clean = strip_comments(text);
        let src = Source::new(&clean);
        let mut statements = split_top(&clean, 0, ';');
        let (tail_off, tail) = statements.pop().expect("split yields one piece");
        if !tail.trim().is_empty() {
            return Err(src.error(tail_off + leading_ws(tail), "missing `;` at end of statement"));
        }
        let mut ring: Option<RingRef> = None;
        let mut session: Option<SessionInput> = None;
        for (off, stmt) in statements {
            let lead = leading_ws(stmt);
            let body = stmt.trim();
            let at = off + lead;
            if body.is_empty() {
                return Err(src.error(at, "empty statement"));
            }
            let (keyword, rest, sep) = match body.split_once(char::is_whitespace) {
                Some((k, r)) => (k, r, body[k.len()..].chars().next().map_or(0, char::len_utf8)),
                None => (body, "", 0),
            };
            let rest_off = at + keyword.len() + sep + leading_ws(rest);
            let rest = rest.trim_start();
            match keyword {
                "ring" => {
                    if ring.is_some() {
                        return Err(src.error(at, "ring declared twice"));
                    }
                    let r = parse_ring(&src, rest_off, rest, overrides)?;
                    session = Some(SessionInput {
                        ring: r.clone(),
                        items: Vec::new(),
                    });
                    ring = Some(r);
                }
                "poly" | "ideal" | "matrix" => {
                    let Some(s) = session.as_mut() else {
                        return Err(src.error(at, "declare the ring first"));
                    };
                    s.parse_item(&src, keyword, rest_off, rest)?;
                }
                other => return Err(src.error(at, format!("unknown statement `{other}`"))),
            }
        }
        session.ok_or_else(|| src.error(0, "no ring declared"))
    }

    fn parse_item(&mut self, src: &Source<'_>, keyword: &str, off: usize, rest: &str) -> Result<(), CliError> {
        let Some((head, body)) = rest.split_once('=') else {
            return Err(src.error(off, "expected `=`"));
        };
        let body_off = off + head.len() + 1;
        let mut head_words = head.split_whitespace();
        let name = head_words.next().unwrap_or("");
        if !is_name(name) {
            return Err(src.error(off, format!("invalid name `{name}`")));
        }
        if self.ring.var_index(name).is_some() || self.items.iter().any(|(n, _)| n == name) {
            return Err(src.error(off, format!("name `{name}` is already used")));
        }
        let item = match keyword {
            "poly" => {
                if head_words.next().is_some() {
                    return Err(src.error(off, "unexpected text before `=`"));
                }
                Item::Poly(self.parse_poly_at(src, body_off, body)?)
            }
            "ideal" => {
                if head_words.next().is_some() {
                    return Err(src.error(off, "unexpected text before `=`"));
                }
                let gens = split_top(body, body_off, ',')
                    .into_iter()
                    .map(|(o, t)| self.parse_poly_at(src, o, t))
                    .collect::<Result<Vec<_>, _>>()?;
                Item::Ideal(gens)
            }
            _ => {
                let shape = head_words.next().unwrap_or("");
                let dims = shape
                    .split_once('x')
                    .and_then(|(r, c)| Some((r.parse::<usize>().ok()?, c.parse::<usize>().ok()?)));
                let Some((rows, cols)) = dims else {
                    return Err(src.error(off + name.len(), "expected a shape like `4x3`"));
                };
                Item::Matrix(self.parse_matrix(src, body_off, body, rows, cols)?)
            }
        };
        self.items.push((name.to_string(), item));
        Ok(())
    }

    fn parse_matrix(
        &self,
        src: &Source<'_>,
        off: usize,
        body: &str,
        rows: usize,
        cols: usize,
    ) -> Result<PolyMatrix, CliError> {
        let lead = leading_ws(body);
        let trimmed = body.trim();
        if !trimmed.starts_with('[') || !trimmed.ends_with(']') {
            return Err(src.error(off + lead, "matrix body must be enclosed in `[ ]`"));
        }
        let inner_off = off + lead + 1;
        let inner = &trimmed[1..trimmed.len() - 1];
        let row_pieces = split_top(inner, inner_off, ';');
        if row_pieces.len() != rows {
            return Err(src.error(inner_off, format!("expected {rows} rows, found {}", row_pieces.len())));
        }
        let mut data = Vec::with_capacity(rows);
        for (roff, rtext) in row_pieces {
            let entries = split_top(rtext, roff, ',');
            if entries.len() != cols {
                return Err(src.error(
                    roff + leading_ws(rtext),
                    format!("expected {cols} entries, found {}", entries.len()),
                ));
            }
            data.push(
                entries
                    .into_iter()
                    .map(|(o, t)| self.parse_poly_at(src, o, t))
                    .collect::<Result<Vec<_>, _>>()?,
            );
        }
        Ok(PolyMatrix::from_rows(&self.ring, data)?)
    }

    fn parse_poly_at(&self, src: &Source<'_>, off: usize, text: &str) -> Result<Polynomial, CliError> {
        if text.trim().is_empty() {
            return Err(src.error(off, "expected a polynomial"));
        }
        let (line, column) = src.position(off);
        let lookup = |name: &str| self.poly(name).ok().cloned();
        Ok(parse_polynomial_with(&self.ring, text, line, column, &lookup)?)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn items(&self) -> &[(String, Item)] {
        &self.items
    }

    fn item(&self, name: &str) -> Result<&Item, CliError> {
        self.items
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, i)| i)
            .ok_or_else(|| CliError::UnknownName(name.to_string()))
    }

    pub fn poly(&self, name: &str) -> Result<&Polynomial, CliError> {
        match self.item(name)? {
            Item::Poly(p) => Ok(p),
            _ => Err(CliError::WrongKind {
                name: name.to_string(),
                expected: "poly",
            }),
        }
    }

    pub fn ideal(&self, name: &str) -> Result<Ideal, CliError> {
        match self.item(name)? {
            Item::Ideal(g) => Ok(Ideal::new(&self.ring, g.clone())?),
            _ => Err(CliError::WrongKind {
                name: name.to_string(),
                expected: "ideal",
            }),
        }
    }

    pub fn matrix(&self, name: &str) -> Result<&PolyMatrix, CliError> {
        match self.item(name)? {
            Item::Matrix(m) => Ok(m),
            _ => Err(CliError::WrongKind {
                name: name.to_string(),
                expected: "matrix",
            }),
        }
    }

    /// Parses a command-line expression; named polynomials may appear in it.
    pub fn expr(&self, text: &str) -> Result<Polynomial, CliError> {
        let lookup = |name: &str| self.poly(name).ok().cloned();
        Ok(parse_polynomial_with(&self.ring, text, 1, 1, &lookup)?)
    }

    /// Canonical text form; parsing it back yields an equal session.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let field = match self.ring.field() {
            Field::Rational => "Q".to_string(),
            Field::Prime(p) => format!("Fp({p})"),
        };
        let _ = writeln!(out, "ring {field}[{}];", self.ring.vars().join(","));
        let join = |ps: &[Polynomial]| ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ");
        for (name, item) in &self.items {
            let _ = match item {
                Item::Poly(p) => writeln!(out, "poly {name} = {p};"),
                Item::Ideal(g) => writeln!(out, "ideal {name} = {};", join(g)),
                Item::Matrix(m) => {
                    let rows: Vec<String> = (0..m.rows()).map(|i| join(m.row(i))).collect();
                    writeln!(out, "matrix {name} {}x{} = [{}];", m.rows(), m.cols(), rows.join("; "))
                }
            };
        }
        out
    }
}

fn parse_ring(src: &Source<'_>, off: usize, text: &str, overrides: &Overrides) -> Result<RingRef, CliError> {
    let Some(open) = text.find('[') else {
        return Err(src.error(off, "expected `Q[...]` or `Fp(p)[...]`"));
    };
    if !text.trim_end().ends_with(']') {
        return Err(src.error(off + text.len(), "expected `]`"));
    }
    let field_text = text[..open].trim();
    let field = if field_text == "Q" {
        Field::Rational
    } else if let Some(p) = field_text.strip_prefix("Fp(").and_then(|s| s.strip_suffix(')')) {
        let p: u64 = p
            .trim()
            .parse()
            .map_err(|_| src.error(off, format!("invalid characteristic `{p}`")))?;
        Field::prime(p).map_err(|e| src.error(off, e.to_string()))?
    } else {
        return Err(src.error(off, format!("unknown field `{field_text}`")));
    };
    let close = text.rfind(']').expect("checked above");
    let mut vars: Vec<&str> = Vec::new();
    for (voff, v) in split_top(&text[open + 1..close], off + open + 1, ',') {
        let name = v.trim();
        if !is_name(name) {
            return Err(src.error(voff + leading_ws(v), format!("invalid variable name `{name}`")));
        }
        if vars.contains(&name) {
            return Err(src.error(voff + leading_ws(v), format!("variable `{name}` repeated")));
        }
        vars.push(name);
    }
    let field = overrides.field.unwrap_or(field);
    let order = overrides.order.clone().unwrap_or_default();
    Ok(Ring::with_order_new(field, &vars, order))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_statement_kinds() {
        let s = SessionInput::parse(
            "ring Q[x,y];\n# comment\npoly f = x^2 + y;\nideal I = f, y;\nmatrix M 2x2 = [x, f; 0, 1/2];\n",
        )
        .unwrap();
        assert_eq!(s.ring().vars(), &["x", "y"]);
        assert_eq!(s.ideal("I").unwrap().gens().len(), 2);
        assert_eq!(s.matrix("M").unwrap().get(0, 1), s.poly("f").unwrap());
        let again = SessionInput::parse(&s.to_text()).unwrap();
        assert_eq!(again.to_text(), s.to_text());
    }

    #[test]
    fn prime_field_and_override() {
        let s = SessionInput::parse("ring Fp(7)[x];\npoly f = 8*x;").unwrap();
        assert_eq!(s.poly("f").unwrap().to_string(), "x");
        let o = Overrides {
            field: Some(Field::Rational),
            order: None,
        };
        let s = SessionInput::parse_with("ring Fp(7)[x];\npoly f = 8*x;", &o).unwrap();
        assert_eq!(s.poly("f").unwrap().to_string(), "8*x");
    }

    fn error_at(text: &str) -> (usize, usize) {
        match SessionInput::parse(text) {
            Err(CliError::Core(idealkit::Error::Parse { line, column, .. })) => (line, column),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(error_at("ring Q[x,y];\nideal I = x, 2y;"), (2, 15));
        assert_eq!(error_at("ring Q[x];\npoly f = w;"), (2, 10));
        assert_eq!(error_at("ring Q[x];\nmatrix M 2x1 = [x];"), (2, 17));
        assert_eq!(error_at("ring Q[x];\npoly f = x"), (2, 1));
        assert_eq!(error_at("poly f = x;"), (1, 1));
        assert_eq!(error_at("ring Q[x];\npoly x = 1;"), (2, 6));
        assert_eq!(error_at("ring Fp(6)[x];"), (1, 6));
    }

    #[test]
    fn unknown_names() {
        let s = SessionInput::parse("ring Q[x];\npoly f = x;").unwrap();
        assert!(matches!(s.ideal("I"), Err(CliError::UnknownName(_))));
        assert!(matches!(s.ideal("f"), Err(CliError::WrongKind { .. })));
    }
}
