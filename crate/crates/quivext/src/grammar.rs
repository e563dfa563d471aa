//! The element expression grammar shared by the CLI and session files:
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := [scalar '*'] factor
//! factor := 'e_'vertex | arrowname ('*' arrowname)*
//! scalar := integer | integer'/'integer
//! ```
//!
//! Parsing happens at the free path-algebra level: the result is a formal
//! linear combination of paths of kQ, reduced later by whoever owns a quotient.

use crate::error::{Error, Result};
use crate::quiver::{compose_paths, Path, Quiver};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(String),
    Plus,
    Minus,
    Star,
    Slash,
}

fn lex(input: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' => {
                chars.next();
            }
            '+' => {
                chars.next();
                toks.push(Tok::Plus);
            }
            '-' => {
                chars.next();
                toks.push(Tok::Minus);
            }
            '*' => {
                chars.next();
                toks.push(Tok::Star);
            }
            '/' => {
                chars.next();
                toks.push(Tok::Slash);
            }
            c if c.is_ascii_digit() => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        s.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Int(s));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        s.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Ident(s));
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(toks)
}

/// A formal linear combination of free paths, with like terms collected.
pub type PathCombo = Vec<(Path, Scalar)>;

pub fn collect_terms(terms: Vec<(Path, Scalar)>) -> PathCombo {
    let mut out: Vec<(Path, Scalar)> = Vec::new();
    for (p, c) in terms {
        if c.is_zero() {
            continue;
        }
        if let Some(slot) = out.iter_mut().find(|(q, _)| *q == p) {
            slot.1 = slot.1.add(&c);
        } else {
            out.push((p, c));
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out.sort_by(|a, b| a.0.cmp_order(&b.0));
    out
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    quiver: &'a Quiver,
    field: Field,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn parse_scalar(&mut self) -> Result<Scalar> {
        let Some(Tok::Int(n)) = self.bump() else {
            return Err(Error::Parse("expected integer".into()));
        };
        let mut lit = n;
        if matches!(self.peek(), Some(Tok::Slash)) {
            self.bump();
            let Some(Tok::Int(d)) = self.bump() else {
                return Err(Error::Parse("expected denominator".into()));
            };
            lit = format!("{lit}/{d}");
        }
        self.field.parse(&lit)
    }

    fn parse_factor(&mut self) -> Result<Path> {
        let Some(Tok::Ident(first)) = self.bump() else {
            return Err(Error::Parse("expected path factor".into()));
        };
        if let Some(v) = first.strip_prefix("e_") {
            let idx = self
                .quiver
                .vertex_index(v)
                .ok_or_else(|| Error::Parse(format!("unknown vertex `{v}`")))?;
            return Ok(self.quiver.stationary(idx));
        }
        let mut path = self.arrow(&first)?;
        while matches!(self.peek(), Some(Tok::Star)) {
            // only continue through `* arrow`; `* integer` cannot appear here
            let save = self.pos;
            self.bump();
            match self.bump() {
                Some(Tok::Ident(name)) if !name.starts_with("e_") => {
                    let next = self.arrow(&name)?;
                    path = compose_paths(&path, &next).ok_or_else(|| {
                        Error::Parse(format!(
                            "arrows do not compose: `{}` then `{name}`",
                            self.quiver.path_name(&path)
                        ))
                    })?;
                }
                _ => {
                    self.pos = save;
                    break;
                }
            }
        }
        Ok(path)
    }

    fn arrow(&self, name: &str) -> Result<Path> {
        let idx = self
            .quiver
            .arrow_index(name)
            .ok_or_else(|| Error::Parse(format!("unknown arrow `{name}`")))?;
        Ok(self.quiver.arrow_path(idx))
    }

    fn parse_term(&mut self) -> Result<(Path, Scalar)> {
        let mut coef = self.field.one();
        if matches!(self.peek(), Some(Tok::Int(_))) {
            coef = self.parse_scalar()?;
            if matches!(self.peek(), Some(Tok::Star)) {
                self.bump();
            } else {
                return Err(Error::Parse("expected `*` after scalar".into()));
            }
        }
        let p = self.parse_factor()?;
        Ok((p, coef))
    }

    fn parse_expr(&mut self) -> Result<PathCombo> {
        let mut terms = Vec::new();
        let mut sign = self.field.one();
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            sign = sign.neg();
        }
        loop {
            let (p, c) = self.parse_term()?;
            terms.push((p, c.mul(&sign)));
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    sign = self.field.one();
                }
                Some(Tok::Minus) => {
                    self.bump();
                    sign = self.field.one().neg();
                }
                None => break,
                Some(t) => return Err(Error::Parse(format!("unexpected token {t:?}"))),
            }
        }
        Ok(collect_terms(terms))
    }
}

/// Parse an expression into a combination of free paths.
pub fn parse_combo(quiver: &Quiver, field: Field, input: &str) -> Result<PathCombo> {
    let toks = lex(input)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        quiver,
        field,
    };
    let combo = p.parse_expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse("trailing tokens in expression".into()));
    }
    Ok(combo)
}

/// Parse a single path (no sums, no scalars).
pub fn parse_path(quiver: &Quiver, field: Field, input: &str) -> Result<Path> {
    let combo = parse_combo(quiver, field, input)?;
    match combo.as_slice() {
        [(p, c)] if c.is_one() => Ok(p.clone()),
        _ => Err(Error::Parse(format!("`{input}` is not a single path"))),
    }
}

/// Render a combination in the grammar (inverse of `parse_combo` up to spacing).
pub fn render_combo(quiver: &Quiver, combo: &PathCombo) -> String {
    if combo.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (p, c)) in combo.iter().enumerate() {
        let name = quiver.path_name(p);
        let coef = format!("{c}");
        let piece = if c.is_one() {
            name
        } else if coef.starts_with('-') && c.neg().is_one() {
            format!("-{name}")
        } else {
            format!("{coef}*{name}")
        };
        if i == 0 {
            out.push_str(&piece);
        } else if let Some(rest) = piece.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&piece);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Quiver {
        Quiver::new(
            vec!["1".into(), "2".into(), "4".into()],
            vec![
                ("a1".into(), "1".into(), "2".into()),
                ("a2".into(), "2".into(), "4".into()),
            ],
        )
        .unwrap()
    }

    #[test]
    fn parse_and_render() {
        let quiver = q();
        let f = Field::Rational;
        let combo = parse_combo(&quiver, f, "1/2*a1*a2 - e_1 + a1*a2").unwrap();
        assert_eq!(combo.len(), 2);
        let rendered = render_combo(&quiver, &combo);
        let reparsed = parse_combo(&quiver, f, &rendered).unwrap();
        assert_eq!(combo, reparsed);
    }

    #[test]
    fn rejects_noncomposable() {
        let quiver = q();
        assert!(parse_combo(&quiver, Field::Rational, "a2*a1").is_err());
        assert!(parse_combo(&quiver, Field::Rational, "e_9").is_err());
        assert!(parse_combo(&quiver, Field::Rational, "").is_err());
    }
}
