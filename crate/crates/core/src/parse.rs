//! Job files: presentations and simplicial complexes in a line-based text
//! format.
//!
//! ```text
//! # comment
//! field GF(32003)        # or QQ
//! vars x y z             # ascending variable order
//! rel x^2*y - x^3
//! rel 1/2*y*z^2 - y*x^2
//! bound 8
//! nmax 4
//! ```
//!
//! Face-complex jobs use `vertices t u w ...` followed by either `facet ...`
//! or `missing ...` lines.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::freealg::{Polynomial, VariableSet, Word};
use crate::groebner::Presentation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Prime(u32),
    Rationals,
}

impl FieldSpec {
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "QQ" {
            return Ok(FieldSpec::Rationals);
        }
        let inner = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Field(format!("expected QQ or GF(p), found `{t}`")))?;
        let p: u32 = inner
            .trim()
            .parse()
            .map_err(|_| Error::Field(format!("bad prime `{inner}`")))?;
        PrimeField::new(p)?;
        Ok(FieldSpec::Prime(p))
    }
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
            FieldSpec::Rationals => write!(f, "QQ"),
        }
    }
}

/// A relation line kept as text until the field is known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationLine {
    pub line: usize,
    /// Column (1-based) where the polynomial text starts.
    pub column: usize,
    pub text: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JobFile {
    pub field: Option<FieldSpec>,
    pub vars: Option<Vec<String>>,
    pub relations: Vec<RelationLine>,
    pub bound: Option<usize>,
    pub nmax: Option<usize>,
    pub vertices: Option<Vec<String>>,
    pub facets: Vec<Vec<String>>,
    pub missing: Vec<Vec<String>>,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn is_ident(s: &str) -> bool {
    let mut c = s.chars();
    matches!(c.next(), Some(ch) if ch.is_ascii_alphabetic() || ch == '_')
        && c.all(|ch| ch.is_ascii_alphanumeric() || ch == '_')
}

pub fn parse_job(text: &str) -> Result<JobFile> {
    let mut job = JobFile::default();
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let lead = content.len() - trimmed.len();
        let (kw, rest) = match trimmed.find(char::is_whitespace) {
            Some(i) => (&trimmed[..i], &trimmed[i..]),
            None => (trimmed, ""),
        };
        let rest_col = lead + kw.len() + 1 + (rest.len() - rest.trim_start().len());
        let args = rest.trim();
        let idents = |what: &str| -> Result<Vec<String>> {
            let names: Vec<String> = args.split_whitespace().map(str::to_string).collect();
            if names.is_empty() {
                return Err(syntax(line, rest_col, format!("`{what}` needs at least one name")));
            }
            if let Some(bad) = names.iter().find(|n| !is_ident(n)) {
                return Err(syntax(line, rest_col, format!("`{bad}` is not an identifier")));
            }
            Ok(names)
        };
        let nat = |what: &str| -> Result<usize> {
            args.parse::<usize>()
                .map_err(|_| syntax(line, rest_col, format!("`{what}` expects a natural number")))
        };
        match kw {
            "field" => {
                job.field = Some(
                    FieldSpec::parse(args)
                        .map_err(|e| syntax(line, rest_col, e.to_string()))?,
                )
            }
            "vars" => job.vars = Some(idents("vars")?),
            "rel" => {
                if args.is_empty() {
                    return Err(syntax(line, rest_col, "empty relation"));
                }
                job.relations.push(RelationLine {
                    line,
                    column: rest_col,
                    text: args.to_string(),
                })
            }
            "bound" => job.bound = Some(nat("bound")?),
            "nmax" => job.nmax = Some(nat("nmax")?),
            "vertices" => job.vertices = Some(idents("vertices")?),
            "facet" => job.facets.push(idents("facet")?),
            "missing" => job.missing.push(idents("missing")?),
            other => return Err(syntax(line, lead + 1, format!("unknown keyword `{other}`"))),
        }
    }
    Ok(job)
}

impl JobFile {
    /// Builds the presentation; `field` overrides the file's field line.
    pub fn presentation<F: Field>(&self, field: F, bound: Option<usize>) -> Result<Presentation<F>> {
        let names = self
            .vars
            .as_ref()
            .ok_or_else(|| syntax(1, 1, "missing `vars` line"))?;
        let vars = VariableSet::new(names.iter().cloned()).map_err(|e| syntax(1, 1, e.to_string()))?;
        let mut rels = Vec::new();
        for r in &self.relations {
            let p = parse_polynomial_at(&field, &vars, &r.text, r.line, r.column)?;
            if p.is_zero() {
                return Err(syntax(r.line, r.column, "relation is zero"));
            }
            rels.push(p);
        }
        Presentation::new(field, vars, rels, bound.or(self.bound))
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Nat(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn tokenize(s: &str, line: usize, col0: usize) -> Result<Vec<(Tok, usize)>> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '/' => Some(Tok::Slash),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, col));
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < b.len() && (b[i] as char).is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Nat(s[st..i].parse().expect("digits")), col));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let st = i;
            while i < b.len() && ((b[i] as char).is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(s[st..i].to_string()), col));
        } else {
            return Err(syntax(line, col, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct PolyParser<'a, F: Field> {
    field: &'a F,
    vars: &'a VariableSet,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
}

impl<F: Field> PolyParser<'_, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        syntax(self.line, self.col(), msg)
    }

    fn nat(&mut self) -> Result<BigInt> {
        match self.toks.get(self.pos) {
            Some((Tok::Nat(n), _)) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.err("expected a natural number")),
        }
    }

    fn factor(&mut self, letters: &mut Vec<u8>) -> Result<()> {
        let (name, col) = match self.toks.get(self.pos) {
            Some((Tok::Ident(n), c)) => (n.clone(), *c),
            _ => return Err(self.err("expected a variable")),
        };
        self.pos += 1;
        let v = self
            .vars
            .index_of(&name)
            .ok_or_else(|| syntax(self.line, col, format!("unknown variable `{name}`")))?;
        let mut exp = 1usize;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let col = self.col();
            let e = self.nat()?;
            exp = usize::try_from(e)
                .ok()
                .filter(|&e| e <= 4096)
                .ok_or_else(|| syntax(self.line, col, "exponent too large"))?;
        }
        letters.extend(std::iter::repeat_n(v, exp));
        Ok(())
    }

    fn term(&mut self) -> Result<(Word, F::Elem)> {
        let mut coeff = self.field.one();
        let mut letters = Vec::new();
        if let Some(Tok::Nat(_)) = self.peek() {
            let col = self.col();
            let num = self.nat()?;
            let den = if self.peek() == Some(&Tok::Slash) {
                self.pos += 1;
                self.nat()?
            } else {
                BigInt::from(1)
            };
            coeff = self
                .field
                .from_ratio(&num, &den)
                .map_err(|e| syntax(self.line, col, e.to_string()))?;
            if self.peek() != Some(&Tok::Star) {
                return Err(self.err("expected `*` after coefficient"));
            }
            self.pos += 1;
        }
        self.factor(&mut letters)?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            self.factor(&mut letters)?;
        }
        Ok((Word::new(letters), coeff))
    }

    fn poly(&mut self) -> Result<Polynomial<F::Elem>> {
        let mut terms = Vec::new();
        let mut negate = false;
        if self.peek() == Some(&Tok::Minus) {
            negate = true;
            self.pos += 1;
        }
        loop {
            let (w, c) = self.term()?;
            terms.push((w, if negate { self.field.neg(&c) } else { c }));
            match self.peek() {
                Some(Tok::Plus) => negate = false,
                Some(Tok::Minus) => negate = true,
                None => break,
                Some(_) => return Err(self.err("expected `+`, `-` or end of relation")),
            }
            self.pos += 1;
        }
        Ok(Polynomial::from_terms(self.field, terms))
    }
}

fn parse_polynomial_at<F: Field>(
    field: &F,
    vars: &VariableSet,
    text: &str,
    line: usize,
    column: usize,
) -> Result<Polynomial<F::Elem>> {
    let toks = tokenize(text, line, column)?;
    let mut p = PolyParser {
        field,
        vars,
        toks,
        pos: 0,
        line,
        end_col: column + text.len(),
    };
    p.poly()
}

/// Parses one polynomial; errors carry `line` and a column within `text`.
pub fn parse_polynomial<F: Field>(
    field: &F,
    vars: &VariableSet,
    text: &str,
    line: usize,
) -> Result<Polynomial<F::Elem>> {
    parse_polynomial_at(field, vars, text, line, 1)
}

/// Convenience parser for a whole presentation job over a given field.
pub fn parse_presentation<F: Field>(field: F, text: &str) -> Result<Presentation<F>> {
    parse_job(text)?.presentation(field, None)
}

/// Job-file text for a presentation; parsing it back gives an equal value.
pub fn format_presentation<F: Field>(p: &Presentation<F>) -> String {
    let mut s = String::new();
    s.push_str(&format!("field {}\n", p.field().name()));
    s.push_str(&format!("vars {}\n", p.vars().names().join(" ")));
    for r in p.relations() {
        s.push_str(&format!("rel {}\n", r.display(p.field(), p.vars())));
    }
    s.push_str(&format!("bound {}\n", p.bound()));
    s
}
