//! Finite presentations and their text format.
//!
//! ```text
//! gens a b c d
//! a^2
//! (a b)^3          # juxtaposition is multiplication
//! (a^b d)^3        # a^b = b^-1 a b
//! (a^{b c} d)^3    # conjugation by a word
//! a b = b a        # equations become relators
//! ```
//!
//! A token that is not a generator name but is spelled by single-letter
//! generator names is read letter by letter, so `ab` means `a b`.

use std::fmt;

pub const G4_TEXT: &str = include_str!("../../data/g4.pres");
pub const G5_TEXT: &str = include_str!("../../data/g5.pres");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize) -> Self {
        Letter { gen, inverse: false }
    }

    pub fn inv(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }
}

pub type Word = Vec<Letter>;

pub fn invert_word(w: &[Letter]) -> Word {
    w.iter().rev().map(|l| l.inv()).collect()
}

pub fn free_reduce(w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Free and cyclic reduction.
pub fn cyclic_reduce(w: &[Letter]) -> Word {
    let mut w = free_reduce(w);
    while w.len() >= 2 && w[0] == w[w.len() - 1].inv() {
        w.pop();
        w.remove(0);
    }
    w
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `gens` line")]
    NoGenerators,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    names: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Relators are cyclically reduced; empty ones are dropped.
    pub fn new(names: Vec<String>, relators: Vec<Word>) -> Self {
        let relators = relators
            .iter()
            .map(|r| cyclic_reduce(r))
            .filter(|r| !r.is_empty())
            .collect();
        Presentation { names, relators }
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut names: Option<Vec<String>> = None;
        let mut relators = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let err = |msg: String| ParseError::Syntax { line, msg };
            match &names {
                None => {
                    let mut toks = body.split_whitespace();
                    if toks.next() != Some("gens") {
                        return Err(err("expected `gens ...`".into()));
                    }
                    let list: Vec<String> = toks.map(str::to_string).collect();
                    if list.is_empty() {
                        return Err(err("no generators".into()));
                    }
                    if let Some(bad) = list.iter().find(|n| !is_ident(n)) {
                        return Err(err(format!("bad generator name {bad:?}")));
                    }
                    names = Some(list);
                }
                Some(list) => {
                    let sides = parse_equation(body, list).map_err(err)?;
                    for pair in sides.windows(2) {
                        let mut r = pair[0].clone();
                        r.extend(invert_word(&pair[1]));
                        relators.push(r);
                    }
                    if sides.len() == 1 {
                        relators.push(sides[0].clone());
                    }
                }
            }
        }
        let names = names.ok_or(ParseError::NoGenerators)?;
        Ok(Presentation::new(names, relators))
    }

    pub fn g4() -> Self {
        Self::parse(G4_TEXT).expect("bundled presentation")
    }

    pub fn g5() -> Self {
        Self::parse(G5_TEXT).expect("bundled presentation")
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn n_gens(&self) -> usize {
        self.names.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Whether `g^2` is a relator.
    pub fn is_involution(&self, g: usize) -> bool {
        let sq = [Letter::new(g), Letter::new(g)];
        let sq_inv = [Letter::new(g).inv(), Letter::new(g).inv()];
        self.relators.iter().any(|r| r[..] == sq || r[..] == sq_inv)
    }

    pub fn parse_word(&self, text: &str) -> Result<Word, String> {
        let sides = parse_equation(text, &self.names)?;
        match sides.as_slice() {
            [w] => Ok(free_reduce(w)),
            _ => Err("expected a single word".into()),
        }
    }

    pub fn word_to_string(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter()
            .map(|l| {
                let n = &self.names[l.gen];
                if l.inverse {
                    format!("{n}^-1")
                } else {
                    n.clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gens {}", self.names.join(" "))?;
        for r in &self.relators {
            writeln!(f, "{}", self.word_to_string(r))?;
        }
        Ok(())
    }
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    Open(char),
    Close(char),
    Caret,
    Eq,
}

fn lex(s: &str) -> Result<Vec<Tok>, String> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '*' => i += 1,
            '(' | '{' => {
                out.push(Tok::Open(c));
                i += 1;
            }
            ')' | '}' => {
                out.push(Tok::Close(c));
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '=' => {
                out.push(Tok::Eq);
                i += 1;
            }
            '-' | '0'..='9' => {
                let start = i;
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                out.push(Tok::Int(text.parse().map_err(|_| format!("bad integer {text:?}"))?));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Tok::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(format!("unexpected character {other:?}")),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    names: &'a [String],
}

fn parse_equation(s: &str, names: &[String]) -> Result<Vec<Word>, String> {
    let mut p = Parser {
        toks: lex(s)?,
        pos: 0,
        names,
    };
    let mut sides = vec![p.word()?];
    while p.peek() == Some(&Tok::Eq) {
        p.pos += 1;
        sides.push(p.word()?);
    }
    if let Some(t) = p.peek() {
        return Err(format!("unexpected token {t:?}"));
    }
    Ok(sides)
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn word(&mut self) -> Result<Word, String> {
        let mut w = Vec::new();
        while let Some(t) = self.peek() {
            match t {
                Tok::Ident(_) | Tok::Open(_) => w.extend(self.factor()?),
                // A bare `1` is the identity.
                Tok::Int(1) => self.pos += 1,
                _ => break,
            }
        }
        Ok(w)
    }

    fn factor(&mut self) -> Result<Word, String> {
        let mut base = self.atom()?;
        while self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Int(e)) => {
                    self.pos += 1;
                    let unit = if e < 0 { invert_word(&base) } else { base.clone() };
                    base = unit.repeat(e.unsigned_abs() as usize);
                }
                Some(Tok::Ident(_)) | Some(Tok::Open(_)) => {
                    let g = self.atom()?;
                    let mut w = invert_word(&g);
                    w.extend(base);
                    w.extend(g);
                    base = w;
                }
                other => return Err(format!("bad exponent {other:?}")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Word, String> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.resolve(&name)
            }
            Some(Tok::Open(open)) => {
                self.pos += 1;
                let w = self.word()?;
                let close = if open == '(' { ')' } else { '}' };
                if self.peek() != Some(&Tok::Close(close)) {
                    return Err(format!("expected {close:?}"));
                }
                self.pos += 1;
                Ok(w)
            }
            other => Err(format!("expected a generator or group, found {other:?}")),
        }
    }

    fn resolve(&self, name: &str) -> Result<Word, String> {
        if let Some(g) = self.names.iter().position(|n| n == name) {
            return Ok(vec![Letter::new(g)]);
        }
        name.chars()
            .map(|c| {
                self.names
                    .iter()
                    .position(|n| n.len() == 1 && n.starts_with(c))
                    .map(Letter::new)
            })
            .collect::<Option<Word>>()
            .ok_or_else(|| format!("unknown generator {name:?}"))
    }
}
