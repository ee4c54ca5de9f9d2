//! `(block <a>..<b> e=<int> <child>*)` forests followed by `framing: m1 .. mn`.

use std::fmt;

use crate::error::{Error, Result};

use super::{Block, FramedTwistTree, TwistTree};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Open,
    Close,
    Atom(String),
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Vec<Spanned> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim_start().starts_with('#') {
            continue;
        }
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let (line, column) = (idx + 1, i + 1);
            if c.is_whitespace() {
                i += 1;
            } else if c == '(' || c == ')' {
                let tok = if c == '(' { Tok::Open } else { Tok::Close };
                out.push(Spanned { tok, line, column });
                i += 1;
            } else {
                let start = i;
                while i < chars.len() && !chars[i].is_whitespace() && chars[i] != '(' && chars[i] != ')' {
                    i += 1;
                }
                out.push(Spanned {
                    tok: Tok::Atom(chars[start..i].iter().collect()),
                    line,
                    column,
                });
            }
        }
    }
    out
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    eof: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn err_here(&self, msg: impl Into<String>) -> Error {
        let (l, c) = self.peek().map_or(self.eof, |t| (t.line, t.column));
        Error::parse(l, c, msg)
    }

    fn atom(&mut self, what: &str) -> Result<(String, usize, usize)> {
        match self.peek().cloned() {
            Some(Spanned {
                tok: Tok::Atom(a),
                line,
                column,
            }) => {
                self.pos += 1;
                Ok((a, line, column))
            }
            _ => Err(self.err_here(format!("expected {what}"))),
        }
    }

    fn block(&mut self) -> Result<Block> {
        match self.peek() {
            Some(Spanned { tok: Tok::Open, .. }) => self.pos += 1,
            _ => return Err(self.err_here("expected `(`")),
        }
        let (kw, l, c) = self.atom("`block`")?;
        if kw != "block" {
            return Err(Error::parse(l, c, format!("expected `block`, found `{kw}`")));
        }
        let (range, l, c) = self.atom("`<a>..<b>`")?;
        let (start, end) = range
            .split_once("..")
            .and_then(|(a, b)| Some((parse_index(a)?, parse_index(b)?)))
            .ok_or_else(|| Error::parse(l, c, format!("bad interval `{range}`")))?;
        let (ex, l, c) = self.atom("`e=<int>`")?;
        let exponent = ex
            .strip_prefix("e=")
            .and_then(|v| v.parse::<i64>().ok())
            .ok_or_else(|| Error::parse(l, c, format!("bad exponent `{ex}`")))?;
        let mut children = Vec::new();
        loop {
            match self.peek() {
                Some(Spanned { tok: Tok::Close, .. }) => {
                    self.pos += 1;
                    break;
                }
                Some(Spanned { tok: Tok::Open, .. }) => children.push(self.block()?),
                _ => return Err(self.err_here("expected `(` or `)`")),
            }
        }
        Ok(Block {
            start,
            end,
            exponent,
            children,
        })
    }
}

fn parse_index(s: &str) -> Option<u32> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Parse a framed tree file. `n` is the framing length.
pub(super) fn parse_framed(text: &str) -> Result<FramedTwistTree> {
    let toks = tokenize(text);
    let eof = toks.last().map_or((1, 1), |t| (t.line, t.column + 1));
    let mut p = Parser { toks, pos: 0, eof };
    let mut roots = Vec::new();
    let framing_line;
    loop {
        match p.peek() {
            Some(Spanned { tok: Tok::Open, .. }) => roots.push(p.block()?),
            Some(Spanned {
                tok: Tok::Atom(a),
                line,
                ..
            }) if a == "framing:" => {
                framing_line = *line;
                p.pos += 1;
                break;
            }
            Some(_) => return Err(p.err_here("expected a block or `framing:`")),
            None => return Err(p.err_here("missing `framing:` line")),
        }
    }
    let mut framing = Vec::new();
    while let Some(t) = p.peek().cloned() {
        if t.line != framing_line {
            return Err(Error::parse(t.line, t.column, "unexpected input after framing"));
        }
        let Tok::Atom(a) = &t.tok else {
            return Err(Error::parse(t.line, t.column, "expected an integer"));
        };
        let v = a
            .parse::<i64>()
            .map_err(|_| Error::parse(t.line, t.column, format!("bad framing entry `{a}`")))?;
        framing.push(v);
        p.pos += 1;
    }
    if framing.is_empty() {
        return Err(Error::parse(framing_line, 1, "framing needs at least one entry"));
    }
    FramedTwistTree::new(TwistTree::new(framing.len(), roots), framing)
}

/// Parse only the block forest, for a known chord count.
pub(super) fn parse_tree(text: &str, n: usize) -> Result<TwistTree> {
    let toks = tokenize(text);
    let eof = toks.last().map_or((1, 1), |t| (t.line, t.column + 1));
    let mut p = Parser { toks, pos: 0, eof };
    let mut roots = Vec::new();
    while p.peek().is_some() {
        roots.push(p.block()?);
    }
    Ok(TwistTree::new(n, roots))
}

impl TwistTree {
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        parse_tree(text, n)
    }
}

impl FramedTwistTree {
    pub fn parse(text: &str) -> Result<Self> {
        parse_framed(text)
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(block {}..{} e={}", self.start, self.end, self.exponent)?;
        for c in &self.children {
            write!(f, " {c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for TwistTree {
    /// One root block per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.roots {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

impl fmt::Display for FramedTwistTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tree)?;
        let m: Vec<String> = self.framing.iter().map(|v| v.to_string()).collect();
        writeln!(f, "framing: {}", m.join(" "))
    }
}
