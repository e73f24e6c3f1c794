//! Graphviz DOT rendering and a checker for the subset of DOT this crate emits.

use std::collections::BTreeMap;

use crate::dynamics::StateGraph;
use crate::error::{Error, Result};
use crate::hypercube::render_bits;
use crate::siggraph::{Sign, SignedDigraph};

fn quote(id: &str) -> String {
    format!("\"{}\"", id.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Positive arcs get `arrowhead=normal`; negative arcs get `arrowhead=tee` and `sign="-"`.
pub fn signed_digraph(g: &SignedDigraph, name: &str) -> String {
    let comps = g.components();
    let mut out = format!("digraph {} {{\n  node [shape=circle];\n", quote(name));
    for l in comps.labels() {
        out.push_str(&format!("  {};\n", quote(l.as_str())));
    }
    for a in g.arcs() {
        let attrs = match a.sign {
            Sign::Positive => "arrowhead=normal, sign=\"+\"",
            Sign::Negative => "arrowhead=tee, sign=\"-\"",
        };
        out.push_str(&format!(
            "  {} -> {} [{attrs}];\n",
            quote(comps.label(a.source).as_str()),
            quote(comps.label(a.target).as_str())
        ));
    }
    out.push_str("}\n");
    out
}

/// States labelled by bit strings; fixed points drawn as double circles.
pub fn state_graph(g: &StateGraph, name: &str) -> String {
    let n = g.width();
    let mut out = format!("digraph {} {{\n  node [shape=circle];\n", quote(name));
    for x in 0..g.state_count() as u32 {
        let shape = if g.flips(x) == 0 { " [shape=doublecircle]" } else { "" };
        out.push_str(&format!("  {}{shape};\n", quote(&render_bits(x, n))));
    }
    for (x, y) in g.arcs() {
        out.push_str(&format!(
            "  {} -> {};\n",
            quote(&render_bits(x, n)),
            quote(&render_bits(y, n))
        ));
    }
    out.push_str("}\n");
    out
}

/// Nodes and edges found by [`check`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DotSummary {
    pub name: String,
    pub nodes: BTreeMap<String, BTreeMap<String, String>>,
    pub edges: Vec<(String, String, BTreeMap<String, String>)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Id(String),
    Arrow,
    Punct(char),
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '{' | '}' | '[' | ']' | ';' | ',' | '=' => {
                out.push(Token::Punct(c));
                chars.next();
            }
            '-' => {
                chars.next();
                match chars.peek() {
                    Some('>') => {
                        chars.next();
                        out.push(Token::Arrow);
                    }
                    Some(d) if d.is_ascii_digit() || *d == '.' => {
                        let mut id = String::from("-");
                        while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit() || **d == '.') {
                            id.push(d);
                            chars.next();
                        }
                        out.push(Token::Id(id));
                    }
                    _ => return Err(Error::parse(0, "stray `-` in DOT")),
                }
            }
            '"' => {
                chars.next();
                let mut id = String::new();
                loop {
                    match chars.next() {
                        None => return Err(Error::parse(0, "unterminated string in DOT")),
                        Some('"') => break,
                        Some('\\') => match chars.next() {
                            Some(e) => id.push(e),
                            None => return Err(Error::parse(0, "unterminated escape in DOT")),
                        },
                        Some(other) => id.push(other),
                    }
                }
                out.push(Token::Id(id));
            }
            c if c.is_alphanumeric() || c == '_' || c == '.' => {
                let mut id = String::new();
                while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_' || **d == '.') {
                    id.push(d);
                    chars.next();
                }
                out.push(Token::Id(id));
            }
            other => return Err(Error::parse(0, format!("unexpected character `{other}` in DOT"))),
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

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect_punct(&mut self, c: char) -> Result<()> {
        match self.next() {
            Some(Token::Punct(p)) if p == c => Ok(()),
            other => Err(Error::parse(0, format!("expected `{c}` in DOT, found {other:?}"))),
        }
    }

    fn id(&mut self) -> Result<String> {
        match self.next() {
            Some(Token::Id(s)) => Ok(s),
            other => Err(Error::parse(0, format!("expected identifier in DOT, found {other:?}"))),
        }
    }

    fn attrs(&mut self) -> Result<BTreeMap<String, String>> {
        let mut out = BTreeMap::new();
        if self.peek() != Some(&Token::Punct('[')) {
            return Ok(out);
        }
        self.next();
        loop {
            if self.peek() == Some(&Token::Punct(']')) {
                self.next();
                return Ok(out);
            }
            let key = self.id()?;
            self.expect_punct('=')?;
            let value = self.id()?;
            out.insert(key, value);
            if matches!(self.peek(), Some(Token::Punct(',')) | Some(Token::Punct(';'))) {
                self.next();
            }
        }
    }
}

/// Parses a `digraph` made of node, edge and attribute statements.
pub fn check(text: &str) -> Result<DotSummary> {
    let mut p = Parser {
        tokens: tokenize(text)?,
        pos: 0,
    };
    if p.id()? != "digraph" {
        return Err(Error::parse(0, "DOT must start with `digraph`"));
    }
    let mut summary = DotSummary::default();
    if let Some(Token::Id(_)) = p.peek() {
        summary.name = p.id()?;
    }
    p.expect_punct('{')?;
    loop {
        match p.peek() {
            Some(Token::Punct('}')) => {
                p.next();
                break;
            }
            Some(Token::Punct(';')) => {
                p.next();
            }
            Some(Token::Id(_)) => {
                let head = p.id()?;
                if matches!(head.as_str(), "node" | "edge" | "graph") && p.peek() == Some(&Token::Punct('[')) {
                    p.attrs()?;
                } else if p.peek() == Some(&Token::Arrow) {
                    p.next();
                    let tail = p.id()?;
                    let attrs = p.attrs()?;
                    summary.nodes.entry(head.clone()).or_default();
                    summary.nodes.entry(tail.clone()).or_default();
                    summary.edges.push((head, tail, attrs));
                } else if p.peek() == Some(&Token::Punct('=')) {
                    p.next();
                    p.id()?;
                } else {
                    let attrs = p.attrs()?;
                    summary.nodes.entry(head).or_default().extend(attrs);
                }
            }
            None => return Err(Error::parse(0, "unexpected end of DOT")),
            Some(other) => return Err(Error::parse(0, format!("unexpected {other:?} in DOT"))),
        }
    }
    if p.peek().is_some() {
        return Err(Error::parse(0, "trailing tokens after DOT graph"));
    }
    Ok(summary)
}
