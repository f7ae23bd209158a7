//! Readers for edge-list, Pajek `.net` and GML graph files, and the canonical
//! edge-list writer.
//!
//! All readers produce a simple undirected [`Graph`]: arcs are symmetrized,
//! duplicate edges collapse, and self-loops are dropped (and counted, see
//! [`Graph::dropped_self_loops`]).

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use log::warn;
use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphFormat {
    EdgeList,
    Pajek,
    Gml,
}

impl GraphFormat {
    /// Guess from the file extension; anything unrecognized is an edge list.
    pub fn from_path(path: &Path) -> Self {
        match path
            .extension()
            .and_then(|e| e.to_str())
            .map(str::to_ascii_lowercase)
            .as_deref()
        {
            Some("net") | Some("paj") => Self::Pajek,
            Some("gml") => Self::Gml,
            _ => Self::EdgeList,
        }
    }

    pub fn parse(self, text: &str) -> Result<Graph, ParseError> {
        match self {
            Self::EdgeList => parse_edge_list(text),
            Self::Pajek => parse_pajek(text),
            Self::Gml => parse_gml(text),
        }
    }
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "edgelist" | "edge_list" | "edges" | "txt" => Ok(Self::EdgeList),
            "pajek" | "net" => Ok(Self::Pajek),
            "gml" => Ok(Self::Gml),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

/// Read a graph file, detecting the format from the extension unless given.
pub fn read_graph(path: &Path, format: Option<GraphFormat>) -> Result<Graph, Error> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let format = format.unwrap_or_else(|| GraphFormat::from_path(path));
    format.parse(&text).map_err(|source| Error::Parse {
        path: path.to_path_buf(),
        source,
    })
}

/// Assigns dense indices to vertex tokens in first-appearance order.
#[derive(Default)]
struct Interner {
    index: HashMap<String, usize>,
    labels: Vec<String>,
}

impl Interner {
    fn intern(&mut self, token: &str) -> usize {
        if let Some(&i) = self.index.get(token) {
            return i;
        }
        let i = self.labels.len();
        self.index.insert(token.to_owned(), i);
        self.labels.push(token.to_owned());
        i
    }
}

fn build(n: usize, edges: Vec<(usize, usize)>, labels: Option<Vec<String>>) -> Graph {
    let g = Graph::from_edges(n, edges).expect("parser produced in-range endpoints");
    if g.dropped_self_loops() > 0 {
        warn!("dropped {} self-loop(s)", g.dropped_self_loops());
    }
    match labels {
        Some(l) => g.with_labels(l),
        None => g,
    }
}

/// Whitespace-separated vertex pairs, one per line. Lines starting with `#`
/// or `%` are comments. Tokens may be arbitrary strings.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut names = Interner::default();
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(ParseError::Line {
                line: i + 1,
                message: format!("expected 2 vertex tokens, found {}", tokens.len()),
            });
        }
        let u = names.intern(tokens[0]);
        let v = names.intern(tokens[1]);
        edges.push((u, v));
    }
    let n = names.labels.len();
    Ok(build(n, edges, Some(names.labels)))
}

/// Canonical edge list: one `u v` line per edge with `u < v`, sorted.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(g.m() * 8);
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum PajekSection {
    Preamble,
    Vertices,
    Edges,
    EdgesList,
    Other,
}

/// Split a Pajek line into tokens, keeping quoted labels intact.
fn pajek_tokens(line: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut chars = line.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c == '"' {
            chars.next();
            let mut s = String::new();
            for c in chars.by_ref() {
                if c == '"' {
                    break;
                }
                s.push(c);
            }
            out.push(s);
        } else {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_whitespace() {
                    break;
                }
                s.push(c);
                chars.next();
            }
            out.push(s);
        }
    }
    out
}

/// Subset of the Pajek `.net` format: `*Vertices k`, optional labeled vertex
/// lines, then any number of `*Edges`, `*Arcs`, `*Edgeslist` or `*Arcslist`
/// sections. Ids are 1-based; weights are ignored.
pub fn parse_pajek(text: &str) -> Result<Graph, ParseError> {
    let mut declared: Option<usize> = None;
    let mut labels: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    let mut section = PajekSection::Preamble;

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        if let Some(header) = line.strip_prefix('*') {
            let mut parts = header.split_whitespace();
            let keyword = parts.next().unwrap_or("").to_ascii_lowercase();
            section = match keyword.as_str() {
                "vertices" => {
                    let k = parts
                        .next()
                        .and_then(|s| s.parse::<usize>().ok())
                        .ok_or_else(|| ParseError::Line {
                            line: lineno,
                            message: "`*Vertices` needs a count".into(),
                        })?;
                    declared = Some(k);
                    labels = (1..=k).map(|v| v.to_string()).collect();
                    PajekSection::Vertices
                }
                "edges" | "arcs" => PajekSection::Edges,
                "edgeslist" | "arcslist" => PajekSection::EdgesList,
                "network" => PajekSection::Preamble,
                other => {
                    warn!("line {lineno}: skipping unsupported Pajek section `*{other}`");
                    PajekSection::Other
                }
            };
            if matches!(section, PajekSection::Edges | PajekSection::EdgesList)
                && declared.is_none()
            {
                return Err(ParseError::MissingVerticesHeader);
            }
            continue;
        }
        let k = match section {
            PajekSection::Preamble | PajekSection::Other => continue,
            _ => declared.ok_or(ParseError::MissingVerticesHeader)?,
        };
        let tokens = pajek_tokens(line);
        let id = |tok: &str| -> Result<usize, ParseError> {
            let id: i64 = tok.parse().map_err(|_| ParseError::Line {
                line: lineno,
                message: format!("expected a vertex id, found `{tok}`"),
            })?;
            if id < 1 || id as usize > k {
                return Err(ParseError::VertexIdOutOfRange {
                    line: lineno,
                    id,
                    declared: k,
                });
            }
            Ok(id as usize - 1)
        };
        match section {
            PajekSection::Vertices => {
                let v = id(&tokens[0])?;
                if let Some(label) = tokens.get(1) {
                    labels[v] = label.clone();
                }
            }
            PajekSection::Edges => {
                if tokens.len() < 2 {
                    return Err(ParseError::Line {
                        line: lineno,
                        message: "edge line needs two ids".into(),
                    });
                }
                edges.push((id(&tokens[0])?, id(&tokens[1])?));
            }
            PajekSection::EdgesList => {
                let u = id(&tokens[0])?;
                for t in &tokens[1..] {
                    edges.push((u, id(t)?));
                }
            }
            PajekSection::Preamble | PajekSection::Other => unreachable!(),
        }
    }
    let n = declared.ok_or(ParseError::MissingVerticesHeader)?;
    Ok(build(n, edges, Some(labels)))
}

#[derive(Debug, Clone, PartialEq)]
enum GmlValue {
    Scalar(String),
    List(Vec<(String, GmlValue)>),
}

fn gml_tokens(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim_start();
        if line.starts_with('#') {
            continue;
        }
        let mut chars = line.chars().peekable();
        while let Some(&c) = chars.peek() {
            match c {
                c if c.is_whitespace() => {
                    chars.next();
                }
                '[' | ']' => {
                    out.push(c.to_string());
                    chars.next();
                }
                '"' => {
                    chars.next();
                    let mut s = String::from("\"");
                    for c in chars.by_ref() {
                        if c == '"' {
                            break;
                        }
                        s.push(c);
                    }
                    out.push(s);
                }
                _ => {
                    let mut s = String::new();
                    while let Some(&c) = chars.peek() {
                        if c.is_whitespace() || c == '[' || c == ']' {
                            break;
                        }
                        s.push(c);
                        chars.next();
                    }
                    out.push(s);
                }
            }
        }
    }
    out
}

fn gml_list<I: Iterator<Item = String>>(
    tokens: &mut std::iter::Peekable<I>,
    nested: bool,
) -> Result<Vec<(String, GmlValue)>, ParseError> {
    let mut items = Vec::new();
    loop {
        let key = match tokens.next() {
            None if nested => return Err(ParseError::UnbalancedBrackets),
            None => return Ok(items),
            Some(t) if t == "]" => {
                return if nested {
                    Ok(items)
                } else {
                    Err(ParseError::UnbalancedBrackets)
                };
            }
            Some(t) if t == "[" => return Err(ParseError::UnbalancedBrackets),
            Some(t) => t,
        };
        let value = match tokens.next() {
            None => return Err(ParseError::UnbalancedBrackets),
            Some(t) if t == "[" => GmlValue::List(gml_list(tokens, true)?),
            Some(t) if t == "]" => return Err(ParseError::UnbalancedBrackets),
            Some(t) => GmlValue::Scalar(t.trim_start_matches('"').to_owned()),
        };
        items.push((key, value));
    }
}

fn gml_scalar<'a>(items: &'a [(String, GmlValue)], key: &str) -> Option<&'a str> {
    items.iter().find_map(|(k, v)| match v {
        GmlValue::Scalar(s) if k == key => Some(s.as_str()),
        _ => None,
    })
}

/// GML subset: `graph [ node [ id N ... ] edge [ source A target B ... ] ]`.
/// Node ids are arbitrary tokens, mapped to dense indices in declaration
/// order. A `directed` flag is accepted and ignored.
pub fn parse_gml(text: &str) -> Result<Graph, ParseError> {
    let mut tokens = gml_tokens(text).into_iter().peekable();
    let top = gml_list(&mut tokens, false)?;
    let body = top
        .iter()
        .find_map(|(k, v)| match v {
            GmlValue::List(items) if k == "graph" => Some(items),
            _ => None,
        })
        .ok_or(ParseError::MissingGraphBlock)?;

    let mut ids = Interner::default();
    let mut labels = Vec::new();
    for (k, v) in body {
        if let (true, GmlValue::List(items)) = (k == "node", v) {
            let id = gml_scalar(items, "id").ok_or_else(|| ParseError::Line {
                line: 0,
                message: "node without id".into(),
            })?;
            let before = ids.labels.len();
            ids.intern(id);
            if ids.labels.len() > before {
                labels.push(gml_scalar(items, "label").unwrap_or(id).to_owned());
            }
        }
    }
    let mut edges = Vec::new();
    for (k, v) in body {
        if let (true, GmlValue::List(items)) = (k == "edge", v) {
            let end = |key: &str| -> Result<usize, ParseError> {
                let tok = gml_scalar(items, key).ok_or_else(|| ParseError::Line {
                    line: 0,
                    message: format!("edge without {key}"),
                })?;
                ids.index
                    .get(tok)
                    .copied()
                    .ok_or_else(|| ParseError::UndeclaredNode(tok.to_owned()))
            };
            let u = end("source")?;
            let v = end("target")?;
            edges.push((u, v));
        }
    }
    Ok(build(labels.len(), edges, Some(labels)))
}
