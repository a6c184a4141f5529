//! Text formats for graphs, hypergraphs, modulator instances, and
//! elimination forests.
//!
//! Graph files: a header `p vc <n> <m>` followed by m lines `e <u> <v>`
//! with 0-based ids. Hypergraphs: `p hvc <n> <m> <d>` followed by lines
//! `h <v1> ... <vd>`. Lines starting with `c` and blank lines are ignored.
//!
//! Modulator instances are key-value lines, each key exactly once:
//! `graph <n> <u>-<v> ...`, `k <int>` (-1 is the canonical NO marker),
//! `modulator <v1> ...`, `class <tag>`, `depth <d>`. Unknown keys are
//! rejected. Emitting then parsing is the identity.

use crate::elimination::{EliminationForest, ForestBuilder, NodeKind};
use crate::graph::{Graph, Hypergraph, VertexSet};
use crate::kernelize::{Budget, ModulatorInstance};
use crate::oracle::ClassOracle;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("bad integer `{0}`")]
    BadInteger(String),
    #[error("vertex {v} out of range for {n} vertices")]
    IdOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("expected {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("hyperedge arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("unknown key `{0}`")]
    UnknownKey(String),
    #[error("duplicate key `{0}`")]
    DuplicateKey(String),
    #[error("missing key `{0}`")]
    MissingKey(String),
    #[error("unknown class tag `{0}`")]
    UnknownClass(String),
    #[error("malformed record: {0}")]
    Malformed(String),
}

fn err<T>(line: usize, kind: ParseErrorKind) -> Result<T, ParseError> {
    Err(ParseError { line, kind })
}

fn parse_int(line: usize, tok: &str) -> Result<usize, ParseError> {
    tok.parse()
        .map_err(|_| ParseError {
            line,
            kind: ParseErrorKind::BadInteger(tok.to_string()),
        })
}

/// Numbered, non-comment, non-blank lines. A comment is `c` alone or `c`
/// followed by whitespace.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && *l != "c" && !l.starts_with("c "))
}

/// Any of the three instance kinds, detected from the first content line.
#[derive(Clone, Debug)]
pub enum ParsedInput {
    Graph(Graph),
    Hypergraph(Hypergraph),
    Instance(ModulatorInstance),
}

pub fn parse_instance(text: &str) -> Result<ParsedInput, ParseError> {
    match content_lines(text).next() {
        Some((line, l)) => {
            if l.starts_with("p vc") {
                Ok(ParsedInput::Graph(parse_graph(text)?))
            } else if l.starts_with("p hvc") {
                Ok(ParsedInput::Hypergraph(parse_hypergraph(text)?))
            } else if l.starts_with('p') {
                err(line, ParseErrorKind::MalformedHeader(l.to_string()))
            } else {
                Ok(ParsedInput::Instance(parse_modulator_instance(text)?))
            }
        }
        None => err(0, ParseErrorKind::MalformedHeader("empty input".into())),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or(ParseError {
            line: 0,
            kind: ParseErrorKind::MalformedHeader("empty input".into()),
        })?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 4 || toks[0] != "p" || toks[1] != "vc" {
        return err(hline, ParseErrorKind::MalformedHeader(header.to_string()));
    }
    let n = parse_int(hline, toks[2])?;
    let m = parse_int(hline, toks[3])?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::BTreeSet::new();
    for (lno, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 3 || toks[0] != "e" {
            return err(lno, ParseErrorKind::Malformed(l.to_string()));
        }
        let u = parse_int(lno, toks[1])?;
        let v = parse_int(lno, toks[2])?;
        if u >= n {
            return err(lno, ParseErrorKind::IdOutOfRange { v: u, n });
        }
        if v >= n {
            return err(lno, ParseErrorKind::IdOutOfRange { v, n });
        }
        if u == v {
            return err(lno, ParseErrorKind::SelfLoop(u));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return err(lno, ParseErrorKind::DuplicateEdge(u, v));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return err(
            0,
            ParseErrorKind::EdgeCountMismatch {
                expected: m,
                found: edges.len(),
            },
        );
    }
    Ok(Graph::from_edges(n, &edges).expect("validated above"))
}

pub fn emit_graph(g: &Graph) -> String {
    let mut out = format!("p vc {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or(ParseError {
            line: 0,
            kind: ParseErrorKind::MalformedHeader("empty input".into()),
        })?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 5 || toks[0] != "p" || toks[1] != "hvc" {
        return err(hline, ParseErrorKind::MalformedHeader(header.to_string()));
    }
    let n = parse_int(hline, toks[2])?;
    let m = parse_int(hline, toks[3])?;
    let arity = parse_int(hline, toks[4])?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::BTreeSet::new();
    for (lno, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.first() != Some(&"h") {
            return err(lno, ParseErrorKind::Malformed(l.to_string()));
        }
        let mut e = Vec::with_capacity(arity);
        for t in &toks[1..] {
            e.push(parse_int(lno, t)?);
        }
        let mut sorted = e.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != arity || e.len() != arity {
            return err(
                lno,
                ParseErrorKind::ArityMismatch {
                    expected: arity,
                    got: sorted.len(),
                },
            );
        }
        if let Some(&v) = sorted.last() {
            if v >= n {
                return err(lno, ParseErrorKind::IdOutOfRange { v, n });
            }
        }
        if !seen.insert(sorted.clone()) {
            return err(lno, ParseErrorKind::DuplicateEdge(sorted[0], sorted[1]));
        }
        edges.push(sorted);
    }
    if edges.len() != m {
        return err(
            0,
            ParseErrorKind::EdgeCountMismatch {
                expected: m,
                found: edges.len(),
            },
        );
    }
    Ok(Hypergraph::new(n, arity, edges).expect("validated above"))
}

pub fn emit_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("p hvc {} {} {}\n", h.n(), h.edges().len(), h.arity());
    for e in h.edges() {
        out.push_str("h");
        for v in e {
            out.push_str(&format!(" {v}"));
        }
        out.push('\n');
    }
    out
}

pub fn parse_modulator_instance(text: &str) -> Result<ModulatorInstance, ParseError> {
    let mut graph: Option<Graph> = None;
    let mut k: Option<Budget> = None;
    let mut modulator: Option<VertexSet> = None;
    let mut class: Option<ClassOracle> = None;
    let mut depth: Option<usize> = None;
    for (lno, l) in content_lines(text) {
        let (key, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        let rest = rest.trim();
        let dup = |line| ParseError {
            line,
            kind: ParseErrorKind::DuplicateKey(key.to_string()),
        };
        match key {
            "graph" => {
                if graph.is_some() {
                    return Err(dup(lno));
                }
                let toks: Vec<&str> = rest.split_whitespace().collect();
                if toks.is_empty() {
                    return err(lno, ParseErrorKind::Malformed("graph needs a size".into()));
                }
                let n = parse_int(lno, toks[0])?;
                let mut edges = Vec::new();
                let mut seen = std::collections::BTreeSet::new();
                for t in &toks[1..] {
                    let (a, b) = t.split_once('-').ok_or(ParseError {
                        line: lno,
                        kind: ParseErrorKind::Malformed(format!("bad edge `{t}`")),
                    })?;
                    let u = parse_int(lno, a)?;
                    let v = parse_int(lno, b)?;
                    if u >= n {
                        return err(lno, ParseErrorKind::IdOutOfRange { v: u, n });
                    }
                    if v >= n {
                        return err(lno, ParseErrorKind::IdOutOfRange { v, n });
                    }
                    if u == v {
                        return err(lno, ParseErrorKind::SelfLoop(u));
                    }
                    if !seen.insert((u.min(v), u.max(v))) {
                        return err(lno, ParseErrorKind::DuplicateEdge(u, v));
                    }
                    edges.push((u, v));
                }
                graph = Some(Graph::from_edges(n, &edges).expect("validated above"));
            }
            "k" => {
                if k.is_some() {
                    return Err(dup(lno));
                }
                k = Some(if rest == "-1" {
                    Budget::No
                } else {
                    Budget::Value(parse_int(lno, rest)?)
                });
            }
            "modulator" => {
                if modulator.is_some() {
                    return Err(dup(lno));
                }
                let mut s = VertexSet::new();
                for t in rest.split_whitespace() {
                    s.insert(parse_int(lno, t)?);
                }
                modulator = Some(s);
            }
            "class" => {
                if class.is_some() {
                    return Err(dup(lno));
                }
                class = Some(ClassOracle::parse(rest).ok_or(ParseError {
                    line: lno,
                    kind: ParseErrorKind::UnknownClass(rest.to_string()),
                })?);
            }
            "depth" => {
                if depth.is_some() {
                    return Err(dup(lno));
                }
                depth = Some(parse_int(lno, rest)?);
            }
            other => return err(lno, ParseErrorKind::UnknownKey(other.to_string())),
        }
    }
    let missing = |name: &str| ParseError {
        line: 0,
        kind: ParseErrorKind::MissingKey(name.to_string()),
    };
    let graph = graph.ok_or_else(|| missing("graph"))?;
    let modulator = modulator.ok_or_else(|| missing("modulator"))?;
    if let Some(v) = modulator.max() {
        if v >= graph.n() {
            return err(0, ParseErrorKind::IdOutOfRange { v, n: graph.n() });
        }
    }
    Ok(ModulatorInstance::trusted(
        graph,
        k.ok_or_else(|| missing("k"))?,
        modulator,
        class.ok_or_else(|| missing("class"))?,
        depth.ok_or_else(|| missing("depth"))?,
    ))
}

pub fn emit_modulator_instance(inst: &ModulatorInstance) -> String {
    let mut out = format!("graph {}", inst.graph().n());
    for (u, v) in inst.graph().edges() {
        out.push_str(&format!(" {u}-{v}"));
    }
    out.push('\n');
    match inst.k() {
        Budget::Value(k) => out.push_str(&format!("k {k}\n")),
        Budget::No => out.push_str("k -1\n"),
    }
    out.push_str("modulator");
    for v in inst.modulator().iter() {
        out.push_str(&format!(" {v}"));
    }
    out.push('\n');
    out.push_str(&format!("class {}\n", inst.oracle()));
    out.push_str(&format!("depth {}\n", inst.depth()));
    out
}

/// Per-node records: `node <id> parent <pid> vertex <v>` for internal
/// nodes, `leaf <id> parent <pid> bag <v1,...>` for leaves. Roots use `-`
/// as parent; an empty bag is `-`.
pub fn emit_forest(f: &EliminationForest) -> String {
    let mut out = String::new();
    for (i, node) in f.nodes().iter().enumerate() {
        let parent = node
            .parent
            .map_or("-".to_string(), |p| p.to_string());
        match &node.kind {
            NodeKind::Internal(v) => {
                out.push_str(&format!("node {i} parent {parent} vertex {v}\n"));
            }
            NodeKind::Leaf(bag) => {
                let bag_s = if bag.is_empty() {
                    "-".to_string()
                } else {
                    bag.iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                };
                out.push_str(&format!("leaf {i} parent {parent} bag {bag_s}\n"));
            }
        }
    }
    out
}

pub fn parse_forest(text: &str) -> Result<EliminationForest, ParseError> {
    let mut builder = ForestBuilder::new();
    for (lno, l) in content_lines(text) {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 6 || toks[2] != "parent" {
            return err(lno, ParseErrorKind::Malformed(l.to_string()));
        }
        let id = parse_int(lno, toks[1])?;
        let parent = if toks[3] == "-" {
            None
        } else {
            Some(parse_int(lno, toks[3])?)
        };
        let got = match (toks[0], toks[4]) {
            ("node", "vertex") => builder.internal(parent, parse_int(lno, toks[5])?),
            ("leaf", "bag") => {
                let bag = if toks[5] == "-" {
                    VertexSet::new()
                } else {
                    let mut s = VertexSet::new();
                    for t in toks[5].split(',') {
                        s.insert(parse_int(lno, t)?);
                    }
                    s
                };
                builder.leaf(parent, bag)
            }
            _ => return err(lno, ParseErrorKind::Malformed(l.to_string())),
        };
        if got != id {
            return err(
                lno,
                ParseErrorKind::Malformed(format!("node ids must be consecutive, got {id}")),
            );
        }
        if let Some(p) = parent {
            if p >= id {
                return err(
                    lno,
                    ParseErrorKind::Malformed(format!("parent {p} not before node {id}")),
                );
            }
        }
    }
    Ok(builder.finish())
}
