//! Line-oriented text format for temporal graphs and 3DM instances.
//!
//! ```text
//! temporal-graph v1
//! vertices 3
//! mode periodic 4
//! edge 0 1 2
//! edge 1 2 1 3
//! ```
//!
//! ```text
//! 3dm v1
//! ground 6 2
//! target 1
//! triple 1 3 5
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. Serialization is
//! canonical: edges sorted by endpoints, labels ascending.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::graph::{Mode, TemporalGraph, Time, TimeLabelSet, Vertex};
use crate::reductions::ThreeDMInstance;

pub const GRAPH_HEADER: &str = "temporal-graph v1";
pub const MATCHING_HEADER: &str = "3dm v1";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based; 0 when the input ends early.
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Graph(TemporalGraph),
    ThreeDM(ThreeDMInstance),
}

type Parsed<T> = std::result::Result<T, ParseError>;

struct Lines<'a> {
    inner: Box<dyn Iterator<Item = (usize, Vec<&'a str>)> + 'a>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: Box::new(
                text.lines()
                    .enumerate()
                    .map(|(i, l)| (i + 1, l.trim()))
                    .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
                    .map(|(i, l)| (i, l.split_whitespace().collect())),
            ),
            last: 0,
        }
    }

    fn next(&mut self) -> Option<(usize, Vec<&'a str>)> {
        let item = self.inner.next();
        if let Some((line, _)) = &item {
            self.last = *line;
        }
        item
    }

    fn expect(&mut self, keyword: &str) -> Parsed<(usize, Vec<&'a str>)> {
        match self.next() {
            Some((line, tokens)) if tokens[0] == keyword => Ok((line, tokens[1..].to_vec())),
            Some((line, tokens)) => err(line, format!("expected `{keyword}`, found `{}`", tokens[0])),
            None => err(0, format!("missing `{keyword}` line")),
        }
    }
}

fn err<T>(line: usize, message: impl Into<String>) -> Parsed<T> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

fn number<T: FromStr>(line: usize, token: &str, what: &str) -> Parsed<T> {
    token
        .parse()
        .or_else(|_| err(line, format!("invalid {what} `{token}`")))
}

fn arity(line: usize, args: &[&str], expected: usize, keyword: &str) -> Parsed<()> {
    if args.len() != expected {
        return err(line, format!("`{keyword}` takes {expected} value(s), found {}", args.len()));
    }
    Ok(())
}

pub fn parse_instance(text: &str) -> Parsed<Instance> {
    let header = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match header {
        Some(GRAPH_HEADER) => parse_graph(text).map(Instance::Graph),
        Some(MATCHING_HEADER) => parse_3dm(text).map(Instance::ThreeDM),
        Some(other) => {
            let line = text.lines().position(|l| l.trim() == other).map_or(0, |i| i + 1);
            err(line, format!("unknown header `{other}`"))
        }
        None => err(1, "empty input"),
    }
}

pub fn parse_graph(text: &str) -> Parsed<TemporalGraph> {
    let mut lines = Lines::new(text);
    match lines.next() {
        Some((_, tokens)) if tokens.join(" ") == GRAPH_HEADER => {}
        Some((line, tokens)) => return err(line, format!("expected header `{GRAPH_HEADER}`, found `{}`", tokens.join(" "))),
        None => return err(1, "empty input"),
    }
    let (line, args) = lines.expect("vertices")?;
    arity(line, &args, 1, "vertices")?;
    let n: usize = number(line, args[0], "vertex count")?;

    let (line, args) = lines.expect("mode")?;
    let mode = match args.as_slice() {
        ["finite"] => Mode::Finite,
        ["periodic", p] => {
            let p: Time = number(line, p, "period")?;
            if p == 0 {
                return err(line, "period must be positive");
            }
            Mode::Periodic(p)
        }
        _ => return err(line, "expected `mode finite` or `mode periodic <p>`"),
    };

    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    while let Some((line, tokens)) = lines.next() {
        if tokens[0] != "edge" {
            return err(line, format!("expected `edge`, found `{}`", tokens[0]));
        }
        if tokens.len() < 4 {
            return err(line, "`edge` needs two endpoints and at least one label");
        }
        let u: Vertex = number(line, tokens[1], "vertex")?;
        let v: Vertex = number(line, tokens[2], "vertex")?;
        if u >= v {
            return err(line, format!("endpoints must satisfy u < v, found {u} {v}"));
        }
        if v >= n {
            return err(line, format!("vertex {v} out of range for {n} vertices"));
        }
        if !seen.insert((u, v)) {
            return err(line, format!("duplicate edge {u} {v}"));
        }
        let labels = tokens[3..]
            .iter()
            .map(|t| number::<Time>(line, t, "label"))
            .collect::<Parsed<Vec<_>>>()?;
        let checked = match mode {
            Mode::Finite => TimeLabelSet::finite(labels.iter().copied()),
            Mode::Periodic(p) => TimeLabelSet::periodic(labels.iter().copied(), p),
        };
        if let Err(e) = checked {
            return err(line, e.to_string());
        }
        edges.push((u, v, labels));
    }
    TemporalGraph::new(n, mode, edges).or_else(|e| err(lines.last, e.to_string()))
}

pub fn parse_3dm(text: &str) -> Parsed<ThreeDMInstance> {
    let mut lines = Lines::new(text);
    match lines.next() {
        Some((_, tokens)) if tokens.join(" ") == MATCHING_HEADER => {}
        Some((line, tokens)) => return err(line, format!("expected header `{MATCHING_HEADER}`, found `{}`", tokens.join(" "))),
        None => return err(1, "empty input"),
    }
    let (line, args) = lines.expect("ground")?;
    arity(line, &args, 2, "ground")?;
    let n: u32 = number(line, args[0], "ground size")?;
    let p_size: u32 = number(line, args[1], "set size")?;
    let (line, args) = lines.expect("target")?;
    arity(line, &args, 1, "target")?;
    let target: usize = number(line, args[0], "target")?;

    let mut triples = Vec::new();
    while let Some((line, tokens)) = lines.next() {
        if tokens[0] != "triple" {
            return err(line, format!("expected `triple`, found `{}`", tokens[0]));
        }
        arity(line, &tokens[1..], 3, "triple")?;
        let x = number(line, tokens[1], "coordinate")?;
        let y = number(line, tokens[2], "coordinate")?;
        let z = number(line, tokens[3], "coordinate")?;
        for c in [x, y, z] {
            if c == 0 || c > n {
                return err(line, format!("coordinate {c} outside 1..={n}"));
            }
        }
        triples.push((x, y, z));
    }
    ThreeDMInstance::new(n, p_size, triples, target).or_else(|e| err(lines.last, e.to_string()))
}

pub fn serialize_graph(g: &TemporalGraph) -> String {
    let mut out = String::new();
    writeln!(out, "{GRAPH_HEADER}").unwrap();
    writeln!(out, "vertices {}", g.n()).unwrap();
    match g.mode() {
        Mode::Finite => writeln!(out, "mode finite").unwrap(),
        Mode::Periodic(p) => writeln!(out, "mode periodic {p}").unwrap(),
    }
    let mut edges: Vec<_> = g.edges().iter().collect();
    edges.sort_by_key(|e| (e.u, e.v));
    for e in edges {
        write!(out, "edge {} {}", e.u, e.v).unwrap();
        for l in e.labels.values() {
            write!(out, " {l}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn serialize_3dm(inst: &ThreeDMInstance) -> String {
    let mut out = String::new();
    writeln!(out, "{MATCHING_HEADER}").unwrap();
    writeln!(out, "ground {} {}", inst.n, inst.p_size).unwrap();
    writeln!(out, "target {}", inst.target).unwrap();
    for (x, y, z) in &inst.triples {
        writeln!(out, "triple {x} {y} {z}").unwrap();
    }
    out
}

pub fn serialize_instance(inst: &Instance) -> String {
    match inst {
        Instance::Graph(g) => serialize_graph(g),
        Instance::ThreeDM(i) => serialize_3dm(i),
    }
}
