//! Ideal files and output formatting.
//!
//! Three input formats share `#` comments and blank lines:
//!
//! * `monomials`: one generator per line, `x1*x2*x4` or juxtaposed `x1x2x4`.
//!   Variables named `x<k>` map to vertex `k`; any other names are numbered
//!   by first appearance and kept for echo.
//! * `indices`: one generator per line as whitespace-separated vertex indices.
//! * `json`: `{"n": 4, "edges": [[1, 2], [2, 3]]}` with optional `"names"`.
//!
//! A `# vertices: N` comment fixes the vertex count (needed for isolated
//! vertices); otherwise it is the largest vertex used.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::betti::{BettiKind, BettiTable};
use crate::error::{Error, Result};
use crate::hypercomb::{Hypergraph, MAX_VERTEX};
use crate::report::SCHEMA_VERSION;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealFormat {
    Auto,
    Monomials,
    Indices,
    Json,
}

impl FromStr for IdealFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(IdealFormat::Auto),
            "monomials" => Ok(IdealFormat::Monomials),
            "indices" => Ok(IdealFormat::Indices),
            "json" => Ok(IdealFormat::Json),
            _ => Err(Error::BadParams(format!("unknown ideal format `{s}`"))),
        }
    }
}

/// Generators of a squarefree monomial ideal as vertex lists, in file order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealDocument {
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
    /// Variable names for vertices `1..=names.len()` when not `x`-indexed.
    pub names: Option<Vec<String>>,
    pub provenance: Option<String>,
}

impl IdealDocument {
    pub fn from_hypergraph(g: &Hypergraph) -> Self {
        IdealDocument {
            n: g.max_label(),
            edges: g.edge_lists(),
            names: None,
            provenance: None,
        }
    }

    pub fn with_provenance(mut self, p: impl Into<String>) -> Self {
        self.provenance = Some(p.into());
        self
    }

    pub fn hypergraph(&self) -> Result<Hypergraph> {
        Hypergraph::new(self.n, &self.edges, false)
    }

    pub fn variable(&self, v: usize) -> String {
        match &self.names {
            Some(names) if v >= 1 && v <= names.len() => names[v - 1].clone(),
            _ => format!("x{v}"),
        }
    }
}

struct Line<'a> {
    number: usize,
    text: &'a str,
}

#[derive(Default)]
struct Directives {
    vertices: Option<usize>,
    source: Option<String>,
}

/// Strips comments and blank lines, collecting `# vertices:` and `# source:`.
fn content_lines(text: &str) -> Result<(Vec<Line<'_>>, Directives)> {
    let mut lines = Vec::new();
    let mut dir = Directives::default();
    for (i, raw) in text.lines().enumerate() {
        let (body, comment) = match raw.find('#') {
            Some(p) => (&raw[..p], Some(&raw[p + 1..])),
            None => (raw, None),
        };
        if let Some(c) = comment {
            if let Some(rest) = c.trim().strip_prefix("vertices:") {
                let n = rest.trim().parse::<usize>().map_err(|_| Error::Parse {
                    line: i + 1,
                    column: raw.find("vertices").unwrap_or(0) + 1,
                    message: format!("bad vertex count `{}`", rest.trim()),
                })?;
                dir.vertices = Some(n);
            } else if let Some(rest) = c.trim().strip_prefix("source:") {
                dir.source = Some(rest.trim().to_string());
            }
        }
        if !body.trim().is_empty() {
            lines.push(Line { number: i + 1, text: body });
        }
    }
    Ok((lines, dir))
}

fn detect(text: &str) -> Result<IdealFormat> {
    if text.trim_start().starts_with('{') {
        return Ok(IdealFormat::Json);
    }
    let (lines, _) = content_lines(text)?;
    Ok(match lines.first() {
        Some(l) if l.text.split_whitespace().all(|t| t.bytes().all(|b| b.is_ascii_digit())) => {
            IdealFormat::Indices
        }
        Some(_) => IdealFormat::Monomials,
        None => IdealFormat::Indices,
    })
}

pub fn parse_ideal(text: &str, format: IdealFormat) -> Result<IdealDocument> {
    let format = match format {
        IdealFormat::Auto => detect(text)?,
        f => f,
    };
    let doc = match format {
        IdealFormat::Json => parse_json(text)?,
        IdealFormat::Indices => parse_indices(text)?,
        IdealFormat::Monomials | IdealFormat::Auto => parse_monomials(text)?,
    };
    doc.hypergraph()?;
    Ok(doc)
}

fn settle_n(used: usize, directive: Option<usize>, line: usize) -> Result<usize> {
    match directive {
        Some(n) if n < used => Err(Error::Parse {
            line,
            column: 1,
            message: format!("vertex {used} exceeds the declared {n} vertices"),
        }),
        Some(n) => Ok(n),
        None => Ok(used),
    }
}

fn check_vertex(v: usize, line: usize, column: usize) -> Result<usize> {
    if v == 0 || v > MAX_VERTEX {
        return Err(Error::Parse {
            line,
            column,
            message: format!("vertex {v} outside 1..={MAX_VERTEX}"),
        });
    }
    Ok(v)
}

fn parse_indices(text: &str) -> Result<IdealDocument> {
    let (lines, dir) = content_lines(text)?;
    let mut edges = Vec::new();
    let mut used = 0;
    for l in &lines {
        let mut edge = Vec::new();
        let mut offset = 0;
        for tok in l.text.split_whitespace() {
            let col = l.text[offset..].find(tok).map_or(offset, |p| p + offset) + 1;
            offset = col - 1 + tok.len();
            let v = tok.parse::<usize>().map_err(|_| Error::Parse {
                line: l.number,
                column: col,
                message: format!("expected a vertex index, found `{tok}`"),
            })?;
            let v = check_vertex(v, l.number, col)?;
            if edge.contains(&v) {
                return Err(Error::NotSquarefree {
                    line: l.number,
                    variable: format!("x{v}"),
                });
            }
            used = used.max(v);
            edge.push(v);
        }
        edges.push(edge);
    }
    Ok(IdealDocument {
        n: settle_n(used, dir.vertices, lines.last().map_or(1, |l| l.number))?,
        edges,
        names: None,
        provenance: dir.source,
    })
}

fn is_name_byte(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'_'
}

/// `x<k>` index of a variable name, if it has that shape.
fn x_index(name: &str) -> Option<usize> {
    let digits = name.strip_prefix('x')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
        return None;
    }
    digits.parse().ok()
}

/// Splits `x1x2x4` into `x1`, `x2`, `x4`; other tokens stay whole.
fn split_juxtaposed(tok: &str) -> Vec<&str> {
    let b = tok.as_bytes();
    if b.len() < 2 || b[0] != b'x' {
        return vec![tok];
    }
    let mut parts = Vec::new();
    let mut start = 0;
    for i in 1..b.len() {
        if b[i] == b'x' {
            parts.push(&tok[start..i]);
            start = i;
        } else if !b[i].is_ascii_digit() {
            return vec![tok];
        }
    }
    parts.push(&tok[start..]);
    if parts.iter().all(|p| x_index(p).is_some()) {
        parts
    } else {
        vec![tok]
    }
}

fn parse_monomials(text: &str) -> Result<IdealDocument> {
    let (lines, dir) = content_lines(text)?;
    // (line, column, name) per generator
    let mut raw: Vec<(usize, Vec<(usize, String)>)> = Vec::new();
    for l in &lines {
        let mut vars = Vec::new();
        let mut offset = 0;
        for factor in l.text.split('*') {
            let col = offset + factor.len() - factor.trim_start().len() + 1;
            offset += factor.len() + 1;
            let factor = factor.trim();
            if factor.is_empty() {
                return Err(Error::Parse {
                    line: l.number,
                    column: col,
                    message: "empty factor".into(),
                });
            }
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => {
                    let e = e.trim().parse::<u32>().map_err(|_| Error::Parse {
                        line: l.number,
                        column: col + n.len() + 1,
                        message: format!("bad exponent in `{factor}`"),
                    })?;
                    (n.trim(), e)
                }
                None => (factor, 1),
            };
            if let Some(p) = name.bytes().position(|b| !is_name_byte(b)) {
                return Err(Error::Parse {
                    line: l.number,
                    column: col + p,
                    message: format!("unexpected character in `{name}`"),
                });
            }
            if exp == 0 {
                continue;
            }
            if exp > 1 {
                return Err(Error::NotSquarefree {
                    line: l.number,
                    variable: name.to_string(),
                });
            }
            for part in split_juxtaposed(name) {
                vars.push((col, part.to_string()));
            }
        }
        if vars.is_empty() {
            return Err(Error::Parse {
                line: l.number,
                column: 1,
                message: "a generator needs at least one variable".into(),
            });
        }
        raw.push((l.number, vars));
    }

    let indexed = raw.iter().all(|(_, vs)| vs.iter().all(|(_, n)| x_index(n).is_some()));
    let mut names: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    let mut used = 0;
    for (line, vars) in &raw {
        let mut edge = Vec::new();
        for (col, name) in vars {
            let v = if indexed {
                check_vertex(x_index(name).expect("indexed"), *line, *col)?
            } else {
                match names.iter().position(|n| n == name) {
                    Some(p) => p + 1,
                    None => {
                        names.push(name.clone());
                        check_vertex(names.len(), *line, *col)?
                    }
                }
            };
            if edge.contains(&v) {
                return Err(Error::NotSquarefree {
                    line: *line,
                    variable: name.clone(),
                });
            }
            used = used.max(v);
            edge.push(v);
        }
        edges.push(edge);
    }
    Ok(IdealDocument {
        n: settle_n(used, dir.vertices, raw.last().map_or(1, |r| r.0))?,
        edges,
        names: (!indexed).then_some(names),
        provenance: dir.source,
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonIdeal {
    n: usize,
    edges: Vec<Vec<usize>>,
    #[serde(default)]
    names: Option<Vec<String>>,
    #[serde(default)]
    source: Option<String>,
}

fn parse_json(text: &str) -> Result<IdealDocument> {
    let j: JsonIdeal = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if j.n > MAX_VERTEX {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: format!("n = {} exceeds {MAX_VERTEX}", j.n),
        });
    }
    for (k, e) in j.edges.iter().enumerate() {
        for (p, &v) in e.iter().enumerate() {
            if e[..p].contains(&v) {
                return Err(Error::NotSquarefree {
                    line: 1,
                    variable: format!("x{v} in edge {k}"),
                });
            }
        }
    }
    Ok(IdealDocument {
        n: j.n,
        edges: j.edges,
        names: j.names,
        provenance: j.source,
    })
}

pub fn format_ideal(doc: &IdealDocument, format: IdealFormat) -> String {
    let mut out = String::new();
    match format {
        IdealFormat::Json => {
            let mut v = json!({ "n": doc.n, "edges": doc.edges });
            if let Some(names) = &doc.names {
                v["names"] = json!(names);
            }
            if let Some(p) = &doc.provenance {
                v["source"] = json!(p);
            }
            out.push_str(&v.to_string());
            out.push('\n');
        }
        IdealFormat::Indices => {
            if let Some(p) = &doc.provenance {
                out.push_str(&format!("# source: {p}\n"));
            }
            out.push_str(&format!("# vertices: {}\n", doc.n));
            for e in &doc.edges {
                let parts: Vec<String> = e.iter().map(|v| v.to_string()).collect();
                out.push_str(&parts.join(" "));
                out.push('\n');
            }
        }
        IdealFormat::Monomials | IdealFormat::Auto => {
            if let Some(p) = &doc.provenance {
                out.push_str(&format!("# source: {p}\n"));
            }
            out.push_str(&format!("# vertices: {}\n", doc.n));
            for e in &doc.edges {
                let parts: Vec<String> = e.iter().map(|&v| doc.variable(v)).collect();
                out.push_str(&parts.join("*"));
                out.push('\n');
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableStyle {
    Diagram,
    Json,
}

impl fmt::Display for BettiKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BettiKind::Minimal => "minimal",
            BettiKind::Taylor => "taylor",
        })
    }
}

/// Renders a table as a Betti diagram (rows are strands `a - i`, columns `i`)
/// or as JSON.
pub fn format_betti_table(table: &BettiTable, style: TableStyle) -> String {
    match style {
        TableStyle::Json => {
            let entries: Vec<_> = table
                .entries()
                .map(|((i, a), v)| json!({ "i": i, "a": a, "value": v }))
                .collect();
            let v = json!({
                "schema": SCHEMA_VERSION,
                "kind": table.kind.to_string(),
                "field": table.field.map(|f| f.to_string()),
                "entries": entries,
            });
            format!("{v}\n")
        }
        TableStyle::Diagram => diagram(table),
    }
}

fn diagram(table: &BettiTable) -> String {
    let cols = table.max_index().map_or(1, |m| m + 1);
    let strands: Vec<usize> = {
        let mut s: Vec<usize> = table.entries().map(|((i, a), _)| a - i).collect();
        s.sort_unstable();
        s.dedup();
        match (s.first(), s.last()) {
            (Some(&lo), Some(&hi)) => (lo..=hi).collect(),
            _ => Vec::new(),
        }
    };
    let cell = |v: u64| if v == 0 { ".".to_string() } else { v.to_string() };
    let totals = table.total();
    let mut rows: Vec<(String, Vec<String>)> = Vec::new();
    rows.push((
        String::new(),
        (0..cols).map(|i| i.to_string()).collect(),
    ));
    rows.push((
        "total:".into(),
        (0..cols).map(|i| cell(totals.get(i).copied().unwrap_or(0))).collect(),
    ));
    for &s in &strands {
        rows.push((
            format!("{s}:"),
            (0..cols).map(|i| cell(table.get(i, i + s))).collect(),
        ));
    }
    let label_w = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().map(|r| r.1[c].len()).max().unwrap_or(1))
        .collect();
    let mut out = String::new();
    for (label, cells) in rows {
        out.push_str(&format!("{label:>label_w$}"));
        for (c, w) in cells.iter().zip(&widths) {
            out.push_str(&format!(" {c:>w$}"));
        }
        out.push('\n');
    }
    out
}
