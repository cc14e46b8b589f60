//! Edge-list text and JSON graph formats.
//!
//! Edge-list text: a header line `n m`, then `m` lines `u v` with 0-based
//! ids. Blank lines and lines starting with `#` are skipped.
//!
//! JSON: `{"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]}`. Emission is canonical
//! (`u < v`, edges sorted).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("invalid graph JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Wire form of a graph in JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        Self {
            n: g.vertex_count(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;

    fn try_from(value: GraphJson) -> Result<Self, Self::Error> {
        Graph::from_edge_list(value.n, value.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize), FormatError> {
    let err = |message: String| FormatError::Parse { line: lineno, message };
    let mut fields = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize, FormatError> {
        let tok = fields.next().ok_or_else(|| err(format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| err(format!("{what} {tok:?} is not a nonnegative integer")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = fields.next() {
        return Err(err(format!("unexpected trailing field {extra:?}")));
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(FormatError::Parse {
        line: 1,
        message: "missing `n m` header".into(),
    })?;
    let (n, m) = parse_pair(header, hline)?;
    let pairs = lines
        .map(|(i, l)| parse_pair(l, i))
        .collect::<Result<Vec<_>, _>>()?;
    if pairs.len() != m {
        return Err(FormatError::EdgeCountMismatch { declared: m, found: pairs.len() });
    }
    Ok(Graph::from_edge_list(n, pairs)?)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_json(text: &str) -> Result<Graph, FormatError> {
    let raw: GraphJson = serde_json::from_str(text)?;
    Ok(Graph::try_from(raw)?)
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph JSON is always serializable")
}
