//! Generators for the cactus chain families, the clique flower `Q(m, n)` and
//! the triangulanes.
//!
//! Chains are `n` copies of a cycle `C_p` glued by [`build_chain`], with each
//! polygon entered at ring position 0 and left at ring position `spacing`:
//!
//! | family         | p | spacing |
//! |----------------|---|---------|
//! | triangular     | 3 | 1       |
//! | square-para    | 4 | 2       |
//! | square-ortho   | 4 | 1       |
//! | hex-para       | 6 | 3       |
//! | hex-meta       | 6 | 2       |
//! | hex-ortho      | 6 | 1       |
//!
//! Landmark `x_0` is the entry of the first polygon and `x_i` the exit of
//! polygon `i`, so `x_1..x_{n-1}` are the cut vertices of the chain.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::polymer::{build_chain, build_circuit, build_tree_attach, MonomerHandle, PolymerError, PolymerSpec, TreeEdge};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("parameter {0} must be at least 1")]
    ZeroParameter(&'static str),
    #[error("hexagonal chain spacing must be 1, 2 or 3, got {0}")]
    InvalidSpacing(usize),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("family {family} requires parameter {param}")]
    MissingParameter { family: Family, param: &'static str },
    #[error(transparent)]
    Polymer(#[from] PolymerError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    #[serde(rename = "triangular")]
    TriangularChain,
    #[serde(rename = "square-para")]
    ParaSquareChain,
    #[serde(rename = "square-ortho")]
    OrthoSquareChain,
    #[serde(rename = "hex-para")]
    ParaHexChain,
    #[serde(rename = "hex-meta")]
    MetaHexChain,
    #[serde(rename = "hex-ortho")]
    OrthoHexChain,
    #[serde(rename = "clique-flower")]
    CliqueFlower,
    #[serde(rename = "triangulane-aux")]
    TriangulaneAux,
    #[serde(rename = "triangulane")]
    Triangulane,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::TriangularChain,
        Family::ParaSquareChain,
        Family::OrthoSquareChain,
        Family::ParaHexChain,
        Family::MetaHexChain,
        Family::OrthoHexChain,
        Family::CliqueFlower,
        Family::TriangulaneAux,
        Family::Triangulane,
    ];

    pub const CHAINS: [Family; 6] = [
        Family::TriangularChain,
        Family::ParaSquareChain,
        Family::OrthoSquareChain,
        Family::ParaHexChain,
        Family::MetaHexChain,
        Family::OrthoHexChain,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::TriangularChain => "triangular",
            Family::ParaSquareChain => "square-para",
            Family::OrthoSquareChain => "square-ortho",
            Family::ParaHexChain => "hex-para",
            Family::MetaHexChain => "hex-meta",
            Family::OrthoHexChain => "hex-ortho",
            Family::CliqueFlower => "clique-flower",
            Family::TriangulaneAux => "triangulane-aux",
            Family::Triangulane => "triangulane",
        }
    }

    /// Polygon size and cut-vertex spacing of a chain family.
    pub fn chain_shape(self) -> Option<(usize, usize)> {
        match self {
            Family::TriangularChain => Some((3, 1)),
            Family::ParaSquareChain => Some((4, 2)),
            Family::OrthoSquareChain => Some((4, 1)),
            Family::ParaHexChain => Some((6, 3)),
            Family::MetaHexChain => Some((6, 2)),
            Family::OrthoHexChain => Some((6, 1)),
            _ => None,
        }
    }

    /// Builds the spec for this family from loose parameters; `n` doubles as
    /// the recursion depth of the triangulanes.
    pub fn spec(self, n: Option<usize>, m: Option<usize>, inner: Option<usize>) -> Result<FamilySpec, FamilyError> {
        let need = |v: Option<usize>, param| v.ok_or(FamilyError::MissingParameter { family: self, param });
        let spec = match self {
            Family::TriangularChain => FamilySpec::TriangularChain { n: need(n, "n")? },
            Family::ParaSquareChain => FamilySpec::ParaSquareChain { n: need(n, "n")? },
            Family::OrthoSquareChain => FamilySpec::OrthoSquareChain { n: need(n, "n")? },
            Family::ParaHexChain => FamilySpec::ParaHexChain { n: need(n, "n")? },
            Family::MetaHexChain => FamilySpec::MetaHexChain { n: need(n, "n")? },
            Family::OrthoHexChain => FamilySpec::OrthoHexChain { n: need(n, "n")? },
            Family::CliqueFlower => FamilySpec::CliqueFlower { m: need(m, "m")?, inner: need(inner, "inner")? },
            Family::TriangulaneAux => FamilySpec::TriangulaneAux { k: need(n, "n")? },
            Family::Triangulane => FamilySpec::Triangulane { n: need(n, "n")? },
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_owned()))
    }
}

/// One member of a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "family")]
pub enum FamilySpec {
    #[serde(rename = "triangular")]
    TriangularChain { n: usize },
    #[serde(rename = "square-para")]
    ParaSquareChain { n: usize },
    #[serde(rename = "square-ortho")]
    OrthoSquareChain { n: usize },
    #[serde(rename = "hex-para")]
    ParaHexChain { n: usize },
    #[serde(rename = "hex-meta")]
    MetaHexChain { n: usize },
    #[serde(rename = "hex-ortho")]
    OrthoHexChain { n: usize },
    /// `Q(m, inner)`: each vertex of `K_m` glued to its own `K_inner`.
    #[serde(rename = "clique-flower")]
    CliqueFlower { m: usize, inner: usize },
    #[serde(rename = "triangulane-aux")]
    TriangulaneAux { k: usize },
    #[serde(rename = "triangulane")]
    Triangulane { n: usize },
}

impl FamilySpec {
    pub fn family(&self) -> Family {
        match self {
            FamilySpec::TriangularChain { .. } => Family::TriangularChain,
            FamilySpec::ParaSquareChain { .. } => Family::ParaSquareChain,
            FamilySpec::OrthoSquareChain { .. } => Family::OrthoSquareChain,
            FamilySpec::ParaHexChain { .. } => Family::ParaHexChain,
            FamilySpec::MetaHexChain { .. } => Family::MetaHexChain,
            FamilySpec::OrthoHexChain { .. } => Family::OrthoHexChain,
            FamilySpec::CliqueFlower { .. } => Family::CliqueFlower,
            FamilySpec::TriangulaneAux { .. } => Family::TriangulaneAux,
            FamilySpec::Triangulane { .. } => Family::Triangulane,
        }
    }

    /// Chain length, or recursion depth for the triangulanes. `None` for `Q(m, n)`.
    pub fn length(&self) -> Option<usize> {
        match *self {
            FamilySpec::TriangularChain { n }
            | FamilySpec::ParaSquareChain { n }
            | FamilySpec::OrthoSquareChain { n }
            | FamilySpec::ParaHexChain { n }
            | FamilySpec::MetaHexChain { n }
            | FamilySpec::OrthoHexChain { n }
            | FamilySpec::Triangulane { n } => Some(n),
            FamilySpec::TriangulaneAux { k } => Some(k),
            FamilySpec::CliqueFlower { .. } => None,
        }
    }

    /// Compact parameter label, `"7"` or `"5x4"` for `Q(5, 4)`.
    pub fn param_label(&self) -> String {
        match *self {
            FamilySpec::CliqueFlower { m, inner } => format!("{m}x{inner}"),
            _ => self.length().expect("every other family has a length").to_string(),
        }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        match *self {
            FamilySpec::CliqueFlower { m, inner } => {
                if m == 0 {
                    return Err(FamilyError::ZeroParameter("m"));
                }
                if inner == 0 {
                    return Err(FamilyError::ZeroParameter("inner"));
                }
            }
            FamilySpec::TriangulaneAux { k: 0 } => return Err(FamilyError::ZeroParameter("k")),
            _ => {
                if self.length() == Some(0) {
                    return Err(FamilyError::ZeroParameter("n"));
                }
            }
        }
        Ok(())
    }

    pub fn generate(&self) -> Result<FamilyGraph, FamilyError> {
        self.validate()?;
        if let Some((p, spacing)) = self.family().chain_shape() {
            return polygon_chain(p, self.length().unwrap(), spacing);
        }
        match *self {
            FamilySpec::CliqueFlower { m, inner } => gen_clique_flower(m, inner),
            FamilySpec::TriangulaneAux { k } => gen_triangulane_aux(k),
            FamilySpec::Triangulane { n } => gen_triangulane(n),
            _ => unreachable!("chain families handled above"),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::CliqueFlower { m, inner } => write!(f, "clique-flower(m={m}, inner={inner})"),
            FamilySpec::TriangulaneAux { k } => write!(f, "triangulane-aux(k={k})"),
            _ => write!(f, "{}(n={})", self.family(), self.length().unwrap()),
        }
    }
}

/// A generated graph with named vertices and the vertex sets of its units
/// (polygons, petals or sub-triangulanes) in construction order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyGraph {
    pub graph: Graph,
    pub landmarks: BTreeMap<String, usize>,
    pub units: Vec<Vec<usize>>,
}

impl FamilyGraph {
    pub fn landmark(&self, name: &str) -> Option<usize> {
        self.landmarks.get(name).copied()
    }
}

fn polygon_chain(p: usize, n: usize, spacing: usize) -> Result<FamilyGraph, FamilyError> {
    if n == 0 {
        return Err(FamilyError::ZeroParameter("n"));
    }
    let ring = Graph::cycle(p).expect("polygons have at least 3 vertices");
    let monomers = vec![MonomerHandle::new(ring, 0, spacing); n];
    let built = build_chain(&monomers)?;
    let mut landmarks = BTreeMap::new();
    landmarks.insert("x_0".to_owned(), built.map(0, 0));
    for i in 0..n {
        landmarks.insert(format!("x_{}", i + 1), built.map(i, spacing));
    }
    Ok(FamilyGraph { graph: built.graph, landmarks, units: built.vertex_map })
}

/// Chain triangular cactus: `n` triangles, consecutive ones sharing a vertex.
pub fn gen_triangular_chain(n: usize) -> Result<FamilyGraph, FamilyError> {
    polygon_chain(3, n, 1)
}

/// Square cactus chain with opposite cut vertices.
pub fn gen_para_square_chain(n: usize) -> Result<FamilyGraph, FamilyError> {
    polygon_chain(4, n, 2)
}

/// Square cactus chain with adjacent cut vertices.
pub fn gen_ortho_square_chain(n: usize) -> Result<FamilyGraph, FamilyError> {
    polygon_chain(4, n, 1)
}

/// Hexagonal cactus chain; `spacing` is the cycle distance between the entry
/// and exit cut vertices of each hexagon (1 ortho, 2 meta, 3 para).
pub fn gen_hex_chain(n: usize, spacing: usize) -> Result<FamilyGraph, FamilyError> {
    if !(1..=3).contains(&spacing) {
        return Err(FamilyError::InvalidSpacing(spacing));
    }
    polygon_chain(6, n, spacing)
}

/// `Q(m, n)`: vertex `u_i` of `K_m` glued to a private copy of `K_n`.
pub fn gen_clique_flower(m: usize, n: usize) -> Result<FamilyGraph, FamilyError> {
    if m == 0 {
        return Err(FamilyError::ZeroParameter("m"));
    }
    if n == 0 {
        return Err(FamilyError::ZeroParameter("inner"));
    }
    let core = Graph::complete(m).expect("m >= 1");
    let petal = Graph::complete(n).expect("n >= 1");
    let mut monomers = vec![MonomerHandle::at(core, 0)];
    monomers.extend(std::iter::repeat(MonomerHandle::at(petal, 0)).take(m));
    let tree_edges = (0..m).map(|i| TreeEdge { a: 0, va: i, b: i + 1, vb: 0 }).collect();
    let built = build_tree_attach(&PolymerSpec::tree(monomers, tree_edges))?;
    let landmarks = (0..m).map(|i| (format!("u_{}", i + 1), built.map(0, i))).collect();
    let units = built.vertex_map[1..].to_vec();
    Ok(FamilyGraph { graph: built.graph, landmarks, units })
}

fn triangulane_aux(k: usize) -> Result<(FamilyGraph, usize), FamilyError> {
    if k == 0 {
        return Err(FamilyError::ZeroParameter("k"));
    }
    if k == 1 {
        let graph = Graph::complete(3).expect("triangle");
        let landmarks = BTreeMap::from([("y_1".to_owned(), 0)]);
        return Ok((FamilyGraph { graph, landmarks, units: vec![vec![0, 1, 2]] }, 0));
    }
    let (prev, y) = triangulane_aux(k - 1)?;
    let half = MonomerHandle::at(prev.graph, y);
    let apex = MonomerHandle::at(Graph::complete(1).expect("K_1"), 0);
    let built = build_circuit(&[half.clone(), half, apex])?;
    let yk = built.map(2, 0);
    let landmarks = BTreeMap::from([(format!("y_{k}"), yk)]);
    Ok((FamilyGraph { graph: built.graph, landmarks, units: built.vertex_map }, yk))
}

/// Auxiliary triangulane `G_k`: `G_1 = K_3`, and `G_k` is the circuit of
/// `G_{k-1}`, `G_{k-1}` (attached at `y_{k-1}`) and `K_1`, whose vertex is `y_k`.
pub fn gen_triangulane_aux(k: usize) -> Result<FamilyGraph, FamilyError> {
    triangulane_aux(k).map(|(g, _)| g)
}

/// Triangulane `T_n`: three copies of `G_n` attached at `y_n` to a triangle.
/// Landmarks `c_1`, `c_2`, `c_3` are the central triangle.
pub fn gen_triangulane(n: usize) -> Result<FamilyGraph, FamilyError> {
    if n == 0 {
        return Err(FamilyError::ZeroParameter("n"));
    }
    let (aux, y) = triangulane_aux(n)?;
    let arm = MonomerHandle::at(aux.graph, y);
    let built = build_circuit(&[arm.clone(), arm.clone(), arm])?;
    let landmarks = (0..3).map(|i| (format!("c_{}", i + 1), built.map(i, y))).collect();
    Ok(FamilyGraph { graph: built.graph, landmarks, units: built.vertex_map })
}
