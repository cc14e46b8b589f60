//! Closed forms for the family indices and the upper/lower bounds for
//! polymer compositions.
//!
//! Chain families are quadratic in `k` with a parity split on `n = 2k` or
//! `n = 2k + 1`; each branch is stored as the coefficient pair `(a, b)` of
//! `a k^2 + b k`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::families::{Family, FamilyError, FamilySpec};
use crate::graph::Graph;
use crate::indices::{self, IndexError};
use crate::polymer::{PolymerKind, PolymerSpec};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("no closed form for {index} of {family}")]
    UnsupportedCombination { family: Family, index: IndexKind },
    #[error("value overflows the scalar type")]
    Overflow,
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Index(#[from] IndexError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("bound needs at least {needed} monomers, got {got}")]
    TooFewMonomers { needed: usize, got: usize },
    #[error("{which} does not apply to a {kind} of {monomers} monomers")]
    MismatchedConstruction { which: BoundKind, kind: PolymerKind, monomers: usize },
    #[error("value overflows the scalar type")]
    Overflow,
    #[error(transparent)]
    Index(#[from] IndexError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum IndexKind {
    #[serde(rename = "mostar")]
    Mostar,
    #[serde(rename = "edge-mostar")]
    EdgeMostar,
}

impl IndexKind {
    pub const BOTH: [IndexKind; 2] = [IndexKind::Mostar, IndexKind::EdgeMostar];

    pub fn name(self) -> &'static str {
        match self {
            IndexKind::Mostar => "mostar",
            IndexKind::EdgeMostar => "edge-mostar",
        }
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IndexKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IndexKind::BOTH
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| format!("unknown index {s:?} (expected mostar or edge-mostar)"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// `n = 2k`
    Even,
    /// `n = 2k + 1`
    Odd,
}

/// `(a, b)` with the branch value `a k^2 + b k`.
fn chain_coefficients(family: Family, parity: Parity, index: IndexKind) -> Option<(i64, i64)> {
    use IndexKind::*;
    use Parity::*;
    let c = match (family, parity, index) {
        (Family::TriangularChain, Even, Mostar) => (12, -4),
        (Family::TriangularChain, Odd, Mostar) => (12, 8),
        (Family::TriangularChain, Even, EdgeMostar) => (18, -6),
        (Family::TriangularChain, Odd, EdgeMostar) => (18, 12),

        (Family::ParaSquareChain, Even, Mostar) => (24, 0),
        (Family::ParaSquareChain, Odd, Mostar) => (24, 24),
        (Family::ParaSquareChain, Even, EdgeMostar) => (32, 0),
        (Family::ParaSquareChain, Odd, EdgeMostar) => (32, 32),

        (Family::OrthoSquareChain, Even, Mostar) => (36, -12),
        (Family::OrthoSquareChain, Odd, Mostar) => (36, 24),
        (Family::OrthoSquareChain, Even, EdgeMostar) => (48, -16),
        (Family::OrthoSquareChain, Odd, EdgeMostar) => (48, 32),

        (Family::ParaHexChain, Even, Mostar) => (60, 0),
        (Family::ParaHexChain, Odd, Mostar) => (60, 60),
        (Family::MetaHexChain, Even, Mostar) => (80, -20),
        (Family::MetaHexChain, Odd, Mostar) => (80, 60),
        (Family::OrthoHexChain, Even, Mostar) => (100, -40),
        (Family::OrthoHexChain, Odd, Mostar) => (100, 60),
        // the same edge Mostar closed form is stated for all three hexagonal chains
        (Family::ParaHexChain | Family::MetaHexChain | Family::OrthoHexChain, Even, EdgeMostar) => (72, 0),
        (Family::ParaHexChain | Family::MetaHexChain | Family::OrthoHexChain, Odd, EdgeMostar) => (72, 72),
        _ => return None,
    };
    Some(c)
}

fn s<S: Scalar>(v: usize) -> Result<S, FormulaError> {
    S::from_count(v).ok_or(FormulaError::Overflow)
}

/// One parity branch of a chain family's closed form, evaluated at `k`.
pub fn chain_branch<S: Scalar>(family: Family, parity: Parity, k: usize, index: IndexKind) -> Result<S, FormulaError> {
    let (a, b) = chain_coefficients(family, parity, index)
        .ok_or(FormulaError::UnsupportedCombination { family, index })?;
    let k = s::<S>(k)?;
    let a = S::from_i64(a).ok_or(FormulaError::Overflow)?;
    let b = S::from_i64(b).ok_or(FormulaError::Overflow)?;
    let ak = a.mul_checked(&k).ok_or(FormulaError::Overflow)?;
    ak.add_checked(&b)
        .and_then(|t| t.mul_checked(&k))
        .ok_or(FormulaError::Overflow)
}

fn clique_flower<S: Scalar>(m: usize, n: usize, index: IndexKind) -> Result<S, FormulaError> {
    let o = || FormulaError::Overflow;
    let (m, n) = (s::<S>(m)?, s::<S>(n)?);
    let one = S::one();
    let m1 = m.sub_checked(&one).ok_or_else(o)?;
    let n1 = n.sub_checked(&one).ok_or_else(o)?;
    match index {
        // m n (m-1) (n-1)
        IndexKind::Mostar => m
            .mul_checked(&n)
            .and_then(|t| t.mul_checked(&m1))
            .and_then(|t| t.mul_checked(&n1))
            .ok_or_else(o),
        // m (n-1) (m-1) / 2 * (n^2 - n + m); m (m-1) is even
        IndexKind::EdgeMostar => {
            let two = S::one() + S::one();
            let half = m.mul_checked(&m1).ok_or_else(o)? / two;
            let tail = n
                .mul_checked(&n)
                .and_then(|t| t.sub_checked(&n))
                .and_then(|t| t.add_checked(&m))
                .ok_or_else(o)?;
            half.mul_checked(&n1).and_then(|t| t.mul_checked(&tail)).ok_or_else(o)
        }
    }
}

/// `Mo(T_n) = 6(2^{n+2} - 2^n) + sum_{i=2}^{n} 3 * 2^i ((2^{n+2} + sum_{t=0}^{i-2} 2^{n-t}) - 2^{n-i+1})`,
/// evaluated term by term.
fn triangulane_mostar<S: Scalar>(n: usize) -> Result<S, FormulaError> {
    let o = || FormulaError::Overflow;
    let p = |e: usize| S::pow2(e).ok_or(FormulaError::Overflow);
    let three = S::from_u8(3).ok_or_else(o)?;
    let six = S::from_u8(6).ok_or_else(o)?;
    let top = p(n + 2)?;
    let mut total = six.mul_checked(&top.sub_checked(&p(n)?).ok_or_else(o)?).ok_or_else(o)?;
    for i in 2..=n {
        let mut inner = top.clone();
        for t in 0..=i - 2 {
            inner = inner.add_checked(&p(n - t)?).ok_or_else(o)?;
        }
        let bracket = inner.sub_checked(&p(n - i + 1)?).ok_or_else(o)?;
        let term = three
            .mul_checked(&p(i)?)
            .and_then(|t| t.mul_checked(&bracket))
            .ok_or_else(o)?;
        total = total.add_checked(&term).ok_or_else(o)?;
    }
    Ok(total)
}

/// Closed-form `Mo` or `Mo_e` of a family member.
pub fn formula_value<S: Scalar>(spec: &FamilySpec, index: IndexKind) -> Result<S, FormulaError> {
    spec.validate()?;
    let family = spec.family();
    match *spec {
        FamilySpec::CliqueFlower { m, inner } => clique_flower(m, inner, index),
        FamilySpec::Triangulane { n } if index == IndexKind::Mostar => triangulane_mostar(n),
        FamilySpec::Triangulane { .. } | FamilySpec::TriangulaneAux { .. } => {
            Err(FormulaError::UnsupportedCombination { family, index })
        }
        _ => {
            let n = spec.length().expect("chain families have a length");
            let parity = if n % 2 == 0 { Parity::Even } else { Parity::Odd };
            chain_branch(family, parity, n / 2, index)
        }
    }
}

/// Whether a closed form exists for this combination.
pub fn has_formula(family: Family, index: IndexKind) -> bool {
    match family {
        Family::TriangulaneAux => false,
        Family::Triangulane => index == IndexKind::Mostar,
        _ => true,
    }
}

/// Closed form compared against the BFS value on the generated graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaCheck<S> {
    pub family: FamilySpec,
    pub index: IndexKind,
    pub formula_value: S,
    pub oracle_value: S,
    pub agrees: bool,
}

pub fn oracle_value<S: Scalar>(g: &Graph, index: IndexKind) -> Result<S, IndexError> {
    match index {
        IndexKind::Mostar => indices::mostar_index(g),
        IndexKind::EdgeMostar => indices::edge_mostar_index(g),
    }
}

pub fn check_formula<S: Scalar>(spec: &FamilySpec, index: IndexKind) -> Result<FormulaCheck<S>, FormulaError> {
    let formula: S = formula_value(spec, index)?;
    let graph = spec.generate()?.graph;
    let oracle: S = oracle_value(&graph, index)?;
    Ok(FormulaCheck {
        family: *spec,
        index,
        agrees: formula == oracle,
        formula_value: formula,
        oracle_value: oracle,
    })
}

/// Size and index values of one monomer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomerStats<S> {
    pub vertices: usize,
    pub edges: usize,
    pub mostar: S,
    pub edge_mostar: S,
}

impl<S: Scalar> MonomerStats<S> {
    pub fn new(vertices: usize, edges: usize, mostar: S, edge_mostar: S) -> Self {
        Self { vertices, edges, mostar, edge_mostar }
    }

    pub fn of(g: &Graph) -> Result<Self, IndexError> {
        let r = indices::index_report::<S>(g, false)?;
        Ok(Self::new(g.vertex_count(), g.edge_count(), r.mostar, r.edge_mostar))
    }

    /// `|V|` for the Mostar index, `|E|` for the edge Mostar index.
    fn size(&self, index: IndexKind) -> usize {
        match index {
            IndexKind::Mostar => self.vertices,
            IndexKind::EdgeMostar => self.edges,
        }
    }

    fn value(&self, index: IndexKind) -> &S {
        match index {
            IndexKind::Mostar => &self.mostar,
            IndexKind::EdgeMostar => &self.edge_mostar,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    LinkUpper,
    ChainUpper,
    BouquetUpper,
    CircuitUpper,
    /// Strict lower bound for the link of two monomers.
    Link2Lower,
    /// Strict lower bound for the link of any number of monomers.
    PolymerLower,
    /// Strict lower bound `sum Mo(G_i)` for point-attached polymers.
    Superadditive,
}

impl BoundKind {
    pub const ALL: [BoundKind; 7] = [
        BoundKind::LinkUpper,
        BoundKind::ChainUpper,
        BoundKind::BouquetUpper,
        BoundKind::CircuitUpper,
        BoundKind::Link2Lower,
        BoundKind::PolymerLower,
        BoundKind::Superadditive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundKind::LinkUpper => "link-upper",
            BoundKind::ChainUpper => "chain-upper",
            BoundKind::BouquetUpper => "bouquet-upper",
            BoundKind::CircuitUpper => "circuit-upper",
            BoundKind::Link2Lower => "link2-lower",
            BoundKind::PolymerLower => "polymer-lower",
            BoundKind::Superadditive => "superadditive",
        }
    }

    pub fn direction(self) -> BoundDirection {
        match self {
            BoundKind::LinkUpper | BoundKind::ChainUpper | BoundKind::BouquetUpper | BoundKind::CircuitUpper => {
                BoundDirection::Upper
            }
            BoundKind::Link2Lower | BoundKind::PolymerLower | BoundKind::Superadditive => BoundDirection::Lower,
        }
    }

    /// Whether the bound is stated for this construction.
    pub fn applies_to(self, kind: PolymerKind, monomers: usize) -> bool {
        match self {
            BoundKind::LinkUpper => kind == PolymerKind::Link,
            BoundKind::ChainUpper => kind == PolymerKind::Chain,
            BoundKind::BouquetUpper => kind == PolymerKind::Bouquet,
            BoundKind::CircuitUpper => kind == PolymerKind::Circuit && monomers >= 3,
            BoundKind::Link2Lower => kind == PolymerKind::Link && monomers == 2,
            BoundKind::PolymerLower => kind == PolymerKind::Link && monomers >= 2,
            BoundKind::Superadditive => kind != PolymerKind::Circuit,
        }
    }

    /// Evaluates the bound from monomer statistics.
    pub fn evaluate<S: Scalar>(self, stats: &[MonomerStats<S>], index: IndexKind) -> Result<S, BoundError> {
        match self {
            BoundKind::LinkUpper => upper_bound_link(stats, index),
            BoundKind::ChainUpper => upper_bound_chain(stats, index),
            BoundKind::BouquetUpper => upper_bound_bouquet(stats, index),
            BoundKind::CircuitUpper => upper_bound_circuit(stats, index),
            BoundKind::Link2Lower => match stats {
                [a, b] => lower_bound_link2(a, b, index),
                _ => Err(BoundError::TooFewMonomers { needed: 2, got: stats.len() }),
            },
            BoundKind::PolymerLower => lower_bound_link_chain(stats, index),
            BoundKind::Superadditive => superadditive_bound(stats, index),
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BoundKind::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| format!("unknown bound {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundDirection {
    Upper,
    Lower,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport<S> {
    pub which: BoundKind,
    pub index: IndexKind,
    pub actual: S,
    pub bound: S,
    pub kind: BoundDirection,
    pub strict: bool,
    /// `bound - actual` for upper bounds, `actual - bound` for lower bounds.
    pub slack: S,
    pub holds: bool,
}

impl<S: Scalar> BoundsReport<S> {
    pub fn new(which: BoundKind, index: IndexKind, actual: S, bound: S) -> Result<Self, BoundError> {
        let kind = which.direction();
        let (slack, holds, strict) = match kind {
            BoundDirection::Upper => (bound.sub_checked(&actual), actual <= bound, false),
            BoundDirection::Lower => (actual.sub_checked(&bound), actual > bound, true),
        };
        Ok(Self {
            which,
            index,
            slack: slack.ok_or(BoundError::Overflow)?,
            actual,
            bound,
            kind,
            strict,
            holds,
        })
    }
}

fn b<S: Scalar>(v: usize) -> Result<S, BoundError> {
    S::from_count(v).ok_or(BoundError::Overflow)
}

fn add<S: Scalar>(acc: S, t: &S) -> Result<S, BoundError> {
    acc.add_checked(t).ok_or(BoundError::Overflow)
}

fn non_empty<S>(stats: &[MonomerStats<S>], needed: usize) -> Result<(), BoundError> {
    if stats.len() < needed {
        Err(BoundError::TooFewMonomers { needed, got: stats.len() })
    } else {
        Ok(())
    }
}

fn sum_values<S: Scalar>(stats: &[MonomerStats<S>], index: IndexKind) -> Result<S, BoundError> {
    stats.iter().try_fold(S::zero(), |acc, st| add(acc, st.value(index)))
}

/// `sum_i |E(G_i)| (total - size_i)`.
fn spread_term<S: Scalar>(stats: &[MonomerStats<S>], index: IndexKind, total: usize) -> Result<S, BoundError> {
    stats.iter().try_fold(S::zero(), |acc, st| {
        let t = b::<S>(st.edges)?
            .mul_checked(&b(total - st.size(index))?)
            .ok_or(BoundError::Overflow)?;
        add(acc, &t)
    })
}

fn total_size<S>(stats: &[MonomerStats<S>], index: IndexKind) -> usize
where
    S: Scalar,
{
    stats.iter().map(|st| st.size(index)).sum()
}

/// Size of the link composite: `|V|` is the sum, `|E|` gains `k - 1` bridges.
fn link_total<S: Scalar>(stats: &[MonomerStats<S>], index: IndexKind) -> usize {
    let sum = total_size(stats, index);
    match index {
        IndexKind::Mostar => sum,
        IndexKind::EdgeMostar => sum + stats.len() - 1,
    }
}

/// Size of a chain or bouquet composite: `k - 1` vertices are merged away.
fn attached_total<S: Scalar>(stats: &[MonomerStats<S>], index: IndexKind) -> usize {
    let sum = total_size(stats, index);
    match index {
        IndexKind::Mostar => sum - (stats.len() - 1),
        IndexKind::EdgeMostar => sum,
    }
}

/// Upper bound for the link `y_i - x_{i+1}` of the monomers.
pub fn upper_bound_link<S: Scalar>(stats: &[MonomerStats<S>], index: IndexKind) -> Result<S, BoundError> {
    non_empty(stats, 1)?;
    let total = link_total(stats, index);
    let mut bound = add(sum_values(stats, index)?, &spread_term(stats, index, total)?)?;
    let sizes: Vec<usize> = stats.iter().map(|st| st.size(index)).collect();
    let whole: usize = sizes.iter().sum();
    let mut prefix = 0;
    for &sz in &sizes[..sizes.len() - 1] {
        prefix += sz;
        bound = add(bound, &b(prefix.abs_diff(whole - prefix))?)?;
    }
    Ok(bound)
}

pub fn upper_bound_chain<S: Scalar>(stats: &[MonomerStats<S>], index: IndexKind) -> Result<S, BoundError> {
    non_empty(stats, 1)?;
    let total = attached_total(stats, index);
    add(sum_values(stats, index)?, &spread_term(stats, index, total)?)
}

pub fn upper_bound_bouquet<S: Scalar>(stats: &[MonomerStats<S>], index: IndexKind) -> Result<S, BoundError> {
    non_empty(stats, 1)?;
    let total = attached_total(stats, index);
    add(sum_values(stats, index)?, &spread_term(stats, index, total)?)
}

/// Upper bound for the circuit over `C_k`, split on the parity of `k`.
pub fn upper_bound_circuit<S: Scalar>(stats: &[MonomerStats<S>], index: IndexKind) -> Result<S, BoundError> {
    non_empty(stats, 3)?;
    let k = stats.len();
    let total = total_size(stats, index)
        + match index {
            IndexKind::Mostar => 0,
            IndexKind::EdgeMostar => k,
        };
    let base = add(sum_values(stats, index)?, &spread_term(stats, index, total)?)?;
    let cycle_term: S = if k % 2 == 0 {
        let t = k / 2;
        let pairs: usize = (0..t).map(|i| stats[i].size(index).abs_diff(stats[t + i].size(index))).sum();
        b::<S>(k)?.mul_checked(&b(pairs)?).ok_or(BoundError::Overflow)?
    } else {
        b::<S>(k - 1)?.mul_checked(&b(total)?).ok_or(BoundError::Overflow)?
    };
    add(base, &cycle_term)
}

/// Strict lower bound for the link of two monomers.
pub fn lower_bound_link2<S: Scalar>(
    first: &MonomerStats<S>,
    second: &MonomerStats<S>,
    index: IndexKind,
) -> Result<S, BoundError> {
    let base = add(first.value(index).clone(), second.value(index))?;
    add(base, &b(first.size(index).abs_diff(second.size(index)))?)
}

/// Strict lower bound for a link of `k >= 2` monomers:
/// `sum Mo(G_i) + sum_{t=1}^{k-1} | (|G| - sum_{i<=t} |G_i|) - |G_t| |`.
pub fn lower_bound_link_chain<S: Scalar>(stats: &[MonomerStats<S>], index: IndexKind) -> Result<S, BoundError> {
    non_empty(stats, 2)?;
    let total = link_total(stats, index);
    let mut bound = sum_values(stats, index)?;
    let mut prefix = 0;
    for st in &stats[..stats.len() - 1] {
        prefix += st.size(index);
        bound = add(bound, &b((total - prefix).abs_diff(st.size(index)))?)?;
    }
    Ok(bound)
}

/// `sum Mo(G_i)` (or `sum Mo_e(G_i)`), which a polymer strictly exceeds.
pub fn superadditive_bound<S: Scalar>(stats: &[MonomerStats<S>], index: IndexKind) -> Result<S, BoundError> {
    non_empty(stats, 1)?;
    sum_values(stats, index)
}

/// Evaluates `which` for `spec` and compares it with the index of `composite`.
pub fn check_bound<S: Scalar>(
    composite: &Graph,
    spec: &PolymerSpec,
    which: BoundKind,
    index: IndexKind,
) -> Result<BoundsReport<S>, BoundError> {
    if !which.applies_to(spec.kind, spec.monomers.len()) {
        return Err(BoundError::MismatchedConstruction {
            which,
            kind: spec.kind,
            monomers: spec.monomers.len(),
        });
    }
    let stats = spec
        .monomers
        .iter()
        .map(|m| MonomerStats::of(&m.graph))
        .collect::<Result<Vec<_>, _>>()?;
    let bound = which.evaluate(&stats, index)?;
    let actual = oracle_value(composite, index)?;
    BoundsReport::new(which, index, actual, bound)
}
