use std::ops::RangeInclusive;

use mostar_core::families::{Family, FamilySpec};
use mostar_core::formulas::{formula_value, has_formula, oracle_value, IndexKind};
use mostar_core::Value;
use rayon::prelude::*;
use serde_json::{json, Value as Json};

use crate::failure::Failure;
use crate::record::num;

/// Families swept by `--families all`: everything with a closed form.
pub const ALL_FAMILIES: [Family; 8] = [
    Family::TriangularChain,
    Family::ParaSquareChain,
    Family::OrthoSquareChain,
    Family::ParaHexChain,
    Family::MetaHexChain,
    Family::OrthoHexChain,
    Family::CliqueFlower,
    Family::Triangulane,
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub family: Family,
    pub n: String,
    pub index: IndexKind,
    pub formula: Value,
    pub oracle: Value,
    pub agree: bool,
}

impl Row {
    pub fn to_json(&self) -> Json {
        json!({
            "family": self.family.name(),
            "n": self.n,
            "index": self.index.name(),
            "formula": num(self.formula),
            "oracle": num(self.oracle),
            "agree": self.agree,
        })
    }

    pub fn csv_record(&self) -> [String; 6] {
        [
            self.family.name().to_owned(),
            self.n.clone(),
            self.index.name().to_owned(),
            self.formula.to_string(),
            self.oracle.to_string(),
            self.agree.to_string(),
        ]
    }
}

pub fn parse_families(arg: &str) -> Result<Vec<Family>, Failure> {
    if arg == "all" {
        return Ok(ALL_FAMILIES.to_vec());
    }
    let mut out = Vec::new();
    for name in arg.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let f: Family = name.parse()?;
        if !IndexKind::BOTH.iter().any(|&i| has_formula(f, i)) {
            return Err(Failure::invalid(format!("{f} has no closed form to verify")));
        }
        if !out.contains(&f) {
            out.push(f);
        }
    }
    if out.is_empty() {
        return Err(Failure::invalid("no families given"));
    }
    Ok(out)
}

/// `a..b` (inclusive) or a single value.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("{t:?} is not a nonnegative integer"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if lo == 0 || lo > hi {
        return Err(format!("range {s:?} must satisfy 1 <= from <= to"));
    }
    Ok(lo..=hi)
}

pub fn plan(
    families: &[Family],
    n: RangeInclusive<usize>,
    m: RangeInclusive<usize>,
    inner: RangeInclusive<usize>,
) -> Result<Vec<FamilySpec>, Failure> {
    let mut specs = Vec::new();
    for &f in families {
        if f == Family::CliqueFlower {
            for mm in m.clone() {
                for ii in inner.clone() {
                    specs.push(f.spec(None, Some(mm), Some(ii))?);
                }
            }
        } else {
            for nn in n.clone() {
                specs.push(f.spec(Some(nn), None, None)?);
            }
        }
    }
    Ok(specs)
}

/// `(|V|, |E|)` of a family member without building it.
pub fn predicted_size(spec: &FamilySpec) -> Option<(u128, u128)> {
    let w = |v: usize| v as u128;
    let blocks = |v: u128| Some((v, v.checked_sub(1)?.checked_mul(3)? / 2));
    match *spec {
        FamilySpec::CliqueFlower { m, inner } => {
            let (m, i) = (w(m), w(inner));
            Some((m.checked_mul(i)?, m * (m - 1) / 2 + m.checked_mul(i.checked_mul(i - 1)? / 2)?))
        }
        FamilySpec::TriangulaneAux { k } => blocks(1u128.checked_shl(u32::try_from(k + 1).ok()?)?.checked_sub(1)?),
        FamilySpec::Triangulane { n } => {
            blocks(1u128.checked_shl(u32::try_from(n + 1).ok()?)?.checked_sub(1)?.checked_mul(3)?)
        }
        _ => {
            let (p, _) = spec.family().chain_shape()?;
            let n = w(spec.length()?);
            Some(((w(p) - 1).checked_mul(n)? + 1, w(p).checked_mul(n)?))
        }
    }
}

pub fn check_sizes(specs: &[FamilySpec], max_size: u128) -> Result<(), Failure> {
    for spec in specs {
        let product = predicted_size(spec).and_then(|(v, e)| v.checked_mul(e));
        match product {
            Some(p) if p <= max_size => {}
            _ => {
                return Err(Failure::invalid(format!(
                    "{spec} exceeds the size cap of {max_size} (|V|*|E|); raise --max-size to run it"
                )))
            }
        }
    }
    Ok(())
}

fn evaluate(spec: &FamilySpec) -> Result<Vec<Row>, Failure> {
    let indices: Vec<IndexKind> = IndexKind::BOTH.into_iter().filter(|&i| has_formula(spec.family(), i)).collect();
    let graph = spec.generate()?.graph;
    indices
        .into_iter()
        .map(|index| {
            let formula: Value = formula_value(spec, index)?;
            let oracle: Value = oracle_value(&graph, index)?;
            Ok(Row {
                family: spec.family(),
                n: spec.param_label(),
                index,
                agree: formula == oracle,
                formula,
                oracle,
            })
        })
        .collect()
}

/// Rows in `(family, n, index)` order regardless of how cells are scheduled.
pub fn run(specs: &[FamilySpec]) -> Result<Vec<Row>, Failure> {
    let cells: Vec<Result<Vec<Row>, Failure>> = specs.par_iter().map(evaluate).collect();
    let mut rows = Vec::new();
    for cell in cells {
        rows.extend(cell?);
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..4"), Ok(1..=4));
        assert_eq!(parse_range("1..=4"), Ok(1..=4));
        assert_eq!(parse_range("3"), Ok(3..=3));
        assert!(parse_range("0..2").is_err());
        assert!(parse_range("4..2").is_err());
        assert!(parse_range("a..2").is_err());
    }

    #[test]
    fn predicted_sizes_match_generators() {
        let specs = plan(&ALL_FAMILIES, 1..=6, 1..=4, 1..=4).unwrap();
        for spec in specs.iter().chain([&FamilySpec::TriangulaneAux { k: 4 }]) {
            let g = spec.generate().unwrap().graph;
            assert_eq!(
                predicted_size(spec),
                Some((g.vertex_count() as u128, g.edge_count() as u128)),
                "{spec}"
            );
        }
    }

    #[test]
    fn family_lists() {
        assert_eq!(parse_families("all").unwrap().len(), 8);
        assert_eq!(
            parse_families("triangular, hex-para,triangular").unwrap(),
            vec![Family::TriangularChain, Family::ParaHexChain]
        );
        assert!(parse_families("triangulane-aux").is_err());
        assert!(parse_families("hexagon").is_err());
    }

    #[test]
    fn cap_rejects_large_instances() {
        let specs = [FamilySpec::ParaHexChain { n: 400 }];
        assert!(check_sizes(&specs, 500_000).is_err());
        assert!(check_sizes(&specs, 5_000_000).is_ok());
        assert!(check_sizes(&[FamilySpec::Triangulane { n: 200 }], u128::MAX).is_err());
    }
}
