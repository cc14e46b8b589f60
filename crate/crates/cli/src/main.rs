mod failure;
mod record;
mod verify;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mostar_core::families::Family;
use mostar_core::formulas::{check_bound, BoundKind, BoundsReport, IndexKind};
use mostar_core::indices::{index_report_with, Parallelism};
use mostar_core::polymer::{compose, PolymerSpec};
use mostar_core::{io as gio, Graph, Value};
use serde_json::{json, Value as Json};

use failure::Failure;
use record::{num, output_record, render};

#[derive(Parser)]
#[command(name = "mostar", version, about = "Mostar, edge Mostar and Wiener indices of graphs and polymers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a member of a graph family.
    Gen(GenArgs),
    /// Compute indices of a graph file.
    Compute(ComputeArgs),
    /// Compare closed forms with computed values over a parameter sweep.
    Verify(VerifyArgs),
    /// Check a bound on a polymer composition.
    Bounds(BoundsArgs),
    /// Build a polymer graph from a spec.
    Compose(ComposeArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Edgelist,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IndexChoice {
    Mostar,
    EdgeMostar,
    Wiener,
    All,
}

impl IndexChoice {
    fn names(self) -> &'static [&'static str] {
        match self {
            IndexChoice::Mostar => &["mostar"],
            IndexChoice::EdgeMostar => &["edge-mostar"],
            IndexChoice::Wiener => &["wiener"],
            IndexChoice::All => &["mostar", "edge-mostar", "wiener"],
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundIndex {
    Mostar,
    EdgeMostar,
}

impl From<BoundIndex> for IndexKind {
    fn from(b: BoundIndex) -> Self {
        match b {
            BoundIndex::Mostar => IndexKind::Mostar,
            BoundIndex::EdgeMostar => IndexKind::EdgeMostar,
        }
    }
}

#[derive(clap::Args)]
struct GenArgs {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    /// Chain length or recursion depth.
    #[arg(long)]
    n: Option<usize>,
    /// Clique size of a clique flower.
    #[arg(long)]
    m: Option<usize>,
    /// Petal clique size of a clique flower.
    #[arg(long)]
    inner: Option<usize>,
    /// Output path; standard output when omitted.
    #[arg(long, short)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: GraphFormat,
}

#[derive(clap::Args)]
struct ComputeArgs {
    /// Graph file, or `-` for standard input.
    input: PathBuf,
    /// Input format; guessed from the extension when omitted.
    #[arg(long, value_enum)]
    input_format: Option<GraphFormat>,
    #[arg(long, value_enum, default_value = "all")]
    index: IndexChoice,
    /// Add one row per edge in canonical order.
    #[arg(long)]
    per_edge: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: ReportFormat,
    /// Run the BFS sweep on the rayon pool.
    #[arg(long)]
    parallel: bool,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Comma-separated family names, or `all`.
    #[arg(long, default_value = "all")]
    families: String,
    #[arg(long, default_value_t = 1)]
    from: usize,
    #[arg(long, default_value_t = 12)]
    to: usize,
    /// Clique sizes of clique flowers, e.g. `1..5`; defaults to `from..to`.
    #[arg(long, value_parser = verify::parse_range)]
    m_range: Option<std::ops::RangeInclusive<usize>>,
    /// Petal sizes of clique flowers; defaults to `from..to`.
    #[arg(long, value_parser = verify::parse_range)]
    inner_range: Option<std::ops::RangeInclusive<usize>>,
    #[arg(long, value_enum, default_value = "csv")]
    format: TableFormat,
    /// Largest allowed |V|*|E| per instance.
    #[arg(long, default_value_t = 500_000)]
    max_size: u128,
}

#[derive(clap::Args)]
struct BoundsArgs {
    /// Polymer spec JSON.
    spec: PathBuf,
    #[arg(long, value_parser = parse_bound)]
    which: BoundKind,
    #[arg(long, value_enum, default_value = "mostar")]
    index: BoundIndex,
    #[arg(long, value_enum, default_value = "json")]
    format: BoundsFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundsFormat {
    Json,
    Text,
}

#[derive(clap::Args)]
struct ComposeArgs {
    /// Polymer spec JSON.
    spec: PathBuf,
    /// Output path; standard output when omitted.
    #[arg(long, short)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: GraphFormat,
    /// Where to write the vertex map; `<out>.map.json` by default.
    #[arg(long)]
    map: Option<PathBuf>,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: mostar_core::families::FamilyError| e.to_string())
}

fn parse_bound(s: &str) -> Result<BoundKind, String> {
    s.parse()
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path, format: Option<GraphFormat>) -> Result<Graph, Failure> {
    let text = read_input(path)?;
    let format = format.unwrap_or_else(|| {
        if path.extension().is_some_and(|e| e == "json") {
            GraphFormat::Json
        } else {
            GraphFormat::Edgelist
        }
    });
    Ok(match format {
        GraphFormat::Edgelist => gio::parse_edge_list(&text)?,
        GraphFormat::Json => gio::parse_json(&text)?,
    })
}

fn read_spec(path: &Path) -> Result<PolymerSpec, Failure> {
    let text = read_input(path)?;
    serde_json::from_str(&text).map_err(|e| Failure::invalid(format!("invalid polymer spec: {e}")))
}

fn write_output(path: Option<&Path>, data: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, data).map_err(|e| Failure::runtime(format!("{}: {e}", p.display()))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(data.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn graph_text(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Edgelist => gio::to_edge_list(g),
        GraphFormat::Json => gio::to_json(g) + "\n",
    }
}

fn cmd_gen(a: GenArgs) -> Result<ExitCode, Failure> {
    let spec = a.family.spec(a.n, a.m, a.inner)?;
    let fg = spec.generate()?;
    write_output(a.out.as_deref(), &graph_text(&fg.graph, a.format))?;
    eprintln!("{spec}: {} vertices, {} edges", fg.graph.vertex_count(), fg.graph.edge_count());
    if !fg.landmarks.is_empty() {
        let marks: Vec<String> = fg.landmarks.iter().map(|(k, v)| format!("{k}={v}")).collect();
        eprintln!("landmarks: {}", marks.join(" "));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_compute(a: ComputeArgs) -> Result<ExitCode, Failure> {
    let g = read_graph(&a.input, a.input_format)?;
    let par = if a.parallel { Parallelism::Parallel } else { Parallelism::Sequential };
    let report = index_report_with::<Value>(&g, a.per_edge, par)?;
    let values = [("mostar", report.mostar), ("edge-mostar", report.edge_mostar), ("wiener", report.wiener)];
    let selected: Vec<(&str, Value)> =
        values.into_iter().filter(|(name, _)| a.index.names().contains(name)).collect();
    let per_edge = report.per_edge.unwrap_or_default();

    let text = match a.format {
        ReportFormat::Json => {
            let mut results = serde_json::Map::new();
            for &(name, v) in &selected {
                results.insert(name.to_owned(), num(v));
            }
            if a.per_edge {
                let rows: Vec<Json> = per_edge
                    .iter()
                    .map(|c| json!({"u": c.edge.0, "v": c.edge.1, "mostar": c.mostar, "edge-mostar": c.edge_mostar}))
                    .collect();
                results.insert("per_edge".to_owned(), Json::Array(rows));
            }
            let inputs = json!({
                "input": a.input.display().to_string(),
                "index": a.index.to_possible_value().unwrap().get_name(),
                "per_edge": a.per_edge,
                "vertices": g.vertex_count(),
                "edges": g.edge_count(),
            });
            render(&output_record("compute", inputs, Json::Object(results)))
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["scope", "u", "v", "index", "value"])?;
            for &(name, v) in &selected {
                w.write_record(["total", "", "", name, &v.to_string()])?;
            }
            for c in &per_edge {
                let (u, v) = (c.edge.0.to_string(), c.edge.1.to_string());
                w.write_record(["edge", &u, &v, "mostar", &c.mostar.to_string()])?;
                w.write_record(["edge", &u, &v, "edge-mostar", &c.edge_mostar.to_string()])?;
            }
            String::from_utf8(w.into_inner().map_err(|e| Failure::runtime(e.to_string()))?)
                .expect("CSV output is UTF-8")
        }
        ReportFormat::Text => {
            let mut s = String::new();
            for &(name, v) in &selected {
                s.push_str(&format!("{name} {v}\n"));
            }
            for c in &per_edge {
                s.push_str(&format!("edge {} {} {} {}\n", c.edge.0, c.edge.1, c.mostar, c.edge_mostar));
            }
            s
        }
    };
    write_output(None, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(a: VerifyArgs) -> Result<ExitCode, Failure> {
    let n = verify::parse_range(&format!("{}..{}", a.from, a.to)).map_err(Failure::invalid)?;
    let m = a.m_range.unwrap_or_else(|| n.clone());
    let inner = a.inner_range.unwrap_or_else(|| n.clone());
    let families = verify::parse_families(&a.families)?;
    let specs = verify::plan(&families, n.clone(), m.clone(), inner.clone())?;
    verify::check_sizes(&specs, a.max_size)?;
    let rows = verify::run(&specs)?;

    let text = match a.format {
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["family", "n", "index", "formula", "oracle", "agree"])?;
            for row in &rows {
                w.write_record(row.csv_record())?;
            }
            String::from_utf8(w.into_inner().map_err(|e| Failure::runtime(e.to_string()))?)
                .expect("CSV output is UTF-8")
        }
        TableFormat::Json => {
            let families: Vec<&str> = families.iter().map(|f| f.name()).collect();
            let inputs = json!({
                "families": families,
                "from": n.start(),
                "to": n.end(),
                "m_range": [m.start(), m.end()],
                "inner_range": [inner.start(), inner.end()],
                "max_size": a.max_size.to_string(),
            });
            let results = rows.iter().map(verify::Row::to_json).collect();
            render(&output_record("verify", inputs, Json::Array(results)))
        }
    };
    write_output(None, &text)?;

    let bad = rows.iter().filter(|r| !r.agree).count();
    if bad > 0 {
        eprintln!("{bad} of {} rows disagree", rows.len());
        return Ok(ExitCode::from(failure::DISAGREEMENT));
    }
    eprintln!("all {} rows agree", rows.len());
    Ok(ExitCode::SUCCESS)
}

fn bounds_json(r: &BoundsReport<Value>) -> Json {
    json!({
        "which": r.which.name(),
        "index": r.index.name(),
        "actual": num(r.actual),
        "bound": num(r.bound),
        "kind": r.kind,
        "strict": r.strict,
        "slack": num(r.slack),
        "holds": r.holds,
    })
}

fn cmd_bounds(a: BoundsArgs) -> Result<ExitCode, Failure> {
    let spec = read_spec(&a.spec)?;
    let index: IndexKind = a.index.into();
    if !a.which.applies_to(spec.kind, spec.monomers.len()) {
        return Err(Failure::invalid(format!(
            "{} does not apply to a {} of {} monomers",
            a.which,
            spec.kind,
            spec.monomers.len()
        )));
    }
    let composite = compose(&spec)?.graph;
    let report = check_bound::<Value>(&composite, &spec, a.which, index)?;
    let text = match a.format {
        BoundsFormat::Json => {
            let inputs = json!({
                "spec": a.spec.display().to_string(),
                "kind": spec.kind,
                "monomers": spec.monomers.len(),
                "which": a.which.name(),
                "index": index.name(),
            });
            render(&output_record("bounds", inputs, bounds_json(&report)))
        }
        BoundsFormat::Text => format!(
            "actual {}\nbound {}\nslack {}\nholds {}\n",
            report.actual, report.bound, report.slack, report.holds
        ),
    };
    write_output(None, &text)?;
    Ok(if report.holds { ExitCode::SUCCESS } else { ExitCode::from(failure::DISAGREEMENT) })
}

fn map_path(a: &ComposeArgs) -> Option<PathBuf> {
    a.map.clone().or_else(|| {
        a.out.as_ref().map(|o| {
            let mut s = o.clone().into_os_string();
            s.push(".map.json");
            PathBuf::from(s)
        })
    })
}

fn cmd_compose(a: ComposeArgs) -> Result<ExitCode, Failure> {
    let spec = read_spec(&a.spec)?;
    let built = compose(&spec)?;
    write_output(a.out.as_deref(), &graph_text(&built.graph, a.format))?;
    if let Some(path) = map_path(&a) {
        let map = json!({ "kind": spec.kind, "vertex_map": built.vertex_map });
        write_output(Some(&path), &render(&map))?;
        eprintln!("vertex map written to {}", path.display());
    }
    eprintln!("{}: {} vertices, {} edges", spec.kind, built.graph.vertex_count(), built.graph.edge_count());
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Compute(a) => cmd_compute(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Bounds(a) => cmd_bounds(a),
        Command::Compose(a) => cmd_compose(a),
    };
    result.unwrap_or_else(|f| {
        eprintln!("error: {f}");
        f.exit_code()
    })
}
