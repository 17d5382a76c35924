//! Command-line front end.
//!
//! [`run`] parses an argument list, dispatches to the library and returns the
//! exit code together with the text to print. Failures produce a JSON record
//! `{"error": {"code": ..., "message": ...}}` and a nonzero exit code that is
//! distinct per error code.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bounds::{self, BipartiteVariant, BoundConfig, BoundReport, GeneralVariant};
use crate::circulant::{self, CirculantSpec, XorMode};
use crate::constructions;
use crate::error::Error;
use crate::geometry::{self, ConvexGraph};
use crate::search::{self, SearchMode, SearchOptions};

const DEFAULT_PRECISION: usize = 6;

#[derive(Parser, Debug)]
#[command(name = "outerk", version, about = "Edge-density toolkit for outer k-planar graphs")]
struct Cli {
    /// Significant digits for real-valued output, or `full`.
    #[arg(long, global = true, value_parser = parse_precision)]
    precision: Option<Precision>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug)]
enum Precision {
    Digits(usize),
    Full,
}

fn parse_precision(s: &str) -> Result<Precision, String> {
    if s == "full" {
        return Ok(Precision::Full);
    }
    match s.parse::<usize>() {
        Ok(d) if (1..=17).contains(&d) => Ok(Precision::Digits(d)),
        _ => Err(format!("expected 1..=17 or `full`, got `{s}`")),
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate the closed-form bounds at one (n, k).
    Bounds(BoundsArgs),
    /// Emit a construction as graph JSON.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Report crossing statistics of a graph JSON file (`-` for stdin).
    Verify(VerifyArgs),
    /// Exact maximum edge count for small n.
    Search(SearchArgs),
    /// Max-cut bounds and exact values for circulant graphs.
    Circulant(CirculantArgs),
    /// XOR sum of a bit string over offsets -r..=r.
    Xorsum(XorArgs),
    /// Evaluate every bound over an (n, k) grid as CSV.
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    k: u64,
    /// Print only this variant's value.
    #[arg(long)]
    variant: Option<String>,
    /// Select the bipartite family for --variant.
    #[arg(long)]
    bipartite: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Threshold standing in for "sufficiently large k".
    #[arg(long, default_value_t = bounds::DEFAULT_K_MIN)]
    k_min: u64,
    /// Use the -(2k+5) constant in the bipartite small-k bound.
    #[arg(long)]
    strict: bool,
}

#[derive(Subcommand, Debug)]
enum ConstructCmd {
    KxChain {
        #[arg(long)]
        x: usize,
        #[arg(long)]
        blocks: usize,
    },
    KxxAlternating {
        #[arg(long)]
        x: usize,
    },
    KxxChain {
        #[arg(long)]
        x: usize,
        #[arg(long, alias = "l")]
        blocks: usize,
    },
    Complete {
        #[arg(long)]
        n: usize,
    },
    Cycle {
        #[arg(long)]
        n: usize,
    },
    /// Two-page multigraph of a graph JSON file.
    Outercopy { file: PathBuf },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    file: PathBuf,
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BipartiteArg {
    Free,
    Alternating,
    Consecutive,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum)]
    bipartite: Option<BipartiteArg>,
    /// Defaults to $OUTERK_BUDGET_NODES, else 200000000.
    #[arg(long)]
    budget_nodes: Option<u64>,
    /// Graph JSON used as the starting incumbent.
    #[arg(long)]
    warm_start: Option<PathBuf>,
    /// Prune only with the combinatorial bounds.
    #[arg(long)]
    no_theorem_bounds: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Exact,
    Mohar,
    Lemma,
    LemmaRefined,
}

#[derive(Args, Debug)]
struct CirculantArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    #[arg(long, value_enum)]
    method: Method,
}

#[derive(Args, Debug)]
struct XorArgs {
    #[arg(long)]
    bits: String,
    #[arg(long)]
    r: usize,
    #[arg(long, conflicts_with = "bounded")]
    cyclic: bool,
    #[arg(long)]
    bounded: bool,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long, value_delimiter = ',', default_value = "10,100,1000")]
    n: Vec<u64>,
    #[arg(long, value_delimiter = ',', default_value = "0,1,2,3,4,5,8,10,20,50,100,200")]
    k: Vec<u64>,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(String),
    MalformedJson(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "invalid_flags",
            CliError::Io(_) => "io_error",
            CliError::MalformedJson(_) => "malformed_json",
            CliError::Lib(e) => e.code(),
        }
    }

    fn exit_code(&self) -> i32 {
        match self.code() {
            "invalid_flags" => 2,
            "invalid_input" => 3,
            "not_applicable" => 4,
            "over_budget" => 5,
            "budget_exceeded" => 6,
            "malformed_json" => 7,
            "io_error" => 8,
            _ => 1,
        }
    }

    fn record(&self) -> Value {
        let message = match self {
            CliError::Usage(m) | CliError::Io(m) | CliError::MalformedJson(m) => m.clone(),
            CliError::Lib(e) => e.to_string(),
        };
        let mut err = json!({ "code": self.code(), "message": message });
        if let CliError::Lib(Error::BudgetExceeded { incumbent, .. }) = self {
            err["incumbent"] = serde_json::to_value(incumbent).expect("result serializes");
        }
        json!({ "error": err })
    }
}

/// Runs one command line (program name first) and returns the exit code and
/// the output text.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return (0, e.to_string());
            }
            let err = CliError::Usage(e.kind().to_string() + ": " + e.to_string().lines().next().unwrap_or(""));
            return (err.exit_code(), err.record().to_string());
        }
    };
    let precision = cli.precision.unwrap_or(Precision::Digits(DEFAULT_PRECISION));
    match dispatch(cli.command, precision) {
        Ok(out) => (0, out),
        Err(e) => (e.exit_code(), e.record().to_string()),
    }
}

fn dispatch(cmd: Command, p: Precision) -> Result<String, CliError> {
    match cmd {
        Command::Bounds(a) => cmd_bounds(a, p),
        Command::Construct(c) => cmd_construct(c),
        Command::Verify(a) => cmd_verify(a),
        Command::Search(a) => cmd_search(a),
        Command::Circulant(a) => cmd_circulant(a, p),
        Command::Xorsum(a) => cmd_xorsum(a),
        Command::Sweep(a) => cmd_sweep(a, p),
    }
}

fn round_sig(v: f64, p: Precision) -> f64 {
    match p {
        Precision::Full => v,
        Precision::Digits(_) if !v.is_finite() || v == 0.0 => v,
        Precision::Digits(d) => format!("{:.*e}", d - 1, v).parse().expect("float round trip"),
    }
}

/// Real number as text; integral values print without a fractional part.
fn fmt_real(v: f64, p: Precision) -> String {
    let r = round_sig(v, p);
    if r.fract() == 0.0 && r.abs() < 1e15 {
        format!("{}", r as i64)
    } else {
        format!("{r}")
    }
}

fn round_json(v: &mut Value, p: Precision) {
    match v {
        Value::Number(num) if num.is_f64() => {
            let r = round_sig(num.as_f64().expect("f64 number"), p);
            if let Some(n) = serde_json::Number::from_f64(r) {
                *num = n;
            }
        }
        Value::Array(xs) => xs.iter_mut().for_each(|x| round_json(x, p)),
        Value::Object(m) => m.values_mut().for_each(|x| round_json(x, p)),
        _ => {}
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(|e| CliError::Io(e.to_string()))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<ConvexGraph, CliError> {
    let text = read_input(path)?;
    serde_json::from_str(&text).map_err(|e| match e.classify() {
        serde_json::error::Category::Data => Error::invalid(format!("graph JSON: {e}")).into(),
        _ => CliError::MalformedJson(format!("{}: {e}", path.display())),
    })
}

fn cmd_bounds(a: BoundsArgs, p: Precision) -> Result<String, CliError> {
    let cfg = BoundConfig {
        k_min: a.k_min,
        strict_small_k_bip: a.strict,
    };
    if let Some(name) = &a.variant {
        let ev = if a.bipartite {
            let v = BipartiteVariant::parse(name)
                .ok_or_else(|| CliError::Usage(format!("unknown bipartite variant `{name}`")))?;
            bounds::bipartite_upper_with(&cfg, a.n, a.k, v)?
        } else {
            let v = GeneralVariant::parse(name).ok_or_else(|| CliError::Usage(format!("unknown variant `{name}`")))?;
            bounds::general_upper(a.n, a.k, v)?
        };
        return Ok(fmt_real(ev.value, p));
    }
    let report = BoundReport::compute_with(&cfg, a.n, a.k)?;
    match a.format {
        Format::Json => {
            let mut v = serde_json::to_value(&report).expect("report serializes");
            round_json(&mut v, p);
            Ok(v.to_string())
        }
        Format::Csv => {
            let mut out = String::from("name,kind,value,valid,source\n");
            for e in &report.entries {
                let kind = serde_json::to_value(e.kind).expect("kind serializes");
                let value = e.value.map(|v| fmt_real(v, p)).unwrap_or_default();
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    csv_field(&e.name),
                    kind.as_str().unwrap_or_default(),
                    value,
                    e.valid,
                    csv_field(&e.source)
                )
                .expect("write to string");
            }
            Ok(out)
        }
    }
}

fn cmd_construct(c: ConstructCmd) -> Result<String, CliError> {
    let g = match c {
        ConstructCmd::KxChain { x, blocks } => constructions::kx_chain(x, blocks)?,
        ConstructCmd::KxxAlternating { x } => constructions::kxx_alternating(x)?,
        ConstructCmd::KxxChain { x, blocks } => constructions::kxx_chain(x, blocks)?,
        ConstructCmd::Complete { n } => ConvexGraph::complete(n)?,
        ConstructCmd::Cycle { n } => ConvexGraph::cycle(n)?,
        ConstructCmd::Outercopy { file } => {
            let g = read_graph(&file)?;
            return Ok(constructions::outercopy(&g).to_json().to_string());
        }
    };
    Ok(g.to_json())
}

fn cmd_verify(a: VerifyArgs) -> Result<String, CliError> {
    let g = read_graph(&a.file)?;
    let counts = geometry::crossing_counts(&g);
    let (_, degeneracy) = geometry::degeneracy_order(&g);
    let (_, colors) = geometry::greedy_color(&g);
    let mut v = json!({
        "n": g.n(),
        "edge_count": g.edge_count(),
        "crossing_counts": g.edges().iter().zip(&counts)
            .map(|(e, c)| json!({ "edge": [e.a(), e.b()], "crossings": c }))
            .collect::<Vec<_>>(),
        "max_crossing": counts.iter().copied().max().unwrap_or(0),
        "crossing_pairs": geometry::crossing_pairs(&g),
        "bipartite": geometry::is_bipartite(&g),
        "degeneracy": degeneracy,
        "greedy_colors": colors,
    });
    if let Some(k) = a.k {
        v["k"] = json!(k);
        v["k_planar"] = json!(geometry::is_outer_k_planar(&g, k));
    }
    if let Some(c) = g.coloring() {
        v["coloring_proper"] = json!(g.edges().iter().all(|e| c[e.a()] != c[e.b()]));
    }
    Ok(v.to_string())
}

fn cmd_search(a: SearchArgs) -> Result<String, CliError> {
    let mode = match a.bipartite {
        None => SearchMode::General,
        Some(BipartiteArg::Free) => SearchMode::BipartiteFree,
        Some(BipartiteArg::Alternating) => SearchMode::BipartiteAlternating,
        Some(BipartiteArg::Consecutive) => SearchMode::BipartiteConsecutive,
    };
    let mut opts = SearchOptions::default();
    if let Some(b) = a.budget_nodes {
        opts.node_budget = b;
    }
    opts.theorem_bounds = !a.no_theorem_bounds;
    if let Some(path) = &a.warm_start {
        opts.warm_start = Some(read_graph(path)?);
    }
    let result = search::max_edges_with(a.n, a.k, mode, &opts)?;
    Ok(serde_json::to_string(&result).expect("result serializes"))
}

fn cmd_circulant(a: CirculantArgs, p: Precision) -> Result<String, CliError> {
    let spec = CirculantSpec::new(a.n, a.r)?;
    let mut v = json!({ "n": a.n, "r": a.r });
    match a.method {
        Method::Exact => {
            let cut = circulant::exact_maxcut(&spec)?;
            v["method"] = json!("exact");
            v["value"] = json!(cut.value);
            v["witness"] = json!(cut.sides.iter().map(|b| char::from(b'0' + b)).collect::<String>());
        }
        Method::Mohar => {
            v["method"] = json!("mohar");
            v["value"] = json!(circulant::mohar_bound(&spec));
        }
        Method::Lemma | Method::LemmaRefined => {
            let refined = matches!(a.method, Method::LemmaRefined);
            v["method"] = json!(if refined { "lemma-refined" } else { "lemma" });
            v["value"] = json!(circulant::lemma_maxcut_bound(&spec, refined));
        }
    }
    round_json(&mut v, p);
    Ok(v.to_string())
}

fn cmd_xorsum(a: XorArgs) -> Result<String, CliError> {
    let bits = circulant::parse_bits(&a.bits)?;
    let mode = if a.bounded { XorMode::Bounded } else { XorMode::Cyclic };
    Ok(circulant::xor_sum(&bits, a.r, mode)?.to_string())
}

fn cmd_sweep(a: SweepArgs, p: Precision) -> Result<String, CliError> {
    let mut out = String::from("n,k,bound_name,value,valid\n");
    for &n in &a.n {
        for &k in &a.k {
            let report = BoundReport::compute(n, k)?;
            for e in &report.entries {
                let value = e.value.map(|v| fmt_real(v, p)).unwrap_or_default();
                writeln!(out, "{n},{k},{},{value},{}", e.name, e.valid).expect("write to string");
            }
        }
    }
    Ok(out)
}
