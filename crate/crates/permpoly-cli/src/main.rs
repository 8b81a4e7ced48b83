//! `permpoly`: exact permanental polynomials of graph Laplacians from the
//! command line. Deterministic output for fixed flags; polynomials render in
//! descending powers, machine output is JSON with decimal coefficient
//! strings in ascending order.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use permpoly::claims::{self, rows_to_csv};
use permpoly::closedforms;
use permpoly::engines::{psi_with_caps, EngineCaps, EngineError, Method};
use permpoly::families::{Family, FamilyError, FamilySpec};
use permpoly::graph::{Graph, MatrixKind};
use permpoly::graph6;
use permpoly::invariants::{
    forward_invariants, poly_invariants, solve_degree_system, InvariantReport,
};
use permpoly::mates::{mate_search, MateSource, StreamErrorPolicy};
use permpoly::poly::IntPoly;
use serde_json::json;
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 64;
const EXIT_CAP: u8 = 65;
const EXIT_BAD_INPUT: u8 = 66;

#[derive(Parser)]
#[command(
    name = "permpoly",
    version,
    about = "Exact Laplacian and signless Laplacian permanental polynomials"
)]
struct Cli {
    /// Seed for randomized operations; current subcommands are fully
    /// deterministic, the flag is accepted for script stability.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker threads for mates and verify (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute psi(L(G)) / psi(Q(G)) for a graph or family.
    Poly(PolyArgs),
    /// Build a family graph and print graph6 plus a summary.
    Family(FamilyArgs),
    /// Evaluate a closed form for a structured family.
    ClosedForm(ClosedFormArgs),
    /// Grid-compare closed forms and published claims against the engines.
    Verify(VerifyArgs),
    /// Invariant report (n, m, sum d^2, cubic) from a graph or polynomial.
    Invariants(InputArgs),
    /// Solve the degree system of an invariant report.
    Degsys(DegsysArgs),
    /// Search a census for co-permanental mates.
    Mates(MatesArgs),
    /// Emit the full adjudication of published values as CSV.
    Errata(ErrataArgs),
}

#[derive(Args)]
struct ErrataArgs {
    /// Rows as a JSON array instead of CSV.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Laplacian,
    Signless,
    Both,
}

impl KindArg {
    fn kinds(self) -> Vec<MatrixKind> {
        match self {
            KindArg::Laplacian => vec![MatrixKind::Laplacian],
            KindArg::Signless => vec![MatrixKind::Signless],
            KindArg::Both => vec![MatrixKind::Laplacian, MatrixKind::Signless],
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Naive,
    Ryser,
    Reduce,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Naive => Method::Naive,
            MethodArg::Ryser => Method::Ryser,
            MethodArg::Reduce => Method::Reduce,
        }
    }
}

#[derive(Args)]
struct PolyArgs {
    /// Family spec, e.g. btree:2 or coconut:3,4.
    #[arg(long)]
    family: Option<String>,
    /// One graph6 string.
    #[arg(long)]
    g6: Option<String>,
    /// Newline-delimited graph6 file; one output line per graph.
    #[arg(long, value_name = "FILE")]
    g6_file: Option<String>,
    #[arg(long, value_enum, default_value = "both")]
    kind: KindArg,
    #[arg(long, value_enum, default_value = "auto")]
    method: MethodArg,
    /// Engine size caps, e.g. naive=9,ryser=24.
    #[arg(long)]
    caps: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ClosedFormArgs {
    /// spider:n,m | btree:d | corona_cycle_k1:n | c3bar:n | c4bar:n
    #[arg(long)]
    family: String,
    #[arg(long, value_enum, default_value = "both")]
    kind: KindArg,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Family name: ct3, ct4, h3n, spider, btree, corona_cycle_k1, c3bar, c4bar.
    #[arg(long)]
    family: String,
    /// Primary parameter grid, e.g. 1:4.
    #[arg(long, value_name = "A:B")]
    n_range: String,
    /// Secondary grid for spider legs (default 1:4).
    #[arg(long, value_name = "A:B")]
    m_range: Option<String>,
    #[arg(long, value_enum, default_value = "both")]
    kind: KindArg,
    /// Rows as a JSON array instead of CSV.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct InputArgs {
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    g6: Option<String>,
    /// Polynomial input: comma-separated decimal coefficients, ascending.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
    #[arg(long, value_enum, default_value = "both")]
    kind: KindArg,
    /// Output is already JSON; the flag is accepted for uniformity.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DegsysArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Include histograms that fail the realizability inequalities.
    #[arg(long)]
    include_nongraphical: bool,
}

#[derive(Args)]
struct MatesArgs {
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    g6: Option<String>,
    #[arg(long, value_enum, default_value = "both")]
    kinds: KindArg,
    /// "builtin" or a path to a newline-delimited graph6 file.
    #[arg(long, default_value = "builtin")]
    source: String,
    /// Restrict the census to connected candidates.
    #[arg(long)]
    connected_only: bool,
    /// Skip malformed stream lines instead of aborting.
    #[arg(long)]
    skip_bad_lines: bool,
    /// Output is already JSON; the flag is accepted for uniformity.
    #[arg(long)]
    json: bool,
}

/// A process failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: msg.into(),
        }
    }
    fn bad_input(msg: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_BAD_INPUT,
            message: msg.into(),
        }
    }
    fn cap(msg: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_CAP,
            message: msg.into(),
        }
    }
}

impl From<FamilyError> for Failure {
    fn from(e: FamilyError) -> Failure {
        Failure::bad_input(e.to_string())
    }
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Failure {
        match e {
            EngineError::AboveCap { .. } => Failure::cap(e.to_string()),
            EngineError::Graph(_) => Failure::bad_input(e.to_string()),
        }
    }
}

fn parse_range(text: &str) -> Result<(usize, usize), Failure> {
    let (a, b) = text
        .split_once(':')
        .ok_or_else(|| Failure::usage(format!("range '{text}' must look like a:b")))?;
    let lo = a
        .parse()
        .map_err(|_| Failure::usage(format!("bad range bound '{a}'")))?;
    let hi = b
        .parse()
        .map_err(|_| Failure::usage(format!("bad range bound '{b}'")))?;
    if lo > hi {
        return Err(Failure::usage(format!("empty range '{text}'")));
    }
    Ok((lo, hi))
}

fn parse_caps(text: &str) -> Result<EngineCaps, Failure> {
    let mut caps = EngineCaps::default();
    for part in text.split(',') {
        let (name, value) = part
            .split_once('=')
            .ok_or_else(|| Failure::usage(format!("bad caps entry '{part}'")))?;
        let v: usize = value
            .parse()
            .map_err(|_| Failure::usage(format!("bad caps value '{value}'")))?;
        match name.trim() {
            "naive" => caps.naive = v,
            "ryser" => caps.ryser = v,
            other => return Err(Failure::usage(format!("unknown cap '{other}'"))),
        }
    }
    Ok(caps)
}

fn graph_from_flags(
    family: &Option<String>,
    g6: &Option<String>,
) -> Result<(Graph, String), Failure> {
    match (family, g6) {
        (Some(spec_text), None) => {
            let spec = FamilySpec::parse(spec_text)?;
            let g = spec.construct()?;
            Ok((g, spec.to_string()))
        }
        (None, Some(code)) => {
            let g = graph6::decode(code).map_err(|e| Failure::bad_input(e.to_string()))?;
            Ok((g, code.clone()))
        }
        _ => Err(Failure::usage(
            "exactly one of --family or --g6 is required",
        )),
    }
}

fn poly_json(p: &IntPoly) -> serde_json::Value {
    json!({
        "text": p.to_string(),
        "coeffs_ascending": p.coeffs_decimal(),
    })
}

fn run_poly(args: &PolyArgs) -> Result<(), Failure> {
    let caps = match &args.caps {
        Some(text) => parse_caps(text)?,
        None => EngineCaps::default(),
    };
    let method: Method = args.method.into();

    let inputs: Vec<(Graph, String)> = if let Some(path) = &args.g6_file {
        if args.family.is_some() || args.g6.is_some() {
            return Err(Failure::usage(
                "--g6-file cannot be combined with --family or --g6",
            ));
        }
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::bad_input(format!("{path}: {e}")))?;
        let mut graphs = Vec::new();
        for (line, decoded) in graph6::decode_lines(&text) {
            let g = decoded.map_err(|e| Failure::bad_input(format!("line {line}: {e}")))?;
            let code = graph6::encode(&g);
            graphs.push((g, code));
        }
        graphs
    } else {
        vec![graph_from_flags(&args.family, &args.g6)?]
    };

    let many = inputs.len() > 1;
    for (g, label) in &inputs {
        let mut results: Vec<(MatrixKind, IntPoly)> = Vec::new();
        for kind in args.kind.kinds() {
            results.push((kind, psi_with_caps(g, kind, method, &caps)?));
        }
        if args.json {
            let mut obj = serde_json::Map::new();
            obj.insert("input".into(), json!(label));
            obj.insert("n".into(), json!(g.n()));
            obj.insert("m".into(), json!(g.edge_count()));
            for (kind, p) in &results {
                obj.insert(kind.name().into(), poly_json(p));
            }
            if results.len() == 2 {
                obj.insert("equal".into(), json!(results[0].1 == results[1].1));
            }
            println!("{}", serde_json::Value::Object(obj));
        } else if results.len() == 1 {
            if many {
                println!("{}\t{}", label, results[0].1);
            } else {
                println!("{}", results[0].1);
            }
        } else {
            if many {
                println!("# {}", label);
            }
            println!("L: {}", results[0].1);
            println!("Q: {}", results[1].1);
            if results[0].1 == results[1].1 {
                println!("# psi_L = psi_Q (bipartite)");
            }
        }
    }
    Ok(())
}

fn run_family(args: &FamilyArgs) -> Result<(), Failure> {
    let spec = FamilySpec::parse(&args.family)?;
    let g = spec.construct()?;
    let degrees = g.degree_sequence();
    if args.json {
        println!(
            "{}",
            json!({
                "family": spec.to_string(),
                "graph6": graph6::encode(&g),
                "n": g.n(),
                "m": g.edge_count(),
                "degrees": degrees,
            })
        );
    } else {
        println!("graph6: {}", graph6::encode(&g));
        println!("n: {}", g.n());
        println!("m: {}", g.edge_count());
        println!(
            "degrees: {}",
            degrees
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
    }
    Ok(())
}

fn closed_form_eval(spec: &FamilySpec, kind: MatrixKind) -> Result<IntPoly, Failure> {
    let p = &spec.params;
    let out = match spec.family {
        Family::Spider => closedforms::spider_psi(p[0], p[1])?,
        Family::BinaryTree => closedforms::btree_psi(p[0])?,
        Family::CoronaCycleK1 => closedforms::corona_cycle_psi(p[0], kind)?,
        Family::CoronaCycleEmpty if p[0] == 3 => closedforms::c3_bar_psi(p[1], kind)?,
        Family::CoronaCycleEmpty if p[0] == 4 => closedforms::c4_bar_psi(p[1], kind)?,
        _ => {
            return Err(Failure::usage(format!(
                "no closed form for family '{}'",
                spec.family.name()
            )))
        }
    };
    Ok(out)
}

fn run_closed_form(args: &ClosedFormArgs) -> Result<(), Failure> {
    let spec = FamilySpec::parse(&args.family)?;
    let mut results: Vec<(MatrixKind, IntPoly)> = Vec::new();
    for kind in args.kind.kinds() {
        results.push((kind, closed_form_eval(&spec, kind)?));
    }
    if args.json {
        let mut obj = serde_json::Map::new();
        obj.insert("family".into(), json!(spec.to_string()));
        for (kind, p) in &results {
            obj.insert(kind.name().into(), poly_json(p));
        }
        println!("{}", serde_json::Value::Object(obj));
    } else if results.len() == 1 {
        println!("{}", results[0].1);
    } else {
        println!("L: {}", results[0].1);
        println!("Q: {}", results[1].1);
        if results[0].1 == results[1].1 {
            println!("# psi_L = psi_Q (bipartite)");
        }
    }
    Ok(())
}

fn run_verify(args: &VerifyArgs) -> Result<(), Failure> {
    let n_range = parse_range(&args.n_range)?;
    let m_range = args.m_range.as_deref().map(parse_range).transpose()?;
    let (family, fixed_m) = match args.family.as_str() {
        "ct3" => (Family::Coconut, Some((3, 3))),
        "ct4" => (Family::Coconut, Some((4, 4))),
        "coconut" => (Family::Coconut, None),
        "h3n" => (Family::H3n, None),
        "spider" => (Family::Spider, None),
        "btree" | "binary_tree" => (Family::BinaryTree, None),
        "corona_cycle_k1" => (Family::CoronaCycleK1, None),
        "c3bar" => (Family::CoronaCycleEmpty, Some((3, 3))),
        "c4bar" => (Family::CoronaCycleEmpty, Some((4, 4))),
        "corona_cycle_empty" => (Family::CoronaCycleEmpty, None),
        other => return Err(Failure::usage(format!("unknown verify family '{other}'"))),
    };
    let m_range = fixed_m.or(m_range);
    let rows = claims::verify_family(family, n_range, m_range, &args.kind.kinds())
        .map_err(|e| Failure::usage(e.to_string()))?;
    if args.json {
        println!("{}", rows_json(&rows));
    } else {
        print!("{}", rows_to_csv(&rows));
    }
    Ok(())
}

fn rows_json(rows: &[claims::ErrataRow]) -> serde_json::Value {
    serde_json::Value::Array(
        rows.iter()
            .map(|r| {
                json!({
                    "family": r.family,
                    "kind": r.kind,
                    "params": r.params,
                    "power": r.power,
                    "stated": r.stated,
                    "computed": r.computed,
                    "verdict": r.verdict,
                })
            })
            .collect(),
    )
}

fn report_json(r: &InvariantReport) -> serde_json::Value {
    json!({
        "kind": r.kind.name(),
        "n": r.n,
        "m": r.m,
        "sum_d2": r.sum_d2,
        "cubic": r.cubic,
        "t_known": r.t_known,
    })
}

fn reports_from_input(input: &InputArgs) -> Result<Vec<InvariantReport>, Failure> {
    match (&input.family, &input.g6, &input.coeffs) {
        (_, _, None) => {
            let (g, _) = graph_from_flags(&input.family, &input.g6)?;
            Ok(input
                .kind
                .kinds()
                .into_iter()
                .map(|kind| forward_invariants(&g, kind))
                .collect())
        }
        (None, None, Some(text)) => {
            let kinds = input.kind.kinds();
            if kinds.len() != 1 {
                return Err(Failure::usage(
                    "--coeffs needs an explicit --kind laplacian or --kind signless",
                ));
            }
            let coeffs: Result<Vec<BigInt>, _> = text
                .split(',')
                .map(|c| c.trim().parse::<BigInt>())
                .collect();
            let coeffs = coeffs.map_err(|e| Failure::bad_input(format!("bad coefficient: {e}")))?;
            let p = IntPoly::from_coeffs(coeffs);
            let report =
                poly_invariants(&p, kinds[0]).map_err(|e| Failure::bad_input(e.to_string()))?;
            Ok(vec![report])
        }
        _ => Err(Failure::usage(
            "give exactly one of --family, --g6, or --coeffs",
        )),
    }
}

fn run_invariants(input: &InputArgs) -> Result<(), Failure> {
    let reports = reports_from_input(input)?;
    if reports.len() == 1 {
        println!("{}", report_json(&reports[0]));
    } else {
        let mut obj = serde_json::Map::new();
        for r in &reports {
            obj.insert(r.kind.name().into(), report_json(r));
        }
        println!("{}", serde_json::Value::Object(obj));
    }
    Ok(())
}

fn run_degsys(args: &DegsysArgs) -> Result<(), Failure> {
    let reports = reports_from_input(&args.input)?;
    let mut out = Vec::new();
    for report in &reports {
        let solutions = solve_degree_system(report);
        let total = solutions.len();
        let graphical = solutions.iter().filter(|s| s.graphical).count();
        let shown: Vec<_> = solutions
            .iter()
            .filter(|s| args.include_nongraphical || s.graphical)
            .map(|s| {
                json!({
                    "t": s.t,
                    "k": s.k,
                    "degrees": s.degrees(),
                    "graphical": s.graphical,
                })
            })
            .collect();
        out.push(json!({
            "kind": report.kind.name(),
            "solution_count": total,
            "graphical_count": graphical,
            "solutions": shown,
        }));
    }
    if out.len() == 1 {
        println!("{}", out[0]);
    } else {
        println!("{}", serde_json::Value::Array(out));
    }
    Ok(())
}

fn run_mates(args: &MatesArgs) -> Result<u8, Failure> {
    // per the mates contract every failure exits 2, including input errors
    let to_mate_failure = |f: Failure| Failure {
        code: 2,
        message: f.message,
    };
    let (target, label) = graph_from_flags(&args.family, &args.g6).map_err(to_mate_failure)?;
    let kinds = args.kinds.kinds();
    let policy = if args.skip_bad_lines {
        StreamErrorPolicy::Skip
    } else {
        StreamErrorPolicy::Abort
    };
    let stream_text;
    let source = if args.source == "builtin" {
        MateSource::Builtin
    } else {
        stream_text = std::fs::read_to_string(&args.source)
            .map_err(|e| Failure::bad_input(format!("{}: {e}", args.source)))
            .map_err(to_mate_failure)?;
        MateSource::Graph6Text(&stream_text)
    };
    eprintln!(
        "scanning {} census for mates of {} on {} kind(s)...",
        if args.source == "builtin" {
            "built-in"
        } else {
            "stream"
        },
        label,
        kinds.len()
    );
    let report =
        mate_search(&target, &kinds, source, args.connected_only, policy).map_err(|e| Failure {
            code: 2,
            message: e.to_string(),
        })?;
    println!(
        "{}",
        json!({
            "target_g6": report.target_g6,
            "kinds": report.kinds.iter().map(|k| k.name()).collect::<Vec<_>>(),
            "census_size": report.census_size,
            "connected_only": report.connected_only,
            "mates": report.mates,
            "skipped": report
                .skipped
                .iter()
                .map(|(line, err)| json!({"line": line, "error": err}))
                .collect::<Vec<_>>(),
            "determined": report.determined(),
        })
    );
    Ok(if report.determined() { 0 } else { 1 })
}

fn dispatch(cli: &Cli) -> Result<u8, Failure> {
    if let Some(jobs) = cli.jobs {
        // ignore failure: the pool may already be initialized in tests
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match &cli.command {
        Command::Poly(args) => run_poly(args).map(|()| EXIT_OK),
        Command::Family(args) => run_family(args).map(|()| EXIT_OK),
        Command::ClosedForm(args) => run_closed_form(args).map(|()| EXIT_OK),
        Command::Verify(args) => run_verify(args).map(|()| EXIT_OK),
        Command::Invariants(args) => run_invariants(args).map(|()| EXIT_OK),
        Command::Degsys(args) => run_degsys(args).map(|()| EXIT_OK),
        Command::Mates(args) => run_mates(args),
        Command::Errata(args) => {
            let rows = claims::errata_report();
            if args.json {
                println!("{}", rows_json(&rows));
            } else {
                print!("{}", rows_to_csv(&rows));
            }
            Ok(EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
