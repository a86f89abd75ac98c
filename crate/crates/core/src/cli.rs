//! The `lampsep` command line. Every subcommand prints its report to stdout,
//! or with `--out DIR` writes it to `DIR` next to a `manifest.json` that
//! `lampsep replay` can rerun.
//!
//! Exit codes: 0 success, 2 usage or precondition, 3 cap exceeded, 4 a
//! certificate or verified property failed.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cayley::{self, Graph, GraphError, GroupKind, VertexSubset};
use crate::groups::{FinitePerm, GroupError, MpqParams};
use crate::numbers::{NumberError, Valuation};
use crate::regmaps::{self, AffineEmbeddingParams, MapError};
use crate::report::{self, RunManifest};
use crate::seed;
use crate::separation::{self, SeparationError, TnDescriptor};

#[derive(Parser, Debug)]
#[command(name = "lampsep", version, about = "Separation profiles and regular maps for lamplighter groups")]
pub struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Largest graph any step may build.
    #[arg(long, global = true, default_value_t = cayley::DEFAULT_MAX_VERTICES)]
    pub max_vertices: usize,
    /// Largest number of ordered vertex pairs to enumerate.
    #[arg(long, global = true, default_value_t = 100_000_000)]
    pub max_pairs: u64,
    /// Write reports and a manifest here instead of printing.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Ball in a Cayley graph.
    Ball(BallArgs),
    /// The box T_n of the lamplighter Cayley graph.
    Tn(TnArgs),
    /// Exact or heuristic balanced cut of a graph.
    Cut(CutArgs),
    /// Fibre separator for a connected lamplighter subgraph.
    Separator(SeparatorArgs),
    /// Congestion of the canonical path family on T_n.
    Paths(BoxArgs),
    /// Fraction of canonical paths meeting a cutset of T_n.
    Crossing(CrossingArgs),
    /// Exhaustive Lipschitz and injectivity check of a map out of Z_2 wr Z.
    VerifyMap(VerifyMapArgs),
    /// Injectivity gap of the affine embedding over all window configurations.
    Gap(GapArgs),
    /// Sampled separation profile, as CSV.
    Profile(ProfileArgs),
    /// Rerun the command recorded in a manifest.
    Replay(ReplayArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupName {
    Lamplighter,
    WreathZz,
    Mpq,
    Affine,
    Symshift,
}

#[derive(Args, Debug, Serialize)]
pub struct GroupArgs {
    #[arg(value_enum)]
    pub group: GroupName,
    /// Lamp modulus.
    #[arg(long, default_value_t = 2)]
    pub modulus: u32,
    #[arg(long, default_value_t = 2, allow_hyphen_values = true)]
    pub p: i64,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub q: i64,
    /// Valuation: arch, {p}adic or tadic{p}.
    #[arg(long = "val", default_value = "arch")]
    pub valuation: String,
    #[arg(long, default_value = "2", allow_hyphen_values = true)]
    pub a: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub b: String,
}

impl GroupArgs {
    fn kind(&self) -> GroupKind {
        match self.group {
            GroupName::Lamplighter => GroupKind::Lamplighter { modulus: self.modulus },
            GroupName::WreathZz => GroupKind::WreathZZ,
            GroupName::Mpq => GroupKind::Mpq { p: self.p, q: self.q },
            GroupName::Affine => GroupKind::Affine { valuation: self.valuation.clone(), a: self.a.clone(), b: self.b.clone() },
            GroupName::Symshift => GroupKind::SymShift,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphFormat {
    Dot,
    Edgelist,
    #[default]
    Json,
}

#[derive(Args, Debug, Serialize)]
pub struct BallArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    #[arg(long)]
    pub radius: u32,
    #[arg(long, value_enum, default_value_t)]
    pub format: GraphFormat,
}

#[derive(Args, Debug, Serialize)]
pub struct TnArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, default_value_t = 2)]
    pub m: u32,
    #[arg(long, value_enum, default_value_t)]
    pub format: GraphFormat,
}

#[derive(Args, Debug, Serialize)]
pub struct CutArgs {
    /// Graph file: JSON as written by `ball`/`tn`, or an edge list.
    #[arg(long, conflicts_with = "tn")]
    pub input: Option<PathBuf>,
    /// Use the box T_n instead of a file.
    #[arg(long)]
    pub tn: Option<u32>,
    #[arg(long, default_value_t = 2)]
    pub m: u32,
    /// Minimum cut by exhaustive search (the default).
    #[arg(long, conflicts_with = "heuristic")]
    pub exact: bool,
    /// Randomized upper bound instead of the exact value.
    #[arg(long)]
    pub heuristic: bool,
    #[arg(long, default_value_t = 16)]
    pub effort: usize,
}

#[derive(Args, Debug, Serialize)]
pub struct SeparatorArgs {
    /// Graph file with lamplighter labels; otherwise a subgraph is sampled.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Ball to sample from.
    #[arg(long, default_value_t = 8)]
    pub radius: u32,
    /// Size of the sampled connected subgraph (default: the whole ball).
    #[arg(long)]
    pub size: Option<usize>,
    #[arg(long, default_value_t = 2)]
    pub modulus: u32,
}

#[derive(Args, Debug, Serialize)]
pub struct BoxArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, default_value_t = 2)]
    pub m: u32,
}

#[derive(Args, Debug, Serialize)]
pub struct CrossingArgs {
    #[command(flatten)]
    pub tn: BoxArgs,
    /// Vertex indices of the cutset; default: every minimum cutset.
    #[arg(long, value_delimiter = ',')]
    pub cutset: Option<Vec<usize>>,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MapName {
    Affine,
    Mpq,
    Wreath,
    Symshift,
}

#[derive(Args, Debug, Serialize)]
pub struct VerifyMapArgs {
    #[arg(value_enum)]
    pub map: MapName,
    #[arg(long, default_value_t = 2, allow_hyphen_values = true)]
    pub p: i64,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub q: i64,
    #[arg(long = "val", default_value = "arch")]
    pub valuation: String,
    #[arg(long, default_value = "2", allow_hyphen_values = true)]
    pub a: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub b: String,
    #[arg(long, default_value = "{0:1,1:0}")]
    pub sigma: String,
    #[arg(long, default_value_t = 2)]
    pub step: i64,
    #[arg(long, default_value_t = 6)]
    pub radius: u32,
}

#[derive(Args, Debug, Serialize)]
pub struct GapArgs {
    #[arg(long = "val", default_value = "arch")]
    pub valuation: String,
    #[arg(long, default_value = "2", allow_hyphen_values = true)]
    pub a: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub b: String,
    #[arg(long, default_value_t = -3, allow_hyphen_values = true)]
    pub lo: i64,
    #[arg(long, default_value_t = 3, allow_hyphen_values = true)]
    pub hi: i64,
}

#[derive(Args, Debug, Serialize)]
pub struct ProfileArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    #[arg(long, default_value_t = 6)]
    pub radius: u32,
    #[arg(long, value_delimiter = ',', default_value = "1,2,4,8,16,24,48,96")]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 4)]
    pub samples: usize,
    #[arg(long, default_value_t = 20)]
    pub exact_up_to: usize,
}

#[derive(Args, Debug, Serialize)]
pub struct ReplayArgs {
    pub manifest: PathBuf,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Ball(_) => "ball",
            Command::Tn(_) => "tn",
            Command::Cut(_) => "cut",
            Command::Separator(_) => "separator",
            Command::Paths(_) => "paths",
            Command::Crossing(_) => "crossing",
            Command::VerifyMap(_) => "verify-map",
            Command::Gap(_) => "gap",
            Command::Profile(_) => "profile",
            Command::Replay(_) => "replay",
        }
    }

    fn parameters(&self) -> BTreeMap<String, String> {
        let value = match self {
            Command::Ball(a) => serde_json::to_value(a),
            Command::Tn(a) => serde_json::to_value(a),
            Command::Cut(a) => serde_json::to_value(a),
            Command::Separator(a) => serde_json::to_value(a),
            Command::Paths(a) => serde_json::to_value(a),
            Command::Crossing(a) => serde_json::to_value(a),
            Command::VerifyMap(a) => serde_json::to_value(a),
            Command::Gap(a) => serde_json::to_value(a),
            Command::Profile(a) => serde_json::to_value(a),
            Command::Replay(a) => serde_json::to_value(a),
        }
        .expect("arguments serialize");
        let mut out = BTreeMap::new();
        flatten_json("", &value, &mut out);
        out
    }
}

fn flatten_json(prefix: &str, value: &serde_json::Value, out: &mut BTreeMap<String, String>) {
    match value {
        serde_json::Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten_json(&key, v, out);
            }
        }
        serde_json::Value::Null => {}
        serde_json::Value::String(s) => {
            out.insert(prefix.to_string(), s.clone());
        }
        other => {
            out.insert(prefix.to_string(), other.to_string());
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Cap(String),
    Invalid(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Invalid(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "error: {m}"),
            CliError::Cap(m) => write!(f, "cap exceeded: {m}"),
            CliError::Invalid(m) => write!(f, "verification failed: {m}"),
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<SeparationError> for CliError {
    fn from(e: SeparationError) -> Self {
        match e {
            SeparationError::Graph(g) => g.into(),
            SeparationError::TooLarge { .. } | SeparationError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            SeparationError::InvalidSeparator { .. } => CliError::Invalid(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<MapError> for CliError {
    fn from(e: MapError) -> Self {
        match e {
            MapError::Graph(g) => g.into(),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<NumberError> for CliError {
    fn from(e: NumberError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Files produced by one subcommand, and whether its checks passed.
struct Output {
    files: Vec<(String, String)>,
    failure: Option<String>,
}

impl Output {
    fn one(name: &str, body: String) -> Self {
        Output { files: vec![(name.into(), body)], failure: None }
    }

    fn failing_if(mut self, failed: bool, message: impl FnOnce() -> String) -> Self {
        if failed {
            self.failure = Some(message());
        }
        self
    }
}

fn graph_output(stem: &str, g: &Graph, format: GraphFormat) -> Output {
    match format {
        GraphFormat::Json => Output::one(&format!("{stem}.json"), report::to_json(&g.to_file())),
        GraphFormat::Edgelist => Output::one(&format!("{stem}.txt"), g.to_edge_list()),
        GraphFormat::Dot => Output::one(&format!("{stem}.dot"), g.to_dot(stem)),
    }
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path)?;
    if text.trim_start().starts_with('{') {
        let file: cayley::GraphFile = serde_json::from_str(&text).map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(file.into_graph()?)
    } else {
        Ok(Graph::from_edge_list(&text)?)
    }
}

fn parse_valuation(text: &str) -> Result<Valuation, CliError> {
    Ok(text.parse::<Valuation>()?)
}

#[derive(Serialize)]
struct PathsReport {
    #[serde(flatten)]
    stats: separation::PathFamilyStats,
    lower_bound: separation::CongestionLowerBound,
}

#[derive(Serialize)]
struct CrossingSummary {
    schema: &'static str,
    reports: Vec<separation::CrossingReport>,
    all_at_least_half: bool,
}

fn execute(cli: &Cli) -> Result<Output, CliError> {
    let seed = cli.seed;
    match &cli.command {
        Command::Ball(a) => {
            let (g, _) = a.group.kind().ball(a.radius, cli.max_vertices)?;
            Ok(graph_output("ball", &g, a.format))
        }
        Command::Tn(a) => {
            let g = separation::tn_graph(TnDescriptor::new(a.n, a.m)?, cli.max_vertices)?;
            Ok(graph_output("tn", &g, a.format))
        }
        Command::Cut(a) => {
            let g = match (&a.input, a.tn) {
                (Some(path), None) => read_graph(path)?,
                (None, Some(n)) => separation::tn_graph(TnDescriptor::new(n, a.m)?, cli.max_vertices)?,
                _ => return Err(CliError::Usage("give exactly one of --input or --tn".into())),
            };
            let cert = if a.heuristic { separation::cut_heuristic_upper(&g, a.effort, seed) } else { separation::cut_exact(&g)? };
            check_certificate(&g, &cert)?;
            Ok(Output::one("cut.json", report::to_json(&cert)))
        }
        Command::Separator(a) => {
            let (f, positions) = match &a.input {
                Some(path) => {
                    let f = read_graph(path)?;
                    let positions = separation::positions_from_labels(&f, a.modulus)?;
                    (f, positions)
                }
                None => {
                    let ball = cayley::lamplighter_ball_direct(a.modulus, a.radius, cli.max_vertices)?;
                    let subset = match a.size {
                        Some(size) => cayley::sample_connected_subgraph(&ball.graph, size, &mut seed::stream(seed, "separator"))?,
                        None => VertexSubset::all(ball.len()),
                    };
                    let f = cayley::induced_subgraph(&ball.graph, &subset)?;
                    let positions = subset.indices().iter().map(|&k| ball.elements[k].pos()).collect();
                    (f, positions)
                }
            };
            let cert = separation::separator_from_positions(&f, &positions, a.modulus)?;
            check_certificate(&f, &cert)?;
            if !cert.passes() {
                return Err(CliError::Invalid(format!("separator bounds not met: {:?}", cert.bounds)));
            }
            Ok(Output::one("separator.json", report::to_json(&cert)))
        }
        Command::Paths(a) => {
            let desc = TnDescriptor::new(a.n, a.m)?;
            if desc.vertex_count() > cli.max_vertices {
                return Err(GraphError::CapExceeded { cap: cli.max_vertices }.into());
            }
            let stats = separation::congestion_stats(desc, cli.max_pairs as u128)?;
            let lower_bound = separation::congestion_lower_bound(desc, &stats);
            let ok = stats.within_bound && stats.max_path_vertices <= stats.path_vertex_limit;
            let body = report::to_json(&PathsReport { stats: stats.clone(), lower_bound });
            Ok(Output::one("paths.json", body).failing_if(!ok, || {
                format!("congestion {} against bound {}", stats.max_congestion, stats.congestion_bound)
            }))
        }
        Command::Crossing(a) => {
            let desc = TnDescriptor::new(a.tn.n, a.tn.m)?;
            if (desc.vertex_count() as u64).pow(2) > cli.max_pairs {
                return Err(SeparationError::CapExceeded { needed: (desc.vertex_count() as u128).pow(2), cap: cli.max_pairs as u128 }.into());
            }
            let cutsets = match &a.cutset {
                Some(indices) => vec![VertexSubset::new(indices.iter().copied(), desc.vertex_count())?],
                None => separation::minimum_cutsets(&separation::tn_graph(desc, cli.max_vertices)?)?,
            };
            let reports = cutsets
                .iter()
                .map(|w| separation::verify_crossing(desc, w))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| match e {
                    SeparationError::InvalidSeparator { .. } => CliError::Usage(e.to_string()),
                    other => other.into(),
                })?;
            let all = reports.iter().all(|r| r.at_least_half);
            let body = report::to_json(&CrossingSummary { schema: separation::CROSSING_SCHEMA, reports, all_at_least_half: all });
            Ok(Output::one("crossing.json", body).failing_if(!all, || "a cutset is crossed by fewer than half of the paths".into()))
        }
        Command::VerifyMap(a) => {
            let report = match a.map {
                MapName::Affine => {
                    let params = AffineEmbeddingParams::parse(parse_valuation(&a.valuation)?, &a.a, &a.b)?;
                    regmaps::verify_regular_map(&regmaps::AffineMap(params), a.radius)?
                }
                MapName::Mpq => regmaps::verify_regular_map(&regmaps::MpqMap(MpqParams::new(a.p, a.q)?), a.radius)?,
                MapName::Wreath => regmaps::verify_regular_map(&regmaps::WreathInclusion, a.radius)?,
                MapName::Symshift => {
                    let map = regmaps::SymShiftMap::new(FinitePerm::parse(&a.sigma)?, a.step)?;
                    regmaps::verify_regular_map(&map, a.radius)?
                }
            };
            let ok = report.lipschitz && report.injective;
            Ok(Output::one("verify-map.json", report::to_json(&report)).failing_if(!ok, || "the map is not injective and 1-Lipschitz on the ball".into()))
        }
        Command::Gap(a) => {
            if a.lo > a.hi || a.hi - a.lo >= 12 {
                return Err(CliError::Usage("the window must hold between 1 and 12 positions".into()));
            }
            let params = AffineEmbeddingParams::parse(parse_valuation(&a.valuation)?, &a.a, &a.b)?;
            let survey = regmaps::gap_survey(&params, a.lo, a.hi)?;
            let ok = survey.all_nonzero;
            Ok(Output::one("gap.json", report::to_json(&survey)).failing_if(!ok, || "two configurations share an image".into()))
        }
        Command::Profile(a) => {
            let config = separation::ProfileConfig {
                radius: a.radius,
                sizes: a.sizes.clone(),
                samples: a.samples,
                seed,
                exact_up_to: a.exact_up_to,
                max_vertices: cli.max_vertices,
            };
            let rows = separation::sep_profile_table(&a.group.kind(), &config)?;
            Ok(Output::one("profile.csv", separation::profile_csv(&rows)))
        }
        Command::Replay(_) => unreachable!("handled by run"),
    }
}

fn check_certificate(g: &Graph, cert: &separation::CutCertificate) -> Result<(), CliError> {
    if !cert.valid || !cert.revalidate(g) {
        return Err(CliError::Invalid(format!(
            "cutset of size {} leaves a component of {} out of {}",
            cert.cut_size, cert.largest_component, cert.total
        )));
    }
    Ok(())
}

fn emit(cli: &Cli, args: &[String], out: Output) -> Result<(), CliError> {
    match &cli.out {
        Some(dir) => {
            fs::create_dir_all(dir)?;
            let mut manifest = RunManifest::new(cli.command.name(), report::strip_out_flag(args), cli.command.parameters(), cli.seed);
            manifest.parameters.insert("max_vertices".into(), cli.max_vertices.to_string());
            manifest.parameters.insert("max_pairs".into(), cli.max_pairs.to_string());
            for (name, body) in &out.files {
                fs::write(dir.join(name), body)?;
                manifest.outputs.push(name.clone());
            }
            fs::write(dir.join(report::MANIFEST_FILE), report::to_json(&manifest))?;
        }
        None => {
            for (_, body) in &out.files {
                print!("{body}");
            }
        }
    }
    match out.failure {
        Some(message) => Err(CliError::Invalid(message)),
        None => Ok(()),
    }
}

fn run_parsed(cli: Cli, args: &[String]) -> Result<(), CliError> {
    if let Command::Replay(r) = &cli.command {
        let manifest = RunManifest::read(&r.manifest)?;
        let mut replayed = vec!["lampsep".to_string()];
        replayed.extend(manifest.args.iter().cloned());
        if let Some(dir) = &cli.out {
            replayed.push("--out".into());
            replayed.push(dir.display().to_string());
        }
        let inner = Cli::try_parse_from(&replayed).map_err(|e| CliError::Usage(e.to_string()))?;
        if matches!(inner.command, Command::Replay(_)) {
            return Err(CliError::Usage("a manifest cannot record a replay".into()));
        }
        return run_parsed(inner, &replayed[1..]);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let output = pool.install(|| execute(&cli))?;
    emit(&cli, args, output)
}

/// Runs the command line `argv` (program name first) and returns the exit
/// code.
pub fn run(argv: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run_parsed(cli, &argv[1..]) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}
