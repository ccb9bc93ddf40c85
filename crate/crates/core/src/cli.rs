//! Command-line driver: `generate`, `estimate`, `beta` and `graph-dump`.
//!
//! Exit codes: 0 success, 1 usage, 2 I/O, 3 disconnected graph, 4 ill-posed
//! slope, 5 internal.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::datasets::{generate, load_csv, save_csv, write_csv, ManifoldKind, PointCloud, SyntheticSpec};
use crate::error::{Error, Result};
use crate::estimator::{
    linear_sizes, log_sizes, run_pipeline, BetaMode, BetaSource, DataSource, DisconnectPolicy, FitWindow,
    GeodesicMode, LogBase, PipelineConfig, ResamplingPlan, Rounding, DEFAULT_BETA_N, DEFAULT_BETA_SEED,
    DEFAULT_BETA_TRIALS,
};
use crate::geodesics::all_pairs_geodesics;
use crate::mst::{estimate_beta, BetaTable};
use crate::neighborhood::{build_graph, NeighborRule};

#[derive(Debug, Parser)]
#[command(name = "gmst", version, about = "Intrinsic dimension and entropy from geodesic minimal spanning trees")]
pub struct Cli {
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample a synthetic manifold and write it as CSV.
    Generate(GenerateArgs),
    /// Estimate intrinsic dimension and entropy of a point cloud.
    Estimate(EstimateArgs),
    /// Calibrate the MST constant beta_m by Monte Carlo on the unit cube.
    Beta(BetaArgs),
    /// Write the neighborhood graph (and optionally its geodesic matrix) as CSV.
    GraphDump(GraphDumpArgs),
}

#[derive(Debug, Args)]
pub struct GeneratorArgs {
    /// Intrinsic dimension of the generated manifold.
    #[arg(long, default_value_t = 2)]
    pub m: usize,
    /// Ambient dimension (default m + 1).
    #[arg(long)]
    pub d: Option<usize>,
    /// Number of points.
    #[arg(long, default_value_t = 1000)]
    pub n: usize,
    /// Global scale applied to the embedding.
    #[arg(long, default_value_t = 1.0)]
    pub scale: f64,
    /// Generator seed (defaults to --seed).
    #[arg(long)]
    pub data_seed: Option<u64>,
}

impl GeneratorArgs {
    fn spec(&self, kind: ManifoldKind, seed: u64) -> SyntheticSpec {
        SyntheticSpec::new(kind, self.m, self.d.unwrap_or(self.m + 1), self.n, self.data_seed.unwrap_or(seed))
            .with_scale(self.scale)
    }
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["input", "generate"])))]
pub struct SourceArgs {
    /// CSV file with one point per row.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Field delimiter of --input.
    #[arg(long, default_value = ",")]
    pub delimiter: char,
    /// Use a synthetic manifold instead of a file.
    #[arg(long, value_name = "KIND", value_parser = parse_kind)]
    pub generate: Option<ManifoldKind>,
    #[command(flatten)]
    pub generator: GeneratorArgs,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("rule").required(true).args(["k", "epsilon"])))]
pub struct RuleArgs {
    /// k-nearest-neighbor rule.
    #[arg(long)]
    pub k: Option<usize>,
    /// Fixed-radius rule.
    #[arg(long)]
    pub epsilon: Option<f64>,
}

impl RuleArgs {
    fn rule(&self) -> NeighborRule {
        match (self.k, self.epsilon) {
            (Some(k), _) => NeighborRule::Knn(k),
            (None, Some(r)) => NeighborRule::Epsilon(r),
            (None, None) => unreachable!("clap enforces the rule group"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Spacing {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CliBetaMode {
    Approx,
    Montecarlo,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CliDisconnect {
    Fail,
    Largest,
}

#[derive(Debug, Args)]
pub struct EstimateArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[command(flatten)]
    pub rule: RuleArgs,
    /// Apply conformal (C-ISOMAP) edge rescaling.
    #[arg(long)]
    pub conformal: bool,
    /// Edge exponent.
    #[arg(long, default_value_t = 1.0)]
    pub gamma: f64,
    /// Subset sizes: "p1,p2,..." or "min:max:count".
    #[arg(long, conflicts_with = "size_range")]
    pub sizes: Option<String>,
    /// Subset sizes as "min:max:count".
    #[arg(long)]
    pub size_range: Option<String>,
    /// Spacing of range-style sizes.
    #[arg(long, value_enum, default_value_t = Spacing::Linear)]
    pub size_spacing: Spacing,
    /// Random subsets per size.
    #[arg(long, default_value_t = 25)]
    pub trials: usize,
    /// Fit on the largest fraction of the sizes.
    #[arg(long, default_value_t = 0.5)]
    pub fit_top_fraction: f64,
    /// Fit only on sizes strictly above this value (overrides --fit-top-fraction).
    #[arg(long)]
    pub fit_above: Option<usize>,
    #[arg(long, value_enum, default_value_t = CliBetaMode::Montecarlo)]
    pub beta_mode: CliBetaMode,
    /// Beta table CSV for --beta-mode table.
    #[arg(long)]
    pub beta_table: Option<PathBuf>,
    /// Points per Monte Carlo beta trial.
    #[arg(long, default_value_t = DEFAULT_BETA_N)]
    pub beta_n: usize,
    #[arg(long, default_value_t = DEFAULT_BETA_TRIALS)]
    pub beta_trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Entropy logarithm base: e or 2.
    #[arg(long, default_value = "e", value_parser = parse_log_base)]
    pub log_base: LogBase,
    #[arg(long, value_enum, default_value_t = CliDisconnect::Fail)]
    pub disconnect: CliDisconnect,
    /// Round the dimension estimate down instead of to nearest.
    #[arg(long)]
    pub floor: bool,
    /// Rebuild the neighborhood graph for every resampled subset.
    #[arg(long)]
    pub per_subset_graph: bool,
    /// Report destination (default: standard output).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Write the report as JSON instead of key-value text.
    #[arg(long)]
    pub json: bool,
    /// Write per-trial lengths as CSV "p,trial,length".
    #[arg(long)]
    pub dump_curve: Option<PathBuf>,
    /// Write per-size summary as CSV "p,mean,std".
    #[arg(long)]
    pub dump_summary: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_parser = parse_kind)]
    pub kind: ManifoldKind,
    #[command(flatten)]
    pub generator: GeneratorArgs,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value = ",")]
    pub delimiter: char,
    /// Destination CSV (default: standard output).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BetaArgs {
    /// Intrinsic dimension(s), comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub m: Vec<usize>,
    #[arg(long, default_value_t = 1.0)]
    pub gamma: f64,
    #[arg(long, default_value_t = DEFAULT_BETA_N)]
    pub n: usize,
    #[arg(long, default_value_t = DEFAULT_BETA_TRIALS)]
    pub trials: usize,
    #[arg(long, default_value_t = DEFAULT_BETA_SEED)]
    pub seed: u64,
    /// Destination CSV (default: standard output).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Merge into an existing table at --out instead of overwriting it.
    #[arg(long, requires = "out")]
    pub append: bool,
}

#[derive(Debug, Args)]
pub struct GraphDumpArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[command(flatten)]
    pub rule: RuleArgs,
    #[arg(long)]
    pub conformal: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Edge list CSV "i,j,weight" (default: standard output).
    #[arg(long)]
    pub edges: Option<PathBuf>,
    /// Geodesic matrix CSV, row-major with "inf" for unreachable pairs.
    #[arg(long)]
    pub geodesics: Option<PathBuf>,
}

fn parse_kind(s: &str) -> std::result::Result<ManifoldKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_log_base(s: &str) -> std::result::Result<LogBase, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn delimiter_byte(c: char) -> Result<u8> {
    u8::try_from(c)
        .ok()
        .filter(u8::is_ascii)
        .ok_or_else(|| Error::Config(format!("delimiter must be a single ASCII character, got '{c}'")))
}

/// Parses "p1,p2,..." or "min:max:count".
pub fn parse_sizes(text: &str, spacing: Spacing) -> Result<Vec<usize>> {
    let bad = |what: &str| Error::Config(format!("cannot parse sizes '{text}': {what}"));
    if text.contains(':') {
        let parts: Vec<usize> = text
            .split(':')
            .map(|p| p.trim().parse().map_err(|_| bad("expected integers min:max:count")))
            .collect::<Result<_>>()?;
        let [min, max, count] = parts[..] else {
            return Err(bad("expected min:max:count"));
        };
        match spacing {
            Spacing::Linear => linear_sizes(min, max, count),
            Spacing::Log => log_sizes(min, max, count),
        }
    } else {
        text.split(',')
            .map(|p| p.trim().parse().map_err(|_| bad("expected comma-separated integers")))
            .collect()
    }
}

fn default_sizes(n: usize) -> Result<Vec<usize>> {
    let lo = (n / 10).max(2);
    let lo = if lo >= n { 2 } else { lo };
    linear_sizes(lo, n, 10.min(n - lo + 1))
}

fn load_source(source: &SourceArgs, seed: u64) -> Result<(PointCloud, DataSource)> {
    match (&source.input, source.generate) {
        (Some(path), _) => {
            let cloud = load_csv(path, delimiter_byte(source.delimiter)?)?;
            let input = DataSource::File {
                path: path.display().to_string(),
                delimiter: source.delimiter.to_string(),
            };
            Ok((cloud, input))
        }
        (None, Some(kind)) => {
            let spec = source.generator.spec(kind, seed);
            let sample = generate(&spec)?;
            Ok((sample.cloud, DataSource::Synthetic { spec }))
        }
        (None, None) => Err(Error::Config("one of --input or --generate is required".into())),
    }
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path).map(BufWriter::new).map_err(|e| Error::io(path, e))
}

fn write_output(out: Option<&Path>, write: impl FnOnce(&mut dyn Write) -> std::io::Result<()>) -> Result<()> {
    match out {
        Some(path) => {
            let mut w = create(path)?;
            write(&mut w).and_then(|_| w.flush()).map_err(|e| Error::io(path, e))
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            write(&mut lock).map_err(|e| Error::io("<stdout>", e))
        }
    }
}

/// Translates parsed estimate flags into a pipeline configuration.
pub fn estimate_config(args: &EstimateArgs, n: usize, input: DataSource) -> Result<PipelineConfig> {
    let sizes = match (&args.sizes, &args.size_range) {
        (Some(s), _) | (None, Some(s)) => parse_sizes(s, args.size_spacing)?,
        (None, None) => default_sizes(n)?,
    };
    let window = match args.fit_above {
        Some(above) => FitWindow::Above { above },
        None => FitWindow::TopFraction {
            fraction: args.fit_top_fraction,
        },
    };
    let plan = ResamplingPlan::new(sizes, args.trials, args.seed)
        .with_gamma(args.gamma)
        .with_fit_window(window);
    let beta = match args.beta_mode {
        CliBetaMode::Approx => BetaSource::Approx,
        CliBetaMode::Montecarlo => BetaSource::MonteCarlo {
            n: args.beta_n,
            trials: args.beta_trials,
            seed: DEFAULT_BETA_SEED,
        },
        CliBetaMode::Table => {
            let path = args
                .beta_table
                .as_ref()
                .ok_or_else(|| Error::Config("--beta-mode table requires --beta-table".into()))?;
            BetaSource::Table(BetaTable::load(path)?)
        }
    };
    debug_assert_eq!(
        beta.mode(),
        match args.beta_mode {
            CliBetaMode::Approx => BetaMode::Approx,
            CliBetaMode::Montecarlo => BetaMode::Montecarlo,
            CliBetaMode::Table => BetaMode::Table,
        }
    );
    Ok(PipelineConfig::new(args.rule.rule(), plan)
        .with_conformal(args.conformal)
        .with_beta(beta)
        .with_log_base(args.log_base)
        .with_disconnect(match args.disconnect {
            CliDisconnect::Fail => DisconnectPolicy::Fail,
            CliDisconnect::Largest => DisconnectPolicy::LargestComponent,
        })
        .with_geodesics(if args.per_subset_graph {
            GeodesicMode::PerSubset
        } else {
            GeodesicMode::FullGraph
        })
        .with_rounding(if args.floor { Rounding::Floor } else { Rounding::Nearest })
        .with_input(input))
}

fn cmd_estimate(args: &EstimateArgs) -> Result<()> {
    let (cloud, input) = load_source(&args.source, args.seed)?;
    let config = estimate_config(args, cloud.len(), input)?;
    let report = run_pipeline(&cloud, &config)?;
    if let Some(path) = &args.dump_curve {
        write_output(Some(path), |w| report.curve.write_trials_csv(w))?;
    }
    if let Some(path) = &args.dump_summary {
        write_output(Some(path), |w| report.curve.write_summary_csv(w))?;
    }
    let text = if args.json { report.to_json()? + "\n" } else { report.to_text()? };
    write_output(args.out.as_deref(), |w| w.write_all(text.as_bytes()))
}

fn cmd_generate(args: &GenerateArgs) -> Result<()> {
    let sample = generate(&args.generator.spec(args.kind, args.seed))?;
    let delimiter = delimiter_byte(args.delimiter)?;
    match &args.out {
        Some(path) => save_csv(&sample.cloud, path, delimiter),
        None => write_output(None, |w| write_csv(&sample.cloud, w, delimiter)),
    }
}

fn cmd_beta(args: &BetaArgs) -> Result<()> {
    let mut table = match (&args.out, args.append) {
        (Some(path), true) if path.exists() => BetaTable::load(path)?,
        _ => BetaTable::default(),
    };
    for &m in &args.m {
        table.insert(estimate_beta(m, args.gamma, args.n, args.trials, args.seed)?);
    }
    match &args.out {
        Some(path) => table.save(path),
        None => table.write(std::io::stdout().lock()),
    }
}

fn cmd_graph_dump(args: &GraphDumpArgs) -> Result<()> {
    let (cloud, _) = load_source(&args.source, args.seed)?;
    let mut graph = build_graph(&cloud, args.rule.rule())?;
    if args.conformal {
        graph = graph.rescale_conformal()?;
    }
    write_output(args.edges.as_deref(), |w| graph.write_edges_csv(w))?;
    if let Some(path) = &args.geodesics {
        let matrix = all_pairs_geodesics(&graph);
        write_output(Some(path), |w| matrix.write_csv(w))?;
    }
    Ok(())
}

pub fn execute(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Generate(a) => cmd_generate(a),
        Command::Estimate(a) => cmd_estimate(a),
        Command::Beta(a) => cmd_beta(a),
        Command::GraphDump(a) => cmd_graph_dump(a),
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    if cli.threads > 0 {
        // fails only if a global pool already exists, which is fine
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global();
    }
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("gmst: {e}");
            e.exit_code()
        }
    }
}
