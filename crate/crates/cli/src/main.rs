//! `kvcc`: enumerate k-vertex connected components, check them against the
//! brute-force oracle, report cohesiveness metrics, and generate planted
//! test graphs.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 I/O error.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kvcc::generate::{generate_planted, gnp, PlantedConfig, RNG_ALGORITHM};
use kvcc::graph::induced_subgraph;
use kvcc::metrics::{
    averages, component_stats, csv_row, format_decimal, ComponentStats, CSV_HEADER,
};
use kvcc::oracle::kvcc_bruteforce;
use kvcc::{
    kvcc_enum_with, load_edge_list, parse_components, stats_fields, write_components,
    write_edge_list, EnumerateOptions, Error, Graph, Variant, VertexSet,
};

const MISMATCH: u8 = 1;
const USAGE: u8 = 2;
const IO: u8 = 3;

#[derive(Parser)]
#[command(
    name = "kvcc",
    version,
    about = "k-vertex connected component enumeration"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the k-VCCs of an edge list.
    Enumerate(EnumerateArgs),
    /// Compare the enumerator with the brute-force oracle on small graphs.
    Verify(VerifyArgs),
    /// Per-component cohesiveness metrics as CSV.
    Metrics(MetricsArgs),
    /// Write a planted clique-chain graph as an edge list.
    Generate(GenerateArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Edge list, one `u v` pair per line.
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = Variant::Star)]
    variant: Variant,
    /// Threads draining the work queue.
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    run: RunArgs,
    /// Component list destination; stdout when absent.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Write run statistics and wall time to stderr.
    #[arg(long)]
    stats: bool,
    #[arg(long, value_enum, default_value_t = StatsFormat::Kv, requires = "stats")]
    stats_format: StatsFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum StatsFormat {
    /// `# key=value` lines.
    Kv,
    /// A header row of keys and one row of values.
    Csv,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    k: usize,
    /// Vertices per random graph.
    #[arg(long, conflicts_with = "input", required_unless_present = "input")]
    n: Option<usize>,
    /// Edge probability of the random graphs.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Random graphs to check.
    #[arg(long, default_value_t = 50)]
    count: usize,
    /// Graph `i` is drawn with seed `seed + i`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Check one edge list instead of a random corpus.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Component list to check in place of a fresh enumeration.
    #[arg(long, requires = "input")]
    result: Option<PathBuf>,
    #[arg(long, default_value_t = Variant::Star)]
    variant: Variant,
}

#[derive(Args)]
struct MetricsArgs {
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long)]
    cliques: usize,
    #[arg(long)]
    size: usize,
    /// Vertices shared by consecutive cliques.
    #[arg(long)]
    shared: usize,
    /// Connectivity the planted cliques must survive; defaults to `shared + 1`.
    #[arg(long)]
    k: Option<usize>,
    /// Random edges between different cliques.
    #[arg(long, default_value_t = 0)]
    extra: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Destination; stdout when absent.
    #[arg(long)]
    output: Option<PathBuf>,
}

/// A failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: USAGE,
            message: message.into(),
        }
    }

    fn io(path: &Path, err: io::Error) -> Self {
        Failure {
            code: IO,
            message: format!("{}: {err}", path.display()),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::Io(_) => IO,
            _ => USAGE,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Enumerate(args) => enumerate(args),
        Command::Verify(args) => verify(args),
        Command::Metrics(args) => metrics(args),
        Command::Generate(args) => generate(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("kvcc: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let file = File::open(path).map_err(|e| Failure::io(path, e))?;
    load_edge_list(BufReader::new(file)).map_err(|e| match e {
        Error::Io(e) => Failure::io(path, e),
        other => Failure::usage(format!("{}: {other}", path.display())),
    })
}

/// Runs `write` against `path`, or stdout when absent.
fn with_output(
    path: Option<&Path>,
    write: impl FnOnce(&mut dyn Write) -> io::Result<()>,
) -> Outcome {
    match path {
        Some(p) => {
            let file = File::create(p).map_err(|e| Failure::io(p, e))?;
            let mut out = BufWriter::new(file);
            write(&mut out)
                .and_then(|()| out.flush())
                .map_err(|e| Failure::io(p, e))
        }
        None => {
            let mut out = io::stdout().lock();
            match write(&mut out).and_then(|()| out.flush()) {
                Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
                    Err(Failure::io(Path::new("<stdout>"), e))
                }
                _ => Ok(()),
            }
        }
    }
}

fn options(run: &RunArgs) -> EnumerateOptions {
    EnumerateOptions {
        variant: run.variant,
        workers: run.workers,
        ..Default::default()
    }
}

fn enumerate(args: EnumerateArgs) -> Outcome {
    let g = read_graph(&args.run.input)?;
    let start = Instant::now();
    let result = kvcc_enum_with(&g, args.run.k, &options(&args.run))?;
    let wall = start.elapsed();
    with_output(args.output.as_deref(), |out| {
        write_components(&result.components, out)
    })?;
    if args.stats {
        let mut fields = stats_fields(&result, args.run.k, args.run.variant);
        fields.push(("wall_ms", format!("{:.3}", wall.as_secs_f64() * 1e3)));
        let mut err = io::stderr().lock();
        let written = match args.stats_format {
            StatsFormat::Kv => fields
                .iter()
                .try_for_each(|(key, value)| writeln!(err, "# {key}={value}")),
            StatsFormat::Csv => {
                let keys: Vec<&str> = fields.iter().map(|(key, _)| *key).collect();
                let values: Vec<&str> = fields.iter().map(|(_, value)| value.as_str()).collect();
                writeln!(err, "{}\n{}", keys.join(","), values.join(","))
            }
        };
        written.map_err(|e| Failure::io(Path::new("<stderr>"), e))?;
    }
    Ok(())
}

/// Oracle components of `g` as canonical label lists.
fn oracle_components(g: &Graph, k: usize) -> Result<Vec<Vec<u64>>, Failure> {
    let mut sets: Vec<Vec<u64>> = kvcc_bruteforce(g, k)?
        .iter()
        .map(|vs| g.labels_of(vs.as_slice()))
        .collect();
    kvcc::enumerate::canonicalize(&mut sets);
    Ok(sets)
}

fn report_mismatch(what: &str, g: &Graph, expected: &[Vec<u64>], found: &[Vec<u64>]) {
    let mut text = Vec::new();
    let _ = writeln!(text, "mismatch on {what}");
    let _ = writeln!(text, "edge list:");
    let _ = write_edge_list(g, &mut text);
    let _ = writeln!(text, "oracle components:");
    let _ = write_components(expected, &mut text);
    let _ = writeln!(text, "checked components:");
    let _ = write_components(found, &mut text);
    let _ = io::stdout().write_all(&text);
}

fn verify(args: VerifyArgs) -> Outcome {
    if args.k < 1 {
        return Err(Failure::usage("k must be at least 1"));
    }
    let opts = EnumerateOptions {
        variant: args.variant,
        ..Default::default()
    };
    if let Some(input) = &args.input {
        let g = read_graph(input)?;
        let expected = oracle_components(&g, args.k)?;
        let found = match &args.result {
            Some(path) => {
                let file = File::open(path).map_err(|e| Failure::io(path, e))?;
                parse_components(BufReader::new(file)).map_err(|e| match e {
                    Error::Io(e) => Failure::io(path, e),
                    other => Failure::usage(format!("{}: {other}", path.display())),
                })?
            }
            None => kvcc_enum_with(&g, args.k, &opts)?.components,
        };
        if expected != found {
            report_mismatch(&input.display().to_string(), &g, &expected, &found);
            return Err(Failure {
                code: MISMATCH,
                message: "components differ from the oracle".into(),
            });
        }
        println!("ok: {} components match the oracle", expected.len());
        return Ok(());
    }
    let n = args.n.expect("clap requires --n without --input");
    if !(0.0..=1.0).contains(&args.p) {
        return Err(Failure::usage("p must lie in [0, 1]"));
    }
    for i in 0..args.count {
        let seed = args.seed.wrapping_add(i as u64);
        let g = gnp(n, args.p, seed);
        let expected = oracle_components(&g, args.k)?;
        let found = kvcc_enum_with(&g, args.k, &opts)?.components;
        if expected != found {
            let what = format!(
                "G({n}, {}) seed {seed} ({RNG_ALGORITHM}), k = {}",
                args.p, args.k
            );
            report_mismatch(&what, &g, &expected, &found);
            return Err(Failure {
                code: MISMATCH,
                message: "components differ from the oracle".into(),
            });
        }
    }
    println!("ok: {} graphs match the oracle", args.count);
    Ok(())
}

fn metrics(args: MetricsArgs) -> Outcome {
    let g = read_graph(&args.run.input)?;
    let k = args.run.k;
    let result = kvcc_enum_with(&g, k, &options(&args.run))?;
    let stats: Vec<ComponentStats> = result
        .components
        .iter()
        .map(|labels| {
            let members = labels.iter().filter_map(|&l| g.index_of(l)).collect();
            induced_subgraph(&g, &VertexSet::new(members)).map(|sub| component_stats(&sub, k))
        })
        .collect::<kvcc::Result<_>>()?;
    with_output(None, |out| {
        writeln!(out, "{CSV_HEADER}")?;
        for (id, s) in stats.iter().enumerate() {
            writeln!(out, "{}", csv_row(id, s))?;
        }
        Ok(())
    })?;
    if let Some((diameter, density, clustering)) = averages(&stats) {
        eprintln!(
            "# mean_diameter={} mean_edge_density={} mean_clustering={}",
            format_decimal(&diameter),
            format_decimal(&density),
            format_decimal(&clustering)
        );
    }
    Ok(())
}

fn generate(args: GenerateArgs) -> Outcome {
    let cfg = PlantedConfig {
        cliques: args.cliques,
        clique_size: args.size,
        shared: args.shared,
        k: args.k.unwrap_or(args.shared + 1),
        extra_edges: args.extra,
        seed: args.seed,
    };
    let g = generate_planted(&cfg)?;
    with_output(args.output.as_deref(), |out| write_edge_list(&g, out))
}
