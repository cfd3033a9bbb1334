//! The `nhood` command line.

use std::ffi::OsString;
use std::fmt::Write;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use nhood_core::edgelist::write_edge_list;
use nhood_core::eval::{compression_ratio, max_pair_stretch, sp_histogram, stretch_check};
use nhood_core::gen::FamilySpec;
use nhood_core::lp::build_lp;
use nhood_core::{verify, Adjacency, ProportionFunction, SaParams};

use crate::bench::{bench_orderings, BenchConfig};
use crate::error::{CliError, Result};
use crate::io::{edge_list_text, load_compressed, load_input, write_output};
use crate::parallel::resolve_jobs;
use crate::report::{histogram_table, CompressReport};
use crate::speedup::apsp_speedup;
use crate::strategy::{parse_strategies, run_verified, Strategy};
use crate::sweep::{spanner_series, sweep, SweepConfig};

/// Neighborhood-preserving (p,t)-compression of undirected graphs.
///
/// Graph arguments are edge-list files (two vertex labels per line, `#`
/// comments) or `builtin:NAME` for one of diamond, triangle, path3, star4,
/// zachary.
#[derive(Debug, Parser)]
#[command(name = "nhood", version)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a family of G(n,m) graphs, one edge list per instance.
    Gen(GenArgs),
    /// Compress a graph and write the kept edges.
    Compress(CompressArgs),
    /// Check a compressed edge list against the original graph.
    Verify(VerifyArgs),
    /// Compare a graph with its compression.
    Eval {
        #[command(subcommand)]
        metric: EvalCommand,
    },
    /// Compare strategies over a G(n,m) family.
    Bench(BenchArgs),
    /// Compression ratio of one graph across several proportion functions.
    Sweep(SweepArgs),
    /// Write the relaxed LP model in CPLEX LP format.
    LpDump(LpDumpArgs),
}

#[derive(Debug, Args)]
struct SaArgs {
    /// Simulated annealing iterations.
    #[arg(long = "sa-iters", default_value_t = 1000)]
    iterations: usize,
    /// Initial temperature.
    #[arg(long = "sa-t0", default_value_t = 10.0)]
    t0: f64,
    /// Cooling factor per iteration, in (0, 1).
    #[arg(long = "sa-alpha", default_value_t = 0.99)]
    alpha: f64,
}

impl SaArgs {
    fn params(&self) -> Result<SaParams> {
        let params = SaParams {
            iterations: self.iterations,
            initial_temperature: self.t0,
            cooling: self.alpha,
            seed: 0,
        };
        params.validate()?;
        Ok(params)
    }
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long, default_value_t = 1)]
    count: usize,
    /// Seed of the first instance; instance i uses seed + i.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output directory, created if missing.
    outdir: PathBuf,
}

#[derive(Debug, Args)]
struct CompressArgs {
    /// Edge-list file or builtin:NAME.
    input: String,
    /// Proportions p(1),...,p(t) as decimals or fractions; t is the list length.
    #[arg(long)]
    p: String,
    /// Edge order: random (basic), lp, ec or sa.
    #[arg(long, default_value = "random")]
    ordering: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    sa: SaArgs,
    /// Compressed edge list; stdout when omitted.
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// JSON report file.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Leave wall times out of the report.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    original: String,
    compressed: String,
    #[arg(long)]
    p: String,
}

#[derive(Debug, Subcommand)]
enum EvalCommand {
    /// Shortest-path length histograms of both graphs.
    SpHist(PairArgs),
    /// Largest distance in the compression between endpoints of removed edges.
    Stretch {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        t: u32,
    },
    /// Deleted-edge fraction.
    Ratio(PairArgs),
    /// All-pairs BFS time on both graphs.
    Speedup {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
    },
}

#[derive(Debug, Args)]
struct PairArgs {
    original: String,
    compressed: String,
    /// JSON report file.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BenchArgs {
    /// Family as n,m,count.
    #[arg(long)]
    family: String,
    #[arg(long)]
    p: String,
    #[arg(long, default_value = "basic,lp,ec,sa")]
    strategies: String,
    /// Seed of the first instance.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads; defaults to NHOOD_JOBS, then the core count.
    #[arg(long)]
    jobs: Option<usize>,
    #[command(flatten)]
    sa: SaArgs,
    /// JSON report file.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long)]
    no_timing: bool,
}

#[derive(Debug, Args)]
struct SweepArgs {
    input: String,
    /// A proportion list; repeat the flag for several points.
    #[arg(long)]
    p: Vec<String>,
    /// Also run the t-spanner proportions for t = 1..=T.
    #[arg(long)]
    spanner: Option<usize>,
    #[arg(long, default_value = "random")]
    ordering: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    sa: SaArgs,
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long)]
    no_timing: bool,
}

#[derive(Debug, Args)]
struct LpDumpArgs {
    input: String,
    #[arg(long)]
    p: String,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

fn parse_pf(list: &str) -> Result<ProportionFunction> {
    Ok(ProportionFunction::parse(list)?)
}

fn stdout(text: &str) -> Result<()> {
    write_output(None, text)
}

fn write_report(path: Option<&Path>, json: &str) -> Result<()> {
    match path {
        Some(p) => write_output(Some(p), json),
        None => Ok(()),
    }
}

fn cmd_gen(args: &GenArgs) -> Result<()> {
    let family = FamilySpec::new(args.count, args.n, args.m, args.seed)?;
    fs::create_dir_all(&args.outdir).map_err(|e| CliError::io(&args.outdir, e))?;
    for i in 0..family.count {
        let g = family.instance(i);
        let mut text = format!(
            "# G(n,m) n={} m={} seed={}\n",
            family.n,
            family.m,
            family.seed(i)
        );
        text.push_str(&write_edge_list(g.edges(), None));
        let path = args.outdir.join(format!("gnm_n{}_m{}_{:03}.txt", family.n, family.m, i));
        fs::write(&path, text).map_err(|e| CliError::io(&path, e))?;
    }
    eprintln!("wrote {} graph(s) to {}", family.count, args.outdir.display());
    Ok(())
}

fn cmd_compress(args: &CompressArgs) -> Result<()> {
    let pf = parse_pf(&args.p)?;
    let strategy: Strategy = args.ordering.parse()?;
    let sa = args.sa.params()?;
    let input = load_input(&args.input)?;
    let result = run_verified(input.graph(), &pf, strategy, args.seed, &sa)?;
    write_output(args.output.as_deref(), &edge_list_text(&input, &result.kept))?;
    let report = CompressReport::new(&input.name, &result, strategy, args.seed, !args.no_timing);
    write_report(args.report.as_deref(), &report.to_json())?;
    eprintln!("{}", report.summary_line());
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Result<()> {
    let pf = parse_pf(&args.p)?;
    let original = load_input(&args.original)?;
    let gc = load_compressed(&original, &args.compressed)?;
    let report = verify(original.graph(), &gc, &pf).map_err(|e| CliError::Verify(e.to_string()))?;
    if report.ok() {
        return stdout(&format!("ok: {} is a ({}) compression of {}\n", args.compressed, pf, args.original));
    }
    let mut listing = String::new();
    for v in &report.violations {
        let _ = writeln!(
            listing,
            "vertex {} level {}: reaches {} of {} neighbors, needs {}",
            original.label(v.vertex),
            v.level,
            v.achieved,
            original.graph().degree(v.vertex),
            v.required
        );
    }
    stdout(&listing)?;
    Err(CliError::Verify(format!(
        "{} is not a ({}) compression: {} violation(s)",
        args.compressed,
        pf,
        report.violations.len()
    )))
}

fn load_pair(pair: &PairArgs) -> Result<(crate::io::Input, nhood_core::Graph)> {
    let original = load_input(&pair.original)?;
    let gc = load_compressed(&original, &pair.compressed)?;
    Ok((original, gc))
}

fn cmd_eval(metric: &EvalCommand) -> Result<()> {
    match metric {
        EvalCommand::SpHist(pair) => {
            let (g, gc) = load_pair(pair)?;
            let (a, b) = (sp_histogram(g.graph()), sp_histogram(&gc));
            stdout(&histogram_table(&a, &b))?;
            let json = serde_json::json!({
                "original": { "counts": a.counts, "disconnected": a.disconnected },
                "compressed": { "counts": b.counts, "disconnected": b.disconnected },
            });
            write_report(pair.report.as_deref(), &format!("{json:#}\n"))
        }
        EvalCommand::Stretch { pair, t } => {
            let (g, gc) = load_pair(pair)?;
            let report = stretch_check(g.graph(), &gc, *t).map_err(|e| CliError::Verify(e.to_string()))?;
            let pairwise = if g.graph().n() <= 2000 {
                max_pair_stretch(g.graph(), &gc).map_err(|e| CliError::Verify(e.to_string()))?
            } else {
                None
            };
            let mut text = match report.max_stretch {
                Some(s) => format!(
                    "removed-edge stretch: max {s} (limit {t}): {}\n",
                    if report.ok { "ok" } else { "exceeded" }
                ),
                None => "removed-edge stretch: some removed edge has disconnected endpoints\n".to_string(),
            };
            if let Some(r) = pairwise {
                let _ = writeln!(text, "all-pairs stretch: max {r}");
            }
            stdout(&text)?;
            let json = serde_json::json!({
                "t": t,
                "ok": report.ok,
                "max_stretch": report.max_stretch,
                "max_pair_stretch": pairwise.map(|r| r.to_string()),
            });
            write_report(pair.report.as_deref(), &format!("{json:#}\n"))
        }
        EvalCommand::Ratio(pair) => {
            let (g, gc) = load_pair(pair)?;
            let r = compression_ratio(g.graph(), &gc)?;
            let value = *r.numer() as f64 / *r.denom() as f64;
            stdout(&format!("{value:.6} ({r})\n"))?;
            let json = serde_json::json!({ "ratio": value, "ratio_exact": r.to_string() });
            write_report(pair.report.as_deref(), &format!("{json:#}\n"))
        }
        EvalCommand::Speedup { pair, repeats } => {
            let (g, gc) = load_pair(pair)?;
            let (report, _, _) = apsp_speedup(g.graph(), &gc, *repeats);
            stdout(&format!(
                "all-pairs BFS: original {:.6} s, compressed {:.6} s, speed-up {:.3}\n",
                report.seconds_original, report.seconds_compressed, report.speedup
            ))?;
            let mut json = serde_json::to_string_pretty(&report).expect("report serializes");
            json.push('\n');
            write_report(pair.report.as_deref(), &json)
        }
    }
}

fn parse_family(text: &str, seed: u64) -> Result<FamilySpec> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let nums: Option<Vec<usize>> = parts.iter().map(|p| p.parse().ok()).collect();
    match nums.as_deref() {
        Some(&[n, m, count]) => Ok(FamilySpec::new(count, n, m, seed)?),
        _ => Err(CliError::Config(format!("--family expects n,m,count, got {text:?}"))),
    }
}

fn cmd_bench(args: &BenchArgs) -> Result<()> {
    let config = BenchConfig {
        family: parse_family(&args.family, args.seed)?,
        pf: parse_pf(&args.p)?,
        strategies: parse_strategies(&args.strategies)?,
        sa: args.sa.params()?,
        jobs: resolve_jobs(args.jobs)?,
        timing: !args.no_timing,
    };
    let report = bench_orderings(&config)?;
    stdout(&report.to_table())?;
    write_report(args.report.as_deref(), &report.to_json())
}

fn cmd_sweep(args: &SweepArgs) -> Result<()> {
    let mut pfs = args.p.iter().map(|p| parse_pf(p)).collect::<Result<Vec<_>>>()?;
    pfs.extend(spanner_series(args.spanner.unwrap_or(0)));
    if pfs.is_empty() {
        return Err(CliError::Config("give at least one --p or --spanner".into()));
    }
    let input = load_input(&args.input)?;
    let config = SweepConfig {
        input: &input.name,
        strategy: args.ordering.parse()?,
        seed: args.seed,
        sa: args.sa.params()?,
        timing: !args.no_timing,
    };
    let report = sweep(input.graph(), &pfs, &config)?;
    stdout(&report.to_table())?;
    write_report(args.report.as_deref(), &report.to_json())
}

fn cmd_lp_dump(args: &LpDumpArgs) -> Result<()> {
    let pf = parse_pf(&args.p)?;
    let input = load_input(&args.input)?;
    let model = build_lp(input.graph(), &pf)?;
    write_output(args.output.as_deref(), &model.to_lp_text())
}

pub fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Compress(a) => cmd_compress(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Eval { metric } => cmd_eval(metric),
        Command::Bench(a) => cmd_bench(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::LpDump(a) => cmd_lp_dump(a),
    }
}

/// Parses `args` and runs the command. Usage errors exit with 1.
pub fn main_with<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
