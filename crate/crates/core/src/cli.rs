//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or precondition
//! error, 3 search budget exhausted.

use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use crate::cover::{
    conjecture_search, lift, theorem1_base, verify_theorem1_with, ConjectureFamily,
};
use crate::error::Error;
use crate::graph::{make_family, Export, Family, Format};
use crate::report::{Status, VerificationReport};
use crate::symmetry::{zz_check_with, SearchConfig};
use crate::token::{choose, inclusion_bigraph, johnson, line_graph, subdivision, token_graph};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

pub const OUT_ENV: &str = "TOKEN_COVER_OUT";
const DEFAULT_OUT: &str = "out";

#[derive(Debug, Parser)]
#[command(
    name = "token-cover",
    version,
    about = "Token graphs as combined voltage covers"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Default)]
pub struct GlobalArgs {
    /// Output directory (default: $TOKEN_COVER_OUT, then ./out).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true)]
    pub max_vertices: Option<usize>,
    #[arg(long, global = true)]
    pub group_cap: Option<usize>,
    #[arg(long, global = true)]
    pub budget: Option<usize>,
    /// key=value file with max_vertices, group_cap, budget, out; flags win.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a graph as DOT and JSON.
    Build(BuildArgs),
    /// Check the F_2(K_n) cover construction for one even n or a range.
    #[command(name = "verify-theorem1")]
    VerifyTheorem1 {
        #[arg(long, value_parser = parse_range)]
        n: InclusiveRange,
    },
    /// Compare computed edge-transitivity of F_k(X) with the classification.
    Zz {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, value_parser = parse_range)]
        k: InclusiveRange,
    },
    /// Search for cyclic quotient bases of star token graphs.
    Conjecture {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("source").required(true).multiple(false)))]
pub struct BuildArgs {
    /// Token graph of a family, with --k.
    #[arg(long, group = "source", value_parser = parse_family, requires = "k")]
    pub token: Option<Family>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, group = "source", num_args = 2, value_names = ["N", "K"])]
    pub johnson: Option<Vec<usize>>,
    #[arg(long, group = "source", value_parser = parse_family)]
    pub line: Option<Family>,
    #[arg(long, group = "source", value_parser = parse_family)]
    pub subdivision: Option<Family>,
    #[arg(long, group = "source", value_parser = parse_family)]
    pub family: Option<Family>,
    /// Inclusion bigraph between A- and B-subsets of [N].
    #[arg(long, group = "source", num_args = 3, value_names = ["N", "A", "B"])]
    pub inclusion: Option<Vec<usize>>,
    /// Voltage base graph whose cover is F_2(K_N).
    #[arg(long, group = "source", value_name = "N")]
    pub theorem1_base: Option<usize>,
    /// Cover of the --theorem1-base graph, as a multigraph.
    #[arg(long, group = "source", value_name = "N")]
    pub theorem1_cover: Option<usize>,
    /// Write only this format (dot or json).
    #[arg(long, value_parser = parse_format)]
    pub format: Option<Format>,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// `a..b` (inclusive) or a single value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InclusiveRange {
    pub start: usize,
    pub end: usize,
}

impl InclusiveRange {
    pub fn values(&self) -> std::ops::RangeInclusive<usize> {
        self.start..=self.end
    }

    pub fn is_single(&self) -> bool {
        self.start == self.end
    }
}

impl FromStr for InclusiveRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad number `{t}`"))
        };
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => (num(s)?, num(s)?),
        };
        if start > end {
            return Err(format!("empty range `{s}`"));
        }
        Ok(InclusiveRange { start, end })
    }
}

fn parse_range(s: &str) -> Result<InclusiveRange, String> {
    s.parse()
}

/// Resolved settings for one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub search: SearchConfig,
    pub out_dir: PathBuf,
}

/// Failure that ends a run with a specific exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        usage(e.to_string())
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

impl RunConfig {
    pub fn resolve(global: &GlobalArgs, env_out: Option<PathBuf>) -> Result<Self, CliError> {
        let mut search = SearchConfig::default();
        let mut out_dir = env_out.unwrap_or_else(|| PathBuf::from(DEFAULT_OUT));
        if let Some(path) = &global.config {
            let text = fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read config {}: {e}", path.display())))?;
            apply_config(&text, &mut search, &mut out_dir)?;
        }
        if let Some(v) = global.max_vertices {
            search.max_vertices = v;
        }
        if let Some(v) = global.group_cap {
            search.group_cap = v;
        }
        if let Some(v) = global.budget {
            search.budget = v;
        }
        if let Some(out) = &global.out {
            out_dir = out.clone();
        }
        if search.max_vertices == 0 || search.group_cap == 0 || search.budget == 0 {
            return Err(usage("caps must be positive"));
        }
        Ok(RunConfig { search, out_dir })
    }
}

fn apply_config(
    text: &str,
    search: &mut SearchConfig,
    out_dir: &mut PathBuf,
) -> Result<(), CliError> {
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| usage(format!("config line {}: expected key=value", lineno + 1)))?;
        let (key, value) = (key.trim().replace('-', "_"), value.trim());
        let number = || {
            value.parse::<usize>().map_err(|_| {
                usage(format!(
                    "config line {}: `{value}` is not a number",
                    lineno + 1
                ))
            })
        };
        match key.as_str() {
            "max_vertices" => search.max_vertices = number()?,
            "group_cap" => search.group_cap = number()?,
            "budget" => search.budget = number()?,
            "out" => *out_dir = PathBuf::from(value),
            other => {
                return Err(usage(format!(
                    "config line {}: unknown key `{other}`",
                    lineno + 1
                )))
            }
        }
    }
    Ok(())
}

fn slug(f: Family) -> String {
    match f {
        Family::Complete(n) => format!("complete{n}"),
        Family::Star(n) => format!("star{n}"),
        Family::CompleteBipartite(m, n) => format!("bipartite{m}-{n}"),
        Family::Path(n) => format!("path{n}"),
        Family::Cycle(n) => format!("cycle{n}"),
    }
}

fn write_file(dir: &Path, name: &str, bytes: &[u8]) -> Result<PathBuf, CliError> {
    fs::create_dir_all(dir).map_err(|e| usage(format!("cannot create {}: {e}", dir.display())))?;
    let path = dir.join(name);
    fs::write(&path, bytes).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
    Ok(path)
}

fn write_report(cfg: &RunConfig, name: &str, report: &VerificationReport) -> Result<(), CliError> {
    let mut json = report.to_json();
    json.push('\n');
    let path = write_file(&cfg.out_dir, name, json.as_bytes())?;
    println!("{} -> {}", report.summary(), path.display());
    Ok(())
}

fn check_size(vertices: usize, cfg: &RunConfig) -> Result<(), CliError> {
    if vertices > cfg.search.max_vertices {
        return Err(Error::Oversize {
            vertices,
            cap: cfg.search.max_vertices,
        }
        .into());
    }
    Ok(())
}

fn family_size(f: Family) -> usize {
    match f {
        Family::Complete(n) | Family::Path(n) | Family::Cycle(n) => n,
        Family::Star(n) => n + 1,
        Family::CompleteBipartite(m, n) => m + n,
    }
}

fn cmd_build(args: &BuildArgs, cfg: &RunConfig) -> Result<i32, CliError> {
    let (name, graph): (String, Box<dyn Export>) = if let Some(f) = args.token {
        let k = args.k.expect("clap enforces --k with --token");
        check_size(choose(family_size(f), k), cfg)?;
        let g = token_graph(&make_family(f)?, k)?.graph;
        (format!("token_{}_k{k}", slug(f)), Box::new(g))
    } else if let Some(nk) = &args.johnson {
        let (n, k) = (nk[0], nk[1]);
        check_size(choose(n, k), cfg)?;
        (format!("johnson_{n}_{k}"), Box::new(johnson(n, k)?))
    } else if let Some(f) = args.line {
        let x = make_family(f)?;
        check_size(x.edge_count(), cfg)?;
        (format!("line_{}", slug(f)), Box::new(line_graph(&x)))
    } else if let Some(f) = args.subdivision {
        let x = make_family(f)?;
        check_size(x.vertex_count() + x.edge_count(), cfg)?;
        (
            format!("subdivision_{}", slug(f)),
            Box::new(subdivision(&x)),
        )
    } else if let Some(f) = args.family {
        check_size(family_size(f), cfg)?;
        (format!("family_{}", slug(f)), Box::new(make_family(f)?))
    } else if let Some(nab) = &args.inclusion {
        let (n, a, b) = (nab[0], nab[1], nab[2]);
        check_size(choose(n, a).saturating_add(choose(n, b)), cfg)?;
        (
            format!("inclusion_{n}_{a}_{b}"),
            Box::new(inclusion_bigraph(n, a, b)?),
        )
    } else if let Some(n) = args.theorem1_base {
        (format!("theorem1_base_n{n}"), Box::new(theorem1_base(n)?))
    } else if let Some(n) = args.theorem1_cover {
        let base = theorem1_base(n)?;
        check_size(base.cover_vertex_count(), cfg)?;
        (format!("theorem1_cover_n{n}"), Box::new(lift(&base).graph))
    } else {
        return Err(usage("nothing to build"));
    };

    let formats = match args.format {
        Some(f) => vec![f],
        None => vec![Format::Dot, Format::Json],
    };
    let record = graph.to_record();
    for format in formats {
        let ext = match format {
            Format::Dot => "dot",
            Format::Json => "json",
        };
        let mut bytes = graph.export(format);
        if format == Format::Json {
            bytes.push(b'\n');
        }
        let path = write_file(&cfg.out_dir, &format!("{name}.{ext}"), &bytes)?;
        println!(
            "{name}: {} vertices, {} edges -> {}",
            record.vertices,
            record.edges.len(),
            path.display()
        );
    }
    Ok(EXIT_OK)
}

fn cmd_verify_theorem1(range: InclusiveRange, cfg: &RunConfig) -> Result<i32, CliError> {
    if range.is_single() && (!range.start.is_multiple_of(2) || range.start < 4) {
        return Err(usage(format!(
            "n must be even and at least 4, got {}",
            range.start
        )));
    }
    let ns: Vec<usize> = range.values().filter(|n| n % 2 == 0 && *n >= 4).collect();
    if ns.is_empty() {
        return Err(usage("the range contains no even n >= 4"));
    }
    let reports = ns
        .par_iter()
        .map(|&n| verify_theorem1_with(n, &cfg.search))
        .collect::<Result<Vec<_>, Error>>()?;
    for (n, report) in ns.iter().zip(&reports) {
        write_report(cfg, &format!("theorem1_n{n}.json"), report)?;
    }
    Ok(if reports.iter().all(VerificationReport::passed) {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}

fn cmd_zz(family: Family, range: InclusiveRange, cfg: &RunConfig) -> Result<i32, CliError> {
    let x = make_family(family)?;
    let n = x.vertex_count();
    if range.start == 0 || range.end >= n {
        return Err(usage(format!(
            "k must lie in 1..{} for {family}",
            n.saturating_sub(1)
        )));
    }
    let ks: Vec<usize> = range.values().collect();
    let reports = ks
        .par_iter()
        .map(|&k| zz_check_with(&x, Some(family), k, &cfg.search))
        .collect::<Result<Vec<_>, Error>>()?;
    for (k, report) in ks.iter().zip(&reports) {
        write_report(cfg, &format!("zz_{}_k{k}.json", slug(family)), report)?;
    }
    Ok(if reports.iter().all(VerificationReport::passed) {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}

fn cmd_conjecture(which: u8, n: usize, cfg: &RunConfig) -> Result<i32, CliError> {
    let family = match which {
        1 => ConjectureFamily::StarHalf(n),
        _ => ConjectureFamily::StarTwo(n),
    };
    let report = conjecture_search(family, &cfg.search)?;
    write_report(cfg, &format!("conjecture{which}_n{n}.json"), &report)?;
    Ok(match report.status() {
        Status::Pass | Status::NoCandidate => EXIT_OK,
        Status::BudgetExhausted => EXIT_BUDGET,
        Status::Fail => EXIT_FAILURE,
    })
}

pub fn execute(cli: &Cli, cfg: &RunConfig) -> Result<i32, CliError> {
    match &cli.command {
        Command::Build(args) => cmd_build(args, cfg),
        Command::VerifyTheorem1 { n } => cmd_verify_theorem1(*n, cfg),
        Command::Zz { family, k } => cmd_zz(*family, *k, cfg),
        Command::Conjecture { which, n } => cmd_conjecture(*which, *n, cfg),
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
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let env_out = std::env::var_os(OUT_ENV).map(PathBuf::from);
    let result = RunConfig::resolve(&cli.global, env_out).and_then(|cfg| execute(&cli, &cfg));
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.code
        }
    }
}
