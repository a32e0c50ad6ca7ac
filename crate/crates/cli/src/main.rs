//! `grover-lab`: periodicity, perfect state transfer and feasible-spectrum
//! tables for Grover walks on regular graphs.
//!
//! Exit codes: 0 success, 1 I/O or verification failure, 2 parse or usage
//! error, 3 unsupported graph, 4 reference-table mismatch.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use grover_lab::graph::{construct, parse_graph6, Graph};
use grover_lab::grover::build_operators;
use grover_lab::report::{analyze, check_existence_entry, AnalysisReport, ExistenceOutcome};
use grover_lab::search::{
    closed_walk_filter, compare_against, enumerate_tables, existence_catalog, golden_table, parse_golden, to_jsonl,
    to_markdown, to_tsv, GoldenRow, WalkFilterVerdict,
};
use grover_lab::{Bounds, Error};
use rayon::prelude::*;

#[derive(Parser)]
#[command(name = "grover-lab", version, about = "Exact analysis of Grover walks on regular graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spectrum, classification, periodicity and PST scan for one or more graphs.
    Analyze {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        bounds: BoundArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Feasible spectra {[k]^1, [k/2]^a, [0]^b, [-k/2]^c} for even k up to --k-max.
    Tables {
        #[arg(long, default_value_t = 20)]
        k_max: u64,
        /// Largest closed-walk length checked by the integrality filter.
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u32).range(1..))]
        r_max: u32,
        /// Compare against the bundled reference table (valencies up to 20).
        #[arg(long)]
        verify_golden: bool,
        /// Reference table used by --verify-golden instead of the bundled one.
        #[arg(long, requires = "verify_golden")]
        golden: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Build every constructible realizing graph of the reference table and check it.
    VerifyExistence {
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Dump the exact operators U and P as JSON.
    Operators {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Construction expression, e.g. "coclique(hamming(3,3),2)".
    #[arg(long)]
    graph: Option<String>,
    /// File with one graph6 string per line.
    #[arg(long)]
    graph6_file: Option<PathBuf>,
}

#[derive(Args)]
struct BoundArgs {
    #[arg(long, default_value_t = 60, value_parser = clap::value_parser!(u32).range(1..))]
    tau_max: u32,
    #[arg(long, default_value_t = 21, value_parser = clap::value_parser!(u32).range(3..))]
    ell_max: u32,
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u32).range(1..))]
    r_max: u32,
}

impl BoundArgs {
    fn bounds(&self) -> Bounds {
        Bounds {
            tau_max: self.tau_max,
            ell_max: self.ell_max,
            r_max: self.r_max,
            ..Bounds::default()
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Md,
    Json,
    Tsv,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Md)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Io(String),
    Usage(String),
    Unsupported(String),
    Golden(String),
    Verification(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Io(_) | Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Unsupported(_) => 3,
            Failure::Golden(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Io(m) | Failure::Usage(m) | Failure::Unsupported(m) | Failure::Golden(m) | Failure::Verification(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Graph(_) | Error::InvalidParameters(_) => Failure::Usage(e.to_string()),
            Error::Unsupported { .. } => Failure::Unsupported(e.to_string()),
            other => Failure::Verification(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(message) = configure_threads() {
        eprintln!("error: {message}");
        return ExitCode::from(2);
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var("GROVER_LAB_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| format!("GROVER_LAB_THREADS must be a positive integer, got {value:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Analyze { input, bounds, output } => cmd_analyze(&input, &bounds.bounds(), &output),
        Command::Tables { k_max, r_max, verify_golden, golden, output } => {
            let golden = if verify_golden { Some(load_reference(golden.as_ref())?) } else { None };
            cmd_tables(k_max, r_max, golden.as_deref(), &output)
        }
        Command::VerifyExistence { output } => cmd_verify_existence(&output),
        Command::Operators { input, out } => {
            let graphs = load_graphs(&input)?;
            let dumps = graphs
                .iter()
                .map(|g| build_operators(g).map(|o| o.to_json()))
                .collect::<Result<Vec<_>, _>>()?;
            let value = if dumps.len() == 1 { dumps.into_iter().next().unwrap() } else { dumps.into() };
            emit(out.as_ref(), &(value.to_string() + "\n"))
        }
    }
}

fn load_graphs(input: &GraphInput) -> Result<Vec<Graph>, Failure> {
    if let Some(spec) = &input.graph {
        return Ok(vec![construct(spec).map_err(Error::from)?]);
    }
    let path = input.graph6_file.as_ref().expect("clap enforces one input");
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    let graphs: Vec<Graph> = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(i, line)| {
            parse_graph6(line)
                .map(|g| g.with_label(format!("graph6:\"{line}\"")))
                .map_err(|e| Failure::Usage(format!("{} line {}: {e}", path.display(), i + 1)))
        })
        .collect::<Result<_, _>>()?;
    if graphs.is_empty() {
        return Err(Failure::Usage(format!("{}: no graphs", path.display())));
    }
    Ok(graphs)
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(e.to_string())),
    }
}

fn cmd_analyze(input: &GraphInput, bounds: &Bounds, output: &OutputArgs) -> Result<(), Failure> {
    let graphs = load_graphs(input)?;
    let reports: Vec<AnalysisReport> = graphs
        .par_iter()
        .map(|g| analyze(g, bounds))
        .collect::<Result<_, _>>()?;
    let text = match output.format {
        Format::Md => reports.iter().map(AnalysisReport::to_markdown).collect::<Vec<_>>().join("\n"),
        Format::Tsv => {
            let mut text = String::new();
            for (i, r) in reports.iter().enumerate() {
                let tsv = r.to_tsv();
                text.push_str(if i == 0 { &tsv } else { tsv.split_once('\n').map_or("", |(_, body)| body) });
            }
            text
        }
        Format::Json if input.graph.is_some() => {
            serde_json::to_string_pretty(&reports[0]).expect("serializable") + "\n"
        }
        Format::Json => serde_json::to_string_pretty(&reports).expect("serializable") + "\n",
    };
    emit(output.out.as_ref(), &text)
}

fn load_reference(path: Option<&PathBuf>) -> Result<Vec<GoldenRow>, Failure> {
    let Some(path) = path else {
        return Ok(golden_table());
    };
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    Ok(parse_golden(&text)?)
}

fn cmd_tables(k_max: u64, r_max: u32, golden: Option<&[GoldenRow]>, output: &OutputArgs) -> Result<(), Failure> {
    let all = enumerate_tables(k_max)?;
    let (rows, eliminated): (Vec<_>, Vec<_>) = all
        .into_iter()
        .partition(|row| closed_walk_filter(row, r_max) == WalkFilterVerdict::Kept);
    for row in &eliminated {
        eprintln!("closed-walk filter removed k={} n={}", row.k, row.n);
    }
    let text = match output.format {
        Format::Md => to_markdown(&rows),
        Format::Tsv => to_tsv(&rows),
        Format::Json => to_jsonl(&rows),
    };
    emit(output.out.as_ref(), &text)?;
    eprintln!("{} rows", rows.len());
    if let Some(reference) = golden {
        let covered = reference.iter().map(|g| g.k).max().unwrap_or(0);
        let diffs = compare_against(&rows, reference, k_max.min(covered));
        if !diffs.is_empty() {
            let lines: Vec<String> = diffs.iter().map(ToString::to_string).collect();
            return Err(Failure::Golden(format!("reference table mismatch:\n{}", lines.join("\n"))));
        }
        eprintln!("reference table: match");
    }
    Ok(())
}

fn cmd_verify_existence(output: &OutputArgs) -> Result<(), Failure> {
    let bounds = Bounds::default();
    let outcomes: Vec<ExistenceOutcome> = existence_catalog()
        .par_iter()
        .map(|entry| check_existence_entry(entry, &bounds))
        .collect::<Result<_, _>>()?;
    let text = match output.format {
        Format::Json => serde_json::to_string_pretty(&outcomes).expect("serializable") + "\n",
        Format::Md => existence_markdown(&outcomes),
        Format::Tsv => existence_tsv(&outcomes),
    };
    emit(output.out.as_ref(), &text)?;
    let failed: Vec<String> = outcomes.iter().filter(|o| !o.passes()).map(describe_failure).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(format!("verification failed:\n{}", failed.join("\n"))))
    }
}

fn describe_failure(o: &ExistenceOutcome) -> String {
    match o {
        ExistenceOutcome::Checked { existence, candidate, periodic, pst_pairs, .. } => {
            let mut fields: Vec<String> = candidate
                .failures()
                .map(|c| format!("{}: expected {}, measured {}", c.field, c.expected, c.measured))
                .collect();
            if !periodic {
                fields.push("not periodic".to_string());
            }
            if *pst_pairs > 0 {
                fields.push(format!("{pst_pairs} transferring pairs"));
            }
            format!("{existence}: {}", fields.join("; "))
        }
        ExistenceOutcome::Skipped { existence, .. } => format!("{existence}: skipped"),
    }
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn existence_cells(o: &ExistenceOutcome) -> Vec<String> {
    match o {
        ExistenceOutcome::Skipped { k, n, existence, reason } => {
            let mut cells = vec![k.to_string(), n.to_string(), existence.clone()];
            cells.extend(std::iter::repeat_n("-".to_string(), 7));
            cells.push(format!("skipped: {reason}"));
            cells
        }
        ExistenceOutcome::Checked { k, n, existence, candidate, periodic, period, pst_pairs, checked_times } => {
            let field = |name: &str| {
                candidate
                    .checks
                    .iter()
                    .filter(|c| c.field == name)
                    .map(|c| mark(c.ok).to_string())
                    .next()
                    .unwrap_or_else(|| "-".to_string())
            };
            let times: Vec<String> = checked_times.iter().map(ToString::to_string).collect();
            vec![
                k.to_string(),
                n.to_string(),
                existence.clone(),
                field("spectrum"),
                field("t_x"),
                field("q"),
                field("q_x"),
                field("hoffman"),
                period.map_or_else(|| mark(*periodic).to_string(), |p| format!("{} ({p})", mark(*periodic))),
                format!("{} at {{{}}}", if *pst_pairs == 0 { "none" } else { "FOUND" }, times.join(",")),
                mark(o.passes()).to_string(),
            ]
        }
    }
}

const EXISTENCE_HEADER: [&str; 11] =
    ["k", "n", "graph", "spectrum", "t_x", "q", "q_x", "hoffman", "periodic", "pst", "result"];

fn existence_markdown(outcomes: &[ExistenceOutcome]) -> String {
    let mut text = format!("| {} |\n|{}\n", EXISTENCE_HEADER.join(" | "), "---|".repeat(EXISTENCE_HEADER.len()));
    for o in outcomes {
        text.push_str(&format!("| {} |\n", existence_cells(o).join(" | ")));
    }
    text
}

fn existence_tsv(outcomes: &[ExistenceOutcome]) -> String {
    let mut text = EXISTENCE_HEADER.join("\t") + "\n";
    for o in outcomes {
        text.push_str(&(existence_cells(o).join("\t") + "\n"));
    }
    text
}
