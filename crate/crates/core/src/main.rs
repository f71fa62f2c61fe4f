use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use z4census::enumerate::{enumerate_family, ScanConfig};
use z4census::graph6::{self, Strictness};
use z4census::invariants::profile;
use z4census::perm::CycleType;
use z4census::report::{build_report, canonical_lines, census_file, profile_table};
use z4census::{autgroup, edgelist, Error, Graph};

#[derive(Parser)]
#[command(name = "z4census", version, about = "Census of 10-vertex graphs with automorphism group Z/4")]
struct Cli {
    /// Accept graph6 records with nonzero padding bits.
    #[arg(long, global = true)]
    lenient: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scan, profile every class, and check every statement.
    Enumerate {
        /// `all`, or one cycle type such as `4,4,2`.
        #[arg(long, default_value = "all")]
        cycle_types: String,
        #[arg(long, env = "CENSUS_THREADS")]
        threads: Option<usize>,
        /// Census file, one canonical graph6 per line.
        #[arg(long)]
        out: Option<PathBuf>,
        /// JSON report.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        aut_order: u128,
    },
    /// Invariant profile of every graph in a graph6 file.
    Invariants {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Canonical graph6 of every graph in a file.
    Canon {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Whether two graphs are isomorphic; each argument is a graph6 file or a graph6 string.
    Iso { a: String, b: String },
    /// Converts between graph6 and `n : u-v ...` edge lists, detecting the input format per line.
    Convert {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(1)
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<(), String> {
    std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_graphs(path: &Path, mode: Strictness) -> Result<Vec<Graph>, String> {
    let text = read(path)?;
    graph6::decode_lines(&text, mode).map_err(|(line, e)| format!("{}: line {line}: {e}", path.display()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mode = if cli.lenient { Strictness::Lenient } else { Strictness::Strict };
    match cli.command {
        Command::Enumerate { cycle_types, threads, out, report, n, aut_order } => {
            if n != 10 || aut_order != 4 {
                return fail(Error::Unsupported(format!(
                    "only n = 10 with automorphism group order 4 is supported (got n = {n}, order {aut_order})"
                )));
            }
            let cycle_types = match cycle_types.as_str() {
                "all" => None,
                s => match s.parse::<CycleType>() {
                    Ok(t) => Some(vec![t]),
                    Err(e) => return fail(e),
                },
            };
            let cfg = ScanConfig { n, target_order: aut_order, cycle_types, ..ScanConfig::default() };
            let pool = match threads {
                Some(0) => return fail("--threads must be at least 1"),
                Some(t) => rayon::ThreadPoolBuilder::new().num_threads(t).build(),
                None => rayon::ThreadPoolBuilder::new().build(),
            };
            let pool = match pool {
                Ok(p) => p,
                Err(e) => return fail(e),
            };
            let result = pool.install(|| enumerate_family(&cfg).and_then(|f| Ok((build_report(&f)?, census_file(&f)))));
            let (rep, census) = match result {
                Ok(r) => r,
                Err(e) => return fail(e),
            };
            if let Some(path) = out {
                if let Err(e) = write(&path, &census) {
                    return fail(e);
                }
            }
            if let Some(path) = report {
                if let Err(e) = write(&path, &rep.to_json()) {
                    return fail(e);
                }
            }
            print!("{}", rep.summary());
            ExitCode::from(rep.exit_code() as u8)
        }
        Command::Invariants { input, format } => {
            let graphs = match read_graphs(&input, mode) {
                Ok(g) => g,
                Err(e) => return fail(e),
            };
            let mut rows = Vec::new();
            for g in &graphs {
                match profile(g) {
                    Ok(p) => rows.push((graph6::encode_string(g), p)),
                    Err(e) => return fail(format!("{}: {e}", graph6::encode_string(g))),
                }
            }
            match format {
                Format::Table => print!("{}", profile_table(&rows)),
                Format::Json => {
                    let list: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|(g6, p)| serde_json::json!({ "graph6": g6, "profile": p }))
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&list).expect("profiles serialise"));
                }
            }
            ExitCode::SUCCESS
        }
        Command::Canon { input } => match read_graphs(&input, mode) {
            Ok(graphs) => {
                for line in canonical_lines(&graphs) {
                    println!("{line}");
                }
                ExitCode::SUCCESS
            }
            Err(e) => fail(e),
        },
        Command::Iso { a, b } => {
            let load = |arg: &str| -> Result<Graph, String> {
                let path = Path::new(arg);
                let text = if path.exists() { read(path)? } else { arg.to_string() };
                let graphs = graph6::decode_lines(&text, mode).map_err(|(line, e)| format!("{arg}: line {line}: {e}"))?;
                match graphs.as_slice() {
                    [g] => Ok(*g),
                    _ => Err(format!("{arg}: expected exactly one graph, found {}", graphs.len())),
                }
            };
            match (load(&a), load(&b)) {
                (Ok(x), Ok(y)) => {
                    println!("{}", if autgroup::are_isomorphic(&x, &y) { "isomorphic" } else { "non-isomorphic" });
                    ExitCode::SUCCESS
                }
                (Err(e), _) | (_, Err(e)) => fail(e),
            }
        }
        Command::Convert { input } => {
            let text = match read(&input) {
                Ok(t) => t,
                Err(e) => return fail(e),
            };
            for (i, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() || line == ">>graph6<<" {
                    continue;
                }
                let converted = if line.contains(':') {
                    edgelist::parse(line).map(|g| graph6::encode_string(&g))
                } else {
                    graph6::decode_with(line.as_bytes(), mode).map(|g| edgelist::format(&g))
                };
                match converted {
                    Ok(s) => println!("{s}"),
                    Err(e) => return fail(format!("{}: line {}: {e}", input.display(), i + 1)),
                }
            }
            ExitCode::SUCCESS
        }
    }
}
