use std::fs;
use std::io::Read as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use locdom::assoc::build_associated;
use locdom::error::Error;
use locdom::extremal;
use locdom::families::{generate, FamilyKind, FamilySpec};
use locdom::graph::{Graph, VertexSet};
use locdom::graph6;
use locdom::solver;
use locdom::verify::{self, Universe, VerificationReport};

#[derive(Parser)]
#[command(name = "locdom", version, about = "Location-domination invariants and verification suites")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the location-domination number and a witness code
    Lambda(InputArgs),
    /// Compute the global location-domination number and a witness
    Global(InputArgs),
    /// Build the associated graph of an LD-set and print it as DOT
    Assoc {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated vertex indices of the LD-set, e.g. 0,3
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
    },
    /// Build an extremal bipartite witness graph
    Construct {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, value_enum, default_value_t = ConstructKind::Extremal)]
        kind: ConstructKind,
    },
    /// Generate a named family graph and print it as graph6
    Family {
        /// path|cycle|wheel|complete|star|complete_bipartite|bistar
        kind: String,
        /// order n for one-parameter kinds
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        /// also print the edge-list format
        #[arg(long)]
        edges: bool,
    },
    /// Run a verification suite and print its report
    Verify {
        /// complement-gap|global-bounds|global-symmetry|families|bipartite-gap|assoc|cactus
        suite: String,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// graph6 file overriding the internal enumeration (one graph per line)
        #[arg(long)]
        graph6: Option<String>,
        /// walk samples per graph for the assoc suite
        #[arg(long, default_value_t = 100)]
        samples: u64,
        /// graph count for the cactus suite
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 0xC0FFEE)]
        seed: u64,
        /// write the JSON report to this path
        #[arg(long)]
        output: Option<String>,
    },
    /// Re-emit a stored JSON report as json or csv
    Report {
        #[arg(long, value_enum)]
        format: ReportFormat,
        /// JSON report file; stdin when omitted
        #[arg(long)]
        input: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructKind {
    Extremal,
    Bistar,
    Biclique,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

/// One graph from graph6 text, a file, or a family spec.
#[derive(Args)]
struct InputArgs {
    /// graph6 string
    #[arg(long)]
    graph6: Option<String>,
    /// file holding one graph6 line or the edge-list format ("n m" header)
    #[arg(long)]
    file: Option<String>,
    /// named family kind
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
}

fn family_spec(kind: &str, n: Option<usize>, r: Option<usize>, s: Option<usize>) -> Result<FamilySpec, Error> {
    let kind: FamilyKind = kind.parse()?;
    if kind.takes_pair() {
        match (r, s) {
            (Some(r), Some(s)) => Ok(FamilySpec::two_param(kind, r, s)),
            _ => Err(Error::FamilyParams(format!(
                "family `{}` needs --r and --s",
                kind.name()
            ))),
        }
    } else {
        match n {
            Some(n) => Ok(FamilySpec::one_param(kind, n)),
            None => Err(Error::FamilyParams(format!(
                "family `{}` needs --n",
                kind.name()
            ))),
        }
    }
}

impl InputArgs {
    fn load(&self) -> Result<Graph, Error> {
        if let Some(g6) = &self.graph6 {
            return graph6::decode(g6);
        }
        if let Some(path) = &self.file {
            let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
            let first = text.lines().next().unwrap_or("");
            return if first.split_whitespace().count() >= 2 {
                Graph::from_edge_list_text(&text)
            } else {
                graph6::decode(first)
            };
        }
        if let Some(kind) = &self.family {
            return generate(&family_spec(kind, self.n, self.r, self.s)?);
        }
        Err(Error::Io(
            "no input: pass --graph6, --file, or --family".into(),
        ))
    }
}

fn run() -> Result<ExitCode, Error> {
    match Cli::parse().command {
        Command::Lambda(input) => {
            let g = input.load()?;
            let solved = solver::lambda(&g);
            let lc = solver::lambda_complement(&g);
            println!("lambda={} witness={}", solved.value, solved.witness);
            println!("lambda_complement={}", lc.value);
        }
        Command::Global(input) => {
            let g = input.load()?;
            let solved = solver::lambda_global(&g);
            println!("lambda_global={} witness={}", solved.value, solved.witness);
        }
        Command::Assoc { input, set } => {
            let g = input.load()?;
            let s: VertexSet = set.into_iter().collect();
            let a = build_associated(&g, s)?;
            print!("{}", a.to_dot());
        }
        Command::Construct { r, s, kind } => match kind {
            ConstructKind::Extremal => {
                let sfg = extremal::construct_extremal(r, s)?;
                let g = &sfg.graph;
                println!("{}", graph6::encode(g));
                println!(
                    "certified: lambda={} lambda_complement={} (sides {},{})",
                    solver::lambda(g).value,
                    solver::lambda_complement(g).value,
                    r,
                    s
                );
            }
            ConstructKind::Bistar => {
                let g = extremal::construct_gap_minus(r, s)?;
                println!("{}", graph6::encode(&g));
                println!(
                    "lambda={} lambda_complement={}",
                    solver::lambda(&g).value,
                    solver::lambda_complement(&g).value
                );
            }
            ConstructKind::Biclique => {
                let g = extremal::construct_gap_zero(r, s)?;
                println!("{}", graph6::encode(&g));
                println!(
                    "lambda={} lambda_complement={}",
                    solver::lambda(&g).value,
                    solver::lambda_complement(&g).value
                );
            }
        },
        Command::Family { kind, n, r, s, edges } => {
            let g = generate(&family_spec(&kind, n, r, s)?)?;
            println!("{}", graph6::encode(&g));
            if edges {
                print!("{}", g.to_edge_list_text());
            }
        }
        Command::Verify {
            suite,
            n_max,
            graph6: stream,
            samples,
            count,
            seed,
            output,
        } => {
            let universe = |bipartite: bool| -> Result<Universe, Error> {
                match &stream {
                    Some(path) => {
                        let text =
                            fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
                        Universe::from_graph6_text(&format!("graph6 stream {path}"), &text)
                    }
                    None if bipartite => Ok(Universe::bipartite_up_to(n_max)),
                    None => Ok(Universe::connected_up_to(n_max)),
                }
            };
            let report = match suite.as_str() {
                "complement-gap" => verify::suite_complement_gap(&universe(false)?)?,
                "global-bounds" => verify::suite_global_bounds(&universe(false)?)?,
                "global-symmetry" => verify::suite_global_symmetry(&universe(false)?)?,
                "families" => verify::suite_families(2, n_max)?,
                "bipartite-gap" => verify::suite_bipartite_gap(&universe(true)?)?,
                "assoc" => verify::suite_assoc_properties(&universe(false)?, samples as usize, seed)?,
                "cactus" => verify::suite_cactus(count, seed)?,
                other => {
                    return Err(Error::Io(format!("unknown suite `{other}`")));
                }
            };
            println!("{}", report.summary_line());
            if let Some(path) = output {
                fs::write(&path, report.to_json()).map_err(|e| Error::Io(format!("{path}: {e}")))?;
            }
            if !report.passed() {
                for v in &report.violations {
                    eprintln!("violation: {} {}", v.graph6, v.details);
                }
                return Ok(ExitCode::from(1));
            }
        }
        Command::Report { format, input } => {
            let text = match input {
                Some(path) => fs::read_to_string(&path).map_err(|e| Error::Io(format!("{path}: {e}")))?,
                None => {
                    let mut buf = String::new();
                    std::io::stdin()
                        .read_to_string(&mut buf)
                        .map_err(|e| Error::Io(e.to_string()))?;
                    buf
                }
            };
            let report = VerificationReport::from_json(&text)?;
            match format {
                ReportFormat::Json => println!("{}", report.to_json()),
                ReportFormat::Csv => print!("{}", report.to_csv()),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
