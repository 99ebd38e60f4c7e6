use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use degseq::oracle::{enumerate_graphic_sequences, enumerate_realizations, verify_all};
use degseq::report::{
    analysis_to_json, verification_to_json, AnalysisText, EnumerationDocument, SampleDocument,
};
use degseq::seq::{compare_prefix_sums, parse_integers};
use degseq::{
    analyze, forced::packing_obstruction, mcmc_sample, sis_sample, DegreeSequence, Error,
    LabeledGraph, LabeledIntSequence,
};

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NOT_GRAPHIC: u8 = 3;

#[derive(Parser)]
#[command(
    name = "degseq",
    version,
    about = "Forced and forbidden edges of graphic degree sequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Mcmc,
    Sis,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Forced and forbidden edges with derived properties.
    Analyze {
        /// Non-increasing degrees, comma or space separated.
        #[arg(required = true, num_args = 1.., allow_negative_numbers = true)]
        sequence: Vec<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Draw one realization.
    Sample {
        #[arg(required = true, num_args = 1.., allow_negative_numbers = true)]
        sequence: Vec<String>,
        #[arg(long, value_enum, default_value_t = Method::Mcmc)]
        method: Method,
        /// Chain length for mcmc.
        #[arg(long, default_value_t = 1000)]
        steps: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
    /// List the realizations of a sequence, or all graphic sequences of length n.
    Enumerate {
        #[arg(num_args = 0.., allow_negative_numbers = true, conflicts_with = "n")]
        sequence: Vec<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        limit: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Check every theorem over all graphic sequences of length n.
    Verify {
        #[arg(long)]
        n: usize,
        /// Worker threads; 0 uses every available core.
        #[arg(long, env = "DEGSEQ_JOBS", default_value_t = 0)]
        jobs: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Look for an edge forced in both labeled sequences.
    PackCheck {
        #[arg(allow_negative_numbers = true)]
        first: String,
        #[arg(allow_negative_numbers = true)]
        second: String,
        /// Append zeros to the shorter sequence.
        #[arg(long)]
        pad: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Print the complement sequence.
    Complement {
        #[arg(required = true, num_args = 1.., allow_negative_numbers = true)]
        sequence: Vec<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Compare two sequences under majorization.
    Majorize {
        #[arg(allow_negative_numbers = true)]
        first: String,
        #[arg(allow_negative_numbers = true)]
        second: String,
        #[command(flatten)]
        out: Output,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotGraphic | Error::DegreeOutOfRange { .. } | Error::SamplerStuck { .. } => {
                EXIT_NOT_GRAPHIC
            }
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = std::result::Result<u8, Failure>;

fn parse_sequence(parts: &[String]) -> Result<DegreeSequence, Error> {
    DegreeSequence::from_signed(&parse_integers(&parts.join(" "))?)
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

fn print_graph(g: &LabeledGraph) {
    print!("{}", g.to_edge_list());
}

fn run_analyze(sequence: &[String], format: Format) -> CmdResult {
    let report = analyze(&parse_sequence(sequence)?)?;
    match format {
        Format::Text => println!("{}", AnalysisText(&report)),
        Format::Json => println!("{}", analysis_to_json(&report)),
    }
    Ok(0)
}

fn run_sample(
    sequence: &[String],
    method: Method,
    steps: u64,
    seed: u64,
    format: Format,
) -> CmdResult {
    let a = parse_sequence(sequence)?;
    let (g, name, steps) = match method {
        Method::Mcmc => (mcmc_sample(&a, steps, seed)?, "mcmc", Some(steps)),
        Method::Sis => (sis_sample(&a, seed)?, "sis", None),
    };
    match format {
        Format::Text => print_graph(&g),
        Format::Json => println!("{}", json(&SampleDocument::new(&a, name, seed, steps, &g))),
    }
    Ok(0)
}

fn run_enumerate(
    sequence: &[String],
    n: Option<usize>,
    limit: Option<usize>,
    format: Format,
) -> CmdResult {
    if let Some(n) = n {
        let all: Vec<DegreeSequence> = enumerate_graphic_sequences(n)?
            .take(limit.unwrap_or(usize::MAX))
            .collect();
        match format {
            Format::Text => all.iter().for_each(|s| println!("{s}")),
            Format::Json => println!("{}", json(&all)),
        }
        return Ok(0);
    }
    if sequence.is_empty() {
        return Err(Failure {
            code: EXIT_USAGE,
            message: "enumerate needs a sequence or --n".into(),
        });
    }
    let a = parse_sequence(sequence)?;
    a.require_graphic()?;
    // One extra realization tells whether the limit truncated the listing.
    let probe = limit.map(|l| l.saturating_add(1));
    let mut graphs: Vec<LabeledGraph> = enumerate_realizations(&a, probe)?.collect();
    let truncated = limit.is_some_and(|l| graphs.len() > l);
    if let Some(l) = limit {
        graphs.truncate(l);
    }
    match format {
        Format::Text => {
            for (idx, g) in graphs.iter().enumerate() {
                println!("# realization {}", idx + 1);
                print_graph(g);
            }
            let suffix = if truncated { " (limit reached)" } else { "" };
            println!("# {} realizations{suffix}", graphs.len());
        }
        Format::Json => {
            let doc = EnumerationDocument {
                sequence: a,
                count: graphs.len(),
                truncated,
                realizations: graphs.iter().map(|g| g.edges().collect()).collect(),
            };
            println!("{}", json(&doc));
        }
    }
    Ok(0)
}

fn run_verify(n: usize, jobs: usize, format: Format) -> CmdResult {
    let report = verify_all(n, jobs)?;
    match format {
        Format::Text => println!("{report}"),
        Format::Json => println!("{}", verification_to_json(&report)),
    }
    Ok(if report.all_passed() {
        0
    } else {
        EXIT_COUNTEREXAMPLE
    })
}

fn labeled(text: &str) -> Result<LabeledIntSequence, Error> {
    LabeledIntSequence::new(parse_integers(text)?)
}

fn run_pack_check(first: &str, second: &str, pad: bool, format: Format) -> CmdResult {
    let mut a = parse_integers(first)?;
    let mut b = parse_integers(second)?;
    if pad {
        let n = a.len().max(b.len());
        a.resize(n, 0);
        b.resize(n, 0);
    }
    for values in [&a, &b] {
        if let Some(pos) = values.iter().position(|&v| v < 0) {
            return Err(Error::Parse {
                position: pos + 1,
                token: values[pos].to_string(),
            }
            .into());
        }
    }
    let (a, b) = (LabeledIntSequence::new(a)?, LabeledIntSequence::new(b)?);
    let shared = packing_obstruction(&a, &b)?;
    match format {
        Format::Text => match shared {
            Some(e) => println!("shared forced edge {e}: cannot pack"),
            None => println!("no shared-forced-edge obstruction found"),
        },
        Format::Json => println!(
            "{}",
            json(&serde_json::json!({ "shared_forced_edge": shared }))
        ),
    }
    Ok(0)
}

fn run_complement(sequence: &[String], format: Format) -> CmdResult {
    let c = parse_sequence(sequence)?.complement();
    match format {
        Format::Text => println!("{c}"),
        Format::Json => println!("{}", json(&c)),
    }
    Ok(0)
}

fn run_majorize(first: &str, second: &str, format: Format) -> CmdResult {
    let relation = compare_prefix_sums(
        &labeled(first)?.sorted_values(),
        &labeled(second)?.sorted_values(),
    )?;
    match format {
        Format::Text => println!("{relation}"),
        Format::Json => println!("{}", json(&serde_json::json!({ "relation": relation }))),
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let result = match &cli.command {
        Command::Analyze { sequence, out } => run_analyze(sequence, out.format),
        Command::Sample {
            sequence,
            method,
            steps,
            seed,
            out,
        } => run_sample(sequence, *method, *steps, *seed, out.format),
        Command::Enumerate {
            sequence,
            n,
            limit,
            out,
        } => run_enumerate(sequence, *n, *limit, out.format),
        Command::Verify { n, jobs, out } => run_verify(*n, *jobs, out.format),
        Command::PackCheck {
            first,
            second,
            pad,
            out,
        } => run_pack_check(first, second, *pad, out.format),
        Command::Complement { sequence, out } => run_complement(sequence, out.format),
        Command::Majorize { first, second, out } => run_majorize(first, second, out.format),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
