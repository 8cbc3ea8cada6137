use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use k3pencil::checks;
use k3pencil::pencil::SValue;
use k3pencil::picard::Fiber;
use k3pencil::report::Report;

#[derive(Parser)]
#[command(name = "k3pencil", version, about = "Exact verification of a K3 pencil and its Apéry-Fermi identification")]
struct Cli {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for the enumeration (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Surface {
    Q,
    Branch,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Apery,
    Fermi,
    Domb,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run every check.
    All {
        #[arg(long, default_value_t = 20)]
        rank_bound: usize,
        #[arg(long, default_value_t = 50)]
        n: usize,
    },
    /// Singular points and their A_k types.
    Singularities {
        #[arg(long, value_enum, default_value = "q")]
        surface: Surface,
        /// `generic` or a rational value.
        #[arg(long, default_value = "generic", value_parser = parse_s)]
        s: SValue,
    },
    /// Lifted tritangent lines, their intersection matrix, the birational chain.
    Lines {
        #[arg(long, default_value = "generic", value_parser = parse_s)]
        s: SValue,
    },
    /// Invariants of a lattice such as `U+E8(-1)^2+<-12>`.
    Lattice {
        #[arg(long)]
        spec: String,
    },
    /// Enumerate the divisor configurations of a fibre.
    Picard {
        #[arg(long, default_value = "generic", value_parser = parse_fiber)]
        fiber: Fiber,
        #[arg(long, default_value_t = 20)]
        rank_bound: usize,
        /// Also run the two reflection isomorphisms.
        #[arg(long)]
        reflections: bool,
    },
    /// Operators, recurrences and annihilation checks.
    Series {
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long, default_value_t = 50)]
        n: usize,
        /// Only the corrected operator.
        #[arg(long)]
        corrected: bool,
    },
    /// Closed-form identities.
    Identities {
        #[arg(long)]
        only: Option<String>,
    },
}

fn parse_s(s: &str) -> Result<SValue, String> {
    SValue::parse(s).ok_or_else(|| format!("expected `generic` or a rational, got `{s}`"))
}

fn parse_fiber(s: &str) -> Result<Fiber, String> {
    Fiber::parse(s).ok_or_else(|| format!("expected generic, s1 or s-1, got `{s}`"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global() {
            eprintln!("thread pool: {e}");
        }
    }
    let records = match &cli.cmd {
        Cmd::All { rank_bound, n } => checks::all(*rank_bound, *n),
        Cmd::Singularities { surface, s } => {
            checks::singularities(if matches!(surface, Surface::Q) { "q" } else { "branch" }, s)
        }
        Cmd::Lines { s } => checks::lines(s),
        Cmd::Lattice { spec } => vec![checks::lattice(spec)],
        Cmd::Picard { fiber, rank_bound, reflections } => {
            let mut r = checks::picard(*fiber, *rank_bound);
            if *reflections {
                r.extend(checks::reflections());
            }
            r
        }
        Cmd::Series { op, n, corrected } => {
            let name = match op {
                Op::Apery => "apery",
                Op::Fermi => "fermi",
                Op::Domb => "domb",
            };
            checks::series(name, *n, *corrected)
        }
        Cmd::Identities { only } => {
            if let Some(o) = only {
                if !k3pencil::identities::IDENTITY_IDS.contains(&o.as_str()) {
                    eprintln!("unknown identity `{o}`; one of {:?}", k3pencil::identities::IDENTITY_IDS);
                    return ExitCode::from(2);
                }
            }
            checks::identities(only.as_deref())
        }
    };
    let report = Report::new(records);
    let json = serde_json::to_string_pretty(&report).expect("serializable report");
    let written = match &cli.out {
        Some(p) => fs::write(p, json + "\n"),
        None => writeln!(std::io::stdout(), "{json}"),
    };
    if let Err(e) = written {
        eprintln!("writing report: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(if report.all_ok() { 0 } else { 1 })
}
