//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use linedigraph_core::factorization::{dicycle_factorization, random_regular_digraph};
use linedigraph_core::line::{
    canonical_labeling, iterated_line_digraph, lemma2_isomorphism, line_digraph, spiked_dicycle,
    verify_growth_decomposition, verify_theorem,
};
use linedigraph_core::topologies::{
    complete_digraph_with_loops, de_bruijn, fya_relabeling, verify_debruijn_remark,
};
use linedigraph_core::{Digraph, VerificationReport};

use crate::formats;

/// Usage errors.
pub const EXIT_USAGE: i32 = 2;
/// Domain and IO errors, or any claim that does not hold.
pub const EXIT_FAILURE: i32 = 1;

/// (d, k) pairs checked by `verify fya` when no parameters are given.
pub const FYA_SWEEP: [(usize, usize); 10] = [
    (2, 2),
    (2, 3),
    (2, 4),
    (2, 5),
    (2, 6),
    (3, 2),
    (3, 3),
    (3, 4),
    (4, 2),
    (4, 3),
];

#[derive(Debug, Parser)]
#[command(
    name = "linedigraph",
    version,
    about = "Line digraphs of regular digraphs: generation, dicycle factorization and exact verification"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a digraph and print it as an edge list
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        /// Output format
        #[arg(long, value_enum, default_value_t = OutputFormat::Edgelist, global = true)]
        format: OutputFormat,
    },
    /// Print a dicycle factorization of a regular digraph
    Factorize(InputArgs),
    /// Print the line digraph as an edge list
    Line {
        #[command(flatten)]
        input: InputArgs,
        /// Number of line digraph iterations
        #[arg(long, default_value_t = 1)]
        iterate: usize,
        /// Relabel the last iteration by the canonical arc labeling (needs regular input)
        #[arg(long)]
        canonical: bool,
    },
    /// Check a claim and print one CLAIM line per comparison
    Verify {
        #[command(subcommand)]
        claim: Claim,
        /// Also print both matrices and the outcome for each comparison
        #[arg(long, global = true)]
        verbose: bool,
    },
    /// Convert a digraph file to another format
    Export {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        format: OutputFormat,
    },
}

#[derive(Debug, Subcommand)]
enum GenKind {
    /// de Bruijn digraph B(d, k)
    Debruijn {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
    },
    /// Complete digraph with loops K_d+
    Kplus {
        #[arg(long)]
        d: usize,
    },
    /// Dicycle on n vertices with s sinks hanging off each
    Spiked {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        spikes: usize,
    },
    /// Seeded random d-regular digraph
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
enum Claim {
    /// Relabelled line digraph equals (J_d ⊗ I_n)·⊕M(H_i)
    Theorem(InstanceArgs),
    /// Spiked dicycles are isomorphic to their line digraphs (all n<=8, s<=4 by default)
    Lemma2 {
        #[arg(long, requires = "spikes")]
        n: Option<usize>,
        #[arg(long, requires = "n")]
        spikes: Option<usize>,
    },
    /// Factor growths decompose the line digraph
    Decomposition(InstanceArgs),
    /// B(d, k) is the (k-1)-th iterated line digraph of K_d+
    Fya {
        #[arg(long, requires = "k")]
        d: Option<usize>,
        #[arg(long, requires = "d")]
        k: Option<usize>,
    },
    /// M(B(d, 2)) is similar to the structured product (d = 1..6 by default)
    Remark {
        #[arg(long)]
        d: Option<usize>,
    },
}

#[derive(Debug, Args)]
struct InstanceArgs {
    /// Digraph file
    #[arg(required_unless_present = "n", conflicts_with_all = ["n", "d"])]
    file: Option<PathBuf>,
    /// Vertex count of a seeded random instance
    #[arg(long, requires = "d")]
    n: Option<usize>,
    /// Degree of a seeded random instance
    #[arg(long, requires = "n")]
    d: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum)]
    input_format: Option<InputFormat>,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Digraph file (`-` for an edge list on standard input)
    file: PathBuf,
    /// Override detection by extension
    #[arg(long, value_enum)]
    input_format: Option<InputFormat>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    #[value(alias = "edgelist")]
    El,
    Mm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Edgelist,
    Dot,
    Mm,
    Dense,
}

/// Parses `args` (including the program name) and runs the command,
/// writing data to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_FAILURE
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> anyhow::Result<i32> {
    match command {
        Command::Gen { kind, format } => {
            let text = match kind {
                GenKind::Debruijn { d, k } => {
                    let b = de_bruijn(d, k)?;
                    if format == OutputFormat::Dot {
                        formats::write_de_bruijn_dot(&b)
                    } else {
                        render(b.digraph(), format)
                    }
                }
                GenKind::Kplus { d } => render(&complete_digraph_with_loops(d)?, format),
                GenKind::Spiked { n, spikes } => render(&spiked_dicycle(n, spikes)?, format),
                GenKind::Random { n, d, seed } => {
                    render(&random_regular_digraph(n, d, seed)?, format)
                }
            };
            out.write_all(text.as_bytes())?;
            Ok(0)
        }
        Command::Factorize(input) => {
            let d = load(&input.file, input.input_format)?;
            let f = dicycle_factorization(&d)?;
            out.write_all(formats::write_factorization(&f).as_bytes())?;
            Ok(0)
        }
        Command::Line {
            input,
            iterate,
            canonical,
        } => {
            let d = load(&input.file, input.input_format)?;
            let result = line_command(&d, iterate, canonical)?;
            out.write_all(formats::write_edge_list(&result).as_bytes())?;
            Ok(0)
        }
        Command::Verify { claim, verbose } => {
            let reports = verify_command(claim)?;
            let mut all_equal = true;
            for r in &reports {
                if verbose {
                    write!(out, "{r}")?;
                }
                writeln!(out, "{}", r.summary_line())?;
                all_equal &= r.is_equal();
            }
            Ok(if all_equal { 0 } else { EXIT_FAILURE })
        }
        Command::Export { input, format } => {
            let d = load(&input.file, input.input_format)?;
            out.write_all(render(&d, format).as_bytes())?;
            Ok(0)
        }
    }
}

fn render(d: &Digraph, format: OutputFormat) -> String {
    match format {
        OutputFormat::Edgelist => formats::write_edge_list(d),
        OutputFormat::Dot => formats::write_dot(d),
        OutputFormat::Mm => formats::write_matrix_market(&d.adjacency_matrix()),
        OutputFormat::Dense => formats::write_dense(&d.adjacency_matrix()),
    }
}

fn line_command(d: &Digraph, iterate: usize, canonical: bool) -> anyhow::Result<Digraph> {
    if !canonical {
        return Ok(iterated_line_digraph(d, iterate)?.digraph().clone());
    }
    if iterate == 0 {
        bail!("--canonical needs at least one iteration");
    }
    // the canonical labeling applies to the last step, L(L^{k-1} D)
    let base = iterated_line_digraph(d, iterate - 1)?.digraph().clone();
    let f = dicycle_factorization(&base)?;
    let labeling = canonical_labeling(&base, &f)?;
    let line = line_digraph(&base)?;
    Ok(line.digraph().relabel(labeling.permutation())?)
}

fn instance(args: InstanceArgs) -> anyhow::Result<Digraph> {
    match (args.file, args.n, args.d) {
        (Some(path), _, _) => load(&path, args.input_format),
        (None, Some(n), Some(d)) => Ok(random_regular_digraph(n, d, args.seed)?),
        _ => bail!("give a digraph file or --n and --d"),
    }
}

fn verify_command(claim: Claim) -> anyhow::Result<Vec<VerificationReport>> {
    let reports = match claim {
        Claim::Theorem(args) => vec![verify_theorem(&instance(args)?)?],
        Claim::Lemma2 { n, spikes } => {
            let cases: Vec<(usize, usize)> = match (n, spikes) {
                (Some(n), Some(s)) => vec![(n, s)],
                _ => (1..=8).flat_map(|n| (0..=4).map(move |s| (n, s))).collect(),
            };
            cases
                .into_iter()
                .map(|(n, s)| Ok(lemma2_isomorphism(n, s)?.1))
                .collect::<anyhow::Result<_>>()?
        }
        Claim::Decomposition(args) => verify_growth_decomposition(&instance(args)?)?
            .reports()
            .cloned()
            .collect(),
        Claim::Fya { d, k } => {
            let cases = match (d, k) {
                (Some(d), Some(k)) => vec![(d, k)],
                _ => FYA_SWEEP.to_vec(),
            };
            cases
                .into_iter()
                .map(|(d, k)| Ok(fya_relabeling(d, k)?.1))
                .collect::<anyhow::Result<_>>()?
        }
        Claim::Remark { d } => {
            let ds = d.map_or_else(|| (1..=6).collect(), |d| vec![d]);
            let mut reports = Vec::new();
            for d in ds {
                reports.extend(verify_debruijn_remark(d)?);
            }
            reports
        }
    };
    Ok(reports)
}

fn detect_format(path: &Path) -> anyhow::Result<InputFormat> {
    match path.extension().and_then(|e| e.to_str()) {
        Some("mm") | Some("mtx") => Ok(InputFormat::Mm),
        Some("dot") | Some("gv") => bail!("DOT is an export-only format"),
        _ => Ok(InputFormat::El),
    }
}

// `-` reads standard input
fn load(path: &Path, format: Option<InputFormat>) -> anyhow::Result<Digraph> {
    let stdin = path.as_os_str() == "-";
    let format = match format {
        Some(f) => f,
        None if stdin => InputFormat::El,
        None => detect_format(path)?,
    };
    let text = if stdin {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading standard input")?;
        s
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    let parsed = match format {
        InputFormat::El => formats::read_edge_list(&text),
        InputFormat::Mm => formats::read_matrix_market_digraph(&text),
    };
    parsed.with_context(|| format!("parsing {}", path.display()))
}
