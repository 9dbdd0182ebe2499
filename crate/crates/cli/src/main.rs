//! `tindex`: batch front end for tindex-core.
//!
//! Exit codes: 0 success, 1 usage error, 2 infeasible parameters,
//! 3 verification mismatch under `--strict`.

mod commands;
mod output;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use tindex_core::oracle::DEFAULT_CAP;
use tindex_core::IndexKind;

use output::Format;

#[derive(Parser, Debug)]
#[command(
    name = "tindex",
    version,
    about = "Distance-based indices and extremal bounds for bipartite graphs with cut edges"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute indices for graph6 lines read from a file or stdin.
    Indices(IndicesArgs),
    /// Build a star, a complete bipartite graph or a B_k(x, y) member.
    Construct(ConstructArgs),
    /// Extremal value, optimal x, printed clause and reconcile status for one (n, k).
    Bound(BoundArgs),
    /// Closed-form index value of B_k(x, n-k-x).
    ClosedForm(ClosedFormArgs),
    /// Bound rows for every feasible k over a range of n.
    Table(TableArgs),
    /// Compare the exhaustive oracle with the closed-form optimum.
    Verify(VerifyArgs),
    /// List connected bipartite graphs on n vertices, optionally with k cut edges.
    Enumerate(EnumerateArgs),
    /// Check edge-addition monotonicity or one of the graph transformations.
    Probe(ProbeArgs),
}

/// Inclusive range of vertex counts: `7`, `5..9` or `5..=9`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NRange {
    pub lo: usize,
    pub hi: usize,
}

impl NRange {
    pub fn iter(self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("invalid vertex count `{t}`"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = num(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(NRange { lo, hi })
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

/// `all` or one index tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexSel(pub Option<IndexKind>);

impl IndexSel {
    pub fn kinds(self) -> Vec<IndexKind> {
        match self.0 {
            Some(k) => vec![k],
            None => IndexKind::ALL.to_vec(),
        }
    }
}

impl FromStr for IndexSel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.eq_ignore_ascii_case("all") {
            return Ok(IndexSel(None));
        }
        s.parse::<IndexKind>()
            .map(|k| IndexSel(Some(k)))
            .map_err(|e| e.to_string())
    }
}

#[derive(Args, Debug)]
struct IndicesArgs {
    /// Graph6 file, one graph per line; stdin when omitted.
    input: Option<PathBuf>,
    #[arg(long, default_value = "all")]
    index: IndexSel,
    #[arg(long, default_value = "csv")]
    format: Format,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[command(subcommand)]
    kind: ConstructKind,
    #[arg(long, global = true, default_value = "graph6")]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum ConstructKind {
    /// The star S_n.
    Star {
        #[arg(long)]
        n: usize,
    },
    /// The complete bipartite graph K_{s,t}.
    Kst {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
    /// B_k(x, n-k-x): K_{x,n-k-x} with k pendants on one vertex of the x-part.
    Bk {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        x: usize,
    },
}

#[derive(Args, Debug)]
struct BoundArgs {
    #[arg(long, default_value = "all")]
    index: IndexSel,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value = "csv")]
    format: Format,
}

#[derive(Args, Debug)]
struct ClosedFormArgs {
    #[arg(long, default_value = "all")]
    index: IndexSel,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    x: usize,
    #[arg(long, default_value = "csv")]
    format: Format,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long, default_value = "all")]
    index: IndexSel,
    #[arg(long)]
    n: NRange,
    #[arg(long, default_value = "csv")]
    format: Format,
}

#[derive(Args, Debug)]
struct OracleArgs {
    /// Largest n the oracle may enumerate (at most 10).
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Worker threads; defaults to one per core.
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    index: IndexSel,
    /// Shorthand for `--index all`.
    #[arg(long)]
    all: bool,
    #[arg(long)]
    n: NRange,
    /// Exit with code 3 when any verdict is not a match.
    #[arg(long)]
    strict: bool,
    /// Append reports to this file, skipping cells it already holds.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Include wall time in each report.
    #[arg(long)]
    timing: bool,
    #[arg(long, default_value = "json")]
    format: Format,
    #[command(flatten)]
    oracle: OracleArgs,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value = "graph6")]
    format: Format,
    #[command(flatten)]
    oracle: OracleArgs,
}

#[derive(Args, Debug)]
struct ProbeArgs {
    #[command(subcommand)]
    lemma: ProbeKind,
    #[arg(long, global = true, default_value = "csv")]
    format: Format,
    /// Exit with code 3 when any claim fails.
    #[arg(long, global = true)]
    strict: bool,
}

#[derive(Subcommand, Debug)]
enum ProbeKind {
    /// Every index moves strictly under each single edge addition.
    Lemma2 {
        #[arg(long)]
        graph: String,
        /// Number of absent edges to try; all of them by default.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = commands::DEFAULT_SEED)]
        seed: u64,
    },
    /// Turn a non-pendant bridge into a pendant edge.
    Lemma3 {
        #[arg(long)]
        graph: String,
        /// Bridge endpoint that absorbs the other side; every bridge is tried when omitted.
        #[arg(long, requires = "w")]
        u: Option<usize>,
        #[arg(long, requires = "u")]
        w: Option<usize>,
    },
    /// Move the pendants of one core vertex onto another of the same part.
    Lemma4(CoreArgs),
    /// Move the pendants of a y-vertex onto an x-vertex.
    Lemma5(CoreArgs),
}

#[derive(Args, Debug, Clone)]
pub struct CoreArgs {
    #[arg(long)]
    pub s: usize,
    #[arg(long)]
    pub t: usize,
    /// Pendant counts such as `x1:1,x2:2`; core vertices are x1..xs and y1..yt.
    #[arg(long)]
    pub pendants: String,
    #[arg(long)]
    pub from: String,
    #[arg(long)]
    pub to: String,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is_broken_pipe() => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
