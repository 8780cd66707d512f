//! The `voa` command line: one subcommand per family of checks, a text report
//! on standard output and an optional JSON report.

mod report;
mod suites;

pub use report::{Check, Report, Status};
pub use suites::TENSOR_CASES;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::commutant::Coset;
use crate::error::Result;
use crate::exact::HalfInt;
use crate::rootdata::RootType;

/// Exit status when every check passed (skips allowed).
pub const EXIT_PASS: i32 = 0;
/// Exit status when at least one check failed.
pub const EXIT_FAIL: i32 = 1;
/// Exit status for bad arguments.
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "voa", version, about = "Exact checks for free-field realizations of level -1 affine vertex algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Output {
    /// Also write the report as JSON to this file.
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Record wall time per suite (makes the report non-reproducible).
    #[arg(long)]
    timings: bool,
}

#[derive(Args, Debug, Clone)]
struct Ell {
    /// Rank l; the Fock space is M_2l.
    #[arg(long, default_value_t = 2)]
    ell: usize,
}

#[derive(Args, Debug, Clone)]
struct MaxWeight {
    /// Highest conformal weight to compute (half-integers allowed).
    #[arg(long, default_value = "3")]
    max_weight: HalfInt,
}

#[derive(Args, Debug, Clone)]
struct Weights {
    /// Root system type, A or C.
    #[arg(long = "type", default_value = "C")]
    kind: RootType,
    /// Rank of the root system; defaults to l.
    #[arg(long)]
    rank: Option<usize>,
    /// Left weight, as `2w1+w3` or Dynkin labels `2,0,1`.
    #[arg(long)]
    lhs: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Virasoro vector decompositions as exact vector identities.
    Virasoro {
        #[command(flatten)]
        ell: Ell,
        #[command(flatten)]
        out: Output,
    },
    /// Singular vectors for the level -1 C_l table.
    Singular {
        #[command(flatten)]
        ell: Ell,
        #[command(flatten)]
        out: Output,
    },
    /// The Delta_3 determinant vanishes (l >= 3).
    Delta3 {
        #[arg(long, default_value_t = 3)]
        ell: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Exhaustive search for zeros of the classification polynomials (l >= 3).
    Classify {
        #[arg(long, default_value_t = 3)]
        ell: usize,
        #[arg(long, default_value_t = 8)]
        bound: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Tensor product decompositions.
    Tensor {
        #[command(flatten)]
        ell: Ell,
        #[command(flatten)]
        weights: Weights,
        /// Right weight.
        #[arg(long)]
        rhs: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Branching from A_{2l-1} to C_l.
    Branch {
        #[command(flatten)]
        ell: Ell,
        /// Overrides l.
        #[arg(long)]
        rank: Option<usize>,
        /// A_{2l-1} weight to restrict.
        #[arg(long)]
        lhs: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Commutant (coset) dimensions against Heisenberg characters.
    Commutant {
        #[command(flatten)]
        ell: Ell,
        #[command(flatten)]
        max_weight: MaxWeight,
        /// One of a1-fock, a1-even, c-fock, c-even, a1-in-c (or sec5, sec5-even, sec6, sec6-even, sec9); all by default.
        #[arg(long)]
        coset: Option<Coset>,
        #[command(flatten)]
        out: Output,
    },
    /// Theta-splitting of the A_{2l-1} vacuum span.
    Span {
        #[command(flatten)]
        ell: Ell,
        /// Highest weight to compute.
        #[arg(long, default_value = "2")]
        max_weight: HalfInt,
        #[command(flatten)]
        out: Output,
    },
    /// Weight multiplicities, or lowest conformal weights when no weight is given.
    Chars {
        #[command(flatten)]
        ell: Ell,
        #[command(flatten)]
        weights: Weights,
        #[command(flatten)]
        out: Output,
    },
    /// Every suite with default settings.
    All {
        #[command(flatten)]
        ell: Ell,
        #[command(flatten)]
        max_weight: MaxWeight,
        #[arg(long, default_value_t = 8)]
        bound: u32,
        #[command(flatten)]
        out: Output,
    },
}

/// Result of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub report: Option<Report>,
}

/// Parses `args` (including the program name), runs the requested suites and
/// writes the text report to `out`; messages about bad usage go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_PASS
            };
            return Outcome { code, report: None };
        }
    };
    let (report, output) = match execute(cli.command) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return Outcome { code: EXIT_USAGE, report: None };
        }
    };
    let _ = write!(out, "{report}");
    if let Some(path) = &output.json {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
            return Outcome { code: EXIT_USAGE, report: Some(report) };
        }
    }
    Outcome { code: exit_code(&report), report: Some(report) }
}

fn exit_code(report: &Report) -> i32 {
    if report.passed() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn hw(w: HalfInt) -> String {
    w.to_string()
}

fn execute(command: Command) -> Result<(Report, Output)> {
    Ok(match command {
        Command::Virasoro { ell: Ell { ell }, out } => {
            let mut r = Report::new("virasoro");
            r.param("ell", ell);
            timed(&mut r, &out, || suites::virasoro(ell))?;
            (r, out)
        }
        Command::Singular { ell: Ell { ell }, out } => {
            let mut r = Report::new("singular");
            r.param("ell", ell);
            timed(&mut r, &out, || suites::singular(ell))?;
            (r, out)
        }
        Command::Delta3 { ell, out } => {
            let mut r = Report::new("delta3");
            r.param("ell", ell);
            timed(&mut r, &out, || suites::delta3(ell))?;
            (r, out)
        }
        Command::Classify { ell, bound, out } => {
            let mut r = Report::new("classify");
            r.param("ell", ell);
            r.param("bound", bound);
            timed(&mut r, &out, || suites::classify(ell, bound))?;
            (r, out)
        }
        Command::Tensor { ell: Ell { ell }, weights, rhs, out } => {
            let mut r = Report::new("tensor");
            let rank = weights.rank.unwrap_or(ell);
            if weights.lhs.is_some() || rhs.is_some() {
                r.param("type", weights.kind.to_string());
                r.param("rank", rank);
                r.param("lhs", weights.lhs.clone().unwrap_or_default());
                r.param("rhs", rhs.clone().unwrap_or_default());
                if weights.lhs.is_none() || rhs.is_none() {
                    return Err(crate::error::Error::Parse("--lhs and --rhs must be given together".into()));
                }
            }
            timed(&mut r, &out, || suites::tensor(weights.kind, rank, weights.lhs.as_deref(), rhs.as_deref()))?;
            (r, out)
        }
        Command::Branch { ell: Ell { ell }, rank, lhs, out } => {
            let ell = rank.unwrap_or(ell);
            let mut r = Report::new("branch");
            r.param("ell", ell);
            if let Some(l) = &lhs {
                r.param("lhs", l.clone());
            }
            timed(&mut r, &out, || suites::branch(ell, lhs.as_deref()))?;
            (r, out)
        }
        Command::Commutant { ell: Ell { ell }, max_weight: MaxWeight { max_weight }, coset, out } => {
            let mut r = Report::new("commutant");
            r.param("ell", ell);
            r.param("max_weight", hw(max_weight));
            if let Some(c) = coset {
                r.param("coset", c.name());
            }
            timed(&mut r, &out, || suites::commutant(ell, max_weight, coset))?;
            (r, out)
        }
        Command::Span { ell: Ell { ell }, max_weight, out } => {
            let mut r = Report::new("span");
            r.param("ell", ell);
            r.param("max_weight", hw(max_weight));
            timed(&mut r, &out, || suites::span(ell, max_weight))?;
            (r, out)
        }
        Command::Chars { ell: Ell { ell }, weights, out } => {
            let mut r = Report::new("chars");
            let rank = weights.rank.unwrap_or(ell);
            r.param("type", weights.kind.to_string());
            r.param("rank", rank);
            if let Some(l) = &weights.lhs {
                r.param("lhs", l.clone());
            }
            timed(&mut r, &out, || suites::chars(weights.kind, rank, weights.lhs.as_deref()))?;
            (r, out)
        }
        Command::All { ell: Ell { ell }, max_weight: MaxWeight { max_weight }, bound, out } => {
            let mut r = Report::new("all");
            r.param("ell", ell);
            r.param("max_weight", hw(max_weight));
            r.param("bound", bound);
            // rank-3 statements run at l = 3 when l is smaller
            let big = ell.max(3);
            timed(&mut r, &out, || suites::virasoro(ell))?;
            timed(&mut r, &out, || suites::singular(ell))?;
            timed(&mut r, &out, || suites::delta3(big))?;
            timed(&mut r, &out, || suites::classify(big, bound))?;
            timed(&mut r, &out, || suites::tensor(RootType::C, ell, None, None))?;
            timed(&mut r, &out, || suites::branch(ell, None))?;
            timed(&mut r, &out, || suites::chars(RootType::C, ell, None))?;
            timed(&mut r, &out, || suites::commutant(ell, max_weight, None))?;
            timed(&mut r, &out, || suites::span(ell, max_weight))?;
            (r, out)
        }
    })
}

fn timed(r: &mut Report, out: &Output, suite: impl FnOnce() -> Result<Vec<Check>>) -> Result<()> {
    let mut res = Ok(());
    r.run(out.timings, || suite().unwrap_or_else(|e| {
        res = Err(e);
        Vec::new()
    }));
    res
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (Outcome, String, String) {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let mut argv = vec!["voa"];
        argv.extend_from_slice(args);
        let res = run(argv, &mut o, &mut e);
        (res, String::from_utf8(o).unwrap(), String::from_utf8(e).unwrap())
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&[]).0.code, EXIT_USAGE);
        assert_eq!(call(&["frobnicate"]).0.code, EXIT_USAGE);
        assert_eq!(call(&["virasoro", "--ell", "x"]).0.code, EXIT_USAGE);
        assert_eq!(call(&["commutant", "--coset", "nope"]).0.code, EXIT_USAGE);
        assert_eq!(call(&["tensor", "--lhs", "w1"]).0.code, EXIT_USAGE);
        let (o, _, e) = call(&["tensor", "--lhs", "w9", "--rhs", "w1"]);
        assert_eq!(o.code, EXIT_USAGE);
        assert!(e.contains("bad weight"), "{e}");
        let (o, out, _) = call(&["--help"]);
        assert_eq!(o.code, EXIT_PASS);
        assert!(out.contains("virasoro"));
    }

    #[test]
    fn failures_exit_one() {
        let mut r = Report::new("x");
        r.run(false, || vec![Check::new("a", "", Status::Pass, ""), Check::new("b", "", Status::Skip, "")]);
        assert_eq!(exit_code(&r), EXIT_PASS);
        r.run(false, || vec![Check::new("c", "", Status::Fail, "")]);
        assert_eq!(exit_code(&r), EXIT_FAIL);
    }

    #[test]
    fn small_suites() {
        let (o, out, _) = call(&["virasoro", "--ell", "2"]);
        assert_eq!(o.code, EXIT_PASS, "{out}");
        assert_eq!(o.report.unwrap().checks.len(), 3);
        let (o, out, _) = call(&["classify", "--ell", "3", "--bound", "8"]);
        assert_eq!(o.code, EXIT_PASS);
        assert!(out.contains("10 solutions"), "{out}");
        let (o, _, _) = call(&["tensor", "--type", "A", "--rank", "3", "--lhs", "w1", "--rhs", "w3"]);
        assert_eq!(o.code, EXIT_PASS);
        let (o, out, _) = call(&["delta3", "--ell", "2"]);
        assert_eq!(o.code, EXIT_PASS);
        assert!(out.contains("SKIP"));
    }
}
