//! Command-line front end.
//!
//! Exit codes: 0 accept/success, 1 reject/infeasible, 2 usage or format
//! error, 3 internal invariant failure. The first line on stdout is a single
//! machine-readable verdict; details follow on later lines or on stderr.

pub mod format;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;

use crate::budget::Budget;
use crate::criteria::{
    check_losing_lists_bipartite, check_losing_seq_k, check_score_lists_bipartite,
    check_score_seq_k, dual_bipartite, dual_k, Verdict,
};
use crate::error::{Error, Result};
use crate::model::{
    format_list, losing_scores, losing_scores_k, scores, scores_k, BipartiteParams, ListMode,
    ScoreListPair, UniformParams,
};
use crate::oracle::{
    candidate_lists, candidate_seqs_k, enumerate_bipartite, enumerate_k, random_hypertournament,
    random_k_hypertournament,
};
use crate::realize::{
    realize_flow_k_with_budget, realize_flow_with_budget, realize_inductive_with_budget,
    FlowOutcome, FlowOutcomeK, Method, RealizationResult,
};

pub use format::{parse_instance, serialize_instance, Instance};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "hypertourney",
    version,
    about = "Check, realize and enumerate (losing) score lists of bipartite hypertournaments and k-hypertournaments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether losing lists (--a/--b, or --r) are realizable.
    CheckLosing(ListArgs),
    /// Decide whether score lists (--c/--d, or --s) are realizable.
    CheckScore(ListArgs),
    /// Build a hypertournament with the given losing lists.
    Realize(RealizeArgs),
    /// Validate an instance file and print its lists.
    Verify { file: PathBuf },
    /// Print every realizable losing list (pair).
    Enumerate(EnumerateArgs),
    /// Convert losing lists to score lists or back.
    Dual(ListArgs),
    /// Generate a seeded random instance.
    Random(RandomArgs),
}

#[derive(Debug, Args)]
struct ModeArgs {
    /// Bipartite mode; --params m,n,h,k. Inferred from --params when omitted.
    #[arg(long, conflicts_with = "uniform")]
    bipartite: bool,
    /// k-hypertournament mode; --params n,k.
    #[arg(long)]
    uniform: bool,
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true)]
    params: IntList,
}

#[derive(Debug, Args)]
struct ListArgs {
    #[command(flatten)]
    mode: ModeArgs,
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true)]
    a: Option<IntList>,
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true)]
    b: Option<IntList>,
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true)]
    c: Option<IntList>,
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true)]
    d: Option<IntList>,
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true)]
    r: Option<IntList>,
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true)]
    s: Option<IntList>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Inductive,
    Flow,
}

#[derive(Debug, Args)]
struct RealizeArgs {
    #[command(flatten)]
    lists: ListArgs,
    /// Defaults to inductive for bipartite lists and flow for uniform ones.
    #[arg(long, value_enum)]
    method: Option<MethodArg>,
    /// Write the instance here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print the construction steps to stderr.
    #[arg(long)]
    trace: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EnumerateMethod {
    /// Sweep all candidates through the characterization check.
    Predicate,
    /// Enumerate every loser assignment.
    BruteForce,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[command(flatten)]
    mode: ModeArgs,
    #[arg(long, value_enum, default_value = "predicate")]
    method: EnumerateMethod,
}

#[derive(Debug, Args)]
struct RandomArgs {
    #[command(flatten)]
    mode: ModeArgs,
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Comma-separated non-negative integers.
#[derive(Debug, Clone)]
struct IntList(Vec<u64>);

fn parse_list(raw: &str) -> std::result::Result<IntList, String> {
    raw.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<u64>()
                .map_err(|_| format!("'{t}' is not a non-negative integer"))
        })
        .collect::<std::result::Result<_, _>>()
        .map(IntList)
}

#[derive(Debug, Clone, Copy)]
enum Mode {
    Bipartite(BipartiteParams),
    Uniform(UniformParams),
}

impl ModeArgs {
    fn resolve(&self) -> Result<Mode> {
        let p: Vec<usize> = self.params.0.iter().map(|&x| x as usize).collect();
        match p.len() {
            4 if !self.uniform => Ok(Mode::Bipartite(BipartiteParams::new(
                p[0], p[1], p[2], p[3],
            )?)),
            2 if !self.bipartite => Ok(Mode::Uniform(UniformParams::new(p[0], p[1])?)),
            _ => Err(Error::usage(if self.uniform {
                "--uniform takes --params n,k"
            } else if self.bipartite {
                "--bipartite takes --params m,n,h,k"
            } else {
                "--params takes m,n,h,k (bipartite) or n,k (uniform)"
            })),
        }
    }
}

fn required<'a>(flag: &str, v: &'a Option<IntList>) -> Result<&'a [u64]> {
    v.as_ref()
        .map(|l| l.0.as_slice())
        .ok_or_else(|| Error::usage(format!("missing --{flag}")))
}

/// Runs one command line (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = Budget::from_env().and_then(|budget| dispatch(cli.command, &budget, out, err));
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

fn io(e: std::io::Error) -> Error {
    Error::usage(format!("i/o error: {e}"))
}

fn print_verdict(v: &Verdict, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    writeln!(out, "{v}").map_err(io)?;
    for w in &v.warnings {
        writeln!(err, "warning: {w}").map_err(io)?;
    }
    Ok(if v.accepted { EXIT_OK } else { EXIT_REJECT })
}

fn dispatch(
    cmd: Command,
    budget: &Budget,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    match cmd {
        Command::CheckLosing(args) => {
            let v = match args.mode.resolve()? {
                Mode::Bipartite(p) => check_losing_lists_bipartite(
                    p,
                    required("a", &args.a)?,
                    required("b", &args.b)?,
                )?,
                Mode::Uniform(p) => check_losing_seq_k(p, required("r", &args.r)?)?,
            };
            print_verdict(&v, out, err)
        }
        Command::CheckScore(args) => {
            let v = match args.mode.resolve()? {
                Mode::Bipartite(p) => check_score_lists_bipartite(
                    p,
                    required("c", &args.c)?,
                    required("d", &args.d)?,
                )?,
                Mode::Uniform(p) => check_score_seq_k(p, required("s", &args.s)?)?,
            };
            print_verdict(&v, out, err)
        }
        Command::Realize(args) => realize(args, budget, out, err),
        Command::Verify { file } => verify(&file, out),
        Command::Enumerate(args) => enumerate(args, budget, out),
        Command::Dual(args) => dual(args, out),
        Command::Random(args) => random(args, budget, out),
    }
}

fn emit_instance(
    text: &str,
    path: Option<&PathBuf>,
    out: &mut dyn Write,
    summary: &str,
) -> Result<()> {
    match path {
        Some(path) => {
            fs::write(path, text).map_err(io)?;
            writeln!(out, "{summary}").map_err(io)
        }
        None => out.write_all(text.as_bytes()).map_err(io),
    }
}

fn realize(
    args: RealizeArgs,
    budget: &Budget,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let lists = &args.lists;
    match lists.mode.resolve()? {
        Mode::Bipartite(p) => {
            let (a, b) = (required("a", &lists.a)?, required("b", &lists.b)?);
            let result: RealizationResult = match args.method.unwrap_or(MethodArg::Inductive) {
                MethodArg::Inductive => {
                    let v = check_losing_lists_bipartite(p, a, b)?;
                    if !v.accepted {
                        return print_verdict(&v, out, err);
                    }
                    realize_inductive_with_budget(p, a, b, budget)?
                }
                MethodArg::Flow => match realize_flow_with_budget(p, a, b, budget)? {
                    FlowOutcome::Feasible(r) => r,
                    FlowOutcome::Infeasible(inf) => {
                        writeln!(out, "INFEASIBLE {inf}").map_err(io)?;
                        return Ok(EXIT_REJECT);
                    }
                },
            };
            if args.trace {
                for step in &result.trace {
                    writeln!(err, "{step}").map_err(io)?;
                }
            }
            let fallbacks = result.fallbacks();
            if fallbacks > 0 {
                writeln!(
                    err,
                    "warning: {fallbacks} sub-instance(s) realized by the flow fallback"
                )
                .map_err(io)?;
            }
            let text = format::serialize_bipartite(&result.hypertournament);
            let summary = format!(
                "OK method={} arcs={} fallbacks={fallbacks}",
                result.method,
                result.hypertournament.arcs().len()
            );
            emit_instance(&text, args.out.as_ref(), out, &summary)?;
            Ok(EXIT_OK)
        }
        Mode::Uniform(p) => {
            if matches!(args.method, Some(MethodArg::Inductive)) {
                return Err(Error::usage(
                    "k-hypertournaments are realized by --method flow only",
                ));
            }
            let r = required("r", &lists.r)?;
            match realize_flow_k_with_budget(p, r, budget)? {
                FlowOutcomeK::Feasible(h) => {
                    let text = format::serialize_uniform(&h);
                    let summary = format!(
                        "OK method={} arcs={} fallbacks=0",
                        Method::Flow,
                        h.arcs().len()
                    );
                    emit_instance(&text, args.out.as_ref(), out, &summary)?;
                    Ok(EXIT_OK)
                }
                FlowOutcomeK::Infeasible(inf) => {
                    writeln!(out, "INFEASIBLE {inf}").map_err(io)?;
                    Ok(EXIT_REJECT)
                }
            }
        }
    }
}

fn verify(file: &PathBuf, out: &mut dyn Write) -> Result<i32> {
    let text = fs::read_to_string(file)
        .map_err(|e| Error::usage(format!("cannot read {}: {e}", file.display())))?;
    match parse_instance(&text)? {
        Instance::Bipartite(h) => {
            let (_, losing) = losing_scores(&h)?;
            let (_, score) = scores(&h)?;
            writeln!(out, "OK losing {losing}").map_err(io)?;
            writeln!(out, "score {score}").map_err(io)?;
        }
        Instance::Uniform(h) => {
            let (_, losing) = losing_scores_k(&h)?;
            let (_, score) = scores_k(&h)?;
            writeln!(out, "OK losing R={}", format_list(&losing)).map_err(io)?;
            writeln!(out, "score S={}", format_list(&score)).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn enumerate(args: EnumerateArgs, budget: &Budget, out: &mut dyn Write) -> Result<i32> {
    let lines: Vec<String> = match (args.mode.resolve()?, args.method) {
        (Mode::Bipartite(p), EnumerateMethod::Predicate) => {
            let mut lines = Vec::new();
            for (a, b) in candidate_lists(p, budget)? {
                if check_losing_lists_bipartite(p, &a, &b)?.accepted {
                    lines.push(ScoreListPair::new(a, b, ListMode::Losing)?.to_string());
                }
            }
            lines
        }
        (Mode::Bipartite(p), EnumerateMethod::BruteForce) => enumerate_bipartite(p, budget)?
            .achieved
            .into_iter()
            .map(|(a, b)| ScoreListPair::new(a, b, ListMode::Losing).map(|x| x.to_string()))
            .collect::<Result<_>>()?,
        (Mode::Uniform(p), EnumerateMethod::Predicate) => {
            let mut lines = Vec::new();
            for r in candidate_seqs_k(p, budget)? {
                if check_losing_seq_k(p, &r)?.accepted {
                    lines.push(format!("R={}", format_list(&r)));
                }
            }
            lines
        }
        (Mode::Uniform(p), EnumerateMethod::BruteForce) => enumerate_k(p, budget)?
            .achieved
            .iter()
            .map(|r| format!("R={}", format_list(r)))
            .collect(),
    };
    let mut text = lines.iter().map(|l| format!("{l}\n")).join("");
    text.push_str(&format!("count={}\n", lines.len()));
    out.write_all(text.as_bytes()).map_err(io)?;
    Ok(EXIT_OK)
}

fn dual(args: ListArgs, out: &mut dyn Write) -> Result<i32> {
    match args.mode.resolve()? {
        Mode::Bipartite(p) => {
            let lists = match (&args.a, &args.b, &args.c, &args.d) {
                (Some(a), Some(b), None, None) => {
                    ScoreListPair::new(a.0.clone(), b.0.clone(), ListMode::Losing)?
                }
                (None, None, Some(c), Some(d)) => {
                    ScoreListPair::new(c.0.clone(), d.0.clone(), ListMode::Score)?
                }
                _ => return Err(Error::usage("dual takes either --a/--b or --c/--d")),
            };
            writeln!(out, "{}", dual_bipartite(p, &lists)?).map_err(io)?;
        }
        Mode::Uniform(p) => {
            let line = match (&args.r, &args.s) {
                (Some(r), None) => format!("S={}", format_list(&dual_k(p, &r.0)?)),
                (None, Some(s)) => format!("R={}", format_list(&dual_k(p, &s.0)?)),
                _ => return Err(Error::usage("dual takes either --r or --s")),
            };
            writeln!(out, "{line}").map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn random(args: RandomArgs, budget: &Budget, out: &mut dyn Write) -> Result<i32> {
    let (text, arcs) = match args.mode.resolve()? {
        Mode::Bipartite(p) => {
            let h = random_hypertournament(p, args.seed, budget)?;
            (format::serialize_bipartite(&h), h.arcs().len())
        }
        Mode::Uniform(p) => {
            let h = random_k_hypertournament(p, args.seed, budget)?;
            (format::serialize_uniform(&h), h.arcs().len())
        }
    };
    emit_instance(&text, args.out.as_ref(), out, &format!("OK arcs={arcs}"))?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("hypertourney").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn check_losing_accept_and_reject() {
        let (code, out, _) = run_str(&[
            "check-losing",
            "--bipartite",
            "--params",
            "2,2,2,2",
            "--a",
            "0,0",
            "--b",
            "0,1",
        ]);
        assert_eq!((code, out.as_str()), (0, "ACCEPT\n"));
        let (code, out, _) = run_str(&[
            "check-losing",
            "--bipartite",
            "--params",
            "2,2,2,2",
            "--a",
            "0,0",
            "--b",
            "0,0",
        ]);
        assert_eq!(
            (code, out.as_str()),
            (1, "REJECT equality_failure p=2 q=2 lhs=0 rhs=1\n")
        );
    }

    #[test]
    fn usage_errors_exit_two() {
        for args in [
            &[
                "check-losing",
                "--params",
                "2,2,2,2",
                "--a",
                "1,0",
                "--b",
                "0,0",
            ][..],
            &[
                "check-losing",
                "--params",
                "2,2,2,2",
                "--a",
                "-1,0",
                "--b",
                "0,0",
            ],
            &[
                "check-losing",
                "--params",
                "2,2,2",
                "--a",
                "0,0",
                "--b",
                "0,1",
            ],
            &[
                "check-losing",
                "--uniform",
                "--params",
                "2,2,2,2",
                "--r",
                "0,1",
            ],
            &["check-losing", "--params", "2,2,2,2", "--a", "0,0"],
            &["frobnicate"],
        ] {
            let (code, _, err) = run_str(args);
            assert_eq!(code, 2, "{args:?}: {err}");
        }
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("check-losing"));
    }

    #[test]
    fn dual_both_directions() {
        let (_, out, _) = run_str(&["dual", "--params", "3,2,2,2", "--a", "0,1,1", "--b", "0,1"]);
        assert_eq!(out, "C=[1,1,2] D=[2,3]\n");
        let (_, out, _) = run_str(&["dual", "--params", "3,2,2,2", "--c", "1,1,2", "--d", "2,3"]);
        assert_eq!(out, "A=[0,1,1] B=[0,1]\n");
        let (_, out, _) = run_str(&["dual", "--params", "3,2", "--r", "0,1,2"]);
        assert_eq!(out, "S=[0,1,2]\n");
    }
}
