#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn golden(name: &str) -> String {
    std::fs::read_to_string(golden_dir().join(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn hypertourney(args: &[&str]) -> Output {
    let out = Command::new(env!("CARGO_BIN_EXE_hypertourney"))
        .args(args)
        .env_remove("HYPERTOURNEY_BUDGET")
        .output()
        .expect("binary runs");
    Output {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub enum Expect {
    Stdout(&'static str),
    GoldenStdout(&'static str),
    StderrContains(&'static str),
}

/// `{dir}` in an argument is replaced by a per-case scratch directory;
/// `{golden}` by the golden directory.
pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub code: i32,
    pub expect: Expect,
    /// Scratch file that must equal a golden file afterwards.
    pub file: Option<(&'static str, &'static str)>,
}

pub const CASES: &[Case] = &[
    Case {
        name: "check-losing accepts the single-arc lists",
        args: &[
            "check-losing",
            "--bipartite",
            "--params",
            "2,2,2,2",
            "--a",
            "0,0",
            "--b",
            "0,1",
        ],
        code: 0,
        expect: Expect::Stdout("ACCEPT\n"),
        file: None,
    },
    Case {
        name: "check-losing reports the failed total",
        args: &[
            "check-losing",
            "--bipartite",
            "--params",
            "2,2,2,2",
            "--a",
            "0,0",
            "--b",
            "0,0",
        ],
        code: 1,
        expect: Expect::Stdout("REJECT equality_failure p=2 q=2 lhs=0 rhs=1\n"),
        file: None,
    },
    Case {
        name: "check-losing reports an interior violation",
        args: &[
            "check-losing",
            "--params",
            "3,3,2,2",
            "--a",
            "0,0,4",
            "--b",
            "0,0,5",
        ],
        code: 1,
        expect: Expect::Stdout("REJECT inequality_violation p=2 q=2 lhs=0 rhs=1\n"),
        file: None,
    },
    Case {
        name: "check-losing uniform accept",
        args: &[
            "check-losing",
            "--uniform",
            "--params",
            "3,2",
            "--r",
            "0,1,2",
        ],
        code: 0,
        expect: Expect::Stdout("ACCEPT\n"),
        file: None,
    },
    Case {
        name: "check-losing uniform total failure",
        args: &[
            "check-losing",
            "--uniform",
            "--params",
            "3,2",
            "--r",
            "0,0,0",
        ],
        code: 1,
        expect: Expect::Stdout("REJECT equality_failure j=3 lhs=0 rhs=3\n"),
        file: None,
    },
    Case {
        name: "check-losing rejects unsorted input as usage error",
        args: &[
            "check-losing",
            "--params",
            "2,2,2,2",
            "--a",
            "1,0",
            "--b",
            "0,0",
        ],
        code: 2,
        expect: Expect::StderrContains("not non-decreasing"),
        file: None,
    },
    Case {
        name: "check-losing warns outside h,k > 1",
        args: &[
            "check-losing",
            "--params",
            "2,2,1,1",
            "--a",
            "1,1",
            "--b",
            "1,1",
        ],
        code: 0,
        expect: Expect::StderrContains("warning: h=1 k=1"),
        file: None,
    },
    Case {
        name: "check-score accepts the dual lists",
        args: &[
            "check-score",
            "--bipartite",
            "--params",
            "3,2,2,2",
            "--c",
            "1,1,2",
            "--d",
            "2,3",
        ],
        code: 0,
        expect: Expect::Stdout("ACCEPT\n"),
        file: None,
    },
    Case {
        name: "check-score reports the failed total",
        args: &[
            "check-score",
            "--params",
            "2,2,2,2",
            "--c",
            "1,1",
            "--d",
            "1,1",
        ],
        code: 1,
        expect: Expect::Stdout("REJECT equality_failure p=2 q=2 lhs=4 rhs=3\n"),
        file: None,
    },
    Case {
        name: "check-score uniform total failure",
        args: &["check-score", "--params", "3,2", "--s", "2,2,2"],
        code: 1,
        expect: Expect::Stdout("REJECT equality_failure j=3 lhs=6 rhs=3\n"),
        file: None,
    },
    Case {
        name: "realize inductive writes the canonical instance",
        args: &[
            "realize",
            "--bipartite",
            "--params",
            "3,2,2,2",
            "--a",
            "0,1,1",
            "--b",
            "0,1",
            "--method",
            "inductive",
            "--out",
            "{dir}/f.hkt",
        ],
        code: 0,
        expect: Expect::Stdout("OK method=inductive arcs=3 fallbacks=0\n"),
        file: Some(("f.hkt", "realize_inductive_3222.hkt")),
    },
    Case {
        name: "realize inductive to stdout",
        args: &[
            "realize", "--params", "3,2,2,2", "--a", "0,1,1", "--b", "0,1",
        ],
        code: 0,
        expect: Expect::GoldenStdout("realize_inductive_3222.hkt"),
        file: None,
    },
    Case {
        name: "realize flow",
        args: &[
            "realize", "--params", "3,2,2,2", "--a", "0,1,1", "--b", "0,1", "--method", "flow",
        ],
        code: 0,
        expect: Expect::GoldenStdout("realize_flow_3222.hkt"),
        file: None,
    },
    Case {
        name: "realize inductive rejects",
        args: &[
            "realize", "--params", "3,3,2,2", "--a", "0,0,4", "--b", "0,0,5",
        ],
        code: 1,
        expect: Expect::Stdout("REJECT inequality_violation p=2 q=2 lhs=0 rhs=1\n"),
        file: None,
    },
    Case {
        name: "realize flow reports infeasibility",
        args: &[
            "realize", "--params", "3,3,2,2", "--a", "0,0,4", "--b", "0,0,5", "--method", "flow",
        ],
        code: 1,
        expect: Expect::Stdout("INFEASIBLE max_flow=8 required=9\n"),
        file: None,
    },
    Case {
        name: "realize uniform refuses the inductive method",
        args: &[
            "realize",
            "--params",
            "3,2",
            "--r",
            "0,1,2",
            "--method",
            "inductive",
        ],
        code: 2,
        expect: Expect::StderrContains("flow only"),
        file: None,
    },
    Case {
        name: "verify the inductive golden",
        args: &["verify", "{golden}/realize_inductive_3222.hkt"],
        code: 0,
        expect: Expect::GoldenStdout("verify_3222.out"),
        file: None,
    },
    Case {
        name: "verify the flow golden",
        args: &["verify", "{golden}/realize_flow_3222.hkt"],
        code: 0,
        expect: Expect::GoldenStdout("verify_3222.out"),
        file: None,
    },
    Case {
        name: "verify single arc",
        args: &["verify", "{golden}/single_arc.hkt"],
        code: 0,
        expect: Expect::GoldenStdout("verify_single_arc.out"),
        file: None,
    },
    Case {
        name: "verify uniform",
        args: &["verify", "{golden}/uniform_32.hkt"],
        code: 0,
        expect: Expect::GoldenStdout("verify_uniform_32.out"),
        file: None,
    },
    Case {
        name: "verify rejects a surplus arc",
        args: &["verify", "{golden}/two_arcs.hkt"],
        code: 2,
        expect: Expect::StderrContains("error: line 3: expected 1 arc, found 2"),
        file: None,
    },
    Case {
        name: "verify missing file",
        args: &["verify", "{dir}/nope.hkt"],
        code: 2,
        expect: Expect::StderrContains("cannot read"),
        file: None,
    },
    Case {
        name: "enumerate by predicate",
        args: &["enumerate", "--bipartite", "--params", "2,2,2,2"],
        code: 0,
        expect: Expect::GoldenStdout("enumerate_2222.out"),
        file: None,
    },
    Case {
        name: "enumerate by brute force",
        args: &[
            "enumerate",
            "--params",
            "2,2,2,2",
            "--method",
            "brute-force",
        ],
        code: 0,
        expect: Expect::GoldenStdout("enumerate_2222.out"),
        file: None,
    },
    Case {
        name: "enumerate uniform",
        args: &["enumerate", "--uniform", "--params", "3,2"],
        code: 0,
        expect: Expect::GoldenStdout("enumerate_u32.out"),
        file: None,
    },
    Case {
        name: "dual losing to score",
        args: &["dual", "--params", "2,2,2,2", "--a", "0,0", "--b", "0,1"],
        code: 0,
        expect: Expect::Stdout("C=[1,1] D=[0,1]\n"),
        file: None,
    },
    Case {
        name: "dual score to losing",
        args: &["dual", "--params", "3,2,2,2", "--c", "1,1,2", "--d", "2,3"],
        code: 0,
        expect: Expect::Stdout("A=[0,1,1] B=[0,1]\n"),
        file: None,
    },
    Case {
        name: "dual uniform",
        args: &["dual", "--uniform", "--params", "3,2", "--r", "0,1,2"],
        code: 0,
        expect: Expect::Stdout("S=[0,1,2]\n"),
        file: None,
    },
    Case {
        name: "dual rejects entries above the incidence",
        args: &["dual", "--params", "3,2,2,2", "--a", "0,0,3", "--b", "0,0"],
        code: 2,
        expect: Expect::StderrContains("exceeds the per-vertex incidence"),
        file: None,
    },
    Case {
        name: "random writes a file",
        args: &[
            "random",
            "--params",
            "3,3,2,2",
            "--seed",
            "7",
            "--out",
            "{dir}/r.hkt",
        ],
        code: 0,
        expect: Expect::Stdout("OK arcs=9\n"),
        file: None,
    },
    Case {
        name: "unknown subcommand",
        args: &["frobnicate"],
        code: 2,
        expect: Expect::StderrContains("unrecognized subcommand"),
        file: None,
    },
];

/// Runs one case; returns a description of the first mismatch.
pub fn run_case(case: &Case) -> Result<(), String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let dir_s = dir.path().to_string_lossy().into_owned();
    let golden_s = golden_dir().to_string_lossy().into_owned();
    let args: Vec<String> = case
        .args
        .iter()
        .map(|a| a.replace("{dir}", &dir_s).replace("{golden}", &golden_s))
        .collect();
    let argv: Vec<&str> = args.iter().map(String::as_str).collect();
    let out = hypertourney(&argv);
    if out.code != case.code {
        return Err(format!(
            "exit code {} (expected {}); stdout={:?} stderr={:?}",
            out.code, case.code, out.stdout, out.stderr
        ));
    }
    match &case.expect {
        Expect::Stdout(s) if out.stdout != *s => {
            return Err(format!("stdout {:?}, expected {:?}", out.stdout, s))
        }
        Expect::GoldenStdout(g) if out.stdout != golden(g) => {
            return Err(format!("stdout {:?} differs from golden {g}", out.stdout))
        }
        Expect::StderrContains(s) if !out.stderr.contains(s) => {
            return Err(format!("stderr {:?} lacks {:?}", out.stderr, s))
        }
        _ => {}
    }
    if let Some((scratch, g)) = case.file {
        let written =
            std::fs::read_to_string(dir.path().join(scratch)).map_err(|e| e.to_string())?;
        if written != golden(g) {
            return Err(format!("{scratch} = {written:?} differs from golden {g}"));
        }
    }
    Ok(())
}
