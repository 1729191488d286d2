//! Acceptance suite: one PASS/FAIL line per criterion.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use qfact_cli::battery::{self, CriterionReport, Tally};
use serde_json::Value;

const EXAMPLE: &str = "A3; w[1,3] w[2,0] w[3,3]";

fn qfact(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_qfact"))
        .args(args)
        .output()
        .expect("qfact runs");
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap_or(-1), json)
}

fn cli_example() -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::default();

    let (code, v) = qfact(&["check3", EXAMPLE]);
    t.check(code == 0 && v["status"] == "prime", || {
        format!("check3: exit {code}, {v}")
    });

    let (code, v) = qfact(&["quochains", "--all", EXAMPLE]);
    let chains = v["quochains"].as_array().map_or(0, Vec::len);
    t.check(code == 0 && chains == 2 && v["pairwise_isomorphic"] == false, || {
        format!("quochains --all: exit {code}, {v}")
    });

    let (code, v) = qfact(&["snake-support", EXAMPLE]);
    t.check(code == 0 && v["snake_support"] == false, || {
        format!("snake-support: exit {code}, {v}")
    });

    CriterionReport {
        id: 1,
        title: "check3 prime, two non-isomorphic quochains, no snake support",
        tally: t,
        elapsed: start.elapsed(),
        limit: Duration::from_secs(1),
    }
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut emit = |r: CriterionReport| {
        println!("{r}");
        if !r.passed() {
            failed += 1;
        }
    };
    emit(cli_example());
    for r in battery::run_all() {
        emit(r);
    }
    if failed == 0 {
        println!("acceptance: all 8 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
