#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn gwgrass(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_gwgrass"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// Command lines whose output is frozen in `tests/golden/`.
pub const GOLDEN: &[(&[&str], &str)] = &[
    (
        &["decompose", "--d", "2", "--e", "2", "--json"],
        "decompose_2_2.json",
    ),
    (
        &["dual", "--d", "4", "--e", "4", "--partition", "4,3,3,1"],
        "dual_4_4_4331.txt",
    ),
];

// (command, args, expected exit code)
pub const EXIT_MATRIX: &[(&str, &[&str], i32)] = &[
    ("enumerate", &["--d", "3", "--e", "3"], 0),
    ("enumerate", &["--d", "3"], 2),
    ("enumerate", &["--d", "0", "--e", "2"], 2),
    (
        "enumerate",
        &["--d", "1", "--e", "3", "--symmetric-only"],
        3,
    ),
    (
        "dual",
        &["--d", "4", "--e", "4", "--partition", "4,2,1,1"],
        0,
    ),
    ("dual", &["--d", "4", "--e", "4", "--partition", "1,2"], 2),
    ("dual", &["--d", "4", "--e", "4", "--partition", "x"], 2),
    ("dual", &["--d", "2", "--e", "2", "--partition", "3,1"], 3),
    ("decompose", &["--d", "2", "--e", "3"], 0),
    ("decompose", &["--d", "2", "--e", "2", "--shift", "q"], 2),
    ("decompose", &["--d", "30", "--e", "30", "--verify"], 3),
    ("decompose", &["--d", "1", "--e", "1"], 4),
    ("decompose", &["--d", "3", "--e", "5", "--json"], 4),
    ("classify", &["--rank", "2", "--bound", "3"], 0),
    ("classify", &["--rank", "0", "--bound", "3"], 2),
    ("count", &["--d", "4", "--e", "6"], 0),
    ("count", &["--d", "4", "--e", "6", "--method", "bogus"], 2),
    ("count", &["--d", "3", "--e", "3"], 3),
    ("bogus", &[], 2),
];

/// Runs one matrix row, describing the first violation.
pub fn check_exit(cmd: &str, args: &[&str], want: i32) -> Result<(), String> {
    let mut full = vec![cmd];
    full.extend_from_slice(args);
    let run = gwgrass(&full);
    let line = full.join(" ");
    if run.code != want {
        return Err(format!(
            "gwgrass {line}: exit {} (wanted {want}): {}",
            run.code, run.stderr
        ));
    }
    let streams_ok = if want == 0 {
        run.stderr.is_empty()
    } else {
        run.stdout.is_empty() && !run.stderr.is_empty()
    };
    if !streams_ok {
        return Err(format!("gwgrass {line}: unexpected output streams"));
    }
    Ok(())
}
