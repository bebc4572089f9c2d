//! Shared by the `cli` and `acceptance` test targets.
#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub struct Example {
    pub name: String,
    pub exit: i32,
    pub args: Vec<String>,
}

pub fn examples() -> Vec<Example> {
    let text = std::fs::read_to_string(golden_dir().join("examples.txt")).expect("examples manifest");
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let parts: Vec<&str> = l.split('|').map(str::trim).collect();
            assert_eq!(parts.len(), 3, "bad manifest line {l:?}");
            Example {
                name: parts[0].to_string(),
                exit: parts[1].parse().expect("exit code"),
                args: parts[2].split_whitespace().map(String::from).collect(),
            }
        })
        .collect()
}

/// Runs `tqft` in the fixtures directory with TQFT_SEED cleared.
pub fn run(args: &[String]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_tqft"))
        .args(args)
        .current_dir(fixtures())
        .env_remove("TQFT_SEED")
        .output()
        .expect("spawn tqft");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8 stdout"))
}

/// Compares one example against its golden file; `TQFT_BLESS=1` rewrites it.
pub fn check(ex: &Example) -> Result<(), String> {
    let (code, stdout) = run(&ex.args);
    let path = golden_dir().join(format!("{}.json", ex.name));
    if std::env::var_os("TQFT_BLESS").is_some() {
        std::fs::write(&path, &stdout).map_err(|e| e.to_string())?;
    }
    if code != ex.exit {
        return Err(format!("{}: exit {code}, expected {}", ex.name, ex.exit));
    }
    let want = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if want != stdout {
        return Err(format!("{}: output differs\n  got:  {stdout}  want: {want}", ex.name));
    }
    Ok(())
}
