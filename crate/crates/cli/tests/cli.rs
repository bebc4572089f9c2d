mod common;

use std::process::Command;

use common::{check, examples, fixtures, run};
use serde_json::Value;

fn args(s: &str) -> Vec<String> {
    s.split_whitespace().map(String::from).collect()
}

fn parse(stdout: &str) -> Value {
    serde_json::from_str(stdout).unwrap_or_else(|e| panic!("not JSON ({e}): {stdout}"))
}

#[test]
fn documented_examples_round_trip() {
    let failures: Vec<String> = examples().iter().filter_map(|e| check(e).err()).collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn fixed_outputs() {
    assert_eq!(run(&args("betti --complex hollow_triangle.txt")).1, "{\"betti\": [1, 1], \"euler\": 0}\n");
    assert_eq!(run(&args("fuse --cft ising sigma sigma")).1, "{\"channels\": [\"1\", \"psi\"]}\n");
    let su2 = parse(&run(&args("su2k -k 2")).1);
    assert!((su2["d"].as_f64().unwrap() - 2f64.sqrt()).abs() < 1e-15);
}

#[test]
fn exit_codes_and_error_documents() {
    for (a, code) in [
        ("no-such-command", 1),
        ("betti", 1),
        ("su2k -k notanumber", 1),
        ("wilson --dims 3y3", 1),
        ("betti --complex missing.txt", 2),
        ("su2k -k 0", 2),
        ("blocks --cft ising --field sigma -n 4 --target nope", 2),
    ] {
        let (got, out) = run(&args(a));
        assert_eq!(got, code, "{a}");
        let doc = parse(&out);
        assert_eq!(doc["status"], "error", "{a}");
        assert!(!doc["diagnostics"].as_array().unwrap().is_empty(), "{a}");
    }
}

#[test]
fn malformed_file_reports_line() {
    let dir = std::env::temp_dir().join(format!("tqft-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "0,1\n\n1,q\n").unwrap();
    let (code, out) = run(&["betti".into(), "--complex".into(), bad.display().to_string()]);
    assert_eq!(code, 2);
    let msg = parse(&out)["diagnostics"][0].as_str().unwrap().to_string();
    assert!(msg.contains("bad.txt") && msg.contains("line 3"), "{msg}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn help_is_available_everywhere() {
    for sub in ["", "betti", "hodge", "cs-z", "jones", "fuse", "blocks", "su2k", "monodromy", "wilson", "dyson", "propagator"] {
        let mut a = args(sub);
        a.push("--help".into());
        let (code, out) = run(&a);
        assert_eq!(code, 0, "{sub}");
        assert!(out.contains("Usage"), "{sub}");
    }
}

#[test]
fn pretty_output_is_the_same_document() {
    let (_, compact) = run(&args("dyson --levels 3 --omega 0.7 --eps 0.1 --order 2 --t 2"));
    let (_, pretty) = run(&args("dyson --levels 3 --omega 0.7 --eps 0.1 --order 2 --t 2 --pretty"));
    assert!(pretty.contains("\n  "));
    assert_eq!(parse(&compact), parse(&pretty));
}

#[test]
fn seed_comes_from_environment() {
    let with_env = |v: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_tqft"))
            .args(args("wilson --dims 3x3 --loop 2x1"))
            .current_dir(fixtures())
            .env("TQFT_SEED", v)
            .output()
            .unwrap();
        String::from_utf8(out.stdout).unwrap()
    };
    assert_eq!(with_env("0"), run(&args("wilson --dims 3x3 --loop 2x1")).1);
    assert_eq!(with_env("9"), run(&args("wilson --dims 3x3 --loop 2x1 --seed 9")).1);
    assert_ne!(with_env("9"), with_env("0"));
}

#[test]
fn field_round_trips_through_out() {
    let dir = std::env::temp_dir().join(format!("tqft-field-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("field.json");
    let f = file.display().to_string();
    let (code, first) = run(&args(&format!("wilson --dims 2x3x2 --seed 4 --loop 2x2 --out {f}")));
    assert_eq!(code, 0);
    let (_, again) = run(&args(&format!("wilson --field {f} --loop 2x2")));
    assert_eq!(parse(&first)["wilson_loop"], parse(&again)["wilson_loop"]);
    let stored: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(stored["links"].as_array().unwrap().len(), 12 * 3);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn commands_do_not_write_files_without_out() {
    let before: Vec<_> = std::fs::read_dir(fixtures()).unwrap().map(|e| e.unwrap().file_name()).collect();
    for e in examples() {
        run(&e.args);
    }
    let after: Vec<_> = std::fs::read_dir(fixtures()).unwrap().map(|e| e.unwrap().file_name()).collect();
    assert_eq!(before, after);
}
