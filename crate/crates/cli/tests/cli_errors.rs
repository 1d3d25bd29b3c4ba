//! Exit-code contract through the real binary: 0 pass, 1 mismatch,
//! 2 usage error.

use std::process::Command;

fn srlab(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_srlab"))
        .args(args)
        .output()
        .expect("run srlab")
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["explore", "--ring", "Q9"],
        vec!["explore", "--ring", "Z6x"],
        vec!["explore", "--ring", "Z6", "--mult-set", "17"],
        vec!["explore", "--ring", "Z8xZ8", "--max-order", "32"],
        vec!["krull", "--ring", "Z6", "--ideal", "2,bad"],
        vec!["survey", "--order-bound", "1"],
        vec!["survey", "--order-bound", "40", "--max-order", "32"],
        vec!["survey", "--checks", "no-such-check"],
        vec!["explore", "--ring", "Z4", "--mult-set", "2", "--strict-mult-set"],
        vec!["no-such-subcommand"],
    ] {
        let out = srlab(&args);
        assert_eq!(
            out.status.code(),
            Some(2),
            "{args:?} -> stdout {} stderr {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn happy_paths_exit_0() {
    for args in [
        vec!["explore", "--ring", "Z2xZ3", "--mult-set", "3"],
        vec!["localize", "--ring", "Z15", "--mult-set", "3"],
        vec!["krull", "--ring", "Z12", "--mult-set", "2", "--ideal", "6"],
        vec!["krull", "--ring", "Z12", "--mult-set", "2", "--ideal", "6", "--chain-reading", "literal"],
        vec!["survey", "--order-bound", "6", "--checks", "s-domain-iff-s-cancellation"],
        vec!["survey", "--order-bound", "6", "--sequential"],
    ] {
        let out = srlab(&args);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{args:?} -> stderr {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn json_file_output_is_written() {
    let dir = std::env::temp_dir().join("srlab-test-json");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("explore.json");
    let out = srlab(&[
        "explore",
        "--ring",
        "Z6",
        "--mult-set",
        "2",
        "--no-timestamp",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed["schema_version"], 1);
    assert_eq!(parsed["command"], "explore");
    assert!(parsed["records"].as_array().unwrap().len() > 5);
    std::fs::remove_file(&path).ok();
}
