//! Replays every `$ shiftfact ...` transcript in the command-line chapter of the guide.

use std::process::Command;

const CHAPTER: &str = include_str!("../../../book/src/command-line.md");

struct Transcript {
    args: Vec<String>,
    expected: Vec<String>,
}

fn transcripts() -> Vec<Transcript> {
    let mut out = Vec::new();
    let mut in_console = false;
    for line in CHAPTER.lines() {
        if line.starts_with("```") {
            in_console = line == "```console";
            continue;
        }
        if !in_console {
            continue;
        }
        if let Some(cmd) = line.strip_prefix("$ shiftfact ") {
            out.push(Transcript { args: cmd.split_whitespace().map(String::from).collect(), expected: Vec::new() });
        } else if let Some(t) = out.last_mut() {
            t.expected.push(line.to_string());
        }
    }
    out
}

/// Equal as text, or both numbers within a relative 1e-9 (or both below 1e-12).
fn token_matches(got: &str, want: &str) -> bool {
    if got == want {
        return true;
    }
    match (got.parse::<f64>(), want.parse::<f64>()) {
        (Ok(g), Ok(w)) => (g.abs() < 1e-12 && w.abs() < 1e-12) || (g - w).abs() <= 1e-9 * w.abs(),
        _ => false,
    }
}

fn line_matches(got: &str, want: &str) -> bool {
    let split = |s: &str| -> Vec<String> {
        if s.contains(',') {
            s.split(',').map(String::from).collect()
        } else {
            s.split_whitespace().map(String::from).collect()
        }
    };
    let (g, w) = (split(got), split(want));
    g.len() == w.len() && g.iter().zip(&w).all(|(a, b)| token_matches(a, b))
}

#[test]
fn command_line_chapter_is_current() {
    let all = transcripts();
    assert!(all.len() >= 10, "found only {} transcripts", all.len());
    for t in all {
        let out = Command::new(env!("CARGO_BIN_EXE_shiftfact")).args(&t.args).env_remove("SHIFTFACT_SEED").output().unwrap();
        let stdout = String::from_utf8_lossy(&out.stdout);
        let got: Vec<&str> = stdout.lines().collect();
        let cmd = t.args.join(" ");
        if t.expected.is_empty() {
            assert_eq!(out.status.code(), Some(1), "`shiftfact {cmd}` should fail");
            continue;
        }
        assert_eq!(out.status.code(), Some(0), "`shiftfact {cmd}`: {}", String::from_utf8_lossy(&out.stderr));
        assert_eq!(got.len(), t.expected.len(), "`shiftfact {cmd}` printed:\n{stdout}");
        for (g, w) in got.iter().zip(&t.expected) {
            assert!(line_matches(g, w), "`shiftfact {cmd}`:\n  got  {g}\n  want {w}");
        }
    }
}

#[test]
fn pole_message_in_chapter() {
    let out = Command::new(env!("CARGO_BIN_EXE_shiftfact")).args(["eval", "--z", "-2", "--s", "1", "--t", "0.5"]).output().unwrap();
    let stderr = String::from_utf8_lossy(&out.stderr);
    let line = stderr.lines().next().unwrap();
    assert!(CHAPTER.contains(&format!("`{line}`")), "chapter does not quote `{line}`");
}
