#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

use seesaw_cli::schema::*;

/// Frozen invocations: (file stem, arguments).
pub const CASES: &[(&str, &[&str])] = &[
    ("01-lr", &["lr", "--lam", "3,2,1", "--mu", "2,1", "--nu", "2,1"]),
    ("02-restrict", &["restrict", "--lam", "3:[1,0,-1]", "--m", "1", "--n", "2", "--json"]),
    ("03-tensor-gl", &["tensor-gl", "--sign", "+", "--mu", "1:[0]", "--nu", "1:[0]", "--box", "2"]),
    ("04-tensor-gl-minus", &["tensor-gl", "--sign", "-", "--mu", "2:[1,0]", "--nu", "1:[-1]", "--box", "2", "--json"]),
    (
        "05-tensor-w",
        &[
            "tensor-w",
            "--a",
            "L(n=1, lam=[0], s=0) * L(n=1, lam=[1], s=1/2)",
            "--b",
            "L(n=1, lam=[0], s=1/2)",
            "--box",
            "2",
            "--json",
        ],
    ),
    ("06-exponents", &["exponents", "--m", "L(n=2, lam=[2,0], s=1/3) * L(n=1, lam=[0], s=1/2)"]),
    ("07-xi", &["xi", "--m", "L(n=1, lam=[0], s=1/2)", "--upto", "1"]),
    ("08-iso", &["iso", "--a", "L(n=2, lam=[2,0], s=1/3)", "--b", "L(n=2, lam=[3,1], s=4/3)", "--json"]),
    ("09-char", &["char", "--lam", "2:[1,0]", "--sign", "+", "--order", "10", "--json"]),
    ("10-fock-verify", &["fock-verify", "--n", "2", "--sign", "-", "--order", "4"]),
    ("11-tensor-char", &["tensor-char", "--mu", "1:[0]", "--nu", "1:[0]", "--sign", "+", "--order", "6"]),
    ("12-congruent", &["tensor-w", "--a", "L(n=1, lam=[0], s=1/3) * L(n=1, lam=[0], s=4/3)", "--b", "1"]),
];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

fn quote(arg: &str) -> String {
    if arg.chars().any(|c| c.is_whitespace() || "[]()*".contains(c)) {
        format!("'{arg}'")
    } else {
        arg.to_string()
    }
}

/// Runs the binary and renders the transcript stored in a golden file.
pub fn transcript(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_seesaw")).args(args).output().expect("binary runs");
    let mut s = format!("$ seesaw {}\n", args.iter().map(|a| quote(a)).collect::<Vec<_>>().join(" "));
    s += &format!("exit: {}\n", out.status.code().unwrap_or(-1));
    s += "--- stdout\n";
    s += &String::from_utf8(out.stdout).expect("utf-8 stdout");
    s += "--- stderr\n";
    s += &String::from_utf8(out.stderr).expect("utf-8 stderr");
    s
}

/// Compares every case with its golden file; `SEESAW_BLESS=1` rewrites them.
/// Returns the names of mismatching cases.
pub fn check_goldens() -> Vec<String> {
    let bless = std::env::var_os("SEESAW_BLESS").is_some();
    let mut failed = Vec::new();
    for (name, args) in CASES {
        let path = golden_dir().join(format!("{name}.golden"));
        let actual = transcript(args);
        if bless {
            std::fs::write(&path, &actual).expect("write golden");
            continue;
        }
        let expected = std::fs::read_to_string(&path).unwrap_or_default();
        if expected != actual {
            failed.push(name.to_string());
        }
    }
    failed
}

/// The stdout section of a transcript.
pub fn stdout_of(transcript: &str) -> &str {
    let start = transcript.find("--- stdout\n").expect("stdout marker") + "--- stdout\n".len();
    let end = transcript.find("--- stderr\n").expect("stderr marker");
    &transcript[start..end]
}

fn reemit<T: serde::de::DeserializeOwned + serde::Serialize>(text: &str) -> String {
    let value: T = serde_json::from_str(text).expect("payload matches schema");
    serde_json::to_string_pretty(&value).unwrap() + "\n"
}

/// Parses a JSON payload of the given subcommand with its schema type and
/// serializes it again.
pub fn roundtrip(subcommand: &str, text: &str) -> String {
    match subcommand {
        "lr" => reemit::<LrJson>(text),
        "restrict" => reemit::<RestrictJson>(text),
        "tensor-gl" => reemit::<GlDecompositionJson>(text),
        "tensor-w" => reemit::<WDecompositionJson>(text),
        "exponents" => reemit::<ExponentsJson>(text),
        "xi" => reemit::<XiJson>(text),
        "iso" => reemit::<IsoJson>(text),
        "char" => reemit::<CharJson>(text),
        "fock-verify" => reemit::<FockJson>(text),
        "tensor-char" => reemit::<TensorCharJson>(text),
        other => panic!("unknown subcommand {other}"),
    }
}
