// SPDX-License-Identifier: Apache-2.0
#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

/// Fixed commands whose output is pinned under `tests/golden/`.
pub const CASES: &[(&str, &[&str])] = &[
    ("analyze_wild_cubic", &["analyze", "--p", "2", "x^3+1", "x", "--format", "json"]),
    ("analyze_identity", &["analyze", "--p", "2", "x", "1"]),
    ("analyze_random_f9", &["analyze", "--p", "3", "--m", "2", "--seed", "11", "--format", "json"]),
    ("belyi_wild_f2", &["belyi-wild", "--p", "2", "--places", "x^2+x+1", "--format", "json"]),
    ("belyi_wild_f3", &["belyi-wild", "--p", "3", "--places", "x+1"]),
    ("belyi_tame_f3", &["belyi-tame", "--p", "3", "--places", "x+1,x+2", "--format", "json"]),
    ("pseudotame_square_completion", &["pseudotame", "--p", "2", "w^4+w^6+w^7", "--at", "w", "--format", "json"]),
    ("laurent_f4", &["laurent", "--p", "2", "--m", "2", "1/(w^3+z*w)", "--at", "w=0", "--prec", "8", "--format", "json"]),
    ("factor_f3", &["factor", "--p", "3", "x^8+x^4+2", "--format", "json"]),
    ("field_f256", &["field", "--p", "2", "--m", "8", "--format", "json"]),
];

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.out"))
}

pub fn run(args: &[&str]) -> (Vec<u8>, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_ramforge"))
        .args(args)
        .env_remove("RAMFORGE_MAX_DEGREE")
        .output()
        .expect("binary runs");
    (out.stdout, out.status.code().unwrap_or(-1))
}
