use std::path::PathBuf;
use std::process::Command;

/// `(name, arguments)` for every golden transcript.
pub const CASES: &[(&str, &[&str])] = &[
    ("normalize_placement", &["--ring", "zmod:2^3", "normalize", "x*3 + 2*x^2"]),
    ("normalize_commutation", &["--ring", "truncpoly:3:3:c=2", "normalize", "x*t", "--right"]),
    ("normalize_json", &["--ring", "truncpoly:3:3:c=2", "--format", "json", "normalize", "(x + t)^2"]),
    ("normalize_series_zero", &["--ring", "zmod:2^3", "--prec", "3", "normalize", "x^3"]),
    ("normalize_syntax_error", &["--ring", "zmod:2^3", "normalize", "x^^2"]),
    ("normalize_unknown_literal", &["--ring", "zmod:2^3", "normalize", "x + t"]),
    ("normalize_exponent_overflow", &["--ring", "zmod:2^3", "normalize", "x^5000"]),
    ("normalize_missing_ring", &["normalize", "x"]),
    ("normalize_bad_preset", &["--ring", "zmod:6^1", "normalize", "x"]),
    ("mul_poly", &["--ring", "truncpoly:3:3:c=2", "mul", "x + t", "x + t"]),
    ("mul_series", &["--ring", "truncpoly:3:3:c=2", "--prec", "3", "mul", "x + t", "x - t"]),
    ("degree_series", &["--ring", "zmod:2^3", "--prec", "3", "degree", "2*x + 4"]),
    ("degree_json", &["--ring", "truncpoly:3:3:c=2", "--prec", "4", "--format", "json", "degree", "t*x^2"]),
    ("degree_needs_prec", &["--ring", "zmod:2^3", "degree", "x"]),
    ("symbol_commutation", &["--ring", "truncpoly:3:3:c=2", "--prec", "4", "symbol", "x*t"]),
    ("symbol_zero", &["--ring", "zmod:2^3", "--prec", "2", "symbol", "4"]),
    ("nilbound_truncpoly", &["--ring", "truncpoly:3:3:c=2", "nilbound"]),
    ("nilbound_json", &["--ring", "zmod:2^3", "--format", "json", "nilbound"]),
    ("nilbound_short_words", &["--ring", "truncpoly:3:3:c=2", "nilbound", "--n", "3", "--word-limit", "1"]),
    ("rank_z8", &["--ring", "zmod:2^3", "rank", "1,2;0,0"]),
    ("rank_json", &["--ring", "zmod:2^3", "--format", "json", "rank", "1,2;0,0"]),
    ("rank_zero_diagonal", &["--ring", "zmod:2^3", "rank", "6,5,5;5,6,5;5,5,6"]),
    ("rank_not_idempotent", &["--ring", "zmod:2^3", "rank", "1,1;0,1"]),
    ("rank_not_idempotent_json", &["--ring", "zmod:2^3", "--format", "json", "rank", "1,1;0,1"]),
    ("rank_series", &["--ring", "zmod:2^3", "--prec", "3", "rank", "1,6*x;0,0"]),
    ("rank_stably_free", &["--ring", "zmod:2^3", "rank", "1,2;0,0", "--stably-free", "1"]),
    ("rank_bad_shape", &["--ring", "zmod:2^3", "rank", "1,2;0"]),
    ("rank_non_constant", &["--ring", "zmod:2^3", "rank", "1,x;0,0"]),
    ("stable_iso_equal_ranks", &["--ring", "zmod:2^3", "stable-iso", "1,2;0,0", "1,0;0,0"]),
    ("stable_iso_padded", &["--ring", "truncpoly:3:3:c=2", "stable-iso", "1", "0,0;0,1"]),
    ("stable_iso_none", &["--ring", "zmod:2^3", "stable-iso", "1", "0"]),
    ("stable_iso_json", &["--ring", "zmod:2^3", "--format", "json", "stable-iso", "1", "0"]),
    ("complete_row", &["--ring", "zmod:2^3", "complete-row", "2,3"]),
    ("complete_row_truncpoly", &["--ring", "truncpoly:3:3:c=2", "complete-row", "t,1 + t,2"]),
    ("complete_row_not_unimodular", &["--ring", "zmod:2^3", "complete-row", "2,4"]),
    ("complete_row_json", &["--ring", "zmod:2^3", "--format", "json", "complete-row", "4,1"]),
    ("check_ring_axioms", &["--ring", "truncpoly:3:3:c=2", "check", "ring-axioms"]),
    ("check_sigma_derivation", &["--ring", "truncpoly:3:3:c=2", "check", "sigma-derivation"]),
    ("check_sigma_derivation_broken", &["--ring", "zmod:2^3:delta=broken", "check", "sigma-derivation"]),
    ("check_mkl_oracle", &["--ring", "truncpoly:3:3:c=2", "check", "mkl-oracle"]),
    ("check_poly_assoc", &["--ring", "zmod:2^3", "--seed", "7", "check", "poly-assoc"]),
    ("check_series_assoc", &["--ring", "truncpoly:3:3:c=2", "--prec", "5", "check", "series-assoc"]),
    ("check_series_assoc_needs_prec", &["--ring", "zmod:2^3", "check", "series-assoc"]),
    ("check_ideal_closure", &["--ring", "zmod:2^3", "--prec", "4", "--samples", "200", "--seed", "42", "check", "ideal-closure"]),
    ("check_graded_iso_zmod", &["--ring", "zmod:2^3", "--prec", "6", "check", "graded-iso"]),
    ("check_graded_iso_truncpoly", &["--ring", "truncpoly:3:3:c=2", "--prec", "6", "check", "graded-iso"]),
    ("check_graded_iso_json", &["--ring", "truncpoly:3:3:c=2:delta=zero", "--prec", "4", "--samples", "50", "--format", "json", "check", "graded-iso"]),
    ("check_k0_rank", &["--ring", "zmod:2^3", "--prec", "3", "--samples", "40", "check", "k0-rank"]),
    ("check_serre_transfer", &["--ring", "truncpoly:3:3:c=2", "--prec", "4", "--samples", "50", "check", "serre-transfer"]),
    ("check_unknown_suite", &["--ring", "zmod:2^3", "check", "foo"]),
];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

fn quote(arg: &str) -> String {
    if !arg.is_empty() && arg.chars().all(|c| c.is_ascii_alphanumeric() || "-_:^,.=/".contains(c)) {
        arg.to_string()
    } else {
        format!("'{arg}'")
    }
}

/// Runs the binary and renders command line, stdout, stderr and exit code.
pub fn transcript(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_skewring"))
        .args(args)
        .output()
        .expect("binary runs");
    let code = out.status.code().expect("exited normally");
    let line: Vec<String> = args.iter().map(|a| quote(a)).collect();
    let text = format!(
        "$ skewring {}\n--- stdout\n{}--- stderr\n{}--- exit {code}\n",
        line.join(" "),
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr),
    );
    (text, code)
}

/// Expected exit code, read from the last line of a golden transcript.
pub fn expected_exit(golden: &str) -> Option<i32> {
    golden.lines().last()?.strip_prefix("--- exit ")?.parse().ok()
}
