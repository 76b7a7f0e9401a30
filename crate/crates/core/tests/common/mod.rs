//! Independent oracles and the CLI golden cases, shared by the integration
//! tests and the acceptance runner. Nothing here calls the code it checks
//! except to fetch the value under test.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use serde_json::Value;

pub fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn schema_dir() -> PathBuf {
    manifest_dir().join("../../schemas/v1")
}

pub fn golden_dir() -> PathBuf {
    manifest_dir().join("tests/golden")
}

pub fn fixture_path(name: &str) -> PathBuf {
    manifest_dir().join("tests/fixtures").join(name)
}

// ---------------------------------------------------------------------------
// Markov: solve the equation directly.

fn isqrt(n: u128) -> Option<u128> {
    let mut s = (n as f64).sqrt() as u128;
    while s * s > n {
        s -= 1;
    }
    while (s + 1) * (s + 1) <= n {
        s += 1;
    }
    (s * s == n).then_some(s)
}

/// Every sorted solution of `a^2+b^2+c^2 = 3abc` with `c <= max`, found by
/// solving the quadratic in `c` for each pair `a <= b`.
pub fn markov_brute_force(max: u64) -> BTreeSet<[u64; 3]> {
    let mut out = BTreeSet::new();
    for a in 1..=max as u128 {
        for b in a..=max as u128 {
            let s = 3 * a * b;
            let disc = s * s;
            let sub = 4 * (a * a + b * b);
            if disc < sub {
                continue;
            }
            let Some(root) = isqrt(disc - sub) else { continue };
            for top in [s + root, s - root] {
                if top % 2 == 0 {
                    let c = top / 2;
                    if c >= b && c <= max as u128 {
                        out.insert([a as u64, b as u64, c as u64]);
                    }
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Cyclic quotients.

pub fn inverse_mod(q: i64, r: i64) -> i64 {
    (1..r).find(|x| (x * q) % r == 1).expect("unit")
}

/// Minimal resolution discrepancies from the two boundary recursions of the
/// chain: `a_i = -1 + (lambda_i + mu_i) / r`.
pub fn discrepancy_closed_form(r: i64, q: i64, chain: &[i64]) -> Vec<BigRational> {
    let s = chain.len();
    let mut lambda = vec![0i64; s + 2];
    lambda[0] = r;
    lambda[1] = q;
    for i in 1..s {
        lambda[i + 1] = chain[i - 1] * lambda[i] - lambda[i - 1];
    }
    let mut mu = vec![0i64; s + 2];
    mu[s + 1] = r;
    mu[s] = if r == 1 { 1 } else { inverse_mod(q, r) };
    for i in (2..=s).rev() {
        mu[i - 1] = chain[i - 1] * mu[i] - mu[i + 1];
    }
    (1..=s)
        .map(|i| BigRational::new(BigInt::from(lambda[i] + mu[i] - r), BigInt::from(r)))
        .collect()
}

/// Continued fraction by hand: `b = ceil(r/q)`, recurse on `(q, bq - r)`.
pub fn hj_by_hand(mut r: i64, mut q: i64) -> Vec<i64> {
    let mut out = Vec::new();
    while q > 0 {
        let b = (r + q - 1) / q;
        out.push(b);
        (r, q) = (q, b * q - r);
    }
    out
}

/// Order of the canonical class: smallest `k` with `k(1+q) = 0 mod r`.
pub fn index_brute_force(r: i64, q: i64) -> i64 {
    (1..=r).find(|k| (k * (1 + q)) % r == 0).unwrap()
}

/// Chains grown forward from `[4]` by the two Wahl moves, keeping those
/// that evaluate to `n^2` with `n <= max_n`.
pub fn wahl_chains_forward(max_n: i64) -> BTreeSet<Vec<i64>> {
    let mut out = BTreeSet::new();
    let mut stack = vec![vec![4i64]];
    let bound = max_n * max_n;
    while let Some(c) = stack.pop() {
        let (r, _) = chain_value(&c);
        if r > bound || !out.insert(c.clone()) {
            continue;
        }
        let mut left = vec![2];
        left.extend(&c[..c.len() - 1]);
        left.push(c[c.len() - 1] + 1);
        let mut right = vec![c[0] + 1];
        right.extend(&c[1..]);
        right.push(2);
        stack.push(left);
        stack.push(right);
    }
    out
}

pub fn chain_value(chain: &[i64]) -> (i64, i64) {
    let (mut num, mut den) = (1i64, 0i64);
    for b in chain.iter().rev() {
        (num, den) = (b * num - den, num);
    }
    (num, den)
}

// ---------------------------------------------------------------------------
// Toric self-intersections.

fn det(u: (i64, i64), v: (i64, i64)) -> i64 {
    u.0 * v.1 - u.1 * v.0
}

/// Self-intersection of the curve of ray `v` between its neighbours `prev`
/// and `next`, listed counterclockwise.
pub fn toric_self_intersection(prev: (i64, i64), v: (i64, i64), next: (i64, i64)) -> BigRational {
    BigRational::new(
        BigInt::from(-det(prev, next)),
        BigInt::from(det(prev, v) * det(v, next)),
    )
}

/// Frozen self-intersection fixtures: the ruling of `P(1,1,2)`, and for
/// each coprime `m, n <= max` the exceptional curve of the `(m,n)` weighted
/// blowup and the degree-one coordinate line of `P(m,n,1)`.
pub fn toric_fixtures(max: i64) -> Value {
    let ruling = toric_self_intersection((-1, -2), (1, 0), (0, 1));
    let mut pairs = Vec::new();
    for m in 1..=max {
        for n in 1..=max {
            if m.gcd(&n) != 1 {
                continue;
            }
            let exceptional = toric_self_intersection((1, 0), (m, n), (0, 1));
            let line = toric_self_intersection((0, 1), (-m, -n), (1, 0));
            pairs.push(serde_json::json!({
                "m": m,
                "n": n,
                "exceptional": exceptional.to_string(),
                "line": line.to_string(),
            }));
        }
    }
    serde_json::json!({
        "ruling_p112": ruling.to_string(),
        "mn_blowup": pairs,
    })
}

// ---------------------------------------------------------------------------
// CLI golden cases: (file stem, schema name, argv).

pub const GOLDEN_CASES: &[(&str, &str, &[&str])] = &[
    ("markov_enumerate_30", "markov-enumerate", &["markov", "enumerate", "--max", "30"]),
    ("markov_enumerate_1000", "markov-enumerate", &["markov", "enumerate", "--max", "1000"]),
    ("markov_mutate", "markov-mutate", &["markov", "mutate", "1", "5", "13", "--pos", "0"]),
    ("sing_info_4_1", "sing-info", &["sing", "info", "4", "1"]),
    ("sing_info_25_9", "sing-info", &["sing", "info", "25", "9"]),
    ("sing_info_7_6", "sing-info", &["sing", "info", "7", "6"]),
    ("sing_info_19_7", "sing-info", &["sing", "info", "19", "7"]),
    ("sing_wahl_5_2", "sing-wahl", &["sing", "wahl", "5", "2"]),
    ("sing_wahl_13_5", "sing-wahl", &["sing", "wahl", "13", "5"]),
    ("wps_analyze_1_4_25", "wps-analyze", &["wps", "analyze", "1", "4", "25"]),
    ("wps_analyze_1_2_3", "wps-analyze", &["wps", "analyze", "1", "2", "3"]),
    ("wps_strata_2_5_29", "wps-strata", &["wps", "strata", "2", "5", "29"]),
    ("bundle_1_2_5", "bundle", &["bundle", "from-stratum", "1", "2", "5", "--keep", "5"]),
    ("bundle_1_1_2", "bundle", &["bundle", "from-stratum", "1", "1", "2", "--keep", "2"]),
    ("bundle_slopes_200", "bundle-slopes", &["bundle", "slopes", "--max-rank", "200"]),
    ("t1_basic", "boundary-t1", &["boundary", "t1", "--c1", "1/2", "--c2", "1/2", "--genus", "0", "--orbifold", "2"]),
    ("t1_blowup", "boundary-t1", &["boundary", "t1", "--c1", "-1/6", "--c2", "1/6", "--orbifold", "2,3"]),
    ("t1_elliptic", "boundary-t1", &["boundary", "t1", "--c1", "1", "--c2", "-1", "--genus", "1"]),
    ("plane_catalog_4", "plane-catalog", &["boundary", "plane-catalog", "4"]),
    ("plane_catalog_20", "plane-catalog", &["boundary", "plane-catalog", "20"]),
    ("recognize_fork", "boundary-recognize", &["boundary", "recognize", "--fork", "2", "4", "4", "3"]),
    ("recognize_cone", "boundary-recognize", &["boundary", "recognize", "--cone-degree", "9"]),
    ("recognize_cusp", "boundary-recognize", &["boundary", "recognize", "--cusp", "3,2,2,2,2,2,2,2"]),
];

pub struct Run {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn ksba(args: &[&str]) -> Run {
    ksba_env(args, &[])
}

pub fn ksba_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ksba"));
    cmd.args(args).env_remove("KSBA_MAX_DIGITS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("spawn ksba");
    Run {
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
        code: out.status.code().unwrap_or(-1),
    }
}

pub fn schema_errors(schema: &str, instance: &Value) -> Vec<String> {
    let path = schema_dir().join(format!("{schema}.json"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    let schema: Value = serde_json::from_str(&text).unwrap();
    let validator = jsonschema::validator_for(&schema).expect("valid schema");
    validator.iter_errors(instance).map(|e| e.to_string()).collect()
}

/// Compares both output formats of every golden case with the files on
/// disk, or rewrites them when `UPDATE_GOLDEN` is set. Returns mismatches.
pub fn check_golden() -> Vec<String> {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut problems = Vec::new();
    for (stem, schema, args) in GOLDEN_CASES {
        let mut json_args = args.to_vec();
        json_args.push("--json");
        for (ext, argv) in [("txt", args.to_vec()), ("json", json_args)] {
            let run = ksba(&argv);
            if run.code != 0 {
                problems.push(format!("{stem}.{ext}: exit {} {}", run.code, run.stderr.trim()));
                continue;
            }
            let again = ksba(&argv);
            if again.stdout != run.stdout {
                problems.push(format!("{stem}.{ext}: output differs between runs"));
            }
            if ext == "json" {
                let value: Value = serde_json::from_str(&run.stdout).unwrap();
                for e in schema_errors(schema, &value) {
                    problems.push(format!("{stem}.json: schema {schema}: {e}"));
                }
            }
            let path = golden_dir().join(format!("{stem}.{ext}"));
            if update {
                std::fs::write(&path, &run.stdout).unwrap();
            } else {
                match std::fs::read_to_string(&path) {
                    Ok(want) if want == run.stdout => {}
                    Ok(_) => problems.push(format!("{stem}.{ext}: differs from golden file")),
                    Err(e) => problems.push(format!("{stem}.{ext}: {e}")),
                }
            }
        }
    }
    problems
}
