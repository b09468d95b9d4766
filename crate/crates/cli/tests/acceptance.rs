//! End-to-end acceptance checks against the `binform` binary.
//!
//! Prints one PASS/FAIL line per criterion and exits nonzero if any fails.
//! All comparisons are exact.

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use binform::rational::{rat, Rational};
use serde_json::Value;

struct Run {
    code: Option<i32>,
    json: Value,
    elapsed: Duration,
}

fn run(args: &[&str]) -> Run {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_binform"))
        .args(args)
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    Run {
        code: out.status.code(),
        json,
        elapsed,
    }
}

fn pp(p: u64, e: u32) -> Rational {
    rat(p as i64).pow(e as i32)
}

/// `sign · Π pᵉ` from a factor list.
fn product(sign: i64, factors: &[(u64, u32)]) -> Rational {
    factors
        .iter()
        .fold(rat(sign), |acc, &(p, e)| &acc * &pp(p, e))
}

type Row = (&'static str, i64, &'static [(u64, u32)]);

/// ℬ₀ … ℬ₅: prefactor `5^a / (2^b 3^c)` and bracketed terms.
fn expected_table() -> Vec<BTreeMap<String, String>> {
    let table: [((u32, u32, u32), &[Row]); 6] = [
        (
            (15, 40, 0),
            &[
                ("K^3", -1, &[(2, 21)]),
                ("K^2*J^2", 1, &[(2, 14), (3, 1)]),
                ("K*J^4", -1, &[(2, 7), (3, 1)]),
                ("J^6", 1, &[]),
            ],
        ),
        (
            (16, 35, 3),
            &[
                ("K^3", 1, &[(2, 16), (7, 1)]),
                ("K^2*J^2", -1, &[(2, 10), (23, 1)]),
                ("K*J^4", 1, &[(2, 2), (71, 1)]),
                ("J^6", -1, &[]),
            ],
        ),
        (
            (16, 30, 6),
            &[
                ("L*K*J", 1, &[(2, 11), (5, 3)]),
                ("L*J^3", -1, &[(2, 4), (5, 3)]),
                ("K^3", -1, &[(2, 15), (3, 1)]),
                ("K^2*J^2", 1, &[(2, 7), (11, 1), (13, 1)]),
                ("K*J^4", -1, &[(3, 1), (131, 1)]),
                ("J^6", 1, &[(2, 1)]),
            ],
        ),
        (
            (16, 25, 9),
            &[
                ("L^2", -1, &[(2, 11), (5, 4)]),
                ("L*K*J", -1, &[(2, 9), (3, 1), (5, 3)]),
                ("L*J^3", 1, &[(2, 1), (5, 3), (11, 1)]),
                ("K^3", 1, &[(2, 9), (17, 1)]),
                ("K^2*J^2", -1, &[(2, 2), (23, 1), (37, 1)]),
                ("K*J^4", 1, &[(3, 5)]),
                ("J^6", -1, &[(2, 1)]),
            ],
        ),
        (
            (16, 22, 12),
            &[
                ("L*K*J", -1, &[(2, 5), (3, 2), (5, 3)]),
                ("L*J^3", -1, &[(5, 3), (29, 1)]),
                ("K^3", -1, &[(2, 7), (11, 1)]),
                ("K^2*J^2", -1, &[(7, 2), (83, 1)]),
                ("K*J^4", -1, &[(2, 2), (59, 1)]),
                ("J^6", 1, &[(2, 2)]),
            ],
        ),
        (
            (15, 15, 15),
            &[
                ("K^3", 1, &[(3, 3)]),
                ("K^2*J^2", -1, &[(3, 3)]),
                ("K*J^4", 1, &[(3, 2)]),
                ("J^6", -1, &[]),
            ],
        ),
    ];
    table
        .iter()
        .map(|&((a, b, c), rows)| {
            let pre = &pp(5, a) / &(&pp(2, b) * &pp(3, c));
            rows.iter()
                .map(|&(name, sign, f)| (name.to_string(), (&pre * &product(sign, f)).to_string()))
                .collect()
        })
        .collect()
}

fn coefficients(entry: &Value) -> BTreeMap<String, String> {
    entry["coefficients"]
        .as_object()
        .map(|m| {
            m.iter()
                .filter(|(_, v)| v.as_str() != Some("0"))
                .map(|(k, v)| (k.clone(), v.as_str().unwrap_or("").to_string()))
                .collect()
        })
        .unwrap_or_default()
}

fn within(r: &Run, secs: u64) -> bool {
    r.elapsed <= Duration::from_secs(secs)
}

fn ok(r: &Run) -> bool {
    r.code == Some(0) && r.json["pass"] == Value::Bool(true)
}

/// Whether the Cartesian ℬ₀ from the keyprop run equals 2⁻⁴⁰ Disc³.
static CARTESIAN_B0: OnceLock<bool> = OnceLock::new();

fn criterion_1() -> (bool, String) {
    let r = run(&["verify", "keyprop", "--timing"]);
    let _ = CARTESIAN_B0.set(r.json["details"]["b0_is_disc_cubed"] == Value::Bool(true));
    let expected = expected_table();
    let entries = r.json["details"]["entries"].as_array().cloned().unwrap_or_default();
    let mut matched = 0;
    for (i, want) in expected.iter().enumerate() {
        if entries.get(i).map(coefficients).as_ref() == Some(want)
            && entries[i]["match"] == Value::Bool(true)
        {
            matched += 1;
        }
    }
    let pass = ok(&r) && matched == 6 && within(&r, 900);
    (
        pass,
        format!(
            "keyprop: {matched}/6 closed forms reproduced exactly, {:.1}s",
            r.elapsed.as_secs_f64()
        ),
    )
}

fn criterion_2() -> (bool, String) {
    let r = run(&["verify", "relation"]);
    let syzygy = r.json["details"]["syzygy"] == Value::Bool(true);
    (
        ok(&r) && syzygy && within(&r, 10),
        format!("relation: 16H² syzygy holds in u, v, w: {syzygy}, {:.2}s", r.elapsed.as_secs_f64()),
    )
}

fn criterion_3() -> (bool, String) {
    let r = run(&["verify", "disc", "--seed", "2024"]);
    let d = &r.json["details"];
    let n = d["cases"].as_array().map_or(0, |c| {
        c.iter().filter(|x| x["match"] == Value::Bool(true)).count()
    });
    let pass = ok(&r) && d["symbolic"] == Value::Bool(true) && n == 20 && within(&r, 60);
    (
        pass,
        format!(
            "disc: symbolic {}, numeric {n}/20, {:.2}s",
            d["symbolic"],
            r.elapsed.as_secs_f64()
        ),
    )
}

fn criterion_4() -> (bool, String) {
    let r = run(&["verify", "prop48"]);
    let d = &r.json["details"];
    let shape = (d["rows"].as_u64(), d["cols"].as_u64(), d["rank"].as_u64());
    let pass = ok(&r) && shape == (Some(19), Some(21), Some(19)) && within(&r, 10);
    (
        pass,
        format!("prop48: 19x21 matrix has rank {:?}, {:.2}s", shape.2, r.elapsed.as_secs_f64()),
    )
}

fn criterion_5() -> (bool, String) {
    let r = run(&["verify", "dims"]);
    let rows = r.json["details"]["dims"].as_array().cloned().unwrap_or_default();
    let want = [(24, 7), (48, 19), (72, 37)];
    let good = want.iter().all(|&(d, n)| {
        rows.iter().any(|row| {
            row["degree"] == d && row["nu_sum"] == n && row["formula"] == n && row["basis"] == n
        })
    });
    (
        ok(&r) && good && within(&r, 1),
        format!("dims: 7, 19, 37 by ν-sum, formula and basis: {good}, {:.3}s", r.elapsed.as_secs_f64()),
    )
}

fn criterion_6() -> (bool, String) {
    let r = run(&["verify", "terms"]);
    let d = &r.json["details"];
    let counts: Vec<u64> = ["J", "K", "L", "H"].iter().filter_map(|n| d[n].as_u64()).collect();
    (
        ok(&r) && counts == [12, 68, 228, 848] && within(&r, 30),
        format!("terms: J, K, L, H have {counts:?} terms, {:.2}s", r.elapsed.as_secs_f64()),
    )
}

fn criterion_7() -> (bool, String) {
    let r = run(&["verify", "props", "--seed", "7"]);
    let d = &r.json["details"];
    let inv = d["sl2_invariance"]["passed"].as_u64().unwrap_or(0);
    let cartesian = CARTESIAN_B0.get().copied().unwrap_or(false);
    let b0 = cartesian
        && d["b0_disc_cube"]["symbolic"] == Value::Bool(true)
        && d["b0_disc_cube"]["passed"] == d["b0_disc_cube"]["trials"];
    let t = d["thm48_round_trip"]["passed"].as_u64().unwrap_or(0);
    let jd = d["j_data_vs_gl2"]["agree"].as_u64().unwrap_or(0);
    let jd_n = d["j_data_vs_gl2"]["pairs"].as_u64().unwrap_or(0);
    let pass = ok(&r) && inv >= 20 && b0 && t >= 200 && jd == jd_n && jd_n >= 25 && within(&r, 300);
    (
        pass,
        format!(
            "props: invariance {inv}/20, B0 = Disc³/2⁴⁰ {b0}, thm48 {t}/200, j-data vs orbits {jd}/{jd_n}, {:.2}s",
            r.elapsed.as_secs_f64()
        ),
    )
}

fn criterion_8() -> (bool, String) {
    let r = run(&["verify", "relation"]);
    let cf = &r.json["details"]["closed_forms"];
    let all = ["J", "K", "L", "H"].iter().all(|n| cf[n] == Value::Bool(true));
    (
        r.code == Some(0) && all && within(&r, 30),
        format!("oracle: transvectant J, K, L, H equal the closed forms: {all}, {:.2}s", r.elapsed.as_secs_f64()),
    )
}

fn main() -> ExitCode {
    let criteria: [fn() -> (bool, String); 8] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
    ];
    let mut failed = 0;
    for (i, c) in criteria.iter().enumerate() {
        let (pass, msg) = c();
        println!("{} criterion {}: {msg}", if pass { "PASS" } else { "FAIL" }, i + 1);
        if !pass {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
