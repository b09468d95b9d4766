//! `binform`: exact invariants of binary quintics from the command line.
//!
//! Exit codes: 0 on success (or a true answer), 1 when a check or comparison
//! comes out false, 2 on usage, parse or domain errors.

use std::process::ExitCode;

use binform::beauville::{
    beauville_numeric, beauville_pipeline, gl2_equivalent, same_j_data, thm48_decompose, Witness,
};
use binform::invariants::{graded_dimension, monomial_basis, quintic_invariants, JklMonomial};
use binform::verify::{self, Target};
use binform::{BinaryForm, Error, Rational};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "binform", version, about = "Exact invariants of binary quintics")]
struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// J, K, L, H and Disc of a quintic given as "a0,a1,a2,a3,a4,a5".
    Invariants {
        #[arg(allow_hyphen_values = true)]
        coeffs: String,
    },
    /// The six degree-24 invariants ℬ₀ … ℬ₅.
    Beauville {
        #[arg(allow_hyphen_values = true)]
        coeffs: String,
        /// Run the resultant construction instead of the closed forms.
        #[arg(long)]
        pipeline: bool,
    },
    /// Run a batch check: keyprop, relation, disc, prop48, dims, terms, props.
    Verify {
        target: String,
        #[arg(long)]
        timing: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Dimension of the degree-d invariants.
    Dim { d: u64 },
    /// The monomials L^l K^k J^j of degree d.
    Basis { d: u64 },
    /// Split L^a1 K^a2 J^a3 into factors of degree 48.
    Decompose48 { a1: u32, a2: u32, a3: u32 },
    /// Whether two stable quintics are in the same GL₂ orbit up to scaling.
    Equiv {
        #[arg(allow_hyphen_values = true)]
        c1: String,
        #[arg(allow_hyphen_values = true)]
        c2: String,
    },
    /// Whether two quintics have the same j-data (proportional ℬ-vectors).
    Jdata {
        #[arg(allow_hyphen_values = true)]
        c1: String,
        #[arg(allow_hyphen_values = true)]
        c2: String,
    },
}

enum Outcome {
    True,
    False,
}

fn quintic(s: &str) -> Result<BinaryForm, Error> {
    let f = BinaryForm::parse_wire(s)?;
    if f.order() != 5 {
        return Err(Error::WrongOrder {
            expected: 5,
            got: f.order(),
        });
    }
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    Ok(f)
}

fn emit(json_mode: bool, value: &Value, text: impl FnOnce() -> String) {
    if json_mode {
        println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
    } else {
        println!("{}", text());
    }
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn triple(m: &JklMonomial) -> Value {
    json!([m.l, m.k, m.j])
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let js = cli.json;
    match cli.cmd {
        Cmd::Invariants { coeffs } => {
            let f = quintic(&coeffs)?;
            let iv = quintic_invariants(&f)?;
            let v = iv.to_json();
            emit(js, &v, || {
                ["J", "K", "L", "H", "Disc"]
                    .iter()
                    .map(|n| format!("{n} = {}", v[n].as_str().unwrap_or_default()))
                    .collect::<Vec<_>>()
                    .join("\n")
            });
        }
        Cmd::Beauville { coeffs, pipeline } => {
            let f = quintic(&coeffs)?;
            let b: Vec<Rational> = if pipeline {
                let (bv, _) = beauville_pipeline(&f)?;
                bv.values().expect("numeric input").to_vec()
            } else {
                beauville_numeric(&f)?.to_vec()
            };
            if b[0].is_zero() {
                eprintln!("warning: the discriminant vanishes, so B0 = 0");
            }
            let names: Vec<String> = (0..6).map(|i| format!("B{i}")).collect();
            let v: Value = names
                .iter()
                .zip(strings(&b))
                .map(|(n, s)| (n.clone(), Value::String(s)))
                .collect::<serde_json::Map<_, _>>()
                .into();
            emit(js, &v, || {
                names
                    .iter()
                    .zip(&b)
                    .map(|(n, x)| format!("{n} = {x}"))
                    .collect::<Vec<_>>()
                    .join("\n")
            });
        }
        Cmd::Verify {
            target,
            timing,
            seed,
        } => {
            let t: Target = target.parse()?;
            let report = verify::run(t, seed, timing)?;
            println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            return Ok(if report.pass { Outcome::True } else { Outcome::False });
        }
        Cmd::Dim { d } => {
            let n = graded_dimension(d)?;
            emit(js, &json!({ "degree": d, "dimension": n }), || n.to_string());
        }
        Cmd::Basis { d } => {
            let b = monomial_basis(d)?;
            let v = json!(b.iter().map(triple).collect::<Vec<_>>());
            emit(js, &v, || {
                b.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
            });
        }
        Cmd::Decompose48 { a1, a2, a3 } => {
            let f = thm48_decompose(JklMonomial::new(a1, a2, a3))?;
            let v = json!(f.iter().map(triple).collect::<Vec<_>>());
            emit(js, &v, || {
                f.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
            });
        }
        Cmd::Equiv { c1, c2 } => {
            let e = gl2_equivalent(&quintic(&c1)?, &quintic(&c2)?)?;
            let v = serde_json::to_value(&e).expect("serializable");
            emit(js, &v, || match &e.witness {
                Witness::Scalar { power, value, s } => {
                    let root = s.as_ref().map(|s| format!(" (s = {s})")).unwrap_or_default();
                    format!("equivalent: s^{power} = {value}{root}")
                }
                Witness::Mismatch { reason } => format!("not equivalent: {reason}"),
            });
            return Ok(if e.equivalent { Outcome::True } else { Outcome::False });
        }
        Cmd::Jdata { c1, c2 } => {
            let same = same_j_data(&quintic(&c1)?, &quintic(&c2)?)?;
            emit(js, &json!({ "same_j_data": same }), || {
                if same { "same j-data" } else { "different j-data" }.to_string()
            });
            return Ok(if same { Outcome::True } else { Outcome::False });
        }
    }
    Ok(Outcome::True)
}

fn configure_threads() {
    if let Some(n) = std::env::var("BINFORM_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        // Fails only if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    configure_threads();
    match run(cli) {
        Ok(Outcome::True) => ExitCode::SUCCESS,
        Ok(Outcome::False) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
