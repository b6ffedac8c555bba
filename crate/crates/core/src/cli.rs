//! JSON front end shared by the `brauer-calc` binary and the golden tests.
//!
//! Every subcommand reads one JSON document (from `--input FILE` or stdin)
//! and writes one JSON document to stdout. Exit codes: 0 for success or a
//! positive verdict, 1 for a negative verdict, 2 for any input error, in
//! which case the output is `{"error": {"code": ..., "message": ...}}`.

use std::fs;

use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::brauer::{
    index_over_function_field, same_cyclic_subgroup, splits_over_function_field, AlgebraSpec,
    BrauerClass,
};
use crate::exactnum::{CycElem, CyclotomicField, Rational};
use crate::galoispoints::{
    galois_orbit, galois_stability_check, general_position_check, pad_orbit, vandermonde_lift,
};
use crate::geometry::{
    birational_sympow_exists, bs_invariants, equivalence_report, sympow_dimension_model,
    sympow_verdict, ReportOptions,
};
use crate::ktheory::{k0_image_generators, sign_discrepancy, ChowExpansion};
use crate::normform::{norm_form, norm_multiplicativity_check, smooth_point_check};
use crate::{Error, Result};

#[derive(Parser, Debug)]
#[command(name = "brauer-calc", version, about = "Exact invariants of central simple algebras over Q")]
struct Cli {
    /// Read the JSON input from FILE instead of stdin.
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<String>,
    /// Pretty-print the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    /// Comma-separated square-free d for `report`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, global = true)]
    battery: Option<Vec<i64>>,
    /// Random trials for the norm multiplicativity check in `normpoly`.
    #[arg(long, global = true)]
    trials: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// Brauer class and Brauer–Severi invariants of an algebra.
    Class,
    /// Tensor product of two classes.
    Tensor,
    /// Whether two classes generate the same cyclic subgroup.
    Subgroup,
    /// Generators of the image of K0 in K0(P^n).
    K0,
    /// AS-bundle expansion of p(h-1)^l.
    Chow,
    /// Reduced-norm polynomial.
    Normpoly,
    /// Smoothness of a point of the norm hypersurface.
    Smooth,
    /// Symmetric-power verdicts.
    Sympow,
    /// Equivalence report for two algebras of equal degree.
    Report,
    /// Galois-stable point configuration on the moment curve.
    Points,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

/// A class given directly or through an algebra.
#[derive(Deserialize)]
#[serde(untagged)]
enum ClassInput {
    Class(BrauerClass),
    Algebra(AlgebraSpec),
}

impl ClassInput {
    fn class(&self) -> Result<BrauerClass> {
        match self {
            ClassInput::Class(c) => Ok(c.clone()),
            ClassInput::Algebra(a) => a.class(),
        }
    }
}

#[derive(Deserialize)]
struct PairInput<T> {
    a: T,
    b: T,
}

#[derive(Deserialize)]
struct ChowInput {
    #[serde(deserialize_with = "crate::wire::count")]
    p: u64,
    #[serde(deserialize_with = "crate::wire::count")]
    l: u64,
}

#[derive(Deserialize)]
struct SmoothInput {
    algebra: AlgebraSpec,
    point: Vec<Rational>,
}

#[derive(Deserialize)]
struct SympowInput {
    #[serde(deserialize_with = "crate::wire::count")]
    n: u64,
    #[serde(deserialize_with = "crate::wire::count")]
    m: u64,
}

#[derive(Deserialize)]
struct PointsInput {
    #[serde(deserialize_with = "crate::wire::count")]
    conductor: u64,
    exponents: Vec<i64>,
    #[serde(deserialize_with = "crate::wire::count")]
    n: usize,
    automorphisms: Option<Vec<i64>>,
}

fn parse<T: DeserializeOwned>(input: &str) -> Result<T> {
    serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn coeff_map(e: &ChowExpansion) -> Value {
    let mut m = Map::new();
    for (k, c) in e.labelled() {
        m.insert(k, Value::String(c.to_string()));
    }
    Value::Object(m)
}

fn cyc_json(x: &CycElem) -> Value {
    Value::Array(x.coeffs().iter().map(|c| Value::String(c.to_string())).collect())
}

fn dispatch(cli: &Cli, input: &str) -> Result<(Value, i32)> {
    match cli.command {
        Command::Class => {
            let spec: AlgebraSpec = parse(input)?;
            let v = bs_invariants(&spec)?;
            Ok((
                json!({
                    "algebra": spec,
                    "class": v.class,
                    "degree": v.degree,
                    "period": v.period,
                    "index": v.index,
                    "dimension": v.dimension,
                    "minimal_subvariety_dim": v.minimal_subvariety_dim,
                    "generalized_dims": v.generalized_dims,
                }),
                0,
            ))
        }
        Command::Tensor => {
            let pair: PairInput<ClassInput> = parse(input)?;
            let c = pair.a.class()?.tensor(&pair.b.class()?);
            Ok((json!({"class": c, "period": c.period(), "index": c.index()}), 0))
        }
        Command::Subgroup => {
            let pair: PairInput<ClassInput> = parse(input)?;
            let (a, b) = (pair.a.class()?, pair.b.class()?);
            let w = same_cyclic_subgroup(&a, &b);
            let code = if w.is_some() { 0 } else { 1 };
            Ok((
                json!({
                    "same_subgroup": w.is_some(),
                    "witness": w,
                    "b_splits_over_function_field_of_a": splits_over_function_field(&b, &a),
                    "a_splits_over_function_field_of_b": splits_over_function_field(&a, &b),
                    "index_b_over_function_field_of_a": index_over_function_field(&b, &a),
                    "index_a_over_function_field_of_b": index_over_function_field(&a, &b),
                }),
                code,
            ))
        }
        Command::K0 => {
            let spec: AlgebraSpec = parse(input)?;
            let class = spec.class()?;
            let gens = k0_image_generators(&class, spec.degree())?;
            let polys: Vec<String> = gens.iter().map(|g| g.polynomial().to_string()).collect();
            Ok((
                json!({"class": class, "degree": spec.degree(), "generators": gens, "restrictions": polys}),
                0,
            ))
        }
        Command::Chow => {
            let q: ChowInput = parse(input)?;
            let d = sign_discrepancy(q.p, q.l)?;
            let e = &d.alternating;
            Ok((
                json!({
                    "p": e.p,
                    "l": e.l,
                    "coeffs": coeff_map(e),
                    "check": e.check_string(),
                    "identity_holds": d.alternating_holds,
                    "restriction": e.restriction().to_string(),
                    "printed_positive": {
                        "coeffs": coeff_map(&d.printed),
                        "identity_holds": d.printed_holds,
                        "restriction": d.printed.restriction().to_string(),
                    },
                    "scale": "r_l (undetermined integer)",
                }),
                0,
            ))
        }
        Command::Normpoly => {
            let spec: AlgebraSpec = parse(input)?;
            let form = norm_form(&spec)?;
            let mut out = json!({
                "algebra": spec,
                "degree": form.degree(),
                "variables": form.f.vars(),
                "basis": form.basis_labels,
                "polynomial": form.f.to_json(),
                "string": form.f.to_string(),
            });
            let mut code = 0;
            if let Some(trials) = cli.trials {
                let report = norm_multiplicativity_check(&form, trials, cli.seed)?;
                if !report.passed() {
                    code = 1;
                }
                out["multiplicativity"] = json!({
                    "trials": report.trials,
                    "seed": report.seed,
                    "passed": report.passed(),
                    "counterexamples": report.counterexamples,
                });
            }
            Ok((out, code))
        }
        Command::Smooth => {
            let q: SmoothInput = parse(input)?;
            let form = norm_form(&q.algebra)?;
            let status = smooth_point_check(&form, &q.point)?;
            let value = form.f.eval(&q.point)?;
            Ok((json!({"status": status, "value": value}), 0))
        }
        Command::Sympow => {
            let q: SympowInput = parse(input)?;
            let verdict = sympow_verdict(q.n, q.m)?;
            let dims = if q.m < q.n { Some(sympow_dimension_model(q.n, q.m)?) } else { None };
            let power = if q.n >= 2 { Some(birational_sympow_exists(q.n)?) } else { None };
            Ok((
                json!({"verdict": verdict, "dimensions": dims, "birational_power": power}),
                0,
            ))
        }
        Command::Report => {
            let pair: PairInput<AlgebraSpec> = parse(input)?;
            let mut opts = ReportOptions::default();
            if let Some(b) = &cli.battery {
                opts.battery = b.clone();
            }
            let report = equivalence_report(&pair.a, &pair.b, &opts)?;
            let code = if report.equivalent() { 0 } else { 1 };
            Ok((to_value(&report), code))
        }
        Command::Points => {
            let q: PointsInput = parse(input)?;
            if q.conductor == 0 || q.conductor > 1000 {
                return Err(Error::Scale(format!("conductor {} outside 1..=1000", q.conductor)));
            }
            if q.n + 1 > 12 {
                return Err(Error::Scale(format!("at most 12 points, asked for {}", q.n + 1)));
            }
            let field = CyclotomicField::new(q.conductor)?;
            let mut alphas: Vec<CycElem> = Vec::new();
            for &e in &q.exponents {
                for x in galois_orbit(&field, e) {
                    if !alphas.contains(&x) {
                        alphas.push(x);
                    }
                }
            }
            let alphas = pad_orbit(&alphas, q.n + 1)?;
            let config = vandermonde_lift(alphas)?;
            let autos = match &q.automorphisms {
                Some(v) => v.clone(),
                None => field.units().into_iter().map(|a| a as i64).collect(),
            };
            let stability = autos
                .iter()
                .map(|&a| galois_stability_check(&config, a))
                .collect::<Result<Vec<_>>>()?;
            let equivariant = stability.iter().all(|s| s.equivariant());
            Ok((
                json!({
                    "conductor": q.conductor,
                    "n": config.dimension(),
                    "alphas": config.alphas.iter().map(cyc_json).collect::<Vec<_>>(),
                    "alphas_display": config.alphas.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
                    "vandermonde": cyc_json(&config.vandermonde_product()),
                    "general_position": general_position_check(&config),
                    "stability": stability,
                    "equivariant": equivariant,
                }),
                0,
            ))
        }
    }
}

fn render(v: &Value, pretty: bool) -> String {
    let mut s = if pretty {
        serde_json::to_string_pretty(v)
    } else {
        serde_json::to_string(v)
    }
    .expect("valid JSON");
    s.push('\n');
    s
}

fn error_outcome(e: &Error, pretty: bool) -> Outcome {
    let v = json!({"error": {"code": e.code(), "message": e.to_string()}});
    Outcome {
        stdout: render(&v, pretty),
        code: 2,
    }
}

/// Runs one command. `stdin` is only called when no `--input` file is given.
pub fn run<I, F>(argv: I, stdin: F) -> Outcome
where
    I: IntoIterator,
    I::Item: Into<std::ffi::OsString> + Clone,
    F: FnOnce() -> std::io::Result<String>,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    stdout: e.to_string(),
                    code: 0,
                };
            }
            return error_outcome(&Error::Parse(e.to_string()), false);
        }
    };
    let input = match &cli.input {
        Some(path) => fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}"))),
        None => stdin().map_err(|e| Error::Parse(format!("stdin: {e}"))),
    };
    let result = input.and_then(|text| dispatch(&cli, &text));
    match result {
        Ok((v, code)) => Outcome {
            stdout: render(&v, cli.pretty),
            code,
        },
        Err(e) => error_outcome(&e, cli.pretty),
    }
}
