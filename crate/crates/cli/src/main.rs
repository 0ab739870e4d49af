//! Command-line interface: compute character tables, irreducible
//! decompositions, character polynomials, and stability reports for the
//! configuration-space and genus-zero moduli families, and run the full
//! verification suite.
//!
//! Output formats
//! --------------
//! * `json` (default): deterministic, exact, machine-readable. All
//!   character and multiplicity values are strings ("5", "-1", "1/2") so
//!   no consumer ever sees floating point; partitions and cycle types are
//!   integer arrays.
//!   - `characters` / `decompose`: an array of per-n objects
//!     `{"family", "i", "n", "rows": [{"key": [...], "value": "..."}]}`,
//!     rows in the canonical class/constituent order.
//!   - `stability`: one object `{"family", "i", "n_min", "n_max",
//!     "stable_margin", "rows": [{"key": [...], "multiplicities":
//!     ["1", null, ...]}], "onset", "verdicts": {...}}` where `null`
//!     marks an n at which the label is not yet realizable.
//!   - `charpoly`: one object `{"family", "i", "poly_degree", "n_min",
//!     "n_max", "polynomial", "integer_coefficients", "held_out":
//!     [{"n", "matches"}]}`.
//!   - `verify`: `{"passed", "checks": [{"name", "passed", "detail"}]}`.
//! * `csv` (`characters`, `decompose`, `stability`): header
//!   `family,i,n,key,value`, one row per (n, key), canonical key strings
//!   like `(2,1,1)`; unrealizable stability entries emit `-`.
//! * `text`: aligned tables for humans; not covered by golden tests.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 computational budget exceeded (defaults: n <= 13, i <= 2).

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use repstab::charpoly::{fit, has_integer_coefficients};
use repstab::fistab::{family_multiplicity_table, Family, StabilityReport};
use repstab::symgrp::classfn::{classes, rational_str, ClassFunction};
use repstab::symgrp::decompose;
use repstab::verify::{all_passed, run_all, VerifyConfig};

/// Largest n any subcommand accepts: the biggest configuration that
/// completes in minutes on one core.
const MAX_N_BUDGET: u32 = 13;
/// Largest cohomological degree any subcommand accepts.
const MAX_I_BUDGET: u32 = 2;

#[derive(Parser)]
#[command(
    name = "repstab",
    version,
    about = "Exact symmetric-group representation tables for configuration-space and \
             genus-zero moduli cohomology"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact character values, one row per (n, cycle type).
    Characters(TableArgs),
    /// Irreducible multiplicities keyed by stable (unpadded) labels.
    Decompose(TableArgs),
    /// Fit a character polynomial and verify it on held-out n.
    Charpoly(CharpolyArgs),
    /// Multiplicity table across n with stabilization and bound verdicts.
    Stability(StabilityArgs),
    /// Run the full verification suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct TableArgs {
    /// Representation family: F (configuration), Mshift ((n+1)-pointed
    /// moduli at level n), or M (n-pointed moduli).
    #[arg(long, value_parser = parse_family)]
    family: Family,
    /// Cohomological degree.
    #[arg(short = 'i', long = "degree")]
    degree: u32,
    #[arg(long, default_value_t = 4)]
    n_min: u32,
    #[arg(long, default_value_t = 8)]
    n_max: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CharpolyArgs {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(short = 'i', long = "degree")]
    degree: u32,
    /// Weighted degree bound for the fitted polynomial (a k-cycle count
    /// X_k contributes k).
    #[arg(long, default_value_t = 2)]
    poly_degree: u32,
    #[arg(long, default_value_t = 4)]
    n_min: u32,
    #[arg(long, default_value_t = 8)]
    n_max: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct StabilityArgs {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(short = 'i', long = "degree")]
    degree: u32,
    #[arg(long, default_value_t = 4)]
    n_min: u32,
    #[arg(long, default_value_t = 10)]
    n_max: u32,
    /// Extra confirming samples required beyond a stabilization onset.
    #[arg(long, default_value_t = 2)]
    stable_margin: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest n used by the suite.
    #[arg(long, default_value_t = 13)]
    n_max: u32,
    /// Largest cohomological degree used by the suite.
    #[arg(short = 'i', long = "degree", default_value_t = 2)]
    degree: u32,
    /// Largest n for the independent linear-algebra oracles.
    #[arg(long, default_value_t = 6)]
    oracle_max_n: u32,
    #[arg(long, default_value_t = 2)]
    stable_margin: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the JSON summary here (in addition to stdout output).
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.cmd {
        Cmd::Characters(args) => cmd_characters(&args),
        Cmd::Decompose(args) => cmd_decompose(&args),
        Cmd::Charpoly(args) => cmd_charpoly(&args),
        Cmd::Stability(args) => cmd_stability(&args),
        Cmd::Verify(args) => cmd_verify(&args),
    };
    match code {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

struct CmdError {
    code: u8,
    message: String,
}

impl CmdError {
    fn usage(message: impl Into<String>) -> Self {
        CmdError {
            code: 2,
            message: message.into(),
        }
    }

    fn budget(message: impl Into<String>) -> Self {
        CmdError {
            code: 3,
            message: message.into(),
        }
    }

    fn verification(message: impl Into<String>) -> Self {
        CmdError {
            code: 1,
            message: message.into(),
        }
    }

    fn io(e: std::io::Error) -> Self {
        CmdError {
            code: 1,
            message: format!("i/o failure: {e}"),
        }
    }
}

fn check_range(family: Family, degree: u32, n_min: u32, n_max: u32) -> Result<(), CmdError> {
    if n_min > n_max {
        return Err(CmdError::usage(format!(
            "n-min ({n_min}) must not exceed n-max ({n_max})"
        )));
    }
    if n_min < family.min_points() {
        return Err(CmdError::usage(format!(
            "family {family} starts at n = {}; got n-min = {n_min}",
            family.min_points()
        )));
    }
    if n_max > MAX_N_BUDGET {
        return Err(CmdError::budget(format!(
            "n-max = {n_max} exceeds the computational budget (n <= {MAX_N_BUDGET})"
        )));
    }
    if degree > MAX_I_BUDGET {
        return Err(CmdError::budget(format!(
            "degree i = {degree} exceeds the computational budget (i <= {MAX_I_BUDGET})"
        )));
    }
    Ok(())
}

/// Writes `payload` to `--out` or stdout, always newline-terminated.
fn emit(payload: &str, out: &Option<PathBuf>) -> Result<(), CmdError> {
    let mut body = payload.to_string();
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match out {
        Some(path) => fs::write(path, body).map_err(CmdError::io),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn render_json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serialization cannot fail")
}

fn family_character(family: Family, n: u32, i: u32) -> Result<ClassFunction, CmdError> {
    family
        .character(n, i)
        .map_err(|e| CmdError::verification(e.to_string()))
}

fn key_string(parts: &[u32]) -> String {
    let mut s = String::from("(");
    for (k, p) in parts.iter().enumerate() {
        if k > 0 {
            s.push(',');
        }
        let _ = write!(s, "{p}");
    }
    s.push(')');
    s
}

fn cmd_characters(args: &TableArgs) -> Result<ExitCode, CmdError> {
    check_range(args.family, args.degree, args.n_min, args.n_max)?;
    // rows per n: (cycle type parts, exact value string)
    let mut per_n: Vec<(u32, Vec<(Vec<u32>, String)>)> = Vec::new();
    for n in args.n_min..=args.n_max {
        let chi = family_character(args.family, n, args.degree)?;
        let data = classes(n);
        let rows = data
            .types()
            .iter()
            .enumerate()
            .map(|(idx, mu)| (mu.parts().to_vec(), rational_str(chi.value_at(idx))))
            .collect();
        per_n.push((n, rows));
    }
    let payload = match args.format {
        Format::Json => {
            let arr: Vec<Value> = per_n
                .iter()
                .map(|(n, rows)| {
                    json!({
                        "family": args.family.cli_name(),
                        "i": args.degree,
                        "n": n,
                        "rows": rows
                            .iter()
                            .map(|(key, value)| json!({"key": key, "value": value}))
                            .collect::<Vec<Value>>(),
                    })
                })
                .collect();
            render_json(&Value::Array(arr))
        }
        Format::Csv => {
            let mut s = String::from("family,i,n,key,value\n");
            for (n, rows) in &per_n {
                for (key, value) in rows {
                    let _ = writeln!(
                        s,
                        "{},{},{},\"{}\",{}",
                        args.family.cli_name(),
                        args.degree,
                        n,
                        key_string(key),
                        value
                    );
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for (n, rows) in &per_n {
                let _ = writeln!(
                    s,
                    "family {}  i={}  n={}",
                    args.family.cli_name(),
                    args.degree,
                    n
                );
                let width = rows
                    .iter()
                    .map(|(k, _)| key_string(k).len())
                    .max()
                    .unwrap_or(0);
                for (key, value) in rows {
                    let _ = writeln!(
                        s,
                        "  {:<width$}  {}",
                        key_string(key),
                        value,
                        width = width
                    );
                }
            }
            s
        }
    };
    emit(&payload, &args.out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_decompose(args: &TableArgs) -> Result<ExitCode, CmdError> {
    check_range(args.family, args.degree, args.n_min, args.n_max)?;
    // rows per n: (unpadded label parts, multiplicity)
    let mut per_n: Vec<(u32, Vec<(Vec<u32>, u64)>)> = Vec::new();
    for n in args.n_min..=args.n_max {
        let chi = family_character(args.family, n, args.degree)?;
        let dec = decompose(&chi).map_err(|e| CmdError::verification(e.to_string()))?;
        let rows = dec
            .iter()
            .map(|(padded, m)| (padded.unpad().parts().to_vec(), m))
            .collect();
        per_n.push((n, rows));
    }
    let payload = match args.format {
        Format::Json => {
            let arr: Vec<Value> = per_n
                .iter()
                .map(|(n, rows)| {
                    json!({
                        "family": args.family.cli_name(),
                        "i": args.degree,
                        "n": n,
                        "rows": rows
                            .iter()
                            .map(|(key, m)| json!({"key": key, "value": m.to_string()}))
                            .collect::<Vec<Value>>(),
                    })
                })
                .collect();
            render_json(&Value::Array(arr))
        }
        Format::Csv => {
            let mut s = String::from("family,i,n,key,value\n");
            for (n, rows) in &per_n {
                for (key, m) in rows {
                    let _ = writeln!(
                        s,
                        "{},{},{},\"{}\",{}",
                        args.family.cli_name(),
                        args.degree,
                        n,
                        key_string(key),
                        m
                    );
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for (n, rows) in &per_n {
                let _ = writeln!(
                    s,
                    "family {}  i={}  n={}",
                    args.family.cli_name(),
                    args.degree,
                    n
                );
                if rows.is_empty() {
                    let _ = writeln!(s, "  0 (zero representation)");
                }
                for (key, m) in rows {
                    let _ = writeln!(s, "  {}  x{}", key_string(key), m);
                }
            }
            s
        }
    };
    emit(&payload, &args.out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_charpoly(args: &CharpolyArgs) -> Result<ExitCode, CmdError> {
    check_range(args.family, args.degree, args.n_min, args.n_max)?;
    let mut samples = Vec::new();
    for n in args.n_min..=args.n_max {
        samples.push(family_character(args.family, n, args.degree)?);
    }
    let fitted = fit(&samples, args.poly_degree)
        .map_err(|e| CmdError::verification(e.to_string()))?;
    if fitted.nullity != 0 {
        return Err(CmdError::verification(format!(
            "fit is not unique: the sampled range leaves a {}-dimensional ambiguity; \
             widen n-min..n-max",
            fitted.nullity
        )));
    }
    // Held-out check on the next two n within budget.
    let mut held_out = Vec::new();
    for n in args.n_max + 1..=(args.n_max + 2).min(MAX_N_BUDGET) {
        let actual = family_character(args.family, n, args.degree)?;
        held_out.push((n, fitted.poly.class_function(n) == actual));
    }
    let all_match = held_out.iter().all(|(_, m)| *m);
    let payload = match args.format {
        Format::Json => render_json(&json!({
            "family": args.family.cli_name(),
            "i": args.degree,
            "poly_degree": args.poly_degree,
            "n_min": args.n_min,
            "n_max": args.n_max,
            "polynomial": fitted.poly.to_string(),
            "integer_coefficients": has_integer_coefficients(&fitted.poly),
            "held_out": held_out
                .iter()
                .map(|(n, m)| json!({"n": n, "matches": m}))
                .collect::<Vec<Value>>(),
        })),
        Format::Text => {
            let mut s = format!(
                "family {}  i={}  fitted over n={}..{} with degree <= {}\n{}\n",
                args.family.cli_name(),
                args.degree,
                args.n_min,
                args.n_max,
                args.poly_degree,
                fitted.poly
            );
            for (n, m) in &held_out {
                let _ = writeln!(
                    s,
                    "held-out n={n}: {}",
                    if *m { "matches" } else { "MISMATCH" }
                );
            }
            s
        }
        Format::Csv => {
            return Err(CmdError::usage(
                "csv is not a polynomial format; use json or text for charpoly",
            ));
        }
    };
    emit(&payload, &args.out)?;
    if all_match {
        Ok(ExitCode::SUCCESS)
    } else {
        Err(CmdError::verification(
            "fitted polynomial mispredicts a held-out character".to_string(),
        ))
    }
}

fn stability_json(report: &StabilityReport) -> Value {
    json!({
        "family": report.family.cli_name(),
        "i": report.i,
        "n_min": report.n_min,
        "n_max": report.n_max,
        "stable_margin": report.stable_margin,
        "rows": report
            .rows
            .iter()
            .map(|(label, row)| {
                json!({
                    "key": label.parts(),
                    "multiplicities": row
                        .iter()
                        .map(|e| match e {
                            Some(m) => json!(m.to_string()),
                            None => Value::Null,
                        })
                        .collect::<Vec<Value>>(),
                })
            })
            .collect::<Vec<Value>>(),
        "onset": match report.onset {
            Some(n) => json!(n),
            None => Value::Null,
        },
        "verdicts": {
            "weight_bound": report.weight_bound,
            "weight_ok": report.weight_ok,
            "length_bound": report.length_bound,
            "length_ok": report.length_ok,
            "alternating_threshold": report.alternating_threshold,
            "alternating_ok": report.alternating_ok,
            "range_bound": report.range_bound,
            "range_ok": match report.range_ok {
                Some(v) => json!(v),
                None => Value::Null,
            },
        },
    })
}

fn cmd_stability(args: &StabilityArgs) -> Result<ExitCode, CmdError> {
    check_range(args.family, args.degree, args.n_min, args.n_max)?;
    let report = family_multiplicity_table(
        args.family,
        args.degree,
        args.n_min..=args.n_max,
        args.stable_margin,
    )
    .map_err(|e| CmdError::verification(e.to_string()))?;
    let payload = match args.format {
        Format::Json => render_json(&stability_json(&report)),
        Format::Text => report.text_table(),
        Format::Csv => {
            let mut s = String::from("family,i,n,key,value\n");
            for (label, row) in &report.rows {
                for (j, entry) in row.iter().enumerate() {
                    let _ = writeln!(
                        s,
                        "{},{},{},\"{}\",{}",
                        report.family.cli_name(),
                        report.i,
                        report.n_min + j as u32,
                        key_string(label.parts()),
                        match entry {
                            Some(m) => m.to_string(),
                            None => "-".to_string(),
                        }
                    );
                }
            }
            s
        }
    };
    emit(&payload, &args.out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode, CmdError> {
    if args.n_max > MAX_N_BUDGET {
        return Err(CmdError::budget(format!(
            "n-max = {} exceeds the computational budget (n <= {MAX_N_BUDGET})",
            args.n_max
        )));
    }
    if args.degree > MAX_I_BUDGET {
        return Err(CmdError::budget(format!(
            "degree i = {} exceeds the computational budget (i <= {MAX_I_BUDGET})",
            args.degree
        )));
    }
    if args.n_max < 4 {
        return Err(CmdError::usage("verify needs n-max >= 4"));
    }
    if args.oracle_max_n < 2 || args.oracle_max_n > args.n_max {
        return Err(CmdError::usage(format!(
            "oracle-max-n must lie in 2..=n-max, got {}",
            args.oracle_max_n
        )));
    }
    let cfg = VerifyConfig {
        max_n: args.n_max,
        max_i: args.degree,
        oracle_max_n: args.oracle_max_n,
        stable_margin: args.stable_margin,
    };
    let results = run_all(&cfg);
    let passed = all_passed(&results);
    let summary = json!({
        "passed": passed,
        "checks": results
            .iter()
            .map(|r| json!({"name": r.name, "passed": r.passed, "detail": r.detail}))
            .collect::<Vec<Value>>(),
    });
    let json_payload = render_json(&summary);
    let stdout_payload = match args.format {
        Format::Json => json_payload.clone(),
        Format::Text | Format::Csv => {
            let mut s = String::new();
            for r in &results {
                let _ = writeln!(
                    s,
                    "{:<36} {}",
                    r.name,
                    if r.passed { "pass" } else { "FAIL" }
                );
                let _ = writeln!(s, "    {}", r.detail);
            }
            let _ = writeln!(s, "summary: {}", if passed { "PASS" } else { "FAIL" });
            s
        }
    };
    // The JSON summary is always written: to --out when given, otherwise
    // it is the stdout payload itself (default format).
    match &args.out {
        Some(path) => {
            fs::write(path, format!("{json_payload}\n")).map_err(CmdError::io)?;
            print!("{stdout_payload}");
            if !stdout_payload.ends_with('\n') {
                println!();
            }
        }
        None => {
            emit(&stdout_payload, &None)?;
        }
    }
    if passed {
        Ok(ExitCode::SUCCESS)
    } else {
        Err(CmdError::verification(
            "verification suite reported failures".to_string(),
        ))
    }
}
