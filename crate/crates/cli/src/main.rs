//! `zerohecke`: build standard monomial bases, run verification suites and print
//! characteristic expansions for the quotients `S_{n,k}`.

use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use zerohecke::characteristics::{chqt_formulas, cht_formulas, cht_n_sum};
use zerohecke::field::{Field, PrimeField, Rationals, DEFAULT_PRIME};
use zerohecke::groebner::{cnk_direct, staircase_monomials, QuotientRing};
use zerohecke::verify::{run_suite, Suite};
use zerohecke::Error;

/// Largest `n` accepted without `--force`.
const MAX_N: usize = 8;

#[derive(Parser)]
#[command(name = "zerohecke", version, about = "Exact computations with the 0-Hecke quotient rings S_{n,k}")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Standard monomial basis of S_{n,k}, three ways, with its Hilbert series.
    Basis(Common),
    /// Run a named verification suite.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(Suite::NAMES))]
        suite: String,
    },
    /// Print a graded characteristic of S_{n,k}.
    Characteristic {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Which::Cht)]
        which: Which,
    },
}

#[derive(Args, Clone)]
struct Common {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value_t = FieldArg::Q)]
    field: FieldArg,
    /// Characteristic of the prime field when `--field Fp`.
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    p: u32,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Seed for the ChaCha8 generator behind randomized checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Allow n above the size guard.
    #[arg(long)]
    force: bool,
    /// Write output to this file instead of stdout.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    #[value(name = "Q")]
    Q,
    #[value(name = "Fp")]
    Fp,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Cht,
    Chqt,
    Nsym,
    Schur,
}

/// Outcome of one command: text to emit and whether every check held.
struct Report {
    text: String,
    ok: bool,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::TheoremViolation(_) | Error::NotInPointSet(_) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let common = match &cli.command {
        Command::Basis(c) | Command::Verify { common: c, .. } | Command::Characteristic { common: c, .. } => c.clone(),
    };
    if common.n > MAX_N && !common.force {
        eprintln!("error: n = {} exceeds the size guard {MAX_N}; pass --force to override", common.n);
        return ExitCode::from(2);
    }
    if common.k == 0 || common.k > common.n {
        eprintln!("error: need 1 <= k <= n, got n = {}, k = {}", common.n, common.k);
        return ExitCode::from(2);
    }
    let result = match common.field {
        FieldArg::Q => dispatch(&Rationals, &cli.command, &common),
        FieldArg::Fp => match PrimeField::new(common.p) {
            Ok(f) => dispatch(&f, &cli.command, &common),
            Err(e) => Err(e),
        },
    };
    match result {
        Ok(report) => {
            if let Some(path) = &common.out {
                if let Err(e) = fs::write(path, &report.text) {
                    eprintln!("error: cannot write {path}: {e}");
                    return ExitCode::from(2);
                }
            } else {
                print!("{}", report.text);
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn dispatch<F: Field>(field: &F, cmd: &Command, c: &Common) -> zerohecke::Result<Report> {
    match cmd {
        Command::Basis(_) => basis(field, c),
        Command::Verify { suite, .. } => verify(field, c, suite.parse()?),
        Command::Characteristic { which, .. } => characteristic(c, *which),
    }
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn basis<F: Field>(field: &F, c: &Common) -> zerohecke::Result<Report> {
    let ring = QuotientRing::s_nk(field, c.n, c.k)?;
    let mut std = ring.standard.clone();
    std.sort();
    let mut nonskip = cnk_direct(c.n, c.k)?;
    nonskip.sort();
    let mut stair = staircase_monomials(c.n, c.k)?;
    stair.sort();
    let agree = std == nonskip && std == stair;
    let hilb = ring.hilbert();
    let names = |ms: &[zerohecke::polyring::Monomial]| ms.iter().map(|m| m.to_string()).collect::<Vec<_>>();
    let text = match c.format {
        Format::Json => json_text(&json!({
            "n": c.n,
            "k": c.k,
            "field": field.tag(),
            "dimension": std.len(),
            "hilbert": hilb.to_string(),
            "hilbert_coefficients": hilb.q_coeffs().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "buchberger": names(&std),
            "nonskip": names(&nonskip),
            "staircase": names(&stair),
            "agree": agree,
        })),
        Format::Csv => {
            let mut s = String::from("degree,dimension,monomials\n");
            for (d, count) in hilb.q_coeffs().iter().enumerate() {
                let ms: Vec<String> = std.iter().filter(|m| m.degree() == d).map(|m| m.to_string()).collect();
                let _ = writeln!(s, "{d},{count},{}", ms.join(" "));
            }
            s
        }
        Format::Pretty => {
            let mut s = String::new();
            let _ = writeln!(s, "S_{{{},{}}} over {}", c.n, c.k, field.tag());
            let _ = writeln!(s, "dimension: {}", std.len());
            let _ = writeln!(s, "hilbert series: {hilb}");
            let _ = writeln!(s, "buchberger = nonskip = staircase: {agree}");
            let _ = writeln!(s, "standard monomials:");
            for m in &std {
                let _ = writeln!(s, "  {m}");
            }
            s
        }
    };
    Ok(Report { text, ok: agree })
}

fn verify<F: Field>(field: &F, c: &Common, suite: Suite) -> zerohecke::Result<Report> {
    let results = run_suite(field, c.n, c.k, suite, c.seed)?;
    let ok = results.iter().all(|r| r.pass);
    let text = match c.format {
        Format::Json => json_text(&Value::Array(results.iter().map(|r| r.to_json()).collect())),
        Format::Csv => {
            let mut s = String::from("check,n,k,field,seed,pass\n");
            for r in &results {
                let _ = writeln!(s, "{},{},{},{},{},{}", r.check, c.n, c.k, field.tag(), c.seed, r.pass);
            }
            s
        }
        Format::Pretty => {
            let mut s = String::new();
            for r in &results {
                let _ = write!(s, "[{}] {}", if r.pass { "PASS" } else { "FAIL" }, r.check);
                if let Some(w) = &r.witness {
                    let _ = write!(s, "  {}", serde_json::to_string(w).expect("serializable"));
                }
                s.push('\n');
            }
            let failed = results.iter().filter(|r| !r.pass).count();
            let _ = writeln!(s, "{} checks, {} failed", results.len(), failed);
            s
        }
    };
    Ok(Report { text, ok })
}

fn expansion_csv(rows: impl Iterator<Item = (String, Value)>) -> String {
    let mut s = String::from("index,q,t,coefficient\n");
    for (key, poly) in rows {
        for term in poly.as_array().into_iter().flatten() {
            let _ = writeln!(s, "{key},{},{},{}", term["q"], term["t"], term["c"].as_str().unwrap_or(&term["c"].to_string()));
        }
    }
    s
}

fn characteristic(c: &Common, which: Which) -> zerohecke::Result<Report> {
    let (n, k) = (c.n, c.k);
    let forms = cht_formulas(n, k)?;
    let (label, pretty, json_exp, csv, flags): (&str, String, Value, String, Vec<(&str, bool)>) = match which {
        Which::Cht => (
            "Ch_t",
            forms.a.pretty("F"),
            forms.a.to_json(),
            expansion_csv(forms.a.coeffs().iter().map(|(k, p)| (key("F", k.parts()), p.to_json()))),
            vec![("A=B=C=D", forms.all_equal())],
        ),
        Which::Chqt => {
            let q = chqt_formulas(n, k)?;
            (
                "Ch_qt",
                q.a.pretty("F"),
                q.a.to_json(),
                expansion_csv(q.a.coeffs().iter().map(|(k, p)| (key("F", k.parts()), p.to_json()))),
                vec![
                    ("A=B", q.a == q.b),
                    ("q=1 gives Ch_t", q.a.at_q_one() == forms.a),
                    ("summand matching", q.reindexed == q.a && q.reindexing_consistent),
                ],
            )
        }
        Which::Nsym => (
            "ch_t",
            forms.c_ribbon.pretty("R"),
            forms.c_ribbon.to_json(),
            expansion_csv(forms.c_ribbon.coeffs().iter().map(|(k, p)| (key("R", k.parts()), p.to_json()))),
            vec![("sum over N modules", cht_n_sum(n, k)? == forms.c_ribbon), ("commutative image = Ch_t", forms.c_qsym == forms.a)],
        ),
        Which::Schur => (
            "Ch_t (Schur)",
            forms.d_schur.pretty(),
            forms.d_schur.to_json(),
            expansion_csv(forms.d_schur.coeffs().iter().map(|(k, p)| (key("s", k), p.to_json()))),
            vec![("Schur form = Ch_t", forms.d_qsym == forms.a)],
        ),
    };
    let ok = flags.iter().all(|f| f.1);
    let text = match c.format {
        Format::Json => json_text(&json!({
            "n": n,
            "k": k,
            "which": label,
            "expansion": json_exp,
            "agreement": flags.iter().map(|(name, v)| json!({"check": name, "pass": v})).collect::<Vec<_>>(),
        })),
        Format::Csv => csv,
        Format::Pretty => {
            let mut s = format!("{label}(S_{{{n},{k}}}) = {pretty}\n");
            for (name, v) in &flags {
                let _ = writeln!(s, "{name}: {v}");
            }
            s
        }
    };
    Ok(Report { text, ok })
}

fn key(prefix: &str, parts: &[usize]) -> String {
    zerohecke::characteristics::format_key(prefix, parts).replace(',', " ")
}
