//! `qhat`: verification suite and derived-category queries over the fixtures.

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use qhat::chaincat::{Complex, PathComplex};
use qhat::harness::fixtures::{build_module, RawModule};
use qhat::harness::{self, Fixtures, Status};
use qhat::{functors, homalg, sampling};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "qhat", version, about = "Exact derived-category computations over the fixture quiver")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Operands name fixture objects (`P`, `Ct`, `A`, `E`, `S(P)`, `T(1,1)`,
/// `M(2)`, `Cone(P_to_I2)`, `P2+P3`, any of these with a shift `[n]`).
/// `--file` reads the last operand from a module JSON file instead.
#[derive(Subcommand)]
enum Command {
    /// Run the verification suite; the exit code is the number of failed checks.
    Verify {
        #[arg(long)]
        check: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        /// Write the JSON report here (`-` for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
        /// Directory for serialized witnesses.
        #[arg(long)]
        witness_dir: Option<PathBuf>,
        /// List the check names and exit.
        #[arg(long)]
        list: bool,
    },
    /// dim Hom(X, Y) in the derived category.
    Hom {
        x: String,
        y: Option<String>,
        #[command(flatten)]
        io: Io,
    },
    /// dim Hom(X, Y[n]) for n in a range.
    Ext {
        x: String,
        y: Option<String>,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        from: i64,
        #[arg(long, default_value_t = 3, allow_negative_numbers = true)]
        to: i64,
        #[command(flatten)]
        io: Io,
    },
    /// Minimal projective resolution, or an injective one with `--injective`.
    Resolve {
        x: Option<String>,
        #[arg(long)]
        injective: bool,
        #[command(flatten)]
        io: Io,
    },
    /// Serre functor, or its inverse with `--inverse`.
    Serre {
        x: Option<String>,
        #[arg(long)]
        inverse: bool,
        #[command(flatten)]
        io: Io,
    },
    /// Left mutation L_E(X), or right mutation with `--right`.
    Mutate {
        e: String,
        x: Option<String>,
        #[arg(long)]
        right: bool,
        #[command(flatten)]
        io: Io,
    },
    /// Spherical twist T_E(X).
    Twist {
        e: String,
        x: Option<String>,
        #[command(flatten)]
        io: Io,
    },
    /// Class in the Grothendieck group.
    K0 {
        x: Option<String>,
        #[command(flatten)]
        io: Io,
    },
}

#[derive(clap::Args)]
struct Io {
    /// Module JSON (`{"dims": [...], "maps": {"a1": rows, ...}}`) for the last operand.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,
}

fn operand(f: &Fixtures, name: Option<&str>, io: &Io) -> Result<Complex> {
    match (&io.file, name) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let raw: RawModule = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
            let m = build_module(&f.alg, &path.display().to_string(), &raw)?;
            Ok(Complex::stalk(&f.alg, m, 0))
        }
        (None, Some(n)) => Ok(f.object(n)?),
        (None, None) => bail!("missing operand (name a fixture or pass --file)"),
    }
}

fn terms(f: &Fixtures, p: &PathComplex, prefix: &str) -> Value {
    let names = f.alg.quiver().vertices();
    p.degrees()
        .map(|k| {
            let t: Vec<String> = p.term(k).iter().map(|&v| format!("{prefix}{}", names[v])).collect();
            (k.to_string(), json!(t))
        })
        .collect::<serde_json::Map<_, _>>()
        .into()
}

fn describe(f: &Fixtures, x: &Complex) -> Value {
    let homology: serde_json::Map<String, Value> =
        x.homology_dims(&f.alg).into_iter().filter(|(_, d)| d.iter().any(|&v| v > 0)).map(|(k, d)| (k.to_string(), json!(d))).collect();
    json!({
        "homology": homology,
        "projective_model": terms(f, &functors::model(&f.alg, x), "P"),
        "k0": homalg::k0_class(x).0,
    })
}

fn text(v: &Value) -> String {
    match v {
        Value::Object(m) => m.iter().map(|(k, v)| format!("{k}: {}", text_inline(v))).collect::<Vec<_>>().join("\n"),
        other => text_inline(other),
    }
}

fn text_inline(v: &Value) -> String {
    match v {
        Value::Object(m) if m.is_empty() => "0".into(),
        Value::Object(m) => {
            let mut entries: Vec<_> = m.iter().collect();
            entries.sort_by_key(|(k, _)| k.parse::<i64>().unwrap_or(i64::MAX));
            entries.iter().map(|(k, v)| format!("{k} ↦ {}", text_inline(v))).collect::<Vec<_>>().join(", ")
        }
        Value::Array(a) => format!("({})", a.iter().map(text_inline).collect::<Vec<_>>().join(", ")),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn emit(io: &Io, v: Value) -> Result<ExitCode> {
    if io.json {
        println!("{}", serde_json::to_string_pretty(&v)?);
    } else {
        println!("{}", text(&v));
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    let f = Fixtures::load()?;
    let alg = &f.alg;
    match cli.command {
        Command::Verify { check, seed, json, witness_dir, list } => {
            if list {
                for name in harness::check_names() {
                    println!("{name}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            if let Some(s) = seed {
                sampling::set_seed(s);
            }
            let report = harness::verify(&f, check.as_deref(), witness_dir.as_deref())?;
            let to_stdout = json.as_deref().is_some_and(|p| p.as_os_str() == "-");
            for c in &report.checks {
                let mark = if c.status == Status::Pass { "pass" } else { "fail" };
                let line = format!("{mark}  {}", c.check);
                if to_stdout {
                    eprintln!("{line}");
                } else {
                    println!("{line}");
                }
            }
            match json {
                Some(p) if p.as_os_str() == "-" => println!("{}", report.to_json()),
                Some(p) => std::fs::write(&p, report.to_json()).with_context(|| format!("writing {}", p.display()))?,
                None => {}
            }
            eprintln!(
                "{} passed, {} failed (seed {:#x}, fixtures {})",
                report.summary.passed,
                report.summary.failed,
                report.seed,
                &report.fixture_hash[..12]
            );
            Ok(ExitCode::from(report.failures().min(255) as u8))
        }
        Command::Hom { x, y, io } => {
            let (a, b) = (f.object(&x)?, operand(&f, y.as_deref(), &io)?);
            emit(&io, json!(homalg::derived_hom_dims(alg, &a, &b, 0..=0)[0]))
        }
        Command::Ext { x, y, from, to, io } => {
            if from > to {
                bail!("empty degree range {from}..{to}");
            }
            let (a, b) = (f.object(&x)?, operand(&f, y.as_deref(), &io)?);
            let dims = homalg::derived_hom_dims(alg, &a, &b, from..=to);
            emit(&io, json!(dims))
        }
        Command::Resolve { x, injective, io } => {
            let a = operand(&f, x.as_deref(), &io)?;
            let v = if injective {
                let r = qhat::chaincat::injective_replacement(alg, &a);
                json!({"injective": terms(&f, &r.complex, "I")})
            } else {
                json!({"projective": terms(&f, &functors::model(alg, &a), "P")})
            };
            emit(&io, v)
        }
        Command::Serre { x, inverse, io } => {
            let a = operand(&f, x.as_deref(), &io)?;
            let s = if inverse { functors::serre_inverse(alg, &a) } else { functors::serre(alg, &a) };
            emit(&io, describe(&f, &s))
        }
        Command::Mutate { e, x, right, io } => {
            let (ec, xc) = (f.object(&e)?, operand(&f, x.as_deref(), &io)?);
            let m = if right { functors::right_mutate(alg, &ec, &xc)? } else { functors::left_mutate(alg, &ec, &xc)? };
            emit(&io, describe(&f, &m))
        }
        Command::Twist { e, x, io } => {
            let (ec, xc) = (f.object(&e)?, operand(&f, x.as_deref(), &io)?);
            emit(&io, describe(&f, &functors::spherical_twist(alg, &ec, &xc)))
        }
        Command::K0 { x, io } => {
            let a = operand(&f, x.as_deref(), &io)?;
            emit(&io, json!(homalg::k0_class(&a).0))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(255)
        }
    }
}
