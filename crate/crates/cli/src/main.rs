//! `bott`: toric cohomology, cone computations and the case harness from the command line.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on bad input.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bott_core::cohomology::{bott_check, hodge_twisted_cohomology, line_bundle_cohomology};
use bott_core::chow::chi_twisted;
use bott_core::data::{load_case, load_invariant_table, DataDir};
use bott_core::fan::validate_fan;
use bott_core::lattice::{dual_cone, hilbert_basis};
use bott_core::verify::{verify_all, verify_case};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

mod input;
mod suites;

#[derive(Parser)]
#[command(name = "bott", version, about = "Bott vanishing checks for smooth Fano 3-folds")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a fan is smooth and complete.
    ValidateFan {
        /// Fan name in the data directory, or path to a fan file.
        fan: String,
    },
    /// Dimensions h^j(O(D)).
    Cohomology {
        #[arg(long)]
        fan: String,
        /// Divisor: a class such as "2H-E", ray names "D0+D3", a coefficient array, or "-K".
        #[arg(long = "D", allow_hyphen_values = true)]
        d: String,
    },
    /// Dimensions h^j(Omega^i(D)) for nef D.
    Hodge {
        #[arg(long)]
        fan: String,
        #[arg(long)]
        i: usize,
        #[arg(long = "D", allow_hyphen_values = true)]
        d: String,
    },
    /// Bott vanishing for an ample divisor, -K by default.
    BottCheck {
        #[arg(long)]
        fan: String,
        #[arg(long = "D", allow_hyphen_values = true, default_value = "-K")]
        d: String,
    },
    /// Dual of a cone given as JSON.
    DualCone {
        /// `[[1,0],[1,2]]` or `{"rank": 2, "generators": [[1,0],[1,2]]}`.
        #[arg(long)]
        cone: String,
    },
    /// Hilbert basis of a pointed cone given as JSON.
    HilbertBasis {
        #[arg(long)]
        cone: String,
    },
    /// chi(X, Omega^p(L)) by Riemann-Roch.
    Chi {
        /// quadric3 (Q), flag_w (W), quintic_v5 (V5), a table id such as 2.27, or a toric fan.
        #[arg(long)]
        model: String,
        #[arg(long)]
        p: usize,
        #[arg(long = "L", allow_hyphen_values = true)]
        l: String,
    },
    /// Sign of chi(X, T_X) over the invariant table.
    Screen {
        /// Invariant table; the bundled mm105.tsv by default.
        path: Option<PathBuf>,
    },
    /// Run the checks for one case.
    VerifyCase {
        /// Table id such as (3.20) or 3.20, or a path to a case file.
        case: String,
    },
    /// Every case plus the sweeps over the bundled fans and claims.
    VerifyAll,
    /// Screen table, Riemann-Roch counterexamples and every case report.
    ReproducePaper,
}

enum Failure {
    Usage(String),
    Verify(String),
}

impl From<bott_core::Error> for Failure {
    fn from(e: bott_core::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

fn dims(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

/// Text or JSON according to `fmt`, turned into a verification failure unless `ok`.
fn emit(fmt: Format, text: String, json: String, ok: bool) -> Outcome {
    let out = if fmt == Format::Json { json } else { text };
    if ok {
        Ok(out)
    } else {
        Err(Failure::Verify(out))
    }
}

fn run(cli: Cli) -> Outcome {
    let dir = DataDir::bundled();
    let fmt = cli.format;
    match cli.command {
        Command::ValidateFan { fan } => {
            let f = input::fan(&dir, &fan)?;
            let r = validate_fan(&f.fan);
            let mut text = format!("{}: smooth {}, complete {}", f.name, r.smooth, r.complete);
            for v in &r.violations {
                let _ = write!(text, "\n  {v}");
            }
            emit(fmt, text, to_json(&r), r.smooth && r.complete)
        }
        Command::Cohomology { fan, d } => {
            let f = input::fan(&dir, &fan)?;
            let h = line_bundle_cohomology(&f.fan, &input::divisor(&f.fan, &d)?)?;
            emit(fmt, format!("h^j(O({d})): {}", dims(&h.dims)), to_json(&h), true)
        }
        Command::Hodge { fan, i, d } => {
            let f = input::fan(&dir, &fan)?;
            if i > f.fan.rank() {
                return Err(Failure::Usage(format!("i = {i} exceeds the dimension {}", f.fan.rank())));
            }
            let h = hodge_twisted_cohomology(&f.fan, i, &input::divisor(&f.fan, &d)?)?;
            emit(fmt, format!("h^j(Omega^{i}({d})): {}", dims(&h.dims)), to_json(&h), true)
        }
        Command::BottCheck { fan, d } => {
            let f = input::fan(&dir, &fan)?;
            let r = bott_check(&f.fan, &input::divisor(&f.fan, &d)?)?;
            let mut text = String::new();
            for s in &r.sheaves {
                let tag = if s.vanishing { "vanishing" } else { "NONVANISHING" };
                let _ = writeln!(text, "{}: {} [{tag}]", s.sheaf, dims(&s.dims));
            }
            let _ = write!(text, "{} D = {d}: {}", f.name, if r.pass { "PASS" } else { "FAIL" });
            emit(fmt, text, to_json(&r), r.pass)
        }
        Command::DualCone { cone } => {
            let c = dual_cone(&input::cone(&cone)?)?;
            let text = c.generators().iter().map(ToString::to_string).collect::<Vec<_>>().join("\n");
            emit(fmt, text, to_json(&c), true)
        }
        Command::HilbertBasis { cone } => {
            let hb = hilbert_basis(&input::cone(&cone)?)?;
            let text = hb.elements.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n");
            emit(fmt, text, to_json(&hb), true)
        }
        Command::Chi { model, p, l } => {
            let m = input::model(&dir, &model)?;
            if p > 3 {
                return Err(Failure::Usage(format!("p = {p} exceeds 3")));
            }
            let chi = chi_twisted(&m, p, &m.class(&l)?)?;
            let js = json!({"model": model, "p": p, "L": l, "chi": chi.to_string().parse::<i64>().ok()});
            emit(fmt, chi.to_string(), js.to_string(), true)
        }
        Command::Screen { path } => {
            let table = match path {
                Some(p) => load_invariant_table(&p)?,
                None => dir.invariant_table()?,
            };
            let s = suites::screen(&table)?;
            let text = format!(
                "negative: {}, nonnegative: {}\nnonnegative: {}",
                s.negative.len(),
                s.nonnegative.len(),
                s.nonnegative.join(" ")
            );
            emit(fmt, text, to_json(&s), true)
        }
        Command::VerifyCase { case } => {
            let c = if case.ends_with(".json") { load_case(Path::new(&case))? } else { dir.case(&case)? };
            let r = verify_case(&c, &dir);
            emit(fmt, r.render_text().trim_end().to_string(), to_json(&r), r.overall)
        }
        Command::VerifyAll => {
            let reports = verify_all(&dir)?;
            let sweeps = suites::all(&dir);
            let ok = reports.iter().all(|r| r.overall) && sweeps.iter().all(|s| s.pass);
            let mut text = String::new();
            let mut js = Vec::new();
            for r in &reports {
                text.push_str(&r.render_text());
                js.push(to_json(r));
            }
            for s in &sweeps {
                let _ = writeln!(text, "{}", s.line());
                js.push(s.json().to_string());
            }
            let passed = reports.iter().filter(|r| r.overall).count();
            let _ = write!(text, "verify-all: {passed}/{} cases pass; {}", reports.len(), if ok { "PASS" } else { "FAIL" });
            emit(fmt, text, js.join("\n"), ok)
        }
        Command::ReproducePaper => reproduce(&dir, fmt),
    }
}

fn reproduce(dir: &DataDir, fmt: Format) -> Outcome {
    let table = dir.invariant_table()?;
    let s = suites::screen(&table)?;
    let chi = suites::chi_rows(dir)?;
    let reports = verify_all(dir)?;
    let ok = chi.iter().all(suites::ChiRow::pass) && reports.iter().all(|r| r.overall);

    let mut rows = Vec::new();
    let mut text = String::from("screen: chi(X, T_X) = (-K)^3/2 - 18 + b2 - h21\nid\tdegree\tb2\th21\tchi(T)\n");
    for r in &table {
        let c = r.chi_tangent()?;
        let _ = writeln!(text, "{}\t{}\t{}\t{}\t{c}", r.id, r.degree, r.b2, r.h21);
        rows.push(json!({"id": r.id, "degree": r.degree, "b2": r.b2, "h21": r.h21, "chi_tangent": c}));
    }
    let _ = writeln!(text, "negative: {}, nonnegative: {}", s.negative.len(), s.nonnegative.len());
    let _ = writeln!(text, "nonnegative: {}\n", s.nonnegative.join(" "));
    for r in &chi {
        let _ = writeln!(text, "{}", r.line());
    }
    text.push('\n');
    for r in &reports {
        text.push_str(&r.render_text());
    }
    let _ = write!(text, "reproduce-paper: {}", if ok { "PASS" } else { "FAIL" });

    let js = json!({
        "screen": {"table": rows, "negative": s.negative, "nonnegative": s.nonnegative},
        "counterexamples": chi.iter().map(suites::ChiRow::json).collect::<Vec<_>>(),
        "cases": reports,
        "pass": ok,
    });
    emit(fmt, text, js.to_string(), ok)
}

/// Ignores a closed pipe so `bott verify-all | head` exits quietly.
fn print(out: &str) {
    use std::io::Write;
    let mut so = std::io::stdout().lock();
    let _ = so.write_all(out.as_bytes()).and_then(|_| so.write_all(b"\n"));
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            print(&out);
            ExitCode::SUCCESS
        }
        Err(Failure::Verify(out)) => {
            print(&out);
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
