//! Command-line front end: core bijections, tableau enumeration, Kostka
//! matrices, basis expansions, Pieri products, the two involutions, and
//! the verification suites. All output is line-delimited JSON except the
//! display-only `--render` grids.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use serde::Serialize;

use kschur_core::involutions::{tau, tau_with_trace};
use kschur_core::shapes::{core_of, k_conjugate, kbounded_of, Composition, Partition};
use kschur_core::symfunc::{
    self, h_expand, kostka_matrix, multiply_e, multiply_h, omega, to_schur, SymFunc,
};
use kschur_core::tableaux::{
    enumerate, skew_k_kostka, transposed_skew_kostka, KTableau, RawTableau, TableauMode,
};
use kschur_core::verify::{run_suite, Suite};
use kschur_core::{Cell, Error, Result};

#[derive(Parser)]
#[command(name = "kschur", version, about = "Exact combinatorics of k-Schur functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Map a k-bounded partition to its (k+1)-core and back, or k-conjugate it
    #[command(group(ArgGroup::new("direction").required(true).args(["to_core", "from_core", "kconjugate"])))]
    Core {
        #[arg(long)]
        k: usize,
        /// Treat the input as k-bounded and print its (k+1)-core
        #[arg(long)]
        to_core: bool,
        /// Treat the input as a (k+1)-core and print the k-bounded partition
        #[arg(long)]
        from_core: bool,
        /// Print the k-conjugate of a k-bounded partition
        #[arg(long)]
        kconjugate: bool,
        /// Comma-separated parts, e.g. "4,3,2,2,1,1"; empty for the empty partition
        #[arg(long)]
        partition: String,
    },
    /// Enumerate, count or render k-tableaux
    #[command(group(ArgGroup::new("shape_arg").required(true).args(["shape", "shape_core"])))]
    Tab {
        #[arg(long)]
        k: usize,
        /// k-weight, e.g. "1,3,1,2,1,1" (zeros allowed)
        #[arg(long)]
        weight: String,
        /// Outer shape as a k-bounded partition
        #[arg(long)]
        shape: Option<String>,
        /// Outer shape given directly as a (k+1)-core
        #[arg(long)]
        shape_core: Option<String>,
        /// Inner shape as a k-bounded partition (skew tableaux)
        #[arg(long, default_value = "")]
        inner: String,
        /// Rows strictly increasing, columns weakly increasing
        #[arg(long)]
        transposed: bool,
        /// Print only the number of tableaux
        #[arg(long)]
        count: bool,
        /// Print letter.residue grids instead of JSON, top row first
        #[arg(long)]
        render: bool,
    },
    /// Print the k-Kostka matrix of one degree (uses the on-disk cache)
    Kostka {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        degree: usize,
        /// Print the exact integer inverse instead
        #[arg(long)]
        inverse: bool,
    },
    /// Expand a k-Schur function in the Schur basis, or h in the k-Schur basis
    Expand {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lambda: String,
        /// "schur" (Schur expansion of the k-Schur function) or "kschur"
        /// (k-Schur expansion of the homogeneous function)
        #[arg(long, default_value = "schur")]
        basis: String,
    },
    /// Multiply a k-Schur function by h_ell or e_ell
    Pieri {
        #[arg(long)]
        k: usize,
        /// "h" or "e"
        #[arg(long)]
        mode: String,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        lambda: String,
    },
    /// Apply the omega involution to a k-Schur function
    Omega {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lambda: String,
    },
    /// Exchange adjacent k-weight components of a tableau (JSON on stdin or --input)
    Tau {
        /// Position of the first of the two letters to swap
        #[arg(long)]
        a: usize,
        /// Path to the tableau JSON; stdin when omitted
        #[arg(long)]
        input: Option<PathBuf>,
        /// Emit the intermediate stages as well
        #[arg(long)]
        trace: bool,
    },
    /// Run a verification suite; exits 1 on any failed check
    Verify {
        /// One of: triangularity, weight-symmetry, tau, chains, pieri-h,
        /// pieri-e, msign, omega, rectangle, reduction, all
        #[arg(long)]
        suite: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_degree: usize,
    },
}

#[derive(Serialize)]
struct ResultLine<'a> {
    result: &'a Partition,
}

#[derive(Serialize)]
struct CountLine {
    count: i64,
}

#[derive(Serialize)]
struct TermsLine {
    basis: String,
    terms: Vec<TermEntry>,
}

#[derive(Serialize)]
struct TermEntry {
    index: Partition,
    coeff: i64,
}

#[derive(Serialize)]
struct StageLine<'a> {
    stage: &'a str,
    class: usize,
    tableau: &'a KTableau,
}

#[derive(Serialize)]
struct InverseLine {
    version: u32,
    k: usize,
    degree: usize,
    order: Vec<Partition>,
    inverse: Vec<Vec<i64>>,
}

fn main() -> ExitCode {
    if let Ok(dir) = std::env::var("KSCHUR_CACHE_DIR") {
        if !dir.is_empty() {
            symfunc::set_cache_dir(Some(PathBuf::from(dir)));
        }
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn parse_partition(text: &str) -> Result<Partition> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = trimmed
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| Error::Precondition(format!("invalid part {tok:?}")))
        })
        .collect::<Result<Vec<usize>>>()?;
    Partition::new(parts)
}

fn parse_weight(text: &str) -> Result<Composition> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Composition::new(Vec::new()));
    }
    let parts = trimmed
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| Error::Precondition(format!("invalid weight component {tok:?}")))
        })
        .collect::<Result<Vec<usize>>>()?;
    Ok(Composition::new(parts))
}

fn print_json(value: &impl Serialize) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}

fn print_terms(f: &SymFunc) {
    print_json(&TermsLine {
        basis: f.basis().name(),
        terms: f
            .sorted_terms()
            .into_iter()
            .map(|(index, coeff)| TermEntry { index, coeff })
            .collect(),
    });
}

fn render(t: &KTableau) -> String {
    let width = t
        .cells()
        .iter()
        .map(|&(c, v)| format!("{v}.{}", t.residue(c)).len())
        .max()
        .unwrap_or(1);
    let mut lines = Vec::new();
    for row in (1..=t.num_rows()).rev() {
        let mut tokens = Vec::new();
        for col in 1..=t.outer().row_len(row) {
            let cell = Cell::new(row, col);
            let token = match t.letter_at(cell) {
                Some(v) => format!("{v}.{}", t.residue(cell)),
                None => String::new(),
            };
            tokens.push(format!("{token:<width$}"));
        }
        lines.push(tokens.join(" ").trim_end().to_string());
    }
    lines.join("\n")
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Core { k, to_core, from_core, kconjugate: _, partition } => {
            if k == 0 {
                return Err(Error::Precondition("k must be at least 1".to_string()));
            }
            let p = parse_partition(&partition)?;
            let result = if to_core {
                core_of(&p, k)?
            } else if from_core {
                kbounded_of(&p, k)?
            } else {
                if !p.is_bounded_by(k) {
                    return Err(Error::PartExceedsK);
                }
                k_conjugate(&p, k)?
            };
            print_json(&ResultLine { result: &result });
            Ok(ExitCode::SUCCESS)
        }
        Command::Tab { k, weight, shape, shape_core, inner, transposed, count, render: do_render } => {
            if k == 0 {
                return Err(Error::Precondition("k must be at least 1".to_string()));
            }
            let weight = parse_weight(&weight)?;
            let outer = match (shape, shape_core) {
                (Some(text), None) => parse_partition(&text)?,
                (None, Some(text)) => kbounded_of(&parse_partition(&text)?, k)?,
                _ => unreachable!("clap enforces the shape group"),
            };
            let inner = parse_partition(&inner)?;
            let mode = if transposed {
                TableauMode::Transposed
            } else {
                TableauMode::ColumnStrict
            };
            if count {
                let n = match mode {
                    TableauMode::ColumnStrict => skew_k_kostka(k, &outer, &inner, &weight)?,
                    TableauMode::Transposed => transposed_skew_kostka(k, &outer, &inner, &weight)?,
                };
                print_json(&CountLine { count: n });
            } else {
                let tableaux = enumerate(k, &outer, &inner, &weight, mode)?;
                for t in &tableaux {
                    if do_render {
                        println!("{}", render(t));
                        println!();
                    } else {
                        print_json(t);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Kostka { k, degree, inverse } => {
            if k == 0 {
                return Err(Error::Precondition("k must be at least 1".to_string()));
            }
            let m = kostka_matrix(k, degree)?;
            if inverse {
                print_json(&InverseLine {
                    version: 1,
                    k,
                    degree,
                    order: m.index().to_vec(),
                    inverse: m.inverse()?,
                });
            } else {
                print_json(&symfunc::KostkaFile::from(m.as_ref()));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Expand { k, lambda, basis } => {
            let lambda = parse_partition(&lambda)?;
            let f = match basis.as_str() {
                "schur" => to_schur(&SymFunc::kschur(k, lambda)?)?,
                "kschur" => h_expand(k, &lambda)?,
                other => {
                    return Err(Error::Precondition(format!(
                        "unknown basis {other:?}; use schur or kschur"
                    )))
                }
            };
            print_terms(&f);
            Ok(ExitCode::SUCCESS)
        }
        Command::Pieri { k, mode, ell, lambda } => {
            let lambda = parse_partition(&lambda)?;
            let f = SymFunc::kschur(k, lambda)?;
            let product = match mode.as_str() {
                "h" => multiply_h(k, ell, &f)?,
                "e" => multiply_e(k, ell, &f)?,
                other => {
                    return Err(Error::Precondition(format!(
                        "unknown Pieri mode {other:?}; use h or e"
                    )))
                }
            };
            print_terms(&product);
            Ok(ExitCode::SUCCESS)
        }
        Command::Omega { k, lambda } => {
            let lambda = parse_partition(&lambda)?;
            let f = omega(&SymFunc::kschur(k, lambda)?);
            let (index, _) = f.sorted_terms().into_iter().next().expect("one term");
            print_json(&ResultLine { result: &index });
            Ok(ExitCode::SUCCESS)
        }
        Command::Tau { a, input, trace } => {
            let text = match input {
                Some(path) => std::fs::read_to_string(&path).map_err(|e| {
                    Error::Precondition(format!("cannot read {}: {e}", path.display()))
                })?,
                None => {
                    let mut buf = String::new();
                    std::io::stdin()
                        .read_to_string(&mut buf)
                        .map_err(|e| Error::Precondition(format!("cannot read stdin: {e}")))?;
                    buf
                }
            };
            let raw: RawTableau = serde_json::from_str(&text)
                .map_err(|e| Error::Precondition(format!("invalid tableau JSON: {e}")))?;
            let t = raw.into_tableau(TableauMode::ColumnStrict)?;
            let weight = t.weight();
            let problems = t.diagnostics(&weight);
            if !problems.is_empty() {
                return Err(Error::Precondition(format!(
                    "input is not a valid k-tableau: {}",
                    problems.join("; ")
                )));
            }
            if trace {
                let (result, stages) = tau_with_trace(&t, a)?;
                for s in &stages {
                    print_json(&StageLine {
                        stage: s.stage,
                        class: s.class_index,
                        tableau: &s.tableau,
                    });
                }
                print_json(&result);
            } else {
                print_json(&tau(&t, a)?);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, k, max_degree } => {
            if k == 0 {
                return Err(Error::Precondition("k must be at least 1".to_string()));
            }
            let suite = Suite::parse(&suite).ok_or_else(|| {
                Error::Precondition(format!(
                    "unknown suite {suite:?}; one of {}",
                    Suite::ALL_NAMES.join(", ")
                ))
            })?;
            let results = run_suite(suite, k, max_degree)?;
            let mut all_pass = true;
            for r in &results {
                all_pass &= r.passed();
                print_json(r);
            }
            println!(
                "{}",
                serde_json::json!({ "status": if all_pass { "pass" } else { "fail" } })
            );
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}
