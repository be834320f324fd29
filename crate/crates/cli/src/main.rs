use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use nilmat::comb::{
    check_am_xl, check_ax_power, check_xl_a, check_xl_am, expansion_dim, generic_solution,
    symbolic_table, CoeffTable, ExpansionReport,
};
use nilmat::exactmat::{format_rational, parse_rational};
use nilmat::golden::GoldenSuite;
use nilmat::riccati::{
    build_t, enumerate_chain_solutions, jordan_chains_nilpotent, solution_from_chains, ChainSet,
};
use nilmat::solver::{normalize_to_x0, solve_full_jordan, x0_special, FreeAssignment, SolutionReport};
use nilmat::{Error, Mat, Rational};

#[derive(Parser, Debug)]
#[command(name = "nilmat", version, about = "Exact solutions of XA - AX = X^p")]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve for A = J(n) from the first-row free values.
    SolveJordan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u32,
        /// Comma-separated `column=value` pairs for columns 2..=n.
        #[arg(long, value_parser = parse_free)]
        free: FreeValues,
    },
    /// Check whether X solves the equation for A.
    Verify {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        p: u32,
    },
    /// The special p = 2 solution with superdiagonal alpha/(1 + k alpha).
    X0 {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
        alpha: Rational,
    },
    /// Conjugate a p = 2 solution for J(n) back to X0.
    Normalize {
        #[arg(long)]
        x: PathBuf,
    },
    /// Jordan chains of T = [[A, -E], [0, A]] for nilpotent A.
    RiccatiChains {
        #[arg(long)]
        a: PathBuf,
    },
    /// p = 2 solutions from chains of T; all prefix selections when no
    /// chain file is given.
    RiccatiSolve {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        chains: Option<PathBuf>,
    },
    /// Tab-separated table of c(l, k, p).
    Coeffs {
        #[arg(long, required_unless_present = "symbolic")]
        p: Option<u32>,
        #[arg(long, default_value_t = 6)]
        lmax: usize,
        /// Print each entry as a polynomial in p.
        #[arg(long)]
        symbolic: bool,
    },
    /// Check the commutation expansions on a generated solution.
    Identities {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        l: usize,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Run the regression suite of reference examples.
    PaperSuite {
        #[arg(long)]
        filter: Option<String>,
    },
}

#[derive(Clone, Debug)]
struct FreeValues(BTreeMap<usize, Rational>);

fn parse_free(s: &str) -> Result<FreeValues, String> {
    let mut map = BTreeMap::new();
    for pair in s.split(',').filter(|p| !p.is_empty()) {
        let (k, v) = pair
            .split_once('=')
            .ok_or_else(|| format!("expected column=value, got `{pair}`"))?;
        let k: usize = k.trim().parse().map_err(|_| format!("bad column `{k}`"))?;
        let v = parse_rational(v.trim()).map_err(|e| e.to_string())?;
        if map.insert(k, v).is_some() {
            return Err(format!("column {k} given twice"));
        }
    }
    Ok(FreeValues(map))
}

fn parse_rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Debug)]
enum Failure {
    Io(PathBuf, std::io::Error),
    Json(PathBuf, serde_json::Error),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Lib(
                Error::NotASolution { .. }
                | Error::NotNormalizable
                | Error::GraphCondition
                | Error::CatalogFailure { .. },
            ) => 1,
            _ => 2,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Io(p, e) => format!("{}: {e}", p.display()),
            Failure::Json(p, e) => format!("{}: {e}", p.display()),
            Failure::Lib(e) => e.to_string(),
        }
    }
}

enum Output {
    Json { value: Value, text: String, ok: bool },
    Text(String),
}

impl Output {
    fn json<T: Serialize>(v: &T, text: String, ok: bool) -> Result<Self, Failure> {
        let value = serde_json::to_value(v).map_err(|e| Failure::Lib(Error::Internal(e.to_string())))?;
        Ok(Output::Json { value, text, ok })
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let raw = fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))?;
    serde_json::from_str(&raw).map_err(|e| Failure::Json(path.to_path_buf(), e))
}

fn report_text(r: &SolutionReport) -> String {
    let idx = r
        .nilpotency_index
        .map_or_else(|| "none".to_string(), |k| k.to_string());
    format!(
        "residual_zero: {}\nnilpotency_index: {idx}\nstrictly_upper: {}\nX =\n{}",
        r.residual_zero(),
        r.strictly_upper,
        r.x
    )
}

fn expansion_text(reports: &[ExpansionReport]) -> String {
    reports
        .iter()
        .map(|r| {
            let mut line = format!(
                "{:?} l={} m={} p={} n={}: {}",
                r.identity,
                r.l,
                r.m,
                r.p,
                r.n,
                if r.equal { "equal" } else { "DIFFERENT" }
            );
            if let Some(d) = &r.first_difference {
                line += &format!(" at ({}, {}): {} vs {}", d.row + 1, d.col + 1, d.lhs, d.rhs);
            }
            line
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn run(command: Command) -> Result<Output, Failure> {
    match command {
        Command::SolveJordan { n, p, free } => {
            let f = FreeAssignment::new(n, p, free.0)?;
            let r = solve_full_jordan(&f)?;
            let text = report_text(&r);
            Output::json(&r, text, true)
        }
        Command::Verify { a, x, p } => {
            let a: Mat = read_json(&a)?;
            let x: Mat = read_json(&x)?;
            let r = SolutionReport::new(&a, x, p)?;
            let ok = r.residual_zero();
            let text = report_text(&r);
            Output::json(&r, text, ok)
        }
        Command::X0 { n, alpha } => {
            let x = x0_special(n, &alpha)?;
            let text = x.to_string();
            Output::json(&x, text, true)
        }
        Command::Normalize { x } => {
            let x: Mat = read_json(&x)?;
            let s = normalize_to_x0(&x)?;
            let x0 = x0_special(x.rows(), x.get(0, 1))?;
            let text = format!("S =\n{s}\nX0 =\n{x0}");
            Output::json(&json!({ "s": s, "x0": x0 }), text, true)
        }
        Command::RiccatiChains { a } => {
            let a: Mat = read_json(&a)?;
            let chains = jordan_chains_nilpotent(&build_t(&a)?)?;
            let text = format!("eigenvalue {}, chain lengths {:?}", format_rational(&chains.eigenvalue), chains.lengths());
            Output::json(&chains, text, true)
        }
        Command::RiccatiSolve { a, chains } => {
            let a: Mat = read_json(&a)?;
            match chains {
                Some(path) => {
                    let set: ChainSet = read_json(&path)?;
                    let vectors: Vec<_> = set.vectors().cloned().collect();
                    let x = solution_from_chains(&a, &vectors)?;
                    let text = x.to_string();
                    Output::json(&json!({ "x": x }), text, true)
                }
                None => {
                    let all = enumerate_chain_solutions(&a)?;
                    let text = all.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("\n");
                    Output::json(&json!({ "count": all.len(), "solutions": all }), text, true)
                }
            }
        }
        Command::Coeffs { p, lmax, symbolic } => {
            let mut out = String::new();
            if symbolic {
                out += "l\tk\tc\n";
                for (l, k, poly) in symbolic_table(lmax)? {
                    out += &format!("{l}\t{k}\t{poly}\n");
                }
            } else {
                let p = p.expect("clap enforces --p");
                if p < 2 {
                    return Err(Error::Domain(format!("need p >= 2, got {p}")).into());
                }
                let table = CoeffTable::by_recurrence(p, lmax);
                out += "l\tk\tc\n";
                for (l, k, v) in table.entries() {
                    out += &format!("{l}\t{k}\t{}\n", format_rational(v));
                }
            }
            Ok(Output::Text(out))
        }
        Command::Identities { p, l, m, n } => {
            if l == 0 {
                return Err(Error::Domain("need l >= 1".into()).into());
            }
            let step = p.saturating_sub(1) as usize;
            let n = n.unwrap_or_else(|| expansion_dim((l + m * step).max(l + (l - 1) * step), p, 12));
            let (a, x) = generic_solution(p, n)?;
            let reports = vec![
                check_xl_am(&a, &x, l, m, p)?,
                check_am_xl(&a, &x, l, m, p)?,
                check_ax_power(&a, &x, l, p)?,
                check_xl_a(&a, &x, l, p)?,
            ];
            let ok = reports.iter().all(|r| r.equal);
            let text = expansion_text(&reports);
            Output::json(&reports, text, ok)
        }
        Command::PaperSuite { filter } => {
            let report = GoldenSuite::default().run(filter.as_deref());
            let text = report
                .items
                .iter()
                .map(|i| {
                    let mut line = format!("{} {}", if i.passed { "PASS" } else { "FAIL" }, i.name);
                    if let Some(d) = &i.detail {
                        line += &format!(": {d}");
                    }
                    line
                })
                .collect::<Vec<_>>()
                .join("\n");
            let ok = report.all_passed;
            Output::json(&report, text, ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Output::Text(s)) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Ok(Output::Json { value, text, ok }) => {
            if cli.pretty {
                println!("{text}");
            } else {
                println!("{value}");
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}
