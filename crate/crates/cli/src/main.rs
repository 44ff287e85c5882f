//! `univoque`: thresholds for periodic unique expansions from the command line.
//!
//! Exit status is 0 on success, 1 when a precondition fails and 2 when a
//! computation ran out of digit or precision budget.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use univoque::expansions::{greedy_expansion, is_unique_expansion, UniquenessCriterion};
use univoque::oracle::{min_beta_for_period, verify_ordering};
use univoque::poly::{parse_rational, rational_to_f64};
use univoque::thresholds::{
    a_k_explicit, a_k_recursive, beta_kl_bracket, beta_n, q_n, table, TABLE_HEADER,
};
use univoque::trapezoid::{
    conjecture_scan, extension_3cycle, find_lr_cycle_points, orbit, MapKind, TrapezoidParams,
};
use univoque::verify;
use univoque::{BetaValue, Error, PeriodicSeq};

#[derive(Parser)]
#[command(name = "univoque", version, about = "Unique expansions in non-integer bases")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Root precision.
    #[arg(long, env = "UNIVOQUE_EPS", default_value_t = 1e-8, global = true)]
    eps: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Recursive,
    Explicit,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Map {
    F,
    T,
}

#[derive(Subcommand)]
enum Command {
    /// Threshold table for n = 2..=N.
    Table {
        #[arg(default_value_t = 8)]
        n_max: u64,
    },
    /// Smallest base with a unique expansion of smallest period k.
    BetaN { k: u64 },
    /// The extremal period-k sequence.
    #[command(name = "a-k")]
    AK {
        k: u64,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Greedy digits of x in base beta.
    Expand {
        #[arg(long)]
        beta: BetaValue,
        /// Rational, e.g. `1`, `3/4` or `0.25`.
        #[arg(long, default_value = "1")]
        x: String,
        #[arg(long, default_value_t = 32)]
        digits: usize,
    },
    /// Whether a sequence is the unique expansion of its value.
    CheckUnique {
        #[arg(long)]
        beta: BetaValue,
        #[arg(long)]
        seq: PeriodicSeq,
        /// Digits compared before giving up.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Compare the threshold order against the Sharkovskii order for 2..=N.
    VerifyOrder {
        #[arg(default_value_t = 30)]
        n_max: u64,
    },
    /// Iterates of F or T starting at x.
    Orbit {
        #[arg(long)]
        beta: BetaValue,
        #[arg(long)]
        x: f64,
        #[arg(long, default_value_t = 16)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = Map::T)]
        map: Map,
    },
    /// Periodic orbits of T that avoid the plateau.
    LrCycles {
        #[arg(long)]
        beta: BetaValue,
        #[arg(long)]
        n: usize,
    },
    /// A 3-cycle of the continuous extension of F.
    Extension3 {
        #[arg(long)]
        beta: BetaValue,
    },
    /// Certified bracket of the Komornik-Loreti constant.
    Kl,
    /// The base at which the Thue-Morse prefix of length n becomes extremal.
    Qn { n: u64 },
    /// Threshold for period n by direct search, independent of the formula.
    MinBeta { n: usize },
    /// Exploratory scan of L-R cycles against plateau cycles.
    Conjecture {
        /// Comma-separated bases.
        #[arg(long, value_delimiter = ',', default_value = "1.75,1.78,1.785,1.787")]
        betas: Vec<f64>,
        #[arg(long, default_value_t = 4)]
        j_max: u32,
    },
    /// Run every randomized and exhaustive property suite.
    Verify {
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
    },
}

/// One command's output in all three formats.
struct Report {
    text: String,
    csv: String,
    json: Value,
    ok: bool,
}

impl Report {
    fn new(text: String, csv: String, json: Value) -> Self {
        Report {
            text,
            csv,
            json,
            ok: true,
        }
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Csv => self.csv.clone(),
            Format::Json => serde_json::to_string_pretty(&self.json).expect("report serializes"),
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report serializes")
}

fn lines<I: IntoIterator<Item = String>>(it: I) -> String {
    it.into_iter().collect::<Vec<_>>().join("\n")
}

fn positive(what: &str, eps: f64) -> Result<f64, Error> {
    if eps > 0.0 && eps < 1.0 {
        Ok(eps)
    } else {
        Err(Error::PreconditionViolated(format!("{what} = {eps} must be in (0, 1)")))
    }
}

fn run(cmd: Command, eps: f64) -> Result<Report, Error> {
    let eps = positive("eps", eps)?;
    Ok(match cmd {
        Command::Table { n_max } => {
            let rows = table(n_max, eps)?;
            let text = lines(rows.iter().map(|r| {
                format!(
                    "{:>3}  {:<14} {:.5}  {:<3}  {}  |  {}",
                    r.n,
                    r.d_beta_n,
                    r.beta_n,
                    if r.below_kl { "yes" } else { "no" },
                    r.defining_poly,
                    r.minimal_poly_if_divides
                )
            }));
            let csv = lines(std::iter::once(TABLE_HEADER.to_string()).chain(rows.iter().map(|r| r.to_csv())));
            Report::new(text, csv, to_json(&rows))
        }
        Command::BetaN { k } => {
            let b = beta_n(k, eps)?;
            let v = b.approx();
            Report::new(
                format!("{v:.5}"),
                format!("k,beta_n\n{k},{v:.5}"),
                json!({ "k": k, "beta_n": v, "exact": b.to_string() }),
            )
        }
        Command::AK { k, method } => {
            let rec = matches!(method, Method::Recursive | Method::Both).then(|| a_k_recursive(k)).transpose()?;
            let exp = matches!(method, Method::Explicit | Method::Both).then(|| a_k_explicit(k)).transpose()?;
            let agree = match (&rec, &exp) {
                (Some(a), Some(b)) => Some(a == b),
                _ => None,
            };
            let seq = rec.as_ref().or(exp.as_ref()).expect("one method runs").to_string();
            let mut text = seq.clone();
            if agree == Some(false) {
                text = format!("recursive {}\nexplicit  {}", rec.as_ref().unwrap(), exp.as_ref().unwrap());
            }
            let mut report = Report::new(
                text,
                format!("k,a_k\n{k},{seq}"),
                json!({
                    "k": k,
                    "recursive": rec.map(|s| s.to_string()),
                    "explicit": exp.map(|s| s.to_string()),
                    "agree": agree,
                }),
            );
            report.ok = agree != Some(false);
            report
        }
        Command::Expand { beta, x, digits } => {
            let x = parse_rational(&x)?;
            let w = greedy_expansion(&beta, &x, digits)?;
            Report::new(
                w.to_string(),
                format!("beta,x,digits\n{beta},{x},{w}"),
                json!({ "beta": beta.to_string(), "x": x.to_string(), "digits": w.to_string() }),
            )
        }
        Command::CheckUnique { beta, seq, budget } => {
            let unique = match budget {
                Some(b) => UniquenessCriterion::new(&beta).check_with_budget(&seq, b)?,
                None => is_unique_expansion(&beta, &seq)?,
            };
            Report::new(
                unique.to_string(),
                format!("beta,seq,unique\n{beta},{seq},{unique}"),
                json!({ "beta": beta.to_string(), "seq": seq.to_string(), "unique": unique }),
            )
        }
        Command::VerifyOrder { n_max } => {
            let r = verify_ordering(n_max)?;
            let chain: Vec<String> = r.chain.iter().map(u64::to_string).collect();
            let text = format!(
                "violations: {}\nchain (increasing beta): {}",
                r.violations.len(),
                chain.join(" < ")
            );
            let csv = lines(
                std::iter::once("k,beta_k".to_string())
                    .chain(r.values.iter().map(|(k, v)| format!("{k},{v:.5}"))),
            );
            let mut report = Report::new(text, csv, to_json(&r));
            report.ok = r.violations.is_empty();
            report
        }
        Command::Orbit { beta, x, steps, map } => {
            let kind = match map {
                Map::F => MapKind::F,
                Map::T => MapKind::T,
            };
            let pts = orbit(&beta, kind, x, steps)?;
            Report::new(
                lines(pts.iter().map(|p| format!("{p:.12}"))),
                lines(
                    std::iter::once("step,x".to_string())
                        .chain(pts.iter().enumerate().map(|(i, p)| format!("{i},{p:.12}"))),
                ),
                json!({ "beta": beta.to_string(), "orbit": pts }),
            )
        }
        Command::LrCycles { beta, n } => {
            let cycles = find_lr_cycle_points(&TrapezoidParams::new(beta), n)?;
            let fmt_pts = |pts: &[f64]| pts.iter().map(|p| format!("{p:.12}")).collect::<Vec<_>>().join(" ");
            Report::new(
                lines(cycles.iter().map(|c| format!("{}  {}", c.itinerary, fmt_pts(&c.points)))),
                lines(
                    std::iter::once("itinerary,points".to_string())
                        .chain(cycles.iter().map(|c| format!("{},{}", c.itinerary, fmt_pts(&c.points)))),
                ),
                to_json(&cycles),
            )
        }
        Command::Extension3 { beta } => {
            let c = extension_3cycle(&beta)?;
            Report::new(
                format!(
                    "x* = {:.12}\norbit {:.12} {:.12} {:.12}\nbracket ({:.12}, {:.12})\nresidual {:.1e}",
                    c.x_star, c.orbit[0], c.orbit[1], c.orbit[2], c.bracket.0, c.bracket.1, c.residual
                ),
                format!(
                    "x_star,s_x,s2_x,lo,hi,residual\n{:.12},{:.12},{:.12},{:.12},{:.12},{:e}",
                    c.x_star, c.orbit[1], c.orbit[2], c.bracket.0, c.bracket.1, c.residual
                ),
                to_json(&c),
            )
        }
        Command::Kl => {
            let b = beta_kl_bracket(eps)?;
            let (lo, hi) = (rational_to_f64(&b.lo), rational_to_f64(&b.hi));
            Report::new(
                format!("{:.5}  [{lo:.10}, {hi:.10}]", b.midpoint_f64()),
                format!("lo,hi\n{lo:.12},{hi:.12}"),
                json!({ "lo": lo, "hi": hi, "lo_exact": b.lo.to_string(), "hi_exact": b.hi.to_string() }),
            )
        }
        Command::Qn { n } => {
            let q = q_n(n, eps)?;
            let v = q.approx();
            Report::new(
                format!("{v:.5}"),
                format!("n,q_n\n{n},{v:.5}"),
                json!({ "n": n, "q_n": v, "exact": q.to_string() }),
            )
        }
        Command::MinBeta { n } => {
            let r = min_beta_for_period(n, eps)?;
            Report::new(
                format!(
                    "{:.5}  [{:.10}, {:.10}]  witness {}",
                    r.midpoint(),
                    r.beta_lo,
                    r.beta_hi,
                    r.witness_sequence
                ),
                format!(
                    "n,beta_lo,beta_hi,witness\n{n},{:.12},{:.12},{}",
                    r.beta_lo, r.beta_hi, r.witness_sequence
                ),
                to_json(&r),
            )
        }
        Command::Conjecture { betas, j_max } => {
            let rows = conjecture_scan(&betas, j_max)?;
            let csv = lines(std::iter::once("beta,period,lr_cycle,plateau_cycle".to_string()).chain(
                rows.iter().map(|r| format!("{},{},{},{}", r.beta, r.period, r.lr_cycle, r.plateau_cycle)),
            ));
            Report::new(csv.replace(',', "  "), csv, to_json(&rows))
        }
        Command::Verify { seed } => {
            let results = verify::run_all(seed)?;
            let row = |r: &verify::SuiteResult| {
                let tag = if r.passed() { "PASS" } else { "FAIL" };
                format!("{tag} {}: {} cases, {} failed", r.name, r.cases, r.failed)
            };
            let csv = lines(
                std::iter::once("suite,cases,failed".to_string())
                    .chain(results.iter().map(|r| format!("{},{},{}", r.name, r.cases, r.failed))),
            );
            let mut report = Report::new(lines(results.iter().map(row)), csv, to_json(&results));
            report.ok = results.iter().all(|r| r.passed());
            report
        }
    })
}

fn main() -> ExitCode {
    // Invalid arguments are domain errors; 2 is reserved for exhausted budgets.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command, cli.eps) {
        Ok(report) => {
            println!("{}", report.render(cli.format));
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_undecided() { 2 } else { 1 })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eps_must_lie_in_unit_interval() {
        assert!(positive("eps", 1e-8).is_ok());
        for bad in [0.0, -1.0, 1.0, f64::NAN] {
            assert!(positive("eps", bad).is_err());
        }
    }

    #[test]
    fn report_renders_each_format() {
        let r = Report::new("t".into(), "a\n1".into(), json!({ "a": 1 }));
        assert_eq!(r.render(Format::Text), "t");
        assert_eq!(r.render(Format::Csv), "a\n1");
        assert_eq!(r.render(Format::Json), "{\n  \"a\": 1\n}");
    }

    #[test]
    fn subcommands_parse() {
        let cli = Cli::try_parse_from(["univoque", "a-k", "6", "--method", "explicit", "--format", "csv"]).unwrap();
        assert!(matches!(cli.command, Command::AK { k: 6, method: Method::Explicit }));
        assert!(cli.format == Format::Csv);
        assert!(Cli::try_parse_from(["univoque", "check-unique", "--beta", "3", "--seq", "(01)^w"]).is_err());
    }

    #[test]
    fn undecided_runs_report_as_errors() {
        let cmd = Command::CheckUnique {
            beta: "1.8".parse().unwrap(),
            seq: "(110)^w".parse().unwrap(),
            budget: Some(1),
        };
        assert!(run(cmd, 1e-8).err().unwrap().is_undecided());
    }
}
