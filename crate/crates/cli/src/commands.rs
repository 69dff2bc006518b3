//! Command dispatch. Exit codes: 0 success, 1 verification failure or
//! failed validation, 2 input error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use period_core::datum::DatumOrder;
use period_core::family::{cohomology_dims, factor_sen, family_datum, DifTower, Site};
use period_core::rings::RingMap;
use period_core::strata::{strata_decomposition, stratum_report, Verdict};

use crate::file::{parse_family_file, serialize_family, FamilyMeta};
use crate::literal::{parse_datum, parse_datum_parts, LiteralError};
use crate::verify::{run_all, run_suite, LedgerStatus, VerificationReport};
use crate::{expr, resolve_seed};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "period-strata",
    version,
    about = "Exact period dimensions and stratifications of operator towers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Records,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Sen polynomial, weights, generic datum, and the strata table of a
    /// family file.
    Analyze {
        file: PathBuf,
        /// Stratification interval; defaults to the support of the generic
        /// datum.
        #[arg(long, num_args = 2, value_names = ["I", "J"], allow_negative_numbers = true)]
        interval: Option<Vec<i64>>,
        /// Sample budget per cofinite stratum.
        #[arg(long, default_value_t = 25)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Kernel and cokernel dimensions of the level matrix for a window.
    Cohomology {
        file: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long, allow_negative_numbers = true)]
        l: i64,
        /// Evaluate at a rational point.
        #[arg(long, conflicts_with = "artinian", allow_hyphen_values = true)]
        at: Option<String>,
        /// Base change to Q[x]/(expr), e.g. "(x-1)^2".
        #[arg(long)]
        artinian: Option<String>,
    },
    /// Operations on datum literals.
    Datum {
        #[command(subcommand)]
        action: DatumAction,
    },
    /// Run a verification suite ("all" for every suite).
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Generate a family over Q[x] whose generic datum matches a target.
    Random {
        #[arg(long)]
        datum: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        rank: Option<usize>,
        /// Write the family file here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum DatumAction {
    /// Check the axioms; lists every violated condition.
    Validate {
        #[arg(long)]
        datum: String,
    },
    /// The minimal strictly greater data on an interval.
    Mincovers {
        #[arg(long)]
        datum: String,
        #[arg(long, num_args = 2, value_names = ["I", "J"], allow_negative_numbers = true)]
        interval: Vec<i64>,
    },
    /// Restrict to an interval.
    Truncate {
        #[arg(long)]
        datum: String,
        #[arg(long, num_args = 2, value_names = ["I", "J"], allow_negative_numbers = true)]
        interval: Vec<i64>,
    },
    /// Shift the weights.
    Twist {
        #[arg(long)]
        datum: String,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Pointwise comparison of two data.
    Compare {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long, num_args = 2, value_names = ["I", "J"], allow_negative_numbers = true)]
        interval: Option<Vec<i64>>,
    },
}

pub fn execute(cli: Cli, out: &mut dyn Write) -> i32 {
    match run(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(out, "error: {}", e);
            EXIT_INPUT_ERROR
        }
    }
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<i32, String> {
    match cli.command {
        Command::Analyze {
            file,
            interval,
            samples,
            format,
        } => analyze(&file, interval, samples, format, out),
        Command::Cohomology {
            file,
            k,
            l,
            at,
            artinian,
        } => cohomology(&file, k, l, at, artinian, out),
        Command::Datum { action } => datum_command(action, out),
        Command::Verify {
            suite,
            seed,
            format,
        } => verify_command(&suite, resolve_seed(seed), format, out),
        Command::Random {
            datum,
            seed,
            rank,
            out: out_path,
        } => random_command(&datum, resolve_seed(seed), rank, out_path, out),
    }
}

fn load_family(path: &PathBuf) -> Result<(DifTower, Option<FamilyMeta>), String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {}", path.display(), e))?;
    parse_family_file(&text).map_err(|e| e.to_string())
}

fn io(e: std::io::Error) -> String {
    format!("write failed: {}", e)
}

fn analyze(
    path: &PathBuf,
    interval: Option<Vec<i64>>,
    samples: usize,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, String> {
    let (tower, meta) = load_family(path)?;
    let p = tower.sen_polynomial();
    let fact = factor_sen(&p).map_err(|e| e.to_string())?;
    let generic = family_datum(&tower).map_err(|e| e.to_string())?;
    let (i, j) = match interval {
        Some(v) => (v[0], v[1]),
        None => generic.bounds().unwrap_or((0, 0)),
    };
    if i > j {
        return Err(format!("empty interval [{}, {}]", i, j));
    }
    let sep = |k: &str, v: &str| -> String {
        match format {
            Format::Text => format!("{}: {}", k, v),
            Format::Records => format!("{}={}", k, v),
        }
    };
    writeln!(out, "{}", sep("ring", &tower.ring().to_string())).map_err(io)?;
    writeln!(out, "{}", sep("rank", &tower.rank().to_string())).map_err(io)?;
    writeln!(out, "{}", sep("sen_polynomial", &p.to_string())).map_err(io)?;
    let omega_str = {
        let parts: Vec<String> = fact
            .omega
            .iter()
            .map(|(w, m)| format!("{}: {}", w, m))
            .collect();
        format!("{{{}}}", parts.join(", "))
    };
    writeln!(out, "{}", sep("omega", &omega_str)).map_err(io)?;
    writeln!(out, "{}", sep("cofactor", &fact.q.to_string())).map_err(io)?;
    writeln!(out, "{}", sep("generic_datum", &generic.to_string())).map_err(io)?;
    writeln!(out, "{}", sep("interval", &format!("[{}, {}]", i, j))).map_err(io)?;

    let strata = strata_decomposition(&tower, i, j).map_err(|e| e.to_string())?;
    if format == Format::Text {
        writeln!(out, "strata:").map_err(io)?;
    }
    let mut all_constant = true;
    for s in &strata {
        let mut deltas = Vec::new();
        let mut verdict = Verdict::Constant;
        for k in i..=j {
            for l in k + 1..=j + 1 {
                let rep = stratum_report(&tower, s, k, l, samples).map_err(|e| e.to_string())?;
                deltas.push(format!("delta({},{})={}", k, l, s.datum.delta_at(k, l)));
                if let Verdict::Counterexample(site) = rep.verdict {
                    verdict = Verdict::Counterexample(site);
                }
            }
        }
        if !matches!(verdict, Verdict::Constant) {
            all_constant = false;
        }
        let removed = if s.removed.is_empty() {
            "-".to_string()
        } else {
            s.removed
                .iter()
                .map(|(_, l)| l.to_string())
                .collect::<Vec<_>>()
                .join(" u ")
        };
        writeln!(
            out,
            "{}\t{}\tminus {}\t{}\tverdict={}",
            s.datum,
            s.closed,
            removed,
            deltas.join("\t"),
            verdict
        )
        .map_err(io)?;
    }
    let mut code = EXIT_OK;
    if let Some(meta) = meta {
        if let Some(expected) = meta.expected_datum {
            let target = parse_datum(&expected).map_err(|e| e.to_string())?;
            let matched = target == generic;
            writeln!(
                out,
                "{}",
                sep("expected_datum_match", if matched { "yes" } else { "no" })
            )
            .map_err(io)?;
            if !matched {
                code = EXIT_VERIFY_FAILED;
            }
        }
    }
    if !all_constant {
        code = EXIT_VERIFY_FAILED;
    }
    Ok(code)
}

fn cohomology(
    path: &PathBuf,
    k: i64,
    l: i64,
    at: Option<String>,
    artinian: Option<String>,
    out: &mut dyn Write,
) -> Result<i32, String> {
    let (tower, _) = load_family(path)?;
    let map = match (at, artinian) {
        (Some(a), None) => {
            let point = expr::parse_rational(&a).map_err(|e| format!("--at: {}", e))?;
            Some(RingMap::evaluate_at(tower.ring().clone(), point).map_err(|e| e.to_string())?)
        }
        (None, Some(f)) => {
            let var = tower.ring().var().unwrap_or("x");
            let modulus = expr::parse_poly(&f, var).map_err(|e| format!("--artinian: {}", e))?;
            Some(
                RingMap::project_to_quotient(tower.ring().clone(), modulus)
                    .map_err(|e| e.to_string())?,
            )
        }
        (None, None) => None,
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    };
    let dims = match &map {
        None => cohomology_dims(&tower, k, l, Site::Generic).map_err(|e| e.to_string())?,
        Some(m) => cohomology_dims(&tower, k, l, Site::Map(m)).map_err(|e| e.to_string())?,
    };
    if dims.site_dim > 1 {
        writeln!(
            out,
            "h0={} h1={} (dimensions over Q; site dimension {}, ranks {} and {})",
            dims.h0,
            dims.h1,
            dims.site_dim,
            rational_rank(dims.h0, dims.site_dim),
            rational_rank(dims.h1, dims.site_dim),
        )
        .map_err(io)?;
    } else {
        writeln!(out, "h0={} h1={}", dims.h0, dims.h1).map_err(io)?;
    }
    Ok(EXIT_OK)
}

fn rational_rank(dim: usize, site: usize) -> String {
    if dim % site == 0 {
        format!("{}", dim / site)
    } else {
        format!("{}/{}", dim, site)
    }
}

fn interval_pair(v: &[i64]) -> Result<(i64, i64), String> {
    if v.len() != 2 || v[0] > v[1] {
        return Err(format!("invalid interval {:?}", v));
    }
    Ok((v[0], v[1]))
}

fn datum_command(action: DatumAction, out: &mut dyn Write) -> Result<i32, String> {
    match action {
        DatumAction::Validate { datum } => {
            let (omega, delta) = parse_datum_parts(&datum).map_err(|e| e.to_string())?;
            match period_core::datum::DeRhamDatum::validate(&omega, &delta) {
                Ok(d) => {
                    let c = d.classify();
                    let (sd, htd, drd) = d.dimensions();
                    writeln!(out, "valid: {}", d).map_err(io)?;
                    writeln!(
                        out,
                        "classification: full={} hodge_tate={} sen={}",
                        c.full, c.hodge_tate, c.sen
                    )
                    .map_err(io)?;
                    writeln!(out, "dimensions: sd={} htd={} drd={}", sd, htd, drd)
                        .map_err(io)?;
                    Ok(EXIT_OK)
                }
                Err(violations) => {
                    writeln!(out, "invalid:").map_err(io)?;
                    for v in violations {
                        writeln!(out, "  {}", v).map_err(io)?;
                    }
                    Ok(EXIT_VERIFY_FAILED)
                }
            }
        }
        DatumAction::Mincovers { datum, interval } => {
            let d = parse_literal(&datum)?;
            let (i, j) = interval_pair(&interval)?;
            let covers = d.min_covers(i, j).map_err(|e| e.to_string())?;
            for c in covers {
                writeln!(out, "{}", c).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        DatumAction::Truncate { datum, interval } => {
            let d = parse_literal(&datum)?;
            let (i, j) = interval_pair(&interval)?;
            writeln!(out, "{}", d.truncate(i, j)).map_err(io)?;
            Ok(EXIT_OK)
        }
        DatumAction::Twist { datum, n } => {
            let d = parse_literal(&datum)?;
            writeln!(out, "{}", d.twist(n)).map_err(io)?;
            Ok(EXIT_OK)
        }
        DatumAction::Compare {
            left,
            right,
            interval,
        } => {
            let a = parse_literal(&left)?;
            let b = parse_literal(&right)?;
            let iv = match interval {
                Some(v) => Some(interval_pair(&v)?),
                None => None,
            };
            let (order, flag) = a.compare(&b, iv);
            let word = match order {
                DatumOrder::Eq => "eq",
                DatumOrder::Lt => "lt",
                DatumOrder::Gt => "gt",
                DatumOrder::Incomparable => "incomparable",
            };
            match flag {
                Some(f) => writeln!(out, "{} strict_in_interval={}", word, f).map_err(io)?,
                None => writeln!(out, "{}", word).map_err(io)?,
            }
            Ok(EXIT_OK)
        }
    }
}

fn parse_literal(s: &str) -> Result<period_core::datum::DeRhamDatum, String> {
    parse_datum(s).map_err(|e| match e {
        LiteralError::Syntax { .. } => e.to_string(),
        LiteralError::Invalid(_) => e.to_string(),
    })
}

fn verify_command(
    suite: &str,
    seed: u64,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, String> {
    let reports: Vec<VerificationReport> = if suite == "all" {
        run_all(seed)
    } else {
        match run_suite(suite, seed) {
            Some(r) => vec![r],
            None => {
                return Err(format!(
                    "unknown suite '{}'; available: {}, all",
                    suite,
                    crate::verify::SUITES.join(", ")
                ))
            }
        }
    };
    let mut ok = true;
    for r in &reports {
        ok &= r.passed();
        print_report(r, format, out)?;
    }
    Ok(if ok { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn print_report(
    r: &VerificationReport,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), String> {
    match format {
        Format::Text => {
            writeln!(
                out,
                "suite {}: {} ({} cases, {} failures)",
                r.suite,
                if r.passed() { "pass" } else { "FAIL" },
                r.cases_run,
                r.failures.len()
            )
            .map_err(io)?;
            for f in &r.failures {
                writeln!(out, "  failure [{}]: {}", f.case, f.detail).map_err(io)?;
            }
            for l in &r.ledger {
                writeln!(
                    out,
                    "  hypothesis ({}): {}",
                    match l.status {
                        LedgerStatus::Checked => "checked",
                        LedgerStatus::Assumed => "assumed",
                    },
                    l.hypothesis
                )
                .map_err(io)?;
            }
        }
        Format::Records => {
            writeln!(
                out,
                "suite={} status={} cases={} failures={}",
                r.suite,
                if r.passed() { "pass" } else { "fail" },
                r.cases_run,
                r.failures.len()
            )
            .map_err(io)?;
            for f in &r.failures {
                writeln!(out, "failure suite={} case={} detail={}", r.suite, f.case, f.detail)
                    .map_err(io)?;
            }
            for l in &r.ledger {
                writeln!(
                    out,
                    "hypothesis suite={} status={} text={}",
                    r.suite,
                    match l.status {
                        LedgerStatus::Checked => "checked",
                        LedgerStatus::Assumed => "assumed",
                    },
                    l.hypothesis
                )
                .map_err(io)?;
            }
        }
    }
    Ok(())
}

fn random_command(
    datum: &str,
    seed: u64,
    rank: Option<usize>,
    out_path: Option<PathBuf>,
    out: &mut dyn Write,
) -> Result<i32, String> {
    let target = parse_literal(datum)?;
    let tower =
        crate::random::generate_random_family(&target, seed, rank).map_err(|e| e.to_string())?;
    let meta = FamilyMeta {
        name: Some(format!("random-seed-{}", seed)),
        expected_datum: Some(target.to_string()),
    };
    let text = serialize_family(&tower, Some(&meta));
    match out_path {
        Some(p) => {
            std::fs::write(&p, &text).map_err(|e| format!("cannot write {}: {}", p.display(), e))?;
            writeln!(out, "wrote {}", p.display()).map_err(io)?;
        }
        None => {
            write!(out, "{}", text).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}
