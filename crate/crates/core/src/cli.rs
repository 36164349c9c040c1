//! Command-line front end shared by the `hk-certify` binary and its tests.
//!
//! Commands that produce a [`CertificationReport`] succeed exactly when every
//! row passes; the binary maps that to its exit code.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::bounds::{
    certify_interval, final_theorem_bound, optimize_slice, quadric_ehk, radical_iterate, radical_recursion_bound,
    wy_volume_bound, BoundQuery, GapCase, QuadricParams, RadicalParams,
};
use crate::error::{Error, Result};
use crate::monomial::{ehk_estimate, MonomialIdeal};
use crate::rational::Rational;
use crate::report::{input, CertificationReport, ReportRow};
use crate::slab::vol_slab;
use crate::tables::verify_tables;
use crate::zigzag::{conjecture_threshold, secant_tangent_coeffs};

/// Environment variable capping worker threads.
pub const THREADS_ENV: &str = "HK_CERTIFY_THREADS";

#[derive(Debug, Parser)]
#[command(name = "hk-certify", version, about = "Exact lower bounds for Hilbert-Kunz multiplicities")]
pub struct Cli {
    /// Fractional digits in truncated decimal renderings.
    #[arg(long, global = true, default_value_t = 4)]
    pub digits: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Slab volume v_s of the unit cube.
    Vol {
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        s: Rational,
    },
    /// Coefficients m_d of sec + tan and thresholds 1 + m_d.
    Md {
        #[arg(long)]
        max: u32,
    },
    /// Volume lower bound e (v_s - sum v_{s - t_i}).
    Bound {
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        e: Rational,
        /// Number of generators of valuation one.
        #[arg(long, conflicts_with = "t")]
        r: Option<u64>,
        /// Comma-separated generator valuations.
        #[arg(long, value_delimiter = ',')]
        t: Option<Vec<Rational>>,
        /// Slice, as p/q, an integer or a finite decimal
        #[arg(long, required_unless_present = "optimize")]
        s: Option<Rational>,
        /// Search for a good slice instead of taking --s.
        #[arg(long, conflicts_with = "s")]
        optimize: bool,
        #[arg(long, default_value_t = 100)]
        grid: u64,
        /// Row passes when the bound is at least this
        #[arg(long)]
        target: Option<Rational>,
        /// Also write the report rows to this CSV file
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Slice search for the uniform volume bound.
    Optimize {
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        e: Rational,
        #[arg(long)]
        r: u64,
        #[arg(long, default_value_t = 100)]
        grid: u64,
        /// Row passes when the bound is at least this
        #[arg(long)]
        target: Option<Rational>,
        /// Also write the report rows to this CSV file
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Recompute the dimension 5 or 6 case tables.
    VerifyTables {
        #[arg(long, value_parser = clap::value_parser!(u32).range(5..=6))]
        dim: u32,
        /// Also write the report rows to this CSV file
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Closed-form e_HK of the quadric hypersurface.
    Quadric {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: u32,
    },
    /// Radical-extension bounds.
    Radical {
        #[arg(long)]
        dim: u32,
        #[arg(long = "case", default_value = "minimal_gap")]
        case: GapCase,
        #[arg(long, default_value_t = 6)]
        e: u64,
        /// Embedding codimension; switches to the explicit chain bound.
        #[arg(long, requires_all = ["n", "iterations"])]
        k: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        /// Field-extension degree, defaults to n.
        #[arg(long)]
        b: Option<u64>,
        /// Number of radical steps in the chain
        #[arg(long)]
        iterations: Option<u32>,
    },
    /// Normalized Frobenius colengths of a monomial ideal.
    Monomial {
        /// File with one generator exponent vector per line
        #[arg(long, conflicts_with = "ideal", required_unless_present = "ideal")]
        file: Option<PathBuf>,
        /// Inline generators, e.g. "2 0 / 1 1 / 0 2".
        #[arg(long)]
        ideal: Option<String>,
        /// Comma-separated Frobenius powers, strictly increasing
        #[arg(long, value_delimiter = ',', required = true)]
        q: Vec<u64>,
    },
    /// Certify G(e) = e (v_s - (e-2) v_{s-1}) over an integer interval.
    CertifyInterval {
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        e_low: u64,
        #[arg(long)]
        e_high: u64,
        #[arg(long)]
        s: Rational,
        #[arg(long)]
        target: Rational,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub stdout: String,
    pub success: bool,
}

impl CommandOutput {
    fn text(stdout: String) -> Self {
        CommandOutput { stdout, success: true }
    }

    fn report(report: &CertificationReport, csv: Option<&PathBuf>) -> Result<Self> {
        if let Some(path) = csv {
            std::fs::write(path, report.to_csv()?)
                .map_err(|e| Error::invalid(format!("writing {}: {e}", path.display())))?;
        }
        Ok(CommandOutput { stdout: report.to_text(), success: report.overall_pass })
    }
}

/// Sets the global worker count from [`THREADS_ENV`] when it holds a positive
/// integer. Returns the configured count.
pub fn configure_threads() -> Option<usize> {
    let n = std::env::var(THREADS_ENV).ok()?.trim().parse::<usize>().ok().filter(|&n| n > 0)?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().ok()?;
    Some(n)
}

fn approx(x: &Rational, digits: usize) -> String {
    format!("{x} ≈ {}", x.to_decimal(digits))
}

pub fn run(cli: &Cli) -> Result<CommandOutput> {
    let digits = cli.digits;
    match &cli.command {
        Command::Vol { dim, s } => {
            if *dim == 0 {
                return Err(Error::invalid("dimension must be >= 1"));
            }
            Ok(CommandOutput::text(format!("{}\n", approx(&vol_slab(*dim, s), digits))))
        }
        Command::Md { max } => {
            let m = secant_tangent_coeffs(*max)?;
            let mut out = String::from("d, m_d, 1+m_d\n");
            for (d, md) in m.iter() {
                let _ = writeln!(out, "{d}, {md}, {}", Rational::one() + md);
            }
            Ok(CommandOutput::text(out))
        }
        Command::Bound { dim, e, r, t, s, optimize, grid, target, csv } => {
            let generators_desc;
            let (slice, bound, mut notes) = if *optimize {
                let r = t
                    .is_none()
                    .then_some(r.unwrap_or(0))
                    .ok_or_else(|| Error::invalid("--optimize supports uniform --r only"))?;
                generators_desc = input("r", r);
                let best = optimize_slice(*dim, e.clone(), r, *grid)?;
                (best.slice, best.bound, vec![format!("slice found by grid search at resolution 1/{grid}")])
            } else {
                let s = s.clone().ok_or_else(|| Error::invalid("--s or --optimize is required"))?;
                let query = match t {
                    Some(ts) => {
                        generators_desc = input(
                            "t",
                            ts.iter().map(Rational::to_string).collect::<Vec<_>>().join(","),
                        );
                        BoundQuery::with_valuations(*dim, e.clone(), ts.clone(), s.clone())?
                    }
                    None => {
                        let r = r.unwrap_or(0);
                        generators_desc = input("r", r);
                        BoundQuery::uniform(*dim, e.clone(), r, s.clone())?
                    }
                };
                (s, wy_volume_bound(&query), Vec::new())
            };
            if !bound.is_positive() {
                notes.push("bound is not positive".to_string());
            }
            let mut row = ReportRow::new(
                "volume bound",
                vec![input("d", dim), input("e", e), generators_desc.clone(), input("s", &slice)],
                bound,
                target.clone(),
                digits,
            );
            row.notes = notes;
            let mut command = format!("bound --dim {dim} --e {e} --{} {}", generators_desc.0, generators_desc.1);
            if *optimize {
                let _ = write!(command, " --optimize --grid {grid}");
            } else {
                let _ = write!(command, " --s {slice}");
            }
            if let Some(t) = target {
                let _ = write!(command, " --target {t}");
            }
            CommandOutput::report(&CertificationReport::new(command, vec![row]), csv.as_ref())
        }
        Command::Optimize { dim, e, r, grid, target, csv } => {
            let best = optimize_slice(*dim, e.clone(), *r, *grid)?;
            let row = ReportRow::new(
                "optimized volume bound",
                vec![input("d", dim), input("e", e), input("r", r), input("s", &best.slice)],
                best.bound,
                target.clone(),
                digits,
            )
            .note(format!("slice found by grid search at resolution 1/{grid}"));
            let mut command = format!("optimize --dim {dim} --e {e} --r {r} --grid {grid}");
            if let Some(t) = target {
                let _ = write!(command, " --target {t}");
            }
            CommandOutput::report(&CertificationReport::new(command, vec![row]), csv.as_ref())
        }
        Command::VerifyTables { dim, csv } => {
            let report = verify_tables(*dim, digits)?;
            CommandOutput::report(&report, csv.as_ref())
        }
        Command::Quadric { p, d } => {
            let value = quadric_ehk(QuadricParams::new(*p, *d)?);
            let threshold = conjecture_threshold(*d)?;
            let exceeds = if value > threshold { "yes" } else { "no" };
            Ok(CommandOutput::text(format!(
                "{}; exceeds {threshold}: {exceeds}\n",
                approx(&value, digits)
            )))
        }
        Command::Radical { dim, case, e, k, n, b, iterations } => {
            let value = match (k, n, iterations) {
                (Some(k), Some(n), Some(it)) => {
                    let rp = RadicalParams::new(*dim, *e, *k, *n, b.unwrap_or(*n), *it)?;
                    if rp.b == rp.n {
                        radical_recursion_bound(&rp)
                    } else {
                        radical_iterate(&rp)
                    }
                }
                _ => final_theorem_bound(*dim, *e, *case)?,
            };
            Ok(CommandOutput::text(format!("{}\n", approx(&value, digits))))
        }
        Command::Monomial { file, ideal, q } => {
            let text = match (file, ideal) {
                (Some(path), _) => std::fs::read_to_string(path)
                    .map_err(|e| Error::invalid(format!("reading {}: {e}", path.display())))?,
                (None, Some(inline)) => inline.clone(),
                (None, None) => return Err(Error::invalid("--file or --ideal is required")),
            };
            let ideal: MonomialIdeal = text.parse()?;
            let seq = ehk_estimate(&ideal, q)?;
            let mut out = format!("ideal: {ideal}\nq, colength, normalized\n");
            for entry in &seq.entries {
                let _ = writeln!(out, "{}, {}, {}", entry.q, entry.colength, entry.normalized);
            }
            match seq.constant_value() {
                Some(c) => {
                    let _ = writeln!(out, "normalized constant: {c}");
                }
                None => {
                    let _ = writeln!(out, "normalized constant: none");
                }
            }
            Ok(CommandOutput::text(out))
        }
        Command::CertifyInterval { dim, e_low, e_high, s, target } => {
            let cert = certify_interval(*dim, *e_low, *e_high, s, target)?;
            let mut row = ReportRow::new(
                format!("[{e_low}, {e_high}]"),
                vec![input("d", dim), input("a", e_low), input("b", e_high), input("s", s)],
                cert.certified_bound.clone(),
                Some(target.clone()),
                digits,
            )
            .note(format!("shape {}", cert.shape.as_str()))
            .note(format!("G(a) = {}", cert.g_low))
            .note(format!("G(b) = {}", cert.g_high));
            row = match &cert.apex {
                Some(m) => row.note(format!("apex {m} ~ {}", m.to_decimal(digits))),
                None => row.note("apex undefined: v_{s-1} = 0"),
            };
            let command = format!("certify-interval --dim {dim} --e-low {e_low} --e-high {e_high} --s {s} --target {target}");
            CommandOutput::report(&CertificationReport::new(command, vec![row]), None)
        }
    }
}
