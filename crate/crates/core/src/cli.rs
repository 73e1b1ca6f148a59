//! The `arlex` command line: argument parsing and command dispatch.
//!
//! [`run`] writes to the given streams and returns the process exit code:
//! 0 on success, 1 for input, domain and validation errors, 2 when an
//! internal consistency check fails.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::construct::{almost_revlex_ci, mingen_count_ci, mingen_count_formula};
use crate::error::{Error, Result};
use crate::hilbert::{
    c_index, ci_hilbert, ci_hilbert_oracle, derivative, hf_of_ideal, CIProfile, Eventual,
    HilbertFunction,
};
use crate::ideal::MonomialIdeal;
use crate::tangent::oracle::{audit, DEFAULT_STEP_CAP};
use crate::tangent::{classify_ci, classify_stable, TangentSystem};

/// Largest colength for which `--audit` runs the full reduction.
pub const AUDIT_MAX_COLENGTH: u64 = 30;

#[derive(Parser, Debug)]
#[command(
    name = "arlex",
    version,
    about = "Almost revlex ideals, complete intersection Hilbert functions and tangent spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the almost revlex ideal with a complete intersection Hilbert function.
    Construct {
        #[arg(short, long, value_name = "D1,D2,...")]
        degrees: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a Hilbert function, optionally with derivatives and c_s.
    Hilbert {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "N")]
        upto: Option<usize>,
        /// Also print Delta^s H for s = 1..=S and c_s for s = 0..=S.
        #[arg(long, value_name = "S")]
        deriv: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Tangent space dimension at an Artinian stable ideal.
    Tangent {
        #[command(flatten)]
        input: Input,
        /// Cross-check against the full symbolic reduction (small inputs only).
        #[arg(long)]
        audit: bool,
        /// Write the linear system to PREFIX.triplets and PREFIX.columns.
        #[arg(long, value_name = "PREFIX")]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decide whether the almost revlex ideal is provably a singular point.
    Classify {
        #[command(flatten)]
        input: Input,
        /// Use the numeric criteria only.
        #[arg(long)]
        no_exact: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the invariant battery on the almost revlex ideal of a complete intersection.
    Verify {
        #[arg(short, long, value_name = "D1,D2,...")]
        degrees: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Input {
    /// Degrees of the complete intersection, comma separated.
    #[arg(short, long, value_name = "D1,D2,...")]
    degrees: Option<String>,
    /// Monomial ideal as JSON: {"vars": n, "generators": [[...], ...]}.
    #[arg(long, value_name = "FILE")]
    ideal: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Either a degree list or a monomial ideal read from a file.
enum Source {
    Degrees(Vec<u32>),
    Ideal(MonomialIdeal),
}

impl Input {
    fn resolve(&self) -> Result<Source> {
        match (&self.degrees, &self.ideal) {
            (Some(d), None) => Ok(Source::Degrees(parse_degrees(d)?)),
            (None, Some(path)) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
                Ok(Source::Ideal(MonomialIdeal::from_json(&text)?))
            }
            _ => Err(Error::Validation(
                "give exactly one of --degrees and --ideal".into(),
            )),
        }
    }
}

impl Source {
    fn ideal(&self) -> Result<MonomialIdeal> {
        match self {
            Source::Degrees(d) => almost_revlex_ci(d.len(), d),
            Source::Ideal(j) => Ok(j.clone()),
        }
    }
}

/// Parse `3,4,4` into a validated degree list.
pub fn parse_degrees(s: &str) -> Result<Vec<u32>> {
    let degrees = s
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|e| Error::Parse(format!("bad degree `{}`: {e}", p.trim())))
        })
        .collect::<Result<Vec<_>>>()?;
    crate::hilbert::validate_degrees(&degrees)?;
    Ok(degrees)
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Internal(_) => 2,
                _ => 1,
            }
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    writeln!(out, "{text}").map_err(|e| Error::Internal(format!("cannot write output: {e}")))
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Construct { degrees, format } => {
            let d = parse_degrees(&degrees)?;
            let j = almost_revlex_ci(d.len(), &d)?;
            match format {
                Format::Text => emit(out, &j.to_string())?,
                Format::Json => emit(out, &j.to_json())?,
            }
            Ok(0)
        }
        Command::Hilbert {
            input,
            upto,
            deriv,
            format,
        } => {
            let source = input.resolve()?;
            let (h, delta) = match &source {
                Source::Degrees(d) => (ci_hilbert(d, d.len(), upto.unwrap_or(0))?, 0),
                Source::Ideal(j) => {
                    let delta = if j.is_strongly_stable() {
                        j.krull_dim()?
                    } else {
                        0
                    };
                    (hf_of_ideal(j, upto.unwrap_or(0))?, delta)
                }
            };
            hilbert_output(out, &h, upto, deriv, delta, format)?;
            Ok(0)
        }
        Command::Tangent {
            input,
            audit: run_audit,
            out: prefix,
            format,
        } => {
            let j = input.resolve()?.ideal()?;
            let sys = TangentSystem::build(&j)?;
            let report = sys.report()?;
            if let Some(prefix) = prefix {
                write_system(&sys, &prefix)?;
            }
            let audit_result = if run_audit {
                let d = sys.sous_escalier().len() as u64;
                if d > AUDIT_MAX_COLENGTH {
                    Some(None)
                } else {
                    Some(Some(audit(&j, DEFAULT_STEP_CAP)?))
                }
            } else {
                None
            };
            match format {
                Format::Text => {
                    emit(out, &report.to_string())?;
                    match audit_result {
                        Some(Some(true)) => emit(out, "audit: full reduction agrees")?,
                        Some(Some(false)) => emit(out, "audit: full reduction DISAGREES")?,
                        Some(None) => emit(
                            out,
                            &format!("audit: skipped (colength above {AUDIT_MAX_COLENGTH})"),
                        )?,
                        None => {}
                    }
                }
                Format::Json => {
                    let mut v = serde_json::to_value(&report).expect("report serializes");
                    if let Some(a) = audit_result {
                        v["audit"] = match a {
                            Some(ok) => json!(ok),
                            None => json!("skipped"),
                        };
                    }
                    emit(out, &v.to_string())?;
                }
            }
            if audit_result == Some(Some(false)) {
                return Err(Error::Internal(
                    "linearized system and full reduction span different row spaces".into(),
                ));
            }
            Ok(0)
        }
        Command::Classify {
            input,
            no_exact,
            format,
        } => {
            let verdict = match input.resolve()? {
                Source::Degrees(d) => classify_ci(&d, !no_exact)?,
                Source::Ideal(j) => classify_stable(&j)?,
            };
            match format {
                Format::Text => emit(out, &verdict.to_string())?,
                Format::Json => emit(out, &verdict.to_json())?,
            }
            Ok(0)
        }
        Command::Verify { degrees, format } => {
            let d = parse_degrees(&degrees)?;
            let checks = verify(&d)?;
            let failed = checks.iter().filter(|c| !c.pass).count();
            match format {
                Format::Text => {
                    for c in &checks {
                        emit(
                            out,
                            &format!(
                                "{} {}: {}",
                                if c.pass { "PASS" } else { "FAIL" },
                                c.name,
                                c.detail
                            ),
                        )?;
                    }
                    emit(out, &format!("{} checks, {} failed", checks.len(), failed))?;
                }
                Format::Json => {
                    let list: Vec<Value> = checks
                        .iter()
                        .map(|c| json!({"check": c.name, "pass": c.pass, "detail": c.detail}))
                        .collect();
                    emit(out, &json!({"checks": list, "failed": failed}).to_string())?;
                }
            }
            if failed > 0 {
                return Err(Error::Internal(format!(
                    "{failed} verification checks failed"
                )));
            }
            Ok(0)
        }
    }
}

fn hilbert_output(
    out: &mut dyn Write,
    h: &HilbertFunction,
    upto: Option<usize>,
    deriv: Option<usize>,
    delta: usize,
    format: Format,
) -> Result<()> {
    let last = upto.unwrap_or(h.values().len() - 1);
    let values = h.prefix(last)?;
    // a shortened table no longer ends where the tail starts
    let eventual = if last + 1 >= h.values().len() {
        h.eventual()
    } else {
        Eventual::Unspecified
    };
    let mut rows = Vec::new();
    let mut cs = Vec::new();
    if let Some(s_max) = deriv {
        for s in 1..=s_max {
            let d = derivative(h, s);
            rows.push((0..=last).map(|t| d.get(t)).collect::<Option<Vec<i64>>>());
        }
        for s in 0..=s_max {
            cs.push(c_index(h, s, delta).ok());
        }
    }
    match format {
        Format::Text => {
            emit(out, &format!("H: {}", join(&values)))?;
            for (s, row) in rows.iter().enumerate() {
                let text = row
                    .as_ref()
                    .map_or_else(|| "undetermined".to_string(), |r| join(r));
                emit(out, &format!("D^{} H: {}", s + 1, text))?;
            }
            for (s, c) in cs.iter().enumerate() {
                emit(
                    out,
                    &format!(
                        "c_{s}: {}",
                        c.map_or_else(|| "undefined".to_string(), |c| c.to_string())
                    ),
                )?;
            }
        }
        Format::Json => {
            let mut v = serde_json::to_value(HilbertFunction::new(values, eventual)?)
                .expect("table serializes");
            if deriv.is_some() {
                v["derivatives"] = json!(rows);
                v["c"] = json!(cs);
            }
            emit(out, &v.to_string())?;
        }
    }
    Ok(())
}

fn write_system(sys: &TangentSystem, prefix: &std::path::Path) -> Result<()> {
    let io =
        |e: std::io::Error| Error::Validation(format!("cannot write {}: {e}", prefix.display()));
    let mut triplets = prefix.as_os_str().to_owned();
    triplets.push(".triplets");
    fs::write(&triplets, sys.triplets()).map_err(io)?;
    let mut columns = prefix.as_os_str().to_owned();
    columns.push(".columns");
    let labels: String = (0..sys.param_count())
        .map(|c| sys.parameter(c))
        .map(|p| format!("C[{}; {}]\n", p.alpha, p.beta))
        .collect();
    fs::write(&columns, labels).map_err(io)?;
    Ok(())
}

/// One line of the `verify` report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

/// Invariant battery for the almost revlex ideal of a complete intersection.
pub fn verify(degrees: &[u32]) -> Result<Vec<Check>> {
    let n = degrees.len();
    let j = almost_revlex_ci(n, degrees)?;
    let h = ci_hilbert(degrees, n, 0)?;
    let mut checks = Vec::new();
    let mut check = |name, pass, detail: String| checks.push(Check { name, pass, detail });

    check(
        "almost-revlex",
        j.is_almost_revlex(),
        format!("{} generators", j.num_generators()),
    );

    let from_ideal = hf_of_ideal(&j, 0)?.prefix(h.values().len())?;
    let expected = h.prefix(h.values().len())?;
    let oracle = ci_hilbert_oracle(degrees)?.prefix(h.values().len())?;
    check(
        "hilbert-match",
        from_ideal == expected && oracle == expected,
        format!("H: {}", join(h.values())),
    );

    let mut rs_ok = true;
    let mut pairs = Vec::new();
    for s in 0..n {
        let r = j.reduction_number(s)? as usize;
        let c = c_index(&h, s, 0)?;
        rs_ok &= r == c;
        pairs.push(format!("r_{s}={r}/c_{s}={c}"));
    }
    check("r_s-equals-c_s", rs_ok, pairs.join(" "));

    let c1 = c_index(&h, 1, 0)?;
    let u = CIProfile::new(degrees)?.u_bar(n) as usize;
    check(
        "c_1-equals-u_bar",
        c1 == u,
        format!("c_1 = {c1}, u_bar_{n} = {u}"),
    );

    let direct = j.num_generators() as i64;
    let formula = mingen_count_formula(&h, 0, n)?;
    let remark = mingen_count_ci(degrees)?;
    check(
        "generator-count",
        direct == formula && formula == remark,
        format!("|B| = {direct}, formula {formula}, per-degree {remark}"),
    );

    let sys = TangentSystem::build(&j)?;
    let r = sys.report()?;
    check(
        "bound-sandwich",
        r.lower_bound <= r.tangent_dim && r.tangent_dim <= r.upper_bound,
        format!(
            "{} <= {} <= {}",
            r.lower_bound, r.tangent_dim, r.upper_bound
        ),
    );
    check(
        "border-columns-vanish",
        sys.border_columns_vanish(),
        format!("{} parameters", r.param_count),
    );
    Ok(checks)
}
