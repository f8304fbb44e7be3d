//! The `cymat` command line.
//!
//! Exit codes: 0 success, 1 infeasible (a violation or rejected certificate is
//! printed), 2 usage or input error, 3 internal error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::arboricity::{
    circular_arboricity, fractional_weights, graph_connected_windows, independent_windows,
    integral_arboricity_cover, spanning_windows, CircleMapping,
};
use crate::density::{
    check_dual, check_rational, check_strength, check_uniformly_dense, check_weighted, max_density,
    strength, Condition, Violation, WeightedInstance,
};
use crate::error::Error;
use crate::format::{
    parse_certificate, parse_id_list, parse_input, parse_rationals, parse_weights, subset_of,
    Certificate, Input, ViolationRecord, WeightRecord,
};
use crate::orderings::{
    cyclic_base_ordering, cyclic_independent_ordering, exchange_linear_sequence,
    explore_cyclic_ordering,
};
use crate::push::{assign_intervals_with, EngineConfig, GonMapping};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::verify::{
    brute_force_assign_parallel, verify_circle_mapping, verify_cover, verify_cyclic_ordering,
    verify_fractional, verify_gon_mapping, verify_linear_windows, verify_violation, OrderingMode,
    WindowMode,
};

#[derive(Parser, Debug)]
#[command(
    name = "cymat",
    version,
    about = "Cyclic interval assignments, orderings and arboricity for matroids"
)]
struct Cli {
    /// Output format for certificates.
    #[arg(long, value_enum, default_value_t = OutputFormat::Human, global = true)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Human,
    Json,
}

#[derive(Args, Debug, Default)]
struct WeightArgs {
    /// File with one integer weight per element, in element order.
    #[arg(long, conflicts_with = "uniform_weight")]
    weights: Option<PathBuf>,
    /// Give every element this weight.
    #[arg(long)]
    uniform_weight: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ConditionArg {
    Weighted,
    UniformlyDense,
    Rational,
    Dual,
    Strength,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Base,
    Independent,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Maximum density γ(M) and strength, with witnesses.
    Density { input: PathBuf },
    /// Check one density condition; prints a violation when it fails.
    Check {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = ConditionArg::Weighted)]
        condition: ConditionArg,
        /// Gon size D (weighted and dual conditions).
        #[arg(long)]
        gon: Option<usize>,
        /// Circumference P/Q (rational and strength conditions).
        #[arg(long)]
        circle: Option<String>,
        #[command(flatten)]
        weights: WeightArgs,
    },
    /// Assign each element an interval of its weight on a D-gon with independent windows.
    Assign {
        input: PathBuf,
        #[arg(long)]
        gon: usize,
        #[command(flatten)]
        weights: WeightArgs,
        /// Log every push to standard error.
        #[arg(long)]
        trace: bool,
        /// Use the exhaustive search instead of the push engine.
        #[arg(long)]
        oracle: bool,
        /// Worker threads for --oracle.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Maximum number of distinct push states per run.
        #[arg(long)]
        state_cap: Option<usize>,
    },
    /// Cyclic ordering with every r consecutive elements a base (gcd(m, r) = 1).
    CyclicOrder { input: PathBuf },
    /// Cyclic ordering with every w consecutive elements independent (gcd(w, m) = 1).
    CyclicIndep {
        input: PathBuf,
        #[arg(long)]
        window: usize,
    },
    /// Sequence b_1..b_r b'_1..b'_r of two disjoint bases with base windows.
    Exchange {
        input: PathBuf,
        /// First base, as space- or comma-separated ids.
        #[arg(long, allow_hyphen_values = true)]
        first: String,
        /// Second base.
        #[arg(long, allow_hyphen_values = true)]
        second: String,
    },
    /// Circular, integral and fractional arboricity (all three by default).
    Arboricity {
        input: PathBuf,
        #[arg(long)]
        circular: bool,
        #[arg(long)]
        cover: bool,
        #[arg(long)]
        fractional: bool,
        /// Place on a circle of this circumference instead of the optimum.
        #[arg(long, conflicts_with_all = ["cover", "fractional"])]
        circle: Option<String>,
    },
    /// Circle placement with every unit window spanning (default d = strength).
    SpanningWindows {
        input: PathBuf,
        #[arg(long)]
        circle: Option<String>,
    },
    /// Exhaustive search for a cyclic ordering, for any gcd.
    Explore {
        input: PathBuf,
        /// Window length (default r(E)).
        #[arg(long)]
        window: Option<usize>,
        #[arg(long, value_enum, default_value_t = ModeArg::Base)]
        mode: ModeArg,
    },
    /// Check a certificate produced by another command against the same input.
    Verify {
        input: PathBuf,
        certificate: PathBuf,
        #[command(flatten)]
        weights: WeightArgs,
    },
}

/// Why a command stopped short of a certificate.
enum Failure {
    Usage(String),
    Internal(String),
    /// Printed like a certificate, then exit 1.
    Infeasible(Box<Certificate>, String),
    /// Output already written; exit 1.
    Rejected,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Infeasible(v) => {
                let msg = format!("infeasible: {v}");
                Failure::Infeasible(
                    Box::new(Certificate {
                        violation: Some(ViolationRecord::from_violation(&v)),
                        ..Certificate::default()
                    }),
                    msg,
                )
            }
            Error::NotApplicable(msg) => Failure::Usage(format!(
                "not applicable: {msg}; `cymat explore` searches all orderings"
            )),
            Error::EngineDefect(_) | Error::StateCapExceeded(_) => Failure::Internal(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

/// Attach the bound a violation was checked against, so `verify` can recompute it.
fn with_bound(
    result: Result<Certificate, Failure>,
    gon: Option<usize>,
    d: Option<Rational>,
) -> Result<Certificate, Failure> {
    result.map_err(|f| match f {
        Failure::Infeasible(mut cert, msg) => {
            cert.gon = gon;
            cert.d = d.map(|d| format_rational(&d));
            Failure::Infeasible(cert, msg)
        }
        other => other,
    })
}

/// An ordering with windows of length `w` fails on `A` exactly when
/// `|A| > (m/w)·r(A)`, so the violation is reported in that form, which
/// `verify` can recompute from the input alone.
fn ordering_failure(m: &crate::matroid::Matroid, w: usize, e: Error) -> Failure {
    let Error::Infeasible(v) = e else {
        return e.into();
    };
    let d = Rational::new(m.len() as i64, w as i64);
    let restated = Violation {
        condition: Condition::Rational,
        witness: v.witness,
        lhs: Rational::from_integer(v.witness.len() as i64),
        rhs: d * Rational::from_integer(m.rank(v.witness) as i64),
    };
    let msg = format!("infeasible: {restated}");
    Failure::Infeasible(
        Box::new(Certificate {
            violation: Some(ViolationRecord::from_violation(&restated)),
            d: Some(format_rational(&d)),
            ..Certificate::default()
        }),
        msg,
    )
}

/// Runs the command line with `args` (including the program name) and returns
/// the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                2
            } else {
                let _ = write!(stdout, "{text}");
                0
            };
        }
    };
    let format = cli.format;
    let emit = |cert: &Certificate, out: &mut dyn Write| {
        let text = match format {
            OutputFormat::Human => cert.to_human(),
            OutputFormat::Json => cert.to_json() + "\n",
        };
        let _ = out.write_all(text.as_bytes());
    };
    match dispatch(cli.command, format, stdout, stderr) {
        Ok(Some(cert)) => {
            emit(&cert, stdout);
            0
        }
        Ok(None) => 0,
        Err(Failure::Infeasible(cert, msg)) => {
            emit(&cert, stdout);
            let _ = writeln!(stderr, "{msg}");
            1
        }
        Err(Failure::Rejected) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(stderr, "internal error: {msg}");
            3
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_input(path: &Path) -> Result<Input, Failure> {
    parse_input(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_weights(args: &WeightArgs, m: usize) -> Result<Option<Vec<usize>>, Failure> {
    let weights = match (&args.weights, args.uniform_weight) {
        (Some(path), _) => parse_weights(&read(path)?)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
        (None, Some(k)) => vec![k; m],
        (None, None) => return Ok(None),
    };
    if weights.len() != m {
        return Err(Failure::Usage(format!(
            "{} weights for {m} elements",
            weights.len()
        )));
    }
    Ok(Some(weights))
}

fn require_weights(args: &WeightArgs, m: usize) -> Result<Vec<usize>, Failure> {
    load_weights(args, m)?
        .ok_or_else(|| Failure::Usage("give --weights FILE or --uniform-weight K".into()))
}

fn parse_circle(text: &str) -> Result<Rational, Failure> {
    let d = parse_rational(text).map_err(|e| Failure::Usage(format!("--circle: {e}")))?;
    if d <= Rational::from_integer(0) {
        return Err(Failure::Usage("--circle must be positive".into()));
    }
    Ok(d)
}

fn circle_certificate(circle: &CircleMapping) -> Certificate {
    Certificate {
        d: Some(format_rational(&circle.d)),
        positions: Some(circle.positions.iter().map(format_rational).collect()),
        mode: Some(circle.mode.name().to_string()),
        ..Certificate::default()
    }
}

fn dispatch(
    command: Command,
    format: OutputFormat,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<Option<Certificate>, Failure> {
    match command {
        Command::Density { input } => {
            let m = load_input(&input)?.matroid;
            let report = max_density(&m)?;
            let mut cert = Certificate {
                gamma: Some(format_rational(&report.gamma)),
                witness: Some(report.witness.to_vec()),
                ..Certificate::default()
            };
            if m.full_rank() > 0 {
                cert.strength = Some(format_rational(&strength(&m)?.strength));
            }
            Ok(Some(cert))
        }
        Command::Check {
            input,
            condition,
            gon,
            circle,
            weights,
        } => {
            let m = load_input(&input)?.matroid;
            let feasible = Certificate {
                feasible: Some(true),
                ..Certificate::default()
            };
            match condition {
                ConditionArg::Weighted | ConditionArg::Dual => {
                    let gon =
                        gon.ok_or_else(|| Failure::Usage("this condition needs --gon D".into()))?;
                    let inst =
                        WeightedInstance::new(m.clone(), require_weights(&weights, m.len())?, gon)?;
                    let result = if condition == ConditionArg::Weighted {
                        check_weighted(&inst)
                    } else {
                        check_dual(&inst)
                    };
                    with_bound(
                        result.map(|_| feasible).map_err(Failure::from),
                        Some(gon),
                        None,
                    )
                }
                ConditionArg::UniformlyDense => {
                    check_uniformly_dense(&m)?;
                    Ok(feasible)
                }
                ConditionArg::Rational => {
                    let d = parse_circle(circle.as_deref().ok_or_else(|| {
                        Failure::Usage("this condition needs --circle P/Q".into())
                    })?)?;
                    let w: Vec<Rational> = load_weights(&weights, m.len())?
                        .unwrap_or_else(|| vec![1; m.len()])
                        .into_iter()
                        .map(|x| Rational::from_integer(x as i64))
                        .collect();
                    with_bound(
                        check_rational(&m, &w, d)
                            .map(|_| feasible)
                            .map_err(Failure::from),
                        None,
                        Some(d),
                    )
                }
                ConditionArg::Strength => {
                    let d = parse_circle(circle.as_deref().ok_or_else(|| {
                        Failure::Usage("this condition needs --circle P/Q".into())
                    })?)?;
                    let result = check_strength(&m, d).map(|report| Certificate {
                        strength: Some(format_rational(&report.strength)),
                        ..feasible
                    });
                    with_bound(result.map_err(Failure::from), None, Some(d))
                }
            }
            .map(Some)
        }
        Command::Assign {
            input,
            gon,
            weights,
            trace,
            oracle,
            jobs,
            state_cap,
        } => {
            let m = load_input(&input)?.matroid;
            let inst = WeightedInstance::new(m.clone(), require_weights(&weights, m.len())?, gon)?;
            let mapping = if oracle {
                match brute_force_assign_parallel(&m, &inst.weights, gon, jobs.max(1))? {
                    Some(mapping) => mapping,
                    None => {
                        with_bound(
                            check_weighted(&inst)
                                .map(|_| Certificate::default())
                                .map_err(Failure::from),
                            Some(gon),
                            None,
                        )?;
                        return Err(Failure::Internal(
                            "exhaustive search found nothing although the density bound holds"
                                .into(),
                        ));
                    }
                }
            } else {
                let mut config = EngineConfig {
                    trace,
                    ..EngineConfig::default()
                };
                if let Some(cap) = state_cap {
                    config.state_cap = cap;
                }
                let assignment = with_bound(
                    assign_intervals_with(&inst, &config)
                        .map_err(Failure::from)
                        .map(|a| {
                            if trace {
                                for line in a.trace.lines() {
                                    let _ = writeln!(stderr, "{line}");
                                }
                            }
                            Certificate {
                                gon: Some(gon),
                                mapping: Some(a.mapping.positions().to_vec()),
                                ..Certificate::default()
                            }
                        }),
                    Some(gon),
                    None,
                )?;
                return Ok(Some(assignment));
            };
            Ok(Some(Certificate {
                gon: Some(gon),
                mapping: Some(mapping.positions().to_vec()),
                ..Certificate::default()
            }))
        }
        Command::CyclicOrder { input } => {
            let m = load_input(&input)?.matroid;
            let w = m.full_rank();
            let ordering = cyclic_base_ordering(&m).map_err(|e| ordering_failure(&m, w, e))?;
            Ok(Some(Certificate {
                ordering: Some(ordering.elements().to_vec()),
                window: Some(w),
                mode: Some(OrderingMode::Base.name().to_string()),
                ..Certificate::default()
            }))
        }
        Command::CyclicIndep { input, window } => {
            let m = load_input(&input)?.matroid;
            let ordering = cyclic_independent_ordering(&m, window)
                .map_err(|e| ordering_failure(&m, window, e))?;
            Ok(Some(Certificate {
                ordering: Some(ordering.elements().to_vec()),
                window: Some(window),
                mode: Some(OrderingMode::Independent.name().to_string()),
                ..Certificate::default()
            }))
        }
        Command::Exchange {
            input,
            first,
            second,
        } => {
            let m = load_input(&input)?.matroid;
            let b = parse_id_list(&first)
                .map_err(|e| Failure::Usage(format!("--first: {}", e.message)))?;
            let b2 = parse_id_list(&second)
                .map_err(|e| Failure::Usage(format!("--second: {}", e.message)))?;
            let sequence = exchange_linear_sequence(&m, b, b2)?;
            Ok(Some(Certificate {
                ordering: Some(sequence),
                window: Some(m.full_rank()),
                mode: Some("linear".to_string()),
                ..Certificate::default()
            }))
        }
        Command::Arboricity {
            input,
            circular,
            cover,
            fractional,
            circle,
        } => {
            let m = load_input(&input)?.matroid;
            if let Some(text) = circle {
                let d = parse_circle(&text)?;
                let result = independent_windows(&m, d).map_err(Failure::from);
                return with_bound(result.map(|c| circle_certificate(&c)), None, Some(d)).map(Some);
            }
            let all = !(circular || cover || fractional);
            let mut cert = Certificate::default();
            if all || circular {
                let (_, mapping) = circular_arboricity(&m)?;
                cert = circle_certificate(&mapping);
            }
            if all || cover {
                let bases = integral_arboricity_cover(&m)?.bases;
                cert.cover = Some(bases.iter().map(|b| b.to_vec()).collect());
            }
            if all || fractional {
                let fw = fractional_weights(&m)?;
                cert.d = Some(format_rational(&fw.total()));
                cert.weights = Some(
                    fw.to_vec()
                        .into_iter()
                        .map(|(b, x)| WeightRecord {
                            base: b.to_vec(),
                            weight: format_rational(&x),
                        })
                        .collect(),
                );
            }
            if cert.d.is_none() {
                cert.gamma = Some(format_rational(&max_density(&m)?.gamma));
            }
            Ok(Some(cert))
        }
        Command::SpanningWindows { input, circle } => {
            let parsed = load_input(&input)?;
            let m = parsed.matroid;
            let d = match circle {
                Some(text) => parse_circle(&text)?,
                None => strength(&m)?.strength,
            };
            let result = match &parsed.graph {
                Some(g) => graph_connected_windows(g, d),
                None => spanning_windows(&m, d),
            };
            with_bound(
                result
                    .map_err(Failure::from)
                    .map(|c| circle_certificate(&c)),
                None,
                Some(d),
            )
            .map(Some)
        }
        Command::Explore {
            input,
            window,
            mode,
        } => {
            let m = load_input(&input)?.matroid;
            let w = window.unwrap_or(m.full_rank());
            let mode = match mode {
                ModeArg::Base => OrderingMode::Base,
                ModeArg::Independent => OrderingMode::Independent,
            };
            match explore_cyclic_ordering(&m, w, mode)? {
                Some(ordering) => Ok(Some(Certificate {
                    ordering: Some(ordering.elements().to_vec()),
                    window: Some(w),
                    mode: Some(mode.name().to_string()),
                    ..Certificate::default()
                })),
                None => Err(Failure::Infeasible(
                    Box::new(Certificate {
                        found: Some(false),
                        window: Some(w),
                        mode: Some(mode.name().to_string()),
                        ..Certificate::default()
                    }),
                    format!(
                        "no cyclic ordering with {} windows of length {w}",
                        mode.name()
                    ),
                )),
            }
        }
        Command::Verify {
            input,
            certificate,
            weights,
        } => {
            let m = load_input(&input)?.matroid;
            let text = read(&certificate)?;
            let cert = parse_certificate(&text)
                .map_err(|e| Failure::Usage(format!("{}: {e}", certificate.display())))?;
            let checked = verify_certificate(&m, &cert, &weights)?;
            let (valid, failure) = match checked {
                Ok(parts) => (true, parts.join(" ")),
                Err(failure) => (false, failure),
            };
            let body = match (format, valid) {
                (OutputFormat::Human, true) => format!("valid = true\nchecked = {failure}\n"),
                (OutputFormat::Human, false) => format!("valid = false\nfailure = {failure}\n"),
                (OutputFormat::Json, true) => {
                    serde_json::json!({"valid": true, "checked": failure.split(' ').collect::<Vec<_>>()}).to_string() + "\n"
                }
                (OutputFormat::Json, false) => serde_json::json!({"valid": false, "failure": failure}).to_string() + "\n",
            };
            let _ = stdout.write_all(body.as_bytes());
            if valid {
                Ok(None)
            } else {
                let _ = writeln!(stderr, "certificate rejected: {failure}");
                Err(Failure::Rejected)
            }
        }
    }
}

/// Checks every section present in `cert`. The outer error is a usage problem;
/// the inner one a rejected certificate.
fn verify_certificate(
    m: &crate::matroid::Matroid,
    cert: &Certificate,
    weight_args: &WeightArgs,
) -> Result<Result<Vec<&'static str>, String>, Failure> {
    let usage = |msg: String| Failure::Usage(msg);
    let rational =
        |text: &str| parse_rational(text).map_err(|e| usage(format!("bad rational `{text}`: {e}")));
    let mut checked = Vec::new();

    if let Some(mapping) = &cert.mapping {
        let gon = cert.gon.ok_or_else(|| usage("mapping without D".into()))?;
        let weights = require_weights(weight_args, m.len())?;
        let mode = match cert.mode.as_deref() {
            None | Some("independent") => WindowMode::Independent,
            Some("spanning") => WindowMode::Spanning,
            Some(other) => return Err(usage(format!("unknown mapping mode `{other}`"))),
        };
        let phi = match GonMapping::new(gon, mapping.clone(), weights.clone()) {
            Ok(phi) => phi,
            Err(e) => return Ok(Err(e.to_string())),
        };
        if let Err(f) = verify_gon_mapping(m, &weights, gon, &phi, mode) {
            return Ok(Err(f.to_string()));
        }
        checked.push("mapping");
    }
    if let Some(positions) = &cert.positions {
        let d = rational(
            cert.d
                .as_deref()
                .ok_or_else(|| usage("positions without d".into()))?,
        )?;
        let mode = match cert.mode.as_deref() {
            None | Some("independent") => WindowMode::Independent,
            Some("spanning") => WindowMode::Spanning,
            Some(other) => return Err(usage(format!("unknown circle mode `{other}`"))),
        };
        let positions = parse_rationals(positions).map_err(usage)?;
        let circle = CircleMapping { d, positions, mode };
        if let Err(f) = verify_circle_mapping(m, &circle) {
            return Ok(Err(f.to_string()));
        }
        checked.push("positions");
    }
    if let Some(ordering) = &cert.ordering {
        let w = cert
            .window
            .ok_or_else(|| usage("ordering without window".into()))?;
        let result = match cert.mode.as_deref() {
            Some("linear") => verify_linear_windows(m, ordering, w),
            Some("base") | None => verify_cyclic_ordering(m, ordering, w, OrderingMode::Base),
            Some("independent") => {
                verify_cyclic_ordering(m, ordering, w, OrderingMode::Independent)
            }
            Some(other) => return Err(usage(format!("unknown ordering mode `{other}`"))),
        };
        if let Err(f) = result {
            return Ok(Err(f.to_string()));
        }
        checked.push("ordering");
    }
    if let Some(cover) = &cert.cover {
        let bases = cover
            .iter()
            .map(|b| subset_of(b))
            .collect::<Result<Vec<_>, _>>()
            .map_err(usage)?;
        if let Err(f) = verify_cover(m, &bases) {
            return Ok(Err(f.to_string()));
        }
        checked.push("cover");
    }
    if let Some(weights) = &cert.weights {
        let target = rational(
            cert.d
                .as_deref()
                .ok_or_else(|| usage("weights without d".into()))?,
        )?;
        let mut fw = Vec::with_capacity(weights.len());
        for w in weights {
            fw.push((subset_of(&w.base).map_err(usage)?, rational(&w.weight)?));
        }
        if let Err(f) = verify_fractional(m, &fw, target) {
            return Ok(Err(f.to_string()));
        }
        checked.push("weights");
    }
    if let Some(record) = &cert.violation {
        let v = record.to_violation().map_err(usage)?;
        let given = load_weights(weight_args, m.len())?;
        let bound = match v.condition {
            Condition::Weighted | Condition::Dual => {
                if given.is_none() {
                    return Err(usage(
                        "give the weights this violation was checked with".into(),
                    ));
                }
                Rational::from_integer(
                    cert.gon
                        .ok_or_else(|| usage("violation without D".into()))?
                        as i64,
                )
            }
            Condition::Rational | Condition::Strength => rational(
                cert.d
                    .as_deref()
                    .ok_or_else(|| usage("violation without d".into()))?,
            )?,
            Condition::UniformlyDense => Rational::from_integer(0),
        };
        let omega: Vec<Rational> = given
            .unwrap_or_else(|| vec![1; m.len()])
            .into_iter()
            .map(|x| Rational::from_integer(x as i64))
            .collect();
        if let Err(f) = verify_violation(m, &v, &omega, bound) {
            return Ok(Err(f.to_string()));
        }
        checked.push("violation");
    }
    if checked.is_empty() {
        return Err(usage("certificate has nothing to verify".into()));
    }
    Ok(Ok(checked))
}
