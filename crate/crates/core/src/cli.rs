//! Command-line front end.
//!
//! Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success; `certify` found membership; `--verify` passed |
//! | 1 | `--verify` failed, or a transport identity did not hold |
//! | 2 | parse or usage error, or invalid input |
//! | 3 | `certify` proved exclusion |
//! | 4 | `certify` undecided; `mclass` premise held but the sum was not negative |
//! | 5 | `mclass` premise violated |
//!
//! Every report carries `schema_version`. Rationals are `"p/q"` strings and
//! enclosures are pairs of such strings, so JSON reports are lossless.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gaps::{self, GapVerdict, Status, DEFAULT_NMAX, MAX_ORDER};
use crate::hadamard::{affine_transport_loewner, scaling_matrix};
use crate::loewner::build_loewner;
use crate::matrix::RatMatrix;
use crate::mclass::{self, MClassOutcome, PRESET_NAMES};
use crate::moments::{moment_flags, Atom, MomentReport, Weight};
use crate::ratpoly::{parse_rat, to_f64, Rat, RatPoly};
use crate::realroots::Interval;
use crate::sampler::{falsify_monotone, pair_violation, FalsificationReport, DEFAULT_TOL};

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_EXCLUDED: i32 = 3;
pub const EXIT_UNKNOWN: i32 = 4;
pub const EXIT_PREMISE: i32 = 5;

/// Environment variable capping the classifier order.
pub const NMAX_ENV: &str = "MONOGAP_NMAX";

#[derive(Debug, Parser)]
#[command(name = "monogap", version, about = "Exact matrix-monotonicity analysis of polynomials")]
pub struct Cli {
    /// Emit the JSON report instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    /// Re-verify a saved JSON report from its inputs.
    #[arg(long, value_name = "FILE")]
    pub verify: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Certify or refute membership in P_n([0, alpha)).
    Certify(CertifyArgs),
    /// Classify every order up to nmax and locate the gap.
    Gaps(GapsArgs),
    /// Exact counterexample to membership in M_n([0, a]).
    Mclass(MclassArgs),
    /// Hankel moment flags of M_n(f;0).
    Moments(MomentsArgs),
    /// Randomized search for C <= D with f(C) <= f(D) violated.
    Falsify(FalsifyArgs),
    /// Check the affine transport identity for Loewner matrices.
    Transport(TransportArgs),
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct PolySource {
    /// Coefficients low to high, e.g. "0,1,0,1/3".
    #[arg(long, value_parser = parse_poly_arg, allow_hyphen_values = true)]
    pub poly: Option<RatPoly>,
    /// Use the polynomial of a bundled preset.
    #[arg(long, value_parser = parse_preset_arg)]
    pub preset: Option<String>,
}

impl PolySource {
    fn resolve(&self) -> Result<RatPoly> {
        match (&self.poly, &self.preset) {
            (Some(p), _) => Ok(p.clone()),
            (None, Some(name)) => Ok(preset_or_err(name)?.f),
            (None, None) => Err(Error::InvalidArgument("--poly or --preset required".into())),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct CertifyArgs {
    #[command(flatten)]
    pub source: PolySource,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_parser = parse_rat_arg, allow_hyphen_values = true)]
    pub alpha_hint: Option<Rat>,
}

#[derive(Debug, Clone, Args)]
pub struct GapsArgs {
    #[command(flatten)]
    pub source: PolySource,
    #[arg(long)]
    pub nmax: Option<usize>,
    #[arg(long, value_parser = parse_rat_arg, allow_hyphen_values = true)]
    pub alpha_hint: Option<Rat>,
}

#[derive(Debug, Clone, Args)]
pub struct MclassArgs {
    #[arg(long, value_parser = parse_preset_arg, conflicts_with_all = ["poly", "n", "a", "p", "nodes"])]
    pub preset: Option<String>,
    #[arg(long, value_parser = parse_poly_arg, allow_hyphen_values = true, requires_all = ["n", "a", "p", "nodes"])]
    pub poly: Option<RatPoly>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Right endpoint of [0, a].
    #[arg(long, value_parser = parse_rat_arg, allow_hyphen_values = true)]
    pub a: Option<Rat>,
    /// The polynomial p with p(0) = 0 and p >= 0 on [0, inf).
    #[arg(long, value_parser = parse_poly_arg, allow_hyphen_values = true)]
    pub p: Option<RatPoly>,
    /// 2n distinct nodes in (0, a), comma separated.
    #[arg(long, value_delimiter = ',', value_parser = parse_rat_arg, allow_hyphen_values = true)]
    pub nodes: Option<Vec<Rat>>,
}

#[derive(Debug, Clone, Args)]
pub struct MomentsArgs {
    #[command(flatten)]
    pub source: PolySource,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Clone, Args)]
pub struct FalsifyArgs {
    #[command(flatten)]
    pub source: PolySource,
    #[arg(long)]
    pub n: usize,
    /// Closed interval "lo,hi", brackets optional.
    #[arg(long, value_parser = parse_interval_arg, allow_hyphen_values = true)]
    pub interval: Interval,
    #[arg(long, default_value_t = 10_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Debug, Clone, Args)]
pub struct TransportArgs {
    #[command(flatten)]
    pub source: PolySource,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_parser = parse_rat_arg, allow_hyphen_values = true)]
    pub slope: Rat,
    #[arg(long, value_parser = parse_rat_arg, default_value = "0", allow_hyphen_values = true)]
    pub shift: Rat,
    #[arg(long, value_parser = parse_rat_arg, default_value = "0", allow_hyphen_values = true)]
    pub t0: Rat,
}

fn parse_rat_arg(s: &str) -> std::result::Result<Rat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

fn parse_poly_arg(s: &str) -> std::result::Result<RatPoly, String> {
    s.parse::<RatPoly>().map_err(|e| e.to_string())
}

fn parse_rats_arg(s: &str) -> std::result::Result<Vec<Rat>, String> {
    s.split(',').map(|x| parse_rat_arg(x.trim())).collect()
}

fn parse_preset_arg(s: &str) -> std::result::Result<String, String> {
    if PRESET_NAMES.contains(&s) {
        Ok(s.to_string())
    } else {
        Err(format!("unknown preset {s:?}; expected one of {}", PRESET_NAMES.join(", ")))
    }
}

fn parse_interval_arg(s: &str) -> std::result::Result<Interval, String> {
    let inner = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
    let ends = parse_rats_arg(inner)?;
    match ends.as_slice() {
        [lo, hi] if lo < hi => Ok(Interval::closed(lo.clone(), hi.clone())),
        [_, _] => Err("interval needs lo < hi".into()),
        _ => Err(format!("expected \"lo,hi\", got {s:?}")),
    }
}

fn preset_or_err(name: &str) -> Result<mclass::Preset> {
    mclass::preset(name).ok_or_else(|| Error::InvalidArgument(format!("unknown preset {name:?}")))
}

/// Classifier order: the requested one (default `DEFAULT_NMAX`), capped by
/// `MONOGAP_NMAX` and by `MAX_ORDER`.
pub fn effective_nmax(requested: Option<usize>) -> Result<usize> {
    let cap = match std::env::var(NMAX_ENV) {
        Ok(v) => Some(
            v.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("{NMAX_ENV}={v:?} is not a nonnegative integer")))?,
        ),
        Err(_) => None,
    };
    let n = match (requested, cap) {
        (Some(r), Some(c)) => r.min(c),
        (Some(r), None) => r,
        (None, Some(c)) => c,
        (None, None) => DEFAULT_NMAX,
    };
    Ok(n.clamp(1, MAX_ORDER))
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Inputs {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poly: Option<RatPoly>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nmax: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "crate::serde_rat::option")]
    pub alpha_hint: Option<Rat>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "crate::serde_rat::option")]
    pub a: Option<Rat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<RatPoly>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nodes: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interval: Option<Interval>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trials: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "crate::serde_rat::option")]
    pub slope: Option<Rat>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "crate::serde_rat::option")]
    pub shift: Option<Rat>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "crate::serde_rat::option")]
    pub t0: Option<Rat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
}

impl Inputs {
    fn required_poly(&self) -> Result<&RatPoly> {
        self.poly.as_ref().ok_or_else(|| Error::InvalidArgument("report has no polynomial".into()))
    }

    fn required_n(&self) -> Result<usize> {
        self.n.ok_or_else(|| Error::InvalidArgument("report has no order".into()))
    }

    fn rat_nodes(&self) -> Result<Vec<Rat>> {
        self.nodes.iter().flatten().map(|s| parse_rat(s)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyCheck {
    pub name: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Results {
    Certify { status: Status, alpha_unbounded: bool },
    Gaps { verdict: GapVerdict },
    Mclass { outcome: MClassOutcome },
    Moments { report: MomentReport },
    Falsify { report: FalsificationReport },
    Transport { holds: bool, lhs: RatMatrix, rhs: RatMatrix },
    Verify { command: String, ok: bool, checks: Vec<VerifyCheck> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub inputs: Inputs,
    pub results: Results,
    pub timing: Timing,
}

/// A report together with the process exit code it implies.
#[derive(Clone, Debug, PartialEq)]
pub struct CommandOutput {
    pub report: Report,
    pub exit_code: i32,
}

fn finish(command: &str, inputs: Inputs, results: Results, start: Instant, exit_code: i32) -> CommandOutput {
    let report = Report {
        schema_version: SCHEMA_VERSION,
        command: command.to_string(),
        inputs,
        results,
        timing: Timing { elapsed_ms: start.elapsed().as_secs_f64() * 1e3 },
    };
    CommandOutput { report, exit_code }
}

fn status_exit(status: &Status) -> i32 {
    if status.is_member() {
        EXIT_OK
    } else if status.is_excluded() {
        EXIT_EXCLUDED
    } else {
        EXIT_UNKNOWN
    }
}

fn outcome_exit(outcome: &MClassOutcome) -> i32 {
    match outcome {
        MClassOutcome::Certificate(_) => EXIT_OK,
        MClassOutcome::PremiseFailed { .. } => EXIT_PREMISE,
        MClassOutcome::NotNegative { .. } => EXIT_UNKNOWN,
    }
}

pub fn cmd_certify(args: &CertifyArgs) -> Result<CommandOutput> {
    let start = Instant::now();
    let f = args.source.resolve()?;
    let status = gaps::status_at(&f, args.n, args.alpha_hint.as_ref())?;
    let alpha_unbounded = matches!(&status, Status::Member { alpha: None, .. });
    let exit = status_exit(&status);
    let inputs = Inputs {
        poly: Some(f),
        preset: args.source.preset.clone(),
        n: Some(args.n),
        alpha_hint: args.alpha_hint.clone(),
        ..Default::default()
    };
    Ok(finish("certify", inputs, Results::Certify { status, alpha_unbounded }, start, exit))
}

pub fn cmd_gaps(args: &GapsArgs) -> Result<CommandOutput> {
    let start = Instant::now();
    let f = args.source.resolve()?;
    let nmax = effective_nmax(args.nmax)?;
    let verdict = gaps::classify_with_hint(&f, nmax, args.alpha_hint.as_ref())?;
    let inputs = Inputs {
        poly: Some(f),
        preset: args.source.preset.clone(),
        nmax: Some(nmax),
        alpha_hint: args.alpha_hint.clone(),
        ..Default::default()
    };
    Ok(finish("gaps", inputs, Results::Gaps { verdict }, start, EXIT_OK))
}

pub fn cmd_mclass(args: &MclassArgs) -> Result<CommandOutput> {
    let start = Instant::now();
    let (f, n, a, p, nodes) = match &args.preset {
        Some(name) => {
            let pr = preset_or_err(name)?;
            (pr.f, pr.n, pr.a, pr.p, pr.lambdas)
        }
        None => {
            let missing = || Error::InvalidArgument("need --preset or all of --poly --n --a --p --nodes".into());
            (
                args.poly.clone().ok_or_else(missing)?,
                args.n.ok_or_else(missing)?,
                args.a.clone().ok_or_else(missing)?,
                args.p.clone().ok_or_else(missing)?,
                args.nodes.clone().ok_or_else(missing)?,
            )
        }
    };
    let outcome = mclass::mclass_falsify(&f, n, &a, &p, &nodes)?;
    let exit = outcome_exit(&outcome);
    let inputs = Inputs {
        poly: Some(f),
        preset: args.preset.clone(),
        n: Some(n),
        a: Some(a),
        p: Some(p),
        nodes: Some(nodes.iter().map(Rat::to_string).collect()),
        ..Default::default()
    };
    Ok(finish("mclass", inputs, Results::Mclass { outcome }, start, exit))
}

pub fn cmd_moments(args: &MomentsArgs) -> Result<CommandOutput> {
    let start = Instant::now();
    let f = args.source.resolve()?;
    let report = moment_flags(&f, args.n)?;
    let inputs =
        Inputs { poly: Some(f), preset: args.source.preset.clone(), n: Some(args.n), ..Default::default() };
    Ok(finish("moments", inputs, Results::Moments { report }, start, EXIT_OK))
}

pub fn cmd_falsify(args: &FalsifyArgs) -> Result<CommandOutput> {
    let start = Instant::now();
    let f = args.source.resolve()?;
    let report = falsify_monotone(&f, args.n, &args.interval, args.trials, args.seed, args.tol)?;
    let inputs = Inputs {
        poly: Some(f),
        preset: args.source.preset.clone(),
        n: Some(args.n),
        interval: Some(args.interval.clone()),
        trials: Some(args.trials),
        seed: Some(args.seed),
        tol: Some(args.tol),
        ..Default::default()
    };
    Ok(finish("falsify", inputs, Results::Falsify { report }, start, EXIT_OK))
}

/// `M_n(f∘g; t0)` and `M_n(f; g(t0)) ∘ S` for `g(t) = slope t + shift`.
pub fn transport_sides(f: &RatPoly, n: usize, slope: &Rat, shift: &Rat, t0: &Rat) -> Result<(RatMatrix, RatMatrix)> {
    let lhs = build_loewner(&f.compose_affine(slope, shift), n).eval(t0);
    let rhs = build_loewner(f, n).eval(&(slope * t0 + shift)).hadamard(&scaling_matrix(slope, n)?)?;
    Ok((lhs, rhs))
}

pub fn cmd_transport(args: &TransportArgs) -> Result<CommandOutput> {
    let start = Instant::now();
    let f = args.source.resolve()?;
    let holds = affine_transport_loewner(&f, args.n, &args.slope, &args.shift, &args.t0)?;
    let (lhs, rhs) = transport_sides(&f, args.n, &args.slope, &args.shift, &args.t0)?;
    let exit = if holds { EXIT_OK } else { EXIT_VERIFY_FAILED };
    let inputs = Inputs {
        poly: Some(f),
        preset: args.source.preset.clone(),
        n: Some(args.n),
        slope: Some(args.slope.clone()),
        shift: Some(args.shift.clone()),
        t0: Some(args.t0.clone()),
        ..Default::default()
    };
    Ok(finish("transport", inputs, Results::Transport { holds, lhs, rhs }, start, exit))
}

fn check(checks: &mut Vec<VerifyCheck>, name: &str, ok: bool) {
    checks.push(VerifyCheck { name: name.to_string(), ok });
}

/// Recomputes every result of `report` from its inputs alone.
pub fn verify_report(report: &Report) -> Result<Vec<VerifyCheck>> {
    let mut checks = Vec::new();
    check(&mut checks, "schema_version", report.schema_version == SCHEMA_VERSION);
    let inp = &report.inputs;
    match &report.results {
        Results::Certify { status, alpha_unbounded } => {
            let f = inp.required_poly()?;
            let n = inp.required_n()?;
            match status {
                Status::Member { alpha, certificate } => {
                    check(&mut checks, "certificate matches inputs", certificate.f == *f && certificate.n == n);
                    check(&mut checks, "certificate alpha", certificate.alpha == *alpha);
                    check(&mut checks, "certificate recomputed", certificate.verify()?);
                    check(&mut checks, "unbounded flag", *alpha_unbounded == alpha.is_none());
                }
                Status::ExcludedByMinor { witness } => {
                    check(&mut checks, "witness order", witness.n == n);
                    check(&mut checks, "negative minor recomputed", witness.verify(f));
                }
                _ => {}
            }
            let again = gaps::status_at(f, n, inp.alpha_hint.as_ref())?;
            check(&mut checks, "status recomputed", again == *status);
        }
        Results::Gaps { verdict } => {
            let f = inp.required_poly()?;
            for rec in &verdict.per_n {
                if let Status::Member { certificate, .. } = &rec.status {
                    check(&mut checks, &format!("certificate n={}", rec.n), certificate.verify()?);
                }
                if let Status::ExcludedByMinor { witness } = &rec.status {
                    check(&mut checks, &format!("negative minor n={}", rec.n), witness.verify(f));
                }
            }
            let nmax = inp.nmax.unwrap_or(verdict.per_n.len());
            let again = gaps::classify_with_hint(f, nmax, inp.alpha_hint.as_ref())?;
            check(&mut checks, "verdict recomputed", again == *verdict);
        }
        Results::Mclass { outcome } => {
            if let Some(cert) = outcome.certificate() {
                check(&mut checks, "certificate recomputed", cert.verify()?);
            }
            let f = inp.required_poly()?;
            let n = inp.required_n()?;
            let a = inp.a.as_ref().ok_or_else(|| Error::InvalidArgument("report has no endpoint".into()))?;
            let p = inp.p.as_ref().ok_or_else(|| Error::InvalidArgument("report has no p".into()))?;
            let again = mclass::mclass_falsify(f, n, a, p, &inp.rat_nodes()?)?;
            check(&mut checks, "outcome recomputed", again == *outcome);
        }
        Results::Moments { report: m } => {
            let again = moment_flags(inp.required_poly()?, inp.required_n()?)?;
            check(&mut checks, "moment flags recomputed", again == *m);
            if let Some(measure) = &m.measure {
                check(&mut checks, "measure reproduces moments", measure.reproduces(&m.b[..m.matched_moments]));
            }
        }
        Results::Falsify { report: r } => {
            let f = inp.required_poly()?;
            if let Some(cx) = &r.counterexample {
                let (c, d) = cx.matrices();
                check(&mut checks, "violation recomputed", pair_violation(f, &c, &d) < -r.tol);
            }
            let interval = inp.interval.as_ref().ok_or_else(|| Error::InvalidArgument("report has no interval".into()))?;
            let again = falsify_monotone(f, r.n, interval, r.trials, r.seed, r.tol)?;
            let same = match (&again.counterexample, &r.counterexample) {
                (None, None) => true,
                (Some(x), Some(y)) => {
                    x.trial == y.trial && (x.lambda_min - y.lambda_min).abs() <= 1e-9 * y.lambda_min.abs().max(1.0)
                }
                _ => false,
            };
            check(&mut checks, "search replayed", same);
        }
        Results::Transport { holds, lhs, rhs } => {
            let f = inp.required_poly()?;
            let n = inp.required_n()?;
            let zero = Rat::from_integer(0.into());
            let slope = inp.slope.as_ref().ok_or_else(|| Error::InvalidArgument("report has no slope".into()))?;
            let shift = inp.shift.as_ref().unwrap_or(&zero);
            let t0 = inp.t0.as_ref().unwrap_or(&zero);
            let (l, r) = transport_sides(f, n, slope, shift, t0)?;
            check(&mut checks, "matrices recomputed", l == *lhs && r == *rhs);
            check(&mut checks, "identity recomputed", (l == r) == *holds);
        }
        Results::Verify { .. } => {
            return Err(Error::InvalidArgument("a verification report cannot be re-verified".into()));
        }
    }
    Ok(checks)
}

pub fn cmd_verify(path: &std::path::Path) -> Result<CommandOutput> {
    let start = Instant::now();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    let report: Report = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("report: {e}")))?;
    let checks = verify_report(&report)?;
    let ok = checks.iter().all(|c| c.ok);
    let inputs = Inputs { file: Some(path.display().to_string()), ..Default::default() };
    let exit = if ok { EXIT_OK } else { EXIT_VERIFY_FAILED };
    Ok(finish("verify", inputs, Results::Verify { command: report.command, ok, checks }, start, exit))
}

pub fn execute(cli: &Cli) -> Result<CommandOutput> {
    if let Some(path) = &cli.verify {
        if cli.command.is_some() {
            return Err(Error::InvalidArgument("--verify takes no subcommand".into()));
        }
        return cmd_verify(path);
    }
    match &cli.command {
        Some(Command::Certify(a)) => cmd_certify(a),
        Some(Command::Gaps(a)) => cmd_gaps(a),
        Some(Command::Mclass(a)) => cmd_mclass(a),
        Some(Command::Moments(a)) => cmd_moments(a),
        Some(Command::Falsify(a)) => cmd_falsify(a),
        Some(Command::Transport(a)) => cmd_transport(a),
        None => Err(Error::InvalidArgument("a subcommand or --verify is required".into())),
    }
}

fn approx(x: &Rat) -> String {
    format!("{x} (~{:.6})", to_f64(x))
}

fn alpha_text(alpha: &Option<Rat>) -> String {
    alpha.as_ref().map(approx).unwrap_or_else(|| "unbounded".into())
}

fn status_text(status: &Status) -> String {
    match status {
        Status::Member { alpha, certificate } => {
            format!("member on [0, {}) via {:?} route", alpha_text(alpha), certificate.route)
        }
        Status::ExcludedByMinor { witness } => format!(
            "excluded: principal minor {:?} = {} is negative at t0 = {}",
            witness.indices, witness.minor, witness.t0
        ),
        Status::ExcludedByChain { order } => format!("excluded (already excluded at order {order})"),
        other => other.label().to_string(),
    }
}

/// Plain-text rendering of a report.
pub fn render_human(report: &Report) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    if let Some(f) = &report.inputs.poly {
        line(format!("f(t) = {f}"));
    }
    match &report.results {
        Results::Certify { status, .. } => {
            line(format!("n = {}: {}", report.inputs.n.unwrap_or(0), status_text(status)));
        }
        Results::Gaps { verdict } => {
            line(format!("{:>3}  {:<14} status", "n", "degree gate"));
            for rec in &verdict.per_n {
                line(format!("{:>3}  {:<14} {}", rec.n, format!("{:?}", rec.gate), status_text(&rec.status)));
            }
            match &verdict.gap {
                Some(g) => line(format!("gap at n = {}: member of P_{} on [0, {}) but not of P_{}", g.n, g.n, alpha_text(&g.alpha), g.n + 1)),
                None => line("no gap found up to the requested order".into()),
            }
        }
        Results::Mclass { outcome } => match outcome {
            MClassOutcome::Certificate(c) => {
                line(format!("n = {}, a = {}, p = {}", c.n, c.a, c.p));
                for (l, a) in c.lambdas.iter().zip(&c.a_coeffs) {
                    line(format!("  lambda = {l:<12} a = {a}"));
                }
                line(format!("sum a_k f(lambda_k) = {}", approx(&c.sum_value)));
                line(format!("f is not in M_{} on [0, {}]", c.n, c.a));
            }
            MClassOutcome::PremiseFailed { flags, .. } => line(format!("premise violated: {flags:?}")),
            MClassOutcome::NotNegative { sum_value } => line(format!("premise holds but sum = {} is not negative", approx(sum_value))),
        },
        Results::Moments { report: m } => {
            line(format!("b = [{}]", m.b.iter().map(Rat::to_string).collect::<Vec<_>>().join(", ")));
            line(format!("pd = {}, psd = {}, rank = {}, Hankel rank = {}", m.pd, m.psd, m.matrix_rank, m.hankel_rank));
            if m.extension_obstruction {
                line(format!("obstruction: not in P_{} on any [0, alpha)", m.excluded_order.unwrap_or(m.n + 1)));
            }
            if m.degree_deficient {
                line("degree below 2n - 1: moments zero-padded".into());
            }
            if let Some(mu) = &m.measure {
                for (x, w) in mu.atoms.iter().zip(&mu.weights) {
                    let xs = match x {
                        Atom::Exact(v) => v.to_string(),
                        Atom::Enclosed(e) => format!("[{}, {}]", e.bracket.lo, e.bracket.hi),
                    };
                    let ws = match w {
                        Weight::Exact(v) => v.to_string(),
                        Weight::Enclosed(i) => format!("[{:.12}, {:.12}]", to_f64(&i.lo), to_f64(&i.hi)),
                    };
                    line(format!("  atom {xs}  weight {ws}"));
                }
                line(format!("measure matches b_0..b_{}", m.matched_moments.saturating_sub(1)));
            }
        }
        Results::Falsify { report: r } => {
            line(format!("n = {}, interval [{}, {}], {} trials, seed {}", r.n, r.lo, r.hi, r.trials, r.seed));
            match &r.counterexample {
                Some(cx) => {
                    line(format!("counterexample at trial {}: lambda_min(f(D) - f(C)) = {:e}", cx.trial, cx.lambda_min));
                    line(format!("  C = {:?}", cx.c));
                    line(format!("  D = {:?}", cx.d));
                }
                None => line(format!("no violation below -{:e}", r.tol)),
            }
        }
        Results::Transport { holds, lhs, rhs } => {
            line(format!("M_n(f∘g; t0) =\n{lhs}"));
            line(format!("M_n(f; g(t0)) ∘ S =\n{rhs}"));
            line(format!("identity holds: {holds}"));
        }
        Results::Verify { command, ok, checks } => {
            for c in checks {
                line(format!("{} {}", if c.ok { "ok  " } else { "FAIL" }, c.name));
            }
            line(format!("{command} report verified: {ok}"));
        }
    }
    line(format!("({:.1} ms)", report.timing.elapsed_ms));
    out
}

/// Parses `args`, runs the command, prints the report, returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli) {
        Ok(out) => {
            if cli.json {
                match serde_json::to_string_pretty(&out.report) {
                    Ok(s) => println!("{s}"),
                    Err(e) => {
                        eprintln!("error: {e}");
                        return EXIT_VERIFY_FAILED;
                    }
                }
            } else {
                print!("{}", render_human(&out.report));
            }
            out.exit_code
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_PARSE
        }
    }
}
