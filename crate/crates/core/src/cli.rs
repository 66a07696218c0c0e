//! Batch front end: flat `key value` configs, equivalent `--key value`
//! flags (flags win on conflict), deterministic CSV outputs.
//!
//! Every CSV starts with a `#` comment row recording the tolerances and
//! tail bounds in effect, then a header row naming the columns.  Floats are
//! printed with 17 significant digits, `.` decimal separator, `\n` line
//! ends, so identical configs produce byte-identical files.
//!
//! Exit codes: 0 success, 2 validation error, 3 numerical-guard error
//! (resolution or tail certification failures).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write as _;
use std::str::FromStr;

use crate::fourier::{BoundednessProfile, CoefficientWindow, SupEstimate};
use crate::independence::{
    cesaro_independence_probe, dependence_witness, nice_function_probe, Candidate,
};
use crate::periodization::{classify, periodization_grid, SpectrumDescriptor};
use crate::set::IntervalSet;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Periodize,
    Classify,
    ZeroSet,
    PartialSums,
    DependenceDemo,
    CesaroProbe,
    CantorProbe,
    NiceProbe,
    Unorm,
}

impl Command {
    pub const ALL: [(&'static str, Command); 9] = [
        ("periodize", Command::Periodize),
        ("classify", Command::Classify),
        ("zero-set", Command::ZeroSet),
        ("partial-sums", Command::PartialSums),
        ("dependence-demo", Command::DependenceDemo),
        ("cesaro-probe", Command::CesaroProbe),
        ("cantor-probe", Command::CantorProbe),
        ("nice-probe", Command::NiceProbe),
        ("unorm", Command::Unorm),
    ];

    pub fn name(self) -> &'static str {
        Command::ALL
            .iter()
            .find(|(_, c)| *c == self)
            .expect("every command is listed")
            .0
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Command::ALL
            .iter()
            .find(|(name, _)| *name == s)
            .map(|(_, c)| *c)
            .ok_or_else(|| Error::Config(format!("unknown command {s:?}")))
    }
}

/// A fully resolved run: one command plus every knob it may need.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub spectrum: Option<String>,
    pub set_a: Option<String>,
    pub f: Option<String>,
    pub region: Option<String>,
    pub width: Option<usize>,
    pub grid_m: usize,
    pub eps: f64,
    pub tau: f64,
    pub level: u32,
    pub schedule: Vec<usize>,
    pub schedule_spec: String,
    pub oracle: bool,
    pub out: String,
}

/// Parse `"pow2:0..8"` (powers of two) or an explicit list `"1,2,4,8"`.
pub fn parse_schedule(spec: &str) -> Result<Vec<usize>> {
    let spec = spec.trim();
    if let Some(range) = spec.strip_prefix("pow2:") {
        let (lo, hi) = range
            .split_once("..")
            .ok_or_else(|| Error::Parse(format!("schedule range {range:?} needs lo..hi")))?;
        let lo: u32 = lo.trim().parse().map_err(|_| Error::Parse(format!("bad exponent {lo:?}")))?;
        let hi: u32 = hi.trim().parse().map_err(|_| Error::Parse(format!("bad exponent {hi:?}")))?;
        if hi < lo || hi > 30 {
            return Err(Error::Schedule(format!("pow2 exponents {lo}..{hi} out of order or too large")));
        }
        return Ok((lo..=hi).map(|e| 1usize << e).collect());
    }
    let mut out = Vec::new();
    for tok in spec.split(',') {
        out.push(
            tok.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad schedule entry {:?}", tok.trim())))?,
        );
    }
    Ok(out)
}

fn parse_kv_file(path: &str) -> Result<BTreeMap<String, String>> {
    let contents = std::fs::read_to_string(path)?;
    let mut map = BTreeMap::new();
    for raw_line in contents.lines() {
        let line = raw_line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once(char::is_whitespace)
            .ok_or_else(|| Error::Config(format!("config line {line:?} is not `key value`")))?;
        map.insert(key.to_string(), value.trim().to_string());
    }
    Ok(map)
}

const KNOWN_KEYS: [&str; 13] = [
    "command", "config", "spectrum", "A", "f", "region", "width", "M", "eps", "tau", "level",
    "schedule", "oracle",
];

/// Assemble a [`RunConfig`] from command-line arguments: an optional
/// leading command token, `--config path` to preload a flat key-value
/// file, and `--key value` flags that win on conflict.
pub fn parse_args(args: &[String]) -> Result<RunConfig> {
    let mut map: BTreeMap<String, String> = BTreeMap::new();
    let mut flags: Vec<(String, String)> = Vec::new();
    let mut idx = 0;
    if idx < args.len() && !args[idx].starts_with("--") {
        flags.push(("command".into(), args[idx].clone()));
        idx += 1;
    }
    while idx < args.len() {
        let key = args[idx]
            .strip_prefix("--")
            .ok_or_else(|| Error::Config(format!("expected --key, found {:?}", args[idx])))?;
        let value = args
            .get(idx + 1)
            .ok_or_else(|| Error::Config(format!("flag --{key} is missing a value")))?;
        flags.push((key.to_string(), value.clone()));
        idx += 2;
    }
    // The config file loads first; explicit flags override it.
    if let Some((_, path)) = flags.iter().find(|(k, _)| k == "config") {
        map = parse_kv_file(path)?;
    }
    for (k, v) in flags {
        map.insert(k, v);
    }
    build_config(map)
}

fn build_config(map: BTreeMap<String, String>) -> Result<RunConfig> {
    for key in map.keys() {
        if !KNOWN_KEYS.contains(&(key.as_str())) && key != "out" {
            return Err(Error::Config(format!("unknown key {key:?}")));
        }
    }
    let command: Command = map
        .get("command")
        .ok_or_else(|| Error::Config("no command given".into()))?
        .parse()?;
    let parse_usize = |key: &str| -> Result<Option<usize>> {
        map.get(key)
            .map(|v| v.parse().map_err(|_| Error::Config(format!("bad {key} value {v:?}"))))
            .transpose()
    };
    let parse_f64 = |key: &str, default: f64| -> Result<f64> {
        match map.get(key) {
            Some(v) => v.parse().map_err(|_| Error::Config(format!("bad {key} value {v:?}"))),
            None => Ok(default),
        }
    };
    let grid_m = parse_usize("M")?.unwrap_or(4096);
    if !grid_m.is_power_of_two() || grid_m < 2 {
        return Err(Error::Config(format!("M = {grid_m} must be a power of two >= 2")));
    }
    let eps = parse_f64("eps", 1e-9)?;
    let tau = parse_f64("tau", 1e-6)?;
    if !(eps > 0.0) || !(tau > 0.0) {
        return Err(Error::Config("tolerances eps and tau must be positive".into()));
    }
    let level: u32 = match map.get("level") {
        Some(v) => v.parse().map_err(|_| Error::Config(format!("bad level value {v:?}")))?,
        None => 12,
    };
    if level > 26 {
        return Err(Error::Config(format!("level = {level} is too fine (max 26)")));
    }
    let schedule_spec = map.get("schedule").cloned().unwrap_or_else(|| "pow2:0..8".into());
    let schedule = parse_schedule(&schedule_spec)?;
    if schedule.is_empty() {
        return Err(Error::Schedule("schedule must be nonempty".into()));
    }
    let oracle = match map.get("oracle").map(String::as_str) {
        None => false,
        Some("true") => true,
        Some("false") => false,
        Some(other) => return Err(Error::Config(format!("oracle must be true or false, got {other:?}"))),
    };
    Ok(RunConfig {
        command,
        spectrum: map.get("spectrum").cloned(),
        set_a: map.get("A").cloned(),
        f: map.get("f").cloned(),
        region: map.get("region").cloned(),
        width: parse_usize("width")?,
        grid_m,
        eps,
        tau,
        level,
        schedule,
        schedule_spec,
        oracle,
        out: map.get("out").cloned().unwrap_or_else(|| "-".into()),
    })
}

/// 17 significant digits, deterministic, no negative zero.
fn fmt_f(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

fn require<'a>(opt: &'a Option<String>, key: &str, cmd: Command) -> Result<&'a str> {
    opt.as_deref()
        .ok_or_else(|| Error::Config(format!("{} needs --{key}", cmd.name())))
}

/// `"indicator(...)"` literal for a coefficient window, returning the set.
fn parse_indicator_literal(lit: &str) -> Result<IntervalSet> {
    lit.trim()
        .strip_prefix("indicator(")
        .and_then(|b| b.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("window literal {lit:?} must be indicator(..ranges..)")))?
        .parse()
}

fn write_output(path: &str, contents: &str) -> Result<()> {
    if path == "-" {
        let stdout = std::io::stdout();
        let mut lock = stdout.lock();
        lock.write_all(contents.as_bytes())?;
        Ok(())
    } else {
        std::fs::write(path, contents)?;
        Ok(())
    }
}

fn profile_csv(comment: &str, profile: &BoundednessProfile) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{comment}");
    let _ = writeln!(out, "n,sup,certified_bound");
    for (i, &n) in profile.schedule.iter().enumerate() {
        let s = &profile.sups[i];
        let _ = writeln!(out, "{n},{},{}", fmt_f(s.value), fmt_f(s.certified_bound()));
    }
    out
}

fn sup_comment_fields(s: &SupEstimate) -> String {
    format!(
        "grid_points={} level={} modulus={}",
        s.grid_points,
        s.refinement_level,
        fmt_f(s.modulus_bound)
    )
}

/// Execute a resolved run, writing its CSV outputs.
pub fn run(config: &RunConfig) -> Result<()> {
    match config.command {
        Command::Periodize => {
            let spectrum_lit = require(&config.spectrum, "spectrum", config.command)?;
            let psi: SpectrumDescriptor = spectrum_lit.parse()?;
            let grid = periodization_grid(&psi, config.grid_m, config.eps)?;
            let mut out = String::new();
            let _ = writeln!(
                out,
                "# command=periodize spectrum={} M={} eps={} tail_error={} exact={}",
                spectrum_lit,
                config.grid_m,
                fmt_f(config.eps),
                fmt_f(grid.tail_error()),
                grid.is_exact()
            );
            let _ = writeln!(out, "xi,p,tail");
            for j in 0..grid.m() {
                let _ = writeln!(
                    out,
                    "{},{},{}",
                    fmt_f(grid.xi(j)),
                    fmt_f(grid.value(j)),
                    fmt_f(grid.tail_error())
                );
            }
            write_output(&config.out, &out)
        }
        Command::Classify | Command::ZeroSet => {
            let spectrum_lit = require(&config.spectrum, "spectrum", config.command)?;
            let psi: SpectrumDescriptor = spectrum_lit.parse()?;
            let grid = periodization_grid(&psi, config.grid_m, config.eps)?;
            let report = classify(&grid, config.tau)?;
            let comment = format!(
                "# command={} spectrum={} M={} eps={} tau={} tail_error={}",
                config.command.name(),
                spectrum_lit,
                config.grid_m,
                fmt_f(config.eps),
                fmt_f(config.tau),
                fmt_f(grid.tail_error())
            );
            let mut out = String::new();
            let _ = writeln!(out, "{comment}");
            if config.command == Command::Classify {
                let _ = writeln!(
                    out,
                    "ess_inf,ess_sup,positive_ae,minimal,l2_independent_sufficient,zero_measure,inv_integral,inv_integral_refined,divergence_ratio,diverged,zero_set"
                );
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{},\"{}\"",
                    fmt_f(report.ess_inf_est),
                    fmt_f(report.ess_sup_est),
                    report.positive_ae,
                    report.minimal_flag,
                    report.l2_independent_sufficient,
                    report.zero_measure(),
                    fmt_f(report.inv_integral),
                    fmt_f(report.inv_integral_refined),
                    fmt_f(report.divergence_ratio),
                    report.diverged,
                    report.zero_set_approx
                );
            } else {
                let _ = writeln!(out, "lo,hi");
                for (lo, hi) in report.zero_set_approx.intervals() {
                    let _ = writeln!(out, "{lo},{hi}");
                }
            }
            write_output(&config.out, &out)
        }
        Command::PartialSums => {
            let f_lit = require(&config.f, "f", config.command)?;
            let support = parse_indicator_literal(f_lit)?;
            let max_n = *config.schedule.last().expect("nonempty");
            let width = config.width.unwrap_or(max_n);
            let window = CoefficientWindow::indicator(&support, width);
            let region: IntervalSet = config.region.as_deref().unwrap_or("0..1").parse()?;
            let profile =
                crate::fourier::boundedness_profile(&window, &region, &config.schedule, config.level)?;
            let comment = format!(
                "# command=partial-sums f={} width={} region={} level={} schedule={}",
                f_lit,
                width,
                region,
                config.level,
                config.schedule_spec
            );
            write_output(&config.out, &profile_csv(&comment, &profile))
        }
        Command::DependenceDemo => {
            let a_lit = require(&config.set_a, "A", config.command)?;
            let f_lit = require(&config.f, "f", config.command)?;
            let set_a: IntervalSet = a_lit.parse()?;
            let support = parse_indicator_literal(f_lit)?;
            let max_n = *config.schedule.last().expect("nonempty");
            let width = config.width.unwrap_or(max_n);
            let f = CoefficientWindow::indicator(&support, width);
            let witness =
                dependence_witness(&set_a, &f, &config.schedule, config.grid_m, config.oracle)?;
            let mut out = String::new();
            let _ = writeln!(
                out,
                "# command=dependence-demo A={} f={} width={} M={} schedule={} oracle={} oracle_tol={}",
                a_lit,
                f_lit,
                width,
                config.grid_m,
                config.schedule_spec,
                config.oracle,
                fmt_f(1e-8)
            );
            let _ = writeln!(out, "n,norm,oracle_norm");
            for (i, &n) in witness.schedule.iter().enumerate() {
                let oracle_cell = witness
                    .oracle_norms
                    .as_ref()
                    .and_then(|v| v[i])
                    .map(fmt_f)
                    .unwrap_or_default();
                let _ = writeln!(out, "{n},{},{}", fmt_f(witness.norms[i]), oracle_cell);
            }
            write_output(&config.out, &out)
        }
        Command::CesaroProbe => {
            let spectrum_lit = require(&config.spectrum, "spectrum", config.command)?;
            let f_lit = require(&config.f, "f", config.command)?;
            let psi: SpectrumDescriptor = spectrum_lit.parse()?;
            let grid = periodization_grid(&psi, config.grid_m, config.eps)?;
            let support = parse_indicator_literal(f_lit)?;
            let max_n = *config.schedule.last().expect("nonempty");
            let width = config.width.unwrap_or(max_n);
            let f = CoefficientWindow::indicator(&support, width);
            let c = f.reversed();
            let values = cesaro_independence_probe(&c, &grid, &config.schedule)?;
            let mut out = String::new();
            let _ = writeln!(
                out,
                "# command=cesaro-probe spectrum={} f={} width={} M={} schedule={} tail_error={}",
                spectrum_lit,
                f_lit,
                width,
                config.grid_m,
                config.schedule_spec,
                fmt_f(grid.tail_error())
            );
            let _ = writeln!(out, "n,cesaro_norm");
            for (i, &n) in config.schedule.iter().enumerate() {
                let _ = writeln!(out, "{n},{}", fmt_f(values[i]));
            }
            write_output(&config.out, &out)
        }
        Command::CantorProbe | Command::NiceProbe => {
            let a_lit = require(&config.set_a, "A", config.command)?;
            let set_a: IntervalSet = a_lit.parse()?;
            let max_n = *config.schedule.last().expect("nonempty");
            let width = config.width.unwrap_or(max_n);
            let candidate = if config.command == Command::CantorProbe {
                Candidate::indicator(&set_a, width)
            } else {
                let f_lit = require(&config.f, "f", config.command)?;
                Candidate::indicator(&parse_indicator_literal(f_lit)?, width)
            };
            if config.out == "-" {
                return Err(Error::Config(format!(
                    "{} writes several files; give --out a path prefix",
                    config.command.name()
                )));
            }
            let report = nice_function_probe(&set_a, &candidate, config.level, &config.schedule)?;
            let base = format!(
                "# command={} A={} width={} level={} schedule={}",
                config.command.name(),
                a_lit,
                width,
                config.level,
                config.schedule_spec
            );
            let mut report_csv = String::new();
            let _ = writeln!(report_csv, "{base} {}", sup_comment_fields(&report.u_norm));
            let _ = writeln!(
                report_csv,
                "leakage,leakage_exact,degenerate,u_norm,u_certified_bound"
            );
            let _ = writeln!(
                report_csv,
                "{},{},{},{},{}",
                fmt_f(report.leakage),
                report.leakage_exact,
                report.degenerate,
                fmt_f(report.u_norm.value),
                fmt_f(report.u_norm.certified_bound())
            );
            write_output(&format!("{}.report.csv", config.out), &report_csv)?;
            write_output(
                &format!("{}.unorm.csv", config.out),
                &unorm_csv(&base, &report.u_norm),
            )?;
            write_output(
                &format!("{}.profile_complement.csv", config.out),
                &profile_csv(
                    &format!("{base} region={}", report.profile_complement.region),
                    &report.profile_complement,
                ),
            )?;
            write_output(
                &format!("{}.profile_full.csv", config.out),
                &profile_csv(
                    &format!("{base} region={}", report.profile_full.region),
                    &report.profile_full,
                ),
            )?;
            Ok(())
        }
        Command::Unorm => {
            let f_lit = require(&config.f, "f", config.command)?;
            let support = parse_indicator_literal(f_lit)?;
            let width = config
                .width
                .ok_or_else(|| Error::Config("unorm needs --width".into()))?;
            let window = CoefficientWindow::indicator(&support, width);
            let est = crate::fourier::u_norm_estimate(&window, config.level);
            let comment = format!("# command=unorm f={} width={} level={}", f_lit, width, config.level);
            write_output(&config.out, &unorm_csv(&comment, &est))
        }
    }
}

fn unorm_csv(comment: &str, est: &SupEstimate) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{comment}");
    let _ = writeln!(out, "value,certified_bound,grid_points,level,modulus");
    let _ = writeln!(
        out,
        "{},{},{},{},{}",
        fmt_f(est.value),
        fmt_f(est.certified_bound()),
        est.grid_points,
        est.refinement_level,
        fmt_f(est.modulus_bound)
    );
    out
}

/// Exit code class for an error: 2 validation, 3 numerical guard.
pub fn exit_class(error: &Error) -> i32 {
    match error {
        Error::UnderResolvedGrid { .. }
        | Error::IndistinguishableZero { .. }
        | Error::NonintegrableEnvelope(_)
        | Error::OracleToleranceUnreachable { .. } => 3,
        _ => 2,
    }
}

const USAGE: &str = "\
usage: translates <command> [--key value ...] [--config file]

commands:
  periodize        sample p_psi           --spectrum --M --eps [--out]
  classify         classification report  --spectrum --M --eps --tau [--out]
  zero-set         zero-set intervals     --spectrum --M --eps --tau [--out]
  partial-sums     sup |S_n| profile      --f --schedule [--width --region --level --out]
  dependence-demo  witness norm decay     --A --f --schedule [--width --M --oracle --out]
  cesaro-probe     Cesaro-average norms   --spectrum --f --schedule [--width --M --out]
  cantor-probe     evidence for a set     --A --width --schedule --out [--level]
  nice-probe       candidate vs set       --A --f --width --schedule --out [--level]
  unorm            windowed-sum norm      --f --width [--level --out]

Set literals: \"0/1..1/2, 5/8..7/8\", \"cantor(depth=4, remove=1/4)\", \"empty\".
Spectrum literals: indicator(..), haar, sinc, sine_bump(a..b), custom(file).
Schedules: \"pow2:0..8\" or \"1,2,4,8\".  Config files hold `key value` lines;
flags win on conflict.  Output \"-\" means stdout.
";

/// Entry point used by the binary: parses, runs, maps errors to exit codes.
pub fn run_cli(args: &[String]) -> i32 {
    if args.is_empty() {
        eprint!("{USAGE}");
        return 2;
    }
    if args[0] == "help" || args[0] == "--help" || args[0] == "-h" {
        print!("{USAGE}");
        return 0;
    }
    match parse_args(args).and_then(|config| run(&config)) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            exit_class(&e)
        }
    }
}
