//! Command-line front end: argument and config-file parsing, one runner per
//! subcommand, and CSV/JSON emission.
//!
//! Every table starts with `#` metadata lines echoing the resolved
//! configuration as `key = value`; those lines (without the `# `) form a
//! valid `--config` file that reproduces the run.

mod args;
mod output;

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use clap::{CommandFactory, Parser};
use serde_json::Value;

pub use args::{
    BathArgs, Cli, Constraint, FitArgs, Format, GridMode, GridPvArgs, LimitsArgs, OutputArgs, RunConfig, StateArgs,
    SweepEtaArgs, SweepKappaArgs, SweepNArgs, TimeseriesArgs, WindowArgs,
};
pub use output::{Cell, OutputTable};

use crate::bath::{BathConfig, Reservoirs};
use crate::dynamics::{evolve, limit_state_large_eta, limit_state_small_eta, CouplingConfig, EnsembleConfig, Frame};
use crate::entanglement::concurrence;
use crate::error::{Error, Result};
use crate::experiments::{
    fit_exponential, grid_pv, linspace, sweep_eta, sweep_kappa, sweep_n, time_series_window, Collapse,
    ConstraintMode, PointStatus, PvMode, SweepTemplate, TimeWindow,
};
use crate::state::SpinInit;

/// Environment variable capping the worker count (`0` = one per core).
pub const THREADS_ENV: &str = "DEPHASIM_THREADS";

#[derive(Debug)]
pub enum ParseError {
    /// Includes `--help` and `--version`, which are not failures.
    Clap(clap::Error),
    Config(Error),
}

impl From<clap::Error> for ParseError {
    fn from(e: clap::Error) -> Self {
        ParseError::Clap(e)
    }
}

impl From<Error> for ParseError {
    fn from(e: Error) -> Self {
        ParseError::Config(e)
    }
}

/// Parse `argv` (including the program name), merging any `--config FILE`
/// underneath the explicit flags.
pub fn parse_args<I, T>(argv: I) -> std::result::Result<RunConfig, ParseError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let mut argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    if let Some(path) = config_path(&argv) {
        if let Some(pos) = subcommand_position(&argv) {
            let name = argv[pos].to_string_lossy().into_owned();
            let tokens = config_tokens(&path, &name)?;
            argv.splice(pos + 1..pos + 1, tokens.into_iter().map(OsString::from));
        }
    }
    let mut cfg = Cli::try_parse_from(argv)?.command;
    if let RunConfig::GridPv(a) = &mut cfg {
        a.resolve();
    }
    Ok(cfg)
}

fn config_path(argv: &[OsString]) -> Option<String> {
    let mut it = argv.iter().skip(1).map(|a| a.to_string_lossy());
    while let Some(a) = it.next() {
        if a == "--" {
            break;
        }
        if a == "--config" {
            return it.next().map(|s| s.into_owned());
        }
        if let Some(p) = a.strip_prefix("--config=") {
            return Some(p.to_owned());
        }
    }
    None
}

fn subcommand_position(argv: &[OsString]) -> Option<usize> {
    let cmd = Cli::command();
    let mut skip_next = false;
    for (i, a) in argv.iter().enumerate().skip(1) {
        let a = a.to_string_lossy();
        if skip_next {
            skip_next = false;
            continue;
        }
        if a == "--config" {
            skip_next = true;
            continue;
        }
        if cmd.find_subcommand(a.as_ref()).is_some() {
            return Some(i);
        }
    }
    None
}

/// `key = value` lines → `--key=value` tokens, rejecting keys the subcommand does not know.
fn config_tokens(path: &str, subcommand: &str) -> Result<Vec<String>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
    let cmd = Cli::command();
    let sub = cmd.find_subcommand(subcommand).expect("subcommand was located in argv");
    let known: Vec<String> = sub
        .get_arguments()
        .filter_map(|a| a.get_long())
        .filter(|l| !matches!(*l, "config" | "help" | "version"))
        .map(str::to_owned)
        .collect();
    let mut tokens = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            Error::validation("config file", format!("{path}:{}: expected `key = value`", lineno + 1))
        })?;
        let key = key.trim().replace('_', "-");
        if !known.contains(&key) {
            return Err(Error::validation(
                "config file",
                format!("{path}:{}: unknown key `{key}` for `{subcommand}`", lineno + 1),
            ));
        }
        tokens.push(format!("--{key}={}", value.trim()));
    }
    Ok(tokens)
}

/// The resolved configuration as `key = value` pairs, sorted by key.
pub fn config_pairs(cfg: &RunConfig) -> Vec<(String, String)> {
    let Ok(Value::Object(map)) = serde_json::to_value(cfg) else {
        unreachable!("run configurations serialize to objects")
    };
    let render = |v: &Value| match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    map.iter()
        .filter(|(_, v)| !v.is_null())
        .map(|(k, v)| {
            let value = match v {
                Value::Array(xs) => xs.iter().map(render).collect::<Vec<_>>().join(","),
                v => render(v),
            };
            (k.replace('_', "-"), value)
        })
        .collect()
}

/// Text of a `--config` file equivalent to `cfg`.
pub fn config_text(cfg: &RunConfig) -> String {
    config_pairs(cfg).iter().map(|(k, v)| format!("{k} = {v}\n")).collect()
}

fn reservoirs(b: &BathArgs) -> Result<Reservoirs> {
    Ok(Reservoirs::shared(BathConfig::new(b.epsilon, b.theta)?))
}

fn window(w: &WindowArgs) -> Result<TimeWindow> {
    if !(w.tau_max > 0.0 && w.tau_max.is_finite()) {
        return Err(Error::validation("window", format!("tau-max must be > 0, got {}", w.tau_max)));
    }
    if w.steps < 2 {
        return Err(Error::validation("window", format!("steps must be >= 2, got {}", w.steps)));
    }
    Ok(TimeWindow {
        tau_max: w.tau_max,
        min_steps: w.steps,
    })
}

fn spin(s: &StateArgs) -> Result<SpinInit> {
    SpinInit::new(s.p, s.v)
}

fn n_range(min: u64, max: u64, step: u64) -> Result<Vec<u64>> {
    if min < 2 || max < min || step == 0 {
        return Err(Error::validation(
            "spin-count range",
            format!("need 2 <= n-min <= n-max and n-step >= 1, got {min}..={max} step {step}"),
        ));
    }
    Ok((min..=max).step_by(step as usize).collect())
}

fn collapse_cells(c: &Collapse) -> (Cell, Cell) {
    match c {
        Collapse::At { tau, .. } => (Cell::from(*tau), Cell::from("collapsed")),
        Collapse::NoEntanglement => (Cell::Missing, Cell::from("no-entanglement")),
        Collapse::NotObserved => (Cell::Missing, Cell::from("not-observed")),
    }
}

fn note_fit(table: &mut OutputTable, key: &str, points: &[(f64, f64)]) {
    match fit_exponential(points) {
        Ok(f) => {
            table.note(format!("{key}.slope"), Cell::from(f.slope).render());
            table.note(format!("{key}.slope-stderr"), Cell::from(f.slope_stderr).render());
            table.note(format!("{key}.r-squared"), Cell::from(f.r_squared).render());
            table.note(format!("{key}.points"), f.used);
        }
        Err(e) => table.note(format!("{key}.error"), e),
    }
}

/// Execute a resolved configuration.
pub fn run(cfg: &RunConfig) -> Result<OutputTable> {
    let mut table = match cfg {
        RunConfig::Timeseries(a) => run_timeseries(a),
        RunConfig::SweepKappa(a) => run_sweep_kappa(a),
        RunConfig::SweepN(a) => run_sweep_n(a),
        RunConfig::GridPv(a) => run_grid_pv(a),
        RunConfig::SweepEta(a) => run_sweep_eta(a),
        RunConfig::Limits(a) => run_limits(a),
        RunConfig::Fit(a) => run_fit(a),
    }?;
    table.config = config_pairs(cfg);
    Ok(table)
}

fn run_timeseries(a: &TimeseriesArgs) -> Result<OutputTable> {
    let res = reservoirs(&a.bath)?;
    let s = spin(&a.state)?;
    let ens = EnsembleConfig::homogeneous(a.state.background_p, s, s)?;
    let cfg = CouplingConfig::new(a.kappa_c, a.kappa_l, a.eta, a.n)?;
    let series = time_series_window(&cfg, &ens, &res, &window(&a.window)?)?;
    let mut t = OutputTable::new(
        "timeseries",
        &["t", "tau", "concurrence", "abs_p_n", "s", "gamma_l", "gamma_c"],
    );
    for r in &series.rows {
        t.push(
            [r.t, r.tau, r.concurrence, r.abs_p_n, r.s, r.gamma_l, r.gamma_c]
                .map(Cell::from)
                .to_vec(),
        );
    }
    t.warnings = series.warnings;
    Ok(t)
}

fn template(
    kappa_c: f64,
    kappa_l: f64,
    eta: f64,
    state: &StateArgs,
    bath: &BathArgs,
    w: &WindowArgs,
) -> Result<SweepTemplate> {
    let s = spin(state)?;
    Ok(SweepTemplate::new(CouplingConfig::new(kappa_c, kappa_l, eta, 2)?, s, s, state.background_p)?
        .with_reservoirs(reservoirs(bath)?)
        .with_window(window(w)?))
}

fn under_resolved(n: u64) -> String {
    format!("under-resolved grid for N={n}: step capped below a tenth of the P_N peak width")
}

fn run_sweep_kappa(a: &SweepKappaArgs) -> Result<OutputTable> {
    let k0 = a.kappas.first().copied().unwrap_or(0.0);
    let tpl = template(k0, a.kappa_l, a.eta, &a.state, &a.bath, &a.window)?;
    let rows = sweep_kappa(&tpl, &a.kappas, &a.ns)?;
    let mut t = OutputTable::new(
        "sweep-kappa",
        &["kappa_c", "n", "kappa_eff", "c_max", "t_peak", "tau_peak", "tau_collapse"],
    );
    for r in rows {
        let p = r.summary.peak;
        t.push(vec![
            r.value.into(),
            r.n.into(),
            r.kappa_eff.into(),
            p.c_max.into(),
            p.t.into(),
            p.tau.into(),
            r.summary.collapse.tau().into(),
        ]);
        if r.summary.warned {
            t.warnings.push(under_resolved(r.n));
        }
    }
    Ok(t)
}

fn run_sweep_n(a: &SweepNArgs) -> Result<OutputTable> {
    let ns = n_range(a.n_min, a.n_max, a.n_step)?;
    let tpl = template(a.kappa_c, a.kappa_l, a.eta, &a.state, &a.bath, &a.window)?;
    let rows = sweep_n(&tpl, &ns)?;
    let mut t = OutputTable::new(
        "sweep-n",
        &["n", "c_max", "t_peak", "tau_peak", "tau_collapse", "collapse"],
    );
    let in_fit = |n: u64| (a.fit_min..=a.fit_max).contains(&n);
    let mut c_pts = Vec::new();
    let mut tau_pts = Vec::new();
    for r in &rows {
        let p = r.summary.peak;
        let (tau_c, status) = collapse_cells(&r.summary.collapse);
        t.push(vec![r.n.into(), p.c_max.into(), p.t.into(), p.tau.into(), tau_c, status]);
        if r.summary.warned {
            t.warnings.push(under_resolved(r.n));
        }
        if in_fit(r.n) {
            c_pts.push((r.n as f64, p.c_max));
            if let Some(tau) = r.summary.collapse.tau() {
                tau_pts.push((r.n as f64, tau));
            }
        }
    }
    note_fit(&mut t, "fit.c-max", &c_pts);
    note_fit(&mut t, "fit.tau-collapse", &tau_pts);
    Ok(t)
}

fn run_grid_pv(a: &GridPvArgs) -> Result<OutputTable> {
    let mut a = a.clone();
    a.resolve();
    let points = a.points.unwrap_or_default();
    if points == 0 {
        return Err(Error::validation("grid", "points must be >= 1"));
    }
    let xs = linspace(a.x_min.unwrap_or_default(), a.x_max.unwrap_or_default(), points);
    let ys = linspace(a.y_min.unwrap_or_default(), a.y_max.unwrap_or_default(), points);
    let constraint = match a.constraint {
        Constraint::Exclude => ConstraintMode::Exclude,
        Constraint::Clip => ConstraintMode::Clip,
    };
    let (mode, mut t) = match a.mode {
        GridMode::Abstract => (
            PvMode::Abstract {
                phase: a.phase,
                decay: a.decay,
            },
            OutputTable::new("grid-pv", &["p", "v", "status", "concurrence"]),
        ),
        GridMode::Dynamic => {
            let state = StateArgs {
                p: 0.5,
                v: 0.5,
                background_p: a.background_p,
            };
            let mut tpl = template(a.kappa_c, a.kappa_l, a.eta, &state, &a.bath, &a.window)?;
            tpl.coupling = tpl.coupling.with_n(a.n.unwrap_or(40));
            tpl.coupling.validate()?;
            (
                PvMode::Dynamic(tpl),
                OutputTable::new("grid-pv", &["p1", "p2", "status", "c_max", "tau_peak"]),
            )
        }
    };
    let grid = grid_pv(&xs, &ys, &mode, constraint)?;
    let dynamic = matches!(mode, PvMode::Dynamic(_));
    for p in &grid.points {
        let status = match p.status {
            PointStatus::Ok => "ok",
            PointStatus::Clipped => "clipped",
            PointStatus::Infeasible => "infeasible",
        };
        let mut row = vec![p.x.into(), p.y.into(), status.into(), p.value.into()];
        if dynamic {
            row.push(p.tau_peak.into());
        }
        t.push(row);
    }
    if let Some(best) = grid.argmax() {
        t.note("argmax.x", Cell::from(best.x).render());
        t.note("argmax.y", Cell::from(best.y).render());
        t.note("argmax.value", Cell::from(best.value).render());
    }
    Ok(t)
}

fn run_sweep_eta(a: &SweepEtaArgs) -> Result<OutputTable> {
    let ns = n_range(a.n_min, a.n_max, a.n_step)?;
    let tpl = template(a.kappa_c, a.kappa_l, 0.0, &a.state, &a.bath, &a.window)?;
    let rows = sweep_eta(&tpl, &a.etas, &ns)?;
    let mut t = OutputTable::new(
        "sweep-eta",
        &["eta", "n", "kappa_eff", "c_max", "tau_peak", "tau_collapse"],
    );
    for r in &rows {
        let p = r.summary.peak;
        t.push(vec![
            r.value.into(),
            r.n.into(),
            r.kappa_eff.into(),
            p.c_max.into(),
            p.tau.into(),
            r.summary.collapse.tau().into(),
        ]);
        if r.summary.warned {
            t.warnings.push(under_resolved(r.n));
        }
    }
    for chunk in rows.chunk_by(|x, y| x.value == y.value) {
        let pts: Vec<_> = chunk.iter().map(|r| (r.n as f64, r.summary.peak.c_max)).collect();
        note_fit(&mut t, &format!("fit.eta={}", chunk[0].value), &pts);
    }
    Ok(t)
}

fn run_limits(a: &LimitsArgs) -> Result<OutputTable> {
    if !(a.t >= 0.0 && a.t.is_finite()) {
        return Err(Error::validation("time", format!("t must be >= 0, got {}", a.t)));
    }
    if a.eta == 0.25 {
        return Err(Error::validation("coupling", "eta = 1/4 has no limit state; use eta < 1/4 or eta > 1/4"));
    }
    let res = reservoirs(&a.bath)?;
    let s = spin(&a.state)?;
    let ens = EnsembleConfig::homogeneous(a.state.background_p, s, s)?;
    let mut ns = a.ns.clone();
    ns.sort_unstable();
    ns.dedup();
    let mut t = OutputTable::new("limits", &["n", "distance", "concurrence", "limit_concurrence"]);
    for n in ns {
        let cfg = CouplingConfig::new(a.kappa_c, a.kappa_l, a.eta, n)?;
        let rho = evolve(&ens.initial_state(), a.t, &cfg, &ens, &res, Frame::Interaction)?;
        let limit = if a.eta < 0.25 {
            limit_state_small_eta(a.t, &s, &s, &cfg, &res)?
        } else {
            limit_state_large_eta(a.t, &s, &s, &cfg, &ens, &res)?
        };
        t.push(vec![
            n.into(),
            rho.max_abs_diff(&limit).into(),
            concurrence(&rho)?.value.into(),
            concurrence(&limit)?.value.into(),
        ]);
    }
    Ok(t)
}

fn run_fit(a: &FitArgs) -> Result<OutputTable> {
    let io = |e: csv::Error| Error::Io(format!("{}: {e}", a.input.display()));
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_path(&a.input)
        .map_err(io)?;
    let headers = reader.headers().map_err(io)?.clone();
    let column = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::validation("fit input", format!("no column `{name}` in {}", a.input.display())))
    };
    let (xi, yi) = (column(&a.x_column)?, column(&a.y_column)?);
    let lo = a.x_min.unwrap_or(f64::NEG_INFINITY);
    let hi = a.x_max.unwrap_or(f64::INFINITY);
    let mut points = Vec::new();
    for record in reader.records() {
        let record = record.map_err(io)?;
        let parse = |i: usize| -> Result<f64> {
            match record.get(i).unwrap_or("") {
                "" => Ok(f64::NAN),
                s => s
                    .parse()
                    .map_err(|_| Error::validation("fit input", format!("not a number: `{s}`"))),
            }
        };
        let x = parse(xi)?;
        if (lo..=hi).contains(&x) {
            points.push((x, parse(yi)?));
        }
    }
    let f = fit_exponential(&points)?;
    let mut t = OutputTable::new(
        "fit",
        &["x_column", "y_column", "slope", "intercept", "slope_stderr", "r_squared", "x_min", "x_max", "used", "excluded"],
    );
    t.push(vec![
        a.x_column.as_str().into(),
        a.y_column.as_str().into(),
        f.slope.into(),
        f.intercept.into(),
        f.slope_stderr.into(),
        f.r_squared.into(),
        f.x_range.0.into(),
        f.x_range.1.into(),
        f.used.into(),
        f.excluded.len().into(),
    ]);
    Ok(t)
}

/// Write `table` to `out.output` (`-` is standard output).
pub fn emit(table: &OutputTable, out: &OutputArgs) -> Result<()> {
    let write = |w: &mut dyn Write| match out.format {
        Format::Csv => table.write_csv(w),
        Format::Json => table.write_json(w),
    };
    if out.output == "-" {
        let mut buf = Vec::new();
        write(&mut buf)?;
        let mut lock = std::io::stdout().lock();
        match lock.write_all(&buf).and_then(|()| lock.flush()) {
            // A closed downstream pipe (`| head`) is not a failure of the run.
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
            r => r?,
        }
    } else {
        let path = Path::new(&out.output);
        let file = File::create(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let mut w = BufWriter::new(file);
        write(&mut w)?;
        w.flush()?;
    }
    Ok(())
}

fn thread_pool() -> Result<rayon::ThreadPool> {
    let threads = match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::validation("environment", format!("{THREADS_ENV} must be a non-negative integer, got `{v}`")))?,
        Err(_) => 0,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Precondition(format!("cannot start worker pool: {e}")))
}

/// Full command-line entry point; returns the process exit code.
pub fn main_with<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let cfg = match parse_args(argv) {
        Ok(cfg) => cfg,
        Err(ParseError::Clap(e)) => {
            let _ = e.print();
            return e.exit_code();
        }
        Err(ParseError::Config(e)) => {
            eprintln!("dephasim: {e}");
            return e.exit_code();
        }
    };
    let result = thread_pool().and_then(|pool| pool.install(|| run(&cfg)));
    match result.and_then(|table| {
        for w in &table.warnings {
            eprintln!("dephasim: warning: {w}");
        }
        emit(&table, cfg.output())
    }) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("dephasim: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> RunConfig {
        parse_args(std::iter::once("dephasim").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn timeseries_defaults() {
        let RunConfig::Timeseries(a) = parse(&["timeseries", "--n", "4", "--kappa-c", "0.05", "--p", "0.5", "--v", "0.48"]) else {
            panic!()
        };
        assert_eq!((a.n, a.kappa_c, a.bath.epsilon, a.bath.theta), (4, 0.05, 1.0, 1.0));
        assert_eq!(a.output.output, "-");
    }

    #[test]
    fn sweep_n_reference_configuration() {
        let RunConfig::SweepN(a) = parse(&["sweep-n", "--n-min", "2", "--n-max", "200", "--kappa-c", "0.05"]) else {
            panic!()
        };
        assert_eq!((a.n_min, a.n_max, a.state.p, a.state.v, a.kappa_l), (2, 200, 0.5, 0.48, 0.0));
    }

    #[test]
    fn config_file_merges_under_flags() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "# comment\nkappa-c = 0.3\nkappa_l = 0.1\n").unwrap();
        let path = f.path().to_str().unwrap();
        let RunConfig::Timeseries(a) = parse(&["timeseries", "--config", path, "--kappa-c", "0.2"]) else {
            panic!()
        };
        assert_eq!((a.kappa_c, a.kappa_l), (0.2, 0.1));
    }

    #[test]
    fn config_rejects_unknown_keys() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "kappas = 0.1").unwrap();
        let err = parse_args(["dephasim", "timeseries", "--config", f.path().to_str().unwrap()]).unwrap_err();
        let ParseError::Config(e) = err else { panic!() };
        assert_eq!(e.exit_code(), 2);
        assert!(e.to_string().contains("kappas"));
    }

    #[test]
    fn list_flags_override_config() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "kappas = 0.1,0.2").unwrap();
        let RunConfig::SweepKappa(a) =
            parse(&["sweep-kappa", "--config", f.path().to_str().unwrap(), "--kappas", "0.3"])
        else {
            panic!()
        };
        assert_eq!(a.kappas, vec![0.3]);
    }

    #[test]
    fn echo_round_trips() {
        for args in [
            vec!["timeseries", "--n", "7", "--kappa-c", "0.123456789012345", "--v", "-0.25"],
            vec!["sweep-eta", "--etas", "0.3,0.4", "--format", "json"],
            vec!["grid-pv", "--mode", "dynamic"],
            vec!["limits", "--eta", "0.5"],
            vec!["fit", "--input", "table.csv", "--x-min", "10"],
        ] {
            let cfg = parse(&args);
            let mut f = tempfile::NamedTempFile::new().unwrap();
            f.write_all(config_text(&cfg).as_bytes()).unwrap();
            let again = parse(&[args[0], "--config", f.path().to_str().unwrap()]);
            assert_eq!(again, cfg, "{args:?}");
        }
    }

    #[test]
    fn grid_defaults_follow_mode() {
        let RunConfig::GridPv(a) = parse(&["grid-pv", "--mode", "dynamic"]) else { panic!() };
        assert_eq!((a.points, a.x_max, a.n), (Some(26), Some(0.5), Some(40)));
        let RunConfig::GridPv(a) = parse(&["grid-pv"]) else { panic!() };
        assert_eq!((a.points, a.x_max), (Some(51), Some(1.0)));
    }
}
