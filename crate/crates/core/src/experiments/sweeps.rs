use std::collections::hash_map::Entry;
use std::collections::HashMap;

use rayon::prelude::*;

use super::series::{bath_samples, collapse_time, peak_concurrence, series_from_samples, uniform_times, Collapse, Peak, TimeWindow};
use crate::bath::Reservoirs;
use crate::dynamics::{evolve_with_knobs, BathSample, CouplingConfig, DephasingKnobs, EnsembleConfig, ReservoirFunctions};
use crate::entanglement::concurrence;
use crate::error::{Error, Result};
use crate::state::{initial_two_qubit, SpinInit};

/// Everything a sweep holds fixed. The `n` of `coupling` is overwritten per point.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct SweepTemplate {
    pub coupling: CouplingConfig,
    pub spin1: SpinInit,
    pub spin2: SpinInit,
    pub background_p: f64,
    pub reservoirs: Reservoirs,
    pub window: TimeWindow,
}

impl SweepTemplate {
    pub fn new(coupling: CouplingConfig, spin1: SpinInit, spin2: SpinInit, background_p: f64) -> Result<Self> {
        coupling.validate()?;
        EnsembleConfig::homogeneous(background_p, spin1, spin2)?;
        Ok(Self {
            coupling,
            spin1,
            spin2,
            background_p,
            reservoirs: Reservoirs::default(),
            window: TimeWindow::default(),
        })
    }

    pub fn with_reservoirs(mut self, reservoirs: Reservoirs) -> Self {
        self.reservoirs = reservoirs;
        self
    }

    pub fn with_window(mut self, window: TimeWindow) -> Self {
        self.window = window;
        self
    }

    fn ensemble(&self) -> Result<EnsembleConfig> {
        EnsembleConfig::homogeneous(self.background_p, self.spin1, self.spin2)
    }
}

/// Summary of one time series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSummary {
    pub peak: Peak,
    pub collapse: Collapse,
    pub warned: bool,
}

/// Bath samples memoised per time grid, so sweeps over `N` at fixed `ϰ_eff`
/// evaluate the bath once.
struct BathCache {
    grids: HashMap<(u64, usize), Vec<BathSample>>,
}

impl BathCache {
    fn build(funcs: &ReservoirFunctions, grids: impl IntoIterator<Item = (f64, usize)>) -> Result<Self> {
        let mut cache = Self { grids: HashMap::new() };
        for (t_max, steps) in grids {
            let key = (t_max.to_bits(), steps);
            if let Entry::Vacant(slot) = cache.grids.entry(key) {
                slot.insert(bath_samples(&uniform_times(t_max, steps)?, funcs)?);
            }
        }
        Ok(cache)
    }

    fn get(&self, t_max: f64, steps: usize) -> &[BathSample] {
        &self.grids[&(t_max.to_bits(), steps)]
    }
}

fn summarize(
    cfgs: &[CouplingConfig],
    template: &SweepTemplate,
) -> Result<Vec<SeriesSummary>> {
    let ens = template.ensemble()?;
    for cfg in cfgs {
        cfg.validate()?;
    }
    let funcs = ReservoirFunctions::new(&template.reservoirs)?;
    let grids: Vec<(f64, usize)> = cfgs
        .iter()
        .map(|c| template.window.resolve(c, &template.reservoirs))
        .collect();
    let cache = BathCache::build(&funcs, grids.iter().copied())?;
    cfgs.par_iter()
        .zip(grids.par_iter())
        .map(|(cfg, &(t_max, steps))| {
            let series = series_from_samples(cache.get(t_max, steps), cfg, &ens, &template.reservoirs)?;
            Ok(SeriesSummary {
                peak: peak_concurrence(&series)?,
                collapse: collapse_time(&series),
                warned: !series.warnings.is_empty(),
            })
        })
        .collect()
}

fn sorted_unique<T: Copy + PartialOrd>(mut xs: Vec<T>) -> Vec<T> {
    xs.sort_by(|a, b| a.partial_cmp(b).expect("finite sweep values"));
    xs.dedup();
    xs
}

fn check_finite(what: &'static str, xs: &[f64]) -> Result<()> {
    if xs.iter().all(|x| x.is_finite()) {
        Ok(())
    } else {
        Err(Error::validation(what, "sweep values must be finite"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NSweepRow {
    pub n: u64,
    pub summary: SeriesSummary,
}

/// Peak and collapse per spin count, sorted by `N`.
pub fn sweep_n(template: &SweepTemplate, ns: &[u64]) -> Result<Vec<NSweepRow>> {
    let ns = sorted_unique(ns.to_vec());
    let cfgs: Vec<_> = ns.iter().map(|&n| template.coupling.with_n(n)).collect();
    let summaries = summarize(&cfgs, template)?;
    Ok(ns
        .into_iter()
        .zip(summaries)
        .map(|(n, summary)| NSweepRow { n, summary })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSweepRow {
    /// `ϰ_c` or `η`, depending on the sweep.
    pub value: f64,
    pub n: u64,
    pub kappa_eff: f64,
    pub summary: SeriesSummary,
}

fn sweep_grid(
    template: &SweepTemplate,
    values: &[f64],
    ns: &[u64],
    apply: impl Fn(CouplingConfig, f64) -> CouplingConfig,
) -> Result<Vec<GridSweepRow>> {
    let values = sorted_unique(values.to_vec());
    let ns = sorted_unique(ns.to_vec());
    let points: Vec<(f64, u64)> = values
        .iter()
        .flat_map(|&v| ns.iter().map(move |&n| (v, n)))
        .collect();
    let cfgs: Vec<_> = points
        .iter()
        .map(|&(v, n)| apply(template.coupling, v).with_n(n))
        .collect();
    let summaries = summarize(&cfgs, template)?;
    Ok(points
        .into_iter()
        .zip(cfgs.iter().zip(summaries))
        .map(|((value, n), (cfg, summary))| GridSweepRow {
            value,
            n,
            kappa_eff: cfg.effective_kappa_c(),
            summary,
        })
        .collect())
}

/// Peak per `(ϰ_c, N)`, sorted by `ϰ_c` then `N`.
pub fn sweep_kappa(template: &SweepTemplate, kappas: &[f64], ns: &[u64]) -> Result<Vec<GridSweepRow>> {
    check_finite("kappa sweep", kappas)?;
    sweep_grid(template, kappas, ns, |mut c, k| {
        c.kappa_c = k;
        c
    })
}

/// Peak per `(η, N)`, sorted by `η` then `N`.
pub fn sweep_eta(template: &SweepTemplate, etas: &[f64], ns: &[u64]) -> Result<Vec<GridSweepRow>> {
    check_finite("eta sweep", etas)?;
    sweep_grid(template, etas, ns, |mut c, e| {
        c.eta = e;
        c
    })
}

/// How grid points violating `|v|² ≤ p(1−p)` are handled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize)]
pub enum ConstraintMode {
    /// Report the point as infeasible.
    #[default]
    Exclude,
    /// Shrink `v` onto the boundary `√(p(1−p))`.
    Clip,
}

/// What the two grid axes mean.
#[derive(Debug, Clone, PartialEq)]
pub enum PvMode {
    /// Both spins start in `(p, v)` = `(x, y)`; the pair evolves with fixed
    /// knobs `ϰ²S = phase`, `ϰ²Γ = decay` and `N = 2`. The reported value is
    /// the concurrence at that instant.
    Abstract { phase: f64, decay: f64 },
    /// Spin 1 starts with `p = v = x`, spin 2 with `p = v = y`; the reported
    /// value is the peak concurrence over the template's window.
    Dynamic(SweepTemplate),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum PointStatus {
    Ok,
    Clipped,
    Infeasible,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PvPoint {
    pub x: f64,
    pub y: f64,
    pub status: PointStatus,
    /// `None` for infeasible points.
    pub value: Option<f64>,
    /// Peak time in rescaled units (dynamic mode only).
    pub tau_peak: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PvGrid {
    /// Row-major in `x`, then `y`.
    pub points: Vec<PvPoint>,
}

impl PvGrid {
    /// The largest value among feasible points; ties go to the first in grid order.
    pub fn argmax(&self) -> Option<&PvPoint> {
        self.points
            .iter()
            .filter(|p| p.value.is_some())
            .fold(None, |best: Option<&PvPoint>, p| match best {
                Some(b) if b.value >= p.value => Some(b),
                _ => Some(p),
            })
    }
}

fn admit(p: f64, v: f64, mode: ConstraintMode) -> Result<Option<(SpinInit, bool)>> {
    match SpinInit::new(p, v) {
        Ok(s) => Ok(Some((s, false))),
        Err(_) if !(0.0..=1.0).contains(&p) || !v.is_finite() => {
            Err(Error::validation("grid", format!("p must lie in [0, 1] and v be finite, got ({p}, {v})")))
        }
        Err(_) => match mode {
            ConstraintMode::Exclude => Ok(None),
            ConstraintMode::Clip => {
                let v = SpinInit::max_coherence(p).copysign(v);
                Ok(Some((SpinInit::new(p, v)?, true)))
            }
        },
    }
}

/// Evaluate the `(x, y)` grid.
pub fn grid_pv(xs: &[f64], ys: &[f64], mode: &PvMode, constraint: ConstraintMode) -> Result<PvGrid> {
    let coords: Vec<(f64, f64)> = xs.iter().flat_map(|&x| ys.iter().map(move |&y| (x, y))).collect();
    let points = match mode {
        PvMode::Abstract { phase, decay } => {
            let knobs = DephasingKnobs::abstract_pair(*phase, *decay);
            coords
                .par_iter()
                .map(|&(x, y)| {
                    let Some((spin, clipped)) = admit(x, y, constraint)? else {
                        return Ok(infeasible(x, y));
                    };
                    let rho = evolve_with_knobs(&initial_two_qubit(&spin, &spin), &knobs)?;
                    Ok(PvPoint {
                        x,
                        y,
                        status: if clipped { PointStatus::Clipped } else { PointStatus::Ok },
                        value: Some(concurrence(&rho)?.value),
                        tau_peak: None,
                    })
                })
                .collect::<Result<Vec<_>>>()?
        }
        PvMode::Dynamic(template) => {
            let ens0 = EnsembleConfig::homogeneous(template.background_p, template.spin1, template.spin2)?;
            let cfg = template.coupling;
            cfg.validate()?;
            ens0.validate_for(&cfg)?;
            let funcs = ReservoirFunctions::new(&template.reservoirs)?;
            let (t_max, steps) = template.window.resolve(&cfg, &template.reservoirs);
            let samples = bath_samples(&uniform_times(t_max, steps)?, &funcs)?;
            coords
                .par_iter()
                .map(|&(x, y)| {
                    let (Some((s1, c1)), Some((s2, c2))) = (admit(x, x, constraint)?, admit(y, y, constraint)?) else {
                        return Ok(infeasible(x, y));
                    };
                    let ens = EnsembleConfig {
                        spin1: s1,
                        spin2: s2,
                        ..ens0.clone()
                    };
                    let series = series_from_samples(&samples, &cfg, &ens, &template.reservoirs)?;
                    let peak = peak_concurrence(&series)?;
                    Ok(PvPoint {
                        x,
                        y,
                        status: if c1 || c2 { PointStatus::Clipped } else { PointStatus::Ok },
                        value: Some(peak.c_max),
                        tau_peak: Some(peak.tau),
                    })
                })
                .collect::<Result<Vec<_>>>()?
        }
    };
    Ok(PvGrid { points })
}

fn infeasible(x: f64, y: f64) -> PvPoint {
    PvPoint {
        x,
        y,
        status: PointStatus::Infeasible,
        value: None,
        tau_peak: None,
    }
}

/// `n` evenly spaced points from `a` to `b` inclusive.
pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => vec![],
        1 => vec![a],
        _ => (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect(),
    }
}
