use rayon::prelude::*;

use crate::bath::Reservoirs;
use crate::dynamics::{evolve_with_knobs, BathSample, CouplingConfig, DephasingSample, EnsembleConfig, Frame, ReservoirFunctions};
use crate::entanglement::concurrence;
use crate::error::{Error, Result};

/// Concurrence below this counts as zero when locating a collapse.
pub const COLLAPSE_FLOOR: f64 = 1e-6;
/// Points a collapse must persist for.
pub const COLLAPSE_PERSISTENCE: usize = 10;
/// Series whose peak stays below this are classified as creating no entanglement.
pub const SIGNIFICANCE_FLOOR: f64 = 1e-4;
/// Upper bound on automatically refined grids.
pub const MAX_STEPS: usize = 1 << 21;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesRow {
    pub t: f64,
    /// Rescaled time `ϰ_eff² ν_c t`.
    pub tau: f64,
    pub concurrence: f64,
    pub abs_p_n: f64,
    pub s: f64,
    pub gamma_l: f64,
    pub gamma_c: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct TimeSeries {
    pub rows: Vec<SeriesRow>,
    pub warnings: Vec<String>,
}

impl TimeSeries {
    pub fn concurrences(&self) -> impl Iterator<Item = f64> + '_ {
        self.rows.iter().map(|r| r.concurrence)
    }
}

/// `ϰ_eff² ν_c`, the factor converting `t` to rescaled time.
pub fn rescale_factor(cfg: &CouplingConfig, reservoirs: &Reservoirs) -> f64 {
    let k = cfg.effective_kappa_c();
    k * k * reservoirs.collective.nu_c()
}

/// Width of the `|P_N|` peaks in `t`, `1/(ϰ_eff² √N)`; `None` when `P_N` does not oscillate.
pub fn peak_width(cfg: &CouplingConfig) -> Option<f64> {
    let k = cfg.effective_kappa_c();
    (cfg.n > 2 && k > 0.0).then(|| 1.0 / (k * k * (cfg.n as f64).sqrt()))
}

/// A time window in rescaled units, refined to resolve the `P_N` peaks.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct TimeWindow {
    pub tau_max: f64,
    pub min_steps: usize,
}

impl Default for TimeWindow {
    fn default() -> Self {
        Self {
            tau_max: 2.0 * std::f64::consts::PI,
            min_steps: 4000,
        }
    }
}

impl TimeWindow {
    /// `(t_max, steps)` for a coupling. With zero collective coupling the
    /// window is read as if `ϰ_eff = 1`.
    pub fn resolve(&self, cfg: &CouplingConfig, reservoirs: &Reservoirs) -> (f64, usize) {
        let scale = rescale_factor(cfg, reservoirs);
        let t_max = if scale > 0.0 {
            self.tau_max / scale
        } else {
            self.tau_max / reservoirs.collective.nu_c()
        };
        let steps = match peak_width(cfg) {
            Some(w) => {
                let needed = (t_max / (0.1 * w)).ceil() + 1.0;
                if needed >= MAX_STEPS as f64 {
                    MAX_STEPS
                } else {
                    self.min_steps.max(needed as usize)
                }
            }
            None => self.min_steps,
        };
        (t_max, steps.max(2))
    }
}

/// Uniform grid `t_k = k t_max / (steps − 1)`.
pub fn uniform_times(t_max: f64, steps: usize) -> Result<Vec<f64>> {
    if !(t_max > 0.0 && t_max.is_finite()) {
        return Err(Error::Precondition(format!("t_max must be > 0, got {t_max}")));
    }
    if steps < 2 {
        return Err(Error::Precondition(format!("steps must be >= 2, got {steps}")));
    }
    let dt = t_max / (steps - 1) as f64;
    Ok((0..steps).map(|k| k as f64 * dt).collect())
}

pub(crate) fn bath_samples(times: &[f64], funcs: &ReservoirFunctions) -> Result<Vec<BathSample>> {
    times
        .par_iter()
        .map(|&t| funcs.sample(t).map_err(|e| Error::AtTime { t, source: Box::new(e) }))
        .collect()
}

/// Evaluate concurrence along precomputed bath samples.
pub fn series_from_samples(
    samples: &[BathSample],
    cfg: &CouplingConfig,
    ens: &EnsembleConfig,
    reservoirs: &Reservoirs,
) -> Result<TimeSeries> {
    cfg.validate()?;
    ens.validate_for(cfg)?;
    let rho0 = ens.initial_state();
    let scale = rescale_factor(cfg, reservoirs);
    let rows = samples
        .par_iter()
        .map(|b| {
            let row = (|| {
                let sample = DephasingSample::from_bath(*b, cfg, ens)?;
                let rho = evolve_with_knobs(&rho0, &sample.knobs(cfg, ens, Frame::Interaction))?;
                Ok(SeriesRow {
                    t: b.t,
                    tau: scale * b.t,
                    concurrence: concurrence(&rho)?.value,
                    abs_p_n: sample.p_n.norm(),
                    s: b.s,
                    gamma_l: b.gamma_l,
                    gamma_c: b.gamma_c,
                })
            })();
            row.map_err(|e| Error::AtTime { t: b.t, source: Box::new(e) })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut warnings = Vec::new();
    if let (Some(w), [a, b, ..]) = (peak_width(cfg), samples) {
        let dt = b.t - a.t;
        if dt > 0.1 * w {
            warnings.push(format!(
                "under-resolved grid for N={}: step {dt:.6e} exceeds a tenth of the P_N peak width {w:.6e}",
                cfg.n
            ));
        }
    }
    Ok(TimeSeries { rows, warnings })
}

/// Concurrence (interaction frame) on `steps` uniform points of `[0, t_max]`.
pub fn time_series(
    cfg: &CouplingConfig,
    ens: &EnsembleConfig,
    reservoirs: &Reservoirs,
    t_max: f64,
    steps: usize,
) -> Result<TimeSeries> {
    let times = uniform_times(t_max, steps)?;
    let funcs = ReservoirFunctions::new(reservoirs)?;
    series_from_samples(&bath_samples(&times, &funcs)?, cfg, ens, reservoirs)
}

/// [`time_series`] over a rescaled-time window.
pub fn time_series_window(
    cfg: &CouplingConfig,
    ens: &EnsembleConfig,
    reservoirs: &Reservoirs,
    window: &TimeWindow,
) -> Result<TimeSeries> {
    let (t_max, steps) = window.resolve(cfg, reservoirs);
    time_series(cfg, ens, reservoirs, t_max, steps)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Peak {
    pub t: f64,
    pub tau: f64,
    pub c_max: f64,
    /// Set when every sample is exactly zero.
    pub all_zero: bool,
}

/// Global maximum of the concurrence; ties go to the earliest time.
pub fn peak_concurrence(series: &TimeSeries) -> Result<Peak> {
    let first = series
        .rows
        .first()
        .ok_or_else(|| Error::Precondition("peak of an empty series".into()))?;
    let best = series
        .rows
        .iter()
        .fold(first, |best, r| if r.concurrence > best.concurrence { r } else { best });
    if best.concurrence == 0.0 {
        return Ok(Peak {
            t: 0.0,
            tau: 0.0,
            c_max: 0.0,
            all_zero: true,
        });
    }
    Ok(Peak {
        t: best.t,
        tau: best.tau,
        c_max: best.concurrence,
        all_zero: false,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Collapse {
    /// First point of a persistent zero stretch following entanglement.
    At { t: f64, tau: f64 },
    /// The peak never exceeds [`SIGNIFICANCE_FLOOR`].
    NoEntanglement,
    /// Entanglement is present but does not collapse within the window.
    NotObserved,
}

impl Collapse {
    pub fn tau(&self) -> Option<f64> {
        match self {
            Collapse::At { tau, .. } => Some(*tau),
            _ => None,
        }
    }
}

/// First time at which the concurrence drops below [`COLLAPSE_FLOOR`] after
/// having been above it, and stays there for [`COLLAPSE_PERSISTENCE`] points.
pub fn collapse_time(series: &TimeSeries) -> Collapse {
    let c: Vec<f64> = series.concurrences().collect();
    if c.iter().all(|&x| !(x > SIGNIFICANCE_FLOOR)) {
        return Collapse::NoEntanglement;
    }
    let mut seen = false;
    for i in 0..c.len() {
        if c[i] >= COLLAPSE_FLOOR {
            seen = true;
        } else if seen {
            let end = i + COLLAPSE_PERSISTENCE;
            if end <= c.len() && c[i..end].iter().all(|&x| x < COLLAPSE_FLOOR) {
                let r = &series.rows[i];
                return Collapse::At { t: r.t, tau: r.tau };
            }
        }
    }
    Collapse::NotObserved
}
