//! Time series, parameter sweeps and fits built on the pair dynamics.
//!
//! Times are reported both in bath units and rescaled as `τ = ϰ_eff² ν_c t`,
//! under which curves for different couplings share their timing for `N = 2`.

mod fit;
mod series;
mod sweeps;

pub use fit::{fit_exponential, ExponentialFit};
pub use series::{
    collapse_time, peak_concurrence, peak_width, rescale_factor, series_from_samples, time_series,
    time_series_window, uniform_times, Collapse, Peak, SeriesRow, TimeSeries, TimeWindow,
    COLLAPSE_FLOOR, COLLAPSE_PERSISTENCE, MAX_STEPS, SIGNIFICANCE_FLOOR,
};
pub use sweeps::{
    grid_pv, linspace, sweep_eta, sweep_kappa, sweep_n, ConstraintMode, GridSweepRow, NSweepRow,
    PointStatus, PvGrid, PvMode, PvPoint, SeriesSummary, SweepTemplate,
};
