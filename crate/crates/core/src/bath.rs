//! Bath-induced phase `S(t)` and decay `Γ(t)` for the sharp-cutoff `√|k|` form factor.
//!
//! All quantities are dimensionless: time in units of `1/ω₀`, wavenumbers in
//! units of `ω₀/c`, temperature as `θ = k_B T / (ħ ω₀)`. Angular integrals are
//! reduced with `d³k = 4π ω² dω`, so for `|f(k)|² = |k| χ(|k| ≤ k_c)`:
//!
//! ```text
//! S(t) = -2π ∫₀^{k_c} ω (ω t − sin ω t) dω
//!      = -2π k_c² [ x/3 − (sin x − x cos x)/x² ],   x = k_c t
//! Γ(t) =  4π ∫₀^{k_c} ω coth(βω/2) sin²(ω t/2) dω
//! ```
//!
//! `S` is evaluated in closed form. `Γ` has no elementary antiderivative and is
//! integrated adaptively; for very large `k_c t` it switches to an endpoint
//! asymptotic expansion around the saturation value `Γ(∞)`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::quadrature::{integrate, integrate_with_breaks, QuadratureSettings};

/// Below this `k_c t` the closed form for `S` loses digits to cancellation.
const PHASE_SERIES_CUTOFF: f64 = 0.5;
const PHASE_SERIES_TERMS: usize = 9;
/// Above this `k_c t` the `Γ` integral is split at multiples of `π/t`.
const GAMMA_SPLIT_CUTOFF: f64 = 50.0;
/// Above this `k_c t` the endpoint expansion is used for `Γ`.
const GAMMA_ASYMPTOTIC_CUTOFF: f64 = 500.0;
const ASYMPTOTIC_TERMS: usize = 16;
const CAUCHY_POINTS: usize = 64;

/// Coupling form factor.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub enum FormFactor {
    /// `f(k) = √|k|` for `|k| ≤ k_c`, zero beyond.
    SqrtCutoff { k_c: f64 },
}

/// Thermal bath parameters.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct BathConfig {
    /// Cutoff-to-thermal frequency ratio `ν_c / ν_T`.
    pub epsilon: f64,
    /// Dimensionless temperature `k_B T / (ħ ω₀)`.
    pub theta: f64,
    pub form_factor: FormFactor,
    pub quadrature: QuadratureSettings,
}

impl BathConfig {
    /// Builds a bath with `k_c = ε θ`, so that `β k_c = ε`.
    pub fn new(epsilon: f64, theta: f64) -> Result<Self> {
        let cfg = Self {
            epsilon,
            theta,
            form_factor: FormFactor::SqrtCutoff { k_c: epsilon * theta },
            quadrature: QuadratureSettings::default(),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_quadrature(mut self, quadrature: QuadratureSettings) -> Self {
        self.quadrature = quadrature;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.epsilon > 0.0 && self.epsilon.is_finite()) {
            return Err(Error::validation("bath", format!("epsilon must be > 0, got {}", self.epsilon)));
        }
        if !(self.theta > 0.0 && self.theta.is_finite()) {
            return Err(Error::validation("bath", format!("theta must be > 0, got {}", self.theta)));
        }
        let FormFactor::SqrtCutoff { k_c } = self.form_factor;
        if !(k_c > 0.0 && k_c.is_finite()) {
            return Err(Error::validation("bath", format!("k_c must be > 0, got {k_c}")));
        }
        self.quadrature.validate()
    }

    pub fn k_c(&self) -> f64 {
        let FormFactor::SqrtCutoff { k_c } = self.form_factor;
        k_c
    }

    pub fn beta(&self) -> f64 {
        1.0 / self.theta
    }

    /// Thermal frequency `ν_T = θ / 2π`.
    pub fn nu_t(&self) -> f64 {
        self.theta / (2.0 * PI)
    }

    /// Cutoff frequency `ν_c = k_c / 2π`.
    pub fn nu_c(&self) -> f64 {
        self.k_c() / (2.0 * PI)
    }
}

impl Default for BathConfig {
    fn default() -> Self {
        Self::new(1.0, 1.0).expect("unit bath is valid")
    }
}

/// Collective and local baths. The local form factor defaults to the collective one.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct Reservoirs {
    pub collective: BathConfig,
    pub local: BathConfig,
}

impl Reservoirs {
    pub fn shared(bath: BathConfig) -> Self {
        Self {
            collective: bath,
            local: bath,
        }
    }
}

impl Default for Reservoirs {
    fn default() -> Self {
        Self::shared(BathConfig::default())
    }
}

impl From<BathConfig> for Reservoirs {
    fn from(bath: BathConfig) -> Self {
        Self::shared(bath)
    }
}

/// `x coth x`, even and analytic near zero.
fn x_coth_x(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        1.0 + x * x / 3.0
    } else {
        x / x.tanh()
    }
}

/// `S(t) / (-2π k_c²)` as a function of `x = k_c t`.
///
/// The closed form has relative rounding error of order `30ε/x⁴`, so small
/// arguments use the Maclaurin series `Σ_{n≥2} (−1)ⁿ 2n x^{2n−1} / (2n+1)!`.
fn phase_shape(x: f64) -> f64 {
    if x < PHASE_SERIES_CUTOFF {
        phase_shape_series(x)
    } else {
        phase_shape_closed(x)
    }
}

fn phase_shape_series(x: f64) -> f64 {
    let x2 = x * x;
    let mut term = x * x2 / 30.0;
    let mut sum = term;
    for n in 3..=PHASE_SERIES_TERMS + 1 {
        let n = n as f64;
        // ratio of consecutive terms
        term *= -x2 * n / ((n - 1.0) * (2.0 * n) * (2.0 * n + 1.0));
        sum += term;
    }
    sum
}

fn phase_shape_closed(x: f64) -> f64 {
    x / 3.0 - (x.sin() - x * x.cos()) / (x * x)
}

fn check_time(t: f64) -> Result<()> {
    if t.is_nan() || t < 0.0 {
        return Err(Error::Precondition(format!("time must be >= 0, got {t}")));
    }
    Ok(())
}

/// Collective phase `S(t)`; zero at `t = 0`, non-positive, asymptotically `-2π k_c³ t / 3`.
pub fn phase_s(t: f64, cfg: &BathConfig) -> Result<f64> {
    check_time(t)?;
    let k_c = cfg.k_c();
    let s = -2.0 * PI * k_c * k_c * phase_shape(k_c * t);
    if !s.is_finite() {
        return Err(Error::NumericalDomain("phase S(t)"));
    }
    Ok(s)
}

/// Decay function `Γ(t) ≥ 0`, zero at `t = 0`.
pub fn decay_gamma(t: f64, cfg: &BathConfig) -> Result<f64> {
    check_time(t)?;
    BathFunctions::new(cfg)?.gamma(t)
}

/// Precomputed evaluator for `S` and `Γ` on one bath.
///
/// Holds the saturation value `Γ(∞)` and the derivatives of
/// `g(ω) = ω coth(βω/2)` at the cutoff, which feed the large-`t` expansion
/// `Γ(t) = Γ(∞) − 2π ∫₀^{k_c} g(ω) cos(ωt) dω`.
#[derive(Debug, Clone)]
pub struct BathFunctions {
    cfg: BathConfig,
    gamma_inf: f64,
    endpoint_derivs: [f64; ASYMPTOTIC_TERMS],
}

impl BathFunctions {
    pub fn new(cfg: &BathConfig) -> Result<Self> {
        cfg.validate()?;
        let k_c = cfg.k_c();
        let beta = cfg.beta();
        let g = |w: f64| 2.0 / beta * x_coth_x(0.5 * beta * w);
        let gamma_inf = 2.0 * PI * integrate(g, 0.0, k_c, &cfg.quadrature)?.value;

        // Cauchy integral on a circle around k_c. Poles of coth(βz/2) sit at
        // z = 2πi m/β, so radius π/β keeps them at twice the radius.
        let radius = PI / beta;
        let samples: Vec<(Complex64, Complex64)> = (0..CAUCHY_POINTS)
            .map(|j| {
                let phi = 2.0 * PI * (j as f64 + 0.5) / CAUCHY_POINTS as f64;
                let z = k_c + radius * Complex64::from_polar(1.0, phi);
                let half = 0.5 * beta * z;
                (Complex64::from_polar(1.0, phi), 2.0 / beta * half / half.tanh())
            })
            .collect();
        let mut endpoint_derivs = [0.0; ASYMPTOTIC_TERMS];
        let mut factorial = 1.0;
        for (n, d) in endpoint_derivs.iter_mut().enumerate() {
            if n > 0 {
                factorial *= n as f64;
            }
            let mean: Complex64 = samples
                .iter()
                .map(|(unit, gz)| gz * unit.powi(-(n as i32)))
                .sum::<Complex64>()
                / CAUCHY_POINTS as f64;
            *d = factorial / radius.powi(n as i32) * mean.re;
        }

        Ok(Self {
            cfg: *cfg,
            gamma_inf,
            endpoint_derivs,
        })
    }

    pub fn config(&self) -> &BathConfig {
        &self.cfg
    }

    /// `lim_{t→∞} Γ(t) = 2π ∫₀^{k_c} ω coth(βω/2) dω`.
    pub fn gamma_saturation(&self) -> f64 {
        self.gamma_inf
    }

    pub fn phase(&self, t: f64) -> Result<f64> {
        phase_s(t, &self.cfg)
    }

    pub fn gamma(&self, t: f64) -> Result<f64> {
        check_time(t)?;
        if t == 0.0 {
            return Ok(0.0);
        }
        let k_c = self.cfg.k_c();
        let x = k_c * t;
        let value = if x > GAMMA_ASYMPTOTIC_CUTOFF {
            self.gamma_asymptotic(t)
        } else {
            self.gamma_quadrature(t)?
        };
        if !value.is_finite() {
            return Err(Error::NumericalDomain("decay Γ(t)"));
        }
        Ok(value.max(0.0))
    }

    /// Direct adaptive quadrature of the radial integral, split at multiples
    /// of `π/t` once the integrand oscillates.
    pub fn gamma_quadrature(&self, t: f64) -> Result<f64> {
        let k_c = self.cfg.k_c();
        let beta = self.cfg.beta();
        let integrand = |w: f64| {
            let s = (0.5 * w * t).sin();
            2.0 / beta * x_coth_x(0.5 * beta * w) * s * s
        };
        let x = k_c * t;
        let integral = if x > GAMMA_SPLIT_CUTOFF {
            let step = PI / t;
            let panels = (k_c / step).ceil() as usize;
            let mut breaks: Vec<f64> = (0..panels).map(|m| m as f64 * step).collect();
            breaks.push(k_c);
            integrate_with_breaks(integrand, &breaks, &self.cfg.quadrature)?
        } else {
            integrate(integrand, 0.0, k_c, &self.cfg.quadrature)?
        };
        Ok(4.0 * PI * integral.value)
    }

    /// Endpoint expansion by repeated integration by parts. `g` is even, so
    /// the lower limit contributes nothing.
    pub fn gamma_asymptotic(&self, t: f64) -> f64 {
        let x = self.cfg.k_c() * t;
        let (s, c) = x.sin_cos();
        let mut oscillating = 0.0;
        let mut t_pow = t;
        for (n, d) in self.endpoint_derivs.iter().enumerate() {
            let trig = match n % 4 {
                0 => s,
                1 => c,
                2 => -s,
                _ => -c,
            };
            oscillating += d * trig / t_pow;
            t_pow *= t;
        }
        self.gamma_inf - 2.0 * PI * oscillating
    }
}

/// One row of a tabulated bath: `(t, S(t), Γ(t))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DephasingPoint {
    pub t: f64,
    pub s: f64,
    pub gamma: f64,
}

/// Tabulate `S` and `Γ` on a strictly increasing, non-negative time grid.
pub fn dephasing_grid(times: &[f64], cfg: &BathConfig) -> Result<Vec<DephasingPoint>> {
    if let Some(&first) = times.first() {
        if first.is_nan() || first < 0.0 {
            return Err(Error::Precondition(format!("times must be >= 0, got {first}")));
        }
    }
    if let Some(w) = times.windows(2).find(|w| !(w[1] > w[0])) {
        return Err(Error::Precondition(format!(
            "times must be strictly increasing ({} then {})",
            w[0], w[1]
        )));
    }
    if times.is_empty() {
        return Ok(Vec::new());
    }
    let funcs = BathFunctions::new(cfg)?;
    times
        .par_iter()
        .map(|&t| {
            let point = (|| {
                Ok(DephasingPoint {
                    t,
                    s: funcs.phase(t)?,
                    gamma: funcs.gamma(t)?,
                })
            })();
            point.map_err(|e| Error::AtTime { t, source: Box::new(e) })
        })
        .collect()
}
