//! Exact reduced dynamics of two retained spins.
//!
//! Populations are frozen; each coherence picks up a Lamb-shift phase
//! `e^{±iϰ²S}`, decay factors from the local and collective baths, and the
//! factor `P_N` (or `P̃_N` for the double-flip coherence) produced by tracing
//! out spins `3..N`. Only the populations `p_j` of the traced-out spins enter.

use num_complex::Complex64;

use crate::bath::{BathConfig, BathFunctions, Reservoirs};
use crate::error::{Error, Result};
use crate::state::{check_hermitian_trace, initial_two_qubit, Matrix4c, SpinInit, TwoQubitDensity};

/// Tolerance for the post-evolution Hermiticity / trace check.
const EVOLVE_CHECK_TOL: f64 = 1e-10;

/// Spin–bath coupling strengths and the spin count.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct CouplingConfig {
    /// Collective coupling `ϰ_c` before `N`-scaling.
    pub kappa_c: f64,
    /// Local coupling `ϰ_ℓ`.
    pub kappa_l: f64,
    /// The collective coupling used in the dynamics is `ϰ_c / N^η`.
    pub eta: f64,
    /// Total number of spins, including the two retained ones.
    pub n: u64,
}

impl CouplingConfig {
    pub fn new(kappa_c: f64, kappa_l: f64, eta: f64, n: u64) -> Result<Self> {
        let cfg = Self {
            kappa_c,
            kappa_l,
            eta,
            n,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let ok = |x: f64| x >= 0.0 && x.is_finite();
        if !ok(self.kappa_c) {
            return Err(Error::validation("coupling", format!("kappa_c must be >= 0, got {}", self.kappa_c)));
        }
        if !ok(self.kappa_l) {
            return Err(Error::validation("coupling", format!("kappa_l must be >= 0, got {}", self.kappa_l)));
        }
        if !ok(self.eta) {
            return Err(Error::validation("coupling", format!("eta must be >= 0, got {}", self.eta)));
        }
        if self.n < 2 {
            return Err(Error::validation("coupling", format!("N must be >= 2, got {}", self.n)));
        }
        Ok(())
    }

    /// `ϰ_c / N^η`.
    pub fn effective_kappa_c(&self) -> f64 {
        self.kappa_c / (self.n as f64).powf(self.eta)
    }

    pub fn with_n(mut self, n: u64) -> Self {
        self.n = n;
        self
    }
}

/// Populations of the traced-out spins `3..N`.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub enum Background {
    /// Every traced-out spin has population `p`.
    Homogeneous(f64),
    /// One population per traced-out spin; length must be `N − 2`.
    Explicit(Vec<f64>),
}

/// Initial conditions of the retained pair plus the background populations.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct EnsembleConfig {
    pub background: Background,
    pub spin1: SpinInit,
    pub spin2: SpinInit,
    /// Free precession frequencies; only used in the lab frame.
    pub omega1: f64,
    pub omega2: f64,
}

impl EnsembleConfig {
    pub fn homogeneous(background_p: f64, spin1: SpinInit, spin2: SpinInit) -> Result<Self> {
        let ens = Self {
            background: Background::Homogeneous(background_p),
            spin1,
            spin2,
            omega1: 0.0,
            omega2: 0.0,
        };
        ens.validate_populations()?;
        Ok(ens)
    }

    fn validate_populations(&self) -> Result<()> {
        let check = |p: f64| {
            if (0.0..=1.0).contains(&p) {
                Ok(())
            } else {
                Err(Error::validation("ensemble", format!("background p must lie in [0, 1], got {p}")))
            }
        };
        match &self.background {
            Background::Homogeneous(p) => check(*p),
            Background::Explicit(ps) => ps.iter().try_for_each(|&p| check(p)),
        }
    }

    /// Checks populations and that an explicit background has `N − 2` entries.
    pub fn validate_for(&self, cfg: &CouplingConfig) -> Result<()> {
        self.validate_populations()?;
        if let Background::Explicit(ps) = &self.background {
            if ps.len() as u64 != cfg.n - 2 {
                return Err(Error::validation(
                    "ensemble",
                    format!("explicit background has {} entries, N - 2 = {}", ps.len(), cfg.n - 2),
                ));
            }
        }
        if !(self.omega1.is_finite() && self.omega2.is_finite()) {
            return Err(Error::validation("ensemble", "spin frequencies must be finite"));
        }
        Ok(())
    }

    pub fn initial_state(&self) -> TwoQubitDensity {
        initial_two_qubit(&self.spin1, &self.spin2)
    }
}

/// Reference frame of the evolved matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize)]
pub enum Frame {
    Lab,
    /// Free phases `e^{iωt}` removed.
    #[default]
    Interaction,
}

/// `ln |z|` and `arg z` for `z = p e^{ia} + (1−p) e^{−ia}`.
fn factor_log_polar(p: f64, a: f64) -> (f64, f64) {
    let (sin, cos) = a.sin_cos();
    // |z|² = 1 − 4p(1−p) sin²a
    let log_mod = 0.5 * (-4.0 * p * (1.0 - p) * sin * sin).ln_1p();
    let arg = ((2.0 * p - 1.0) * sin).atan2(cos);
    (log_mod, arg)
}

/// `P_N` (or `P̃_N` when `doubled`) from a precomputed phase `S(t)`.
pub fn background_factor_from_phase(
    s: f64,
    cfg: &CouplingConfig,
    ens: &EnsembleConfig,
    doubled: bool,
) -> Result<Complex64> {
    ens.validate_for(cfg)?;
    if cfg.n == 2 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let k = cfg.effective_kappa_c();
    let mut a = k * k * s;
    if doubled {
        a *= 2.0;
    }
    let (log_mod, arg) = match &ens.background {
        Background::Homogeneous(p) => {
            let m = (cfg.n - 2) as f64;
            let (lm, ar) = factor_log_polar(*p, a);
            (m * lm, m * ar)
        }
        Background::Explicit(ps) => ps.iter().fold((0.0, 0.0), |(lm, ar), &p| {
            let (l, g) = factor_log_polar(p, a);
            (lm + l, ar + g)
        }),
    };
    if log_mod == f64::NEG_INFINITY {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let value = Complex64::from_polar(log_mod.exp(), arg);
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(Error::NumericalDomain("background factor"));
    }
    Ok(value)
}

/// `P_N(t) = ∏_{j=3}^N [p_j e^{iϰ²S(t)} + (1−p_j) e^{−iϰ²S(t)}]` with `ϰ = ϰ_c/N^η`,
/// or `P̃_N` (with `ϰ²` doubled).
pub fn background_factor(
    t: f64,
    cfg: &CouplingConfig,
    ens: &EnsembleConfig,
    bath: &BathConfig,
    doubled: bool,
) -> Result<Complex64> {
    let s = crate::bath::phase_s(t, bath)?;
    background_factor_from_phase(s, cfg, ens, doubled)
}

/// Evaluators for both baths.
#[derive(Debug, Clone)]
pub struct ReservoirFunctions {
    collective: BathFunctions,
    local: Option<BathFunctions>,
}

/// Bath functions at one time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BathSample {
    pub t: f64,
    pub s: f64,
    pub gamma_c: f64,
    pub gamma_l: f64,
}

impl ReservoirFunctions {
    pub fn new(res: &Reservoirs) -> Result<Self> {
        let collective = BathFunctions::new(&res.collective)?;
        let local = if res.local == res.collective {
            None
        } else {
            Some(BathFunctions::new(&res.local)?)
        };
        Ok(Self { collective, local })
    }

    pub fn collective(&self) -> &BathFunctions {
        &self.collective
    }

    pub fn sample(&self, t: f64) -> Result<BathSample> {
        let s = self.collective.phase(t)?;
        let gamma_c = self.collective.gamma(t)?;
        let gamma_l = match &self.local {
            Some(local) => local.gamma(t)?,
            None => gamma_c,
        };
        Ok(BathSample { t, s, gamma_c, gamma_l })
    }

    pub fn local_gamma(&self, t: f64) -> Result<f64> {
        self.local.as_ref().unwrap_or(&self.collective).gamma(t)
    }
}

/// All time-dependent ingredients of the evolution at one instant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DephasingSample {
    pub t: f64,
    pub s: f64,
    pub gamma_l: f64,
    pub gamma_c: f64,
    pub p_n: Complex64,
    pub tilde_p_n: Complex64,
}

impl DephasingSample {
    pub fn from_bath(b: BathSample, cfg: &CouplingConfig, ens: &EnsembleConfig) -> Result<Self> {
        Ok(Self {
            t: b.t,
            s: b.s,
            gamma_l: b.gamma_l,
            gamma_c: b.gamma_c,
            p_n: background_factor_from_phase(b.s, cfg, ens, false)?,
            tilde_p_n: background_factor_from_phase(b.s, cfg, ens, true)?,
        })
    }

    /// Dimensionless products entering the matrix elements.
    pub fn knobs(&self, cfg: &CouplingConfig, ens: &EnsembleConfig, frame: Frame) -> DephasingKnobs {
        let kc = cfg.effective_kappa_c();
        let (free1, free2) = match frame {
            Frame::Lab => (ens.omega1 * self.t, ens.omega2 * self.t),
            Frame::Interaction => (0.0, 0.0),
        };
        DephasingKnobs {
            phase: kc * kc * self.s,
            decay_c: kc * kc * self.gamma_c,
            decay_l: cfg.kappa_l * cfg.kappa_l * self.gamma_l,
            p_n: self.p_n,
            tilde_p_n: self.tilde_p_n,
            free_phase1: free1,
            free_phase2: free2,
        }
    }
}

/// The combinations `ϰ²S`, `ϰ²Γ_c`, `ϰ_ℓ²Γ_ℓ`, `P_N`, `P̃_N`, `ω_j t` that fully
/// determine the evolved matrix. Setting them directly gives the abstract
/// parameter mode used for two spins (`S` and `Γ` as free knobs).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DephasingKnobs {
    pub phase: f64,
    pub decay_c: f64,
    pub decay_l: f64,
    pub p_n: Complex64,
    pub tilde_p_n: Complex64,
    pub free_phase1: f64,
    pub free_phase2: f64,
}

impl DephasingKnobs {
    /// Two spins, no decay, collective phase `ϰ²S = phase`.
    pub fn abstract_pair(phase: f64, decay: f64) -> Self {
        Self {
            phase,
            decay_c: decay,
            decay_l: decay,
            p_n: Complex64::new(1.0, 0.0),
            tilde_p_n: Complex64::new(1.0, 0.0),
            free_phase1: 0.0,
            free_phase2: 0.0,
        }
    }
}

/// Apply the exact coherence factors to `rho0`.
pub fn evolve_with_knobs(rho0: &TwoQubitDensity, k: &DephasingKnobs) -> Result<TwoQubitDensity> {
    let cis = |x: f64| Complex64::from_polar(1.0, x);
    let single = (-k.decay_l - k.decay_c).exp();
    let lamb = cis(k.phase);
    let (w1, w2) = (k.free_phase1, k.free_phase2);

    let mut factors = [[Complex64::new(1.0, 0.0); 4]; 4];
    factors[0][1] = cis(w2) * lamb * single * k.p_n;
    factors[0][2] = cis(w1) * lamb * single * k.p_n;
    factors[0][3] = cis(w1 + w2) * (-2.0 * k.decay_l - 4.0 * k.decay_c).exp() * k.tilde_p_n;
    factors[1][2] = cis(w1 - w2) * (-2.0 * k.decay_l).exp();
    factors[1][3] = cis(w1) * lamb.conj() * single * k.p_n;
    factors[2][3] = cis(w2) * lamb.conj() * single * k.p_n;

    let r0 = rho0.matrix();
    let mut m = *r0;
    for i in 0..4 {
        for j in (i + 1)..4 {
            m[(i, j)] = r0[(i, j)] * factors[i][j];
            m[(j, i)] = m[(i, j)].conj();
        }
    }
    check_hermitian_trace(&m, EVOLVE_CHECK_TOL, EVOLVE_CHECK_TOL)
        .map_err(|e| Error::Consistency(e.to_string()))?;
    Ok(TwoQubitDensity::from_checked_parts(m))
}

/// Evolve `rho0` to time `t`.
pub fn evolve(
    rho0: &TwoQubitDensity,
    t: f64,
    cfg: &CouplingConfig,
    ens: &EnsembleConfig,
    reservoirs: &Reservoirs,
    frame: Frame,
) -> Result<TwoQubitDensity> {
    cfg.validate()?;
    ens.validate_for(cfg)?;
    let funcs = ReservoirFunctions::new(reservoirs)?;
    let sample = DephasingSample::from_bath(funcs.sample(t)?, cfg, ens)?;
    evolve_with_knobs(rho0, &sample.knobs(cfg, ens, frame))
}

/// Limit `N → ∞` for `0 < η < 1/4`: only the `(2,3)` coherence survives, damped by the local bath.
pub fn limit_state_small_eta(
    t: f64,
    s1: &SpinInit,
    s2: &SpinInit,
    cfg: &CouplingConfig,
    reservoirs: &Reservoirs,
) -> Result<TwoQubitDensity> {
    let gamma_l = crate::bath::decay_gamma(t, &reservoirs.local)?;
    let damp = (-2.0 * cfg.kappa_l * cfg.kappa_l * gamma_l).exp();
    let (p1, p2) = (s1.p(), s2.p());
    let c = |x: f64| Complex64::new(x, 0.0);
    let mut m = Matrix4c::zeros();
    m[(0, 0)] = c(p1 * p2);
    m[(1, 1)] = c(p1 * (1.0 - p2));
    m[(2, 2)] = c((1.0 - p1) * p2);
    m[(3, 3)] = c((1.0 - p1) * (1.0 - p2));
    m[(1, 2)] = s1.v() * s2.v().conj() * damp;
    m[(2, 1)] = m[(1, 2)].conj();
    Ok(TwoQubitDensity::from_checked_parts(m))
}

/// `P_∞(t) = exp(−i ϰ_c² S(t) (1−2p) N^{1−2η})` (squared when `doubled`).
pub fn p_infinity(s: f64, cfg: &CouplingConfig, background_p: f64, doubled: bool) -> Complex64 {
    let mut k2 = cfg.kappa_c * cfg.kappa_c;
    if doubled {
        k2 *= 2.0;
    }
    let exponent = (cfg.n as f64).powf(1.0 - 2.0 * cfg.eta);
    Complex64::from_polar(1.0, -k2 * s * (1.0 - 2.0 * background_p) * exponent)
}

/// Limit `N → ∞` for `η > 1/4`: a product state with coherences `v_j D_ℓ P_∞`.
pub fn limit_state_large_eta(
    t: f64,
    s1: &SpinInit,
    s2: &SpinInit,
    cfg: &CouplingConfig,
    ens: &EnsembleConfig,
    reservoirs: &Reservoirs,
) -> Result<TwoQubitDensity> {
    if !(cfg.eta > 0.25) {
        return Err(Error::Precondition(format!("large-eta limit needs eta > 1/4, got {}", cfg.eta)));
    }
    let Background::Homogeneous(p) = ens.background else {
        return Err(Error::validation("ensemble", "large-eta limit needs a homogeneous background"));
    };
    let s = crate::bath::phase_s(t, &reservoirs.collective)?;
    let gamma_l = crate::bath::decay_gamma(t, &reservoirs.local)?;
    let d_l = (-cfg.kappa_l * cfg.kappa_l * gamma_l).exp();
    let p_inf = p_infinity(s, cfg, p, false);
    let dressed = |s: &SpinInit| SpinInit::new(s.p(), s.v() * d_l * p_inf);
    let m = initial_two_qubit(&dressed(s1)?, &dressed(s2)?);
    Ok(m)
}
