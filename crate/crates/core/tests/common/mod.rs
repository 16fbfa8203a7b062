//! Random parameter generators shared by the integration tests.
#![allow(dead_code)]

use dephasim::dynamics::{Background, Frame};
use dephasim::{evolve, BathConfig, CouplingConfig, EnsembleConfig, Reservoirs, SpinInit, TwoQubitDensity};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A valid spin state with a complex coherence anywhere in the allowed disc.
pub fn random_spin(rng: &mut impl Rng) -> SpinInit {
    let p: f64 = rng.random_range(0.0..=1.0);
    let r = SpinInit::max_coherence(p) * rng.random_range(0.0f64..=1.0).sqrt();
    let phi = rng.random_range(0.0..std::f64::consts::TAU);
    SpinInit::new(p, Complex64::from_polar(r, phi)).expect("sampled inside the allowed disc")
}

/// Everything needed for one `evolve` call.
#[derive(Debug, Clone)]
pub struct EvolveCase {
    pub cfg: CouplingConfig,
    pub ens: EnsembleConfig,
    pub reservoirs: Reservoirs,
    pub t: f64,
}

impl EvolveCase {
    pub fn evolve(&self, frame: Frame) -> TwoQubitDensity {
        evolve(&self.ens.initial_state(), self.t, &self.cfg, &self.ens, &self.reservoirs, frame)
            .expect("random case evolves")
    }
}

pub fn random_case(rng: &mut impl Rng) -> EvolveCase {
    let n = if rng.random_bool(0.3) { 2 } else { rng.random_range(3..60) };
    let cfg = CouplingConfig::new(
        rng.random_range(0.0..1.0),
        if rng.random_bool(0.5) { 0.0 } else { rng.random_range(0.0..0.5) },
        if rng.random_bool(0.5) { 0.0 } else { rng.random_range(0.0..0.7) },
        n,
    )
    .unwrap();
    let background = if rng.random_bool(0.5) {
        Background::Homogeneous(rng.random_range(0.0..=1.0))
    } else {
        Background::Explicit((0..n - 2).map(|_| rng.random_range(0.0..=1.0)).collect())
    };
    let ens = EnsembleConfig {
        background,
        spin1: random_spin(rng),
        spin2: random_spin(rng),
        omega1: rng.random_range(-5.0..5.0),
        omega2: rng.random_range(-5.0..5.0),
    };
    let bath = BathConfig::new(rng.random_range(0.5..4.0), rng.random_range(0.2..3.0)).unwrap();
    EvolveCase {
        cfg,
        ens,
        reservoirs: Reservoirs::shared(bath),
        t: rng.random_range(0.0..40.0),
    }
}

pub fn random_evolved(rng: &mut impl Rng) -> TwoQubitDensity {
    random_case(rng).evolve(Frame::Interaction)
}
