//! Exact reduced two-qubit dynamics of `N` spins coupled by pure dephasing to
//! local and collective thermal bosonic baths.
//!
//! The crate is organised bottom-up:
//!
//! - [`bath`]: the phase `S(t)` and decay `Γ(t)` of the sharp-cutoff `√|k|` bath.
//! - [`state`] and [`dynamics`]: initial product states and the exact evolved
//!   4×4 density matrix, including the traced-out-spin factor `P_N` and the
//!   `N → ∞` limit states.
//! - [`entanglement`]: concurrence, the closed-form X-state concurrence and a
//!   partial-transpose witness.
//! - [`experiments`]: time series, peak and collapse extraction, sweeps over
//!   `N`, `ϰ_c`, `η` and initial states, and exponential fits.
//! - [`cli`]: argument/config parsing and deterministic CSV/JSON output.

pub mod bath;
pub mod cli;
pub mod dynamics;
pub mod entanglement;
pub mod error;
pub mod experiments;
pub mod quadrature;
pub mod state;

pub use bath::{decay_gamma, dephasing_grid, phase_s, BathConfig, Reservoirs};
pub use dynamics::{
    background_factor, evolve, limit_state_large_eta, limit_state_small_eta, CouplingConfig, EnsembleConfig, Frame,
};
pub use entanglement::{concurrence, ppt_negative, x_state_concurrence};
pub use error::{Error, Result};
pub use state::{initial_two_qubit, SpinInit, TwoQubitDensity};
