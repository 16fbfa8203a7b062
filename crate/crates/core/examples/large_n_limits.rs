// Convergence of the pair state to its N → ∞ limits: the X-state for
// η < 1/4 and the product state for η > 1/4. Neither limit is entangled.
//
// Run: cargo run --release --example large_n_limits

use dephasim::entanglement::concurrence;
use dephasim::{
    evolve, limit_state_large_eta, limit_state_small_eta, CouplingConfig, EnsembleConfig, Frame, Reservoirs,
    SpinInit,
};

pub fn run_example() -> dephasim::Result<()> {
    let spin = SpinInit::new(0.5, 0.48)?;
    let ens = EnsembleConfig::homogeneous(0.5, spin, spin)?;
    let res = Reservoirs::default();
    let t = 1.0;
    for eta in [0.1, 0.5] {
        println!("eta = {eta}");
        for n in [100u64, 1_000, 10_000, 100_000, 1_000_000] {
            let cfg = CouplingConfig::new(1.0, 0.0, eta, n)?;
            let rho = evolve(&ens.initial_state(), t, &cfg, &ens, &res, Frame::Interaction)?;
            let limit = if eta < 0.25 {
                limit_state_small_eta(t, &spin, &spin, &cfg, &res)?
            } else {
                limit_state_large_eta(t, &spin, &spin, &cfg, &ens, &res)?
            };
            println!(
                "  N={n:>8}  distance {:.3e}  C(evolved) {:.3e}  C(limit) {}",
                rho.max_abs_diff(&limit),
                concurrence(&rho)?.value,
                concurrence(&limit)?.value
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> dephasim::Result<()> {
    run_example()
}
