// Peak concurrence and its timing for several collective couplings. In the
// rescaled time τ = ϰ_c² ν_c t the N = 2 peaks line up; the amplitude drops
// as the bath decay grows with ϰ_c.
//
// Run: cargo run --release --example coupling_rescaling

use dephasim::experiments::{sweep_kappa, SweepTemplate, TimeWindow};
use dephasim::{CouplingConfig, SpinInit};

pub fn run_example() -> dephasim::Result<()> {
    let spin = SpinInit::new(0.5, 0.48)?;
    let template = SweepTemplate::new(CouplingConfig::new(0.05, 0.0, 0.0, 2)?, spin, spin, 0.5)?.with_window(
        TimeWindow {
            tau_max: 1.0,
            min_steps: 2000,
        },
    );
    let rows = sweep_kappa(&template, &[0.04, 0.1, 0.2, 0.4], &[2, 4])?;
    println!("{:>8} {:>4} {:>12} {:>12}", "kappa_c", "N", "C_max", "tau_peak");
    for r in &rows {
        println!(
            "{:>8} {:>4} {:>12.6} {:>12.6}",
            r.value, r.n, r.summary.peak.c_max, r.summary.peak.tau
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> dephasim::Result<()> {
    run_example()
}
