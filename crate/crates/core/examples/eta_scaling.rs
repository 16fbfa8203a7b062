// Peak concurrence with the collective coupling scaled as ϰ_c / N^η.
//
// Run: cargo run --release --example eta_scaling

use dephasim::experiments::{fit_exponential, sweep_eta, SweepTemplate};
use dephasim::{CouplingConfig, SpinInit};

pub fn run_example() -> dephasim::Result<()> {
    let spin = SpinInit::new(0.5, 0.48)?;
    let template = SweepTemplate::new(CouplingConfig::new(0.2, 0.0, 0.0, 2)?, spin, spin, 0.5)?;
    let etas = [0.0, 0.1, 0.25, 0.3, 0.5];
    let ns: Vec<u64> = (4..=40).step_by(4).collect();
    let rows = sweep_eta(&template, &etas, &ns)?;
    for chunk in rows.chunk_by(|a, b| a.value == b.value) {
        let eta = chunk[0].value;
        let cs: Vec<String> = chunk.iter().map(|r| format!("{:.2e}", r.summary.peak.c_max)).collect();
        println!("eta={eta:<5} C_max: {}", cs.join(" "));
        let pts: Vec<_> = chunk.iter().map(|r| (r.n as f64, r.summary.peak.c_max)).collect();
        if let Ok(f) = fit_exponential(&pts) {
            println!("          slope {:.5} (r² {:.4})", f.slope, f.r_squared);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> dephasim::Result<()> {
    run_example()
}
