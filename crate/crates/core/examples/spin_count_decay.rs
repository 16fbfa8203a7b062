// Peak concurrence and collapse time against the number of spins, with
// exponential fits of both.
//
// Run: cargo run --release --example spin_count_decay

use dephasim::experiments::{fit_exponential, sweep_n, SweepTemplate};
use dephasim::{CouplingConfig, SpinInit};

pub fn run_example() -> dephasim::Result<()> {
    let spin = SpinInit::new(0.5, 0.48)?;
    let template = SweepTemplate::new(CouplingConfig::new(0.05, 0.0, 0.0, 2)?, spin, spin, 0.5)?;
    let ns: Vec<u64> = (2..=30).step_by(2).collect();
    let rows = sweep_n(&template, &ns)?;
    println!("{:>4} {:>14} {:>12} {:>12}", "N", "C_max", "tau_peak", "tau_c");
    for r in &rows {
        let tau_c = r.summary.collapse.tau().map_or("-".to_string(), |t| format!("{t:.6}"));
        println!(
            "{:>4} {:>14.6e} {:>12.6} {:>12}",
            r.n, r.summary.peak.c_max, r.summary.peak.tau, tau_c
        );
    }
    let c: Vec<_> = rows.iter().map(|r| (r.n as f64, r.summary.peak.c_max)).collect();
    let tau: Vec<_> = rows
        .iter()
        .filter_map(|r| r.summary.collapse.tau().map(|t| (r.n as f64, t)))
        .collect();
    for (name, pts) in [("C_max", &c), ("tau_c", &tau)] {
        match fit_exponential(pts) {
            Ok(f) => println!(
                "ln {name} ~ {:.4} N (± {:.4}), r² = {:.4}, {} points, {} excluded",
                f.slope,
                f.slope_stderr,
                f.r_squared,
                f.used,
                f.excluded.len()
            ),
            Err(e) => println!("ln {name}: {e}"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> dephasim::Result<()> {
    run_example()
}
