// Peak concurrence of a pair inside N = 40 spins over initial states with
// p_i = v_i, i.e. spins on the pure-state boundary.
//
// Run: cargo run --release --example initial_state_grid

use dephasim::experiments::{grid_pv, linspace, ConstraintMode, PvMode, SweepTemplate, TimeWindow};
use dephasim::{CouplingConfig, SpinInit};

pub fn run_example() -> dephasim::Result<()> {
    let spin = SpinInit::plus_x();
    let template = SweepTemplate::new(CouplingConfig::new(0.05, 0.0, 0.0, 40)?, spin, spin, 0.5)?.with_window(
        TimeWindow {
            tau_max: 1.0,
            min_steps: 1000,
        },
    );
    let axis = linspace(0.0, 0.5, 11);
    let grid = grid_pv(&axis, &axis, &PvMode::Dynamic(template), ConstraintMode::Exclude)?;
    print!("{:>7}", "p1\\p2");
    for p in &axis {
        print!("{p:>10.2}");
    }
    println!();
    for (i, p) in axis.iter().enumerate() {
        print!("{p:>7.2}");
        for pt in &grid.points[i * axis.len()..(i + 1) * axis.len()] {
            print!("{:>10.2e}", pt.value.unwrap_or(f64::NAN));
        }
        println!();
    }
    let best = grid.argmax().expect("grid has feasible points");
    println!("max C = {:.6e} at p1 = {}, p2 = {}", best.value.unwrap_or(0.0), best.x, best.y);
    Ok(())
}

#[allow(dead_code)]
fn main() -> dephasim::Result<()> {
    run_example()
}
