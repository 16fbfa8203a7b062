// Concurrence over initial states (p, v) at a fixed collective phase π/2
// and no decay; the optimum sits at p = v = 1/2.
//
// Run: cargo run --release --example pv_landscape

use std::f64::consts::FRAC_PI_2;

use dephasim::experiments::{grid_pv, linspace, ConstraintMode, PvMode};

pub fn run_example() -> dephasim::Result<()> {
    let ps = linspace(0.0, 1.0, 21);
    let vs = linspace(0.0, 0.5, 11);
    let mode = PvMode::Abstract {
        phase: FRAC_PI_2,
        decay: 0.0,
    };
    let grid = grid_pv(&ps, &vs, &mode, ConstraintMode::Exclude)?;
    print!("{:>6}", "p\\v");
    for v in &vs {
        print!("{v:>6.2}");
    }
    println!();
    for (i, p) in ps.iter().enumerate() {
        print!("{p:>6.2}");
        for pt in &grid.points[i * vs.len()..(i + 1) * vs.len()] {
            match pt.value {
                Some(c) => print!("{c:>6.3}"),
                None => print!("{:>6}", "-"),
            }
        }
        println!();
    }
    let best = grid.argmax().expect("grid has feasible points");
    println!("max C = {:.6} at p = {}, v = {}", best.value.unwrap_or(0.0), best.x, best.y);
    Ok(())
}

#[allow(dead_code)]
fn main() -> dephasim::Result<()> {
    run_example()
}
