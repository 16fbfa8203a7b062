// Concurrence of textbook states and of a dephased pair.
//
// Run: cargo run --example concurrence_basics

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2};

use dephasim::dynamics::{evolve_with_knobs, DephasingKnobs};
use dephasim::entanglement::concurrence;
use dephasim::state::Matrix4c;
use dephasim::{initial_two_qubit, ppt_negative, SpinInit, TwoQubitDensity};
use num_complex::Complex64;

pub fn run_example() -> dephasim::Result<()> {
    let a = Complex64::new(FRAC_1_SQRT_2, 0.0);
    let z = Complex64::new(0.0, 0.0);
    let bell = TwoQubitDensity::pure([a, z, z, a])?;
    println!("Bell state: C = {:.12}", concurrence(&bell)?.value);

    let singlet = TwoQubitDensity::pure([z, a, -a, z])?;
    println!("Werner states p|singlet><singlet| + (1-p) I/4:");
    for p in [0.2, 1.0 / 3.0, 0.5, 0.8, 1.0] {
        let m: Matrix4c = singlet.matrix().scale(p) + Matrix4c::identity().scale((1.0 - p) / 4.0);
        let rho = TwoQubitDensity::new(m)?;
        println!(
            "  p={p:.3}  C={:.6}  PPT-negative={}",
            concurrence(&rho)?.value,
            ppt_negative(&rho)?
        );
    }

    // Two spins along +x under a collective phase ϰ²S = π/2 become a Bell pair
    // up to local rotations; mixing in the populations lowers the result.
    for (p, v) in [(0.5, 0.5), (0.5, 0.48), (0.3, 0.4), (0.2, 0.2)] {
        let spin = SpinInit::new(p, v)?;
        let rho = evolve_with_knobs(
            &initial_two_qubit(&spin, &spin),
            &DephasingKnobs::abstract_pair(FRAC_PI_2, 0.0),
        )?;
        println!("pair p={p} v={v}: C = {:.6}", concurrence(&rho)?.value);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> dephasim::Result<()> {
    run_example()
}
