// Phase S(t) and decay Γ(t) of the sharp-cutoff bath.
//
// Run: cargo run --example bath_functions

use dephasim::bath::BathFunctions;
use dephasim::{dephasing_grid, BathConfig};

pub fn run_example() -> dephasim::Result<()> {
    for (epsilon, theta) in [(1.0, 1.0), (2.0, 0.5), (1.0, 0.1)] {
        let cfg = BathConfig::new(epsilon, theta)?;
        let funcs = BathFunctions::new(&cfg)?;
        println!(
            "epsilon={epsilon} theta={theta}: k_c={:.3} nu_c={:.4} Gamma(inf)={:.6}",
            cfg.k_c(),
            cfg.nu_c(),
            funcs.gamma_saturation()
        );
        let times: Vec<f64> = (0..=6).map(|k| 10f64.powi(k - 2)).collect();
        println!("  {:>10} {:>16} {:>16}", "t", "S(t)", "Gamma(t)");
        for p in dephasing_grid(&times, &cfg)? {
            println!("  {:>10.2e} {:>16.8e} {:>16.8e}", p.t, p.s, p.gamma);
        }
        // S grows linearly at late times with slope −2π k_c³/3.
        let kc = cfg.k_c();
        let slope = (funcs.phase(2e4)? - funcs.phase(1e4)?) / 1e4;
        println!("  late slope {slope:.8e} vs {:.8e}", -2.0 * std::f64::consts::PI * kc.powi(3) / 3.0);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> dephasim::Result<()> {
    run_example()
}
