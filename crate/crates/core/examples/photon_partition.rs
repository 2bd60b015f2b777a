// How the ionization potential splits into a multiphoton share (the
// barrier height) and a scattering share, across the experimental field range.
//
// cargo run --example photon_partition

use tunneling_delay::delays::adiabatic_delay;
use tunneling_delay::photons::{energy_partition, photon_count_approx};
use tunneling_delay::{AtomSpec, PulseSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let he = AtomSpec::helium();
    println!(
        "{:>6} {:>8} {:>8} {:>4} {:>7} {:>8} {:>12}",
        "F", "eps_F", "delta_z", "n_F", "approx", "gap", "1/(2 dE)"
    );
    for i in 0..=10 {
        let f = 0.02 + 0.01 * i as f64;
        let pulse = PulseSpec::attoclock(f, 0.062)?;
        let Ok(p) = energy_partition(&he, &pulse) else {
            println!("{f:>6.2}   above F_a");
            continue;
        };
        let approx = photon_count_approx(&he, &pulse)?;
        // the energy uncertainty reading of the adiabatic delay
        let tau = 0.5 / p.delta_e_threshold;
        assert!((tau - adiabatic_delay(&he, f)?.tau_au).abs() < 1e-12 * tau);
        println!(
            "{:>6.2} {:>8.5} {:>8.5} {:>4} {:>7} {:>8.5} {:>12.5}",
            f, p.epsilon_f, p.delta_z, p.n_f, approx, p.residual_gap, tau
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
