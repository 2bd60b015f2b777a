// The intermediate regime: each extra photon above the nonadiabatic path
// lengthens the delay and moves the exit point outwards, until the excess
// reaches the barrier height and the adiabatic delay is recovered.
//
// cargo run --example intermediate_regime

use tunneling_delay::barrier::{barrier_geometry, intermediate_exit_point};
use tunneling_delay::delays::{adiabatic_delay, intermediate_delay, nonadiabatic_delay, Excess};
use tunneling_delay::{AtomSpec, Error, PulseSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let he = AtomSpec::helium();
    let f = 0.06;
    let pulse = PulseSpec::attoclock(f, 0.062)?;
    let g = barrier_geometry(&he, f)?;
    let sym = nonadiabatic_delay(&he, &pulse)?;
    println!(
        "F = {f} au: delta_z = {:.5} au, nu_F = {}",
        g.delta_z,
        sym.photon_count.unwrap()
    );
    println!(
        "{:>4} {:>10} {:>10} {:>10}",
        "dnu", "tau [as]", "eta", "x_exit"
    );
    for n in 0.. {
        match intermediate_delay(&he, &pulse, Excess::Photons(n)) {
            Ok(d) => {
                let x = intermediate_exit_point(&he, f, d.delta_nu.unwrap())?;
                println!(
                    "{:>4} {:>10.3} {:>10.4} {:>10.4}",
                    n,
                    d.tau_as(),
                    d.enhancement,
                    x
                );
            }
            Err(Error::SaturationExceeded { .. }) => break,
            Err(e) => return Err(e.into()),
        }
    }
    let top = intermediate_delay(&he, &pulse, Excess::Energy(g.delta_z))?;
    let adiabatic = adiabatic_delay(&he, f)?;
    println!(
        "saturation at delta_eps = delta_z: {:.4} as (adiabatic {:.4} as), exit x_m + d_B/2 = {:.4} au vs x_e+ = {:.4} au",
        top.tau_as(),
        adiabatic.tau_as(),
        g.x_m + g.d_b / 2.0,
        g.x_e_plus
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
