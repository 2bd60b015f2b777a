// Adiabatic, symmetrized (nonadiabatic) and Keldysh delays for helium with
// both effective charges, in attoseconds.
//
// cargo run --example delay_models

use tunneling_delay::delays::{
    adiabatic_delay, decompose_delay, keldysh_delay, nonadiabatic_delay, Term,
};
use tunneling_delay::{AtomSpec, PulseSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for atom in [AtomSpec::helium(), AtomSpec::helium_alt()] {
        println!("{} (Z_eff = {}):", atom.label(), atom.z_eff());
        println!(
            "{:>6} {:>10} {:>10} {:>10} {:>10} {:>10}",
            "F", "tau_T,d", "tau_dion", "tau_delt", "tau_sym", "tau_K"
        );
        for i in 0..9 {
            let f = 0.02 + 0.01 * i as f64;
            let pulse = PulseSpec::attoclock(f, 0.062)?;
            let Ok(adiabatic) = adiabatic_delay(&atom, f) else {
                println!("{f:>6.2}   above F_a");
                continue;
            };
            let parts = decompose_delay(&atom, f)?;
            let sym = nonadiabatic_delay(&atom, &pulse)?;
            let keldysh = keldysh_delay(&atom, f)?;
            let as_ = tunneling_delay::units::au_time_to_attoseconds;
            println!(
                "{:>6.2} {:>10.3} {:>10.3} {:>10.3} {:>10.3} {:>10.1}",
                f,
                adiabatic.tau_as(),
                as_(parts.component(Term::TauDion).unwrap()),
                as_(parts.component(Term::TauDelt).unwrap()),
                sym.tau_as(),
                keldysh.tau_as()
            );
        }
        println!();
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
