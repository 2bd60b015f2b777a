// Moving between atomic units and laboratory units.
//
// cargo run --example unit_conversions

use tunneling_delay::barrier::atomic_field_strength;
use tunneling_delay::data::AngleClock;
use tunneling_delay::units::{
    au_time_to_attoseconds, field_to_intensity, wavelength_to_omega, CODATA,
};
use tunneling_delay::AtomSpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("1 au of time       = {} as", CODATA.au_time_in_attoseconds);
    println!("735 nm             = {:.5} au", wavelength_to_omega(735.0)?);
    println!(
        "F = 0.0534 au      = {:.3e} W/cm^2",
        field_to_intensity(0.0534)?
    );
    let fa = atomic_field_strength(&AtomSpec::helium());
    println!(
        "He appearance I_a  = {:.3e} W/cm^2 (F_a = {fa:.6} au)",
        field_to_intensity(fa)?
    );
    println!(
        "tau_a(He)          = {:.3} as",
        au_time_to_attoseconds(0.5 / 0.90357)
    );

    let clock = AngleClock::default();
    for theta in [1.0, 3.0, 10.0] {
        println!(
            "{theta:>4} deg offset  = {:.2} as",
            clock.delay_as(theta, 0.062)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
