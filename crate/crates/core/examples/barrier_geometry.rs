// Geometry of the field-dressed Coulomb barrier for helium at a few fields,
// from weak field up to the atomic field strength where the barrier vanishes.
//
// cargo run --example barrier_geometry

use tunneling_delay::barrier::{atomic_field_strength, barrier_geometry, effective_potential};
use tunneling_delay::AtomSpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let he = AtomSpec::helium();
    let fa = atomic_field_strength(&he);
    println!(
        "{}: I_p = {} au, Z_eff = {}, F_a = {:.6} au",
        he.label(),
        he.ip(),
        he.z_eff(),
        fa
    );
    println!(
        "{:>8} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9}",
        "F", "delta_z", "x_e-", "x_m", "x_e+", "d_B", "x_C"
    );
    for f in [0.02, 0.04, 0.06, 0.08, 0.10, fa] {
        let g = barrier_geometry(&he, f)?;
        println!(
            "{:>8.5} {:>9.5} {:>9.4} {:>9.4} {:>9.4} {:>9.4} {:>9.4}",
            f, g.delta_z, g.x_e_minus, g.x_m, g.x_e_plus, g.d_b, g.x_c
        );
        // the exit point sits on the -I_p level
        let residual = effective_potential(&he, f, g.x_e_plus)? + he.ip();
        assert!(residual.abs() < 1e-12);
    }

    println!("\nV_eff along x at F = 0.06 au:");
    for i in 0..8 {
        let x = 1.0 + 2.5 * i as f64;
        println!(
            "  x = {:>5.1}  V_eff = {:>9.5}",
            x,
            effective_potential(&he, 0.06, x)?
        );
    }
    match barrier_geometry(&he, 0.15) {
        Err(e) => println!("\nF = 0.15 au: {e}"),
        Ok(_) => unreachable!("0.15 au is above F_a for helium"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
