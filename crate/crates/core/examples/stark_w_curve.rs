// The W-shaped curve: the symmetrized delay evaluated with the
// ponderomotively shifted ionization potential I_p + (F/2ω0)².
//
// cargo run --example stark_w_curve

use tunneling_delay::data::{linear_grid, sweep, ModelKind, ModelSpec, RowStatus};
use tunneling_delay::AtomSpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let plain = ModelSpec::new(ModelKind::Nonadiabatic, AtomSpec::helium(), 0.062);
    let shifted = plain.clone().with_stark(true);
    let grid = linear_grid(0.02, 0.16, 15)?;
    let a = sweep(&plain, &grid);
    let b = sweep(&shifted, &grid);
    println!("{:>6} {:>12} {:>12}", "F", "tau_sym", "tau_sym+shift");
    for (ra, rb) in a.iter().zip(&b) {
        let show = |r: &tunneling_delay::data::SweepRow| match (r.status.clone(), r.tau_as) {
            (RowStatus::Bsi, _) | (_, None) => "BSI".to_string(),
            (_, Some(t)) => format!("{t:.3}"),
        };
        println!("{:>6.3} {:>12} {:>12}", ra.field, show(ra), show(rb));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
