// Offset angles from an attoclock run converted to delays, written to the
// dataset CSV format, read back, and scored against the models.
//
// The angles below are illustrative, not measured values.
//
// cargo run --example compare_dataset

use std::io::Write;

use tunneling_delay::data::{
    angle_to_delay, compare, load_dataset, CompareOptions, DatasetFormat, ModelKind, ModelSpec,
};
use tunneling_delay::AtomSpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let omega0 = 0.062;
    // (field au, offset angle deg, angle uncertainty deg)
    let runs = [
        (0.04, 6.10, 0.40),
        (0.05, 4.60, 0.40),
        (0.06, 4.00, 0.35),
        (0.07, 3.30, 0.35),
        (0.08, 3.00, 0.30),
        (0.13, 1.90, 0.30),
    ];

    let path = std::env::temp_dir().join(format!(
        "tunneling-delay-example-{}.csv",
        std::process::id()
    ));
    {
        let mut file = std::fs::File::create(&path)?;
        writeln!(
            file,
            "# converted from offset angles at omega0 = {omega0} au"
        )?;
        writeln!(file, "field_au,delay_as,err_minus_as,err_plus_as,source")?;
        for (f, theta, dtheta) in runs {
            let tau = angle_to_delay(theta, omega0)?;
            let err = angle_to_delay(dtheta, omega0)?;
            writeln!(file, "{f},{tau},{err},{err},example")?;
        }
    }
    let data = load_dataset(&path, DatasetFormat::Csv)?;
    std::fs::remove_file(&path)?;

    for (name, kind, atom) in [
        (
            "tau_sym, Z_eff=1.6875",
            ModelKind::Nonadiabatic,
            AtomSpec::helium(),
        ),
        (
            "tau_sym, Z_eff=1.344",
            ModelKind::Nonadiabatic,
            AtomSpec::helium_alt(),
        ),
        (
            "tau_T,d, Z_eff=1.6875",
            ModelKind::Adiabatic,
            AtomSpec::helium(),
        ),
        ("Keldysh time", ModelKind::Keldysh, AtomSpec::helium()),
    ] {
        let report = compare(
            &data,
            &ModelSpec::new(kind, atom, omega0),
            &CompareOptions::default(),
        )?;
        println!(
            "{name:<24} n={} rms={:>8.2} as chi2/n={:>9.2} coverage={:.2} excluded={}",
            report.n_points,
            report.weighted_rms_as,
            report.chi2_per_dof,
            report.coverage,
            report.excluded_bsi
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
