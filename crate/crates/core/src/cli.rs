//! Command-line front end: `potential`, `sweep`, `compare` and `convert`.
//!
//! Exit codes: 0 success, 2 usage, 3 model-domain error (BSI and friends),
//! 4 I/O or parse error. Data goes to stdout, diagnostics to stderr.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::barrier::{
    atomic_field_strength, barrier_geometry, coulomb_potential, effective_potential, AtomSpec,
    BarrierGeometry,
};
use crate::data::{
    angle_to_delay, compare, linear_grid, load_dataset, sweep, write_sweep_csv, CompareOptions,
    DatasetFormat, ModelKind, ModelSpec,
};
use crate::delays::Excess;
use crate::error::Error;
use crate::format::g9;
use crate::units::CODATA;

/// Central frequency used when a command needs one and none is given (≈735 nm).
pub const DEFAULT_OMEGA0: f64 = 0.062;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MODEL: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "tunneling-delay",
    version,
    about = "Attoclock time-delay models"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample the Coulomb and field-dressed potentials along the field axis.
    Potential(PotentialArgs),
    /// Evaluate a delay model on a linear field grid.
    Sweep(SweepArgs),
    /// Compare a measured dataset with a delay model.
    Compare(CompareArgs),
    /// Convert a single value out of atomic units.
    Convert(ConvertArgs),
}

/// A field strength in au, or `fa` for the atomic field strength of the atom.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FieldArg {
    Value(f64),
    AtomicField,
}

impl FromStr for FieldArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.eq_ignore_ascii_case("fa") {
            return Ok(FieldArg::AtomicField);
        }
        s.parse::<f64>()
            .map(FieldArg::Value)
            .map_err(|_| format!("`{s}` is neither a number nor `fa`"))
    }
}

impl FieldArg {
    fn resolve(self, atom: &AtomSpec) -> f64 {
        match self {
            FieldArg::Value(v) => v,
            FieldArg::AtomicField => atomic_field_strength(atom),
        }
    }
}

#[derive(Debug, Args)]
pub struct AtomArgs {
    /// Preset target: He, He-alt or H.
    #[arg(long, default_value = "He")]
    pub atom: String,
    /// Override the ionization potential (au).
    #[arg(long)]
    pub ip: Option<f64>,
    /// Override the effective nuclear charge.
    #[arg(long)]
    pub zeff: Option<f64>,
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    /// adiabatic, nonadiabatic, intermediate or keldysh.
    #[arg(long)]
    pub model: ModelKind,
    /// Central circular frequency in au.
    #[arg(long)]
    pub omega0: Option<f64>,
    /// Extra photons above the nonadiabatic path (intermediate model).
    #[arg(long, conflicts_with = "delta_eps")]
    pub delta_nu: Option<u32>,
    /// Extra energy in au above the nonadiabatic path (intermediate model).
    #[arg(long)]
    pub delta_eps: Option<f64>,
    /// Apply the ponderomotive shift I_p -> I_p + (F/2ω0)².
    #[arg(long)]
    pub stark: bool,
}

#[derive(Debug, Args)]
pub struct PotentialArgs {
    #[command(flatten)]
    pub atom: AtomArgs,
    /// Peak field in au (or `fa`).
    #[arg(long)]
    pub field: FieldArg,
    #[arg(long)]
    pub xmin: f64,
    #[arg(long)]
    pub xmax: f64,
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TimeUnit {
    As,
    Au,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub atom: AtomArgs,
    #[command(flatten)]
    pub model: ModelArgs,
    /// Lowest field in au (or `fa`).
    #[arg(long)]
    pub fmin: FieldArg,
    /// Highest field in au (or `fa`).
    #[arg(long)]
    pub fmax: FieldArg,
    #[arg(long, default_value_t = 50)]
    pub steps: usize,
    /// Emit only `field_au` and the delay in this unit instead of the full table.
    #[arg(long, value_enum)]
    pub unit: Option<TimeUnit>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub atom: AtomArgs,
    #[command(flatten)]
    pub model: ModelArgs,
    /// Dataset CSV (field_au,delay_as,err_minus_as,err_plus_as,source).
    #[arg(long)]
    pub data: PathBuf,
    /// Minimum uncertainty used for weighting, in attoseconds.
    #[arg(long, default_value_t = 0.5)]
    pub sigma_floor: f64,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("conversion").required(true).multiple(false)
    .args(["angle", "au_time", "field", "wavelength"])))]
pub struct ConvertArgs {
    /// Attoclock offset angle in degrees -> delay in attoseconds.
    #[arg(long, allow_hyphen_values = true)]
    pub angle: Option<f64>,
    /// Central frequency for --angle, in au.
    #[arg(long, requires = "angle")]
    pub omega0: Option<f64>,
    /// Time in au -> attoseconds.
    #[arg(long, allow_hyphen_values = true)]
    pub au_time: Option<f64>,
    /// Field in au -> intensity in W/cm².
    #[arg(long, allow_hyphen_values = true)]
    pub field: Option<f64>,
    /// Wavelength in nm -> circular frequency in au.
    #[arg(long)]
    pub wavelength: Option<f64>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Model(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_model_error() {
            Failure::Model(e)
        } else {
            Failure::Io(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn resolve_atom(args: &AtomArgs) -> Result<AtomSpec, Failure> {
    let mut atom = AtomSpec::preset(&args.atom).ok_or_else(|| {
        Failure::Usage(format!(
            "unknown atom preset `{}` (He, He-alt, H)",
            args.atom
        ))
    })?;
    if let Some(ip) = args.ip {
        atom = atom
            .with_ip(ip)
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    if let Some(z) = args.zeff {
        atom = atom
            .with_z_eff(z)
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    Ok(atom)
}

fn omega0_or_default(omega0: Option<f64>, err: &mut dyn Write) -> Result<f64, Failure> {
    match omega0 {
        Some(w) if w > 0.0 && w.is_finite() => Ok(w),
        Some(w) => Err(Failure::Usage(format!(
            "--omega0 must be positive, got {w}"
        ))),
        None => {
            writeln!(err, "note: --omega0 not given, using {DEFAULT_OMEGA0} au")?;
            Ok(DEFAULT_OMEGA0)
        }
    }
}

fn resolve_model(
    atom: AtomSpec,
    args: &ModelArgs,
    err: &mut dyn Write,
) -> Result<ModelSpec, Failure> {
    let omega0 = omega0_or_default(args.omega0, err)?;
    let excess = match (args.delta_nu, args.delta_eps) {
        (Some(n), _) => Some(Excess::Photons(n)),
        (None, Some(e)) if e >= 0.0 => Some(Excess::Energy(e)),
        (None, Some(e)) => {
            return Err(Failure::Usage(format!(
                "--delta-eps must be non-negative, got {e}"
            )))
        }
        (None, None) => None,
    };
    let kind = match (args.model, excess) {
        (ModelKind::Intermediate(_), Some(x)) => ModelKind::Intermediate(x),
        (kind, None) => kind,
        (kind, Some(_)) => {
            return Err(Failure::Usage(format!(
                "--delta-nu/--delta-eps only apply to the intermediate model, not `{kind}`"
            )))
        }
    };
    Ok(ModelSpec::new(kind, atom, omega0).with_stark(args.stark))
}

#[derive(Serialize)]
struct PotentialHeader<'a> {
    atom: &'a AtomSpec,
    geometry: BarrierGeometry,
}

fn cmd_potential(args: &PotentialArgs, out: &mut dyn Write) -> CmdResult {
    let atom = resolve_atom(&args.atom)?;
    if !(args.xmin > 0.0 && args.xmin < args.xmax && args.xmax.is_finite()) {
        return Err(Failure::Usage(format!(
            "need 0 < xmin < xmax, got {} and {}",
            args.xmin, args.xmax
        )));
    }
    if args.samples < 2 {
        return Err(Failure::Usage("--samples must be at least 2".into()));
    }
    let field = args.field.resolve(&atom);
    let geometry = barrier_geometry(&atom, field)?;
    let header = serde_json::to_string(&PotentialHeader {
        atom: &atom,
        geometry,
    })
    .map_err(|e| Failure::Io(e.to_string()))?;
    writeln!(out, "# {header}")?;
    writeln!(out, "x_au,v_au,v_eff_au")?;
    let h = (args.xmax - args.xmin) / (args.samples - 1) as f64;
    for i in 0..args.samples {
        let x = if i + 1 == args.samples {
            args.xmax
        } else {
            args.xmin + i as f64 * h
        };
        let v = coulomb_potential(&atom, x)?;
        let v_eff = effective_potential(&atom, field, x)?;
        writeln!(out, "{},{},{}", g9(x), g9(v), g9(v_eff))?;
    }
    Ok(())
}

fn cmd_sweep(args: &SweepArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let atom = resolve_atom(&args.atom)?;
    let fmin = args.fmin.resolve(&atom);
    let fmax = args.fmax.resolve(&atom);
    let grid = linear_grid(fmin, fmax, args.steps).map_err(|e| Failure::Usage(e.to_string()))?;
    let model = resolve_model(atom, &args.model, err)?;
    let rows = sweep(&model, &grid);
    match args.unit {
        None => write_sweep_csv(&rows, &mut *out)?,
        Some(unit) => {
            let (name, pick): (&str, fn(&crate::data::SweepRow) -> Option<f64>) = match unit {
                TimeUnit::As => ("tau_as", |r| r.tau_as),
                TimeUnit::Au => ("tau_au", |r| r.tau_au),
            };
            writeln!(out, "field_au,{name}")?;
            for r in &rows {
                writeln!(
                    out,
                    "{},{}",
                    g9(r.field),
                    pick(r).map(g9).unwrap_or_default()
                )?;
            }
        }
    }
    let flagged = rows.iter().filter(|r| r.status.to_string() != "ok").count();
    if flagged > 0 {
        writeln!(
            err,
            "note: {flagged} of {} rows flagged (see status column)",
            rows.len()
        )?;
    }
    Ok(())
}

fn cmd_compare(args: &CompareArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let atom = resolve_atom(&args.atom)?;
    let model = resolve_model(atom, &args.model, err)?;
    let data = load_dataset(&args.data, DatasetFormat::Csv)?;
    let opts = CompareOptions {
        sigma_floor_as: args.sigma_floor,
    };
    let report = compare(&data, &model, &opts)?;
    let json = serde_json::to_string_pretty(&report).map_err(|e| Failure::Io(e.to_string()))?;
    writeln!(out, "{json}")?;
    Ok(())
}

fn cmd_convert(args: &ConvertArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    if let Some(theta) = args.angle {
        let omega0 = omega0_or_default(args.omega0, err)?;
        writeln!(out, "{} as", g9(angle_to_delay(theta, omega0)?))?;
    } else if let Some(t) = args.au_time {
        writeln!(out, "{} as", g9(CODATA.au_time_to_attoseconds(t)))?;
    } else if let Some(f) = args.field {
        writeln!(out, "{} W/cm^2", g9(CODATA.field_to_intensity(f)?))?;
    } else if let Some(lambda) = args.wavelength {
        writeln!(out, "{} au", g9(CODATA.wavelength_to_omega(lambda)?))?;
    }
    Ok(())
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match &cli.command {
        Command::Potential(a) => cmd_potential(a, out),
        Command::Sweep(a) => cmd_sweep(a, out, err),
        Command::Compare(a) => cmd_compare(a, out, err),
        Command::Convert(a) => cmd_convert(a, out, err),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Model(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_MODEL
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_IO
        }
    }
}
