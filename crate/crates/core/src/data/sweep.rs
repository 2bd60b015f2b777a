use std::fmt;
use std::io::{self, Write};

use serde::Serialize;

use super::model::ModelSpec;
use crate::barrier::{barrier_geometry, keldysh_at, photon_assisted_exit_point};
use crate::error::{Error, Result};
use crate::format::g9;
use crate::photons::photon_floor;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RowStatus {
    Ok,
    /// Intermediate excess capped at the barrier height.
    Saturated,
    /// Field above `F_a`: no barrier.
    Bsi,
    /// Field not usable at all (non-positive, NaN, ...).
    Invalid,
}

impl fmt::Display for RowStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RowStatus::Ok => "ok",
            RowStatus::Saturated => "saturated",
            RowStatus::Bsi => "bsi",
            RowStatus::Invalid => "invalid",
        })
    }
}

/// One field value of a sweep. Quantities that do not exist at this field
/// (no barrier above `F_a`) are `None`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub field: f64,
    pub tau_au: Option<f64>,
    pub tau_as: Option<f64>,
    pub delta_z: Option<f64>,
    pub n_f: Option<u32>,
    pub gamma_k: Option<f64>,
    pub x_m: Option<f64>,
    pub x_e_plus: Option<f64>,
    /// Photon-assisted exit point `I_p/(2F)`.
    pub x_exit: Option<f64>,
    pub status: RowStatus,
}

impl SweepRow {
    fn invalid(field: f64) -> Self {
        SweepRow {
            field,
            tau_au: None,
            tau_as: None,
            delta_z: None,
            n_f: None,
            gamma_k: None,
            x_m: None,
            x_e_plus: None,
            x_exit: None,
            status: RowStatus::Invalid,
        }
    }
}

pub const SWEEP_HEADER: &str =
    "field_au,tau_au,tau_as,delta_z_au,n_f,gamma_k,x_m_au,x_e_plus_au,x_E_au,status";

/// `steps` evenly spaced fields from `fmin` to `fmax`, both included.
pub fn linear_grid(fmin: f64, fmax: f64, steps: usize) -> Result<Vec<f64>> {
    if !(fmin > 0.0 && fmin <= fmax && fmax.is_finite()) {
        return Err(Error::domain(format!(
            "field grid needs 0 < fmin <= fmax, got {fmin}..{fmax}"
        )));
    }
    match steps {
        0 => Err(Error::domain("field grid needs at least one step")),
        1 => Ok(vec![fmin]),
        n => {
            let h = (fmax - fmin) / (n - 1) as f64;
            let mut grid: Vec<f64> = (0..n).map(|i| fmin + i as f64 * h).collect();
            grid[n - 1] = fmax;
            Ok(grid)
        }
    }
}

fn sweep_row(model: &ModelSpec, field: f64) -> SweepRow {
    let Ok(atom) = model.effective_atom(field) else {
        return SweepRow::invalid(field);
    };
    let Ok(keldysh) = keldysh_at(&atom, field, model.omega0) else {
        return SweepRow::invalid(field);
    };
    let mut row = SweepRow {
        field,
        gamma_k: Some(keldysh.gamma_k),
        x_m: Some((atom.z_eff() / field).sqrt()),
        x_exit: photon_assisted_exit_point(&atom, field).ok(),
        ..SweepRow::invalid(field)
    };
    let geometry = barrier_geometry(&atom, field);
    row.status = match &geometry {
        Ok(g) => {
            row.delta_z = Some(g.delta_z);
            row.n_f = Some(photon_floor(g.delta_z, model.omega0).0);
            row.x_e_plus = Some(g.x_e_plus);
            RowStatus::Ok
        }
        Err(Error::BarrierSuppressed { .. }) => RowStatus::Bsi,
        Err(_) => RowStatus::Invalid,
    };
    if let Ok(point) = model.evaluate(field) {
        row.tau_au = Some(point.delay.tau_au);
        row.tau_as = Some(point.delay.tau_as());
        if point.saturated {
            row.status = RowStatus::Saturated;
        }
    }
    row
}

/// Evaluates `model` over `grid`, one row per field in input order. Never
/// fails: problems are reported in each row's status.
pub fn sweep(model: &ModelSpec, grid: &[f64]) -> Vec<SweepRow> {
    grid.iter().map(|&f| sweep_row(model, f)).collect()
}

fn opt(x: Option<f64>) -> String {
    x.map(g9).unwrap_or_default()
}

/// Writes the sweep table as CSV with nine significant digits.
pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], mut out: W) -> io::Result<()> {
    writeln!(out, "{SWEEP_HEADER}")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            g9(r.field),
            opt(r.tau_au),
            opt(r.tau_as),
            opt(r.delta_z),
            r.n_f.map(|n| n.to_string()).unwrap_or_default(),
            opt(r.gamma_k),
            opt(r.x_m),
            opt(r.x_e_plus),
            opt(r.x_exit),
            r.status
        )?;
    }
    Ok(())
}
