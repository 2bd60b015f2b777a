use std::fmt;
use std::str::FromStr;

use crate::barrier::{delta_z, AtomSpec, PulseSpec};
use crate::delays::{
    adiabatic_delay, intermediate_delay, keldysh_delay, nonadiabatic_delay, stark_shift,
    DelayResult, Excess,
};
use crate::error::{Error, Result};

/// Which delay formula a curve follows.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModelKind {
    /// `τ_{T,d}`.
    Adiabatic,
    /// `τ_sym`.
    Nonadiabatic,
    /// `τ_tion` with a fixed excess.
    Intermediate(Excess),
    /// `τ_K`.
    Keldysh,
}

impl ModelKind {
    pub fn name(&self) -> &'static str {
        match self {
            ModelKind::Adiabatic => "adiabatic",
            ModelKind::Nonadiabatic => "nonadiabatic",
            ModelKind::Intermediate(_) => "intermediate",
            ModelKind::Keldysh => "keldysh",
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parses a model name; `intermediate` starts with zero excess.
impl FromStr for ModelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "adiabatic" => Ok(ModelKind::Adiabatic),
            "nonadiabatic" | "sym" => Ok(ModelKind::Nonadiabatic),
            "intermediate" => Ok(ModelKind::Intermediate(Excess::Photons(0))),
            "keldysh" => Ok(ModelKind::Keldysh),
            other => Err(Error::domain(format!("unknown model `{other}`"))),
        }
    }
}

/// A delay curve: formula, target, laser frequency and whether the
/// ponderomotive shift `I_p → I_p + (F/2ω_0)²` is applied at each field.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelSpec {
    pub kind: ModelKind,
    pub atom: AtomSpec,
    pub omega0: f64,
    pub stark: bool,
}

/// One evaluated point of a curve.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelPoint {
    /// The atom actually used, after the optional Stark shift.
    pub atom: AtomSpec,
    pub pulse: PulseSpec,
    pub delay: DelayResult,
    /// The intermediate excess was capped at `δ_z`.
    pub saturated: bool,
}

impl ModelSpec {
    pub fn new(kind: ModelKind, atom: AtomSpec, omega0: f64) -> Self {
        ModelSpec {
            kind,
            atom,
            omega0,
            stark: false,
        }
    }

    pub fn with_stark(mut self, stark: bool) -> Self {
        self.stark = stark;
        self
    }

    /// Atom seen at `field`.
    pub fn effective_atom(&self, field: f64) -> Result<AtomSpec> {
        if self.stark {
            self.atom
                .with_ip(self.atom.ip() + stark_shift(field, self.omega0)?)
        } else {
            Ok(self.atom.clone())
        }
    }

    /// Evaluates the curve at `field`. An intermediate excess above the
    /// barrier height saturates at `δ_z` (the adiabatic value) instead of
    /// failing.
    pub fn evaluate(&self, field: f64) -> Result<ModelPoint> {
        let atom = self.effective_atom(field)?;
        let pulse = PulseSpec::attoclock(field, self.omega0)?;
        let mut saturated = false;
        let delay = match self.kind {
            ModelKind::Adiabatic => adiabatic_delay(&atom, field)?,
            ModelKind::Nonadiabatic => nonadiabatic_delay(&atom, &pulse)?,
            ModelKind::Keldysh => keldysh_delay(&atom, field)?,
            ModelKind::Intermediate(excess) => {
                let dz = delta_z(&atom, field)?;
                let eps = excess.energy(self.omega0);
                if eps > dz {
                    saturated = true;
                    intermediate_delay(&atom, &pulse, Excess::Energy(dz))?
                } else {
                    intermediate_delay(&atom, &pulse, excess)?
                }
            }
        };
        Ok(ModelPoint {
            atom,
            pulse,
            delay,
            saturated,
        })
    }

    /// Model delay in attoseconds at `field`.
    pub fn tau_as(&self, field: f64) -> Result<f64> {
        self.evaluate(field).map(|p| p.delay.tau_as())
    }
}
