//! Closed-form ionization time delays.
//!
//! All delays are measured relative to ionization at the atomic field
//! strength, where the lower quantum limit `τ_a = 1/(2 I_p)` is reached.
//!
//! | model         | delay                                  |
//! |---------------|----------------------------------------|
//! | adiabatic     | `τ_{T,d} = 1/(2(I_p - δ_z))`            |
//! | nonadiabatic  | `τ_sym = τ_a F_a/F = τ_tot/2`           |
//! | intermediate  | `τ_a (F_a/F)(1 + Δε/I_p)`               |
//! | keldysh       | `τ_a F_a^K/F = sqrt(2 I_p)/F`           |
//!
//! Delays that overflow as `F → 0⁺` come back as `+inf`, never NaN.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::barrier::{atomic_field_strength, delta_z, AtomSpec, PulseSpec};
use crate::error::{Error, Result};
use crate::photons::photon_floor;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Adiabatic,
    Nonadiabatic,
    Intermediate,
    Keldysh,
}

/// Named terms of a delay decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Term {
    /// Time to reach the entrance point, `1/(2(I_p + δ_z))`.
    TauTI,
    /// Barrier delay, `1/(2(I_p - δ_z))`.
    TauTD,
    TauTot,
    /// Quantum limit `1/(2 I_p)`.
    TauA,
    /// Field-ionization part `τ_a F_a/F`.
    TauDion,
    /// Barrier part `τ_a (F_a/F)(δ_z/I_p)`.
    TauDelt,
    /// Tunneling addition of the intermediate regime.
    DeltaTauDelt,
}

/// A delay in atomic units together with how it was assembled.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DelayResult {
    pub tau_au: f64,
    pub regime: Regime,
    pub components: BTreeMap<Term, f64>,
    /// Dimensionless factor multiplying `τ_a` (`χ`, `ζ_F`, `η`, or `F_a^K/F`).
    pub enhancement: f64,
    /// Excess energy `Δε` in au (intermediate regime only).
    pub delta_nu: Option<f64>,
    /// `ν_F = floor(δ_z/ω_0)` (nonadiabatic regime only).
    pub photon_count: Option<u32>,
    /// `δE = δ_z - ν_F ω_0` (nonadiabatic regime only).
    pub residual_gap: Option<f64>,
}

impl DelayResult {
    fn new(tau_au: f64, regime: Regime, tau_a: f64) -> Self {
        let mut components = BTreeMap::new();
        components.insert(Term::TauA, tau_a);
        DelayResult {
            tau_au,
            regime,
            components,
            enhancement: tau_au / tau_a,
            delta_nu: None,
            photon_count: None,
            residual_gap: None,
        }
    }

    fn with(mut self, term: Term, value: f64) -> Self {
        self.components.insert(term, value);
        self
    }

    pub fn component(&self, term: Term) -> Option<f64> {
        self.components.get(&term).copied()
    }

    pub fn tau_as(&self) -> f64 {
        crate::units::au_time_to_attoseconds(self.tau_au)
    }

    /// True when the delay diverged (`F → 0⁺`).
    pub fn is_unbounded(&self) -> bool {
        self.tau_au == f64::INFINITY
    }
}

/// `τ_a = 1/(2 I_p)`.
pub fn quantum_limit(atom: &AtomSpec) -> f64 {
    0.5 / atom.ip()
}

/// `ζ_F = F_a/F`.
pub fn field_enhancement(atom: &AtomSpec, field: f64) -> Result<f64> {
    delta_z(atom, field)?;
    Ok(atomic_field_strength(atom) / field)
}

/// `1/(8 Z_eff F)`; every delay in the model is an energy times this factor.
fn inverse_scale(atom: &AtomSpec, field: f64) -> f64 {
    1.0 / (8.0 * atom.z_eff() * field)
}

fn unbounded_to_inf(x: f64) -> f64 {
    if x.is_nan() {
        f64::INFINITY
    } else {
        x
    }
}

/// Adiabatic barrier delay `τ_{T,d}` with its companion `τ_{T,i}` and total.
pub fn adiabatic_delay(atom: &AtomSpec, field: f64) -> Result<DelayResult> {
    let dz = delta_z(atom, field)?;
    let ip = atom.ip();
    let k = inverse_scale(atom, field);
    // 1/(2(ip - dz)) = (ip + dz)/(8 Z F)
    let tau_t_d = unbounded_to_inf((ip + dz) * k);
    let tau_t_i = 0.5 / (ip + dz);
    let tau_tot = unbounded_to_inf(2.0 * ip * k);
    Ok(
        DelayResult::new(tau_t_d, Regime::Adiabatic, quantum_limit(atom))
            .with(Term::TauTD, tau_t_d)
            .with(Term::TauTI, tau_t_i)
            .with(Term::TauTot, tau_tot),
    )
}

/// Splits `τ_{T,d}` into the field-ionization part `τ_dion` and the barrier
/// part `τ_delt`.
pub fn decompose_delay(atom: &AtomSpec, field: f64) -> Result<DelayResult> {
    let dz = delta_z(atom, field)?;
    let ip = atom.ip();
    let k = inverse_scale(atom, field);
    let tau_dion = unbounded_to_inf(ip * k);
    let tau_delt = unbounded_to_inf(dz * k);
    let tau_t_d = unbounded_to_inf((ip + dz) * k);
    Ok(
        DelayResult::new(tau_t_d, Regime::Adiabatic, quantum_limit(atom))
            .with(Term::TauTD, tau_t_d)
            .with(Term::TauDion, tau_dion)
            .with(Term::TauDelt, tau_delt),
    )
}

/// Symmetrized delay `τ_sym = (τ_{T,i} + τ_{T,d})/2`, where the barrier
/// energy is absorbed as `ν_F` photons.
pub fn nonadiabatic_delay(atom: &AtomSpec, pulse: &PulseSpec) -> Result<DelayResult> {
    let field = pulse.field();
    let dz = delta_z(atom, field)?;
    let tau_a = quantum_limit(atom);
    let tau_sym = unbounded_to_inf(atom.ip() * inverse_scale(atom, field));
    let (nu_f, gap) = photon_floor(dz, pulse.omega0());
    let mut out =
        DelayResult::new(tau_sym, Regime::Nonadiabatic, tau_a).with(Term::TauDion, tau_sym);
    out.photon_count = Some(nu_f);
    out.residual_gap = Some(gap);
    Ok(out)
}

/// Excess energy above the fully photon-assisted path.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Excess {
    /// `Δν` extra photons of energy `ω_0`.
    Photons(u32),
    /// `Δε` in au.
    Energy(f64),
}

impl Excess {
    pub fn energy(self, omega0: f64) -> f64 {
        match self {
            Excess::Photons(n) => n as f64 * omega0,
            Excess::Energy(e) => e,
        }
    }
}

/// Intermediate regime `τ_tion = τ_dion + Δτ_delt`. Rises from `τ_sym` at
/// `Δε = 0` and saturates at `τ_{T,d}` when `Δε = δ_z`.
pub fn intermediate_delay(
    atom: &AtomSpec,
    pulse: &PulseSpec,
    excess: Excess,
) -> Result<DelayResult> {
    let field = pulse.field();
    let dz = delta_z(atom, field)?;
    let eps = excess.energy(pulse.omega0());
    if !(eps >= 0.0) {
        return Err(Error::domain(format!(
            "excess energy must be non-negative, got {eps}"
        )));
    }
    if eps > dz {
        return Err(Error::SaturationExceeded {
            excess: eps,
            delta_z: dz,
        });
    }
    let k = inverse_scale(atom, field);
    let tau_dion = unbounded_to_inf(atom.ip() * k);
    let tau = unbounded_to_inf((atom.ip() + eps) * k);
    let mut out = DelayResult::new(tau, Regime::Intermediate, quantum_limit(atom))
        .with(Term::TauDion, tau_dion)
        .with(Term::DeltaTauDelt, eps * k);
    out.delta_nu = Some(eps);
    Ok(out)
}

/// `F_a^K = (2 I_p)^{3/2}`.
pub fn keldysh_field_strength(atom: &AtomSpec) -> f64 {
    (2.0 * atom.ip()).powf(1.5)
}

/// The nonadiabatic delay with `F_a` replaced by `F_a^K`, which is the
/// Keldysh time. Defined for any positive field.
pub fn keldysh_delay(atom: &AtomSpec, field: f64) -> Result<DelayResult> {
    if !(field > 0.0 && field.is_finite()) {
        return Err(Error::domain(format!(
            "field strength must be positive and finite, got {field}"
        )));
    }
    let tau_a = quantum_limit(atom);
    let tau = unbounded_to_inf(tau_a * keldysh_field_strength(atom) / field);
    Ok(DelayResult::new(tau, Regime::Keldysh, tau_a))
}

/// Ponderomotive level shift `(F/(2ω_0))²`.
pub fn stark_shift(field: f64, omega0: f64) -> Result<f64> {
    if !(omega0 > 0.0) {
        return Err(Error::domain(format!(
            "central frequency must be positive, got {omega0}"
        )));
    }
    if !(field >= 0.0) {
        return Err(Error::domain(format!(
            "field strength must be non-negative, got {field}"
        )));
    }
    let r = field / (2.0 * omega0);
    Ok(r * r)
}

/// The atom with `I_p → I_p + (F/(2ω_0))²`.
pub fn stark_shifted_atom(atom: &AtomSpec, pulse: &PulseSpec) -> Result<AtomSpec> {
    atom.with_ip(atom.ip() + stark_shift(pulse.field(), pulse.omega0())?)
}
