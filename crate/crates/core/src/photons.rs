//! Photon bookkeeping of the ionization step.
//!
//! The ionization potential splits as `I_p = ε_F + δ_z`: `δ_z` is covered by
//! real multiphoton absorption (`n_F = floor(δ_z/ω_0)` photons, leaving a gap
//! `δE < ω_0`) and `ε_F = I_p - δ_z` by scattering on virtual ("imaginary")
//! photons. The same count goes by `m_F`, `ν_F` and `κ_F` in the literature;
//! only `n_F` is exposed here.

use serde::Serialize;

use crate::barrier::{atomic_field_strength, delta_z, AtomSpec, PulseSpec};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnergyPartition {
    /// Scattering share `ε_F = I_p - δ_z` in au.
    pub epsilon_f: f64,
    /// Barrier-height share `δ_z` in au.
    pub delta_z: f64,
    /// `floor(I_p / ω_0)`.
    pub n_ip: u32,
    /// `floor(δ_z / ω_0)`.
    pub n_f: u32,
    /// Energy carried by virtual photons, `v_F ω_0 = ε_F`.
    pub v_f_energy: f64,
    /// `δE = δ_z - n_F ω_0`, in `[0, ω_0)`.
    pub residual_gap: f64,
    /// `ΔE = I_p - δ_z`, the energy uncertainty behind `τ_{T,d} = 1/(2ΔE)`.
    pub delta_e_threshold: f64,
}

/// Number of whole photons of energy `omega0` fitting into `energy`, and the
/// remainder. The remainder is always in `[0, omega0)`.
pub fn photon_floor(energy: f64, omega0: f64) -> (u32, f64) {
    debug_assert!(energy >= 0.0 && omega0 > 0.0);
    let mut n = (energy / omega0).floor();
    let mut rest = energy - n * omega0;
    // the quotient can round across an integer
    if rest < 0.0 {
        n -= 1.0;
        rest = energy - n * omega0;
    } else if rest >= omega0 {
        n += 1.0;
        rest = energy - n * omega0;
    }
    (n as u32, rest.max(0.0))
}

pub fn energy_partition(atom: &AtomSpec, pulse: &PulseSpec) -> Result<EnergyPartition> {
    let dz = delta_z(atom, pulse.field())?;
    let omega0 = pulse.omega0();
    let ip = atom.ip();
    // ip - dz = 4 Z F / (ip + dz)
    let epsilon_f = 4.0 * atom.z_eff() * pulse.field() / (ip + dz);
    let (n_ip, _) = photon_floor(ip, omega0);
    let (n_f, residual_gap) = photon_floor(dz, omega0);
    Ok(EnergyPartition {
        epsilon_f,
        delta_z: dz,
        n_ip,
        n_f: n_f.min(n_ip),
        v_f_energy: epsilon_f,
        residual_gap,
        delta_e_threshold: epsilon_f,
    })
}

/// The approximation `n_F ≈ floor(n_{I_p} sqrt(1 - F/F_a))`. It can be one
/// photon below the exact count.
pub fn photon_count_approx(atom: &AtomSpec, pulse: &PulseSpec) -> Result<u32> {
    // validates the field range
    delta_z(atom, pulse.field())?;
    let (n_ip, _) = photon_floor(atom.ip(), pulse.omega0());
    let ratio = (pulse.field() / atomic_field_strength(atom)).min(1.0);
    Ok((n_ip as f64 * (1.0 - ratio).sqrt()).floor() as u32)
}
