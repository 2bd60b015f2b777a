//! Atomic-unit bookkeeping.
//!
//! Every model in this crate works in Hartree atomic units. The conversions
//! here are only meant for the I/O boundary: attoseconds for delays, W/cm²
//! for intensities and nanometres for wavelengths.

use crate::error::{Error, Result};

/// The constants used to leave atomic units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Attoseconds per atomic unit of time.
    pub au_time_in_attoseconds: f64,
    /// W/cm² per squared atomic unit of field strength.
    pub intensity_factor: f64,
    /// `omega0 [au] = wavelength_factor / lambda [nm]`.
    pub wavelength_factor: f64,
}

/// CODATA 2018 values.
pub const CODATA: PhysicalConstants = PhysicalConstants {
    au_time_in_attoseconds: 24.188_843_265_857,
    intensity_factor: 3.509_447_58e16,
    wavelength_factor: 45.5634,
};

impl Default for PhysicalConstants {
    fn default() -> Self {
        CODATA
    }
}

impl PhysicalConstants {
    pub fn au_time_to_attoseconds(&self, t_au: f64) -> f64 {
        t_au * self.au_time_in_attoseconds
    }

    pub fn attoseconds_to_au_time(&self, t_as: f64) -> f64 {
        t_as / self.au_time_in_attoseconds
    }

    pub fn field_to_intensity(&self, field: f64) -> Result<f64> {
        if !(field >= 0.0) {
            return Err(Error::domain(format!(
                "field strength must be non-negative, got {field}"
            )));
        }
        Ok(self.intensity_factor * field * field)
    }

    pub fn wavelength_to_omega(&self, lambda_nm: f64) -> Result<f64> {
        if !(lambda_nm > 0.0) {
            return Err(Error::domain(format!(
                "wavelength must be positive, got {lambda_nm} nm"
            )));
        }
        Ok(self.wavelength_factor / lambda_nm)
    }
}

/// Converts a time in atomic units to attoseconds. NaN propagates.
pub fn au_time_to_attoseconds(t_au: f64) -> f64 {
    CODATA.au_time_to_attoseconds(t_au)
}

pub fn attoseconds_to_au_time(t_as: f64) -> f64 {
    CODATA.attoseconds_to_au_time(t_as)
}

/// Peak intensity in W/cm² for a field strength in atomic units.
pub fn field_to_intensity(field: f64) -> Result<f64> {
    CODATA.field_to_intensity(field)
}

/// Circular frequency in atomic units for a wavelength in nanometres.
pub fn wavelength_to_omega(lambda_nm: f64) -> Result<f64> {
    CODATA.wavelength_to_omega(lambda_nm)
}

/// The intensity ratio `(F/F_a)²`, with intensities taken as squared fields.
pub fn intensity_ratio(field: f64, atomic_field: f64) -> Result<f64> {
    if !(field >= 0.0) || !(atomic_field > 0.0) {
        return Err(Error::domain(format!(
            "intensity ratio needs field >= 0 and atomic field > 0, got {field} and {atomic_field}"
        )));
    }
    let r = field / atomic_field;
    Ok(r * r)
}

/// Recovers the field ratio `F/F_a = sqrt(I_L/I_a)` from a pair of intensities.
pub fn field_ratio_from_intensities(
    laser_intensity: f64,
    appearance_intensity: f64,
) -> Result<f64> {
    if !(laser_intensity >= 0.0) || !(appearance_intensity > 0.0) {
        return Err(Error::domain(format!(
            "intensities must satisfy I_L >= 0 and I_a > 0, got {laser_intensity} and {appearance_intensity}"
        )));
    }
    Ok((laser_intensity / appearance_intensity).sqrt())
}
