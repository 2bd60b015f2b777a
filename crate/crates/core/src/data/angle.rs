use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::units::CODATA;

/// Reads an attoclock offset angle as a delay, `τ = scale · θ/ω_0`.
///
/// `scale = 1` is the rigid-rotation clock of a circularly polarized field.
/// No ellipticity correction is applied by default; set `scale` if the
/// experiment calls for one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleClock {
    pub scale: f64,
}

impl Default for AngleClock {
    fn default() -> Self {
        AngleClock { scale: 1.0 }
    }
}

impl AngleClock {
    /// Delay in atomic units.
    pub fn delay_au(&self, theta_deg: f64, omega0: f64) -> Result<f64> {
        if !(omega0 > 0.0) {
            return Err(Error::domain(format!(
                "central frequency must be positive, got {omega0}"
            )));
        }
        Ok(self.scale * theta_deg * PI / 180.0 / omega0)
    }

    pub fn delay_as(&self, theta_deg: f64, omega0: f64) -> Result<f64> {
        self.delay_au(theta_deg, omega0)
            .map(|t| CODATA.au_time_to_attoseconds(t))
    }
}

/// Offset angle in degrees to delay in attoseconds, with the default clock.
pub fn angle_to_delay(theta_deg: f64, omega0: f64) -> Result<f64> {
    AngleClock::default().delay_as(theta_deg, omega0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn examples() {
        assert_eq!(angle_to_delay(0.0, 0.062).unwrap(), 0.0);
        let period = AngleClock::default().delay_au(360.0, 0.062).unwrap();
        assert_relative_eq!(period, 2.0 * PI / 0.062, max_relative = 1e-15);
        assert!((angle_to_delay(360.0, 0.062).unwrap() - 2451.3).abs() < 0.1);
        let three = AngleClock::default().delay_au(3.0, 0.062).unwrap();
        assert_relative_eq!(three, 0.844514, max_relative = 1e-6);
        assert!((angle_to_delay(3.0, 0.062).unwrap() - 20.43).abs() < 5e-3);
    }

    #[test]
    fn scale_and_errors() {
        let half = AngleClock { scale: 0.5 };
        assert_relative_eq!(
            half.delay_as(10.0, 0.062).unwrap(),
            0.5 * angle_to_delay(10.0, 0.062).unwrap()
        );
        assert!(angle_to_delay(3.0, 0.0).is_err());
        assert!(angle_to_delay(3.0, -0.1).is_err());
    }
}
