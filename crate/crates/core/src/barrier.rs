//! The field-dressed Coulomb barrier in one dimension.
//!
//! The electron sees `V_eff(x) = -Z_eff/x - x F`. For `F` below the atomic
//! field strength `F_a = I_p²/(4 Z_eff)` the level `-I_p` crosses `V_eff`
//! twice, at the entrance and exit points `x_{e,∓} = (I_p ∓ δ_z)/(2F)` with
//! `δ_z = sqrt(I_p² - 4 Z_eff F)`. At `F = F_a` the two points merge with
//! the barrier maximum and the barrier vanishes.

use serde::Serialize;

use crate::error::{Error, Result};

/// Single-active-electron target.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AtomSpec {
    label: String,
    ip: f64,
    z_eff: f64,
}

impl AtomSpec {
    pub fn new(label: impl Into<String>, ip: f64, z_eff: f64) -> Result<Self> {
        if !(ip > 0.0 && ip.is_finite()) {
            return Err(Error::domain(format!(
                "ionization potential must be positive, got {ip}"
            )));
        }
        if !(z_eff > 0.0 && z_eff.is_finite()) {
            return Err(Error::domain(format!(
                "effective charge must be positive, got {z_eff}"
            )));
        }
        Ok(Self {
            label: label.into(),
            ip,
            z_eff,
        })
    }

    /// Helium with the screened charge `Z_eff = 1.6875`.
    pub fn helium() -> Self {
        Self::new("He", 0.90357, 1.6875).expect("valid preset")
    }

    /// Helium with `Z_eff = sqrt(2 I_p) = 1.344`.
    pub fn helium_alt() -> Self {
        Self::new("He-alt", 0.90357, 1.344).expect("valid preset")
    }

    pub fn hydrogen() -> Self {
        Self::new("H", 0.5, 1.0).expect("valid preset")
    }

    /// Looks up a preset by name (case-insensitive).
    pub fn preset(name: &str) -> Option<Self> {
        match name.to_ascii_lowercase().as_str() {
            "he" | "helium" => Some(Self::helium()),
            "he-alt" | "he_alt" => Some(Self::helium_alt()),
            "h" | "hydrogen" => Some(Self::hydrogen()),
            _ => None,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Ionization potential in au.
    pub fn ip(&self) -> f64 {
        self.ip
    }

    pub fn z_eff(&self) -> f64 {
        self.z_eff
    }

    /// Same atom with a different ionization potential.
    pub fn with_ip(&self, ip: f64) -> Result<Self> {
        Self::new(self.label.clone(), ip, self.z_eff)
    }

    /// Same atom with a different effective charge.
    pub fn with_z_eff(&self, z_eff: f64) -> Result<Self> {
        Self::new(self.label.clone(), self.ip, z_eff)
    }
}

/// Laser pulse parameters. The ellipticity is carried as metadata only.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PulseSpec {
    field: f64,
    omega0: f64,
    ellipticity: f64,
}

impl PulseSpec {
    pub fn new(field: f64, omega0: f64, ellipticity: f64) -> Result<Self> {
        if !(field > 0.0 && field.is_finite()) {
            return Err(Error::domain(format!(
                "peak field strength must be positive, got {field}"
            )));
        }
        if !(omega0 > 0.0 && omega0.is_finite()) {
            return Err(Error::domain(format!(
                "central frequency must be positive, got {omega0}"
            )));
        }
        if !(0.0..=1.0).contains(&ellipticity) {
            return Err(Error::domain(format!(
                "ellipticity must lie in [0, 1], got {ellipticity}"
            )));
        }
        Ok(Self {
            field,
            omega0,
            ellipticity,
        })
    }

    /// A pulse with ellipticity 0.87, the value used in the He attoclock runs.
    pub fn attoclock(field: f64, omega0: f64) -> Result<Self> {
        Self::new(field, omega0, 0.87)
    }

    /// Peak field strength in au.
    pub fn field(&self) -> f64 {
        self.field
    }

    /// Central circular frequency in au.
    pub fn omega0(&self) -> f64 {
        self.omega0
    }

    pub fn ellipticity(&self) -> f64 {
        self.ellipticity
    }

    pub fn with_field(&self, field: f64) -> Result<Self> {
        Self::new(field, self.omega0, self.ellipticity)
    }
}

/// All barrier-geometry quantities for one `(atom, F)` pair, in au.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BarrierGeometry {
    pub field: f64,
    /// Atomic field strength `F_a`.
    pub f_a: f64,
    /// Barrier height and energy gap `δ_z`.
    pub delta_z: f64,
    /// Entrance point.
    pub x_e_minus: f64,
    /// Exit point on the `-I_p` level.
    pub x_e_plus: f64,
    /// Barrier width `δ_z / F`.
    pub d_b: f64,
    /// Position of the barrier maximum `sqrt(Z_eff/F)`.
    pub x_m: f64,
    pub h_m_plus: f64,
    pub h_m_minus: f64,
    /// `sqrt(|h_M⁺ h_M⁻|)`, equal to `δ_z`.
    pub mean_height: f64,
    /// "Classical" exit point `I_p / F`.
    pub x_c: f64,
    /// Initial point `Z_eff / (2 I_p)`.
    pub x_i: f64,
    /// Barrier maximum at `F = F_a`.
    pub x_a: f64,
}

/// `F_a = I_p² / (4 Z_eff)`.
pub fn atomic_field_strength(atom: &AtomSpec) -> f64 {
    atom.ip * atom.ip / (4.0 * atom.z_eff)
}

fn check_field(field: f64) -> Result<()> {
    if field > 0.0 && field.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "field strength must be positive and finite, got {field}"
        )))
    }
}

/// Radicand `I_p² - 4 Z_eff F`, clamped to zero inside the float-noise band
/// around `F_a`.
fn barrier_radicand(atom: &AtomSpec, field: f64) -> Result<f64> {
    check_field(field)?;
    let f_a = atomic_field_strength(atom);
    if field == f_a {
        return Ok(0.0);
    }
    let ip2 = atom.ip * atom.ip;
    let radicand = ip2 - 4.0 * atom.z_eff * field;
    if radicand >= 0.0 {
        Ok(radicand)
    } else if radicand >= -1e-12 * ip2 {
        Ok(0.0)
    } else {
        Err(Error::BarrierSuppressed {
            field,
            atomic_field: f_a,
        })
    }
}

/// `δ_z = sqrt(I_p² - 4 Z_eff F)`; exactly zero at `F = F_a`.
pub fn delta_z(atom: &AtomSpec, field: f64) -> Result<f64> {
    barrier_radicand(atom, field).map(f64::sqrt)
}

/// The bare Coulomb term `-Z_eff / x`.
pub fn coulomb_potential(atom: &AtomSpec, x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain(format!("position must be positive, got {x}")));
    }
    Ok(-atom.z_eff / x)
}

/// `V_eff(x) = -Z_eff/x - x F`.
pub fn effective_potential(atom: &AtomSpec, field: f64, x: f64) -> Result<f64> {
    if !field.is_finite() {
        return Err(Error::domain(format!("field must be finite, got {field}")));
    }
    Ok(coulomb_potential(atom, x)? - x * field)
}

pub fn barrier_geometry(atom: &AtomSpec, field: f64) -> Result<BarrierGeometry> {
    let radicand = barrier_radicand(atom, field)?;
    let ip = atom.ip;
    let z = atom.z_eff;
    let f_a = atomic_field_strength(atom);
    let delta_z = radicand.sqrt();
    let x_m = (z / field).sqrt();
    let s = (4.0 * z * field).sqrt();

    let (x_e_minus, x_e_plus) = if delta_z == 0.0 {
        (x_m, x_m)
    } else {
        // (I_p - δ_z)/(2F) rewritten as 2 Z_eff/(I_p + δ_z) to avoid cancellation at small F.
        (
            (2.0 * z / (ip + delta_z)).min(x_m),
            ((ip + delta_z) / (2.0 * field)).max(x_m),
        )
    };

    Ok(BarrierGeometry {
        field,
        f_a,
        delta_z,
        x_e_minus,
        x_e_plus,
        d_b: delta_z / field,
        x_m,
        // -I_p + s = -(I_p² - s²)/(I_p + s)
        h_m_plus: -radicand / (ip + s),
        h_m_minus: -ip - s,
        mean_height: delta_z,
        x_c: ip / field,
        x_i: z / (2.0 * ip),
        x_a: (z / f_a).sqrt(),
    })
}

/// Keldysh time and parameter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Keldysh {
    pub gamma_k: f64,
    /// `τ_K = sqrt(2 I_p)/F` in au.
    pub tau_k: f64,
}

/// `γ_K = sqrt(2 I_p) ω_0 / F`. Defined above `F_a` as well.
pub fn keldysh(atom: &AtomSpec, pulse: &PulseSpec) -> Keldysh {
    keldysh_at(atom, pulse.field, pulse.omega0)
        .expect("PulseSpec holds a valid field and frequency")
}

pub fn keldysh_at(atom: &AtomSpec, field: f64, omega0: f64) -> Result<Keldysh> {
    check_field(field)?;
    if !(omega0 > 0.0) {
        return Err(Error::domain(format!(
            "central frequency must be positive, got {omega0}"
        )));
    }
    let tau_k = (2.0 * atom.ip).sqrt() / field;
    Ok(Keldysh {
        gamma_k: tau_k * omega0,
        tau_k,
    })
}

/// Exit point when the barrier energy is fully covered by absorbed photons:
/// `x_E = I_p/(2F) = x_C/2`.
pub fn photon_assisted_exit_point(atom: &AtomSpec, field: f64) -> Result<f64> {
    check_field(field)?;
    Ok(atom.ip / (2.0 * field))
}

/// Width of the residual barrier crossed with excess energy `Δε` below the top:
/// `d_B^ν = Δε/F`. Equals `d_B` at `Δε = δ_z`.
pub fn residual_barrier_width(atom: &AtomSpec, field: f64, excess: f64) -> Result<f64> {
    check_excess(atom, field, excess)?;
    Ok(excess / field)
}

/// Intermediate-regime exit point `x_m + Δε/(2F)`; reduces to `x_m` at `Δε = 0`.
pub fn intermediate_exit_point(atom: &AtomSpec, field: f64, excess: f64) -> Result<f64> {
    check_excess(atom, field, excess)?;
    Ok((atom.z_eff / field).sqrt() + excess / (2.0 * field))
}

fn check_excess(atom: &AtomSpec, field: f64, excess: f64) -> Result<()> {
    let dz = delta_z(atom, field)?;
    if !(excess >= 0.0) {
        return Err(Error::domain(format!(
            "excess energy must be non-negative, got {excess}"
        )));
    }
    if excess > dz {
        return Err(Error::SaturationExceeded {
            excess,
            delta_z: dz,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn he() -> AtomSpec {
        AtomSpec::helium()
    }

    /// Golden-section maximization of `V_eff`, oracle for `x_m`.
    fn golden_max(atom: &AtomSpec, f: f64, mut a: f64, mut b: f64) -> f64 {
        let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
        let v = |x: f64| effective_potential(atom, f, x).unwrap();
        let mut c = b - inv_phi * (b - a);
        let mut d = a + inv_phi * (b - a);
        for _ in 0..200 {
            if v(c) > v(d) {
                b = d;
            } else {
                a = c;
            }
            c = b - inv_phi * (b - a);
            d = a + inv_phi * (b - a);
        }
        0.5 * (a + b)
    }

    #[test]
    fn atomic_field_examples() {
        assert_relative_eq!(atomic_field_strength(&he()), 0.120954, max_relative = 1e-5);
        assert_relative_eq!(atomic_field_strength(&AtomSpec::hydrogen()), 0.0625);
        let ip = 0.7;
        let atom = AtomSpec::new("x", ip, ip * ip / 4.0).unwrap();
        assert_relative_eq!(atomic_field_strength(&atom), 1.0, max_relative = 1e-15);
    }

    #[test]
    fn delta_z_examples() {
        let fa = atomic_field_strength(&he());
        assert_eq!(delta_z(&he(), fa).unwrap(), 0.0);
        assert_relative_eq!(delta_z(&he(), 0.06).unwrap(), 0.641435, max_relative = 1e-6);
        assert_relative_eq!(
            delta_z(&he(), 1e-12).unwrap(),
            0.90357,
            max_relative = 1e-10
        );
    }

    #[test]
    fn delta_z_rejects_bsi_and_bad_fields() {
        assert!(matches!(
            delta_z(&he(), 0.13),
            Err(Error::BarrierSuppressed { .. })
        ));
        assert!(matches!(delta_z(&he(), 0.0), Err(Error::Domain(_))));
        assert!(matches!(delta_z(&he(), -0.01), Err(Error::Domain(_))));
        assert!(delta_z(&he(), f64::NAN).is_err());
    }

    #[test]
    fn delta_z_clamps_float_noise_at_the_boundary() {
        let fa = atomic_field_strength(&he());
        let just_above = fa * (1.0 + 1e-15);
        assert_eq!(delta_z(&he(), just_above).unwrap(), 0.0);
        let clearly_above = fa * (1.0 + 1e-9);
        assert!(delta_z(&he(), clearly_above).is_err());
    }

    #[test]
    fn effective_potential_examples() {
        let v = effective_potential(&he(), 0.06, 5.30330).unwrap();
        assert_relative_eq!(v, -0.636396, max_relative = 1e-6);
        let g = barrier_geometry(&he(), 0.06).unwrap();
        let v = effective_potential(&he(), 0.06, g.x_e_plus).unwrap();
        assert_relative_eq!(v, -0.90357, max_relative = 1e-12);
        assert!(effective_potential(&he(), 0.06, 0.0).is_err());
        assert!(effective_potential(&he(), 0.06, -1.0).is_err());
    }

    #[test]
    fn barrier_maximum_matches_golden_section() {
        for &f in &[0.01, 0.03, 0.06, 0.1, 0.12] {
            let g = barrier_geometry(&he(), f).unwrap();
            let x = golden_max(&he(), f, g.x_i, 4.0 * g.x_c);
            // plain golden section on V_eff itself is limited to ~sqrt(eps)
            assert_relative_eq!(x, g.x_m, max_relative = 1e-6);
        }
    }

    #[test]
    fn geometry_examples() {
        let g = barrier_geometry(&he(), 0.06).unwrap();
        assert_relative_eq!(g.x_e_minus, 2.184459075971636, max_relative = 1e-12);
        assert_relative_eq!(g.x_e_plus, 12.875040924028364, max_relative = 1e-12);
        assert_relative_eq!(g.d_b, 10.690581848056728, max_relative = 1e-12);
        assert_relative_eq!(g.x_m, 5.303300858899106, max_relative = 1e-12);
        assert_relative_eq!(g.x_c, 15.0595, max_relative = 1e-12);
        // 1.6875/(2*0.90357), high-precision reference
        assert_relative_eq!(g.x_i, 0.933795942760384, max_relative = 1e-12);
        assert_relative_eq!(
            g.h_m_plus,
            -0.90357 + (4.0f64 * 1.6875 * 0.06).sqrt(),
            max_relative = 1e-12
        );
        assert_relative_eq!(
            g.h_m_minus,
            -0.90357 - (4.0f64 * 1.6875 * 0.06).sqrt(),
            max_relative = 1e-12
        );
    }

    #[test]
    fn geometry_collapses_at_atomic_field() {
        let fa = atomic_field_strength(&he());
        let g = barrier_geometry(&he(), fa).unwrap();
        assert_eq!(g.delta_z, 0.0);
        assert_eq!(g.d_b, 0.0);
        assert_eq!(g.x_e_minus, g.x_m);
        assert_eq!(g.x_e_plus, g.x_m);
        assert_eq!(g.x_m, g.x_a);
        assert_eq!(g.h_m_plus, 0.0);
    }

    #[test]
    fn keldysh_examples() {
        let k = keldysh(&he(), &PulseSpec::attoclock(0.02, 0.062).unwrap());
        assert!((k.gamma_k - 4.167).abs() < 0.15);
        let k = keldysh(&he(), &PulseSpec::attoclock(0.10, 0.062).unwrap());
        assert!((k.gamma_k - 0.8335).abs() < 1e-3);
        let k = keldysh(&he(), &PulseSpec::attoclock(0.06, 0.062).unwrap());
        assert_relative_eq!(k.tau_k, 22.405, max_relative = 1e-4);
        // defined above F_a too
        assert!(keldysh_at(&he(), 0.5, 0.062).is_ok());
        assert!(keldysh_at(&he(), 0.0, 0.062).is_err());
    }

    #[test]
    fn intermediate_exit_point_limits() {
        let g = barrier_geometry(&he(), 0.06).unwrap();
        assert_eq!(intermediate_exit_point(&he(), 0.06, 0.0).unwrap(), g.x_m);
        let x = intermediate_exit_point(&he(), 0.06, g.delta_z).unwrap();
        assert_relative_eq!(x, g.x_m + g.d_b / 2.0, max_relative = 1e-14);
        assert_relative_eq!(
            residual_barrier_width(&he(), 0.06, g.delta_z).unwrap(),
            g.d_b,
            max_relative = 1e-15
        );
        assert!(matches!(
            intermediate_exit_point(&he(), 0.06, g.delta_z * 1.01),
            Err(Error::SaturationExceeded { .. })
        ));
        assert_relative_eq!(
            photon_assisted_exit_point(&he(), 0.06).unwrap(),
            g.x_c / 2.0,
            max_relative = 1e-15
        );
    }

    #[test]
    fn atom_and_pulse_validation() {
        assert!(AtomSpec::new("x", 0.0, 1.0).is_err());
        assert!(AtomSpec::new("x", 1.0, -1.0).is_err());
        assert!(PulseSpec::new(0.05, 0.0, 0.5).is_err());
        assert!(PulseSpec::new(0.05, 0.062, 1.5).is_err());
        assert!(PulseSpec::new(0.0, 0.062, 0.5).is_err());
        assert_eq!(AtomSpec::preset("He-alt").unwrap().z_eff(), 1.344);
        assert!(AtomSpec::preset("Xe").is_none());
    }

    fn atom_and_field() -> impl Strategy<Value = (AtomSpec, f64)> {
        (0.1f64..3.0, 0.3f64..5.0, 1e-6f64..=1.0).prop_map(|(ip, z, u)| {
            let atom = AtomSpec::new("p", ip, z).unwrap();
            let f = u * atomic_field_strength(&atom);
            (atom, f)
        })
    }

    proptest! {
        #[test]
        fn exit_points_are_roots((atom, f) in atom_and_field()) {
            let g = barrier_geometry(&atom, f).unwrap();
            for x in [g.x_e_minus, g.x_e_plus] {
                let r = effective_potential(&atom, f, x).unwrap() + atom.ip();
                prop_assert!(r.abs() <= 1e-10 * atom.ip().max(1.0));
            }
        }

        #[test]
        fn geometry_identities((atom, f) in atom_and_field()) {
            let g = barrier_geometry(&atom, f).unwrap();
            prop_assert!(g.x_e_minus <= g.x_m && g.x_m <= g.x_e_plus);
            prop_assert!(((g.x_e_plus - g.x_e_minus) - g.d_b).abs() <= 1e-12 * g.x_e_plus);
            let prod = g.x_e_minus * g.x_e_plus;
            prop_assert!((prod - atom.z_eff() / f).abs() <= 1e-12 * prod);
            prop_assert!((g.x_m - prod.sqrt()).abs() <= 1e-12 * g.x_m);
            let hh = (g.h_m_plus * g.h_m_minus).abs();
            prop_assert!((hh - g.delta_z * g.delta_z).abs() <= 1e-12 * hh.max(f64::MIN_POSITIVE));
            prop_assert!((g.mean_height - hh.sqrt()).abs() <= 1e-12 * atom.ip());
        }

        #[test]
        fn delta_z_decreases((atom, f) in atom_and_field(), v in 0.01f64..0.99) {
            let f2 = f * v;
            prop_assert!(delta_z(&atom, f2).unwrap() > delta_z(&atom, f).unwrap());
        }
    }
}
