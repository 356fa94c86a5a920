//! Physical constants and unit conversions.
//!
//! Internally everything is dimensionless: energies in units of the tunnel
//! coupling Γ, times in ħ/Γ. These helpers convert to SI at the reporting
//! boundary.

/// Reduced Planck constant in meV·ps.
pub const HBAR_MEV_PS: f64 = 0.6582119569;

/// Reduced Planck constant in μeV·ps.
pub const HBAR_UEV_PS: f64 = HBAR_MEV_PS * 1e3;

/// Elementary charge in coulomb; also joule per eV.
pub const JOULE_PER_EV: f64 = 1.602_176_634e-19;

/// Convert a time in ħ/Γ units to picoseconds for a given Γ in μeV.
pub fn natural_time_to_ps(t_natural: f64, gamma_si_uev: f64) -> f64 {
    t_natural * HBAR_UEV_PS / gamma_si_uev
}

/// Convert an energy in Γ units to meV for a given Γ in μeV.
pub fn gamma_units_to_mev(energy_gamma: f64, gamma_si_uev: f64) -> f64 {
    energy_gamma * gamma_si_uev * 1e-3
}

pub fn ev_to_joule(ev: f64) -> f64 {
    ev * JOULE_PER_EV
}

pub fn joule_to_ev(joule: f64) -> f64 {
    joule / JOULE_PER_EV
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ev_joule_round_trip() {
        for &ev in &[1e-3, 1.0, 3.6e3, 1.19e5] {
            let back = joule_to_ev(ev_to_joule(ev));
            assert!((back - ev).abs() <= 1e-15 * ev);
        }
    }

    #[test]
    fn default_gamma_time_scale() {
        // 1 hbar/Gamma at Gamma = 44 ueV is about 15 ps.
        let ps = natural_time_to_ps(1.0, 44.0);
        assert!((ps - 14.9594).abs() < 1e-3);
    }
}
