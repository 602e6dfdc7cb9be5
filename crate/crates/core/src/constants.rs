//! Laboratory constants. Energies are in eV, lengths in nm, and ħ only
//! ever appears as ħc, so no unit conversion hides inside the formulas.

use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::error::{NgError, Result};

/// CODATA 2018 ħc in eV·nm.
pub const HBAR_C_EV_NM: f64 = 197.326_980_4;
/// CODATA 2018 electron rest energy in eV.
pub const ELECTRON_REST_ENERGY_EV: f64 = 510_998.95;

/// ħc and the particle rest energy mc². Velocities are expressed as v/c,
/// so c itself never appears numerically.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhysicalConstants {
    pub hbar_c: f64,
    pub rest_energy: f64,
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self {
            hbar_c: HBAR_C_EV_NM,
            rest_energy: ELECTRON_REST_ENERGY_EV,
        }
    }
}

impl PhysicalConstants {
    pub fn new(hbar_c: f64, rest_energy: f64) -> Result<Self> {
        let c = Self {
            hbar_c,
            rest_energy,
        };
        c.validate()?;
        Ok(c)
    }

    /// Electron defaults with a different rest energy (eV).
    pub fn with_rest_energy(self, rest_energy: f64) -> Result<Self> {
        Self::new(self.hbar_c, rest_energy)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.hbar_c.is_finite() && self.hbar_c > 0.0) {
            return Err(NgError::InvalidConstant {
                name: "hbar_c_ev_nm",
                value: self.hbar_c,
            });
        }
        if !(self.rest_energy.is_finite() && self.rest_energy > 0.0) {
            return Err(NgError::NonpositiveMass(self.rest_energy));
        }
        Ok(())
    }

    /// Parses `key = value` lines. Blank lines and `#` comments are skipped;
    /// keys not present keep their defaults.
    pub fn parse_config(text: &str) -> Result<Self> {
        let mut out = Self::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                NgError::Config(format!("line {}: expected `key = value`", lineno + 1))
            })?;
            let key = key.trim();
            let value: f64 = value.trim().parse().map_err(|_| {
                NgError::Config(format!(
                    "line {}: `{}` is not a number",
                    lineno + 1,
                    value.trim()
                ))
            })?;
            match key {
                "hbar_c_ev_nm" => out.hbar_c = value,
                "electron_rest_energy_ev" => out.rest_energy = value,
                other => {
                    return Err(NgError::Config(format!(
                        "line {}: unknown key `{other}`",
                        lineno + 1
                    )))
                }
            }
        }
        out.validate()?;
        Ok(out)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path)
            .map_err(|e| NgError::Config(format!("{}: {e}", path.display())))?;
        Self::parse_config(&text)
    }

    /// Inverse reduced Compton wavelength mc/ħ in 1/nm.
    pub fn compton_wavenumber(&self) -> f64 {
        self.rest_energy / self.hbar_c
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_codata() {
        let c = PhysicalConstants::default();
        assert_eq!(c.hbar_c, 197.3269804);
        assert_eq!(c.rest_energy, 510998.95);
    }

    #[test]
    fn parses_config_with_comments() {
        let text = "# lab constants\nhbar_c_ev_nm = 197.0\n\nelectron_rest_energy_ev = 1.0e6 # heavy\n";
        let c = PhysicalConstants::parse_config(text).unwrap();
        assert_eq!(c.hbar_c, 197.0);
        assert_eq!(c.rest_energy, 1.0e6);
    }

    #[test]
    fn partial_config_keeps_defaults() {
        let c = PhysicalConstants::parse_config("hbar_c_ev_nm = 200\n").unwrap();
        assert_eq!(c.rest_energy, ELECTRON_REST_ENERGY_EV);
    }

    #[test]
    fn rejects_bad_config() {
        assert!(matches!(
            PhysicalConstants::parse_config("mass = 3"),
            Err(NgError::Config(_))
        ));
        assert!(matches!(
            PhysicalConstants::parse_config("hbar_c_ev_nm 3"),
            Err(NgError::Config(_))
        ));
        assert!(matches!(
            PhysicalConstants::parse_config("electron_rest_energy_ev = -1"),
            Err(NgError::NonpositiveMass(_))
        ));
    }

    #[test]
    fn compton_scale() {
        let c = PhysicalConstants::default();
        // 1 / 3.8616e-4 nm
        assert!((c.compton_wavenumber() - 2589.605).abs() < 1e-2);
    }
}
