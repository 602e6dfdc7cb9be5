//! Geometry order, roots of negative unity, operator phase factors,
//! L^j norms and the power-law dispersion relation.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::constants::PhysicalConstants;
use crate::error::{NgError, Result};

pub type ComplexValue = Complex64;

const I: Complex64 = Complex64::new(0.0, 1.0);
const HALF_SQRT_3: f64 = 0.866_025_403_784_438_6;

/// The exponent j = N − 1 of the dispersion relation E ∝ |p|^j.
///
/// `GeometryOrder::from_j(3)` and `GeometryOrder::from_label(4)` ("4G") are
/// the same value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GeometryOrder(u32);

impl GeometryOrder {
    pub const TWO_G: GeometryOrder = GeometryOrder(1);
    pub const THREE_G: GeometryOrder = GeometryOrder(2);
    pub const FOUR_G: GeometryOrder = GeometryOrder(3);
    pub const FIVE_G: GeometryOrder = GeometryOrder(4);

    pub fn from_j(j: i64) -> Result<Self> {
        if j >= 1 && j <= u32::MAX as i64 {
            Ok(Self(j as u32))
        } else {
            Err(NgError::InvalidOrder(j))
        }
    }

    /// From the geometry label N (N = 4 is "4G").
    pub fn from_label(n: i64) -> Result<Self> {
        Self::from_j(n - 1).map_err(|_| NgError::InvalidOrder(n - 1))
    }

    pub fn j(self) -> u32 {
        self.0
    }

    pub fn label(self) -> u32 {
        self.0 + 1
    }

    pub fn jf(self) -> f64 {
        self.0 as f64
    }
}

impl fmt::Display for GeometryOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}G", self.label())
    }
}

/// Accepts "4G", "4g", "j=3" and "J=3".
impl FromStr for GeometryOrder {
    type Err = NgError;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || NgError::InvalidArgument(format!("unrecognized geometry `{s}`"));
        if let Some(rest) = t.strip_prefix("j=").or_else(|| t.strip_prefix("J=")) {
            let j: i64 = rest.trim().parse().map_err(|_| bad())?;
            return Self::from_j(j);
        }
        if let Some(num) = t.strip_suffix('G').or_else(|| t.strip_suffix('g')) {
            let n: i64 = num.trim().parse().map_err(|_| bad())?;
            return Self::from_label(n);
        }
        Err(bad())
    }
}

/// The j solutions of z^j = −1, sorted by principal argument in [0, 2π).
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    pub order: GeometryOrder,
    pub roots: Vec<ComplexValue>,
}

impl RootSet {
    pub fn product(&self) -> ComplexValue {
        self.roots.iter().product()
    }
}

/// Named roots for j = 3 and j = 4. Note that `OMEGA_BAR_SQ` is the label of
/// the conjugate root (1 − ι√3)/2, not the square of `OMEGA_BAR`.
pub mod named {
    use super::*;

    pub const ONE_BAR: Complex64 = Complex64::new(-1.0, 0.0);
    pub const OMEGA_BAR: Complex64 = Complex64::new(0.5, HALF_SQRT_3);
    pub const OMEGA_BAR_SQ: Complex64 = Complex64::new(0.5, -HALF_SQRT_3);
    pub const ETA_1: Complex64 = Complex64::new(FRAC_1_SQRT_2, FRAC_1_SQRT_2);
    pub const ETA_2: Complex64 = Complex64::new(-FRAC_1_SQRT_2, FRAC_1_SQRT_2);
    pub const ETA_3: Complex64 = Complex64::new(-FRAC_1_SQRT_2, -FRAC_1_SQRT_2);
    pub const ETA_4: Complex64 = Complex64::new(FRAC_1_SQRT_2, -FRAC_1_SQRT_2);
}

/// Roots e^{ιπ(2l+1)/j}, l = 0..j−1. Exact literals for j ≤ 4.
pub fn roots_of_negative_unity(order: GeometryOrder) -> RootSet {
    use named::*;
    let roots = match order.j() {
        1 => vec![ONE_BAR],
        2 => vec![I, -I],
        3 => vec![OMEGA_BAR, ONE_BAR, OMEGA_BAR_SQ],
        4 => vec![ETA_1, ETA_2, ETA_3, ETA_4],
        j => (0..j)
            .map(|l| Complex64::from_polar(1.0, PI * (2 * l + 1) as f64 / j as f64))
            .collect(),
    };
    RootSet { order, roots }
}

/// Dimensionless prefactors of ħ∂/∂x and ħ∂/∂t, plus the coefficient of
/// E t/ħ in the exponent of the temporal factor Θ(t).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatorPhases {
    pub momentum_phase: ComplexValue,
    pub energy_phase: ComplexValue,
    pub temporal_decay_phase: ComplexValue,
}

impl OperatorPhases {
    /// Factor multiplying E when Ê acts on Θ(t).
    pub fn energy_chain(&self) -> ComplexValue {
        self.energy_phase * self.temporal_decay_phase
    }
}

pub fn operator_phases(order: GeometryOrder) -> OperatorPhases {
    use named::*;
    let (momentum_phase, energy_phase) = match order.j() {
        1 => (ONE_BAR, ONE_BAR),
        2 => (-I, I),
        3 => (ONE_BAR * OMEGA_BAR, OMEGA_BAR_SQ),
        // η̄1 η̄2 η̄3 = η̄1 (angles 45° + 135° + 225° ≡ 45°)
        4 => (ETA_1, ETA_4),
        _ => {
            let rs = roots_of_negative_unity(order);
            let (last, rest) = rs.roots.split_last().expect("j >= 1");
            (rest.iter().product(), *last)
        }
    };
    // Θ(t) = exp(−E t/ħ) for j = 1, exp(−(energy root) E t/ħ) otherwise.
    let temporal_decay_phase = if order.j() == 1 {
        ONE_BAR
    } else {
        -energy_phase
    };
    OperatorPhases {
        momentum_phase,
        energy_phase,
        temporal_decay_phase,
    }
}

/// (Σ |c_i|^j)^{1/j}. Signed components are taken by absolute value.
pub fn lj_norm(components: &[f64], order: GeometryOrder) -> Result<f64> {
    if components.is_empty() {
        return Err(NgError::EmptyInput);
    }
    let scale = components.iter().fold(0.0_f64, |m, c| m.max(c.abs()));
    if scale == 0.0 {
        return Ok(0.0);
    }
    let j = order.jf();
    // scaled to avoid overflow of |c|^j
    let sum: f64 = components.iter().map(|c| (c.abs() / scale).powf(j)).sum();
    Ok(scale * sum.powf(1.0 / j))
}

/// L^j distance between two points.
pub fn minkowski_distance(a: &[f64], b: &[f64], order: GeometryOrder) -> Result<f64> {
    if a.len() != b.len() {
        return Err(NgError::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let diffs: Vec<f64> = a.iter().zip(b).map(|(x, y)| y - x).collect();
    lj_norm(&diffs, order)
}

/// E = (ħc k)^j / (j (mc²)^{j−1}) in eV, for k in 1/nm.
pub fn dispersion_energy(k: f64, order: GeometryOrder, constants: &PhysicalConstants) -> Result<f64> {
    constants.validate()?;
    if !(k >= 0.0 && k.is_finite()) {
        return Err(NgError::InvalidArgument(format!(
            "wavenumber must be finite and non-negative, got {k}"
        )));
    }
    let j = order.j() as i32;
    let pc = constants.hbar_c * k;
    if j == 1 {
        return Ok(pc);
    }
    // (pc)^j / (mc²)^{j-1} = mc² (pc / mc²)^j
    let ratio = pc / constants.rest_energy;
    Ok(constants.rest_energy * ratio.powi(j) / j as f64)
}
