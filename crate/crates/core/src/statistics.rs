//! j-fold probability measure, moments, generalized uncertainties and the
//! Heisenberg product for real stationary states.
//!
//! Moments are ratios `∫φ^{j−1} Ô φ / ∫φ^j`. For a state whose normalization
//! constant closes exactly the denominator is 1; the numerator alone is kept
//! as `raw_pairing` so the unnormalized route can be compared.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{NgError, Result};
use crate::geometry::{named, roots_of_negative_unity, ComplexValue, GeometryOrder};
use crate::oracle::quadrature::integrate_scaled;
use crate::solutions::{BoundState, StateFamily};

const MAX_POWER: u32 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Observable {
    Position,
    Momentum,
}

/// φ^j on [a, b].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProbabilityMeasure {
    pub order: GeometryOrder,
    pub a: f64,
    pub b: f64,
}

impl ProbabilityMeasure {
    pub fn for_state(state: &BoundState) -> Self {
        Self {
            order: state.order(),
            a: 0.0,
            b: state.width(),
        }
    }

    /// ∫_a^b φ^j dx (signed for odd j).
    pub fn total(&self, state: &BoundState) -> Result<f64> {
        let j = self.order.j() as i32;
        well_integral(state, |x| state.spatial_derivative_unchecked(x, 0).powi(j))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DensityValue {
    pub x: f64,
    pub value: f64,
    /// Set where φ^j < 0 (odd j and φ < 0).
    pub negative: bool,
}

pub fn probability_density(state: &BoundState, x: f64) -> Result<DensityValue> {
    let phi = state.spatial_derivative(x, 0)?;
    let value = phi.powi(state.order().j() as i32);
    Ok(DensityValue {
        x,
        value,
        negative: value < 0.0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MomentReport {
    pub observable: Observable,
    pub power: u32,
    /// ⟨O^k⟩ = raw_pairing / norm_integral.
    pub value: ComplexValue,
    /// ∫φ^{j−1} Ô^k φ dx.
    pub raw_pairing: ComplexValue,
    /// ∫φ^j dx.
    pub norm_integral: f64,
}

/// Coefficient c in p̂ = c ħ d/dx used for moments: −ι, −ω̄, −η̄₁.
pub fn moment_prefactor(order: GeometryOrder) -> ComplexValue {
    match order.j() {
        1 => named::ONE_BAR,
        2 => Complex64::new(0.0, -1.0),
        3 => -named::OMEGA_BAR,
        4 => -named::ETA_1,
        _ => -roots_of_negative_unity(order).roots[0],
    }
}

fn well_integral<F: Fn(f64) -> f64>(state: &BoundState, f: F) -> Result<f64> {
    Ok(integrate_scaled(f, 0.0, state.width(), 1e-12)?.value)
}

fn check_power(power: u32) -> Result<()> {
    if power == 0 || power > MAX_POWER {
        Err(NgError::UnsupportedPower(power))
    } else {
        Ok(())
    }
}

fn norm_integral(state: &BoundState) -> Result<f64> {
    let norm = match ProbabilityMeasure::for_state(state).total(state) {
        Ok(v) => v,
        // overflowing φ^j
        Err(NgError::InvalidArgument(_)) => f64::INFINITY,
        Err(e) => return Err(e),
    };
    if !norm.is_finite() || norm <= 0.0 {
        return Err(NgError::UnnormalizedState(norm));
    }
    Ok(norm)
}

pub fn expectation(state: &BoundState, observable: Observable, power: u32) -> Result<MomentReport> {
    check_power(power)?;
    let norm = norm_integral(state)?;
    let j = state.order().j() as i32;
    let raw_pairing = match observable {
        Observable::Position => {
            let v = well_integral(state, |x| {
                state.spatial_derivative_unchecked(x, 0).powi(j) * x.powi(power as i32)
            })?;
            Complex64::new(v, 0.0)
        }
        Observable::Momentum => {
            let v = well_integral(state, |x| {
                state.spatial_derivative_unchecked(x, 0).powi(j - 1)
                    * state.spatial_derivative_unchecked(x, power)
            })?;
            moment_prefactor(state.order()).powu(power) * v
        }
    };
    Ok(MomentReport {
        observable,
        power,
        value: raw_pairing / norm,
        raw_pairing,
        norm_integral: norm,
    })
}

/// Coefficients of ⟨O^m⟩, ⟨O^{m−1}⟩⟨O⟩, …, ⟨O²⟩⟨O⟩^{m−2}, ⟨O⟩^m in the
/// m-th central moment; (1, −3, 2) for m = 3 and (1, −4, 6, −3) for m = 4.
pub fn central_moment_coefficients(m: u32) -> Vec<f64> {
    let mut out = Vec::new();
    let sign = |p: u32| if p % 2 == 0 { 1.0 } else { -1.0 };
    for i in (2..=m).rev() {
        out.push(binomial(m, i) * sign(m - i));
    }
    // the i = 1 and i = 0 terms both collapse onto ⟨O⟩^m
    out.push(sign(m - 1) * (m as f64 - 1.0));
    out
}

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// ⟨(O − ⟨O⟩)^m⟩ by full binomial expansion; complex for momentum.
pub fn central_moment(state: &BoundState, observable: Observable, up_to: u32) -> Result<ComplexValue> {
    if up_to < 2 {
        return Err(NgError::UnsupportedPower(up_to));
    }
    check_power(up_to)?;
    let moments: Vec<ComplexValue> = (1..=up_to)
        .map(|k| expectation(state, observable, k).map(|r| r.value))
        .collect::<Result<_>>()?;
    let mean = moments[0];
    let coeffs = central_moment_coefficients(up_to);
    let mut total = Complex64::new(0.0, 0.0);
    for (c, i) in coeffs.iter().zip((2..=up_to).rev()) {
        total += moments[i as usize - 1] * mean.powu(up_to - i) * *c;
    }
    total += mean.powu(up_to) * coeffs[coeffs.len() - 1];
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RootBranch {
    /// radicand was a positive real; ordinary real root
    Real,
    /// radicand was negative or complex; modulus of the principal root
    PrincipalModulus,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Spread {
    pub value: f64,
    pub radicand: ComplexValue,
    pub branch: RootBranch,
}

/// (⟨O^j⟩ − ⟨O⟩^j)^{1/j} from given moments.
pub fn spread_from_moments(mean: ComplexValue, jth: ComplexValue, order: GeometryOrder) -> Spread {
    let j = order.j();
    let radicand = jth - mean.powu(j);
    let real = radicand.im.abs() <= 1e-12 * radicand.norm() && radicand.re >= 0.0;
    if real {
        Spread {
            value: radicand.re.powf(1.0 / j as f64),
            radicand,
            branch: RootBranch::Real,
        }
    } else {
        Spread {
            value: radicand.norm().powf(1.0 / j as f64),
            radicand,
            branch: RootBranch::PrincipalModulus,
        }
    }
}

pub fn generalized_uncertainty(state: &BoundState, observable: Observable) -> Result<Spread> {
    let j = state.order().j();
    let mean = expectation(state, observable, 1)?.value;
    let jth = if j == 1 {
        mean
    } else {
        expectation(state, observable, j)?.value
    };
    Ok(spread_from_moments(mean, jth, state.order()))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiagnosticRecord {
    pub radicand_x: ComplexValue,
    pub radicand_p: ComplexValue,
    pub branch_note: String,
    pub paper_value: Option<f64>,
    pub relative_deviation: Option<f64>,
}

/// Δp and the product when Δp is built from raw pairings ∫φ^{j−1} p̂^k φ
/// without dividing by ∫φ^j. Differs from the primary product only when
/// the normalization constant does not close.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AlternateProduct {
    pub delta_p: f64,
    pub product_over_hbar: f64,
    pub mean_p: ComplexValue,
    pub jth_p: ComplexValue,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UncertaintyReport {
    pub order: GeometryOrder,
    pub n: u32,
    pub family: StateFamily,
    pub mean_x: f64,
    pub mean_p: ComplexValue,
    pub jth_p: ComplexValue,
    pub delta_x: f64,
    pub delta_p: f64,
    pub product_over_hbar: f64,
    pub satisfies_heisenberg: bool,
    pub raw_pairing: AlternateProduct,
    pub diagnostics: DiagnosticRecord,
}

/// Ground-state products quoted for comparison.
pub fn reference_product(order: GeometryOrder, n: u32, family: StateFamily) -> Option<f64> {
    if n != 0 {
        return None;
    }
    match (order.j(), family) {
        (2, StateFamily::TextbookSine) => Some(0.568),
        (3, StateFamily::Printed) => Some(1.36),
        (4, StateFamily::Printed) => Some(1.07),
        _ => None,
    }
}

pub fn heisenberg_check(state: &BoundState) -> Result<UncertaintyReport> {
    let order = state.order();
    let j = order.j();
    if j < 2 {
        return Err(NgError::UnsupportedGeometry(j));
    }
    let mean_x = expectation(state, Observable::Position, 1)?;
    let jth_x = expectation(state, Observable::Position, j)?;
    let mean_p = expectation(state, Observable::Momentum, 1)?;
    let jth_p = expectation(state, Observable::Momentum, j)?;

    let sx = spread_from_moments(mean_x.value, jth_x.value, order);
    let sp = spread_from_moments(mean_p.value, jth_p.value, order);
    let product = sx.value * sp.value;

    let raw = spread_from_moments(mean_p.raw_pairing, jth_p.raw_pairing, order);
    let raw_pairing = AlternateProduct {
        delta_p: raw.value,
        product_over_hbar: sx.value * raw.value,
        mean_p: mean_p.raw_pairing,
        jth_p: jth_p.raw_pairing,
    };

    let note = |s: &Spread, name: &str| match s.branch {
        RootBranch::Real => format!("{name}: real root"),
        RootBranch::PrincipalModulus => {
            format!("{name}: radicand not a positive real, modulus of principal root")
        }
    };
    let paper_value = reference_product(order, state.n(), state.family());
    Ok(UncertaintyReport {
        order,
        n: state.n(),
        family: state.family(),
        mean_x: mean_x.value.re,
        mean_p: mean_p.value,
        jth_p: jth_p.value,
        delta_x: sx.value,
        delta_p: sp.value,
        product_over_hbar: product,
        satisfies_heisenberg: product >= 0.5,
        raw_pairing,
        diagnostics: DiagnosticRecord {
            radicand_x: sx.radicand,
            radicand_p: sp.radicand,
            branch_note: format!("{}; {}", note(&sx, "dx"), note(&sp, "dp")),
            paper_value,
            relative_deviation: paper_value.map(|v| (product - v) / v),
        },
    })
}

/// Coefficient of ħ in [x, p]: the first root of −1 by argument.
pub fn commutator_phase(order: GeometryOrder) -> ComplexValue {
    roots_of_negative_unity(order).roots[0]
}
