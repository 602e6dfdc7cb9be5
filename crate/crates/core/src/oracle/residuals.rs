//! Residual checks of the closed forms against their defining equations.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{NgError, Result};
use crate::geometry::{operator_phases, ComplexValue, GeometryOrder};
use crate::oracle::derivative::derivative;
use crate::oracle::quadrature::{integrate, integrate_scaled, QuadratureSpec};
use crate::solutions::BoundState;

/// Analytic and finite-difference derivatives must agree this closely
/// (relative to the largest analytic value) before a residual is trusted.
pub const FD_AGREEMENT: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ResidualKind {
    Ode,
    Boundary,
    Eigenvalue,
    Normalization,
    Hermiticity,
    OperatorEigenvalue,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Component {
    pub label: String,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResidualReport {
    pub kind: ResidualKind,
    pub max_abs: f64,
    pub rel_to_scale: f64,
    pub sample_points: usize,
    /// Max relative gap between analytic and finite-difference derivatives;
    /// `None` when no cross-check was run.
    pub fd_disagreement: Option<f64>,
    pub components: Vec<Component>,
}

impl ResidualReport {
    fn new(kind: ResidualKind, max_abs: f64, rel_to_scale: f64, sample_points: usize) -> Self {
        Self {
            kind,
            max_abs,
            rel_to_scale,
            sample_points,
            fd_disagreement: None,
            components: Vec::new(),
        }
    }

    fn component(mut self, label: &str, value: f64) -> Self {
        self.components.push(Component {
            label: label.to_string(),
            value,
        });
        self
    }

    pub fn get(&self, label: &str) -> Option<f64> {
        self.components.iter().find(|c| c.label == label).map(|c| c.value)
    }

    /// Cross-check absent or within [`FD_AGREEMENT`].
    pub fn trusted(&self) -> bool {
        self.fd_disagreement.map_or(true, |d| d <= FD_AGREEMENT)
    }
}

fn check_bound(order: GeometryOrder) -> Result<()> {
    match order.j() {
        2..=4 => Ok(()),
        j => Err(NgError::UnsupportedGeometry(j)),
    }
}

/// Sign in front of the kinetic term: − for even j, + for odd j.
pub fn kinetic_sign(order: GeometryOrder) -> f64 {
    if order.j() % 2 == 0 {
        -1.0
    } else {
        1.0
    }
}

/// (ħc)^j / (j (mc²)^{j−1}) in eV·nm^j.
fn kinetic_coefficient(state: &BoundState) -> f64 {
    let c = &state.well().constants;
    let j = state.order().j() as i32;
    c.rest_energy * (c.hbar_c / c.rest_energy).powi(j) / j as f64
}

fn interior(state: &BoundState, samples: usize) -> Vec<f64> {
    let l = state.width();
    (1..=samples)
        .map(|i| l * i as f64 / (samples + 1) as f64)
        .collect()
}

fn ode_with_sign(state: &BoundState, samples: usize, sign: f64) -> Result<ResidualReport> {
    check_bound(state.order())?;
    if samples == 0 {
        return Err(NgError::EmptyInput);
    }
    let j = state.order().j();
    let coeff = kinetic_coefficient(state);
    let energy = state.dispersion_energy();
    let xs = interior(state, samples);
    let max_phi = xs
        .iter()
        .map(|&x| state.spatial_derivative_unchecked(x, 0).abs())
        .fold(0.0_f64, f64::max);

    let mut max_abs = 0.0_f64;
    let mut max_dj = 0.0_f64;
    let mut max_gap = 0.0_f64;
    let step = 0.05 / state.k_n();
    let mut fd_ok = true;
    for &x in &xs {
        let phi = state.spatial_derivative_unchecked(x, 0);
        let dj = state.spatial_derivative_unchecked(x, j);
        max_abs = max_abs.max((sign * coeff * dj - energy * phi).abs());
        max_dj = max_dj.max(dj.abs());
        match derivative(|y| state.spatial_derivative_unchecked(y, 0), x, j, step) {
            Ok(fd) => max_gap = max_gap.max((fd - dj).abs()),
            Err(_) => fd_ok = false,
        }
    }
    let mut r = ResidualReport::new(ResidualKind::Ode, max_abs, max_abs / (energy * max_phi), samples);
    if fd_ok && max_dj > 0.0 {
        r.fd_disagreement = Some(max_gap / max_dj);
    }
    Ok(r.component("kinetic_sign", sign).component("energy_ev", energy))
}

/// Relative residual of ±(ħc)^j/(j(mc²)^{j−1}) φ^{(j)} = E φ at `samples`
/// interior points, with E from the dispersion relation at k_n and the sign
/// from [`kinetic_sign`].
pub fn ode_residual(state: &BoundState, samples: usize) -> Result<ResidualReport> {
    ode_with_sign(state, samples, kinetic_sign(state.order()))
}

/// Same residual with a minus sign for every j.
pub fn ode_residual_literal_sign(state: &BoundState, samples: usize) -> Result<ResidualReport> {
    ode_with_sign(state, samples, -1.0)
}

/// |φ(0)| and |φ(l)| over max|φ| on a 1024-point grid.
pub fn boundary_residual(state: &BoundState) -> Result<ResidualReport> {
    check_bound(state.order())?;
    let max_phi = state
        .grid(1024)
        .iter()
        .map(|&x| state.spatial_derivative_unchecked(x, 0).abs())
        .fold(0.0_f64, f64::max);
    let left = state.spatial_derivative_unchecked(0.0, 0).abs();
    let right = state.spatial_derivative_unchecked(state.width(), 0).abs();
    let worst = left.max(right);
    Ok(ResidualReport::new(ResidualKind::Boundary, worst, worst / max_phi, 2)
        .component("left", left / max_phi)
        .component("right", right / max_phi))
}

/// |∫φ^j − 1|.
pub fn normalization_residual(state: &BoundState) -> Result<ResidualReport> {
    check_bound(state.order())?;
    let j = state.order().j() as i32;
    let q = integrate(
        |x| state.spatial_derivative_unchecked(x, 0).powi(j),
        0.0,
        state.width(),
        &QuadratureSpec::default(),
    )?;
    let gap = (q.value - 1.0).abs();
    Ok(ResidualReport::new(ResidualKind::Normalization, gap, gap, q.evaluations)
        .component("integral", q.value)
        .component("quadrature_error", q.error))
}

/// Eigenvalues of p̂ and Ê on the free state exp(r k x) Θ(t), in units of
/// ħk and E.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OperatorEigenCheck {
    pub order: GeometryOrder,
    pub k: f64,
    pub spatial_root: ComplexValue,
    pub momentum_eigenvalue: ComplexValue,
    pub energy_eigenvalue: ComplexValue,
    pub report: ResidualReport,
}

impl OperatorEigenCheck {
    pub fn momentum_residual(&self) -> f64 {
        (self.momentum_eigenvalue - 1.0).norm()
    }
    pub fn energy_residual(&self) -> f64 {
        (self.energy_eigenvalue - 1.0).norm()
    }
}

/// Applies p̂ = (momentum phase)·ħ d/dx to exp(r k x), r = −1 for j = 1 and
/// the energy root otherwise, and Ê = (energy phase)·ħ d/dt to Θ. Deviations
/// from +ħk and +E are reported as found.
pub fn operator_eigenvalue_check(order: GeometryOrder, k: f64) -> Result<OperatorEigenCheck> {
    if !(k.is_finite() && k > 0.0) {
        return Err(NgError::NonpositiveWavenumber(k));
    }
    let phases = operator_phases(order);
    let spatial_root = if order.j() == 1 {
        Complex64::new(-1.0, 0.0)
    } else {
        phases.energy_phase
    };
    // d/dx exp(r k x) = r k exp(r k x)
    let momentum_eigenvalue = phases.momentum_phase * spatial_root;
    let energy_eigenvalue = phases.energy_chain();
    let pm = (momentum_eigenvalue - 1.0).norm();
    let pe = (energy_eigenvalue - 1.0).norm();
    let report = ResidualReport::new(ResidualKind::OperatorEigenvalue, pm.max(pe), pm.max(pe), 1)
        .component("momentum", pm)
        .component("energy", pe);
    Ok(OperatorEigenCheck {
        order,
        k,
        spatial_root,
        momentum_eigenvalue,
        energy_eigenvalue,
        report,
    })
}

/// |∫f·Ĥg − ∫(Ĥf)·g| / max(|∫f·Ĥg|, |∫(Ĥf)·g|, ‖f‖‖Ĥg‖) with Ĥ ∝ d^j/dx^j
/// and the ordinary (non-conjugated) pairing on [0, l].
pub fn hermiticity_defect(f: &BoundState, g: &BoundState) -> Result<ResidualReport> {
    let order = f.order();
    check_bound(order)?;
    if g.order() != order {
        return Err(NgError::InvalidArgument(format!(
            "states belong to different geometries: {} and {}",
            f.order(),
            g.order()
        )));
    }
    if f.width() != g.width() {
        return Err(NgError::InvalidArgument("states live in different wells".into()));
    }
    let j = order.j();
    let coeff = kinetic_sign(order) * kinetic_coefficient(f);
    let l = f.width();
    let phi = |s: &BoundState, x: f64, d: u32| s.spatial_derivative_unchecked(x, d);
    let q = |h: &dyn Fn(f64) -> f64| integrate_scaled(h, 0.0, l, 1e-12).map(|r| r.value);
    let lhs = q(&|x| phi(f, x, 0) * coeff * phi(g, x, j))?;
    let rhs = q(&|x| coeff * phi(f, x, j) * phi(g, x, 0))?;
    let ff = q(&|x| phi(f, x, 0).powi(2))?;
    let hh = q(&|x| (coeff * phi(g, x, j)).powi(2))?;
    let floor = (ff * hh).sqrt();
    let gap = (lhs - rhs).abs();
    let denom = lhs.abs().max(rhs.abs()).max(floor);
    Ok(ResidualReport::new(ResidualKind::Hermiticity, gap, gap / denom, 2)
        .component("f_h_g", lhs)
        .component("h_f_g", rhs)
        .component("cauchy_schwarz", floor))
}
