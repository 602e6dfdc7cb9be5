//! Independent numeric checks: quadrature, finite differences, residuals of
//! the closed forms and the energy-table audit.

pub mod audit;
pub mod derivative;
pub mod quadrature;
pub mod residuals;

pub use audit::{table_audit, table_law, table_value, AuditRow, ScalingLaw};
pub use derivative::derivative;
pub use quadrature::{integrate, integrate_half_line, integrate_scaled, QuadValue, Quadrature, QuadratureSpec};
pub use residuals::{
    boundary_residual, hermiticity_defect, kinetic_sign, normalization_residual, ode_residual,
    ode_residual_literal_sign, operator_eigenvalue_check, OperatorEigenCheck, ResidualKind,
    ResidualReport,
};
