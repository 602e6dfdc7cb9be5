//! Quantum mechanics with a power-law dispersion E ∝ |p|^j.
//!
//! The crate covers the roots of −1 that fix the operator phases, closed-form
//! infinite-well bound states for j = 2, 3, 4, the j-fold probability
//! measure with its moments and uncertainty products, and a numeric layer
//! (quadrature, finite differences, residuals) that checks all of it.
//!
//! ```
//! use ngqm::{BoundState, GeometryOrder, WellConfig};
//!
//! let well = WellConfig::electron(1.0, GeometryOrder::FIVE_G).unwrap();
//! let ground = BoundState::new(&well, 0).unwrap();
//! assert!((ground.energy() - 3.4589e-8).abs() < 1e-11);
//! ```

pub mod constants;
pub mod error;
pub mod geometry;
pub mod oracle;
pub mod reports;
pub mod solutions;
pub mod statistics;

pub use constants::PhysicalConstants;
pub use error::{NgError, Result};
pub use geometry::{
    dispersion_energy, lj_norm, minkowski_distance, operator_phases, roots_of_negative_unity,
    ComplexValue, GeometryOrder, OperatorPhases, RootSet,
};
pub use solutions::{
    dispersion_consistency_ratio, eigenenergy_closed_form, eval_spatial, eval_state, eval_temporal,
    free_state_2g, free_state_ng, normalization_constant, quantization_wavenumber, BoundState,
    FreeDomain, FreeState, StateFamily, WellConfig,
};
pub use statistics::{
    central_moment, commutator_phase, expectation, generalized_uncertainty, heisenberg_check,
    probability_density, MomentReport, Observable, UncertaintyReport,
};
