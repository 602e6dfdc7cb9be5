//! Audit of the published ground/excited-state energy table against the
//! closed-form energies and the two candidate scaling laws.

use serde::Serialize;

use crate::constants::PhysicalConstants;
use crate::error::{NgError, Result};
use crate::geometry::GeometryOrder;
use crate::solutions::{eigenenergy_closed_form, WellConfig};

/// Quantum numbers and widths (nm) of the published table.
pub const TABLE_Q: [u32; 5] = [0, 3, 6, 9, 12];
pub const TABLE_WIDTHS: [f64; 3] = [1.0, 0.25, 0.05];

// [j-2][width index][q index], eV
const TABLE: [[[f64; 5]; 3]; 3] = [
    [
        [0.375, 2.62, 4.875, 7.125, 9.375],
        [6.0, 42.0, 78.0, 114.0, 150.0],
        [150.0, 1050.0, 1950.0, 2850.0, 3750.0],
    ],
    [
        [0.0000625, 0.0030625, 0.0105625, 0.0225625, 0.0390625],
        [0.004, 0.196, 0.676, 1.444, 2.5],
        [0.5, 24.5, 84.5, 180.5, 312.5],
    ],
    [
        [3.44e-8, 1.18e-5, 7.55e-5, 0.000235778, 0.000537109],
        [0.0000088, 0.0030184, 0.0193336, 0.0603592, 0.1375],
        [0.0055, 1.8865, 12.0835, 37.7245, 85.9375],
    ],
];

/// Relative tolerance for calling a table ratio consistent with a law.
pub const LAW_TOLERANCE: f64 = 0.01;

/// Published value for (geometry, width, q), if the table has one.
pub fn table_value(order: GeometryOrder, width: f64, q: u32) -> Option<f64> {
    let j = order.j() as usize;
    if !(2..=4).contains(&j) {
        return None;
    }
    let wi = TABLE_WIDTHS.iter().position(|&w| w == width)?;
    let qi = TABLE_Q.iter().position(|&t| t == q)?;
    Some(TABLE[j - 2][wi][qi])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScalingLaw {
    /// (2q+1)^j, what the closed forms give
    PowerJ,
    /// (2q+1)^{j−1}
    PowerJMinus1,
    Neither,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditRow {
    pub order: GeometryOrder,
    pub width: f64,
    pub q: u32,
    pub closed_form_ev: f64,
    pub table_ev: Option<f64>,
    /// table(q) / table(0)
    pub table_ratio: Option<f64>,
    pub law_j: f64,
    pub law_j_minus_1: f64,
    pub follows: Option<ScalingLaw>,
}

pub fn classify(ratio: f64, q: u32, order: GeometryOrder) -> ScalingLaw {
    let base = (2 * q + 1) as f64;
    let j = order.j() as i32;
    let dev = |law: f64| (ratio - law).abs() / law;
    let (dj, dj1) = (dev(base.powi(j)), dev(base.powi(j - 1)));
    // at q = 0 both laws give 1
    if q == 0 {
        return ScalingLaw::PowerJ;
    }
    if dj1 <= LAW_TOLERANCE && dj1 < dj {
        ScalingLaw::PowerJMinus1
    } else if dj <= LAW_TOLERANCE {
        ScalingLaw::PowerJ
    } else {
        ScalingLaw::Neither
    }
}

/// One row per (j, width, q) for j = 2, 3, 4.
pub fn table_audit(widths: &[f64], qs: &[u32], constants: &PhysicalConstants) -> Result<Vec<AuditRow>> {
    if widths.is_empty() || qs.is_empty() {
        return Err(NgError::EmptyInput);
    }
    let mut rows = Vec::new();
    for j in 2..=4 {
        let order = GeometryOrder::from_j(j)?;
        for &width in widths {
            let well = WellConfig::new(width, order, *constants)?;
            let base_table = table_value(order, width, 0);
            for &q in qs {
                let closed = eigenenergy_closed_form(order, q, &well)?;
                let table_ev = table_value(order, width, q);
                let table_ratio = match (table_ev, base_table) {
                    (Some(v), Some(b)) => Some(v / b),
                    _ => None,
                };
                let base = (2 * q + 1) as f64;
                rows.push(AuditRow {
                    order,
                    width,
                    q,
                    closed_form_ev: closed,
                    table_ev,
                    table_ratio,
                    law_j: base.powi(j as i32),
                    law_j_minus_1: base.powi(j as i32 - 1),
                    follows: table_ratio.map(|r| classify(r, q, order)),
                });
            }
        }
    }
    Ok(rows)
}

/// Law followed by every q > 0 row of a geometry, or `Neither` if the rows
/// disagree.
pub fn table_law(rows: &[AuditRow], order: GeometryOrder) -> ScalingLaw {
    let mut laws = rows
        .iter()
        .filter(|r| r.order == order && r.q > 0)
        .filter_map(|r| r.follows);
    match laws.next() {
        Some(first) if laws.all(|l| l == first) => first,
        _ => ScalingLaw::Neither,
    }
}
