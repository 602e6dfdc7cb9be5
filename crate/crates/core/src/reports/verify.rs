use crate::error::{NgError, Result};
use crate::geometry::{named, roots_of_negative_unity, GeometryOrder};
use crate::oracle::audit::{table_audit, table_law, ScalingLaw, TABLE_Q, TABLE_WIDTHS};
use crate::oracle::quadrature::{integrate, integrate_half_line, QuadratureSpec};
use crate::oracle::residuals::{
    boundary_residual, hermiticity_defect, normalization_residual, ode_residual,
    ode_residual_literal_sign, operator_eigenvalue_check,
};
use crate::solutions::{
    dispersion_consistency_ratio, eigenenergy_closed_form, free_state_2g, BoundState, FreeDomain,
    WellConfig,
};
use crate::statistics::heisenberg_check;

use super::{Command, Report, ReportRequest};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    /// Must hold on a correct build; a miss sets exit status 3.
    Pass,
    /// A known departure of the closed forms; reported, never fatal.
    Deviation,
    /// Value recorded without a verdict.
    Info,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub expectation: Expectation,
    /// Pass: the condition held. Deviation: the deviation was observed.
    pub ok: bool,
    pub value: f64,
    pub threshold: f64,
    pub note: String,
}

impl Check {
    fn at_most(name: String, value: f64, threshold: f64) -> Self {
        Self {
            name,
            expectation: Expectation::Pass,
            ok: value <= threshold,
            value,
            threshold,
            note: format!("<= {threshold:e}"),
        }
    }

    fn above(name: String, expectation: Expectation, value: f64, threshold: f64) -> Self {
        Self {
            name,
            expectation,
            ok: value > threshold,
            value,
            threshold,
            note: format!("> {threshold:e}"),
        }
    }

    fn note(mut self, note: &str) -> Self {
        self.note = format!("{}; {note}", self.note);
        self
    }

    pub fn status(&self) -> &'static str {
        match (self.expectation, self.ok) {
            (Expectation::Pass, true) => "pass",
            (Expectation::Pass, false) => "FAIL",
            (Expectation::Deviation, true) => "expected_deviation",
            (Expectation::Deviation, false) => "deviation_not_seen",
            (Expectation::Info, _) => "info",
        }
    }

    pub fn is_failure(&self) -> bool {
        self.expectation == Expectation::Pass && !self.ok
    }
}

fn g(j: i64) -> GeometryOrder {
    GeometryOrder::from_j(j).expect("j >= 1")
}

fn root_checks(out: &mut Vec<Check>) {
    for j in 1..=8 {
        let worst = roots_of_negative_unity(g(j))
            .roots
            .iter()
            .map(|r| (r.powu(j as u32) + 1.0).norm())
            .fold(0.0_f64, f64::max);
        out.push(Check::at_most(format!("roots/j{j}"), worst, 1e-12));
    }
    let r3 = roots_of_negative_unity(g(3)).roots;
    let want3 = [named::OMEGA_BAR, named::ONE_BAR, named::OMEGA_BAR_SQ];
    let r4 = roots_of_negative_unity(g(4)).roots;
    let want4 = [named::ETA_1, named::ETA_2, named::ETA_3, named::ETA_4];
    let gap = |a: &[num_complex::Complex64], b: &[num_complex::Complex64]| {
        a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0_f64, f64::max)
    };
    out.push(Check::at_most("named_roots/j3".into(), gap(&r3, &want3), 1e-15));
    out.push(Check::at_most("named_roots/j4".into(), gap(&r4, &want4), 1e-15));
}

fn state_checks(out: &mut Vec<Check>, constants: crate::PhysicalConstants) -> Result<()> {
    for j in 2..=4 {
        let well = WellConfig::new(1.0, g(j), constants)?;
        for n in 0..=5 {
            let s = BoundState::new(&well, n)?;
            let ode = ode_residual(&s, 101)?;
            let mut c = Check::at_most(format!("ode/j{j}/n{n}"), ode.rel_to_scale, 1e-8);
            c.ok &= ode.trusted();
            out.push(c.note(&format!(
                "fd cross-check {:e}",
                ode.fd_disagreement.unwrap_or(f64::NAN)
            )));

            let b = boundary_residual(&s)?;
            let right = b.get("right").unwrap_or(f64::NAN);
            let left = b.get("left").unwrap_or(f64::NAN);
            out.push(Check::at_most(format!("boundary_right/j{j}/n{n}"), right, 1e-10));
            if j == 4 {
                out.push(Check::at_most(format!("boundary_left/j{j}/n{n}"), left, 1e-10));
            } else if n == 0 {
                out.push(
                    Check::above(format!("boundary_left/j{j}/n{n}"), Expectation::Deviation, left, 0.5)
                        .note("phi(0) != 0 for the printed form"),
                );
            }

            let norm = normalization_residual(&s)?;
            if j == 3 {
                out.push(
                    Check::above(format!("normalization/j{j}/n{n}"), Expectation::Deviation, norm.max_abs, 1e-6)
                        .note(&format!("integral of phi^3 = {:.6}", norm.get("integral").unwrap_or(f64::NAN))),
                );
            } else {
                out.push(Check::at_most(format!("normalization/j{j}/n{n}"), norm.max_abs, 1e-6));
            }
        }
        let lit = ode_residual_literal_sign(&BoundState::new(&well, 0)?, 101)?;
        if j == 3 {
            out.push(
                Check::above("ode_literal_sign/j3/n0".into(), Expectation::Deviation, lit.rel_to_scale, 1e-2)
                    .note("uniform minus sign on the kinetic term"),
            );
        }

        let want = [4.0, 1.0, 0.5][(j - 2) as usize];
        let ratio = dispersion_consistency_ratio(g(j), 0, &well)?;
        out.push(
            Check::at_most(format!("dispersion_ratio/j{j}"), (ratio - want).abs(), 1e-9)
                .note(&format!("ratio {ratio} documented {want}")),
        );
    }
    Ok(())
}

fn operator_checks(out: &mut Vec<Check>) -> Result<()> {
    for j in 1..=4 {
        let c = operator_eigenvalue_check(g(j), 1.0)?;
        let pm = c.momentum_residual();
        let pe = c.energy_residual();
        if j == 3 {
            out.push(
                Check::above(format!("operator_momentum/j{j}"), Expectation::Deviation, pm, 1.0)
                    .note(&format!("p = {} hbar k", c.momentum_eigenvalue)),
            );
        } else {
            out.push(Check::at_most(format!("operator_momentum/j{j}"), pm, 1e-12));
        }
        if j >= 3 {
            out.push(
                Check::above(format!("operator_energy/j{j}"), Expectation::Deviation, pe, 1e-12)
                    .note(&format!("E -> {} E", c.energy_eigenvalue)),
            );
        } else {
            out.push(Check::at_most(format!("operator_energy/j{j}"), pe, 1e-12));
        }
    }
    Ok(())
}

fn table_checks(out: &mut Vec<Check>, constants: crate::PhysicalConstants) -> Result<()> {
    let rows = table_audit(&TABLE_WIDTHS, &TABLE_Q, &constants)?;
    for j in 2..=4 {
        let worst = rows
            .iter()
            .filter(|r| r.order == g(j) && r.q > 0)
            .filter_map(|r| r.table_ratio.map(|t| (t - r.law_j_minus_1).abs() / r.law_j_minus_1))
            .fold(0.0_f64, f64::max);
        let mut c = Check::at_most(format!("table_law/j{j}"), worst, 0.01);
        c.ok &= table_law(&rows, g(j)) == ScalingLaw::PowerJMinus1;
        out.push(c.note("table rows follow (2q+1)^(j-1)"));
    }
    let anchors = [(2, 1.0, 0.375, 0.01), (4, 1.0, 3.44e-8, 0.01), (4, 0.05, 0.0055, 0.02), (3, 1.0, 6.25e-5, 0.10)];
    for (j, width, table, tol) in anchors {
        let well = WellConfig::new(width, g(j), constants)?;
        let e = eigenenergy_closed_form(g(j), 0, &well)?;
        out.push(
            Check::at_most(format!("table_anchor/j{j}/l{width}"), (e - table).abs() / table, tol)
                .note(&format!("closed form {e:e} eV vs table {table:e} eV")),
        );
    }
    Ok(())
}

fn hermiticity_checks(out: &mut Vec<Check>, constants: crate::PhysicalConstants) -> Result<()> {
    let w2 = WellConfig::new(1.0, g(2), constants)?;
    for (a, b) in [(0, 1), (1, 2), (0, 2), (1, 1)] {
        let d = hermiticity_defect(&BoundState::textbook_3g(&w2, a)?, &BoundState::textbook_3g(&w2, b)?)?;
        out.push(Check::at_most(format!("hermiticity/j2/textbook/{a}-{b}"), d.rel_to_scale, 1e-8));
    }
    let w3 = WellConfig::new(1.0, g(3), constants)?;
    let d = hermiticity_defect(&BoundState::new(&w3, 0)?, &BoundState::new(&w3, 1)?)?;
    out.push(
        Check::above("hermiticity/j3/0-1".into(), Expectation::Pass, d.rel_to_scale, 1e-2)
            .note("odd-order asymmetry must be detected"),
    );
    let w4 = WellConfig::new(1.0, g(4), constants)?;
    let d = hermiticity_defect(&BoundState::new(&w4, 0)?, &BoundState::new(&w4, 1)?)?;
    out.push(Check {
        name: "hermiticity/j4/0-1".into(),
        expectation: Expectation::Info,
        ok: true,
        value: d.rel_to_scale,
        threshold: f64::NAN,
        note: "boundary terms phi'' phi' - phi''' phi at x = 0, l".into(),
    });
    Ok(())
}

fn statistics_checks(out: &mut Vec<Check>, constants: crate::PhysicalConstants) -> Result<()> {
    let cases = [
        ("3G_textbook", BoundState::textbook_3g(&WellConfig::new(1.0, g(2), constants)?, 0)?),
        ("4G", BoundState::new(&WellConfig::new(1.0, g(3), constants)?, 0)?),
        ("5G", BoundState::new(&WellConfig::new(1.0, g(4), constants)?, 0)?),
    ];
    for (label, s) in cases {
        let r = heisenberg_check(&s)?;
        let c = Check {
            name: format!("heisenberg/{label}/n0"),
            expectation: Expectation::Pass,
            ok: r.satisfies_heisenberg,
            value: r.product_over_hbar,
            threshold: 0.5,
            note: ">= 5e-1".into(),
        };
        out.push(c.note(&format!(
            "raw-pairing product {:.4}; quoted {}",
            r.raw_pairing.product_over_hbar,
            r.diagnostics.paper_value.map_or("-".to_string(), |v| v.to_string())
        )));
    }
    Ok(())
}

fn free_state_checks(out: &mut Vec<Check>, constants: crate::PhysicalConstants) -> Result<()> {
    let bound = BoundState::new(&WellConfig::new(1.0, g(1), constants)?, 0);
    out.push(Check {
        name: "no_bound_states/j1".into(),
        expectation: Expectation::Pass,
        ok: matches!(bound, Err(NgError::NoBoundStates)),
        value: f64::NAN,
        threshold: f64::NAN,
        note: "bound-state request must fail".into(),
    });
    let spec = QuadratureSpec::default();
    for k in [0.1, 1.0, 10.0] {
        let s = free_state_2g(k, FreeDomain::HalfLine, &constants)?;
        let q = integrate_half_line(|x| s.eval(x, 0.0).re, k, &spec)?;
        out.push(Check::at_most(format!("free_norm/half_line/k{k}"), (q.value - 1.0).abs(), 1e-10));
        let s = free_state_2g(k, FreeDomain::Interval { width: 1.0 }, &constants)?;
        let q = integrate(|x| s.eval(x, 0.0).re, 0.0, 1.0, &spec)?;
        out.push(Check::at_most(format!("free_norm/interval/k{k}"), (q.value - 1.0).abs(), 1e-10));
    }
    Ok(())
}

/// The full suite, in a fixed order.
pub fn verification_checks(constants: crate::PhysicalConstants) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    root_checks(&mut out);
    state_checks(&mut out, constants)?;
    operator_checks(&mut out)?;
    table_checks(&mut out, constants)?;
    hermiticity_checks(&mut out, constants)?;
    statistics_checks(&mut out, constants)?;
    free_state_checks(&mut out, constants)?;
    Ok(out)
}

/// Columns: check, expectation, status, value, threshold, note.
pub fn run_verify(req: &ReportRequest) -> Result<Report> {
    let checks = verification_checks(req.constants)?;
    let mut report = Report::new(
        Command::Verify,
        &["check", "expectation", "status", "value", "threshold", "note"],
    );
    for c in &checks {
        let exp = match c.expectation {
            Expectation::Pass => "pass",
            Expectation::Deviation => "deviation",
            Expectation::Info => "info",
        };
        report.push(vec![
            c.name.clone().into(),
            exp.into(),
            c.status().into(),
            c.value.into(),
            c.threshold.into(),
            c.note.clone().into(),
        ]);
    }
    let failures = checks.iter().filter(|c| c.is_failure()).count();
    report.failures = failures;
    let report = report
        .param("checks", checks.len())
        .param("failures", failures);
    Ok(report)
}
