use crate::error::Result;
use crate::geometry::dispersion_energy;
use crate::oracle::audit::{table_audit, ScalingLaw, TABLE_Q, TABLE_WIDTHS};
use crate::solutions::{dispersion_consistency_ratio, BoundState, StateFamily, WellConfig};
use crate::statistics::{heisenberg_check, probability_density};

use super::{Command, Report, ReportRequest};

/// ⟨p³⟩·l³/ħ³ quoted for the 4G ground state.
pub const PUBLISHED_4G_P3: f64 = 21.6;

fn family(req: &ReportRequest) -> StateFamily {
    if req.textbook_3g {
        StateFamily::TextbookSine
    } else {
        StateFamily::Printed
    }
}

fn family_name(f: StateFamily) -> &'static str {
    match f {
        StateFamily::Printed => "printed",
        StateFamily::TextbookSine => "textbook_sine",
    }
}

fn common(report: Report, req: &ReportRequest) -> Report {
    report
        .param("geometry", req.geometry.to_string())
        .param("j", req.geometry.j())
        .param("width_nm", req.width)
}

/// Columns: n, k_n_per_nm, energy_ev, normalization, dispersion_ratio.
pub fn run_spectrum(req: &ReportRequest) -> Result<Report> {
    let well = WellConfig::new(req.width, req.geometry, req.constants)?;
    let fam = family(req);
    let mut report = common(
        Report::new(
            Command::Spectrum,
            &["n", "k_n_per_nm", "energy_ev", "normalization", "dispersion_ratio"],
        ),
        req,
    )
    .param("levels", req.levels)
    .param("family", family_name(fam));
    for n in 0..req.levels {
        let s = BoundState::with_family(&well, n, fam)?;
        let ratio = match fam {
            StateFamily::Printed => dispersion_consistency_ratio(req.geometry, n, &well)?,
            StateFamily::TextbookSine => s.energy() / s.dispersion_energy(),
        };
        report.push(vec![
            n.into(),
            s.k_n().into(),
            s.energy().into(),
            s.normalization().into(),
            ratio.into(),
        ]);
    }
    Ok(report)
}

/// Δx/l, Δp·l/ħ and the product for state `n`, on the normalized route and
/// on the raw-pairing route.
pub fn run_uncertainty(req: &ReportRequest) -> Result<Report> {
    let well = WellConfig::new(req.width, req.geometry, req.constants)?;
    let fam = family(req);
    let s = BoundState::with_family(&well, req.n, fam)?;
    let r = heisenberg_check(&s)?;
    let l = req.width;
    let j = req.geometry.j() as i32;
    let published_p3 = (req.geometry.j() == 3 && req.n == 0).then_some(PUBLISHED_4G_P3);
    let mut report = common(
        Report::new(
            Command::Uncertainty,
            &[
                "geometry",
                "n",
                "family",
                "mean_x_over_l",
                "delta_x_over_l",
                "delta_p_times_l",
                "product_over_hbar",
                "satisfies_heisenberg",
                "jth_p_re",
                "jth_p_im",
                "raw_jth_p_re",
                "raw_jth_p_im",
                "raw_delta_p_times_l",
                "raw_product_over_hbar",
                "published_jth_p",
                "paper_product",
                "relative_deviation",
                "radicand_p_re",
                "radicand_p_im",
                "branch_note",
            ],
        ),
        req,
    )
    .param("n", req.n)
    .param("family", family_name(fam));
    // moments of p^j scale as l^{-j}
    let lj = l.powi(j);
    report.push(vec![
        req.geometry.to_string().into(),
        req.n.into(),
        family_name(fam).into(),
        (r.mean_x / l).into(),
        (r.delta_x / l).into(),
        (r.delta_p * l).into(),
        r.product_over_hbar.into(),
        r.satisfies_heisenberg.into(),
        (r.jth_p.re * lj).into(),
        (r.jth_p.im * lj).into(),
        (r.raw_pairing.jth_p.re * lj).into(),
        (r.raw_pairing.jth_p.im * lj).into(),
        (r.raw_pairing.delta_p * l).into(),
        r.raw_pairing.product_over_hbar.into(),
        published_p3.into(),
        r.diagnostics.paper_value.into(),
        r.diagnostics.relative_deviation.into(),
        (r.diagnostics.radicand_p.re * lj).into(),
        (r.diagnostics.radicand_p.im * lj).into(),
        r.diagnostics.branch_note.clone().into(),
    ]);
    Ok(report)
}

/// E(k) on a log-spaced grid with E/p, the log-log slope and a
/// finite-difference group velocity.
pub fn run_dispersion(req: &ReportRequest) -> Result<Report> {
    let c = &req.constants;
    let order = req.geometry;
    let mut report = Report::new(
        Command::Dispersion,
        &[
            "k_per_nm",
            "energy_ev",
            "phase_velocity_over_c",
            "log_slope",
            "group_velocity_over_c_derived",
        ],
    )
    .param("geometry", order.to_string())
    .param("j", order.j())
    .param("k_min", req.k_min)
    .param("k_max", req.k_max)
    .param("points", req.points);
    let (a, b) = (req.k_min.ln(), req.k_max.ln());
    let last = req.points - 1;
    for i in 0..req.points {
        let k = if i == 0 {
            req.k_min
        } else if i == last {
            req.k_max
        } else {
            (a + (b - a) * i as f64 / last as f64).exp()
        };
        let e = dispersion_energy(k, order, c)?;
        let pc = c.hbar_c * k;
        let h = 1e-4;
        let (lo, hi) = (k * (1.0 - h), k * (1.0 + h));
        let (elo, ehi) = (dispersion_energy(lo, order, c)?, dispersion_energy(hi, order, c)?);
        let slope = (ehi / elo).ln() / (hi / lo).ln();
        let group = (ehi - elo) / (c.hbar_c * (hi - lo));
        report.push(vec![k.into(), e.into(), (e / pc).into(), slope.into(), group.into()]);
    }
    Ok(report)
}

/// (x, φ, φ^j) on a uniform grid including both walls.
pub fn run_state_dump(req: &ReportRequest) -> Result<Report> {
    let well = WellConfig::new(req.width, req.geometry, req.constants)?;
    let fam = family(req);
    let s = BoundState::with_family(&well, req.n, fam)?;
    let mut report = common(Report::new(Command::StateDump, &["x_nm", "phi", "density"]), req)
        .param("n", req.n)
        .param("family", family_name(fam))
        .param("samples", req.samples);
    for x in s.grid(req.samples) {
        let d = probability_density(&s, x)?;
        report.push(vec![x.into(), s.spatial_derivative(x, 0)?.into(), d.value.into()]);
    }
    Ok(report)
}

fn law_name(l: ScalingLaw) -> &'static str {
    match l {
        ScalingLaw::PowerJ => "(2q+1)^j",
        ScalingLaw::PowerJMinus1 => "(2q+1)^(j-1)",
        ScalingLaw::Neither => "neither",
    }
}

/// Closed-form energies against the published table for every tabulated
/// width and quantum number.
pub fn run_table_audit(req: &ReportRequest) -> Result<Report> {
    let rows = table_audit(&TABLE_WIDTHS, &TABLE_Q, &req.constants)?;
    let mut report = Report::new(
        Command::TableAudit,
        &[
            "geometry",
            "width_nm",
            "q",
            "closed_form_ev",
            "table_ev",
            "table_ratio",
            "law_j",
            "law_j_minus_1",
            "follows",
        ],
    );
    for r in rows {
        report.push(vec![
            r.order.to_string().into(),
            r.width.into(),
            r.q.into(),
            r.closed_form_ev.into(),
            r.table_ev.into(),
            r.table_ratio.into(),
            r.law_j.into(),
            r.law_j_minus_1.into(),
            r.follows.map(law_name).into(),
        ]);
    }
    Ok(report)
}
