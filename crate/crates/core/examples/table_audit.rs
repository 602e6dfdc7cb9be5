//! Compares the tabulated well energies against the closed form and
//! classifies how each column scales with q.
use ngqm::oracle::{table_audit, table_law, ScalingLaw};
use ngqm::{GeometryOrder, PhysicalConstants};

fn tag(law: ScalingLaw) -> &'static str {
    match law {
        ScalingLaw::PowerJ => "(2q+1)^j",
        ScalingLaw::PowerJMinus1 => "(2q+1)^(j-1)",
        ScalingLaw::Neither => "neither",
    }
}

fn main() -> ngqm::Result<()> {
    let rows = table_audit(&[1.0, 0.25, 0.05], &[0, 3, 6, 9, 12], &PhysicalConstants::default())?;
    for r in &rows {
        let Some(table) = r.table_ev else { continue };
        println!(
            "{} l={:<5} q={:<2} table={:.4e} closed={:.4e} ratio={:>7.3} follows={}",
            r.order, r.width, r.q, table, r.closed_form_ev, r.table_ratio.unwrap_or(f64::NAN), r.follows.map(tag).unwrap_or("-")
        );
    }
    for j in 2..=4 {
        let order = GeometryOrder::from_j(j)?;
        let law = table_law(&rows, order);
        println!("{order}: table scales as {}", tag(law));
    }
    Ok(())
}
