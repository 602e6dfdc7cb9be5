//! Integrates phi^j over the well and reports how far each closed-form
//! normalization constant is from giving 1.
use ngqm::oracle::{boundary_residual, normalization_residual, ode_residual};
use ngqm::{BoundState, GeometryOrder, WellConfig};

fn main() -> ngqm::Result<()> {
    for j in 2..=4 {
        let order = GeometryOrder::from_j(j)?;
        let well = WellConfig::electron(1.0, order)?;
        println!("{order}");
        for n in 0..5 {
            let s = BoundState::new(&well, n)?;
            let norm = normalization_residual(&s)?;
            let ode = ode_residual(&s, 64)?;
            let walls = boundary_residual(&s)?;
            println!(
                "  n={n} N={:.8} int={:.8} ode={:.1e} left={:.1e} right={:.1e}",
                s.normalization(),
                norm.get("integral").unwrap_or(f64::NAN),
                ode.rel_to_scale,
                walls.get("left").unwrap_or(f64::NAN),
                walls.get("right").unwrap_or(f64::NAN),
            );
        }
    }
    Ok(())
}
