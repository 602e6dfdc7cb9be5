//! Bound-state energies in an infinite well for each geometry and width.
use ngqm::{BoundState, GeometryOrder, WellConfig};

fn main() -> ngqm::Result<()> {
    for order in [GeometryOrder::THREE_G, GeometryOrder::FOUR_G, GeometryOrder::FIVE_G] {
        for width in [1.0, 0.25, 0.05] {
            let well = WellConfig::electron(width, order)?;
            print!("{order} l={width:<5}");
            for n in 0..4 {
                let s = BoundState::new(&well, n)?;
                print!("  E{n}={:.4e} eV", s.energy());
            }
            println!();
        }
    }

    // the textbook sine family in 3G for comparison
    let well = WellConfig::electron(1.0, GeometryOrder::THREE_G)?;
    let s = BoundState::textbook_3g(&well, 0)?;
    println!("3G textbook ground state: k={:.4} /nm, E={:.4} eV", s.k_n(), s.energy());
    Ok(())
}
