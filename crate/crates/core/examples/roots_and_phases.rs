//! Roots of −1 and the operator phases built from them, j = 1..6.
use ngqm::{operator_phases, roots_of_negative_unity, GeometryOrder};

fn main() -> ngqm::Result<()> {
    for j in 1..=6 {
        let order = GeometryOrder::from_j(j)?;
        let rs = roots_of_negative_unity(order);
        let ph = operator_phases(order);
        println!("{order} (j={j})");
        for (l, z) in rs.roots.iter().enumerate() {
            println!("  root {l}: {:+.6} {:+.6}i  arg {:7.2} deg", z.re, z.im, z.arg().to_degrees());
        }
        let prod = rs.product();
        println!("  product of roots: {:+.3e} {:+.3e}i", prod.re, prod.im);
        println!("  momentum phase {:.6}", ph.momentum_phase);
        println!("  energy phase   {:.6}", ph.energy_phase);
        let chain = ph.energy_chain();
        println!("  E-operator on Theta(t) gives {:.6} E", chain);
    }
    Ok(())
}
