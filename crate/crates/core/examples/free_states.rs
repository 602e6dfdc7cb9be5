//! Free-particle states: the 2G decaying state and the NG exponentials.
use ngqm::{free_state_2g, free_state_ng, FreeDomain, GeometryOrder, PhysicalConstants};

fn main() -> ngqm::Result<()> {
    let c = PhysicalConstants::default();
    for domain in [FreeDomain::HalfLine, FreeDomain::Interval { width: 2.0 }] {
        let s = free_state_2g(1.5, domain, &c)?;
        println!("2G {domain:?}: N={:?} E={:.4} eV psi(0.5,0)={:.5}", s.normalization, s.energy, s.eval(0.5, 0.0));
    }
    if let Err(e) = free_state_2g(1.5, FreeDomain::Line, &c) {
        println!("2G on the line: {e}");
    }
    for j in 2..=4 {
        let order = GeometryOrder::from_j(j)?;
        let s = free_state_ng(1.0, order, &c)?;
        println!(
            "{order}: root {:.4} E={:.4e} eV |psi(1,0)|={:.4}",
            s.spatial_root,
            s.energy,
            s.eval(1.0, 0.0).norm()
        );
    }
    Ok(())
}
