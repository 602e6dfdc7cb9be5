//! E(k) for each geometry on a short log grid, with the phase velocity.
use ngqm::{dispersion_energy, GeometryOrder, PhysicalConstants};

fn main() -> ngqm::Result<()> {
    let c = PhysicalConstants::default();
    println!("{:>10} {:>14} {:>14} {:>14} {:>14}", "k (1/nm)", "2G", "3G", "4G", "5G");
    for i in 0..9 {
        let k = 10f64.powf(-2.0 + 0.5 * i as f64);
        print!("{k:>10.3e}");
        for j in 1..=4 {
            let e = dispersion_energy(k, GeometryOrder::from_j(j)?, &c)?;
            print!(" {e:>14.6e}");
        }
        println!();
    }
    let k = 1.0;
    for j in 1..=4 {
        let e = dispersion_energy(k, GeometryOrder::from_j(j)?, &c)?;
        println!("j={j}: E/pc at k=1 is {:.3e}", e / (c.hbar_c * k));
    }
    Ok(())
}
