//! Position and momentum spreads and their product for the low states.
use ngqm::{heisenberg_check, BoundState, GeometryOrder, StateFamily, WellConfig};

fn main() -> ngqm::Result<()> {
    let cases = [
        (GeometryOrder::THREE_G, StateFamily::TextbookSine),
        (GeometryOrder::THREE_G, StateFamily::Printed),
        (GeometryOrder::FOUR_G, StateFamily::Printed),
        (GeometryOrder::FIVE_G, StateFamily::Printed),
    ];
    for (order, family) in cases {
        let well = WellConfig::electron(1.0, order)?;
        for n in 0..3 {
            let s = BoundState::with_family(&well, n, family)?;
            let r = heisenberg_check(&s)?;
            println!(
                "{order} {family:?} n={n}: <x>={:.5} dx={:.5} dp={:.5} product={:.5} (raw route {:.5}){}",
                r.mean_x,
                r.delta_x,
                r.delta_p,
                r.product_over_hbar,
                r.raw_pairing.product_over_hbar,
                if r.satisfies_heisenberg { "" } else { "  below 1/2" },
            );
        }
    }
    Ok(())
}
