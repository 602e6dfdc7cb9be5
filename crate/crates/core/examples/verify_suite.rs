//! Runs the full verification suite and prints anything not passing.
use ngqm::reports::verify::verification_checks;
use ngqm::PhysicalConstants;

fn main() -> ngqm::Result<()> {
    let checks = verification_checks(PhysicalConstants::default())?;
    let mut failures = 0;
    for c in &checks {
        if c.status() != "pass" {
            println!("{:<20} {:<40} {:.3e} (threshold {:.1e}) {}", c.status(), c.name, c.value, c.threshold, c.note);
        }
        failures += c.is_failure() as usize;
    }
    println!("{} checks, {failures} failures", checks.len());
    if failures > 0 {
        std::process::exit(3);
    }
    Ok(())
}
