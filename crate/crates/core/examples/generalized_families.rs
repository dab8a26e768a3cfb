//! Cubic, quadruple and generalized Paley graphs side by side.
//!
//! Run with `cargo run --example generalized_families`.

use paleylab::field::Field;
use paleylab::graph::{build_family, Family, FamilySpec};
use paleylab::properties::{components, is_regular, iso_to_cycle, srg_check};

fn main() -> paleylab::Result<()> {
    let cases = [
        (Family::CubicPaley, 7),
        (Family::CubicPaley, 13),
        (Family::QuadruplePaley, 17),
        (Family::QuadruplePaley, 41),
        (Family::GeneralizedPaley { k: 5 }, 11),
        (Family::GeneralizedPaley { k: 3 }, 16),
        (Family::GeneralizedPaley { k: 4 }, 81),
    ];
    for (family, q) in cases {
        let spec = FamilySpec::new(family, Field::with_order(q)?);
        let g = build_family(&spec)?;
        println!(
            "{:<20} degree {:>3}  components {:>2}  cycle {:<5}  srg {}",
            g.label(),
            is_regular(&g).unwrap_or(0),
            components(&g).len(),
            iso_to_cycle(&g),
            srg_check(&g).map_or("no".to_string(), |s| format!("({},{},{},{})", s.n, s.k, s.lambda, s.mu)),
        );
    }

    // Congruence conditions are checked before any graph is built.
    let bad = FamilySpec::new(Family::CubicPaley, Field::with_order(11)?);
    println!("\nCubicPaley(11): {}", build_family(&bad).unwrap_err());
    Ok(())
}
