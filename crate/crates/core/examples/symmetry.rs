//! Verifies affine automorphisms x -> a*x + b and reports vertex and arc orbits.
//!
//! Run with `cargo run --example symmetry`.

use paleylab::field::Field;
use paleylab::graph::{build_family, Family, FamilySpec};
use paleylab::properties::affine_transitivity;

fn main() -> paleylab::Result<()> {
    let cases = [
        (Family::Paley, 13),
        (Family::Paley, 25),
        (Family::MPaley { m: 13 }, 27),
        (Family::MPaley { m: 3 }, 19),
        (Family::CubicPaley, 31),
        (Family::PStar, 9),
    ];
    for (family, q) in cases {
        let g = build_family(&FamilySpec::new(family, Field::with_order(q)?))?;
        let c = g.cayley().unwrap();
        match affine_transitivity(&g, &c.field, &c.connection) {
            Ok(r) => println!(
                "{:<16} maps {:>4}  vertex orbit {:>3}/{:<3} arc orbit {:>4}/{:<4} -> vertex {} edge {}",
                g.label(),
                r.maps_checked,
                r.vertex_orbit,
                g.order(),
                r.arc_orbit,
                2 * g.edge_count(),
                r.vertex_transitive,
                r.edge_transitive
            ),
            // P* connection sets are not closed under multiplication.
            Err(w) => println!("{:<16} affine map is not an automorphism: {:?}", g.label(), w.kind),
        }
    }
    Ok(())
}
