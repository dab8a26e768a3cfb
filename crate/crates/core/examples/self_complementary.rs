//! Finds a multiplier x -> r*x taking a Cayley graph onto its complement.
//!
//! Run with `cargo run --example self_complementary`.

use paleylab::field::Field;
use paleylab::graph::{build_family, Family, FamilySpec};
use paleylab::properties::self_complementary_by_multiplier;

fn main() -> paleylab::Result<()> {
    let cases = [
        (Family::Paley, 5),
        (Family::Paley, 13),
        (Family::Paley, 81),
        (Family::PStar, 9),
        (Family::PStar, 49),
        (Family::MPaley { m: 3 }, 7),
        (Family::MPaley { m: 3 }, 13),
    ];
    for (family, q) in cases {
        let g = build_family(&FamilySpec::new(family, Field::with_order(q)?))?;
        let c = g.cayley().unwrap();
        match self_complementary_by_multiplier(&g, &c.field, &c.connection) {
            Some(r) => println!("{:<16} self-complementary via x -> ({})x", g.label(), c.field.format(r)),
            None => println!(
                "{:<16} no multiplier ({} edges, complement has {})",
                g.label(),
                g.edge_count(),
                g.complement().edge_count()
            ),
        }
    }
    Ok(())
}
