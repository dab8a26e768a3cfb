//! Exhaustive n-e.c. and P(m,n,k) searches on Paley graphs.
//!
//! Run with `cargo run --release --example existential_closure`.

use std::time::Instant;

use paleylab::field::Field;
use paleylab::graph::{build_family, Family, FamilySpec};
use paleylab::properties::{n_ec_check, pmnk_check};

fn main() -> paleylab::Result<()> {
    for q in [13, 17, 25, 29, 37] {
        let g = build_family(&FamilySpec::new(Family::Paley, Field::with_order(q)?))?;
        let t = Instant::now();
        let v = n_ec_check(&g, 3)?;
        match v.witness() {
            None => println!("{}: 3-e.c. ({:?})", g.label(), t.elapsed()),
            Some(w) => println!("{}: not 3-e.c., first failure {:?} ({:?})", g.label(), w.kind, t.elapsed()),
        }
    }

    let g = build_family(&FamilySpec::new(Family::Paley, Field::with_order(13)?))?;
    for (m, n, k) in [(1, 1, 1), (1, 1, 3), (2, 0, 2), (2, 1, 1), (2, 2, 1)] {
        let v = pmnk_check(&g, m, n, k)?;
        println!("{} P({m},{n},{k}): {}", g.label(), v.holds());
    }
    Ok(())
}
