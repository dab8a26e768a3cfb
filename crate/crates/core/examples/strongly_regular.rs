//! Checks srg parameters of every Paley graph up to a bound.
//!
//! Run with `cargo run --release --example strongly_regular -- 200`.

use paleylab::arith::prime_powers_in;
use paleylab::field::Field;
use paleylab::graph::{build_family, Family, FamilySpec};
use paleylab::properties::srg_check;

fn main() -> paleylab::Result<()> {
    let bound = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(121);
    println!("{:>5} {:>5} {:>5} {:>7} {:>4}", "q", "k", "lambda", "mu", "ok");
    for (q, _, _) in prime_powers_in(5, bound).filter(|(q, _, _)| q % 4 == 1) {
        let g = build_family(&FamilySpec::new(Family::Paley, Field::with_order(q)?))?;
        match srg_check(&g) {
            Ok(s) => {
                let expected = (q as usize - 1) / 2 == s.k
                    && (q as usize - 5) / 4 == s.lambda
                    && (q as usize - 1) / 4 == s.mu;
                println!("{:>5} {:>5} {:>5} {:>7} {:>4}", q, s.k, s.lambda, s.mu, expected);
            }
            Err(w) => println!("{q:>5} not strongly regular: {w:?}"),
        }
    }
    Ok(())
}
