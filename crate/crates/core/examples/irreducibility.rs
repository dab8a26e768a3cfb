//! Lists the monic irreducible polynomials of small degree by trial division.
//!
//! Run with `cargo run --example irreducibility -- 5 2`.

use paleylab::field::{find_irreducible, PrimePoly};

fn main() -> paleylab::Result<()> {
    let args: Vec<u32> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (p, n) = match args[..] {
        [p, n] => (p, n as usize),
        _ => (5, 2),
    };
    if !paleylab::arith::is_prime(p as u64) {
        return Err(paleylab::Error::NonPrime(p as u64));
    }

    let total = (p as u64).pow(n as u32);
    let mut irreducible = Vec::new();
    for rank in 0..total {
        let f = PrimePoly::monic_from_rank(p, n, rank);
        if f.is_irreducible()? {
            irreducible.push(f.to_string());
        }
    }
    println!("monic irreducibles of degree {n} over Z_{p}: {}", irreducible.len());
    for f in &irreducible {
        println!("  {f}");
    }
    println!("canonical choice: {}", find_irreducible(p, n)?);

    // A polynomial with no roots can still factor.
    let g = PrimePoly::parse("x^4+x^2+1", 2)?;
    let h = PrimePoly::parse("x^2+x+1", 2)?;
    println!(
        "\nover Z_2, x^4+x^2+1 has no roots but irreducible = {}; remainder mod x^2+x+1 = {}",
        g.is_irreducible()?,
        g.rem_monic(&h)
    );
    Ok(())
}
