//! Builds the Paley graphs of order 5, 9 and 13 and exports them.
//!
//! Run with `cargo run --example paley_graphs`.

use paleylab::field::Field;
use paleylab::graph::{build_family, export, Family, FamilySpec, Format};
use paleylab::properties::iso_to_cycle;

fn main() -> paleylab::Result<()> {
    for q in [5, 9, 13] {
        let g = build_family(&FamilySpec::new(Family::Paley, Field::with_order(q)?))?;
        let connection = &g.cayley().unwrap().connection;
        let field = &g.cayley().unwrap().field;
        let squares: Vec<String> = connection.iter().map(|x| field.format(x)).collect();
        println!("{}: squares {{{}}}, {} edges", g.label(), squares.join(", "), g.edge_count());
        let named: Vec<String> = g
            .edges()
            .map(|(u, v)| format!("{{{},{}}}", g.vertex_name(u), g.vertex_name(v)))
            .collect();
        println!("  {}", named.join(" "));
        if q == 5 {
            println!("  is C_5: {}", iso_to_cycle(&g));
        }
    }

    let g = build_family(&FamilySpec::new(Family::Paley, Field::with_order(9)?))?;
    println!("\n{}", export(&g, Format::Dot));
    Ok(())
}
