//! Tabulates m-Paley graphs: degree, completeness and components.
//!
//! Run with `cargo run --release --example m_paley_survey -- 3 50`.

use paleylab::cli::survey_rows;
use paleylab::field::Field;
use paleylab::graph::{build_family, Family, FamilySpec};
use paleylab::properties::{components, iso_to_complete};

fn main() -> paleylab::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (lo, hi) = match args[..] {
        [lo, hi] => (lo, hi),
        _ => (3, 30),
    };
    println!("{:>4} {:>3} {:>3} {:>6} {:>9} {:>10}", "q", "m", "d", "degree", "complete", "components");
    for r in survey_rows((lo, hi), (3, 13))? {
        println!(
            "{:>4} {:>3} {:>3} {:>6} {:>9} {:>10}",
            r.q, r.m, r.d, r.degree, r.complete, r.components
        );
    }

    // 13-P_27 breaks into nine triangles.
    let g = build_family(&FamilySpec::new(Family::MPaley { m: 13 }, Field::with_order(27)?))?;
    println!("\n{}:", g.label());
    for comp in components(&g) {
        let names: Vec<String> = comp.iter().map(|&v| g.vertex_name(v)).collect();
        let sub = paleylab::graph::Graph::from_edges(
            comp.len(),
            g.edges()
                .filter(|(u, _)| comp.contains(u))
                .map(|(u, v)| (comp.binary_search(&u).unwrap(), comp.binary_search(&v).unwrap())),
            "component",
        )?;
        println!("  {{{}}} K_3: {}", names.join(", "), iso_to_complete(&sub));
    }
    Ok(())
}
