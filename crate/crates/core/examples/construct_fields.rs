//! Builds GF(16), GF(9) and GF(25) and prints both representations of each.
//!
//! Run with `cargo run --example construct_fields`.

use paleylab::field::{Field, PrimePoly};

fn show(field: &Field) {
    println!("{field}");
    let elems: Vec<String> = field.elements().map(|x| field.format(x)).collect();
    println!("  additive: {}", elems.join(", "));
    println!("  primitive element: {}", field.format(field.primitive_element()));
    for row in field.power_table().render(field) {
        println!("  {row}");
    }
    println!();
}

fn main() -> paleylab::Result<()> {
    // Canonical modulus: the smallest irreducible in base-p order.
    show(&Field::with_order(16)?);

    // x^2+1 is irreducible over Z_3 but its root has order 4, so ask for x^2+x+2.
    let f9 = Field::new(3, 2, Some(PrimePoly::parse("x^2+x+2", 3)?))?;
    show(&f9);

    let f25 = Field::with_order(25)?;
    show(&f25);

    let a = f25.basis_root();
    let x = f25.parse_element("3a+4")?;
    let y = f25.mul(x, a);
    println!("in {f25}: (3a+4)*a = {}", f25.format(y));
    println!("           (3a+4)^-1 = {}", f25.format(f25.inv(x)?));
    Ok(())
}
