use negabent::AnfPolynomial;

fn main() -> negabent::Result<()> {
    let p = AnfPolynomial::parse(6, "x0*x3 + x1*x4 + x2*x5 + x0*x1*x2")?;
    let f = p.to_function();
    println!("{p}");
    println!("truth table {}", f.to_hex());
    let back = f.anf();
    println!("recovered {back}, degree {}", back.degree());
    assert_eq!(back, p);
    Ok(())
}
