use negabent::constructions::{construct, Construction};
use negabent::subspaces::{orbit_members, orbit_representatives};
use negabent::BitVector;

fn main() -> negabent::Result<()> {
    let reps = orbit_representatives(4)?;
    for r in &reps {
        let orbit: Vec<String> = orbit_members(r).iter().map(|v| v.to_bit_string()).collect();
        println!("{r}: {}", orbit.join(" "));
    }

    for c in [
        Construction::f2rs(2, vec![BitVector::parse("1000")?, BitVector::parse("1110")?])?,
        Construction::f2rs_set(2, vec![BitVector::parse("1100")?])?,
        Construction::f2rs_orbit(2, BitVector::parse("1010")?)?,
    ] {
        let cf = construct(&c)?;
        let f = cf.function();
        println!(
            "{c}: rotation order {}, degree {}",
            f.rotation_symmetry_order(),
            f.algebraic_degree()
        );
    }
    Ok(())
}
