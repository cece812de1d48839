use negabent::constructions::{construct, Construction};
use negabent::oracle::verify_construction;
use negabent::subspaces::{parse_gamma_list, GammaSpec};

fn main() -> negabent::Result<()> {
    let c = Construction::g8k(GammaSpec::s2(1, parse_gamma_list("0000,0110")?)?)?;
    let cf = construct(&c)?;
    print!("{}", verify_construction(&cf)?.to_text());

    // one flipped output bit breaks bentness and the closed forms
    let mut broken = cf.function().clone();
    broken.flip(3);
    let report = verify_construction(&cf.with_function(broken)?)?;
    println!("{}", report.to_json());
    Ok(())
}
