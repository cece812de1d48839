use negabent::constructions::{construct, Construction};
use negabent::spectra::classify;
use negabent::subspaces::{parse_gamma_list, GammaSpec};

fn main() -> negabent::Result<()> {
    let spec = GammaSpec::s1(2, parse_gamma_list("0001,1010")?)?;
    let c = Construction::g4k(spec)?;
    let cf = construct(&c)?;
    let f = cf.function();
    let class = classify(f)?;
    println!("{c}");
    println!("n = {}, weight = {}", f.n(), f.weight());
    println!("bent = {}, negabent = {}", class.is_bent, class.is_negabent);
    println!(
        "degree = {} of {}, predicted maximal = {}",
        f.algebraic_degree(),
        c.family_max_degree(),
        cf.predicts_max_degree()
    );
    Ok(())
}
