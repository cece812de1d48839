use negabent::constructions::{construct, Construction};
use negabent::spectra::{classify, dual};
use negabent::subspaces::{parse_eset_list, parse_gamma_list, GammaSpec};

fn main() -> negabent::Result<()> {
    let spec = GammaSpec::s3(2, parse_gamma_list("1000,0101")?, parse_eset_list("1,B")?)?;
    let cf = construct(&Construction::h4k2(spec)?)?;
    let spectral = dual(cf.function())?;
    println!("closed-form dual  {}", cf.closed_dual().to_hex());
    println!("spectral dual     {}", spectral.to_hex());
    println!("equal: {}", &spectral == cf.closed_dual());
    let class = classify(&spectral)?;
    println!("dual bent-negabent: {}", class.is_bent_negabent());
    println!("dual of dual is f: {}", &dual(&spectral)? == cf.function());
    Ok(())
}
