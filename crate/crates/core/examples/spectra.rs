use negabent::constructions::{base_function, BaseFamily};
use negabent::spectra::{fragmentary_walsh_spectrum, nega_transform, walsh_transform};
use negabent::subspaces::{build_s1, parse_gamma_list, GammaSpec};

fn main() -> negabent::Result<()> {
    let g0 = base_function(BaseFamily::G0, 1)?;
    let w = walsh_transform(&g0)?;
    let n = nega_transform(&g0)?;
    println!("Walsh spectrum of g0, n = 4");
    print!("{}", w.dump());
    println!("nega spectrum");
    print!("{}", n.dump());

    let s1 = build_s1(&GammaSpec::s1(1, parse_gamma_list("01")?)?)?;
    let frag = fragmentary_walsh_spectrum(&g0, &s1)?;
    println!("Walsh sum over S1 ({} points)", s1.len());
    print!("{}", frag.dump());
    Ok(())
}
