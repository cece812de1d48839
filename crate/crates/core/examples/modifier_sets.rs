use negabent::subspaces::{
    build_s1, build_s2, parse_gamma_list, repetition_sets, repetition_subspace, GammaSpec,
};

fn main() -> negabent::Result<()> {
    let s1 = build_s1(&GammaSpec::s1(2, parse_gamma_list("0001")?)?)?;
    let points: Vec<String> = s1.iter().map(|v| v.to_bit_string()).collect();
    println!("S1 for gamma 0001: {} points", s1.len());
    println!("{}", points.join(" "));

    let a = repetition_subspace(2);
    println!("coset representatives of A_2^2:");
    for r in a.coset_representatives() {
        println!("  {r}");
    }
    let (a4, b4) = repetition_sets(2, 2)?;
    println!("A_4^2 has {} points, B_4^2 has {}", a4.len(), b4.len());

    let s2 = build_s2(&GammaSpec::s2(1, parse_gamma_list("0000,0001")?)?)?;
    println!("S2 for gammas 0000,0001: {} points", s2.len());
    Ok(())
}
