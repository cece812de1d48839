use negabent::constructions::{base_function, BaseFamily};
use negabent::oracle::{extract_frame_coefficients, NegaBranch};
use negabent::subspaces::{build_modifier_set, parse_eset_list, parse_gamma_list, GammaSpec};

fn main() -> negabent::Result<()> {
    let h0 = base_function(BaseFamily::H0, 1)?;
    let spec = GammaSpec::s3(1, parse_gamma_list("00,11")?, parse_eset_list("1,B")?)?;
    let set = build_modifier_set(&spec)?;
    let c = extract_frame_coefficients(&h0, &set)?;
    println!("Walsh coefficients admissible: {}", c.walsh_ok);
    println!("nega coefficients admissible:  {}", c.nega_ok);
    for (branch, count) in NegaBranch::ALL.iter().zip(c.branch_counts()) {
        println!("{branch:?}: {count} points, factor {}", branch.factor());
    }
    Ok(())
}
