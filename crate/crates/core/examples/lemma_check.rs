use negabent::oracle::fragmentary_lemma_branches;
use negabent::subspaces::{GammaSpec, ModifierFamily};

fn main() -> negabent::Result<()> {
    for family in [ModifierFamily::S1, ModifierFamily::S2, ModifierFamily::S3, ModifierFamily::S4] {
        let specs = GammaSpec::singles(family, 1)?;
        let mut passed = 0;
        for spec in &specs {
            let (report, _) = fragmentary_lemma_branches(spec)?;
            passed += report.passed() as usize;
        }
        println!("{family}: {passed}/{} single-gamma specs agree with the closed forms", specs.len());
    }
    let spec = GammaSpec::parse(ModifierFamily::S4, 1, "0000,0001", Some("B,1"))?;
    let (report, branches) = fragmentary_lemma_branches(&spec)?;
    print!("{}", report.to_text());
    println!("{branches:?}");
    Ok(())
}
