//! Relations between bent and negabent functions, checked on representatives.

use std::time::Instant;

use crate::bits::BitVector;
use crate::constructions::{base_function, construct_function_with, BaseFamily, Construction};
use crate::error::Result;
use crate::function::BooleanFunction;
use crate::spectra::classify;
use crate::subspaces::{build_modifier_set, ESet, GammaSpec};
use crate::bits::Capacity;

use super::report::{Check, VerificationReport};

fn zero_spec_sets(k: usize) -> Result<Vec<(&'static str, GammaSpec)>> {
    Ok(vec![
        ("s1", GammaSpec::s1(k, vec![BitVector::zeros(2 * k)])?),
        ("s2", GammaSpec::s2(k, vec![BitVector::zeros(4 * k)])?),
        ("s3", GammaSpec::s3(k, vec![BitVector::zeros(2 * k)], vec![ESet::Both])?),
        ("s4", GammaSpec::s4(k, vec![BitVector::zeros(4 * k)], vec![ESet::Both])?),
    ])
}

/// Checks the expected bent and negabent flags of `f`.
fn row(name: &str, f: &BooleanFunction, bent: bool, negabent: bool) -> Result<Check> {
    let c = classify(f)?;
    let n = f.n();
    let at = |w: Option<u64>| BitVector::new(n, w.unwrap_or(0));
    let details = format!("n={n} bent={} negabent={}", c.is_bent, c.is_negabent);
    Ok(if c.is_bent != bent {
        Check::fail(name, at(c.bent_witness), details)
    } else if c.is_negabent != negabent {
        Check::fail(name, at(c.negabent_witness), details)
    } else {
        Check::pass(name, details)
    })
}

/// Every row of the bent/negabent relation table at parameter `k`.
///
/// * `χ_{S1}` to `χ_{S4}` and `χ_T` are negabent and not bent, and `χ_T` is
///   rotation symmetric.
/// * `σ2` is bent and not negabent.
/// * bent plus `σ2` is negabent, negabent plus `σ2` is bent.
/// * the base functions and the constructed sums are bent-negabent.
pub fn check_table1(k: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new(format!("relation table k={k}"));
    let cap = Capacity::default();
    for (name, spec) in zero_spec_sets(k)? {
        let chi = BooleanFunction::characteristic(&build_modifier_set(&spec)?)?;
        report.push(row(&format!("chi_{name}_negabent_not_bent"), &chi, false, true)?);
    }

    let t_spec = GammaSpec::rotation_closed(k, vec![BitVector::ones(2 * k)])?;
    let chi_t = BooleanFunction::characteristic(&build_modifier_set(&t_spec)?)?;
    report.push(row("chi_t_negabent_not_bent", &chi_t, false, true)?);
    let order = chi_t.rotation_symmetry_order();
    let shifted = chi_t.cyclic_shift(1 % chi_t.n())?;
    let moved = (0..chi_t.size()).find(|&z| shifted.value(z) != chi_t.value(z));
    report.push(Check::from_failure(
        "chi_t_rotation_symmetric",
        moved.map(|z| BitVector::new(chi_t.n(), z)),
        format!("rotation order {order}"),
    ));

    let n = 4 * k;
    let sigma2 = base_function(BaseFamily::Sigma2, 2 * k)?;
    report.push(row("sigma2_bent_not_negabent", &sigma2, true, false)?);

    let g0 = base_function(BaseFamily::G0, k)?;
    let h0 = base_function(BaseFamily::H0, k)?;
    let f0 = base_function(BaseFamily::F0, k)?;
    for (name, f) in [("g0", &g0), ("h0", &h0), ("f0", &f0)] {
        report.push(row(&format!("base_{name}_bent_negabent"), f, true, true)?);
    }

    // bent + σ2 is negabent; negabent + σ2 is bent
    let sum = g0.xor(&sigma2)?;
    let c = classify(&sum)?;
    report.push(Check::from_failure(
        "bent_plus_sigma2_negabent",
        c.negabent_witness.map(|w| BitVector::new(n, w)),
        format!("g0 + sigma2 on n={n}: negabent={}", c.is_negabent),
    ));
    let chi_s1 = BooleanFunction::characteristic(&build_modifier_set(&zero_spec_sets(k)?[0].1)?)?;
    let sum = chi_s1.xor(&sigma2)?;
    let c = classify(&sum)?;
    report.push(Check::from_failure(
        "negabent_plus_sigma2_bent",
        c.bent_witness.map(|w| BitVector::new(n, w)),
        format!("chi_s1 + sigma2 on n={n}: bent={}", c.is_bent),
    ));

    let specs = zero_spec_sets(k)?;
    let sums = [
        ("g4k", Construction::g4k(specs[0].1.clone())?),
        ("g8k", Construction::g8k(specs[1].1.clone())?),
        ("h4k2", Construction::h4k2(specs[2].1.clone())?),
        ("h8k2", Construction::h8k2(specs[3].1.clone())?),
        ("f2rs", Construction::f2rs(k, vec![BitVector::ones(2 * k)])?),
    ];
    for (name, c) in sums {
        let f = construct_function_with(&c, cap)?;
        report.push(row(&format!("sum_{name}_bent_negabent"), &f, true, true)?);
    }
    Ok(report.finish(start.elapsed()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_rows_pass_at_k1() {
        let r = check_table1(1).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        assert_eq!(r.checks.len(), 17);
    }
}
