use std::time::Instant;

use crate::bits::BitVector;
use crate::constructions::{base_function, ConstructedFunction};
use crate::error::Result;
use crate::function::BooleanFunction;
use crate::spectra::{
    classify, classify_spectra, dual_from_spectrum, fragmentary_nega_spectrum,
    fragmentary_walsh_spectrum, nega_transform, walsh_transform,
};
use crate::subspaces::build_modifier_set;

use super::frame::{coefficients_from_spectra, NegaBranch};
use super::naive::{naive_transforms, NAIVE_MAX_VARS};
use super::report::{Check, VerificationReport};

/// Largest `n` at which the naive transform cross-check is scheduled.
pub const NAIVE_CROSS_CHECK_MAX_VARS: usize = 10;

fn first_difference(a: &BooleanFunction, b: &BooleanFunction) -> Option<BitVector> {
    (0..a.size())
        .find(|&z| a.value(z) != b.value(z))
        .map(|z| BitVector::new(a.n(), z))
}

/// A highest-degree monomial of `f`, as a point.
fn top_monomial(f: &BooleanFunction) -> BitVector {
    let anf = f.anf();
    let d = anf.degree();
    let mask = anf.monomials().find(|m| m.count_ones() == d).unwrap_or(0);
    BitVector::new(f.n(), mask)
}

/// Bentness, negabentness, Parseval and, for small `n`, the fast transforms
/// against the direct sums. For functions not tied to a construction.
pub fn verify_function(subject: &str, f: &BooleanFunction) -> Result<VerificationReport> {
    let start = Instant::now();
    let n = f.n();
    let at = |u: u64| BitVector::new(n, u);
    let mut report = VerificationReport::new(subject);
    let walsh = walsh_transform(f)?;
    let nega = nega_transform(f)?;
    let class = classify_spectra(&walsh, &nega);
    report.push(Check::from_failure(
        "bent",
        class.bent_witness.map(at).or_else(|| (!class.is_bent).then(|| at(0))),
        class.note.clone().unwrap_or_else(|| format!("n={n}")),
    ));
    report.push(Check::from_failure(
        "negabent",
        class.negabent_witness.map(at),
        format!("n={n}"),
    ));
    report.push(Check::from_failure(
        "parseval",
        (!walsh.parseval_holds() || !nega.parseval_holds()).then(|| at(0)),
        "sum of squared magnitudes is 4^n",
    ));
    if n <= NAIVE_CROSS_CHECK_MAX_VARS {
        let s = naive_transforms(f)?;
        let bad = (0..f.size())
            .find(|&u| s.walsh.at(u) != walsh.at(u) || s.nega.at(u) != nega.at(u))
            .map(at);
        report.push(Check::from_failure("naive_cross_check", bad, "fast and direct-sum spectra agree"));
    }
    Ok(report.finish(start.elapsed()))
}

/// Runs every check that applies to a constructed function.
///
/// Checks: bentness, negabentness, closed ANF against the Möbius ANF, closed
/// dual against the spectral dual, bentness of the dual, the degree
/// prediction, the frame coefficients on both sides, Parseval, the rotation
/// order for the rotation-symmetric families and, for small `n`, the fast
/// transforms against the direct sums.
pub fn verify_construction(cf: &ConstructedFunction) -> Result<VerificationReport> {
    let start = Instant::now();
    let c = cf.construction();
    let f = cf.function();
    let n = f.n();
    let at = |u: u64| BitVector::new(n, u);
    let mut report = VerificationReport::new(c.to_string());

    let walsh = walsh_transform(f)?;
    let nega = nega_transform(f)?;
    let class = classify_spectra(&walsh, &nega);
    report.push(Check::from_failure(
        "bent",
        class.bent_witness.map(at).or_else(|| (!class.is_bent).then(|| at(0))),
        format!("n={n}"),
    ));
    report.push(Check::from_failure(
        "negabent",
        class.negabent_witness.map(at),
        format!("n={n}"),
    ));
    report.push(Check::from_failure(
        "parseval",
        (!walsh.parseval_holds() || !nega.parseval_holds()).then(|| at(0)),
        "sum of squared magnitudes is 4^n",
    ));

    report.push(Check::timed(|| {
        let closed = cf.closed_anf();
        let diff = if &f.anf() == closed {
            None
        } else {
            first_difference(f, &closed.to_function()).or(Some(at(0)))
        };
        Check::from_failure("anf_consistency", diff, format!("{} terms", closed.term_count()))
    }));

    let spectral_dual = dual_from_spectrum(&walsh);
    report.push(match &spectral_dual {
        Ok(d) => Check::from_failure("dual_consistency", first_difference(d, cf.closed_dual()), ""),
        Err(crate::Error::NotBent { point }) => Check::fail("dual_consistency", *point, "function is not bent"),
        Err(e) => return Err(e.clone()),
    });
    let dual_class = classify(cf.closed_dual())?;
    report.push(Check::from_failure(
        "dual_bent_negabent",
        dual_class
            .bent_witness
            .or(dual_class.negabent_witness)
            .map(at)
            .or_else(|| (!dual_class.is_bent_negabent()).then(|| at(0))),
        "",
    ));

    report.push(Check::timed(|| {
        let degree = f.algebraic_degree();
        let max = c.family_max_degree();
        let predicted = cf.predicts_max_degree();
        // the "only if" direction is vacuous for maxima of 2 and 3, reached
        // by the quadratic base functions at k = 1
        let ok = if predicted { degree == max } else { max <= 3 || degree < max };
        Check::from_failure(
            "degree_prediction",
            (!ok).then(|| top_monomial(f)),
            format!("degree {degree}, family maximum {max}, predicted maximal {predicted}"),
        )
    }));

    let (base_family, t) = c.base();
    let f0 = base_function(base_family, t)?;
    let set = build_modifier_set(&c.modifier_spec()?)?;
    let w0 = walsh_transform(&f0)?;
    let n0 = nega_transform(&f0)?;
    let coeffs = coefficients_from_spectra(
        &w0,
        &fragmentary_walsh_spectrum(&f0, &set)?,
        &n0,
        &fragmentary_nega_spectrum(&f0, &set)?,
    )?;
    report.push(Check::timed(|| {
        let mut bad = coeffs.walsh_violation();
        if bad.is_none() {
            // f̃ = f̃0 + χ{c = 1}
            if let (Ok(d), Ok(d0)) = (&spectral_dual, dual_from_spectrum(&w0)) {
                let mut expected = d0.clone();
                for u in coeffs.walsh_flip_set() {
                    expected.flip(u);
                }
                bad = first_difference(d, &expected);
            }
        }
        Check::from_failure(
            "frame_walsh",
            bad,
            format!("{} points with c = 1", coeffs.walsh_flip_set().count()),
        )
    }));
    report.push(Check::timed(|| {
        let mut bad = coeffs.nega_violation();
        if bad.is_none() {
            bad = (0..f.size())
                .find(|&u| {
                    let b = coeffs.nega_branch(u).unwrap_or(NegaBranch::Same);
                    nega.at(u) != n0.at(u) * b.factor()
                })
                .map(at);
        }
        let counts = coeffs.branch_counts();
        Check::from_failure(
            "frame_nega",
            bad,
            format!(
                "branches N={} -N={} -iN={} iN={}",
                counts[0], counts[1], counts[2], counts[3]
            ),
        )
    }));

    if c.family().is_rotation_symmetric() {
        report.push(Check::timed(|| {
            let order = f.rotation_symmetry_order();
            let bad = if order == 2 {
                None
            } else {
                let shifted = f.cyclic_shift(2 % n).ok();
                shifted
                    .and_then(|s| first_difference(f, &s))
                    .or(Some(at(0)))
            };
            Check::from_failure("rotation_order", bad, format!("order {order}"))
        }));
    }

    if n <= NAIVE_CROSS_CHECK_MAX_VARS.min(NAIVE_MAX_VARS) {
        report.push(Check::timed(|| {
            let bad = match naive_transforms(f) {
                Ok(s) => (0..f.size())
                    .find(|&u| s.walsh.at(u) != walsh.at(u) || s.nega.at(u) != nega.at(u))
                    .map(at),
                Err(_) => Some(at(0)),
            };
            Check::from_failure("naive_cross_check", bad, "fast and direct-sum spectra agree")
        }));
    }
    Ok(report.finish(start.elapsed()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{construct, Construction};
    use crate::subspaces::{parse_eset_list, parse_gamma_list, GammaSpec};

    fn g4k_example() -> ConstructedFunction {
        let c = Construction::g4k(GammaSpec::s1(2, parse_gamma_list("0001").unwrap()).unwrap()).unwrap();
        construct(&c).unwrap()
    }

    #[test]
    fn clean_constructions_pass() {
        let r = verify_construction(&g4k_example()).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        assert!(r.check("naive_cross_check").is_some());
        let c = Construction::h4k2(
            GammaSpec::s3(2, parse_gamma_list("1000,0101").unwrap(), parse_eset_list("1,B").unwrap()).unwrap(),
        )
        .unwrap();
        let r = verify_construction(&construct(&c).unwrap()).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        let c = Construction::f2rs_orbit(2, BitVector::parse("1111").unwrap()).unwrap();
        let r = verify_construction(&construct(&c).unwrap()).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        assert!(r.check("rotation_order").unwrap().pass);
    }

    #[test]
    fn plain_function_checks() {
        let f = BooleanFunction::from_fn(4, |x| (x & 3 == 3) ^ (x & 12 == 12)).unwrap();
        let r = verify_function("x0x1+x2x3", &f).unwrap();
        assert!(r.check("bent").unwrap().pass);
        assert!(!r.check("negabent").unwrap().pass);
        assert!(r.check("parseval").unwrap().pass);
        assert!(r.check("naive_cross_check").unwrap().pass);
        let odd = BooleanFunction::zero(3).unwrap();
        let r = verify_function("zero", &odd).unwrap();
        assert!(r.check("bent").unwrap().details.contains("odd"));
        assert!(r.failures().all(|c| c.counterexample.is_some()));
    }

    #[test]
    fn flipped_bit_fails_with_counterexample() {
        let cf = g4k_example();
        let mut bad = cf.function().clone();
        bad.flip(5);
        let cf = cf.with_function(bad).unwrap();
        let r = verify_construction(&cf).unwrap();
        assert!(!r.passed());
        let bent = r.check("bent").unwrap();
        assert!(!bent.pass);
        assert!(bent.counterexample.is_some());
        assert!(r.failures().all(|c| c.counterexample.is_some()));
    }
}
