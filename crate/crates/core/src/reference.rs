//! Three worked constructions with their expected ANFs, embedded as monomial
//! sets and compared order-insensitively.

use std::collections::BTreeSet;
use std::time::Instant;

use crate::bits::BitVector;
use crate::constructions::{base_function, construct, Construction};
use crate::error::{Error, Result};
use crate::oracle::{Check, VerificationReport};
use crate::spectra::classify;
use crate::subspaces::{parse_eset_list, parse_gamma_list, GammaSpec};

const G4K_K2_ANF: &str = "x_0x_1y_0y_1 + x_0x_1y_0y_3 + x_0x_1y_1y_2 + x_0x_1y_1 + x_0x_1y_2y_3 + \
    x_0x_1y_3 + x_0x_3y_0y_1 + x_0x_3y_0y_3 + x_0x_3y_1y_2 + x_0x_3y_1 + x_0x_3y_2y_3 + x_0x_3y_3 + \
    x_0y_0y_1 + x_0y_0y_3 + x_0y_0 + x_0y_1y_2 + x_0y_1 + x_0y_2y_3 + x_0y_3 + x_1x_2y_0y_1 + \
    x_1x_2y_0y_3 + x_1x_2y_1y_2 + x_1x_2y_1 + x_1x_2y_2y_3 + x_1x_2y_3 + x_1y_0y_1 + x_1y_0y_3 + \
    x_1y_1y_2 + x_1y_2y_3 + x_1y_3 + x_2x_3y_0y_1 + x_2x_3y_0y_3 + x_2x_3y_1y_2 + x_2x_3y_1 + \
    x_2x_3y_2y_3 + x_2x_3y_3 + x_2y_0y_1 + x_2y_0y_3 + x_2y_1y_2 + x_2y_1 + x_2y_2y_3 + x_2y_2 + \
    x_2y_3 + x_3y_0y_1 + x_3y_0y_3 + x_3y_1y_2 + x_3y_1 + x_3y_2y_3 + y_0y_1 + y_0y_2 + y_0y_3 + \
    y_1y_2 + y_1y_3 + y_1 + y_2y_3 + y_3";

const H4K2_K2_ANF: &str = "x_0x_1y_0y_1y_4 + x_0x_1y_0y_1 + x_0x_1y_0y_3y_4 + x_0x_1y_0y_3 + \
    x_0x_1y_0y_4 + x_0x_1y_1y_2y_4 + x_0x_1y_1y_2 + x_0x_1y_1y_4 + x_0x_1y_1 + x_0x_1y_2y_3y_4 + \
    x_0x_1y_2y_3 + x_0x_1y_2y_4 + x_0x_1y_3y_4 + x_0x_1y_3 + x_0x_1y_4 + x_0x_3y_0y_1y_4 + \
    x_0x_3y_0y_1 + x_0x_3y_0y_3y_4 + x_0x_3y_0y_3 + x_0x_3y_0y_4 + x_0x_3y_1y_2y_4 + x_0x_3y_1y_2 + \
    x_0x_3y_1y_4 + x_0x_3y_1 + x_0x_3y_2y_3y_4 + x_0x_3y_2y_3 + x_0x_3y_2y_4 + x_0x_3y_3y_4 + \
    x_0x_3y_3 + x_0x_3y_4 + x_0y_0y_1y_4 + x_0y_0y_3y_4 + x_0y_0y_4 + x_0y_0 + x_0y_1y_2y_4 + \
    x_0y_1y_4 + x_0y_2y_3y_4 + x_0y_2y_4 + x_0y_3y_4 + x_1x_2y_0y_1y_4 + x_1x_2y_0y_1 + \
    x_1x_2y_0y_3y_4 + x_1x_2y_0y_3 + x_1x_2y_0y_4 + x_1x_2y_1y_2y_4 + x_1x_2y_1y_2 + x_1x_2y_1y_4 + \
    x_1x_2y_1 + x_1x_2y_2y_3y_4 + x_1x_2y_2y_3 + x_1x_2y_2y_4 + x_1x_2y_3y_4 + x_1x_2y_3 + \
    x_1x_2y_4 + x_1y_0y_1 + x_1y_0y_3 + x_1y_1y_2 + x_1y_2y_3 + x_1y_3 + x_2x_3y_0y_1y_4 + \
    x_2x_3y_0y_1 + x_2x_3y_0y_3y_4 + x_2x_3y_0y_3 + x_2x_3y_0y_4 + x_2x_3y_1y_2y_4 + x_2x_3y_1y_2 + \
    x_2x_3y_1y_4 + x_2x_3y_1 + x_2x_3y_2y_3y_4 + x_2x_3y_2y_3 + x_2x_3y_2y_4 + x_2x_3y_3y_4 + \
    x_2x_3y_3 + x_2x_3y_4 + x_2y_0y_1y_4 + x_2y_0y_3y_4 + x_2y_0y_4 + x_2y_1y_2y_4 + x_2y_1y_4 + \
    x_2y_2y_3y_4 + x_2y_2y_4 + x_2y_2 + x_2y_3y_4 + x_2y_4 + x_3y_0y_1 + x_3y_0y_3 + x_3y_1y_2 + \
    x_3y_1 + x_3y_2y_3 + x_4y_4 + y_0y_2 + y_1y_3";

/// Added to `f0`.
const F2RS_ORBIT_K2_DELTA: &str = "x_0x_1x_2x_3 + x_0x_1x_2y_3 + x_0x_1x_3y_2 + x_0x_2x_3y_1 + \
    x_1x_2x_3y_0 + x_0x_1y_2y_3 + x_0x_2y_1y_3 + x_0x_3y_1y_2 + x_1x_2y_0y_3 + x_1x_3y_0y_2 + \
    x_2x_3y_0y_1 + x_0y_1y_2y_3 + x_1y_0y_2y_3 + x_2y_0y_1y_3 + x_3y_0y_1y_2 + y_0y_1y_2y_3";

/// Parses `x_0x_1y_2 + y_3 + 1` into monomial masks, where `x_i` is variable
/// `i` and `y_i` is variable `y_offset + i`. Repeated terms cancel.
pub fn parse_xy_monomials(text: &str, y_offset: usize) -> Result<BTreeSet<u64>> {
    let mut out = BTreeSet::new();
    for term in text.split('+').map(str::trim) {
        let mask = parse_xy_term(term, y_offset)?;
        if !out.insert(mask) {
            out.remove(&mask);
        }
    }
    Ok(out)
}

fn parse_xy_term(term: &str, y_offset: usize) -> Result<u64> {
    if term == "1" {
        return Ok(0);
    }
    let bad = || Error::Parse(format!("invalid monomial `{term}`"));
    let mut mask = 0u64;
    let mut rest = term;
    while !rest.is_empty() {
        let base = match rest.as_bytes()[0] {
            b'x' => 0,
            b'y' => y_offset,
            _ => return Err(bad()),
        };
        rest = rest[1..].strip_prefix('_').ok_or_else(bad)?;
        let digits = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        let idx: usize = rest[..digits].parse().map_err(|_| bad())?;
        if base + idx >= 64 {
            return Err(bad());
        }
        mask |= 1 << (base + idx);
        rest = &rest[digits..];
    }
    Ok(mask)
}

/// A construction with its expected degree and ANF.
#[derive(Clone, Debug)]
pub struct WorkedExample {
    pub name: &'static str,
    pub construction: Construction,
    pub degree: u32,
    pub expected: BTreeSet<u64>,
    /// `expected` lists the monomials added to the base function.
    pub relative_to_base: bool,
}

pub fn worked_examples() -> Result<Vec<WorkedExample>> {
    Ok(vec![
        WorkedExample {
            name: "g4k k=2 gamma=0001",
            construction: Construction::g4k(GammaSpec::s1(2, parse_gamma_list("0001")?)?)?,
            degree: 4,
            expected: parse_xy_monomials(G4K_K2_ANF, 4)?,
            relative_to_base: false,
        },
        WorkedExample {
            name: "h4k2 k=2 gamma=1000,0101 eset=1,B",
            construction: Construction::h4k2(GammaSpec::s3(
                2,
                parse_gamma_list("1000,0101")?,
                parse_eset_list("1,B")?,
            )?)?,
            degree: 5,
            expected: parse_xy_monomials(H4K2_K2_ANF, 5)?,
            relative_to_base: false,
        },
        WorkedExample {
            name: "f2rs-orbit k=2 gamma=1111",
            construction: Construction::f2rs_orbit(2, BitVector::ones(4))?,
            degree: 4,
            expected: parse_xy_monomials(F2RS_ORBIT_K2_DELTA, 4)?,
            relative_to_base: true,
        },
    ])
}

/// Builds the example and compares it with the expected values.
pub fn check_worked_example(ex: &WorkedExample) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new(ex.name);
    let cf = construct(&ex.construction)?;
    let f = cf.function();
    let n = f.n();
    let at = |u: u64| BitVector::new(n, u);

    let class = classify(f)?;
    report.push(Check::from_failure(
        "bent_negabent",
        class
            .bent_witness
            .or(class.negabent_witness)
            .map(at)
            .or_else(|| (!class.is_bent_negabent()).then(|| at(0))),
        format!("n={n}"),
    ));
    let degree = f.algebraic_degree();
    report.push(Check::from_failure(
        "degree",
        (degree != ex.degree).then(|| at(0)),
        format!("measured {degree}, expected {}", ex.degree),
    ));

    let mut got = f.anf().monomial_set();
    if ex.relative_to_base {
        let (family, t) = ex.construction.base();
        for m in base_function(family, t)?.anf().monomials() {
            if !got.insert(m) {
                got.remove(&m);
            }
        }
    }
    let stray = got.symmetric_difference(&ex.expected).next().copied();
    report.push(Check::from_failure(
        "anf",
        stray.map(at),
        format!("{} monomials, expected {}", got.len(), ex.expected.len()),
    ));
    if ex.construction.family().is_rotation_symmetric() {
        let order = f.rotation_symmetry_order();
        report.push(Check::from_failure(
            "rotation_order",
            (order != 2).then(|| at(0)),
            format!("order {order}"),
        ));
    }
    Ok(report.finish(start.elapsed()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_terms() {
        let m = parse_xy_monomials("x_0x_1y_0 + y_3 + 1", 4).unwrap();
        assert_eq!(m, BTreeSet::from([0b1_0011, 1 << 7, 0]));
        assert!(parse_xy_monomials("x_0 + x_0", 4).unwrap().is_empty());
        assert!(parse_xy_monomials("z_1", 4).is_err());
        assert!(parse_xy_monomials("x1", 4).is_err());
    }

    #[test]
    fn embedded_sizes() {
        let ex = worked_examples().unwrap();
        assert_eq!(ex[0].expected.len(), 56);
        assert_eq!(ex[2].expected.len(), 16);
        assert!(ex[2].expected.iter().all(|m| m.count_ones() == 4));
    }

    #[test]
    fn all_examples_reproduce() {
        for ex in worked_examples().unwrap() {
            let r = check_worked_example(&ex).unwrap();
            assert!(r.passed(), "{}", r.to_text());
        }
    }

    #[test]
    fn wrong_expectation_is_caught() {
        let mut ex = worked_examples().unwrap().remove(0);
        ex.expected.insert(0);
        let r = check_worked_example(&ex).unwrap();
        assert!(!r.check("anf").unwrap().pass);
        assert_eq!(r.check("anf").unwrap().counterexample.as_deref(), Some("00000000"));
    }
}
