//! The base functions in Maiorana-McFarland form `x·π(y) + φ(y)`: checks
//! that `π` is linear with `π(L^⊥) = L^⊥` and that `φ` is not constant on
//! the coset `α + L^⊥`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::bits::BitVector;
use crate::constructions::{base_function, BaseFamily};
use crate::error::{Error, Result};
use crate::function::BooleanFunction;
use crate::spectra::{mm_function, Permutation};
use crate::subspaces::{parse_gamma_list, LinearSubspace};

use super::report::{Check, VerificationReport};

/// The four parameter sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SuCase {
    /// `g0` on 8 variables, `L = L^⊥` the diagonal `{y'' = y'}`.
    I,
    /// `g0` on 8 variables, `L^⊥ = A_2^2`.
    Ii,
    /// `h0` on 10 variables, `L^⊥ = {y'' = y', y_m = 0}`.
    Iii,
    /// `h0` on 10 variables, `L^⊥ = A_2^2 × {0}`.
    Iv,
}

impl SuCase {
    pub const ALL: [SuCase; 4] = [SuCase::I, SuCase::Ii, SuCase::Iii, SuCase::Iv];

    pub fn name(self) -> &'static str {
        match self {
            SuCase::I => "i",
            SuCase::Ii => "ii",
            SuCase::Iii => "iii",
            SuCase::Iv => "iv",
        }
    }
}

impl fmt::Display for SuCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SuCase::ALL
            .into_iter()
            .find(|c| c.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| Error::Parse(format!("unknown case `{s}` (expected i, ii, iii or iv)")))
    }
}

/// `π`, `φ`, `L^⊥`, `α` and the expected coset `α + L^⊥` of one case.
#[derive(Clone, Debug)]
pub struct SuParameters {
    pub base: (BaseFamily, usize),
    pub pi: Permutation,
    pub phi: BooleanFunction,
    pub l_perp: LinearSubspace,
    pub alpha: BitVector,
    pub expected_coset: Vec<BitVector>,
}

fn vecs(s: &str) -> Vec<BitVector> {
    parse_gamma_list(s).expect("literal bit strings")
}

pub fn su_parameters(case: SuCase) -> Result<SuParameters> {
    // φ(y) = y0 y2 + y1 y3 on the first four coordinates
    let phi = |m: usize| BooleanFunction::from_fn(m, |y| ((y & 5) == 5) ^ ((y & 10) == 10));
    let (base, m, pi, gens, alpha, coset) = match case {
        SuCase::I => (
            (BaseFamily::G0, 2),
            4,
            Permutation::identity(4),
            "1010,0101",
            "1000",
            "1000,0010,1101,0111",
        ),
        SuCase::Ii => (
            (BaseFamily::G0, 2),
            4,
            Permutation::identity(4),
            "1100,0011",
            "1000",
            "1000,0100,1011,0111",
        ),
        SuCase::Iii | SuCase::Iv => {
            // π(Y) = (y0 + y4, y1, y2, y3, y4)
            let pi = Permutation::from_fn(5, |y| y ^ (y >> 4 & 1))?;
            let (gens, coset) = if case == SuCase::Iii {
                ("10100,01010", "10000,11010,00100,01110")
            } else {
                ("11000,00110", "10000,01000,10110,01110")
            };
            ((BaseFamily::H0, 2), 5, pi, gens, "10000", coset)
        }
    };
    Ok(SuParameters {
        base,
        pi,
        phi: phi(m)?,
        l_perp: LinearSubspace::span(m, &vecs(gens))?,
        alpha: BitVector::parse(alpha)?,
        expected_coset: vecs(coset),
    })
}

/// Confirms `π` is linear and fixes `L^⊥`, and that `φ` takes both values
/// on the expected coset `α + L^⊥`.
pub fn check_su_conditions(case: SuCase) -> Result<VerificationReport> {
    let start = Instant::now();
    let p = su_parameters(case)?;
    let m = p.pi.m();
    let mut report = VerificationReport::new(format!("case ({case})"));

    let base = base_function(p.base.0, p.base.1)?;
    let mm = mm_function(&p.pi, &p.phi)?;
    let diff = (0..base.size()).find(|&z| base.value(z) != mm.value(z));
    report.push(Check::from_failure(
        "mm_form",
        diff.map(|z| BitVector::new(base.n(), z)),
        format!("{} equals x·π(y) + φ(y)", p.base.0),
    ));

    let nonlinear = (0..1u64 << m)
        .flat_map(|a| (0..1u64 << m).map(move |b| (a, b)))
        .find(|&(a, b)| p.pi.apply(a ^ b) != p.pi.apply(a) ^ p.pi.apply(b));
    report.push(Check::from_failure(
        "pi_linear",
        nonlinear.map(|(a, _)| BitVector::new(m, a)),
        "π(a + b) = π(a) + π(b)",
    ));

    let escaped = p
        .l_perp
        .basis()
        .into_iter()
        .find(|b| !p.l_perp.contains(&BitVector::new(m, p.pi.apply(b.bits()))));
    report.push(Check::from_failure(
        "pi_preserves_subspace",
        escaped,
        format!("π(L^⊥) = L^⊥, dim L^⊥ = {}", p.l_perp.dim()),
    ));

    let coset: BTreeSet<BitVector> = p.l_perp.members().into_iter().map(|v| v + p.alpha).collect();
    let expected: BTreeSet<BitVector> = p.expected_coset.iter().copied().collect();
    let listing = |s: &BTreeSet<BitVector>| {
        s.iter().map(|v| v.to_bit_string()).collect::<Vec<_>>().join(",")
    };
    let stray = coset.symmetric_difference(&expected).next().copied();
    report.push(Check::from_failure(
        "witness_coset",
        stray,
        format!("α + L^⊥ = {{{}}}", listing(&coset)),
    ));

    let image: BTreeSet<bool> = coset.iter().map(|v| p.phi.eval(v)).collect();
    let phi_alpha = p.phi.eval(&p.alpha);
    let image_text = image.iter().map(|&b| (b as u8).to_string()).collect::<Vec<_>>().join(",");
    report.push(Check::from_failure(
        "phi_varies_on_coset",
        (image.len() < 2).then_some(p.alpha),
        format!("φ(α + L^⊥) = {{{image_text}}}, φ(α) = {}", phi_alpha as u8),
    ));
    Ok(report.finish(start.elapsed()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_cases_pass() {
        for case in SuCase::ALL {
            let r = check_su_conditions(case).unwrap();
            assert!(r.passed(), "{}", r.to_text());
        }
    }

    #[test]
    fn case_i_details() {
        let r = check_su_conditions(SuCase::I).unwrap();
        let c = r.check("witness_coset").unwrap();
        assert!(c.pass);
        for v in ["1000", "0010", "1101", "0111"] {
            assert!(c.details.contains(v));
        }
        assert!(r.check("phi_varies_on_coset").unwrap().details.contains("{0,1}"));
    }

    #[test]
    fn parse_cases() {
        assert_eq!("iii".parse::<SuCase>().unwrap(), SuCase::Iii);
        assert!("v".parse::<SuCase>().is_err());
    }
}
