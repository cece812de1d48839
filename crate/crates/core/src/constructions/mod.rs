//! Base functions and the five bent-negabent construction families.

mod base;
mod closed;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::anf::AnfPolynomial;
use crate::bits::{BitVector, Capacity};
use crate::error::{Error, Result};
use crate::function::BooleanFunction;
use crate::subspaces::{
    build_modifier_set_with, format_eset_list, format_gamma_list, orbit_members,
    orbit_representative, parse_gamma_list, GammaSpec, ModifierFamily,
};

pub use base::{base_function, base_function_with, BaseFamily};
pub use closed::{closed_form_anf, closed_form_dual, closed_form_dual_with};

/// Family tag of a construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstructionFamily {
    G4k,
    G8k,
    H4k2,
    H8k2,
    F2rs,
    F2rsSet,
    F2rsOrbit,
}

impl ConstructionFamily {
    pub const ALL: [ConstructionFamily; 7] = [
        ConstructionFamily::G4k,
        ConstructionFamily::G8k,
        ConstructionFamily::H4k2,
        ConstructionFamily::H8k2,
        ConstructionFamily::F2rs,
        ConstructionFamily::F2rsSet,
        ConstructionFamily::F2rsOrbit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConstructionFamily::G4k => "g4k",
            ConstructionFamily::G8k => "g8k",
            ConstructionFamily::H4k2 => "h4k2",
            ConstructionFamily::H8k2 => "h8k2",
            ConstructionFamily::F2rs => "f2rs",
            ConstructionFamily::F2rsSet => "f2rs-set",
            ConstructionFamily::F2rsOrbit => "f2rs-orbit",
        }
    }

    pub fn num_vars(self, k: usize) -> usize {
        match self {
            ConstructionFamily::G4k => 4 * k,
            ConstructionFamily::G8k => 8 * k,
            ConstructionFamily::H4k2 => 4 * k + 2,
            ConstructionFamily::H8k2 => 8 * k + 2,
            _ => 4 * k,
        }
    }

    /// Largest degree the family reaches.
    pub fn max_degree(self, k: usize) -> u32 {
        let k = k as u32;
        match self {
            ConstructionFamily::G4k => 2 * k,
            ConstructionFamily::G8k => 4 * k,
            ConstructionFamily::H4k2 => 2 * k + 1,
            ConstructionFamily::H8k2 => 4 * k + 1,
            _ => 2 * k,
        }
    }

    pub fn is_rotation_symmetric(self) -> bool {
        matches!(
            self,
            ConstructionFamily::F2rs | ConstructionFamily::F2rsSet | ConstructionFamily::F2rsOrbit
        )
    }

    /// The modifier set family added to the base function.
    pub fn modifier_family(self) -> ModifierFamily {
        match self {
            ConstructionFamily::G4k => ModifierFamily::S1,
            ConstructionFamily::G8k => ModifierFamily::S2,
            ConstructionFamily::H4k2 => ModifierFamily::S3,
            ConstructionFamily::H8k2 => ModifierFamily::S4,
            _ => ModifierFamily::T,
        }
    }
}

impl fmt::Display for ConstructionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstructionFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        ConstructionFamily::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| Error::Parse(format!("unknown family `{s}`")))
    }
}

/// Parameters of a construction in the bit-string syntax, as stored in
/// function files.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionParams {
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eset: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a_set: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub single_gamma: Option<String>,
}

/// A validated construction request.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    /// `g0 + χ_{S1}` on `4k` variables.
    G4k(GammaSpec),
    /// `g0 + χ_{S2}` on `8k` variables.
    G8k(GammaSpec),
    /// `h0 + χ_{S3}` on `4k + 2` variables.
    H4k2(GammaSpec),
    /// `h0 + χ_{S4}` on `8k + 2` variables.
    H8k2(GammaSpec),
    /// `f0 + χ_T` with `Γ` the union of the orbits of `P`.
    F2rs { k: usize, p: Vec<BitVector> },
    /// `f0` plus the sum over `u * v = 0` with `u + v` in the orbits of `A`.
    F2rsSet { k: usize, a: Vec<BitVector> },
    /// `f0` plus the sum over `u * v = 0` with `u + v` in the orbit of `γ`.
    F2rsOrbit { k: usize, gamma: BitVector },
}

impl Construction {
    fn from_spec(family: ConstructionFamily, spec: GammaSpec) -> Result<Self> {
        if spec.family() != family.modifier_family() || spec.is_rotation_closed() {
            return Err(Error::InvalidSpec(format!(
                "family {family} needs a {} spec, got {}",
                family.modifier_family(),
                spec.family()
            )));
        }
        Ok(match family {
            ConstructionFamily::G4k => Construction::G4k(spec),
            ConstructionFamily::G8k => Construction::G8k(spec),
            ConstructionFamily::H4k2 => Construction::H4k2(spec),
            ConstructionFamily::H8k2 => Construction::H8k2(spec),
            _ => unreachable!(),
        })
    }

    pub fn g4k(spec: GammaSpec) -> Result<Self> {
        Self::from_spec(ConstructionFamily::G4k, spec)
    }

    pub fn g8k(spec: GammaSpec) -> Result<Self> {
        Self::from_spec(ConstructionFamily::G8k, spec)
    }

    pub fn h4k2(spec: GammaSpec) -> Result<Self> {
        Self::from_spec(ConstructionFamily::H4k2, spec)
    }

    pub fn h8k2(spec: GammaSpec) -> Result<Self> {
        Self::from_spec(ConstructionFamily::H8k2, spec)
    }

    /// `G8k` or `H8k2` over repetition words of length `2d`; only `d = 1`
    /// is supported.
    pub fn with_repetition_length(family: ConstructionFamily, d: usize, spec: GammaSpec) -> Result<Self> {
        if !matches!(family, ConstructionFamily::G8k | ConstructionFamily::H8k2) {
            return Err(Error::InvalidSpec(format!("family {family} has no repetition length")));
        }
        if d != 1 {
            return Err(Error::InvalidSpec(format!(
                "repetition length d={d} is not supported, only d=1"
            )));
        }
        Self::from_spec(family, spec)
    }

    pub fn f2rs(k: usize, p: Vec<BitVector>) -> Result<Self> {
        let c = Construction::F2rs { k, p };
        c.validate()?;
        Ok(c)
    }

    pub fn f2rs_set(k: usize, a: Vec<BitVector>) -> Result<Self> {
        let c = Construction::F2rsSet { k, a };
        c.validate()?;
        Ok(c)
    }

    pub fn f2rs_orbit(k: usize, gamma: BitVector) -> Result<Self> {
        let c = Construction::F2rsOrbit { k, gamma };
        c.validate()?;
        Ok(c)
    }

    /// Builds a construction from the string parameters of a function file
    /// or the command line.
    pub fn from_params(family: ConstructionFamily, params: &ConstructionParams) -> Result<Self> {
        let k = params.k;
        let need = |v: &Option<String>, flag: &str| {
            v.clone()
                .ok_or_else(|| Error::InvalidSpec(format!("family {family} needs --{flag}")))
        };
        let reject = |v: &Option<String>, flag: &str| match v {
            Some(_) => Err(Error::InvalidSpec(format!("family {family} takes no --{flag}"))),
            None => Ok(()),
        };
        match family {
            ConstructionFamily::F2rs | ConstructionFamily::F2rsSet | ConstructionFamily::F2rsOrbit => {
                reject(&params.gamma, "gamma")?;
                reject(&params.eset, "eset")?;
            }
            _ => {
                reject(&params.p, "p")?;
                reject(&params.a_set, "a-set")?;
                reject(&params.single_gamma, "single-gamma")?;
            }
        }
        match family {
            ConstructionFamily::F2rs => {
                reject(&params.a_set, "a-set")?;
                reject(&params.single_gamma, "single-gamma")?;
                Self::f2rs(k, parse_gamma_list(&need(&params.p, "p")?)?)
            }
            ConstructionFamily::F2rsSet => {
                reject(&params.p, "p")?;
                reject(&params.single_gamma, "single-gamma")?;
                Self::f2rs_set(k, parse_gamma_list(&need(&params.a_set, "a-set")?)?)
            }
            ConstructionFamily::F2rsOrbit => {
                reject(&params.p, "p")?;
                reject(&params.a_set, "a-set")?;
                let g = BitVector::parse(&need(&params.single_gamma, "single-gamma")?)?;
                Self::f2rs_orbit(k, g)
            }
            _ => {
                let mf = family.modifier_family();
                if !mf.needs_e_sets() {
                    reject(&params.eset, "eset")?;
                }
                let spec = GammaSpec::parse(mf, k, &need(&params.gamma, "gamma")?, params.eset.as_deref())?;
                Self::from_spec(family, spec)
            }
        }
    }

    /// The string parameters, inverse of [`Construction::from_params`].
    pub fn params(&self) -> ConstructionParams {
        let mut out = ConstructionParams {
            k: self.k(),
            ..Default::default()
        };
        match self {
            Construction::G4k(s) | Construction::G8k(s) | Construction::H4k2(s) | Construction::H8k2(s) => {
                out.gamma = Some(format_gamma_list(s.gammas()));
                out.eset = s.e_sets().map(format_eset_list);
            }
            Construction::F2rs { p, .. } => out.p = Some(format_gamma_list(p)),
            Construction::F2rsSet { a, .. } => out.a_set = Some(format_gamma_list(a)),
            Construction::F2rsOrbit { gamma, .. } => out.single_gamma = Some(gamma.to_bit_string()),
        }
        out
    }

    pub fn family(&self) -> ConstructionFamily {
        match self {
            Construction::G4k(_) => ConstructionFamily::G4k,
            Construction::G8k(_) => ConstructionFamily::G8k,
            Construction::H4k2(_) => ConstructionFamily::H4k2,
            Construction::H8k2(_) => ConstructionFamily::H8k2,
            Construction::F2rs { .. } => ConstructionFamily::F2rs,
            Construction::F2rsSet { .. } => ConstructionFamily::F2rsSet,
            Construction::F2rsOrbit { .. } => ConstructionFamily::F2rsOrbit,
        }
    }

    pub fn k(&self) -> usize {
        match self {
            Construction::G4k(s) | Construction::G8k(s) | Construction::H4k2(s) | Construction::H8k2(s) => s.k(),
            Construction::F2rs { k, .. }
            | Construction::F2rsSet { k, .. }
            | Construction::F2rsOrbit { k, .. } => *k,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.family().num_vars(self.k())
    }

    /// The base function and its parameter.
    pub fn base(&self) -> (BaseFamily, usize) {
        let k = self.k();
        match self.family() {
            ConstructionFamily::G4k => (BaseFamily::G0, k),
            ConstructionFamily::G8k => (BaseFamily::G0, 2 * k),
            ConstructionFamily::H4k2 => (BaseFamily::H0, k),
            ConstructionFamily::H8k2 => (BaseFamily::H0, 2 * k),
            _ => (BaseFamily::F0, k),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.k();
        let invalid = |m: String| Err(Error::InvalidSpec(m));
        match self {
            Construction::F2rs { p: vs, .. } | Construction::F2rsSet { a: vs, .. } => {
                if k == 0 {
                    return invalid("k must be at least 1".into());
                }
                if vs.is_empty() {
                    return invalid("orbit representative set is empty".into());
                }
                let mut reps = BTreeSet::new();
                for v in vs {
                    if v.len() != 2 * k {
                        return invalid(format!("`{v}` has length {}, expected {}", v.len(), 2 * k));
                    }
                    if !reps.insert(orbit_representative(v).bits()) {
                        return invalid(format!("`{v}` shares its cyclic orbit with another entry"));
                    }
                }
                Ok(())
            }
            Construction::F2rsOrbit { gamma, .. } => {
                if k == 0 {
                    return invalid("k must be at least 1".into());
                }
                if gamma.len() != 2 * k {
                    return invalid(format!("`{gamma}` has length {}, expected {}", gamma.len(), 2 * k));
                }
                if gamma.weight() < 2 {
                    return invalid(format!("`{gamma}` has weight below 2"));
                }
                Ok(())
            }
            Construction::G4k(s) | Construction::G8k(s) | Construction::H4k2(s) | Construction::H8k2(s) => {
                if s.family() != self.family().modifier_family() {
                    return invalid(format!("family {} got a {} spec", self.family(), s.family()));
                }
                Ok(())
            }
        }
    }

    /// The `Γ` spec whose modifier set is added to the base function.
    ///
    /// For the orbit-set forms, `Γ` is the set of `z` covering an odd number
    /// of members of the union of the given orbits.
    pub fn modifier_spec(&self) -> Result<GammaSpec> {
        self.validate()?;
        let k = self.k();
        match self {
            Construction::G4k(s) | Construction::G8k(s) | Construction::H4k2(s) | Construction::H8k2(s) => {
                Ok(s.clone())
            }
            Construction::F2rs { p, .. } => {
                let gammas: BTreeSet<BitVector> = p.iter().flat_map(orbit_members).collect();
                GammaSpec::rotation_closed(k, gammas.into_iter().collect())
            }
            Construction::F2rsSet { .. } | Construction::F2rsOrbit { .. } => {
                let words = self.orbit_words();
                let len = 2 * k;
                let gammas: Vec<BitVector> = (0..1u64 << len)
                    .filter(|&z| words.iter().filter(|&&w| w & !z == 0).count() % 2 == 1)
                    .map(|z| BitVector::new(len, z))
                    .collect();
                GammaSpec::rotation_closed(k, gammas)
            }
        }
    }

    /// Union of the orbits named by an `F2rsSet` or `F2rsOrbit` request.
    pub(crate) fn orbit_words(&self) -> Vec<u64> {
        let seeds: Vec<BitVector> = match self {
            Construction::F2rsSet { a, .. } => a.clone(),
            Construction::F2rsOrbit { gamma, .. } => vec![*gamma],
            _ => Vec::new(),
        };
        let words: BTreeSet<u64> = seeds
            .iter()
            .flat_map(orbit_members)
            .map(|v| v.bits())
            .collect();
        words.into_iter().collect()
    }

    /// Whether the family's parity condition for maximal degree holds.
    pub fn predicts_max_degree(&self) -> Result<bool> {
        let spec = self.modifier_spec()?;
        Ok(match self.family() {
            ConstructionFamily::H4k2 | ConstructionFamily::H8k2 => spec.e_weight() % 2 == 1,
            _ => spec.gammas().len() % 2 == 1,
        })
    }

    pub fn family_max_degree(&self) -> u32 {
        self.family().max_degree(self.k())
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.params();
        write!(f, "{} k={}", self.family(), p.k)?;
        for (name, v) in [
            ("gamma", &p.gamma),
            ("eset", &p.eset),
            ("p", &p.p),
            ("a-set", &p.a_set),
            ("single-gamma", &p.single_gamma),
        ] {
            if let Some(v) = v {
                write!(f, " {name}={v}")?;
            }
        }
        Ok(())
    }
}

/// A constructed function with its closed forms.
#[derive(Clone, Debug)]
pub struct ConstructedFunction {
    construction: Construction,
    function: BooleanFunction,
    closed_anf: AnfPolynomial,
    closed_dual: BooleanFunction,
    predicts_max_degree: bool,
}

impl ConstructedFunction {
    pub fn construction(&self) -> &Construction {
        &self.construction
    }

    pub fn family(&self) -> ConstructionFamily {
        self.construction.family()
    }

    pub fn params(&self) -> ConstructionParams {
        self.construction.params()
    }

    pub fn function(&self) -> &BooleanFunction {
        &self.function
    }

    pub fn closed_anf(&self) -> &AnfPolynomial {
        &self.closed_anf
    }

    pub fn closed_dual(&self) -> &BooleanFunction {
        &self.closed_dual
    }

    pub fn predicts_max_degree(&self) -> bool {
        self.predicts_max_degree
    }

    /// Replaces the truth table, keeping the closed forms. Used to test
    /// that verification catches a corrupted function.
    pub fn with_function(mut self, function: BooleanFunction) -> Result<Self> {
        crate::error::ensure_same_dimension(self.function.n(), function.n())?;
        self.function = function;
        Ok(self)
    }
}

/// The truth table `base ⊕ χ_S` alone, without closed forms.
pub fn construct_function_with(c: &Construction, cap: Capacity) -> Result<BooleanFunction> {
    c.validate()?;
    cap.check(c.num_vars())?;
    let (family, t) = c.base();
    let base = base_function_with(family, t, cap)?;
    let set = build_modifier_set_with(&c.modifier_spec()?, cap)?;
    base.xor(&BooleanFunction::characteristic(&set)?)
}

pub fn construct_with(c: &Construction, cap: Capacity) -> Result<ConstructedFunction> {
    let function = construct_function_with(c, cap)?;
    Ok(ConstructedFunction {
        construction: c.clone(),
        function,
        closed_anf: closed_form_anf(c)?,
        closed_dual: closed_form_dual_with(c, cap)?,
        predicts_max_degree: c.predicts_max_degree()?,
    })
}

pub fn construct(c: &Construction) -> Result<ConstructedFunction> {
    construct_with(c, Capacity::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::{classify, dual};
    use crate::subspaces::{parse_eset_list, ESet};

    fn bvs(s: &str) -> Vec<BitVector> {
        parse_gamma_list(s).unwrap()
    }

    fn check(c: &Construction) -> ConstructedFunction {
        let cf = construct(c).unwrap();
        let f = cf.function();
        assert!(classify(f).unwrap().is_bent_negabent(), "{c}");
        assert_eq!(&f.anf(), cf.closed_anf(), "anf {c}");
        assert_eq!(&dual(f).unwrap(), cf.closed_dual(), "dual {c}");
        if cf.predicts_max_degree() {
            assert_eq!(f.algebraic_degree(), c.family_max_degree(), "{c}");
        }
        cf
    }

    #[test]
    fn g4k_single_gamma_degree_four() {
        let c = Construction::g4k(GammaSpec::s1(2, bvs("0001")).unwrap()).unwrap();
        let cf = check(&c);
        assert!(cf.predicts_max_degree());
        assert_eq!(cf.function().algebraic_degree(), 4);
    }

    #[test]
    fn g4k_all_k1_specs() {
        for mask in 1u64..16 {
            let gammas = (0..4).filter(|i| mask >> i & 1 == 1).map(|i| BitVector::new(2, i)).collect();
            check(&Construction::g4k(GammaSpec::s1(1, gammas).unwrap()).unwrap());
        }
    }

    #[test]
    fn g4k_even_gamma_below_max() {
        let c = Construction::g4k(GammaSpec::s1(2, bvs("0001,1000")).unwrap()).unwrap();
        let cf = check(&c);
        assert!(!cf.predicts_max_degree());
        assert!(cf.function().algebraic_degree() < 4);
    }

    #[test]
    fn small_closed_anf_terms() {
        let c = Construction::g4k(GammaSpec::s1(1, bvs("00")).unwrap()).unwrap();
        let g0 = base_function(BaseFamily::G0, 1).unwrap().anf();
        let delta = closed_form_anf(&c).unwrap().add(&g0).unwrap();
        // (x0 + x1 + 1)(y0 + y1 + 1)
        let product = AnfPolynomial::parse(
            4,
            "x0*x2 + x0*x3 + x0 + x1*x2 + x1*x3 + x1 + x2 + x3 + 1",
        )
        .unwrap();
        assert_eq!(delta, product);
        let c = Construction::g8k(GammaSpec::s2(1, bvs("0000")).unwrap()).unwrap();
        let g0 = base_function(BaseFamily::G0, 2).unwrap().anf();
        let delta = closed_form_anf(&c).unwrap().add(&g0).unwrap();
        // (x0 + x1 + 1)(x2 + x3 + 1)(y0 + y1 + 1)(y2 + y3 + 1)
        assert_eq!(delta.term_count(), 81);
        assert_eq!(delta.degree(), 4);
    }

    #[test]
    fn g4k_k1_dual_example() {
        // x0x1 + x·y + χ{x'' = x', y'' = y' + 1}
        let c = Construction::g4k(GammaSpec::s1(1, bvs("00")).unwrap()).unwrap();
        let expected = BooleanFunction::from_fn(4, |z| {
            let (x0, x1, y0, y1) = (z & 1, z >> 1 & 1, z >> 2 & 1, z >> 3 & 1);
            let q = (x0 & x1) ^ (x0 & y0) ^ (x1 & y1);
            let s = (x1 == x0 && y1 != y0) as u64;
            q ^ s == 1
        })
        .unwrap();
        assert_eq!(closed_form_dual(&c).unwrap(), expected);
    }

    #[test]
    fn g8k_k1_all_representative_pairs() {
        let reps = ["0000", "1000", "0010", "1010"];
        for mask in 1u32..16 {
            let gammas = reps
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, s)| BitVector::parse(s).unwrap())
                .collect();
            check(&Construction::g8k(GammaSpec::s2(1, gammas).unwrap()).unwrap());
        }
    }

    #[test]
    fn h4k2_samples() {
        let c = Construction::h4k2(GammaSpec::s3(2, bvs("1000,0101"), parse_eset_list("1,B").unwrap()).unwrap())
            .unwrap();
        let cf = check(&c);
        assert!(cf.predicts_max_degree());
        assert_eq!(cf.function().algebraic_degree(), 5);
        for e in ESet::ALL {
            for g in ["00", "01", "10", "11"] {
                check(&Construction::h4k2(GammaSpec::s3(1, bvs(g), vec![e]).unwrap()).unwrap());
            }
        }
        check(&Construction::h4k2(GammaSpec::s3(1, bvs("00,11"), vec![ESet::Zero, ESet::Both]).unwrap()).unwrap());
    }

    #[test]
    fn h8k2_samples() {
        for e in ESet::ALL {
            check(&Construction::h8k2(GammaSpec::s4(1, bvs("0110"), vec![e]).unwrap()).unwrap());
        }
        let c = Construction::h8k2(
            GammaSpec::s4(1, bvs("0000,1000"), vec![ESet::One, ESet::Both]).unwrap(),
        )
        .unwrap();
        check(&c);
    }

    #[test]
    fn f2rs_all_k1_and_some_k2() {
        for p in ["00", "10", "11", "00,10", "00,11", "10,11", "00,10,11"] {
            let cf = check(&Construction::f2rs(1, bvs(p)).unwrap());
            assert_eq!(cf.function().cyclic_shift(2 % 4).unwrap(), *cf.function());
        }
        for p in ["1111", "1000,1100", "0000,1010", "1110"] {
            let cf = check(&Construction::f2rs(2, bvs(p)).unwrap());
            assert_eq!(cf.function().rotation_symmetry_order(), 2, "{p}");
        }
    }

    #[test]
    fn f2rs_orbit_degree_is_weight() {
        for g in ["1100", "1010", "1110", "1111"] {
            let gamma = BitVector::parse(g).unwrap();
            let cf = check(&Construction::f2rs_orbit(2, gamma).unwrap());
            assert_eq!(cf.function().algebraic_degree(), gamma.weight(), "{g}");
        }
        assert!(Construction::f2rs_orbit(2, BitVector::parse("1000").unwrap()).is_err());
    }

    #[test]
    fn f2rs_set_matches_orbit_sum() {
        let c = Construction::f2rs_set(2, bvs("1100,1110")).unwrap();
        let cf = check(&c);
        let f0 = base_function(BaseFamily::F0, 2).unwrap().anf();
        let delta = cf.closed_anf().add(&f0).unwrap();
        for mask in delta.monomials() {
            let (u, v) = (mask & 15, mask >> 4);
            assert_eq!(u & v, 0);
            let w = BitVector::new(4, u | v);
            assert!(w.weight() >= 2);
        }
    }

    #[test]
    fn params_round_trip() {
        let cases = [
            Construction::g4k(GammaSpec::s1(2, bvs("0001")).unwrap()).unwrap(),
            Construction::h4k2(GammaSpec::s3(1, bvs("01"), vec![ESet::Both]).unwrap()).unwrap(),
            Construction::f2rs(2, bvs("1111,1000")).unwrap(),
            Construction::f2rs_set(2, bvs("1100")).unwrap(),
            Construction::f2rs_orbit(2, BitVector::parse("1111").unwrap()).unwrap(),
        ];
        for c in cases {
            let p = c.params();
            assert_eq!(Construction::from_params(c.family(), &p).unwrap(), c);
        }
    }

    #[test]
    fn invalid_requests() {
        assert!(Construction::g4k(GammaSpec::s2(1, bvs("0000")).unwrap()).is_err());
        assert!(Construction::f2rs(2, bvs("1000,0100")).is_err());
        assert!(Construction::f2rs(2, vec![]).is_err());
        let spec = GammaSpec::s2(1, bvs("0000")).unwrap();
        assert!(Construction::with_repetition_length(ConstructionFamily::G8k, 2, spec.clone()).is_err());
        assert!(Construction::with_repetition_length(ConstructionFamily::G8k, 1, spec).is_ok());
        let p = ConstructionParams {
            k: 1,
            gamma: Some("00".into()),
            eset: Some("1".into()),
            ..Default::default()
        };
        assert!(Construction::from_params(ConstructionFamily::G4k, &p).is_err());
        assert!("f2rs_orbit".parse::<ConstructionFamily>().is_ok());
        assert!("g5k".parse::<ConstructionFamily>().is_err());
    }

    #[test]
    fn capacity_is_enforced() {
        let c = Construction::g4k(GammaSpec::s1(4, bvs("00000000")).unwrap()).unwrap();
        let cap = Capacity::new(12).unwrap();
        assert!(matches!(construct_with(&c, cap), Err(Error::Capacity { .. })));
    }
}
