//! Frame coefficients `c_ω = W_{f0,T}(ω) / W_{f0}(ω)` and their nega analog.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::BitVector;
use crate::error::{ensure_same_dimension, Error, Result};
use crate::function::BooleanFunction;
use crate::spectra::{
    fragmentary_nega_spectrum, fragmentary_walsh_spectrum, nega_transform, walsh_transform,
    GaussianInteger, NegaSpectrum, WalshSpectrum,
};
use crate::subspaces::VectorSet;

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Exact `num / den` with `den > 0` and no common integer factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaussianRational {
    num: GaussianInteger,
    den: i64,
}

impl GaussianRational {
    pub const ZERO: GaussianRational = GaussianRational::new_unchecked(GaussianInteger::ZERO, 1);
    pub const ONE: GaussianRational = GaussianRational::new_unchecked(GaussianInteger::ONE, 1);
    pub const HALF_PLUS_I: GaussianRational = GaussianRational::new_unchecked(GaussianInteger::new(1, 1), 2);
    pub const HALF_MINUS_I: GaussianRational = GaussianRational::new_unchecked(GaussianInteger::new(1, -1), 2);

    const fn new_unchecked(num: GaussianInteger, den: i64) -> Self {
        GaussianRational { num, den }
    }

    /// `a / b` for a nonzero `b`.
    pub fn ratio(a: GaussianInteger, b: GaussianInteger) -> Option<Self> {
        if b.is_zero() {
            return None;
        }
        let mut num = a * b.conj();
        let mut den = b.norm_sqr();
        let g = gcd(gcd(num.re, num.im), den).max(1);
        num = GaussianInteger::new(num.re / g, num.im / g);
        den /= g;
        Some(GaussianRational { num, den })
    }

    pub fn numerator(&self) -> GaussianInteger {
        self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else if self.num.im == 0 {
            write!(f, "{}/{}", self.num.re, self.den)
        } else {
            write!(f, "({})/{}", self.num, self.den)
        }
    }
}

/// Which multiple of `N_{f0}(ω)` the modified function takes at `ω`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum NegaBranch {
    /// `c = 0`: `N_f = N_{f0}`.
    Same,
    /// `c = 1`: `N_f = -N_{f0}`.
    Negated,
    /// `c = (1+i)/2`: `N_f = -i N_{f0}`.
    MinusI,
    /// `c = (1-i)/2`: `N_f = i N_{f0}`.
    PlusI,
}

impl NegaBranch {
    pub const ALL: [NegaBranch; 4] = [
        NegaBranch::Same,
        NegaBranch::Negated,
        NegaBranch::MinusI,
        NegaBranch::PlusI,
    ];

    fn of(c: GaussianRational) -> Option<NegaBranch> {
        match c {
            _ if c == GaussianRational::ZERO => Some(NegaBranch::Same),
            _ if c == GaussianRational::ONE => Some(NegaBranch::Negated),
            _ if c == GaussianRational::HALF_PLUS_I => Some(NegaBranch::MinusI),
            _ if c == GaussianRational::HALF_MINUS_I => Some(NegaBranch::PlusI),
            _ => None,
        }
    }

    /// The factor `1 - 2c`.
    pub fn factor(self) -> GaussianInteger {
        match self {
            NegaBranch::Same => GaussianInteger::ONE,
            NegaBranch::Negated => GaussianInteger::new(-1, 0),
            NegaBranch::MinusI => GaussianInteger::new(0, -1),
            NegaBranch::PlusI => GaussianInteger::I,
        }
    }
}

/// All coefficients of one `(f0, T)` pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameCoefficients {
    n: usize,
    pub walsh_c: Vec<GaussianRational>,
    pub nega_c: Vec<GaussianRational>,
    pub walsh_ok: bool,
    pub nega_ok: bool,
}

impl FrameCoefficients {
    pub fn n(&self) -> usize {
        self.n
    }

    /// First `ω` with `c_ω ∉ {0, 1}`.
    pub fn walsh_violation(&self) -> Option<BitVector> {
        self.walsh_c
            .iter()
            .position(|&c| c != GaussianRational::ZERO && c != GaussianRational::ONE)
            .map(|u| BitVector::new(self.n, u as u64))
    }

    /// First `ω` with `c_ω ∉ {0, 1, (1 ± i)/2}`.
    pub fn nega_violation(&self) -> Option<BitVector> {
        self.nega_c
            .iter()
            .position(|&c| NegaBranch::of(c).is_none())
            .map(|u| BitVector::new(self.n, u as u64))
    }

    /// Branch hit at `ω`, when the coefficient is admissible.
    pub fn nega_branch(&self, omega: u64) -> Option<NegaBranch> {
        NegaBranch::of(self.nega_c[omega as usize])
    }

    /// Number of points per branch, in the order of [`NegaBranch::ALL`].
    pub fn branch_counts(&self) -> [u64; 4] {
        let mut counts = [0u64; 4];
        for &c in &self.nega_c {
            if let Some(b) = NegaBranch::of(c) {
                counts[NegaBranch::ALL.iter().position(|&x| x == b).unwrap()] += 1;
            }
        }
        counts
    }

    /// Points where the Walsh coefficient is 1, where the dual flips.
    pub fn walsh_flip_set(&self) -> impl Iterator<Item = u64> + '_ {
        self.walsh_c
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == GaussianRational::ONE)
            .map(|(u, _)| u as u64)
    }
}

pub(crate) fn coefficients_from_spectra(
    full_w: &WalshSpectrum,
    frag_w: &WalshSpectrum,
    full_n: &NegaSpectrum,
    frag_n: &NegaSpectrum,
) -> Result<FrameCoefficients> {
    let n = full_w.n();
    let mut walsh_c = Vec::with_capacity(full_w.values().len());
    for (u, (&w, &fw)) in full_w.values().iter().zip(frag_w.values()).enumerate() {
        let c = GaussianRational::ratio(fw.into(), w.into()).ok_or(Error::NotBent {
            point: BitVector::new(n, u as u64),
        })?;
        walsh_c.push(c);
    }
    let mut nega_c = Vec::with_capacity(full_n.values().len());
    for (u, (&w, &fw)) in full_n.values().iter().zip(frag_n.values()).enumerate() {
        let c = GaussianRational::ratio(fw, w).ok_or(Error::NotNegabent {
            point: BitVector::new(n, u as u64),
        })?;
        nega_c.push(c);
    }
    let mut out = FrameCoefficients {
        n,
        walsh_c,
        nega_c,
        walsh_ok: false,
        nega_ok: false,
    };
    out.walsh_ok = out.walsh_violation().is_none();
    out.nega_ok = out.nega_violation().is_none();
    Ok(out)
}

/// Exact coefficients of the modification `f = f0 + χ_T`.
///
/// Fails with `NotBent` or `NotNegabent` at the first point where a spectrum
/// of `f0` vanishes.
pub fn extract_frame_coefficients(f0: &BooleanFunction, t: &VectorSet) -> Result<FrameCoefficients> {
    ensure_same_dimension(f0.n(), t.n())?;
    coefficients_from_spectra(
        &walsh_transform(f0)?,
        &fragmentary_walsh_spectrum(f0, t)?,
        &nega_transform(f0)?,
        &fragmentary_nega_spectrum(f0, t)?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{base_function, BaseFamily};
    use crate::subspaces::{build_s1, parse_gamma_list, GammaSpec};

    #[test]
    fn ratios_reduce() {
        let c = GaussianRational::ratio(GaussianInteger::new(4, 4), GaussianInteger::new(8, 0)).unwrap();
        assert_eq!(c, GaussianRational::HALF_PLUS_I);
        let c = GaussianRational::ratio(GaussianInteger::new(0, 0), GaussianInteger::new(0, 4)).unwrap();
        assert_eq!(c, GaussianRational::ZERO);
        let c = GaussianRational::ratio(GaussianInteger::new(0, 4), GaussianInteger::new(0, 4)).unwrap();
        assert_eq!(c, GaussianRational::ONE);
        assert!(GaussianRational::ratio(GaussianInteger::ONE, GaussianInteger::ZERO).is_none());
        let c = GaussianRational::ratio(GaussianInteger::new(1, 0), GaussianInteger::new(4, 0)).unwrap();
        assert_eq!(c.to_string(), "1/4");
    }

    #[test]
    fn empty_and_full_sets() {
        let g0 = base_function(BaseFamily::G0, 1).unwrap();
        let empty = extract_frame_coefficients(&g0, &VectorSet::empty(4).unwrap()).unwrap();
        assert!(empty.walsh_ok && empty.nega_ok);
        assert!(empty.walsh_c.iter().all(|&c| c == GaussianRational::ZERO));
        assert!(empty.nega_c.iter().all(|&c| c == GaussianRational::ZERO));
        let full = extract_frame_coefficients(&g0, &VectorSet::full(4).unwrap()).unwrap();
        assert!(full.walsh_ok && full.nega_ok);
        assert!(full.walsh_c.iter().all(|&c| c == GaussianRational::ONE));
        assert!(full.nega_c.iter().all(|&c| c == GaussianRational::ONE));
    }

    #[test]
    fn s1_coefficients_are_zero_or_one() {
        let g0 = base_function(BaseFamily::G0, 2).unwrap();
        let s1 = build_s1(&GammaSpec::s1(2, parse_gamma_list("0001").unwrap()).unwrap()).unwrap();
        let c = extract_frame_coefficients(&g0, &s1).unwrap();
        assert!(c.walsh_ok && c.nega_ok);
        let counts = c.branch_counts();
        assert_eq!(counts[0] + counts[1], 256);
    }

    #[test]
    fn non_admissible_set_is_flagged() {
        let g0 = base_function(BaseFamily::G0, 1).unwrap();
        let t = VectorSet::from_indices(4, [0]).unwrap();
        let c = extract_frame_coefficients(&g0, &t).unwrap();
        assert!(!c.walsh_ok);
        assert!(c.walsh_violation().is_some());
    }

    #[test]
    fn vanishing_spectrum_is_an_error() {
        let z = BooleanFunction::zero(2).unwrap();
        let err = extract_frame_coefficients(&z, &VectorSet::empty(2).unwrap()).unwrap_err();
        assert!(matches!(err, Error::NotBent { .. }));
    }
}
