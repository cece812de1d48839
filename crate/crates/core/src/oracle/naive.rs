//! Transforms by the literal double sum, and the closed-form spectra of the
//! quadratic base functions.

use crate::bits::{low_mask, BitVector};
use crate::error::{Error, Result};
use crate::function::BooleanFunction;
use crate::layout::{dot, extended_split, halves, pair_split, parity};
use crate::spectra::{GaussianInteger, NegaSpectrum, WalshSpectrum};
use crate::subspaces::VectorSet;

/// Largest `n` accepted by the quadratic-cost oracles.
pub const NAIVE_MAX_VARS: usize = 14;

/// Both spectra of a function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectra {
    pub walsh: WalshSpectrum,
    pub nega: NegaSpectrum,
}

fn sgn(bit: bool) -> i64 {
    if bit {
        -1
    } else {
        1
    }
}

/// Walsh and nega-Hadamard spectra by direct summation, `O(4^n)`.
pub fn naive_transforms(f: &BooleanFunction) -> Result<Spectra> {
    let n = f.n();
    if n > NAIVE_MAX_VARS {
        return Err(Error::Capacity {
            requested: n,
            limit: NAIVE_MAX_VARS,
        });
    }
    let size = 1u64 << n;
    let mut walsh = Vec::with_capacity(size as usize);
    let mut nega = Vec::with_capacity(size as usize);
    for u in 0..size {
        let mut w = 0i64;
        let mut g = GaussianInteger::ZERO;
        for x in 0..size {
            let s = sgn(f.value(x) ^ dot(u, x));
            w += s;
            g += GaussianInteger::i_pow(x.count_ones()).scale(s);
        }
        walsh.push(w);
        nega.push(g);
    }
    Ok(Spectra {
        walsh: WalshSpectrum::from_values(n, walsh)?,
        nega: NegaSpectrum::from_values(n, nega)?,
    })
}

/// `Σ_{x ∈ T} (-1)^{f(x) + u·x}` by direct summation.
pub(crate) fn direct_fragmentary_walsh(f: &BooleanFunction, t: &VectorSet, u: u64) -> i64 {
    t.iter_indices().map(|x| sgn(f.value(x) ^ dot(u, x))).sum()
}

/// `Σ_{x ∈ T} (-1)^{f(x) + u·x} i^{wt(x)}` by direct summation.
pub(crate) fn direct_fragmentary_nega(f: &BooleanFunction, t: &VectorSet, u: u64) -> GaussianInteger {
    t.iter_indices().fold(GaussianInteger::ZERO, |acc, x| {
        acc + GaussianInteger::i_pow(x.count_ones()).scale(sgn(f.value(x) ^ dot(u, x)))
    })
}

/// `W_{g0}(u, v) = 2^{2t} (-1)^{u'·u'' + u·v}`.
pub fn g0_walsh_closed(t: usize, z: u64) -> i64 {
    let m = 2 * t;
    let (u, v) = pair_split(z, m);
    let (up, upp) = halves(u, m);
    sgn(dot(up, upp) ^ dot(u, v)) << (2 * t)
}

/// `N_{g0}(u, v) = 2^{2t} (-1)^{(u'+v')·(u''+v'')} i^{t - wt(u)}`.
pub fn g0_nega_closed(t: usize, z: u64) -> GaussianInteger {
    let m = 2 * t;
    let (u, v) = pair_split(z, m);
    let (up, upp) = halves(u, m);
    let (vp, vpp) = halves(v, m);
    let e = (t as i64 - u.count_ones() as i64).rem_euclid(4) as u32;
    GaussianInteger::i_pow(e).scale(sgn(dot(up ^ vp, upp ^ vpp)) << (2 * t))
}

/// `W_{h0}(U, V) = 2^{2t+1} (-1)^{u'·u'' + U·V + u_m (v_0 + u_t)}`.
pub fn h0_walsh_closed(t: usize, z: u64) -> i64 {
    let m = 2 * t;
    let (u, um, v, vm) = extended_split(z, m);
    let (up, upp) = halves(u, m);
    let extra = um & (((v & 1) ^ (u >> t & 1)) == 1);
    sgn(dot(up, upp) ^ dot(u, v) ^ (um & vm) ^ extra) << (2 * t + 1)
}

/// `N_{h0}(U, V) = N_{g0}(u, v) [1 + i(-1)^{u_m} + (-1)^s - i(-1)^{u_m + s}]`
/// with `s = u_0 + u_t + v_t + v_m`.
pub fn h0_nega_closed(t: usize, z: u64) -> GaussianInteger {
    let m = 2 * t;
    let (u, um, v, vm) = extended_split(z, m);
    let s = parity(u & 1) ^ parity(u >> t & 1) ^ parity(v >> t & 1) ^ vm;
    let factor = GaussianInteger::ONE
        + GaussianInteger::I.scale(sgn(um))
        + GaussianInteger::from(sgn(s))
        - GaussianInteger::I.scale(sgn(um ^ s));
    g0_nega_closed(t, u | (v << m)) * factor
}

/// `Σ_{x ∈ F_2^k} (-1)^{α·x}` equals `2^k` at `α = 0` and `0` elsewhere,
/// checked exhaustively. Returns the first `α` where it fails.
pub fn linear_character_sum_failure(k: usize) -> Option<BitVector> {
    (0..1u64 << k)
        .find(|&a| {
            let s: i64 = (0..1u64 << k).map(|x| sgn(dot(a, x))).sum();
            s != if a == 0 { 1 << k } else { 0 }
        })
        .map(|a| BitVector::new(k, a & low_mask(k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{base_function, BaseFamily};
    use crate::spectra::{nega_transform, walsh_transform};

    #[test]
    fn trivial_spectra() {
        let z = BooleanFunction::zero(1).unwrap();
        let s = naive_transforms(&z).unwrap();
        assert_eq!(s.walsh.values(), &[2, 0]);
        assert_eq!(s.nega.values(), &[GaussianInteger::new(1, 1), GaussianInteger::new(1, -1)]);
        let f = BooleanFunction::from_fn(2, |x| x == 3).unwrap();
        assert_eq!(naive_transforms(&f).unwrap().walsh.values(), &[2, 2, 2, -2]);
    }

    #[test]
    fn capacity() {
        let f = BooleanFunction::zero(15).unwrap();
        assert!(matches!(naive_transforms(&f), Err(Error::Capacity { .. })));
    }

    #[test]
    fn base_spectra_match_closed_forms() {
        for t in 1..=2 {
            let g0 = base_function(BaseFamily::G0, t).unwrap();
            let (w, n) = (walsh_transform(&g0).unwrap(), nega_transform(&g0).unwrap());
            for z in 0..g0.size() {
                assert_eq!(w.at(z), g0_walsh_closed(t, z), "g0 walsh t={t} z={z}");
                assert_eq!(n.at(z), g0_nega_closed(t, z), "g0 nega t={t} z={z}");
            }
            let h0 = base_function(BaseFamily::H0, t).unwrap();
            let (w, n) = (walsh_transform(&h0).unwrap(), nega_transform(&h0).unwrap());
            for z in 0..h0.size() {
                assert_eq!(w.at(z), h0_walsh_closed(t, z), "h0 walsh t={t} z={z}");
                assert_eq!(n.at(z), h0_nega_closed(t, z), "h0 nega t={t} z={z}");
            }
        }
    }

    #[test]
    fn linear_character_sums() {
        for k in 0..=8 {
            assert_eq!(linear_character_sum_failure(k), None);
        }
    }
}
