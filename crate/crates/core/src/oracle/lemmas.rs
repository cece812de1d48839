//! Point-by-point checks of the fragmentary transforms of `g0` and `h0` over
//! the modifier sets against their case-split closed forms.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::bits::{low_mask, BitVector};
use crate::constructions::{base_function, BaseFamily};
use crate::error::{Error, Result};
use crate::layout::{extended_split, halves, pair_split};
use crate::spectra::GaussianInteger;
use crate::subspaces::{build_modifier_set, ESet, GammaSpec, ModifierFamily};

use super::naive::{
    direct_fragmentary_nega, direct_fragmentary_walsh, g0_nega_closed, g0_walsh_closed,
    h0_nega_closed, h0_walsh_closed, NAIVE_MAX_VARS,
};
use super::report::{Check, VerificationReport};

/// How often each case of the closed forms occurred.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaBranches {
    /// Points where the Walsh side equals the full transform.
    pub walsh_full: u64,
    /// Points where exactly one `(γ, ε)` pair matches on the nega side.
    pub nega_single: u64,
    /// Points where two `(γ, ε)` pairs match on the nega side.
    pub nega_double: u64,
    /// Largest number of matching pairs seen at one point, either side.
    pub max_matches: usize,
}

/// Doubled expected values at one point and the number of matches.
struct Expected {
    walsh2: i64,
    nega2: GaussianInteger,
    walsh_matches: usize,
    nega_matches: usize,
}

fn sig(v: u64, pairs: usize) -> u64 {
    (0..pairs).fold(0, |acc, i| acc | (((v >> (2 * i)) ^ (v >> (2 * i + 1))) & 1) << i)
}

fn swap_halves(g: u64, len: usize) -> u64 {
    let h = len / 2;
    (g >> h) | ((g & low_mask(h)) << h)
}

fn sgn(bit: bool) -> i64 {
    if bit {
        -1
    } else {
        1
    }
}

/// `2 · ½(1 + i(-1)^s) N = (1 + i(-1)^s) N`.
fn half_factor2(s: bool, n: GaussianInteger) -> GaussianInteger {
    (GaussianInteger::ONE + GaussianInteger::I.scale(sgn(s))) * n
}

fn bit(v: u64, j: usize) -> bool {
    v >> j & 1 == 1
}

fn expected(spec: &GammaSpec, cells: &[(u64, ESet)], z: u64) -> Expected {
    let k = spec.k();
    let ones_k = low_mask(k);
    let lookup = |g: u64| cells.iter().find(|(c, _)| *c == g).map(|&(_, e)| e);
    match spec.family() {
        ModifierFamily::S1 => {
            let m = 2 * k;
            let (u, v) = pair_split(z, m);
            let (up, upp) = halves(u, m);
            let (vp, vpp) = halves(v, m);
            let wg = (up ^ upp ^ vp ^ vpp ^ ones_k) | (up ^ upp) << k;
            let ng = (vp ^ vpp) | (up ^ upp ^ vp ^ vpp ^ ones_k) << k;
            let wm = lookup(wg).is_some() as usize;
            let nm = lookup(ng).is_some() as usize;
            Expected {
                walsh2: 2 * wm as i64 * g0_walsh_closed(k, z),
                nega2: g0_nega_closed(k, z).scale(2 * nm as i64),
                walsh_matches: wm,
                nega_matches: nm,
            }
        }
        ModifierFamily::S2 => {
            let m = 4 * k;
            let pairs = 2 * k;
            let all = low_mask(pairs);
            let (u, v) = pair_split(z, m);
            let (su, sv) = (sig(u, pairs), sig(v, pairs));
            let wm = cells
                .iter()
                .filter(|(g, _)| sig(*g, pairs) == su && sig(swap_halves(*g, m), pairs) == sv)
                .count();
            let nm = cells
                .iter()
                .filter(|(g, _)| sig(u ^ g, pairs) == all && sig(v ^ g ^ swap_halves(*g, m), pairs) == all)
                .count();
            Expected {
                walsh2: 2 * wm as i64 * g0_walsh_closed(2 * k, z),
                nega2: g0_nega_closed(2 * k, z).scale(2 * nm as i64),
                walsh_matches: wm,
                nega_matches: nm,
            }
        }
        ModifierFamily::S3 => {
            let m = 2 * k;
            let (u, um, v, vm) = extended_split(z, m);
            let (up, upp) = halves(u, m);
            let (vp, vpp) = halves(v, m);
            let g2 = up ^ upp ^ um as u64;
            let g1 = vp ^ vpp ^ ones_k ^ g2;
            let wm = lookup(g1 | g2 << k).is_some_and(|e| e.contains(um)) as usize;
            let full = h0_nega_closed(k, z);
            let s = bit(u, 0) ^ bit(u, k) ^ bit(v, k) ^ vm ^ um;
            let mut nega2 = GaussianInteger::ZERO;
            let mut nm = 0;
            for eps in [false, true] {
                let g1 = vp ^ vpp;
                let g2 = g1 ^ up ^ upp ^ ones_k ^ eps as u64;
                if lookup(g1 | g2 << k).is_some_and(|e| e.contains(eps)) {
                    nm += 1;
                    nega2 += half_factor2(s ^ eps, full);
                }
            }
            Expected {
                walsh2: 2 * wm as i64 * h0_walsh_closed(k, z),
                nega2,
                walsh_matches: wm,
                nega_matches: nm,
            }
        }
        ModifierFamily::S4 => {
            let m = 4 * k;
            let pairs = 2 * k;
            let all = low_mask(pairs);
            let (u, um, v, vm) = extended_split(z, m);
            let t = 2 * k;
            let wm = cells
                .iter()
                .filter(|(g, e)| {
                    e.contains(um)
                        && sig(u ^ um as u64, pairs) == sig(*g, pairs)
                        && sig(v, pairs) == sig(swap_halves(*g, m), pairs)
                })
                .count();
            let full = h0_nega_closed(t, z);
            let s = bit(u, 0) ^ bit(u, t) ^ bit(v, t) ^ vm ^ um;
            let mut nega2 = GaussianInteger::ZERO;
            let mut nm = 0;
            for &(g, e) in cells {
                for eps in e.members() {
                    if sig(u ^ g ^ eps as u64, pairs) == all && sig(v ^ g ^ swap_halves(g, m), pairs) == all {
                        nm += 1;
                        nega2 += half_factor2(s ^ eps, full);
                    }
                }
            }
            Expected {
                walsh2: 2 * wm as i64 * h0_walsh_closed(t, z),
                nega2,
                walsh_matches: wm,
                nega_matches: nm,
            }
        }
        ModifierFamily::T => unreachable!(),
    }
}

fn base_of(spec: &GammaSpec) -> (BaseFamily, usize) {
    let k = spec.k();
    match spec.family() {
        ModifierFamily::S1 => (BaseFamily::G0, k),
        ModifierFamily::S2 => (BaseFamily::G0, 2 * k),
        ModifierFamily::S3 => (BaseFamily::H0, k),
        _ => (BaseFamily::H0, 2 * k),
    }
}

/// Runs the fragmentary-sum checks and also returns the case counts.
pub fn fragmentary_lemma_branches(spec: &GammaSpec) -> Result<(VerificationReport, LemmaBranches)> {
    let start = Instant::now();
    if spec.family() == ModifierFamily::T {
        return Err(Error::InvalidSpec("fragmentary-sum checks cover S1 to S4 only".into()));
    }
    let n = spec.num_vars();
    if n > NAIVE_MAX_VARS {
        return Err(Error::Capacity {
            requested: n,
            limit: NAIVE_MAX_VARS,
        });
    }
    let (family, t) = base_of(spec);
    let f0 = base_function(family, t)?;
    let set = build_modifier_set(spec)?;
    let cells: Vec<(u64, ESet)> = spec.cells().map(|(g, e)| (g.bits(), e)).collect();

    let mut branches = LemmaBranches::default();
    let mut walsh_bad = None;
    let mut nega_bad = None;
    let mut unique_bad = None;
    for z in 0..1u64 << n {
        let e = expected(spec, &cells, z);
        if walsh_bad.is_none() && 2 * direct_fragmentary_walsh(&f0, &set, z) != e.walsh2 {
            walsh_bad = Some(z);
        }
        if nega_bad.is_none() && direct_fragmentary_nega(&f0, &set, z).scale(2) != e.nega2 {
            nega_bad = Some(z);
        }
        branches.walsh_full += (e.walsh_matches > 0) as u64;
        match e.nega_matches {
            0 => {}
            1 => branches.nega_single += 1,
            _ => branches.nega_double += 1,
        }
        let most = e.walsh_matches.max(e.nega_matches);
        branches.max_matches = branches.max_matches.max(most);
        if unique_bad.is_none() && most > 1 && spec.family() == ModifierFamily::S4 {
            unique_bad = Some(z);
        }
    }
    let point = |z: u64| BitVector::new(n, z);
    let size = 1u64 << n;
    let mut report = VerificationReport::new(format!(
        "{} k={} gammas={}",
        spec.family(),
        spec.k(),
        spec.gammas().iter().map(|g| g.to_bit_string()).collect::<Vec<_>>().join(",")
    ));
    report.push(Check::from_failure(
        "walsh_closed_form",
        walsh_bad.map(point),
        format!("{size} points, {} full", branches.walsh_full),
    ));
    report.push(Check::from_failure(
        "nega_closed_form",
        nega_bad.map(point),
        format!(
            "{size} points, {} single-match, {} two-match",
            branches.nega_single, branches.nega_double
        ),
    ));
    if spec.family() == ModifierFamily::S4 {
        report.push(Check::from_failure(
            "at_most_one_match",
            unique_bad.map(point),
            format!("max matches per point {}", branches.max_matches),
        ));
    }
    Ok((report.finish(start.elapsed()), branches))
}

/// Compares the directly summed fragmentary transforms of the base function
/// over the modifier set with the closed-form case split at every point.
pub fn verify_fragmentary_lemma(spec: &GammaSpec) -> Result<VerificationReport> {
    fragmentary_lemma_branches(spec).map(|(r, _)| r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subspaces::parse_gamma_list;

    fn bvs(s: &str) -> Vec<BitVector> {
        parse_gamma_list(s).unwrap()
    }

    fn assert_passes(spec: &GammaSpec) -> LemmaBranches {
        let (r, b) = fragmentary_lemma_branches(spec).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        b
    }

    #[test]
    fn s1_single() {
        for g in ["00", "01", "10", "11"] {
            assert_passes(&GammaSpec::s1(1, bvs(g)).unwrap());
        }
        assert_passes(&GammaSpec::s1(2, bvs("0001,1110,0110")).unwrap());
    }

    #[test]
    fn s2_single() {
        assert_passes(&GammaSpec::s2(1, bvs("0000")).unwrap());
        assert_passes(&GammaSpec::s2(1, bvs("1000,0010")).unwrap());
    }

    #[test]
    fn s3_cases() {
        for e in ESet::ALL {
            let b = assert_passes(&GammaSpec::s3(1, bvs("00"), vec![e]).unwrap());
            assert!(b.nega_single > 0);
            assert_eq!(b.nega_double, 0);
        }
        // (γ1, γ2) and (γ1, γ2 + e_1) both present reach the two-match case
        let b = assert_passes(&GammaSpec::s3(1, bvs("00,01"), vec![ESet::Both, ESet::Both]).unwrap());
        assert!(b.nega_double > 0);
        let b = assert_passes(&GammaSpec::s3(2, bvs("0000,0010,1101"), vec![ESet::Both, ESet::One, ESet::Zero]).unwrap());
        assert!(b.nega_double > 0 && b.nega_single > 0);
    }

    #[test]
    fn s4_cases() {
        for e in ESet::ALL {
            let b = assert_passes(&GammaSpec::s4(1, bvs("0110"), vec![e]).unwrap());
            assert!(b.max_matches <= 1);
        }
        assert_passes(&GammaSpec::s4(1, bvs("0000,1000,0010"), vec![ESet::One, ESet::Both, ESet::Zero]).unwrap());
    }

    #[test]
    fn t_spec_is_rejected() {
        let spec = GammaSpec::t(1, bvs("00")).unwrap();
        assert!(verify_fragmentary_lemma(&spec).is_err());
    }
}
