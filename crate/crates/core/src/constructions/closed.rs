//! Closed-form ANFs and duals, assembled without consulting truth tables.

use std::collections::HashMap;

use crate::anf::{AnfPolynomial, SparseAnf};
use crate::bits::{low_mask, Capacity};
use crate::error::Result;
use crate::function::BooleanFunction;
use crate::layout::{extended_split, halves, pair_split};
use crate::subspaces::ESet;

use super::base::{base_anf, f0_dual_value, g0_dual_value, h0_dual_value};
use super::Construction;

/// `Π_i (v_{a_i} + v_{b_i} + c_i + 1)`.
fn pair_product(pairs: impl IntoIterator<Item = (usize, usize, bool)>) -> SparseAnf {
    pairs.into_iter().fold(SparseAnf::one(), |acc, (a, b, c)| {
        acc.mul(&SparseAnf::linear(&[a, b], !c))
    })
}

fn chi_e(e: ESet, ym: usize) -> SparseAnf {
    match e {
        ESet::One => SparseAnf::linear(&[ym], false),
        ESet::Zero => SparseAnf::linear(&[ym], true),
        ESet::Both => SparseAnf::one(),
    }
}

/// Characteristic function of `{x'' = x' + β}` on the given `2k` variables.
fn chi_half_shift(vars: &[usize], beta: u64) -> SparseAnf {
    let k = vars.len() / 2;
    pair_product((0..k).map(|i| (vars[i], vars[k + i], beta >> i & 1 == 1)))
}

/// Characteristic function of `β + A_2^{2k}` on the given `4k` variables.
fn chi_repetition_coset(vars: &[usize], beta: u64) -> SparseAnf {
    pair_product(
        (0..vars.len() / 2).map(|i| (vars[2 * i], vars[2 * i + 1], (beta >> (2 * i) ^ beta >> (2 * i + 1)) & 1 == 1)),
    )
}

fn range(start: usize, len: usize) -> Vec<usize> {
    (start..start + len).collect()
}

/// ANF of the constructed function from the product and sum formulas.
pub fn closed_form_anf(c: &Construction) -> Result<AnfPolynomial> {
    let spec = c.modifier_spec()?;
    let n = c.num_vars();
    let k = c.k();
    let (family, t) = c.base();
    let mut p = base_anf(family, t);
    match c {
        Construction::G4k(_) | Construction::H4k2(_) => {
            let m = 2 * k;
            let extended = matches!(c, Construction::H4k2(_));
            let xs = range(0, m);
            let ys = range(if extended { m + 1 } else { m }, m);
            for (g, e) in spec.cells() {
                let (g1, g2) = (g.bits() & low_mask(k), g.bits() >> k);
                let mut term = chi_half_shift(&xs, g1).mul(&chi_half_shift(&ys, g2));
                if extended {
                    term = term.mul(&chi_e(e, 2 * m + 1));
                }
                p.add_assign(&term);
            }
        }
        Construction::G8k(_) | Construction::H8k2(_) => {
            let m = 4 * k;
            let extended = matches!(c, Construction::H8k2(_));
            let xs = range(0, m);
            let ys = range(if extended { m + 1 } else { m }, m);
            let chi_a = chi_repetition_coset(&xs, 0);
            for (g, e) in spec.cells() {
                let mut term = chi_a.mul(&chi_repetition_coset(&ys, g.bits()));
                if extended {
                    term = term.mul(&chi_e(e, 2 * m + 1));
                }
                p.add_assign(&term);
            }
        }
        Construction::F2rs { .. } => {
            let m = 2 * k;
            for g in spec.gammas() {
                p.add_assign(&pair_product((0..m).map(|i| (i, m + i, g.get(i)))));
            }
        }
        Construction::F2rsSet { .. } | Construction::F2rsOrbit { .. } => {
            let m = 2 * k;
            for w in c.orbit_words() {
                // every split of w into disjoint u, v
                let mut u = w;
                loop {
                    p.toggle(u | ((w ^ u) << m));
                    if u == 0 {
                        break;
                    }
                    u = (u - 1) & w;
                }
            }
        }
    }
    p.into_dense(n)
}

fn pair_signature(v: u64, pairs: usize) -> u64 {
    (0..pairs).fold(0, |acc, i| acc | (((v >> (2 * i)) ^ (v >> (2 * i + 1))) & 1) << i)
}

fn interleave_bits(even: u64, odd: u64, k: usize) -> u64 {
    (0..k).fold(0, |acc, i| {
        acc | ((even >> i) & 1) << (2 * i) | ((odd >> i) & 1) << (2 * i + 1)
    })
}

fn even_odd(v: u64, k: usize) -> (u64, u64) {
    (0..k).fold((0, 0), |(e, o), i| {
        (e | ((v >> (2 * i)) & 1) << i, o | ((v >> (2 * i + 1)) & 1) << i)
    })
}

pub fn closed_form_dual_with(c: &Construction, cap: Capacity) -> Result<BooleanFunction> {
    let spec = c.modifier_spec()?;
    let n = c.num_vars();
    cap.check(n)?;
    let k = c.k();
    let ones_k = low_mask(k);
    match c {
        Construction::G4k(_) => {
            let m = 2 * k;
            let mut member = vec![false; 1 << m];
            for g in spec.gammas() {
                member[g.bits() as usize] = true;
            }
            BooleanFunction::from_fn(n, |z| {
                let (x, y) = pair_split(z, m);
                let (xp, xpp) = halves(x, m);
                let (yp, ypp) = halves(y, m);
                let g2 = xp ^ xpp;
                let g1 = yp ^ ypp ^ ones_k ^ g2;
                g0_dual_value(z, k) ^ member[(g1 | g2 << k) as usize]
            })
        }
        Construction::H4k2(_) => {
            let m = 2 * k;
            let mut lookup: Vec<Option<ESet>> = vec![None; 1 << m];
            for (g, e) in spec.cells() {
                lookup[g.bits() as usize] = Some(e);
            }
            BooleanFunction::from_fn(n, |z| {
                let (x, xm, y, _) = extended_split(z, m);
                let (xp, xpp) = halves(x, m);
                let (yp, ypp) = halves(y, m);
                let g2 = xp ^ xpp ^ xm as u64;
                let g1 = yp ^ ypp ^ ones_k ^ g2;
                let hit = lookup[(g1 | g2 << k) as usize].is_some_and(|e| e.contains(xm));
                h0_dual_value(z, k) ^ hit
            })
        }
        Construction::G8k(_) | Construction::H8k2(_) => {
            let m = 4 * k;
            let pairs = 2 * k;
            let half = low_mask(m / 2);
            // signature of γ -> (signature of (γ2, γ1), E_γ)
            let mut lookup: HashMap<u64, (u64, ESet)> = HashMap::new();
            for (g, e) in spec.cells() {
                let b = g.bits();
                let swapped = (b >> (m / 2)) | ((b & half) << (m / 2));
                lookup.insert(pair_signature(b, pairs), (pair_signature(swapped, pairs), e));
            }
            if let Construction::G8k(_) = c {
                BooleanFunction::from_fn(n, |z| {
                    let (x, y) = pair_split(z, m);
                    let hit = lookup
                        .get(&pair_signature(x, pairs))
                        .is_some_and(|&(sy, _)| sy == pair_signature(y, pairs));
                    g0_dual_value(z, 2 * k) ^ hit
                })
            } else {
                BooleanFunction::from_fn(n, |z| {
                    let (x, xm, y, _) = extended_split(z, m);
                    let sx = pair_signature(x ^ xm as u64, pairs);
                    let hit = lookup
                        .get(&sx)
                        .is_some_and(|&(sy, e)| e.contains(xm) && sy == pair_signature(y, pairs));
                    h0_dual_value(z, 2 * k) ^ hit
                })
            }
        }
        Construction::F2rs { .. } | Construction::F2rsSet { .. } | Construction::F2rsOrbit { .. } => {
            let m = 2 * k;
            let mut member = vec![false; 1 << m];
            for g in spec.gammas() {
                member[g.bits() as usize] = true;
            }
            BooleanFunction::from_fn(n, |z| {
                let (x, y) = pair_split(z, m);
                let (xe, xo) = even_odd(x, k);
                let (ye, yo) = even_odd(y, k);
                let a = xe ^ xo ^ ye ^ yo ^ ones_k;
                let b = xe ^ ye;
                f0_dual_value(z, k) ^ member[interleave_bits(a, b, k) as usize]
            })
        }
    }
}

/// Dual of the constructed function from its closed form.
pub fn closed_form_dual(c: &Construction) -> Result<BooleanFunction> {
    closed_form_dual_with(c, Capacity::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::BitVector;
    use crate::spectra::dual;
    use crate::subspaces::{parse_gamma_list, GammaSpec};

    #[test]
    fn g8k_dual_membership_uses_swapped_halves() {
        // γ = (γ1, γ2) with γ1 ≠ γ2 modulo A distinguishes (γ1, γ2) from (γ2, γ1)
        let spec = GammaSpec::s2(1, parse_gamma_list("1000").unwrap()).unwrap();
        let c = Construction::g8k(spec).unwrap();
        let f = super::super::construct(&c).unwrap();
        assert_eq!(closed_form_dual(&c).unwrap(), dual(f.function()).unwrap());
    }

    #[test]
    fn rotation_symmetric_dual_pairs_are_interleaved() {
        // with Γ = O(1100) at k = 2 the concatenated reading (a, b) differs
        // from the interleaved one, and only the interleaved one is the dual
        let c = Construction::f2rs(2, parse_gamma_list("1100").unwrap()).unwrap();
        let f = super::super::construct(&c).unwrap();
        let spectral = dual(f.function()).unwrap();
        assert_eq!(closed_form_dual(&c).unwrap(), spectral);
        let spec = c.modifier_spec().unwrap();
        let member: Vec<u64> = spec.gammas().iter().map(BitVector::bits).collect();
        let concatenated = BooleanFunction::from_fn(8, |z| {
            let (x, y) = pair_split(z, 4);
            let (xe, xo) = even_odd(x, 2);
            let (ye, yo) = even_odd(y, 2);
            let a = xe ^ xo ^ ye ^ yo ^ 3;
            let b = xe ^ ye;
            f0_dual_value(z, 2) ^ member.contains(&(a | b << 2))
        })
        .unwrap();
        assert_ne!(concatenated, spectral);
    }

    #[test]
    fn helpers() {
        assert_eq!(pair_signature(0b0110, 2), 0b11);
        assert_eq!(pair_signature(0b1111, 2), 0);
        assert_eq!(interleave_bits(0b11, 0b00, 2), 0b0101);
        assert_eq!(even_odd(0b0110, 2), (0b10, 0b01));
    }
}
