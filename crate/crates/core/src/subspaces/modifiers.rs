//! The modifier sets whose characteristic functions are added to the base
//! functions.

use crate::bits::{low_mask, Capacity};
use crate::error::{Error, Result};
use crate::layout::{extended_point, pair_point};

use super::gamma::{GammaSpec, ModifierFamily};
use super::linear::repetition_subspace;
use super::sets::VectorSet;

fn expect_family(spec: &GammaSpec, family: ModifierFamily) -> Result<()> {
    if spec.family() != family {
        return Err(Error::InvalidSpec(format!(
            "spec is for family {}, builder expects {family}",
            spec.family()
        )));
    }
    Ok(())
}

/// Points `(x, y)` of the cell `x'' = x' + γ1, y'' = y' + γ2` in F_2^{4k}.
pub(crate) fn s1_cell(k: usize, gamma: u64) -> impl Iterator<Item = (u64, u64)> {
    let (g1, g2) = (gamma & low_mask(k), gamma >> k);
    (0..1u64 << k).flat_map(move |xp| {
        (0..1u64 << k).map(move |yp| (xp | ((xp ^ g1) << k), yp | ((yp ^ g2) << k)))
    })
}

/// Members of `A_2^{2k}` as indices in F_2^{4k}.
pub(crate) fn a_members(k: usize) -> Vec<u64> {
    repetition_subspace(2 * k)
        .members()
        .into_iter()
        .map(|v| v.bits())
        .collect()
}

/// Builds the modifier set of any family under an explicit variable limit.
pub fn build_modifier_set_with(spec: &GammaSpec, cap: Capacity) -> Result<VectorSet> {
    let k = spec.k();
    let n = spec.num_vars();
    cap.check(n)?;
    let mut set = VectorSet::empty(n)?;
    match spec.family() {
        ModifierFamily::S1 => {
            for (g, _) in spec.cells() {
                for (x, y) in s1_cell(k, g.bits()) {
                    set.insert_index(pair_point(x, y, 2 * k))?;
                }
            }
        }
        ModifierFamily::S2 => {
            let a = a_members(k);
            for (g, _) in spec.cells() {
                for &x in &a {
                    for &z in &a {
                        set.insert_index(pair_point(x, g.bits() ^ z, 4 * k))?;
                    }
                }
            }
        }
        ModifierFamily::S3 => {
            for (g, e) in spec.cells() {
                for (x, y) in s1_cell(k, g.bits()) {
                    for xm in [false, true] {
                        for ym in e.members() {
                            set.insert_index(extended_point(x, xm, y, ym, 2 * k))?;
                        }
                    }
                }
            }
        }
        ModifierFamily::S4 => {
            let a = a_members(k);
            for (g, e) in spec.cells() {
                for &x in &a {
                    for &z in &a {
                        for xm in [false, true] {
                            for ym in e.members() {
                                set.insert_index(extended_point(x, xm, g.bits() ^ z, ym, 4 * k))?;
                            }
                        }
                    }
                }
            }
        }
        ModifierFamily::T => {
            for (g, _) in spec.cells() {
                for x in 0..1u64 << (2 * k) {
                    set.insert_index(pair_point(x, x ^ g.bits(), 2 * k))?;
                }
            }
        }
    }
    Ok(set)
}

pub fn build_modifier_set(spec: &GammaSpec) -> Result<VectorSet> {
    build_modifier_set_with(spec, Capacity::default())
}

/// `S1 = ∪_γ {x'' = x' + γ1, y'' = y' + γ2}` in F_2^{4k}.
pub fn build_s1(spec: &GammaSpec) -> Result<VectorSet> {
    expect_family(spec, ModifierFamily::S1)?;
    build_modifier_set(spec)
}

/// `S2 = ∪_γ A_2^{2k} × (γ + A_2^{2k})` in F_2^{8k}.
pub fn build_s2(spec: &GammaSpec) -> Result<VectorSet> {
    expect_family(spec, ModifierFamily::S2)?;
    build_modifier_set(spec)
}

/// `S3 = ∪_γ {(x, y) in the S1 cell of γ, x_m free, y_m ∈ E_γ}` in F_2^{4k+2}.
pub fn build_s3(spec: &GammaSpec) -> Result<VectorSet> {
    expect_family(spec, ModifierFamily::S3)?;
    build_modifier_set(spec)
}

/// `S4 = ∪_γ {x ∈ A_2^{2k}, y ∈ γ + A_2^{2k}, x_m free, y_m ∈ E_γ}` in F_2^{8k+2}.
pub fn build_s4(spec: &GammaSpec) -> Result<VectorSet> {
    expect_family(spec, ModifierFamily::S4)?;
    build_modifier_set(spec)
}

/// `T = ∪_γ {(x, x + γ)}` in F_2^{4k}.
pub fn build_t(spec: &GammaSpec) -> Result<VectorSet> {
    expect_family(spec, ModifierFamily::T)?;
    build_modifier_set(spec)
}
