//! Subspaces, cosets, repetition sets, cyclic orbits and the modifier sets.

mod gamma;
mod linear;
mod modifiers;
mod orbits;
mod sets;

pub use gamma::{
    format_eset_list, format_gamma_list, parse_eset_list, parse_gamma_list, ESet, GammaSpec,
    ModifierFamily,
};
pub use linear::{repetition_subspace, LinearSubspace};
pub use modifiers::{
    build_modifier_set, build_modifier_set_with, build_s1, build_s2, build_s3, build_s4, build_t,
};
pub use orbits::{orbit, orbit_members, orbit_representative, orbit_representatives};
pub use sets::{repetition_sets, repetition_sets_with, VectorSet};
