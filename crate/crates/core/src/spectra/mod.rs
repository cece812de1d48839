//! Exact Walsh-Hadamard and nega-Hadamard spectra, fragmentary transforms,
//! bent/negabent classification, duals and the Maiorana-McFarland toolkit.

mod gaussian;
mod mm;
mod transform;

pub use gaussian::GaussianInteger;
pub use mm::{is_weight_sum_invariant, mm_dual, mm_function, Permutation};
pub use transform::{
    classify, classify_spectra, classify_with, dual, dual_from_spectrum, dual_with,
    fragmentary_nega, fragmentary_nega_spectrum, fragmentary_walsh, fragmentary_walsh_spectrum,
    fwht, nega_transform, nega_transform_with, walsh_transform, walsh_transform_with,
    Classification, NegaSpectrum, WalshSpectrum,
};
