//! Independent oracles: direct-sum transforms, closed-form spectra, frame
//! coefficients, fragmentary-sum and relation checks, and verification reports.

mod frame;
mod lemmas;
mod naive;
mod report;
mod su;
mod table1;
mod verify;

pub use frame::{extract_frame_coefficients, FrameCoefficients, GaussianRational, NegaBranch};
pub use lemmas::{fragmentary_lemma_branches, verify_fragmentary_lemma, LemmaBranches};
pub use naive::{
    g0_nega_closed, g0_walsh_closed, h0_nega_closed, h0_walsh_closed,
    linear_character_sum_failure, naive_transforms, Spectra, NAIVE_MAX_VARS,
};
pub use report::{Check, VerificationReport};
pub use su::{check_su_conditions, su_parameters, SuCase, SuParameters};
pub use table1::check_table1;
pub use verify::{verify_construction, verify_function, NAIVE_CROSS_CHECK_MAX_VARS};
