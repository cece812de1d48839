//! The quadratic base functions and their duals.

use std::fmt;
use std::str::FromStr;

use crate::anf::SparseAnf;
use crate::bits::{low_mask, Capacity};
use crate::error::{Error, Result};
use crate::function::BooleanFunction;
use crate::layout::{dot, extended_split, halves, pair_split, parity};

/// The quadratic functions the constructions start from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseFamily {
    /// `x·y + y'·y''` on `4t` variables.
    G0,
    /// `X·Y + x_0 y_m + y'·y''` on `4t + 2` variables.
    H0,
    /// `Σ x_{2i}x_{2i+1} + y_{2i}y_{2i+1} + x_{2i+1}y_{2i+1}` on `4k` variables.
    F0,
    /// `Σ_{i<j} x_i x_j` on `2k` variables.
    Sigma2,
}

impl BaseFamily {
    pub fn num_vars(self, t: usize) -> usize {
        match self {
            BaseFamily::G0 | BaseFamily::F0 => 4 * t,
            BaseFamily::H0 => 4 * t + 2,
            BaseFamily::Sigma2 => 2 * t,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BaseFamily::G0 => "g0",
            BaseFamily::H0 => "h0",
            BaseFamily::F0 => "f0",
            BaseFamily::Sigma2 => "sigma2",
        }
    }
}

impl fmt::Display for BaseFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BaseFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "g0" => Ok(BaseFamily::G0),
            "h0" => Ok(BaseFamily::H0),
            "f0" => Ok(BaseFamily::F0),
            "sigma2" => Ok(BaseFamily::Sigma2),
            other => Err(Error::Parse(format!("unknown base function `{other}`"))),
        }
    }
}

pub(crate) fn g0_value(z: u64, t: usize) -> bool {
    let m = 2 * t;
    let (x, y) = pair_split(z, m);
    let (yp, ypp) = halves(y, m);
    dot(x, y) ^ dot(yp, ypp)
}

pub(crate) fn h0_value(z: u64, t: usize) -> bool {
    let m = 2 * t;
    let (x, xm, y, ym) = extended_split(z, m);
    let (yp, ypp) = halves(y, m);
    dot(x, y) ^ (xm & ym) ^ ((x & 1 == 1) & ym) ^ dot(yp, ypp)
}

const EVEN_BITS: u64 = 0x5555_5555_5555_5555;

pub(crate) fn f0_value(z: u64, k: usize) -> bool {
    let (x, y) = pair_split(z, 2 * k);
    let pairs = |v: u64| (v & (v >> 1)) & EVEN_BITS;
    parity(pairs(x) ^ pairs(y) ^ ((x & y) >> 1 & EVEN_BITS))
}

pub(crate) fn sigma2_value(z: u64) -> bool {
    (z.count_ones() >> 1) & 1 == 1
}

fn check_param(t: usize) -> Result<()> {
    if t == 0 {
        return Err(Error::InvalidSpec("parameter must be at least 1".into()));
    }
    Ok(())
}

pub fn base_function_with(family: BaseFamily, t: usize, cap: Capacity) -> Result<BooleanFunction> {
    check_param(t)?;
    let n = family.num_vars(t);
    cap.check(n)?;
    match family {
        BaseFamily::G0 => BooleanFunction::from_fn(n, |z| g0_value(z, t)),
        BaseFamily::H0 => BooleanFunction::from_fn(n, |z| h0_value(z, t)),
        BaseFamily::F0 => BooleanFunction::from_fn(n, |z| f0_value(z, t)),
        BaseFamily::Sigma2 => BooleanFunction::from_fn(n, sigma2_value),
    }
}

/// Truth table of a base function, by direct evaluation.
pub fn base_function(family: BaseFamily, t: usize) -> Result<BooleanFunction> {
    base_function_with(family, t, Capacity::default())
}

fn quad(a: usize, b: usize) -> u64 {
    (1u64 << a) | (1u64 << b)
}

/// ANF of a base function, written down term by term.
pub(crate) fn base_anf(family: BaseFamily, t: usize) -> SparseAnf {
    let mut p = SparseAnf::zero();
    match family {
        BaseFamily::G0 => {
            let m = 2 * t;
            for i in 0..m {
                p.toggle(quad(i, m + i));
            }
            for i in 0..t {
                p.toggle(quad(m + i, m + t + i));
            }
        }
        BaseFamily::H0 => {
            let m = 2 * t;
            let y = |i: usize| m + 1 + i;
            for i in 0..=m {
                p.toggle(quad(i, y(i)));
            }
            p.toggle(quad(0, y(m)));
            for i in 0..t {
                p.toggle(quad(y(i), y(t + i)));
            }
        }
        BaseFamily::F0 => {
            let m = 2 * t;
            for i in 0..t {
                p.toggle(quad(2 * i, 2 * i + 1));
                p.toggle(quad(m + 2 * i, m + 2 * i + 1));
                p.toggle(quad(2 * i + 1, m + 2 * i + 1));
            }
        }
        BaseFamily::Sigma2 => {
            let n = 2 * t;
            for i in 0..n {
                for j in i + 1..n {
                    p.toggle(quad(i, j));
                }
            }
        }
    }
    p
}

/// `x'·x'' + x·y`, the dual of `g0`.
pub(crate) fn g0_dual_value(z: u64, t: usize) -> bool {
    let m = 2 * t;
    let (x, y) = pair_split(z, m);
    let (xp, xpp) = halves(x, m);
    dot(xp, xpp) ^ dot(x, y)
}

/// `X·Y + x'·x'' + x_m (x_t + y_0)`, the dual of `h0`.
pub(crate) fn h0_dual_value(z: u64, t: usize) -> bool {
    let m = 2 * t;
    let (x, xm, y, ym) = extended_split(z, m);
    let (xp, xpp) = halves(x, m);
    let xt = (x >> t) & 1 == 1;
    let y0 = y & 1 == 1;
    dot(x, y) ^ (xm & ym) ^ dot(xp, xpp) ^ (xm & (xt ^ y0))
}

/// `x_ev·x_od + y_ev·y_od + x_ev·y_ev`, the dual of `f0`.
pub(crate) fn f0_dual_value(z: u64, k: usize) -> bool {
    let (x, y) = pair_split(z, 2 * k);
    let pairs = |v: u64| (v & (v >> 1)) & EVEN_BITS;
    parity(pairs(x) ^ pairs(y) ^ (x & y & EVEN_BITS & low_mask(2 * k)))
}
