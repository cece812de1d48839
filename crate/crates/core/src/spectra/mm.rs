//! Maiorana-McFarland functions `x·π(y) + φ(y)` and their duals.
//!
//! On `2m` variables, `x` occupies variables `0..m` and `y` variables `m..2m`.

use crate::bits::{low_mask, BitVector};
use crate::error::{Error, Result};
use crate::function::BooleanFunction;

/// A bijection of F_2^m given by its full image table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    m: usize,
    image: Vec<u64>,
}

impl Permutation {
    /// Validates that `image` lists every point of F_2^m exactly once.
    pub fn new(m: usize, image: Vec<u64>) -> Result<Self> {
        let size = 1usize << m;
        if image.len() != size {
            return Err(Error::NotBijective {
                m,
                reason: format!("image table has {} entries, expected {size}", image.len()),
            });
        }
        let mut seen = vec![false; size];
        for (x, &y) in image.iter().enumerate() {
            if y >= size as u64 {
                return Err(Error::NotBijective {
                    m,
                    reason: format!("image of {x} is {y}, outside the space"),
                });
            }
            if std::mem::replace(&mut seen[y as usize], true) {
                return Err(Error::NotBijective {
                    m,
                    reason: format!("{} is hit twice", BitVector::new(m, y)),
                });
            }
        }
        Ok(Permutation { m, image })
    }

    pub fn identity(m: usize) -> Self {
        Permutation {
            m,
            image: (0..1u64 << m).collect(),
        }
    }

    pub fn from_fn(m: usize, f: impl Fn(u64) -> u64) -> Result<Self> {
        Self::new(m, (0..1u64 << m).map(f).collect())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn apply(&self, x: u64) -> u64 {
        self.image[x as usize]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u64; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y as usize] = x as u64;
        }
        Permutation {
            m: self.m,
            image: inv,
        }
    }

    /// `π(x + y) = π(x) + π(y)` for all pairs, checked on a basis plus `π(0) = 0`.
    pub fn is_linear(&self) -> bool {
        if self.apply(0) != 0 {
            return false;
        }
        (0..1u64 << self.m).all(|x| {
            let mut acc = 0;
            let mut rest = x;
            while rest != 0 {
                acc ^= self.apply(rest & rest.wrapping_neg());
                rest &= rest - 1;
            }
            acc == self.apply(x)
        })
    }
}

fn check_phi(pi: &Permutation, phi: &BooleanFunction) -> Result<()> {
    if phi.n() != pi.m() {
        return Err(Error::DimensionMismatch {
            expected: pi.m(),
            found: phi.n(),
        });
    }
    Ok(())
}

/// `f(x, y) = x·π(y) + φ(y)`.
pub fn mm_function(pi: &Permutation, phi: &BooleanFunction) -> Result<BooleanFunction> {
    check_phi(pi, phi)?;
    let m = pi.m();
    let mask = low_mask(m);
    BooleanFunction::from_fn(2 * m, |z| {
        let (x, y) = (z & mask, z >> m);
        ((x & pi.apply(y)).count_ones() & 1 == 1) ^ phi.value(y)
    })
}

/// `f̃(x, y) = y·π^{-1}(x) + φ(π^{-1}(x))`.
pub fn mm_dual(pi: &Permutation, phi: &BooleanFunction) -> Result<BooleanFunction> {
    check_phi(pi, phi)?;
    let m = pi.m();
    let mask = low_mask(m);
    let inv = pi.inverse();
    BooleanFunction::from_fn(2 * m, |z| {
        let (x, y) = (z & mask, z >> m);
        let p = inv.apply(x);
        ((y & p).count_ones() & 1 == 1) ^ phi.value(p)
    })
}

/// `wt(x + y) = wt(π(x) + π(y))` for all `x, y`.
pub fn is_weight_sum_invariant(pi: &Permutation) -> bool {
    let size = 1u64 << pi.m();
    (0..size).all(|x| {
        (x + 1..size).all(|y| (x ^ y).count_ones() == (pi.apply(x) ^ pi.apply(y)).count_ones())
    })
}
