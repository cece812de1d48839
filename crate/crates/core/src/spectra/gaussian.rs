use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

/// `re + im·i` with exact integer parts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaussianInteger {
    pub re: i64,
    pub im: i64,
}

impl GaussianInteger {
    pub const ZERO: GaussianInteger = GaussianInteger { re: 0, im: 0 };
    pub const ONE: GaussianInteger = GaussianInteger { re: 1, im: 0 };
    pub const I: GaussianInteger = GaussianInteger { re: 0, im: 1 };

    pub const fn new(re: i64, im: i64) -> Self {
        GaussianInteger { re, im }
    }

    /// `i^k`.
    pub fn i_pow(k: u32) -> Self {
        match k % 4 {
            0 => Self::new(1, 0),
            1 => Self::new(0, 1),
            2 => Self::new(-1, 0),
            _ => Self::new(0, -1),
        }
    }

    /// `|c|^2 = re^2 + im^2`.
    pub fn norm_sqr(&self) -> i64 {
        self.re * self.re + self.im * self.im
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re, -self.im)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::new(self.re * k, self.im * k)
    }

    pub fn is_zero(&self) -> bool {
        self.re == 0 && self.im == 0
    }
}

impl From<i64> for GaussianInteger {
    fn from(re: i64) -> Self {
        Self::new(re, 0)
    }
}

impl Add for GaussianInteger {
    type Output = Self;
    fn add(self, r: Self) -> Self {
        Self::new(self.re + r.re, self.im + r.im)
    }
}

impl AddAssign for GaussianInteger {
    fn add_assign(&mut self, r: Self) {
        *self = *self + r;
    }
}

impl Sub for GaussianInteger {
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        Self::new(self.re - r.re, self.im - r.im)
    }
}

impl SubAssign for GaussianInteger {
    fn sub_assign(&mut self, r: Self) {
        *self = *self - r;
    }
}

impl Neg for GaussianInteger {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl Mul for GaussianInteger {
    type Output = Self;
    fn mul(self, r: Self) -> Self {
        Self::new(
            self.re * r.re - self.im * r.im,
            self.re * r.im + self.im * r.re,
        )
    }
}

impl fmt::Display for GaussianInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re, self.im) {
            (re, 0) => write!(f, "{re}"),
            (0, im) => write!(f, "{im}i"),
            (re, im) if im < 0 => write!(f, "{re}-{}i", -im),
            (re, im) => write!(f, "{re}+{im}i"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers_of_i_cycle() {
        let mut acc = GaussianInteger::ONE;
        for k in 0..8 {
            assert_eq!(GaussianInteger::i_pow(k), acc);
            acc = acc * GaussianInteger::I;
        }
    }

    #[test]
    fn norm_and_conjugate() {
        let c = GaussianInteger::new(3, -4);
        assert_eq!(c.norm_sqr(), 25);
        assert_eq!((c * c.conj()), GaussianInteger::from(25));
        assert_eq!(c.to_string(), "3-4i");
        assert_eq!(GaussianInteger::new(0, 2).to_string(), "2i");
    }
}
