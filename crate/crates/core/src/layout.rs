//! Variable layouts of the two-block function families.
//!
//! A `(x, y)` function on `2m` variables puts `x` in variables `0..m` and `y`
//! in `m..2m`. An `(X, Y)` function on `2m + 2` variables, with
//! `X = (x, x_m)` and `Y = (y, y_m)`, puts `x` in `0..m`, `x_m` at `m`, `y` in
//! `m+1..2m+1` and `y_m` at `2m+1`.

use crate::bits::low_mask;

#[inline]
pub fn pair_point(x: u64, y: u64, m: usize) -> u64 {
    x | (y << m)
}

#[inline]
pub fn pair_split(z: u64, m: usize) -> (u64, u64) {
    (z & low_mask(m), (z >> m) & low_mask(m))
}

#[inline]
pub fn extended_point(x: u64, xm: bool, y: u64, ym: bool, m: usize) -> u64 {
    x | ((xm as u64) << m) | (y << (m + 1)) | ((ym as u64) << (2 * m + 1))
}

/// `(x, x_m, y, y_m)` of an extended point.
#[inline]
pub fn extended_split(z: u64, m: usize) -> (u64, bool, u64, bool) {
    let mask = low_mask(m);
    (
        z & mask,
        (z >> m) & 1 == 1,
        (z >> (m + 1)) & mask,
        (z >> (2 * m + 1)) & 1 == 1,
    )
}

/// `X = (x, x_m)` and `Y = (y, y_m)` as `(m+1)`-bit words.
#[inline]
pub fn extended_halves(z: u64, m: usize) -> (u64, u64) {
    let mask = low_mask(m + 1);
    (z & mask, (z >> (m + 1)) & mask)
}

/// `(v', v'')` halves of an `m`-bit word, `m` even.
#[inline]
pub fn halves(v: u64, m: usize) -> (u64, u64) {
    let t = m / 2;
    (v & low_mask(t), (v >> t) & low_mask(t))
}

#[inline]
pub fn parity(v: u64) -> bool {
    v.count_ones() & 1 == 1
}

#[inline]
pub fn dot(a: u64, b: u64) -> bool {
    parity(a & b)
}
