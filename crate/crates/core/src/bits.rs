//! Vectors over F_2 and packed bit tables indexed by them.
//!
//! Coordinate `j` of a vector is bit `j` of its integer index, so index
//! order is the lexicographic truth-table order in which the first
//! coordinate varies fastest.

use std::fmt;
use std::ops::{Add, AddAssign};

use crate::error::{Error, Result};

/// Largest vector length representable by a [`BitVector`].
pub const MAX_VECTOR_LEN: usize = 64;

/// Hard ceiling on the number of variables of any table-backed object.
pub const HARD_MAX_VARS: usize = 30;

/// Default variable limit for transforms and constructions.
pub const DEFAULT_MAX_VARS: usize = 24;

/// A vector `(a_0, ..., a_{len-1})` in F_2^len, `len <= 64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: usize,
    bits: u64,
}

#[inline]
pub(crate) fn low_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl BitVector {
    /// Builds a vector from its integer index; bits above `len` are dropped.
    pub fn new(len: usize, bits: u64) -> Self {
        assert!(len <= MAX_VECTOR_LEN, "vector length {len} exceeds 64");
        BitVector {
            len,
            bits: bits & low_mask(len),
        }
    }

    pub fn zeros(len: usize) -> Self {
        Self::new(len, 0)
    }

    pub fn ones(len: usize) -> Self {
        Self::new(len, u64::MAX)
    }

    /// `e_len^eps`: `eps` in the first position, zero elsewhere.
    pub fn unit_first(len: usize, eps: bool) -> Self {
        Self::new(len, eps as u64)
    }

    pub fn from_coords(coords: &[bool]) -> Self {
        let bits = coords
            .iter()
            .enumerate()
            .fold(0u64, |acc, (j, &c)| acc | ((c as u64) << j));
        Self::new(coords.len(), bits)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn get(&self, j: usize) -> bool {
        debug_assert!(j < self.len);
        (self.bits >> j) & 1 == 1
    }

    pub fn with(&self, j: usize, value: bool) -> Self {
        let bits = (self.bits & !(1 << j)) | ((value as u64) << j);
        Self::new(self.len, bits)
    }

    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Scalar product over F_2.
    pub fn dot(&self, other: &BitVector) -> bool {
        debug_assert_eq!(self.len, other.len);
        (self.bits & other.bits).count_ones() & 1 == 1
    }

    /// Term-wise (Hadamard) product.
    pub fn hadamard(&self, other: &BitVector) -> BitVector {
        debug_assert_eq!(self.len, other.len);
        Self::new(self.len, self.bits & other.bits)
    }

    /// `self ⪰ other`: every coordinate of `self` is at least that of `other`.
    pub fn covers(&self, other: &BitVector) -> bool {
        other.bits & !self.bits == 0
    }

    /// `(self, tail)`: `self` occupies the low coordinates.
    pub fn concat(&self, tail: &BitVector) -> BitVector {
        Self::new(self.len + tail.len, self.bits | (tail.bits << self.len))
    }

    /// Coordinates `start .. start + len`.
    pub fn slice(&self, start: usize, len: usize) -> BitVector {
        debug_assert!(start + len <= self.len);
        Self::new(len, self.bits >> start)
    }

    pub fn split_at(&self, mid: usize) -> (BitVector, BitVector) {
        (self.slice(0, mid), self.slice(mid, self.len - mid))
    }

    /// First and second halves, `(v', v'')`.
    pub fn halves(&self) -> (BitVector, BitVector) {
        debug_assert!(self.len % 2 == 0);
        self.split_at(self.len / 2)
    }

    /// `ρ^l(a) = (a_l, ..., a_{len-1}, a_0, ..., a_{l-1})`.
    pub fn rotate(&self, l: usize) -> BitVector {
        if self.len == 0 {
            return *self;
        }
        Self::new(self.len, rotate_index(self.bits, self.len, l))
    }

    /// Coordinates with even index, `(a_0, a_2, ...)`.
    pub fn even_coords(&self) -> BitVector {
        self.stride_coords(0)
    }

    /// Coordinates with odd index, `(a_1, a_3, ...)`.
    pub fn odd_coords(&self) -> BitVector {
        self.stride_coords(1)
    }

    fn stride_coords(&self, offset: usize) -> BitVector {
        let out_len = (self.len + 1 - offset) / 2;
        let mut bits = 0;
        for i in 0..out_len {
            bits |= ((self.bits >> (2 * i + offset)) & 1) << i;
        }
        Self::new(out_len, bits)
    }

    /// Interleaves `even` into even coordinates and `odd` into odd ones.
    pub fn interleave(even: &BitVector, odd: &BitVector) -> BitVector {
        assert_eq!(even.len, odd.len);
        let mut bits = 0;
        for i in 0..even.len {
            bits |= ((even.bits >> i) & 1) << (2 * i);
            bits |= ((odd.bits >> i) & 1) << (2 * i + 1);
        }
        Self::new(2 * even.len, bits)
    }

    /// Parses the bit-string syntax: character `j` is coordinate `j`.
    pub fn parse(s: &str) -> Result<BitVector> {
        let s = s.trim();
        if s.len() > MAX_VECTOR_LEN {
            return Err(Error::Parse(format!("bit string `{s}` longer than 64")));
        }
        let mut bits = 0u64;
        for (j, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << j,
                _ => return Err(Error::Parse(format!("invalid character `{c}` in bit string `{s}`"))),
            }
        }
        Ok(BitVector::new(s.chars().count(), bits))
    }

    pub fn to_bit_string(&self) -> String {
        (0..self.len).map(|j| if self.get(j) { '1' } else { '0' }).collect()
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({})", self.to_bit_string())
    }
}

impl Add for BitVector {
    type Output = BitVector;

    fn add(self, rhs: BitVector) -> BitVector {
        debug_assert_eq!(self.len, rhs.len);
        BitVector::new(self.len, self.bits ^ rhs.bits)
    }
}

impl AddAssign for BitVector {
    fn add_assign(&mut self, rhs: BitVector) {
        *self = *self + rhs;
    }
}

/// Index of `ρ^l(x)` for a point `x` of F_2^n given by its index.
#[inline]
pub fn rotate_index(x: u64, n: usize, l: usize) -> u64 {
    let l = l % n;
    if l == 0 {
        return x;
    }
    let mask = low_mask(n);
    ((x >> l) | (x << (n - l))) & mask
}

/// Configurable limit on the number of variables an operation may touch.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Capacity {
    max_vars: usize,
}

impl Capacity {
    pub fn new(max_vars: usize) -> Result<Self> {
        if max_vars > HARD_MAX_VARS {
            return Err(Error::Capacity {
                requested: max_vars,
                limit: HARD_MAX_VARS,
            });
        }
        Ok(Capacity { max_vars })
    }

    pub fn max_vars(&self) -> usize {
        self.max_vars
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if n > self.max_vars {
            Err(Error::Capacity {
                requested: n,
                limit: self.max_vars,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Capacity {
    fn default() -> Self {
        Capacity {
            max_vars: DEFAULT_MAX_VARS,
        }
    }
}

/// `2^n` bits packed into 64-bit words, index `i` at bit `i % 64` of word `i / 64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct BitTable {
    n: usize,
    words: Vec<u64>,
}

// Positions whose index has bit `s` clear, for in-word strides 1..32.
const STRIDE_MASKS: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

impl BitTable {
    pub(crate) fn zeros(n: usize) -> Result<Self> {
        if n > HARD_MAX_VARS {
            return Err(Error::Capacity {
                requested: n,
                limit: HARD_MAX_VARS,
            });
        }
        let words = if n >= 6 { 1usize << (n - 6) } else { 1 };
        Ok(BitTable {
            n,
            words: vec![0; words],
        })
    }

    pub(crate) fn from_fn(n: usize, mut f: impl FnMut(u64) -> bool) -> Result<Self> {
        let mut table = Self::zeros(n)?;
        let size = table.len();
        for (w, word) in table.words.iter_mut().enumerate() {
            let base = (w as u64) << 6;
            let mut acc = 0u64;
            for b in 0..64u64.min(size) {
                if f(base + b) {
                    acc |= 1 << b;
                }
            }
            *word = acc;
        }
        Ok(table)
    }

    pub(crate) fn n(&self) -> usize {
        self.n
    }

    /// Number of entries, `2^n`.
    pub(crate) fn len(&self) -> u64 {
        1u64 << self.n
    }

    #[inline]
    pub(crate) fn get(&self, i: u64) -> bool {
        debug_assert!(i < self.len());
        (self.words[(i >> 6) as usize] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, i: u64, value: bool) {
        debug_assert!(i < self.len());
        let word = &mut self.words[(i >> 6) as usize];
        let bit = 1u64 << (i & 63);
        if value {
            *word |= bit;
        } else {
            *word &= !bit;
        }
    }

    #[inline]
    pub(crate) fn toggle(&mut self, i: u64) {
        debug_assert!(i < self.len());
        self.words[(i >> 6) as usize] ^= 1u64 << (i & 63);
    }

    pub(crate) fn xor_assign(&mut self, other: &BitTable) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub(crate) fn or_assign(&mut self, other: &BitTable) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub(crate) fn and_assign(&mut self, other: &BitTable) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub(crate) fn not_assign(&mut self) {
        let mask = low_mask(self.len().min(64) as usize);
        for w in self.words.iter_mut() {
            *w = !*w & mask;
        }
    }

    pub(crate) fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub(crate) fn iter_ones(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let base = (w as u64) << 6;
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as u64;
                    rest &= rest - 1;
                    Some(base + b)
                }
            })
        })
    }

    /// Binary Möbius transform in place; the transform is an involution.
    pub(crate) fn mobius_in_place(&mut self) {
        let in_word = self.n.min(6);
        for (s, &mask) in STRIDE_MASKS.iter().enumerate().take(in_word) {
            let shift = 1u32 << s;
            for w in self.words.iter_mut() {
                *w ^= (*w & mask) << shift;
            }
        }
        let mut stride = 1usize;
        while stride < self.words.len() {
            for j in 0..self.words.len() {
                if j & stride != 0 {
                    self.words[j] ^= self.words[j - stride];
                }
            }
            stride <<= 1;
        }
    }

    /// Hex digit `d` holds entries `4d .. 4d+3`, entry `4d` in its least significant bit.
    pub(crate) fn to_hex(&self) -> String {
        let digits = (self.len() as usize).div_ceil(4);
        let mut out = String::with_capacity(digits);
        for d in 0..digits as u64 {
            let word = self.words[((4 * d) >> 6) as usize];
            let nibble = (word >> ((4 * d) & 63)) & 0xf;
            out.push(char::from_digit(nibble as u32, 16).unwrap());
        }
        out
    }

    pub(crate) fn from_hex(n: usize, hex: &str) -> Result<Self> {
        let mut table = Self::zeros(n)?;
        let hex = hex.trim();
        let digits = (table.len() as usize).div_ceil(4);
        if hex.len() != digits {
            return Err(Error::Parse(format!(
                "truth table for {n} variables needs {digits} hex digits, found {}",
                hex.len()
            )));
        }
        for (d, c) in hex.chars().enumerate() {
            let nibble = c
                .to_digit(16)
                .ok_or_else(|| Error::Parse(format!("invalid hex digit `{c}`")))? as u64;
            if n < 2 && nibble >> table.len() != 0 {
                return Err(Error::Parse(format!(
                    "hex digit `{c}` sets entries beyond 2^{n}"
                )));
            }
            table.words[(4 * d) >> 6] |= nibble << ((4 * d) & 63);
        }
        Ok(table)
    }
}

impl fmt::Debug for BitTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitTable(n={}, {})", self.n, self.to_hex())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn covering_dot_and_hadamard() {
        let a = BitVector::parse("1101").unwrap();
        let b = BitVector::parse("0101").unwrap();
        assert!(a.covers(&b));
        assert!(!b.covers(&a));
        assert_eq!(a.hadamard(&b), b);
        // 1*0 + 1*1 + 0*0 + 1*1 = 0
        assert!(!a.dot(&b));
        assert_eq!(a.weight(), 3);
    }

    #[test]
    fn rotation_matches_definition() {
        let a = BitVector::parse("1100").unwrap();
        assert_eq!(a.rotate(1).to_bit_string(), "1001");
        assert_eq!(a.rotate(2).to_bit_string(), "0011");
        assert_eq!(a.rotate(4), a);
        let x = BitVector::parse("101100").unwrap();
        for l in 0..6 {
            let expected: Vec<bool> = (0..6).map(|j| x.get((j + l) % 6)).collect();
            assert_eq!(x.rotate(l), BitVector::from_coords(&expected));
        }
    }

    #[test]
    fn even_odd_interleave_round_trip() {
        let x = BitVector::parse("101101").unwrap();
        assert_eq!(x.even_coords().to_bit_string(), "110");
        assert_eq!(x.odd_coords().to_bit_string(), "011");
        assert_eq!(BitVector::interleave(&x.even_coords(), &x.odd_coords()), x);
    }

    #[test]
    fn concat_and_slice() {
        let a = BitVector::parse("10").unwrap();
        let b = BitVector::parse("011").unwrap();
        let c = a.concat(&b);
        assert_eq!(c.to_bit_string(), "10011");
        assert_eq!(c.slice(2, 3), b);
        assert_eq!(c.split_at(2), (a, b));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(BitVector::parse("10a").is_err());
    }

    #[test]
    fn hex_layout_is_digitwise_little_endian() {
        // entries 0 and 3 set: first digit 0b1001 = 9
        let t = BitTable::from_fn(3, |i| i == 0 || i == 3).unwrap();
        assert_eq!(t.to_hex(), "90");
        let back = BitTable::from_hex(3, "90").unwrap();
        assert_eq!(back, t);
        let small = BitTable::from_fn(1, |i| i == 1).unwrap();
        assert_eq!(small.to_hex(), "2");
        assert!(BitTable::from_hex(1, "4").is_err());
        assert!(BitTable::from_hex(3, "9").is_err());
    }

    #[test]
    fn mobius_is_an_involution_across_words() {
        let t = BitTable::from_fn(9, |i| (i * 2654435761) % 7 < 3).unwrap();
        let mut u = t.clone();
        u.mobius_in_place();
        assert_ne!(u, t);
        u.mobius_in_place();
        assert_eq!(u, t);
    }

    #[test]
    fn capacity_guard() {
        assert!(Capacity::default().check(24).is_ok());
        assert!(matches!(
            Capacity::default().check(25),
            Err(Error::Capacity { requested: 25, limit: 24 })
        ));
        assert!(Capacity::new(31).is_err());
    }
}
