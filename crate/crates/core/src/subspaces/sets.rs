use std::fmt;

use crate::bits::{rotate_index, BitTable, BitVector, Capacity};
use crate::error::{ensure_same_dimension, Error, Result};

/// A subset of F_2^n stored as a membership table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VectorSet {
    table: BitTable,
}

impl VectorSet {
    pub fn empty(n: usize) -> Result<Self> {
        Ok(VectorSet {
            table: BitTable::zeros(n)?,
        })
    }

    pub fn full(n: usize) -> Result<Self> {
        let mut s = Self::empty(n)?;
        s.table.not_assign();
        Ok(s)
    }

    pub fn from_fn(n: usize, f: impl FnMut(u64) -> bool) -> Result<Self> {
        Ok(VectorSet {
            table: BitTable::from_fn(n, f)?,
        })
    }

    pub fn from_indices(n: usize, indices: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut s = Self::empty(n)?;
        for i in indices {
            s.insert_index(i)?;
        }
        Ok(s)
    }

    pub fn from_vectors<'a>(n: usize, vs: impl IntoIterator<Item = &'a BitVector>) -> Result<Self> {
        let mut s = Self::empty(n)?;
        for v in vs {
            s.insert(v)?;
        }
        Ok(s)
    }

    pub(crate) fn table(&self) -> &BitTable {
        &self.table
    }

    pub fn n(&self) -> usize {
        self.table.n()
    }

    pub fn len(&self) -> u64 {
        self.table.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn contains_index(&self, i: u64) -> bool {
        self.table.get(i)
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        v.len() == self.n() && self.table.get(v.bits())
    }

    pub fn insert_index(&mut self, i: u64) -> Result<()> {
        if i >= self.table.len() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: 64 - i.leading_zeros() as usize,
            });
        }
        self.table.set(i, true);
        Ok(())
    }

    pub fn insert(&mut self, v: &BitVector) -> Result<()> {
        ensure_same_dimension(self.n(), v.len())?;
        self.table.set(v.bits(), true);
        Ok(())
    }

    /// Member indices in ascending order.
    pub fn iter_indices(&self) -> impl Iterator<Item = u64> + '_ {
        self.table.iter_ones()
    }

    pub fn iter(&self) -> impl Iterator<Item = BitVector> + '_ {
        let n = self.n();
        self.iter_indices().map(move |i| BitVector::new(n, i))
    }

    pub fn union(&self, other: &VectorSet) -> Result<VectorSet> {
        ensure_same_dimension(self.n(), other.n())?;
        let mut table = self.table.clone();
        table.or_assign(&other.table);
        Ok(VectorSet { table })
    }

    pub fn intersection(&self, other: &VectorSet) -> Result<VectorSet> {
        ensure_same_dimension(self.n(), other.n())?;
        let mut table = self.table.clone();
        table.and_assign(&other.table);
        Ok(VectorSet { table })
    }

    pub fn complement(&self) -> VectorSet {
        let mut table = self.table.clone();
        table.not_assign();
        VectorSet { table }
    }

    pub fn is_disjoint(&self, other: &VectorSet) -> Result<bool> {
        Ok(self.intersection(other)?.is_empty())
    }

    /// `v + S`.
    pub fn translate(&self, v: &BitVector) -> Result<VectorSet> {
        ensure_same_dimension(self.n(), v.len())?;
        VectorSet::from_indices(self.n(), self.iter_indices().map(|i| i ^ v.bits()))
    }

    /// `S × T`, with members of `self` in the low coordinates.
    pub fn product(&self, other: &VectorSet) -> Result<VectorSet> {
        let n = self.n() + other.n();
        let mut out = VectorSet::empty(n)?;
        for a in self.iter_indices() {
            for b in other.iter_indices() {
                out.table.set(a | (b << self.n()), true);
            }
        }
        Ok(out)
    }

    /// Whether `ρ^1(S) = S`.
    pub fn is_rotation_invariant(&self) -> bool {
        let n = self.n();
        self.iter_indices()
            .all(|x| self.contains_index(rotate_index(x, n, 1)))
    }
}

impl fmt::Debug for VectorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let members: Vec<String> = self.iter().take(16).map(|v| v.to_bit_string()).collect();
        let more = if self.len() > 16 { ", ..." } else { "" };
        write!(f, "VectorSet(n={}, |S|={}, {{{}{more}}})", self.n(), self.len(), members.join(", "))
    }
}

/// `A_{2d}^r` and `B_{2d}^r`: block `i` occupies coordinates `2d·i .. 2d·i + 2d`.
///
/// `A` blocks are all-zero or all-one; `B` blocks are `0^d 1^d` or `1^d 0^d`.
pub fn repetition_sets(d: usize, r: usize) -> Result<(VectorSet, VectorSet)> {
    repetition_sets_with(d, r, Capacity::default())
}

pub fn repetition_sets_with(d: usize, r: usize, cap: Capacity) -> Result<(VectorSet, VectorSet)> {
    if d == 0 || r == 0 {
        return Err(Error::InvalidSpec(format!("repetition sets need d, r >= 1 (got d={d}, r={r})")));
    }
    let n = 2 * d * r;
    cap.check(n)?;
    let block = 2 * d;
    let ones = (1u64 << block) - 1;
    let low = (1u64 << d) - 1;
    // 0^d 1^d: coordinates d..2d set
    let b_words = [low << d, low];
    let mut a = VectorSet::empty(n)?;
    let mut b = VectorSet::empty(n)?;
    for choice in 0..1u64 << r {
        let mut av = 0u64;
        let mut bv = 0u64;
        for i in 0..r {
            let bit = ((choice >> i) & 1) as usize;
            if bit == 1 {
                av |= ones << (block * i);
            }
            bv |= b_words[bit] << (block * i);
        }
        a.table.set(av, true);
        b.table.set(bv, true);
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(s: &VectorSet) -> Vec<String> {
        let mut v: Vec<String> = s.iter().map(|x| x.to_bit_string()).collect();
        v.sort();
        v
    }

    #[test]
    fn repetition_examples() {
        let (a, b) = repetition_sets(1, 1).unwrap();
        assert_eq!(strings(&a), vec!["00", "11"]);
        assert_eq!(strings(&b), vec!["01", "10"]);
        let (a, b) = repetition_sets(2, 1).unwrap();
        assert_eq!(strings(&a), vec!["0000", "1111"]);
        assert_eq!(strings(&b), vec!["0011", "1100"]);
        let (a, b) = repetition_sets(1, 2).unwrap();
        assert_eq!(a.len(), 4);
        assert_eq!(b.len(), 4);
        for x in a.iter_indices() {
            for y in a.iter_indices() {
                assert!(a.contains_index(x ^ y));
            }
        }
        // B is the coset (0,1,0,1) + A
        let shift = BitVector::parse("0101").unwrap();
        assert_eq!(a.translate(&shift).unwrap(), b);
        assert!(repetition_sets(0, 1).is_err());
        assert!(matches!(repetition_sets(4, 4), Err(Error::Capacity { .. })));
    }

    #[test]
    fn set_algebra() {
        let mut s = VectorSet::from_indices(3, [1, 2, 5]).unwrap();
        let t = VectorSet::from_indices(3, [2, 3]).unwrap();
        assert_eq!(s.union(&t).unwrap().len(), 4);
        assert_eq!(s.intersection(&t).unwrap().iter_indices().collect::<Vec<_>>(), vec![2]);
        assert_eq!(s.complement().len(), 5);
        assert!(!s.is_disjoint(&t).unwrap());
        assert!(s.insert_index(8).is_err());
    }

    #[test]
    fn product_places_left_factor_low() {
        let a = VectorSet::from_indices(1, [1]).unwrap();
        let b = VectorSet::from_indices(2, [2]).unwrap();
        let p = a.product(&b).unwrap();
        assert_eq!(strings(&p), vec!["101"]);
    }
}
