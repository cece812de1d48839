use crate::bits::{low_mask, BitVector};
use crate::error::{ensure_same_dimension, Error, Result};

use super::sets::VectorSet;

/// A linear subspace of F_2^n, kept as a reduced echelon basis.
///
/// Each basis vector's pivot is its most significant index bit, and no other
/// basis vector has that bit set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSubspace {
    n: usize,
    basis: Vec<u64>,
}

impl LinearSubspace {
    pub fn zero(n: usize) -> Self {
        LinearSubspace { n, basis: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        Self::span_indices(n, (0..n).map(|j| 1u64 << j))
    }

    /// Span of the given generators; dependent generators are dropped.
    pub fn span(n: usize, generators: &[BitVector]) -> Result<Self> {
        for g in generators {
            ensure_same_dimension(n, g.len())?;
        }
        Ok(Self::span_indices(n, generators.iter().map(|g| g.bits())))
    }

    pub(crate) fn span_indices(n: usize, generators: impl IntoIterator<Item = u64>) -> Self {
        let mut basis: Vec<u64> = Vec::new();
        for g in generators {
            let r = reduce(&basis, g & low_mask(n));
            if r == 0 {
                continue;
            }
            let pivot = 63 - r.leading_zeros();
            for b in basis.iter_mut() {
                if (*b >> pivot) & 1 == 1 {
                    *b ^= r;
                }
            }
            basis.push(r);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
        LinearSubspace { n, basis }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> Vec<BitVector> {
        self.basis.iter().map(|&b| BitVector::new(self.n, b)).collect()
    }

    fn pivot_mask(&self) -> u64 {
        self.basis
            .iter()
            .fold(0, |acc, &b| acc | (1u64 << (63 - b.leading_zeros())))
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        v.len() == self.n && reduce(&self.basis, v.bits()) == 0
    }

    pub(crate) fn contains_index(&self, v: u64) -> bool {
        reduce(&self.basis, v) == 0
    }

    /// Member of `v + H` with the smallest index.
    pub fn coset_leader(&self, v: &BitVector) -> Result<BitVector> {
        ensure_same_dimension(self.n, v.len())?;
        Ok(BitVector::new(self.n, reduce(&self.basis, v.bits())))
    }

    /// All `2^dim` members, ascending.
    pub fn members(&self) -> Vec<BitVector> {
        let mut out: Vec<u64> = (0..1u64 << self.dim())
            .map(|c| {
                self.basis
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| (c >> i) & 1 == 1)
                    .fold(0, |acc, (_, &b)| acc ^ b)
            })
            .collect();
        out.sort_unstable();
        out.into_iter().map(|b| BitVector::new(self.n, b)).collect()
    }

    pub fn to_set(&self) -> Result<VectorSet> {
        VectorSet::from_vectors(self.n, self.members().iter())
    }

    /// `H^⊥ = {x : a·x = 0 for all a in H}`.
    pub fn orthogonal_complement(&self) -> LinearSubspace {
        let pivots = self.pivot_mask();
        let gens = (0..self.n).filter(|j| (pivots >> j) & 1 == 0).map(|j| {
            let mut v = 1u64 << j;
            for &b in &self.basis {
                if (b >> j) & 1 == 1 {
                    v |= 1u64 << (63 - b.leading_zeros());
                }
            }
            v
        });
        Self::span_indices(self.n, gens.collect::<Vec<_>>())
    }

    /// One member per coset, each the smallest index in its coset, ascending.
    pub fn coset_representatives(&self) -> Vec<BitVector> {
        let free: Vec<usize> = {
            let pivots = self.pivot_mask();
            (0..self.n).filter(|j| (pivots >> j) & 1 == 0).collect()
        };
        let mut out: Vec<u64> = (0..1u64 << free.len())
            .map(|c| {
                free.iter()
                    .enumerate()
                    .filter(|(i, _)| (c >> i) & 1 == 1)
                    .fold(0u64, |acc, (_, &j)| acc | (1 << j))
            })
            .collect();
        out.sort_unstable();
        out.into_iter().map(|b| BitVector::new(self.n, b)).collect()
    }

    /// Whether the two vectors lie in one coset.
    pub fn same_coset(&self, a: &BitVector, b: &BitVector) -> Result<bool> {
        ensure_same_dimension(self.n, a.len())?;
        ensure_same_dimension(self.n, b.len())?;
        Ok(self.contains_index(a.bits() ^ b.bits()))
    }

    /// `H × F_2^extra` when `free` is set, `H × {0}` otherwise; new coordinates go on top.
    pub fn extend(&self, extra: usize, free: bool) -> Result<LinearSubspace> {
        let n = self.n + extra;
        if n > 64 {
            return Err(Error::Capacity { requested: n, limit: 64 });
        }
        let mut gens = self.basis.clone();
        if free {
            gens.extend((self.n..n).map(|j| 1u64 << j));
        }
        Ok(Self::span_indices(n, gens))
    }
}

fn reduce(basis: &[u64], mut v: u64) -> u64 {
    for &b in basis {
        let pivot = 63 - b.leading_zeros();
        if (v >> pivot) & 1 == 1 {
            v ^= b;
        }
    }
    v
}

/// `A_2^r` as a subspace of F_2^{2r}: coordinates `2i` and `2i+1` agree.
pub fn repetition_subspace(r: usize) -> LinearSubspace {
    LinearSubspace::span_indices(2 * r, (0..r).map(|i| 0b11u64 << (2 * i)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(s: &str) -> BitVector {
        BitVector::parse(s).unwrap()
    }

    fn strings(vs: &[BitVector]) -> Vec<String> {
        vs.iter().map(|v| v.to_bit_string()).collect()
    }

    #[test]
    fn complement_examples() {
        let zero = LinearSubspace::zero(2);
        assert_eq!(zero.orthogonal_complement(), LinearSubspace::full(2));

        let diag = LinearSubspace::span(4, &[bv("1010"), bv("0101")]).unwrap();
        assert_eq!(diag.orthogonal_complement(), diag);

        let h = LinearSubspace::span(2, &[bv("11")]).unwrap();
        assert_eq!(h.orthogonal_complement(), h);
    }

    #[test]
    fn complement_is_exact() {
        let h = LinearSubspace::span(6, &[bv("110100"), bv("011010"), bv("111110")]).unwrap();
        let perp = h.orthogonal_complement();
        assert_eq!(h.dim() + perp.dim(), 6);
        for a in h.members() {
            for b in perp.members() {
                assert!(!a.dot(&b));
            }
        }
        assert_eq!(perp.orthogonal_complement(), h);
    }

    #[test]
    fn coset_representative_examples() {
        assert_eq!(strings(&LinearSubspace::full(3).coset_representatives()), vec!["000"]);
        let a2 = repetition_subspace(1);
        assert_eq!(strings(&a2.coset_representatives()), vec!["00", "10"]);
        let a22 = repetition_subspace(2);
        let reps = a22.coset_representatives();
        assert_eq!(reps.len(), 4);
        for r in &reps {
            let coset: Vec<u64> = a22.members().iter().map(|m| m.bits() ^ r.bits()).collect();
            assert_eq!(*coset.iter().min().unwrap(), r.bits());
        }
    }

    #[test]
    fn spanning_drops_dependents() {
        let h = LinearSubspace::span(3, &[bv("110"), bv("011"), bv("101")]).unwrap();
        assert_eq!(h.dim(), 2);
        assert!(h.contains(&bv("101")));
        assert!(!h.contains(&bv("100")));
        assert_eq!(h.coset_leader(&bv("111")).unwrap().bits(), 1);
        assert!(h.same_coset(&bv("100"), &bv("111")).unwrap());
    }

    #[test]
    fn extension() {
        let a = repetition_subspace(2);
        let free = a.extend(1, true).unwrap();
        let fixed = a.extend(1, false).unwrap();
        assert_eq!(free.dim(), 3);
        assert_eq!(fixed.dim(), 2);
        assert_eq!(free.orthogonal_complement(), fixed);
    }
}
