//! Truth-table representation of Boolean functions.

use std::fmt;

use crate::anf::AnfPolynomial;
use crate::bits::{rotate_index, BitTable, BitVector};
use crate::error::{ensure_same_dimension, Error, Result};
use crate::subspaces::VectorSet;

/// A Boolean function on `n` variables, stored as its `2^n`-entry truth table.
///
/// Entry `i` is the value at the point whose coordinate `j` is bit `j` of `i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    table: BitTable,
}

impl BooleanFunction {
    fn check_n(n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::InvalidSpec("a Boolean function needs at least one variable".into()));
        }
        Ok(())
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::check_n(n)?;
        Ok(BooleanFunction {
            table: BitTable::zeros(n)?,
        })
    }

    pub fn one(n: usize) -> Result<Self> {
        let mut f = Self::zero(n)?;
        f.table.not_assign();
        Ok(f)
    }

    /// Tabulates `f` by evaluating it at every point index.
    pub fn from_fn(n: usize, f: impl FnMut(u64) -> bool) -> Result<Self> {
        Self::check_n(n)?;
        Ok(BooleanFunction {
            table: BitTable::from_fn(n, f)?,
        })
    }

    /// Builds a function from explicit outputs, listed in truth-table order.
    pub fn from_values(values: &[bool]) -> Result<Self> {
        let len = values.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::Parse(format!("truth table length {len} is not 2^n with n >= 1")));
        }
        let n = len.trailing_zeros() as usize;
        Self::from_fn(n, |i| values[i as usize])
    }

    pub fn from_hex(n: usize, hex: &str) -> Result<Self> {
        Self::check_n(n)?;
        Ok(BooleanFunction {
            table: BitTable::from_hex(n, hex)?,
        })
    }

    pub(crate) fn from_table(table: BitTable) -> Self {
        debug_assert!(table.n() >= 1);
        BooleanFunction { table }
    }

    pub(crate) fn table(&self) -> &BitTable {
        &self.table
    }

    pub fn n(&self) -> usize {
        self.table.n()
    }

    /// Number of points, `2^n`.
    pub fn size(&self) -> u64 {
        self.table.len()
    }

    #[inline]
    pub fn value(&self, index: u64) -> bool {
        self.table.get(index)
    }

    pub fn eval(&self, x: &BitVector) -> bool {
        debug_assert_eq!(x.len(), self.n());
        self.table.get(x.bits())
    }

    pub fn values(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.size()).map(|i| self.table.get(i))
    }

    pub fn weight(&self) -> u64 {
        self.table.count_ones()
    }

    /// Indices of the points where the function is 1.
    pub fn support(&self) -> impl Iterator<Item = u64> + '_ {
        self.table.iter_ones()
    }

    pub fn to_hex(&self) -> String {
        self.table.to_hex()
    }

    /// Flips the value at one point.
    pub fn flip(&mut self, index: u64) {
        self.table.toggle(index);
    }

    /// Pointwise sum over F_2.
    pub fn xor(&self, other: &BooleanFunction) -> Result<BooleanFunction> {
        ensure_same_dimension(self.n(), other.n())?;
        let mut table = self.table.clone();
        table.xor_assign(&other.table);
        Ok(BooleanFunction { table })
    }

    /// `x ↦ f(ρ^l(x))` for `0 <= l < n`.
    pub fn cyclic_shift(&self, l: usize) -> Result<BooleanFunction> {
        let n = self.n();
        if l >= n {
            return Err(Error::ShiftOutOfRange { shift: l, n });
        }
        if l == 0 {
            return Ok(self.clone());
        }
        Ok(BooleanFunction {
            table: BitTable::from_fn(n, |x| self.table.get(rotate_index(x, n, l)))?,
        })
    }

    fn invariant_under(&self, l: usize) -> bool {
        let n = self.n();
        (0..self.size()).all(|x| self.table.get(rotate_index(x, n, l)) == self.table.get(x))
    }

    /// Smallest `l >= 1` with `f∘ρ^l = f`.
    ///
    /// The invariance periods form the subgroup generated by this `l`, so it
    /// divides `n` and no smaller positive shift fixes `f`. Constants give 1;
    /// a function fixed only by the identity gives `n`.
    pub fn rotation_symmetry_order(&self) -> usize {
        let n = self.n();
        (1..=n)
            .filter(|l| n % l == 0)
            .find(|&l| l == n || self.invariant_under(l))
            .unwrap_or(n)
    }

    pub fn anf(&self) -> AnfPolynomial {
        AnfPolynomial::from_function(self)
    }

    pub fn algebraic_degree(&self) -> u32 {
        self.anf().degree()
    }

    /// Characteristic function of a set of points.
    pub fn characteristic(set: &VectorSet) -> Result<BooleanFunction> {
        Self::check_n(set.n())?;
        Ok(BooleanFunction {
            table: set.table().clone(),
        })
    }
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BooleanFunction(n={}, {})", self.n(), self.to_hex())
    }
}
