//! Algebraic normal form over F_2.

use std::collections::BTreeSet;
use std::fmt;

use crate::bits::{BitTable, BitVector};
use crate::error::{Error, Result};
use crate::function::BooleanFunction;

/// Polynomial `Σ c_u x^u`; coefficient `c_u` sits at index `u` of a `2^n` table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AnfPolynomial {
    coeffs: BitTable,
}

impl AnfPolynomial {
    pub fn zero(n: usize) -> Result<Self> {
        Ok(AnfPolynomial {
            coeffs: BitTable::zeros(n)?,
        })
    }

    /// Binary Möbius transform of the truth table.
    pub fn from_function(f: &BooleanFunction) -> Self {
        let mut coeffs = f.table().clone();
        coeffs.mobius_in_place();
        AnfPolynomial { coeffs }
    }

    /// Evaluates the polynomial at every point; the inverse of [`Self::from_function`].
    pub fn to_function(&self) -> BooleanFunction {
        let mut table = self.coeffs.clone();
        table.mobius_in_place();
        BooleanFunction::from_table(table)
    }

    /// Sum of the given monomials; repeated masks cancel in pairs.
    pub fn from_monomials(n: usize, masks: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut p = Self::zero(n)?;
        for u in masks {
            if u >> n != 0 {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: 64 - u.leading_zeros() as usize,
                });
            }
            p.coeffs.toggle(u);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.coeffs.n()
    }

    pub fn coefficient(&self, u: &BitVector) -> bool {
        self.coeffs.get(u.bits())
    }

    /// Monomial masks with nonzero coefficient, in ascending order.
    pub fn monomials(&self) -> impl Iterator<Item = u64> + '_ {
        self.coeffs.iter_ones()
    }

    pub fn monomial_set(&self) -> BTreeSet<u64> {
        self.monomials().collect()
    }

    pub fn term_count(&self) -> u64 {
        self.coeffs.count_ones()
    }

    pub fn is_zero(&self) -> bool {
        self.term_count() == 0
    }

    /// Largest monomial weight; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.monomials().map(u64::count_ones).max().unwrap_or(0)
    }

    pub fn add(&self, other: &AnfPolynomial) -> Result<AnfPolynomial> {
        crate::error::ensure_same_dimension(self.n(), other.n())?;
        let mut coeffs = self.coeffs.clone();
        coeffs.xor_assign(&other.coeffs);
        Ok(AnfPolynomial { coeffs })
    }

    /// Evaluates at one point by direct summation over the terms.
    pub fn eval(&self, x: &BitVector) -> bool {
        self.monomials()
            .filter(|&u| u & !x.bits() == 0)
            .count()
            % 2
            == 1
    }

    /// Parses `x0*x3 + x1 + 1`; `0` is the zero polynomial.
    pub fn parse(n: usize, text: &str) -> Result<AnfPolynomial> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut masks = Vec::new();
        if compact != "0" {
            for term in compact.split('+') {
                masks.push(parse_term(n, term)?);
            }
        }
        Self::from_monomials(n, masks)
    }
}

fn parse_term(n: usize, term: &str) -> Result<u64> {
    if term == "1" {
        return Ok(0);
    }
    let mut mask = 0u64;
    for factor in term.split('*') {
        let idx = factor
            .strip_prefix('x')
            .and_then(|d| d.parse::<usize>().ok())
            .ok_or_else(|| Error::Parse(format!("invalid factor `{factor}` in term `{term}`")))?;
        if idx >= n {
            return Err(Error::Parse(format!("variable x{idx} out of range for {n} variables")));
        }
        mask |= 1 << idx;
    }
    Ok(mask)
}

/// Renders one monomial as `x0*x2`, or `1` for the constant term.
pub fn format_monomial(mask: u64) -> String {
    if mask == 0 {
        return "1".into();
    }
    let mut parts = Vec::new();
    let mut rest = mask;
    while rest != 0 {
        parts.push(format!("x{}", rest.trailing_zeros()));
        rest &= rest - 1;
    }
    parts.join("*")
}

impl fmt::Display for AnfPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self.monomials().map(format_monomial).collect();
        f.write_str(&terms.join(" + "))
    }
}

impl fmt::Debug for AnfPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AnfPolynomial(n={}, {})", self.n(), self)
    }
}

/// Sparse polynomial as a set of monomial masks, used to assemble closed forms
/// without materialising a truth table.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct SparseAnf {
    terms: BTreeSet<u64>,
}

impl SparseAnf {
    pub(crate) fn zero() -> Self {
        SparseAnf::default()
    }

    pub(crate) fn one() -> Self {
        Self::monomial(0)
    }

    pub(crate) fn monomial(mask: u64) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(mask);
        SparseAnf { terms }
    }

    /// `c + Σ x_j` over `vars`, with constant `c`.
    pub(crate) fn linear(vars: &[usize], constant: bool) -> Self {
        let mut p = SparseAnf::zero();
        for &v in vars {
            p.toggle(1 << v);
        }
        if constant {
            p.toggle(0);
        }
        p
    }

    pub(crate) fn toggle(&mut self, mask: u64) {
        if !self.terms.remove(&mask) {
            self.terms.insert(mask);
        }
    }

    pub(crate) fn add_assign(&mut self, other: &SparseAnf) {
        for &m in &other.terms {
            self.toggle(m);
        }
    }

    pub(crate) fn mul(&self, other: &SparseAnf) -> SparseAnf {
        let mut out = SparseAnf::zero();
        for &a in &self.terms {
            for &b in &other.terms {
                out.toggle(a | b);
            }
        }
        out
    }

    pub(crate) fn into_dense(self, n: usize) -> Result<AnfPolynomial> {
        AnfPolynomial::from_monomials(n, self.terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let zero = BooleanFunction::zero(2).unwrap();
        assert!(zero.anf().is_zero());

        let and = BooleanFunction::from_values(&[false, false, false, true]).unwrap();
        assert_eq!(and.anf().to_string(), "x0*x1");

        let p = AnfPolynomial::parse(3, "0").unwrap();
        assert_eq!(p.to_function(), BooleanFunction::zero(3).unwrap());

        let x0 = AnfPolynomial::parse(2, "x0").unwrap();
        let tt: Vec<bool> = x0.to_function().values().collect();
        assert_eq!(tt, vec![false, true, false, true]);

        let q = AnfPolynomial::parse(2, "x0*x1 + x1").unwrap();
        let tt: Vec<bool> = q.to_function().values().collect();
        assert_eq!(tt, vec![false, false, true, false]);
    }

    #[test]
    fn evaluation_agrees_with_table() {
        let p = AnfPolynomial::parse(4, "1 + x0*x2 + x1*x2*x3 + x3").unwrap();
        let f = p.to_function();
        for x in 0..16 {
            assert_eq!(p.eval(&BitVector::new(4, x)), f.value(x));
        }
    }

    #[test]
    fn degree_and_format() {
        assert_eq!(BooleanFunction::one(5).unwrap().algebraic_degree(), 0);
        let p = AnfPolynomial::parse(4, "x3 + x0*x1*x2 + 1").unwrap();
        assert_eq!(p.degree(), 3);
        assert_eq!(p.to_string(), "1 + x0*x1*x2 + x3");
        assert_eq!(AnfPolynomial::parse(4, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn parse_errors() {
        assert!(AnfPolynomial::parse(2, "x2").is_err());
        assert!(AnfPolynomial::parse(2, "y0").is_err());
        assert!(AnfPolynomial::parse(2, "").is_err());
        assert!(AnfPolynomial::parse(2, "x0++x1").is_err());
    }

    #[test]
    fn sparse_products_cancel() {
        // (x0 + x1 + 1)(x0 + x1 + 1) = x0 + x1 + 1 over F_2 with idempotent variables
        let p = SparseAnf::linear(&[0, 1], true);
        let sq = p.mul(&p);
        assert_eq!(sq, p);
        let dense = sq.into_dense(2).unwrap();
        assert_eq!(dense.to_string(), "1 + x0 + x1");
    }
}
