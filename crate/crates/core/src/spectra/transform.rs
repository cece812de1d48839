use std::fmt::Write as _;

use crate::bits::{BitVector, Capacity};
use crate::error::{ensure_same_dimension, Error, Result};
use crate::function::BooleanFunction;
use crate::subspaces::VectorSet;

use super::gaussian::GaussianInteger;

/// In-place unnormalised Walsh-Hadamard butterfly on a power-of-two slice.
pub fn fwht(a: &mut [i64]) {
    let len = a.len();
    debug_assert!(len.is_power_of_two());
    let mut h = 1;
    while h < len {
        for block in a.chunks_exact_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (x, y) in lo.iter_mut().zip(hi.iter_mut()) {
                let (s, d) = (*x + *y, *x - *y);
                *x = s;
                *y = d;
            }
        }
        h <<= 1;
    }
}

#[inline]
pub(crate) fn sign(bit: bool) -> i64 {
    1 - 2 * (bit as i64)
}

/// Exact Walsh-Hadamard spectrum, `values[u] = W_f(u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalshSpectrum {
    n: usize,
    values: Vec<i64>,
}

/// Exact nega-Hadamard spectrum, `values[u] = N_f(u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NegaSpectrum {
    n: usize,
    values: Vec<GaussianInteger>,
}

fn hex_width(n: usize) -> usize {
    n.div_ceil(4).max(1)
}

impl WalshSpectrum {
    pub fn from_values(n: usize, values: Vec<i64>) -> Result<Self> {
        ensure_same_dimension(n, values.len().trailing_zeros() as usize)?;
        Ok(WalshSpectrum { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn at(&self, u: u64) -> i64 {
        self.values[u as usize]
    }

    /// `Σ W_f(u)^2 = 2^{2n}`.
    pub fn parseval_holds(&self) -> bool {
        let sum: i128 = self.values.iter().map(|&v| (v as i128) * (v as i128)).sum();
        sum == 1i128 << (2 * self.n)
    }

    /// First point where `W_f(u)^2 != 2^n`, if any.
    pub fn first_non_flat(&self) -> Option<u64> {
        let target = 1i128 << self.n;
        self.values
            .iter()
            .position(|&v| (v as i128) * (v as i128) != target)
            .map(|u| u as u64)
    }

    /// One line per point: `u_hex TAB value`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let w = hex_width(self.n);
        for (u, v) in self.values.iter().enumerate() {
            let _ = writeln!(out, "{u:0w$x}\t{v}");
        }
        out
    }
}

impl NegaSpectrum {
    pub fn from_values(n: usize, values: Vec<GaussianInteger>) -> Result<Self> {
        ensure_same_dimension(n, values.len().trailing_zeros() as usize)?;
        Ok(NegaSpectrum { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[GaussianInteger] {
        &self.values
    }

    pub fn at(&self, u: u64) -> GaussianInteger {
        self.values[u as usize]
    }

    /// `Σ |N_f(u)|^2 = 2^{2n}`.
    pub fn parseval_holds(&self) -> bool {
        let sum: i128 = self.values.iter().map(|v| v.norm_sqr() as i128).sum();
        sum == 1i128 << (2 * self.n)
    }

    /// First point where `|N_f(u)|^2 != 2^n`, if any.
    pub fn first_non_flat(&self) -> Option<u64> {
        let target = 1i64 << self.n;
        self.values
            .iter()
            .position(|v| v.norm_sqr() != target)
            .map(|u| u as u64)
    }

    /// One line per point: `u_hex TAB re TAB im`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let w = hex_width(self.n);
        for (u, v) in self.values.iter().enumerate() {
            let _ = writeln!(out, "{u:0w$x}\t{}\t{}", v.re, v.im);
        }
        out
    }
}

/// Fast Walsh-Hadamard transform under an explicit variable limit.
pub fn walsh_transform_with(f: &BooleanFunction, cap: Capacity) -> Result<WalshSpectrum> {
    cap.check(f.n())?;
    let mut a: Vec<i64> = f.values().map(sign).collect();
    fwht(&mut a);
    Ok(WalshSpectrum { n: f.n(), values: a })
}

pub fn walsh_transform(f: &BooleanFunction) -> Result<WalshSpectrum> {
    walsh_transform_with(f, Capacity::default())
}

/// Splits `±i^{wt(x)}` weights into real and imaginary input vectors.
fn twisted_parts(n: usize, mut weight: impl FnMut(u64) -> i64) -> (Vec<i64>, Vec<i64>) {
    let size = 1usize << n;
    let mut re = vec![0i64; size];
    let mut im = vec![0i64; size];
    for x in 0..size {
        let s = weight(x as u64);
        if s == 0 {
            continue;
        }
        match (x as u64).count_ones() % 4 {
            0 => re[x] = s,
            1 => im[x] = s,
            2 => re[x] = -s,
            _ => im[x] = -s,
        }
    }
    (re, im)
}

fn combine(n: usize, mut re: Vec<i64>, mut im: Vec<i64>) -> NegaSpectrum {
    fwht(&mut re);
    fwht(&mut im);
    let values = re
        .into_iter()
        .zip(im)
        .map(|(r, i)| GaussianInteger::new(r, i))
        .collect();
    NegaSpectrum { n, values }
}

/// Fast nega-Hadamard transform under an explicit variable limit.
pub fn nega_transform_with(f: &BooleanFunction, cap: Capacity) -> Result<NegaSpectrum> {
    cap.check(f.n())?;
    let (re, im) = twisted_parts(f.n(), |x| sign(f.value(x)));
    Ok(combine(f.n(), re, im))
}

pub fn nega_transform(f: &BooleanFunction) -> Result<NegaSpectrum> {
    nega_transform_with(f, Capacity::default())
}

fn check_set(f: &BooleanFunction, t: &VectorSet) -> Result<()> {
    ensure_same_dimension(f.n(), t.n())
}

/// `Σ_{x ∈ T} (-1)^{f(x) + u·x}` by direct summation.
pub fn fragmentary_walsh(f: &BooleanFunction, t: &VectorSet, u: &BitVector) -> Result<i64> {
    check_set(f, t)?;
    ensure_same_dimension(f.n(), u.len())?;
    Ok(t.iter_indices()
        .map(|x| sign(f.value(x) ^ ((x & u.bits()).count_ones() & 1 == 1)))
        .sum())
}

/// `Σ_{x ∈ T} (-1)^{f(x) + u·x} i^{wt(x)}` by direct summation.
pub fn fragmentary_nega(
    f: &BooleanFunction,
    t: &VectorSet,
    u: &BitVector,
) -> Result<GaussianInteger> {
    check_set(f, t)?;
    ensure_same_dimension(f.n(), u.len())?;
    Ok(t.iter_indices().fold(GaussianInteger::ZERO, |acc, x| {
        let s = sign(f.value(x) ^ ((x & u.bits()).count_ones() & 1 == 1));
        acc + GaussianInteger::i_pow(x.count_ones()).scale(s)
    }))
}

/// Fragmentary Walsh transform at every point, via a masked butterfly.
pub fn fragmentary_walsh_spectrum(f: &BooleanFunction, t: &VectorSet) -> Result<WalshSpectrum> {
    check_set(f, t)?;
    Capacity::default().check(f.n())?;
    let mut a: Vec<i64> = (0..f.size())
        .map(|x| if t.contains_index(x) { sign(f.value(x)) } else { 0 })
        .collect();
    fwht(&mut a);
    Ok(WalshSpectrum { n: f.n(), values: a })
}

/// Fragmentary nega-Hadamard transform at every point, via a masked butterfly.
pub fn fragmentary_nega_spectrum(f: &BooleanFunction, t: &VectorSet) -> Result<NegaSpectrum> {
    check_set(f, t)?;
    Capacity::default().check(f.n())?;
    let (re, im) = twisted_parts(f.n(), |x| {
        if t.contains_index(x) {
            sign(f.value(x))
        } else {
            0
        }
    });
    Ok(combine(f.n(), re, im))
}

/// Bent and negabent flags of a function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub is_bent: bool,
    pub is_negabent: bool,
    /// First point violating bentness, when `n` is even and the function is not bent.
    pub bent_witness: Option<u64>,
    /// First point violating negabentness.
    pub negabent_witness: Option<u64>,
    pub note: Option<String>,
}

impl Classification {
    pub fn is_bent_negabent(&self) -> bool {
        self.is_bent && self.is_negabent
    }
}

pub fn classify_spectra(walsh: &WalshSpectrum, nega: &NegaSpectrum) -> Classification {
    let n = walsh.n();
    let (is_bent, bent_witness, note) = if n % 2 == 1 {
        (false, None, Some(format!("bentness is undefined for odd n = {n}")))
    } else {
        let w = walsh.first_non_flat();
        (w.is_none(), w, None)
    };
    let negabent_witness = nega.first_non_flat();
    Classification {
        is_bent,
        is_negabent: negabent_witness.is_none(),
        bent_witness,
        negabent_witness,
        note,
    }
}

pub fn classify_with(f: &BooleanFunction, cap: Capacity) -> Result<Classification> {
    let walsh = walsh_transform_with(f, cap)?;
    let nega = nega_transform_with(f, cap)?;
    Ok(classify_spectra(&walsh, &nega))
}

/// Exact bent/negabent classification.
pub fn classify(f: &BooleanFunction) -> Result<Classification> {
    classify_with(f, Capacity::default())
}

/// Dual read off a Walsh spectrum: 0 where `W = +2^{n/2}`, 1 where `W = -2^{n/2}`.
pub fn dual_from_spectrum(walsh: &WalshSpectrum) -> Result<BooleanFunction> {
    let n = walsh.n();
    let not_bent = |u: u64| Error::NotBent {
        point: BitVector::new(n, u),
    };
    if n % 2 == 1 {
        return Err(not_bent(0));
    }
    if let Some(u) = walsh.first_non_flat() {
        return Err(not_bent(u));
    }
    BooleanFunction::from_fn(n, |u| walsh.at(u) < 0)
}

pub fn dual_with(f: &BooleanFunction, cap: Capacity) -> Result<BooleanFunction> {
    dual_from_spectrum(&walsh_transform_with(f, cap)?)
}

/// Dual of a bent function.
pub fn dual(f: &BooleanFunction) -> Result<BooleanFunction> {
    dual_with(f, Capacity::default())
}
