use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bits::BitVector;
use crate::error::{Error, Result};

use super::linear::repetition_subspace;
use super::orbits::orbit_members;

/// Which modifier set a [`GammaSpec`] describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ModifierFamily {
    /// Cells `x'' = x' + γ1, y'' = y' + γ2` on `4k` variables.
    S1,
    /// Cells `A_2^{2k} × (γ + A_2^{2k})` on `8k` variables.
    S2,
    /// `S1` cells with `x_m` free and `y_m ∈ E_γ`, on `4k+2` variables.
    S3,
    /// `S2` cells with `x_m` free and `y_m ∈ E_γ`, on `8k+2` variables.
    S4,
    /// Cells `y = x + γ` on `4k` variables.
    T,
}

impl ModifierFamily {
    pub const ALL: [ModifierFamily; 5] = [
        ModifierFamily::S1,
        ModifierFamily::S2,
        ModifierFamily::S3,
        ModifierFamily::S4,
        ModifierFamily::T,
    ];

    /// Length of each `γ`.
    pub fn gamma_len(self, k: usize) -> usize {
        match self {
            ModifierFamily::S1 | ModifierFamily::S3 | ModifierFamily::T => 2 * k,
            ModifierFamily::S2 | ModifierFamily::S4 => 4 * k,
        }
    }

    /// Number of variables of the ambient space.
    pub fn num_vars(self, k: usize) -> usize {
        match self {
            ModifierFamily::S1 | ModifierFamily::T => 4 * k,
            ModifierFamily::S2 => 8 * k,
            ModifierFamily::S3 => 4 * k + 2,
            ModifierFamily::S4 => 8 * k + 2,
        }
    }

    pub fn needs_e_sets(self) -> bool {
        matches!(self, ModifierFamily::S3 | ModifierFamily::S4)
    }

    pub fn needs_distinct_cosets(self) -> bool {
        matches!(self, ModifierFamily::S2 | ModifierFamily::S4)
    }
}

impl fmt::Display for ModifierFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl fmt::Display for GammaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} k={} gamma={}", self.family, self.k, format_gamma_list(&self.gammas))?;
        if let Some(e) = &self.e_sets {
            write!(f, " eset={}", format_eset_list(e))?;
        }
        Ok(())
    }
}

impl FromStr for ModifierFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<ModifierFamily> {
        ModifierFamily::ALL
            .into_iter()
            .find(|f| f.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown modifier family `{s}` (expected s1, s2, s3, s4 or t)")))
    }
}

/// A nonempty subset of F_2: `{0}`, `{1}` or F_2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ESet {
    Zero,
    One,
    Both,
}

impl ESet {
    pub const ALL: [ESet; 3] = [ESet::Zero, ESet::One, ESet::Both];

    pub fn contains(self, bit: bool) -> bool {
        match self {
            ESet::Zero => !bit,
            ESet::One => bit,
            ESet::Both => true,
        }
    }

    pub fn len(self) -> usize {
        if self == ESet::Both {
            2
        } else {
            1
        }
    }

    pub fn is_empty(self) -> bool {
        false
    }

    pub fn members(self) -> impl Iterator<Item = bool> {
        [false, true].into_iter().filter(move |&b| self.contains(b))
    }

    pub fn symbol(self) -> char {
        match self {
            ESet::Zero => '0',
            ESet::One => '1',
            ESet::Both => 'B',
        }
    }
}

impl FromStr for ESet {
    type Err = Error;

    fn from_str(s: &str) -> Result<ESet> {
        match s.trim() {
            "0" => Ok(ESet::Zero),
            "1" => Ok(ESet::One),
            "B" | "b" => Ok(ESet::Both),
            other => Err(Error::Parse(format!("invalid E-set symbol `{other}` (expected 0, 1 or B)"))),
        }
    }
}

impl fmt::Display for ESet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Parses a comma-separated list of bit strings.
pub fn parse_gamma_list(s: &str) -> Result<Vec<BitVector>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(BitVector::parse)
        .collect()
}

/// Parses a comma-separated list of E-set symbols.
pub fn parse_eset_list(s: &str) -> Result<Vec<ESet>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect()
}

pub fn format_gamma_list(gammas: &[BitVector]) -> String {
    gammas.iter().map(|g| g.to_bit_string()).collect::<Vec<_>>().join(",")
}

pub fn format_eset_list(e: &[ESet]) -> String {
    e.iter().map(|x| x.symbol().to_string()).collect::<Vec<_>>().join(",")
}

/// Parameters `(k, Γ, E)` of one modifier set, tagged with its family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaSpec {
    family: ModifierFamily,
    k: usize,
    gammas: Vec<BitVector>,
    e_sets: Option<Vec<ESet>>,
    rotation_closed: bool,
}

impl GammaSpec {
    /// Validates and builds a spec.
    ///
    /// `e_sets`, when given, is aligned with `gammas`.
    pub fn new(
        family: ModifierFamily,
        k: usize,
        gammas: Vec<BitVector>,
        e_sets: Option<Vec<ESet>>,
    ) -> Result<Self> {
        let spec = GammaSpec {
            family,
            k,
            gammas,
            e_sets,
            rotation_closed: false,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// A `T` spec whose `Γ` must be a union of cyclic orbits.
    pub fn rotation_closed(k: usize, gammas: Vec<BitVector>) -> Result<Self> {
        let spec = GammaSpec {
            family: ModifierFamily::T,
            k,
            gammas,
            e_sets: None,
            rotation_closed: true,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn s1(k: usize, gammas: Vec<BitVector>) -> Result<Self> {
        Self::new(ModifierFamily::S1, k, gammas, None)
    }

    pub fn s2(k: usize, gammas: Vec<BitVector>) -> Result<Self> {
        Self::new(ModifierFamily::S2, k, gammas, None)
    }

    pub fn s3(k: usize, gammas: Vec<BitVector>, e_sets: Vec<ESet>) -> Result<Self> {
        Self::new(ModifierFamily::S3, k, gammas, Some(e_sets))
    }

    pub fn s4(k: usize, gammas: Vec<BitVector>, e_sets: Vec<ESet>) -> Result<Self> {
        Self::new(ModifierFamily::S4, k, gammas, Some(e_sets))
    }

    pub fn t(k: usize, gammas: Vec<BitVector>) -> Result<Self> {
        Self::new(ModifierFamily::T, k, gammas, None)
    }

    /// Parses the comma-separated bit-string and E-symbol syntax.
    pub fn parse(family: ModifierFamily, k: usize, gammas: &str, e_sets: Option<&str>) -> Result<Self> {
        let g = parse_gamma_list(gammas)?;
        let e = e_sets.map(parse_eset_list).transpose()?;
        Self::new(family, k, g, e)
    }

    /// Every spec with a single `γ`, and for `S3`/`S4` every choice of `E`.
    pub fn singles(family: ModifierFamily, k: usize) -> Result<Vec<GammaSpec>> {
        let len = family.gamma_len(k);
        let mut out = Vec::new();
        for g in 0..1u64 << len {
            let g = BitVector::new(len, g);
            if family.needs_e_sets() {
                for e in ESet::ALL {
                    out.push(Self::new(family, k, vec![g], Some(vec![e]))?);
                }
            } else {
                out.push(Self::new(family, k, vec![g], None)?);
            }
        }
        Ok(out)
    }

    /// A random spec with up to `size` gammas. For `S2`/`S4` the gammas are
    /// kept in distinct cosets, so fewer may be returned.
    pub fn random<R: Rng + ?Sized>(family: ModifierFamily, k: usize, size: usize, rng: &mut R) -> Result<Self> {
        let len = family.gamma_len(k);
        let mut pool: Vec<u64> = (0..1u64 << len).collect();
        pool.shuffle(rng);
        let a = repetition_subspace(2 * k);
        let mut gammas: Vec<BitVector> = Vec::new();
        for g in pool {
            if gammas.len() == size.max(1) {
                break;
            }
            let g = BitVector::new(len, g);
            if family.needs_distinct_cosets() {
                let mut clash = false;
                for h in &gammas {
                    clash |= a.same_coset(&g, h)?;
                }
                if clash {
                    continue;
                }
            }
            gammas.push(g);
        }
        let e = family
            .needs_e_sets()
            .then(|| gammas.iter().map(|_| ESet::ALL[rng.gen_range(0..3)]).collect());
        Self::new(family, k, gammas, e)
    }

    fn validate(&self) -> Result<()> {
        let invalid = |m: String| Err(Error::InvalidSpec(m));
        if self.k == 0 {
            return invalid("k must be at least 1".into());
        }
        if self.gammas.is_empty() {
            return invalid("gamma set is empty".into());
        }
        let len = self.family.gamma_len(self.k);
        let mut seen = BTreeSet::new();
        for g in &self.gammas {
            if g.len() != len {
                return invalid(format!(
                    "gamma `{g}` has length {}, family {} with k={} needs {len}",
                    g.len(),
                    self.family,
                    self.k
                ));
            }
            if !seen.insert(g.bits()) {
                return invalid(format!("gamma `{g}` listed twice"));
            }
        }
        match (&self.e_sets, self.family.needs_e_sets()) {
            (Some(e), true) if e.len() != self.gammas.len() => {
                return invalid(format!(
                    "{} E-sets given for {} gammas",
                    e.len(),
                    self.gammas.len()
                ))
            }
            (None, true) => return invalid(format!("family {} needs E-sets", self.family)),
            (Some(_), false) => return invalid(format!("family {} takes no E-sets", self.family)),
            _ => {}
        }
        if self.family.needs_distinct_cosets() {
            let a = repetition_subspace(2 * self.k);
            for (i, g) in self.gammas.iter().enumerate() {
                for h in &self.gammas[..i] {
                    if a.same_coset(g, h)? {
                        return Err(Error::RepresentativeViolation { first: *h, second: *g });
                    }
                }
            }
        }
        if self.rotation_closed {
            for g in &self.gammas {
                if let Some(missing) = orbit_members(g).into_iter().find(|m| !seen.contains(&m.bits())) {
                    return Err(Error::NotOrbitClosed { missing });
                }
            }
        }
        Ok(())
    }

    pub fn family(&self) -> ModifierFamily {
        self.family
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn num_vars(&self) -> usize {
        self.family.num_vars(self.k)
    }

    pub fn gammas(&self) -> &[BitVector] {
        &self.gammas
    }

    pub fn e_sets(&self) -> Option<&[ESet]> {
        self.e_sets.as_deref()
    }

    pub fn is_rotation_closed(&self) -> bool {
        self.rotation_closed
    }

    /// `(γ, E_γ)` pairs; `E_γ = F_2` for families without E-sets.
    pub fn cells(&self) -> impl Iterator<Item = (BitVector, ESet)> + '_ {
        self.gammas.iter().enumerate().map(move |(i, g)| {
            let e = self.e_sets.as_ref().map_or(ESet::Both, |e| e[i]);
            (*g, e)
        })
    }

    /// `Σ_γ |E_γ|`.
    pub fn e_weight(&self) -> usize {
        self.e_sets
            .as_ref()
            .map_or(0, |e| e.iter().map(|x| x.len()).sum())
    }
}
