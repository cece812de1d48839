use std::collections::BTreeSet;

use crate::bits::{rotate_index, BitVector};
use crate::error::{Error, Result};

use super::sets::VectorSet;

/// Distinct cyclic shifts `{ρ^i(x)}` of `x`, ascending by index.
pub fn orbit_members(x: &BitVector) -> Vec<BitVector> {
    let n = x.len();
    if n == 0 {
        return vec![*x];
    }
    let set: BTreeSet<u64> = (0..n).map(|i| rotate_index(x.bits(), n, i)).collect();
    set.into_iter().map(|b| BitVector::new(n, b)).collect()
}

/// `O_n(x)` as a set.
pub fn orbit(x: &BitVector) -> Result<VectorSet> {
    if x.is_empty() {
        return Err(Error::InvalidSpec("orbit of a length-0 vector".into()));
    }
    VectorSet::from_vectors(x.len(), orbit_members(x).iter())
}

/// Smallest-index member of the orbit of `x`.
pub fn orbit_representative(x: &BitVector) -> BitVector {
    orbit_members(x)[0]
}

/// One representative per orbit of F_2^n, each the orbit's smallest index.
pub fn orbit_representatives(n: usize) -> Result<Vec<BitVector>> {
    if n == 0 {
        return Err(Error::InvalidSpec("orbit representatives need n >= 1".into()));
    }
    if n > 24 {
        return Err(Error::Capacity { requested: n, limit: 24 });
    }
    Ok((0..1u64 << n)
        .filter(|&x| (1..n).all(|i| rotate_index(x, n, i) >= x))
        .map(|x| BitVector::new(n, x))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(vs: &[BitVector]) -> Vec<String> {
        vs.iter().map(|v| v.to_bit_string()).collect()
    }

    #[test]
    fn orbit_examples() {
        let zero = BitVector::parse("0000").unwrap();
        assert_eq!(orbit(&zero).unwrap().len(), 1);
        let e = BitVector::parse("1000").unwrap();
        assert_eq!(strings(&orbit_members(&e)), vec!["1000", "0100", "0010", "0001"]);
        let alt = BitVector::parse("1010").unwrap();
        assert_eq!(strings(&orbit_members(&alt)), vec!["1010", "0101"]);
    }

    #[test]
    fn representative_examples() {
        assert_eq!(strings(&orbit_representatives(2).unwrap()), vec!["00", "10", "11"]);
        assert_eq!(
            strings(&orbit_representatives(4).unwrap()),
            vec!["0000", "1000", "1100", "1010", "1110", "1111"]
        );
        assert_eq!(orbit_representatives(3).unwrap().len(), 4);
    }

    #[test]
    fn orbits_partition_the_space() {
        for n in 1..=8 {
            let mut seen = std::collections::HashSet::new();
            for r in orbit_representatives(n).unwrap() {
                let members = orbit_members(&r);
                assert_eq!(n % members.len(), 0);
                for m in members {
                    assert!(seen.insert(m.bits()));
                    assert_eq!(orbit_representative(&m), r);
                }
            }
            assert_eq!(seen.len(), 1 << n);
        }
    }
}
