//! Coprime splittings `d = d1·d2` of a discriminant that is a sum of two
//! squares, the C4 condition, and the comparison `(d1/d2)_4 = (d2/d1)_4`.

use std::fmt;

use serde::Serialize;

use crate::arith::{jacobi_u64, OddPrime};
use crate::error::{Error, Result};
use crate::modulus::FourOneModulus;
use crate::quartic::quartic_symbol_composite;

/// `8` or a prime `p ≡ 1 mod 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PrimeDiscriminant {
    Eight,
    Prime(OddPrime),
}

impl PrimeDiscriminant {
    pub fn value(self) -> u64 {
        match self {
            PrimeDiscriminant::Eight => 8,
            PrimeDiscriminant::Prime(p) => p.get(),
        }
    }
}

impl fmt::Display for PrimeDiscriminant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value().fmt(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscSplit {
    pub d: u64,
    pub d1: u64,
    pub d2: u64,
    pub is_c4: bool,
    /// Set exactly when `is_c4`.
    pub scholz_equal: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenusReport {
    pub d: u64,
    pub prime_discriminants: Vec<u64>,
    pub splits: Vec<DiscSplit>,
    pub c4_count: usize,
    pub real_count: usize,
}

/// The prime discriminants of `d = m` or `d = 8m`, `8` first.
pub fn prime_discriminants(d: u64) -> Result<Vec<PrimeDiscriminant>> {
    let invalid = |reason| Error::InvalidDiscriminant { d, reason };
    if d <= 1 {
        return Err(invalid("must exceed 1"));
    }
    let m = FourOneModulus::new(d).map_err(|e| match e {
        Error::InvalidModulus { reason, .. } => invalid(reason),
        other => other,
    })?;
    let mut parts = Vec::with_capacity(m.rank());
    if m.is_even() {
        parts.push(PrimeDiscriminant::Eight);
    }
    parts.extend(m.odd_primes().iter().map(|&p| PrimeDiscriminant::Prime(p)));
    Ok(parts)
}

/// `(x/q) = +1` for a prime discriminant `q`; at 8 this is `x ≡ ±1 mod 8`.
fn character_is_trivial(x: u64, q: PrimeDiscriminant) -> bool {
    match q {
        PrimeDiscriminant::Eight => matches!(x % 8, 1 | 7),
        PrimeDiscriminant::Prime(p) => jacobi_u64(x % p.get(), p.get()) == 1,
    }
}

fn split_is_c4(d1: u64, d2: u64, parts1: &[PrimeDiscriminant], parts2: &[PrimeDiscriminant]) -> bool {
    parts2.iter().all(|&q| character_is_trivial(d1, q)) && parts1.iter().all(|&q| character_is_trivial(d2, q))
}

/// `(d1/d2)_4 = (d2/d1)_4` for a C4 split.
pub fn scholz_real_criterion(s: &DiscSplit) -> Result<bool> {
    if !s.is_c4 {
        return Err(Error::NotC4 { d1: s.d1, d2: s.d2 });
    }
    let (m1, m2) = (FourOneModulus::new(s.d1)?, FourOneModulus::new(s.d2)?);
    let forward = quartic_symbol_composite(s.d1.into(), &m2);
    let backward = quartic_symbol_composite(s.d2.into(), &m1);
    match (forward, backward) {
        (Ok(f), Ok(b)) => Ok(f == b),
        (Err(e), _) | (_, Err(e)) => Err(Error::Invariant(format!(
            "quartic symbols undefined on C4 split {} * {}: {e}",
            s.d1, s.d2
        ))),
    }
}

/// All `2^(r-1) − 1` unordered splits with `1 < d1 < d2`, sorted by `d1`.
pub fn enumerate_splits(d: u64) -> Result<Vec<DiscSplit>> {
    let parts = prime_discriminants(d)?;
    if parts.len() < 2 {
        return Err(Error::InvalidDiscriminant {
            d,
            reason: "needs at least two prime discriminants",
        });
    }
    let last = parts.len() - 1;
    let mut splits = Vec::new();
    for mask in 1u32..(1 << last) {
        let (mut first, mut second) = (Vec::new(), Vec::new());
        for (i, &q) in parts.iter().enumerate() {
            if i < last && mask >> i & 1 == 1 {
                first.push(q);
            } else {
                second.push(q);
            }
        }
        let d1: u64 = first.iter().map(|q| q.value()).product();
        let d2 = d / d1;
        let is_c4 = split_is_c4(d1, d2, &first, &second);
        let (d1, d2) = (d1.min(d2), d1.max(d2));
        let mut split = DiscSplit {
            d,
            d1,
            d2,
            is_c4,
            scholz_equal: None,
        };
        if is_c4 {
            split.scholz_equal = Some(scholz_real_criterion(&split)?);
        }
        splits.push(split);
    }
    splits.sort_by_key(|s| s.d1);
    Ok(splits)
}

pub fn explore(d: u64) -> Result<GenusReport> {
    let prime_discriminants = prime_discriminants(d)?.iter().map(|q| q.value()).collect();
    let splits = enumerate_splits(d)?;
    let c4_count = splits.iter().filter(|s| s.is_c4).count();
    let real_count = splits.iter().filter(|s| s.scholz_equal == Some(true)).count();
    Ok(GenusReport {
        d,
        prime_discriminants,
        splits,
        c4_count,
        real_count,
    })
}

impl GenusReport {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("genus report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laws::is_admissible;
    use crate::modulus::odd_moduli_up_to;

    fn values(d: u64) -> Vec<u64> {
        prime_discriminants(d).unwrap().iter().map(|q| q.value()).collect()
    }

    fn pairs(d: u64) -> Vec<(u64, u64, bool)> {
        enumerate_splits(d)
            .unwrap()
            .iter()
            .map(|s| (s.d1, s.d2, s.is_c4))
            .collect()
    }

    #[test]
    fn prime_discriminant_examples() {
        assert_eq!(values(65), vec![5, 13]);
        assert_eq!(values(145), vec![5, 29]);
        assert_eq!(values(40), vec![8, 5]);
        for bad in [0u64, 1, 21, 20, 16, 75, 12] {
            assert!(prime_discriminants(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn split_examples() {
        assert_eq!(pairs(65), vec![(5, 13, false)]);
        assert_eq!(pairs(145), vec![(5, 29, true)]);
        assert_eq!(pairs(1105), vec![(5, 221, false), (13, 85, false), (17, 65, false)]);
        assert_eq!(pairs(40), vec![(5, 8, false)]);
        assert!(enumerate_splits(5).is_err());
        assert!(enumerate_splits(8).is_err());
    }

    #[test]
    fn criterion_examples() {
        let s = &enumerate_splits(145).unwrap()[0];
        assert!(scholz_real_criterion(s).unwrap());
        let s = &enumerate_splits(793).unwrap()[0];
        assert!(s.is_c4);
        assert!(scholz_real_criterion(s).unwrap());
        let s = &enumerate_splits(65).unwrap()[0];
        assert!(matches!(scholz_real_criterion(s), Err(Error::NotC4 { d1: 5, d2: 13 })));
    }

    #[test]
    fn explore_examples() {
        let r = explore(65).unwrap();
        assert_eq!((r.c4_count, r.real_count), (0, 0));
        let r = explore(145).unwrap();
        assert_eq!((r.c4_count, r.real_count), (1, 1));
        assert_eq!(r.splits[0].scholz_equal, Some(true));
        let r = explore(40).unwrap();
        assert_eq!(r.c4_count, 0);
        // 17·8: 17 ≡ 1 mod 8 and (8/17) = +1
        let r = explore(136).unwrap();
        assert_eq!(r.c4_count, 1);
        assert!(r.splits[0].scholz_equal.is_some());
    }

    #[test]
    fn split_count_and_symmetry() {
        let mut ds: Vec<u64> = odd_moduli_up_to(5000).iter().map(|m| m.value()).collect();
        ds.extend(odd_moduli_up_to(600).iter().map(|m| 8 * m.value()));
        for d in ds {
            let r = prime_discriminants(d).unwrap().len();
            if r < 2 {
                continue;
            }
            let splits = enumerate_splits(d).unwrap();
            assert_eq!(splits.len(), (1 << (r - 1)) - 1, "d = {d}");
            for s in &splits {
                assert_eq!(s.d1 * s.d2, d);
                assert_eq!(s.scholz_equal.is_some(), s.is_c4);
                let p1 = prime_discriminants(s.d1).unwrap();
                let p2 = prime_discriminants(s.d2).unwrap();
                assert_eq!(split_is_c4(s.d2, s.d1, &p2, &p1), s.is_c4);
                if s.is_c4 {
                    let swapped = DiscSplit {
                        d1: s.d2,
                        d2: s.d1,
                        ..s.clone()
                    };
                    assert_eq!(scholz_real_criterion(&swapped).unwrap(), s.scholz_equal.unwrap());
                }
            }
        }
    }

    #[test]
    fn two_prime_c4_matches_admissibility() {
        let ms = odd_moduli_up_to(3000);
        for m in ms.iter().filter(|m| m.rank() == 2) {
            let ps = m.odd_primes();
            let a = FourOneModulus::new(ps[0].get()).unwrap();
            let b = FourOneModulus::new(ps[1].get()).unwrap();
            let s = &enumerate_splits(m.value()).unwrap()[0];
            assert_eq!(s.is_c4, is_admissible(&a, &b).unwrap(), "d = {m}");
        }
    }
}
