use std::fmt;

use crate::arith::{check_input, factorize, OddPrime};
use crate::error::{Error, Result};

/// A squarefree product of primes `≡ 1 mod 4`, optionally times 8.
///
/// The factor 8 stands for the real cyclic quartic character of 2-power
/// conductor and is only meaningful for the symbol and genus routines.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FourOneModulus {
    value: u64,
    primes: Vec<OddPrime>,
    eight: bool,
}

impl FourOneModulus {
    /// Accepts `m` (odd) or `8·m` where `m` is a squarefree product of primes
    /// `≡ 1 mod 4`. `1` is the empty product.
    pub fn new(value: u64) -> Result<FourOneModulus> {
        let invalid = |reason| Error::InvalidModulus { m: value, reason };
        if value == 0 {
            return Err(invalid("modulus must be positive"));
        }
        check_input(value)?;
        let two_part = value.trailing_zeros();
        let eight = match two_part {
            0 => false,
            3 => true,
            _ => return Err(invalid("the 2-part must be 1 or 8")),
        };
        let odd = value >> two_part;
        let f = factorize(odd)?;
        if !f.is_squarefree() {
            return Err(invalid("odd part is not squarefree"));
        }
        if f.primes().any(|p| p % 4 != 1) {
            return Err(invalid("prime factor congruent to 3 mod 4"));
        }
        let primes = f.primes().map(OddPrime::new_unchecked).collect();
        Ok(FourOneModulus { value, primes, eight })
    }

    /// Like [`FourOneModulus::new`] but rejects the factor 8.
    pub fn new_odd(value: u64) -> Result<FourOneModulus> {
        let m = FourOneModulus::new(value)?;
        if m.eight {
            return Err(Error::InvalidModulus {
                m: value,
                reason: "modulus must be odd",
            });
        }
        Ok(m)
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    /// The odd part `m / 8` or `m`.
    pub fn odd_part(&self) -> u64 {
        if self.eight {
            self.value / 8
        } else {
            self.value
        }
    }

    pub fn odd_primes(&self) -> &[OddPrime] {
        &self.primes
    }

    pub fn is_even(&self) -> bool {
        self.eight
    }

    pub fn is_prime(&self) -> bool {
        !self.eight && self.primes.len() == 1
    }

    /// Number of prime factors, counting the 8 as one.
    pub fn rank(&self) -> usize {
        self.primes.len() + usize::from(self.eight)
    }
}

impl fmt::Display for FourOneModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

/// All odd moduli `1 < m <= max`, ascending.
pub fn odd_moduli_up_to(max: u64) -> Vec<FourOneModulus> {
    (5..=max)
        .step_by(4)
        .filter_map(|m| FourOneModulus::new(m).ok())
        .collect()
}
