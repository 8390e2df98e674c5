//! Rational quartic residue symbols.
//!
//! `(a/p)_4` is only defined here when `(a/p) = +1`; it is then
//! `a^((p-1)/4) mod p`, which lands in `{1, p-1}`. Composite denominators are
//! handled multiplicatively and the factor 8 contributes `(-1)^((a-1)/8)`.

use crate::arith::{jacobi_u64, mod_pow, OddPrime, Sign};
use crate::error::{Error, Result};
use crate::modulus::FourOneModulus;

/// `(a/p)_4` for a prime `p ≡ 1 mod 4` and a quadratic residue `a`.
pub fn quartic_symbol_prime(a: i128, p: OddPrime) -> Result<Sign> {
    let p = p.require_one_mod(4)?;
    let n = p.get();
    let reduced = p.reduce(a);
    match jacobi_u64(reduced, n) {
        1 => {}
        0 => return Err(Error::Divisible { a, p: n }),
        _ => return Err(Error::NotQuadraticResidue { a, p: n }),
    }
    match mod_pow(reduced as i64, (n - 1) / 4, n)? {
        1 => Ok(Sign::Plus),
        x if x == n - 1 => Ok(Sign::Minus),
        x => Err(Error::Invariant(format!(
            "{a}^(({n}-1)/4) = {x} mod {n} for a quadratic residue"
        ))),
    }
}

/// `(p/2)_4 = (-1)^((p-1)/8)` for a prime `p ≡ 1 mod 8`.
pub fn quartic_symbol_two(p: OddPrime) -> Result<Sign> {
    let p = p.require_one_mod(8)?;
    Ok(Sign::from_parity((p.get() - 1) / 8 % 2 == 1))
}

/// The character at 8 applied to any `a ≡ 1 mod 8`.
pub(crate) fn eight_part(a: i128) -> Option<Sign> {
    match a.rem_euclid(16) {
        1 => Some(Sign::Plus),
        9 => Some(Sign::Minus),
        _ => None,
    }
}

/// `(a/m)_4` for `m` a [`FourOneModulus`], possibly with the factor 8.
pub fn quartic_symbol_composite(a: i128, m: &FourOneModulus) -> Result<Sign> {
    let mut sign = if m.is_even() {
        eight_part(a).ok_or(Error::InvalidModulus {
            m: m.value(),
            reason: "even modulus needs a numerator congruent to 1 mod 8",
        })?
    } else {
        Sign::Plus
    };
    for &p in m.odd_primes() {
        sign *= quartic_symbol_prime(a, p)?;
    }
    Ok(sign)
}
