//! Brute-force reference implementations.
//!
//! Nothing here calls the exponentiation, Tonelli-Shanks or continued
//! fraction code; every answer comes from an exhaustive scan.

use num_integer::Roots;

use crate::arith::Sign;
use crate::error::{Error, Result};
use crate::modulus::FourOneModulus;
use crate::quartic::eight_part;

pub const QUARTIC_SCAN_LIMIT: u64 = 100_000;
pub const SQRT_SCAN_LIMIT: u64 = 10_000;
pub const PELL_SCAN_LIMIT: u64 = 1_000_000;

fn scale(what: &str, value: u64, limit: u64) -> Error {
    Error::OracleScale(format!("{what} = {value} exceeds the scan limit {limit}"))
}

/// True iff `x⁴ ≡ a mod p` for some `x` in `[1, p)`.
pub fn quartic_residue_bruteforce(a: i128, p: u64) -> Result<bool> {
    if p >= QUARTIC_SCAN_LIMIT {
        return Err(scale("p", p, QUARTIC_SCAN_LIMIT));
    }
    let target = a.rem_euclid(p.into()) as u64;
    if target == 0 {
        return Err(Error::Divisible { a, p });
    }
    Ok((1..p).any(|x| {
        let sq = x * x % p;
        sq * sq % p == target
    }))
}

/// Smallest `u <= u_max` with `m·u² − 1` a perfect square, as `(t, u)`.
pub fn pell_bruteforce(m: u64, u_max: u64) -> Result<Option<(u64, u64)>> {
    if u_max > PELL_SCAN_LIMIT {
        return Err(scale("u_max", u_max, PELL_SCAN_LIMIT));
    }
    for u in 1..=u_max {
        let target = u128::from(m) * u128::from(u) * u128::from(u) - 1;
        let t = target.sqrt();
        if t * t == target {
            return Ok(Some((t as u64, u)));
        }
    }
    Ok(None)
}

/// Every `s` in `[0, p)` with `s² ≡ a mod p`, ascending.
pub fn sqrt_bruteforce(a: i128, p: u64) -> Result<Vec<u64>> {
    if p >= SQRT_SCAN_LIMIT || p == 0 {
        return Err(scale("p", p, SQRT_SCAN_LIMIT));
    }
    let target = a.rem_euclid(p.into()) as u64;
    Ok((0..p).filter(|&s| s * s % p == target).collect())
}

/// Legendre symbol from the root scan: 0, +1 or −1.
pub fn legendre_bruteforce(a: i128, p: u64) -> Result<i8> {
    if a.rem_euclid(p.into()) == 0 {
        return Ok(0);
    }
    Ok(if sqrt_bruteforce(a, p)?.is_empty() { -1 } else { 1 })
}

/// Jacobi symbol over a [`FourOneModulus`] as a product of scanned Legendre symbols.
pub fn jacobi_bruteforce(a: i128, n: &FourOneModulus) -> Result<i8> {
    if n.is_even() {
        return Err(Error::InvalidModulus {
            m: n.value(),
            reason: "modulus must be odd",
        });
    }
    n.odd_primes()
        .iter()
        .try_fold(1i8, |acc, p| Ok(acc * legendre_bruteforce(a, p.get())?))
}

/// `(a/m)_4` from fourth-power scans, with the quadratic residue condition
/// also checked by scanning.
pub fn quartic_symbol_bruteforce(a: i128, m: &FourOneModulus) -> Result<Sign> {
    let mut sign = Sign::Plus;
    if m.is_even() {
        sign = eight_part(a).ok_or(Error::InvalidModulus {
            m: m.value(),
            reason: "even modulus needs a numerator congruent to 1 mod 8",
        })?;
    }
    for p in m.odd_primes() {
        let p = p.get();
        if p < SQRT_SCAN_LIMIT && legendre_bruteforce(a, p)? != 1 {
            return Err(Error::NotQuadraticResidue { a, p });
        }
        sign *= if quartic_residue_bruteforce(a, p)? {
            Sign::Plus
        } else {
            Sign::Minus
        };
    }
    Ok(sign)
}

/// `(x + y·s / p)` where `s` is the least scanned square root of `m` mod `p`
/// giving a nonzero value.
pub fn quadratic_integer_symbol_bruteforce(x: i128, y: i128, m: u64, p: u64) -> Result<i8> {
    let roots = sqrt_bruteforce(m.into(), p)?;
    for s in roots {
        let v = x + y * i128::from(s);
        let l = legendre_bruteforce(v, p)?;
        if l != 0 {
            return Ok(l);
        }
    }
    Err(Error::NotQuadraticResidue { a: m.into(), p })
}
