//! Representations `m = a² + b²` with `a` odd and `b` even.

use num_integer::{Integer, Roots};

use crate::arith::{exact_sqrt, sqrt_mod_prime, OddPrime};
use crate::error::{Error, Result};
use crate::modulus::FourOneModulus;

pub const ALL_REPS_LIMIT: u64 = 1_000_000;

/// Primitive representation `m = a² + b²`, `a` odd and `b` even, both positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoSquaresRep {
    pub m: u64,
    pub a: u64,
    pub b: u64,
}

impl TwoSquaresRep {
    /// Orients and validates a representation given in any order and sign.
    pub fn normalized(m: u64, x: i128, y: i128) -> Result<TwoSquaresRep> {
        let (x, y) = (x.unsigned_abs(), y.unsigned_abs());
        let (a, b) = if x % 2 == 1 { (x, y) } else { (y, x) };
        if a * a + b * b != u128::from(m) || a % 2 == 0 || b % 2 == 1 || a.gcd(&b) != 1 || b == 0 {
            return Err(Error::Invariant(format!(
                "({x}, {y}) is not a primitive odd/even representation of {m}"
            )));
        }
        Ok(TwoSquaresRep {
            m,
            a: a as u64,
            b: b as u64,
        })
    }
}

/// Cornacchia's descent for `p = a² + b²`.
pub fn cornacchia_prime(p: OddPrime) -> Result<TwoSquaresRep> {
    let p = p.require_one_mod(4)?;
    let n = p.get();
    let root = sqrt_mod_prime(-1, p)?;
    let (mut r0, mut r1) = (n, root);
    while r1 * r1 > n {
        (r0, r1) = (r1, r0 % r1);
    }
    let other =
        exact_sqrt(n - r1 * r1).ok_or_else(|| Error::Invariant(format!("Cornacchia descent failed for {n}")))?;
    TwoSquaresRep::normalized(n, r1.into(), other.into())
}

/// Gaussian product `(x1 + y1 i)(x2 + y2 i)`.
pub(crate) fn compose(x1: i128, y1: i128, x2: i128, y2: i128) -> (i128, i128) {
    (x1 * x2 - y1 * y2, x1 * y2 + x2 * y1)
}

/// Canonical representation of an odd modulus: the prime representations
/// are multiplied as Gaussian integers in ascending prime order.
pub fn two_squares_composite(m: &FourOneModulus) -> Result<TwoSquaresRep> {
    if m.is_even() {
        return Err(Error::InvalidModulus {
            m: m.value(),
            reason: "modulus must be odd",
        });
    }
    if m.value() == 1 {
        return Err(Error::InvalidModulus {
            m: 1,
            reason: "modulus must exceed 1",
        });
    }
    let mut acc = (1i128, 0i128);
    for &p in m.odd_primes() {
        let rep = cornacchia_prime(p)?;
        acc = compose(acc.0, acc.1, rep.a.into(), rep.b.into());
    }
    TwoSquaresRep::normalized(m.value(), acc.0, acc.1)
}

/// Exhaustive list of primitive representations, sorted by `a`.
pub fn all_two_squares(m: u64) -> Result<Vec<TwoSquaresRep>> {
    if m > ALL_REPS_LIMIT {
        return Err(Error::OutOfRange {
            value: m.into(),
            max: ALL_REPS_LIMIT.into(),
        });
    }
    let mut reps = Vec::new();
    let mut a = 1;
    while a * a < m {
        if let Some(b) = exact_sqrt(m - a * a) {
            if b % 2 == 0 && b > 0 && a.gcd(&b) == 1 {
                reps.push(TwoSquaresRep { m, a, b });
            }
        }
        a += 2;
    }
    debug_assert!(reps.iter().all(|r| r.a <= m.sqrt()));
    Ok(reps)
}
