//! Generators `α = A + B√m` of the cyclic quartic field of conductor `m`.
//!
//! For odd `m` the triple satisfies `A² = m(B² + C²)`, `A` odd, `B` even and
//! `A + B ≡ 1 mod 4`. For `m = 8m'` only the norm equation is imposed: every
//! prime at which the symbol is evaluated is `≡ 1 mod 8`, so twists by `-1`
//! and `2` are invisible.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{jacobi_u64, sqrt_mod_prime, OddPrime, Sign};
use crate::error::{Error, Result};
use crate::modulus::FourOneModulus;
use crate::two_squares::{compose, two_squares_composite, TwoSquaresRep};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaTriple {
    pub m: FourOneModulus,
    /// Rational part `A`.
    pub a: BigInt,
    /// Coefficient `B` of `√m`.
    pub b: BigInt,
    /// `C > 0` with `A² = m(B² + C²)`.
    pub c: BigInt,
}

impl AlphaTriple {
    /// Validates every invariant of the triple.
    pub fn new(m: FourOneModulus, a: BigInt, b: BigInt, c: BigInt) -> Result<AlphaTriple> {
        let lhs = &a * &a;
        let rhs = BigInt::from(m.value()) * (&b * &b + &c * &c);
        let fail = |what: &str| Err(Error::Invariant(format!("triple ({a}, {b}, {c}) for m = {m}: {what}")));
        if lhs != rhs {
            return fail("A^2 != m(B^2 + C^2)");
        }
        if !c.is_positive() {
            return fail("C must be positive");
        }
        if !m.is_even() {
            if a.is_even() || b.is_odd() {
                return fail("A must be odd and B even");
            }
            if (&a + &b).mod_floor(&BigInt::from(4)) != BigInt::one() {
                return fail("A + B must be 1 mod 4");
            }
        }
        Ok(AlphaTriple { m, a, b, c })
    }

    /// Flips `(A, B)` when needed so that `A + B ≡ 1 mod 4`.
    pub(crate) fn normalized(m: FourOneModulus, a: BigInt, b: BigInt, c: BigInt) -> Result<AlphaTriple> {
        let (a, b) = if !m.is_even() && (&a + &b).mod_floor(&BigInt::from(4)) != BigInt::one() {
            (-a, -b)
        } else {
            (a, b)
        };
        AlphaTriple::new(m, a, b, c)
    }
}

impl fmt::Display for AlphaTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.a, self.b, self.c)
    }
}

/// Representation of `2m'` as a sum of two odd squares.
fn doubled_rep(odd: &FourOneModulus) -> Result<(u64, u64)> {
    if odd.value() == 1 {
        return Ok((1, 1));
    }
    let TwoSquaresRep { a, b, .. } = two_squares_composite(odd)?;
    let (x, y) = compose(1, 1, a.into(), b.into());
    Ok((x.unsigned_abs() as u64, y.unsigned_abs() as u64))
}

/// Builds the triple `(±m, ±b, a)` from the canonical `m = a² + b²`; for
/// `m = 8m'` it is `(4m', y, x)` with `2m' = x² + y²`.
pub fn alpha_triple(m: &FourOneModulus) -> Result<AlphaTriple> {
    if m.value() == 1 {
        return Err(Error::InvalidModulus {
            m: 1,
            reason: "modulus must exceed 1",
        });
    }
    if m.is_even() {
        let odd = FourOneModulus::new(m.odd_part())?;
        let (x, y) = doubled_rep(&odd)?;
        return AlphaTriple::new(m.clone(), BigInt::from(m.value() / 2), BigInt::from(y), BigInt::from(x));
    }
    let rep = two_squares_composite(m)?;
    AlphaTriple::normalized(
        m.clone(),
        BigInt::from(m.value()),
        BigInt::from(rep.b),
        BigInt::from(rep.a),
    )
}

pub(crate) fn big_mod(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64")
}

/// Checks `p ≡ 1 mod 4`, `p ∤ m`, `(m/p) = +1` and returns `√m mod p`.
pub(crate) fn sqrt_of_modulus(m: &FourOneModulus, p: OddPrime) -> Result<u64> {
    let p = p.require_one_mod(4)?;
    let residue = m.value() % p.get();
    match jacobi_u64(residue, p.get()) {
        1 => sqrt_mod_prime(residue.into(), p),
        0 => Err(Error::Divisible {
            a: m.value().into(),
            p: p.get(),
        }),
        _ => Err(Error::NotQuadraticResidue {
            a: m.value().into(),
            p: p.get(),
        }),
    }
}

/// Quadratic residue symbol `((A + B√m)/p)` for a prime `p` split in `Q(√m)`.
pub fn eval_alpha_symbol(t: &AlphaTriple, p: OddPrime) -> Result<Sign> {
    let s = sqrt_of_modulus(&t.m, p)?;
    let n = p.get();
    let g = t.a.gcd(&t.b);
    let g_res = big_mod(&g, n);
    let g_sign = Sign::from_jacobi(jacobi_u64(g_res, n)).ok_or(Error::Divisible {
        a: g.to_i128().unwrap_or(i128::MAX),
        p: n,
    })?;
    let (a, b) = if g.is_zero() {
        (BigInt::zero(), BigInt::zero())
    } else {
        (&t.a / &g, &t.b / &g)
    };
    let (a, b) = (big_mod(&a, n), big_mod(&b, n));
    for root in [s, n - s] {
        let v = ((u128::from(a) + u128::from(b) * u128::from(root)) % u128::from(n)) as u64;
        if v != 0 {
            let value = Sign::from_jacobi(jacobi_u64(v, n)).expect("nonzero residue mod a prime");
            return Ok(g_sign * value);
        }
    }
    Err(Error::Invariant(format!(
        "alpha = {} + {}·sqrt({}) vanishes at both primes above {n}",
        t.a, t.b, t.m
    )))
}

/// Both root choices, for the root-independence check.
pub fn eval_alpha_both_roots(t: &AlphaTriple, p: OddPrime) -> Result<(i8, i8)> {
    let s = sqrt_of_modulus(&t.m, p)?;
    let n = p.get();
    let at = |r: u64| {
        let v = (BigInt::from(r) * &t.b + &t.a).mod_floor(&BigInt::from(n));
        jacobi_u64(v.to_u64().expect("residue fits"), n)
    };
    Ok((at(s), at(n - s)))
}
