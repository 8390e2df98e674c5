//! Units of norm −1 in `Z[√m]` and their quadratic residue symbols.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_traits::One;

use crate::alpha::{sqrt_of_modulus, AlphaTriple};
use crate::arith::{jacobi_u64, OddPrime, Sign};
use crate::error::{Error, Result};
use crate::modulus::FourOneModulus;

/// `ε = t + u√m` with `t² − m·u² = −1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellUnit {
    pub m: FourOneModulus,
    pub t: BigUint,
    pub u: BigUint,
}

impl PellUnit {
    /// Checks the norm equation.
    pub fn new(m: FourOneModulus, t: BigUint, u: BigUint) -> Result<PellUnit> {
        let lhs = &t * &t + BigUint::one();
        let rhs = BigUint::from(m.value()) * &u * &u;
        if lhs != rhs {
            return Err(Error::Invariant(format!("{t}^2 - {m}·{u}^2 != -1")));
        }
        Ok(PellUnit { m, t, u })
    }

    /// `ε³`, again a unit of norm −1.
    pub fn cube(&self) -> PellUnit {
        let m = BigUint::from(self.m.value());
        let (t, u) = (&self.t, &self.u);
        let t2 = t * t;
        let mu2 = &m * u * u;
        let t3 = t * (&t2 + BigUint::from(3u32) * &mu2);
        let u3 = u * (BigUint::from(3u32) * &t2 + &mu2);
        PellUnit::new(self.m.clone(), t3, u3).expect("cube of a norm -1 unit")
    }
}

impl fmt::Display for PellUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.t, self.u)
    }
}

/// Minimal solution of `t² − m·u² = −1` from the continued fraction of √m.
pub fn fundamental_negative_unit(m: &FourOneModulus) -> Result<PellUnit> {
    let n = m.value();
    if m.is_even() || n == 1 {
        return Err(Error::InvalidModulus {
            m: n,
            reason: "modulus must be odd and exceed 1",
        });
    }
    let root = n.sqrt();
    let (mut p, mut q, mut a) = (0u64, 1u64, root);
    let (mut h_prev, mut h) = (BigUint::one(), BigUint::from(root));
    let (mut k_prev, mut k) = (BigUint::ZERO, BigUint::one());
    let mut period = 0u64;
    loop {
        p = a * q - p;
        q = (n - p * p) / q;
        a = (root + p) / q;
        period += 1;
        if q == 1 {
            break;
        }
        let h_next = BigUint::from(a) * &h + &h_prev;
        let k_next = BigUint::from(a) * &k + &k_prev;
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
    }
    if period.is_multiple_of(2) {
        return Err(Error::NoNegativeNormUnit(n));
    }
    PellUnit::new(m.clone(), h, k)
}

/// `ε√m = m·u + t√m` as an α-triple with `C = 1`.
pub fn unit_times_sqrt_as_alpha(e: &PellUnit) -> Result<AlphaTriple> {
    let a = BigInt::from(e.m.value()) * BigInt::from(e.u.clone());
    let b = BigInt::from(e.t.clone());
    AlphaTriple::normalized(e.m.clone(), a, b, BigInt::one())
}

/// `(ε/p)` for a prime `p ≡ 1 mod 4` with `(m/p) = +1`.
pub fn eval_unit_symbol(e: &PellUnit, p: OddPrime) -> Result<Sign> {
    let s = sqrt_of_modulus(&e.m, p)?;
    let n = p.get();
    let t = (&e.t % n).iter_u64_digits().next().unwrap_or(0);
    let u = (&e.u % n).iter_u64_digits().next().unwrap_or(0);
    let v = ((u128::from(t) + u128::from(u) * u128::from(s)) % u128::from(n)) as u64;
    Sign::from_jacobi(jacobi_u64(v, n))
        .ok_or_else(|| Error::Invariant(format!("unit {} + {}·sqrt({}) vanishes mod {n}", e.t, e.u, e.m)))
}

/// Multiplicative extension of [`eval_unit_symbol`] to odd moduli `n`.
pub fn eval_unit_symbol_composite(e: &PellUnit, n: &FourOneModulus) -> Result<Sign> {
    if n.is_even() {
        return Err(Error::InvalidModulus {
            m: n.value(),
            reason: "modulus must be odd",
        });
    }
    if num_integer::gcd(e.m.value(), n.value()) != 1 {
        return Err(Error::InvalidModulus {
            m: n.value(),
            reason: "modulus shares a factor with the unit's radicand",
        });
    }
    n.odd_primes().iter().map(|&q| eval_unit_symbol(e, q)).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alpha::eval_alpha_symbol;
    use crate::arith::is_prime_u64;
    use crate::modulus::odd_moduli_up_to;
    use num_traits::ToPrimitive;

    fn m(n: u64) -> FourOneModulus {
        FourOneModulus::new(n).unwrap()
    }

    fn p(n: u64) -> OddPrime {
        OddPrime::new(n).unwrap()
    }

    fn unit(n: u64) -> PellUnit {
        fundamental_negative_unit(&m(n)).unwrap()
    }

    fn tu(e: &PellUnit) -> (u64, u64) {
        (e.t.to_u64().unwrap(), e.u.to_u64().unwrap())
    }

    #[test]
    fn unit_examples() {
        assert_eq!(tu(&unit(5)), (2, 1));
        assert_eq!(tu(&unit(13)), (18, 5));
        assert_eq!(tu(&unit(65)), (8, 1));
        assert_eq!(tu(&unit(29)), (70, 13));
        assert_eq!(tu(&unit(61)), (29718, 3805));
        assert_eq!(fundamental_negative_unit(&m(205)), Err(Error::NoNegativeNormUnit(205)));
        assert!(fundamental_negative_unit(&m(40)).is_err());
    }

    #[test]
    fn as_alpha_examples() {
        let t = unit_times_sqrt_as_alpha(&unit(5)).unwrap();
        assert_eq!((t.a.to_i64().unwrap(), t.b.to_i64().unwrap()), (-5, -2));
        let t = unit_times_sqrt_as_alpha(&unit(65)).unwrap();
        assert_eq!((t.a.to_i64().unwrap(), t.b.to_i64().unwrap()), (65, 8));
        let t = unit_times_sqrt_as_alpha(&unit(13)).unwrap();
        assert_eq!((t.a.to_i64().unwrap(), t.b.to_i64().unwrap()), (-65, -18));
    }

    #[test]
    fn unit_symbol_examples() {
        assert_eq!(eval_unit_symbol(&unit(5), p(29)).unwrap(), Sign::Plus);
        assert_eq!(eval_unit_symbol(&unit(5), p(61)).unwrap(), Sign::Minus);
        assert_eq!(eval_unit_symbol(&unit(13), p(61)).unwrap(), Sign::Plus);
        assert_eq!(eval_unit_symbol_composite(&unit(5), &m(29)).unwrap(), Sign::Plus);
        assert_eq!(eval_unit_symbol_composite(&unit(5), &m(1)).unwrap(), Sign::Plus);
        assert_eq!(eval_unit_symbol_composite(&unit(5), &m(1769)).unwrap(), Sign::Minus);
        assert!(eval_unit_symbol(&unit(5), p(13)).is_err());
        assert!(eval_unit_symbol_composite(&unit(5), &m(65)).is_err());
    }

    #[test]
    fn unit_symbol_is_root_independent() {
        for md in odd_moduli_up_to(500) {
            let Ok(e) = fundamental_negative_unit(&md) else {
                continue;
            };
            for q in (5..10_000u64).filter(|&q| q % 4 == 1 && is_prime_u64(q)) {
                let Ok(s) = sqrt_of_modulus(&md, p(q)) else { continue };
                let t = (&e.t % q).to_u64().unwrap();
                let u = (&e.u % q).to_u64().unwrap();
                let at = |r: u64| jacobi_u64((t + u * r % q) % q, q);
                assert_eq!(at(s), at(q - s), "m = {md}, p = {q}");
            }
        }
    }

    #[test]
    fn unit_symbol_is_unchanged_by_cubing() {
        for md in odd_moduli_up_to(200) {
            let Ok(e) = fundamental_negative_unit(&md) else {
                continue;
            };
            let e3 = e.cube();
            for q in (5..3000u64).filter(|&q| q % 4 == 1 && is_prime_u64(q)) {
                let Ok(s) = eval_unit_symbol(&e, p(q)) else { continue };
                assert_eq!(eval_unit_symbol(&e3, p(q)).unwrap(), s);
            }
        }
    }

    #[test]
    fn unit_alpha_gives_the_same_left_side_as_alpha_triple() {
        // ε√m and the two-squares α generate the same field up to rational
        // squares and primes dividing m, both invisible at admissible p.
        for md in odd_moduli_up_to(300) {
            let Ok(e) = fundamental_negative_unit(&md) else {
                continue;
            };
            let via_unit = unit_times_sqrt_as_alpha(&e).unwrap();
            let direct = crate::alpha::alpha_triple(&md).unwrap();
            for q in (5..3000u64).filter(|&q| q % 4 == 1 && is_prime_u64(q)) {
                let admissible = md.odd_primes().iter().all(|r| jacobi_u64(q % r.get(), r.get()) == 1);
                if !admissible || md.value() % q == 0 {
                    continue;
                }
                assert_eq!(
                    eval_alpha_symbol(&via_unit, p(q)).unwrap(),
                    eval_alpha_symbol(&direct, p(q)).unwrap(),
                    "m = {md}, p = {q}"
                );
            }
        }
    }
}
